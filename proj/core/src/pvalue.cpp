#include "ellgof/pvalue.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include "ellgof/errors.hpp"

namespace ellgof {

double chi_square_sf(double x, double nu) {
    if (!(nu > 0.0)) throw usage_error("chi_square_sf: degrees of freedom must be positive");
    if (x <= 0.0) return 1.0;
    boost::math::chi_squared dist(nu);
    return boost::math::cdf(boost::math::complement(dist, x));
}

double chi_square_upper_quantile(double p, double nu) {
    if (!(nu > 0.0)) throw usage_error("chi_square_upper_quantile: degrees of freedom must be positive");
    if (!(p > 0.0 && p < 1.0)) throw usage_error("chi_square_upper_quantile: p must be in (0, 1)");
    boost::math::chi_squared dist(nu);
    return boost::math::quantile(boost::math::complement(dist, p));
}

}  // namespace ellgof
