#include "ellgof/radial.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "ellgof/errors.hpp"

namespace ellgof {

double RadialPolynomial::operator()(double y) const {
    double acc = 0.0;
    for (std::size_t t = coef.size(); t-- > 0;) acc = acc * y + coef[t];
    return acc;
}

RadialPolynomial radial_polynomial(const std::vector<double>& moments, int j, int i) {
    if (j < 0 || i < 0) throw usage_error("radial_polynomial: negative index");
    if (static_cast<int>(moments.size()) < 2 * j + i + 1) {
        throw usage_error("radial_polynomial: not enough moments");
    }

    // Monic orthogonal polynomial: its coefficients x solve the Hankel system
    // with entries E[y^{a+b+i}], right-hand side E[y^{a+j+i}].
    Eigen::VectorXd x(j);
    double norm2 = moments[2 * j + i];
    if (j > 0) {
        Eigen::MatrixXd M(j, j);
        Eigen::VectorXd rhs(j);
        for (int a = 0; a < j; ++a) {
            rhs[a] = moments[a + j + i];
            for (int b = 0; b < j; ++b) M(a, b) = moments[a + b + i];
        }
        Eigen::LLT<Eigen::MatrixXd> llt(M);
        if (llt.info() != Eigen::Success) {
            throw numeric_error("radial_polynomial: moment matrix not positive definite");
        }
        x = llt.solve(rhs);
        norm2 -= rhs.dot(x);
    }
    if (!(norm2 > 0.0)) {
        throw numeric_error("radial_polynomial: nonpositive residual norm");
    }

    RadialPolynomial p;
    p.j = j;
    p.i = i;
    p.coef.resize(j + 1);
    double scale = 1.0 / std::sqrt(norm2);
    for (int t = 0; t < j; ++t) p.coef[t] = -x[t] * scale;
    p.coef[j] = scale;
    return p;
}

RadialPolynomial gaussian_radial_polynomial(int m, int j, int i) {
    if (m < 1 || j < 0 || i < 0) throw usage_error("gaussian_radial_polynomial: bad index");
    double a = 0.5 * m + i - 1.0;
    // Prefactor (-1)^j sqrt(j! Gamma(m/2) / (2^i Gamma(m/2 + j + i))).
    double logpre = 0.5 * (std::lgamma(j + 1.0) + std::lgamma(0.5 * m) - i * std::log(2.0) -
                           std::lgamma(0.5 * m + j + i));
    double pre = (j % 2 == 0 ? 1.0 : -1.0) * std::exp(logpre);

    RadialPolynomial p;
    p.j = j;
    p.i = i;
    p.coef.resize(j + 1);
    for (int t = 0; t <= j; ++t) {
        // Laguerre L_j^{(a)} coefficient of x^t, evaluated at x = y/2.
        double binom = std::exp(std::lgamma(j + a + 1.0) - std::lgamma(j - t + 1.0) -
                                std::lgamma(a + t + 1.0));
        double c = binom / std::tgamma(t + 1.0) * std::ldexp(1.0, -t);
        p.coef[t] = pre * (t % 2 == 0 ? c : -c);
    }
    return p;
}

}  // namespace ellgof
