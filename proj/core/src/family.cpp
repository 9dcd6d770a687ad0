#include "ellgof/family.hpp"

// fpclassify must precede pchip so its isnan overload is visible there.
#include <boost/math/special_functions/fpclassify.hpp>

#include <boost/math/interpolators/pchip.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>

#include "ellgof/errors.hpp"
#include "ellgof/rng.hpp"

namespace ellgof {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

double rising(double a, int s) {
    double v = 1.0;
    for (int q = 0; q < s; ++q) v *= a + q;
    return v;
}

}  // namespace

FamilyId family_from_name(const std::string& name) {
    if (name == "mvn") return FamilyId::mvn;
    if (name == "laplace") return FamilyId::laplace;
    if (name == "logistic") return FamilyId::logistic;
    if (name == "pearson2") return FamilyId::pearson2;
    throw usage_error("unknown family '" + name + "' (expected mvn, laplace, logistic, pearson2)");
}

std::string family_name(FamilyId id) {
    switch (id) {
        case FamilyId::mvn: return "mvn";
        case FamilyId::laplace: return "laplace";
        case FamilyId::logistic: return "logistic";
        case FamilyId::pearson2: return "pearson2";
    }
    throw usage_error("invalid family id");
}

NullFamily::NullFamily(FamilyId id, int m, double shape) : id_(id), m_(m), shape_(shape) {
    if (m < 2) throw usage_error("family dimension must be at least 2");
}

int NullFamily::k_min() const { return id_ == FamilyId::mvn ? 3 : 1; }

double NullFamily::sigma2() const {
    return static_cast<double>(m_) * (m_ + 2) / zeta_square_moment();
}

Eigen::VectorXd NullFamily::sample_standard(std::mt19937_64& gen) const {
    double y = sample_squared_radius(gen);
    Eigen::VectorXd u = uniform_sphere(gen, m_);
    return std::sqrt(y) * u;
}

Eigen::MatrixXd NullFamily::sample_standard(std::mt19937_64& gen, int n) const {
    Eigen::MatrixXd X(n, m_);
    for (int r = 0; r < n; ++r) X.row(r) = sample_standard(gen).transpose();
    return X;
}

namespace {

class MvnFamily final : public NullFamily {
  public:
    explicit MvnFamily(int m) : NullFamily(FamilyId::mvn, m, std::numeric_limits<double>::quiet_NaN()) {}

    double g(double) const override { return 1.0; }
    double radial_moment(int t) const override { return prod_even(t); }
    double zeta_moment(int t) const override { return radial_moment(t + 1); }
    double zeta_square_moment() const override { return static_cast<double>(m_) * (m_ + 2); }
    double sigma1() const override { return static_cast<double>(m_); }
    double density_constant() const override { return std::pow(2.0 * kPi, -0.5 * m_); }
    double sample_squared_radius(std::mt19937_64& gen) const override {
        return chi_square_rv(gen, static_cast<double>(m_));
    }

  private:
    // E[y^t] for chi-square with m degrees of freedom: prod_{q<t} (m + 2q).
    double prod_even(int t) const {
        double v = 1.0;
        for (int q = 0; q < t; ++q) v *= m_ + 2.0 * q;
        return v;
    }
};

class LaplaceFamily final : public NullFamily {
  public:
    explicit LaplaceFamily(int m)
        : NullFamily(FamilyId::laplace, m, std::numeric_limits<double>::quiet_NaN()) {}

    double g(double y) const override {
        if (y <= 0.0) throw numeric_error("laplace score weight undefined at zero radius");
        return 1.0 / std::sqrt(y);
    }
    // R = sqrt(y) is Gamma(m, 1), so E[R^s] = (m)_s rising.
    double radial_moment(int t) const override { return rising(m_, 2 * t); }
    double zeta_moment(int t) const override { return rising(m_, 2 * t + 1); }
    double zeta_square_moment() const override { return rising(m_, 2); }
    double sigma1() const override { return 1.0; }
    double density_constant() const override {
        return std::exp(std::lgamma(0.5 * m_) - std::lgamma(static_cast<double>(m_))) /
               (2.0 * std::pow(kPi, 0.5 * m_));
    }
    double sample_squared_radius(std::mt19937_64& gen) const override {
        double r = gamma_rv(gen, static_cast<double>(m_), 1.0);
        return r * r;
    }
};

class LogisticFamily final : public NullFamily {
  public:
    explicit LogisticFamily(int m)
        : NullFamily(FamilyId::logistic, m, std::numeric_limits<double>::quiet_NaN()) {
        norm_ = integral([](double) { return 1.0; }, 0);
        build_sampler();
    }

    // phi(y) = e^{-y} / (1 + e^{-y})^2 = 1 / (4 cosh^2(y/2)).
    double g(double y) const override { return 2.0 * std::tanh(0.5 * y); }

    double radial_moment(int t) const override {
        return cached(cache_mu_, t, [&] { return integral([](double) { return 1.0; }, t) / norm_; });
    }
    double zeta_moment(int t) const override {
        return cached(cache_zeta_, t, [&] {
            return integral([](double y) { return 2.0 * y * std::tanh(0.5 * y); }, t) / norm_;
        });
    }
    double zeta_square_moment() const override {
        return cached(cache_misc_, 0, [&] {
            return integral(
                       [](double y) {
                           double th = std::tanh(0.5 * y);
                           return 4.0 * y * y * th * th;
                       },
                       0) /
                   norm_;
        });
    }
    double sigma1() const override {
        return cached(cache_misc_, 1, [&] {
            return integral(
                       [](double y) {
                           double th = std::tanh(0.5 * y);
                           return 4.0 * y * th * th;
                       },
                       0) /
                   norm_;
        });
    }
    double density_constant() const override {
        return std::exp(std::lgamma(0.5 * m_)) / (std::pow(kPi, 0.5 * m_) * norm_);
    }

    double sample_squared_radius(std::mt19937_64& gen) const override {
        double u = uniform01(gen);
        u = std::min(std::max(u, cdf_.front()), cdf_.back());
        // Bracket on the stored knots, then polish with Newton on the
        // monotone spline, falling back to bisection when a step escapes.
        auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
        std::size_t hi = std::min<std::size_t>(cdf_.size() - 1, it - cdf_.begin());
        std::size_t lo = hi == 0 ? 0 : hi - 1;
        double a = grid_[lo];
        double b = grid_[hi];
        double y = 0.5 * (a + b);
        for (int iter = 0; iter < 100; ++iter) {
            double f = (*spline_)(y)-u;
            if (f > 0.0) {
                b = y;
            } else {
                a = y;
            }
            double d = spline_->prime(y);
            double ynew = d > 0.0 ? y - f / d : 0.5 * (a + b);
            if (!(ynew > a && ynew < b)) ynew = 0.5 * (a + b);
            if (std::abs(ynew - y) < 1e-8 * (1.0 + y)) return ynew;
            y = ynew;
        }
        return y;
    }

  private:
    template <class Extra>
    double integral(Extra extra, int t) const {
        double p = 0.5 * m_ - 1.0 + t;
        auto f = [&](double y) {
            double ch = std::cosh(0.5 * y);
            return std::pow(y, p) * extra(y) / (4.0 * ch * ch);
        };
        return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
            f, 0.0, std::numeric_limits<double>::infinity(), 10, 1e-10);
    }

    template <class F>
    double cached(std::map<int, double>& cache, int t, F compute) const {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache.find(t);
        if (it != cache.end()) return it->second;
        double v = compute();
        cache.emplace(t, v);
        return v;
    }

    double cdf_unnormalized(double y) const {
        double p = 0.5 * m_ - 1.0;
        auto f = [&](double t) {
            double ch = std::cosh(0.5 * t);
            return std::pow(t, p) / (4.0 * ch * ch);
        };
        if (y <= 0.0) return 0.0;
        return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, y, 10, 1e-12);
    }

    void build_sampler() {
        auto cdf = [&](double y) { return cdf_unnormalized(y) / norm_; };
        double hi = 1.0;
        while (cdf(hi) < 1.0 - 1e-12) hi *= 2.0;
        double lo_a = 0.0;
        double lo_b = hi;
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (lo_a + lo_b);
            (cdf(mid) < 1e-12 ? lo_a : lo_b) = mid;
        }
        double lo = lo_b;

        const int knots = 4096;
        grid_.resize(knots);
        cdf_.resize(knots);
        for (int i = 0; i < knots; ++i) {
            grid_[i] = lo + (hi - lo) * i / (knots - 1.0);
        }
        double acc = cdf(lo);
        cdf_[0] = acc;
        for (int i = 1; i < knots; ++i) {
            double p = 0.5 * m_ - 1.0;
            auto f = [&](double t) {
                double ch = std::cosh(0.5 * t);
                return std::pow(t, p) / (4.0 * ch * ch);
            };
            acc += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
                       f, grid_[i - 1], grid_[i], 8, 1e-13) /
                   norm_;
            cdf_[i] = std::min(acc, 1.0);
        }
        for (int i = 1; i < knots; ++i) cdf_[i] = std::max(cdf_[i], cdf_[i - 1]);
        std::vector<double> gx = grid_;
        std::vector<double> gy = cdf_;
        spline_ = std::make_unique<boost::math::interpolators::pchip<std::vector<double>>>(
            std::move(gx), std::move(gy));
    }

    double norm_ = 0.0;  // integral of y^{m/2-1} phi(y)
    std::vector<double> grid_;
    std::vector<double> cdf_;
    std::unique_ptr<boost::math::interpolators::pchip<std::vector<double>>> spline_;
    mutable std::mutex mutex_;
    mutable std::map<int, double> cache_mu_;
    mutable std::map<int, double> cache_zeta_;
    mutable std::map<int, double> cache_misc_;
};

class Pearson2Family final : public NullFamily {
  public:
    Pearson2Family(int m, double alpha) : NullFamily(FamilyId::pearson2, m, alpha) {
        if (!(alpha > 0.0)) throw usage_error("pearson2 exponent must be positive");
    }

    double g(double y) const override {
        if (y >= 1.0) throw numeric_error("pearson2 score weight outside the unit support");
        return 2.0 * shape_ / (1.0 - y);
    }
    double radial_moment(int t) const override { return beta_moment(t, 0); }
    double zeta_moment(int t) const override { return 2.0 * shape_ * beta_moment(t + 1, 1); }
    double zeta_square_moment() const override {
        require_shape_above(1.0, "E[zeta^2]");
        return 4.0 * shape_ * shape_ * beta_moment(2, 2);
    }
    double sigma1() const override {
        require_shape_above(1.0, "sigma1");
        return 4.0 * shape_ * shape_ * beta_moment(1, 2);
    }
    double density_constant() const override {
        double logb = std::lgamma(0.5 * m_) + std::lgamma(shape_ + 1.0) -
                      std::lgamma(0.5 * m_ + shape_ + 1.0);
        return std::exp(std::lgamma(0.5 * m_) - logb) / std::pow(kPi, 0.5 * m_);
    }
    double sample_squared_radius(std::mt19937_64& gen) const override {
        return beta_rv(gen, 0.5 * m_, shape_ + 1.0);
    }

  private:
    // E[y^t (1-y)^{-s}] for y ~ Beta(m/2, alpha+1): B(m/2+t, alpha+1-s) / B,
    // finite exactly when alpha + 1 - s > 0.
    double beta_moment(int t, int s) const {
        require_shape_above(static_cast<double>(s) - 1.0, "a beta moment");
        double a = 0.5 * m_;
        double b = shape_ + 1.0;
        return std::exp(std::lgamma(a + t) + std::lgamma(b - s) + std::lgamma(a + b) -
                        std::lgamma(a) - std::lgamma(b) - std::lgamma(a + t + b - s));
    }
    void require_shape_above(double bound, const char* what) const {
        if (!(shape_ > bound)) {
            throw numeric_error(std::string("pearson2 exponent too small for ") + what);
        }
    }
};

}  // namespace

std::unique_ptr<NullFamily> make_family(FamilyId id, int m, double shape) {
    switch (id) {
        case FamilyId::mvn: return std::make_unique<MvnFamily>(m);
        case FamilyId::laplace: return std::make_unique<LaplaceFamily>(m);
        case FamilyId::logistic: return std::make_unique<LogisticFamily>(m);
        case FamilyId::pearson2:
            if (std::isnan(shape)) throw usage_error("pearson2 requires a shape parameter");
            return std::make_unique<Pearson2Family>(m, shape);
    }
    throw usage_error("invalid family id");
}

std::unique_ptr<NullFamily> make_family(const std::string& name, int m, double shape) {
    return make_family(family_from_name(name), m, shape);
}

}  // namespace ellgof
