#include "ellgof/alternatives.hpp"

#include <cmath>

#include "ellgof/errors.hpp"
#include "ellgof/rng.hpp"

namespace ellgof {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

void khintchine(std::mt19937_64& gen, Eigen::MatrixXd& X) {
    const double power = 0.398935;
    const double scale =
        std::sqrt(3.0 * std::tgamma(1.5) / std::tgamma(1.5 + 2.0 * 0.3998935));
    for (int r = 0; r < X.rows(); ++r) {
        double z = gamma_rv(gen, 1.5, 1.0);
        double f = scale * std::pow(z, power);
        double v1 = uniform01(gen);
        double v2 = uniform01(gen);
        X(r, 0) = f * 2.0 * (v1 - 0.5);
        X(r, 1) = f * 2.0 * (v2 - 0.5);
    }
}

void contaminated_mvn(std::mt19937_64& gen, Eigen::MatrixXd& X) {
    for (int r = 0; r < X.rows(); ++r) {
        double u = uniform01(gen);
        double g1 = standard_normal(gen);
        double g2 = standard_normal(gen);
        if (u < 0.8) {
            X(r, 0) = g1;
            X(r, 1) = g2;
        } else {
            X(r, 0) = 1.0 + g1;
            X(r, 1) = 1.0 + std::sqrt(2.0) * g2;
        }
    }
}

void laplace_type(std::mt19937_64& gen, Eigen::MatrixXd& X) {
    for (int r = 0; r < X.rows(); ++r) {
        double w0 = exponential_rv(gen);
        double w1 = exponential_rv(gen);
        double w2 = exponential_rv(gen);
        X(r, 0) = w1 - w0;
        X(r, 1) = w2 - w0;
    }
}

void power_exp_2(std::mt19937_64& gen, Eigen::MatrixXd& X) {
    for (int r = 0; r < X.rows(); ++r) {
        double radius = gamma_rv(gen, 2.0, 2.0);
        double theta = kTwoPi * uniform01(gen);
        X(r, 0) = radius * std::cos(theta);
        X(r, 1) = radius * std::sin(theta);
    }
}

}  // namespace

std::vector<std::string> alternative_names() {
    return {"khintchine", "contaminated_mvn", "laplace_type", "power_exp_2"};
}

Eigen::MatrixXd sample_alternative(const std::string& name, int n, std::uint64_t seed,
                                   std::uint64_t replicate) {
    if (n < 1) throw usage_error("sample_alternative: sample size must be positive");
    std::mt19937_64 gen = substream(mix_seed(seed, fnv1a(name)), replicate);
    Eigen::MatrixXd X(n, 2);
    if (name == "khintchine") {
        khintchine(gen, X);
    } else if (name == "contaminated_mvn") {
        contaminated_mvn(gen, X);
    } else if (name == "laplace_type") {
        laplace_type(gen, X);
    } else if (name == "power_exp_2") {
        power_exp_2(gen, X);
    } else if (name == "mvn") {
        for (int r = 0; r < n; ++r) {
            X(r, 0) = standard_normal(gen);
            X(r, 1) = standard_normal(gen);
        }
    } else {
        throw usage_error("unknown alternative '" + name + "'");
    }
    return X;
}

}  // namespace ellgof
