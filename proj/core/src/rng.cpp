#include "ellgof/rng.hpp"

#include <cmath>

#include "ellgof/errors.hpp"

namespace ellgof {

std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t replicate, std::uint64_t attempt) {
  std::uint64_t state = seed;
  std::uint64_t a = splitmix64_next(state);
  state ^= replicate * 0x9e3779b97f4a7c15ULL;
  std::uint64_t b = splitmix64_next(state);
  state ^= attempt * 0xd1b54a32d192ed03ULL;
  std::uint64_t c = splitmix64_next(state);
  std::seed_seq seq{static_cast<unsigned>(a), static_cast<unsigned>(a >> 32),
                    static_cast<unsigned>(b), static_cast<unsigned>(b >> 32),
                    static_cast<unsigned>(c), static_cast<unsigned>(c >> 32)};
  return std::mt19937_64(seq);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t state = seed;
  state ^= a * 0x9e3779b97f4a7c15ULL;
  (void)splitmix64_next(state);
  state ^= b * 0xd1b54a32d192ed03ULL;
  (void)splitmix64_next(state);
  state ^= c * 0x2545f4914f6cdd1dULL;
  return splitmix64_next(state);
}

double uniform01(std::mt19937_64& gen) {
  // 53-bit mantissa; strictly inside (0, 1) after the +0.5 offset on the grid.
  while (true) {
    double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    if (u > 0.0 && u < 1.0) return u;
  }
}

double standard_normal(std::mt19937_64& gen) {
  double u1 = uniform01(gen);
  double u2 = uniform01(gen);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

double exponential_rv(std::mt19937_64& gen) { return -std::log(uniform01(gen)); }

namespace {

// Marsaglia-Tsang squeeze for shape >= 1; unit scale.
double gamma_shape_ge1(std::mt19937_64& gen, double shape) {
  double d = shape - 1.0 / 3.0;
  double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    double x;
    double v;
    do {
      x = standard_normal(gen);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    double u = uniform01(gen);
    double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace

double gamma_rv(std::mt19937_64& gen, double shape, double scale) {
  if (shape <= 0.0 || scale <= 0.0) throw usage_error("gamma_rv: shape and scale must be positive");
  if (shape >= 1.0) return scale * gamma_shape_ge1(gen, shape);
  // Boost the shape by one, then apply the power correction U^{1/shape}.
  double g = gamma_shape_ge1(gen, shape + 1.0);
  double u = uniform01(gen);
  return scale * g * std::pow(u, 1.0 / shape);
}

double beta_rv(std::mt19937_64& gen, double a, double b) {
  double x = gamma_rv(gen, a, 1.0);
  double y = gamma_rv(gen, b, 1.0);
  return x / (x + y);
}

double chi_square_rv(std::mt19937_64& gen, double dof) { return gamma_rv(gen, 0.5 * dof, 2.0); }

Eigen::VectorXd uniform_sphere(std::mt19937_64& gen, int m) {
  if (m < 1) throw usage_error("uniform_sphere: dimension must be positive");
  Eigen::VectorXd u(m);
  while (true) {
    for (int i = 0; i < m; ++i) u[i] = standard_normal(gen);
    double nrm = u.norm();
    if (nrm > 1e-100) return u / nrm;
  }
}

}  // namespace ellgof
