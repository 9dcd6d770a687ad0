#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <random>

namespace ellgof {

// Counter-based substreams: the stream for (seed, replicate, attempt) is a
// pure function of its key, so work scheduled across any number of workers
// draws identical variates. Samplers below are implemented explicitly (no
// std::*_distribution) so results are identical across standard libraries.

std::uint64_t splitmix64_next(std::uint64_t& state);

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t replicate, std::uint64_t attempt = 0);

// Mix labels into a seed to derive independent stream families.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                       std::uint64_t c = 0);

double uniform01(std::mt19937_64& gen);                    // (0, 1)
double standard_normal(std::mt19937_64& gen);              // Box-Muller
double exponential_rv(std::mt19937_64& gen);               // mean 1
double gamma_rv(std::mt19937_64& gen, double shape, double scale);
double beta_rv(std::mt19937_64& gen, double a, double b);
double chi_square_rv(std::mt19937_64& gen, double dof);

// Uniform direction on the unit sphere in R^m.
Eigen::VectorXd uniform_sphere(std::mt19937_64& gen, int m);

}  // namespace ellgof
