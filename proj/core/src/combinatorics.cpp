#include "ellgof/combinatorics.hpp"

#include "ellgof/errors.hpp"

namespace ellgof {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (int t = 1; t <= k; ++t) {
        r = r * (n - k + t) / t;  // exact: r*(n-k+t) is divisible by t here
    }
    return r;
}

int harmonic_dimension(int m, int k) {
    if (m < 2 || k < 0) throw usage_error("harmonic_dimension: need m >= 2 and k >= 0");
    if (k == 0) return 1;
    if (k == 1) return m;
    return static_cast<int>(binomial(m + k - 1, m - 1) - binomial(m + k - 3, m - 1));
}

std::int64_t degree_space_dimension(int m, int k) {
    if (m < 1 || k < 0) throw usage_error("degree_space_dimension: need m >= 1 and k >= 0");
    return binomial(m + k - 1, k);
}

double sphere_monomial_moment(std::span<const int> exponents) {
    const int m = static_cast<int>(exponents.size());
    if (m < 1) throw usage_error("sphere_monomial_moment: empty exponent list");
    int total = 0;
    for (int e : exponents) {
        if (e < 0) throw usage_error("sphere_monomial_moment: negative exponent");
        if (e % 2 != 0) return 0.0;
        total += e;
    }
    // Reduce one even exponent at a time: the ratio of the moment to the one
    // with that exponent lowered by two is (e - 1)/(total + m - 2).
    double value = 1.0;
    std::vector<int> e(exponents.begin(), exponents.end());
    while (total > 0) {
        for (int i = 0; i < m; ++i) {
            if (e[i] >= 2) {
                value *= static_cast<double>(e[i] - 1) / static_cast<double>(total + m - 2);
                e[i] -= 2;
                total -= 2;
                break;
            }
        }
    }
    return value;
}

namespace {

void enumerate(int m, int degree, std::vector<int>& current,
               std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == m - 1) {
        current.push_back(degree);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int e = degree; e >= 0; --e) {
        current.push_back(e);
        enumerate(m, degree - e, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> monomials_of_degree(int m, int degree) {
    if (m < 1 || degree < 0) throw usage_error("monomials_of_degree: need m >= 1 and degree >= 0");
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    enumerate(m, degree, current, out);
    return out;
}

}  // namespace ellgof
