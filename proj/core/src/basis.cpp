#include "ellgof/basis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "ellgof/combinatorics.hpp"
#include "ellgof/errors.hpp"

namespace ellgof {

std::string block_name(Block b) {
    switch (b) {
        case Block::uniformity: return "U";
        case Block::radius: return "R";
        case Block::cross1: return "I1";
        case Block::cross2: return "I2";
        case Block::cross3: return "I3";
    }
    throw usage_error("invalid block");
}

Block classify_group(int k, int j) {
    int kappa = k - 2 * j;
    if (j == 0 && k >= 3) return Block::uniformity;
    if (kappa == 0) return Block::radius;
    if (kappa == 1) return Block::cross1;
    if (kappa == 2) return Block::cross2;
    return Block::cross3;
}

const BasisGroup* BasisSet::find(int k, int j) const {
    for (const auto& g : groups) {
        if (g.k == k && g.j == j) return &g;
    }
    return nullptr;
}

std::vector<int> BasisSet::groups_in(Block b) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(groups.size()); ++i) {
        if (groups[i].block == b) out.push_back(i);
    }
    return out;
}

BasisSet build_basis(const NullFamily& family, int K, int k_min_override) {
    if (K < 1) throw usage_error("build_basis: maximum degree must be at least 1");
    BasisSet b;
    b.family_id = family.id();
    b.m = family.dimension();
    b.K = K;
    b.k_min = family.k_min();
    if (k_min_override >= 0) {
        if (k_min_override < b.k_min) {
            throw usage_error("build_basis: cannot retain degrees below the family minimum");
        }
        b.k_min = k_min_override;
    }
    if (K < b.k_min) throw usage_error("build_basis: maximum degree below the smallest retained degree");

    std::vector<double> moments(K + 1);
    for (int t = 0; t <= K; ++t) moments[t] = family.radial_moment(t);

    for (int k = b.k_min; k <= K; ++k) {
        for (int j = 0; 2 * j <= k; ++j) {
            BasisGroup g;
            g.k = k;
            g.j = j;
            g.kappa = k - 2 * j;
            g.block = classify_group(k, j);
            g.radial = radial_polynomial(moments, j, g.kappa);
            g.harmonic_count = harmonic_dimension(b.m, g.kappa);
            b.groups.push_back(std::move(g));
        }
    }
    std::stable_sort(b.groups.begin(), b.groups.end(), [](const BasisGroup& a, const BasisGroup& c) {
        return std::make_tuple(static_cast<int>(a.block), a.k, a.j) <
               std::make_tuple(static_cast<int>(c.block), c.k, c.j);
    });

    int offset = 0;
    for (auto& g : b.groups) {
        g.offset = offset;
        offset += g.harmonic_count;
    }
    b.total = offset;

    b.harmonics = build_harmonics(b.m, K);

    std::map<std::vector<int>, int> pool;
    for (int gi = 0; gi < static_cast<int>(b.groups.size()); ++gi) {
        const BasisGroup& g = b.groups[gi];
        for (int l = 1; l <= g.harmonic_count; ++l) {
            const SpherePoly& psi = b.harmonics.at(g.kappa, l);
            std::vector<std::pair<int, double>> terms;
            for (const auto& [e, c] : psi.terms) {
                auto [it, inserted] = pool.emplace(e, static_cast<int>(pool.size()));
                if (inserted) b.monomials.push_back(e);
                terms.emplace_back(it->second, c);
            }
            b.fn_group.push_back(gi);
            b.fn_terms.push_back(std::move(terms));
        }
    }
    return b;
}

Eigen::MatrixXd evaluate_basis(const BasisSet& basis, const Eigen::MatrixXd& Z) {
    const int n = static_cast<int>(Z.rows());
    const int m = basis.m;
    if (static_cast<int>(Z.cols()) != m) throw usage_error("evaluate_basis: dimension mismatch");

    const int nmono = static_cast<int>(basis.monomials.size());
    const int ngroups = static_cast<int>(basis.groups.size());
    Eigen::MatrixXd out(n, basis.total);

    std::vector<double> powers(static_cast<std::size_t>(m) * (basis.K + 1));
    std::vector<double> mono(nmono);
    std::vector<double> sval(ngroups);

    for (int r = 0; r < n; ++r) {
        double y = 0.0;
        for (int i = 0; i < m; ++i) {
            double z = Z(r, i);
            y += z * z;
            double* p = &powers[static_cast<std::size_t>(i) * (basis.K + 1)];
            p[0] = 1.0;
            for (int q = 1; q <= basis.K; ++q) p[q] = p[q - 1] * z;
        }
        for (int q = 0; q < nmono; ++q) {
            const std::vector<int>& e = basis.monomials[q];
            double v = 1.0;
            for (int i = 0; i < m; ++i) v *= powers[static_cast<std::size_t>(i) * (basis.K + 1) + e[i]];
            mono[q] = v;
        }
        for (int gi = 0; gi < ngroups; ++gi) sval[gi] = basis.groups[gi].radial(y);
        for (int f = 0; f < basis.total; ++f) {
            double acc = 0.0;
            for (const auto& [qi, c] : basis.fn_terms[f]) acc += c * mono[qi];
            out(r, f) = acc * sval[basis.fn_group[f]];
        }
    }
    return out;
}

std::vector<int> lexicographic_permutation(const BasisSet& basis) {
    std::vector<std::tuple<int, int, int, int>> order;  // (k, j, l, column)
    for (const auto& g : basis.groups) {
        for (int l = 1; l <= g.harmonic_count; ++l) {
            order.emplace_back(g.k, g.j, l, g.offset + l - 1);
        }
    }
    std::sort(order.begin(), order.end());
    std::vector<int> perm(order.size());
    for (std::size_t p = 0; p < order.size(); ++p) perm[p] = std::get<3>(order[p]);
    return perm;
}

std::vector<PiTerm> flatten_function(const BasisSet& basis, int group_index, int l) {
    if (group_index < 0 || group_index >= static_cast<int>(basis.groups.size())) {
        throw usage_error("flatten_function: group index out of range");
    }
    const BasisGroup& g = basis.groups[group_index];
    if (l < 1 || l > g.harmonic_count) throw usage_error("flatten_function: harmonic index out of range");
    const SpherePoly& psi = basis.harmonics.at(g.kappa, l);

    std::map<std::pair<int, std::vector<int>>, double> acc;
    for (int t = 0; t <= g.radial.j; ++t) {
        if (g.radial.coef[t] == 0.0) continue;
        for (const auto& [e, c] : psi.terms) {
            acc[{2 * t + g.kappa, e}] += g.radial.coef[t] * c;
        }
    }
    std::vector<PiTerm> out;
    for (const auto& [key, c] : acc) {
        if (c == 0.0) continue;
        out.push_back(PiTerm{key.first, key.second, c});
    }
    return out;
}

void canonicalize_sign(std::vector<PiTerm>& terms) {
    if (terms.empty()) return;
    double maxabs = 0.0;
    for (const auto& t : terms) maxabs = std::max(maxabs, std::abs(t.coef));
    if (maxabs == 0.0) return;
    const PiTerm* best = nullptr;
    for (const auto& t : terms) {
        if (std::abs(t.coef) < (1.0 - 1e-9) * maxabs) continue;
        if (best == nullptr || std::make_pair(t.rpow, t.exponents) <
                                   std::make_pair(best->rpow, best->exponents)) {
            best = &t;
        }
    }
    if (best != nullptr && best->coef < 0.0) {
        for (auto& t : terms) t.coef = -t.coef;
    }
}

}  // namespace ellgof
