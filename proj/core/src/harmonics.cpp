#include "ellgof/harmonics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "ellgof/combinatorics.hpp"
#include "ellgof/errors.hpp"
#include "ellgof/quadrature.hpp"
#include "ellgof/rng.hpp"

namespace ellgof {

double SpherePoly::operator()(const double* u) const {
    double acc = 0.0;
    for (const auto& [e, c] : terms) {
        double t = c;
        for (int i = 0; i < m; ++i) {
            for (int p = 0; p < e[i]; ++p) t *= u[i];
        }
        acc += t;
    }
    return acc;
}

void canonicalize_sign(SpherePoly& p) {
    if (p.terms.empty()) return;
    double maxabs = 0.0;
    for (const auto& [e, c] : p.terms) maxabs = std::max(maxabs, std::abs(c));
    if (maxabs == 0.0) return;
    const std::vector<int>* best_key = nullptr;
    double best_coef = 0.0;
    for (const auto& [e, c] : p.terms) {
        if (std::abs(c) < (1.0 - 1e-9) * maxabs) continue;
        if (best_key == nullptr || e < *best_key) {
            best_key = &e;
            best_coef = c;
        }
    }
    if (best_coef < 0.0) {
        for (auto& [e, c] : p.terms) c = -c;
    }
}

const SpherePoly& HarmonicBasis::at(int k, int l) const {
    if (k < 0 || k > k_max || l < 1 || l > static_cast<int>(by_degree[k].size())) {
        throw usage_error("harmonic index out of range");
    }
    return by_degree[k][l - 1];
}

namespace {

using TermMap = std::map<std::vector<int>, double>;

SpherePoly poly_from_map(int m, int degree, const TermMap& tm, double drop_rel) {
    double maxabs = 0.0;
    for (const auto& [e, c] : tm) maxabs = std::max(maxabs, std::abs(c));
    SpherePoly p;
    p.m = m;
    p.degree = degree;
    for (const auto& [e, c] : tm) {
        if (std::abs(c) <= drop_rel * maxabs) continue;
        p.terms.emplace_back(e, c);
    }
    return p;
}

// Replace every term of total degree below k by its product with
// (u1^2 + ... + um^2), repeating until all terms reach degree k. On the
// sphere this multiplies by one, so the polynomial is unchanged there but
// becomes homogeneous of degree k.
TermMap homogenize(int m, int k, const TermMap& tm) {
    TermMap cur = tm;
    while (true) {
        bool any_low = false;
        TermMap next;
        for (const auto& [e, c] : cur) {
            int deg = 0;
            for (int v : e) deg += v;
            if (deg == k) {
                next[e] += c;
            } else if (deg < k) {
                any_low = true;
                for (int i = 0; i < m; ++i) {
                    std::vector<int> e2 = e;
                    e2[i] += 2;
                    next[e2] += c;
                }
            } else {
                throw numeric_error("homogenize: term degree exceeds target");
            }
        }
        cur = std::move(next);
        if (!any_low) return cur;
    }
}

// Degree-k circle harmonics: sqrt(2) cos(k theta) and sqrt(2) sin(k theta)
// expanded in powers of u1 = cos theta, u2 = sin theta. Already homogeneous.
std::vector<SpherePoly> circle_degree(int k) {
    if (k == 0) {
        SpherePoly one{2, 0, {{{0, 0}, 1.0}}};
        return {one};
    }
    const double r2 = std::sqrt(2.0);
    TermMap cosm;
    TermMap sinm;
    for (int t = 0; t <= k; ++t) {
        double c = r2 * static_cast<double>(binomial(k, t));
        if (t % 2 == 0) {
            cosm[{k - t, t}] += ((t / 2) % 2 == 0 ? c : -c);
        } else {
            sinm[{k - t, t}] += (((t - 1) / 2) % 2 == 0 ? c : -c);
        }
    }
    return {poly_from_map(2, k, cosm, 0.0), poly_from_map(2, k, sinm, 0.0)};
}

// Coefficients of the Legendre polynomial P_k: coef[p] multiplies x^p.
std::vector<double> legendre_coefficients(int k) {
    std::vector<double> coef(k + 1, 0.0);
    double scale = std::ldexp(1.0, -k);
    for (int j = 0; 2 * j <= k; ++j) {
        double c = scale * static_cast<double>(binomial(k, j)) *
                   static_cast<double>(binomial(2 * k - 2 * j, k));
        coef[k - 2 * j] = (j % 2 == 0 ? c : -c);
    }
    return coef;
}

// a-fold derivative of a coefficient vector.
std::vector<double> differentiate(const std::vector<double>& coef, int a) {
    if (a == 0) return coef;
    int n = static_cast<int>(coef.size());
    if (n <= a) return {};
    std::vector<double> out(n - a, 0.0);
    for (int p = 0; p + a < n; ++p) {
        double f = 1.0;
        for (int q = p + 1; q <= p + a; ++q) f *= static_cast<double>(q);
        out[p] = coef[p + a] * f;
    }
    return out;
}

// Degree-k harmonics in R^3: polar axis u2, azimuth measured in the (u1, u3)
// plane, ordered zonal first then (cos, sin) pairs of increasing azimuthal
// frequency a. Each function is N_{k,a} P_k^(a)(u2) Re/Im[(u1 + i u3)^a],
// homogenized to degree k afterwards.
std::vector<SpherePoly> sphere3_degree(int k) {
    std::vector<SpherePoly> out;
    std::vector<double> pk = legendre_coefficients(k);
    for (int a = 0; a <= k; ++a) {
        std::vector<double> dpk = differentiate(pk, a);
        if (dpk.empty()) break;
        double lf = 1.0;  // (k - a)! / (k + a)!
        for (int q = k - a + 1; q <= k + a; ++q) lf /= static_cast<double>(q);
        double norm = std::sqrt(2.0 * (2.0 * k + 1.0) * lf / (a == 0 ? 2.0 : 1.0));

        TermMap cosm;
        TermMap sinm;
        for (int t = 0; t <= a; ++t) {
            double c = static_cast<double>(binomial(a, t));
            for (int p = 0; p < static_cast<int>(dpk.size()); ++p) {
                if (dpk[p] == 0.0) continue;
                double v = norm * dpk[p] * c;
                std::vector<int> e = {a - t, p, t};
                if (t % 2 == 0) {
                    cosm[e] += ((t / 2) % 2 == 0 ? v : -v);
                } else {
                    sinm[e] += (((t - 1) / 2) % 2 == 0 ? v : -v);
                }
            }
        }
        out.push_back(poly_from_map(3, k, homogenize(3, k, cosm), 0.0));
        if (a >= 1) out.push_back(poly_from_map(3, k, homogenize(3, k, sinm), 0.0));
    }
    return out;
}

// Degree-k harmonics in general dimension by Gram-Schmidt. Work in the span
// of degree-k and degree-(k-2) monomials with the exact moment Gram matrix;
// an orthonormal basis of the lower-degree subspace is projected out of each
// degree-k monomial seed (twice, for numerical stability). On the sphere the
// degree-(k-2) monomials represent all lower-degree polynomials of matching
// parity, and opposite parity is orthogonal automatically, so the survivors
// span the degree-k harmonics.
std::vector<SpherePoly> gram_schmidt_degree(int m, int k) {
    const int want = harmonic_dimension(m, k);
    std::vector<std::vector<int>> tops = monomials_of_degree(m, k);
    std::vector<std::vector<int>> lows =
        k >= 2 ? monomials_of_degree(m, k - 2) : std::vector<std::vector<int>>{};
    const int T = static_cast<int>(tops.size());
    const int L = static_cast<int>(lows.size());
    const int N = T + L;

    std::vector<std::vector<int>> all = tops;
    all.insert(all.end(), lows.begin(), lows.end());

    Eigen::MatrixXd G(N, N);
    std::vector<int> sum(m);
    for (int a = 0; a < N; ++a) {
        for (int b = a; b < N; ++b) {
            for (int i = 0; i < m; ++i) sum[i] = all[a][i] + all[b][i];
            G(a, b) = G(b, a) = sphere_monomial_moment(sum);
        }
    }

    Eigen::MatrixXd W(N, 0);
    if (L > 0) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G.block(T, T, L, L));
        double lmax = es.eigenvalues().maxCoeff();
        int r = 0;
        for (int i = 0; i < L; ++i) {
            if (es.eigenvalues()[i] > 1e-12 * lmax) ++r;
        }
        W.resize(N, r);
        W.setZero();
        int col = 0;
        for (int i = 0; i < L; ++i) {
            double lam = es.eigenvalues()[i];
            if (lam <= 1e-12 * lmax) continue;
            W.block(T, col, L, 1) = es.eigenvectors().col(i) / std::sqrt(lam);
            ++col;
        }
    }

    // Seed order: monomials whose last exponent is at most one first. Those
    // already span the harmonics (the remaining coordinates determine the
    // monomial up to the sphere constraint), so later seeds only mop up.
    std::vector<int> seeds;
    for (int s = 0; s < T; ++s) {
        if (tops[s][m - 1] <= 1) seeds.push_back(s);
    }
    for (int s = 0; s < T; ++s) {
        if (tops[s][m - 1] > 1) seeds.push_back(s);
    }

    Eigen::MatrixXd H(N, want);
    int have = 0;
    for (int s : seeds) {
        if (have == want) break;
        Eigen::VectorXd v = Eigen::VectorXd::Zero(N);
        v[s] = 1.0;
        double orig = std::sqrt(G(s, s));
        for (int pass = 0; pass < 2; ++pass) {
            Eigen::VectorXd gv = G * v;
            if (W.cols() > 0) v -= W * (W.transpose() * gv);
            if (have > 0) {
                gv = G * v;
                v -= H.leftCols(have) * (H.leftCols(have).transpose() * gv);
            }
        }
        double r2 = v.dot(G * v);
        if (r2 <= 0.0 || std::sqrt(r2) < 1e-9 * orig) continue;
        H.col(have++) = v / std::sqrt(r2);
    }
    if (have < want) {
        std::ostringstream msg;
        msg << "harmonic construction failed in dimension " << m << " at degree " << k
            << ": reached rank " << have << " of " << want;
        throw numeric_error(msg.str());
    }

    std::vector<SpherePoly> out;
    for (int c = 0; c < want; ++c) {
        TermMap tm;
        for (int a = 0; a < N; ++a) {
            double coef = H(a, c);
            if (coef != 0.0) tm[all[a]] += coef;
        }
        out.push_back(poly_from_map(m, k, homogenize(m, k, tm), 1e-12));
    }
    return out;
}

}  // namespace

HarmonicBasis build_harmonics(int m, int k_max) {
    if (m < 2) throw usage_error("build_harmonics: dimension must be at least 2");
    if (k_max < 0) throw usage_error("build_harmonics: negative maximum degree");
    HarmonicBasis basis;
    basis.m = m;
    basis.k_max = k_max;
    basis.by_degree.resize(k_max + 1);
    for (int k = 0; k <= k_max; ++k) {
        std::vector<SpherePoly> fns;
        if (m == 2) {
            fns = circle_degree(k);
        } else if (m == 3) {
            fns = sphere3_degree(k);
        } else {
            fns = gram_schmidt_degree(m, k);
        }
        if (static_cast<int>(fns.size()) != harmonic_dimension(m, k)) {
            throw numeric_error("build_harmonics: wrong count at a degree");
        }
        basis.by_degree[k] = std::move(fns);
    }
    return basis;
}

OrthonormalityReport verify_orthonormality(const HarmonicBasis& basis,
                                           OrthonormalityMethod method,
                                           std::size_t montecarlo_draws, std::uint64_t seed) {
    std::vector<const SpherePoly*> fns;
    for (const auto& deg : basis.by_degree) {
        for (const auto& p : deg) fns.push_back(&p);
    }
    const int nf = static_cast<int>(fns.size());
    OrthonormalityReport rep;

    if (method == OrthonormalityMethod::quadrature) {
        SphereQuadrature rule = sphere_product_rule(basis.m, 2 * basis.k_max);
        const int np = static_cast<int>(rule.points.size());
        Eigen::MatrixXd F(np, nf);
        for (int p = 0; p < np; ++p) {
            for (int f = 0; f < nf; ++f) F(p, f) = (*fns[f])(rule.points[p].data());
        }
        Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(rule.weights.data(), np);
        Eigen::MatrixXd gram = F.transpose() * w.asDiagonal() * F;
        gram -= Eigen::MatrixXd::Identity(nf, nf);
        rep.method = "quadrature";
        rep.max_abs_deviation = gram.cwiseAbs().maxCoeff();
        rep.three_sigma_band = 0.0;
        rep.evaluations = static_cast<std::size_t>(np);
        return rep;
    }

    std::mt19937_64 gen = substream(seed, 0, 0);
    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(nf, nf);
    Eigen::MatrixXd gram2 = Eigen::MatrixXd::Zero(nf, nf);
    const std::size_t chunk = 8192;
    std::size_t done = 0;
    Eigen::MatrixXd F(static_cast<int>(chunk), nf);
    while (done < montecarlo_draws) {
        int b = static_cast<int>(std::min(chunk, montecarlo_draws - done));
        for (int p = 0; p < b; ++p) {
            Eigen::VectorXd u = uniform_sphere(gen, basis.m);
            for (int f = 0; f < nf; ++f) F(p, f) = (*fns[f])(u.data());
        }
        gram.noalias() += F.topRows(b).transpose() * F.topRows(b);
        Eigen::MatrixXd Fsq = F.topRows(b).cwiseProduct(F.topRows(b));
        gram2.noalias() += Fsq.transpose() * Fsq;
        done += static_cast<std::size_t>(b);
    }
    double n = static_cast<double>(montecarlo_draws);
    gram /= n;
    gram2 /= n;
    Eigen::MatrixXd var = (gram2 - gram.cwiseProduct(gram)).cwiseMax(0.0);
    gram -= Eigen::MatrixXd::Identity(nf, nf);
    rep.method = "montecarlo";
    rep.max_abs_deviation = gram.cwiseAbs().maxCoeff();
    rep.three_sigma_band = 3.0 * std::sqrt(var.maxCoeff() / n);
    rep.evaluations = montecarlo_draws;
    return rep;
}

}  // namespace ellgof
