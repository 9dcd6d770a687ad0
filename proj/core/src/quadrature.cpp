#include "ellgof/quadrature.hpp"

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <numbers>

#include "ellgof/errors.hpp"

namespace ellgof {

namespace {

// Golub-Welsch: nodes are the eigenvalues of the symmetric Jacobi matrix of
// the three-term recurrence, weights mu0 times squared first eigenvector
// components.
std::vector<QuadratureNode> golub_welsch(const std::vector<double>& diag,
                                         const std::vector<double>& offdiag,
                                         double mu0) {
    const int n = static_cast<int>(diag.size());
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        J(i, i) = diag[i];
        if (i + 1 < n) {
            J(i, i + 1) = offdiag[i];
            J(i + 1, i) = offdiag[i];
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    if (es.info() != Eigen::Success) throw numeric_error("quadrature eigen solve failed");
    std::vector<QuadratureNode> out(n);
    for (int i = 0; i < n; ++i) {
        const double v0 = es.eigenvectors()(0, i);
        out[i] = {es.eigenvalues()(i), mu0 * v0 * v0};
    }
    return out;
}

}  // namespace

std::vector<QuadratureNode> gauss_jacobi(int n, double alpha, double beta) {
    if (n < 1) throw usage_error("gauss_jacobi: need n >= 1");
    if (alpha <= -1.0 || beta <= -1.0) throw usage_error("gauss_jacobi: need alpha, beta > -1");
    const double ab = alpha + beta;
    std::vector<double> a(n), b(n > 1 ? n - 1 : 0);
    a[0] = (beta - alpha) / (ab + 2.0);
    for (int k = 1; k < n; ++k) {
        const double den = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
        a[k] = (beta * beta - alpha * alpha) / den;
    }
    for (int k = 1; k <= n - 1; ++k) {
        double num = 4.0 * k * (k + alpha) * (k + beta) * (k + ab);
        double den = (2.0 * k + ab) * (2.0 * k + ab) * (2.0 * k + ab + 1.0) * (2.0 * k + ab - 1.0);
        if (k == 1 && std::abs(ab + 1.0) < 1e-14) {
            // Limit of the generic expression at alpha + beta = -1.
            num = 4.0 * (1.0 + alpha) * (1.0 + beta);
            den = (ab + 2.0) * (ab + 2.0) * (ab + 3.0);
        }
        b[k - 1] = std::sqrt(num / den);
    }
    const double mu0 = std::exp((ab + 1.0) * std::numbers::ln2 + std::lgamma(alpha + 1.0) +
                                std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0));
    return golub_welsch(a, b, mu0);
}

std::vector<QuadratureNode> gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

SphereQuadrature sphere_product_rule(int m, int max_degree) {
    if (m < 2) throw usage_error("sphere_product_rule: need m >= 2");
    if (max_degree < 0) throw usage_error("sphere_product_rule: need max_degree >= 0");

    SphereQuadrature q;
    q.m = m;

    // Uniform rule on the final circle: exact for trigonometric polynomials
    // of degree <= n_circle - 1.
    const int n_circle = max_degree + 2;
    std::vector<std::array<double, 2>> circle(n_circle);
    for (int t = 0; t < n_circle; ++t) {
        const double th = 2.0 * std::numbers::pi * t / n_circle;
        circle[t] = {std::cos(th), std::sin(th)};
    }

    if (m == 2) {
        for (const auto& c : circle) {
            q.points.push_back({c[0], c[1]});
            q.weights.push_back(1.0 / n_circle);
        }
        return q;
    }

    // Polar cosines t_i with weight (1-t^2)^((m-2-i)/2), i = 1..m-2.
    const int n_polar = max_degree / 2 + 1;
    std::vector<std::vector<QuadratureNode>> polar;
    for (int i = 1; i <= m - 2; ++i) {
        const double lambda = 0.5 * (m - 2 - i);
        polar.push_back(gauss_jacobi(n_polar, lambda, lambda));
    }

    std::vector<int> idx(m - 2, 0);
    while (true) {
        double w = 1.0;
        std::vector<double> u(m);
        double sinprod = 1.0;
        for (int i = 0; i < m - 2; ++i) {
            const auto& node = polar[i][idx[i]];
            u[i] = sinprod * node.x;
            sinprod *= std::sqrt(std::max(0.0, 1.0 - node.x * node.x));
            w *= node.w;
        }
        for (const auto& c : circle) {
            auto point = u;
            point[m - 2] = sinprod * c[0];
            point[m - 1] = sinprod * c[1];
            q.points.push_back(std::move(point));
            q.weights.push_back(w / n_circle);
        }
        int pos = m - 3;
        while (pos >= 0 && ++idx[pos] == n_polar) idx[pos--] = 0;
        if (pos < 0) break;
    }

    double total = 0.0;
    for (double w : q.weights) total += w;
    for (double& w : q.weights) w /= total;
    return q;
}

}  // namespace ellgof
