#include "ellgof/estimate.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "ellgof/errors.hpp"

namespace ellgof {

namespace {

Eigen::MatrixXd symmetric_inverse_sqrt(const Eigen::MatrixXd& V) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(V);
    if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0) {
        throw numeric_error("scatter matrix is not positive definite");
    }
    return es.eigenvectors() *
           es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
           es.eigenvectors().transpose();
}

Eigen::VectorXd radii_under(const Eigen::MatrixXd& X, const Eigen::VectorXd& mu,
                            const Eigen::MatrixXd& V) {
    Eigen::LLT<Eigen::MatrixXd> llt(V);
    if (llt.info() != Eigen::Success) {
        throw numeric_error("scatter matrix is not positive definite");
    }
    Eigen::MatrixXd C = X.rowwise() - mu.transpose();
    Eigen::MatrixXd S = llt.matrixL().solve(C.transpose());
    return S.colwise().squaredNorm().transpose();
}

bool inside_support(const NullFamily& family, const Eigen::VectorXd& y) {
    if (family.id() != FamilyId::pearson2) return true;
    return y.maxCoeff() < 1.0;
}

}  // namespace

EllipticalFit fit_mle(const Eigen::MatrixXd& X, const NullFamily& family) {
    const int n = static_cast<int>(X.rows());
    const int m = static_cast<int>(X.cols());
    if (m != family.dimension()) throw usage_error("fit_mle: data dimension mismatch");
    if (n <= m) throw data_error("fit_mle: need more observations than dimensions");

    EllipticalFit fit;
    fit.mu = X.colwise().mean().transpose();
    Eigen::MatrixXd C = X.rowwise() - fit.mu.transpose();
    fit.V = C.transpose() * C / static_cast<double>(n);
    if (family.id() == FamilyId::mvn) return fit;

    // Keep the start strictly inside the support when it is bounded.
    if (family.id() == FamilyId::pearson2) {
        Eigen::VectorXd y = radii_under(X, fit.mu, fit.V);
        double ymax = y.maxCoeff();
        if (ymax >= 0.9) fit.V *= ymax / 0.9;
    }

    for (int it = 1; it <= 500; ++it) {
        Eigen::VectorXd y = radii_under(X, fit.mu, fit.V);
        Eigen::VectorXd w(n);
        for (int r = 0; r < n; ++r) {
            double yr = std::max(y[r], 1e-300);
            w[r] = family.g(yr);
        }
        double wsum = w.sum();
        if (!(wsum > 0.0)) throw numeric_error("fit_mle: nonpositive weight sum");

        Eigen::VectorXd mu_next = (X.transpose() * w) / wsum;
        Eigen::MatrixXd D = X.rowwise() - mu_next.transpose();
        Eigen::MatrixXd V_next =
            D.transpose() * w.asDiagonal() * D / static_cast<double>(n);

        // Backtrack toward the current iterate while the step leaves the
        // support or breaks positive definiteness.
        double t = 1.0;
        while (true) {
            Eigen::VectorXd mu_t = (1.0 - t) * fit.mu + t * mu_next;
            Eigen::MatrixXd V_t = (1.0 - t) * fit.V + t * V_next;
            Eigen::LLT<Eigen::MatrixXd> llt(V_t);
            if (llt.info() == Eigen::Success) {
                Eigen::VectorXd y_t = radii_under(X, mu_t, V_t);
                if (inside_support(family, y_t)) {
                    mu_next = mu_t;
                    V_next = V_t;
                    break;
                }
            }
            t *= 0.5;
            if (t < 1e-8) throw numeric_error("fit_mle: backtracking failed to stay in support");
        }

        double scale = 1.0 + fit.V.cwiseAbs().maxCoeff();
        double gap = std::max((mu_next - fit.mu).cwiseAbs().maxCoeff(),
                              (V_next - fit.V).cwiseAbs().maxCoeff()) /
                     scale;
        fit.mu = mu_next;
        fit.V = V_next;
        fit.iterations = it;
        fit.gap = gap;
        if (gap < 1e-10) return fit;
    }
    throw numeric_error("fit_mle: fixed point did not converge within 500 iterations");
}

Eigen::MatrixXd standardize(const Eigen::MatrixXd& X, const EllipticalFit& fit) {
    Eigen::MatrixXd root = symmetric_inverse_sqrt(fit.V);
    return (X.rowwise() - fit.mu.transpose()) * root;
}

Eigen::VectorXd squared_radii(const Eigen::MatrixXd& X, const EllipticalFit& fit) {
    return radii_under(X, fit.mu, fit.V);
}

}  // namespace ellgof
