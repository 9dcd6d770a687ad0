#pragma once

#include <Eigen/Core>
#include <memory>
#include <random>
#include <string>

namespace ellgof {

enum class FamilyId { mvn, laplace, logistic, pearson2 };

FamilyId family_from_name(const std::string& name);
std::string family_name(FamilyId id);

// Radial profile of an elliptical null law in dimension m. Throughout, y is
// the squared Mahalanobis radius of a point; the density is proportional to
// phi(y), the radial score weight is g(y) = -2 phi'(y) / phi(y), and
// zeta(y) = y g(y). Moments are under the null law of y.
class NullFamily {
  public:
    virtual ~NullFamily() = default;

    FamilyId id() const { return id_; }
    int dimension() const { return m_; }
    double shape() const { return shape_; }  // NaN unless the family has one
    std::string name() const { return family_name(id_); }

    // Smallest retained degree: 3 for the Gaussian (whose first- and
    // second-degree score components vanish identically after fitting),
    // 1 otherwise.
    int k_min() const;

    virtual double g(double y) const = 0;
    double zeta(double y) const { return y * g(y); }

    virtual double radial_moment(int t) const = 0;  // E[y^t]
    virtual double zeta_moment(int t) const = 0;    // E[y^t zeta(y)]
    virtual double zeta_square_moment() const = 0;  // E[zeta(y)^2]
    virtual double sigma1() const = 0;              // E[y g(y)^2]
    double sigma2() const;                          // m (m + 2) / E[zeta^2]

    // Normalizing constant of the density c_m sqrt(det V^-1) phi(y).
    virtual double density_constant() const = 0;

    virtual double sample_squared_radius(std::mt19937_64& gen) const = 0;
    // One draw with location zero and identity scatter: sqrt(y) times a
    // uniform direction.
    Eigen::VectorXd sample_standard(std::mt19937_64& gen) const;
    // n independent standard draws, one per row.
    Eigen::MatrixXd sample_standard(std::mt19937_64& gen, int n) const;

  protected:
    NullFamily(FamilyId id, int m, double shape);

    FamilyId id_;
    int m_;
    double shape_;
};

// shape is the Pearson II exponent (required positive there, ignored and
// forced to NaN elsewhere).
std::unique_ptr<NullFamily> make_family(FamilyId id, int m,
                                        double shape = std::numeric_limits<double>::quiet_NaN());
std::unique_ptr<NullFamily> make_family(const std::string& name, int m,
                                        double shape = std::numeric_limits<double>::quiet_NaN());

}  // namespace ellgof
