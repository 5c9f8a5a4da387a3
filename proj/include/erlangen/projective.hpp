#pragma once

// Homogeneous-coordinate linear algebra over the complex numbers.
//
// Every geometric object here is a vector or matrix "up to scale". The
// classes hold one representative and never treat any coordinate (for
// example the last one) as privileged; affine charts are explicit.

#include <complex>
#include <initializer_list>

#include <Eigen/Dense>

namespace erlangen {

using Scalar = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr double kSingularityThreshold = 1e-12;

/// Builds a Scalar, rejecting NaN and infinite components.
Scalar make_scalar(double re, double im = 0.0);

bool all_finite(const Vector& v);
bool all_finite(const Matrix& m);

/// Bilinear (not sesquilinear) pairing sum_i a_i b_i.
Scalar bilinear(const Vector& a, const Vector& b);

/// Largest-magnitude-coordinate normalization; the chosen entry becomes 1.
Vector normalize_max(const Vector& v);

/// True when a and b are proportional by a nonzero scalar, within a
/// relative tolerance after normalizing both by the entry where `a` is
/// largest.
bool equal_up_to_scale(const Vector& a, const Vector& b,
                       double tol = kDefaultTolerance);
bool equal_up_to_scale(const Matrix& a, const Matrix& b,
                       double tol = kDefaultTolerance);

/// Relative residual of the best fit b ~ mu * a, i.e. how far two matrices
/// are from proportional. Zero means exactly proportional.
double proportionality_residual(const Matrix& a, const Matrix& b);

namespace detail {

class Homogeneous {
 public:
  const Vector& coords() const { return coords_; }
  Eigen::Index size() const { return coords_.size(); }
  /// Ambient projective dimension n (the vector has n+1 entries).
  int dimension() const { return static_cast<int>(coords_.size()) - 1; }
  Scalar operator[](Eigen::Index i) const { return coords_[i]; }
  /// Unit-norm representative.
  Vector unit() const { return coords_ / coords_.norm(); }

 protected:
  explicit Homogeneous(Vector coords, const char* what);
  Vector coords_;
};

}  // namespace detail

class ProjPoint : public detail::Homogeneous {
 public:
  explicit ProjPoint(Vector coords);
  ProjPoint(std::initializer_list<Scalar> coords);

  ProjPoint normalized() const { return ProjPoint(normalize_max(coords_)); }
};

class Hyperplane : public detail::Homogeneous {
 public:
  explicit Hyperplane(Vector coeffs);
  Hyperplane(std::initializer_list<Scalar> coeffs);

  const Vector& coeffs() const { return coords_; }
};

bool equal_up_to_scale(const ProjPoint& a, const ProjPoint& b,
                       double tol = kDefaultTolerance);
bool equal_up_to_scale(const Hyperplane& a, const Hyperplane& b,
                       double tol = kDefaultTolerance);

/// Symmetric matrix up to scale. Symmetry is required exactly; use
/// `Quadric::symmetrized` for matrices that carry rounding noise.
class Quadric {
 public:
  explicit Quadric(Matrix m);
  static Quadric symmetrized(const Matrix& m);
  static Quadric diagonal(std::initializer_list<double> entries);

  const Matrix& matrix() const { return matrix_; }
  Eigen::Index size() const { return matrix_.rows(); }
  int dimension() const { return static_cast<int>(matrix_.rows()) - 1; }

  /// x^T Q y.
  Scalar form(const Vector& x, const Vector& y) const;
  Scalar form(const ProjPoint& x, const ProjPoint& y) const;

  /// Relative determinant |det Q| / ||Q||_F^(n+1).
  double relative_determinant() const;
  bool is_degenerate(double threshold = kSingularityThreshold) const {
    return relative_determinant() <= threshold;
  }

  /// Adjugate-proportional dual quadric (the inverse matrix, rescaled).
  Quadric dual() const;
  /// Polar hyperplane of a point.
  Hyperplane polar(const ProjPoint& p) const;

 private:
  Matrix matrix_;
};

class ProjMap {
 public:
  explicit ProjMap(Matrix m, double singularity = kSingularityThreshold);
  static ProjMap identity(Eigen::Index size);

  const Matrix& matrix() const { return matrix_; }
  Eigen::Index size() const { return matrix_.rows(); }
  int dimension() const { return static_cast<int>(matrix_.rows()) - 1; }

  ProjMap inverse() const;

 private:
  Matrix matrix_;
};

/// Composition: (a * b) applies b first.
ProjMap operator*(const ProjMap& a, const ProjMap& b);

ProjPoint apply(const ProjMap& map, const ProjPoint& point);
/// Hyperplanes transform contragrediently: h' = M^{-T} h.
Hyperplane apply(const ProjMap& map, const Hyperplane& plane);
/// Quadrics transform as Q' = M^{-T} Q M^{-1}.
Quadric apply(const ProjMap& map, const Quadric& quadric);
ProjMap inverse(const ProjMap& map);

/// Cross-ratio (p1,p2;p3,p4) = ((t1-t3)(t2-t4)) / ((t1-t4)(t2-t3)) using
/// homogeneous parameters on the common line. Throws PreconditionError
/// for non-collinear input and DegenerateError for 0/0 or infinite values.
Scalar cross_ratio(const ProjPoint& p1, const ProjPoint& p2,
                   const ProjPoint& p3, const ProjPoint& p4,
                   double tol = kDefaultTolerance);
/// Same convention on the extended complex line; each argument is a
/// homogeneous pair (t : 1) or (1 : 0).
Scalar cross_ratio(const Vector& t1, const Vector& t2, const Vector& t3,
                   const Vector& t4, double tol = kDefaultTolerance);

struct ChordIntersections {
  ProjPoint first;
  ProjPoint second;
  /// Double root: `first` and `second` are the same point.
  bool tangent = false;
};

/// Intersections of the line ab with a quadric. Throws GeneratorError when
/// the whole line lies in the quadric.
ChordIntersections line_quadric_intersections(const ProjPoint& a,
                                              const ProjPoint& b,
                                              const Quadric& q,
                                              double tol = kDefaultTolerance);

bool on_quadric(const ProjPoint& p, const Quadric& q,
                double tol = kDefaultTolerance);
bool incident(const ProjPoint& p, const Hyperplane& h,
              double tol = kDefaultTolerance);

/// Plane-only helpers (three homogeneous coordinates).
Hyperplane join(const ProjPoint& a, const ProjPoint& b);
ProjPoint meet(const Hyperplane& a, const Hyperplane& b);

}  // namespace erlangen
