#pragma once

// Binary forms f(x, y) = sum_k a_k x^(d-k) y^k over the complex numbers,
// their classical covariants, and the representation of their roots on
// the sphere through z = x / y.
//
// Normalizations, chosen so that the classical identities hold with
// integer-free constants:
//   hessian(f)           = (f_xx f_yy - f_xy^2) / (d^2 (d-1)^2)
//   jacobian_covariant   = (f_x g_y - f_y g_x) / (deg f * deg g)
//   cubic R              = (ad - bc)^2 - 4 (ac - b^2)(bd - c^2)
//   quartic i            = ae - 4bd + 3c^2
//   quartic j            = ace + 2bcd - ad^2 - b^2 e - c^3
// where a, b, c, ... are the binomial coefficients a_k / C(d, k). With these,
// for a cubic Q = J(f, Delta) and Q^2 - R f^2 / 4 = -Delta^3.
//
// Under the substitution f -> f o g with determinant delta, Hessian and
// Jacobian pick up delta^2 and delta^1 (so Q picks up delta^3), R
// delta^6, i delta^4 and j delta^6.

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "erlangen/projective.hpp"
#include "erlangen/transfers.hpp"

namespace erlangen {

class BinaryForm {
 public:
  /// Coefficients of x^d, x^(d-1) y, ..., y^d; d = size - 1 >= 0. The zero
  /// form is representable because covariants can vanish identically.
  explicit BinaryForm(Vector coeffs);
  BinaryForm(std::initializer_list<Scalar> coeffs);
  /// From binomial coefficients b_k, i.e. a_k = C(d, k) b_k.
  static BinaryForm from_binomial(const Vector& b);
  /// prod (y_k x - x_k y) over the roots (x_k : y_k); infinity is (1 : 0).
  static BinaryForm from_roots(const std::vector<ExtendedComplex>& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Vector& coeffs() const { return coeffs_; }
  Vector binomial_coeffs() const;
  bool is_zero() const { return coeffs_.cwiseAbs().maxCoeff() == 0.0; }

  Scalar operator()(Scalar x, Scalar y) const;
  BinaryForm dx() const;
  BinaryForm dy() const;

  /// (f o g)(x, y) = f(g00 x + g01 y, g10 x + g11 y).
  BinaryForm substitute(const Eigen::Matrix2cd& g) const;

 private:
  Vector coeffs_;
};

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
BinaryForm operator*(Scalar s, const BinaryForm& f);
BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);

/// Relative residual of the best fit b ~ mu a; zero iff proportional.
double proportionality_residual(const BinaryForm& a, const BinaryForm& b);

/// Degree >= 2, else PreconditionError.
BinaryForm hessian(const BinaryForm& f);
BinaryForm jacobian_covariant(const BinaryForm& f, const BinaryForm& g);
/// Degree 3, else PreconditionError. Zero iff f has a repeated root.
Scalar cubic_invariant_R(const BinaryForm& f);

struct QuarticInvariants {
  Scalar i;
  Scalar j;
};
/// Degree 4, else PreconditionError.
QuarticInvariants quartic_invariants(const BinaryForm& f);

struct CubicCovariants {
  BinaryForm delta;
  BinaryForm q;
  Scalar r;
};
CubicCovariants cubic_covariants(const BinaryForm& f);

struct QuarticCovariants {
  BinaryForm h;
  BinaryForm t;
  Scalar i;
  Scalar j;
};
QuarticCovariants quartic_covariants(const BinaryForm& f);

/// Roots with multiplicity, infinity counted by vanishing leading
/// coefficients. Companion-matrix eigenvalues with one Newton refinement;
/// throws ConvergenceError when a relative root residual exceeds
/// `residual_tol`, and PreconditionError for the zero form.
std::vector<ExtendedComplex> projective_roots(const BinaryForm& f,
                                              double residual_tol = 1e-8);

struct SphericalRootSet {
  std::vector<ExtendedComplex> roots;
  std::vector<SpherePoint> points;
};
SphericalRootSet roots_on_sphere(const BinaryForm& f,
                                 double residual_tol = 1e-8);

/// Q^2 + lambda R f^2. Throws DegenerateError when R = 0.
BinaryForm cubic_pencil_member(const BinaryForm& f, Scalar lambda,
                               double tol = 1e-12);
/// i H + lambda j f. Throws DegenerateError when i = j = 0.
BinaryForm quartic_pencil_member(const BinaryForm& f, Scalar lambda,
                                 double tol = 1e-12);
/// The three lambda where the quartic pencil member is a perfect square:
/// lambda = -i theta / j for the roots theta of 4 theta^3 - i theta + j.
/// Throws DegenerateError when j = 0.
std::array<Scalar, 3> quartic_square_parameters(const BinaryForm& f,
                                                double tol = 1e-12);

/// g with g^2 proportional to f (f of even degree and a perfect square),
/// seeded from the paired roots and polished by Gauss-Newton. Throws
/// PreconditionError for odd degree and DegenerateError when f is not a
/// square within `tol` (relative).
BinaryForm perfect_square_root(const BinaryForm& f, double tol = 1e-8);

}  // namespace erlangen
