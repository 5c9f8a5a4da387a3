#pragma once

// Maps carrying one geometry onto another: the sphere and the extended
// complex plane, Moebius maps and their sphere collineations, the conic as
// a parametrized line, point pairs on a conic and chords, lines of 3-space
// and the Klein quadric, and oriented circles in tetracyclic/Lie
// coordinates.

#include <optional>
#include <utility>
#include <variant>

#include "erlangen/projective.hpp"

namespace erlangen {

// ---------------------------------------------------------------------------
// Sphere and extended plane

class SpherePoint {
 public:
  /// Requires x^2 + y^2 + z^2 = 1 within 1e-12.
  SpherePoint(double x, double y, double z);
  /// Normalizes a nonzero direction onto the unit sphere.
  static SpherePoint from_direction(double x, double y, double z);
  static SpherePoint from_lat_lon_deg(double latitude, double longitude);

  double x() const { return x_; }
  double y() const { return y_; }
  double z() const { return z_; }
  double latitude_deg() const;
  /// In [0, 360).
  double longitude_deg() const;
  /// Homogeneous (x, y, z, 1).
  ProjPoint homogeneous() const;

 private:
  double x_, y_, z_;
};

class ExtendedComplex {
 public:
  ExtendedComplex(Scalar value);  // NOLINT: implicit by design of the API
  ExtendedComplex(double value) : ExtendedComplex(Scalar(value)) {}  // NOLINT
  static ExtendedComplex infinity() { return ExtendedComplex(); }
  /// (num : den) on the projective line; den ~ 0 relative to num is infinity.
  static ExtendedComplex from_pair(Scalar num, Scalar den,
                                   double tol = 1e-14);

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws PreconditionError at infinity.
  Scalar value() const;
  /// Homogeneous pair (z, 1) or (1, 0).
  Vector pair() const;

 private:
  ExtendedComplex() = default;
  std::optional<Scalar> value_;
};

/// Projection from the north pole (0,0,1) onto the equatorial plane.
ExtendedComplex stereographic(const SpherePoint& p);
SpherePoint inverse_stereographic(const ExtendedComplex& z);
/// Point of the sphere (as a homogeneous 4-vector) from a ProjPoint image.
SpherePoint sphere_point(const ProjPoint& p);

// ---------------------------------------------------------------------------
// Moebius maps

/// z -> (a w + b) / (c w + d) where w = z, or w = conj(z) when
/// `conjugating` is set.
class MoebiusMap {
 public:
  MoebiusMap(Scalar a, Scalar b, Scalar c, Scalar d, bool conjugating = false);
  static MoebiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }

  Scalar a() const { return a_; }
  Scalar b() const { return b_; }
  Scalar c() const { return c_; }
  Scalar d() const { return d_; }
  bool conjugating() const { return conjugating_; }
  Eigen::Matrix2cd matrix() const;

  MoebiusMap inverse() const;

 private:
  Scalar a_, b_, c_, d_;
  bool conjugating_;
};

/// (m1 * m2) applies m2 first.
MoebiusMap operator*(const MoebiusMap& m1, const MoebiusMap& m2);
ExtendedComplex moebius_apply(const MoebiusMap& m, const ExtendedComplex& z);
/// Action on homogeneous pairs of the complex projective line.
Vector moebius_apply(const MoebiusMap& m, const Vector& pair);

/// The 4x4 collineation of the unit sphere x^2+y^2+z^2 = w^2 conjugate to
/// `m` under stereographic projection, solved from point images. Throws
/// DegenerateError when the linear system is rank deficient.
ProjMap moebius_to_sphere(const MoebiusMap& m);

/// The same map acting on tetracyclic coordinates (see CircleCoords); the
/// result T satisfies T^T T = mu I.
Matrix moebius_to_tetracyclic(const MoebiusMap& m);

// ---------------------------------------------------------------------------
// Conic parametrization and chords

/// Projection of a nondegenerate conic from one of its points onto the
/// pencil of lines through that point. For a finite center the parameter is
/// the affine slope of the line; infinity is the vertical line.
class ConicParametrization {
 public:
  ConicParametrization(Quadric conic, ProjPoint center);

  const Quadric& conic() const { return conic_; }
  const ProjPoint& center() const { return center_; }

  ProjPoint point(const ExtendedComplex& t) const;
  ExtendedComplex parameter(const ProjPoint& x) const;

 private:
  Quadric conic_;
  ProjPoint center_;
  Vector e1_, e2_;
};

ProjPoint conic_param(const Quadric& conic, const ProjPoint& center,
                      const ExtendedComplex& t);

/// Chord through the points with parameters t1, t2; tangent when equal.
Hyperplane hesse_line(const ConicParametrization& param,
                      const ExtendedComplex& t1, const ExtendedComplex& t2);
/// Parameters of the two points where a line meets the conic.
std::pair<ExtendedComplex, ExtendedComplex> hesse_pair(
    const ConicParametrization& param, const Hyperplane& line);

// ---------------------------------------------------------------------------
// Line geometry

/// Pluecker coordinates ordered (p01, p02, p03, p23, p31, p12).
class PlueckerLine {
 public:
  explicit PlueckerLine(Vector p, double tol = kDefaultTolerance);
  const Vector& coords() const { return p_; }

 private:
  Vector p_;
};

/// The Klein quadric p01 p23 + p02 p31 + p03 p12 = 0.
const Quadric& klein_quadric();
/// Bilinear form of the Klein quadric; half the usual reciprocal product.
Scalar klein_pairing(const Vector& a, const Vector& b);
/// Relative value |Omega(p,p)| / |p|^2.
double klein_residual(const Vector& p);

PlueckerLine pluecker_embed(const ProjPoint& a, const ProjPoint& b);
/// Second compound of g acting on line coordinates.
ProjMap pluecker_conjugate(const ProjMap& g);
bool lines_intersect(const PlueckerLine& l1, const PlueckerLine& l2,
                     double tol = 1e-9);

// ---------------------------------------------------------------------------
// Circles

/// Oriented circle in the plane (complex center). Orientation is +1 or -1.
struct Circle {
  Scalar center;
  double radius = 0.0;
  int orientation = 1;
};

/// Oriented line normal . (x, y) = offset with a unit normal.
struct Line {
  Eigen::Vector2d normal;
  double offset = 0.0;
};

struct PointAtInfinity {};

using CircleShape = std::variant<Circle, Line, PointAtInfinity>;

/// Lie coordinates (u1..u5) of an oriented circle, up to scale.
///
/// Normalization: a plane point (x, y) with rho = x^2 + y^2 has tetracyclic
/// coordinates X = (2x, 2y, 1 - rho, i (1 + rho)), which satisfy
/// X1^2 + X2^2 + X3^2 + X4^2 = 0. The circle with center (a, b), radius r
/// and orientation s is u = (-a, -b, (k-1)/2, -i (k+1)/2, i s r) with
/// k = a^2 + b^2 - r^2, so that u1 X1 + ... + u4 X4 = 0 is its equation and
/// u1^2 + ... + u5^2 = 0. The unit circle at the origin is (0, 0, -1, 0,
/// +-i). Point circles have u5 = 0 and coincide with the point's
/// tetracyclic coordinates up to scale. The oriented line n . x = h is
/// (n1, n2, -h, i h, i).
class CircleCoords {
 public:
  explicit CircleCoords(Vector u);
  const Vector& coords() const { return u_; }
  bool is_point_circle(double tol = kDefaultTolerance) const;

 private:
  Vector u_;
};

CircleCoords circle_to_coords(const Circle& c);
CircleCoords line_to_coords(const Line& l);
CircleCoords point_circle(const ExtendedComplex& z);
/// Throws PreconditionError when the coordinates are not those of a real
/// circle, line or point.
CircleShape coords_to_circle(const CircleCoords& c,
                             double tol = kDefaultTolerance);
/// Center of a point circle.
ExtendedComplex circle_point(const CircleCoords& c,
                             double tol = kDefaultTolerance);

struct InversiveAngle {
  /// -(u1 v1 + ... + u4 v4) / (u5 v5); 1 for oriented tangency.
  Scalar cosine;
  Scalar angle;
  /// False when |cosine| > 1 (nested or disjoint circles).
  bool real = true;
};

/// Angle between oriented circles. Oriented tangency gives exactly 0; the
/// cosine equals (r1^2 + r2^2 - d^2) / (2 s1 s2 r1 r2) for circles with
/// orientations s1, s2, so externally touching circles are in oriented
/// contact when their orientation signs differ.
InversiveAngle circle_angle(const CircleCoords& c1, const CircleCoords& c2,
                            double tol = kDefaultTolerance);
/// |u . v| / (|u| |v|) for the 5-variable form; zero iff oriented contact.
double tangency_residual(const CircleCoords& c1, const CircleCoords& c2);

/// Applies M to Lie coordinates after checking M^T M = mu I within tol.
CircleCoords lie_apply(const Matrix& m, const CircleCoords& c,
                       double tol = 1e-9);
bool preserves_sum_of_squares(const Matrix& m, double tol = 1e-9);

// Circles as conics A (x^2 + y^2) + 2 b1 x w + 2 b2 y w + D w^2.
Quadric circle_quadric(const Circle& c);
/// Hermitian form [[A, B], [conj(B), D]] with B = b1 + i b2.
Eigen::Matrix2cd circle_quadric_to_hermitian(const Quadric& q,
                                             double tol = kDefaultTolerance);
Quadric hermitian_to_circle_quadric(const Eigen::Matrix2cd& h);
/// Image of a circle-type conic under a Moebius map.
Quadric moebius_apply(const MoebiusMap& m, const Quadric& circle);

}  // namespace erlangen
