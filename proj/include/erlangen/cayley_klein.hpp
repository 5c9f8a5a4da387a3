#pragma once

// Projective measurement against an absolute quadric. Distances are
// c * log of a cross-ratio, so they are defined up to sign (and, for
// complex absolutes, up to the branch of the logarithm); the principal
// value is returned.

#include "erlangen/projective.hpp"

namespace erlangen {

class CKMetric {
 public:
  /// Throws DegenerateError for a degenerate absolute.
  CKMetric(Quadric absolute, Scalar c);

  /// c = 1/2: the unit-curvature model for a real absolute.
  static CKMetric hyperbolic(Quadric absolute);
  /// c = 1/(2i): the unit-curvature model for an absolute without real points.
  static CKMetric elliptic(Quadric absolute);
  /// x^2 + y^2 - z^2 with c = 1/2.
  static CKMetric klein_disk();
  /// x^2 + y^2 + z^2 with c = 1/(2i).
  static CKMetric elliptic_plane();

  const Quadric& absolute() const { return absolute_; }
  Scalar c() const { return c_; }

 private:
  Quadric absolute_;
  Scalar c_;
};

/// c * log CR(p, q; x1, x2) where x1, x2 are the chord's intersections with
/// the absolute, labeled in lexicographic order of their max-normalized
/// coordinates. Zero for p = q. Throws DivergentDistanceError when p or q
/// lies on the absolute and GeneratorError when the chord lies in it.
Scalar ck_distance(const ProjPoint& p, const ProjPoint& q, const CKMetric& m,
                   double tol = kDefaultTolerance);

/// The dual measurement: hyperplanes against the dual absolute, i.e. the
/// two tangent hyperplanes of the pencil. Throws DegenerateError when h1
/// or h2 is itself tangent to the absolute.
Scalar ck_angle(const Hyperplane& h1, const Hyperplane& h2, const CKMetric& m,
                double tol = kDefaultTolerance);

/// For two points of a quadric the chord meets it exactly in those points,
/// so the cross-ratio with them is zero (Zero) unless the chord lies in
/// the quadric (Indeterminate).
enum class DegeneracyVerdict { Zero, Indeterminate };

/// Throws PreconditionError when a point is off the quadric or p = q.
DegeneracyVerdict on_quadric_degeneracy(const ProjPoint& p, const ProjPoint& q,
                                        const Quadric& quad,
                                        double tol = kDefaultTolerance);

/// Measurement on a quadric surface induced by a fixed point o.
///
/// o off the quadric: p and q are projected from o onto the polar plane
/// pi = Q o (p' = p - (pi.p / pi.o) o), where the quadric cuts out the
/// apparent contour, and the distance is the projective one with respect
/// to that contour conic and constant c.
///
/// o on the quadric: d = c * sqrt(-2 B(p, q) / (B(o, p) B(o, q))), which for
/// the unit sphere and o the north pole is the Euclidean distance of the
/// stereographic images (c = 1). This value scales as 1 / |o|, so the
/// representative of o is used exactly as given.
///
/// Points on a common generator are at distance 0. Throws PreconditionError
/// when p or q is off the quadric or equals o, and DegenerateError when p or
/// q lies on the polar plane of o.
Scalar induced_surface_distance(const ProjPoint& p, const ProjPoint& q,
                                const Quadric& quad, const ProjPoint& center,
                                Scalar c, double tol = kDefaultTolerance);

/// A point of the five-dimensional space of line coordinates.
class LinearComplex {
 public:
  explicit LinearComplex(Vector coeffs);
  const Vector& coeffs() const { return coeffs_; }
  /// A special complex lies on the Klein quadric: it is a line.
  bool special(double tol = kDefaultTolerance) const;

 private:
  Vector coeffs_;
};

/// I = Omega(l1, l2) Omega(a, a) / (Omega(l1, a) Omega(l2, a)), invariant
/// under maps preserving the Klein quadric and fixing a. Zero iff the
/// lines meet. Throws PreconditionError when l1 or l2 is not special or a
/// is, and DegenerateError when a line belongs to the complex.
Scalar line_invariant(const LinearComplex& l1, const LinearComplex& l2,
                      const LinearComplex& a, const Quadric& klein,
                      double tol = kDefaultTolerance);

}  // namespace erlangen
