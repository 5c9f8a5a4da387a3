#include "erlangen/cayley_klein.hpp"

#include <cmath>

#include "erlangen/error.hpp"

namespace erlangen {

namespace {

constexpr double kOrderTolerance = 1e-9;

// Lexicographic on (re, im) of max-normalized coordinates, with a small
// dead band so rounding cannot flip the order of nearly equal entries.
bool lex_less(const ProjPoint& a, const ProjPoint& b) {
  const Vector x = normalize_max(a.coords());
  const Vector y = normalize_max(b.coords());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    for (double d : {x[i].real() - y[i].real(), x[i].imag() - y[i].imag()}) {
      if (d < -kOrderTolerance) return true;
      if (d > kOrderTolerance) return false;
    }
  }
  return false;
}

double relative_form(const Quadric& q, const Vector& x, const Vector& y) {
  return std::abs(q.form(x, y)) /
         (q.matrix().norm() * x.norm() * y.norm());
}

Scalar measure(const ProjPoint& p, const ProjPoint& q, const Quadric& absolute,
               Scalar c, double tol) {
  if (equal_up_to_scale(p, q, tol)) return 0.0;
  if (on_quadric(p, absolute, tol) || on_quadric(q, absolute, tol)) {
    throw DivergentDistanceError("point on the absolute: distance diverges");
  }
  const ChordIntersections x = line_quadric_intersections(p, q, absolute, tol);
  const bool swap = lex_less(x.second, x.first);
  const ProjPoint& x1 = swap ? x.second : x.first;
  const ProjPoint& x2 = swap ? x.first : x.second;
  return c * std::log(cross_ratio(p, q, x1, x2, tol));
}

}  // namespace

CKMetric::CKMetric(Quadric absolute, Scalar c)
    : absolute_(std::move(absolute)), c_(c) {
  if (absolute_.is_degenerate()) {
    throw DegenerateError("CKMetric: degenerate absolute");
  }
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag()) ||
      std::abs(c) == 0.0) {
    throw PreconditionError("CKMetric: c must be finite and nonzero");
  }
}

CKMetric CKMetric::hyperbolic(Quadric absolute) {
  return CKMetric(std::move(absolute), 0.5);
}

CKMetric CKMetric::elliptic(Quadric absolute) {
  return CKMetric(std::move(absolute), Scalar(0.0, -0.5));
}

CKMetric CKMetric::klein_disk() {
  return hyperbolic(Quadric::diagonal({1.0, 1.0, -1.0}));
}

CKMetric CKMetric::elliptic_plane() {
  return elliptic(Quadric::diagonal({1.0, 1.0, 1.0}));
}

Scalar ck_distance(const ProjPoint& p, const ProjPoint& q, const CKMetric& m,
                   double tol) {
  return measure(p, q, m.absolute(), m.c(), tol);
}

Scalar ck_angle(const Hyperplane& h1, const Hyperplane& h2, const CKMetric& m,
                double tol) {
  const Quadric dual = m.absolute().dual();
  const ProjPoint a(h1.coeffs());
  const ProjPoint b(h2.coeffs());
  if (on_quadric(a, dual, tol) || on_quadric(b, dual, tol)) {
    throw DegenerateError("hyperplane tangent to the absolute");
  }
  return measure(a, b, dual, m.c(), tol);
}

DegeneracyVerdict on_quadric_degeneracy(const ProjPoint& p, const ProjPoint& q,
                                        const Quadric& quad, double tol) {
  if (!on_quadric(p, quad, tol) || !on_quadric(q, quad, tol)) {
    throw PreconditionError("on_quadric_degeneracy: points must lie on it");
  }
  if (equal_up_to_scale(p, q, 1e-8)) {
    throw PreconditionError("on_quadric_degeneracy: p equals q");
  }
  ChordIntersections x = [&] {
    try {
      return line_quadric_intersections(p, q, quad, tol);
    } catch (const GeneratorError&) {
      return ChordIntersections{p, q, true};
    }
  }();
  if (x.tangent) return DegeneracyVerdict::Indeterminate;
  // The chord meets the quadric only at p and q, which makes
  // CR(p, q; x1, x2) vanish for the labeling with x1 = p.
  const bool matches =
      (equal_up_to_scale(x.first, p, 1e-6) && equal_up_to_scale(x.second, q, 1e-6)) ||
      (equal_up_to_scale(x.first, q, 1e-6) && equal_up_to_scale(x.second, p, 1e-6));
  if (!matches) {
    throw DegenerateError("chord intersections do not reproduce p and q");
  }
  return DegeneracyVerdict::Zero;
}

Scalar induced_surface_distance(const ProjPoint& p, const ProjPoint& q,
                                const Quadric& quad, const ProjPoint& center,
                                Scalar c, double tol) {
  if (!on_quadric(p, quad, tol) || !on_quadric(q, quad, tol)) {
    throw PreconditionError("induced_surface_distance: points off the quadric");
  }
  if (equal_up_to_scale(center, p, tol) || equal_up_to_scale(center, q, tol)) {
    throw PreconditionError("induced_surface_distance: center equals a point");
  }
  if (equal_up_to_scale(p, q, tol)) return 0.0;
  const Vector up = p.unit();
  const Vector uq = q.unit();
  const Vector uo = center.unit();
  // Both points on the quadric and conjugate: the chord is a generator.
  if (relative_form(quad, up, uq) <= tol) return 0.0;

  if (on_quadric(center, quad, tol)) {
    // Homogeneous of degree -2 in o, so o is used as supplied.
    const Vector& o = center.coords();
    const Scalar bop = quad.form(o, up);
    const Scalar boq = quad.form(o, uq);
    if (relative_form(quad, uo, up) <= tol ||
        relative_form(quad, uo, uq) <= tol) {
      throw DegenerateError("point on the tangent plane of the center");
    }
    return c * std::sqrt(-2.0 * quad.form(up, uq) / (bop * boq));
  }

  const Vector pi = quad.matrix() * uo;
  const Scalar pio = bilinear(pi, uo);
  auto project = [&](const Vector& x) {
    const Scalar pix = bilinear(pi, x);
    if (std::abs(pix) <= tol * pi.norm() * x.norm()) {
      throw DegenerateError("point on the polar plane of the center");
    }
    Vector out = x - (pix / pio) * uo;
    return ProjPoint(Vector(out / out.norm()));
  };
  return measure(project(up), project(uq), quad, c, tol);
}

LinearComplex::LinearComplex(Vector coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != 6) {
    throw DimensionError("LinearComplex needs six coordinates");
  }
  if (!all_finite(coeffs_) || coeffs_.norm() == 0.0) {
    throw PreconditionError("LinearComplex must be finite and nonzero");
  }
}

bool LinearComplex::special(double tol) const {
  const Vector u = coeffs_ / coeffs_.norm();
  Scalar s = u[0] * u[3] + u[1] * u[4] + u[2] * u[5];
  return std::abs(s) <= tol;
}

Scalar line_invariant(const LinearComplex& l1, const LinearComplex& l2,
                      const LinearComplex& a, const Quadric& klein,
                      double tol) {
  if (klein.size() != 6) throw DimensionError("Klein quadric must be 6x6");
  const Vector u1 = l1.coeffs() / l1.coeffs().norm();
  const Vector u2 = l2.coeffs() / l2.coeffs().norm();
  const Vector ua = a.coeffs() / a.coeffs().norm();
  if (relative_form(klein, u1, u1) > tol || relative_form(klein, u2, u2) > tol) {
    throw PreconditionError("line_invariant: l1 and l2 must be lines");
  }
  if (relative_form(klein, ua, ua) <= tol) {
    throw PreconditionError("line_invariant: the fixed complex is special");
  }
  if (relative_form(klein, u1, ua) <= tol ||
      relative_form(klein, u2, ua) <= tol) {
    throw DegenerateError("line_invariant: a line belongs to the complex");
  }
  return klein.form(u1, u2) * klein.form(ua, ua) /
         (klein.form(u1, ua) * klein.form(u2, ua));
}

}  // namespace erlangen
