#include "erlangen/projective.hpp"

#include <cmath>
#include <string>

#include "erlangen/error.hpp"

namespace erlangen {

namespace {

// Relative threshold under which the discriminant of the chord quadratic
// counts as zero. Rounding alone leaves about 1e-16 here.
constexpr double kTangentTolerance = 1e-13;

Eigen::Index argmax_abs(const Vector& v) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < v.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[best])) best = i;
  }
  return best;
}

void require_same_size(Eigen::Index a, Eigen::Index b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" +
                         std::to_string(a) + " vs " + std::to_string(b) +
                         ")");
  }
}

}  // namespace

Scalar make_scalar(double re, double im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw PreconditionError("scalar components must be finite");
  }
  return {re, im};
}

bool all_finite(const Vector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag())) {
      return false;
    }
  }
  return true;
}

bool all_finite(const Matrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Scalar s = m.data()[i];
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) return false;
  }
  return true;
}

Scalar bilinear(const Vector& a, const Vector& b) {
  require_same_size(a.size(), b.size(), "bilinear");
  return (a.array() * b.array()).sum();
}

Vector normalize_max(const Vector& v) { return v / v[argmax_abs(v)]; }

bool equal_up_to_scale(const Vector& a, const Vector& b, double tol) {
  if (a.size() != b.size()) return false;
  const Eigen::Index k = argmax_abs(a);
  const double bmax = b.cwiseAbs().maxCoeff();
  if (std::abs(b[k]) <= tol * bmax || bmax == 0.0) return false;
  const Vector na = a / a[k];
  const Vector nb = b / b[k];
  return (na - nb).cwiseAbs().maxCoeff() <= tol;
}

bool equal_up_to_scale(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const Vector va = a.reshaped();
  const Vector vb = b.reshaped();
  return equal_up_to_scale(va, vb, tol);
}

double proportionality_residual(const Matrix& a, const Matrix& b) {
  const Vector va = a.reshaped();
  const Vector vb = b.reshaped();
  const double na = va.squaredNorm();
  const double nb = vb.norm();
  if (nb == 0.0) return na == 0.0 ? 0.0 : 1.0;
  if (na == 0.0) return 1.0;
  const Scalar mu = va.dot(vb) / na;
  return (vb - mu * va).norm() / nb;
}

namespace detail {

Homogeneous::Homogeneous(Vector coords, const char* what)
    : coords_(std::move(coords)) {
  if (coords_.size() < 2) {
    throw DimensionError(std::string(what) + " needs at least 2 coordinates");
  }
  if (!all_finite(coords_)) {
    throw PreconditionError(std::string(what) + " has non-finite entries");
  }
  if (coords_.cwiseAbs().maxCoeff() == 0.0) {
    throw PreconditionError(std::string(what) + " must be nonzero");
  }
}

}  // namespace detail

ProjPoint::ProjPoint(Vector coords)
    : Homogeneous(std::move(coords), "ProjPoint") {}

ProjPoint::ProjPoint(std::initializer_list<Scalar> coords)
    : ProjPoint(Vector(Eigen::Map<const Vector>(
          coords.begin(), static_cast<Eigen::Index>(coords.size())))) {}

Hyperplane::Hyperplane(Vector coeffs)
    : Homogeneous(std::move(coeffs), "Hyperplane") {}

Hyperplane::Hyperplane(std::initializer_list<Scalar> coeffs)
    : Hyperplane(Vector(Eigen::Map<const Vector>(
          coeffs.begin(), static_cast<Eigen::Index>(coeffs.size())))) {}

bool equal_up_to_scale(const ProjPoint& a, const ProjPoint& b, double tol) {
  return equal_up_to_scale(a.coords(), b.coords(), tol);
}

bool equal_up_to_scale(const Hyperplane& a, const Hyperplane& b, double tol) {
  return equal_up_to_scale(a.coords(), b.coords(), tol);
}

// ---------------------------------------------------------------------------
// Quadric

Quadric::Quadric(Matrix m) : matrix_(std::move(m)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 2) {
    throw DimensionError("Quadric matrix must be square, at least 2x2");
  }
  if (!all_finite(matrix_)) {
    throw PreconditionError("Quadric has non-finite entries");
  }
  if (matrix_ != matrix_.transpose()) {
    throw PreconditionError("Quadric matrix must be symmetric");
  }
  if (matrix_.cwiseAbs().maxCoeff() == 0.0) {
    throw PreconditionError("Quadric matrix must be nonzero");
  }
}

Quadric Quadric::symmetrized(const Matrix& m) {
  const Matrix sym = (m + m.transpose()) / 2.0;
  return Quadric(sym);
}

Quadric Quadric::diagonal(std::initializer_list<double> entries) {
  Vector d(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (double e : entries) d[i++] = e;
  return Quadric(Matrix(d.asDiagonal()));
}

Scalar Quadric::form(const Vector& x, const Vector& y) const {
  require_same_size(x.size(), size(), "Quadric::form");
  require_same_size(y.size(), size(), "Quadric::form");
  return (x.transpose() * matrix_ * y)(0, 0);
}

Scalar Quadric::form(const ProjPoint& x, const ProjPoint& y) const {
  return form(x.coords(), y.coords());
}

double Quadric::relative_determinant() const {
  const double norm = matrix_.norm();
  const double det = std::abs(matrix_.fullPivLu().determinant());
  return det / std::pow(norm, static_cast<double>(size()));
}

Quadric Quadric::dual() const {
  if (is_degenerate()) {
    throw DegenerateError("dual of a degenerate quadric");
  }
  Matrix inv = matrix_.fullPivLu().inverse();
  inv /= inv.cwiseAbs().maxCoeff();
  return symmetrized(inv);
}

Hyperplane Quadric::polar(const ProjPoint& p) const {
  require_same_size(p.size(), size(), "Quadric::polar");
  return Hyperplane(Vector(matrix_ * p.coords()));
}

// ---------------------------------------------------------------------------
// ProjMap

ProjMap::ProjMap(Matrix m, double singularity) : matrix_(std::move(m)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 2) {
    throw DimensionError("ProjMap matrix must be square, at least 2x2");
  }
  if (!all_finite(matrix_)) {
    throw PreconditionError("ProjMap has non-finite entries");
  }
  const double norm = matrix_.norm();
  if (norm == 0.0) throw DegenerateError("ProjMap matrix is zero");
  const double det = std::abs(matrix_.fullPivLu().determinant());
  if (det / std::pow(norm, static_cast<double>(matrix_.rows())) <=
      singularity) {
    throw DegenerateError("ProjMap matrix is singular");
  }
}

ProjMap ProjMap::identity(Eigen::Index size) {
  return ProjMap(Matrix::Identity(size, size));
}

ProjMap ProjMap::inverse() const {
  Matrix inv = matrix_.fullPivLu().inverse();
  inv /= inv.cwiseAbs().maxCoeff();
  return ProjMap(std::move(inv), 0.0);
}

ProjMap operator*(const ProjMap& a, const ProjMap& b) {
  require_same_size(a.size(), b.size(), "ProjMap composition");
  Matrix m = a.matrix() * b.matrix();
  m /= m.cwiseAbs().maxCoeff();
  return ProjMap(std::move(m), 0.0);
}

ProjPoint apply(const ProjMap& map, const ProjPoint& point) {
  require_same_size(map.size(), point.size(), "apply");
  Vector v = map.matrix() * point.coords();
  return ProjPoint(Vector(v / v.norm()));
}

Hyperplane apply(const ProjMap& map, const Hyperplane& plane) {
  require_same_size(map.size(), plane.size(), "apply");
  const Matrix inv = map.inverse().matrix();
  Vector v = inv.transpose() * plane.coeffs();
  return Hyperplane(Vector(v / v.norm()));
}

Quadric apply(const ProjMap& map, const Quadric& quadric) {
  require_same_size(map.size(), quadric.size(), "apply");
  const Matrix inv = map.inverse().matrix();
  Matrix m = inv.transpose() * quadric.matrix() * inv;
  m /= m.cwiseAbs().maxCoeff();
  return Quadric::symmetrized(m);
}

ProjMap inverse(const ProjMap& map) { return map.inverse(); }

// ---------------------------------------------------------------------------
// Cross-ratio

namespace {

Scalar cross_ratio_from_params(const Eigen::Matrix<Scalar, 2, 4>& params,
                               double tol) {
  auto d = [&](int i, int j) {
    return params(0, i) * params(1, j) - params(0, j) * params(1, i);
  };
  const Scalar d13 = d(0, 2), d24 = d(1, 3), d14 = d(0, 3), d23 = d(1, 2);
  // Parameters come from unit vectors, so |d| <= 1 and tol is relative.
  if (std::abs(d14) <= tol || std::abs(d23) <= tol) {
    if (std::abs(d13) <= tol || std::abs(d24) <= tol) {
      throw DegenerateError("cross_ratio: coincident points give 0/0");
    }
    throw DegenerateError("cross_ratio: value is infinite");
  }
  return (d13 * d24) / (d14 * d23);
}

}  // namespace

Scalar cross_ratio(const ProjPoint& p1, const ProjPoint& p2,
                   const ProjPoint& p3, const ProjPoint& p4, double tol) {
  const ProjPoint* pts[4] = {&p1, &p2, &p3, &p4};
  for (int i = 1; i < 4; ++i) {
    require_same_size(p1.size(), pts[i]->size(), "cross_ratio");
  }
  Vector u[4];
  for (int i = 0; i < 4; ++i) u[i] = pts[i]->unit();

  // Orthonormal basis (e1, e2) of the common line.
  const Vector e1 = u[0];
  Vector e2;
  double best = -1.0;
  for (int k = 1; k < 4; ++k) {
    Vector r = u[k] - e1 * e1.dot(u[k]);
    const double n = r.norm();
    if (n > best) {
      best = n;
      e2 = r;
    }
  }
  if (best <= tol) {
    throw DegenerateError("cross_ratio: all four points coincide");
  }
  e2 /= best;

  Eigen::Matrix<Scalar, 2, 4> params;
  for (int i = 0; i < 4; ++i) {
    const Scalar a = e1.dot(u[i]);
    const Scalar b = e2.dot(u[i]);
    const double residual = (u[i] - a * e1 - b * e2).norm();
    if (residual > tol) {
      throw PreconditionError("cross_ratio: points are not collinear");
    }
    params(0, i) = a;
    params(1, i) = b;
  }
  return cross_ratio_from_params(params, tol);
}

Scalar cross_ratio(const Vector& t1, const Vector& t2, const Vector& t3,
                   const Vector& t4, double tol) {
  const Vector* ts[4] = {&t1, &t2, &t3, &t4};
  Eigen::Matrix<Scalar, 2, 4> params;
  for (int i = 0; i < 4; ++i) {
    if (ts[i]->size() != 2) {
      throw DimensionError("cross_ratio: parameters must be pairs");
    }
    const double n = ts[i]->norm();
    if (n == 0.0) throw PreconditionError("cross_ratio: zero parameter");
    params.col(i) = *ts[i] / n;
  }
  return cross_ratio_from_params(params, tol);
}

// ---------------------------------------------------------------------------
// Chords and incidence

ChordIntersections line_quadric_intersections(const ProjPoint& a,
                                              const ProjPoint& b,
                                              const Quadric& q, double tol) {
  require_same_size(a.size(), q.size(), "line_quadric_intersections");
  require_same_size(b.size(), q.size(), "line_quadric_intersections");
  if (equal_up_to_scale(a, b, tol)) {
    throw PreconditionError("line_quadric_intersections: a equals b");
  }
  const Vector ua = a.unit();
  const Vector ub = b.unit();
  const Scalar qa = q.form(ua, ua);
  const Scalar qab = q.form(ua, ub);
  const Scalar qb = q.form(ub, ub);
  const double scale = q.matrix().norm();
  if (std::max({std::abs(qa), std::abs(qab), std::abs(qb)}) <= tol * scale) {
    throw GeneratorError("line lies in the quadric (generator)");
  }

  // Roots (lambda : mu) of qa l^2 + 2 qab l m + qb m^2 = 0.
  Scalar disc = qab * qab - qa * qb;
  const bool tangent =
      std::abs(disc) <=
      kTangentTolerance * (std::norm(qab) + std::abs(qa * qb));
  if (tangent) disc = 0.0;
  const Scalar s = std::sqrt(disc);
  const Scalar w1 = -qab - s;
  const Scalar w2 = -qab + s;
  const Scalar w = std::abs(w1) >= std::abs(w2) ? w1 : w2;

  auto point = [&](Scalar lambda, Scalar mu) {
    Vector v = lambda * ua + mu * ub;
    return ProjPoint(Vector(v / v.norm()));
  };

  if (std::abs(w) <= tol * scale) {
    // qab = 0 and qa * qb = 0: a double root at a or b.
    const ProjPoint p = std::abs(qa) >= std::abs(qb) ? point(0.0, 1.0)
                                                     : point(1.0, 0.0);
    return {p, p, true};
  }
  const ProjPoint first = point(w, qa);
  if (tangent) return {first, first, true};
  return {first, point(qb, w), false};
}

bool on_quadric(const ProjPoint& p, const Quadric& q, double tol) {
  require_same_size(p.size(), q.size(), "on_quadric");
  const Scalar v = q.form(p, p);
  return std::abs(v) / (q.matrix().norm() * p.coords().squaredNorm()) < tol;
}

bool incident(const ProjPoint& p, const Hyperplane& h, double tol) {
  require_same_size(p.size(), h.size(), "incident");
  const Scalar v = bilinear(h.coeffs(), p.coords());
  return std::abs(v) / (h.coeffs().norm() * p.coords().norm()) < tol;
}

namespace {

Vector cross3(const Vector& a, const Vector& b) {
  Vector c(3);
  c[0] = a[1] * b[2] - a[2] * b[1];
  c[1] = a[2] * b[0] - a[0] * b[2];
  c[2] = a[0] * b[1] - a[1] * b[0];
  return c;
}

}  // namespace

Hyperplane join(const ProjPoint& a, const ProjPoint& b) {
  if (a.size() != 3 || b.size() != 3) {
    throw DimensionError("join is defined in the projective plane only");
  }
  const Vector c = cross3(a.unit(), b.unit());
  if (c.norm() <= kDefaultTolerance) {
    throw PreconditionError("join: coincident points");
  }
  return Hyperplane(c);
}

ProjPoint meet(const Hyperplane& a, const Hyperplane& b) {
  if (a.size() != 3 || b.size() != 3) {
    throw DimensionError("meet is defined in the projective plane only");
  }
  const Vector c = cross3(a.unit(), b.unit());
  if (c.norm() <= kDefaultTolerance) {
    throw PreconditionError("meet: coincident lines");
  }
  return ProjPoint(c);
}

}  // namespace erlangen
