#include "erlangen/transfers.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "erlangen/error.hpp"

namespace erlangen {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDeg = kPi / 180.0;

Vector vec(std::initializer_list<Scalar> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (Scalar x : xs) v[i++] = x;
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// Sphere and extended plane

SpherePoint::SpherePoint(double x, double y, double z) : x_(x), y_(y), z_(z) {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
    throw PreconditionError("SpherePoint has non-finite coordinates");
  }
  if (std::abs(x * x + y * y + z * z - 1.0) > 1e-12) {
    throw PreconditionError("SpherePoint is not on the unit sphere");
  }
}

SpherePoint SpherePoint::from_direction(double x, double y, double z) {
  const double n = std::sqrt(x * x + y * y + z * z);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw PreconditionError("SpherePoint direction must be nonzero");
  }
  return {x / n, y / n, z / n};
}

SpherePoint SpherePoint::from_lat_lon_deg(double latitude, double longitude) {
  const double lat = latitude * kDeg;
  const double lon = longitude * kDeg;
  return from_direction(std::cos(lat) * std::cos(lon),
                        std::cos(lat) * std::sin(lon), std::sin(lat));
}

double SpherePoint::latitude_deg() const {
  return std::atan2(z_, std::hypot(x_, y_)) / kDeg;
}

double SpherePoint::longitude_deg() const {
  double lon = std::atan2(y_, x_) / kDeg;
  if (lon < 0.0) lon += 360.0;
  if (lon >= 360.0) lon -= 360.0;
  return lon;
}

ProjPoint SpherePoint::homogeneous() const {
  return ProjPoint{x_, y_, z_, 1.0};
}

ExtendedComplex::ExtendedComplex(Scalar value) : value_(value) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw PreconditionError(
        "ExtendedComplex: use infinity() for the point at infinity");
  }
}

ExtendedComplex ExtendedComplex::from_pair(Scalar num, Scalar den,
                                           double tol) {
  if (std::abs(num) == 0.0 && std::abs(den) == 0.0) {
    throw PreconditionError("ExtendedComplex: (0 : 0) is not a point");
  }
  if (std::abs(den) <= tol * std::abs(num)) return infinity();
  return ExtendedComplex(num / den);
}

Scalar ExtendedComplex::value() const {
  if (!value_) throw PreconditionError("ExtendedComplex is infinite");
  return *value_;
}

Vector ExtendedComplex::pair() const {
  return value_ ? vec({*value_, 1.0}) : vec({1.0, 0.0});
}

ExtendedComplex stereographic(const SpherePoint& p) {
  const Scalar w(p.x(), p.y());
  if (p.z() > 0.0) {
    const double r2 = p.x() * p.x() + p.y() * p.y();
    if (r2 == 0.0) return ExtendedComplex::infinity();
    return ExtendedComplex((1.0 + p.z()) * w / r2);
  }
  return ExtendedComplex(w / (1.0 - p.z()));
}

SpherePoint inverse_stereographic(const ExtendedComplex& z) {
  if (z.is_infinite()) return {0.0, 0.0, 1.0};
  const Scalar w = z.value();
  const double s = std::norm(w);
  if (s <= 1.0) {
    return SpherePoint::from_direction(2.0 * w.real(), 2.0 * w.imag(),
                                       s - 1.0);
  }
  // Work with 1/w to stay finite for very large |w|.
  const Scalar v = 1.0 / w;
  const double t = std::norm(v);
  const Scalar xy = 2.0 * std::conj(v) / (1.0 + t);
  return SpherePoint::from_direction(xy.real(), xy.imag(),
                                     (1.0 - t) / (1.0 + t));
}

SpherePoint sphere_point(const ProjPoint& p) {
  if (p.size() != 4) throw DimensionError("sphere_point: need 4 coordinates");
  const Vector v = normalize_max(p.coords());
  const Scalar w = v[3];
  if (std::abs(w) < 1e-12) {
    throw PreconditionError("sphere_point: point at infinity");
  }
  const Vector a = v / w;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(a[i].imag()) > 1e-9) {
      throw PreconditionError("sphere_point: point is not real");
    }
  }
  const double x = a[0].real(), y = a[1].real(), z = a[2].real();
  if (std::abs(x * x + y * y + z * z - 1.0) > 1e-8) {
    throw PreconditionError("sphere_point: point is not on the unit sphere");
  }
  return SpherePoint::from_direction(x, y, z);
}

// ---------------------------------------------------------------------------
// Moebius maps

MoebiusMap::MoebiusMap(Scalar a, Scalar b, Scalar c, Scalar d,
                       bool conjugating)
    : a_(a), b_(b), c_(c), d_(d), conjugating_(conjugating) {
  const Vector entries = vec({a, b, c, d});
  if (!all_finite(entries)) {
    throw PreconditionError("MoebiusMap has non-finite coefficients");
  }
  const double scale = entries.cwiseAbs().maxCoeff();
  if (std::abs(a * d - b * c) <= kSingularityThreshold * scale * scale) {
    throw DegenerateError("MoebiusMap: ad - bc vanishes");
  }
}

Eigen::Matrix2cd MoebiusMap::matrix() const {
  Eigen::Matrix2cd m;
  m << a_, b_, c_, d_;
  return m;
}

namespace {

MoebiusMap from_matrix(Eigen::Matrix2cd m, bool conjugating) {
  m /= m.cwiseAbs().maxCoeff();
  return {m(0, 0), m(0, 1), m(1, 0), m(1, 1), conjugating};
}

}  // namespace

MoebiusMap MoebiusMap::inverse() const {
  Eigen::Matrix2cd adj;
  adj << d_, -b_, -c_, a_;
  return from_matrix(conjugating_ ? Eigen::Matrix2cd(adj.conjugate()) : adj,
                     conjugating_);
}

MoebiusMap operator*(const MoebiusMap& m1, const MoebiusMap& m2) {
  const Eigen::Matrix2cd a2 =
      m1.conjugating() ? Eigen::Matrix2cd(m2.matrix().conjugate())
                       : m2.matrix();
  return from_matrix(m1.matrix() * a2, m1.conjugating() != m2.conjugating());
}

ExtendedComplex moebius_apply(const MoebiusMap& m, const ExtendedComplex& z) {
  if (z.is_infinite()) {
    return ExtendedComplex::from_pair(m.a(), m.c(), 0.0);
  }
  const Scalar w = m.conjugating() ? std::conj(z.value()) : z.value();
  const Scalar num = m.a() * w + m.b();
  const Scalar den = m.c() * w + m.d();
  if (std::abs(den) <= 1e-15 * (std::abs(m.c() * w) + std::abs(m.d()))) {
    return ExtendedComplex::infinity();
  }
  return ExtendedComplex(num / den);
}

Vector moebius_apply(const MoebiusMap& m, const Vector& pair) {
  if (pair.size() != 2) {
    throw DimensionError("moebius_apply: expected a homogeneous pair");
  }
  const Vector w = m.conjugating() ? Vector(pair.conjugate()) : pair;
  return m.matrix() * w;
}

ProjMap moebius_to_sphere(const MoebiusMap& m) {
  static const std::array<std::array<double, 3>, 8> kDirections = {{
      {0, 0, 1},
      {0, 0, -1},
      {1, 0, 0},
      {0, 1, 0},
      {-1, 2, 2},
      {2, -1, 2},
      {2, 2, -1},
      {-2, -1, -2},
  }};
  Eigen::MatrixXd system(8 * 6, 16);
  int row = 0;
  for (const auto& dir : kDirections) {
    const SpherePoint p = SpherePoint::from_direction(dir[0], dir[1], dir[2]);
    const SpherePoint q =
        inverse_stereographic(moebius_apply(m, stereographic(p)));
    Eigen::Vector4d pv(p.x(), p.y(), p.z(), 1.0);
    Eigen::Vector4d qv(q.x(), q.y(), q.z(), 1.0);
    pv.normalize();
    qv.normalize();
    // M p parallel to q: q_i (M p)_j - q_j (M p)_i = 0.
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        system.row(row).setZero();
        for (int c = 0; c < 4; ++c) {
          system(row, 4 * j + c) += qv[i] * pv[c];
          system(row, 4 * i + c) -= qv[j] * pv[c];
        }
        ++row;
      }
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(system, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  if (sv[14] <= 1e-8 * sv[0]) {
    throw DegenerateError("moebius_to_sphere: point system is rank deficient");
  }
  Eigen::VectorXd sol = svd.matrixV().col(15);
  Eigen::Index k;
  sol.cwiseAbs().maxCoeff(&k);
  sol /= sol[k];
  Matrix mat(4, 4);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) mat(r, c) = sol[4 * r + c];
  }
  return ProjMap(std::move(mat));
}

Matrix moebius_to_tetracyclic(const MoebiusMap& m) {
  const Vector p = vec({1.0, 1.0, -1.0, Scalar(0.0, 1.0)});
  const Matrix sphere = moebius_to_sphere(m).matrix();
  return p.asDiagonal() * sphere * p.cwiseInverse().asDiagonal();
}

// ---------------------------------------------------------------------------
// Conic parametrization and chords

ConicParametrization::ConicParametrization(Quadric conic, ProjPoint center)
    : conic_(std::move(conic)), center_(std::move(center)) {
  if (conic_.size() != 3 || center_.size() != 3) {
    throw DimensionError("ConicParametrization: plane conics only");
  }
  if (conic_.is_degenerate(1e-10)) {
    throw DegenerateError("ConicParametrization: degenerate conic");
  }
  if (!on_quadric(center_, conic_, 1e-9)) {
    throw PreconditionError("ConicParametrization: center not on the conic");
  }
  const Vector o = center_.unit();
  Eigen::Index skip = 2;
  if (std::abs(o[2]) < 1e-3) o.cwiseAbs().maxCoeff(&skip);
  e1_ = Vector::Zero(3);
  e2_ = Vector::Zero(3);
  const Eigen::Index first = skip == 0 ? 1 : 0;
  const Eigen::Index second = skip == 2 ? 1 : 2;
  e1_[first] = 1.0;
  e2_[second] = 1.0;
}

ProjPoint ConicParametrization::point(const ExtendedComplex& t) const {
  const Vector o = center_.unit();
  const Vector d = t.is_infinite() ? e2_ : Vector(e1_ + t.value() * e2_);
  const Scalar qdd = conic_.form(d, d);
  const Scalar bod = conic_.form(o, d);
  const Vector x = qdd * o - 2.0 * bod * d;
  if (x.norm() <= 1e-14 * d.squaredNorm() * conic_.matrix().norm()) {
    throw DegenerateError("conic_param: line lies in the conic");
  }
  return ProjPoint(Vector(x / x.norm()));
}

ExtendedComplex ConicParametrization::parameter(const ProjPoint& x) const {
  const Vector o = center_.unit();
  if (equal_up_to_scale(x, center_, 1e-9)) {
    // Tangent line at the center.
    return ExtendedComplex::from_pair(-conic_.form(o, e1_),
                                      conic_.form(o, e2_));
  }
  Matrix basis(3, 3);
  basis.col(0) = o;
  basis.col(1) = e1_;
  basis.col(2) = e2_;
  const Vector coeff = basis.fullPivLu().solve(x.unit());
  return ExtendedComplex::from_pair(coeff[2], coeff[1]);
}

ProjPoint conic_param(const Quadric& conic, const ProjPoint& center,
                      const ExtendedComplex& t) {
  return ConicParametrization(conic, center).point(t);
}

Hyperplane hesse_line(const ConicParametrization& param,
                      const ExtendedComplex& t1, const ExtendedComplex& t2) {
  const ProjPoint x1 = param.point(t1);
  const ProjPoint x2 = param.point(t2);
  if (equal_up_to_scale(x1, x2, 1e-9)) return param.conic().polar(x1);
  return join(x1, x2);
}

std::pair<ExtendedComplex, ExtendedComplex> hesse_pair(
    const ConicParametrization& param, const Hyperplane& line) {
  if (line.size() != 3) throw DimensionError("hesse_pair: plane lines only");
  const Eigen::RowVector3cd h = line.unit().transpose();
  const Matrix kernel = Eigen::FullPivLU<Matrix>(h).kernel();
  const ChordIntersections hits = line_quadric_intersections(
      ProjPoint(Vector(kernel.col(0))), ProjPoint(Vector(kernel.col(1))),
      param.conic());
  return {param.parameter(hits.first), param.parameter(hits.second)};
}

// ---------------------------------------------------------------------------
// Line geometry

namespace {

constexpr std::array<std::pair<int, int>, 6> kPlueckerPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {3, 1}, {1, 2}}};

Vector wedge(const Vector& a, const Vector& b) {
  Vector p(6);
  for (int k = 0; k < 6; ++k) {
    const auto [i, j] = kPlueckerPairs[k];
    p[k] = a[i] * b[j] - a[j] * b[i];
  }
  return p;
}

}  // namespace

PlueckerLine::PlueckerLine(Vector p, double tol) : p_(std::move(p)) {
  if (p_.size() != 6) throw DimensionError("PlueckerLine needs 6 coordinates");
  if (!all_finite(p_) || p_.norm() == 0.0) {
    throw PreconditionError("PlueckerLine must be finite and nonzero");
  }
  if (klein_residual(p_) > tol) {
    throw PreconditionError("PlueckerLine is not on the Klein quadric");
  }
}

const Quadric& klein_quadric() {
  static const Quadric kKlein = [] {
    Matrix k = Matrix::Zero(6, 6);
    for (int i = 0; i < 3; ++i) {
      k(i, i + 3) = 0.5;
      k(i + 3, i) = 0.5;
    }
    return Quadric(k);
  }();
  return kKlein;
}

Scalar klein_pairing(const Vector& a, const Vector& b) {
  if (a.size() != 6 || b.size() != 6) {
    throw DimensionError("klein_pairing needs 6-vectors");
  }
  return 0.5 * (a[0] * b[3] + a[3] * b[0] + a[1] * b[4] + a[4] * b[1] +
                a[2] * b[5] + a[5] * b[2]);
}

double klein_residual(const Vector& p) {
  return std::abs(klein_pairing(p, p)) / p.squaredNorm();
}

PlueckerLine pluecker_embed(const ProjPoint& a, const ProjPoint& b) {
  if (a.size() != 4 || b.size() != 4) {
    throw DimensionError("pluecker_embed: points of 3-space expected");
  }
  const Vector p = wedge(a.unit(), b.unit());
  if (p.norm() <= kDefaultTolerance) {
    throw PreconditionError("pluecker_embed: coincident points");
  }
  return PlueckerLine(p);
}

ProjMap pluecker_conjugate(const ProjMap& g) {
  if (g.size() != 4) {
    throw DimensionError("pluecker_conjugate: 4x4 map expected");
  }
  Matrix c(6, 6);
  for (int k = 0; k < 6; ++k) {
    const auto [i, j] = kPlueckerPairs[k];
    c.col(k) = wedge(g.matrix().col(i), g.matrix().col(j));
  }
  return ProjMap(std::move(c));
}

bool lines_intersect(const PlueckerLine& l1, const PlueckerLine& l2,
                     double tol) {
  return std::abs(klein_pairing(l1.coords(), l2.coords())) /
             (l1.coords().norm() * l2.coords().norm()) <=
         tol;
}

// ---------------------------------------------------------------------------
// Circles

namespace {

const Scalar kI(0.0, 1.0);

// Lorentz-signature coordinates (C1, C2, C3, C4, C5) with
// u = (C1, C2, C3, i C4, i C5), made real by removing a common phase.
Eigen::Matrix<double, 5, 1> real_lorentz(const Vector& u, double tol) {
  Vector c(5);
  c << u[0], u[1], u[2], -kI * u[3], -kI * u[4];
  Eigen::Index k;
  c.cwiseAbs().maxCoeff(&k);
  c *= std::abs(c[k]) / c[k];
  const double norm = c.norm();
  if (c.imag().cwiseAbs().maxCoeff() > std::max(tol, 1e-9) * norm) {
    throw PreconditionError("circle coordinates do not describe a real circle");
  }
  return c.real() / norm;
}

}  // namespace

CircleCoords::CircleCoords(Vector u) : u_(std::move(u)) {
  if (u_.size() != 5) throw DimensionError("CircleCoords needs 5 entries");
  if (!all_finite(u_) || u_.norm() == 0.0) {
    throw PreconditionError("CircleCoords must be finite and nonzero");
  }
}

bool CircleCoords::is_point_circle(double tol) const {
  return std::abs(u_[4]) <= tol * u_.norm();
}

CircleCoords circle_to_coords(const Circle& c) {
  if (!std::isfinite(c.radius) || c.radius < 0.0) {
    throw PreconditionError("circle radius must be finite and >= 0");
  }
  if (c.orientation != 1 && c.orientation != -1) {
    throw PreconditionError("circle orientation must be +1 or -1");
  }
  const double a = c.center.real();
  const double b = c.center.imag();
  const double k = a * a + b * b - c.radius * c.radius;
  return CircleCoords(vec({-a, -b, (k - 1.0) / 2.0, -kI * (k + 1.0) / 2.0,
                           kI * static_cast<double>(c.orientation) *
                               c.radius}));
}

CircleCoords line_to_coords(const Line& l) {
  const double n = l.normal.norm();
  if (!(n > 0.0) || !std::isfinite(n) || !std::isfinite(l.offset)) {
    throw PreconditionError("line normal must be finite and nonzero");
  }
  const Eigen::Vector2d u = l.normal / n;
  const double h = l.offset / n;
  return CircleCoords(vec({u[0], u[1], -h, kI * h, kI}));
}

CircleCoords point_circle(const ExtendedComplex& z) {
  if (z.is_infinite()) return CircleCoords(vec({0.0, 0.0, -1.0, kI, 0.0}));
  return circle_to_coords({z.value(), 0.0, 1});
}

CircleShape coords_to_circle(const CircleCoords& coords, double tol) {
  const Eigen::Matrix<double, 5, 1> c = real_lorentz(coords.coords(), tol);
  const double lie = c[0] * c[0] + c[1] * c[1] + c[2] * c[2] - c[3] * c[3] -
                     c[4] * c[4];
  if (std::abs(lie) > std::max(tol, 1e-9)) {
    throw PreconditionError("coordinates are off the Lie quadric");
  }
  const double kappa = -(c[2] + c[3]);
  if (std::abs(kappa) <= tol) {
    if (std::hypot(c[0], c[1]) <= std::sqrt(tol)) return PointAtInfinity{};
    const double s = c[4];
    Line line;
    line.normal = Eigen::Vector2d(c[0], c[1]) / s;
    line.offset = -c[2] / s;
    const double n = line.normal.norm();
    line.normal /= n;
    line.offset /= n;
    return line;
  }
  const Eigen::Matrix<double, 5, 1> n = c / kappa;
  Circle circle;
  circle.center = Scalar(-n[0], -n[1]);
  circle.radius = std::abs(n[4]);
  circle.orientation = n[4] < 0.0 ? -1 : 1;
  return circle;
}

ExtendedComplex circle_point(const CircleCoords& c, double tol) {
  if (!c.is_point_circle(std::max(tol, 1e-9))) {
    throw PreconditionError("circle_point: not a point circle");
  }
  const CircleShape shape = coords_to_circle(c, tol);
  if (std::holds_alternative<PointAtInfinity>(shape)) {
    return ExtendedComplex::infinity();
  }
  if (const auto* circle = std::get_if<Circle>(&shape)) return circle->center;
  throw PreconditionError("circle_point: not a point circle");
}

InversiveAngle circle_angle(const CircleCoords& c1, const CircleCoords& c2,
                            double tol) {
  if (c1.is_point_circle(tol) || c2.is_point_circle(tol)) {
    throw PreconditionError("circle_angle: point circle has no angle");
  }
  const Vector& u = c1.coords();
  const Vector& v = c2.coords();
  const Scalar s4 = bilinear(u.head(4), v.head(4));
  const Scalar p5 = u[4] * v[4];
  InversiveAngle out;
  out.cosine = -s4 / p5;
  const Scalar one_minus = (s4 + p5) / p5;
  const double c = out.cosine.real();
  const bool real_valued =
      std::abs(out.cosine.imag()) <= 1e-9 * std::max(1.0, std::abs(c));
  if (real_valued && std::abs(c) <= 1.0 + 1e-12) {
    const double half = std::clamp(one_minus.real() / 2.0, 0.0, 1.0);
    out.angle = 2.0 * std::asin(std::sqrt(half));
    out.real = true;
  } else {
    out.angle = std::acos(out.cosine);
    out.real = false;
  }
  return out;
}

double tangency_residual(const CircleCoords& c1, const CircleCoords& c2) {
  return std::abs(bilinear(c1.coords(), c2.coords())) /
         (c1.coords().norm() * c2.coords().norm());
}

bool preserves_sum_of_squares(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const Matrix gram = m.transpose() * m;
  return proportionality_residual(Matrix::Identity(m.rows(), m.cols()),
                                  gram) <= tol;
}

CircleCoords lie_apply(const Matrix& m, const CircleCoords& c, double tol) {
  if (m.rows() != 5 || m.cols() != 5) {
    throw DimensionError("lie_apply: 5x5 matrix expected");
  }
  if (!preserves_sum_of_squares(m, tol)) {
    throw PreconditionError(
        "lie_apply: matrix does not preserve the 5-variable form");
  }
  const Vector v = m * c.coords();
  return CircleCoords(Vector(v / v.norm()));
}

Quadric circle_quadric(const Circle& c) {
  const double a = c.center.real();
  const double b = c.center.imag();
  Matrix q(3, 3);
  q << 1.0, 0.0, -a, 0.0, 1.0, -b, -a, -b, a * a + b * b - c.radius * c.radius;
  return Quadric(q);
}

Eigen::Matrix2cd circle_quadric_to_hermitian(const Quadric& q, double tol) {
  if (q.size() != 3) throw DimensionError("circle quadric must be 3x3");
  Matrix m = q.matrix();
  Eigen::Index r, c;
  m.cwiseAbs().maxCoeff(&r, &c);
  m *= std::abs(m(r, c)) / m(r, c);
  const double scale = m.cwiseAbs().maxCoeff();
  const double eps = std::max(tol, 1e-9) * scale;
  if (m.imag().cwiseAbs().maxCoeff() > eps ||
      std::abs(m(0, 0) - m(1, 1)) > eps || std::abs(m(0, 1)) > eps) {
    throw PreconditionError("quadric is not a circle");
  }
  Eigen::Matrix2cd h;
  const Scalar b(m(0, 2).real(), m(1, 2).real());
  h << m(0, 0).real(), b, std::conj(b), m(2, 2).real();
  return h;
}

Quadric hermitian_to_circle_quadric(const Eigen::Matrix2cd& h) {
  const double a = h(0, 0).real();
  const Scalar b = h(0, 1);
  const double d = h(1, 1).real();
  Matrix q(3, 3);
  q << a, 0.0, b.real(), 0.0, a, b.imag(), b.real(), b.imag(), d;
  q /= q.cwiseAbs().maxCoeff();
  return Quadric(q);
}

Quadric moebius_apply(const MoebiusMap& m, const Quadric& circle) {
  const Eigen::Matrix2cd h = circle_quadric_to_hermitian(circle);
  const Eigen::Matrix2cd n = m.matrix().inverse();
  const Eigen::Matrix2cd inner =
      m.conjugating() ? Eigen::Matrix2cd(h.transpose()) : h;
  Eigen::Matrix2cd out = n.adjoint() * inner * n;
  out = (out + out.adjoint()) / 2.0;
  return hermitian_to_circle_quadric(out);
}

}  // namespace erlangen
