#include "erlangen/properties.hpp"

#include <algorithm>
#include <cmath>

#include "erlangen/cayley_klein.hpp"
#include "erlangen/error.hpp"
#include "erlangen/random.hpp"
#include "erlangen/transfers.hpp"

namespace erlangen {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDecision = 1e-8;

using Value = std::optional<PropertyValue>;

Eigen::VectorXd affine(const ProjPoint& p) {
  const Eigen::Index n = p.size() - 1;
  const Scalar w = p[n];
  if (std::abs(w) <= 1e-12 * p.coords().cwiseAbs().maxCoeff()) {
    throw DegenerateError("point at infinity");
  }
  const Vector a = p.coords() / w;
  return a.head(n).real();
}

ProjPoint homogeneous(const Eigen::VectorXd& x) {
  Vector v(x.size() + 1);
  v.head(x.size()) = x.cast<Scalar>();
  v[x.size()] = 1.0;
  return ProjPoint(v);
}

Eigen::VectorXd random_vector(Rng& rng, int n, double lo, double hi) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = uniform(rng, lo, hi);
  return v;
}

Eigen::VectorXd random_direction(Rng& rng, int n) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = gaussian(rng);
  return v / v.norm();
}

// Four well-separated parameters in [-2, 2].
std::array<double, 4> separated_parameters(Rng& rng) {
  for (;;) {
    std::array<double, 4> t;
    for (double& x : t) x = uniform(rng, -2.0, 2.0);
    std::array<double, 4> s = t;
    std::sort(s.begin(), s.end());
    if (s[1] - s[0] > 0.1 && s[2] - s[1] > 0.1 && s[3] - s[2] > 0.1) return t;
  }
}

const ProjPoint& point_at(const Configuration& c, std::size_t i) {
  return std::get<ProjPoint>(c[i]);
}

double smallest_singular_ratio(const Configuration& c) {
  const Eigen::Index rows = static_cast<Eigen::Index>(c.size());
  Matrix m(rows, point_at(c, 0).size());
  for (Eigen::Index i = 0; i < rows; ++i) {
    m.row(i) = point_at(c, static_cast<std::size_t>(i)).unit().transpose();
  }
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  return sv[sv.size() - 1] / sv[0];
}

// --- values -----------------------------------------------------------------

Value euclidean_distance(const Configuration& c) {
  return PropertyValue(
      Scalar((affine(point_at(c, 0)) - affine(point_at(c, 1))).norm()));
}

Value point_angle(const Configuration& c) {
  const Eigen::VectorXd b = affine(point_at(c, 1));
  const Eigen::VectorXd u = affine(point_at(c, 0)) - b;
  const Eigen::VectorXd v = affine(point_at(c, 2)) - b;
  const double cosine = std::clamp(u.dot(v) / (u.norm() * v.norm()), -1.0, 1.0);
  return PropertyValue(Scalar(std::acos(cosine)));
}

Value collinear(const Configuration& c) {
  return PropertyValue(smallest_singular_ratio(c) <= kDecision);
}

Value point_cross_ratio(const Configuration& c) {
  return PropertyValue(cross_ratio(point_at(c, 0), point_at(c, 1),
                                   point_at(c, 2), point_at(c, 3)));
}

Value line_cross_ratio(const Configuration& c) {
  return PropertyValue(
      cross_ratio(point_at(c, 0).coords(), point_at(c, 1).coords(),
                  point_at(c, 2).coords(), point_at(c, 3).coords()));
}

Value point_on_hyperplane(const Configuration& c) {
  return PropertyValue(
      incident(point_at(c, 0), std::get<Hyperplane>(c[1]), kDecision));
}

Value hyperplane_tangent(const Configuration& c) {
  const Quadric dual = std::get<Quadric>(c[0]).dual();
  const ProjPoint h(std::get<Hyperplane>(c[1]).coeffs());
  return PropertyValue(on_quadric(h, dual, kDecision));
}

Value point_on_conic(const Configuration& c) {
  return PropertyValue(on_quadric(point_at(c, 0), std::get<Quadric>(c[1]),
                                  kDecision));
}

// Two circles are tangent iff their pencil has a double degenerate member.
Value circles_tangent(const Configuration& c) {
  Eigen::Matrix2cd h1 = circle_quadric_to_hermitian(std::get<Quadric>(c[0]));
  Eigen::Matrix2cd h2 = circle_quadric_to_hermitian(std::get<Quadric>(c[1]));
  h1 /= h1.norm();
  h2 /= h2.norm();
  const Scalar d1 = h1.determinant(), d2 = h2.determinant();
  const Scalar mid = h1(0, 0) * h2(1, 1) + h2(0, 0) * h1(1, 1) -
                     h1(0, 1) * h2(1, 0) - h1(1, 0) * h2(0, 1);
  return PropertyValue(std::abs(mid * mid - 4.0 * d1 * d2) <= kDecision);
}

Value lie_contact(const Configuration& c) {
  return PropertyValue(tangency_residual(CircleCoords(point_at(c, 0).coords()),
                                         CircleCoords(point_at(c, 1).coords())) <=
                       kDecision);
}

Value inversive_cosine(const Configuration& c) {
  return PropertyValue(circle_angle(CircleCoords(point_at(c, 0).coords()),
                                    CircleCoords(point_at(c, 1).coords()))
                           .cosine);
}

Value point_circle_distance(const Configuration& c) {
  const ExtendedComplex a = circle_point(CircleCoords(point_at(c, 0).coords()));
  const ExtendedComplex b = circle_point(CircleCoords(point_at(c, 1).coords()));
  if (a.is_infinite() || b.is_infinite()) return std::nullopt;
  return PropertyValue(Scalar(std::abs(a.value() - b.value())));
}

// --- samplers ---------------------------------------------------------------

ConfigSampler random_points(int n, int count) {
  return [n, count](std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Element> out;
    for (int i = 0; i < count; ++i) {
      out.emplace_back(homogeneous(random_vector(rng, n, -1.0, 1.0)));
    }
    return Configuration(std::move(out));
  };
}

ConfigSampler collinear_quadruple(int n) {
  return [n](std::uint64_t seed) {
    Rng rng(seed);
    const Eigen::VectorXd p = random_vector(rng, n, -1.0, 1.0);
    const Eigen::VectorXd d = random_direction(rng, n);
    std::vector<Element> out;
    for (double t : separated_parameters(rng)) {
      out.emplace_back(homogeneous(p + t * d));
    }
    return Configuration(std::move(out));
  };
}

ConfigSampler maybe_collinear_triple(int n) {
  return [n](std::uint64_t seed) {
    Rng rng(seed);
    const Eigen::VectorXd a = random_vector(rng, n, -1.0, 1.0);
    const Eigen::VectorXd b = random_vector(rng, n, -1.0, 1.0);
    const Eigen::VectorXd c =
        coin(rng) ? Eigen::VectorXd(a + uniform(rng, -2.0, 2.0) * (b - a))
                  : random_vector(rng, n, -1.0, 1.0);
    return Configuration({homogeneous(a), homogeneous(b), homogeneous(c)});
  };
}

ConfigSampler point_and_hyperplane(int n) {
  return [n](std::uint64_t seed) {
    Rng rng(seed);
    const Eigen::VectorXd normal = random_direction(rng, n);
    const double offset = uniform(rng, -1.0, 1.0);
    Eigen::VectorXd x = random_vector(rng, n, -1.0, 1.0);
    if (coin(rng)) x -= (normal.dot(x) - offset) * normal;
    Vector h(n + 1);
    h.head(n) = normal.cast<Scalar>();
    h[n] = -offset;
    return Configuration({homogeneous(x), Hyperplane(h)});
  };
}

Quadric sphere(const Eigen::VectorXd& center, double r) {
  const Eigen::Index n = center.size();
  Eigen::MatrixXd q = Eigen::MatrixXd::Identity(n + 1, n + 1);
  q.topRightCorner(n, 1) = -center;
  q.bottomLeftCorner(1, n) = -center.transpose();
  q(n, n) = center.squaredNorm() - r * r;
  return Quadric(Matrix(q.cast<Scalar>()));
}

ConfigSampler sphere_and_hyperplane(int n) {
  return [n](std::uint64_t seed) {
    Rng rng(seed);
    const Eigen::VectorXd c = random_vector(rng, n, -1.0, 1.0);
    const double r = uniform(rng, 0.5, 1.0);
    const Eigen::VectorXd u = random_direction(rng, n);
    double s = r;
    if (coin(rng)) {
      s = coin(rng) ? r * uniform(rng, 0.0, 0.9) : r * uniform(rng, 1.1, 2.0);
    }
    Vector h(n + 1);
    h.head(n) = u.cast<Scalar>();
    h[n] = -(u.dot(c) + s);
    return Configuration({sphere(c, r), Hyperplane(h)});
  };
}

ConfigSampler disk_pair(bool inside) {
  return [inside](std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Element> out;
    for (int i = 0; i < 2; ++i) {
      Eigen::VectorXd x(2);
      if (inside) {
        const double rho = 0.9 * std::sqrt(uniform(rng, 0.0, 1.0));
        const double phi = uniform(rng, 0.0, 2.0 * kPi);
        x << rho * std::cos(phi), rho * std::sin(phi);
      } else {
        x = random_vector(rng, 2, -1.0, 1.0);
      }
      out.emplace_back(homogeneous(x));
    }
    return Configuration(std::move(out));
  };
}

ConfigSampler complex_quadruple() {
  return [](std::uint64_t seed) {
    Rng rng(seed);
    const std::array<double, 4> re = separated_parameters(rng);
    std::vector<Element> out;
    for (double x : re) {
      out.emplace_back(ProjPoint{Scalar(x, uniform(rng, -2.0, 2.0)), 1.0});
    }
    return Configuration(std::move(out));
  };
}

struct CirclePair {
  Circle a;
  Circle b;
};

// Oriented pair; with `tangent` the circles touch in oriented contact
// (externally with opposite orientations, internally with equal ones).
CirclePair circle_pair(Rng& rng, bool tangent, bool intersecting) {
  Circle a{Scalar(uniform(rng, -1, 1), uniform(rng, -1, 1)),
            uniform(rng, 0.3, 1.0), coin(rng) ? 1 : -1};
  double rb = uniform(rng, 0.3, 1.0);
  const double phi = uniform(rng, 0.0, 2.0 * kPi);
  const Scalar dir = std::polar(1.0, phi);
  Circle b{0.0, rb, coin(rng) ? 1 : -1};
  if (tangent) {
    if (coin(rng)) {
      b.center = a.center + (a.radius + rb) * dir;
      b.orientation = -a.orientation;
    } else {
      if (std::abs(a.radius - rb) < 0.05) b.radius = rb = a.radius + 0.2;
      b.center = a.center + std::abs(a.radius - rb) * dir;
      b.orientation = a.orientation;
    }
  } else if (intersecting) {
    const double lo = std::abs(a.radius - rb), hi = a.radius + rb;
    b.center = a.center + uniform(rng, lo + 0.1 * (hi - lo), hi - 0.1 * (hi - lo)) * dir;
  } else {
    b.center = Scalar(uniform(rng, -1, 1), uniform(rng, -1, 1));
  }
  return {a, b};
}

ConfigSampler circle_quadric_pair() {
  return [](std::uint64_t seed) {
    Rng rng(seed);
    const bool tangent = coin(rng);
    const CirclePair p = circle_pair(rng, tangent, false);
    return Configuration({circle_quadric(p.a), circle_quadric(p.b)});
  };
}

ConfigSampler plane_point_and_circle() {
  return [](std::uint64_t seed) {
    Rng rng(seed);
    const CirclePair p = circle_pair(rng, false, false);
    Scalar z(uniform(rng, -1, 1), uniform(rng, -1, 1));
    if (coin(rng)) z = p.a.center + std::polar(p.a.radius, uniform(rng, 0, 2 * kPi));
    return Configuration({ProjPoint{z.real(), z.imag(), 1.0}, circle_quadric(p.a)});
  };
}

ConfigSampler circle_coords_pair(bool allow_tangent, bool intersecting) {
  return [=](std::uint64_t seed) {
    Rng rng(seed);
    const bool tangent = allow_tangent && coin(rng);
    const CirclePair p = circle_pair(rng, tangent, intersecting);
    return Configuration({ProjPoint(circle_to_coords(p.a).coords()),
                          ProjPoint(circle_to_coords(p.b).coords())});
  };
}

ConfigSampler point_circle_and_circle() {
  return [](std::uint64_t seed) {
    Rng rng(seed);
    const CirclePair p = circle_pair(rng, false, false);
    Scalar z(uniform(rng, -1, 1), uniform(rng, -1, 1));
    if (coin(rng)) z = p.a.center + std::polar(p.a.radius, uniform(rng, 0, 2 * kPi));
    return Configuration({ProjPoint(point_circle(z).coords()),
                          ProjPoint(circle_to_coords(p.a).coords())});
  };
}

ConfigSampler point_circle_pair() {
  return [](std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Element> out;
    for (int i = 0; i < 2; ++i) {
      const Scalar z(uniform(rng, -1, 1), uniform(rng, -1, 1));
      out.emplace_back(ProjPoint(point_circle(z).coords()));
    }
    return Configuration(std::move(out));
  };
}

PropertySpec ck_distance_property(const std::optional<std::string>& metric,
                                  int dimension) {
  if (!metric) {
    throw PreconditionError("ck-distance requires a metric");
  }
  if (dimension != 2) {
    throw InapplicableError("ck-distance metrics are planar");
  }
  if (*metric != "klein-disk" && *metric != "elliptic") {
    throw PreconditionError("unknown metric: " + *metric);
  }
  const bool disk = *metric == "klein-disk";
  const CKMetric m = disk ? CKMetric::klein_disk() : CKMetric::elliptic_plane();
  Property p{"ck-distance", [m](const Configuration& c) -> Value {
               const Scalar d = ck_distance(point_at(c, 0), point_at(c, 1), m);
               // Distances are defined up to sign.
               return PropertyValue(Scalar(std::abs(d)));
             }};
  return {p, disk_pair(disk)};
}

}  // namespace

const std::vector<std::string>& builtin_property_names() {
  static const std::vector<std::string> names = {
      "euclidean-distance", "angle",        "cross-ratio", "incidence",
      "tangency",           "collinearity", "ck-distance"};
  return names;
}

PropertySpec builtin_property(const std::string& name, const GroupDescriptor& g,
                              const std::optional<std::string>& metric) {
  const auto& names = builtin_property_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw PreconditionError("unknown property: " + name);
  }
  auto make = [&](auto fn, ConfigSampler sampler) {
    return PropertySpec{Property{name, fn}, std::move(sampler)};
  };
  auto unavailable = [&]() -> PropertySpec {
    throw InapplicableError("property '" + name + "' has no sampler for " +
                            g.name + " in dimension " +
                            std::to_string(g.dimension));
  };

  switch (g.carrier) {
    case Carrier::AffineSpace: {
      const int n = g.dimension;
      if (name == "euclidean-distance") return make(euclidean_distance, random_points(n, 2));
      if (name == "angle") return make(point_angle, random_points(n, 3));
      if (name == "cross-ratio") return make(point_cross_ratio, collinear_quadruple(n));
      if (name == "incidence") return make(point_on_hyperplane, point_and_hyperplane(n));
      if (name == "tangency") return make(hyperplane_tangent, sphere_and_hyperplane(n));
      if (name == "collinearity") return make(collinear, maybe_collinear_triple(n));
      return ck_distance_property(metric, n);
    }
    case Carrier::ComplexLine: {
      if (name == "euclidean-distance") return make(euclidean_distance, random_points(2, 2));
      if (name == "angle") return make(point_angle, random_points(2, 3));
      if (name == "cross-ratio") return make(line_cross_ratio, complex_quadruple());
      if (name == "incidence") return make(point_on_conic, plane_point_and_circle());
      if (name == "tangency") return make(circles_tangent, circle_quadric_pair());
      if (name == "collinearity") return make(collinear, maybe_collinear_triple(2));
      return ck_distance_property(metric, 2);
    }
    case Carrier::CircleCoordinates: {
      if (g.dimension != 2) return unavailable();
      if (name == "euclidean-distance") return make(point_circle_distance, point_circle_pair());
      if (name == "angle") return make(inversive_cosine, circle_coords_pair(false, true));
      if (name == "incidence") return make(lie_contact, point_circle_and_circle());
      if (name == "tangency") return make(lie_contact, circle_coords_pair(true, false));
      return unavailable();
    }
  }
  return unavailable();
}

}  // namespace erlangen
