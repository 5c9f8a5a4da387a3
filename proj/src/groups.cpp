#include "erlangen/groups.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "erlangen/error.hpp"
#include "erlangen/random.hpp"

namespace erlangen {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const Scalar kI(0.0, 1.0);

FiveMap chain(const FiveMap& outer, const FiveMap& inner) {
  return FiveMap([outer, inner](const Vec5& v) { return outer(inner(v)); },
                 [outer, inner](const Vec5& v) {
                   const auto j_inner = inner.jacobian(v);
                   const Vec5 mid = inner(v);
                   const auto j_outer =
                       mid.allFinite() ? outer.jacobian(mid) : std::nullopt;
                   if (!j_inner || !j_outer) {
                     return Mat5(Mat5::Constant(
                         std::numeric_limits<double>::quiet_NaN()));
                   }
                   return Mat5(*j_outer * *j_inner);
                 });
}

Matrix as_complex(const Eigen::MatrixXd& m) { return m.cast<Scalar>(); }

ProjMap affine_map(const Eigen::MatrixXd& a, const Eigen::VectorXd& t) {
  const Eigen::Index n = a.rows();
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n + 1, n + 1);
  m.topLeftCorner(n, n) = a;
  m.topRightCorner(n, 1) = t;
  return ProjMap(as_complex(m));
}

Eigen::VectorXd uniform_vector(Rng& rng, int n, double lo, double hi) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = uniform(rng, lo, hi);
  return v;
}

// U diag(log-uniform [1/4, 4]) V with orthogonal U, V.
Eigen::MatrixXd well_conditioned(Rng& rng, int n) {
  const Eigen::MatrixXd u = random_orthogonal(rng, n, true);
  Eigen::VectorXd s(n);
  for (int i = 0; i < n; ++i) s[i] = log_uniform(rng, 0.25, 4.0);
  const Eigen::MatrixXd v = random_orthogonal(rng, n, true);
  return u * s.asDiagonal() * v;
}

// Real representative of a map known up to (complex) scale, or nullopt.
std::optional<Eigen::MatrixXd> real_representative(const Matrix& m,
                                                   double tol) {
  if (!is_real_up_to_phase(m, tol)) return std::nullopt;
  Eigen::Index r, c;
  m.cwiseAbs().maxCoeff(&r, &c);
  const Matrix scaled = m / m(r, c);
  return Eigen::MatrixXd(scaled.real());
}

const ProjMap* as_proj(const Transformation& t) {
  return std::get_if<ProjMap>(&t.forward());
}

// Affine-normalized real matrix (bottom-right entry 1), or nullopt when the
// map is not an affine map of the given dimension.
std::optional<Eigen::MatrixXd> affine_part(const Transformation& t, int n,
                                           double tol) {
  const ProjMap* p = as_proj(t);
  if (!p || p->size() != n + 1) return std::nullopt;
  auto real = real_representative(p->matrix(), tol);
  if (!real) return std::nullopt;
  Eigen::MatrixXd m = *real;
  const double scale = m.cwiseAbs().maxCoeff();
  if (std::abs(m(n, n)) <= tol * scale) return std::nullopt;
  m /= m(n, n);
  const double norm = std::max(1.0, m.cwiseAbs().maxCoeff());
  for (int j = 0; j < n; ++j) {
    if (std::abs(m(n, j)) > tol * norm) return std::nullopt;
  }
  return m;
}

// Factor mu with A^T A = mu I, or nullopt.
std::optional<double> conformal_factor(const Eigen::MatrixXd& a, double tol) {
  const Eigen::MatrixXd g = a.transpose() * a;
  const double mu = g.trace() / static_cast<double>(a.rows());
  if (!(mu > 0.0)) return std::nullopt;
  const Eigen::MatrixXd dev =
      g - mu * Eigen::MatrixXd::Identity(a.rows(), a.cols());
  if (dev.cwiseAbs().maxCoeff() > tol * mu) return std::nullopt;
  return mu;
}

// D = diag(1, ..., 1, i, ..., i) with q imaginary entries.
Vector lorentz_diagonal(int n, int q) {
  Vector d = Vector::Ones(n);
  for (int k = n - q; k < n; ++k) d[k] = kI;
  return d;
}

GroupDescriptor make_group(std::string name, int dimension, Carrier carrier,
                           Transformation identity,
                           std::function<Transformation(std::uint64_t)> sample,
                           std::function<bool(const Transformation&, double)>
                               contains) {
  return GroupDescriptor{
      std::move(name),
      dimension,
      carrier,
      std::move(identity),
      [](const Transformation& a, const Transformation& b) {
        return compose(a, b);
      },
      [](const Transformation& a) { return invert(a); },
      std::move(sample),
      std::move(contains)};
}

GroupDescriptor affine_family(const std::string& name, int n) {
  const Transformation id(ProjMap::identity(n + 1));
  if (name == "projective") {
    return make_group(
        name, n, Carrier::AffineSpace, id,
        [n](std::uint64_t seed) {
          Rng rng(seed);
          return Transformation(ProjMap(as_complex(well_conditioned(rng, n + 1))));
        },
        [n](const Transformation& t, double tol) {
          const ProjMap* p = as_proj(t);
          return p && p->size() == n + 1 &&
                 is_real_up_to_phase(p->matrix(), tol);
        });
  }
  if (name == "affine") {
    return make_group(
        name, n, Carrier::AffineSpace, id,
        [n](std::uint64_t seed) {
          Rng rng(seed);
          const Eigen::MatrixXd a = well_conditioned(rng, n);
          return Transformation(affine_map(a, uniform_vector(rng, n, -1, 1)));
        },
        [n](const Transformation& t, double tol) {
          return affine_part(t, n, tol).has_value();
        });
  }
  const bool principal = name == "principal";
  return make_group(
      name, n, Carrier::AffineSpace, id,
      [n, principal](std::uint64_t seed) {
        Rng rng(seed);
        Eigen::MatrixXd a = random_orthogonal(rng, n, true);
        if (principal) a *= log_uniform(rng, 0.25, 4.0);
        return Transformation(affine_map(a, uniform_vector(rng, n, -1, 1)));
      },
      [n, principal](const Transformation& t, double tol) {
        const auto m = affine_part(t, n, tol);
        if (!m) return false;
        const auto mu = conformal_factor(m->topLeftCorner(n, n), tol);
        if (!mu) return false;
        return principal || std::abs(*mu - 1.0) <= tol;
      });
}

GroupDescriptor moebius_group() {
  return make_group(
      "moebius", 2, Carrier::ComplexLine, Transformation(MoebiusMap::identity()),
      [](std::uint64_t seed) {
        Rng rng(seed);
        for (;;) {
          Scalar e[4];
          for (Scalar& x : e) {
            const double re = uniform(rng, -1.0, 1.0);
            x = Scalar(re, uniform(rng, -1.0, 1.0));
          }
          const bool conjugating = coin(rng);
          if (std::abs(e[0] * e[3] - e[1] * e[2]) >= 0.2) {
            return Transformation(MoebiusMap(e[0], e[1], e[2], e[3], conjugating));
          }
        }
      },
      [](const Transformation& t, double) {
        return std::holds_alternative<MoebiusMap>(t.forward());
      });
}

// Linear maps D L D^-1 of circle coordinates with L in O(p, q).
GroupDescriptor circle_group(const std::string& name, int dimension, int p,
                             int q) {
  const int size = p + q;
  const Vector d = lorentz_diagonal(size, q);
  return make_group(
      name, dimension, Carrier::CircleCoordinates,
      Transformation(CircleMap{ProjMap::identity(size)}),
      [d, p, q](std::uint64_t seed) {
        Rng rng(seed);
        const Matrix l = as_complex(random_indefinite_orthogonal(rng, p, q));
        const Matrix m = d.asDiagonal() * l * d.cwiseInverse().asDiagonal();
        return Transformation(CircleMap{ProjMap(m)});
      },
      [d, size](const Transformation& t, double tol) {
        const CircleMap* c = std::get_if<CircleMap>(&t.forward());
        if (!c || c->map.size() != size) return false;
        const Matrix& m = c->map.matrix();
        const Matrix gram = m.transpose() * m;
        const Scalar mu = gram.trace() / static_cast<double>(size);
        if (std::abs(mu) == 0.0) return false;
        const Matrix dev = gram - mu * Matrix::Identity(size, size);
        if (dev.cwiseAbs().maxCoeff() > tol * std::abs(mu)) return false;
        const Matrix lorentz =
            d.cwiseInverse().asDiagonal() * m * d.asDiagonal();
        return is_real_up_to_phase(lorentz, tol);
      });
}

// Fixed evaluation elements for comparing contact maps.
const std::vector<Vec5>& probe_elements() {
  static const std::vector<Vec5> probes = [] {
    std::vector<Vec5> out;
    for (std::uint64_t k = 0; k < 8; ++k) {
      Rng rng(derive_seed(0x0c0ffee, k));
      Vec5 v;
      for (int i = 0; i < 5; ++i) v[i] = uniform(rng, -1.0, 1.0);
      out.push_back(v);
    }
    return out;
  }();
  return probes;
}

Eigen::VectorXd real_affine(const Vector& v, double tol) {
  const Eigen::Index n = v.size() - 1;
  const double scale = v.cwiseAbs().maxCoeff();
  if (std::abs(v[n]) <= tol * scale) {
    throw DegenerateError("point at infinity has no affine coordinates");
  }
  const Vector a = v / v[n];
  if (a.imag().cwiseAbs().maxCoeff() > tol * a.cwiseAbs().maxCoeff()) {
    throw InapplicableError("map acts on real points only");
  }
  return a.head(n).real();
}

Element apply_moebius(const MoebiusMap& m, const Element& e) {
  if (const auto* p = std::get_if<ProjPoint>(&e)) {
    if (p->size() == 2) return ProjPoint(moebius_apply(m, p->coords()));
    if (p->size() == 3) {
      const Eigen::VectorXd a = real_affine(p->coords(), 1e-12);
      const ExtendedComplex z = moebius_apply(m, ExtendedComplex(Scalar(a[0], a[1])));
      if (z.is_infinite()) {
        throw DegenerateError("Moebius image is the point at infinity");
      }
      return ProjPoint{z.value().real(), z.value().imag(), 1.0};
    }
  }
  if (const auto* q = std::get_if<Quadric>(&e)) {
    if (q->size() == 3) return moebius_apply(m, *q);
  }
  throw InapplicableError(
      "Moebius maps act on complex-line pairs, plane points and circles");
}

Element apply_linear(const ProjMap& m, const Element& e) {
  return std::visit(
      [&](const auto& x) -> Element {
        if (x.size() != m.size()) {
          throw InapplicableError("map and element sizes differ");
        }
        return apply(m, x);
      },
      e);
}

Element apply_circle(const CircleMap& c, const Element& e) {
  if (const auto* p = std::get_if<ProjPoint>(&e)) {
    const Eigen::Index k = c.map.size();
    if (p->size() == k + 1) {
      const Matrix& m = c.map.matrix();
      const Scalar mu = (m.transpose() * m).trace() / static_cast<double>(k);
      Vector out(k + 1);
      out.head(k) = m * p->coords().head(k);
      out[k] = std::sqrt(mu) * p->coords()[k];
      return ProjPoint(out);
    }
  }
  return apply_linear(c.map, e);
}

Element apply_contact(const FiveMap& f, const Element& e) {
  const auto* p = std::get_if<ProjPoint>(&e);
  if (!p || p->size() != 6) {
    throw InapplicableError("contact maps act on points (x:y:z:p:q:1)");
  }
  const Eigen::VectorXd a = real_affine(p->coords(), 1e-12);
  const Vec5 image = f(Vec5(a));
  if (!image.allFinite()) {
    throw DegenerateError("contact map is singular at this element");
  }
  Vector out(6);
  out.head(5) = image.cast<Scalar>();
  out[5] = 1.0;
  return ProjPoint(out);
}

}  // namespace

// ---------------------------------------------------------------------------
// Transformation

Transformation::Transformation(ProjMap m)
    : forward_(m), inverse_(m.inverse()) {}
Transformation::Transformation(MoebiusMap m)
    : forward_(m), inverse_(m.inverse()) {}
Transformation::Transformation(CircleMap m)
    : forward_(m), inverse_(CircleMap{m.map.inverse()}) {}
Transformation::Transformation(ContactMapRef forward, ContactMapRef inverse)
    : forward_(std::move(forward)), inverse_(std::move(inverse)) {
  if (!std::get<ContactMapRef>(forward_) || !std::get<ContactMapRef>(inverse_)) {
    throw PreconditionError("contact transformation needs both directions");
  }
}
Transformation::Transformation(MapVariant forward, MapVariant inverse)
    : forward_(std::move(forward)), inverse_(std::move(inverse)) {}

MapKind Transformation::kind() const {
  return static_cast<MapKind>(forward_.index());
}

Transformation invert(const Transformation& t) {
  return Transformation(t.inverse_, t.forward_);
}

Transformation compose(const Transformation& a, const Transformation& b) {
  if (a.kind() != b.kind()) {
    throw InapplicableError("cannot compose transformations of different kinds");
  }
  auto product = [](const MapVariant& x, const MapVariant& y) -> MapVariant {
    return std::visit(
        Overloaded{
            [&](const ProjMap& m) -> MapVariant {
              const ProjMap& n = std::get<ProjMap>(y);
              if (m.size() != n.size()) {
                throw InapplicableError("map sizes differ");
              }
              return m * n;
            },
            [&](const MoebiusMap& m) -> MapVariant {
              return m * std::get<MoebiusMap>(y);
            },
            [&](const CircleMap& m) -> MapVariant {
              const CircleMap& n = std::get<CircleMap>(y);
              if (m.map.size() != n.map.size()) {
                throw InapplicableError("map sizes differ");
              }
              return CircleMap{m.map * n.map};
            },
            [&](const ContactMapRef& m) -> MapVariant {
              return std::make_shared<const FiveMap>(
                  chain(*m, *std::get<ContactMapRef>(y)));
            }},
        x);
  };
  return Transformation(product(a.forward_, b.forward_),
                        product(b.inverse_, a.inverse_));
}

bool same_transformation(const Transformation& a, const Transformation& b,
                         double tol) {
  if (a.kind() != b.kind()) return false;
  return std::visit(
      Overloaded{
          [&](const ProjMap& m) {
            return equal_up_to_scale(m.matrix(),
                                     std::get<ProjMap>(b.forward()).matrix(),
                                     tol);
          },
          [&](const MoebiusMap& m) {
            const MoebiusMap& n = std::get<MoebiusMap>(b.forward());
            return m.conjugating() == n.conjugating() &&
                   equal_up_to_scale(Matrix(m.matrix()), Matrix(n.matrix()),
                                     tol);
          },
          [&](const CircleMap& m) {
            return equal_up_to_scale(
                m.map.matrix(), std::get<CircleMap>(b.forward()).map.matrix(),
                tol);
          },
          [&](const ContactMapRef& m) {
            const FiveMap& n = *std::get<ContactMapRef>(b.forward());
            for (const Vec5& v : probe_elements()) {
              const Vec5 x = (*m)(v);
              const Vec5 y = n(v);
              if (!x.allFinite() || !y.allFinite()) continue;
              if ((x - y).cwiseAbs().maxCoeff() >
                  tol * (1.0 + x.cwiseAbs().maxCoeff())) {
                return false;
              }
            }
            return true;
          }},
      a.forward());
}

// ---------------------------------------------------------------------------
// Configurations

Configuration::Configuration(std::vector<Element> elements)
    : elements_(std::move(elements)) {
  if (elements_.empty()) {
    throw PreconditionError("Configuration must be nonempty");
  }
}

Configuration Configuration::with(Element extra) const {
  std::vector<Element> out = elements_;
  out.push_back(std::move(extra));
  return Configuration(std::move(out));
}

bool equal_up_to_scale(const Element& a, const Element& b, double tol) {
  if (a.index() != b.index()) return false;
  return std::visit(
      Overloaded{[&](const ProjPoint& x) {
                   return equal_up_to_scale(x, std::get<ProjPoint>(b), tol);
                 },
                 [&](const Hyperplane& x) {
                   return equal_up_to_scale(x, std::get<Hyperplane>(b), tol);
                 },
                 [&](const Quadric& x) {
                   return equal_up_to_scale(x.matrix(),
                                            std::get<Quadric>(b).matrix(), tol);
                 }},
      a);
}

Element apply(const Transformation& t, const Element& e) {
  return std::visit(
      Overloaded{
          [&](const ProjMap& m) { return apply_linear(m, e); },
          [&](const MoebiusMap& m) { return apply_moebius(m, e); },
          [&](const CircleMap& m) { return apply_circle(m, e); },
          [&](const ContactMapRef& m) { return apply_contact(*m, e); }},
      t.forward());
}

Configuration apply(const Transformation& t, const Configuration& c) {
  std::vector<Element> out;
  out.reserve(c.size());
  for (const Element& e : c.elements()) out.push_back(apply(t, e));
  return Configuration(std::move(out));
}

// ---------------------------------------------------------------------------
// Builtin groups

const std::vector<std::string>& builtin_group_names() {
  static const std::vector<std::string> names = {
      "euclidean_isometries", "principal",
      "affine",               "projective",
      "moebius",              "inversive_pentaspherical",
      "lie_sphere_extended"};
  return names;
}

GroupDescriptor builtin_group(const std::string& name, int dimension) {
  const bool metric = dimension == 2 || dimension == 3;
  if (name == "euclidean_isometries" || name == "principal") {
    if (!metric) {
      throw PreconditionError(name + " supports dimension 2 or 3");
    }
    return affine_family(name, dimension);
  }
  if (name == "affine" || name == "projective") {
    if (dimension < 1) {
      throw PreconditionError(name + " needs dimension >= 1");
    }
    return affine_family(name, dimension);
  }
  if (name == "moebius") {
    if (dimension != 2) throw PreconditionError("moebius supports dimension 2");
    return moebius_group();
  }
  if (name == "inversive_pentaspherical") {
    if (!metric) throw PreconditionError(name + " supports dimension 2 or 3");
    return circle_group(name, dimension, dimension + 1, 1);
  }
  if (name == "lie_sphere_extended") {
    if (!metric) throw PreconditionError(name + " supports dimension 2 or 3");
    return circle_group(name, dimension, dimension + 1, 2);
  }
  throw PreconditionError("unknown group: " + name);
}

// ---------------------------------------------------------------------------
// Axioms

AxiomReport check_group_axioms(const GroupDescriptor& g, std::uint64_t seed,
                               std::size_t trials, double tol) {
  if (trials < 1) throw PreconditionError("check_group_axioms: trials >= 1");
  AxiomReport report;
  report.group = g.name;
  report.trials = trials;
  report.tolerance = tol;
  auto guarded = [](auto&& check) {
    try {
      return static_cast<bool>(check());
    } catch (const Error&) {
      return false;
    }
  };
  auto fail = [&](AxiomCheck check, std::uint64_t s, std::size_t k) {
    switch (check) {
      case AxiomCheck::Closure: ++report.closure_failures; break;
      case AxiomCheck::Inverse: ++report.inverse_failures; break;
      case AxiomCheck::Identity: ++report.identity_failures; break;
    }
    report.failures.push_back({check, s, k});
  };
  for (std::size_t k = 0; k < trials; ++k) {
    const std::uint64_t s = derive_seed(seed, k);
    const Transformation a = g.sample(derive_seed(s, 0));
    const Transformation b = g.sample(derive_seed(s, 1));
    if (!guarded([&] { return g.contains(g.compose(a, b), tol); })) {
      fail(AxiomCheck::Closure, s, k);
    }
    if (!guarded([&] {
          const Transformation inv = g.invert(a);
          return g.contains(inv, tol) &&
                 same_transformation(g.compose(a, inv), g.identity, tol) &&
                 same_transformation(g.compose(inv, a), g.identity, tol);
        })) {
      fail(AxiomCheck::Inverse, s, k);
    }
    if (!guarded([&] {
          return g.contains(g.identity, tol) &&
                 same_transformation(g.compose(g.identity, a), a, tol) &&
                 same_transformation(g.compose(a, g.identity), a, tol);
        })) {
      fail(AxiomCheck::Identity, s, k);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Stabilizers, invariance, orbits

bool stabilizes(const Transformation& t, const Configuration& c, double tol) {
  for (const Element& e : c.elements()) {
    const Element image = apply(t, e);
    const bool found =
        std::any_of(c.elements().begin(), c.elements().end(),
                    [&](const Element& x) { return equal_up_to_scale(x, image, tol); });
    if (!found) return false;
  }
  return true;
}

bool values_match(const PropertyValue& a, const PropertyValue& b, double tol) {
  if (a.index() != b.index()) return false;
  if (const bool* x = std::get_if<bool>(&a)) return *x == std::get<bool>(b);
  const Scalar x = std::get<Scalar>(a);
  const Scalar y = std::get<Scalar>(b);
  const double scale = std::max({1.0, std::abs(x), std::abs(y)});
  return std::abs(x - y) <= tol * scale;
}

Verdict invariance_test(const Property& property, const GroupDescriptor& g,
                        const ConfigSampler& sampler, std::uint64_t seed,
                        std::size_t trials, double tol) {
  if (trials < 1) throw PreconditionError("invariance_test: trials >= 1");
  Verdict verdict;
  verdict.property = property.name;
  verdict.group = g.name;
  verdict.trials = trials;
  verdict.tolerance = tol;
  auto evaluate = [&](const Configuration& c) -> std::optional<PropertyValue> {
    try {
      return property.evaluate(c);
    } catch (const Error&) {
      return std::nullopt;
    }
  };
  for (std::size_t k = 0; k < trials; ++k) {
    const std::uint64_t s = derive_seed(seed, k);
    const Configuration config = sampler(derive_seed(s, 0));
    const Transformation t = g.sample(derive_seed(s, 1));
    const auto before = evaluate(config);
    std::optional<PropertyValue> after;
    if (before) {
      try {
        after = evaluate(apply(t, config));
      } catch (const Error&) {
        after.reset();
      }
    }
    if (!before || !after) {
      ++verdict.undefined;
      continue;
    }
    ++verdict.executed;
    if (!values_match(*before, *after, tol)) {
      verdict.invariant = false;
      verdict.witness = Witness{config, t, *before, *after, s};
      return verdict;
    }
  }
  if (verdict.undefined * 10 > trials * 9) {
    throw PreconditionError("property '" + property.name +
                            "' is undefined on more than 90% of samples");
  }
  return verdict;
}

bool is_real_up_to_phase(const Matrix& m, double tol) {
  Eigen::Index r, c;
  const double scale = m.cwiseAbs().maxCoeff(&r, &c);
  if (scale == 0.0) return false;
  const Matrix rotated = m * (std::abs(m(r, c)) / m(r, c));
  return rotated.imag().cwiseAbs().maxCoeff() <= tol * scale;
}

namespace {

Eigen::MatrixXd require_real_plane_map(const ProjMap& m, double tol) {
  if (m.size() != 3) {
    throw DimensionError("similarity test needs a 3x3 plane map");
  }
  auto real = real_representative(m.matrix(), tol);
  if (!real) throw PreconditionError("similarity test needs a real map");
  return *real;
}

}  // namespace

bool is_similarity_via_circular_points(const ProjMap& m, double tol) {
  require_real_plane_map(m, tol);
  const ProjPoint i_point{1.0, kI, 0.0};
  const ProjPoint j_point{1.0, -kI, 0.0};
  auto in_pair = [&](const ProjPoint& x) {
    const ProjPoint image = apply(m, x);
    return equal_up_to_scale(i_point, image, tol) ||
           equal_up_to_scale(j_point, image, tol);
  };
  return in_pair(i_point) && in_pair(j_point);
}

bool is_similarity_direct(const ProjMap& m, double tol) {
  Eigen::MatrixXd r = require_real_plane_map(m, tol);
  const double scale = r.cwiseAbs().maxCoeff();
  if (std::abs(r(2, 2)) <= tol * scale) return false;
  r /= r(2, 2);
  const double norm = std::max(1.0, r.cwiseAbs().maxCoeff());
  if (std::abs(r(2, 0)) > tol * norm || std::abs(r(2, 1)) > tol * norm) {
    return false;
  }
  return conformal_factor(r.topLeftCorner(2, 2), tol).has_value();
}

std::vector<Configuration> orbit_sample(const Configuration& c,
                                        const GroupDescriptor& g,
                                        std::uint64_t seed, std::size_t count) {
  if (count < 1) throw PreconditionError("orbit_sample: count >= 1");
  std::vector<Configuration> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(apply(g.sample(derive_seed(seed, k)), c));
  }
  return out;
}

ProjMap translation(const Eigen::VectorXd& t) {
  return affine_map(Eigen::MatrixXd::Identity(t.size(), t.size()), t);
}

GroupDescriptor point_stabilizer(const GroupDescriptor& g, const ProjPoint& f) {
  if (g.carrier != Carrier::AffineSpace || f.size() != g.dimension + 1) {
    throw PreconditionError("point_stabilizer needs an affine-space group");
  }
  const Eigen::VectorXd target = real_affine(f.coords(), 1e-12);
  GroupDescriptor out = g;
  out.name = g.name + "|stab";
  const auto base_sample = g.sample;
  out.sample = [base_sample, f, target](std::uint64_t seed) {
    const Transformation t = base_sample(seed);
    const ProjMap* m = std::get_if<ProjMap>(&t.forward());
    if (!m) throw InapplicableError("point_stabilizer: projective maps only");
    const Eigen::VectorXd moved = real_affine(apply(*m, f).coords(), 1e-12);
    return compose(Transformation(translation(target - moved)), t);
  };
  const auto base_contains = g.contains;
  out.contains = [base_contains, f](const Transformation& t, double tol) {
    return base_contains(t, tol) &&
           stabilizes(t, Configuration({Element(f)}), tol);
  };
  return out;
}

}  // namespace erlangen
