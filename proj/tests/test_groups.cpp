#include <doctest.h>

#include <cmath>

#include "erlangen/error.hpp"
#include "erlangen/groups.hpp"
#include "erlangen/properties.hpp"
#include "erlangen/random.hpp"
#include "oracles.hpp"

using namespace erlangen;

namespace {

constexpr double kPi = 3.14159265358979323846;
const Scalar kI(0.0, 1.0);

const ProjMap& as_proj(const Transformation& t) { return std::get<ProjMap>(t.forward()); }

Configuration circular_points() {
  return Configuration(std::vector<Element>{ProjPoint{1.0, kI, 0.0}, ProjPoint{1.0, -kI, 0.0}});
}

ProjMap rotation(double angle, double tx = 0.0, double ty = 0.0) {
  Matrix m(3, 3);
  m << std::cos(angle), -std::sin(angle), tx, std::sin(angle), std::cos(angle), ty, 0, 0, 1;
  return ProjMap(m);
}

double distance(const ProjPoint& a, const ProjPoint& b) {
  const Vector x = a.coords() / a[a.size() - 1], y = b.coords() / b[b.size() - 1];
  return (x - y).norm();
}

// Translations by a nonnegative x shift: closed, but not under inverses.
GroupDescriptor forward_shifts() {
  GroupDescriptor g{"forward_shifts", 2, Carrier::AffineSpace, ProjMap::identity(3),
                    [](const Transformation& a, const Transformation& b) { return compose(a, b); },
                    [](const Transformation& a) { return invert(a); },
                    [](std::uint64_t seed) {
                      Rng rng(seed);
                      return Transformation(translation(Eigen::Vector2d(uniform(rng, 0.1, 1.0), 0.0)));
                    },
                    [](const Transformation& t, double tol) {
                      const Matrix& m = as_proj(t).matrix();
                      return m(0, 2).real() / m(2, 2).real() >= -tol;
                    }};
  return g;
}

}  // namespace

TEST_CASE("builtin groups: names and dimension ranges") {
  for (const std::string& name : builtin_group_names()) {
    CHECK_NOTHROW(builtin_group(name, 2));
  }
  CHECK_THROWS_AS(builtin_group("principal", 4), PreconditionError);
  CHECK_THROWS_AS(builtin_group("moebius", 3), PreconditionError);
  CHECK_THROWS_AS(builtin_group("galilean", 2), PreconditionError);
  CHECK_NOTHROW(builtin_group("projective", 1));
  CHECK_NOTHROW(builtin_group("affine", 5));
  CHECK_THROWS_AS(builtin_group("affine", 0), PreconditionError);
}

TEST_CASE("principal group fixes the circular points as a pair") {
  const GroupDescriptor g = builtin_group("principal", 2);
  int swaps = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Transformation t = g.sample(s);
    CHECK(stabilizes(t, circular_points()));
    const ProjPoint image = std::get<ProjPoint>(erlangen::apply(t, Element(ProjPoint{1.0, kI, 0.0})));
    swaps += !equal_up_to_scale(image, ProjPoint{1.0, kI, 0.0});
  }
  // Reflections swap the two points; they occur about half the time.
  CHECK(swaps > 20);
  CHECK(swaps < 80);
}

TEST_CASE("euclidean isometries preserve distance") {
  const GroupDescriptor g = builtin_group("euclidean_isometries", 2);
  Rng rng(21);
  for (std::uint64_t s = 0; s < 100; ++s) {
    const ProjMap m = as_proj(g.sample(s));
    const ProjPoint a{uniform(rng, -1, 1), uniform(rng, -1, 1), 1.0};
    const ProjPoint b{uniform(rng, -1, 1), uniform(rng, -1, 1), 1.0};
    CHECK(std::abs(distance(erlangen::apply(m, a), erlangen::apply(m, b)) - distance(a, b)) < 1e-10);
  }
}

TEST_CASE("circle groups preserve the sum of squares up to a factor") {
  for (const char* name : {"lie_sphere_extended", "inversive_pentaspherical"}) {
    for (int dim : {2, 3}) {
      const GroupDescriptor g = builtin_group(name, dim);
      for (std::uint64_t s = 0; s < 50; ++s) {
        const Matrix m = std::get<CircleMap>(g.sample(s).forward()).map.matrix();
        const Matrix mtm = m.transpose() * m;
        const Scalar mu = mtm(0, 0);
        CHECK((mtm - mu * Matrix::Identity(m.rows(), m.cols())).norm() < 1e-9 * std::abs(mu));
      }
    }
  }
}

TEST_CASE("moebius sampler includes the conjugating family") {
  const GroupDescriptor g = builtin_group("moebius", 2);
  int conj = 0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    conj += std::get<MoebiusMap>(g.sample(s).forward()).conjugating();
  }
  CHECK(conj > 60);
  CHECK(conj < 140);
}

TEST_CASE("group axioms") {
  for (const std::string& name : builtin_group_names()) {
    const AxiomReport r = check_group_axioms(builtin_group(name, 2), 5, 200);
    CHECK_MESSAGE(r.ok(), name);
  }
  const AxiomReport shifts = check_group_axioms(forward_shifts(), 5, 50);
  CHECK(shifts.inverse_failures > 0);
  CHECK(shifts.closure_failures == 0);
  REQUIRE_FALSE(shifts.failures.empty());
  // Failures carry the per-trial seed.
  CHECK(shifts.failures.front().seed == derive_seed(5, shifts.failures.front().trial));
  CHECK_THROWS_AS(check_group_axioms(builtin_group("principal", 2), 5, 0), PreconditionError);
}

TEST_CASE("stabilizes") {
  const Configuration origin({ProjPoint{0.0, 0.0, 1.0}});
  CHECK(stabilizes(rotation(0.7), origin));
  CHECK_FALSE(stabilizes(rotation(0.7, 1.0, 0.0), origin));
  CHECK(stabilizes(rotation(kPi / 6, 2.0, -1.0), circular_points()));
  Matrix shear = Matrix::Identity(3, 3);
  shear(0, 1) = 0.5;
  CHECK_FALSE(stabilizes(ProjMap(shear), circular_points()));
  // A Moebius map cannot act on a quadric of 3-space.
  const Configuration space_quadric({Quadric::diagonal({1, 1, 1, -1})});
  CHECK_THROWS_AS(stabilizes(MoebiusMap(1.0, 1.0, 0.0, 1.0), space_quadric), InapplicableError);
}

TEST_CASE("stabilizer closure") {
  const ProjPoint f{0.3, -0.2, 1.0};
  const GroupDescriptor stab = point_stabilizer(builtin_group("principal", 2), f);
  const Configuration c({f});
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Transformation a = stab.sample(derive_seed(s, 0)), b = stab.sample(derive_seed(s, 1));
    REQUIRE(stabilizes(a, c));
    REQUIRE(stabilizes(b, c));
    CHECK(stabilizes(compose(a, b), c));
    CHECK(stabilizes(invert(a), c));
  }
}

TEST_CASE("similarity criteria") {
  CHECK(is_similarity_via_circular_points(rotation(kPi / 6, 1.0, 2.0)));
  CHECK(is_similarity_direct(rotation(kPi / 6, 1.0, 2.0)));
  Matrix d = Matrix::Zero(3, 3);
  d.diagonal() << 2.0, 3.0, 1.0;
  CHECK_FALSE(is_similarity_via_circular_points(ProjMap(d)));
  CHECK_FALSE(is_similarity_direct(ProjMap(d)));
  d.diagonal() << 1.0, -1.0, 1.0;
  CHECK(is_similarity_via_circular_points(ProjMap(d)));
  CHECK(is_similarity_direct(ProjMap(d)));
  Matrix complex = Matrix::Identity(3, 3);
  complex(0, 1) = kI;
  CHECK_THROWS_AS(is_similarity_via_circular_points(ProjMap(complex)), PreconditionError);
  CHECK_THROWS_AS(is_similarity_direct(ProjMap::identity(4)), DimensionError);
}

TEST_CASE("invariance tests by falsification") {
  const GroupDescriptor euclid = builtin_group("euclidean_isometries", 2);
  const GroupDescriptor projective = builtin_group("projective", 2);
  const PropertySpec dist = builtin_property("euclidean-distance", euclid);
  const Verdict kept = invariance_test(dist.property, euclid, dist.sampler, 9, 200, 1e-9);
  CHECK(kept.invariant);
  CHECK(kept.executed == 200);
  const Verdict broken = invariance_test(dist.property, projective, dist.sampler, 9, 200, 1e-9);
  CHECK_FALSE(broken.invariant);
  REQUIRE(broken.witness);
  CHECK_FALSE(values_match(broken.witness->before, broken.witness->after, 1e-9));
  // The witness reproduces from its seed.
  const Configuration c = dist.sampler(derive_seed(broken.witness->seed, 0));
  const Transformation t = projective.sample(derive_seed(broken.witness->seed, 1));
  CHECK(values_match(*dist.property.evaluate(erlangen::apply(t, c)), broken.witness->after, 0.0));

  const PropertySpec cr = builtin_property("cross-ratio", projective);
  CHECK(invariance_test(cr.property, projective, cr.sampler, 9, 300, 1e-9).invariant);
  CHECK_THROWS_AS(invariance_test(cr.property, projective, cr.sampler, 9, 0, 1e-9),
                  PreconditionError);
  const Property never{"never", [](const Configuration&) { return std::optional<PropertyValue>(); }};
  CHECK_THROWS_AS(invariance_test(never, projective, cr.sampler, 9, 20, 1e-9), PreconditionError);
}

TEST_CASE("adjunction: stabilizer of F versus the full group with F adjoined") {
  // Distance to the origin under the stabilizer of the origin, against the
  // distance between a point and the adjoined origin under the full group.
  const ProjPoint origin{0.0, 0.0, 1.0};
  const Property to_origin{"distance-to-origin", [&](const Configuration& c) {
                             return std::optional<PropertyValue>(
                                 Scalar(distance(std::get<ProjPoint>(c[0]), origin)));
                           }};
  const Property to_adjoined{"distance-to-adjoined", [](const Configuration& c) {
                               return std::optional<PropertyValue>(Scalar(distance(
                                   std::get<ProjPoint>(c[0]), std::get<ProjPoint>(c[1]))));
                             }};
  const ConfigSampler point = [](std::uint64_t seed) {
    Rng rng(seed);
    return Configuration(std::vector<Element>{ProjPoint{uniform(rng, -1, 1), uniform(rng, -1, 1), 1.0}});
  };
  const ConfigSampler with_origin = [&](std::uint64_t seed) { return point(seed).with(origin); };
  for (const char* name : {"euclidean_isometries", "principal"}) {
    const GroupDescriptor g = builtin_group(name, 2);
    const Verdict restricted =
        invariance_test(to_origin, point_stabilizer(g, origin), point, 31, 200, 1e-9);
    const Verdict adjoined = invariance_test(to_adjoined, g, with_origin, 31, 200, 1e-9);
    CHECK_MESSAGE(restricted.invariant == adjoined.invariant, name);
  }
  CHECK(invariance_test(to_origin, point_stabilizer(builtin_group("euclidean_isometries", 2), origin),
                        point, 31, 200, 1e-9)
            .invariant);
  CHECK_FALSE(invariance_test(to_origin, point_stabilizer(builtin_group("principal", 2), origin),
                              point, 31, 200, 1e-9)
                  .invariant);
}

TEST_CASE("orbits") {
  const ProjPoint origin{0.0, 0.0, 1.0};
  const GroupDescriptor rotations =
      point_stabilizer(builtin_group("euclidean_isometries", 2), origin);
  for (const Configuration& c : orbit_sample(Configuration(std::vector<Element>{origin}), rotations, 3, 20)) {
    CHECK(equal_up_to_scale(std::get<ProjPoint>(c[0]), origin, 1e-9));
  }
  // The bounding box of a principal orbit grows with the sample count.
  auto extent = [&](std::size_t count) {
    double lo = 1e300, hi = -1e300;
    for (const Configuration& c :
         orbit_sample(Configuration(std::vector<Element>{origin}), builtin_group("principal", 2), 4, count)) {
      const ProjPoint& p = std::get<ProjPoint>(c[0]);
      const double x = (p[0] / p[2]).real();
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    return hi - lo;
  };
  CHECK(extent(200) > extent(3));
  CHECK(extent(200) > 1.0);
  CHECK(orbit_sample(Configuration(std::vector<Element>{origin}), builtin_group("principal", 2), 4, 5).size() == 5);
  CHECK_THROWS_AS(orbit_sample(Configuration(std::vector<Element>{origin}), rotations, 4, 0), PreconditionError);

  // Images of a circle under Moebius maps are circles or lines.
  const Quadric unit = circle_quadric(Circle{0.0, 1.0, 1});
  for (const Configuration& c :
       orbit_sample(Configuration(std::vector<Element>{unit}), builtin_group("moebius", 2), 5, 30)) {
    const Matrix q = std::get<Quadric>(c[0]).matrix();
    const Eigen::Matrix2cd h = circle_quadric_to_hermitian(Quadric(q));
    // Sample points of the image conic: solve A|z|^2 + 2 Re(conj(B) z) + D = 0.
    std::vector<std::array<double, 2>> pts;
    const double a = h(0, 0).real(), d = h(1, 1).real();
    const Scalar b = h(0, 1);
    for (int k = 0; k < 12; ++k) {
      const double phi = 2 * kPi * k / 12;
      if (std::abs(a) > 1e-12 * (std::abs(b) + std::abs(d))) {
        const Scalar center = -b / a;
        const double r2 = std::norm(center) - d / a;
        REQUIRE(r2 > 0);
        const Scalar z = center + std::polar(std::sqrt(r2), phi);
        pts.push_back({z.real(), z.imag()});
      } else {
        // Line 2 Re(conj(B) z) + D = 0.
        const Scalar n = b / std::abs(b);
        const Scalar z = -d / (2 * std::abs(b)) * n + (phi - kPi) * kI * n;
        pts.push_back({z.real(), z.imag()});
      }
    }
    CHECK(oracle::circle_fit_residual(pts) < 1e-8);
  }
}

TEST_CASE("builtin properties") {
  const GroupDescriptor projective = builtin_group("projective", 2);
  const PropertySpec cr = builtin_property("cross-ratio", projective);
  const Configuration c = cr.sampler(1);
  CHECK(c.size() == 4);
  CHECK(std::holds_alternative<Scalar>(*cr.property.evaluate(c)));

  const PropertySpec tangency = builtin_property("tangency", builtin_group("moebius", 2));
  int tangent = 0;
  for (std::uint64_t s = 0; s < 40; ++s) {
    const auto v = tangency.property.evaluate(tangency.sampler(s));
    REQUIRE(std::holds_alternative<bool>(*v));
    tangent += std::get<bool>(*v);
  }
  CHECK(tangent > 5);
  CHECK(tangent < 35);

  CHECK_THROWS_AS(builtin_property("ck-distance", projective), PreconditionError);
  CHECK_NOTHROW(builtin_property("ck-distance", projective, std::string("klein-disk")));
  CHECK_THROWS_AS(builtin_property("ck-distance", projective, std::string("parabolic")),
                  PreconditionError);
  CHECK_THROWS_AS(builtin_property("volume", projective), PreconditionError);
  CHECK_THROWS_AS(builtin_property("collinearity", builtin_group("lie_sphere_extended", 2)),
                  InapplicableError);
  CHECK(builtin_property_names().size() == 7);
}

TEST_CASE("boolean properties are compared exactly") {
  CHECK(values_match(PropertyValue(true), PropertyValue(true), 0.5));
  CHECK_FALSE(values_match(PropertyValue(true), PropertyValue(false), 0.5));
  CHECK(values_match(PropertyValue(Scalar(100.0)), PropertyValue(Scalar(100.0 + 5e-8)), 1e-9));
  CHECK_FALSE(values_match(PropertyValue(Scalar(1.0)), PropertyValue(Scalar(1.0 + 5e-9)), 1e-9));
}

TEST_CASE("property verdicts across the group hierarchy") {
  struct Row {
    const char* group;
    const char* property;
    bool invariant;
  };
  const Row rows[] = {
      {"principal", "angle", true},          {"principal", "euclidean-distance", false},
      {"affine", "collinearity", true},      {"affine", "angle", false},
      {"projective", "incidence", true},     {"projective", "tangency", true},
      {"moebius", "tangency", true},         {"moebius", "incidence", true},
      {"moebius", "collinearity", false},    {"inversive_pentaspherical", "angle", true},
      {"lie_sphere_extended", "tangency", true}, {"lie_sphere_extended", "angle", false},
  };
  for (const Row& r : rows) {
    const GroupDescriptor g = builtin_group(r.group, 2);
    const PropertySpec p = builtin_property(r.property, g);
    const Verdict v = invariance_test(p.property, g, p.sampler, 17, 200, 1e-9);
    CHECK_MESSAGE(v.invariant == r.invariant, r.group << " " << r.property);
  }
}

TEST_CASE("transformations compose and invert by kind") {
  const Transformation a = rotation(0.3, 1.0, 0.0), b = rotation(-0.8, 0.0, 2.0);
  const ProjPoint p{0.2, 0.4, 1.0};
  const ProjPoint ab = std::get<ProjPoint>(erlangen::apply(compose(a, b), Element(p)));
  const ProjPoint a_b = std::get<ProjPoint>(erlangen::apply(a, erlangen::apply(b, Element(p))));
  CHECK(equal_up_to_scale(ab, a_b, 1e-12));
  CHECK(same_transformation(compose(a, invert(a)), ProjMap::identity(3), 1e-12));
  CHECK_THROWS_AS(compose(a, Transformation(MoebiusMap(1.0, 0.0, 0.0, 1.0))), InapplicableError);
}
