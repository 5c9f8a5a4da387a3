#include <doctest.h>

#include <cmath>

#include "erlangen/cayley_klein.hpp"
#include "erlangen/error.hpp"
#include "erlangen/random.hpp"
#include "erlangen/transfers.hpp"
#include "oracles.hpp"

using namespace erlangen;

namespace {

constexpr double kPi = 3.14159265358979323846;

ProjPoint disk_point(Rng& rng, double radius = 0.9) {
  const double r = radius * std::sqrt(uniform(rng, 0, 1)), t = uniform(rng, 0, 2 * kPi);
  return ProjPoint{r * std::cos(t), r * std::sin(t), 1.0};
}

ProjPoint sphere_point4(Rng& rng) {
  Eigen::Vector3d v(gaussian(rng), gaussian(rng), gaussian(rng));
  v.normalize();
  return ProjPoint{v[0], v[1], v[2], 1.0};
}

Vector random_line(Rng& rng) {
  const ProjPoint a{gaussian(rng), gaussian(rng), gaussian(rng), gaussian(rng)};
  const ProjPoint b{gaussian(rng), gaussian(rng), gaussian(rng), gaussian(rng)};
  return pluecker_embed(a, b).coords();
}

// Cayley transform of J S: symplectic for the form pairing 0 with 2 and 1 with 3.
ProjMap random_symplectic(Rng& rng) {
  Eigen::Matrix4d j = Eigen::Matrix4d::Zero();
  j(0, 2) = j(1, 3) = 1.0;
  j(2, 0) = j(3, 1) = -1.0;
  Eigen::Matrix4d s;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c <= r; ++c) s(r, c) = s(c, r) = 0.3 * gaussian(rng);
  const Eigen::Matrix4d x = j * s;
  const Eigen::Matrix4d id = Eigen::Matrix4d::Identity();
  return ProjMap(Matrix((id - x).inverse() * (id + x)));
}

}  // namespace

TEST_CASE("klein disk distance matches the closed form") {
  const CKMetric m = CKMetric::klein_disk();
  CHECK(std::abs(ck_distance(ProjPoint{0.3, 0.1, 1.0}, ProjPoint{0.3, 0.1, 1.0}, m)) == 0.0);
  // Along a diameter from the center: artanh(r).
  CHECK(std::abs(std::abs(ck_distance(ProjPoint{0.0, 0.0, 1.0}, ProjPoint{0.5, 0.0, 1.0}, m)) -
                 std::atanh(0.5)) < 1e-12);
  Rng rng(41);
  for (int k = 0; k < 200; ++k) {
    const ProjPoint p = disk_point(rng), q = disk_point(rng);
    const Scalar d = ck_distance(p, q, m);
    CHECK(std::abs(d.imag()) < 1e-10);
    CHECK(std::abs(std::abs(d.real()) - oracle::klein_distance(p[0].real(), p[1].real(),
                                                               q[0].real(), q[1].real())) <
          1e-9);
    CHECK(std::abs(std::abs(ck_distance(q, p, m)) - std::abs(d)) < 1e-10);
  }
}

TEST_CASE("distance is additive along a chord") {
  const CKMetric m = CKMetric::klein_disk();
  Rng rng(42);
  for (int k = 0; k < 100; ++k) {
    const ProjPoint a = disk_point(rng), b = disk_point(rng);
    const double t = uniform(rng, 0.05, 0.95);
    const ProjPoint mid(Vector(t * a.coords() / a[2] + (1 - t) * b.coords() / b[2]));
    const double ab = std::abs(ck_distance(a, b, m));
    CHECK(std::abs(std::abs(ck_distance(a, mid, m)) + std::abs(ck_distance(mid, b, m)) - ab) <
          1e-9 * std::max(1.0, ab));
  }
}

TEST_CASE("distance is invariant under the stabilizer of the absolute") {
  const CKMetric m = CKMetric::klein_disk();
  Rng rng(43);
  for (int k = 0; k < 100; ++k) {
    const ProjMap g(Matrix(random_indefinite_orthogonal(rng, 2, 1).cast<Scalar>()));
    const ProjPoint p = disk_point(rng, 0.6), q = disk_point(rng, 0.6);
    const ProjPoint gp = apply(g, p), gq = apply(g, q);
    CHECK(std::abs(std::abs(ck_distance(gp, gq, m)) - std::abs(ck_distance(p, q, m))) < 1e-8);
  }
}

TEST_CASE("elliptic plane distance is the angle between representatives") {
  const CKMetric m = CKMetric::elliptic_plane();
  Rng rng(44);
  for (int k = 0; k < 100; ++k) {
    const Eigen::Vector3d u(gaussian(rng), gaussian(rng), gaussian(rng));
    const Eigen::Vector3d v(gaussian(rng), gaussian(rng), gaussian(rng));
    const double expected = std::acos(std::abs(u.dot(v)) / (u.norm() * v.norm()));
    const Scalar d = ck_distance(ProjPoint{u[0], u[1], u[2]}, ProjPoint{v[0], v[1], v[2]}, m);
    CHECK(std::abs(d.imag()) < 1e-9);
    // Principal branch: d or pi - d.
    const double a = std::abs(d.real());
    CHECK(std::min(std::abs(a - expected), std::abs(kPi - a - expected)) < 1e-9);
  }
}

TEST_CASE("angles between hyperplanes") {
  const CKMetric m = CKMetric::elliptic_plane();
  const Hyperplane x0{1.0, 0.0, 0.0}, y0{0.0, 1.0, 0.0};
  CHECK(std::abs(ck_angle(x0, x0, m)) == 0.0);
  CHECK(std::abs(std::abs(ck_angle(x0, y0, m)) - kPi / 2) < 1e-12);
  // Lines through the center of the disk meet at a right angle too; the
  // hyperbolic constant turns the value imaginary.
  CHECK(std::abs(std::abs(ck_angle(x0, y0, CKMetric::klein_disk())) - kPi / 2) < 1e-12);
  CHECK_THROWS_AS(ck_angle(Hyperplane{1.0, 0.0, 1.0}, y0, CKMetric::klein_disk()), DegenerateError);
}

TEST_CASE("divergence and generator chords") {
  const CKMetric m = CKMetric::klein_disk();
  CHECK_THROWS_AS(ck_distance(ProjPoint{1.0, 0.0, 1.0}, ProjPoint{0.0, 0.0, 1.0}, m),
                  DivergentDistanceError);
  const CKMetric hyperboloid = CKMetric::hyperbolic(Quadric::diagonal({1, 1, -1, -1}));
  // (1,0,1,0) lies on the absolute; divergence is reported before the chord.
  CHECK_THROWS_AS(ck_distance(ProjPoint{1.0, 0.0, 1.0, 0.0}, ProjPoint{1.0, 1.0, 1.0, 1.0}, hyperboloid),
                  DivergentDistanceError);
  CHECK_THROWS_AS(CKMetric::hyperbolic(Quadric::diagonal({1, 1, 0})), DegenerateError);
  CHECK_THROWS_AS(CKMetric(Quadric::diagonal({1, 1, -1}), 0.0), PreconditionError);
}

TEST_CASE("two points of a quadric") {
  const Quadric circle = Quadric::diagonal({1, 1, -1});
  CHECK(on_quadric_degeneracy(ProjPoint{1.0, 0.0, 1.0}, ProjPoint{0.0, 1.0, 1.0}, circle) ==
        DegeneracyVerdict::Zero);
  const Quadric ruled = Quadric::diagonal({1, 1, -1, -1});
  CHECK(on_quadric_degeneracy(ProjPoint{1.0, 0.0, 1.0, 0.0}, ProjPoint{0.0, 1.0, 0.0, 1.0},
                              ruled) == DegeneracyVerdict::Indeterminate);
  CHECK_THROWS_AS(on_quadric_degeneracy(ProjPoint{0.0, 0.0, 1.0}, ProjPoint{1.0, 0.0, 1.0}, circle),
                  PreconditionError);
  CHECK_THROWS_AS(on_quadric_degeneracy(ProjPoint{1.0, 0.0, 1.0}, ProjPoint{2.0, 0.0, 2.0}, circle),
                  PreconditionError);
}

TEST_CASE("induced distance from a point of the sphere is stereographic") {
  const Quadric sphere = Quadric::diagonal({1, 1, 1, -1});
  const ProjPoint north{0.0, 0.0, 1.0, 1.0};
  Rng rng(45);
  for (int k = 0; k < 100; ++k) {
    const ProjPoint p = sphere_point4(rng), q = sphere_point4(rng);
    auto plane = [](const ProjPoint& x) {
      const double s = 1.0 - x[2].real();
      return std::array<double, 2>{x[0].real() / s, x[1].real() / s};
    };
    const auto u = plane(p), v = plane(q);
    const double expected = std::hypot(u[0] - v[0], u[1] - v[1]);
    const Scalar d = induced_surface_distance(p, q, sphere, north, 1.0);
    CHECK(std::abs(std::abs(d) - expected) < 1e-9 * std::max(1.0, expected));
    CHECK(std::abs(std::abs(induced_surface_distance(q, p, sphere, north, 1.0)) - std::abs(d)) <
          1e-9 * std::max(1.0, expected));
  }
  CHECK_THROWS_AS(induced_surface_distance(north, ProjPoint{1.0, 0.0, 0.0, 1.0}, sphere, north, 1.0),
                  PreconditionError);
  CHECK_THROWS_AS(induced_surface_distance(ProjPoint{0.0, 0.0, 0.0, 1.0}, ProjPoint{1.0, 0.0, 0.0, 1.0},
                                           sphere, north, 1.0),
                  PreconditionError);
}

TEST_CASE("induced distance from the center of the sphere is the great circle angle") {
  const Quadric sphere = Quadric::diagonal({1, 1, 1, -1});
  const ProjPoint center{0.0, 0.0, 0.0, 1.0};
  Rng rng(46);
  for (int k = 0; k < 100; ++k) {
    const ProjPoint p = sphere_point4(rng), q = sphere_point4(rng);
    double dot = 0.0;
    for (int i = 0; i < 3; ++i) dot += (p[i] * q[i]).real();
    // Antipodes are identified by the projection from the center.
    const double expected = std::acos(std::abs(dot));
    const double a = std::abs(induced_surface_distance(p, q, sphere, center, Scalar(0.0, -0.5)));
    CHECK(std::min(std::abs(a - expected), std::abs(kPi - a - expected)) < 1e-8);
  }
}

TEST_CASE("induced distance vanishes along a generator") {
  const Quadric ruled = Quadric::diagonal({1, 1, -1, -1});
  const ProjPoint o{1.0, 0.0, 0.0, 1.0};
  REQUIRE(on_quadric(o, ruled));
  // (1,0,1,0) + t (0,1,0,1) lies on the quadric for every t.
  const ProjPoint p{1.0, 0.5, 1.0, 0.5}, q{1.0, -2.0, 1.0, -2.0};
  CHECK(std::abs(induced_surface_distance(p, q, ruled, o, 1.0)) < 1e-9);
}

TEST_CASE("line invariant of a pair of lines and a linear complex") {
  const LinearComplex a(Vector((Vector(6) << 0, -1, 0, 0, 1, 0).finished()));
  CHECK_FALSE(a.special());
  Rng rng(47);
  for (int k = 0; k < 100; ++k) {
    const LinearComplex l1(random_line(rng)), l2(random_line(rng));
    REQUIRE(l1.special());
    CHECK(std::abs(line_invariant(l1, l1, a, klein_quadric())) < 1e-10);

    // Lines through a common point meet.
    const ProjPoint x{gaussian(rng), gaussian(rng), gaussian(rng), 1.0};
    const LinearComplex m1(pluecker_embed(x, ProjPoint{gaussian(rng), gaussian(rng), gaussian(rng), 1.0}).coords());
    const LinearComplex m2(pluecker_embed(x, ProjPoint{gaussian(rng), gaussian(rng), gaussian(rng), 1.0}).coords());
    CHECK(std::abs(line_invariant(m1, m2, a, klein_quadric())) < 1e-9);

    const ProjMap g = pluecker_conjugate(random_symplectic(rng));
    REQUIRE(equal_up_to_scale(apply(g, ProjPoint(a.coeffs())), ProjPoint(a.coeffs()), 1e-9));
    const Scalar before = line_invariant(l1, l2, a, klein_quadric());
    const Scalar after = line_invariant(LinearComplex(apply(g, ProjPoint(l1.coeffs())).coords()),
                                        LinearComplex(apply(g, ProjPoint(l2.coeffs())).coords()), a,
                                        klein_quadric());
    CHECK(std::abs(after - before) < 1e-8 * std::max(1.0, std::abs(before)));
  }
  const LinearComplex line(random_line(rng));
  CHECK_THROWS_AS(line_invariant(a, line, a, klein_quadric()), PreconditionError);
  CHECK_THROWS_AS(line_invariant(line, line, line, klein_quadric()), PreconditionError);
  // Only p12 is nonzero on the line x0 = x3 = 0, so it belongs to the complex.
  const LinearComplex inside(
      pluecker_embed(ProjPoint{0.0, 1.0, 0.0, 0.0}, ProjPoint{0.0, 0.0, 1.0, 0.0}).coords());
  CHECK_THROWS_AS(line_invariant(inside, line, a, klein_quadric()), DegenerateError);
}
