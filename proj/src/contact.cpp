#include "erlangen/contact.hpp"

#include <algorithm>
#include <limits>

#include "erlangen/error.hpp"
#include "erlangen/random.hpp"

namespace erlangen {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Vec5 surface_form(const Vec5& e) {
  Vec5 w;
  w << -e[3], -e[4], 1.0, 0.0, 0.0;
  return w;
}

Vec3 line_form(const Vec3& e) { return {-e[2], 1.0, 0.0}; }

std::vector<double> to_std(const Eigen::VectorXd& v) {
  return {v.data(), v.data() + v.size()};
}

// Shared sampling loop for the two form-preservation checks.
template <int N, typename FormFn>
ContactVerdict check_form_preservation(const SmoothMap<N>& m,
                                       std::uint64_t seed,
                                       std::size_t samples, double tol,
                                       FormFn form) {
  using Vec = typename SmoothMap<N>::Vec;
  ContactVerdict verdict;
  verdict.samples = samples;
  verdict.tolerance = tol;
  verdict.min_factor = std::numeric_limits<double>::infinity();
  verdict.max_factor = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < samples; ++k) {
    const std::uint64_t s = derive_seed(seed, k);
    Rng rng(s);
    Vec v;
    for (int i = 0; i < N; ++i) v[i] = uniform(rng, -1.0, 1.0);
    const Vec image = m(v);
    const auto jac = m.jacobian(v);
    if (!image.allFinite() || !jac) {
      ++verdict.skipped;
      continue;
    }
    const Vec pulled = jac->transpose() * form(image);
    double rho = 0.0;
    const double residual = alignment_residual(pulled, form(v), &rho);
    verdict.min_factor = std::min(verdict.min_factor, rho);
    verdict.max_factor = std::max(verdict.max_factor, rho);
    verdict.max_residual = std::max(verdict.max_residual, residual);
    if (residual > tol &&
        (!verdict.witness || residual > verdict.witness->residual)) {
      verdict.contact = false;
      verdict.witness = ContactWitness{s, to_std(v), residual};
    }
  }
  if (2 * verdict.skipped > samples) {
    throw DegenerateError(
        "contact check: map or Jacobian failed at more than half the samples");
  }
  return verdict;
}

}  // namespace

SurfaceElement::SurfaceElement(double x_, double y_, double z_, double p_,
                               double q_)
    : x(x_), y(y_), z(z_), p(p_), q(q_) {
  if (!vec().allFinite()) {
    throw PreconditionError("SurfaceElement has non-finite entries");
  }
}

SurfaceElement::SurfaceElement(const Vec5& v)
    : SurfaceElement(v[0], v[1], v[2], v[3], v[4]) {}

Vec5 SurfaceElement::vec() const {
  Vec5 v;
  v << x, y, z, p, q;
  return v;
}

double pfaffian_residual(const SurfaceElement& e, const Vec5& de) {
  return de[2] - e.p * de[0] - e.q * de[1];
}

double united_position_residual(const SurfaceElement& a,
                                const SurfaceElement& b) {
  return pfaffian_residual(a, b.vec() - a.vec());
}

double alignment_residual(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                          double* factor) {
  const double na = a.norm();
  const double rho = a.dot(b) / b.squaredNorm();
  if (factor) *factor = rho;
  if (na == 0.0) return 1.0;
  return (a - rho * b).norm() / na;
}

ContactVerdict is_contact_transformation(const FiveMap& m, std::uint64_t seed,
                                         std::size_t samples, double tol) {
  if (samples < 10) {
    throw PreconditionError("is_contact_transformation: need >= 10 samples");
  }
  return check_form_preservation<5>(m, seed, samples, tol, surface_form);
}

ContactVerdict line_element_check(const LineElementMap& m, std::uint64_t seed,
                                  std::size_t samples, double tol) {
  if (samples < 1) {
    throw PreconditionError("line_element_check: need >= 1 sample");
  }
  return check_form_preservation<3>(m, seed, samples, tol, line_form);
}

FiveMap legendre_map() {
  auto forward = [](const Vec5& v) {
    Vec5 out;
    out << v[3], v[4], v[3] * v[0] + v[4] * v[1] - v[2], v[0], v[1];
    return out;
  };
  auto jacobian = [](const Vec5& v) {
    Mat5 j = Mat5::Zero();
    j(0, 3) = 1.0;
    j(1, 4) = 1.0;
    j(2, 0) = v[3];
    j(2, 1) = v[4];
    j(2, 2) = -1.0;
    j(2, 3) = v[0];
    j(2, 4) = v[1];
    j(3, 0) = 1.0;
    j(4, 1) = 1.0;
    return j;
  };
  return FiveMap(forward, jacobian);
}

FiveMap partial_legendre_map() {
  return FiveMap([](const Vec5& v) {
    Vec5 out;
    out << v[3], v[1], v[2] - v[3] * v[0], -v[0], v[4];
    return out;
  });
}

FiveMap swap_zp_map() {
  return FiveMap([](const Vec5& v) {
    Vec5 out;
    out << v[0], v[1], v[3], v[2], v[4];
    return out;
  });
}

FiveMap prolong_point_map(const PointMap3& g) {
  return FiveMap([g](const Vec5& v) {
    const Vec3 base(v[0], v[1], v[2]);
    const Vec3 image = g(base);
    const auto jac = g.jacobian(base);
    Vec5 out;
    if (!jac || !image.allFinite()) {
      out.setConstant(kNaN);
      return out;
    }
    // Images of the tangent vectors (1, 0, p) and (0, 1, q).
    const Vec3 t1 = *jac * Vec3(1.0, 0.0, v[3]);
    const Vec3 t2 = *jac * Vec3(0.0, 1.0, v[4]);
    Eigen::Matrix2d a;
    a << t1[0], t1[1], t2[0], t2[1];
    const double det = a.determinant();
    if (std::abs(det) <= 1e-12 * (1.0 + a.cwiseAbs().maxCoeff())) {
      out.setConstant(kNaN);
      return out;
    }
    const Eigen::Vector2d pq = a.inverse() * Eigen::Vector2d(t1[2], t2[2]);
    out << image[0], image[1], image[2], pq[0], pq[1];
    return out;
  });
}

FiveMap prolong_affine_point_map(const Eigen::Matrix3d& a, const Vec3& b) {
  return prolong_point_map(PointMap3([a, b](const Vec3& x) { return Vec3(a * x + b); },
                                     [a](const Vec3&) { return a; }));
}

LineElementMap prolong_plane_point_map(const PlaneMap& g) {
  return LineElementMap([g](const Vec3& v) {
    const Eigen::Vector2d base(v[0], v[1]);
    const Eigen::Vector2d image = g(base);
    const auto jac = g.jacobian(base);
    if (!jac || !image.allFinite()) return Vec3(kNaN, kNaN, kNaN);
    const Eigen::Vector2d t = *jac * Eigen::Vector2d(1.0, v[2]);
    if (std::abs(t[0]) <= 1e-12 * (1.0 + std::abs(t[1]))) {
      return Vec3(kNaN, kNaN, kNaN);
    }
    return Vec3(image[0], image[1], t[1] / t[0]);
  });
}

namespace {

std::vector<double> axis(double lo, double hi, int count) {
  std::vector<double> out;
  if (count == 1) return {lo};
  for (int i = 0; i < count; ++i) {
    out.push_back(lo + (hi - lo) * static_cast<double>(i) / (count - 1));
  }
  return out;
}

void check_grid(const GridSpec& grid) {
  if (grid.u_count < 1 || grid.v_count < 1) {
    throw PreconditionError("grid must be nonempty");
  }
}

}  // namespace

std::vector<SurfaceElement> element_family_of_point(const Vec3& point,
                                                    const GridSpec& grid) {
  check_grid(grid);
  std::vector<SurfaceElement> out;
  for (double p : axis(grid.u_min, grid.u_max, grid.u_count)) {
    for (double q : axis(grid.v_min, grid.v_max, grid.v_count)) {
      out.emplace_back(point[0], point[1], point[2], p, q);
    }
  }
  return out;
}

std::vector<SurfaceElement> element_family_of_surface(
    const SurfaceFunction& f, const GridSpec& grid,
    const SurfaceGradient& gradient, double relative_step) {
  check_grid(grid);
  std::vector<SurfaceElement> out;
  for (double x : axis(grid.u_min, grid.u_max, grid.u_count)) {
    for (double y : axis(grid.v_min, grid.v_max, grid.v_count)) {
      const double z = f(x, y);
      double fx, fy;
      if (gradient) {
        const auto g = gradient(x, y);
        fx = g[0];
        fy = g[1];
      } else {
        const double hx = relative_step * (1.0 + std::abs(x));
        const double hy = relative_step * (1.0 + std::abs(y));
        fx = (f(x + hx, y) - f(x - hx, y)) / (2.0 * hx);
        fy = (f(x, y + hy) - f(x, y - hy)) / (2.0 * hy);
      }
      if (!std::isfinite(z) || !std::isfinite(fx) || !std::isfinite(fy)) {
        throw PreconditionError("surface function is not finite on the grid");
      }
      out.emplace_back(x, y, z, fx, fy);
    }
  }
  return out;
}

ClassReport classify_contact_map(const FiveMap& m, std::uint64_t seed) {
  Rng rng(seed);
  Vec3 point;
  for (int i = 0; i < 3; ++i) point[i] = uniform(rng, -0.5, 0.5);
  const GridSpec grid{-0.5, 0.5, 5, -0.5, 0.5, 5};
  std::vector<Vec3> bases;
  for (const SurfaceElement& e : element_family_of_point(point, grid)) {
    const Vec5 image = m(e.vec());
    if (image.allFinite()) bases.emplace_back(image.head<3>());
  }
  if (bases.size() < 3) {
    throw DegenerateError("classify_contact_map: too few finite images");
  }
  Eigen::MatrixXd pts(static_cast<Eigen::Index>(bases.size()), 3);
  for (std::size_t i = 0; i < bases.size(); ++i) {
    pts.row(static_cast<Eigen::Index>(i)) = bases[i].transpose();
  }
  const double scale = 1.0 + pts.cwiseAbs().maxCoeff();
  const Eigen::MatrixXd centered = pts.rowwise() - pts.colwise().mean();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered);
  ClassReport report;
  report.singular_values = svd.singularValues();
  const double threshold =
      1e-8 * scale * std::sqrt(static_cast<double>(bases.size()));
  int rank = 0;
  for (int i = 0; i < 3; ++i) {
    if (report.singular_values[i] > threshold) ++rank;
  }
  report.kind = static_cast<ElementClass>(std::min(rank, 2));
  return report;
}

}  // namespace erlangen
