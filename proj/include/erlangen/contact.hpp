#pragma once

// Surface elements (x, y, z, p, q), the united-position form
// dz - p dx - q dy, and numerical checks that a map of the five variables
// preserves that form up to a factor.

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace erlangen {

using Vec3 = Eigen::Vector3d;
using Vec5 = Eigen::Matrix<double, 5, 1>;
using Mat5 = Eigen::Matrix<double, 5, 5>;

/// Differentiable map of R^N with an optional analytic Jacobian. Without
/// one, the Jacobian is taken by central differences with per-component
/// step relative_step * (1 + |v_i|). Callbacks must be re-entrant.
template <int N>
class SmoothMap {
 public:
  using Vec = Eigen::Matrix<double, N, 1>;
  using Mat = Eigen::Matrix<double, N, N>;
  using Forward = std::function<Vec(const Vec&)>;
  using Jacobian = std::function<Mat(const Vec&)>;

  explicit SmoothMap(Forward forward, Jacobian jacobian = {},
                     double relative_step = 1e-6)
      : forward_(std::move(forward)),
        jacobian_(std::move(jacobian)),
        step_(relative_step) {}

  Vec operator()(const Vec& v) const { return forward_(v); }

  /// Nullopt when the map or its Jacobian is not finite at v.
  std::optional<Mat> jacobian(const Vec& v) const {
    Mat j;
    if (jacobian_) {
      j = jacobian_(v);
    } else {
      for (int i = 0; i < N; ++i) {
        const double h = step_ * (1.0 + std::abs(v[i]));
        Vec plus = v, minus = v;
        plus[i] += h;
        minus[i] -= h;
        j.col(i) = (forward_(plus) - forward_(minus)) / (2.0 * h);
      }
    }
    if (!j.allFinite()) return std::nullopt;
    return j;
  }

  bool has_analytic_jacobian() const { return static_cast<bool>(jacobian_); }
  double relative_step() const { return step_; }

  /// Same map with a different finite-difference step (and the analytic
  /// Jacobian dropped, so the step takes effect).
  SmoothMap with_finite_differences(double relative_step) const {
    return SmoothMap(forward_, {}, relative_step);
  }

 private:
  Forward forward_;
  Jacobian jacobian_;
  double step_;
};

using FiveMap = SmoothMap<5>;
using LineElementMap = SmoothMap<3>;
using PointMap3 = SmoothMap<3>;
using PlaneMap = SmoothMap<2>;

struct SurfaceElement {
  SurfaceElement(double x, double y, double z, double p, double q);
  explicit SurfaceElement(const Vec5& v);

  Vec5 vec() const;

  double x, y, z, p, q;
};

/// Point in the plane with the slope p of a direction through it. Vertical
/// directions carry `vertical` and ignore p.
struct LineElement2D {
  double x = 0.0;
  double y = 0.0;
  double p = 0.0;
  bool vertical = false;
};

/// dz - p dx - q dy at e for the displacement de = (dx, dy, dz, dp, dq).
double pfaffian_residual(const SurfaceElement& e, const Vec5& de);
/// Residual between consecutive elements, taking de = b - a.
double united_position_residual(const SurfaceElement& a,
                                const SurfaceElement& b);

struct ContactWitness {
  std::uint64_t seed = 0;
  std::vector<double> element;
  double residual = 0.0;
};

struct ContactVerdict {
  bool contact = true;
  std::size_t samples = 0;
  std::size_t skipped = 0;
  double tolerance = 0.0;
  double max_residual = 0.0;
  /// Range of the proportionality factor rho over the checked samples.
  double min_factor = 0.0;
  double max_factor = 0.0;
  std::optional<ContactWitness> witness;
};

/// Samples elements uniformly in [-1, 1]^5 (per-sample seeds from
/// derive_seed) and checks that the pullback of dZ - P dX - Q dY is
/// proportional to dz - p dx - q dy. Non-finite samples are skipped;
/// more than half skipped is a DegenerateError.
ContactVerdict is_contact_transformation(const FiveMap& m, std::uint64_t seed,
                                         std::size_t samples, double tol);

/// The plane analogue for maps of (x, y, p) and the form dy - p dx.
ContactVerdict line_element_check(const LineElementMap& m, std::uint64_t seed,
                                  std::size_t samples, double tol);

/// Rank-one alignment residual |a - rho b| / |a| of covector a against b.
double alignment_residual(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                          double* factor = nullptr);

// Builders.

/// (x, y, z, p, q) -> (p, q, p x + q y - z, x, y).
FiveMap legendre_map();
/// (x, y, z, p, q) -> (p, y, z - p x, -x, q).
FiveMap partial_legendre_map();
/// Swaps z and p; not a contact map.
FiveMap swap_zp_map();
/// Prolongs a point map of 3-space to surface elements via the chain rule
/// on the tangent plane. A singular prolongation yields NaN (skipped).
FiveMap prolong_point_map(const PointMap3& g);
FiveMap prolong_affine_point_map(const Eigen::Matrix3d& a, const Vec3& b);
/// Prolongs a plane point map to line elements (x, y, p).
LineElementMap prolong_plane_point_map(const PlaneMap& g);

struct GridSpec {
  double u_min = 0.0, u_max = 0.0;
  int u_count = 1;
  double v_min = 0.0, v_max = 0.0;
  int v_count = 1;
};

/// Elements (x0, y0, z0, p, q) over the (p, q) grid; p outer, q inner.
std::vector<SurfaceElement> element_family_of_point(const Vec3& point,
                                                    const GridSpec& grid);

using SurfaceFunction = std::function<double(double, double)>;
using SurfaceGradient = std::function<std::array<double, 2>(double, double)>;

/// Elements (x, y, F, Fx, Fy) over the (x, y) grid; x outer, y inner.
/// Derivatives come from `gradient` when given, else central differences.
std::vector<SurfaceElement> element_family_of_surface(
    const SurfaceFunction& f, const GridSpec& grid,
    const SurfaceGradient& gradient = {}, double relative_step = 1e-6);

enum class ElementClass { Point = 0, Curve = 1, Surface = 2 };

struct ClassReport {
  ElementClass kind = ElementClass::Point;
  /// Singular values of the centered image base points.
  Vec3 singular_values = Vec3::Zero();
};

/// Rank of the image of a point's element family, read off the spread of
/// the image base points: a point goes to a point, a curve or a surface.
ClassReport classify_contact_map(const FiveMap& m, std::uint64_t seed);

}  // namespace erlangen
