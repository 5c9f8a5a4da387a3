#include "erlangen/binary_forms.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "erlangen/error.hpp"

namespace erlangen {

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_degree(const BinaryForm& f, int d, const char* what) {
  if (f.degree() != d) {
    throw PreconditionError(std::string(what) + ": wrong degree");
  }
}

// Leading (x-power) coefficients treated as zero, relative to the largest.
constexpr double kLeadingZero = 1e-12;

Scalar horner(const Vector& p, Scalar z) {
  Scalar acc = 0.0;
  for (Eigen::Index k = 0; k < p.size(); ++k) acc = acc * z + p[k];
  return acc;
}

Scalar horner_derivative(const Vector& p, Scalar z) {
  const Eigen::Index n = p.size() - 1;
  Scalar acc = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    acc = acc * z + static_cast<double>(n - k) * p[k];
  }
  return acc;
}

double relative_residual(const Vector& p, Scalar z) {
  double scale = 0.0;
  double zk = 1.0;
  for (Eigen::Index k = p.size() - 1; k >= 0; --k) {
    scale += std::abs(p[k]) * zk;
    zk *= std::abs(z);
  }
  return scale == 0.0 ? 0.0 : std::abs(horner(p, z)) / scale;
}

// Convolution matrix: (conv(g) * h) = coefficients of g * h.
Matrix convolution(const Vector& g, Eigen::Index h_size) {
  Matrix c = Matrix::Zero(g.size() + h_size - 1, h_size);
  for (Eigen::Index j = 0; j < h_size; ++j) {
    c.block(j, j, g.size(), 1) = g;
  }
  return c;
}

double chordal(const ExtendedComplex& a, const ExtendedComplex& b) {
  const SpherePoint p = inverse_stereographic(a);
  const SpherePoint q = inverse_stereographic(b);
  return std::hypot(p.x() - q.x(), p.y() - q.y(), p.z() - q.z());
}

}  // namespace

BinaryForm::BinaryForm(Vector coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 1) {
    throw DimensionError("BinaryForm needs at least one coefficient");
  }
  if (!all_finite(coeffs_)) {
    throw PreconditionError("BinaryForm has non-finite coefficients");
  }
}

BinaryForm::BinaryForm(std::initializer_list<Scalar> coeffs)
    : BinaryForm([&] {
        Vector v(static_cast<Eigen::Index>(coeffs.size()));
        Eigen::Index i = 0;
        for (Scalar c : coeffs) v[i++] = c;
        return v;
      }()) {}

BinaryForm BinaryForm::from_binomial(const Vector& b) {
  const int d = static_cast<int>(b.size()) - 1;
  Vector a(b.size());
  for (int k = 0; k <= d; ++k) a[k] = binomial(d, k) * b[k];
  return BinaryForm(a);
}

BinaryForm BinaryForm::from_roots(const std::vector<ExtendedComplex>& roots) {
  BinaryForm out{1.0};
  for (const ExtendedComplex& r : roots) {
    const BinaryForm factor =
        r.is_infinite() ? BinaryForm{0.0, 1.0} : BinaryForm{1.0, -r.value()};
    out = out * factor;
  }
  return out;
}

Vector BinaryForm::binomial_coeffs() const {
  const int d = degree();
  Vector b(coeffs_.size());
  for (int k = 0; k <= d; ++k) b[k] = coeffs_[k] / binomial(d, k);
  return b;
}

Scalar BinaryForm::operator()(Scalar x, Scalar y) const {
  const int d = degree();
  Scalar acc = 0.0;
  for (int k = 0; k <= d; ++k) {
    acc += coeffs_[k] * std::pow(x, d - k) * std::pow(y, k);
  }
  return acc;
}

BinaryForm BinaryForm::dx() const {
  const int d = degree();
  if (d == 0) return BinaryForm{0.0};
  Vector out(d);
  for (int k = 0; k < d; ++k) out[k] = static_cast<double>(d - k) * coeffs_[k];
  return BinaryForm(out);
}

BinaryForm BinaryForm::dy() const {
  const int d = degree();
  if (d == 0) return BinaryForm{0.0};
  Vector out(d);
  for (int k = 1; k <= d; ++k) out[k - 1] = static_cast<double>(k) * coeffs_[k];
  return BinaryForm(out);
}

BinaryForm BinaryForm::substitute(const Eigen::Matrix2cd& g) const {
  const BinaryForm l1{g(0, 0), g(0, 1)};
  const BinaryForm l2{g(1, 0), g(1, 1)};
  const int d = degree();
  std::vector<BinaryForm> p1{BinaryForm{1.0}}, p2{BinaryForm{1.0}};
  for (int k = 1; k <= d; ++k) {
    p1.push_back(p1.back() * l1);
    p2.push_back(p2.back() * l2);
  }
  Vector out = Vector::Zero(d + 1);
  for (int k = 0; k <= d; ++k) {
    out += coeffs_[k] * (p1[d - k] * p2[k]).coeffs();
  }
  return BinaryForm(out);
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree()) {
    throw DimensionError("adding binary forms of different degree");
  }
  return BinaryForm(Vector(a.coeffs() + b.coeffs()));
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
  return a + (Scalar(-1.0) * b);
}

BinaryForm operator*(Scalar s, const BinaryForm& f) {
  return BinaryForm(Vector(s * f.coeffs()));
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  return BinaryForm(
      Vector(convolution(a.coeffs(), b.coeffs().size()) * b.coeffs()));
}

double proportionality_residual(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree()) return 1.0;
  return proportionality_residual(Matrix(a.coeffs()), Matrix(b.coeffs()));
}

BinaryForm hessian(const BinaryForm& f) {
  const int d = f.degree();
  if (d < 2) throw PreconditionError("hessian: degree >= 2");
  const BinaryForm fx = f.dx(), fy = f.dy();
  const BinaryForm h = fx.dx() * fy.dy() - fx.dy() * fx.dy();
  return Scalar(1.0 / (d * d * (d - 1.0) * (d - 1.0))) * h;
}

BinaryForm jacobian_covariant(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree() < 1 || g.degree() < 1) {
    throw PreconditionError("jacobian_covariant: degrees >= 1");
  }
  const BinaryForm j = f.dx() * g.dy() - f.dy() * g.dx();
  return Scalar(1.0 / (f.degree() * g.degree())) * j;
}

Scalar cubic_invariant_R(const BinaryForm& f) {
  require_degree(f, 3, "cubic_invariant_R");
  const Vector b = f.binomial_coeffs();
  const Scalar a = b[0], bb = b[1], c = b[2], d = b[3];
  const Scalar u = a * d - bb * c;
  return u * u - 4.0 * (a * c - bb * bb) * (bb * d - c * c);
}

QuarticInvariants quartic_invariants(const BinaryForm& f) {
  require_degree(f, 4, "quartic_invariants");
  const Vector v = f.binomial_coeffs();
  const Scalar a = v[0], b = v[1], c = v[2], d = v[3], e = v[4];
  return {a * e - 4.0 * b * d + 3.0 * c * c,
          a * c * e + 2.0 * b * c * d - a * d * d - b * b * e - c * c * c};
}

CubicCovariants cubic_covariants(const BinaryForm& f) {
  require_degree(f, 3, "cubic_covariants");
  BinaryForm delta = hessian(f);
  BinaryForm q = jacobian_covariant(f, delta);
  return {std::move(delta), std::move(q), cubic_invariant_R(f)};
}

QuarticCovariants quartic_covariants(const BinaryForm& f) {
  require_degree(f, 4, "quartic_covariants");
  BinaryForm h = hessian(f);
  BinaryForm t = jacobian_covariant(f, h);
  const QuarticInvariants inv = quartic_invariants(f);
  return {std::move(h), std::move(t), inv.i, inv.j};
}

std::vector<ExtendedComplex> projective_roots(const BinaryForm& f,
                                              double residual_tol) {
  if (f.is_zero()) throw PreconditionError("roots of the zero form");
  const Vector& a = f.coeffs();
  const int d = f.degree();
  const double scale = a.cwiseAbs().maxCoeff();
  int m = 0;
  while (m < d && std::abs(a[m]) <= kLeadingZero * scale) ++m;
  std::vector<ExtendedComplex> roots(m, ExtendedComplex::infinity());
  const int n = d - m;
  if (n == 0) return roots;

  const Vector p = a.segment(m, n + 1);
  Matrix companion = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k) companion(0, k) = -p[k + 1] / p[0];
  for (int k = 1; k < n; ++k) companion(k, k - 1) = 1.0;
  Eigen::ComplexEigenSolver<Matrix> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("companion eigenvalue iteration did not converge");
  }
  for (int k = 0; k < n; ++k) {
    Scalar z = solver.eigenvalues()[k];
    const Scalar dp = horner_derivative(p, z);
    if (std::abs(dp) > 0.0) {
      const Scalar refined = z - horner(p, z) / dp;
      if (std::isfinite(refined.real()) && std::isfinite(refined.imag()) &&
          std::abs(horner(p, refined)) < std::abs(horner(p, z))) {
        z = refined;
      }
    }
    const double res = relative_residual(p, z);
    if (res > residual_tol) {
      throw ConvergenceError("root residual " + std::to_string(res) +
                             " exceeds tolerance");
    }
    roots.emplace_back(z);
  }
  return roots;
}

SphericalRootSet roots_on_sphere(const BinaryForm& f, double residual_tol) {
  SphericalRootSet out;
  out.roots = projective_roots(f, residual_tol);
  for (const ExtendedComplex& z : out.roots) {
    out.points.push_back(inverse_stereographic(z));
  }
  return out;
}

BinaryForm cubic_pencil_member(const BinaryForm& f, Scalar lambda,
                               double tol) {
  const CubicCovariants cov = cubic_covariants(f);
  const double s = f.binomial_coeffs().cwiseAbs().maxCoeff();
  if (std::abs(cov.r) <= tol * std::pow(s, 4)) {
    throw DegenerateError("cubic_pencil_member: R vanishes");
  }
  return cov.q * cov.q + (lambda * cov.r) * (f * f);
}

BinaryForm quartic_pencil_member(const BinaryForm& f, Scalar lambda,
                                 double tol) {
  const QuarticCovariants cov = quartic_covariants(f);
  const double s = f.binomial_coeffs().cwiseAbs().maxCoeff();
  if (std::abs(cov.i) <= tol * s * s && std::abs(cov.j) <= tol * s * s * s) {
    throw DegenerateError("quartic_pencil_member: i and j vanish");
  }
  return cov.i * cov.h + (lambda * cov.j) * f;
}

std::array<Scalar, 3> quartic_square_parameters(const BinaryForm& f,
                                                double tol) {
  const QuarticInvariants inv = quartic_invariants(f);
  const double s = f.binomial_coeffs().cwiseAbs().maxCoeff();
  if (std::abs(inv.j) <= tol * s * s * s) {
    throw DegenerateError("quartic_square_parameters: j vanishes");
  }
  const BinaryForm resolvent{4.0, 0.0, -inv.i, inv.j};
  const std::vector<ExtendedComplex> theta = projective_roots(resolvent);
  std::array<Scalar, 3> out;
  for (int k = 0; k < 3; ++k) out[k] = -inv.i * theta[k].value() / inv.j;
  return out;
}

BinaryForm perfect_square_root(const BinaryForm& f, double tol) {
  const int d = f.degree();
  if (d % 2 != 0 || d == 0) {
    throw PreconditionError("perfect_square_root: positive even degree");
  }
  std::vector<ExtendedComplex> roots = projective_roots(f, 1e-6);
  std::vector<ExtendedComplex> half;
  while (!roots.empty()) {
    const ExtendedComplex r = roots.back();
    roots.pop_back();
    auto nearest = std::min_element(
        roots.begin(), roots.end(),
        [&](const ExtendedComplex& a, const ExtendedComplex& b) {
          return chordal(r, a) < chordal(r, b);
        });
    if (r.is_infinite() || nearest->is_infinite()) {
      half.push_back(r.is_infinite() ? r : *nearest);
    } else {
      half.emplace_back((r.value() + nearest->value()) / 2.0);
    }
    roots.erase(nearest);
  }
  Vector g = BinaryForm::from_roots(half).coeffs();
  const Vector target = f.coeffs();
  {
    const Vector g2 = convolution(g, g.size()) * g;
    g *= std::sqrt(g2.dot(target) / g2.squaredNorm());
  }
  for (int iter = 0; iter < 8; ++iter) {
    const Matrix conv = convolution(g, g.size());
    const Vector residual = conv * g - target;
    const Vector step = (2.0 * conv).colPivHouseholderQr().solve(residual);
    g -= step;
    if (step.norm() <= 1e-16 * g.norm()) break;
  }
  const Vector g2 = convolution(g, g.size()) * g;
  if ((g2 - target).norm() > tol * target.norm()) {
    throw DegenerateError("perfect_square_root: form is not a square");
  }
  return BinaryForm(g);
}

}  // namespace erlangen
