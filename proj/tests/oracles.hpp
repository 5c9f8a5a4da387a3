#pragma once

// Independent oracles for the tests. Nothing here calls into the library:
// each routine recomputes a quantity from its definition with plain
// arithmetic so that agreement is evidence rather than tautology.

#include <array>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using cd = std::complex<double>;
using Poly = std::vector<cd>;  // coefficients of x^d, x^(d-1) y, ..., y^d

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline Poly scale(const Poly& a, cd s) {
  Poly out = a;
  for (cd& c : out) c *= s;
  return out;
}

inline Poly add(const Poly& a, const Poly& b) {
  Poly out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

// Partial derivatives of a form of degree d: x^(d-k) y^k.
inline Poly dx(const Poly& f) {
  const int d = static_cast<int>(f.size()) - 1;
  Poly out(d, 0.0);
  for (int k = 0; k < d; ++k) out[k] = f[k] * double(d - k);
  return out;
}

inline Poly dy(const Poly& f) {
  const int d = static_cast<int>(f.size()) - 1;
  Poly out(d, 0.0);
  for (int k = 1; k <= d; ++k) out[k - 1] = f[k] * double(k);
  return out;
}

// (f_xx f_yy - f_xy^2) / (d^2 (d-1)^2) by differentiating the expansion.
inline Poly hessian(const Poly& f) {
  const double d = double(f.size()) - 1.0;
  const Poly h = add(multiply(dx(dx(f)), dy(dy(f))),
                     scale(multiply(dx(dy(f)), dx(dy(f))), -1.0));
  return scale(h, 1.0 / (d * d * (d - 1) * (d - 1)));
}

inline Poly jacobian(const Poly& f, const Poly& g) {
  const double df = double(f.size()) - 1.0, dg = double(g.size()) - 1.0;
  const Poly j = add(multiply(dx(f), dy(g)), scale(multiply(dy(f), dx(g)), -1.0));
  return scale(j, 1.0 / (df * dg));
}

// Discriminant of a cubic a x^3 + b x^2 y + c x y^2 + d y^3 by the usual
// formula, rescaled to the binomial normalization (b, c carry the factor 3).
inline cd cubic_discriminant(const Poly& f) {
  const cd a = f[0], b = f[1], c = f[2], d = f[3];
  const cd disc = b * b * c * c - 4.0 * a * c * c * c - 4.0 * b * b * b * d -
                  27.0 * a * a * d * d + 18.0 * a * b * c * d;
  return -disc / 27.0;
}

inline double max_abs(const Poly& p) {
  double m = 0.0;
  for (const cd& c : p) m = std::max(m, std::abs(c));
  return m;
}

// Least-squares (alpha, beta) minimizing |alpha p + beta q - r| for real
// scalars; used to find pencil parameters by linear solve.
inline std::array<double, 2> fit2(const Poly& p, const Poly& q, const Poly& r) {
  double pp = 0, pq = 0, qq = 0, pr = 0, qr = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    pp += std::norm(p[i]);
    qq += std::norm(q[i]);
    pq += std::real(std::conj(p[i]) * q[i]);
    pr += std::real(std::conj(p[i]) * r[i]);
    qr += std::real(std::conj(q[i]) * r[i]);
  }
  const double det = pp * qq - pq * pq;
  return {(pr * qq - qr * pq) / det, (qr * pp - pr * pq) / det};
}

// lambda with Q^2 + lambda R f^2 proportional to Delta^3 for a real cubic:
// solve Q^2 = mu Delta^3 - lambda R f^2 for (mu, lambda) and return lambda.
inline double cubic_pencil_lambda(const Poly& f) {
  const Poly delta = hessian(f);
  const Poly q = jacobian(f, delta);
  const cd r = cubic_discriminant(f);
  const Poly q2 = multiply(q, q);
  const Poly d3 = multiply(delta, multiply(delta, delta));
  const Poly rf2 = scale(multiply(f, f), r);
  const auto [mu, minus_lambda] = fit2(d3, rf2, q2);
  (void)mu;
  return -minus_lambda;
}

// Quartic invariants from binomial coefficients a, b, c, d, e.
inline std::array<cd, 2> quartic_ij(const Poly& f) {
  const cd a = f[0], b = f[1] / 4.0, c = f[2] / 6.0, d = f[3] / 4.0, e = f[4];
  const cd i = a * e - 4.0 * b * d + 3.0 * c * c;
  const cd j = a * c * e + 2.0 * b * c * d - a * d * d - b * b * e - c * c * c;
  return {i, j};
}

// For the symmetric family A (x^4 + y^4) + B x^2 y^2 the member is a
// perfect square iff A = 0 or B = +-2A. With A, B affine in lambda
// (A = a0 + a1 lambda, B = b0 + b1 lambda) this gives three lambdas.
inline std::array<double, 3> symmetric_square_lambdas(double a0, double a1,
                                                      double b0, double b1) {
  return {-a0 / a1, (b0 - 2 * a0) / (2 * a1 - b1), (b0 + 2 * a0) / (-2 * a1 - b1)};
}

// Hyperbolic distance in the Klein disk, from the closed form
// cosh d = (1 - p.q) / sqrt((1 - |p|^2)(1 - |q|^2)).
inline double klein_distance(double px, double py, double qx, double qy) {
  const double num = 1.0 - (px * qx + py * qy);
  const double den = std::sqrt((1.0 - px * px - py * py) * (1.0 - qx * qx - qy * qy));
  return std::acosh(num / den);
}

// Determinant of four points of 3-space as a 4x4 matrix, by cofactors.
inline double det4(const std::array<std::array<double, 4>, 4>& m) {
  auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
    return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
           m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
           m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
  };
  return m[0][0] * det3(1, 2, 3, 1, 2, 3) - m[0][1] * det3(1, 2, 3, 0, 2, 3) +
         m[0][2] * det3(1, 2, 3, 0, 1, 3) - m[0][3] * det3(1, 2, 3, 0, 1, 2);
}

// Algebraic circle fit A (x^2 + y^2) + D x + E y + F = 0 with
// A^2 + D^2 + E^2 + F^2 = 1: the smallest eigenvalue of the normal
// matrix, by Jacobi rotations, divided by the point count. Lines fit
// with A = 0.
inline double circle_fit_residual(const std::vector<std::array<double, 2>>& pts) {
  double m[4][4] = {};
  for (const auto& p : pts) {
    const double row[4] = {p[0] * p[0] + p[1] * p[1], p[0], p[1], 1.0};
    double norm = 0.0;
    for (double v : row) norm += v * v;
    norm = std::sqrt(norm);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m[i][j] += row[i] * row[j] / (norm * norm);
  }
  for (int sweep = 0; sweep < 60; ++sweep) {
    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        if (std::abs(m[p][q]) < 1e-300) continue;
        const double theta = (m[q][q] - m[p][p]) / (2 * m[p][q]);
        const double t = (theta >= 0 ? 1 : -1) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < 4; ++k) {
          const double mkp = m[k][p], mkq = m[k][q];
          m[k][p] = c * mkp - s * mkq;
          m[k][q] = s * mkp + c * mkq;
        }
        for (int k = 0; k < 4; ++k) {
          const double mpk = m[p][k], mqk = m[q][k];
          m[p][k] = c * mpk - s * mqk;
          m[q][k] = s * mpk + c * mqk;
        }
      }
    }
  }
  double smallest = m[0][0];
  for (int i = 1; i < 4; ++i) smallest = std::min(smallest, m[i][i]);
  return std::sqrt(std::max(smallest, 0.0) / double(pts.size()));
}

// Largest distance of the points from their least-squares plane, via the
// same eigenvalue route on the centered scatter matrix.
inline double plane_fit_residual(const std::vector<std::array<double, 3>>& pts) {
  double c[3] = {};
  for (const auto& p : pts)
    for (int i = 0; i < 3; ++i) c[i] += p[i] / double(pts.size());
  double m[3][3] = {};
  for (const auto& p : pts)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] += (p[i] - c[i]) * (p[j] - c[j]);
  double v[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int sweep = 0; sweep < 60; ++sweep) {
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        if (std::abs(m[p][q]) < 1e-300) continue;
        const double theta = (m[q][q] - m[p][p]) / (2 * m[p][q]);
        const double t = (theta >= 0 ? 1 : -1) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double cs = 1 / std::sqrt(t * t + 1), s = t * cs;
        for (int k = 0; k < 3; ++k) {
          const double mkp = m[k][p], mkq = m[k][q];
          m[k][p] = cs * mkp - s * mkq;
          m[k][q] = s * mkp + cs * mkq;
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = cs * vkp - s * vkq;
          v[k][q] = s * vkp + cs * vkq;
        }
        for (int k = 0; k < 3; ++k) {
          const double mpk = m[p][k], mqk = m[q][k];
          m[p][k] = cs * mpk - s * mqk;
          m[q][k] = s * mpk + cs * mqk;
        }
      }
    }
  }
  int best = 0;
  for (int i = 1; i < 3; ++i)
    if (m[i][i] < m[best][best]) best = i;
  double worst = 0.0;
  for (const auto& p : pts) {
    double d = 0.0;
    for (int i = 0; i < 3; ++i) d += (p[i] - c[i]) * v[i][best];
    worst = std::max(worst, std::abs(d));
  }
  return worst;
}

// Cross-ratio of four affine parameters, same convention as the library:
// ((t1 - t3)(t2 - t4)) / ((t1 - t4)(t2 - t3)).
inline cd cross_ratio(cd t1, cd t2, cd t3, cd t4) {
  return ((t1 - t3) * (t2 - t4)) / ((t1 - t4) * (t2 - t3));
}

}  // namespace oracle
