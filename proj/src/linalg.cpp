#include "liegraph/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace liegraph {

CMatrix CMatrix::identity(int n) {
  CMatrix m = zero(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

CMatrix matmul(const CMatrix& x, const CMatrix& y) {
  if (x.n != y.n) throw std::invalid_argument("matmul: size mismatch");
  CMatrix r = CMatrix::zero(x.n);
  const int n = x.n;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      cplx v = x.at(i, k);
      if (v == cplx(0.0, 0.0)) continue;
      for (int j = 0; j < n; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

CMatrix adjoint(const CMatrix& x) {
  CMatrix r = CMatrix::zero(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) r.at(i, j) = std::conj(x.at(j, i));
  return r;
}

cplx trace(const CMatrix& x) {
  cplx t = 0.0;
  for (int i = 0; i < x.n; ++i) t += x.at(i, i);
  return t;
}

cplx det(CMatrix x) {
  const int n = x.n;
  cplx d = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(x.at(r, col)) > std::abs(x.at(piv, col))) piv = r;
    if (std::abs(x.at(piv, col)) == 0.0) return 0.0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(x.at(piv, j), x.at(col, j));
      d = -d;
    }
    d *= x.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      cplx f = x.at(r, col) / x.at(col, col);
      for (int j = col; j < n; ++j) x.at(r, j) -= f * x.at(col, j);
    }
  }
  return d;
}

double unitary_residual(const CMatrix& u) {
  CMatrix p = matmul(u, adjoint(u));
  double r = 0.0;
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j) {
      cplx want = i == j ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
      r = std::max(r, std::abs(p.at(i, j) - want));
    }
  return r;
}

HermEig eig_hermitian(const CMatrix& h) {
  const int n = h.n;
  CMatrix a = h;
  CMatrix v = CMatrix::identity(n);
  double scale = 0.0;
  for (const cplx& c : a.a) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) scale = 1.0;

  auto offdiag = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += std::norm(a.at(i, j));
    return std::sqrt(s);
  };

  int sweep = 0;
  while (offdiag() > 1e-13 * scale * n) {
    if (++sweep > 80) throw std::runtime_error("eig_hermitian: no convergence");
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        cplx apq = a.at(p, q);
        double m = std::abs(apq);
        if (m < 1e-300) continue;
        cplx phase = apq / m;  // apq = m * phase
        double app = a.at(p, p).real(), aqq = a.at(q, q).real();
        double tau = (aqq - app) / (2.0 * m);
        double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        cplx s = t * c * phase;
        // columns: col_p' = c col_p - conj(s) col_q ; col_q' = s col_p + c col_q
        for (int k = 0; k < n; ++k) {
          cplx akp = a.at(k, p), akq = a.at(k, q);
          a.at(k, p) = c * akp - std::conj(s) * akq;
          a.at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          cplx apk = a.at(p, k), aqk = a.at(q, k);
          a.at(p, k) = c * apk - s * aqk;
          a.at(q, k) = std::conj(s) * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          cplx vkp = v.at(k, p), vkq = v.at(k, q);
          v.at(k, p) = c * vkp - std::conj(s) * vkq;
          v.at(k, q) = s * vkp + c * vkq;
        }
      }
  }
  HermEig out;
  out.values.resize(n);
  for (int i = 0; i < n; ++i) out.values[i] = a.at(i, i).real();
  out.vectors = v;
  return out;
}

std::vector<double> unitary_eigenangles(const CMatrix& u) {
  const int n = u.n;
  if (unitary_residual(u) > 1e-8)
    throw std::invalid_argument("unitary_eigenangles: input is not unitary within 1e-8");
  CMatrix ustar = adjoint(u);
  CMatrix h = CMatrix::zero(n), k = CMatrix::zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      h.at(i, j) = 0.5 * (u.at(i, j) + ustar.at(i, j));
      k.at(i, j) = (u.at(i, j) - ustar.at(i, j)) / cplx(0.0, 2.0);
    }
  // mix H and K so common eigenvectors separate even when cos(theta) collides
  static const double gammas[] = {0.0, 0.6180339887498949, 1.1180339887498949, 2.236067977499790};
  for (double g : gammas) {
    CMatrix z = CMatrix::zero(n);
    double cg = std::cos(g), sg = std::sin(g);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) z.at(i, j) = cg * h.at(i, j) + sg * k.at(i, j);
    HermEig e = eig_hermitian(z);
    std::vector<double> angles(n);
    bool ok = true;
    for (int c = 0; c < n && ok; ++c) {
      cplx hh = 0.0, kk = 0.0;
      for (int i = 0; i < n; ++i) {
        cplx hv = 0.0, kv = 0.0;
        for (int j = 0; j < n; ++j) {
          hv += h.at(i, j) * e.vectors.at(j, c);
          kv += k.at(i, j) * e.vectors.at(j, c);
        }
        hh += std::conj(e.vectors.at(i, c)) * hv;
        kk += std::conj(e.vectors.at(i, c)) * kv;
      }
      double theta = std::atan2(kk.real(), hh.real());
      angles[c] = theta;
      // certify: U v = e^{i theta} v
      double res = 0.0;
      cplx eig = std::polar(1.0, theta);
      for (int i = 0; i < n; ++i) {
        cplx uv = 0.0;
        for (int j = 0; j < n; ++j) uv += u.at(i, j) * e.vectors.at(j, c);
        res = std::max(res, std::abs(uv - eig * e.vectors.at(i, c)));
      }
      if (res > 1e-7) ok = false;
    }
    if (ok) return angles;
  }
  throw std::runtime_error("unitary_eigenangles: degenerate spectrum not separated");
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}
Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}
Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}
Quaternion scale(const Quaternion& a, double s) { return {a.w * s, a.x * s, a.y * s, a.z * s}; }

CMatrix quaternion_embed(const QMatrix& m) {
  const int n = m.n;
  CMatrix r = CMatrix::zero(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Quaternion& q = m.at(i, j);
      cplx alpha(q.w, q.x), beta(q.y, q.z);  // q = alpha + beta j
      r.at(i, j) = alpha;
      r.at(i, j + n) = beta;
      r.at(i + n, j) = -std::conj(beta);
      r.at(i + n, j + n) = std::conj(alpha);
    }
  return r;
}

}  // namespace liegraph
