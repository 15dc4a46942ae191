#pragma once

#include <complex>
#include <vector>

namespace liegraph {

using cplx = std::complex<double>;

// dense complex matrix, row-major
struct CMatrix {
  int n = 0;
  std::vector<cplx> a;
  cplx& at(int i, int j) { return a[(size_t)i * n + j]; }
  cplx at(int i, int j) const { return a[(size_t)i * n + j]; }
  static CMatrix zero(int n) { return CMatrix{n, std::vector<cplx>((size_t)n * n)}; }
  static CMatrix identity(int n);
};

CMatrix matmul(const CMatrix& x, const CMatrix& y);
CMatrix adjoint(const CMatrix& x);
cplx trace(const CMatrix& x);
cplx det(CMatrix x);  // LU with partial pivoting
double unitary_residual(const CMatrix& u);

struct HermEig {
  std::vector<double> values;
  CMatrix vectors;  // columns are eigenvectors
};

// cyclic Jacobi with complex rotations for Hermitian input
HermEig eig_hermitian(const CMatrix& h);

// eigen-angles theta_j in (-pi, pi] of a unitary matrix, via the commuting
// Hermitian pair H = (U+U*)/2, K = (U-U*)/(2i); each angle is certified by
// the residual ||U v - e^{i theta} v||.
std::vector<double> unitary_eigenangles(const CMatrix& u);

struct Quaternion {
  double w = 0, x = 0, y = 0, z = 0;
  Quaternion conj() const { return {w, -x, -y, -z}; }
  double norm2() const { return w * w + x * x + y * y + z * z; }
};
Quaternion operator*(const Quaternion& a, const Quaternion& b);
Quaternion operator+(const Quaternion& a, const Quaternion& b);
Quaternion operator-(const Quaternion& a, const Quaternion& b);
Quaternion scale(const Quaternion& a, double s);

// n x n quaternionic matrix, row-major
struct QMatrix {
  int n = 0;
  std::vector<Quaternion> a;
  Quaternion& at(int i, int j) { return a[(size_t)i * n + j]; }
  const Quaternion& at(int i, int j) const { return a[(size_t)i * n + j]; }
};

// 2n x 2n complex embedding [[A, B], [-conj(B), conj(A)]] of A + Bj
CMatrix quaternion_embed(const QMatrix& m);

}  // namespace liegraph
