#include "ctx/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ctx {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": dimensions " + std::to_string(a) + " and " +
                            std::to_string(b) + " differ");
  }
}

}  // namespace

Vector Vector::basis(std::size_t dim, std::size_t k) {
  Vector v(dim);
  v[k] = 1.0;
  return v;
}

double Vector::norm() const {
  double s = 0.0;
  for (const complexd& z : c_) s += std::norm(z);
  return std::sqrt(s);
}

Vector Vector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw InvalidObject("cannot normalize the zero vector");
  return scaled(1.0 / n);
}

Vector Vector::scaled(complexd factor) const {
  Vector out(*this);
  for (complexd& z : out.c_) z *= factor;
  return out;
}

Vector operator+(const Vector& a, const Vector& b) {
  require_same_dim(a.dim(), b.dim(), "vector addition");
  Vector out(a);
  for (std::size_t i = 0; i < b.dim(); ++i) out.c_[i] += b.c_[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same_dim(a.dim(), b.dim(), "vector subtraction");
  Vector out(a);
  for (std::size_t i = 0; i < b.dim(); ++i) out.c_[i] -= b.c_[i];
  return out;
}

complexd inner_product(const Vector& a, const Vector& b) {
  require_same_dim(a.dim(), b.dim(), "inner product");
  complexd s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

complexd Matrix::trace() const {
  complexd s = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) s += (*this)(i, i);
  return s;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const complexd& z : a_) m = std::max(m, std::abs(z));
  return m;
}

Vector Matrix::apply(const Vector& v) const {
  require_same_dim(dim_, v.dim(), "matrix-vector product");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    complexd s = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

bool Matrix::is_hermitian(double tol) const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
  return true;
}

bool Matrix::is_unitary(double tol) const {
  const Matrix p = (*this) * adjoint();
  const Matrix id = identity(dim_);
  return (p - id).max_abs() <= tol;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix addition");
  Matrix out(a);
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += b.a_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix subtraction");
  Matrix out(a);
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= b.a_[i];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix product");
  const std::size_t n = a.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const complexd aik = a(i, k);
      if (aik == complexd{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Matrix operator*(complexd s, const Matrix& m) {
  Matrix out(m);
  for (complexd& z : out.a_) z *= s;
  return out;
}

Matrix outer(const Vector& u, const Vector& v) {
  require_same_dim(u.dim(), v.dim(), "outer product");
  Matrix out(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) out(i, j) = u[i] * std::conj(v[j]);
  return out;
}

Matrix projector_of(const Vector& v, const Tolerances& tol) {
  if (std::abs(v.norm() - 1.0) > tol.norm) {
    throw InvalidObject("projector_of: vector is not normalized (norm " +
                        std::to_string(v.norm()) + ")");
  }
  return outer(v, v);
}

namespace {

// One Jacobi step: unitarily zero a(p,q) by conjugating with the rotation
// whose (p,q)-plane block has the eigenvectors of the 2x2 pivot block as
// columns. a <- G+ a G,  v <- v G.
void jacobi_rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const complexd beta = a(p, q);
  const double ab = std::abs(beta);
  if (ab == 0.0) return;

  const double alpha = a(p, p).real();
  const double gamma = a(q, q).real();
  const double h = 0.5 * (alpha - gamma);
  const double rad = std::hypot(h, ab);
  // t = mu1 - alpha for the larger eigenvalue mu1; the h >= 0 branch avoids
  // cancellation between rad and h.
  const double t = (h >= 0.0) ? (ab * ab) / (rad + h) : (rad - h);

  const double nrm = std::sqrt(ab * ab + t * t);
  const complexd g11 = beta / nrm;          // first column (eigenvector of mu1)
  const complexd g21 = complexd(t / nrm);
  const complexd g12 = complexd(-t / nrm);  // orthogonal complement
  const complexd g22 = std::conj(beta) / nrm;

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {  // columns: a <- a G
    const complexd akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * g11 + akq * g21;
    a(k, q) = akp * g12 + akq * g22;
  }
  for (std::size_t k = 0; k < n; ++k) {  // rows: a <- G+ a
    const complexd apk = a(p, k), aqk = a(q, k);
    a(p, k) = std::conj(g11) * apk + std::conj(g21) * aqk;
    a(q, k) = std::conj(g12) * apk + std::conj(g22) * aqk;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const complexd vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * g11 + vkq * g21;
    v(k, q) = vkp * g12 + vkq * g22;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
}

double offdiag_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t p = 0; p + 1 < a.dim(); ++p)
    for (std::size_t q = p + 1; q < a.dim(); ++q) s += std::norm(a(p, q));
  return std::sqrt(2.0 * s);
}

// Rotate the global phase so the largest-magnitude component is real positive.
// Purely a determinism convention; any phase is physically equivalent.
Vector phase_normalized(const Vector& v) {
  std::size_t imax = 0;
  double amax = 0.0;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const double a = std::abs(v[i]);
    if (a > amax) {
      amax = a;
      imax = i;
    }
  }
  if (amax == 0.0) return v;
  return v.scaled(std::conj(v[imax]) / amax);
}

}  // namespace

SpectralDecomposition hermitian_eig(const Matrix& m, const Tolerances& tol) {
  if (!m.is_hermitian(tol.hermiticity)) throw InvalidObject("hermitian_eig: matrix is not Hermitian");
  const std::size_t n = m.dim();

  // Symmetrize away tolerance-level asymmetry before iterating.
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  Matrix v = Matrix::identity(n);

  const double scale = std::max(1.0, a.max_abs());
  constexpr int kMaxSweeps = 60;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (offdiag_norm(a) <= 1e-15 * scale) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  SpectralDecomposition out;
  out.eigenvalues.reserve(n);
  out.eigenvectors.reserve(n);
  for (std::size_t k : order) {
    out.eigenvalues.push_back(a(k, k).real());
    Vector col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = v(i, k);
    out.eigenvectors.push_back(phase_normalized(col));
  }
  return out;
}

UnitaryMatrix::UnitaryMatrix(Matrix m, const Tolerances& tol) : m_(std::move(m)) {
  if (!m_.is_unitary(tol.unitary)) throw InvalidObject("matrix is not unitary");
}

UnitaryMatrix unitary_from_bases(std::span<const Vector> from, std::span<const Vector> to,
                                 const Tolerances& tol) {
  if (from.size() != to.size() || from.empty()) {
    throw DimensionMismatch("unitary_from_bases: basis sizes differ");
  }
  const std::size_t d = from[0].dim();
  if (from.size() != d) throw InvalidObject("unitary_from_bases: basis does not span the space");
  for (const auto& basis : {from, to}) {
    for (std::size_t i = 0; i < d; ++i) {
      if (basis[i].dim() != d) throw DimensionMismatch("unitary_from_bases: mixed dimensions");
      for (std::size_t j = i; j < d; ++j) {
        const complexd g = inner_product(basis[i], basis[j]);
        const double expect = (i == j) ? 1.0 : 0.0;
        if (std::abs(g - expect) > tol.unitary) {
          throw InvalidObject("unitary_from_bases: input basis is not orthonormal");
        }
      }
    }
  }
  Matrix u(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) u(i, j) += to[k][i] * std::conj(from[k][j]);
  return UnitaryMatrix(std::move(u), tol);
}

DensityMatrix::DensityMatrix(const Matrix& m, const Tolerances& tol) : m_(m) {
  if (m_.dim() == 0) throw InvalidObject("density matrix: empty matrix");
  if (!m_.is_hermitian(tol.hermiticity)) throw InvalidObject("density matrix: not Hermitian");
  const complexd tr = m_.trace();
  if (std::abs(tr - complexd(1.0)) > tol.trace) {
    throw InvalidObject("density matrix: trace " + std::to_string(tr.real()) + " is not 1");
  }
  spec_ = hermitian_eig(m_, tol);
  for (double p : spec_.eigenvalues) {
    if (p < -tol.psd) {
      throw InvalidObject("density matrix: negative eigenvalue " + std::to_string(p));
    }
  }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0 / static_cast<double>(dim);
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::pure(const Vector& v, const Tolerances& tol) {
  return DensityMatrix(projector_of(v, tol), tol);
}

DensityMatrix DensityMatrix::from_spectrum(const std::vector<double>& probs,
                                           const std::vector<Vector>& basis,
                                           const Tolerances& tol) {
  if (probs.size() != basis.size()) {
    throw DimensionMismatch("from_spectrum: probability and basis counts differ");
  }
  const std::size_t d = basis.empty() ? 0 : basis[0].dim();
  Matrix m(d);
  for (std::size_t k = 0; k < probs.size(); ++k) m = m + (complexd(probs[k]) * outer(basis[k], basis[k]));
  return DensityMatrix(m, tol);
}

double von_neumann_entropy(const DensityMatrix& rho, const Tolerances& tol) {
  double s = 0.0;
  for (double p : rho.spectrum().eigenvalues) {
    if (p <= tol.entropy_zero) continue;
    s -= p * std::log2(p);
  }
  return std::max(0.0, s);
}

}  // namespace ctx
