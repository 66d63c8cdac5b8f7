#pragma once

// Small-dimension complex linear algebra: kets, Hermitian matrices, spectral
// decomposition, unitaries and von Neumann entropy. Everything is a plain
// value; operations are pure functions and safe for concurrent reads.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "ctx/errors.hpp"

namespace ctx {

using complexd = std::complex<double>;

// Validation tolerances. A single overridable record; the defaults are what
// every operation uses unless the caller says otherwise.
struct Tolerances {
  double norm = 1e-9;
  double hermiticity = 1e-9;
  double trace = 1e-9;
  double psd = 1e-9;
  double eig = 1e-10;
  double unitary = 1e-10;
  double entropy_zero = 1e-12;
};

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : c_(dim) {}
  Vector(std::initializer_list<complexd> comps) : c_(comps) {}
  explicit Vector(std::vector<complexd> comps) : c_(std::move(comps)) {}

  static Vector basis(std::size_t dim, std::size_t k);

  std::size_t dim() const { return c_.size(); }
  complexd& operator[](std::size_t i) { return c_[i]; }
  const complexd& operator[](std::size_t i) const { return c_[i]; }

  double norm() const;
  Vector normalized() const;  // throws InvalidObject on the zero vector
  Vector scaled(complexd factor) const;

  friend Vector operator+(const Vector& a, const Vector& b);
  friend Vector operator-(const Vector& a, const Vector& b);

 private:
  std::vector<complexd> c_;
};

// <a|b>, conjugating the first argument. Throws DimensionMismatch.
complexd inner_product(const Vector& a, const Vector& b);

// Square complex matrix, row major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

  static Matrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  complexd& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const complexd& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  Matrix adjoint() const;
  complexd trace() const;
  double max_abs() const;  // entrywise max |a_ij|
  Vector apply(const Vector& v) const;

  bool is_hermitian(double tol) const;
  bool is_unitary(double tol) const;  // ||U U+ - 1||_max <= tol

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(complexd s, const Matrix& m);

 private:
  std::size_t dim_ = 0;
  std::vector<complexd> a_;
};

// |u><v|
Matrix outer(const Vector& u, const Vector& v);

// Rank-1 projector |v><v| of a normalized ket. Throws InvalidObject when the
// norm deviates beyond tol.norm.
Matrix projector_of(const Vector& v, const Tolerances& tol = {});

struct SpectralDecomposition {
  std::vector<double> eigenvalues;   // sorted descending
  std::vector<Vector> eigenvectors;  // orthonormal, same order
};

// Full eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
// Eigenvalues come back sorted descending; degenerate clusters may carry any
// orthonormal basis of the eigenspace. Throws InvalidObject on non-Hermitian
// input.
SpectralDecomposition hermitian_eig(const Matrix& m, const Tolerances& tol = {});

class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(Matrix m, const Tolerances& tol = {});

  const Matrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.dim(); }
  Vector apply(const Vector& v) const { return m_.apply(v); }

 private:
  Matrix m_;
};

// U = sum_k |to_k><from_k|; maps from_k to to_k. Both arguments must be
// orthonormal bases of the same dimension.
UnitaryMatrix unitary_from_bases(std::span<const Vector> from, std::span<const Vector> to,
                                 const Tolerances& tol = {});

// Positive-semidefinite unit-trace Hermitian matrix with its spectrum cached
// (eigenvalues descending, orthonormal eigenvectors).
class DensityMatrix {
 public:
  explicit DensityMatrix(const Matrix& m, const Tolerances& tol = {});

  static DensityMatrix maximally_mixed(std::size_t dim);
  static DensityMatrix pure(const Vector& v, const Tolerances& tol = {});
  // rho = sum_k probs[k] |basis_k><basis_k|
  static DensityMatrix from_spectrum(const std::vector<double>& probs,
                                     const std::vector<Vector>& basis,
                                     const Tolerances& tol = {});

  std::size_t dim() const { return m_.dim(); }
  const Matrix& matrix() const { return m_; }
  const SpectralDecomposition& spectrum() const { return spec_; }

 private:
  Matrix m_;
  SpectralDecomposition spec_;
};

// S(rho) = -sum p log2 p, in bits. Eigenvalues at or below tol.entropy_zero
// contribute nothing.
double von_neumann_entropy(const DensityMatrix& rho, const Tolerances& tol = {});

}  // namespace ctx
