// Copyright 2026 The mbqcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MBQCSIM_LINALG_HPP
#define MBQCSIM_LINALG_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace mbqcsim {

using Complex = std::complex<double>;

/// Hard cap on the total Hilbert-space dimension of any composite value.
/// Everything this tool simulates fits far below; the cap catches runaway
/// tensor compositions before they exhaust memory.
inline constexpr std::size_t kMaxTotalDimension = 1u << 16;

/// Thrown when a tensor composition would exceed kMaxTotalDimension.
struct DimensionLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense complex column vector. Values are immutable by convention once
/// built: all operations return fresh vectors.
class CVector {
 public:
  CVector() = default;
  explicit CVector(std::size_t dim) : entries_(dim, Complex{0.0, 0.0}) {}
  CVector(std::initializer_list<Complex> entries) : entries_(entries) {}
  explicit CVector(std::vector<Complex> entries) : entries_(std::move(entries)) {}

  std::size_t dim() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Complex& operator[](std::size_t i) { return entries_[i]; }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }

  const std::vector<Complex>& entries() const { return entries_; }

  double norm() const;
  CVector normalized() const;
  bool is_normalized(double tol = 1e-10) const;
  bool all_finite() const;

 private:
  std::vector<Complex> entries_;
};

/// <a|b> with the physics convention: conjugate-linear in the first slot.
Complex inner(const CVector& a, const CVector& b);

/// Tensor product of two vectors; the first factor is the slower index.
CVector kron(const CVector& a, const CVector& b,
             std::size_t max_dim = kMaxTotalDimension);

/// Phase-insensitive state equality: |<a|b>| >= 1 - tol.
bool phase_equal(const CVector& a, const CVector& b, double tol = 1e-10);

/// Dense row-major complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {}

  static CMatrix identity(std::size_t n);
  /// Row-by-row construction, mainly for literals in tests and tables.
  static CMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  static CMatrix from_entries(std::size_t rows, std::size_t cols,
                              std::vector<Complex> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  const std::vector<Complex>& entries() const { return entries_; }

  CMatrix adjoint() const;
  Complex trace() const;
  double max_abs() const;
  double frobenius_norm() const;
  bool all_finite() const;

  CVector apply(const CVector& v) const;

  bool is_hermitian(double tol = 1e-10) const;
  bool is_unitary(double tol = 1e-10) const;
  /// Hermitian within tol, unit trace within tol, smallest eigenvalue
  /// >= -psd_tol.
  bool is_density(double tol = 1e-10, double psd_tol = 1e-9) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Complex> entries_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(Complex scale, const CMatrix& a);
CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);

/// |v><w|
CMatrix outer(const CVector& v, const CVector& w);
/// |v><v|
inline CMatrix outer(const CVector& v) { return outer(v, v); }

/// Tensor product. Entry ((i_a,i_b),(j_a,j_b)) = a(i_a,j_a) * b(i_b,j_b).
CMatrix kron(const CMatrix& a, const CMatrix& b,
             std::size_t max_dim = kMaxTotalDimension);

/// Traces out every subsystem not listed in `keep`. `dims` lists the local
/// dimension of each subsystem, slowest index first; their product must be
/// the dimension of `rho`. Kept subsystems stay in their original order.
CMatrix partial_trace(const CMatrix& rho, const std::vector<std::size_t>& dims,
                      const std::vector<std::size_t>& keep);

/// partial_trace specialized to a pure state: returns the reduced density
/// matrix on `keep` without materializing |psi><psi|.
CMatrix reduced_density(const CVector& psi, const std::vector<std::size_t>& dims,
                        const std::vector<std::size_t>& keep);

struct EigenSystem {
  std::vector<double> eigenvalues;  // descending
  CMatrix eigenvectors;             // column k pairs with eigenvalues[k]
};

/// Spectral decomposition of a Hermitian matrix via cyclic Jacobi rotations.
/// Throws std::invalid_argument when the input is not Hermitian within 1e-10.
EigenSystem hermitian_eig(const CMatrix& a);

/// Schatten-1 norm: the sum of singular values. Hermitian inputs go through
/// their own spectrum; everything else through the Hermitian embedding
/// [[0, A], [A^dag, 0]], whose eigenvalues are the singular values in +/- pairs.
double trace_norm(const CMatrix& a);

/// (1/2) * trace_norm(a - b); the standard distinguishability distance
/// between density matrices.
double trace_distance(const CMatrix& a, const CMatrix& b);

namespace detail {
/// Composite-index helper: strides for mixed-radix digits, slowest first.
std::vector<std::size_t> strides_for(const std::vector<std::size_t>& dims);
void require_finite(const CMatrix& a, const char* what);
void require_finite(const CVector& v, const char* what);
}  // namespace detail

}  // namespace mbqcsim

#endif  // MBQCSIM_LINALG_HPP
