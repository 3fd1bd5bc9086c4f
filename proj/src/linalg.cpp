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

#include "mbqcsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mbqcsim {

namespace {

std::size_t checked_product(const std::vector<std::size_t>& dims) {
  std::size_t prod = 1;
  for (std::size_t d : dims) {
    if (d == 0) throw std::invalid_argument("subsystem dimension must be positive");
    if (prod > kMaxTotalDimension / d) {
      throw DimensionLimitError("composite dimension exceeds the configured maximum");
    }
    prod *= d;
  }
  return prod;
}

}  // namespace

namespace detail {

std::vector<std::size_t> strides_for(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;) {
    strides[i - 1] = strides[i] * dims[i];
  }
  return strides;
}

void require_finite(const CMatrix& a, const char* what) {
  if (!a.all_finite()) {
    throw std::invalid_argument(std::string(what) + ": non-finite entry");
  }
}

void require_finite(const CVector& v, const char* what) {
  if (!v.all_finite()) {
    throw std::invalid_argument(std::string(what) + ": non-finite entry");
  }
}

}  // namespace detail

double CVector::norm() const {
  double sum = 0.0;
  for (const Complex& c : entries_) sum += std::norm(c);
  return std::sqrt(sum);
}

CVector CVector::normalized() const {
  double n = norm();
  if (n == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  CVector out(*this);
  for (Complex& c : out.entries_) c /= n;
  return out;
}

bool CVector::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

bool CVector::all_finite() const {
  for (const Complex& c : entries_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

Complex inner(const CVector& a, const CVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

CVector kron(const CVector& a, const CVector& b, std::size_t max_dim) {
  if (a.dim() == 0 || b.dim() == 0) throw std::invalid_argument("kron: empty factor");
  if (a.dim() > max_dim / b.dim()) {
    throw DimensionLimitError("kron: result dimension exceeds the configured maximum");
  }
  CVector out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      out[i * b.dim() + j] = a[i] * b[j];
    }
  }
  return out;
}

bool phase_equal(const CVector& a, const CVector& b, double tol) {
  if (a.dim() != b.dim()) return false;
  return std::abs(inner(a, b)) >= 1.0 - tol;
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  CMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("from_rows: ragged rows");
    std::size_t j = 0;
    for (const Complex& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

CMatrix CMatrix::from_entries(std::size_t rows, std::size_t cols,
                              std::vector<Complex> entries) {
  if (entries.size() != rows * cols) {
    throw std::invalid_argument("from_entries: entry count does not match shape");
  }
  CMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.entries_ = std::move(entries);
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      out(j, i) = std::conj((*this)(i, j));
    }
  }
  return out;
}

Complex CMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < rows_; ++i) sum += (*this)(i, i);
  return sum;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& c : entries_) m = std::max(m, std::abs(c));
  return m;
}

double CMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const Complex& c : entries_) sum += std::norm(c);
  return std::sqrt(sum);
}

bool CMatrix::all_finite() const {
  for (const Complex& c : entries_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

CVector CMatrix::apply(const CVector& v) const {
  if (cols_ != v.dim()) throw std::invalid_argument("apply: dimension mismatch");
  CVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Complex sum{0.0, 0.0};
    for (std::size_t j = 0; j < cols_; ++j) sum += (*this)(i, j) * v[j];
    out[i] = sum;
  }
  return out;
}

bool CMatrix::is_hermitian(double tol) const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i; j < cols_; ++j) {
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    }
  }
  return true;
}

bool CMatrix::is_unitary(double tol) const {
  if (rows_ != cols_) return false;
  CMatrix p = adjoint() * (*this);
  for (std::size_t i = 0; i < rows_; ++i) p(i, i) -= 1.0;
  return p.max_abs() <= tol;
}

bool CMatrix::is_density(double tol, double psd_tol) const {
  if (rows_ != cols_) return false;
  if (!is_hermitian(tol)) return false;
  if (std::abs(trace() - Complex{1.0, 0.0}) > tol) return false;
  EigenSystem es = hermitian_eig(*this);
  return es.eigenvalues.empty() || es.eigenvalues.back() >= -psd_tol;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
  CMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Complex aik = a(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

CMatrix operator*(Complex scale, const CMatrix& a) {
  CMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= scale;
  }
  return out;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix add: shape mismatch");
  }
  CMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  }
  return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix sub: shape mismatch");
  }
  CMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  }
  return out;
}

CMatrix outer(const CVector& v, const CVector& w) {
  CMatrix out(v.dim(), w.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    for (std::size_t j = 0; j < w.dim(); ++j) {
      out(i, j) = v[i] * std::conj(w[j]);
    }
  }
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b, std::size_t max_dim) {
  if (a.empty() || b.empty()) throw std::invalid_argument("kron: empty factor");
  if (a.rows() > max_dim / b.rows() || a.cols() > max_dim / b.cols()) {
    throw DimensionLimitError("kron: result dimension exceeds the configured maximum");
  }
  detail::require_finite(a, "kron");
  detail::require_finite(b, "kron");
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia) {
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      Complex f = a(ia, ja);
      if (f == Complex{0.0, 0.0}) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib) {
        for (std::size_t jb = 0; jb < b.cols(); ++jb) {
          out(ia * b.rows() + ib, ja * b.cols() + jb) = f * b(ib, jb);
        }
      }
    }
  }
  return out;
}

namespace {

// Shared digit bookkeeping for partial_trace / reduced_density: builds the
// full composite index from a kept-part index and a traced-part index.
struct SubsystemSplit {
  std::vector<std::size_t> kept_dims, traced_dims;
  std::size_t kept_total = 1, traced_total = 1;
  std::vector<std::size_t> index_map;  // [ik * traced_total + it] -> full index

  SubsystemSplit(const std::vector<std::size_t>& dims,
                 const std::vector<std::size_t>& keep) {
    std::vector<bool> is_kept(dims.size(), false);
    for (std::size_t k : keep) {
      if (k >= dims.size()) throw std::invalid_argument("keep index out of range");
      if (is_kept[k]) throw std::invalid_argument("duplicate keep index");
      is_kept[k] = true;
    }
    std::vector<std::size_t> kept_sites, traced_sites;
    for (std::size_t i = 0; i < dims.size(); ++i) {
      (is_kept[i] ? kept_sites : traced_sites).push_back(i);
      (is_kept[i] ? kept_dims : traced_dims).push_back(dims[i]);
    }
    for (std::size_t d : kept_dims) kept_total *= d;
    for (std::size_t d : traced_dims) traced_total *= d;

    const std::vector<std::size_t> full_strides = detail::strides_for(dims);
    const std::vector<std::size_t> kept_strides = detail::strides_for(kept_dims);
    const std::vector<std::size_t> traced_strides = detail::strides_for(traced_dims);

    index_map.resize(kept_total * traced_total);
    for (std::size_t ik = 0; ik < kept_total; ++ik) {
      std::size_t base = 0;
      for (std::size_t s = 0; s < kept_sites.size(); ++s) {
        std::size_t digit = (ik / kept_strides[s]) % kept_dims[s];
        base += digit * full_strides[kept_sites[s]];
      }
      for (std::size_t it = 0; it < traced_total; ++it) {
        std::size_t idx = base;
        for (std::size_t s = 0; s < traced_sites.size(); ++s) {
          std::size_t digit = (it / traced_strides[s]) % traced_dims[s];
          idx += digit * full_strides[traced_sites[s]];
        }
        index_map[ik * traced_total + it] = idx;
      }
    }
  }
};

}  // namespace

CMatrix partial_trace(const CMatrix& rho, const std::vector<std::size_t>& dims,
                      const std::vector<std::size_t>& keep) {
  std::size_t total = checked_product(dims);
  if (rho.rows() != rho.cols() || rho.rows() != total) {
    throw std::invalid_argument(
        "partial_trace: dims product does not match the matrix dimension");
  }
  SubsystemSplit split(dims, keep);
  CMatrix out(split.kept_total, split.kept_total);
  for (std::size_t ik = 0; ik < split.kept_total; ++ik) {
    for (std::size_t jk = 0; jk < split.kept_total; ++jk) {
      Complex sum{0.0, 0.0};
      for (std::size_t it = 0; it < split.traced_total; ++it) {
        sum += rho(split.index_map[ik * split.traced_total + it],
                   split.index_map[jk * split.traced_total + it]);
      }
      out(ik, jk) = sum;
    }
  }
  return out;
}

CMatrix reduced_density(const CVector& psi, const std::vector<std::size_t>& dims,
                        const std::vector<std::size_t>& keep) {
  std::size_t total = checked_product(dims);
  if (psi.dim() != total) {
    throw std::invalid_argument(
        "reduced_density: dims product does not match the state dimension");
  }
  SubsystemSplit split(dims, keep);
  CMatrix out(split.kept_total, split.kept_total);
  for (std::size_t ik = 0; ik < split.kept_total; ++ik) {
    for (std::size_t jk = 0; jk < split.kept_total; ++jk) {
      Complex sum{0.0, 0.0};
      for (std::size_t it = 0; it < split.traced_total; ++it) {
        sum += psi[split.index_map[ik * split.traced_total + it]] *
               std::conj(psi[split.index_map[jk * split.traced_total + it]]);
      }
      out(ik, jk) = sum;
    }
  }
  return out;
}

namespace {

// One complex Jacobi rotation zeroing A(p,q). The pivot is first made real
// by a phase on column q, then rotated away exactly as in the symmetric
// real case; the eigenvector accumulator V picks up the same rotation.
void jacobi_rotate(CMatrix& a, CMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double g = std::abs(apq);
  if (g == 0.0) return;
  const Complex phase = apq / g;  // e^{i arg(apq)}

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * g);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  // W = [[c, s], [-s*conj(phase), c*conj(phase)]] acting on columns (p,q).
  const Complex wpp{c, 0.0};
  const Complex wpq{s, 0.0};
  const Complex wqp = -s * std::conj(phase);
  const Complex wqq = c * std::conj(phase);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * wpp + akq * wqp;
    a(k, q) = akp * wpq + akq * wqq;
    a(p, k) = std::conj(a(k, p));
    a(q, k) = std::conj(a(k, q));
  }

  // 2x2 pivot block, computed directly from W^dag M W.
  const Complex m00{app, 0.0};
  const Complex m11{aqq, 0.0};
  const Complex m01 = apq;
  const Complex n00 = std::conj(wpp) * (m00 * wpp + m01 * wqp) +
                      std::conj(wqp) * (std::conj(m01) * wpp + m11 * wqp);
  const Complex n11 = std::conj(wpq) * (m00 * wpq + m01 * wqq) +
                      std::conj(wqq) * (std::conj(m01) * wpq + m11 * wqq);
  a(p, p) = Complex{n00.real(), 0.0};
  a(q, q) = Complex{n11.real(), 0.0};
  a(p, q) = Complex{0.0, 0.0};
  a(q, p) = Complex{0.0, 0.0};

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * wpp + vkq * wqp;
    v(k, q) = vkp * wpq + vkq * wqq;
  }
}

double offdiag_norm(const CMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

}  // namespace

EigenSystem hermitian_eig(const CMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("hermitian_eig: matrix not square");
  detail::require_finite(a, "hermitian_eig");
  if (!a.is_hermitian(1e-10)) {
    throw std::invalid_argument("hermitian_eig: matrix not Hermitian within 1e-10");
  }
  const std::size_t n = a.rows();

  // Work on the exactly-Hermitian part so roundoff in the input cannot
  // leak imaginary weight onto the diagonal.
  CMatrix work(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      work(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    }
  }
  CMatrix vecs = CMatrix::identity(n);

  const double scale = std::max(1.0, work.frobenius_norm());
  const double target = 1e-15 * scale;
  for (int sweep = 0; sweep < 100 && offdiag_norm(work) > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(work(p, q)) > target / (n * n + 1)) {
          jacobi_rotate(work, vecs, p, q);
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return work(i, i).real() > work(j, j).real();
  });

  EigenSystem out;
  out.eigenvalues.resize(n);
  out.eigenvectors = CMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = work(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) {
      out.eigenvectors(i, k) = vecs(i, order[k]);
    }
  }
  return out;
}

double trace_norm(const CMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("trace_norm: matrix not square");
  if (a.is_hermitian(1e-10)) {
    EigenSystem es = hermitian_eig(a);
    double sum = 0.0;
    for (double ev : es.eigenvalues) sum += std::abs(ev);
    return sum;
  }
  // Hermitian embedding: eigenvalues come in +/- singular-value pairs.
  const std::size_t n = a.rows();
  CMatrix embed(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      embed(i, n + j) = a(i, j);
      embed(n + i, j) = std::conj(a(j, i));
    }
  }
  EigenSystem es = hermitian_eig(embed);
  double sum = 0.0;
  for (double ev : es.eigenvalues) sum += std::abs(ev);
  return 0.5 * sum;
}

double trace_distance(const CMatrix& a, const CMatrix& b) {
  return 0.5 * trace_norm(a - b);
}

}  // namespace mbqcsim
