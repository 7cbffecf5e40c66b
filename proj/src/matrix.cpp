#include "matrix.hpp"

#include <stdexcept>

namespace ahcert {

RatMatrix RatMatrix::identity(int dim) {
  RatMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::diag(std::vector<Rat> entries) {
  RatMatrix m(static_cast<int>(entries.size()));
  for (int i = 0; i < m.dim(); ++i) m.at(i, i) = std::move(entries[i]);
  return m;
}

bool RatMatrix::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix size mismatch");
  RatMatrix r(dim_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix size mismatch");
  RatMatrix r(dim_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix size mismatch");
  RatMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      const Rat& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < dim_; ++j) {
        const Rat& bkj = o.at(k, j);
        if (bkj != 0) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

RatMatrix RatMatrix::scaled(const Rat& c) const {
  RatMatrix r(dim_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Rat RatMatrix::trace() const {
  Rat t(0);
  for (int i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

Rat RatMatrix::frobenius_sq() const {
  Rat s(0);
  for (const auto& v : a_)
    if (v != 0) s += v * v;
  return s;
}

bool RatMatrix::is_positive_semidefinite() const {
  if (*this != transpose()) return false;
  RatMatrix m = *this;
  int n = dim_;
  for (int k = 0; k < n; ++k) {
    if (m.at(k, k) < 0) return false;
    if (m.at(k, k) == 0) {
      // a psd matrix with zero diagonal entry has a zero row/column there
      for (int j = k; j < n; ++j)
        if (m.at(k, j) != 0) return false;
      continue;
    }
    for (int i = k + 1; i < n; ++i) {
      Rat f = m.at(i, k) / m.at(k, k);
      if (f == 0) continue;
      for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  return true;
}

RatMatrix block_diag(const std::vector<RatMatrix>& blocks) {
  int total = 0;
  for (const auto& b : blocks) total += b.dim();
  RatMatrix r(total);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.dim(); ++i)
      for (int j = 0; j < b.dim(); ++j) r.at(off + i, off + j) = b.at(i, j);
    off += b.dim();
  }
  return r;
}

RatMatrix kron_identity_sandwich(int left, const RatMatrix& x, int right) {
  int d = x.dim();
  RatMatrix r(left * d * right);
  for (int l = 0; l < left; ++l)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const Rat& v = x.at(i, j);
        if (v == 0) continue;
        for (int k = 0; k < right; ++k) {
          int row = (l * d + i) * right + k;
          int col = (l * d + j) * right + k;
          r.at(row, col) = v;
        }
      }
  return r;
}

}  // namespace ahcert
