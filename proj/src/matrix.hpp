#ifndef AHCERT_MATRIX_HPP
#define AHCERT_MATRIX_HPP

#include <vector>

#include "rational.hpp"

namespace ahcert {

// Square matrix with exact rational (real) entries, row-major.
class RatMatrix {
public:
  RatMatrix() = default;
  explicit RatMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim, Rat(0)) {}
  static RatMatrix identity(int dim);
  static RatMatrix diag(std::vector<Rat> entries);

  int dim() const { return dim_; }
  const Rat& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
  Rat& at(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }

  bool is_zero() const;
  bool operator==(const RatMatrix& o) const { return dim_ == o.dim_ && a_ == o.a_; }
  bool operator!=(const RatMatrix& o) const { return !(*this == o); }

  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix scaled(const Rat& c) const;
  RatMatrix transpose() const;  // adjoint (real scalars)

  Rat trace() const;
  Rat frobenius_sq() const;  // sum of squared entries

  // Exact test via symmetric Gaussian elimination: symmetric and all pivots
  // nonnegative, with zero rows wherever a diagonal pivot vanishes.
  bool is_positive_semidefinite() const;

private:
  int dim_ = 0;
  std::vector<Rat> a_;
};

RatMatrix block_diag(const std::vector<RatMatrix>& blocks);

// kron(I_left, x, I_right): the unital copy of x acting blockwise.
RatMatrix kron_identity_sandwich(int left, const RatMatrix& x, int right);

}  // namespace ahcert

#endif
