#ifndef AHCERT_STEP_HPP
#define AHCERT_STEP_HPP

#include <string>
#include <vector>

#include "matrix.hpp"
#include "space.hpp"

namespace ahcert {

// Matrix-valued step function on T0 = T \ {max T}: piece i is constant on
// [breaks[i], breaks[i+1]) with breaks[0] = min T and an implicit final
// endpoint max T. Stored canonical: strictly increasing breakpoints, equal
// adjacent values merged. eval(max T) returns the last value, i.e. the
// continuous extension to C(T, M_k); membership in C_0 is the queryable
// vanishes_at_top(), not a type invariant, since pullbacks and the unital
// algebras of the divisibility witness leave C_0.
class StepFunction {
public:
  StepFunction() = default;
  StepFunction(SpaceKind space, int size, std::vector<Point> breaks,
               std::vector<RatMatrix> values);

  static StepFunction zero(SpaceKind space, int size);
  static StepFunction constant(SpaceKind space, RatMatrix value);
  // value on [lo, hi) and zero elsewhere (scalar helper used all over tests)
  static StepFunction indicator(SpaceKind space, int size, const Point& lo,
                                const Point& hi, const RatMatrix& value);

  SpaceKind space() const { return space_; }
  int size() const { return size_; }
  // stage n with size 2^n; throws if the size is not a power of two
  int stage() const;
  const std::vector<Point>& breaks() const { return breaks_; }
  const std::vector<RatMatrix>& values() const { return values_; }
  std::size_t piece_count() const { return breaks_.size(); }

  const RatMatrix& eval(const Point& t) const;
  bool is_zero() const;
  bool vanishes_at_top() const { return values_.back().is_zero(); }

  bool operator==(const StepFunction& o) const;
  bool operator!=(const StepFunction& o) const { return !(*this == o); }

  std::string to_json_string() const;
  static StepFunction parse_json(std::string_view text, SpaceKind space);

private:
  void canonicalize();
  SpaceKind space_ = SpaceKind::interval;
  int size_ = 1;
  std::vector<Point> breaks_;
  std::vector<RatMatrix> values_;
};

// Pointwise *-algebra operations (same space, same size).
StepFunction add(const StepFunction& f, const StepFunction& g);
StepFunction sub(const StepFunction& f, const StepFunction& g);
StepFunction mul(const StepFunction& f, const StepFunction& g);
StepFunction adjoint(const StepFunction& f);
StepFunction scale(const Rat& c, const StepFunction& f);

// f o chi_s: constant f(s) on [min T, s], original values above.
StepFunction pullback_chi(const StepFunction& f, const Point& s);

// Pullback along lambda : Cantor -> [0,1] of a step function on [0,1].
StepFunction pullback_lambda(const StepFunction& f);

// every piece positive semidefinite
bool is_positive(const StepFunction& f);

// Certified upper bound on the sup-norm: max Frobenius norm over pieces.
// `sq` is exact; `up` is sqrt(sq) rounded up to denominator 2^32. Soundness-
// critical comparisons should use `sq`.
struct NormBound {
  Rat sq;
  Rat up;
};
NormBound norm_upper(const StepFunction& f);

// E(f)(t) = 2^-n Tr(f(t)) as a size-1 step function (stage 0 scalars).
StepFunction conditional_expectation(const StepFunction& f);

// Common refinement of the two breakpoint lists (helper shared by the
// pointwise ops; exposed for tests).
std::vector<Point> common_refinement(const StepFunction& f, const StepFunction& g);

}  // namespace ahcert

#endif
