#ifndef AHCERT_KTHEORY_HPP
#define AHCERT_KTHEORY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "space.hpp"
#include "step.hpp"

namespace ahcert {

// Element of C_0(Omega_0, Z): an integer combination of clopen-interval
// indicators, stored like a scalar step function on the Cantor set. Pieces
// are [breaks[i], breaks[i+1]) with breakpoints at gap right-endpoints
// (finite digit sets), so each piece is clopen; the top piece carries 0.
class K0Element {
public:
  K0Element(std::vector<Point> breaks, std::vector<Int> coeffs);
  static K0Element zero();
  // c * 1_{[lo, hi] cap Omega}; hi is the gap-left point ending the interval,
  // i.e. the piece is [lo, gap_right(hi)).
  static K0Element indicator(const ClopenInterval& interval, Int c = Int(1));

  const std::vector<Point>& breaks() const { return breaks_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  Int eval(const Point& x) const;
  Int min_coeff() const;
  bool pointwise_nonneg() const;

  bool operator==(const K0Element& o) const {
    return breaks_ == o.breaks_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const K0Element& o) const { return !(*this == o); }

private:
  void canonicalize();
  std::vector<Point> breaks_;
  std::vector<Int> coeffs_;
};

K0Element add(const K0Element& a, const K0Element& b);
K0Element negate(const K0Element& a);
K0Element scale(const Int& c, const K0Element& a);
K0Element pullback_chi(const K0Element& g, const Point& t);

// alpha_n(g) = g + g o chi_{t_n}
K0Element alpha_apply(const K0Element& g, const Point& t);
K0Element alpha_apply(const DenseSequence& seq, int n, const K0Element& g);

// alpha_{n+k,n}(g) = sum over subsets of X_{k,n} of g o chi_{max F}, grouped
// by maxima: g + sum_i 2^{i-1} g o chi_{x_(i)} over the value-sorted window.
K0Element alpha_composite(const DenseSequence& seq, int n, int k, const K0Element& g);

// Exact minimum coefficient of alpha_{n+k,n}(g) without materializing the
// composite (weights get huge; only prefix sums of them are needed).
Int alpha_composite_min(const DenseSequence& seq, int n, int k, const K0Element& g);

// Partition tower: level n is the 2^n standard generation-n pieces, written
// in increasing order, with A_j^{(n)} = A_{2j-1}^{(n+1)} u A_{2j}^{(n+1)}.
struct PartitionTower {
  std::vector<std::vector<ClopenInterval>> levels;  // levels[n-1], size 2^n
  std::vector<int> threshold_slot;                  // j0 per level: t_n in A_{j0}^{(n)}

  int depth() const { return static_cast<int>(levels.size()); }
  const std::vector<ClopenInterval>& level(int n) const { return levels[n - 1]; }
  int j0(int n) const { return threshold_slot[n - 1]; }
};

PartitionTower build_partition_tower(const DenseSequence& seq, int depth);

// Coefficients of the dyadic embedding beta_n on the generators of H_n:
// rows[j-1][i-1] = delta(j, i, n) for 1 <= i <= j <= 2^n - 1, and
// beta_n(1_{A_j}) = sum_i delta(j,i,n) 1_{A_i}. Diagonals are 2^{-k}.
struct DeltaTable {
  int level = 1;
  std::vector<std::vector<Dyadic>> rows;

  const Dyadic& delta(int j, int i) const { return rows[j - 1][i - 1]; }
};

DeltaTable delta_table_level1();
// Extends level n to level n+1 using the threshold slot j0 of level n; level-n
// indicators appearing in the extension are expanded into their two children.
DeltaTable delta_table_next(const DeltaTable& table, int j0);
std::vector<DeltaTable> beta_recursion(const PartitionTower& tower, int max_level);

// Element of G = C_0(Omega_0, Z[1/2]) expressed over the level-n partition
// (coefficient of 1_{A_j^{(n)}} at index j-1; the top interval carries 0).
struct DyadicVector {
  int level = 1;
  std::vector<Dyadic> coeffs;  // size 2^level - 1

  bool is_zero() const;
  bool operator==(const DyadicVector& o) const {
    return level == o.level && coeffs == o.coeffs;
  }
};

// g as coefficients over the level-n generators; throws invalid_argument
// ("basis mismatch") if g is not constant on each level-n interval or does
// not vanish on the top one.
std::vector<Int> level_coefficients(const K0Element& g, const PartitionTower& tower, int n);
K0Element from_level_coefficients(const PartitionTower& tower, int n,
                                  const std::vector<Int>& coeffs);

DyadicVector beta_apply(const DeltaTable& table, const std::vector<Int>& coeffs);
DyadicVector beta_apply_dyadic(const DeltaTable& table, const std::vector<Dyadic>& coeffs);

// Lexicographic sign: the sign of the topmost nonzero coefficient.
int lex_sign(const DyadicVector& v);

// Back-substitution on the triangular system beta_n(h) = 1_{A_j^{(n)}};
// the diagonal entries 2^{-k} make the solve exact in Z[1/2].
std::vector<Dyadic> generator_solve(const DeltaTable& table, int j);

struct TotalOrderCertificate {
  int sign = 0;             // +1, -1, or 0 for g = 0
  std::uint64_t k = 0;      // certifying depth: alpha_{n+k,n}(g) pointwise >= 0 (after flip)
  std::uint64_t guaranteed_k = 0;
  std::uint64_t hits_needed = 0;
  std::uint64_t hits_at_k = 0;
  Point r;  // topmost point with g(r) != 0
  Point s;  // lower end of the witness interval A = [s, r]
  Int min_coeff_at_k;

  std::string to_json_string() const;
};

// Decides the sign of a nonzero g in the totally ordered K0: flips g so the
// top value is positive, then grows k until the composite is pointwise
// nonnegative. Termination is guaranteed at the first k whose window hits
// (s, r] at least log2(1 + |min g|) times.
TotalOrderCertificate total_order_decide(const DenseSequence& seq, int n,
                                         const K0Element& g,
                                         std::uint64_t horizon = 1 << 20);

// One commuting square of the embedding at stage n: pulling back along
// lambda commutes with the connecting maps driven by the paired canonical
// sequences (s_n = lambda(t_n)).
bool lambda_square_commutes(const StepFunction& f, int n);

}  // namespace ahcert

#endif
