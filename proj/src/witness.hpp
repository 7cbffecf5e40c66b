#ifndef AHCERT_WITNESS_HPP
#define AHCERT_WITNESS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "morphism.hpp"

namespace ahcert {

// Witness that phi_{m,n}(f) is equivalent to a positive g orthogonal to it:
// every slot whose threshold reaches past the support of f carries the zero
// block, and those are at least half of all slots, so each live block can be
// moved to its own dead slot. The partial isometry x moving block i to slot
// pair_of[i] (square roots of the blocks are irrational, so x is kept
// symbolic as this pairing; x*x = g and xx* = phi(f) reduce to exact
// block-level identities checked by verify()).
struct StabilityWitness {
  DiagonalMorphism phi;
  std::vector<int> zero_slots;
  std::vector<std::pair<int, int>> pairing;  // (live slot, dead slot)
  StepFunction image;                        // phi_{m,n}(f)
  StepFunction g;

  bool verify(const StepFunction& f) const;
  std::string to_json_string() const;
};

// Prop-2.2-style witness. Preconditions: f positive and f(t) = 0 for all
// t >= t_{m-1}; violations are rejected with the offending piece.
StabilityWitness stability_witness(const DenseSequence& seq, int n, int m,
                                   const StepFunction& f);

// Approximate-divisibility witness: a reordered copy of phi_{n+k,n} whose
// slots are grouped in pairs with equal thresholds except the first pair
// (empty set vs the smallest element), plus the exact piecewise bound
// showing the unital 2x2 copy diag(x, ..., x) almost commutes with every
// phi~(h), h in H.
struct ApproxDivWitness {
  SpaceKind space = SpaceKind::interval;
  int n = 0;
  int m = 0;  // first index with |t_m - min T| < delta
  int k = 0;  // m + 1 - n
  Rat delta;
  Rat epsilon;
  std::vector<Point> sorted_thresholds;    // s_1 <= ... <= s_k
  DiagonalMorphism reordered;              // slots (min, s1, s2, s2, s3, s3, s3, s3, ...)
  std::vector<std::pair<int, int>> pairs;  // (2j, 2j+1) slot pairs
  std::vector<Rat> deviation_sq;           // per h: max-piece Frobenius^2 of h - h o chi_{s1}

  std::string to_json_string() const;
};

// Scans the pieces of every h for the largest delta with
// frobenius^2(h(t) - h(min T)) <= (eps/2)^2 below delta, walks the sequence
// for the first m with |t_m - min T| < delta, and certifies
// frobenius^2(h - h o chi_{s1}) <= eps^2 exactly. Throws horizon_exhausted
// (with the delta that was needed) if no such m exists within the horizon.
ApproxDivWitness approx_divisibility_witness(const DenseSequence& seq, int n,
                                             const std::vector<StepFunction>& H,
                                             const Rat& epsilon,
                                             std::uint64_t horizon = 1 << 16);

// Exact squared Frobenius bound of [diag(x,...,x), phi~(h)], computed from
// the pair structure: only pairs with distinct thresholds contribute, each
// as (x01^2 + x10^2) * frobenius^2(block difference).
Rat commutator_norm_sq(const ApproxDivWitness& w, const StepFunction& h,
                       const RatMatrix& x);

// Dense oracle for the same commutator (builds the full matrices); used to
// cross-check the structured computation on small cases.
Rat commutator_norm_sq_dense(const ApproxDivWitness& w, const StepFunction& h,
                             const RatMatrix& x);

}  // namespace ahcert

#endif
