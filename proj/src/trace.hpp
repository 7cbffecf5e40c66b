#ifndef AHCERT_TRACE_HPP
#define AHCERT_TRACE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "morphism.hpp"

namespace ahcert {

// Finitely supported nonnegative measure with exact rational masses.
class AtomicMeasure {
public:
  AtomicMeasure(SpaceKind space, std::vector<std::pair<Point, Rat>> atoms);
  static AtomicMeasure zero(SpaceKind space) { return AtomicMeasure(space, {}); }

  SpaceKind space() const { return space_; }
  const std::vector<std::pair<Point, Rat>>& atoms() const { return atoms_; }
  bool is_zero() const { return atoms_.empty(); }

  Rat total_mass() const;
  Rat mass_upto(const Point& v) const;  // mu([min T, v])

  bool operator==(const AtomicMeasure& o) const {
    return space_ == o.space_ && atoms_ == o.atoms_;
  }

private:
  SpaceKind space_;
  std::vector<std::pair<Point, Rat>> atoms_;  // sorted, distinct, masses > 0
};

// mu o chi_u^{-1}: mass at points <= u collapses onto u, mass above moves
// nowhere, total mass preserved.
AtomicMeasure pushforward_chi(const AtomicMeasure& mu, const Point& u);

// mu_n = sum over subsets F of X_{k,n} of mu_{n+k} o chi_{max F}^{-1},
// grouped by maximum: identity once, then weight 2^{i-1} for the i-th
// element of the value-sorted (duplicates kept) threshold list.
AtomicMeasure measure_recursion(const DenseSequence& seq, int n, int k,
                                const AtomicMeasure& top);

// tau_n(f) = sum over atoms of mass * Tr(f(atom)).
struct TraceFunctional {
  int stage = 0;
  AtomicMeasure mu;
};

Rat trace_of(const TraceFunctional& tau, const StepFunction& f);

// Conditional decay certificate: the least k whose window {t_n,...,t_{n+k-1}}
// hits (s, r] often enough that 2^{-hits} <= eps, so every consistent
// measure tower satisfies mu_n([0,s]) <= 2^{-hits} mu_n([0,r]).
struct TracelessnessCertificate {
  int n = 0;
  Point s;
  Point r;
  Rat epsilon;
  std::uint64_t k = 0;
  std::uint64_t hits = 0;
  std::vector<std::uint64_t> hit_indices;
  Rat bound;  // 2^{-hits}

  std::string to_json_string() const;
};

TracelessnessCertificate tracelessness_certificate(const DenseSequence& seq, int n,
                                                   const Point& s, const Point& r,
                                                   const Rat& epsilon,
                                                   std::uint64_t horizon = 1 << 16);

// The interval-mass scaling check behind the certificate: pushing mu_{n+k}
// down always multiplies mu([0, v]) by 2^{|X cap [0,v]|} exactly.
bool scaling_identity_holds(const DenseSequence& seq, int n, int k,
                            const AtomicMeasure& top, const Point& v);

// Goodearl tower data: psi_j has multiplicity l_j, so k_{j+1} = (l_j + 1) k_j.
// Multiplicities come from a rule so non-periodic towers (l_j = j^2 + 2j)
// stay exact at any depth.
struct GoodearlParams {
  enum class Rule { cycle, ones, squares };

  Rule rule = Rule::cycle;
  std::vector<std::int64_t> list;  // for Rule::cycle
  DenseSequence seq = DenseSequence::canonical(SpaceKind::interval);

  std::int64_t multiplicity(std::uint64_t j) const;
};

// prod over j <= N with t_j in (s, r] of l_j / (l_j + 1): the exact factor
// contracting mu([0,s]) / mu([0,r]) through N stages of the psi tower.
Rat goodearl_ratio_bound(const GoodearlParams& params, const Point& s, const Point& r,
                         std::uint64_t depth);

}  // namespace ahcert

#endif
