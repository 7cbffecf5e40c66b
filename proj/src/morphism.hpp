#ifndef AHCERT_MORPHISM_HPP
#define AHCERT_MORPHISM_HPP

#include <string>
#include <vector>

#include "space.hpp"
#include "step.hpp"

namespace ahcert {

// Connecting map phi_{m,n}: a block-diagonal of 2^{m-n} threshold pullbacks.
// Slot j (binary-counter order) carries f o chi_{slots[j]}; the canonical
// construction from {t_n, ..., t_{m-1}} sets slots[j] = max of the subset
// selected by the bits of j, with max of the empty set = min T.
struct DiagonalMorphism {
  SpaceKind space = SpaceKind::interval;
  int source_stage = 0;
  int target_stage = 0;
  std::vector<Point> slots;  // size 2^{target-source}

  int depth() const { return target_stage - source_stage; }

  std::string to_json_string() const;
  static DiagonalMorphism parse_json(std::string_view text, SpaceKind space);
};

DiagonalMorphism identity_morphism(SpaceKind space, int stage);

// Subset maxima of {t_n, ..., t_{m-1}} in binary-counter order (bit i of the
// slot index selects t_{n+i}).
DiagonalMorphism build_canonical_morphism(const DenseSequence& seq, int n, int m);

// Slot (a * 2^{m-n} + b) of the composite is max(outer slot a, inner slot b);
// composing canonical morphisms reproduces the canonical one slot by slot.
DiagonalMorphism compose_morphisms(const DiagonalMorphism& outer,
                                   const DiagonalMorphism& inner);

// Block-diagonal application: block j = pullback_chi(f, slots[j]).
StepFunction apply_morphism(const DiagonalMorphism& phi, const StepFunction& f);

// Equality up to unitary equivalence: same stages, same slot multiset.
bool slot_multiset_equal(const DiagonalMorphism& a, const DiagonalMorphism& b);

// psi_n(f) = diag(f, ..., f, f o chi_t) with `multiplicity` plain copies.
struct GoodearlMorphism {
  int source_size = 1;
  int multiplicity = 1;  // l_n
  Point threshold;       // t_n

  int target_size() const { return (multiplicity + 1) * source_size; }
};

StepFunction apply_goodearl(const GoodearlMorphism& psi, const StepFunction& f);

}  // namespace ahcert

#endif
