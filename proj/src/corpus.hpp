#ifndef AHCERT_CORPUS_HPP
#define AHCERT_CORPUS_HPP

#include <vector>

#include "ideal.hpp"
#include "ktheory.hpp"
#include "rng.hpp"
#include "step.hpp"
#include "trace.hpp"

namespace ahcert {

// Deterministic random inputs for property tests and experiment corpora.

// A point of the space, away from max T when `allow_max` is false.
Point random_point(SpaceKind space, Rng& rng, int level, bool allow_max = false);

// Rational with numerator in [-mag, mag] and denominator in [1, mag].
Rat random_rational(Rng& rng, int mag = 8);

RatMatrix random_matrix(Rng& rng, int dim, int mag = 4);

// Step function with `pieces` random pieces (C0: the last one is zero).
StepFunction random_step_function(SpaceKind space, int size, Rng& rng, int pieces = 4,
                                  int level = 6, int mag = 4);

// Positive (B^T B per piece) with support strictly below `cutoff`.
StepFunction random_positive_below(SpaceKind space, int size, Rng& rng,
                                   const Point& cutoff, int pieces = 3, int mag = 3);

// M_2 contraction: random matrix scaled so its Frobenius bound is <= 1.
RatMatrix random_contraction_m2(Rng& rng);

// Random union of closed intervals (always includes max T).
ZeroSet random_zero_set(SpaceKind space, int stage, Rng& rng, int parts = 3, int level = 6);

AtomicMeasure random_measure(SpaceKind space, Rng& rng, int atoms = 4, int level = 6);

// Element of H_n over the tower: sparse random level-n coefficients.
K0Element random_k0_element(const PartitionTower& tower, int n, Rng& rng,
                            int nonzeros = 8, int mag = 7);

// Random explicit dense-ish sequence list (may contain duplicates).
DenseSequence random_explicit_sequence(SpaceKind space, Rng& rng, int len, int level = 5);

}  // namespace ahcert

#endif
