#ifndef AHCERT_IDEAL_HPP
#define AHCERT_IDEAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "morphism.hpp"

namespace ahcert {

// The stage ideal I_t^{(n)} = { f : f(s) = 0 for s >= t }, determined by its
// cut point.
struct IdealUpSet {
  SpaceKind space = SpaceKind::interval;
  int stage = 0;
  Point cut;
};

// f in I_t iff every piece meeting [t, max T) is zero.
bool ideal_membership(const StepFunction& f, const IdealUpSet& ideal);

// phi_{m,n}^{-1}(I_t^{(m)}) = I_t^{(n)}: same cut, source stage.
IdealUpSet pullback_ideal(const DiagonalMorphism& phi, const IdealUpSet& ideal);

// Extensional check of the pullback on a corpus: f in I_t^{(n)} iff
// phi(f) in I_t^{(m)} for every corpus function.
bool pullback_ideal_extensional(const DiagonalMorphism& phi, const IdealUpSet& ideal,
                                const std::vector<StepFunction>& corpus);

// Closed order interval [lo, hi] of T (endpoints are points of the space).
struct ClosedInterval {
  Point lo;
  Point hi;
  bool operator==(const ClosedInterval& o) const { return lo == o.lo && hi == o.hi; }
};

// A closed zero set T_n as a finite union of closed order intervals, kept
// sorted, disjoint, and merged across empty gaps of the space.
class ZeroSet {
public:
  ZeroSet(SpaceKind space, int stage, std::vector<ClosedInterval> parts);

  SpaceKind space() const { return space_; }
  int stage() const { return stage_; }
  const std::vector<ClosedInterval>& parts() const { return parts_; }
  bool contains(const Point& p) const;
  Point min_point() const;
  bool operator==(const ZeroSet& o) const;

private:
  SpaceKind space_;
  int stage_;
  std::vector<ClosedInterval> parts_;
};

// chi_u([a,b] cap T) = [max(a,u), max(b,u)] cap T
ClosedInterval chi_image(const ClosedInterval& interval, const Point& u);

// T_n = union over subsets F of X_{n,k} of chi_{max F}(T_{n+k}); the distinct
// threshold values (plus the identity from the empty set) suffice.
ZeroSet zero_set_recursion(const DenseSequence& seq, int n, int k, const ZeroSet& top);

struct IdealStageRecord {
  int stage = 0;
  Point min;
  std::vector<ClosedInterval> parts;
};

struct IdealCertificate {
  Point cut;
  int from_stage = 0;
  int to_stage = 0;
  std::vector<IdealStageRecord> stages;  // possibly strided sample
  std::uint64_t absorbed_points = 0;     // sequence points >= cut verified inside T_n
  bool mesh_covered = false;             // every mesh cell above the cut holds one
  int mesh_level = 0;
  std::vector<std::uint64_t> missing_cells;

  std::string to_json_string() const;
};

// Runs the recursion from `initial` (at its own stage) down `depth` single
// steps, certifies the common minimum, checks all absorbed sequence points,
// and reports mesh coverage above the cut at `mesh_level`. `stage_stride`
// controls how many stage records the certificate materializes.
IdealCertificate certify_ideal_is_point(const DenseSequence& seq, const ZeroSet& initial,
                                        int depth, int mesh_level,
                                        int stage_stride = 1);

}  // namespace ahcert

#endif
