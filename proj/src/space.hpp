#ifndef AHCERT_SPACE_HPP
#define AHCERT_SPACE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"

namespace ahcert {

// The two base spaces: T = [0,1] with dyadic points, and the middle-thirds
// Cantor set with points sum_{n in F} 2*3^{-n}, optionally plus an all-2s
// tail from position N on (so gap endpoints and lambda-preimages stay exact).
enum class SpaceKind { interval, cantor };

std::string space_name(SpaceKind k);
SpaceKind parse_space(std::string_view name);

class Point {
public:
  Point() = default;  // dyadic 0

  // p/2^e in [0,1], stored reduced (p odd or e = 0). e is capped at 62 so
  // comparisons stay in native words.
  static Point dyadic(std::int64_t num, int exp);

  // digits: positions carrying ternary digit 2 (finite part). tail_start = N
  // adds digit 2 at every position >= N; 0 means no tail. The point 1 is
  // ({}, tail 1). Adjacent representations are normalized: a digit at
  // tail_start-1 is absorbed into the tail.
  static Point ternary(std::vector<int> digits, int tail_start = 0);

  static Point min_of(SpaceKind k);
  static Point max_of(SpaceKind k);

  SpaceKind space() const { return kind_; }
  bool is_min() const;
  bool is_max() const;

  std::int64_t num() const { return num_; }
  int exp() const { return exp_; }
  const std::vector<int>& digits() const { return digits_; }
  int tail_start() const { return tail_; }
  bool has_tail() const { return tail_ != 0; }

  Rat value() const;  // exact real value

  // Total order within one space; mixed-space comparison is invalid-argument.
  static int compare(const Point& a, const Point& b);
  bool operator==(const Point& o) const { return compare(*this, o) == 0; }
  bool operator!=(const Point& o) const { return compare(*this, o) != 0; }
  bool operator<(const Point& o) const { return compare(*this, o) < 0; }
  bool operator<=(const Point& o) const { return compare(*this, o) <= 0; }
  bool operator>(const Point& o) const { return compare(*this, o) > 0; }
  bool operator>=(const Point& o) const { return compare(*this, o) >= 0; }

  // "d:<num>/2^<exp>" or "t:{n1,n2,...}" / "t:{...}+tail<N>"
  std::string to_string() const;
  static Point parse(std::string_view text);

private:
  SpaceKind kind_ = SpaceKind::interval;
  std::int64_t num_ = 0;
  int exp_ = 0;
  std::vector<int> digits_;
  int tail_ = 0;
};

Point point_max(const Point& a, const Point& b);
Point point_min(const Point& a, const Point& b);

// chi_s(t) = max{t, s}
Point chi_apply(const Point& threshold, const Point& t);

struct ThresholdMap {
  Point threshold;
  Point operator()(const Point& t) const { return chi_apply(threshold, t); }
};

// --- Cantor-specific order utilities ---

// Right endpoint of the gap immediately above a tail point: for
// x = (F, tail N), the next Cantor point is (F + {N-1}).
Point cantor_gap_right(const Point& tail_point);

// Largest Cantor point strictly below a nonzero finite point: for x = (F),
// pred = (F - {max F}, tail max F + 1).
Point cantor_pred(const Point& finite_point);

// True iff (a, b) contains a point of the space. On [0,1] with a < b this
// always holds; on the Cantor set it fails exactly across a removed gap.
bool has_point_between(const Point& a, const Point& b);

// --- finite test meshes ---

// Level-L mesh has 2^L cells: [q 2^-L, (q+1) 2^-L) on [0,1]; the generation-L
// standard pieces on the Cantor set. Cells are indexed bottom-up.
std::uint64_t mesh_cell_count(int level);
std::uint64_t mesh_cell_of(const Point& p, int level);

// --- the maps of the Cantor-to-interval surjection ---

// lambda(sum_{n in F} 2*3^-n [+ tail from N]) = sum_{n in F} 2^-n [+ 2^{1-N}]
Point lambda_map(const Point& ternary_point);

// Least x in the Cantor set with lambda(x) >= d; satisfies lambda(x) = d.
// Uses the eventually-2 representation for 0 < d <= 1.
Point lambda_min_preimage(const Point& dyadic_point);

// --- dense sequences {t_n} in T0 ---

// Canonical generators enumerate nested mesh blocks:
//   dyadic block L  = 1/2^L, 2/2^L, ..., (2^L-1)/2^L
//   ternary block L = the 2^L - 1 nonzero points with digits in {1..L},
//                     in increasing order
// concatenated for L = 1, 2, 3, ...  Every tail then contains complete
// blocks of arbitrarily fine mesh. Note lambda maps the ternary block
// enumeration onto the dyadic one index by index.
class DenseSequence {
public:
  enum class Kind { canonical_dyadic, canonical_ternary, explicit_list };

  static DenseSequence canonical(SpaceKind space);
  // Cycled periodically; all points must share a space and avoid max T.
  static DenseSequence explicit_list(std::vector<Point> points);

  Kind kind() const { return kind_; }
  SpaceKind space() const { return space_; }
  const std::vector<Point>& list() const { return list_; }

  Point at(std::uint64_t n) const;  // n >= 1

  std::string to_json_string() const;
  static DenseSequence parse_json(std::string_view text);

private:
  Kind kind_ = Kind::canonical_dyadic;
  SpaceKind space_ = SpaceKind::interval;
  std::vector<Point> list_;
};

// Finite proxy for tail density: scan indices [start, start + max_window)
// until every level-`mesh_level` cell has been hit.
struct DensityEvidence {
  bool covered = false;
  int mesh_level = 0;
  std::uint64_t start = 0;
  std::uint64_t scanned = 0;  // indices consumed
  std::vector<std::uint64_t> missing_cells;
};

DensityEvidence tail_mesh_coverage(const DenseSequence& seq, std::uint64_t start,
                                   int mesh_level, std::uint64_t max_window);

// A clopen interval of the base space: [lo, hi) on [0,1]; the order interval
// [lo, hi] on the Cantor set.
struct ClopenInterval {
  Point lo;
  Point hi;
  bool contains(const Point& p) const;
  bool operator==(const ClopenInterval& o) const { return lo == o.lo && hi == o.hi; }
};

}  // namespace ahcert

#endif
