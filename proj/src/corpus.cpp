#include "corpus.hpp"

#include <algorithm>

namespace ahcert {

Point random_point(SpaceKind space, Rng& rng, int level, bool allow_max) {
  if (space == SpaceKind::interval) {
    int exp = static_cast<int>(rng.below(static_cast<std::uint64_t>(level) + 1));
    std::int64_t top = std::int64_t{1} << exp;
    std::int64_t num = rng.range(0, allow_max ? top : top - 1);
    return Point::dyadic(num, exp);
  }
  std::vector<int> digits;
  for (int d = 1; d <= level; ++d)
    if (rng.coin()) digits.push_back(d);
  bool tail = allow_max && rng.below(4) == 0;
  if (tail) {
    int start = static_cast<int>(rng.below(static_cast<std::uint64_t>(level))) + 1;
    digits.erase(std::remove_if(digits.begin(), digits.end(),
                                [&](int d) { return d >= start; }),
                 digits.end());
    return Point::ternary(std::move(digits), start);
  }
  return Point::ternary(std::move(digits), 0);
}

Rat random_rational(Rng& rng, int mag) {
  std::int64_t num = rng.range(-mag, mag);
  std::int64_t den = rng.range(1, mag);
  return Rat(num, den);
}

RatMatrix random_matrix(Rng& rng, int dim, int mag) {
  RatMatrix m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m.at(i, j) = random_rational(rng, mag);
  return m;
}

StepFunction random_step_function(SpaceKind space, int size, Rng& rng, int pieces,
                                  int level, int mag) {
  std::vector<Point> breaks{Point::min_of(space)};
  for (int i = 1; i < pieces; ++i) {
    Point p = random_point(space, rng, level);
    if (std::find(breaks.begin(), breaks.end(), p) == breaks.end()) breaks.push_back(p);
  }
  std::sort(breaks.begin(), breaks.end());
  std::vector<RatMatrix> vals;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) vals.push_back(random_matrix(rng, size, mag));
  vals.push_back(RatMatrix(size));  // vanish at the top
  return StepFunction(space, size, std::move(breaks), std::move(vals));
}

StepFunction random_positive_below(SpaceKind space, int size, Rng& rng,
                                   const Point& cutoff, int pieces, int mag) {
  if (cutoff.is_min()) return StepFunction::zero(space, size);
  std::vector<Point> breaks{Point::min_of(space)};
  for (int i = 1; i < pieces; ++i) {
    Point p = random_point(space, rng, 6);
    if (p < cutoff && std::find(breaks.begin(), breaks.end(), p) == breaks.end())
      breaks.push_back(p);
  }
  std::sort(breaks.begin(), breaks.end());
  std::vector<RatMatrix> vals;
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    RatMatrix b = random_matrix(rng, size, mag);
    vals.push_back(b.transpose() * b);  // positive semidefinite
  }
  breaks.push_back(cutoff);
  vals.push_back(RatMatrix(size));
  return StepFunction(space, size, std::move(breaks), std::move(vals));
}

RatMatrix random_contraction_m2(Rng& rng) {
  RatMatrix x = random_matrix(rng, 2, 3);
  Rat fsq = x.frobenius_sq();
  if (fsq <= 1) return x;
  Rat c = sqrt_upper(fsq);  // c >= ||x||_F, so x / c is a contraction
  return x.scaled(1 / c);
}

ZeroSet random_zero_set(SpaceKind space, int stage, Rng& rng, int parts, int level) {
  std::vector<ClosedInterval> intervals;
  Point top = Point::max_of(space);
  intervals.push_back({top, top});
  for (int i = 0; i < parts; ++i) {
    Point a = random_point(space, rng, level, true);
    Point b = random_point(space, rng, level, true);
    if (b < a) std::swap(a, b);
    intervals.push_back({a, b});
  }
  return ZeroSet(space, stage, std::move(intervals));
}

AtomicMeasure random_measure(SpaceKind space, Rng& rng, int atoms, int level) {
  std::vector<std::pair<Point, Rat>> list;
  for (int i = 0; i < atoms; ++i) {
    Point p = random_point(space, rng, level);
    Rat m(rng.range(1, 8), rng.range(1, 4));
    list.emplace_back(p, m);
  }
  return AtomicMeasure(space, std::move(list));
}

K0Element random_k0_element(const PartitionTower& tower, int n, Rng& rng, int nonzeros,
                            int mag) {
  int count = (1 << n) - 1;
  std::vector<Int> coeffs(static_cast<std::size_t>(count), Int(0));
  for (int i = 0; i < nonzeros; ++i) {
    std::size_t slot = rng.below(static_cast<std::uint64_t>(count));
    std::int64_t c = rng.range(-mag, mag);
    coeffs[slot] = c;
  }
  return from_level_coefficients(tower, n, coeffs);
}

DenseSequence random_explicit_sequence(SpaceKind space, Rng& rng, int len, int level) {
  std::vector<Point> pts;
  for (int i = 0; i < len; ++i) pts.push_back(random_point(space, rng, level));
  return DenseSequence::explicit_list(std::move(pts));
}

}  // namespace ahcert
