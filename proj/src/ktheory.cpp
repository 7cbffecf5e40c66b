#include "ktheory.hpp"

#include <algorithm>
#include <stdexcept>

#include "errors.hpp"
#include "json.hpp"
#include "morphism.hpp"

namespace ahcert {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

void require_break(const Point& b) {
  if (b.space() != SpaceKind::cantor) bad("K0 breakpoints live on the Cantor set");
  if (b.has_tail()) bad("K0 breakpoints must be gap right-endpoints (finite digit sets)");
}

}  // namespace

K0Element::K0Element(std::vector<Point> breaks, std::vector<Int> coeffs)
    : breaks_(std::move(breaks)), coeffs_(std::move(coeffs)) {
  if (breaks_.empty() || breaks_.size() != coeffs_.size())
    bad("breakpoints and coefficients must align");
  if (!breaks_.front().is_min()) bad("first breakpoint must be 0");
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    require_break(breaks_[i]);
    if (i > 0 && !(breaks_[i - 1] < breaks_[i])) bad("breakpoints must increase");
  }
  canonicalize();
  if (coeffs_.back() != 0) bad("top coefficient must vanish (C0 constraint)");
}

void K0Element::canonicalize() {
  std::vector<Point> nb;
  std::vector<Int> nc;
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    if (!nc.empty() && nc.back() == coeffs_[i]) continue;
    nb.push_back(breaks_[i]);
    nc.push_back(coeffs_[i]);
  }
  breaks_ = std::move(nb);
  coeffs_ = std::move(nc);
}

K0Element K0Element::zero() { return K0Element({Point::min_of(SpaceKind::cantor)}, {Int(0)}); }

K0Element K0Element::indicator(const ClopenInterval& interval, Int c) {
  if (interval.hi.is_max())
    bad("indicator of the top interval is not a C0 element");
  if (!interval.hi.has_tail())
    bad("clopen interval must end at a gap left-endpoint");
  Point upper = cantor_gap_right(interval.hi);
  std::vector<Point> breaks{Point::min_of(SpaceKind::cantor)};
  std::vector<Int> coeffs{Int(0)};
  if (interval.lo.is_min()) {
    coeffs.back() = c;
  } else {
    breaks.push_back(interval.lo);
    coeffs.push_back(c);
  }
  breaks.push_back(upper);
  coeffs.push_back(Int(0));
  return K0Element(std::move(breaks), std::move(coeffs));
}

bool K0Element::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

Int K0Element::eval(const Point& x) const {
  std::size_t lo = 0, hi = breaks_.size();
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (breaks_[mid] <= x)
      lo = mid;
    else
      hi = mid;
  }
  return coeffs_[lo];
}

Int K0Element::min_coeff() const {
  Int m = coeffs_.front();
  for (const auto& c : coeffs_)
    if (c < m) m = c;
  return m;
}

bool K0Element::pointwise_nonneg() const { return min_coeff() >= 0; }

K0Element add(const K0Element& a, const K0Element& b) {
  std::vector<Point> breaks;
  std::size_t i = 0, j = 0;
  while (i < a.breaks().size() || j < b.breaks().size()) {
    const Point* next = nullptr;
    if (j == b.breaks().size() ||
        (i < a.breaks().size() && a.breaks()[i] <= b.breaks()[j]))
      next = &a.breaks()[i++];
    else
      next = &b.breaks()[j++];
    if (breaks.empty() || breaks.back() != *next) breaks.push_back(*next);
  }
  std::vector<Int> coeffs;
  coeffs.reserve(breaks.size());
  for (const auto& p : breaks) coeffs.push_back(a.eval(p) + b.eval(p));
  return K0Element(std::move(breaks), std::move(coeffs));
}

K0Element negate(const K0Element& a) { return scale(Int(-1), a); }

K0Element scale(const Int& c, const K0Element& a) {
  std::vector<Int> coeffs;
  coeffs.reserve(a.coeffs().size());
  for (const auto& v : a.coeffs()) coeffs.push_back(c * v);
  return K0Element(a.breaks(), std::move(coeffs));
}

K0Element pullback_chi(const K0Element& g, const Point& t) {
  if (t.space() != SpaceKind::cantor) bad("threshold from the wrong space");
  std::vector<Point> breaks{Point::min_of(SpaceKind::cantor)};
  std::vector<Int> coeffs{g.eval(t)};
  for (std::size_t i = 0; i < g.breaks().size(); ++i) {
    if (g.breaks()[i] > t) {
      breaks.push_back(g.breaks()[i]);
      coeffs.push_back(g.coeffs()[i]);
    }
  }
  return K0Element(std::move(breaks), std::move(coeffs));
}

K0Element alpha_apply(const K0Element& g, const Point& t) {
  return add(g, pullback_chi(g, t));
}

K0Element alpha_apply(const DenseSequence& seq, int n, const K0Element& g) {
  return alpha_apply(g, seq.at(static_cast<std::uint64_t>(n)));
}

namespace {

// value-sorted thresholds of X_{k,n} grouped into (distinct value, weight
// 2^{i-1} summed over positions) pairs; the empty subset contributes the
// identity separately
std::vector<std::pair<Point, Int>> grouped_weights(const DenseSequence& seq, int n, int k) {
  std::vector<Point> xs;
  xs.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) xs.push_back(seq.at(static_cast<std::uint64_t>(n) + i));
  std::sort(xs.begin(), xs.end());
  std::vector<std::pair<Point, Int>> grouped;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Int w = Int(1) << i;
    if (!grouped.empty() && grouped.back().first == xs[i])
      grouped.back().second += w;
    else
      grouped.emplace_back(xs[i], w);
  }
  return grouped;
}

}  // namespace

K0Element alpha_composite(const DenseSequence& seq, int n, int k, const K0Element& g) {
  if (k < 0 || k > 24) bad("composite depth out of range for materialization");
  K0Element acc = g;
  for (const auto& [v, w] : grouped_weights(seq, n, k))
    acc = add(acc, scale(w, pullback_chi(g, v)));
  return acc;
}

Int alpha_composite_min(const DenseSequence& seq, int n, int k, const K0Element& g) {
  auto grouped = grouped_weights(seq, n, k);
  // composite(w) = g(w) * (1 + S(w)) + R(w) with S the weight of thresholds
  // <= w and R the weighted values of thresholds above w
  std::size_t d = grouped.size();
  std::vector<Int> prefix_weight(d + 1, Int(0));
  std::vector<Int> suffix_weighted_value(d + 1, Int(0));
  for (std::size_t i = 0; i < d; ++i)
    prefix_weight[i + 1] = prefix_weight[i] + grouped[i].second;
  for (std::size_t i = d; i-- > 0;)
    suffix_weighted_value[i] =
        suffix_weighted_value[i + 1] + grouped[i].second * g.eval(grouped[i].first);

  // evaluation points: union of g's breakpoints and the thresholds
  Int best;
  bool first = true;
  auto consider = [&](const Point& w) {
    std::size_t idx =
        static_cast<std::size_t>(std::upper_bound(grouped.begin(), grouped.end(), w,
                                                  [](const Point& p, const auto& e) {
                                                    return p < e.first;
                                                  }) -
                                 grouped.begin());
    Int val = g.eval(w) * (1 + prefix_weight[idx]) + suffix_weighted_value[idx];
    if (first || val < best) {
      best = val;
      first = false;
    }
  };
  for (const auto& b : g.breaks()) consider(b);
  for (const auto& [v, w] : grouped) consider(v);
  return best;
}

PartitionTower build_partition_tower(const DenseSequence& seq, int depth) {
  if (seq.space() != SpaceKind::cantor) bad("partition tower lives on the Cantor set");
  if (depth < 1 || depth > 20) bad("tower depth out of range");
  PartitionTower tower;
  std::vector<ClopenInterval> current{
      {Point::min_of(SpaceKind::cantor), Point::max_of(SpaceKind::cantor)}};
  for (int n = 1; n <= depth; ++n) {
    std::vector<ClopenInterval> next;
    next.reserve(current.size() * 2);
    for (const auto& parent : current) {
      // split off the middle third: digits of lo live in {1..n-1}
      auto digits = parent.lo.digits();
      Point left_hi = Point::ternary(digits, n + 1);
      digits.push_back(n);
      Point right_lo = Point::ternary(digits, 0);
      next.push_back({parent.lo, left_hi});
      next.push_back({right_lo, parent.hi});
    }
    current = std::move(next);
    tower.levels.push_back(current);
    Point t = seq.at(static_cast<std::uint64_t>(n));
    int j0 = 0;
    for (std::size_t j = 0; j < current.size(); ++j)
      if (current[j].lo <= t) j0 = static_cast<int>(j) + 1;
    tower.threshold_slot.push_back(j0);
  }
  return tower;
}

DeltaTable delta_table_level1() {
  DeltaTable t;
  t.level = 1;
  t.rows = {{Dyadic::one()}};
  return t;
}

DeltaTable delta_table_next(const DeltaTable& table, int j0) {
  int n = table.level;
  int old_count = (1 << n) - 1;
  if (static_cast<int>(table.rows.size()) != old_count)
    throw internal_inconsistency("delta table has the wrong number of rows");
  if (j0 < 1 || j0 > (1 << n)) bad("threshold slot out of range");

  DeltaTable next;
  next.level = n + 1;
  int new_count = (1 << (n + 1)) - 1;
  next.rows.resize(static_cast<std::size_t>(new_count));

  for (int j = 1; j <= old_count; ++j) {
    const auto& row = table.rows[static_cast<std::size_t>(j) - 1];
    bool below = j < j0;
    Dyadic diag = below ? row[static_cast<std::size_t>(j) - 1]
                        : row[static_cast<std::size_t>(j) - 1].halved();

    // even child 2j: diagonal only
    auto& even = next.rows[static_cast<std::size_t>(2 * j) - 1];
    even.assign(static_cast<std::size_t>(2 * j), Dyadic());
    even[static_cast<std::size_t>(2 * j) - 1] = diag;

    // odd child 2j-1: diagonal plus the expanded level-n coefficients
    auto& odd = next.rows[static_cast<std::size_t>(2 * j - 1) - 1];
    odd.assign(static_cast<std::size_t>(2 * j - 1), Dyadic());
    odd[static_cast<std::size_t>(2 * j - 1) - 1] = diag;
    for (int i = 1; i < j; ++i) {
      Dyadic c;
      if (below) {
        c = row[static_cast<std::size_t>(i) - 1];
      } else if (j == j0) {
        Dyadic correction;
        for (int k = i; k <= j - 1; ++k)
          correction = correction + table.rows[static_cast<std::size_t>(k) - 1]
                                              [static_cast<std::size_t>(i) - 1];
        c = (row[static_cast<std::size_t>(i) - 1] - correction).halved();
      } else {
        c = row[static_cast<std::size_t>(i) - 1].halved();
      }
      // 1_{A_i^{(n)}} = 1_{A_{2i-1}^{(n+1)}} + 1_{A_{2i}^{(n+1)}}
      odd[static_cast<std::size_t>(2 * i - 1) - 1] = c;
      odd[static_cast<std::size_t>(2 * i) - 1] = c;
    }
  }

  // the new top generator maps to itself
  auto& top = next.rows[static_cast<std::size_t>(new_count) - 1];
  top.assign(static_cast<std::size_t>(new_count), Dyadic());
  top[static_cast<std::size_t>(new_count) - 1] = Dyadic::one();

  for (int a = 1; a <= new_count; ++a) {
    const Dyadic& d = next.rows[static_cast<std::size_t>(a) - 1][static_cast<std::size_t>(a) - 1];
    if (d.num() != 1)
      throw internal_inconsistency("diagonal entry is not a positive power of 1/2");
  }
  return next;
}

std::vector<DeltaTable> beta_recursion(const PartitionTower& tower, int max_level) {
  if (max_level < 1) bad("need at least one level");
  if (tower.depth() < max_level) bad("tower is too shallow for the requested level");
  std::vector<DeltaTable> tables{delta_table_level1()};
  for (int n = 1; n < max_level; ++n)
    tables.push_back(delta_table_next(tables.back(), tower.j0(n)));
  return tables;
}

bool DyadicVector::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

std::vector<Int> level_coefficients(const K0Element& g, const PartitionTower& tower, int n) {
  const auto& intervals = tower.level(n);
  std::vector<Int> coeffs;
  coeffs.reserve(intervals.size() - 1);
  std::size_t bi = 0;
  for (std::size_t j = 0; j < intervals.size(); ++j) {
    Int val = g.eval(intervals[j].lo);
    // g must not change value strictly inside the interval
    while (bi < g.breaks().size() && g.breaks()[bi] <= intervals[j].lo) ++bi;
    if (bi < g.breaks().size() && g.breaks()[bi] <= intervals[j].hi)
      bad("basis mismatch: element is not constant on a level-" + std::to_string(n) +
          " interval");
    if (j + 1 == intervals.size()) {
      if (val != 0)
        bad("basis mismatch: element does not vanish on the top interval");
    } else {
      coeffs.push_back(std::move(val));
    }
  }
  return coeffs;
}

K0Element from_level_coefficients(const PartitionTower& tower, int n,
                                  const std::vector<Int>& coeffs) {
  const auto& intervals = tower.level(n);
  if (coeffs.size() + 1 != intervals.size()) bad("coefficient count mismatch");
  std::vector<Point> breaks;
  std::vector<Int> cs;
  for (std::size_t j = 0; j < intervals.size(); ++j) {
    breaks.push_back(intervals[j].lo);
    cs.push_back(j + 1 == intervals.size() ? Int(0) : coeffs[j]);
  }
  return K0Element(std::move(breaks), std::move(cs));
}

DyadicVector beta_apply(const DeltaTable& table, const std::vector<Int>& coeffs) {
  std::vector<Dyadic> dy;
  dy.reserve(coeffs.size());
  for (const auto& c : coeffs) dy.emplace_back(c, 0);
  return beta_apply_dyadic(table, dy);
}

DyadicVector beta_apply_dyadic(const DeltaTable& table, const std::vector<Dyadic>& coeffs) {
  if (coeffs.size() != table.rows.size()) bad("coefficient count does not match the level");
  DyadicVector out;
  out.level = table.level;
  out.coeffs.assign(table.rows.size(), Dyadic());
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    const auto& row = table.rows[j];
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i].is_zero()) continue;
      out.coeffs[i] = out.coeffs[i] + coeffs[j] * row[i];
    }
  }
  return out;
}

int lex_sign(const DyadicVector& v) {
  for (std::size_t i = v.coeffs.size(); i-- > 0;)
    if (!v.coeffs[i].is_zero()) return v.coeffs[i].sign();
  return 0;
}

std::vector<Dyadic> generator_solve(const DeltaTable& table, int j) {
  int count = static_cast<int>(table.rows.size());
  if (j < 1 || j > count) bad("generator index out of range");
  std::vector<Dyadic> c(static_cast<std::size_t>(count));
  for (int b = count; b >= 1; --b) {
    Dyadic residual = b == j ? Dyadic::one() : Dyadic();
    for (int i = b + 1; i <= count; ++i) {
      const auto& row = table.rows[static_cast<std::size_t>(i) - 1];
      const Dyadic& d = row[static_cast<std::size_t>(b) - 1];
      if (!d.is_zero() && !c[static_cast<std::size_t>(i) - 1].is_zero())
        residual = residual - c[static_cast<std::size_t>(i) - 1] * d;
    }
    const Dyadic& diag = table.rows[static_cast<std::size_t>(b) - 1][static_cast<std::size_t>(b) - 1];
    if (diag.num() != 1)
      throw internal_inconsistency("singular or non-2-power diagonal in the solve");
    c[static_cast<std::size_t>(b) - 1] = residual.times_pow2(diag.exp());
  }
  return c;
}

std::string TotalOrderCertificate::to_json_string() const {
  nlohmann::ordered_json j;
  j["sign"] = sign;
  j["k"] = k;
  j["guaranteed_k"] = guaranteed_k;
  j["hits_needed"] = hits_needed;
  j["hits_at_k"] = hits_at_k;
  if (sign != 0) {
    j["r"] = r.to_string();
    j["s"] = s.to_string();
  }
  j["min_coeff_at_k"] = min_coeff_at_k.str();
  return j.dump();
}

TotalOrderCertificate total_order_decide(const DenseSequence& seq, int n,
                                         const K0Element& g, std::uint64_t horizon) {
  if (seq.space() != SpaceKind::cantor) bad("total order decision lives on the Cantor set");
  TotalOrderCertificate cert;
  if (g.is_zero()) {
    cert.sign = 0;
    cert.min_coeff_at_k = 0;
    return cert;
  }

  // topmost nonzero piece; the top piece itself carries 0
  std::size_t top = g.coeffs().size();
  while (top-- > 0)
    if (g.coeffs()[top] != 0) break;
  cert.r = cantor_pred(g.breaks()[top + 1]);

  bool flipped = g.coeffs()[top] < 0;
  K0Element h = flipped ? negate(g) : g;
  cert.sign = flipped ? -1 : 1;

  // maximal run of pieces with h >= 1 ending at the top nonzero piece
  std::size_t run = top;
  while (run > 0 && h.coeffs()[run - 1] >= 1) --run;
  cert.s = h.breaks()[run];

  Int min_h = h.min_coeff();
  Int deficit = min_h < 0 ? Int(1 - min_h) : Int(1);
  std::uint64_t needed = 0;
  for (Int p(1); p < deficit; p <<= 1) ++needed;
  cert.hits_needed = needed;

  // first window depth with `needed` hits in (s, r]
  std::uint64_t hits = 0;
  std::uint64_t guaranteed = 0;
  for (std::uint64_t k = 1; hits < needed; ++k) {
    if (k > horizon)
      throw horizon_exhausted("total order decision ran out of sequence terms",
                              "{\"hits_needed\":" + std::to_string(needed) +
                                  ",\"hits_found\":" + std::to_string(hits) + "}");
    Point t = seq.at(static_cast<std::uint64_t>(n) + k - 1);
    if (t > cert.s && t <= cert.r) {
      ++hits;
      guaranteed = k;
    }
  }
  cert.guaranteed_k = guaranteed;

  // grow k, testing exact pointwise nonnegativity at every new hit
  hits = 0;
  Int m0 = alpha_composite_min(seq, n, 0, h);
  if (m0 >= 0) {
    cert.k = 0;
    cert.hits_at_k = 0;
    cert.min_coeff_at_k = m0;
    return cert;
  }
  for (std::uint64_t k = 1; k <= guaranteed; ++k) {
    Point t = seq.at(static_cast<std::uint64_t>(n) + k - 1);
    if (!(t > cert.s && t <= cert.r)) continue;
    ++hits;
    Int mk = alpha_composite_min(seq, n, static_cast<int>(k), h);
    if (mk >= 0) {
      cert.k = k;
      cert.hits_at_k = hits;
      cert.min_coeff_at_k = mk;
      return cert;
    }
  }
  throw internal_inconsistency(
      "composite still has a negative value at the guaranteed depth");
}

bool lambda_square_commutes(const StepFunction& f, int n) {
  if (f.space() != SpaceKind::interval) bad("corpus functions live on [0,1]");
  auto seq_interval = DenseSequence::canonical(SpaceKind::interval);
  auto seq_cantor = DenseSequence::canonical(SpaceKind::cantor);
  auto phi = build_canonical_morphism(seq_interval, n, n + 1);
  auto psi = build_canonical_morphism(seq_cantor, n, n + 1);
  StepFunction via_interval = pullback_lambda(apply_morphism(phi, f));
  StepFunction via_cantor = apply_morphism(psi, pullback_lambda(f));
  return via_interval == via_cantor;
}

}  // namespace ahcert
