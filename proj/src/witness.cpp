#include "witness.hpp"

#include <algorithm>
#include <stdexcept>

#include "errors.hpp"
#include "json.hpp"

namespace ahcert {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

bool StabilityWitness::verify(const StepFunction& f) const {
  StepFunction im = apply_morphism(phi, f);
  if (im != image) return false;
  // g perpendicular to phi(f), exactly
  if (!mul(g, image).is_zero() || !mul(image, g).is_zero()) return false;
  // block-level x*x = g, xx* = phi(f): g's block at the dead slot equals
  // phi(f)'s block at the live slot, and g vanishes on all other slots
  std::vector<int> g_source(phi.slots.size(), -1);
  for (auto [live, dead] : pairing) g_source[static_cast<std::size_t>(dead)] = live;
  int bs = f.size();
  for (const auto& b : common_refinement(g, image)) {
    const RatMatrix& gm = g.eval(b);
    const RatMatrix& fm = image.eval(b);
    for (std::size_t slot = 0; slot < phi.slots.size(); ++slot) {
      for (int i = 0; i < bs; ++i)
        for (int j = 0; j < bs; ++j) {
          int r = static_cast<int>(slot) * bs + i;
          int c = static_cast<int>(slot) * bs + j;
          Rat expect(0);
          if (g_source[slot] >= 0) expect = fm.at(g_source[slot] * bs + i, g_source[slot] * bs + j);
          if (gm.at(r, c) != expect) return false;
        }
      // off-diagonal blocks of g must vanish
      for (int r = static_cast<int>(slot) * bs; r < (static_cast<int>(slot) + 1) * bs; ++r)
        for (int c = 0; c < g.size(); ++c)
          if (c / bs != static_cast<int>(slot) && gm.at(r, c) != 0) return false;
    }
  }
  // every dead slot used in the pairing really carries the zero block in phi(f)
  for (auto [live, dead] : pairing) {
    (void)live;
    for (const auto& b : image.breaks()) {
      const RatMatrix& fm = image.eval(b);
      for (int i = 0; i < bs; ++i)
        for (int j = 0; j < bs; ++j)
          if (fm.at(dead * bs + i, dead * bs + j) != 0) return false;
    }
  }
  return true;
}

std::string StabilityWitness::to_json_string() const {
  nlohmann::ordered_json j;
  j["n"] = phi.source_stage;
  j["m"] = phi.target_stage;
  auto zs = nlohmann::ordered_json::array();
  for (int z : zero_slots) zs.push_back(z);
  j["zero_slots"] = std::move(zs);
  auto pr = nlohmann::ordered_json::array();
  for (auto [a, b] : pairing) pr.push_back(nlohmann::ordered_json::array({a, b}));
  j["pairing"] = std::move(pr);
  j["g"] = nlohmann::ordered_json::parse(g.to_json_string());
  return j.dump();
}

StabilityWitness stability_witness(const DenseSequence& seq, int n, int m,
                                   const StepFunction& f) {
  if (m <= n) bad("stability witness needs m > n");
  if (f.stage() != n) bad("f is not at stage n");
  if (!is_positive(f)) bad("stability witness requires a positive f");
  Point cutoff = seq.at(static_cast<std::uint64_t>(m) - 1);  // t_{m-1}
  // support must stop strictly below t_{m-1}
  for (std::size_t i = 0; i < f.breaks().size(); ++i) {
    bool piece_meets_tail = i + 1 == f.breaks().size() ? !cutoff.is_max()
                                                       : f.breaks()[i + 1] > cutoff;
    if (piece_meets_tail && !f.values()[i].is_zero())
      bad("f does not vanish from t_{m-1} on; offending piece starts at " +
          f.breaks()[i].to_string());
  }

  StabilityWitness w;
  w.phi = build_canonical_morphism(seq, n, m);
  StepFunction image = apply_morphism(w.phi, f);

  std::vector<int> live;
  for (std::size_t j = 0; j < w.phi.slots.size(); ++j) {
    if (pullback_chi(f, w.phi.slots[j]).is_zero())
      w.zero_slots.push_back(static_cast<int>(j));
    else
      live.push_back(static_cast<int>(j));
  }
  // every subset containing t_{m-1} kills f, so dead slots are at least half
  if (w.zero_slots.size() < live.size())
    throw internal_inconsistency("fewer dead slots than live ones in stability witness");
  for (std::size_t i = 0; i < live.size(); ++i)
    w.pairing.emplace_back(live[i], w.zero_slots[i]);

  // g: the live blocks of phi(f) moved to their paired dead slots
  int bs = f.size();
  std::vector<RatMatrix> vals;
  for (const auto& b : f.breaks()) {
    RatMatrix gm(image.size());
    const RatMatrix& fm = image.eval(b);
    for (auto [src, dst] : w.pairing)
      for (int i = 0; i < bs; ++i)
        for (int j = 0; j < bs; ++j)
          gm.at(dst * bs + i, dst * bs + j) = fm.at(src * bs + i, src * bs + j);
    vals.push_back(std::move(gm));
  }
  w.image = std::move(image);
  w.g = StepFunction(f.space(), w.image.size(), f.breaks(), std::move(vals));
  return w;
}

// --- approximate divisibility ---

std::string ApproxDivWitness::to_json_string() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["m"] = m;
  j["k"] = k;
  j["delta"] = rational_to_string(delta);
  j["epsilon"] = rational_to_string(epsilon);
  auto th = nlohmann::ordered_json::array();
  for (const auto& s : sorted_thresholds) th.push_back(s.to_string());
  j["sorted_thresholds"] = std::move(th);
  auto pr = nlohmann::ordered_json::array();
  for (auto [a, b] : pairs) pr.push_back(nlohmann::ordered_json::array({a, b}));
  j["slot_pairs"] = std::move(pr);
  auto dev = nlohmann::ordered_json::array();
  for (const auto& d : deviation_sq) dev.push_back(rational_to_string(d));
  j["deviation_sq"] = std::move(dev);
  return j.dump();
}

namespace {

// largest delta such that every piece of h starting below delta has
// frobenius^2(h(piece) - h(min)) <= bound_sq; returns the value of the first
// violating breakpoint, or max T when none violates
Rat variation_cutoff(const StepFunction& h, const Rat& bound_sq) {
  const RatMatrix& at_min = h.values().front();
  for (std::size_t i = 1; i < h.breaks().size(); ++i) {
    RatMatrix d = h.values()[i] - at_min;
    if (d.frobenius_sq() > bound_sq) return h.breaks()[i].value();
  }
  return Point::max_of(h.space()).value();
}

}  // namespace

ApproxDivWitness approx_divisibility_witness(const DenseSequence& seq, int n,
                                             const std::vector<StepFunction>& H,
                                             const Rat& epsilon,
                                             std::uint64_t horizon) {
  if (H.empty()) bad("empty function family");
  if (n < 1) bad("stage index must be >= 1");
  if (epsilon <= 0) bad("epsilon must be positive");
  SpaceKind space = seq.space();
  for (const auto& h : H) {
    if (h.space() != space) bad("function family lives on the wrong space");
    if (h.stage() != n) bad("function family is not at stage n");
  }

  Rat quarter_eps_sq = (epsilon / 2) * (epsilon / 2);
  Rat tmin = Point::min_of(space).value();
  Rat delta = Point::max_of(space).value() - tmin;
  for (const auto& h : H) delta = std::min(delta, variation_cutoff(h, quarter_eps_sq) - tmin);

  std::uint64_t m = 0;
  for (std::uint64_t i = n; i < static_cast<std::uint64_t>(n) + horizon; ++i) {
    if (seq.at(i).value() - tmin < delta) {
      m = i;
      break;
    }
  }
  if (m == 0)
    throw horizon_exhausted("no sequence point within delta of min T",
                            "{\"delta_needed\":\"" + rational_to_string(delta) + "\"}");

  ApproxDivWitness w;
  w.space = space;
  w.n = n;
  w.m = static_cast<int>(m);
  w.k = static_cast<int>(m) + 1 - n;
  w.delta = delta;
  w.epsilon = epsilon;
  for (int j = 0; j < w.k; ++j) w.sorted_thresholds.push_back(seq.at(n + j));
  std::sort(w.sorted_thresholds.begin(), w.sorted_thresholds.end());

  // slots in the paired order: F_1 = empty, then 2^{i-1} slots of value s_i
  w.reordered.space = space;
  w.reordered.source_stage = n;
  w.reordered.target_stage = n + w.k;
  w.reordered.slots.push_back(Point::min_of(space));
  for (int i = 0; i < w.k; ++i) {
    std::size_t copies = std::size_t{1} << i;  // s_{i+1} fills slots 2^i .. 2^{i+1}-1
    for (std::size_t c = 0; c < copies; ++c)
      w.reordered.slots.push_back(w.sorted_thresholds[static_cast<std::size_t>(i)]);
  }
  for (std::size_t p = 0; p + 1 < w.reordered.slots.size(); p += 2)
    w.pairs.emplace_back(static_cast<int>(p), static_cast<int>(p + 1));

  // certify the only unequal pair exactly: max-piece deviation of
  // h - h o chi_{s1} must be <= epsilon^2 in Frobenius square
  Rat eps_sq = epsilon * epsilon;
  const Point& s1 = w.sorted_thresholds.front();
  for (const auto& h : H) {
    StepFunction d = sub(h, pullback_chi(h, s1));
    Rat dev = norm_upper(d).sq;
    if (dev > eps_sq)
      throw internal_inconsistency("delta scan admitted a threshold with deviation > eps");
    w.deviation_sq.push_back(std::move(dev));
  }
  return w;
}

Rat commutator_norm_sq(const ApproxDivWitness& w, const StepFunction& h,
                       const RatMatrix& x) {
  if (x.dim() != 2) bad("the unital copy is of M_2");
  // [1 (x) x (x) 1, diag over pairs (a_p, b_p)] has, per pair, zero diagonal
  // blocks and off-diagonal x01 (b-a), x10 (a-b); Frobenius^2 adds up as
  // (x01^2 + x10^2) * max-piece sum of pairwise block deviations
  Rat coef = x.at(0, 1) * x.at(0, 1) + x.at(1, 0) * x.at(1, 0);
  if (coef == 0) return Rat(0);
  // only pairs with distinct slot values contribute; by construction that is
  // at most the first pair
  Rat worst(0);
  std::vector<StepFunction> diffs;
  for (auto [p, q] : w.pairs) {
    if (w.reordered.slots[static_cast<std::size_t>(p)] ==
        w.reordered.slots[static_cast<std::size_t>(q)])
      continue;
    diffs.push_back(sub(pullback_chi(h, w.reordered.slots[static_cast<std::size_t>(p)]),
                        pullback_chi(h, w.reordered.slots[static_cast<std::size_t>(q)])));
  }
  if (diffs.empty()) return Rat(0);
  // piecewise: total Frobenius^2 at t is the sum over contributing pairs
  std::vector<Point> breaks = h.breaks();
  for (const auto& b : breaks) {
    Rat total(0);
    for (const auto& d : diffs) total += d.eval(b).frobenius_sq();
    if (total > worst) worst = total;
  }
  return coef * worst;
}

Rat commutator_norm_sq_dense(const ApproxDivWitness& w, const StepFunction& h,
                             const RatMatrix& x) {
  StepFunction image = apply_morphism(w.reordered, h);
  int pairs = static_cast<int>(w.pairs.size());
  RatMatrix lam = kron_identity_sandwich(pairs, x, h.size());
  StepFunction lam_f = StepFunction::constant(w.space, lam);
  StepFunction comm = sub(mul(lam_f, image), mul(image, lam_f));
  return norm_upper(comm).sq;
}

}  // namespace ahcert
