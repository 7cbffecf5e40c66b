#include "trace.hpp"

#include <algorithm>
#include <stdexcept>

#include "errors.hpp"
#include "json.hpp"

namespace ahcert {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

AtomicMeasure::AtomicMeasure(SpaceKind space, std::vector<std::pair<Point, Rat>> atoms)
    : space_(space) {
  std::sort(atoms.begin(), atoms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [p, m] : atoms) {
    if (p.space() != space_) bad("atom from the wrong space");
    if (m < 0) bad("negative atom mass");
    if (m == 0) continue;
    if (!atoms_.empty() && atoms_.back().first == p)
      atoms_.back().second += m;
    else
      atoms_.emplace_back(p, m);
  }
}

Rat AtomicMeasure::total_mass() const {
  Rat t(0);
  for (const auto& [p, m] : atoms_) t += m;
  return t;
}

Rat AtomicMeasure::mass_upto(const Point& v) const {
  Rat t(0);
  for (const auto& [p, m] : atoms_) {
    if (p > v) break;
    t += m;
  }
  return t;
}

AtomicMeasure pushforward_chi(const AtomicMeasure& mu, const Point& u) {
  std::vector<std::pair<Point, Rat>> atoms;
  Rat at_u(0);
  for (const auto& [p, m] : mu.atoms()) {
    if (p <= u)
      at_u += m;
    else
      atoms.emplace_back(p, m);
  }
  if (at_u != 0) atoms.emplace_back(u, at_u);
  return AtomicMeasure(mu.space(), std::move(atoms));
}

AtomicMeasure measure_recursion(const DenseSequence& seq, int n, int k,
                                const AtomicMeasure& top) {
  if (k < 0) bad("negative recursion depth");
  std::vector<Point> xs;
  for (int i = 0; i < k; ++i) xs.push_back(seq.at(static_cast<std::uint64_t>(n) + i));
  std::sort(xs.begin(), xs.end());
  // subsets grouped by their maximum: the i-th sorted element (duplicates
  // kept) is the maximum of exactly 2^{i-1} subsets
  std::vector<std::pair<Point, Rat>> atoms(top.atoms());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Rat weight(pow2(static_cast<unsigned>(i)), 1);
    AtomicMeasure pushed = pushforward_chi(top, xs[i]);
    for (const auto& [p, m] : pushed.atoms()) atoms.emplace_back(p, weight * m);
  }
  return AtomicMeasure(top.space(), std::move(atoms));
}

Rat trace_of(const TraceFunctional& tau, const StepFunction& f) {
  if (f.space() != tau.mu.space()) bad("trace and function live on different spaces");
  if (f.stage() != tau.stage) bad("stage mismatch between trace and function");
  Rat total(0);
  for (const auto& [p, m] : tau.mu.atoms()) total += m * f.eval(p).trace();
  return total;
}

std::string TracelessnessCertificate::to_json_string() const {
  nlohmann::ordered_json j;
  j["s"] = s.to_string();
  j["r"] = r.to_string();
  j["epsilon"] = rational_to_string(epsilon);
  j["n"] = n;
  j["k"] = k;
  j["hits"] = hits;
  auto hi = nlohmann::ordered_json::array();
  for (auto idx : hit_indices) hi.push_back(idx);
  j["hit_indices"] = std::move(hi);
  j["bound"] = rational_to_string(bound);
  return j.dump();
}

TracelessnessCertificate tracelessness_certificate(const DenseSequence& seq, int n,
                                                   const Point& s, const Point& r,
                                                   const Rat& epsilon,
                                                   std::uint64_t horizon) {
  if (s.space() != seq.space() || r.space() != seq.space())
    bad("cut points from the wrong space");
  if (!(s < r)) bad("need s < r");
  if (epsilon <= 0) bad("epsilon must be positive");

  TracelessnessCertificate cert;
  cert.n = n;
  cert.s = s;
  cert.r = r;
  cert.epsilon = epsilon;

  // 2^{-h} <= eps iff num(eps) * 2^h >= den(eps); find the least such h
  std::uint64_t needed = 0;
  {
    Int lhs = numerator(epsilon);
    const Int den = denominator(epsilon);
    while (lhs < den) {
      lhs <<= 1;
      ++needed;
    }
  }

  // least k whose window {t_n, ..., t_{n+k-1}} yields that many hits in (s, r]
  std::uint64_t hits = 0;
  std::uint64_t k = 0;
  while (hits < needed && k < horizon) {
    Point t = seq.at(static_cast<std::uint64_t>(n) + k);
    ++k;
    if (t > s && t <= r) {
      ++hits;
      cert.hit_indices.push_back(static_cast<std::uint64_t>(n) + k - 1);
    }
  }
  cert.k = k;
  cert.hits = hits;
  cert.bound = Rat(1, pow2(static_cast<unsigned>(hits)));
  if (hits < needed)
    throw horizon_exhausted(
        "tracelessness certificate needs more sequence terms",
        "{\"achieved_hits\":" + std::to_string(hits) + ",\"k\":" + std::to_string(k) + "}");
  return cert;
}

bool scaling_identity_holds(const DenseSequence& seq, int n, int k,
                            const AtomicMeasure& top, const Point& v) {
  AtomicMeasure down = measure_recursion(seq, n, k, top);
  unsigned in_window = 0;
  for (int i = 0; i < k; ++i)
    if (seq.at(static_cast<std::uint64_t>(n) + i) <= v) ++in_window;
  return down.mass_upto(v) == Rat(pow2(in_window), 1) * top.mass_upto(v);
}

std::int64_t GoodearlParams::multiplicity(std::uint64_t j) const {
  switch (rule) {
    case Rule::ones:
      return 1;
    case Rule::squares: {
      auto v = static_cast<std::int64_t>(j);
      return v * v + 2 * v;
    }
    case Rule::cycle:
      if (list.empty()) bad("Goodearl tower needs multiplicities");
      return list[(j - 1) % list.size()];
  }
  bad("unreachable Goodearl rule");
}

Rat goodearl_ratio_bound(const GoodearlParams& params, const Point& s, const Point& r,
                         std::uint64_t depth) {
  if (!(s < r)) bad("need s < r");
  Rat bound(1);
  for (std::uint64_t j = 1; j <= depth; ++j) {
    Point t = params.seq.at(j);
    if (t > s && t <= r) {
      std::int64_t l = params.multiplicity(j);
      if (l < 1) bad("multiplicities must be positive");
      bound *= Rat(l, l + 1);
    }
  }
  return bound;
}

}  // namespace ahcert
