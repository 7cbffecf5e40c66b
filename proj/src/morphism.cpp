#include "morphism.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace ahcert {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

std::string DiagonalMorphism::to_json_string() const {
  nlohmann::ordered_json j;
  j["n"] = source_stage;
  j["m"] = target_stage;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& s : slots) arr.push_back(s.to_string());
  j["slots"] = std::move(arr);
  return j.dump();
}

DiagonalMorphism DiagonalMorphism::parse_json(std::string_view text, SpaceKind space) {
  auto j = nlohmann::json::parse(text);
  DiagonalMorphism phi;
  phi.space = space;
  phi.source_stage = j.at("n").get<int>();
  phi.target_stage = j.at("m").get<int>();
  for (const auto& s : j.at("slots")) phi.slots.push_back(Point::parse(s.get<std::string>()));
  if (phi.slots.size() != (std::size_t{1} << phi.depth())) bad("slot count mismatch");
  return phi;
}

DiagonalMorphism identity_morphism(SpaceKind space, int stage) {
  DiagonalMorphism phi;
  phi.space = space;
  phi.source_stage = stage;
  phi.target_stage = stage;
  phi.slots = {Point::min_of(space)};
  return phi;
}

DiagonalMorphism build_canonical_morphism(const DenseSequence& seq, int n, int m) {
  if (m < n) bad("canonical morphism needs m >= n");
  int k = m - n;
  if (k > 24) bad("morphism depth too large");
  DiagonalMorphism phi;
  phi.space = seq.space();
  phi.source_stage = n;
  phi.target_stage = m;
  phi.slots.resize(std::size_t{1} << k, Point::min_of(seq.space()));
  for (int i = 0; i < k; ++i) {
    Point t = seq.at(static_cast<std::uint64_t>(n) + i);
    std::size_t bit = std::size_t{1} << i;
    for (std::size_t j = 0; j < bit; ++j)
      phi.slots[bit | j] = point_max(phi.slots[j], t);
  }
  return phi;
}

DiagonalMorphism compose_morphisms(const DiagonalMorphism& outer,
                                   const DiagonalMorphism& inner) {
  if (outer.space != inner.space) bad("morphisms live on different spaces");
  if (inner.target_stage != outer.source_stage)
    bad("stage mismatch: inner target must equal outer source");
  DiagonalMorphism phi;
  phi.space = outer.space;
  phi.source_stage = inner.source_stage;
  phi.target_stage = outer.target_stage;
  phi.slots.reserve(outer.slots.size() * inner.slots.size());
  for (const auto& u : outer.slots)
    for (const auto& v : inner.slots) phi.slots.push_back(point_max(u, v));
  return phi;
}

StepFunction apply_morphism(const DiagonalMorphism& phi, const StepFunction& f) {
  if (f.space() != phi.space) bad("function and morphism live on different spaces");
  if (f.stage() != phi.source_stage) bad("stage mismatch: f is not at the source stage");
  std::vector<StepFunction> blocks;
  blocks.reserve(phi.slots.size());
  for (const auto& s : phi.slots) blocks.push_back(pullback_chi(f, s));
  // each pullback only keeps breakpoints of f (plus min T, already first),
  // so f's own breakpoints refine every block
  std::vector<Point> breaks = f.breaks();
  int size = f.size() * static_cast<int>(phi.slots.size());
  std::vector<RatMatrix> vals;
  vals.reserve(breaks.size());
  for (const auto& b : breaks) {
    std::vector<RatMatrix> parts;
    parts.reserve(blocks.size());
    for (const auto& blk : blocks) parts.push_back(blk.eval(b));
    vals.push_back(block_diag(parts));
  }
  return StepFunction(f.space(), size, std::move(breaks), std::move(vals));
}

bool slot_multiset_equal(const DiagonalMorphism& a, const DiagonalMorphism& b) {
  if (a.space != b.space || a.source_stage != b.source_stage ||
      a.target_stage != b.target_stage || a.slots.size() != b.slots.size())
    return false;
  auto sa = a.slots;
  auto sb = b.slots;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb;
}

StepFunction apply_goodearl(const GoodearlMorphism& psi, const StepFunction& f) {
  if (f.size() != psi.source_size) bad("size mismatch: f is not at the source size");
  StepFunction tail = pullback_chi(f, psi.threshold);
  std::vector<Point> breaks = common_refinement(f, tail);
  std::vector<RatMatrix> vals;
  vals.reserve(breaks.size());
  for (const auto& b : breaks) {
    std::vector<RatMatrix> parts(static_cast<std::size_t>(psi.multiplicity), f.eval(b));
    parts.push_back(tail.eval(b));
    vals.push_back(block_diag(parts));
  }
  return StepFunction(f.space(), psi.target_size(), std::move(breaks), std::move(vals));
}

}  // namespace ahcert
