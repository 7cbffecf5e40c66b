#include "ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "errors.hpp"
#include "json.hpp"

namespace ahcert {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

Point mesh_cell_low(SpaceKind space, std::uint64_t cell, int level) {
  if (space == SpaceKind::interval)
    return Point::dyadic(static_cast<std::int64_t>(cell), level);
  std::vector<int> digits;
  for (int n = 1; n <= level; ++n)
    if ((cell >> (level - n)) & 1) digits.push_back(n);
  return Point::ternary(std::move(digits), 0);
}

}  // namespace

bool ideal_membership(const StepFunction& f, const IdealUpSet& ideal) {
  if (f.space() != ideal.space) bad("function and ideal live on different spaces");
  if (f.stage() != ideal.stage) bad("stage mismatch between function and ideal");
  for (std::size_t i = 0; i < f.breaks().size(); ++i) {
    bool meets = i + 1 == f.breaks().size() ? !ideal.cut.is_max()
                                            : f.breaks()[i + 1] > ideal.cut;
    if (meets && !f.values()[i].is_zero()) return false;
  }
  return true;
}

IdealUpSet pullback_ideal(const DiagonalMorphism& phi, const IdealUpSet& ideal) {
  if (phi.space != ideal.space) bad("morphism and ideal live on different spaces");
  if (phi.target_stage != ideal.stage) bad("morphism target must be the ideal's stage");
  return IdealUpSet{ideal.space, phi.source_stage, ideal.cut};
}

bool pullback_ideal_extensional(const DiagonalMorphism& phi, const IdealUpSet& ideal,
                                const std::vector<StepFunction>& corpus) {
  IdealUpSet pulled = pullback_ideal(phi, ideal);
  for (const auto& f : corpus) {
    bool source_side = ideal_membership(f, pulled);
    bool target_side = ideal_membership(apply_morphism(phi, f), ideal);
    if (source_side != target_side) return false;
  }
  return true;
}

ZeroSet::ZeroSet(SpaceKind space, int stage, std::vector<ClosedInterval> parts)
    : space_(space), stage_(stage) {
  if (parts.empty()) bad("zero set must be nonempty");
  for (const auto& p : parts) {
    if (p.lo.space() != space || p.hi.space() != space) bad("interval from the wrong space");
    if (p.lo > p.hi) bad("interval with lo > hi");
  }
  std::sort(parts.begin(), parts.end(), [](const ClosedInterval& a, const ClosedInterval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  for (const auto& p : parts) {
    if (!parts_.empty() &&
        (p.lo <= parts_.back().hi || !has_point_between(parts_.back().hi, p.lo))) {
      parts_.back().hi = point_max(parts_.back().hi, p.hi);
    } else {
      parts_.push_back(p);
    }
  }
}

bool ZeroSet::contains(const Point& p) const {
  for (const auto& part : parts_) {
    if (p < part.lo) return false;
    if (p <= part.hi) return true;
  }
  return false;
}

Point ZeroSet::min_point() const { return parts_.front().lo; }

bool ZeroSet::operator==(const ZeroSet& o) const {
  return space_ == o.space_ && stage_ == o.stage_ && parts_ == o.parts_;
}

ClosedInterval chi_image(const ClosedInterval& interval, const Point& u) {
  return ClosedInterval{point_max(interval.lo, u), point_max(interval.hi, u)};
}

ZeroSet zero_set_recursion(const DenseSequence& seq, int n, int k, const ZeroSet& top) {
  if (top.stage() != n + k) bad("zero set is not at stage n+k");
  std::vector<Point> values;
  for (int i = 0; i < k; ++i) values.push_back(seq.at(static_cast<std::uint64_t>(n) + i));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<ClosedInterval> parts = top.parts();  // the empty subset acts as identity
  for (const auto& u : values)
    for (const auto& part : top.parts()) parts.push_back(chi_image(part, u));
  return ZeroSet(top.space(), n, std::move(parts));
}

std::string IdealCertificate::to_json_string() const {
  nlohmann::ordered_json j;
  j["cut"] = cut.to_string();
  j["from_stage"] = from_stage;
  j["to_stage"] = to_stage;
  auto st = nlohmann::ordered_json::array();
  for (const auto& rec : stages) {
    nlohmann::ordered_json r;
    r["n"] = rec.stage;
    r["min"] = rec.min.to_string();
    auto iv = nlohmann::ordered_json::array();
    for (const auto& part : rec.parts)
      iv.push_back(nlohmann::ordered_json::array({part.lo.to_string(), part.hi.to_string()}));
    r["intervals"] = std::move(iv);
    st.push_back(std::move(r));
  }
  j["stages"] = std::move(st);
  j["absorbed_points"] = absorbed_points;
  j["mesh_level"] = mesh_level;
  j["mesh_covered"] = mesh_covered;
  auto mc = nlohmann::ordered_json::array();
  for (auto c : missing_cells) mc.push_back(c);
  j["missing_cells"] = std::move(mc);
  return j.dump();
}

IdealCertificate certify_ideal_is_point(const DenseSequence& seq, const ZeroSet& initial,
                                        int depth, int mesh_level, int stage_stride) {
  if (depth < 0 || initial.stage() - depth < 1) bad("depth exceeds available stages");
  if (stage_stride < 1) bad("stage stride must be positive");

  IdealCertificate cert;
  cert.from_stage = initial.stage();
  cert.to_stage = initial.stage() - depth;
  cert.mesh_level = mesh_level;
  Point cut = initial.min_point();
  cert.cut = cut;

  ZeroSet current = initial;
  cert.stages.push_back({current.stage(), current.min_point(), current.parts()});
  for (int step = 0; step < depth; ++step) {
    int n = current.stage() - 1;
    current = zero_set_recursion(seq, n, 1, current);
    if (current.min_point() != cut)
      throw internal_inconsistency("stage minimum drifted during the ideal recursion");
    bool keep = ((step + 1) % stage_stride == 0) || step + 1 == depth;
    if (keep) cert.stages.push_back({current.stage(), current.min_point(), current.parts()});
  }

  // every sequence point >= cut seen by the recursion must now lie in T_n
  std::vector<bool> cell_hit(mesh_cell_count(mesh_level), false);
  for (int idx = cert.to_stage; idx < cert.from_stage; ++idx) {
    Point t = seq.at(static_cast<std::uint64_t>(idx));
    if (t < cut) continue;
    if (!current.contains(t))
      throw internal_inconsistency("absorbed sequence point missing from the zero set");
    ++cert.absorbed_points;
    cell_hit[mesh_cell_of(t, mesh_level)] = true;
  }

  // up-set evidence: every mesh cell entirely above the cut holds an
  // absorbed point
  cert.mesh_covered = true;
  for (std::uint64_t c = 0; c < cell_hit.size(); ++c) {
    if (cell_hit[c]) continue;
    Point low = mesh_cell_low(initial.space(), c, mesh_level);
    if (low > cut) {
      cert.mesh_covered = false;
      cert.missing_cells.push_back(c);
    }
  }
  return cert;
}

}  // namespace ahcert
