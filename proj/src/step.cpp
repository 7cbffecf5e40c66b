#include "step.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace ahcert {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

void require_compatible(const StepFunction& f, const StepFunction& g) {
  if (f.space() != g.space()) bad("step functions live on different spaces");
  if (f.size() != g.size()) bad("stage mismatch between step functions");
}

}  // namespace

StepFunction::StepFunction(SpaceKind space, int size, std::vector<Point> breaks,
                           std::vector<RatMatrix> values)
    : space_(space), size_(size), breaks_(std::move(breaks)), values_(std::move(values)) {
  if (size_ <= 0) bad("step function size must be positive");
  if (breaks_.empty() || breaks_.size() != values_.size())
    bad("breakpoints and values must align");
  if (!breaks_.front().is_min()) bad("first breakpoint must be min T");
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    if (breaks_[i].space() != space_) bad("breakpoint from the wrong space");
    if (i > 0 && !(breaks_[i - 1] < breaks_[i])) bad("breakpoints must increase");
    if (breaks_[i].is_max()) bad("breakpoint at max T would start an empty piece");
    if (values_[i].dim() != size_) bad("piece value has the wrong size");
  }
  canonicalize();
}

void StepFunction::canonicalize() {
  std::vector<Point> nb;
  std::vector<RatMatrix> nv;
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    if (!nv.empty() && nv.back() == values_[i]) continue;
    nb.push_back(breaks_[i]);
    nv.push_back(values_[i]);
  }
  breaks_ = std::move(nb);
  values_ = std::move(nv);
}

StepFunction StepFunction::zero(SpaceKind space, int size) {
  return StepFunction(space, size, {Point::min_of(space)}, {RatMatrix(size)});
}

StepFunction StepFunction::constant(SpaceKind space, RatMatrix value) {
  int size = value.dim();
  return StepFunction(space, size, {Point::min_of(space)}, {std::move(value)});
}

StepFunction StepFunction::indicator(SpaceKind space, int size, const Point& lo,
                                     const Point& hi, const RatMatrix& value) {
  if (!(lo < hi)) bad("indicator needs lo < hi");
  std::vector<Point> breaks{Point::min_of(space)};
  std::vector<RatMatrix> vals{RatMatrix(size)};
  if (lo.is_min()) {
    vals.back() = value;
  } else {
    breaks.push_back(lo);
    vals.push_back(value);
  }
  if (!hi.is_max()) {
    breaks.push_back(hi);
    vals.push_back(RatMatrix(size));
  }
  return StepFunction(space, size, std::move(breaks), std::move(vals));
}

int StepFunction::stage() const {
  int n = 0;
  int s = size_;
  while (s > 1 && (s & 1) == 0) {
    s >>= 1;
    ++n;
  }
  if (s != 1) bad("size is not a power of two; no dyadic stage");
  return n;
}

const RatMatrix& StepFunction::eval(const Point& t) const {
  if (t.space() != space_) bad("evaluation point from the wrong space");
  // last piece with breakpoint <= t
  std::size_t lo = 0, hi = breaks_.size();
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (breaks_[mid] <= t)
      lo = mid;
    else
      hi = mid;
  }
  return values_[lo];
}

bool StepFunction::is_zero() const {
  for (const auto& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

bool StepFunction::operator==(const StepFunction& o) const {
  return space_ == o.space_ && size_ == o.size_ && breaks_ == o.breaks_ &&
         values_ == o.values_;
}

std::vector<Point> common_refinement(const StepFunction& f, const StepFunction& g) {
  std::vector<Point> merged;
  merged.reserve(f.breaks().size() + g.breaks().size());
  std::size_t i = 0, j = 0;
  while (i < f.breaks().size() || j < g.breaks().size()) {
    if (j == g.breaks().size() ||
        (i < f.breaks().size() && f.breaks()[i] <= g.breaks()[j])) {
      if (merged.empty() || merged.back() != f.breaks()[i]) merged.push_back(f.breaks()[i]);
      ++i;
    } else {
      if (merged.empty() || merged.back() != g.breaks()[j]) merged.push_back(g.breaks()[j]);
      ++j;
    }
  }
  return merged;
}

namespace {

template <typename Op>
StepFunction pointwise(const StepFunction& f, const StepFunction& g, Op op) {
  require_compatible(f, g);
  auto breaks = common_refinement(f, g);
  std::vector<RatMatrix> vals;
  vals.reserve(breaks.size());
  for (const auto& b : breaks) vals.push_back(op(f.eval(b), g.eval(b)));
  return StepFunction(f.space(), f.size(), std::move(breaks), std::move(vals));
}

}  // namespace

StepFunction add(const StepFunction& f, const StepFunction& g) {
  return pointwise(f, g, [](const RatMatrix& a, const RatMatrix& b) { return a + b; });
}

StepFunction sub(const StepFunction& f, const StepFunction& g) {
  return pointwise(f, g, [](const RatMatrix& a, const RatMatrix& b) { return a - b; });
}

StepFunction mul(const StepFunction& f, const StepFunction& g) {
  return pointwise(f, g, [](const RatMatrix& a, const RatMatrix& b) { return a * b; });
}

StepFunction adjoint(const StepFunction& f) {
  std::vector<RatMatrix> vals;
  vals.reserve(f.values().size());
  for (const auto& v : f.values()) vals.push_back(v.transpose());
  return StepFunction(f.space(), f.size(), f.breaks(), std::move(vals));
}

StepFunction scale(const Rat& c, const StepFunction& f) {
  std::vector<RatMatrix> vals;
  vals.reserve(f.values().size());
  for (const auto& v : f.values()) vals.push_back(v.scaled(c));
  return StepFunction(f.space(), f.size(), f.breaks(), std::move(vals));
}

StepFunction pullback_chi(const StepFunction& f, const Point& s) {
  if (s.space() != f.space()) bad("threshold from the wrong space");
  std::vector<Point> breaks{Point::min_of(f.space())};
  std::vector<RatMatrix> vals{f.eval(s)};
  for (std::size_t i = 0; i < f.breaks().size(); ++i) {
    if (f.breaks()[i] > s) {
      breaks.push_back(f.breaks()[i]);
      vals.push_back(f.values()[i]);
    }
  }
  return StepFunction(f.space(), f.size(), std::move(breaks), std::move(vals));
}

StepFunction pullback_lambda(const StepFunction& f) {
  if (f.space() != SpaceKind::interval) bad("pullback_lambda expects a function on [0,1]");
  std::vector<Point> breaks;
  std::vector<RatMatrix> vals;
  // lambda(x) >= d iff x >= min-preimage(d), so pieces pull back to pieces
  // and the strictly monotone preimages stay strictly increasing
  for (std::size_t i = 0; i < f.breaks().size(); ++i) {
    breaks.push_back(lambda_min_preimage(f.breaks()[i]));
    vals.push_back(f.values()[i]);
  }
  return StepFunction(SpaceKind::cantor, f.size(), std::move(breaks), std::move(vals));
}

bool is_positive(const StepFunction& f) {
  for (const auto& v : f.values())
    if (!v.is_positive_semidefinite()) return false;
  return true;
}

NormBound norm_upper(const StepFunction& f) {
  Rat worst(0);
  for (const auto& v : f.values()) {
    Rat s = v.frobenius_sq();
    if (s > worst) worst = s;
  }
  return NormBound{worst, sqrt_upper(worst)};
}

StepFunction conditional_expectation(const StepFunction& f) {
  int n = f.stage();
  Rat factor(1, pow2(static_cast<unsigned>(n)));
  std::vector<RatMatrix> vals;
  vals.reserve(f.values().size());
  for (const auto& v : f.values()) {
    RatMatrix m(1);
    m.at(0, 0) = factor * v.trace();
    vals.push_back(std::move(m));
  }
  return StepFunction(f.space(), 1, f.breaks(), std::move(vals));
}

std::string StepFunction::to_json_string() const {
  nlohmann::ordered_json j;
  j["stage"] = stage();
  auto pieces = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    nlohmann::ordered_json piece;
    piece["from"] = breaks_[i].to_string();
    auto rows = nlohmann::ordered_json::array();
    for (int r = 0; r < size_; ++r) {
      auto row = nlohmann::ordered_json::array();
      for (int c = 0; c < size_; ++c) row.push_back(rational_to_string(values_[i].at(r, c)));
      rows.push_back(std::move(row));
    }
    piece["value"] = std::move(rows);
    pieces.push_back(std::move(piece));
  }
  j["pieces"] = std::move(pieces);
  return j.dump();
}

StepFunction StepFunction::parse_json(std::string_view text, SpaceKind space) {
  auto j = nlohmann::json::parse(text);
  int stage = j.at("stage").get<int>();
  if (stage < 0 || stage > 24) bad("stage out of range");
  int size = 1 << stage;
  std::vector<Point> breaks;
  std::vector<RatMatrix> vals;
  for (const auto& piece : j.at("pieces")) {
    breaks.push_back(Point::parse(piece.at("from").get<std::string>()));
    const auto& rows = piece.at("value");
    if (static_cast<int>(rows.size()) != size) bad("value rows do not match stage");
    RatMatrix m(size);
    for (int r = 0; r < size; ++r) {
      const auto& row = rows[r];
      if (static_cast<int>(row.size()) != size) bad("value columns do not match stage");
      for (int c = 0; c < size; ++c)
        m.at(r, c) = parse_rational(row[c].get<std::string>());
    }
    vals.push_back(std::move(m));
  }
  return StepFunction(space, size, std::move(breaks), std::move(vals));
}

}  // namespace ahcert
