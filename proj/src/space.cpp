#include "space.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace ahcert {

namespace {

constexpr int kMaxExp = 62;

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

std::string space_name(SpaceKind k) {
  return k == SpaceKind::interval ? "interval" : "cantor";
}

SpaceKind parse_space(std::string_view name) {
  if (name == "interval") return SpaceKind::interval;
  if (name == "cantor") return SpaceKind::cantor;
  bad("unknown space: " + std::string(name));
}

Point Point::dyadic(std::int64_t num, int exp) {
  if (exp < 0 || exp > kMaxExp) bad("dyadic exponent out of range");
  if (num < 0) bad("dyadic point below 0");
  while (exp > 0 && (num & 1) == 0) {
    num >>= 1;
    --exp;
  }
  if (num > (std::int64_t{1} << exp)) bad("dyadic point above 1");
  Point p;
  p.kind_ = SpaceKind::interval;
  p.num_ = num;
  p.exp_ = exp;
  return p;
}

Point Point::ternary(std::vector<int> digits, int tail_start) {
  std::sort(digits.begin(), digits.end());
  digits.erase(std::unique(digits.begin(), digits.end()), digits.end());
  for (int d : digits)
    if (d < 1 || d > kMaxExp) bad("ternary digit position out of range");
  if (tail_start < 0 || tail_start > kMaxExp) bad("ternary tail out of range");
  if (tail_start > 0) {
    while (!digits.empty() && digits.back() >= tail_start) {
      if (digits.back() > tail_start) bad("ternary digit beyond tail start");
      digits.pop_back();
      // a digit exactly at tail_start duplicates the tail; drop it
    }
    // absorb digits contiguous with the tail
    while (tail_start > 1 && !digits.empty() && digits.back() == tail_start - 1) {
      digits.pop_back();
      --tail_start;
    }
  }
  Point p;
  p.kind_ = SpaceKind::cantor;
  p.digits_ = std::move(digits);
  p.tail_ = tail_start;
  return p;
}

Point Point::min_of(SpaceKind k) {
  return k == SpaceKind::interval ? dyadic(0, 0) : ternary({}, 0);
}

Point Point::max_of(SpaceKind k) {
  return k == SpaceKind::interval ? dyadic(1, 0) : ternary({}, 1);
}

bool Point::is_min() const {
  if (kind_ == SpaceKind::interval) return num_ == 0;
  return digits_.empty() && tail_ == 0;
}

bool Point::is_max() const {
  if (kind_ == SpaceKind::interval) return num_ == 1 && exp_ == 0;
  return digits_.empty() && tail_ == 1;
}

Rat Point::value() const {
  if (kind_ == SpaceKind::interval) return Rat(num_, pow2(static_cast<unsigned>(exp_)));
  Rat v(0);
  Int p3(1);
  int pos = 0;
  auto pow3_to = [&](int n) {
    while (pos < n) {
      p3 *= 3;
      ++pos;
    }
    return p3;
  };
  for (int d : digits_) v += Rat(2, pow3_to(d));
  if (tail_ > 0) v += Rat(3, pow3_to(tail_));  // sum_{n>=N} 2*3^-n = 3^{1-N}
  return v;
}

namespace {

// ternary digit at position n: 0 or 2
int digit_at(const Point& p, int n) {
  if (p.has_tail() && n >= p.tail_start()) return 2;
  return std::binary_search(p.digits().begin(), p.digits().end(), n) ? 2 : 0;
}

int relevant_bound(const Point& p) {
  if (p.has_tail()) return p.tail_start();
  return p.digits().empty() ? 0 : p.digits().back();
}

}  // namespace

int Point::compare(const Point& a, const Point& b) {
  if (a.kind_ != b.kind_) bad("comparison across different base spaces");
  if (a.kind_ == SpaceKind::interval) {
    // a.num/2^a.exp vs b.num/2^b.exp; exponents <= 62 keep this in __int128
    __int128 lhs = static_cast<__int128>(a.num_) << b.exp_;
    __int128 rhs = static_cast<__int128>(b.num_) << a.exp_;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
  }
  int limit = std::max(relevant_bound(a), relevant_bound(b));
  for (int n = 1; n <= limit; ++n) {
    int da = digit_at(a, n), db = digit_at(b, n);
    if (da != db) return da < db ? -1 : 1;
  }
  // equal up to limit; beyond it only a tail contributes (tail starts are <= limit)
  if (a.has_tail() == b.has_tail()) return 0;
  return a.has_tail() ? 1 : -1;
}

std::string Point::to_string() const {
  if (kind_ == SpaceKind::interval)
    return "d:" + std::to_string(num_) + "/2^" + std::to_string(exp_);
  std::string s = "t:{";
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(digits_[i]);
  }
  s += '}';
  if (tail_ > 0) s += "+tail" + std::to_string(tail_);
  return s;
}

Point Point::parse(std::string_view text) {
  if (text.size() >= 2 && text.substr(0, 2) == "d:") {
    auto body = text.substr(2);
    auto sep = body.find("/2^");
    if (sep == std::string_view::npos) bad("bad dyadic point: " + std::string(text));
    std::int64_t num = std::stoll(std::string(body.substr(0, sep)));
    int exp = std::stoi(std::string(body.substr(sep + 3)));
    return dyadic(num, exp);
  }
  if (text.size() >= 2 && text.substr(0, 2) == "t:") {
    auto body = text.substr(2);
    if (body.empty() || body[0] != '{') bad("bad ternary point: " + std::string(text));
    auto close = body.find('}');
    if (close == std::string_view::npos) bad("bad ternary point: " + std::string(text));
    std::vector<int> digits;
    std::string_view inner = body.substr(1, close - 1);
    while (!inner.empty()) {
      auto comma = inner.find(',');
      auto tok = comma == std::string_view::npos ? inner : inner.substr(0, comma);
      digits.push_back(std::stoi(std::string(tok)));
      inner = comma == std::string_view::npos ? std::string_view{} : inner.substr(comma + 1);
    }
    int tail = 0;
    auto rest = body.substr(close + 1);
    if (!rest.empty()) {
      if (rest.substr(0, 5) != "+tail") bad("bad ternary tail: " + std::string(text));
      tail = std::stoi(std::string(rest.substr(5)));
    }
    return ternary(std::move(digits), tail);
  }
  bad("unknown point syntax: " + std::string(text));
}

Point point_max(const Point& a, const Point& b) { return a < b ? b : a; }
Point point_min(const Point& a, const Point& b) { return a < b ? a : b; }

Point chi_apply(const Point& threshold, const Point& t) {
  return point_max(threshold, t);
}

Point cantor_gap_right(const Point& tail_point) {
  if (tail_point.space() != SpaceKind::cantor || !tail_point.has_tail())
    bad("gap_right needs a tail point");
  auto digits = tail_point.digits();
  digits.push_back(tail_point.tail_start() - 1);
  if (digits.back() == 0) bad("the point 1 has no gap above");
  return Point::ternary(std::move(digits), 0);
}

Point cantor_pred(const Point& finite_point) {
  if (finite_point.space() != SpaceKind::cantor || finite_point.has_tail() ||
      finite_point.digits().empty())
    bad("cantor_pred needs a nonzero finite point");
  auto digits = finite_point.digits();
  int top = digits.back();
  digits.pop_back();
  return Point::ternary(std::move(digits), top + 1);
}

bool has_point_between(const Point& a, const Point& b) {
  if (a >= b) return false;
  if (a.space() == SpaceKind::interval) return true;
  if (!a.has_tail()) return true;  // points accumulate just above a finite point
  return b != cantor_gap_right(a);
}

std::uint64_t mesh_cell_count(int level) {
  if (level < 0 || level > kMaxExp) bad("mesh level out of range");
  return std::uint64_t{1} << level;
}

std::uint64_t mesh_cell_of(const Point& p, int level) {
  std::uint64_t cells = mesh_cell_count(level);
  if (p.space() == SpaceKind::interval) {
    // floor(v * 2^level), clamped so 1 lands in the top cell
    std::uint64_t idx;
    if (p.exp() <= level)
      idx = static_cast<std::uint64_t>(p.num()) << (level - p.exp());
    else
      idx = static_cast<std::uint64_t>(p.num()) >> (p.exp() - level);
    return idx >= cells ? cells - 1 : idx;
  }
  std::uint64_t idx = 0;
  for (int n = 1; n <= level; ++n) idx = (idx << 1) | (digit_at(p, n) == 2 ? 1 : 0);
  return idx;
}

Point lambda_map(const Point& x) {
  if (x.space() != SpaceKind::cantor) bad("lambda_map expects a Cantor point");
  if (x.digits().empty() && !x.has_tail()) return Point::dyadic(0, 0);
  int e = x.has_tail() ? x.tail_start() - 1 : x.digits().back();
  // value = sum 2^{e-n} over digits, plus 2^{e-tail+1} for the tail
  std::int64_t num = 0;
  for (int d : x.digits()) num += std::int64_t{1} << (e - d);
  if (x.has_tail()) num += std::int64_t{1} << (e - x.tail_start() + 1);
  return Point::dyadic(num, e);
}

Point lambda_min_preimage(const Point& d) {
  if (d.space() != SpaceKind::interval) bad("lambda_min_preimage expects a dyadic point");
  if (d.is_min()) return Point::ternary({}, 0);
  if (d.is_max()) return Point::ternary({}, 1);
  // d = sum_{n in B} 2^-n with max B = exp (num odd); least preimage swaps
  // the last binary digit for an all-2s ternary tail.
  std::vector<int> digits;
  for (int n = 1; n < d.exp(); ++n)
    if ((d.num() >> (d.exp() - n)) & 1) digits.push_back(n);
  return Point::ternary(std::move(digits), d.exp() + 1);
}

// --- DenseSequence ---

namespace {

// cumulative count of blocks 1..L: sum (2^l - 1) = 2^{L+1} - 2 - L
std::uint64_t blocks_total(int L) {
  return (std::uint64_t{1} << (L + 1)) - 2 - static_cast<std::uint64_t>(L);
}

// 1-based index -> (block level L, offset p in 1..2^L-1)
std::pair<int, std::uint64_t> block_position(std::uint64_t n) {
  int L = 1;
  while (blocks_total(L) < n) {
    ++L;
    if (L > 60) bad("sequence index out of range");
  }
  return {L, n - blocks_total(L - 1)};
}

}  // namespace

DenseSequence DenseSequence::canonical(SpaceKind space) {
  DenseSequence s;
  s.kind_ = space == SpaceKind::interval ? Kind::canonical_dyadic : Kind::canonical_ternary;
  s.space_ = space;
  return s;
}

DenseSequence DenseSequence::explicit_list(std::vector<Point> points) {
  if (points.empty()) bad("explicit sequence must be nonempty");
  SpaceKind space = points.front().space();
  for (const auto& p : points) {
    if (p.space() != space) bad("explicit sequence mixes spaces");
    if (p.is_max()) bad("sequence points must avoid max T");
  }
  DenseSequence s;
  s.kind_ = Kind::explicit_list;
  s.space_ = space;
  s.list_ = std::move(points);
  return s;
}

Point DenseSequence::at(std::uint64_t n) const {
  if (n == 0) bad("sequence index is 1-based");
  switch (kind_) {
    case Kind::explicit_list:
      return list_[(n - 1) % list_.size()];
    case Kind::canonical_dyadic: {
      auto [L, p] = block_position(n);
      return Point::dyadic(static_cast<std::int64_t>(p), L);
    }
    case Kind::canonical_ternary: {
      auto [L, p] = block_position(n);
      std::vector<int> digits;
      for (int b = 0; b < L; ++b)
        if ((p >> b) & 1) digits.push_back(L - b);
      return Point::ternary(std::move(digits), 0);
    }
  }
  bad("unreachable sequence kind");
}

std::string DenseSequence::to_json_string() const {
  nlohmann::ordered_json j;
  switch (kind_) {
    case Kind::canonical_dyadic: j["kind"] = "canonical-dyadic"; break;
    case Kind::canonical_ternary: j["kind"] = "canonical-ternary"; break;
    case Kind::explicit_list: {
      j["kind"] = "explicit";
      auto arr = nlohmann::ordered_json::array();
      for (const auto& p : list_) arr.push_back(p.to_string());
      j["list"] = std::move(arr);
      break;
    }
  }
  return j.dump();
}

DenseSequence DenseSequence::parse_json(std::string_view text) {
  auto j = nlohmann::json::parse(text);
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "canonical-dyadic") return canonical(SpaceKind::interval);
  if (kind == "canonical-ternary") return canonical(SpaceKind::cantor);
  if (kind == "explicit") {
    std::vector<Point> pts;
    for (const auto& s : j.at("list")) pts.push_back(Point::parse(s.get<std::string>()));
    return explicit_list(std::move(pts));
  }
  bad("unknown sequence kind: " + kind);
}

DensityEvidence tail_mesh_coverage(const DenseSequence& seq, std::uint64_t start,
                                   int mesh_level, std::uint64_t max_window) {
  DensityEvidence ev;
  ev.mesh_level = mesh_level;
  ev.start = start;
  std::uint64_t cells = mesh_cell_count(mesh_level);
  std::vector<bool> hit(cells, false);
  std::uint64_t remaining = cells;
  for (std::uint64_t i = 0; i < max_window && remaining > 0; ++i) {
    Point p = seq.at(start + i);
    std::uint64_t c = mesh_cell_of(p, mesh_level);
    if (!hit[c]) {
      hit[c] = true;
      --remaining;
    }
    ev.scanned = i + 1;
  }
  ev.covered = remaining == 0;
  for (std::uint64_t c = 0; c < cells; ++c)
    if (!hit[c]) ev.missing_cells.push_back(c);
  return ev;
}

bool ClopenInterval::contains(const Point& p) const {
  if (lo.space() == SpaceKind::interval) return p >= lo && p < hi;
  return p >= lo && p <= hi;
}

}  // namespace ahcert
