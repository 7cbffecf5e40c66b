#include "rational.hpp"

#include <stdexcept>

namespace ahcert {

namespace {

Int parse_int(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("sign without digits");
  Int v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("bad digit in integer: " + std::string(s));
    v = v * 10 + (s[i] - '0');
  }
  return neg ? Int(-v) : v;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rat(num, den);
}

std::string rational_to_string(const Rat& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

Int pow2(unsigned e) { return Int(1) << e; }

Rat sqrt_upper(const Rat& x, unsigned bits) {
  if (x < 0) throw std::invalid_argument("sqrt_upper of negative value");
  if (x == 0) return Rat(0);
  // least m with m^2 * den >= num * 4^bits
  Int num = numerator(x) << (2 * bits);
  Int den = denominator(x);
  Int m = sqrt(Int(num / den));  // floor sqrt of the quotient
  while (m * m * den < num) ++m;
  while (m > 0 && (m - 1) * (m - 1) * den >= num) --m;
  return Rat(m, pow2(bits));
}

Dyadic::Dyadic(Int numerator, int exponent) : num_(std::move(numerator)), exp_(exponent) {
  if (exponent < 0) throw std::invalid_argument("negative dyadic exponent");
  normalize();
}

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && (num_ & 1) == 0) {
    num_ >>= 1;
    --exp_;
  }
}

Dyadic Dyadic::operator-() const {
  Dyadic r;
  r.num_ = -num_;
  r.exp_ = exp_;
  return r;
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
  int e = std::max(exp_, o.exp_);
  Int a = num_ << (e - exp_);
  Int b = o.num_ << (e - o.exp_);
  return Dyadic(a + b, e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + (-o); }

Dyadic Dyadic::operator*(const Dyadic& o) const {
  return Dyadic(num_ * o.num_, exp_ + o.exp_);
}

Dyadic Dyadic::operator*(const Int& c) const { return Dyadic(num_ * c, exp_); }

Dyadic Dyadic::halved() const { return Dyadic(num_, exp_ + 1); }

Dyadic Dyadic::times_pow2(int k) const {
  if (k < 0) throw std::invalid_argument("times_pow2 needs k >= 0");
  if (k >= exp_) return Dyadic(num_ << (k - exp_), 0);
  return Dyadic(num_, exp_ - k);
}

int Dyadic::sign() const {
  if (num_ == 0) return 0;
  return num_ > 0 ? 1 : -1;
}

Rat Dyadic::to_rational() const { return Rat(num_, pow2(static_cast<unsigned>(exp_))); }

std::string Dyadic::to_string() const {
  if (num_ == 0) return "0";
  return num_.str() + "/2^" + std::to_string(exp_);
}

Dyadic Dyadic::parse(std::string_view text) {
  if (text == "0") return Dyadic();
  auto slash = text.find("/2^");
  if (slash == std::string_view::npos)
    return Dyadic(parse_int(text), 0);
  Int num = parse_int(text.substr(0, slash));
  Int exp = parse_int(text.substr(slash + 3));
  if (exp < 0 || exp > 1 << 20) throw std::invalid_argument("dyadic exponent out of range");
  return Dyadic(num, static_cast<int>(exp));
}

}  // namespace ahcert
