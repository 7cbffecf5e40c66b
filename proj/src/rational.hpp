#ifndef AHCERT_RATIONAL_HPP
#define AHCERT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace ahcert {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Exact parse of "p", "-p", "p/q". Rejects anything else (no floats cross
// this boundary).
Rat parse_rational(std::string_view text);

// "p/q", or plain "p" when the denominator is 1.
std::string rational_to_string(const Rat& value);

// Least grid point m/2^bits with (m/2^bits)^2 >= x. Lands exactly on sqrt(x)
// whenever that is representable on the grid, so certified upper bounds of
// perfect squares are sharp.
Rat sqrt_upper(const Rat& x, unsigned bits = 32);

Int pow2(unsigned e);

// Element of Z[1/2], kept normalized: num odd, or exp == 0.
class Dyadic {
public:
  Dyadic() = default;
  Dyadic(Int numerator, int exponent);
  explicit Dyadic(long n) : num_(n) {}

  static Dyadic half() { return Dyadic(1, 1); }
  static Dyadic one() { return Dyadic(1, 0); }

  const Int& num() const { return num_; }
  int exp() const { return exp_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return exp_ == 0; }

  Dyadic operator-() const;
  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator-(const Dyadic& o) const;
  Dyadic operator*(const Dyadic& o) const;
  Dyadic operator*(const Int& c) const;
  Dyadic halved() const;
  Dyadic times_pow2(int k) const;  // multiply by 2^k, k >= 0
  int sign() const;

  bool operator==(const Dyadic& o) const {
    return num_ == o.num_ && exp_ == o.exp_;
  }
  bool operator!=(const Dyadic& o) const { return !(*this == o); }

  Rat to_rational() const;
  // "0", or "p/2^e" with p odd (or e = 0).
  std::string to_string() const;
  static Dyadic parse(std::string_view text);

private:
  void normalize();
  Int num_ = 0;
  int exp_ = 0;
};

}  // namespace ahcert

#endif
