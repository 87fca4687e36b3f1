#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace votemle {

// Signed arbitrary-precision integer, sign-magnitude with base-1e9 limbs.
// Big enough and fast enough for exact likelihood products; no external deps.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT: implicit by design, mirrors built-in ints

  static BigInt from_string(std::string_view s);

  bool is_zero() const { return sign_ == 0; }
  int signum() const { return sign_; }

  BigInt operator-() const;
  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  // Truncated toward zero, like built-in integer division. b must be nonzero.
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);
  static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);

  static BigInt gcd(BigInt a, BigInt b);  // always nonnegative
  static BigInt pow(const BigInt& base, unsigned long long exp);

  int compare(const BigInt& other) const;
  bool operator==(const BigInt& other) const { return compare(other) == 0; }
  bool operator<(const BigInt& other) const { return compare(other) < 0; }
  bool operator<=(const BigInt& other) const { return compare(other) <= 0; }
  bool operator>(const BigInt& other) const { return compare(other) > 0; }
  bool operator>=(const BigInt& other) const { return compare(other) >= 0; }

  std::string to_string() const;

 private:
  static constexpr uint32_t kBase = 1000000000;

  int sign_ = 0;                 // -1, 0, +1
  std::vector<uint32_t> limbs_;  // little-endian; empty iff zero

  void trim();
  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

// Exact rational, always reduced, denominator always positive.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long num, long long den = 1) : Rational(BigInt(num), BigInt(den)) {}
  Rational(BigInt num, BigInt den);

  // Accepts "3/5", "-7/2" or a bare integer "4".
  static Rational from_string(std::string_view s);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  // Negative exponents invert; base must be nonzero for exp < 0.
  static Rational pow(const Rational& base, long long exp);

  int compare(const Rational& other) const;
  bool operator==(const Rational& other) const { return compare(other) == 0; }
  bool operator<(const Rational& other) const { return compare(other) < 0; }
  bool operator<=(const Rational& other) const { return compare(other) <= 0; }
  bool operator>(const Rational& other) const { return compare(other) > 0; }
  bool operator>=(const Rational& other) const { return compare(other) >= 0; }

  std::string to_string() const;  // always "num/den"

 private:
  BigInt num_;
  BigInt den_;
};

}  // namespace votemle
