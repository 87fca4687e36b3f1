#include "votemle/rational.hpp"

#include <algorithm>
#include <cctype>

namespace votemle {

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // Avoid overflow on LLONG_MIN by working with unsigned magnitude.
  unsigned long long mag = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                 : static_cast<unsigned long long>(v);
  while (mag != 0) {
    limbs_.push_back(static_cast<uint32_t>(mag % kBase));
    mag /= kBase;
  }
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  out.reserve(std::max(a.size(), b.size()) + 1);
  uint64_t carry = 0;
  for (size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
    uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    out.push_back(static_cast<uint32_t>(s % kBase));
    carry = s / kBase;
  }
  return out;
}

// Requires |a| >= |b|.
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  out.reserve(a.size());
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (d < 0) {
      d += kBase;
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.push_back(static_cast<uint32_t>(d));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint64_t> acc(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t cur = acc[i + j] + static_cast<uint64_t>(a[i]) * b[j] + carry;
      acc[i + j] = cur % kBase;
      carry = cur / kBase;
    }
    size_t k = i + b.size();
    while (carry) {
      uint64_t cur = acc[k] + carry;
      acc[k] = cur % kBase;
      carry = cur / kBase;
      ++k;
    }
  }
  std::vector<uint32_t> out(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<uint32_t>(acc[i]);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Schoolbook long division. Single-limb divisors stream through directly;
// larger ones find each quotient digit by binary search.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
  if (b.size() == 1) {
    const uint64_t d = b[0];
    q.assign(a.size(), 0);
    uint64_t rem = 0;
    for (size_t i = a.size(); i-- > 0;) {
      uint64_t cur = rem * kBase + a[i];
      q[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r.clear();
    if (rem != 0) r.push_back(static_cast<uint32_t>(rem));
    return;
  }
  q.assign(a.size(), 0);
  std::vector<uint32_t> rem;  // running remainder, little-endian
  for (size_t i = a.size(); i-- > 0;) {
    rem.insert(rem.begin(), a[i]);
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (cmp_mag(rem, b) < 0) continue;
    uint32_t lo = 0, hi = kBase - 1, digit = 0;
    while (lo <= hi) {
      uint32_t mid = lo + (hi - lo) / 2;
      std::vector<uint32_t> t = mul_mag(b, {mid});
      if (cmp_mag(t, rem) <= 0) {
        digit = mid;
        lo = mid + 1;
      } else {
        if (mid == 0) break;
        hi = mid - 1;
      }
    }
    q[i] = digit;
    if (digit != 0) rem = sub_mag(rem, mul_mag(b, {digit}));
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  r = std::move(rem);
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  BigInt out;
  if (a.sign_ == b.sign_) {
    out.sign_ = a.sign_;
    out.limbs_ = BigInt::add_mag(a.limbs_, b.limbs_);
  } else {
    int c = BigInt::cmp_mag(a.limbs_, b.limbs_);
    if (c == 0) return BigInt();
    if (c > 0) {
      out.sign_ = a.sign_;
      out.limbs_ = BigInt::sub_mag(a.limbs_, b.limbs_);
    } else {
      out.sign_ = b.sign_;
      out.limbs_ = BigInt::sub_mag(b.limbs_, a.limbs_);
    }
  }
  out.trim();
  return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
  BigInt out;
  out.sign_ = a.sign_ * b.sign_;
  out.limbs_ = BigInt::mul_mag(a.limbs_, b.limbs_);
  out.trim();
  return out;
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
  if (b.sign_ == 0) throw std::invalid_argument("BigInt: division by zero");
  if (a.sign_ == 0) return {BigInt(), BigInt()};
  BigInt q, r;
  divmod_mag(a.limbs_, b.limbs_, q.limbs_, r.limbs_);
  q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
  r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
  q.trim();
  r.trim();
  return {q, r};
}

BigInt operator/(const BigInt& a, const BigInt& b) { return BigInt::divmod(a, b).first; }
BigInt operator%(const BigInt& a, const BigInt& b) { return BigInt::divmod(a, b).second; }

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.sign_ = a.limbs_.empty() ? 0 : 1;
  b.sign_ = b.limbs_.empty() ? 0 : 1;
  while (!b.is_zero()) {
    if (b.limbs_.size() == 1 && b.limbs_[0] == 1) return b;
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigInt BigInt::pow(const BigInt& base, unsigned long long exp) {
  BigInt result(1);
  BigInt acc = base;
  while (exp != 0) {
    if (exp & 1ULL) result = result * acc;
    exp >>= 1;
    if (exp != 0) acc = acc * acc;
  }
  return result;
}

int BigInt::compare(const BigInt& other) const {
  if (sign_ != other.sign_) return sign_ < other.sign_ ? -1 : 1;
  int c = cmp_mag(limbs_, other.limbs_);
  return sign_ >= 0 ? c : -c;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::string out = sign_ < 0 ? "-" : "";
  out += std::to_string(limbs_.back());
  for (size_t i = limbs_.size() - 1; i-- > 0;) {
    std::string part = std::to_string(limbs_[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

BigInt BigInt::from_string(std::string_view s) {
  bool neg = false;
  size_t pos = 0;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    neg = s[pos] == '-';
    ++pos;
  }
  if (pos == s.size()) throw std::invalid_argument("BigInt: empty numeral");
  BigInt out;
  BigInt ten(10);
  for (; pos < s.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(s[pos])))
      throw std::invalid_argument("BigInt: bad digit in numeral");
    out = out * ten + BigInt(s[pos] - '0');
  }
  return neg ? -out : out;
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("Rational: zero denominator");
  if (den_.signum() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  if (den_ == BigInt(1)) return;  // integer fast path, nothing to reduce
  BigInt g = BigInt::gcd(num_, den_);
  num_ = num_ / g;
  den_ = den_ / g;
}

Rational Rational::from_string(std::string_view s) {
  size_t slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(BigInt::from_string(s), BigInt(1));
  return Rational(BigInt::from_string(s.substr(0, slash)), BigInt::from_string(s.substr(slash + 1)));
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::pow(const Rational& base, long long exp) {
  if (exp >= 0) {
    return Rational(BigInt::pow(base.num_, static_cast<unsigned long long>(exp)),
                    BigInt::pow(base.den_, static_cast<unsigned long long>(exp)));
  }
  if (base.is_zero()) throw std::invalid_argument("Rational: zero to negative power");
  unsigned long long e = static_cast<unsigned long long>(-(exp + 1)) + 1ULL;
  return Rational(BigInt::pow(base.den_, e), BigInt::pow(base.num_, e));
}

int Rational::compare(const Rational& other) const {
  return (num_ * other.den_).compare(other.num_ * den_);
}

std::string Rational::to_string() const { return num_.to_string() + "/" + den_.to_string(); }

}  // namespace votemle
