#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "tropid/error.hpp"

namespace tropid {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

namespace detail {

using int128 = __int128;
using uint128 = unsigned __int128;

inline uint128 abs128(int128 v) {
  return v < 0 ? uint128(-(v + 1)) + 1 : uint128(v);
}

inline uint128 gcd128(uint128 a, uint128 b) {
  while (b != 0) {
    uint128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline BigInt to_bigint(int128 v) {
  const uint128 m = abs128(v);
  BigInt out = std::uint64_t(m >> 64);
  out <<= 64;
  out += std::uint64_t(m);
  return v < 0 ? BigInt(-out) : out;
}

}  // namespace detail

// Exact rational number.
//
// Values that fit a reduced int64/int64 fraction are kept in machine words;
// everything else lives behind an arbitrary-precision fallback. The
// representation is a function of the value: the fallback is engaged exactly
// when the reduced fraction does not fit, so equality of values is equality
// of representations. Canonical form everywhere: denominator positive,
// fraction fully reduced. All arithmetic is exact; there is no rounding
// anywhere in the library.
class Rational {
 public:
  Rational() noexcept : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : num_(value), den_(1) {}           // NOLINT(google-explicit-constructor)

  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw ValueError("rational: zero denominator");
    assign128(detail::int128(num), detail::int128(den));
  }

  Rational(const Rational& o)
      : num_(o.num_),
        den_(o.den_),
        big_(o.big_ ? std::make_unique<BigRational>(*o.big_) : nullptr) {}
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<BigRational>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  static Rational from_big(const BigRational& value) {
    Rational r;
    r.assign_big(value);
    return r;
  }

  // Accepts "p" or "p/q" with q > 0, both in decimal, arbitrary precision.
  static Rational parse(std::string_view text) {
    const auto bad = [&] {
      return ParseError("rational: malformed value '" + std::string(text) + "'");
    };
    std::size_t pos = 0;
    if (pos < text.size() && text[pos] == '-') ++pos;
    std::size_t digits_begin = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == digits_begin) throw bad();
    std::string num_str(text.substr(0, pos));
    std::string den_str = "1";
    if (pos < text.size()) {
      if (text[pos] != '/') throw bad();
      ++pos;
      std::size_t den_begin = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
      if (pos == den_begin || pos != text.size()) throw bad();
      den_str = std::string(text.substr(den_begin));
    }
    BigInt num(num_str);
    BigInt den(den_str);
    if (den == 0) throw ParseError("rational: zero denominator in '" + std::string(text) + "'");
    Rational r;
    r.assign_big(BigRational(num, den));
    return r;
  }

  bool is_small() const noexcept { return big_ == nullptr; }
  bool is_integer() const { return is_small() ? den_ == 1 : denominator() == 1; }

  BigInt numerator() const {
    return is_small() ? BigInt(num_) : BigInt(boost::multiprecision::numerator(*big_));
  }
  BigInt denominator() const {
    return is_small() ? BigInt(den_) : BigInt(boost::multiprecision::denominator(*big_));
  }

  BigRational to_big() const {
    if (!is_small()) return *big_;
    return BigRational(BigInt(num_), BigInt(den_));
  }

  int sign() const {
    if (is_small()) return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
    return big_->sign();
  }

  Rational operator-() const {
    Rational r(*this);
    if (r.is_small()) {
      r.num_ = -r.num_;  // |num_| <= INT64_MAX by the canonical range
    } else {
      *r.big_ = -*r.big_;
    }
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.is_small() && b.is_small()) {
      const detail::int128 num =
          detail::int128(a.num_) * b.den_ + detail::int128(b.num_) * a.den_;
      const detail::int128 den = detail::int128(a.den_) * b.den_;
      Rational r;
      r.assign128(num, den);
      return r;
    }
    Rational r;
    r.assign_big(a.to_big() + b.to_big());
    return r;
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.is_small() && b.is_small()) {
      const detail::int128 num =
          detail::int128(a.num_) * b.den_ - detail::int128(b.num_) * a.den_;
      const detail::int128 den = detail::int128(a.den_) * b.den_;
      Rational r;
      r.assign128(num, den);
      return r;
    }
    Rational r;
    r.assign_big(a.to_big() - b.to_big());
    return r;
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_small() && b.is_small()) {
      const detail::int128 num = detail::int128(a.num_) * b.num_;
      const detail::int128 den = detail::int128(a.den_) * b.den_;
      Rational r;
      r.assign128(num, den);
      return r;
    }
    Rational r;
    r.assign_big(a.to_big() * b.to_big());
    return r;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (a.is_small() != b.is_small()) return false;  // representation is canonical
    if (a.is_small()) return a.num_ == b.num_ && a.den_ == b.den_;
    return *a.big_ == *b.big_;
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.is_small() && b.is_small()) {
      const detail::int128 l = detail::int128(a.num_) * b.den_;
      const detail::int128 r = detail::int128(b.num_) * a.den_;
      return l < r ? std::strong_ordering::less
                   : (l == r ? std::strong_ordering::equal : std::strong_ordering::greater);
    }
    const BigRational l = a.to_big();
    const BigRational r = b.to_big();
    return l < r ? std::strong_ordering::less
                 : (l == r ? std::strong_ordering::equal : std::strong_ordering::greater);
  }

  std::string str() const {
    if (is_small()) {
      std::string s = std::to_string(num_);
      if (den_ != 1) s += "/" + std::to_string(den_);
      return s;
    }
    std::string s = boost::multiprecision::numerator(*big_).str();
    const BigInt den = boost::multiprecision::denominator(*big_);
    if (den != 1) s += "/" + den.str();
    return s;
  }

 private:
  static constexpr std::int64_t kMaxSmall = INT64_MAX;  // exclude INT64_MIN so negation is safe

  // num/den reduced with den > 0 is representable iff both halves fit.
  void assign128(detail::int128 num, detail::int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) {
      num_ = 0;
      den_ = 1;
      big_.reset();
      return;
    }
    const detail::uint128 g = detail::gcd128(detail::abs128(num), detail::uint128(den));
    num /= detail::int128(g);
    den /= detail::int128(g);
    if (num <= detail::int128(kMaxSmall) && num >= -detail::int128(kMaxSmall) &&
        den <= detail::int128(kMaxSmall)) {
      num_ = std::int64_t(num);
      den_ = std::int64_t(den);
      big_.reset();
      return;
    }
    big_ = std::make_unique<BigRational>(detail::to_bigint(num), detail::to_bigint(den));
  }

  void assign_big(const BigRational& value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    static const BigInt max_small = kMaxSmall;
    if (num <= max_small && num >= -max_small && den <= max_small) {
      num_ = num.convert_to<std::int64_t>();
      den_ = den.convert_to<std::int64_t>();
      big_.reset();
      return;
    }
    big_ = std::make_unique<BigRational>(value);
  }

  std::int64_t num_;
  std::int64_t den_;
  std::unique_ptr<BigRational> big_;  // engaged iff the value does not fit the small form
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }
inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace tropid
