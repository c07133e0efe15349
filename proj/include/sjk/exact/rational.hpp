#pragma once

/**
 * @file rational.hpp
 * @brief Canonical arbitrary-precision rationals.
 *
 * Thin value wrapper over GMP's mpq_class that keeps every value reduced
 * with a positive denominator, so structural equality is numeric equality
 * and zero is always 0/1.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "sjk/errors.hpp"

namespace sjk {

using BigInt = mpz_class;
using Int = std::int64_t;

class BigRational {
 public:
  BigRational() = default;
  BigRational(Int n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& n) : q_(n) {}           // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  BigRational(Int num, Int den) : BigRational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

  /// Accepts "p", "-p", "p/q". Whitespace is not tolerated.
  static BigRational parse(std::string_view text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string_view::npos) return BigRational(BigInt(std::string(text)));
      return BigRational(BigInt(std::string(text.substr(0, slash))),
                         BigInt(std::string(text.substr(slash + 1))));
    } catch (const std::invalid_argument&) {
      throw ValidationError("malformed rational '" + std::string(text) + "'");
    }
  }

  [[nodiscard]] BigInt num() const { return q_.get_num(); }
  [[nodiscard]] BigInt den() const { return q_.get_den(); }
  [[nodiscard]] int sign() const { return sgn(q_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
  [[nodiscard]] BigRational abs() const { return BigRational(mpq_class(::abs(q_))); }

  [[nodiscard]] BigInt floor() const {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }
  [[nodiscard]] BigInt ceil() const {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }

  /// "p/q", or "p" when the denominator is one.
  [[nodiscard]] std::string str() const { return is_integer() ? q_.get_num().get_str() : q_.get_str(); }

  /// Fixed-point rendering truncated toward -inf (or +inf when round_up).
  [[nodiscard]] std::string decimal(int digits, bool round_up = false) const {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    const BigRational scaled = *this * BigRational(scale);
    BigInt v = round_up ? scaled.ceil() : scaled.floor();
    const bool negative = v < 0;
    if (negative) v = -v;
    std::string body = v.get_str();
    if (static_cast<int>(body.size()) <= digits) body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    if (digits > 0) body.insert(body.size() - static_cast<std::size_t>(digits), 1, '.');
    return negative ? "-" + body : body;
  }

  [[nodiscard]] BigRational pow(unsigned e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), e);
    return BigRational(n, d);
  }

  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o) {
    if (o.is_zero()) throw ValidationError("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a) { return BigRational(mpq_class(-a.q_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

 private:
  explicit BigRational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  mpq_class q_;
};

/// Narrowing with an explicit range check; join parameters are 64-bit.
inline Int to_int(const BigInt& v) {
  if (!v.fits_slong_p()) throw ValidationError("integer " + v.get_str() + " exceeds the 64-bit range");
  return static_cast<Int>(v.get_si());
}

inline BigInt big(Int v) { return BigInt(static_cast<long>(v)); }

}  // namespace sjk
