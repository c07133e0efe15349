#pragma once

// Dense univariate polynomials over Q, ascending coefficient order.

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "sjk/exact/rational.hpp"

namespace sjk {

class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<BigRational> c) : c_(c) { trim(); }
  explicit IntPolynomial(std::vector<BigRational> c) : c_(std::move(c)) { trim(); }

  static IntPolynomial constant(const BigRational& v) { return IntPolynomial({v}); }
  static IntPolynomial monomial(const BigRational& v, std::size_t deg) {
    std::vector<BigRational> c(deg + 1);
    c[deg] = v;
    return IntPolynomial(std::move(c));
  }
  /// a + b z
  static IntPolynomial linear(const BigRational& a, const BigRational& b) { return IntPolynomial({a, b}); }

  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] const std::vector<BigRational>& coefficients() const { return c_; }
  [[nodiscard]] BigRational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigRational(); }
  [[nodiscard]] BigRational leading() const { return c_.empty() ? BigRational() : c_.back(); }

  [[nodiscard]] BigRational operator()(const BigRational& x) const {
    BigRational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  [[nodiscard]] int sign_at(const BigRational& x) const { return (*this)(x).sign(); }

  /// Sign as x -> +inf (or -inf when at_neg_inf).
  [[nodiscard]] int sign_at_infinity(bool at_neg_inf = false) const {
    if (c_.empty()) return 0;
    int s = leading().sign();
    if (at_neg_inf && degree() % 2 == 1) s = -s;
    return s;
  }

  [[nodiscard]] IntPolynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigRational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * BigRational(static_cast<Int>(i));
    return IntPolynomial(std::move(d));
  }

  [[nodiscard]] IntPolynomial antiderivative() const {
    if (c_.empty()) return {};
    std::vector<BigRational> a(c_.size() + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) a[i + 1] = c_[i] / BigRational(static_cast<Int>(i + 1));
    return IntPolynomial(std::move(a));
  }

  [[nodiscard]] BigRational integrate(const BigRational& lo, const BigRational& hi) const {
    const IntPolynomial a = antiderivative();
    return a(hi) - a(lo);
  }

  [[nodiscard]] IntPolynomial pow(unsigned e) const {
    IntPolynomial r = constant(1), b = *this;
    while (e > 0) {
      if (e & 1U) r = r * b;
      e >>= 1U;
      if (e > 0) b = b * b;
    }
    return r;
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  IntPolynomial& operator*=(const BigRational& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator-(IntPolynomial a) { return a *= BigRational(-1); }
  friend IntPolynomial operator*(IntPolynomial a, const BigRational& s) { return a *= s; }
  friend IntPolynomial operator*(const BigRational& s, IntPolynomial a) { return a *= s; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(r));
  }
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

  /// Euclidean division over Q: returns (quotient, remainder).
  [[nodiscard]] std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& d) const {
    if (d.is_zero()) throw ValidationError("polynomial division by zero");
    IntPolynomial r = *this;
    if (r.degree() < d.degree()) return {IntPolynomial{}, r};
    std::vector<BigRational> q(static_cast<std::size_t>(r.degree() - d.degree() + 1));
    const BigRational lead = d.leading();
    while (!r.is_zero() && r.degree() >= d.degree()) {
      const auto shift = static_cast<std::size_t>(r.degree() - d.degree());
      const BigRational f = r.leading() / lead;
      q[shift] = f;
      for (std::size_t i = 0; i < d.c_.size(); ++i) r.c_[i + shift] -= f * d.c_[i];
      r.c_.pop_back();
      r.trim();
    }
    return {IntPolynomial(std::move(q)), r};
  }

  /// Scaled to coprime integer coefficients with positive leading coefficient.
  [[nodiscard]] IntPolynomial primitive() const {
    if (c_.empty()) return {};
    BigInt lcm_den = 1, g = 0;
    for (const auto& x : c_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.den().get_mpz_t());
    std::vector<BigRational> out;
    out.reserve(c_.size());
    for (const auto& x : c_) {
      BigInt v = x.num() * (lcm_den / x.den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      out.emplace_back(v);
    }
    BigRational scale(BigInt(1), g);
    if (out.back().sign() < 0) scale = -scale;
    for (auto& x : out) x *= scale;
    return IntPolynomial(std::move(out));
  }

  /// Monic gcd over Q.
  friend IntPolynomial gcd(IntPolynomial a, IntPolynomial b) {
    while (!b.is_zero()) {
      IntPolynomial r = a.divmod(b).second;
      a = std::move(b);
      b = r.primitive();
    }
    if (a.is_zero()) return a;
    return a * (BigRational(1) / a.leading());
  }

  /// p / gcd(p, p'), primitive.
  [[nodiscard]] IntPolynomial square_free() const {
    if (degree() <= 0) return primitive();
    const IntPolynomial g = gcd(*this, derivative());
    return divmod(g).first.primitive();
  }

  [[nodiscard]] std::vector<std::string> coefficient_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(x.str());
    return out;
  }

  /// Human form, highest degree first, e.g. "10*x^2 - 16*x - 42".
  [[nodiscard]] std::string str(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const BigRational& a = c_[i];
      if (a.is_zero()) continue;
      const BigRational mag = a.abs();
      if (s.empty()) s += a.sign() < 0 ? "-" : "";
      else s += a.sign() < 0 ? " - " : " + ";
      const bool unit = mag == BigRational(1) && i > 0;
      if (!unit) s += mag.str();
      if (i > 0) {
        if (!unit) s += "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<BigRational> c_;
};

inline BigRational poly_eval(const IntPolynomial& p, const BigRational& x) { return p(x); }
inline IntPolynomial poly_derivative(const IntPolynomial& p) { return p.derivative(); }
inline IntPolynomial poly_antiderivative(const IntPolynomial& p) { return p.antiderivative(); }

}  // namespace sjk
