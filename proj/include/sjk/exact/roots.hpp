#pragma once

/**
 * @file roots.hpp
 * @brief Certified real-root isolation over Q.
 *
 * Everything is driven by a Sturm chain on the square-free part. Chain
 * members are rescaled by positive constants only, which keeps the sign
 * pattern intact while stopping coefficient blow-up.
 */

#include <optional>
#include <string>
#include <vector>

#include "sjk/exact/polynomial.hpp"

namespace sjk {

namespace detail {

inline IntPolynomial positive_primitive(const IntPolynomial& p) {
  IntPolynomial q = p.primitive();
  if (!q.is_zero() && q.leading().sign() != p.leading().sign()) q = -q;
  return q;
}

inline int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace detail

class SturmChain {
 public:
  explicit SturmChain(const IntPolynomial& p) {
    if (p.is_zero()) throw ValidationError("indeterminate root count: zero polynomial");
    base_ = p.square_free();
    chain_.push_back(base_);
    if (base_.degree() <= 0) return;
    chain_.push_back(detail::positive_primitive(base_.derivative()));
    while (true) {
      const IntPolynomial r = chain_[chain_.size() - 2].divmod(chain_.back()).second;
      if (r.is_zero()) break;
      chain_.push_back(detail::positive_primitive(-r));
    }
  }

  [[nodiscard]] const IntPolynomial& square_free() const { return base_; }

  [[nodiscard]] int variations_at(const BigRational& x) const {
    std::vector<int> s;
    s.reserve(chain_.size());
    for (const auto& q : chain_) s.push_back(q.sign_at(x));
    return detail::variations(s);
  }
  [[nodiscard]] int variations_at_infinity(bool negative) const {
    std::vector<int> s;
    s.reserve(chain_.size());
    for (const auto& q : chain_) s.push_back(q.sign_at_infinity(negative));
    return detail::variations(s);
  }

  /// Distinct roots in (lo, hi].
  [[nodiscard]] int count(const BigRational& lo, const BigRational& hi) const {
    return variations_at(lo) - variations_at(hi);
  }
  /// Distinct roots in (lo, hi).
  [[nodiscard]] int count_open(const BigRational& lo, const BigRational& hi) const {
    return count(lo, hi) - (base_.sign_at(hi) == 0 ? 1 : 0);
  }
  [[nodiscard]] int count_real() const { return variations_at_infinity(true) - variations_at_infinity(false); }

 private:
  IntPolynomial base_;
  std::vector<IntPolynomial> chain_;
};

struct IsolatingInterval {
  BigRational lo;
  BigRational hi;
  IntPolynomial polynomial;

  [[nodiscard]] bool exact() const { return lo == hi; }
  [[nodiscard]] BigRational width() const { return hi - lo; }
};

/// 1 + max |a_i / a_n|; every real root has absolute value strictly below it.
inline BigRational cauchy_bound(const IntPolynomial& p) {
  if (p.degree() <= 0) return BigRational(1);
  BigRational m;
  for (int i = 0; i < p.degree(); ++i) {
    const BigRational r = (p.coeff(static_cast<std::size_t>(i)) / p.leading()).abs();
    if (r > m) m = r;
  }
  return m + BigRational(1);
}

inline int sturm_count(const IntPolynomial& p, const BigRational& lo, const BigRational& hi) {
  if (!(lo < hi)) throw ValidationError("sturm_count requires lo < hi");
  return SturmChain(p).count(lo, hi);
}

/// Roots in (lo, +inf), with the Cauchy bound standing in for infinity.
inline int sturm_count_above(const IntPolynomial& p, const BigRational& lo) {
  const SturmChain chain(p);
  const BigRational b = cauchy_bound(chain.square_free());
  if (!(lo < b)) return 0;
  return chain.count(lo, b);
}

inline IsolatingInterval refine_interval(const IsolatingInterval& iv, const BigRational& width) {
  if (width.sign() <= 0) throw ValidationError("refinement width must be positive");
  if (iv.exact()) return iv;
  IsolatingInterval r = iv;
  const IntPolynomial& p = r.polynomial;
  std::optional<SturmChain> chain;
  int slo = p.sign_at(r.lo);
  const int shi = p.sign_at(r.hi);
  while (r.hi - r.lo > width) {
    const BigRational mid = (r.lo + r.hi) / BigRational(2);
    const int sm = p.sign_at(mid);
    if (sm == 0) return IsolatingInterval{mid, mid, p};
    bool left;
    if (slo != 0 && shi != 0) {
      left = sm != slo;
    } else {
      if (!chain) chain.emplace(p);
      left = chain->count_open(r.lo, mid) > 0;
    }
    if (left) {
      r.hi = mid;
    } else {
      r.lo = mid;
      slo = sm;
    }
  }
  return r;
}

namespace detail {

inline void bisect_isolate(const SturmChain& chain, const BigRational& a, const BigRational& b, int n,
                           std::vector<IsolatingInterval>& out) {
  if (n == 0) return;
  if (n == 1) {
    out.push_back(IsolatingInterval{a, b, chain.square_free()});
    return;
  }
  const BigRational mid = (a + b) / BigRational(2);
  const int left = chain.count_open(a, mid);
  bisect_isolate(chain, a, mid, left, out);
  const bool hit = chain.square_free().sign_at(mid) == 0;
  if (hit) out.push_back(IsolatingInterval{mid, mid, chain.square_free()});
  bisect_isolate(chain, mid, b, n - left - (hit ? 1 : 0), out);
}

inline std::vector<IsolatingInterval> isolate_raw(const SturmChain& chain, const BigRational& lo,
                                                  const BigRational& hi) {
  std::vector<IsolatingInterval> out;
  if (!(lo < hi)) return out;
  bisect_isolate(chain, lo, hi, chain.count_open(lo, hi), out);
  return out;
}

/// The one multiple of 1/lead inside iv, if that multiple is a root.
inline std::optional<BigRational> rational_in(const IsolatingInterval& iv, const BigInt& lead) {
  if (iv.exact()) return iv.lo;
  const BigRational step(BigInt(1), lead);
  const IsolatingInterval fine = refine_interval(iv, step / BigRational(2));
  if (fine.exact()) return fine.lo;
  const BigRational cand(BigRational(fine.lo * BigRational(lead)).ceil(), lead);
  if (cand <= fine.hi && cand >= fine.lo && iv.polynomial(cand).is_zero()) return cand;
  return std::nullopt;
}

}  // namespace detail

/// Isolating intervals for the distinct roots in the open interval (lo, hi),
/// ascending. Rational roots come back as degenerate [x, x] intervals.
inline std::vector<IsolatingInterval> isolate_roots(const IntPolynomial& p, const BigRational& lo,
                                                    const BigRational& hi) {
  const SturmChain chain(p);
  auto out = detail::isolate_raw(chain, lo, hi);
  const BigInt lead = chain.square_free().leading().num();
  for (auto& iv : out) {
    if (auto x = detail::rational_in(iv, lead)) iv = IsolatingInterval{*x, *x, iv.polynomial};
  }
  return out;
}

/// All rational roots, ascending. Any root N/D of a primitive integer
/// polynomial has D | lead, so refining each isolating interval below 1/lead
/// leaves at most one candidate to test exactly.
inline std::vector<BigRational> rational_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw ValidationError("rational_roots of the zero polynomial");
  const SturmChain chain(p);
  const BigRational b = cauchy_bound(chain.square_free());
  const BigInt lead = chain.square_free().leading().num();
  std::vector<BigRational> out;
  for (const auto& iv : detail::isolate_raw(chain, -b, b)) {
    if (auto x = detail::rational_in(iv, lead)) out.push_back(*x);
  }
  return out;
}

/// A certified real root: exact when rational, otherwise a refined interval.
struct RayCertificate {
  std::optional<BigRational> value;
  BigRational lo;
  BigRational hi;

  static RayCertificate exact(const BigRational& x) { return {x, x, x}; }
  static RayCertificate interval(const BigRational& lo, const BigRational& hi) { return {std::nullopt, lo, hi}; }
  static RayCertificate from(const IsolatingInterval& iv) {
    return iv.exact() ? exact(iv.lo) : interval(iv.lo, iv.hi);
  }

  [[nodiscard]] bool rational() const { return value.has_value(); }
  [[nodiscard]] bool contains(const BigRational& x) const { return lo <= x && x <= hi; }
  /// "p/q" when exact, "[lo, hi]" otherwise.
  [[nodiscard]] std::string str() const {
    return value ? value->str() : "[" + lo.str() + ", " + hi.str() + "]";
  }
  friend bool operator==(const RayCertificate&, const RayCertificate&) = default;
};

}  // namespace sjk
