#pragma once

#include <numeric>
#include <optional>
#include <string>

#include "sjk/exact/rational.hpp"

namespace sjk::join {

inline Int mul(Int a, Int b) {
  Int r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw ValidationError("integer overflow in " + std::to_string(a) + "*" + std::to_string(b));
  }
  return r;
}

inline Int add(Int a, Int b) {
  Int r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw ValidationError("integer overflow in " + std::to_string(a) + "+" + std::to_string(b));
  }
  return r;
}

/// gcd with gcd(x, 0) = x, always nonnegative.
inline Int gcd(Int a, Int b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

inline Int lcm(Int a, Int b) { return a == 0 || b == 0 ? 0 : mul(a / gcd(a, b), b); }

struct IntPair {
  Int first = 0;
  Int second = 0;
  friend bool operator==(const IntPair&, const IntPair&) = default;
  [[nodiscard]] std::string str() const { return "(" + std::to_string(first) + "," + std::to_string(second) + ")"; }
};

struct SasakiSeed {
  int d = 1;
  std::optional<BigRational> A;
  std::optional<Int> fano_index;
  Int order = 1;
  std::optional<Int> pi2_rank;
  std::optional<bool> b3_zero;
  std::optional<bool> simply_connected;
  // Homotopy sphere S^{2d+1}; enables the ring computation.
  std::optional<bool> sphere;
  std::string label;

  /// A KE seed: A = I.
  static SasakiSeed ke(int d, Int index, Int order = 1, std::string label = {}) {
    SasakiSeed s;
    s.d = d;
    s.A = BigRational(index);
    s.fano_index = index;
    s.order = order;
    s.label = std::move(label);
    return s;
  }

  /// The round S^{2d+1} over CP^d, I = d+1.
  static SasakiSeed sphere_seed(int d) {
    SasakiSeed s = ke(d, d + 1, 1, "S" + std::to_string(2 * d + 1));
    s.pi2_rank = 0;
    s.b3_zero = true;
    s.simply_connected = true;
    s.sphere = true;
    return s;
  }

  [[nodiscard]] bool is_sphere() const {
    if (sphere) return *sphere;
    return simply_connected.value_or(false) && pi2_rank == Int{0} && d <= 2;
  }
};

struct JoinSpec {
  Int l0 = 1;
  Int l_inf = 1;
  Int w0 = 1;
  Int w_inf = 1;
  bool perp_applied = false;

  [[nodiscard]] IntPair l() const { return {l0, l_inf}; }
  [[nodiscard]] IntPair w() const { return {w0, w_inf}; }
  [[nodiscard]] Int w_sum() const { return add(w0, w_inf); }
  friend bool operator==(const JoinSpec&, const JoinSpec&) = default;
};

struct ReebLattice {
  Int v0 = 1;
  Int v_inf = 1;
  friend bool operator==(const ReebLattice&, const ReebLattice&) = default;
  [[nodiscard]] IntPair pair() const { return {v0, v_inf}; }
};

struct QuotientData {
  Int s = 1;
  Int m = 1;
  Int n = 0;
  Int m0 = 1;
  Int m_inf = 1;
  Int order = 1;
  bool reducible = false;
};

struct ClassCoefficients {
  Int k1 = 1;
  Int k2 = 1;
  Int denom = 1;
  BigRational admissible_scale_num;
  bool admissible_scale_has_4pi = true;
  // Coefficient m*g of d(eta_v) in the transverse Kaehler form.
  Int transverse_factor = 1;
  // gcd(k1, k2) left after dividing by g; always 1 in practice.
  Int normalization_factor = 1;
};

struct AdmissibleParams {
  BigRational r;
  Int n = 0;
  Int m0 = 1;
  Int m_inf = 1;
  int d = 1;
  BigRational A;
};

struct RegularReebReport {
  bool exists = false;
  std::string certificate;
};

struct PerpResult {
  JoinSpec join;
  std::optional<ReebLattice> v;
  std::string note;
};

}  // namespace sjk::join
