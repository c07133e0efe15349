#pragma once

#include <optional>
#include <string>

#include "sjk/csc/csc.hpp"
#include "sjk/join/join.hpp"
#include "sjk/se/se.hpp"

namespace sjk::catalog {

using join::JoinSpec;
using join::SasakiSeed;

struct StabilityFlags {
  std::optional<bool> k_semistable;
  std::optional<bool> T_equivariant_K_stable;
};

struct TopologySummary {
  std::optional<bool> simply_connected;
  std::optional<Int> pi2_rank;
  std::optional<Int> h4_torsion_order;
  std::optional<std::string> cohomology_ring;
  std::optional<bool> spin;
  StabilityFlags stability_flags;
};

inline std::string superscript(Int n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  const std::string dec = std::to_string(n);
  std::string out;
  for (char c : dec) out += digits[c - '0'];
  return out;
}

/// "Z[x,y]/(Nx², x^{r+1}, x²y, y²)" for a join with S^{2r+1}.
inline std::string sphere_join_ring(Int torsion, Int r) {
  return "Z[x,y]/(" + std::to_string(torsion) + "x², x" + superscript(r + 1) + ", x²y, y²)";
}

inline Int h4_torsion(const JoinSpec& j) { return join::mul(join::mul(j.w0, j.w_inf), join::mul(j.l0, j.l0)); }

inline TopologySummary topology_summary(const SasakiSeed& seed, const JoinSpec& j) {
  TopologySummary t;
  const bool sc = seed.simply_connected.value_or(false);
  const bool smooth = join::is_smooth(seed, j);
  if (seed.simply_connected) t.simply_connected = sc;
  if (sc && seed.pi2_rank) t.pi2_rank = *seed.pi2_rank + 1;
  if (sc && seed.b3_zero.value_or(false) && seed.d >= 2) t.h4_torsion_order = h4_torsion(j);
  if (seed.is_sphere() && seed.d >= 2 && smooth) t.cohomology_ring = sphere_join_ring(h4_torsion(j), seed.d);
  if (seed.fano_index && smooth) t.spin = join::c1_contact(seed, j) % 2 == 0;
  if (seed.A || seed.fano_index) t.stability_flags.k_semistable = csc::csc_ray_count(seed, j) >= 1;
  if (seed.fano_index) {
    t.stability_flags.T_equivariant_K_stable =
        join::is_gorenstein(seed, j) && j.w0 > j.w_inf &&
        sturm_count_above(se::se_polynomial(seed.d, j.w()), BigRational(1)) == 1;
  }
  return t;
}

}  // namespace sjk::catalog
