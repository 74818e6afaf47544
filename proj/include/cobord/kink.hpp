#pragma once
// Gravitational kink numbers through the Euler-characteristic formulas:
//   dim M even: Kink = chi(M)
//   dim M odd:  Kink = (chi(N2) - chi(N1)) / 2
// valid when every boundary component is stably parallelizable.

#include "cobord/error.hpp"
#include "cobord/manifold.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace cobord {

enum class KinkFormula { even_dim_chi, odd_dim_half_difference };

inline std::string_view kink_formula_name(KinkFormula f) {
  return f == KinkFormula::even_dim_chi ? "even_dim_chi" : "odd_dim_half_difference";
}

struct KinkReport {
  std::int64_t kink = 0;
  KinkFormula formula_used = KinkFormula::even_dim_chi;
  /// Spin parity against the boundary semi-characteristic; set for spin
  /// cobordisms of even dimension not divisible by 8.
  std::optional<bool> parity_ok;
};

/// Sum of the Z/2 semi-characteristics of all boundary components, mod 2.
inline int boundary_semi_characteristic(const CobordismDescriptor& cob) {
  int s = 0;
  for (const auto& b : cob.boundary()) s += semi_characteristic(b, Field::Z2);
  return s % 2;
}

/// True iff semi-char_{Z/2}(boundary) = claimed_kink (mod 2).
inline bool spin_parity_check(const CobordismDescriptor& cob, std::int64_t claimed_kink) {
  if (!cob.spin) throw Error(Errc::not_spin, "parity check applies to spin cobordisms only");
  if (cob.dim % 2 != 0)
    throw Error(Errc::even_boundary_dimension,
                "parity check needs odd-dimensional boundary (even-dimensional cobordism)");
  const auto claimed = ((claimed_kink % 2) + 2) % 2;
  return boundary_semi_characteristic(cob) == claimed;
}

inline KinkReport kink_of(const CobordismDescriptor& cob) {
  cob.validate();
  for (const auto& b : cob.boundary())
    if (b.stably_parallelizable != true)
      throw Error(Errc::not_stably_parallelizable_boundary,
                  "boundary component " + b.name +
                      (b.stably_parallelizable ? " is not stably parallelizable"
                                               : " is not known to be stably parallelizable"));
  KinkReport r;
  if (cob.dim % 2 == 0) {
    r.kink = cob.euler;
    r.formula_used = KinkFormula::even_dim_chi;
    // The parity identity comes from the spin relation chi(M) + semi-char = 0
    // (mod 2), which needs dim M != 0 mod 8: HP2 minus a ball is spin with
    // chi = 2 and boundary S7 of semi-characteristic 1.
    if (cob.spin && cob.dim % 8 != 0) r.parity_ok = spin_parity_check(cob, r.kink);
    return r;
  }
  std::int64_t chi_in = 0, chi_out = 0;
  for (const auto& b : cob.incoming) chi_in += b.euler();
  for (const auto& b : cob.outgoing) chi_out += b.euler();
  const std::int64_t diff = chi_out - chi_in;
  if (diff % 2 != 0)
    throw Error(Errc::odd_difference,
                "chi(N2) - chi(N1) = " + std::to_string(diff) + " is odd");
  r.kink = diff / 2;
  r.formula_used = KinkFormula::odd_dim_half_difference;
  return r;
}

} // namespace cobord
