#pragma once
/**
 * Existence decisions for Lorentzian, weak Lorentzian and Spin(1,n)_0
 * Lorentzian cobordisms, and the classifiers for the Spin(1,n)_0
 * Lorentzian cobordism groups in dimensions 3..7.
 *
 * Every decision is total: it answers Yes, No or Unknown and names the rule
 * it used. A No always carries the failing invariant with both values.
 */

#include "cobord/error.hpp"
#include "cobord/manifold.hpp"
#include "cobord/witness.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cobord {

enum class Answer { yes, no, unknown };

inline std::string_view answer_name(Answer a) {
  switch (a) {
  case Answer::yes: return "Yes";
  case Answer::no: return "No";
  case Answer::unknown: return "Unknown";
  }
  return "Unknown";
}

namespace rules {
inline constexpr std::string_view reinhart_sorkin = "Thm-ReinhartSorkin";
inline constexpr std::string_view gibbons_hawking = "Thm-GibbonsHawking";
inline constexpr std::string_view general_even = "Thm-General-n≡0 mod 2";
inline constexpr std::string_view general_odd = "Thm-General-n≡1,3,5 mod 8";
inline constexpr std::string_view general_seven = "Thm-General-n≡7 mod 8";
inline constexpr std::string_view spin_groups = "Thm-Milnor-SpinCobordism";
inline constexpr std::string_view spin_4d = "Cor-4D-SpinCobordism";
inline constexpr std::string_view weak_cobordant = "Prop-WeakIffCobordant";
inline constexpr std::string_view weak_spin = "Cor-WeakSpin";
} // namespace rules

struct Obstruction {
  std::string invariant; ///< "χ", "χ̂", "σ", ...
  std::int64_t left = 0;
  std::int64_t right = 0;
  std::string detail;
};

/// Witness attached to a Yes verdict for an odd boundary dimension. The base
/// cobordism is usually not known, so the template records the menu and the
/// residue class chi(base) must lie in; `instance` is filled when the base
/// is known (e.g. the cylinder N x I when N1 and N2 coincide).
struct WitnessTemplate {
  int boundary_dim = 0;
  SummandMenu menu;
  bool spin = false;
  std::int64_t parity_modulus = 1; ///< 2 when chi(base) must be even
  std::int64_t parity_residue = 0;
  std::string base_description;
  std::optional<WitnessRecipe> instance;

  [[nodiscard]] bool admits(std::int64_t chi_base) const {
    return ((chi_base % parity_modulus) + parity_modulus) % parity_modulus == parity_residue;
  }
  [[nodiscard]] WitnessRecipe instantiate(std::int64_t chi_base) const {
    return solve_counts(chi_base, menu, 0);
  }
};

struct Verdict {
  Answer answer = Answer::unknown;
  std::string rule;
  std::optional<Obstruction> obstruction;
  /// Invariant equalities verified on the way to the answer.
  std::vector<std::string> checks;
  std::string reason;
  std::optional<WitnessTemplate> witness;
};

struct GroupClassification {
  int n = 0;
  std::string group; ///< "ℤ/2", "ℤ⊕ℤ", "ℤ" or "0"
  std::vector<std::int64_t> invariant_tuple;
  std::vector<std::string> invariant_names;
};

namespace detail {

inline std::string eq_check(std::string_view inv, std::int64_t a, std::int64_t b) {
  return std::string(inv) + "(N1) = " + std::to_string(a) + " = " + std::string(inv) +
         "(N2) = " + std::to_string(b);
}

inline Verdict no(std::string_view rule, std::string invariant, std::int64_t a, std::int64_t b,
                  std::string detail) {
  Verdict v;
  v.answer = Answer::no;
  v.rule = rule;
  v.obstruction = Obstruction{std::move(invariant), a, b, std::move(detail)};
  return v;
}

inline void require_same_dim(const ManifoldDescriptor& a, const ManifoldDescriptor& b) {
  if (a.dim != b.dim)
    throw Error(Errc::dimension_mismatch, a.name + " has dimension " + std::to_string(a.dim) +
                                              " but " + b.name + " has dimension " +
                                              std::to_string(b.dim));
}

inline void require_spin(const ManifoldDescriptor& m) {
  if (!m.spin) throw Error(Errc::not_spin, m.name + " does not carry a spin structure");
}

struct Resolution {
  Answer answer = Answer::unknown;
  std::string rule;
  std::string reason;
  std::optional<Obstruction> obstruction;
};

/// Spin cobordance of two spin n-manifolds where it is determined.
inline Resolution spin_cobordant(const ManifoldDescriptor& a, const ManifoldDescriptor& b) {
  const int n = a.dim;
  if (n == 3 || n == 5 || n == 6 || n == 7)
    return {Answer::yes, std::string(rules::spin_groups),
            "the spin cobordism group vanishes in dimension " + std::to_string(n), std::nullopt};
  if (n == 4) {
    if (!a.signature || !b.signature)
      return {Answer::unknown, std::string(rules::spin_4d), "signature not determined", std::nullopt};
    if (*a.signature == *b.signature)
      return {Answer::yes, std::string(rules::spin_4d), "equal signatures", std::nullopt};
    return {Answer::no, std::string(rules::spin_4d), "signatures differ",
            Obstruction{"σ", *a.signature, *b.signature,
                        "spin 4-manifolds are spin cobordant iff their signatures agree"}};
  }
  return {Answer::unknown, "", "spin cobordism in dimension " + std::to_string(n) + " is not resolved",
          std::nullopt};
}

/// Unoriented cobordance, where decidable from the descriptor data.
inline Resolution cobordant(const ManifoldDescriptor& a, const ManifoldDescriptor& b) {
  const int n = a.dim;
  auto yes = [](std::string why) {
    return Resolution{Answer::yes, std::string(rules::weak_cobordant), std::move(why), std::nullopt};
  };
  if (n == 0) {
    if (a.components % 2 == b.components % 2) return yes("equal parity of point counts");
    return {Answer::no, std::string(rules::weak_cobordant), "point counts differ in parity",
            Obstruction{"#points mod 2", a.components % 2, b.components % 2,
                        "0-manifolds are cobordant iff their point counts agree mod 2"}};
  }
  if (n == 1 || n == 3) return yes("every closed " + std::to_string(n) + "-manifold bounds");
  if (n == 2) {
    const auto ca = ((a.euler() % 2) + 2) % 2, cb = ((b.euler() % 2) + 2) % 2;
    if (ca == cb) return yes("surfaces with equal chi mod 2 are cobordant");
    return {Answer::no, std::string(rules::weak_cobordant), "chi mod 2 differs",
            Obstruction{"χ mod 2", ca, cb, "w2[N] = chi(N) mod 2 is a cobordism invariant"}};
  }
  if (n == 4 && a.orientable && b.orientable && a.signature && b.signature) {
    // For orientable 4-manifolds the Stiefel-Whitney numbers are w4 = chi and
    // w2^2 = p1 = sigma (mod 2).
    const auto ca = ((a.euler() % 2) + 2) % 2, cb = ((b.euler() % 2) + 2) % 2;
    const auto sa = ((*a.signature % 2) + 2) % 2, sb = ((*b.signature % 2) + 2) % 2;
    if (ca == cb && sa == sb) return yes("equal Stiefel-Whitney numbers w4 and w2^2");
    if (ca != cb)
      return {Answer::no, std::string(rules::weak_cobordant), "w4 differs",
              Obstruction{"χ mod 2", ca, cb, "w4[N] = chi(N) mod 2"}};
    return {Answer::no, std::string(rules::weak_cobordant), "w2^2 differs",
            Obstruction{"σ mod 2", sa, sb, "w2^2[N] = sigma(N) mod 2 for orientable N"}};
  }
  if (a.spin && b.spin) {
    auto s = spin_cobordant(a, b);
    if (s.answer == Answer::yes) return yes("spin cobordant (" + s.reason + ")");
  }
  if (a.builtin && b.builtin && a.same_invariants(b))
    return yes("identical catalog invariant records");
  return {Answer::unknown, std::string(rules::weak_cobordant),
          "cobordance of " + a.name + " and " + b.name + " is not determined by the descriptors",
          std::nullopt};
}

inline WitnessTemplate spin_template(const ManifoldDescriptor& n1, const ManifoldDescriptor& n2) {
  WitnessTemplate w;
  w.boundary_dim = n1.dim;
  w.menu = menu_for_dimension(n1.dim);
  w.spin = true;
  w.parity_modulus = (n1.dim % 8 == 7) ? 1 : 2;
  w.parity_residue = 0;
  w.base_description = "spin cobordism from " + n1.name + " to " + n2.name;
  if (n1.builtin && n2.builtin && n1.same_invariants(n2)) {
    w.base_description = n1.name + " x I";
    w.instance = solve_counts(n1.euler(), w.menu, 0);
  }
  return w;
}

inline WitnessTemplate general_template(const ManifoldDescriptor& n1, const ManifoldDescriptor& n2) {
  WitnessTemplate w;
  w.boundary_dim = n1.dim;
  w.menu = kink_menu(n1.dim + 1);
  w.spin = false;
  w.base_description = "cobordism from " + n1.name + " to " + n2.name;
  if (n1.builtin && n2.builtin && n1.same_invariants(n2)) {
    w.base_description = n1.name + " x I";
    w.instance = solve_counts(n1.euler(), w.menu, 0);
  }
  return w;
}

} // namespace detail

/// Lorentzian cobordism (no spin requirement): for even n the Euler
/// characteristics must agree; for odd n any cobordism can be corrected to
/// chi(M) = 0 by connected sums.
inline Verdict decide_lorentzian(const ManifoldDescriptor& n1, const ManifoldDescriptor& n2) {
  detail::require_same_dim(n1, n2);
  const int n = n1.dim;
  Verdict v;
  v.rule = rules::reinhart_sorkin;
  if (n % 2 == 0) {
    if (n1.euler() != n2.euler())
      return detail::no(rules::reinhart_sorkin, "χ", n1.euler(), n2.euler(),
                        "an odd-dimensional Lorentzian cobordism needs chi(N1) = chi(N2)");
    v.checks.push_back(detail::eq_check("χ", n1.euler(), n2.euler()));
  }
  const auto c = detail::cobordant(n1, n2);
  if (c.answer == Answer::no) {
    Verdict out;
    out.answer = Answer::no;
    out.rule = c.rule;
    out.obstruction = c.obstruction;
    out.reason = "not cobordant: " + c.reason;
    return out;
  }
  if (c.answer == Answer::unknown) {
    v.answer = Answer::unknown;
    v.reason = c.reason;
    return v;
  }
  v.answer = Answer::yes;
  v.checks.push_back("cobordant: " + c.reason);
  if (n % 2 == 1 && n >= 3) {
    v.witness = detail::general_template(n1, n2);
    v.reason = "chi(M) of any cobordism can be moved to 0 by connected sums";
  } else if (n % 2 == 1) {
    v.reason = "circles: a cobordism with chi(M) = 0 is assembled from cylinders and pairs of pants";
  } else {
    v.reason = "the odd-dimensional cobordism carries a boundary-normal line field";
  }
  return v;
}

/// Spin(1,n)_0 Lorentzian cobordism between spin n-manifolds.
/// `spin_cobordism_known` supplies the spin cobordance where the library
/// cannot resolve it (n not in 3..7).
inline Verdict decide_spin_lorentzian(const ManifoldDescriptor& n1, const ManifoldDescriptor& n2,
                                      std::optional<bool> spin_cobordism_known = std::nullopt) {
  detail::require_same_dim(n1, n2);
  detail::require_spin(n1);
  detail::require_spin(n2);
  const int n = n1.dim;

  Verdict v;
  auto sc = detail::spin_cobordant(n1, n2);
  if (sc.answer == Answer::unknown && spin_cobordism_known) {
    sc.answer = *spin_cobordism_known ? Answer::yes : Answer::no;
    sc.reason = "spin cobordance supplied by the caller";
    sc.rule = rules::spin_groups;
  }
  if (sc.answer == Answer::no) {
    Verdict out;
    out.answer = Answer::no;
    out.rule = sc.rule;
    out.reason = "no spin cobordism: " + sc.reason;
    out.obstruction = sc.obstruction
                          ? sc.obstruction
                          : Obstruction{"spin cobordism", 0, 0, "caller states N1, N2 are not spin cobordant"};
    return out;
  }
  if (sc.answer == Answer::unknown) {
    v.answer = Answer::unknown;
    v.rule = rules::spin_groups;
    v.reason = sc.reason + "; pass the spin cobordance explicitly";
    return v;
  }
  v.checks.push_back("spin cobordant: " + sc.reason);

  if (n % 2 == 0) {
    v.rule = rules::general_even;
    if (n1.euler() != n2.euler())
      return detail::no(rules::general_even, "χ", n1.euler(), n2.euler(),
                        "a Lorentzian cobordism between even-dimensional boundaries needs equal chi");
    v.checks.push_back(detail::eq_check("χ", n1.euler(), n2.euler()));
    v.answer = Answer::yes;
    v.reason = "spin cobordant with equal Euler characteristics";
    return v;
  }
  if (n % 8 == 7) {
    v.rule = rules::general_seven;
    v.answer = Answer::yes;
    v.reason = "no further condition for n = 7 mod 8";
    v.witness = detail::spin_template(n1, n2);
    return v;
  }
  // n = 1, 3, 5 mod 8
  v.rule = (n == 3) ? rules::gibbons_hawking : rules::general_odd;
  const int s1 = semi_characteristic(n1, Field::Z2);
  const int s2 = semi_characteristic(n2, Field::Z2);
  if (s1 != s2)
    return detail::no(v.rule, "χ̂", s1, s2,
                      "the Z/2 semi-characteristics of the boundary must agree");
  v.checks.push_back(detail::eq_check("χ̂", s1, s2));
  v.answer = Answer::yes;
  v.reason = "equal Z/2 semi-characteristics make chi of the spin cobordism even";
  if (n >= 3) v.witness = detail::spin_template(n1, n2);
  return v;
}

/// Weak Lorentzian cobordism; with `require_spin`, a Spin(1,n)_0 one.
inline Verdict decide_weak(const ManifoldDescriptor& n1, const ManifoldDescriptor& n2,
                           bool require_spin) {
  detail::require_same_dim(n1, n2);
  Verdict v;
  if (!require_spin) {
    const auto c = detail::cobordant(n1, n2);
    v.rule = rules::weak_cobordant;
    v.answer = c.answer;
    v.reason = c.reason;
    v.obstruction = c.obstruction;
    if (c.answer == Answer::yes) v.checks.push_back("cobordant: " + c.reason);
    return v;
  }
  detail::require_spin(n1);
  detail::require_spin(n2);
  const auto sc = detail::spin_cobordant(n1, n2);
  v.rule = rules::weak_spin;
  v.answer = sc.answer;
  v.reason = sc.reason;
  v.obstruction = sc.obstruction;
  if (sc.answer == Answer::yes) v.checks.push_back("spin cobordant: " + sc.reason);
  return v;
}

/// Class of a closed spin n-manifold in the Spin(1,n)_0 Lorentzian cobordism
/// group, n in 3..7, as the raw invariant tuple.
inline GroupClassification classify(const ManifoldDescriptor& m) {
  if (m.dim < 3 || m.dim > 7)
    throw Error(Errc::unsupported_dimension,
                "group classification covers dimensions 3..7, got " + std::to_string(m.dim));
  detail::require_spin(m);
  GroupClassification g;
  g.n = m.dim;
  switch (m.dim) {
  case 3:
  case 5:
    g.group = "ℤ/2";
    g.invariant_tuple = {semi_characteristic(m, Field::Z2)};
    g.invariant_names = {"χ̂_Z2"};
    break;
  case 4:
    if (!m.signature)
      throw Error(Errc::invalid_argument, "signature of " + m.name + " is not determined");
    g.group = "ℤ⊕ℤ";
    g.invariant_tuple = {m.euler(), *m.signature};
    g.invariant_names = {"χ", "σ"};
    break;
  case 6:
    g.group = "ℤ";
    g.invariant_tuple = {m.euler()};
    g.invariant_names = {"χ"};
    break;
  default:
    g.group = "0";
    break;
  }
  return g;
}

} // namespace cobord
