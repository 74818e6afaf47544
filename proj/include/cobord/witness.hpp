#pragma once
/**
 * Connected-sum recipes that move the Euler characteristic of a cobordism
 * to a target value.
 *
 * A recipe is a nonnegative integer vector k with
 *
 *   chi_base + sum_i k_i * delta_i = target,   delta_i = chi(X_i) - chi(S^dim),
 *
 * over a menu of closed summands X_i. The canonical solution minimizes the
 * total count, then the first count, then the second, and so on.
 */

#include "cobord/error.hpp"
#include "cobord/manifold.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace cobord {

struct SummandEntry {
  ManifoldDescriptor manifold;
  std::int64_t delta = 0;
};

struct SummandMenu {
  int dim = 0; ///< dimension of the cobordism (boundary dimension + 1)
  std::vector<SummandEntry> entries;
};

struct SummandCount {
  std::string summand;
  std::int64_t k = 0;
};

struct WitnessRecipe {
  int dim = 0;
  std::int64_t base_chi = 0;
  std::int64_t target = 0;
  std::vector<SummandCount> counts;
  std::int64_t resulting_euler = 0;

  [[nodiscard]] std::int64_t count_of(const std::string& summand) const {
    for (const auto& c : counts)
      if (c.summand == summand) return c.k;
    return 0;
  }
  [[nodiscard]] std::int64_t total() const {
    std::int64_t t = 0;
    for (const auto& c : counts) t += c.k;
    return t;
  }
};

/// Raised when the menu cannot reach the target. For a divisibility failure
/// `modulus` is the gcd of the deltas and `residue` = (target - base) mod it;
/// a sign failure (all deltas pointing the wrong way) has modulus 0.
class NoSolution : public Error {
public:
  NoSolution(std::int64_t modulus, std::int64_t residue, const std::string& message)
      : Error(Errc::no_solution, message), modulus_(modulus), residue_(residue) {}

  [[nodiscard]] std::int64_t modulus() const noexcept { return modulus_; }
  [[nodiscard]] std::int64_t residue() const noexcept { return residue_; }
  [[nodiscard]] bool parity_obstruction() const noexcept { return modulus_ == 2 && residue_ == 1; }

private:
  std::int64_t modulus_;
  std::int64_t residue_;
};

inline SummandEntry make_summand(ManifoldDescriptor x) {
  const std::int64_t delta = x.euler() - sphere(x.dim).euler();
  return {std::move(x), delta};
}

/// Spin summands that zero chi(M) for a spin cobordism between odd-dimensional
/// boundaries of dimension n.
///
///   n = 3          : S1 x S3, S2 x S2
///   n = 8q + 1     : HP^{2q} x S2, T^{8q+2}           (q >= 1)
///   n = 8q + 3     : HP^{2q} x S2 x S2, T^{8q+4}      (q >= 1)
///   n = 8q + 5     : HP^{2q+1} x S2, T^{8q+6}
///   n = 8q + 7     : HP^{2q+2}, T^{8q+8}
inline SummandMenu menu_for_dimension(int n) {
  if (n < 0) throw Error(Errc::unsupported_dimension, "boundary dimension must be >= 0");
  if (n % 2 == 0)
    throw Error(Errc::even_boundary_dimension,
                "boundary dimension " + std::to_string(n) +
                    " is even; chi(N1) = chi(N2) decides it and no summands are needed");
  if (n == 1)
    throw Error(Errc::unsupported_dimension,
                "boundary dimension 1 is degenerate (the circle is the only closed 1-manifold)");
  SummandMenu menu;
  menu.dim = n + 1;
  const ManifoldDescriptor s2 = sphere(2);
  if (n == 3) {
    menu.entries = {make_summand(product(sphere(1), sphere(3))), make_summand(product(s2, s2))};
    return menu;
  }
  const int q = n / 8;
  switch (n % 8) {
  case 1:
    menu.entries.push_back(make_summand(product(quaternionic_projective(2 * q), s2)));
    break;
  case 3:
    menu.entries.push_back(make_summand(product(product(quaternionic_projective(2 * q), s2), s2)));
    break;
  case 5:
    menu.entries.push_back(make_summand(product(quaternionic_projective(2 * q + 1), s2)));
    break;
  default: // 7
    menu.entries.push_back(make_summand(quaternionic_projective(2 * q + 2)));
    break;
  }
  menu.entries.push_back(make_summand(torus(n + 1)));
  return menu;
}

/// Summands for a prescribed Euler characteristic without a spin requirement:
/// CP^{dim/2}, S2 x S^{dim-2}, T^dim, and RP^dim when the orientable entries
/// have no odd delta (dim = 2 mod 4, where closed orientable manifolds have
/// even chi).
inline SummandMenu kink_menu(int dim) {
  if (dim < 4 || dim % 2 != 0)
    throw Error(Errc::unsupported_dimension,
                "prescribed-chi menu needs an even cobordism dimension >= 4, got " +
                    std::to_string(dim));
  SummandMenu menu;
  menu.dim = dim;
  menu.entries = {make_summand(complex_projective(dim / 2)),
                  make_summand(product(sphere(2), sphere(dim - 2))), make_summand(torus(dim))};
  const bool has_odd = std::any_of(menu.entries.begin(), menu.entries.end(),
                                   [](const SummandEntry& e) { return e.delta % 2 != 0; });
  if (!has_odd) menu.entries.push_back(make_summand(real_projective(dim)));
  return menu;
}

namespace detail {

// Lexicographically smallest k (ascending) with sum k = total and
// sum k_i delta_i = need, over entries [i, end).
inline bool compose(const std::vector<SummandEntry>& entries, std::size_t i, std::int64_t total,
                    std::int64_t need, std::vector<std::int64_t>& k) {
  if (i + 1 == entries.size()) {
    if (total * entries[i].delta != need) return false;
    k[i] = total;
    return true;
  }
  for (std::int64_t ki = 0; ki <= total; ++ki) {
    k[i] = ki;
    if (compose(entries, i + 1, total - ki, need - ki * entries[i].delta, k)) return true;
  }
  return false;
}

} // namespace detail

inline WitnessRecipe solve_counts(std::int64_t chi_base, const SummandMenu& menu,
                                  std::int64_t target = 0) {
  if (menu.entries.empty()) throw Error(Errc::invalid_argument, "summand menu is empty");
  const std::int64_t need = target - chi_base;

  std::int64_t g = 0, max_delta = 0;
  bool any_pos = false, any_neg = false;
  for (const auto& e : menu.entries) {
    g = std::gcd(g, e.delta);
    max_delta = std::max(max_delta, std::abs(e.delta));
    any_pos = any_pos || e.delta > 0;
    any_neg = any_neg || e.delta < 0;
  }
  if (g == 0 ? need != 0 : need % g != 0) {
    const std::int64_t residue = g == 0 ? need : ((need % g) + g) % g;
    const std::string kind = g == 2 ? "parity obstruction" : "divisibility obstruction";
    throw NoSolution(g, residue,
                     kind + ": target - chi_base = " + std::to_string(need) + " is " +
                         std::to_string(residue) + " mod " + std::to_string(g) +
                         ", but every summand changes chi by a multiple of " + std::to_string(g));
  }
  if ((need > 0 && !any_pos) || (need < 0 && !any_neg))
    throw NoSolution(0, need,
                     "sign obstruction: no summand moves chi " +
                         std::string(need > 0 ? "up" : "down"));

  WitnessRecipe r;
  r.dim = menu.dim;
  r.base_chi = chi_base;
  r.target = target;
  const std::int64_t bound = std::abs(need) + max_delta * static_cast<std::int64_t>(menu.entries.size());
  std::vector<std::int64_t> k(menu.entries.size(), 0);
  for (std::int64_t total = 0; total <= bound; ++total) {
    if (!detail::compose(menu.entries, 0, total, need, k)) continue;
    for (std::size_t i = 0; i < k.size(); ++i)
      r.counts.push_back({menu.entries[i].manifold.name, k[i]});
    r.resulting_euler = chi_base;
    for (std::size_t i = 0; i < k.size(); ++i) r.resulting_euler += k[i] * menu.entries[i].delta;
    return r;
  }
  throw NoSolution(g, 0, "no nonnegative solution within total count " + std::to_string(bound));
}

/// Rebuilds M = base # k_1 X_1 # ... through the cobordism connected sum.
inline CobordismDescriptor realize(const CobordismDescriptor& base, const SummandMenu& menu,
                                   const WitnessRecipe& recipe) {
  if (base.dim != menu.dim)
    throw Error(Errc::dimension_mismatch, "recipe menu dimension differs from the base cobordism");
  CobordismDescriptor m = base;
  for (const auto& c : recipe.counts) {
    const auto it = std::find_if(menu.entries.begin(), menu.entries.end(),
                                 [&](const SummandEntry& e) { return e.manifold.name == c.summand; });
    if (it == menu.entries.end())
      throw Error(Errc::invalid_argument, "recipe summand '" + c.summand + "' is not in the menu");
    if (c.k < 0) throw Error(Errc::invalid_argument, "negative summand count");
    for (std::int64_t i = 0; i < c.k; ++i) m = connected_sum(m, it->manifold);
  }
  return m;
}

/// Weak cobordism with chi(M_t) = t, hence kink t when the boundary is
/// stably parallelizable.
inline WitnessRecipe prescribed_kink_recipe(const CobordismDescriptor& base, std::int64_t t) {
  if (t == 0)
    throw Error(Errc::invalid_argument,
                "prescribed kink must be nonzero; kink 0 is the Lorentzian case");
  if (base.dim % 2 != 0)
    throw Error(Errc::unsupported_dimension,
                "prescribed kink needs an even-dimensional cobordism (odd-dimensional boundary)");
  return solve_counts(base.euler, kink_menu(base.dim), t);
}

/// Spin variant: only spin summands, so the reachable t are constrained by
/// the parity of chi(base) unless the boundary dimension is 7 mod 8.
inline WitnessRecipe prescribed_kink_recipe_spin(const CobordismDescriptor& base, std::int64_t t) {
  if (!base.spin) throw Error(Errc::not_spin, "spin prescribed kink needs a spin base cobordism");
  if (t == 0)
    throw Error(Errc::invalid_argument,
                "prescribed kink must be nonzero; kink 0 is the Lorentzian case");
  return solve_counts(base.euler, menu_for_dimension(base.dim - 1), t);
}

} // namespace cobord
