#pragma once
/**
 * Closed manifolds as invariant records, and compact cobordisms between them.
 *
 * A ManifoldDescriptor carries Betti numbers over Q and Z/2 together with
 * orientability, spin, stable parallelizability and signature. Connected
 * sum, cartesian product and disjoint union act on these records through
 * the usual formulas (additivity, Kunneth over a field, Novikov
 * additivity), so every catalog expression can be evaluated without
 * building a cell structure.
 */

#include "cobord/error.hpp"
#include "cobord/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cobord {

struct ManifoldDescriptor {
  std::string name;
  int dim = 0;
  std::vector<std::int64_t> betti_q;
  std::vector<std::int64_t> betti_z2;
  bool orientable = true;
  bool spin = false;
  /// Tri-state: nullopt means unknown.
  std::optional<bool> stably_parallelizable;
  /// Only meaningful for orientable manifolds with dim = 0 mod 4; nullopt
  /// otherwise, or when the value is not determined.
  std::optional<std::int64_t> signature;
  bool connected = true;
  std::int64_t components = 1;
  /// False once a user-registered descriptor takes part in the expression.
  bool builtin = true;

  [[nodiscard]] std::int64_t euler() const {
    std::int64_t chi = 0;
    for (std::size_t k = 0; k < betti_q.size(); ++k)
      chi += (k % 2 == 0 ? 1 : -1) * betti_q[k];
    return chi;
  }

  [[nodiscard]] std::int64_t euler_z2() const {
    std::int64_t chi = 0;
    for (std::size_t k = 0; k < betti_z2.size(); ++k)
      chi += (k % 2 == 0 ? 1 : -1) * betti_z2[k];
    return chi;
  }

  /// Equality of the invariant record; the display name is ignored.
  [[nodiscard]] bool same_invariants(const ManifoldDescriptor& o) const {
    return dim == o.dim && betti_q == o.betti_q && betti_z2 == o.betti_z2 &&
           orientable == o.orientable && spin == o.spin &&
           stably_parallelizable == o.stably_parallelizable && signature == o.signature &&
           connected == o.connected && components == o.components;
  }

  /// Throws MalformedInput when the record violates a structural invariant.
  void validate() const {
    auto fail = [&](const std::string& why) {
      throw Error(Errc::malformed_input, "descriptor '" + name + "': " + why);
    };
    if (dim < 0) fail("negative dimension");
    const auto len = static_cast<std::size_t>(dim + 1);
    if (betti_q.size() != len || betti_z2.size() != len)
      fail("Betti lists must have length dim+1 = " + std::to_string(len));
    for (std::size_t k = 0; k < len; ++k) {
      if (betti_q[k] < 0 || betti_z2[k] < 0) fail("negative Betti number");
      if (betti_z2[k] < betti_q[k]) fail("betti_z2 < betti_q in degree " + std::to_string(k));
    }
    if (components < 1) fail("a closed manifold has at least one component");
    if (connected != (components == 1)) fail("connected flag disagrees with component count");
    if (betti_q[0] != components || betti_z2[0] != components)
      fail("degree-0 Betti numbers must equal the component count");
    if (betti_z2[len - 1] != components) fail("top Z/2 Betti number must equal the component count");
    if (orientable && betti_q[len - 1] != components)
      fail("top rational Betti number of an orientable closed manifold must equal the component count");
    if (connected && !orientable && dim > 0 && betti_q[len - 1] != 0)
      fail("top rational Betti number of a non-orientable connected manifold must be 0");
    if (spin && !orientable) fail("spin implies orientable");
    if (signature && (dim % 4 != 0 || !orientable))
      fail("signature is only defined for orientable manifolds of dimension 0 mod 4");
    if (euler() != euler_z2()) fail("Euler characteristic differs between Q and Z/2");
  }
};

// ---------------------------------------------------------------------------
// Catalog

namespace detail {

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline ManifoldDescriptor cells_in_steps(std::string name, int step, int k) {
  ManifoldDescriptor m;
  m.name = std::move(name);
  m.dim = step * k;
  m.betti_q.assign(static_cast<std::size_t>(m.dim + 1), 0);
  for (int i = 0; i <= k; ++i) m.betti_q[static_cast<std::size_t>(step * i)] = 1;
  m.betti_z2 = m.betti_q;
  return m;
}

inline std::optional<bool> both_true_else_unknown(std::optional<bool> a, std::optional<bool> b) {
  if (a == true && b == true) return true;
  return std::nullopt;
}

inline std::optional<bool> and_tristate(std::optional<bool> a, std::optional<bool> b) {
  if (a == false || b == false) return false;
  if (a == true && b == true) return true;
  return std::nullopt;
}

inline bool has_top_level_sum(std::string_view name) {
  int depth = 0;
  for (char c : name) {
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (c == '#' && depth == 0) return true;
  }
  return false;
}

inline std::string wrap_sum(const std::string& name) {
  return has_top_level_sum(name) ? "(" + name + ")" : name;
}

} // namespace detail

inline ManifoldDescriptor point() {
  ManifoldDescriptor m;
  m.name = "point";
  m.dim = 0;
  m.betti_q = {1};
  m.betti_z2 = {1};
  m.spin = true;
  m.stably_parallelizable = true;
  m.signature = 1;
  return m;
}

inline ManifoldDescriptor sphere(int n) {
  if (n < 0) throw Error(Errc::negative_parameter, "S parameter must be >= 0");
  ManifoldDescriptor m;
  m.name = "S" + std::to_string(n);
  m.dim = n;
  m.betti_q.assign(static_cast<std::size_t>(n + 1), 0);
  m.spin = true;
  m.stably_parallelizable = true;
  if (n == 0) {
    // Two points, bounding an interval.
    m.betti_q = {2};
    m.components = 2;
    m.connected = false;
    m.signature = 0;
  } else {
    m.betti_q.front() = 1;
    m.betti_q.back() = 1;
    if (n % 4 == 0) m.signature = 0;
  }
  m.betti_z2 = m.betti_q;
  return m;
}

inline ManifoldDescriptor torus(int n) {
  if (n < 0) throw Error(Errc::negative_parameter, "T parameter must be >= 0");
  if (n == 0) return point();
  ManifoldDescriptor m;
  m.name = "T" + std::to_string(n);
  m.dim = n;
  for (int k = 0; k <= n; ++k) m.betti_q.push_back(detail::binomial(n, k));
  m.betti_z2 = m.betti_q;
  m.spin = true;
  m.stably_parallelizable = true;
  if (n % 4 == 0) m.signature = 0;
  return m;
}

inline ManifoldDescriptor complex_projective(int k) {
  if (k < 0) throw Error(Errc::negative_parameter, "CP parameter must be >= 0");
  if (k == 0) return point();
  auto m = detail::cells_in_steps("CP" + std::to_string(k), 2, k);
  m.spin = (k % 2 == 1);
  // CP1 is the 2-sphere; higher CP^k have p1 != 0.
  m.stably_parallelizable = (k == 1);
  if (m.dim % 4 == 0) m.signature = 1;
  return m;
}

inline ManifoldDescriptor quaternionic_projective(int k) {
  if (k < 0) throw Error(Errc::negative_parameter, "HP parameter must be >= 0");
  if (k == 0) return point();
  auto m = detail::cells_in_steps("HP" + std::to_string(k), 4, k);
  m.spin = true;
  // HP1 is the 4-sphere; higher HP^k have p1 != 0.
  m.stably_parallelizable = (k == 1);
  // H^{2k} is nonzero only for k even, where u^{k/2} squares to the generator.
  m.signature = (k % 2 == 0) ? 1 : 0;
  return m;
}

inline ManifoldDescriptor real_projective(int k) {
  if (k < 0) throw Error(Errc::negative_parameter, "RP parameter must be >= 0");
  if (k == 0) return point();
  ManifoldDescriptor m;
  m.name = "RP" + std::to_string(k);
  m.dim = k;
  m.betti_q.assign(static_cast<std::size_t>(k + 1), 0);
  m.betti_q.front() = 1;
  m.orientable = (k % 2 == 1);
  if (m.orientable) m.betti_q.back() = 1;
  m.betti_z2.assign(static_cast<std::size_t>(k + 1), 1);
  // w2(RP^k) = C(k+1, 2) a^2 vanishes iff k = 3 mod 4 (or k = 1, where a^2 = 0).
  m.spin = (k % 4 == 3) || k == 1;
  // Stably trivial tangent bundle iff 2^phi(k) divides k + 1 (Adams), which
  // happens exactly for the parallelizable RP1, RP3, RP7.
  m.stably_parallelizable = (k == 1 || k == 3 || k == 7);
  return m;
}

inline ManifoldDescriptor k3_surface() {
  ManifoldDescriptor m;
  m.name = "K3";
  m.dim = 4;
  m.betti_q = {1, 0, 22, 0, 1};
  m.betti_z2 = m.betti_q;
  m.spin = true;
  m.stably_parallelizable = false;
  m.signature = -16;
  return m;
}

/// Names understood by `catalog`; S, T, CP, HP and RP take an integer.
inline bool catalog_takes_parameter(std::string_view name) {
  return name == "S" || name == "T" || name == "CP" || name == "HP" || name == "RP";
}

inline bool is_catalog_name(std::string_view name) {
  return catalog_takes_parameter(name) || name == "K3" || name == "point";
}

inline ManifoldDescriptor catalog(std::string_view name, std::optional<int> parameter = std::nullopt) {
  if (!is_catalog_name(name))
    throw Error(Errc::unknown_name, "unknown catalog manifold '" + std::string(name) + "'");
  if (catalog_takes_parameter(name) && !parameter)
    throw Error(Errc::invalid_argument, "'" + std::string(name) + "' needs an integer parameter");
  if (!catalog_takes_parameter(name) && parameter)
    throw Error(Errc::invalid_argument, "'" + std::string(name) + "' takes no parameter");
  if (name == "S") return sphere(*parameter);
  if (name == "T") return torus(*parameter);
  if (name == "CP") return complex_projective(*parameter);
  if (name == "HP") return quaternionic_projective(*parameter);
  if (name == "RP") return real_projective(*parameter);
  if (name == "K3") return k3_surface();
  return point();
}

// ---------------------------------------------------------------------------
// Operations on closed manifolds

inline void require_summable(const ManifoldDescriptor& m) {
  if (!m.connected)
    throw Error(Errc::disconnected_operand, "connected sum needs connected operands: " + m.name);
  if (!m.orientable)
    throw Error(Errc::non_orientable_operand, "connected sum needs orientable operands: " + m.name);
}

/// Connected sum of closed connected orientable manifolds of equal dimension >= 1.
inline ManifoldDescriptor connected_sum(const ManifoldDescriptor& a, const ManifoldDescriptor& b) {
  if (a.dim != b.dim)
    throw Error(Errc::dimension_mismatch, "connected sum of " + a.name + " (dim " +
                                              std::to_string(a.dim) + ") and " + b.name +
                                              " (dim " + std::to_string(b.dim) + ")");
  if (a.dim < 1) throw Error(Errc::dimension_mismatch, "connected sum needs dimension >= 1");
  require_summable(a);
  require_summable(b);
  const int n = a.dim;
  ManifoldDescriptor m;
  m.name = a.name + " # " + detail::wrap_sum(b.name);
  m.dim = n;
  m.betti_q.assign(static_cast<std::size_t>(n + 1), 0);
  m.betti_z2.assign(static_cast<std::size_t>(n + 1), 0);
  for (int k = 1; k < n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    m.betti_q[i] = a.betti_q[i] + b.betti_q[i];
    m.betti_z2[i] = a.betti_z2[i] + b.betti_z2[i];
  }
  m.betti_q.front() = m.betti_q.back() = 1;
  m.betti_z2.front() = m.betti_z2.back() = 1;
  m.orientable = true;
  m.spin = a.spin && b.spin;
  m.stably_parallelizable = detail::both_true_else_unknown(a.stably_parallelizable,
                                                           b.stably_parallelizable);
  if (n % 4 == 0 && a.signature && b.signature) m.signature = *a.signature + *b.signature;
  m.builtin = a.builtin && b.builtin;
  return m;
}

/// Cartesian product; Betti numbers by Kunneth convolution over each field.
inline ManifoldDescriptor product(const ManifoldDescriptor& a, const ManifoldDescriptor& b) {
  ManifoldDescriptor m;
  m.name = detail::wrap_sum(a.name) + " x " + detail::wrap_sum(b.name);
  m.dim = a.dim + b.dim;
  m.betti_q.assign(static_cast<std::size_t>(m.dim + 1), 0);
  m.betti_z2.assign(static_cast<std::size_t>(m.dim + 1), 0);
  for (std::size_t i = 0; i < a.betti_q.size(); ++i)
    for (std::size_t j = 0; j < b.betti_q.size(); ++j) {
      m.betti_q[i + j] += a.betti_q[i] * b.betti_q[j];
      m.betti_z2[i + j] += a.betti_z2[i] * b.betti_z2[j];
    }
  m.orientable = a.orientable && b.orientable;
  m.spin = a.spin && b.spin;
  m.stably_parallelizable = detail::and_tristate(a.stably_parallelizable, b.stably_parallelizable);
  m.components = a.components * b.components;
  m.connected = (m.components == 1);
  if (m.orientable && m.dim % 4 == 0) {
    if (a.dim % 4 == 0 && b.dim % 4 == 0) {
      if (a.signature && b.signature) m.signature = *a.signature * *b.signature;
    } else {
      // Factors of dimension != 0 mod 4 have signature 0 and the signature
      // is multiplicative for closed oriented manifolds.
      m.signature = 0;
    }
  }
  m.builtin = a.builtin && b.builtin;
  return m;
}

inline ManifoldDescriptor disjoint_union(const ManifoldDescriptor& a, const ManifoldDescriptor& b) {
  if (a.dim != b.dim)
    throw Error(Errc::dimension_mismatch, "disjoint union of " + a.name + " and " + b.name);
  ManifoldDescriptor m;
  m.name = detail::wrap_sum(a.name) + " + " + detail::wrap_sum(b.name);
  m.dim = a.dim;
  m.betti_q.resize(a.betti_q.size());
  m.betti_z2.resize(a.betti_z2.size());
  for (std::size_t k = 0; k < a.betti_q.size(); ++k) {
    m.betti_q[k] = a.betti_q[k] + b.betti_q[k];
    m.betti_z2[k] = a.betti_z2[k] + b.betti_z2[k];
  }
  m.orientable = a.orientable && b.orientable;
  m.spin = a.spin && b.spin;
  m.stably_parallelizable = detail::and_tristate(a.stably_parallelizable, b.stably_parallelizable);
  m.components = a.components + b.components;
  m.connected = false;
  if (a.signature && b.signature) m.signature = *a.signature + *b.signature;
  m.builtin = a.builtin && b.builtin;
  return m;
}

inline std::int64_t euler_characteristic(const ManifoldDescriptor& m) { return m.euler(); }

/// Kervaire semi-characteristic: sum of Betti numbers in degrees
/// 0..(dim-1)/2, reduced mod 2. Defined for odd-dimensional closed manifolds.
inline int semi_characteristic(const ManifoldDescriptor& m, Field field) {
  if (m.dim % 2 == 0)
    throw Error(Errc::even_dimension, "semi-characteristic needs odd dimension, " + m.name +
                                          " has dimension " + std::to_string(m.dim));
  const auto& betti = (field == Field::Q) ? m.betti_q : m.betti_z2;
  const auto top = static_cast<std::ptrdiff_t>((m.dim - 1) / 2 + 1);
  const std::int64_t sum = std::accumulate(betti.begin(), betti.begin() + top, std::int64_t{0});
  return static_cast<int>(sum % 2);
}

// ---------------------------------------------------------------------------
// Cobordisms

/// Compact (dim)-manifold with boundary incoming (N1) and outgoing (N2).
/// The order matters for the odd-dimensional kink formula chi(N2) - chi(N1).
struct CobordismDescriptor {
  int dim = 1;
  std::int64_t euler = 0;
  std::vector<ManifoldDescriptor> incoming;
  std::vector<ManifoldDescriptor> outgoing;
  bool spin = false;
  std::optional<bool> stably_parallelizable;

  [[nodiscard]] std::vector<ManifoldDescriptor> boundary() const {
    std::vector<ManifoldDescriptor> all = incoming;
    all.insert(all.end(), outgoing.begin(), outgoing.end());
    return all;
  }

  void validate() const {
    if (dim < 1) throw Error(Errc::malformed_input, "cobordism dimension must be >= 1");
    for (const auto& b : boundary()) {
      b.validate();
      if (b.dim != dim - 1)
        throw Error(Errc::dimension_mismatch, "boundary component " + b.name + " has dimension " +
                                                  std::to_string(b.dim) + ", expected " +
                                                  std::to_string(dim - 1));
      if (spin && !b.spin)
        throw Error(Errc::not_spin, "spin cobordism with non-spin boundary component " + b.name);
    }
  }
};

/// N x [0, 1].
inline CobordismDescriptor cylinder(const ManifoldDescriptor& n) {
  CobordismDescriptor c;
  c.dim = n.dim + 1;
  c.euler = n.euler();
  c.incoming = {n};
  c.outgoing = {n};
  c.spin = n.spin;
  c.stably_parallelizable = n.stably_parallelizable;
  return c;
}

/// X minus an open ball, with boundary the sphere S^{dim-1} (outgoing).
inline CobordismDescriptor punctured(const ManifoldDescriptor& x) {
  if (!x.connected) throw Error(Errc::disconnected_operand, "puncture needs a connected manifold");
  if (x.dim < 1) throw Error(Errc::dimension_mismatch, "cannot puncture a point");
  CobordismDescriptor c;
  c.dim = x.dim;
  c.euler = x.euler() - (x.dim % 2 == 0 ? 1 : -1);
  c.outgoing = {sphere(x.dim - 1)};
  c.spin = x.spin;
  c.stably_parallelizable = detail::both_true_else_unknown(x.stably_parallelizable, true);
  return c;
}

inline CobordismDescriptor disk(int d) { return punctured(sphere(d)); }

/// Interior connected sum of a cobordism with a closed connected manifold.
/// Non-orientable summands are allowed here: summing with a non-orientable
/// manifold is well defined up to diffeomorphism.
inline CobordismDescriptor connected_sum(const CobordismDescriptor& c, const ManifoldDescriptor& x) {
  if (x.dim != c.dim)
    throw Error(Errc::dimension_mismatch, "summand " + x.name + " has dimension " +
                                              std::to_string(x.dim) + ", cobordism has " +
                                              std::to_string(c.dim));
  if (!x.connected) throw Error(Errc::disconnected_operand, "summand must be connected: " + x.name);
  CobordismDescriptor r = c;
  r.euler = c.euler + x.euler() - sphere(c.dim).euler();
  r.spin = c.spin && x.spin;
  r.stably_parallelizable =
      detail::both_true_else_unknown(c.stably_parallelizable, x.stably_parallelizable);
  return r;
}

} // namespace cobord
