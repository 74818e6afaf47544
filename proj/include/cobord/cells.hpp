#pragma once
// Explicit cellular chain complexes for the catalog pieces that have cheap
// CW structures. These are the inputs to the homology oracle.

#include "cobord/error.hpp"
#include "cobord/homology.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cobord::cells {

inline void require_nonnegative(int p, std::string_view what) {
  if (p < 0)
    throw Error(Errc::negative_parameter, std::string(what) + " parameter must be >= 0");
}

/// S^n with one 0-cell and one n-cell (two 0-cells for n = 0).
inline ChainComplex sphere(int n) {
  require_nonnegative(n, "S");
  if (n == 0) return ChainComplex::with_zero_differentials({2});
  std::vector<std::size_t> ranks(static_cast<std::size_t>(n + 1), 0);
  ranks.front() = 1;
  ranks.back() = 1;
  return ChainComplex::with_zero_differentials(std::move(ranks));
}

/// S^n with two cells in every degree (hemispheres); nonzero differentials.
inline ChainComplex sphere_hemispherical(int n) {
  require_nonnegative(n, "S");
  std::vector<std::size_t> ranks(static_cast<std::size_t>(n + 1), 2);
  std::vector<IntegerMatrix> ds;
  for (int k = 1; k <= n; ++k) {
    // d e_k^{+-} = e_{k-1}^+ - e_{k-1}^-
    IntegerMatrix d(2, 2);
    d(0, 0) = 1;
    d(0, 1) = 1;
    d(1, 0) = -1;
    d(1, 1) = -1;
    ds.push_back(std::move(d));
  }
  return ChainComplex(std::move(ranks), std::move(ds));
}

/// A point.
inline ChainComplex point() { return ChainComplex::with_zero_differentials({1}); }

/// T^n as the n-fold product of the one-vertex circle (all differentials zero).
inline ChainComplex torus(int n) {
  require_nonnegative(n, "T");
  ChainComplex c = point();
  for (int i = 0; i < n; ++i) c = tensor_product(c, sphere(1));
  return c;
}

/// T^n as the product of two-vertex, two-edge circles.
inline ChainComplex torus_subdivided(int n) {
  require_nonnegative(n, "T");
  IntegerMatrix d(2, 2);
  d(0, 0) = -1;
  d(0, 1) = 1;
  d(1, 0) = 1;
  d(1, 1) = -1;
  const ChainComplex circle({2, 2}, {d});
  ChainComplex c = point();
  for (int i = 0; i < n; ++i) c = tensor_product(c, circle);
  return c;
}

/// RP^k: one cell per degree, d_j = 1 + (-1)^j.
inline ChainComplex real_projective(int k) {
  require_nonnegative(k, "RP");
  std::vector<std::size_t> ranks(static_cast<std::size_t>(k + 1), 1);
  std::vector<IntegerMatrix> ds;
  for (int j = 1; j <= k; ++j) {
    IntegerMatrix d(1, 1);
    d(0, 0) = (j % 2 == 0) ? 2 : 0;
    ds.push_back(std::move(d));
  }
  return ChainComplex(std::move(ranks), std::move(ds));
}

/// One cell in every degree divisible by `step`, up to `step * k`.
inline ChainComplex projective_over(int step, int k) {
  std::vector<std::size_t> ranks(static_cast<std::size_t>(step * k + 1), 0);
  for (int i = 0; i <= k; ++i) ranks[static_cast<std::size_t>(step * i)] = 1;
  return ChainComplex::with_zero_differentials(std::move(ranks));
}

inline ChainComplex complex_projective(int k) {
  require_nonnegative(k, "CP");
  return projective_over(2, k);
}

inline ChainComplex quaternionic_projective(int k) {
  require_nonnegative(k, "HP");
  return projective_over(4, k);
}

/// Minimal cellular model of a catalog atom, or nullopt when none is
/// provided (K3, unknown names).
inline std::optional<ChainComplex> for_atom(std::string_view name, std::optional<int> parameter) {
  const int p = parameter.value_or(0);
  if (name == "S") return sphere(p);
  if (name == "T") return torus(p);
  if (name == "CP") return complex_projective(p);
  if (name == "HP") return quaternionic_projective(p);
  if (name == "RP") return real_projective(p);
  if (name == "point") return point();
  return std::nullopt;
}

} // namespace cobord::cells
