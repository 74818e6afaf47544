#pragma once
/**
 * Exact homology of finite chain complexes over Z, Q and Z/2.
 *
 * Ranks and torsion come from the Smith normal form of the boundary maps,
 * computed with arbitrary-precision integers. Ranks over Z/2 are computed
 * separately by elimination mod 2, so the universal-coefficient relation
 *
 *   b_k(Z/2) = b_k(Q) + #{even torsion factors in degrees k and k-1}
 *
 * is a genuine cross-check rather than an identity of the implementation.
 */

#include "cobord/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cobord {

using Integer = boost::multiprecision::cpp_int;

enum class Field { Q, Z2 };

class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  /// Row-major construction; every row must have `cols` entries.
  static IntegerMatrix from_rows(const std::vector<std::vector<Integer>>& rows,
                                 std::size_t cols) {
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw Error(Errc::malformed_input,
                    "row " + std::to_string(i) + " has " +
                        std::to_string(rows[i].size()) + " entries, expected " +
                        std::to_string(cols));
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntegerMatrix diagonal(const std::vector<Integer>& d) {
    IntegerMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Integer& x) { return x == 0; });
  }

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_)
      throw Error(Errc::dimension_mismatch, "matrix product shape mismatch");
    IntegerMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

struct SmithForm {
  std::size_t rank = 0;
  /// d_1 | d_2 | ... | d_rank, all positive.
  std::vector<Integer> invariant_factors;
};

namespace detail {

inline void swap_rows(IntegerMatrix& a, std::size_t r, std::size_t s) {
  if (r == s) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(s, j));
}

inline void swap_cols(IntegerMatrix& a, std::size_t c, std::size_t d) {
  if (c == d) return;
  for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, c), a(i, d));
}

// Smallest nonzero |entry| in the trailing submatrix starting at (t, t).
inline std::optional<std::pair<std::size_t, std::size_t>>
min_abs_pivot(const IntegerMatrix& a, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      const Integer& x = a(i, j);
      if (x == 0) continue;
      Integer ax = abs(x);
      if (!best || ax < best_abs) {
        best = {i, j};
        best_abs = std::move(ax);
        if (best_abs == 1) return best;
      }
    }
  return best;
}

} // namespace detail

/// Invariant factors of an integer matrix. Pivots are chosen by minimal
/// absolute value to limit coefficient growth.
inline SmithForm smith_normal_form(IntegerMatrix a) {
  SmithForm out;
  const std::size_t limit = std::min(a.rows(), a.cols());
  std::size_t t = 0;
  while (t < limit) {
    auto pivot = detail::min_abs_pivot(a, t);
    if (!pivot) break;
    detail::swap_rows(a, t, pivot->first);
    detail::swap_cols(a, t, pivot->second);

    bool clean = true;
    for (std::size_t i = t + 1; i < a.rows(); ++i) {
      if (a(i, t) == 0) continue;
      Integer q = a(i, t) / a(t, t);
      for (std::size_t j = t; j < a.cols(); ++j) a(i, j) -= q * a(t, j);
      if (a(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < a.cols(); ++j) {
      if (a(t, j) == 0) continue;
      Integer q = a(t, j) / a(t, t);
      for (std::size_t i = t; i < a.rows(); ++i) a(i, j) -= q * a(i, t);
      if (a(t, j) != 0) clean = false;
    }
    if (!clean) continue; // a smaller remainder now exists; re-pivot

    // Pivot must divide the rest of the submatrix; otherwise fold the
    // offending row into the pivot row and reduce again.
    bool divides = true;
    for (std::size_t i = t + 1; i < a.rows() && divides; ++i)
      for (std::size_t j = t + 1; j < a.cols(); ++j)
        if (a(i, j) % a(t, t) != 0) {
          for (std::size_t k = t; k < a.cols(); ++k) a(t, k) += a(i, k);
          divides = false;
          break;
        }
    if (!divides) continue;

    out.invariant_factors.push_back(abs(a(t, t)));
    ++t;
  }
  out.rank = out.invariant_factors.size();
  return out;
}

/// Rank of the matrix reduced mod 2 (Gaussian elimination over F_2).
inline std::size_t rank_mod2(const IntegerMatrix& m) {
  std::vector<std::vector<std::uint8_t>> a(m.rows(), std::vector<std::uint8_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      a[i][j] = (m(i, j) % 2 != 0) ? 1 : 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t r = rank;
    while (r < m.rows() && a[r][col] == 0) ++r;
    if (r == m.rows()) continue;
    std::swap(a[r], a[rank]);
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != rank && a[i][col] != 0)
        for (std::size_t j = col; j < m.cols(); ++j) a[i][j] ^= a[rank][j];
    ++rank;
  }
  return rank;
}

/// Finite chain complex C_0 <- C_1 <- ... <- C_n. `boundary(k)` for
/// 1 <= k <= n maps k-chains to (k-1)-chains and has shape
/// rank(C_{k-1}) x rank(C_k).
class ChainComplex {
public:
  /// Validates shapes and the relation d_{k-1} d_k = 0 (fail fast).
  ChainComplex(std::vector<std::size_t> chain_ranks, std::vector<IntegerMatrix> boundaries)
      : ranks_(std::move(chain_ranks)), boundaries_(std::move(boundaries)) {
    if (ranks_.empty())
      throw Error(Errc::malformed_input, "chain complex needs at least degree 0");
    if (boundaries_.size() + 1 != ranks_.size())
      throw Error(Errc::malformed_input,
                  "expected " + std::to_string(ranks_.size() - 1) + " boundary maps, got " +
                      std::to_string(boundaries_.size()));
    for (std::size_t k = 1; k < ranks_.size(); ++k) {
      const auto& d = boundaries_[k - 1];
      if (d.rows() != ranks_[k - 1] || d.cols() != ranks_[k])
        throw Error(Errc::malformed_input,
                    "boundary D_" + std::to_string(k) + " has shape " + std::to_string(d.rows()) +
                        "x" + std::to_string(d.cols()) + ", expected " +
                        std::to_string(ranks_[k - 1]) + "x" + std::to_string(ranks_[k]));
    }
    for (std::size_t k = 2; k < ranks_.size(); ++k)
      if (!(boundaries_[k - 2] * boundaries_[k - 1]).is_zero())
        throw Error(Errc::not_a_complex,
                    "D_" + std::to_string(k - 1) + " * D_" + std::to_string(k) + " != 0");
  }

  /// Complex with the given chain ranks and all differentials zero.
  static ChainComplex with_zero_differentials(std::vector<std::size_t> chain_ranks) {
    std::vector<IntegerMatrix> ds;
    for (std::size_t k = 1; k < chain_ranks.size(); ++k)
      ds.emplace_back(chain_ranks[k - 1], chain_ranks[k]);
    return ChainComplex(std::move(chain_ranks), std::move(ds));
  }

  [[nodiscard]] int dim() const noexcept { return static_cast<int>(ranks_.size()) - 1; }
  [[nodiscard]] std::size_t chain_rank(int k) const {
    return (k < 0 || k > dim()) ? 0 : ranks_[static_cast<std::size_t>(k)];
  }
  [[nodiscard]] const std::vector<std::size_t>& chain_ranks() const noexcept { return ranks_; }
  /// D_k; k in [1, dim].
  [[nodiscard]] const IntegerMatrix& boundary(int k) const {
    return boundaries_.at(static_cast<std::size_t>(k - 1));
  }
  [[nodiscard]] const std::vector<IntegerMatrix>& boundaries() const noexcept { return boundaries_; }

private:
  std::vector<std::size_t> ranks_;
  std::vector<IntegerMatrix> boundaries_;
};

struct HomologySummary {
  std::vector<std::int64_t> betti_q;
  std::vector<std::int64_t> betti_z2;
  /// torsion[k]: invariant factors > 1 of H_k(Z).
  std::vector<std::vector<Integer>> torsion;
};

inline HomologySummary homology(const ChainComplex& c) {
  const int n = c.dim();
  const auto deg = static_cast<std::size_t>(n + 1);
  // rank_q[k], rank_2[k] are ranks of D_k; D_0 and D_{n+1} are zero maps.
  std::vector<std::int64_t> rank_q(deg + 1, 0), rank_2(deg + 1, 0);
  std::vector<SmithForm> snf(deg + 1);
  for (int k = 1; k <= n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    snf[i] = smith_normal_form(c.boundary(k));
    rank_q[i] = static_cast<std::int64_t>(snf[i].rank);
    rank_2[i] = static_cast<std::int64_t>(rank_mod2(c.boundary(k)));
  }
  HomologySummary h;
  h.betti_q.resize(deg);
  h.betti_z2.resize(deg);
  h.torsion.resize(deg);
  for (std::size_t k = 0; k < deg; ++k) {
    const auto ck = static_cast<std::int64_t>(c.chain_rank(static_cast<int>(k)));
    h.betti_q[k] = ck - rank_q[k] - rank_q[k + 1];
    h.betti_z2[k] = ck - rank_2[k] - rank_2[k + 1];
    for (const auto& d : snf[k + 1].invariant_factors)
      if (d > 1) h.torsion[k].push_back(d);
  }
  return h;
}

/// Alternating sum of chain-group ranks.
inline std::int64_t euler_characteristic_of_complex(const ChainComplex& c) {
  std::int64_t chi = 0;
  for (int k = 0; k <= c.dim(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(c.chain_rank(k));
  return chi;
}

/// Cellular chain complex of a product: C(X x Y)_k = sum_{i+j=k} C_i(X) (x) C_j(Y)
/// with d(a (x) b) = da (x) b + (-1)^i a (x) db.
inline ChainComplex tensor_product(const ChainComplex& x, const ChainComplex& y) {
  const int n = x.dim() + y.dim();
  // offset[k][i]: position of the block C_i(X) (x) C_{k-i}(Y) inside C_k.
  std::vector<std::vector<std::size_t>> offset(static_cast<std::size_t>(n + 1));
  std::vector<std::size_t> ranks(static_cast<std::size_t>(n + 1), 0);
  for (int k = 0; k <= n; ++k) {
    auto& off = offset[static_cast<std::size_t>(k)];
    off.assign(static_cast<std::size_t>(x.dim() + 1), 0);
    std::size_t total = 0;
    for (int i = 0; i <= x.dim(); ++i) {
      off[static_cast<std::size_t>(i)] = total;
      total += x.chain_rank(i) * y.chain_rank(k - i);
    }
    ranks[static_cast<std::size_t>(k)] = total;
  }
  std::vector<IntegerMatrix> ds;
  for (int k = 1; k <= n; ++k) {
    IntegerMatrix d(ranks[static_cast<std::size_t>(k - 1)], ranks[static_cast<std::size_t>(k)]);
    const auto& off_src = offset[static_cast<std::size_t>(k)];
    const auto& off_dst = offset[static_cast<std::size_t>(k - 1)];
    for (int i = 0; i <= x.dim(); ++i) {
      const int j = k - i;
      if (j < 0 || j > y.dim()) continue;
      const std::size_t xi = x.chain_rank(i), yj = y.chain_rank(j);
      if (xi == 0 || yj == 0) continue;
      const std::size_t src = off_src[static_cast<std::size_t>(i)];
      // dX (x) 1 : block (i-1, j)
      if (i >= 1) {
        const auto& dx = x.boundary(i);
        const std::size_t dst = off_dst[static_cast<std::size_t>(i - 1)];
        for (std::size_t a = 0; a < xi; ++a)
          for (std::size_t ap = 0; ap < x.chain_rank(i - 1); ++ap) {
            const Integer& v = dx(ap, a);
            if (v == 0) continue;
            for (std::size_t b = 0; b < yj; ++b) d(dst + ap * yj + b, src + a * yj + b) += v;
          }
      }
      // (-1)^i 1 (x) dY : block (i, j-1)
      if (j >= 1) {
        const auto& dy = y.boundary(j);
        const std::size_t yjm = y.chain_rank(j - 1);
        const std::size_t dst = off_dst[static_cast<std::size_t>(i)];
        const int sign = (i % 2 == 0) ? 1 : -1;
        for (std::size_t a = 0; a < xi; ++a)
          for (std::size_t b = 0; b < yj; ++b)
            for (std::size_t bp = 0; bp < yjm; ++bp) {
              const Integer& v = dy(bp, b);
              if (v == 0) continue;
              d(dst + a * yjm + bp, src + a * yj + b) += sign * v;
            }
      }
    }
    ds.push_back(std::move(d));
  }
  return ChainComplex(std::move(ranks), std::move(ds));
}

/// Cellular model of A # B for complexes with exactly one 0-cell and one
/// top cell each: the 0-cells are identified and the two top cells merge
/// into one whose boundary is the sum of the two attaching boundaries.
inline ChainComplex connected_sum_complex(const ChainComplex& a, const ChainComplex& b) {
  const int n = a.dim();
  if (b.dim() != n)
    throw Error(Errc::dimension_mismatch, "connected sum of complexes of different dimension");
  if (n < 1)
    throw Error(Errc::malformed_input, "connected sum needs dimension >= 1");
  if (a.chain_rank(0) != 1 || b.chain_rank(0) != 1 || a.chain_rank(n) != 1 ||
      b.chain_rank(n) != 1)
    throw Error(Errc::malformed_input,
                "connected-sum complex needs a single 0-cell and a single top cell");
  std::vector<std::size_t> ranks(static_cast<std::size_t>(n + 1));
  ranks[0] = 1;
  ranks[static_cast<std::size_t>(n)] = 1;
  for (int k = 1; k < n; ++k)
    ranks[static_cast<std::size_t>(k)] = a.chain_rank(k) + b.chain_rank(k);
  std::vector<IntegerMatrix> ds;
  for (int k = 1; k <= n; ++k) {
    IntegerMatrix d(ranks[static_cast<std::size_t>(k - 1)], ranks[static_cast<std::size_t>(k)]);
    const auto& da = a.boundary(k);
    const auto& db = b.boundary(k);
    // Shared cells (degree 0 or n) occupy a single row/column; the others
    // are laid out as [cells of A | cells of B].
    const bool src_shared = (k == n);
    const bool dst_shared = (k - 1 == 0);
    const std::size_t a_src = a.chain_rank(k), a_dst = a.chain_rank(k - 1);
    for (std::size_t r = 0; r < da.rows(); ++r)
      for (std::size_t s = 0; s < da.cols(); ++s) d(r, s) += da(r, s);
    for (std::size_t r = 0; r < db.rows(); ++r)
      for (std::size_t s = 0; s < db.cols(); ++s)
        d(dst_shared ? r : a_dst + r, src_shared ? s : a_src + s) += db(r, s);
    ds.push_back(std::move(d));
  }
  return ChainComplex(std::move(ranks), std::move(ds));
}

} // namespace cobord
