#pragma once
/**
 * Pointwise Lorentzian forms from a Riemannian form and a line field.
 *
 * Given a positive-definite g_R and a nonzero vector V,
 *
 *   g(X, Y) = g_R(X, Y) - 2 g_R(X, V) g_R(Y, V) / g_R(V, V)
 *
 * is the reflection of g_R across the g_R-orthogonal complement of V: it
 * agrees with g_R there and flips the sign along V, so g has signature
 * (1, d-1) and V is timelike. The converse direction diagonalizes g
 * against g_R and returns the eigenline with negative eigenvalue.
 */

#include "cobord/error.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

namespace cobord {

namespace tolerance {
inline constexpr double symmetry = 1e-10;   ///< max |g_ij - g_ji|
inline constexpr double eigenvalue = 1e-9;  ///< relative to the spectral radius
inline constexpr double round_trip = 1e-9;
inline constexpr double vector_norm = 1e-12;
inline constexpr int max_dim = 64;
} // namespace tolerance

class SymmetricForm {
public:
  explicit SymmetricForm(Eigen::MatrixXd m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0)
      throw Error(Errc::malformed_input, "a symmetric form needs a nonempty square matrix");
    if (m_.rows() > tolerance::max_dim)
      throw Error(Errc::unsupported_dimension,
                  "form dimension " + std::to_string(m_.rows()) + " exceeds " +
                      std::to_string(tolerance::max_dim));
    if (!m_.allFinite()) throw Error(Errc::malformed_input, "form has non-finite entries");
    const double asym = (m_ - m_.transpose()).cwiseAbs().maxCoeff();
    if (asym > tolerance::symmetry)
      throw Error(Errc::malformed_input,
                  "form is not symmetric (max asymmetry " + std::to_string(asym) + ")");
    m_ = 0.5 * (m_ + m_.transpose());
  }

  [[nodiscard]] int dim() const noexcept { return static_cast<int>(m_.rows()); }
  [[nodiscard]] const Eigen::MatrixXd& matrix() const noexcept { return m_; }
  [[nodiscard]] double operator()(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
    return x.dot(m_ * y);
  }

private:
  Eigen::MatrixXd m_;
};

class LineField {
public:
  explicit LineField(Eigen::VectorXd v) : v_(std::move(v)) {
    if (v_.size() == 0 || !v_.allFinite() || v_.norm() <= tolerance::vector_norm)
      throw Error(Errc::zero_vector, "line field needs a nonzero finite vector");
  }
  [[nodiscard]] const Eigen::VectorXd& vector() const noexcept { return v_; }
  [[nodiscard]] int dim() const noexcept { return static_cast<int>(v_.size()); }

private:
  Eigen::VectorXd v_;
};

struct Inertia {
  int negative = 0;
  int zero = 0;
  int positive = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Eigenvalues in ascending order.
inline Eigen::VectorXd eigenvalues(const SymmetricForm& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.matrix(), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

inline Inertia inertia_of(const Eigen::VectorXd& lambda) {
  const double scale = lambda.cwiseAbs().maxCoeff();
  const double cut = tolerance::eigenvalue * std::max(scale, 1e-300);
  Inertia in;
  for (double x : lambda) {
    if (x < -cut) ++in.negative;
    else if (x > cut) ++in.positive;
    else ++in.zero;
  }
  return in;
}

/// Sylvester inertia (counts of negative, zero, positive eigenvalues).
inline Inertia inertia(const SymmetricForm& g) { return inertia_of(eigenvalues(g)); }

inline void require_positive_definite(const SymmetricForm& g_r) {
  const Inertia in = inertia(g_r);
  if (in.positive != g_r.dim())
    throw Error(Errc::not_positive_definite,
                "Riemannian form is not positive definite (" + std::to_string(in.negative) +
                    " negative, " + std::to_string(in.zero) + " zero eigenvalues)");
}

inline SymmetricForm lorentz_from_riemannian(const SymmetricForm& g_r, const LineField& v) {
  if (v.dim() != g_r.dim())
    throw Error(Errc::dimension_mismatch, "line field and form dimensions differ");
  require_positive_definite(g_r);
  const Eigen::VectorXd gv = g_r.matrix() * v.vector();
  const double vv = v.vector().dot(gv);
  Eigen::MatrixXd g = g_r.matrix() - (2.0 / vv) * gv * gv.transpose();
  return SymmetricForm(0.5 * (g + g.transpose()));
}

/// Whether the restriction of g to span(basis) is positive definite.
/// The basis must consist of d-1 linearly independent vectors.
inline bool pullback_is_riemannian(const SymmetricForm& g, std::span<const Eigen::VectorXd> basis) {
  const int d = g.dim();
  if (static_cast<int>(basis.size()) != d - 1)
    throw Error(Errc::degenerate_basis, "expected " + std::to_string(d - 1) + " basis vectors, got " +
                                            std::to_string(basis.size()));
  if (d == 1) return true; // the zero subspace
  Eigen::MatrixXd b(d, d - 1);
  for (int j = 0; j < d - 1; ++j) {
    if (basis[static_cast<std::size_t>(j)].size() != d)
      throw Error(Errc::dimension_mismatch, "basis vector has the wrong dimension");
    b.col(j) = basis[static_cast<std::size_t>(j)];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(b);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(s.size() - 1) <= tolerance::eigenvalue * std::max(s(0), 1e-300))
    throw Error(Errc::degenerate_basis, "basis vectors are linearly dependent");
  const Eigen::MatrixXd gram = b.transpose() * g.matrix() * b;
  const Inertia in = inertia(SymmetricForm(0.5 * (gram + gram.transpose())));
  return in.positive == d - 1;
}

/// g_R-orthonormal-free basis of the g_R-orthogonal complement of v.
inline std::vector<Eigen::VectorXd> orthogonal_complement(const SymmetricForm& g_r, const LineField& v) {
  const Eigen::RowVectorXd w = (g_r.matrix() * v.vector()).transpose();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(w);
  const Eigen::MatrixXd k = lu.kernel();
  std::vector<Eigen::VectorXd> out;
  for (int j = 0; j < k.cols(); ++j) out.emplace_back(k.col(j));
  return out;
}

/// Generalized eigenvalues of g x = lambda g_r x via Cholesky whitening.
struct GeneralizedEigen {
  Eigen::VectorXd values;  ///< ascending
  Eigen::MatrixXd vectors; ///< columns, g_r-orthonormal
};

inline GeneralizedEigen generalized_eigen(const SymmetricForm& g, const SymmetricForm& g_r) {
  if (g.dim() != g_r.dim()) throw Error(Errc::dimension_mismatch, "form dimensions differ");
  require_positive_definite(g_r);
  Eigen::LLT<Eigen::MatrixXd> llt(g_r.matrix());
  if (llt.info() != Eigen::Success)
    throw Error(Errc::not_positive_definite, "Cholesky factorization of the Riemannian form failed");
  const Eigen::MatrixXd l = llt.matrixL();
  // A = L^{-1} g L^{-T}
  const Eigen::MatrixXd linv_g = llt.matrixL().solve(g.matrix());
  Eigen::MatrixXd a = llt.matrixL().solve(linv_g.transpose());
  a = 0.5 * (a + a.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  GeneralizedEigen out;
  out.values = es.eigenvalues();
  out.vectors = l.transpose().triangularView<Eigen::Upper>().solve(es.eigenvectors());
  return out;
}

/// Timelike eigenline of g relative to g_r, normalized to g_r-unit length
/// with its largest-magnitude component positive.
inline LineField extract_timelike_line(const SymmetricForm& g, const SymmetricForm& g_r) {
  const auto ge = generalized_eigen(g, g_r);
  const Inertia in = inertia_of(ge.values);
  if (in.negative != 1 || in.zero != 0)
    throw Error(Errc::wrong_signature,
                "expected exactly one negative and no zero generalized eigenvalue, got " +
                    std::to_string(in.negative) + " negative, " + std::to_string(in.zero) + " zero");
  Eigen::VectorXd x = ge.vectors.col(0);
  x /= std::sqrt(x.dot(g_r.matrix() * x));
  Eigen::Index arg = 0;
  x.cwiseAbs().maxCoeff(&arg);
  if (x(arg) < 0) x = -x;
  return LineField(std::move(x));
}

} // namespace cobord
