// Build a Lorentzian form on R^4 from a Riemannian form and a line field,
// then recover the line field.

#include "cobord/lorentz.hpp"

#include <iostream>

int main() {
  using namespace cobord;
  Eigen::MatrixXd a(4, 4);
  a << 4, 1, 0, 0,
       1, 3, 1, 0,
       0, 1, 2, 0,
       0, 0, 0, 1;
  const SymmetricForm g_r(a);
  Eigen::VectorXd v(4);
  v << 1, 0, 2, -1;
  const LineField line(v);

  const SymmetricForm g = lorentz_from_riemannian(g_r, line);
  const Inertia in = inertia(g);
  std::cout << "signature: " << in.negative << " negative, " << in.positive << " positive\n";
  std::cout << "g(V, V) = " << g(v, v) << " = -g_r(V, V) = " << -g_r(v, v) << "\n";

  const LineField back = extract_timelike_line(g, g_r);
  const Eigen::VectorXd unit = v / std::sqrt(g_r(v, v));
  const double err = std::min((back.vector() - unit).norm(), (back.vector() + unit).norm());
  std::cout << "recovered line differs from V/|V| by " << err << "\n";
}
