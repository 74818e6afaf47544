// Decide a Spin(1,7)_0 Lorentzian cobordism from S7 to itself and print the
// connected-sum recipe that zeroes chi for a few base cobordisms.

#include "cobord/cobord.hpp"

#include <iostream>

int main() {
  using namespace cobord;
  const auto s7 = evaluate("S7");
  const auto t7 = evaluate("T7");
  const Verdict v = decide_spin_lorentzian(s7, t7);
  std::cout << s7.name << " -> " << t7.name << ": " << answer_name(v.answer) << " (" << v.rule << ")\n";

  for (std::int64_t chi : {-3, 0, 5}) {
    const auto r = v.witness->instantiate(chi);
    std::cout << "chi(base) = " << chi << ":";
    for (const auto& c : r.counts) std::cout << " " << c.k << " x " << c.summand;
    std::cout << " -> chi = " << r.resulting_euler << "\n";
  }

  // Puncturing HP2 gives a spin 8-manifold with boundary S7 and chi = 2.
  const auto base = punctured(quaternionic_projective(2));
  const auto menu = menu_for_dimension(7);
  const auto recipe = solve_counts(base.euler, menu, 0);
  const auto m = realize(base, menu, recipe);
  std::cout << "HP2 minus a ball, corrected: chi = " << m.euler << ", spin = " << std::boolalpha << m.spin
            << "\n";
}
