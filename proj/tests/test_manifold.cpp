#include "cobord/cells.hpp"
#include "cobord/manifold.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace cobord;

namespace {

using V = std::vector<std::int64_t>;

std::vector<ManifoldDescriptor> atoms_up_to(int max_dim) {
  std::vector<ManifoldDescriptor> out{point(), k3_surface()};
  for (int n = 0; n <= max_dim; ++n) {
    out.push_back(sphere(n));
    if (n >= 1) {
      out.push_back(torus(n));
      out.push_back(real_projective(n));
    }
    if (n >= 1 && 2 * n <= max_dim) out.push_back(complex_projective(n));
    if (n >= 1 && 4 * n <= max_dim) out.push_back(quaternionic_projective(n));
  }
  return out;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::invalid_argument;
}

int semi_by_hand(const V& betti, int dim) {
  std::int64_t s = 0;
  for (int i = 0; i <= (dim - 1) / 2; ++i) s += betti[static_cast<std::size_t>(i)];
  return static_cast<int>(s % 2);
}

} // namespace

TEST_CASE("catalog entries", "[catalog]") {
  SECTION("HP(2q+2) has chi 2q+3 and is spin") {
    for (int q = 0; q <= 5; ++q) {
      const auto hp = catalog("HP", 2 * q + 2);
      CHECK(hp.euler() == 2 * q + 3);
      CHECK(hp.spin);
    }
  }
  SECTION("S3") {
    const auto s3 = catalog("S", 3);
    CHECK(s3.betti_q == V{1, 0, 0, 1});
    CHECK(s3.euler() == 0);
  }
  SECTION("T3, cross-checked against the subdivided cubical complex") {
    const auto t3 = catalog("T", 3);
    CHECK(t3.betti_q == V{1, 3, 3, 1});
    const auto h = homology(cells::torus_subdivided(3));
    CHECK(h.betti_q == t3.betti_q);
    CHECK(h.betti_z2 == t3.betti_z2);
  }
  SECTION("Betti numbers match closed forms") {
    for (const char* name : {"S", "T", "CP", "HP", "RP"})
      for (int p = 1; p <= 6; ++p) {
        const auto m = catalog(name, p);
        const auto [q, z] = oracle::betti(name, p);
        INFO(name << p);
        CHECK(m.betti_q == q);
        CHECK(m.betti_z2 == z);
      }
  }
  SECTION("spin and orientability flags") {
    for (int k = 1; k <= 12; ++k) {
      CHECK(catalog("S", k).spin);
      CHECK(catalog("T", k).spin);
      CHECK(catalog("HP", k).spin);
      CHECK(catalog("CP", k).spin == (k % 2 == 1));
      CHECK(catalog("RP", k).orientable == (k % 2 == 1));
      if (k > 1) CHECK(catalog("RP", k).spin == (k % 4 == 3));
    }
    CHECK(catalog("K3").spin);
    CHECK(catalog("K3").signature == -16);
    CHECK(catalog("K3").euler() == 24);
  }
  SECTION("stable parallelizability") {
    CHECK(catalog("S", 5).stably_parallelizable == true);
    CHECK(catalog("T", 4).stably_parallelizable == true);
    CHECK(catalog("CP", 1).stably_parallelizable == true);
    CHECK(catalog("CP", 2).stably_parallelizable == false);
    CHECK(catalog("HP", 1).stably_parallelizable == true);
    CHECK(catalog("HP", 2).stably_parallelizable == false);
    CHECK(catalog("K3").stably_parallelizable == false);
    CHECK(catalog("RP", 3).stably_parallelizable == true);
    CHECK(catalog("RP", 5).stably_parallelizable == false);
  }
  SECTION("every atom satisfies the descriptor invariants") {
    for (const auto& m : atoms_up_to(12)) CHECK_NOTHROW(m.validate());
  }
}

TEST_CASE("catalog errors", "[catalog][errors]") {
  CHECK(code_of([] { catalog("Q", 2); }) == Errc::unknown_name);
  CHECK(code_of([] { catalog("S", -1); }) == Errc::negative_parameter);
  CHECK(code_of([] { catalog("S"); }) == Errc::invalid_argument);
  CHECK(code_of([] { catalog("K3", 2); }) == Errc::invalid_argument);
}

TEST_CASE("connected sum", "[sum]") {
  SECTION("S3 # S3 = S3") { CHECK(connected_sum(sphere(3), sphere(3)).same_invariants(sphere(3))); }
  SECTION("(S2xS2) # (S2xS2)") {
    const auto s22 = product(sphere(2), sphere(2));
    const auto m = connected_sum(s22, s22);
    CHECK(m.euler() == 6);
    CHECK(m.signature == 0);
    const auto c = connected_sum_complex(tensor_product(cells::sphere(2), cells::sphere(2)),
                                         tensor_product(cells::sphere(2), cells::sphere(2)));
    CHECK(homology(c).betti_q == m.betti_q);
  }
  SECTION("K3 # K3") {
    const auto m = connected_sum(k3_surface(), k3_surface());
    CHECK(m.euler() == 46);
    CHECK(m.signature == -32);
    CHECK(m.spin);
  }
  SECTION("chi(A # B) = chi(A) + chi(B) - chi(S^n)") {
    const auto a = atoms_up_to(6);
    for (const auto& x : a)
      for (const auto& y : a) {
        if (x.dim != y.dim || x.dim < 1 || !x.orientable || !y.orientable || !x.connected || !y.connected) continue;
        CHECK(connected_sum(x, y).euler() == x.euler() + y.euler() - sphere(x.dim).euler());
      }
  }
  SECTION("errors") {
    CHECK(code_of([] { connected_sum(sphere(2), sphere(3)); }) == Errc::dimension_mismatch);
    CHECK(code_of([] { connected_sum(real_projective(2), sphere(2)); }) == Errc::non_orientable_operand);
    CHECK(code_of([] { connected_sum(disjoint_union(sphere(2), sphere(2)), sphere(2)); }) ==
          Errc::disconnected_operand);
  }
  SECTION("stable parallelizability is kept only when both operands have it") {
    CHECK(connected_sum(torus(3), sphere(3)).stably_parallelizable == true);
    CHECK(!connected_sum(torus(4), complex_projective(2)).stably_parallelizable.has_value());
  }
}

TEST_CASE("product", "[product]") {
  SECTION("HP^q x S2 has chi 2(q+1)") {
    for (int q = 1; q <= 4; ++q) CHECK(product(quaternionic_projective(q), sphere(2)).euler() == 2 * (q + 1));
  }
  SECTION("X x point = X") {
    for (const auto& x : atoms_up_to(6)) CHECK(product(x, point()).same_invariants(x));
  }
  SECTION("S2 x S3") { CHECK(product(sphere(2), sphere(3)).betti_q == V{1, 0, 1, 1, 0, 1}); }
  SECTION("signatures") {
    CHECK(product(complex_projective(2), complex_projective(2)).signature == 1);
    CHECK(product(k3_surface(), complex_projective(2)).signature == -16);
    CHECK(product(sphere(2), sphere(2)).signature == 0);
    CHECK(product(sphere(1), sphere(3)).signature == 0);
    CHECK(!product(sphere(2), sphere(3)).signature.has_value());
  }
  SECTION("spin is the conjunction") {
    CHECK(!product(complex_projective(2), sphere(2)).spin);
    CHECK(product(complex_projective(3), sphere(2)).spin);
    CHECK(!product(real_projective(2), sphere(1)).orientable);
  }
  SECTION("names wrap sums") {
    CHECK(product(connected_sum(torus(2), torus(2)), sphere(1)).name == "(T2 # T2) x S1");
  }
}

TEST_CASE("disjoint union", "[union]") {
  const auto m = disjoint_union(sphere(3), torus(3));
  CHECK(m.components == 2);
  CHECK_FALSE(m.connected);
  CHECK(m.betti_q == V{2, 3, 3, 2});
  CHECK(m.spin);
  CHECK_NOTHROW(m.validate());
  CHECK(code_of([] { disjoint_union(sphere(3), sphere(2)); }) == Errc::dimension_mismatch);
}

TEST_CASE("Euler characteristic", "[euler]") {
  CHECK(euler_characteristic(k3_surface()) == 24);
  CHECK(euler_characteristic(torus(4)) == 0);
  for (const auto& m : atoms_up_to(9)) {
    CHECK(m.euler() == m.euler_z2());
    if (m.dim % 2 == 1 && m.orientable) CHECK(m.euler() == 0);
  }
}

TEST_CASE("Kervaire semi-characteristic", "[semi]") {
  CHECK(semi_characteristic(sphere(3), Field::Z2) == 1);
  CHECK(semi_characteristic(torus(3), Field::Z2) == 0);
  CHECK(semi_characteristic(sphere(5), Field::Z2) == 1);
  CHECK(semi_characteristic(torus(5), Field::Z2) == 0);
  // RP3 differs between the fields: 1+0 over Q, 1+1 over Z/2.
  CHECK(semi_characteristic(real_projective(3), Field::Q) == 1);
  CHECK(semi_characteristic(real_projective(3), Field::Z2) == 0);
  CHECK(code_of([] { semi_characteristic(sphere(4), Field::Z2); }) == Errc::even_dimension);

  SECTION("semi-char(A # B) = semi-char(A) + semi-char(B) + 1") {
    std::vector<ManifoldDescriptor> odd;
    for (const auto& m : atoms_up_to(7))
      if (m.dim % 2 == 1 && m.orientable && m.connected) odd.push_back(m);
    odd.push_back(product(sphere(2), sphere(3)));
    odd.push_back(product(sphere(1), complex_projective(2)));
    for (const auto& a : odd)
      for (const auto& b : odd) {
        if (a.dim != b.dim) continue;
        const auto s = connected_sum(a, b);
        INFO(a.name << " # " << b.name);
        CHECK(semi_characteristic(s, Field::Z2) ==
              (semi_characteristic(a, Field::Z2) + semi_characteristic(b, Field::Z2) + 1) % 2);
        CHECK(semi_characteristic(s, Field::Z2) == semi_by_hand(s.betti_z2, s.dim));
      }
  }
}

TEST_CASE("closed spin manifolds of dimension 2q', q' != 0 mod 4, have even chi", "[parity]") {
  std::vector<ManifoldDescriptor> ms = atoms_up_to(14);
  const auto base = atoms_up_to(7);
  for (const auto& a : base)
    for (const auto& b : base)
      if (a.dim + b.dim <= 14) ms.push_back(product(a, b));
  int checked = 0;
  for (const auto& m : ms) {
    if (!m.spin || !m.connected || m.dim == 0 || m.dim % 2 == 1 || m.dim % 8 == 0) continue;
    INFO(m.name);
    CHECK(m.euler() % 2 == 0);
    ++checked;
  }
  CHECK(checked > 50);
  // CP3 is the example quoted with the lemma.
  CHECK(complex_projective(3).euler() == 4);
  // In dimension 8 the lemma does not apply: HP2 is spin with odd chi.
  CHECK(quaternionic_projective(2).spin);
  CHECK(quaternionic_projective(2).euler() == 3);
}

TEST_CASE("sum and product are commutative and associative on invariants", "[property]") {
  const auto a = atoms_up_to(4);
  for (const auto& x : a)
    for (const auto& y : a) {
      CHECK(product(x, y).same_invariants(product(y, x)));
      if (x.dim == y.dim && x.dim >= 1 && x.orientable && y.orientable && x.connected && y.connected)
        CHECK(connected_sum(x, y).same_invariants(connected_sum(y, x)));
    }
  const std::vector<ManifoldDescriptor> three = {torus(3), sphere(3), real_projective(3), product(sphere(1), sphere(2))};
  for (const auto& x : three)
    for (const auto& y : three)
      for (const auto& z : three) {
        CHECK(connected_sum(connected_sum(x, y), z).same_invariants(connected_sum(x, connected_sum(y, z))));
        CHECK(product(product(x, y), z).same_invariants(product(x, product(y, z))));
      }
}

TEST_CASE("descriptor validation rejects inconsistent records", "[errors]") {
  auto m = sphere(3);
  m.betti_q = {1, 0, 1};
  CHECK(code_of([&] { m.validate(); }) == Errc::malformed_input);
  m = sphere(3);
  m.spin = true;
  m.orientable = false;
  CHECK(code_of([&] { m.validate(); }) == Errc::malformed_input);
  m = sphere(3);
  m.signature = 0;
  CHECK(code_of([&] { m.validate(); }) == Errc::malformed_input);
  m = torus(2);
  m.betti_z2 = {1, 1, 1};
  CHECK(code_of([&] { m.validate(); }) == Errc::malformed_input);
}

TEST_CASE("cobordism builders", "[cobordism]") {
  const auto c = cylinder(torus(3));
  CHECK(c.dim == 4);
  CHECK(c.euler == 0);
  CHECK(c.boundary().size() == 2);
  const auto p = punctured(quaternionic_projective(2));
  CHECK(p.euler == 2);
  CHECK(p.outgoing.front().same_invariants(sphere(7)));
  CHECK(disk(4).euler == 1);
  CHECK(disk(3).euler == 1);
  CHECK(connected_sum(cylinder(sphere(3)), complex_projective(2)).euler == 1);
  CHECK_FALSE(connected_sum(cylinder(sphere(3)), complex_projective(2)).spin);
  CHECK(connected_sum(cylinder(sphere(3)), real_projective(4)).euler == -1);

  CobordismDescriptor bad = cylinder(sphere(3));
  bad.outgoing.push_back(sphere(2));
  CHECK(code_of([&] { bad.validate(); }) == Errc::dimension_mismatch);
  CobordismDescriptor bad_spin = cylinder(complex_projective(2));
  bad_spin.spin = true;
  CHECK(code_of([&] { bad_spin.validate(); }) == Errc::not_spin);
}
