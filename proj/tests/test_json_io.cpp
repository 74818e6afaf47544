#include "cobord/json_io.hpp"

#include <catch_amalgamated.hpp>

using namespace cobord;
using namespace cobord::io;

namespace {

std::string sample(const char* name) { return std::string(SAMPLES_DIR) + "/" + name; }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::invalid_argument;
}

} // namespace

TEST_CASE("chain complexes from JSON", "[json][homology]") {
  SECTION("RP2 sample") {
    const auto c = chain_complex_from_json(read_file(sample("rp2.json")));
    const auto h = homology(c);
    CHECK(h.betti_q == std::vector<std::int64_t>{1, 0, 0});
    CHECK(h.betti_z2 == std::vector<std::int64_t>{1, 1, 1});
    CHECK(h.torsion[1] == std::vector<Integer>{2});
  }
  SECTION("torus sample: ranks inferred from both neighbours") {
    const auto c = chain_complex_from_json(read_file(sample("torus2.json")));
    CHECK(c.chain_ranks() == std::vector<std::size_t>{1, 2, 1});
    CHECK(homology(c).betti_q == std::vector<std::int64_t>{1, 2, 1});
  }
  SECTION("round trip") {
    const auto c = chain_complex_from_json(read_file(sample("rp2.json")));
    const auto again = chain_complex_from_json(chain_complex_to_json(c));
    CHECK(homology(again).torsion == homology(c).torsion);
  }
  SECTION("big entries as strings") {
    const json j = {{"dim", 1}, {"boundaries", {{{"123456789012345678901234567890"}}}}};
    CHECK(homology(chain_complex_from_json(j)).torsion[0] ==
          std::vector<Integer>{Integer("123456789012345678901234567890")});
  }
  SECTION("a point") {
    CHECK(chain_complex_from_json(json{{"dim", 0}, {"boundaries", json::array()}}).chain_ranks() ==
          std::vector<std::size_t>{1});
  }
  SECTION("errors") {
    // D_1 with no rows says nothing about C_1.
    CHECK(code_of([] { chain_complex_from_json(json{{"dim", 1}, {"boundaries", {json::array()}}}); }) ==
          Errc::malformed_input);
    CHECK(chain_complex_from_json(json{{"dim", 1}, {"boundaries", {json::array()}}, {"ranks", {0, 2}}}).chain_ranks() ==
          std::vector<std::size_t>{0, 2});
    CHECK(code_of([] { chain_complex_from_json(json{{"dim", 2}, {"boundaries", {{{1}}}}}); }) ==
          Errc::malformed_input);
    CHECK(code_of([] { chain_complex_from_json(json{{"dim", 1}, {"boundaries", {{{1, 2}, {3}}}}}); }) ==
          Errc::malformed_input);
    CHECK(code_of([] { chain_complex_from_json(json{{"dim", 1}, {"boundaries", {{{1.5}}}}}); }) ==
          Errc::malformed_input);
    CHECK(code_of([] { chain_complex_from_json(json{{"dim", 2}, {"boundaries", {{{1}}, {{1}}}}}); }) ==
          Errc::not_a_complex);
    CHECK(code_of([] { chain_complex_from_json(json{{"boundaries", json::array()}}); }) == Errc::malformed_input);
    CHECK(code_of([] { read_file(sample("does_not_exist.json")); }) == Errc::malformed_input);
  }
}

TEST_CASE("descriptors and catalogs", "[json][catalog]") {
  const auto cat = catalog_from_json(read_file(sample("catalog.json")));
  CHECK(cat.size() == 2);
  const auto* e = cat.find("Enriques");
  REQUIRE(e);
  CHECK(e->euler() == 12);
  CHECK(e->euler_z2() == 12);
  CHECK(e->signature == -8);
  CHECK_FALSE(e->builtin);

  const auto m = evaluate("Enriques # CP2", &cat);
  CHECK(m.signature == -7);
  CHECK(m.euler() == 13);

  SECTION("descriptor round trip") {
    const auto d = descriptor_from_json(descriptor_to_json(*e));
    CHECK(d.same_invariants(*e));
    CHECK(d.name == "Enriques");
  }
  SECTION("single object and bare array forms") {
    const json one = descriptor_to_json(*e);
    CHECK(catalog_from_json(one).size() == 1);
    CHECK(catalog_from_json(json::array({one})).size() == 1);
  }
  SECTION("bad records") {
    json j = descriptor_to_json(*e);
    j["betti_q"] = {1, 0, 10, 0};
    CHECK_THROWS_AS(descriptor_from_json(j), Error);
    j = descriptor_to_json(*e);
    j.erase("spin");
    CHECK(code_of([&] { descriptor_from_json(j); }) == Errc::malformed_input);
    j = descriptor_to_json(*e);
    j["dim"] = "four";
    CHECK(code_of([&] { descriptor_from_json(j); }) == Errc::malformed_input);
    j = descriptor_to_json(*e);
    CHECK_THROWS_AS(catalog_from_json(json::array({j, j})), Error);
  }
}

TEST_CASE("cobordism records", "[json][kink]") {
  SECTION("kink sample in dimension 3") {
    const auto c = cobordism_from_json(read_file(sample("kink_three.json")));
    CHECK(c.incoming.size() == 1);
    CHECK(c.outgoing.size() == 2);
    const auto r = kink_of(c);
    CHECK(r.kink == 1);
  }
  SECTION("kink sample in dimension 4") {
    const auto c = cobordism_from_json(read_file(sample("kink_four.json")));
    CHECK(kink_of(c).kink == 3);
  }
  SECTION("inline descriptors and user atoms") {
    const auto cat = catalog_from_json(read_file(sample("catalog.json")));
    const json j = {{"dim", 4}, {"euler", 0}, {"spin", true}, {"incoming", {"Lens3"}}, {"outgoing", {"S3"}}};
    const auto c = cobordism_from_json(j, &cat);
    CHECK(c.incoming.front().name == "Lens3");
    CHECK(code_of([&] { cobordism_from_json(j); }) == Errc::unknown_atom);
  }
  SECTION("validation") {
    CHECK(code_of([] { cobordism_from_json(json{{"dim", 4}, {"euler", 0}, {"incoming", {"S2"}}}); }) ==
          Errc::dimension_mismatch);
    CHECK(code_of([] { cobordism_from_json(json{{"dim", 4}, {"euler", 0}, {"incoming", "S3"}}); }) ==
          Errc::malformed_input);
    CHECK(code_of([] { cobordism_from_json(json{{"dim", 4}, {"incoming", {"S3"}}}); }) == Errc::malformed_input);
  }
}

TEST_CASE("matrices and vectors", "[json][lorentz]") {
  const auto g = matrix_from_json(read_file(sample("lorentz2.json")), "g");
  CHECK(g(0, 1) == -1.0);
  const auto v = vector_from_json(read_file(sample("e0.json")), "v");
  CHECK(v.size() == 4);
  CHECK(matrix_from_json(matrix_to_json(g), "g") == g);
  CHECK(vector_from_json(vector_to_json(v), "v") == v);
  CHECK(code_of([] { matrix_from_json(json::array(), "g"); }) == Errc::malformed_input);
  CHECK(code_of([] { matrix_from_json(json{{1, 2}, {3}}, "g"); }) == Errc::malformed_input);
  CHECK(code_of([] { matrix_from_json(json{{1, "a"}, {3, 4}}, "g"); }) == Errc::malformed_input);
  CHECK(code_of([] { vector_from_json(json{{1}}, "v"); }) == Errc::malformed_input);
}

TEST_CASE("documents carry their schema identifiers", "[json]") {
  CHECK(invariants_to_json(evaluate("T4"))["schema"] == schema::invariants);
  CHECK(invariants_to_json(evaluate("T4"))["semi_characteristic"].is_null());
  CHECK(invariants_to_json(evaluate("RP3"))["semi_characteristic"]["Z2"] == 0);
  CHECK(verdict_to_json(decide_lorentzian(evaluate("S2"), evaluate("T2")), "lorentzian", "S2", "T2")["answer"] == "No");
  CHECK(classification_to_json(classify(evaluate("S3")), "S3")["symbol"] == "Ω^{Spin₀}_{1,3}");
  const auto r = solve_counts(5, menu_for_dimension(7), 0);
  const auto back = recipe_from_json(recipe_to_json(r));
  CHECK(back.counts.size() == r.counts.size());
  CHECK(back.resulting_euler == r.resulting_euler);
  NoSolution ns(2, 1, "odd");
  const auto err = error_to_json(ns);
  CHECK(err["error"] == "NoSolution");
  CHECK(err["modulus"] == 2);
}
