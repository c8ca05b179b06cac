#include <doctest.h>

#include "helpers.hpp"
#include "picard/catalog.hpp"
#include "picard/equivalence.hpp"
#include "picard/error.hpp"
#include "picard/search.hpp"

using namespace picard;
using namespace picard::testhelpers;

TEST_CASE("identity hom is faithful, full, essentially surjective") {
  RModHom f = catalog_hom("id:d4@z4");
  CHECK(is_faithful(f).holds);
  CHECK(is_full(f).holds);
  CHECK(is_essentially_surjective(f).holds);
}

TEST_CASE("zero hom between discrete modules: faithful, not full") {
  auto d2 = catalog_module("d2@z2");
  RModHom z = zero_hom(d2, d2);
  CHECK(is_faithful(z).holds);  // hom-sets are singletons
  Verdict full = is_full(z);
  CHECK_FALSE(full.holds);
  CHECK(full.witness.size() == 3);
  Verdict es = is_essentially_surjective(z);
  CHECK_FALSE(es.holds);
  CHECK(es.witness == std::vector<Id>{"1"});
}

TEST_CASE("pi1 reduction is full but not faithful") {
  RModHom f = catalog_hom("pi1mod2@z4");
  Verdict faithful = is_faithful(f);
  CHECK_FALSE(faithful.holds);
  CHECK(faithful.witness.size() == 2);
  // the witness really is a fused pair
  CHECK(f.ap_m(faithful.witness[0]) == f.ap_m(faithful.witness[1]));
  CHECK(is_full(f).holds);
  CHECK(is_essentially_surjective(f).holds);
}

TEST_CASE("fingerprints of the catalog instances") {
  Fingerprint d4 = invariants_fingerprint(*catalog_module("d4@z4"));
  CHECK(d4.pi0 == 4);
  CHECK(d4.pi1 == 1);
  Fingerprint b4 = invariants_fingerprint(*catalog_module("b4@z4"));
  CHECK(b4.pi0 == 1);
  CHECK(b4.pi1 == 4);
}

TEST_CASE("find_equivalence on identical modules returns a valid witness") {
  auto m = catalog_module("d4@z4");
  auto w = find_equivalence(m, m, SearchBudget{});
  REQUIRE(w.has_value());
  require_all_pass(validate_mod_hom(w->forth));
  require_all_pass(validate_mod_hom(w->back));
  require_all_pass(validate_mod_two_morphism(w->unit));
  require_all_pass(validate_mod_two_morphism(w->counit));
  CHECK(table_equal(w->counit.source, compose_mod_hom(w->back, w->forth)));
  CHECK(table_equal(w->counit.target, identity_mod_hom(m)));
  CHECK(table_equal(w->unit.source, compose_mod_hom(w->forth, w->back)));
  CHECK(table_equal(w->unit.target, identity_mod_hom(m)));
}

TEST_CASE("fingerprint mismatch is pruned to a definitive absence") {
  auto d2 = catalog_module("d2@z6");
  auto d3 = catalog_module("d3@z6");
  CHECK_FALSE(find_equivalence(d2, d3, SearchBudget{}).has_value());
}

TEST_CASE("biproduct(d2, d3) over z6 is equivalent to d6") {
  auto d2 = catalog_module("d2@z6");
  auto d3 = catalog_module("d3@z6");
  auto d6 = catalog_module("d6@z6");
  BiproductResult bp = biproduct(d2, d3);
  auto w = find_equivalence(bp.sum, d6, SearchBudget{});
  REQUIRE(w.has_value());
  CHECK(is_faithful(w->forth).holds);
  CHECK(is_full(w->forth).holds);
  CHECK(is_essentially_surjective(w->forth).holds);
}

TEST_CASE("biproduct with the zero module is equivalent to the module") {
  auto m = catalog_module("b2@z4");
  auto zero = catalog_module("d1@z4");
  BiproductResult bp = biproduct(m, zero);
  auto w = find_equivalence(bp.sum, m, SearchBudget{});
  REQUIRE(w.has_value());
}

TEST_CASE("find_equivalence rejects modules over distinct rings") {
  auto a = catalog_module("d2@z2");
  auto b = catalog_module("d2@z4");
  CHECK_THROWS_WITH_AS(find_equivalence(a, b, SearchBudget{}),
                       doctest::Contains("RING_MISMATCH"), Error);
}

TEST_CASE("budget exhaustion raises BUDGET_EXCEEDED") {
  auto m = catalog_module("d6@z6");
  SearchBudget tiny;
  tiny.max_candidates = 3;
  CHECK_THROWS_WITH_AS(find_equivalence(m, m, tiny), doctest::Contains("BUDGET_EXCEEDED"),
                       Error);
}

TEST_CASE("witnesses only connect modules with equal fingerprints") {
  auto m = catalog_module("b2@z4");
  auto n = catalog_module("b2@z4");
  auto w = find_equivalence(m, n, SearchBudget{});
  REQUIRE(w.has_value());
  CHECK(invariants_fingerprint(*m) == invariants_fingerprint(*n));
}
