#include <doctest.h>

#include "helpers.hpp"
#include "picard/catalog.hpp"
#include "picard/error.hpp"
#include "picard/representation.hpp"
#include "picard/search.hpp"

using namespace picard;
using namespace picard::testhelpers;

TEST_CASE("End of the zero 2-group is the zero ring") {
  EndRing e = end_ring(catalog_twogroup("d1"), SearchBudget{});
  CHECK(e.objects.size() == 1);
  CHECK(e.morphisms.size() == 1);
  CHECK(e.ring->one == e.ring->additive.unit);
}

TEST_CASE("End(D(Z/2)) has the Z/2 ring tables") {
  // Independent oracle: additive endomaps of Z/2 are x↦0 and x↦x.
  int oracle = 0;
  for (int k = 0; k < 2; ++k) {
    bool additive = true;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        if ((k * ((a + b) % 2)) % 2 != ((k * a) % 2 + (k * b) % 2) % 2) additive = false;
    if (additive) ++oracle;
  }
  CHECK(oracle == 2);

  EndRing e = end_ring(catalog_twogroup("d2"), SearchBudget{});
  REQUIRE(e.objects.size() == 2);
  const auto& names = e.ring->additive.base.objects;
  // Canonical sort puts the zero endo first, the identity second.
  const Id zero = names[0];
  const Id one = names[1];
  CHECK(e.ring->one == one);
  CHECK(e.ring->additive.unit == zero);
  CHECK(e.ring->additive.add(one, one) == zero);
  CHECK(e.ring->mul(one, one) == one);
  CHECK(e.ring->mul(zero, one) == zero);
}

TEST_CASE("End(D(Z/3)) has the Z/3 ring tables") {
  EndRing e = end_ring(catalog_twogroup("d3"), SearchBudget{});
  REQUIRE(e.objects.size() == 3);
  // Identify each endo by its multiplier k: omap 1 ↦ k.
  std::map<Id, int> k_of;
  const auto& names = e.ring->additive.base.objects;
  for (std::size_t i = 0; i < names.size(); ++i)
    k_of[names[i]] = std::stoi(e.objects[i].ap("1"));
  for (const Id& a : names)
    for (const Id& b : names) {
      CHECK(k_of.at(e.ring->additive.add(a, b)) == (k_of.at(a) + k_of.at(b)) % 3);
      CHECK(k_of.at(e.ring->mul(a, b)) == (k_of.at(a) * k_of.at(b)) % 3);
    }
}

TEST_CASE("rep of D(Z/2) over Z/2 sends 0 to the zero endo and 1 to the identity") {
  auto m = catalog_module("d2@z2");
  Representation rep = rep_from_module(*m, SearchBudget{});
  require_all_pass(validate_ring_hom(rep.rep));
  const TwoGroupHom& f0 = rep.end.object_of(rep.rep.ap("0"));
  const TwoGroupHom& f1 = rep.end.object_of(rep.rep.ap("1"));
  for (const Id& x : m->carrier.base.objects) {
    CHECK(f0.ap(x) == "0");
    CHECK(f1.ap(x) == x);
  }
}

TEST_CASE("rep of D(Z/3) over Z/6 is multiplication mod 3") {
  auto m = catalog_module("d3@z6");
  Representation rep = rep_from_module(*m, SearchBudget{});
  require_all_pass(validate_ring_hom(rep.rep));
  for (int r = 0; r < 6; ++r) {
    const TwoGroupHom& fr = rep.end.object_of(rep.rep.ap(std::to_string(r)));
    for (int x = 0; x < 3; ++x)
      CHECK(fr.ap(std::to_string(x)) == std::to_string((r % 3) * x % 3));
  }
}

TEST_CASE("representation/module round trip is table-exact on the catalog") {
  for (const std::string& name : catalog_module_names()) {
    CAPTURE(name);
    auto m = catalog_module(name);
    Representation rep = rep_from_module(*m, SearchBudget{});
    RModule back = module_from_rep(rep.rep, rep.end);
    CHECK(back.action.obj == m->action.obj);
    CHECK(back.action.mor == m->action.mor);
    CHECK(back.adist == m->adist);
    CHECK(back.bdist == m->bdist);
    CHECK(back.bassoc == m->bassoc);
    CHECK(back.iunit == m->iunit);
    CHECK(back.zzero == m->zzero);
    CHECK(back.carrier == m->carrier);
  }
}

TEST_CASE("module_from_rep rejects a codomain that is not the End ring") {
  auto m = catalog_module("d2@z2");
  Representation rep = rep_from_module(*m, SearchBudget{});
  EndRing other = end_ring(catalog_twogroup("d3"), SearchBudget{});
  CHECK_THROWS_WITH_AS(module_from_rep(rep.rep, other), doctest::Contains("NOT_ENDRING"),
                       picard::Error);
}

TEST_CASE("multiplicative unit of End is the identity hom with identity components") {
  EndRing e = end_ring(catalog_twogroup("d2"), SearchBudget{});
  const TwoGroupHom& unit = e.object_of(e.ring->one);
  CHECK(unit == identity_hom(e.carrier));
  // λ, ρ, [ ] components are identities.
  for (const auto& [key, value] : e.ring->mlunit)
    CHECK(value == e.ring->additive.base.identity(key));
  for (const auto& [key, value] : e.ring->mrunit)
    CHECK(value == e.ring->additive.base.identity(key));
}

TEST_CASE("end_ring respects the enumeration caps") {
  SearchBudget tiny;
  tiny.max_objects = 2;
  CHECK_THROWS_WITH_AS(end_ring(catalog_twogroup("d4"), tiny),
                       doctest::Contains("BUDGET_EXCEEDED"), picard::Error);
}
