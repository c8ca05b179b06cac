#include <doctest.h>

#include "helpers.hpp"
#include "picard/error.hpp"
#include "picard/tworing.hpp"

using namespace picard;
using namespace picard::testhelpers;

TEST_CASE("discrete rings validate across the catalog") {
  for (int n : {2, 4, 6}) {
    TwoRing r = build_discrete_ring(cyclic_ring(n));
    CHECK(r.additive.base.objects.size() == static_cast<std::size_t>(n));
    CHECK(r.one == "1");
    require_all_pass(validate_two_ring(r));
  }
}

TEST_CASE("a table violating distributivity is rejected as NOT_RING") {
  RingTable t = cyclic_ring(4);
  t.mul[{"2", "3"}] = "1";  // breaks 2*(1+2) = 2*1+2*2
  CHECK_THROWS_WITH_AS(build_discrete_ring(t), doctest::Contains("NOT_RING"), Error);
}

TEST_CASE("a non-unital table is rejected") {
  RingTable t;
  t.elements = {"0", "1"};
  for (const Id& a : t.elements)
    for (const Id& b : t.elements) {
      t.add[{a, b}] = (a == b) ? "0" : "1";
      t.mul[{a, b}] = "0";  // zero multiplication: no unit
    }
  CHECK_THROWS_WITH_AS(build_discrete_ring(t), doctest::Contains("NOT_RING"), Error);
}

TEST_CASE("mutating ldist on one triple fails a named face") {
  TwoRing r = build_discrete_ring(cyclic_ring(4));
  r.ldist[{"2", "1", "1"}] = "1(1)";  // should be 1(2*(1+1)) = 1(0)
  CheckReport report = validate_two_ring(r);
  require_fails(report, "ring.ldist-typed");
}

TEST_CASE("rewiring the mult bifunctor fails bifunctoriality") {
  TwoRing r = build_discrete_ring(cyclic_ring(4));
  r.mult.mor[{"1(1)", "1(1)"}] = "1(3)";
  CheckReport report = validate_two_ring(r);
  require_fails(report, "ring.mult-functorial");
}

TEST_CASE("identity ring hom validates; reduction z4 -> z2 validates") {
  auto z4 = std::make_shared<TwoRing>(build_discrete_ring(cyclic_ring(4)));
  auto z2 = std::make_shared<TwoRing>(build_discrete_ring(cyclic_ring(2)));
  require_all_pass(validate_ring_hom(identity_ring_hom(z4)));

  TwoRingHom f;
  f.dom = z4;
  f.cod = z2;
  for (int i = 0; i < 4; ++i) {
    f.omap[std::to_string(i)] = std::to_string(i % 2);
    f.mmap["1(" + std::to_string(i) + ")"] = "1(" + std::to_string(i % 2) + ")";
  }
  for (const Id& x : z4->additive.base.objects)
    for (const Id& y : z4->additive.base.objects) {
      f.fplus[{x, y}] = z2->additive.base.identity(f.omap.at(z4->additive.add(x, y)));
      f.fdot[{x, y}] = z2->additive.base.identity(f.omap.at(z4->mul(x, y)));
    }
  f.fzero = z2->additive.base.identity("0");
  f.fone = z2->additive.base.identity("1");
  require_all_pass(validate_ring_hom(f));

  TwoRingMor idmor;
  idmor.source = f;
  idmor.target = f;
  for (const Id& x : z4->additive.base.objects)
    idmor.component[x] = z2->additive.base.identity(f.omap.at(x));
  require_all_pass(validate_ring_two_morphism(idmor));
}

TEST_CASE("the shift map packaged as a ring hom fails a typing face") {
  auto z2 = std::make_shared<TwoRing>(build_discrete_ring(cyclic_ring(2)));
  TwoRingHom f = identity_ring_hom(z2);
  f.omap["0"] = "1";
  f.omap["1"] = "0";
  f.mmap["1(0)"] = "1(1)";
  f.mmap["1(1)"] = "1(0)";
  for (const Id& x : z2->additive.base.objects)
    for (const Id& y : z2->additive.base.objects) {
      f.fplus[{x, y}] = z2->additive.base.identity(f.omap.at(z2->additive.add(x, y)));
      f.fdot[{x, y}] = z2->additive.base.identity(f.omap.at(z2->mul(x, y)));
    }
  // F₁ : F(1) = 0 → 1 cannot exist in the discrete base.
  CheckReport report = validate_ring_hom(f);
  CHECK_FALSE(report.all_pass());
  bool unit_side_failure = !report.entry("hom.fzero-typed")->pass ||
                           !report.entry("ringhom.fone-typed")->pass ||
                           !report.entry("ringhom.fdot-typed")->pass;
  CHECK(unit_side_failure);
}

TEST_CASE("discrete ring forgets to the discrete 2-group of its addition") {
  TwoRing r = build_discrete_ring(cyclic_ring(6));
  SymTwoGroup d6 = build_discrete(cyclic_group(6));
  CHECK(r.additive == d6);
}
