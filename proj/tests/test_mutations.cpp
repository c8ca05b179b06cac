#include <doctest.h>

#include <optional>
#include <iostream>

#include "helpers.hpp"
#include "mutation_sweep.hpp"
#include "picard/error.hpp"

using namespace picard;
using namespace picard::testhelpers;
using namespace picard::mutation_sweep;

TEST_CASE("the square-zero extension ring and derived fixtures are valid") {
  require_all_pass(validate_two_ring(square_zero_ring()));
  require_all_pass(validate_module(*kernel_fixture()));
  require_all_pass(validate_module(*tautological_fixture()));
}

namespace {

// First morphism between two distinct objects, if any.
std::optional<Id> cross_morphism(const FinGroupoid& g) {
  for (const Id& m : g.morphisms)
    if (g.source(m) != g.target(m)) return m;
  return std::nullopt;
}

// A parallel alternative to the given morphism.
std::optional<Id> parallel_alt(const FinGroupoid& g, const Id& m) {
  for (const Id& other : g.hom(g.source(m), g.target(m)))
    if (other != m) return other;
  return std::nullopt;
}

}  // namespace

TEST_CASE("single-entry mutation sweep: no false passes, full family coverage") {
  SweepStats stats = run_sweep();

  // Naturality in the ring direction needs a ring whose base has morphisms
  // between distinct objects and 2-element hom-sets: End of D(Z/2)xB(Z/2).
  {
    auto prod = biproduct(catalog_module("d2@z2"), catalog_module("b2@z2")).sum;
    EndRing e = end_ring(prod->carrier, SearchBudget{});
    const TwoRing& rich = *e.ring;
    const FinGroupoid& g = rich.additive.base;
    auto vocab = ring_vocabulary(rich);
    auto cross = cross_morphism(g);
    REQUIRE(cross.has_value());
    const Id x = g.source(*cross);

    auto mutate_component = [&](auto member, const auto& key) {
      TwoRing mutant = rich;
      Id& slot = (mutant.*member)[key];
      auto alt = parallel_alt(g, slot);
      REQUIRE(alt.has_value());
      slot = *alt;
      record(stats, mutant, [](const TwoRing& r) { return validate_two_ring(r); }, vocab);
    };
    mutate_component(&TwoRing::massoc, IdTriple{x, x, x});
    mutate_component(&TwoRing::mlunit, x);
    mutate_component(&TwoRing::mrunit, x);
    mutate_component(&TwoRing::ldist, IdTriple{x, x, x});
    mutate_component(&TwoRing::rdist, IdTriple{x, x, x});

    auto rich_ptr = std::make_shared<TwoRing>(rich);
    TwoRingHom idh = identity_ring_hom(rich_ptr);
    auto alt = parallel_alt(g, idh.fdot.at({x, x}));
    REQUIRE(alt.has_value());
    idh.fdot[{x, x}] = *alt;
    record(stats, idh, [](const TwoRingHom& f) { return validate_ring_hom(f); }, vocab);
  }
  CHECK(stats.mutants > 1000);
  for (const std::string& note : stats.pass_notes) MESSAGE("valid-looking mutant in: " << note);
  // Structural-table mutants must never validate; coherence components can
  // land on distinct-but-valid choices (eta is only typed by design, and a
  // balanced single-entry distributor twist over Z/2 re-validates).
  CHECK(stats.structural_passes == 0);
  CHECK(stats.component_passes <= 10);
  CHECK(stats.bad_witness == 0);

  // Adding a bogus composite for a non-composable pair trips the boundary
  // family, which the retarget/delete sweep cannot reach.
  {
    RModule m = *catalog_module("d2@z4");
    m.carrier.base.comp[{"1(0)", "1(1)"}] = "1(0)";
    CheckReport report = validate_module(m);
    require_fails(report, "carrier.groupoid.comp-boundary");
    ++stats.covered["groupoid.comp-boundary"];
  }

  std::set<std::string> missing;
  for (const std::string& family : master_families())
    if (!stats.covered.count(family)) missing.insert(family);
  for (const std::string& family : missing) MESSAGE("family without mutation: " << family);
  CHECK(missing.empty());
}
