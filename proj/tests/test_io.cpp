#include <doctest.h>

#include "helpers.hpp"
#include "picard/catalog.hpp"
#include "picard/constructions.hpp"
#include "picard/search.hpp"
#include "picard/error.hpp"
#include "picard/io.hpp"

using namespace picard;
using namespace picard::testhelpers;

TEST_CASE("twogroup documents round-trip to table-equal structures") {
  SymTwoGroup a = catalog_twogroup("b4");
  std::string text = serialize(to_document(a));
  SymTwoGroup back = twogroup_from_document(parse(text));
  CHECK(back == a);
  // Byte stability on the canonical form.
  CHECK(serialize(parse(text)) == text);
}

TEST_CASE("ring, module, hom, and twomorphism documents round-trip") {
  TwoRing r = *catalog_ring("z4");
  CHECK(tworing_from_document(parse(serialize(to_document(r)))) == r);

  auto m = catalog_module("b2@z4");
  auto m2 = module_from_document(parse(serialize(to_document(*m))));
  CHECK(table_equal(*m2, *m));

  RModHom f = catalog_hom("mul2@z4");
  RModHom f2 = hom_from_document(parse(serialize(to_document(f))));
  CHECK(table_equal(f2, f));
  CHECK(table_equal(*f2.dom, *f.dom));
  CHECK(table_equal(*f2.cod, *f.cod));

  KernelResult k = kernel(f);
  RModMor eps2 = twomorphism_from_document(parse(serialize(to_document(k.eps))));
  CHECK(eps2.component == k.eps.component);
  CHECK(table_equal(eps2.source, k.eps.source));
}

TEST_CASE("constructed modules round-trip") {
  RModHom f = catalog_hom("mod2@z4");
  auto c = cokernel(f);
  std::string text = serialize(to_document(*c.coker));
  auto back = module_from_document(parse(text));
  CHECK(table_equal(*back, *c.coker));
  CHECK(serialize(parse(text)) == text);
}

TEST_CASE("a document missing a comp entry is a REFERENCE_ERROR") {
  std::string text = serialize(to_document(catalog_twogroup("b2")));
  std::string needle = "comp 1 1 0\n";
  auto at = text.find(needle);
  REQUIRE(at != std::string::npos);
  text.erase(at, needle.size());
  CHECK_THROWS_WITH_AS(twogroup_from_document(parse(text)),
                       doctest::Contains("REFERENCE_ERROR"), Error);
}

TEST_CASE("a duplicated morphism id is a PARSE_ERROR") {
  std::string text = serialize(to_document(catalog_twogroup("d2")));
  text += "morphism 1(1) 0 0\n";
  CHECK_THROWS_WITH_AS(twogroup_from_document(parse(text)), doctest::Contains("PARSE_ERROR"),
                       Error);
}

TEST_CASE("an exactly duplicated row is a PARSE_ERROR") {
  std::string text = serialize(to_document(catalog_twogroup("d2")));
  text += "object 0\n";
  CHECK_THROWS_WITH_AS(parse(text), doctest::Contains("PARSE_ERROR"), Error);
}

TEST_CASE("unknown fields are rejected") {
  std::string text = serialize(to_document(catalog_twogroup("d2")));
  text += "frobnicate 0\n";
  CHECK_THROWS_WITH_AS(twogroup_from_document(parse(text)), doctest::Contains("PARSE_ERROR"),
                       Error);
}

TEST_CASE("unsupported versions are rejected") {
  CHECK_THROWS_WITH_AS(parse("picard 2 twogroup\n"), doctest::Contains("VERSION_UNSUPPORTED"),
                       Error);
}

TEST_CASE("reports serialize with witnesses and parse back") {
  CheckReport report;
  report.record("demo.pass", true);
  report.record("demo.fail", false, {"x", "y"});
  std::string text = serialize(report_document(report));
  CheckReport back = report_from_document(parse(text));
  REQUIRE(back.entries().size() == 2);
  CHECK(back.entry("demo.fail")->witness == std::vector<Id>{"x", "y"});
  std::string json = report_json_lines(report);
  CHECK(json.find("\"axiom\":\"demo.fail\"") != std::string::npos);
  CHECK(json.find("\"witness\":[\"x\",\"y\"]") != std::string::npos);
}

TEST_CASE("enumerated constructions are deterministic across runs") {
  auto b2 = catalog_module("b2@z2");
  std::string first = serialize(to_document(hom_two_group(b2, b2, SearchBudget{}).hom));
  std::string second = serialize(to_document(hom_two_group(b2, b2, SearchBudget{}).hom));
  CHECK(first == second);
  RModHom f = catalog_hom("mod2@z4");
  CHECK(serialize(to_document(*cokernel(f).coker)) ==
        serialize(to_document(*cokernel(f).coker)));
}
