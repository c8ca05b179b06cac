// Acceptance gate: one checkable criterion per section, each printing a
// single PASS/FAIL line. Run with no arguments for the full gate or with
// --criterion N for a single one; --cli <path> enables the pipeline checks
// that spawn the command-line tool.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mutation_sweep.hpp"
#include "picard/catalog.hpp"
#include "picard/constructions.hpp"
#include "picard/equivalence.hpp"
#include "picard/error.hpp"
#include "picard/io.hpp"
#include "picard/representation.hpp"
#include "picard/search.hpp"

using namespace picard;

namespace {

std::string g_cli_path;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool check(bool ok, const std::string& what, std::string& detail) {
  if (!ok && detail.empty()) detail = what;
  return ok;
}

// 1. Every catalog instance passes its validator in under 10 s total.
bool criterion1(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (const auto& name : catalog_twogroup_names())
    ok &= check(validate_two_group(catalog_twogroup(name)).all_pass(), "twogroup " + name,
                detail);
  for (const auto& name : catalog_ring_names())
    ok &= check(validate_two_ring(*catalog_ring(name)).all_pass(), "ring " + name, detail);
  for (const auto& name : catalog_module_names())
    ok &= check(validate_module(*catalog_module(name)).all_pass(), "module " + name, detail);
  for (const auto& name : catalog_hom_names())
    ok &= check(validate_mod_hom(catalog_hom(name)).all_pass(), "hom " + name, detail);
  double dt = seconds_since(start);
  ok &= check(dt < 10.0, "runtime " + std::to_string(dt) + "s over budget", detail);
  return ok;
}

// 2. Mutation suite: every axiom family rejects at least one single-entry
// mutation with a witness; no structural mutant slips through.
bool criterion2(std::string& detail) {
  using namespace picard::mutation_sweep;
  SweepStats stats = run_sweep();
  {
    RModule m = *catalog_module("d2@z4");
    m.carrier.base.comp[{"1(0)", "1(1)"}] = "1(0)";
    CheckReport report = validate_module(m);
    const CheckEntry* e = report.entry("carrier.groupoid.comp-boundary");
    if (e && !e->pass) ++stats.covered["groupoid.comp-boundary"];
  }
  {
    auto prod = biproduct(catalog_module("d2@z2"), catalog_module("b2@z2")).sum;
    EndRing e = end_ring(prod->carrier, SearchBudget{});
    const TwoRing& rich = *e.ring;
    const FinGroupoid& g = rich.additive.base;
    auto vocab = ring_vocabulary(rich);
    Id cross, x;
    for (const Id& m : g.morphisms)
      if (g.source(m) != g.target(m)) {
        cross = m;
        x = g.source(m);
        break;
      }
    auto flip = [&](auto member, const auto& key) {
      TwoRing mutant = rich;
      Id& slot = (mutant.*member)[key];
      for (const Id& other : g.hom(g.source(slot), g.target(slot)))
        if (other != slot) {
          slot = other;
          break;
        }
      record(stats, mutant, [](const TwoRing& r) { return validate_two_ring(r); }, vocab);
    };
    flip(&TwoRing::massoc, IdTriple{x, x, x});
    flip(&TwoRing::mlunit, x);
    flip(&TwoRing::mrunit, x);
    flip(&TwoRing::ldist, IdTriple{x, x, x});
    flip(&TwoRing::rdist, IdTriple{x, x, x});
    auto rich_ptr = std::make_shared<TwoRing>(rich);
    TwoRingHom idh = identity_ring_hom(rich_ptr);
    Id& slot = idh.fdot[{x, x}];
    for (const Id& other : g.hom(g.source(slot), g.target(slot)))
      if (other != slot) {
        slot = other;
        break;
      }
    record(stats, idh, [](const TwoRingHom& f) { return validate_ring_hom(f); }, vocab);
  }
  bool ok = check(stats.structural_passes == 0, "structural mutant validated", detail);
  ok &= check(stats.bad_witness == 0, "failure without a usable witness", detail);
  for (const std::string& family : master_families())
    ok &= check(stats.covered.count(family) > 0, "no mutation caught by " + family, detail);
  return ok;
}

// 3. Kernel and cokernel oracles with sub-second certified equivalences.
bool criterion3(std::string& detail) {
  bool ok = true;
  {
    auto start = std::chrono::steady_clock::now();
    KernelResult k = kernel(catalog_hom("mod2@z4"));
    ok &= check(k.ker->carrier.base.objects.size() == 2, "kernel object count", detail);
    ok &= check(find_equivalence(k.ker, catalog_module("d2@z4"), SearchBudget{}).has_value(),
                "kernel equivalence", detail);
    ok &= check(seconds_since(start) < 1.0, "kernel certification over 1s", detail);
  }
  {
    auto start = std::chrono::steady_clock::now();
    CokernelResult c = cokernel(catalog_hom("mul2@z4"));
    ok &= check(find_equivalence(c.coker, catalog_module("d2@z4"), SearchBudget{}).has_value(),
                "cokernel equivalence", detail);
    ok &= check(seconds_since(start) < 1.0, "cokernel certification over 1s", detail);
  }
  return ok;
}

// 4. Pip/copip oracles with independent enumerators.
bool criterion4(std::string& detail) {
  bool ok = true;
  {
    RModHom f = catalog_hom("pi1mod2@z4");
    PipResult p = pip(f);
    std::size_t oracle = 0;
    const SymTwoGroup& ma = f.dom->carrier;
    for (const Id& a : ma.base.hom(ma.unit, ma.unit))
      if (f.ap_m(a) == f.cod->carrier.base.identity(f.ap(ma.unit))) ++oracle;
    ok &= check(p.pip->carrier.base.objects.size() == oracle, "pip count oracle", detail);
    ok &= check(find_equivalence(p.pip, catalog_module("d2@z4"), SearchBudget{}).has_value(),
                "pip equivalence", detail);
  }
  {
    RModHom f = catalog_hom("mul2@z4");
    CopipResult c = copip(f);
    const SymTwoGroup& mb = f.cod->carrier;
    std::map<Id, Id> rep;
    for (const Id& b : mb.base.objects) rep[b] = b;
    std::function<Id(Id)> find_rep = [&](Id v) {
      while (rep.at(v) != v) v = rep.at(v);
      return v;
    };
    for (const Id& b1 : mb.base.objects)
      for (const Id& b2 : mb.base.objects)
        for (const Id& a : f.dom->carrier.base.objects)
          if (!mb.base.hom(b1, mb.add(f.ap(a), b2)).empty()) {
            Id r1 = find_rep(b1), r2 = find_rep(b2);
            if (r1 != r2) rep[std::max(r1, r2)] = std::min(r1, r2);
          }
    std::set<Id> classes;
    for (const Id& b : mb.base.objects) classes.insert(find_rep(b));
    ok &= check(c.copip->carrier.base.morphisms.size() == classes.size(), "copip count oracle",
                detail);
    ok &= check(find_equivalence(c.copip, catalog_module("b2@z4"), SearchBudget{}).has_value(),
                "copip equivalence", detail);
  }
  return ok;
}

// 5. Kernel/cokernel universal properties over a generated probe family.
bool criterion5(std::string& detail) {
  bool ok = true;
  std::size_t probes = 0;
  const std::size_t cap = 50;
  SearchBudget budget;
  for (const std::string& name : catalog_hom_names()) {
    if (probes >= cap) break;
    RModHom f = catalog_hom(name);
    KernelResult k = kernel(f);
    CokernelResult c = cokernel(f);

    std::vector<std::pair<RModHom, RModMor>> kernel_probes;
    kernel_probes.push_back({k.e, k.eps});
    {
      RModHom g = zero_hom(f.dom, f.dom);
      for (const RModMor& phi :
           enumerate_mod_mors(compose_mod_hom(g, f), zero_hom(g.dom, f.cod), budget)) {
        kernel_probes.push_back({g, phi});
        if (kernel_probes.size() >= 3) break;
      }
    }
    for (const auto& [g, phi] : kernel_probes) {
      if (probes >= cap) break;
      ++probes;
      FactoringResult fr = kernel_factor(k, f, g, phi);
      ok &= check(validate_mod_hom(fr.g1).all_pass(), name + ": G' invalid", detail);
      ok &= check(validate_mod_two_morphism(fr.phi1).all_pass(), name + ": phi' invalid", detail);
      RModMor lhs = vcomp(hcomp(fr.phi1, identity_mod_mor(f)), phi);
      RModMor rhs = hcomp(identity_mod_mor(fr.g1), k.eps);
      ok &= check(lhs.component == rhs.component, name + ": kernel triangle", detail);
      RModMor psi = kernel_psi(k, fr, fr.g1, fr.phi1);
      ok &= check(validate_mod_two_morphism(psi).all_pass(), name + ": psi invalid", detail);
      std::size_t satisfying = 0;
      for (const RModMor& cand : enumerate_mod_mors(fr.g1, fr.g1, budget)) {
        RModMor paste = vcomp(hcomp(cand, identity_mod_mor(k.e)), fr.phi1);
        if (paste.component == fr.phi1.component) ++satisfying;
      }
      ok &= check(satisfying == 1, name + ": psi not unique", detail);
    }

    std::vector<std::pair<RModHom, RModMor>> cokernel_probes;
    cokernel_probes.push_back({c.p, c.pi});
    {
      RModHom g = zero_hom(f.cod, f.cod);
      for (const RModMor& phi :
           enumerate_mod_mors(compose_mod_hom(f, g), zero_hom(f.dom, g.cod), budget)) {
        cokernel_probes.push_back({g, phi});
        if (cokernel_probes.size() >= 3) break;
      }
    }
    for (const auto& [g, phi] : cokernel_probes) {
      if (probes >= cap) break;
      ++probes;
      FactoringResult fr = cokernel_factor(c, f, g, phi);
      ok &= check(validate_mod_hom(fr.g1).all_pass(), name + ": coker G' invalid", detail);
      ok &= check(validate_mod_two_morphism(fr.phi1).all_pass(), name + ": coker phi' invalid",
                  detail);
      RModMor lhs = vcomp(hcomp(identity_mod_mor(f), fr.phi1), phi);
      RModMor rhs = hcomp(c.pi, identity_mod_mor(fr.g1));
      ok &= check(lhs.component == rhs.component, name + ": cokernel triangle", detail);
      RModMor psi = cokernel_psi(c, fr, fr.g1, fr.phi1);
      ok &= check(validate_mod_two_morphism(psi).all_pass(), name + ": coker psi invalid",
                  detail);
      std::size_t satisfying = 0;
      for (const RModMor& cand : enumerate_mod_mors(fr.g1, fr.g1, budget)) {
        RModMor paste = vcomp(hcomp(identity_mod_mor(c.p), cand), fr.phi1);
        if (paste.component == fr.phi1.component) ++satisfying;
      }
      ok &= check(satisfying == 1, name + ": coker psi not unique", detail);
    }
  }
  ok &= check(probes >= 16 && probes <= cap, "probe count out of range", detail);
  return ok;
}

// 6. Both factorizations are exact with the stated property flags.
bool criterion6(std::string& detail) {
  bool ok = true;
  for (const std::string& name : catalog_hom_names()) {
    RModHom f = catalog_hom(name);
    FactorizationPl fpl = factorize_pl(f, SearchBudget{});
    ok &= check(table_equal(compose_mod_hom(compose_mod_hom(fpl.e, fpl.omega), fpl.m), f),
                name + ": plain composite", detail);
    ok &= check(fpl.e_surjective && fpl.m_full && fpl.m_faithful, name + ": plain flags",
                detail);
    ok &= check(fpl.omega_witness.has_value(), name + ": plain omega", detail);
    Factorization fac = factorize(f, SearchBudget{});
    ok &= check(table_equal(compose_mod_hom(compose_mod_hom(fac.e, fac.omega), fac.m), f),
                name + ": composite", detail);
    ok &= check(fac.e_surjective && fac.e_full && fac.m_faithful, name + ": flags", detail);
    ok &= check(fac.omega_witness.has_value(), name + ": omega", detail);
  }
  return ok;
}

// 7. All four Puppe comparisons for every catalog hom in under 60 s.
bool criterion7(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (const std::string& name : catalog_hom_names()) {
    CheckReport report = puppe_check(catalog_hom(name), SearchBudget{});
    ok &= check(report.entries().size() == 4, name + ": entry count", detail);
    ok &= check(report.all_pass(), name + ": " +
                (report.all_pass() ? "" : report.failing_axioms().front()), detail);
  }
  double dt = seconds_since(start);
  ok &= check(dt < 60.0, "runtime " + std::to_string(dt) + "s over budget", detail);
  return ok;
}

// 8. End-ring tables and the representation round trip.
bool criterion8(std::string& detail) {
  bool ok = true;
  {
    EndRing e = end_ring(catalog_twogroup("d2"), SearchBudget{});
    ok &= check(e.objects.size() == 2, "End(D(Z/2)) object count", detail);
    const auto& names = e.ring->additive.base.objects;
    ok &= check(e.ring->additive.add(names[1], names[1]) == names[0] &&
                    e.ring->mul(names[1], names[1]) == names[1] &&
                    e.ring->one == names[1] && e.ring->additive.unit == names[0],
                "End(D(Z/2)) is not Z/2", detail);
  }
  {
    EndRing e = end_ring(catalog_twogroup("d3"), SearchBudget{});
    ok &= check(e.objects.size() == 3, "End(D(Z/3)) object count", detail);
    std::map<Id, int> k_of;
    const auto& names = e.ring->additive.base.objects;
    for (std::size_t i = 0; i < names.size(); ++i)
      k_of[names[i]] = std::stoi(e.objects[i].ap("1"));
    for (const Id& a : names)
      for (const Id& b : names) {
        ok &= check(k_of.at(e.ring->additive.add(a, b)) == (k_of.at(a) + k_of.at(b)) % 3,
                    "End(D(Z/3)) addition", detail);
        ok &= check(k_of.at(e.ring->mul(a, b)) == (k_of.at(a) * k_of.at(b)) % 3,
                    "End(D(Z/3)) multiplication", detail);
      }
  }
  for (const std::string& name : catalog_module_names()) {
    auto m = catalog_module(name);
    Representation rep = rep_from_module(*m, SearchBudget{});
    ok &= check(validate_ring_hom(rep.rep).all_pass(), name + ": representation invalid",
                detail);
    RModule back = module_from_rep(rep.rep, rep.end);
    bool same = back.action.obj == m->action.obj && back.action.mor == m->action.mor &&
                back.adist == m->adist && back.bdist == m->bdist && back.bassoc == m->bassoc &&
                back.iunit == m->iunit && back.zzero == m->zzero && back.carrier == m->carrier;
    ok &= check(same, name + ": round trip drifted", detail);
  }
  return ok;
}

// 9. Biproduct projection/injection identities and the d2 x d3 ~ d6 case.
bool criterion9(std::string& detail) {
  bool ok = true;
  auto names = catalog_module_names();
  for (const std::string& a : names)
    for (const std::string& b : names) {
      if (a.substr(a.find('@')) != b.substr(b.find('@'))) continue;
      auto ma = catalog_module(a);
      auto mb = catalog_module(b);
      BiproductResult bp = biproduct(ma, mb);
      bool identities =
          table_equal(compose_mod_hom(bp.i1, bp.p1), identity_mod_hom(ma)) &&
          table_equal(compose_mod_hom(bp.i2, bp.p2), identity_mod_hom(mb)) &&
          table_equal(compose_mod_hom(bp.i1, bp.p2), zero_hom(ma, mb)) &&
          table_equal(compose_mod_hom(bp.i2, bp.p1), zero_hom(mb, ma));
      ok &= check(identities, a + " x " + b + ": projection identities", detail);
    }
  BiproductResult bp = biproduct(catalog_module("d2@z6"), catalog_module("d3@z6"));
  ok &= check(find_equivalence(bp.sum, catalog_module("d6@z6"), SearchBudget{}).has_value(),
              "biproduct(d2,d3) not equivalent to d6", detail);
  return ok;
}

// 10. 2-category laws over a generated family of composable squares.
bool criterion10(std::string& detail) {
  bool ok = true;
  RModHom f84 = catalog_hom("mod2@z4");
  RModHom id4 = identity_mod_hom(f84.dom);
  RModHom id2 = identity_mod_hom(f84.cod);
  ok &= check(table_equal(compose_mod_hom(id4, f84), f84), "left unit law", detail);
  ok &= check(table_equal(compose_mod_hom(f84, id2), f84), "right unit law", detail);
  RModHom g = catalog_hom("mul2@z4");
  RModHom h = compose_mod_hom(g, f84);  // D(Z/2) → D(Z/2)
  ok &= check(table_equal(compose_mod_hom(compose_mod_hom(g, f84), h),
                          compose_mod_hom(g, compose_mod_hom(f84, h))),
              "composition associativity", detail);

  auto b2 = catalog_module("b2@z2");
  HomTwoGroupResult homs = hom_two_group(b2, b2, SearchBudget{});
  std::size_t squares = 0;
  for (const RModMor& alpha : homs.morphisms)
    for (const RModMor& alpha2 : homs.morphisms) {
      if (!table_equal(alpha.target, alpha2.source)) continue;
      for (const RModMor& beta : homs.morphisms)
        for (const RModMor& beta2 : homs.morphisms) {
          if (!table_equal(beta.target, beta2.source)) continue;
          RModMor lhs = vcomp(hcomp(alpha, beta), hcomp(alpha2, beta2));
          RModMor rhs = hcomp(vcomp(alpha, alpha2), vcomp(beta, beta2));
          ok &= check(table_equal(lhs, rhs), "exchange law", detail);
          RModMor assoc_l = vcomp(vcomp(alpha, alpha2), inverse_mod_mor(alpha2));
          RModMor assoc_r = vcomp(alpha, vcomp(alpha2, inverse_mod_mor(alpha2)));
          ok &= check(table_equal(assoc_l, assoc_r), "vertical associativity", detail);
          ++squares;
        }
    }
  ok &= check(squares >= 20, "fewer than 20 composable squares", detail);
  return ok;
}

// 11. CLI contract: byte-stable round trips, construct|validate pipeline,
// deterministic reports.
bool criterion11(std::string& detail) {
  bool ok = true;
  for (const std::string& name : {std::string("d4@z4"), std::string("b4@z4")}) {
    std::string text = serialize(to_document(*catalog_module(name)));
    ok &= check(serialize(parse(text)) == text, name + ": round trip unstable", detail);
  }
  {
    CheckReport r1 = puppe_check(catalog_hom("mod2@z4"), SearchBudget{});
    CheckReport r2 = puppe_check(catalog_hom("mod2@z4"), SearchBudget{});
    ok &= check(serialize(report_document(r1)) == serialize(report_document(r2)),
                "puppe report not deterministic", detail);
  }
  if (g_cli_path.empty()) {
    ok &= check(false, "--cli path not supplied", detail);
    return ok;
  }
  auto run = [&](const std::string& cmd) { return std::system(cmd.c_str()); };
  std::string tmp = "/tmp/picard_acceptance";
  run("mkdir -p " + tmp);
  for (const std::string& name : catalog_hom_names()) {
    std::string hom_doc = tmp + "/hom.doc";
    int rc = run(g_cli_path + " catalog " + name + " > " + hom_doc);
    ok &= check(rc == 0, name + ": catalog emission failed", detail);
    rc = run(g_cli_path + " construct kernel " + hom_doc + " 2>/dev/null | " + g_cli_path +
             " validate - > /dev/null");
    ok &= check(rc == 0, name + ": construct|validate pipeline failed", detail);
  }
  for (const std::string& what :
       {std::string("cokernel"), std::string("pip"), std::string("copip"), std::string("im1"),
        std::string("im2"), std::string("im1pl"), std::string("im2pl")}) {
    int rc = run(g_cli_path + " catalog mod2@z4 > " + tmp + "/f.doc && " + g_cli_path +
                 " construct " + what + " " + tmp + "/f.doc 2>/dev/null | " + g_cli_path +
                 " validate - > /dev/null");
    ok &= check(rc == 0, what + ": construct|validate pipeline failed", detail);
  }
  {
    int rc = run(g_cli_path + " catalog mod2@z4 > " + tmp + "/f.doc && " + g_cli_path +
                 " puppe " + tmp + "/f.doc > " + tmp + "/r1.txt && " + g_cli_path + " puppe " +
                 tmp + "/f.doc > " + tmp + "/r2.txt && cmp -s " + tmp + "/r1.txt " + tmp +
                 "/r2.txt");
    ok &= check(rc == 0, "CLI reports differ across runs", detail);
  }
  {
    int rc = run(g_cli_path + " catalog d2@z6 > " + tmp + "/a.doc && " + g_cli_path +
                 " catalog d3@z6 > " + tmp + "/b.doc; " + g_cli_path + " equiv " + tmp +
                 "/a.doc " + tmp + "/b.doc > /dev/null");
    ok &= check(WEXITSTATUS(rc) == 1, "equiv exit code for inequivalent modules", detail);
  }
  {
    int rc = run(g_cli_path + " catalog z6 | " + g_cli_path + " validate - > /dev/null");
    ok &= check(rc == 0, "ring catalog|validate pipeline", detail);
    rc = run(g_cli_path + " catalog b4 | " + g_cli_path + " validate - > /dev/null");
    ok &= check(rc == 0, "twogroup catalog|validate pipeline", detail);
    rc = run(g_cli_path + " --format json-lines validate " + tmp + "/a.doc | grep -q pass");
    ok &= check(rc == 0, "json-lines report output", detail);
    rc = run(g_cli_path + " --budget 3 equiv " + tmp + "/a.doc " + tmp + "/a.doc > /dev/null 2>&1");
    ok &= check(WEXITSTATUS(rc) == 3, "budget exit code", detail);
    rc = run(g_cli_path + " construct copip-sigma " + tmp + "/f.doc 2>/dev/null | " +
             g_cli_path + " construct root - 2>/dev/null | " + g_cli_path +
             " validate - > /dev/null");
    ok &= check(rc == 0, "copip-sigma|root|validate pipeline", detail);
  }
  return ok;
}

struct Criterion {
  int number;
  const char* summary;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) selected = std::atoi(argv[++i]);
    if (arg == "--cli" && i + 1 < argc) g_cli_path = argv[++i];
  }
  if (g_cli_path.empty()) {
    if (const char* env = std::getenv("PICARD_CLI")) g_cli_path = env;
  }

  std::vector<Criterion> criteria = {
      {1, "catalog coherence suite under 10s", criterion1},
      {2, "mutation suite with witnesses", criterion2},
      {3, "kernel/cokernel oracles certified under 1s each", criterion3},
      {4, "pip/copip oracles with independent enumerators", criterion4},
      {5, "kernel/cokernel universal properties with unique psi", criterion5},
      {6, "factorization exactness and property flags", criterion6},
      {7, "four Puppe equivalences per catalog hom under 60s", criterion7},
      {8, "End-ring tables and representation round trip", criterion8},
      {9, "biproduct identities and d2xd3 ~ d6", criterion9},
      {10, "2-category laws over 20+ composable squares", criterion10},
      {11, "CLI round trip, pipeline, determinism", criterion11},
  };

  bool all_ok = true;
  for (const Criterion& c : criteria) {
    if (selected != 0 && c.number != selected) continue;
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    std::printf("%s criterion-%d %s%s%s\n", ok ? "PASS" : "FAIL", c.number, c.summary,
                detail.empty() ? "" : ": ", detail.c_str());
    std::fflush(stdout);
    all_ok &= ok;
  }
  return all_ok ? 0 : 1;
}
