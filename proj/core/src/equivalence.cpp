#include "picard/equivalence.hpp"

#include <algorithm>

#include "picard/error.hpp"
#include "picard/search.hpp"

namespace picard {

Verdict is_faithful(const RModHom& f) {
  const FinGroupoid& ga = f.dom->carrier.base;
  for (const Id& m : ga.morphisms)
    for (const Id& n : ga.morphisms) {
      if (m >= n) continue;
      if (ga.source(m) != ga.source(n) || ga.target(m) != ga.target(n)) continue;
      if (f.ap_m(m) == f.ap_m(n)) return Verdict{false, {m, n}};
    }
  return Verdict{true, {}};
}

Verdict is_full(const RModHom& f) {
  const FinGroupoid& ga = f.dom->carrier.base;
  const FinGroupoid& gb = f.cod->carrier.base;
  for (const Id& x : ga.objects)
    for (const Id& y : ga.objects) {
      std::vector<Id> image;
      for (const Id& m : ga.hom(x, y)) image.push_back(f.ap_m(m));
      std::sort(image.begin(), image.end());
      for (const Id& g : gb.hom(f.ap(x), f.ap(y)))
        if (!std::binary_search(image.begin(), image.end(), g))
          return Verdict{false, {x, y, g}};
    }
  return Verdict{true, {}};
}

Verdict is_essentially_surjective(const RModHom& f) {
  const FinGroupoid& ga = f.dom->carrier.base;
  const FinGroupoid& gb = f.cod->carrier.base;
  for (const Id& y : gb.objects) {
    bool hit = false;
    for (const Id& x : ga.objects)
      if (!gb.hom(f.ap(x), y).empty()) {
        hit = true;
        break;
      }
    if (!hit) return Verdict{false, {y}};
  }
  return Verdict{true, {}};
}

Fingerprint invariants_fingerprint(const RModule& m) {
  Fingerprint fp;
  const FinGroupoid& g = m.carrier.base;
  auto classes = iso_classes(g);
  fp.pi0 = classes.size();
  fp.pi1 = automorphisms(g, m.carrier.unit).size();
  for (const auto& cls : classes)
    fp.classes.push_back(automorphisms(g, cls.front()).size());
  std::sort(fp.classes.begin(), fp.classes.end());
  return fp;
}

std::string Fingerprint::to_string() const {
  std::string out = "pi0=" + std::to_string(pi0) + " pi1=" + std::to_string(pi1) + " classes=";
  for (std::size_t aut : classes) out += "(" + std::to_string(aut) + ")";
  return out;
}

namespace {

// Quasi-inverse data for a hom already known to be an equivalence: for each
// object y of the codomain a chosen preimage object and iso u_y : F(G y) → y.
struct QuasiInverse {
  RModHom back;
  std::map<Id, Id> counit_component;
};

Id preimage_of(const RModHom& f, const Id& x, const Id& y, const Id& g) {
  const FinGroupoid& ga = f.dom->carrier.base;
  for (const Id& m : ga.hom(x, y))
    if (f.ap_m(m) == g) return m;
  fail(Errc::malformed_table, "no preimage under a full functor");
}

QuasiInverse build_quasi_inverse(const RModHom& f) {
  const RModule& DM = *f.dom;
  const RModule& CM = *f.cod;
  const SymTwoGroup& M = DM.carrier;
  const SymTwoGroup& N = CM.carrier;
  const FinGroupoid& ga = M.base;
  const FinGroupoid& gb = N.base;
  const FinGroupoid& gr = DM.ring->additive.base;

  QuasiInverse q;
  q.back.dom = f.cod;
  q.back.cod = f.dom;
  for (const Id& y : gb.objects) {
    bool found = false;
    for (const Id& x : ga.objects) {
      auto isos = gb.hom(f.ap(x), y);
      if (isos.empty()) continue;
      q.back.omap[y] = x;
      q.counit_component[y] = isos.front();
      found = true;
      break;
    }
    if (!found) fail(Errc::malformed_table, "not essentially surjective");
  }
  auto u = [&](const Id& y) -> const Id& { return q.counit_component.at(y); };
  for (const Id& g : gb.morphisms) {
    const Id& y1 = gb.source(g);
    const Id& y2 = gb.target(g);
    Id conj = gb.compose_path({u(y1), g, gb.inverse(u(y2))});
    q.back.mmap[g] = preimage_of(f, q.back.omap.at(y1), q.back.omap.at(y2), conj);
  }
  for (const Id& y1 : gb.objects)
    for (const Id& y2 : gb.objects) {
      const Id& g1 = q.back.omap.at(y1);
      const Id& g2 = q.back.omap.at(y2);
      const Id& gy12 = q.back.omap.at(N.add(y1, y2));
      Id img = gb.compose_path({u(N.add(y1, y2)),
                                N.add_m(gb.inverse(u(y1)), gb.inverse(u(y2))),
                                gb.inverse(f.fp(g1, g2))});
      q.back.fplus[{y1, y2}] = preimage_of(f, gy12, M.add(g1, g2), img);
    }
  {
    Id img = gb.compose(gb.inverse(f.fzero), u(N.unit));
    q.back.fzero = preimage_of(f, q.back.omap.at(N.unit), M.unit, img);
  }
  for (const Id& r : gr.objects)
    for (const Id& y : gb.objects) {
      const Id& gy = q.back.omap.at(y);
      const Id& gry = q.back.omap.at(CM.act(r, y));
      Id img = gb.compose_path({u(CM.act(r, y)), CM.act_m(gr.identity(r), gb.inverse(u(y))),
                                gb.inverse(f.f2(r, gy))});
      q.back.ftwo[{r, y}] = preimage_of(f, gry, DM.act(r, gy), img);
    }
  return q;
}

}  // namespace

std::optional<EquivalenceWitness> find_equivalence(std::shared_ptr<const RModule> m,
                                                   std::shared_ptr<const RModule> n,
                                                   const SearchBudget& budget) {
  if (!same_ring(*m, *n)) fail(Errc::ring_mismatch, "find_equivalence over distinct rings");
  if (!(invariants_fingerprint(*m) == invariants_fingerprint(*n))) return std::nullopt;

  std::optional<RModHom> forth;
  for_each_mod_hom(m, n, budget, true, [&](const RModHom& h) {
    if (!is_faithful(h).holds || !is_full(h).holds || !is_essentially_surjective(h).holds)
      return true;
    forth = h;
    return false;
  });
  if (!forth) return std::nullopt;

  QuasiInverse q = build_quasi_inverse(*forth);
  EquivalenceWitness w;
  w.forth = *forth;
  w.back = q.back;

  w.counit.source = compose_mod_hom(q.back, *forth);
  w.counit.target = identity_mod_hom(n);
  w.counit.component = q.counit_component;

  w.unit.source = compose_mod_hom(*forth, q.back);
  w.unit.target = identity_mod_hom(m);
  for (const Id& x : m->carrier.base.objects) {
    Id y = forth->ap(x);
    w.unit.component[x] = preimage_of(*forth, q.back.omap.at(y), x, q.counit_component.at(y));
  }

  if (!validate_mod_hom(w.back).all_pass() || !validate_mod_two_morphism(w.unit).all_pass() ||
      !validate_mod_two_morphism(w.counit).all_pass())
    fail(Errc::malformed_table, "equivalence witness failed validation");
  return w;
}

}  // namespace picard
