#include "picard/representation.hpp"

#include <algorithm>

#include "picard/error.hpp"
#include "picard/search.hpp"

namespace picard {

namespace {

Id padded_id(const char* stem, std::size_t i, std::size_t count) {
  std::size_t width = 1;
  for (std::size_t c = count; c >= 10; c /= 10) ++width;
  std::string digits = std::to_string(i);
  while (digits.size() < width) digits.insert(digits.begin(), '0');
  return stem + digits;
}

std::string component_key(const std::map<Id, Id>& component) {
  std::string out;
  for (const auto& [k, v] : component) {
    out += k;
    out += '>';
    out += v;
    out += ';';
  }
  return out;
}

// Pointwise sum of 2-group endomorphisms with the interchange-based F₊.
TwoGroupHom pointwise_sum(const TwoGroupHom& f, const TwoGroupHom& g) {
  const SymTwoGroup& C = f.cod;
  const FinGroupoid& gc = C.base;
  TwoGroupHom h;
  h.dom = f.dom;
  h.cod = f.cod;
  for (const Id& x : f.dom.base.objects) h.omap[x] = C.add(f.ap(x), g.ap(x));
  for (const Id& q : f.dom.base.morphisms) h.mmap[q] = C.add_m(f.ap_m(q), g.ap_m(q));
  for (const Id& x : f.dom.base.objects)
    for (const Id& y : f.dom.base.objects) {
      Id step1 = C.add_m(f.fp(x, y), g.fp(x, y));
      Id step2 = interchange(C, f.ap(x), f.ap(y), g.ap(x), g.ap(y));
      h.fplus[{x, y}] = gc.compose(step2, step1);
    }
  h.fzero = gc.compose(C.lunit_at(C.unit), C.add_m(f.fzero, g.fzero));
  return h;
}

TwoGroupHom zero_endo(const SymTwoGroup& a) {
  TwoGroupHom z;
  z.dom = a;
  z.cod = a;
  for (const Id& x : a.base.objects) z.omap[x] = a.unit;
  for (const Id& q : a.base.morphisms) z.mmap[q] = a.base.identity(a.unit);
  for (const Id& x : a.base.objects)
    for (const Id& y : a.base.objects) z.fplus[{x, y}] = a.base.inverse(a.lunit_at(a.unit));
  z.fzero = a.base.identity(a.unit);
  return z;
}

}  // namespace

const TwoGroupHom& EndRing::object_of(const Id& name) const {
  const auto& objs = ring->additive.base.objects;
  auto it = std::lower_bound(objs.begin(), objs.end(), name);
  if (it == objs.end() || *it != name)
    fail(Errc::malformed_table, "End-ring has no object " + name);
  return objects[static_cast<std::size_t>(it - objs.begin())];
}

const TwoGroupMor& EndRing::morphism_of(const Id& name) const {
  const auto& mors = ring->additive.base.morphisms;
  auto it = std::lower_bound(mors.begin(), mors.end(), name);
  if (it == mors.end() || *it != name)
    fail(Errc::malformed_table, "End-ring has no morphism " + name);
  return morphisms[static_cast<std::size_t>(it - mors.begin())];
}

EndRing end_ring(const SymTwoGroup& a, const SearchBudget& budget) {
  std::vector<TwoGroupHom> homs = enumerate_two_group_homs(a, a, budget);
  const std::size_t count = homs.size();
  std::vector<Id> names(count);
  std::map<std::string, Id> hom_id;
  for (std::size_t i = 0; i < count; ++i) {
    names[i] = padded_id("E", i, count);
    hom_id[hom_key(homs[i])] = names[i];
  }
  auto find_hom = [&](const TwoGroupHom& h) -> const Id& {
    auto it = hom_id.find(hom_key(h));
    if (it == hom_id.end())
      fail(Errc::malformed_table, "endomorphism enumeration is not closed");
    return it->second;
  };

  std::vector<TwoGroupMor> mors;
  std::vector<std::pair<std::size_t, std::size_t>> endpoints;
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      for (TwoGroupMor& t : enumerate_two_group_mors(homs[i], homs[j], budget)) {
        mors.push_back(std::move(t));
        endpoints.push_back({i, j});
      }
  std::vector<Id> mor_names(mors.size());
  std::map<std::string, Id> mor_id;
  for (std::size_t k = 0; k < mors.size(); ++k) {
    mor_names[k] = padded_id("e", k, mors.size());
    mor_id[hom_key(mors[k].source) + "#" + hom_key(mors[k].target) + "#" +
           component_key(mors[k].component)] = mor_names[k];
  }
  auto find_mor = [&](const TwoGroupHom& src, const TwoGroupHom& tgt,
                      const std::map<Id, Id>& component) -> const Id& {
    auto it = mor_id.find(hom_key(src) + "#" + hom_key(tgt) + "#" + component_key(component));
    if (it == mor_id.end())
      fail(Errc::malformed_table, "2-morphism enumeration is not closed");
    return it->second;
  };
  auto ring = std::make_shared<TwoRing>();
  SymTwoGroup& add = ring->additive;
  add.base.objects = names;
  add.base.morphisms = mor_names;
  add.base.sort_tables();
  for (std::size_t k = 0; k < mors.size(); ++k) {
    add.base.src[mor_names[k]] = names[endpoints[k].first];
    add.base.tgt[mor_names[k]] = names[endpoints[k].second];
    TwoGroupMor inv = inverse_two_morphism(mors[k]);
    add.base.inv[mor_names[k]] = find_mor(inv.source, inv.target, inv.component);
  }
  for (std::size_t i = 0; i < count; ++i) {
    TwoGroupMor idm = identity_two_morphism(homs[i]);
    add.base.id_of[names[i]] = find_mor(idm.source, idm.target, idm.component);
  }
  for (std::size_t k1 = 0; k1 < mors.size(); ++k1)
    for (std::size_t k2 = 0; k2 < mors.size(); ++k2) {
      if (endpoints[k2].second != endpoints[k1].first) continue;
      TwoGroupMor c = vcomp(mors[k2], mors[k1]);
      add.base.comp[{mor_names[k1], mor_names[k2]}] = find_mor(c.source, c.target, c.component);
    }

  const TwoGroupHom zero = zero_endo(a);
  add.unit = find_hom(zero);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      add.tensor.obj[{names[i], names[j]}] = find_hom(pointwise_sum(homs[i], homs[j]));
  for (std::size_t k1 = 0; k1 < mors.size(); ++k1)
    for (std::size_t k2 = 0; k2 < mors.size(); ++k2) {
      const TwoGroupMor& t1 = mors[k1];
      const TwoGroupMor& t2 = mors[k2];
      TwoGroupMor sum;
      sum.source = pointwise_sum(t1.source, t2.source);
      sum.target = pointwise_sum(t1.target, t2.target);
      for (const Id& x : a.base.objects)
        sum.component[x] = a.add_m(t1.component.at(x), t2.component.at(x));
      add.tensor.mor[{mor_names[k1], mor_names[k2]}] =
          find_mor(sum.source, sum.target, sum.component);
    }
  for (std::size_t i = 0; i < count; ++i) {
    const TwoGroupHom sum_zero_i = pointwise_sum(zero, homs[i]);
    const TwoGroupHom sum_i_zero = pointwise_sum(homs[i], zero);
    std::map<Id, Id> lc, rc;
    for (const Id& x : a.base.objects) {
      lc[x] = a.lunit_at(homs[i].ap(x));
      rc[x] = a.runit_at(homs[i].ap(x));
    }
    add.lunit[names[i]] = find_mor(sum_zero_i, homs[i], lc);
    add.runit[names[i]] = find_mor(sum_i_zero, homs[i], rc);
    for (std::size_t j = 0; j < count; ++j) {
      std::map<Id, Id> sc;
      for (const Id& x : a.base.objects) sc[x] = a.sym_at(homs[i].ap(x), homs[j].ap(x));
      add.sym[{names[i], names[j]}] =
          find_mor(pointwise_sum(homs[i], homs[j]), pointwise_sum(homs[j], homs[i]), sc);
      for (std::size_t k = 0; k < count; ++k) {
        std::map<Id, Id> ac;
        for (const Id& x : a.base.objects)
          ac[x] = a.assoc_at(homs[i].ap(x), homs[j].ap(x), homs[k].ap(x));
        add.assoc[{names[i], names[j], names[k]}] =
            find_mor(pointwise_sum(pointwise_sum(homs[i], homs[j]), homs[k]),
                     pointwise_sum(homs[i], pointwise_sum(homs[j], homs[k])), ac);
      }
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    std::map<Id, Id> want;
    for (const Id& x : a.base.objects) want[x] = a.dual_of(homs[i].ap(x));
    bool found = false;
    for (std::size_t j = 0; j < count && !found; ++j) {
      if (homs[j].omap != want) continue;
      TwoGroupMor candidate;
      candidate.source = pointwise_sum(homs[j], homs[i]);
      candidate.target = zero;
      for (const Id& x : a.base.objects) candidate.component[x] = a.eta_at(homs[i].ap(x));
      if (!validate_two_morphism(candidate).all_pass()) continue;
      add.dual[names[i]] = names[j];
      add.eta[names[i]] =
          find_mor(candidate.source, candidate.target, candidate.component);
      found = true;
    }
    if (!found) fail(Errc::malformed_table, "no dual found for endomorphism " + names[i]);
  }

  // Multiplicative layer: F·G = F∘G, τ·τ′ the horizontal composite.
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      ring->mult.obj[{names[i], names[j]}] = find_hom(compose_hom(homs[j], homs[i]));
  for (std::size_t k1 = 0; k1 < mors.size(); ++k1)
    for (std::size_t k2 = 0; k2 < mors.size(); ++k2) {
      TwoGroupMor prod = hcomp(mors[k2], mors[k1]);
      ring->mult.mor[{mor_names[k1], mor_names[k2]}] =
          find_mor(prod.source, prod.target, prod.component);
    }
  ring->one = find_hom(identity_hom(a));
  for (std::size_t i = 0; i < count; ++i) {
    // λ, ρ, [ ] are identity 2-morphisms: composition is strictly
    // associative and unital on tables.
    TwoGroupMor idm = identity_two_morphism(homs[i]);
    Id id_i = find_mor(idm.source, idm.target, idm.component);
    ring->mlunit[names[i]] = id_i;
    ring->mrunit[names[i]] = id_i;
    for (std::size_t j = 0; j < count; ++j)
      for (std::size_t k = 0; k < count; ++k) {
        TwoGroupHom triple = compose_hom(homs[k], compose_hom(homs[j], homs[i]));
        TwoGroupMor idt = identity_two_morphism(triple);
        ring->massoc[{names[i], names[j], names[k]}] =
            find_mor(idt.source, idt.target, idt.component);
      }
  }
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      for (std::size_t k = 0; k < count; ++k) {
        // ldist component at x is F₊(G x, G′ x); rdist is the identity.
        const TwoGroupHom& F = homs[i];
        const TwoGroupHom& G = homs[j];
        const TwoGroupHom& Gp = homs[k];
        TwoGroupHom src_l = compose_hom(pointwise_sum(G, Gp), F);
        TwoGroupHom tgt_l = pointwise_sum(compose_hom(G, F), compose_hom(Gp, F));
        std::map<Id, Id> lcomp;
        for (const Id& x : a.base.objects) lcomp[x] = F.fp(G.ap(x), Gp.ap(x));
        ring->ldist[{names[i], names[j], names[k]}] = find_mor(src_l, tgt_l, lcomp);

        TwoGroupHom src_r = compose_hom(Gp, pointwise_sum(F, G));
        TwoGroupHom tgt_r = pointwise_sum(compose_hom(Gp, F), compose_hom(Gp, G));
        std::map<Id, Id> rcomp;
        for (const Id& x : a.base.objects)
          rcomp[x] = a.base.identity(a.add(F.ap(Gp.ap(x)), G.ap(Gp.ap(x))));
        ring->rdist[{names[i], names[j], names[k]}] = find_mor(src_r, tgt_r, rcomp);
      }

  CheckReport post = validate_two_ring(*ring);
  if (!post.all_pass())
    fail(Errc::malformed_table,
         "End-ring failed validation: " + post.failing_axioms().front());

  EndRing out;
  out.ring = std::move(ring);
  out.carrier = a;
  // Re-align provenance with the sorted base tables.
  std::map<Id, TwoGroupHom> by_name;
  for (std::size_t i = 0; i < count; ++i) by_name[names[i]] = homs[i];
  for (const Id& name : out.ring->additive.base.objects) out.objects.push_back(by_name.at(name));
  std::map<Id, TwoGroupMor> mor_by_name;
  for (std::size_t k = 0; k < mors.size(); ++k) mor_by_name[mor_names[k]] = mors[k];
  for (const Id& name : out.ring->additive.base.morphisms)
    out.morphisms.push_back(mor_by_name.at(name));
  return out;
}

Representation rep_from_module(const RModule& m, const SearchBudget& budget) {
  Representation out;
  out.end = end_ring(m.carrier, budget);
  const EndRing& end = out.end;
  const SymTwoGroup& A = m.carrier;
  const FinGroupoid& ga = A.base;
  const FinGroupoid& gr = m.ring->additive.base;

  std::map<std::string, Id> hom_id;
  {
    const auto& names = end.ring->additive.base.objects;
    for (std::size_t i = 0; i < names.size(); ++i) hom_id[hom_key(end.objects[i])] = names[i];
  }
  std::map<std::string, Id> mor_id;
  {
    const auto& names = end.ring->additive.base.morphisms;
    for (std::size_t i = 0; i < names.size(); ++i) {
      const TwoGroupMor& t = end.morphisms[i];
      mor_id[hom_key(t.source) + "#" + hom_key(t.target) + "#" + component_key(t.component)] =
          names[i];
    }
  }

  auto endo_of = [&](const Id& r) {
    TwoGroupHom f;
    f.dom = A;
    f.cod = A;
    for (const Id& x : ga.objects) f.omap[x] = m.act(r, x);
    for (const Id& q : ga.morphisms) f.mmap[q] = m.act_m(gr.identity(r), q);
    for (const Id& x : ga.objects)
      for (const Id& y : ga.objects) f.fplus[{x, y}] = m.adist_at(r, x, y);
    f.fzero = m.zzero_at(r);
    return f;
  };
  auto find_hom = [&](const TwoGroupHom& h) -> const Id& {
    auto it = hom_id.find(hom_key(h));
    if (it == hom_id.end())
      fail(Errc::budget_exceeded, "endomorphism enumeration does not contain the action image");
    return it->second;
  };
  auto find_mor = [&](const TwoGroupHom& src, const TwoGroupHom& tgt,
                      const std::map<Id, Id>& component) -> const Id& {
    auto it = mor_id.find(hom_key(src) + "#" + hom_key(tgt) + "#" + component_key(component));
    if (it == mor_id.end())
      fail(Errc::budget_exceeded, "2-morphism enumeration does not contain the action image");
    return it->second;
  };

  TwoRingHom& rep = out.rep;
  rep.dom = m.ring;
  rep.cod = end.ring;
  std::map<Id, TwoGroupHom> endo;
  for (const Id& r : gr.objects) {
    endo[r] = endo_of(r);
    rep.omap[r] = find_hom(endo.at(r));
  }
  for (const Id& p : gr.morphisms) {
    const Id& r1 = gr.source(p);
    const Id& r2 = gr.target(p);
    std::map<Id, Id> component;
    for (const Id& x : ga.objects) component[x] = m.act_m(p, ga.identity(x));
    rep.mmap[p] = find_mor(endo.at(r1), endo.at(r2), component);
  }
  for (const Id& r : gr.objects)
    for (const Id& s : gr.objects) {
      std::map<Id, Id> bcomp;
      for (const Id& x : ga.objects) bcomp[x] = m.bdist_at(r, s, x);
      rep.fplus[{r, s}] = find_mor(endo.at(m.ring->additive.add(r, s)),
                                   pointwise_sum(endo.at(r), endo.at(s)), bcomp);
      std::map<Id, Id> mcomp;
      for (const Id& x : ga.objects) mcomp[x] = m.bassoc_at(r, s, x);
      rep.fdot[{r, s}] = find_mor(endo.at(m.ring->mul(r, s)),
                                  compose_hom(endo.at(s), endo.at(r)), mcomp);
    }
  {
    std::map<Id, Id> icomp;
    for (const Id& x : ga.objects) icomp[x] = m.iunit_at(x);
    rep.fone = find_mor(endo.at(m.ring->one), identity_hom(A), icomp);
  }
  // F₀ is the unique 2-morphism E_0 ⇒ 0 compatible with F₊; found by
  // trying the enumerated candidates in canonical order.
  {
    const Id zero_name = end.ring->additive.unit;
    const Id e0_name = rep.omap.at(m.ring->additive.unit);
    bool found = false;
    const FinGroupoid& ge = end.ring->additive.base;
    for (const Id& cand : ge.hom(e0_name, zero_name)) {
      rep.fzero = cand;
      if (validate_ring_hom(rep).all_pass()) {
        found = true;
        break;
      }
    }
    if (!found) fail(Errc::malformed_table, "representation has no valid unit constraint");
  }
  return out;
}

RModule module_from_rep(const TwoRingHom& f, const EndRing& end) {
  if (!f.cod || !(*f.cod == *end.ring))
    fail(Errc::not_endring, "codomain is not the provided End-ring");
  RModule out;
  out.ring = f.dom;
  out.carrier = end.carrier;
  const SymTwoGroup& A = end.carrier;
  const FinGroupoid& ga = A.base;
  const FinGroupoid& gr = f.dom->additive.base;

  auto endo = [&](const Id& r) -> const TwoGroupHom& { return end.object_of(f.ap(r)); };
  auto mor = [&](const Id& name) -> const TwoGroupMor& { return end.morphism_of(name); };

  for (const Id& r : gr.objects) {
    const TwoGroupHom& e = endo(r);
    for (const Id& x : ga.objects) out.action.obj[{r, x}] = e.ap(x);
    for (const Id& x : ga.objects)
      for (const Id& y : ga.objects) out.adist[{r, x, y}] = e.fp(x, y);
    out.zzero[r] = e.fzero;
  }
  for (const Id& p : gr.morphisms) {
    const TwoGroupMor& t = mor(f.ap_m(p));
    const TwoGroupHom& src = endo(gr.source(p));
    for (const Id& q : ga.morphisms)
      out.action.mor[{p, q}] = ga.compose(t.component.at(ga.target(q)), src.ap_m(q));
  }
  for (const Id& r : gr.objects)
    for (const Id& s : gr.objects) {
      const TwoGroupMor& b = mor(f.fp(r, s));
      const TwoGroupMor& ba = mor(f.fd(r, s));
      for (const Id& x : ga.objects) {
        out.bdist[{r, s, x}] = b.component.at(x);
        out.bassoc[{r, s, x}] = ba.component.at(x);
      }
    }
  {
    const TwoGroupMor& i = mor(f.fone);
    for (const Id& x : ga.objects) out.iunit[x] = i.component.at(x);
  }
  CheckReport post = validate_module(out);
  if (!post.all_pass())
    fail(Errc::malformed_table,
         "module extracted from representation failed validation: " +
             post.failing_axioms().front());
  return out;
}

}  // namespace picard
