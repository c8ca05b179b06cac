#include "picard/constructions.hpp"

#include <algorithm>

#include "picard/error.hpp"
#include "picard/search.hpp"

namespace picard {

namespace {

template <typename M, typename K>
const typename M::mapped_type* lookup(const M& m, const K& key) {
  auto it = m.find(key);
  return it == m.end() ? nullptr : &it->second;
}

void require_zero_boundary(const RModMor& alpha) {
  RModHom z = zero_hom(alpha.source.dom, alpha.source.cod);
  if (!table_equal(alpha.source, z) || !table_equal(alpha.target, z))
    fail(Errc::boundary, "2-morphism is not between the zero homs");
}

}  // namespace

KernelResult kernel(const RModHom& f) {
  const RModule& A = *f.dom;
  const RModule& B = *f.cod;
  const SymTwoGroup& MA = A.carrier;
  const SymTwoGroup& MB = B.carrier;
  const FinGroupoid& ga = MA.base;
  const FinGroupoid& gb = MB.base;
  const FinGroupoid& gr = A.ring->additive.base;

  KernelResult out;
  auto mod = std::make_shared<RModule>();
  mod->ring = A.ring;
  SymTwoGroup& C = mod->carrier;

  std::map<IdPair, Id> obj_id;
  for (const Id& x : ga.objects)
    for (const Id& a : gb.hom(f.ap(x), MB.unit)) {
      Id id = pair_id(x, a);
      C.base.objects.push_back(id);
      obj_id[{x, a}] = id;
      out.provenance[id] = {x, a};
    }
  auto pobj = [&](const Id& x, const Id& a) -> const Id& {
    const Id* v = lookup(obj_id, IdPair{x, a});
    if (!v) fail(Errc::malformed_table, "kernel object (" + x + ", " + a + ") missing");
    return *v;
  };
  auto x_of = [&](const Id& o) -> const Id& { return out.provenance.at(o).first; };
  auto a_of = [&](const Id& o) -> const Id& { return out.provenance.at(o).second; };

  // Morphism (q, a) : (src q, a) → (tgt q, a∘F(q)⁻¹).
  std::map<IdPair, Id> mor_id;
  std::map<Id, IdPair> mor_prov;
  for (const Id& q : ga.morphisms)
    for (const Id& a : gb.hom(f.ap(ga.source(q)), MB.unit)) {
      Id id = pair_id(q, a);
      C.base.morphisms.push_back(id);
      mor_id[{q, a}] = id;
      mor_prov[id] = {q, a};
    }
  auto pmor = [&](const Id& q, const Id& a) -> const Id& {
    const Id* v = lookup(mor_id, IdPair{q, a});
    if (!v) fail(Errc::malformed_table, "kernel morphism (" + q + ", " + a + ") missing");
    return *v;
  };
  C.base.sort_tables();
  for (const auto& [id, qa] : mor_prov) {
    const Id& q = qa.first;
    const Id& a = qa.second;
    C.base.src[id] = pobj(ga.source(q), a);
    C.base.tgt[id] = pobj(ga.target(q), gb.compose(a, gb.inverse(f.ap_m(q))));
    C.base.inv[id] = pmor(ga.inverse(q), gb.compose(a, gb.inverse(f.ap_m(q))));
  }
  for (const Id& o : C.base.objects) C.base.id_of[o] = pmor(ga.identity(x_of(o)), a_of(o));
  for (const auto& [m1, qa1] : mor_prov)
    for (const auto& [m2, qa2] : mor_prov) {
      if (C.base.tgt.at(m1) != C.base.src.at(m2)) continue;
      C.base.comp[{m2, m1}] = pmor(ga.compose(qa2.first, qa1.first), qa1.second);
    }

  C.unit = pobj(MA.unit, f.fzero);
  for (const Id& o1 : C.base.objects)
    for (const Id& o2 : C.base.objects) {
      Id value = gb.compose_path(
          {f.fp(x_of(o1), x_of(o2)), MB.add_m(a_of(o1), a_of(o2)), MB.lunit_at(MB.unit)});
      C.tensor.obj[{o1, o2}] = pobj(MA.add(x_of(o1), x_of(o2)), value);
    }
  for (const auto& [m1, qa1] : mor_prov)
    for (const auto& [m2, qa2] : mor_prov) {
      const Id& s = C.tensor.obj.at({C.base.src.at(m1), C.base.src.at(m2)});
      C.tensor.mor[{m1, m2}] = pmor(MA.add_m(qa1.first, qa2.first), a_of(s));
    }
  for (const Id& o1 : C.base.objects) {
    const Id& x1 = x_of(o1);
    C.lunit[o1] = pmor(MA.lunit_at(x1), a_of(C.tensor.obj.at({C.unit, o1})));
    C.runit[o1] = pmor(MA.runit_at(x1), a_of(C.tensor.obj.at({o1, C.unit})));
    for (const Id& o2 : C.base.objects) {
      const Id& x2 = x_of(o2);
      C.sym[{o1, o2}] = pmor(MA.sym_at(x1, x2), a_of(C.tensor.obj.at({o1, o2})));
      for (const Id& o3 : C.base.objects) {
        const Id& left = C.tensor.obj.at({C.tensor.obj.at({o1, o2}), o3});
        C.assoc[{o1, o2, o3}] = pmor(MA.assoc_at(x1, x2, x_of(o3)), a_of(left));
      }
    }
  }
  // Dual (X, a)* = (X*, a*) with a* the unique candidate making η_X a
  // kernel morphism into (0, F₀).
  for (const Id& o : C.base.objects) {
    const Id& x = x_of(o);
    const Id& a = a_of(o);
    const Id xd = MA.dual_of(x);
    Id want = gb.compose(f.fzero, f.ap_m(MA.eta_at(x)));
    bool found = false;
    for (const Id& cand : gb.hom(f.ap(xd), MB.unit)) {
      Id got = gb.compose_path({f.fp(xd, x), MB.add_m(cand, a), MB.lunit_at(MB.unit)});
      if (got == want) {
        C.dual[o] = pobj(xd, cand);
        C.eta[o] = pmor(MA.eta_at(x), got);
        found = true;
        break;
      }
    }
    if (!found) fail(Errc::malformed_table, "no kernel dual for " + o);
  }
  for (const Id& r : gr.objects)
    for (const Id& o : C.base.objects) {
      Id value = gb.compose_path({f.f2(r, x_of(o)), B.act_m(gr.identity(r), a_of(o)),
                                  B.zzero_at(r)});
      mod->action.obj[{r, o}] = pobj(A.act(r, x_of(o)), value);
    }
  for (const Id& p : gr.morphisms)
    for (const auto& [m, qa] : mor_prov) {
      const Id& source = mod->action.obj.at({gr.source(p), C.base.src.at(m)});
      mod->action.mor[{p, m}] = pmor(A.act_m(p, qa.first), a_of(source));
    }
  for (const Id& r : gr.objects) {
    mod->zzero[r] = pmor(A.zzero_at(r), a_of(mod->action.obj.at({r, C.unit})));
    for (const Id& o1 : C.base.objects) {
      for (const Id& o2 : C.base.objects) {
        const Id& source = mod->action.obj.at({r, C.tensor.obj.at({o1, o2})});
        mod->adist[{r, o1, o2}] = pmor(A.adist_at(r, x_of(o1), x_of(o2)), a_of(source));
      }
      for (const Id& s : gr.objects) {
        const Id& bsrc = mod->action.obj.at({A.ring->additive.add(r, s), o1});
        mod->bdist[{r, s, o1}] = pmor(A.bdist_at(r, s, x_of(o1)), a_of(bsrc));
        const Id& csrc = mod->action.obj.at({A.ring->mul(r, s), o1});
        mod->bassoc[{r, s, o1}] = pmor(A.bassoc_at(r, s, x_of(o1)), a_of(csrc));
      }
    }
  }
  for (const Id& o : C.base.objects) {
    const Id& isrc = mod->action.obj.at({A.ring->one, o});
    mod->iunit[o] = pmor(A.iunit_at(x_of(o)), a_of(isrc));
  }

  out.ker = mod;
  out.e.dom = mod;
  out.e.cod = f.dom;
  for (const Id& o : C.base.objects) out.e.omap[o] = x_of(o);
  for (const auto& [m, qa] : mor_prov) out.e.mmap[m] = qa.first;
  for (const Id& o1 : C.base.objects)
    for (const Id& o2 : C.base.objects)
      out.e.fplus[{o1, o2}] = ga.identity(MA.add(x_of(o1), x_of(o2)));
  out.e.fzero = ga.identity(MA.unit);
  for (const Id& r : gr.objects)
    for (const Id& o : C.base.objects)
      out.e.ftwo[{r, o}] = ga.identity(A.act(r, x_of(o)));

  out.eps.source = compose_mod_hom(out.e, f);
  out.eps.target = zero_hom(mod, f.cod);
  for (const Id& o : C.base.objects) out.eps.component[o] = a_of(o);
  return out;
}

FactoringResult kernel_factor(const KernelResult& k, const RModHom& f, const RModHom& g,
                              const RModMor& phi) {
  if (!table_equal(phi.source, compose_mod_hom(g, f)) ||
      !table_equal(phi.target, zero_hom(g.dom, f.cod)))
    fail(Errc::boundary, "phi is not F∘G ⇒ 0");
  const RModule& K = *g.dom;
  const FinGroupoid& gk = K.carrier.base;
  const FinGroupoid& gr = K.ring->additive.base;

  FactoringResult out;
  out.g1.dom = g.dom;
  out.g1.cod = k.ker;
  for (const Id& x : gk.objects) out.g1.omap[x] = pair_id(g.ap(x), phi.component.at(x));
  for (const Id& q : gk.morphisms)
    out.g1.mmap[q] = pair_id(g.ap_m(q), phi.component.at(gk.source(q)));
  for (const Id& x : gk.objects)
    for (const Id& y : gk.objects)
      out.g1.fplus[{x, y}] =
          pair_id(g.fp(x, y), phi.component.at(K.carrier.add(x, y)));
  out.g1.fzero = pair_id(g.fzero, phi.component.at(K.carrier.unit));
  for (const Id& r : gr.objects)
    for (const Id& x : gk.objects)
      out.g1.ftwo[{r, x}] = pair_id(g.f2(r, x), phi.component.at(K.act(r, x)));

  out.phi1.source = compose_mod_hom(out.g1, k.e);
  out.phi1.target = g;
  const FinGroupoid& gq = g.cod->carrier.base;
  for (const Id& x : gk.objects) out.phi1.component[x] = gq.identity(g.ap(x));
  return out;
}

RModMor kernel_psi(const KernelResult& k, const FactoringResult& fr, const RModHom& g2,
                   const RModMor& phi2) {
  RModMor psi;
  psi.source = g2;
  psi.target = fr.g1;
  for (const Id& x : g2.dom->carrier.base.objects)
    psi.component[x] = pair_id(phi2.component.at(x), k.provenance.at(g2.ap(x)).second);
  return psi;
}

Id CokernelResult::class_of_raw(const Id& b2, const Id& f, const Id& a) const {
  const Id* v = lookup(raw_class, tuple_id({b2, f, a}));
  if (!v) fail(Errc::malformed_table, "unknown raw cokernel morphism");
  return *v;
}

Id CokernelResult::class_of(const RModHom& f, const Id& g) const {
  const FinGroupoid& gb = f.cod->carrier.base;
  const SymTwoGroup& MB = f.cod->carrier;
  const Id& b2 = gb.target(g);
  Id raw = gb.compose_path(
      {g, gb.inverse(MB.runit_at(b2)), MB.add_m(gb.identity(b2), gb.inverse(f.fzero))});
  return class_of_raw(b2, raw, f.dom->carrier.unit);
}

CokernelResult cokernel(const RModHom& f) {
  const RModule& A = *f.dom;
  const RModule& B = *f.cod;
  const SymTwoGroup& MA = A.carrier;
  const SymTwoGroup& MB = B.carrier;
  const FinGroupoid& ga = MA.base;
  const FinGroupoid& gb = MB.base;
  const FinGroupoid& gr = A.ring->additive.base;

  // Raw groupoid: morphisms are triples (B2, f0, A0) with f0 : B1 → B2+F(A0).
  FinGroupoid raw;
  raw.objects = gb.objects;
  std::map<Id, std::array<Id, 3>> raw_prov;
  for (const Id& b2 : gb.objects)
    for (const Id& a0 : ga.objects) {
      const Id target = MB.add(b2, f.ap(a0));
      for (const Id& f0 : gb.morphisms) {
        if (gb.target(f0) != target) continue;
        Id id = tuple_id({b2, f0, a0});
        raw.morphisms.push_back(id);
        raw_prov[id] = {b2, f0, a0};
        raw.src[id] = gb.source(f0);
        raw.tgt[id] = b2;
      }
    }
  raw.sort_tables();
  auto raw_of = [&](const Id& b2, const Id& f0, const Id& a0) -> Id {
    Id id = tuple_id({b2, f0, a0});
    if (!raw_prov.count(id)) fail(Errc::malformed_table, "raw cokernel morphism missing " + id);
    return id;
  };
  // p_F on plain morphisms, as a raw triple.
  auto praw = [&](const Id& g) -> Id {
    const Id& b2 = gb.target(g);
    Id f0 = gb.compose_path(
        {g, gb.inverse(MB.runit_at(b2)), MB.add_m(gb.identity(b2), gb.inverse(f.fzero))});
    return raw_of(b2, f0, MA.unit);
  };
  for (const Id& b : gb.objects) raw.id_of[b] = praw(gb.identity(b));
  for (const auto& [id, t] : raw_prov) {
    const Id& b2 = t[0];
    const Id& f0 = t[1];
    const Id& a0 = t[2];
    const Id& b1 = raw.src.at(id);
    // f* : B2 → B1 + F(A0*) through η'_{A0} : A0+A0* → 0.
    const Id a0d = MA.dual_of(a0);
    Id eta_flip = ga.compose(MA.eta_at(a0), MA.sym_at(a0, a0d));
    Id fstar = gb.compose_path(
        {gb.inverse(MB.runit_at(b2)), MB.add_m(gb.identity(b2), gb.inverse(f.fzero)),
         MB.add_m(gb.identity(b2), gb.inverse(f.ap_m(eta_flip))),
         MB.add_m(gb.identity(b2), f.fp(a0, a0d)),
         gb.inverse(MB.assoc_at(b2, f.ap(a0), f.ap(a0d))),
         MB.add_m(gb.inverse(f0), gb.identity(f.ap(a0d)))});
    raw.inv[id] = raw_of(b1, fstar, a0d);
  }
  for (const auto& [m1, t1] : raw_prov)
    for (const auto& [m2, t2] : raw_prov) {
      // m2 ∘ m1 defined when tgt(m1) = src(m2).
      if (raw.tgt.at(m1) != raw.src.at(m2)) continue;
      const Id& b3 = t2[0];
      Id comp = gb.compose_path(
          {t1[1], MB.add_m(t2[1], gb.identity(f.ap(t1[2]))),
           MB.assoc_at(b3, f.ap(t2[2]), f.ap(t1[2])),
           MB.add_m(gb.identity(b3), MB.sym_at(f.ap(t2[2]), f.ap(t1[2]))),
           MB.add_m(gb.identity(b3), gb.inverse(f.fp(t1[2], t2[2])))});
      raw.comp[{m2, m1}] = raw_of(b3, comp, MA.add(t1[2], t2[2]));
    }

  // Identify (B2,f0,A0) ~ (B2,f0',A0') via α : A0 → A0'.
  MorRelation rel;
  for (const auto& [m1, t1] : raw_prov)
    for (const auto& [m2, t2] : raw_prov) {
      if (m1 >= m2) continue;
      if (t1[0] != t2[0] || raw.src.at(m1) != raw.src.at(m2)) continue;
      bool related = false;
      for (const Id& alpha : ga.hom(t1[2], t2[2])) {
        Id moved = gb.compose(MB.add_m(gb.identity(t1[0]), f.ap_m(alpha)), t1[1]);
        if (moved == t2[1]) {
          related = true;
          break;
        }
      }
      if (related) rel.pairs.push_back({m1, m2});
    }
  QuotientResult q = quotient_morphisms(raw, rel);

  CokernelResult out;
  out.raw_class = q.projection.mmap;
  for (const Id& rep : q.quotient.morphisms) out.provenance[rep] = raw_prov.at(rep);
  auto cls = [&](const Id& raw_id) -> const Id& { return out.raw_class.at(raw_id); };

  auto mod = std::make_shared<RModule>();
  mod->ring = A.ring;
  SymTwoGroup& C = mod->carrier;
  C.base = q.quotient;
  C.unit = MB.unit;
  for (const Id& b1 : gb.objects)
    for (const Id& b2 : gb.objects) C.tensor.obj[{b1, b2}] = MB.add(b1, b2);
  for (const Id& m1 : C.base.morphisms)
    for (const Id& m2 : C.base.morphisms) {
      const auto& t1 = out.provenance.at(m1);
      const auto& t2 = out.provenance.at(m2);
      Id fs = gb.compose_path(
          {MB.add_m(t1[1], t2[1]),
           interchange(MB, t1[0], f.ap(t1[2]), t2[0], f.ap(t2[2])),
           MB.add_m(gb.identity(MB.add(t1[0], t2[0])), gb.inverse(f.fp(t1[2], t2[2])))});
      C.tensor.mor[{m1, m2}] =
          cls(raw_of(MB.add(t1[0], t2[0]), fs, MA.add(t1[2], t2[2])));
    }
  for (const Id& b1 : gb.objects) {
    C.lunit[b1] = cls(praw(MB.lunit_at(b1)));
    C.runit[b1] = cls(praw(MB.runit_at(b1)));
    C.dual[b1] = MB.dual_of(b1);
    C.eta[b1] = cls(praw(MB.eta_at(b1)));
    for (const Id& b2 : gb.objects) {
      C.sym[{b1, b2}] = cls(praw(MB.sym_at(b1, b2)));
      for (const Id& b3 : gb.objects)
        C.assoc[{b1, b2, b3}] = cls(praw(MB.assoc_at(b1, b2, b3)));
    }
  }
  for (const Id& r : gr.objects)
    for (const Id& b : gb.objects) mod->action.obj[{r, b}] = B.act(r, b);
  for (const Id& p : gr.morphisms)
    for (const Id& m : C.base.morphisms) {
      const auto& t = out.provenance.at(m);
      const Id& r2 = gr.target(p);
      Id fs = gb.compose_path(
          {B.act_m(p, t[1]), B.adist_at(r2, t[0], f.ap(t[2])),
           MB.add_m(gb.identity(B.act(r2, t[0])), gb.inverse(f.f2(r2, t[2])))});
      mod->action.mor[{p, m}] = cls(raw_of(B.act(r2, t[0]), fs, A.act(r2, t[2])));
    }
  for (const Id& r : gr.objects) {
    mod->zzero[r] = cls(praw(B.zzero_at(r)));
    for (const Id& b1 : gb.objects) {
      for (const Id& b2 : gb.objects)
        mod->adist[{r, b1, b2}] = cls(praw(B.adist_at(r, b1, b2)));
      for (const Id& s : gr.objects) {
        mod->bdist[{r, s, b1}] = cls(praw(B.bdist_at(r, s, b1)));
        mod->bassoc[{r, s, b1}] = cls(praw(B.bassoc_at(r, s, b1)));
      }
    }
  }
  for (const Id& b : gb.objects) mod->iunit[b] = cls(praw(B.iunit_at(b)));

  out.coker = mod;
  out.p.dom = f.cod;
  out.p.cod = mod;
  for (const Id& b : gb.objects) out.p.omap[b] = b;
  for (const Id& g : gb.morphisms) out.p.mmap[g] = cls(praw(g));
  for (const Id& b1 : gb.objects)
    for (const Id& b2 : gb.objects)
      out.p.fplus[{b1, b2}] = C.base.identity(MB.add(b1, b2));
  out.p.fzero = C.base.identity(MB.unit);
  for (const Id& r : gr.objects)
    for (const Id& b : gb.objects) out.p.ftwo[{r, b}] = C.base.identity(B.act(r, b));

  out.pi.source = compose_mod_hom(f, out.p);
  out.pi.target = zero_hom(f.dom, mod);
  for (const Id& x : ga.objects) {
    Id braw = gb.inverse(MB.lunit_at(f.ap(x)));
    out.pi.component[x] = cls(raw_of(MB.unit, braw, x));
  }
  return out;
}

FactoringResult cokernel_factor(const CokernelResult& c, const RModHom& f, const RModHom& g,
                                const RModMor& phi) {
  if (!table_equal(phi.source, compose_mod_hom(f, g)) ||
      !table_equal(phi.target, zero_hom(f.dom, g.cod)))
    fail(Errc::boundary, "phi is not G∘F ⇒ 0");
  const RModule& K = *g.cod;
  const SymTwoGroup& MK = K.carrier;
  const FinGroupoid& gk = MK.base;
  const FinGroupoid& gr = K.ring->additive.base;
  const FinGroupoid& gc = c.coker->carrier.base;

  FactoringResult out;
  out.g1.dom = c.coker;
  out.g1.cod = g.cod;
  for (const Id& b : gc.objects) out.g1.omap[b] = g.ap(b);
  for (const Id& m : gc.morphisms) {
    const auto& t = c.provenance.at(m);
    out.g1.mmap[m] = gk.compose_path(
        {g.ap_m(t[1]), g.fp(t[0], f.ap(t[2])),
         MK.add_m(gk.identity(g.ap(t[0])), phi.component.at(t[2])),
         MK.runit_at(g.ap(t[0]))});
  }
  for (const Id& b1 : gc.objects)
    for (const Id& b2 : gc.objects) out.g1.fplus[{b1, b2}] = g.fp(b1, b2);
  out.g1.fzero = g.fzero;
  for (const Id& r : gr.objects)
    for (const Id& b : gc.objects) out.g1.ftwo[{r, b}] = g.f2(r, b);

  out.phi1.source = compose_mod_hom(c.p, out.g1);
  out.phi1.target = g;
  for (const Id& b : gc.objects) out.phi1.component[b] = gk.identity(g.ap(b));
  return out;
}

RModMor cokernel_psi(const CokernelResult& c, const FactoringResult& fr, const RModHom& g2,
                     const RModMor& phi2) {
  RModMor psi;
  psi.source = g2;
  psi.target = fr.g1;
  for (const Id& b : c.coker->carrier.base.objects) psi.component[b] = phi2.component.at(b);
  return psi;
}

PipResult pip(const RModHom& f) {
  const RModule& A = *f.dom;
  const SymTwoGroup& MA = A.carrier;
  const FinGroupoid& ga = MA.base;
  const FinGroupoid& gr = A.ring->additive.base;
  const Id fzero_obj = f.ap(MA.unit);

  PipResult out;
  auto mod = std::make_shared<RModule>();
  mod->ring = A.ring;
  SymTwoGroup& C = mod->carrier;

  std::vector<Id> loops;
  for (const Id& a : ga.hom(MA.unit, MA.unit))
    if (f.ap_m(a) == f.cod->carrier.base.identity(fzero_obj)) loops.push_back(a);
  auto idm = [&](const Id& a) { return "1(" + a + ")"; };
  auto member = [&](const Id& a) {
    return std::binary_search(loops.begin(), loops.end(), a);
  };
  std::sort(loops.begin(), loops.end());

  C.base.objects = loops;
  for (const Id& a : loops) {
    C.base.morphisms.push_back(idm(a));
    C.base.src[idm(a)] = a;
    C.base.tgt[idm(a)] = a;
    C.base.inv[idm(a)] = idm(a);
    C.base.id_of[a] = idm(a);
    C.base.comp[{idm(a), idm(a)}] = idm(a);
  }
  C.base.sort_tables();
  C.unit = ga.identity(MA.unit);
  if (!member(C.unit)) fail(Errc::malformed_table, "pip does not contain the identity loop");
  for (const Id& a : loops)
    for (const Id& b : loops) {
      Id sum = ga.compose(a, b);
      if (!member(sum)) fail(Errc::malformed_table, "pip is not closed under composition");
      C.tensor.obj[{a, b}] = sum;
      C.tensor.mor[{idm(a), idm(b)}] = idm(sum);
      C.sym[{a, b}] = idm(sum);
      if (ga.compose(a, b) != ga.compose(b, a))
        fail(Errc::malformed_table, "pip loops do not commute");
      for (const Id& cc : loops)
        C.assoc[{a, b, cc}] = idm(ga.compose(ga.compose(a, b), cc));
    }
  for (const Id& a : loops) {
    C.lunit[a] = idm(a);
    C.runit[a] = idm(a);
    C.dual[a] = ga.inverse(a);
    C.eta[a] = idm(C.unit);
  }
  auto star = [&](const Id& r, const Id& a) {
    Id value = ga.compose_path(
        {ga.inverse(A.zzero_at(r)), A.act_m(gr.identity(r), a), A.zzero_at(r)});
    if (!member(value)) fail(Errc::malformed_table, "pip is not closed under the action");
    return value;
  };
  for (const Id& r : gr.objects)
    for (const Id& a : loops) mod->action.obj[{r, a}] = star(r, a);
  for (const Id& p : gr.morphisms)
    for (const Id& a : loops) {
      Id s1 = star(gr.source(p), a);
      Id s2 = star(gr.target(p), a);
      if (s1 != s2) fail(Errc::malformed_table, "pip action is not locally constant");
      mod->action.mor[{p, idm(a)}] = idm(s1);
    }
  for (const Id& r : gr.objects) {
    mod->zzero[r] = idm(C.unit);
    for (const Id& a : loops) {
      for (const Id& b : loops)
        mod->adist[{r, a, b}] = idm(star(r, ga.compose(a, b)));
      for (const Id& s : gr.objects) {
        mod->bdist[{r, s, a}] = idm(star(A.ring->additive.add(r, s), a));
        mod->bassoc[{r, s, a}] = idm(star(A.ring->mul(r, s), a));
      }
    }
  }
  for (const Id& a : loops) mod->iunit[a] = idm(star(A.ring->one, a));

  out.pip = mod;
  out.sigma.source = zero_hom(mod, f.dom);
  out.sigma.target = out.sigma.source;
  for (const Id& a : loops) out.sigma.component[a] = a;
  return out;
}

CopipResult copip(const RModHom& f) {
  const RModule& A = *f.dom;
  const RModule& B = *f.cod;
  const SymTwoGroup& MB = B.carrier;
  const FinGroupoid& ga = A.carrier.base;
  const FinGroupoid& gb = MB.base;
  const FinGroupoid& gr = B.ring->additive.base;

  // Union objects of B under B1 ~ B2 iff Hom(B1, F(A0)+B2) nonempty.
  std::map<Id, Id> parent;
  for (const Id& b : gb.objects) parent[b] = b;
  std::function<Id(Id)> find_rep = [&](Id x) {
    while (parent.at(x) != x) x = parent.at(x);
    return x;
  };
  auto unite = [&](const Id& x, const Id& y) {
    Id rx = find_rep(x);
    Id ry = find_rep(y);
    if (rx == ry) return;
    if (ry < rx) std::swap(rx, ry);
    parent[ry] = rx;
  };
  for (const Id& b1 : gb.objects)
    for (const Id& b2 : gb.objects)
      for (const Id& a0 : ga.objects)
        if (!gb.hom(b1, MB.add(f.ap(a0), b2)).empty()) unite(b1, b2);

  CopipResult out;
  for (const Id& b : gb.objects) out.class_of[b] = find_rep(b);
  auto cls = [&](const Id& b) -> const Id& { return out.class_of.at(find_rep(b)); };

  auto mod = std::make_shared<RModule>();
  mod->ring = B.ring;
  SymTwoGroup& C = mod->carrier;
  const Id star = "*";
  C.base.objects = {star};
  for (const Id& b : gb.objects)
    if (find_rep(b) == b) C.base.morphisms.push_back(b);
  C.base.sort_tables();
  for (const Id& m : C.base.morphisms) {
    C.base.src[m] = star;
    C.base.tgt[m] = star;
    C.base.inv[m] = cls(MB.dual_of(m));
  }
  C.base.id_of[star] = cls(MB.unit);
  for (const Id& m1 : C.base.morphisms)
    for (const Id& m2 : C.base.morphisms) C.base.comp[{m2, m1}] = cls(MB.add(m1, m2));
  C.unit = star;
  C.tensor.obj[{star, star}] = star;
  for (const Id& m1 : C.base.morphisms)
    for (const Id& m2 : C.base.morphisms) C.tensor.mor[{m1, m2}] = cls(MB.add(m1, m2));
  const Id zero_class = cls(MB.unit);
  C.assoc[{star, star, star}] = zero_class;
  C.lunit[star] = zero_class;
  C.runit[star] = zero_class;
  C.sym[{star, star}] = zero_class;
  C.dual[star] = star;
  C.eta[star] = zero_class;
  for (const Id& r : gr.objects) {
    mod->action.obj[{r, star}] = star;
    mod->zzero[r] = zero_class;
    mod->adist[{r, star, star}] = zero_class;
    for (const Id& s : gr.objects) {
      mod->bdist[{r, s, star}] = zero_class;
      mod->bassoc[{r, s, star}] = zero_class;
    }
  }
  mod->iunit[star] = zero_class;
  for (const Id& p : gr.morphisms)
    for (const Id& m : C.base.morphisms)
      mod->action.mor[{p, m}] = cls(B.act(gr.target(p), m));

  out.copip = mod;
  out.sigma.source = zero_hom(f.cod, mod);
  out.sigma.target = out.sigma.source;
  for (const Id& b : gb.objects) out.sigma.component[b] = cls(b);
  return out;
}

RootResult root(const RModMor& alpha) {
  require_zero_boundary(alpha);
  const RModule& A = *alpha.source.dom;
  const RModule& B = *alpha.source.cod;
  const SymTwoGroup& MA = A.carrier;
  const FinGroupoid& ga = MA.base;
  const FinGroupoid& gr = A.ring->additive.base;
  const Id id0 = B.carrier.base.identity(B.carrier.unit);

  std::vector<Id> selected;
  for (const Id& x : ga.objects)
    if (alpha.component.at(x) == id0) selected.push_back(x);
  auto member = [&](const Id& x) {
    return std::binary_search(selected.begin(), selected.end(), x);
  };
  if (!member(MA.unit)) fail(Errc::not_closed, "root does not contain the unit");
  for (const Id& x : selected) {
    if (!member(MA.dual_of(x))) fail(Errc::not_closed, "root is not closed under duals");
    for (const Id& y : selected)
      if (!member(MA.add(x, y))) fail(Errc::not_closed, "root is not closed under tensor");
    for (const Id& r : gr.objects)
      if (!member(A.act(r, x))) fail(Errc::not_closed, "root is not closed under the action");
  }

  RootResult out;
  auto mod = std::make_shared<RModule>();
  mod->ring = A.ring;
  SymTwoGroup& C = mod->carrier;
  C.base.objects = selected;
  for (const Id& m : ga.morphisms)
    if (member(ga.source(m)) && member(ga.target(m))) C.base.morphisms.push_back(m);
  C.base.sort_tables();
  for (const Id& m : C.base.morphisms) {
    C.base.src[m] = ga.source(m);
    C.base.tgt[m] = ga.target(m);
    C.base.inv[m] = ga.inverse(m);
  }
  for (const Id& x : selected) C.base.id_of[x] = ga.identity(x);
  for (const Id& m1 : C.base.morphisms)
    for (const Id& m2 : C.base.morphisms)
      if (ga.target(m1) == ga.source(m2)) C.base.comp[{m2, m1}] = ga.compose(m2, m1);
  C.unit = MA.unit;
  for (const Id& x : selected) {
    C.lunit[x] = MA.lunit_at(x);
    C.runit[x] = MA.runit_at(x);
    C.dual[x] = MA.dual_of(x);
    C.eta[x] = MA.eta_at(x);
    for (const Id& y : selected) {
      C.tensor.obj[{x, y}] = MA.add(x, y);
      C.sym[{x, y}] = MA.sym_at(x, y);
      for (const Id& z : selected) C.assoc[{x, y, z}] = MA.assoc_at(x, y, z);
    }
  }
  for (const Id& m1 : C.base.morphisms)
    for (const Id& m2 : C.base.morphisms) C.tensor.mor[{m1, m2}] = MA.add_m(m1, m2);
  for (const Id& r : gr.objects) {
    mod->zzero[r] = A.zzero_at(r);
    for (const Id& x : selected) {
      mod->action.obj[{r, x}] = A.act(r, x);
      for (const Id& y : selected) mod->adist[{r, x, y}] = A.adist_at(r, x, y);
      for (const Id& s : gr.objects) {
        mod->bdist[{r, s, x}] = A.bdist_at(r, s, x);
        mod->bassoc[{r, s, x}] = A.bassoc_at(r, s, x);
      }
    }
  }
  for (const Id& p : gr.morphisms)
    for (const Id& m : C.base.morphisms) mod->action.mor[{p, m}] = A.act_m(p, m);
  for (const Id& x : selected) mod->iunit[x] = A.iunit_at(x);

  out.root = mod;
  out.incl.dom = mod;
  out.incl.cod = alpha.source.dom;
  for (const Id& x : selected) out.incl.omap[x] = x;
  for (const Id& m : C.base.morphisms) out.incl.mmap[m] = m;
  for (const Id& x : selected)
    for (const Id& y : selected) out.incl.fplus[{x, y}] = ga.identity(MA.add(x, y));
  out.incl.fzero = ga.identity(MA.unit);
  for (const Id& r : gr.objects)
    for (const Id& x : selected) out.incl.ftwo[{r, x}] = ga.identity(A.act(r, x));
  return out;
}

CorootResult coroot(const RModMor& alpha) {
  require_zero_boundary(alpha);
  const RModule& A = *alpha.source.dom;
  const RModule& B = *alpha.source.cod;
  const SymTwoGroup& MB = B.carrier;
  const FinGroupoid& gb = MB.base;
  const FinGroupoid& gr = B.ring->additive.base;

  // f ~ f′ iff f∘r = r∘(f′+α_x) for some object x of alpha's domain.
  std::vector<Id> twists;
  for (const Id& x : A.carrier.base.objects) twists.push_back(alpha.component.at(x));
  std::sort(twists.begin(), twists.end());
  twists.erase(std::unique(twists.begin(), twists.end()), twists.end());

  MorRelation rel;
  for (const Id& f1 : gb.morphisms)
    for (const Id& f2 : gb.morphisms) {
      if (f1 >= f2) continue;
      if (gb.source(f1) != gb.source(f2) || gb.target(f1) != gb.target(f2)) continue;
      const Id& b1 = gb.source(f1);
      const Id& b2 = gb.target(f1);
      Id lhs = gb.compose(f1, MB.runit_at(b1));
      bool related = false;
      for (const Id& t : twists) {
        Id rhs = gb.compose(MB.runit_at(b2), MB.add_m(f2, t));
        if (lhs == rhs) {
          related = true;
          break;
        }
      }
      if (related) rel.pairs.push_back({f1, f2});
    }
  QuotientResult q = quotient_morphisms(gb, rel);

  CorootResult out;
  out.class_of = q.projection.mmap;
  auto cls = [&](const Id& m) -> const Id& { return out.class_of.at(m); };

  auto mod = std::make_shared<RModule>();
  mod->ring = B.ring;
  SymTwoGroup& C = mod->carrier;
  C.base = q.quotient;
  C.unit = MB.unit;
  for (const Id& b1 : gb.objects) {
    C.lunit[b1] = cls(MB.lunit_at(b1));
    C.runit[b1] = cls(MB.runit_at(b1));
    C.dual[b1] = MB.dual_of(b1);
    C.eta[b1] = cls(MB.eta_at(b1));
    for (const Id& b2 : gb.objects) {
      C.tensor.obj[{b1, b2}] = MB.add(b1, b2);
      C.sym[{b1, b2}] = cls(MB.sym_at(b1, b2));
      for (const Id& b3 : gb.objects) C.assoc[{b1, b2, b3}] = cls(MB.assoc_at(b1, b2, b3));
    }
  }
  for (const Id& m1 : C.base.morphisms)
    for (const Id& m2 : C.base.morphisms) C.tensor.mor[{m1, m2}] = cls(MB.add_m(m1, m2));
  for (const Id& r : gr.objects) {
    mod->zzero[r] = cls(B.zzero_at(r));
    for (const Id& b1 : gb.objects) {
      mod->action.obj[{r, b1}] = B.act(r, b1);
      for (const Id& b2 : gb.objects) mod->adist[{r, b1, b2}] = cls(B.adist_at(r, b1, b2));
      for (const Id& s : gr.objects) {
        mod->bdist[{r, s, b1}] = cls(B.bdist_at(r, s, b1));
        mod->bassoc[{r, s, b1}] = cls(B.bassoc_at(r, s, b1));
      }
    }
  }
  for (const Id& p : gr.morphisms)
    for (const Id& m : C.base.morphisms) mod->action.mor[{p, m}] = cls(B.act_m(p, m));
  for (const Id& b : gb.objects) mod->iunit[b] = cls(B.iunit_at(b));

  out.coroot = mod;
  out.proj.dom = alpha.source.cod;
  out.proj.cod = mod;
  for (const Id& b : gb.objects) out.proj.omap[b] = b;
  for (const Id& m : gb.morphisms) out.proj.mmap[m] = cls(m);
  for (const Id& b1 : gb.objects)
    for (const Id& b2 : gb.objects)
      out.proj.fplus[{b1, b2}] = C.base.identity(MB.add(b1, b2));
  out.proj.fzero = C.base.identity(MB.unit);
  for (const Id& r : gr.objects)
    for (const Id& b : gb.objects) out.proj.ftwo[{r, b}] = C.base.identity(B.act(r, b));
  return out;
}

// ---------------------------------------------------------------------------
// Image factorizations.

namespace {

struct Im1PlData {
  std::shared_ptr<const RModule> mod;
  // morphism id -> (src object, tgt object, image morphism in B)
  std::map<Id, std::array<Id, 3>> morphisms;
};

Im1PlData build_im1_pl(const RModHom& f) {
  const RModule& A = *f.dom;
  const RModule& B = *f.cod;
  const SymTwoGroup& MA = A.carrier;
  const SymTwoGroup& MB = B.carrier;
  const FinGroupoid& ga = MA.base;
  const FinGroupoid& gb = MB.base;
  const FinGroupoid& gr = A.ring->additive.base;

  Im1PlData out;
  auto mod = std::make_shared<RModule>();
  mod->ring = A.ring;
  SymTwoGroup& C = mod->carrier;
  C.base.objects = ga.objects;

  // Hom-sets are the full Hom_B(FA, FA'): the factor through which E_F is
  // only surjective while M-hat stays full.
  std::map<std::array<Id, 3>, Id> mor_id;
  for (const Id& x1 : ga.objects)
    for (const Id& x2 : ga.objects)
      for (const Id& g : gb.hom(f.ap(x1), f.ap(x2))) {
        std::array<Id, 3> key{x1, x2, g};
        Id id = tuple_id({x1, x2, g});
        mor_id[key] = id;
        out.morphisms[id] = key;
        C.base.morphisms.push_back(id);
        C.base.src[id] = x1;
        C.base.tgt[id] = x2;
      }
  C.base.sort_tables();
  auto pmor = [&](const Id& x1, const Id& x2, const Id& g) -> const Id& {
    const Id* v = lookup(mor_id, std::array<Id, 3>{x1, x2, g});
    if (!v) fail(Errc::malformed_table, "Im1pl morphism missing");
    return *v;
  };
  for (const auto& [id, key] : out.morphisms) {
    C.base.inv[id] = pmor(key[1], key[0], gb.inverse(key[2]));
  }
  for (const Id& x : ga.objects) C.base.id_of[x] = pmor(x, x, gb.identity(f.ap(x)));
  for (const auto& [m1, k1] : out.morphisms)
    for (const auto& [m2, k2] : out.morphisms) {
      if (k1[1] != k2[0]) continue;
      C.base.comp[{m2, m1}] = pmor(k1[0], k2[1], gb.compose(k2[2], k1[2]));
    }
  C.unit = MA.unit;
  for (const Id& x1 : ga.objects)
    for (const Id& x2 : ga.objects) C.tensor.obj[{x1, x2}] = MA.add(x1, x2);
  for (const auto& [m1, k1] : out.morphisms)
    for (const auto& [m2, k2] : out.morphisms) {
      Id g = gb.compose_path({f.fp(k1[0], k2[0]), MB.add_m(k1[2], k2[2]),
                              gb.inverse(f.fp(k1[1], k2[1]))});
      C.tensor.mor[{m1, m2}] = pmor(MA.add(k1[0], k2[0]), MA.add(k1[1], k2[1]), g);
    }
  for (const Id& x1 : ga.objects) {
    C.lunit[x1] = pmor(MA.add(MA.unit, x1), x1, f.ap_m(MA.lunit_at(x1)));
    C.runit[x1] = pmor(MA.add(x1, MA.unit), x1, f.ap_m(MA.runit_at(x1)));
    C.dual[x1] = MA.dual_of(x1);
    C.eta[x1] = pmor(MA.add(MA.dual_of(x1), x1), MA.unit, f.ap_m(MA.eta_at(x1)));
    for (const Id& x2 : ga.objects) {
      C.sym[{x1, x2}] = pmor(MA.add(x1, x2), MA.add(x2, x1), f.ap_m(MA.sym_at(x1, x2)));
      for (const Id& x3 : ga.objects)
        C.assoc[{x1, x2, x3}] = pmor(MA.add(MA.add(x1, x2), x3), MA.add(x1, MA.add(x2, x3)),
                                     f.ap_m(MA.assoc_at(x1, x2, x3)));
    }
  }
  for (const Id& r : gr.objects) {
    mod->zzero[r] = pmor(A.act(r, MA.unit), MA.unit, f.ap_m(A.zzero_at(r)));
    for (const Id& x1 : ga.objects) {
      mod->action.obj[{r, x1}] = A.act(r, x1);
      for (const Id& x2 : ga.objects)
        mod->adist[{r, x1, x2}] =
            pmor(A.act(r, MA.add(x1, x2)), MA.add(A.act(r, x1), A.act(r, x2)),
                 f.ap_m(A.adist_at(r, x1, x2)));
      for (const Id& s : gr.objects) {
        mod->bdist[{r, s, x1}] =
            pmor(A.act(A.ring->additive.add(r, s), x1), MA.add(A.act(r, x1), A.act(s, x1)),
                 f.ap_m(A.bdist_at(r, s, x1)));
        mod->bassoc[{r, s, x1}] =
            pmor(A.act(A.ring->mul(r, s), x1), A.act(r, A.act(s, x1)),
                 f.ap_m(A.bassoc_at(r, s, x1)));
      }
    }
  }
  for (const Id& p : gr.morphisms)
    for (const auto& [m, k] : out.morphisms) {
      const Id& r1 = gr.source(p);
      const Id& r2 = gr.target(p);
      Id g = gb.compose_path(
          {f.f2(r1, k[0]), B.act_m(p, k[2]), gb.inverse(f.f2(r2, k[1]))});
      mod->action.mor[{p, m}] = pmor(A.act(r1, k[0]), A.act(r2, k[1]), g);
    }
  for (const Id& x : ga.objects)
    mod->iunit[x] = pmor(A.act(A.ring->one, x), x, f.ap_m(A.iunit_at(x)));

  out.mod = mod;
  return out;
}

struct Im2PlData {
  std::shared_ptr<const RModule> mod;
  std::map<Id, std::array<Id, 3>> objects;    // id -> (X, phi, Bo)
  std::map<Id, std::array<Id, 3>> morphisms;  // id -> (srcT, tgtT, g)
};

Im2PlData build_im2_pl(const RModHom& f) {
  const RModule& A = *f.dom;
  const RModule& B = *f.cod;
  const SymTwoGroup& MA = A.carrier;
  const SymTwoGroup& MB = B.carrier;
  const FinGroupoid& ga = MA.base;
  const FinGroupoid& gb = MB.base;
  const FinGroupoid& gr = A.ring->additive.base;

  Im2PlData out;
  auto mod = std::make_shared<RModule>();
  mod->ring = A.ring;
  SymTwoGroup& C = mod->carrier;

  std::map<std::array<Id, 3>, Id> obj_id;
  for (const Id& x : ga.objects)
    for (const Id& bo : gb.objects)
      for (const Id& phi : gb.hom(f.ap(x), bo)) {
        Id id = tuple_id({x, phi, bo});
        obj_id[{x, phi, bo}] = id;
        out.objects[id] = {x, phi, bo};
        C.base.objects.push_back(id);
      }
  auto pobj = [&](const Id& x, const Id& phi, const Id& bo) -> const Id& {
    const Id* v = lookup(obj_id, std::array<Id, 3>{x, phi, bo});
    if (!v) fail(Errc::malformed_table, "Im2pl object missing");
    return *v;
  };
  auto bo_of = [&](const Id& t) -> const Id& { return out.objects.at(t)[2]; };

  std::map<std::array<Id, 3>, Id> mor_id;
  for (const auto& [t1, k1] : out.objects)
    for (const auto& [t2, k2] : out.objects)
      for (const Id& g : gb.hom(k1[2], k2[2])) {
        Id id = tuple_id({t1, t2, g});
        mor_id[{t1, t2, g}] = id;
        out.morphisms[id] = {t1, t2, g};
        C.base.morphisms.push_back(id);
      }
  auto pmor = [&](const Id& t1, const Id& t2, const Id& g) -> const Id& {
    const Id* v = lookup(mor_id, std::array<Id, 3>{t1, t2, g});
    if (!v) fail(Errc::malformed_table, "Im2pl morphism missing");
    return *v;
  };
  C.base.sort_tables();
  for (const auto& [id, k] : out.morphisms) {
    C.base.src[id] = k[0];
    C.base.tgt[id] = k[1];
    C.base.inv[id] = pmor(k[1], k[0], gb.inverse(k[2]));
  }
  for (const Id& t : C.base.objects) C.base.id_of[t] = pmor(t, t, gb.identity(bo_of(t)));
  for (const auto& [m1, k1] : out.morphisms)
    for (const auto& [m2, k2] : out.morphisms) {
      if (k1[1] != k2[0]) continue;
      C.base.comp[{m2, m1}] = pmor(k1[0], k2[1], gb.compose(k2[2], k1[2]));
    }
  C.unit = pobj(MA.unit, f.fzero, MB.unit);
  auto sum_obj = [&](const Id& t1, const Id& t2) -> const Id& {
    const auto& k1 = out.objects.at(t1);
    const auto& k2 = out.objects.at(t2);
    Id phi = gb.compose(MB.add_m(k1[1], k2[1]), f.fp(k1[0], k2[0]));
    return pobj(MA.add(k1[0], k2[0]), phi, MB.add(k1[2], k2[2]));
  };
  for (const Id& t1 : C.base.objects)
    for (const Id& t2 : C.base.objects) C.tensor.obj[{t1, t2}] = sum_obj(t1, t2);
  for (const auto& [m1, k1] : out.morphisms)
    for (const auto& [m2, k2] : out.morphisms)
      C.tensor.mor[{m1, m2}] = pmor(C.tensor.obj.at({k1[0], k2[0]}),
                                    C.tensor.obj.at({k1[1], k2[1]}),
                                    MB.add_m(k1[2], k2[2]));
  for (const Id& t1 : C.base.objects) {
    const auto& k1 = out.objects.at(t1);
    C.lunit[t1] = pmor(C.tensor.obj.at({C.unit, t1}), t1, MB.lunit_at(k1[2]));
    C.runit[t1] = pmor(C.tensor.obj.at({t1, C.unit}), t1, MB.runit_at(k1[2]));
    for (const Id& t2 : C.base.objects) {
      const auto& k2 = out.objects.at(t2);
      C.sym[{t1, t2}] = pmor(C.tensor.obj.at({t1, t2}), C.tensor.obj.at({t2, t1}),
                             MB.sym_at(k1[2], k2[2]));
      for (const Id& t3 : C.base.objects) {
        const auto& k3 = out.objects.at(t3);
        C.assoc[{t1, t2, t3}] =
            pmor(C.tensor.obj.at({C.tensor.obj.at({t1, t2}), t3}),
                 C.tensor.obj.at({t1, C.tensor.obj.at({t2, t3})}),
                 MB.assoc_at(k1[2], k2[2], k3[2]));
      }
    }
  }
  for (const Id& t : C.base.objects) {
    const auto& k = out.objects.at(t);
    const Id xd = MA.dual_of(k[0]);
    const Id bod = MB.dual_of(k[2]);
    auto candidates = gb.hom(f.ap(xd), bod);
    if (candidates.empty()) fail(Errc::malformed_table, "Im2pl dual misses a mediating iso");
    C.dual[t] = pobj(xd, candidates.front(), bod);
    C.eta[t] = pmor(C.tensor.obj.at({C.dual.at(t), t}), C.unit, MB.eta_at(k[2]));
  }
  for (const Id& r : gr.objects)
    for (const Id& t : C.base.objects) {
      const auto& k = out.objects.at(t);
      Id phi = gb.compose(B.act_m(gr.identity(r), k[1]), f.f2(r, k[0]));
      mod->action.obj[{r, t}] = pobj(A.act(r, k[0]), phi, B.act(r, k[2]));
    }
  for (const Id& p : gr.morphisms)
    for (const auto& [m, k] : out.morphisms)
      mod->action.mor[{p, m}] =
          pmor(mod->action.obj.at({gr.source(p), k[0]}),
               mod->action.obj.at({gr.target(p), k[1]}), B.act_m(p, k[2]));
  for (const Id& r : gr.objects) {
    mod->zzero[r] = pmor(mod->action.obj.at({r, C.unit}), C.unit, B.zzero_at(r));
    for (const Id& t1 : C.base.objects) {
      for (const Id& t2 : C.base.objects)
        mod->adist[{r, t1, t2}] =
            pmor(mod->action.obj.at({r, C.tensor.obj.at({t1, t2})}),
                 C.tensor.obj.at({mod->action.obj.at({r, t1}), mod->action.obj.at({r, t2})}),
                 B.adist_at(r, bo_of(t1), bo_of(t2)));
      for (const Id& s : gr.objects) {
        mod->bdist[{r, s, t1}] =
            pmor(mod->action.obj.at({B.ring->additive.add(r, s), t1}),
                 C.tensor.obj.at({mod->action.obj.at({r, t1}), mod->action.obj.at({s, t1})}),
                 B.bdist_at(r, s, bo_of(t1)));
        mod->bassoc[{r, s, t1}] =
            pmor(mod->action.obj.at({B.ring->mul(r, s), t1}),
                 mod->action.obj.at({r, mod->action.obj.at({s, t1})}),
                 B.bassoc_at(r, s, bo_of(t1)));
      }
    }
  }
  for (const Id& t : C.base.objects)
    mod->iunit[t] =
        pmor(mod->action.obj.at({B.ring->one, t}), t, B.iunit_at(bo_of(t)));

  out.mod = mod;
  return out;
}

struct Im1Data {
  std::shared_ptr<const RModule> mod;
  std::map<Id, Id> class_of;  // morphism of A -> class id
};

Im1Data build_im1(const RModHom& f) {
  const RModule& A = *f.dom;
  const SymTwoGroup& MA = A.carrier;
  const FinGroupoid& ga = MA.base;
  const FinGroupoid& gr = A.ring->additive.base;

  MorRelation rel;
  for (const Id& q1 : ga.morphisms)
    for (const Id& q2 : ga.morphisms) {
      if (q1 >= q2) continue;
      if (ga.source(q1) != ga.source(q2) || ga.target(q1) != ga.target(q2)) continue;
      if (f.ap_m(q1) == f.ap_m(q2)) rel.pairs.push_back({q1, q2});
    }
  QuotientResult q = quotient_morphisms(ga, rel);

  Im1Data out;
  out.class_of = q.projection.mmap;
  auto cls = [&](const Id& m) -> const Id& { return out.class_of.at(m); };

  auto mod = std::make_shared<RModule>();
  mod->ring = A.ring;
  SymTwoGroup& C = mod->carrier;
  C.base = q.quotient;
  C.unit = MA.unit;
  for (const Id& x1 : ga.objects) {
    C.lunit[x1] = cls(MA.lunit_at(x1));
    C.runit[x1] = cls(MA.runit_at(x1));
    C.dual[x1] = MA.dual_of(x1);
    C.eta[x1] = cls(MA.eta_at(x1));
    for (const Id& x2 : ga.objects) {
      C.tensor.obj[{x1, x2}] = MA.add(x1, x2);
      C.sym[{x1, x2}] = cls(MA.sym_at(x1, x2));
      for (const Id& x3 : ga.objects) C.assoc[{x1, x2, x3}] = cls(MA.assoc_at(x1, x2, x3));
    }
  }
  for (const Id& m1 : C.base.morphisms)
    for (const Id& m2 : C.base.morphisms) C.tensor.mor[{m1, m2}] = cls(MA.add_m(m1, m2));
  for (const Id& r : gr.objects) {
    mod->zzero[r] = cls(A.zzero_at(r));
    for (const Id& x1 : ga.objects) {
      mod->action.obj[{r, x1}] = A.act(r, x1);
      for (const Id& x2 : ga.objects) mod->adist[{r, x1, x2}] = cls(A.adist_at(r, x1, x2));
      for (const Id& s : gr.objects) {
        mod->bdist[{r, s, x1}] = cls(A.bdist_at(r, s, x1));
        mod->bassoc[{r, s, x1}] = cls(A.bassoc_at(r, s, x1));
      }
    }
  }
  for (const Id& p : gr.morphisms)
    for (const Id& m : C.base.morphisms) mod->action.mor[{p, m}] = cls(A.act_m(p, m));
  for (const Id& x : ga.objects) mod->iunit[x] = cls(A.iunit_at(x));
  out.mod = mod;
  return out;
}

struct Im2Data {
  std::shared_ptr<const RModule> mod;
  std::map<Id, std::array<Id, 3>> objects;    // id -> (X, phi, Bo)
  std::map<Id, std::array<Id, 3>> morphisms;  // id -> (srcT, tgtT, g)
  std::map<Id, Id> witness;                   // morphism id -> A-morphism q
};

Im2Data build_im2(const RModHom& f) {
  const RModule& A = *f.dom;
  const RModule& B = *f.cod;
  const SymTwoGroup& MA = A.carrier;
  const SymTwoGroup& MB = B.carrier;
  const FinGroupoid& ga = MA.base;
  const FinGroupoid& gb = MB.base;
  const FinGroupoid& gr = A.ring->additive.base;

  Im2Data out;
  auto mod = std::make_shared<RModule>();
  mod->ring = A.ring;
  SymTwoGroup& C = mod->carrier;

  std::map<std::array<Id, 3>, Id> obj_id;
  for (const Id& x : ga.objects)
    for (const Id& bo : gb.objects)
      for (const Id& phi : gb.hom(f.ap(x), bo)) {
        Id id = tuple_id({x, phi, bo});
        obj_id[{x, phi, bo}] = id;
        out.objects[id] = {x, phi, bo};
        C.base.objects.push_back(id);
      }
  auto pobj = [&](const Id& x, const Id& phi, const Id& bo) -> const Id& {
    const Id* v = lookup(obj_id, std::array<Id, 3>{x, phi, bo});
    if (!v) fail(Errc::malformed_table, "Im2 object missing");
    return *v;
  };

  // Morphism class [q, g] keyed by g; the witness is the least compatible q.
  std::map<std::array<Id, 3>, Id> mor_id;
  for (const auto& [t1, k1] : out.objects)
    for (const auto& [t2, k2] : out.objects)
      for (const Id& g : gb.hom(k1[2], k2[2])) {
        Id want = gb.compose(g, k1[1]);
        Id found;
        bool ok = false;
        for (const Id& q2 : ga.hom(k1[0], k2[0]))
          if (gb.compose(k2[1], f.ap_m(q2)) == want) {
            found = q2;
            ok = true;
            break;
          }
        if (!ok) continue;
        Id id = tuple_id({t1, t2, g});
        mor_id[{t1, t2, g}] = id;
        out.morphisms[id] = {t1, t2, g};
        out.witness[id] = found;
        C.base.morphisms.push_back(id);
      }
  auto pmor = [&](const Id& t1, const Id& t2, const Id& g) -> const Id& {
    const Id* v = lookup(mor_id, std::array<Id, 3>{t1, t2, g});
    if (!v) fail(Errc::malformed_table, "Im2 morphism missing");
    return *v;
  };
  C.base.sort_tables();
  for (const auto& [id, k] : out.morphisms) {
    C.base.src[id] = k[0];
    C.base.tgt[id] = k[1];
    C.base.inv[id] = pmor(k[1], k[0], gb.inverse(k[2]));
  }
  for (const auto& [t, k] : out.objects) C.base.id_of[t] = pmor(t, t, gb.identity(k[2]));
  for (const auto& [m1, k1] : out.morphisms)
    for (const auto& [m2, k2] : out.morphisms) {
      if (k1[1] != k2[0]) continue;
      C.base.comp[{m2, m1}] = pmor(k1[0], k2[1], gb.compose(k2[2], k1[2]));
    }
  C.unit = pobj(MA.unit, f.fzero, MB.unit);
  auto sum_obj = [&](const Id& t1, const Id& t2) -> const Id& {
    const auto& k1 = out.objects.at(t1);
    const auto& k2 = out.objects.at(t2);
    Id phi = gb.compose(MB.add_m(k1[1], k2[1]), f.fp(k1[0], k2[0]));
    return pobj(MA.add(k1[0], k2[0]), phi, MB.add(k1[2], k2[2]));
  };
  for (const Id& t1 : C.base.objects)
    for (const Id& t2 : C.base.objects) C.tensor.obj[{t1, t2}] = sum_obj(t1, t2);
  for (const auto& [m1, k1] : out.morphisms)
    for (const auto& [m2, k2] : out.morphisms)
      C.tensor.mor[{m1, m2}] =
          pmor(C.tensor.obj.at({k1[0], k2[0]}), C.tensor.obj.at({k1[1], k2[1]}),
               MB.add_m(k1[2], k2[2]));
  for (const Id& t1 : C.base.objects) {
    const auto& k1 = out.objects.at(t1);
    C.lunit[t1] = pmor(C.tensor.obj.at({C.unit, t1}), t1, MB.lunit_at(k1[2]));
    C.runit[t1] = pmor(C.tensor.obj.at({t1, C.unit}), t1, MB.runit_at(k1[2]));
    for (const Id& t2 : C.base.objects) {
      const auto& k2 = out.objects.at(t2);
      C.sym[{t1, t2}] = pmor(C.tensor.obj.at({t1, t2}), C.tensor.obj.at({t2, t1}),
                             MB.sym_at(k1[2], k2[2]));
      for (const Id& t3 : C.base.objects) {
        const auto& k3 = out.objects.at(t3);
        C.assoc[{t1, t2, t3}] =
            pmor(C.tensor.obj.at({C.tensor.obj.at({t1, t2}), t3}),
                 C.tensor.obj.at({t1, C.tensor.obj.at({t2, t3})}),
                 MB.assoc_at(k1[2], k2[2], k3[2]));
      }
    }
  }
  for (const Id& t : C.base.objects) {
    const auto& k = out.objects.at(t);
    const Id xd = MA.dual_of(k[0]);
    const Id bod = MB.dual_of(k[2]);
    // φ* must make pointwise eta a morphism: η_B∘(φ*+φ)∘F₊ = F₀∘F(η_A).
    Id want = gb.compose(f.fzero, f.ap_m(MA.eta_at(k[0])));
    bool found = false;
    for (const Id& cand : gb.hom(f.ap(xd), bod)) {
      Id got = gb.compose_path(
          {f.fp(xd, k[0]), MB.add_m(cand, k[1]), MB.eta_at(k[2])});
      if (got == want) {
        C.dual[t] = pobj(xd, cand, bod);
        found = true;
        break;
      }
    }
    if (!found) fail(Errc::malformed_table, "Im2 dual misses a mediating iso");
    C.eta[t] = pmor(C.tensor.obj.at({C.dual.at(t), t}), C.unit, MB.eta_at(k[2]));
  }
  for (const Id& r : gr.objects)
    for (const Id& t : C.base.objects) {
      const auto& k = out.objects.at(t);
      Id phi = gb.compose(B.act_m(gr.identity(r), k[1]), f.f2(r, k[0]));
      mod->action.obj[{r, t}] = pobj(A.act(r, k[0]), phi, B.act(r, k[2]));
    }
  for (const Id& p : gr.morphisms)
    for (const auto& [m, k] : out.morphisms)
      mod->action.mor[{p, m}] =
          pmor(mod->action.obj.at({gr.source(p), k[0]}),
               mod->action.obj.at({gr.target(p), k[1]}), B.act_m(p, k[2]));
  for (const Id& r : gr.objects) {
    mod->zzero[r] = pmor(mod->action.obj.at({r, C.unit}), C.unit, B.zzero_at(r));
    for (const Id& t1 : C.base.objects) {
      for (const Id& t2 : C.base.objects)
        mod->adist[{r, t1, t2}] =
            pmor(mod->action.obj.at({r, C.tensor.obj.at({t1, t2})}),
                 C.tensor.obj.at({mod->action.obj.at({r, t1}), mod->action.obj.at({r, t2})}),
                 B.adist_at(r, out.objects.at(t1)[2], out.objects.at(t2)[2]));
      for (const Id& s : gr.objects) {
        mod->bdist[{r, s, t1}] =
            pmor(mod->action.obj.at({B.ring->additive.add(r, s), t1}),
                 C.tensor.obj.at({mod->action.obj.at({r, t1}), mod->action.obj.at({s, t1})}),
                 B.bdist_at(r, s, out.objects.at(t1)[2]));
        mod->bassoc[{r, s, t1}] =
            pmor(mod->action.obj.at({B.ring->mul(r, s), t1}),
                 mod->action.obj.at({r, mod->action.obj.at({s, t1})}),
                 B.bassoc_at(r, s, out.objects.at(t1)[2]));
      }
    }
  }
  for (const Id& t : C.base.objects)
    mod->iunit[t] =
        pmor(mod->action.obj.at({B.ring->one, t}), t, B.iunit_at(out.objects.at(t)[2]));

  out.mod = mod;
  return out;
}

}  // namespace

std::shared_ptr<const RModule> im1_pl(const RModHom& f) { return build_im1_pl(f).mod; }
std::shared_ptr<const RModule> im2_pl(const RModHom& f) { return build_im2_pl(f).mod; }
std::shared_ptr<const RModule> im1(const RModHom& f) { return build_im1(f).mod; }
std::shared_ptr<const RModule> im2(const RModHom& f) { return build_im2(f).mod; }

FactorizationPl factorize_pl(const RModHom& f, const SearchBudget& budget) {
  const RModule& A = *f.dom;
  const FinGroupoid& ga = A.carrier.base;
  const FinGroupoid& gr = A.ring->additive.base;
  Im1PlData im1d = build_im1_pl(f);
  Im2PlData im2d = build_im2_pl(f);

  FactorizationPl out;
  out.im1 = im1d.mod;
  out.im2 = im2d.mod;

  out.e.dom = f.dom;
  out.e.cod = im1d.mod;
  for (const Id& x : ga.objects) out.e.omap[x] = x;
  for (const Id& q : ga.morphisms)
    out.e.mmap[q] = tuple_id({ga.source(q), ga.target(q), f.ap_m(q)});
  for (const Id& x : ga.objects)
    for (const Id& y : ga.objects)
      out.e.fplus[{x, y}] = im1d.mod->carrier.base.identity(A.carrier.add(x, y));
  out.e.fzero = im1d.mod->carrier.base.identity(A.carrier.unit);
  for (const Id& r : gr.objects)
    for (const Id& x : ga.objects)
      out.e.ftwo[{r, x}] = im1d.mod->carrier.base.identity(A.act(r, x));

  out.omega.dom = im1d.mod;
  out.omega.cod = im2d.mod;
  auto omega_obj = [&](const Id& x) {
    return tuple_id({x, f.cod->carrier.base.identity(f.ap(x)), f.ap(x)});
  };
  for (const Id& x : ga.objects) out.omega.omap[x] = omega_obj(x);
  for (const auto& [m, k] : im1d.morphisms)
    out.omega.mmap[m] = tuple_id({omega_obj(k[0]), omega_obj(k[1]), k[2]});
  const FinGroupoid& g2 = im2d.mod->carrier.base;
  for (const Id& x : ga.objects)
    for (const Id& y : ga.objects) {
      const Id& src = out.omega.omap.at(A.carrier.add(x, y));
      const Id& tgt = im2d.mod->carrier.add(omega_obj(x), omega_obj(y));
      out.omega.fplus[{x, y}] = tuple_id({src, tgt, f.fp(x, y)});
    }
  out.omega.fzero =
      tuple_id({omega_obj(A.carrier.unit), im2d.mod->carrier.unit, f.fzero});
  for (const Id& r : gr.objects)
    for (const Id& x : ga.objects) {
      const Id& src = out.omega.omap.at(A.act(r, x));
      const Id& tgt = im2d.mod->action.obj.at({r, omega_obj(x)});
      out.omega.ftwo[{r, x}] = tuple_id({src, tgt, f.f2(r, x)});
    }
  for (const auto& [m, k] : out.omega.mmap)
    if (!g2.has_morphism(k)) fail(Errc::malformed_table, "omega image missing " + k);

  out.m.dom = im2d.mod;
  out.m.cod = f.cod;
  const FinGroupoid& gb = f.cod->carrier.base;
  for (const auto& [t, k] : im2d.objects) out.m.omap[t] = k[2];
  for (const auto& [m, k] : im2d.morphisms) out.m.mmap[m] = k[2];
  for (const Id& t1 : g2.objects)
    for (const Id& t2 : g2.objects)
      out.m.fplus[{t1, t2}] =
          gb.identity(out.m.omap.at(im2d.mod->carrier.add(t1, t2)));
  out.m.fzero = gb.identity(f.cod->carrier.unit);
  for (const Id& r : gr.objects)
    for (const Id& t : g2.objects)
      out.m.ftwo[{r, t}] = gb.identity(out.m.omap.at(im2d.mod->action.obj.at({r, t})));

  RModHom composite = compose_mod_hom(compose_mod_hom(out.e, out.omega), out.m);
  if (!table_equal(composite, f))
    fail(Errc::malformed_table, "plain factorization composite differs from F");

  std::vector<Id> image;
  for (const auto& [x, y] : out.e.omap) image.push_back(y);
  std::sort(image.begin(), image.end());
  out.e_surjective = true;
  for (const Id& o : im1d.mod->carrier.base.objects)
    if (!std::binary_search(image.begin(), image.end(), o)) out.e_surjective = false;
  out.m_full = is_full(out.m).holds;
  out.m_faithful = is_faithful(out.m).holds;
  out.omega_witness = find_equivalence(im1d.mod, im2d.mod, budget);
  return out;
}

Factorization factorize(const RModHom& f, const SearchBudget& budget) {
  const RModule& A = *f.dom;
  const FinGroupoid& ga = A.carrier.base;
  const FinGroupoid& gr = A.ring->additive.base;
  Im1Data im1d = build_im1(f);
  Im2Data im2d = build_im2(f);

  Factorization out;
  out.im1 = im1d.mod;
  out.im2 = im2d.mod;
  out.im1_class_of = im1d.class_of;

  out.e.dom = f.dom;
  out.e.cod = im1d.mod;
  for (const Id& x : ga.objects) out.e.omap[x] = x;
  for (const Id& q : ga.morphisms) out.e.mmap[q] = im1d.class_of.at(q);
  const FinGroupoid& g1 = im1d.mod->carrier.base;
  for (const Id& x : ga.objects)
    for (const Id& y : ga.objects) out.e.fplus[{x, y}] = g1.identity(A.carrier.add(x, y));
  out.e.fzero = g1.identity(A.carrier.unit);
  for (const Id& r : gr.objects)
    for (const Id& x : ga.objects) out.e.ftwo[{r, x}] = g1.identity(A.act(r, x));

  out.omega.dom = im1d.mod;
  out.omega.cod = im2d.mod;
  auto omega_obj = [&](const Id& x) {
    return tuple_id({x, f.cod->carrier.base.identity(f.ap(x)), f.ap(x)});
  };
  for (const Id& x : ga.objects) out.omega.omap[x] = omega_obj(x);
  for (const Id& m : g1.morphisms)
    out.omega.mmap[m] =
        tuple_id({omega_obj(g1.source(m)), omega_obj(g1.target(m)), f.ap_m(m)});
  for (const Id& x : ga.objects)
    for (const Id& y : ga.objects) {
      const Id& src = out.omega.omap.at(A.carrier.add(x, y));
      const Id& tgt = im2d.mod->carrier.add(omega_obj(x), omega_obj(y));
      out.omega.fplus[{x, y}] = tuple_id({src, tgt, f.fp(x, y)});
    }
  out.omega.fzero =
      tuple_id({omega_obj(A.carrier.unit), im2d.mod->carrier.unit, f.fzero});
  for (const Id& r : gr.objects)
    for (const Id& x : ga.objects) {
      const Id& src = out.omega.omap.at(A.act(r, x));
      const Id& tgt = im2d.mod->action.obj.at({r, omega_obj(x)});
      out.omega.ftwo[{r, x}] = tuple_id({src, tgt, f.f2(r, x)});
    }
  const FinGroupoid& g2 = im2d.mod->carrier.base;
  for (const auto& [m, k] : out.omega.mmap)
    if (!g2.has_morphism(k)) fail(Errc::malformed_table, "omega image missing " + k);

  out.m.dom = im2d.mod;
  out.m.cod = f.cod;
  const FinGroupoid& gb = f.cod->carrier.base;
  for (const auto& [t, k] : im2d.objects) out.m.omap[t] = k[2];
  for (const auto& [m, k] : im2d.morphisms) out.m.mmap[m] = k[2];
  for (const Id& t1 : g2.objects)
    for (const Id& t2 : g2.objects)
      out.m.fplus[{t1, t2}] = gb.identity(out.m.omap.at(im2d.mod->carrier.add(t1, t2)));
  out.m.fzero = gb.identity(f.cod->carrier.unit);
  for (const Id& r : gr.objects)
    for (const Id& t : g2.objects)
      out.m.ftwo[{r, t}] = gb.identity(out.m.omap.at(im2d.mod->action.obj.at({r, t})));

  RModHom composite = compose_mod_hom(compose_mod_hom(out.e, out.omega), out.m);
  if (!table_equal(composite, f))
    fail(Errc::malformed_table, "factorization composite differs from F");

  std::vector<Id> image;
  for (const auto& [x, y] : out.e.omap) image.push_back(y);
  std::sort(image.begin(), image.end());
  out.e_surjective = true;
  for (const Id& o : g1.objects)
    if (!std::binary_search(image.begin(), image.end(), o)) out.e_surjective = false;
  out.e_full = is_full(out.e).holds;
  out.m_faithful = is_faithful(out.m).holds;
  out.omega_witness = find_equivalence(im1d.mod, im2d.mod, budget);
  return out;
}

CheckReport puppe_check(const RModHom& f, const SearchBudget& budget) {
  CheckReport report;
  const RModule& B = *f.cod;
  const FinGroupoid& gb = B.carrier.base;
  const FinGroupoid& gr = f.dom->ring->additive.base;

  auto comparison_entry = [&](const std::string& axiom, const RModHom& cmp,
                              std::shared_ptr<const RModule> m1,
                              std::shared_ptr<const RModule> m2) {
    std::vector<Id> witness;
    bool pass = true;
    CheckReport hom_report = validate_mod_hom(cmp);
    if (!hom_report.all_pass()) {
      pass = false;
      witness = {"comparison-invalid", hom_report.failing_axioms().front()};
    } else if (!is_full(cmp).holds || !is_faithful(cmp).holds ||
               !is_essentially_surjective(cmp).holds) {
      pass = false;
      witness = {"comparison-not-equivalence"};
    } else if (!find_equivalence(m1, m2, budget).has_value()) {
      pass = false;
      witness = {"EQUIV_NOT_FOUND", invariants_fingerprint(*m1).to_string(),
                 invariants_fingerprint(*m2).to_string()};
    }
    report.record(axiom, pass, witness);
  };

  // Prop 7: Coker(e_F) ≃ Im¹_pl F through Φ(N,a,f0) = l∘(a+1)∘F₊∘F(f0).
  {
    KernelResult k = kernel(f);
    CokernelResult c = cokernel(k.e);
    Im1PlData im1d = build_im1_pl(f);
    RModHom phi;
    phi.dom = c.coker;
    phi.cod = im1d.mod;
    const FinGroupoid& gc = c.coker->carrier.base;
    for (const Id& x : gc.objects) phi.omap[x] = x;
    for (const Id& m : gc.morphisms) {
      const auto& t = c.provenance.at(m);  // (A2, f0, K0)
      const auto& pair = k.provenance.at(t[2]);
      const Id& n = pair.first;
      const Id& a = pair.second;
      Id g = gb.compose_path({f.ap_m(t[1]), f.fp(n, t[0]),
                              B.carrier.add_m(a, gb.identity(f.ap(t[0]))),
                              B.carrier.lunit_at(f.ap(t[0]))});
      phi.mmap[m] = tuple_id({gc.source(m), t[0], g});
    }
    const FinGroupoid& gi = im1d.mod->carrier.base;
    for (const Id& x : gc.objects)
      for (const Id& y : gc.objects)
        phi.fplus[{x, y}] = gi.identity(f.dom->carrier.add(x, y));
    phi.fzero = gi.identity(f.dom->carrier.unit);
    for (const Id& r : gr.objects)
      for (const Id& x : gc.objects) phi.ftwo[{r, x}] = gi.identity(f.dom->act(r, x));
    comparison_entry("puppe.coker-of-kernel", phi, c.coker, im1d.mod);
  }

  // Prop 8: Im²_pl F ≃ Root(copip F) through Φ(X,φ,Bo) = Bo.
  {
    CopipResult cp = copip(f);
    RootResult rt = root(cp.sigma);
    Im2PlData im2d = build_im2_pl(f);
    RModHom phi;
    phi.dom = im2d.mod;
    phi.cod = rt.root;
    for (const auto& [t, k] : im2d.objects) phi.omap[t] = k[2];
    for (const auto& [m, k] : im2d.morphisms) phi.mmap[m] = k[2];
    const FinGroupoid& g2 = im2d.mod->carrier.base;
    for (const Id& t1 : g2.objects)
      for (const Id& t2 : g2.objects)
        phi.fplus[{t1, t2}] =
            gb.identity(phi.omap.at(im2d.mod->carrier.add(t1, t2)));
    phi.fzero = gb.identity(B.carrier.unit);
    for (const Id& r : gr.objects)
      for (const Id& t : g2.objects)
        phi.ftwo[{r, t}] = gb.identity(phi.omap.at(im2d.mod->action.obj.at({r, t})));
    comparison_entry("puppe.root-of-copip", phi, im2d.mod, rt.root);
  }

  // Prop 10: Im² F ≃ Ker(p_F) through Θ(X,φ,Bo) = (Bo, [l⁻¹∘φ⁻¹, X]).
  {
    CokernelResult c = cokernel(f);
    KernelResult kp = kernel(c.p);
    Im2Data im2d = build_im2(f);
    RModHom theta;
    theta.dom = im2d.mod;
    theta.cod = kp.ker;
    auto beta_of = [&](const std::array<Id, 3>& k) {
      Id braw = gb.compose(gb.inverse(B.carrier.lunit_at(f.ap(k[0]))), gb.inverse(k[1]));
      return c.class_of_raw(B.carrier.unit, braw, k[0]);
    };
    for (const auto& [t, k] : im2d.objects) theta.omap[t] = pair_id(k[2], beta_of(k));
    for (const auto& [m, k] : im2d.morphisms) {
      const auto& src = im2d.objects.at(k[0]);
      theta.mmap[m] = pair_id(k[2], beta_of(src));
    }
    const FinGroupoid& gk = kp.ker->carrier.base;
    const FinGroupoid& g2 = im2d.mod->carrier.base;
    for (const Id& t1 : g2.objects)
      for (const Id& t2 : g2.objects)
        theta.fplus[{t1, t2}] =
            gk.identity(theta.omap.at(im2d.mod->carrier.add(t1, t2)));
    theta.fzero = gk.identity(kp.ker->carrier.unit);
    for (const Id& r : gr.objects)
      for (const Id& t : g2.objects)
        theta.ftwo[{r, t}] = gk.identity(theta.omap.at(im2d.mod->action.obj.at({r, t})));
    comparison_entry("puppe.kernel-of-cokernel", theta, im2d.mod, kp.ker);
  }

  // Prop 11: Coroot(pip F) ≃ Im¹ F through the identity-on-objects Θ.
  {
    PipResult pp = pip(f);
    CorootResult cr = coroot(pp.sigma);
    Im1Data im1d = build_im1(f);
    RModHom theta;
    theta.dom = cr.coroot;
    theta.cod = im1d.mod;
    const FinGroupoid& gc = cr.coroot->carrier.base;
    for (const Id& x : gc.objects) theta.omap[x] = x;
    for (const Id& m : gc.morphisms) theta.mmap[m] = im1d.class_of.at(m);
    const FinGroupoid& g1 = im1d.mod->carrier.base;
    for (const Id& x : gc.objects)
      for (const Id& y : gc.objects)
        theta.fplus[{x, y}] = g1.identity(f.dom->carrier.add(x, y));
    theta.fzero = g1.identity(f.dom->carrier.unit);
    for (const Id& r : gr.objects)
      for (const Id& x : gc.objects) theta.ftwo[{r, x}] = g1.identity(f.dom->act(r, x));
    comparison_entry("puppe.coroot-of-pip", theta, cr.coroot, im1d.mod);
  }
  return report;
}

}  // namespace picard
