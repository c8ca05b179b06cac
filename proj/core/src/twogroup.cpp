#include "picard/twogroup.hpp"

#include <algorithm>

#include "picard/error.hpp"

namespace picard {

namespace {

template <typename M, typename K>
const typename M::mapped_type* lookup(const M& m, const K& key) {
  auto it = m.find(key);
  return it == m.end() ? nullptr : &it->second;
}

class Family {
 public:
  Family(CheckReport& report, std::string axiom) : report_(report), axiom_(std::move(axiom)) {}
  ~Family() { report_.record(axiom_, !failed_, witness_); }
  Family(const Family&) = delete;

  bool require(bool ok, std::vector<Id> witness) {
    if (!ok && !failed_) {
      failed_ = true;
      witness_ = std::move(witness);
    }
    return ok;
  }
  bool failed() const { return failed_; }

 private:
  CheckReport& report_;
  std::string axiom_;
  bool failed_ = false;
  std::vector<Id> witness_;
};

}  // namespace

const Id& SymTwoGroup::add(const Id& a, const Id& b) const {
  const Id* v = lookup(tensor.obj, IdPair{a, b});
  if (!v) fail(Errc::malformed_table, "tensor missing object pair (" + a + ", " + b + ")");
  return *v;
}

const Id& SymTwoGroup::add_m(const Id& f, const Id& g) const {
  const Id* v = lookup(tensor.mor, IdPair{f, g});
  if (!v) fail(Errc::malformed_table, "tensor missing morphism pair (" + f + ", " + g + ")");
  return *v;
}

const Id& SymTwoGroup::assoc_at(const Id& a, const Id& b, const Id& c) const {
  const Id* v = lookup(assoc, IdTriple{a, b, c});
  if (!v) fail(Errc::malformed_table, "assoc missing (" + a + ", " + b + ", " + c + ")");
  return *v;
}

const Id& SymTwoGroup::lunit_at(const Id& a) const {
  const Id* v = lookup(lunit, a);
  if (!v) fail(Errc::malformed_table, "lunit missing " + a);
  return *v;
}

const Id& SymTwoGroup::runit_at(const Id& a) const {
  const Id* v = lookup(runit, a);
  if (!v) fail(Errc::malformed_table, "runit missing " + a);
  return *v;
}

const Id& SymTwoGroup::sym_at(const Id& a, const Id& b) const {
  const Id* v = lookup(sym, IdPair{a, b});
  if (!v) fail(Errc::malformed_table, "sym missing (" + a + ", " + b + ")");
  return *v;
}

const Id& SymTwoGroup::dual_of(const Id& a) const {
  const Id* v = lookup(dual, a);
  if (!v) fail(Errc::malformed_table, "dual missing " + a);
  return *v;
}

const Id& SymTwoGroup::eta_at(const Id& a) const {
  const Id* v = lookup(eta, a);
  if (!v) fail(Errc::malformed_table, "eta missing " + a);
  return *v;
}

Id require_abelian_group(const GroupTable& t) {
  if (t.elements.empty()) fail(Errc::not_group, "empty element set");
  std::vector<Id> sorted = t.elements;
  std::sort(sorted.begin(), sorted.end());
  auto known = [&](const Id& x) { return std::binary_search(sorted.begin(), sorted.end(), x); };
  for (const Id& a : t.elements)
    for (const Id& b : t.elements) {
      const Id* v = lookup(t.add, IdPair{a, b});
      if (!v || !known(*v)) fail(Errc::not_group, "addition not closed at (" + a + ", " + b + ")");
    }
  for (const Id& a : t.elements)
    for (const Id& b : t.elements)
      if (t.add.at({a, b}) != t.add.at({b, a}))
        fail(Errc::not_abelian, "addition not commutative at (" + a + ", " + b + ")");
  Id unit;
  bool found = false;
  for (const Id& e : t.elements) {
    bool ok = true;
    for (const Id& x : t.elements)
      if (t.add.at({e, x}) != x || t.add.at({x, e}) != x) {
        ok = false;
        break;
      }
    if (ok) {
      unit = e;
      found = true;
      break;
    }
  }
  if (!found) fail(Errc::not_group, "no unit element");
  for (const Id& a : t.elements)
    for (const Id& b : t.elements)
      for (const Id& c : t.elements)
        if (t.add.at({t.add.at({a, b}), c}) != t.add.at({a, t.add.at({b, c})}))
          fail(Errc::not_group, "addition not associative at (" + a + ", " + b + ", " + c + ")");
  for (const Id& a : t.elements) {
    bool has_inverse = false;
    for (const Id& b : t.elements)
      if (t.add.at({a, b}) == unit) {
        has_inverse = true;
        break;
      }
    if (!has_inverse) fail(Errc::not_group, "no inverse for " + a);
  }
  return unit;
}

namespace {

Id negate(const GroupTable& t, const Id& unit, const Id& a) {
  for (const Id& b : t.elements)
    if (t.add.at({a, b}) == unit) return b;
  fail(Errc::not_group, "no inverse for " + a);
}

Id discrete_id(const Id& x) { return "1(" + x + ")"; }

}  // namespace

SymTwoGroup build_discrete(const GroupTable& g) {
  Id unit = require_abelian_group(g);
  SymTwoGroup a;
  a.base.objects = g.elements;
  for (const Id& x : g.elements) {
    Id m = discrete_id(x);
    a.base.morphisms.push_back(m);
    a.base.src[m] = x;
    a.base.tgt[m] = x;
    a.base.inv[m] = m;
    a.base.id_of[x] = m;
    a.base.comp[{m, m}] = m;
  }
  a.base.sort_tables();
  a.unit = unit;
  for (const Id& x : g.elements)
    for (const Id& y : g.elements) {
      a.tensor.obj[{x, y}] = g.add.at({x, y});
      a.tensor.mor[{discrete_id(x), discrete_id(y)}] = discrete_id(g.add.at({x, y}));
    }
  for (const Id& x : g.elements)
    for (const Id& y : g.elements) {
      a.sym[{x, y}] = discrete_id(g.add.at({x, y}));
      for (const Id& z : g.elements)
        a.assoc[{x, y, z}] = discrete_id(g.add.at({g.add.at({x, y}), z}));
    }
  for (const Id& x : g.elements) {
    a.lunit[x] = discrete_id(x);
    a.runit[x] = discrete_id(x);
    a.dual[x] = negate(g, unit, x);
    a.eta[x] = discrete_id(unit);
  }
  return a;
}

SymTwoGroup build_deloop(const GroupTable& h) {
  Id unit = require_abelian_group(h);
  SymTwoGroup a;
  const Id obj = "0";
  a.base.objects = {obj};
  a.base.morphisms = h.elements;
  a.base.sort_tables();
  for (const Id& m : h.elements) {
    a.base.src[m] = obj;
    a.base.tgt[m] = obj;
    a.base.inv[m] = negate(h, unit, m);
  }
  a.base.id_of[obj] = unit;
  for (const Id& f : h.elements)
    for (const Id& g : h.elements) a.base.comp[{f, g}] = h.add.at({f, g});
  a.unit = obj;
  a.tensor.obj[{obj, obj}] = obj;
  for (const Id& f : h.elements)
    for (const Id& g : h.elements) a.tensor.mor[{f, g}] = h.add.at({f, g});
  a.assoc[{obj, obj, obj}] = unit;
  a.lunit[obj] = unit;
  a.runit[obj] = unit;
  a.sym[{obj, obj}] = unit;
  a.dual[obj] = obj;
  a.eta[obj] = unit;
  return a;
}

CheckReport validate_two_group(const SymTwoGroup& a) {
  CheckReport report = validate_groupoid(a.base);
  if (!report.all_pass()) return report;
  const FinGroupoid& g = a.base;

  bool total = true;
  {
    Family f(report, "twogroup.tensor-total");
    if (!f.require(g.has_object(a.unit), {a.unit})) total = false;
    for (const Id& x : g.objects) {
      for (const Id& y : g.objects) {
        const Id* v = lookup(a.tensor.obj, IdPair{x, y});
        if (!f.require(v && g.has_object(*v), {x, y})) {
          total = false;
          break;
        }
      }
      if (f.failed()) break;
    }
    if (total)
      for (const Id& m : g.morphisms) {
        for (const Id& n : g.morphisms) {
          const Id* v = lookup(a.tensor.mor, IdPair{m, n});
          if (!f.require(v && g.has_morphism(*v), {m, n})) {
            total = false;
            break;
          }
        }
        if (f.failed()) break;
      }
  }
  if (!total) return report;

  {
    Family f(report, "twogroup.tensor-functorial");
    for (const Id& m : g.morphisms)
      for (const Id& n : g.morphisms) {
        bool ok = g.source(a.add_m(m, n)) == a.add(g.source(m), g.source(n)) &&
                  g.target(a.add_m(m, n)) == a.add(g.target(m), g.target(n));
        if (!f.require(ok, {m, n})) break;
      }
    if (!f.failed())
      for (const Id& x : g.objects)
        for (const Id& y : g.objects) {
          bool ok = a.add_m(g.identity(x), g.identity(y)) == g.identity(a.add(x, y));
          if (!f.require(ok, {x, y})) break;
        }
    if (!f.failed())
      for (const auto& [kl, vl] : g.comp) {
        for (const auto& [kr, vr] : g.comp) {
          Id lhs = a.add_m(vl, vr);
          const Id* rhs = lookup(g.comp, IdPair{a.add_m(kl.first, kr.first),
                                                a.add_m(kl.second, kr.second)});
          if (!f.require(rhs && *rhs == lhs, {kl.first, kl.second, kr.first, kr.second})) break;
        }
        if (f.failed()) break;
      }
  }
  if (!report.all_pass()) return report;

  auto typed = [&](Family& f, const std::map<Id, Id>::const_iterator, const Id& m, const Id& from,
                   const Id& to, std::vector<Id> witness) {
    bool ok = g.has_morphism(m) && g.source(m) == from && g.target(m) == to;
    return f.require(ok, std::move(witness));
  };

  {
    Family f(report, "twogroup.assoc-typed");
    for (const Id& x : g.objects)
      for (const Id& y : g.objects)
        for (const Id& z : g.objects) {
          const Id* m = lookup(a.assoc, IdTriple{x, y, z});
          if (!f.require(m != nullptr, {x, y, z})) break;
          if (!typed(f, {}, *m, a.add(a.add(x, y), z), a.add(x, a.add(y, z)), {x, y, z})) break;
        }
  }
  {
    Family f(report, "twogroup.lunit-typed");
    for (const Id& x : g.objects) {
      const Id* m = lookup(a.lunit, x);
      if (!f.require(m != nullptr, {x})) break;
      if (!typed(f, {}, *m, a.add(a.unit, x), x, {x})) break;
    }
  }
  {
    Family f(report, "twogroup.runit-typed");
    for (const Id& x : g.objects) {
      const Id* m = lookup(a.runit, x);
      if (!f.require(m != nullptr, {x})) break;
      if (!typed(f, {}, *m, a.add(x, a.unit), x, {x})) break;
    }
  }
  {
    Family f(report, "twogroup.sym-typed");
    for (const Id& x : g.objects)
      for (const Id& y : g.objects) {
        const Id* m = lookup(a.sym, IdPair{x, y});
        if (!f.require(m != nullptr, {x, y})) break;
        if (!typed(f, {}, *m, a.add(x, y), a.add(y, x), {x, y})) break;
      }
  }
  {
    Family f(report, "twogroup.dual-total");
    for (const Id& x : g.objects) {
      const Id* d = lookup(a.dual, x);
      if (!f.require(d && g.has_object(*d), {x})) break;
    }
  }
  if (!report.all_pass()) return report;
  {
    Family f(report, "twogroup.eta-typed");
    for (const Id& x : g.objects) {
      const Id* m = lookup(a.eta, x);
      if (!f.require(m != nullptr, {x})) break;
      if (!typed(f, {}, *m, a.add(a.dual_of(x), x), a.unit, {x})) break;
    }
  }
  if (!report.all_pass()) return report;

  {
    Family f(report, "twogroup.assoc-natural");
    for (const Id& m1 : g.morphisms)
      for (const Id& m2 : g.morphisms) {
        for (const Id& m3 : g.morphisms) {
          const Id& a1 = g.source(m1);
          const Id& a2 = g.source(m2);
          const Id& a3 = g.source(m3);
          const Id& b1 = g.target(m1);
          const Id& b2 = g.target(m2);
          const Id& b3 = g.target(m3);
          Id lhs = g.compose(a.assoc_at(b1, b2, b3), a.add_m(a.add_m(m1, m2), m3));
          Id rhs = g.compose(a.add_m(m1, a.add_m(m2, m3)), a.assoc_at(a1, a2, a3));
          if (!f.require(lhs == rhs, {m1, m2, m3})) break;
        }
        if (f.failed()) break;
      }
  }
  {
    Family f(report, "twogroup.lunit-natural");
    for (const Id& m : g.morphisms) {
      Id lhs = g.compose(a.lunit_at(g.target(m)), a.add_m(g.identity(a.unit), m));
      Id rhs = g.compose(m, a.lunit_at(g.source(m)));
      if (!f.require(lhs == rhs, {m})) break;
    }
  }
  {
    Family f(report, "twogroup.runit-natural");
    for (const Id& m : g.morphisms) {
      Id lhs = g.compose(a.runit_at(g.target(m)), a.add_m(m, g.identity(a.unit)));
      Id rhs = g.compose(m, a.runit_at(g.source(m)));
      if (!f.require(lhs == rhs, {m})) break;
    }
  }
  {
    Family f(report, "twogroup.sym-natural");
    for (const Id& m : g.morphisms)
      for (const Id& n : g.morphisms) {
        Id lhs = g.compose(a.sym_at(g.target(m), g.target(n)), a.add_m(m, n));
        Id rhs = g.compose(a.add_m(n, m), a.sym_at(g.source(m), g.source(n)));
        if (!f.require(lhs == rhs, {m, n})) break;
      }
  }
  {
    Family f(report, "twogroup.pentagon");
    for (const Id& w : g.objects)
      for (const Id& x : g.objects) {
        for (const Id& y : g.objects)
          for (const Id& z : g.objects) {
            Id route1 = g.compose_path({a.add_m(a.assoc_at(w, x, y), g.identity(z)),
                                        a.assoc_at(w, a.add(x, y), z),
                                        a.add_m(g.identity(w), a.assoc_at(x, y, z))});
            Id route2 = g.compose(a.assoc_at(w, x, a.add(y, z)), a.assoc_at(a.add(w, x), y, z));
            if (!f.require(route1 == route2, {w, x, y, z})) break;
          }
        if (f.failed()) break;
      }
  }
  {
    Family f(report, "twogroup.triangle");
    for (const Id& x : g.objects)
      for (const Id& y : g.objects) {
        Id lhs = g.compose(a.add_m(g.identity(x), a.lunit_at(y)), a.assoc_at(x, a.unit, y));
        Id rhs = a.add_m(a.runit_at(x), g.identity(y));
        if (!f.require(lhs == rhs, {x, y})) break;
      }
  }
  {
    Family f(report, "twogroup.hexagon");
    for (const Id& x : g.objects)
      for (const Id& y : g.objects) {
        for (const Id& z : g.objects) {
          Id lhs = g.compose_path(
              {a.assoc_at(x, y, z), a.sym_at(x, a.add(y, z)), a.assoc_at(y, z, x)});
          Id rhs = g.compose_path({a.add_m(a.sym_at(x, y), g.identity(z)), a.assoc_at(y, x, z),
                                   a.add_m(g.identity(y), a.sym_at(x, z))});
          if (!f.require(lhs == rhs, {x, y, z})) break;
        }
        if (f.failed()) break;
      }
  }
  {
    Family f(report, "twogroup.sym-involution");
    for (const Id& x : g.objects)
      for (const Id& y : g.objects) {
        Id round = g.compose(a.sym_at(x, y), a.sym_at(y, x));
        if (!f.require(round == g.identity(a.add(y, x)), {x, y})) break;
      }
  }
  return report;
}

Id interchange(const SymTwoGroup& a, const Id& x, const Id& y, const Id& z, const Id& w) {
  const FinGroupoid& g = a.base;
  return g.compose_path({
      a.assoc_at(x, y, a.add(z, w)),
      a.add_m(g.identity(x), g.inverse(a.assoc_at(y, z, w))),
      a.add_m(g.identity(x), a.add_m(a.sym_at(y, z), g.identity(w))),
      a.add_m(g.identity(x), a.assoc_at(z, y, w)),
      g.inverse(a.assoc_at(x, z, a.add(y, w))),
  });
}

Id interchange_alt(const SymTwoGroup& a, const Id& x, const Id& y, const Id& z, const Id& w) {
  const FinGroupoid& g = a.base;
  return g.compose_path({
      g.inverse(a.assoc_at(a.add(x, y), z, w)),
      a.add_m(a.assoc_at(x, y, z), g.identity(w)),
      a.add_m(a.add_m(g.identity(x), a.sym_at(y, z)), g.identity(w)),
      a.add_m(g.inverse(a.assoc_at(x, z, y)), g.identity(w)),
      a.assoc_at(a.add(x, z), y, w),
  });
}

const Id& TwoGroupHom::ap(const Id& obj) const {
  const Id* v = lookup(omap, obj);
  if (!v) fail(Errc::malformed_table, "hom omap missing " + obj);
  return *v;
}

const Id& TwoGroupHom::ap_m(const Id& mor) const {
  const Id* v = lookup(mmap, mor);
  if (!v) fail(Errc::malformed_table, "hom mmap missing " + mor);
  return *v;
}

const Id& TwoGroupHom::fp(const Id& a, const Id& b) const {
  const Id* v = lookup(fplus, IdPair{a, b});
  if (!v) fail(Errc::malformed_table, "hom fplus missing (" + a + ", " + b + ")");
  return *v;
}

const Id& AdditiveHomView::ap(const Id& obj) const {
  const Id* v = lookup(*omap, obj);
  if (!v) fail(Errc::malformed_table, "hom omap missing " + obj);
  return *v;
}

const Id& AdditiveHomView::ap_m(const Id& mor) const {
  const Id* v = lookup(*mmap, mor);
  if (!v) fail(Errc::malformed_table, "hom mmap missing " + mor);
  return *v;
}

const Id& AdditiveHomView::fp(const Id& a, const Id& b) const {
  const Id* v = lookup(*fplus, IdPair{a, b});
  if (!v) fail(Errc::malformed_table, "hom fplus missing (" + a + ", " + b + ")");
  return *v;
}

CheckReport validate_additive_hom(const AdditiveHomView& f) {
  CheckReport report;
  const SymTwoGroup& A = *f.dom;
  const SymTwoGroup& B = *f.cod;
  const FinGroupoid& ga = A.base;
  const FinGroupoid& gb = B.base;

  bool total = true;
  {
    Family fam(report, "hom.functor-total");
    for (const Id& x : ga.objects) {
      const Id* v = lookup(*f.omap, x);
      if (!fam.require(v && gb.has_object(*v), {x})) {
        total = false;
        break;
      }
    }
    if (total)
      for (const Id& m : ga.morphisms) {
        const Id* v = lookup(*f.mmap, m);
        if (!fam.require(v && gb.has_morphism(*v), {m})) {
          total = false;
          break;
        }
      }
    if (total)
      for (const Id& x : ga.objects)
        for (const Id& y : ga.objects) {
          const Id* v = lookup(*f.fplus, IdPair{x, y});
          if (!fam.require(v && gb.has_morphism(*v), {x, y})) {
            total = false;
            break;
          }
        }
    if (total && !fam.require(gb.has_morphism(*f.fzero), {*f.fzero})) total = false;
  }
  if (!total) return report;

  {
    Family fam(report, "hom.functor-boundary");
    for (const Id& m : ga.morphisms) {
      bool ok = gb.source(f.ap_m(m)) == f.ap(ga.source(m)) &&
                gb.target(f.ap_m(m)) == f.ap(ga.target(m));
      if (!fam.require(ok, {m})) break;
    }
  }
  {
    Family fam(report, "hom.functor-identity");
    for (const Id& x : ga.objects)
      if (!fam.require(f.ap_m(ga.identity(x)) == gb.identity(f.ap(x)), {x})) break;
  }
  {
    Family fam(report, "hom.functor-composition");
    for (const auto& [k, h] : ga.comp) {
      const Id* img = lookup(gb.comp, IdPair{f.ap_m(k.first), f.ap_m(k.second)});
      if (!fam.require(img && *img == f.ap_m(h), {k.first, k.second})) break;
    }
  }
  if (!report.all_pass()) return report;

  {
    Family fam(report, "hom.fplus-typed");
    for (const Id& x : ga.objects)
      for (const Id& y : ga.objects) {
        const Id& m = f.fp(x, y);
        bool ok = gb.source(m) == f.ap(A.add(x, y)) &&
                  gb.target(m) == B.add(f.ap(x), f.ap(y));
        if (!fam.require(ok, {x, y})) break;
      }
  }
  {
    Family fam(report, "hom.fzero-typed");
    bool ok = gb.source(*f.fzero) == f.ap(A.unit) && gb.target(*f.fzero) == B.unit;
    fam.require(ok, {*f.fzero});
  }
  if (!report.all_pass()) return report;

  {
    Family fam(report, "hom.fplus-natural");
    for (const Id& m : ga.morphisms)
      for (const Id& n : ga.morphisms) {
        Id lhs = gb.compose(B.add_m(f.ap_m(m), f.ap_m(n)), f.fp(ga.source(m), ga.source(n)));
        Id rhs = gb.compose(f.fp(ga.target(m), ga.target(n)), f.ap_m(A.add_m(m, n)));
        if (!fam.require(lhs == rhs, {m, n})) break;
      }
  }
  {
    Family fam(report, "hom.assoc-square");
    for (const Id& x : ga.objects)
      for (const Id& y : ga.objects) {
        for (const Id& z : ga.objects) {
          Id lhs = gb.compose_path({f.fp(A.add(x, y), z),
                                    B.add_m(f.fp(x, y), gb.identity(f.ap(z))),
                                    B.assoc_at(f.ap(x), f.ap(y), f.ap(z))});
          Id rhs = gb.compose_path({f.ap_m(A.assoc_at(x, y, z)), f.fp(x, A.add(y, z)),
                                    B.add_m(gb.identity(f.ap(x)), f.fp(y, z))});
          if (!fam.require(lhs == rhs, {x, y, z})) break;
        }
        if (fam.failed()) break;
      }
  }
  {
    Family fam(report, "hom.lunit-square");
    for (const Id& x : ga.objects) {
      Id lhs = gb.compose_path({f.fp(A.unit, x), B.add_m(*f.fzero, gb.identity(f.ap(x))),
                                B.lunit_at(f.ap(x))});
      Id rhs = f.ap_m(A.lunit_at(x));
      if (!fam.require(lhs == rhs, {x})) break;
    }
  }
  {
    Family fam(report, "hom.runit-square");
    for (const Id& x : ga.objects) {
      Id lhs = gb.compose_path({f.fp(x, A.unit), B.add_m(gb.identity(f.ap(x)), *f.fzero),
                                B.runit_at(f.ap(x))});
      Id rhs = f.ap_m(A.runit_at(x));
      if (!fam.require(lhs == rhs, {x})) break;
    }
  }
  {
    Family fam(report, "hom.sym-square");
    for (const Id& x : ga.objects)
      for (const Id& y : ga.objects) {
        Id lhs = gb.compose(B.sym_at(f.ap(x), f.ap(y)), f.fp(x, y));
        Id rhs = gb.compose(f.fp(y, x), f.ap_m(A.sym_at(x, y)));
        if (!fam.require(lhs == rhs, {x, y})) break;
      }
  }
  return report;
}

CheckReport validate_additive_two_morphism(const AdditiveHomView& f, const AdditiveHomView& g,
                                           const std::map<Id, Id>& component) {
  if (!(*f.dom == *g.dom) || !(*f.cod == *g.cod))
    fail(Errc::parallelism, "2-morphism endpoints do not share dom/cod");
  CheckReport report;
  const SymTwoGroup& A = *f.dom;
  const SymTwoGroup& B = *f.cod;
  const FinGroupoid& ga = A.base;
  const FinGroupoid& gb = B.base;

  {
    Family fam(report, "mor.component-typed");
    for (const Id& x : ga.objects) {
      const Id* c = lookup(component, x);
      bool ok = c && gb.has_morphism(*c) && gb.source(*c) == f.ap(x) && gb.target(*c) == g.ap(x);
      if (!fam.require(ok, {x})) break;
    }
  }
  if (!report.all_pass()) return report;
  {
    Family fam(report, "mor.natural");
    for (const Id& m : ga.morphisms) {
      Id lhs = gb.compose(component.at(ga.target(m)), f.ap_m(m));
      Id rhs = gb.compose(g.ap_m(m), component.at(ga.source(m)));
      if (!fam.require(lhs == rhs, {m})) break;
    }
  }
  {
    Family fam(report, "mor.add-square");
    for (const Id& x : ga.objects)
      for (const Id& y : ga.objects) {
        Id lhs = gb.compose(B.add_m(component.at(x), component.at(y)), f.fp(x, y));
        Id rhs = gb.compose(g.fp(x, y), component.at(A.add(x, y)));
        if (!fam.require(lhs == rhs, {x, y})) break;
      }
  }
  {
    Family fam(report, "mor.zero-square");
    Id lhs = gb.compose(*g.fzero, component.at(A.unit));
    fam.require(lhs == *f.fzero, {A.unit});
  }
  return report;
}

namespace {

AdditiveHomView view(const TwoGroupHom& f) {
  return AdditiveHomView{&f.dom, &f.cod, &f.omap, &f.mmap, &f.fplus, &f.fzero};
}

}  // namespace

CheckReport validate_hom(const TwoGroupHom& f) { return validate_additive_hom(view(f)); }

CheckReport validate_two_morphism(const TwoGroupMor& e) {
  return validate_additive_two_morphism(view(e.source), view(e.target), e.component);
}

TwoGroupHom identity_hom(const SymTwoGroup& a) {
  TwoGroupHom f;
  f.dom = a;
  f.cod = a;
  for (const Id& x : a.base.objects) f.omap[x] = x;
  for (const Id& m : a.base.morphisms) f.mmap[m] = m;
  for (const Id& x : a.base.objects)
    for (const Id& y : a.base.objects) f.fplus[{x, y}] = a.base.identity(a.add(x, y));
  f.fzero = a.base.identity(a.unit);
  return f;
}

TwoGroupHom compose_hom(const TwoGroupHom& f, const TwoGroupHom& g) {
  if (!(f.cod == g.dom)) fail(Errc::domain_mismatch, "compose_hom endpoints");
  TwoGroupHom h;
  h.dom = f.dom;
  h.cod = g.cod;
  for (const auto& [x, y] : f.omap) h.omap[x] = g.ap(y);
  for (const auto& [m, n] : f.mmap) h.mmap[m] = g.ap_m(n);
  for (const Id& x : f.dom.base.objects)
    for (const Id& y : f.dom.base.objects)
      h.fplus[{x, y}] =
          g.cod.base.compose(g.fp(f.ap(x), f.ap(y)), g.ap_m(f.fp(x, y)));
  h.fzero = g.cod.base.compose(g.fzero, g.ap_m(f.fzero));
  return h;
}

TwoGroupMor identity_two_morphism(const TwoGroupHom& f) {
  TwoGroupMor e;
  e.source = f;
  e.target = f;
  for (const Id& x : f.dom.base.objects) e.component[x] = f.cod.base.identity(f.ap(x));
  return e;
}

TwoGroupMor inverse_two_morphism(const TwoGroupMor& e) {
  TwoGroupMor out;
  out.source = e.target;
  out.target = e.source;
  for (const auto& [x, m] : e.component) out.component[x] = e.source.cod.base.inverse(m);
  return out;
}

TwoGroupMor vcomp(const TwoGroupMor& t, const TwoGroupMor& s) {
  if (!(t.target == s.source)) fail(Errc::domain_mismatch, "vcomp endpoints");
  TwoGroupMor out;
  out.source = t.source;
  out.target = s.target;
  for (const auto& [x, m] : t.component)
    out.component[x] = t.source.cod.base.compose(s.component.at(x), m);
  return out;
}

TwoGroupMor hcomp(const TwoGroupMor& alpha, const TwoGroupMor& beta) {
  if (!(alpha.source.cod == beta.source.dom)) fail(Errc::domain_mismatch, "hcomp endpoints");
  TwoGroupMor out;
  out.source = compose_hom(alpha.source, beta.source);
  out.target = compose_hom(alpha.target, beta.target);
  const FinGroupoid& gc = beta.source.cod.base;
  for (const Id& x : alpha.source.dom.base.objects) {
    out.component[x] = gc.compose(beta.component.at(alpha.target.ap(x)),
                                  beta.source.ap_m(alpha.component.at(x)));
  }
  return out;
}

}  // namespace picard
