#include "picard/tworing.hpp"

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

Id discrete_id(const Id& x) { return "1(" + x + ")"; }

}  // namespace

const Id& TwoRing::mul(const Id& a, const Id& b) const {
  const Id* v = lookup(mult.obj, IdPair{a, b});
  if (!v) fail(Errc::malformed_table, "mult missing object pair (" + a + ", " + b + ")");
  return *v;
}

const Id& TwoRing::mul_m(const Id& f, const Id& g) const {
  const Id* v = lookup(mult.mor, IdPair{f, g});
  if (!v) fail(Errc::malformed_table, "mult missing morphism pair (" + f + ", " + g + ")");
  return *v;
}

const Id& TwoRing::massoc_at(const Id& r, const Id& s, const Id& t) const {
  const Id* v = lookup(massoc, IdTriple{r, s, t});
  if (!v) fail(Errc::malformed_table, "massoc missing (" + r + ", " + s + ", " + t + ")");
  return *v;
}

const Id& TwoRing::mlunit_at(const Id& r) const {
  const Id* v = lookup(mlunit, r);
  if (!v) fail(Errc::malformed_table, "mlunit missing " + r);
  return *v;
}

const Id& TwoRing::mrunit_at(const Id& r) const {
  const Id* v = lookup(mrunit, r);
  if (!v) fail(Errc::malformed_table, "mrunit missing " + r);
  return *v;
}

const Id& TwoRing::ldist_at(const Id& r, const Id& s0, const Id& s1) const {
  const Id* v = lookup(ldist, IdTriple{r, s0, s1});
  if (!v) fail(Errc::malformed_table, "ldist missing (" + r + ", " + s0 + ", " + s1 + ")");
  return *v;
}

const Id& TwoRing::rdist_at(const Id& r0, const Id& r1, const Id& s) const {
  const Id* v = lookup(rdist, IdTriple{r0, r1, s});
  if (!v) fail(Errc::malformed_table, "rdist missing (" + r0 + ", " + r1 + ", " + s + ")");
  return *v;
}

TwoRing build_discrete_ring(const RingTable& t) {
  GroupTable add{t.elements, t.add};
  Id zero;
  try {
    zero = require_abelian_group(add);
  } catch (const Error& e) {
    fail(Errc::not_ring, std::string("additive structure: ") + e.what());
  }
  std::vector<Id> sorted = t.elements;
  std::sort(sorted.begin(), sorted.end());
  auto known = [&](const Id& x) { return std::binary_search(sorted.begin(), sorted.end(), x); };
  for (const Id& a : t.elements)
    for (const Id& b : t.elements) {
      const Id* v = lookup(t.mul, IdPair{a, b});
      if (!v || !known(*v))
        fail(Errc::not_ring, "multiplication not closed at (" + a + ", " + b + ")");
    }
  for (const Id& a : t.elements)
    for (const Id& b : t.elements) {
      if (t.mul.at({a, b}) != t.mul.at({b, a}))
        fail(Errc::not_ring, "multiplication not commutative at (" + a + ", " + b + ")");
      for (const Id& c : t.elements) {
        if (t.mul.at({t.mul.at({a, b}), c}) != t.mul.at({a, t.mul.at({b, c})}))
          fail(Errc::not_ring, "multiplication not associative");
        if (t.mul.at({a, t.add.at({b, c})}) != t.add.at({t.mul.at({a, b}), t.mul.at({a, c})}))
          fail(Errc::not_ring,
               "distributivity fails at (" + a + ", " + b + ", " + c + ")");
      }
    }
  Id one;
  bool found = false;
  for (const Id& e : t.elements) {
    bool ok = true;
    for (const Id& x : t.elements)
      if (t.mul.at({e, x}) != x || t.mul.at({x, e}) != x) {
        ok = false;
        break;
      }
    if (ok) {
      one = e;
      found = true;
      break;
    }
  }
  if (!found) fail(Errc::not_ring, "no multiplicative unit");

  TwoRing r;
  r.additive = build_discrete(add);
  r.one = one;
  for (const Id& a : t.elements)
    for (const Id& b : t.elements) {
      r.mult.obj[{a, b}] = t.mul.at({a, b});
      r.mult.mor[{discrete_id(a), discrete_id(b)}] = discrete_id(t.mul.at({a, b}));
    }
  for (const Id& a : t.elements) {
    r.mlunit[a] = discrete_id(a);
    r.mrunit[a] = discrete_id(a);
    for (const Id& b : t.elements)
      for (const Id& c : t.elements) {
        r.massoc[{a, b, c}] = discrete_id(t.mul.at({t.mul.at({a, b}), c}));
        r.ldist[{a, b, c}] = discrete_id(t.mul.at({a, t.add.at({b, c})}));
        r.rdist[{a, b, c}] = discrete_id(t.mul.at({t.add.at({a, b}), c}));
      }
  }
  return r;
}

CheckReport validate_two_ring(const TwoRing& r) {
  CheckReport report;
  report.merge(validate_two_group(r.additive), "additive.");
  if (!report.all_pass()) return report;

  const SymTwoGroup& A = r.additive;
  const FinGroupoid& g = A.base;

  bool total = true;
  {
    Family f(report, "ring.mult-total");
    if (!f.require(g.has_object(r.one), {r.one})) total = false;
    for (const Id& x : g.objects) {
      for (const Id& y : g.objects) {
        const Id* v = lookup(r.mult.obj, IdPair{x, y});
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
          const Id* v = lookup(r.mult.mor, IdPair{m, n});
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
    Family f(report, "ring.mult-functorial");
    for (const Id& m : g.morphisms)
      for (const Id& n : g.morphisms) {
        bool ok = g.source(r.mul_m(m, n)) == r.mul(g.source(m), g.source(n)) &&
                  g.target(r.mul_m(m, n)) == r.mul(g.target(m), g.target(n));
        if (!f.require(ok, {m, n})) break;
      }
    if (!f.failed())
      for (const Id& x : g.objects)
        for (const Id& y : g.objects) {
          bool ok = r.mul_m(g.identity(x), g.identity(y)) == g.identity(r.mul(x, y));
          if (!f.require(ok, {x, y})) break;
        }
    if (!f.failed())
      for (const auto& [kl, vl] : g.comp) {
        for (const auto& [kr, vr] : g.comp) {
          Id lhs = r.mul_m(vl, vr);
          const Id* rhs =
              lookup(g.comp, IdPair{r.mul_m(kl.first, kr.first), r.mul_m(kl.second, kr.second)});
          if (!f.require(rhs && *rhs == lhs, {kl.first, kl.second, kr.first, kr.second})) break;
        }
        if (f.failed()) break;
      }
  }
  if (!report.all_pass()) return report;

  auto typed = [&](Family& f, const Id* m, const Id& from, const Id& to, std::vector<Id> w) {
    bool ok = m && g.has_morphism(*m) && g.source(*m) == from && g.target(*m) == to;
    return f.require(ok, std::move(w));
  };

  {
    Family f(report, "ring.massoc-typed");
    for (const Id& x : g.objects)
      for (const Id& y : g.objects) {
        for (const Id& z : g.objects) {
          const Id* m = lookup(r.massoc, IdTriple{x, y, z});
          if (!typed(f, m, r.mul(r.mul(x, y), z), r.mul(x, r.mul(y, z)), {x, y, z})) break;
        }
        if (f.failed()) break;
      }
  }
  {
    Family f(report, "ring.mlunit-typed");
    for (const Id& x : g.objects)
      if (!typed(f, lookup(r.mlunit, x), r.mul(r.one, x), x, {x})) break;
  }
  {
    Family f(report, "ring.mrunit-typed");
    for (const Id& x : g.objects)
      if (!typed(f, lookup(r.mrunit, x), r.mul(x, r.one), x, {x})) break;
  }
  {
    Family f(report, "ring.ldist-typed");
    for (const Id& x : g.objects)
      for (const Id& y : g.objects) {
        for (const Id& z : g.objects) {
          const Id* m = lookup(r.ldist, IdTriple{x, y, z});
          if (!typed(f, m, r.mul(x, A.add(y, z)), A.add(r.mul(x, y), r.mul(x, z)), {x, y, z}))
            break;
        }
        if (f.failed()) break;
      }
  }
  {
    Family f(report, "ring.rdist-typed");
    for (const Id& x : g.objects)
      for (const Id& y : g.objects) {
        for (const Id& z : g.objects) {
          const Id* m = lookup(r.rdist, IdTriple{x, y, z});
          if (!typed(f, m, r.mul(A.add(x, y), z), A.add(r.mul(x, z), r.mul(y, z)), {x, y, z}))
            break;
        }
        if (f.failed()) break;
      }
  }
  if (!report.all_pass()) return report;

  {
    Family f(report, "ring.massoc-natural");
    for (const Id& m1 : g.morphisms)
      for (const Id& m2 : g.morphisms) {
        for (const Id& m3 : g.morphisms) {
          Id lhs = g.compose(r.massoc_at(g.target(m1), g.target(m2), g.target(m3)),
                             r.mul_m(r.mul_m(m1, m2), m3));
          Id rhs = g.compose(r.mul_m(m1, r.mul_m(m2, m3)),
                             r.massoc_at(g.source(m1), g.source(m2), g.source(m3)));
          if (!f.require(lhs == rhs, {m1, m2, m3})) break;
        }
        if (f.failed()) break;
      }
  }
  {
    Family f(report, "ring.mlunit-natural");
    for (const Id& m : g.morphisms) {
      Id lhs = g.compose(r.mlunit_at(g.target(m)), r.mul_m(g.identity(r.one), m));
      Id rhs = g.compose(m, r.mlunit_at(g.source(m)));
      if (!f.require(lhs == rhs, {m})) break;
    }
  }
  {
    Family f(report, "ring.mrunit-natural");
    for (const Id& m : g.morphisms) {
      Id lhs = g.compose(r.mrunit_at(g.target(m)), r.mul_m(m, g.identity(r.one)));
      Id rhs = g.compose(m, r.mrunit_at(g.source(m)));
      if (!f.require(lhs == rhs, {m})) break;
    }
  }
  {
    Family f(report, "ring.ldist-natural");
    for (const Id& m : g.morphisms)
      for (const Id& n0 : g.morphisms) {
        for (const Id& n1 : g.morphisms) {
          Id lhs = g.compose(r.ldist_at(g.target(m), g.target(n0), g.target(n1)),
                             r.mul_m(m, A.add_m(n0, n1)));
          Id rhs = g.compose(A.add_m(r.mul_m(m, n0), r.mul_m(m, n1)),
                             r.ldist_at(g.source(m), g.source(n0), g.source(n1)));
          if (!f.require(lhs == rhs, {m, n0, n1})) break;
        }
        if (f.failed()) break;
      }
  }
  {
    Family f(report, "ring.rdist-natural");
    for (const Id& m0 : g.morphisms)
      for (const Id& m1 : g.morphisms) {
        for (const Id& n : g.morphisms) {
          Id lhs = g.compose(r.rdist_at(g.target(m0), g.target(m1), g.target(n)),
                             r.mul_m(A.add_m(m0, m1), n));
          Id rhs = g.compose(A.add_m(r.mul_m(m0, n), r.mul_m(m1, n)),
                             r.rdist_at(g.source(m0), g.source(m1), g.source(n)));
          if (!f.require(lhs == rhs, {m0, m1, n})) break;
        }
        if (f.failed()) break;
      }
  }
  {
    Family f(report, "ring.mult-pentagon");
    for (const Id& w : g.objects)
      for (const Id& x : g.objects) {
        for (const Id& y : g.objects)
          for (const Id& z : g.objects) {
            Id route1 = g.compose_path({r.mul_m(r.massoc_at(w, x, y), g.identity(z)),
                                        r.massoc_at(w, r.mul(x, y), z),
                                        r.mul_m(g.identity(w), r.massoc_at(x, y, z))});
            Id route2 = g.compose(r.massoc_at(w, x, r.mul(y, z)), r.massoc_at(r.mul(w, x), y, z));
            if (!f.require(route1 == route2, {w, x, y, z})) break;
          }
        if (f.failed()) break;
      }
  }
  {
    Family f(report, "ring.mult-triangle");
    for (const Id& x : g.objects)
      for (const Id& y : g.objects) {
        Id lhs = g.compose(r.mul_m(g.identity(x), r.mlunit_at(y)), r.massoc_at(x, r.one, y));
        Id rhs = r.mul_m(r.mrunit_at(x), g.identity(y));
        if (!f.require(lhs == rhs, {x, y})) break;
      }
  }
  {
    Family f(report, "ring.ldist-add-assoc");
    for (const Id& x : g.objects)
      for (const Id& y0 : g.objects) {
        for (const Id& y1 : g.objects)
          for (const Id& y2 : g.objects) {
            Id route1 = g.compose_path(
                {r.ldist_at(x, A.add(y0, y1), y2),
                 A.add_m(r.ldist_at(x, y0, y1), g.identity(r.mul(x, y2))),
                 A.assoc_at(r.mul(x, y0), r.mul(x, y1), r.mul(x, y2))});
            Id route2 = g.compose_path({r.mul_m(g.identity(x), A.assoc_at(y0, y1, y2)),
                                        r.ldist_at(x, y0, A.add(y1, y2)),
                                        A.add_m(g.identity(r.mul(x, y0)), r.ldist_at(x, y1, y2))});
            if (!f.require(route1 == route2, {x, y0, y1, y2})) break;
          }
        if (f.failed()) break;
      }
  }
  {
    Family f(report, "ring.rdist-add-assoc");
    for (const Id& x0 : g.objects)
      for (const Id& x1 : g.objects) {
        for (const Id& x2 : g.objects)
          for (const Id& y : g.objects) {
            Id route1 = g.compose_path(
                {r.rdist_at(A.add(x0, x1), x2, y),
                 A.add_m(r.rdist_at(x0, x1, y), g.identity(r.mul(x2, y))),
                 A.assoc_at(r.mul(x0, y), r.mul(x1, y), r.mul(x2, y))});
            Id route2 = g.compose_path({r.mul_m(A.assoc_at(x0, x1, x2), g.identity(y)),
                                        r.rdist_at(x0, A.add(x1, x2), y),
                                        A.add_m(g.identity(r.mul(x0, y)), r.rdist_at(x1, x2, y))});
            if (!f.require(route1 == route2, {x0, x1, x2, y})) break;
          }
        if (f.failed()) break;
      }
  }
  {
    Family f(report, "ring.dist-mult-assoc-left");
    for (const Id& x : g.objects)
      for (const Id& y : g.objects) {
        for (const Id& t0 : g.objects)
          for (const Id& t1 : g.objects) {
            Id route1 = g.compose(A.add_m(r.massoc_at(x, y, t0), r.massoc_at(x, y, t1)),
                                  r.ldist_at(r.mul(x, y), t0, t1));
            Id route2 = g.compose_path({r.massoc_at(x, y, A.add(t0, t1)),
                                        r.mul_m(g.identity(x), r.ldist_at(y, t0, t1)),
                                        r.ldist_at(x, r.mul(y, t0), r.mul(y, t1))});
            if (!f.require(route1 == route2, {x, y, t0, t1})) break;
          }
        if (f.failed()) break;
      }
  }
  {
    Family f(report, "ring.dist-mult-assoc-middle");
    for (const Id& x : g.objects)
      for (const Id& s0 : g.objects) {
        for (const Id& s1 : g.objects)
          for (const Id& t : g.objects) {
            Id route1 = g.compose_path(
                {r.mul_m(r.ldist_at(x, s0, s1), g.identity(t)),
                 r.rdist_at(r.mul(x, s0), r.mul(x, s1), t),
                 A.add_m(r.massoc_at(x, s0, t), r.massoc_at(x, s1, t))});
            Id route2 = g.compose_path({r.massoc_at(x, A.add(s0, s1), t),
                                        r.mul_m(g.identity(x), r.rdist_at(s0, s1, t)),
                                        r.ldist_at(x, r.mul(s0, t), r.mul(s1, t))});
            if (!f.require(route1 == route2, {x, s0, s1, t})) break;
          }
        if (f.failed()) break;
      }
  }
  {
    Family f(report, "ring.dist-mult-assoc-right");
    for (const Id& x0 : g.objects)
      for (const Id& x1 : g.objects) {
        for (const Id& y : g.objects)
          for (const Id& t : g.objects) {
            Id route1 = g.compose_path(
                {r.mul_m(r.rdist_at(x0, x1, y), g.identity(t)),
                 r.rdist_at(r.mul(x0, y), r.mul(x1, y), t),
                 A.add_m(r.massoc_at(x0, y, t), r.massoc_at(x1, y, t))});
            Id route2 = g.compose(r.rdist_at(x0, x1, r.mul(y, t)),
                                  r.massoc_at(A.add(x0, x1), y, t));
            if (!f.require(route1 == route2, {x0, x1, y, t})) break;
          }
        if (f.failed()) break;
      }
  }
  {
    Family f(report, "ring.ldist-unit");
    for (const Id& y0 : g.objects)
      for (const Id& y1 : g.objects) {
        Id lhs = g.compose(A.add_m(r.mlunit_at(y0), r.mlunit_at(y1)), r.ldist_at(r.one, y0, y1));
        Id rhs = r.mlunit_at(A.add(y0, y1));
        if (!f.require(lhs == rhs, {y0, y1})) break;
      }
  }
  {
    Family f(report, "ring.rdist-unit");
    for (const Id& x0 : g.objects)
      for (const Id& x1 : g.objects) {
        Id lhs = g.compose(A.add_m(r.mrunit_at(x0), r.mrunit_at(x1)), r.rdist_at(x0, x1, r.one));
        Id rhs = r.mrunit_at(A.add(x0, x1));
        if (!f.require(lhs == rhs, {x0, x1})) break;
      }
  }
  {
    Family f(report, "ring.ldist-sym");
    for (const Id& x : g.objects)
      for (const Id& y0 : g.objects) {
        for (const Id& y1 : g.objects) {
          Id lhs = g.compose(A.sym_at(r.mul(x, y0), r.mul(x, y1)), r.ldist_at(x, y0, y1));
          Id rhs = g.compose(r.ldist_at(x, y1, y0), r.mul_m(g.identity(x), A.sym_at(y0, y1)));
          if (!f.require(lhs == rhs, {x, y0, y1})) break;
        }
        if (f.failed()) break;
      }
  }
  {
    Family f(report, "ring.rdist-sym");
    for (const Id& x0 : g.objects)
      for (const Id& x1 : g.objects) {
        for (const Id& y : g.objects) {
          Id lhs = g.compose(A.sym_at(r.mul(x0, y), r.mul(x1, y)), r.rdist_at(x0, x1, y));
          Id rhs = g.compose(r.rdist_at(x1, x0, y), r.mul_m(A.sym_at(x0, x1), g.identity(y)));
          if (!f.require(lhs == rhs, {x0, x1, y})) break;
        }
        if (f.failed()) break;
      }
  }
  {
    Family f(report, "ring.dist-interchange");
    for (const Id& x0 : g.objects)
      for (const Id& x1 : g.objects) {
        for (const Id& y0 : g.objects)
          for (const Id& y1 : g.objects) {
            Id route1 = g.compose_path(
                {r.ldist_at(A.add(x0, x1), y0, y1),
                 A.add_m(r.rdist_at(x0, x1, y0), r.rdist_at(x0, x1, y1)),
                 interchange(A, r.mul(x0, y0), r.mul(x1, y0), r.mul(x0, y1), r.mul(x1, y1))});
            Id route2 = g.compose(A.add_m(r.ldist_at(x0, y0, y1), r.ldist_at(x1, y0, y1)),
                                  r.rdist_at(x0, x1, A.add(y0, y1)));
            if (!f.require(route1 == route2, {x0, x1, y0, y1})) break;
          }
        if (f.failed()) break;
      }
  }
  return report;
}

const Id& TwoRingHom::ap(const Id& obj) const {
  const Id* v = lookup(omap, obj);
  if (!v) fail(Errc::malformed_table, "ring hom omap missing " + obj);
  return *v;
}

const Id& TwoRingHom::ap_m(const Id& mor) const {
  const Id* v = lookup(mmap, mor);
  if (!v) fail(Errc::malformed_table, "ring hom mmap missing " + mor);
  return *v;
}

const Id& TwoRingHom::fp(const Id& a, const Id& b) const {
  const Id* v = lookup(fplus, IdPair{a, b});
  if (!v) fail(Errc::malformed_table, "ring hom fplus missing (" + a + ", " + b + ")");
  return *v;
}

const Id& TwoRingHom::fd(const Id& a, const Id& b) const {
  const Id* v = lookup(fdot, IdPair{a, b});
  if (!v) fail(Errc::malformed_table, "ring hom fdot missing (" + a + ", " + b + ")");
  return *v;
}

bool table_equal(const TwoRingHom& a, const TwoRingHom& b) {
  return a.omap == b.omap && a.mmap == b.mmap && a.fplus == b.fplus && a.fzero == b.fzero &&
         a.fdot == b.fdot && a.fone == b.fone;
}

TwoRingHom identity_ring_hom(std::shared_ptr<const TwoRing> r) {
  TwoRingHom f;
  f.dom = r;
  f.cod = r;
  const SymTwoGroup& A = r->additive;
  for (const Id& x : A.base.objects) f.omap[x] = x;
  for (const Id& m : A.base.morphisms) f.mmap[m] = m;
  for (const Id& x : A.base.objects)
    for (const Id& y : A.base.objects) {
      f.fplus[{x, y}] = A.base.identity(A.add(x, y));
      f.fdot[{x, y}] = A.base.identity(r->mul(x, y));
    }
  f.fzero = A.base.identity(A.unit);
  f.fone = A.base.identity(r->one);
  return f;
}

CheckReport validate_ring_hom(const TwoRingHom& f) {
  if (!f.dom || !f.cod) fail(Errc::malformed_table, "ring hom without endpoints");
  const TwoRing& R = *f.dom;
  const TwoRing& S = *f.cod;
  AdditiveHomView add_view{&R.additive, &S.additive, &f.omap, &f.mmap, &f.fplus, &f.fzero};
  CheckReport report = validate_additive_hom(add_view);
  if (!report.all_pass()) return report;

  const FinGroupoid& ga = R.additive.base;
  const FinGroupoid& gb = S.additive.base;

  {
    Family fam(report, "ringhom.fdot-typed");
    for (const Id& x : ga.objects)
      for (const Id& y : ga.objects) {
        const Id* m = lookup(f.fdot, IdPair{x, y});
        bool ok = m && gb.has_morphism(*m) && gb.source(*m) == f.ap(R.mul(x, y)) &&
                  gb.target(*m) == S.mul(f.ap(x), f.ap(y));
        if (!fam.require(ok, {x, y})) break;
      }
  }
  {
    Family fam(report, "ringhom.fone-typed");
    bool ok = gb.has_morphism(f.fone) && gb.source(f.fone) == f.ap(R.one) &&
              gb.target(f.fone) == S.one;
    fam.require(ok, {f.fone});
  }
  if (!report.all_pass()) return report;

  {
    Family fam(report, "ringhom.fdot-natural");
    for (const Id& m : ga.morphisms)
      for (const Id& n : ga.morphisms) {
        Id lhs = gb.compose(S.mul_m(f.ap_m(m), f.ap_m(n)), f.fd(ga.source(m), ga.source(n)));
        Id rhs = gb.compose(f.fd(ga.target(m), ga.target(n)), f.ap_m(R.mul_m(m, n)));
        if (!fam.require(lhs == rhs, {m, n})) break;
      }
  }
  {
    Family fam(report, "ringhom.massoc-square");
    for (const Id& x : ga.objects)
      for (const Id& y : ga.objects) {
        for (const Id& z : ga.objects) {
          Id lhs = gb.compose_path({f.fd(R.mul(x, y), z),
                                    S.mul_m(f.fd(x, y), gb.identity(f.ap(z))),
                                    S.massoc_at(f.ap(x), f.ap(y), f.ap(z))});
          Id rhs = gb.compose_path({f.ap_m(R.massoc_at(x, y, z)), f.fd(x, R.mul(y, z)),
                                    S.mul_m(gb.identity(f.ap(x)), f.fd(y, z))});
          if (!fam.require(lhs == rhs, {x, y, z})) break;
        }
        if (fam.failed()) break;
      }
  }
  {
    Family fam(report, "ringhom.mlunit-square");
    for (const Id& x : ga.objects) {
      Id lhs = gb.compose_path({f.fd(R.one, x), S.mul_m(f.fone, gb.identity(f.ap(x))),
                                S.mlunit_at(f.ap(x))});
      Id rhs = f.ap_m(R.mlunit_at(x));
      if (!fam.require(lhs == rhs, {x})) break;
    }
  }
  {
    Family fam(report, "ringhom.mrunit-square");
    for (const Id& x : ga.objects) {
      Id lhs = gb.compose_path({f.fd(x, R.one), S.mul_m(gb.identity(f.ap(x)), f.fone),
                                S.mrunit_at(f.ap(x))});
      Id rhs = f.ap_m(R.mrunit_at(x));
      if (!fam.require(lhs == rhs, {x})) break;
    }
  }
  {
    Family fam(report, "ringhom.ldist-square");
    for (const Id& x : ga.objects)
      for (const Id& y0 : ga.objects) {
        for (const Id& y1 : ga.objects) {
          Id route1 = gb.compose_path(
              {f.ap_m(R.ldist_at(x, y0, y1)), f.fp(R.mul(x, y0), R.mul(x, y1)),
               S.additive.add_m(f.fd(x, y0), f.fd(x, y1))});
          Id route2 = gb.compose_path(
              {f.fd(x, R.additive.add(y0, y1)), S.mul_m(gb.identity(f.ap(x)), f.fp(y0, y1)),
               S.ldist_at(f.ap(x), f.ap(y0), f.ap(y1))});
          if (!fam.require(route1 == route2, {x, y0, y1})) break;
        }
        if (fam.failed()) break;
      }
  }
  {
    Family fam(report, "ringhom.rdist-square");
    for (const Id& x0 : ga.objects)
      for (const Id& x1 : ga.objects) {
        for (const Id& y : ga.objects) {
          Id route1 = gb.compose_path(
              {f.ap_m(R.rdist_at(x0, x1, y)), f.fp(R.mul(x0, y), R.mul(x1, y)),
               S.additive.add_m(f.fd(x0, y), f.fd(x1, y))});
          Id route2 = gb.compose_path(
              {f.fd(R.additive.add(x0, x1), y), S.mul_m(f.fp(x0, x1), gb.identity(f.ap(y))),
               S.rdist_at(f.ap(x0), f.ap(x1), f.ap(y))});
          if (!fam.require(route1 == route2, {x0, x1, y})) break;
        }
        if (fam.failed()) break;
      }
  }
  return report;
}

CheckReport validate_ring_two_morphism(const TwoRingMor& e) {
  const TwoRingHom& F = e.source;
  const TwoRingHom& G = e.target;
  if (!F.dom || !G.dom || !F.cod || !G.cod || !(*F.dom == *G.dom) || !(*F.cod == *G.cod))
    fail(Errc::parallelism, "ring 2-morphism endpoints do not share dom/cod");
  AdditiveHomView fv{&F.dom->additive, &F.cod->additive, &F.omap, &F.mmap, &F.fplus, &F.fzero};
  AdditiveHomView gv{&G.dom->additive, &G.cod->additive, &G.omap, &G.mmap, &G.fplus, &G.fzero};
  CheckReport report = validate_additive_two_morphism(fv, gv, e.component);
  const CheckEntry* typed = report.entry("mor.component-typed");
  if (typed && !typed->pass) return report;

  const TwoRing& R = *F.dom;
  const TwoRing& S = *F.cod;
  const FinGroupoid& ga = R.additive.base;
  const FinGroupoid& gb = S.additive.base;
  {
    Family fam(report, "ringmor.mult-square");
    for (const Id& x : ga.objects)
      for (const Id& y : ga.objects) {
        Id lhs = gb.compose(S.mul_m(e.component.at(x), e.component.at(y)), F.fd(x, y));
        Id rhs = gb.compose(G.fd(x, y), e.component.at(R.mul(x, y)));
        if (!fam.require(lhs == rhs, {x, y})) break;
      }
  }
  {
    Family fam(report, "ringmor.one-square");
    Id lhs = gb.compose(G.fone, e.component.at(R.one));
    fam.require(lhs == F.fone, {R.one});
  }
  return report;
}

}  // namespace picard
