#include "picard/rmodule.hpp"

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

}  // namespace

const Id& RModule::act(const Id& r, const Id& m) const {
  const Id* v = lookup(action.obj, IdPair{r, m});
  if (!v) fail(Errc::malformed_table, "action missing object pair (" + r + ", " + m + ")");
  return *v;
}

const Id& RModule::act_m(const Id& f, const Id& g) const {
  const Id* v = lookup(action.mor, IdPair{f, g});
  if (!v) fail(Errc::malformed_table, "action missing morphism pair (" + f + ", " + g + ")");
  return *v;
}

const Id& RModule::adist_at(const Id& r, const Id& m, const Id& n) const {
  const Id* v = lookup(adist, IdTriple{r, m, n});
  if (!v) fail(Errc::malformed_table, "adist missing (" + r + ", " + m + ", " + n + ")");
  return *v;
}

const Id& RModule::bdist_at(const Id& r, const Id& s, const Id& m) const {
  const Id* v = lookup(bdist, IdTriple{r, s, m});
  if (!v) fail(Errc::malformed_table, "bdist missing (" + r + ", " + s + ", " + m + ")");
  return *v;
}

const Id& RModule::bassoc_at(const Id& r, const Id& s, const Id& m) const {
  const Id* v = lookup(bassoc, IdTriple{r, s, m});
  if (!v) fail(Errc::malformed_table, "bassoc missing (" + r + ", " + s + ", " + m + ")");
  return *v;
}

const Id& RModule::iunit_at(const Id& m) const {
  const Id* v = lookup(iunit, m);
  if (!v) fail(Errc::malformed_table, "iunit missing " + m);
  return *v;
}

const Id& RModule::zzero_at(const Id& r) const {
  const Id* v = lookup(zzero, r);
  if (!v) fail(Errc::malformed_table, "zzero missing " + r);
  return *v;
}

bool same_ring(const RModule& a, const RModule& b) {
  if (a.ring == b.ring) return true;
  return a.ring && b.ring && *a.ring == *b.ring;
}

bool table_equal(const RModule& a, const RModule& b) {
  return same_ring(a, b) && a.carrier == b.carrier && a.action == b.action &&
         a.adist == b.adist && a.bdist == b.bdist && a.bassoc == b.bassoc &&
         a.iunit == b.iunit && a.zzero == b.zzero;
}

RModule build_discrete_module(std::shared_ptr<const TwoRing> ring, const ModuleTable& m) {
  const FinGroupoid& rg = ring->additive.base;
  for (const Id& mor : rg.morphisms)
    if (mor != rg.identity(rg.source(mor)))
      fail(Errc::not_module, "ring is not discrete");

  GroupTable add{m.elements, m.add};
  SymTwoGroup carrier;
  try {
    carrier = build_discrete(add);
  } catch (const Error& e) {
    fail(Errc::not_module, std::string("carrier: ") + e.what());
  }

  std::vector<Id> sorted = m.elements;
  std::sort(sorted.begin(), sorted.end());
  auto known = [&](const Id& x) { return std::binary_search(sorted.begin(), sorted.end(), x); };
  auto act = [&](const Id& r, const Id& x) -> const Id& {
    const Id* v = lookup(m.action, IdPair{r, x});
    if (!v || !known(*v)) fail(Errc::not_module, "action not defined at (" + r + ", " + x + ")");
    return *v;
  };
  const SymTwoGroup& R = ring->additive;
  for (const Id& r : rg.objects)
    for (const Id& s : rg.objects)
      for (const Id& x : m.elements) {
        if (act(R.add(r, s), x) != m.add.at({act(r, x), act(s, x)}))
          fail(Errc::not_module, "(" + r + "+" + s + ")·" + x + " != " + r + "·" + x + "+" + s +
                                     "·" + x);
        if (act(ring->mul(r, s), x) != act(r, act(s, x)))
          fail(Errc::not_module, "(" + r + s + ")·" + x + " != " + r + "·(" + s + "·" + x + ")");
      }
  for (const Id& r : rg.objects)
    for (const Id& x : m.elements)
      for (const Id& y : m.elements)
        if (act(r, m.add.at({x, y})) != m.add.at({act(r, x), act(r, y)}))
          fail(Errc::not_module,
               r + "·(" + x + "+" + y + ") != " + r + "·" + x + "+" + r + "·" + y);
  for (const Id& x : m.elements)
    if (act(ring->one, x) != x) fail(Errc::not_module, "1·" + x + " != " + x);

  RModule out;
  out.ring = std::move(ring);
  out.carrier = std::move(carrier);
  for (const Id& r : rg.objects)
    for (const Id& x : m.elements) {
      out.action.obj[{r, x}] = act(r, x);
      out.action.mor[{rg.identity(r), discrete_id(x)}] = discrete_id(act(r, x));
    }
  for (const Id& r : rg.objects) {
    out.zzero[r] = discrete_id(out.carrier.unit);
    for (const Id& x : m.elements)
      for (const Id& y : m.elements)
        out.adist[{r, x, y}] = discrete_id(act(r, m.add.at({x, y})));
    for (const Id& s : rg.objects)
      for (const Id& x : m.elements) {
        out.bdist[{r, s, x}] = discrete_id(act(R.add(r, s), x));
        out.bassoc[{r, s, x}] = discrete_id(act(out.ring->mul(r, s), x));
      }
  }
  for (const Id& x : m.elements) out.iunit[x] = discrete_id(x);
  return out;
}

CheckReport validate_module(const RModule& mod) {
  CheckReport report;
  if (!mod.ring) fail(Errc::malformed_table, "module without ring");
  report.merge(validate_two_group(mod.carrier), "carrier.");
  if (!report.all_pass()) return report;

  const SymTwoGroup& M = mod.carrier;
  const SymTwoGroup& R = mod.ring->additive;
  const TwoRing& ring = *mod.ring;
  const FinGroupoid& gm = M.base;
  const FinGroupoid& gr = R.base;

  bool total = true;
  {
    Family f(report, "module.action-total");
    for (const Id& r : gr.objects) {
      for (const Id& x : gm.objects) {
        const Id* v = lookup(mod.action.obj, IdPair{r, x});
        if (!f.require(v && gm.has_object(*v), {r, x})) {
          total = false;
          break;
        }
      }
      if (f.failed()) break;
    }
    if (total)
      for (const Id& p : gr.morphisms) {
        for (const Id& q : gm.morphisms) {
          const Id* v = lookup(mod.action.mor, IdPair{p, q});
          if (!f.require(v && gm.has_morphism(*v), {p, q})) {
            total = false;
            break;
          }
        }
        if (f.failed()) break;
      }
  }
  if (!total) return report;

  {
    Family f(report, "module.action-functorial");
    for (const Id& p : gr.morphisms)
      for (const Id& q : gm.morphisms) {
        bool ok = gm.source(mod.act_m(p, q)) == mod.act(gr.source(p), gm.source(q)) &&
                  gm.target(mod.act_m(p, q)) == mod.act(gr.target(p), gm.target(q));
        if (!f.require(ok, {p, q})) break;
      }
    if (!f.failed())
      for (const Id& r : gr.objects)
        for (const Id& x : gm.objects) {
          bool ok = mod.act_m(gr.identity(r), gm.identity(x)) == gm.identity(mod.act(r, x));
          if (!f.require(ok, {r, x})) break;
        }
    if (!f.failed())
      for (const auto& [kr, vr] : gr.comp) {
        for (const auto& [km, vm] : gm.comp) {
          Id lhs = mod.act_m(vr, vm);
          const Id* rhs =
              lookup(gm.comp, IdPair{mod.act_m(kr.first, km.first), mod.act_m(kr.second, km.second)});
          if (!f.require(rhs && *rhs == lhs, {kr.first, kr.second, km.first, km.second})) break;
        }
        if (f.failed()) break;
      }
  }
  if (!report.all_pass()) return report;

  auto typed = [&](Family& f, const Id* mor, const Id& from, const Id& to, std::vector<Id> w) {
    bool ok = mor && gm.has_morphism(*mor) && gm.source(*mor) == from && gm.target(*mor) == to;
    return f.require(ok, std::move(w));
  };

  {
    Family f(report, "module.adist-typed");
    for (const Id& r : gr.objects)
      for (const Id& x : gm.objects) {
        for (const Id& y : gm.objects) {
          const Id* v = lookup(mod.adist, IdTriple{r, x, y});
          if (!typed(f, v, mod.act(r, M.add(x, y)), M.add(mod.act(r, x), mod.act(r, y)),
                     {r, x, y}))
            break;
        }
        if (f.failed()) break;
      }
  }
  {
    Family f(report, "module.bdist-typed");
    for (const Id& r : gr.objects)
      for (const Id& s : gr.objects) {
        for (const Id& x : gm.objects) {
          const Id* v = lookup(mod.bdist, IdTriple{r, s, x});
          if (!typed(f, v, mod.act(R.add(r, s), x), M.add(mod.act(r, x), mod.act(s, x)),
                     {r, s, x}))
            break;
        }
        if (f.failed()) break;
      }
  }
  {
    Family f(report, "module.bassoc-typed");
    for (const Id& r : gr.objects)
      for (const Id& s : gr.objects) {
        for (const Id& x : gm.objects) {
          const Id* v = lookup(mod.bassoc, IdTriple{r, s, x});
          if (!typed(f, v, mod.act(ring.mul(r, s), x), mod.act(r, mod.act(s, x)), {r, s, x}))
            break;
        }
        if (f.failed()) break;
      }
  }
  {
    Family f(report, "module.iunit-typed");
    for (const Id& x : gm.objects)
      if (!typed(f, lookup(mod.iunit, x), mod.act(ring.one, x), x, {x})) break;
  }
  {
    Family f(report, "module.zzero-typed");
    for (const Id& r : gr.objects)
      if (!typed(f, lookup(mod.zzero, r), mod.act(r, M.unit), M.unit, {r})) break;
  }
  if (!report.all_pass()) return report;

  {
    Family f(report, "module.adist-natural");
    for (const Id& p : gr.morphisms)
      for (const Id& q1 : gm.morphisms) {
        for (const Id& q2 : gm.morphisms) {
          Id lhs = gm.compose(mod.adist_at(gr.target(p), gm.target(q1), gm.target(q2)),
                              mod.act_m(p, M.add_m(q1, q2)));
          Id rhs = gm.compose(M.add_m(mod.act_m(p, q1), mod.act_m(p, q2)),
                              mod.adist_at(gr.source(p), gm.source(q1), gm.source(q2)));
          if (!f.require(lhs == rhs, {p, q1, q2})) break;
        }
        if (f.failed()) break;
      }
  }
  {
    Family f(report, "module.bdist-natural");
    for (const Id& p1 : gr.morphisms)
      for (const Id& p2 : gr.morphisms) {
        for (const Id& q : gm.morphisms) {
          Id lhs = gm.compose(mod.bdist_at(gr.target(p1), gr.target(p2), gm.target(q)),
                              mod.act_m(R.add_m(p1, p2), q));
          Id rhs = gm.compose(M.add_m(mod.act_m(p1, q), mod.act_m(p2, q)),
                              mod.bdist_at(gr.source(p1), gr.source(p2), gm.source(q)));
          if (!f.require(lhs == rhs, {p1, p2, q})) break;
        }
        if (f.failed()) break;
      }
  }
  {
    Family f(report, "module.bassoc-natural");
    for (const Id& p1 : gr.morphisms)
      for (const Id& p2 : gr.morphisms) {
        for (const Id& q : gm.morphisms) {
          Id lhs = gm.compose(mod.bassoc_at(gr.target(p1), gr.target(p2), gm.target(q)),
                              mod.act_m(ring.mul_m(p1, p2), q));
          Id rhs = gm.compose(mod.act_m(p1, mod.act_m(p2, q)),
                              mod.bassoc_at(gr.source(p1), gr.source(p2), gm.source(q)));
          if (!f.require(lhs == rhs, {p1, p2, q})) break;
        }
        if (f.failed()) break;
      }
  }
  {
    Family f(report, "module.iunit-natural");
    for (const Id& q : gm.morphisms) {
      Id lhs = gm.compose(mod.iunit_at(gm.target(q)), mod.act_m(gr.identity(ring.one), q));
      Id rhs = gm.compose(q, mod.iunit_at(gm.source(q)));
      if (!f.require(lhs == rhs, {q})) break;
    }
  }
  {
    Family f(report, "module.zzero-natural");
    for (const Id& p : gr.morphisms) {
      Id lhs = gm.compose(mod.zzero_at(gr.target(p)), mod.act_m(p, gm.identity(M.unit)));
      Id rhs = mod.zzero_at(gr.source(p));
      if (!f.require(lhs == rhs, {p})) break;
    }
  }
  if (!report.all_pass()) return report;

  auto ract = [&](const Id& r, const Id& q) { return mod.act_m(gr.identity(r), q); };
  auto mact = [&](const Id& p, const Id& x) { return mod.act_m(p, gm.identity(x)); };

  {
    Family f(report, "module.bassoc-pentagon");
    for (const Id& r : gr.objects)
      for (const Id& s : gr.objects)
        for (const Id& t : gr.objects) {
          for (const Id& x : gm.objects) {
            Id route1 = gm.compose(mod.bassoc_at(r, s, mod.act(t, x)),
                                   mod.bassoc_at(ring.mul(r, s), t, x));
            Id route2 = gm.compose_path({mact(ring.massoc_at(r, s, t), x),
                                         mod.bassoc_at(r, ring.mul(s, t), x),
                                         ract(r, mod.bassoc_at(s, t, x))});
            if (!f.require(route1 == route2, {r, s, t, x})) break;
          }
          if (f.failed()) break;
        }
  }
  {
    Family f(report, "module.bassoc-unit-left");
    for (const Id& s : gr.objects)
      for (const Id& x : gm.objects) {
        Id lhs = gm.compose(mod.iunit_at(mod.act(s, x)), mod.bassoc_at(ring.one, s, x));
        Id rhs = mact(ring.mlunit_at(s), x);
        if (!f.require(lhs == rhs, {s, x})) break;
      }
  }
  {
    Family f(report, "module.bassoc-unit-right");
    for (const Id& r : gr.objects)
      for (const Id& x : gm.objects) {
        Id lhs = gm.compose(ract(r, mod.iunit_at(x)), mod.bassoc_at(r, ring.one, x));
        Id rhs = mact(ring.mrunit_at(r), x);
        if (!f.require(lhs == rhs, {r, x})) break;
      }
  }
  {
    Family f(report, "module.adist-add-assoc");
    for (const Id& r : gr.objects)
      for (const Id& x : gm.objects)
        for (const Id& y : gm.objects) {
          for (const Id& z : gm.objects) {
            Id route1 = gm.compose_path(
                {mod.adist_at(r, M.add(x, y), z),
                 M.add_m(mod.adist_at(r, x, y), gm.identity(mod.act(r, z))),
                 M.assoc_at(mod.act(r, x), mod.act(r, y), mod.act(r, z))});
            Id route2 = gm.compose_path(
                {ract(r, M.assoc_at(x, y, z)), mod.adist_at(r, x, M.add(y, z)),
                 M.add_m(gm.identity(mod.act(r, x)), mod.adist_at(r, y, z))});
            if (!f.require(route1 == route2, {r, x, y, z})) break;
          }
          if (f.failed()) break;
        }
  }
  {
    Family f(report, "module.adist-sym");
    for (const Id& r : gr.objects)
      for (const Id& x : gm.objects) {
        for (const Id& y : gm.objects) {
          Id lhs = gm.compose(M.sym_at(mod.act(r, x), mod.act(r, y)), mod.adist_at(r, x, y));
          Id rhs = gm.compose(mod.adist_at(r, y, x), ract(r, M.sym_at(x, y)));
          if (!f.require(lhs == rhs, {r, x, y})) break;
        }
        if (f.failed()) break;
      }
  }
  {
    Family f(report, "module.adist-zero");
    for (const Id& r : gr.objects)
      for (const Id& x : gm.objects) {
        Id lhs = gm.compose_path({mod.adist_at(r, M.unit, x),
                                  M.add_m(mod.zzero_at(r), gm.identity(mod.act(r, x))),
                                  M.lunit_at(mod.act(r, x))});
        Id rhs = ract(r, M.lunit_at(x));
        if (!f.require(lhs == rhs, {r, x})) break;
      }
  }
  {
    Family f(report, "module.bdist-add-assoc");
    for (const Id& r : gr.objects)
      for (const Id& s : gr.objects)
        for (const Id& t : gr.objects) {
          for (const Id& x : gm.objects) {
            Id route1 = gm.compose_path(
                {mod.bdist_at(R.add(r, s), t, x),
                 M.add_m(mod.bdist_at(r, s, x), gm.identity(mod.act(t, x))),
                 M.assoc_at(mod.act(r, x), mod.act(s, x), mod.act(t, x))});
            Id route2 = gm.compose_path(
                {mact(R.assoc_at(r, s, t), x), mod.bdist_at(r, R.add(s, t), x),
                 M.add_m(gm.identity(mod.act(r, x)), mod.bdist_at(s, t, x))});
            if (!f.require(route1 == route2, {r, s, t, x})) break;
          }
          if (f.failed()) break;
        }
  }
  {
    Family f(report, "module.bdist-sym");
    for (const Id& r : gr.objects)
      for (const Id& s : gr.objects) {
        for (const Id& x : gm.objects) {
          Id lhs = gm.compose(M.sym_at(mod.act(r, x), mod.act(s, x)), mod.bdist_at(r, s, x));
          Id rhs = gm.compose(mod.bdist_at(s, r, x), mact(R.sym_at(r, s), x));
          if (!f.require(lhs == rhs, {r, s, x})) break;
        }
        if (f.failed()) break;
      }
  }
  {
    Family f(report, "module.iunit-adist");
    for (const Id& x : gm.objects)
      for (const Id& y : gm.objects) {
        Id lhs = gm.compose(M.add_m(mod.iunit_at(x), mod.iunit_at(y)),
                            mod.adist_at(ring.one, x, y));
        Id rhs = mod.iunit_at(M.add(x, y));
        if (!f.require(lhs == rhs, {x, y})) break;
      }
  }
  {
    Family f(report, "module.zzero-bassoc");
    for (const Id& r : gr.objects)
      for (const Id& s : gr.objects) {
        Id lhs = mod.zzero_at(ring.mul(r, s));
        Id rhs = gm.compose_path(
            {mod.bassoc_at(r, s, M.unit), ract(r, mod.zzero_at(s)), mod.zzero_at(r)});
        if (!f.require(lhs == rhs, {r, s})) break;
      }
  }
  {
    Family f(report, "module.zzero-bdist");
    for (const Id& r : gr.objects)
      for (const Id& s : gr.objects) {
        Id lhs = mod.zzero_at(R.add(r, s));
        Id rhs = gm.compose_path({mod.bdist_at(r, s, M.unit),
                                  M.add_m(mod.zzero_at(r), mod.zzero_at(s)), M.lunit_at(M.unit)});
        if (!f.require(lhs == rhs, {r, s})) break;
      }
  }
  {
    Family f(report, "module.zzero-iunit");
    f.require(mod.iunit_at(M.unit) == mod.zzero_at(ring.one), {ring.one, M.unit});
  }
  {
    Family f(report, "module.mixed-bassoc-adist");
    for (const Id& r : gr.objects)
      for (const Id& s : gr.objects)
        for (const Id& x : gm.objects) {
          for (const Id& y : gm.objects) {
            Id route1 = gm.compose(
                M.add_m(mod.bassoc_at(r, s, x), mod.bassoc_at(r, s, y)),
                mod.adist_at(ring.mul(r, s), x, y));
            Id route2 = gm.compose_path(
                {mod.bassoc_at(r, s, M.add(x, y)), ract(r, mod.adist_at(s, x, y)),
                 mod.adist_at(r, mod.act(s, x), mod.act(s, y))});
            if (!f.require(route1 == route2, {r, s, x, y})) break;
          }
          if (f.failed()) break;
        }
  }
  {
    Family f(report, "module.mixed-bassoc-ldist");
    for (const Id& r : gr.objects)
      for (const Id& s : gr.objects)
        for (const Id& t : gr.objects) {
          for (const Id& x : gm.objects) {
            Id route1 = gm.compose_path(
                {mact(ring.ldist_at(r, s, t), x), mod.bdist_at(ring.mul(r, s), ring.mul(r, t), x),
                 M.add_m(mod.bassoc_at(r, s, x), mod.bassoc_at(r, t, x))});
            Id route2 = gm.compose_path(
                {mod.bassoc_at(r, R.add(s, t), x), ract(r, mod.bdist_at(s, t, x)),
                 mod.adist_at(r, mod.act(s, x), mod.act(t, x))});
            if (!f.require(route1 == route2, {r, s, t, x})) break;
          }
          if (f.failed()) break;
        }
  }
  {
    Family f(report, "module.mixed-bdist-rdist");
    for (const Id& r : gr.objects)
      for (const Id& s : gr.objects)
        for (const Id& t : gr.objects) {
          for (const Id& x : gm.objects) {
            Id route1 = gm.compose_path(
                {mact(ring.rdist_at(r, s, t), x), mod.bdist_at(ring.mul(r, t), ring.mul(s, t), x),
                 M.add_m(mod.bassoc_at(r, t, x), mod.bassoc_at(s, t, x))});
            Id route2 = gm.compose(mod.bdist_at(r, s, mod.act(t, x)),
                                   mod.bassoc_at(R.add(r, s), t, x));
            if (!f.require(route1 == route2, {r, s, t, x})) break;
          }
          if (f.failed()) break;
        }
  }
  return report;
}

const Id& RModHom::ap(const Id& obj) const {
  const Id* v = lookup(omap, obj);
  if (!v) fail(Errc::malformed_table, "module hom omap missing " + obj);
  return *v;
}

const Id& RModHom::ap_m(const Id& mor) const {
  const Id* v = lookup(mmap, mor);
  if (!v) fail(Errc::malformed_table, "module hom mmap missing " + mor);
  return *v;
}

const Id& RModHom::fp(const Id& a, const Id& b) const {
  const Id* v = lookup(fplus, IdPair{a, b});
  if (!v) fail(Errc::malformed_table, "module hom fplus missing (" + a + ", " + b + ")");
  return *v;
}

const Id& RModHom::f2(const Id& r, const Id& m) const {
  const Id* v = lookup(ftwo, IdPair{r, m});
  if (!v) fail(Errc::malformed_table, "module hom ftwo missing (" + r + ", " + m + ")");
  return *v;
}

bool table_equal(const RModHom& a, const RModHom& b) {
  return a.omap == b.omap && a.mmap == b.mmap && a.fplus == b.fplus && a.fzero == b.fzero &&
         a.ftwo == b.ftwo;
}

bool table_equal(const RModMor& a, const RModMor& b) {
  return table_equal(a.source, b.source) && table_equal(a.target, b.target) &&
         a.component == b.component;
}

AdditiveHomView additive_view(const RModHom& f) {
  return AdditiveHomView{&f.dom->carrier, &f.cod->carrier, &f.omap, &f.mmap, &f.fplus, &f.fzero};
}

CheckReport validate_mod_hom(const RModHom& f) {
  if (!f.dom || !f.cod) fail(Errc::malformed_table, "module hom without endpoints");
  if (!same_ring(*f.dom, *f.cod)) fail(Errc::ring_mismatch, "module hom endpoints over distinct rings");
  CheckReport report = validate_additive_hom(additive_view(f));
  if (!report.all_pass()) return report;

  const RModule& DM = *f.dom;
  const RModule& CM = *f.cod;
  const SymTwoGroup& M = DM.carrier;
  const SymTwoGroup& N = CM.carrier;
  const FinGroupoid& gm = M.base;
  const FinGroupoid& gn = N.base;
  const FinGroupoid& gr = DM.ring->additive.base;
  const SymTwoGroup& R = DM.ring->additive;

  {
    Family fam(report, "modhom.ftwo-typed");
    for (const Id& r : gr.objects)
      for (const Id& x : gm.objects) {
        const Id* v = lookup(f.ftwo, IdPair{r, x});
        bool ok = v && gn.has_morphism(*v) && gn.source(*v) == f.ap(DM.act(r, x)) &&
                  gn.target(*v) == CM.act(r, f.ap(x));
        if (!fam.require(ok, {r, x})) break;
      }
  }
  if (!report.all_pass()) return report;

  {
    Family fam(report, "modhom.ftwo-natural");
    for (const Id& p : gr.morphisms)
      for (const Id& q : gm.morphisms) {
        Id lhs = gn.compose(CM.act_m(p, f.ap_m(q)), f.f2(gr.source(p), gm.source(q)));
        Id rhs = gn.compose(f.f2(gr.target(p), gm.target(q)), f.ap_m(DM.act_m(p, q)));
        if (!fam.require(lhs == rhs, {p, q})) break;
      }
  }
  {
    Family fam(report, "modhom.adist-square");
    for (const Id& r : gr.objects)
      for (const Id& x : gm.objects) {
        for (const Id& y : gm.objects) {
          Id route1 = gn.compose_path(
              {f.ap_m(DM.adist_at(r, x, y)), f.fp(DM.act(r, x), DM.act(r, y)),
               N.add_m(f.f2(r, x), f.f2(r, y))});
          Id route2 = gn.compose_path(
              {f.f2(r, M.add(x, y)), CM.act_m(gr.identity(r), f.fp(x, y)),
               CM.adist_at(r, f.ap(x), f.ap(y))});
          if (!fam.require(route1 == route2, {r, x, y})) break;
        }
        if (fam.failed()) break;
      }
  }
  {
    Family fam(report, "modhom.bdist-square");
    for (const Id& r : gr.objects)
      for (const Id& s : gr.objects) {
        for (const Id& x : gm.objects) {
          Id route1 = gn.compose_path(
              {f.ap_m(DM.bdist_at(r, s, x)), f.fp(DM.act(r, x), DM.act(s, x)),
               N.add_m(f.f2(r, x), f.f2(s, x))});
          Id route2 = gn.compose(CM.bdist_at(r, s, f.ap(x)), f.f2(R.add(r, s), x));
          if (!fam.require(route1 == route2, {r, s, x})) break;
        }
        if (fam.failed()) break;
      }
  }
  {
    Family fam(report, "modhom.bassoc-square");
    for (const Id& r : gr.objects)
      for (const Id& s : gr.objects) {
        for (const Id& x : gm.objects) {
          Id route1 = gn.compose_path(
              {f.ap_m(DM.bassoc_at(r, s, x)), f.f2(r, DM.act(s, x)),
               CM.act_m(gr.identity(r), f.f2(s, x))});
          Id route2 = gn.compose(CM.bassoc_at(r, s, f.ap(x)), f.f2(DM.ring->mul(r, s), x));
          if (!fam.require(route1 == route2, {r, s, x})) break;
        }
        if (fam.failed()) break;
      }
  }
  {
    Family fam(report, "modhom.iunit-square");
    for (const Id& x : gm.objects) {
      Id lhs = gn.compose(CM.iunit_at(f.ap(x)), f.f2(DM.ring->one, x));
      Id rhs = f.ap_m(DM.iunit_at(x));
      if (!fam.require(lhs == rhs, {x})) break;
    }
  }
  {
    Family fam(report, "modhom.zzero-square");
    for (const Id& r : gr.objects) {
      Id lhs = gn.compose(f.fzero, f.ap_m(DM.zzero_at(r)));
      Id rhs = gn.compose_path(
          {f.f2(r, M.unit), CM.act_m(gr.identity(r), f.fzero), CM.zzero_at(r)});
      if (!fam.require(lhs == rhs, {r})) break;
    }
  }
  return report;
}

CheckReport validate_mod_two_morphism(const RModMor& t) {
  const RModHom& F = t.source;
  const RModHom& G = t.target;
  if (!F.dom || !G.dom || !F.cod || !G.cod || !table_equal(*F.dom, *G.dom) ||
      !table_equal(*F.cod, *G.cod))
    fail(Errc::parallelism, "module 2-morphism endpoints do not share dom/cod");
  CheckReport report =
      validate_additive_two_morphism(additive_view(F), additive_view(G), t.component);
  const CheckEntry* typed = report.entry("mor.component-typed");
  if (typed && !typed->pass) return report;

  const RModule& DM = *F.dom;
  const RModule& CM = *F.cod;
  const FinGroupoid& gm = DM.carrier.base;
  const FinGroupoid& gn = CM.carrier.base;
  const FinGroupoid& gr = DM.ring->additive.base;
  {
    Family fam(report, "modmor.action-square");
    for (const Id& r : gr.objects)
      for (const Id& x : gm.objects) {
        Id lhs = gn.compose(CM.act_m(gr.identity(r), t.component.at(x)), F.f2(r, x));
        Id rhs = gn.compose(G.f2(r, x), t.component.at(DM.act(r, x)));
        if (!fam.require(lhs == rhs, {r, x})) break;
      }
  }
  return report;
}

RModHom identity_mod_hom(std::shared_ptr<const RModule> m) {
  RModHom f;
  f.dom = m;
  f.cod = m;
  const SymTwoGroup& M = m->carrier;
  for (const Id& x : M.base.objects) f.omap[x] = x;
  for (const Id& q : M.base.morphisms) f.mmap[q] = q;
  for (const Id& x : M.base.objects)
    for (const Id& y : M.base.objects) f.fplus[{x, y}] = M.base.identity(M.add(x, y));
  f.fzero = M.base.identity(M.unit);
  for (const Id& r : m->ring->additive.base.objects)
    for (const Id& x : M.base.objects) f.ftwo[{r, x}] = M.base.identity(m->act(r, x));
  return f;
}

RModHom zero_hom(std::shared_ptr<const RModule> dom, std::shared_ptr<const RModule> cod) {
  if (!same_ring(*dom, *cod)) fail(Errc::ring_mismatch, "zero_hom endpoints over distinct rings");
  RModHom f;
  f.dom = dom;
  f.cod = cod;
  const SymTwoGroup& M = dom->carrier;
  const SymTwoGroup& N = cod->carrier;
  for (const Id& x : M.base.objects) f.omap[x] = N.unit;
  for (const Id& q : M.base.morphisms) f.mmap[q] = N.base.identity(N.unit);
  for (const Id& x : M.base.objects)
    for (const Id& y : M.base.objects)
      f.fplus[{x, y}] = N.base.inverse(N.lunit_at(N.unit));
  f.fzero = N.base.identity(N.unit);
  for (const Id& r : dom->ring->additive.base.objects)
    for (const Id& x : M.base.objects) f.ftwo[{r, x}] = N.base.inverse(cod->zzero_at(r));
  return f;
}

RModHom compose_mod_hom(const RModHom& f, const RModHom& g) {
  if (!table_equal(*f.cod, *g.dom)) fail(Errc::domain_mismatch, "compose_mod_hom endpoints");
  RModHom h;
  h.dom = f.dom;
  h.cod = g.cod;
  const FinGroupoid& gc = g.cod->carrier.base;
  for (const auto& [x, y] : f.omap) h.omap[x] = g.ap(y);
  for (const auto& [m, n] : f.mmap) h.mmap[m] = g.ap_m(n);
  for (const Id& x : f.dom->carrier.base.objects)
    for (const Id& y : f.dom->carrier.base.objects)
      h.fplus[{x, y}] = gc.compose(g.fp(f.ap(x), f.ap(y)), g.ap_m(f.fp(x, y)));
  h.fzero = gc.compose(g.fzero, g.ap_m(f.fzero));
  for (const Id& r : f.dom->ring->additive.base.objects)
    for (const Id& x : f.dom->carrier.base.objects)
      h.ftwo[{r, x}] = gc.compose(g.f2(r, f.ap(x)), g.ap_m(f.f2(r, x)));
  return h;
}

RModMor identity_mod_mor(const RModHom& f) {
  RModMor t;
  t.source = f;
  t.target = f;
  for (const Id& x : f.dom->carrier.base.objects)
    t.component[x] = f.cod->carrier.base.identity(f.ap(x));
  return t;
}

RModMor inverse_mod_mor(const RModMor& t) {
  RModMor out;
  out.source = t.target;
  out.target = t.source;
  for (const auto& [x, m] : t.component)
    out.component[x] = t.source.cod->carrier.base.inverse(m);
  return out;
}

RModMor vcomp(const RModMor& t, const RModMor& s) {
  if (!table_equal(t.target, s.source)) fail(Errc::domain_mismatch, "vcomp endpoints");
  RModMor out;
  out.source = t.source;
  out.target = s.target;
  for (const auto& [x, m] : t.component)
    out.component[x] = t.source.cod->carrier.base.compose(s.component.at(x), m);
  return out;
}

RModMor hcomp(const RModMor& alpha, const RModMor& beta) {
  if (!table_equal(*alpha.source.cod, *beta.source.dom))
    fail(Errc::domain_mismatch, "hcomp endpoints");
  RModMor out;
  out.source = compose_mod_hom(alpha.source, beta.source);
  out.target = compose_mod_hom(alpha.target, beta.target);
  const FinGroupoid& gc = beta.source.cod->carrier.base;
  for (const Id& x : alpha.source.dom->carrier.base.objects)
    out.component[x] = gc.compose(beta.component.at(alpha.target.ap(x)),
                                  beta.source.ap_m(alpha.component.at(x)));
  return out;
}

RModMor whisker_post(const RModMor& alpha, const RModHom& g) {
  return hcomp(alpha, identity_mod_mor(g));
}

RModMor whisker_pre(const RModHom& f, const RModMor& beta) {
  return hcomp(identity_mod_mor(f), beta);
}

namespace {

// Pointwise sum of homs: (F+G)(x) = F(x)+G(x) with the interchange-based
// F₊ and the distributor-corrected F₂.
RModHom pointwise_sum(const RModHom& f, const RModHom& g) {
  const RModule& N = *f.cod;
  const SymTwoGroup& C = N.carrier;
  const FinGroupoid& gc = C.base;
  RModHom h;
  h.dom = f.dom;
  h.cod = f.cod;
  for (const Id& x : f.dom->carrier.base.objects) h.omap[x] = C.add(f.ap(x), g.ap(x));
  for (const Id& q : f.dom->carrier.base.morphisms) h.mmap[q] = C.add_m(f.ap_m(q), g.ap_m(q));
  for (const Id& x : f.dom->carrier.base.objects)
    for (const Id& y : f.dom->carrier.base.objects) {
      Id step1 = C.add_m(f.fp(x, y), g.fp(x, y));
      Id step2 = interchange(C, f.ap(x), f.ap(y), g.ap(x), g.ap(y));
      h.fplus[{x, y}] = gc.compose(step2, step1);
    }
  h.fzero = gc.compose(C.lunit_at(C.unit), C.add_m(f.fzero, g.fzero));
  for (const Id& r : f.dom->ring->additive.base.objects)
    for (const Id& x : f.dom->carrier.base.objects) {
      Id step1 = C.add_m(f.f2(r, x), g.f2(r, x));
      Id step2 = gc.inverse(N.adist_at(r, f.ap(x), g.ap(x)));
      h.ftwo[{r, x}] = gc.compose(step2, step1);
    }
  return h;
}

}  // namespace

HomTwoGroupResult hom_two_group(std::shared_ptr<const RModule> m,
                                std::shared_ptr<const RModule> n, const SearchBudget& budget) {
  if (!same_ring(*m, *n)) fail(Errc::ring_mismatch, "hom_two_group over distinct rings");
  HomTwoGroupResult out;
  out.objects = enumerate_mod_homs(m, n, budget);
  const std::size_t count = out.objects.size();
  std::map<std::string, Id> hom_id;
  std::vector<Id> hom_names(count);
  for (std::size_t i = 0; i < count; ++i) {
    hom_names[i] = padded_id("F", i, count);
    hom_id[hom_key(out.objects[i])] = hom_names[i];
  }
  auto find_hom = [&](const RModHom& h) -> const Id& {
    auto it = hom_id.find(hom_key(h));
    if (it == hom_id.end())
      fail(Errc::malformed_table, "hom enumeration is not closed under the construction");
    return it->second;
  };

  // Morphisms, enumerated per ordered hom pair and named in that order.
  std::vector<std::pair<std::size_t, std::size_t>> mor_endpoints;
  std::vector<RModMor> mors;
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      for (RModMor& t : enumerate_mod_mors(out.objects[i], out.objects[j], budget)) {
        mors.push_back(std::move(t));
        mor_endpoints.push_back({i, j});
      }
    }
  std::map<std::string, Id> mor_id;
  std::vector<Id> mor_names(mors.size());
  for (std::size_t k = 0; k < mors.size(); ++k) {
    mor_names[k] = padded_id("t", k, mors.size());
    mor_id[hom_key(mors[k].source) + "#" + hom_key(mors[k].target) + "#" +
           component_key(mors[k].component)] = mor_names[k];
  }
  auto find_mor = [&](const RModHom& srch, const RModHom& tgth,
                      const std::map<Id, Id>& component) -> const Id& {
    auto it = mor_id.find(hom_key(srch) + "#" + hom_key(tgth) + "#" + component_key(component));
    if (it == mor_id.end())
      fail(Errc::malformed_table, "2-morphism enumeration is not closed under the construction");
    return it->second;
  };

  SymTwoGroup& H = out.hom;
  H.base.objects = hom_names;
  H.base.morphisms = mor_names;
  H.base.sort_tables();
  for (std::size_t k = 0; k < mors.size(); ++k) {
    H.base.src[mor_names[k]] = hom_names[mor_endpoints[k].first];
    H.base.tgt[mor_names[k]] = hom_names[mor_endpoints[k].second];
    const RModMor inv = inverse_mod_mor(mors[k]);
    H.base.inv[mor_names[k]] = find_mor(inv.source, inv.target, inv.component);
  }
  for (std::size_t i = 0; i < count; ++i) {
    const RModMor idm = identity_mod_mor(out.objects[i]);
    H.base.id_of[hom_names[i]] = find_mor(idm.source, idm.target, idm.component);
  }
  for (std::size_t k1 = 0; k1 < mors.size(); ++k1)
    for (std::size_t k2 = 0; k2 < mors.size(); ++k2) {
      if (mor_endpoints[k2].second != mor_endpoints[k1].first) continue;
      const RModMor comp = vcomp(mors[k2], mors[k1]);
      H.base.comp[{mor_names[k1], mor_names[k2]}] =
          find_mor(comp.source, comp.target, comp.component);
    }

  const RModHom zero = zero_hom(m, n);
  H.unit = find_hom(zero);
  const SymTwoGroup& C = n->carrier;

  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      const RModHom sum = pointwise_sum(out.objects[i], out.objects[j]);
      H.tensor.obj[{hom_names[i], hom_names[j]}] = find_hom(sum);
    }
  for (std::size_t k1 = 0; k1 < mors.size(); ++k1)
    for (std::size_t k2 = 0; k2 < mors.size(); ++k2) {
      const RModMor& t1 = mors[k1];
      const RModMor& t2 = mors[k2];
      RModMor sum;
      sum.source = pointwise_sum(t1.source, t2.source);
      sum.target = pointwise_sum(t1.target, t2.target);
      for (const Id& x : m->carrier.base.objects)
        sum.component[x] = C.add_m(t1.component.at(x), t2.component.at(x));
      H.tensor.mor[{mor_names[k1], mor_names[k2]}] =
          find_mor(sum.source, sum.target, sum.component);
    }
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      // Symmetry component: pointwise symmetry of the target.
      const RModHom sum_ij = pointwise_sum(out.objects[i], out.objects[j]);
      const RModHom sum_ji = pointwise_sum(out.objects[j], out.objects[i]);
      std::map<Id, Id> component;
      for (const Id& x : m->carrier.base.objects)
        component[x] = C.sym_at(out.objects[i].ap(x), out.objects[j].ap(x));
      H.sym[{hom_names[i], hom_names[j]}] = find_mor(sum_ij, sum_ji, component);
      for (std::size_t k = 0; k < count; ++k) {
        const RModHom sum_ij_k = pointwise_sum(sum_ij, out.objects[k]);
        const RModHom sum_jk = pointwise_sum(out.objects[j], out.objects[k]);
        const RModHom sum_i_jk = pointwise_sum(out.objects[i], sum_jk);
        std::map<Id, Id> assoc_component;
        for (const Id& x : m->carrier.base.objects)
          assoc_component[x] =
              C.assoc_at(out.objects[i].ap(x), out.objects[j].ap(x), out.objects[k].ap(x));
        H.assoc[{hom_names[i], hom_names[j], hom_names[k]}] =
            find_mor(sum_ij_k, sum_i_jk, assoc_component);
      }
    }
  for (std::size_t i = 0; i < count; ++i) {
    const RModHom sum_zero_i = pointwise_sum(zero, out.objects[i]);
    const RModHom sum_i_zero = pointwise_sum(out.objects[i], zero);
    std::map<Id, Id> lcomponent, rcomponent;
    for (const Id& x : m->carrier.base.objects) {
      lcomponent[x] = C.lunit_at(out.objects[i].ap(x));
      rcomponent[x] = C.runit_at(out.objects[i].ap(x));
    }
    H.lunit[hom_names[i]] = find_mor(sum_zero_i, out.objects[i], lcomponent);
    H.runit[hom_names[i]] = find_mor(sum_i_zero, out.objects[i], rcomponent);
  }
  // Duals: the pointwise-dual object map together with the pointwise eta.
  for (std::size_t i = 0; i < count; ++i) {
    std::map<Id, Id> want;
    for (const Id& x : m->carrier.base.objects) want[x] = C.dual_of(out.objects[i].ap(x));
    bool found = false;
    for (std::size_t j = 0; j < count && !found; ++j) {
      if (out.objects[j].omap != want) continue;
      const RModHom sum = pointwise_sum(out.objects[j], out.objects[i]);
      std::map<Id, Id> component;
      for (const Id& x : m->carrier.base.objects)
        component[x] = C.eta_at(out.objects[i].ap(x));
      RModMor candidate;
      candidate.source = sum;
      candidate.target = zero;
      candidate.component = component;
      if (!validate_mod_two_morphism(candidate).all_pass()) continue;
      H.dual[hom_names[i]] = hom_names[j];
      H.eta[hom_names[i]] = find_mor(sum, zero, component);
      found = true;
    }
    if (!found)
      fail(Errc::malformed_table, "no dual found for enumerated hom " + hom_names[i]);
  }

  out.morphisms = std::move(mors);

  CheckReport post = validate_two_group(H);
  if (!post.all_pass())
    fail(Errc::malformed_table,
         "hom 2-group failed validation: " + post.failing_axioms().front());
  return out;
}

BiproductResult biproduct(std::shared_ptr<const RModule> a, std::shared_ptr<const RModule> b) {
  if (!same_ring(*a, *b)) fail(Errc::ring_mismatch, "biproduct over distinct rings");
  const SymTwoGroup& A = a->carrier;
  const SymTwoGroup& B = b->carrier;
  const FinGroupoid& gr = a->ring->additive.base;

  auto sum = std::make_shared<RModule>();
  sum->ring = a->ring;
  SymTwoGroup& C = sum->carrier;
  C.base = product(A.base, B.base);
  C.unit = pair_id(A.unit, B.unit);
  for (const Id& x1 : A.base.objects)
    for (const Id& y1 : B.base.objects)
      for (const Id& x2 : A.base.objects)
        for (const Id& y2 : B.base.objects) {
          C.tensor.obj[{pair_id(x1, y1), pair_id(x2, y2)}] =
              pair_id(A.add(x1, x2), B.add(y1, y2));
        }
  for (const Id& f1 : A.base.morphisms)
    for (const Id& g1 : B.base.morphisms)
      for (const Id& f2 : A.base.morphisms)
        for (const Id& g2 : B.base.morphisms)
          C.tensor.mor[{pair_id(f1, g1), pair_id(f2, g2)}] =
              pair_id(A.add_m(f1, f2), B.add_m(g1, g2));
  for (const Id& x1 : A.base.objects)
    for (const Id& y1 : B.base.objects) {
      const Id p1 = pair_id(x1, y1);
      C.lunit[p1] = pair_id(A.lunit_at(x1), B.lunit_at(y1));
      C.runit[p1] = pair_id(A.runit_at(x1), B.runit_at(y1));
      C.dual[p1] = pair_id(A.dual_of(x1), B.dual_of(y1));
      C.eta[p1] = pair_id(A.eta_at(x1), B.eta_at(y1));
      for (const Id& x2 : A.base.objects)
        for (const Id& y2 : B.base.objects) {
          const Id p2 = pair_id(x2, y2);
          C.sym[{p1, p2}] = pair_id(A.sym_at(x1, x2), B.sym_at(y1, y2));
          for (const Id& x3 : A.base.objects)
            for (const Id& y3 : B.base.objects)
              C.assoc[{p1, p2, pair_id(x3, y3)}] =
                  pair_id(A.assoc_at(x1, x2, x3), B.assoc_at(y1, y2, y3));
        }
    }
  for (const Id& r : gr.objects)
    for (const Id& x : A.base.objects)
      for (const Id& y : B.base.objects)
        sum->action.obj[{r, pair_id(x, y)}] = pair_id(a->act(r, x), b->act(r, y));
  for (const Id& p : gr.morphisms)
    for (const Id& f : A.base.morphisms)
      for (const Id& g : B.base.morphisms)
        sum->action.mor[{p, pair_id(f, g)}] = pair_id(a->act_m(p, f), b->act_m(p, g));
  for (const Id& r : gr.objects) {
    sum->zzero[r] = pair_id(a->zzero_at(r), b->zzero_at(r));
    for (const Id& x1 : A.base.objects)
      for (const Id& y1 : B.base.objects) {
        const Id p1 = pair_id(x1, y1);
        for (const Id& x2 : A.base.objects)
          for (const Id& y2 : B.base.objects)
            sum->adist[{r, p1, pair_id(x2, y2)}] =
                pair_id(a->adist_at(r, x1, x2), b->adist_at(r, y1, y2));
        for (const Id& s : gr.objects) {
          sum->bdist[{r, s, p1}] = pair_id(a->bdist_at(r, s, x1), b->bdist_at(r, s, y1));
          sum->bassoc[{r, s, p1}] = pair_id(a->bassoc_at(r, s, x1), b->bassoc_at(r, s, y1));
        }
      }
  }
  for (const Id& x : A.base.objects)
    for (const Id& y : B.base.objects)
      sum->iunit[pair_id(x, y)] = pair_id(a->iunit_at(x), b->iunit_at(y));

  BiproductResult out;
  out.sum = sum;

  out.p1.dom = sum;
  out.p1.cod = a;
  out.p2.dom = sum;
  out.p2.cod = b;
  for (const Id& x : A.base.objects)
    for (const Id& y : B.base.objects) {
      out.p1.omap[pair_id(x, y)] = x;
      out.p2.omap[pair_id(x, y)] = y;
    }
  for (const Id& f : A.base.morphisms)
    for (const Id& g : B.base.morphisms) {
      out.p1.mmap[pair_id(f, g)] = f;
      out.p2.mmap[pair_id(f, g)] = g;
    }
  for (const Id& o1 : C.base.objects)
    for (const Id& o2 : C.base.objects) {
      out.p1.fplus[{o1, o2}] = A.base.identity(out.p1.omap.at(C.add(o1, o2)));
      out.p2.fplus[{o1, o2}] = B.base.identity(out.p2.omap.at(C.add(o1, o2)));
    }
  out.p1.fzero = A.base.identity(A.unit);
  out.p2.fzero = B.base.identity(B.unit);
  for (const Id& r : gr.objects)
    for (const Id& o : C.base.objects) {
      out.p1.ftwo[{r, o}] = A.base.identity(out.p1.omap.at(sum->act(r, o)));
      out.p2.ftwo[{r, o}] = B.base.identity(out.p2.omap.at(sum->act(r, o)));
    }

  out.i1.dom = a;
  out.i1.cod = sum;
  out.i2.dom = b;
  out.i2.cod = sum;
  for (const Id& x : A.base.objects) out.i1.omap[x] = pair_id(x, B.unit);
  for (const Id& y : B.base.objects) out.i2.omap[y] = pair_id(A.unit, y);
  for (const Id& f : A.base.morphisms)
    out.i1.mmap[f] = pair_id(f, B.base.identity(B.unit));
  for (const Id& g : B.base.morphisms)
    out.i2.mmap[g] = pair_id(A.base.identity(A.unit), g);
  for (const Id& x1 : A.base.objects)
    for (const Id& x2 : A.base.objects)
      out.i1.fplus[{x1, x2}] = pair_id(A.base.identity(A.add(x1, x2)),
                                       B.base.inverse(B.lunit_at(B.unit)));
  for (const Id& y1 : B.base.objects)
    for (const Id& y2 : B.base.objects)
      out.i2.fplus[{y1, y2}] = pair_id(A.base.inverse(A.lunit_at(A.unit)),
                                       B.base.identity(B.add(y1, y2)));
  out.i1.fzero = pair_id(A.base.identity(A.unit), B.base.identity(B.unit));
  out.i2.fzero = out.i1.fzero;
  for (const Id& r : gr.objects) {
    for (const Id& x : A.base.objects)
      out.i1.ftwo[{r, x}] = pair_id(A.base.identity(a->act(r, x)),
                                    B.base.inverse(b->zzero_at(r)));
    for (const Id& y : B.base.objects)
      out.i2.ftwo[{r, y}] = pair_id(A.base.inverse(a->zzero_at(r)),
                                    B.base.identity(b->act(r, y)));
  }
  return out;
}

}  // namespace picard
