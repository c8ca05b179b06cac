#include "picard/groupoid.hpp"

#include <algorithm>
#include <numeric>

#include "picard/error.hpp"

namespace picard {

Id pair_id(const Id& a, const Id& b) { return "(" + a + "," + b + ")"; }

Id tuple_id(const std::vector<Id>& parts) {
  Id out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  out += ")";
  return out;
}

namespace {

bool contains(const std::vector<Id>& v, const Id& x) {
  return std::binary_search(v.begin(), v.end(), x);
}

template <typename M, typename K>
const typename M::mapped_type* lookup(const M& m, const K& key) {
  auto it = m.find(key);
  return it == m.end() ? nullptr : &it->second;
}

// Collects the first counterexample of one axiom family.
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

bool FinGroupoid::has_object(const Id& x) const { return contains(objects, x); }
bool FinGroupoid::has_morphism(const Id& m) const { return contains(morphisms, m); }

const Id& FinGroupoid::source(const Id& m) const {
  const Id* s = lookup(src, m);
  if (!s) fail(Errc::malformed_table, "no source for morphism " + m);
  return *s;
}

const Id& FinGroupoid::target(const Id& m) const {
  const Id* t = lookup(tgt, m);
  if (!t) fail(Errc::malformed_table, "no target for morphism " + m);
  return *t;
}

const Id& FinGroupoid::identity(const Id& x) const {
  const Id* i = lookup(id_of, x);
  if (!i) fail(Errc::malformed_table, "no identity for object " + x);
  return *i;
}

const Id& FinGroupoid::inverse(const Id& m) const {
  const Id* i = lookup(inv, m);
  if (!i) fail(Errc::malformed_table, "no inverse for morphism " + m);
  return *i;
}

bool FinGroupoid::composable(const Id& g, const Id& f) const { return target(f) == source(g); }

const Id& FinGroupoid::compose(const Id& g, const Id& f) const {
  const Id* h = lookup(comp, IdPair{g, f});
  if (!h) fail(Errc::malformed_table, "no composite for (" + g + ", " + f + ")");
  return *h;
}

Id FinGroupoid::compose_path(const std::vector<Id>& path) const {
  if (path.empty()) fail(Errc::malformed_table, "empty composition path");
  Id acc = path.front();
  for (std::size_t i = 1; i < path.size(); ++i) acc = compose(path[i], acc);
  return acc;
}

std::vector<Id> FinGroupoid::hom(const Id& x, const Id& y) const {
  std::vector<Id> out;
  for (const Id& m : morphisms)
    if (source(m) == x && target(m) == y) out.push_back(m);
  return out;
}

void FinGroupoid::sort_tables() {
  std::sort(objects.begin(), objects.end());
  objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
  std::sort(morphisms.begin(), morphisms.end());
  morphisms.erase(std::unique(morphisms.begin(), morphisms.end()), morphisms.end());
}

void require_shape(const FinGroupoid& g) {
  auto known_obj = [&](const Id& x) { return g.has_object(x); };
  auto known_mor = [&](const Id& m) { return g.has_morphism(m); };

  for (const Id& m : g.morphisms) {
    const Id* s = lookup(g.src, m);
    const Id* t = lookup(g.tgt, m);
    if (!s || !known_obj(*s)) fail(Errc::malformed_table, "src of " + m);
    if (!t || !known_obj(*t)) fail(Errc::malformed_table, "tgt of " + m);
    const Id* i = lookup(g.inv, m);
    if (!i || !known_mor(*i)) fail(Errc::malformed_table, "inv of " + m);
  }
  for (const Id& x : g.objects) {
    const Id* i = lookup(g.id_of, x);
    if (!i || !known_mor(*i)) fail(Errc::malformed_table, "id_of " + x);
  }
  for (const auto& [k, m] : g.src)
    if (!known_mor(k)) fail(Errc::malformed_table, "src entry for unknown " + k);
  for (const auto& [k, m] : g.tgt)
    if (!known_mor(k)) fail(Errc::malformed_table, "tgt entry for unknown " + k);
  for (const auto& [k, m] : g.id_of)
    if (!known_obj(k)) fail(Errc::malformed_table, "id_of entry for unknown " + k);
  for (const auto& [k, m] : g.inv)
    if (!known_mor(k)) fail(Errc::malformed_table, "inv entry for unknown " + k);
  for (const auto& [k, h] : g.comp) {
    if (!known_mor(k.first) || !known_mor(k.second) || !known_mor(h))
      fail(Errc::malformed_table, "comp entry (" + k.first + ", " + k.second + ")");
  }
}

CheckReport validate_groupoid(const FinGroupoid& g) {
  require_shape(g);
  CheckReport report;

  {
    Family f(report, "groupoid.comp-total");
    for (const Id& a : g.morphisms)
      for (const Id& b : g.morphisms) {
        if (g.target(b) != g.source(a)) continue;
        if (!f.require(g.comp.count({a, b}) != 0, {a, b})) break;
      }
  }
  {
    Family f(report, "groupoid.comp-boundary");
    for (const auto& [k, h] : g.comp) {
      bool ok = g.composable(k.first, k.second) && g.source(h) == g.source(k.second) &&
                g.target(h) == g.target(k.first);
      if (!f.require(ok, {k.first, k.second})) break;
    }
  }
  {
    Family f(report, "groupoid.assoc");
    for (const Id& a : g.morphisms) {
      for (const Id& b : g.morphisms) {
        if (g.target(b) != g.source(a)) continue;
        const Id* ab = lookup(g.comp, IdPair{a, b});
        if (!ab) continue;
        for (const Id& c : g.morphisms) {
          if (g.target(c) != g.source(b)) continue;
          const Id* bc = lookup(g.comp, IdPair{b, c});
          if (!bc) continue;
          const Id* l = lookup(g.comp, IdPair{*ab, c});
          const Id* r = lookup(g.comp, IdPair{a, *bc});
          if (!l || !r) continue;  // comp-total reports the hole
          if (!f.require(*l == *r, {a, b, c})) break;
        }
        if (f.failed()) break;
      }
      if (f.failed()) break;
    }
  }
  {
    Family f(report, "groupoid.id-boundary");
    for (const Id& x : g.objects) {
      const Id& i = g.identity(x);
      if (!f.require(g.source(i) == x && g.target(i) == x, {x})) break;
    }
  }
  {
    Family f(report, "groupoid.id-left");
    for (const Id& m : g.morphisms) {
      const Id* h = lookup(g.comp, IdPair{g.identity(g.target(m)), m});
      if (!h) continue;
      if (!f.require(*h == m, {m})) break;
    }
  }
  {
    Family f(report, "groupoid.id-right");
    for (const Id& m : g.morphisms) {
      const Id* h = lookup(g.comp, IdPair{m, g.identity(g.source(m))});
      if (!h) continue;
      if (!f.require(*h == m, {m})) break;
    }
  }
  {
    Family f(report, "groupoid.inv-boundary");
    for (const Id& m : g.morphisms) {
      const Id& i = g.inverse(m);
      if (!f.require(g.source(i) == g.target(m) && g.target(i) == g.source(m), {m})) break;
    }
  }
  {
    Family f(report, "groupoid.inv-left");
    for (const Id& m : g.morphisms) {
      const Id& i = g.inverse(m);
      if (g.source(i) != g.target(m) || g.target(i) != g.source(m)) continue;
      const Id* h = lookup(g.comp, IdPair{i, m});
      if (!h) continue;
      if (!f.require(*h == g.identity(g.source(m)), {m})) break;
    }
  }
  {
    Family f(report, "groupoid.inv-right");
    for (const Id& m : g.morphisms) {
      const Id& i = g.inverse(m);
      if (g.source(i) != g.target(m) || g.target(i) != g.source(m)) continue;
      const Id* h = lookup(g.comp, IdPair{m, i});
      if (!h) continue;
      if (!f.require(*h == g.identity(g.target(m)), {m})) break;
    }
  }
  return report;
}

const Id& FunctorData::ap(const Id& obj) const {
  const Id* v = lookup(omap, obj);
  if (!v) fail(Errc::malformed_table, "functor omap missing " + obj);
  return *v;
}

const Id& FunctorData::ap_m(const Id& mor) const {
  const Id* v = lookup(mmap, mor);
  if (!v) fail(Errc::malformed_table, "functor mmap missing " + mor);
  return *v;
}

CheckReport validate_functor(const FunctorData& f) {
  CheckReport report;
  {
    Family fam(report, "functor.total");
    for (const Id& x : f.dom.objects) {
      const Id* v = lookup(f.omap, x);
      if (!fam.require(v && f.cod.has_object(*v), {x})) break;
    }
    for (const Id& m : f.dom.morphisms) {
      const Id* v = lookup(f.mmap, m);
      if (!fam.require(v && f.cod.has_morphism(*v), {m})) break;
    }
  }
  if (!report.all_pass()) return report;
  {
    Family fam(report, "functor.boundary");
    for (const Id& m : f.dom.morphisms) {
      bool ok = f.cod.source(f.ap_m(m)) == f.ap(f.dom.source(m)) &&
                f.cod.target(f.ap_m(m)) == f.ap(f.dom.target(m));
      if (!fam.require(ok, {m})) break;
    }
  }
  {
    Family fam(report, "functor.identity");
    for (const Id& x : f.dom.objects) {
      if (!fam.require(f.ap_m(f.dom.identity(x)) == f.cod.identity(f.ap(x)), {x})) break;
    }
  }
  {
    Family fam(report, "functor.composition");
    for (const auto& [k, h] : f.dom.comp) {
      const Id* img = lookup(f.cod.comp, IdPair{f.ap_m(k.first), f.ap_m(k.second)});
      if (!fam.require(img && *img == f.ap_m(h), {k.first, k.second})) break;
    }
  }
  return report;
}

FunctorData identity_functor(const FinGroupoid& g) {
  FunctorData f;
  f.dom = g;
  f.cod = g;
  for (const Id& x : g.objects) f.omap[x] = x;
  for (const Id& m : g.morphisms) f.mmap[m] = m;
  return f;
}

FunctorData compose_functors(const FunctorData& f, const FunctorData& g) {
  if (!(f.cod == g.dom)) fail(Errc::domain_mismatch, "functor composition endpoints");
  FunctorData h;
  h.dom = f.dom;
  h.cod = g.cod;
  for (const auto& [x, y] : f.omap) h.omap[x] = g.ap(y);
  for (const auto& [m, n] : f.mmap) h.mmap[m] = g.ap_m(n);
  return h;
}

CheckReport validate_natural(const NatTransData& n) {
  CheckReport report;
  if (!(n.source.dom == n.target.dom) || !(n.source.cod == n.target.cod))
    fail(Errc::parallelism, "natural transformation endpoints not parallel");
  const FinGroupoid& dom = n.source.dom;
  const FinGroupoid& cod = n.source.cod;
  {
    Family fam(report, "natural.component-typed");
    for (const Id& x : dom.objects) {
      const Id* c = lookup(n.component, x);
      bool ok = c && cod.has_morphism(*c) && cod.source(*c) == n.source.ap(x) &&
                cod.target(*c) == n.target.ap(x);
      if (!fam.require(ok, {x})) break;
    }
  }
  if (!report.all_pass()) return report;
  {
    Family fam(report, "natural.square");
    for (const Id& m : dom.morphisms) {
      const Id& a = dom.source(m);
      const Id& b = dom.target(m);
      Id lhs = cod.compose(n.component.at(b), n.source.ap_m(m));
      Id rhs = cod.compose(n.target.ap_m(m), n.component.at(a));
      if (!fam.require(lhs == rhs, {m})) break;
    }
  }
  return report;
}

FinGroupoid product(const FinGroupoid& g, const FinGroupoid& h) {
  FinGroupoid p;
  for (const Id& a : g.objects)
    for (const Id& b : h.objects) p.objects.push_back(pair_id(a, b));
  for (const Id& f : g.morphisms)
    for (const Id& k : h.morphisms) {
      Id m = pair_id(f, k);
      p.morphisms.push_back(m);
      p.src[m] = pair_id(g.source(f), h.source(k));
      p.tgt[m] = pair_id(g.target(f), h.target(k));
      p.inv[m] = pair_id(g.inverse(f), h.inverse(k));
    }
  for (const Id& a : g.objects)
    for (const Id& b : h.objects)
      p.id_of[pair_id(a, b)] = pair_id(g.identity(a), h.identity(b));
  for (const auto& [kg, vg] : g.comp)
    for (const auto& [kh, vh] : h.comp)
      p.comp[{pair_id(kg.first, kh.first), pair_id(kg.second, kh.second)}] = pair_id(vg, vh);
  p.sort_tables();
  return p;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;  // keep the smaller index as root
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

QuotientResult quotient_morphisms(const FinGroupoid& g, const MorRelation& rel) {
  require_shape(g);
  std::map<Id, std::size_t> index;
  for (std::size_t i = 0; i < g.morphisms.size(); ++i) index[g.morphisms[i]] = i;

  for (const auto& [a, b] : rel.pairs) {
    if (!g.has_morphism(a) || !g.has_morphism(b))
      fail(Errc::malformed_table, "relation names unknown morphism");
    if (g.source(a) != g.source(b) || g.target(a) != g.target(b))
      fail(Errc::not_parallel, "relation relates non-parallel morphisms " + a + ", " + b);
  }

  UnionFind uf(g.morphisms.size());
  for (const auto& [a, b] : rel.pairs) uf.unite(index.at(a), index.at(b));

  // Saturate composition congruence: equivalent keys force equivalent values.
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
    for (const auto& [k, v] : g.comp) {
      auto key = std::make_pair(uf.find(index.at(k.first)), uf.find(index.at(k.second)));
      auto [it, inserted] = seen.emplace(key, index.at(v));
      if (!inserted && uf.unite(it->second, index.at(v))) changed = true;
    }
  }

  // Order-minimal representative per class (morphisms are sorted, so the
  // smallest index is the smallest identifier).
  std::vector<Id> rep(g.morphisms.size());
  for (std::size_t i = 0; i < g.morphisms.size(); ++i) rep[i] = g.morphisms[uf.find(i)];
  auto rep_of = [&](const Id& m) { return rep[index.at(m)]; };

  FinGroupoid q;
  q.objects = g.objects;
  for (std::size_t i = 0; i < g.morphisms.size(); ++i)
    if (uf.find(i) == i) q.morphisms.push_back(g.morphisms[i]);
  std::sort(q.morphisms.begin(), q.morphisms.end());
  for (const Id& m : q.morphisms) {
    q.src[m] = g.source(m);
    q.tgt[m] = g.target(m);
    q.inv[m] = rep_of(g.inverse(m));
  }
  for (const Id& x : q.objects) q.id_of[x] = rep_of(g.identity(x));
  for (const auto& [k, v] : g.comp) q.comp[{rep_of(k.first), rep_of(k.second)}] = rep_of(v);

  FunctorData proj;
  proj.dom = g;
  proj.cod = q;
  for (const Id& x : g.objects) proj.omap[x] = x;
  for (const Id& m : g.morphisms) proj.mmap[m] = rep_of(m);
  return QuotientResult{std::move(q), std::move(proj)};
}

std::vector<std::vector<Id>> iso_classes(const FinGroupoid& g) {
  std::map<Id, std::size_t> index;
  for (std::size_t i = 0; i < g.objects.size(); ++i) index[g.objects[i]] = i;
  UnionFind uf(g.objects.size());
  for (const Id& m : g.morphisms) uf.unite(index.at(g.source(m)), index.at(g.target(m)));
  std::map<std::size_t, std::vector<Id>> classes;
  for (std::size_t i = 0; i < g.objects.size(); ++i) classes[uf.find(i)].push_back(g.objects[i]);
  std::vector<std::vector<Id>> out;
  for (auto& [root, members] : classes) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Id> automorphisms(const FinGroupoid& g, const Id& x) { return g.hom(x, x); }

}  // namespace picard
