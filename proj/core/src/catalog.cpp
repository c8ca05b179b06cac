#include "picard/catalog.hpp"

#include <algorithm>
#include <functional>

#include "picard/error.hpp"

namespace picard {

namespace {

Id num(int k) { return std::to_string(k); }

Id discrete_id(const Id& x) { return "1(" + x + ")"; }

int parse_int(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    fail(Errc::parse_error, "bad catalog number: " + s);
  return std::stoi(s);
}

struct ModuleName {
  char kind;  // 'd' or 'b'
  int order;
  int ring;
};

ModuleName parse_module_name(const std::string& name) {
  auto at = name.find('@');
  if (at == std::string::npos || at < 2 || name.size() < at + 3 || name[at + 1] != 'z')
    fail(Errc::parse_error, "unknown catalog module: " + name);
  char kind = name[0];
  if (kind != 'd' && kind != 'b') fail(Errc::parse_error, "unknown catalog module: " + name);
  ModuleName out;
  out.kind = kind;
  out.order = parse_int(name.substr(1, at - 1));
  out.ring = parse_int(name.substr(at + 2));
  if (out.order <= 0 || out.ring <= 0 || out.ring % out.order != 0)
    fail(Errc::parse_error, "catalog module needs carrier order dividing ring order: " + name);
  return out;
}

}  // namespace

GroupTable cyclic_group(int n) {
  GroupTable t;
  for (int i = 0; i < n; ++i) t.elements.push_back(num(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.add[{num(i), num(j)}] = num((i + j) % n);
  return t;
}

RingTable cyclic_ring(int n) {
  RingTable t;
  for (int i = 0; i < n; ++i) t.elements.push_back(num(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      t.add[{num(i), num(j)}] = num((i + j) % n);
      t.mul[{num(i), num(j)}] = num((i * j) % n);
    }
  return t;
}

SymTwoGroup catalog_twogroup(const std::string& name) {
  if (name.size() < 2 || (name[0] != 'd' && name[0] != 'b'))
    fail(Errc::parse_error, "unknown catalog 2-group: " + name);
  int n = parse_int(name.substr(1));
  if (n <= 0) fail(Errc::parse_error, "unknown catalog 2-group: " + name);
  return name[0] == 'd' ? build_discrete(cyclic_group(n)) : build_deloop(cyclic_group(n));
}

std::shared_ptr<const TwoRing> catalog_ring(const std::string& name) {
  if (name.size() < 2 || name[0] != 'z')
    fail(Errc::parse_error, "unknown catalog ring: " + name);
  int n = parse_int(name.substr(1));
  return std::make_shared<TwoRing>(build_discrete_ring(cyclic_ring(n)));
}

std::shared_ptr<const RModule> catalog_module(const std::string& name) {
  ModuleName mn = parse_module_name(name);
  auto ring = catalog_ring("z" + num(mn.ring));
  const int n = mn.ring;
  const int k = mn.order;
  if (mn.kind == 'd') {
    ModuleTable t;
    for (int i = 0; i < k; ++i) t.elements.push_back(num(i));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) t.add[{num(i), num(j)}] = num((i + j) % k);
    for (int r = 0; r < n; ++r)
      for (int m = 0; m < k; ++m) t.action[{num(r), num(m)}] = num((r * m) % k);
    return std::make_shared<RModule>(build_discrete_module(ring, t));
  }
  // b-case: one object, the action multiplies loops by the ring element.
  auto mod = std::make_shared<RModule>();
  mod->ring = ring;
  mod->carrier = build_deloop(cyclic_group(k));
  const Id obj = "0";
  const Id idm = "0";
  for (int r = 0; r < n; ++r) {
    mod->action.obj[{num(r), obj}] = obj;
    for (int h = 0; h < k; ++h)
      mod->action.mor[{discrete_id(num(r)), num(h)}] = num((r * h) % k);
    mod->zzero[num(r)] = idm;
    mod->adist[{num(r), obj, obj}] = idm;
    for (int s = 0; s < n; ++s) {
      mod->bdist[{num(r), num(s), obj}] = idm;
      mod->bassoc[{num(r), num(s), obj}] = idm;
    }
  }
  mod->iunit[obj] = idm;
  return mod;
}

namespace {

// Discrete-to-discrete hom with identity structure components; the object
// map must commute strictly with +, 0, and the action.
RModHom strict_hom(std::shared_ptr<const RModule> dom, std::shared_ptr<const RModule> cod,
                   const std::function<Id(const Id&)>& on_objects,
                   const std::function<Id(const Id&)>& on_morphisms) {
  RModHom f;
  f.dom = dom;
  f.cod = cod;
  const SymTwoGroup& M = dom->carrier;
  const SymTwoGroup& N = cod->carrier;
  for (const Id& x : M.base.objects) f.omap[x] = on_objects(x);
  for (const Id& q : M.base.morphisms) f.mmap[q] = on_morphisms(q);
  for (const Id& x : M.base.objects)
    for (const Id& y : M.base.objects)
      f.fplus[{x, y}] = N.base.identity(f.omap.at(M.add(x, y)));
  f.fzero = N.base.identity(N.unit);
  for (const Id& r : dom->ring->additive.base.objects)
    for (const Id& x : M.base.objects)
      f.ftwo[{r, x}] = N.base.identity(f.omap.at(dom->act(r, x)));
  return f;
}

}  // namespace

RModHom catalog_hom(const std::string& name) {
  if (name.rfind("id:", 0) == 0) {
    return identity_mod_hom(catalog_module(name.substr(3)));
  }
  if (name.rfind("zero:", 0) == 0) {
    std::string rest = name.substr(5);
    auto at = rest.find('@');
    auto dash = rest.find('-');
    if (at == std::string::npos || dash == std::string::npos || dash > at)
      fail(Errc::parse_error, "unknown catalog hom: " + name);
    std::string ring = rest.substr(at + 1);
    return zero_hom(catalog_module(rest.substr(0, dash) + "@" + ring),
                    catalog_module(rest.substr(dash + 1)));
  }
  auto at = name.find('@');
  if (at == std::string::npos) fail(Errc::parse_error, "unknown catalog hom: " + name);
  std::string op = name.substr(0, at);
  std::string ring = name.substr(at + 1);
  if (op == "mul2" && ring == "z4") {
    auto dom = catalog_module("d2@z4");
    auto cod = catalog_module("d4@z4");
    auto ap = [](const Id& x) { return num(2 * parse_int(x) % 4); };
    return strict_hom(dom, cod, ap, [&](const Id& q) {
      return discrete_id(ap(q.substr(2, q.size() - 3)));
    });
  }
  if (op == "mod2" && ring == "z4") {
    auto dom = catalog_module("d4@z4");
    auto cod = catalog_module("d2@z4");
    auto ap = [](const Id& x) { return num(parse_int(x) % 2); };
    return strict_hom(dom, cod, ap, [&](const Id& q) {
      return discrete_id(ap(q.substr(2, q.size() - 3)));
    });
  }
  if (op == "mod3" && ring == "z6") {
    auto dom = catalog_module("d6@z6");
    auto cod = catalog_module("d3@z6");
    auto ap = [](const Id& x) { return num(parse_int(x) % 3); };
    return strict_hom(dom, cod, ap, [&](const Id& q) {
      return discrete_id(ap(q.substr(2, q.size() - 3)));
    });
  }
  if (op == "mul3" && ring == "z6") {
    auto dom = catalog_module("d2@z6");
    auto cod = catalog_module("d6@z6");
    auto ap = [](const Id& x) { return num(3 * parse_int(x) % 6); };
    return strict_hom(dom, cod, ap, [&](const Id& q) {
      return discrete_id(ap(q.substr(2, q.size() - 3)));
    });
  }
  if (op == "pi1mod2" && ring == "z4") {
    auto dom = catalog_module("b4@z4");
    auto cod = catalog_module("b2@z4");
    return strict_hom(dom, cod, [](const Id&) { return Id("0"); },
                      [](const Id& q) { return num(parse_int(q) % 2); });
  }
  fail(Errc::parse_error, "unknown catalog hom: " + name);
}

std::vector<std::string> catalog_twogroup_names() {
  return {"d1", "d2", "d3", "d4", "d6", "b1", "b2", "b4"};
}

std::vector<std::string> catalog_ring_names() { return {"z2", "z4", "z6"}; }

std::vector<std::string> catalog_module_names() {
  return {"d1@z2", "d2@z2", "b2@z2", "d1@z4", "d2@z4", "d4@z4", "b2@z4",
          "b4@z4", "d1@z6", "d2@z6", "d3@z6", "d6@z6", "b2@z6", "b3@z6"};
}

std::vector<std::string> catalog_hom_names() {
  return {"id:d4@z4",      "id:b4@z4", "zero:d2-d4@z4", "mul2@z4",      "mod2@z4",
          "pi1mod2@z4",    "mod3@z6",  "mul3@z6",       "zero:d2-d3@z6"};
}

}  // namespace picard
