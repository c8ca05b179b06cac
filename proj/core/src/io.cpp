#include "picard/io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "picard/error.hpp"

namespace picard {

namespace {

using Row = std::vector<std::string>;

std::string join(const Row& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ' ';
    out += row[i];
  }
  return out;
}

// Consumable row index; anything left unconsumed is an unknown field.
class RowIndex {
 public:
  explicit RowIndex(const std::vector<Row>& rows) {
    for (const Row& row : rows) rows_[row.front()].push_back({&row, false});
  }

  std::vector<const Row*> take(const std::string& directive) {
    std::vector<const Row*> out;
    auto it = rows_.find(directive);
    if (it == rows_.end()) return out;
    for (auto& [row, used] : it->second) {
      out.push_back(row);
      used = true;
    }
    return out;
  }

  void require_consumed() const {
    for (const auto& [directive, entries] : rows_)
      for (const auto& [row, used] : entries)
        if (!used) fail(Errc::parse_error, "unknown field: " + join(*row));
  }

 private:
  std::map<std::string, std::vector<std::pair<const Row*, bool>>> rows_;
};

void check_arity(const Row& row, std::size_t arity) {
  if (row.size() != arity + 1)
    fail(Errc::parse_error, "bad arity for: " + join(row));
}

[[noreturn]] void dangling(const std::string& what) {
  fail(Errc::reference_error, what);
}

// --- emitters ---------------------------------------------------------------

void emit_groupoid(std::vector<Row>& rows, const std::string& p, const FinGroupoid& g) {
  for (const Id& x : g.objects) rows.push_back({p + "object", x});
  for (const Id& m : g.morphisms) rows.push_back({p + "morphism", m, g.source(m), g.target(m)});
  for (const auto& [x, m] : g.id_of) rows.push_back({p + "identity", x, m});
  for (const auto& [k, h] : g.comp) rows.push_back({p + "comp", k.first, k.second, h});
  for (const auto& [m, i] : g.inv) rows.push_back({p + "inv", m, i});
}

void emit_twogroup(std::vector<Row>& rows, const std::string& p, const SymTwoGroup& a) {
  emit_groupoid(rows, p, a.base);
  rows.push_back({p + "unit", a.unit});
  for (const auto& [k, v] : a.tensor.obj) rows.push_back({p + "tensor-obj", k.first, k.second, v});
  for (const auto& [k, v] : a.tensor.mor) rows.push_back({p + "tensor-mor", k.first, k.second, v});
  for (const auto& [k, v] : a.assoc) rows.push_back({p + "assoc", k[0], k[1], k[2], v});
  for (const auto& [k, v] : a.lunit) rows.push_back({p + "lunit", k, v});
  for (const auto& [k, v] : a.runit) rows.push_back({p + "runit", k, v});
  for (const auto& [k, v] : a.sym) rows.push_back({p + "sym", k.first, k.second, v});
  for (const auto& [k, v] : a.dual) rows.push_back({p + "dual", k, v});
  for (const auto& [k, v] : a.eta) rows.push_back({p + "eta", k, v});
}

void emit_ring(std::vector<Row>& rows, const std::string& p, const TwoRing& r) {
  emit_twogroup(rows, p, r.additive);
  rows.push_back({p + "one", r.one});
  for (const auto& [k, v] : r.mult.obj) rows.push_back({p + "mult-obj", k.first, k.second, v});
  for (const auto& [k, v] : r.mult.mor) rows.push_back({p + "mult-mor", k.first, k.second, v});
  for (const auto& [k, v] : r.massoc) rows.push_back({p + "massoc", k[0], k[1], k[2], v});
  for (const auto& [k, v] : r.mlunit) rows.push_back({p + "mlunit", k, v});
  for (const auto& [k, v] : r.mrunit) rows.push_back({p + "mrunit", k, v});
  for (const auto& [k, v] : r.ldist) rows.push_back({p + "ldist", k[0], k[1], k[2], v});
  for (const auto& [k, v] : r.rdist) rows.push_back({p + "rdist", k[0], k[1], k[2], v});
}

void emit_module(std::vector<Row>& rows, const std::string& p, const RModule& m) {
  emit_ring(rows, p + "ring.", *m.ring);
  emit_twogroup(rows, p + "carrier.", m.carrier);
  for (const auto& [k, v] : m.action.obj) rows.push_back({p + "action-obj", k.first, k.second, v});
  for (const auto& [k, v] : m.action.mor) rows.push_back({p + "action-mor", k.first, k.second, v});
  for (const auto& [k, v] : m.adist) rows.push_back({p + "adist", k[0], k[1], k[2], v});
  for (const auto& [k, v] : m.bdist) rows.push_back({p + "bdist", k[0], k[1], k[2], v});
  for (const auto& [k, v] : m.bassoc) rows.push_back({p + "bassoc", k[0], k[1], k[2], v});
  for (const auto& [k, v] : m.iunit) rows.push_back({p + "iunit", k, v});
  for (const auto& [k, v] : m.zzero) rows.push_back({p + "zzero", k, v});
}

void emit_hom(std::vector<Row>& rows, const std::string& p, const RModHom& f) {
  emit_module(rows, p + "dom.", *f.dom);
  emit_module(rows, p + "cod.", *f.cod);
  for (const auto& [k, v] : f.omap) rows.push_back({p + "omap", k, v});
  for (const auto& [k, v] : f.mmap) rows.push_back({p + "mmap", k, v});
  for (const auto& [k, v] : f.fplus) rows.push_back({p + "fplus", k.first, k.second, v});
  rows.push_back({p + "fzero", f.fzero});
  for (const auto& [k, v] : f.ftwo) rows.push_back({p + "ftwo", k.first, k.second, v});
}

// --- readers ----------------------------------------------------------------

FinGroupoid read_groupoid(RowIndex& index, const std::string& p) {
  FinGroupoid g;
  std::set<Id> objects, morphisms;
  for (const Row* row : index.take(p + "object")) {
    check_arity(*row, 1);
    if (!objects.insert((*row)[1]).second)
      fail(Errc::parse_error, "duplicated object id " + (*row)[1]);
    g.objects.push_back((*row)[1]);
  }
  for (const Row* row : index.take(p + "morphism")) {
    check_arity(*row, 3);
    if (!morphisms.insert((*row)[1]).second)
      fail(Errc::parse_error, "duplicated morphism id " + (*row)[1]);
    g.morphisms.push_back((*row)[1]);
    g.src[(*row)[1]] = (*row)[2];
    g.tgt[(*row)[1]] = (*row)[3];
  }
  g.sort_tables();
  for (const Row* row : index.take(p + "identity")) {
    check_arity(*row, 2);
    if (g.id_of.count((*row)[1])) fail(Errc::parse_error, "duplicated identity for " + (*row)[1]);
    g.id_of[(*row)[1]] = (*row)[2];
  }
  for (const Row* row : index.take(p + "comp")) {
    check_arity(*row, 3);
    IdPair key{(*row)[1], (*row)[2]};
    if (g.comp.count(key)) fail(Errc::parse_error, "duplicated comp entry " + join(*row));
    g.comp[key] = (*row)[3];
  }
  for (const Row* row : index.take(p + "inv")) {
    check_arity(*row, 2);
    if (g.inv.count((*row)[1])) fail(Errc::parse_error, "duplicated inv for " + (*row)[1]);
    g.inv[(*row)[1]] = (*row)[2];
  }
  try {
    require_shape(g);
  } catch (const Error& e) {
    dangling(e.what());
  }
  for (const Id& a : g.morphisms)
    for (const Id& b : g.morphisms)
      if (g.target(b) == g.source(a) && !g.comp.count({a, b}))
        dangling("missing comp entry (" + a + ", " + b + ")");
  return g;
}

SymTwoGroup read_twogroup(RowIndex& index, const std::string& p) {
  SymTwoGroup a;
  a.base = read_groupoid(index, p);
  const FinGroupoid& g = a.base;
  auto want_obj = [&](const Id& x) {
    if (!g.has_object(x)) dangling("unknown object " + x);
  };
  auto want_mor = [&](const Id& m) {
    if (!g.has_morphism(m)) dangling("unknown morphism " + m);
  };
  {
    auto rows = index.take(p + "unit");
    if (rows.size() != 1) fail(Errc::parse_error, "expected exactly one " + p + "unit");
    check_arity(*rows[0], 1);
    a.unit = (*rows[0])[1];
    want_obj(a.unit);
  }
  for (const Row* row : index.take(p + "tensor-obj")) {
    check_arity(*row, 3);
    want_obj((*row)[1]);
    want_obj((*row)[2]);
    want_obj((*row)[3]);
    if (!a.tensor.obj.emplace(IdPair{(*row)[1], (*row)[2]}, (*row)[3]).second)
      fail(Errc::parse_error, "duplicated tensor-obj entry " + join(*row));
  }
  for (const Row* row : index.take(p + "tensor-mor")) {
    check_arity(*row, 3);
    want_mor((*row)[1]);
    want_mor((*row)[2]);
    want_mor((*row)[3]);
    if (!a.tensor.mor.emplace(IdPair{(*row)[1], (*row)[2]}, (*row)[3]).second)
      fail(Errc::parse_error, "duplicated tensor-mor entry " + join(*row));
  }
  for (const Row* row : index.take(p + "assoc")) {
    check_arity(*row, 4);
    want_obj((*row)[1]);
    want_obj((*row)[2]);
    want_obj((*row)[3]);
    want_mor((*row)[4]);
    a.assoc[{(*row)[1], (*row)[2], (*row)[3]}] = (*row)[4];
  }
  for (const Row* row : index.take(p + "lunit")) {
    check_arity(*row, 2);
    want_obj((*row)[1]);
    want_mor((*row)[2]);
    a.lunit[(*row)[1]] = (*row)[2];
  }
  for (const Row* row : index.take(p + "runit")) {
    check_arity(*row, 2);
    want_obj((*row)[1]);
    want_mor((*row)[2]);
    a.runit[(*row)[1]] = (*row)[2];
  }
  for (const Row* row : index.take(p + "sym")) {
    check_arity(*row, 3);
    want_obj((*row)[1]);
    want_obj((*row)[2]);
    want_mor((*row)[3]);
    a.sym[{(*row)[1], (*row)[2]}] = (*row)[3];
  }
  for (const Row* row : index.take(p + "dual")) {
    check_arity(*row, 2);
    want_obj((*row)[1]);
    want_obj((*row)[2]);
    a.dual[(*row)[1]] = (*row)[2];
  }
  for (const Row* row : index.take(p + "eta")) {
    check_arity(*row, 2);
    want_obj((*row)[1]);
    want_mor((*row)[2]);
    a.eta[(*row)[1]] = (*row)[2];
  }
  // Completeness: every table total over its index set.
  for (const Id& x : g.objects) {
    if (!a.lunit.count(x)) dangling("missing lunit " + x);
    if (!a.runit.count(x)) dangling("missing runit " + x);
    if (!a.dual.count(x)) dangling("missing dual " + x);
    if (!a.eta.count(x)) dangling("missing eta " + x);
    for (const Id& y : g.objects) {
      if (!a.tensor.obj.count({x, y})) dangling("missing tensor-obj (" + x + ", " + y + ")");
      if (!a.sym.count({x, y})) dangling("missing sym (" + x + ", " + y + ")");
      for (const Id& z : g.objects)
        if (!a.assoc.count({x, y, z}))
          dangling("missing assoc (" + x + ", " + y + ", " + z + ")");
    }
  }
  for (const Id& m : g.morphisms)
    for (const Id& n : g.morphisms)
      if (!a.tensor.mor.count({m, n})) dangling("missing tensor-mor (" + m + ", " + n + ")");
  return a;
}

TwoRing read_ring(RowIndex& index, const std::string& p) {
  TwoRing r;
  r.additive = read_twogroup(index, p);
  const FinGroupoid& g = r.additive.base;
  auto want_obj = [&](const Id& x) {
    if (!g.has_object(x)) dangling("unknown object " + x);
  };
  auto want_mor = [&](const Id& m) {
    if (!g.has_morphism(m)) dangling("unknown morphism " + m);
  };
  {
    auto rows = index.take(p + "one");
    if (rows.size() != 1) fail(Errc::parse_error, "expected exactly one " + p + "one");
    check_arity(*rows[0], 1);
    r.one = (*rows[0])[1];
    want_obj(r.one);
  }
  for (const Row* row : index.take(p + "mult-obj")) {
    check_arity(*row, 3);
    want_obj((*row)[1]);
    want_obj((*row)[2]);
    want_obj((*row)[3]);
    r.mult.obj[{(*row)[1], (*row)[2]}] = (*row)[3];
  }
  for (const Row* row : index.take(p + "mult-mor")) {
    check_arity(*row, 3);
    want_mor((*row)[1]);
    want_mor((*row)[2]);
    want_mor((*row)[3]);
    r.mult.mor[{(*row)[1], (*row)[2]}] = (*row)[3];
  }
  for (const Row* row : index.take(p + "massoc")) {
    check_arity(*row, 4);
    r.massoc[{(*row)[1], (*row)[2], (*row)[3]}] = (*row)[4];
    want_mor((*row)[4]);
  }
  for (const Row* row : index.take(p + "mlunit")) {
    check_arity(*row, 2);
    r.mlunit[(*row)[1]] = (*row)[2];
    want_mor((*row)[2]);
  }
  for (const Row* row : index.take(p + "mrunit")) {
    check_arity(*row, 2);
    r.mrunit[(*row)[1]] = (*row)[2];
    want_mor((*row)[2]);
  }
  for (const Row* row : index.take(p + "ldist")) {
    check_arity(*row, 4);
    r.ldist[{(*row)[1], (*row)[2], (*row)[3]}] = (*row)[4];
    want_mor((*row)[4]);
  }
  for (const Row* row : index.take(p + "rdist")) {
    check_arity(*row, 4);
    r.rdist[{(*row)[1], (*row)[2], (*row)[3]}] = (*row)[4];
    want_mor((*row)[4]);
  }
  for (const Id& x : g.objects) {
    if (!r.mlunit.count(x)) dangling("missing mlunit " + x);
    if (!r.mrunit.count(x)) dangling("missing mrunit " + x);
    for (const Id& y : g.objects) {
      if (!r.mult.obj.count({x, y})) dangling("missing mult-obj (" + x + ", " + y + ")");
      for (const Id& z : g.objects) {
        if (!r.massoc.count({x, y, z})) dangling("missing massoc entry");
        if (!r.ldist.count({x, y, z})) dangling("missing ldist entry");
        if (!r.rdist.count({x, y, z})) dangling("missing rdist entry");
      }
    }
  }
  for (const Id& m : g.morphisms)
    for (const Id& n : g.morphisms)
      if (!r.mult.mor.count({m, n})) dangling("missing mult-mor (" + m + ", " + n + ")");
  return r;
}

RModule read_module(RowIndex& index, const std::string& p) {
  RModule m;
  m.ring = std::make_shared<TwoRing>(read_ring(index, p + "ring."));
  m.carrier = read_twogroup(index, p + "carrier.");
  const FinGroupoid& gr = m.ring->additive.base;
  const FinGroupoid& gm = m.carrier.base;
  auto want_robj = [&](const Id& x) {
    if (!gr.has_object(x)) dangling("unknown ring object " + x);
  };
  auto want_rmor = [&](const Id& x) {
    if (!gr.has_morphism(x)) dangling("unknown ring morphism " + x);
  };
  auto want_obj = [&](const Id& x) {
    if (!gm.has_object(x)) dangling("unknown carrier object " + x);
  };
  auto want_mor = [&](const Id& x) {
    if (!gm.has_morphism(x)) dangling("unknown carrier morphism " + x);
  };
  for (const Row* row : index.take(p + "action-obj")) {
    check_arity(*row, 3);
    want_robj((*row)[1]);
    want_obj((*row)[2]);
    want_obj((*row)[3]);
    m.action.obj[{(*row)[1], (*row)[2]}] = (*row)[3];
  }
  for (const Row* row : index.take(p + "action-mor")) {
    check_arity(*row, 3);
    want_rmor((*row)[1]);
    want_mor((*row)[2]);
    want_mor((*row)[3]);
    m.action.mor[{(*row)[1], (*row)[2]}] = (*row)[3];
  }
  for (const Row* row : index.take(p + "adist")) {
    check_arity(*row, 4);
    m.adist[{(*row)[1], (*row)[2], (*row)[3]}] = (*row)[4];
    want_mor((*row)[4]);
  }
  for (const Row* row : index.take(p + "bdist")) {
    check_arity(*row, 4);
    m.bdist[{(*row)[1], (*row)[2], (*row)[3]}] = (*row)[4];
    want_mor((*row)[4]);
  }
  for (const Row* row : index.take(p + "bassoc")) {
    check_arity(*row, 4);
    m.bassoc[{(*row)[1], (*row)[2], (*row)[3]}] = (*row)[4];
    want_mor((*row)[4]);
  }
  for (const Row* row : index.take(p + "iunit")) {
    check_arity(*row, 2);
    m.iunit[(*row)[1]] = (*row)[2];
    want_mor((*row)[2]);
  }
  for (const Row* row : index.take(p + "zzero")) {
    check_arity(*row, 2);
    m.zzero[(*row)[1]] = (*row)[2];
    want_mor((*row)[2]);
  }
  for (const Id& r : gr.objects) {
    if (!m.zzero.count(r)) dangling("missing zzero " + r);
    for (const Id& x : gm.objects) {
      if (!m.action.obj.count({r, x})) dangling("missing action-obj (" + r + ", " + x + ")");
      for (const Id& y : gm.objects)
        if (!m.adist.count({r, x, y})) dangling("missing adist entry");
      for (const Id& s : gr.objects) {
        if (!m.bdist.count({r, s, x})) dangling("missing bdist entry");
        if (!m.bassoc.count({r, s, x})) dangling("missing bassoc entry");
      }
    }
  }
  for (const Id& x : gm.objects)
    if (!m.iunit.count(x)) dangling("missing iunit " + x);
  for (const Id& q : gr.morphisms)
    for (const Id& n : gm.morphisms)
      if (!m.action.mor.count({q, n})) dangling("missing action-mor (" + q + ", " + n + ")");
  return m;
}

RModHom read_hom(RowIndex& index, const std::string& p) {
  RModHom f;
  f.dom = std::make_shared<RModule>(read_module(index, p + "dom."));
  f.cod = std::make_shared<RModule>(read_module(index, p + "cod."));
  const FinGroupoid& ga = f.dom->carrier.base;
  const FinGroupoid& gb = f.cod->carrier.base;
  const FinGroupoid& gr = f.dom->ring->additive.base;
  for (const Row* row : index.take(p + "omap")) {
    check_arity(*row, 2);
    if (!ga.has_object((*row)[1]) || !gb.has_object((*row)[2]))
      dangling("omap references unknown object: " + join(*row));
    f.omap[(*row)[1]] = (*row)[2];
  }
  for (const Row* row : index.take(p + "mmap")) {
    check_arity(*row, 2);
    if (!ga.has_morphism((*row)[1]) || !gb.has_morphism((*row)[2]))
      dangling("mmap references unknown morphism: " + join(*row));
    f.mmap[(*row)[1]] = (*row)[2];
  }
  for (const Row* row : index.take(p + "fplus")) {
    check_arity(*row, 3);
    if (!gb.has_morphism((*row)[3])) dangling("fplus references unknown morphism");
    f.fplus[{(*row)[1], (*row)[2]}] = (*row)[3];
  }
  {
    auto rows = index.take(p + "fzero");
    if (rows.size() != 1) fail(Errc::parse_error, "expected exactly one " + p + "fzero");
    check_arity(*rows[0], 1);
    f.fzero = (*rows[0])[1];
    if (!gb.has_morphism(f.fzero)) dangling("fzero references unknown morphism");
  }
  for (const Row* row : index.take(p + "ftwo")) {
    check_arity(*row, 3);
    if (!gb.has_morphism((*row)[3])) dangling("ftwo references unknown morphism");
    f.ftwo[{(*row)[1], (*row)[2]}] = (*row)[3];
  }
  for (const Id& x : ga.objects) {
    if (!f.omap.count(x)) dangling("missing omap " + x);
    for (const Id& y : ga.objects)
      if (!f.fplus.count({x, y})) dangling("missing fplus (" + x + ", " + y + ")");
    for (const Id& r : gr.objects)
      if (!f.ftwo.count({r, x})) dangling("missing ftwo (" + r + ", " + x + ")");
  }
  for (const Id& m : ga.morphisms)
    if (!f.mmap.count(m)) dangling("missing mmap " + m);
  return f;
}

}  // namespace

Document parse(const std::string& text) {
  Document doc;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    Row row;
    std::size_t pos = 0;
    while (pos < line.size()) {
      std::size_t next = line.find(' ', pos);
      if (next == std::string::npos) next = line.size();
      if (next == pos)
        fail(Errc::parse_error,
             "line " + std::to_string(line_no) + ", column " + std::to_string(pos + 1) +
                 ": empty token");
      row.push_back(line.substr(pos, next - pos));
      pos = next + 1;
    }
    if (line.back() == ' ')
      fail(Errc::parse_error, "line " + std::to_string(line_no) + ": trailing space");
    if (!saw_header) {
      if (row.size() != 3 || row[0] != "picard")
        fail(Errc::parse_error, "line 1: expected 'picard <version> <kind>'");
      if (row[1] != "1") fail(Errc::version_unsupported, "version " + row[1]);
      doc.version = 1;
      doc.kind = row[2];
      saw_header = true;
      continue;
    }
    doc.rows.push_back(std::move(row));
  }
  if (!saw_header) fail(Errc::parse_error, "empty document");
  static const std::set<std::string> kinds{"twogroup", "tworing", "module",
                                           "hom",      "twomorphism", "report"};
  if (!kinds.count(doc.kind)) fail(Errc::parse_error, "unknown kind " + doc.kind);
  std::sort(doc.rows.begin(), doc.rows.end());
  for (std::size_t i = 1; i < doc.rows.size(); ++i)
    if (doc.rows[i] == doc.rows[i - 1])
      fail(Errc::parse_error, "duplicated row: " + join(doc.rows[i]));
  return doc;
}

std::string serialize(const Document& doc) {
  std::vector<Row> rows = doc.rows;
  std::sort(rows.begin(), rows.end());
  std::string out = "picard " + std::to_string(doc.version) + " " + doc.kind + "\n";
  for (const Row& row : rows) {
    out += join(row);
    out += '\n';
  }
  return out;
}

Document to_document(const SymTwoGroup& a) {
  Document doc;
  doc.kind = "twogroup";
  emit_twogroup(doc.rows, "", a);
  return doc;
}

Document to_document(const TwoRing& r) {
  Document doc;
  doc.kind = "tworing";
  emit_ring(doc.rows, "", r);
  return doc;
}

Document to_document(const RModule& m) {
  Document doc;
  doc.kind = "module";
  emit_module(doc.rows, "", m);
  return doc;
}

Document to_document(const RModHom& f) {
  Document doc;
  doc.kind = "hom";
  emit_hom(doc.rows, "", f);
  return doc;
}

Document to_document(const RModMor& t) {
  Document doc;
  doc.kind = "twomorphism";
  emit_hom(doc.rows, "source.", t.source);
  emit_hom(doc.rows, "target.", t.target);
  for (const auto& [x, m] : t.component) doc.rows.push_back({"component", x, m});
  return doc;
}

Document report_document(const CheckReport& report) {
  Document doc;
  doc.kind = "report";
  for (const CheckEntry& e : report.entries()) {
    Row row{"entry", e.axiom, e.pass ? "pass" : "fail"};
    for (const Id& w : e.witness) row.push_back(w);
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

SymTwoGroup twogroup_from_document(const Document& doc) {
  if (doc.kind != "twogroup") fail(Errc::parse_error, "expected a twogroup document");
  RowIndex index(doc.rows);
  SymTwoGroup a = read_twogroup(index, "");
  index.require_consumed();
  return a;
}

TwoRing tworing_from_document(const Document& doc) {
  if (doc.kind != "tworing") fail(Errc::parse_error, "expected a tworing document");
  RowIndex index(doc.rows);
  TwoRing r = read_ring(index, "");
  index.require_consumed();
  return r;
}

std::shared_ptr<const RModule> module_from_document(const Document& doc) {
  if (doc.kind != "module") fail(Errc::parse_error, "expected a module document");
  RowIndex index(doc.rows);
  RModule m = read_module(index, "");
  index.require_consumed();
  return std::make_shared<RModule>(std::move(m));
}

RModHom hom_from_document(const Document& doc) {
  if (doc.kind != "hom") fail(Errc::parse_error, "expected a hom document");
  RowIndex index(doc.rows);
  RModHom f = read_hom(index, "");
  index.require_consumed();
  return f;
}

RModMor twomorphism_from_document(const Document& doc) {
  if (doc.kind != "twomorphism") fail(Errc::parse_error, "expected a twomorphism document");
  RowIndex index(doc.rows);
  RModMor t;
  t.source = read_hom(index, "source.");
  t.target = read_hom(index, "target.");
  for (const Row* row : index.take("component")) {
    check_arity(*row, 2);
    t.component[(*row)[1]] = (*row)[2];
  }
  index.require_consumed();
  for (const Id& x : t.source.dom->carrier.base.objects)
    if (!t.component.count(x)) dangling("missing component " + x);
  return t;
}

CheckReport report_from_document(const Document& doc) {
  if (doc.kind != "report") fail(Errc::parse_error, "expected a report document");
  CheckReport report;
  RowIndex index(doc.rows);
  for (const Row* row : index.take("entry")) {
    if (row->size() < 3) fail(Errc::parse_error, "bad entry row");
    bool pass = (*row)[2] == "pass";
    if (!pass && (*row)[2] != "fail") fail(Errc::parse_error, "bad entry verdict");
    std::vector<Id> witness(row->begin() + 3, row->end());
    report.record((*row)[1], pass, std::move(witness));
  }
  index.require_consumed();
  return report;
}

std::string report_json_lines(const CheckReport& report) {
  // Hand-rolled emission: axiom ids and witnesses are plain identifiers.
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    out += '"';
    return out;
  };
  std::string out;
  for (const CheckEntry& e : report.entries()) {
    out += "{\"axiom\":" + quote(e.axiom) + ",\"pass\":" + (e.pass ? "true" : "false") +
           ",\"witness\":[";
    for (std::size_t i = 0; i < e.witness.size(); ++i) {
      if (i) out += ',';
      out += quote(e.witness[i]);
    }
    out += "]}\n";
  }
  return out;
}

}  // namespace picard
