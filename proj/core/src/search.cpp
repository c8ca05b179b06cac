#include "picard/search.hpp"

#include <algorithm>
#include <map>

#include "picard/error.hpp"

namespace picard {

std::size_t BacktrackSolver::add_var(std::vector<Id> domain) {
  domains_.push_back(std::move(domain));
  return domains_.size() - 1;
}

void BacktrackSolver::add_constraint(std::vector<std::size_t> vars, Pred pred) {
  constraints_.push_back(Constraint{std::move(vars), std::move(pred)});
}

void BacktrackSolver::for_each_solution(
    const SearchBudget& budget, const std::function<bool(const Assignment&)>& visit) const {
  const std::size_t n = domains_.size();
  // Constraints bucketed by the variable whose assignment completes them.
  std::vector<std::vector<const Constraint*>> at_var(n);
  std::vector<const Constraint*> immediate;
  for (const Constraint& c : constraints_) {
    if (c.vars.empty()) {
      immediate.push_back(&c);
      continue;
    }
    std::size_t last = *std::max_element(c.vars.begin(), c.vars.end());
    at_var[last].push_back(&c);
  }
  Assignment assignment(n);
  for (const Constraint* c : immediate)
    if (!c->pred(assignment)) return;
  if (n == 0) {
    visit(assignment);
    return;
  }

  std::size_t nodes = 0;
  bool stop = false;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (stop) return;
    if (k == n) {
      if (!visit(assignment)) stop = true;
      return;
    }
    for (const Id& candidate : domains_[k]) {
      if (stop) return;
      if (++nodes > budget.max_candidates)
        fail(Errc::budget_exceeded, "search node cap exceeded");
      assignment[k] = candidate;
      bool ok = true;
      for (const Constraint* c : at_var[k])
        if (!c->pred(assignment)) {
          ok = false;
          break;
        }
      if (ok) go(k + 1);
    }
  };
  go(0);
}

namespace {

void append_map(std::string& out, const std::map<Id, Id>& m) {
  for (const auto& [k, v] : m) {
    out += k;
    out += '>';
    out += v;
    out += ';';
  }
  out += '|';
}

void append_map(std::string& out, const std::map<IdPair, Id>& m) {
  for (const auto& [k, v] : m) {
    out += k.first;
    out += ',';
    out += k.second;
    out += '>';
    out += v;
    out += ';';
  }
  out += '|';
}

// Shared enumeration core: the module tables are optional; when absent the
// F₂ layer is skipped and plain symmetric 2-group homs are produced.
struct EnumContext {
  const SymTwoGroup& A;
  const SymTwoGroup& B;
  const RModule* dom_mod = nullptr;
  const RModule* cod_mod = nullptr;
  bool equivalences_only = false;
};

using EmitHom = std::function<bool(const std::map<Id, Id>& omap, const std::map<Id, Id>& mmap,
                                   const std::map<IdPair, Id>& fplus, const Id& fzero,
                                   const std::map<IdPair, Id>& ftwo)>;

void enumerate_homs_core(const EnumContext& ctx, const SearchBudget& budget, const EmitHom& emit) {
  const SymTwoGroup& A = ctx.A;
  const SymTwoGroup& B = ctx.B;
  const FinGroupoid& ga = A.base;
  const FinGroupoid& gb = B.base;
  const bool with_action = ctx.dom_mod != nullptr;

  if (ga.objects.size() > budget.max_objects || gb.objects.size() > budget.max_objects ||
      ga.morphisms.size() > budget.max_morphisms || gb.morphisms.size() > budget.max_morphisms)
    fail(Errc::budget_exceeded, "structure exceeds enumeration caps");

  // Nonempty-hom-set table of B, used for pruning object maps.
  std::map<IdPair, bool> connected;
  for (const Id& x : gb.objects)
    for (const Id& y : gb.objects) connected[{x, y}] = false;
  for (const Id& m : gb.morphisms) connected[{gb.source(m), gb.target(m)}] = true;

  std::map<Id, std::size_t> oidx;
  for (std::size_t i = 0; i < ga.objects.size(); ++i) oidx[ga.objects[i]] = i;

  BacktrackSolver osolver;
  for (std::size_t i = 0; i < ga.objects.size(); ++i) {
    (void)i;
    osolver.add_var(gb.objects);
  }
  // F₊/F₀/F₂ typing demands the relevant hom-sets are nonempty.
  for (const Id& a : ga.objects)
    for (const Id& b : ga.objects) {
      std::vector<std::size_t> vars{oidx.at(a), oidx.at(b), oidx.at(A.add(a, b))};
      osolver.add_constraint(vars, [&, a, b](const BacktrackSolver::Assignment& asg) {
        const Id& fa = asg[oidx.at(a)];
        const Id& fb = asg[oidx.at(b)];
        const Id& fab = asg[oidx.at(A.add(a, b))];
        return connected.at({fab, B.add(fa, fb)});
      });
    }
  osolver.add_constraint({oidx.at(A.unit)}, [&](const BacktrackSolver::Assignment& asg) {
    return connected.at({asg[oidx.at(A.unit)], B.unit});
  });
  if (with_action) {
    const RModule& DM = *ctx.dom_mod;
    const RModule& CM = *ctx.cod_mod;
    for (const Id& r : DM.ring->additive.base.objects)
      for (const Id& m : ga.objects) {
        std::vector<std::size_t> vars{oidx.at(m), oidx.at(DM.act(r, m))};
        osolver.add_constraint(vars, [&, r, m](const BacktrackSolver::Assignment& asg) {
          return connected.at({asg[oidx.at(DM.act(r, m))], CM.act(r, asg[oidx.at(m)])});
        });
      }
  }
  // Morphisms must have somewhere to go.
  for (const Id& m : ga.morphisms) {
    std::vector<std::size_t> vars{oidx.at(ga.source(m)), oidx.at(ga.target(m))};
    osolver.add_constraint(vars, [&, m](const BacktrackSolver::Assignment& asg) {
      return connected.at({asg[oidx.at(ga.source(m))], asg[oidx.at(ga.target(m))]});
    });
  }

  std::map<IdPair, std::size_t> hom_size_a, hom_size_b;
  std::map<Id, std::size_t> class_of_b;
  std::vector<std::vector<Id>> classes_a, classes_b;
  if (ctx.equivalences_only) {
    for (const Id& m : ga.morphisms) ++hom_size_a[{ga.source(m), ga.target(m)}];
    for (const Id& m : gb.morphisms) ++hom_size_b[{gb.source(m), gb.target(m)}];
    classes_a = iso_classes(ga);
    classes_b = iso_classes(gb);
    for (std::size_t c = 0; c < classes_b.size(); ++c)
      for (const Id& y : classes_b[c]) class_of_b[y] = c;
    for (const Id& x : ga.objects)
      for (const Id& y : ga.objects) {
        std::vector<std::size_t> vars{oidx.at(x), oidx.at(y)};
        std::size_t want = hom_size_a.count({x, y}) ? hom_size_a.at({x, y}) : 0;
        osolver.add_constraint(vars, [&, x, y, want](const BacktrackSolver::Assignment& asg) {
          IdPair key{asg[oidx.at(x)], asg[oidx.at(y)]};
          std::size_t got = hom_size_b.count(key) ? hom_size_b.at(key) : 0;
          return got == want;
        });
      }
    std::vector<std::size_t> all_vars;
    for (const Id& x : ga.objects) all_vars.push_back(oidx.at(x));
    osolver.add_constraint(all_vars, [&](const BacktrackSolver::Assignment& asg) {
      if (classes_a.size() != classes_b.size()) return false;
      std::vector<bool> hit(classes_b.size(), false);
      std::size_t distinct = 0;
      for (const auto& cls : classes_a) {
        std::size_t c = class_of_b.at(asg[oidx.at(cls.front())]);
        if (!hit[c]) {
          hit[c] = true;
          ++distinct;
        }
      }
      return distinct == classes_b.size();
    });
  }

  bool stopped = false;
  osolver.for_each_solution(budget, [&](const BacktrackSolver::Assignment& oasg) {
    std::map<Id, Id> omap;
    for (const Id& x : ga.objects) omap[x] = oasg[oidx.at(x)];

    std::map<Id, std::size_t> midx;
    BacktrackSolver msolver;
    for (const Id& m : ga.morphisms) {
      std::vector<Id> domain;
      if (ga.source(m) == ga.target(m) && m == ga.identity(ga.source(m))) {
        domain = {gb.identity(omap.at(ga.source(m)))};
      } else {
        domain = gb.hom(omap.at(ga.source(m)), omap.at(ga.target(m)));
      }
      midx[m] = msolver.add_var(std::move(domain));
    }
    for (const auto& [k, h] : ga.comp) {
      std::vector<std::size_t> vars{midx.at(k.first), midx.at(k.second), midx.at(h)};
      const Id g1 = k.first, f1 = k.second, h1 = h;
      msolver.add_constraint(vars, [&, g1, f1, h1](const BacktrackSolver::Assignment& asg) {
        return gb.compose(asg[midx.at(g1)], asg[midx.at(f1)]) == asg[midx.at(h1)];
      });
    }

    msolver.for_each_solution(budget, [&](const BacktrackSolver::Assignment& masg) {
      std::map<Id, Id> mmap;
      for (const Id& m : ga.morphisms) mmap[m] = masg[midx.at(m)];

      // Component layer: F₀, all F₊(a,b), then (module case) all F₂(r,m),
      // constrained by the hom coherence squares.
      BacktrackSolver csolver;
      std::size_t v_fzero = csolver.add_var(gb.hom(omap.at(A.unit), B.unit));
      std::map<IdPair, std::size_t> v_fplus;
      for (const Id& a : ga.objects)
        for (const Id& b : ga.objects)
          v_fplus[{a, b}] = csolver.add_var(
              gb.hom(omap.at(A.add(a, b)), B.add(omap.at(a), omap.at(b))));
      std::map<IdPair, std::size_t> v_ftwo;
      if (with_action) {
        const RModule& DM = *ctx.dom_mod;
        const RModule& CM = *ctx.cod_mod;
        for (const Id& r : DM.ring->additive.base.objects)
          for (const Id& m : ga.objects)
            v_ftwo[{r, m}] =
                csolver.add_var(gb.hom(omap.at(DM.act(r, m)), CM.act(r, omap.at(m))));
      }

      // lunit square pins F₊(0,a) against F₀; runs early in var order.
      for (const Id& a : ga.objects) {
        std::vector<std::size_t> vars{v_fzero, v_fplus.at({A.unit, a})};
        csolver.add_constraint(vars, [&, a](const BacktrackSolver::Assignment& asg) {
          Id lhs = gb.compose_path({asg[v_fplus.at({A.unit, a})],
                                    B.add_m(asg[v_fzero], gb.identity(omap.at(a))),
                                    B.lunit_at(omap.at(a))});
          return lhs == mmap.at(A.lunit_at(a));
        });
      }
      for (const Id& a : ga.objects) {
        std::vector<std::size_t> vars{v_fzero, v_fplus.at({a, A.unit})};
        csolver.add_constraint(vars, [&, a](const BacktrackSolver::Assignment& asg) {
          Id lhs = gb.compose_path({asg[v_fplus.at({a, A.unit})],
                                    B.add_m(gb.identity(omap.at(a)), asg[v_fzero]),
                                    B.runit_at(omap.at(a))});
          return lhs == mmap.at(A.runit_at(a));
        });
      }
      for (const Id& a : ga.objects)
        for (const Id& b : ga.objects) {
          std::vector<std::size_t> vars{v_fplus.at({a, b}), v_fplus.at({b, a})};
          csolver.add_constraint(vars, [&, a, b](const BacktrackSolver::Assignment& asg) {
            Id lhs = gb.compose(B.sym_at(omap.at(a), omap.at(b)), asg[v_fplus.at({a, b})]);
            Id rhs = gb.compose(asg[v_fplus.at({b, a})], mmap.at(A.sym_at(a, b)));
            return lhs == rhs;
          });
        }
      for (const Id& m : ga.morphisms)
        for (const Id& n : ga.morphisms) {
          IdPair p_src{ga.source(m), ga.source(n)};
          IdPair p_tgt{ga.target(m), ga.target(n)};
          std::vector<std::size_t> vars{v_fplus.at(p_src), v_fplus.at(p_tgt)};
          csolver.add_constraint(vars, [&, m, n, p_src, p_tgt](
                                           const BacktrackSolver::Assignment& asg) {
            Id lhs = gb.compose(B.add_m(mmap.at(m), mmap.at(n)), asg[v_fplus.at(p_src)]);
            Id rhs = gb.compose(asg[v_fplus.at(p_tgt)], mmap.at(A.add_m(m, n)));
            return lhs == rhs;
          });
        }
      for (const Id& a : ga.objects)
        for (const Id& b : ga.objects)
          for (const Id& c : ga.objects) {
            std::vector<std::size_t> vars{v_fplus.at({A.add(a, b), c}), v_fplus.at({a, b}),
                                          v_fplus.at({a, A.add(b, c)}), v_fplus.at({b, c})};
            csolver.add_constraint(vars, [&, a, b, c](const BacktrackSolver::Assignment& asg) {
              Id lhs = gb.compose_path(
                  {asg[v_fplus.at({A.add(a, b), c})],
                   B.add_m(asg[v_fplus.at({a, b})], gb.identity(omap.at(c))),
                   B.assoc_at(omap.at(a), omap.at(b), omap.at(c))});
              Id rhs = gb.compose_path(
                  {mmap.at(A.assoc_at(a, b, c)), asg[v_fplus.at({a, A.add(b, c)})],
                   B.add_m(gb.identity(omap.at(a)), asg[v_fplus.at({b, c})])});
              return lhs == rhs;
            });
          }

      if (with_action) {
        const RModule& DM = *ctx.dom_mod;
        const RModule& CM = *ctx.cod_mod;
        const FinGroupoid& gr = DM.ring->additive.base;
        const SymTwoGroup& R = DM.ring->additive;
        // iunit square pins F₂(1, m).
        for (const Id& m : ga.objects) {
          std::vector<std::size_t> vars{v_ftwo.at({DM.ring->one, m})};
          csolver.add_constraint(vars, [&, m](const BacktrackSolver::Assignment& asg) {
            Id lhs = gb.compose(CM.iunit_at(omap.at(m)), asg[v_ftwo.at({DM.ring->one, m})]);
            return lhs == mmap.at(DM.iunit_at(m));
          });
        }
        for (const Id& r : gr.objects) {
          std::vector<std::size_t> vars{v_fzero, v_ftwo.at({r, A.unit})};
          csolver.add_constraint(vars, [&, r](const BacktrackSolver::Assignment& asg) {
            Id lhs = gb.compose(asg[v_fzero], mmap.at(DM.zzero_at(r)));
            Id rhs = gb.compose_path({asg[v_ftwo.at({r, A.unit})],
                                      CM.act_m(gr.identity(r), asg[v_fzero]),
                                      CM.zzero_at(r)});
            return lhs == rhs;
          });
        }
        for (const Id& rm : gr.morphisms)
          for (const Id& f : ga.morphisms) {
            IdPair p_src{gr.source(rm), ga.source(f)};
            IdPair p_tgt{gr.target(rm), ga.target(f)};
            std::vector<std::size_t> vars{v_ftwo.at(p_src), v_ftwo.at(p_tgt)};
            csolver.add_constraint(
                vars, [&, rm, f, p_src, p_tgt](const BacktrackSolver::Assignment& asg) {
                  Id lhs = gb.compose(CM.act_m(rm, mmap.at(f)), asg[v_ftwo.at(p_src)]);
                  Id rhs = gb.compose(asg[v_ftwo.at(p_tgt)], mmap.at(DM.act_m(rm, f)));
                  return lhs == rhs;
                });
          }
        for (const Id& r : gr.objects)
          for (const Id& m : ga.objects)
            for (const Id& n : ga.objects) {
              std::vector<std::size_t> vars{v_fplus.at({DM.act(r, m), DM.act(r, n)}),
                                            v_ftwo.at({r, m}), v_ftwo.at({r, n}),
                                            v_ftwo.at({r, A.add(m, n)}), v_fplus.at({m, n})};
              csolver.add_constraint(vars, [&, r, m, n](const BacktrackSolver::Assignment& asg) {
                Id lhs = gb.compose_path(
                    {mmap.at(DM.adist_at(r, m, n)),
                     asg[v_fplus.at({DM.act(r, m), DM.act(r, n)})],
                     B.add_m(asg[v_ftwo.at({r, m})], asg[v_ftwo.at({r, n})])});
                Id rhs = gb.compose_path(
                    {asg[v_ftwo.at({r, A.add(m, n)})],
                     CM.act_m(gr.identity(r), asg[v_fplus.at({m, n})]),
                     CM.adist_at(r, omap.at(m), omap.at(n))});
                return lhs == rhs;
              });
            }
        for (const Id& r : gr.objects)
          for (const Id& s : gr.objects)
            for (const Id& m : ga.objects) {
              std::vector<std::size_t> vars{v_fplus.at({DM.act(r, m), DM.act(s, m)}),
                                            v_ftwo.at({r, m}), v_ftwo.at({s, m}),
                                            v_ftwo.at({R.add(r, s), m})};
              csolver.add_constraint(vars, [&, r, s, m](const BacktrackSolver::Assignment& asg) {
                Id lhs = gb.compose_path(
                    {mmap.at(DM.bdist_at(r, s, m)),
                     asg[v_fplus.at({DM.act(r, m), DM.act(s, m)})],
                     B.add_m(asg[v_ftwo.at({r, m})], asg[v_ftwo.at({s, m})])});
                Id rhs = gb.compose(CM.bdist_at(r, s, omap.at(m)),
                                    asg[v_ftwo.at({R.add(r, s), m})]);
                return lhs == rhs;
              });
            }
        for (const Id& r : gr.objects)
          for (const Id& s : gr.objects)
            for (const Id& m : ga.objects) {
              std::vector<std::size_t> vars{v_ftwo.at({DM.ring->mul(r, s), m}),
                                            v_ftwo.at({r, DM.act(s, m)}), v_ftwo.at({s, m})};
              csolver.add_constraint(vars, [&, r, s, m](const BacktrackSolver::Assignment& asg) {
                Id lhs = gb.compose_path(
                    {mmap.at(DM.bassoc_at(r, s, m)), asg[v_ftwo.at({r, DM.act(s, m)})],
                     CM.act_m(gr.identity(r), asg[v_ftwo.at({s, m})])});
                Id rhs = gb.compose(CM.bassoc_at(r, s, omap.at(m)),
                                    asg[v_ftwo.at({DM.ring->mul(r, s), m})]);
                return lhs == rhs;
              });
            }
      }

      csolver.for_each_solution(budget, [&](const BacktrackSolver::Assignment& casg) {
        std::map<IdPair, Id> fplus;
        for (const auto& [k, v] : v_fplus) fplus[k] = casg[v];
        std::map<IdPair, Id> ftwo;
        for (const auto& [k, v] : v_ftwo) ftwo[k] = casg[v];
        if (!emit(omap, mmap, fplus, casg[v_fzero], ftwo)) stopped = true;
        return !stopped;
      });
      return !stopped;
    });
    return !stopped;
  });
}

}  // namespace

void for_each_mod_hom(std::shared_ptr<const RModule> m, std::shared_ptr<const RModule> n,
                      const SearchBudget& budget, bool equivalences_only,
                      const std::function<bool(const RModHom&)>& visit) {
  if (!same_ring(*m, *n)) fail(Errc::ring_mismatch, "hom enumeration over distinct rings");
  EnumContext ctx{m->carrier, n->carrier, m.get(), n.get(), equivalences_only};
  enumerate_homs_core(ctx, budget,
                      [&](const std::map<Id, Id>& omap, const std::map<Id, Id>& mmap,
                          const std::map<IdPair, Id>& fplus, const Id& fzero,
                          const std::map<IdPair, Id>& ftwo) {
                        RModHom h;
                        h.dom = m;
                        h.cod = n;
                        h.omap = omap;
                        h.mmap = mmap;
                        h.fplus = fplus;
                        h.fzero = fzero;
                        h.ftwo = ftwo;
                        if (!validate_mod_hom(h).all_pass()) return true;
                        return visit(h);
                      });
}

std::vector<RModHom> enumerate_mod_homs(std::shared_ptr<const RModule> m,
                                        std::shared_ptr<const RModule> n,
                                        const SearchBudget& budget) {
  std::vector<RModHom> out;
  for_each_mod_hom(m, n, budget, false, [&](const RModHom& h) {
    out.push_back(h);
    return true;
  });
  std::sort(out.begin(), out.end(),
            [](const RModHom& a, const RModHom& b) { return hom_key(a) < hom_key(b); });
  return out;
}

std::vector<TwoGroupHom> enumerate_two_group_homs(const SymTwoGroup& a, const SymTwoGroup& b,
                                                  const SearchBudget& budget) {
  std::vector<TwoGroupHom> out;
  EnumContext ctx{a, b, nullptr, nullptr, false};
  enumerate_homs_core(ctx, budget,
                      [&](const std::map<Id, Id>& omap, const std::map<Id, Id>& mmap,
                          const std::map<IdPair, Id>& fplus, const Id& fzero,
                          const std::map<IdPair, Id>&) {
                        TwoGroupHom h;
                        h.dom = a;
                        h.cod = b;
                        h.omap = omap;
                        h.mmap = mmap;
                        h.fplus = fplus;
                        h.fzero = fzero;
                        if (validate_hom(h).all_pass()) out.push_back(std::move(h));
                        return true;
                      });
  std::sort(out.begin(), out.end(),
            [](const TwoGroupHom& x, const TwoGroupHom& y) { return hom_key(x) < hom_key(y); });
  return out;
}

namespace {

// Component enumeration shared by the module- and 2-group-level cases.
// The action-square constraint is added only when modules are present.
template <typename Emit>
void enumerate_mors_core(const SymTwoGroup& A, const SymTwoGroup& B, const AdditiveHomView& f,
                         const AdditiveHomView& g, const RModule* dom_mod, const RModHom* fm,
                         const RModHom* gm, const SearchBudget& budget, const Emit& emit) {
  const FinGroupoid& ga = A.base;
  const FinGroupoid& gb = B.base;
  BacktrackSolver solver;
  std::map<Id, std::size_t> vidx;
  for (const Id& x : ga.objects) vidx[x] = solver.add_var(gb.hom(f.ap(x), g.ap(x)));

  for (const Id& m : ga.morphisms) {
    std::vector<std::size_t> vars{vidx.at(ga.source(m)), vidx.at(ga.target(m))};
    solver.add_constraint(vars, [&, m](const BacktrackSolver::Assignment& asg) {
      Id lhs = gb.compose(asg[vidx.at(ga.target(m))], f.ap_m(m));
      Id rhs = gb.compose(g.ap_m(m), asg[vidx.at(ga.source(m))]);
      return lhs == rhs;
    });
  }
  for (const Id& x : ga.objects)
    for (const Id& y : ga.objects) {
      std::vector<std::size_t> vars{vidx.at(x), vidx.at(y), vidx.at(A.add(x, y))};
      solver.add_constraint(vars, [&, x, y](const BacktrackSolver::Assignment& asg) {
        Id lhs = gb.compose(B.add_m(asg[vidx.at(x)], asg[vidx.at(y)]), f.fp(x, y));
        Id rhs = gb.compose(g.fp(x, y), asg[vidx.at(A.add(x, y))]);
        return lhs == rhs;
      });
    }
  solver.add_constraint({vidx.at(A.unit)}, [&](const BacktrackSolver::Assignment& asg) {
    return gb.compose(*g.fzero, asg[vidx.at(A.unit)]) == *f.fzero;
  });
  if (dom_mod) {
    const FinGroupoid& gr = dom_mod->ring->additive.base;
    for (const Id& r : gr.objects)
      for (const Id& m : ga.objects) {
        std::vector<std::size_t> vars{vidx.at(m), vidx.at(dom_mod->act(r, m))};
        solver.add_constraint(vars, [&, r, m](const BacktrackSolver::Assignment& asg) {
          const RModule& CM = *fm->cod;
          Id lhs = gb.compose(CM.act_m(gr.identity(r), asg[vidx.at(m)]), fm->f2(r, m));
          Id rhs = gb.compose(gm->f2(r, m), asg[vidx.at(dom_mod->act(r, m))]);
          return lhs == rhs;
        });
      }
  }
  solver.for_each_solution(budget, [&](const BacktrackSolver::Assignment& asg) {
    std::map<Id, Id> component;
    for (const Id& x : ga.objects) component[x] = asg[vidx.at(x)];
    emit(component);
    return true;
  });
}

}  // namespace

std::vector<RModMor> enumerate_mod_mors(const RModHom& f, const RModHom& g,
                                        const SearchBudget& budget) {
  std::vector<RModMor> out;
  AdditiveHomView fv = additive_view(f);
  AdditiveHomView gv = additive_view(g);
  enumerate_mors_core(f.dom->carrier, f.cod->carrier, fv, gv, f.dom.get(), &f, &g, budget,
                      [&](const std::map<Id, Id>& component) {
                        RModMor t;
                        t.source = f;
                        t.target = g;
                        t.component = component;
                        if (validate_mod_two_morphism(t).all_pass()) out.push_back(std::move(t));
                      });
  std::sort(out.begin(), out.end(),
            [](const RModMor& a, const RModMor& b) { return mor_key(a) < mor_key(b); });
  return out;
}

std::vector<TwoGroupMor> enumerate_two_group_mors(const TwoGroupHom& f, const TwoGroupHom& g,
                                                  const SearchBudget& budget) {
  std::vector<TwoGroupMor> out;
  AdditiveHomView fv{&f.dom, &f.cod, &f.omap, &f.mmap, &f.fplus, &f.fzero};
  AdditiveHomView gv{&g.dom, &g.cod, &g.omap, &g.mmap, &g.fplus, &g.fzero};
  enumerate_mors_core(f.dom, f.cod, fv, gv, nullptr, nullptr, nullptr, budget,
                      [&](const std::map<Id, Id>& component) {
                        TwoGroupMor t;
                        t.source = f;
                        t.target = g;
                        t.component = component;
                        if (validate_two_morphism(t).all_pass()) out.push_back(std::move(t));
                      });
  std::sort(out.begin(), out.end(),
            [](const TwoGroupMor& a, const TwoGroupMor& b) { return mor_key(a) < mor_key(b); });
  return out;
}

std::string hom_key(const RModHom& f) {
  std::string out;
  append_map(out, f.omap);
  append_map(out, f.mmap);
  append_map(out, f.fplus);
  out += f.fzero;
  out += '|';
  append_map(out, f.ftwo);
  return out;
}

std::string mor_key(const RModMor& t) {
  std::string out = hom_key(t.source);
  out += '#';
  out += hom_key(t.target);
  out += '#';
  append_map(out, t.component);
  return out;
}

std::string hom_key(const TwoGroupHom& f) {
  std::string out;
  append_map(out, f.omap);
  append_map(out, f.mmap);
  append_map(out, f.fplus);
  out += f.fzero;
  out += '|';
  return out;
}

std::string mor_key(const TwoGroupMor& t) {
  std::string out = hom_key(t.source);
  out += '#';
  out += hom_key(t.target);
  out += '#';
  append_map(out, t.component);
  return out;
}

}  // namespace picard
