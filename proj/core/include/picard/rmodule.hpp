#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "picard/budget.hpp"
#include "picard/tworing.hpp"

namespace picard {

/// R-2-module: symmetric 2-group carrier with a coherent ring action.
/// Components: adist a^r_{m,n} : r·(m+n) → r·m+r·n,
/// bdist b^{r,s}_m : (r+s)·m → r·m+s·m, bassoc b_{r,s,m} : (rs)·m → r·(s·m),
/// iunit i_m : 1·m → m, zzero z_r : r·0 → 0.
struct RModule {
  std::shared_ptr<const TwoRing> ring;
  SymTwoGroup carrier;
  Bifunctor action;
  std::map<IdTriple, Id> adist;   // (r, m, n)
  std::map<IdTriple, Id> bdist;   // (r, s, m)
  std::map<IdTriple, Id> bassoc;  // (r, s, m)
  std::map<Id, Id> iunit;         // m
  std::map<Id, Id> zzero;         // r

  const Id& act(const Id& r, const Id& m) const;
  const Id& act_m(const Id& f, const Id& g) const;
  const Id& adist_at(const Id& r, const Id& m, const Id& n) const;
  const Id& bdist_at(const Id& r, const Id& s, const Id& m) const;
  const Id& bassoc_at(const Id& r, const Id& s, const Id& m) const;
  const Id& iunit_at(const Id& m) const;
  const Id& zzero_at(const Id& r) const;
};

bool same_ring(const RModule& a, const RModule& b);
bool table_equal(const RModule& a, const RModule& b);

struct ModuleTable {
  std::vector<Id> elements;
  std::map<IdPair, Id> add;
  std::map<IdPair, Id> action;  // (ring element, module element)
};

/// Discrete module over a discrete 2-ring; throws NOT_MODULE naming the
/// violated law.
RModule build_discrete_module(std::shared_ptr<const TwoRing> ring, const ModuleTable& m);

CheckReport validate_module(const RModule& m);

struct RModHom {
  std::shared_ptr<const RModule> dom;
  std::shared_ptr<const RModule> cod;
  std::map<Id, Id> omap;
  std::map<Id, Id> mmap;
  std::map<IdPair, Id> fplus;
  Id fzero;
  std::map<IdPair, Id> ftwo;  // F₂(r,m) : F(r·m) → r·F(m)

  const Id& ap(const Id& obj) const;
  const Id& ap_m(const Id& mor) const;
  const Id& fp(const Id& a, const Id& b) const;
  const Id& f2(const Id& r, const Id& m) const;
};

bool table_equal(const RModHom& a, const RModHom& b);

struct RModMor {
  RModHom source;
  RModHom target;
  std::map<Id, Id> component;
};

bool table_equal(const RModMor& a, const RModMor& b);

CheckReport validate_mod_hom(const RModHom& f);
CheckReport validate_mod_two_morphism(const RModMor& t);

RModHom identity_mod_hom(std::shared_ptr<const RModule> m);
/// Constant functor at the unit of `cod`; F₊ the inverse left unitor at 0,
/// F₀ the identity, F₂ the inverse z_r.
RModHom zero_hom(std::shared_ptr<const RModule> dom, std::shared_ptr<const RModule> cod);
/// compose_mod_hom(F, G) = G∘F; requires cod F = dom G.
RModHom compose_mod_hom(const RModHom& f, const RModHom& g);

RModMor identity_mod_mor(const RModHom& f);
RModMor inverse_mod_mor(const RModMor& t);
RModMor vcomp(const RModMor& t, const RModMor& s);
RModMor hcomp(const RModMor& alpha, const RModMor& beta);
/// 1_G ∗ α (post-whiskering by the hom g).
RModMor whisker_post(const RModMor& alpha, const RModHom& g);
/// β ∗ 1_F (pre-whiskering by the hom f).
RModMor whisker_pre(const RModHom& f, const RModMor& beta);

struct HomTwoGroupResult {
  SymTwoGroup hom;
  std::vector<RModHom> objects;     // aligned with hom.base.objects
  std::vector<RModMor> morphisms;   // aligned with hom.base.morphisms
};

/// Exhaustively enumerates Hom(M, N) and assembles the pointwise symmetric
/// 2-group with unit the zero hom. Throws BUDGET_EXCEEDED past the caps.
HomTwoGroupResult hom_two_group(std::shared_ptr<const RModule> m,
                                std::shared_ptr<const RModule> n, const SearchBudget& budget);

struct BiproductResult {
  std::shared_ptr<const RModule> sum;
  RModHom p1;
  RModHom p2;
  RModHom i1;
  RModHom i2;
};

BiproductResult biproduct(std::shared_ptr<const RModule> a, std::shared_ptr<const RModule> b);

AdditiveHomView additive_view(const RModHom& f);

}  // namespace picard
