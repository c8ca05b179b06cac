#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "picard/twogroup.hpp"

namespace picard {

/// 2-ring: symmetric 2-group + multiplicative monoidal structure with
/// left/right distributors. Components: massoc [r,s,t] : (r·s)·t → r·(s·t),
/// mlunit λ_r : 1·r → r, mrunit ρ_r : r·1 → r,
/// ldist [r^{s1}_{s0}⟩ : r·(s0+s1) → r·s0+r·s1,
/// rdist ⟨^{r0}_{r1}s] : (r0+r1)·s → r0·s+r1·s.
struct TwoRing {
  SymTwoGroup additive;
  Bifunctor mult;
  Id one;
  std::map<IdTriple, Id> massoc;
  std::map<Id, Id> mlunit;
  std::map<Id, Id> mrunit;
  std::map<IdTriple, Id> ldist;  // keyed (r, s0, s1)
  std::map<IdTriple, Id> rdist;  // keyed (r0, r1, s)

  const Id& mul(const Id& a, const Id& b) const;
  const Id& mul_m(const Id& f, const Id& g) const;
  const Id& massoc_at(const Id& r, const Id& s, const Id& t) const;
  const Id& mlunit_at(const Id& r) const;
  const Id& mrunit_at(const Id& r) const;
  const Id& ldist_at(const Id& r, const Id& s0, const Id& s1) const;
  const Id& rdist_at(const Id& r0, const Id& r1, const Id& s) const;

  bool operator==(const TwoRing&) const = default;
};

struct RingTable {
  std::vector<Id> elements;
  std::map<IdPair, Id> add;
  std::map<IdPair, Id> mul;
};

/// Discrete (strict) 2-ring from a finite commutative unital ring table.
/// Throws NOT_RING when the tables fail the ring axioms.
TwoRing build_discrete_ring(const RingTable& t);

CheckReport validate_two_ring(const TwoRing& r);

struct TwoRingHom {
  std::shared_ptr<const TwoRing> dom;
  std::shared_ptr<const TwoRing> cod;
  std::map<Id, Id> omap;
  std::map<Id, Id> mmap;
  std::map<IdPair, Id> fplus;
  Id fzero;
  std::map<IdPair, Id> fdot;  // F·(r,s) : F(r·s) → F(r)·F(s)
  Id fone;                    // F₁ : F(1) → 1

  const Id& ap(const Id& obj) const;
  const Id& ap_m(const Id& mor) const;
  const Id& fp(const Id& a, const Id& b) const;
  const Id& fd(const Id& a, const Id& b) const;
};

bool table_equal(const TwoRingHom& a, const TwoRingHom& b);

struct TwoRingMor {
  TwoRingHom source;
  TwoRingHom target;
  std::map<Id, Id> component;
};

TwoRingHom identity_ring_hom(std::shared_ptr<const TwoRing> r);

CheckReport validate_ring_hom(const TwoRingHom& f);
CheckReport validate_ring_two_morphism(const TwoRingMor& e);

}  // namespace picard
