#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "picard/groupoid.hpp"
#include "picard/report.hpp"

namespace picard {

using IdTriple = std::array<Id, 3>;

/// Bifunctor tables keyed by argument pairs; equivalent to a FunctorData
/// out of product(dom, dom) but kept unencoded for direct lookup.
struct Bifunctor {
  std::map<IdPair, Id> obj;
  std::map<IdPair, Id> mor;

  bool operator==(const Bifunctor&) const = default;
};

/// Symmetric 2-group: groupoid + tensor + full coherence component tables.
/// Components: assoc ⟨a,b,c⟩ : (a+b)+c → a+(b+c), lunit l_a : 0+a → a,
/// runit r_a : a+0 → a, sym c_{a,b} : a+b → b+a, eta η_a : a*+a → 0.
struct SymTwoGroup {
  FinGroupoid base;
  Bifunctor tensor;
  Id unit;
  std::map<IdTriple, Id> assoc;
  std::map<Id, Id> lunit;
  std::map<Id, Id> runit;
  std::map<IdPair, Id> sym;
  std::map<Id, Id> dual;
  std::map<Id, Id> eta;

  const Id& add(const Id& a, const Id& b) const;
  const Id& add_m(const Id& f, const Id& g) const;
  const Id& assoc_at(const Id& a, const Id& b, const Id& c) const;
  const Id& lunit_at(const Id& a) const;
  const Id& runit_at(const Id& a) const;
  const Id& sym_at(const Id& a, const Id& b) const;
  const Id& dual_of(const Id& a) const;
  const Id& eta_at(const Id& a) const;

  bool operator==(const SymTwoGroup&) const = default;
};

/// Finite abelian group presented as an addition table.
struct GroupTable {
  std::vector<Id> elements;
  std::map<IdPair, Id> add;
};

/// Throws NOT_GROUP / NOT_ABELIAN; returns the unit element.
Id require_abelian_group(const GroupTable& t);

/// Discrete symmetric 2-group D(G): objects = elements, morphisms =
/// identities, every coherence component an identity.
SymTwoGroup build_discrete(const GroupTable& g);

/// One-object delooping B(H): morphisms = elements, composition = tensor
/// on morphisms = addition in H.
SymTwoGroup build_deloop(const GroupTable& h);

CheckReport validate_two_group(const SymTwoGroup& a);

/// Canonical interchange ⟨^{a b}_{c d}⟩ : (a+b)+(c+d) → (a+c)+(b+d).
Id interchange(const SymTwoGroup& a, const Id& x, const Id& y, const Id& z, const Id& w);
/// The alternative canonical route through the left bracketing; equal to
/// `interchange` on every valid instance (checked by tests).
Id interchange_alt(const SymTwoGroup& a, const Id& x, const Id& y, const Id& z, const Id& w);

struct TwoGroupHom {
  SymTwoGroup dom;
  SymTwoGroup cod;
  std::map<Id, Id> omap;
  std::map<Id, Id> mmap;
  std::map<IdPair, Id> fplus;  // F₊(a,b) : F(a+b) → Fa+Fb
  Id fzero;                    // F₀ : F0 → 0

  const Id& ap(const Id& obj) const;
  const Id& ap_m(const Id& mor) const;
  const Id& fp(const Id& a, const Id& b) const;

  bool operator==(const TwoGroupHom&) const = default;
};

struct TwoGroupMor {
  TwoGroupHom source;
  TwoGroupHom target;
  std::map<Id, Id> component;

  bool operator==(const TwoGroupMor&) const = default;
};

CheckReport validate_hom(const TwoGroupHom& f);
CheckReport validate_two_morphism(const TwoGroupMor& e);

TwoGroupHom identity_hom(const SymTwoGroup& a);
/// Diagram order per the composition formulas H₊ = G₊(Fa,Fb)∘G(F₊),
/// H₀ = G₀∘G(F₀): compose_hom(F, G) = G∘F, requires cod F = dom G.
TwoGroupHom compose_hom(const TwoGroupHom& f, const TwoGroupHom& g);

TwoGroupMor identity_two_morphism(const TwoGroupHom& f);
TwoGroupMor inverse_two_morphism(const TwoGroupMor& e);
/// vcomp(τ, σ) = σ∘τ (τ applied first).
TwoGroupMor vcomp(const TwoGroupMor& t, const TwoGroupMor& s);
/// hcomp(α, β) for α : F⇒F′ : A→B and β : G⇒G′ : B→C has component
/// β_{F′(a)} ∘ G(α_a) and boundary G∘F ⇒ G′∘F′.
TwoGroupMor hcomp(const TwoGroupMor& alpha, const TwoGroupMor& beta);

// Additive-layer validators shared with the 2-ring and module homs; entries
// are recorded with the `hom.` / `mor.` prefixes.
struct AdditiveHomView {
  const SymTwoGroup* dom;
  const SymTwoGroup* cod;
  const std::map<Id, Id>* omap;
  const std::map<Id, Id>* mmap;
  const std::map<IdPair, Id>* fplus;
  const Id* fzero;

  const Id& ap(const Id& obj) const;
  const Id& ap_m(const Id& mor) const;
  const Id& fp(const Id& a, const Id& b) const;
};

CheckReport validate_additive_hom(const AdditiveHomView& f);
CheckReport validate_additive_two_morphism(const AdditiveHomView& f, const AdditiveHomView& g,
                                           const std::map<Id, Id>& component);

}  // namespace picard
