#pragma once

#include <map>
#include <memory>
#include <vector>

#include "picard/budget.hpp"
#include "picard/rmodule.hpp"
#include "picard/tworing.hpp"

namespace picard {

/// End(A) as a 2-ring: additive base objects are the endomorphism homs of
/// A, morphisms the 2-morphisms between them; + is pointwise and · is
/// composition. Provenance vectors are index-aligned with the base tables.
struct EndRing {
  std::shared_ptr<const TwoRing> ring;
  SymTwoGroup carrier;
  std::vector<TwoGroupHom> objects;
  std::vector<TwoGroupMor> morphisms;

  const TwoGroupHom& object_of(const Id& name) const;
  const TwoGroupMor& morphism_of(const Id& name) const;
};

EndRing end_ring(const SymTwoGroup& a, const SearchBudget& budget);

struct Representation {
  TwoRingHom rep;  // R → End(carrier)
  EndRing end;
};

/// The representation r ↦ (m ↦ r·m) with F(r)₊ = a^r, F(r)₀ = z_r,
/// F₊ = b^{·,·}, F· = b_{·,·,·}, F₁ = i.
Representation rep_from_module(const RModule& m, const SearchBudget& budget);

/// Action r·m = F(r)(m) together with the five coherence families read off
/// the representation. Throws NOT_ENDRING when f's codomain is not the
/// given End-ring.
RModule module_from_rep(const TwoRingHom& f, const EndRing& end);

}  // namespace picard
