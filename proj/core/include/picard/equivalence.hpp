#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "picard/budget.hpp"
#include "picard/rmodule.hpp"

namespace picard {

struct Verdict {
  bool holds = false;
  std::vector<Id> witness;  // counterexample when !holds
};

Verdict is_faithful(const RModHom& f);
Verdict is_full(const RModHom& f);
Verdict is_essentially_surjective(const RModHom& f);

/// Equivalence invariants: equal fingerprints are necessary for an
/// equivalence to exist. Class sizes are deliberately absent (they are not
/// invariant under equivalence); only the automorphism multiset is.
struct Fingerprint {
  std::size_t pi0 = 0;  // object count up to isomorphism
  std::size_t pi1 = 0;  // automorphisms of the unit object
  std::vector<std::size_t> classes;  // automorphism count per class, sorted

  bool operator==(const Fingerprint&) const = default;
  std::string to_string() const;
};

Fingerprint invariants_fingerprint(const RModule& m);

struct EquivalenceWitness {
  RModHom forth;
  RModHom back;
  RModMor unit;    // back∘forth ⇒ 1
  RModMor counit;  // forth∘back ⇒ 1
};

/// Exhaustive equivalence search. Returns a fully validated witness or
/// absence (definitive at desk scale); throws BUDGET_EXCEEDED if the caps
/// are hit first.
std::optional<EquivalenceWitness> find_equivalence(std::shared_ptr<const RModule> m,
                                                   std::shared_ptr<const RModule> n,
                                                   const SearchBudget& budget);

}  // namespace picard
