#pragma once

#include <functional>
#include <vector>

#include "picard/budget.hpp"
#include "picard/rmodule.hpp"

namespace picard {

/// Finite-domain backtracking in deterministic order: variables by index,
/// candidates in the order supplied. A constraint is evaluated as soon as
/// its highest variable is assigned. Node count is charged against
/// budget.max_candidates; exceeding it throws BUDGET_EXCEEDED.
class BacktrackSolver {
 public:
  using Assignment = std::vector<Id>;
  using Pred = std::function<bool(const Assignment&)>;

  std::size_t add_var(std::vector<Id> domain);
  void add_constraint(std::vector<std::size_t> vars, Pred pred);

  /// Visits every full solution; `visit` returns false to stop early.
  void for_each_solution(const SearchBudget& budget,
                         const std::function<bool(const Assignment&)>& visit) const;

 private:
  std::vector<std::vector<Id>> domains_;
  struct Constraint {
    std::vector<std::size_t> vars;
    Pred pred;
  };
  std::vector<Constraint> constraints_;
};

/// All R-homomorphisms M → N, each validated, sorted by canonical key.
std::vector<RModHom> enumerate_mod_homs(std::shared_ptr<const RModule> m,
                                        std::shared_ptr<const RModule> n,
                                        const SearchBudget& budget);

/// Streams valid homs in enumeration order until `visit` returns false.
/// With `equivalences_only` the object-map search is pruned to candidates
/// whose hom-set cardinalities match and whose induced map on isomorphism
/// classes is a bijection.
void for_each_mod_hom(std::shared_ptr<const RModule> m, std::shared_ptr<const RModule> n,
                      const SearchBudget& budget, bool equivalences_only,
                      const std::function<bool(const RModHom&)>& visit);

/// All 2-morphisms F ⇒ G, validated, sorted by canonical key.
std::vector<RModMor> enumerate_mod_mors(const RModHom& f, const RModHom& g,
                                        const SearchBudget& budget);

std::vector<TwoGroupHom> enumerate_two_group_homs(const SymTwoGroup& a, const SymTwoGroup& b,
                                                  const SearchBudget& budget);

std::vector<TwoGroupMor> enumerate_two_group_mors(const TwoGroupHom& f, const TwoGroupHom& g,
                                                  const SearchBudget& budget);

// Canonical table serializations; the sort order behind every enumerated
// object/morphism naming.
std::string hom_key(const RModHom& f);
std::string mor_key(const RModMor& t);
std::string hom_key(const TwoGroupHom& f);
std::string mor_key(const TwoGroupMor& t);

}  // namespace picard
