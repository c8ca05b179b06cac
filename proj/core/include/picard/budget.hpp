#pragma once

#include <cstddef>

namespace picard {

/// Caps for the exhaustive enumeration and equivalence searches. Exceeding
/// a cap raises BUDGET_EXCEEDED, which is distinct from a definitive
/// negative answer.
struct SearchBudget {
  std::size_t max_objects = 8;
  std::size_t max_morphisms = 64;
  std::size_t max_candidates = 2000000;
};

}  // namespace picard
