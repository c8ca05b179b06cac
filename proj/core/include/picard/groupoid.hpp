#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "picard/report.hpp"

namespace picard {

using Id = std::string;
using IdPair = std::pair<Id, Id>;

Id pair_id(const Id& a, const Id& b);
Id tuple_id(const std::vector<Id>& parts);

/// Finite groupoid as explicit tables. Objects and morphisms are opaque
/// string identifiers with their natural total order; `comp` is keyed
/// (g, f) and holds g∘f exactly for composable pairs (tgt f = src g).
struct FinGroupoid {
  std::vector<Id> objects;
  std::vector<Id> morphisms;
  std::map<Id, Id> src;
  std::map<Id, Id> tgt;
  std::map<Id, Id> id_of;
  std::map<IdPair, Id> comp;
  std::map<Id, Id> inv;

  bool has_object(const Id& x) const;
  bool has_morphism(const Id& m) const;
  const Id& source(const Id& m) const;
  const Id& target(const Id& m) const;
  const Id& identity(const Id& x) const;
  const Id& inverse(const Id& m) const;
  bool composable(const Id& g, const Id& f) const;
  /// g∘f; throws MALFORMED_TABLE when the entry is missing.
  const Id& compose(const Id& g, const Id& f) const;
  /// Composite of a path listed in application order: {f1, f2, f3} ↦ f3∘f2∘f1.
  Id compose_path(const std::vector<Id>& path) const;
  std::vector<Id> hom(const Id& x, const Id& y) const;

  void sort_tables();

  bool operator==(const FinGroupoid&) const = default;
};

/// Throws MALFORMED_TABLE unless every table is shape-complete (all
/// referenced identifiers exist, no entries for unknown identifiers).
void require_shape(const FinGroupoid& g);

CheckReport validate_groupoid(const FinGroupoid& g);

struct FunctorData {
  FinGroupoid dom;
  FinGroupoid cod;
  std::map<Id, Id> omap;
  std::map<Id, Id> mmap;

  const Id& ap(const Id& obj) const;
  const Id& ap_m(const Id& mor) const;

  bool operator==(const FunctorData&) const = default;
};

CheckReport validate_functor(const FunctorData& f);
FunctorData identity_functor(const FinGroupoid& g);
/// Diagram-order composition: cod f must equal dom g, result is g∘f.
FunctorData compose_functors(const FunctorData& f, const FunctorData& g);

struct NatTransData {
  FunctorData source;
  FunctorData target;
  std::map<Id, Id> component;  // object of dom -> morphism of cod

  bool operator==(const NatTransData&) const = default;
};

CheckReport validate_natural(const NatTransData& n);

/// Unordered pairs of parallel morphisms declared equivalent.
struct MorRelation {
  std::vector<IdPair> pairs;
};

FinGroupoid product(const FinGroupoid& g, const FinGroupoid& h);

struct QuotientResult {
  FinGroupoid quotient;
  FunctorData projection;
};

/// Closes the relation under reflexivity/symmetry/transitivity and
/// composition congruence, then rebuilds tables on the order-minimal
/// class representatives. Throws NOT_PARALLEL on non-parallel pairs.
QuotientResult quotient_morphisms(const FinGroupoid& g, const MorRelation& rel);

/// Isomorphism classes of objects, each sorted, classes ordered by minimum.
std::vector<std::vector<Id>> iso_classes(const FinGroupoid& g);
std::vector<Id> automorphisms(const FinGroupoid& g, const Id& x);

}  // namespace picard
