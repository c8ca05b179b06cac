#pragma once

#include <map>
#include <memory>
#include <optional>

#include "picard/budget.hpp"
#include "picard/equivalence.hpp"
#include "picard/rmodule.hpp"

namespace picard {

/// Kernel objects are pairs (A, a) with a : F(A) → 0; morphisms pair an
/// A-morphism with the source's a. Object ids are "(A,a)".
struct KernelResult {
  std::shared_ptr<const RModule> ker;
  RModHom e;    // KerF → A
  RModMor eps;  // F∘e ⇒ 0
  std::map<Id, IdPair> provenance;  // object id -> (A, a)
};

KernelResult kernel(const RModHom& f);

/// Cokernel objects are those of B; morphisms are classes of raw triples
/// (B2, f, A) with f : B1 → B2+F(A); ids are minimal raw representatives.
struct CokernelResult {
  std::shared_ptr<const RModule> coker;
  RModHom p;   // B → CokerF
  RModMor pi;  // p∘F ⇒ 0
  std::map<Id, std::array<Id, 3>> provenance;  // class id -> (B2, f, A)
  /// Class of an arbitrary raw triple (needed by the comparison homs).
  Id class_of_raw(const Id& b2, const Id& f, const Id& a) const;
  /// Class of p(g) for a plain B-morphism g.
  Id class_of(const RModHom& f, const Id& g) const;

  std::map<Id, Id> raw_class;  // raw id -> class id
};

CokernelResult cokernel(const RModHom& f);

struct FactoringResult {
  RModHom g1;    // the induced G′
  RModMor phi1;  // the comparison 2-morphism with identity components
};

/// Universal-property factoring through the kernel: given G : K → A and
/// φ : F∘G ⇒ 0, produces G′ : K → KerF and φ′ : e∘G′ ⇒ G. Throws
/// BOUNDARY when φ is not F∘G ⇒ 0.
FactoringResult kernel_factor(const KernelResult& k, const RModHom& f, const RModHom& g,
                              const RModMor& phi);
/// The unique ψ : G″ ⇒ G′ with φ′∘(e∗ψ) = φ″.
RModMor kernel_psi(const KernelResult& k, const FactoringResult& fr, const RModHom& g2,
                   const RModMor& phi2);

/// Factoring through the cokernel: given G : B → K and φ : G∘F ⇒ 0,
/// produces G′ : CokerF → K and φ′ : G′∘p ⇒ G.
FactoringResult cokernel_factor(const CokernelResult& c, const RModHom& f, const RModHom& g,
                                const RModMor& phi);
RModMor cokernel_psi(const CokernelResult& c, const FactoringResult& fr, const RModHom& g2,
                     const RModMor& phi2);

/// Pip objects are the loops a : 0 → 0 of A with F(a) = 1; σ has component
/// a at a.
struct PipResult {
  std::shared_ptr<const RModule> pip;
  RModMor sigma;  // 0 ⇒ 0 : PipF → A
};

PipResult pip(const RModHom& f);

/// Copip has one object "*"; morphisms are classes of objects of B under
/// B1 ~ B2 iff Hom(B1, F(A)+B2) is nonempty for some A.
struct CopipResult {
  std::shared_ptr<const RModule> copip;
  RModMor sigma;  // 0 ⇒ 0 : B → CopipF
  std::map<Id, Id> class_of;  // object of B -> class id
};

CopipResult copip(const RModHom& f);

/// Full sub-2-module on the objects killed by α (components the identity
/// of 0). Throws NOT_CLOSED when the selected objects fail closure.
struct RootResult {
  std::shared_ptr<const RModule> root;
  RModHom incl;
};

RootResult root(const RModMor& alpha);

/// Quotient of the codomain by f ~ r∘(f′+α_x)∘r⁻¹ with x ranging over the
/// objects of α's domain.
struct CorootResult {
  std::shared_ptr<const RModule> coroot;
  RModHom proj;
  std::map<Id, Id> class_of;  // morphism of B -> class id
};

CorootResult coroot(const RModMor& alpha);

struct FactorizationPl {
  std::shared_ptr<const RModule> im1;
  std::shared_ptr<const RModule> im2;
  RModHom e;      // Ê_F : A → Im¹_pl
  RModHom omega;  // Ω̂_F : Im¹_pl → Im²_pl
  RModHom m;      // M̂_F : Im²_pl → B
  bool e_surjective = false;
  bool m_full = false;
  bool m_faithful = false;
  std::optional<EquivalenceWitness> omega_witness;
};

struct Factorization {
  std::shared_ptr<const RModule> im1;
  std::shared_ptr<const RModule> im2;
  RModHom e;      // E_F
  RModHom omega;  // Ω_F
  RModHom m;      // M_F
  bool e_surjective = false;
  bool e_full = false;
  bool m_faithful = false;
  std::optional<EquivalenceWitness> omega_witness;
  std::map<Id, Id> im1_class_of;  // morphism of A -> Im¹ class id
};

std::shared_ptr<const RModule> im1_pl(const RModHom& f);
std::shared_ptr<const RModule> im2_pl(const RModHom& f);
std::shared_ptr<const RModule> im1(const RModHom& f);
std::shared_ptr<const RModule> im2(const RModHom& f);

FactorizationPl factorize_pl(const RModHom& f, const SearchBudget& budget);
Factorization factorize(const RModHom& f, const SearchBudget& budget);

/// The four 2-Puppe-exactness certificates: Coker(e_F) ≃ Im¹_pl F,
/// Root(copip F) ≃ Im²_pl F, Ker(p_F) ≃ Im² F, Coroot(pip F) ≃ Im¹ F,
/// each verified through the explicit comparison hom and an independent
/// equivalence search.
CheckReport puppe_check(const RModHom& f, const SearchBudget& budget);

}  // namespace picard
