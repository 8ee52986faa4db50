#pragma once

#include "dercalc/exactness.hpp"

namespace dercalc {

// Morphisms of prederivators form a closed kind-tagged family: each kind has
// a canonical family of structure isomorphisms, computed rather than supplied.
enum class MorphKind {
  PullbackAlong,          // u* : D^K -> D^J, strict
  LanAlong,               // u_! : D^J -> D^K
  RanAlong,               // u_* : D^J -> D^K (extension by zero along sieves)
  TensorWith,             // - (x) Q^d : D -> D, strict
  DirectSumWithConstant,  // - (+) const Q^d : D -> D, strict, not pointed
};
std::string to_string(MorphKind k);

struct DerMorphism {
  MorphKind kind;
  std::optional<FinFunctor> along;  // the three along-kinds
  std::size_t space_dim = 0;        // tensor / direct sum

  DerivatorView domain() const;
  DerivatorView codomain() const;
  std::string name() const;
};

DerMorphism pullback_along(FinFunctor u);
DerMorphism lan_along(FinFunctor u);
DerMorphism ran_along(FinFunctor u);
DerMorphism tensor_with(std::size_t dim);
DerMorphism direct_sum_with_constant(std::size_t dim);

bool is_strict(const DerMorphism& m);

// Phi_level on objects and maps. For the along-kinds the input lives on
// domain().level(level) and the output on codomain().level(level).
Diagram apply(const DerMorphism& m, const CatPtr& level, const Diagram& x);
DiagramMap apply_map(const DerMorphism& m, const CatPtr& level, const DiagramMap& f);

// gamma_v at x: v*(Phi_B x) -> Phi_A(v* x) for v : A -> B, invertible. For
// strict kinds this is literally the identity; for the Kan kinds it is the
// (inverse of the) mate of the identity cell of the product square.
DiagramMap structure_iso(const DerMorphism& m, const FinFunctor& v, const Diagram& x);

// gamma coherence on a corpus of composable functors and 2-cells:
// gamma_id = id, pasting of gamma_u and gamma_v equals gamma_{uv}, and
// compatibility with 2-cells.
Report validate_morphism(const DerMorphism& m, const std::vector<FinFunctor>& functors,
                         const std::vector<FinNatTrans>& cells, const Policy& pol);

struct CocontinuityVerdict {
  bool applicable = true;
  bool along_u = false;            // u_! Phi -> Phi u_! invertible on samples
  bool along_projections = false;  // the same for pi of source and target
  std::size_t samples = 0;
  std::string witness;
};
CocontinuityVerdict is_cocontinuous(const DerMorphism& m, const FinFunctor& u, const Policy& pol);
// The comparison u_!(Phi x) -> Phi(u_! x) itself, for x on domain level J.
DiagramMap cocontinuity_comparison(const DerMorphism& m, const FinFunctor& u, const Diagram& x);
// The dual comparison Phi(u_* x) -> u_*(Phi x).
DiagramMap continuity_comparison(const DerMorphism& m, const FinFunctor& u, const Diagram& x);

// -- modifications -------------------------------------------------------------

enum class ModKind {
  IdentityOf,    // id : Phi => Phi
  ZeroOf,        // 0 : Phi => Phi
  LanUnit,       // id => u* u_!
  LanCounit,     // u_! u* => id
  ZeroUnitLike   // zero map with the LanUnit profile (negative control)
};

struct Modification {
  ModKind kind;
  std::optional<FinFunctor> along;      // LanUnit / LanCounit / ZeroUnitLike
  std::optional<DerMorphism> of;        // IdentityOf / ZeroOf
};

Modification identity_modification(DerMorphism m);
Modification zero_modification(DerMorphism m);
Modification lan_unit_modification(FinFunctor u);
Modification lan_counit_modification(FinFunctor u);
Modification zero_unit_modification(FinFunctor u);

// The component mu_level at x.
DiagramMap modification_at(const Modification& mu, const CatPtr& level, const Diagram& x);

// The modification axiom against a 2-cell a : u => v, for mu : phi => psi
// between parallel endo-profile morphisms:
//   mu_{v* x} . phi(a* x) . gamma^phi_u = gamma^psi_v . (a* at psi... x) . u*(mu_x)
// evaluated at x on the level of the cell's codomain.
bool modification_coherent(const Modification& mu, const DerMorphism& phi, const DerMorphism& psi,
                           const FinNatTrans& a, const Diagram& x);

// Triangle identities of (phi -| psi) witnessed by eta, eps, verified
// levelwise on the given levels. Only the (lan_along u, pullback_along u)
// pair and the identity pair assemble here.
Report check_morphism_adjunction(const DerMorphism& phi, const DerMorphism& psi,
                                 const Modification& eta, const Modification& eps,
                                 const std::vector<CatPtr>& levels, const Policy& pol);

}  // namespace dercalc
