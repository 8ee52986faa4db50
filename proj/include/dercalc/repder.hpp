#pragma once

#include <optional>

#include "dercalc/diagram.hpp"
#include "dercalc/sampling.hpp"

namespace dercalc {

// -- restriction ---------------------------------------------------------------

// (u*x)(j) = x(u(j)); strictly 2-functorial: (v∘u)* equals u* after v* as
// table equality, which the mate composites below silently rely on.
Diagram pullback(const FinFunctor& u, const Diagram& x);
DiagramMap pullback_map(const FinFunctor& u, const DiagramMap& f);
// For a : u ⇒ v, the map u*x -> v*x with component x(a_j) at j.
DiagramMap pullback_cell(const FinNatTrans& a, const Diagram& x);

// -- pointwise Kan extensions -----------------------------------------------------

enum class KanSide { Left, Right };
std::string to_string(KanSide s);

// Kan extension along u, computed pointwise over the comma categories
// (u/k) (left) or (k/u) (right). The per-point comma data is built once at
// construction and shared by every apply.
class KanExtension {
 public:
  KanExtension(FinFunctor u, KanSide side);

  const FinFunctor& along() const { return u_; }
  KanSide side() const { return side_; }

  // u_! x or u_* x, with the action on morphisms of the codomain induced by
  // solving against the (co)cone legs (unique because the legs jointly
  // surject / inject).
  Diagram apply(const Diagram& x) const;
  DiagramMap apply_map(const DiagramMap& f) const;

  // Left: unit x -> u* u_! x and counit u_! u* y -> y.
  // Right: unit y -> u_* u* y and counit u* u_* x -> x.
  DiagramMap unit(const Diagram& x) const;
  DiagramMap counit(const Diagram& y) const;

  const CommaResult& comma_at(ObjId k) const { return commas_[k]; }
  // Left: legs x(pr c) -> (u_! x)(k); right: (u_* x)(k) -> x(pr c).
  std::vector<Matrix> legs(const Diagram& x, ObjId k) const;

 private:
  struct Applied {
    std::vector<std::size_t> dim;
    std::vector<Matrix> structure;  // left: cokernel projection; right: kernel inclusion
  };
  Applied pointwise(const Diagram& x) const;
  Diagram assemble(const Diagram& x, const Applied& ap) const;
  std::vector<Matrix> legs_of(const Diagram& x, const Applied& ap, ObjId k) const;

  FinFunctor u_;
  KanSide side_;
  std::vector<CommaResult> commas_;  // per codomain object
};

// Full result record: output plus re-checkable witnesses. The triangle
// identities of the recorded adjoint data are verified on build.
struct KanResult {
  FinFunctor along;
  KanSide side;
  Diagram input;
  Diagram output;
  // Left: the unit x -> u* u_! x. Right: the counit u* u_* x -> x.
  DiagramMap comparison;

  struct PointWitness {
    ObjId k = 0;
    std::vector<CommaObject> comma_objects;
    std::vector<Matrix> legs;
    std::size_t dim = 0;
  };
  std::vector<PointWitness> points;
};

KanResult lan(const FinFunctor& u, const Diagram& x);
KanResult ran(const FinFunctor& u, const Diagram& x);

// -- mates -----------------------------------------------------------------------

// Which level the sample diagram feeding a mate lives on.
CatPtr mate_domain_shape(const OrientedSquare& s, KanSide side);

// The mate of the square's cell, assembled by the whisker/unit/counit
// pasting. For a down-left square (cell q∘v ⇒ w∘p):
//   left  (x on B): p_!(v* x) -> w*(q_! x)
//   right (x on C): q*(w_* x) -> v_*(p* x)
// For an up-right square (cell w∘p ⇒ q∘v):
//   right (x on B): w*(q_* x) -> p_*(v* x)
//   left  (x on C): v_!(p* x) -> q*(w_! x)
// The two Kan extensions are built once; component() is then cheap per
// sample.
class MateOperator {
 public:
  MateOperator(OrientedSquare s, KanSide side);
  DiagramMap component(const Diagram& x) const;
  const OrientedSquare& square() const { return s_; }
  KanSide side() const { return side_; }

 private:
  OrientedSquare s_;
  KanSide side_;
  std::optional<KanExtension> outer_, inner_;
};

DiagramMap mate_component(const OrientedSquare& s, KanSide side, const Diagram& x);

// -- shifted views ------------------------------------------------------------------

// The represented derivator or a shift of it by I; levels are K or I x K and
// every operation is the unshifted one along id_I x u.
class DerivatorView {
 public:
  DerivatorView() = default;                       // unshifted
  explicit DerivatorView(CatPtr shift) : shift_(std::move(shift)) {}

  bool shifted() const { return shift_ != nullptr; }
  const CatPtr& shift_shape() const { return shift_; }

  CatPtr level(const CatPtr& k) const;
  FinFunctor lift(const FinFunctor& u) const;
  FinNatTrans lift(const FinNatTrans& a) const;

 private:
  CatPtr shift_;
};

}  // namespace dercalc
