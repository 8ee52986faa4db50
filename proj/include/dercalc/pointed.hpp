#pragma once

#include "dercalc/derimorph.hpp"

namespace dercalc {

// i_[1] : [1] -> corner (the horizontal arrow, a sieve) and
// i_corner : corner -> square (everything but the pushout vertex).
FinFunctor horizontal_sieve();
FinFunctor corner_inclusion();

struct ExtendByZeroResult {
  FinFunctor along;
  KanSide side = KanSide::Right;  // Right along sieves, Left along cosieves
  Diagram output;
  // witness that on-image values are what they were: the counit u*(u_* x) -> x
  // (or the unit x -> u*(u_! x)), componentwise invertible
  DiagramMap image_comparison;
  std::vector<ObjId> off_image;  // all of dimension zero, checked
};

// Extension by zero along a sieve (right Kan) or cosieve (left Kan); rejects
// anything else citing the sieve_kind witness. The essential-image
// characterisation is enforced on every call.
ExtendByZeroResult extend_by_zero(const FinFunctor& u, const Diagram& x);

struct CocartesianVerdict {
  bool value = false;
  DiagramMap comparison;  // counit i_! i* x -> x; the (1,1) component decides
};
CocartesianVerdict is_cocartesian(const Diagram& x);  // shape must be square

struct CofiberResult {
  Diagram input;         // on [1]
  Diagram intermediate;  // on corner, right extension by zero
  Diagram output;        // on square, left Kan extension
  DiagramMap cocartesian_witness;   // counit at the output, invertible
  DiagramMap restriction_witness;   // intermediate -> i* i_! intermediate, invertible
};
CofiberResult cofiber(const Diagram& f);
// dim of the cofibre vertex, for the rank-nullity oracle
std::size_t cofiber_dim(const CofiberResult& r);

struct ExceptionalAdjointResult {
  Diagram output;           // on [1]: (P -> b) with P = ker(a -> c)
  Matrix kernel_inclusion;  // P -> Y(a)
  Diagram ran_route;        // same computed through ran over the cospan shape
  DiagramMap route_iso;     // output -> ran_route, invertible cross-check
};
// The extra right adjoint of i_[1],* at its one displayed instance.
ExceptionalAdjointResult exceptional_right_adjoint_i1(const Diagram& y);  // y on corner

// The natural bijection Hom(i_* x, y) = Hom(x, i^! y), both directions.
DiagramMap i1_adjoint_transpose(const DiagramMap& phi, const Diagram& x, const Diagram& y);
DiagramMap i1_adjoint_untranspose(const DiagramMap& psi, const Diagram& x, const Diagram& y);

struct K0Report {
  bool cocartesian = false;
  bool zero_corner = false;
  bool mono = false;               // (0,0) -> (1,0) injective
  std::optional<bool> additivity;  // only asserted under the mono hypothesis
  std::size_t dim_a = 0, dim_b = 0, dim_c = 0;
  std::string note;
};
K0Report k0_additivity_check(const Diagram& x);  // x on square

// lan and ran extensions of the empty diagram into K agree: the level is
// pointed. The canonical map is the one out of the initial extension.
Report pointed_levels_check(const CatPtr& k);

// Phi pointed (sends the zero diagram to a zero-dimensional one, checked)
// commutes with extension by zero along the (co)sieve u.
struct ExtZeroCommuteVerdict {
  bool pointed = false;
  std::string pointed_witness;
  bool commutes = false;
  std::size_t samples = 0;
  std::string witness;
};
ExtZeroCommuteVerdict pointed_morphism_extzero_commute(const DerMorphism& m, const FinFunctor& u,
                                                       const Policy& pol);

}  // namespace dercalc
