#pragma once

#include "dercalc/repder.hpp"

namespace dercalc {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<CheckLine> lines;
  bool ok() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }
  void add(std::string name, bool pass, std::string detail = "") {
    lines.push_back({std::move(name), pass, std::move(detail)});
  }
  void merge(const std::string& prefix, const Report& other) {
    for (const auto& l : other.lines) lines.push_back({prefix + l.name, l.pass, l.detail});
  }
};

// Verdicts are sampled falsification checks, not proofs: a failure disproves
// exactness, an all-pass is accepted as evidence.
struct ExactnessVerdict {
  std::string square;
  KanSide side = KanSide::Left;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  bool pass = false;
  std::optional<Diagram> witness;   // sample whose mate has a singular component
  std::string witness_object;
  std::string note = "falsification check, not a proof";
};

ExactnessVerdict check_exact(const OrientedSquare& s, KanSide side, const Policy& pol);

// -- the named exact-square families -------------------------------------------

// (u/k) over the classifier of k; down-left.
OrientedSquare build_comma_der4l(const FinFunctor& u, ObjId k);
// (k/u); up-right.
OrientedSquare build_comma_der4r(const FinFunctor& u, ObjId k);
// (u1/u2) over the cospan; down-left.
OrientedSquare build_comma_cospan(const FinFunctor& u1, const FinFunctor& u2);
// Projection square of a left adjoint l (up-right identity cell) or a right
// adjoint r (down-left identity cell); the adjunction data is validated.
OrientedSquare build_adjoint_left(const AdjunctionData& adj);
OrientedSquare build_adjoint_right(const AdjunctionData& adj);
// The identity-cell square with id_J on top/left and u on bottom/right;
// requires u fully faithful.
OrientedSquare build_ff_unit(const FinFunctor& u);
// Strict pullback of w along the Grothendieck opfibration q (validated).
OrientedSquare build_strict_pullback(const FinFunctor& q, const FinFunctor& w);

// Lemma check: a down-left square is exact iff all its comma pastings are.
// horizontal_over_c pastes (left/c) comma squares on the left and compares
// left-mate verdicts; vertical_under_b pastes (b/top) squares on top and
// compares right-mate verdicts.
enum class CancellationMode { HorizontalOverC, VerticalUnderB };
Report pasting_cancellation_check(const OrientedSquare& s, CancellationMode mode,
                                  const Policy& pol);

// For fully faithful u: the unit x -> u* u_! x and the counit u* u_* x -> x
// are invertible on samples.
Report ff_kan_fully_faithful_check(const FinFunctor& u, const Policy& pol);

// The adjunction between (pr2/j2) and (u1/u2(j2)) used to prove that comma
// squares are exact; returned validated. Regression fixture for the comma
// machinery.
AdjunctionData comma_slice_adjunction(const FinFunctor& u1, const FinFunctor& u2, ObjId j2);

// Fixed + seeded sample diagrams on a shape, shared by the checkers.
std::vector<Diagram> sample_diagrams(const CatPtr& shape, const Policy& pol);

}  // namespace dercalc
