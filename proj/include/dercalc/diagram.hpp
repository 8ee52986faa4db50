#pragma once

#include <string>
#include <vector>

#include "dercalc/fincat.hpp"
#include "dercalc/linalg.hpp"

namespace dercalc {

// A coherent object of the represented derivator at a level: one rational
// vector space per object of the shape, one matrix per morphism.
struct Diagram {
  CatPtr shape;
  std::vector<std::size_t> dim;  // per object
  std::vector<Matrix> mat;       // per morphism, dim(tgt) x dim(src)

  const Matrix& at(MorId m) const { return mat[m]; }
  bool operator==(const Diagram& o) const {
    return same_cat(shape, o.shape) && dim == o.dim && mat == o.mat;
  }
};

ValidationReport validate_diagram(const Diagram& x);
Diagram make_diagram(CatPtr shape, std::vector<std::size_t> dim, std::vector<Matrix> mat);

// dim d at every object, every matrix the identity.
Diagram constant_diagram(const CatPtr& shape, std::size_t d);
Diagram zero_diagram(const CatPtr& shape);

struct DiagramMap {
  Diagram source, target;          // same shape
  std::vector<Matrix> component;   // per object

  bool operator==(const DiagramMap& o) const {
    return source == o.source && target == o.target && component == o.component;
  }
};

ValidationReport validate_diagram_map(const DiagramMap& f);
DiagramMap make_diagram_map(Diagram source, Diagram target, std::vector<Matrix> component);

DiagramMap identity_map(const Diagram& x);
DiagramMap zero_map(const Diagram& source, const Diagram& target);
DiagramMap compose(const DiagramMap& g, const DiagramMap& f);

bool is_identity_map(const DiagramMap& f);

// Explicit inverse when every component is invertible; nullopt (with the
// offending object recorded) otherwise. Dimension counts never short-circuit
// this: the inverse map is constructed and validated.
struct IsoResult {
  bool is_iso = false;
  std::string witness;          // failing object when not an iso
  std::optional<DiagramMap> inverse;
};
IsoResult invert(const DiagramMap& f);

// Basis of the space of natural transformations x -> y, as DiagramMaps.
// Independent of the Kan-extension machinery; doubles as a (co)limit oracle
// through dim Nat(x, const) and dim Nat(const, x).
std::vector<DiagramMap> hom_space(const Diagram& x, const Diagram& y);

}  // namespace dercalc
