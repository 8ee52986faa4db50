#include <doctest.h>

#include "dercalc/repder.hpp"

using namespace dercalc;

namespace {
Matrix mat(std::size_t r, std::size_t c, std::vector<long> v) {
  std::vector<Rational> e;
  for (long x : v) e.push_back(rat(x));
  return Matrix(r, c, std::move(e));
}
}  // namespace

TEST_CASE("diagram validation catches broken functoriality") {
  CatPtr i2 = ordinal(2);
  Diagram x;
  x.shape = i2;
  x.dim = {1, 1, 1};
  x.mat.assign(i2->num_morphisms(), Matrix::identity(1));
  CHECK(validate_diagram(x).ok());

  MorId m02 = *i2->morphism_by_name("0->2");
  x.mat[m02] = mat(1, 1, {2});
  auto rep = validate_diagram(x);
  CHECK(!rep.ok());
  CHECK(rep.joined().find("functoriality") != std::string::npos);

  x.mat[m02] = Matrix::identity(1);
  x.mat[i2->identity[0]] = mat(1, 1, {3});
  CHECK(!validate_diagram(x).ok());
}

TEST_CASE("diagram map naturality and inversion") {
  CatPtr i1 = ordinal(1);
  MorId arrow = *i1->morphism_by_name("0->1");
  Diagram x;
  x.shape = i1;
  x.dim = {2, 1};
  x.mat.resize(3);
  x.mat[i1->identity[0]] = Matrix::identity(2);
  x.mat[i1->identity[1]] = Matrix::identity(1);
  x.mat[arrow] = mat(1, 2, {1, 0});
  REQUIRE(validate_diagram(x).ok());

  DiagramMap idm = identity_map(x);
  CHECK(is_identity_map(idm));
  CHECK(invert(idm).is_iso);

  // zero endomap of a nonzero diagram: not an iso, witness names an object
  auto bad = invert(zero_map(x, x));
  CHECK(!bad.is_iso);
  CHECK(!bad.witness.empty());

  // componentwise-invertible implies an explicit natural inverse
  DiagramMap f = idm;
  f.component[0] = mat(2, 2, {1, 0, 0, 2});
  REQUIRE(validate_diagram_map(f).ok());
  auto iso2 = invert(f);
  REQUIRE(iso2.is_iso);
  CHECK(is_identity_map(compose(*iso2.inverse, f)));
  CHECK(is_identity_map(compose(f, *iso2.inverse)));
  CHECK(validate_diagram_map(*iso2.inverse).ok());
}

TEST_CASE("hom_space counts natural transformations") {
  CatPtr i1 = ordinal(1);
  MorId arrow = *i1->morphism_by_name("0->1");

  // (Q -id-> Q): the two components must agree, one dimension
  Diagram x = constant_diagram(i1, 1);
  CHECK(hom_space(x, x).size() == 1);

  // (Q -0-> Q): components are independent, two dimensions
  Diagram y = x;
  y.mat[arrow] = Matrix::zero(1, 1);
  CHECK(hom_space(y, y).size() == 2);

  for (const DiagramMap& b : hom_space(y, y)) CHECK(validate_diagram_map(b).ok());
}

TEST_CASE("random diagrams are functorial on every corpus shape") {
  Policy pol;
  SplitMix64 rng(7);
  std::vector<CatPtr> shapes = {
      empty_category(),
      terminal_category(),
      ordinal(1),
      ordinal(2),
      corner_category(),
      square_category(),
      discrete_category(2),
      poset_category("zig", {"p0", "p1", "p2", "p3"}, {{"p0", "p2"}, {"p1", "p2"}, {"p1", "p3"}}),
      product_category(ordinal(1), corner_category()).cat};
  for (const CatPtr& shape : shapes)
    for (int it = 0; it < 8; ++it) {
      Diagram x = random_diagram(shape, rng, pol);
      CHECK(validate_diagram(x).ok());
      for (std::size_t d : x.dim) CHECK(d <= pol.max_dim);
    }
}

TEST_CASE("random diagram maps are natural") {
  Policy pol;
  SplitMix64 rng(9);
  CatPtr sq = square_category();
  for (int it = 0; it < 5; ++it) {
    Diagram x = random_diagram(sq, rng, pol);
    Diagram y = random_diagram(sq, rng, pol);
    DiagramMap f = random_diagram_map(x, y, rng, pol);
    CHECK(validate_diagram_map(f).ok());
  }
}
