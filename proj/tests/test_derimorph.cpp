#include <doctest.h>

#include "dercalc/derimorph.hpp"
#include "dercalc/pointed.hpp"

using namespace dercalc;

namespace {
Policy quick() {
  Policy pol;
  pol.samples = 4;
  return pol;
}
}  // namespace

TEST_CASE("morphism kinds act as expected") {
  CatPtr e = terminal_category();
  CatPtr i1 = ordinal(1);
  Policy pol = quick();
  SplitMix64 rng(3);

  // tensoring with Q^1 changes nothing
  Diagram x = random_diagram(i1, rng, pol);
  CHECK(apply(tensor_with(1), i1, x) == x);

  // tensoring Q with Q^2 over the point gives Q^2
  Diagram q = constant_diagram(e, 1);
  CHECK(apply(tensor_with(2), e, q).dim == std::vector<std::size_t>{2});

  // direct sum with a constant adds the constant everywhere
  Diagram ds = apply(direct_sum_with_constant(2), i1, x);
  CHECK(ds.dim[0] == x.dim[0] + 2);
  CHECK(ds.dim[1] == x.dim[1] + 2);

  // pullback along pi_[1] lands in constant diagrams: apply at level e takes
  // a diagram on e x e to one on [1] x e with identity transition matrices
  DerMorphism res = pullback_along(to_terminal(i1));
  Product dom_level = product_category(e, e);
  Diagram pt;
  pt.shape = dom_level.cat;
  pt.dim = {1};
  pt.mat = {Matrix::identity(1)};
  Diagram constant = apply(res, e, pt);
  CHECK(constant.dim == std::vector<std::size_t>{1, 1});
  for (const Matrix& m : constant.mat) CHECK(m.is_identity());
}

TEST_CASE("structure isomorphisms are coherent") {
  Policy pol = quick();
  std::vector<FinFunctor> functors = {to_terminal(ordinal(1)), classifier(ordinal(1), 1)};
  std::vector<FinNatTrans> cells = {make_nat(classifier(ordinal(1), 0), classifier(ordinal(1), 1),
                                             {*ordinal(1)->morphism_by_name("0->1")})};
  for (const DerMorphism& m :
       {pullback_along(horizontal_sieve()), lan_along(horizontal_sieve()),
        ran_along(horizontal_sieve()), tensor_with(2), direct_sum_with_constant(1)}) {
    Report rep = validate_morphism(m, functors, cells, pol);
    INFO(m.name());
    CHECK(rep.ok());
  }
}

TEST_CASE("strict kinds have identity structure maps") {
  Policy pol = quick();
  SplitMix64 rng(5);
  FinFunctor u = to_terminal(ordinal(1));
  DerMorphism res = pullback_along(horizontal_sieve());
  Diagram x = random_diagram(res.domain().level(u.target), rng, pol);
  CHECK(is_identity_map(structure_iso(res, u, x)));
  DerMorphism ten = tensor_with(3);
  Diagram y = random_diagram(terminal_category(), rng, pol);
  CHECK(is_identity_map(structure_iso(ten, u, y)));
}

TEST_CASE("cocontinuity verdicts") {
  Policy pol = quick();

  CocontinuityVerdict ext =
      is_cocontinuous(ran_along(horizontal_sieve()), to_terminal(ordinal(1)), pol);
  CHECK(ext.along_u);
  CHECK(ext.along_projections);

  CocontinuityVerdict ten = is_cocontinuous(tensor_with(2), to_terminal(corner_category()), pol);
  CHECK(ten.along_u);
  CHECK(ten.along_projections);

  CocontinuityVerdict ds =
      is_cocontinuous(direct_sum_with_constant(1), to_terminal(discrete_category(2)), pol);
  CHECK(!ds.along_u);
  CHECK(!ds.witness.empty());

  // pasting functoriality: cocontinuous along two composable functors implies
  // the comparison along the composite is invertible on the same samples
  FinFunctor v = classifier(ordinal(1), 1);   // e -> [1]
  FinFunctor u = to_terminal(ordinal(1));     // [1] -> e
  DerMorphism m = tensor_with(2);
  SplitMix64 rng(7);
  for (int it = 0; it < 3; ++it) {
    Diagram x = random_diagram(terminal_category(), rng, pol);
    CHECK(invert(cocontinuity_comparison(m, v, x)).is_iso);
    Diagram y = random_diagram(ordinal(1), rng, pol);
    CHECK(invert(cocontinuity_comparison(m, u, y)).is_iso);
    CHECK(invert(cocontinuity_comparison(m, compose(u, v), x)).is_iso);
  }
}

TEST_CASE("morphism adjunction triangles") {
  Policy pol = quick();
  FinFunctor u = horizontal_sieve();
  std::vector<CatPtr> levels = {terminal_category(), ordinal(1)};

  Report good = check_morphism_adjunction(lan_along(u), pullback_along(u),
                                          lan_unit_modification(u), lan_counit_modification(u),
                                          levels, pol);
  CHECK(good.ok());

  FinFunctor idf = identity_functor(ordinal(1));
  Report ident = check_morphism_adjunction(
      pullback_along(idf), pullback_along(idf), identity_modification(pullback_along(idf)),
      identity_modification(pullback_along(idf)), levels, pol);
  CHECK(ident.ok());

  Report broken = check_morphism_adjunction(lan_along(u), pullback_along(u),
                                            zero_unit_modification(u),
                                            lan_counit_modification(u), levels, pol);
  CHECK(!broken.ok());

  CHECK_THROWS_AS(check_morphism_adjunction(tensor_with(2), tensor_with(2),
                                            identity_modification(tensor_with(2)),
                                            identity_modification(tensor_with(2)), levels, pol),
                  Error);
}

TEST_CASE("modification coherence on corpus cells") {
  Policy pol = quick();
  SplitMix64 rng(11);
  FinNatTrans cell = make_nat(classifier(ordinal(1), 0), classifier(ordinal(1), 1),
                              {*ordinal(1)->morphism_by_name("0->1")});
  for (const DerMorphism& m : {tensor_with(2), pullback_along(horizontal_sieve())}) {
    Diagram x = random_diagram(m.domain().level(ordinal(1)), rng, pol);
    CHECK(modification_coherent(identity_modification(m), m, m, cell, x));
    CHECK(modification_coherent(zero_modification(m), m, m, cell, x));
  }
}

TEST_CASE("extension by zero commutes with pointed morphisms") {
  Policy pol = quick();
  ExtZeroCommuteVerdict good =
      pointed_morphism_extzero_commute(tensor_with(2), horizontal_sieve(), pol);
  CHECK(good.pointed);
  CHECK(good.commutes);

  ExtZeroCommuteVerdict trivial = pointed_morphism_extzero_commute(
      pullback_along(identity_functor(ordinal(1))), horizontal_sieve(), pol);
  CHECK(trivial.pointed);
  CHECK(trivial.commutes);

  ExtZeroCommuteVerdict rejected =
      pointed_morphism_extzero_commute(direct_sum_with_constant(1), horizontal_sieve(), pol);
  CHECK(!rejected.pointed);
  CHECK(!rejected.pointed_witness.empty());
}
