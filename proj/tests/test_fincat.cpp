#include <doctest.h>

#include <functional>

#include "dercalc/exactness.hpp"

using namespace dercalc;

namespace {

// Brute-force functor enumeration for tiny T; the independent oracle for the
// comma universal property below.
std::vector<FinFunctor> all_functors(const CatPtr& t, const CatPtr& c) {
  std::vector<FinFunctor> out;
  if (t->num_objects() == 0) {
    out.push_back(make_functor(t, c, {}, {}));
    return out;
  }
  std::vector<ObjId> obj(t->num_objects(), 0);
  std::function<void(std::size_t)> pick_objs = [&](std::size_t i) {
    if (i == obj.size()) {
      std::vector<MorId> mor(t->num_morphisms(), 0);
      std::function<void(std::size_t)> pick_mors = [&](std::size_t m) {
        if (m == mor.size()) {
          FinFunctor u{t, c, obj, mor};
          if (validate_functor(u).ok()) out.push_back(u);
          return;
        }
        for (MorId cand : c->hom(obj[t->morphisms[m].src], obj[t->morphisms[m].tgt])) {
          mor[m] = cand;
          pick_mors(m + 1);
        }
      };
      pick_mors(0);
      return;
    }
    for (ObjId o = 0; o < c->num_objects(); ++o) {
      obj[i] = o;
      pick_objs(i + 1);
    }
  };
  pick_objs(0);
  return out;
}

std::vector<FinNatTrans> all_nats(const FinFunctor& u, const FinFunctor& v) {
  std::vector<FinNatTrans> out;
  const CatPtr& k = u.target;
  std::vector<MorId> comp(u.source->num_objects(), 0);
  std::function<void(std::size_t)> pick = [&](std::size_t i) {
    if (i == comp.size()) {
      FinNatTrans t{u, v, comp};
      if (validate_nat(t).ok()) out.push_back(t);
      return;
    }
    for (MorId cand : k->hom(u.obj[i], v.obj[i])) {
      comp[i] = cand;
      pick(i + 1);
    }
  };
  if (comp.empty()) {
    out.push_back(FinNatTrans{u, v, {}});
    return out;
  }
  pick(0);
  return out;
}

}  // namespace

TEST_CASE("standard categories have the expected tables") {
  CHECK(ordinal(1)->num_objects() == 2);
  CHECK(ordinal(1)->num_morphisms() == 3);
  CHECK(corner_category()->num_objects() == 3);
  CHECK(corner_category()->num_morphisms() == 5);
  CHECK(square_category()->num_morphisms() == 9);
  CHECK(validate_category(*ordinal(2)).ok());

  // product(e, C) is isomorphic to C: the projection is a bijective-on-objects
  // fully faithful functor
  Product p = product_category(terminal_category(), corner_category());
  CHECK(p.cat->num_objects() == 3);
  CHECK(p.cat->num_morphisms() == 5);
  FinFunctor pr2 = make_functor(p.cat, corner_category(), {0, 1, 2}, {0, 1, 2, 3, 4});
  CHECK(is_fully_faithful(pr2).value);
  CHECK(is_injective_on_objects(pr2).value);
}

TEST_CASE("validate_category reports broken tables") {
  CHECK(validate_category(*ordinal(2)).ok());

  // missing identity
  FinCategory c;
  c.name = "broken";
  c.objects = {"a"};
  c.morphisms = {{"f", 0, 0}};
  c.identity = {};
  auto rep = validate_category(c);
  CHECK(!rep.ok());

  // non-associative table on a one-object three-endo category
  FinCategory d;
  d.name = "nonassoc";
  d.objects = {"a"};
  d.morphisms = {{"id_a", 0, 0}, {"f", 0, 0}, {"g", 0, 0}};
  d.identity = {0};
  auto set = [&](MorId g, MorId f, MorId gf) { d.compose_table[FinCategory::key(g, f)] = gf; };
  for (MorId m = 0; m < 3; ++m) {
    set(0, m, m);
    set(m, 0, m);
  }
  set(1, 1, 2);
  set(1, 2, 1);
  set(2, 1, 1);
  set(2, 2, 2);  // (f f) f = g f = f but f (f f) = f g = f ... force a break
  d.compose_table[FinCategory::key(2, 2)] = 1;
  auto rep2 = validate_category(d);
  CHECK(!rep2.ok());
  bool found = false;
  for (auto& v : rep2.violations)
    if (v.find("associativity") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("poset constructor rejects bad relation tables") {
  CHECK_THROWS_WITH_AS(
      poset_category("p", {"a", "b"}, {{"a", "b"}, {"b", "a"}}),
      doctest::Contains("antisymmetric"), Error);
  CHECK_THROWS_WITH_AS(
      poset_category("p", {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}),
      doctest::Contains("transitive"), Error);
}

TEST_CASE("comma categories on classifiers") {
  CatPtr i1 = ordinal(1);
  FinFunctor c0 = classifier(i1, 0), c1 = classifier(i1, 1);

  // Hom(1, 0) is empty
  CHECK(comma_category(c1, c0).cat->num_objects() == 0);

  // (id/1) is isomorphic to [1] with final object (1, id)
  CommaResult r = comma_category(identity_functor(i1), c1);
  CHECK(r.cat->num_objects() == 2);
  CHECK(r.cat->num_morphisms() == 3);
  auto fin = extremal_object(r.cat, Extremal::Final);
  REQUIRE(fin);
  CHECK(r.objects[*fin].j1 == 1);

  // empty source gives an empty comma category
  FinFunctor from_empty = make_functor(empty_category(), i1, {}, {});
  CHECK(comma_category(from_empty, c1).cat->num_objects() == 0);
}

TEST_CASE("comma over a poset is the full subcategory below k") {
  // Lemma: for u into a poset, (u/k) embeds as { j : u(j) <= k }
  CatPtr sq = square_category();
  FinFunctor icorner = thin_functor(corner_category(), sq, {0, 1, 2});
  for (ObjId k = 0; k < sq->num_objects(); ++k) {
    SliceResult s = comma_over(icorner, k);
    std::size_t expect = 0;
    for (ObjId j = 0; j < 3; ++j)
      if (!sq->hom(icorner.obj[j], k).empty()) ++expect;
    CHECK(s.comma.cat->num_objects() == expect);
    CHECK(is_fully_faithful(s.pr).value);
    CHECK(is_injective_on_objects(s.pr).value);
  }
}

TEST_CASE("comma square satisfies the factorization property against e and [1]") {
  CatPtr i1 = ordinal(1);
  CatPtr corner = corner_category();
  FinFunctor u1 = thin_functor(i1, corner, {0, 1});  // horizontal arrow
  FinFunctor u2 = identity_functor(corner);
  CommaResult cm = comma_category(u1, u2);

  for (CatPtr t : {terminal_category(), ordinal(1)}) {
    for (const FinFunctor& f1 : all_functors(t, i1))
      for (const FinFunctor& f2 : all_functors(t, corner))
        for (const FinNatTrans& gamma : all_nats(compose(u1, f1), compose(u2, f2))) {
          std::size_t count = 0;
          for (const FinFunctor& h : all_functors(t, cm.cat)) {
            if (!(compose(cm.pr1, h) == f1) || !(compose(cm.pr2, h) == f2)) continue;
            if (whisker_right(cm.cell, h) == gamma) ++count;
          }
          CHECK(count == 1);  // unique factorization through the comma
        }
  }
}

TEST_CASE("sieve classification") {
  CatPtr i1 = ordinal(1);
  CatPtr corner = corner_category();
  FinFunctor horiz = thin_functor(i1, corner, {0, 1});
  CHECK(sieve_kind(horiz) == SieveKind::Sieve);

  CHECK(sieve_kind(classifier(i1, 1)) == SieveKind::Cosieve);

  FinFunctor iso_pt = classifier(corner, 1);  // the object (1,0) in the corner
  CHECK(sieve_kind(iso_pt) == SieveKind::Cosieve);

  FinFunctor all = identity_functor(i1);
  CHECK(sieve_kind(all) == SieveKind::Both);

  CHECK_THROWS_AS(sieve_kind(to_terminal(i1)), Error);  // not fully faithful

  // duality: sieve iff the opposite is a cosieve
  for (const FinFunctor& u : {horiz, classifier(i1, 1), classifier(i1, 0)}) {
    SieveKind k = sieve_kind(u);
    SieveKind ko = sieve_kind(opposite_functor(u));
    CHECK((k == SieveKind::Sieve) == (ko == SieveKind::Cosieve));
    CHECK((k == SieveKind::Cosieve) == (ko == SieveKind::Sieve));
  }
}

TEST_CASE("fully faithful checks") {
  CatPtr corner = corner_category();
  CatPtr sq = square_category();
  FinFunctor icorner = thin_functor(corner, sq, {0, 1, 2});
  CHECK(is_fully_faithful(icorner).value);
  CHECK(is_fully_faithful(identity_functor(sq)).value);
  auto collapse = is_fully_faithful(to_terminal(ordinal(1)));
  CHECK(!collapse.value);
  CHECK(!collapse.witness.empty());
}

TEST_CASE("adjunction checks") {
  CatPtr i1 = ordinal(1);
  AdjunctionData adj = final_object_adjunction(i1);  // pi_[1] -| classifier(1)
  CHECK(check_adjunction(adj.l, adj.r, adj.unit, adj.counit).value);

  CatPtr e = terminal_category();
  FinFunctor ide = identity_functor(e);
  CHECK(check_adjunction(ide, ide, identity_nat(ide), identity_nat(ide)).value);

  // break the unit with a non-identity endomorphism
  CatPtr mono = [&] {
    FinCategory c;
    c.name = "mono";
    c.objects = {"a"};
    c.morphisms = {{"id_a", 0, 0}, {"s", 0, 0}};
    c.identity = {0};
    auto set = [&](MorId g, MorId f, MorId gf) { c.compose_table[FinCategory::key(g, f)] = gf; };
    set(0, 0, 0);
    set(0, 1, 1);
    set(1, 0, 1);
    set(1, 1, 0);  // s is an involution
    return make_category(std::move(c));
  }();
  FinFunctor idm = identity_functor(mono);
  FinNatTrans bad_unit{idm, idm, {1}};
  CHECK(validate_nat(bad_unit).ok());
  auto verdict = check_adjunction(idm, idm, bad_unit, identity_nat(idm));
  CHECK(!verdict.value);
  CHECK(verdict.witness.find("triangle") != std::string::npos);
}

TEST_CASE("extremal objects") {
  CHECK(extremal_object(square_category(), Extremal::Final) == ObjId{3});   // (1,1)
  CHECK(extremal_object(corner_category(), Extremal::Initial) == ObjId{0});  // (0,0)
  CHECK(!extremal_object(discrete_category(2), Extremal::Final));
  CHECK(!extremal_object(discrete_category(2), Extremal::Initial));
  CHECK(!extremal_object(corner_category(), Extremal::Final));
}

TEST_CASE("grothendieck opfibrations") {
  CatPtr i1 = ordinal(1);
  Product p = product_category(i1, corner_category());
  FinFunctor pr1 = [&] {
    std::vector<ObjId> obj(p.cat->num_objects());
    std::vector<MorId> mor(p.cat->num_morphisms());
    for (ObjId a = 0; a < 2; ++a)
      for (ObjId b = 0; b < 3; ++b) obj[p.obj[a][b]] = a;
    for (const auto& [k, m] : p.mor) mor[m] = static_cast<MorId>(k >> 32);
    return make_functor(p.cat, i1, std::move(obj), std::move(mor));
  }();
  CHECK(is_grothendieck_opfibration(pr1).value);
  CHECK(is_grothendieck_opfibration(identity_functor(i1)).value);

  // classifier of 0 cannot lift 0 -> 1
  auto bad = is_grothendieck_opfibration(classifier(i1, 0));
  CHECK(!bad.value);
  CHECK(bad.witness.find("0->1") != std::string::npos);

  // the classifier of 1 only ever needs the identity lift, so it qualifies
  // (its fibre over 0 is empty, which is fine for opfibrations)
  CHECK(is_grothendieck_opfibration(classifier(i1, 1)).value);
  // and the corresponding strict pullback square is exact
  Policy pol;
  pol.samples = 4;
  OrientedSquare s = build_strict_pullback(classifier(i1, 1), identity_functor(i1));
  CHECK(check_exact(s, KanSide::Left, pol).pass);
}

TEST_CASE("pasting with identity squares and associativity") {
  CatPtr i1 = ordinal(1);
  FinFunctor u = classifier(i1, 0);
  SliceResult s0 = comma_over(u, 1);
  OrientedSquare s = make_square("der4", s0.pr, s0.pi, classifier(i1, 1), u, s0.comma.cell,
                                 Orientation::DownLeft);

  // identity square on the right edge q
  OrientedSquare idsq = commuting_square("id", identity_functor(u.source), u, identity_functor(i1),
                                         u, Orientation::DownLeft);
  OrientedSquare glued = paste(s, idsq, PasteDirection::Horizontal);
  CHECK(glued.top == s.top);
  CHECK(glued.bottom == s.bottom);
  CHECK(glued.cell.component == s.cell.component);

  // vertical-then-horizontal equals horizontal-then-vertical on a 2x2 grid of
  // identity squares over [1]
  FinFunctor idf = identity_functor(i1);
  OrientedSquare cellsq = commuting_square("c", idf, idf, idf, idf, Orientation::DownLeft);
  OrientedSquare hv = paste(paste(cellsq, cellsq, PasteDirection::Horizontal),
                            paste(cellsq, cellsq, PasteDirection::Horizontal),
                            PasteDirection::Vertical);
  OrientedSquare vh = paste(paste(cellsq, cellsq, PasteDirection::Vertical),
                            paste(cellsq, cellsq, PasteDirection::Vertical),
                            PasteDirection::Horizontal);
  CHECK(hv.cell.component == vh.cell.component);

  // associativity of horizontal pasting on a strip of three
  OrientedSquare a12 = paste(paste(cellsq, cellsq, PasteDirection::Horizontal), cellsq,
                             PasteDirection::Horizontal);
  OrientedSquare a23 = paste(cellsq, paste(cellsq, cellsq, PasteDirection::Horizontal),
                             PasteDirection::Horizontal);
  CHECK(a12.cell.component == a23.cell.component);
  CHECK(a12.top == a23.top);
}

TEST_CASE("size guardrails reject oversized categories") {
  CHECK_THROWS_AS(discrete_category(65), Error);
  CHECK_NOTHROW(discrete_category(64));
}

TEST_CASE("opposite and cocone constructions") {
  CatPtr c = corner_category();
  CHECK(*opposite_category(opposite_category(c)) == *c);
  CHECK(extremal_object(opposite_category(c), Extremal::Final) == ObjId{0});

  // attaching a final object to the corner gives a square-shaped category
  CatPtr cc = cocone_category(c);
  CHECK(cc->num_objects() == 4);
  CHECK(cc->num_morphisms() == 9);
  CHECK(extremal_object(cc, Extremal::Final) == ObjId{3});
  CHECK(validate_category(*cc).ok());
  FinFunctor iso = thin_functor(square_category(), cc, {0, 1, 2, 3});
  CHECK(is_fully_faithful(iso).value);
}
