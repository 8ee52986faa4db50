#include "dercalc/exactness.hpp"

namespace dercalc {

std::vector<Diagram> sample_diagrams(const CatPtr& shape, const Policy& pol) {
  std::vector<Diagram> out;
  out.push_back(zero_diagram(shape));
  out.push_back(constant_diagram(shape, 1));
  SplitMix64 rng(pol.seed);
  for (std::size_t i = 0; i < pol.samples; ++i) out.push_back(random_diagram(shape, rng, pol));
  return out;
}

ExactnessVerdict check_exact(const OrientedSquare& s, KanSide side, const Policy& pol) {
  ExactnessVerdict v;
  v.square = s.name;
  v.side = side;
  v.seed = pol.seed;
  CatPtr shape = mate_domain_shape(s, side);
  std::vector<Diagram> samples = sample_diagrams(shape, pol);
  v.samples = samples.size();
  MateOperator op(s, side);

  // per-sample evaluations are independent; results are aggregated in sample
  // order so the verdict is schedule-independent
  std::vector<IsoResult> results(samples.size());
  std::vector<std::string> faults(samples.size());
  const long n = static_cast<long>(samples.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      results[static_cast<std::size_t>(i)] =
          invert(op.component(samples[static_cast<std::size_t>(i)]));
    } catch (const std::exception& e) {
      faults[static_cast<std::size_t>(i)] = e.what();
    }
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!faults[i].empty()) throw Error("check_exact: " + faults[i]);
    if (!results[i].is_iso) {
      v.pass = false;
      v.witness = samples[i];
      v.witness_object = results[i].witness;
      return v;
    }
  }
  v.pass = true;
  return v;
}

OrientedSquare build_comma_der4l(const FinFunctor& u, ObjId k) {
  SliceResult s = comma_over(u, k);
  return make_square("der4l(" + u.source->name + "->" + u.target->name + "," +
                         u.target->objects[k] + ")",
                     s.pr, s.pi, classifier(u.target, k), u, s.comma.cell, Orientation::DownLeft);
}

OrientedSquare build_comma_der4r(const FinFunctor& u, ObjId k) {
  SliceResult s = comma_under(k, u);
  // the comma cell runs k∘pi ⇒ u∘pr, the up-right orientation for the frame
  // (top pr, left pi, bottom k, right u)
  return make_square("der4r(" + u.source->name + "->" + u.target->name + "," +
                         u.target->objects[k] + ")",
                     s.pr, s.pi, classifier(u.target, k), u, s.comma.cell, Orientation::UpRight);
}

OrientedSquare build_comma_cospan(const FinFunctor& u1, const FinFunctor& u2) {
  CommaResult c = comma_category(u1, u2);
  return make_square("comma(" + u1.source->name + "/" + u2.source->name + ")", c.pr1, c.pr2, u2,
                     u1, c.cell, Orientation::DownLeft);
}

OrientedSquare build_adjoint_left(const AdjunctionData& adj) {
  auto chk = check_adjunction(adj.l, adj.r, adj.unit, adj.counit);
  if (!chk) throw Error("build_adjoint_left: invalid adjunction data: " + chk.witness);
  return commuting_square("adjoint_left(" + adj.l.source->name + ")", adj.l,
                          to_terminal(adj.l.source), identity_functor(terminal_category()),
                          to_terminal(adj.l.target), Orientation::UpRight);
}

OrientedSquare build_adjoint_right(const AdjunctionData& adj) {
  auto chk = check_adjunction(adj.l, adj.r, adj.unit, adj.counit);
  if (!chk) throw Error("build_adjoint_right: invalid adjunction data: " + chk.witness);
  return commuting_square("adjoint_right(" + adj.r.source->name + ")", adj.r,
                          to_terminal(adj.r.source), identity_functor(terminal_category()),
                          to_terminal(adj.r.target), Orientation::DownLeft);
}

OrientedSquare build_ff_unit(const FinFunctor& u) {
  auto ff = is_fully_faithful(u);
  if (!ff) throw Error("build_ff_unit requires a fully faithful functor: " + ff.witness);
  return commuting_square("ff_unit(" + u.source->name + "->" + u.target->name + ")",
                          identity_functor(u.source), identity_functor(u.source), u, u,
                          Orientation::DownLeft);
}

OrientedSquare build_strict_pullback(const FinFunctor& q, const FinFunctor& w) {
  auto opf = is_grothendieck_opfibration(q);
  if (!opf)
    throw Error("build_strict_pullback: q is not a Grothendieck opfibration: " + opf.witness);
  PullbackResult pb = strict_pullback_category(w, q);
  return commuting_square("strict_pullback(" + q.source->name + "->" + q.target->name + ")",
                          pb.to_b, pb.to_c, w, q, Orientation::DownLeft);
}

Report pasting_cancellation_check(const OrientedSquare& s, CancellationMode mode,
                                  const Policy& pol) {
  if (s.orientation != Orientation::DownLeft)
    throw Error("pasting_cancellation_check applies to down-left squares");
  Report rep;
  const bool horizontal = mode == CancellationMode::HorizontalOverC;
  const KanSide side = horizontal ? KanSide::Left : KanSide::Right;
  ExactnessVerdict base = check_exact(s, side, pol);
  bool all_pastings = true;
  const CatPtr& edge = horizontal ? s.left.target : s.top.target;
  for (ObjId obj = 0; obj < edge->num_objects(); ++obj) {
    OrientedSquare glued = [&] {
      if (horizontal) {
        OrientedSquare comma = build_comma_der4l(s.left, obj);
        return paste(comma, s, PasteDirection::Horizontal);
      }
      // the (b/top) comma square, transposed so it pastes on top of s
      SliceResult sl = comma_under(obj, s.top);
      OrientedSquare comma = make_square("under(" + edge->objects[obj] + ")", sl.pi, sl.pr, s.top,
                                         classifier(edge, obj), sl.comma.cell,
                                         Orientation::DownLeft);
      return paste(comma, s, PasteDirection::Vertical);
    }();
    ExactnessVerdict pv = check_exact(glued, side, pol);
    all_pastings = all_pastings && pv.pass;
    // exactness of the square forces exactness of every pasting
    rep.add("pasting at " + edge->objects[obj], !base.pass || pv.pass,
            pv.pass ? "exact" : "fails at " + pv.witness_object);
  }
  rep.add("verdict equivalence", base.pass == all_pastings,
          std::string("square ") + (base.pass ? "exact" : "not exact") + ", pastings " +
              (all_pastings ? "all exact" : "not all exact"));
  return rep;
}

Report ff_kan_fully_faithful_check(const FinFunctor& u, const Policy& pol) {
  auto ff = is_fully_faithful(u);
  if (!ff) throw Error("ff_kan_fully_faithful_check requires full faithfulness: " + ff.witness);
  Report rep;
  KanExtension lk(u, KanSide::Left);
  KanExtension rk(u, KanSide::Right);
  std::size_t idx = 0;
  for (const Diagram& x : sample_diagrams(u.source, pol)) {
    IsoResult unit_iso = invert(lk.unit(x));
    IsoResult counit_iso = invert(rk.counit(x));
    rep.add("sample " + std::to_string(idx) + " lan unit", unit_iso.is_iso, unit_iso.witness);
    rep.add("sample " + std::to_string(idx) + " ran counit", counit_iso.is_iso,
            counit_iso.witness);
    ++idx;
  }
  return rep;
}

AdjunctionData comma_slice_adjunction(const FinFunctor& u1, const FinFunctor& u2, ObjId j2) {
  CommaResult big = comma_category(u1, u2);
  SliceResult b_slice = comma_over(big.pr2, j2);     // B = (pr2/j2)
  SliceResult a_slice = comma_over(u1, u2.obj[j2]);  // A = (u1/u2(j2))
  const CommaResult& b = b_slice.comma;
  const CommaResult& a = a_slice.comma;
  const FinCategory& j2cat = *u2.source;
  const FinCategory& kcat = *u1.target;

  // r : A -> B, (j1'', h) |-> ((j1'', j2, h), id_{j2})
  std::vector<ObjId> r_obj;
  for (const CommaObject& o : a.objects) {
    auto inner = big.find(o.j1, j2, o.f);
    if (!inner) throw Error("comma_slice_adjunction: missing comma object");
    auto outer = b.find(*inner, 0, j2cat.identity[j2]);
    if (!outer) throw Error("comma_slice_adjunction: missing slice object");
    r_obj.push_back(*outer);
  }
  FinFunctor r = thin_functor(a.cat, b.cat, std::move(r_obj));

  // l : B -> A, ((j1', j2', f), g) |-> (j1', u2(g)∘f)
  std::vector<ObjId> l_obj;
  for (const CommaObject& o : b.objects) {
    const CommaObject& inner = big.objects[o.j1];
    MorId composite = kcat.compose(u2.mor[o.f], inner.f);
    auto target = a.find(inner.j1, 0, composite);
    if (!target) throw Error("comma_slice_adjunction: missing target object");
    l_obj.push_back(*target);
  }
  FinFunctor l = thin_functor(b.cat, a.cat, std::move(l_obj));

  FinNatTrans unit = [&] {
    std::vector<MorId> comp;
    for (ObjId o = 0; o < b.objects.size(); ++o)
      comp.push_back(b.cat->hom(o, r.obj[l.obj[o]]).at(0));
    return make_nat(identity_functor(b.cat), compose(r, l), std::move(comp));
  }();
  FinNatTrans counit = [&] {
    std::vector<MorId> comp;
    for (ObjId o = 0; o < a.objects.size(); ++o)
      comp.push_back(a.cat->hom(l.obj[r.obj[o]], o).at(0));
    return make_nat(compose(l, r), identity_functor(a.cat), std::move(comp));
  }();
  AdjunctionData d{l, r, unit, counit};
  auto chk = check_adjunction(d.l, d.r, d.unit, d.counit);
  if (!chk) throw Error("comma_slice_adjunction: triangles fail: " + chk.witness);
  return d;
}

}  // namespace dercalc
