#include "dercalc/pointed.hpp"

namespace dercalc {

FinFunctor horizontal_sieve() { return thin_functor(ordinal(1), corner_category(), {0, 1}); }

FinFunctor corner_inclusion() {
  return thin_functor(corner_category(), square_category(), {0, 1, 2});
}

ExtendByZeroResult extend_by_zero(const FinFunctor& u, const Diagram& x) {
  SieveKind kind = sieve_kind(u);
  if (kind == SieveKind::Neither)
    throw Error("extend_by_zero: functor is neither a sieve nor a cosieve");
  ExtendByZeroResult out;
  out.along = u;
  out.side = (kind == SieveKind::Cosieve) ? KanSide::Left : KanSide::Right;
  KanExtension kan(u, out.side);
  out.output = kan.apply(x);
  out.image_comparison = out.side == KanSide::Right ? kan.counit(x) : kan.unit(x);
  if (!invert(out.image_comparison).is_iso)
    throw Error("extend_by_zero: on-image comparison not invertible (internal fault)");

  std::vector<bool> in_image(u.target->num_objects(), false);
  for (ObjId j : u.obj) in_image[j] = true;
  for (ObjId k = 0; k < u.target->num_objects(); ++k) {
    if (in_image[k]) continue;
    if (out.output.dim[k] != 0)
      throw Error("extend_by_zero: nonzero value off the image at " + u.target->objects[k]);
    out.off_image.push_back(k);
  }
  return out;
}

CocartesianVerdict is_cocartesian(const Diagram& x) {
  if (!same_cat(x.shape, square_category()))
    throw Error("is_cocartesian expects a diagram on the square");
  FinFunctor inc = corner_inclusion();
  KanExtension kan(inc, KanSide::Left);
  CocartesianVerdict v;
  v.comparison = kan.counit(x);
  for (ObjId k = 0; k < 3; ++k)
    if (!is_invertible(v.comparison.component[k]))
      throw Error("is_cocartesian: counit singular over the corner (internal fault)");
  v.value = is_invertible(v.comparison.component[3]);
  return v;
}

CofiberResult cofiber(const Diagram& f) {
  if (!same_cat(f.shape, ordinal(1))) throw Error("cofiber expects a diagram on [1]");
  CofiberResult out;
  out.input = f;
  out.intermediate = extend_by_zero(horizontal_sieve(), f).output;
  KanExtension push(corner_inclusion(), KanSide::Left);
  out.output = push.apply(out.intermediate);
  out.restriction_witness = push.unit(out.intermediate);
  if (!invert(out.restriction_witness).is_iso)
    throw Error("cofiber: restriction of the pushout is not the input (internal fault)");
  if (out.output.dim[2] != 0) throw Error("cofiber: nonzero value at the zero corner");
  CocartesianVerdict cc = is_cocartesian(out.output);
  if (!cc.value) throw Error("cofiber: output is not cocartesian (internal fault)");
  out.cocartesian_witness = cc.comparison;
  return out;
}

std::size_t cofiber_dim(const CofiberResult& r) { return r.output.dim[3]; }

namespace {
CatPtr cospan_shape() {
  static CatPtr c =
      poset_category("cospan", {"x", "y", "z"}, {{"x", "z"}, {"y", "z"}});
  return c;
}
}  // namespace

ExceptionalAdjointResult exceptional_right_adjoint_i1(const Diagram& y) {
  if (!same_cat(y.shape, corner_category()))
    throw Error("exceptional_right_adjoint_i1 expects a diagram on the corner");
  const CatPtr corner = corner_category();
  const Matrix& alpha = y.mat[*corner->morphism_by_name("(0,0)->(0,1)")];  // a -> c
  const Matrix& beta = y.mat[*corner->morphism_by_name("(0,0)->(1,0)")];   // a -> b

  ExceptionalAdjointResult out;
  out.kernel_inclusion = kernel_basis(alpha);  // P = pullback of a -> c along zero
  CatPtr i1 = ordinal(1);
  out.output.shape = i1;
  out.output.dim = {out.kernel_inclusion.cols(), y.dim[1]};
  out.output.mat.resize(3);
  out.output.mat[i1->identity[0]] = Matrix::identity(out.output.dim[0]);
  out.output.mat[i1->identity[1]] = Matrix::identity(out.output.dim[1]);
  out.output.mat[*i1->morphism_by_name("0->1")] = beta * out.kernel_inclusion;

  // cross-check: the same pullback as a right Kan extension over the cospan
  CatPtr cospan = cospan_shape();
  Diagram w;
  w.shape = cospan;
  w.dim = {y.dim[0], 0, y.dim[2]};
  w.mat.resize(cospan->num_morphisms());
  w.mat[cospan->identity[0]] = Matrix::identity(y.dim[0]);
  w.mat[cospan->identity[1]] = Matrix::identity(0);
  w.mat[cospan->identity[2]] = Matrix::identity(y.dim[2]);
  w.mat[*cospan->morphism_by_name("x->z")] = alpha;
  w.mat[*cospan->morphism_by_name("y->z")] = Matrix::zero(y.dim[2], 0);
  KanExtension lim(to_terminal(cospan), KanSide::Right);
  Diagram p = lim.apply(w);
  std::vector<Matrix> legs = lim.legs(w, 0);

  out.ran_route.shape = i1;
  out.ran_route.dim = {p.dim[0], y.dim[1]};
  out.ran_route.mat.resize(3);
  out.ran_route.mat[i1->identity[0]] = Matrix::identity(p.dim[0]);
  out.ran_route.mat[i1->identity[1]] = Matrix::identity(y.dim[1]);
  out.ran_route.mat[*i1->morphism_by_name("0->1")] = beta * legs[0];

  // the kernel cone factors uniquely through the limit cone
  Matrix structure = vstack(vstack(legs[0], legs[1]), legs[2]);
  Matrix want = vstack(vstack(out.kernel_inclusion, Matrix::zero(0, out.output.dim[0])),
                       alpha * out.kernel_inclusion);
  Matrix comparison = factor_through_injection(structure, want);
  out.route_iso = make_diagram_map(out.output, out.ran_route,
                                   {comparison, Matrix::identity(y.dim[1])});
  if (!invert(out.route_iso).is_iso)
    throw Error("exceptional adjoint: kernel and ran routes disagree (internal fault)");
  return out;
}

DiagramMap i1_adjoint_transpose(const DiagramMap& phi, const Diagram& x, const Diagram& y) {
  FinFunctor i1 = horizontal_sieve();
  KanExtension ez(i1, KanSide::Right);
  DiagramMap eps = ez.counit(x);  // i* i_* x -> x, invertible
  IsoResult inv_eps = invert(eps);
  if (!inv_eps.is_iso) throw Error("i1 transpose: counit not invertible");
  DiagramMap restricted = compose(pullback_map(i1, phi), *inv_eps.inverse);  // x -> i* y
  ExceptionalAdjointResult adj = exceptional_right_adjoint_i1(y);
  Matrix psi0 = factor_through_injection(adj.kernel_inclusion, restricted.component[0]);
  return make_diagram_map(x, adj.output, {psi0, restricted.component[1]});
}

DiagramMap i1_adjoint_untranspose(const DiagramMap& psi, const Diagram& x, const Diagram& y) {
  FinFunctor i1 = horizontal_sieve();
  KanExtension ez(i1, KanSide::Right);
  Diagram ix = ez.apply(x);
  DiagramMap eps = ez.counit(x);
  ExceptionalAdjointResult adj = exceptional_right_adjoint_i1(y);
  Matrix phi0 = adj.kernel_inclusion * psi.component[0] * eps.component[0];
  Matrix phi1 = psi.component[1] * eps.component[1];
  return make_diagram_map(ix, y, {phi0, phi1, Matrix::zero(y.dim[2], 0)});
}

K0Report k0_additivity_check(const Diagram& x) {
  if (!same_cat(x.shape, square_category()))
    throw Error("k0_additivity_check expects a diagram on the square");
  K0Report rep;
  rep.cocartesian = is_cocartesian(x).value;
  rep.zero_corner = x.dim[2] == 0;
  rep.dim_a = x.dim[0];
  rep.dim_b = x.dim[1];
  rep.dim_c = x.dim[3];
  if (!rep.cocartesian || !rep.zero_corner) {
    rep.note = "precondition failed: need a cocartesian square with zero at (0,1)";
    return rep;
  }
  const Matrix& top = x.mat[*x.shape->morphism_by_name("(0,0)->(1,0)")];
  rep.mono = kernel_basis(top).cols() == 0;
  if (rep.mono) {
    rep.additivity = rep.dim_b == rep.dim_a + rep.dim_c;
    rep.note = "[B] = [A] + [C] with dims " + std::to_string(rep.dim_b) + " = " +
               std::to_string(rep.dim_a) + " + " + std::to_string(rep.dim_c);
  } else {
    rep.note = "monomorphism hypothesis fails; no additivity asserted (dim C(f) = " +
               std::to_string(rep.dim_c) + ", dim B = " + std::to_string(rep.dim_b) + ")";
  }
  return rep;
}

Report pointed_levels_check(const CatPtr& k) {
  Report rep;
  FinFunctor from_empty = make_functor(empty_category(), k, {}, {});
  Diagram nothing;
  nothing.shape = empty_category();
  KanExtension lk(from_empty, KanSide::Left);
  KanExtension rk(from_empty, KanSide::Right);
  Diagram initial = lk.apply(nothing);
  Diagram final_ = rk.apply(nothing);
  // the canonical map out of the initial extension, via the lan transpose of
  // the empty cone
  DiagramMap into_restriction = zero_map(nothing, pullback(from_empty, final_));
  DiagramMap canonical = compose(lk.counit(final_), lk.apply_map(into_restriction));
  for (ObjId a = 0; a < k->num_objects(); ++a) {
    bool zero_dims = initial.dim[a] == 0 && final_.dim[a] == 0;
    rep.add("level " + k->objects[a], zero_dims && is_invertible(canonical.component[a]),
            "initial dim " + std::to_string(initial.dim[a]) + ", final dim " +
                std::to_string(final_.dim[a]));
  }
  return rep;
}

ExtZeroCommuteVerdict pointed_morphism_extzero_commute(const DerMorphism& m, const FinFunctor& u,
                                                       const Policy& pol) {
  ExtZeroCommuteVerdict v;
  for (const CatPtr& level : {u.source, u.target}) {
    Diagram z = apply(m, level, zero_diagram(m.domain().level(level)));
    for (ObjId a = 0; a < z.dim.size(); ++a)
      if (z.dim[a] != 0) {
        v.pointed_witness = "sends the zero diagram at level " + level->name +
                            " to dimension " + std::to_string(z.dim[a]) + " at " +
                            z.shape->objects[a];
        return v;
      }
  }
  v.pointed = true;

  SieveKind kind = sieve_kind(u);
  if (kind == SieveKind::Neither)
    throw Error("pointed_morphism_extzero_commute: u is neither a sieve nor a cosieve");
  v.commutes = true;
  std::vector<Diagram> samples = sample_diagrams(m.domain().level(u.source), pol);
  v.samples = samples.size();
  for (const Diagram& x : samples) {
    if (kind != SieveKind::Cosieve) {  // sieve or both: right extension
      IsoResult iso = invert(continuity_comparison(m, u, x));
      if (!iso.is_iso) {
        v.commutes = false;
        v.witness = "right comparison singular at " + iso.witness;
        return v;
      }
    }
    if (kind != SieveKind::Sieve) {  // cosieve or both: left extension
      IsoResult iso = invert(cocontinuity_comparison(m, u, x));
      if (!iso.is_iso) {
        v.commutes = false;
        v.witness = "left comparison singular at " + iso.witness;
        return v;
      }
    }
  }
  return v;
}

}  // namespace dercalc
