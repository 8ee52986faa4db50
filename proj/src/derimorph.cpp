#include "dercalc/derimorph.hpp"

namespace dercalc {

std::string to_string(MorphKind k) {
  switch (k) {
    case MorphKind::PullbackAlong: return "pullback_along";
    case MorphKind::LanAlong: return "lan_along";
    case MorphKind::RanAlong: return "ran_along";
    case MorphKind::TensorWith: return "tensor_with";
    default: return "direct_sum_with_constant";
  }
}

DerMorphism pullback_along(FinFunctor u) { return {MorphKind::PullbackAlong, std::move(u), 0}; }
DerMorphism lan_along(FinFunctor u) { return {MorphKind::LanAlong, std::move(u), 0}; }
DerMorphism ran_along(FinFunctor u) { return {MorphKind::RanAlong, std::move(u), 0}; }
DerMorphism tensor_with(std::size_t dim) { return {MorphKind::TensorWith, std::nullopt, dim}; }
DerMorphism direct_sum_with_constant(std::size_t dim) {
  return {MorphKind::DirectSumWithConstant, std::nullopt, dim};
}

DerivatorView DerMorphism::domain() const {
  switch (kind) {
    case MorphKind::PullbackAlong: return DerivatorView(along->target);
    case MorphKind::LanAlong:
    case MorphKind::RanAlong: return DerivatorView(along->source);
    default: return DerivatorView();
  }
}

DerivatorView DerMorphism::codomain() const {
  switch (kind) {
    case MorphKind::PullbackAlong: return DerivatorView(along->source);
    case MorphKind::LanAlong:
    case MorphKind::RanAlong: return DerivatorView(along->target);
    default: return DerivatorView();
  }
}

std::string DerMorphism::name() const {
  if (along) return to_string(kind) + "(" + along->source->name + "->" + along->target->name + ")";
  return to_string(kind) + "(Q^" + std::to_string(space_dim) + ")";
}

bool is_strict(const DerMorphism& m) {
  return m.kind == MorphKind::PullbackAlong || m.kind == MorphKind::TensorWith ||
         m.kind == MorphKind::DirectSumWithConstant;
}

namespace {

// The lifted functor Phi_level acts along: u x id_level.
FinFunctor level_lift(const FinFunctor& u, const CatPtr& level) {
  Product src = product_category(u.source, level);
  Product dst = product_category(u.target, level);
  return product_functor(src, dst, u, identity_functor(level));
}

Diagram tensor_diagram(const Diagram& x, std::size_t d) {
  Diagram y;
  y.shape = x.shape;
  for (std::size_t dim : x.dim) y.dim.push_back(dim * d);
  for (const Matrix& m : x.mat) y.mat.push_back(kronecker(m, Matrix::identity(d)));
  return y;
}

Diagram dsum_diagram(const Diagram& x, std::size_t d) {
  Diagram y;
  y.shape = x.shape;
  for (std::size_t dim : x.dim) y.dim.push_back(dim + d);
  for (const Matrix& m : x.mat) y.mat.push_back(direct_sum(m, Matrix::identity(d)));
  return y;
}

}  // namespace

Diagram apply(const DerMorphism& m, const CatPtr& level, const Diagram& x) {
  switch (m.kind) {
    case MorphKind::PullbackAlong: return pullback(level_lift(*m.along, level), x);
    case MorphKind::LanAlong:
      return KanExtension(level_lift(*m.along, level), KanSide::Left).apply(x);
    case MorphKind::RanAlong:
      return KanExtension(level_lift(*m.along, level), KanSide::Right).apply(x);
    case MorphKind::TensorWith: return tensor_diagram(x, m.space_dim);
    default: return dsum_diagram(x, m.space_dim);
  }
}

DiagramMap apply_map(const DerMorphism& m, const CatPtr& level, const DiagramMap& f) {
  switch (m.kind) {
    case MorphKind::PullbackAlong: return pullback_map(level_lift(*m.along, level), f);
    case MorphKind::LanAlong:
      return KanExtension(level_lift(*m.along, level), KanSide::Left).apply_map(f);
    case MorphKind::RanAlong:
      return KanExtension(level_lift(*m.along, level), KanSide::Right).apply_map(f);
    case MorphKind::TensorWith: {
      DiagramMap g;
      g.source = tensor_diagram(f.source, m.space_dim);
      g.target = tensor_diagram(f.target, m.space_dim);
      for (const Matrix& c : f.component)
        g.component.push_back(kronecker(c, Matrix::identity(m.space_dim)));
      return g;
    }
    default: {
      DiagramMap g;
      g.source = dsum_diagram(f.source, m.space_dim);
      g.target = dsum_diagram(f.target, m.space_dim);
      for (const Matrix& c : f.component)
        g.component.push_back(direct_sum(c, Matrix::identity(m.space_dim)));
      return g;
    }
  }
}

DiagramMap structure_iso(const DerMorphism& m, const FinFunctor& v, const Diagram& x) {
  const DerivatorView dom = m.domain();
  const DerivatorView cod = m.codomain();
  FinFunctor v_dom = dom.lift(v);
  FinFunctor v_cod = cod.lift(v);
  if (is_strict(m)) {
    Diagram lhs = pullback(v_cod, apply(m, v.target, x));
    Diagram rhs = apply(m, v.source, pullback(v_dom, x));
    if (!(lhs == rhs)) throw Error("strict morphism violated strictness (internal fault)");
    return identity_map(lhs);
  }
  const FinFunctor& u = *m.along;
  FinFunctor ua = level_lift(u, v.source);  // u x id_A
  FinFunctor ub = level_lift(u, v.target);  // u x id_B
  if (m.kind == MorphKind::LanAlong) {
    // left mate of the strict product square; its inverse is gamma_v
    OrientedSquare sq = commuting_square("gamma", v_dom, ua, v_cod, ub, Orientation::DownLeft);
    DiagramMap mate = mate_component(sq, KanSide::Left, x);
    IsoResult iso = invert(mate);
    if (!iso.is_iso) throw Error("lan structure map not invertible (internal fault)");
    return *iso.inverse;
  }
  // ran: the right mate lands in the gamma direction already
  OrientedSquare sq = commuting_square("gamma", ua, v_dom, ub, v_cod, Orientation::DownLeft);
  DiagramMap mate = mate_component(sq, KanSide::Right, x);
  if (!invert(mate).is_iso) throw Error("ran structure map not invertible (internal fault)");
  return mate;
}

Report validate_morphism(const DerMorphism& m, const std::vector<FinFunctor>& functors,
                         const std::vector<FinNatTrans>& cells, const Policy& pol) {
  Report rep;
  SplitMix64 rng(pol.seed);

  for (const FinFunctor& u : functors) {
    CatPtr level_b = u.target;
    Diagram x = random_diagram(m.domain().level(level_b), rng, pol);
    DiagramMap g = structure_iso(m, u, x);
    rep.add("gamma(" + u.source->name + "->" + u.target->name + ") invertible",
            invert(g).is_iso);
    if (is_strict(m))
      rep.add("gamma(" + u.source->name + "->" + u.target->name + ") strict",
              is_identity_map(g));

    // identity coherence at the source level
    Diagram y = random_diagram(m.domain().level(u.source), rng, pol);
    rep.add("gamma(id_" + u.source->name + ") = id",
            is_identity_map(structure_iso(m, identity_functor(u.source), y)));

    // composite coherence against every composable corpus functor
    for (const FinFunctor& v : functors) {
      if (!same_cat(v.target, u.source)) continue;
      DiagramMap left = compose(structure_iso(m, v, pullback(m.domain().lift(u), x)),
                                pullback_map(m.codomain().lift(v), structure_iso(m, u, x)));
      DiagramMap right = structure_iso(m, compose(u, v), x);
      rep.add("gamma pasting over " + v.source->name + "->" + u.target->name, left == right);
    }
  }

  for (const FinNatTrans& a : cells) {
    // gamma is natural against 2-cells: Phi(a* x) . gamma_u = gamma_v . a*(Phi x)
    const FinFunctor& u = a.source;
    const FinFunctor& v = a.target;
    Diagram x = random_diagram(m.domain().level(u.target), rng, pol);
    DiagramMap lhs = compose(apply_map(m, u.source, pullback_cell(m.domain().lift(a), x)),
                             structure_iso(m, u, x));
    DiagramMap rhs = compose(structure_iso(m, v, x),
                             pullback_cell(m.codomain().lift(a), apply(m, u.target, x)));
    rep.add("gamma compatible with cell " + u.source->name + "=>" + u.target->name, lhs == rhs);
  }
  return rep;
}

DiagramMap cocontinuity_comparison(const DerMorphism& m, const FinFunctor& u, const Diagram& x) {
  KanExtension lan_dom(m.domain().lift(u), KanSide::Left);
  KanExtension lan_cod(m.codomain().lift(u), KanSide::Left);
  Diagram ux = lan_dom.apply(x);
  // u_!(Phi x) -> u_!(Phi u* u_! x) -> u_! u* (Phi u_! x) -> Phi(u_! x)
  DiagramMap step1 = apply_map(m, u.source, lan_dom.unit(x));
  IsoResult gamma = invert(structure_iso(m, u, ux));
  if (!gamma.is_iso) throw Error("cocontinuity_comparison: structure iso not invertible");
  DiagramMap eps = lan_cod.counit(apply(m, u.target, ux));
  return compose(eps, lan_cod.apply_map(compose(*gamma.inverse, step1)));
}

DiagramMap continuity_comparison(const DerMorphism& m, const FinFunctor& u, const Diagram& x) {
  KanExtension ran_dom(m.domain().lift(u), KanSide::Right);
  KanExtension ran_cod(m.codomain().lift(u), KanSide::Right);
  Diagram ux = ran_dom.apply(x);
  // Phi(u_* x) -> u_* u* (Phi u_* x) -> u_* (Phi u* u_* x) -> u_* (Phi x)
  DiagramMap eta = ran_cod.unit(apply(m, u.target, ux));
  DiagramMap step1 = structure_iso(m, u, ux);
  DiagramMap step2 = apply_map(m, u.source, ran_dom.counit(x));
  return compose(ran_cod.apply_map(compose(step2, step1)), eta);
}

CocontinuityVerdict is_cocontinuous(const DerMorphism& m, const FinFunctor& u, const Policy& pol) {
  CocontinuityVerdict v;
  auto run = [&](const FinFunctor& f) -> bool {
    std::vector<Diagram> samples = sample_diagrams(m.domain().level(f.source), pol);
    v.samples += samples.size();
    for (const Diagram& x : samples) {
      IsoResult iso = invert(cocontinuity_comparison(m, f, x));
      if (!iso.is_iso) {
        v.witness = "comparison along " + f.source->name + "->" + f.target->name +
                    " singular at " + iso.witness;
        return false;
      }
    }
    return true;
  };
  v.along_u = run(u);
  v.along_projections = run(to_terminal(u.source)) && run(to_terminal(u.target));
  return v;
}

Modification identity_modification(DerMorphism m) {
  return {ModKind::IdentityOf, std::nullopt, std::move(m)};
}
Modification zero_modification(DerMorphism m) {
  return {ModKind::ZeroOf, std::nullopt, std::move(m)};
}
Modification lan_unit_modification(FinFunctor u) {
  return {ModKind::LanUnit, std::move(u), std::nullopt};
}
Modification lan_counit_modification(FinFunctor u) {
  return {ModKind::LanCounit, std::move(u), std::nullopt};
}
Modification zero_unit_modification(FinFunctor u) {
  return {ModKind::ZeroUnitLike, std::move(u), std::nullopt};
}

DiagramMap modification_at(const Modification& mu, const CatPtr& level, const Diagram& x) {
  switch (mu.kind) {
    case ModKind::IdentityOf: return identity_map(apply(*mu.of, level, x));
    case ModKind::ZeroOf: {
      Diagram fx = apply(*mu.of, level, x);
      return zero_map(fx, fx);
    }
    case ModKind::LanUnit: return KanExtension(level_lift(*mu.along, level), KanSide::Left).unit(x);
    case ModKind::LanCounit:
      return KanExtension(level_lift(*mu.along, level), KanSide::Left).counit(x);
    default: {
      DiagramMap unit = KanExtension(level_lift(*mu.along, level), KanSide::Left).unit(x);
      return zero_map(unit.source, unit.target);
    }
  }
}

bool modification_coherent(const Modification& mu, const DerMorphism& phi, const DerMorphism& psi,
                           const FinNatTrans& a, const Diagram& x) {
  const FinFunctor& u = a.source;
  const FinFunctor& v = a.target;
  // u*(Phi_K x) -> Phi_J(u* x) -> Phi_J(v* x) -> Psi_J(v* x)
  DiagramMap lhs = compose(
      modification_at(mu, u.source, pullback(phi.domain().lift(v), x)),
      compose(apply_map(phi, u.source, pullback_cell(phi.domain().lift(a), x)),
              structure_iso(phi, u, x)));
  // u*(Phi_K x) -> u*(Psi_K x) -> v*(Psi_K x) -> Psi_J(v* x)
  DiagramMap rhs = compose(
      structure_iso(psi, v, x),
      compose(pullback_cell(psi.codomain().lift(a), apply(psi, u.target, x)),
              pullback_map(psi.codomain().lift(u), modification_at(mu, u.target, x))));
  return lhs == rhs;
}

Report check_morphism_adjunction(const DerMorphism& phi, const DerMorphism& psi,
                                 const Modification& eta, const Modification& eps,
                                 const std::vector<CatPtr>& levels, const Policy& pol) {
  const bool lan_pair = phi.kind == MorphKind::LanAlong && psi.kind == MorphKind::PullbackAlong &&
                        phi.along && psi.along && *phi.along == *psi.along;
  const bool identity_pair =
      phi.kind == MorphKind::PullbackAlong && psi.kind == MorphKind::PullbackAlong && phi.along &&
      psi.along && *phi.along == *psi.along &&
      *phi.along == identity_functor(phi.along->source);
  if (!lan_pair && !identity_pair)
    throw Error("check_morphism_adjunction: only the (lan_along u, pullback_along u) pair and "
                "the identity pair assemble here");

  Report rep;
  SplitMix64 rng(pol.seed);
  for (const CatPtr& level : levels) {
    Diagram x = random_diagram(phi.domain().level(level), rng, pol);
    Diagram y = random_diagram(phi.codomain().level(level), rng, pol);

    // eps_{Phi x} . Phi(eta_x) = id
    DiagramMap t1 = compose(modification_at(eps, level, apply(phi, level, x)),
                            apply_map(phi, level, modification_at(eta, level, x)));
    rep.add("triangle (eps Phi)(Phi eta) at " + level->name, is_identity_map(t1));

    // Psi(eps_y) . eta_{Psi y} = id
    DiagramMap t2 = compose(apply_map(psi, level, modification_at(eps, level, y)),
                            modification_at(eta, level, apply(psi, level, y)));
    rep.add("triangle (Psi eps)(eta Psi) at " + level->name, is_identity_map(t2));
  }
  return rep;
}

}  // namespace dercalc
