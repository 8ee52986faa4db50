#include "dercalc/repder.hpp"

namespace dercalc {

Diagram pullback(const FinFunctor& u, const Diagram& x) {
  if (!same_cat(u.target, x.shape)) throw Error("pullback: shape mismatch");
  Diagram y;
  y.shape = u.source;
  for (ObjId j = 0; j < u.source->num_objects(); ++j) y.dim.push_back(x.dim[u.obj[j]]);
  for (MorId m = 0; m < u.source->num_morphisms(); ++m) y.mat.push_back(x.mat[u.mor[m]]);
  return y;
}

DiagramMap pullback_map(const FinFunctor& u, const DiagramMap& f) {
  DiagramMap g;
  g.source = pullback(u, f.source);
  g.target = pullback(u, f.target);
  for (ObjId j = 0; j < u.source->num_objects(); ++j) g.component.push_back(f.component[u.obj[j]]);
  return g;
}

DiagramMap pullback_cell(const FinNatTrans& a, const Diagram& x) {
  if (!same_cat(a.source.target, x.shape)) throw Error("pullback_cell: shape mismatch");
  DiagramMap g;
  g.source = pullback(a.source, x);
  g.target = pullback(a.target, x);
  for (ObjId j = 0; j < a.component.size(); ++j) g.component.push_back(x.mat[a.component[j]]);
  return g;
}

std::string to_string(KanSide s) { return s == KanSide::Left ? "left" : "right"; }

KanExtension::KanExtension(FinFunctor u, KanSide side) : u_(std::move(u)), side_(side) {
  const CatPtr& k = u_.target;
  commas_.reserve(k->num_objects());
  for (ObjId kk = 0; kk < k->num_objects(); ++kk) {
    if (side_ == KanSide::Left)
      commas_.push_back(comma_over(u_, kk).comma);   // (u/k), pr = pr1
    else
      commas_.push_back(comma_under(kk, u_).comma);  // (k/u), pr = pr2
  }
}

namespace {
// Index of the comma projection to source(u).
const FinFunctor& proj(const CommaResult& c, KanSide side) {
  return side == KanSide::Left ? c.pr1 : c.pr2;
}
}  // namespace

KanExtension::Applied KanExtension::pointwise(const Diagram& x) const {
  Applied ap;
  const CatPtr& k = u_.target;
  ap.dim.resize(k->num_objects());
  ap.structure.resize(k->num_objects());
  for (ObjId kk = 0; kk < k->num_objects(); ++kk) {
    const CommaResult& cm = commas_[kk];
    const Diagram local = pullback(proj(cm, side_), x);
    const FinCategory& cc = *cm.cat;
    std::vector<std::size_t> off_obj(cc.num_objects() + 1, 0);
    for (ObjId c = 0; c < cc.num_objects(); ++c) off_obj[c + 1] = off_obj[c] + local.dim[c];
    std::vector<std::size_t> off_mor(cc.num_morphisms() + 1, 0);
    for (MorId m = 0; m < cc.num_morphisms(); ++m) {
      const MorData& d = cc.morphisms[m];
      off_mor[m + 1] =
          off_mor[m] + (side_ == KanSide::Left ? local.dim[d.src] : local.dim[d.tgt]);
    }
    if (side_ == KanSide::Left) {
      // coequaliser presentation: sum over all morphisms (identities too)
      // of x(src m) -> sum over objects, block (tgt, m) = x(m), (src, m) = -1
      Matrix pres(off_obj.back(), off_mor.back());
      for (MorId m = 0; m < cc.num_morphisms(); ++m) {
        const MorData& d = cc.morphisms[m];
        for (std::size_t i = 0; i < local.dim[d.tgt]; ++i)
          for (std::size_t j = 0; j < local.dim[d.src]; ++j)
            pres.at(off_obj[d.tgt] + i, off_mor[m] + j) += local.mat[m].at(i, j);
        for (std::size_t j = 0; j < local.dim[d.src]; ++j)
          pres.at(off_obj[d.src] + j, off_mor[m] + j) -= 1;
      }
      Cokernel ck = cokernel(pres);
      ap.dim[kk] = ck.dim;
      ap.structure[kk] = std::move(ck.projection);
    } else {
      // equaliser presentation: sum over objects -> sum over morphisms,
      // block (m, src) = x(m), (m, tgt) = -1
      Matrix pres(off_mor.back(), off_obj.back());
      for (MorId m = 0; m < cc.num_morphisms(); ++m) {
        const MorData& d = cc.morphisms[m];
        for (std::size_t i = 0; i < local.dim[d.tgt]; ++i)
          for (std::size_t j = 0; j < local.dim[d.src]; ++j)
            pres.at(off_mor[m] + i, off_obj[d.src] + j) += local.mat[m].at(i, j);
        for (std::size_t i = 0; i < local.dim[d.tgt]; ++i)
          pres.at(off_mor[m] + i, off_obj[d.tgt] + i) -= 1;
      }
      Matrix kb = kernel_basis(pres);
      ap.dim[kk] = kb.cols();
      ap.structure[kk] = std::move(kb);
    }
  }
  return ap;
}

std::vector<Matrix> KanExtension::legs_of(const Diagram& x, const Applied& ap, ObjId k) const {
  const CommaResult& cm = commas_[k];
  const FinFunctor& pr = proj(cm, side_);
  std::vector<std::size_t> off(cm.cat->num_objects() + 1, 0);
  for (ObjId c = 0; c < cm.cat->num_objects(); ++c) off[c + 1] = off[c] + x.dim[pr.obj[c]];
  std::vector<Matrix> out;
  for (ObjId c = 0; c < cm.cat->num_objects(); ++c) {
    if (side_ == KanSide::Left)
      out.push_back(block(ap.structure[k], 0, off[c], ap.dim[k], x.dim[pr.obj[c]]));
    else
      out.push_back(block(ap.structure[k], off[c], 0, x.dim[pr.obj[c]], ap.dim[k]));
  }
  return out;
}

std::vector<Matrix> KanExtension::legs(const Diagram& x, ObjId k) const {
  return legs_of(x, pointwise(x), k);
}

Diagram KanExtension::assemble(const Diagram& x, const Applied& ap) const {
  const CatPtr& kcat = u_.target;
  Diagram out;
  out.shape = kcat;
  out.dim = ap.dim;
  out.mat.resize(kcat->num_morphisms());
  for (MorId g = 0; g < kcat->num_morphisms(); ++g) {
    const MorData& gd = kcat->morphisms[g];
    const CommaResult& csrc = commas_[gd.src];
    const CommaResult& ctgt = commas_[gd.tgt];
    std::vector<Matrix> legs_src = legs_of(x, ap, gd.src);
    std::vector<Matrix> legs_tgt = legs_of(x, ap, gd.tgt);
    if (side_ == KanSide::Left) {
      // unique m with m . leg_{(j,f)} = leg_{(j, g.f)}; stack as columns
      Matrix want(ap.dim[gd.tgt], 0);
      for (ObjId c = 0; c < csrc.cat->num_objects(); ++c) {
        const CommaObject& o = csrc.objects[c];
        MorId f2 = kcat->compose(g, o.f);
        auto c2 = ctgt.find(o.j1, o.j2, f2);  // j2 is the terminal point
        if (!c2) throw Error("lan: comma transition object missing");
        want = want.cols() == 0 ? legs_tgt[*c2] : hstack(want, legs_tgt[*c2]);
      }
      if (want.cols() == 0) want = Matrix::zero(ap.dim[gd.tgt], ap.structure[gd.src].cols());
      out.mat[g] = factor_through_surjection(ap.structure[gd.src], want);
    } else {
      // unique m with leg'_{(j,f)} . m = leg_{(j, f.g)}; stack as rows
      Matrix want(0, ap.dim[gd.src]);
      for (ObjId c = 0; c < ctgt.cat->num_objects(); ++c) {
        const CommaObject& o = ctgt.objects[c];
        MorId f2 = kcat->compose(o.f, g);
        auto c2 = csrc.find(o.j1, o.j2, f2);
        if (!c2) throw Error("ran: comma transition object missing");
        want = want.rows() == 0 ? legs_src[*c2] : vstack(want, legs_src[*c2]);
      }
      if (want.rows() == 0) want = Matrix::zero(ap.structure[gd.tgt].rows(), ap.dim[gd.src]);
      out.mat[g] = factor_through_injection(ap.structure[gd.tgt], want);
    }
  }
  return out;
}

Diagram KanExtension::apply(const Diagram& x) const { return assemble(x, pointwise(x)); }

DiagramMap KanExtension::apply_map(const DiagramMap& f) const {
  Applied as = pointwise(f.source);
  Applied at = pointwise(f.target);
  Diagram src = assemble(f.source, as);
  Diagram tgt = assemble(f.target, at);
  const CatPtr& kcat = u_.target;
  DiagramMap out;
  out.source = src;
  out.target = tgt;
  out.component.resize(kcat->num_objects());
  for (ObjId k = 0; k < kcat->num_objects(); ++k) {
    const CommaResult& cm = commas_[k];
    const FinFunctor& pr = proj(cm, side_);
    std::vector<Matrix> ls = legs_of(f.source, as, k);
    std::vector<Matrix> lt = legs_of(f.target, at, k);
    if (side_ == KanSide::Left) {
      Matrix want(at.dim[k], 0);
      for (ObjId c = 0; c < cm.cat->num_objects(); ++c) {
        Matrix col = lt[c] * f.component[pr.obj[c]];
        want = want.cols() == 0 ? col : hstack(want, col);
      }
      if (want.cols() == 0) want = Matrix::zero(at.dim[k], as.structure[k].cols());
      out.component[k] = factor_through_surjection(as.structure[k], want);
    } else {
      Matrix want(0, as.dim[k]);
      for (ObjId c = 0; c < cm.cat->num_objects(); ++c) {
        Matrix row = f.component[pr.obj[c]] * ls[c];
        want = want.rows() == 0 ? row : vstack(want, row);
      }
      if (want.rows() == 0) want = Matrix::zero(at.structure[k].rows(), as.dim[k]);
      out.component[k] = factor_through_injection(at.structure[k], want);
    }
  }
  return out;
}

DiagramMap KanExtension::unit(const Diagram& x) const {
  if (side_ == KanSide::Left) {
    // x -> u*(u_! x), component at j the leg of the comma object (j, id)
    Applied ap = pointwise(x);
    Diagram ux = assemble(x, ap);
    DiagramMap eta;
    eta.source = x;
    eta.target = pullback(u_, ux);
    eta.component.resize(u_.source->num_objects());
    for (ObjId j = 0; j < u_.source->num_objects(); ++j) {
      ObjId k = u_.obj[j];
      auto c = commas_[k].find(j, 0, u_.target->identity[k]);
      if (!c) throw Error("lan unit: identity comma object missing");
      eta.component[j] = legs_of(x, ap, k)[*c];
    }
    return eta;
  }
  // y -> u_*(u* y), at k the unique map through the cone legs
  Diagram restricted = pullback(u_, x);
  Applied ap = pointwise(restricted);
  Diagram uy = assemble(restricted, ap);
  DiagramMap eta;
  eta.source = x;
  eta.target = uy;
  eta.component.resize(u_.target->num_objects());
  for (ObjId k = 0; k < u_.target->num_objects(); ++k) {
    const CommaResult& cm = commas_[k];
    Matrix want(0, x.dim[k]);
    for (ObjId c = 0; c < cm.cat->num_objects(); ++c) {
      Matrix row = x.mat[cm.objects[c].f];  // y(f) : y(k) -> y(u j)
      want = want.rows() == 0 ? row : vstack(want, row);
    }
    if (want.rows() == 0) want = Matrix::zero(ap.structure[k].rows(), x.dim[k]);
    eta.component[k] = factor_through_injection(ap.structure[k], want);
  }
  return eta;
}

DiagramMap KanExtension::counit(const Diagram& y) const {
  if (side_ == KanSide::Left) {
    // u_!(u* y) -> y, at k the unique map with eps . leg_{(j,f)} = y(f)
    Diagram restricted = pullback(u_, y);
    Applied ap = pointwise(restricted);
    Diagram uy = assemble(restricted, ap);
    DiagramMap eps;
    eps.source = uy;
    eps.target = y;
    eps.component.resize(u_.target->num_objects());
    for (ObjId k = 0; k < u_.target->num_objects(); ++k) {
      const CommaResult& cm = commas_[k];
      Matrix want(y.dim[k], 0);
      for (ObjId c = 0; c < cm.cat->num_objects(); ++c) {
        Matrix col = y.mat[cm.objects[c].f];
        want = want.cols() == 0 ? col : hstack(want, col);
      }
      if (want.cols() == 0) want = Matrix::zero(y.dim[k], ap.structure[k].cols());
      eps.component[k] = factor_through_surjection(ap.structure[k], want);
    }
    return eps;
  }
  // u*(u_* x) -> x, component at j the cone leg at (j, id)
  Applied ap = pointwise(y);
  Diagram uy = assemble(y, ap);
  DiagramMap eps;
  eps.source = pullback(u_, uy);
  eps.target = y;
  eps.component.resize(u_.source->num_objects());
  for (ObjId j = 0; j < u_.source->num_objects(); ++j) {
    ObjId k = u_.obj[j];
    auto c = commas_[k].find(0, j, u_.target->identity[k]);
    if (!c) throw Error("ran counit: identity comma object missing");
    eps.component[j] = legs_of(y, ap, k)[*c];
  }
  return eps;
}

namespace {

KanResult kan_result(const FinFunctor& u, KanSide side, const Diagram& x) {
  KanExtension kan(u, side);
  KanResult out;
  out.along = u;
  out.side = side;
  out.input = x;
  out.output = kan.apply(x);
  out.comparison = side == KanSide::Left ? kan.unit(x) : kan.counit(x);

  for (ObjId k = 0; k < u.target->num_objects(); ++k) {
    KanResult::PointWitness w;
    w.k = k;
    w.comma_objects = kan.comma_at(k).objects;
    w.legs = kan.legs(x, k);
    w.dim = out.output.dim[k];
    out.points.push_back(std::move(w));
  }

  // triangle identities of the recorded adjoint data, checked on the spot
  if (side == KanSide::Left) {
    DiagramMap tri = compose(kan.counit(out.output), kan.apply_map(out.comparison));
    if (!is_identity_map(tri)) throw Error("lan: triangle identity failed (internal fault)");
    DiagramMap tri2 = compose(pullback_map(u, kan.counit(out.output)),
                              kan.unit(pullback(u, out.output)));
    if (!is_identity_map(tri2)) throw Error("lan: second triangle identity failed");
  } else {
    DiagramMap tri = compose(kan.apply_map(out.comparison), kan.unit(out.output));
    if (!is_identity_map(tri)) throw Error("ran: triangle identity failed (internal fault)");
    DiagramMap tri2 = compose(kan.counit(pullback(u, out.output)),
                              pullback_map(u, kan.unit(out.output)));
    if (!is_identity_map(tri2)) throw Error("ran: second triangle identity failed");
  }
  return out;
}

}  // namespace

KanResult lan(const FinFunctor& u, const Diagram& x) { return kan_result(u, KanSide::Left, x); }
KanResult ran(const FinFunctor& u, const Diagram& x) { return kan_result(u, KanSide::Right, x); }

CatPtr mate_domain_shape(const OrientedSquare& s, KanSide side) {
  if (s.orientation == Orientation::DownLeft)
    return side == KanSide::Left ? s.top.target : s.left.target;
  return side == KanSide::Right ? s.top.target : s.left.target;
}

MateOperator::MateOperator(OrientedSquare s, KanSide side) : s_(std::move(s)), side_(side) {
  if (!validate_square(s_).ok()) throw Error("MateOperator: malformed square");
  const bool left = side_ == KanSide::Left;
  if (s_.orientation == Orientation::DownLeft) {
    if (left) {
      outer_.emplace(s_.right, KanSide::Left);
      inner_.emplace(s_.left, KanSide::Left);
    } else {
      outer_.emplace(s_.bottom, KanSide::Right);
      inner_.emplace(s_.top, KanSide::Right);
    }
  } else if (left) {
    outer_.emplace(s_.bottom, KanSide::Left);
    inner_.emplace(s_.top, KanSide::Left);
  } else {
    outer_.emplace(s_.right, KanSide::Right);
    inner_.emplace(s_.left, KanSide::Right);
  }
}

DiagramMap MateOperator::component(const Diagram& x) const {
  if (!same_cat(x.shape, mate_domain_shape(s_, side_)))
    throw Error("mate: diagram lives on the wrong level for the " + to_string(side_) +
                " mate of a " + to_string(s_.orientation) + " square");
  const FinFunctor& v = s_.top;
  const FinFunctor& p = s_.left;
  const FinFunctor& w = s_.bottom;
  const FinFunctor& q = s_.right;

  if (s_.orientation == Orientation::DownLeft) {
    if (side_ == KanSide::Left) {
      // p_!(v* x) -> w*(q_! x): counit_p . p_!(cell_{q_!x}) . p_!(v* unit_q)
      Diagram qx = outer_->apply(x);
      DiagramMap step1 = pullback_map(v, outer_->unit(x));
      DiagramMap step2 = pullback_cell(s_.cell, qx);
      DiagramMap eps = inner_->counit(pullback(w, qx));
      return compose(eps, compose(inner_->apply_map(step2), inner_->apply_map(step1)));
    }
    // q*(w_* x) -> v_*(p* x): v_*(p* counit_w) . v_*(cell_{w_*x}) . unit_v
    Diagram wx = outer_->apply(x);
    DiagramMap step1 = pullback_cell(s_.cell, wx);
    DiagramMap step2 = pullback_map(p, outer_->counit(x));
    DiagramMap eta = inner_->unit(pullback(q, wx));
    return compose(inner_->apply_map(step2), compose(inner_->apply_map(step1), eta));
  }
  if (side_ == KanSide::Right) {
    // w*(q_* x) -> p_*(v* x): p_*(v* counit_q) . p_*(cell_{q_*x}) . unit_p
    Diagram qx = outer_->apply(x);
    DiagramMap step1 = pullback_cell(s_.cell, qx);
    DiagramMap step2 = pullback_map(v, outer_->counit(x));
    DiagramMap eta = inner_->unit(pullback(w, qx));
    return compose(inner_->apply_map(step2), compose(inner_->apply_map(step1), eta));
  }
  // v_!(p* x) -> q*(w_! x): counit_v . v_!(cell_{w_!x}) . v_!(p* unit_w)
  Diagram wx = outer_->apply(x);
  DiagramMap step1 = pullback_map(p, outer_->unit(x));
  DiagramMap step2 = pullback_cell(s_.cell, wx);
  DiagramMap eps = inner_->counit(pullback(q, wx));
  return compose(eps, compose(inner_->apply_map(step2), inner_->apply_map(step1)));
}

DiagramMap mate_component(const OrientedSquare& s, KanSide side, const Diagram& x) {
  return MateOperator(s, side).component(x);
}

CatPtr DerivatorView::level(const CatPtr& k) const {
  if (!shift_) return k;
  return product_category(shift_, k).cat;
}

FinFunctor DerivatorView::lift(const FinFunctor& u) const {
  if (!shift_) return u;
  Product src = product_category(shift_, u.source);
  Product dst = product_category(shift_, u.target);
  return product_functor(src, dst, identity_functor(shift_), u);
}

FinNatTrans DerivatorView::lift(const FinNatTrans& a) const {
  if (!shift_) return a;
  Product src = product_category(shift_, a.source.source);
  Product dst = product_category(shift_, a.source.target);
  std::vector<MorId> comp;
  for (ObjId i = 0; i < shift_->num_objects(); ++i)
    for (ObjId j = 0; j < a.source.source->num_objects(); ++j)
      comp.push_back(dst.mor_at(shift_->identity[i], a.component[j]));
  return make_nat(product_functor(src, dst, identity_functor(shift_), a.source),
                  product_functor(src, dst, identity_functor(shift_), a.target),
                  std::move(comp));
}

}  // namespace dercalc
