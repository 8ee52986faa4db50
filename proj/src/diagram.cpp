#include "dercalc/diagram.hpp"

namespace dercalc {

ValidationReport validate_diagram(const Diagram& x) {
  ValidationReport rep;
  if (!x.shape) {
    rep.add("diagram without a shape");
    return rep;
  }
  const FinCategory& c = *x.shape;
  if (x.dim.size() != c.num_objects() || x.mat.size() != c.num_morphisms()) {
    rep.add("diagram tables do not cover the shape");
    return rep;
  }
  for (MorId m = 0; m < c.num_morphisms(); ++m) {
    const MorData& d = c.morphisms[m];
    if (x.mat[m].rows() != x.dim[d.tgt] || x.mat[m].cols() != x.dim[d.src]) {
      rep.add("matrix of " + d.name + " has shape " + std::to_string(x.mat[m].rows()) + "x" +
              std::to_string(x.mat[m].cols()) + ", wanted " + std::to_string(x.dim[d.tgt]) + "x" +
              std::to_string(x.dim[d.src]));
      return rep;
    }
  }
  for (ObjId a = 0; a < c.num_objects(); ++a)
    if (!x.mat[c.identity[a]].is_identity())
      rep.add("matrix of id_" + c.objects[a] + " is not the identity");
  for (const auto& [k, gf] : c.compose_table) {
    MorId g = static_cast<MorId>(k >> 32), f = static_cast<MorId>(k & 0xffffffffu);
    if (x.mat[gf] != x.mat[g] * x.mat[f])
      rep.add("functoriality fails on compose(" + c.morphisms[g].name + ", " +
              c.morphisms[f].name + ")");
  }
  return rep;
}

Diagram make_diagram(CatPtr shape, std::vector<std::size_t> dim, std::vector<Matrix> mat) {
  Diagram x{std::move(shape), std::move(dim), std::move(mat)};
  ValidationReport rep = validate_diagram(x);
  if (!rep.ok()) throw Error("invalid diagram: " + rep.joined());
  return x;
}

Diagram constant_diagram(const CatPtr& shape, std::size_t d) {
  Diagram x;
  x.shape = shape;
  x.dim.assign(shape->num_objects(), d);
  x.mat.assign(shape->num_morphisms(), Matrix::identity(d));
  return x;
}

Diagram zero_diagram(const CatPtr& shape) { return constant_diagram(shape, 0); }

ValidationReport validate_diagram_map(const DiagramMap& f) {
  ValidationReport rep;
  if (!same_cat(f.source.shape, f.target.shape)) {
    rep.add("map between diagrams on different shapes");
    return rep;
  }
  const FinCategory& c = *f.source.shape;
  if (f.component.size() != c.num_objects()) {
    rep.add("component table does not cover the shape");
    return rep;
  }
  for (ObjId a = 0; a < c.num_objects(); ++a)
    if (f.component[a].rows() != f.target.dim[a] || f.component[a].cols() != f.source.dim[a]) {
      rep.add("component at " + c.objects[a] + " has the wrong shape");
      return rep;
    }
  for (MorId m = 0; m < c.num_morphisms(); ++m) {
    const MorData& d = c.morphisms[m];
    if (f.target.mat[m] * f.component[d.src] != f.component[d.tgt] * f.source.mat[m])
      rep.add("naturality fails at " + d.name);
  }
  return rep;
}

DiagramMap make_diagram_map(Diagram source, Diagram target, std::vector<Matrix> component) {
  DiagramMap f{std::move(source), std::move(target), std::move(component)};
  ValidationReport rep = validate_diagram_map(f);
  if (!rep.ok()) throw Error("invalid diagram map: " + rep.joined());
  return f;
}

DiagramMap identity_map(const Diagram& x) {
  DiagramMap f;
  f.source = f.target = x;
  for (std::size_t d : x.dim) f.component.push_back(Matrix::identity(d));
  return f;
}

DiagramMap zero_map(const Diagram& source, const Diagram& target) {
  DiagramMap f;
  f.source = source;
  f.target = target;
  for (ObjId a = 0; a < source.dim.size(); ++a)
    f.component.push_back(Matrix::zero(target.dim[a], source.dim[a]));
  return f;
}

DiagramMap compose(const DiagramMap& g, const DiagramMap& f) {
  if (!(f.target == g.source)) throw Error("diagram map composition: middle objects differ");
  DiagramMap h;
  h.source = f.source;
  h.target = g.target;
  for (std::size_t a = 0; a < f.component.size(); ++a)
    h.component.push_back(g.component[a] * f.component[a]);
  return h;
}

bool is_identity_map(const DiagramMap& f) {
  if (!(f.source == f.target)) return false;
  for (const Matrix& m : f.component)
    if (!m.is_identity()) return false;
  return true;
}

IsoResult invert(const DiagramMap& f) {
  IsoResult out;
  std::vector<Matrix> inv;
  const FinCategory& c = *f.source.shape;
  for (ObjId a = 0; a < f.component.size(); ++a) {
    if (!is_invertible(f.component[a])) {
      out.witness = c.objects[a];
      return out;
    }
    inv.push_back(inverse(f.component[a]));
  }
  out.is_iso = true;
  out.inverse = make_diagram_map(f.target, f.source, std::move(inv));
  return out;
}

std::vector<DiagramMap> hom_space(const Diagram& x, const Diagram& y) {
  if (!same_cat(x.shape, y.shape)) throw Error("hom_space of diagrams on different shapes");
  const FinCategory& c = *x.shape;
  // variables: entries of every component, object-major then row-major
  std::vector<std::size_t> offset(c.num_objects() + 1, 0);
  for (ObjId a = 0; a < c.num_objects(); ++a)
    offset[a + 1] = offset[a] + y.dim[a] * x.dim[a];
  const std::size_t nvars = offset[c.num_objects()];

  std::size_t nrows = 0;
  for (MorId m = 0; m < c.num_morphisms(); ++m) {
    const MorData& d = c.morphisms[m];
    if (m == c.identity[d.src]) continue;
    nrows += y.dim[d.tgt] * x.dim[d.src];
  }
  Matrix sys(nrows, nvars);
  std::size_t row = 0;
  for (MorId m = 0; m < c.num_morphisms(); ++m) {
    const MorData& d = c.morphisms[m];
    if (m == c.identity[d.src]) continue;
    // Y(m) * comp_src - comp_tgt * X(m) = 0, entry (i, j)
    for (std::size_t i = 0; i < y.dim[d.tgt]; ++i)
      for (std::size_t j = 0; j < x.dim[d.src]; ++j) {
        for (std::size_t t = 0; t < y.dim[d.src]; ++t)
          sys.at(row, offset[d.src] + t * x.dim[d.src] + j) += y.mat[m].at(i, t);
        for (std::size_t t = 0; t < x.dim[d.tgt]; ++t)
          sys.at(row, offset[d.tgt] + i * x.dim[d.tgt] + t) -= x.mat[m].at(t, j);
        ++row;
      }
  }
  Matrix basis = kernel_basis(sys);
  std::vector<DiagramMap> out;
  for (std::size_t b = 0; b < basis.cols(); ++b) {
    DiagramMap f;
    f.source = x;
    f.target = y;
    for (ObjId a = 0; a < c.num_objects(); ++a) {
      Matrix comp(y.dim[a], x.dim[a]);
      for (std::size_t i = 0; i < y.dim[a]; ++i)
        for (std::size_t j = 0; j < x.dim[a]; ++j)
          comp.at(i, j) = basis.at(offset[a] + i * x.dim[a] + j, b);
      f.component.push_back(std::move(comp));
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace dercalc
