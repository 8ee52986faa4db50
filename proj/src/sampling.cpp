#include "dercalc/sampling.hpp"

#include <algorithm>

namespace dercalc {

Matrix random_matrix(std::size_t rows, std::size_t cols, SplitMix64& rng, const Policy& pol) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = rat(rng.int_in(pol.entry_min, pol.entry_max));
  return m;
}

Matrix random_injective_matrix(std::size_t rows, std::size_t cols, SplitMix64& rng,
                               const Policy& pol) {
  if (cols > rows) throw Error("no injective matrix with cols > rows");
  for (int attempt = 0; attempt < 256; ++attempt) {
    Matrix m = random_matrix(rows, cols, rng, pol);
    if (rank(m) == cols) return m;
  }
  Matrix m = Matrix::zero(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) m.at(j, j) = 1;
  return m;
}

namespace {

// f is indecomposable when it is not g∘h for non-identity g, h. Morphisms the
// indecomposables fail to generate (endomorphisms and the like) are appended
// so the closure below always terminates.
std::vector<MorId> generator_set(const FinCategory& c) {
  std::vector<bool> decomposable(c.num_morphisms(), false);
  for (const auto& [k, gf] : c.compose_table) {
    MorId g = static_cast<MorId>(k >> 32), f = static_cast<MorId>(k & 0xffffffffu);
    if (g != c.identity[c.morphisms[g].src] && f != c.identity[c.morphisms[f].src])
      decomposable[gf] = true;
  }
  std::vector<MorId> gens;
  std::vector<bool> reached(c.num_morphisms(), false);
  for (ObjId a = 0; a < c.num_objects(); ++a) reached[c.identity[a]] = true;
  for (MorId m = 0; m < c.num_morphisms(); ++m)
    if (!decomposable[m] && !reached[m]) {
      gens.push_back(m);
      reached[m] = true;
    }
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& [k, gf] : c.compose_table) {
      if (reached[gf]) continue;
      if (reached[static_cast<MorId>(k >> 32)] && reached[static_cast<MorId>(k & 0xffffffffu)]) {
        reached[gf] = true;
        progress = true;
      }
    }
  }
  for (MorId m = 0; m < c.num_morphisms(); ++m)
    if (!reached[m]) gens.push_back(m);
  std::sort(gens.begin(), gens.end());
  return gens;
}

struct PathEnum {
  const FinCategory& c;
  const std::vector<MorId>& gens;

  // Generator paths from -> to that revisit no object.
  std::vector<std::vector<MorId>> paths(ObjId from, ObjId to) const {
    std::vector<std::vector<MorId>> out;
    std::vector<bool> visited(c.num_objects(), false);
    std::vector<MorId> cur;
    walk(from, to, visited, cur, out);
    return out;
  }

 private:
  void walk(ObjId at, ObjId to, std::vector<bool>& visited, std::vector<MorId>& cur,
            std::vector<std::vector<MorId>>& out) const {
    visited[at] = true;
    for (MorId g : gens) {
      if (c.morphisms[g].src != at) continue;
      ObjId nxt = c.morphisms[g].tgt;
      if (visited[nxt]) continue;
      cur.push_back(g);
      if (nxt == to) out.push_back(cur);
      walk(nxt, to, visited, cur, out);
      cur.pop_back();
    }
    visited[at] = false;
  }
};

Matrix vec_col_major(const Matrix& m) {
  Matrix v(m.rows() * m.cols(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.at(j * m.rows() + i, 0) = m.at(i, j);
  return v;
}

}  // namespace

Diagram random_diagram(const CatPtr& shape, SplitMix64& rng, const Policy& pol) {
  const FinCategory& c = *shape;
  const std::vector<MorId> gens = generator_set(c);

  for (int attempt = 0; attempt < 512; ++attempt) {
    Diagram x;
    x.shape = shape;
    x.dim.resize(c.num_objects());
    for (auto& d : x.dim) d = static_cast<std::size_t>(rng.below(pol.max_dim + 1));

    // spanning forest of the generator graph, grown in deterministic order
    std::vector<bool> in_tree_obj(c.num_objects(), false);
    std::vector<bool> in_tree(gens.size(), false);
    for (ObjId root = 0; root < c.num_objects(); ++root) {
      if (in_tree_obj[root]) continue;
      in_tree_obj[root] = true;
      bool grew = true;
      while (grew) {
        grew = false;
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
          const MorData& m = c.morphisms[gens[gi]];
          if (in_tree[gi] || in_tree_obj[m.src] == in_tree_obj[m.tgt]) continue;
          in_tree[gi] = true;
          in_tree_obj[m.src] = in_tree_obj[m.tgt] = true;
          grew = true;
        }
      }
    }

    std::vector<std::optional<Matrix>> assigned(c.num_morphisms());
    for (std::size_t gi = 0; gi < gens.size(); ++gi)
      if (in_tree[gi]) {
        const MorData& m = c.morphisms[gens[gi]];
        assigned[gens[gi]] = random_matrix(x.dim[m.tgt], x.dim[m.src], rng, pol);
      }

    // complete the remaining generators from parallel-path constraints
    PathEnum pe{c, gens};
    bool bad = false;
    for (std::size_t gi = 0; gi < gens.size() && !bad; ++gi) {
      if (in_tree[gi]) continue;
      const MorId g = gens[gi];
      const MorData& gm = c.morphisms[g];
      const std::size_t nvars = x.dim[gm.tgt] * x.dim[gm.src];
      Matrix sys(0, nvars), rhs(0, 1);
      for (ObjId from = 0; from < c.num_objects() && !bad; ++from)
        for (ObjId to = 0; to < c.num_objects() && !bad; ++to) {
          if (from == to) continue;
          auto paths = pe.paths(from, to);
          if (paths.size() < 2) continue;
          std::optional<Matrix> known;
          std::vector<std::pair<Matrix, Matrix>> through;  // (after, before) around g
          for (const auto& p : paths) {
            Matrix before = Matrix::identity(x.dim[from]);
            Matrix after;
            bool seen_g = false, usable = true;
            for (MorId e : p) {
              if (e == g) {
                if (seen_g) {
                  usable = false;
                  break;
                }
                seen_g = true;
                after = Matrix::identity(x.dim[c.morphisms[e].tgt]);
                continue;
              }
              if (!assigned[e]) {
                usable = false;
                break;
              }
              if (seen_g)
                after = *assigned[e] * after;
              else
                before = *assigned[e] * before;
            }
            if (!usable) continue;
            if (!seen_g) {
              if (known && !(*known == before)) {
                bad = true;
                break;
              }
              known = before;
            } else {
              through.emplace_back(after, before);
            }
          }
          if (bad || !known) continue;
          for (auto& [a, b] : through) {
            // vec(A G B) = (B^T kron A) vec(G), column-major
            sys = sys.rows() == 0 ? kronecker(b.transposed(), a)
                                  : vstack(sys, kronecker(b.transposed(), a));
            rhs = rhs.rows() == 0 ? vec_col_major(*known) : vstack(rhs, vec_col_major(*known));
          }
        }
      if (bad) continue;
      Matrix gmat(x.dim[gm.tgt], x.dim[gm.src]);
      if (sys.rows() == 0) {
        gmat = random_matrix(x.dim[gm.tgt], x.dim[gm.src], rng, pol);
      } else {
        auto sol = solve(sys, rhs);
        if (!sol) {
          bad = true;
          continue;
        }
        for (std::size_t i = 0; i < gmat.rows(); ++i)
          for (std::size_t j = 0; j < gmat.cols(); ++j)
            gmat.at(i, j) = sol->at(j * gmat.rows() + i, 0);
      }
      assigned[g] = std::move(gmat);
    }
    if (bad) continue;

    x.mat.assign(c.num_morphisms(), Matrix());
    std::vector<bool> set(c.num_morphisms(), false);
    for (ObjId a = 0; a < c.num_objects(); ++a) {
      x.mat[c.identity[a]] = Matrix::identity(x.dim[a]);
      set[c.identity[a]] = true;
    }
    for (MorId g : gens) {
      x.mat[g] = *assigned[g];
      set[g] = true;
    }
    bool progress = true;
    while (progress) {
      progress = false;
      for (const auto& [k, gf] : c.compose_table) {
        if (set[gf]) continue;
        MorId g = static_cast<MorId>(k >> 32), f = static_cast<MorId>(k & 0xffffffffu);
        if (!set[g] || !set[f]) continue;
        x.mat[gf] = x.mat[g] * x.mat[f];
        set[gf] = true;
        progress = true;
      }
    }
    if (std::find(set.begin(), set.end(), false) != set.end()) continue;
    if (validate_diagram(x).ok()) return x;
  }
  // unreachable for the corpus shapes; keep callers total anyway
  return constant_diagram(shape, 1);
}

DiagramMap random_diagram_map(const Diagram& x, const Diagram& y, SplitMix64& rng,
                              const Policy& pol) {
  std::vector<DiagramMap> basis = hom_space(x, y);
  DiagramMap f = zero_map(x, y);
  for (const DiagramMap& b : basis) {
    long coeff = rng.int_in(pol.entry_min, pol.entry_max);
    if (coeff == 0) continue;
    for (std::size_t a = 0; a < f.component.size(); ++a)
      for (std::size_t i = 0; i < f.component[a].rows(); ++i)
        for (std::size_t j = 0; j < f.component[a].cols(); ++j)
          f.component[a].at(i, j) += rat(coeff) * b.component[a].at(i, j);
  }
  return f;
}

}  // namespace dercalc
