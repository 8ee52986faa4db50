#include "dercalc/fincat.hpp"

#include <algorithm>
#include <set>

namespace dercalc {

std::string ValidationReport::joined() const {
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += "; ";
    s += v;
  }
  return s;
}

MorId FinCategory::compose(MorId g, MorId f) const {
  auto it = compose_table.find(key(g, f));
  if (it == compose_table.end()) {
    throw Error("compose(" + morphisms[g].name + ", " + morphisms[f].name +
                ") is not tabulated in " + name);
  }
  return it->second;
}

std::optional<ObjId> FinCategory::object_by_name(const std::string& n) const {
  for (ObjId i = 0; i < objects.size(); ++i)
    if (objects[i] == n) return i;
  return std::nullopt;
}

std::optional<MorId> FinCategory::morphism_by_name(const std::string& n) const {
  for (MorId i = 0; i < morphisms.size(); ++i)
    if (morphisms[i].name == n) return i;
  return std::nullopt;
}

std::vector<MorId> FinCategory::hom(ObjId a, ObjId b) const {
  std::vector<MorId> out;
  for (MorId m = 0; m < morphisms.size(); ++m)
    if (morphisms[m].src == a && morphisms[m].tgt == b) out.push_back(m);
  return out;
}

bool FinCategory::operator==(const FinCategory& o) const {
  if (objects != o.objects || identity != o.identity) return false;
  if (morphisms.size() != o.morphisms.size()) return false;
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    if (morphisms[i].name != o.morphisms[i].name || morphisms[i].src != o.morphisms[i].src ||
        morphisms[i].tgt != o.morphisms[i].tgt)
      return false;
  }
  return compose_table == o.compose_table;
}

bool same_cat(const CatPtr& a, const CatPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

ValidationReport validate_category(const FinCategory& c) {
  ValidationReport rep;
  const std::size_t n_obj = c.objects.size(), n_mor = c.morphisms.size();
  for (const auto& m : c.morphisms) {
    if (m.src >= n_obj || m.tgt >= n_obj) {
      rep.add("morphism " + m.name + " has endpoints outside the object set");
      return rep;  // later checks would index out of range
    }
  }
  if (c.identity.size() != n_obj) {
    rep.add("identity table has " + std::to_string(c.identity.size()) + " entries for " +
            std::to_string(n_obj) + " objects");
    return rep;
  }
  for (ObjId a = 0; a < n_obj; ++a) {
    MorId id = c.identity[a];
    if (id >= n_mor || c.morphisms[id].src != a || c.morphisms[id].tgt != a)
      rep.add("identity of " + c.objects[a] + " is not an endomorphism of it");
  }

  // compose defined exactly on composable pairs, landing in the right hom-set
  for (MorId g = 0; g < n_mor; ++g)
    for (MorId f = 0; f < n_mor; ++f) {
      auto it = c.compose_table.find(FinCategory::key(g, f));
      if (!c.composable(g, f)) {
        if (it != c.compose_table.end())
          rep.add("compose(" + c.morphisms[g].name + ", " + c.morphisms[f].name +
                  ") tabulated for a non-composable pair");
        continue;
      }
      if (it == c.compose_table.end()) {
        rep.add("compose(" + c.morphisms[g].name + ", " + c.morphisms[f].name + ") missing");
        continue;
      }
      const MorData& gf = c.morphisms[it->second];
      if (gf.src != c.morphisms[f].src || gf.tgt != c.morphisms[g].tgt)
        rep.add("compose(" + c.morphisms[g].name + ", " + c.morphisms[f].name +
                ") lands outside Hom(" + c.objects[c.morphisms[f].src] + ", " +
                c.objects[c.morphisms[g].tgt] + ")");
    }
  if (!rep.ok()) return rep;

  for (MorId f = 0; f < n_mor; ++f) {
    const MorData& m = c.morphisms[f];
    if (c.compose_table.at(FinCategory::key(c.identity[m.tgt], f)) != f)
      rep.add("identity law fails on the left of " + m.name);
    if (c.compose_table.at(FinCategory::key(f, c.identity[m.src])) != f)
      rep.add("identity law fails on the right of " + m.name);
  }

  for (MorId h = 0; h < n_mor; ++h)
    for (MorId g = 0; g < n_mor; ++g) {
      if (!c.composable(h, g)) continue;
      for (MorId f = 0; f < n_mor; ++f) {
        if (!c.composable(g, f)) continue;
        MorId hg = c.compose_table.at(FinCategory::key(h, g));
        MorId gf = c.compose_table.at(FinCategory::key(g, f));
        if (c.compose_table.at(FinCategory::key(hg, f)) !=
            c.compose_table.at(FinCategory::key(h, gf)))
          rep.add("associativity fails on (" + c.morphisms[h].name + ", " + c.morphisms[g].name +
                  ", " + c.morphisms[f].name + ")");
      }
    }

  std::set<std::string> seen;
  for (const auto& o : c.objects)
    if (!seen.insert(o).second) rep.add("duplicate object name " + o);
  seen.clear();
  for (const auto& m : c.morphisms)
    if (!seen.insert(m.name).second) rep.add("duplicate morphism name " + m.name);
  return rep;
}

CatPtr make_category(FinCategory c) {
  if (c.objects.size() > FinCategory::kMaxObjects)
    throw Error("category " + c.name + " exceeds the " +
                std::to_string(FinCategory::kMaxObjects) + "-object guardrail");
  if (c.morphisms.size() > FinCategory::kMaxMorphisms)
    throw Error("category " + c.name + " exceeds the " +
                std::to_string(FinCategory::kMaxMorphisms) + "-morphism guardrail");
  ValidationReport rep = validate_category(c);
  if (!rep.ok()) throw Error("invalid category " + c.name + ": " + rep.joined());
  return std::make_shared<const FinCategory>(std::move(c));
}

// -- standard categories ------------------------------------------------------

CatPtr terminal_category() {
  static CatPtr e = [] {
    FinCategory c;
    c.name = "e";
    c.objects = {"*"};
    c.morphisms = {{"id_*", 0, 0}};
    c.identity = {0};
    c.compose_table[FinCategory::key(0, 0)] = 0;
    return make_category(std::move(c));
  }();
  return e;
}

CatPtr empty_category() {
  static CatPtr c0 = [] {
    FinCategory c;
    c.name = "empty";
    return make_category(std::move(c));
  }();
  return c0;
}

CatPtr poset_category(std::string name, std::vector<std::string> object_names,
                      const std::vector<std::pair<std::string, std::string>>& le_pairs) {
  FinCategory c;
  c.name = std::move(name);
  c.objects = std::move(object_names);
  const std::size_t n = c.objects.size();
  auto idx = [&](const std::string& s) -> ObjId {
    for (ObjId i = 0; i < n; ++i)
      if (c.objects[i] == s) return i;
    throw Error("poset relation mentions unknown object " + s);
  };

  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  for (const auto& [a, b] : le_pairs) le[idx(a)][idx(b)] = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && le[a][b] && le[b][a])
        throw Error("relation table is not antisymmetric: (" + c.objects[a] + ", " +
                    c.objects[b] + ")");
      for (std::size_t d = 0; d < n; ++d)
        if (le[a][b] && le[b][d] && !le[a][d])
          throw Error("relation table is not transitive: missing (" + c.objects[a] + ", " +
                      c.objects[d] + ")");
    }

  std::vector<std::vector<MorId>> mor(n, std::vector<MorId>(n, 0));
  for (ObjId a = 0; a < n; ++a) {
    mor[a][a] = static_cast<MorId>(c.morphisms.size());
    c.morphisms.push_back({"id_" + c.objects[a], a, a});
    c.identity.push_back(mor[a][a]);
  }
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      if (a != b && le[a][b]) {
        mor[a][b] = static_cast<MorId>(c.morphisms.size());
        c.morphisms.push_back({c.objects[a] + "->" + c.objects[b], a, b});
      }
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      if (le[a][b])
        for (ObjId d = 0; d < n; ++d)
          if (le[b][d]) c.compose_table[FinCategory::key(mor[b][d], mor[a][b])] = mor[a][d];
  return make_category(std::move(c));
}

CatPtr ordinal(std::size_t n) {
  std::vector<std::string> objs;
  std::vector<std::pair<std::string, std::string>> rel;
  for (std::size_t i = 0; i <= n; ++i) objs.push_back(std::to_string(i));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) rel.emplace_back(objs[i], objs[j]);
  return poset_category("[" + std::to_string(n) + "]", std::move(objs), rel);
}

CatPtr discrete_category(std::size_t n) {
  std::vector<std::string> objs;
  for (std::size_t i = 0; i < n; ++i) objs.push_back(std::to_string(i));
  return poset_category("discrete(" + std::to_string(n) + ")", std::move(objs), {});
}

CatPtr corner_category() {
  static CatPtr c = poset_category(
      "corner", {"(0,0)", "(1,0)", "(0,1)"}, {{"(0,0)", "(1,0)"}, {"(0,0)", "(0,1)"}});
  return c;
}

CatPtr square_category() {
  static CatPtr c = poset_category("square", {"(0,0)", "(1,0)", "(0,1)", "(1,1)"},
                                   {{"(0,0)", "(1,0)"},
                                    {"(0,0)", "(0,1)"},
                                    {"(1,0)", "(1,1)"},
                                    {"(0,1)", "(1,1)"},
                                    {"(0,0)", "(1,1)"}});
  return c;
}

CatPtr opposite_category(const CatPtr& c) {
  FinCategory o;
  o.name = "op(" + c->name + ")";
  o.objects = c->objects;
  o.identity = c->identity;
  for (const auto& m : c->morphisms) o.morphisms.push_back({m.name, m.tgt, m.src});
  for (const auto& [k, gf] : c->compose_table) {
    MorId g = static_cast<MorId>(k >> 32), f = static_cast<MorId>(k & 0xffffffffu);
    o.compose_table[FinCategory::key(f, g)] = gf;
  }
  return make_category(std::move(o));
}

CatPtr cocone_category(const CatPtr& c) {
  FinCategory o;
  o.name = "cocone(" + c->name + ")";
  o.objects = c->objects;
  o.objects.push_back("inf");
  o.morphisms = c->morphisms;
  o.identity = c->identity;
  o.compose_table = c->compose_table;
  const ObjId apex = static_cast<ObjId>(o.objects.size() - 1);
  std::vector<MorId> to_apex(c->num_objects() + 1, 0);
  for (ObjId a = 0; a < c->num_objects(); ++a) {
    to_apex[a] = static_cast<MorId>(o.morphisms.size());
    o.morphisms.push_back({c->objects[a] + "->inf", a, apex});
  }
  const MorId id_apex = static_cast<MorId>(o.morphisms.size());
  o.morphisms.push_back({"id_inf", apex, apex});
  o.identity.push_back(id_apex);
  to_apex[apex] = id_apex;
  o.compose_table[FinCategory::key(id_apex, id_apex)] = id_apex;
  for (MorId f = 0; f < c->num_morphisms(); ++f) {
    o.compose_table[FinCategory::key(to_apex[c->morphisms[f].tgt], f)] =
        to_apex[c->morphisms[f].src];
  }
  for (ObjId a = 0; a < c->num_objects(); ++a)
    o.compose_table[FinCategory::key(id_apex, to_apex[a])] = to_apex[a];
  return make_category(std::move(o));
}

Product product_category(const CatPtr& a, const CatPtr& b) {
  Product p;
  FinCategory c;
  c.name = "(" + a->name + " x " + b->name + ")";
  p.obj.assign(a->num_objects(), std::vector<ObjId>(b->num_objects(), 0));
  for (ObjId i = 0; i < a->num_objects(); ++i)
    for (ObjId j = 0; j < b->num_objects(); ++j) {
      p.obj[i][j] = static_cast<ObjId>(c.objects.size());
      c.objects.push_back("(" + a->objects[i] + "," + b->objects[j] + ")");
    }
  for (MorId m1 = 0; m1 < a->num_morphisms(); ++m1)
    for (MorId m2 = 0; m2 < b->num_morphisms(); ++m2) {
      p.mor[FinCategory::key(m1, m2)] = static_cast<MorId>(c.morphisms.size());
      c.morphisms.push_back({"(" + a->morphisms[m1].name + "," + b->morphisms[m2].name + ")",
                             p.obj[a->morphisms[m1].src][b->morphisms[m2].src],
                             p.obj[a->morphisms[m1].tgt][b->morphisms[m2].tgt]});
    }
  for (ObjId i = 0; i < a->num_objects(); ++i)
    for (ObjId j = 0; j < b->num_objects(); ++j)
      c.identity.push_back(p.mor_at(a->identity[i], b->identity[j]));
  for (const auto& [k1, gf1] : a->compose_table)
    for (const auto& [k2, gf2] : b->compose_table) {
      MorId g1 = static_cast<MorId>(k1 >> 32), f1 = static_cast<MorId>(k1 & 0xffffffffu);
      MorId g2 = static_cast<MorId>(k2 >> 32), f2 = static_cast<MorId>(k2 & 0xffffffffu);
      c.compose_table[FinCategory::key(p.mor_at(g1, g2), p.mor_at(f1, f2))] = p.mor_at(gf1, gf2);
    }
  p.cat = make_category(std::move(c));
  return p;
}

FinFunctor product_pr1(const Product& p, const CatPtr& a, const CatPtr& b) {
  std::vector<ObjId> obj(p.cat->num_objects());
  std::vector<MorId> mor(p.cat->num_morphisms());
  for (ObjId i = 0; i < a->num_objects(); ++i)
    for (ObjId j = 0; j < b->num_objects(); ++j) obj[p.obj[i][j]] = i;
  for (const auto& [k, m] : p.mor) mor[m] = static_cast<MorId>(k >> 32);
  return make_functor(p.cat, a, std::move(obj), std::move(mor));
}

FinFunctor product_pr2(const Product& p, const CatPtr& a, const CatPtr& b) {
  std::vector<ObjId> obj(p.cat->num_objects());
  std::vector<MorId> mor(p.cat->num_morphisms());
  for (ObjId i = 0; i < a->num_objects(); ++i)
    for (ObjId j = 0; j < b->num_objects(); ++j) obj[p.obj[i][j]] = j;
  for (const auto& [k, m] : p.mor) mor[m] = static_cast<MorId>(k & 0xffffffffu);
  return make_functor(p.cat, b, std::move(obj), std::move(mor));
}

Coproduct coproduct_category(const std::vector<CatPtr>& parts) {
  Coproduct cp;
  FinCategory c;
  c.name = "coproduct";
  cp.obj.resize(parts.size());
  cp.mor.resize(parts.size());
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& part = parts[p];
    const std::string tag = std::to_string(p) + ":";
    for (ObjId i = 0; i < part->num_objects(); ++i) {
      cp.obj[p].push_back(static_cast<ObjId>(c.objects.size()));
      c.objects.push_back(tag + part->objects[i]);
    }
    for (MorId m = 0; m < part->num_morphisms(); ++m) {
      cp.mor[p].push_back(static_cast<MorId>(c.morphisms.size()));
      c.morphisms.push_back(
          {tag + part->morphisms[m].name, cp.obj[p][part->morphisms[m].src],
           cp.obj[p][part->morphisms[m].tgt]});
    }
    for (ObjId i = 0; i < part->num_objects(); ++i)
      c.identity.push_back(cp.mor[p][part->identity[i]]);
    for (const auto& [k, gf] : part->compose_table) {
      MorId g = static_cast<MorId>(k >> 32), f = static_cast<MorId>(k & 0xffffffffu);
      c.compose_table[FinCategory::key(cp.mor[p][g], cp.mor[p][f])] = cp.mor[p][gf];
    }
  }
  cp.cat = make_category(std::move(c));
  return cp;
}

// -- functors ------------------------------------------------------------------

bool FinFunctor::operator==(const FinFunctor& o) const {
  return same_cat(source, o.source) && same_cat(target, o.target) && obj == o.obj && mor == o.mor;
}

ValidationReport validate_functor(const FinFunctor& u) {
  ValidationReport rep;
  if (!u.source || !u.target) {
    rep.add("functor with missing source or target");
    return rep;
  }
  const FinCategory& s = *u.source;
  const FinCategory& t = *u.target;
  if (u.obj.size() != s.num_objects() || u.mor.size() != s.num_morphisms()) {
    rep.add("functor tables do not cover the source category");
    return rep;
  }
  for (ObjId a : u.obj)
    if (a >= t.num_objects()) {
      rep.add("object map leaves the target category");
      return rep;
    }
  for (MorId m : u.mor)
    if (m >= t.num_morphisms()) {
      rep.add("morphism map leaves the target category");
      return rep;
    }
  for (MorId m = 0; m < s.num_morphisms(); ++m) {
    const MorData& d = s.morphisms[m];
    const MorData& im = t.morphisms[u.mor[m]];
    if (im.src != u.obj[d.src] || im.tgt != u.obj[d.tgt])
      rep.add("functor breaks endpoints of " + d.name);
  }
  for (ObjId a = 0; a < s.num_objects(); ++a)
    if (u.mor[s.identity[a]] != t.identity[u.obj[a]])
      rep.add("functor breaks the identity of " + s.objects[a]);
  for (const auto& [k, gf] : s.compose_table) {
    MorId g = static_cast<MorId>(k >> 32), f = static_cast<MorId>(k & 0xffffffffu);
    auto it = t.compose_table.find(FinCategory::key(u.mor[g], u.mor[f]));
    if (it == t.compose_table.end() || u.mor[gf] != it->second)
      rep.add("functor breaks compose(" + s.morphisms[g].name + ", " + s.morphisms[f].name + ")");
  }
  return rep;
}

FinFunctor make_functor(CatPtr source, CatPtr target, std::vector<ObjId> obj,
                        std::vector<MorId> mor) {
  FinFunctor u{std::move(source), std::move(target), std::move(obj), std::move(mor)};
  ValidationReport rep = validate_functor(u);
  if (!rep.ok()) throw Error("invalid functor: " + rep.joined());
  return u;
}

FinFunctor identity_functor(const CatPtr& c) {
  FinFunctor u;
  u.source = u.target = c;
  u.obj.resize(c->num_objects());
  u.mor.resize(c->num_morphisms());
  for (ObjId a = 0; a < c->num_objects(); ++a) u.obj[a] = a;
  for (MorId m = 0; m < c->num_morphisms(); ++m) u.mor[m] = m;
  return u;
}

FinFunctor compose(const FinFunctor& g, const FinFunctor& f) {
  if (!same_cat(f.target, g.source)) throw Error("functor composition: middle categories differ");
  FinFunctor u;
  u.source = f.source;
  u.target = g.target;
  u.obj.reserve(f.obj.size());
  u.mor.reserve(f.mor.size());
  for (ObjId a : f.obj) u.obj.push_back(g.obj[a]);
  for (MorId m : f.mor) u.mor.push_back(g.mor[m]);
  return u;
}

FinFunctor thin_functor(const CatPtr& source, const CatPtr& target, std::vector<ObjId> obj) {
  std::vector<MorId> mor;
  mor.reserve(source->num_morphisms());
  for (const MorData& m : source->morphisms) {
    auto hom = target->hom(obj[m.src], obj[m.tgt]);
    if (hom.size() != 1)
      throw Error("thin_functor: hom-set of " + target->name + " under " + m.name +
                  " is not a singleton");
    mor.push_back(hom[0]);
  }
  return make_functor(source, target, std::move(obj), std::move(mor));
}

FinFunctor classifier(const CatPtr& c, ObjId k) {
  return make_functor(terminal_category(), c, {k}, {c->identity[k]});
}

FinFunctor to_terminal(const CatPtr& c) {
  FinFunctor u;
  u.source = c;
  u.target = terminal_category();
  u.obj.assign(c->num_objects(), 0);
  u.mor.assign(c->num_morphisms(), 0);
  return u;
}

FinFunctor opposite_functor(const FinFunctor& u) {
  FinFunctor o;
  o.source = opposite_category(u.source);
  o.target = opposite_category(u.target);
  o.obj = u.obj;
  o.mor = u.mor;
  return o;
}

FinFunctor product_functor(const Product& src, const Product& dst, const FinFunctor& f1,
                           const FinFunctor& f2) {
  FinFunctor u;
  u.source = src.cat;
  u.target = dst.cat;
  u.obj.resize(src.cat->num_objects());
  u.mor.resize(src.cat->num_morphisms());
  for (std::size_t i = 0; i < src.obj.size(); ++i)
    for (std::size_t j = 0; j < src.obj[i].size(); ++j)
      u.obj[src.obj[i][j]] = dst.obj[f1.obj[i]][f2.obj[j]];
  for (const auto& [k, m] : src.mor) {
    MorId m1 = static_cast<MorId>(k >> 32), m2 = static_cast<MorId>(k & 0xffffffffu);
    u.mor[m] = dst.mor_at(f1.mor[m1], f2.mor[m2]);
  }
  return u;
}

FinFunctor coproduct_injection(const Coproduct& cp, const CatPtr& part, std::size_t index) {
  return make_functor(part, cp.cat, cp.obj[index], cp.mor[index]);
}

// -- natural transformations ----------------------------------------------------

bool FinNatTrans::operator==(const FinNatTrans& o) const {
  return source == o.source && target == o.target && component == o.component;
}

ValidationReport validate_nat(const FinNatTrans& t) {
  ValidationReport rep;
  if (!same_cat(t.source.source, t.target.source) || !same_cat(t.source.target, t.target.target)) {
    rep.add("transformation between non-parallel functors");
    return rep;
  }
  const FinCategory& j = *t.source.source;
  const FinCategory& k = *t.source.target;
  if (t.component.size() != j.num_objects()) {
    rep.add("component table does not cover the domain objects");
    return rep;
  }
  for (ObjId a = 0; a < j.num_objects(); ++a) {
    MorId c = t.component[a];
    if (c >= k.num_morphisms() || k.morphisms[c].src != t.source.obj[a] ||
        k.morphisms[c].tgt != t.target.obj[a]) {
      rep.add("component at " + j.objects[a] + " has the wrong endpoints");
      return rep;
    }
  }
  for (MorId f = 0; f < j.num_morphisms(); ++f) {
    const MorData& d = j.morphisms[f];
    MorId lhs = k.compose(t.target.mor[f], t.component[d.src]);
    MorId rhs = k.compose(t.component[d.tgt], t.source.mor[f]);
    if (lhs != rhs) rep.add("naturality square at " + d.name + " does not commute");
  }
  return rep;
}

FinNatTrans make_nat(FinFunctor source, FinFunctor target, std::vector<MorId> component) {
  FinNatTrans t{std::move(source), std::move(target), std::move(component)};
  ValidationReport rep = validate_nat(t);
  if (!rep.ok()) throw Error("invalid natural transformation: " + rep.joined());
  return t;
}

FinNatTrans identity_nat(const FinFunctor& u) {
  FinNatTrans t;
  t.source = t.target = u;
  for (ObjId a = 0; a < u.source->num_objects(); ++a)
    t.component.push_back(u.target->identity[u.obj[a]]);
  return t;
}

FinNatTrans vcompose(const FinNatTrans& b, const FinNatTrans& a) {
  if (!(a.target == b.source)) throw Error("vertical composition: middle functors differ");
  FinNatTrans t;
  t.source = a.source;
  t.target = b.target;
  const FinCategory& k = *a.source.target;
  for (ObjId x = 0; x < a.component.size(); ++x)
    t.component.push_back(k.compose(b.component[x], a.component[x]));
  return t;
}

FinNatTrans whisker_left(const FinFunctor& h, const FinNatTrans& a) {
  FinNatTrans t;
  t.source = compose(h, a.source);
  t.target = compose(h, a.target);
  for (MorId c : a.component) t.component.push_back(h.mor[c]);
  return t;
}

FinNatTrans whisker_right(const FinNatTrans& a, const FinFunctor& h) {
  FinNatTrans t;
  t.source = compose(a.source, h);
  t.target = compose(a.target, h);
  for (ObjId x = 0; x < h.source->num_objects(); ++x) t.component.push_back(a.component[h.obj[x]]);
  return t;
}

// -- comma categories -------------------------------------------------------------

std::optional<ObjId> CommaResult::find(ObjId j1, ObjId j2, MorId f) const {
  for (ObjId i = 0; i < objects.size(); ++i)
    if (objects[i].j1 == j1 && objects[i].j2 == j2 && objects[i].f == f) return i;
  return std::nullopt;
}

CommaResult comma_category(const FinFunctor& u1, const FinFunctor& u2) {
  if (!same_cat(u1.target, u2.target)) throw Error("comma category of a non-cospan");
  const FinCategory& j1 = *u1.source;
  const FinCategory& j2 = *u2.source;
  const FinCategory& k = *u1.target;

  CommaResult out;
  FinCategory c;
  c.name = "(" + j1.name + "/" + j2.name + ")";
  for (ObjId a = 0; a < j1.num_objects(); ++a)
    for (ObjId b = 0; b < j2.num_objects(); ++b)
      for (MorId f : k.hom(u1.obj[a], u2.obj[b])) {
        out.objects.push_back({a, b, f});
        c.objects.push_back("(" + j1.objects[a] + "," + j2.objects[b] + ";" +
                            k.morphisms[f].name + ")");
      }

  // maps are pairs (g1, g2) with u2(g2)∘f = f'∘u1(g1)
  struct Arrow {
    ObjId src, tgt;
    MorId g1, g2;
  };
  std::vector<Arrow> arrows;
  std::unordered_map<std::uint64_t, std::unordered_map<std::uint64_t, MorId>> lookup;
  for (ObjId s = 0; s < out.objects.size(); ++s)
    for (ObjId t = 0; t < out.objects.size(); ++t) {
      const CommaObject& a = out.objects[s];
      const CommaObject& b = out.objects[t];
      for (MorId g1 : j1.hom(a.j1, b.j1))
        for (MorId g2 : j2.hom(a.j2, b.j2)) {
          if (k.compose(u2.mor[g2], a.f) != k.compose(b.f, u1.mor[g1])) continue;
          MorId id = static_cast<MorId>(c.morphisms.size());
          c.morphisms.push_back(
              {"(" + j1.morphisms[g1].name + "," + j2.morphisms[g2].name + ";" +
                   std::to_string(s) + ")",
               s, t});
          arrows.push_back({s, t, g1, g2});
          lookup[(static_cast<std::uint64_t>(s) << 32) | t][FinCategory::key(g1, g2)] = id;
        }
    }
  c.identity.resize(out.objects.size());
  for (ObjId s = 0; s < out.objects.size(); ++s)
    c.identity[s] = lookup.at((static_cast<std::uint64_t>(s) << 32) | s)
                        .at(FinCategory::key(j1.identity[out.objects[s].j1],
                                             j2.identity[out.objects[s].j2]));
  for (MorId m2 = 0; m2 < arrows.size(); ++m2)
    for (MorId m1 = 0; m1 < arrows.size(); ++m1) {
      if (arrows[m1].tgt != arrows[m2].src) continue;
      MorId g1 = j1.compose(arrows[m2].g1, arrows[m1].g1);
      MorId g2 = j2.compose(arrows[m2].g2, arrows[m1].g2);
      c.compose_table[FinCategory::key(m2, m1)] =
          lookup.at((static_cast<std::uint64_t>(arrows[m1].src) << 32) | arrows[m2].tgt)
              .at(FinCategory::key(g1, g2));
    }
  out.cat = make_category(std::move(c));

  std::vector<ObjId> o1, o2;
  std::vector<MorId> mm1, mm2;
  std::vector<MorId> cell;
  for (const CommaObject& o : out.objects) {
    o1.push_back(o.j1);
    o2.push_back(o.j2);
    cell.push_back(o.f);
  }
  for (const Arrow& a : arrows) {
    mm1.push_back(a.g1);
    mm2.push_back(a.g2);
  }
  out.pr1 = make_functor(out.cat, u1.source, std::move(o1), std::move(mm1));
  out.pr2 = make_functor(out.cat, u2.source, std::move(o2), std::move(mm2));
  out.cell = make_nat(compose(u1, out.pr1), compose(u2, out.pr2), std::move(cell));
  return out;
}

SliceResult comma_over(const FinFunctor& u, ObjId k) {
  SliceResult s{comma_category(u, classifier(u.target, k)), {}, {}};
  s.pr = s.comma.pr1;
  s.pi = s.comma.pr2;
  return s;
}

SliceResult comma_under(ObjId k, const FinFunctor& u) {
  SliceResult s{comma_category(classifier(u.target, k), u), {}, {}};
  s.pr = s.comma.pr2;
  s.pi = s.comma.pr1;
  return s;
}

PullbackResult strict_pullback_category(const FinFunctor& w, const FinFunctor& q) {
  if (!same_cat(w.target, q.target)) throw Error("strict pullback of a non-cospan");
  const FinCategory& cc = *w.source;
  const FinCategory& bb = *q.source;
  PullbackResult out;
  FinCategory a;
  a.name = "(" + cc.name + " x_D " + bb.name + ")";
  for (ObjId c = 0; c < cc.num_objects(); ++c)
    for (ObjId b = 0; b < bb.num_objects(); ++b)
      if (w.obj[c] == q.obj[b]) {
        out.objects.emplace_back(c, b);
        a.objects.push_back("(" + cc.objects[c] + "," + bb.objects[b] + ")");
      }
  struct Arrow {
    ObjId src, tgt;
    MorId g1, g2;
  };
  std::vector<Arrow> arrows;
  for (ObjId s = 0; s < out.objects.size(); ++s)
    for (ObjId t = 0; t < out.objects.size(); ++t)
      for (MorId g1 : cc.hom(out.objects[s].first, out.objects[t].first))
        for (MorId g2 : bb.hom(out.objects[s].second, out.objects[t].second)) {
          if (w.mor[g1] != q.mor[g2]) continue;
          a.morphisms.push_back(
              {"(" + cc.morphisms[g1].name + "," + bb.morphisms[g2].name + ";" +
                   std::to_string(s) + ")",
               s, t});
          arrows.push_back({s, t, g1, g2});
        }
  auto find_arrow = [&](ObjId s, ObjId t, MorId g1, MorId g2) -> MorId {
    for (MorId m = 0; m < arrows.size(); ++m)
      if (arrows[m].src == s && arrows[m].tgt == t && arrows[m].g1 == g1 && arrows[m].g2 == g2)
        return m;
    throw Error("strict pullback: missing arrow");
  };
  for (ObjId s = 0; s < out.objects.size(); ++s)
    a.identity.push_back(
        find_arrow(s, s, cc.identity[out.objects[s].first], bb.identity[out.objects[s].second]));
  for (MorId m2 = 0; m2 < arrows.size(); ++m2)
    for (MorId m1 = 0; m1 < arrows.size(); ++m1) {
      if (arrows[m1].tgt != arrows[m2].src) continue;
      a.compose_table[FinCategory::key(m2, m1)] =
          find_arrow(arrows[m1].src, arrows[m2].tgt, cc.compose(arrows[m2].g1, arrows[m1].g1),
                     bb.compose(arrows[m2].g2, arrows[m1].g2));
    }
  out.cat = make_category(std::move(a));
  std::vector<ObjId> oc, ob;
  std::vector<MorId> mc, mb;
  for (auto& [c, b] : out.objects) {
    oc.push_back(c);
    ob.push_back(b);
  }
  for (const Arrow& ar : arrows) {
    mc.push_back(ar.g1);
    mb.push_back(ar.g2);
  }
  out.to_c = make_functor(out.cat, w.source, std::move(oc), std::move(mc));
  out.to_b = make_functor(out.cat, q.source, std::move(ob), std::move(mb));
  return out;
}

// -- structural predicates ----------------------------------------------------------

BoolWitness is_fully_faithful(const FinFunctor& u) {
  const FinCategory& j = *u.source;
  const FinCategory& k = *u.target;
  for (ObjId a = 0; a < j.num_objects(); ++a)
    for (ObjId b = 0; b < j.num_objects(); ++b) {
      std::vector<MorId> dom = j.hom(a, b);
      std::vector<MorId> cod = k.hom(u.obj[a], u.obj[b]);
      std::vector<MorId> image;
      for (MorId m : dom) image.push_back(u.mor[m]);
      std::sort(image.begin(), image.end());
      if (std::adjacent_find(image.begin(), image.end()) != image.end())
        return {false, "hom-set (" + j.objects[a] + ", " + j.objects[b] + ") collapses"};
      std::sort(cod.begin(), cod.end());
      if (image != cod)
        return {false, "hom-set (" + j.objects[a] + ", " + j.objects[b] + ") is not full"};
    }
  return {true, ""};
}

BoolWitness is_injective_on_objects(const FinFunctor& u) {
  const FinCategory& j = *u.source;
  for (ObjId a = 0; a < j.num_objects(); ++a)
    for (ObjId b = static_cast<ObjId>(a + 1); b < j.num_objects(); ++b)
      if (u.obj[a] == u.obj[b])
        return {false, "objects " + j.objects[a] + " and " + j.objects[b] + " collide"};
  return {true, ""};
}

std::string to_string(SieveKind k) {
  switch (k) {
    case SieveKind::Sieve: return "sieve";
    case SieveKind::Cosieve: return "cosieve";
    case SieveKind::Both: return "both";
    default: return "neither";
  }
}

SieveKind sieve_kind(const FinFunctor& u) {
  if (auto ff = is_fully_faithful(u); !ff)
    throw Error("sieve_kind requires a fully faithful functor: " + ff.witness);
  if (auto inj = is_injective_on_objects(u); !inj)
    throw Error("sieve_kind requires injectivity on objects: " + inj.witness);
  const FinCategory& k = *u.target;
  std::vector<bool> in_image(k.num_objects(), false);
  for (ObjId a : u.obj) in_image[a] = true;
  bool sieve = true, cosieve = true;
  for (const MorData& m : k.morphisms) {
    if (in_image[m.tgt] && !in_image[m.src]) sieve = false;
    if (in_image[m.src] && !in_image[m.tgt]) cosieve = false;
  }
  if (sieve && cosieve) return SieveKind::Both;
  if (sieve) return SieveKind::Sieve;
  if (cosieve) return SieveKind::Cosieve;
  return SieveKind::Neither;
}

BoolWitness check_adjunction(const FinFunctor& l, const FinFunctor& r, const FinNatTrans& unit,
                             const FinNatTrans& counit) {
  if (!same_cat(l.target, r.source) || !same_cat(r.target, l.source))
    throw Error("check_adjunction: functors are not opposed");
  if (!(unit.source == identity_functor(l.source)) || !(unit.target == compose(r, l)))
    throw Error("check_adjunction: unit has the wrong shape");
  if (!(counit.source == compose(l, r)) || !(counit.target == identity_functor(r.source)))
    throw Error("check_adjunction: counit has the wrong shape");

  const FinCategory& a = *r.source;
  const FinCategory& b = *l.source;
  for (ObjId x = 0; x < b.num_objects(); ++x) {
    MorId lhs = a.compose(counit.component[l.obj[x]], l.mor[unit.component[x]]);
    if (lhs != a.identity[l.obj[x]])
      return {false, "triangle (counit l)(l unit) fails at " + b.objects[x]};
  }
  for (ObjId y = 0; y < a.num_objects(); ++y) {
    MorId lhs = b.compose(r.mor[counit.component[y]], unit.component[r.obj[y]]);
    if (lhs != b.identity[r.obj[y]])
      return {false, "triangle (r counit)(unit r) fails at " + a.objects[y]};
  }
  return {true, ""};
}

std::optional<ObjId> extremal_object(const CatPtr& c, Extremal kind) {
  for (ObjId cand = 0; cand < c->num_objects(); ++cand) {
    bool good = true;
    for (ObjId x = 0; x < c->num_objects() && good; ++x) {
      std::size_t n =
          kind == Extremal::Initial ? c->hom(cand, x).size() : c->hom(x, cand).size();
      if (n != 1) good = false;
    }
    if (good) return cand;  // smallest id wins the tie-break
  }
  return std::nullopt;
}

AdjunctionData final_object_adjunction(const CatPtr& c) {
  auto fin = extremal_object(c, Extremal::Final);
  if (!fin) throw Error("category " + c->name + " has no final object");
  AdjunctionData d{to_terminal(c), classifier(c, *fin), {}, {}};
  std::vector<MorId> unit_comp;
  for (ObjId x = 0; x < c->num_objects(); ++x) unit_comp.push_back(c->hom(x, *fin).at(0));
  d.unit = make_nat(identity_functor(c), compose(d.r, d.l), std::move(unit_comp));
  d.counit = make_nat(compose(d.l, d.r), identity_functor(terminal_category()),
                      {terminal_category()->identity[0]});
  return d;
}

AdjunctionData initial_object_adjunction(const CatPtr& c) {
  auto ini = extremal_object(c, Extremal::Initial);
  if (!ini) throw Error("category " + c->name + " has no initial object");
  AdjunctionData d{classifier(c, *ini), to_terminal(c), {}, {}};
  d.unit = make_nat(identity_functor(terminal_category()), compose(d.r, d.l),
                    {terminal_category()->identity[0]});
  std::vector<MorId> counit_comp;
  for (ObjId x = 0; x < c->num_objects(); ++x) counit_comp.push_back(c->hom(*ini, x).at(0));
  d.counit = make_nat(compose(d.l, d.r), identity_functor(c), std::move(counit_comp));
  return d;
}

BoolWitness is_grothendieck_opfibration(const FinFunctor& u) {
  const FinCategory& j = *u.source;
  const FinCategory& k = *u.target;
  for (ObjId a = 0; a < j.num_objects(); ++a) {
    for (MorId g = 0; g < k.num_morphisms(); ++g) {
      if (k.morphisms[g].src != u.obj[a]) continue;
      bool lifted = false;
      for (MorId f = 0; f < j.num_morphisms() && !lifted; ++f) {
        if (j.morphisms[f].src != a || u.mor[f] != g) continue;
        // cocartesian: every h out of a whose image factors through g
        // factors uniquely through f over that factorisation
        bool cocart = true;
        const ObjId a1 = j.morphisms[f].tgt;
        for (MorId h = 0; h < j.num_morphisms() && cocart; ++h) {
          if (j.morphisms[h].src != a) continue;
          for (MorId m : k.hom(u.obj[a1], u.obj[j.morphisms[h].tgt])) {
            if (k.compose(m, g) != u.mor[h]) continue;
            std::size_t count = 0;
            for (MorId cand : j.hom(a1, j.morphisms[h].tgt))
              if (u.mor[cand] == m && j.compose(cand, f) == h) ++count;
            if (count != 1) {
              cocart = false;
              break;
            }
          }
        }
        if (cocart) lifted = true;
      }
      if (!lifted)
        return {false, "no cocartesian lift of " + k.morphisms[g].name + " at " + j.objects[a]};
    }
  }
  return {true, ""};
}

// -- oriented squares -----------------------------------------------------------------

std::string to_string(Orientation o) {
  return o == Orientation::DownLeft ? "down-left" : "up-right";
}

ValidationReport validate_square(const OrientedSquare& s) {
  ValidationReport rep;
  if (!same_cat(s.top.source, s.left.source)) rep.add("top and left do not share a source");
  if (!same_cat(s.top.target, s.right.source)) rep.add("top and right do not meet");
  if (!same_cat(s.left.target, s.bottom.source)) rep.add("left and bottom do not meet");
  if (!same_cat(s.bottom.target, s.right.target)) rep.add("bottom and right do not share a target");
  if (!rep.ok()) return rep;
  FinFunctor qv = compose(s.right, s.top);
  FinFunctor wp = compose(s.bottom, s.left);
  const FinFunctor& want_src = s.orientation == Orientation::DownLeft ? qv : wp;
  const FinFunctor& want_tgt = s.orientation == Orientation::DownLeft ? wp : qv;
  if (!(s.cell.source == want_src) || !(s.cell.target == want_tgt))
    rep.add("cell does not match the " + to_string(s.orientation) + " orientation");
  ValidationReport nat = validate_nat(s.cell);
  for (auto& v : nat.violations) rep.add(v);
  return rep;
}

OrientedSquare make_square(std::string name, FinFunctor top, FinFunctor left, FinFunctor bottom,
                           FinFunctor right, FinNatTrans cell, Orientation orientation) {
  OrientedSquare s{std::move(name), std::move(top),  std::move(left),
                   std::move(bottom), std::move(right), std::move(cell), orientation};
  ValidationReport rep = validate_square(s);
  if (!rep.ok()) throw Error("invalid square " + s.name + ": " + rep.joined());
  return s;
}

OrientedSquare commuting_square(std::string name, FinFunctor top, FinFunctor left,
                                FinFunctor bottom, FinFunctor right, Orientation orientation) {
  FinFunctor qv = compose(right, top);
  FinFunctor wp = compose(bottom, left);
  if (!(qv == wp)) throw Error("square " + name + " does not commute strictly");
  FinNatTrans cell = identity_nat(qv);
  if (orientation == Orientation::UpRight) cell.source = wp;  // equal tables either way
  return make_square(std::move(name), std::move(top), std::move(left), std::move(bottom),
                     std::move(right), std::move(cell), orientation);
}

OrientedSquare paste(const OrientedSquare& s1, const OrientedSquare& s2, PasteDirection dir) {
  if (s1.orientation != s2.orientation) throw Error("paste: orientations disagree");
  const FinCategory* codomain = s2.bottom.target.get();
  (void)codomain;
  if (dir == PasteDirection::Horizontal) {
    if (!(s1.right == s2.left)) throw Error("paste: shared vertical edge differs");
    FinFunctor top = compose(s2.top, s1.top);
    FinFunctor bottom = compose(s2.bottom, s1.bottom);
    const FinCategory& d = *s2.bottom.target;
    std::vector<MorId> comp;
    const std::size_t n = s1.top.source->num_objects();
    comp.reserve(n);
    for (ObjId a = 0; a < n; ++a) {
      if (s1.orientation == Orientation::DownLeft) {
        // w2(alpha1_a) after alpha2_{v1(a)}
        comp.push_back(d.compose(s2.bottom.mor[s1.cell.component[a]],
                                 s2.cell.component[s1.top.obj[a]]));
      } else {
        comp.push_back(d.compose(s2.cell.component[s1.top.obj[a]],
                                 s2.bottom.mor[s1.cell.component[a]]));
      }
    }
    FinNatTrans cell;
    FinFunctor qv = compose(s2.right, top);
    FinFunctor wp = compose(bottom, s1.left);
    if (s1.orientation == Orientation::DownLeft)
      cell = make_nat(qv, wp, std::move(comp));
    else
      cell = make_nat(wp, qv, std::move(comp));
    return make_square(s1.name + "|" + s2.name, std::move(top), s1.left, std::move(bottom),
                       s2.right, std::move(cell), s1.orientation);
  }
  if (!(s1.bottom == s2.top)) throw Error("paste: shared horizontal edge differs");
  FinFunctor left = compose(s2.left, s1.left);
  FinFunctor right = compose(s2.right, s1.right);
  const FinCategory& d = *s2.bottom.target;
  std::vector<MorId> comp;
  const std::size_t n = s1.top.source->num_objects();
  comp.reserve(n);
  for (ObjId a = 0; a < n; ++a) {
    if (s1.orientation == Orientation::DownLeft) {
      // alpha2_{p1(a)} after q2(alpha1_a)
      comp.push_back(
          d.compose(s2.cell.component[s1.left.obj[a]], s2.right.mor[s1.cell.component[a]]));
    } else {
      comp.push_back(
          d.compose(s2.right.mor[s1.cell.component[a]], s2.cell.component[s1.left.obj[a]]));
    }
  }
  FinNatTrans cell;
  FinFunctor qv = compose(right, s1.top);
  FinFunctor wp = compose(s2.bottom, left);
  if (s1.orientation == Orientation::DownLeft)
    cell = make_nat(qv, wp, std::move(comp));
  else
    cell = make_nat(wp, qv, std::move(comp));
  return make_square(s1.name + "/" + s2.name, s1.top, std::move(left), s2.bottom, std::move(right),
                     std::move(cell), s1.orientation);
}

}  // namespace dercalc
