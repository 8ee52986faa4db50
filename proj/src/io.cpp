#include "dercalc/io.hpp"

#include <fstream>
#include <sstream>

namespace dercalc {
namespace io {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(std::size_t lineno, const std::string& what) {
  throw Error("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

const Workspace::Binding* Workspace::find(const std::string& name) const {
  for (const Binding& b : bindings)
    if (b.name == name) return &b;
  return nullptr;
}

namespace {
template <typename T>
const T& expect(const Workspace& ws, const std::string& name, const char* kind) {
  const Workspace::Binding* b = ws.find(name);
  if (!b) throw Error("unknown binding " + name);
  const T* v = std::get_if<T>(&b->value);
  if (!v) throw Error("binding " + name + " is not a " + kind);
  return *v;
}
}  // namespace

CatPtr Workspace::category(const std::string& name) const {
  return expect<CatPtr>(*this, name, "category");
}
FinFunctor Workspace::functor(const std::string& name) const {
  return expect<FinFunctor>(*this, name, "functor");
}
FinNatTrans Workspace::nattrans(const std::string& name) const {
  return expect<FinNatTrans>(*this, name, "nattrans");
}
Diagram Workspace::diagram(const std::string& name) const {
  return expect<Diagram>(*this, name, "diagram");
}
DiagramMap Workspace::diagram_map(const std::string& name) const {
  return expect<DiagramMap>(*this, name, "diagrammap");
}
OrientedSquare Workspace::square(const std::string& name) const {
  return expect<WsSquare>(*this, name, "square").value;
}
DerMorphism Workspace::morphism(const std::string& name) const {
  return expect<WsDerMorphism>(*this, name, "dermorphism").value;
}

bool Workspace::operator==(const Workspace& o) const {
  if (bindings.size() != o.bindings.size()) return false;
  for (std::size_t i = 0; i < bindings.size(); ++i) {
    if (bindings[i].name != o.bindings[i].name) return false;
    const WsValue& a = bindings[i].value;
    const WsValue& b = o.bindings[i].value;
    if (a.index() != b.index()) return false;
    bool eq = std::visit(
        [&](const auto& va) {
          using T = std::decay_t<decltype(va)>;
          const T& vb = std::get<T>(b);
          if constexpr (std::is_same_v<T, CatPtr>) return same_cat(va, vb);
          else if constexpr (std::is_same_v<T, WsSquare>)
            return va.top == vb.top && va.left == vb.left && va.bottom == vb.bottom &&
                   va.right == vb.right && va.cell == vb.cell &&
                   va.value.orientation == vb.value.orientation;
          else if constexpr (std::is_same_v<T, WsDerMorphism>)
            return va.value.kind == vb.value.kind && va.functor_ref == vb.functor_ref &&
                   va.value.space_dim == vb.value.space_dim;
          else return va == vb;
        },
        a);
    if (!eq) return false;
  }
  return true;
}

std::string print_matrix(const Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += " ";
      s += rat_str(m.at(i, j));
    }
    s += "]";
  }
  return s + "]";
}

Matrix parse_matrix(const std::string& text, std::size_t rows, std::size_t cols) {
  std::vector<std::vector<Rational>> grid;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '[') throw Error("matrix must start with [");
  ++i;
  skip_ws();
  while (i < text.size() && text[i] == '[') {
    ++i;
    std::vector<Rational> row;
    std::string tok;
    while (i < text.size() && text[i] != ']') {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        if (!tok.empty()) {
          row.push_back(rat_parse(tok));
          tok.clear();
        }
      } else {
        tok += text[i];
      }
      ++i;
    }
    if (i >= text.size()) throw Error("unterminated matrix row");
    if (!tok.empty()) row.push_back(rat_parse(tok));
    ++i;  // closing row bracket
    grid.push_back(std::move(row));
    skip_ws();
  }
  if (i >= text.size() || text[i] != ']') throw Error("matrix must end with ]");
  if (grid.size() != rows) throw Error("matrix has the wrong number of rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (grid[r].size() != cols) throw Error("matrix row has the wrong number of entries");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = grid[r][c];
  }
  return m;
}

namespace {

struct Parser {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
  std::size_t pos = 0;
  ParseResult out;

  bool done() const { return pos >= lines.size(); }
  const std::vector<std::string>& peek() const { return lines[pos].second; }
  std::size_t lineno() const { return pos < lines.size() ? lines[pos].first : 0; }

  void bind(std::string name, WsValue v) {
    if (out.workspace.find(name)) fail(lineno(), "duplicate binding " + name);
    out.workspace.bindings.push_back({std::move(name), std::move(v)});
  }

  CatPtr need_cat(const std::string& name) {
    const Workspace::Binding* b = out.workspace.find(name);
    if (!b || !std::holds_alternative<CatPtr>(b->value))
      fail(lineno(), "reference to unknown category " + name);
    return std::get<CatPtr>(b->value);
  }

  void parse_category(const std::vector<std::string>& head) {
    if (head.size() != 2) fail(lineno(), "category needs a name");
    ++pos;
    FinCategory c;
    c.name = head[1];
    std::unordered_map<std::string, ObjId> objs;
    std::unordered_map<std::string, MorId> mors;
    while (!done() && peek()[0] != "end") {
      auto t = peek();
      if (t[0] == "object" && t.size() == 2) {
        objs[t[1]] = static_cast<ObjId>(c.objects.size());
        c.objects.push_back(t[1]);
      } else if (t[0] == "morphism" && t.size() == 4) {
        if (!objs.count(t[2]) || !objs.count(t[3])) fail(lineno(), "morphism over unknown object");
        mors[t[1]] = static_cast<MorId>(c.morphisms.size());
        c.morphisms.push_back({t[1], objs[t[2]], objs[t[3]]});
      } else if (t[0] == "identity" && t.size() == 3) {
        if (!objs.count(t[1]) || !mors.count(t[2])) fail(lineno(), "identity over unknown name");
        c.identity.resize(c.objects.size(), 0);
        c.identity[objs[t[1]]] = mors[t[2]];
      } else if (t[0] == "compose" && t.size() == 4) {
        if (!mors.count(t[1]) || !mors.count(t[2]) || !mors.count(t[3]))
          fail(lineno(), "compose over unknown morphism");
        c.compose_table[FinCategory::key(mors[t[1]], mors[t[2]])] = mors[t[3]];
      } else {
        fail(lineno(), "unexpected line in category block");
      }
      ++pos;
    }
    if (done()) fail(lineno(), "unterminated category block");
    ++pos;  // end
    c.identity.resize(c.objects.size(), 0);
    ValidationReport rep = validate_category(c);
    if (c.objects.size() > FinCategory::kMaxObjects ||
        c.morphisms.size() > FinCategory::kMaxMorphisms)
      rep.add("size guardrail exceeded");
    out.report.add("category " + head[1], rep.ok(), rep.joined());
    if (rep.ok()) bind(head[1], std::make_shared<const FinCategory>(std::move(c)));
  }

  void parse_stdcat(const std::vector<std::string>& head) {
    if (head.size() < 3) fail(lineno(), "stdcat needs a name and a constructor");
    const std::string& name = head[1];
    const std::string& ctor = head[2];
    CatPtr c;
    try {
      if (ctor == "terminal") c = terminal_category();
      else if (ctor == "empty") c = empty_category();
      else if (ctor == "ordinal" && head.size() == 4) c = ordinal(std::stoul(head[3]));
      else if (ctor == "discrete" && head.size() == 4) c = discrete_category(std::stoul(head[3]));
      else if (ctor == "corner") c = corner_category();
      else if (ctor == "square") c = square_category();
      else if (ctor == "product" && head.size() == 5)
        c = product_category(need_cat(head[3]), need_cat(head[4])).cat;
      else if (ctor == "coproduct" && head.size() == 5)
        c = coproduct_category({need_cat(head[3]), need_cat(head[4])}).cat;
      else if (ctor == "opposite" && head.size() == 4) c = opposite_category(need_cat(head[3]));
      else if (ctor == "cocone" && head.size() == 4) c = cocone_category(need_cat(head[3]));
      else if (ctor == "poset") {
        // stdcat P poset a b c ; a<=b b<=c
        std::vector<std::string> names;
        std::vector<std::pair<std::string, std::string>> rel;
        std::size_t i = 3;
        for (; i < head.size() && head[i] != ";"; ++i) names.push_back(head[i]);
        for (++i; i < head.size(); ++i) {
          auto sep = head[i].find("<=");
          if (sep == std::string::npos) fail(lineno(), "poset relation must use <=");
          rel.emplace_back(head[i].substr(0, sep), head[i].substr(sep + 2));
        }
        c = poset_category(name, std::move(names), rel);
      } else {
        fail(lineno(), "unknown stdcat constructor " + ctor);
      }
    } catch (const Error& e) {
      out.report.add("stdcat " + name, false, e.what());
      ++pos;
      return;
    }
    out.report.add("stdcat " + name, true);
    bind(name, c);
    ++pos;
  }

  void parse_functor(const std::vector<std::string>& head) {
    if (head.size() != 4) fail(lineno(), "functor needs a name, source and target");
    ++pos;
    CatPtr src = need_cat(head[2]);
    CatPtr tgt = need_cat(head[3]);
    std::vector<ObjId> obj(src->num_objects(), 0);
    std::vector<bool> obj_set(src->num_objects(), false);
    std::vector<MorId> mor(src->num_morphisms(), 0);
    std::vector<bool> mor_set(src->num_morphisms(), false);
    while (!done() && peek()[0] != "end") {
      auto t = peek();
      if (t[0] == "object" && t.size() == 3) {
        auto a = src->object_by_name(t[1]);
        auto b = tgt->object_by_name(t[2]);
        if (!a || !b) fail(lineno(), "functor object line names an unknown object");
        obj[*a] = *b;
        obj_set[*a] = true;
      } else if (t[0] == "morphism" && t.size() == 3) {
        auto f = src->morphism_by_name(t[1]);
        auto g = tgt->morphism_by_name(t[2]);
        if (!f || !g) fail(lineno(), "functor morphism line names an unknown morphism");
        mor[*f] = *g;
        mor_set[*f] = true;
      } else {
        fail(lineno(), "unexpected line in functor block");
      }
      ++pos;
    }
    if (done()) fail(lineno(), "unterminated functor block");
    ++pos;
    std::string missing;
    for (ObjId a = 0; a < src->num_objects(); ++a)
      if (!obj_set[a]) missing = "object " + src->objects[a];
    for (ObjId a = 0; a < src->num_objects(); ++a)
      if (!mor_set[src->identity[a]] && obj_set[a]) {
        mor[src->identity[a]] = tgt->identity[obj[a]];  // identities are forced
        mor_set[src->identity[a]] = true;
      }
    for (MorId f = 0; f < src->num_morphisms(); ++f)
      if (!mor_set[f]) missing = "morphism " + src->morphisms[f].name;
    if (!missing.empty()) {
      out.report.add("functor " + head[1], false, "map not total: " + missing);
      return;
    }
    FinFunctor u{src, tgt, std::move(obj), std::move(mor)};
    ValidationReport rep = validate_functor(u);
    out.report.add("functor " + head[1], rep.ok(), rep.joined());
    if (rep.ok()) bind(head[1], std::move(u));
  }

  void parse_nattrans(const std::vector<std::string>& head) {
    if (head.size() != 4) fail(lineno(), "nattrans needs a name and two functors");
    ++pos;
    const Workspace::Binding* fb = out.workspace.find(head[2]);
    const Workspace::Binding* gb = out.workspace.find(head[3]);
    if (!fb || !gb || !std::holds_alternative<FinFunctor>(fb->value) ||
        !std::holds_alternative<FinFunctor>(gb->value))
      fail(lineno(), "nattrans references unknown functors");
    FinFunctor f = std::get<FinFunctor>(fb->value);
    FinFunctor g = std::get<FinFunctor>(gb->value);
    std::vector<MorId> comp(f.source->num_objects(), 0);
    std::vector<bool> set(f.source->num_objects(), false);
    while (!done() && peek()[0] != "end") {
      auto t = peek();
      if (t[0] == "component" && t.size() == 3) {
        auto a = f.source->object_by_name(t[1]);
        auto m = f.target->morphism_by_name(t[2]);
        if (!a || !m) fail(lineno(), "component names an unknown object or morphism");
        comp[*a] = *m;
        set[*a] = true;
      } else {
        fail(lineno(), "unexpected line in nattrans block");
      }
      ++pos;
    }
    if (done()) fail(lineno(), "unterminated nattrans block");
    ++pos;
    for (ObjId a = 0; a < f.source->num_objects(); ++a)
      if (!set[a]) {
        out.report.add("nattrans " + head[1], false,
                       "missing component at " + f.source->objects[a]);
        return;
      }
    FinNatTrans tr{f, g, std::move(comp)};
    ValidationReport rep = validate_nat(tr);
    out.report.add("nattrans " + head[1], rep.ok(), rep.joined());
    if (rep.ok()) bind(head[1], std::move(tr));
  }

  void parse_diagram(const std::vector<std::string>& head) {
    if (head.size() != 3) fail(lineno(), "diagram needs a name and a shape");
    ++pos;
    CatPtr shape = need_cat(head[2]);
    Diagram x;
    x.shape = shape;
    x.dim.assign(shape->num_objects(), 0);
    std::vector<std::pair<MorId, std::string>> raw;
    while (!done() && peek()[0] != "end") {
      auto t = peek();
      if (t[0] == "dim" && t.size() == 3) {
        auto a = shape->object_by_name(t[1]);
        if (!a) fail(lineno(), "dim names an unknown object");
        x.dim[*a] = std::stoul(t[2]);
      } else if (t[0] == "matrix" && t.size() >= 3) {
        auto m = shape->morphism_by_name(t[1]);
        if (!m) fail(lineno(), "matrix names an unknown morphism");
        std::string body;
        for (std::size_t i = 2; i < t.size(); ++i) body += t[i] + " ";
        raw.emplace_back(*m, body);
      } else {
        fail(lineno(), "unexpected line in diagram block");
      }
      ++pos;
    }
    if (done()) fail(lineno(), "unterminated diagram block");
    ++pos;
    x.mat.resize(shape->num_morphisms());
    std::string err;
    for (MorId m = 0; m < shape->num_morphisms(); ++m) {
      const MorData& d = shape->morphisms[m];
      x.mat[m] = m == shape->identity[d.src] ? Matrix::identity(x.dim[d.src])
                                             : Matrix::zero(x.dim[d.tgt], x.dim[d.src]);
    }
    for (auto& [m, body] : raw) {
      const MorData& d = shape->morphisms[m];
      try {
        x.mat[m] = parse_matrix(body, x.dim[d.tgt], x.dim[d.src]);
      } catch (const std::exception& e) {
        err = std::string("matrix ") + d.name + ": " + e.what();
      }
    }
    ValidationReport rep = validate_diagram(x);
    if (!err.empty()) rep.add(err);
    out.report.add("diagram " + head[1], rep.ok(), rep.joined());
    if (rep.ok()) bind(head[1], std::move(x));
  }

  void parse_diagram_map(const std::vector<std::string>& head) {
    if (head.size() != 4) fail(lineno(), "diagrammap needs a name and two diagrams");
    ++pos;
    const Workspace::Binding* xb = out.workspace.find(head[2]);
    const Workspace::Binding* yb = out.workspace.find(head[3]);
    if (!xb || !yb || !std::holds_alternative<Diagram>(xb->value) ||
        !std::holds_alternative<Diagram>(yb->value))
      fail(lineno(), "diagrammap references unknown diagrams");
    DiagramMap f;
    f.source = std::get<Diagram>(xb->value);
    f.target = std::get<Diagram>(yb->value);
    const CatPtr& shape = f.source.shape;
    f.component.resize(shape->num_objects());
    for (ObjId a = 0; a < shape->num_objects(); ++a)
      f.component[a] = Matrix::zero(f.target.dim[a], f.source.dim[a]);
    std::string err;
    while (!done() && peek()[0] != "end") {
      auto t = peek();
      if (t[0] == "component" && t.size() >= 3) {
        auto a = shape->object_by_name(t[1]);
        if (!a) fail(lineno(), "component names an unknown object");
        std::string body;
        for (std::size_t i = 2; i < t.size(); ++i) body += t[i] + " ";
        try {
          f.component[*a] = parse_matrix(body, f.target.dim[*a], f.source.dim[*a]);
        } catch (const std::exception& e) {
          err = e.what();
        }
      } else {
        fail(lineno(), "unexpected line in diagrammap block");
      }
      ++pos;
    }
    if (done()) fail(lineno(), "unterminated diagrammap block");
    ++pos;
    ValidationReport rep = validate_diagram_map(f);
    if (!err.empty()) rep.add(err);
    out.report.add("diagrammap " + head[1], rep.ok(), rep.joined());
    if (rep.ok()) bind(head[1], std::move(f));
  }

  void parse_square(const std::vector<std::string>& head) {
    // square S top left bottom right cell orientation
    if (head.size() != 8) fail(lineno(), "square needs four functors, a cell, an orientation");
    ++pos;
    WsSquare s;
    s.top = head[2];
    s.left = head[3];
    s.bottom = head[4];
    s.right = head[5];
    s.cell = head[6];
    Orientation orient;
    if (head[7] == "down-left") orient = Orientation::DownLeft;
    else if (head[7] == "up-right") orient = Orientation::UpRight;
    else fail(lineno(), "orientation must be down-left or up-right");
    auto f = [&](const std::string& n) -> std::optional<FinFunctor> {
      const Workspace::Binding* b = out.workspace.find(n);
      if (!b || !std::holds_alternative<FinFunctor>(b->value)) return std::nullopt;
      return std::get<FinFunctor>(b->value);
    };
    auto top = f(s.top), left = f(s.left), bottom = f(s.bottom), right = f(s.right);
    const Workspace::Binding* cb = out.workspace.find(s.cell);
    if (!top || !left || !bottom || !right || !cb ||
        !std::holds_alternative<FinNatTrans>(cb->value))
      fail(lineno(), "square references unknown functors or cell");
    s.value = OrientedSquare{head[1], *top, *left, *bottom, *right,
                             std::get<FinNatTrans>(cb->value), orient};
    ValidationReport rep = validate_square(s.value);
    out.report.add("square " + head[1], rep.ok(), rep.joined());
    if (rep.ok()) bind(head[1], std::move(s));
  }

  void parse_dermorphism(const std::vector<std::string>& head) {
    if (head.size() != 4) fail(lineno(), "dermorphism needs a kind and a parameter");
    ++pos;
    WsDerMorphism m;
    const std::string& kind = head[2];
    if (kind == "tensor_with") {
      m.value = tensor_with(std::stoul(head[3]));
    } else if (kind == "direct_sum_with_constant") {
      m.value = direct_sum_with_constant(std::stoul(head[3]));
    } else {
      const Workspace::Binding* b = out.workspace.find(head[3]);
      if (!b || !std::holds_alternative<FinFunctor>(b->value))
        fail(lineno(), "dermorphism references an unknown functor");
      m.functor_ref = head[3];
      FinFunctor u = std::get<FinFunctor>(b->value);
      if (kind == "pullback_along") m.value = pullback_along(std::move(u));
      else if (kind == "lan_along") m.value = lan_along(std::move(u));
      else if (kind == "ran_along") m.value = ran_along(std::move(u));
      else fail(lineno(), "unknown dermorphism kind " + kind);
    }
    out.report.add("dermorphism " + head[1], true);
    bind(head[1], std::move(m));
  }

  void run(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
      ++n;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      auto toks = tokenize(line);
      if (!toks.empty()) lines.emplace_back(n, std::move(toks));
    }
    while (!done()) {
      const auto& head = peek();
      if (head[0] == "category") parse_category(head);
      else if (head[0] == "stdcat") parse_stdcat(head);
      else if (head[0] == "functor") parse_functor(head);
      else if (head[0] == "nattrans") parse_nattrans(head);
      else if (head[0] == "diagram") parse_diagram(head);
      else if (head[0] == "diagrammap") parse_diagram_map(head);
      else if (head[0] == "square") parse_square(head);
      else if (head[0] == "dermorphism") parse_dermorphism(head);
      else fail(lineno(), "unknown directive " + head[0]);
    }
  }
};

}  // namespace

ParseResult parse_workspace_report(const std::string& text) {
  Parser p;
  p.run(text);
  return std::move(p.out);
}

Workspace parse_workspace(const std::string& text) {
  ParseResult r = parse_workspace_report(text);
  if (!r.report.ok()) {
    for (const CheckLine& l : r.report.lines)
      if (!l.pass) throw Error(l.name + " invalid: " + l.detail);
  }
  return std::move(r.workspace);
}

Workspace parse_workspace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_workspace(buf.str());
}

namespace {

void print_category(std::string& s, const std::string& name, const FinCategory& c) {
  s += "category " + name + "\n";
  for (const auto& o : c.objects) s += "  object " + o + "\n";
  for (const auto& m : c.morphisms)
    s += "  morphism " + m.name + " " + c.objects[m.src] + " " + c.objects[m.tgt] + "\n";
  for (ObjId a = 0; a < c.num_objects(); ++a)
    s += "  identity " + c.objects[a] + " " + c.morphisms[c.identity[a]].name + "\n";
  for (MorId g = 0; g < c.num_morphisms(); ++g)
    for (MorId f = 0; f < c.num_morphisms(); ++f) {
      auto it = c.compose_table.find(FinCategory::key(g, f));
      if (it == c.compose_table.end()) continue;
      s += "  compose " + c.morphisms[g].name + " " + c.morphisms[f].name + " " +
           c.morphisms[it->second].name + "\n";
    }
  s += "end\n";
}

std::string ref_of(const Workspace& ws, const CatPtr& c) {
  for (const auto& b : ws.bindings)
    if (std::holds_alternative<CatPtr>(b.value) && same_cat(std::get<CatPtr>(b.value), c))
      return b.name;
  return c->name;  // best effort; printing stays deterministic
}

std::string ref_of(const Workspace& ws, const FinFunctor& u) {
  for (const auto& b : ws.bindings)
    if (std::holds_alternative<FinFunctor>(b.value) && std::get<FinFunctor>(b.value) == u)
      return b.name;
  return "?";
}

std::string ref_of(const Workspace& ws, const Diagram& x) {
  for (const auto& b : ws.bindings)
    if (std::holds_alternative<Diagram>(b.value) && std::get<Diagram>(b.value) == x)
      return b.name;
  return "?";
}

}  // namespace

std::string print_diagram(const std::string& name, const std::string& shape_ref,
                          const Diagram& x) {
  std::string s = "diagram " + name + " " + shape_ref + "\n";
  const FinCategory& c = *x.shape;
  for (ObjId a = 0; a < c.num_objects(); ++a)
    s += "  dim " + c.objects[a] + " " + std::to_string(x.dim[a]) + "\n";
  for (MorId m = 0; m < c.num_morphisms(); ++m) {
    if (m == c.identity[c.morphisms[m].src]) continue;
    if (x.mat[m].rows() == 0 || x.mat[m].cols() == 0) continue;
    s += "  matrix " + c.morphisms[m].name + " " + print_matrix(x.mat[m]) + "\n";
  }
  return s + "end\n";
}

std::string print_diagram_map(const std::string& name, const std::string& src_ref,
                              const std::string& tgt_ref, const DiagramMap& f) {
  std::string s = "diagrammap " + name + " " + src_ref + " " + tgt_ref + "\n";
  const FinCategory& c = *f.source.shape;
  for (ObjId a = 0; a < c.num_objects(); ++a) {
    if (f.component[a].rows() == 0 || f.component[a].cols() == 0) continue;
    s += "  component " + c.objects[a] + " " + print_matrix(f.component[a]) + "\n";
  }
  return s + "end\n";
}

std::string print_workspace(const Workspace& ws) {
  std::string s;
  for (const auto& b : ws.bindings) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, CatPtr>) {
            print_category(s, b.name, *v);
          } else if constexpr (std::is_same_v<T, FinFunctor>) {
            s += "functor " + b.name + " " + ref_of(ws, v.source) + " " + ref_of(ws, v.target) +
                 "\n";
            for (ObjId a = 0; a < v.source->num_objects(); ++a)
              s += "  object " + v.source->objects[a] + " " + v.target->objects[v.obj[a]] + "\n";
            for (MorId m = 0; m < v.source->num_morphisms(); ++m) {
              if (m == v.source->identity[v.source->morphisms[m].src]) continue;
              s += "  morphism " + v.source->morphisms[m].name + " " +
                   v.target->morphisms[v.mor[m]].name + "\n";
            }
            s += "end\n";
          } else if constexpr (std::is_same_v<T, FinNatTrans>) {
            s += "nattrans " + b.name + " " + ref_of(ws, v.source) + " " + ref_of(ws, v.target) +
                 "\n";
            for (ObjId a = 0; a < v.source.source->num_objects(); ++a)
              s += "  component " + v.source.source->objects[a] + " " +
                   v.source.target->morphisms[v.component[a]].name + "\n";
            s += "end\n";
          } else if constexpr (std::is_same_v<T, Diagram>) {
            s += print_diagram(b.name, ref_of(ws, v.shape), v);
          } else if constexpr (std::is_same_v<T, DiagramMap>) {
            s += print_diagram_map(b.name, ref_of(ws, v.source), ref_of(ws, v.target), v);
          } else if constexpr (std::is_same_v<T, WsSquare>) {
            s += "square " + b.name + " " + v.top + " " + v.left + " " + v.bottom + " " +
                 v.right + " " + v.cell + " " + to_string(v.value.orientation) + "\n";
          } else if constexpr (std::is_same_v<T, WsDerMorphism>) {
            s += "dermorphism " + b.name + " " + to_string(v.value.kind) + " " +
                 (v.functor_ref.empty() ? std::to_string(v.value.space_dim) : v.functor_ref) +
                 "\n";
          }
        },
        b.value);
  }
  return s;
}

std::string to_dot(const CatPtr& c) {
  std::string s = "digraph category {\n";
  for (ObjId a = 0; a < c->num_objects(); ++a)
    s += "  n" + std::to_string(a) + " [label=\"" + c->objects[a] + "\"];\n";
  for (MorId m = 0; m < c->num_morphisms(); ++m) {
    const MorData& d = c->morphisms[m];
    if (m == c->identity[d.src]) continue;
    s += "  n" + std::to_string(d.src) + " -> n" + std::to_string(d.tgt) + " [label=\"" +
         d.name + "\"];\n";
  }
  return s + "}\n";
}

std::string to_dot(const Diagram& x) {
  const FinCategory& c = *x.shape;
  std::string s = "digraph diagram {\n";
  for (ObjId a = 0; a < c.num_objects(); ++a)
    s += "  n" + std::to_string(a) + " [label=\"" + c.objects[a] + " : Q^" +
         std::to_string(x.dim[a]) + "\"];\n";
  for (MorId m = 0; m < c.num_morphisms(); ++m) {
    const MorData& d = c.morphisms[m];
    if (m == c.identity[d.src]) continue;
    s += "  n" + std::to_string(d.src) + " -> n" + std::to_string(d.tgt) + " [label=\"" +
         print_matrix(x.mat[m]) + "\"];\n";
  }
  return s + "}\n";
}

}  // namespace io
}  // namespace dercalc
