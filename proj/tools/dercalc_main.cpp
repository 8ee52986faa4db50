// Batch front-end: parse workspaces, run the calculus, emit reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "dercalc/io.hpp"

using namespace dercalc;

namespace {

struct Output {
  std::string format = "text";
  std::string path;

  int emit(const std::string& text, const nlohmann::json& json, bool ok) const {
    std::string body = format == "json" ? json.dump(2) + "\n" : text;
    if (path.empty()) {
      std::cout << body;
    } else {
      std::ofstream out(path);
      if (!out) {
        std::cerr << "cannot write " << path << "\n";
        return 2;
      }
      out << body;
    }
    return ok ? 0 : 1;
  }
};

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", out.path, "write the report to a file");
}

void add_policy_flags(CLI::App* cmd, Policy& pol) {
  cmd->add_option("--seed", pol.seed, "sampling seed");
  cmd->add_option("--samples", pol.samples, "number of random diagrams per check");
  cmd->add_option("--max-dim", pol.max_dim, "largest sampled dimension");
}

nlohmann::json matrix_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json diagram_json(const Diagram& x) {
  nlohmann::json j;
  j["shape"] = x.shape->name;
  for (ObjId a = 0; a < x.shape->num_objects(); ++a)
    j["dim"][x.shape->objects[a]] = x.dim[a];
  for (MorId m = 0; m < x.shape->num_morphisms(); ++m)
    j["matrices"][x.shape->morphisms[m].name] = matrix_json(x.mat[m]);
  return j;
}

nlohmann::json map_json(const DiagramMap& f) {
  nlohmann::json j;
  j["source"] = diagram_json(f.source);
  j["target"] = diagram_json(f.target);
  for (ObjId a = 0; a < f.source.shape->num_objects(); ++a)
    j["components"][f.source.shape->objects[a]] = matrix_json(f.component[a]);
  return j;
}

nlohmann::json report_json(const Report& rep) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckLine& l : rep.lines)
    checks.push_back({{"name", l.name}, {"pass", l.pass}, {"detail", l.detail}});
  return {{"pass", rep.ok()}, {"checks", checks}};
}

std::string report_text(const Report& rep) {
  std::string s;
  for (const CheckLine& l : rep.lines) {
    s += std::string(l.pass ? "[pass] " : "[FAIL] ") + l.name;
    if (!l.detail.empty()) s += " -- " + l.detail;
    s += "\n";
  }
  s += rep.ok() ? "OK\n" : "FAILURES\n";
  return s;
}

KanSide parse_side(const std::string& s) {
  return s == "right" ? KanSide::Right : KanSide::Left;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dercalc: finite-scale calculus of half derivators over exact rationals"};
  app.require_subcommand(1);

  std::string ws_path, side = "left";
  std::vector<std::string> names;
  Policy pol;
  Output out;

  auto* validate = app.add_subcommand("validate", "validate every binding in a workspace");
  validate->add_option("workspace", ws_path)->required();
  add_output_flags(validate, out);

  auto* comma = app.add_subcommand("comma", "comma category of a cospan of functors");
  comma->add_option("workspace", ws_path)->required();
  comma->add_option("names", names, "u v")->expected(2);
  add_output_flags(comma, out);

  auto* kan = app.add_subcommand("kan", "left or right Kan extension with witnesses");
  kan->add_option("workspace", ws_path)->required();
  kan->add_option("names", names, "functor diagram")->expected(2);
  kan->add_option("--side", side, "left|right")->check(CLI::IsMember({"left", "right"}));
  add_output_flags(kan, out);

  auto* mate = app.add_subcommand("mate", "mate component of an oriented square at a diagram");
  mate->add_option("workspace", ws_path)->required();
  mate->add_option("names", names, "square diagram")->expected(2);
  mate->add_option("--side", side, "left|right")->check(CLI::IsMember({"left", "right"}));
  add_output_flags(mate, out);

  auto* exact = app.add_subcommand("exact-check", "sampled exactness verdict for a square");
  exact->add_option("workspace", ws_path)->required();
  exact->add_option("names", names, "square")->expected(1);
  exact->add_option("--side", side, "left|right")->check(CLI::IsMember({"left", "right"}));
  add_policy_flags(exact, pol);
  add_output_flags(exact, out);

  auto* extzero = app.add_subcommand("ext-zero", "extension by zero along a (co)sieve");
  extzero->add_option("workspace", ws_path)->required();
  extzero->add_option("names", names, "functor diagram")->expected(2);
  add_output_flags(extzero, out);

  auto* cof = app.add_subcommand("cofiber", "cofibre of a coherent map");
  cof->add_option("workspace", ws_path)->required();
  cof->add_option("names", names, "diagram on [1]")->expected(1);
  add_output_flags(cof, out);

  auto* exc = app.add_subcommand("exc-adjoint", "exceptional right adjoint at i_[1]");
  exc->add_option("workspace", ws_path)->required();
  exc->add_option("names", names, "diagram on the corner")->expected(1);
  add_output_flags(exc, out);

  auto* k0 = app.add_subcommand("k0-check", "K0 additivity on a cocartesian square");
  k0->add_option("workspace", ws_path)->required();
  k0->add_option("names", names, "diagram on the square")->expected(1);
  add_output_flags(k0, out);

  auto* coc = app.add_subcommand("cocontinuous", "cocontinuity of a derivator morphism");
  coc->add_option("workspace", ws_path)->required();
  coc->add_option("names", names, "dermorphism functor")->expected(2);
  add_policy_flags(coc, pol);
  add_output_flags(coc, out);

  auto* corpus_cmd = app.add_subcommand("corpus", "run the full acceptance corpus");
  add_policy_flags(corpus_cmd, pol);
  bool summary = false;
  corpus_cmd->add_flag("--summary", summary, "print only section verdicts and failures");
  add_output_flags(corpus_cmd, out);

  auto* dot = app.add_subcommand("emit-dot", "graph description of a category or diagram");
  dot->add_option("workspace", ws_path)->required();
  dot->add_option("names", names, "binding")->expected(1);
  add_output_flags(dot, out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      std::ifstream in(ws_path);
      if (!in) throw Error("cannot open " + ws_path);
      std::stringstream buf;
      buf << in.rdbuf();
      io::ParseResult r = io::parse_workspace_report(buf.str());
      return out.emit(report_text(r.report), report_json(r.report), r.report.ok());
    }

    if (corpus_cmd->parsed()) {
      CorpusReport rep = run_corpus(pol);
      return out.emit(render_text(rep, !summary), nlohmann::json::parse(render_json(rep)),
                      rep.ok());
    }

    io::Workspace ws = io::parse_workspace_file(ws_path);

    if (comma->parsed()) {
      CommaResult c = comma_category(ws.functor(names[0]), ws.functor(names[1]));
      io::Workspace result;
      result.bindings.push_back({"comma", c.cat});
      std::string text = io::print_workspace(result);
      text += "# pr1 -> " + c.pr1.target->name + ", pr2 -> " + c.pr2.target->name + "\n";
      for (ObjId o = 0; o < c.objects.size(); ++o)
        text += "# object " + c.cat->objects[o] + "\n";
      nlohmann::json j;
      j["objects"] = c.cat->num_objects();
      j["morphisms"] = c.cat->num_morphisms();
      j["workspace"] = io::print_workspace(result);
      return out.emit(text, j, true);
    }

    if (kan->parsed()) {
      FinFunctor u = ws.functor(names[0]);
      Diagram x = ws.diagram(names[1]);
      KanResult r = side == "left" ? lan(u, x) : ran(u, x);
      std::string text = io::print_diagram("output", r.output.shape->name, r.output);
      text += io::print_diagram_map(side == "left" ? "unit" : "counit", "-", "-", r.comparison);
      for (const auto& p : r.points) {
        text += "# point " + u.target->objects[p.k] + ": dim " + std::to_string(p.dim) + ", " +
                std::to_string(p.comma_objects.size()) + " comma objects\n";
        for (std::size_t i = 0; i < p.legs.size(); ++i)
          text += "#   leg " + std::to_string(i) + " " + io::print_matrix(p.legs[i]) + "\n";
      }
      nlohmann::json j;
      j["side"] = side;
      j["output"] = diagram_json(r.output);
      j["comparison"] = map_json(r.comparison);
      j["points"] = nlohmann::json::array();
      for (const auto& p : r.points) {
        nlohmann::json pj;
        pj["object"] = u.target->objects[p.k];
        pj["dim"] = p.dim;
        pj["legs"] = nlohmann::json::array();
        for (const Matrix& leg : p.legs) pj["legs"].push_back(matrix_json(leg));
        j["points"].push_back(std::move(pj));
      }
      return out.emit(text, j, true);
    }

    if (mate->parsed()) {
      DiagramMap m = mate_component(ws.square(names[0]), parse_side(side), ws.diagram(names[1]));
      return out.emit(io::print_diagram_map("mate", "-", "-", m), map_json(m), true);
    }

    if (exact->parsed()) {
      ExactnessVerdict v = check_exact(ws.square(names[0]), parse_side(side), pol);
      std::string text = std::string(v.pass ? "[PASS] " : "[FAIL] ") + v.square + " (" +
                         to_string(v.side) + " mate, " + std::to_string(v.samples) +
                         " samples, seed " + std::to_string(v.seed) + ")\n# " + v.note + "\n";
      if (!v.pass) {
        text += "witness object: " + v.witness_object + "\n";
        text += io::print_diagram("witness", v.witness->shape->name, *v.witness);
      }
      nlohmann::json j;
      j["square"] = v.square;
      j["side"] = to_string(v.side);
      j["pass"] = v.pass;
      j["samples"] = v.samples;
      j["seed"] = v.seed;
      j["note"] = v.note;
      if (!v.pass) {
        j["witness_object"] = v.witness_object;
        j["witness"] = diagram_json(*v.witness);
      }
      return out.emit(text, j, v.pass);
    }

    if (extzero->parsed()) {
      ExtendByZeroResult r = extend_by_zero(ws.functor(names[0]), ws.diagram(names[1]));
      std::string text = io::print_diagram("output", r.output.shape->name, r.output);
      text += "# side: " + to_string(r.side) + "\n";
      nlohmann::json j;
      j["side"] = to_string(r.side);
      j["output"] = diagram_json(r.output);
      j["image_comparison"] = map_json(r.image_comparison);
      return out.emit(text, j, true);
    }

    if (cof->parsed()) {
      CofiberResult r = cofiber(ws.diagram(names[0]));
      std::string text;
      text += io::print_diagram("intermediate", "corner", r.intermediate);
      text += io::print_diagram("output", "square", r.output);
      text += "# cofibre dimension " + std::to_string(cofiber_dim(r)) + "\n";
      nlohmann::json j;
      j["intermediate"] = diagram_json(r.intermediate);
      j["output"] = diagram_json(r.output);
      j["cofiber_dim"] = cofiber_dim(r);
      j["cocartesian_witness"] = map_json(r.cocartesian_witness);
      j["restriction_witness"] = map_json(r.restriction_witness);
      return out.emit(text, j, true);
    }

    if (exc->parsed()) {
      ExceptionalAdjointResult r = exceptional_right_adjoint_i1(ws.diagram(names[0]));
      std::string text = io::print_diagram("output", "[1]", r.output);
      text += "# kernel inclusion " + io::print_matrix(r.kernel_inclusion) + "\n";
      nlohmann::json j;
      j["output"] = diagram_json(r.output);
      j["kernel_inclusion"] = matrix_json(r.kernel_inclusion);
      j["ran_route"] = diagram_json(r.ran_route);
      j["route_iso"] = map_json(r.route_iso);
      return out.emit(text, j, true);
    }

    if (k0->parsed()) {
      K0Report r = k0_additivity_check(ws.diagram(names[0]));
      bool ok = r.cocartesian && r.zero_corner && (!r.mono || (r.additivity && *r.additivity));
      std::string text = std::string(ok ? "[PASS] " : "[FAIL] ") + r.note + "\n";
      nlohmann::json j;
      j["cocartesian"] = r.cocartesian;
      j["zero_corner"] = r.zero_corner;
      j["mono"] = r.mono;
      if (r.additivity) j["additivity"] = *r.additivity;
      j["dims"] = {{"A", r.dim_a}, {"B", r.dim_b}, {"C", r.dim_c}};
      j["note"] = r.note;
      return out.emit(text, j, ok);
    }

    if (coc->parsed()) {
      CocontinuityVerdict v = is_cocontinuous(ws.morphism(names[0]), ws.functor(names[1]), pol);
      bool ok = v.along_u && v.along_projections;
      std::string text = std::string(ok ? "[PASS] " : "[FAIL] ") + "cocontinuity of " +
                         names[0] + " along " + names[1] + " (" + std::to_string(v.samples) +
                         " samples)\n";
      if (!v.witness.empty()) text += "# " + v.witness + "\n";
      nlohmann::json j;
      j["along_u"] = v.along_u;
      j["along_projections"] = v.along_projections;
      j["samples"] = v.samples;
      j["witness"] = v.witness;
      return out.emit(text, j, ok);
    }

    if (dot->parsed()) {
      const io::Workspace::Binding* b = ws.find(names[0]);
      if (!b) throw Error("unknown binding " + names[0]);
      std::string text;
      if (const CatPtr* c = std::get_if<CatPtr>(&b->value)) text = io::to_dot(*c);
      else if (const Diagram* d = std::get_if<Diagram>(&b->value)) text = io::to_dot(*d);
      else throw Error("emit-dot expects a category or a diagram");
      return out.emit(text, nlohmann::json{{"dot", text}}, true);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
