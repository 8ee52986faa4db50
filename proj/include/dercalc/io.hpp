#pragma once

#include <variant>

#include "dercalc/corpus.hpp"

namespace dercalc {
namespace io {

// A square or morphism binding remembers the names it was assembled from so
// printing reproduces the source form.
struct WsSquare {
  OrientedSquare value;
  std::string top, left, bottom, right, cell;
};

struct WsDerMorphism {
  DerMorphism value;
  std::string functor_ref;  // empty for the tensor kinds
};

using WsValue =
    std::variant<CatPtr, FinFunctor, FinNatTrans, Diagram, DiagramMap, WsSquare, WsDerMorphism>;

struct Workspace {
  struct Binding {
    std::string name;
    WsValue value;
  };
  std::vector<Binding> bindings;

  const Binding* find(const std::string& name) const;
  CatPtr category(const std::string& name) const;
  FinFunctor functor(const std::string& name) const;
  FinNatTrans nattrans(const std::string& name) const;
  Diagram diagram(const std::string& name) const;
  DiagramMap diagram_map(const std::string& name) const;
  OrientedSquare square(const std::string& name) const;
  DerMorphism morphism(const std::string& name) const;

  bool operator==(const Workspace& o) const;
};

struct ParseResult {
  Workspace workspace;
  Report report;  // semantic validation results, one line per binding
};

// Lenient parse: syntax errors throw (with the line number); semantic
// violations land in the report and the offending binding is dropped.
ParseResult parse_workspace_report(const std::string& text);
// Strict parse: any violation throws.
Workspace parse_workspace(const std::string& text);
Workspace parse_workspace_file(const std::string& path);

// Canonical form; parse(print(ws)) == ws.
std::string print_workspace(const Workspace& ws);

std::string print_matrix(const Matrix& m);
Matrix parse_matrix(const std::string& text, std::size_t rows, std::size_t cols);

std::string print_diagram(const std::string& name, const std::string& shape_ref,
                          const Diagram& x);
std::string print_diagram_map(const std::string& name, const std::string& src_ref,
                              const std::string& tgt_ref, const DiagramMap& f);

// One node per object, one edge per non-identity morphism.
std::string to_dot(const CatPtr& c);
std::string to_dot(const Diagram& x);

}  // namespace io
}  // namespace dercalc
