#include <doctest.h>

#include "dercalc/io.hpp"

using namespace dercalc;

namespace {

const char* kFixture = R"(# a small workspace
stdcat I1 ordinal 1
stdcat COR corner
stdcat E terminal

functor i1 I1 COR
  object 0 (0,0)
  object 1 (1,0)
  morphism 0->1 (0,0)->(1,0)
end

functor idc COR COR
  object (0,0) (0,0)
  object (1,0) (1,0)
  object (0,1) (0,1)
  morphism (0,0)->(1,0) (0,0)->(1,0)
  morphism (0,0)->(0,1) (0,0)->(0,1)
end

nattrans idcell i1 i1
  component 0 id_(0,0)
  component 1 id_(1,0)
end

diagram X I1
  dim 0 2
  dim 1 1
  matrix 0->1 [[1/2 0]]
end

diagram Y I1
  dim 0 1
  dim 1 1
  matrix 0->1 [[3]]
end

diagrammap h X Y
  component 0 [[1 0]]
  component 1 [[6]]
end

dermorphism M tensor_with 2
dermorphism L lan_along i1

nattrans idc_cell idc idc
  component (0,0) id_(0,0)
  component (1,0) id_(1,0)
  component (0,1) id_(0,1)
end

square S idc idc idc idc idc_cell down-left
)";

}  // namespace

TEST_CASE("workspace parses and round-trips") {
  io::Workspace ws = io::parse_workspace(kFixture);
  CHECK(ws.bindings.size() == 13);
  CHECK(validate_square(ws.square("S")).ok());
  CHECK(ws.category("I1")->num_objects() == 2);
  CHECK(ws.functor("i1").target->num_objects() == 3);
  CHECK(ws.diagram("X").dim == std::vector<std::size_t>{2, 1});
  CHECK(ws.morphism("L").kind == MorphKind::LanAlong);

  std::string printed = io::print_workspace(ws);
  io::Workspace again = io::parse_workspace(printed);
  CHECK(again == ws);
  CHECK(io::print_workspace(again) == printed);  // printing is canonical
}

TEST_CASE("a file defining [1], corner and the sieve yields three bindings") {
  io::Workspace ws = io::parse_workspace(
      "stdcat I1 ordinal 1\nstdcat COR corner\n"
      "functor i1 I1 COR\n  object 0 (0,0)\n  object 1 (1,0)\n"
      "  morphism 0->1 (0,0)->(1,0)\nend\n");
  CHECK(ws.bindings.size() == 3);
  CHECK(sieve_kind(ws.functor("i1")) == SieveKind::Sieve);
}

TEST_CASE("non-natural transformations are rejected with the square named") {
  // two parallel arrows: the identity components between the two pickers
  // have the right endpoints but the naturality square cannot commute
  const char* text =
      "stdcat I1 ordinal 1\n"
      "category P\n"
      "  object a\n  object b\n"
      "  morphism id_a a a\n  morphism id_b b b\n  morphism f a b\n  morphism g a b\n"
      "  identity a id_a\n  identity b id_b\n"
      "  compose id_a id_a id_a\n  compose id_b id_b id_b\n"
      "  compose f id_a f\n  compose id_b f f\n"
      "  compose g id_a g\n  compose id_b g g\nend\n"
      "functor pickf I1 P\n  object 0 a\n  object 1 b\n  morphism 0->1 f\nend\n"
      "functor pickg I1 P\n  object 0 a\n  object 1 b\n  morphism 0->1 g\nend\n"
      "nattrans bad pickf pickg\n  component 0 id_a\n  component 1 id_b\nend\n";
  io::ParseResult r = io::parse_workspace_report(text);
  CHECK(!r.report.ok());
  bool found = false;
  for (const CheckLine& l : r.report.lines)
    if (!l.pass && l.detail.find("naturality") != std::string::npos) found = true;
  CHECK(found);
  CHECK_THROWS_AS(io::parse_workspace(text), Error);
}

TEST_CASE("dangling references are rejected") {
  CHECK_THROWS_WITH_AS(io::parse_workspace("functor f A B\nend\n"),
                       doctest::Contains("unknown category"), Error);
  CHECK_THROWS_WITH_AS(io::parse_workspace("diagram X Missing\nend\n"),
                       doctest::Contains("unknown"), Error);
}

TEST_CASE("invalid categories are reported, not bound") {
  const char* text =
      "category C\n  object a\n  morphism id_a a a\n  morphism f a a\n"
      "  identity a id_a\n"
      "  compose id_a id_a id_a\n  compose id_a f f\n  compose f id_a f\n"
      "  compose f f f\nend\n"
      "category D\n  object a\n  morphism id_a a a\n  identity a id_a\nend\n";
  // C is fine (f is idempotent); D misses compose(id,id)
  io::ParseResult r = io::parse_workspace_report(text);
  CHECK(r.workspace.find("C"));
  CHECK(!r.workspace.find("D"));
  CHECK(!r.report.ok());
}

TEST_CASE("matrix literals parse rationals") {
  Matrix m = io::parse_matrix("[[1/2 -3][0 5/1]]", 2, 2);
  CHECK(m.at(0, 0) == rat(1, 2));
  CHECK(m.at(0, 1) == rat(-3));
  CHECK(m.at(1, 1) == rat(5));
  CHECK(io::parse_matrix(io::print_matrix(m), 2, 2) == m);
  CHECK_THROWS(io::parse_matrix("[[1 2]]", 2, 1));
}

TEST_CASE("dot emission") {
  std::string dot = io::to_dot(corner_category());
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("(0,0)") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);

  Diagram x = constant_diagram(ordinal(1), 2);
  std::string ddot = io::to_dot(x);
  CHECK(ddot.find("Q^2") != std::string::npos);
}
