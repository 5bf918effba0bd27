#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>

#include "floorcount/cache.hpp"
#include "floorcount/cli.hpp"
#include "floorcount/enumeration.hpp"
#include "floorcount/errors.hpp"
#include "floorcount/svg.hpp"
#include "floorcount/symmetry.hpp"
#include "floorcount/text_format.hpp"
#include "support.hpp"

using namespace floorcount;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "floorcount-tests";
  fs::create_directories(dir);
  const auto path = dir / name;
  fs::remove(path);
  return path;
}

void write(const fs::path& path, const std::string& text) { std::ofstream(path, std::ios::binary) << text; }

const char* delta1_text =
    "polygon dl=0 dr=1 dminus=1 dplus=0\n"
    "genus 0\n"
    "vertex v1 theta=0\n"
    "bottom b1 v1\n";

}  // namespace

TEST_CASE("diagram files round-trip") {
  CHECK(serialize(parse_diagram_file(delta1_text)) == delta1_text);

  std::mt19937 rng(5);
  for (const auto& [p, g] : std::vector<std::pair<HTransversePolygon, int>>{
           {delta_d(3), 0}, {delta_d(4), 1}, {fixtures::trapezoid(), 0}, {hirzebruch_polygon(1, 2, 2), 1}}) {
    for (const auto& e : enumerate_diagrams(p, g).entries) {
      const auto text = serialize(p, g, e.diagram);
      CHECK(serialize(parse_diagram_file(text)) == text);
      // a shuffled copy serializes to the same canonical text
      CHECK(serialize(p, g, fixtures::relabel(e.diagram, rng)) == text);
      for (const auto& m : enumerate_marking_representatives(e.diagram)) {
        const auto marked = serialize(p, g, e.diagram, &m);
        const auto back = parse_diagram_file(marked);
        CHECK(serialize(back) == marked);
        REQUIRE(back.marking);
        CHECK(validate_marking(back.diagram, *back.marking).empty());
      }
    }
  }
}

TEST_CASE("marked file of the weight two cubic diagram") {
  const std::string text =
      "# the weight two cubic diagram\n"
      "polygon dl=0,0,0 dr=1,1,1 dminus=3 dplus=0\n"
      "genus 0\n"
      "vertex low theta=0\n"
      "vertex mid theta=0\n"
      "vertex high theta=0\n"
      "edge double low mid w=2\n"
      "edge single mid high w=1\n"
      "bottom a low\n"
      "bottom b low\n"
      "bottom c low\n"
      "marking a b c low double mid single high\n";
  const auto file = parse_diagram_file(text);
  REQUIRE(file.marking);
  CHECK(file.marking->sequence.size() == 8);
  CHECK(validate_marking(file.diagram, *file.marking).empty());
  CHECK(validate_diagram(file.diagram, file.polygon, file.genus).empty());
  CHECK(complex_multiplicity(file.diagram) == 4);
}

TEST_CASE("cycles are reported by validation") {
  const std::string text =
      "polygon dl=0,0 dr=1,1 dminus=2 dplus=0\n"
      "genus 1\n"
      "vertex v1 theta=0\n"
      "vertex v2 theta=0\n"
      "edge e1 v2 v1 w=2\n"
      "edge e2 v1 v2 w=1\n"
      "bottom b1 v1\n"
      "bottom b2 v1\n";
  const auto file = parse_diagram_file(text);
  const auto vs = validate_diagram(file.diagram, file.polygon, file.genus);
  CHECK(std::any_of(vs.begin(), vs.end(), [](const Violation& v) { return v.kind == ViolationKind::cyclic; }));

  const auto path = scratch("cycle.txt");
  write(path, text);
  const auto r = cli({"validate", path.string()});
  CHECK(r.code == exit_invalid_input);
  CHECK(r.out.find("violation cyclic") != std::string::npos);
}

TEST_CASE("parse errors carry line numbers") {
  const auto line_of = [](const std::string& text) {
    try {
      parse_diagram_file(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("polygon dl=0 dr=1 dminus=1 dplus=0\ngenus 0\nvertex v1 theta=0\nbottom b1 v9\n") == 4);
  CHECK(line_of("polygon dl=0 dr=1 dminus=1 dplus=0\ngenus x\n") == 2);
  CHECK(line_of("polygon dl=0 dr=1 dminus=1 dplus=0\ngenus 0\nvertex v1 theta=0\nvertex v1 theta=0\n") == 4);
  CHECK(line_of("polygon dl=0 dr=1 dminus=1 dplus=0\ngenus 0\nvertex v1 theta=0\nloop l v1\n") == 4);
  CHECK(line_of("polygon dl=0 dr=1 dminus=1 dplus=0\ngenus 0\nvertex v1 theta=0\nedge e v1 v1 w=1\n") == 4);
  CHECK(line_of("polygon dl=0 dr=1 dminus=1 dplus=0\nvertex v1 theta=0\n") == 0);
  CHECK_THROWS_AS(parse_diagram_file("polygon dl=0 dr=0 dminus=1 dplus=0\ngenus 0\n"), PolygonError);
}

TEST_CASE("svg output") {
  const auto single = render_svg({{fixtures::delta1(), std::nullopt, ""}});
  CHECK(count(single, "class=\"floor\"") == 1);
  CHECK(count(single, "class=\"bottom\"") == 1);
  CHECK(count(single, "class=\"elevator\"") == 0);

  const auto b = render_svg({{fixtures::cubic_double(), Marking{{5, 6, 7, 0, 3, 1, 4, 2}}, "b"}});
  CHECK(count(b, "class=\"weight\"") == 1);
  CHECK(b.find(">2</text>") != std::string::npos);
  CHECK(count(b, "class=\"mark\"") == 8);
  CHECK(count(b, "class=\"theta\"") == 0);

  const auto theta = render_svg({{make_diagram({1, 0}, {{0, 1, 1}}, {0}, {}), std::nullopt, ""}});
  CHECK(count(theta, "class=\"theta\"") == 1);

  std::vector<SvgPanel> panels;
  for (const auto& e : enumerate_diagrams(delta_d(3), 0).entries) panels.push_back({e.diagram, std::nullopt, ""});
  const auto all = render_svg(panels);
  CHECK(count(all, "<g class=\"diagram\"") == 3);
  CHECK(render_svg(panels) == all);

  const auto path = scratch("cubic.svg");
  const auto r = cli({"render", "--degree", "3", "--out", path.string()});
  CHECK(r.code == exit_ok);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(count(text.str(), "class=\"floor\"") == 9);
  CHECK(count(text.str(), "class=\"caption\"") == 3);
  CHECK(text.str().find("1 marking") != std::string::npos);
  CHECK(count(text.str(), "<g class=\"diagram\"") == 3);
}

TEST_CASE("cache records") {
  const InvariantRecord rec{InvariantKind::W, to_text(delta_d(3)), 2, 4, std::string(engine_version)};
  const auto line = rec.to_line();
  CHECK(line == "W polygon dl=0,0,0 dr=1,1,1 dminus=3 dplus=0 2 4 " + std::string(engine_version));
  CHECK(InvariantRecord::parse_line(line) == rec);
  CHECK_THROWS_AS(InvariantRecord::parse_line("N polygon dl=0 2 4"), ParseError);

  const auto path = scratch("records.txt");
  {
    ResultCache cache(path);
    cache.store(rec);
    cache.store(rec);
    CHECK(cache.size() == 1);
    auto other = rec;
    other.value = 5;
    CHECK_THROWS_AS(cache.store(other), Error);
  }
  std::ifstream in(path);
  std::string l1, l2;
  std::getline(in, l1);
  CHECK(l1 == line);
  CHECK_FALSE(std::getline(in, l2));

  // records from another engine version are ignored
  write(path, "N " + to_text(delta_d(3)) + " 0 13 floorcount-0.9\n");
  ResultCache stale(path);
  CHECK_FALSE(stale.find(InvariantKind::N, to_text(delta_d(3)), 0));
}

TEST_CASE("cache replay does not recompute") {
  const auto path = scratch("replay.txt");
  const std::vector<std::vector<std::string>> commands = {
      {"n", "--degree", "4", "--genus", "1", "--cache", path.string()},
      {"w", "--degree", "3", "--pairs", "1", "--cache", path.string()},
      {"n", "--hirzebruch", "1,2,2", "--genus", "0", "--format", "records", "--cache", path.string()},
  };
  std::vector<std::string> first;
  for (const auto& c : commands) first.push_back(cli(c).out);
  const auto runs = enumeration_runs();
  for (std::size_t i = 0; i < commands.size(); ++i) CHECK(cli(commands[i]).out == first[i]);
  CHECK(enumeration_runs() == runs);
  CHECK(first[0] == "225\n");
  CHECK(first[1] == "6\n");
  CHECK(ResultCache(path).size() == 3);
}

TEST_CASE("command line") {
  CHECK(cli({"n", "--degree", "3", "--genus", "0"}).out == "12\n");
  CHECK(cli({"n", "--degree", "3", "--genus", "1"}).out == "1\n");
  CHECK(cli({"w", "--degree", "3", "--pairs", "2"}).out == "4\n");
  CHECK(cli({"n", "--degree", "3", "--genus", "5"}).out == "0\n");
  CHECK(cli({"n", "--polygon", "polygon dl=0,0 dr=2,2 dminus=5 dplus=1"}).out == "93\n");
  CHECK(cli({"n", "--degree", "3", "--format", "records"}).out ==
        "kind=N polygon=\"dl=0,0,0 dr=1,1,1 dminus=3 dplus=0\" genus=0 value=12\n");
  CHECK(cli({"w", "--degree", "3", "--pairs", "3", "--format", "records"}).out ==
        "kind=W polygon=\"dl=0,0,0 dr=1,1,1 dminus=3 dplus=0\" pairs=3 value=2\n");
  CHECK(cli({"w", "--degree", "3", "--pairs", "4", "--verify", "--jobs", "2"}).out == "0\n");
  CHECK(cli({"w", "--degree", "3", "--pairs", "1", "--adjacency", "closures"}).code == exit_ok);

  CHECK(cli({"n", "--degree", "3", "--genus", "-1"}).code == exit_invalid_input);
  CHECK(cli({"n"}).code == exit_invalid_input);
  CHECK(cli({"n", "--degree", "3", "--polygon", "polygon dl=0 dr=1 dminus=1 dplus=0"}).code == exit_invalid_input);
  CHECK(cli({"n", "--polygon", "polygon dl=0,0 dr=1,1 dminus=3 dplus=2"}).code == exit_invalid_input);
  CHECK(cli({"w", "--degree", "3", "--pairs", "5"}).code == exit_invalid_input);
  CHECK(cli({"frobnicate"}).code == exit_invalid_input);
  CHECK(cli({"validate", "/nonexistent/file"}).code == exit_failure);

  const auto listing = cli({"list", "--degree", "3"});
  CHECK(count(listing.out, "# diagram") == 3);
  CHECK(count(cli({"list", "--degree", "3", "--markings"}).out, "marking ") >= 9);

  CHECK(cli({"check", "vakil", "--n", "1", "--b", "2", "--genus", "1"}).out == "lhs=20 rhs=20 ok=true\n");
  CHECK(cli({"check", "near-max", "--degree", "4"}).out == "lhs=27 rhs=27 ok=true\n");
  const auto k = cli({"check", "kontsevich", "--max-degree", "3"});
  CHECK(k.code == exit_ok);
  CHECK(k.out == "degree=1 lhs=1 rhs=1 ok=true\ndegree=2 lhs=1 rhs=1 ok=true\ndegree=3 lhs=12 rhs=12 ok=true\n");
}
