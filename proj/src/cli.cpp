#include "floorcount/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "floorcount/cache.hpp"
#include "floorcount/errors.hpp"
#include "floorcount/invariants.hpp"
#include "floorcount/oracles.hpp"
#include "floorcount/svg.hpp"
#include "floorcount/text_format.hpp"

namespace floorcount {

namespace {

struct PolygonSource {
  std::optional<int> degree;
  std::string polygon_line;
  std::vector<int> hirzebruch;

  void add_to(CLI::App* cmd) {
    auto* d = cmd->add_option("--degree", degree, "use the triangle (0,0),(d,0),(0,d)")->check(CLI::PositiveNumber);
    auto* p = cmd->add_option("--polygon", polygon_line, "polygon line 'polygon dl=.. dr=.. dminus=.. dplus=..'");
    auto* h = cmd->add_option("--hirzebruch", hirzebruch, "n,a,b for the polygon (0,0),(na+b,0),(0,a),(b,a)")
                  ->delimiter(',')
                  ->expected(3);
    d->excludes(p)->excludes(h);
    p->excludes(h);
  }

  std::optional<HTransversePolygon> resolve() const {
    if (degree) return delta_d(*degree);
    if (!polygon_line.empty()) return parse_polygon_text(polygon_line);
    if (!hirzebruch.empty()) return hirzebruch_polygon(hirzebruch[0], hirzebruch[1], hirzebruch[2]);
    return std::nullopt;
  }

  HTransversePolygon require() const {
    auto p = resolve();
    if (!p) throw RangeError("one of --degree, --polygon or --hirzebruch is required");
    return *p;
  }
};

struct OutputOptions {
  std::string format = "plain";
  int jobs = 1;
  std::string cache;

  void add_to(CLI::App* cmd, bool with_cache) {
    cmd->add_option("--format", format, "plain or records")->check(CLI::IsMember({"plain", "records"}));
    cmd->add_option("--jobs", jobs, "worker threads (default: FLOORCOUNT_JOBS or 1)")->check(CLI::PositiveNumber);
    if (with_cache) cmd->add_option("--cache", cache, "append-only result cache file");
  }
};

int default_jobs() {
  if (const char* env = std::getenv("FLOORCOUNT_JOBS")) {
    try {
      const int jobs = std::stoi(env);
      if (jobs >= 1) return jobs;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::string polygon_field(const HTransversePolygon& p) {
  const std::string line = to_text(p);
  return "\"" + line.substr(line.find(' ') + 1) + "\"";
}

void print_value(std::ostream& out, const OutputOptions& o, InvariantKind kind, const HTransversePolygon& p,
                 const char* parameter_name, int parameter, const BigInt& value) {
  if (o.format == "plain") {
    out << value.get_str() << "\n";
    return;
  }
  out << "kind=" << (kind == InvariantKind::N ? "N" : "W") << " polygon=" << polygon_field(p) << " "
      << parameter_name << "=" << parameter << " value=" << value.get_str() << "\n";
}

template <class Compute>
BigInt cached(const OutputOptions& o, InvariantKind kind, const HTransversePolygon& p, int parameter,
              Compute&& compute) {
  if (o.cache.empty()) return compute();
  ResultCache cache(o.cache);
  const std::string polygon = to_text(p);
  if (auto hit = cache.find(kind, polygon, parameter)) return *hit;
  BigInt value = compute();
  cache.store({kind, polygon, parameter, value, std::string(engine_version)});
  return value;
}

std::string caption(const InventoryEntry& entry) {
  std::ostringstream text;
  text << "\xce\xbc" "C=" << entry.complex_multiplicity.get_str() << ", " << entry.markings.get_str()
       << (entry.markings == 1 ? " marking" : " markings");
  return text.str();
}

void print_check(std::ostream& out, const std::string& prefix, const BigInt& lhs, const BigInt& rhs) {
  out << prefix << "lhs=" << lhs.get_str() << " rhs=" << rhs.get_str() << " ok=" << (lhs == rhs ? "true" : "false")
      << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of plane curves through points via floor diagrams", "floorcount"};
  app.require_subcommand(1);
  const int jobs_default = default_jobs();

  PolygonSource n_source, w_source, list_source, render_source;
  OutputOptions n_out{.jobs = jobs_default}, w_out{.jobs = jobs_default}, list_out{.jobs = jobs_default},
      check_out{.jobs = jobs_default};

  int n_genus = 0;
  auto* n_cmd = app.add_subcommand("n", "complex count N(polygon, genus)");
  n_source.add_to(n_cmd);
  n_out.add_to(n_cmd, true);
  n_cmd->add_option("--genus", n_genus, "genus")->check(CLI::NonNegativeNumber);

  int w_pairs = 0;
  bool w_verify = false;
  std::string w_adjacency = "incidence";
  auto* w_cmd = app.add_subcommand("w", "real count W(polygon, r) for r pairs of conjugate points");
  w_source.add_to(w_cmd);
  w_out.add_to(w_cmd, true);
  w_cmd->add_option("--pairs", w_pairs, "number r of conjugate pairs")->check(CLI::NonNegativeNumber);
  w_cmd->add_flag("--verify", w_verify, "evaluate every marking of each class, not only its representative");
  w_cmd->add_option("--adjacency", w_adjacency, "incidence (default) or closures")
      ->check(CLI::IsMember({"closures", "incidence"}));

  int list_genus = 0;
  bool list_markings = false;
  auto* list_cmd = app.add_subcommand("list", "print every floor diagram in the diagram text format");
  list_source.add_to(list_cmd);
  list_out.add_to(list_cmd, false);
  list_cmd->add_option("--genus", list_genus, "genus")->check(CLI::NonNegativeNumber);
  list_cmd->add_flag("--markings", list_markings, "one block per marked diagram class");

  int render_genus = 0;
  bool render_markings = false;
  std::string render_file;
  std::string render_path;
  auto* render_cmd = app.add_subcommand("render", "draw diagrams as SVG");
  render_source.add_to(render_cmd);
  render_cmd->add_option("--genus", render_genus, "genus")->check(CLI::NonNegativeNumber);
  render_cmd->add_flag("--markings", render_markings, "draw one panel per marked diagram class");
  render_cmd->add_option("--diagram-file", render_file, "draw a single diagram file");
  render_cmd->add_option("--out", render_path, "output SVG path")->required();

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "check a diagram file against its polygon and genus");
  validate_cmd->add_option("file", validate_path, "diagram file")->required();

  auto* check_cmd = app.add_subcommand("check", "compare enumeration against closed forms");
  check_cmd->require_subcommand(1);
  int vakil_n = 0, vakil_b = 1, vakil_genus = 0, near_degree = 3, kontsevich_degree = 1;
  auto* vakil_cmd = check_cmd->add_subcommand("vakil", "Vakil's relation on Hirzebruch polygons, a = 2");
  vakil_cmd->add_option("--n", vakil_n, "n")->required()->check(CLI::NonNegativeNumber);
  vakil_cmd->add_option("--b", vakil_b, "b")->required()->check(CLI::PositiveNumber);
  vakil_cmd->add_option("--genus", vakil_genus, "genus")->check(CLI::NonNegativeNumber);
  check_out.add_to(vakil_cmd, false);
  auto* near_cmd = check_cmd->add_subcommand("near-max", "one below maximal genus equals 3(d-1)^2");
  near_cmd->add_option("--degree", near_degree, "degree >= 3")->required()->check(CLI::Range(3, 1000));
  check_out.add_to(near_cmd, false);
  auto* kontsevich_cmd = check_cmd->add_subcommand("kontsevich", "rational counts against Kontsevich's recursion");
  kontsevich_cmd->add_option("--max-degree", kontsevich_degree, "largest degree")->required()->check(CLI::PositiveNumber);
  check_out.add_to(kontsevich_cmd, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_invalid_input;
  }

  try {
    if (n_cmd->parsed()) {
      const auto p = n_source.require();
      const BigInt value = cached(n_out, InvariantKind::N, p, n_genus,
                                  [&] { return gw_invariant(p, n_genus, {.jobs = n_out.jobs}); });
      print_value(out, n_out, InvariantKind::N, p, "genus", n_genus, value);
      return exit_ok;
    }

    if (w_cmd->parsed()) {
      const auto p = w_source.require();
      InvariantOptions options{.jobs = w_out.jobs,
                               .adjacency = w_adjacency == "incidence" ? AdjacencyRule::incidence_only
                                                                       : AdjacencyRule::closures_intersect,
                               .verify_representatives = w_verify,
                               .warn = [&err](const std::string& message) { err << message << "\n"; }};
      const auto compute = [&] { return welschinger_invariant(p, w_pairs, options); };
      // Only the default adjacency rule goes through the cache.
      OutputOptions cache_options = w_out;
      if (options.adjacency != AdjacencyRule::incidence_only || w_verify) cache_options.cache.clear();
      const BigInt value = cached(cache_options, InvariantKind::W, p, w_pairs, compute);
      print_value(out, w_out, InvariantKind::W, p, "pairs", w_pairs, value);
      return exit_ok;
    }

    if (list_cmd->parsed()) {
      const auto p = list_source.require();
      const auto inventory = enumerate_diagrams(p, list_genus, {.jobs = list_out.jobs});
      bool first = true;
      for (std::size_t i = 0; i < inventory.entries.size(); ++i) {
        const auto& entry = inventory.entries[i];
        const auto header = [&](const std::string& extra) {
          out << (first ? "" : "\n") << "# diagram " << i + 1 << "/" << inventory.entries.size() << " "
              << caption(entry) << extra << "\n";
          first = false;
        };
        if (!list_markings) {
          header("");
          out << serialize(p, list_genus, entry.diagram);
          continue;
        }
        const auto markings = enumerate_marking_representatives(entry.diagram);
        for (std::size_t j = 0; j < markings.size(); ++j) {
          header(" (marking " + std::to_string(j + 1) + ")");
          out << serialize(p, list_genus, entry.diagram, &markings[j]);
        }
      }
      return exit_ok;
    }

    if (render_cmd->parsed()) {
      std::vector<SvgPanel> panels;
      if (!render_file.empty()) {
        DiagramFile file = parse_diagram_file(read_file(render_file));
        panels.push_back({std::move(file.diagram), std::move(file.marking), ""});
      } else {
        const auto p = render_source.require();
        const auto inventory = enumerate_diagrams(p, render_genus);
        for (const auto& entry : inventory.entries) {
          if (!render_markings) {
            panels.push_back({entry.diagram, std::nullopt, caption(entry)});
            continue;
          }
          for (auto& m : enumerate_marking_representatives(entry.diagram)) {
            panels.push_back({entry.diagram, std::move(m), caption(entry)});
          }
        }
      }
      write_svg(panels, render_path);
      out << "wrote " << panels.size() << " panel" << (panels.size() == 1 ? "" : "s") << " to " << render_path << "\n";
      return exit_ok;
    }

    if (validate_cmd->parsed()) {
      const DiagramFile file = parse_diagram_file(read_file(validate_path));
      file.diagram.check_structure();
      const auto violations = validate_diagram(file.diagram, file.polygon, file.genus);
      for (const auto& v : violations) out << "violation " << to_string(v.kind) << ": " << v.detail << "\n";
      std::vector<std::string> marking_problems;
      if (file.marking) marking_problems = validate_marking(file.diagram, *file.marking);
      for (const auto& problem : marking_problems) out << "marking: " << problem << "\n";
      if (!violations.empty() || !marking_problems.empty()) return exit_invalid_input;
      out << "ok\n";
      return exit_ok;
    }

    const auto lookup = [&](const HTransversePolygon& p, int genus) {
      return gw_invariant(p, genus, {.jobs = check_out.jobs});
    };
    bool all_ok = true;
    const auto check = [&](const std::string& prefix, const BigInt& lhs, const BigInt& rhs) {
      print_check(out, prefix, lhs, rhs);
      all_ok = all_ok && lhs == rhs;
    };
    if (vakil_cmd->parsed()) {
      check("", lookup(hirzebruch_polygon(vakil_n, 2, vakil_b), vakil_genus),
            vakil_rhs(vakil_n, vakil_b, vakil_genus, lookup));
    } else if (near_cmd->parsed()) {
      const auto p = delta_d(near_degree);
      check("", lookup(p, max_genus(p) - 1), near_max_genus_count(near_degree));
    } else if (kontsevich_cmd->parsed()) {
      for (int d = 1; d <= kontsevich_degree; ++d) {
        check("degree=" + std::to_string(d) + " ", lookup(delta_d(d), 0), kontsevich_rational(d));
      }
    }
    return all_ok ? exit_ok : exit_consistency;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << "\n";
    return exit_consistency;
  } catch (const PolygonError& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid_input;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid_input;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid_input;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid_input;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_failure;
  }
}

}  // namespace floorcount
