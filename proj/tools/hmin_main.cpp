// Command-line front end: exports the minimal graphs and their derived
// objects, and runs the whole verification suite.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "hmin/export.hpp"
#include "hmin/minimal.hpp"
#include "hmin/verify.hpp"

namespace {

using namespace hmin;

// Accepts "f>a" (tail>head) and "fa>a" (edge name, then head).
DirectedEdge parse_pin(const EmbeddedGraph& g, const std::string& spec) {
  auto sep = spec.find('>');
  if (sep == std::string::npos || sep == 0 || sep + 1 >= spec.size())
    throw std::invalid_argument("bad pin '" + spec + "': want tail>head or edge>head");
  std::string left = spec.substr(0, sep);
  std::string head = spec.substr(sep + 1);
  if (left.size() == 1) return g.directed(left, head);
  if (left.size() == 2) {
    std::string a = left.substr(0, 1), b = left.substr(1, 1);
    if (head != a && head != b)
      throw std::invalid_argument("pin '" + spec + "': head is not an endpoint");
    return g.directed(head == a ? b : a, head);
  }
  throw std::invalid_argument("bad pin '" + spec + "'");
}

int write_out(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot write " << path << "\n";
    return 2;
  }
  f << content;
  return f.good() ? 0 : 2;
}

std::string render_graph(const EmbeddedGraph& g, const std::string& name,
                         const std::string& format) {
  if (format == "dot") return io::graph_to_dot(g, name);
  if (format == "json") return io::graph_to_json(g).dump(2) + "\n";
  throw std::invalid_argument("unsupported graph format: " + format);
}

std::string render_target(const std::string& target, const std::string& format) {
  if (target == "closed" || target == "open") {
    EmbeddedGraph g = target == "closed" ? closed_minimal() : open_minimal();
    return render_graph(g, "hmin_" + target, format);
  }
  if (target == "conjugate") {
    EmbeddedGraph open = open_minimal();
    ConjugateGraph cg = restricted_line_graph(open, {"q", "m"});
    if (format == "dot") return io::conjugate_to_dot(cg, "conjugate");
    if (format == "json") return io::conjugate_to_json(cg).dump(2) + "\n";
    if (format == "matrix") return adjacency_matrix(cg).to_text();
  }
  if (target == "variants") {
    EmbeddedGraph open = open_minimal();
    auto variants = enumerate_open_variants(open, open.directed("q", "m"));
    if (format == "json") return io::variants_to_json(open, variants).dump(2) + "\n";
    if (format == "csv") return io::variants_to_csv(open, variants);
  }
  if (target == "signings") {
    EmbeddedGraph open = open_minimal();
    auto rows = all_signings(open);
    if (format == "json") return io::signings_to_json(open, rows).dump(2) + "\n";
    if (format == "csv") return io::signings_to_csv(open, rows);
  }
  throw std::invalid_argument("unsupported target/format: " + target + "/" + format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal conjugated-triangulation graphs: exports and claim verification"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path = "-";
  std::string graph_name = "closed";
  std::string target;
  std::vector<std::string> pin_specs;

  CLI::App* cmd_closed = app.add_subcommand("hmin-closed", "the closed minimal graph");
  cmd_closed->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  cmd_closed->add_option("--out", out_path, "output path, - for stdout");

  CLI::App* cmd_open = app.add_subcommand("hmin-open", "the open minimal graph");
  cmd_open->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  cmd_open->add_option("--out", out_path);

  CLI::App* cmd_euler =
      app.add_subcommand("euler-variants", "balanced orientations under optional pins");
  cmd_euler->add_option("--graph", graph_name)->check(CLI::IsMember({"closed", "open"}));
  cmd_euler->add_option("--pin", pin_specs, "direct an edge, e.g. f>a or fa>a");
  cmd_euler->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "csv"}));
  cmd_euler->add_option("--out", out_path);

  CLI::App* cmd_variants =
      app.add_subcommand("open-variants", "the nine exit/entry patterns");
  cmd_variants->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  cmd_variants->add_option("--out", out_path);

  CLI::App* cmd_conjugate =
      app.add_subcommand("conjugate", "adjacency graph of the cut-point-incident edges");
  cmd_conjugate->add_option("--format", format)
      ->check(CLI::IsMember({"json", "dot", "matrix"}));
  cmd_conjugate->add_option("--out", out_path);

  CLI::App* cmd_signings = app.add_subcommand("signings", "the sixteen signing rows");
  cmd_signings->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  cmd_signings->add_option("--out", out_path);

  std::string verify_format = "table";
  CLI::App* cmd_verify = app.add_subcommand("verify-all", "run every claim check");
  cmd_verify->add_option("--format", verify_format)
      ->check(CLI::IsMember({"json", "table"}));

  CLI::App* cmd_export = app.add_subcommand("export", "write a target to a file");
  cmd_export->add_option("--target", target, "closed|open|conjugate|variants|signings")
      ->required()
      ->check(CLI::IsMember({"closed", "open", "conjugate", "variants", "signings"}));
  cmd_export->add_option("--format", format)
      ->required()
      ->check(CLI::IsMember({"json", "dot", "csv", "matrix"}));
  cmd_export->add_option("--out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_closed->parsed())
      return write_out(out_path, render_graph(closed_minimal(), "hmin_closed", format));
    if (cmd_open->parsed())
      return write_out(out_path, render_graph(open_minimal(), "hmin_open", format));

    if (cmd_euler->parsed()) {
      EmbeddedGraph g = graph_name == "closed" ? closed_minimal() : open_minimal();
      std::vector<DirectedEdge> pins;
      for (const std::string& spec : pin_specs) pins.push_back(parse_pin(g, spec));
      std::vector<Orientation> list = enumerate_balanced_orientations(g, pins);
      if (format == "json")
        return write_out(out_path, io::orientations_to_json(g, pins, list).dump(2) + "\n");
      if (format == "csv") return write_out(out_path, io::orientations_to_csv(g, list));
      std::string dots;
      for (size_t i = 0; i < list.size(); ++i)
        dots += io::orientation_to_dot(list[i], "variant_" + std::to_string(i + 1));
      return write_out(out_path, dots);
    }

    if (cmd_variants->parsed())
      return write_out(out_path, render_target("variants",
                                               format == "json" ? "json" : "csv"));
    if (cmd_conjugate->parsed()) return write_out(out_path, render_target("conjugate", format));
    if (cmd_signings->parsed()) return write_out(out_path, render_target("signings", format));

    if (cmd_verify->parsed()) {
      VerificationReport report = verify_all();
      if (verify_format == "json") {
        std::cout << report_to_json(report).dump(2) << "\n";
      } else {
        bool color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO) != 0;
        std::cout << render_report(report, color);
      }
      return report.all_pass() ? 0 : 1;
    }

    if (cmd_export->parsed()) return write_out(out_path, render_target(target, format));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
