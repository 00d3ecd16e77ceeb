#pragma once

// Command line driver. run() parses an argument vector (without the program
// name), writes to the supplied streams, and returns the process exit code:
// 0 success, 1 a verification reported a violation, 2 usage or input errors.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "degraph/arith.hpp"
#include "degraph/degrees.hpp"
#include "degraph/family.hpp"
#include "degraph/graph.hpp"
#include "degraph/io.hpp"
#include "degraph/verify.hpp"

namespace degraph::cli {

namespace detail {

inline std::vector<std::uint64_t> parse_csv(const std::string& text, const char* what) {
  std::vector<std::uint64_t> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    std::string tok = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                    : comma - start);
    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size())
      throw std::invalid_argument(std::string(what) + ": expected a comma separated list of " +
                                  "nonnegative integers, got '" + tok + "'");
    out.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream body;
  body << in.rdbuf();
  return body.str();
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

inline void append_list(std::string& line, const std::vector<std::uint64_t>& values) {
  for (std::uint64_t v : values) line += " " + std::to_string(v);
}

inline std::string signature_line(const Signature& s) {
  return "q=" + std::to_string(s.q.q) + " u=" + std::to_string(s.q.u) +
         " alpha=" + std::to_string(s.q.alpha) + " p_minus=" + std::to_string(s.p_minus) +
         " p_plus=" + std::to_string(s.p_plus);
}

inline std::string graph_table(const DegreeGraph& g) {
  std::string out = "vertices (" + std::to_string(g.vertex_count()) + "):";
  append_list(out, g.vertices());
  out += "\nedges (" + std::to_string(g.edge_count()) + "):";
  for (const auto& [p, q] : g.edges()) out += " " + std::to_string(p) + "-" + std::to_string(q);
  out += "\n";
  return out;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"character degree graphs of PSL(2,q), SL(2,q), and their direct products"};
  app.name("degraph");
  app.require_subcommand(1);

  std::uint64_t q = 0;
  std::string group = "psl2";
  std::string degrees_csv;
  std::string primes_csv;
  std::string graph_file;
  std::uint64_t limit = 0;
  bool prime_powers = false;
  std::string strategy = "greedy";
  std::size_t cap = 48;
  std::size_t threshold = 32;
  std::string format = "table";

  const std::set<std::string> groups{"psl2", "sl2"};
  auto add_format = [&](CLI::App* cmd, const std::set<std::string>& allowed) {
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember(allowed));
  };
  auto add_graph_sources = [&](CLI::App* cmd) {
    cmd->add_option("--q", q, "prime power q >= 4: the graph of PSL(2,q) or SL(2,q)");
    cmd->add_option("--group", group, "group family for --q")->check(CLI::IsMember(groups));
    cmd->add_option("--degrees", degrees_csv, "comma separated degree set: its prime graph");
    cmd->add_option("--graph-file", graph_file, "path to a graph JSON file");
    cmd->add_option("--primes", primes_csv,
                    "comma separated candidate q list: the graph of the direct product");
    cmd->add_option("--threshold", threshold,
                    "largest family size built by explicit degree folding");
  };

  CLI::App* c_degrees = app.add_subcommand("degrees", "character degree set of PSL(2,q) or SL(2,q)");
  c_degrees->add_option("--q", q, "prime power q >= 4, or 5")->required();
  c_degrees->add_option("--group", group, "group family")->check(CLI::IsMember(groups));
  add_format(c_degrees, {"table", "json"});

  CLI::App* c_graph = app.add_subcommand("graph", "prime graph on a character degree set");
  add_graph_sources(c_graph);
  add_format(c_graph, {"table", "json", "dot"});

  CLI::App* c_clique = app.add_subcommand("clique", "maximum clique of a degree graph");
  add_graph_sources(c_clique);
  add_format(c_clique, {"table", "json"});

  CLI::App* c_cover = app.add_subcommand("cover", "cover of the vertices by two cliques, if one exists");
  add_graph_sources(c_cover);
  add_format(c_cover, {"table", "json"});

  CLI::App* c_cand = app.add_subcommand("candidates", "prime powers whose graphs fit the family pattern");
  c_cand->add_option("--limit", limit, "scan q <= limit")->required();
  c_cand->add_flag("--prime-powers", prime_powers, "include q = u^alpha with alpha >= 2");
  add_format(c_cand, {"table", "json"});

  CLI::App* c_pack = app.add_subcommand("pack", "pairwise compatible family packed from candidates");
  c_pack->add_option("--limit", limit, "scan q <= limit")->required();
  c_pack->add_flag("--prime-powers", prime_powers, "include q = u^alpha with alpha >= 2");
  c_pack->add_option("--strategy", strategy, "packing strategy")
      ->check(CLI::IsMember(std::set<std::string>{"greedy", "exact"}));
  c_pack->add_option("--cap", cap, "largest candidate count accepted by --strategy exact");
  add_format(c_pack, {"table", "json"});

  CLI::App* c_gpi = app.add_subcommand("gpi", "direct product graph and invariants for a family");
  c_gpi->add_option("--primes", primes_csv, "comma separated candidate q list")->required();
  c_gpi->add_option("--threshold", threshold, "largest family size built by explicit degree folding");
  add_format(c_gpi, {"table", "json", "dot"});

  CLI::App* c_verify = app.add_subcommand("verify-bound", "check |V| <= max{2w+1, 3w-4} on a graph");
  add_graph_sources(c_verify);
  add_format(c_verify, {"table", "json"});

  CLI::App* c_scan = app.add_subcommand("scan-psl2", "verify structure and bound for all q <= limit");
  c_scan->add_option("--limit", limit, "largest q checked")->required();
  add_format(c_scan, {"table", "json"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto resolve_graph = [&](CLI::App* cmd) -> DegreeGraph {
    int sources = (cmd->count("--q") > 0) + (cmd->count("--degrees") > 0) +
                  (cmd->count("--graph-file") > 0) + (cmd->count("--primes") > 0);
    if (sources != 1)
      throw std::invalid_argument(
          "exactly one of --q, --degrees, --graph-file, --primes is required");
    if (cmd->count("--q")) {
      PrimePowerQ pq = PrimePowerQ::of(q);
      return build_graph(group == "sl2" ? cd_sl2(pq) : cd_psl2(pq));
    }
    if (cmd->count("--degrees"))
      return build_graph(DegreeSet(detail::parse_csv(degrees_csv, "--degrees")));
    if (cmd->count("--graph-file")) return graph_from_json(detail::read_file(graph_file));
    auto sigs = signatures_from_qs(detail::parse_csv(primes_csv, "--primes"));
    return build_gpi_graph(sigs, threshold);
  };

  try {
    if (c_degrees->parsed()) {
      PrimePowerQ pq = PrimePowerQ::of(q);
      DegreeSet d = group == "sl2" ? cd_sl2(pq) : cd_psl2(pq);
      if (format == "json") {
        out << degrees_to_json(d) << "\n";
      } else {
        std::string line = "degrees:";
        detail::append_list(line, d.values());
        out << "q: " << q << "\ngroup: " << group << "\n" << line << "\n";
      }
      return 0;
    }

    if (c_graph->parsed()) {
      DegreeGraph g = resolve_graph(c_graph);
      if (format == "json")
        out << graph_to_json(g) << "\n";
      else if (format == "dot")
        out << graph_to_dot(g) << "\n";
      else
        out << detail::graph_table(g);
      return 0;
    }

    if (c_clique->parsed()) {
      MaxClique c = max_clique(resolve_graph(c_clique));
      if (format == "json") {
        out << clique_to_json(c) << "\n";
      } else {
        std::string line = "witness:";
        detail::append_list(line, c.witness);
        out << "size: " << c.size << "\n" << line << "\n";
      }
      return 0;
    }

    if (c_cover->parsed()) {
      std::optional<TwoCliqueCover> c = two_clique_cover(resolve_graph(c_cover));
      if (format == "json") {
        out << cover_to_json(c) << "\n";
      } else if (!c) {
        out << "exists: no\n";
      } else {
        std::string a = "part_a:", b = "part_b:";
        detail::append_list(a, c->part_a);
        detail::append_list(b, c->part_b);
        out << "exists: yes\n" << a << "\n" << b << "\n";
      }
      return 0;
    }

    if (c_cand->parsed()) {
      std::vector<Signature> sigs = find_candidates(limit, prime_powers);
      if (format == "json") {
        out << candidates_to_json(limit, prime_powers, sigs) << "\n";
      } else {
        out << "limit: " << limit << "\nprime_powers: " << detail::yes_no(prime_powers)
            << "\ncount: " << sigs.size() << "\n";
        for (const Signature& s : sigs) out << detail::signature_line(s) << "\n";
      }
      return 0;
    }

    if (c_pack->parsed()) {
      std::vector<Signature> sigs = find_candidates(limit, prime_powers);
      std::vector<Signature> family =
          strategy == "exact" ? pack_exact(sigs, cap) : pack_greedy(sigs);
      if (format == "json") {
        out << pack_to_json(limit, prime_powers, strategy, sigs.size(), family) << "\n";
      } else {
        out << "limit: " << limit << "\nprime_powers: " << detail::yes_no(prime_powers)
            << "\nstrategy: " << strategy << "\ncandidates: " << sigs.size()
            << "\nn: " << family.size() << "\n";
        for (const Signature& s : family) out << detail::signature_line(s) << "\n";
      }
      return 0;
    }

    if (c_gpi->parsed()) {
      auto sigs = signatures_from_qs(detail::parse_csv(primes_csv, "--primes"));
      if (format == "dot") {
        out << graph_to_dot(build_gpi_graph(sigs, threshold)) << "\n";
        return 0;
      }
      FamilyReport rep = family_report(sigs, threshold);
      if (format == "json") {
        out << family_report_to_json(rep) << "\n";
      } else {
        out << "n: " << rep.n << "\nvertices: " << rep.vertex_count
            << "\nomega: " << rep.clique_number << "\nratio: " << rep.ratio_num << "/"
            << rep.ratio_den << "\nineq_2w_plus_1: " << detail::yes_no(rep.bound_2w1_holds)
            << "\nineq_3w_minus_4: " << detail::yes_no(rep.bound_3w4_holds) << "\n";
        for (const Signature& s : rep.family) out << detail::signature_line(s) << "\n";
      }
      return 0;
    }

    if (c_verify->parsed()) {
      BoundReport rep = check_bound(resolve_graph(c_verify));
      if (format == "json") {
        out << bound_report_to_json(rep) << "\n";
      } else {
        out << "vertices: " << rep.vertex_count << "\nomega: " << rep.clique_number
            << "\nbound: " << rep.bound_value << "\nholds: " << detail::yes_no(rep.holds)
            << "\nineq_2w_plus_1: " << detail::yes_no(rep.ineq1_holds) << "\n";
      }
      return rep.holds ? 0 : 1;
    }

    if (c_scan->parsed()) {
      ScanReport rep = scan_psl2(limit);
      if (format == "json") {
        out << scan_report_to_json(rep) << "\n";
      } else {
        out << "limit: " << rep.limit << "\nchecked: " << rep.checked
            << "\nfailures: " << rep.failures.size() << "\n";
        for (const ScanFailure& f : rep.failures)
          out << "q=" << f.q << " clause=" << f.clause << "\n";
      }
      return rep.failures.empty() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace degraph::cli
