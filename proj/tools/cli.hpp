#pragma once

// Command-line front end. Kept in a header so tests can drive run()
// with string streams.
//
//   domcore gamma     (--g6 S | --edges FILE | --stdin-g6) [--all-sets] [--tsv]
//   domcore classify  (--g6 S | --edges FILE | --stdin-g6) [--tsv]
//   domcore recognize (--g6 S | --edges FILE | --stdin-g6) [--tcp V] [--tsv]
//   domcore enumerate --n N [--count] [--jobs K] [--tsv]
//   domcore search    --signature NAME [--nmin A] [--nmax B] [--first K] [--stop-at-first]
//                     [--class LIST] [--max-graphs M] [--jobs K] [--save] [--witness-dir D] [--tsv]
//   domcore search    --list
//   domcore verify    --nmax N [--jobs K] [--tsv]
//
// Exit codes: 0 success, 1 usage error, 2 input format error, 3 budget or
// capacity exceeded.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "domcore/domcore.hpp"
#include "domcore/report_json.hpp"

namespace domcore::cli {

enum ExitCode { kOk = 0, kUsage = 1, kFormat = 2, kBudget = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string g6;
  std::string edges;
  bool stdin_g6 = false;
  bool g6_given = false;
};

inline std::string join(VertexSet s) {
  std::string out;
  for (Vertex v : s) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

/// Feeds every input graph to `each`. Returns kFormat if any stdin line was
/// malformed (diagnosed on `err`, remaining lines still processed).
inline int for_each_input(const InputOptions &in, std::istream &stdin_stream, std::ostream &err,
                          const std::function<void(const Graph &, const std::string &)> &each) {
  const int sources = int(in.g6_given) + int(!in.edges.empty()) + int(in.stdin_g6);
  if (sources != 1) throw UsageError("exactly one of --g6, --edges, --stdin-g6 is required");
  if (in.g6_given) {
    const Graph g = parse_graph6(in.g6);
    each(g, write_graph6(g));
    return kOk;
  }
  if (!in.edges.empty()) {
    std::ifstream file(in.edges);
    if (!file) throw FormatError("cannot open edge list '" + in.edges + "'");
    const Graph g = read_edge_list(file);
    each(g, g.order() <= kGraph6Limit ? write_graph6(g) : std::string());
    return kOk;
  }
  int status = kOk;
  std::string line;
  long line_no = 0;
  while (std::getline(stdin_stream, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    try {
      const Graph g = parse_graph6(line);
      each(g, write_graph6(g));
    } catch (const FormatError &e) {
      err << "line " << line_no << ": " << e.what() << '\n';
      status = kFormat;
    }
  }
  return status;
}

inline void add_input_options(CLI::App *cmd, InputOptions &in) {
  cmd->add_option_function<std::string>(
      "--g6",
      [&in](const std::string &s) {
        in.g6 = s;
        in.g6_given = true;
      },
      "graph6 string");
  cmd->add_option("--edges", in.edges, "edge-list file ('n m' header, then 'u v' lines)");
  cmd->add_flag("--stdin-g6", in.stdin_g6, "read graph6 lines from stdin, one result per line");
}

inline int run(int argc, const char *const *argv, std::istream &input, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact domination analysis: core / corona / anticore and V+ / V0 / V- classification"};
  app.require_subcommand(1);
  bool tsv = false;
  app.add_flag("--tsv", tsv, "tab-separated output instead of JSON")->trigger_on_parse();

  InputOptions input_opts;
  bool all_sets = false;
  std::optional<int> tcp_root;

  auto *gamma_cmd = app.add_subcommand("gamma", "domination number and lexicographically smallest minimum set");
  add_input_options(gamma_cmd, input_opts);
  gamma_cmd->add_flag("--all-sets", all_sets, "also list every minimum dominating set (n <= 24)");
  gamma_cmd->add_flag("--tsv", tsv);

  auto *classify_cmd = app.add_subcommand("classify", "per-vertex removal and membership classes");
  add_input_options(classify_cmd, input_opts);
  classify_cmd->add_flag("--tsv", tsv);

  auto *recognize_cmd = app.add_subcommand("recognize", "graph classes and forbidden induced subgraphs");
  add_input_options(recognize_cmd, input_opts);
  recognize_cmd->add_option("--tcp", tcp_root, "also report the twin clique partition rooted at this vertex");
  recognize_cmd->add_flag("--tsv", tsv);

  int order = 0;
  bool count_only = false;
  int jobs = 1;
  auto *enumerate_cmd = app.add_subcommand("enumerate", "connected graphs of a given order, one per isomorphism class");
  enumerate_cmd->add_option("--n", order, "order (1..10)")->required();
  enumerate_cmd->add_flag("--count", count_only, "print only the number of graphs");
  enumerate_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  enumerate_cmd->add_flag("--tsv", tsv);

  std::string signature_name;
  bool list_signatures = false;
  SearchOptions search_opts;
  search_opts.n_max = 9;
  std::optional<std::size_t> first_k;
  std::string class_text;
  bool save = false;
  std::string witness_dir = "witnesses";
  auto *search_cmd = app.add_subcommand("search", "exhaustive search for graphs with a partition signature");
  search_cmd->add_option("--signature", signature_name, "signature name (see --list)");
  search_cmd->add_flag("--list", list_signatures, "list the available signatures");
  search_cmd->add_option("--nmin", search_opts.n_min, "smallest order searched")->check(CLI::Range(1, kEnumerationLimit));
  search_cmd->add_option("--nmax", search_opts.n_max, "largest order searched")->check(CLI::Range(1, kEnumerationLimit));
  search_cmd->add_option("--first", first_k, "keep at most K witnesses per order");
  search_cmd->add_flag("--stop-at-first", search_opts.stop_at_first_order, "stop after the first order with a witness");
  search_cmd->add_option("--class", class_text, "class filter, e.g. claw-free,P6-free or chordal");
  search_cmd->add_option("--max-graphs", search_opts.max_graphs, "budget: graphs examined before giving up");
  search_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  search_cmd->add_flag("--save", save, "write witnesses to <witness-dir>/<signature>.g6");
  search_cmd->add_option("--witness-dir", witness_dir, "witness directory (DOMCORE_WITNESS_DIR overrides)");
  search_cmd->add_flag("--tsv", tsv);

  int verify_nmax = 0;
  auto *verify_cmd = app.add_subcommand("verify", "check every invariant on all connected graphs up to an order");
  verify_cmd->add_option("--nmax", verify_nmax, "largest order (1..8)")->required()->check(CLI::Range(1, kVerifyLimit));
  verify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--tsv", tsv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gamma_cmd->parsed()) {
      return for_each_input(input_opts, input, err, [&](const Graph &g, const std::string &g6) {
        DominationReport r = all_sets ? all_minimum_dominating_sets(g) : gamma_exact(g);
        if (all_sets) r.witness = gamma_exact(g).witness;
        if (tsv) {
          out << g6 << '\t' << g.order() << '\t' << r.gamma << '\t' << join(r.witness);
          if (r.all_sets)
            for (VertexSet s : *r.all_sets) out << '\t' << join(s);
          out << '\n';
          return;
        }
        Json j;
        j["graph6"] = g6;
        j["n"] = g.order();
        const Json body = to_json(r);
        for (auto &[k, v] : body.items()) j[k] = v;
        out << j.dump() << '\n';
      });
    }

    if (classify_cmd->parsed()) {
      return for_each_input(input_opts, input, err, [&](const Graph &g, const std::string &g6) {
        const ClassificationReport r = classify_all(g);
        if (tsv) {
          std::string removal, membership;
          for (const auto &c : r.per_vertex) {
            removal += (removal.empty() ? "" : ",") + std::string(to_string(c.removal));
            membership += (membership.empty() ? "" : ",") + std::string(to_string(c.membership));
          }
          out << g6 << '\t' << r.gamma << '\t' << removal << '\t' << membership << '\n';
          return;
        }
        Json j;
        j["graph6"] = g6;
        j["n"] = g.order();
        const Json body = to_json(r);
        for (auto &[k, v] : body.items()) j[k] = v;
        out << j.dump() << '\n';
      });
    }

    if (recognize_cmd->parsed()) {
      return for_each_input(input_opts, input, err, [&](const Graph &g, const std::string &g6) {
        const ClassFlags f = class_flags(g);
        if (tsv) {
          out << g6 << "\tchordal=" << f.chordal << "\tbipartite=" << f.bipartite << "\ttree=" << f.tree
              << "\tcograph=" << f.cograph << "\tclaw_free=" << f.claw_free << '\n';
          return;
        }
        Json j;
        j["graph6"] = g6;
        j["n"] = g.order();
        j["m"] = g.edge_count();
        j["classes"] = to_json(f);
        if (tcp_root) j["twin_clique_partition"] = to_json(twin_clique_partition(g, *tcp_root));
        out << j.dump() << '\n';
      });
    }

    if (enumerate_cmd->parsed()) {
      ConnectedGraphs gen(jobs);
      if (count_only) {
        const auto c = gen.count(order);
        if (tsv)
          out << order << '\t' << c << '\n';
        else
          out << Json{{"n", order}, {"count", c}}.dump() << '\n';
        return kOk;
      }
      std::vector<std::string> lines;
      if (order < kEnumerationLimit) {
        for (const Graph &g : gen.level(order)) lines.push_back(write_graph6(g));
      } else {
        std::vector<std::pair<std::uint64_t, std::string>> keyed;
        std::mutex mu;
        gen.for_each(order, [&](const Graph &g, std::uint64_t key) {
          std::string s = write_graph6(g);
          std::lock_guard lock(mu);
          keyed.emplace_back(key, std::move(s));
        });
        std::sort(keyed.begin(), keyed.end());
        for (auto &[k, s] : keyed) lines.push_back(std::move(s));
      }
      if (tsv) {
        for (const auto &s : lines) out << s << '\n';
      } else {
        Json j;
        j["n"] = order;
        j["count"] = lines.size();
        j["graphs"] = lines;
        out << j.dump() << '\n';
      }
      return kOk;
    }

    if (search_cmd->parsed()) {
      if (list_signatures) {
        for (const auto &s : signatures::all()) out << s.name << '\t' << s.description << '\n';
        return kOk;
      }
      if (signature_name.empty()) throw UsageError("search needs --signature (or --list)");
      if (search_opts.n_min > search_opts.n_max) throw UsageError("--nmin exceeds --nmax");
      const PartitionSignature sig = signatures::by_name(signature_name);
      search_opts.jobs = jobs;
      search_opts.first_k = first_k;
      if (!class_text.empty()) search_opts.filter = ClassFilter::parse(class_text);
      const SearchResult result = search_signature(sig, search_opts);

      if (const char *env = std::getenv("DOMCORE_WITNESS_DIR"); env && *env) witness_dir = env;
      if (save) err << "witnesses written to " << save_witnesses(witness_dir, sig, result).string() << '\n';

      if (tsv) {
        for (const auto &o : result.orders)
          for (const auto &w : o.witnesses) {
            const auto &s = w.report.summary;
            out << o.n << '\t' << w.form.bytes << '\t' << w.report.gamma << '\t' << s.plus << ',' << s.zero << ','
                << s.minus << '\t' << s.core << ',' << s.corona_only << ',' << s.anticore << '\n';
          }
        out << "# status\t" << to_string(result.status) << '\n';
      } else {
        out << to_json(result, sig, search_opts.filter).dump() << '\n';
      }
      return result.status == SearchStatus::BudgetExceeded ? kBudget : kOk;
    }

    if (verify_cmd->parsed()) {
      const VerificationReport report = verify_corpus(verify_nmax, jobs);
      if (tsv) {
        for (const auto &c : report.checks)
          out << c.name << '\t' << c.applicable << '\t' << c.violations << '\t' << c.first_counterexample.value_or("-")
              << '\n';
      } else {
        out << to_json(report).dump() << '\n';
      }
      return kOk;
    }
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const FormatError &e) {
    err << "input error: " << e.what() << '\n';
    return kFormat;
  } catch (const CapacityError &e) {
    err << "capacity exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::out_of_range &e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument &e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace domcore::cli
