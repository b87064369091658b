// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "domcore/domcore.hpp"
#include "oracles.hpp"

using namespace domcore;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string &what) {
    if (!ok) {
      pass = false;
      detail << " FAILED: " << what << ';';
    }
  }
};

int failures = 0;

template <class Body>
void criterion(int id, const std::string &title, Body &&body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    body(v);
  } catch (const std::exception &e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!v.pass) ++failures;
  std::printf("criterion %d %s: %s |%s (%.1fs)\n", id, v.pass ? "PASS" : "FAIL", title.c_str(), v.detail.str().c_str(),
              secs);
  std::fflush(stdout);
}

ConnectedGraphs corpus;

template <class Visit>
std::uint64_t for_each_up_to(int n_max, Visit &&visit) {
  std::uint64_t total = 0;
  for (int n = 1; n <= n_max; ++n)
    for (const Graph &g : corpus.level(n)) {
      visit(g);
      ++total;
    }
  return total;
}

int cli_exit(const std::vector<std::string> &args) {
  std::vector<const char *> argv{"domcore"};
  for (const auto &a : args) argv.push_back(a.c_str());
  std::istringstream in;
  std::ostringstream out, err;
  return cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace

int main() {
  criterion(1, "gamma_exact equals gamma_bruteforce on all connected graphs n <= 8", [](Verdict &v) {
    std::uint64_t mismatches = 0;
    const auto total = for_each_up_to(8, [&](const Graph &g) {
      const auto a = gamma_exact(g), b = gamma_bruteforce(g);
      mismatches += a.gamma != b.gamma || a.witness != b.witness;
    });
    v.require(total == 12113, "corpus size " + std::to_string(total));
    v.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
    v.detail << " graphs=" << total << " mismatches=" << mismatches;
  });

  criterion(2, "classify_all equals classify_by_enumeration (n <= 8 corpus, 10^4 random 9 <= n <= 16)",
            [](Verdict &v) {
              std::uint64_t corpus_bad = 0, random_bad = 0;
              const auto total =
                  for_each_up_to(8, [&](const Graph &g) { corpus_bad += classify_all(g) != classify_by_enumeration(g); });
              std::mt19937_64 rng(20240601);
              std::uniform_int_distribution<int> order(9, 16);
              std::uniform_real_distribution<double> density(0.1, 0.6);
              for (int t = 0; t < 10000; ++t) {
                const Graph g = oracle::random_graph(rng, order(rng), density(rng));
                random_bad += classify_all(g) != classify_by_enumeration(g);
              }
              v.require(corpus_bad == 0, std::to_string(corpus_bad) + " corpus mismatches");
              v.require(random_bad == 0, std::to_string(random_bad) + " random mismatches");
              v.detail << " corpus=" << total << " random=10000 mismatches=" << corpus_bad + random_bad;
            });

  VerificationReport report;
  criterion(3, "invariant suite on all connected graphs n <= 8 has zero violations", [&](Verdict &v) {
    report = verify_corpus(8);
    v.require(report.graphs_checked() == 12113, "corpus size");
    for (const char *name :
         {"theorem-v-plus", "theorem-v-minus", "pendant-gamma-sets-contain-u-or-v", "anticore-disjoint-from-v-minus",
          "core-v-minus-are-isolated", "simplicial-vertex-not-in-core", "cut-vertex-lemma", "attachment-clique-lemma",
          "private-neighbors-nonempty-in-gamma-sets", "gamma-le-i-le-alpha"}) {
      const CheckResult *c = report.find(name);
      v.require(c && c->applicable > 0 && c->violations == 0, name);
      if (c) v.detail << ' ' << name << '=' << c->violations << '/' << c->applicable;
    }
    v.require(report.ok(), "some check in the full suite has violations");
  });

  criterion(4, "class theorems on all connected graphs n <= 8 have zero violations", [&](Verdict &v) {
    for (const char *name : {"chordal-core-equals-v-plus", "cograph-core-at-most-one", "claw-p6-free-core-in-v-plus",
                             "claw-bull-free-core-in-v-plus", "claw-free-gamma-equals-i",
                             "bipartite-claw-free-is-path-or-even-cycle", "twin-clique-partition-preserves-gamma"}) {
      const CheckResult *c = report.find(name);
      v.require(c && c->applicable > 0 && c->violations == 0, name);
      if (c) v.detail << ' ' << name << '=' << c->violations << '/' << c->applicable;
    }
  });

  criterion(5, "no V+/V0/V- graph with empty anticore for n <= 8; one with sizes (1,4,4) at n = 9", [](Verdict &v) {
    SearchOptions opt;
    opt.n_max = 9;
    const auto r = search_signature(signatures::plus_zero_minus_no_anticore(), opt, &corpus);
    v.require(r.smallest_order() == 9, "smallest order is not 9");
    bool shape = false;
    for (const auto &o : r.orders) {
      if (o.n != 9) continue;
      for (const auto &w : o.witnesses) {
        const auto &s = w.report.summary;
        const auto check = classify_by_enumeration(w.graph);
        if (s.plus == 1 && s.zero == 4 && s.minus == 4 && check == w.report) shape = true;
        v.detail << ' ' << w.form.bytes << "(" << s.plus << ',' << s.zero << ',' << s.minus << ')';
      }
      v.detail << " witnesses_at_9=" << o.witnesses.size() << " checked_at_9=" << o.graphs_checked;
    }
    v.require(shape, "no witness with (1,4,4)");
  });

  criterion(6, "witnesses within n <= 10: all-V0 with core, cut vertex in core and V0, V = (core and V0) + anticore",
            [](Verdict &v) {
              for (const auto &sig : {signatures::all_zero_core_nonempty(), signatures::cut_vertex_core_zero(),
                                      signatures::core_zero_or_anticore()}) {
                SearchOptions opt;
                opt.n_max = 10;
                opt.stop_at_first_order = true;
                opt.first_k = 1;
                const auto r = search_signature(sig, opt, &corpus);
                v.detail << ' ' << sig.name << ": " << to_string(r.status);
                if (const auto n = r.smallest_order()) {
                  const auto &w = r.orders.back().witnesses.front();
                  const bool confirmed = sig.evaluate(w.graph, classify_by_enumeration(w.graph));
                  v.detail << " n=" << *n << ' ' << w.form.bytes;
                  v.require(confirmed, sig.name + " witness fails the enumeration check");
                } else {
                  v.require(false, sig.name + " exhausted without a witness");
                }
              }
            });

  criterion(7, "connected graph counts match labeled bucketing (n <= 7) and Polya counting (n = 8, 9)",
            [](Verdict &v) {
              for (int n = 1; n <= 7; ++n) {
                const auto reps = oracle::connected_classes_by_bucketing(n);
                std::set<CanonicalForm> expected, mine;
                for (const Graph &g : reps) expected.insert(canonical_form(g));
                for (const Graph &g : corpus.level(n)) mine.insert(canonical_form(g));
                v.require(reps.size() == corpus.level(n).size() && expected == mine, "bucketing n=" + std::to_string(n));
                if (n >= 3) v.detail << " n" << n << '=' << reps.size();
              }
              const auto analytic = oracle::count_connected(9);
              for (int n = 8; n <= 9; ++n) {
                const auto streamed = corpus.count(n);
                v.require(streamed == static_cast<std::uint64_t>(analytic[n]), "analytic n=" + std::to_string(n));
                v.detail << " n" << n << '=' << streamed << "/" << static_cast<std::uint64_t>(analytic[n]);
              }
            });

  criterion(8, "graph6 round trip on all connected graphs n <= 9; malformed strings exit 2 via the CLI",
            [](Verdict &v) {
              std::uint64_t total = 0, bad = 0;
              std::mutex mu;
              for (int n = 1; n <= 9; ++n)
                corpus.for_each(n, [&](const Graph &g, std::uint64_t) {
                  const std::string s = write_graph6(g);
                  const bool ok = parse_graph6(s) == g && write_graph6(parse_graph6(s)) == s;
                  std::lock_guard lock(mu);
                  ++total;
                  bad += !ok;
                });
              v.require(bad == 0, std::to_string(bad) + " round-trip failures");
              int rejected = 0;
              const auto fuzz = oracle::malformed_graph6();
              for (const auto &s : fuzz) {
                const int code = cli_exit({"classify", "--g6", s});
                rejected += code == cli::kFormat;
                v.require(code == cli::kFormat, "fuzz string accepted or misreported: '" + s + "'");
              }
              v.detail << " roundtrip=" << total << " fuzz_rejected=" << rejected << '/' << fuzz.size();
            });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
