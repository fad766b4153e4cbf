// Command-line front end: compute the F and G series for a Motzkin path,
// run the verification suite, or dump quiver/path data, as text or JSON.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qq/closedform.hpp"
#include "qq/cluster.hpp"
#include "qq/json_io.hpp"
#include "qq/qlaurent.hpp"
#include "qq/tseries.hpp"
#include "qq/verify.hpp"
#include "qq/weights.hpp"

namespace {

using nlohmann::json;
using namespace qq;

// Usage problems exit with code 2; the message names the offending input.
struct UsageError {
  std::string msg;
};

std::vector<long> parse_heights(const std::string& spec) {
  std::vector<long> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw UsageError{"invalid path \"" + spec + "\": empty entry"};
    try {
      std::size_t used = 0;
      out.push_back(std::stol(cur, &used));
      if (used != cur.size()) throw std::invalid_argument(cur);
    } catch (const std::exception&) {
      throw UsageError{"invalid path \"" + spec + "\": entry \"" + cur +
                       "\" is not an integer"};
    }
    cur.clear();
  };
  for (char c : spec) {
    if (c == ',') flush();
    else cur.push_back(c);
  }
  flush();
  return out;
}

MotzkinPath parse_path(const std::string& spec, int rank) {
  MotzkinPath m(parse_heights(spec));
  if (m.rank() != rank)
    throw UsageError{"path " + m.to_string() + " has " +
                     std::to_string(m.rank()) + " entries; rank " +
                     std::to_string(rank) + " requires " + std::to_string(rank)};
  for (int i = 0; i < m.rank(); ++i)
    if (m.m[i] < 0)
      throw UsageError{"invalid path " + m.to_string() + ": height m_" +
                       std::to_string(i + 1) + " = " + std::to_string(m.m[i]) +
                       " is negative"};
  for (int i = 0; i + 1 < m.rank(); ++i) {
    long d = m.m[i + 1] - m.m[i];
    if (d > 1 || d < -1)
      throw UsageError{"invalid path " + m.to_string() + ": step " +
                       std::to_string(i + 1) + " -> " + std::to_string(i + 2) +
                       " changes height by " + std::to_string(d) +
                       "; adjacent heights may differ by at most 1"};
  }
  return m;
}

std::vector<MotzkinPath> select_paths(const std::string& spec, int rank) {
  if (spec == "all") return enumerate_fundamental(rank);
  return {parse_path(spec, rank)};
}

// q -> 1 on every coefficient, for the --q1 series view.
TorusElem specialize_q1(const TorusElem& x) {
  TorusElem out(x.form());
  for (const auto& [e, c] : x.terms()) out.add_term(e, QLaurent(eval_q1(c)));
  return out;
}

json path_json(const MotzkinPath& m) { return json(m.m); }

std::string matrix_text(const std::vector<std::vector<long>>& b) {
  std::string out = "[";
  for (std::size_t u = 0; u < b.size(); ++u) {
    out += u ? ",[" : "[";
    for (std::size_t v = 0; v < b[u].size(); ++v)
      out += (v ? "," : "") + std::to_string(b[u][v]);
    out += "]";
  }
  return out + "]";
}

std::string label_text(const GenLabel& g) {
  return "(" + std::to_string(g.first) + "," + std::to_string(g.second) + ")";
}

int run_paths(int rank, const std::string& format) {
  std::vector<MotzkinPath> all = enumerate_fundamental(rank);
  if (format == "json") {
    json out{{"schema", 1}, {"mode", "paths"}, {"rank", rank}};
    json list = json::array();
    for (const MotzkinPath& m : all) list.push_back(path_json(m));
    out["paths"] = std::move(list);
    std::printf("%s\n", out.dump(2).c_str());
  } else {
    for (const MotzkinPath& m : all) std::printf("%s\n", m.to_string().c_str());
  }
  return 0;
}

int run_series(int rank, const std::vector<MotzkinPath>& paths, int order,
               bool q1, const std::string& format) {
  json results = json::array();
  for (const MotzkinPath& m : paths) {
    WeightVector w = weights_explicit(build_seed(m));
    TSeries f = series_closed(w, SeriesKind::F, order);
    TSeries g = series_closed(w, SeriesKind::G, order);
    if (q1) {
      for (int n = 0; n <= order; ++n) {
        f.at(n) = specialize_q1(f.at(n));
        g.at(n) = specialize_q1(g.at(n));
      }
    }
    if (format == "json") {
      results.push_back(
          {{"path", path_json(m)}, {"F", json_of(f)}, {"G", json_of(g)}});
    } else {
      std::printf("path %s order %d\n", m.to_string().c_str(), order);
      for (int n = 0; n <= order; ++n)
        std::printf("F[t^%d] = %s\n", n, f.at(n).to_string().c_str());
      for (int n = 0; n <= order; ++n)
        std::printf("G[t^%d] = %s\n", n, g.at(n).to_string().c_str());
    }
  }
  if (format == "json") {
    json out{{"schema", 1}, {"mode", "series"}, {"rank", rank},
             {"order", order}, {"q1", q1}, {"results", std::move(results)}};
    std::printf("%s\n", out.dump(2).c_str());
  }
  return 0;
}

int run_quiver(int rank, const std::vector<MotzkinPath>& paths,
               const std::string& format) {
  json results = json::array();
  for (const MotzkinPath& m : paths) {
    ExchangeMatrix b = build_exchange_matrix(m);
    std::vector<GenLabel> labels = seed_labels(m);
    std::vector<QuiverArrow> ex = quiver_arrows(b, labels);
    std::vector<WeightArrow> comm = comm_quiver(weights_explicit(build_seed(m)));
    if (format == "json") {
      json jex = json::array();
      for (const QuiverArrow& a : ex)
        jex.push_back({{"from", {a.from.first, a.from.second}},
                       {"to", {a.to.first, a.to.second}},
                       {"mult", a.mult}});
      json jcm = json::array();
      for (const WeightArrow& a : comm)
        jcm.push_back({{"from", a.from}, {"to", a.to}, {"mult", a.mult}});
      results.push_back({{"path", path_json(m)},
                         {"B", b.B},
                         {"exchange", std::move(jex)},
                         {"commutation", std::move(jcm)}});
    } else {
      std::printf("path %s\n", m.to_string().c_str());
      std::printf("B = %s\n", matrix_text(b.B).c_str());
      std::printf("exchange quiver:\n");
      for (const QuiverArrow& a : ex)
        std::printf("  %s -> %s : %ld\n", label_text(a.from).c_str(),
                    label_text(a.to).c_str(), a.mult);
      std::printf("commutation quiver:\n");
      for (const WeightArrow& a : comm)
        std::printf("  y%d -> y%d : %ld\n", a.from, a.to, a.mult);
    }
  }
  if (format == "json") {
    json out{{"schema", 1}, {"mode", "quiver"}, {"rank", rank},
             {"results", std::move(results)}};
    std::printf("%s\n", out.dump(2).c_str());
  }
  return 0;
}

int run_verify(int rank, const std::vector<MotzkinPath>& paths, int order,
               bool q1, int threads, const std::string& format) {
  VerifyConfig cfg;
  cfg.rank = rank;
  cfg.paths = paths;
  cfg.order = order;
  cfg.q1 = q1;
  cfg.threads = threads;
  std::vector<CheckResult> checks = run_checks(cfg);
  bool ok = all_pass(checks);
  if (format == "json") {
    json rows = json::array();
    for (const CheckResult& c : checks)
      rows.push_back({{"path", c.path}, {"name", c.name},
                      {"pass", c.pass}, {"detail", c.detail}});
    json out{{"schema", 1}, {"mode", "verify"}, {"rank", rank},
             {"order", order}, {"q1", q1}, {"checks", std::move(rows)},
             {"all_pass", ok}};
    std::printf("%s\n", out.dump(2).c_str());
  } else {
    for (const CheckResult& c : checks) {
      std::string where = c.path.empty() ? "" : c.path + " ";
      std::printf("[%s] %s%s (%s)\n", c.pass ? "PASS" : "FAIL", where.c_str(),
                  c.name.c_str(), c.detail.c_str());
    }
    if (ok) {
      std::printf("all checks pass\n");
    } else {
      for (const CheckResult& c : checks)
        if (!c.pass) {
          std::printf("first failure: %s %s: %s\n", c.path.c_str(),
                      c.name.c_str(), c.detail.c_str());
          break;
        }
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum Q-system series, verification, and quiver inspection"};
  int rank = 0;
  std::string path_spec = "all";
  int order = -1;
  std::string mode = "series";
  std::string format = "text";
  bool q1 = false;
  int threads = 0;
  app.add_option("--rank", rank, "rank r >= 1")->required();
  app.add_option("--path", path_spec,
                 "heights m_1,...,m_r (comma-separated) or \"all\"");
  app.add_option("--order", order, "truncation order N >= 0 (default per rank)");
  app.add_option("--mode", mode, "series | verify | quiver | paths")
      ->check(CLI::IsMember({"series", "verify", "quiver", "paths"}));
  app.add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--q1", q1, "commutative specialization (q = 1)");
  app.add_option("--threads", threads,
                 "worker threads; QQ_SEED_THREADS, then hardware, if unset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (rank < 1) throw UsageError{"rank must be >= 1"};
    if (app.count("--order") && order < 0) throw UsageError{"order must be >= 0"};
    if (order < 0) order = default_order(rank);
    if (mode == "paths") return run_paths(rank, format);
    std::vector<MotzkinPath> paths = select_paths(path_spec, rank);
    if (mode == "series") return run_series(rank, paths, order, q1, format);
    if (mode == "quiver") return run_quiver(rank, paths, format);
    return run_verify(rank, paths, order, q1, threads, format);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.msg.c_str());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
