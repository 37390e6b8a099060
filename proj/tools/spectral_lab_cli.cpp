// spectral-lab: command-line front end.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "spectral_lab/spectral_lab.hpp"

using namespace spectral_lab;
using nlohmann::json;

namespace {

struct RunConfig {
  std::string subcommand;
  int n = 6;
  int seeds = 10;
  std::uint64_t seed = 1;
  int max_iter = 1000;
  std::string format;
  std::string out;
  std::string in;
  double tolerance = 1e-9;
  int workers = 1;
  bool allow_slow = false;

  json to_json() const {
    return {{"subcommand", subcommand}, {"n", n},          {"seeds", seeds},     {"seed", seed},
            {"max_iter", max_iter},     {"format", format}, {"out", out},         {"in", in},
            {"tolerance", tolerance},   {"workers", workers}, {"allow_slow", allow_slow}};
  }

  std::string header(const std::string& prefix) const { return prefix + "config " + to_json().dump() + "\n"; }
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + cfg.out);
  f << text;
}

std::string read_input(const RunConfig& cfg) {
  std::ostringstream ss;
  if (cfg.in.empty() || cfg.in == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(cfg.in, std::ios::binary);
    if (!f) throw UsageError("cannot read " + cfg.in);
    ss << f.rdbuf();
  }
  return ss.str();
}

// JSON edge list (bipartite {n_left, n_right, edges} or plain {n, edges}) or graph6.
Graph parse_graph(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw UsageError("empty graph input");
  if (text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw UsageError(std::string("unparsable JSON: ") + e.what());
    }
    if (j.contains("n_left")) return bipartite_from_json(j).to_graph();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Graph(j.at("n").get<int>(), edges);
  }
  try {
    return decode_graph6(text);
  } catch (const Graph6Error& e) {
    throw UsageError(std::string("unparsable graph6: ") + e.what());
  }
}

std::string fmt(double x, int digits = 12) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

// ---------------------------------------------------------------------------

int cmd_construct(RunConfig& cfg) {
  if (cfg.n < 6) throw UsageError("construct: --n must be at least 6");
  if (cfg.format.empty()) cfg.format = "graph6";
  const auto h = build_h2n(cfg.n);
  if (cfg.format == "graph6") {
    std::cerr << cfg.header("# ");
    emit(cfg, encode_graph6(h) + "\n");
  } else if (cfg.format == "json") {
    json j = to_json(h);
    j["config"] = cfg.to_json();
    emit(cfg, j.dump() + "\n");
  } else if (cfg.format == "csv") {
    std::string s = cfg.header("# ") + "u,v\n";
    for (const auto& [u, v] : h.edges()) s += std::to_string(u) + "," + std::to_string(v) + "\n";
    emit(cfg, s);
  } else {
    std::string s = cfg.header("# ");
    for (int u = 0; u < h.n_left(); ++u) {
      s += "u" + std::to_string(u + 1) + ":";
      for (int v : h.left_neighbors(u)) s += " v" + std::to_string(v + 1);
      s += "\n";
    }
    emit(cfg, s);
  }
  return 0;
}

int cmd_spectrum(RunConfig& cfg) {
  if (cfg.format.empty()) cfg.format = "json";
  const Graph g = parse_graph(read_input(cfg));
  if (g.order() < 2) throw UsageError("spectrum: graph needs at least two vertices");
  const auto r = algebraic_connectivity(g);
  json rep = {{"config", cfg.to_json()},
              {"order", g.order()},
              {"size", g.size()},
              {"a", r.value},
              {"multiplicity", r.multiplicity},
              {"residual", r.residual},
              {"connected", is_connected(g)},
              {"fiedler_vector", r.vector}};
  int status = 0;
  if (!is_connected(g)) rep["warning"] = "disconnected input: a(G) = 0";
  if (g.regular_degree() >= 0) {
    const double gap = spectral_gap(g);
    rep["spectral_gap"] = gap;
    rep["gap_minus_a"] = gap - r.value;
    rep["gap_identity_ok"] = std::abs(gap - r.value) <= cfg.tolerance;
    if (std::abs(gap - r.value) > cfg.tolerance) status = 1;
  }
  // Sandwich check when the input is H_2n.
  if (g.order() % 2 == 0 && g.order() >= 12 && g.regular_degree() == 3) {
    const int n = g.order() / 2;
    try {
      const auto bg = to_bipartite(g);
      if (canonical_form(bg) == canonical_form(build_h2n(n))) {
        const double lo = path_fiedler_closed_form(n), hi = path_fiedler_closed_form(n - 4);
        const bool ok = lo - cfg.tolerance <= r.value && r.value <= hi + cfg.tolerance;
        rep["sandwich"] = {{"n", n}, {"a_Pn", lo}, {"a_Pn_minus_4", hi}, {"ok", ok}};
        if (!ok) status = 1;
      }
    } catch (const std::invalid_argument&) {
      // not bipartite
    }
  }
  if (cfg.format == "json") {
    emit(cfg, rep.dump(2) + "\n");
  } else if (cfg.format == "text" || cfg.format == "csv") {
    std::ostringstream os;
    os << cfg.header("# ");
    if (cfg.format == "csv") {
      os << "key,value\n";
      for (const auto& [k, v] : rep.items())
        if (k != "config" && k != "fiedler_vector" && k != "sandwich") os << k << "," << v.dump() << "\n";
    } else {
      os << "a(G) = " << std::fixed << std::setprecision(9) << r.value << "\n";
      os << "multiplicity = " << r.multiplicity << "\n";
      if (rep.contains("spectral_gap"))
        os << "spectral gap = " << rep["spectral_gap"].get<double>() << "\ngap - a = " << std::scientific
           << rep["gap_minus_a"].get<double>() << std::fixed << "\n";
      if (rep.contains("sandwich"))
        os << "sandwich a(P" << rep["sandwich"]["n"] << ") <= a <= a(P" << rep["sandwich"]["n"].get<int>() - 4
           << "): " << (rep["sandwich"]["ok"].get<bool>() ? "ok" : "VIOLATED") << "\n";
      if (rep.contains("warning")) os << "warning: " << rep["warning"].get<std::string>() << "\n";
      os << "fiedler vector:";
      for (double v : r.vector) os << " " << std::setprecision(9) << v;
      os << "\n";
    }
    emit(cfg, os.str());
  } else {
    throw UsageError("spectrum: format must be json, csv or text");
  }
  return status;
}

int cmd_descend(RunConfig& cfg) {
  if (cfg.format.empty()) cfg.format = "json";
  if (cfg.n < 3) throw UsageError("descend: --n must be at least 3");
  if (cfg.seeds < 1) throw UsageError("descend: --seeds must be positive");
  const DescentOptions opts{.max_iter = cfg.max_iter, .strict_tol = cfg.tolerance};
  std::vector<DescentTrace> traces(static_cast<std::size_t>(cfg.seeds));
  auto run = [&](int w, int workers) {
    for (int s = w; s < cfg.seeds; s += workers) {
      std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(s));
      traces[s] = descend(random_cubic_bipartite(cfg.n, rng), opts);
    }
  };
  const int workers = std::max(1, std::min(cfg.workers, cfg.seeds));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
  for (auto& t : pool) t.join();

  double reference = std::numeric_limits<double>::quiet_NaN();
  if (cfg.n >= 6) reference = algebraic_connectivity(build_h2n(cfg.n)).value;
  std::map<std::string, int> histogram;
  int below = 0, at_min = 0;
  std::map<std::string, int> reasons;
  for (const auto& t : traces) {
    histogram[fmt(t.final_value(), 9)]++;
    reasons[to_string(t.terminal_reason)]++;
    if (cfg.n >= 6) {
      below += t.final_value() < reference - cfg.tolerance;
      at_min += std::abs(t.final_value() - reference) <= cfg.tolerance;
    }
  }
  json summary = {{"seeds", cfg.seeds}, {"terminal_histogram", histogram}, {"terminal_reasons", reasons}};
  if (cfg.n >= 6) {
    summary["a_h2n"] = reference;
    summary["reached_h2n_value"] = at_min;
    summary["below_h2n_value"] = below;
  }

  std::ostringstream os;
  if (cfg.format == "json") {
    os << json{{"config", cfg.to_json()}}.dump() << "\n";
    for (int s = 0; s < cfg.seeds; ++s) os << to_jsonl(traces[s], cfg.seed + static_cast<std::uint64_t>(s));
    os << json{{"summary", summary}}.dump() << "\n";
  } else if (cfg.format == "csv") {
    os << cfg.header("# ") << "seed,steps,initial_a,final_a,terminal_reason,final_graph6\n";
    for (int s = 0; s < cfg.seeds; ++s) {
      const auto& t = traces[s];
      os << cfg.seed + static_cast<std::uint64_t>(s) << "," << t.steps.size() - 1 << ","
         << fmt(t.steps.front().a_value, 17) << "," << fmt(t.final_value(), 17) << ","
         << to_string(t.terminal_reason) << "," << t.steps.back().graph6 << "\n";
    }
  } else if (cfg.format == "graph6") {
    std::cerr << cfg.header("# ");
    for (const auto& t : traces) os << t.steps.back().graph6 << "\n";
  } else {
    os << cfg.header("# ") << "terminal a-value histogram over " << cfg.seeds << " seeds\n";
    for (const auto& [v, c] : histogram) os << "  " << v << "  " << c << "\n";
    if (cfg.n >= 6)
      os << "a(H_" << 2 * cfg.n << ") = " << fmt(reference, 9) << "; reached by " << at_min << ", below it: " << below
         << "\n";
  }
  emit(cfg, os.str());
  return below == 0 ? 0 : 1;
}

int cmd_certify(RunConfig& cfg) {
  if (cfg.format.empty()) cfg.format = "text";
  if (cfg.n < 3 || cfg.n > 8) throw UsageError("certify: --n must be in [3, 8]");
  if (cfg.n == 8 && !cfg.allow_slow) throw UsageError("certify: n = 8 requires --allow-slow");
  const auto records = enumeration_records(cfg.n, {.workers = cfg.workers, .allow_slow = cfg.allow_slow});
  const auto mini = certify_minimizer(records, cfg.n, cfg.tolerance);
  const auto equiv = certify_equivalence(records, cfg.n, cfg.tolerance);
  const bool ok = mini.passed && equiv.passed;

  const std::string csv = records_csv(records);
  const std::string csv_name = "certify_n" + std::to_string(cfg.n) + ".csv";
  std::string csv_path = cfg.out.empty() ? csv_name : cfg.out + ".classes.csv";
  {
    std::ofstream f(csv_path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + csv_path);
    f << csv;
  }

  json rep = {{"config", cfg.to_json()},
              {"classes", records.size()},
              {"classes_csv", csv_path},
              {"classes_hash", hash_hex(content_hash(csv))},
              {"minimizer",
               {{"passed", mini.passed},
                {"asserted", mini.asserted},
                {"min_a", mini.min_value},
                {"argmin_classes", mini.argmin.size()},
                {"argmin_is_h2n", mini.argmin_is_h2n},
                {"runner_up_gap", std::isfinite(mini.runner_up_gap) ? json(mini.runner_up_gap) : json(nullptr)},
                {"message", mini.message}}},
              {"equivalence",
               {{"passed", equiv.passed},
                {"asserted", equiv.asserted},
                {"max_pm", to_string(equiv.max_pm)},
                {"argmax_pm_classes", equiv.argmax_pm.size()},
                {"argmin_a_classes", equiv.argmin_a.size()},
                {"coincide", equiv.coincide},
                {"message", equiv.message}}},
              {"passed", ok}};
  if (auto cache = ResultCache::from_environment()) {
    cache->store(csv_name, csv);
    cache->store("certify_n" + std::to_string(cfg.n) + ".json", rep.dump(2) + "\n");
    rep["cache_dir"] = cache->directory().string();
  }

  std::ostringstream os;
  if (cfg.format == "json") {
    os << rep.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << cfg.header("# ") << csv;
  } else {
    os << cfg.header("# ");
    os << "classes: " << records.size() << " (csv: " << csv_path << ")\n";
    os << "minimum algebraic connectivity: " << (mini.passed ? "PASS" : "FAIL") << "  " << mini.message << "\n";
    os << "perfect matching equivalence:   " << (equiv.passed ? "PASS" : "FAIL") << "  " << equiv.message << "\n";
    for (std::size_t i = 0; i < records.size(); ++i)
      os << "  " << records[i].graph6 << "  a=" << fmt(records[i].a_value, 10) << "  pm=" << to_string(records[i].pm_count)
         << (records[i].is_h2n ? "  H_2n" : "") << "\n";
  }
  if (!cfg.out.empty()) {
    emit(cfg, os.str());
  } else {
    std::cout << os.str();
  }
  return ok ? 0 : 1;
}

int cmd_asymptotics(RunConfig& cfg) {
  if (cfg.format.empty()) cfg.format = "csv";
  if (cfg.n < 6 || cfg.n > 500) throw UsageError("asymptotics: --n (n_max) must be in [6, 500]");
  std::ostringstream os;
  json rows = json::array();
  bool ok = true;
  for (int n = 6; n <= cfg.n; ++n) {
    const double a = algebraic_connectivity(build_h2n(n)).value;
    const double lo = path_fiedler_closed_form(n), hi = path_fiedler_closed_form(n - 4);
    const double ratio = n * n * a / (std::numbers::pi * std::numbers::pi);
    ok = ok && lo - cfg.tolerance <= a && a <= hi + cfg.tolerance;
    rows.push_back({n, a, lo, hi, ratio});
  }
  if (cfg.format == "json") {
    os << json{{"config", cfg.to_json()}, {"columns", {"n", "a_h2n", "a_pn", "a_pn_minus_4", "ratio"}},
               {"rows", rows}, {"sandwich_ok", ok}}.dump()
       << "\n";
  } else if (cfg.format == "csv" || cfg.format == "text") {
    os << cfg.header("# ") << "n,a_h2n,a_pn,a_pn_minus_4,ratio\n";
    for (const auto& r : rows)
      os << r[0].get<int>() << "," << fmt(r[1].get<double>(), 17) << "," << fmt(r[2].get<double>(), 17) << ","
         << fmt(r[3].get<double>(), 17) << "," << fmt(r[4].get<double>(), 17) << "\n";
  } else {
    throw UsageError("asymptotics: format must be csv, json or text");
  }
  emit(cfg, os.str());
  return ok ? 0 : 1;
}

int cmd_profile(RunConfig& cfg) {
  if (cfg.format.empty()) cfg.format = "csv";
  if (cfg.n < 6 || cfg.n > 20) throw UsageError("profile: --n (n_max) must be in [6, 20]");
  const auto p = h2n_matching_profile(cfg.n);
  std::ostringstream os;
  if (cfg.format == "json") {
    json rows = json::array();
    for (const auto& r : p.rows) rows.push_back({{"n", r.n}, {"pm_count", to_string(r.pm_count)}});
    os << json{{"config", cfg.to_json()}, {"rows", rows}, {"recurrence", p.recurrence.description}}.dump() << "\n";
  } else {
    os << cfg.header("# ") << "# recurrence: " << p.recurrence.description << "\nn,pm_count\n";
    for (const auto& r : p.rows) os << r.n << "," << to_string(r.pm_count) << "\n";
  }
  emit(cfg, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral-lab: algebraic connectivity of cubic bipartite graphs"};
  app.require_subcommand(1);
  RunConfig cfg;
  const std::vector<std::string> formats{"json", "csv", "graph6", "text"};

  // Subcommands share cfg, so per-subcommand defaults for --n are applied after parsing.
  std::map<std::string, int> default_n;
  auto common = [&](CLI::App* sub, int n_default) {
    default_n[sub->get_name()] = n_default;
    sub->add_option("--n", cfg.n, "size parameter (vertices per part, or n_max); default " + std::to_string(n_default));
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", cfg.out, "output file (default stdout)");
    sub->add_option("--tolerance", cfg.tolerance, "comparison tolerance")->default_val(1e-9);
  };

  auto* construct = app.add_subcommand("construct", "emit H_2n");
  common(construct, 6);
  auto* spectrum = app.add_subcommand("spectrum", "algebraic connectivity report for a graph6 or JSON graph");
  common(spectrum, 6);
  spectrum->add_option("input", cfg.in, "input file, '-' or absent for stdin");
  auto* descend_cmd = app.add_subcommand("descend", "swap descent from random cubic bipartite starts");
  common(descend_cmd, 6);
  descend_cmd->add_option("--seeds", cfg.seeds, "number of random starts")->default_val(10);
  descend_cmd->add_option("--seed", cfg.seed, "base seed; start s uses seed + s")->default_val(1);
  descend_cmd->add_option("--max-iter", cfg.max_iter, "swap budget per start")->default_val(1000);
  descend_cmd->add_option("--workers", cfg.workers, "worker threads")->default_val(1);
  auto* certify = app.add_subcommand("certify", "exhaustive minimiser and matching certification");
  common(certify, 6);
  certify->add_option("--workers", cfg.workers, "worker threads")->default_val(1);
  certify->add_flag("--allow-slow", cfg.allow_slow, "permit n = 8");
  auto* asymptotics = app.add_subcommand("asymptotics", "a(H_2n) against path bounds, n = 6..n_max");
  common(asymptotics, 200);
  auto* profile = app.add_subcommand("profile", "perfect matching counts of H_2n, n = 6..n_max");
  common(profile, 20);

  CLI11_PARSE(app, argc, argv);
  const auto* chosen = app.get_subcommands().front();
  cfg.subcommand = chosen->get_name();
  if (chosen->count("--n") == 0) cfg.n = default_n.at(cfg.subcommand);
  try {
    if (cfg.subcommand == "construct") return cmd_construct(cfg);
    if (cfg.subcommand == "spectrum") return cmd_spectrum(cfg);
    if (cfg.subcommand == "descend") return cmd_descend(cfg);
    if (cfg.subcommand == "certify") return cmd_certify(cfg);
    if (cfg.subcommand == "asymptotics") return cmd_asymptotics(cfg);
    if (cfg.subcommand == "profile") return cmd_profile(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
