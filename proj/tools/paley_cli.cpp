// paley: command-line front end. JSON is the canonical output; timings go to
// stderr so JSON stays byte-identical across runs and thread counts.

#include "paley/paley.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace paley;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ordered_json field_json(const FieldTable& f) {
  return {{"p", f.p()},
          {"r", f.r()},
          {"q", f.q()},
          {"modulus", f.spec().modulus},
          {"modulus_string", f.modulus_string()},
          {"omega", f.to_index(f.omega())}};
}

ordered_json report_json(const CheckReport& rep) {
  ordered_json items = ordered_json::array();
  for (const auto& it : rep.items) items.push_back({{"name", it.name}, {"passed", it.passed}, {"detail", it.detail}});
  return items;
}

std::string big(const BigInt& v) { return v.str(); }

ordered_json bound_json(const BoundRecord& r) {
  ordered_json j{{"t", r.t}, {"k", r.k}, {"m", r.m}, {"Q_max", r.qmax}, {"witnesses", r.witnesses}};
  j["q_star"] = r.q_star ? ordered_json(*r.q_star) : ordered_json(nullptr);
  j["bound"] = r.bound ? ordered_json(*r.bound) : ordered_json(nullptr);
  return j;
}

FieldTable field_for(std::int64_t q, int k) {
  if (!is_prime_power(q)) throw UsageError("q = " + std::to_string(q) + " is not a prime power");
  if (!valid_modulus(q, k))
    throw UsageError("need k even >= 2 and q = k+1 (mod 2k); got q = " + std::to_string(q) + ", k = " +
                     std::to_string(k));
  return build_field_of_order(q);
}

struct Output {
  std::string path;
  std::string format = "json";

  void emit(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream os(path);
    if (!os) throw UsageError("cannot open output file " + path);
    os << text;
  }
  void emit(const ordered_json& j) const { emit(j.dump(2) + "\n"); }
};

class Stopwatch {
 public:
  explicit Stopwatch(std::string what) : what_(std::move(what)), t0_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() {
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    std::cerr << what_ << ": " << s << "s\n";
  }

 private:
  std::string what_;
  std::chrono::steady_clock::time_point t0_;
};

int cmd_count(int k, std::int64_t q, int m, const std::string& method, const std::string& residual, const Output& out) {
  const FieldTable f = field_for(q, k);
  const bool m3 = m == 3;
  if (m3 && method != "brute" && method != "thm3" && method != "closed")
    throw UsageError("method " + method + " does not count K3; use brute, thm3 or closed");
  if (!m3 && method != "brute" && method != "thm1" && method != "thm2" && method != "closed")
    throw UsageError("method " + method + " does not count K4; use brute, thm1, thm2 or closed");
  if (method == "closed" && k != 2 && k != 4) throw UsageError("closed forms exist only for k = 2 and k = 4");
  const ResidualMode mode = residual == "orbits" ? ResidualMode::orbits : ResidualMode::full;
  BigInt value;
  {
    Stopwatch sw("count " + method);
    if (method == "brute")
      value = count_transitive(build_G(f, k), m);
    else if (method == "thm1")
      value = k4_thm1(f, k);
    else if (method == "thm2")
      value = k4_thm2(f, k, mode);
    else if (method == "thm3")
      value = k3_thm3(f, k);
    else
      value = closed_form(f, k, m);
  }
  if (out.format == "text") {
    out.emit("K" + std::to_string(m) + "(G_" + std::to_string(k) + "(" + std::to_string(q) + ")) = " + big(value) +
             "  [" + method + ", modulus " + f.modulus_string() + ", w = " + std::to_string(f.to_index(f.omega())) +
             "]\n");
    return kExitOk;
  }
  ordered_json j{{"command", "count"}, {"k", k}, {"m", m}, {"method", method}};
  if (method == "thm2") j["residual"] = residual;
  j["field"] = field_json(f);
  j["count"] = big(value);
  out.emit(j);
  return kExitOk;
}

int cmd_verify(int k, std::int64_t q, const std::vector<std::string>& suites, int trials, std::uint64_t seed,
               const Output& out) {
  const FieldTable f = field_for(q, k);
  auto want = [&](const std::string& s) {
    return std::find(suites.begin(), suites.end(), "all") != suites.end() ||
           std::find(suites.begin(), suites.end(), s) != suites.end();
  };
  ordered_json results = ordered_json::object();
  bool ok = true;
  auto run = [&](const std::string& name, const CheckReport& rep) {
    results[name] = report_json(rep);
    ok = ok && rep.ok();
  };
  Stopwatch sw("verify");
  if (want("jacobi")) {
    std::optional<std::int64_t> x;
    if (q % 4 == 1) x = two_squares(q).x;
    run("jacobi", check_jacobi_properties(f, k, trials, seed, x));
  }
  if (want("aggregates")) run("aggregates", check_jtoRS(f, k));
  if (want("identities")) run("identities", identity_suite(f, k, trials, seed));
  if (want("structure")) {
    CheckReport rep = verify_prop41(f, k);
    rep.append(verify_subgraph_counts(f, k));
    run("structure", rep);
  }
  if (want("orbits")) run("orbits", verify_orbit_values(f, k));
  if (results.empty()) throw UsageError("no known suite selected");

  if (out.format == "text") {
    std::ostringstream os;
    for (auto it = results.begin(); it != results.end(); ++it)
      for (const auto& item : it.value())
        os << (item["passed"].get<bool>() ? "pass " : "FAIL ") << it.key() << ": " << item["name"].get<std::string>()
           << (item["detail"].get<std::string>().empty() ? "" : "  (" + item["detail"].get<std::string>() + ")")
           << "\n";
    os << (ok ? "all checks passed\n" : "some checks FAILED\n");
    out.emit(os.str());
  } else {
    ordered_json j{{"command", "verify"}, {"k", k}, {"trials", trials}, {"seed", seed}};
    j["field"] = field_json(f);
    j["passed"] = ok;
    j["suites"] = results;
    out.emit(j);
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_orbits(int k, const Output& out) {
  if (k < 2 || k % 2 != 0) throw UsageError("k must be even and >= 2");
  const auto orbits = enumerate_orbits(k);
  if (out.format == "csv" || out.format == "text") {
    std::ostringstream os;
    os << "representative,size,net,zero_valued\n";
    for (const auto& o : orbits)
      os << '"' << to_string(o.representative) << "\"," << o.size << ',' << o.net << ','
         << (o.zero_valued ? "true" : "false") << '\n';
    out.emit(os.str());
    return kExitOk;
  }
  ordered_json list = ordered_json::array();
  for (const auto& o : orbits)
    list.push_back({{"representative", o.representative}, {"size", o.size}, {"net", o.net}, {"zero_valued", o.zero_valued}});
  out.emit(ordered_json{{"command", "orbits"},
                        {"k", k},
                        {"xk_size", xk_size_formula(k)},
                        {"orbit_count", orbits.size()},
                        {"orbit_count_formula", orbit_count_formula(k)},
                        {"orbits", list}});
  return kExitOk;
}

int cmd_search(int k, int m, std::int64_t qmax, unsigned threads, bool reverify, const Output& out) {
  if (k < 2 || k % 2 != 0) throw UsageError("k must be even and >= 2");
  if (m != 3 && m != 4) throw UsageError("m must be 3 or 4");
  BoundRecord rec;
  {
    Stopwatch sw("search");
    rec = search_zero(k, m, qmax, threads);
  }
  CheckReport rep;
  if (reverify) rep = verify_witnesses(rec);
  if (out.format == "csv") {
    std::ostringstream os;
    os << "t,k,m,Q_max,q_star,bound,witnesses\n"
       << rec.t << ',' << rec.k << ',' << rec.m << ',' << rec.qmax << ','
       << (rec.q_star ? std::to_string(*rec.q_star) : "") << ',' << (rec.bound ? std::to_string(*rec.bound) : "")
       << ",\"";
    for (std::size_t i = 0; i < rec.witnesses.size(); ++i) os << (i ? " " : "") << rec.witnesses[i];
    os << "\"\n";
    out.emit(os.str());
  } else if (out.format == "text") {
    std::ostringstream os;
    os << "R_" << rec.t << "(" << m << ") >= " << (rec.bound ? std::to_string(*rec.bound) : "?") << "  (k = " << k
       << ", q < " << qmax << ", " << rec.witnesses.size() << " witnesses)\n";
    for (const auto& it : rep.items) os << (it.passed ? "pass " : "FAIL ") << it.name << "  " << it.detail << "\n";
    out.emit(os.str());
  } else {
    ordered_json j{{"command", "search"}};
    j.update(bound_json(rec));
    if (reverify) j["reverification"] = report_json(rep);
    out.emit(j);
  }
  return rep.ok() ? kExitOk : kExitFailed;
}

int cmd_table(std::int64_t qmax, unsigned threads, int max_t, const Output& out) {
  std::vector<Table1Row> rows;
  {
    Stopwatch sw("table");
    rows = table1(qmax, threads, max_t);
  }
  auto b = [](const BoundRecord& r) { return r.bound ? std::to_string(*r.bound) : std::string("-"); };
  if (out.format == "csv") {
    std::ostringstream os;
    os << "t,k,R_t(3),R_t(4)\n";
    for (const auto& r : rows) os << r.t << ',' << 2 * r.t << ',' << b(r.r3) << ',' << b(r.r4) << '\n';
    out.emit(os.str());
  } else if (out.format == "text") {
    std::ostringstream os;
    os << " t   k   R_t(3) >=  R_t(4) >=\n";
    for (const auto& r : rows) {
      char line[64];
      std::snprintf(line, sizeof line, "%2d  %2d  %9s  %9s\n", r.t, 2 * r.t, b(r.r3).c_str(), b(r.r4).c_str());
      os << line;
    }
    out.emit(os.str());
  } else {
    ordered_json list = ordered_json::array();
    for (const auto& r : rows) list.push_back({{"t", r.t}, {"m3", bound_json(r.r3)}, {"m4", bound_json(r.r4)}});
    out.emit(ordered_json{{"command", "table"}, {"Q_max", qmax}, {"rows", list}});
  }
  return kExitOk;
}

int cmd_graph(int k, std::int64_t q, const Output& out) {
  const FieldTable f = field_for(q, k);
  std::ostringstream os;
  multicolor_tournament(f, k).write_edge_list(os);
  out.emit(os.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transitive subtournaments of k-th power Paley digraphs and Ramsey lower bounds"};
  app.require_subcommand(1);
  Output out;
  app.add_option("-o,--output", out.path, "Write output to this file instead of stdout");

  int k = 0, m = 4, trials = 50;
  std::int64_t q = 0, qmax = 10000;
  std::uint64_t seed = 1;
  unsigned threads = default_threads();
  std::string method = "brute", residual = "full";
  std::vector<std::string> suites{"all"};
  bool reverify = false;
  int max_t = 5;

  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", out.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
  };

  auto* count = app.add_subcommand("count", "Count transitive subtournaments T_m in G_k(q)");
  count->add_option("--k", k, "Power k (even)")->required();
  count->add_option("--q", q, "Field order q")->required();
  count->add_option("--m", m, "Subtournament order (3 or 4)")->check(CLI::IsMember({3, 4}));
  count->add_option("--method", method, "brute, thm1, thm2, thm3 or closed")
      ->check(CLI::IsMember({"brute", "thm1", "thm2", "thm3", "closed"}));
  count->add_option("--residual", residual, "Residual sum for thm2: full or orbits")
      ->check(CLI::IsMember({"full", "orbits"}));
  add_format(count, {"json", "text"});

  auto* verify = app.add_subcommand("verify", "Run identity and structure checks at (q, k)");
  verify->add_option("--k", k, "Power k (even)")->required();
  verify->add_option("--q", q, "Field order q")->required();
  verify->add_option("--suites", suites, "all, jacobi, aggregates, identities, structure, orbits")
      ->delimiter(',')
      ->check(CLI::IsMember({"all", "jacobi", "aggregates", "identities", "structure", "orbits"}));
  verify->add_option("--trials", trials, "Random draws per randomized check")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Random seed");
  add_format(verify, {"json", "text"});

  auto* orbits = app.add_subcommand("orbits", "Orbits of X_k with sizes and net contributions");
  orbits->add_option("--k", k, "Power k (even)")->required();
  add_format(orbits, {"json", "csv", "text"});

  auto* search = app.add_subcommand("search", "Find q < Q_max with K_m(G_k(q)) = 0");
  search->add_option("--k", k, "Power k (even)")->required();
  search->add_option("--m", m, "Subtournament order (3 or 4)")->check(CLI::IsMember({3, 4}));
  search->add_option("--qmax", qmax, "Exclusive upper limit on q")->check(CLI::PositiveNumber);
  search->add_option("--threads", threads, "Worker threads (default: PALEY_THREADS or hardware)")
      ->check(CLI::PositiveNumber);
  search->add_flag("--reverify", reverify, "Re-check each witness by formula and, for small q, brute force");
  add_format(search, {"json", "csv", "text"});

  auto* table = app.add_subcommand("table", "Lower bounds for R_t(3) and R_t(4)");
  table->add_option("--qmax", qmax, "Exclusive upper limit on q")->check(CLI::PositiveNumber);
  table->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  table->add_option("--max-t", max_t, "Largest colour count")->check(CLI::Range(1, 12));
  add_format(table, {"json", "csv", "text"});

  auto* graph = app.add_subcommand("graph", "Edge list \"a b colour\" of the multicolor tournament P_k(q)");
  graph->add_option("--k", k, "Power k (even)")->required();
  graph->add_option("--q", q, "Field order q")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count) return cmd_count(k, q, m, method, residual, out);
    if (*verify) return cmd_verify(k, q, suites, trials, seed, out);
    if (*orbits) return cmd_orbits(k, out);
    if (*search) return cmd_search(k, m, qmax, threads, reverify, out);
    if (*table) return cmd_table(qmax, threads, max_t, out);
    if (*graph) return cmd_graph(k, q, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}
