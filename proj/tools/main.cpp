// sqh: presentations, operator matrices and verification suites for the
// quantum cohomology of flag varieties.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <mutex>
#include <thread>

#include <CLI11.hpp>

#include "cache.hpp"
#include "sqh/classical.hpp"
#include "sqh/errors.hpp"
#include "sqh/qh_stable.hpp"
#include "sqh/suites.hpp"
#include "sqh/textio.hpp"
#include "sqh/toda.hpp"

namespace {

using namespace sqh;
using sqh::cli::CacheKey;
using sqh::cli::MatrixCache;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kResource = 3 };

struct Options {
  std::string family;
  int rank = 0;
  std::string weight;
  std::string k;
  std::string suite = "all";
  std::string format = "text";
  std::string which = "mchi";
  std::string cache_action;
  std::string cache_dir;
  int jobs = 1;
  std::size_t max_weyl = kDefaultMaxWeyl;
  double timeout = 0;
  bool timings = false;
};

json envelope(const std::string& command, const Options& o, json payload) {
  // Only settings that change the result go into the config, so the output
  // is byte-identical across --jobs, --cache-dir and the resource caps.
  json config;
  config["command"] = command;
  if (command == "verify") config["suite"] = o.suite;
  if (command == "matrix") config["which"] = o.which;
  if (!o.family.empty()) config["family"] = o.family;
  if (o.rank) config["rank"] = o.rank;
  if (!o.weight.empty()) config["weight"] = o.weight;
  if (!o.k.empty()) config["k"] = o.k;
  config["format"] = o.format;
  json j;
  j["meta"] = {{"version", SQH_VERSION}, {"config", config}};
  j["payload"] = std::move(payload);
  return j;
}

Family need_family(const Options& o) {
  if (o.family.empty()) throw DomainError("--family is required");
  return parse_family(o.family);
}

int need_rank(const Options& o) {
  if (o.rank < 1) throw DomainError("--rank is required and must be positive");
  return o.rank;
}

// ---------------------------------------------------------------- present

int run_present(const Options& o) {
  RootSystem rs = build_root_system(need_family(o), need_rank(o));
  Presentation p = emit_presentation(rs);
  if (o.format == "json")
    std::cout << envelope("present", o, p.to_json()).dump(2) << '\n';
  else if (o.format == "latex")
    std::cout << p.to_latex();
  else
    std::cout << p.to_text();
  return kOk;
}

// ---------------------------------------------------------------- matrix

SymMatrix compute_matrix(const Options& o, Family f, int n) {
  if (o.which == "mchi") return m_chi(f, n);
  if (o.which == "achi") {
    if (f != Family::D) throw DomainError("A(chi) exists for type D only");
    return a_chi(n);
  }
  if (o.which == "toda") return toda_matrix_limit(standard_job(f, n)).limit;
  auto ctx = weyl_context(f, n, o.max_weyl);
  Weight lambda = parse_weight(ctx->rs, o.weight.empty() ? "-e1" : o.weight);
  if (o.which == "theta") return theta_matrix(*ctx, lambda).skeleton([](const Weight& mu) { return chi_form(mu); });
  if (o.which == "chevalley") return chevalley_operator(*ctx, lambda, Variant::D);
  throw DomainError("unknown matrix '" + o.which + "'");
}

bool weight_matters(const std::string& which) { return which == "theta" || which == "chevalley"; }

std::string matrix_latex(const SymMatrix& m) {
  std::string s = "\\begin{pmatrix}\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) s += (c ? " & " : "  ") + to_latex(m(r, c));
    s += r + 1 < m.rows() ? " \\\\\n" : "\n";
  }
  return s + "\\end{pmatrix}\n";
}

int run_matrix(const Options& o) {
  Family f = o.which == "achi" && o.family.empty() ? Family::D : need_family(o);
  int n = need_rank(o);
  CacheKey key{o.which, family_name(f), n, weight_matters(o.which) ? (o.weight.empty() ? "-e1" : o.weight) : "", 0};
  MatrixCache cache(cli::resolve_cache_dir(o.cache_dir));
  std::optional<SymMatrix> m = cache.load(key);
  if (!m) {
    m = compute_matrix(o, f, n);
    try {
      cache.store(key, *m);
    } catch (const std::exception& e) {
      std::cerr << "warning: not cached: " << e.what() << '\n';
    }
  }
  if (o.format == "json") {
    json entries = json::array();
    for (Eigen::Index r = 0; r < m->rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < m->cols(); ++c) row.push_back(to_text((*m)(r, c)));
      entries.push_back(std::move(row));
    }
    json payload = {{"rows", m->rows()}, {"cols", m->cols()}, {"entries", entries}};
    std::cout << envelope("matrix", o, payload).dump(2) << '\n';
  } else if (o.format == "latex") {
    std::cout << matrix_latex(*m);
  } else {
    for (Eigen::Index r = 0; r < m->rows(); ++r)
      for (Eigen::Index c = 0; c < m->cols(); ++c)
        if (!(*m)(r, c).is_zero()) std::cout << "(" << r + 1 << "," << c + 1 << ") " << to_text((*m)(r, c)) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- verify

// Reports finished so far, kept so the watchdog can print a partial result.
struct Progress {
  std::mutex mu;
  std::map<std::size_t, std::vector<VerifyReport>> done;
  const Options* verify = nullptr;  // set while a verify run is in flight
  bool printing = false;            // the main thread owns stdout from here on
};
Progress progress;

void print_reports(const Options& o, const std::vector<VerifyReport>& reports, const std::string& stopped) {
  std::size_t failed = 0;
  for (const auto& r : reports) failed += r.pass ? 0 : 1;

  if (o.timings)
    for (const auto& r : reports) std::fprintf(stderr, "%9.3f s  %s  %s\n", r.seconds, r.suite.c_str(), r.instance.c_str());

  if (o.format == "json") {
    json list = json::array();
    for (const auto& r : reports) list.push_back(r.to_json());
    json payload = {{"reports", list}, {"passed", reports.size() - failed}, {"failed", failed}};
    if (!stopped.empty()) payload["stopped"] = stopped;
    std::cout << envelope("verify", o, payload).dump(2) << '\n';
  } else {
    for (const auto& r : reports) std::cout << r.line() << '\n';
    std::cout << reports.size() << " checks, " << reports.size() - failed << " passed, " << failed << " failed";
    std::cout << (stopped.empty() ? "" : " (partial: " + stopped + ")") << '\n';
    for (const auto& r : reports) {
      if (r.pass) continue;
      std::cout << "\nFAIL " << r.suite << "  " << r.instance << "\n  " << r.detail << '\n';
      if (!r.reproducer.empty()) std::cout << "  rerun: " << r.reproducer << '\n';
    }
  }
  std::cout.flush();
}

int run_verify(const Options& o) {
  SuiteConfig cfg;
  if (!o.family.empty()) cfg.family = parse_family(o.family);
  if (o.rank) cfg.rank = o.rank;
  if (!o.weight.empty()) cfg.weight = o.weight;
  if (!o.k.empty()) cfg.k = parse_k_range(o.k);
  cfg.jobs = o.jobs;
  cfg.max_weyl = o.max_weyl;
  cfg.timeout_seconds = o.timeout;
  cfg.on_task_done = [](std::size_t i, const std::vector<VerifyReport>& r) {
    std::lock_guard<std::mutex> lock(progress.mu);
    progress.done[i] = r;
  };
  {
    std::lock_guard<std::mutex> lock(progress.mu);
    progress.verify = &o;
  }

  std::vector<VerifyReport> reports;
  try {
    reports = run_suite(o.suite, cfg);
  } catch (const SuiteTimeout& e) {
    std::lock_guard<std::mutex> lock(progress.mu);
    progress.printing = true;
    print_reports(o, e.completed, e.what());
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  }
  std::lock_guard<std::mutex> lock(progress.mu);
  progress.printing = true;
  print_reports(o, reports, "");
  for (const auto& r : reports)
    if (!r.pass) return kFailed;
  return kOk;
}

// ---------------------------------------------------------------- cache

int run_cache(const Options& o) {
  MatrixCache cache(cli::resolve_cache_dir(o.cache_dir));
  if (o.cache_action == "gc") {
    std::size_t removed = cache.gc();
    if (o.format == "json")
      std::cout << envelope("cache", o, {{"dir", cache.dir().string()}, {"removed", removed}}).dump(2) << '\n';
    else
      std::cout << "removed " << removed << " stale file(s) from " << cache.dir().string() << '\n';
    return kOk;
  }
  cli::CacheStat s = cache.stat();
  if (o.format == "json") {
    json payload = {{"dir", cache.dir().string()}, {"entries", s.entries}, {"bytes", s.bytes}, {"stale", s.stale}};
    std::cout << envelope("cache", o, payload).dump(2) << '\n';
  } else {
    std::cout << cache.dir().string() << ": " << s.entries << " entries, " << s.bytes << " bytes, " << s.stale
              << " stale\n";
  }
  return kOk;
}

// Hard stop for checks that run past the cap: print what verify finished,
// then exit without unwinding the busy workers.
void start_watchdog(double seconds) {
  std::thread([seconds] {
    std::this_thread::sleep_for(std::chrono::duration<double>(seconds));
    std::unique_lock<std::mutex> lock(progress.mu);
    if (progress.printing) return;  // finished in time; let main complete
    char why[64];
    std::snprintf(why, sizeof why, "time cap of %g s reached", seconds);
    if (progress.verify) {
      std::vector<VerifyReport> partial;
      for (auto& [i, r] : progress.done) partial.insert(partial.end(), r.begin(), r.end());
      print_reports(*progress.verify, partial, why);
    }
    std::fprintf(stderr, "error: %s\n", why);
    std::fflush(stdout);
    std::fflush(stderr);
    std::_Exit(kResource);
  }).detach();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum cohomology of flag varieties: presentations, operators and checks"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
    sub->add_option("--cache-dir", o.cache_dir, "Cache directory (default $SQH_CACHE_DIR or ./.sqh-cache)");
    sub->add_option("--max-weyl", o.max_weyl, "Largest Weyl group to build")->check(CLI::PositiveNumber);
    sub->add_option("--timeout", o.timeout, "Time cap in seconds, 0 for none")->check(CLI::NonNegativeNumber);
  };
  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "Root system family")->check(CLI::IsMember({"A", "B", "C", "D"}));
    sub->add_option("--rank", o.rank, "Rank; type A uses GL_n, so SL2 is A with rank 2")->check(CLI::Range(1, kMaxIndex));
    sub->add_option("--weight", o.weight, "-e1, rho, fund:i or a vector such as 1/2,-1/2 (write --weight=-e1)");
  };

  auto* present = app.add_subcommand("present", "Print the presentation of the quantum cohomology ring");
  add_instance(present);
  add_common(present);

  auto* matrix = app.add_subcommand("matrix", "Print an operator matrix");
  add_instance(matrix);
  add_common(matrix);
  matrix->add_option("--which", o.which, "Which matrix")
      ->check(CLI::IsMember({"mchi", "achi", "theta", "toda", "chevalley"}));

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  add_instance(verify);
  add_common(verify);
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", o.suite, "Suite to run")->check(CLI::IsMember(suites));
  verify->add_option("--k", o.k, "Power or range such as 2..4");
  verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--timings", o.timings, "Print per-check wall time on stderr");

  auto* cache = app.add_subcommand("cache", "Inspect or clean the matrix cache");
  cache->add_option("action", o.cache_action, "stat or gc")->required()->check(CLI::IsMember({"stat", "gc"}));
  add_common(cache);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (o.timeout > 0) start_watchdog(o.timeout);
  try {
    if (present->parsed()) return run_present(o);
    if (matrix->parsed()) return run_matrix(o);
    if (verify->parsed()) return run_verify(o);
    return run_cache(o);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
}
