#include "sqh/suites.hpp"

#include <atomic>
#include <cstdio>
#include <exception>
#include <functional>
#include <thread>

#include "sqh/calogero_moser.hpp"
#include "sqh/classical.hpp"
#include "sqh/errors.hpp"
#include "sqh/qh_stable.hpp"
#include "sqh/toda.hpp"

namespace sqh {

namespace {

using Task = std::function<std::vector<VerifyReport>()>;

struct Instance {
  Family family;
  int rank;
  std::string weight;
};

VerifyReport single_failure(const std::string& suite, const std::string& instance, const std::string& what) {
  VerifyReport r;
  r.suite = suite;
  r.instance = instance;
  r.pass = false;
  r.detail = what;
  return r;
}

// Wraps a check so that a violated invariant or a failed limit is recorded
// as a failing report; configuration and resource errors still propagate.
Task guarded(const std::string& suite, const std::string& instance, std::function<std::vector<VerifyReport>()> f) {
  return [=]() -> std::vector<VerifyReport> {
    try {
      return f();
    } catch (const InvariantViolation& e) {
      return {single_failure(suite, instance, std::string("invariant violated: ") + e.what())};
    } catch (const LimitError& e) {
      return {single_failure(suite, instance, std::string("limit diverges: ") + e.what())};
    } catch (const ArithmeticError& e) {
      return {single_failure(suite, instance, std::string("arithmetic error: ") + e.what())};
    }
  };
}

Task one(const std::string& suite, const std::string& instance, std::function<VerifyReport()> f) {
  return guarded(suite, instance, [f] { return std::vector<VerifyReport>{f()}; });
}

class Builder {
 public:
  explicit Builder(const SuiteConfig& cfg) : cfg_(cfg) {}

  bool explicit_instance() const { return cfg_.family || cfg_.rank; }

  // Family and rank from the config, falling back to the given defaults.
  Family family_or(Family f) const { return cfg_.family.value_or(f); }
  int rank_or(int n) const { return cfg_.rank.value_or(n); }
  int rank_required(const std::string& suite) const {
    if (!cfg_.rank) throw DomainError("suite " + suite + " needs --rank when --family is given");
    return *cfg_.rank;
  }

  std::shared_ptr<const WeylContext> context(Family f, int n) const { return weyl_context(f, n, cfg_.max_weyl); }

  std::string weight_or(const std::string& w) const { return cfg_.weight.value_or(w); }
  KRange k_or(int lo, int hi) const { return cfg_.k.value_or(KRange{lo, hi}); }

  std::vector<Task> tasks;

 private:
  const SuiteConfig& cfg_;
};

// SL2 is GL2 with the weight (1/2, -1/2); type A ranks follow GL_n.
const std::string kSl2Weight = "1/2,-1/2";

void add_traces(Builder& b) {
  std::vector<std::pair<Instance, int>> plan;
  if (b.explicit_instance()) {
    Family f = b.family_or(Family::A);
    plan.push_back({{f, b.rank_or(2), b.weight_or("-e1")}, 2});
  } else {
    b.tasks.push_back(one("traces", "A2 product", [] { return verify_sl2_product(); }));
    b.tasks.push_back(one("traces", "A2 relation", [] { return verify_sl2_relation(); }));
    plan = {{{Family::A, 2, kSl2Weight}, 4}, {{Family::A, 3, "-e1"}, 3}, {{Family::A, 3, "rho"}, 3},
            {{Family::B, 2, "-e1"}, 2},      {{Family::C, 2, "-e1"}, 2}, {{Family::D, 2, "-e1"}, 2}};
  }
  for (const auto& [inst, kmax] : plan) {
    KRange k = b.k_or(1, kmax);
    if (k.lo < 1 || k.hi < k.lo) throw DomainError("trace relations need 1 <= k");
    auto ctx = b.context(inst.family, inst.rank);
    Weight lambda = parse_weight(ctx->rs, inst.weight);
    for (int kk = k.lo; kk <= k.hi; ++kk) {
      std::string label = inst.weight;
      b.tasks.push_back(guarded("traces", instance_name(ctx->rs, label, kk), [ctx, lambda, label, kk] {
        // verify_trace_relation shares Theta^(k-1) across k, but one task per
        // k keeps the workers balanced; the operator memo absorbs the rest.
        auto all = verify_trace_relation(*ctx, lambda, kk, label);
        return std::vector<VerifyReport>{all.back()};
      }));
    }
  }
}

void add_weighted(Builder& b, const std::string& suite, const std::vector<Instance>& defaults, const std::string& fallback,
                  const std::function<VerifyReport(const WeylContext&, const Weight&, const std::string&)>& check) {
  std::vector<Instance> plan = defaults;
  if (b.explicit_instance()) plan = {{b.family_or(Family::A), b.rank_or(2), b.weight_or(fallback)}};
  for (const auto& inst : plan) {
    auto ctx = b.context(inst.family, inst.rank);
    Weight lambda = parse_weight(ctx->rs, inst.weight);
    std::string label = inst.weight;
    b.tasks.push_back(one(suite, instance_name(ctx->rs, label), [ctx, lambda, label, check] {
      return check(*ctx, lambda, label);
    }));
  }
}

void add_eigencolumn(Builder& b) {
  add_weighted(b, "eigencolumn",
               {{Family::A, 2, kSl2Weight},
                {Family::A, 3, "-e1"},
                {Family::A, 3, "rho"},
                {Family::B, 2, "-e1"},
                {Family::C, 2, "-e1"},
                {Family::D, 2, "-e1"}},
               "-e1", verify_eigencolumn);
}

void add_automorphism(Builder& b) {
  if (b.explicit_instance()) {
    add_weighted(b, "automorphism", {}, "fund:1", verify_automorphism);
    add_weighted(b, "automorphism", {}, "fund:1", verify_conjugation_law);
    return;
  }
  add_weighted(b, "automorphism", {{Family::A, 2, kSl2Weight}, {Family::A, 3, "fund:1"}, {Family::A, 3, "fund:2"}},
               "", verify_automorphism);
  std::vector<Instance> conj;
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    int n = f == Family::A ? 3 : 2;  // GL3 has semisimple rank 2
    RootSystem rs = build_root_system(f, n);
    for (int i = 1; i <= rs.num_simple(); ++i) conj.push_back({f, n, "fund:" + std::to_string(i)});
  }
  add_weighted(b, "automorphism", conj, "", verify_conjugation_law);
}

void add_sized(Builder& b, const std::string& suite, int lo, int hi, const std::function<VerifyReport(int)>& check,
               const std::string& what) {
  if (b.explicit_instance()) lo = hi = b.rank_required(suite);
  for (int n = lo; n <= hi; ++n)
    b.tasks.push_back(one(suite, what + " n=" + std::to_string(n), [check, n] { return check(n); }));
}

void add_appendixB(Builder& b) {
  if (b.explicit_instance()) {
    int n = b.rank_required("appendixB");
    if (n >= 2) add_sized(b, "appendixB", n, n, verify_cyclic_sum, "cyclic");
    add_sized(b, "appendixB", n, n, [](int m) { return anticauchy_det(m).report; }, "anticauchy");
    return;
  }
  add_sized(b, "appendixB", 2, 6, verify_cyclic_sum, "cyclic");
  add_sized(b, "appendixB", 1, 6, [](int m) { return anticauchy_det(m).report; }, "anticauchy");
}

void add_oddvanish(Builder& b) {
  std::vector<std::pair<Family, int>> plan;
  if (b.explicit_instance())
    plan = {{b.family_or(Family::B), b.rank_required("oddvanish")}};
  else
    plan = {{Family::B, 2}, {Family::C, 2}, {Family::B, 3}, {Family::C, 3}, {Family::D, 2}, {Family::D, 3}};
  for (auto [f, n] : plan) {
    if (f == Family::A) throw DomainError("odd vanishing concerns types B, C and D");
    b.tasks.push_back(one("oddvanish", family_name(f) + std::to_string(n), [f, n] { return verify_odd_vanishing(f, n); }));
  }
}

void add_toda(Builder& b) {
  auto limit = [](Family f) -> std::function<VerifyReport(int)> {
    switch (f) {
      case Family::A: return verify_givental_kim;
      case Family::B: return verify_typeB_limit;
      case Family::C: return verify_typeC_extension;
      case Family::D: return verify_typeD_limit;
    }
    return verify_givental_kim;
  };
  if (b.explicit_instance()) {
    int n = b.rank_required("toda");
    Family f = b.family_or(Family::A);
    add_sized(b, "toda", n, n, limit(f), family_name(f) + " limit");
    return;
  }
  add_sized(b, "toda", 1, 4, limit(Family::A), "A limit");
  add_sized(b, "toda", 1, 3, limit(Family::B), "B limit");
  add_sized(b, "toda", 1, 3, limit(Family::C), "C limit");
  add_sized(b, "toda", 2, 3, limit(Family::D), "D limit");
  add_sized(b, "toda", 1, 6, verify_tridiag, "tridiagonal");
}

void add_cm(Builder& b) {
  std::vector<std::pair<Instance, KRange>> plan;
  std::vector<std::pair<Family, int>> dunkl;
  if (b.explicit_instance()) {
    Family f = b.family_or(Family::A);
    int n = b.rank_or(2);
    plan.push_back({{f, n, b.weight_or("-e1")}, b.k_or(1, 2)});
    dunkl.push_back({f, n});
  } else {
    plan = {{{Family::A, 2, kSl2Weight}, {1, 3}}, {{Family::A, 3, "-e1"}, {1, 3}}, {{Family::B, 2, "-e1"}, {2, 2}}};
    dunkl = {{Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::C, 2}, {Family::D, 2}};
  }
  for (const auto& [inst, k] : plan) {
    auto ctx = b.context(inst.family, inst.rank);
    Weight lambda = parse_weight(ctx->rs, inst.weight);
    std::string label = inst.weight;
    for (int kk = k.lo; kk <= k.hi; ++kk)
      b.tasks.push_back(one("cm", instance_name(ctx->rs, label, kk), [ctx, lambda, label, kk] {
        return verify_cm_corollary(*ctx, lambda, kk, label);
      }));
  }
  for (auto [f, n] : dunkl) {
    auto ctx = b.context(f, n);
    b.tasks.push_back(one("cm", ctx->rs.name() + " dunkl", [ctx] { return verify_dunkl_commutativity(*ctx); }));
  }
}

void add_tracefree(Builder& b) {
  std::vector<Instance> plan;
  if (b.explicit_instance())
    plan = {{b.family_or(Family::A), b.rank_or(2), b.weight_or("rho")}};
  else
    plan = {{Family::A, 2, kSl2Weight}, {Family::A, 3, "rho"}, {Family::B, 2, "rho"},
            {Family::C, 2, "rho"},      {Family::D, 2, "rho"}};
  KRange k = b.k_or(2, 2);
  for (const auto& inst : plan) {
    auto ctx = b.context(inst.family, inst.rank);
    Weight lambda = parse_weight(ctx->rs, inst.weight);
    std::string label = inst.weight;
    for (int kk = k.lo; kk <= k.hi; ++kk)
      b.tasks.push_back(one("tracefree", instance_name(ctx->rs, label, kk), [ctx, lambda, label, kk] {
        return verify_tracefree(*ctx, lambda, kk, label);
      }));
  }
}

VerifyReport classical_check(Family f, int n) {
  Stopwatch sw;
  RootSystem rs = build_root_system(f, n);
  VerifyReport r;
  r.suite = "classical";
  r.instance = rs.name() + " presentation";
  r.reproducer = reproducer("classical", rs);
  r.pass = true;
  Presentation p = emit_presentation(rs);
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    std::string why;
    if (!classical_limit_ok(rs, p.relations[i], true, &why)) {
      r.pass = false;
      r.detail = p.relation_labels[i] + ": " + why;
      break;
    }
  }
  r.seconds = sw.seconds();
  return r;
}

void add_classical(Builder& b) {
  std::vector<std::pair<Family, int>> plan;
  if (b.explicit_instance()) {
    plan = {{b.family_or(Family::A), b.rank_required("classical")}};
  } else {
    for (Family f : {Family::A, Family::B, Family::C})
      for (int n = 1; n <= 3; ++n) plan.push_back({f, n});
    plan.push_back({Family::D, 2});
    plan.push_back({Family::D, 3});
  }
  for (auto [f, n] : plan)
    b.tasks.push_back(one("classical", family_name(f) + std::to_string(n) + " presentation",
                          [f, n] { return classical_check(f, n); }));
}

void add_suite(Builder& b, const std::string& name) {
  if (name == "traces") return add_traces(b);
  if (name == "eigencolumn") return add_eigencolumn(b);
  if (name == "automorphism") return add_automorphism(b);
  if (name == "matching") return add_sized(b, "matching", 1, 5, verify_matching_theorem, "matching");
  if (name == "appendixB") return add_appendixB(b);
  if (name == "typeD") return add_sized(b, "typeD", 2, 3, verify_typeD, "typeD");
  if (name == "oddvanish") return add_oddvanish(b);
  if (name == "toda") return add_toda(b);
  if (name == "cm") return add_cm(b);
  if (name == "hamiltonian")
    return add_weighted(b, "hamiltonian", {{Family::A, 2, kSl2Weight}, {Family::A, 3, "rho"}}, "rho",
                        verify_hamiltonian);
  if (name == "tracefree") return add_tracefree(b);
  if (name == "classical") return add_classical(b);
  throw DomainError("unknown suite '" + name + "'");
}

std::vector<VerifyReport> run_tasks(const std::vector<Task>& tasks, const SuiteConfig& cfg) {
  const double timeout = cfg.timeout_seconds;
  const std::size_t n = tasks.size();
  std::vector<std::vector<VerifyReport>> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::vector<char> done(n, 0);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> timed_out{false};
  Stopwatch clock;

  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      if (timeout > 0 && clock.seconds() > timeout) {
        timed_out = true;
        return;
      }
      try {
        results[i] = tasks[i]();
        done[i] = 1;
        if (cfg.on_task_done) cfg.on_task_done(i, results[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int workers = std::max(1, std::min<int>(cfg.jobs, int(n)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<VerifyReport> out;
  for (std::size_t i = 0; i < n; ++i)
    if (done[i])
      for (auto& x : results[i]) out.push_back(std::move(x));
  if (timed_out) {
    char cap[32];
    std::snprintf(cap, sizeof cap, "%g", timeout);
    throw SuiteTimeout(std::string("time cap of ") + cap + " s reached", std::move(out));
  }
  return out;
}

}  // namespace

KRange parse_k_range(const std::string& spec) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw DomainError("bad k range '" + spec + "'");
    return v;
  };
  KRange k;
  auto dots = spec.find("..");
  if (dots == std::string::npos) {
    k.lo = k.hi = number(spec);
  } else {
    k.lo = number(spec.substr(0, dots));
    k.hi = number(spec.substr(dots + 2));
  }
  if (k.lo < 0 || k.hi < k.lo) throw DomainError("bad k range '" + spec + "'");
  return k;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"traces", "eigencolumn", "automorphism", "matching",
                                                 "appendixB", "typeD", "oddvanish", "toda",
                                                 "cm", "hamiltonian", "tracefree", "classical"};
  return names;
}

bool is_suite(const std::string& name) {
  if (name == "all") return true;
  for (const auto& s : suite_names())
    if (s == name) return true;
  return false;
}

std::vector<VerifyReport> run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (!is_suite(name)) throw DomainError("unknown suite '" + name + "'");
  if (cfg.jobs < 1) throw DomainError("--jobs must be at least 1");
  if (name == "all" && (cfg.family || cfg.rank || cfg.weight || cfg.k))
    throw DomainError("suite all runs the default instances; drop --family, --rank, --weight and --k");
  Builder b(cfg);
  if (name == "all")
    for (const auto& s : suite_names()) add_suite(b, s);
  else
    add_suite(b, name);
  return run_tasks(b.tasks, cfg);
}

}  // namespace sqh
