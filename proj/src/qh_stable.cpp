#include "sqh/qh_stable.hpp"

#include <map>
#include <mutex>

#include "sqh/classical.hpp"
#include "sqh/errors.hpp"
#include "sqh/textio.hpp"

namespace sqh {

namespace {

RatExpr linear_form(const std::vector<Rational>& coords, Var (*make)(int)) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) terms.push_back({Monomial::of(make(int(i + 1))), coords[i]});
  return RatExpr(Poly::from_terms(std::move(terms)));
}

RatExpr hbar() { return RatExpr::of(var::hbar()); }

std::string weight_key(const WeylContext& ctx, const Weight& lambda) {
  return ctx.rs.name() + ":" + lambda.str();
}

}  // namespace

RatExpr eps_form(const Weight& lambda) { return linear_form(lambda.coords, var::eps); }
RatExpr p_form(const Weight& lambda) { return linear_form(lambda.coords, var::p); }
RatExpr x_form(const Weight& lambda) { return -linear_form(lambda.coords, var::x); }
RatExpr chi_form(const Weight& lambda) { return -linear_form(lambda.coords, var::chi); }

RatExpr q_power(const Weight& beta) {
  Monomial m;
  for (int i = 0; i < beta.dim(); ++i) {
    const Rational& c = beta.coords[std::size_t(i)];
    if (!c.is_integer()) throw DomainError("q-exponent " + beta.str() + " is not integral");
    m.set(var::q(i + 1).slot(), int(c.small_num()));
  }
  return RatExpr(Poly::monomial(m));
}

RatExpr q_power(const Coroot& beta) { return q_power(Weight{beta.coords}); }

RatExpr delta_class_shift(const RootSystem& rs, const Weight& lambda) {
  RatExpr sum;
  for (const auto& r : rs.positive_roots) {
    Rational c = pairing(lambda, r.coroot);
    if (c.is_zero()) continue;
    RatExpr q = q_power(r.coroot);
    sum += RatExpr(c) * q / (RatExpr(1) - q);
  }
  return hbar() * sum;
}

// ---------------------------------------------------------------- operators

namespace {

SymMatrix build_chevalley(const WeylContext& ctx, const Weight& lambda, Variant v) {
  const RootSystem& rs = ctx.rs;
  const int n = ctx.size();
  SymMatrix m = zero_matrix(n);

  struct RootTerm {
    int root;
    RatExpr pos, neg;  // coefficient when w alpha > 0, resp. < 0
  };
  std::vector<RootTerm> terms;
  for (int r = 0; r < int(rs.positive_roots.size()); ++r) {
    Rational c = pairing(lambda, rs.positive_roots[std::size_t(r)].coroot);
    if (c.is_zero()) continue;
    RatExpr q = q_power(rs.positive_roots[std::size_t(r)].coroot);
    RatExpr base = -(hbar() * RatExpr(c)) / (RatExpr(1) - q);
    terms.push_back({r, base, base * q});
  }

  for (int j = 0; j < n; ++j) {
    const WeylElem& w = ctx.elems[std::size_t(j)];
    m(j, j) = eps_form(act_weight(w, lambda));
    for (const auto& t : terms) {
      int i = ctx.index(w * ctx.reflections[std::size_t(t.root)]);
      m(i, j) += act_root(rs, w, t.root).sign > 0 ? t.pos : t.neg;
    }
  }
  if (v == Variant::D) {
    RatExpr shift = delta_class_shift(rs, lambda);
    if (!shift.is_zero())
      for (int j = 0; j < n; ++j) m(j, j) -= shift;
  }
  return m;
}

}  // namespace

SymMatrix chevalley_operator(const WeylContext& ctx, const Weight& lambda, Variant v) {
  static std::mutex mu;
  static std::map<std::string, SymMatrix> memo;
  std::string key = weight_key(ctx, lambda) + (v == Variant::D ? ":D" : ":Delta");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  SymMatrix m = build_chevalley(ctx, lambda, v);
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(key, std::move(m)).first->second;
}

SymMatrix classical_chevalley(const WeylContext& ctx, const Weight& lambda) {
  const RootSystem& rs = ctx.rs;
  const int n = ctx.size();
  SymMatrix m = zero_matrix(n);
  for (int j = 0; j < n; ++j) {
    const WeylElem& w = ctx.elems[std::size_t(j)];
    m(j, j) = eps_form(act_weight(w, lambda));
    for (int r = 0; r < int(rs.positive_roots.size()); ++r) {
      Rational c = pairing(lambda, rs.positive_roots[std::size_t(r)].coroot);
      if (c.is_zero() || act_root(rs, w, r).sign < 0) continue;
      int i = ctx.index(w * ctx.reflections[std::size_t(r)]);
      m(i, j) -= hbar() * RatExpr(c);
    }
  }
  return m;
}

StableVec basis_vector(const WeylContext& ctx, const WeylElem& w) {
  StableVec v(std::size_t(ctx.size()));
  v[std::size_t(ctx.index(w))] = 1;
  return v;
}

StableVec apply_operator(const SymMatrix& m, const StableVec& v) {
  StableVec r(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const RatExpr& a = m(Eigen::Index(i), Eigen::Index(j));
      if (!a.is_zero()) r[i] += a * v[j];
    }
  }
  return r;
}

StableVec scale(const StableVec& v, const RatExpr& c) {
  StableVec r(v.size());
  if (c.is_zero()) return r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r[i] = c * v[i];
  return r;
}

StableVec add(const StableVec& a, const StableVec& b) {
  StableVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool equal(const StableVec& a, const StableVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

StableVec dl_transform(const WeylContext& ctx, const WeylElem& u, const StableVec& v) {
  MonomialMap f = q_action(u);
  WeylElem uinv = u.inverse();
  RatExpr sign = ctx.sign(ctx.index(u));
  StableVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    int target = ctx.index(ctx.elems[i] * uinv);
    r[std::size_t(target)] = sign * apply(f, v[i]);
  }
  return r;
}

SymMatrix dl_conjugate(const WeylContext& ctx, const WeylElem& u, const SymMatrix& m) {
  MonomialMap f = q_action(u);
  const int n = ctx.size();
  std::vector<int> shifted(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) shifted[std::size_t(a)] = ctx.index(ctx.elems[std::size_t(a)] * u);
  SymMatrix r(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) r(a, b) = apply(f, m(shifted[std::size_t(a)], shifted[std::size_t(b)]));
  return r;
}

StableVec averaging_class(const WeylContext& ctx, const Weight& lambda) {
  StableVec v(std::size_t(ctx.size()));
  for (const auto& w : stabilizer_elements(ctx.rs, lambda)) {
    int i = ctx.index(w);
    v[std::size_t(i)] = ctx.sign(i);
  }
  return v;
}

// ---------------------------------------------------------------- Theta

ThetaMatrix theta_matrix(const WeylContext& ctx, const Weight& lambda) {
  const RootSystem& rs = ctx.rs;
  ThetaMatrix t;
  t.lambda = lambda;
  t.cosets = min_coset_reps(rs, lambda, ctx.elems.size());
  const auto& reps = t.cosets.reps;
  const std::size_t m = reps.size();
  t.entries.assign(m, std::vector<ThetaEntry>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      ThetaEntry& e = t.entries[a][b];
      if (a == b) {
        e.kind = ThetaEntry::Delta;
        e.weight = act_weight(reps[a], lambda);
        continue;
      }
      auto root = offdiag_root(rs, reps[a], reps[b], lambda);
      if (!root) continue;
      const Root& r = rs.positive_roots[std::size_t(*root)];
      RatExpr q = q_power(act_coroot(reps[a], r.coroot));
      e.kind = ThetaEntry::Scalar;
      e.root = *root;
      e.value = -(hbar() * RatExpr(pairing(lambda, r.coroot))) / (RatExpr(1) - q);
    }
  }
  return t;
}

SymMatrix ThetaMatrix::skeleton(const std::function<RatExpr(const Weight&)>& diag) const {
  const int m = size();
  SymMatrix s = zero_matrix(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const ThetaEntry& e = entries[std::size_t(a)][std::size_t(b)];
      if (e.kind == ThetaEntry::Delta) s(a, b) = diag(e.weight);
      else if (e.kind == ThetaEntry::Scalar) s(a, b) = e.value;
    }
  return s;
}

BlockMatrix realize(const WeylContext& ctx, const ThetaMatrix& theta) {
  const std::size_t m = std::size_t(theta.size());
  BlockMatrix b(m, std::vector<OpBlock>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const ThetaEntry& e = theta.entries[i][j];
      if (e.kind == ThetaEntry::Delta) {
        if (e.weight.is_zero()) continue;
        b[i][j].kind = OpBlock::Full;
        b[i][j].full = chevalley_operator(ctx, e.weight, Variant::Delta);
      } else if (e.kind == ThetaEntry::Scalar) {
        b[i][j].kind = OpBlock::Scalar;
        b[i][j].scalar = e.value;
      }
    }
  return b;
}

namespace {

OpBlock block_product(const OpBlock& a, const OpBlock& b) {
  OpBlock r;
  if (a.kind == OpBlock::Zero || b.kind == OpBlock::Zero) return r;
  if (a.kind == OpBlock::Scalar && b.kind == OpBlock::Scalar) {
    r.kind = OpBlock::Scalar;
    r.scalar = a.scalar * b.scalar;
  } else if (a.kind == OpBlock::Scalar) {
    r.kind = OpBlock::Full;
    r.full = map_entries(b.full, [&](const RatExpr& x) { return x.is_zero() ? x : a.scalar * x; });
  } else if (b.kind == OpBlock::Scalar) {
    r.kind = OpBlock::Full;
    r.full = map_entries(a.full, [&](const RatExpr& x) { return x.is_zero() ? x : x * b.scalar; });
  } else {
    r.kind = OpBlock::Full;
    r.full = matmul(a.full, b.full);
  }
  return r;
}

void block_accumulate(OpBlock& acc, const OpBlock& x) {
  if (x.kind == OpBlock::Zero) return;
  if (acc.kind == OpBlock::Zero) {
    acc = x;
    return;
  }
  if (acc.kind == OpBlock::Scalar && x.kind == OpBlock::Scalar) {
    acc.scalar += x.scalar;
    return;
  }
  if (acc.kind == OpBlock::Scalar) {
    RatExpr c = acc.scalar;
    acc.kind = OpBlock::Full;
    acc.full = x.full;
    for (Eigen::Index i = 0; i < acc.full.rows(); ++i) acc.full(i, i) += c;
    return;
  }
  if (x.kind == OpBlock::Scalar) {
    for (Eigen::Index i = 0; i < acc.full.rows(); ++i) acc.full(i, i) += x.scalar;
    return;
  }
  for (Eigen::Index i = 0; i < acc.full.rows(); ++i)
    for (Eigen::Index j = 0; j < acc.full.cols(); ++j)
      if (!x.full(i, j).is_zero()) acc.full(i, j) += x.full(i, j);
}

OpBlock product_entry(const BlockMatrix& a, const BlockMatrix& b, std::size_t i, std::size_t j) {
  OpBlock acc;
  for (std::size_t k = 0; k < b.size(); ++k) block_accumulate(acc, block_product(a[i][k], b[k][j]));
  return acc;
}

RatExpr orbit_power_sum(const ThetaMatrix& theta, int k) {
  RatExpr s;
  for (const auto& u : theta.cosets.reps) s += eps_form(act_weight(u, theta.lambda)).pow(k);
  return s;
}

}  // namespace

BlockMatrix block_mul(const BlockMatrix& a, const BlockMatrix& b) {
  const std::size_t m = a.size();
  BlockMatrix r(m, std::vector<OpBlock>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) r[i][j] = product_entry(a, b, i, j);
  return r;
}

OpBlock block_trace(const BlockMatrix& m) {
  OpBlock acc;
  for (std::size_t i = 0; i < m.size(); ++i) block_accumulate(acc, m[i][i]);
  return acc;
}

// ---------------------------------------------------------------- checks

std::vector<VerifyReport> verify_trace_relation(const WeylContext& ctx, const Weight& lambda, int kmax,
                                                const std::string& weight_label) {
  ThetaMatrix theta = theta_matrix(ctx, lambda);
  BlockMatrix base = realize(ctx, theta);
  const std::size_t m = base.size();
  const int n = ctx.size();
  std::vector<VerifyReport> out;
  BlockMatrix power = base;  // Theta^(k-1) while computing step k
  for (int k = 1; k <= kmax; ++k) {
    Stopwatch sw;
    VerifyReport r;
    r.suite = "traces";
    r.instance = instance_name(ctx.rs, weight_label, k);
    r.reproducer = reproducer("traces", ctx.rs, weight_label, k);
    r.pass = true;
    OpBlock tr;
    if (k == 1) {
      tr = block_trace(base);
    } else {
      for (std::size_t i = 0; i < m; ++i) block_accumulate(tr, product_entry(power, base, i, i));
      if (k < kmax) power = block_mul(power, base);
    }
    RatExpr expect = orbit_power_sum(theta, k);
    switch (tr.kind) {
      case OpBlock::Zero: expect_equal(r, "tr(Theta^k)", RatExpr(0), expect); break;
      case OpBlock::Scalar: expect_equal(r, "tr(Theta^k)", tr.scalar, expect); break;
      case OpBlock::Full: expect_equal(r, "tr(Theta^k)", tr.full, scalar_matrix(n, expect)); break;
    }
    r.seconds = sw.seconds();
    out.push_back(std::move(r));
  }
  return out;
}

VerifyReport verify_eigencolumn(const WeylContext& ctx, const Weight& lambda, const std::string& weight_label) {
  Stopwatch sw;
  VerifyReport r;
  r.suite = "eigencolumn";
  r.instance = instance_name(ctx.rs, weight_label);
  r.reproducer = reproducer("eigencolumn", ctx.rs, weight_label);
  r.pass = true;

  ThetaMatrix theta = theta_matrix(ctx, lambda);
  StableVec varsigma = averaging_class(ctx, lambda);
  const auto& reps = theta.cosets.reps;
  std::vector<StableVec> cols;
  for (const auto& u : reps) cols.push_back(dl_transform(ctx, u, varsigma));
  RatExpr lam = eps_form(lambda);

  for (std::size_t a = 0; a < reps.size() && r.pass; ++a) {
    StableVec lhs(std::size_t(ctx.size()));
    for (std::size_t b = 0; b < reps.size(); ++b) {
      const ThetaEntry& e = theta.entries[a][b];
      if (e.kind == ThetaEntry::Delta)
        lhs = add(lhs, apply_operator(chevalley_operator(ctx, e.weight, Variant::Delta), cols[b]));
      else if (e.kind == ThetaEntry::Scalar)
        lhs = add(lhs, scale(cols[b], e.value));
    }
    StableVec rhs = scale(cols[a], lam);
    for (std::size_t i = 0; i < lhs.size(); ++i)
      if (!expect_equal(r, "row u=" + word_str(reduced_word(ctx.rs, reps[a])) + " coefficient of Stab(" +
                               word_str(reduced_word(ctx.rs, ctx.elems[i])) + ")",
                        lhs[i], rhs[i]))
        break;
  }
  r.seconds = sw.seconds();
  return r;
}

bool automorphism_holds(const WeylContext& ctx, const WeylElem& u, const Weight& lambda, const WeylElem& w,
                        std::string* detail) {
  StableVec e = basis_vector(ctx, w);
  StableVec lhs = dl_transform(ctx, u, apply_operator(chevalley_operator(ctx, lambda, Variant::Delta), e));
  StableVec rhs = apply_operator(chevalley_operator(ctx, act_weight(u, lambda), Variant::Delta), dl_transform(ctx, u, e));
  if (equal(lhs, rhs)) return true;
  if (detail) {
    for (std::size_t i = 0; i < lhs.size(); ++i)
      if (!(lhs[i] == rhs[i])) {
        *detail = "u=" + u.str() + " w=" + w.str() + " coefficient " + ctx.elems[i].str() + ": " +
                  to_text(lhs[i]) + " vs " + to_text(rhs[i]);
        break;
      }
  }
  return false;
}

VerifyReport verify_automorphism(const WeylContext& ctx, const Weight& lambda, const std::string& weight_label) {
  Stopwatch sw;
  VerifyReport r;
  r.suite = "automorphism";
  r.instance = instance_name(ctx.rs, weight_label);
  r.reproducer = reproducer("automorphism", ctx.rs, weight_label);
  r.pass = true;
  for (const auto& u : ctx.elems) {
    for (const auto& w : ctx.elems) {
      std::string detail;
      if (!automorphism_holds(ctx, u, lambda, w, &detail)) {
        r.pass = false;
        r.detail = detail;
        break;
      }
    }
    if (!r.pass) break;
  }
  r.seconds = sw.seconds();
  return r;
}

VerifyReport verify_conjugation_law(const WeylContext& ctx, const Weight& lambda, const std::string& weight_label) {
  Stopwatch sw;
  VerifyReport r;
  r.suite = "automorphism";
  r.instance = instance_name(ctx.rs, weight_label) + " conjugation";
  r.reproducer = reproducer("automorphism", ctx.rs, weight_label);
  r.pass = true;
  const SymMatrix& op = chevalley_operator(ctx, lambda, Variant::Delta);
  for (const auto& u : ctx.elems)
    if (!expect_equal(r, "u=" + u.str(), dl_conjugate(ctx, u, op),
                      chevalley_operator(ctx, act_weight(u, lambda), Variant::Delta)))
      break;
  r.seconds = sw.seconds();
  return r;
}

// ---------------------------------------------------------------- presentations

RatExpr presentation_relation(const WeylContext& ctx, const Weight& lambda, int k) {
  if (k < 1) throw DomainError("relation degree must be at least 1");
  ThetaMatrix theta = theta_matrix(ctx, lambda);
  SymMatrix s = theta.skeleton(
      [&](const Weight& mu) { return x_form(mu) + delta_class_shift(ctx.rs, mu); });
  return trace(matpow(s, k)) - orbit_power_sum(theta, k);
}

Presentation emit_presentation(const RootSystem& rs) {
  const int n = rs.rank;
  Presentation p;
  p.family = rs.family;
  p.rank = n;
  for (int i = 1; i <= n; ++i) p.generators.push_back(var::x(i).name());
  for (int i = 1; i <= n; ++i) p.generators.push_back(var::t(i).name());
  p.generators.push_back(var::hbar().name());
  for (int i = 1; i <= n; ++i)
    p.chi_definitions.push_back(RatExpr::of(var::x(i)) + delta_class_shift(rs, -Weight::unit(n, i)));

  if (rs.family == Family::A) {
    std::vector<RatExpr> t = t_vars(n);
    for (int k = 1; k <= n; ++k) {
      p.relation_labels.push_back("E" + std::to_string(k) + "(chi) - e" + std::to_string(k) + "(t)");
      p.relations.push_back(elementary_E(rs.family, n, k) - elementary_symmetric(t, k));
    }
    return p;
  }
  std::vector<RatExpr> t2 = t_squares(n);
  const int last = rs.family == Family::D ? n - 1 : n;
  for (int k = 1; k <= last; ++k) {
    RatExpr sign = k % 2 ? -1 : 1;
    p.relation_labels.push_back("E" + std::to_string(2 * k) + "(chi) - (-1)^" + std::to_string(k) + " e" +
                                std::to_string(k) + "(t^2)");
    p.relations.push_back(elementary_E(rs.family, n, 2 * k) - sign * elementary_symmetric(t2, k));
  }
  if (rs.family == Family::D) {
    p.relation_labels.push_back("det A(chi) - e" + std::to_string(n) + "(t)");
    p.relations.push_back(determinant(a_chi(n)) - elementary_symmetric(t_vars(n), n));
  }
  return p;
}

nlohmann::json Presentation::to_json() const {
  nlohmann::json rel = nlohmann::json::array(), chi = nlohmann::json::array();
  for (std::size_t i = 0; i < relations.size(); ++i)
    rel.push_back({{"label", relation_labels[i]}, {"text", sqh::to_text(relations[i])}});
  for (std::size_t i = 0; i < chi_definitions.size(); ++i)
    chi.push_back({{"symbol", var::chi(int(i + 1)).name()}, {"text", sqh::to_text(chi_definitions[i])}});
  return {{"family", family_name(family)},
          {"rank", rank},
          {"generators", generators},
          {"chi", chi},
          {"relations", rel},
          {"coefficient_ring", coefficient_ring}};
}

Presentation presentation_from_json(const nlohmann::json& j) {
  Presentation p;
  p.family = parse_family(j.at("family").get<std::string>());
  p.rank = j.at("rank").get<int>();
  p.generators = j.at("generators").get<std::vector<std::string>>();
  for (const auto& c : j.at("chi")) p.chi_definitions.push_back(parse_ratexpr(c.at("text").get<std::string>()));
  for (const auto& r : j.at("relations")) {
    p.relation_labels.push_back(r.at("label").get<std::string>());
    p.relations.push_back(parse_ratexpr(r.at("text").get<std::string>()));
  }
  p.coefficient_ring = j.at("coefficient_ring").get<std::string>();
  return p;
}

std::string Presentation::to_text() const {
  std::string s = "family " + family_name(family) + " rank " + std::to_string(rank) + "\n";
  s += "coefficients " + coefficient_ring + "\ngenerators";
  for (const auto& g : generators) s += " " + g;
  s += "\n";
  for (std::size_t i = 0; i < chi_definitions.size(); ++i)
    s += var::chi(int(i + 1)).name() + " = " + sqh::to_text(chi_definitions[i]) + "\n";
  for (std::size_t i = 0; i < relations.size(); ++i)
    s += "[" + relation_labels[i] + "] " + sqh::to_text(relations[i]) + " = 0\n";
  return s;
}

std::string Presentation::to_latex() const {
  std::array<bool, kSlots> mask{};
  for (int i = 1; i <= kMaxIndex; ++i) {
    mask[std::size_t(var::chi(i).slot())] = true;
    mask[std::size_t(var::t(i).slot())] = true;
  }
  std::string s = "% " + family_name(family) + std::to_string(rank) + "\n\\begin{align*}\n";
  for (std::size_t i = 0; i < chi_definitions.size(); ++i)
    s += "\\chi_{" + std::to_string(i + 1) + "} &= " + sqh::to_latex(chi_definitions[i]) + " \\\\\n";
  for (std::size_t i = 0; i < relations.size(); ++i) {
    s += "0 &= " + to_latex_grouped(relations[i], mask);
    s += i + 1 < relations.size() ? " \\\\\n" : "\n";
  }
  return s + "\\end{align*}\n";
}

bool classical_limit_ok(const RootSystem& rs, const RatExpr& relation, bool chi_generators, std::string* detail) {
  const int n = rs.rank;
  auto fail = [&](const std::string& why) {
    if (detail) *detail = why;
    return false;
  };
  RatExpr p0 = substitute(relation, {{kHbarSlot, RatExpr(0)}});
  for (int i = 1; i <= n; ++i)
    if (p0.uses(var::q(i))) return fail("q survives mod hbar: " + to_text(p0));

  Var (*gen)(int) = chi_generators ? var::chi : var::x;
  Var (*par)(int) = chi_generators ? var::t : var::eps;
  // The parameter side is identified with the generators through t_i = -e_i.
  const int par_sign = chi_generators ? 1 : -1;

  std::map<int, RatExpr> kill_par, kill_gen, par_to_gen;
  for (int i = 1; i <= n; ++i) {
    kill_par[par(i).slot()] = 0;
    kill_gen[gen(i).slot()] = 0;
    par_to_gen[par(i).slot()] = RatExpr(par_sign) * RatExpr::of(gen(i));
  }
  RatExpr f = substitute(p0, kill_par);
  RatExpr g = substitute(p0, kill_gen);
  if (!(p0 == f + g)) return fail("mixed generator/parameter terms mod hbar: " + to_text(p0));
  if (!(substitute(g, par_to_gen) == -f)) return fail("mod hbar not of the form f(D) - f(lambda): " + to_text(p0));

  for (int s = 0; s < rs.num_simple(); ++s) {
    WeylElem w = simple_reflection(rs, s);
    MonomialMap act;
    for (int i = 1; i <= n; ++i) {
      int img = w.image(i);
      act.send(gen(i).slot(), Monomial::of(gen(std::abs(img))), img > 0 ? 1 : -1);
    }
    if (!(apply(act, f) == f)) return fail("f not invariant under s" + std::to_string(s + 1) + ": " + to_text(f));
  }
  return true;
}

// ---------------------------------------------------------------- SL2

namespace {

struct Sl2 {
  std::shared_ptr<const WeylContext> ctx = weyl_context(Family::A, 2);
  Weight w{{Rational(1, 2), Rational(-1, 2)}};
  RatExpr q = RatExpr::of(var::q(1)) / RatExpr::of(var::q(2));

  VerifyReport report(const std::string& what) const {
    VerifyReport r;
    r.suite = "traces";
    r.instance = "A2 lambda=1/2,-1/2 " + what;
    r.reproducer = reproducer("traces", ctx->rs, "1/2,-1/2");
    r.pass = true;
    return r;
  }
};

SymMatrix scaled(const SymMatrix& m, const RatExpr& c) {
  return map_entries(m, [&](const RatExpr& x) { return c * x; });
}

}  // namespace

VerifyReport verify_sl2_product() {
  Stopwatch sw;
  Sl2 g;
  VerifyReport r = g.report("product");
  const int n = g.ctx->size();
  SymMatrix dp = chevalley_operator(*g.ctx, g.w, Variant::D);
  SymMatrix dm = chevalley_operator(*g.ctx, -g.w, Variant::D);
  SymMatrix cup = matmul(classical_chevalley(*g.ctx, g.w), classical_chevalley(*g.ctx, -g.w));
  SymMatrix rhs = cup + scaled(dp - dm - scalar_matrix(n, hbar()), hbar() * g.q / (RatExpr(1) - g.q));
  expect_equal(r, "Op(D_w) Op(D_-w)", matmul(dp, dm), rhs);
  r.seconds = sw.seconds();
  return r;
}

VerifyReport verify_sl2_relation() {
  Stopwatch sw;
  Sl2 g;
  VerifyReport r = g.report("relation");
  const int n = g.ctx->size();
  RatExpr d = x_form(g.w), e = eps_form(g.w);
  RatExpr f = g.q / (RatExpr(1) - g.q);
  RatExpr printed = d * d + RatExpr(2) * hbar() * f * d - hbar() * hbar() * f - e * e;
  // The trace relation sums over both cosets, so it is twice the printed one.
  if (!expect_equal(r, "relation", presentation_relation(*g.ctx, g.w, 2), RatExpr(2) * printed)) {
    r.seconds = sw.seconds();
    return r;
  }
  SymMatrix op = chevalley_operator(*g.ctx, g.w, Variant::D);
  SymMatrix x = scalar_matrix(n, -e) - op, y = scalar_matrix(n, e) - op;
  SymMatrix h = scalar_matrix(n, -hbar());
  expect_equal(r, "hypertoric x*y = q (h-x)*(h-y)", matmul(x, y), scaled(matmul(h - x, h - y), g.q));
  r.seconds = sw.seconds();
  return r;
}

}  // namespace sqh
