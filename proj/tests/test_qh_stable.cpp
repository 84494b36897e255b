#include <random>

#include "sqh/classical.hpp"
#include "sqh/errors.hpp"
#include "sqh/qh_stable.hpp"
#include "support.hpp"

using namespace sqh;
using test::rx;

namespace {

struct Sl2 {
  std::shared_ptr<const WeylContext> ctx = weyl_context(Family::A, 2);
  Weight w{{Rational(1, 2), Rational(-1, 2)}};
  WeylElem id = WeylElem::identity(2);
  WeylElem s = simple_reflection(ctx->rs, 0);
};

bool same(const SymMatrix& a, const SymMatrix& b) { return !first_difference(a, b).has_value(); }

struct Instance {
  Family family;
  int rank;
};
const Instance kUpToRank3[] = {{Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::B, 2}, {Family::B, 3},
                               {Family::C, 2}, {Family::C, 3}, {Family::D, 2}, {Family::D, 3}};

StableVec random_vec(const WeylContext& ctx, std::mt19937& rng) {
  static const char* pool[] = {"0", "1", "q1/(1-q1/q2)", "h*q2", "-e1", "h/(1-q1)", "q1^-1*q2"};
  std::uniform_int_distribution<int> pick(0, 6);
  StableVec v(std::size_t(ctx.size()));
  for (auto& c : v) c = rx(pool[pick(rng)]);
  return v;
}

}  // namespace

TEST_CASE("the class shift") {
  Sl2 g;
  CHECK(delta_class_shift(g.ctx->rs, g.w) == rx("h*(q1/q2)/(1-q1/q2)"));
  CHECK(delta_class_shift(g.ctx->rs, Weight::zero(2)).is_zero());
  RootSystem a3 = build_root_system(Family::A, 3);
  CHECK(delta_class_shift(a3, parse_weight(a3, "-e2")) == rx("h*(q1/q2)/(1-q1/q2) - h*(q2/q3)/(1-q2/q3)"));
  Weight a = parse_weight(a3, "rho"), b = parse_weight(a3, "-e1");
  CHECK(delta_class_shift(a3, a + b) == delta_class_shift(a3, a) + delta_class_shift(a3, b));
}

TEST_CASE("quantum Chevalley operators of SL2") {
  Sl2 g;
  SymMatrix delta = chevalley_operator(*g.ctx, g.w, Variant::Delta);
  REQUIRE(g.ctx->elems[0].is_identity());
  CHECK(delta(0, 0) == rx("e1/2 - e2/2"));
  CHECK(delta(1, 0) == rx("-h/(1-q1/q2)"));
  CHECK(delta(1, 1) == rx("e2/2 - e1/2"));
  CHECK(delta(0, 1) == rx("-h*(q1/q2)/(1-q1/q2)"));
  SymMatrix d = chevalley_operator(*g.ctx, g.w, Variant::D);
  CHECK(same(d, delta - scalar_matrix(2, delta_class_shift(g.ctx->rs, g.w))));
  CHECK(same(chevalley_operator(*g.ctx, Weight::zero(2), Variant::Delta), zero_matrix(2)));

  VerifyReport product = verify_sl2_product();
  CHECK_MESSAGE(product.pass, product.detail);
}

TEST_CASE("Chevalley operators are linear in the weight") {
  for (const auto& [family, rank] : kUpToRank3) {
    auto ctx = weyl_context(family, rank);
    CAPTURE(ctx->rs.name());
    Weight a = parse_weight(ctx->rs, "fund:1"), b = parse_weight(ctx->rs, "rho");
    for (Variant v : {Variant::Delta, Variant::D})
      CHECK(same(chevalley_operator(*ctx, a + b, v), chevalley_operator(*ctx, a, v) + chevalley_operator(*ctx, b, v)));
  }
}

TEST_CASE("Chevalley operators commute") {
  for (const auto& [family, rank] : kUpToRank3) {
    auto ctx = weyl_context(family, rank);
    CAPTURE(ctx->rs.name());
    std::vector<Weight> ws = ctx->rs.fundamental_weights;
    if (family == Family::A) ws.push_back(parse_weight(ctx->rs, "-e1"));  // the central direction of GL
    for (std::size_t i = 0; i < ws.size(); ++i)
      for (std::size_t j = i + 1; j < ws.size(); ++j) {
        const SymMatrix& a = chevalley_operator(*ctx, ws[i], Variant::Delta);
        const SymMatrix& b = chevalley_operator(*ctx, ws[j], Variant::Delta);
        CHECK(same(matmul(a, b), matmul(b, a)));
      }
  }
}

TEST_CASE("Demazure-Lusztig transforms") {
  Sl2 g;
  StableVec e = basis_vector(*g.ctx, g.id);
  CHECK(equal(dl_transform(*g.ctx, g.id, e), e));
  CHECK(equal(dl_transform(*g.ctx, g.s, e), scale(basis_vector(*g.ctx, g.s), RatExpr(-1))));
  StableVec c = scale(e, rx("(q1/q2)/(1-q1/q2)"));
  // q -> 1/q turns q/(1-q) into -1/(1-q); the sign of s cancels it.
  CHECK(equal(dl_transform(*g.ctx, g.s, c), scale(basis_vector(*g.ctx, g.s), rx("1/(1-q1/q2)"))));

  std::mt19937 rng(43);
  for (const auto& [family, rank] : kUpToRank3) {
    if (rank > 3 || (family != Family::A && rank > 2)) continue;  // semisimple rank at most 2
    auto ctx = weyl_context(family, rank);
    CAPTURE(ctx->rs.name());
    StableVec v = random_vec(*ctx, rng);
    for (const auto& u : ctx->elems)
      for (const auto& w : ctx->elems)
        CHECK(equal(dl_transform(*ctx, u, dl_transform(*ctx, w, v)), dl_transform(*ctx, u * w, v)));
  }
}

TEST_CASE("conjugating Chevalley operators") {
  Sl2 g;
  const SymMatrix& op = chevalley_operator(*g.ctx, g.w, Variant::Delta);
  CHECK(same(dl_conjugate(*g.ctx, g.id, op), op));
  CHECK(same(dl_conjugate(*g.ctx, g.s, op), chevalley_operator(*g.ctx, -g.w, Variant::Delta)));

  auto a3 = weyl_context(Family::A, 3);
  CHECK(same(dl_conjugate(*a3, simple_reflection(a3->rs, 0), chevalley_operator(*a3, parse_weight(a3->rs, "-e1"), Variant::Delta)),
             chevalley_operator(*a3, parse_weight(a3->rs, "-e2"), Variant::Delta)));

  for (const auto& [family, rank] : kUpToRank3) {
    auto ctx = weyl_context(family, rank);
    for (int i = 1; i <= ctx->rs.num_simple(); ++i) {
      std::string label = "fund:" + std::to_string(i);
      VerifyReport r = verify_conjugation_law(*ctx, parse_weight(ctx->rs, label), label);
      CHECK_MESSAGE(r.pass, r.instance << ": " << r.detail);
    }
  }
}

TEST_CASE("averaging classes") {
  Sl2 g;
  CHECK(equal(averaging_class(*g.ctx, g.w), basis_vector(*g.ctx, g.id)));
  CHECK(equal(averaging_class(*g.ctx, Weight::zero(2)),
              add(basis_vector(*g.ctx, g.id), scale(basis_vector(*g.ctx, g.s), RatExpr(-1)))));
  auto a3 = weyl_context(Family::A, 3);
  Weight m = parse_weight(a3->rs, "-e1");
  WeylElem s2 = simple_reflection(a3->rs, 1);
  StableVec sigma = averaging_class(*a3, m);
  CHECK(equal(sigma, add(basis_vector(*a3, WeylElem::identity(3)), scale(basis_vector(*a3, s2), RatExpr(-1)))));
  for (const auto& [family, rank] : kUpToRank3) {
    auto ctx = weyl_context(family, rank);
    for (const char* spec : {"-e1", "0", "fund:1"}) {
      Weight lambda = parse_weight(ctx->rs, spec);
      StableVec v = averaging_class(*ctx, lambda);
      for (const auto& z : stabilizer_elements(ctx->rs, lambda)) CHECK(equal(dl_transform(*ctx, z, v), v));
    }
  }
  CHECK_THROWS_AS(averaging_class(*a3, Weight{{0, 1, -1}}), DomainError);
}

TEST_CASE("Theta matrices") {
  Sl2 g;
  ThetaMatrix t = theta_matrix(*g.ctx, g.w);
  REQUIRE(t.size() == 2);
  CHECK(t.entries[0][0].kind == ThetaEntry::Delta);
  CHECK(t.entries[0][0].weight == g.w);
  CHECK(t.entries[1][1].weight == -g.w);
  CHECK(t.entries[0][1].value == rx("-h/(1-q1/q2)"));
  CHECK(t.entries[1][0].value == rx("-h/(1-q2/q1)"));

  ThetaMatrix zero = theta_matrix(*g.ctx, Weight::zero(2));
  CHECK(zero.size() == 1);
  CHECK(zero.skeleton(eps_form)(0, 0).is_zero());

  // With Delta_{-e_i} written chi_i the -e1 skeleton is the classical M(chi).
  for (const auto& [family, rank] : kUpToRank3) {
    auto ctx = weyl_context(family, rank);
    CAPTURE(ctx->rs.name());
    ThetaMatrix th = theta_matrix(*ctx, parse_weight(ctx->rs, "-e1"));
    CHECK(same(th.skeleton(chi_form), m_chi(family, rank)));
  }
}

TEST_CASE("trace relations on small instances") {
  Sl2 g;
  for (const auto& r : verify_trace_relation(*g.ctx, g.w, 4, "1/2,-1/2")) CHECK_MESSAGE(r.pass, r.instance << ": " << r.detail);
  auto a3 = weyl_context(Family::A, 3);
  for (const auto& r : verify_trace_relation(*a3, parse_weight(a3->rs, "-e1"), 3, "-e1"))
    CHECK_MESSAGE(r.pass, r.instance << ": " << r.detail);
  for (const auto& r : verify_trace_relation(*a3, Weight::zero(3), 2, "0")) CHECK(r.pass);
  auto b2 = weyl_context(Family::B, 2);
  auto reps = verify_trace_relation(*b2, parse_weight(b2->rs, "-e1"), 1, "-e1");
  CHECK(reps.front().pass);
  CHECK(reps.front().instance == "B2 lambda=-e1 k=1");
  CHECK(reps.front().reproducer == "sqh verify --suite traces --family B --rank 2 --weight=-e1 --k 1");
}

TEST_CASE("eigencolumns") {
  Sl2 g;
  CHECK(verify_eigencolumn(*g.ctx, g.w, "1/2,-1/2").pass);
  CHECK(verify_eigencolumn(*g.ctx, Weight::zero(2), "0").pass);
  auto b2 = weyl_context(Family::B, 2);
  VerifyReport r = verify_eigencolumn(*b2, parse_weight(b2->rs, "-e1"), "-e1");
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("the Weyl action is a ring automorphism") {
  Sl2 g;
  CHECK(automorphism_holds(*g.ctx, g.id, g.w, g.s));
  CHECK(automorphism_holds(*g.ctx, g.s, g.w, g.id));
  CHECK(automorphism_holds(*g.ctx, g.s, g.w, g.s));
  // T_s(D_w * D_-w) = T_s(D_w) * T_s(D_-w) at operator level
  const SymMatrix& dp = chevalley_operator(*g.ctx, g.w, Variant::Delta);
  const SymMatrix& dm = chevalley_operator(*g.ctx, -g.w, Variant::Delta);
  CHECK(same(dl_conjugate(*g.ctx, g.s, matmul(dp, dm)),
             matmul(dl_conjugate(*g.ctx, g.s, dp), dl_conjugate(*g.ctx, g.s, dm))));
  auto a3 = weyl_context(Family::A, 3);
  VerifyReport r = verify_automorphism(*a3, parse_weight(a3->rs, "-e1"), "-e1");
  CHECK_MESSAGE(r.pass, r.detail);
  const SymMatrix& op = chevalley_operator(*a3, parse_weight(a3->rs, "-e1"), Variant::Delta);
  CHECK_FALSE(same(dl_conjugate(*a3, simple_reflection(a3->rs, 0), op), op));
}

TEST_CASE("presentation relations") {
  Sl2 g;
  VerifyReport r = verify_sl2_relation();
  CHECK_MESSAGE(r.pass, r.detail);
  CHECK(presentation_relation(*g.ctx, Weight::zero(2), 1).is_zero());
  CHECK_THROWS_AS(presentation_relation(*g.ctx, g.w, 0), DomainError);

  // k = 1 for GL3 and -e1 is E1(chi) - e1(t) with t_i = -eps_i.
  auto a3 = weyl_context(Family::A, 3);
  Presentation p = emit_presentation(a3->rs);
  std::map<int, RatExpr> chi_to_x, t_to_eps;
  for (int i = 1; i <= 3; ++i) {
    chi_to_x[var::chi(i).slot()] = p.chi_definitions[std::size_t(i - 1)];
    t_to_eps[var::t(i).slot()] = -test::v(var::eps(i));
  }
  RatExpr e1 = substitute(substitute(p.relations[0], chi_to_x), t_to_eps);
  CHECK(presentation_relation(*a3, parse_weight(a3->rs, "-e1"), 1) == e1);
  auto sub = [&](const RatExpr& x) { return substitute(substitute(x, chi_to_x), t_to_eps); };
  RatExpr E1 = sub(elementary_E(Family::A, 3, 1)), E2 = sub(elementary_E(Family::A, 3, 2));
  RatExpr t1 = sub(elementary_symmetric(t_vars(3), 1)), t2 = sub(elementary_symmetric(t_vars(3), 2));
  // tr(Theta^2) is the second power sum E1^2 - 2 E2 of the eigenvalues.
  RatExpr k2 = presentation_relation(*a3, parse_weight(a3->rs, "-e1"), 2);
  CHECK(k2 == (E1 * E1 - RatExpr(2) * E2) - (t1 * t1 - RatExpr(2) * t2));
  CHECK(classical_limit_ok(a3->rs, k2, false));
}

TEST_CASE("emitted presentations") {
  auto check_shape = [](Family f, int n, std::size_t relations) {
    RootSystem rs = build_root_system(f, n);
    Presentation p = emit_presentation(rs);
    CAPTURE(rs.name());
    CHECK(p.relations.size() == relations);
    CHECK(p.relation_labels.size() == relations);
    CHECK(p.generators.size() == std::size_t(2 * n + 1));
    for (const auto& rel : p.relations) {
      std::string why;
      CHECK_MESSAGE(classical_limit_ok(rs, rel, true, &why), why);
    }
    Presentation back = presentation_from_json(p.to_json());
    CHECK(back.to_json() == p.to_json());
    CHECK(back.to_text() == p.to_text());
    CHECK(p.to_latex().find("\\begin{align*}") != std::string::npos);
    return p;
  };
  Presentation a = check_shape(Family::A, 2, 2);
  CHECK(a.relation_labels[0] == "E1(chi) - e1(t)");
  Presentation c = check_shape(Family::C, 2, 2);
  CHECK(c.relations[0] == elementary_E(Family::C, 2, 2) + rx("t1^2 + t2^2"));
  CHECK(c.relations[1] == elementary_E(Family::C, 2, 4) - rx("t1^2*t2^2"));
  Presentation d = check_shape(Family::D, 2, 2);
  CHECK(d.relations[0] == elementary_E(Family::D, 2, 2) + rx("t1^2 + t2^2"));
  CHECK(d.relations[1] == determinant(a_chi(2)) - rx("t1*t2"));
  check_shape(Family::B, 2, 2);
  check_shape(Family::A, 3, 3);
  check_shape(Family::D, 3, 3);
}

TEST_CASE("the classical limit check rejects bad relations") {
  RootSystem b2 = build_root_system(Family::B, 2);
  std::string why;
  CHECK(classical_limit_ok(b2, rx("chi1^2 + chi2^2 - t1^2 - t2^2 + h*q1"), true));
  CHECK_FALSE(classical_limit_ok(b2, rx("chi1 - t1"), true, &why));
  CHECK_FALSE(why.empty());
  CHECK_FALSE(classical_limit_ok(b2, rx("chi1^2 - t1^2 + q1"), true));
  CHECK_FALSE(classical_limit_ok(b2, rx("chi1^2 + chi2^2 - t1^2"), true));
  CHECK_FALSE(classical_limit_ok(b2, rx("chi1*t1"), true));
}
