#include "sqh/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <unordered_set>

#include "sqh/errors.hpp"

namespace sqh {

WeylElem WeylElem::identity(int n) {
  WeylElem w;
  for (int i = 1; i <= n; ++i) w.img_.push_back(i);
  return w;
}

WeylElem WeylElem::from_images(std::vector<int> img) {
  std::vector<bool> seen(img.size() + 1, false);
  for (int v : img) {
    int a = std::abs(v);
    if (a < 1 || a > int(img.size()) || seen[std::size_t(a)])
      throw DomainError("not a signed permutation");
    seen[std::size_t(a)] = true;
  }
  WeylElem w;
  w.img_ = std::move(img);
  return w;
}

bool WeylElem::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != int(i + 1)) return false;
  return true;
}

WeylElem WeylElem::operator*(const WeylElem& o) const {
  if (dim() != o.dim()) throw DomainError("Weyl elements of different rank");
  WeylElem r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) {
    int v = o.img_[i];
    int u = img_[std::size_t(std::abs(v) - 1)];
    r.img_[i] = v > 0 ? u : -u;
  }
  return r;
}

WeylElem WeylElem::inverse() const {
  WeylElem r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) {
    int v = img_[i];
    r.img_[std::size_t(std::abs(v) - 1)] = v > 0 ? int(i + 1) : -int(i + 1);
  }
  return r;
}

std::string WeylElem::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(img_[i]);
  }
  return s + "]";
}

std::size_t WeylElemHash::operator()(const WeylElem& w) const {
  std::size_t h = 0;
  for (int v : w.images()) h = h * 31 + std::size_t(v + 64);
  return h;
}

// ---------------------------------------------------------------- actions

Weight act_weight(const WeylElem& w, const Weight& lambda) {
  if (lambda.dim() != w.dim()) throw DomainError("dimension mismatch in Weyl action");
  Weight r = Weight::zero(w.dim());
  for (int i = 1; i <= w.dim(); ++i) {
    int v = w.image(i);
    const Rational& c = lambda.coords[std::size_t(i - 1)];
    r.coords[std::size_t(std::abs(v) - 1)] += v > 0 ? c : -c;
  }
  return r;
}

Coroot act_coroot(const WeylElem& w, const Coroot& gamma) {
  Weight tmp{gamma.coords};
  return Coroot{act_weight(w, tmp).coords};
}

bool is_positive_root_vector(const Weight& w) {
  for (const auto& c : w.coords)
    if (!c.is_zero()) return c.sign() > 0;
  return false;
}

namespace {

WeylElem from_linear_images(const std::vector<Weight>& cols) {
  std::vector<int> img;
  for (const auto& c : cols) {
    int found = 0;
    for (int k = 0; k < c.dim(); ++k) {
      const Rational& x = c.coords[std::size_t(k)];
      if (x.is_zero()) continue;
      if (found || !(x.is_one() || (-x).is_one())) throw InvariantViolation("reflection is not a signed permutation");
      found = x.sign() > 0 ? k + 1 : -(k + 1);
    }
    img.push_back(found);
  }
  return WeylElem::from_images(std::move(img));
}

WeylElem reflection_in(const Weight& alpha, const Coroot& coroot) {
  std::vector<Weight> cols;
  const int n = alpha.dim();
  for (int k = 1; k <= n; ++k) {
    Weight e = Weight::unit(n, k);
    cols.push_back(e - alpha * pairing(e, coroot));
  }
  return from_linear_images(cols);
}

}  // namespace

WeylElem simple_reflection(const RootSystem& rs, int i) {
  return reflection_in(rs.simple_roots.at(std::size_t(i)), rs.simple_coroots.at(std::size_t(i)));
}

WeylElem root_reflection(const RootSystem& rs, int root_index) {
  const Root& r = rs.positive_roots.at(std::size_t(root_index));
  return reflection_in(r.root, r.coroot);
}

std::size_t length(const RootSystem& rs, const WeylElem& w) {
  std::size_t l = 0;
  for (const auto& r : rs.positive_roots)
    if (!is_positive_root_vector(act_weight(w, r.root))) ++l;
  return l;
}

SignedRoot act_root(const RootSystem& rs, const WeylElem& w, int root_index) {
  Weight image = act_weight(w, rs.positive_roots.at(std::size_t(root_index)).root);
  int sign = is_positive_root_vector(image) ? 1 : -1;
  if (sign < 0) image = -image;
  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
    if (rs.positive_roots[i].root == image) return {int(i), sign};
  throw InvariantViolation("Weyl image of a root is not a root");
}

MonomialMap q_action(const WeylElem& w, bool also_p) {
  MonomialMap f;
  for (int i = 1; i <= w.dim(); ++i) {
    int v = w.image(i);
    int j = std::abs(v), e = v > 0 ? 1 : -1;
    f.send(var::q(i).slot(), Monomial::of(var::q(j), e));
    // p_{e_i} -> p_{w e_i} is linear, so only a sign is needed, not an inverse.
    if (also_p) f.send(var::p(i).slot(), Monomial::of(var::p(j)), e);
  }
  return f;
}

MonomialMap eps_action(const WeylElem& w) {
  MonomialMap f;
  for (int i = 1; i <= w.dim(); ++i) {
    int v = w.image(i);
    f.send(var::eps(i).slot(), Monomial::of(var::eps(std::abs(v))), v > 0 ? 1 : -1);
  }
  return f;
}

// ---------------------------------------------------------------- enumeration

std::vector<int> reduced_word(const RootSystem& rs, const WeylElem& w) {
  std::vector<int> word;
  WeylElem cur = w;
  std::size_t l = length(rs, cur);
  while (l > 0) {
    bool moved = false;
    for (int i = 0; i < rs.num_simple(); ++i) {
      WeylElem next = simple_reflection(rs, i) * cur;
      std::size_t nl = length(rs, next);
      if (nl < l) {
        word.push_back(i);
        cur = next;
        l = nl;
        moved = true;
        break;
      }
    }
    if (!moved) throw InvariantViolation("no left descent for a non-identity element");
  }
  return word;
}

std::string word_str(const std::vector<int>& word) {
  if (word.empty()) return "id";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i + 1);
  return s;
}

std::vector<WeylElem> all_elements(const RootSystem& rs, std::size_t max_order) {
  std::size_t order = rs.weyl_order();
  if (order > max_order)
    throw ResourceError("Weyl group of " + rs.name() + " has " + std::to_string(order) + " elements, above the bound " +
                        std::to_string(max_order));
  std::vector<WeylElem> gens;
  for (int i = 0; i < rs.num_simple(); ++i) gens.push_back(simple_reflection(rs, i));

  std::vector<WeylElem> elems{WeylElem::identity(rs.dim())};
  std::unordered_set<WeylElem, WeylElemHash> seen(elems.begin(), elems.end());
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (const auto& g : gens) {
      WeylElem w = elems[head] * g;
      if (seen.insert(w).second) elems.push_back(w);
    }
  if (elems.size() != order) throw InvariantViolation("Weyl group enumeration size mismatch");

  struct Keyed {
    std::size_t len;
    std::vector<int> word;
    WeylElem w;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(elems.size());
  for (auto& w : elems) {
    auto word = reduced_word(rs, w);
    keyed.push_back({word.size(), std::move(word), std::move(w)});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    return a.len != b.len ? a.len < b.len : a.word < b.word;
  });
  std::vector<WeylElem> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.w));
  return out;
}

// ---------------------------------------------------------------- cosets

int CosetList::index_of(const WeylElem& w) const {
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (reps[i] == w) return int(i);
  return -1;
}

WeylElem coset_min_rep(const RootSystem& rs, const WeylElem& w, const Weight& lambda) {
  std::vector<int> J = stabilizer_generators(rs, lambda);
  WeylElem cur = w;
  std::size_t l = length(rs, cur);
  for (bool moved = true; moved;) {
    moved = false;
    for (int j : J) {
      WeylElem next = cur * simple_reflection(rs, j);
      std::size_t nl = length(rs, next);
      if (nl < l) {
        cur = next;
        l = nl;
        moved = true;
        break;
      }
    }
  }
  return cur;
}

std::vector<WeylElem> stabilizer_elements(const RootSystem& rs, const Weight& lambda) {
  stabilizer_generators(rs, lambda);  // validates dominance
  std::vector<WeylElem> out;
  for (auto& w : all_elements(rs))
    if (act_weight(w, lambda) == lambda) out.push_back(w);
  return out;
}

namespace {

bool is_minus_e1(const Weight& lambda) {
  if (lambda.dim() < 1 || !(lambda.coords[0] == Rational(-1))) return false;
  for (int i = 1; i < lambda.dim(); ++i)
    if (!lambda.coords[std::size_t(i)].is_zero()) return false;
  return true;
}

// Position of u(-e_1) = +-e_k in the list -e_1, ..., -e_n, e_n, ..., e_1.
int minus_e1_position(const WeylElem& u) {
  int v = u.image(1);
  int k = std::abs(v), n = u.dim();
  return v > 0 ? k - 1 : 2 * n - k;
}

}  // namespace

CosetList min_coset_reps(const RootSystem& rs, const Weight& lambda, std::size_t max_order) {
  stabilizer_generators(rs, lambda);
  CosetList out;
  out.lambda = lambda;
  std::map<WeylElem, std::size_t> reps;
  for (const auto& w : all_elements(rs, max_order)) {
    WeylElem m = coset_min_rep(rs, w, lambda);
    reps.try_emplace(m, length(rs, m));
  }
  for (const auto& [w, l] : reps) out.reps.push_back(w);

  if (is_minus_e1(lambda)) {
    std::sort(out.reps.begin(), out.reps.end(),
              [](const WeylElem& a, const WeylElem& b) { return minus_e1_position(a) < minus_e1_position(b); });
    switch (rs.family) {
      case Family::A: out.order_tag = CosetOrder::MinusE1A; break;
      case Family::B:
      case Family::C: out.order_tag = CosetOrder::MinusE1BC; break;
      case Family::D: out.order_tag = CosetOrder::MinusE1D; break;
    }
  } else {
    std::stable_sort(out.reps.begin(), out.reps.end(), [&](const WeylElem& a, const WeylElem& b) {
      return reps.at(a) != reps.at(b) ? reps.at(a) < reps.at(b) : a < b;
    });
  }
  return out;
}

std::optional<int> offdiag_root(const RootSystem& rs, const WeylElem& u, const WeylElem& v, const Weight& lambda) {
  if (u == v) throw DomainError("offdiag_root needs distinct coset representatives");
  std::optional<int> found;
  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) {
    if (pairing(lambda, rs.positive_roots[i].coroot).is_zero()) continue;
    if (coset_min_rep(rs, u * root_reflection(rs, int(i)), lambda) != v) continue;
    if (found)
      throw InvariantViolation("two roots (" + rs.positive_roots[std::size_t(*found)].root.str() + " and " +
                               rs.positive_roots[i].root.str() + ") connect " + u.str() + " to " + v.str());
    found = int(i);
  }
  return found;
}

// ---------------------------------------------------------------- context

int WeylContext::index(const WeylElem& w) const {
  auto it = pos.find(w);
  if (it == pos.end()) throw DomainError("element " + w.str() + " is not in W(" + rs.name() + ")");
  return it->second;
}

std::shared_ptr<const WeylContext> weyl_context(Family family, int rank, std::size_t max_order) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const WeylContext>> memo;
  const auto key = std::make_pair(int(family), rank);
  {
    std::lock_guard lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) {
      if (it->second->elems.size() > max_order)
        throw ResourceError("Weyl group of " + it->second->rs.name() + " has " + std::to_string(it->second->elems.size()) +
                            " elements, above the bound " + std::to_string(max_order));
      return it->second;
    }
  }
  auto ctx = std::make_shared<WeylContext>();
  ctx->rs = build_root_system(family, rank);
  ctx->elems = all_elements(ctx->rs, max_order);
  for (std::size_t i = 0; i < ctx->elems.size(); ++i) {
    ctx->pos.emplace(ctx->elems[i], int(i));
    ctx->len.push_back(length(ctx->rs, ctx->elems[i]));
  }
  for (std::size_t a = 0; a < ctx->rs.positive_roots.size(); ++a) ctx->reflections.push_back(root_reflection(ctx->rs, int(a)));
  std::lock_guard lock(mu);
  return memo.try_emplace(key, std::move(ctx)).first->second;
}

}  // namespace sqh
