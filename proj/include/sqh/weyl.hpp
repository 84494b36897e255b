#pragma once

#include <cstddef>
#include <memory>
#include <unordered_map>
#include <optional>
#include <string>
#include <vector>

#include "sqh/ratexpr.hpp"
#include "sqh/rootdata.hpp"

namespace sqh {

// Signed permutation: w(e_i) = sign_i * e_{|img_i|}, stored as the signed
// 1-based image img_i. Type A elements carry no signs; type D an even number.
class WeylElem {
 public:
  WeylElem() = default;
  static WeylElem identity(int n);
  static WeylElem from_images(std::vector<int> img);  // validates the signed permutation

  int dim() const { return int(img_.size()); }
  const std::vector<int>& images() const { return img_; }
  int image(int i) const { return img_[std::size_t(i - 1)]; }  // i is 1-based
  bool is_identity() const;

  WeylElem operator*(const WeylElem& o) const;  // (u*v)(x) = u(v(x))
  WeylElem inverse() const;
  bool operator==(const WeylElem& o) const = default;
  auto operator<=>(const WeylElem& o) const = default;  // lex on the one-line form

  std::string str() const;  // one-line form "[2,-1,3]"

 private:
  std::vector<int> img_;
};

struct WeylElemHash {
  std::size_t operator()(const WeylElem& w) const;
};

WeylElem simple_reflection(const RootSystem& rs, int i);  // i is 0-based
WeylElem root_reflection(const RootSystem& rs, int root_index);

std::size_t length(const RootSystem& rs, const WeylElem& w);
bool is_positive_root_vector(const Weight& w);

Weight act_weight(const WeylElem& w, const Weight& lambda);
Coroot act_coroot(const WeylElem& w, const Coroot& gamma);

// Index into rs.positive_roots of +-(w alpha) together with the sign.
struct SignedRoot {
  int index;
  int sign;
};
SignedRoot act_root(const RootSystem& rs, const WeylElem& w, int root_index);

// Laurent monomial map realizing w on q-variables (q^beta -> q^{w beta}).
// With also_p the p-variables are moved the same way, since p_i stands for
// p_{e_i}; epsilon variables are never touched.
MonomialMap q_action(const WeylElem& w, bool also_p = false);
MonomialMap eps_action(const WeylElem& w);

// Left-greedy lexicographically smallest reduced word, as 0-based simple
// reflection indices, so that w = s_{w[0]} s_{w[1]} ...
std::vector<int> reduced_word(const RootSystem& rs, const WeylElem& w);
std::string word_str(const std::vector<int>& word);  // "s2s1", "id"

inline constexpr std::size_t kDefaultMaxWeyl = 40320;

// Every element once, ordered by (length, lexicographically smallest reduced word).
std::vector<WeylElem> all_elements(const RootSystem& rs, std::size_t max_order = kDefaultMaxWeyl);

enum class CosetOrder { MinusE1A, MinusE1BC, MinusE1D, Generic };

struct CosetList {
  std::vector<WeylElem> reps;
  Weight lambda;
  CosetOrder order_tag = CosetOrder::Generic;

  int index_of(const WeylElem& w) const;  // -1 when absent
};

// Minimal coset representatives W^lambda. For lambda = -e_1 the order is the
// explicit one used for the classical matrices (by position of u(lambda) in
// -e_1, ..., -e_n, e_n, ..., e_1); otherwise (length, one-line form).
CosetList min_coset_reps(const RootSystem& rs, const Weight& lambda, std::size_t max_order = kDefaultMaxWeyl);

WeylElem coset_min_rep(const RootSystem& rs, const WeylElem& w, const Weight& lambda);

// The unique positive root alpha with <lambda, alpha^v> != 0 and
// min_rep(u s_alpha) = v, as an index into rs.positive_roots. Throws
// InvariantViolation if more than one root qualifies.
std::optional<int> offdiag_root(const RootSystem& rs, const WeylElem& u, const WeylElem& v, const Weight& lambda);

// The stabilizer subgroup W_lambda (lambda +-dominant), in all_elements order.
std::vector<WeylElem> stabilizer_elements(const RootSystem& rs, const Weight& lambda);

// Precomputed group data shared by the operator modules: elements in
// all_elements order, their positions, lengths, and root reflections.
struct WeylContext {
  RootSystem rs;
  std::vector<WeylElem> elems;
  std::unordered_map<WeylElem, int, WeylElemHash> pos;
  std::vector<std::size_t> len;
  std::vector<WeylElem> reflections;  // s_alpha for each positive root

  int size() const { return int(elems.size()); }
  int index(const WeylElem& w) const;
  int sign(int i) const { return len[std::size_t(i)] % 2 ? -1 : 1; }
};

// Memoized per (family, rank); safe to call from several threads.
std::shared_ptr<const WeylContext> weyl_context(Family family, int rank, std::size_t max_order = kDefaultMaxWeyl);

}  // namespace sqh
