#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqh/rational.hpp"

namespace sqh {

enum class Family { A, B, C, D };

std::string family_name(Family f);
Family parse_family(std::string_view s);

// Vectors in the e_i basis (weights) and the dual e_i^v basis (coroots).
// Both are plain coordinate lists; the separate types keep the pairing honest.
struct Weight {
  std::vector<Rational> coords;

  int dim() const { return int(coords.size()); }
  static Weight zero(int n) { return {std::vector<Rational>(std::size_t(n))}; }
  static Weight unit(int n, int i, const Rational& c = 1);  // c * e_i, i is 1-based
  bool is_zero() const;
  Weight operator-() const;
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator*(const Rational& c) const;
  bool operator==(const Weight& o) const = default;
  std::string str() const;  // "(1/2,-1)"
};

struct Coroot {
  std::vector<Rational> coords;

  int dim() const { return int(coords.size()); }
  bool is_zero() const;
  Coroot operator-() const;
  Coroot operator+(const Coroot& o) const;
  bool operator==(const Coroot& o) const = default;
  std::string str() const;
};

Rational pairing(const Weight& lambda, const Coroot& gamma);

struct Root {
  Weight root;
  Coroot coroot;
};

class RootSystem {
 public:
  Family family;
  int rank = 0;
  std::vector<Weight> simple_roots;
  std::vector<Coroot> simple_coroots;
  std::vector<Root> positive_roots;
  std::vector<Weight> fundamental_weights;
  Weight rho;
  std::optional<int> p_param;  // 2 for B, 1 for C

  // Number of coordinates; type A_{n-1} is modelled on GL_n with n coordinates.
  int dim() const { return rank; }
  int num_simple() const { return int(simple_roots.size()); }
  std::string name() const;  // "A3", "B2", ...
  std::size_t weyl_order() const;
};

// Type A takes the GL_n convention: rank n gives n coordinates and n-1 simple
// roots, with rho = (n-1, ..., 1, 0).
RootSystem build_root_system(Family family, int rank);

// s_alpha(lambda) for the positive root with the given index.
Weight reflect(const RootSystem& rs, const Weight& lambda, int root_index);

Rational simple_pairing(const RootSystem& rs, const Weight& lambda, int i);  // i is 0-based
bool is_dominant(const RootSystem& rs, const Weight& lambda);
bool is_antidominant(const RootSystem& rs, const Weight& lambda);
bool is_strictly_dominant(const RootSystem& rs, const Weight& lambda);

// 0-based indices i with <lambda, alpha_i^v> = 0; lambda must be dominant or
// antidominant.
std::vector<int> stabilizer_generators(const RootSystem& rs, const Weight& lambda);

// True when lambda lies in the weight lattice of the family. Type A also
// accepts trace-free SL_n weights, which is how SL2's (1/2, -1/2) enters.
bool in_weight_lattice(const RootSystem& rs, const Weight& lambda);

// Named weights: "-e1", "e2", "rho", "fund:i", "-fund:i", "0", or an explicit
// comma separated rational vector such as "1/2,1/2".
Weight parse_weight(const RootSystem& rs, std::string_view spec);

}  // namespace sqh
