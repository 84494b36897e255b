#include "sqh/rootdata.hpp"

#include "sqh/errors.hpp"
#include "sqh/variables.hpp"

namespace sqh {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
  }
  return "?";
}

Family parse_family(std::string_view s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw DomainError("unknown family '" + std::string(s) + "'");
}

// ---------------------------------------------------------------- vectors

namespace {

std::string coords_str(const std::vector<Rational>& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += c[i].str();
  }
  return s + ")";
}

bool all_zero(const std::vector<Rational>& c) {
  for (const auto& x : c)
    if (!x.is_zero()) return false;
  return true;
}

void check_dims(int a, int b) {
  if (a != b) throw DomainError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

Weight Weight::unit(int n, int i, const Rational& c) {
  Weight w = zero(n);
  w.coords.at(std::size_t(i - 1)) = c;
  return w;
}

bool Weight::is_zero() const { return all_zero(coords); }

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& x : r.coords) x = -x;
  return r;
}

Weight Weight::operator+(const Weight& o) const {
  check_dims(dim(), o.dim());
  Weight r = *this;
  for (int i = 0; i < dim(); ++i) r.coords[i] += o.coords[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator*(const Rational& c) const {
  Weight r = *this;
  for (auto& x : r.coords) x *= c;
  return r;
}

std::string Weight::str() const { return coords_str(coords); }

bool Coroot::is_zero() const { return all_zero(coords); }

Coroot Coroot::operator-() const {
  Coroot r = *this;
  for (auto& x : r.coords) x = -x;
  return r;
}

Coroot Coroot::operator+(const Coroot& o) const {
  check_dims(dim(), o.dim());
  Coroot r = *this;
  for (int i = 0; i < dim(); ++i) r.coords[i] += o.coords[i];
  return r;
}

std::string Coroot::str() const { return coords_str(coords); }

Rational pairing(const Weight& lambda, const Coroot& gamma) {
  check_dims(lambda.dim(), gamma.dim());
  Rational s;
  for (int i = 0; i < lambda.dim(); ++i) s += lambda.coords[i] * gamma.coords[i];
  return s;
}

// ---------------------------------------------------------------- root systems

std::string RootSystem::name() const { return family_name(family) + std::to_string(rank); }

std::size_t RootSystem::weyl_order() const {
  std::size_t fact = 1;
  for (int i = 2; i <= rank; ++i) fact *= std::size_t(i);
  switch (family) {
    case Family::A: return fact;
    case Family::B:
    case Family::C: return fact << rank;
    case Family::D: return fact << (rank - 1);
  }
  return 0;
}

namespace {

Weight wvec(int n, int i, int si, int j = 0, int sj = 0) {
  Weight w = Weight::zero(n);
  w.coords[i - 1] += si;
  if (j) w.coords[j - 1] += sj;
  return w;
}

Coroot cvec(const Weight& w, const Rational& scale = 1) {
  Coroot c;
  for (const auto& x : w.coords) c.coords.push_back(x * scale);
  return c;
}

}  // namespace

RootSystem build_root_system(Family family, int rank) {
  if (rank < 1) throw DomainError("rank must be at least 1");
  if (family == Family::D && rank < 2) throw DomainError("type D needs rank at least 2");
  if (rank > kMaxIndex) throw DomainError("rank " + std::to_string(rank) + " exceeds the supported maximum " + std::to_string(kMaxIndex));

  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  const int n = rank;

  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Weight a = wvec(n, i, 1, j, -1);
      rs.positive_roots.push_back({a, cvec(a)});
    }
  if (family != Family::A)
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        Weight a = wvec(n, i, 1, j, 1);
        rs.positive_roots.push_back({a, cvec(a)});
      }
  if (family == Family::B) {
    rs.p_param = 2;
    for (int i = 1; i <= n; ++i) rs.positive_roots.push_back({wvec(n, i, 1), cvec(wvec(n, i, 2))});
  } else if (family == Family::C) {
    rs.p_param = 1;
    for (int i = 1; i <= n; ++i) rs.positive_roots.push_back({wvec(n, i, 2), cvec(wvec(n, i, 1))});
  }

  for (int i = 1; i < n; ++i) {
    rs.simple_roots.push_back(wvec(n, i, 1, i + 1, -1));
    rs.simple_coroots.push_back(cvec(rs.simple_roots.back()));
  }
  switch (family) {
    case Family::A: break;
    case Family::B:
      rs.simple_roots.push_back(wvec(n, n, 1));
      rs.simple_coroots.push_back(cvec(wvec(n, n, 2)));
      break;
    case Family::C:
      rs.simple_roots.push_back(wvec(n, n, 2));
      rs.simple_coroots.push_back(cvec(wvec(n, n, 1)));
      break;
    case Family::D:
      rs.simple_roots.push_back(wvec(n, n - 1, 1, n, 1));
      rs.simple_coroots.push_back(cvec(rs.simple_roots.back()));
      break;
  }

  // omega_i = e_1 + ... + e_i, except for the spin nodes.
  const Rational half(1, 2);
  for (int i = 1; i <= rs.num_simple(); ++i) {
    Weight w = Weight::zero(n);
    for (int k = 1; k <= i; ++k) w.coords[k - 1] = 1;
    if (family == Family::B && i == n) w = w * half;
    if (family == Family::D && i >= n - 1) {
      w = Weight::zero(n);
      for (int k = 1; k <= n; ++k) w.coords[k - 1] = half;
      if (i == n - 1) w.coords[n - 1] = -half;
    }
    rs.fundamental_weights.push_back(w);
  }

  rs.rho = Weight::zero(n);
  for (int i = 1; i <= n; ++i) {
    switch (family) {
      case Family::A:
      case Family::D: rs.rho.coords[i - 1] = n - i; break;
      case Family::B: rs.rho.coords[i - 1] = Rational(2 * (n - i) + 1, 2); break;
      case Family::C: rs.rho.coords[i - 1] = n + 1 - i; break;
    }
  }
  return rs;
}

Weight reflect(const RootSystem& rs, const Weight& lambda, int root_index) {
  if (root_index < 0 || root_index >= int(rs.positive_roots.size()))
    throw DomainError("root index " + std::to_string(root_index) + " out of range");
  const Root& r = rs.positive_roots[std::size_t(root_index)];
  return lambda - r.root * pairing(lambda, r.coroot);
}

Rational simple_pairing(const RootSystem& rs, const Weight& lambda, int i) {
  return pairing(lambda, rs.simple_coroots.at(std::size_t(i)));
}

bool is_dominant(const RootSystem& rs, const Weight& lambda) {
  for (int i = 0; i < rs.num_simple(); ++i)
    if (simple_pairing(rs, lambda, i).sign() < 0) return false;
  return true;
}

bool is_antidominant(const RootSystem& rs, const Weight& lambda) { return is_dominant(rs, -lambda); }

bool is_strictly_dominant(const RootSystem& rs, const Weight& lambda) {
  for (int i = 0; i < rs.num_simple(); ++i)
    if (simple_pairing(rs, lambda, i).sign() <= 0) return false;
  return true;
}

std::vector<int> stabilizer_generators(const RootSystem& rs, const Weight& lambda) {
  check_dims(lambda.dim(), rs.dim());
  if (!is_dominant(rs, lambda) && !is_antidominant(rs, lambda))
    throw DomainError("weight " + lambda.str() + " is neither dominant nor antidominant");
  std::vector<int> out;
  for (int i = 0; i < rs.num_simple(); ++i)
    if (simple_pairing(rs, lambda, i).is_zero()) out.push_back(i);
  return out;
}

bool in_weight_lattice(const RootSystem& rs, const Weight& lambda) {
  if (lambda.dim() != rs.dim()) return false;
  if (rs.family == Family::D) {
    for (const auto& c : lambda.coords)
      if (!(c * 2).is_integer() || !(c - lambda.coords[0]).is_integer()) return false;
    return true;
  }
  if (rs.family == Family::A) {
    // GL_n weights, plus trace-free SL_n weights such as (1/2, -1/2).
    Rational sum;
    for (const auto& c : lambda.coords) {
      if (!(c - lambda.coords[0]).is_integer()) return false;
      sum += c;
    }
    return lambda.coords[0].is_integer() || sum.is_zero();
  }
  for (const auto& c : lambda.coords)
    if (!c.is_integer()) return false;
  return true;
}

Weight parse_weight(const RootSystem& rs, std::string_view spec) {
  const int n = rs.dim();
  std::string s(spec);
  if (s.empty()) throw DomainError("empty weight specification");
  if (s == "0") return Weight::zero(n);
  if (s == "rho") return rs.rho;
  if (s == "-rho") return -rs.rho;
  bool neg = s[0] == '-';
  std::string body = neg ? s.substr(1) : s;
  auto index_of = [&](const std::string& digits, int bound) {
    int i = 0;
    try {
      std::size_t used = 0;
      i = std::stoi(digits, &used);
      if (used != digits.size()) i = 0;
    } catch (const std::exception&) {
      i = 0;
    }
    if (i < 1 || i > bound) throw DomainError("index out of range in weight '" + s + "'");
    return i;
  };
  if (body.size() >= 2 && body[0] == 'e' && body.find(',') == std::string::npos) {
    Weight w = Weight::unit(n, index_of(body.substr(1), n));
    return neg ? -w : w;
  }
  if (body.rfind("fund:", 0) == 0) {
    Weight w = rs.fundamental_weights[std::size_t(index_of(body.substr(5), rs.num_simple()) - 1)];
    return neg ? -w : w;
  }
  Weight w;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string::npos) end = s.size();
    std::string piece = s.substr(start, end - start);
    while (!piece.empty() && piece.front() == ' ') piece.erase(piece.begin());
    while (!piece.empty() && piece.back() == ' ') piece.pop_back();
    w.coords.push_back(Rational::parse(piece));
    start = end + 1;
  }
  if (w.dim() != n)
    throw DomainError("weight '" + s + "' has " + std::to_string(w.dim()) + " coordinates, expected " + std::to_string(n));
  if (!in_weight_lattice(rs, w)) throw DomainError("weight '" + s + "' is not in the weight lattice of " + rs.name());
  return w;
}

}  // namespace sqh
