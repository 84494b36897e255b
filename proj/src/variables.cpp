#include "sqh/variables.hpp"

#include <cctype>

#include "sqh/errors.hpp"

namespace sqh {

namespace {

struct KindInfo {
  VarKind kind;
  int base;
  const char* text;
  const char* tex;
  bool indexed;
};

constexpr KindInfo kKinds[] = {
    {VarKind::Hbar, 0, "h", "\\hbar", false},        {VarKind::S, 1, "s", "\\hbar^{1/2}", false},
    {VarKind::Eps, 2, "e", "\\varepsilon", true},    {VarKind::P, 8, "p", "p", true},
    {VarKind::Q, 14, "q", "q", true},                {VarKind::Chi, 20, "chi", "\\chi", true},
    {VarKind::X, 26, "x", "x", true},                {VarKind::T, 32, "t", "t", true},
    {VarKind::A, 38, "a", "a", true},                {VarKind::B, 44, "b", "b", true},
    {VarKind::Y, 50, "y", "y", false},
};

const KindInfo& info(VarKind k) { return kKinds[static_cast<int>(k)]; }

Var indexed(VarKind k, int i) {
  if (i < 1 || i > kMaxIndex)
    throw DomainError("variable index " + std::to_string(i) + " outside 1.." + std::to_string(kMaxIndex));
  return {k, i};
}

}  // namespace

int Var::slot() const {
  const KindInfo& k = info(kind);
  return k.indexed ? k.base + index - 1 : k.base;
}

Var Var::from_slot(int slot) {
  for (int i = int(std::size(kKinds)) - 1; i >= 0; --i) {
    if (slot >= kKinds[i].base) return kKinds[i].indexed ? Var{kKinds[i].kind, slot - kKinds[i].base + 1} : Var{kKinds[i].kind, 0};
  }
  throw DomainError("bad variable slot");
}

std::string Var::name() const {
  const KindInfo& k = info(kind);
  return k.indexed ? k.text + std::to_string(index) : std::string(k.text);
}

std::string Var::latex() const {
  const KindInfo& k = info(kind);
  return k.indexed ? std::string(k.tex) + "_{" + std::to_string(index) + "}" : std::string(k.tex);
}

std::optional<Var> Var::parse(std::string_view name) {
  std::size_t split = 0;
  while (split < name.size() && std::isalpha(static_cast<unsigned char>(name[split]))) ++split;
  std::string_view head = name.substr(0, split);
  std::string_view tail = name.substr(split);
  for (const KindInfo& k : kKinds) {
    if (head != k.text) continue;
    if (!k.indexed) {
      if (!tail.empty()) return std::nullopt;
      return Var{k.kind, 0};
    }
    if (tail.empty() || tail.size() > 2) return std::nullopt;
    int idx = 0;
    for (char c : tail) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      idx = idx * 10 + (c - '0');
    }
    if (idx < 1 || idx > kMaxIndex) return std::nullopt;
    return Var{k.kind, idx};
  }
  return std::nullopt;
}

namespace var {
Var eps(int i) { return indexed(VarKind::Eps, i); }
Var p(int i) { return indexed(VarKind::P, i); }
Var q(int i) { return indexed(VarKind::Q, i); }
Var chi(int i) { return indexed(VarKind::Chi, i); }
Var x(int i) { return indexed(VarKind::X, i); }
Var t(int i) { return indexed(VarKind::T, i); }
Var a(int i) { return indexed(VarKind::A, i); }
Var b(int i) { return indexed(VarKind::B, i); }
}  // namespace var

}  // namespace sqh
