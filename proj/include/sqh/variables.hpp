#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sqh {

// Fixed variable layout shared by every expression. The slot index is the
// term-order priority: later slots dominate in graded lex comparisons.
enum class VarKind : std::uint8_t { Hbar, S, Eps, P, Q, Chi, X, T, A, B, Y };

inline constexpr int kMaxIndex = 6;  // largest per-family index (eps_1..eps_6 etc.)
inline constexpr int kNumVars = 51;
inline constexpr int kSlots = 56;  // padded storage

struct Var {
  VarKind kind;
  int index;  // 1-based for indexed kinds, 0 for hbar, s, y

  int slot() const;
  static Var from_slot(int slot);
  std::string name() const;   // canonical text name: h, s, e1, p1, q1, chi1, x1, t1, a1, b1, y
  std::string latex() const;  // \hbar, \varepsilon_{1}, q_{1}, ...
  static std::optional<Var> parse(std::string_view name);

  bool operator==(const Var&) const = default;
};

namespace var {
inline Var hbar() { return {VarKind::Hbar, 0}; }
inline Var s() { return {VarKind::S, 0}; }
inline Var y() { return {VarKind::Y, 0}; }
Var eps(int i);
Var p(int i);
Var q(int i);
Var chi(int i);
Var x(int i);
Var t(int i);
Var a(int i);
Var b(int i);
}  // namespace var

inline constexpr int kHbarSlot = 0;
inline constexpr int kSSlot = 1;

}  // namespace sqh
