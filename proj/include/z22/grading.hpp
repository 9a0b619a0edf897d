#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace z22 {

/// Degree (i,j) in (Z2)^2. Components are kept reduced mod 2.
struct Degree {
  std::uint8_t i = 0;
  std::uint8_t j = 0;

  constexpr Degree() = default;
  constexpr Degree(int i_, int j_)
      : i(static_cast<std::uint8_t>(((i_ % 2) + 2) % 2)),
        j(static_cast<std::uint8_t>(((j_ % 2) + 2) % 2)) {}

  friend constexpr bool operator==(Degree, Degree) = default;
  friend constexpr auto operator<=>(Degree, Degree) = default;

  /// Position in the canonical order (0,0),(0,1),(1,0),(1,1).
  constexpr int index() const { return 2 * i + j; }

  std::string str() const {
    return "(" + std::to_string(int(i)) + "," + std::to_string(int(j)) + ")";
  }
};

inline constexpr std::array<Degree, 4> kAllDegrees{Degree{0, 0}, Degree{0, 1},
                                                   Degree{1, 0}, Degree{1, 1}};

/// GF(2) dot product; only its parity enters signs.
constexpr int dot(Degree a, Degree b) { return (a.i * b.i + a.j * b.j) % 2; }

constexpr Degree add(Degree a, Degree b) { return Degree(a.i + b.i, a.j + b.j); }

constexpr Degree operator+(Degree a, Degree b) { return add(a, b); }

/// (-1)^{dot(a,b)} as an integer.
constexpr int sign(Degree a, Degree b) { return dot(a, b) == 0 ? 1 : -1; }

enum class BracketKind { Commutator, Anticommutator };

/// u o v = uv - (-1)^{g(u).g(v)} vu.
constexpr BracketKind bracket_kind(Degree a, Degree b) {
  return dot(a, b) == 0 ? BracketKind::Commutator : BracketKind::Anticommutator;
}

inline const char* to_string(BracketKind k) {
  return k == BracketKind::Commutator ? "commutator" : "anticommutator";
}

}  // namespace z22
