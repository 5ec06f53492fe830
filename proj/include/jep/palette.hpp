#pragma once

#include <string>

#include "jep/graph.hpp"

namespace jep {

// Color ids shared by every stage. P^i = O^i u P'^i is never stored.
namespace color {
inline constexpr ColorId kO0 = 1;
inline constexpr ColorId kO1 = 2;
inline constexpr ColorId kPp0 = 3;  // P'^0
inline constexpr ColorId kPp1 = 4;
inline constexpr ColorId kG0 = 5;
inline constexpr ColorId kG1 = 6;
inline constexpr ColorId kT1 = 7;
inline constexpr ColorId kC1 = 8;
inline constexpr ColorId kC2 = 9;
inline constexpr ColorId kC3 = 10;
inline constexpr ColorId kC4 = 11;
inline constexpr ColorId kC5 = 12;  // only in the homomorphism stage

constexpr ColorId O(int i) { return i == 0 ? kO0 : kO1; }
constexpr ColorId Pp(int i) { return i == 0 ? kPp0 : kPp1; }
constexpr ColorId G(int i) { return i == 0 ? kG0 : kG1; }
constexpr ColorSet P(int i) { return ColorSet{O(i), Pp(i)}; }
}  // namespace color

struct Palette {
  int size = 11;
  ColorId dummy = 0;  // 0: no dummy color
  bool has_c5 = false;

  std::string name(ColorId c) const;
  /// Inverse of name(); 0 when unknown.
  ColorId parse(const std::string& name) const;
};

inline constexpr Palette kUnaryPalette{11, 0, false};
inline constexpr Palette kPurePalette{12, 12, false};
inline constexpr Palette kJhpPalette{13, 13, true};

}  // namespace jep
