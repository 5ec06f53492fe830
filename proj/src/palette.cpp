#include "jep/palette.hpp"

#include <array>

namespace jep {

namespace {
constexpr std::array<const char*, 13> kNames = {
    "", "O0", "O1", "P'0", "P'1", "G0", "G1", "T1", "C1", "C2", "C3", "C4", "C5"};
}

std::string Palette::name(ColorId c) const {
  if (c == dummy && dummy != 0) return "DUMMY";
  if (c >= 1 && c <= 11) return kNames[c];
  if (c == color::kC5 && has_c5) return "C5";
  return "#" + std::to_string(c);
}

ColorId Palette::parse(const std::string& s) const {
  for (ColorId c = 1; c <= static_cast<ColorId>(size); ++c)
    if (name(c) == s) return c;
  return 0;
}

}  // namespace jep
