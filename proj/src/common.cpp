#include "vasun/common.hpp"

#include <algorithm>

namespace vasun {

Word word(std::string_view letters) {
  Word w;
  for (char c : letters) w.emplace_back(1, c);
  return w;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "ε";
  bool single = std::all_of(w.begin(), w.end(), [](const Symbol& s) { return s.size() == 1; });
  std::string out;
  for (const auto& s : w) {
    if (!single && !out.empty()) out += ' ';
    out += s;
  }
  return out;
}

}  // namespace vasun
