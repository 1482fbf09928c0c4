#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fcperm/permutation.hpp"

namespace fcperm {

struct ReducedWord;
struct Tableau;

// Permutation text: compact digits ("41627385", n <= 9) or comma separated
// ("4,1,6,2,7,3,8,5", any n). Surrounding whitespace is ignored.
Permutation parse_permutation(std::string_view text);
std::string format_permutation(const Permutation& w, bool compact = false);

// Word text: concatenated digits when every letter is <= 9, otherwise
// comma separated. The empty word is "" (or "e" on input).
std::vector<int> parse_letters(std::string_view text);
std::string format_letters(const std::vector<int>& letters);

// Tableau text: rows top to bottom joined by '/', entries by ','.
Tableau parse_tableau(std::string_view text);
std::string format_tableau(const Tableau& t);

std::string format_int_set(const std::vector<int>& values);

}  // namespace fcperm
