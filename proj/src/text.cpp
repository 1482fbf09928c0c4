#include "fcperm/text.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "fcperm/errors.hpp"
#include "fcperm/rsk.hpp"

namespace fcperm {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_token(std::string_view token) {
  token = trim(token);
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw PreconditionError("bad token '" + std::string(token) + "'");
  }
  return value;
}

std::vector<int> split_ints(std::string_view text, char sep) {
  std::vector<int> out;
  std::size_t start = 0;
  for (;;) {
    const auto cut = text.find(sep, start);
    out.push_back(parse_token(text.substr(start, cut - start)));
    if (cut == std::string_view::npos) break;
    start = cut + 1;
  }
  return out;
}

std::vector<int> digits(std::string_view text) {
  std::vector<int> out;
  for (char c : text) {
    if (c < '0' || c > '9') throw PreconditionError("bad token '" + std::string(1, c) + "'");
    out.push_back(c - '0');
  }
  return out;
}

std::string join(const std::vector<int>& values, const char* sep) {
  std::string out;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j > 0) out += sep;
    out += std::to_string(values[j]);
  }
  return out;
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw PreconditionError("empty permutation text");
  if (text.find(',') != std::string_view::npos) return Permutation(split_ints(text, ','));
  if (text.size() > 9) {
    throw PreconditionError("compact permutation text is limited to degree 9; use commas");
  }
  return Permutation(digits(text));
}

std::string format_permutation(const Permutation& w, bool compact) {
  std::vector<int> image(w.one_line().begin(), w.one_line().end());
  if (compact && w.degree() <= 9) return join(image, "");
  return join(image, ",");
}

std::vector<int> parse_letters(std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "e") return {};
  if (text.find(',') != std::string_view::npos) return split_ints(text, ',');
  return digits(text);
}

std::string format_letters(const std::vector<int>& letters) {
  for (int a : letters) {
    if (a > 9) return join(letters, ",");
  }
  return join(letters, "");
}

Tableau parse_tableau(std::string_view text) {
  text = trim(text);
  Tableau t;
  if (text.empty()) return t;
  std::size_t start = 0;
  for (;;) {
    const auto cut = text.find('/', start);
    t.rows.push_back(split_ints(text.substr(start, cut - start), ','));
    if (cut == std::string_view::npos) break;
    start = cut + 1;
  }
  if (!t.is_valid()) throw PreconditionError("'" + std::string(text) + "' is not a tableau");
  return t;
}

std::string format_tableau(const Tableau& t) {
  std::string out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (r > 0) out += '/';
    out += join(t.rows[r], ",");
  }
  return out;
}

std::string format_int_set(const std::vector<int>& values) { return "{" + join(values, ",") + "}"; }

}  // namespace fcperm
