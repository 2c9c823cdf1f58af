#include "sl2calc/expr.hpp"

#include <cctype>

#include "sl2calc/rational.hpp"

namespace sl2calc {

namespace {

[[noreturn]] void parse_fail(const std::string& text, size_t pos, const std::string& why) {
  fail(Errc::parse_error,
       "cannot parse \"" + text + "\" at position " + std::to_string(pos) + ": " + why);
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

// Reads digits starting at pos; advances pos.
int read_int(const std::string& s, size_t& pos, const std::string& orig) {
  size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) parse_fail(orig, start, "expected a number");
  if (pos - start > 8) parse_fail(orig, start, "number too large");
  return std::stoi(s.substr(start, pos - start));
}

GroupKind group_from(const std::string& s, size_t& pos, const std::string& orig) {
  size_t start = pos;
  while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
  std::string word = s.substr(start, pos - start);
  int size = read_int(s, pos, orig);
  if (word == "GL") {
    if (size < 1) parse_fail(orig, start, "GL needs size >= 1");
    return gl(size);
  }
  if (word == "Sp") {
    if (size < 2 || size % 2 != 0) parse_fail(orig, start, "Sp takes an even size >= 2");
    return sp(size / 2);
  }
  if (word == "O") {
    if (size < 2 || size % 2 != 0)
      parse_fail(orig, start, "O takes an even size >= 2 (odd orthogonal groups are SO)");
    return o_even(size / 2);
  }
  if (word == "SO") {
    if (size < 3 || size % 2 != 1) parse_fail(orig, start, "SO takes an odd size >= 3");
    return so_odd((size - 1) / 2);
  }
  parse_fail(orig, start, "unknown group family \"" + word + "\" (GL, Sp, O, SO)");
}

}  // namespace

GroupKind parse_group(const std::string& text) {
  std::string s = strip_spaces(text);
  size_t pos = 0;
  GroupKind g = group_from(s, pos, text);
  if (pos != s.size()) parse_fail(text, pos, "trailing characters after the group name");
  return g;
}

SL2Type parse_type_expr(const std::string& text) {
  std::string s = strip_spaces(text);
  size_t pos = 0;
  GroupKind g = group_from(s, pos, text);
  if (pos >= s.size() || s[pos] != '[') parse_fail(text, pos, "expected '['");
  ++pos;
  std::vector<int> parts;
  while (true) {
    int part = read_int(s, pos, text);
    if (part < 1) parse_fail(text, pos, "parts must be positive");
    parts.push_back(part);
    if (pos >= s.size()) parse_fail(text, pos, "expected ',' or ']'");
    if (s[pos] == ',') {
      ++pos;
      continue;
    }
    if (s[pos] == ']') {
      ++pos;
      break;
    }
    parse_fail(text, pos, "expected ',' or ']'");
  }
  if (pos != s.size()) parse_fail(text, pos, "trailing characters after ']'");
  return SL2Type::make(g, Partition(std::move(parts)));
}

std::string render_type_expr(const SL2Type& t) { return t.to_string(); }

Rational parse_rational(const std::string& text) {
  std::string s = strip_spaces(text);
  if (s.empty()) fail(Errc::parse_error, "empty rational");
  size_t pos = 0;
  bool negative = false;
  if (s[pos] == '-' || s[pos] == '+') {
    negative = s[pos] == '-';
    ++pos;
  }
  long long num = read_int(s, pos, text);
  long long den = 1;
  if (pos < s.size()) {
    if (s[pos] != '/') fail(Errc::parse_error, "expected '/' in rational \"" + text + "\"");
    ++pos;
    den = read_int(s, pos, text);
    if (den == 0) fail(Errc::parse_error, "zero denominator in \"" + text + "\"");
    if (pos != s.size()) fail(Errc::parse_error, "trailing characters in \"" + text + "\"");
  }
  return Rational(negative ? -num : num, den);
}

}  // namespace sl2calc
