#include "permchar/cycle_notation.hpp"

#include <cctype>
#include <vector>

#include "permchar/error.hpp"

namespace permchar {
namespace {

bool is_separator(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0 || c == ','; }

Permutation cycle_permutation(const std::vector<Point>& cycle, std::size_t degree) {
  std::vector<Point> images(degree);
  for (Point i = 0; i < degree; ++i) images[i] = i;
  for (std::size_t k = 0; k < cycle.size(); ++k) images[cycle[k]] = cycle[(k + 1) % cycle.size()];
  return Permutation::from_images(std::move(images));
}

}  // namespace

Permutation perm_from_cycles(std::string_view text, std::size_t degree, std::size_t line) {
  if (degree == 0) throw Error(ErrorCode::ParseError, "degree must be at least 1", line);
  const std::string quoted = "'" + std::string(text) + "'";

  Permutation result = Permutation::identity(degree);
  bool saw_cycle = false;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && is_separator(text[pos])) ++pos;
  };

  skip();
  while (pos < text.size()) {
    if (text[pos] != '(') {
      throw Error(ErrorCode::ParseError, "expected '(' at column " + std::to_string(pos + 1) + " in " + quoted, line);
    }
    ++pos;
    std::vector<Point> cycle;
    std::vector<bool> used(degree, false);
    bool closed = false;
    while (pos < text.size()) {
      skip();
      if (pos >= text.size()) break;
      const char c = text[pos];
      if (c == ')') {
        ++pos;
        closed = true;
        break;
      }
      if (c == '(') throw Error(ErrorCode::ParseError, "unbalanced '(' in " + quoted, line);
      bool negative = false;
      if (c == '-' || c == '+') {
        negative = c == '-';
        ++pos;
      }
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw Error(ErrorCode::ParseError, "expected a point at column " + std::to_string(pos + 1) + " in " + quoted,
                    line);
      }
      std::size_t value = 0;
      bool huge = false;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > (std::size_t{1} << 32)) huge = true;
        ++pos;
      }
      if (pos < text.size() && !is_separator(text[pos]) && text[pos] != ')' && text[pos] != '(') {
        throw Error(ErrorCode::ParseError, "unexpected character '" + std::string(1, text[pos]) + "' in " + quoted,
                    line);
      }
      if (negative || value == 0) {
        throw Error(ErrorCode::NonPositivePoint, "points are numbered from 1 in " + quoted, line);
      }
      if (huge || value > degree) {
        throw Error(ErrorCode::PointOutOfRange,
                    "point " + (huge ? std::string("(huge)") : std::to_string(value)) + " exceeds degree " +
                        std::to_string(degree) + " in " + quoted,
                    line);
      }
      const auto point = static_cast<Point>(value - 1);
      if (used[point]) {
        throw Error(ErrorCode::RepeatedPoint, "point " + std::to_string(value) + " repeats within a cycle in " + quoted,
                    line);
      }
      used[point] = true;
      cycle.push_back(point);
    }
    if (!closed) throw Error(ErrorCode::ParseError, "missing ')' in " + quoted, line);
    saw_cycle = true;
    if (cycle.size() > 1) result = compose(result, cycle_permutation(cycle, degree));
    skip();
  }
  if (!saw_cycle) throw Error(ErrorCode::ParseError, "empty permutation text; write () for the identity", line);
  return result;
}

std::string to_cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i] || p(i) == i) continue;
    out += '(';
    for (Point j = i; !seen[j]; j = p(j)) {
      seen[j] = true;
      if (j != i) out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace permchar
