#include "ulrich/parse.hpp"

#include <cctype>
#include <charconv>

namespace ulrich {

std::string VarietySpec::to_string() const {
  return type.to_string() + "/P" + std::to_string(k);
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_spaces() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }

  // Unsigned decimal integer.
  std::int64_t integer(const char* what) {
    skip_spaces();
    std::int64_t value = 0;
    const auto start = pos;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == text.data() + pos)
      throw ParseError(std::string("expected ") + what, start);
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  }
};

}  // namespace

VarietySpec parse_variety(std::string_view text) {
  Cursor c{text};
  c.skip_spaces();
  if (c.done()) throw ParseError("expected series letter A..G", c.pos);
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(c.peek())));
  if (letter < 'A' || letter > 'G')
    throw ParseError(std::string("unknown series '") + c.peek() + "'", c.pos);
  const std::size_t series_pos = c.pos;
  ++c.pos;
  const std::int64_t rank = c.integer("rank");
  DynkinType type = [&] {
    try {
      return DynkinType(static_cast<Series>(letter), static_cast<int>(rank));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), series_pos);
    }
  }();
  c.skip_spaces();
  if (c.done() || c.peek() != '/') throw ParseError("expected '/P<node>'", c.pos);
  ++c.pos;
  c.skip_spaces();
  if (c.done() || std::toupper(static_cast<unsigned char>(c.peek())) != 'P')
    throw ParseError("expected '/P<node>'", c.pos);
  ++c.pos;
  const std::size_t node_pos = c.pos;
  const std::int64_t k = c.integer("node index");
  if (k < 1 || k > rank)
    throw ParseError("node index " + std::to_string(k) + " exceeds rank " +
                         std::to_string(rank),
                     node_pos);
  c.skip_spaces();
  if (!c.done()) throw ParseError("unexpected trailing input", c.pos);
  return VarietySpec{type, static_cast<int>(k)};
}

Weight parse_weight(std::string_view text, int rank) {
  Weight w = Weight::zero(rank);
  Cursor c{text};
  c.skip_spaces();
  // A lone "0" names the zero weight; it is what weight_to_expr prints for it.
  if (!c.done() && c.peek() == '0') {
    const std::size_t mark = c.pos;
    ++c.pos;
    c.skip_spaces();
    if (c.done()) return w;
    c.pos = mark;
  }
  bool first = true;
  while (!c.done()) {
    std::int64_t sign = 1;
    c.skip_spaces();
    if (!first || c.peek() == '+' || c.peek() == '-') {
      if (c.done() || (c.peek() != '+' && c.peek() != '-'))
        throw ParseError("expected '+' or '-'", c.pos);
      sign = c.peek() == '-' ? -1 : 1;
      ++c.pos;
    }
    c.skip_spaces();
    std::int64_t coeff = 1;
    if (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())))
      coeff = c.integer("coefficient");
    c.skip_spaces();
    if (c.done() || (c.peek() != 'w' && c.peek() != 'W'))
      throw ParseError("expected 'w<index>'", c.pos);
    ++c.pos;
    const std::size_t idx_pos = c.pos;
    const std::int64_t idx = c.integer("weight index");
    if (idx < 1 || idx > rank)
      throw ParseError("node index " + std::to_string(idx) + " exceeds rank " +
                           std::to_string(rank),
                       idx_pos);
    w[static_cast<int>(idx) - 1] += sign * coeff;
    first = false;
    c.skip_spaces();
  }
  return w;
}

std::string weight_to_expr(const Weight& w) {
  std::string out;
  for (int j = 0; j < w.rank(); ++j) {
    const std::int64_t c = w[j];
    if (c == 0) continue;
    if (c > 0 && !out.empty()) out += "+";
    if (c == -1)
      out += "-";
    else if (c != 1)
      out += std::to_string(c);
    out += "w" + std::to_string(j + 1);
  }
  return out.empty() ? "0" : out;
}

}  // namespace ulrich
