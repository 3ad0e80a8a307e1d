#include "permsimple/notation.hpp"

#include "permsimple/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace permsimple {

namespace {

bool is_separator(char c)
{
  return std::isspace(static_cast<unsigned char>(c)) || c == ',';
}

std::vector<int> parse_int_list(std::string_view text)
{
  std::vector<int> values;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_separator(text[i])) {
      ++i;
      continue;
    }
    int v = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc{} || ptr == text.data() + i)
      throw Error(Errc::parse_error, "unexpected character '" + std::string(1, text[i]) + "'");
    i = static_cast<std::size_t>(ptr - text.data());
    values.push_back(v);
  }
  return values;
}

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::string join(const std::vector<int> &v)
{
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

} // namespace

Permutation parse_one_line(std::string_view text)
{
  auto values = parse_int_list(text);
  if (values.empty())
    throw Error(Errc::empty_input, "no integers in one-line text");
  return Permutation(std::move(values));
}

std::string format_one_line(const Permutation &p)
{
  return join(std::vector<int>(p.word().begin(), p.word().end()));
}

std::vector<int> parse_cycle(std::string_view text)
{
  text = trim(text);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')')
      throw Error(Errc::parse_error, "unbalanced parenthesis");
    text = text.substr(1, text.size() - 2);
  }
  auto points = parse_int_list(text);
  if (points.empty())
    throw Error(Errc::empty_input, "empty cycle");
  return points;
}

Permutation parse_cycles(std::string_view text, std::optional<int> degree)
{
  text = trim(text);
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(')
      throw Error(Errc::parse_error, "expected '(' in cycle notation");
    const auto close = text.find(')', i);
    if (close == std::string_view::npos)
      throw Error(Errc::parse_error, "unbalanced parenthesis");
    auto c = parse_int_list(text.substr(i + 1, close - i - 1));
    if (!c.empty())
      cycles.push_back(std::move(c));
    i = close + 1;
  }
  if (text.empty())
    throw Error(Errc::empty_input, "no cycles");
  int top = 0;
  for (const auto &c : cycles)
    top = std::max(top, *std::max_element(c.begin(), c.end()));
  const int n = degree.value_or(top);
  if (n < 1)
    throw Error(Errc::empty_input, "identity needs an explicit degree");
  return Permutation::from_cycles(n, cycles);
}

std::string format_cycles(const CycleDecomposition &c)
{
  std::string out;
  for (const auto &cycle : c.cycles)
    out += "(" + join(cycle) + ")";
  return out.empty() ? "()" : out;
}

std::string format_cycles(const Permutation &p)
{
  return format_cycles(cycle_decomposition(p, false));
}

CoxeterWord parse_coxeter_word(std::string_view text, std::optional<int> degree)
{
  text = trim(text);
  if (text.empty())
    throw Error(Errc::empty_input, "empty Coxeter word");
  CoxeterWord w;
  if (text != "e") {
    std::size_t i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      if (text[i] != 'D' || i + 1 >= text.size() || text[i + 1] != '(')
        throw Error(Errc::parse_error, "expected D( in Coxeter word");
      const auto close = text.find(')', i);
      if (close == std::string_view::npos)
        throw Error(Errc::parse_error, "unbalanced parenthesis");
      const auto args = parse_int_list(text.substr(i + 2, close - i - 2));
      if (args.size() == 1)
        w.runs.push_back(Run{args[0], args[0]});
      else if (args.size() == 2)
        w.runs.push_back(Run{args[0], args[1]});
      else
        throw Error(Errc::parse_error, "D(...) takes one or two arguments");
      i = close + 1;
    }
  }
  int top = 0;
  for (const auto &r : w.runs)
    top = std::max(top, r.k);
  w.n = degree.value_or(top + 1);
  evaluate_word(w); // validates ranges and run order
  return w;
}

std::string format_coxeter_word(const CoxeterWord &w)
{
  if (w.runs.empty())
    return "e";
  std::string out;
  for (const auto &r : w.runs)
    out += "D(" + std::to_string(r.k) + "," + std::to_string(r.j) + ")";
  return out;
}

Permutation parse_permutation(std::string_view text, InputFormat format, std::optional<int> degree)
{
  const auto body = trim(text);
  if (body.empty())
    throw Error(Errc::empty_input, "empty permutation text");
  if (format == InputFormat::automatic) {
    if (body.front() == '(')
      format = InputFormat::cycles;
    else if (body.front() == 'D' || body == "e")
      format = InputFormat::coxeter;
    else
      format = InputFormat::one_line;
  }
  switch (format) {
  case InputFormat::cycles:
    return parse_cycles(body, degree);
  case InputFormat::coxeter:
    return evaluate_word(parse_coxeter_word(body, degree));
  default: {
    auto p = parse_one_line(body);
    if (degree && *degree != p.degree())
      throw Error(Errc::degree_mismatch, "one-line word has degree " + std::to_string(p.degree()));
    return p;
  }
  }
}

} // namespace permsimple
