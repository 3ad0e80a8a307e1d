#ifndef PERMSIMPLE_NOTATION_HPP
#define PERMSIMPLE_NOTATION_HPP

#include "permsimple/coxeter.hpp"
#include "permsimple/permutation.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace permsimple {

// Text formats. Each printer is the exact inverse of its parser:
//   one-line  "4 1 6 2 5 3"
//   cycles    "(4 2 1)(6 3)"          identity prints as "()"
//   D-word    "D(3,1)D(4,4)D(5,3)"    identity prints as "e"

/// Whitespace- and/or comma-separated integers.
Permutation parse_one_line(std::string_view text);
std::string format_one_line(const Permutation &p);

/// Degree defaults to the largest point mentioned.
Permutation parse_cycles(std::string_view text, std::optional<int> degree = std::nullopt);
std::string format_cycles(const Permutation &p);
std::string format_cycles(const CycleDecomposition &c);

/// Accepts D(k,j) and the short form D(k); degree defaults to max k + 1.
CoxeterWord parse_coxeter_word(std::string_view text, std::optional<int> degree = std::nullopt);
std::string format_coxeter_word(const CoxeterWord &w);

/// Parses a single cycle "(6 1 4 2 5)" or "6 1 4 2 5" into its point list.
std::vector<int> parse_cycle(std::string_view text);

enum class InputFormat { automatic, one_line, cycles, coxeter };

/// Auto-detection looks at the first non-blank character: '(' for cycles,
/// 'D' or 'e' for a Coxeter word, otherwise one-line.
Permutation parse_permutation(std::string_view text, InputFormat format = InputFormat::automatic,
                              std::optional<int> degree = std::nullopt);

} // namespace permsimple

#endif
