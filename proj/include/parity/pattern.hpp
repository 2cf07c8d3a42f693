#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "parity/rule.hpp"

namespace parity {

// Wildcard neighbourhood pattern: one symbol per window cell, '*' matches
// either state. The centre cell is position radius (index 4 of 9 at radius 4).
struct TransitionPattern {
    std::string cells;  // over {'0','1','*'}, length 2r+1
    int output;
    std::string name;

    bool matches(std::uint32_t window) const;
    bool operator==(const TransitionPattern&) const = default;
};

// Two patterns demand different outputs for the same neighbourhood.
class rule_conflict_error : public std::runtime_error {
public:
    rule_conflict_error(std::uint32_t window, std::string first, std::string second,
                        unsigned window_bits);
    std::uint32_t window;
    std::string first;
    std::string second;
};

// Builds the complete table: a matched neighbourhood takes the pattern's
// output, an unmatched one keeps its centre bit. Overlapping patterns are
// legal only when output-consistent; disagreement throws rule_conflict_error.
// A pattern whose centre symbol equals its output can never change a cell;
// such patterns are reported through `warnings` (non-fatal) when provided.
LocalRule compile_patterns(const std::vector<TransitionPattern>& patterns, int radius,
                           std::vector<std::string>* warnings = nullptr);

// One pattern per line, "NNN...N -> b" with N in {0,1,*}; '#' starts a
// comment; blank lines are ignored. All patterns must share one length.
std::vector<TransitionPattern> parse_patterns(std::istream& in);
std::vector<TransitionPattern> load_pattern_file(const std::string& path);

// The built-in radius-4 parity rule, in both of its standard forms. The minimized
// form has 11 rows; the explicit form names the twelve active transitions
// T1..T12. Both compile to the same 512-entry table.
std::vector<TransitionPattern> bfo_minimized();
std::vector<TransitionPattern> bfo_explicit();
const LocalRule& bfo_rule();

}  // namespace parity
