#include "parity/pattern.hpp"

#include <fstream>
#include <sstream>

namespace parity {

bool TransitionPattern::matches(std::uint32_t window) const {
    unsigned width = static_cast<unsigned>(cells.size());
    for (unsigned i = 0; i < width; ++i) {
        char sym = cells[i];
        if (sym == '*') continue;
        int bit = (window >> (width - 1 - i)) & 1u;
        if (bit != sym - '0') return false;
    }
    return true;
}

namespace {

std::string window_string(std::uint32_t window, unsigned bits) {
    std::string s(bits, '0');
    for (unsigned i = 0; i < bits; ++i)
        if ((window >> (bits - 1 - i)) & 1u) s[i] = '1';
    return s;
}

}  // namespace

rule_conflict_error::rule_conflict_error(std::uint32_t w, std::string a, std::string b,
                                         unsigned window_bits)
    : std::runtime_error("conflicting outputs for neighbourhood " +
                         window_string(w, window_bits) + ": " + a + " vs " + b),
      window(w),
      first(std::move(a)),
      second(std::move(b)) {}

LocalRule compile_patterns(const std::vector<TransitionPattern>& patterns, int radius,
                           std::vector<std::string>* warnings) {
    unsigned width = 2u * static_cast<unsigned>(radius) + 1u;
    for (const auto& p : patterns) {
        if (p.cells.size() != width)
            throw std::invalid_argument("pattern '" + p.name + "' has length " +
                                        std::to_string(p.cells.size()) + ", expected " +
                                        std::to_string(width));
        if (p.cells.find_first_not_of("01*") != std::string::npos)
            throw std::invalid_argument("pattern '" + p.name + "' has symbols outside {0,1,*}");
        if (p.output != 0 && p.output != 1)
            throw std::invalid_argument("pattern '" + p.name + "' output must be a bit");
        if (warnings && p.cells[radius] == static_cast<char>('0' + p.output))
            warnings->push_back("pattern '" + p.name + "' keeps its centre bit and can never fire");
    }

    std::size_t entries = std::size_t{1} << width;
    std::vector<std::uint8_t> table(entries);
    for (std::uint32_t w = 0; w < entries; ++w) {
        int out = LocalRule::centre_bit(w, radius);
        const TransitionPattern* matched = nullptr;
        for (const auto& p : patterns) {
            if (!p.matches(w)) continue;
            if (matched && matched->output != p.output)
                throw rule_conflict_error(w, matched->name, p.name, width);
            matched = &p;
            out = p.output;
        }
        table[w] = static_cast<std::uint8_t>(out);
    }
    return LocalRule(radius, std::move(table));
}

std::vector<TransitionPattern> parse_patterns(std::istream& in) {
    std::vector<TransitionPattern> patterns;
    std::string line;
    std::size_t lineno = 0;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string cells, arrow, out;
        if (!(fields >> cells)) continue;  // blank
        if (!(fields >> arrow >> out) || arrow != "->" || (out != "0" && out != "1"))
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected 'PATTERN -> bit'");
        std::string extra;
        if (fields >> extra)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing tokens");
        if (cells.find_first_not_of("01*") != std::string::npos)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": pattern symbols are {0,1,*}");
        if (width == 0)
            width = cells.size();
        else if (cells.size() != width)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": pattern length differs from previous lines");
        patterns.push_back({cells, out[0] - '0', "line " + std::to_string(lineno)});
    }
    if (patterns.empty()) throw std::invalid_argument("no patterns found");
    if (width % 2 == 0)
        throw std::invalid_argument("pattern length must be odd (2r+1)");
    return patterns;
}

std::vector<TransitionPattern> load_pattern_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open pattern file: " + path);
    return parse_patterns(in);
}

std::vector<TransitionPattern> bfo_minimized() {
    return {
        {"*11100***", 1, "M1"},
        {"11100****", 1, "M2"},
        {"*00100***", 1, "M3"},
        {"00100****", 1, "M4"},
        {"**010100*", 1, "M5"},
        {"11101****", 0, "M6"},
        {"*0101*0**", 0, "M7"},
        {"**0110***", 0, "M8"},
        {"***110110", 0, "M9"},
        {"***0110**", 0, "M10"},
        {"****1101*", 0, "M11"},
    };
}

std::vector<TransitionPattern> bfo_explicit() {
    return {
        {"*11100***", 1, "T1"},
        {"11100****", 1, "T2"},
        {"*00100***", 1, "T3"},
        {"00100****", 1, "T4"},
        {"***0110**", 0, "T5"},
        {"**0110***", 0, "T6"},
        {"**010100*", 1, "T7"},
        {"*010100**", 0, "T8"},
        {"***11101*", 0, "T9"},
        {"111010***", 0, "T10"},
        {"1110111**", 0, "T11"},
        {"**1110110", 0, "T12"},
    };
}

const LocalRule& bfo_rule() {
    static const LocalRule rule = compile_patterns(bfo_explicit(), 4);
    return rule;
}

}  // namespace parity
