#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "parity/rule.hpp"
#include "parity/simulate.hpp"

namespace parity {

// Raised when two constraints force different outputs for one neighbourhood.
class infeasible_error : public std::runtime_error {
public:
    infeasible_error(std::uint32_t window, std::string first, std::string second,
                     unsigned window_bits);
    std::uint32_t window;
    std::string first_tag;
    std::string second_tag;
};

// Raised when a candidate survives its exhaustive counterexample search:
// that would overturn the impossibility result and must halt the pipeline.
class escalation_error : public std::runtime_error {
public:
    explicit escalation_error(const std::string& what);
};

// A rule table under construction. Every assignment carries a provenance tag
// naming the constraint or choice that forced it; assignments only grow, and
// contradictions raise infeasible_error with both tags.
class PartialRule {
public:
    explicit PartialRule(int radius);

    int radius() const { return radius_; }
    std::uint32_t table_size() const { return static_cast<std::uint32_t>(values_.size()); }

    void assign(std::uint32_t window, int bit, const std::string& tag);

    bool assigned(std::uint32_t window) const { return values_[window] >= 0; }
    int value(std::uint32_t window) const { return values_[window]; }
    const std::string& provenance(std::uint32_t window) const { return tags_[window]; }

    std::vector<std::uint32_t> unassigned() const;

    // Completes the table, filling unassigned windows in ascending order from
    // the low bits of `fill`.
    LocalRule complete(std::uint64_t fill) const;

private:
    int radius_;
    std::vector<std::int8_t> values_;  // -1 = unassigned
    std::vector<std::string> tags_;
};

struct SizedCounterexample {
    std::size_t size = 0;
    Configuration config;
    Outcome outcome;
};

struct CandidateReport {
    LocalRule rule;
    std::vector<std::string> choicepath;
    std::optional<SizedCounterexample> counterexample;
};

// First configuration (increasing size, then increasing value) that fails to
// converge to its own parity within factor*n^2 steps.
std::optional<SizedCounterexample> find_first_failure(const LocalRule& rule,
                                                      const std::vector<std::size_t>& sizes,
                                                      unsigned budget_factor = 8);

// Radius 1: quiescence plus the singleton growth/shrink forcings pin every
// table entry, leaving exactly one candidate (rule 150); the report attaches
// a counterexample found over odd sizes {5, 7, 9}.
PartialRule radius1_forced();
std::vector<CandidateReport> radius1_eliminate();

// One point in the radius-2 constraint space. The five-cell cycle strings are
// circular configurations whose windows are forced to the stated homogeneous
// target (any rotation is equivalent).
struct R2Branch {
    // false: f(10101)=1 and f(01010)=0; true: the swapped orientation.
    bool swap_alternating = false;
    // Masks over the five single-1 windows (10000,01000,00100,00010,00001)
    // and the five single-0 windows (01111,10111,11011,11101,11110), bit 0 =
    // first listed. Set bits go to 1 (growth) resp. 0 (decay); clear bits to
    // the opposite. Parity of the change forces an odd count: 3 or 5 bits.
    std::uint8_t grow_to_one = 0x1f;
    std::uint8_t decay_to_zero = 0x1f;
    std::string one_preimage_5 = "00001";   // length-5 pre-image of all 1s
    std::string zero_preimage_5 = "01111";  // length-5 pre-image of all 0s
    std::string one_preimage_7 = "0000111";
    std::string zero_preimage_7 = "0110011";
};

// Applies quiescence, the branch's subset choices, the alternating-window
// orientation, and the four chosen pre-image cycles. Throws infeasible_error
// when choices collide.
PartialRule r2_forced_assignments(const R2Branch& branch);

// The feasible pre-image cycles of the homogeneous configurations at lattice
// sizes 5 and 7, derived from first principles and canonicalized (smallest
// rotation, ascending).
struct CycleTables {
    std::vector<std::string> one_pre_5;
    std::vector<std::string> zero_pre_5;
    std::vector<std::string> one_pre_7;
    std::vector<std::string> zero_pre_7;
};
CycleTables r2_cycle_tables();

struct R2Options {
    bool prime_only = false;  // drop the size-9 test; admit the 01011/00101 five-cycles
    unsigned jobs = 0;        // 0 = hardware concurrency
};

// Enumerates every branch and every completion of the surviving partial
// rules, prunes completions that admit an even-length odd-parity
// monochromatic cycle (length <= 8) or a >=4-run pre-image (length <= 11),
// and attaches to each surviving candidate the first counterexample over the
// exhaustive odd sizes. Throws escalation_error if any candidate survives
// with no counterexample.
std::vector<CandidateReport> r2_enumerate_candidates(const R2Options& opts = {});

// "choicepath=<...> rule=<decimal> counterexample_n=<n> config=<bits> outcome=<tag>"
std::string format_candidate_line(const CandidateReport& report);

}  // namespace parity
