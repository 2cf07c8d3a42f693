#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parity/configuration.hpp"
#include "parity/rule.hpp"

namespace parity {

enum class OutcomeTag { Converged0, Converged1, Cycle, Budget };

const char* to_string(OutcomeTag tag);

// Result of iterating a rule from one configuration.
//  - Converged0/Converged1: a homogeneous fixed point was reached at `steps`.
//  - Cycle: a previously seen configuration recurred at `steps`; `period` is
//    the minimal period of the loop entered and `witness` lies on the loop.
//  - Budget: neither happened within max_steps. Not an error.
struct Outcome {
    OutcomeTag tag = OutcomeTag::Budget;
    std::uint64_t steps = 0;
    std::uint64_t period = 0;
    Configuration witness;

    bool converged() const {
        return tag == OutcomeTag::Converged0 || tag == OutcomeTag::Converged1;
    }
};

// One synchronous application of the global rule. The lattice may be smaller
// than the window; wrapped reads then visit a cell more than once.
Configuration step(const LocalRule& rule, const Configuration& config);

Outcome classify(const LocalRule& rule, const Configuration& config, std::uint64_t max_steps);

// Step budget for sweeps: factor * n^2 per lattice size, or a fixed count.
struct StepBudget {
    unsigned factor = 8;
    std::uint64_t fixed = 0;
    std::uint64_t for_size(std::size_t n) const {
        return fixed ? fixed : static_cast<std::uint64_t>(factor) * n * n;
    }
};

struct Counterexample {
    Configuration config;
    Outcome outcome;
};

struct SizeReport {
    std::size_t size = 0;
    std::uint64_t checked = 0;
    bool pass = false;
    std::optional<Counterexample> counterexample;  // first in value order
    // sweep statistics
    std::array<std::uint64_t, 4> outcome_counts{};  // indexed by OutcomeTag
    std::uint64_t max_steps_seen = 0;
};

struct VerifyReport {
    std::vector<SizeReport> sizes;
    bool all_pass = true;
};

struct VerifyOptions {
    StepBudget budget;
    unsigned jobs = 0;        // 0 = hardware concurrency
    bool allow_even = false;  // diagnostic mode only
};

// Exhaustively classifies all 2^n configurations for each size. A size passes
// iff every configuration converges to its own parity. Even sizes are
// rejected (the target is unreachable by definition) unless allow_even.
VerifyReport verify_perfect(const LocalRule& rule, const std::vector<std::size_t>& sizes,
                            const VerifyOptions& opts = {});

// "size=<n> checked=<2^n> status=pass|fail [counterexample=<bits> outcome=<tag>]"
std::string format_report_line(const SizeReport& report);

}  // namespace parity
