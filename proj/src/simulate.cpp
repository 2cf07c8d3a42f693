#include "parity/simulate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "parity/parallel.hpp"

namespace parity {

const char* to_string(OutcomeTag tag) {
    switch (tag) {
        case OutcomeTag::Converged0: return "Converged0";
        case OutcomeTag::Converged1: return "Converged1";
        case OutcomeTag::Cycle: return "Cycle";
        case OutcomeTag::Budget: return "Budget";
    }
    return "?";
}

namespace {

// --- packed fast path -------------------------------------------------
//
// For lattices of at most 64 cells a configuration is one machine word whose
// numeric value equals Configuration::value(): cell i sits at bit (n-1-i).
// Sweeps enumerate configurations by incrementing the word.

std::uint64_t lattice_mask(std::size_t n) {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

inline int word_cell(std::uint64_t w, std::size_t n, std::size_t i) {
    return (w >> (n - 1 - i)) & 1u;
}

std::uint64_t step_word(const LocalRule& rule, std::uint64_t w, std::size_t n) {
    const unsigned width = rule.window_bits();
    const int r = rule.radius();
    const std::uint32_t window_mask = (1u << width) - 1;

    // rolling window centred at cell i, leftmost cell in the high bit
    std::uint32_t window = 0;
    for (unsigned j = 0; j < width; ++j) {
        long idx = (static_cast<long>(j) - r) % static_cast<long>(n);
        if (idx < 0) idx += static_cast<long>(n);
        window = (window << 1) |
                 static_cast<std::uint32_t>(word_cell(w, n, static_cast<std::size_t>(idx)));
    }

    std::uint64_t out = 0;
    std::size_t incoming = (r + 1) % n;  // cell entering the window for cell 1
    for (std::size_t i = 0;;) {
        out |= static_cast<std::uint64_t>(rule.output(window)) << (n - 1 - i);
        if (++i == n) break;
        window = ((window << 1) & window_mask) |
                 static_cast<std::uint32_t>(word_cell(w, n, incoming));
        if (++incoming == n) incoming = 0;
    }
    return out;
}

Configuration config_from_word(std::uint64_t w, std::size_t n) {
    return Configuration::from_value(w, n);
}

struct WordOutcome {
    OutcomeTag tag;
    std::uint64_t steps;
    std::uint64_t period;
    std::uint64_t witness;
};

// Convergence scan without cycle bookkeeping; a trajectory that exhausts the
// budget is replayed with full-state history to split Cycle from Budget. The
// replay walks the identical trajectory, so outcomes match a single recorded
// pass.
WordOutcome classify_word(const LocalRule& rule, std::uint64_t start, std::size_t n,
                          std::uint64_t max_steps) {
    const std::uint64_t ones = lattice_mask(n);
    const bool zero_fixed = rule.output(0) == 0;
    const bool one_fixed = rule.output(rule.table_size() - 1) == 1;

    std::uint64_t w = start;
    for (std::uint64_t t = 0;; ++t) {
        if (w == 0 && zero_fixed) return {OutcomeTag::Converged0, t, 0, w};
        if (w == ones && one_fixed) return {OutcomeTag::Converged1, t, 0, w};
        if (t == max_steps) break;
        w = step_word(rule, w, n);
    }

    // replay with full-state history; the first recurrence enters the loop at
    // its start, so steps - seen[state] is the minimal period
    std::unordered_map<std::uint64_t, std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(max_steps + 1, 1 << 16)));
    w = start;
    for (std::uint64_t t = 0;; ++t) {
        auto [it, inserted] = seen.emplace(w, t);
        if (!inserted) return {OutcomeTag::Cycle, t, t - it->second, w};
        if (t == max_steps) return {OutcomeTag::Budget, t, 0, w};
        w = step_word(rule, w, n);
    }
}

Outcome to_outcome(const WordOutcome& wo, std::size_t n) {
    return {wo.tag, wo.steps, wo.period, config_from_word(wo.witness, n)};
}

OutcomeTag expected_tag(int parity_bit) {
    return parity_bit ? OutcomeTag::Converged1 : OutcomeTag::Converged0;
}

}  // namespace

Configuration step(const LocalRule& rule, const Configuration& config) {
    std::size_t n = config.size();
    if (n <= 64) return config_from_word(step_word(rule, config.value(), n), n);

    const unsigned width = rule.window_bits();
    const int r = rule.radius();
    const std::uint32_t window_mask = (1u << width) - 1;

    std::uint32_t window = 0;
    for (unsigned j = 0; j < width; ++j)
        window = (window << 1) |
                 static_cast<std::uint32_t>(config.cell(static_cast<std::ptrdiff_t>(j) - r));

    Configuration out(n);
    std::size_t incoming = (r + 1) % n;
    for (std::size_t i = 0;;) {
        if (rule.output(window)) out.set(i, true);
        if (++i == n) break;
        window = ((window << 1) & window_mask) |
                 static_cast<std::uint32_t>(config.get(incoming));
        if (++incoming == n) incoming = 0;
    }
    return out;
}

Outcome classify(const LocalRule& rule, const Configuration& config, std::uint64_t max_steps) {
    if (max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");
    std::size_t n = config.size();
    if (n <= 64) return to_outcome(classify_word(rule, config.value(), n, max_steps), n);

    const bool zero_fixed = rule.output(0) == 0;
    const bool one_fixed = rule.output(rule.table_size() - 1) == 1;
    std::unordered_map<std::size_t, std::vector<std::pair<Configuration, std::uint64_t>>> seen;
    Configuration c = config;
    for (std::uint64_t t = 0;; ++t) {
        if (c.ones() == 0 && zero_fixed) return {OutcomeTag::Converged0, t, 0, c};
        if (c.ones() == n && one_fixed) return {OutcomeTag::Converged1, t, 0, c};
        auto& bucket = seen[c.hash()];
        for (const auto& [prev, at] : bucket)
            if (prev == c) return {OutcomeTag::Cycle, t, t - at, c};
        bucket.emplace_back(c, t);
        if (t == max_steps) return {OutcomeTag::Budget, t, 0, c};
        c = step(rule, c);
    }
}

VerifyReport verify_perfect(const LocalRule& rule, const std::vector<std::size_t>& sizes,
                            const VerifyOptions& opts) {
    for (std::size_t n : sizes) {
        if (n == 0) throw std::invalid_argument("lattice size must be at least 1");
        if (n % 2 == 0 && !opts.allow_even)
            throw std::invalid_argument(
                "even lattice size " + std::to_string(n) +
                ": the all-ones target cannot be reached, so the parity problem is ill-defined");
        if (n > 25)
            throw std::invalid_argument("exhaustive verification is limited to n <= 25");
    }

    struct ChunkResult {
        std::optional<std::uint64_t> first_failure;
        WordOutcome failure_outcome{};
        std::array<std::uint64_t, 4> counts{};
        std::uint64_t max_steps_seen = 0;
    };

    VerifyReport report;
    for (std::size_t n : sizes) {
        const std::uint64_t total = std::uint64_t{1} << n;
        const std::uint64_t budget = opts.budget.for_size(n);

        auto scan = [&rule, n, budget](std::uint64_t begin, std::uint64_t end) {
            ChunkResult res;
            for (std::uint64_t v = begin; v < end; ++v) {
                WordOutcome wo = classify_word(rule, v, n, budget);
                res.counts[static_cast<int>(wo.tag)]++;
                if (wo.steps > res.max_steps_seen) res.max_steps_seen = wo.steps;
                if (!res.first_failure &&
                    wo.tag != expected_tag(std::popcount(v) & 1)) {
                    res.first_failure = v;
                    res.failure_outcome = wo;
                }
            }
            return res;
        };

        auto chunks = sweep_collect<ChunkResult>(total, opts.jobs, scan);

        SizeReport sr;
        sr.size = n;
        sr.checked = total;
        sr.pass = true;
        for (const auto& chunk : chunks) {
            for (int i = 0; i < 4; ++i) sr.outcome_counts[i] += chunk.counts[i];
            sr.max_steps_seen = std::max(sr.max_steps_seen, chunk.max_steps_seen);
            if (sr.pass && chunk.first_failure) {
                sr.pass = false;
                sr.counterexample = Counterexample{
                    config_from_word(*chunk.first_failure, n),
                    to_outcome(chunk.failure_outcome, n)};
            }
        }
        report.all_pass = report.all_pass && sr.pass;
        report.sizes.push_back(std::move(sr));
    }
    return report;
}

std::string format_report_line(const SizeReport& report) {
    std::string line = "size=" + std::to_string(report.size) +
                       " checked=" + std::to_string(report.checked) +
                       " status=" + (report.pass ? "pass" : "fail");
    if (report.counterexample) {
        line += " counterexample=" + report.counterexample->config.str() +
                " outcome=" + to_string(report.counterexample->outcome.tag);
    }
    return line;
}

}  // namespace parity
