#include "parity/impossibility.hpp"

#include <algorithm>
#include <bit>

#include "parity/debruijn.hpp"
#include "parity/parallel.hpp"

namespace parity {

namespace {

std::string window_string(std::uint32_t window, unsigned bits) {
    std::string s(bits, '0');
    for (unsigned i = 0; i < bits; ++i)
        if ((window >> (bits - 1 - i)) & 1u) s[i] = '1';
    return s;
}

}  // namespace

infeasible_error::infeasible_error(std::uint32_t w, std::string first, std::string second,
                                   unsigned window_bits)
    : std::runtime_error("infeasible: neighbourhood " + window_string(w, window_bits) +
                         " forced both ways by [" + first + "] and [" + second + "]"),
      window(w),
      first_tag(std::move(first)),
      second_tag(std::move(second)) {}

escalation_error::escalation_error(const std::string& what) : std::runtime_error(what) {}

PartialRule::PartialRule(int radius) : radius_(radius) {
    if (radius < 0) throw std::invalid_argument("radius must be non-negative");
    std::size_t entries = std::size_t{1} << (2 * radius + 1);
    values_.assign(entries, -1);
    tags_.assign(entries, {});
}

void PartialRule::assign(std::uint32_t window, int bit, const std::string& tag) {
    if (window >= values_.size()) throw std::invalid_argument("window out of range");
    if (bit != 0 && bit != 1) throw std::invalid_argument("assignment must be a bit");
    if (values_[window] >= 0) {
        if (values_[window] != bit)
            throw infeasible_error(window, tags_[window], tag, 2 * radius_ + 1);
        return;  // repeat of an existing forcing keeps its first provenance
    }
    values_[window] = static_cast<std::int8_t>(bit);
    tags_[window] = tag;
}

std::vector<std::uint32_t> PartialRule::unassigned() const {
    std::vector<std::uint32_t> free;
    for (std::uint32_t w = 0; w < values_.size(); ++w)
        if (values_[w] < 0) free.push_back(w);
    return free;
}

LocalRule PartialRule::complete(std::uint64_t fill) const {
    std::vector<std::uint8_t> table(values_.size());
    std::size_t next_free = 0;
    for (std::uint32_t w = 0; w < values_.size(); ++w) {
        if (values_[w] >= 0) {
            table[w] = static_cast<std::uint8_t>(values_[w]);
        } else {
            table[w] = static_cast<std::uint8_t>((fill >> next_free) & 1u);
            ++next_free;
        }
    }
    if (next_free < 64 && (fill >> next_free) != 0)
        throw std::invalid_argument("fill bits beyond the unassigned windows");
    return LocalRule(radius_, std::move(table));
}

namespace {

// width-(2r+1) windows of a circular bit string
std::vector<std::uint32_t> cycle_windows(const std::string& config, int radius) {
    if (config.empty() || config.find_first_not_of("01") != std::string::npos)
        throw std::invalid_argument("cycle configurations are non-empty strings over {0,1}");
    std::size_t n = config.size();
    unsigned width = 2u * static_cast<unsigned>(radius) + 1u;
    std::vector<std::uint32_t> windows(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t w = 0;
        for (unsigned j = 0; j < width; ++j) {
            long raw = static_cast<long>(i) + static_cast<long>(j) - radius;
            long m = raw % static_cast<long>(n);
            if (m < 0) m += static_cast<long>(n);
            w = (w << 1) | static_cast<std::uint32_t>(config[static_cast<std::size_t>(m)] - '0');
        }
        windows[i] = w;
    }
    return windows;
}

OutcomeTag expected_tag(int parity_bit) {
    return parity_bit ? OutcomeTag::Converged1 : OutcomeTag::Converged0;
}

std::string mask_string(std::uint8_t mask, unsigned bits) {
    std::string s(bits, '0');
    for (unsigned i = 0; i < bits; ++i)
        if ((mask >> i) & 1u) s[i] = '1';
    return s;
}

// longest circular run of `bit` (0 for a homogeneous run of the other bit)
std::size_t max_circular_run(const Configuration& c, int bit) {
    std::size_t best = 0;
    for (const auto& run : block_decomposition(c).runs)
        if (run.bit == bit) best = std::max(best, run.length);
    return best;
}

// Pre-image of the target configuration containing a run of 4+ target cells
// at any length <= max_len (homogeneous pre-images excepted).
bool has_forbidden_run_preimage(const LocalRule& rule, int target, std::size_t max_len) {
    for (std::size_t m = 5; m <= max_len; ++m) {
        for (const Configuration& pre : preimage_necklaces(rule, target, m)) {
            if (pre.homogeneous()) continue;
            if (max_circular_run(pre, target) >= 4) return true;
        }
    }
    return false;
}

bool passes_cycle_filters(const LocalRule& rule) {
    DeBruijnGraph graph = build_debruijn(rule);
    if (find_even_length_odd_parity_cycle(graph, 0, 8)) return false;
    if (find_even_length_odd_parity_cycle(graph, 1, 8)) return false;
    if (has_forbidden_run_preimage(rule, 0, 11)) return false;
    if (has_forbidden_run_preimage(rule, 1, 11)) return false;
    return true;
}

constexpr std::uint32_t kSingleOneWindows[5] = {0b10000, 0b01000, 0b00100, 0b00010, 0b00001};
constexpr std::uint32_t kSingleZeroWindows[5] = {0b01111, 0b10111, 0b11011, 0b11101, 0b11110};

}  // namespace

std::optional<SizedCounterexample> find_first_failure(const LocalRule& rule,
                                                      const std::vector<std::size_t>& sizes,
                                                      unsigned budget_factor) {
    StepBudget budget{budget_factor, 0};
    for (std::size_t n : sizes) {
        const std::uint64_t total = std::uint64_t{1} << n;
        for (std::uint64_t v = 0; v < total; ++v) {
            Configuration c = Configuration::from_value(v, n);
            Outcome outcome = classify(rule, c, budget.for_size(n));
            if (outcome.tag != expected_tag(c.parity()))
                return SizedCounterexample{n, std::move(c), std::move(outcome)};
        }
    }
    return std::nullopt;
}

PartialRule radius1_forced() {
    PartialRule pr(1);
    pr.assign(0b000, 0, "quiescence");
    pr.assign(0b111, 1, "quiescence");
    // a lone 1 must grow while keeping parity odd, so all three windows fire
    pr.assign(0b100, 1, "single-1 growth");
    pr.assign(0b010, 1, "single-1 growth");
    pr.assign(0b001, 1, "single-1 growth");
    // symmetrically a lone 0 must be absorbed
    pr.assign(0b110, 0, "single-0 decay");
    pr.assign(0b101, 0, "single-0 decay");
    pr.assign(0b011, 0, "single-0 decay");
    return pr;
}

std::vector<CandidateReport> radius1_eliminate() {
    PartialRule forced = radius1_forced();
    LocalRule rule = forced.complete(0);  // fully determined
    CandidateReport report{rule, {}, find_first_failure(rule, {5, 7, 9})};
    return {std::move(report)};
}

PartialRule r2_forced_assignments(const R2Branch& branch) {
    if (std::popcount(branch.grow_to_one) != 3 && std::popcount(branch.grow_to_one) != 5)
        throw std::invalid_argument("parity forces 3 or 5 of the single-1 windows to grow");
    if ((branch.grow_to_one & ~0x1fu) != 0)
        throw std::invalid_argument("grow mask has five window bits");
    if (std::popcount(branch.decay_to_zero) != 3 && std::popcount(branch.decay_to_zero) != 5)
        throw std::invalid_argument("parity forces 3 or 5 of the single-0 windows to decay");
    if ((branch.decay_to_zero & ~0x1fu) != 0)
        throw std::invalid_argument("decay mask has five window bits");

    PartialRule pr(2);
    pr.assign(0b00000, 0, "quiescence");
    pr.assign(0b11111, 1, "quiescence");

    if (!branch.swap_alternating) {
        pr.assign(0b10101, 1, "alternation(10101->1)");
        pr.assign(0b01010, 0, "alternation(01010->0)");
    } else {
        pr.assign(0b10101, 0, "alternation(10101->0)");
        pr.assign(0b01010, 1, "alternation(01010->1)");
    }

    for (int i = 0; i < 5; ++i) {
        int bit = (branch.grow_to_one >> i) & 1;
        pr.assign(kSingleOneWindows[i], bit,
                  bit ? "single-1 growth set" : "single-1 growth complement");
    }
    for (int i = 0; i < 5; ++i) {
        int to_zero = (branch.decay_to_zero >> i) & 1;
        pr.assign(kSingleZeroWindows[i], to_zero ? 0 : 1,
                  to_zero ? "single-0 decay set" : "single-0 decay complement");
    }

    auto force_cycle = [&pr](const std::string& config, int target) {
        std::string tag = "pre-image cycle " + config + "->" + char('0' + target);
        for (std::uint32_t w : cycle_windows(config, 2)) pr.assign(w, target, tag);
    };
    force_cycle(branch.one_preimage_5, 1);
    force_cycle(branch.zero_preimage_5, 0);
    force_cycle(branch.one_preimage_7, 1);
    force_cycle(branch.zero_preimage_7, 0);
    return pr;
}

CycleTables r2_cycle_tables() {
    auto feasible = [](std::size_t length, int target) {
        std::vector<std::string> out;
        const std::uint64_t total = std::uint64_t{1} << length;
        for (std::uint64_t v = 0; v < total; ++v) {
            Configuration c = Configuration::from_value(v, length);
            if (c.canonical_rotation().value() != v) continue;  // necklace reps only
            if (c.parity() != target) continue;

            // a 4-run of the target bit contradicts growth from the inside
            if (max_circular_run(c, target) >= 4) continue;

            std::string s = c.str();
            std::vector<std::uint32_t> windows = cycle_windows(s, 2);
            // forcing the quiescent window to the opposite output is out
            std::uint32_t quiescent = target ? 0b00000 : 0b11111;
            if (std::find(windows.begin(), windows.end(), quiescent) != windows.end()) continue;

            // no even-length odd-parity cycle may ride on the forced windows
            bool bad = false;
            std::uint32_t member[32] = {};
            for (std::uint32_t w : windows) member[w] = 1;
            for (std::size_t len = 2; len <= 8 && !bad; len += 2) {
                const std::uint64_t sub_total = std::uint64_t{1} << len;
                for (std::uint64_t sub = 0; sub < sub_total && !bad; ++sub) {
                    if ((std::popcount(sub) & 1) == 0) continue;
                    std::string d = Configuration::from_value(sub, len).str();
                    bool inside = true;
                    for (std::uint32_t w : cycle_windows(d, 2))
                        if (!member[w]) { inside = false; break; }
                    bad = inside;
                }
            }
            if (bad) continue;
            out.push_back(std::move(s));
        }
        std::sort(out.begin(), out.end());
        return out;
    };

    CycleTables tables;
    tables.one_pre_5 = feasible(5, 1);
    tables.zero_pre_5 = feasible(5, 0);
    tables.one_pre_7 = feasible(7, 1);
    tables.zero_pre_7 = feasible(7, 0);
    return tables;
}

std::vector<CandidateReport> r2_enumerate_candidates(const R2Options& opts) {
    const std::vector<std::size_t> sizes =
        opts.prime_only ? std::vector<std::size_t>{3, 5, 7, 11, 13}
                        : std::vector<std::size_t>{3, 5, 7, 9, 11, 13};
    const std::vector<std::string> one5_choices =
        opts.prime_only ? std::vector<std::string>{"00001", "01011"}
                        : std::vector<std::string>{"00001"};
    const std::vector<std::string> zero5_choices =
        opts.prime_only ? std::vector<std::string>{"01111", "00101"}
                        : std::vector<std::string>{"01111"};
    const std::vector<std::pair<std::string, std::string>> seven_choices = {
        {"0000111", "0110011"},
        {"1001100", "0001111"},
    };

    std::vector<std::uint8_t> subset_masks;
    for (std::uint8_t mask = 0; mask < 32; ++mask)
        if (std::popcount(mask) == 3 || std::popcount(mask) == 5) subset_masks.push_back(mask);

    struct Survivor {
        LocalRule rule;
        std::vector<std::string> choicepath;
    };
    std::vector<Survivor> survivors;

    for (int swap = 0; swap < 2; ++swap) {
        for (std::uint8_t grow : subset_masks) {
            for (std::uint8_t decay : subset_masks) {
                for (const auto& one5 : one5_choices) {
                    for (const auto& zero5 : zero5_choices) {
                        for (const auto& [one7, zero7] : seven_choices) {
                            R2Branch branch{swap == 1, grow, decay, one5, zero5, one7, zero7};
                            PartialRule pr(2);
                            try {
                                pr = r2_forced_assignments(branch);
                            } catch (const infeasible_error&) {
                                continue;
                            }
                            const auto free = pr.unassigned();
                            const std::uint64_t fills = std::uint64_t{1} << free.size();
                            for (std::uint64_t fill = 0; fill < fills; ++fill) {
                                LocalRule rule = pr.complete(fill);
                                if (!passes_cycle_filters(rule)) continue;
                                std::vector<std::string> path = {
                                    std::string("alt=") +
                                        (branch.swap_alternating ? "10101->0" : "10101->1"),
                                    "grow=" + mask_string(grow, 5),
                                    "decay=" + mask_string(decay, 5),
                                    "pre5=" + one5 + "/" + zero5,
                                    "pre7=" + one7 + "/" + zero7,
                                    "fill=" + mask_string(static_cast<std::uint8_t>(fill),
                                                          static_cast<unsigned>(free.size())),
                                };
                                survivors.push_back({std::move(rule), std::move(path)});
                            }
                        }
                    }
                }
            }
        }
    }

    auto search = [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<CandidateReport> chunk;
        for (std::uint64_t i = begin; i < end; ++i) {
            chunk.push_back({survivors[i].rule, survivors[i].choicepath,
                             find_first_failure(survivors[i].rule, sizes)});
        }
        return chunk;
    };
    auto chunks = sweep_collect<std::vector<CandidateReport>>(survivors.size(), opts.jobs, search);

    std::vector<CandidateReport> reports;
    for (auto& chunk : chunks)
        for (auto& report : chunk) {
            if (!report.counterexample)
                throw escalation_error(
                    "candidate with no counterexample at the tested sizes: rule " +
                    wolfram_number(report.rule) + " contradicts the impossibility result");
            reports.push_back(std::move(report));
        }
    return reports;
}

std::string format_candidate_line(const CandidateReport& report) {
    std::string path;
    for (const auto& part : report.choicepath) {
        if (!path.empty()) path += ',';
        path += part;
    }
    if (path.empty()) path = "forced";
    std::string line = "choicepath=" + path + " rule=" + wolfram_number(report.rule);
    if (report.counterexample) {
        line += " counterexample_n=" + std::to_string(report.counterexample->size) +
                " config=" + report.counterexample->config.str() +
                " outcome=" + to_string(report.counterexample->outcome.tag);
    } else {
        line += " counterexample_n=none";
    }
    return line;
}

}  // namespace parity
