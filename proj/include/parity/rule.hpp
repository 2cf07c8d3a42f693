#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace parity {

// Complete output table of a radius-r rule. A neighbourhood value encodes the
// 2r+1 window cells read left to right, leftmost cell in the most significant
// bit; the centre cell is bit r.
class LocalRule {
public:
    LocalRule(int radius, std::vector<std::uint8_t> table);

    // table(k) = centre bit of k, for every neighbourhood k.
    static LocalRule identity(int radius);

    int radius() const { return radius_; }
    unsigned window_bits() const { return 2u * static_cast<unsigned>(radius_) + 1u; }
    std::uint32_t table_size() const { return static_cast<std::uint32_t>(table_.size()); }

    int output(std::uint32_t window) const { return table_[window]; }

    static int centre_bit(std::uint32_t window, int radius) {
        return (window >> radius) & 1u;
    }

    // output differs from the centre bit
    bool active(std::uint32_t window) const {
        return table_[window] != centre_bit(window, radius_);
    }

    // table(all zeros) == 0 and table(all ones) == 1
    bool quiescent_consistent() const {
        return table_.front() == 0 && table_.back() == 1;
    }

    const std::vector<std::uint8_t>& table() const { return table_; }

    bool operator==(const LocalRule&) const = default;

private:
    int radius_;
    std::vector<std::uint8_t> table_;
};

// Rule numbers are arbitrary-precision non-negative integers carried as
// decimal digit strings: number = sum over k of table(k) * 2^k.
std::string wolfram_number(const LocalRule& rule);

// Inverse of wolfram_number. Throws std::out_of_range if the value needs
// more than 2^(2r+1) bits, std::invalid_argument on malformed digits.
LocalRule rule_from_number(const std::string& decimal, int radius);
LocalRule rule_from_number(std::uint64_t number, int radius);

}  // namespace parity
