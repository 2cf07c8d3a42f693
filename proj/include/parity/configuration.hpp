#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace parity {

// A circular binary lattice. Cells are indexed 0..size()-1 and all index
// arithmetic wraps modulo the lattice size. Equality is positional: two
// configurations that differ by a rotation are distinct values.
class Configuration {
public:
    Configuration() = default;

    // All cells 0. Throws std::invalid_argument for n == 0.
    explicit Configuration(std::size_t n);

    // Text form: a string over {0,1}, index 0 leftmost.
    static Configuration from_string(std::string_view bits);

    // The configuration whose text form is the n-digit binary expansion of
    // `value` (cell 0 holds the most significant digit). Requires n <= 64.
    static Configuration from_value(std::uint64_t value, std::size_t n);

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool v);

    // Wrapped read: any integer index, reduced modulo size().
    int cell(std::ptrdiff_t i) const {
        std::ptrdiff_t n = static_cast<std::ptrdiff_t>(size_);
        std::ptrdiff_t m = i % n;
        if (m < 0) m += n;
        return get(static_cast<std::size_t>(m)) ? 1 : 0;
    }

    std::size_t ones() const;

    // 1 iff the number of 1-cells is odd.
    int parity() const;

    bool homogeneous() const;

    // Left rotation: cell i of the result is cell (i+k) mod n of *this.
    Configuration rotated(std::size_t k) const;

    // Lexicographically smallest rotation (necklace representative).
    Configuration canonical_rotation() const;

    // Inverse of from_value; requires size() <= 64.
    std::uint64_t value() const;

    std::string str() const;

    bool operator==(const Configuration&) const = default;

    std::size_t hash() const;

private:
    std::vector<std::uint64_t> words_;  // cell i at bit (i mod 64) of word i/64
    std::size_t size_ = 0;
};

// Maximal circular runs of equal cells. For a non-homogeneous configuration
// the first run is the one containing cell 0, extended left across the wrap,
// and adjacent runs (including last/first) carry distinct bits.
struct BlockDecomposition {
    struct Run {
        int bit;
        std::size_t length;
        bool operator==(const Run&) const = default;
    };
    std::vector<Run> runs;
    std::size_t block_count() const { return runs.size(); }
};

BlockDecomposition block_decomposition(const Configuration& c);

}  // namespace parity
