#include "parity/configuration.hpp"

#include <bit>
#include <stdexcept>

namespace parity {

Configuration::Configuration(std::size_t n) : size_(n) {
    if (n == 0) throw std::invalid_argument("lattice size must be at least 1");
    words_.assign((n + 63) / 64, 0);
}

Configuration Configuration::from_string(std::string_view bits) {
    Configuration c(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        char ch = bits[i];
        if (ch != '0' && ch != '1')
            throw std::invalid_argument("configuration strings are over {0,1}");
        if (ch == '1') c.set(i, true);
    }
    return c;
}

Configuration Configuration::from_value(std::uint64_t value, std::size_t n) {
    if (n > 64) throw std::invalid_argument("from_value supports at most 64 cells");
    if (n < 64 && (value >> n) != 0)
        throw std::invalid_argument("value does not fit in the lattice");
    Configuration c(n);
    for (std::size_t i = 0; i < n; ++i)
        if ((value >> (n - 1 - i)) & 1u) c.set(i, true);
    return c;
}

void Configuration::set(std::size_t i, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
        words_[i >> 6] |= mask;
    else
        words_[i >> 6] &= ~mask;
}

std::size_t Configuration::ones() const {
    std::size_t count = 0;
    for (std::uint64_t w : words_) count += std::popcount(w);
    return count;
}

int Configuration::parity() const { return static_cast<int>(ones() & 1u); }

bool Configuration::homogeneous() const {
    return ones() == 0 || ones() == size_;
}

Configuration Configuration::rotated(std::size_t k) const {
    Configuration out(size_);
    k %= size_;
    for (std::size_t i = 0; i < size_; ++i) {
        std::size_t j = i + k;
        if (j >= size_) j -= size_;
        if (get(j)) out.set(i, true);
    }
    return out;
}

Configuration Configuration::canonical_rotation() const {
    Configuration best = *this;
    std::string best_str = str();
    for (std::size_t k = 1; k < size_; ++k) {
        Configuration r = rotated(k);
        std::string s = r.str();
        if (s < best_str) {
            best_str = std::move(s);
            best = std::move(r);
        }
    }
    return best;
}

std::uint64_t Configuration::value() const {
    if (size_ > 64) throw std::invalid_argument("value() supports at most 64 cells");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < size_; ++i)
        v = (v << 1) | static_cast<std::uint64_t>(get(i));
    return v;
}

std::string Configuration::str() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::size_t Configuration::hash() const {
    // FNV-1a over the packed words plus the size
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    mix(size_);
    for (std::uint64_t w : words_) mix(w);
    return static_cast<std::size_t>(h);
}

BlockDecomposition block_decomposition(const Configuration& c) {
    BlockDecomposition d;
    std::size_t n = c.size();
    if (c.homogeneous()) {
        d.runs.push_back({c.get(0) ? 1 : 0, n});
        return d;
    }
    // start of the run containing cell 0, extended left across the wrap
    std::size_t start = 0;
    while (c.cell(static_cast<std::ptrdiff_t>(start) - 1) == c.cell(0)) {
        start = (start + n - 1) % n;
    }
    std::size_t i = start;
    std::size_t consumed = 0;
    while (consumed < n) {
        int bit = c.cell(static_cast<std::ptrdiff_t>(i));
        std::size_t len = 0;
        while (consumed + len < n && c.cell(static_cast<std::ptrdiff_t>(i + len)) == bit) ++len;
        d.runs.push_back({bit, len});
        i = (i + len) % n;
        consumed += len;
    }
    return d;
}

}  // namespace parity
