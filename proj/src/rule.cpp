#include "parity/rule.hpp"

#include <algorithm>
#include <stdexcept>

namespace parity {

namespace {

// Decimal-string arithmetic, enough for converting rule tables to and from
// their numbers (up to 2^512 at radius 4).

std::string decimal_double_add(const std::string& decimal, int add_bit) {
    std::string out;
    out.reserve(decimal.size() + 1);
    int carry = add_bit;
    for (auto it = decimal.rbegin(); it != decimal.rend(); ++it) {
        int d = (*it - '0') * 2 + carry;
        out.push_back(static_cast<char>('0' + d % 10));
        carry = d / 10;
    }
    if (carry) out.push_back(static_cast<char>('0' + carry));
    std::reverse(out.begin(), out.end());
    return out;
}

// Halves in place, returning the remainder bit.
int decimal_halve(std::string& decimal) {
    int rem = 0;
    for (char& ch : decimal) {
        int d = rem * 10 + (ch - '0');
        ch = static_cast<char>('0' + d / 2);
        rem = d % 2;
    }
    std::size_t nz = decimal.find_first_not_of('0');
    decimal = (nz == std::string::npos) ? "0" : decimal.substr(nz);
    return rem;
}

std::vector<std::uint8_t> table_from_decimal(const std::string& decimal, std::size_t entries) {
    if (decimal.empty() || decimal.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("rule number must be a decimal digit string");
    std::string work = decimal;
    std::size_t nz = work.find_first_not_of('0');
    work = (nz == std::string::npos) ? "0" : work.substr(nz);

    std::vector<std::uint8_t> table(entries, 0);
    for (std::size_t k = 0; k < entries && work != "0"; ++k)
        table[k] = static_cast<std::uint8_t>(decimal_halve(work));
    if (work != "0")
        throw std::out_of_range("rule number too large for radius");
    return table;
}

}  // namespace

LocalRule::LocalRule(int radius, std::vector<std::uint8_t> table)
    : radius_(radius), table_(std::move(table)) {
    if (radius_ < 0) throw std::invalid_argument("radius must be non-negative");
    if (radius_ > 12) throw std::invalid_argument("radius is limited to 12");
    if (table_.size() != (std::size_t{1} << (2 * radius_ + 1)))
        throw std::invalid_argument("rule table must have 2^(2r+1) entries");
    for (std::uint8_t b : table_)
        if (b > 1) throw std::invalid_argument("rule table entries are bits");
}

LocalRule LocalRule::identity(int radius) {
    std::vector<std::uint8_t> table(std::size_t{1} << (2 * radius + 1));
    for (std::uint32_t w = 0; w < table.size(); ++w)
        table[w] = static_cast<std::uint8_t>(centre_bit(w, radius));
    return LocalRule(radius, std::move(table));
}

std::string wolfram_number(const LocalRule& rule) {
    std::string number = "0";
    for (std::uint32_t k = rule.table_size(); k-- > 0;)
        number = decimal_double_add(number, rule.output(k));
    return number;
}

LocalRule rule_from_number(const std::string& decimal, int radius) {
    return LocalRule(radius, table_from_decimal(decimal, std::size_t{1} << (2 * radius + 1)));
}

LocalRule rule_from_number(std::uint64_t number, int radius) {
    return rule_from_number(std::to_string(number), radius);
}

}  // namespace parity
