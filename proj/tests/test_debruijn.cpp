#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "parity/debruijn.hpp"
#include "parity/pattern.hpp"
#include "parity/simulate.hpp"

using namespace parity;

namespace {

// exhaustive single-step parity conservation, the certificate's ground truth
bool parity_preserved_up_to(const LocalRule& rule, std::size_t max_n) {
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            Configuration c = Configuration::from_value(v, n);
            if (step(rule, c).parity() != c.parity()) return false;
        }
    }
    return true;
}

// pre-images of the homogeneous target via the global step, the graph-free route
std::set<std::string> brute_preimages(const LocalRule& rule, int target, std::size_t n) {
    Configuration homogeneous(n);
    if (target) {
        for (std::size_t i = 0; i < n; ++i) homogeneous.set(i, true);
    }
    std::set<std::string> out;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        Configuration c = Configuration::from_value(v, n);
        if (step(rule, c) == homogeneous) out.insert(c.canonical_rotation().str());
    }
    return out;
}

std::uint64_t rewalk_active_weight(const DeBruijnGraph& graph, const CycleWitness& walk) {
    std::uint64_t weight = 0;
    for (std::size_t i = 0; i < walk.nodes.size(); ++i) {
        std::uint32_t from = walk.nodes[i];
        std::uint32_t to = walk.nodes[(i + 1) % walk.nodes.size()];
        // consecutive nodes must overlap on 2r-1 cells
        REQUIRE((((from << 1) & (graph.node_count - 1)) | (to & 1u)) == to);
        weight += graph.active[graph.edge_window(from, to & 1)];
    }
    return weight;
}

}  // namespace

TEST_CASE("the radius-1 graph has four nodes with xor edge labels") {
    LocalRule rule = rule_from_number(std::uint64_t{150}, 1);
    DeBruijnGraph g = build_debruijn(rule);
    CHECK(g.node_count == 4);
    CHECK(g.edge_count() == 8);
    std::vector<int> out_degree(4, 0), in_degree(4, 0);
    for (std::uint32_t w = 0; w < 8; ++w) {
        out_degree[g.edge_from(w)]++;
        in_degree[g.edge_to(w)]++;
        int xor_label = ((w >> 2) ^ (w >> 1) ^ w) & 1;
        CHECK(g.output[w] == xor_label);
    }
    for (int d : out_degree) CHECK(d == 2);
    for (int d : in_degree) CHECK(d == 2);
}

TEST_CASE("the identity rule has no active edges") {
    DeBruijnGraph g = build_debruijn(LocalRule::identity(1));
    for (std::uint32_t w = 0; w < g.edge_count(); ++w) CHECK(g.active[w] == 0);
}

TEST_CASE("the radius-4 graph marks exactly the pattern-matched edges active") {
    DeBruijnGraph g = build_debruijn(bfo_rule());
    CHECK(g.node_count == 256);
    CHECK(g.edge_count() == 512);
    auto patterns = bfo_explicit();
    for (std::uint32_t w = 0; w < 512; ++w) {
        bool matched = std::any_of(patterns.begin(), patterns.end(),
                                   [&](const TransitionPattern& p) { return p.matches(w); });
        CHECK(bool(g.active[w]) == matched);
    }
}

TEST_CASE("edge list export is line-per-window") {
    std::ostringstream out;
    write_edge_list(build_debruijn(rule_from_number(std::uint64_t{150}, 1)), out);
    std::istringstream in(out.str());
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    REQUIRE(lines.size() == 8);
    CHECK(lines[0] == "00 00 0 0");
    CHECK(lines[1] == "00 01 1 1");  // window 001 outputs 1, flipping centre 0
    CHECK(lines[7] == "11 11 1 0");
}

TEST_CASE("the radius-4 rule is certified parity preserving") {
    DeBruijnGraph g = build_debruijn(bfo_rule());
    CertifyResult result = certify_pairwise_parity(g);
    REQUIRE(result.certified);
    REQUIRE(result.potential.size() == 256);
    for (std::uint32_t w = 0; w < g.edge_count(); ++w) {
        CHECK((result.potential[g.edge_from(w)] ^ result.potential[g.edge_to(w)]) ==
              g.active[w]);
    }
}

TEST_CASE("the identity rule is certified with the zero potential") {
    CertifyResult result = certify_pairwise_parity(build_debruijn(LocalRule::identity(2)));
    REQUIRE(result.certified);
    for (auto p : result.potential) CHECK(p == 0);
}

TEST_CASE("the neighbour-or rule is refuted with an odd walk") {
    LocalRule rule = rule_from_number(std::uint64_t{254}, 1);  // or of the window
    DeBruijnGraph g = build_debruijn(rule);
    CertifyResult result = certify_pairwise_parity(g);
    REQUIRE(!result.certified);
    REQUIRE(result.witness.has_value());
    CHECK(rewalk_active_weight(g, *result.witness) % 2 == 1);
    CHECK(result.witness->weight == rewalk_active_weight(g, *result.witness));
    // and indeed some configuration changes parity under this rule
    CHECK(!parity_preserved_up_to(rule, 7));
}

TEST_CASE("certification is sound against brute force for all elementary rules") {
    int certified_count = 0;
    for (std::uint64_t number = 0; number < 256; ++number) {
        LocalRule rule = rule_from_number(number, 1);
        DeBruijnGraph g = build_debruijn(rule);
        CertifyResult result = certify_pairwise_parity(g);
        if (result.certified) {
            ++certified_count;
            CHECK(parity_preserved_up_to(rule, 11));
        } else {
            CHECK(rewalk_active_weight(g, *result.witness) % 2 == 1);
        }
    }
    // the certified family includes at least the identity and rule 150
    CHECK(certified_count >= 2);
}

TEST_CASE("pre-image necklaces match the global-step brute force") {
    std::mt19937_64 rng(424242);
    std::vector<std::uint8_t> random_table(32);
    for (auto& bit : random_table) bit = static_cast<std::uint8_t>(rng() & 1u);
    std::vector<LocalRule> rules = {bfo_rule(), rule_from_number(std::uint64_t{150}, 1),
                                    LocalRule(2, random_table)};
    for (const auto& rule : rules) {
        for (std::size_t n = 1; n <= 10; ++n) {
            for (int target : {0, 1}) {
                std::set<std::string> got;
                for (const auto& c : preimage_necklaces(rule, target, n))
                    got.insert(c.str());
                CHECK(got == brute_preimages(rule, target, n));
            }
        }
    }
}

TEST_CASE("quiescent rules keep the homogeneous pre-images") {
    auto ones = preimage_necklaces(bfo_rule(), 1, 9);
    CHECK(std::any_of(ones.begin(), ones.end(),
                      [](const Configuration& c) { return c.str() == "111111111"; }));
    for (std::size_t n : {1u, 4u, 9u}) {
        auto zeros = preimage_necklaces(bfo_rule(), 0, n);
        CHECK(std::any_of(zeros.begin(), zeros.end(),
                          [n](const Configuration& c) { return c.str() == std::string(n, '0'); }));
    }
}

TEST_CASE("results come back as sorted canonical representatives") {
    auto list = preimage_necklaces(bfo_rule(), 0, 11);
    for (const auto& c : list) CHECK(c.canonical_rotation() == c);
    CHECK(std::is_sorted(list.begin(), list.end(), [](const auto& a, const auto& b) {
        return a.str() < b.str();
    }));
}

TEST_CASE("equal outputs on the alternating windows admit an odd two-walk") {
    // force windows 10101 and 01010 into the same output subgraph
    std::vector<std::uint8_t> table = LocalRule::identity(2).table();
    table[0b10101] = 1;
    table[0b01010] = 1;
    LocalRule rule(2, table);
    auto witness = find_even_length_odd_parity_cycle(build_debruijn(rule), 1, 6);
    REQUIRE(witness.has_value());
    CHECK(witness->length() == 2);
    CHECK(witness->weight == 1);
    CHECK(witness->nodes == std::vector<std::uint32_t>{0b0101, 0b1010});
    Configuration traced = walk_config(*witness);
    CHECK(traced.size() == 2);
    CHECK(traced.parity() == 1);
}

TEST_CASE("identity-like output subgraphs admit no odd even-length walk") {
    // identity pre-images of 1 are all-1 configurations, whose even lengths
    // have even parity
    DeBruijnGraph g = build_debruijn(LocalRule::identity(1));
    CHECK(!find_even_length_odd_parity_cycle(g, 1, 8).has_value());
    CHECK(!find_even_length_odd_parity_cycle(g, 0, 8).has_value());
}

TEST_CASE("the neighbour-or rule admits the lone-1 two-walk") {
    DeBruijnGraph g = build_debruijn(rule_from_number(std::uint64_t{254}, 1));
    auto witness = find_even_length_odd_parity_cycle(g, 1, 8);
    REQUIRE(witness.has_value());
    CHECK(witness->length() == 2);
    CHECK(walk_config(*witness).str() == "10");
}

TEST_CASE("the radius-4 rule admits no disqualifying walk up to length 10") {
    DeBruijnGraph g = build_debruijn(bfo_rule());
    CHECK(!find_even_length_odd_parity_cycle(g, 0, 10).has_value());
    CHECK(!find_even_length_odd_parity_cycle(g, 1, 10).has_value());
}
