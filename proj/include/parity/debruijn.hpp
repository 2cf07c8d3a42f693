#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "parity/configuration.hpp"
#include "parity/rule.hpp"

namespace parity {

// De Bruijn graph of a rule: one node per 2r-bit window, one edge per
// (2r+1)-bit window. The edge for window w runs from node (w >> 1) to node
// (w & node mask); every node has in- and out-degree 2. Edges carry the
// rule's output and an active flag (output != centre bit). The subgraphs
// B0/B1 (edges with output 0/1) partition the edge set.
struct DeBruijnGraph {
    int radius = 0;
    std::uint32_t node_count = 0;       // 2^(2r)
    std::vector<std::uint8_t> output;   // indexed by window value
    std::vector<std::uint8_t> active;   // indexed by window value

    std::uint32_t edge_count() const { return static_cast<std::uint32_t>(output.size()); }
    std::uint32_t edge_from(std::uint32_t window) const { return window >> 1; }
    std::uint32_t edge_to(std::uint32_t window) const { return window & (node_count - 1); }
    // The two windows leaving `node` are (node << 1) | b for b in {0, 1}.
    std::uint32_t edge_window(std::uint32_t node, int appended_bit) const {
        return (node << 1) | static_cast<std::uint32_t>(appended_bit);
    }
    std::string node_name(std::uint32_t node) const;  // 2r-character bit string
};

DeBruijnGraph build_debruijn(const LocalRule& rule);

// Edge list export, one line per edge: "u v output active" with bit-string
// node names.
void write_edge_list(const DeBruijnGraph& graph, std::ostream& out);

// A closed walk: nodes[i] -> nodes[i+1] are edges of the graph, and the last
// node connects back to the first. `weight` counts the edges with the
// property at stake (active edges, or the appended configuration bits,
// depending on the producing operation).
struct CycleWitness {
    std::vector<std::uint32_t> nodes;
    std::uint64_t weight = 0;
    std::size_t length() const { return nodes.size(); }
};

// The circular configuration traced by a closed walk (one appended bit per
// step). For walks in B_t it is a pre-image of the homogeneous t-config.
Configuration walk_config(const CycleWitness& walk);

struct CertifyResult {
    bool certified = false;
    // Node potential with active(u->v) == potential[u] ^ potential[v] on
    // every edge; present iff certified. Its existence makes every closed
    // walk's active weight even, so every step preserves parity.
    std::vector<std::uint8_t> potential;
    // Odd active-weight closed walk; present iff refuted.
    std::optional<CycleWitness> witness;
};

// Decides whether every closed walk has even active weight, via a GF(2)
// reachability search over (node, accumulated parity) states.
CertifyResult certify_pairwise_parity(const DeBruijnGraph& graph);

// All length-n configurations, up to rotation (lexicographically smallest
// representative, ascending), whose every window outputs `target`;
// equivalently the closed walks of length n inside B_target.
std::vector<Configuration> preimage_necklaces(const LocalRule& rule, int target,
                                              std::size_t length);

// Searches B_target for a closed walk of even length <= max_length whose
// configuration has odd parity. Such a walk disqualifies the rule from
// solving the parity problem. Deterministic: smallest length first, then
// smallest configuration value. The returned weight counts the 1-bits of the
// configuration.
std::optional<CycleWitness> find_even_length_odd_parity_cycle(const DeBruijnGraph& graph,
                                                              int target,
                                                              std::size_t max_length);

}  // namespace parity
