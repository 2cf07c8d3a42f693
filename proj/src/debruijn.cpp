#include "parity/debruijn.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <ostream>
#include <stdexcept>

namespace parity {

std::string DeBruijnGraph::node_name(std::uint32_t node) const {
    unsigned bits = 2u * static_cast<unsigned>(radius);
    std::string s(bits, '0');
    for (unsigned i = 0; i < bits; ++i)
        if ((node >> (bits - 1 - i)) & 1u) s[i] = '1';
    return s;
}

DeBruijnGraph build_debruijn(const LocalRule& rule) {
    if (rule.radius() < 1) throw std::invalid_argument("de Bruijn graphs need radius >= 1");
    DeBruijnGraph g;
    g.radius = rule.radius();
    g.node_count = 1u << (2 * rule.radius());
    g.output.resize(rule.table_size());
    g.active.resize(rule.table_size());
    for (std::uint32_t w = 0; w < rule.table_size(); ++w) {
        g.output[w] = static_cast<std::uint8_t>(rule.output(w));
        g.active[w] = static_cast<std::uint8_t>(rule.active(w));
    }
    return g;
}

void write_edge_list(const DeBruijnGraph& graph, std::ostream& out) {
    for (std::uint32_t w = 0; w < graph.edge_count(); ++w) {
        out << graph.node_name(graph.edge_from(w)) << ' ' << graph.node_name(graph.edge_to(w))
            << ' ' << int(graph.output[w]) << ' ' << int(graph.active[w]) << '\n';
    }
}

Configuration walk_config(const CycleWitness& walk) {
    Configuration c(walk.nodes.size());
    for (std::size_t i = 0; i < walk.nodes.size(); ++i) {
        std::uint32_t to = walk.nodes[(i + 1) % walk.nodes.size()];
        if (to & 1u) c.set(i, true);
    }
    return c;
}

CertifyResult certify_pairwise_parity(const DeBruijnGraph& graph) {
    // Search over (node, parity of active edges since the root). The graph is
    // strongly connected, so an odd-active closed walk exists anywhere iff
    // state (root, 1) is reachable from (root, 0); otherwise each node is
    // reached with a single parity, which is the potential.
    const std::uint32_t nodes = graph.node_count;
    const std::uint32_t states = nodes * 2;
    constexpr std::uint32_t kUnvisited = ~std::uint32_t{0};
    std::vector<std::uint32_t> parent(states, kUnvisited);  // predecessor state
    std::vector<std::uint8_t> visited(states, 0);

    auto state_of = [](std::uint32_t node, std::uint32_t par) { return node * 2 + par; };

    std::deque<std::uint32_t> queue;
    visited[state_of(0, 0)] = 1;
    queue.push_back(state_of(0, 0));
    std::uint32_t goal = state_of(0, 1);

    while (!queue.empty() && !visited[goal]) {
        std::uint32_t s = queue.front();
        queue.pop_front();
        std::uint32_t node = s / 2;
        std::uint32_t par = s & 1u;
        for (int b = 0; b < 2; ++b) {
            std::uint32_t w = graph.edge_window(node, b);
            std::uint32_t next = state_of(graph.edge_to(w), par ^ graph.active[w]);
            if (!visited[next]) {
                visited[next] = 1;
                parent[next] = s;
                queue.push_back(next);
            }
        }
    }

    CertifyResult result;
    if (!visited[goal]) {
        result.certified = true;
        result.potential.assign(nodes, 0);
        for (std::uint32_t v = 0; v < nodes; ++v) {
            // strong connectivity guarantees exactly one parity per node
            result.potential[v] = visited[state_of(v, 1)] ? 1 : 0;
        }
        return result;
    }

    CycleWitness walk;
    std::uint32_t s = goal;
    while (s != state_of(0, 0)) {
        walk.nodes.push_back(s / 2);
        s = parent[s];
    }
    walk.nodes.push_back(0);
    std::reverse(walk.nodes.begin(), walk.nodes.end());
    walk.nodes.pop_back();  // the closing edge re-enters the leading root
    walk.weight = 0;
    for (std::size_t i = 0; i < walk.nodes.size(); ++i) {
        std::uint32_t from = walk.nodes[i];
        std::uint32_t to = walk.nodes[(i + 1) % walk.nodes.size()];
        std::uint32_t w = (from << 1) | (to & 1u);
        walk.weight += graph.active[w];
    }
    result.certified = false;
    result.witness = std::move(walk);
    return result;
}

namespace {

// windows of the circular configuration encoded in the low `length` bits of
// `value` (cell 0 in the most significant of those bits)
bool all_windows_output(const LocalRule& rule, std::uint64_t value, std::size_t length,
                        int target) {
    const int r = rule.radius();
    const unsigned width = rule.window_bits();
    auto cell = [value, length](long i) -> std::uint32_t {
        long m = i % static_cast<long>(length);
        if (m < 0) m += static_cast<long>(length);
        return (value >> (length - 1 - static_cast<std::size_t>(m))) & 1u;
    };
    for (std::size_t i = 0; i < length; ++i) {
        std::uint32_t w = 0;
        for (unsigned j = 0; j < width; ++j)
            w = (w << 1) | cell(static_cast<long>(i + j) - r);
        if (rule.output(w) != target) return false;
    }
    return true;
}

}  // namespace

std::vector<Configuration> preimage_necklaces(const LocalRule& rule, int target,
                                              std::size_t length) {
    if (length == 0 || length > 24)
        throw std::invalid_argument("pre-image enumeration is limited to 1 <= n <= 24");
    std::vector<Configuration> result;
    const std::uint64_t total = std::uint64_t{1} << length;
    for (std::uint64_t v = 0; v < total; ++v) {
        if (!all_windows_output(rule, v, length, target)) continue;
        Configuration canon = Configuration::from_value(v, length).canonical_rotation();
        if (canon.value() == v) result.push_back(std::move(canon));
    }
    return result;
}

std::optional<CycleWitness> find_even_length_odd_parity_cycle(const DeBruijnGraph& graph,
                                                              int target,
                                                              std::size_t max_length) {
    if (max_length < 2) throw std::invalid_argument("max_length must be at least 2");
    // Rebuild the table view of the graph for window evaluation.
    LocalRule rule(graph.radius,
                   std::vector<std::uint8_t>(graph.output.begin(), graph.output.end()));
    const int r = graph.radius;
    for (std::size_t len = 2; len <= max_length; len += 2) {
        const std::uint64_t total = std::uint64_t{1} << len;
        for (std::uint64_t v = 0; v < total; ++v) {
            if ((std::popcount(v) & 1) == 0) continue;
            if (!all_windows_output(rule, v, len, target)) continue;
            Configuration c = Configuration::from_value(v, len);
            CycleWitness walk;
            walk.nodes.reserve(len);
            for (std::size_t i = 0; i < len; ++i) {
                std::uint32_t node = 0;
                for (int j = 0; j < 2 * r; ++j)
                    node = (node << 1) |
                           static_cast<std::uint32_t>(c.cell(static_cast<std::ptrdiff_t>(i + j) - r));
                walk.nodes.push_back(node);
            }
            walk.weight = c.ones();
            return walk;
        }
    }
    return std::nullopt;
}

}  // namespace parity
