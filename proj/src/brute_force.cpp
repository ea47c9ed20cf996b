#include "excesslab/brute_force.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace excesslab {

namespace {

constexpr int kMaxBrute = 7;

struct EdgeList {
    int n_edges = 0;
    std::array<std::pair<int, int>, 21> edges{};
};

// colexicographic edge order: (0,1), (0,2), (1,2), (0,3), ...
EdgeList edge_list(int k) {
    EdgeList el;
    for (int j = 1; j < k; ++j)
        for (int i = 0; i < j; ++i) el.edges[el.n_edges++] = {i, j};
    return el;
}

bool connected(const std::array<uint8_t, 7>& adj, uint8_t present) {
    if (present == 0) return false;
    const int start = std::countr_zero(present);
    uint8_t seen = static_cast<uint8_t>(1u << start);
    uint8_t frontier = seen;
    while (frontier) {
        const int v = std::countr_zero(frontier);
        frontier &= static_cast<uint8_t>(frontier - 1);
        const uint8_t nb = adj[v] & ~seen;
        seen |= nb;
        frontier |= nb;
    }
    return seen == present;
}

void adjacency_from_mask(const EdgeList& el, uint32_t mask,
                         std::array<uint8_t, 7>& adj) {
    adj.fill(0);
    for (uint32_t m = mask; m; m &= m - 1) {
        const auto [a, b] = el.edges[std::countr_zero(m)];
        adj[a] |= static_cast<uint8_t>(1u << b);
        adj[b] |= static_cast<uint8_t>(1u << a);
    }
}

}  // namespace

std::vector<Integer> brute_force_row(int k) {
    if (k < 1 || k > kMaxBrute)
        throw std::invalid_argument("brute_force_row: k must be in 1..7");
    const EdgeList el = edge_list(k);
    const uint8_t all = static_cast<uint8_t>((1u << k) - 1);
    std::vector<long> counts(el.n_edges + 1, 0);
    std::array<uint8_t, 7> adj{};
    if (k == 1) counts[0] = 1;
    for (uint32_t mask = 0; mask < (1u << el.n_edges) && k > 1; ++mask) {
        adjacency_from_mask(el, mask, adj);
        if (connected(adj, all)) ++counts[std::popcount(mask)];
    }
    std::vector<Integer> row(counts.begin(), counts.end());
    return row;
}

Integer brute_force_count(int k, int m) {
    if (k < 1 || k > kMaxBrute)
        throw std::invalid_argument("brute_force_count: k must be in 1..7");
    if (m < 0) return 0;
    const auto row = brute_force_row(k);
    if (m >= static_cast<int>(row.size())) return 0;
    return row[m];
}

Integer brute_force_bridge_count(int k, int l) {
    if (k < 2 || k > kMaxBrute)
        throw std::invalid_argument("brute_force_bridge_count: k must be in 2..7");
    const EdgeList el = edge_list(k);
    const int target_edges = k + l + 1;
    if (target_edges > el.n_edges) return 0;
    const uint8_t all = static_cast<uint8_t>((1u << k) - 1);
    long pairs = 0;
    std::array<uint8_t, 7> adj{};
    for (uint32_t mask = 0; mask < (1u << el.n_edges); ++mask) {
        if (std::popcount(mask) != target_edges) continue;
        adjacency_from_mask(el, mask, adj);
        if (!connected(adj, all)) continue;
        for (uint32_t m = mask; m; m &= m - 1) {
            const uint32_t without = mask & ~(m & -m);
            adjacency_from_mask(el, without, adj);
            // the removed edge is a valid bridge if its endpoints land in
            // different components, each of excess >= 0
            const auto [a, b] = el.edges[std::countr_zero(m)];
            // flood from a
            uint8_t seen = static_cast<uint8_t>(1u << a);
            uint8_t frontier = seen;
            while (frontier) {
                const int v = std::countr_zero(frontier);
                frontier &= static_cast<uint8_t>(frontier - 1);
                const uint8_t nb = adj[v] & ~seen;
                seen |= nb;
                frontier |= nb;
            }
            if (seen & (1u << b)) continue;  // not a cut edge
            // edges within each side
            int ea = 0, eb = 0;
            for (uint32_t mm = without; mm; mm &= mm - 1) {
                const auto [x, y] = el.edges[std::countr_zero(mm)];
                if (seen & (1u << x))
                    ++ea;
                else
                    ++eb;
            }
            const int ka = std::popcount(seen), kb = k - ka;
            if (ea - ka >= 0 && eb - kb >= 0) ++pairs;
        }
    }
    return pairs;
}

}  // namespace excesslab
