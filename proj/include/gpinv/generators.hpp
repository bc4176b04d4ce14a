#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "gpinv/graph.hpp"

namespace gpinv {

/// Star S_n: center v_1, leaves v_2..v_n.
inline Graph gen_star(int n) {
    if (n < 1) throw std::invalid_argument("gen_star: n must be >= 1");
    Graph::EdgeList e;
    for (int i = 2; i <= n; ++i) e.emplace_back(1, i);
    return Graph(n, std::move(e));
}

inline Graph gen_complete(int n) {
    if (n < 1) throw std::invalid_argument("gen_complete: n must be >= 1");
    Graph::EdgeList e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

/// Path P_n: v_1 - v_2 - ... - v_n.
inline Graph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("gen_path: n must be >= 1");
    Graph::EdgeList e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

inline Graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("gen_cycle: n must be >= 3");
    Graph::EdgeList e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(1, n);
    return Graph(n, std::move(e));
}

/// Petersen graph: outer 5-cycle v_1..v_5, inner pentagram v_6..v_10,
/// spokes v_i - v_{i+5}.
inline Graph gen_petersen() {
    Graph::EdgeList e = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5},
                         {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10},
                         {6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6}};
    return Graph(10, std::move(e));
}

/// G(n, p) with a pinned, portable draw: for each pair {i, j}, i < j, in
/// lexicographic order, one 53-bit uniform u = (mt19937_64 output >> 11)
/// · 2⁻⁵³ is drawn and the edge is kept iff u < p. mt19937_64 is
/// bit-specified by the C++ standard, so identical (n, p, seed) yield the
/// identical graph on every platform.
inline Graph gen_erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_erdos_renyi: n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("gen_erdos_renyi: p must be in [0, 1]");
    std::mt19937_64 rng(seed);
    Graph::EdgeList e;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < p) e.emplace_back(i, j);
        }
    }
    return Graph(n, std::move(e));
}

} // namespace gpinv
