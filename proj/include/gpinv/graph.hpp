#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gpinv/matrix.hpp"

namespace gpinv {

/// Simple undirected graph on vertices v_1..v_n (1-indexed everywhere in
/// the public interface). Immutable after construction; construction
/// rejects self-loops, duplicate edges and out-of-range endpoints instead
/// of normalizing them, so malformed input surfaces at the boundary.
class Graph {
public:
    using EdgeList = std::vector<std::pair<int, int>>;

    Graph(int order, EdgeList edges) : n_(order) {
        if (order < 1) throw std::invalid_argument("Graph: order must be positive");
        for (auto& [u, v] : edges) {
            if (u < 1 || u > n_ || v < 1 || v > n_)
                throw std::invalid_argument("Graph: edge endpoint out of range: {" +
                                            std::to_string(u) + "," + std::to_string(v) + "}");
            if (u == v)
                throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("Graph: duplicate edge");
        edges_ = std::move(edges);

        adj_.resize(static_cast<std::size_t>(n_));
        for (auto [u, v] : edges_) {
            adj_[static_cast<std::size_t>(u - 1)].push_back(v);
            adj_[static_cast<std::size_t>(v - 1)].push_back(u);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    int order() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }

    /// Sorted edge list, endpoints ordered u < v.
    const EdgeList& edges() const noexcept { return edges_; }

    /// Neighbors of v_i, sorted ascending, 1-indexed.
    std::span<const int> neighbors(int i) const {
        check_vertex(i);
        return adj_[static_cast<std::size_t>(i - 1)];
    }

    int degree(int i) const { return static_cast<int>(neighbors(i).size()); }

    bool adjacent(int i, int j) const {
        auto nb = neighbors(i);
        check_vertex(j);
        return std::binary_search(nb.begin(), nb.end(), j);
    }

    /// |N(v_i) ∩ N(v_j)| by merging the two sorted adjacency lists,
    /// O(deg i + deg j). For i == j this is just deg v_i.
    int common_neighbors(int i, int j) const {
        auto a = neighbors(i);
        auto b = neighbors(j);
        int count = 0;
        std::size_t p = 0, q = 0;
        while (p < a.size() && q < b.size()) {
            if (a[p] < b[q]) ++p;
            else if (a[p] > b[q]) ++q;
            else { ++count; ++p; ++q; }
        }
        return count;
    }

private:
    void check_vertex(int i) const {
        if (i < 1 || i > n_)
            throw std::out_of_range("Graph: vertex index " + std::to_string(i) +
                                    " not in 1.." + std::to_string(n_));
    }

    int n_;
    EdgeList edges_;
    std::vector<std::vector<int>> adj_;
};

/// Indicator vector of the neighborhood of one vertex: values[j-1] is 1
/// iff {source, v_j} is an edge. This is column `source` of the adjacency
/// matrix.
struct NeighborVector {
    int source = 0;
    Vec values;
};

inline NeighborVector neighbor_vector(const Graph& g, int i) {
    NeighborVector f;
    f.source = i;
    f.values.assign(static_cast<std::size_t>(g.order()), 0.0);
    for (int j : g.neighbors(i)) f.values[static_cast<std::size_t>(j - 1)] = 1.0;
    return f;
}

/// 0/1 adjacency matrix with zero diagonal.
inline SymMatrix adjacency_matrix(const Graph& g) {
    SymMatrix a(static_cast<std::size_t>(g.order()));
    for (auto [u, v] : g.edges())
        a.set(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1), 1.0);
    return a;
}

/// y = A x via the edge list, without materializing A.
inline Vec apply_adjacency(const Graph& g, std::span<const double> x) {
    const auto n = static_cast<std::size_t>(g.order());
    if (x.size() != n) throw std::invalid_argument("apply_adjacency: length mismatch");
    Vec y(n, 0.0);
    for (auto [u, v] : g.edges()) {
        y[static_cast<std::size_t>(u - 1)] += x[static_cast<std::size_t>(v - 1)];
        y[static_cast<std::size_t>(v - 1)] += x[static_cast<std::size_t>(u - 1)];
    }
    return y;
}

} // namespace gpinv
