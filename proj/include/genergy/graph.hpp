#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>

namespace genergy {

/// Simple undirected graph on at most 62 vertices.
///
/// Adjacency is kept as one 64-bit neighbor mask per vertex, which keeps
/// edge tests, degree counts and permutation shuffling cheap in the
/// enumeration hot loop. Vertices are 0-indexed. All operations on a
/// constructed Graph are const; values are freely shareable across threads.
class Graph {
public:
    static constexpr int kMaxOrder = 62;

    explicit Graph(int n);

    int order() const { return n_; }

    /// Edge count m.
    int size() const;

    bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1u; }
    void add_edge(int u, int v);

    /// Neighbor mask of v (bit i set iff {v, i} is an edge).
    std::uint64_t neighbors(int v) const { return rows_[v]; }

    int degree(int v) const { return std::popcount(rows_[v]); }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::array<std::uint64_t, kMaxOrder> rows_{};
};

/// Exact rational, reduced; only nonneg values with small terms occur here.
struct Fraction {
    long long num = 0;
    long long den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
};

Fraction make_fraction(long long num, long long den);

/// Degree statistics of a graph: size m, extreme degrees, and the average
/// degree 2m/n kept as an exact fraction.
struct DegreeProfile {
    int order = 0;
    int size = 0;         // m
    int max_degree = 0;   // Delta
    int min_degree = 0;   // delta
    Fraction avg_degree;  // 2m/n
};

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);

DegreeProfile degree_profile(const Graph& g);

/// Block-diagonal union; orders and sizes add.
Graph disjoint_union(const Graph& a, const Graph& b);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

/// Returns the common degree k when the graph is k-regular, otherwise nullopt.
std::optional<int> is_regular(const Graph& g);

}  // namespace genergy
