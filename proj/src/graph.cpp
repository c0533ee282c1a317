#include "genergy/graph.hpp"

#include <numeric>
#include <stdexcept>

namespace genergy {

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxOrder)
        throw std::invalid_argument("graph order must be in [1, 62], got " + std::to_string(n));
}

int Graph::size() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
}

std::string Fraction::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Fraction make_fraction(long long num, long long den) {
    long long g = std::gcd(num, den);
    if (g == 0) return {0, 1};
    return {num / g, den / g};
}

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0 || a + b < 1) throw std::invalid_argument("complete_bipartite requires a+b >= 1");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.order = g.order();
    int twice = 0;
    p.min_degree = Graph::kMaxOrder;
    for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        twice += d;
        p.max_degree = std::max(p.max_degree, d);
        p.min_degree = std::min(p.min_degree, d);
    }
    p.size = twice / 2;
    p.avg_degree = make_fraction(twice, g.order());
    return p;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (int u = 0; u < a.order(); ++u)
        for (int v = u + 1; v < a.order(); ++v)
            if (a.has_edge(u, v)) g.add_edge(u, v);
    int off = a.order();
    for (int u = 0; u < b.order(); ++u)
        for (int v = u + 1; v < b.order(); ++v)
            if (b.has_edge(u, v)) g.add_edge(off + u, off + v);
    return g;
}

bool is_connected(const Graph& g) {
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.neighbors(v);
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return std::popcount(seen) == g.order();
}

bool is_bipartite(const Graph& g) {
    int n = g.order();
    std::array<int, Graph::kMaxOrder> color{};
    color.fill(-1);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::array<int, Graph::kMaxOrder> queue;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int u = queue[head++];
            std::uint64_t nbr = g.neighbors(u);
            while (nbr) {
                int v = std::countr_zero(nbr);
                nbr &= nbr - 1;
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    queue[tail++] = v;
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::optional<int> is_regular(const Graph& g) {
    int k = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != k) return std::nullopt;
    return k;
}

}  // namespace genergy
