#include "genergy/enumerate.hpp"

#include <istream>
#include <stdexcept>

#include "genergy/graph6.hpp"

namespace genergy {

namespace {

constexpr int kMaxEnumOrder = 10;

// Shared state for the lex-max permutation search. Columns are compared as
// integers whose most significant bit is adjacency to the vertex placed
// first, which matches the graph6 bit order.
struct CanonSearch {
    const Graph* g = nullptr;
    int n = 0;
    std::array<std::uint32_t, kMaxEnumOrder> target{};  // identity column at each depth
    std::array<int, kMaxEnumOrder> placed{};
    std::array<int, kMaxEnumOrder> twin_class{};

    void init(const Graph& graph) {
        g = &graph;
        n = graph.order();
        for (int j = 0; j < n; ++j) {
            std::uint32_t c = 0;
            for (int i = 0; i < j; ++i) c = (c << 1) | (graph.has_edge(i, j) ? 1u : 0u);
            target[j] = c;
        }
        // Vertices whose swap is an automorphism (twins) are interchangeable
        // in the search; one representative per class suffices at any node.
        for (int v = 0; v < n; ++v) twin_class[v] = v;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (twin_class[v] != v) continue;
                std::uint64_t mask = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
                if (((graph.neighbors(u) ^ graph.neighbors(v)) & mask) == 0)
                    twin_class[v] = twin_class[u];
            }
    }

    std::uint32_t column_of(int v, int depth) const {
        std::uint32_t c = 0;
        for (int i = 0; i < depth; ++i)
            c = (c << 1) | (g->has_edge(v, placed[i]) ? 1u : 0u);
        return c;
    }

    // True if no permutation beats the identity labeling from this node on.
    bool identity_is_max(int depth, std::uint64_t used) {
        if (depth == n) return true;
        std::uint32_t tried = 0;  // twin classes already expanded at this node
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            std::uint32_t c = column_of(v, depth);
            if (c > target[depth]) return false;
            if (c < target[depth]) continue;
            if ((tried >> twin_class[v]) & 1) continue;
            tried |= 1u << twin_class[v];
            placed[depth] = v;
            if (!identity_is_max(depth + 1, used | (std::uint64_t{1} << v))) return false;
        }
        return true;
    }

    // Explores every per-column-maximal placement and keeps the best full
    // string; `current` and `best` hold one column value per depth.
    void max_string(int depth, std::uint64_t used, std::array<std::uint32_t, kMaxEnumOrder>& current,
                    std::array<std::uint32_t, kMaxEnumOrder>& best, bool& have_best) {
        if (depth == n) {
            if (!have_best) {
                best = current;
                have_best = true;
            } else {
                for (int j = 0; j < n; ++j) {
                    if (current[j] > best[j]) {
                        best = current;
                        break;
                    }
                    if (current[j] < best[j]) break;
                }
            }
            return;
        }
        std::uint32_t cmax = 0;
        for (int v = 0; v < n; ++v)
            if (!((used >> v) & 1)) cmax = std::max(cmax, column_of(v, depth));
        std::uint32_t tried = 0;
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            if (column_of(v, depth) != cmax) continue;
            if ((tried >> twin_class[v]) & 1) continue;
            tried |= 1u << twin_class[v];
            placed[depth] = v;
            current[depth] = cmax;
            max_string(depth + 1, used | (std::uint64_t{1} << v), current, best, have_best);
        }
    }
};

void check_enum_order(int n, const char* what) {
    if (n < 1 || n > kMaxEnumOrder)
        throw std::invalid_argument(std::string(what) + " supports 1 <= n <= " +
                                    std::to_string(kMaxEnumOrder) + ", got " + std::to_string(n));
}

// Appends vertex k adjacent to the mask's bits; prefix rows are unchanged,
// so extending a canonical graph and testing canonicity realizes orderly
// generation (the canonical parent of a canonical graph is its prefix).
Graph extend(const Graph& g, int k, std::uint32_t mask) {
    Graph out(k + 1);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            if (g.has_edge(u, v)) out.add_edge(u, v);
    for (int u = 0; u < k; ++u)
        if ((mask >> u) & 1) out.add_edge(u, k);
    return out;
}

void expand_to(const Graph& g, int level, int n, const std::function<void(const Graph&)>& fn) {
    for (std::uint32_t mask = 0; mask < (1u << level); ++mask) {
        Graph candidate = extend(g, level, mask);
        if (!is_canonical(candidate)) continue;
        if (level + 1 == n)
            fn(candidate);
        else
            expand_to(candidate, level + 1, n, fn);
    }
}

}  // namespace

bool is_canonical(const Graph& g) {
    check_enum_order(g.order(), "is_canonical");
    CanonSearch search;
    search.init(g);
    return search.identity_is_max(0, 0);
}

std::uint64_t canonical_form(const Graph& g) {
    check_enum_order(g.order(), "canonical_form");
    CanonSearch search;
    search.init(g);
    std::array<std::uint32_t, kMaxEnumOrder> current{}, best{};
    bool have_best = false;
    search.max_string(0, 0, current, best, have_best);
    std::uint64_t packed = 0;
    for (int j = 1; j < g.order(); ++j) packed = (packed << j) | best[j];
    return packed;
}

void for_each_graph(int n, const std::function<void(const Graph&)>& fn) {
    check_enum_order(n, "generate_all");
    Graph seed(1);
    if (n == 1) {
        fn(seed);
        return;
    }
    expand_to(seed, 1, n, fn);
}

std::vector<Graph> generate_all(int n) {
    std::vector<Graph> out;
    for_each_graph(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

IngestStats ingest_graph6(std::istream& in, bool strict,
                          const std::function<void(Graph&&)>& on_graph) {
    IngestStats stats;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = line;
        while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ')) sv.remove_suffix(1);
        if (sv.empty()) continue;
        try {
            Graph g = from_graph6(sv);
            ++stats.parsed;
            on_graph(std::move(g));
        } catch (const graph6_error& e) {
            if (strict)
                throw graph6_error("line " + std::to_string(lineno) + ": " + e.what(), e.offset());
            stats.errors.emplace_back(lineno, e.what());
        }
    }
    return stats;
}

std::vector<Graph> ingest_graph6(std::istream& in, bool strict) {
    std::vector<Graph> out;
    ingest_graph6(in, strict, [&](Graph&& g) { out.push_back(std::move(g)); });
    return out;
}

bool operator==(const Violation& a, const Violation& b) {
    return a.graph6 == b.graph6 && a.order == b.order && a.energy == b.energy &&
           a.target == b.target;
}

bool EnumerationSummary::operator==(const EnumerationSummary& o) const {
    return order == o.order && total_graphs == o.total_graphs &&
           nonsingular_count == o.nonsingular_count &&
           conjecture2_violations == o.conjecture2_violations &&
           conjecture1_violations == o.conjecture1_violations &&
           coverage_histogram == o.coverage_histogram;
}

bool has_unexpected_violation(const EnumerationSummary& s) {
    for (const auto& v : s.conjecture2_violations)
        if (v.order >= 5) return true;
    // any conjecture-1 failure would be news at any order
    return !s.conjecture1_violations.empty();
}

int exit_code_for(const EnumerationSummary& s) { return has_unexpected_violation(s) ? 2 : 0; }

}  // namespace genergy
