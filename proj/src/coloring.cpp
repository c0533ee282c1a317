#include "genergy/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace genergy {

namespace {

void clique_dfs(const Graph& g, std::uint64_t cand, int depth, int& best) {
    if (depth + std::popcount(cand) <= best) return;
    if (!cand) {
        best = std::max(best, depth);
        return;
    }
    while (cand) {
        if (depth + std::popcount(cand) <= best) return;
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        clique_dfs(g, cand & g.neighbors(v), depth + 1, best);
    }
}

int max_clique(const Graph& g) {
    int best = 1;
    clique_dfs(g, (std::uint64_t{1} << g.order()) - 1, 0, best);
    return best;
}

int greedy_colors(const Graph& g) {
    int n = g.order();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> color(n, -1);
    int used = 0;
    for (int v : order) {
        std::uint32_t taken = 0;
        std::uint64_t nbr = g.neighbors(v);
        while (nbr) {
            int u = std::countr_zero(nbr);
            nbr &= nbr - 1;
            if (color[u] >= 0) taken |= 1u << color[u];
        }
        int c = std::countr_one(taken);
        color[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

// Backtracking k-colorability; picks the most saturated uncolored vertex and
// breaks color symmetry by allowing at most one brand-new color per step.
bool kcolor_dfs(const Graph& g, int k, std::vector<int>& color, int colored, int used) {
    int n = g.order();
    if (colored == n) return true;

    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (int v = 0; v < n; ++v) {
        if (color[v] >= 0) continue;
        std::uint32_t sat = 0;
        std::uint64_t nbr = g.neighbors(v);
        while (nbr) {
            int u = std::countr_zero(nbr);
            nbr &= nbr - 1;
            if (color[u] >= 0) sat |= 1u << color[u];
        }
        int s = std::popcount(sat);
        int d = g.degree(v);
        if (s > pick_sat || (s == pick_sat && d > pick_deg)) {
            pick = v;
            pick_sat = s;
            pick_deg = d;
        }
    }

    std::uint32_t taken = 0;
    std::uint64_t nbr = g.neighbors(pick);
    while (nbr) {
        int u = std::countr_zero(nbr);
        nbr &= nbr - 1;
        if (color[u] >= 0) taken |= 1u << color[u];
    }
    int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
        if (taken & (1u << c)) continue;
        color[pick] = c;
        if (kcolor_dfs(g, k, color, colored + 1, std::max(used, c + 1))) return true;
        color[pick] = -1;
    }
    return false;
}

bool k_colorable(const Graph& g, int k) {
    std::vector<int> color(g.order(), -1);
    return kcolor_dfs(g, k, color, 0, 0);
}

}  // namespace

int chromatic_number(const Graph& g) {
    int n = g.order();
    if (n > 16)
        throw std::invalid_argument("chromatic_number supports n <= 16, got " + std::to_string(n));
    if (g.size() == 0) return 1;
    if (is_bipartite(g)) return 2;

    int lb = std::max(3, max_clique(g));
    int ub = greedy_colors(g);
    for (int k = lb; k < ub; ++k)
        if (k_colorable(g, k)) return k;
    return ub;
}

}  // namespace genergy
