#include "genergy/planarity.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace genergy {

namespace {

using Edge = std::pair<int, int>;

struct BicompFinder {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<Edge> stack;
    std::vector<std::vector<Edge>> comps;
    int timer = 0;

    explicit BicompFinder(const Graph& gg) : g(gg), disc(gg.order(), -1), low(gg.order(), 0) {}

    void dfs(int u, int parent) {
        disc[u] = low[u] = timer++;
        std::uint64_t nbr = g.neighbors(u);
        while (nbr) {
            int v = std::countr_zero(nbr);
            nbr &= nbr - 1;
            if (v == parent) continue;
            if (disc[v] < 0) {
                stack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    comps.emplace_back();
                    while (true) {
                        Edge e = stack.back();
                        stack.pop_back();
                        comps.back().push_back(e);
                        if (e == Edge{u, v}) break;
                    }
                }
            } else if (disc[v] < disc[u]) {
                stack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
    }

    std::vector<std::vector<Edge>> run() {
        for (int v = 0; v < g.order(); ++v)
            if (disc[v] < 0) dfs(v, -1);
        return std::move(comps);
    }
};

std::vector<int> find_cycle(const Graph& h) {
    int n = h.order();
    std::vector<int> state(n, 0), parent(n, -1), path;
    // iterative DFS keeping the tree path, stop at first back edge
    std::vector<std::pair<int, std::uint64_t>> st;
    for (int s = 0; s < n && path.empty(); ++s) {
        if (state[s]) continue;
        st.emplace_back(s, h.neighbors(s));
        state[s] = 1;
        while (!st.empty() && path.empty()) {
            auto& [u, nbr] = st.back();
            if (!nbr) {
                state[u] = 2;
                st.pop_back();
                continue;
            }
            int v = std::countr_zero(nbr);
            nbr &= nbr - 1;
            if (v == parent[u]) continue;
            if (state[v] == 1) {
                // back edge u -> v: walk the tree path back from u to v
                path.push_back(u);
                for (int w = u; w != v;) {
                    w = parent[w];
                    path.push_back(w);
                }
            } else if (state[v] == 0) {
                parent[v] = u;
                state[v] = 1;
                st.emplace_back(v, h.neighbors(v));
            }
        }
    }
    return path;
}

// Demoucron incremental embedding; h must be biconnected.
bool demoucron_planar(const Graph& h) {
    int n = h.order();
    int m = h.size();
    if (m > 3 * n - 6) return false;

    std::vector<int> start = find_cycle(h);
    std::vector<std::vector<int>> faces{start, start};

    std::array<std::uint64_t, Graph::kMaxOrder> emb{};
    std::uint64_t embv = 0;
    auto embed_edge = [&](int a, int b) {
        emb[a] |= std::uint64_t{1} << b;
        emb[b] |= std::uint64_t{1} << a;
    };
    for (std::size_t i = 0; i < start.size(); ++i)
        embed_edge(start[i], start[(i + 1) % start.size()]);
    for (int v : start) embv |= std::uint64_t{1} << v;
    int edges_left = m - static_cast<int>(start.size());

    const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

    while (edges_left > 0) {
        struct Fragment {
            std::uint64_t attach = 0;
            std::uint64_t inner = 0;  // empty for a single-edge fragment
            Edge edge{-1, -1};
        };
        std::vector<Fragment> frags;

        for (int u = 0; u < n; ++u) {
            if (!((embv >> u) & 1)) continue;
            std::uint64_t cand = h.neighbors(u) & embv & ~emb[u];
            while (cand) {
                int v = std::countr_zero(cand);
                cand &= cand - 1;
                if (v > u)
                    frags.push_back({(std::uint64_t{1} << u) | (std::uint64_t{1} << v), 0, {u, v}});
            }
        }

        std::uint64_t rem = all & ~embv;
        while (rem) {
            int s = std::countr_zero(rem);
            std::uint64_t comp = std::uint64_t{1} << s, frontier = comp;
            while (frontier) {
                std::uint64_t next = 0;
                while (frontier) {
                    int v = std::countr_zero(frontier);
                    frontier &= frontier - 1;
                    next |= h.neighbors(v) & ~embv;
                }
                frontier = next & ~comp;
                comp |= next & ~embv;
            }
            rem &= ~comp;
            std::uint64_t attach = 0;
            std::uint64_t cv = comp;
            while (cv) {
                int v = std::countr_zero(cv);
                cv &= cv - 1;
                attach |= h.neighbors(v) & embv;
            }
            frags.push_back({attach, comp, {-1, -1}});
        }

        // admissible faces: boundary must contain every attachment vertex
        auto face_mask = [&](const std::vector<int>& f) {
            std::uint64_t mk = 0;
            for (int v : f) mk |= std::uint64_t{1} << v;
            return mk;
        };
        int chosen = -1, chosen_face = -1;
        std::vector<int> first_admissible(frags.size(), -1);
        for (std::size_t i = 0; i < frags.size(); ++i) {
            int count = 0, last = -1;
            for (std::size_t j = 0; j < faces.size(); ++j) {
                if ((frags[i].attach & ~face_mask(faces[j])) == 0) {
                    ++count;
                    last = static_cast<int>(j);
                    if (first_admissible[i] < 0) first_admissible[i] = last;
                }
            }
            if (count == 0) return false;
            if (count == 1 && chosen < 0) {
                chosen = static_cast<int>(i);
                chosen_face = last;
            }
        }
        if (chosen < 0) {
            chosen = 0;
            chosen_face = first_admissible[0];
        }

        // path between two attachment vertices through the fragment interior
        const Fragment& fr = frags[chosen];
        std::vector<int> pathv;
        if (fr.inner == 0) {
            pathv = {fr.edge.first, fr.edge.second};
        } else {
            int a = std::countr_zero(fr.attach);
            std::uint64_t targets = fr.attach & ~(std::uint64_t{1} << a);
            std::vector<int> par(n, -1);
            std::vector<int> queue;
            std::uint64_t seen = 0;
            std::uint64_t startset = h.neighbors(a) & fr.inner;
            std::uint64_t sv = startset;
            while (sv) {
                int v = std::countr_zero(sv);
                sv &= sv - 1;
                par[v] = a;
                queue.push_back(v);
                seen |= std::uint64_t{1} << v;
            }
            int endpoint = -1, hit = -1;
            for (std::size_t qi = 0; qi < queue.size() && endpoint < 0; ++qi) {
                int u = queue[qi];
                if (h.neighbors(u) & targets) {
                    endpoint = u;
                    hit = std::countr_zero(h.neighbors(u) & targets);
                    break;
                }
                std::uint64_t next = h.neighbors(u) & fr.inner & ~seen;
                while (next) {
                    int v = std::countr_zero(next);
                    next &= next - 1;
                    par[v] = u;
                    queue.push_back(v);
                    seen |= std::uint64_t{1} << v;
                }
            }
            pathv.push_back(hit);
            for (int w = endpoint; w != a; w = par[w]) pathv.push_back(w);
            pathv.push_back(a);
        }

        // split the face along the path
        std::vector<int>& f = faces[chosen_face];
        int ia = -1, ib = -1;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] == pathv.front()) ia = static_cast<int>(i);
            if (f[i] == pathv.back()) ib = static_cast<int>(i);
        }
        std::vector<int> arc1, arc2;
        for (int i = ia;; i = (i + 1) % static_cast<int>(f.size())) {
            arc1.push_back(f[i]);
            if (i == ib) break;
        }
        for (int i = ib;; i = (i + 1) % static_cast<int>(f.size())) {
            arc2.push_back(f[i]);
            if (i == ia) break;
        }
        std::vector<int> interior(pathv.begin() + 1, pathv.end() - 1);
        std::vector<int> face1 = arc1;
        for (auto it = interior.rbegin(); it != interior.rend(); ++it) face1.push_back(*it);
        std::vector<int> face2 = arc2;
        for (int v : interior) face2.push_back(v);

        f = std::move(face1);
        faces.push_back(std::move(face2));

        for (std::size_t i = 0; i + 1 < pathv.size(); ++i) {
            embed_edge(pathv[i], pathv[i + 1]);
            --edges_left;
        }
        for (int v : interior) embv |= std::uint64_t{1} << v;
    }
    return true;
}

}  // namespace

bool is_planar(const Graph& g) {
    int n = g.order();
    if (n > 16) throw std::invalid_argument("is_planar supports n <= 16, got " + std::to_string(n));
    if (n <= 4) return true;
    int m = g.size();
    if (m <= 8) return true;  // K5/K3,3 subdivisions need at least 9 edges
    if (m > 3 * n - 6) return false;

    for (const auto& comp : BicompFinder(g).run()) {
        std::uint64_t verts = 0;
        for (const auto& [u, v] : comp)
            verts |= (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        int nc = std::popcount(verts);
        if (nc <= 4 || comp.size() <= 8) continue;
        if (static_cast<int>(comp.size()) > 3 * nc - 6) return false;

        std::array<int, Graph::kMaxOrder> relabel{};
        int next = 0;
        std::uint64_t vv = verts;
        while (vv) {
            int v = std::countr_zero(vv);
            vv &= vv - 1;
            relabel[v] = next++;
        }
        Graph h(nc);
        for (const auto& [u, v] : comp) h.add_edge(relabel[u], relabel[v]);
        if (!demoucron_planar(h)) return false;
    }
    return true;
}

}  // namespace genergy
