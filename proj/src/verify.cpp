#include "genergy/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "genergy/bounds.hpp"
#include "genergy/coloring.hpp"
#include "genergy/enumerate.hpp"
#include "genergy/graph6.hpp"
#include "genergy/spectra.hpp"

namespace genergy {

namespace {

struct Suite {
    std::vector<PropertyResult> results;

    void add(const std::string& name, bool pass, const std::string& detail) {
        results.push_back({name, pass, detail});
    }
};

std::string num(double x) {
    std::ostringstream s;
    s.precision(12);
    s << x;
    return s.str();
}

void lemma_grids(Suite& suite, int grid_points) {
    {
        double worst = 1e9;
        for (int i = 1; i <= grid_points; ++i) {
            double x = 0.001 + (7.11 - 0.001) * i / grid_points;
            worst = std::min(worst, lemma22_margin(x));
        }
        suite.add("lemma22_grid", worst >= -1e-12,
                  std::to_string(grid_points) + " points on (0.001, 7.11], min margin " + num(worst));
    }
    {
        bool pass = std::abs(lemma22_margin(1.0)) <= 1e-12 &&
                    std::abs(lemma22_margin(4.5) - 0.52) <= 0.01 &&
                    std::abs(lemma22_margin(7.11) - 0.0004) <= 0.0005;
        suite.add("lemma22_stationary_values", pass,
                  "f(1)=" + num(lemma22_margin(1.0)) + " f(4.5)=" + num(lemma22_margin(4.5)) +
                      " f(7.11)=" + num(lemma22_margin(7.11)));
    }
    {
        double v = 7.11 - std::log(7.11);
        suite.add("constant_711", std::abs(v - 5.1485) <= 1e-4, "7.11 - ln 7.11 = " + num(v));
    }
    {
        double t11 = 11 - 2 * std::log(11.0) - 3, t12 = 12 - 2 * std::log(12.0) - 3;
        suite.add("avgdeg_gap_thresholds",
                  std::abs(t11 - 3.20) <= 0.01 && std::abs(t12 - 4.03) <= 0.01,
                  "n-2ln n-3 at 11, 12 = " + num(t11) + ", " + num(t12));
    }
    {
        // monotone non-increase on [max(c,1), c+100]; the paper's domain
        // [c, inf) is only valid from max(c, 1/2) on, see the root bound below
        std::mt19937 rng(20240817);
        std::uniform_real_distribution<double> cd(0.0, 10.0), bd(-50.0, 50.0), dd(-10.0, 10.0);
        bool pass = true;
        std::string detail = "100 random (b,c,d) draws";
        for (int trial = 0; trial < 100 && pass; ++trial) {
            double b = bd(rng), c = cd(rng), d = dd(rng);
            double lo = std::max(c, 1.0), hi = c + 100.0;
            double prev = lemma34_f(lo, b, c, d);
            for (int i = 1; i <= 1000; ++i) {
                double x = lo + (hi - lo) * i / 1000;
                double cur = lemma34_f(x, b, c, d);
                if (cur > prev + 1e-12) {
                    pass = false;
                    detail = "increase at x=" + num(x) + " (b,c,d)=(" + num(b) + "," + num(c) +
                             "," + num(d) + ")";
                    break;
                }
                prev = cur;
            }
        }
        suite.add("lemma34_monotone", pass, detail);
    }
    {
        // both real roots of f'(x) = 2c+1-2x-2c/x lie at or below max(c, 1/2)
        std::mt19937 rng(20240818);
        std::uniform_real_distribution<double> cd(0.0, 10.0);
        bool pass = true;
        std::string detail = "sampled c in [0,10]";
        for (int trial = 0; trial < 1000 && pass; ++trial) {
            double c = cd(rng);
            double disc = 4 * c * c - 12 * c + 1;
            if (disc < 0) continue;
            double root = (2 * c + 1 + std::sqrt(disc)) / 4.0;
            double cap = std::max(c, 0.5);
            if (root > cap + 1e-12) {
                pass = false;
                detail = "root " + num(root) + " above " + num(cap) + " at c=" + num(c);
            }
        }
        suite.add("lemma34_root_bound", pass, detail);
    }
    {
        double worst5 = 1e9, worst6 = 1e9;
        for (int i = 0; i <= grid_points; ++i) {
            double x = 13.0 + (1e4 - 13.0) * i / grid_points;
            worst5 = std::min(worst5, lemma35_margin(x));
            worst6 = std::min(worst6, lemma36_margin(x));
        }
        suite.add("lemma35_grid", worst5 >= -1e-12, "min margin on [13, 1e4]: " + num(worst5));
        suite.add("lemma36_grid", worst6 >= -1e-12, "min margin on [13, 1e4]: " + num(worst6));
    }
    {
        auto increasing = [&](auto f, double lo, double hi) {
            double prev = f(lo);
            for (int i = 1; i <= 10000; ++i) {
                double x = lo + (hi - lo) * i / 10000;
                double cur = f(x);
                if (cur < prev - 1e-12) return false;
                prev = cur;
            }
            return true;
        };
        bool p1 = increasing([](double x) { return x - std::log(x); }, 1.0, 1e4);
        bool p2 = increasing([](double x) { return std::sqrt(x) - std::log(std::sqrt(x)); }, 1.0, 1e4);
        bool p3 = increasing([](double x) { return x - 2 * std::log(x) - 1; }, 2.0, 1e4);
        suite.add("monotone_helpers", p1 && p2 && p3,
                  "x-ln x (x>=1), sqrt(x)-ln sqrt(x) (x>=1), x-2ln x-1 (x>2)");
    }
}

void exhaustive_sweeps(Suite& suite) {
    bool validity = true, dominance = true, identity = true, golden = true;
    bool trace_ok = true, frob_ok = true, perron = true, bip_sym = true;
    bool regular_div = true, yuan = true, hoffman = true;
    std::string bad;
    std::uint64_t scanned = 0, nonsingular = 0;

    for (int n = 1; n <= 8; ++n) {
        for_each_graph(n, [&](const Graph& g) {
            ++scanned;
            DegreeProfile prof = degree_profile(g);
            Spectrum sp = eigenvalues(g);
            ExactDet det = exact_determinant(g);

            double sum = 0, sumsq = 0;
            for (double lam : sp.eigenvalues) {
                sum += lam;
                sumsq += lam * lam;
            }
            if (std::abs(sum) > n * sp.tolerance) trace_ok = false;
            if (std::abs(sumsq - 2.0 * prof.size) > 2 * n * sp.tolerance) frob_ok = false;
            if (sp.mu1 < prof.avg_degree.value() - 1e-10) perron = false;

            if (is_bipartite(g)) {
                for (int i = 0, j = n - 1; i <= j; ++i, --j)
                    if (std::abs(sp.eigenvalues[i] + sp.eigenvalues[j]) > 1e-9) bip_sym = false;
            }
            if (auto k = is_regular(g); k && *k >= 1) {
                if (det.value % *k != 0) regular_div = false;
            }
            if (prof.min_degree >= 1) {
                if (sp.mu1 * sp.mu1 > 2.0 * prof.size - n + 1 + 1e-8) yuan = false;
            }
            if (n <= 16 && !is_bipartite(g) && g.size() > 0) {
                if (chromatic_number(g) == 3 &&
                    sp.eigenvalues.back() > -sp.mu1 / 2 + 1e-8)
                    hoffman = false;
            }

            if (det.value == 0) return;
            ++nonsingular;
            double absdet = std::abs(det.value.convert_to<double>());
            double lo = bound_log(n, sp.mu1, absdet);
            double am = bound_amgm(n, sp.mu1, absdet);
            double va = bound_variance(n, prof.size, sp.mu1, sp.mu2, absdet);
            double c = quantity_c(n, prof.size, sp.mu1, sp.mu2, absdet);
            if (!(sp.energy + 1e-8 >= va && sp.energy + 1e-8 >= am && sp.energy + 1e-8 >= lo)) {
                validity = false;
                bad = to_graph6(g);
            }
            if (c <= 1.0) {
                double bc = bound_conjugate(n, prof.size, sp.mu1, sp.mu2, absdet);
                if (sp.energy + 1e-8 < bc) {
                    validity = false;
                    bad = to_graph6(g);
                }
            }
            if (!(va >= am - 1e-9 && am >= lo - 1e-9)) {
                dominance = false;
                bad = to_graph6(g);
            }
            if (std::abs(va - (sp.mu1 + (n - 1) * c)) > 1e-12) identity = false;
            if (cond_golden(n, prof.size, sp.mu1, sp.mu2, prof.avg_degree.value()) &&
                sp.energy < n - 1 + prof.avg_degree.value() - 1e-8)
                golden = false;
        });
    }

    std::string corpus = std::to_string(scanned) + " graphs (" + std::to_string(nonsingular) +
                         " non-singular), exhaustive n <= 8";
    suite.add("bound_validity", validity, corpus + (validity ? "" : ", first offender " + bad));
    suite.add("bound_dominance", dominance, corpus + (dominance ? "" : ", first offender " + bad));
    suite.add("variance_c_identity", identity, corpus);
    suite.add("golden_implies_conjecture2", golden, corpus);
    suite.add("spectrum_trace", trace_ok, corpus);
    suite.add("spectrum_frobenius", frob_ok, corpus);
    suite.add("lambda1_vs_avg_degree", perron, corpus);
    suite.add("bipartite_symmetry", bip_sym, corpus);
    suite.add("regular_det_divisibility", regular_div, corpus);
    suite.add("yuan_bound", yuan, corpus);
    suite.add("hoffman_chromatic3", hoffman, corpus);
}

Graph random_graph(std::mt19937& rng, int n) {
    std::bernoulli_distribution coin(0.5);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

void composition_check(Suite& suite) {
    std::mt19937 rng(987654321);
    std::uniform_int_distribution<int> size(5, 8);
    int done = 0;
    bool pass = true;
    std::string detail = "200 random non-singular conjecture-passing pairs";
    while (done < 200) {
        Graph a = random_graph(rng, size(rng));
        Graph b = random_graph(rng, size(rng));
        if (!is_nonsingular(a) || !is_nonsingular(b)) continue;
        Spectrum sa = eigenvalues(a), sb = eigenvalues(b);
        DegreeProfile pa = degree_profile(a), pb = degree_profile(b);
        if (conjecture2_check(true, sa.energy, pa.order, pa.avg_degree.value()) != Verdict::Pass)
            continue;
        if (conjecture2_check(true, sb.energy, pb.order, pb.avg_degree.value()) != Verdict::Pass)
            continue;
        ++done;
        Graph u = disjoint_union(a, b);
        Spectrum su = eigenvalues(u);
        DegreeProfile pu = degree_profile(u);
        if (std::abs(su.energy - sa.energy - sb.energy) > 1e-9) {
            pass = false;
            detail = "energy not additive on a pair of orders " + std::to_string(pa.order) + "+" +
                     std::to_string(pb.order);
            break;
        }
        if (conjecture2_check(true, su.energy, pu.order, pu.avg_degree.value()) != Verdict::Pass) {
            pass = false;
            detail = "union fails conjecture 2 despite both parts passing";
            break;
        }
    }
    suite.add("composition_disjoint_union", pass, detail);
}

}  // namespace

std::vector<PropertyResult> run_property_suite(int grid_points) {
    if (grid_points <= 0) throw std::invalid_argument("grid_points must be positive");
    Suite suite;
    lemma_grids(suite, grid_points);
    exhaustive_sweeps(suite);
    composition_check(suite);
    return suite.results;
}

}  // namespace genergy
