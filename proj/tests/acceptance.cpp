// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <set>
#include <string>

#include "genergy/bounds.hpp"
#include "genergy/coloring.hpp"
#include "genergy/enumerate.hpp"
#include "genergy/graph6.hpp"
#include "genergy/verify.hpp"
#include "oracles.hpp"

using namespace genergy;

namespace {

// Uncovered-census regression constant at order 8, established at first
// build from the exhaustive scan and pinned since. It is zero because
// lambda_1 <= n - 1 = 7 <= 7.11 at this order, so the spectral-radius
// condition alone already covers every non-singular graph.
constexpr long long kUncoveredAtOrder8 = 0;

struct Gate {
    int fails = 0;

    void report(int idx, const std::string& name, bool pass, const std::string& detail) {
        std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", idx, name.c_str(),
                    detail.c_str());
        std::fflush(stdout);
        if (!pass) ++fails;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Graph paw() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    return g;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

void criterion1_order4_exceptions(Gate& gate) {
    auto t0 = std::chrono::steady_clock::now();
    EnumerationSummary s = scan_order(4);
    double elapsed = seconds_since(t0);

    bool pass = s.conjecture2_violations.size() == 2;
    std::string detail;
    if (pass) {
        const double p4_energy = 2.0 * std::sqrt(5.0);
        bool saw_p4 = false, saw_paw = false;
        for (const auto& v : s.conjecture2_violations) {
            std::uint64_t form = canonical_form(from_graph6(v.graph6));
            if (form == canonical_form(path(4))) {
                saw_p4 = std::abs(v.energy - p4_energy) <= 1e-6 && std::abs(v.target - 4.5) <= 1e-9;
            } else if (form == canonical_form(paw())) {
                // the second exception: energy just below 5, consistent with >= 4.96
                saw_paw = v.energy >= 4.96 && v.energy < 5.0 && std::abs(v.target - 5.0) <= 1e-9 &&
                          std::abs(v.energy - 4.9623886082) <= 1e-6;
            }
        }
        pass = saw_p4 && saw_paw && elapsed < 1.0;
        detail = "P4 margin " + fmt(p4_energy - 4.5) + ", second graph is the paw, " +
                 fmt(elapsed) + " s";
    } else {
        detail = "expected 2 violations, got " + std::to_string(s.conjecture2_violations.size());
    }
    gate.report(1, "order-4 exceptions", pass, detail);
}

EnumerationSummary criterion2_computer_check(Gate& gate) {
    bool pass = true;
    std::string detail;

    auto t0 = std::chrono::steady_clock::now();
    EnumerationSummary s8;
    for (int n = 5; n <= 8; ++n) {
        EnumerationSummary s = scan_order(n);
        if (!s.conjecture2_violations.empty() || !s.conjecture1_violations.empty()) {
            pass = false;
            detail = "violation at n = " + std::to_string(n);
        }
        if (n == 8) s8 = std::move(s);
    }
    double small_elapsed = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    ScanOptions four;
    four.workers = 4;
    EnumerationSummary s9 = scan_order(9, four);
    double nine_elapsed = seconds_since(t0);
    if (s9.total_graphs != 274668 || !s9.conjecture2_violations.empty() ||
        !s9.conjecture1_violations.empty()) {
        pass = false;
        detail = "violation or wrong count at n = 9";
    }
    if (small_elapsed >= 60.0 || nine_elapsed >= 900.0) {
        pass = false;
        detail = "runtime budget exceeded";
    }
    if (pass)
        detail = "n = 5..9 clean; n <= 8 in " + fmt(small_elapsed) + " s, n = 9 in " +
                 fmt(nine_elapsed) + " s with 4 workers";
    gate.report(2, "computer-check reproduction, n = 5..9", pass, detail);
    return s8;
}

void criterion3_counts(Gate& gate) {
    const std::uint64_t expected[] = {11, 34, 156, 1044, 12346};
    bool pass = true;
    for (int n = 4; n <= 8; ++n) {
        std::uint64_t count = 0;
        for_each_graph(n, [&](const Graph&) { ++count; });
        if (count != expected[n - 4]) pass = false;
    }
    // independent labeled brute-force verification at n <= 6
    for (int n = 4; n <= 6; ++n) {
        auto classes = oracles::all_classes_brute(n);
        std::set<std::uint64_t> emitted;
        for_each_graph(n, [&](const Graph& g) { emitted.insert(canonical_form(g)); });
        if (emitted != classes) pass = false;
    }
    gate.report(3, "enumeration counts 11/34/156/1044/12346", pass,
                "n <= 6 cross-checked against the labeled brute-force oracle");
}

void criterion4_validity_dominance(Gate& gate) {
    bool pass = true;
    std::string detail = "all non-singular graphs, exhaustive n <= 8";
    std::uint64_t checked = 0;
    for (int n = 1; n <= 8 && pass; ++n) {
        for_each_graph(n, [&](const Graph& g) {
            if (!pass) return;
            ExactDet det = exact_determinant(g);
            if (det.value == 0) return;
            ++checked;
            Spectrum sp = eigenvalues(g);
            int m = g.size();
            double absdet = std::abs(det.value.convert_to<double>());
            double lo = bound_log(n, sp.mu1, absdet);
            double am = bound_amgm(n, sp.mu1, absdet);
            double va = bound_variance(n, m, sp.mu1, sp.mu2, absdet);
            if (!(sp.energy + 1e-8 >= va && va >= am - 1e-9 && am >= lo - 1e-9)) {
                pass = false;
                detail = "offender " + to_graph6(g);
            }
        });
    }
    if (pass) detail = std::to_string(checked) + " non-singular graphs, zero exceptions";
    gate.report(4, "bound validity and dominance chain", pass, detail);
}

void criterion5_paper_constants(Gate& gate) {
    bool pass = std::abs(lemma22_margin(1.0)) <= 1e-12;
    pass = pass && std::abs(lemma22_margin(4.5) - 0.52) <= 0.01;
    pass = pass && std::abs(lemma22_margin(7.11) - 0.0004) <= 0.0005;
    pass = pass && std::abs((7.11 - std::log(7.11)) - 5.1485) <= 0.0001;
    pass = pass && std::abs((11 - 2 * std::log(11.0) - 3) - 3.20) <= 0.01;
    pass = pass && std::abs((12 - 2 * std::log(12.0) - 3) - 4.03) <= 0.01;
    gate.report(5, "paper constants", pass,
                "lemma margins at 1, 4.5, 7.11; 7.11 - ln 7.11; n - 2 ln n - 3 at 11, 12");
}

void criterion6_lemma_grids(Gate& gate) {
    bool pass = true;
    std::string detail = "grids clean";
    double worst = 1e9;
    for (int i = 1; i <= 100000; ++i) {
        double x = 0.001 + (7.11 - 0.001) * i / 100000;
        worst = std::min(worst, lemma22_margin(x));
    }
    if (worst < -1e-12) {
        pass = false;
        detail = "lemma22 margin " + fmt(worst);
    }
    double worst5 = 1e9, worst6 = 1e9;
    for (int i = 0; i <= 100000; ++i) {
        double x = 13.0 + (1e4 - 13.0) * i / 100000;
        worst5 = std::min(worst5, lemma35_margin(x));
        worst6 = std::min(worst6, lemma36_margin(x));
    }
    if (worst5 < -1e-12 || worst6 < -1e-12) {
        pass = false;
        detail = "lemma35/36 margins " + fmt(worst5) + ", " + fmt(worst6);
    }
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> cd(0.0, 10.0), bd(-50.0, 50.0), dd(-10.0, 10.0);
    for (int trial = 0; trial < 100 && pass; ++trial) {
        double b = bd(rng), c = cd(rng), d = dd(rng);
        double lo = std::max(c, 1.0), hi = c + 100.0, prev = lemma34_f(lo, b, c, d);
        for (int i = 1; i <= 2000; ++i) {
            double x = lo + (hi - lo) * i / 2000;
            double cur = lemma34_f(x, b, c, d);
            if (cur > prev + 1e-12) {
                pass = false;
                detail = "lemma34 increase at x = " + fmt(x);
                break;
            }
            prev = cur;
        }
    }
    gate.report(6, "lemma grids (1e5 points; 100 draws)", pass, detail);
}

void criterion7_structural_properties(Gate& gate) {
    bool pass = true;
    std::string detail = "exhaustive n <= 8, zero exceptions";
    for (int n = 1; n <= 8 && pass; ++n) {
        for_each_graph(n, [&](const Graph& g) {
            if (!pass) return;
            Spectrum sp = eigenvalues(g);
            DegreeProfile prof = degree_profile(g);
            ExactDet det = exact_determinant(g);
            if (auto k = is_regular(g); k && *k >= 1 && det.value % *k != 0) {
                pass = false;
                detail = "k | det fails on " + to_graph6(g);
                return;
            }
            if (is_bipartite(g)) {
                for (int i = 0, j = n - 1; i <= j; ++i, --j)
                    if (std::abs(sp.eigenvalues[i] + sp.eigenvalues[j]) > 1e-9) {
                        pass = false;
                        detail = "bipartite symmetry fails on " + to_graph6(g);
                        return;
                    }
            }
            if (g.size() > 0 && !is_bipartite(g) && chromatic_number(g) == 3 &&
                sp.eigenvalues.back() > -sp.mu1 / 2 + 1e-8) {
                pass = false;
                detail = "Hoffman consequence fails on " + to_graph6(g);
                return;
            }
            if (prof.min_degree >= 1 && sp.mu1 * sp.mu1 > 2.0 * g.size() - n + 1 + 1e-8) {
                pass = false;
                detail = "Yuan bound fails on " + to_graph6(g);
                return;
            }
            if (sp.mu1 < prof.avg_degree.value() - 1e-10) {
                pass = false;
                detail = "lambda1 >= dbar fails on " + to_graph6(g);
            }
        });
    }
    gate.report(7, "structural spectral properties", pass, detail);
}

void criterion8_eigensolver_oracle(Gate& gate) {
    bool pass = true;
    std::string detail = "paths/cycles to n = 30 at 1e-9; det product at 1e-6 relative";
    constexpr double kPi = std::numbers::pi;
    for (int n = 1; n <= 30 && pass; ++n) {
        auto lam = eigenvalues(path(n)).eigenvalues;
        std::vector<double> expect(n);
        for (int k = 1; k <= n; ++k) expect[k - 1] = 2.0 * std::cos(k * kPi / (n + 1));
        std::sort(expect.begin(), expect.end(), std::greater<>());
        for (int i = 0; i < n; ++i)
            if (std::abs(lam[i] - expect[i]) > 1e-9) {
                pass = false;
                detail = "path spectrum off at n = " + std::to_string(n);
            }
    }
    for (int n = 3; n <= 30 && pass; ++n) {
        auto lam = eigenvalues(cycle(n)).eigenvalues;
        std::vector<double> expect(n);
        for (int k = 0; k < n; ++k) expect[k] = 2.0 * std::cos(2.0 * kPi * k / n);
        std::sort(expect.begin(), expect.end(), std::greater<>());
        for (int i = 0; i < n; ++i)
            if (std::abs(lam[i] - expect[i]) > 1e-9) {
                pass = false;
                detail = "cycle spectrum off at n = " + std::to_string(n);
            }
    }
    std::mt19937 rng(4242);
    for (int n = 1; n <= 10 && pass; ++n) {
        std::bernoulli_distribution coin(0.5);
        for (int trial = 0; trial < 40; ++trial) {
            Graph g(n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (coin(rng)) g.add_edge(i, j);
            double prod = 1.0;
            for (double lam : eigenvalues(g).eigenvalues) prod *= lam;
            double det = exact_determinant(g).value.convert_to<double>();
            if (std::abs(prod - det) > 1e-6 * std::max(1.0, std::abs(det))) {
                pass = false;
                detail = "det product off on " + to_graph6(g);
            }
        }
    }
    gate.report(8, "eigensolver oracle", pass, detail);
}

void criterion9_composition(Gate& gate) {
    std::mt19937 rng(555);
    std::uniform_int_distribution<int> size(5, 8);
    std::bernoulli_distribution coin(0.5);
    auto sample = [&]() {
        Graph g(size(rng));
        for (int i = 0; i < g.order(); ++i)
            for (int j = i + 1; j < g.order(); ++j)
                if (coin(rng)) g.add_edge(i, j);
        return g;
    };
    bool pass = true;
    std::string detail = "200 random non-singular conjecture-passing pairs";
    int done = 0;
    while (done < 200 && pass) {
        Graph a = sample(), b = sample();
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
            detail = "energy not additive";
        }
        if (conjecture2_check(true, su.energy, pu.order, pu.avg_degree.value()) != Verdict::Pass) {
            pass = false;
            detail = "union fails conjecture 2";
        }
    }
    gate.report(9, "composition over disjoint unions", pass, detail);
}

void criterion10_coverage_census(Gate& gate, const EnumerationSummary& s8) {
    ScanOptions four;
    four.workers = 4;
    EnumerationSummary s8w = scan_order(8, four);
    auto uncovered = s8.coverage_histogram[static_cast<int>(CoverageLabel::Uncovered)];
    auto uncovered_w = s8w.coverage_histogram[static_cast<int>(CoverageLabel::Uncovered)];
    bool stable = uncovered == uncovered_w && s8 == s8w;
    bool pinned = static_cast<long long>(uncovered) == kUncoveredAtOrder8;
    gate.report(10, "coverage census at n = 8", stable && pinned,
                "Uncovered = " + std::to_string(uncovered) + " (pinned " +
                    std::to_string(kUncoveredAtOrder8) + "), worker-count independent: " +
                    (stable ? "yes" : "no"));
}

}  // namespace

int main() {
    Gate gate;
    criterion1_order4_exceptions(gate);
    EnumerationSummary s8 = criterion2_computer_check(gate);
    criterion3_counts(gate);
    criterion4_validity_dominance(gate);
    criterion5_paper_constants(gate);
    criterion6_lemma_grids(gate);
    criterion7_structural_properties(gate);
    criterion8_eigensolver_oracle(gate);
    criterion9_composition(gate);
    criterion10_coverage_census(gate, s8);

    if (gate.fails) {
        std::printf("%d criterion(s) failed\n", gate.fails);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
