#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genergy/graph.hpp"
#include "genergy/spectra.hpp"

namespace genergy {

/// Tolerance for energy-vs-target comparisons. Per-eigenvalue error is at
/// most 1e-10 and n <= 62, so 1e-8 cleanly separates numerical noise from a
/// genuine violation (the order-4 exceptions miss their targets by ~0.03).
inline constexpr double kVerdictTolerance = 1e-8;

enum class Verdict { Pass, Fail, NotApplicable };

enum class CoverageLabel {
    Regular,
    Lambda711,
    Density2574,
    Bipartite,
    AvgDegGap,
    Planar,
    Chromatic3,
    GoldenCondition,
    CgeOne,
    Uncovered,
};
inline constexpr int kCoverageLabelCount = 10;

std::string_view to_string(Verdict v);
std::string_view to_string(CoverageLabel label);

// Lower-bound formulas. All take scalars so property tests can probe them
// off-manifold; make_report assembles them from a Graph. Each throws
// std::domain_error when its preconditions fail (in particular absdet < 1,
// i.e. a singular graph, makes every bound inapplicable).

/// n - 1 + lambda1 + ln|det A| - ln lambda1
double bound_log(int n, double lambda1, double absdet);

/// lambda1 + (n-1) * (|det A| / lambda1)^(1/(n-1))
double bound_amgm(int n, double lambda1, double absdet);

/// mu1 + (n-1) * (sqrt(mu2^2 + 2 mu2 (|det A|/mu1)^(1/(n-1)) + (2m - mu1^2)/(n-1)) - mu2)
double bound_variance(int n, int m, double mu1, double mu2, double absdet);

/// The C term of the variance bound, so bound_variance = mu1 + (n-1) C.
/// C >= 1 certifies energy >= mu1 + n - 1 >= n - 1 + avg degree.
double quantity_c(int n, int m, double mu1, double mu2, double absdet);

/// Conjugate-refined bound, valid when C <= 1:
/// mu1 + (2 mu2 (n-1) + 2 mu2 (ln|det A| - ln mu1) + 2m - mu1^2) / (1 + 2 mu2)
double bound_conjugate(int n, int m, double mu1, double mu2, double absdet);

// Sufficient-condition predicates (each certifies energy >= n - 1 + avg degree).

/// (mu1 - dbar) + (2m - n + 1 - mu1^2)/(2 mu2 + 1) >= 2 mu2/(2 mu2 + 1) * ln mu1,
/// with a slack of 1e-9 treated as satisfied.
bool cond_golden(int n, int m, double mu1, double mu2, double avg_degree);
bool cond_lambda711(double lambda1, int n);
bool cond_density(int n, int m);
bool cond_avgdeg_gap(int n, double avg_degree);
bool cond_chromatic3(int chi, double lambda1, int n);

// Inequality margins used by the proofs; each is nonnegative on its stated
// domain and the property suite checks that on dense grids.

/// x - 10/11 - (9/11) ln x - x^2/11 on (0, 7.11]
double lemma22_margin(double x);
/// (2c+1)(x-d) + (b - x^2) - 2c ln x, non-increasing for x >= max(c, 1/2)
double lemma34_f(double x, double b, double c, double d);
/// 2(x-1)/sqrt(x) - 4 - ln x on [13, inf)
double lemma35_margin(double x);
/// (x-1) sqrt(1 - (2 ln x + 4)/x) - x + ln x + 4 on [13, inf)
double lemma36_margin(double x);

/// Energy >= max degree + min degree, for non-singular graphs.
Verdict conjecture1_check(bool nonsingular, double energy, int max_degree, int min_degree);

/// Energy >= n - 1 + average degree, for non-singular graphs. Failures at
/// n = 4 are the two known exceptions; failures at n >= 5 are counterexamples.
Verdict conjecture2_check(bool nonsingular, double energy, int n, double avg_degree);

/// All sufficient conditions the graph satisfies, in enum order; empty means
/// no theorem certifies the conjecture for this graph (Uncovered). Requires
/// a non-singular graph of order >= 5. The planarity and chromatic labels
/// are evaluated only at orders within their exact-computation caps (n <= 16).
std::vector<CoverageLabel> classify(const Graph& g, const Spectrum& spectrum, const ExactDet& det,
                                    const DegreeProfile& profile);

/// Everything the paper computes about one graph.
struct BoundReport {
    std::string graph6;
    int n = 0;
    int m = 0;
    Fraction avg_degree;
    BigInt det;
    bool singular = true;
    std::vector<double> eigenvalues;
    double energy = 0, mu1 = 0, mu2 = 0;
    std::optional<double> bound_log;        // Eq-(1)-style log bound
    std::optional<double> bound_amgm;       // AM-GM bound
    std::optional<double> bound_variance;   // variance-refined bound
    std::optional<double> quantity_C;
    std::optional<double> bound_conjugate;  // populated only when C <= 1
    double conjecture1_target = 0;          // Delta + delta
    double conjecture2_target = 0;          // n - 1 + dbar
    Verdict conjecture1 = Verdict::NotApplicable;
    Verdict conjecture2 = Verdict::NotApplicable;
    bool coverage_applicable = false;       // non-singular and n >= 5
    std::vector<CoverageLabel> coverage;
};

BoundReport make_report(const Graph& g);
BoundReport make_report(const Graph& g, std::string graph6_id);

}  // namespace genergy
