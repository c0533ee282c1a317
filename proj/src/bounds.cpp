#include "genergy/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "genergy/coloring.hpp"
#include "genergy/graph6.hpp"
#include "genergy/planarity.hpp"

namespace genergy {

namespace {

constexpr double kCondTolerance = 1e-9;

void require_nonsingular(double absdet) {
    if (absdet < 1.0)
        throw std::domain_error("bound requires a non-singular graph (|det A| >= 1)");
}

double geometric_rest(int n, double lambda1, double absdet) {
    // (|det A| / lambda1)^(1/(n-1)), the geometric mean of |lambda_2..lambda_n|
    return std::pow(absdet / lambda1, 1.0 / (n - 1));
}

double variance_inner(int n, int m, double mu1, double mu2, double absdet) {
    if (n < 2) throw std::domain_error("variance bound requires n >= 2");
    if (!(mu1 >= mu2) || !(mu2 > 0.0))
        throw std::domain_error("variance bound requires mu1 >= mu2 > 0");
    require_nonsingular(absdet);
    double spread = 2.0 * m - mu1 * mu1;
    if (spread < -kEigenTolerance)
        throw std::domain_error("inconsistent spectrum: 2m < mu1^2");
    spread = std::max(spread, 0.0);
    return mu2 * mu2 + 2.0 * mu2 * geometric_rest(n, mu1, absdet) + spread / (n - 1);
}

}  // namespace

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::NotApplicable: return "not-applicable";
    }
    return "?";
}

std::string_view to_string(CoverageLabel label) {
    switch (label) {
        case CoverageLabel::Regular: return "Regular";
        case CoverageLabel::Lambda711: return "Lambda711";
        case CoverageLabel::Density2574: return "Density2574";
        case CoverageLabel::Bipartite: return "Bipartite";
        case CoverageLabel::AvgDegGap: return "AvgDegGap";
        case CoverageLabel::Planar: return "Planar";
        case CoverageLabel::Chromatic3: return "Chromatic3";
        case CoverageLabel::GoldenCondition: return "GoldenCondition";
        case CoverageLabel::CgeOne: return "CgeOne";
        case CoverageLabel::Uncovered: return "Uncovered";
    }
    return "?";
}

double bound_log(int n, double lambda1, double absdet) {
    if (!(lambda1 > 0.0)) throw std::domain_error("bound_log requires lambda1 > 0");
    require_nonsingular(absdet);
    return n - 1 + lambda1 + std::log(absdet) - std::log(lambda1);
}

double bound_amgm(int n, double lambda1, double absdet) {
    if (!(lambda1 > 0.0)) throw std::domain_error("bound_amgm requires lambda1 > 0");
    if (n < 2) throw std::domain_error("bound_amgm requires n >= 2");
    require_nonsingular(absdet);
    return lambda1 + (n - 1) * geometric_rest(n, lambda1, absdet);
}

double bound_variance(int n, int m, double mu1, double mu2, double absdet) {
    return mu1 + (n - 1) * (std::sqrt(variance_inner(n, m, mu1, mu2, absdet)) - mu2);
}

double quantity_c(int n, int m, double mu1, double mu2, double absdet) {
    return std::sqrt(variance_inner(n, m, mu1, mu2, absdet)) - mu2;
}

double bound_conjugate(int n, int m, double mu1, double mu2, double absdet) {
    double c = quantity_c(n, m, mu1, mu2, absdet);
    if (c > 1.0)
        throw std::domain_error("bound_conjugate requires C <= 1 (use mu1 + n - 1 instead)");
    double numer = 2.0 * mu2 * (n - 1) + 2.0 * mu2 * (std::log(absdet) - std::log(mu1)) +
                   2.0 * m - mu1 * mu1;
    return mu1 + numer / (1.0 + 2.0 * mu2);
}

bool cond_golden(int n, int m, double mu1, double mu2, double avg_degree) {
    if (!(mu1 > 0.0)) throw std::domain_error("cond_golden requires mu1 > 0");
    double lhs = (mu1 - avg_degree) + (2.0 * m - n + 1 - mu1 * mu1) / (2.0 * mu2 + 1.0);
    double rhs = 2.0 * mu2 / (2.0 * mu2 + 1.0) * std::log(mu1);
    return lhs >= rhs - kCondTolerance;
}

bool cond_lambda711(double lambda1, int n) { return lambda1 <= 7.11 && n >= 5; }

bool cond_density(int n, int m) { return m <= 2.574 * n && n >= 5; }

bool cond_avgdeg_gap(int n, double avg_degree) {
    return n >= 5 && avg_degree <= n - 2.0 * std::log(static_cast<double>(n)) - 3.0;
}

bool cond_chromatic3(int chi, double lambda1, int n) {
    if (chi != 3) return false;
    bool in_gap = lambda1 > 7.11 && lambda1 < 10.0;
    return !in_gap || n >= 19;
}

double lemma22_margin(double x) {
    if (!(x > 0.0) || x > 7.11) throw std::domain_error("lemma22_margin domain is (0, 7.11]");
    return x - 10.0 / 11.0 - 9.0 / 11.0 * std::log(x) - x * x / 11.0;
}

double lemma34_f(double x, double b, double c, double d) {
    if (!(x > 0.0)) throw std::domain_error("lemma34_f requires x > 0");
    if (c < 0.0) throw std::domain_error("lemma34_f requires c >= 0");
    return (2.0 * c + 1.0) * (x - d) + (b - x * x) - 2.0 * c * std::log(x);
}

double lemma35_margin(double x) {
    if (x < 13.0) throw std::domain_error("lemma35_margin domain is [13, inf)");
    return 2.0 * (x - 1.0) / std::sqrt(x) - 4.0 - std::log(x);
}

double lemma36_margin(double x) {
    if (x < 13.0) throw std::domain_error("lemma36_margin domain is [13, inf)");
    return (x - 1.0) * std::sqrt(1.0 - (2.0 * std::log(x) + 4.0) / x) - x + std::log(x) + 4.0;
}

Verdict conjecture1_check(bool nonsingular, double energy, int max_degree, int min_degree) {
    if (!nonsingular) return Verdict::NotApplicable;
    return energy >= max_degree + min_degree - kVerdictTolerance ? Verdict::Pass : Verdict::Fail;
}

Verdict conjecture2_check(bool nonsingular, double energy, int n, double avg_degree) {
    if (!nonsingular) return Verdict::NotApplicable;
    return energy >= n - 1 + avg_degree - kVerdictTolerance ? Verdict::Pass : Verdict::Fail;
}

std::vector<CoverageLabel> classify(const Graph& g, const Spectrum& spectrum, const ExactDet& det,
                                    const DegreeProfile& profile) {
    if (det.value == 0 || g.order() < 5)
        throw std::domain_error("classify requires a non-singular graph of order >= 5");

    int n = profile.order, m = profile.size;
    double dbar = profile.avg_degree.value();
    double absdet = std::abs(det.value.convert_to<double>());

    std::vector<CoverageLabel> out;
    if (is_regular(g)) out.push_back(CoverageLabel::Regular);
    if (cond_lambda711(spectrum.mu1, n)) out.push_back(CoverageLabel::Lambda711);
    if (cond_density(n, m)) out.push_back(CoverageLabel::Density2574);
    if (is_bipartite(g)) out.push_back(CoverageLabel::Bipartite);
    if (cond_avgdeg_gap(n, dbar)) out.push_back(CoverageLabel::AvgDegGap);
    if (cond_golden(n, m, spectrum.mu1, spectrum.mu2, dbar))
        out.push_back(CoverageLabel::GoldenCondition);
    if (quantity_c(n, m, spectrum.mu1, spectrum.mu2, absdet) >= 1.0 - 1e-9)
        out.push_back(CoverageLabel::CgeOne);
    if (n <= 16 && is_planar(g)) out.push_back(CoverageLabel::Planar);
    if (n <= 16 && cond_chromatic3(chromatic_number(g), spectrum.mu1, n))
        out.push_back(CoverageLabel::Chromatic3);
    std::sort(out.begin(), out.end());
    return out;
}

BoundReport make_report(const Graph& g) { return make_report(g, to_graph6(g)); }

BoundReport make_report(const Graph& g, std::string graph6_id) {
    BoundReport r;
    r.graph6 = std::move(graph6_id);

    DegreeProfile prof = degree_profile(g);
    r.n = prof.order;
    r.m = prof.size;
    r.avg_degree = prof.avg_degree;

    ExactDet det = exact_determinant(g);
    r.det = det.value;
    r.singular = det.value == 0;

    Spectrum sp = eigenvalues(g);
    r.eigenvalues = sp.eigenvalues;
    r.energy = sp.energy;
    r.mu1 = sp.mu1;
    r.mu2 = sp.mu2;

    r.conjecture1_target = prof.max_degree + prof.min_degree;
    r.conjecture2_target = r.n - 1 + prof.avg_degree.value();
    r.conjecture1 = conjecture1_check(!r.singular, r.energy, prof.max_degree, prof.min_degree);
    r.conjecture2 = conjecture2_check(!r.singular, r.energy, r.n, prof.avg_degree.value());

    if (!r.singular) {
        double absdet = std::abs(det.value.convert_to<double>());
        r.bound_log = bound_log(r.n, sp.mu1, absdet);
        r.bound_amgm = bound_amgm(r.n, sp.mu1, absdet);
        r.bound_variance = bound_variance(r.n, r.m, sp.mu1, sp.mu2, absdet);
        double c = quantity_c(r.n, r.m, sp.mu1, sp.mu2, absdet);
        r.quantity_C = c;
        if (c <= 1.0) r.bound_conjugate = bound_conjugate(r.n, r.m, sp.mu1, sp.mu2, absdet);
        if (r.n >= 5) {
            r.coverage_applicable = true;
            r.coverage = classify(g, sp, det, prof);
        }
    }
    return r;
}

}  // namespace genergy
