#include "genergy/report.hpp"

#include <cstdio>
#include <sstream>

namespace genergy {

using nlohmann::json;

std::string fmt10(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10f", x);
    return buf;
}

double round10(double x) { return std::stod(fmt10(x)); }

namespace {

json opt_num(const std::optional<double>& v) {
    if (!v) return nullptr;
    return round10(*v);
}

std::string opt_str(const std::optional<double>& v) { return v ? fmt10(*v) : "n/a"; }

json coverage_json(const BoundReport& r) {
    json arr = json::array();
    if (!r.coverage_applicable) return arr;
    if (r.coverage.empty()) {
        arr.push_back(to_string(CoverageLabel::Uncovered));
    } else {
        for (CoverageLabel l : r.coverage) arr.push_back(to_string(l));
    }
    return arr;
}

}  // namespace

json report_to_json(const BoundReport& r) {
    json j;
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["m"] = r.m;
    j["avg_degree"] = round10(r.avg_degree.value());
    j["avg_degree_exact"] = r.avg_degree.str();
    j["det"] = r.det.str();  // exact decimal integer string, never a float
    j["singular"] = r.singular;
    json eig = json::array();
    for (double lam : r.eigenvalues) eig.push_back(round10(lam));
    j["eigenvalues"] = eig;
    j["energy"] = round10(r.energy);
    j["mu1"] = round10(r.mu1);
    j["mu2"] = round10(r.mu2);
    j["bounds"] = {{"log", opt_num(r.bound_log)},
                   {"amgm", opt_num(r.bound_amgm)},
                   {"variance", opt_num(r.bound_variance)},
                   {"quantity_C", opt_num(r.quantity_C)},
                   {"conjugate", opt_num(r.bound_conjugate)}};
    j["targets"] = {{"conjecture1", round10(r.conjecture1_target)},
                    {"conjecture2", round10(r.conjecture2_target)}};
    j["verdicts"] = {{"conjecture1", to_string(r.conjecture1)},
                     {"conjecture2", to_string(r.conjecture2)}};
    j["coverage"] = coverage_json(r);
    return j;
}

std::string report_to_text(const BoundReport& r) {
    std::ostringstream out;
    out << "graph6:        " << r.graph6 << "\n";
    out << "n, m:          " << r.n << ", " << r.m << "\n";
    out << "avg degree:    " << r.avg_degree.str() << " = " << fmt10(r.avg_degree.value()) << "\n";
    out << "det A:         " << r.det.str() << (r.singular ? "  (singular)" : "") << "\n";
    out << "eigenvalues:  ";
    for (double lam : r.eigenvalues) out << ' ' << fmt10(lam);
    out << "\n";
    out << "energy:        " << fmt10(r.energy) << "\n";
    out << "mu1, mu2:      " << fmt10(r.mu1) << ", " << fmt10(r.mu2) << "\n";
    out << "bound log:     " << opt_str(r.bound_log) << "\n";
    out << "bound am-gm:   " << opt_str(r.bound_amgm) << "\n";
    out << "bound var:     " << opt_str(r.bound_variance) << "\n";
    out << "quantity C:    " << opt_str(r.quantity_C) << "\n";
    out << "bound conj:    " << opt_str(r.bound_conjugate);
    if (r.quantity_C && !r.bound_conjugate) out << "  (C > 1: use mu1 + n - 1)";
    out << "\n";
    out << "target D+d:    " << fmt10(r.conjecture1_target) << "  verdict: "
        << to_string(r.conjecture1) << "\n";
    out << "target n-1+d~: " << fmt10(r.conjecture2_target) << "  verdict: "
        << to_string(r.conjecture2) << "\n";
    out << "coverage:      ";
    if (!r.coverage_applicable) {
        out << "not-applicable";
    } else if (r.coverage.empty()) {
        out << to_string(CoverageLabel::Uncovered);
    } else {
        for (std::size_t i = 0; i < r.coverage.size(); ++i)
            out << (i ? " " : "") << to_string(r.coverage[i]);
    }
    out << "\n";
    return out.str();
}

std::string report_to_csv(const BoundReport& r) {
    std::ostringstream out;
    out << "graph6,n,m,avg_degree,det,singular,energy,mu1,mu2,"
           "bound_log,bound_amgm,bound_variance,quantity_C,bound_conjugate,"
           "target_conjecture1,target_conjecture2,verdict_conjecture1,verdict_conjecture2,"
           "coverage\n";
    out << r.graph6 << ',' << r.n << ',' << r.m << ',' << fmt10(r.avg_degree.value()) << ','
        << r.det.str() << ',' << (r.singular ? "true" : "false") << ',' << fmt10(r.energy) << ','
        << fmt10(r.mu1) << ',' << fmt10(r.mu2) << ',' << opt_str(r.bound_log) << ','
        << opt_str(r.bound_amgm) << ',' << opt_str(r.bound_variance) << ','
        << opt_str(r.quantity_C) << ',' << opt_str(r.bound_conjugate) << ','
        << fmt10(r.conjecture1_target) << ',' << fmt10(r.conjecture2_target) << ','
        << to_string(r.conjecture1) << ',' << to_string(r.conjecture2) << ',';
    if (!r.coverage_applicable) {
        out << "not-applicable";
    } else if (r.coverage.empty()) {
        out << to_string(CoverageLabel::Uncovered);
    } else {
        for (std::size_t i = 0; i < r.coverage.size(); ++i)
            out << (i ? ";" : "") << to_string(r.coverage[i]);
    }
    out << '\n';
    return out.str();
}

json summary_to_json(const EnumerationSummary& s) {
    json j;
    j["order"] = s.order;
    j["total_graphs"] = s.total_graphs;
    j["nonsingular_count"] = s.nonsingular_count;
    auto violations = [](const std::vector<Violation>& vs) {
        json arr = json::array();
        for (const auto& v : vs)
            arr.push_back({{"graph6", v.graph6},
                           {"order", v.order},
                           {"energy", round10(v.energy)},
                           {"target", round10(v.target)}});
        return arr;
    };
    j["conjecture2_violations"] = violations(s.conjecture2_violations);
    j["conjecture1_violations"] = violations(s.conjecture1_violations);
    json hist;
    for (int i = 0; i < kCoverageLabelCount; ++i)
        hist[std::string(to_string(static_cast<CoverageLabel>(i)))] = s.coverage_histogram[i];
    j["coverage_histogram"] = hist;
    return j;
}

std::string summary_to_text(const EnumerationSummary& s) {
    std::ostringstream out;
    out << "order:          " << (s.order > 0 ? std::to_string(s.order) : "mixed") << "\n";
    out << "total graphs:   " << s.total_graphs << "\n";
    out << "non-singular:   " << s.nonsingular_count << "\n";
    out << "conjecture 2 violations: " << s.conjecture2_violations.size() << "\n";
    for (const auto& v : s.conjecture2_violations)
        out << "  " << v.graph6 << "  n=" << v.order << "  energy=" << fmt10(v.energy)
            << "  target=" << fmt10(v.target) << "\n";
    out << "conjecture 1 violations: " << s.conjecture1_violations.size() << "\n";
    for (const auto& v : s.conjecture1_violations)
        out << "  " << v.graph6 << "  n=" << v.order << "  energy=" << fmt10(v.energy)
            << "  target=" << fmt10(v.target) << "\n";
    out << "coverage histogram (non-singular, n >= 5):\n";
    for (int i = 0; i < kCoverageLabelCount; ++i)
        out << "  " << to_string(static_cast<CoverageLabel>(i)) << ": " << s.coverage_histogram[i]
            << "\n";
    return out.str();
}

std::string summary_to_csv(const EnumerationSummary& s) {
    std::ostringstream out;
    out << "record,key,graph6,order,value,target\n";
    out << "metric,order,,," << s.order << ",\n";
    out << "metric,total_graphs,,," << s.total_graphs << ",\n";
    out << "metric,nonsingular_count,,," << s.nonsingular_count << ",\n";
    for (const auto& v : s.conjecture2_violations)
        out << "violation,conjecture2," << v.graph6 << ',' << v.order << ',' << fmt10(v.energy)
            << ',' << fmt10(v.target) << "\n";
    for (const auto& v : s.conjecture1_violations)
        out << "violation,conjecture1," << v.graph6 << ',' << v.order << ',' << fmt10(v.energy)
            << ',' << fmt10(v.target) << "\n";
    for (int i = 0; i < kCoverageLabelCount; ++i)
        out << "coverage," << to_string(static_cast<CoverageLabel>(i)) << ",,,"
            << s.coverage_histogram[i] << ",\n";
    return out.str();
}

}  // namespace genergy
