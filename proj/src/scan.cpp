#include <algorithm>
#include <atomic>
#include <istream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "genergy/enumerate.hpp"
#include "genergy/graph6.hpp"

namespace genergy {

namespace {

void analyze_into(const Graph& g, EnumerationSummary& s) {
    ++s.total_graphs;
    ExactDet det = exact_determinant(g);
    if (det.value == 0) return;
    ++s.nonsingular_count;

    DegreeProfile prof = degree_profile(g);
    Spectrum sp = eigenvalues(g);
    int n = prof.order;
    double dbar = prof.avg_degree.value();

    if (conjecture2_check(true, sp.energy, n, dbar) == Verdict::Fail)
        s.conjecture2_violations.push_back({to_graph6(g), n, sp.energy, n - 1 + dbar});
    if (conjecture1_check(true, sp.energy, prof.max_degree, prof.min_degree) == Verdict::Fail)
        s.conjecture1_violations.push_back(
            {to_graph6(g), n, sp.energy,
             static_cast<double>(prof.max_degree + prof.min_degree)});

    if (n >= 5) {
        auto labels = classify(g, sp, det, prof);
        if (labels.empty()) {
            ++s.coverage_histogram[static_cast<int>(CoverageLabel::Uncovered)];
        } else {
            for (CoverageLabel l : labels) ++s.coverage_histogram[static_cast<int>(l)];
        }
    }
}

void sort_violations(EnumerationSummary& s) {
    auto by_graph6 = [](const Violation& a, const Violation& b) { return a.graph6 < b.graph6; };
    std::sort(s.conjecture2_violations.begin(), s.conjecture2_violations.end(), by_graph6);
    std::sort(s.conjecture1_violations.begin(), s.conjecture1_violations.end(), by_graph6);
}

void merge_into(EnumerationSummary& acc, EnumerationSummary&& part) {
    acc.total_graphs += part.total_graphs;
    acc.nonsingular_count += part.nonsingular_count;
    for (int i = 0; i < kCoverageLabelCount; ++i)
        acc.coverage_histogram[i] += part.coverage_histogram[i];
    acc.conjecture2_violations.insert(acc.conjecture2_violations.end(),
                                      part.conjecture2_violations.begin(),
                                      part.conjecture2_violations.end());
    acc.conjecture1_violations.insert(acc.conjecture1_violations.end(),
                                      part.conjecture1_violations.begin(),
                                      part.conjecture1_violations.end());
}

}  // namespace

EnumerationSummary scan_order(int n, const ScanOptions& options) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("scan supports 1 <= n <= 10, got " + std::to_string(n));
    if (n == 10 && !options.allow_long_runs)
        throw std::invalid_argument("the n = 10 exhaustive scan must be enabled explicitly");

    EnumerationSummary summary;
    summary.order = n;

    constexpr int kSplitLevel = 6;  // 156 disjoint generation subtrees
    int workers = std::max(1, options.workers);

    if (workers == 1 || n <= kSplitLevel) {
        for_each_graph(n, [&](const Graph& g) { analyze_into(g, summary); });
        sort_violations(summary);
        return summary;
    }

    // Work is split by generation subtree: each level-6 canonical graph owns
    // the canonical descendants of its prefix, so subtrees are disjoint and
    // the merged summary is independent of scheduling.
    std::vector<Graph> base = generate_all(kSplitLevel);
    std::atomic<std::size_t> next{0};
    std::mutex merge_mutex;

    auto worker = [&]() {
        EnumerationSummary local;
        // recursion via explicit lambda over the subtree
        std::function<void(const Graph&, int)> expand = [&](const Graph& h, int level) {
            for (std::uint32_t mask = 0; mask < (1u << level); ++mask) {
                Graph candidate(level + 1);
                {
                    // rebuild prefix + new column
                    for (int u = 0; u < level; ++u)
                        for (int v = u + 1; v < level; ++v)
                            if (h.has_edge(u, v)) candidate.add_edge(u, v);
                    for (int u = 0; u < level; ++u)
                        if ((mask >> u) & 1) candidate.add_edge(u, level);
                }
                if (!is_canonical(candidate)) continue;
                if (level + 1 == n)
                    analyze_into(candidate, local);
                else
                    expand(candidate, level + 1);
            }
        };
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= base.size()) break;
            expand(base[i], kSplitLevel);
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        merge_into(summary, std::move(local));
    };

    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    sort_violations(summary);
    return summary;
}

StreamScanResult scan_stream(std::istream& in, const ScanOptions& options) {
    StreamScanResult result;
    int common_order = -1;
    result.ingest = ingest_graph6(in, options.strict_parse, [&](Graph&& g) {
        if (common_order == -1)
            common_order = g.order();
        else if (common_order != g.order())
            common_order = 0;
        analyze_into(g, result.summary);
    });
    result.summary.order = std::max(common_order, 0);
    sort_violations(result.summary);
    return result;
}

}  // namespace genergy
