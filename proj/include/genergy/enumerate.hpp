#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "genergy/bounds.hpp"
#include "genergy/graph.hpp"

namespace genergy {

/// Lexicographically maximal upper-triangle bit string over all vertex
/// permutations, in graph6 bit order (column-major), packed into the low
/// n(n-1)/2 bits of the result with the first bit most significant.
/// Permutation-invariant and distinguishes non-isomorphic graphs of equal
/// order. n <= 10.
std::uint64_t canonical_form(const Graph& g);

/// True when the identity labeling already attains the lexicographic
/// maximum, i.e. the graph is the canonical representative of its class.
bool is_canonical(const Graph& g);

/// Visit one canonically labeled representative per isomorphism class of
/// simple graphs on n vertices (disconnected ones included), in a fixed
/// deterministic order. 1 <= n <= 10.
void for_each_graph(int n, const std::function<void(const Graph&)>& fn);

/// Collecting wrapper around for_each_graph; intended for small n.
std::vector<Graph> generate_all(int n);

struct IngestStats {
    std::uint64_t parsed = 0;
    std::vector<std::pair<std::size_t, std::string>> errors;  // (line number, message)
};

/// Streaming graph6 decode, one line per graph; blank lines are skipped.
/// In lenient mode malformed lines are recorded with their line numbers and
/// processing continues; in strict mode the first malformed line throws.
IngestStats ingest_graph6(std::istream& in, bool strict,
                          const std::function<void(Graph&&)>& on_graph);

std::vector<Graph> ingest_graph6(std::istream& in, bool strict);

struct Violation {
    std::string graph6;
    int order = 0;
    double energy = 0;
    double target = 0;
};

struct EnumerationSummary {
    int order = 0;  // 0 for corpus scans of mixed order
    std::uint64_t total_graphs = 0;
    std::uint64_t nonsingular_count = 0;
    std::vector<Violation> conjecture2_violations;
    std::vector<Violation> conjecture1_violations;
    // Indexed by CoverageLabel; the Uncovered slot counts non-singular graphs
    // of order >= 5 that no sufficient condition certifies.
    std::array<std::uint64_t, kCoverageLabelCount> coverage_histogram{};

    bool operator==(const EnumerationSummary&) const;
};

bool operator==(const Violation& a, const Violation& b);

struct ScanOptions {
    int workers = 1;
    bool allow_long_runs = false;  // gates the n = 10 exhaustive run
    bool strict_parse = false;     // corpus scans abort on malformed lines
};

/// Exhaustive scan over all isomorphism classes of order n: exact
/// non-singularity, spectrum, both conjecture verdicts and coverage labels
/// per graph. Violation lists are sorted by graph6 string, so the summary is
/// independent of the worker count.
EnumerationSummary scan_order(int n, const ScanOptions& options = {});

struct StreamScanResult {
    EnumerationSummary summary;
    IngestStats ingest;
};

/// Scan a graph6 corpus from a stream (single-threaded).
StreamScanResult scan_stream(std::istream& in, const ScanOptions& options = {});

/// A violation of order >= 5 would be a counterexample to the conjecture.
bool has_unexpected_violation(const EnumerationSummary& s);

/// 0 when no unexpected violation, 2 otherwise.
int exit_code_for(const EnumerationSummary& s);

}  // namespace genergy
