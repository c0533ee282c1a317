#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "genergy/graph.hpp"

namespace genergy {

/// Parse failure for a graph6 line; offset() is the byte position within
/// the input that triggered the failure.
class graph6_error : public std::runtime_error {
public:
    graph6_error(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Decode a single graph6 line (1 <= n <= 62). An optional ">>graph6<<"
/// prefix and trailing CR/LF are tolerated.
Graph from_graph6(std::string_view line);

/// Bit-exact graph6: header byte n+63, upper-triangle bits x(0,1), x(0,2),
/// x(1,2), x(0,3), ... packed big-endian 6 per byte, each byte +63,
/// zero-padded to a byte boundary.
std::string to_graph6(const Graph& g);

}  // namespace genergy
