#include "genergy/graph6.hpp"

namespace genergy {

Graph from_graph6(std::string_view line) {
    constexpr std::string_view kPrefix = ">>graph6<<";
    std::size_t base = 0;
    std::string_view s = line;
    if (s.starts_with(kPrefix)) {
        s.remove_prefix(kPrefix.size());
        base = kPrefix.size();
    }
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) throw graph6_error("empty graph6 line", base);

    for (std::size_t i = 0; i < s.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw graph6_error("byte outside graph6 alphabet", base + i);
    }

    unsigned char header = static_cast<unsigned char>(s[0]);
    if (header == 126) throw graph6_error("multi-byte order header: n > 62 unsupported", base);
    int n = header - 63;
    if (n < 1) throw graph6_error("graph order must be at least 1", base);

    int bits = n * (n - 1) / 2;
    std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() - 1 < need)
        throw graph6_error("truncated payload: expected " + std::to_string(need) + " payload bytes",
                           base + s.size());
    if (s.size() - 1 > need) throw graph6_error("unexpected trailing byte", base + 1 + need);

    Graph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int value = s[1 + bit / 6] - 63;
            if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    int n = g.order();
    int bits = n * (n - 1) / 2;
    std::string out(1 + static_cast<std::size_t>((bits + 5) / 6), '?');
    out[0] = static_cast<char>(63 + n);
    int bit = 0;
    int value = 0;
    std::size_t pos = 1;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (bit % 6 == 5) {
                out[pos++] = static_cast<char>(63 + value);
                value = 0;
            }
        }
    }
    if (bit % 6 != 0) out[pos++] = static_cast<char>(63 + (value << (6 - bit % 6)));
    return out;
}

}  // namespace genergy
