#include "fallcolor/graph6.hpp"

#include <sstream>

namespace fallcolor {

namespace {

constexpr int kMaxLongForm = 258047; // largest n of the 4-byte size form

int sextet(unsigned char c, size_t pos) {
    if (c < 63 || c > 126)
        throw Graph6Error(Graph6Error::Kind::invalid_char,
                          "invalid graph6 byte 0x" + std::to_string(static_cast<int>(c)) +
                              " at position " + std::to_string(pos));
    return c - 63;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    size_t pos = 0;
    auto need = [&](const char* what) {
        if (pos >= text.size())
            throw Graph6Error(Graph6Error::Kind::malformed_length,
                              std::string("graph6 input truncated while reading ") + what);
    };

    need("size");
    long long n;
    if (text[pos] != '~') {
        n = sextet(static_cast<unsigned char>(text[pos]), pos);
        ++pos;
    } else {
        ++pos;
        need("size");
        if (text[pos] == '~')
            throw Graph6Error(Graph6Error::Kind::unsupported_size,
                              "8-byte graph6 size form (n > 258047) is not supported");
        n = 0;
        for (int i = 0; i < 3; ++i) {
            need("size");
            n = (n << 6) | sextet(static_cast<unsigned char>(text[pos]), pos);
            ++pos;
        }
        if (n <= 62)
            throw Graph6Error(Graph6Error::Kind::malformed_length,
                              "non-canonical long size form for n=" + std::to_string(n));
    }
    if (n == 0)
        throw Graph6Error(Graph6Error::Kind::unsupported_size, "graph on zero vertices is not representable");

    const long long nbits = n * (n - 1) / 2;
    const long long nbytes = (nbits + 5) / 6;
    if (static_cast<long long>(text.size() - pos) < nbytes)
        throw Graph6Error(Graph6Error::Kind::malformed_length,
                          "graph6 body too short: expected " + std::to_string(nbytes) + " bytes, got " +
                              std::to_string(text.size() - pos));
    if (static_cast<long long>(text.size() - pos) > nbytes)
        throw Graph6Error(Graph6Error::Kind::trailing_garbage,
                          "trailing bytes after a complete graph6 encoding");

    std::vector<VertexSet> rows(static_cast<size_t>(n), VertexSet(static_cast<int>(n)));
    long long bit = 0;
    int i = 0, j = 1; // current upper-triangle cell, column-major: (0,1),(0,2),(1,2),...
    for (long long b = 0; b < nbytes; ++b) {
        const int s = sextet(static_cast<unsigned char>(text[pos + static_cast<size_t>(b)]),
                             pos + static_cast<size_t>(b));
        for (int k = 5; k >= 0; --k, ++bit) {
            const bool on = (s >> k) & 1;
            if (bit >= nbits) {
                if (on)
                    throw Graph6Error(Graph6Error::Kind::padding_bit,
                                      "set bit inside graph6 padding at bit " + std::to_string(bit));
                continue;
            }
            if (on) {
                rows[static_cast<size_t>(i)].set(j);
                rows[static_cast<size_t>(j)].set(i);
            }
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return Graph::from_adjacency(std::move(rows));
}

std::string to_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= kMaxLongForm) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw InvalidArgument("to_graph6 supports at most n=258047, got n=" + std::to_string(n));
    }

    int acc = 0, nb = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
    return out;
}

std::string to_dot(const Graph& g, const std::vector<std::string>& labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != g.vertex_count())
        throw InvalidArgument("to_dot: label count does not match vertex count");
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        os << "  " << v;
        if (!labels.empty()) os << " [label=\"" << labels[static_cast<size_t>(v)] << "\"]";
        os << ";\n";
    }
    for (int u = 0; u < g.vertex_count(); ++u)
        g.neighbors(u).for_each([&](int v) {
            if (u < v) os << "  " << u << " -- " << v << ";\n";
        });
    os << "}\n";
    return os.str();
}

} // namespace fallcolor
