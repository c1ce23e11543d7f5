#include "epacker/graph_io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace epk {

namespace {

bool parse_int(const std::string& token, long long& out) {
    if (token.empty()) return false;
    size_t i = 0;
    if (token[0] == '-') i = 1;
    if (i == token.size()) return false;
    for (; i < token.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(token[i]))) return false;
    try {
        out = std::stoll(token);
    } catch (...) {
        return false;
    }
    return true;
}

[[noreturn]] void fail_line(int line_no, const std::string& msg) {
    throw parse_error("edge list, line " + std::to_string(line_no) + ": " + msg);
}

} // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    long long declared_n = -1;
    std::vector<std::pair<long long, long long>> raw_edges;
    std::vector<int> edge_lines;
    bool saw_content = false;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;
        if (a == "n") {
            if (saw_content) fail_line(line_no, "header \"n <count>\" must come first");
            if (!(ls >> b) || (ls >> extra))
                fail_line(line_no, "header must be exactly \"n <count>\"");
            long long n;
            if (!parse_int(b, n) || n < 0) fail_line(line_no, "bad vertex count \"" + b + "\"");
            declared_n = n;
            saw_content = true;
            continue;
        }
        if (!(ls >> b) || (ls >> extra)) fail_line(line_no, "expected \"u v\"");
        long long u, v;
        if (!parse_int(a, u) || u < 0) fail_line(line_no, "bad vertex id \"" + a + "\"");
        if (!parse_int(b, v) || v < 0) fail_line(line_no, "bad vertex id \"" + b + "\"");
        if (u == v) fail_line(line_no, "self-loop at vertex " + a);
        raw_edges.emplace_back(u, v);
        edge_lines.push_back(line_no);
        saw_content = true;
    }

    std::map<long long, int> id_of;
    std::vector<int> labels;
    if (declared_n >= 0) {
        for (auto [u, v] : raw_edges) {
            long long big = std::max(u, v);
            if (big >= declared_n)
                throw parse_error("edge list: vertex id " + std::to_string(big) +
                                  " exceeds declared count " + std::to_string(declared_n));
        }
        for (long long v = 0; v < declared_n; ++v) {
            id_of[v] = static_cast<int>(v);
            labels.push_back(static_cast<int>(v));
        }
    } else {
        for (auto [u, v] : raw_edges) {
            id_of.emplace(u, 0);
            id_of.emplace(v, 0);
        }
        int next = 0;
        for (auto& [label, id] : id_of) {
            id = next++;
            labels.push_back(static_cast<int>(label));
        }
    }

    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> seen_sorted;
    for (size_t i = 0; i < raw_edges.size(); ++i) {
        int u = id_of[raw_edges[i].first];
        int v = id_of[raw_edges[i].second];
        auto key = std::minmax(u, v);
        if (std::find(seen_sorted.begin(), seen_sorted.end(),
                      std::make_pair(key.first, key.second)) != seen_sorted.end())
            fail_line(edge_lines[i], "duplicate edge");
        seen_sorted.emplace_back(key.first, key.second);
        edges.emplace_back(u, v);
    }
    int n = static_cast<int>(labels.size());
    return Graph(n, std::move(edges), std::move(labels));
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

namespace {

[[noreturn]] void fail_g6(size_t byte_pos, const std::string& msg) {
    throw parse_error("graph6, byte " + std::to_string(byte_pos) + ": " + msg);
}

} // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    const std::string header = ">>graph6<<";
    size_t base = 0;
    if (s.rfind(header, 0) == 0) base = header.size();
    size_t pos = base;
    auto need = [&](size_t k) {
        if (pos + k > s.size()) fail_g6(s.size(), "unexpected end of input");
    };
    auto byte_at = [&](size_t p) -> int {
        unsigned char c = static_cast<unsigned char>(s[p]);
        if (c < 63 || c > 126) fail_g6(p, "byte out of printable range [63,126]");
        return c - 63;
    };

    need(1);
    long long n;
    if (static_cast<unsigned char>(s[pos]) == 126) {
        ++pos;
        need(1);
        if (static_cast<unsigned char>(s[pos]) == 126)
            fail_g6(pos, "graphs beyond 258047 vertices are not supported");
        need(3);
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | byte_at(pos + i);
        pos += 3;
    } else {
        n = byte_at(pos);
        ++pos;
    }

    long long bit_count = n * (n - 1) / 2;
    size_t body_bytes = static_cast<size_t>((bit_count + 5) / 6);
    if (s.size() - pos != body_bytes)
        fail_g6(pos, "body has " + std::to_string(s.size() - pos) + " bytes, expected " +
                         std::to_string(body_bytes));

    std::vector<std::pair<int, int>> edges;
    long long bit_index = 0;
    for (size_t b = 0; b < body_bytes; ++b) {
        int val = byte_at(pos + b);
        for (int k = 5; k >= 0; --k, ++bit_index) {
            int bit = (val >> k) & 1;
            if (bit_index >= bit_count) {
                if (bit) fail_g6(pos + b, "nonzero padding bit");
                continue;
            }
            if (bit) {
                // Bit order: (0,1), (0,2), (1,2), (0,3), ... column by column.
                long long col = 1;
                long long before = 0;
                while (before + col <= bit_index) before += col++;
                long long row = bit_index - before;
                edges.emplace_back(static_cast<int>(row), static_cast<int>(col));
            }
        }
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string serialize_graph6(const Graph& g) {
    std::string out;
    long long n = g.vertex_count();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + 63));
    } else {
        throw domain_error("graph6 output beyond 258047 vertices is not supported");
    }
    long long bit_count = n * (n - 1) / 2;
    std::vector<char> bits(static_cast<size_t>(std::max<long long>(bit_count, 0)), 0);
    for (auto [u, v] : g.edges()) {
        // u < v; position of (u, v) in column-major upper triangle order.
        long long idx = static_cast<long long>(v) * (v - 1) / 2 + u;
        bits[static_cast<size_t>(idx)] = 1;
    }
    for (long long start = 0; start < bit_count; start += 6) {
        int val = 0;
        for (int k = 0; k < 6; ++k) {
            val <<= 1;
            if (start + k < bit_count) val |= bits[static_cast<size_t>(start + k)];
        }
        out.push_back(static_cast<char>(val + 63));
    }
    return out;
}

Graph parse_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::edge_list ? parse_edge_list(text) : parse_graph6(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::edge_list ? serialize_edge_list(g) : serialize_graph6(g);
}

std::optional<GraphFormat> format_from_extension(const std::string& path) {
    auto dot = path.rfind('.');
    if (dot == std::string::npos) return std::nullopt;
    std::string ext = path.substr(dot);
    if (ext == ".g6") return GraphFormat::graph6;
    if (ext == ".edges") return GraphFormat::edge_list;
    return std::nullopt;
}

std::string to_dot(const Graph& g, const VertexSet& highlight, const std::string& name) {
    validate_vertex_set(g, highlight, "to_dot");
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v << " [label=\"" << g.label_of(v) << "\"";
        if (set_contains(highlight, v)) out << ", style=filled, fillcolor=lightblue";
        out << "];\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace epk
