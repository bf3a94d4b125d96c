#include "oddminor/graph.hpp"

#include <cstdlib>
#include <sstream>

#include "oddminor/errors.hpp"

namespace oddminor {

bool guard_override_enabled() {
    const char* e = std::getenv("ODDMINOR_GUARD_OVERRIDE");
    return e && *e && std::string(e) != "0";
}

void check_size_guard(int n, int limit, const char* op) {
    if (n > limit && !guard_override_enabled())
        throw guard_error(std::string(op) + ": size guard n <= " + std::to_string(limit) +
                          " exceeded (n = " + std::to_string(n) + ")");
}

namespace {

// graph6 size field: one byte for n <= 62, "~" + 3 bytes up to 258047.
// Returns n and advances pos.
int g6_read_size(const std::string& s, size_t& pos) {
    if (pos >= s.size()) throw parse_error("graph6: empty input");
    unsigned c = (unsigned char)s[pos];
    if (c < 63 || c > 126)
        throw parse_error("graph6: invalid header byte at offset " + std::to_string(pos));
    if (c != 126) {
        ++pos;
        return int(c - 63);
    }
    ++pos;
    if (pos < s.size() && (unsigned char)s[pos] == 126)
        throw parse_error("graph6: graphs with n > 258047 not supported (offset " +
                          std::to_string(pos) + ")");
    int n = 0;
    for (int i = 0; i < 3; ++i, ++pos) {
        if (pos >= s.size()) throw parse_error("graph6: truncated size field at offset " +
                                               std::to_string(pos));
        unsigned b = (unsigned char)s[pos];
        if (b < 63 || b > 126)
            throw parse_error("graph6: out-of-range size byte at offset " + std::to_string(pos));
        n = (n << 6) | int(b - 63);
    }
    return n;
}

}  // namespace

Graph parse_graph6(const std::string& text) {
    // strip trailing newline/space
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (!s.empty() && s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    if (s.empty()) throw parse_error("graph6: empty input");

    size_t pos = 0;
    int n = g6_read_size(s, pos);
    Graph g(n);
    long bits_needed = (long)n * (n - 1) / 2;
    long bit = 0;
    int u = 0, v = 1;  // upper triangle, column-major: (0,1),(0,2),(1,2),(0,3),...
    while (bit < bits_needed) {
        if (pos >= s.size())
            throw parse_error("graph6: truncated bit payload at offset " + std::to_string(pos));
        unsigned c = (unsigned char)s[pos];
        if (c < 63 || c > 126)
            throw parse_error("graph6: out-of-range payload byte at offset " + std::to_string(pos));
        unsigned x = c - 63;
        for (int k = 5; k >= 0 && bit < bits_needed; --k, ++bit) {
            if ((x >> k) & 1) g.add_edge(u, v);
            if (++u == v) {
                u = 0;
                ++v;
            }
        }
        ++pos;
    }
    if (pos != s.size())
        throw parse_error("graph6: trailing bytes at offset " + std::to_string(pos));
    return g;
}

std::string encode_graph6(const Graph& g) {
    int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(char(63 + n));
    } else {
        out.push_back(126);
        out.push_back(char(63 + ((n >> 12) & 63)));
        out.push_back(char(63 + ((n >> 6) & 63)));
        out.push_back(char(63 + (n & 63)));
    }
    unsigned x = 0;
    int k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            x = (x << 1) | (g.has_edge(u, v) ? 1u : 0u);
            if (++k == 6) {
                out.push_back(char(63 + x));
                x = 0;
                k = 0;
            }
        }
    if (k) out.push_back(char(63 + (x << (6 - k))));
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    if (!(in >> tok)) throw parse_error("edge list: empty input");

    if (tok == "c" || tok == "p") {
        // DIMACS
        std::istringstream din(text);
        std::string line;
        int n = -1;
        Graph g;
        auto load = [&](int u, int v) {
            if (u < 1 || v < 1 || u > n || v > n)
                throw parse_error("dimacs: vertex index out of range: " + std::to_string(u) + " " +
                                  std::to_string(v));
            if (u == v) throw parse_error("dimacs: self-loop at vertex " + std::to_string(u));
            g.add_edge(u - 1, v - 1);
        };
        while (std::getline(din, line)) {
            std::istringstream ls(line);
            std::string kind;
            if (!(ls >> kind) || kind == "c") continue;
            if (kind == "p") {
                std::string fmt;
                long m;
                if (!(ls >> fmt >> n >> m) || n < 0) throw parse_error("dimacs: bad p line");
                g = Graph(n);
            } else if (kind == "e") {
                if (n < 0) throw parse_error("dimacs: e line before p line");
                int u, v;
                if (!(ls >> u >> v)) throw parse_error("dimacs: bad e line");
                load(u, v);
            } else {
                throw parse_error("dimacs: unknown line kind '" + kind + "'");
            }
        }
        if (n < 0) throw parse_error("dimacs: missing p line");
        return g;
    }

    int n;
    try {
        size_t idx;
        n = std::stoi(tok, &idx);
        if (idx != tok.size()) throw std::invalid_argument("");
    } catch (...) {
        throw parse_error("edge list: bad vertex count '" + tok + "'");
    }
    if (n < 0) throw parse_error("edge list: negative vertex count");
    Graph g(n);
    int u, v;
    while (in >> tok) {
        try {
            u = std::stoi(tok);
        } catch (...) {
            throw parse_error("edge list: bad token '" + tok + "'");
        }
        if (!(in >> v)) throw parse_error("edge list: dangling endpoint " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw parse_error("edge list: index out of range: " + std::to_string(u) + " " +
                              std::to_string(v));
        if (u == v) throw parse_error("edge list: self-loop at vertex " + std::to_string(u));
        g.add_edge(u, v);
    }
    return g;
}

Graph complement(const Graph& g) {
    Graph c(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.n()) throw precondition_error("induced_subgraph: universe mismatch");
    InducedSubgraph out;
    out.old_to_new.assign(g.n(), -1);
    s.for_each([&](int v) {
        out.old_to_new[v] = int(out.new_to_old.size());
        out.new_to_old.push_back(v);
    });
    out.graph = Graph(int(out.new_to_old.size()));
    for (size_t i = 0; i < out.new_to_old.size(); ++i)
        for (size_t j = i + 1; j < out.new_to_old.size(); ++j)
            if (g.has_edge(out.new_to_old[i], out.new_to_old[j]))
                out.graph.add_edge(int(i), int(j));
    return out;
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& inside) {
    std::vector<VertexSet> comps;
    VertexSet seen(g.n());
    inside.for_each([&](int start) {
        if (seen.test(start)) return;
        VertexSet comp(g.n());
        std::vector<int> stack{start};
        seen.set(start);
        comp.set(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            VertexSet nb = g.neighbors(v) & inside;
            nb -= seen;
            nb.for_each([&](int w) {
                seen.set(w);
                comp.set(w);
                stack.push_back(w);
            });
        }
        comps.push_back(std::move(comp));  // starts are visited ascending => ordered
    });
    return comps;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    return components_within(g, VertexSet::full(g.n()));
}

}  // namespace oddminor
