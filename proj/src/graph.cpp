#include "sep/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sep {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    adj_.resize(static_cast<size_t>(n));
    std::set<std::pair<int, int>> seen;
    edges_.reserve(edge_list.size());
    for (auto [a, b] : edge_list) {
        if (a == b) throw std::invalid_argument("Graph: self-loop");
        if (a > b) std::swap(a, b);
        if (a < 0 || b >= n) throw std::invalid_argument("Graph: vertex out of range");
        if (!seen.insert({a, b}).second) throw std::invalid_argument("Graph: duplicate edge");
        int idx = static_cast<int>(edges_.size());
        edges_.push_back({a, b});
        adj_[static_cast<size_t>(a)].push_back({b, idx});
        adj_[static_cast<size_t>(b)].push_back({a, idx});
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph Graph::from_edges_1based(int n, const std::vector<std::pair<int, int>>& edge_list) {
    std::vector<std::pair<int, int>> shifted;
    shifted.reserve(edge_list.size());
    for (auto [a, b] : edge_list) shifted.push_back({a - 1, b - 1});
    return Graph(n, shifted);
}

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return -1;
    const auto& nb = adj_[static_cast<size_t>(u)];
    auto it = std::lower_bound(nb.begin(), nb.end(), std::make_pair(v, -1));
    if (it != nb.end() && it->first == v) return it->second;
    return -1;
}

// ---- families ----

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n >= 1 required");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({i, j});
    return Graph(n, es);
}

Graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("complete_bipartite: part sizes >= 1 required");
    std::vector<std::pair<int, int>> es;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < n; ++b) es.push_back({a, m + b});
    return Graph(m + n, es);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n >= 3 required");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    es.push_back({0, n - 1});
    return Graph(n, es);
}

Graph path_graph(int len) {
    if (len < 1) throw std::invalid_argument("path_graph: length >= 1 required");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < len; ++i) es.push_back({i, i + 1});
    return Graph(len + 1, es);
}

Graph gn_graph(int n) {
    if (n < 3) throw std::invalid_argument("gn_graph: n >= 3 required");
    std::vector<std::pair<int, int>> es;
    es.push_back({0, 1});
    for (int k = 2; k < n; ++k) {
        es.push_back({0, k});
        es.push_back({1, k});
    }
    return Graph(n, es);
}

Graph gnk_graph(int n, int k) {
    if (k < 2 || n <= k) throw std::invalid_argument("gnk_graph: need 2 <= k < n");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) es.push_back({i, j});
    for (int i = 0; i < k; ++i)
        for (int j = k; j < n; ++j) es.push_back({i, j});
    return Graph(n, es);
}

Graph double_cone(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> es;
    for (const auto& e : g.edges()) es.push_back({e.u, e.v});
    for (int v = 0; v < n; ++v) {
        es.push_back({v, n});
        es.push_back({v, n + 1});
    }
    es.push_back({n, n + 1});
    return Graph(n + 2, es);
}

namespace {

// 2-colors g; false if an odd cycle exists.
bool bipartition(const Graph& g, std::vector<int>& color) {
    int n = g.vertex_count();
    color.assign(static_cast<size_t>(n), -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, e] : g.adj(v)) {
                (void)e;
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                    stack.push_back(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace

Graph bipartite_cone(const Graph& g) {
    std::vector<int> color;
    if (!bipartition(g, color)) throw std::invalid_argument("bipartite_cone: graph is not bipartite");
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> es;
    for (const auto& e : g.edges()) es.push_back({e.u, e.v});
    for (int v = 0; v < n; ++v) es.push_back({v, color[static_cast<size_t>(v)] == 0 ? n : n + 1});
    es.push_back({n, n + 1});
    return Graph(n + 2, es);
}

Graph build_named(Family kind, const std::vector<int>& params) {
    auto need = [&](size_t count) {
        if (params.size() != count) throw std::invalid_argument("build_named: wrong parameter count");
    };
    switch (kind) {
        case Family::complete: need(1); return complete_graph(params[0]);
        case Family::complete_bipartite: need(2); return complete_bipartite(params[0], params[1]);
        case Family::cycle: need(1); return cycle_graph(params[0]);
        case Family::path: need(1); return path_graph(params[0]);
        case Family::gn: need(1); return gn_graph(params[0]);
        case Family::gnk: need(2); return gnk_graph(params[0], params[1]);
        case Family::double_cone_path: need(1); return double_cone(path_graph(params[0]));
        case Family::bipartite_cone_cycle: {
            need(1);
            if (params[0] < 4 || params[0] % 2 != 0)
                throw std::invalid_argument("build_named: bipartite cone needs an even cycle");
            return bipartite_cone(cycle_graph(params[0]));
        }
    }
    throw std::invalid_argument("build_named: unknown family");
}

// ---- structure ----

std::vector<Component> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    int nc = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<size_t>(s)] != -1) continue;
        comp[static_cast<size_t>(s)] = nc;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, e] : g.adj(v)) {
                (void)e;
                if (comp[static_cast<size_t>(w)] == -1) {
                    comp[static_cast<size_t>(w)] = nc;
                    stack.push_back(w);
                }
            }
        }
        ++nc;
    }
    std::vector<std::vector<int>> verts(static_cast<size_t>(nc));
    for (int v = 0; v < n; ++v) verts[static_cast<size_t>(comp[static_cast<size_t>(v)])].push_back(v);

    std::vector<Component> out;
    out.reserve(static_cast<size_t>(nc));
    for (int c = 0; c < nc; ++c) {
        const auto& vs = verts[static_cast<size_t>(c)];
        std::vector<int> local(static_cast<size_t>(n), -1);
        for (size_t i = 0; i < vs.size(); ++i) local[static_cast<size_t>(vs[i])] = static_cast<int>(i);
        std::vector<std::pair<int, int>> es;
        for (const auto& e : g.edges())
            if (comp[static_cast<size_t>(e.u)] == c)
                es.push_back({local[static_cast<size_t>(e.u)], local[static_cast<size_t>(e.v)]});
        out.push_back({Graph(static_cast<int>(vs.size()), es), vs});
    }
    return out;
}

int component_count(const Graph& g) { return static_cast<int>(connected_components(g).size()); }

bool is_connected(const Graph& g) { return component_count(g) == 1; }

long long cyclomatic_number(const Graph& g) {
    return static_cast<long long>(g.edge_count()) - g.vertex_count() + component_count(g);
}

BlockDecomposition blocks(const Graph& g) {
    // Iterative Hopcroft-Tarjan with an explicit edge stack.
    int n = g.vertex_count();
    BlockDecomposition out;
    std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
    std::vector<bool> is_cut(static_cast<size_t>(n), false);
    std::vector<int> edge_stack;
    int timer = 0;

    struct Frame {
        int v;
        int parent_edge;
        size_t next;
    };

    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<size_t>(root)] != -1) continue;
        int root_children = 0;
        std::vector<Frame> stack;
        disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.adj(f.v);
            if (f.next < nb.size()) {
                auto [w, e] = nb[f.next++];
                if (e == f.parent_edge) continue;
                if (disc[static_cast<size_t>(w)] == -1) {
                    if (f.v == root) ++root_children;
                    edge_stack.push_back(e);
                    disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
                    stack.push_back({w, e, 0});
                } else if (disc[static_cast<size_t>(w)] < disc[static_cast<size_t>(f.v)]) {
                    edge_stack.push_back(e);
                    low[static_cast<size_t>(f.v)] = std::min(low[static_cast<size_t>(f.v)], disc[static_cast<size_t>(w)]);
                }
            } else {
                int v = f.v;
                int pe = f.parent_edge;
                stack.pop_back();
                if (stack.empty()) break;
                int u = stack.back().v;
                low[static_cast<size_t>(u)] = std::min(low[static_cast<size_t>(u)], low[static_cast<size_t>(v)]);
                if (low[static_cast<size_t>(v)] >= disc[static_cast<size_t>(u)]) {
                    // u closes a block; pop edges down to and including pe.
                    if (u != root || root_children > 1) is_cut[static_cast<size_t>(u)] = true;
                    std::vector<int> block;
                    while (!edge_stack.empty()) {
                        int e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(e);
                        if (e == pe) break;
                    }
                    std::sort(block.begin(), block.end());
                    out.blocks.push_back(std::move(block));
                }
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (is_cut[static_cast<size_t>(v)]) out.cut_vertices.push_back(v);
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

Component edge_induced_subgraph(const Graph& g, const std::vector<int>& edge_indices) {
    std::vector<int> verts;
    for (int e : edge_indices) {
        verts.push_back(g.edge(e).u);
        verts.push_back(g.edge(e).v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> local(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < verts.size(); ++i) local[static_cast<size_t>(verts[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    es.reserve(edge_indices.size());
    for (int e : edge_indices)
        es.push_back({local[static_cast<size_t>(g.edge(e).u)], local[static_cast<size_t>(g.edge(e).v)]});
    return {Graph(static_cast<int>(verts.size()), es), verts};
}

// ---- recognizers ----

namespace {

// Checks the two-apex shape: apexes u,v adjacent to every other vertex,
// every other vertex of degree exactly 2. apex_edge selects whether uv must
// be present (G_n, apex degree n-1) or absent (K_{2,m}, apex degree n-2).
bool two_apex_shape(const Graph& g, bool apex_edge) {
    int n = g.vertex_count();
    if (n < 3) return false;
    long long want_edges = apex_edge ? 2LL * n - 3 : 2LL * (n - 2);
    if (g.edge_count() != want_edges) return false;
    int apex_degree = apex_edge ? n - 1 : n - 2;
    std::vector<int> candidates;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == apex_degree) candidates.push_back(v);
    for (size_t i = 0; i < candidates.size(); ++i) {
        for (size_t j = i + 1; j < candidates.size(); ++j) {
            int u = candidates[i], v = candidates[j];
            if (g.has_edge(u, v) != apex_edge) continue;
            bool ok = true;
            for (int w = 0; w < n && ok; ++w) {
                if (w == u || w == v) continue;
                ok = g.degree(w) == 2 && g.has_edge(w, u) && g.has_edge(w, v);
            }
            if (ok) return true;
        }
    }
    return false;
}

} // namespace

bool is_iso_gn(const Graph& g) { return two_apex_shape(g, true); }

bool is_iso_k2m(const Graph& g) { return two_apex_shape(g, false); }

bool is_complete(const Graph& g) {
    long long n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

bool complete_bipartite_parts(const Graph& g, int& m_out, int& n_out) {
    std::vector<int> color;
    if (!bipartition(g, color)) return false;
    if (!is_connected(g) || g.edge_count() == 0) return false;
    long long a = 0, b = 0;
    for (int c : color) (c == 0 ? a : b)++;
    if (g.edge_count() != a * b) return false;
    m_out = static_cast<int>(a);
    n_out = static_cast<int>(b);
    return true;
}

// ---- graph6 ----

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    if (s.empty()) throw std::invalid_argument("graph6: empty input");
    unsigned char c0 = static_cast<unsigned char>(s[0]);
    if (c0 == 126) throw std::invalid_argument("graph6: long form (n > 62) not supported");
    if (c0 < 63 || c0 > 125) throw std::invalid_argument("graph6: bad vertex-count byte");
    int n = c0 - 63;
    long long bits_needed = static_cast<long long>(n) * (n - 1) / 2;
    long long chars_needed = (bits_needed + 5) / 6;
    if (static_cast<long long>(s.size()) - 1 != chars_needed)
        throw std::invalid_argument("graph6: wrong length");
    std::vector<std::pair<int, int>> es;
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            unsigned char c = static_cast<unsigned char>(s[static_cast<size_t>(1 + bit / 6)]);
            if (c < 63 || c > 126) throw std::invalid_argument("graph6: bad data byte");
            int val = c - 63;
            if ((val >> (5 - bit % 6)) & 1) es.push_back({i, j});
        }
    }
    return Graph(n, es);
}

std::string emit_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62) throw std::invalid_argument("graph6: n > 62 not supported (short form only)");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    long long bits = static_cast<long long>(n) * (n - 1) / 2;
    std::vector<int> groups(static_cast<size_t>((bits + 5) / 6), 0);
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.has_edge(i, j)) groups[static_cast<size_t>(bit / 6)] |= 1 << (5 - bit % 6);
    for (int v : groups) out.push_back(static_cast<char>(v + 63));
    return out;
}

// ---- edge-list text ----

Graph parse_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> es;
    int n = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u)) continue; // blank or comment-only line
        if (!(ls >> v)) throw std::invalid_argument("edge list: missing endpoint on line " + std::to_string(lineno));
        std::string rest;
        if (ls >> rest) throw std::invalid_argument("edge list: trailing tokens on line " + std::to_string(lineno));
        if (u < 1 || v < 1) throw std::invalid_argument("edge list: vertices are 1-indexed");
        n = std::max({n, u, v});
        es.push_back({u - 1, v - 1});
    }
    return Graph(n, es);
}

void emit_edge_list(const Graph& g, std::ostream& out) {
    for (const auto& e : g.edges()) out << (e.u + 1) << ' ' << (e.v + 1) << '\n';
}

} // namespace sep
