#include "sep/cycles.hpp"

#include <algorithm>
#include <stdexcept>

#include "sep/errors.hpp"

namespace sep {

namespace {

struct CycleDfs {
    const Graph& g;
    int max_len;
    long long cap;
    long long found = 0;
    std::vector<Cycle>& out;
    std::vector<int> path;
    std::vector<int> path_edges;
    std::vector<bool> on_path;

    CycleDfs(const Graph& g_, int max_len_, long long cap_, std::vector<Cycle>& out_)
        : g(g_), max_len(max_len_), cap(cap_), out(out_), on_path(static_cast<size_t>(g_.vertex_count()), false) {}

    // Grows simple paths from the root (the minimal vertex of any cycle it
    // emits); interior vertices stay above the root. A closing edge back to
    // the root is accepted only when path[1] < path.back(), so each
    // unoriented cycle is emitted exactly once and already in canonical form.
    void extend() {
        int v = path.back();
        int root = path[0];
        for (auto [w, e] : g.adj(v)) {
            if (w == root && path.size() >= 3 && path[1] < v) {
                if (++found > cap) throw CapExceeded("enumerate_cycles: more than " + std::to_string(cap) + " cycles");
                Cycle c;
                c.vertices = path;
                c.edge_indices = path_edges;
                c.edge_indices.push_back(e);
                out.push_back(std::move(c));
            } else if (w > root && !on_path[static_cast<size_t>(w)] &&
                       static_cast<int>(path.size()) < max_len) {
                on_path[static_cast<size_t>(w)] = true;
                path.push_back(w);
                path_edges.push_back(e);
                extend();
                path.pop_back();
                path_edges.pop_back();
                on_path[static_cast<size_t>(w)] = false;
            }
        }
    }
};

} // namespace

std::vector<Cycle> enumerate_cycles(const Graph& g, int max_len, const CycleLimits& limits) {
    if (max_len < 3) throw std::invalid_argument("enumerate_cycles: max_len >= 3 required");
    std::vector<Cycle> out;
    CycleDfs dfs(g, max_len, limits.max_cycles, out);
    for (int root = 0; root < g.vertex_count(); ++root) {
        dfs.path = {root};
        dfs.path_edges.clear();
        dfs.on_path[static_cast<size_t>(root)] = true;
        dfs.extend();
        dfs.on_path[static_cast<size_t>(root)] = false;
    }
    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.vertices < b.vertices;
    });
    return out;
}

std::map<int, long long> count_cycles_by_length(const Graph& g, int max_len, const CycleLimits& limits) {
    std::map<int, long long> counts;
    for (const auto& c : enumerate_cycles(g, max_len, limits)) counts[c.length()]++;
    return counts;
}

} // namespace sep
