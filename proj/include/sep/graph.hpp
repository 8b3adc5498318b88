#ifndef SEP_GRAPH_HPP
#define SEP_GRAPH_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace sep {

// Vertices are 0-indexed internally. Every text interface (edge lists,
// reports, vertex labels in complexes) is 1-indexed; conversion happens at
// the I/O boundary only.
struct Edge {
    int u, v; // u < v
};

class Graph {
public:
    Graph() = default;

    // 0-based endpoint pairs; rejects self-loops, duplicates, out-of-range.
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    // 1-based endpoint pairs, the external convention.
    static Graph from_edges_1based(int n, const std::vector<std::pair<int, int>>& edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    Edge edge(int e) const { return edges_[static_cast<size_t>(e)]; }

    // Neighbors of v as (neighbor, edge index) pairs, ascending by neighbor.
    const std::vector<std::pair<int, int>>& adj(int v) const { return adj_[static_cast<size_t>(v)]; }

    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    bool has_edge(int u, int v) const;
    int edge_index(int u, int v) const; // -1 if absent

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

// ---- named families (paper labelings, 1-based externally) ----

Graph complete_graph(int n);
Graph complete_bipartite(int m, int n); // parts {1..m} and {m+1..m+n}
Graph cycle_graph(int n);               // n >= 3
Graph path_graph(int len);              // P_len: len+1 vertices, len edges
Graph gn_graph(int n);                  // K_{2,n-2} with parts {1,2},{3..n} plus the edge 12
Graph gnk_graph(int n, int k);          // K_{k,n-k} plus all edges inside the k-side
Graph double_cone(const Graph& g);      // two new vertices joined to everything and to each other
Graph bipartite_cone(const Graph& g);   // g bipartite; apexes split over the two parts

enum class Family { complete, complete_bipartite, cycle, path, gn, gnk, double_cone_path, bipartite_cone_cycle };

// double_cone_path(m): double cone over P_m; bipartite_cone_cycle(m): bipartite
// cone over C_m (m even).
Graph build_named(Family kind, const std::vector<int>& params);

// ---- structure ----

struct Component {
    Graph graph;
    std::vector<int> vertex_map; // local -> original vertex
};

std::vector<Component> connected_components(const Graph& g);
bool is_connected(const Graph& g);
int component_count(const Graph& g);

struct BlockDecomposition {
    std::vector<std::vector<int>> blocks; // edge-index sets; single edges count as blocks
    std::vector<int> cut_vertices;
};

BlockDecomposition blocks(const Graph& g);

// Induced subgraph on the endpoints of the given edges, with a vertex map back.
Component edge_induced_subgraph(const Graph& g, const std::vector<int>& edge_indices);

long long cyclomatic_number(const Graph& g); // |E| - |V| + #components

// Structural recognizers (no general isomorphism search).
bool is_iso_gn(const Graph& g);
bool is_iso_k2m(const Graph& g);
bool is_complete(const Graph& g);
// If g is complete bipartite with both parts nonempty, returns the part sizes.
bool complete_bipartite_parts(const Graph& g, int& m_out, int& n_out);

// ---- I/O ----

// Standard graph6, short form (n <= 62).
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

// One "u v" pair per line, 1-indexed; '#' starts a comment; blank lines
// ignored. Vertex count is the largest label seen.
Graph parse_edge_list(std::istream& in);
void emit_edge_list(const Graph& g, std::ostream& out);

} // namespace sep

#endif
