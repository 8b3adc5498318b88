#ifndef SEP_TRIANGULATION_HPP
#define SEP_TRIANGULATION_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "sep/cycles.hpp"
#include "sep/graph.hpp"
#include "sep/numeric.hpp"

namespace sep {

// A vertex of the polytope: graph edge plus direction. forward means u -> v
// for the stored pair u < v. Antipodal pair = same edge, opposite bit.
struct OrientedEdge {
    int edge;
    bool forward;
};

// Dense id space: 2*edge + (forward ? 0 : 1); antipode(id) == id ^ 1.
inline int oriented_id(const OrientedEdge& oe) { return 2 * oe.edge + (oe.forward ? 0 : 1); }
inline int antipode(int id) { return id ^ 1; }
inline OrientedEdge from_id(int id) { return {id / 2, id % 2 == 0}; }

// Total order on the graph edges: rank[e] = position, lower = smaller.
struct EdgeOrder {
    std::vector<int> rank;

    static EdgeOrder list_order(int m);
    static EdgeOrder shuffled(int m, std::uint64_t seed);
    bool valid() const;
    int size() const { return static_cast<int>(rank.size()); }
};

struct FaceLimits {
    long long max_faces = 200'000'000;
    long long max_cycles = 10'000'000;
};

struct FaceCountReport {
    std::vector<BigInt> f;        // f[i] = number of faces with i vertices; f[0] = f_{-1} = 1
    std::vector<BigInt> nonfaces; // nonfaces[i] = antipodal-free i-subsets that are non-faces
    EdgeOrder order_used;
    bool truncated = false;
};

// Direct test of one vertex set against the non-face patterns: an antipodal
// pair, a majority subset of an odd oriented cycle, or a half subset of an
// even oriented cycle avoiding its order-minimal edge. `cycles` must contain
// every cycle of length <= 2*|s|.
bool is_face(const Graph& g, const EdgeOrder& order, const std::vector<OrientedEdge>& s,
             const std::vector<Cycle>& cycles);

enum class FaceMode { full, up_to };

// Face counts of the boundary triangulation. full mode (connected graphs
// only) returns the complete f-vector; up_to(k) counts faces with at most k
// vertices. Deterministic; throws CapExceeded past the limits.
FaceCountReport enumerate_faces(const Graph& g, const EdgeOrder& order, FaceMode mode, int k = 0,
                                const FaceLimits& limits = {});

// Maximal faces (size n-1), as sorted oriented-id vectors. Connected graphs only.
std::vector<std::vector<int>> facets_of_triangulation(const Graph& g, const EdgeOrder& order,
                                                      const FaceLimits& limits = {});

// Exact number of antipodal-free ell-subsets that are non-faces.
BigInt count_nonfaces(const Graph& g, const EdgeOrder& order, int ell, const FaceLimits& limits = {});

// Fast path for ell = 2: deduplicated pairs inside oriented 3-cycles, or
// inside oriented 4-cycles avoiding the minimal edge.
BigInt bad_pair_count(const Graph& g, const EdgeOrder& order, const CycleLimits& limits = {});

// Precomputes directed 3-/4-cycle membership for repeated edge queries.
class PolytopeEdgeTester {
public:
    explicit PolytopeEdgeTester(const Graph& g);
    // True iff no directed 3- or 4-cycle contains both. Antipodal or equal
    // underlying edges: false, or std::invalid_argument when strict.
    bool is_edge(OrientedEdge a, OrientedEdge b, bool strict = false) const;

private:
    std::vector<std::vector<int>> short_cycles_; // oriented id lists, sorted
    std::vector<std::vector<int>> through_;      // oriented id -> cycle indices
    int id_count_;
};

bool is_polytope_edge(const Graph& g, OrientedEdge a, OrientedEdge b, bool strict = false);

// Structural classifier: after removing isolated vertices the graph must be
// one of P1, 2P1, P2, C3, C4. Requires at least one edge.
bool is_simple_polytope(const Graph& g);

// Independent route: simple iff every polytope vertex has exactly dim = n - c
// neighbors in the polytope edge graph.
bool is_simple_polytope_via_edges(const Graph& g);

} // namespace sep

#endif
