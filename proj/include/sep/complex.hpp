#ifndef SEP_COMPLEX_HPP
#define SEP_COMPLEX_HPP

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sep/gamma.hpp"
#include "sep/graph.hpp"
#include "sep/numeric.hpp"
#include "sep/triangulation.hpp"

namespace sep {

// Explicit facet-list complex over labeled vertices (at most 64, faces are
// bitmasks). Construction normalizes: dominated facets absorbed, unused
// vertices dropped, facets deduplicated and sorted.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex from_facets(const std::vector<std::string>& labels,
                                         const std::vector<std::vector<int>>& facets);
    static SimplicialComplex from_label_facets(const std::vector<std::vector<std::string>>& facets);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[static_cast<size_t>(v)]; }
    int vertex_index(const std::string& label) const; // -1 if absent
    const std::vector<std::uint64_t>& facet_masks() const { return facets_; }
    std::vector<std::vector<std::string>> facets_by_label() const;

    int dimension() const; // -1 for the empty-face complex
    bool pure() const;
    bool is_face(std::uint64_t mask) const;
    bool has_face(const std::vector<std::string>& face) const;
    std::uint64_t mask_of(const std::vector<std::string>& face) const; // throws on unknown label

    // Every face (including the empty mask), as masks.
    const std::unordered_set<std::uint64_t>& all_faces() const;
    // adjacency[v] = bitmask of skeleton neighbors.
    const std::vector<std::uint64_t>& skeleton() const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::uint64_t> facets_;
    mutable std::unordered_set<std::uint64_t> faces_cache_;
    mutable std::vector<std::uint64_t> skeleton_cache_;
    mutable bool faces_ready_ = false;
    mutable bool skeleton_ready_ = false;
};

// f[i] = number of faces with i vertices (f[0] = 1).
std::vector<BigInt> f_vector_of_complex(const SimplicialComplex& k);
long long euler_characteristic(const SimplicialComplex& k);

// f -> h using d = max facet size; throws std::invalid_argument when h is
// not palindromic (the complex is then no homology-sphere candidate).
std::vector<BigInt> gamma_of_complex(const SimplicialComplex& k);
std::vector<BigInt> h_of_complex(const SimplicialComplex& k);
bool h_palindromic(const SimplicialComplex& k);
bool is_pseudomanifold(const SimplicialComplex& k);

SimplicialComplex link(const SimplicialComplex& k, const std::vector<std::string>& face);

// Identify `removed` into `kept` in every face, then re-minimalize.
// {kept, removed} must be an edge of k.
SimplicialComplex contract_edge(const SimplicialComplex& k, const std::string& kept,
                                const std::string& removed);

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex point_pair(const std::string& a, const std::string& b);

SimplicialComplex relabel(const SimplicialComplex& k, const std::map<std::string, std::string>& images);

// Same labels, same faces.
bool complexes_equal(const SimplicialComplex& a, const SimplicialComplex& b);

// Backtracking with degree / incidence refinement; fine below ~30 vertices.
bool complexes_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

// True iff every clique of the 1-skeleton is a face.
bool is_flag(const SimplicialComplex& k);

// Boundary complex of the d-dimensional cross-polytope: 2d vertices,
// non-adjacency a perfect matching, flag, 2^d facets.
bool is_crosspolytope_boundary(const SimplicialComplex& k, int d);

// Vertex label "i->j" (1-based endpoints) for the oriented edge i -> j.
std::string oriented_label(int tail_1based, int head_1based);

// Facet list of the boundary triangulation, vertices labeled by oriented
// edges. Connected graphs with at least one edge and 2m <= 64.
SimplicialComplex build_delta(const Graph& g, const EdgeOrder& order, const FaceLimits& limits = {});

// The edge order making every {2,a} edge smallest, descending in a; for the
// graphs G_n and K_{2,n-2} with apexes 1, 2.
EdgeOrder section4_order(const Graph& g);

struct ContractionStep {
    int index = 0;
    std::string kept, removed;
    bool link_check = false;       // link of the pair is a cross-polytope sphere on 2(n-3) vertices
    bool flag_check = false;       // contracted complex is flag
    bool sphere_check = false;     // Euler characteristic + palindromic h + pseudomanifold
    bool gamma_step_check = false; // gamma_2(before) = gamma_2(after) + gamma_1(link)
    std::vector<BigInt> f;
    std::vector<BigInt> gamma;
};

struct LutzNevoReport {
    int n = 0;
    std::vector<BigInt> initial_f;
    std::vector<BigInt> initial_gamma;
    std::vector<ContractionStep> steps;
    bool waypoints_check = false;     // after every second step the complex equals the expected suspension
    bool final_crosspolytope = false; // cross-polytope sphere on 2(n-1) vertices
};

// Executes the alternating contraction chain on the triangulation of G_n and
// verifies every step; throws InvariantViolation at the first failing check.
LutzNevoReport lutz_nevo_run(int n, const FaceLimits& limits = {});

} // namespace sep

#endif
