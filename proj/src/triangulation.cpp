#include "sep/triangulation.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "sep/errors.hpp"

namespace sep {

EdgeOrder EdgeOrder::list_order(int m) {
    EdgeOrder o;
    o.rank.resize(static_cast<size_t>(m));
    for (int e = 0; e < m; ++e) o.rank[static_cast<size_t>(e)] = e;
    return o;
}

EdgeOrder EdgeOrder::shuffled(int m, std::uint64_t seed) {
    EdgeOrder o = list_order(m);
    // Hand-rolled Fisher-Yates: std::shuffle is not reproducible across
    // standard libraries, mt19937_64 output is.
    std::mt19937_64 rng(seed);
    for (int i = m - 1; i > 0; --i) {
        int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(o.rank[static_cast<size_t>(i)], o.rank[static_cast<size_t>(j)]);
    }
    return o;
}

bool EdgeOrder::valid() const {
    std::vector<bool> seen(rank.size(), false);
    for (int r : rank) {
        if (r < 0 || r >= static_cast<int>(rank.size()) || seen[static_cast<size_t>(r)]) return false;
        seen[static_cast<size_t>(r)] = true;
    }
    return true;
}

namespace {

// One orientation of one cycle, as oriented ids.
struct OrientedCycle {
    std::vector<int> ids;     // sorted
    std::uint64_t mask = 0;   // valid when the id space fits 64 bits
    int min_id = -1;          // orientation of the order-minimal underlying edge
    int len = 0;
};

// Shared context for face tests and enumeration over one (graph, order).
struct PatternIndex {
    int id_count = 0;
    bool use_mask = false;
    std::vector<OrientedCycle> oriented;
    std::vector<std::vector<int>> through; // oriented id -> indices into `oriented`, ascending by length

    PatternIndex(const Graph& g, const EdgeOrder& order, int max_cycle_len, const CycleLimits& climits) {
        if (static_cast<int>(order.rank.size()) != g.edge_count() || !order.valid())
            throw std::invalid_argument("EdgeOrder does not match the graph");
        id_count = 2 * g.edge_count();
        use_mask = id_count <= 64;
        through.resize(static_cast<size_t>(id_count));
        if (max_cycle_len < 3) return;
        build(g, order, enumerate_cycles(g, max_cycle_len, climits));
    }

    PatternIndex(const Graph& g, const EdgeOrder& order, const std::vector<Cycle>& cycles) {
        id_count = 2 * g.edge_count();
        use_mask = id_count <= 64;
        through.resize(static_cast<size_t>(id_count));
        build(g, order, cycles);
    }

    void build(const Graph& g, const EdgeOrder& order, const std::vector<Cycle>& cycles) {
        oriented.reserve(2 * cycles.size());
        for (const auto& c : cycles) {
            OrientedCycle a; // canonical traversal direction
            a.len = c.length();
            a.ids.reserve(c.vertices.size());
            int best_rank = -1;
            for (size_t i = 0; i < c.vertices.size(); ++i) {
                int from = c.vertices[i];
                int to = c.vertices[(i + 1) % c.vertices.size()];
                int e = c.edge_indices[i];
                int id = 2 * e + (from < to ? 0 : 1);
                a.ids.push_back(id);
                if (best_rank < 0 || order.rank[static_cast<size_t>(e)] < best_rank) {
                    best_rank = order.rank[static_cast<size_t>(e)];
                    a.min_id = id;
                }
            }
            OrientedCycle b; // reversed
            b.len = a.len;
            b.min_id = antipode(a.min_id);
            for (int id : a.ids) b.ids.push_back(antipode(id));
            for (auto* oc : {&a, &b}) {
                std::sort(oc->ids.begin(), oc->ids.end());
                if (use_mask)
                    for (int id : oc->ids) oc->mask |= 1ull << id;
            }
            oriented.push_back(std::move(a));
            oriented.push_back(std::move(b));
        }
        // Cycles are sorted by length, so per-id lists stay length-ascending.
        for (size_t ci = 0; ci < oriented.size(); ++ci)
            for (int id : oriented[ci].ids) through[static_cast<size_t>(id)].push_back(static_cast<int>(ci));
    }
};

// Depth-first face enumeration. Faces are grown in ascending id order; a new
// element can only complete patterns passing through it, so only cycles
// through the new id are tested.
class FaceScan {
public:
    FaceScan(const Graph& g, const EdgeOrder& order, int max_size, const FaceLimits& limits)
        : limits_(limits),
          max_size_(max_size),
          index_(g, order, max_size >= 2 ? std::min(g.vertex_count(), 2 * max_size) : 0,
                 CycleLimits{limits.max_cycles}),
          in_set_(static_cast<size_t>(index_.id_count), false) {}

    // visit(ids) is called for every nonempty face, in lexicographic order.
    void run(const std::function<void(const std::vector<int>&)>& visit) {
        visited_ = 0;
        face_.clear();
        mask_ = 0;
        extend(0, visit);
    }

private:
    bool admits(int x) const {
        if (in_set_[static_cast<size_t>(antipode(x))]) return false;
        int new_size = static_cast<int>(face_.size()) + 1;
        for (int ci : index_.through[static_cast<size_t>(x)]) {
            const OrientedCycle& oc = index_.oriented[static_cast<size_t>(ci)];
            if (oc.len > 2 * new_size) break; // lists are length-ascending
            int t;
            if (index_.use_mask) {
                t = static_cast<int>(__builtin_popcountll((mask_ | (1ull << x)) & oc.mask));
            } else {
                t = 1; // x itself
                for (int id : oc.ids) t += in_set_[static_cast<size_t>(id)] ? 1 : 0;
            }
            if (oc.len % 2 == 1) {
                if (t >= (oc.len + 1) / 2) return false;
            } else {
                if (oc.min_id == x || in_set_[static_cast<size_t>(oc.min_id)]) --t;
                if (t >= oc.len / 2) return false;
            }
        }
        return true;
    }

    void extend(int first, const std::function<void(const std::vector<int>&)>& visit) {
        for (int x = first; x < index_.id_count; ++x) {
            if (!admits(x)) continue;
            if (++visited_ > limits_.max_faces)
                throw CapExceeded("enumerate_faces: more than " + std::to_string(limits_.max_faces) + " faces");
            face_.push_back(x);
            in_set_[static_cast<size_t>(x)] = true;
            if (index_.use_mask) mask_ |= 1ull << x;
            visit(face_);
            if (static_cast<int>(face_.size()) < max_size_) extend(x + 1, visit);
            face_.pop_back();
            in_set_[static_cast<size_t>(x)] = false;
            if (index_.use_mask) mask_ &= ~(1ull << x);
        }
    }

    FaceLimits limits_;
    int max_size_;
    PatternIndex index_;
    std::vector<bool> in_set_;
    std::vector<int> face_;
    std::uint64_t mask_ = 0;
    long long visited_ = 0;
};

} // namespace

bool is_face(const Graph& g, const EdgeOrder& order, const std::vector<OrientedEdge>& s,
             const std::vector<Cycle>& cycles) {
    std::vector<bool> in_set(static_cast<size_t>(2 * g.edge_count()), false);
    for (const auto& oe : s) {
        int id = oriented_id(oe);
        if (in_set[static_cast<size_t>(antipode(id))]) return false; // antipodal pair
        if (in_set[static_cast<size_t>(id)]) continue;
        in_set[static_cast<size_t>(id)] = true;
    }
    PatternIndex index(g, order, cycles);
    int size = 0;
    for (bool b : in_set) size += b ? 1 : 0;
    for (const auto& oc : index.oriented) {
        if (oc.len > 2 * size) continue;
        int t = 0;
        for (int id : oc.ids) t += in_set[static_cast<size_t>(id)] ? 1 : 0;
        if (oc.len % 2 == 1) {
            if (t >= (oc.len + 1) / 2) return false;
        } else {
            if (in_set[static_cast<size_t>(oc.min_id)]) --t;
            if (t >= oc.len / 2) return false;
        }
    }
    return true;
}

FaceCountReport enumerate_faces(const Graph& g, const EdgeOrder& order, FaceMode mode, int k,
                                const FaceLimits& limits) {
    int max_size;
    if (mode == FaceMode::full) {
        if (!is_connected(g))
            throw std::invalid_argument("enumerate_faces: full mode needs a connected graph");
        max_size = g.vertex_count() - 1;
    } else {
        if (k < 0) throw std::invalid_argument("enumerate_faces: negative k");
        max_size = std::min(k, g.edge_count());
    }

    std::vector<long long> counts(static_cast<size_t>(max_size) + 1, 0);
    counts[0] = 1; // the empty face
    FaceScan scan(g, order, max_size, limits);
    scan.run([&](const std::vector<int>& face) { counts[face.size()]++; });

    FaceCountReport report;
    report.order_used = order;
    report.truncated = mode == FaceMode::up_to;
    report.f.assign(counts.begin(), counts.end());
    if (mode == FaceMode::up_to) report.f.resize(static_cast<size_t>(k) + 1, BigInt(0));
    report.nonfaces.resize(report.f.size());
    for (size_t i = 0; i < report.f.size(); ++i)
        report.nonfaces[i] = pow2(static_cast<long long>(i)) * binomial(g.edge_count(), static_cast<long long>(i)) -
                             report.f[i];
    return report;
}

std::vector<std::vector<int>> facets_of_triangulation(const Graph& g, const EdgeOrder& order,
                                                      const FaceLimits& limits) {
    if (!is_connected(g))
        throw std::invalid_argument("facets_of_triangulation: connected graph required");
    int facet_size = g.vertex_count() - 1;
    std::vector<std::vector<int>> facets;
    FaceScan scan(g, order, facet_size, limits);
    scan.run([&](const std::vector<int>& face) {
        if (static_cast<int>(face.size()) == facet_size) facets.push_back(face);
    });
    return facets;
}

BigInt count_nonfaces(const Graph& g, const EdgeOrder& order, int ell, const FaceLimits& limits) {
    if (ell < 1) throw std::invalid_argument("count_nonfaces: ell >= 1 required");
    if (ell > g.edge_count()) return 0; // no antipodal-free sets that large
    // The scan visits every face of size <= ell; refuse hopeless inputs early.
    BigInt bound = 0;
    for (int j = 0; j <= ell; ++j) bound += pow2(j) * binomial(g.edge_count(), j);
    if (bound > limits.max_faces)
        throw CapExceeded("count_nonfaces: work estimate " + bound.str() + " exceeds cap at ell=" +
                          std::to_string(ell));
    FaceCountReport report = enumerate_faces(g, order, FaceMode::up_to, ell, limits);
    return report.nonfaces[static_cast<size_t>(ell)];
}

BigInt bad_pair_count(const Graph& g, const EdgeOrder& order, const CycleLimits& limits) {
    if (static_cast<int>(order.rank.size()) != g.edge_count() || !order.valid())
        throw std::invalid_argument("EdgeOrder does not match the graph");
    if (g.vertex_count() < 3) return 0;
    PatternIndex index(g, order, std::min(4, g.vertex_count()), limits);
    // A pair may lie in several short cycles; dedupe on the id pair.
    std::unordered_set<std::uint64_t> pairs;
    auto key = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        return static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(index.id_count) +
               static_cast<std::uint64_t>(b);
    };
    for (const auto& oc : index.oriented) {
        if (oc.len == 3) {
            for (size_t i = 0; i < oc.ids.size(); ++i)
                for (size_t j = i + 1; j < oc.ids.size(); ++j) pairs.insert(key(oc.ids[i], oc.ids[j]));
        } else if (oc.len == 4) {
            for (size_t i = 0; i < oc.ids.size(); ++i) {
                if (oc.ids[i] == oc.min_id) continue;
                for (size_t j = i + 1; j < oc.ids.size(); ++j) {
                    if (oc.ids[j] == oc.min_id) continue;
                    pairs.insert(key(oc.ids[i], oc.ids[j]));
                }
            }
        }
    }
    return static_cast<long long>(pairs.size());
}

PolytopeEdgeTester::PolytopeEdgeTester(const Graph& g) : id_count_(2 * g.edge_count()) {
    through_.resize(static_cast<size_t>(id_count_));
    if (g.vertex_count() < 3) return;
    EdgeOrder order = EdgeOrder::list_order(g.edge_count());
    PatternIndex index(g, order, std::min(4, g.vertex_count()), CycleLimits{});
    for (const auto& oc : index.oriented) short_cycles_.push_back(oc.ids);
    for (size_t ci = 0; ci < short_cycles_.size(); ++ci)
        for (int id : short_cycles_[ci]) through_[static_cast<size_t>(id)].push_back(static_cast<int>(ci));
}

bool PolytopeEdgeTester::is_edge(OrientedEdge a, OrientedEdge b, bool strict) const {
    int x = oriented_id(a), y = oriented_id(b);
    if (a.edge == b.edge) {
        if (strict) throw std::invalid_argument("is_polytope_edge: same underlying edge");
        return false;
    }
    for (int ci : through_[static_cast<size_t>(x)]) {
        const auto& ids = short_cycles_[static_cast<size_t>(ci)];
        if (std::binary_search(ids.begin(), ids.end(), y)) return false;
    }
    return true;
}

bool is_polytope_edge(const Graph& g, OrientedEdge a, OrientedEdge b, bool strict) {
    return PolytopeEdgeTester(g).is_edge(a, b, strict);
}

bool is_simple_polytope(const Graph& g) {
    if (g.edge_count() == 0) throw std::invalid_argument("is_simple_polytope: graph has no edges");
    // Drop isolated vertices, then match against the finite list.
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 0) keep.push_back(v);
    std::vector<int> local(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < keep.size(); ++i) local[static_cast<size_t>(keep[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    for (const auto& e : g.edges())
        es.push_back({local[static_cast<size_t>(e.u)], local[static_cast<size_t>(e.v)]});
    Graph h(static_cast<int>(keep.size()), es);

    int n = h.vertex_count(), m = h.edge_count();
    if (n == 2 && m == 1) return true;                       // P1
    if (n == 3 && m == 2) return true;                       // P2
    if (n == 3 && m == 3) return true;                       // C3
    if (n == 4 && m == 2) return component_count(h) == 2;    // 2P1
    if (n == 4 && m == 4) {
        for (int v = 0; v < 4; ++v)
            if (h.degree(v) != 2) return false;
        return is_connected(h);                              // C4
    }
    return false;
}

bool is_simple_polytope_via_edges(const Graph& g) {
    if (g.edge_count() == 0) throw std::invalid_argument("is_simple_polytope_via_edges: graph has no edges");
    long long dim = static_cast<long long>(g.vertex_count()) - component_count(g);
    // dim 1: the polytope is a segment, whose single edge joins the antipodal
    // pair; the pair test below excludes antipodal inputs by contract.
    if (dim == 1) return true;
    PolytopeEdgeTester tester(g);
    for (int x = 0; x < 2 * g.edge_count(); ++x) {
        long long deg = 0;
        for (int y = 0; y < 2 * g.edge_count(); ++y) {
            if (y / 2 == x / 2) continue;
            if (tester.is_edge(from_id(x), from_id(y))) ++deg;
        }
        if (deg != dim) return false;
    }
    return true;
}

} // namespace sep
