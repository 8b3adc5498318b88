#include "sep/complex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "sep/errors.hpp"

namespace sep {

namespace {

int popcount(std::uint64_t x) { return static_cast<int>(std::popcount(x)); }

std::uint64_t low_bits(int count) { return count >= 64 ? ~0ull : (1ull << count) - 1; }

// Remove dominated masks and duplicates; result sorted ascending.
std::vector<std::uint64_t> minimalize(std::vector<std::uint64_t> masks) {
    std::sort(masks.begin(), masks.end(),
              [](std::uint64_t a, std::uint64_t b) { return popcount(a) > popcount(b); });
    std::vector<std::uint64_t> kept;
    for (std::uint64_t m : masks) {
        bool dominated = false;
        for (std::uint64_t k : kept)
            if ((m & k) == m) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(m);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

} // namespace

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::string>& labels,
                                                 const std::vector<std::vector<int>>& facets) {
    if (labels.size() > 64) throw std::invalid_argument("SimplicialComplex: more than 64 vertices");
    std::vector<std::uint64_t> masks;
    masks.reserve(facets.size());
    for (const auto& f : facets) {
        std::uint64_t m = 0;
        for (int v : f) {
            if (v < 0 || v >= static_cast<int>(labels.size()))
                throw std::invalid_argument("SimplicialComplex: facet vertex out of range");
            m |= 1ull << v;
        }
        masks.push_back(m);
    }
    masks = minimalize(std::move(masks));

    // Drop vertices outside every facet, keeping label order.
    std::uint64_t used = 0;
    for (std::uint64_t m : masks) used |= m;
    SimplicialComplex k;
    std::vector<int> remap(labels.size(), -1);
    for (size_t v = 0; v < labels.size(); ++v) {
        if (!(used >> v & 1)) continue;
        remap[v] = static_cast<int>(k.labels_.size());
        if (k.index_.count(labels[v])) throw std::invalid_argument("SimplicialComplex: duplicate label");
        k.index_[labels[v]] = remap[v];
        k.labels_.push_back(labels[v]);
    }
    for (std::uint64_t m : masks) {
        std::uint64_t r = 0;
        for (size_t v = 0; v < labels.size(); ++v)
            if (m >> v & 1) r |= 1ull << remap[v];
        k.facets_.push_back(r);
    }
    std::sort(k.facets_.begin(), k.facets_.end());
    return k;
}

SimplicialComplex SimplicialComplex::from_label_facets(const std::vector<std::vector<std::string>>& facets) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> seen;
    std::vector<std::vector<int>> index_facets;
    for (const auto& f : facets) {
        std::vector<int> g;
        for (const auto& lab : f) {
            auto it = seen.find(lab);
            if (it == seen.end()) {
                it = seen.emplace(lab, static_cast<int>(labels.size())).first;
                labels.push_back(lab);
            }
            g.push_back(it->second);
        }
        index_facets.push_back(std::move(g));
    }
    return from_facets(labels, index_facets);
}

int SimplicialComplex::vertex_index(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

std::vector<std::vector<std::string>> SimplicialComplex::facets_by_label() const {
    std::vector<std::vector<std::string>> out;
    for (std::uint64_t m : facets_) {
        std::vector<std::string> f;
        for (int v = 0; v < vertex_count(); ++v)
            if (m >> v & 1) f.push_back(labels_[static_cast<size_t>(v)]);
        out.push_back(std::move(f));
    }
    return out;
}

int SimplicialComplex::dimension() const {
    int best = 0;
    for (std::uint64_t m : facets_) best = std::max(best, popcount(m));
    return best - 1;
}

bool SimplicialComplex::pure() const {
    if (facets_.empty()) return true;
    int d = dimension();
    for (std::uint64_t m : facets_)
        if (popcount(m) != d + 1) return false;
    return true;
}

bool SimplicialComplex::is_face(std::uint64_t mask) const {
    for (std::uint64_t f : facets_)
        if ((mask & f) == mask) return true;
    return facets_.empty() && mask == 0;
}

std::uint64_t SimplicialComplex::mask_of(const std::vector<std::string>& face) const {
    std::uint64_t m = 0;
    for (const auto& lab : face) {
        int v = vertex_index(lab);
        if (v < 0) throw std::invalid_argument("SimplicialComplex: unknown label " + lab);
        m |= 1ull << v;
    }
    return m;
}

bool SimplicialComplex::has_face(const std::vector<std::string>& face) const {
    for (const auto& lab : face)
        if (vertex_index(lab) < 0) return false;
    return is_face(mask_of(face));
}

const std::unordered_set<std::uint64_t>& SimplicialComplex::all_faces() const {
    if (!faces_ready_) {
        faces_cache_.clear();
        faces_cache_.insert(0);
        for (std::uint64_t f : facets_) {
            // All submasks of f.
            std::uint64_t s = f;
            while (true) {
                faces_cache_.insert(s);
                if (s == 0) break;
                s = (s - 1) & f;
            }
        }
        faces_ready_ = true;
    }
    return faces_cache_;
}

const std::vector<std::uint64_t>& SimplicialComplex::skeleton() const {
    if (!skeleton_ready_) {
        skeleton_cache_.assign(static_cast<size_t>(vertex_count()), 0);
        for (const auto& face : all_faces()) {
            if (popcount(face) != 2) continue;
            int a = std::countr_zero(face);
            int b = 63 - std::countl_zero(face);
            skeleton_cache_[static_cast<size_t>(a)] |= 1ull << b;
            skeleton_cache_[static_cast<size_t>(b)] |= 1ull << a;
        }
        skeleton_ready_ = true;
    }
    return skeleton_cache_;
}

std::vector<BigInt> f_vector_of_complex(const SimplicialComplex& k) {
    std::vector<BigInt> f(static_cast<size_t>(k.dimension()) + 2, BigInt(0));
    for (const auto& face : k.all_faces()) f[static_cast<size_t>(popcount(face))] += 1;
    return f;
}

long long euler_characteristic(const SimplicialComplex& k) {
    long long chi = 0;
    for (const auto& face : k.all_faces()) {
        if (face == 0) continue;
        chi += popcount(face) % 2 == 1 ? 1 : -1;
    }
    return chi;
}

std::vector<BigInt> h_of_complex(const SimplicialComplex& k) {
    std::vector<BigInt> f = f_vector_of_complex(k);
    return f_to_h(f, static_cast<int>(f.size()) - 1);
}

bool h_palindromic(const SimplicialComplex& k) {
    std::vector<BigInt> h = h_of_complex(k);
    for (size_t i = 0; i < h.size(); ++i)
        if (h[i] != h[h.size() - 1 - i]) return false;
    return true;
}

std::vector<BigInt> gamma_of_complex(const SimplicialComplex& k) {
    return h_to_gamma(h_of_complex(k)); // throws if h is not palindromic
}

bool is_pseudomanifold(const SimplicialComplex& k) {
    if (!k.pure()) return false;
    // Every ridge (facet minus one vertex) lies in exactly two facets.
    std::unordered_map<std::uint64_t, int> ridge_count;
    for (std::uint64_t f : k.facet_masks()) {
        std::uint64_t rest = f;
        while (rest) {
            std::uint64_t bit = rest & (~rest + 1);
            ridge_count[f ^ bit]++;
            rest ^= bit;
        }
    }
    for (const auto& [ridge, count] : ridge_count) {
        (void)ridge;
        if (count != 2) return false;
    }
    return true;
}

SimplicialComplex link(const SimplicialComplex& k, const std::vector<std::string>& face) {
    std::uint64_t fm = k.mask_of(face);
    if (!k.is_face(fm)) throw std::invalid_argument("link: not a face");
    std::vector<std::vector<int>> facets;
    for (std::uint64_t c : k.facet_masks()) {
        if ((fm & c) != fm) continue;
        std::uint64_t rest = c ^ fm;
        std::vector<int> f;
        for (int v = 0; v < k.vertex_count(); ++v)
            if (rest >> v & 1) f.push_back(v);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(k.labels(), facets);
}

SimplicialComplex contract_edge(const SimplicialComplex& k, const std::string& kept,
                                const std::string& removed) {
    int w = k.vertex_index(kept);
    int v = k.vertex_index(removed);
    if (w < 0 || v < 0 || !k.is_face((1ull << w) | (1ull << v)))
        throw std::invalid_argument("contract_edge: {" + kept + "," + removed + "} is not an edge");
    std::vector<std::vector<int>> facets;
    for (std::uint64_t c : k.facet_masks()) {
        std::uint64_t m = c;
        if (m >> v & 1) m = (m & ~(1ull << v)) | (1ull << w);
        std::vector<int> f;
        for (int x = 0; x < k.vertex_count(); ++x)
            if (m >> x & 1) f.push_back(x);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(k.labels(), facets);
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    for (const auto& lab : b.labels())
        if (a.vertex_index(lab) >= 0) throw std::invalid_argument("join: shared label " + lab);
    std::vector<std::vector<std::string>> facets;
    auto fa = a.facets_by_label();
    auto fb = b.facets_by_label();
    if (fa.empty()) fa.push_back({});
    if (fb.empty()) fb.push_back({});
    for (const auto& x : fa)
        for (const auto& y : fb) {
            std::vector<std::string> f = x;
            f.insert(f.end(), y.begin(), y.end());
            facets.push_back(std::move(f));
        }
    return SimplicialComplex::from_label_facets(facets);
}

SimplicialComplex point_pair(const std::string& a, const std::string& b) {
    return SimplicialComplex::from_label_facets({{a}, {b}});
}

SimplicialComplex relabel(const SimplicialComplex& k, const std::map<std::string, std::string>& images) {
    std::vector<std::string> labels;
    for (const auto& lab : k.labels()) {
        auto it = images.find(lab);
        labels.push_back(it == images.end() ? lab : it->second);
    }
    std::vector<std::vector<int>> facets;
    for (std::uint64_t m : k.facet_masks()) {
        std::vector<int> f;
        for (int v = 0; v < k.vertex_count(); ++v)
            if (m >> v & 1) f.push_back(v);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(labels, facets);
}

bool complexes_equal(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.vertex_count() != b.vertex_count() || a.facet_masks().size() != b.facet_masks().size())
        return false;
    std::vector<int> to_b(static_cast<size_t>(a.vertex_count()));
    for (int v = 0; v < a.vertex_count(); ++v) {
        int w = b.vertex_index(a.label(v));
        if (w < 0) return false;
        to_b[static_cast<size_t>(v)] = w;
    }
    std::vector<std::uint64_t> mapped;
    for (std::uint64_t m : a.facet_masks()) {
        std::uint64_t r = 0;
        for (int v = 0; v < a.vertex_count(); ++v)
            if (m >> v & 1) r |= 1ull << to_b[static_cast<size_t>(v)];
        mapped.push_back(r);
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == b.facet_masks();
}

namespace {

struct IsoSearch {
    const SimplicialComplex& a;
    const SimplicialComplex& b;
    std::vector<std::vector<int>> candidates; // per a-vertex
    std::vector<int> map_ab;
    std::uint64_t used_b = 0;
    std::vector<int> order;

    bool adjacency_consistent(int va, int vb) const {
        for (int u = 0; u < a.vertex_count(); ++u) {
            int mu = map_ab[static_cast<size_t>(u)];
            if (mu < 0) continue;
            bool adj_a = a.skeleton()[static_cast<size_t>(va)] >> u & 1;
            bool adj_b = b.skeleton()[static_cast<size_t>(vb)] >> mu & 1;
            if (adj_a != adj_b) return false;
        }
        return true;
    }

    bool facets_match() const {
        std::vector<std::uint64_t> mapped;
        for (std::uint64_t m : a.facet_masks()) {
            std::uint64_t r = 0;
            for (int v = 0; v < a.vertex_count(); ++v)
                if (m >> v & 1) r |= 1ull << map_ab[static_cast<size_t>(v)];
            mapped.push_back(r);
        }
        std::sort(mapped.begin(), mapped.end());
        return mapped == b.facet_masks();
    }

    bool search(size_t pos) {
        if (pos == order.size()) return facets_match();
        int va = order[pos];
        for (int vb : candidates[static_cast<size_t>(va)]) {
            if (used_b >> vb & 1) continue;
            if (!adjacency_consistent(va, vb)) continue;
            map_ab[static_cast<size_t>(va)] = vb;
            used_b |= 1ull << vb;
            if (search(pos + 1)) return true;
            used_b &= ~(1ull << static_cast<unsigned>(vb));
            map_ab[static_cast<size_t>(va)] = -1;
        }
        return false;
    }
};

// (skeleton degree, facet count, sorted facet sizes) per vertex.
std::vector<std::tuple<int, int, std::vector<int>>> vertex_signatures(const SimplicialComplex& k) {
    std::vector<std::tuple<int, int, std::vector<int>>> sig(static_cast<size_t>(k.vertex_count()));
    for (int v = 0; v < k.vertex_count(); ++v) {
        std::vector<int> sizes;
        for (std::uint64_t m : k.facet_masks())
            if (m >> v & 1) sizes.push_back(popcount(m));
        std::sort(sizes.begin(), sizes.end());
        sig[static_cast<size_t>(v)] = {popcount(k.skeleton()[static_cast<size_t>(v)]),
                                       static_cast<int>(sizes.size()), std::move(sizes)};
    }
    return sig;
}

} // namespace

bool complexes_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.vertex_count() != b.vertex_count() || a.facet_masks().size() != b.facet_masks().size())
        return false;
    std::vector<int> sizes_a, sizes_b;
    for (std::uint64_t m : a.facet_masks()) sizes_a.push_back(popcount(m));
    for (std::uint64_t m : b.facet_masks()) sizes_b.push_back(popcount(m));
    std::sort(sizes_a.begin(), sizes_a.end());
    std::sort(sizes_b.begin(), sizes_b.end());
    if (sizes_a != sizes_b) return false;

    auto sig_a = vertex_signatures(a);
    auto sig_b = vertex_signatures(b);
    IsoSearch s{a, b, {}, std::vector<int>(static_cast<size_t>(a.vertex_count()), -1), 0, {}};
    s.candidates.resize(static_cast<size_t>(a.vertex_count()));
    for (int va = 0; va < a.vertex_count(); ++va) {
        for (int vb = 0; vb < b.vertex_count(); ++vb)
            if (sig_a[static_cast<size_t>(va)] == sig_b[static_cast<size_t>(vb)])
                s.candidates[static_cast<size_t>(va)].push_back(vb);
        if (s.candidates[static_cast<size_t>(va)].empty()) return false;
    }
    s.order.resize(static_cast<size_t>(a.vertex_count()));
    for (int v = 0; v < a.vertex_count(); ++v) s.order[static_cast<size_t>(v)] = v;
    std::sort(s.order.begin(), s.order.end(), [&](int x, int y) {
        return s.candidates[static_cast<size_t>(x)].size() < s.candidates[static_cast<size_t>(y)].size();
    });
    return s.search(0);
}

bool is_flag(const SimplicialComplex& k) {
    const auto& faces = k.all_faces();
    const auto& adj = k.skeleton();
    // Grow cliques in ascending vertex order; bail out at the first clique
    // that is not a face. Visits at most one non-face.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> stack; // (clique, extension candidates)
    std::uint64_t all = low_bits(k.vertex_count());
    for (int v = 0; v < k.vertex_count(); ++v) {
        std::uint64_t clique = 1ull << v;
        std::uint64_t cand = adj[static_cast<size_t>(v)] & all & ~low_bits(v + 1);
        stack.push_back({clique, cand});
        while (!stack.empty()) {
            auto [cl, extensions] = stack.back();
            stack.pop_back();
            std::uint64_t rest = extensions;
            while (rest) {
                std::uint64_t bit = rest & (~rest + 1);
                rest ^= bit;
                int w = std::countr_zero(bit);
                std::uint64_t bigger = cl | bit;
                if (!faces.count(bigger)) return false;
                std::uint64_t cand2 =
                    rest & adj[static_cast<size_t>(w)]; // ascending ids stay in `rest`
                if (cand2) stack.push_back({bigger, cand2});
            }
        }
    }
    return true;
}

bool is_crosspolytope_boundary(const SimplicialComplex& k, int d) {
    if (d < 1 || k.vertex_count() != 2 * d) return false;
    if (static_cast<long long>(k.facet_masks().size()) != (1ll << d)) return false;
    const auto& adj = k.skeleton();
    std::uint64_t all = low_bits(k.vertex_count());
    for (int v = 0; v < k.vertex_count(); ++v) {
        std::uint64_t non = all & ~adj[static_cast<size_t>(v)] & ~(1ull << v);
        if (popcount(non) != 1) return false;
        int w = std::countr_zero(non);
        std::uint64_t non_w = all & ~adj[static_cast<size_t>(w)] & ~(1ull << w);
        if (non_w != (1ull << v)) return false;
    }
    return is_flag(k);
}

std::string oriented_label(int tail_1based, int head_1based) {
    return std::to_string(tail_1based) + "->" + std::to_string(head_1based);
}

SimplicialComplex build_delta(const Graph& g, const EdgeOrder& order, const FaceLimits& limits) {
    if (g.edge_count() == 0 || !is_connected(g))
        throw std::invalid_argument("build_delta: connected graph with at least one edge required");
    if (2 * g.edge_count() > 64) throw CapExceeded("build_delta: more than 64 oriented edges");
    std::vector<std::string> labels;
    for (const auto& e : g.edges()) {
        labels.push_back(oriented_label(e.u + 1, e.v + 1));
        labels.push_back(oriented_label(e.v + 1, e.u + 1));
    }
    return SimplicialComplex::from_facets(labels, facets_of_triangulation(g, order, limits));
}

EdgeOrder section4_order(const Graph& g) {
    // group 0: {2,a} descending in a; group 1: {1,a} ascending; group 2: {1,2}.
    std::vector<std::pair<std::pair<int, int>, int>> keyed;
    for (int e = 0; e < g.edge_count(); ++e) {
        Edge ed = g.edge(e);
        std::pair<int, int> key;
        if (ed.u == 0 && ed.v == 1)
            key = {2, 0};
        else if (ed.u == 1)
            key = {0, -ed.v};
        else if (ed.u == 0)
            key = {1, ed.v};
        else
            throw std::invalid_argument("section4_order: edge not incident to an apex");
        keyed.push_back({key, e});
    }
    std::sort(keyed.begin(), keyed.end());
    EdgeOrder order;
    order.rank.resize(static_cast<size_t>(g.edge_count()));
    for (size_t pos = 0; pos < keyed.size(); ++pos)
        order.rank[static_cast<size_t>(keyed[pos].second)] = static_cast<int>(pos);
    return order;
}

namespace {

BigInt gamma_entry(const std::vector<BigInt>& gamma, size_t i) {
    return i < gamma.size() ? gamma[i] : BigInt(0);
}

// Expected complex after finishing the round that peels layer m:
// point pairs {2->a, a->2} for a = m..n joined with the triangulation of
// G_{m-1}. At the bottom (m = 3) the core is the K_{2,1} triangulation,
// which already carries the +-(2->3) vertices, so pairs start at a = 4.
SimplicialComplex expected_waypoint(int n, int m, const FaceLimits& limits) {
    SimplicialComplex core;
    if (m >= 4) {
        Graph g = gn_graph(m - 1);
        core = build_delta(g, section4_order(g), limits);
    } else {
        Graph g = complete_bipartite(2, 1);
        core = build_delta(g, section4_order(g), limits);
    }
    for (int a = std::max(m, 4); a <= n; ++a)
        core = join(point_pair(oriented_label(2, a), oriented_label(a, 2)), core);
    return core;
}

} // namespace

LutzNevoReport lutz_nevo_run(int n, const FaceLimits& limits) {
    if (n < 5) throw std::invalid_argument("lutz_nevo_run: n >= 5 required");
    if (4 * n - 6 > 64) throw CapExceeded("lutz_nevo_run: triangulation exceeds the 64-vertex limit");

    LutzNevoReport report;
    report.n = n;
    Graph g = gn_graph(n);
    SimplicialComplex current = build_delta(g, section4_order(g), limits);
    report.initial_f = f_vector_of_complex(current);
    report.initial_gamma = gamma_of_complex(current);
    if (!is_flag(current)) throw InvariantViolation("lutz_nevo_run: initial complex is not flag");

    long long want_euler = n % 2 == 0 ? 2 : 0; // Euler characteristic of an (n-2)-sphere
    int step_index = 0;
    report.waypoints_check = true;

    for (int m = n; m >= 3; --m) {
        const std::string pairs[2][2] = {
            {oriented_label(1, 2), oriented_label(1, m)},
            {oriented_label(2, 1), oriented_label(m, 1)},
        };
        for (const auto& pr : pairs) {
            ContractionStep step;
            step.index = ++step_index;
            step.kept = pr[0];
            step.removed = pr[1];

            SimplicialComplex lk = link(current, {step.kept, step.removed});
            step.link_check = is_crosspolytope_boundary(lk, n - 3);
            std::vector<BigInt> gamma_before = gamma_of_complex(current);
            std::vector<BigInt> gamma_link = gamma_of_complex(lk);

            SimplicialComplex next = contract_edge(current, step.kept, step.removed);
            step.flag_check = is_flag(next);
            step.f = f_vector_of_complex(next);
            BigInt chi = 0;
            for (size_t i = 1; i < step.f.size(); ++i) chi += i % 2 == 1 ? step.f[i] : -step.f[i];
            bool palindromic = h_palindromic(next);
            step.sphere_check = palindromic && chi == want_euler && is_pseudomanifold(next);
            step.gamma = palindromic ? gamma_of_complex(next) : std::vector<BigInt>{};
            step.gamma_step_check =
                palindromic && gamma_entry(gamma_before, 2) ==
                                   gamma_entry(step.gamma, 2) + gamma_entry(gamma_link, 1);

            if (!step.link_check)
                throw InvariantViolation("lutz_nevo_run: link check failed at step " +
                                         std::to_string(step.index));
            if (!step.flag_check)
                throw InvariantViolation("lutz_nevo_run: flagness failed at step " +
                                         std::to_string(step.index));
            if (!step.sphere_check)
                throw InvariantViolation("lutz_nevo_run: sphere surrogate failed at step " +
                                         std::to_string(step.index));
            if (!step.gamma_step_check)
                throw InvariantViolation("lutz_nevo_run: gamma contraction identity failed at step " +
                                         std::to_string(step.index));
            report.steps.push_back(std::move(step));
            current = std::move(next);
        }

        SimplicialComplex expected = expected_waypoint(n, m, limits);
        SimplicialComplex probe = current;
        if (m == 3) {
            // The bottom relabeling sends +-(1->2) back to +-(1->3).
            probe = relabel(probe, {{oriented_label(1, 2), oriented_label(1, 3)},
                                    {oriented_label(2, 1), oriented_label(3, 1)}});
        }
        if (!complexes_equal(probe, expected)) {
            report.waypoints_check = false;
            throw InvariantViolation("lutz_nevo_run: complex after layer " + std::to_string(m) +
                                     " is not the expected suspension");
        }
    }

    report.final_crosspolytope = is_crosspolytope_boundary(current, n - 1);
    if (!report.final_crosspolytope)
        throw InvariantViolation("lutz_nevo_run: final complex is not a cross-polytope boundary");
    return report;
}

} // namespace sep
