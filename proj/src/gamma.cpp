#include "sep/gamma.hpp"

#include <algorithm>
#include <stdexcept>

#include "sep/errors.hpp"

namespace sep {

std::vector<BigInt> f_to_h(const std::vector<BigInt>& f, int d) {
    if (static_cast<int>(f.size()) != d + 1 || d < 0)
        throw std::invalid_argument("f_to_h: f must have d+1 entries");
    if (f[0] != 1) throw std::invalid_argument("f_to_h: f_{-1} must be 1");
    std::vector<BigInt> h(static_cast<size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) {
        BigInt acc = 0;
        for (int i = 0; i <= j; ++i) {
            BigInt term = binomial(d - i, d - j) * f[static_cast<size_t>(i)];
            if ((j - i) % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        h[static_cast<size_t>(j)] = acc;
    }
    return h;
}

std::vector<BigInt> h_to_f(const std::vector<BigInt>& h) {
    int d = static_cast<int>(h.size()) - 1;
    std::vector<BigInt> f(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        BigInt acc = 0;
        for (int j = 0; j <= d; ++j) acc += h[static_cast<size_t>(j)] * binomial(d - j, d - i);
        f[static_cast<size_t>(i)] = acc;
    }
    return f;
}

std::vector<BigInt> h_to_gamma(const std::vector<BigInt>& h) {
    int d = static_cast<int>(h.size()) - 1;
    if (d < 0) throw std::invalid_argument("h_to_gamma: empty h");
    for (int i = 0; i <= d; ++i)
        if (h[static_cast<size_t>(i)] != h[static_cast<size_t>(d - i)])
            throw std::invalid_argument("h_to_gamma: h is not palindromic");
    std::vector<BigInt> residual = h;
    std::vector<BigInt> gamma(static_cast<size_t>(d / 2) + 1);
    for (int i = 0; i <= d / 2; ++i) {
        gamma[static_cast<size_t>(i)] = residual[static_cast<size_t>(i)];
        for (int j = 0; j <= d - 2 * i; ++j)
            residual[static_cast<size_t>(i + j)] -= gamma[static_cast<size_t>(i)] * binomial(d - 2 * i, j);
    }
    for (const auto& r : residual)
        if (r != 0) throw InvariantViolation("h_to_gamma: elimination left a nonzero residual");
    return gamma;
}

std::vector<BigInt> gamma_to_h(const std::vector<BigInt>& gamma, int d) {
    std::vector<BigInt> h(static_cast<size_t>(d) + 1, BigInt(0));
    for (int i = 0; i < static_cast<int>(gamma.size()); ++i) {
        if (gamma[static_cast<size_t>(i)] == 0) continue;
        if (2 * i > d) throw std::invalid_argument("gamma_to_h: gamma longer than floor(d/2)+1");
        for (int j = 0; j <= d - 2 * i; ++j)
            h[static_cast<size_t>(i + j)] += gamma[static_cast<size_t>(i)] * binomial(d - 2 * i, j);
    }
    return h;
}

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

namespace {

struct ComponentVectors {
    std::vector<BigInt> f, h, gamma;
    int dim = 0;
};

// Full vectors of one connected component. Trees shortcut to the
// cross-polytope boundary; anything with a cycle is enumerated.
ComponentVectors full_vectors_connected(const Graph& comp, const FaceLimits& limits,
                                        std::optional<std::uint64_t> order_seed = std::nullopt) {
    int n = comp.vertex_count();
    int m = comp.edge_count();
    ComponentVectors cv;
    cv.dim = n - 1;
    if (m == 0) {
        cv.f = {BigInt(1)};
        cv.h = {BigInt(1)};
        cv.gamma = {BigInt(1)};
        return cv;
    }
    if (cyclomatic_number(comp) == 0) {
        cv.f.resize(static_cast<size_t>(m) + 1);
        cv.h.resize(static_cast<size_t>(m) + 1);
        for (int j = 0; j <= m; ++j) {
            cv.f[static_cast<size_t>(j)] = pow2(j) * binomial(m, j);
            cv.h[static_cast<size_t>(j)] = binomial(m, j);
        }
        cv.gamma = {BigInt(1)};
        return cv;
    }
    EdgeOrder order = order_seed ? EdgeOrder::shuffled(m, *order_seed) : EdgeOrder::list_order(m);
    FaceCountReport rep = enumerate_faces(comp, order, FaceMode::full, 0, limits);
    cv.f = rep.f;
    cv.h = f_to_h(cv.f, cv.dim);
    BigInt hsum = 0;
    for (const auto& x : cv.h) hsum += x;
    if (hsum != cv.f.back())
        throw InvariantViolation("gamma_full: sum of h differs from the facet count");
    cv.gamma = h_to_gamma(cv.h); // also enforces palindromicity
    return cv;
}

// Face counts f_{-1}..f_{upto-1} of one connected component; sizes 0 and 1
// come from closed formulas, sizes >= 3 from the bounded scan.
std::vector<BigInt> f_prefix_connected(const Graph& comp, int upto, const FaceLimits& limits) {
    long long m = comp.edge_count();
    std::vector<BigInt> f(static_cast<size_t>(upto) + 1, BigInt(0));
    f[0] = 1;
    if (upto >= 1) f[1] = 2 * m;
    if (upto >= 2)
        f[2] = binomial(2 * m, 2) - m - bad_pair_count(comp, EdgeOrder::list_order(static_cast<int>(m)),
                                                       CycleLimits{limits.max_cycles});
    if (upto >= 3) {
        FaceCountReport rep =
            enumerate_faces(comp, EdgeOrder::list_order(static_cast<int>(m)), FaceMode::up_to, upto, limits);
        for (int j = 3; j <= upto; ++j) f[static_cast<size_t>(j)] = rep.f[static_cast<size_t>(j)];
    }
    return f;
}

// [t^{d-kk}] (t+1)^i (t+2)^{d-2i}
BigInt truncation_coefficient(int d, int kk, int i) {
    BigInt acc = 0;
    for (int j = std::max(0, d - kk - i); j <= std::min(d - kk, d - 2 * i); ++j)
        acc += binomial(i, d - kk - j) * binomial(d - 2 * i, j) * pow2(d - 2 * i - j);
    return acc;
}

// gamma_0..gamma_k of one connected component via the face-count recursion.
std::vector<BigInt> gamma_prefix_connected(const Graph& comp, int k, const FaceLimits& limits) {
    int d = comp.vertex_count() - 1;
    std::vector<BigInt> f = f_prefix_connected(comp, std::min(k, comp.edge_count()), limits);
    f.resize(static_cast<size_t>(k) + 1, BigInt(0));
    std::vector<BigInt> gamma(static_cast<size_t>(k) + 1);
    for (int kk = 0; kk <= k; ++kk) {
        BigInt acc = f[static_cast<size_t>(kk)];
        for (int i = 0; i < kk; ++i) acc -= gamma[static_cast<size_t>(i)] * truncation_coefficient(d, kk, i);
        gamma[static_cast<size_t>(kk)] = acc;
    }
    return gamma;
}

void pad_to(std::vector<BigInt>& v, size_t len) {
    if (v.size() < len) v.resize(len, BigInt(0));
}

EdgeOrder induced_order(const Graph& g, const EdgeOrder& order, const std::vector<int>& edge_indices) {
    std::vector<std::pair<int, int>> ranked; // (global rank, local index)
    for (size_t i = 0; i < edge_indices.size(); ++i)
        ranked.push_back({order.rank[static_cast<size_t>(edge_indices[i])], static_cast<int>(i)});
    std::sort(ranked.begin(), ranked.end());
    EdgeOrder out;
    out.rank.resize(edge_indices.size());
    for (size_t pos = 0; pos < ranked.size(); ++pos)
        out.rank[static_cast<size_t>(ranked[pos].second)] = static_cast<int>(pos);
    return out;
}

} // namespace

GammaReport gamma_full(const Graph& g, const FaceLimits& limits, std::optional<std::uint64_t> order_seed) {
    GammaReport report;
    report.n = g.vertex_count();
    report.m = g.edge_count();
    report.method = "full-enumeration";
    report.order_seed = order_seed;
    std::vector<BigInt> f = {BigInt(1)}, h = {BigInt(1)}, gamma = {BigInt(1)};
    int dim = 0;
    int comp_index = 0;
    for (const auto& comp : connected_components(g)) {
        std::optional<std::uint64_t> seed;
        if (order_seed) seed = mix64(*order_seed + static_cast<std::uint64_t>(comp_index));
        ++comp_index;
        ComponentVectors cv = full_vectors_connected(comp.graph, limits, seed);
        f = poly_mul(f, cv.f);
        h = poly_mul(h, cv.h);
        gamma = poly_mul(gamma, cv.gamma);
        dim += cv.dim;
    }
    report.dim = dim;
    pad_to(gamma, static_cast<size_t>(dim / 2) + 1);
    report.f = std::move(f);
    report.h = std::move(h);
    report.gamma = std::move(gamma);
    return report;
}

GammaReport gamma_truncated(const Graph& g, int k, const FaceLimits& limits) {
    int dim = g.vertex_count() - component_count(g);
    if (k < 0 || k > dim / 2)
        throw std::invalid_argument("gamma_truncated: k must lie in 0..floor(dim/2)");
    GammaReport report;
    report.n = g.vertex_count();
    report.m = g.edge_count();
    report.dim = dim;
    report.method = "truncated-recursion";
    std::vector<BigInt> f = {BigInt(1)}, gamma = {BigInt(1)};
    for (const auto& comp : connected_components(g)) {
        if (comp.graph.edge_count() == 0) continue;
        int ki = std::min(k, (comp.graph.vertex_count() - 1) / 2);
        std::vector<BigInt> cf = f_prefix_connected(comp.graph, std::min(k, comp.graph.edge_count()), limits);
        pad_to(cf, static_cast<size_t>(k) + 1);
        f = poly_mul(f, cf);
        f.resize(static_cast<size_t>(k) + 1);
        std::vector<BigInt> cg = gamma_prefix_connected(comp.graph, ki, limits);
        gamma = poly_mul(gamma, cg);
        if (gamma.size() > static_cast<size_t>(k) + 1) gamma.resize(static_cast<size_t>(k) + 1);
    }
    pad_to(f, static_cast<size_t>(k) + 1);
    pad_to(gamma, static_cast<size_t>(k) + 1);
    report.f = std::move(f);
    report.gamma = std::move(gamma);
    return report;
}

std::vector<BigInt> gamma_prefix_padded(const Graph& g, int k, const FaceLimits& limits) {
    int dim = g.vertex_count() - component_count(g);
    GammaReport rep = gamma_truncated(g, std::min(k, dim / 2), limits);
    std::vector<BigInt> out = rep.gamma;
    pad_to(out, static_cast<size_t>(k) + 1);
    return out;
}

long long gamma1(const Graph& g) { return 2 * cyclomatic_number(g); }

BigInt gamma2(const Graph& g, const EdgeOrder& order) {
    if (static_cast<int>(order.rank.size()) != g.edge_count() || !order.valid())
        throw std::invalid_argument("gamma2: EdgeOrder does not match the graph");
    BigInt total = 0;
    std::vector<long long> cys;
    auto comps = connected_components(g);
    for (const auto& comp : comps) {
        long long cy = cyclomatic_number(comp.graph);
        cys.push_back(cy);
        if (comp.graph.edge_count() == 0) continue;
        std::vector<int> edge_indices;
        for (int e = 0; e < g.edge_count(); ++e) {
            // edge belongs to this component iff its endpoints map into it
            int u = g.edge(e).u;
            if (std::binary_search(comp.vertex_map.begin(), comp.vertex_map.end(), u)) edge_indices.push_back(e);
        }
        BigInt n1 = bad_pair_count(comp.graph, induced_order(g, order, edge_indices));
        total += BigInt(2) * cy * (cy + 2) - n1;
    }
    for (size_t i = 0; i < cys.size(); ++i)
        for (size_t j = i + 1; j < cys.size(); ++j) total += BigInt(4) * cys[i] * cys[j];
    return total;
}

BigInt gamma2(const Graph& g) { return gamma2(g, EdgeOrder::list_order(g.edge_count())); }

GammaReport gamma_via_blocks(const Graph& g, int k, const FaceLimits& limits) {
    int dim = g.vertex_count() - component_count(g);
    if (k >= 0 && k > dim / 2)
        throw std::invalid_argument("gamma_via_blocks: k must lie in 0..floor(dim/2)");
    GammaReport report;
    report.n = g.vertex_count();
    report.m = g.edge_count();
    report.dim = dim;
    report.method = "block-product";
    bool full = k < 0;
    std::vector<BigInt> f = {BigInt(1)}, h = {BigInt(1)}, gamma = {BigInt(1)};
    int dim_check = 0;
    for (const auto& block : blocks(g).blocks) {
        Component bc = edge_induced_subgraph(g, block);
        dim_check += bc.graph.vertex_count() - 1;
        if (full) {
            ComponentVectors cv = full_vectors_connected(bc.graph, limits);
            f = poly_mul(f, cv.f);
            h = poly_mul(h, cv.h);
            gamma = poly_mul(gamma, cv.gamma);
        } else {
            int kb = std::min(k, (bc.graph.vertex_count() - 1) / 2);
            gamma = poly_mul(gamma, gamma_prefix_connected(bc.graph, kb, limits));
            if (gamma.size() > static_cast<size_t>(k) + 1) gamma.resize(static_cast<size_t>(k) + 1);
        }
    }
    if (dim_check != dim) throw InvariantViolation("gamma_via_blocks: block dimensions do not sum to n - c");
    if (full) {
        pad_to(gamma, static_cast<size_t>(dim / 2) + 1);
        report.f = std::move(f);
        report.h = std::move(h);
    } else {
        pad_to(gamma, static_cast<size_t>(k) + 1);
    }
    report.gamma = std::move(gamma);
    return report;
}

Gamma2Classification classify_gamma2_zero(const Graph& g) {
    BlockDecomposition bd = blocks(g);
    std::vector<const std::vector<int>*> cyclic;
    for (const auto& b : bd.blocks)
        if (b.size() >= 2) cyclic.push_back(&b);
    if (cyclic.empty()) return {true, "forest"};
    if (cyclic.size() >= 2) return {false, "two 2-connected components with cycles"};
    Component bc = edge_induced_subgraph(g, *cyclic.front());
    const Graph& b = bc.graph;
    if (b.vertex_count() == 4 && b.edge_count() == 6) return {true, "unique cyclic component is K4"};
    if (is_iso_gn(b))
        return {true, "unique cyclic component is G_" + std::to_string(b.vertex_count())};
    if (is_iso_k2m(b))
        return {true, "unique cyclic component is K_{2," + std::to_string(b.vertex_count() - 2) + "}"};
    return {false,
            "cyclic component on " + std::to_string(b.vertex_count()) + " vertices is none of K4, G_n, K_{2,m}"};
}

BigInt closed_form_kn(int n, int i) {
    if (n < 1 || i < 0) throw std::invalid_argument("closed_form_kn: n >= 1, i >= 0 required");
    return binomial(n - 1, 2 * i) * binomial(2 * i, i);
}

BigInt closed_form_kmn(int m, int n, int i) {
    if (m < 1 || n < 1 || i < 0) throw std::invalid_argument("closed_form_kmn: m, n >= 1, i >= 0 required");
    return binomial(m - 1, i) * binomial(n - 1, i) * binomial(2 * i, i);
}

GammaReport gamma_closed_form(const Graph& g) {
    GammaReport report;
    report.n = g.vertex_count();
    report.m = g.edge_count();
    report.method = "closed-form";
    int parts_m = 0, parts_n = 0;
    if (is_complete(g) && g.vertex_count() >= 1) {
        int n = g.vertex_count();
        report.dim = n - 1;
        for (int i = 0; i <= (n - 1) / 2; ++i) report.gamma.push_back(closed_form_kn(n, i));
    } else if (complete_bipartite_parts(g, parts_m, parts_n)) {
        int d = parts_m + parts_n - 1;
        report.dim = d;
        for (int i = 0; i <= d / 2; ++i) report.gamma.push_back(closed_form_kmn(parts_m, parts_n, i));
    } else {
        throw std::invalid_argument("gamma_closed_form: graph is neither complete nor complete bipartite");
    }
    report.h = gamma_to_h(report.gamma, report.dim);
    report.f = h_to_f(report.h);
    return report;
}

GammaReport gamma_auto(const Graph& g, const FaceLimits& limits) {
    int parts_m = 0, parts_n = 0;
    if ((is_complete(g) && g.vertex_count() >= 1) || complete_bipartite_parts(g, parts_m, parts_n))
        return gamma_closed_form(g);
    if (blocks(g).blocks.size() >= 2) return gamma_via_blocks(g, -1, limits);
    return gamma_full(g, limits);
}

} // namespace sep
