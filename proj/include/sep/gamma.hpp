#ifndef SEP_GAMMA_HPP
#define SEP_GAMMA_HPP

#include <optional>
#include <string>
#include <vector>

#include "sep/graph.hpp"
#include "sep/numeric.hpp"
#include "sep/triangulation.hpp"

namespace sep {

struct GammaReport {
    int n = 0;
    int m = 0;
    int dim = 0; // n - (number of components)
    std::vector<BigInt> f;     // f[i] = faces with i vertices; empty if the method does not produce it
    std::vector<BigInt> h;     // h-vector (= h* of the polytope); empty for truncated runs
    std::vector<BigInt> gamma; // gamma_0..gamma_k
    std::string method;        // full-enumeration | truncated-recursion | block-product | closed-form
    std::optional<std::uint64_t> order_seed;
};

// Standard transform h_j = sum_{i<=j} (-1)^{j-i} C(d-i, d-j) f_{i-1};
// f must have d+1 entries with f[0] = 1.
std::vector<BigInt> f_to_h(const std::vector<BigInt>& f, int d);

// Inverse of f_to_h.
std::vector<BigInt> h_to_f(const std::vector<BigInt>& h);

// Coordinates of a palindromic h in the basis t^i (1+t)^{d-2i}, by triangular
// elimination; throws std::invalid_argument if h is not palindromic.
std::vector<BigInt> h_to_gamma(const std::vector<BigInt>& h);

// Expansion sum_i gamma_i t^i (1+t)^{d-2i}.
std::vector<BigInt> gamma_to_h(const std::vector<BigInt>& gamma, int d);

// Plain polynomial product; gamma/h/f polynomials all multiply across
// components and blocks (the polytope is the free sum).
std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b);

// Full f -> h -> gamma per connected component, convolved. With order_seed
// the enumeration runs over a shuffled edge order (the results are
// order-independent; the seed is recorded in the report).
GammaReport gamma_full(const Graph& g, const FaceLimits& limits = {},
                       std::optional<std::uint64_t> order_seed = std::nullopt);

// gamma_0..gamma_k from face counts f_{-1}..f_{k-1} only, per component,
// convolved. Requires k <= floor(dim/2).
GammaReport gamma_truncated(const Graph& g, int k, const FaceLimits& limits = {});

// Same, but k is clamped per component and the output padded with zeros to
// length k+1; used by the sampling harness where tiny components are routine.
std::vector<BigInt> gamma_prefix_padded(const Graph& g, int k, const FaceLimits& limits = {});

long long gamma1(const Graph& g); // 2 cy(G)

// 2 cy (cy+2) - n_1 per connected component, combined by the product rule.
BigInt gamma2(const Graph& g, const EdgeOrder& order);
BigInt gamma2(const Graph& g); // list order

// Per 2-connected block, convolved across blocks and components.
// k < 0 computes every block in full.
GammaReport gamma_via_blocks(const Graph& g, int k = -1, const FaceLimits& limits = {});

struct Gamma2Classification {
    bool zero = false;
    std::string witness;
};

// Purely structural: gamma_2 = 0 iff the graph is a forest, or exactly one
// block is not an edge and that block is K4, G_l, or K_{2,l}.
Gamma2Classification classify_gamma2_zero(const Graph& g);

BigInt closed_form_kn(int n, int i);
BigInt closed_form_kmn(int m, int n, int i);

// Closed-form route when the graph is complete or complete bipartite;
// throws std::invalid_argument otherwise.
GammaReport gamma_closed_form(const Graph& g);

// Picks closed-form, block-product, or full enumeration.
GammaReport gamma_auto(const Graph& g, const FaceLimits& limits = {});

} // namespace sep

#endif
