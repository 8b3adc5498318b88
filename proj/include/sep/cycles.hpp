#ifndef SEP_CYCLES_HPP
#define SEP_CYCLES_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "sep/graph.hpp"

namespace sep {

// An unoriented simple cycle in canonical form: lowest vertex first, then the
// lower of its two cycle neighbors second. Its two orientations are derived
// where needed.
struct Cycle {
    std::vector<int> vertices;
    std::vector<int> edge_indices; // edge_indices[i] joins vertices[i] and vertices[i+1 mod len]
    int length() const { return static_cast<int>(vertices.size()); }
};

struct CycleLimits {
    long long max_cycles = 10'000'000;
};

// All simple cycles of length 3..max_len, each once, sorted by
// (length, vertex sequence). Throws CapExceeded beyond limits.max_cycles.
std::vector<Cycle> enumerate_cycles(const Graph& g, int max_len, const CycleLimits& limits = {});

std::map<int, long long> count_cycles_by_length(const Graph& g, int max_len, const CycleLimits& limits = {});

} // namespace sep

#endif
