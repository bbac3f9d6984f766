#ifndef SUBFREE_UTIL_HPP
#define SUBFREE_UTIL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace subfree {

enum class Err {
    parse,
    invalid_input,
    index_out_of_range,
    self_loop,
    unknown_edge,
    invalid_decomposition,
    layer_out_of_range,
    invalid_embedding,
    degenerate_input,
    model_invalid,
    malformed_formula,
    too_large,
    internal,
};

struct Error : std::runtime_error {
    Err code;
    Error(Err c, const std::string& what) : std::runtime_error(what), code(c) {}
};

inline const char* err_name(Err e) {
    switch (e) {
        case Err::parse: return "Parse";
        case Err::invalid_input: return "InvalidInput";
        case Err::index_out_of_range: return "IndexOutOfRange";
        case Err::self_loop: return "SelfLoop";
        case Err::unknown_edge: return "UnknownEdge";
        case Err::invalid_decomposition: return "InvalidDecomposition";
        case Err::layer_out_of_range: return "LayerOutOfRange";
        case Err::invalid_embedding: return "InvalidEmbedding";
        case Err::degenerate_input: return "DegenerateInput";
        case Err::model_invalid: return "ModelInvalid";
        case Err::malformed_formula: return "MalformedFormula";
        case Err::too_large: return "TooLarge";
        case Err::internal: return "Internal";
    }
    return "Unknown";
}

// Deterministic 64-bit generator (splitmix64). We avoid std distributions so
// seeded corpora are identical across standard libraries.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }
    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1))); }
    double unit() { return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0); }
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);  // keep smallest index as the root
        parent[b] = a;
        return true;
    }
};

inline void hash_mix(uint64_t& h, uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
}

}  // namespace subfree

#endif
