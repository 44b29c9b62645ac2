#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "graphnil/error.hpp"

namespace graphnil {

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

/// Finite simple graph on vertices 0..n-1. Edges are kept sorted
/// lexicographically on (min, max); downstream basis indexing relies on that
/// order.
class Graph {
public:
    using Edge = std::pair<int, int>;

    explicit Graph(int n, std::vector<Edge> edges = {}) : n_(n) {
        if (n < 0)
            throw error("negative vertex count");
        for (auto& [i, j] : edges) {
            if (i == j)
                throw error("loop at vertex " + std::to_string(i));
            if (i > j)
                std::swap(i, j);
            if (i < 0 || j >= n)
                throw error("edge endpoint out of range: (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")");
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw error("duplicate edge");
        edges_ = std::move(edges);
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int i, int j) const {
        if (i > j)
            std::swap(i, j);
        return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
    }

    /// Position of edge {i, j} in the sorted edge list, or -1 for a non-edge.
    int edge_index(int i, int j) const {
        if (i > j)
            std::swap(i, j);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{i, j});
        if (it == edges_.end() || *it != Edge{i, j})
            return -1;
        return static_cast<int>(it - edges_.begin());
    }

    int degree(int v) const {
        int d = 0;
        for (const auto& [i, j] : edges_)
            d += (i == v) + (j == v);
        return d;
    }

    int isolated_count() const {
        std::vector<bool> touched(static_cast<std::size_t>(n_), false);
        for (const auto& [i, j] : edges_)
            touched[i] = touched[j] = true;
        return static_cast<int>(std::count(touched.begin(), touched.end(), false));
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_;
    std::vector<Edge> edges_;
};

/// Bijection of 0..n-1, stored as the image sequence.
struct VertexPermutation {
    std::vector<int> image;

    explicit VertexPermutation(std::vector<int> img) : image(std::move(img)) {
        std::vector<bool> seen(image.size(), false);
        for (int v : image) {
            if (v < 0 || v >= static_cast<int>(image.size()) || seen[v])
                throw error("not a permutation");
            seen[v] = true;
        }
    }

    static VertexPermutation identity(int n) {
        std::vector<int> img(static_cast<std::size_t>(n));
        std::iota(img.begin(), img.end(), 0);
        return VertexPermutation(std::move(img));
    }

    int size() const { return static_cast<int>(image.size()); }
    int operator()(int v) const { return image[v]; }

    /// (*this) after `inner`: v -> image[inner(v)].
    VertexPermutation compose(const VertexPermutation& inner) const {
        if (size() != inner.size())
            throw error("permutation size mismatch");
        std::vector<int> img(image.size());
        for (std::size_t v = 0; v < img.size(); ++v)
            img[v] = image[inner.image[v]];
        return VertexPermutation(std::move(img));
    }

    VertexPermutation inverse() const {
        std::vector<int> img(image.size());
        for (std::size_t v = 0; v < img.size(); ++v)
            img[image[v]] = static_cast<int>(v);
        return VertexPermutation(std::move(img));
    }

    bool operator==(const VertexPermutation& o) const { return image == o.image; }
};

inline Graph permute_graph(const Graph& g, const VertexPermutation& sigma) {
    if (sigma.size() != g.vertex_count())
        throw error("permutation size mismatch");
    std::vector<Graph::Edge> edges;
    edges.reserve(g.edges().size());
    for (const auto& [i, j] : g.edges())
        edges.emplace_back(sigma(i), sigma(j));
    return Graph(g.vertex_count(), std::move(edges));
}

// ---------------------------------------------------------------------------
// Parsing and serialization
// ---------------------------------------------------------------------------

inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [i, j] : g.edges())
        edges.push_back({i, j});
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

inline Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw error("graph JSON needs an integer field \"n\"");
    const int n = j["n"].get<int>();
    std::vector<Graph::Edge> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array())
            throw error("graph JSON field \"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw error("graph JSON edge must be a pair of integers");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    }
    return Graph(n, std::move(edges));
}

/// Parses the edge-list text format (first line "vertices <n>", then one
/// "i j" pair per line) or, when the input starts with '{', the JSON format.
/// Errors carry the offending line number.
inline Graph parse_graph(std::string_view input) {
    const auto first = input.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && input[first] == '{') {
        nlohmann::json j = nlohmann::json::parse(input, nullptr, false);
        if (j.is_discarded())
            throw error("malformed graph JSON");
        return graph_from_json(j);
    }

    std::istringstream in{std::string(input)};
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Graph::Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first_tok;
        if (!(ls >> first_tok))
            continue; // blank line
        if (n < 0) {
            int count = 0;
            std::string rest;
            if (first_tok != "vertices" || !(ls >> count) || count < 0 || (ls >> rest))
                throw error("line " + std::to_string(lineno) +
                            ": expected header \"vertices <n>\"");
            n = count;
            continue;
        }
        int i = 0, j = 0;
        std::string rest;
        std::istringstream es(line);
        if (!(es >> i >> j) || (es >> rest))
            throw error("line " + std::to_string(lineno) + ": expected \"i j\"");
        if (i == j)
            throw error("loop at line " + std::to_string(lineno));
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw error("endpoint out of range at line " + std::to_string(lineno));
        auto e = std::minmax(i, j);
        if (std::find(edges.begin(), edges.end(), Graph::Edge{e.first, e.second}) != edges.end())
            throw error("duplicate edge at line " + std::to_string(lineno));
        edges.emplace_back(e.first, e.second);
    }
    if (n < 0)
        throw error("missing \"vertices <n>\" header");
    return Graph(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Canonical form
// ---------------------------------------------------------------------------

namespace detail {

/// Index of pair (i, j), i < j, in row-major upper-triangular order.
inline int pair_index(int n, int i, int j) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Adjacency bitmask with pair 0 at the most significant of the C(n,2) bits,
/// so numeric order on masks equals lexicographic order on bitstrings.
inline std::uint64_t mask_of(const Graph& g) {
    const int pairs = g.vertex_count() * (g.vertex_count() - 1) / 2;
    std::uint64_t mask = 0;
    for (const auto& [i, j] : g.edges())
        mask |= std::uint64_t{1} << (pairs - 1 - pair_index(g.vertex_count(), i, j));
    return mask;
}

inline Graph graph_from_mask(int n, std::uint64_t mask) {
    const int pairs = n * (n - 1) / 2;
    std::vector<Graph::Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mask >> (pairs - 1 - pair_index(n, i, j)) & 1)
                edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

} // namespace detail

/// Lexicographically minimal upper-triangular adjacency bitstring over all
/// vertex relabelings. Exhaustive over n! permutations; n <= 10.
inline std::uint64_t canonical_mask(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 10)
        throw error("too large for exhaustive canonicalization (n <= 10)");
    const int pairs = n * (n - 1) / 2;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t mask = 0;
        for (const auto& [i, j] : g.edges()) {
            auto [a, b] = std::minmax(perm[i], perm[j]);
            mask |= std::uint64_t{1} << (pairs - 1 - detail::pair_index(n, a, b));
        }
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// Canonical form as a '0'/'1' string of length C(n,2); two graphs are
/// isomorphic iff their canonical forms are equal.
inline std::string canonical_form(const Graph& g) {
    const int pairs = g.vertex_count() * (g.vertex_count() - 1) / 2;
    const std::uint64_t mask = canonical_mask(g);
    std::string s(static_cast<std::size_t>(pairs), '0');
    for (int k = 0; k < pairs; ++k)
        if (mask >> (pairs - 1 - k) & 1)
            s[static_cast<std::size_t>(k)] = '1';
    return s;
}

// ---------------------------------------------------------------------------
// Isomorphism search
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::vector<bool>> adjacency(const Graph& g) {
    std::vector<std::vector<bool>> adj(g.vertex_count(),
                                       std::vector<bool>(g.vertex_count(), false));
    for (const auto& [i, j] : g.edges())
        adj[i][j] = adj[j][i] = true;
    return adj;
}

inline bool iso_backtrack(const std::vector<std::vector<bool>>& ga,
                          const std::vector<std::vector<bool>>& ha,
                          const std::vector<int>& gdeg, const std::vector<int>& hdeg,
                          std::vector<int>& img, std::vector<bool>& used, int v) {
    const int n = static_cast<int>(img.size());
    if (v == n)
        return true;
    for (int u = 0; u < n; ++u) {
        if (used[u] || gdeg[v] != hdeg[u])
            continue;
        bool ok = true;
        for (int w = 0; w < v && ok; ++w)
            ok = (ga[v][w] == ha[u][img[w]]);
        if (!ok)
            continue;
        img[v] = u;
        used[u] = true;
        if (iso_backtrack(ga, ha, gdeg, hdeg, img, used, v + 1))
            return true;
        used[u] = false;
    }
    return false;
}

} // namespace detail

/// Vertex bijection carrying edges of g exactly onto edges of h, if one
/// exists. Deterministic: candidates are tried in ascending order.
inline std::optional<VertexPermutation> graph_iso(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return std::nullopt;
    const int n = g.vertex_count();
    const auto ga = detail::adjacency(g), ha = detail::adjacency(h);
    std::vector<int> gdeg(n), hdeg(n);
    for (int v = 0; v < n; ++v) {
        gdeg[v] = g.degree(v);
        hdeg[v] = h.degree(v);
    }
    {
        auto gs = gdeg, hs = hdeg;
        std::sort(gs.begin(), gs.end());
        std::sort(hs.begin(), hs.end());
        if (gs != hs)
            return std::nullopt;
    }
    std::vector<int> img(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    if (!detail::iso_backtrack(ga, ha, gdeg, hdeg, img, used, 0))
        return std::nullopt;
    return VertexPermutation(std::move(img));
}

/// All automorphisms, by exhaustive permutation scan. Lex order on images.
inline std::vector<VertexPermutation> automorphisms(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 10)
        throw error("too large for exhaustive automorphism scan (n <= 10)");
    const std::uint64_t mask = detail::mask_of(g);
    const int pairs = n * (n - 1) / 2;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<VertexPermutation> autos;
    do {
        std::uint64_t img = 0;
        for (const auto& [i, j] : g.edges()) {
            auto [a, b] = std::minmax(perm[i], perm[j]);
            img |= std::uint64_t{1} << (pairs - 1 - detail::pair_index(n, a, b));
        }
        if (img == mask)
            autos.push_back(VertexPermutation(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return autos;
}

// ---------------------------------------------------------------------------
// Enumeration up to isomorphism
// ---------------------------------------------------------------------------

namespace detail {

/// Exactly one canonical representative per isomorphism class on n vertices,
/// from the full scan of 2^(n(n-1)/2) edge subsets. Sorted by edge count,
/// then by canonical bitstring.
inline std::vector<Graph> enumerate_graphs_uncached(int n) {
    const int pairs = n * (n - 1) / 2;

    // pair-index relabeling table per non-identity permutation
    std::vector<std::vector<int>> tables;
    {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        while (std::next_permutation(perm.begin(), perm.end())) {
            std::vector<int> t(static_cast<std::size_t>(pairs));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    auto [a, b] = std::minmax(perm[i], perm[j]);
                    t[detail::pair_index(n, i, j)] = detail::pair_index(n, a, b);
                }
            tables.push_back(std::move(t));
        }
    }

    // a mask is kept iff no relabeling maps it to a smaller mask
    std::vector<std::uint64_t> canon;
    const std::uint64_t limit = std::uint64_t{1} << pairs;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        bool minimal = true;
        for (const auto& t : tables) {
            std::uint64_t img = 0;
            std::uint64_t rest = mask;
            while (rest) {
                const int bit = std::countr_zero(rest);
                rest &= rest - 1;
                img |= std::uint64_t{1} << (pairs - 1 - t[pairs - 1 - bit]);
            }
            if (img < mask) {
                minimal = false;
                break;
            }
        }
        if (minimal)
            canon.push_back(mask);
    }

    std::sort(canon.begin(), canon.end(), [](std::uint64_t a, std::uint64_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<Graph> out;
    out.reserve(canon.size());
    for (std::uint64_t mask : canon)
        out.push_back(graph_from_mask(n, mask));
    return out;
}

} // namespace detail

/// Canonical representatives on n vertices, n <= 7. Results are memoized;
/// the scan over all edge subsets runs once per vertex count.
inline std::vector<Graph> enumerate_graphs(int n) {
    if (n < 1 || n > 7)
        throw error("vertex count out of range for enumeration (1..7)");
    static std::mutex mu;
    static std::vector<Graph> cache[8];
    std::lock_guard<std::mutex> lock(mu);
    if (cache[n].empty())
        cache[n] = detail::enumerate_graphs_uncached(n);
    return cache[n];
}

/// All isomorphism classes with vertex count + edge count = d, for d <= 10.
inline std::vector<Graph> graphs_with_total(int d) {
    if (d < 1 || d > 10)
        throw error("total dimension out of range (1..10)");
    std::vector<Graph> out;
    for (int n = 1; n <= d; ++n) {
        const int m = d - n;
        if (m > n * (n - 1) / 2)
            continue;
        if (n <= 7) {
            for (auto& g : enumerate_graphs(n))
                if (g.edge_count() == m)
                    out.push_back(std::move(g));
        } else {
            // n >= 8 forces m = d - n <= 2. Up to isomorphism the graphs with
            // at most two edges are: no edge; one edge; two edges sharing a
            // vertex; two disjoint edges.
            std::vector<Graph> shapes;
            if (m == 0)
                shapes.push_back(Graph(n));
            else if (m == 1)
                shapes.push_back(Graph(n, {{0, 1}}));
            else {
                shapes.push_back(Graph(n, {{0, 1}, {1, 2}}));
                shapes.push_back(Graph(n, {{0, 1}, {2, 3}}));
            }
            std::vector<std::uint64_t> masks;
            for (const auto& g : shapes)
                masks.push_back(canonical_mask(g));
            std::sort(masks.begin(), masks.end());
            for (std::uint64_t mask : masks)
                out.push_back(detail::graph_from_mask(n, mask));
        }
    }
    return out;
}

} // namespace graphnil
