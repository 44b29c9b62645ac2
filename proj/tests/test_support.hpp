#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "graphnil/field.hpp"
#include "graphnil/graph.hpp"
#include "graphnil/liealg.hpp"
#include "graphnil/matrix.hpp"

namespace testutil {

using namespace graphnil;

inline Graph edgeless(int n) { return Graph(n); }

inline Graph path_graph(int n) {
    std::vector<Graph::Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

inline Graph cycle_graph(int n) {
    std::vector<Graph::Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    if (n > 2)
        e.emplace_back(0, n - 1);
    return Graph(n, std::move(e));
}

inline Graph complete_graph(int n) {
    std::vector<Graph::Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

/// Star with center 0 and n-1 leaves.
inline Graph star_graph(int n) {
    std::vector<Graph::Edge> e;
    for (int i = 1; i < n; ++i)
        e.emplace_back(0, i);
    return Graph(n, std::move(e));
}

/// Triangle on 0,1,2 with a pendant edge 2-3.
inline Graph paw_graph() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

/// K2 plus extra isolated vertices.
inline Graph matching_component(int n) { return Graph(n, {{0, 1}}); }

inline Graph two_matchings() { return Graph(4, {{0, 1}, {2, 3}}); }

template <FieldLike K>
std::vector<typename K::Scalar> random_element(const K& f, std::size_t len,
                                               std::mt19937_64& rng) {
    std::vector<typename K::Scalar> v;
    v.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        v.push_back(f.random(rng));
    return v;
}

template <FieldLike K>
std::vector<typename K::Scalar> random_element(const GraphLieAlgebra<K>& alg,
                                               std::mt19937_64& rng) {
    return random_element(alg.field(), static_cast<std::size_t>(alg.dim()), rng);
}

template <FieldLike K>
std::vector<typename K::Scalar> random_nonzero_tuple(const K& f, std::size_t len,
                                                     std::mt19937_64& rng) {
    std::vector<typename K::Scalar> v;
    v.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        v.push_back(f.random_nonzero(rng));
    return v;
}

template <FieldLike K>
Matrix<K> random_matrix(const K& f, std::size_t rows, std::size_t cols,
                        std::mt19937_64& rng) {
    Matrix<K> m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = f.random(rng);
    return m;
}

inline VertexPermutation random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return VertexPermutation(std::move(img));
}

} // namespace testutil
