#pragma once

#include <string>
#include <utility>
#include <vector>

#include "graphnil/error.hpp"
#include "graphnil/field.hpp"
#include "graphnil/graph.hpp"
#include "graphnil/liealg.hpp"
#include "graphnil/matrix.hpp"
#include "graphnil/morphism.hpp"

namespace graphnil {

// ---------------------------------------------------------------------------
// Free partially commutative Lie algebra, truncated at degree 2
// ---------------------------------------------------------------------------

/// Degree-<=2 data of the free Lie algebra on the vertex set: the Hall basis
/// in degree 2 is just [v_i, v_j] for i < j, and the partially commutative
/// relations kill the brackets of non-adjacent generators.
struct FreeLieDegree2 {
    int generators = 0;
    std::vector<std::pair<int, int>> degree2_basis; // all pairs i < j, lex order
    std::vector<std::pair<int, int>> relations;     // the non-edges
};

inline FreeLieDegree2 free_lie_degree2(const Graph& g) {
    FreeLieDegree2 d;
    d.generators = g.vertex_count();
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j) {
            d.degree2_basis.emplace_back(i, j);
            if (!g.has_edge(i, j))
                d.relations.emplace_back(i, j);
        }
    return d;
}

/// l(S,E)/l^3 with the quotient computed by linear algebra: the relation
/// span inside the degree-2 space is row-reduced, surviving coordinates are
/// the non-pivot columns, and each [v_i, v_j] is the image of the wedge
/// coordinate under the induced projection.
template <FieldLike K>
struct PclAlgebra {
    StructureTable<K> table;
    std::vector<std::pair<int, int>> surviving_pairs;
};

template <FieldLike K>
PclAlgebra<K> pcl_mod_cube(const Graph& g, const K& f) {
    const auto free2 = free_lie_degree2(g);
    const int n = free2.generators;
    const std::size_t npairs = free2.degree2_basis.size();

    Matrix<K> rel(f, free2.relations.size(), npairs);
    for (std::size_t r = 0; r < free2.relations.size(); ++r) {
        const std::size_t k = static_cast<std::size_t>(
            detail::pair_index(n, free2.relations[r].first, free2.relations[r].second));
        rel.at(r, k) = f.one();
    }
    const auto pivots = rel.rref_in_place();

    std::vector<std::size_t> free_cols;
    {
        std::vector<bool> is_pivot(npairs, false);
        for (auto p : pivots)
            is_pivot[p] = true;
        for (std::size_t c = 0; c < npairs; ++c)
            if (!is_pivot[c])
                free_cols.push_back(c);
    }

    // projection onto quotient coordinates: subtract the reduced relation
    // rows to kill pivot coordinates, then read off the free ones
    auto project = [&](std::vector<typename K::Scalar> w) {
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            const auto c = w[pivots[r]];
            if (f.is_zero(c))
                continue;
            for (std::size_t k = 0; k < npairs; ++k)
                w[k] = f.sub(w[k], f.mul(c, rel.at(r, k)));
        }
        std::vector<typename K::Scalar> q;
        q.reserve(free_cols.size());
        for (auto c : free_cols)
            q.push_back(w[c]);
        return q;
    };

    const int dim = n + static_cast<int>(free_cols.size());
    std::vector<std::string> basis;
    std::vector<std::pair<int, int>> survivors;
    for (int i = 0; i < n; ++i)
        basis.push_back("v" + std::to_string(i));
    for (auto c : free_cols) {
        const auto& [i, j] = free2.degree2_basis[c];
        survivors.emplace_back(i, j);
        basis.push_back("e" + std::to_string(i) + "_" + std::to_string(j));
    }

    std::vector<std::vector<std::vector<typename K::Scalar>>> upper(
        static_cast<std::size_t>(dim),
        std::vector<std::vector<typename K::Scalar>>(static_cast<std::size_t>(dim)));
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            upper[i][j] = vec_zero(f, static_cast<std::size_t>(dim));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto w = vec_zero(f, npairs);
            w[static_cast<std::size_t>(detail::pair_index(n, i, j))] = f.one();
            const auto q = project(std::move(w));
            for (std::size_t k = 0; k < q.size(); ++k)
                upper[i][j][static_cast<std::size_t>(n) + k] = q[k];
        }

    return PclAlgebra<K>{StructureTable<K>(f, std::move(basis), std::move(upper)),
                         std::move(survivors)};
}

// ---------------------------------------------------------------------------
// The comparison with n(S,E)
// ---------------------------------------------------------------------------

template <FieldLike K>
struct Remark3Result {
    bool ok = false;
    GradedMap<K> witness;
};

/// Certifies l(S,E)/l^3 ~= n(S,E) via the generator-identity map: v_i -> v_i
/// and each surviving degree-2 class to the matching edge generator. The map
/// must pass the exact bracket check and be invertible.
template <FieldLike K>
Remark3Result<K> verify_remark3(const Graph& g, const K& f) {
    const auto pcl = pcl_mod_cube(g, f);
    const GraphLieAlgebra<K> alg(g, f);
    const int n = g.vertex_count();
    const int m = g.edge_count();

    GradedMap<K> witness{g, g, Matrix<K>::identity(f, static_cast<std::size_t>(n)),
                         Matrix<K>(f, static_cast<std::size_t>(m),
                                   pcl.surviving_pairs.size())};
    if (static_cast<int>(pcl.surviving_pairs.size()) != m)
        return {false, std::move(witness)};
    for (std::size_t k = 0; k < pcl.surviving_pairs.size(); ++k) {
        const auto& [i, j] = pcl.surviving_pairs[k];
        const int t = g.edge_index(i, j);
        if (t < 0)
            return {false, std::move(witness)};
        witness.B.at(static_cast<std::size_t>(t), k) = f.one();
    }
    const auto F = witness.full();
    const bool ok = is_lie_morphism(F, pcl.table, alg) && F.is_invertible();
    return {ok, std::move(witness)};
}

} // namespace graphnil
