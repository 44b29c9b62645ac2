#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "graphnil/error.hpp"
#include "graphnil/field.hpp"
#include "graphnil/graph.hpp"
#include "graphnil/liealg.hpp"
#include "graphnil/matrix.hpp"

namespace graphnil {

// ---------------------------------------------------------------------------
// Graded maps
// ---------------------------------------------------------------------------

/// Degree-preserving linear map n(S,E) -> n(S',E'): A acts on the vertex
/// part, B on the central part. Valid instances respect brackets: B carries
/// e_{ij} to the target edge coordinates of (A v_i) ^ (A v_j).
template <FieldLike K>
struct GradedMap {
    Graph source;
    Graph target;
    Matrix<K> A; // |S'| x |S|
    Matrix<K> B; // |E'| x |E|

    const K& field() const { return A.field(); }

    /// Block-diagonal matrix on the full algebra, V-part first.
    Matrix<K> full() const {
        const std::size_t n = A.cols(), np = A.rows();
        const std::size_t m = B.cols(), mp = B.rows();
        Matrix<K> f(A.field(), np + mp, n + m);
        for (std::size_t i = 0; i < np; ++i)
            for (std::size_t j = 0; j < n; ++j)
                f.at(i, j) = A.at(i, j);
        for (std::size_t i = 0; i < mp; ++i)
            for (std::size_t j = 0; j < m; ++j)
                f.at(np + i, n + j) = B.at(i, j);
        return f;
    }

    bool operator==(const GradedMap& o) const {
        return source == o.source && target == o.target && A == o.A && B == o.B;
    }
};

namespace detail {

/// Coefficient of the target wedge w_{rs} in (A v_i) ^ (A v_j): the 2x2 minor
/// of A on rows {r, s} and columns {i, j}.
template <FieldLike K>
typename K::Scalar wedge_minor(const Matrix<K>& A, int r, int s, int i, int j) {
    const auto& f = A.field();
    return f.sub(f.mul(A.at(r, i), A.at(s, j)), f.mul(A.at(s, i), A.at(r, j)));
}

} // namespace detail

/// Action induced by a vertex-part matrix on edge coordinates: entry at
/// (target edge {r,s}, source edge {i,j}) is the corresponding minor of A.
template <FieldLike K>
Matrix<K> induced_edge_matrix(const Matrix<K>& A, const Graph& source, const Graph& target) {
    Matrix<K> B(A.field(), static_cast<std::size_t>(target.edge_count()),
                static_cast<std::size_t>(source.edge_count()));
    for (std::size_t c = 0; c < source.edges().size(); ++c) {
        const auto& [i, j] = source.edges()[c];
        for (std::size_t r = 0; r < target.edges().size(); ++r) {
            const auto& [a, b] = target.edges()[r];
            B.at(r, c) = detail::wedge_minor(A, a, b, i, j);
        }
    }
    return B;
}

/// W-stability: for every non-edge {i,j} of the source, (A v_i) ^ (A v_j)
/// has no component on any target edge.
template <FieldLike K>
bool wedges_respect_edges(const Matrix<K>& A, const Graph& source, const Graph& target) {
    const auto& f = A.field();
    const int n = source.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (source.has_edge(i, j))
                continue;
            for (const auto& [a, b] : target.edges())
                if (!f.is_zero(detail::wedge_minor(A, a, b, i, j)))
                    return false;
        }
    return true;
}

/// Promotes an invertible vertex-part matrix to a graded map when its wedge
/// action stabilizes the non-edge subspace; absent otherwise.
template <FieldLike K>
std::optional<GradedMap<K>> graded_from_vertex_matrix(const Matrix<K>& A, const Graph& source,
                                                      const Graph& target) {
    if (A.rows() != static_cast<std::size_t>(target.vertex_count()) ||
        A.cols() != static_cast<std::size_t>(source.vertex_count()))
        throw error("vertex matrix shape mismatch");
    if (!A.is_invertible())
        return std::nullopt;
    if (!wedges_respect_edges(A, source, target))
        return std::nullopt;
    return GradedMap<K>{source, target, A, induced_edge_matrix(A, source, target)};
}

/// Membership test for the automorphism group determined by the vertex part.
template <FieldLike K>
std::optional<GradedMap<K>> extend_to_automorphism(const Matrix<K>& A,
                                                   const GraphLieAlgebra<K>& alg) {
    return graded_from_vertex_matrix(A, alg.graph(), alg.graph());
}

// ---------------------------------------------------------------------------
// The pushforward of a graph isomorphism
// ---------------------------------------------------------------------------

/// The Lie isomorphism induced by a graph isomorphism: permutation on the
/// vertex part, signed edge permutation on the central part (the sign tracks
/// wedge orientation when the permutation reverses an edge's endpoint order).
template <FieldLike K>
GradedMap<K> functor_pushforward(const VertexPermutation& perm, const Graph& source,
                                 const Graph& target, const K& f) {
    if (perm.size() != source.vertex_count() ||
        source.vertex_count() != target.vertex_count())
        throw error("permutation size mismatch");
    for (int i = 0; i < source.vertex_count(); ++i)
        for (int j = i + 1; j < source.vertex_count(); ++j)
            if (source.has_edge(i, j) != target.has_edge(perm(i), perm(j)))
                throw error("not a graph isomorphism");
    Matrix<K> A(f, static_cast<std::size_t>(target.vertex_count()),
                static_cast<std::size_t>(source.vertex_count()));
    for (int i = 0; i < source.vertex_count(); ++i)
        A.at(static_cast<std::size_t>(perm(i)), static_cast<std::size_t>(i)) = f.one();
    Matrix<K> B(f, static_cast<std::size_t>(target.edge_count()),
                static_cast<std::size_t>(source.edge_count()));
    for (std::size_t c = 0; c < source.edges().size(); ++c) {
        const auto& [i, j] = source.edges()[c];
        const int fi = perm(i), fj = perm(j);
        const auto [a, b] = std::minmax(fi, fj);
        const int r = target.edge_index(a, b);
        B.at(static_cast<std::size_t>(r), c) = fi < fj ? f.one() : f.neg(f.one());
    }
    return GradedMap<K>{source, target, std::move(A), std::move(B)};
}

// ---------------------------------------------------------------------------
// Diagonal maps
// ---------------------------------------------------------------------------

/// Vertex scalings always extend: the edge {i,j} coordinate picks up the
/// factor d_i * d_j.
template <FieldLike K>
GradedMap<K> diagonal_extend(const std::vector<typename K::Scalar>& d,
                             const GraphLieAlgebra<K>& alg) {
    const auto& f = alg.field();
    if (static_cast<int>(d.size()) != alg.vertex_dim())
        throw error("diagonal length mismatch");
    for (const auto& c : d)
        if (f.is_zero(c))
            throw error("zero entry in diagonal map");
    const Graph& g = alg.graph();
    Matrix<K> A(f, d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        A.at(i, i) = d[i];
    Matrix<K> B(f, static_cast<std::size_t>(g.edge_count()),
                static_cast<std::size_t>(g.edge_count()));
    for (std::size_t t = 0; t < g.edges().size(); ++t) {
        const auto& [i, j] = g.edges()[t];
        B.at(t, t) = f.mul(d[static_cast<std::size_t>(i)], d[static_cast<std::size_t>(j)]);
    }
    return GradedMap<K>{g, g, std::move(A), std::move(B)};
}

// ---------------------------------------------------------------------------
// Composition, inverse, morphism check
// ---------------------------------------------------------------------------

/// outer after inner.
template <FieldLike K>
GradedMap<K> compose(const GradedMap<K>& outer, const GradedMap<K>& inner) {
    if (!(inner.target == outer.source))
        throw error("graded maps not composable");
    return GradedMap<K>{inner.source, outer.target, outer.A * inner.A, outer.B * inner.B};
}

template <FieldLike K>
GradedMap<K> invert(const GradedMap<K>& m) {
    return GradedMap<K>{m.target, m.source, m.A.inverse(), m.B.inverse()};
}

/// Exact bracket-respecting check for a full matrix F between two algebras:
/// F [b_i, b_j] = [F b_i, F b_j] for all basis pairs.
template <typename SrcAlg, typename TgtAlg, FieldLike K>
bool is_lie_morphism(const Matrix<K>& F, const SrcAlg& src, const TgtAlg& tgt) {
    if (F.rows() != static_cast<std::size_t>(tgt.dim()) ||
        F.cols() != static_cast<std::size_t>(src.dim()))
        return false;
    const auto& f = F.field();
    const int d = src.dim();
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            const auto lhs = F.apply(src.bracket_basis(i, j));
            const auto rhs = tgt.bracket(F.column(static_cast<std::size_t>(i)),
                                         F.column(static_cast<std::size_t>(j)));
            if (!vec_is_zero(f, vec_sub(f, lhs, rhs)))
                return false;
        }
    return true;
}

template <FieldLike K>
bool is_lie_morphism(const GradedMap<K>& m) {
    const GraphLieAlgebra<K> src(m.source, m.field());
    const GraphLieAlgebra<K> tgt(m.target, m.field());
    return is_lie_morphism(m.full(), src, tgt);
}

// ---------------------------------------------------------------------------
// Central shears
// ---------------------------------------------------------------------------

/// Non-graded automorphism v + z -> v + phi(v) + z for a linear
/// phi : V -> Z-part. Every automorphism of a two-step algebra is a graded
/// one composed with such a shear; proofreplay uses these to exercise the
/// projection that kills the central part.
template <FieldLike K>
Matrix<K> central_shear(const GraphLieAlgebra<K>& alg, const Matrix<K>& phi) {
    const auto& f = alg.field();
    const std::size_t n = static_cast<std::size_t>(alg.vertex_dim());
    const std::size_t m = static_cast<std::size_t>(alg.edge_dim());
    if (phi.rows() != m || phi.cols() != n)
        throw error("shear block shape mismatch");
    auto F = Matrix<K>::identity(f, n + m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            F.at(n + i, j) = phi.at(i, j);
    return F;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

template <FieldLike K>
nlohmann::json matrix_to_json(const Matrix<K>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m.field().to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <FieldLike K>
Matrix<K> matrix_from_json(const nlohmann::json& j, const K& f) {
    if (!j.is_array())
        throw error("matrix JSON must be an array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    if (rows > 0) {
        if (!j[0].is_array())
            throw error("matrix JSON rows must be arrays");
        cols = j[0].size();
    }
    Matrix<K> m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw error("matrix JSON rows must all have the same length");
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& cell = j[i][c];
            if (cell.is_string())
                m.at(i, c) = f.parse(cell.get<std::string>());
            else if (cell.is_number_integer())
                m.at(i, c) = f.parse(std::to_string(cell.get<long long>()));
            else
                throw error("matrix entries must be field strings or integers");
        }
    }
    return m;
}

template <FieldLike K>
nlohmann::json graded_to_json(const GradedMap<K>& m) {
    return {{"A", matrix_to_json(m.A)},
            {"B", matrix_to_json(m.B)},
            {"field", m.field().spec().to_string()}};
}

} // namespace graphnil
