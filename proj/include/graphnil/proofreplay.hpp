#pragma once

#include <utility>
#include <vector>

#include "json.hpp"

#include "graphnil/error.hpp"
#include "graphnil/field.hpp"
#include "graphnil/graph.hpp"
#include "graphnil/liealg.hpp"
#include "graphnil/matrix.hpp"
#include "graphnil/morphism.hpp"

namespace graphnil {

// ---------------------------------------------------------------------------
// Replaying the finite steps of the isomorphism-to-graph argument
// ---------------------------------------------------------------------------

/// A concrete Lie isomorphism F between two graph algebras, graded or not
/// (e.g. a graded witness composed with a central shear). F is a full
/// (n'+m') x (n+m) matrix.
template <FieldLike K>
struct ReplayInput {
    GraphLieAlgebra<K> source;
    GraphLieAlgebra<K> target;
    Matrix<K> F;
};

template <FieldLike K>
struct ReplayReport {
    std::vector<std::vector<typename K::Scalar>> s_double_prime; // pi(F(v_alpha))
    bool dims_ok = false;
    bool basis_ok = false;
    Graph induced{0};
    bool induced_iso_ok = false;
    bool torus_ok = false;
    std::vector<typename K::Scalar> torus_d;

    bool all_ok() const { return dims_ok && basis_ok && induced_iso_ok && torus_ok; }
};

/// Rejects inputs that are not Lie isomorphisms; every replay step assumes one.
template <FieldLike K>
void validate_replay_input(const ReplayInput<K>& r) {
    if (!is_lie_morphism(r.F, r.source, r.target) || !r.F.is_invertible())
        throw error("input map is not a Lie isomorphism");
}

/// pi(F(v_alpha)) for each source vertex: column alpha of F with the central
/// part projected away. Returned as vectors in the target vertex space.
template <FieldLike K>
std::vector<std::vector<typename K::Scalar>> induced_vertex_set(const ReplayInput<K>& r) {
    const int n = r.source.vertex_dim();
    const int np = r.target.vertex_dim();
    std::vector<std::vector<typename K::Scalar>> s2;
    s2.reserve(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        std::vector<typename K::Scalar> col(static_cast<std::size_t>(np));
        for (int row = 0; row < np; ++row)
            col[static_cast<std::size_t>(row)] =
                r.F.at(static_cast<std::size_t>(row), static_cast<std::size_t>(a));
        s2.push_back(std::move(col));
    }
    return s2;
}

template <FieldLike K>
Matrix<K> vertex_set_matrix(const ReplayInput<K>& r,
                            const std::vector<std::vector<typename K::Scalar>>& s2) {
    const std::size_t np = static_cast<std::size_t>(r.target.vertex_dim());
    Matrix<K> T(r.source.field(), np, s2.size());
    for (std::size_t c = 0; c < s2.size(); ++c)
        for (std::size_t row = 0; row < np; ++row)
            T.at(row, c) = s2[c][row];
    return T;
}

/// Edges of the induced graph are indexed by source vertices: one edge per
/// source edge. The isomorphism with the source is certified by the
/// independent graph checker rather than assumed from the construction.
template <FieldLike K>
Graph induced_graph(const ReplayInput<K>& r) {
    return Graph(r.source.vertex_dim(), r.source.graph().edges());
}

/// The diagonal map with entries d in the induced basis, conjugated back to
/// the standard target basis, must land in the target's automorphism group.
template <FieldLike K>
bool torus_membership(const ReplayInput<K>& r,
                      const std::vector<std::vector<typename K::Scalar>>& s2,
                      const std::vector<typename K::Scalar>& d) {
    const auto& f = r.source.field();
    if (d.size() != s2.size())
        throw error("diagonal length mismatch");
    for (const auto& c : d)
        if (f.is_zero(c))
            throw error("zero diagonal value");
    const auto T = vertex_set_matrix(r, s2);
    if (!T.is_invertible())
        return false;
    Matrix<K> D(f, d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        D.at(i, i) = d[i];
    const auto A = T * D * T.inverse();
    return extend_to_automorphism(A, r.target).has_value();
}

template <FieldLike K>
ReplayReport<K> replay(const ReplayInput<K>& r, const std::vector<typename K::Scalar>& d) {
    validate_replay_input(r);
    ReplayReport<K> rep;
    rep.dims_ok = r.source.vertex_dim() == r.target.vertex_dim() &&
                  r.source.edge_dim() == r.target.edge_dim();
    rep.s_double_prime = induced_vertex_set(r);
    const auto T = vertex_set_matrix(r, rep.s_double_prime);
    rep.basis_ok = rep.dims_ok && static_cast<int>(T.rank()) == r.source.vertex_dim();
    rep.induced = induced_graph(r);
    rep.induced_iso_ok = graph_iso(r.source.graph(), rep.induced).has_value();
    rep.torus_d = d;
    rep.torus_ok = rep.basis_ok && torus_membership(r, rep.s_double_prime, d);
    return rep;
}

template <FieldLike K>
nlohmann::json replay_report_to_json(const K& f, const ReplayReport<K>& rep) {
    nlohmann::json s2 = nlohmann::json::array();
    for (const auto& vec : rep.s_double_prime) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& c : vec)
            row.push_back(f.to_string(c));
        s2.push_back(std::move(row));
    }
    nlohmann::json d = nlohmann::json::array();
    for (const auto& c : rep.torus_d)
        d.push_back(f.to_string(c));
    return {{"s_double_prime", std::move(s2)},
            {"dims_ok", rep.dims_ok},
            {"basis_ok", rep.basis_ok},
            {"induced_graph", graph_to_json(rep.induced)},
            {"induced_iso_ok", rep.induced_iso_ok},
            {"torus_ok", rep.torus_ok},
            {"torus_d", std::move(d)}};
}

} // namespace graphnil
