#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "graphnil/error.hpp"
#include "graphnil/field.hpp"
#include "graphnil/graph.hpp"
#include "graphnil/matrix.hpp"

namespace graphnil {

// ---------------------------------------------------------------------------
// The graph algebra n(S,E)
// ---------------------------------------------------------------------------

/// Two-step nilpotent Lie algebra of a graph. Basis: v_0..v_{n-1} spanning the
/// vertex part, then one central generator e_{ij} per edge in lexicographic
/// edge order. [v_i, v_j] = e_{ij} for an edge i < j, zero for a non-edge;
/// everything involving the central part brackets to zero. Structure constants
/// are computed from the graph on demand.
template <FieldLike K>
class GraphLieAlgebra {
public:
    using Scalar = typename K::Scalar;

    GraphLieAlgebra(Graph g, K f) : graph_(std::move(g)), field_(std::move(f)) {}

    const Graph& graph() const { return graph_; }
    const K& field() const { return field_; }

    int vertex_dim() const { return graph_.vertex_count(); }
    int edge_dim() const { return graph_.edge_count(); }
    int dim() const { return vertex_dim() + edge_dim(); }

    std::string basis_name(int k) const {
        if (k < vertex_dim())
            return "v" + std::to_string(k);
        const auto& [i, j] = graph_.edges()[k - vertex_dim()];
        return "e" + std::to_string(i) + "_" + std::to_string(j);
    }

    std::vector<Scalar> zero_element() const { return vec_zero(field_, dim()); }

    std::vector<Scalar> basis_vector(int k) const {
        auto v = zero_element();
        v[k] = field_.one();
        return v;
    }

    std::vector<Scalar> bracket_basis(int i, int j) const {
        auto r = zero_element();
        if (i == j || i >= vertex_dim() || j >= vertex_dim())
            return r;
        const bool flip = i > j;
        const int t = graph_.edge_index(i, j);
        if (t < 0)
            return r;
        r[vertex_dim() + t] = flip ? field_.neg(field_.one()) : field_.one();
        return r;
    }

    /// Bilinear antisymmetric product; central parts of the inputs are
    /// ignored and the result lies entirely in the central part.
    std::vector<Scalar> bracket(const std::vector<Scalar>& x,
                                const std::vector<Scalar>& y) const {
        if (static_cast<int>(x.size()) != dim() || static_cast<int>(y.size()) != dim())
            throw error("element length does not match algebra dimension");
        auto r = zero_element();
        const auto& edges = graph_.edges();
        for (std::size_t t = 0; t < edges.size(); ++t) {
            const auto& [i, j] = edges[t];
            r[vertex_dim() + static_cast<int>(t)] =
                field_.sub(field_.mul(x[i], y[j]), field_.mul(x[j], y[i]));
        }
        return r;
    }

    bool operator==(const GraphLieAlgebra& o) const {
        return graph_ == o.graph_ && field_ == o.field_;
    }

private:
    Graph graph_;
    K field_;
};

template <FieldLike K>
GraphLieAlgebra<K> build_algebra(const Graph& g, const K& f) {
    return GraphLieAlgebra<K>(g, f);
}

// ---------------------------------------------------------------------------
// Explicit structure-constant tables
// ---------------------------------------------------------------------------

/// Bracket table over an arbitrary basis, used for serialized algebras and
/// for quotient constructions that do not come straight from a graph.
/// Stores [b_i, b_j] densely for i < j; antisymmetry fills in the rest.
template <FieldLike K>
class StructureTable {
public:
    using Scalar = typename K::Scalar;

    StructureTable(K f, std::vector<std::string> basis,
                   std::vector<std::vector<std::vector<Scalar>>> upper)
        : field_(std::move(f)), basis_(std::move(basis)), upper_(std::move(upper)) {
        const std::size_t d = basis_.size();
        if (upper_.size() != d)
            throw error("bracket table shape mismatch");
        for (std::size_t i = 0; i < d; ++i) {
            if (upper_[i].size() != d)
                throw error("bracket table shape mismatch");
            for (std::size_t j = i + 1; j < d; ++j)
                if (upper_[i][j].size() != d)
                    throw error("bracket table shape mismatch");
        }
    }

    const K& field() const { return field_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::string>& basis() const { return basis_; }
    std::string basis_name(int k) const { return basis_[static_cast<std::size_t>(k)]; }

    std::vector<Scalar> zero_element() const { return vec_zero(field_, basis_.size()); }

    std::vector<Scalar> basis_vector(int k) const {
        auto v = zero_element();
        v[k] = field_.one();
        return v;
    }

    std::vector<Scalar> bracket_basis(int i, int j) const {
        if (i == j)
            return zero_element();
        if (i < j)
            return upper_[i][j];
        return vec_neg(field_, upper_[j][i]);
    }

    std::vector<Scalar> bracket(const std::vector<Scalar>& x,
                                const std::vector<Scalar>& y) const {
        const int d = dim();
        if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d)
            throw error("element length does not match algebra dimension");
        auto r = zero_element();
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                const Scalar c = field_.sub(field_.mul(x[i], y[j]), field_.mul(x[j], y[i]));
                if (field_.is_zero(c))
                    continue;
                for (int k = 0; k < d; ++k)
                    r[k] = field_.add(r[k], field_.mul(c, upper_[i][j][k]));
            }
        return r;
    }

private:
    K field_;
    std::vector<std::string> basis_;
    std::vector<std::vector<std::vector<Scalar>>> upper_;
};

/// Materialize the bracket table of any algebra-like value (something with
/// dim(), field(), basis_name or basis(), bracket_basis).
template <FieldLike K>
StructureTable<K> structure_table(const GraphLieAlgebra<K>& a) {
    const int d = a.dim();
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k)
        names.push_back(a.basis_name(k));
    std::vector<std::vector<std::vector<typename K::Scalar>>> upper(
        static_cast<std::size_t>(d), std::vector<std::vector<typename K::Scalar>>(
                                         static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            upper[i][j] = a.bracket_basis(i, j);
    return StructureTable<K>(a.field(), std::move(names), std::move(upper));
}

// ---------------------------------------------------------------------------
// Structural invariants
// ---------------------------------------------------------------------------

struct Invariants {
    int dim = 0;
    int derived_dim = 0;
    int center_dim = 0;
    bool is_abelian = false;
    bool is_two_step = false;

    bool operator==(const Invariants&) const = default;
};

/// Rank of the span of all basis brackets.
template <typename Alg>
int derived_dim(const Alg& a) {
    const int d = a.dim();
    std::vector<std::vector<typename Alg::Scalar>> rows;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            auto b = a.bracket_basis(i, j);
            if (!vec_is_zero(a.field(), b))
                rows.push_back(std::move(b));
        }
    if (rows.empty())
        return 0;
    Matrix m(a.field(), rows.size(), static_cast<std::size_t>(d));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < d; ++c)
            m.at(r, static_cast<std::size_t>(c)) = rows[r][static_cast<std::size_t>(c)];
    return static_cast<int>(m.rank());
}

/// Nullity of the stacked adjoint system: x is central iff [x, b_k] = 0 for
/// every basis vector b_k.
template <typename Alg>
int center_dim(const Alg& a) {
    const int d = a.dim();
    if (d == 0)
        return 0;
    Matrix m(a.field(), static_cast<std::size_t>(d) * d, static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            const auto b = a.bracket_basis(i, k);
            for (int r = 0; r < d; ++r)
                m.at(static_cast<std::size_t>(k) * d + r, static_cast<std::size_t>(i)) =
                    b[static_cast<std::size_t>(r)];
        }
    return static_cast<int>(m.nullity());
}

/// Jacobi identity on basis triples; complete because the stored table is
/// antisymmetric by construction.
template <typename Alg>
bool jacobi_holds(const Alg& a) {
    const int d = a.dim();
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k) {
                auto s = a.bracket(a.bracket_basis(i, j), a.basis_vector(k));
                s = vec_add(a.field(), s,
                            a.bracket(a.bracket_basis(j, k), a.basis_vector(i)));
                s = vec_add(a.field(), s,
                            a.bracket(a.bracket_basis(k, i), a.basis_vector(j)));
                if (!vec_is_zero(a.field(), s))
                    return false;
            }
    return true;
}

/// All double brackets of basis vectors vanish.
template <typename Alg>
bool is_two_step(const Alg& a) {
    const int d = a.dim();
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            const auto b = a.bracket_basis(i, j);
            if (vec_is_zero(a.field(), b))
                continue;
            for (int k = 0; k < d; ++k)
                if (!vec_is_zero(a.field(), a.bracket(b, a.basis_vector(k))))
                    return false;
        }
    return true;
}

template <typename Alg>
Invariants structural_invariants(const Alg& a) {
    Invariants inv;
    inv.dim = a.dim();
    inv.derived_dim = derived_dim(a);
    inv.center_dim = center_dim(a);
    inv.is_abelian = inv.derived_dim == 0;
    inv.is_two_step = is_two_step(a);
    return inv;
}

// ---------------------------------------------------------------------------
// Structure-constant JSON
// ---------------------------------------------------------------------------

/// {"dim": d, "basis": [...], "brackets": {"i,j": {"k": "coeff"}}} with only
/// i < j pairs that bracket to something nonzero.
template <typename Alg>
nlohmann::json structure_to_json(const Alg& a) {
    const int d = a.dim();
    nlohmann::json basis = nlohmann::json::array();
    for (int k = 0; k < d; ++k)
        basis.push_back(a.basis_name(k));
    nlohmann::json brackets = nlohmann::json::object();
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            const auto b = a.bracket_basis(i, j);
            nlohmann::json entry = nlohmann::json::object();
            for (int k = 0; k < d; ++k)
                if (!a.field().is_zero(b[static_cast<std::size_t>(k)]))
                    entry[std::to_string(k)] =
                        a.field().to_string(b[static_cast<std::size_t>(k)]);
            if (!entry.empty())
                brackets[std::to_string(i) + "," + std::to_string(j)] = std::move(entry);
        }
    return {{"dim", d}, {"basis", std::move(basis)}, {"brackets", std::move(brackets)}};
}

template <FieldLike K>
nlohmann::json export_structure_constants(const GraphLieAlgebra<K>& a) {
    return structure_to_json(a);
}

template <FieldLike K>
StructureTable<K> structure_from_json(const nlohmann::json& j, const K& f) {
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
        throw error("structure JSON needs an integer field \"dim\"");
    const int d = j["dim"].get<int>();
    if (d < 0)
        throw error("structure JSON field \"dim\" is negative");
    std::vector<std::string> basis;
    if (j.contains("basis")) {
        if (!j["basis"].is_array() || static_cast<int>(j["basis"].size()) != d)
            throw error("structure JSON field \"basis\" must be an array of length dim");
        for (const auto& b : j["basis"]) {
            if (!b.is_string())
                throw error("structure JSON basis names must be strings");
            basis.push_back(b.get<std::string>());
        }
    } else {
        for (int k = 0; k < d; ++k)
            basis.push_back("b" + std::to_string(k));
    }
    std::vector<std::vector<std::vector<typename K::Scalar>>> upper(
        static_cast<std::size_t>(d),
        std::vector<std::vector<typename K::Scalar>>(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i)
        for (int jj = i + 1; jj < d; ++jj)
            upper[i][jj] = vec_zero(f, static_cast<std::size_t>(d));
    if (j.contains("brackets")) {
        if (!j["brackets"].is_object())
            throw error("structure JSON field \"brackets\" must be an object");
        for (const auto& [key, entry] : j["brackets"].items()) {
            const auto comma = key.find(',');
            if (comma == std::string::npos)
                throw error("bad bracket key \"" + key + "\" (expected \"i,j\")");
            int bi = 0, bj = 0;
            try {
                bi = std::stoi(key.substr(0, comma));
                bj = std::stoi(key.substr(comma + 1));
            } catch (const std::exception&) {
                throw error("bad bracket key \"" + key + "\" (expected \"i,j\")");
            }
            if (bi < 0 || bj < 0 || bi >= d || bj >= d || bi >= bj)
                throw error("bracket key \"" + key + "\" out of range or not i < j");
            if (!entry.is_object())
                throw error("bracket entry for \"" + key + "\" must be an object");
            for (const auto& [ks, coeff] : entry.items()) {
                int k = 0;
                try {
                    k = std::stoi(ks);
                } catch (const std::exception&) {
                    throw error("bad coefficient index \"" + ks + "\" in bracket \"" + key +
                                "\"");
                }
                if (k < 0 || k >= d)
                    throw error("coefficient index \"" + ks + "\" out of range in bracket \"" +
                                key + "\"");
                const nlohmann::json& cv = coeff;
                if (!cv.is_string())
                    throw error("bracket coefficients must be field strings");
                upper[bi][bj][static_cast<std::size_t>(k)] = f.parse(cv.get<std::string>());
            }
        }
    }
    return StructureTable<K>(f, std::move(basis), std::move(upper));
}

} // namespace graphnil
