#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "graphnil/error.hpp"
#include "graphnil/field.hpp"
#include "graphnil/liealg.hpp"
#include "graphnil/morphism.hpp"

namespace graphnil {

// ---------------------------------------------------------------------------
// N(S,E) in exponential coordinates
// ---------------------------------------------------------------------------

/// Group element (v, z) of the simply connected group of n(S,E). The product
/// is the two-step BCH formula, exact over any field of characteristic != 2.
template <FieldLike K>
struct GroupElement {
    std::vector<typename K::Scalar> v;
    std::vector<typename K::Scalar> z;

    bool operator==(const GroupElement&) const = default;
};

template <FieldLike K>
GroupElement<K> group_identity(const GraphLieAlgebra<K>& alg) {
    return {vec_zero(alg.field(), static_cast<std::size_t>(alg.vertex_dim())),
            vec_zero(alg.field(), static_cast<std::size_t>(alg.edge_dim()))};
}

template <FieldLike K>
void check_group_shape(const GraphLieAlgebra<K>& alg, const GroupElement<K>& g) {
    if (static_cast<int>(g.v.size()) != alg.vertex_dim() ||
        static_cast<int>(g.z.size()) != alg.edge_dim())
        throw error("group element shape does not match algebra");
}

/// (v1, z1) * (v2, z2) = (v1 + v2, z1 + z2 + (1/2)[v1, v2]).
template <FieldLike K>
GroupElement<K> bch_multiply(const GraphLieAlgebra<K>& alg, const GroupElement<K>& g1,
                             const GroupElement<K>& g2) {
    check_group_shape(alg, g1);
    check_group_shape(alg, g2);
    const auto& f = alg.field();
    const auto half = f.inv(f.from_int(2));
    GroupElement<K> r{vec_add(f, g1.v, g2.v), vec_add(f, g1.z, g2.z)};
    const auto& edges = alg.graph().edges();
    for (std::size_t t = 0; t < edges.size(); ++t) {
        const auto& [i, j] = edges[t];
        const auto c = f.sub(f.mul(g1.v[static_cast<std::size_t>(i)],
                                   g2.v[static_cast<std::size_t>(j)]),
                             f.mul(g1.v[static_cast<std::size_t>(j)],
                                   g2.v[static_cast<std::size_t>(i)]));
        r.z[t] = f.add(r.z[t], f.mul(half, c));
    }
    return r;
}

/// In exponential coordinates inversion is plain negation: [v, -v] = 0.
template <FieldLike K>
GroupElement<K> group_inverse(const GraphLieAlgebra<K>& alg, const GroupElement<K>& g) {
    check_group_shape(alg, g);
    return {vec_neg(alg.field(), g.v), vec_neg(alg.field(), g.z)};
}

/// exp and log are the identity on coordinates; they split/join the V- and
/// Z-parts of an algebra element.
template <FieldLike K>
GroupElement<K> exp_element(const GraphLieAlgebra<K>& alg,
                            const std::vector<typename K::Scalar>& x) {
    if (static_cast<int>(x.size()) != alg.dim())
        throw error("element length does not match algebra dimension");
    const auto n = static_cast<std::size_t>(alg.vertex_dim());
    return {std::vector<typename K::Scalar>(x.begin(), x.begin() + n),
            std::vector<typename K::Scalar>(x.begin() + n, x.end())};
}

template <FieldLike K>
std::vector<typename K::Scalar> log_element(const GraphLieAlgebra<K>& alg,
                                            const GroupElement<K>& g) {
    check_group_shape(alg, g);
    auto x = g.v;
    x.insert(x.end(), g.z.begin(), g.z.end());
    return x;
}

/// Coordinate action of a graded map; for a Lie isomorphism this is a group
/// homomorphism with respect to the BCH product.
template <FieldLike K>
GroupElement<K> group_apply(const GradedMap<K>& m, const GroupElement<K>& g) {
    return {m.A.apply(g.v), m.B.apply(g.z)};
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

/// Scalars that print as plain integers are emitted as JSON numbers (when
/// they fit), everything else as field strings like "1/2".
template <FieldLike K>
nlohmann::json scalar_to_json(const K& f, const typename K::Scalar& s) {
    const std::string str = f.to_string(s);
    if (str.find('/') == std::string::npos && str.size() <= 15)
        return nlohmann::json(std::stoll(str));
    return nlohmann::json(str);
}

template <FieldLike K>
typename K::Scalar scalar_from_json(const K& f, const nlohmann::json& j) {
    if (j.is_string())
        return f.parse(j.get<std::string>());
    if (j.is_number_integer())
        return f.parse(std::to_string(j.get<long long>()));
    throw error("scalar must be a field string or an integer");
}

template <FieldLike K>
nlohmann::json group_to_json(const K& f, const GroupElement<K>& g) {
    nlohmann::json v = nlohmann::json::array(), z = nlohmann::json::array();
    for (const auto& c : g.v)
        v.push_back(scalar_to_json(f, c));
    for (const auto& c : g.z)
        z.push_back(scalar_to_json(f, c));
    return {{"v", std::move(v)}, {"z", std::move(z)}};
}

template <FieldLike K>
GroupElement<K> group_from_json(const nlohmann::json& j, const GraphLieAlgebra<K>& alg) {
    if (!j.is_object() || !j.contains("v") || !j.contains("z") || !j["v"].is_array() ||
        !j["z"].is_array())
        throw error("group element JSON needs array fields \"v\" and \"z\"");
    GroupElement<K> g;
    for (const auto& c : j["v"])
        g.v.push_back(scalar_from_json(alg.field(), c));
    for (const auto& c : j["z"])
        g.z.push_back(scalar_from_json(alg.field(), c));
    check_group_shape(alg, g);
    return g;
}

} // namespace graphnil
