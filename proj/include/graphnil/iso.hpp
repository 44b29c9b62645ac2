#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"

#include "graphnil/error.hpp"
#include "graphnil/field.hpp"
#include "graphnil/graph.hpp"
#include "graphnil/liealg.hpp"
#include "graphnil/morphism.hpp"

namespace graphnil {

// ---------------------------------------------------------------------------
// Fingerprints
// ---------------------------------------------------------------------------

/// Isomorphism-invariant triple; unequal fingerprints certify that two
/// algebras are not isomorphic.
struct Fingerprint {
    int dim = 0;
    int derived_dim = 0;
    int center_dim = 0;

    bool operator==(const Fingerprint&) const = default;
    auto operator<=>(const Fingerprint&) const = default;
};

template <typename Alg>
Fingerprint fingerprint(const Alg& a) {
    return {a.dim(), derived_dim(a), center_dim(a)};
}

inline nlohmann::json fingerprint_to_json(const Fingerprint& fp) {
    return {{"dim", fp.dim}, {"derived_dim", fp.derived_dim}, {"center_dim", fp.center_dim}};
}

// ---------------------------------------------------------------------------
// Exhaustive graded isomorphism search
// ---------------------------------------------------------------------------

struct SearchStats {
    std::uint64_t nodes = 0; // candidate columns examined
};

namespace detail {

struct GradedSearch {
    const Graph& g;
    const Graph& h;
    const PrimeField& f;
    SearchStats& stats;
    int n;
    std::uint64_t p;
    std::vector<std::vector<std::uint64_t>> cols;    // assigned columns of A
    std::vector<std::vector<std::uint64_t>> reduced; // row-echelon copies
    std::vector<std::size_t> pivots;

    bool dependent(const std::vector<std::uint64_t>& cand,
                   std::vector<std::uint64_t>& out) const {
        out = cand;
        for (std::size_t k = 0; k < reduced.size(); ++k) {
            const auto c = out[pivots[k]];
            if (c == 0)
                continue;
            for (int r = 0; r < n; ++r)
                out[r] = f.sub(out[r], f.mul(c, reduced[k][r]));
        }
        for (int r = 0; r < n; ++r)
            if (out[r] != 0)
                return false;
        return true;
    }

    bool wedge_ok(const std::vector<std::uint64_t>& ci,
                  const std::vector<std::uint64_t>& ck) const {
        for (const auto& [a, b] : h.edges())
            if (f.sub(f.mul(ci[a], ck[b]), f.mul(ci[b], ck[a])) != 0)
                return false;
        return true;
    }

    bool assign(int k) {
        if (k == n)
            return true;
        std::uint64_t limit = 1;
        for (int r = 0; r < n; ++r)
            limit *= p;
        std::vector<int> checked; // earlier columns non-adjacent to k
        for (int i = 0; i < k; ++i)
            if (!g.has_edge(i, k))
                checked.push_back(i);
        std::vector<std::uint64_t> cand(static_cast<std::size_t>(n), 0);
        std::vector<std::uint64_t> red;
        for (std::uint64_t v = 1; v < limit; ++v) {
            ++stats.nodes;
            // base-p odometer, first coordinate least significant
            for (int r = 0; r < n; ++r) {
                if (++cand[static_cast<std::size_t>(r)] < p)
                    break;
                cand[static_cast<std::size_t>(r)] = 0;
            }
            bool ok = true;
            for (int i : checked)
                if (!wedge_ok(cols[static_cast<std::size_t>(i)], cand)) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            if (dependent(cand, red))
                continue;
            // normalize the echelon copy so its pivot entry is 1
            std::size_t piv = 0;
            while (red[piv] == 0)
                ++piv;
            const auto inv = f.inv(red[piv]);
            for (int r = 0; r < n; ++r)
                red[r] = f.mul(red[r], inv);
            cols.push_back(cand);
            reduced.push_back(red);
            pivots.push_back(piv);
            if (assign(k + 1))
                return true;
            cols.pop_back();
            reduced.pop_back();
            pivots.pop_back();
        }
        return false;
    }
};

} // namespace detail

/// Looks for an invertible vertex-part matrix A over F_p whose wedge action
/// carries every non-edge of g into the non-edge subspace of h; that is
/// exactly the condition for A to induce a graded Lie isomorphism
/// n(g) -> n(h). Exhaustive backtracking over columns, so an absent result
/// is a proof of non-isomorphism over the given field. Candidate columns are
/// enumerated in base-p order with the first coordinate least significant,
/// which makes the identity the first witness tried for identical graphs.
inline std::optional<GradedMap<PrimeField>> graded_iso_search(const Graph& g, const Graph& h,
                                                              const PrimeField& f,
                                                              SearchStats* stats = nullptr) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return std::nullopt;
    const int n = g.vertex_count();
    if (n > 5)
        throw error("search space too large (vertex budget is 5)");
    const std::uint64_t p = f.characteristic();
    {
        long double budget = 1;
        for (int r = 0; r < n; ++r)
            budget *= static_cast<long double>(p);
        if (budget > 1e8L)
            throw error("search space too large (p^n over budget)");
    }
    SearchStats local;
    SearchStats& st = stats ? *stats : local;
    detail::GradedSearch search{g, h, f, st, n, p, {}, {}, {}};
    if (!search.assign(0))
        return std::nullopt;
    Matrix<PrimeField> A(f, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r)
            A.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                search.cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    auto witness = graded_from_vertex_matrix(A, g, h);
    if (!witness || !is_lie_morphism(*witness) || !witness->B.is_invertible())
        throw error("internal: search witness failed verification");
    return witness;
}

// ---------------------------------------------------------------------------
// The two-route equivalence test
// ---------------------------------------------------------------------------

/// Verdicts of both routes for one pair: combinatorial graph isomorphism and
/// the Lie-side decision (fingerprint prefilter, then exhaustive graded
/// search). The two routes never consult each other.
struct IsoReport {
    Graph g;
    Graph h;
    Fingerprint fp_g, fp_h;
    bool graph_iso = false;
    std::optional<VertexPermutation> graph_witness;
    bool lie_iso = false;
    std::optional<GradedMap<PrimeField>> lie_witness;
    std::uint64_t search_nodes = 0;
};

inline IsoReport lie_iso_equivalent(const Graph& g, const Graph& h, const PrimeField& f) {
    IsoReport rep{g, h, {}, {}, false, std::nullopt, false, std::nullopt, 0};
    rep.graph_witness = graph_iso(g, h);
    rep.graph_iso = rep.graph_witness.has_value();
    const GraphLieAlgebra<PrimeField> ag(g, f), ah(h, f);
    rep.fp_g = fingerprint(ag);
    rep.fp_h = fingerprint(ah);
    if (rep.fp_g == rep.fp_h) {
        SearchStats st;
        rep.lie_witness = graded_iso_search(g, h, f, &st);
        rep.lie_iso = rep.lie_witness.has_value();
        rep.search_nodes = st.nodes;
    }
    return rep;
}

inline nlohmann::json iso_report_to_json(const IsoReport& rep) {
    nlohmann::json j{{"graph_iso", rep.graph_iso},
                     {"lie_iso", rep.lie_iso},
                     {"fingerprint_g", fingerprint_to_json(rep.fp_g)},
                     {"fingerprint_h", fingerprint_to_json(rep.fp_h)},
                     {"search_nodes", rep.search_nodes}};
    if (rep.graph_witness)
        j["graph_witness"] = rep.graph_witness->image;
    if (rep.lie_witness)
        j["lie_witness"] = graded_to_json(*rep.lie_witness);
    return j;
}

// ---------------------------------------------------------------------------
// Desk-scale theorem verification
// ---------------------------------------------------------------------------

struct TheoremViolation {
    Graph g;
    Graph h;
    bool graph_iso = false;
    bool lie_iso = false;
};

struct TheoremReport {
    int n_max = 0;
    FieldSpec field{FieldSpec::Kind::PrimeField, 3};
    std::uint64_t pairs_tested = 0;
    std::uint64_t iso_pairs = 0;
    std::uint64_t max_search_nodes = 0;
    std::vector<TheoremViolation> violations;
    std::uint64_t wall_time_ms = 0;
};

/// Runs both routes on every unordered pair (diagonal included) of canonical
/// representatives with at most n_max vertices and records disagreements.
/// Workers split the pair list; results are merged in pair order, so the
/// report does not depend on scheduling.
inline TheoremReport theorem_check(int n_max, const PrimeField& f, int jobs = 1) {
    if (n_max < 1 || n_max > 5)
        throw error("vertex budget out of range (1..5)");
    if (jobs < 1)
        jobs = 1;
    const auto start = std::chrono::steady_clock::now();

    std::vector<Graph> reps;
    for (int n = 1; n <= n_max; ++n)
        for (auto& g : enumerate_graphs(n))
            reps.push_back(std::move(g));

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i; j < reps.size(); ++j)
            pairs.emplace_back(i, j);

    struct PairResult {
        bool graph_iso = false;
        bool lie_iso = false;
        std::uint64_t nodes = 0;
    };
    std::vector<PairResult> results(pairs.size());

    auto worker = [&](std::size_t offset, std::size_t stride) {
        for (std::size_t k = offset; k < pairs.size(); k += stride) {
            const auto rep = lie_iso_equivalent(reps[pairs[k].first], reps[pairs[k].second], f);
            results[k] = {rep.graph_iso, rep.lie_iso, rep.search_nodes};
        }
    };
    if (jobs == 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w)
            threads.emplace_back(worker, static_cast<std::size_t>(w),
                                 static_cast<std::size_t>(jobs));
        for (auto& t : threads)
            t.join();
    }

    TheoremReport report;
    report.n_max = n_max;
    report.field = f.spec();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto& r = results[k];
        ++report.pairs_tested;
        if (r.graph_iso && r.lie_iso)
            ++report.iso_pairs;
        report.max_search_nodes = std::max(report.max_search_nodes, r.nodes);
        if (r.graph_iso != r.lie_iso)
            report.violations.push_back(
                {reps[pairs[k].first], reps[pairs[k].second], r.graph_iso, r.lie_iso});
    }
    report.wall_time_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              start)
            .count());
    return report;
}

inline nlohmann::json theorem_report_to_json(const TheoremReport& r) {
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"g", graph_to_json(v.g)},
                              {"h", graph_to_json(v.h)},
                              {"graph_iso", v.graph_iso},
                              {"lie_iso", v.lie_iso}});
    return {{"pairs_tested", r.pairs_tested},
            {"iso_pairs", r.iso_pairs},
            {"max_search_nodes", r.max_search_nodes},
            {"violations", std::move(violations)},
            {"field", r.field.to_string()},
            {"n_max", r.n_max},
            {"wall_time_ms", r.wall_time_ms}};
}

} // namespace graphnil
