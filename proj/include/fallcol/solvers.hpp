// solvers.hpp -- exact computation of the eight coloring parameters:
// chi, Fall(G) (with chi_f and psi_f), phi (b-chromatic), Gamma (Grundy),
// partial Gamma, and psi (achromatic). Every solver returns a witness
// coloring and a status; a blown budget is reported, never thrown.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fallcol/coloring.hpp"
#include "fallcol/detail/search.hpp"
#include "fallcol/graph.hpp"

namespace fallcol {

struct SearchLimits {
    long long node_budget = 0;       // max search-tree nodes per search, 0 = unlimited
    double time_budget_seconds = 0;  // wall-clock per solver call, 0 = unlimited
};

enum class SolveStatus { Exact, LowerBoundOnly, Timeout };

inline const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Exact: return "EXACT";
        case SolveStatus::LowerBoundOnly: return "LOWER_BOUND_ONLY";
        case SolveStatus::Timeout: return "TIMEOUT";
    }
    return "?";
}

struct SolveResult {
    SolveStatus status = SolveStatus::Exact;
    int value = 0;  // exact value; for LOWER_BOUND_ONLY the proven lower bound
    std::optional<Coloring> witness;
    int lower_bound = 0;
    int upper_bound = 0;
};

// Decision for one fall k: Exact with witness = exists, Exact without =
// proven nonexistent, Timeout = undecided.
struct FallDecision {
    SolveStatus status = SolveStatus::Exact;
    std::optional<Coloring> witness;
};

struct SpectrumResult {
    SolveStatus status = SolveStatus::Exact;  // Exact iff every k was decided
    std::vector<int> values;                  // k with a fall k-coloring, ascending
    std::map<int, Coloring> witnesses;
    int searched_max = 0;  // spectrum lives in [1, min_degree+1]
};

// Largest i such that at least i vertices have degree >= i-1; upper bound
// for phi, since each of k classes needs a colorful vertex of degree >= k-1.
inline int m_degree_bound(const Graph& g) {
    std::vector<int> deg = degree_multiset(g);
    std::reverse(deg.begin(), deg.end());
    int best = 0;
    for (int i = 1; i <= g.n(); ++i)
        if (deg[static_cast<std::size_t>(i - 1)] >= i - 1) best = i;
    return best;
}

// Largest k with k(k-1)/2 <= m and k <= n; upper bound for psi, since each
// pair of classes needs a private edge.
inline int achromatic_upper_bound(const Graph& g) {
    int k = 1;
    while (k + 1 <= g.n() &&
           static_cast<long long>(k + 1) * k / 2 <= g.m())
        ++k;
    return k;
}

inline void require_nonempty(const Graph& g, const char* op) {
    if (g.n() < 1) throw std::invalid_argument(std::string(op) + ": empty graph");
}

inline SolveResult chromatic_number(const Graph& g, const SearchLimits& limits = {}) {
    require_nonempty(g, "chromatic_number");
    const int lb = detail::greedy_clique_bound(g);
    Coloring greedy = detail::greedy_coloring(g);
    const int ub = greedy.k;
    if (lb == ub)
        return SolveResult{SolveStatus::Exact, ub, std::move(greedy), lb, ub};
    auto budget = detail::Budget::start(limits.node_budget, limits.time_budget_seconds);
    for (int k = lb; k <= ub; ++k) {
        detail::ProperSearcher search(g, k, budget);
        std::vector<int> colors;
        switch (search.run(colors)) {
            case detail::SearchOutcome::Found:
                return SolveResult{SolveStatus::Exact, k, Coloring{k, std::move(colors)}, lb, ub};
            case detail::SearchOutcome::None:
                break;
            case detail::SearchOutcome::Aborted:
                // every k' < k is refuted, so k is a proven lower bound
                return SolveResult{SolveStatus::LowerBoundOnly, k, std::nullopt, k, ub};
        }
    }
    throw std::logic_error("chromatic_number: greedy upper bound not reached");
}

inline FallDecision find_fall_coloring(const Graph& g, int k,
                                       const SearchLimits& limits = {}) {
    require_nonempty(g, "find_fall_coloring");
    if (k < 1) throw std::invalid_argument("find_fall_coloring: k must be >= 1");
    // Each closed neighborhood has only delta+1 slots; and a fall k-coloring
    // is in particular a proper k-coloring, so k below the clique bound is out.
    if (k > g.min_degree() + 1) return FallDecision{SolveStatus::Exact, std::nullopt};
    if (k < detail::greedy_clique_bound(g)) return FallDecision{SolveStatus::Exact, std::nullopt};
    auto budget = detail::Budget::start(limits.node_budget, limits.time_budget_seconds);
    detail::FallSearcher search(g, k, budget);
    std::vector<int> colors;
    switch (search.run(colors)) {
        case detail::SearchOutcome::Found:
            return FallDecision{SolveStatus::Exact, Coloring{k, std::move(colors)}};
        case detail::SearchOutcome::None:
            return FallDecision{SolveStatus::Exact, std::nullopt};
        case detail::SearchOutcome::Aborted:
            return FallDecision{SolveStatus::Timeout, std::nullopt};
    }
    throw std::logic_error("find_fall_coloring: unreachable");
}

// Every k in [1, min_degree+1] is decided independently; no interval
// structure is assumed.
inline SpectrumResult fall_spectrum(const Graph& g, const SearchLimits& limits = {}) {
    require_nonempty(g, "fall_spectrum");
    SpectrumResult out;
    out.searched_max = g.min_degree() + 1;
    for (int k = 1; k <= out.searched_max; ++k) {
        FallDecision d = find_fall_coloring(g, k, limits);
        if (d.status == SolveStatus::Timeout) {
            out.status = SolveStatus::Timeout;
            continue;
        }
        if (d.witness) {
            out.values.push_back(k);
            out.witnesses.emplace(k, std::move(*d.witness));
        }
    }
    return out;
}

namespace detail {

// Shared downward scan for the four max-parameters: first feasible k from
// the upper bound is the exact value. A blown budget mid-scan leaves the
// value undecided in (k_aborted-1, upper], reported as Timeout.
template <typename Searcher>
SolveResult descend_max_parameter(const Graph& g, int upper, const SearchLimits& limits) {
    auto budget = Budget::start(limits.node_budget, limits.time_budget_seconds);
    for (int k = upper; k >= 1; --k) {
        Searcher search(g, k, budget);
        std::vector<int> colors;
        switch (search.run(colors)) {
            case SearchOutcome::Found:
                return SolveResult{SolveStatus::Exact, k, Coloring{k, std::move(colors)}, k, upper};
            case SearchOutcome::None:
                break;
            case SearchOutcome::Aborted:
                return SolveResult{SolveStatus::Timeout, 0, std::nullopt, 1, k};
        }
    }
    throw std::logic_error("descend_max_parameter: no feasible k; chi witness should exist");
}

}  // namespace detail

inline SolveResult b_chromatic_number(const Graph& g, const SearchLimits& limits = {}) {
    require_nonempty(g, "b_chromatic_number");
    return detail::descend_max_parameter<detail::BSearcher>(g, m_degree_bound(g), limits);
}

inline SolveResult grundy_number(const Graph& g, const SearchLimits& limits = {}) {
    require_nonempty(g, "grundy_number");
    return detail::descend_max_parameter<detail::GrundySearcher>(g, g.max_degree() + 1, limits);
}

inline SolveResult partial_grundy_number(const Graph& g, const SearchLimits& limits = {}) {
    require_nonempty(g, "partial_grundy_number");
    return detail::descend_max_parameter<detail::PartialGrundySearcher>(g, g.max_degree() + 1,
                                                                        limits);
}

inline SolveResult achromatic_number(const Graph& g, const SearchLimits& limits = {}) {
    require_nonempty(g, "achromatic_number");
    return detail::descend_max_parameter<detail::CompleteSearcher>(g, achromatic_upper_bound(g),
                                                                   limits);
}

// ---------------------------------------------------------------------------
// Combined report
// ---------------------------------------------------------------------------

inline const std::set<std::string>& all_parameter_names() {
    static const std::set<std::string> names = {
        "chi", "fall_spectrum", "chi_f", "psi_f", "phi", "gamma", "partial_gamma", "psi"};
    return names;
}

struct ParameterReport {
    std::string graph_name;
    int n = 0;
    long long m = 0;
    std::optional<SolveResult> chi;
    std::optional<SpectrumResult> fall;
    std::optional<SolveResult> phi;
    std::optional<SolveResult> gamma;
    std::optional<SolveResult> partial_gamma;
    std::optional<SolveResult> psi;

    // min/max of the spectrum; absent when it is empty or was not fully
    // decided (an undecided k could still be feasible)
    std::optional<int> chi_f() const {
        if (fall && fall->status == SolveStatus::Exact && !fall->values.empty())
            return fall->values.front();
        return std::nullopt;
    }
    std::optional<int> psi_f() const {
        if (fall && fall->status == SolveStatus::Exact && !fall->values.empty())
            return fall->values.back();
        return std::nullopt;
    }
};

namespace detail {

inline void check_witness(const Graph& g, const SolveResult& r, bool ColoringClass::*flag,
                          const char* what) {
    if (!r.witness) return;
    if (r.witness->k != r.value) throw std::logic_error(std::string(what) + ": witness k mismatch");
    ColoringClass cc = classify(g, *r.witness);
    if (!(cc.*flag)) throw std::logic_error(std::string(what) + ": witness fails its class check");
}

// The parameter chain as stated for graphs with a nonempty fall spectrum:
// chi <= chi_f <= psi_f, psi_f <= phi, psi_f <= gamma, phi <= partial_gamma,
// gamma <= partial_gamma, partial_gamma <= psi. Checked over exact entries.
inline void check_chain(const ParameterReport& rep) {
    auto exact = [](const std::optional<SolveResult>& r) {
        return r && r->status == SolveStatus::Exact;
    };
    auto violated = [](int lo, int hi) { return lo > hi; };
    bool bad = false;
    const bool fall_exact = rep.fall && rep.fall->status == SolveStatus::Exact;
    if (fall_exact && rep.chi_f()) {
        if (exact(rep.chi)) bad = bad || violated(rep.chi->value, *rep.chi_f());
        bad = bad || violated(*rep.chi_f(), *rep.psi_f());
        if (exact(rep.phi)) bad = bad || violated(*rep.psi_f(), rep.phi->value);
        if (exact(rep.gamma)) bad = bad || violated(*rep.psi_f(), rep.gamma->value);
    }
    if (exact(rep.phi) && exact(rep.partial_gamma))
        bad = bad || violated(rep.phi->value, rep.partial_gamma->value);
    if (exact(rep.gamma) && exact(rep.partial_gamma))
        bad = bad || violated(rep.gamma->value, rep.partial_gamma->value);
    if (exact(rep.partial_gamma) && exact(rep.psi))
        bad = bad || violated(rep.partial_gamma->value, rep.psi->value);
    if (bad) throw std::logic_error("parameter_report: parameter chain violated");
}

}  // namespace detail

// Runs the selected solvers (all when `select` is empty), cross-checks every
// witness with classify(), and asserts the parameter chain across exact
// entries. Timeouts are carried per parameter, never aborting the rest.
inline ParameterReport parameter_report(const Graph& g, const SearchLimits& limits = {},
                                        const std::set<std::string>& select = {}) {
    require_nonempty(g, "parameter_report");
    std::set<std::string> wanted = select.empty() ? all_parameter_names() : select;
    for (const std::string& name : wanted)
        if (!all_parameter_names().count(name))
            throw std::invalid_argument("parameter_report: unknown parameter '" + name + "'");
    ParameterReport rep;
    rep.graph_name = g.name();
    rep.n = g.n();
    rep.m = g.m();
    const bool want_fall =
        wanted.count("fall_spectrum") || wanted.count("chi_f") || wanted.count("psi_f");
    if (wanted.count("chi")) {
        rep.chi = chromatic_number(g, limits);
        detail::check_witness(g, *rep.chi, &ColoringClass::proper, "chi");
    }
    if (want_fall) {
        rep.fall = fall_spectrum(g, limits);
        for (const auto& [k, w] : rep.fall->witnesses) {
            ColoringClass cc = classify(g, w);
            if (!cc.fall) throw std::logic_error("fall witness fails the fall check");
        }
    }
    if (wanted.count("phi")) {
        rep.phi = b_chromatic_number(g, limits);
        detail::check_witness(g, *rep.phi, &ColoringClass::b_coloring, "phi");
    }
    if (wanted.count("gamma")) {
        rep.gamma = grundy_number(g, limits);
        detail::check_witness(g, *rep.gamma, &ColoringClass::grundy, "gamma");
    }
    if (wanted.count("partial_gamma")) {
        rep.partial_gamma = partial_grundy_number(g, limits);
        detail::check_witness(g, *rep.partial_gamma, &ColoringClass::partial_grundy,
                              "partial_gamma");
    }
    if (wanted.count("psi")) {
        rep.psi = achromatic_number(g, limits);
        detail::check_witness(g, *rep.psi, &ColoringClass::complete, "psi");
    }
    detail::check_chain(rep);
    return rep;
}

}  // namespace fallcol
