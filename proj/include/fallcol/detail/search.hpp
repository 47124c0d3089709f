// detail/search.hpp -- backtracking searchers behind the exact solvers.
//
// All searchers branch on vertices in one fixed static order (descending
// degree, ties by id) and try colors lowest-first, so results and witnesses
// are reproducible. Searchers for color-permutation-invariant classes
// (proper, fall, b, complete) break color symmetry by allowing color c+1
// only once color c is in use; the Grundy-side searchers must not, because
// Grundy conditions order the colors.
#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <vector>

#include "fallcol/coloring.hpp"
#include "fallcol/graph.hpp"

namespace fallcol::detail {

struct Budget {
    long long node_budget = 0;  // 0 = unlimited
    long long nodes = 0;
    bool has_deadline = false;
    std::chrono::steady_clock::time_point deadline;
    bool exhausted = false;

    static Budget start(long long node_budget, double time_budget_seconds) {
        Budget b;
        b.node_budget = node_budget;
        if (time_budget_seconds > 0) {
            b.has_deadline = true;
            b.deadline = std::chrono::steady_clock::now() +
                         std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                             std::chrono::duration<double>(time_budget_seconds));
        }
        return b;
    }

    // One search-tree node. False once the budget is exhausted.
    bool tick() {
        if (exhausted) return false;
        ++nodes;
        if (node_budget > 0 && nodes > node_budget) {
            exhausted = true;
            return false;
        }
        if (has_deadline && (nodes & 1023) == 0 &&
            std::chrono::steady_clock::now() > deadline) {
            exhausted = true;
            return false;
        }
        return true;
    }
};

enum class SearchOutcome { Found, None, Aborted };

inline std::vector<int> branch_order(const Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    return order;
}

inline std::uint32_t color_bit(int c) { return 1u << (c - 1); }
inline std::uint32_t low_colors(int count) {
    return count <= 0 ? 0u : (count >= 32 ? ~0u : (1u << count) - 1u);
}

// Open-neighborhood color bookkeeping: which colors sit on N(v), and how
// many open neighbors are still uncolored. Properness = own color not in
// mask; Grundy checks read mask and uncolored_open.
struct OpenState {
    int k = 0;
    std::vector<int> count;                // [v*k + (c-1)]
    std::vector<std::uint32_t> mask;       // colors present on N(v)
    std::vector<int> uncolored_open;

    void init(const Graph& g, int colors) {
        k = colors;
        count.assign(static_cast<std::size_t>(g.n()) * static_cast<std::size_t>(k), 0);
        mask.assign(static_cast<std::size_t>(g.n()), 0);
        uncolored_open.assign(static_cast<std::size_t>(g.n()), 0);
        for (int v = 0; v < g.n(); ++v)
            uncolored_open[static_cast<std::size_t>(v)] = g.degree(v);
    }
    void on_assign(const Graph& g, int v, int c) {
        for (int u : g.neighbors(v)) {
            auto idx = static_cast<std::size_t>(u) * static_cast<std::size_t>(k) +
                       static_cast<std::size_t>(c - 1);
            if (++count[idx] == 1) mask[static_cast<std::size_t>(u)] |= color_bit(c);
            --uncolored_open[static_cast<std::size_t>(u)];
        }
    }
    void on_undo(const Graph& g, int v, int c) {
        for (int u : g.neighbors(v)) {
            auto idx = static_cast<std::size_t>(u) * static_cast<std::size_t>(k) +
                       static_cast<std::size_t>(c - 1);
            if (--count[idx] == 0) mask[static_cast<std::size_t>(u)] &= ~color_bit(c);
            ++uncolored_open[static_cast<std::size_t>(u)];
        }
    }
};

// Closed-neighborhood color bookkeeping: distinct colors seen by N[v] and
// the number of uncolored slots left there. A vertex can still become
// colorful iff k - popcount(mask[v]) <= slots[v].
struct ClosedState {
    int k = 0;
    std::vector<int> count;  // [v*k + (c-1)]
    std::vector<std::uint32_t> mask;
    std::vector<int> slots;

    void init(const Graph& g, int colors) {
        k = colors;
        count.assign(static_cast<std::size_t>(g.n()) * static_cast<std::size_t>(k), 0);
        mask.assign(static_cast<std::size_t>(g.n()), 0);
        slots.assign(static_cast<std::size_t>(g.n()), 0);
        for (int v = 0; v < g.n(); ++v)
            slots[static_cast<std::size_t>(v)] = g.degree(v) + 1;
    }
    void touch_assign(int w, int c) {
        auto idx = static_cast<std::size_t>(w) * static_cast<std::size_t>(k) +
                   static_cast<std::size_t>(c - 1);
        if (++count[idx] == 1) mask[static_cast<std::size_t>(w)] |= color_bit(c);
        --slots[static_cast<std::size_t>(w)];
    }
    void touch_undo(int w, int c) {
        auto idx = static_cast<std::size_t>(w) * static_cast<std::size_t>(k) +
                   static_cast<std::size_t>(c - 1);
        if (--count[idx] == 0) mask[static_cast<std::size_t>(w)] &= ~color_bit(c);
        ++slots[static_cast<std::size_t>(w)];
    }
    int missing(int w) const {
        return k - std::popcount(mask[static_cast<std::size_t>(w)]);
    }
};

// ---------------------------------------------------------------------------
// Proper k-coloring existence (chromatic number inner loop).
// ---------------------------------------------------------------------------
class ProperSearcher {
public:
    ProperSearcher(const Graph& g, int k, Budget& budget)
        : g_(g), k_(k), budget_(budget), order_(branch_order(g)) {
        color_.assign(static_cast<std::size_t>(g.n()), 0);
        open_.init(g, k);
        uncolored_ = g.n();
    }

    SearchOutcome run(std::vector<int>& out) {
        SearchOutcome r = dfs(0);
        if (r == SearchOutcome::Found) out = found_;
        return r;
    }

private:
    SearchOutcome dfs(std::size_t idx) {
        if (!budget_.tick()) return SearchOutcome::Aborted;
        if (k_ - max_used_ > uncolored_) return SearchOutcome::None;
        if (idx == order_.size()) {
            found_ = color_;
            return SearchOutcome::Found;
        }
        const int v = order_[idx];
        const int cap = std::min(max_used_ + 1, k_);
        for (int c = 1; c <= cap; ++c) {
            if (open_.mask[static_cast<std::size_t>(v)] & color_bit(c)) continue;
            const int old_max = max_used_;
            color_[static_cast<std::size_t>(v)] = c;
            max_used_ = std::max(max_used_, c);
            --uncolored_;
            open_.on_assign(g_, v, c);
            SearchOutcome r = dfs(idx + 1);
            open_.on_undo(g_, v, c);
            ++uncolored_;
            max_used_ = old_max;
            color_[static_cast<std::size_t>(v)] = 0;
            if (r != SearchOutcome::None) return r;
        }
        return SearchOutcome::None;
    }

    const Graph& g_;
    int k_;
    Budget& budget_;
    std::vector<int> order_;
    std::vector<int> color_;
    std::vector<int> found_;
    OpenState open_;
    int uncolored_ = 0;
    int max_used_ = 0;
};

// ---------------------------------------------------------------------------
// Fall k-coloring existence. The workhorse: besides properness and the color
// symmetry cap it maintains, per vertex, the colors missing from the closed
// neighborhood against the uncolored slots left there, prunes when
// missing > slots, and unit-propagates the last slot of a neighborhood.
// ---------------------------------------------------------------------------
class FallSearcher {
public:
    FallSearcher(const Graph& g, int k, Budget& budget)
        : g_(g), k_(k), budget_(budget), order_(branch_order(g)) {
        color_.assign(static_cast<std::size_t>(g.n()), 0);
        open_.init(g, k);
        closed_.init(g, k);
        uncolored_ = g.n();
        full_ = low_colors(k);
    }

    SearchOutcome run(std::vector<int>& out) {
        for (int v = 0; v < g_.n(); ++v)
            if (k_ > g_.degree(v) + 1) return SearchOutcome::None;
        SearchOutcome r = dfs(0);
        if (r == SearchOutcome::Found) out = found_;
        return r;
    }

private:
    struct TrailEntry {
        int vertex;
        int old_max_used;
    };

    bool do_assign(int v, int c) {
        color_[static_cast<std::size_t>(v)] = c;
        trail_.push_back({v, max_used_});
        max_used_ = std::max(max_used_, c);
        --uncolored_;
        open_.on_assign(g_, v, c);
        closed_.touch_assign(v, c);
        for (int u : g_.neighbors(v)) closed_.touch_assign(u, c);
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            auto [v, old_max] = trail_.back();
            trail_.pop_back();
            const int c = color_[static_cast<std::size_t>(v)];
            closed_.touch_undo(v, c);
            for (int u : g_.neighbors(v)) closed_.touch_undo(u, c);
            open_.on_undo(g_, v, c);
            ++uncolored_;
            max_used_ = old_max;
            color_[static_cast<std::size_t>(v)] = 0;
        }
    }

    // Checks vertex w after an assignment in its closed neighborhood; appends
    // forced assignments to queue_. False on a wipeout.
    bool check_vertex(int w) {
        const int missing = closed_.missing(w);
        const int slots = closed_.slots[static_cast<std::size_t>(w)];
        if (missing > slots) return false;
        if (missing == 0 || missing < slots) return true;
        // Every remaining uncolored vertex of N[w] must take a missing color.
        const std::uint32_t miss_mask = full_ & ~closed_.mask[static_cast<std::size_t>(w)];
        const bool forced = (slots == 1);
        auto consider = [&](int u) -> bool {
            if (color_[static_cast<std::size_t>(u)] != 0) return true;
            const std::uint32_t cand =
                miss_mask & ~open_.mask[static_cast<std::size_t>(u)];
            if (cand == 0) return false;
            if (forced)  // single slot, single missing color: forced move
                queue_.push_back({u, std::countr_zero(cand) + 1});
            return true;
        };
        if (!consider(w)) return false;
        for (int u : g_.neighbors(w))
            if (!consider(u)) return false;
        return true;
    }

    // Assigns v=c and runs unit propagation. False on conflict; the caller
    // undoes via the trail mark either way.
    bool assign_propagate(int v, int c) {
        queue_.clear();
        queue_.push_back({v, c});
        for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
            auto [x, cx] = queue_[qi];
            if (color_[static_cast<std::size_t>(x)] != 0) {
                if (color_[static_cast<std::size_t>(x)] == cx) continue;
                return false;
            }
            if (open_.mask[static_cast<std::size_t>(x)] & color_bit(cx)) return false;
            do_assign(x, cx);
            if (!check_vertex(x)) return false;
            for (int u : g_.neighbors(x)) {
                if (!check_vertex(u)) return false;
                if (color_[static_cast<std::size_t>(u)] == 0 &&
                    (full_ & ~open_.mask[static_cast<std::size_t>(u)]) == 0)
                    return false;  // neighbor has no proper color left
            }
        }
        return true;
    }

    SearchOutcome dfs(std::size_t idx) {
        if (!budget_.tick()) return SearchOutcome::Aborted;
        if (k_ - max_used_ > uncolored_) return SearchOutcome::None;
        while (idx < order_.size() && color_[static_cast<std::size_t>(order_[idx])] != 0)
            ++idx;
        if (idx == order_.size()) {
            found_ = color_;
            return SearchOutcome::Found;
        }
        const int v = order_[idx];
        const int cap = std::min(max_used_ + 1, k_);
        for (int c = 1; c <= cap; ++c) {
            if (open_.mask[static_cast<std::size_t>(v)] & color_bit(c)) continue;
            const std::size_t mark = trail_.size();
            if (assign_propagate(v, c)) {
                SearchOutcome r = dfs(idx + 1);
                if (r != SearchOutcome::None) {
                    if (r == SearchOutcome::Aborted) undo_to(mark);
                    return r;
                }
            }
            undo_to(mark);
        }
        return SearchOutcome::None;
    }

    const Graph& g_;
    int k_;
    Budget& budget_;
    std::vector<int> order_;
    std::vector<int> color_;
    std::vector<int> found_;
    OpenState open_;
    ClosedState closed_;
    std::vector<TrailEntry> trail_;
    std::vector<std::pair<int, int>> queue_;
    int uncolored_ = 0;
    int max_used_ = 0;
    std::uint32_t full_ = 0;
};

// ---------------------------------------------------------------------------
// b-coloring existence at fixed k: proper coloring where every class keeps a
// vertex that can still see all k colors on its closed neighborhood.
// ---------------------------------------------------------------------------
class BSearcher {
public:
    BSearcher(const Graph& g, int k, Budget& budget)
        : g_(g), k_(k), budget_(budget), order_(branch_order(g)) {
        color_.assign(static_cast<std::size_t>(g.n()), 0);
        open_.init(g, k);
        closed_.init(g, k);
        uncolored_ = g.n();
        full_ = low_colors(k);
    }

    SearchOutcome run(std::vector<int>& out) {
        SearchOutcome r = dfs(0);
        if (r == SearchOutcome::Found) out = found_;
        return r;
    }

private:
    // Union over still-viable colorful candidates of the classes they can
    // serve; must cover all k classes.
    bool classes_feasible() const {
        std::uint32_t feasible = 0;
        for (int v = 0; v < g_.n(); ++v) {
            if (closed_.missing(v) > closed_.slots[static_cast<std::size_t>(v)]) continue;
            const int cv = color_[static_cast<std::size_t>(v)];
            if (cv != 0)
                feasible |= color_bit(cv);
            else
                feasible |= full_ & ~open_.mask[static_cast<std::size_t>(v)];
            if (feasible == full_) return true;
        }
        return feasible == full_;
    }

    SearchOutcome dfs(std::size_t idx) {
        if (!budget_.tick()) return SearchOutcome::Aborted;
        if (k_ - max_used_ > uncolored_) return SearchOutcome::None;
        if (!classes_feasible()) return SearchOutcome::None;
        if (idx == order_.size()) {
            found_ = color_;
            return SearchOutcome::Found;
        }
        const int v = order_[idx];
        const int cap = std::min(max_used_ + 1, k_);
        for (int c = 1; c <= cap; ++c) {
            if (open_.mask[static_cast<std::size_t>(v)] & color_bit(c)) continue;
            const int old_max = max_used_;
            color_[static_cast<std::size_t>(v)] = c;
            max_used_ = std::max(max_used_, c);
            --uncolored_;
            open_.on_assign(g_, v, c);
            closed_.touch_assign(v, c);
            for (int u : g_.neighbors(v)) closed_.touch_assign(u, c);
            SearchOutcome r = dfs(idx + 1);
            closed_.touch_undo(v, c);
            for (int u : g_.neighbors(v)) closed_.touch_undo(u, c);
            open_.on_undo(g_, v, c);
            ++uncolored_;
            max_used_ = old_max;
            color_[static_cast<std::size_t>(v)] = 0;
            if (r != SearchOutcome::None) return r;
        }
        return SearchOutcome::None;
    }

    const Graph& g_;
    int k_;
    Budget& budget_;
    std::vector<int> order_;
    std::vector<int> color_;
    std::vector<int> found_;
    OpenState open_;
    ClosedState closed_;
    int uncolored_ = 0;
    int max_used_ = 0;
    std::uint32_t full_ = 0;
};

// Most-constrained uncolored vertex: fewest proper colors left, ties by
// degree (descending) then id. The Grundy-side searchers cannot break color
// symmetry, so a static order degenerates on graphs with large independent
// blocks (one side of K_{n,n} would be enumerated freely before any
// cross-side constraint bites); picking the tightest vertex keeps the two
// sides interleaved. Deterministic, so witnesses stay reproducible.
inline int most_constrained_vertex(const Graph& g, const std::vector<int>& color,
                                   const OpenState& open, std::uint32_t full) {
    int best = -1;
    int best_count = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (color[static_cast<std::size_t>(v)] != 0) continue;
        const int count = std::popcount(full & ~open.mask[static_cast<std::size_t>(v)]);
        if (best < 0 || count < best_count ||
            (count == best_count && g.degree(v) > g.degree(best))) {
            best = v;
            best_count = count;
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Grundy k-coloring existence: proper, every class nonempty, every vertex
// Grundy. Colors are ordered, so no symmetry cap. A vertex colored c still
// needs every color below c on its open neighborhood, achievable only
// through its uncolored neighbors.
// ---------------------------------------------------------------------------
class GrundySearcher {
public:
    GrundySearcher(const Graph& g, int k, Budget& budget)
        : g_(g), k_(k), budget_(budget) {
        color_.assign(static_cast<std::size_t>(g.n()), 0);
        open_.init(g, k);
        uncolored_ = g.n();
        full_ = low_colors(k);
    }

    SearchOutcome run(std::vector<int>& out) {
        SearchOutcome r = dfs(0);
        if (r == SearchOutcome::Found) out = found_;
        return r;
    }

private:
    bool grundy_viable(int v) const {
        const int cv = color_[static_cast<std::size_t>(v)];
        const int below_missing = std::popcount(
            low_colors(cv - 1) & ~open_.mask[static_cast<std::size_t>(v)]);
        return below_missing <= open_.uncolored_open[static_cast<std::size_t>(v)];
    }

    // Every class must keep a vertex that could realize it as a Grundy
    // vertex: colored vertices serve their own class, uncolored ones any
    // class c that properness allows and whose c-1 lower colors are still
    // reachable on their open neighborhood.
    bool classes_feasible() const {
        std::uint32_t feasible = 0;
        for (int v = 0; v < g_.n(); ++v) {
            const int cv = color_[static_cast<std::size_t>(v)];
            if (cv != 0) {
                feasible |= color_bit(cv);
                continue;
            }
            const std::uint32_t open = open_.mask[static_cast<std::size_t>(v)];
            const int unc = open_.uncolored_open[static_cast<std::size_t>(v)];
            const int cmax = std::min(k_, g_.degree(v) + 1);
            for (int c = 1; c <= cmax; ++c) {
                if (open & color_bit(c)) continue;
                const int below_seen = std::popcount(open & low_colors(c - 1));
                if (below_seen + unc >= c - 1) feasible |= color_bit(c);
            }
            if (feasible == full_) return true;
        }
        return feasible == full_;
    }

    SearchOutcome dfs(int colored) {
        if (!budget_.tick()) return SearchOutcome::Aborted;
        if (!classes_feasible()) return SearchOutcome::None;
        if (colored == g_.n()) {
            found_ = color_;
            return SearchOutcome::Found;
        }
        const int v = most_constrained_vertex(g_, color_, open_, full_);
        const int cap = std::min(k_, g_.degree(v) + 1);
        for (int c = 1; c <= cap; ++c) {
            if (open_.mask[static_cast<std::size_t>(v)] & color_bit(c)) continue;
            color_[static_cast<std::size_t>(v)] = c;
            --uncolored_;
            open_.on_assign(g_, v, c);
            bool ok = grundy_viable(v);
            if (ok)
                for (int u : g_.neighbors(v)) {
                    if (color_[static_cast<std::size_t>(u)] != 0 && !grundy_viable(u)) {
                        ok = false;
                        break;
                    }
                }
            SearchOutcome r = ok ? dfs(colored + 1) : SearchOutcome::None;
            open_.on_undo(g_, v, c);
            ++uncolored_;
            color_[static_cast<std::size_t>(v)] = 0;
            if (r != SearchOutcome::None) return r;
        }
        return SearchOutcome::None;
    }

    const Graph& g_;
    int k_;
    Budget& budget_;
    std::vector<int> color_;
    std::vector<int> found_;
    OpenState open_;
    int uncolored_ = 0;
    std::uint32_t full_ = 0;
};

// ---------------------------------------------------------------------------
// Partial Grundy k-coloring existence: proper coloring where every class
// keeps at least one potential Grundy vertex. Vertices themselves take any
// proper color; only the per-class witnesses are constrained.
// ---------------------------------------------------------------------------
class PartialGrundySearcher {
public:
    PartialGrundySearcher(const Graph& g, int k, Budget& budget)
        : g_(g), k_(k), budget_(budget) {
        color_.assign(static_cast<std::size_t>(g.n()), 0);
        open_.init(g, k);
        uncolored_ = g.n();
        full_ = low_colors(k);
    }

    SearchOutcome run(std::vector<int>& out) {
        SearchOutcome r = dfs(0);
        if (r == SearchOutcome::Found) out = found_;
        return r;
    }

private:
    bool classes_feasible() const {
        std::uint32_t feasible = 0;
        for (int v = 0; v < g_.n(); ++v) {
            const int cv = color_[static_cast<std::size_t>(v)];
            const std::uint32_t open = open_.mask[static_cast<std::size_t>(v)];
            const int unc = open_.uncolored_open[static_cast<std::size_t>(v)];
            if (cv != 0) {
                if (std::popcount(low_colors(cv - 1) & ~open) <= unc)
                    feasible |= color_bit(cv);
                continue;
            }
            const int cmax = std::min(k_, g_.degree(v) + 1);
            for (int c = 1; c <= cmax; ++c) {
                if (open & color_bit(c)) continue;
                if (std::popcount(open & low_colors(c - 1)) + unc >= c - 1)
                    feasible |= color_bit(c);
            }
            if (feasible == full_) return true;
        }
        return feasible == full_;
    }

    SearchOutcome dfs(int colored) {
        if (!budget_.tick()) return SearchOutcome::Aborted;
        if (!classes_feasible()) return SearchOutcome::None;
        if (colored == g_.n()) {
            found_ = color_;
            return SearchOutcome::Found;
        }
        const int v = most_constrained_vertex(g_, color_, open_, full_);
        for (int c = 1; c <= k_; ++c) {
            if (open_.mask[static_cast<std::size_t>(v)] & color_bit(c)) continue;
            color_[static_cast<std::size_t>(v)] = c;
            --uncolored_;
            open_.on_assign(g_, v, c);
            SearchOutcome r = dfs(colored + 1);
            open_.on_undo(g_, v, c);
            ++uncolored_;
            color_[static_cast<std::size_t>(v)] = 0;
            if (r != SearchOutcome::None) return r;
        }
        return SearchOutcome::None;
    }

    const Graph& g_;
    int k_;
    Budget& budget_;
    std::vector<int> color_;
    std::vector<int> found_;
    OpenState open_;
    int uncolored_ = 0;
    std::uint32_t full_ = 0;
};

// ---------------------------------------------------------------------------
// Complete k-coloring existence: proper coloring with an edge between every
// pair of distinct classes. Tracks covered class pairs and prunes when an
// uncovered pair has no compatible edge left, or when fewer undetermined
// edges remain than uncovered pairs.
// ---------------------------------------------------------------------------
class CompleteSearcher {
public:
    CompleteSearcher(const Graph& g, int k, Budget& budget)
        : g_(g), k_(k), budget_(budget), order_(branch_order(g)),
          edges_(g.edge_list()) {
        color_.assign(static_cast<std::size_t>(g.n()), 0);
        open_.init(g, k);
        uncolored_ = g.n();
        full_ = low_colors(k);
        covered_.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0);
        uncovered_ = k * (k - 1) / 2;
        undetermined_ = static_cast<int>(edges_.size());
    }

    SearchOutcome run(std::vector<int>& out) {
        if (uncovered_ > undetermined_) return SearchOutcome::None;
        SearchOutcome r = dfs(0);
        if (r == SearchOutcome::Found) out = found_;
        return r;
    }

private:
    int pair_index(int a, int b) const {
        if (a > b) std::swap(a, b);
        return (a - 1) * k_ + (b - 1);
    }

    bool endpoint_compatible(int x, int c) const {
        const int cx = color_[static_cast<std::size_t>(x)];
        if (cx != 0) return cx == c;
        return (open_.mask[static_cast<std::size_t>(x)] & color_bit(c)) == 0;
    }

    bool pairs_feasible() const {
        for (int a = 1; a <= k_; ++a)
            for (int b = a + 1; b <= k_; ++b) {
                if (covered_[static_cast<std::size_t>(pair_index(a, b))]) continue;
                bool ok = false;
                for (const auto& [u, v] : edges_) {
                    if (color_[static_cast<std::size_t>(u)] != 0 &&
                        color_[static_cast<std::size_t>(v)] != 0)
                        continue;  // determined edge, pair already fixed
                    if ((endpoint_compatible(u, a) && endpoint_compatible(v, b)) ||
                        (endpoint_compatible(u, b) && endpoint_compatible(v, a))) {
                        ok = true;
                        break;
                    }
                }
                if (!ok) return false;
            }
        return true;
    }

    SearchOutcome dfs(std::size_t idx) {
        if (!budget_.tick()) return SearchOutcome::Aborted;
        if (k_ - max_used_ > uncolored_) return SearchOutcome::None;
        if (uncovered_ > undetermined_) return SearchOutcome::None;
        if (!pairs_feasible()) return SearchOutcome::None;
        if (idx == order_.size()) {
            if (uncovered_ == 0 && max_used_ == k_) {
                found_ = color_;
                return SearchOutcome::Found;
            }
            return SearchOutcome::None;
        }
        const int v = order_[idx];
        const int cap = std::min(max_used_ + 1, k_);
        for (int c = 1; c <= cap; ++c) {
            if (open_.mask[static_cast<std::size_t>(v)] & color_bit(c)) continue;
            const int old_max = max_used_;
            color_[static_cast<std::size_t>(v)] = c;
            max_used_ = std::max(max_used_, c);
            --uncolored_;
            open_.on_assign(g_, v, c);
            std::vector<int> newly;
            for (int u : g_.neighbors(v)) {
                const int cu = color_[static_cast<std::size_t>(u)];
                if (cu == 0) continue;
                --undetermined_;
                const int pi = pair_index(c, cu);
                if (!covered_[static_cast<std::size_t>(pi)]) {
                    covered_[static_cast<std::size_t>(pi)] = 1;
                    --uncovered_;
                    newly.push_back(pi);
                }
            }
            SearchOutcome r = dfs(idx + 1);
            for (int pi : newly) {
                covered_[static_cast<std::size_t>(pi)] = 0;
                ++uncovered_;
            }
            for (int u : g_.neighbors(v))
                if (color_[static_cast<std::size_t>(u)] != 0) ++undetermined_;
            open_.on_undo(g_, v, c);
            ++uncolored_;
            max_used_ = old_max;
            color_[static_cast<std::size_t>(v)] = 0;
            if (r != SearchOutcome::None) return r;
        }
        return SearchOutcome::None;
    }

    const Graph& g_;
    int k_;
    Budget& budget_;
    std::vector<int> order_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> color_;
    std::vector<int> found_;
    OpenState open_;
    std::vector<char> covered_;
    int uncovered_ = 0;
    int undetermined_ = 0;
    int uncolored_ = 0;
    int max_used_ = 0;
    std::uint32_t full_ = 0;
};

// Greedy first-fit coloring along the branch order; upper bound for chi.
inline Coloring greedy_coloring(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.n()), 0);
    int used = 0;
    for (int v : branch_order(g)) {
        std::uint32_t taken = 0;
        for (int u : g.neighbors(v))
            if (color[static_cast<std::size_t>(u)] != 0)
                taken |= color_bit(color[static_cast<std::size_t>(u)]);
        int c = 1;
        while (taken & color_bit(c)) ++c;
        color[static_cast<std::size_t>(v)] = c;
        used = std::max(used, c);
    }
    return Coloring{used, std::move(color)};
}

// Greedy clique along the branch order; lower bound for chi.
inline int greedy_clique_bound(const Graph& g) {
    std::vector<int> clique;
    for (int v : branch_order(g)) {
        bool ok = true;
        for (int u : clique)
            if (!g.adjacent(u, v)) {
                ok = false;
                break;
            }
        if (ok) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

}  // namespace fallcol::detail
