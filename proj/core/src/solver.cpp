#include "fallcolor/solver.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

#include "fallcolor/errors.hpp"

namespace fallcolor {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    bool active = false;
    Clock::time_point at{};

    static Deadline from(const SolveOptions& opts) {
        Deadline d;
        if (opts.timeout.count() > 0) {
            d.active = true;
            d.at = Clock::now() + opts.timeout;
        }
        return d;
    }

    bool expired() const { return active && Clock::now() >= at; }
};

void check_capacity(const Graph& g, const SolveOptions& opts, const char* what) {
    if (opts.capacity < 1 || opts.capacity > kSolverMaxCapacity)
        throw InvalidArgument("solver capacity must be in [1, " + std::to_string(kSolverMaxCapacity) + "]");
    if (g.vertex_count() > opts.capacity)
        throw CapacityError(std::string(what) + ": graph has " + std::to_string(g.vertex_count()) +
                            " vertices, capacity is " + std::to_string(opts.capacity));
}

std::vector<int> degree_descending_order(const Graph& g) {
    std::vector<int> order(static_cast<size_t>(g.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a < b;
    });
    return order;
}

// Backtracking search for a fall k-coloring.
//
// Candidate colors for an uncolored vertex are exactly the colors absent
// from its closed neighborhood, so every assignment is proper and shrinks
// the vertex's own missing set. Two pruning rules run after each
// assignment:
//   * a vertex whose missing colors outnumber its uncolored closed
//     neighborhood slots can never become colorful;
//   * for every vertex v and color c still missing at v there must remain
//     an uncolored u in N[v] at which c is still assignable.
// Color symmetry is broken by introducing color ids in first-use order
// along the fixed vertex order (descending degree, ties by id), which also
// makes the first solution the lexicographically smallest witness.
class FallSearcher {
public:
    FallSearcher(const Graph& g, int k, Deadline deadline)
        : g_(g),
          n_(g.vertex_count()),
          k_(k),
          deadline_(deadline),
          order_(degree_descending_order(g)),
          closed_(static_cast<size_t>(n_), VertexSet(n_)),
          count_(static_cast<size_t>(n_) * static_cast<size_t>(k), 0),
          missing_cnt_(static_cast<size_t>(n_), static_cast<uint8_t>(k)),
          slots_(static_cast<size_t>(n_), 0),
          color_of_(static_cast<size_t>(n_), -1),
          uncolored_(n_),
          missing_at_(static_cast<size_t>(k), VertexSet(n_)),
          scratch_(n_) {
        for (int v = 0; v < n_; ++v) {
            closed_[static_cast<size_t>(v)] = g.neighbors(v);
            closed_[static_cast<size_t>(v)].set(v);
            slots_[static_cast<size_t>(v)] = static_cast<uint8_t>(g.degree(v) + 1);
            uncolored_.set(v);
        }
        for (auto& m : missing_at_)
            for (int v = 0; v < n_; ++v) m.set(v);
    }

    SearchOutcome run() {
        if (dfs(0)) {
            Coloring witness(std::vector<int>(color_of_.begin(), color_of_.end()), k_);
            return {SearchStatus::found, std::move(witness)};
        }
        if (aborted_) return {SearchStatus::undecided, std::nullopt};
        return {SearchStatus::absent, std::nullopt};
    }

private:
    uint8_t& count_at(int v, int c) { return count_[static_cast<size_t>(v) * static_cast<size_t>(k_) + static_cast<size_t>(c)]; }

    bool dfs(int idx) {
        if (idx == n_) return true;
        if (k_ - used_colors_ > n_ - idx) return false; // cannot introduce the remaining colors
        if ((++nodes_ & 1023) == 0 && deadline_.expired()) {
            aborted_ = true;
            return false;
        }

        const int v = order_[static_cast<size_t>(idx)];
        const int limit = std::min(used_colors_ + 1, k_);
        for (int c = 0; c < limit; ++c) {
            if (count_at(v, c) != 0) continue;
            const bool fresh = (c == used_colors_);
            assign(v, c, fresh);
            if (consistent(v) && dfs(idx + 1)) return true;
            unassign(v, c, fresh);
            if (aborted_) return false;
        }
        return false;
    }

    void assign(int v, int c, bool fresh) {
        color_of_[static_cast<size_t>(v)] = static_cast<int8_t>(c);
        uncolored_.reset(v);
        if (fresh) ++used_colors_;
        closed_[static_cast<size_t>(v)].for_each([&](int w) {
            if (count_at(w, c)++ == 0) {
                missing_at_[static_cast<size_t>(c)].reset(w);
                --missing_cnt_[static_cast<size_t>(w)];
            }
            --slots_[static_cast<size_t>(w)];
        });
    }

    void unassign(int v, int c, bool fresh) {
        closed_[static_cast<size_t>(v)].for_each([&](int w) {
            if (--count_at(w, c) == 0) {
                missing_at_[static_cast<size_t>(c)].set(w);
                ++missing_cnt_[static_cast<size_t>(w)];
            }
            ++slots_[static_cast<size_t>(w)];
        });
        if (fresh) --used_colors_;
        uncolored_.set(v);
        color_of_[static_cast<size_t>(v)] = -1;
    }

    bool consistent(int v) {
        bool ok = true;
        closed_[static_cast<size_t>(v)].for_each([&](int w) {
            if (missing_cnt_[static_cast<size_t>(w)] > slots_[static_cast<size_t>(w)]) ok = false;
            if (uncolored_.test(w) && missing_cnt_[static_cast<size_t>(w)] == 0) ok = false;
        });
        if (!ok) return false;

        // Support rule: color c missing at w needs a spot in N[w] that is
        // uncolored and where c is still proper, i.e. N[w] ∩ uncolored ∩
        // missing_at[c].
        for (int c = 0; c < k_; ++c) {
            scratch_ = missing_at_[static_cast<size_t>(c)];
            scratch_ &= uncolored_;
            bool dead = false;
            missing_at_[static_cast<size_t>(c)].for_each([&](int w) {
                if (!dead && !closed_[static_cast<size_t>(w)].intersects(scratch_)) dead = true;
            });
            if (dead) return false;
        }
        return true;
    }

    const Graph& g_;
    int n_;
    int k_;
    Deadline deadline_;
    std::vector<int> order_;
    std::vector<VertexSet> closed_;
    std::vector<uint8_t> count_;
    std::vector<uint8_t> missing_cnt_;
    std::vector<uint8_t> slots_;
    std::vector<int8_t> color_of_;
    VertexSet uncolored_;
    std::vector<VertexSet> missing_at_;
    VertexSet scratch_;
    int used_colors_ = 0;
    uint64_t nodes_ = 0;
    bool aborted_ = false;
};

// Feasibility search for a proper k-coloring, DSATUR vertex choice.
class ProperSearcher {
public:
    ProperSearcher(const Graph& g, int k, Deadline deadline)
        : g_(g),
          n_(g.vertex_count()),
          k_(k),
          deadline_(deadline),
          count_(static_cast<size_t>(n_) * static_cast<size_t>(k), 0),
          sat_(static_cast<size_t>(n_), 0),
          color_of_(static_cast<size_t>(n_), -1) {}

    // true / false when decided; aborted() when the deadline struck.
    bool search() { return dfs(0); }
    bool aborted() const { return aborted_; }

private:
    uint8_t& count_at(int v, int c) { return count_[static_cast<size_t>(v) * static_cast<size_t>(k_) + static_cast<size_t>(c)]; }

    int pick() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n_; ++v) {
            if (color_of_[static_cast<size_t>(v)] >= 0) continue;
            const int s = sat_[static_cast<size_t>(v)];
            const int d = g_.degree(v);
            if (s > best_sat || (s == best_sat && d > best_deg)) {
                best = v;
                best_sat = s;
                best_deg = d;
            }
        }
        return best;
    }

    bool dfs(int colored) {
        if (colored == n_) return true;
        if ((++nodes_ & 1023) == 0 && deadline_.expired()) {
            aborted_ = true;
            return false;
        }
        const int v = pick();
        if (sat_[static_cast<size_t>(v)] >= k_) return false;
        const int limit = std::min(used_colors_ + 1, k_);
        for (int c = 0; c < limit; ++c) {
            if (count_at(v, c) != 0) continue;
            const bool fresh = (c == used_colors_);
            color_of_[static_cast<size_t>(v)] = static_cast<int8_t>(c);
            if (fresh) ++used_colors_;
            bool ok = true;
            g_.neighbors(v).for_each([&](int w) {
                if (count_at(w, c)++ == 0) ++sat_[static_cast<size_t>(w)];
                if (color_of_[static_cast<size_t>(w)] < 0 && sat_[static_cast<size_t>(w)] >= k_) ok = false;
            });
            if (ok && dfs(colored + 1)) return true;
            g_.neighbors(v).for_each([&](int w) {
                if (--count_at(w, c) == 0) --sat_[static_cast<size_t>(w)];
            });
            if (fresh) --used_colors_;
            color_of_[static_cast<size_t>(v)] = -1;
            if (aborted_) return false;
        }
        return false;
    }

    const Graph& g_;
    int n_;
    int k_;
    Deadline deadline_;
    std::vector<uint8_t> count_;
    std::vector<uint8_t> sat_;
    std::vector<int8_t> color_of_;
    int used_colors_ = 0;
    uint64_t nodes_ = 0;
    bool aborted_ = false;
};

int greedy_coloring_bound(const Graph& g) {
    const auto order = degree_descending_order(g);
    std::vector<int> color(static_cast<size_t>(g.vertex_count()), -1);
    int k = 0;
    for (int v : order) {
        uint64_t taken[2] = {0, 0};
        g.neighbors(v).for_each([&](int w) {
            int c = color[static_cast<size_t>(w)];
            if (c >= 0) taken[c >> 6] |= uint64_t{1} << (c & 63);
        });
        int c = 0;
        while (taken[c >> 6] >> (c & 63) & 1) ++c;
        color[static_cast<size_t>(v)] = c;
        k = std::max(k, c + 1);
    }
    return k;
}

FallReport fall_set_connected(const Graph& g, const SolveOptions& opts) {
    FallReport report;
    const int upper = g.min_degree() + 1;
    for (int k = 1; k <= upper; ++k) {
        SearchOutcome outcome = find_fall_coloring(g, k, opts);
        switch (outcome.status) {
        case SearchStatus::found:
            report.fall_set.push_back(k);
            report.witnesses.emplace(k, std::move(*outcome.coloring));
            break;
        case SearchStatus::absent:
            break;
        case SearchStatus::undecided:
            report.undecided.push_back(k);
            break;
        }
    }
    if (!report.fall_set.empty()) {
        report.chi_f = report.fall_set.front();
        report.psi_f = report.fall_set.back();
    }
    return report;
}

} // namespace

int clique_lower_bound(const Graph& g) {
    std::vector<int> clique;
    for (int v : degree_descending_order(g)) {
        bool fits = true;
        for (int u : clique)
            if (!g.adjacent(u, v)) {
                fits = false;
                break;
            }
        if (fits) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

int chromatic_number(const Graph& g, const SolveOptions& opts) {
    check_capacity(g, opts, "chromatic_number");
    if (g.edge_count() == 0) return 1;
    const int lb = clique_lower_bound(g);
    const int ub = greedy_coloring_bound(g);
    const Deadline deadline = Deadline::from(opts);
    for (int k = lb; k < ub; ++k) {
        ProperSearcher searcher(g, k, deadline);
        if (searcher.search()) return k;
        if (searcher.aborted()) throw UndecidedError("chromatic_number: timeout at k=" + std::to_string(k));
    }
    return ub;
}

SearchOutcome find_fall_coloring(const Graph& g, int k, const SolveOptions& opts) {
    check_capacity(g, opts, "find_fall_coloring");
    if (k < 1) throw InvalidArgument("fall coloring needs k >= 1, got k=" + std::to_string(k));
    if (k > g.min_degree() + 1) return {SearchStatus::absent, std::nullopt};
    if (k < clique_lower_bound(g)) return {SearchStatus::absent, std::nullopt};

    FallSearcher searcher(g, k, Deadline::from(opts));
    SearchOutcome outcome = searcher.run();
    assert(!outcome.found() || is_fall(g, *outcome.coloring));
    return outcome;
}

FallReport fall_set(const Graph& g, const SolveOptions& opts) {
    check_capacity(g, opts, "fall_set");
    const auto comps = connected_components(g);
    if (comps.size() == 1) return fall_set_connected(g, opts);

    std::vector<InducedSubgraph> subs;
    std::vector<FallReport> parts;
    subs.reserve(comps.size());
    parts.reserve(comps.size());
    for (const auto& comp : comps) {
        subs.push_back(induced_subgraph(g, comp));
        parts.push_back(fall_set_connected(subs.back().graph, opts));
    }

    FallReport report;
    const int upper = g.min_degree() + 1;
    for (int k = 1; k <= upper; ++k) {
        bool everywhere = true;
        bool undecided = false;
        for (const auto& part : parts) {
            if (part.contains(k)) continue;
            everywhere = false;
            if (std::binary_search(part.undecided.begin(), part.undecided.end(), k))
                undecided = true;
            else {
                undecided = false;
                break; // definitively absent in this component
            }
        }
        if (everywhere) {
            std::vector<int> colors(static_cast<size_t>(g.vertex_count()), -1);
            for (size_t i = 0; i < parts.size(); ++i) {
                const auto& witness = parts[i].witnesses.at(k);
                for (size_t j = 0; j < subs[i].original_ids.size(); ++j)
                    colors[static_cast<size_t>(subs[i].original_ids[j])] = witness.colors[j];
            }
            report.fall_set.push_back(k);
            report.witnesses.emplace(k, Coloring(std::move(colors), k));
        } else if (undecided) {
            report.undecided.push_back(k);
        }
    }
    if (!report.fall_set.empty()) {
        report.chi_f = report.fall_set.front();
        report.psi_f = report.fall_set.back();
    }
    return report;
}

int chi_f(const Graph& g, const SolveOptions& opts) {
    for (int k = 1; k <= g.min_degree() + 1; ++k) {
        SearchOutcome outcome = find_fall_coloring(g, k, opts);
        if (outcome.found()) return k;
        if (outcome.status == SearchStatus::undecided)
            throw UndecidedError("chi_f: search timed out at k=" + std::to_string(k));
    }
    throw NoFallColoringError("chi_f: the graph has no fall coloring");
}

int psi_f(const Graph& g, const SolveOptions& opts) {
    for (int k = g.min_degree() + 1; k >= 1; --k) {
        SearchOutcome outcome = find_fall_coloring(g, k, opts);
        if (outcome.found()) return k;
        if (outcome.status == SearchStatus::undecided)
            throw UndecidedError("psi_f: search timed out at k=" + std::to_string(k));
    }
    throw NoFallColoringError("psi_f: the graph has no fall coloring");
}

} // namespace fallcolor
