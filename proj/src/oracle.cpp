#include "totalcol/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "totalcol/errors.hpp"

namespace totalcol {

SearchBudget::SearchBudget(std::optional<std::uint64_t> node_limit, std::optional<std::chrono::milliseconds> time_limit)
    : node_limit_(node_limit), time_limit_(time_limit) {
    if (!node_limit_ && !time_limit_) throw DomainError("search budget needs a node limit or a time limit");
    if (node_limit_ && *node_limit_ == 0) throw DomainError("node limit must be positive");
    if (time_limit_ && time_limit_->count() < 0) throw DomainError("time limit must be non-negative");
}

const char* to_string(SearchStatus s) noexcept {
    switch (s) {
        case SearchStatus::Exact: return "exact";
        case SearchStatus::LowerBoundOnly: return "lower_bound_only";
        case SearchStatus::TimedOut: return "timed_out";
    }
    return "unknown";
}

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Optimal: return "optimal";
        case Verdict::ValidButUnproven: return "valid_but_unproven";
        case Verdict::Suboptimal: return "suboptimal";
    }
    return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

class BudgetClock {
public:
    explicit BudgetClock(const SearchBudget& budget) : node_limit_(budget.node_limit()) {
        if (budget.time_limit()) deadline_ = Clock::now() + *budget.time_limit();
    }

    // Counts one node; false once either limit is hit.
    bool tick() {
        ++nodes_;
        if (node_limit_ && nodes_ > *node_limit_) return false;
        if (deadline_ && (nodes_ & 0x3ff) == 0 && Clock::now() >= *deadline_) return false;
        return true;
    }
    bool past_deadline() const { return deadline_ && Clock::now() >= *deadline_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    std::optional<std::uint64_t> node_limit_;
    std::optional<Clock::time_point> deadline_;
    std::uint64_t nodes_ = 0;
};

class DsaturSearch {
public:
    DsaturSearch(const Graph& g, int palette_cap)
        : g_(g),
          n_(g.vertex_count()),
          cap_(std::max(palette_cap, 1)),
          colour_(static_cast<std::size_t>(n_), kUncoloured),
          forbid_(static_cast<std::size_t>(n_) * cap_, 0),
          saturation_(static_cast<std::size_t>(n_), 0) {}

    // Plain DSATUR; returns the colouring.
    std::vector<Colour> greedy() {
        for (int step = 0; step < n_; ++step) {
            const VertexId v = select();
            Colour c = 0;
            while (forbid_[index(v, c)] != 0) ++c;
            assign(v, c);
        }
        std::vector<Colour> out = colour_;
        for (VertexId v = 0; v < n_; ++v) unassign(v);
        return out;
    }

    // Looks for colourings with fewer than `best` colours, stopping at
    // `lower`. Returns false if the budget ran out.
    bool improve(int lower, int& best, std::vector<Colour>& best_colouring, BudgetClock& clock) {
        lower_ = lower;
        best_ = &best;
        best_colouring_ = &best_colouring;
        clock_ = &clock;
        aborted_ = false;
        descend(0, -1);
        return !aborted_;
    }

private:
    std::size_t index(VertexId v, Colour c) const { return static_cast<std::size_t>(v) * cap_ + c; }

    VertexId select() const {
        VertexId best = -1;
        for (VertexId v = 0; v < n_; ++v) {
            if (colour_[v] != kUncoloured) continue;
            if (best == -1 || saturation_[v] > saturation_[best] ||
                (saturation_[v] == saturation_[best] && g_.degree(v) > g_.degree(best))) {
                best = v;
            }
        }
        return best;
    }

    void assign(VertexId v, Colour c) {
        colour_[v] = c;
        for (VertexId w : g_.neighbours(v))
            if (forbid_[index(w, c)]++ == 0) ++saturation_[w];
    }

    void unassign(VertexId v) {
        const Colour c = colour_[v];
        colour_[v] = kUncoloured;
        for (VertexId w : g_.neighbours(v))
            if (--forbid_[index(w, c)] == 0) --saturation_[w];
    }

    bool finished() const { return aborted_ || *best_ <= lower_; }

    void descend(int coloured, Colour max_used) {
        if (!clock_->tick()) {
            aborted_ = true;
            return;
        }
        if (coloured == n_) {
            *best_ = max_used + 1;
            *best_colouring_ = colour_;
            return;
        }
        const VertexId v = select();
        // Colour best-1 or above cannot improve on the incumbent.
        const Colour limit = std::min<Colour>(max_used + 1, *best_ - 2);
        for (Colour c = 0; c <= limit; ++c) {
            if (forbid_[index(v, c)] != 0) continue;
            assign(v, c);
            descend(coloured + 1, std::max(max_used, c));
            unassign(v);
            if (finished()) return;
        }
    }

    const Graph& g_;
    int n_;
    int cap_;
    std::vector<Colour> colour_;
    std::vector<std::int32_t> forbid_;
    std::vector<std::int32_t> saturation_;

    int lower_ = 0;
    int* best_ = nullptr;
    std::vector<Colour>* best_colouring_ = nullptr;
    BudgetClock* clock_ = nullptr;
    bool aborted_ = false;
};

}  // namespace

std::vector<VertexId> greedy_clique(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<VertexId> best;
    std::vector<VertexId> clique;
    std::vector<VertexId> candidates;
    for (VertexId seed = 0; seed < n; ++seed) {
        if (g.degree(seed) + 1 <= static_cast<int>(best.size())) continue;
        clique.assign(1, seed);
        const auto nb = g.neighbours(seed);
        candidates.assign(nb.begin(), nb.end());
        std::stable_sort(candidates.begin(), candidates.end(),
                         [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
        for (VertexId w : candidates) {
            const bool joins = std::all_of(clique.begin(), clique.end(), [&](VertexId u) { return g.adjacent(u, w); });
            if (joins) clique.push_back(w);
        }
        if (clique.size() > best.size()) best = clique;
    }
    return best;
}

ChromaticResult exact_chromatic_number(const Graph& g, const SearchBudget& budget, int lower_hint) {
    ChromaticResult result;
    BudgetClock clock(budget);
    const int n = g.vertex_count();
    result.lower = std::max(lower_hint, static_cast<int>(greedy_clique(g).size()));
    if (n == 0) {
        result.status = SearchStatus::Exact;
        result.lower = 0;
        result.upper = 0;
        return result;
    }
    if (clock.past_deadline()) return result;

    DsaturSearch search(g, g.max_degree() + 1);
    std::vector<Colour> best_colouring = search.greedy();
    int best = *std::max_element(best_colouring.begin(), best_colouring.end()) + 1;

    bool complete = true;
    if (best > result.lower) complete = search.improve(result.lower, best, best_colouring, clock);

    result.nodes = clock.nodes();
    result.upper = best;
    result.colouring = std::move(best_colouring);
    if (complete) {
        // Exhausting the tree proves nothing below `best` exists.
        result.lower = best;
        result.status = SearchStatus::Exact;
    } else {
        result.status = SearchStatus::TimedOut;
    }
    return result;
}

Graph total_graph(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        edges.push_back({e.u, e.v});
        edges.push_back({e.u, n + id});
        edges.push_back({e.v, n + id});
    }
    for (VertexId v = 0; v < n; ++v) {
        const auto inc = g.incident_edges(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j) edges.push_back(make_edge(n + inc[i], n + inc[j]));
    }
    std::vector<std::string> labels;
    if (g.has_labels()) {
        for (VertexId v = 0; v < n; ++v) labels.push_back(g.label(v));
        for (const Edge& e : g.edges()) labels.push_back(g.label(e.u) + "-" + g.label(e.v));
    }
    return make_graph(g.element_count(), edges, std::move(labels));
}

OracleResult exact_chi_total(const Graph& g, const SearchBudget& budget) {
    const int delta_bound = g.vertex_count() == 0 ? 0 : g.max_degree() + 1;
    const Graph t = total_graph(g);
    ChromaticResult chromatic = exact_chromatic_number(t, budget, delta_bound);

    OracleResult out;
    out.status = chromatic.status;
    out.lower = chromatic.lower;
    out.upper = chromatic.upper;
    out.nodes = chromatic.nodes;
    if (!chromatic.colouring.empty() || g.vertex_count() == 0) {
        const auto first_edge = chromatic.colouring.begin() + g.vertex_count();
        out.witness = TotalColouring(std::vector<Colour>(chromatic.colouring.begin(), first_edge),
                                     std::vector<Colour>(first_edge, chromatic.colouring.end()));
    }
    return out;
}

CertificationVerdict certify_construction(const Graph& g, const TotalColouring& tc, const SearchBudget& budget) {
    VerificationReport report;
    try {
        report = verify_total(g, tc);
    } catch (const IncompleteColouringError& e) {
        throw PreconditionError(std::string("cannot certify: ") + e.what());
    }
    if (!report.valid) {
        throw PreconditionError("cannot certify: colouring has " + std::to_string(report.violations.size()) +
                                " conflicts");
    }

    CertificationVerdict out;
    out.colours_used = report.colours_used;
    out.oracle = exact_chi_total(g, budget);
    out.chi_total = out.oracle.chi_total();
    if (!out.chi_total) {
        out.verdict = Verdict::ValidButUnproven;
    } else if (*out.chi_total == out.colours_used) {
        out.verdict = Verdict::Optimal;
    } else if (*out.chi_total < out.colours_used) {
        out.verdict = Verdict::Suboptimal;
    } else {
        throw std::logic_error("oracle value " + std::to_string(*out.chi_total) +
                               " exceeds the palette of a verified colouring");
    }
    return out;
}

}  // namespace totalcol
