#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "totalcol/colouring.hpp"
#include "totalcol/graph.hpp"

namespace totalcol {

/// Search limits. At least one limit is set; a node limit must be positive.
class SearchBudget {
public:
    SearchBudget(std::optional<std::uint64_t> node_limit, std::optional<std::chrono::milliseconds> time_limit);

    static SearchBudget nodes(std::uint64_t limit) { return {limit, std::nullopt}; }
    static SearchBudget time(std::chrono::milliseconds limit) { return {std::nullopt, limit}; }

    const std::optional<std::uint64_t>& node_limit() const noexcept { return node_limit_; }
    const std::optional<std::chrono::milliseconds>& time_limit() const noexcept { return time_limit_; }

private:
    std::optional<std::uint64_t> node_limit_;
    std::optional<std::chrono::milliseconds> time_limit_;
};

enum class SearchStatus {
    Exact,           // lower == upper, value proved
    LowerBoundOnly,  // budget ran out before any colouring was found
    TimedOut,        // budget ran out with a gap between the bounds
};

const char* to_string(SearchStatus s) noexcept;

/// Outcome of an exact vertex-colouring search.
struct ChromaticResult {
    SearchStatus status = SearchStatus::LowerBoundOnly;
    int lower = 0;
    std::optional<int> upper;
    std::uint64_t nodes = 0;
    /// Best colouring found (colours 0..upper-1), empty if none.
    std::vector<Colour> colouring;
};

/// Exact chromatic number by DSATUR branch and bound. The lower bound is the
/// larger of `lower_hint` and a greedy clique; the initial upper bound is a
/// DSATUR greedy colouring. Branching picks the uncoloured vertex with the
/// highest saturation, then highest degree, then lowest index; a new colour
/// is only ever (max used) + 1.
ChromaticResult exact_chromatic_number(const Graph& g, const SearchBudget& budget, int lower_hint = 0);

/// Greedy clique seeded at every vertex; returns the largest found.
std::vector<VertexId> greedy_clique(const Graph& g);

/// T(G): vertex v of G is vertex v of T, edge e of G is vertex
/// |V(G)| + e of T. Adjacent iff the elements conflict.
Graph total_graph(const Graph& g);

struct OracleResult {
    SearchStatus status = SearchStatus::LowerBoundOnly;
    int lower = 0;
    std::optional<int> upper;
    std::uint64_t nodes = 0;
    /// Total colouring achieving `upper`, when one was found.
    std::optional<TotalColouring> witness;

    std::optional<int> chi_total() const {
        return status == SearchStatus::Exact ? upper : std::nullopt;
    }
};

/// χ''(g) as χ(T(g)). The bound Δ+1 (1 for an edgeless graph with vertices)
/// seeds the search; nothing assumes χ'' <= Δ+2. Budget exhaustion is a
/// result, not an exception.
OracleResult exact_chi_total(const Graph& g, const SearchBudget& budget);

enum class Verdict { Optimal, ValidButUnproven, Suboptimal };

const char* to_string(Verdict v) noexcept;

struct CertificationVerdict {
    Verdict verdict = Verdict::ValidButUnproven;
    /// Proved χ'' when the oracle finished.
    std::optional<int> chi_total;
    int colours_used = 0;
    OracleResult oracle;
};

/// Runs the oracle on g independently of tc and compares. Throws
/// PreconditionError when tc is not a valid total colouring of g.
CertificationVerdict certify_construction(const Graph& g, const TotalColouring& tc, const SearchBudget& budget);

}  // namespace totalcol
