#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/bigcomb.hpp"

namespace ramsey {

// Assignment of one of r colors to each edge of K_n.
// Edge index = position in lexicographic pair order:
// (0,1),(0,2),...,(0,n-1),(1,2),...
struct EdgeColoring {
    int n = 0;
    int r = 0;
    std::vector<std::uint8_t> colors; // C(n,2) entries, each < r

    static int edge_count(int n) { return n * (n - 1) / 2; }
    static int edge_index(int i, int j, int n);

    // "n r" followed by the color digits in edge order, e.g. "5 2 0110011010".
    std::string serialize() const;
};

// True iff some size-subset of vertices has all internal edges in the given
// color. Per-color adjacency bitmasks with recursive clique extension.
bool mono_clique_exists(const EdgeColoring& c, int color, int size);

enum class SearchKind { Forced, Witness, BudgetExceeded };

struct SearchOutcome {
    SearchKind kind = SearchKind::Forced;
    std::optional<EdgeColoring> witness; // re-verified before being returned
    std::uint64_t colorings_examined = 0; // edge-color placements attempted
};

// Exhaustively searches the r-colorings of K_n for one avoiding a
// monochromatic K_{targets[i]} in every color i. Colorings are enumerated as
// base-r counters over lexicographic edge order (the reported witness is the
// enumeration-order-first one), with two refinements that do not change the
// answer: on diagonal targets the first edge is fixed to color 0, and a
// partial coloring is abandoned as soon as a placed edge completes a
// forbidden monochromatic clique among fully-colored vertices.
SearchOutcome ramsey_witness_search(int n, std::span<const int> targets,
                                    std::uint64_t budget);

// Asymmetric pigeonhole check: true iff
//   sum(sizes) > sum(quotas) - r  implies  some sizes[i] >= quotas[i].
// Lists must have equal length >= 1.
bool php_check(std::span<const int> sizes, std::span<const int> quotas);

// Un-memoized, un-sorted reference recursion for (M, w): strips 2's but
// preserves coordinate order, recomputes children exponentially. Small
// inputs only; agrees with the bounds engine on every input.
std::pair<Natural, Natural> naive_M_w(std::span<const int> ks);

} // namespace ramsey
