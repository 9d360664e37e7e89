#include "ramsey/oracles.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ramsey {

int EdgeColoring::edge_index(int i, int j, int n) {
    assert(0 <= i && i < j && j < n);
    // (0,1),(0,2),...,(0,n-1),(1,2),...: edges before row i, then offset in row
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::string EdgeColoring::serialize() const {
    assert(r <= 10); // one digit per edge
    std::string out = std::to_string(n) + " " + std::to_string(r) + " ";
    for (std::uint8_t c : colors)
        out += static_cast<char>('0' + c);
    return out;
}

namespace {

using Mask = std::uint64_t;

// Is there a clique of `need` vertices inside `candidates`, complete in adj?
bool clique_exists(const std::vector<Mask>& adj, Mask candidates, int need) {
    if (need <= 0)
        return true;
    if (__builtin_popcountll(candidates) < need)
        return false;
    Mask rest = candidates;
    while (rest) {
        int v = __builtin_ctzll(rest);
        rest &= rest - 1;
        // extend only with higher-indexed vertices to visit each set once
        if (clique_exists(adj, rest & adj[static_cast<std::size_t>(v)], need - 1))
            return true;
    }
    return false;
}

std::vector<Mask> color_adjacency(const EdgeColoring& c, int color) {
    std::vector<Mask> adj(static_cast<std::size_t>(c.n), 0);
    for (int i = 0; i < c.n; ++i)
        for (int j = i + 1; j < c.n; ++j)
            if (c.colors[static_cast<std::size_t>(EdgeColoring::edge_index(i, j, c.n))] == color) {
                adj[static_cast<std::size_t>(i)] |= Mask(1) << j;
                adj[static_cast<std::size_t>(j)] |= Mask(1) << i;
            }
    return adj;
}

} // namespace

bool mono_clique_exists(const EdgeColoring& c, int color, int size) {
    assert(0 <= color && color < c.r);
    assert(1 <= size && size <= c.n);
    if (size == 1)
        return c.n >= 1;
    auto adj = color_adjacency(c, color);
    Mask all = (c.n == 64) ? ~Mask(0) : (Mask(1) << c.n) - 1;
    return clique_exists(adj, all, size);
}

namespace {

struct SearchState {
    int n;
    int m; // edge count
    std::vector<int> targets;
    std::vector<std::pair<int, int>> edge_of; // index -> (i, j)
    std::vector<std::vector<Mask>> adj;       // per color, assigned edges only
    std::vector<std::uint8_t> colors;
    std::uint64_t budget;
    std::uint64_t examined = 0;
    bool out_of_budget = false;
};

// Does assigning color c to edge (i,j) complete a monochromatic K_target
// through both endpoints, using already-assigned edges?
bool completes_clique(const SearchState& s, int i, int j, int c) {
    int need = s.targets[static_cast<std::size_t>(c)] - 2;
    Mask common = s.adj[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)] &
                  s.adj[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
    if (need <= 0)
        return true; // K_2 target: the edge itself is the clique
    return clique_exists(s.adj[static_cast<std::size_t>(c)], common, need);
}

// DFS in base-r counter order; returns true when a full avoiding coloring is
// reached (the enumeration-order-first witness).
bool extend(SearchState& s, int depth) {
    if (depth == s.m)
        return true;
    auto [i, j] = s.edge_of[static_cast<std::size_t>(depth)];
    int r = static_cast<int>(s.targets.size());
    int color_limit = (depth == 0 && std::adjacent_find(s.targets.begin(), s.targets.end(),
                                                        std::not_equal_to<int>()) == s.targets.end())
                          ? 1   // diagonal: color permutations act transitively, fix edge 0
                          : r;
    for (int c = 0; c < color_limit; ++c) {
        if (s.examined >= s.budget) {
            s.out_of_budget = true;
            return false;
        }
        ++s.examined;
        if (completes_clique(s, i, j, c))
            continue;
        s.colors[static_cast<std::size_t>(depth)] = static_cast<std::uint8_t>(c);
        s.adj[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)] |= Mask(1) << j;
        s.adj[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)] |= Mask(1) << i;
        if (extend(s, depth + 1))
            return true;
        s.adj[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)] &= ~(Mask(1) << j);
        s.adj[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)] &= ~(Mask(1) << i);
        if (s.out_of_budget)
            return false;
    }
    return false;
}

} // namespace

SearchOutcome ramsey_witness_search(int n, std::span<const int> targets,
                                    std::uint64_t budget) {
    if (n < 2 || n > 64)
        throw DomainError(DomainError::Kind::KTooSmall,
                          "witness search needs 2 <= n <= 64");
    if (targets.empty())
        throw DomainError(DomainError::Kind::EmptyInput, "no targets");
    for (int t : targets)
        if (t < 2)
            throw DomainError(DomainError::Kind::EntryBelowTwo,
                              "targets must be >= 2");

    SearchState s;
    s.n = n;
    s.m = EdgeColoring::edge_count(n);
    s.targets.assign(targets.begin(), targets.end());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            s.edge_of.emplace_back(i, j);
    s.adj.assign(targets.size(), std::vector<Mask>(static_cast<std::size_t>(n), 0));
    s.colors.assign(static_cast<std::size_t>(s.m), 0);
    s.budget = budget;

    bool found = extend(s, 0);

    SearchOutcome outcome;
    outcome.colorings_examined = s.examined;
    if (found) {
        EdgeColoring witness{n, static_cast<int>(targets.size()), s.colors};
        // Soundness is part of the Witness contract: re-verify independently
        // of the search path.
        for (std::size_t c = 0; c < targets.size(); ++c)
            if (mono_clique_exists(witness, static_cast<int>(c), s.targets[c]))
                throw std::logic_error("witness failed re-verification");
        outcome.kind = SearchKind::Witness;
        outcome.witness = std::move(witness);
    } else if (s.out_of_budget) {
        outcome.kind = SearchKind::BudgetExceeded;
    } else {
        outcome.kind = SearchKind::Forced;
    }
    return outcome;
}

bool php_check(std::span<const int> sizes, std::span<const int> quotas) {
    if (sizes.size() != quotas.size() || sizes.empty())
        throw DomainError(DomainError::Kind::LengthMismatch,
                          "sizes and quotas must have equal length >= 1");
    long long size_sum = 0, quota_sum = 0;
    bool some_box_full = false;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        size_sum += sizes[i];
        quota_sum += quotas[i];
        if (sizes[i] >= quotas[i])
            some_box_full = true;
    }
    long long threshold = quota_sum - static_cast<long long>(sizes.size());
    return size_sum <= threshold || some_box_full;
}

namespace {

std::vector<int> strip_twos(std::span<const int> ks) {
    std::vector<int> out;
    out.reserve(ks.size());
    for (int k : ks) {
        if (k < 2)
            throw DomainError(DomainError::Kind::EntryBelowTwo,
                              "entries must be >= 2, got " + std::to_string(k));
        if (k > 2)
            out.push_back(k);
    }
    return out;
}

} // namespace

std::pair<Natural, Natural> naive_M_w(std::span<const int> ks) {
    std::vector<int> t = strip_twos(ks);
    if (t.empty())
        return {Natural(2), Natural(0)};
    if (t.size() == 1)
        return {Natural(t[0]), Natural(0)};
    if (t.size() == 2)
        return {binomial(t[0] + t[1] - 2, t[0] - 1), Natural(0)};
    Natural m_sum = 0;
    Natural w_sum = static_cast<int>(t.size()) - 2;
    for (std::size_t i = 0; i < t.size(); ++i) {
        std::vector<int> child = t;
        child[i] -= 1;
        auto [cm, cw] = naive_M_w(child);
        m_sum += cm;
        w_sum += cw;
    }
    return {std::move(m_sum), std::move(w_sum)};
}

} // namespace ramsey
