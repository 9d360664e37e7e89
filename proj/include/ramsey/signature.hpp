#pragma once

#include <span>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey {

// Canonical multiset of clique targets: entries >= 3, sorted non-increasing,
// with all 2's stripped. Ramsey numbers, M and w are invariant under
// permutation and under inserting 2's, so this is the natural memo key.
// An empty signature records whether the pre-canonical input consisted
// entirely of 2's (the only way it can arise).
class ColorSignature {
public:
    const std::vector<int>& targets() const noexcept { return targets_; }
    bool originally_all_twos() const noexcept { return originally_all_twos_; }
    int length() const noexcept { return static_cast<int>(targets_.size()); }
    bool empty() const noexcept { return targets_.empty(); }

    // Nonempty with all entries equal.
    bool is_diagonal() const noexcept;

    bool operator==(const ColorSignature& other) const noexcept {
        return targets_ == other.targets_;
    }

    friend ColorSignature canonicalize(std::span<const int> ks);
    friend ColorSignature diagonal(int r, int k);
    friend ColorSignature decrement_entry(const ColorSignature& sig, int index);

private:
    ColorSignature() = default;

    std::vector<int> targets_;
    bool originally_all_twos_ = false;
};

// Sorts non-increasing and strips 2's. Input must be nonempty with every
// entry >= 2 (EmptyInput / EntryBelowTwo otherwise).
ColorSignature canonicalize(std::span<const int> ks);
ColorSignature canonicalize(std::initializer_list<int> ks);

// The diagonal signature (k,...,k) with r entries. r >= 1, k >= 2.
ColorSignature diagonal(int r, int k);

// Child in the pigeonhole recursion: entry `index` reduced by one, then
// re-canonicalized (a 3 becomes a 2 and is stripped).
ColorSignature decrement_entry(const ColorSignature& sig, int index);

} // namespace ramsey
