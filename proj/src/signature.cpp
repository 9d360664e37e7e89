#include "ramsey/signature.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace ramsey {

bool ColorSignature::is_diagonal() const noexcept {
    if (targets_.empty())
        return false;
    return targets_.front() == targets_.back(); // sorted, so ends agree iff all equal
}

ColorSignature canonicalize(std::span<const int> ks) {
    if (ks.empty())
        throw DomainError(DomainError::Kind::EmptyInput, "signature must be nonempty");
    ColorSignature sig;
    bool all_twos = true;
    for (int k : ks) {
        if (k < 2)
            throw DomainError(DomainError::Kind::EntryBelowTwo,
                              "signature entries must be >= 2, got " + std::to_string(k));
        if (k > 2) {
            sig.targets_.push_back(k);
            all_twos = false;
        }
    }
    std::sort(sig.targets_.begin(), sig.targets_.end(), std::greater<int>());
    sig.originally_all_twos_ = all_twos;
    return sig;
}

ColorSignature canonicalize(std::initializer_list<int> ks) {
    return canonicalize(std::span<const int>(ks.begin(), ks.size()));
}

ColorSignature diagonal(int r, int k) {
    if (r < 1)
        throw DomainError(DomainError::Kind::RTooSmall, "diagonal requires r >= 1");
    std::vector<int> ks(static_cast<std::size_t>(r), k);
    return canonicalize(ks);
}

ColorSignature decrement_entry(const ColorSignature& sig, int index) {
    assert(index >= 0 && index < sig.length());
    std::vector<int> ks = sig.targets();
    ks[static_cast<std::size_t>(index)] -= 1;
    return canonicalize(ks);
}

} // namespace ramsey
