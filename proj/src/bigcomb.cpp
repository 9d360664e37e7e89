#include "ramsey/bigcomb.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ramsey {

PartList::PartList(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw DomainError(DomainError::Kind::EmptyInput, "PartList needs at least one part");
    for (int p : parts_)
        if (p < 0)
            throw DomainError(DomainError::Kind::NegativePart, "PartList parts must be nonnegative");
    total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

PartList::PartList(int n, std::vector<int> parts) : PartList(std::move(parts)) {
    if (total_ != n)
        throw DomainError(DomainError::Kind::PartSumMismatch,
                          "PartList parts sum to " + std::to_string(total_) +
                              ", expected " + std::to_string(n));
}

Natural factorial(int n) {
    assert(n >= 0);
    Natural result = 1;
    for (int i = 2; i <= n; ++i)
        result *= i;
    return result;
}

Natural binomial(int n, int k) {
    assert(n >= 0);
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Natural result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i; // exact: result is C(n-k+i, i) after this step
    }
    return result;
}

Natural multinomial(const PartList& p) {
    // Divisions last: the running product stays integral, and a sum/parts
    // mismatch shows up as an inexact final division.
    Natural numerator = factorial(p.total());
    Natural denominator = 1;
    for (int part : p.parts())
        denominator *= factorial(part);
    Natural quotient, remainder;
    boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
    if (remainder != 0)
        throw std::logic_error("multinomial division not exact; corrupted PartList");
    return quotient;
}

namespace {

// Memo for the Pascal-like recurrence, keyed on the sorted part multiset with
// zeros dropped (the recurrence only ever touches positive parts).
std::map<std::vector<int>, Natural> recurrence_memo;
std::mutex recurrence_mutex;

std::vector<int> recurrence_key(std::span<const int> parts) {
    std::vector<int> key;
    key.reserve(parts.size());
    for (int p : parts)
        if (p > 0)
            key.push_back(p);
    std::sort(key.begin(), key.end());
    return key;
}

Natural multinomial_by_recurrence(const std::vector<int>& key) {
    if (key.empty())
        return 1; // all parts zero
    {
        std::lock_guard<std::mutex> lock(recurrence_mutex);
        auto it = recurrence_memo.find(key);
        if (it != recurrence_memo.end())
            return it->second;
    }
    Natural total = 0;
    for (std::size_t i = 0; i < key.size(); ++i) {
        std::vector<int> child = key;
        child[i] -= 1;
        total += multinomial_by_recurrence(recurrence_key(child));
    }
    std::lock_guard<std::mutex> lock(recurrence_mutex);
    return recurrence_memo.emplace(key, std::move(total)).first->second;
}

} // namespace

Natural multinomial_recursive(const PartList& p) {
    return multinomial_by_recurrence(recurrence_key(p.parts()));
}

Natural e0_scaled(int r) {
    if (r < 1)
        throw DomainError(DomainError::Kind::RTooSmall, "e0_scaled requires r >= 1");
    // E(n) = n * E(n-1) + 1 with E(0) = 1 builds the sum with one small
    // multiplication per step.
    Natural sum = 1;
    for (int n = 1; n <= r; ++n)
        sum = sum * n + 1;
    return sum;
}

Natural e1_scaled(int r) {
    return e0_scaled(r) - factorial(r);
}

} // namespace ramsey
