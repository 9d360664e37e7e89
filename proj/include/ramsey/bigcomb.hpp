#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <span>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey {

// Exact nonnegative integer. Every bound in this library is integer-valued
// and overflows 64 bits almost immediately (C_5(4) has 9 digits, factorials
// worse), so all arithmetic goes through this type. Decimal rendering
// round-trips via str() / construction from string.
using Natural = boost::multiprecision::cpp_int;

// Ordered list of nonnegative parts (k_1,...,k_r) together with their sum n.
// The sum is checked on construction; length must be at least 1.
class PartList {
public:
    explicit PartList(std::vector<int> parts);
    PartList(int n, std::vector<int> parts);
    PartList(std::initializer_list<int> parts) : PartList(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int total() const noexcept { return total_; }

private:
    std::vector<int> parts_;
    int total_;
};

// n!
Natural factorial(int n);

// C(n, k); zero when k < 0 or k > n.
Natural binomial(int n, int k);

// n! / (k_1! ... k_r!), evaluated with exact divisions performed last so a
// corrupted PartList trips the exactness assertion instead of truncating.
Natural multinomial(const PartList& p);

// Same value via the generalized Pascal recurrence (sum over decrementing
// each positive part), memoized on the sorted part multiset. Zero parts are
// ignored. Safe to call from multiple threads.
Natural multinomial_recursive(const PartList& p);

// e_r * r! = sum_{n=0}^{r} r!/n!  (r-th partial sum of e, scaled to an integer)
Natural e0_scaled(int r);

// (e_r - 1) * r! = sum_{n=1}^{r} r!/n! = e0_scaled(r) - r!
Natural e1_scaled(int r);

} // namespace ramsey
