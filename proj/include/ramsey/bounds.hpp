#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/bigcomb.hpp"
#include "ramsey/rational.hpp"
#include "ramsey/signature.hpp"

namespace ramsey {

// Cached (M, w) pair for one canonical signature. An entry never changes
// once present; M >= w always holds for cached values.
struct MwEntry {
    Natural m;
    Natural w;
};

// Shared memo for the M/w recursion. Concurrent readers and idempotent
// concurrent insertion are both fine: values are pure functions of the key,
// so a lost insertion race rewrites the same entry.
class MemoTable {
public:
    std::optional<MwEntry> find(const std::vector<int>& key) const;
    void insert(const std::vector<int>& key, MwEntry value);
    std::size_t size() const;

private:
    mutable std::mutex mutex_;
    std::map<std::vector<int>, MwEntry> entries_;
};

// Main term of the pigeonhole recursion. Length >= 3 sums over decrementing
// each coordinate; length 2 is the Erdos-Szekeres binomial; length 1 is k;
// the all-twos signature is 2. Memoized, evaluated with an explicit work
// stack (no call-stack recursion).
Natural M(const ColorSignature& sig);

// Waste function: same recursion shape with an additive (r-2) per expansion
// and value 0 at length <= 2.
Natural w(const ColorSignature& sig);

// Full pigeonhole upper bound on the Ramsey number, computed by direct
// recursion (length >= 2 sums children minus (r-2)). Independent of M and w;
// always equals M(sig) - w(sig).
Natural php_bound(const ColorSignature& sig);

// Exact closed form for M: sum over ordered pairs (i,j), i != j, and
// m = 3..k_j of m * multinomial(sum(k)-2r-m+1; k_1-2,...,k_i-3,...,k_j-m,...).
// Requires length >= 2 and every entry >= 3.
Natural M_formula(const ColorSignature& sig);

// Convenient upper bound b_{k1,k2} * multinomial(sum(k)-2r; k_1-2,...,k_r-2)
// with b = (k1+k2-2)(k1+k2-3)/((k1-1)(k2-1)) over the two largest entries.
// Exact rational; never rounded. Guaranteed >= M(sig).
ExactRational M_upper(const ColorSignature& sig);

// Lower bound 3 * multinomial(sum(k)-2r; k_1-2,...,k_r-2) <= M(sig).
Natural M_lower(const ColorSignature& sig);

// Exact waste on the k=3 diagonal: 3*r! - e0_scaled(r) - 1. Requires r >= 2.
Natural w3_exact(int r);

// Diagonal waste lower bound. k = 3 gives w3_exact(r) (exact); k >= 4
// evaluates the branch/accumulation bound in pure integers:
//   (r-2) * (e1_scaled(r) * sum_{i=0}^{k-4} r!^i  -  r!^(k-3))
//   + sum_{j=0}^{r-3} C(r,j) * (r-j)
//       * multinomial(r(k-3)+j-1; (k-2)^j, (k-3)^(r-j-1), k-4)
//       * (r-j-2 + w3_exact(r-j)).
// Guaranteed <= w(diagonal(r,k)). Requires r >= 2, k >= 3.
Natural w_lower_diag(int r, int k);

// Classical multinomial bound on the raw, un-stripped input:
// multinomial(sum(k)-r; k_1-1,...,k_r-1). Entries must be >= 2.
Natural classical_bound(std::span<const int> ks);

// Teravainen's refinement: sort non-increasing, then
// multinomial(sum(k)-2r+2; k_1-1, k_2-1, k_3-2,...,k_r-2).
// Needs at least two entries, each >= 2.
Natural teravainen_bound(std::span<const int> ks);

// M(diag(r,k)) * ((k-2)!)^r / (r(k-2))! as an exact rational. Approaches 3
// as r grows; exactly 3 when k = 3.
ExactRational asympt_ratio(int r, int k);

// Report-only decimal constants (12 places, exact rational rendering):
// (3+e)/2, (3-e)/2, and (3+e)/2 - d/48.
struct AsymptConstants {
    std::string upper_coeff;
    std::string waste_coeff;
    std::string improved_coeff;
};
AsymptConstants asympt_constants(int d);

// Pre-canonical entry points (canonicalize, then evaluate).
Natural M_of(std::span<const int> ks);
Natural w_of(std::span<const int> ks);
Natural php_bound_of(std::span<const int> ks);

// Bracket 3 + 3/(r-1) + (r-1)/(r-2)^2 sandwiching asympt_ratio from above.
ExactRational ratio_bracket(int r);

} // namespace ramsey
