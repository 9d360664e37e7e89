#include "ramsey/bounds.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

namespace ramsey {

std::optional<MwEntry> MemoTable::find(const std::vector<int>& key) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end())
        return std::nullopt;
    return it->second;
}

void MemoTable::insert(const std::vector<int>& key, MwEntry value) {
    assert(value.m >= value.w);
    std::lock_guard<std::mutex> lock(mutex_);
    entries_.emplace(key, std::move(value)); // idempotent: first write wins
}

std::size_t MemoTable::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.size();
}

namespace {

MemoTable& mw_memo() {
    static MemoTable table;
    return table;
}

// Children of a canonical signature, one per coordinate (equal entries yield
// equal children with multiplicity, which the sums below rely on).
std::vector<std::vector<int>> child_keys(const std::vector<int>& key) {
    std::vector<std::vector<int>> children;
    children.reserve(key.size());
    ColorSignature sig = canonicalize(key);
    for (int i = 0; i < sig.length(); ++i)
        children.push_back(decrement_entry(sig, i).targets());
    return children;
}

MwEntry mw_base_case(const std::vector<int>& key) {
    if (key.empty())
        return {Natural(2), Natural(0)}; // all-twos input: a single edge forces K_2
    if (key.size() == 1)
        return {Natural(key[0]), Natural(0)}; // R_1(k) = k
    assert(key.size() == 2);
    return {binomial(key[0] + key[1] - 2, key[0] - 1), Natural(0)};
}

// Fills the memo up to `key` with an explicit work stack; deep lattices at
// large k must not risk call-stack exhaustion.
MwEntry compute_mw(const std::vector<int>& key) {
    if (auto hit = mw_memo().find(key))
        return *hit;

    std::vector<std::vector<int>> stack{key};
    while (!stack.empty()) {
        const std::vector<int> cur = stack.back(); // copy: pushes reallocate
        if (mw_memo().find(cur)) {
            stack.pop_back();
            continue;
        }
        if (cur.size() <= 2) {
            mw_memo().insert(cur, mw_base_case(cur));
            stack.pop_back();
            continue;
        }
        auto children = child_keys(cur);
        bool ready = true;
        for (const auto& child : children) {
            if (!mw_memo().find(child)) {
                ready = false;
                stack.push_back(child); // cur stays below its pending children
            }
        }
        if (!ready)
            continue;
        Natural m_sum = 0;
        Natural w_sum = static_cast<int>(cur.size()) - 2;
        for (const auto& child : children) {
            MwEntry e = *mw_memo().find(child);
            m_sum += e.m;
            w_sum += e.w;
        }
        mw_memo().insert(cur, {std::move(m_sum), std::move(w_sum)});
        stack.pop_back();
    }
    return *mw_memo().find(key);
}

std::map<std::vector<int>, Natural>& php_memo() {
    static std::map<std::vector<int>, Natural> memo;
    return memo;
}
std::mutex php_mutex;

std::optional<Natural> php_find(const std::vector<int>& key) {
    std::lock_guard<std::mutex> lock(php_mutex);
    auto it = php_memo().find(key);
    if (it == php_memo().end())
        return std::nullopt;
    return it->second;
}

void php_insert(const std::vector<int>& key, Natural value) {
    std::lock_guard<std::mutex> lock(php_mutex);
    php_memo().emplace(key, std::move(value));
}

// Direct pigeonhole recursion, kept independent of the M/w route so the two
// can be checked against each other.
Natural compute_php(const std::vector<int>& key) {
    if (auto hit = php_find(key))
        return *hit;

    std::vector<std::vector<int>> stack{key};
    while (!stack.empty()) {
        const std::vector<int> cur = stack.back(); // copy: pushes reallocate
        if (php_find(cur)) {
            stack.pop_back();
            continue;
        }
        if (cur.empty()) {
            php_insert(cur, Natural(2));
            stack.pop_back();
            continue;
        }
        if (cur.size() == 1) {
            php_insert(cur, Natural(cur[0]));
            stack.pop_back();
            continue;
        }
        auto children = child_keys(cur);
        bool ready = true;
        for (const auto& child : children) {
            if (!php_find(child)) {
                ready = false;
                stack.push_back(child);
            }
        }
        if (!ready)
            continue;
        Natural sum = 0;
        for (const auto& child : children)
            sum += *php_find(child);
        sum -= static_cast<int>(cur.size()) - 2;
        php_insert(cur, std::move(sum));
        stack.pop_back();
    }
    return *php_find(key);
}

void require_formula_preconditions(const ColorSignature& sig) {
    if (sig.length() < 2)
        throw DomainError(DomainError::Kind::SignatureTooShort,
                          "need at least 2 entries, got " + std::to_string(sig.length()));
    for (int k : sig.targets())
        if (k < 3)
            throw DomainError(DomainError::Kind::EntryBelowThree,
                              "entries must be >= 3, got " + std::to_string(k));
}

} // namespace

Natural M(const ColorSignature& sig) { return compute_mw(sig.targets()).m; }

Natural w(const ColorSignature& sig) { return compute_mw(sig.targets()).w; }

Natural php_bound(const ColorSignature& sig) { return compute_php(sig.targets()); }

Natural M_formula(const ColorSignature& sig) {
    require_formula_preconditions(sig);
    const std::vector<int>& ks = sig.targets();
    const int r = sig.length();
    int sum_k = 0;
    for (int k : ks)
        sum_k += k;

    Natural total = 0;
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            if (i == j)
                continue;
            for (int m = 3; m <= ks[static_cast<std::size_t>(j)]; ++m) {
                std::vector<int> parts;
                parts.reserve(static_cast<std::size_t>(r));
                for (int t = 0; t < r; ++t) {
                    int base = ks[static_cast<std::size_t>(t)];
                    if (t == i)
                        parts.push_back(base - 3);
                    else if (t == j)
                        parts.push_back(base - m);
                    else
                        parts.push_back(base - 2);
                }
                total += m * multinomial(PartList(sum_k - 2 * r - m + 1, std::move(parts)));
            }
        }
    }
    return total;
}

namespace {

Natural stripped_multinomial(const std::vector<int>& ks) {
    std::vector<int> parts;
    parts.reserve(ks.size());
    int total = 0;
    for (int k : ks) {
        parts.push_back(k - 2);
        total += k - 2;
    }
    return multinomial(PartList(total, std::move(parts)));
}

} // namespace

ExactRational M_upper(const ColorSignature& sig) {
    require_formula_preconditions(sig);
    const std::vector<int>& ks = sig.targets();
    const int k1 = ks[0];
    const int k2 = ks[1]; // sorted non-increasing: the two largest
    ExactRational b(Natural(k1 + k2 - 2) * (k1 + k2 - 3),
                    Natural(k1 - 1) * (k2 - 1));
    return b * ExactRational(stripped_multinomial(ks));
}

Natural M_lower(const ColorSignature& sig) {
    require_formula_preconditions(sig);
    return 3 * stripped_multinomial(sig.targets());
}

Natural w3_exact(int r) {
    if (r < 2)
        throw DomainError(DomainError::Kind::RTooSmall, "w3_exact requires r >= 2");
    return 3 * factorial(r) - e0_scaled(r) - 1;
}

Natural w_lower_diag(int r, int k) {
    if (r < 2)
        throw DomainError(DomainError::Kind::RTooSmall, "w_lower_diag requires r >= 2");
    if (k < 3)
        throw DomainError(DomainError::Kind::KTooSmall, "w_lower_diag requires k >= 3");
    if (k == 3)
        return w3_exact(r);

    const Natural r_fact = factorial(r);

    // (r-2) * (e1_scaled(r) * (1 + r! + ... + r!^(k-4)) - r!^(k-3))
    Natural geometric = 0;
    Natural power = 1;
    for (int i = 0; i <= k - 4; ++i) {
        geometric += power;
        power *= r_fact;
    }
    Natural total = (r - 2) * (e1_scaled(r) * geometric - power);

    // Branch terms: paths depleting j coordinates to 2 and parking one at 4.
    for (int j = 0; j <= r - 3; ++j) {
        std::vector<int> parts;
        parts.reserve(static_cast<std::size_t>(r));
        for (int t = 0; t < j; ++t)
            parts.push_back(k - 2);
        for (int t = 0; t < r - j - 1; ++t)
            parts.push_back(k - 3);
        parts.push_back(k - 4);
        Natural count = binomial(r, j) * (r - j) *
                        multinomial(PartList(r * (k - 3) + j - 1, std::move(parts)));
        total += count * (r - j - 2 + w3_exact(r - j));
    }
    return total;
}

Natural classical_bound(std::span<const int> ks) {
    if (ks.empty())
        throw DomainError(DomainError::Kind::EmptyInput, "classical_bound needs entries");
    std::vector<int> parts;
    parts.reserve(ks.size());
    int total = 0;
    for (int k : ks) {
        if (k < 2)
            throw DomainError(DomainError::Kind::EntryBelowTwo,
                              "entries must be >= 2, got " + std::to_string(k));
        parts.push_back(k - 1);
        total += k - 1;
    }
    return multinomial(PartList(total, std::move(parts)));
}

Natural teravainen_bound(std::span<const int> ks) {
    if (ks.size() < 2)
        throw DomainError(DomainError::Kind::FewerThanTwoEntries,
                          "teravainen_bound needs at least 2 entries");
    std::vector<int> sorted(ks.begin(), ks.end());
    for (int k : sorted)
        if (k < 2)
            throw DomainError(DomainError::Kind::EntryBelowTwo,
                              "entries must be >= 2, got " + std::to_string(k));
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    std::vector<int> parts;
    parts.reserve(sorted.size());
    int total = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        int part = sorted[i] - (i < 2 ? 1 : 2);
        parts.push_back(part);
        total += part;
    }
    return multinomial(PartList(total, std::move(parts)));
}

ExactRational asympt_ratio(int r, int k) {
    if (r < 2)
        throw DomainError(DomainError::Kind::RTooSmall, "asympt_ratio requires r >= 2");
    if (k < 3)
        throw DomainError(DomainError::Kind::KTooSmall, "asympt_ratio requires k >= 3");
    Natural numerator = M(diagonal(r, k));
    Natural km2 = factorial(k - 2);
    for (int i = 0; i < r; ++i)
        numerator *= km2;
    return ExactRational(numerator, factorial(r * (k - 2)));
}

ExactRational ratio_bracket(int r) {
    if (r < 3)
        throw DomainError(DomainError::Kind::RTooSmall, "ratio_bracket requires r >= 3");
    return ExactRational(3) + ExactRational(3, r - 1) +
           ExactRational(r - 1, Natural(r - 2) * (r - 2));
}

AsymptConstants asympt_constants(int d) {
    if (d < 0)
        throw DomainError(DomainError::Kind::KTooSmall, "asympt_constants requires d >= 0");
    // Partial sum of e to 30 terms: error < 1/30! ~ 4e-33, far below the 12
    // rendered places. Report-only; exact computations never touch this.
    ExactRational e_approx = 0;
    ExactRational term = 1;
    for (int n = 1; n <= 30; ++n) {
        e_approx += term;
        term /= n;
    }
    ExactRational upper = (ExactRational(3) + e_approx) / 2;
    ExactRational waste = (ExactRational(3) - e_approx) / 2;
    ExactRational improved = upper - ExactRational(d, 48);
    return {to_decimal_string(upper, 12), to_decimal_string(waste, 12),
            to_decimal_string(improved, 12)};
}

Natural M_of(std::span<const int> ks) { return M(canonicalize(ks)); }
Natural w_of(std::span<const int> ks) { return w(canonicalize(ks)); }
Natural php_bound_of(std::span<const int> ks) { return php_bound(canonicalize(ks)); }

} // namespace ramsey
