#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramsey/bounds.hpp"

namespace ramsey {

enum class OutputFormat { Markdown, Csv, Json };

std::optional<OutputFormat> parse_format(const std::string& name);

// One rendered row. All integer values are full decimal strings; absent
// values (non-diagonal waste bound, degenerate formula inputs) are "-".
struct BoundRow {
    int r = 0;                  // number of colors as asked
    std::string k;              // common target when the input is diagonal, else "-"
    std::string m_upper;        // integer or "p/q"
    std::string m;
    std::string w_lower;
    std::string w;
    std::string teravainen;
    std::string classical;
    std::string php;            // bound rows only
    std::string m_formula;      // bound rows only; cross-check of m
};

// Row for an arbitrary pre-canonical signature (entries >= 2), with the php
// and M_formula verification columns filled in.
BoundRow make_bound_row(std::span<const int> ks);

// The six fixed diagonal rows (3,4),(4,4),(5,4),(3,5),(4,5),(3,6).
std::vector<BoundRow> table_rows();

struct RatioRow {
    int r = 0;
    int k = 0;
    std::string ratio;          // exact fraction, lowest terms
    std::string ratio_decimal;  // 12 places
    std::string bracket;        // 3 + 3/(r-1) + (r-1)/(r-2)^2 as a fraction
    std::string bracket_decimal;
};

std::vector<RatioRow> ratio_rows(int r_max, int k);

// Rendering. Table and bound documents share the fixed column order
// r,k,M_upper,M,w_lower,w,T,C (bound rows append php and M_formula).
std::string render_bounds(const std::vector<BoundRow>& rows, OutputFormat f,
                          bool verify_columns);
std::string render_ratio(const std::vector<RatioRow>& rows,
                         const AsymptConstants& constants, OutputFormat f);

// Verification suites behind `verify`. Each returns true on success and
// appends one human-readable line per check to `out`.
bool verify_pigeonhole(std::ostream& out);
bool verify_oracle(std::ostream& out);
bool verify_search(std::ostream& out, std::uint64_t budget, bool force);
bool verify_all(std::ostream& out, std::uint64_t budget, bool force);

} // namespace ramsey
