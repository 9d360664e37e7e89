#include "ramsey/report.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "ramsey/oracles.hpp"

namespace ramsey {

std::optional<OutputFormat> parse_format(const std::string& name) {
    if (name == "markdown")
        return OutputFormat::Markdown;
    if (name == "csv")
        return OutputFormat::Csv;
    if (name == "json")
        return OutputFormat::Json;
    return std::nullopt;
}

namespace {

constexpr std::array<std::pair<int, int>, 6> kTableGrid{{
    {3, 4}, {4, 4}, {5, 4}, {3, 5}, {4, 5}, {3, 6},
}};

std::string render_m_upper(const ExactRational& q) {
    return to_fraction_string(q); // prints "p" when integral
}

} // namespace

BoundRow make_bound_row(std::span<const int> ks) {
    ColorSignature sig = canonicalize(ks);
    BoundRow row;
    row.r = static_cast<int>(ks.size());
    row.k = sig.is_diagonal() ? std::to_string(sig.targets().front()) : "-";

    row.m = M(sig).str();
    row.w = w(sig).str();
    row.php = php_bound(sig).str();

    if (sig.length() >= 2) {
        row.m_upper = render_m_upper(M_upper(sig));
        row.m_formula = M_formula(sig).str();
    } else {
        row.m_upper = "-";
        row.m_formula = "-";
    }
    if (sig.is_diagonal() && sig.length() >= 2)
        row.w_lower = w_lower_diag(sig.length(), sig.targets().front()).str();
    else
        row.w_lower = "-";

    row.classical = classical_bound(ks).str();
    row.teravainen = ks.size() >= 2 ? teravainen_bound(ks).str() : "-";
    return row;
}

std::vector<BoundRow> table_rows() {
    std::vector<BoundRow> rows;
    for (auto [r, k] : kTableGrid) {
        std::vector<int> ks(static_cast<std::size_t>(r), k);
        ColorSignature sig = canonicalize(ks);
        BoundRow row;
        row.r = r;
        row.k = std::to_string(k);
        row.m_upper = render_m_upper(M_upper(sig));
        row.m = M(sig).str();
        row.w_lower = w_lower_diag(r, k).str();
        row.w = w(sig).str();
        row.teravainen = teravainen_bound(ks).str();
        row.classical = classical_bound(ks).str();
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<RatioRow> ratio_rows(int r_max, int k) {
    if (r_max < 3)
        throw DomainError(DomainError::Kind::RTooSmall, "ratio requires r_max >= 3");
    if (k < 3)
        throw DomainError(DomainError::Kind::KTooSmall, "ratio requires k >= 3");
    std::vector<RatioRow> rows;
    for (int r = 3; r <= r_max; ++r) {
        ExactRational ratio = asympt_ratio(r, k);
        ExactRational bracket = ratio_bracket(r);
        rows.push_back({r, k, to_fraction_string(ratio), to_decimal_string(ratio, 12),
                        to_fraction_string(bracket), to_decimal_string(bracket, 12)});
    }
    return rows;
}

namespace {

std::vector<std::string> bound_header(bool verify_columns) {
    std::vector<std::string> h{"r", "k", "M_upper", "M", "w_lower", "w", "T", "C"};
    if (verify_columns) {
        h.push_back("php");
        h.push_back("M_formula");
    }
    return h;
}

std::vector<std::string> bound_cells(const BoundRow& row, bool verify_columns) {
    std::vector<std::string> cells{std::to_string(row.r), row.k,      row.m_upper,
                                   row.m,                 row.w_lower, row.w,
                                   row.teravainen,        row.classical};
    if (verify_columns) {
        cells.push_back(row.php);
        cells.push_back(row.m_formula);
    }
    return cells;
}

std::string render_csv_table(const std::vector<std::string>& header,
                             const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << row[i];
        out << '\n';
    }
    return out.str();
}

std::string render_markdown_table(const std::vector<std::string>& header,
                                  const std::vector<std::vector<std::string>>& rows) {
    // column widths for aligned pipes
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i)
        width[i] = header[i].size();
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());

    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& cells) {
        out << '|';
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out << ' ' << cells[i] << std::string(width[i] - cells[i].size(), ' ') << " |";
        }
        out << '\n';
    };
    emit(header);
    out << '|';
    for (std::size_t i = 0; i < header.size(); ++i)
        out << ' ' << std::string(width[i], '-') << " |";
    out << '\n';
    for (const auto& row : rows)
        emit(row);
    return out.str();
}

nlohmann::ordered_json json_object(const std::vector<std::string>& header,
                                   const std::vector<std::string>& cells) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == "r")
            obj[header[i]] = std::stoi(cells[i]);
        else
            obj[header[i]] = cells[i];
    }
    return obj;
}

} // namespace

std::string render_bounds(const std::vector<BoundRow>& rows, OutputFormat f,
                          bool verify_columns) {
    auto header = bound_header(verify_columns);
    std::vector<std::vector<std::string>> cells;
    cells.reserve(rows.size());
    for (const auto& row : rows)
        cells.push_back(bound_cells(row, verify_columns));

    switch (f) {
    case OutputFormat::Csv:
        return render_csv_table(header, cells);
    case OutputFormat::Markdown:
        return render_markdown_table(header, cells);
    case OutputFormat::Json: {
        nlohmann::ordered_json doc;
        doc["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : cells)
            doc["rows"].push_back(json_object(header, row));
        return doc.dump(2) + "\n";
    }
    }
    return {};
}

std::string render_ratio(const std::vector<RatioRow>& rows,
                         const AsymptConstants& constants, OutputFormat f) {
    std::vector<std::string> header{"r",       "k",       "ratio",
                                    "ratio_decimal", "bracket", "bracket_decimal"};
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : rows)
        cells.push_back({std::to_string(row.r), std::to_string(row.k), row.ratio,
                         row.ratio_decimal, row.bracket, row.bracket_decimal});

    switch (f) {
    case OutputFormat::Csv: {
        std::string out = render_csv_table(header, cells);
        out += "# upper_coeff=" + constants.upper_coeff + "\n";
        out += "# waste_coeff=" + constants.waste_coeff + "\n";
        out += "# improved_coeff=" + constants.improved_coeff + "\n";
        return out;
    }
    case OutputFormat::Markdown: {
        std::string out = render_markdown_table(header, cells);
        out += "\nconstants:\n";
        out += "  (3+e)/2          = " + constants.upper_coeff + "\n";
        out += "  (3-e)/2          = " + constants.waste_coeff + "\n";
        out += "  (3+e)/2 - d/48   = " + constants.improved_coeff + "\n";
        return out;
    }
    case OutputFormat::Json: {
        nlohmann::ordered_json doc;
        doc["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : cells)
            doc["rows"].push_back(json_object(header, row));
        doc["constants"] = {{"upper_coeff", constants.upper_coeff},
                            {"waste_coeff", constants.waste_coeff},
                            {"improved_coeff", constants.improved_coeff}};
        return doc.dump(2) + "\n";
    }
    }
    return {};
}

namespace {

// All compositions of every total 0..max_sum into `parts` nonnegative parts.
void for_each_composition(int parts, int max_sum,
                          const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> current(static_cast<std::size_t>(parts), 0);
    std::function<void(int, int)> rec = [&](int index, int remaining) {
        if (index == parts - 1) {
            for (int v = 0; v <= remaining; ++v) {
                current[static_cast<std::size_t>(index)] = v;
                fn(current);
            }
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            current[static_cast<std::size_t>(index)] = v;
            rec(index + 1, remaining - v);
        }
    };
    rec(0, max_sum);
}

} // namespace

bool verify_pigeonhole(std::ostream& out) {
    // Proposition check: php_check must hold on every composition. Quotas
    // range over {1,2,3}^r, sizes over all compositions with sum <= 20.
    std::uint64_t checked = 0;
    bool ok = true;
    for (int r = 1; r <= 4 && ok; ++r) {
        std::vector<int> quotas(static_cast<std::size_t>(r), 1);
        std::function<void(int)> quota_rec = [&](int qi) {
            if (!ok)
                return;
            if (qi == r) {
                for_each_composition(r, 20, [&](const std::vector<int>& sizes) {
                    if (!ok)
                        return;
                    ++checked;
                    if (!php_check(sizes, quotas)) {
                        out << "FAIL pigeonhole: sizes/quotas violate the principle\n";
                        ok = false;
                    }
                });
                return;
            }
            for (int q = 1; q <= 3; ++q) {
                quotas[static_cast<std::size_t>(qi)] = q;
                quota_rec(qi + 1);
            }
        };
        quota_rec(0);
    }
    out << (ok ? "PASS" : "FAIL") << " pigeonhole: " << checked
        << " compositions checked\n";
    return ok;
}

bool verify_oracle(std::ostream& out) {
    // naive (un-memoized, unsorted) recursion vs the memoized engine on all
    // ordered tuples with entries in [2,5], length <= 4, sum(k-2) <= 8.
    std::uint64_t checked = 0;
    bool ok = true;
    std::vector<int> tuple;
    std::function<void(int)> rec = [&](int remaining_len) {
        if (!ok)
            return;
        if (!tuple.empty()) {
            int excess = 0;
            for (int k : tuple)
                excess += k - 2;
            if (excess <= 8) {
                auto [nm, nw] = naive_M_w(tuple);
                if (nm != M_of(tuple) || nw != w_of(tuple) ||
                    nm - nw != php_bound_of(tuple)) {
                    out << "FAIL oracle: disagreement on tuple";
                    for (int k : tuple)
                        out << ' ' << k;
                    out << '\n';
                    ok = false;
                    return;
                }
                ++checked;
            }
        }
        if (remaining_len == 0)
            return;
        for (int k = 2; k <= 5; ++k) {
            tuple.push_back(k);
            rec(remaining_len - 1);
            tuple.pop_back();
        }
    };
    rec(4);
    out << (ok ? "PASS" : "FAIL") << " oracle: " << checked
        << " tuples agree with the reference recursion\n";
    return ok;
}

bool verify_search(std::ostream& out, std::uint64_t budget, bool force) {
    bool ok = true;
    const std::array<int, 2> targets{3, 3};
    int least_forced = -1;
    for (int n = 2; n <= 6; ++n) {
        Natural space = 1;
        for (int e = 0; e < EdgeColoring::edge_count(n); ++e)
            space *= 2;
        if (space > budget && !force) {
            out << "FAIL search: K_" << n << " space " << space.str()
                << " exceeds budget " << budget << " (use --force to override)\n";
            return false;
        }
        SearchOutcome outcome = ramsey_witness_search(n, targets, budget);
        if (outcome.kind == SearchKind::Witness) {
            out << "PASS search: n=" << n << " witness " << outcome.witness->serialize()
                << " (" << outcome.colorings_examined << " placements)\n";
            if (n == 6) {
                out << "FAIL search: expected Forced at n=6\n";
                ok = false;
            }
        } else if (outcome.kind == SearchKind::Forced) {
            out << "PASS search: n=" << n << " forced ("
                << outcome.colorings_examined << " placements)\n";
            if (least_forced < 0)
                least_forced = n;
            if (n < 6) {
                out << "FAIL search: unexpected Forced below n=6\n";
                ok = false;
            }
        } else {
            out << "FAIL search: n=" << n << " exceeded budget " << budget << "\n";
            ok = false;
        }
    }
    // Scanning upward: the least forced n is the Ramsey number, and the
    // pigeonhole bound must sit at or above it. Here both are 6.
    if (least_forced != 6 || php_bound_of(targets) != 6) {
        out << "FAIL search: least forced n disagrees with the bound\n";
        ok = false;
    } else {
        out << "PASS search: least forced n = 6 <= php bound 6\n";
    }
    return ok;
}

bool verify_all(std::ostream& out, std::uint64_t budget, bool force) {
    bool a = verify_pigeonhole(out);
    bool b = verify_oracle(out);
    bool c = verify_search(out, budget, force);
    return a && b && c;
}

} // namespace ramsey
