#include <doctest.h>

#include <sstream>
#include <vector>

#include <json.hpp>

#include "ramsey/report.hpp"

using namespace ramsey;

TEST_CASE("format names parse") {
    CHECK(parse_format("csv") == OutputFormat::Csv);
    CHECK(parse_format("markdown") == OutputFormat::Markdown);
    CHECK(parse_format("json") == OutputFormat::Json);
    CHECK_FALSE(parse_format("yaml").has_value());
}

TEST_CASE("bound row for the three-color diagonal") {
    BoundRow row = make_bound_row(std::vector<int>{4, 4, 4});
    CHECK(row.r == 3);
    CHECK(row.k == "4");
    CHECK(row.m_upper == "300");
    CHECK(row.m == "288");
    CHECK(row.w_lower == "16");
    CHECK(row.w == "16");
    CHECK(row.teravainen == "560");
    CHECK(row.classical == "1680");
    CHECK(row.php == "272");
    CHECK(row.m_formula == "288");
}

TEST_CASE("bound row for two colors") {
    BoundRow row = make_bound_row(std::vector<int>{3, 3});
    CHECK(row.m == "6");
    CHECK(row.w == "0");
    CHECK(row.php == "6");
    CHECK(row.w_lower == "0"); // diagonal, k = 3
}

TEST_CASE("bound row for a mixed signature") {
    BoundRow row = make_bound_row(std::vector<int>{5, 4, 3});
    CHECK(row.k == "-");
    CHECK(row.w_lower == "-");
    CHECK(row.m == row.m_formula); // verify column agrees
}

TEST_CASE("bound row strips twos before the canonical columns") {
    BoundRow row = make_bound_row(std::vector<int>{4, 2, 4, 4, 2});
    CHECK(row.r == 5);
    CHECK(row.k == "4");
    CHECK(row.m == "288");
    CHECK(row.w == "16");
    CHECK(row.w_lower == "16");
    CHECK(row.php == "272");
}

TEST_CASE("table rows reproduce the computed bound columns") {
    auto rows = table_rows();
    REQUIRE(rows.size() == 6);
    auto cells = [](const BoundRow& r) {
        return std::vector<std::string>{r.m_upper, r.m, r.w_lower, r.w, r.teravainen,
                                        r.classical};
    };
    CHECK(cells(rows[0]) == std::vector<std::string>{"300", "288", "16", "16", "560", "1680"});
    CHECK(cells(rows[1]) ==
          std::vector<std::string>{"8400", "7920", "514", "554", "25200", "369600"});
    CHECK(cells(rows[2]) == std::vector<std::string>{"378000", "352800", "24978", "26788",
                                                     "1663200", "168168000"});
    CHECK(cells(rows[3]) ==
          std::vector<std::string>{"5880", "5520", "214", "271", "11550", "34650"});
    CHECK(cells(rows[4]) == std::vector<std::string>{"1293600", "1182720", "61378", "75022",
                                                     "4204200", "63063000"});
    CHECK(cells(rows[5]) == std::vector<std::string>{"124740", "115500", "3574", "5248",
                                                     "252252", "756756"});
}

TEST_CASE("csv rendering is clean and deterministic") {
    std::string csv = render_bounds(table_rows(), OutputFormat::Csv, false);
    CHECK(csv.substr(0, csv.find('\n')) == "r,k,M_upper,M,w_lower,w,T,C");
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(csv.find(" \n") == std::string::npos);
    CHECK(csv.back() == '\n');
    CHECK(csv == render_bounds(table_rows(), OutputFormat::Csv, false));

    std::string first_row = csv.substr(csv.find('\n') + 1);
    CHECK(first_row.substr(0, first_row.find('\n')) == "3,4,300,288,16,16,560,1680");
}

TEST_CASE("markdown rendering carries the same column order") {
    std::string md = render_bounds(table_rows(), OutputFormat::Markdown, false);
    CHECK(md.find("| r | k | M_upper") == 0);
    CHECK(md.find("288") != std::string::npos);
}

TEST_CASE("json output uses decimal strings and round-trips") {
    std::string text = render_bounds(table_rows(), OutputFormat::Json, false);
    auto doc = nlohmann::ordered_json::parse(text);
    REQUIRE(doc["rows"].size() == 6);
    CHECK(doc["rows"][0]["M"].is_string());
    CHECK(doc["rows"][0]["M"] == "288");
    CHECK(doc["rows"][2]["C"] == "168168000");
    CHECK(doc.dump(2) + "\n" == text); // parse then re-serialize is identity

    std::string bound_text =
        render_bounds({make_bound_row(std::vector<int>{4, 4, 4})}, OutputFormat::Json, true);
    auto bound_doc = nlohmann::ordered_json::parse(bound_text);
    CHECK(bound_doc["rows"][0]["php"] == "272");
    CHECK(bound_doc.dump(2) + "\n" == bound_text);
}

TEST_CASE("ratio report") {
    auto rows = ratio_rows(6, 3);
    REQUIRE(rows.size() == 4);
    for (const auto& row : rows) {
        CHECK(row.ratio == "3");
        CHECK(row.ratio_decimal == "3.000000000000");
    }

    auto r34 = ratio_rows(3, 4);
    REQUIRE(r34.size() == 1);
    CHECK(r34[0].ratio == "16/5");
    CHECK(r34[0].ratio_decimal == "3.200000000000");
    CHECK(r34[0].bracket == "13/2");
    CHECK(r34[0].bracket_decimal == "6.500000000000");

    std::string md = render_ratio(r34, asympt_constants(4), OutputFormat::Markdown);
    CHECK(md.find("2.775807580896") != std::string::npos);

    std::string json_text = render_ratio(r34, asympt_constants(4), OutputFormat::Json);
    auto doc = nlohmann::ordered_json::parse(json_text);
    CHECK(doc["constants"]["waste_coeff"] == "0.140859085770");
    CHECK(doc.dump(2) + "\n" == json_text);
}

TEST_CASE("verification suites pass") {
    std::ostringstream sink;
    CHECK(verify_pigeonhole(sink));
    CHECK(verify_oracle(sink));
    CHECK(verify_search(sink, std::uint64_t(1) << 25, false));
    CHECK(sink.str().find("FAIL") == std::string::npos);
}

TEST_CASE("search suite refuses oversized spaces without force") {
    std::ostringstream sink;
    CHECK_FALSE(verify_search(sink, 64, false)); // K_5 space 2^10 > 64
    CHECK(sink.str().find("exceeds budget") != std::string::npos);
}
