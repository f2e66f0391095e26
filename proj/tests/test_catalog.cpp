#include <doctest.h>

#include <set>

#include "helix/catalog.hpp"
#include "helix/json_io.hpp"

using namespace helix;

TEST_CASE("reference table shape") {
    const auto& rows = reference_table();
    CHECK(rows.size() == 20);
    std::set<std::string> indices;
    for (const auto& r : rows) {
        indices.insert(r.index);
        CHECK(ThreeAdic::parse(r.index).order() == r.order);
    }
    CHECK(indices.size() == 20);
}

TEST_CASE("audit finds exactly the known ch2 misprints") {
    EpsilonMap eps;
    const auto rows = audit_table(eps);
    REQUIRE(rows.size() == 20);

    CHECK(audit_clean_outside_ch2(rows));

    std::set<std::string> ch2_rows;
    for (const auto& r : rows) {
        for (const auto& d : r.discrepancies) {
            CHECK(d.field == "ch2");
            ch2_rows.insert(r.rec.index.str());
        }
    }
    CHECK(ch2_rows == std::set<std::string>{"2/3", "5/9", "7/9", "8/27", "14/27", "16/27", "17/27"});

    // Every ch2 disagreement is certified against the resolutions and h^0.
    for (const auto& r : rows) {
        if (r.discrepancies.empty()) continue;
        bool certified = false;
        for (const auto& n : r.notes)
            if (n.find("certified by resolution additivity") != std::string::npos) certified = true;
        CHECK(certified);
    }
}

TEST_CASE("specific audited values") {
    EpsilonMap eps;
    const auto rows = audit_table(eps);
    auto find = [&](const std::string& label) -> const CatalogRow& {
        for (const auto& r : rows)
            if (r.printed->label == label) return r;
        throw std::runtime_error("row not found");
    };

    CHECK(find("T(-1)").discrepancies.empty());
    CHECK(find("E_{2/9}").discrepancies.empty());

    const CatalogRow& tv2 = find("T^v(2)");
    REQUIRE(tv2.discrepancies.size() == 1);
    CHECK(tv2.discrepancies[0].field == "ch2");
    CHECK(tv2.discrepancies[0].printed == "2");
    CHECK(tv2.discrepancies[0].computed == "0");

    const CatalogRow& e1859 = find("E_{18/59}");
    REQUIRE(e1859.discrepancies.size() == 1);
    CHECK(e1859.discrepancies[0].printed == "8");
    CHECK(e1859.discrepancies[0].computed == "-12");

    // The shifted-seating row still matches at helix level.
    const CatalogRow& e733 = find("E_{7/33}");
    CHECK(e733.discrepancies.empty());
    bool seating_note = false;
    for (const auto& n : e733.notes)
        if (n.find("shifted seating") != std::string::npos) seating_note = true;
    CHECK(seating_note);

    // The one row whose printed resolution omits its multiplicity.
    const CatalogRow& e140 = find("E_{140/219}");
    bool missing_mult_note = false;
    for (const auto& n : e140.notes)
        if (n.find("not printed; computed 74") != std::string::npos) missing_mult_note = true;
    CHECK(missing_mult_note);
}

TEST_CASE("audit renderings agree and are deterministic") {
    EpsilonMap eps;
    const auto rows = audit_table(eps);
    const std::string json = audit_to_json(rows);
    const std::string text = audit_to_text(rows);
    CHECK(json.find("\"clean_outside_ch2\": true") != std::string::npos);
    CHECK(text.find("rows with value discrepancies: 7/20") != std::string::npos);

    EpsilonMap eps2;
    CHECK(audit_to_json(audit_table(eps2)) == json);
    CHECK(audit_to_text(audit_table(eps2)) == text);
}

TEST_CASE("generated tables") {
    EpsilonMap eps;
    CHECK(generate_table(eps, 1, TableFormat::Json).find("\"1/3\"") != std::string::npos);

    // Row counts: 2, 8, 26 at orders 1, 2, 3.
    CHECK(enumerate_indices(1).size() == 2);
    CHECK(enumerate_indices(2).size() == 8);
    CHECK(enumerate_indices(3).size() == 26);

    const std::string csv = generate_table(eps, 2, TableFormat::Csv);
    size_t lines = 0;
    for (char c : csv)
        if (c == '\n') ++lines;
    CHECK(lines == 9);  // header + 8 rows
    CHECK(csv.rfind("index,order,slope,rank,", 0) == 0);
    CHECK(csv.find("wbn_i") != std::string::npos);

    const std::string md = generate_table(eps, 1, TableFormat::Markdown);
    CHECK(md.rfind("| index |", 0) == 0);

    // Determinism.
    EpsilonMap eps2;
    CHECK(generate_table(eps2, 2, TableFormat::Json) == generate_table(eps, 2, TableFormat::Json));
}

TEST_CASE("record json round trip") {
    EpsilonMap eps;
    for (const char* idx : {"1/9", "8/9", "13/27", "2"}) {
        const BundleRecord r = eps.record(ThreeAdic::parse(idx));
        const BundleRecord back = record_from_json(record_to_json(r));
        CHECK(back.index == r.index);
        CHECK(back.order == r.order);
        CHECK(back.ch == r.ch);
        CHECK(back.rank == r.rank);
        CHECK(back.slope == r.slope);
        CHECK(back.c == r.c);
        CHECK(back.chi == r.chi);
        CHECK(back.mark == r.mark);
        CHECK(back.foundation.entries() == r.foundation.entries());
        CHECK(back.foundation_indices == r.foundation_indices);
        CHECK(back.globally_generated == r.globally_generated);
        REQUIRE(back.resolutions.size() == r.resolutions.size());
        for (size_t i = 0; i < r.resolutions.size(); ++i) {
            CHECK(back.resolutions[i].sub == r.resolutions[i].sub);
            CHECK(back.resolutions[i].middle == r.resolutions[i].middle);
            CHECK(back.resolutions[i].quotient == r.resolutions[i].quotient);
            CHECK(back.resolutions[i].multiplicity == r.resolutions[i].multiplicity);
            CHECK(back.resolutions[i].orientation == r.resolutions[i].orientation);
        }
    }
}

TEST_CASE("chern character parsing forms") {
    CHECK(parse_chern("(3,1,-1/2,1/6)") ==
          ChernCharacter{Rational(3), Rational(1), Rational(-1, 2), Rational(1, 6)});
    CHECK(parse_chern(" ( 1 , 0 , 0 , 0 ) ") == ch_line(0));
    CHECK(parse_chern(R"(["3","1","-1/2","1/6"])") ==
          ChernCharacter{Rational(3), Rational(1), Rational(-1, 2), Rational(1, 6)});
    CHECK_THROWS_AS(parse_chern("(1,2,3)"), ParseError);
    CHECK_THROWS_AS(parse_chern("[1,2,3,4,5]"), ParseError);
    CHECK_THROWS_AS(parse_chern("nonsense"), ParseError);

    const std::string json = chern_to_json(ch_line(-1));
    CHECK(json == R"(["1","-1","1/2","-1/6"])");
    CHECK(parse_chern(json) == ch_line(-1));
}
