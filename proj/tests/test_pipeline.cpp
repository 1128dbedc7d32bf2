#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "fakelines/errors.hpp"
#include "fakelines/pipeline.hpp"
#include "test_support.hpp"

using namespace fakelines;
using fakelines::testing::field;

TEST_SUITE("pipeline")
{
    TEST_CASE("bundled tables")
    {
        auto dir = bundled_data_dir();
        CHECK(load_field_file(dir + "/quartic.txt").size() == 15);
        CHECK(load_field_file(dir + "/quintic.txt").size() == 5);
        CHECK(load_field_file(dir + "/sextic.txt").size() == 27);
        auto rows = load_bundled();
        CHECK(rows.size() == 47);
        CHECK_NOTHROW(make_contexts(rows));
        auto it = std::find_if(rows.begin(), rows.end(), [](const auto &r) { return r.d_k == 2225; });
        REQUIRE(it != rows.end());
        CHECK_FALSE(it->tag);
        REQUIRE(it->overrides.count(2));
        CHECK(it->overrides.at(2) == std::vector<std::pair<int, int>>{{1, 2}, {1, 2}});
    }

    TEST_CASE("parse errors carry line numbers")
    {
        std::istringstream bad("# header\n4;725;1,1,-3,-1,1\n4;2000;5,0,-5,1\n");
        try
        {
            load_field_table(bad, "t");
            FAIL("expected ParseError");
        }
        catch (const ParseError &e)
        {
            CHECK(std::string(e.what()).find("t:3") != std::string::npos);
        }
        std::istringstream junk("4;x;1,1,-3,-1,1\n");
        CHECK_THROWS_AS(load_field_table(junk), ParseError);
        std::istringstream over("4;2225;4,2,-5,-1,1;;2:(1,2)(1,2)\n");
        CHECK_THROWS_AS(load_field_table(over), ParseError);
        std::istringstream tag("4;2000;5,0,-5,0,1;20\n");
        CHECK(*load_field_table(tag).front().tag == 20);
    }

    TEST_CASE("row validation")
    {
        std::istringstream wrong_disc("4;2001;5,0,-5,0,1\n");
        auto rows = load_field_table(wrong_disc);
        CHECK_THROWS_AS(make_context(rows.front()), ValidationError);
        std::istringstream not_monic("4;2000;5,0,-5,0,2\n");
        rows = load_field_table(not_monic);
        CHECK_THROWS_AS(make_context(rows.front()), ValidationError);
        std::istringstream bad_override("4;2000;5,0,-5,0,1;;3:(1,1)\n");
        rows = load_field_table(bad_override);
        CHECK_THROWS_AS(make_context(rows.front()), ValidationError);
        CHECK_THROWS_AS(load_field_file("/nonexistent/table.txt"), ValidationError);
    }

    TEST_CASE("integrality filter")
    {
        CHECK(volume_budget(field(725), 4) == 60);
        CHECK(integrality_filter(field(725), 4));
        CHECK(volume_budget(field(38569), 4) == 6);
        CHECK(integrality_filter(field(38569), 4));
        CHECK_FALSE(integrality_filter(field(300125), 4));
        CHECK_FALSE(excluded_by_root_disc(field(1528713).K()));
    }

    TEST_CASE("sextic search")
    {
        std::vector<FieldContext> one{field(453789)};
        CHECK(enumerate_n6(one).empty());

        // two norm-2 ideals and zeta forced to 1
        FieldContext fake = field(453789);
        FieldTableRow row = fake.row;
        row.overrides[2] = {{1, 1}, {1, 1}, {1, 2}, {1, 2}};
        FieldContext ctl = make_context(row);
        ctl.zeta = fake.zeta;
        ctl.zeta->zeta_minus1 = 1;
        auto hits = enumerate_n6({ctl});
        REQUIRE_FALSE(hits.empty());
        CHECK(hits.front().ram.size() == 2);
        CHECK(hits.front().euler == 2);
    }

    TEST_CASE("candidate enumeration on a small table")
    {
        std::vector<FieldContext> fields{field(725), field(1957), field(2000), field(38569)};
        auto rows = enumerate_candidates(fields, 4);
        std::vector<std::string> keys;
        for (const auto &r : rows)
            keys.push_back(r.d_k.get_str() + ":" + ideal_list(r.ram, ","));
        CHECK(keys == std::vector<std::string>{"1957:3^1,7^1", "2000:2^2,5^1", "38569:7^1"});
        for (const auto &r : rows)
        {
            CHECK(r.analytic.contains(r.euler));
            CHECK(r.euler * r.required_index == 16);
        }
    }

    TEST_CASE("emission is deterministic and well formed")
    {
        std::vector<FieldContext> fields{field(2000), field(725), field(38569)};
        auto rows = enumerate_candidates(fields, 4);
        for (Format f : {Format::human, Format::csv, Format::md, Format::jsonl})
        {
            std::ostringstream a, b;
            emit_candidates(a, rows, f);
            emit_candidates(b, std::vector<CandidateRow>(rows.rbegin(), rows.rend()), f);
            CHECK(a.str() == b.str());
            std::ostringstream t1, t2;
            emit_field_table(t1, fields, f);
            emit_field_table(t2, {fields[2], fields[0], fields[1]}, f);
            CHECK(t1.str() == t2.str());
        }
        std::ostringstream js;
        emit_candidates(js, rows, Format::jsonl);
        std::istringstream lines(js.str());
        std::string line;
        int n = 0;
        while (std::getline(lines, line))
        {
            auto j = nlohmann::json::parse(line);
            for (const char *key : {"degree", "d_k", "zeta_m1", "d_A", "euler", "index", "verdict"})
                CHECK(j.contains(key));
            CHECK(j["zeta_m1"].get<std::string>().find('/') != std::string::npos);
            ++n;
        }
        CHECK(n == static_cast<int>(rows.size()));
        std::ostringstream md;
        emit_field_table(md, fields, Format::md);
        CHECK(md.str().rfind("| degree |", 0) == 0);
        CHECK(csv_quote("a,b") == "\"a,b\"");
        CHECK(csv_quote("say \"hi\"") == "\"say \"\"hi\"\"\"");
        CHECK(csv_quote("plain") == "plain");
        CHECK(parse_format("markdown") == Format::md);
        CHECK_THROWS_AS(parse_format("xml"), ValidationError);
    }
}
