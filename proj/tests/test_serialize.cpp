#include "dqs/serialize.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace dqs;

TEST_CASE("rational parse and format") {
    CHECK(format_rational(parse_rational("1/2")) == "1/2");
    CHECK(format_rational(parse_rational("2/4")) == "1/2");
    CHECK(format_rational(parse_rational("3")) == "3/1");
    CHECK(format_rational(parse_rational("-1/3")) == "-1/3");
    CHECK(mod1(parse_rational("-1/3")) == Rat(2, 3));
    CHECK_THROWS_AS(parse_rational("x"), parse_error);
    CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
    CHECK_THROWS_AS(parse_rational(""), parse_error);
}

TEST_CASE("fusion vector text form") {
    auto g = parse_group_spec("SU(2)");
    FusionVector v = tensor_decompose(g, parse_label(g, "1"), parse_label(g, "1"));
    CHECK(format_fusion_vector(v) == "1*[0] + 1*[2]");
    CHECK(format_fusion_vector(FusionVector{}) == "0");

    auto prod = parse_group_spec("SU(3)xSU(2)");
    FusionVector w =
        tensor_decompose(prod, parse_label(prod, "1,0;1"), parse_label(prod, "0,1;1"));
    CHECK(format_fusion_vector(w) == "1*[0,0;0] + 1*[0,0;2] + 1*[1,1;0] + 1*[1,1;2]");
}

TEST_CASE("explicit set JSON round trip") {
    auto g = parse_group_spec("SU(2)");
    CenterData cd = center_group(g);
    CentralCharacter odd = central_character(cd, parse_label(g, "1"));
    SubgroupDatum d = make_datum(g, {0}, {TorusElement{{Rat(1, 2)}}}, {odd},
                                 {TorusElement{{Rat(1, 4)}}});
    ExplicitSet set = realize(d, 4);
    Json j = explicit_set_json(set);
    ExplicitSet back = explicit_set_from_json(j);
    CHECK(back.group == set.group);
    CHECK(back.height_bound == set.height_bound);
    CHECK(back.pairs == set.pairs);
    // canonical: serializing twice gives identical text
    CHECK(explicit_set_json(back).dump() == j.dump());
}

TEST_CASE("datum JSON round trip on randomized data") {
    testing::DatumGenerator gen(7);
    for (const char* spec : {"SU(2)", "SU(3)", "SU(2)xSU(2)", "U(2)"}) {
        auto g = parse_group_spec(spec);
        for (int i = 0; i < 8; ++i) {
            SubgroupDatum d = gen.random_datum(g);
            Json j = datum_json(d);
            SubgroupDatum back = datum_from_json(j);
            CHECK_MESSAGE(back == d, spec << " iteration " << i << ": " << j.dump());
            CHECK(datum_json(back).dump() == j.dump());
        }
    }
}

TEST_CASE("verdict JSON lists violations with witnesses") {
    auto g = parse_group_spec("SU(2)");
    ExplicitSet set;
    set.group = g;
    set.height_bound = 6;
    set.pairs.insert({torus_zero(1), unit_label(g)});
    set.pairs.insert({torus_zero(1), parse_label(g, "1")});
    Json j = verdict_json(check_closure(set));
    CHECK(j.at("accepted") == false);
    CHECK(!j.at("violations").empty());
    bool saw = false;
    for (const auto& v : j.at("violations"))
        if (v.at("kind") == "product_closure")
            saw = true;
    CHECK(saw);
}

TEST_CASE("character JSON mixes residue arrays and plain integers") {
    auto g = parse_group_spec("SU(3)xU(2)");
    CenterData cd = center_group(g);
    CentralCharacter chi = central_character(cd, parse_label(g, "1,0;2,1"));
    Json j = character_json(cd, chi);
    REQUIRE(j.is_array());
    CHECK(j[0].is_array());
    CHECK(j[1].is_number());
    CHECK(j[1].get<long long>() == 3);
    CHECK(character_from_json(j, cd) == chi);
}

TEST_CASE("torus element text form") {
    TorusElement t{{Rat(1, 2), Rat(0)}};
    CHECK(format_torus_element(t) == "1/2,0/1");
    CHECK(parse_torus_element("1/2,0/1", 2) == t);
    CHECK(parse_torus_element("3/2,-1", 2) == (TorusElement{{Rat(1, 2), Rat(0)}}));
    CHECK_THROWS_AS(parse_torus_element("1/2", 2), parse_error);
}
