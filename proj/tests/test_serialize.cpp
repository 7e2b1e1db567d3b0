#include <mder/serialize.hpp>

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mder;
using mder::testing::poly;

TEST(PolynomialRecord, Format) {
    EXPECT_EQ(to_json(poly({0, 1})).dump(), R"({"coeffs":["0","1"],"variable":"a"})");
    EXPECT_EQ(to_json(AlphaPolynomial{}).dump(), R"({"coeffs":[],"variable":"a"})");
    EXPECT_EQ(to_json(poly({-5, 0, 3}))["coeffs"], json::parse(R"(["-5","0","3"])"));
}

TEST(PolynomialRecord, RoundTripRandomized) {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = mder::testing::random_poly(rng, 10, 300);
        const std::string text = to_json(p).dump();
        EXPECT_EQ(polynomial_from_json(json::parse(text)), p);
    }
}

TEST(PolynomialRecord, Parsing) {
    EXPECT_EQ(polynomial_from_json(json::parse(R"({"variable":"a","coeffs":["+2","-3"]})")), poly({2, -3}));
    EXPECT_EQ(polynomial_from_json(json::parse(R"({"coeffs":[1, 2]})")), poly({1, 2}));
    EXPECT_THROW(polynomial_from_json(json::parse(R"({"coeffs":["1","0"]})")), schema_error);
    EXPECT_THROW(polynomial_from_json(json::parse(R"({"coeffs":["1e5"]})")), schema_error);
    EXPECT_THROW(polynomial_from_json(json::parse(R"({"coeffs":["-"]})")), schema_error);
    EXPECT_THROW(polynomial_from_json(json::parse(R"({"coeffs":[1.5]})")), schema_error);
    EXPECT_THROW(polynomial_from_json(json::parse(R"({"variable":"x","coeffs":[]})")), schema_error);
    EXPECT_THROW(polynomial_from_json(json::parse(R"({"coefs":[]})")), schema_error);
}

TEST(OperatorRecord, BuiltinLayout) {
    const json j = to_json(builtin_operator(1));
    EXPECT_EQ(j["order"], 2);
    EXPECT_EQ(j["valid_from"], 0);
    EXPECT_EQ(j["version"], operator_schema_version);
    // c_0 = -a - n a, monomials sorted by (p, q)
    EXPECT_EQ(j["coeffs"][0], json::parse(R"([[0,1,"-1"],[1,1,"-1"]])"));
    EXPECT_EQ(j["coeffs"][1], json::parse(R"([[0,0,"-1"],[1,0,"-1"]])"));
    EXPECT_EQ(j["coeffs"][2], json::parse(R"([[0,0,"1"]])"));
}

TEST(OperatorRecord, RoundTrip) {
    for (std::size_t k : {1u, 2u}) {
        const auto op = builtin_operator(k);
        EXPECT_EQ(operator_from_json(json::parse(to_json(op).dump())), op);
    }
}

TEST(OperatorRecord, NormalizesOnLoad) {
    const auto op = operator_from_json(json::parse(R"({"order":1,"valid_from":0,"coeffs":[[[0,0,"2"]],[[0,0,"-2"]]]})"));
    EXPECT_EQ(op, make_operator({-1, 1}));
}

TEST(OperatorRecord, SchemaErrors) {
    EXPECT_THROW(operator_from_json(json::parse(R"({"valid_from":0,"coeffs":[[],[]]})")), schema_error);
    EXPECT_THROW(operator_from_json(json::parse(R"({"order":2,"valid_from":0,"coeffs":[[],[[0,0,"1"]]]})")), schema_error);
    EXPECT_THROW(operator_from_json(json::parse(R"({"order":1,"valid_from":0,"coeffs":[[[0,0,"1"]],[]]})")), schema_error);
    EXPECT_THROW(operator_from_json(json::parse(R"({"order":1,"valid_from":-1,"coeffs":[[],[[0,0,"1"]]]})")), schema_error);
    EXPECT_THROW(operator_from_json(json::parse(R"({"order":1,"valid_from":0,"coeffs":[[[0,"1"]],[[0,0,"1"]]]})")), schema_error);
    EXPECT_THROW(operator_from_json(json::parse(R"({"version":9,"order":1,"valid_from":0,"coeffs":[[],[[0,0,"1"]]]})")), schema_error);
    try {
        operator_from_json(json::parse(R"({"order":1,"valid_from":0,"coeffs":[[[0,0,"x"]],[[0,0,"1"]]]})"), "op.json");
        FAIL();
    } catch (const schema_error& e) {
        EXPECT_NE(std::string(e.what()).find("op.json.coeffs[0][0][2]"), std::string::npos) << e.what();
    }
}

TEST(SequenceRecord, RoundTripAndBareValues) {
    PolySequence s{2, 3, {poly({0, 2, 2}), AlphaPolynomial{}, poly({7})}};
    EXPECT_EQ(sequence_from_json(json::parse(to_json(s).dump())), s);
    const auto bare = sequence_from_json(json::parse(R"({"values":["1", 1, {"coeffs":["1"]}]})"));
    EXPECT_EQ(bare.start, 0u);
    EXPECT_EQ(bare.values, (std::vector<AlphaPolynomial>(3, poly({1}))));
}

TEST(JsonText, ParseErrorsReportOffset) {
    EXPECT_THROW(parse_json_text("{\"order\": 1,"), parse_error);
}
