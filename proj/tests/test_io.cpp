#include <doctest.h>

#include <json.hpp>

#include "ssi/hilbert.hpp"
#include "ssi/io.hpp"
#include "support/builders.hpp"

using namespace ssi;
using ssi::test::ideal;
using ssi::test::mono;

TEST_CASE("polynomial parsing") {
    CHECK(parsePolynomial("4*t") == NumPoly(std::vector<Rat>{Rat(0), Rat(4)}));
    CHECK(parsePolynomial("t^2+3*t-1") ==
          NumPoly(std::vector<Rat>{Rat(-1), Rat(3), Rat(1)}));
    CHECK(parsePolynomial("(1/2)*t^2+(1/2)*t") ==
          NumPoly(std::vector<Rat>{Rat(0), Rat(1, 2), Rat(1, 2)}));
    CHECK(parsePolynomial(" t + 6 ") == parsePolynomial("t+6"));
    CHECK(parsePolynomial("-t+6") == parsePolynomial("6-t"));
    CHECK(parsePolynomial("(t+1)*(t+2)") == parsePolynomial("t^2+3*t+2"));
    CHECK(parsePolynomial("0").isZero());
    CHECK(parsePolynomial("1/2") == NumPoly(Rat(1, 2)));

    CHECK_THROWS_AS(parsePolynomial("4t"), ParseError);
    CHECK_THROWS_AS(parsePolynomial("t^"), ParseError);
    CHECK_THROWS_AS(parsePolynomial("x+1"), ParseError);
    CHECK_THROWS_AS(parsePolynomial("(t+1"), ParseError);
    CHECK_THROWS_AS(parsePolynomial("1/0"), ParseError);
    CHECK_THROWS_AS(parsePolynomial(""), ParseError);
    CHECK_THROWS_AS(parsePolynomial("t^999999"), ParseError);
}

TEST_CASE("polynomial printing round-trips") {
    for (const char* text : {"0", "1", "-1", "4*t", "t+6", "t^2+3*t-1", "-t^2+2",
                             "(1/2)*t^2+(1/2)*t", "t^3-(2/3)*t", "7"}) {
        NumPoly p = parsePolynomial(text);
        CHECK(parsePolynomial(polynomialToString(p)) == p);
    }
    CHECK(polynomialToString(parsePolynomial("4*t")) == "4*t");
    CHECK(polynomialToString(parsePolynomial("t+6")) == "t+6");
    CHECK(polynomialToString(parsePolynomial("(1/2)*t^2+(1/2)*t")) == "(1/2)*t^2+(1/2)*t");
    CHECK(polynomialToString(NumPoly()) == "0");
}

TEST_CASE("monomial and ideal text") {
    auto names = defaultVariableNames(3);
    CHECK(parseMonomial("x2^2*x1", names) == mono(3, "x2^2*x1"));
    CHECK(parseMonomial("1", names) == Monomial::one(3));
    CHECK(parseMonomial("x1 * x1", names) == mono(3, "x1^2"));
    CHECK(monomialToString(mono(3, "x2^2*x1"), names) == "x2^2*x1");
    CHECK(monomialToString(Monomial::one(3), names) == "1");

    CHECK_THROWS_AS(parseMonomial("y", names), ParseError);
    CHECK_THROWS_AS(parseMonomial("x2^^2", names), ParseError);
    CHECK_THROWS_AS(parseMonomial("", names), ParseError);

    auto i = ideal(3, "x2^3, x2^2*x1, x2*x1^4");
    CHECK(idealToString(i, names) == "(x2^3, x2^2*x1, x2*x1^4)");
    CHECK(parseGenerators("(x2^3, x2^2*x1, x2*x1^4)", names) == i.generators());
    CHECK(parseGenerators("", names).empty());
    CHECK(parseGenerators("()", names).empty());
}

TEST_CASE("custom display names map the smallest variable to index 0") {
    std::vector<std::string> names{"w", "z", "y", "x"};
    auto lex = lexIdeal(parsePolynomial("4*t"), 3);
    CHECK(idealToString(lex, names) == "(x, y^5, y^4*z^2)");
    CHECK(StronglyStableIdeal::fromGenerators(4, parseGenerators("y^4*z^2, y^5, x", names)) ==
          lex);
    CHECK_THROWS_AS(validateVariableNames({"a", "a"}), ParseError);
    CHECK_THROWS_AS(validateVariableNames({"a b"}), ParseError);
}

TEST_CASE("ideal JSON round-trips byte-identically") {
    auto i = ideal(4, "x3, x2^5, x2^4*x1^2");
    auto j = idealToJson(i);
    std::string bytes = j.dump();
    auto reparsed = idealFromJson(nlohmann::ordered_json::parse(bytes));
    CHECK(reparsed == i);
    CHECK(idealToJson(reparsed).dump() == bytes);
    CHECK(bytes == R"({"arity":4,"generators":[[0,0,0,1],[0,0,5,0],[0,2,4,0]]})");

    CHECK_THROWS_AS(idealFromJson(nlohmann::ordered_json::parse(R"({"arity":3})")), ParseError);
    CHECK_THROWS_AS(
        idealFromJson(nlohmann::ordered_json::parse(R"({"arity":3,"generators":[[1]]})")),
        ParseError);
}
