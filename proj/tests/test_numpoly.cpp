#include <doctest.h>

#include <random>

#include "ssi/io.hpp"
#include "ssi/numpoly.hpp"

using namespace ssi;

namespace {

NumPoly poly(const std::string& text) { return parsePolynomial(text); }

NumPoly randomPoly(std::mt19937& rng, int maxDegree) {
    std::uniform_int_distribution<int> deg(0, maxDegree);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rat> coeffs;
    int d = deg(rng);
    for (int k = 0; k <= d; ++k) {
        Rat c(num(rng), den(rng));
        c.canonicalize();
        coeffs.push_back(c);
    }
    return NumPoly(coeffs);
}

}  // namespace

TEST_CASE("evaluate") {
    CHECK(poly("4*t").evaluate(5) == Rat(20));
    CHECK(poly("0").evaluate(7) == Rat(0));
    CHECK(poly("t+6").evaluate(5) == Rat(11));
    CHECK(poly("(1/2)*t^2+(1/2)*t").evaluate(3) == Rat(6));
}

TEST_CASE("binomialPoly") {
    CHECK(binomialPoly(1, 1) == poly("t+1"));
    CHECK(binomialPoly(2, 2) == poly("(1/2)*t^2+(3/2)*t+1"));
    CHECK(binomialPoly(-3, 0) == poly("1"));
    CHECK_THROWS_AS(binomialPoly(0, -1), std::invalid_argument);
}

TEST_CASE("binomialPoly matches integer binomials and the vanishing window") {
    for (long e = -3; e <= 3; ++e)
        for (long c = 0; c <= 5; ++c) {
            NumPoly b = binomialPoly(e, c);
            for (long s = -e; s <= 8; ++s) {
                Rat value = b.evaluate(s);
                if (s + e >= c) {
                    CHECK(value == Rat(binomial(Int(s + e), static_cast<unsigned long>(c))));
                } else {
                    CHECK(value == 0);  // 0 <= s+e < c
                }
            }
        }
}

TEST_CASE("finiteDifference") {
    CHECK(finiteDifference(poly("t+6")) == poly("1"));
    CHECK(finiteDifference(poly("4*t")) == poly("4"));
    CHECK(finiteDifference(poly("4*t"), 2).isZero());
    CHECK(finiteDifference(poly("t^3"), 4).isZero());  // order above the degree
}

TEST_CASE("finiteDifference is linear and composes") {
    std::mt19937 rng(20240811);
    for (int iter = 0; iter < 50; ++iter) {
        NumPoly p = randomPoly(rng, 5);
        NumPoly q = randomPoly(rng, 5);
        CHECK(finiteDifference(p + q) == finiteDifference(p) + finiteDifference(q));
        CHECK(finiteDifference(finiteDifference(p, 2), 1) == finiteDifference(p, 3));
    }
}

TEST_CASE("difference of a binomial is the Pascal predecessor") {
    for (long e = -3; e <= 4; ++e)
        for (long c = 1; c <= 6; ++c)
            CHECK(finiteDifference(binomialPoly(e, c)) == binomialPoly(e - 1, c - 1));
}

TEST_CASE("degree and normalization") {
    CHECK(NumPoly().degree() == -1);
    CHECK(NumPoly(std::vector<Rat>{Rat(1), Rat(0), Rat(0)}).degree() == 0);
    CHECK(poly("t^2-t^2").isZero());
    CHECK(poly("t+6").degree() == 1);
    CHECK(finiteDifference(poly("t^2"), 1).degree() == 1);  // degree drops by exactly one
}
