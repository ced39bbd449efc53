#include <doctest.h>

#include <random>

#include "ssi/hilbert.hpp"
#include "ssi/io.hpp"

using namespace ssi;

namespace {

NumPoly poly(const std::string& text) { return parsePolynomial(text); }

std::vector<int> gotzmannTerms(const NumPoly& p) {
    auto res = gotzmannDecomposition(p);
    REQUIRE(std::holds_alternative<GotzmannDecomposition>(res));
    return std::get<GotzmannDecomposition>(res).terms;
}

// Non-increasing a-sequence with r <= maxTerms entries; every such sequence
// reconstructs to a valid Hilbert polynomial.
std::vector<int> randomTermSequence(std::mt19937& rng, int maxTerms, int maxDegree) {
    std::uniform_int_distribution<int> rDist(1, maxTerms);
    int r = rDist(rng);
    std::vector<int> terms;
    int cap = maxDegree;
    for (int i = 0; i < r; ++i) {
        std::uniform_int_distribution<int> step(0, cap);
        cap = step(rng);
        terms.push_back(cap);
    }
    return terms;
}

}  // namespace

TEST_CASE("gotzmannDecomposition on reference polynomials") {
    CHECK(gotzmannTerms(poly("4*t")) == std::vector<int>{1, 1, 1, 1, 0, 0});
    CHECK(gotzmannTerms(poly("1")) == std::vector<int>{0});
    CHECK(gotzmannTerms(poly("t+6")) == std::vector<int>{1, 0, 0, 0, 0, 0});

    auto bad = gotzmannDecomposition(poly("5*t-6"));
    REQUIRE(std::holds_alternative<GotzmannInvalid>(bad));
    CHECK(std::get<GotzmannInvalid>(bad).step > 0);
}

TEST_CASE("isHilbertPolynomial") {
    CHECK(isHilbertPolynomial(poly("4*t")));
    CHECK_FALSE(isHilbertPolynomial(poly("5*t-6")));
    CHECK(isHilbertPolynomial(poly("1")));
    CHECK(isHilbertPolynomial(NumPoly()));  // empty subscheme
}

TEST_CASE("isHilbertPolynomial terminates and rejects structurally bad inputs") {
    CHECK_FALSE(isHilbertPolynomial(poly("-1")));
    CHECK_FALSE(isHilbertPolynomial(poly("(1/2)")));
    CHECK_FALSE(isHilbertPolynomial(poly("-t^2+100*t")));
    CHECK_FALSE(isHilbertPolynomial(poly("(1/3)*t")));
    CHECK_FALSE(isHilbertPolynomial(poly("t")));
    std::mt19937 rng(77001);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 3);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<Rat> coeffs;
        std::uniform_int_distribution<int> deg(0, 4);
        int d = deg(rng);
        for (int k = 0; k <= d; ++k) {
            Rat c(num(rng), den(rng));
            c.canonicalize();
            coeffs.push_back(c);
        }
        // must return (either way) without hanging
        (void)isHilbertPolynomial(NumPoly(coeffs));
    }
}

TEST_CASE("gotzmannNumber") {
    CHECK(gotzmannNumber(poly("4*t")) == 6);
    CHECK(gotzmannNumber(poly("t+6")) == 6);
    CHECK(gotzmannNumber(poly("7")) == 7);
    CHECK(gotzmannNumber(NumPoly()) == 0);
    CHECK_THROWS_AS(gotzmannNumber(poly("5*t-6")), std::invalid_argument);
}

TEST_CASE("macaulayDecomposition") {
    CHECK(macaulayDecomposition(poly("4*t")).m == std::vector<long long>{6, 4});
    CHECK(macaulayDecomposition(poly("1")).m == std::vector<long long>{1});
    CHECK(macaulayDecomposition(poly("t+6")).m == std::vector<long long>{6, 1});
    CHECK_THROWS_AS(macaulayDecomposition(NumPoly()), std::invalid_argument);
    CHECK_THROWS_AS(macaulayDecomposition(poly("5*t-6")), std::invalid_argument);

    // four-summand structure for 4t: [C(t,1)-C(t-6,1)] + [C(t+1,2)-C(t-3,2)]
    NumPoly first = binomialPoly(0, 1) - binomialPoly(-6, 1);
    NumPoly second = binomialPoly(1, 2) - binomialPoly(-3, 2);
    CHECK(first == poly("6"));
    CHECK(second == poly("4*t-6"));
    CHECK(first + second == poly("4*t"));
}

TEST_CASE("random valid Hilbert polynomials round-trip the greedy decomposition") {
    std::mt19937 rng(424243);
    for (int iter = 0; iter < 50; ++iter) {
        auto terms = randomTermSequence(rng, 8, 4);
        GotzmannDecomposition dec{terms};
        NumPoly p = dec.reconstruct();
        REQUIRE(isHilbertPolynomial(p));
        CHECK(gotzmannTerms(p) == terms);
        CHECK(gotzmannNumber(p) == static_cast<long long>(terms.size()));
        if (!p.isZero()) {
            auto mac = macaulayDecomposition(p);
            CHECK(mac.m[0] == static_cast<long long>(terms.size()));  // m_0 = r
            CHECK(mac.reconstruct() == p);
        }
    }
}

TEST_CASE("growthVector on the worked examples") {
    auto gv = growthVector(poly("t+6"), 5, 2);
    REQUIRE(gv.has_value());
    CHECK(gv->entries == std::vector<long long>{5, 4, 1});

    gv = growthVector(poly("1"), 5, 1);
    REQUIRE(gv.has_value());
    CHECK(gv->entries == std::vector<long long>{4, 1});

    gv = growthVector(poly("4*t"), 4, 3);
    REQUIRE(gv.has_value());
    CHECK(gv->entries == std::vector<long long>{8, 6, 4, 1});
}

TEST_CASE("growthVector partial sums and infeasibility") {
    NumPoly p = poly("4*t");
    for (int n = 2; n <= 4; ++n)
        for (int s = 2; s <= 6; ++s) {
            auto gv = growthVector(p, s, n);
            if (!gv) continue;
            for (int i = 0; i <= n; ++i) {
                Int suffix = 0;
                for (int k = i; k <= n; ++k)
                    suffix += Int(static_cast<long>(gv->entries[(size_t)k]));
                Rat expected = Rat(binomial(Int(n + s - i), (unsigned long)(n - i))) -
                               finiteDifference(p, i).evaluate(s);
                CHECK(Rat(suffix) == expected);
            }
        }

    CHECK_FALSE(growthVector(poly("4*t"), 1, 3).has_value());  // g_1 would be negative
    CHECK_FALSE(growthVector(poly("t^3"), 3, 2).has_value());  // deg p >= n
    CHECK_THROWS_AS(growthVector(poly("4*t"), 0, 3), std::invalid_argument);
}

TEST_CASE("lexIdeal") {
    auto names4 = defaultVariableNames(4);
    CHECK(idealToString(lexIdeal(poly("4*t"), 3), names4) == "(x3, x2^5, x2^4*x1^2)");
    CHECK(idealToString(lexIdeal(poly("1"), 1), defaultVariableNames(2)) == "(x1)");
    CHECK(idealToString(lexIdeal(poly("t+6"), 2), defaultVariableNames(3)) == "(x2^2, x2*x1^5)");
    CHECK_THROWS_AS(lexIdeal(poly("t+6"), 1), std::invalid_argument);  // n <= deg p
    CHECK_THROWS_AS(lexIdeal(NumPoly(), 2), std::invalid_argument);
}

TEST_CASE("lexIdeal invariants") {
    std::mt19937 rng(98765);
    for (int iter = 0; iter < 25; ++iter) {
        auto terms = randomTermSequence(rng, 6, 2);
        NumPoly p = GotzmannDecomposition{terms}.reconstruct();
        int n = p.degree() + 1 + static_cast<int>(rng() % 2);
        auto lex = lexIdeal(p, n);
        CHECK(lex.isSaturated());
        CHECK(isStronglyStable(lex.arity(), lex.generators()));
        CHECK(regularity(lex) == gotzmannNumber(p));
        CHECK(hilbertPolynomialOf(lex) == p);
    }
}
