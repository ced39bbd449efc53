#include "ssi/segment.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <stdexcept>
#include <utility>

#include "ssi/hilbert.hpp"

namespace ssi {

namespace {

// Row of the system sum_i a[i]*w[i] >= b.
struct Row {
    std::vector<Rat> a;
    Rat b;
};

// Scale so that a is a primitive integer vector (b scales along); used for
// deduplication and to keep Fourier-Motzkin coefficients small.
void normalizeRow(Row& row) {
    Int lcm(1);
    for (const auto& c : row.a) {
        Int den = c.get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    Int gcd(0);
    for (auto& c : row.a) {
        c *= Rat(lcm);
        c.canonicalize();
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), c.get_num().get_mpz_t());
    }
    row.b *= Rat(lcm);
    if (gcd > 1) {
        for (auto& c : row.a) c /= Rat(gcd);
        row.b /= Rat(gcd);
    }
}

// Returns false on a constant row 0 >= b with b > 0 (infeasible system).
bool addRow(std::map<std::vector<Rat>, Rat>& rows, Row row) {
    normalizeRow(row);
    bool allZero = std::all_of(row.a.begin(), row.a.end(), [](const Rat& c) { return c == 0; });
    if (allZero) return row.b <= 0;
    auto [it, inserted] = rows.emplace(std::move(row.a), row.b);
    if (!inserted && row.b > it->second) it->second = row.b;
    return true;
}

// Exact Fourier-Motzkin feasibility; returns a rational point or nullopt.
// Variables are eliminated from the highest index down, then assigned from
// w_0 up, each to its tightest lower bound.
std::optional<std::vector<Rat>> solveFeasible(const std::vector<Row>& system, int nvars) {
    std::map<std::vector<Rat>, Rat> current;
    for (const auto& row : system)
        if (!addRow(current, row)) return std::nullopt;

    // stages[k] holds the system right before eliminating w_k (vars 0..k).
    std::vector<std::vector<Row>> stages(static_cast<size_t>(nvars));
    for (int k = nvars - 1; k >= 1; --k) {
        auto& stage = stages[static_cast<size_t>(k)];
        for (const auto& [a, b] : current) stage.push_back(Row{a, b});

        std::map<std::vector<Rat>, Rat> next;
        std::vector<const Row*> pos, neg;
        for (const auto& row : stage) {
            const Rat& ck = row.a[static_cast<size_t>(k)];
            if (ck > 0)
                pos.push_back(&row);
            else if (ck < 0)
                neg.push_back(&row);
            else if (!addRow(next, row))
                return std::nullopt;
        }
        for (const Row* p : pos)
            for (const Row* q : neg) {
                Rat alpha = -q->a[static_cast<size_t>(k)];  // > 0
                Rat beta = p->a[static_cast<size_t>(k)];    // > 0
                Row combined;
                combined.a.resize(static_cast<size_t>(nvars), Rat(0));
                for (int j = 0; j < k; ++j)
                    combined.a[static_cast<size_t>(j)] = alpha * p->a[static_cast<size_t>(j)] +
                                                         beta * q->a[static_cast<size_t>(j)];
                combined.b = alpha * p->b + beta * q->b;
                if (!addRow(next, std::move(combined))) return std::nullopt;
            }
        current = std::move(next);
    }
    for (const auto& [a, b] : current) stages[0].push_back(Row{a, b});

    // Back-substitution.
    std::vector<Rat> w(static_cast<size_t>(nvars), Rat(0));
    for (int k = 0; k < nvars; ++k) {
        bool hasLower = false, hasUpper = false;
        Rat lower(0), upper(0);
        for (const auto& row : stages[static_cast<size_t>(k)]) {
            const Rat& ck = row.a[static_cast<size_t>(k)];
            if (ck == 0) continue;
            Rat rest = row.b;
            for (int j = 0; j < k; ++j) rest -= row.a[static_cast<size_t>(j)] * w[static_cast<size_t>(j)];
            Rat bound = rest / ck;
            if (ck > 0) {
                if (!hasLower || bound > lower) lower = bound, hasLower = true;
            } else {
                if (!hasUpper || bound < upper) upper = bound, hasUpper = true;
            }
        }
        if (!hasLower) lower = Rat(1);  // w_0 >= 1 makes this unreachable in practice
        if (hasUpper && lower > upper) return std::nullopt;
        w[static_cast<size_t>(k)] = lower;
    }
    return w;
}

// Elements of s with nothing of s strictly below / above them in the Borel
// order.
std::vector<Monomial> borelMinimal(const std::vector<Monomial>& s) {
    std::vector<Monomial> out;
    for (const auto& m : s) {
        bool minimal = true;
        for (const auto& u : s)
            if (!(u == m) && borelLeq(u, m)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(m);
    }
    return out;
}

std::vector<Monomial> borelMaximal(const std::vector<Monomial>& s) {
    std::vector<Monomial> out;
    for (const auto& m : s) {
        bool maximal = true;
        for (const auto& u : s)
            if (!(u == m) && borelLeq(m, u)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(m);
    }
    return out;
}

Rat dot(const std::vector<Int>& w, const Monomial& m) {
    Rat acc(0);
    for (int i = 0; i < m.arity(); ++i) acc += Rat(w[static_cast<size_t>(i)]) * Rat(m.exponent(i));
    return acc;
}

void validateProblem(const SeparationProblem& problem, int& arity) {
    arity = 0;
    for (const auto& block : problem.blocks) {
        int degree = -1;
        auto check = [&](const Monomial& m) {
            if (arity == 0) arity = m.arity();
            if (m.arity() != arity)
                throw std::invalid_argument("findSeparatingWeight: arity mismatch across blocks");
            if (degree == -1) degree = m.degree();
            if (m.degree() != degree)
                throw std::invalid_argument("findSeparatingWeight: mixed degrees within a block");
        };
        for (const auto& m : block.inSet) check(m);
        for (const auto& m : block.outSet) check(m);
        for (const auto& m : block.inSet)
            for (const auto& u : block.outSet)
                if (m == u)
                    throw std::invalid_argument(
                        "findSeparatingWeight: inSet and outSet overlap within a block");
    }
}

SegmentResult toSegmentResult(SeparationResult&& r) {
    SegmentResult out;
    out.segment = r.weights.has_value();
    out.weights = std::move(r.weights);
    out.checkedPairs = r.checkedPairs;
    return out;
}

}  // namespace

SeparationResult findSeparatingWeight(const SeparationProblem& problem) {
    int arity = 0;
    validateProblem(problem, arity);
    if (arity == 0) arity = 1;  // no monomials at all: any weight works
    int nvars = arity;

    std::vector<Row> system;
    auto zeroRow = [&] { return Row{std::vector<Rat>(static_cast<size_t>(nvars), Rat(0)), Rat(0)}; };
    {
        Row w0 = zeroRow();
        w0.a[0] = 1;
        w0.b = 1;
        system.push_back(std::move(w0));  // w_0 >= 1
    }
    for (int i = 0; i + 1 < nvars; ++i) {  // w_{i+1} - w_i >= 0
        Row mono = zeroRow();
        mono.a[static_cast<size_t>(i)] = -1;
        mono.a[static_cast<size_t>(i) + 1] = 1;
        system.push_back(std::move(mono));
    }
    for (const auto& block : problem.blocks) {
        for (const auto& alpha : borelMinimal(block.inSet))
            for (const auto& beta : borelMaximal(block.outSet)) {
                Row sep = zeroRow();
                for (int i = 0; i < nvars; ++i)
                    sep.a[static_cast<size_t>(i)] = Rat(alpha.exponent(i) - beta.exponent(i));
                sep.b = 1;
                system.push_back(std::move(sep));
            }
    }

    SeparationResult result;
    auto point = solveFeasible(system, nvars);
    if (!point) return result;

    // Scale the rational point to a primitive integer vector. Scaling up by
    // the lcm keeps every ">= 1" constraint satisfied; dividing by the gcd
    // keeps them because the pair differences have integer dot products.
    Int lcm(1);
    for (const auto& c : *point) {
        Int den = c.get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<Int> w;
    w.reserve(point->size());
    Int gcd(0);
    for (const auto& c : *point) {
        Rat scaled = c * Rat(lcm);
        scaled.canonicalize();
        w.push_back(scaled.get_num());
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), w.back().get_mpz_t());
    }
    if (gcd > 1)
        for (auto& v : w) v /= gcd;

    // Full verification: monotone, positive, and every pair separated.
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) throw std::logic_error("findSeparatingWeight: non-monotone certificate");
    if (!w.empty() && w[0] < 1)
        throw std::logic_error("findSeparatingWeight: non-positive certificate");
    for (const auto& block : problem.blocks)
        for (const auto& alpha : block.inSet)
            for (const auto& beta : block.outSet) {
                ++result.checkedPairs;
                if (!(dot(w, alpha) > dot(w, beta)))
                    throw std::logic_error("findSeparatingWeight: certificate failed a pair");
            }

    result.weights = WeightVector{std::move(w)};
    return result;
}

SegmentResult isHilbSegment(const StronglyStableIdeal& ideal) {
    long long r = gotzmannNumber(hilbertPolynomialOf(ideal));
    if (r > INT_MAX) throw std::overflow_error("isHilbSegment: Gotzmann number too large");
    BorelSet piece = degreePiece(ideal, static_cast<int>(r));
    SeparationBlock block;
    block.inSet = piece.members;
    for (const auto& m : allMonomials(ideal.arity(), static_cast<int>(r)))
        if (!piece.contains(m)) block.outSet.push_back(m);
    return toSegmentResult(findSeparatingWeight(SeparationProblem{{std::move(block)}}));
}

SegmentResult isRegSegment(const StronglyStableIdeal& ideal) {
    int m = regularity(ideal);
    BorelSet piece = degreePiece(ideal, m);
    SeparationBlock block;
    block.inSet = piece.members;
    for (const auto& u : allMonomials(ideal.arity(), m))
        if (!piece.contains(u)) block.outSet.push_back(u);
    return toSegmentResult(findSeparatingWeight(SeparationProblem{{std::move(block)}}));
}

SegmentResult isGenSegment(const StronglyStableIdeal& ideal) {
    std::map<int, SeparationBlock> byDegree;
    for (const auto& g : ideal.generators()) byDegree[g.degree()].inSet.push_back(g);
    SeparationProblem problem;
    for (auto& [degree, block] : byDegree) {
        BorelSet piece = degreePiece(ideal, degree);
        for (const auto& u : allMonomials(ideal.arity(), degree))
            if (!piece.contains(u)) block.outSet.push_back(u);
        problem.blocks.push_back(std::move(block));
    }
    return toSegmentResult(findSeparatingWeight(SeparationProblem{std::move(problem.blocks)}));
}

}  // namespace ssi
