#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ssi/enumeration.hpp"
#include "ssi/hilbert.hpp"
#include "ssi/io.hpp"
#include "ssi/segment.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string format = "text";
    std::string namesCsv;
    std::string polynomial;
    std::string idealText;
    int vars = 0;
    int degree = 0;
    int threads = 1;
    std::optional<long long> maxRegularity;
    std::string segmentType;
};

std::vector<std::string> splitCsv(const std::string& csv) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(csv);
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::vector<std::string> resolveNames(const Options& opt, int arity) {
    if (opt.namesCsv.empty()) return ssi::defaultVariableNames(arity);
    auto names = splitCsv(opt.namesCsv);
    if (static_cast<int>(names.size()) != arity)
        throw ssi::ParseError("--names must list exactly " + std::to_string(arity) +
                              " names (smallest variable first)");
    ssi::validateVariableNames(names);
    return names;
}

ssi::NumPoly parsePoly(const Options& opt) { return ssi::parsePolynomial(opt.polynomial); }

ssi::NumPoly requireHilbertPolynomial(const Options& opt) {
    ssi::NumPoly p = parsePoly(opt);
    if (auto invalid = ssi::hilbertPolynomialFailure(p))
        throw ssi::ParseError("not a Hilbert polynomial: greedy step " +
                              ssi::toString(invalid->step) + ": " + invalid->reason);
    return p;
}

std::vector<ssi::Monomial> parseIdealArg(const Options& opt,
                                         const std::vector<std::string>& names) {
    std::string text = opt.idealText;
    auto first = text.find_first_not_of(" \t\n");
    if (first != std::string::npos && text[first] == '{') {
        auto ideal = ssi::idealFromJson(json::parse(text));
        if (ideal.arity() != static_cast<int>(names.size()))
            throw ssi::ParseError("ideal JSON arity does not match --vars");
        return ideal.generators();
    }
    return ssi::parseGenerators(text, names);
}

template <typename T>
std::string bracketList(const std::vector<T>& values) {
    std::string out = "[";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        if constexpr (std::is_same_v<T, ssi::Int>)
            out += values[i].get_str();
        else
            out += std::to_string(values[i]);
    }
    return out + "]";
}

void emit(const Options& opt, const std::string& text, const json& j) {
    if (opt.format == "json")
        std::cout << j.dump() << "\n";
    else
        std::cout << text << "\n";
}

json weightsJson(const std::optional<ssi::WeightVector>& w) {
    if (!w) return nullptr;
    auto arr = json::array();
    for (const auto& v : w->weights) arr.push_back(ssi::toLongLong(v));
    return arr;
}

int runIsHp(const Options& opt) {
    ssi::NumPoly p = parsePoly(opt);
    bool ok = ssi::isHilbertPolynomial(p);
    json j;
    j["polynomial"] = ssi::polynomialToString(p);
    j["isHilbertPolynomial"] = ok;
    emit(opt, ok ? "true" : "false", j);
    return 0;
}

int runGotzmann(const Options& opt) {
    ssi::NumPoly p = requireHilbertPolynomial(opt);
    auto dec = std::get<ssi::GotzmannDecomposition>(ssi::gotzmannDecomposition(p));
    json j;
    j["polynomial"] = ssi::polynomialToString(p);
    j["terms"] = dec.terms;
    j["gotzmannNumber"] = dec.terms.size();
    emit(opt,
         "terms: " + bracketList(dec.terms) + "\ngotzmannNumber: " + std::to_string(dec.terms.size()),
         j);
    return 0;
}

int runMacaulay(const Options& opt) {
    ssi::NumPoly p = requireHilbertPolynomial(opt);
    if (p.isZero()) throw ssi::ParseError("macaulay: polynomial must be nonzero");
    auto mac = ssi::macaulayDecomposition(p);
    json j;
    j["polynomial"] = ssi::polynomialToString(p);
    j["m"] = mac.m;
    emit(opt, "m: " + bracketList(mac.m), j);
    return 0;
}

int runGrowthVector(const Options& opt) {
    ssi::NumPoly p = requireHilbertPolynomial(opt);
    int n = opt.vars - 1;
    if (n < 1) throw ssi::ParseError("growth-vector: need --vars >= 2");
    if (opt.degree < 1) throw ssi::ParseError("growth-vector: need --degree >= 1");
    auto gv = ssi::growthVector(p, opt.degree, n);
    json j;
    j["polynomial"] = ssi::polynomialToString(p);
    j["vars"] = opt.vars;
    j["degree"] = opt.degree;
    j["growthVector"] = gv ? json(gv->entries) : json(nullptr);
    emit(opt, gv ? bracketList(gv->entries) : "infeasible", j);
    return 0;
}

int runLexIdeal(const Options& opt) {
    ssi::NumPoly p = requireHilbertPolynomial(opt);
    if (p.isZero()) throw ssi::ParseError("lex-ideal: polynomial must be nonzero");
    int n = opt.vars - 1;
    auto names = resolveNames(opt, opt.vars);
    auto ideal = ssi::lexIdeal(p, n);
    json j;
    j["polynomial"] = ssi::polynomialToString(p);
    j["ideal"] = ssi::idealToJson(ideal);
    j["text"] = ssi::idealToString(ideal, names);
    emit(opt, ssi::idealToString(ideal, names), j);
    return 0;
}

int runEnumerate(const Options& opt) {
    ssi::NumPoly p = requireHilbertPolynomial(opt);
    if (p.isZero()) throw ssi::ParseError("enumerate: polynomial must be nonzero");
    int n = opt.vars - 1;
    auto names = resolveNames(opt, opt.vars);
    long long r = ssi::gotzmannNumber(p);
    long long degreeUsed = opt.maxRegularity ? std::min(*opt.maxRegularity, r) : r;
    auto ideals = ssi::stronglyStableIdeals(p, n, opt.maxRegularity, opt.threads);

    json j;
    j["polynomial"] = ssi::polynomialToString(p);
    j["arity"] = opt.vars;
    j["degreeUsed"] = degreeUsed;
    j["count"] = ideals.size();
    auto list = json::array();
    for (const auto& ideal : ideals) list.push_back(ssi::idealToJson(ideal));
    j["ideals"] = std::move(list);

    std::string text = "count: " + std::to_string(ideals.size());
    for (const auto& ideal : ideals) text += "\n" + ssi::idealToString(ideal, names);
    emit(opt, text, j);
    return 0;
}

int runHilbertPoly(const Options& opt) {
    auto names = resolveNames(opt, opt.vars);
    auto ideal = ssi::StronglyStableIdeal::fromGenerators(opt.vars, parseIdealArg(opt, names));
    ssi::NumPoly p = ssi::hilbertPolynomialOf(ideal);
    json j;
    j["ideal"] = ssi::idealToJson(ideal);
    j["hilbertPolynomial"] = ssi::polynomialToString(p);
    emit(opt, ssi::polynomialToString(p), j);
    return 0;
}

int runRegularity(const Options& opt) {
    auto names = resolveNames(opt, opt.vars);
    auto ideal = ssi::StronglyStableIdeal::fromGenerators(opt.vars, parseIdealArg(opt, names));
    int m = ssi::regularity(ideal);
    json j;
    j["ideal"] = ssi::idealToJson(ideal);
    j["regularity"] = m;
    emit(opt, std::to_string(m), j);
    return 0;
}

int runIsBorel(const Options& opt) {
    auto names = resolveNames(opt, opt.vars);
    auto gens = parseIdealArg(opt, names);
    bool ok = ssi::isStronglyStable(opt.vars, gens);
    json j;
    j["stronglyStable"] = ok;
    emit(opt, ok ? "true" : "false", j);
    return 0;
}

int runSegment(const Options& opt) {
    auto names = resolveNames(opt, opt.vars);
    auto ideal = ssi::StronglyStableIdeal::fromGenerators(opt.vars, parseIdealArg(opt, names));
    if (!ideal.isSaturated())
        throw ssi::ParseError("segment: the ideal must be saturated (no generator involves " +
                              names[0] + ")");
    ssi::SegmentResult res;
    if (opt.segmentType == "hilb")
        res = ssi::isHilbSegment(ideal);
    else if (opt.segmentType == "reg")
        res = ssi::isRegSegment(ideal);
    else
        res = ssi::isGenSegment(ideal);

    json j;
    j["segment"] = res.segment;
    j["weights"] = weightsJson(res.weights);
    j["checkedPairs"] = res.checkedPairs;

    std::string text = std::string("segment: ") + (res.segment ? "true" : "false");
    if (res.weights) {
        text += "\nweights: " + bracketList(res.weights->weights);
        text += "\nnote: weights listed smallest variable first:";
        for (size_t i = 0; i < res.weights->weights.size(); ++i)
            text += (i ? ", " : " ") + names[i] + "=" + res.weights->weights[i].get_str();
    }
    emit(opt, text, j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Saturated strongly stable ideals with a given Hilbert polynomial:\n"
                 "Gotzmann/Macaulay decompositions, growth vectors, lexicographic ideals,\n"
                 "exhaustive enumeration, and segment certificates via weight vectors.\n"
                 "Only proper nonzero ideals are enumerated (deg p < n is required)."};
    app.require_subcommand(1);
    Options opt;

    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--names", opt.namesCsv,
                   "Comma-separated display names, smallest variable first");

    auto addPoly = [&](CLI::App* cmd) {
        cmd->add_option("polynomial", opt.polynomial, "Polynomial in t, e.g. \"4*t\"")->required();
    };
    auto addVars = [&](CLI::App* cmd) {
        cmd->add_option("--vars", opt.vars, "Number of variables K = n+1")
            ->required()
            ->check(CLI::PositiveNumber);
    };
    auto addIdeal = [&](CLI::App* cmd) {
        cmd->add_option("--ideal", opt.idealText,
                        "Generators, e.g. \"x2^2,x2*x1,x1^4\" or ideal JSON")
            ->required();
    };

    auto* isHp = app.add_subcommand("is-hp", "Decide whether a polynomial is a Hilbert polynomial");
    addPoly(isHp);

    auto* gotzmann = app.add_subcommand("gotzmann", "Gotzmann decomposition and Gotzmann number");
    addPoly(gotzmann);

    auto* macaulay = app.add_subcommand("macaulay", "Macaulay decomposition coefficients m_k");
    addPoly(macaulay);

    auto* growthVec = app.add_subcommand("growth-vector", "Growth vector of p in a degree");
    addPoly(growthVec);
    addVars(growthVec);
    growthVec->add_option("--degree", opt.degree, "Degree s >= 1")->required();

    auto* lexIdeal = app.add_subcommand("lex-ideal", "Saturated lexicographic ideal realizing p");
    addPoly(lexIdeal);
    addVars(lexIdeal);

    auto* enumerate =
        app.add_subcommand("enumerate", "All saturated strongly stable ideals with Hilbert "
                                        "polynomial p and bounded regularity");
    addPoly(enumerate);
    addVars(enumerate);
    long long maxRegularityRaw = 0;
    auto* maxRegularityOpt = enumerate->add_option("--max-regularity", maxRegularityRaw,
                                                   "Regularity bound (default: Gotzmann number)");
    enumerate->add_option("--threads", opt.threads, "Worker threads (output is identical)")
        ->check(CLI::PositiveNumber);

    auto* hilbertPoly = app.add_subcommand("hilbert-poly", "Hilbert polynomial of a strongly "
                                                           "stable ideal's quotient");
    addIdeal(hilbertPoly);
    addVars(hilbertPoly);

    auto* regularity = app.add_subcommand("regularity", "Regularity (max generator degree)");
    addIdeal(regularity);
    addVars(regularity);

    auto* isBorel = app.add_subcommand("is-borel", "Check that generators span a strongly "
                                                   "stable ideal");
    addIdeal(isBorel);
    addVars(isBorel);

    auto* segment = app.add_subcommand(
        "segment", "Segment test with certifying weight vector (weights are listed "
                   "smallest variable first, w0 up to wn)");
    segment->add_option("--type", opt.segmentType, "hilb, reg, or gen")
        ->required()
        ->check(CLI::IsMember({"hilb", "reg", "gen"}));
    addIdeal(segment);
    addVars(segment);

    for (auto* sub : {isHp, gotzmann, macaulay, growthVec, lexIdeal, enumerate, hilbertPoly,
                      regularity, isBorel, segment})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    if (maxRegularityOpt->count()) opt.maxRegularity = maxRegularityRaw;

    try {
        if (isHp->parsed()) return runIsHp(opt);
        if (gotzmann->parsed()) return runGotzmann(opt);
        if (macaulay->parsed()) return runMacaulay(opt);
        if (growthVec->parsed()) return runGrowthVector(opt);
        if (lexIdeal->parsed()) return runLexIdeal(opt);
        if (enumerate->parsed()) return runEnumerate(opt);
        if (hilbertPoly->parsed()) return runHilbertPoly(opt);
        if (regularity->parsed()) return runRegularity(opt);
        if (isBorel->parsed()) return runIsBorel(opt);
        if (segment->parsed()) return runSegment(opt);
        std::cerr << "error: no subcommand\n";
        return 1;
    } catch (const ssi::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: invalid JSON: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
