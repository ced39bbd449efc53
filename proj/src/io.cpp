#include "ssi/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

namespace ssi {

namespace {

constexpr long kMaxExponent = 4096;  // guards accidental memory bombs

class PolyParser {
public:
    explicit PolyParser(const std::string& text) : text_(text) {}

    NumPoly parse() {
        NumPoly p = expr();
        skipSpace();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    NumPoly expr() {
        skipSpace();
        bool negative = false;
        if (peek() == '+' || peek() == '-') negative = (next() == '-');
        NumPoly acc = term();
        if (negative) acc = -acc;
        while (true) {
            skipSpace();
            char c = peek();
            if (c != '+' && c != '-') break;
            next();
            NumPoly t = term();
            if (c == '+')
                acc += t;
            else
                acc -= t;
        }
        return acc;
    }

    NumPoly term() {
        NumPoly acc = factor();
        while (true) {
            skipSpace();
            if (peek() != '*') break;
            next();
            acc = acc * factor();
        }
        return acc;
    }

    NumPoly factor() {
        NumPoly base = atom();
        skipSpace();
        if (peek() == '^') {
            next();
            long e = parseUnsigned("exponent");
            if (e > kMaxExponent) fail("exponent too large");
            NumPoly acc(Rat(1));
            for (long i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    NumPoly atom() {
        skipSpace();
        char c = peek();
        if (c == '(') {
            next();
            NumPoly inner = expr();
            skipSpace();
            if (peek() != ')') fail("expected ')'");
            next();
            return inner;
        }
        if (c == 't') {
            next();
            return NumPoly::variable();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = parseInt();
            skipSpace();
            if (peek() == '/') {
                next();
                Int den = parseInt();
                if (den == 0) fail("division by zero");
                Rat q(num, den);
                q.canonicalize();
                return NumPoly(q);
            }
            return NumPoly(Rat(num));
        }
        fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
    }

    Int parseInt() {
        skipSpace();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return Int(text_.substr(start, pos_ - start));
    }

    long parseUnsigned(const char* what) {
        Int v = parseInt();
        if (!v.fits_slong_p()) fail(std::string(what) + " too large");
        return v.get_si();
    }

    void skipSpace() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char next() { return text_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("polynomial parse error at position " + std::to_string(pos_) + ": " + msg);
    }

    const std::string& text_;
    size_t pos_ = 0;
};

std::string coeffString(const Rat& absCoeff) {
    if (isInteger(absCoeff)) return absCoeff.get_num().get_str();
    return "(" + absCoeff.get_num().get_str() + "/" + absCoeff.get_den().get_str() + ")";
}

}  // namespace

NumPoly parsePolynomial(const std::string& text) { return PolyParser(text).parse(); }

std::string polynomialToString(const NumPoly& p) {
    if (p.isZero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        Rat c = p.coeff(k);
        if (c == 0) continue;
        bool negative = c < 0;
        Rat a = negative ? Rat(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? "-" : "+";
        }
        if (k == 0) {
            out += coeffString(a);
        } else {
            if (a != 1) out += coeffString(a) + "*";
            out += "t";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::vector<std::string> defaultVariableNames(int arity) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(arity));
    for (int i = 0; i < arity; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

void validateVariableNames(const std::vector<std::string>& names) {
    std::set<std::string> seen;
    for (const auto& name : names) {
        if (name.empty()) throw ParseError("variable names must be nonempty");
        for (char c : name)
            if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '*' || c == '^' ||
                c == '(' || c == ')')
                throw ParseError("variable name '" + name + "' contains a reserved character");
        if (!seen.insert(name).second) throw ParseError("duplicate variable name '" + name + "'");
    }
}

Monomial parseMonomial(const std::string& text, const std::vector<std::string>& names) {
    validateVariableNames(names);
    int arity = static_cast<int>(names.size());
    std::vector<int> exps(names.size(), 0);
    size_t pos = 0;
    auto skipSpace = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& msg) -> void {
        throw ParseError("monomial parse error at position " + std::to_string(pos) + ": " + msg);
    };

    bool first = true;
    while (true) {
        skipSpace();
        if (pos == text.size()) {
            if (first) fail("empty monomial");
            break;
        }
        if (!first) {
            if (text[pos] != '*') fail("expected '*'");
            ++pos;
            skipSpace();
        }
        if (first && text[pos] == '1') {
            ++pos;
            skipSpace();
            if (pos != text.size()) fail("unexpected input after '1'");
            break;
        }
        // longest-match variable name
        int match = -1;
        size_t matchLen = 0;
        for (int i = 0; i < arity; ++i) {
            const auto& name = names[static_cast<size_t>(i)];
            if (name.size() > matchLen && text.compare(pos, name.size(), name) == 0) {
                match = i;
                matchLen = name.size();
            }
        }
        if (match < 0) fail("expected a variable name");
        pos += matchLen;
        long e = 1;
        skipSpace();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skipSpace();
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) fail("expected an exponent");
            Int v(text.substr(start, pos - start));
            if (!v.fits_slong_p() || v.get_si() > kMaxExponent) fail("exponent too large");
            e = v.get_si();
        }
        exps[static_cast<size_t>(match)] += static_cast<int>(e);
        first = false;
    }
    return Monomial(std::move(exps));
}

std::string monomialToString(const Monomial& m, const std::vector<std::string>& names) {
    if (static_cast<int>(names.size()) != m.arity())
        throw std::invalid_argument("monomialToString: names/arity mismatch");
    std::string out;
    for (int i = m.arity() - 1; i >= 0; --i) {
        int e = m.exponent(i);
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += names[static_cast<size_t>(i)];
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

std::vector<Monomial> parseGenerators(const std::string& text,
                                      const std::vector<std::string>& names) {
    std::string body = text;
    // trim
    auto notSpace = [](unsigned char c) { return !std::isspace(c); };
    body.erase(body.begin(), std::find_if(body.begin(), body.end(), notSpace));
    body.erase(std::find_if(body.rbegin(), body.rend(), notSpace).base(), body.end());
    if (!body.empty() && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);

    if (std::all_of(body.begin(), body.end(),
                    [](unsigned char c) { return std::isspace(c); }))
        return {};  // zero ideal

    std::vector<Monomial> gens;
    size_t start = 0;
    for (size_t i = 0; i <= body.size(); ++i) {
        if (i == body.size() || body[i] == ',') {
            gens.push_back(parseMonomial(body.substr(start, i - start), names));
            start = i + 1;
        }
    }
    return gens;
}

std::string idealToString(const StronglyStableIdeal& ideal,
                          const std::vector<std::string>& names) {
    std::string out = "(";
    bool first = true;
    for (const auto& g : ideal.generators()) {
        if (!first) out += ", ";
        out += monomialToString(g, names);
        first = false;
    }
    return out + ")";
}

nlohmann::ordered_json idealToJson(const StronglyStableIdeal& ideal) {
    nlohmann::ordered_json j;
    j["arity"] = ideal.arity();
    auto gens = nlohmann::ordered_json::array();
    for (const auto& g : ideal.generators()) gens.push_back(g.exponents());
    j["generators"] = std::move(gens);
    return j;
}

StronglyStableIdeal idealFromJson(const nlohmann::ordered_json& j) {
    if (!j.is_object() || !j.contains("arity") || !j.contains("generators"))
        throw ParseError("ideal JSON must be an object with 'arity' and 'generators'");
    int arity = j.at("arity").get<int>();
    std::vector<Monomial> gens;
    for (const auto& entry : j.at("generators")) {
        std::vector<int> exps = entry.get<std::vector<int>>();
        if (static_cast<int>(exps.size()) != arity)
            throw ParseError("ideal JSON: generator arity mismatch");
        gens.push_back(Monomial(std::move(exps)));
    }
    return StronglyStableIdeal::fromGenerators(arity, std::move(gens));
}

}  // namespace ssi
