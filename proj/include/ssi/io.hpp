#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ssi/ideal.hpp"
#include "ssi/monomial.hpp"
#include "ssi/numpoly.hpp"

namespace ssi {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Polynomial grammar: integer or rational coefficients, variable t, operators
// + - * ^, optional parentheses; whitespace insignificant. Examples: "4*t",
// "t^2+3*t-1", "(1/2)*t^2+(1/2)*t".
NumPoly parsePolynomial(const std::string& text);

// Canonical text form, highest power first, parseable by parsePolynomial.
std::string polynomialToString(const NumPoly& p);

// Display names for variables; index 0 is the smallest variable x0.
std::vector<std::string> defaultVariableNames(int arity);
void validateVariableNames(const std::vector<std::string>& names);

// Monomial syntax: '*'-separated factors name or name^exp, or "1".
Monomial parseMonomial(const std::string& text, const std::vector<std::string>& names);
std::string monomialToString(const Monomial& m, const std::vector<std::string>& names);

// Comma-separated generators, optionally wrapped in parentheses; the empty
// list (zero ideal) is "()" or the empty string.
std::vector<Monomial> parseGenerators(const std::string& text,
                                      const std::vector<std::string>& names);
std::string idealToString(const StronglyStableIdeal& ideal,
                          const std::vector<std::string>& names);

// JSON form {"arity": K, "generators": [[a0,...,an], ...]}.
nlohmann::ordered_json idealToJson(const StronglyStableIdeal& ideal);
StronglyStableIdeal idealFromJson(const nlohmann::ordered_json& j);

}  // namespace ssi
