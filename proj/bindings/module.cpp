#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "ssi/enumeration.hpp"
#include "ssi/hilbert.hpp"
#include "ssi/io.hpp"
#include "ssi/segment.hpp"

namespace py = pybind11;

namespace {

ssi::NumPoly parsePoly(const std::string& text) { return ssi::parsePolynomial(text); }

ssi::StronglyStableIdeal makeIdeal(int numVars, const std::vector<std::vector<int>>& generators) {
    std::vector<ssi::Monomial> gens;
    gens.reserve(generators.size());
    for (const auto& e : generators) {
        if (static_cast<int>(e.size()) != numVars)
            throw std::invalid_argument("generator arity does not match num_vars");
        gens.push_back(ssi::Monomial(e));
    }
    return ssi::StronglyStableIdeal::fromGenerators(numVars, std::move(gens));
}

std::vector<std::vector<int>> generatorLists(const ssi::StronglyStableIdeal& ideal) {
    std::vector<std::vector<int>> out;
    out.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) out.push_back(g.exponents());
    return out;
}

std::optional<std::vector<long long>> weightList(const std::optional<ssi::WeightVector>& w) {
    if (!w) return std::nullopt;
    std::vector<long long> out;
    out.reserve(w->weights.size());
    for (const auto& v : w->weights) out.push_back(ssi::toLongLong(v));
    return out;
}

}  // namespace

PYBIND11_MODULE(_ssi, m) {
    m.doc() = "Saturated strongly stable ideals with a given Hilbert polynomial";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ssi::ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<ssi::StronglyStableIdeal>(m, "Ideal")
        .def(py::init(&makeIdeal), py::arg("num_vars"), py::arg("generators"))
        .def_property_readonly("num_vars", &ssi::StronglyStableIdeal::arity)
        .def_property_readonly("generators",
                               [](const ssi::StronglyStableIdeal& i) { return generatorLists(i); })
        .def_property_readonly("saturated", &ssi::StronglyStableIdeal::isSaturated)
        .def("saturation",
             [](const ssi::StronglyStableIdeal& i) { return ssi::saturate(i); })
        .def("regularity", [](const ssi::StronglyStableIdeal& i) { return ssi::regularity(i); })
        .def("hilbert_polynomial",
             [](const ssi::StronglyStableIdeal& i) {
                 return ssi::polynomialToString(ssi::hilbertPolynomialOf(i));
             })
        .def("hilbert_function",
             [](const ssi::StronglyStableIdeal& i, int degree) {
                 return ssi::toLongLong(ssi::hilbertFunctionValue(i, degree));
             },
             py::arg("degree"))
        .def("__str__",
             [](const ssi::StronglyStableIdeal& i) {
                 return ssi::idealToString(i, ssi::defaultVariableNames(i.arity()));
             })
        .def("__repr__",
             [](const ssi::StronglyStableIdeal& i) {
                 return "Ideal" + ssi::idealToString(i, ssi::defaultVariableNames(i.arity()));
             })
        .def("__eq__", [](const ssi::StronglyStableIdeal& a,
                          const ssi::StronglyStableIdeal& b) { return a == b; })
        .def("__lt__", [](const ssi::StronglyStableIdeal& a,
                          const ssi::StronglyStableIdeal& b) { return a < b; });

    m.def("is_hilbert_polynomial",
          [](const std::string& p) { return ssi::isHilbertPolynomial(parsePoly(p)); },
          py::arg("polynomial"));

    m.def("gotzmann_decomposition",
          [](const std::string& p) {
              auto res = ssi::gotzmannDecomposition(parsePoly(p));
              if (auto* invalid = std::get_if<ssi::GotzmannInvalid>(&res))
                  throw std::invalid_argument("not a Hilbert polynomial: " + invalid->reason);
              return std::get<ssi::GotzmannDecomposition>(res).terms;
          },
          py::arg("polynomial"));

    m.def("gotzmann_number",
          [](const std::string& p) { return ssi::gotzmannNumber(parsePoly(p)); },
          py::arg("polynomial"));

    m.def("macaulay_decomposition",
          [](const std::string& p) { return ssi::macaulayDecomposition(parsePoly(p)).m; },
          py::arg("polynomial"));

    m.def("growth_vector",
          [](const std::string& p, int degree, int numVars) -> std::optional<std::vector<long long>> {
              auto gv = ssi::growthVector(parsePoly(p), degree, numVars - 1);
              if (!gv) return std::nullopt;
              return gv->entries;
          },
          py::arg("polynomial"), py::arg("degree"), py::arg("num_vars"));

    m.def("lex_ideal",
          [](const std::string& p, int numVars) { return ssi::lexIdeal(parsePoly(p), numVars - 1); },
          py::arg("polynomial"), py::arg("num_vars"));

    m.def("strongly_stable_ideals",
          [](const std::string& p, int numVars, std::optional<long long> maxRegularity,
             int threads) {
              return ssi::stronglyStableIdeals(parsePoly(p), numVars - 1, maxRegularity, threads);
          },
          py::arg("polynomial"), py::arg("num_vars"), py::arg("max_regularity") = py::none(),
          py::arg("threads") = 1);

    m.def("is_strongly_stable",
          [](int numVars, const std::vector<std::vector<int>>& generators) {
              std::vector<ssi::Monomial> gens;
              for (const auto& e : generators) gens.push_back(ssi::Monomial(e));
              return ssi::isStronglyStable(numVars, gens);
          },
          py::arg("num_vars"), py::arg("generators"));

    m.def("saturate",
          [](int numVars, const std::vector<std::vector<int>>& generators) {
              std::vector<ssi::Monomial> gens;
              for (const auto& e : generators) gens.push_back(ssi::Monomial(e));
              return ssi::saturate(numVars, gens);
          },
          py::arg("num_vars"), py::arg("generators"));

    m.def("is_hilb_segment",
          [](const ssi::StronglyStableIdeal& i) {
              auto r = ssi::isHilbSegment(i);
              return py::make_tuple(r.segment, weightList(r.weights));
          },
          py::arg("ideal"));
    m.def("is_reg_segment",
          [](const ssi::StronglyStableIdeal& i) {
              auto r = ssi::isRegSegment(i);
              return py::make_tuple(r.segment, weightList(r.weights));
          },
          py::arg("ideal"));
    m.def("is_gen_segment",
          [](const ssi::StronglyStableIdeal& i) {
              auto r = ssi::isGenSegment(i);
              return py::make_tuple(r.segment, weightList(r.weights));
          },
          py::arg("ideal"));
}
