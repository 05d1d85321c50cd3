#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "localconst/charspec.hpp"
#include "localconst/epsilon.hpp"
#include "localconst/errors.hpp"
#include "localconst/serialize.hpp"

namespace py = pybind11;
using namespace localconst;

namespace {

Backend backend_of(const std::string& name) {
    if (name == "oracle") return Backend::Oracle;
    if (name == "closed") return Backend::Closed;
    throw py::value_error("backend must be 'oracle' or 'closed'");
}

MultiplicativeCharacter character(const std::string& spec, std::int64_t p, int f, std::optional<int> prec) {
    const CharSpec cs = parse_char_spec(spec, p);
    return cs.build(make_field(p, f, prec.value_or(std::max(cs.depth(), 1) + 4)));
}

py::tuple run(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"localconst"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_localconst, m) {
    m.doc() = "Exact local constants of characters of unramified p-adic fields";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<PrecisionError>(m, "PrecisionError", PyExc_ArithmeticError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<RootOfUnity>(m, "RootOfUnity")
        .def(py::init<std::int64_t, std::int64_t>(), py::arg("m"), py::arg("k"))
        .def_readonly("m", &RootOfUnity::m)
        .def_readonly("k", &RootOfUnity::k)
        .def("__mul__", &RootOfUnity::operator*)
        .def("__pow__", &RootOfUnity::pow)
        .def("__eq__", &RootOfUnity::operator==)
        .def("__hash__", [](const RootOfUnity& r) { return py::hash(py::make_tuple(r.m, r.k)); })
        .def("__repr__", &RootOfUnity::to_string);

    py::class_<CyclotomicNumber>(m, "CyclotomicNumber")
        .def_static("root", &CyclotomicNumber::root)
        .def_static("rational", [](long num, long den) { return CyclotomicNumber::rational(mpq_class(num, den)); },
                    py::arg("num"), py::arg("den") = 1)
        .def_property_readonly("m", &CyclotomicNumber::m)
        .def("__add__", [](const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + b; })
        .def("__sub__", [](const CyclotomicNumber& a, const CyclotomicNumber& b) { return a - b; })
        .def("__mul__", [](const CyclotomicNumber& a, const CyclotomicNumber& b) { return a * b; })
        .def("__eq__", &CyclotomicNumber::operator==)
        .def("__pow__", &CyclotomicNumber::pow)
        .def("galois", py::overload_cast<std::int64_t>(&CyclotomicNumber::galois, py::const_))
        .def("conj", &CyclotomicNumber::conj)
        .def("as_root_of_unity", &CyclotomicNumber::as_root_of_unity)
        .def("__complex__", &CyclotomicNumber::to_complex)
        .def("to_json", [](const CyclotomicNumber& x) { return to_json(x).dump(); })
        .def_static("from_json", [](const std::string& s) { return cyclotomic_from_json(json::parse(s)); })
        .def("__repr__", &CyclotomicNumber::to_string);

    py::class_<MultiplicativeCharacter>(m, "Character")
        .def_property_readonly("spec", &MultiplicativeCharacter::spec)
        .def_property_readonly("conductor", &MultiplicativeCharacter::conductor_exponent)
        .def_property_readonly("order", &MultiplicativeCharacter::order)
        .def("__call__", [](const MultiplicativeCharacter& chi, long n) {
            return chi.eval(PadicElement::from_int(chi.field(), n));
        })
        .def("__mul__", &MultiplicativeCharacter::operator*)
        .def("__pow__", &MultiplicativeCharacter::pow)
        .def("__eq__", &MultiplicativeCharacter::operator==)
        .def("__repr__", [](const MultiplicativeCharacter& chi) { return "Character('" + chi.spec() + "')"; });

    m.def("character", &character, py::arg("spec"), py::arg("p"), py::arg("f") = 1, py::arg("prec") = py::none(),
          "Parse a character spec such as 'alpha=1/3^2;tame=1' over the unramified extension of degree f.");
    m.def("w", [](const MultiplicativeCharacter& chi, const std::string& b) { return w_of(chi, backend_of(b)).value; },
          py::arg("chi"), py::arg("backend") = "oracle");
    m.def("w_star", [](const MultiplicativeCharacter& chi) { return w_star(chi).value; });
    m.def("iota", py::overload_cast<const MultiplicativeCharacter&>(&iota));
    m.def("w_p", [](const MultiplicativeCharacter& chi) -> std::optional<RootOfUnity> {
        const EpsilonValue w = w_of(chi, Backend::Oracle);
        if (!w.root) return std::nullopt;
        return w_p_part(w, chi.field()->p());
    });
    m.def("sqrt_pstar", &sqrt_pstar);
    m.def("sqrt_p", &sqrt_p);
    m.def("hilbert_qp", [](long a, long b, std::int64_t p) { return hilbert_qp(a, b, p); });
    m.def("run_cli", &run, py::arg("args"), "Run the command-line tool in-process; returns (exit code, stdout, stderr).");
}
