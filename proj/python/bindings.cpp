#include "arithgrass/chowring.hpp"
#include "arithgrass/lefschetz.hpp"
#include "arithgrass/racah.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace arithgrass;

// Rationals cross the boundary as "p/q" strings; the package wrapper turns
// them into fractions.Fraction.

namespace {

std::vector<Rational> parse_all(const std::vector<std::string>& values) {
    std::vector<Rational> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(parse_rational(v));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Schubert calculus on G(N,2) and Racah polynomial bounds";

    py::register_exception<std::invalid_argument>(m, "InvalidArgument", PyExc_ValueError);

    m.def("binomial", [](long n, long k) { return binomial(n, k).get_str(); });
    m.def("harmonic", [](std::size_t k) { return to_string(harmonic(k)); });

    m.def("skew_f", [](int l1, int l2, int m1, int m2) { return skew_f({l1, l2}, {m1, m2}).get_str(); });
    m.def("betti", &betti);
    m.def("alpha", [](int N, int k) { return to_json(alpha(N, k)).dump(); });
    m.def("primitive_dims", [](int N) { return primitive_profile(N).dims; });
    m.def("primcond", [](int N) { return primitive_profile(N).primcond; });

    m.def("sigma_direct", [](int N, int k) { return to_string(sigma_direct(SigmaInstance::make(N, k))); });
    m.def("sigma_closed", [](int N, int k) { return to_string(sigma_closed(SigmaInstance::make(N, k))); });
    m.def("coeff_A", [](int n, int T) { return coeff_A(n, T).get_str(); });
    m.def("coeff_B", [](int n, int T, int i) { return coeff_B(n, T, i).get_str(); });
    m.def("pn_tau", [](int n) { return to_string(pn_tau(n)); });
    m.def("pn_commutator_check", &pn_commutator_check);

    m.def("racah_eval", [](int n, int s, int T) { return to_string(racah_eval(n, s, T)); });
    m.def("legendre_eval", [](int n, const std::string& t) { return to_string(legendre_eval(n, parse_rational(t))); });
    m.def("p_eval", [](int n, int T, const std::string& t) { return to_string(p_eval(n, T, parse_rational(t))); });
    m.def("goodrange", &goodrange);
    m.def("below_log", &below_log);
    m.def("needed_inequality", [](const std::vector<std::string>& seq, int n, int T) {
        const auto v = needed_inequality(parse_all(seq), n, T);
        return py::make_tuple(to_string(v.lhs), to_string(v.rhs), v.holds);
    });
    m.def(
        "bound_scan",
        [](int T_min, int T_max, unsigned workers) {
            py::gil_scoped_release release;
            return to_json(bound_scan(T_min, T_max, workers)).dump();
        },
        py::arg("T_min"), py::arg("T_max"), py::arg("workers") = 1);
}
