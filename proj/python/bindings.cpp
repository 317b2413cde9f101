#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kneser/canonical.hpp"
#include "kneser/hecke.hpp"
#include "kneser/neighbor.hpp"
#include "kneser/verify.hpp"
#include "kneser/weight_enum.hpp"

namespace py = pybind11;
using namespace kneser;

namespace {

py::object to_py(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.str()); }

py::object to_py(const Rational& v) { return py::module_::import("fractions").attr("Fraction")(to_string(v)); }

Code make_code(int q, int length, const std::vector<std::vector<int>>& rows) {
    Matrix m;
    for (const auto& r : rows) {
        Vector v;
        for (int s : r) {
            if (s < 0 || s >= q) throw std::invalid_argument("symbol outside GF(" + std::to_string(q) + ")");
            v.push_back(static_cast<Symbol>(s));
        }
        m.push_back(std::move(v));
    }
    return rref(Field::of(q), length, std::move(m));
}

py::list rows_of(const Code& c) {
    py::list out;
    for (const auto& r : c.generators()) {
        py::list row;
        for (Symbol s : r) row.append(static_cast<int>(s));
        out.append(row);
    }
    return out;
}

py::dict spectrum_dict(const Spectrum& s) {
    py::dict d;
    d["classes"] = s.classes;
    d["dims"] = s.dims;
    d["table_row"] = s.table_row();
    py::list ev;
    for (const auto& es : s.spaces) ev.append(to_py(es.eigenvalue));
    d["eigenvalues"] = ev;
    d["complete"] = s.complete;
    d["mass_vector_ok"] = s.mass_vector_ok;
    d["orthogonal"] = s.orthogonal;
    d["collisions"] = s.collisions;
    return d;
}

}  // namespace

PYBIND11_MODULE(_kneser, m) {
    m.doc() = "Self-dual code classification by Kneser neighbors and Hecke spectra";
    m.attr("__version__") = KNESER_VERSION;

    py::class_<TypeSpec>(m, "TypeSpec")
        .def(py::init([](const std::string& s) { return TypeSpec::parse(s); }), py::arg("name"))
        .def_property_readonly("label", &TypeSpec::label)
        .def_property_readonly("q", &TypeSpec::q)
        .def_property_readonly("requires_allones", &TypeSpec::requires_allones)
        .def("check_length", &TypeSpec::check_length)
        .def("alpha", [](const TypeSpec& t, int mm, int n) { return to_py(alpha(mm, t, n)); })
        .def("nu", [](const TypeSpec& t, int mm, int n) { return to_py(nu(mm, t, n)); })
        .def("seed_code", &seed_code, py::arg("length"))
        .def("__repr__", [](const TypeSpec& t) { return "TypeSpec('" + t.label() + "')"; });

    py::class_<Code>(m, "Code")
        .def(py::init(&make_code), py::arg("q"), py::arg("length"), py::arg("rows"))
        .def_property_readonly("q", [](const Code& c) { return c.field().q(); })
        .def_property_readonly("length", &Code::length)
        .def_property_readonly("dimension", &Code::dimension)
        .def_property_readonly("generators", &rows_of)
        .def("is_member", [](const Code& c, const TypeSpec& t) { return is_member(c, t); })
        .def("permuted", [](const Code& c, const std::vector<int>& p) { return c.permuted(p); })
        .def("__eq__", [](const Code& a, const Code& b) { return a == b; })
        .def("__repr__", [](const Code& c) {
            return "Code(q=" + std::to_string(c.field().q()) + ", length=" + std::to_string(c.length()) +
                   ", dimension=" + std::to_string(c.dimension()) + ")";
        });

    m.def(
        "canonical_form",
        [](const Code& c) {
            auto cf = canonical_form(c);
            py::dict d;
            d["canon"] = cf.canon;
            d["aut_order"] = to_py(cf.aut_order);
            d["fingerprint"] = cf.fingerprint;
            d["labeling"] = cf.labeling;
            return d;
        },
        py::arg("code"));

    py::class_<ClassDatabase>(m, "ClassDatabase")
        .def_property_readonly("type", [](const ClassDatabase& db) { return db.type; })
        .def_property_readonly("length", [](const ClassDatabase& db) { return db.length; })
        .def_property_readonly("complete", [](const ClassDatabase& db) { return db.complete; })
        .def_property_readonly("representatives",
                               [](const ClassDatabase& db) {
                                   std::vector<Code> out;
                                   for (const auto& cl : db.classes) out.push_back(cl.representative);
                                   return out;
                               })
        .def_property_readonly("aut_orders",
                               [](const ClassDatabase& db) {
                                   py::list out;
                                   for (const auto& cl : db.classes) out.append(to_py(cl.aut_order));
                                   return out;
                               })
        .def_property_readonly("fingerprints",
                               [](const ClassDatabase& db) {
                                   std::vector<std::string> out;
                                   for (const auto& cl : db.classes) out.push_back(cl.fingerprint);
                                   return out;
                               })
        .def("mass", [](const ClassDatabase& db) { return to_py(db.mass()); })
        .def("find", [](const ClassDatabase& db, const Code& c) { return db.find(c); })
        .def("to_json", [](const ClassDatabase& db) { return to_json(db); })
        .def("__len__", [](const ClassDatabase& db) { return db.classes.size(); });

    m.def(
        "classify",
        [](const std::string& type, int length, int threads, bool orbits) {
            TypeSpec t = TypeSpec::parse(type);
            t.check_length(length);
            ClassifyOptions o;
            o.threads = threads;
            o.use_automorphisms = orbits;
            py::gil_scoped_release release;
            return classify(t, length, std::nullopt, o);
        },
        py::arg("type"), py::arg("length"), py::arg("threads") = 1, py::arg("orbits") = false);
    m.def("database_from_json", &database_from_json, py::arg("text"));
    m.def("neighbors", [](const Code& c, const TypeSpec& t) { return neighbors(c, t); }, py::arg("code"),
          py::arg("type"));

    m.def(
        "hecke_matrix", [](const ClassDatabase& db, int k) { return hecke_matrix(db, k).entries; }, py::arg("db"),
        py::arg("k") = 1);
    m.def(
        "spectrum", [](const ClassDatabase& db) { return spectrum_dict(spectrum(hecke_matrix(db), db)); },
        py::arg("db"));

    m.def(
        "cwe",
        [](const Code& c, int genus) {
            SparseWE w = cwe(c, genus);
            py::dict d;
            for (const auto& [x, coeff] : w.terms) {
                py::tuple key(x.exponents.size());
                for (std::size_t i = 0; i < x.exponents.size(); ++i)
                    key[i] = py::make_tuple(x.exponents[i].first, x.exponents[i].second);
                d[key] = coeff;
            }
            return d;
        },
        py::arg("code"), py::arg("genus"),
        "Dict from monomials (tuples of (variable index, exponent)) to coefficients.");
    m.def(
        "filtration_dims", [](const ClassDatabase& db, int m_max) { return filtration_dims(db, m_max); },
        py::arg("db"), py::arg("m_max"));

    m.def(
        "verify",
        [](const ClassDatabase& db) {
            DataSetReport r = verify_data_set(db);
            py::dict d;
            for (const auto& c : r.checks) d[py::str(c.name)] = to_string(c.status);
            return d;
        },
        py::arg("db"), "Runs the invariant suite; maps check names to PASS, FAIL or -.");
}
