// Python bindings for the main operations. Exact rationals cross the
// boundary as canonical "a/b" strings; weights as integer tuples.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "logw/characters.hpp"
#include "logw/fock.hpp"
#include "logw/lambda_calc.hpp"

namespace py = pybind11;
using namespace logw;

namespace {

std::vector<long long> weight_tuple(const Weight& w) { return w.c; }

Weight weight_from(const RootSystemData& rs, const std::vector<long long>& c) {
    if (c.size() != static_cast<std::size_t>(rs.rank)) throw ArgumentError("weight has wrong rank");
    Weight w(rs.rank);
    for (int i = 0; i < rs.rank; ++i) w[i] = c[i];
    return w;
}

LambdaParam lambda_from(const RootSystemData& rs, int p, int hat_fund, const std::vector<long long>& s) {
    int idx = -1;
    if (hat_fund != 0) {
        for (std::size_t k = 0; k < rs.minuscule.size(); ++k)
            if (rs.minuscule[k] == hat_fund) idx = static_cast<int>(k);
        if (idx < 0) throw ArgumentError("hat must be 0 or a minuscule fundamental index");
    }
    return lambda_make(rs, p, idx, s);
}

py::dict series_dict(const QZSeries& s) {
    py::dict out;
    for (const auto& [z, qs] : s.terms) {
        py::dict inner;
        for (const auto& [e, c] : qs.terms) inner[py::str(rat_str(e))] = rat_str(c);
        out[py::tuple(py::cast(weight_tuple(z)))] = inner;
    }
    return out;
}

} // namespace

PYBIND11_MODULE(logw, m) {
    m.doc() = "exact screening-kernel and character toolkit for rescaled root lattices";

    py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    py::class_<RootSystemData>(m, "RootSystem")
        .def(py::init([](const std::string& type) { return build_root_system(type); }), py::arg("type"))
        .def_property_readonly("rank", [](const RootSystemData& rs) { return rs.rank; })
        .def_property_readonly("type", &RootSystemData::type_name)
        .def_property_readonly("cartan", [](const RootSystemData& rs) { return rs.cartan; })
        .def_property_readonly("coxeter", [](const RootSystemData& rs) { return rs.coxeter; })
        .def_property_readonly("dim_g", [](const RootSystemData& rs) { return rs.dim_g; })
        .def_property_readonly("minuscule", [](const RootSystemData& rs) { return rs.minuscule; })
        .def_property_readonly("w0_word", [](const RootSystemData& rs) { return rs.w0_word; })
        .def_property_readonly("num_positive_roots",
                               [](const RootSystemData& rs) { return rs.positive_roots.size(); })
        .def("positive_roots",
             [](const RootSystemData& rs) {
                 std::vector<std::vector<long long>> out;
                 for (const auto& r : rs.positive_roots) out.push_back(weight_tuple(r));
                 return out;
             })
        .def("pairing",
             [](const RootSystemData& rs, const std::vector<long long>& a, const std::vector<long long>& b) {
                 return rat_str(pairing(rs, weight_from(rs, a), weight_from(rs, b)));
             })
        .def("weyl_dimension",
             [](const RootSystemData& rs, const std::vector<long long>& b) {
                 return weyl_dimension(rs, weight_from(rs, b)).get_str();
             })
        .def("weyl_order", [](const RootSystemData& rs) { return enumerate_weyl(rs).size(); });

    m.def(
        "epsilon_of",
        [](const RootSystemData& rs, int p, int hat, const std::vector<long long>& s,
           const std::vector<int>& word) {
            return weight_tuple(epsilon_of(rs, lambda_from(rs, p, hat, s), word));
        },
        py::arg("rs"), py::arg("p"), py::arg("hat"), py::arg("s"), py::arg("word"),
        "carry weight of a reduced word (application order) at the given parameter");

    m.def(
        "epsilon_w0",
        [](const RootSystemData& rs, int p, int hat, const std::vector<long long>& s) {
            return weight_tuple(epsilon_of(rs, lambda_from(rs, p, hat, s), rs.w0_word));
        },
        py::arg("rs"), py::arg("p"), py::arg("hat"), py::arg("s"));

    m.def("check_alcove", [](const RootSystemData& rs, int p, int hat, const std::vector<long long>& s) {
        return check_alcove(rs, lambda_from(rs, p, hat, s));
    });
    m.def("check_novel", [](const RootSystemData& rs, int p, int hat, const std::vector<long long>& s) {
        return check_novel_full(rs, lambda_from(rs, p, hat, s));
    });

    m.def("condequiv_scan", [](const RootSystemData& rs, int p) {
        CondScanReport rep = condequiv_scan(rs, p);
        py::dict d;
        d["total"] = rep.total;
        d["alcove_count"] = rep.alcove_count;
        d["mismatches"] = rep.mismatches.size();
        d["partial_sum_condition_ok"] = rep.partial_sum_condition_ok;
        d["novel_not_alcove"] = rep.novel_not_alcove.size();
        return d;
    });

    m.def("central_charge",
          [](const RootSystemData& rs, int p) { return rat_str(central_charge(rs, p)); });
    m.def("delta", [](const RootSystemData& rs, int p, const std::vector<long long>& beta, int hat,
                      const std::vector<long long>& s) {
        return rat_str(delta(rs, p, weight_from(rs, beta), lambda_from(rs, p, hat, s)));
    });

    m.def("weyl_character", [](const RootSystemData& rs, const std::vector<long long>& beta) {
        py::dict d;
        for (const auto& [w, c] : weyl_character(rs, weight_from(rs, beta)))
            d[py::tuple(py::cast(weight_tuple(w)))] = rat_str(c);
        return d;
    });

    m.def(
        "eta_inverse_power",
        [](int l, const std::string& order) {
            py::dict d;
            for (const auto& [e, c] : eta_inverse_power(l, rat_parse(order)).terms)
                d[py::str(rat_str(e))] = rat_str(c);
            return d;
        },
        py::arg("l"), py::arg("order"));

    m.def(
        "euler_character",
        [](const RootSystemData& rs, int p, int hat, const std::vector<long long>& s, const std::string& qmax) {
            return series_dict(euler_character(rs, lambda_from(rs, p, hat, s), rat_parse(qmax)).series);
        },
        py::arg("rs"), py::arg("p"), py::arg("hat"), py::arg("s"), py::arg("qmax"));
    m.def(
        "rhs_character",
        [](const RootSystemData& rs, int p, int hat, const std::vector<long long>& s, const std::string& qmax,
           bool unsafe) {
            return series_dict(rhs_character(rs, lambda_from(rs, p, hat, s), rat_parse(qmax), Caps{}, unsafe).series);
        },
        py::arg("rs"), py::arg("p"), py::arg("hat"), py::arg("s"), py::arg("qmax"), py::arg("unsafe") = false);
    m.def(
        "compare_characters",
        [](const RootSystemData& rs, int p, int hat, const std::vector<long long>& s, const std::string& qmax,
           bool unsafe) {
            LambdaParam lam = lambda_from(rs, p, hat, s);
            CompareReport rep =
                compare_sides(euler_character(rs, lam, rat_parse(qmax)),
                              rhs_character(rs, lam, rat_parse(qmax), Caps{}, unsafe));
            py::dict d;
            d["matches"] = rep.matches;
            d["diffs"] = rep.diffs.size();
            return d;
        },
        py::arg("rs"), py::arg("p"), py::arg("hat"), py::arg("s"), py::arg("qmax"), py::arg("unsafe") = false);

    m.def(
        "kernel_graded_dims",
        [](const RootSystemData& rs, int p, int hat, const std::vector<long long>& s, const std::vector<int>& J,
           const std::string& dmax, bool refine) {
            GradedKernelReport rep =
                kernel_graded_dims(rs, lambda_from(rs, p, hat, s), J, rat_parse(dmax), refine);
            py::list entries;
            for (const auto& e : rep.entries) {
                py::dict d;
                d["delta"] = rat_str(e.delta);
                d["ambient"] = e.ambient;
                d["kernel"] = e.kernel;
                if (refine) {
                    py::dict w;
                    for (const auto& [wt, we] : e.by_weight)
                        if (we.kernel) w[py::tuple(py::cast(weight_tuple(wt)))] = we.kernel;
                    d["weights"] = w;
                }
                entries.append(d);
            }
            return entries;
        },
        py::arg("rs"), py::arg("p"), py::arg("hat"), py::arg("s"), py::arg("J"), py::arg("deltamax"),
        py::arg("refine") = false);

    m.def("relation_suite", [](const RootSystemData& rs, int p, const std::string& dmax) {
        RelationReport rep = relation_suite(rs, p, rat_parse(dmax));
        py::dict d;
        for (const auto& c : rep.checks) d[py::str(c.name)] = c.pass;
        d["all_pass"] = rep.all_pass;
        return d;
    });

    m.def("cohomology_dim", [](const RootSystemData& rs, const std::vector<long long>& mu, int i, int n) {
        return cohomology_dim(rs, weight_from(rs, mu), i, n);
    });
}
