#include <gpprism/error.hh>
#include <gpprism/families.hh>
#include <gpprism/graph_io.hh>
#include <gpprism/harness.hh>
#include <gpprism/solver.hh>
#include <gpprism/structure.hh>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>

namespace py = pybind11;
using namespace gpprism;

namespace
{
    auto options_with(std::optional<double> timeout_secs) -> SolverOptions
    {
        SolverOptions options;
        if (timeout_secs)
            options.deadline = Clock::now()
                + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*timeout_secs));
        return options;
    }

    auto result_dict(const GpResult & r) -> py::dict
    {
        py::dict d;
        d["value"] = r.value;
        d["witness"] = r.witness.members();
        d["nodes"] = r.stats.nodes;
        d["millis"] = r.stats.millis;
        return d;
    }
}

PYBIND11_MODULE(_gpprism, m)
{
    static py::handle error = py::exception<Error>(m, "GpprismError", PyExc_ValueError).release();
    py::register_exception_translator([] (std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        }
        catch (const Error & e) {
            py::object instance = error(std::string(e.what()));
            instance.attr("kind") = std::string(to_string(e.kind()));
            PyErr_SetObject(error.ptr(), instance.ptr());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init([] (int n, const std::vector<std::pair<int, int>> & edges) {
            std::vector<Edge> es;
            for (auto [u, v] : edges)
                es.push_back({ u, v });
            return build_graph(n, es);
        }), py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
        .def_property_readonly("n", &Graph::size)
        .def("__len__", &Graph::size)
        .def("adjacent", &Graph::adjacent)
        .def("edges", [] (const Graph & g) {
            std::vector<std::pair<int, int>> result;
            for (auto e : g.edges())
                result.emplace_back(e.first, e.second);
            return result;
        })
        .def("labels", [] (const Graph & g) {
            std::vector<std::string> result;
            for (int v = 0 ; v < g.size() ; ++v)
                result.push_back(g.label(v));
            return result;
        })
        .def("graph6", [] (const Graph & g) { return write_graph6(g); })
        .def("__eq__", [] (const Graph & a, const Graph & b) { return a.edges() == b.edges() && a.size() == b.size(); })
        .def("__repr__", [] (const Graph & g) { return "<Graph " + write_graph6(g) + ">"; });

    m.def("parse_graph", [] (const std::string & text) { return parse_graph(text); });
    m.def("family", [] (const std::string & name, const std::vector<int> & params) {
        return generate({ family_from_name(name), params }).graph;
    }, py::arg("name"), py::arg("params") = std::vector<int>{});
    m.def("complement", [] (const Graph & g) { return complement(g); });
    m.def("complementary_prism", [] (const Graph & g) { return complementary_prism(g); });

    m.def("max_gp", [] (const Graph & g, std::optional<double> t) { return result_dict(max_gp(g, options_with(t))); },
        py::arg("g"), py::arg("timeout_secs") = py::none());
    m.def("max_gp3", [] (const Graph & g, std::optional<double> t) { return result_dict(max_gp3(g, options_with(t))); },
        py::arg("g"), py::arg("timeout_secs") = py::none());
    m.def("prism_gp", [] (const Graph & g, std::optional<double> t) {
        return result_dict(max_gp(complementary_prism(g), options_with(t)));
    }, py::arg("g"), py::arg("timeout_secs") = py::none());
    m.def("invariants", [] (const Graph & g) {
        auto b = invariant_bundle(g);
        py::dict d;
        d["omega"] = b.omega;
        d["alpha"] = b.alpha;
        d["eta"] = b.eta;
        d["gp3"] = b.gp3;
        d["gp3bar"] = b.gp3bar;
        return d;
    });
    m.def("prism_bounds", [] (const Graph & g) {
        auto b = prism_bounds(g);
        return std::pair{ b.lower, b.upper };
    });
    m.def("is_complete_multipartite", [] (const Graph & g) { return classify(g).is_complete_multipartite; });

    m.def("compute", [] (const Graph & g, std::optional<std::string> family, std::vector<int> params) {
        std::optional<FamilySpec> spec;
        if (family)
            spec = FamilySpec{ family_from_name(*family), params };
        return format_record(compute_record(g, spec));
    }, py::arg("g"), py::arg("family") = py::none(), py::arg("params") = std::vector<int>{});

    m.def("theorem_ids", &theorem_ids);
    m.def("verify", [] (const std::string & theorem, std::optional<std::string> n, int samples, std::uint64_t seed,
                int threads) {
        VerifyConfig config;
        config.theorem = theorem;
        if (n)
            config.n = parse_range(*n);
        config.samples = samples;
        config.seed = seed;
        config.threads = threads;
        TheoremReport report;
        {
            py::gil_scoped_release release;
            report = run_verify(config);
        }
        py::list rows;
        for (auto & r : report.rows) {
            py::dict d;
            d["id"] = r.id;
            d["instance"] = r.instance;
            d["theorem"] = r.theorem;
            d["predicted"] = r.predicted;
            d["exact"] = r.exact;
            d["verdict"] = std::string(to_string(r.verdict));
            rows.append(d);
        }
        return rows;
    }, py::arg("theorem"), py::arg("n") = py::none(), py::arg("samples") = 20, py::arg("seed") = 1,
        py::arg("threads") = 1);
}
