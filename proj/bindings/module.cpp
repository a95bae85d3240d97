#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rackcollapse/ffield.hpp"
#include "rackcollapse/json_io.hpp"
#include "rackcollapse/nichols.hpp"
#include "rackcollapse/rack.hpp"
#include "rackcollapse/verify.hpp"

namespace py = pybind11;
using namespace rackcollapse;

namespace {

std::vector<uint16_t> perm_images(const Perm& p) { return p.img; }

Perm perm_of(const std::vector<uint16_t>& images) {
    Perm p{images};
    std::vector<bool> hit(images.size(), false);
    for (uint16_t v : images) {
        if (v >= images.size() || hit[v]) throw std::invalid_argument("image array is not a bijection");
        hit[v] = true;
    }
    return p;
}

// Documents cross the boundary as JSON strings; the python side parses
// them with the standard json module.
std::string classify_json(const std::string& group_id, uint64_t class_order, uint64_t seed) {
    GroupBundle b = build_group_by_id(group_id);
    RunConfig cfg;
    cfg.seed = seed;
    ordered_json rows = ordered_json::array();
    for (const ClassOrbit& c : conjugacy_classes(b.group, cfg.caps.group)) {
        if (class_order != 0 && element_order(c.representative) != class_order) continue;
        ConjClassRack rack(b.group, c);
        const ClassifyResult res = classify(b.group, b.id, rack, b.hints, cfg.budgets, seed, cfg.caps);
        ordered_json row;
        row["representative"] = perm_to_json(c.representative);
        row["size"] = c.size();
        row["element_order"] = res.order;
        row["is_real"] = res.is_real_class;
        row["centralizer_order"] = res.centralizer_order;
        for (const auto& [kind, out] : res.outcomes) {
            ordered_json o;
            o["found"] = out.certificate.has_value();
            if (out.certificate) o["certificate"] = cert_to_json(*out.certificate);
            else o["reason"] = out.not_found_reason;
            row["detectors"][to_string(kind)] = o;
        }
        rows.push_back(std::move(row));
    }
    return rows.dump();
}

std::string verify_paper_json(uint64_t seed, unsigned h_max) {
    RunConfig cfg;
    cfg.seed = seed;
    cfg.threads = threads_from_env();
    return checks_to_json(cfg, run_verification_suite(cfg, h_max)).dump();
}

bool verify_cert_json(const std::string& cert_json) {
    const CollapseCertificate cert = cert_from_json(ordered_json::parse(cert_json));
    GroupBundle b = build_group_by_id(cert.group_id);
    return verify(cert, b.group);
}

std::string braiding_json(const std::string& group_id, const std::vector<uint16_t>& rep) {
    GroupBundle b = build_group_by_id(group_id);
    const Perm g = perm_of(rep);
    if (!b.group.contains(g)) throw std::invalid_argument("element is not in the group");
    PermGroup C = centralizer(b.group, g);
    if (!C.is_abelian()) throw std::invalid_argument("centralizer is not abelian");
    AbelianData A(std::move(C));
    ordered_json rows = ordered_json::array();
    for (const Character& chi : characters(A)) {
        const BraidingMatrix B = braiding(b.group, g, A, chi);
        const Verdict v = verdict(B);
        ordered_json matrix = ordered_json::array();
        for (size_t i = 0; i < B.size; ++i) {
            ordered_json row = ordered_json::array();
            for (size_t j = 0; j < B.size; ++j)
                row.push_back(ordered_json::array({B.at(i, j).order(), B.at(i, j).exponent()}));
            matrix.push_back(std::move(row));
        }
        rows.push_back(ordered_json{{"exponents", chi.exponents()},
                                    {"matrix", matrix},
                                    {"verdict", {{"infinite", v.infinite}, {"rule", v.rule}}}});
    }
    return rows.dump();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "rack-theoretic collapse analysis of Suzuki and Ree groups";

    py::register_exception<TooLargeError>(m, "TooLargeError");
    py::register_exception<OrbitCapError>(m, "OrbitCapError");

    py::class_<FieldCtx, std::shared_ptr<FieldCtx>>(m, "FieldCtx")
        .def(py::init<unsigned, unsigned>(), py::arg("p"), py::arg("m"))
        .def_property_readonly("p", &FieldCtx::p)
        .def_property_readonly("m", &FieldCtx::m)
        .def_property_readonly("q", &FieldCtx::q)
        .def_property_readonly("modulus", &FieldCtx::modulus_value)
        .def_property_readonly("delta_enabled", &FieldCtx::delta_enabled)
        .def("add", [](const FieldCtx& f, uint32_t a, uint32_t b) { return f.add_values(a, b); })
        .def("mul", [](const FieldCtx& f, uint32_t a, uint32_t b) { return f.mul_values(a, b); })
        .def("inv", [](const FieldCtx& f, uint32_t a) { return f.inv_value(a); })
        .def("pow", [](const FieldCtx& f, uint32_t a, uint64_t e) { return f.pow_value(a, e); })
        .def("delta", [](std::shared_ptr<FieldCtx> f, uint32_t a) { return delta(f->from_value(a)).value; })
        .def("delta_inv",
             [](std::shared_ptr<FieldCtx> f, uint32_t a) { return delta_inv(f->from_value(a)).value; })
        .def("phi", [](std::shared_ptr<FieldCtx> f, uint32_t a) { return phi(f->from_value(a)).value; });

    py::class_<Perm>(m, "Perm")
        .def(py::init(&perm_of), py::arg("images"))
        .def_property_readonly("images", &perm_images)
        .def_property_readonly("degree", [](const Perm& p) { return p.degree(); })
        .def("order", &element_order)
        .def("inverse", &Perm::inverse)
        .def("__mul__", &compose)
        .def("__eq__", [](const Perm& a, const Perm& b) { return a == b; })
        .def("__repr__", [](const Perm& p) { return perm_to_json(p).dump(); });
    m.def("conj", &conj, py::arg("g"), py::arg("x"), "g x g^-1");

    py::class_<PermGroup>(m, "PermGroup")
        .def_static(
            "from_generators",
            [](const std::vector<Perm>& gens, size_t degree) {
                return PermGroup::from_generators(gens, degree);
            },
            py::arg("generators"), py::arg("degree"))
        .def_property_readonly("order", &PermGroup::order)
        .def_property_readonly("degree", [](const PermGroup& g) { return g.degree(); })
        .def_property_readonly("generators", [](const PermGroup& g) { return g.generators(); })
        .def("contains", &PermGroup::contains)
        .def("is_abelian", &PermGroup::is_abelian)
        .def("elements", &PermGroup::elements, py::arg("cap") = 1000000);

    m.def("build_group", [](const std::string& id) { return build_group_by_id(id).group; },
          py::arg("group_id"),
          "sz:h=H, sz2-affine, psl2:q=Q, ree-g2-3, ree-g2-3-borel, sz-tzu:h=H, product(a,b)");
    m.def("conj_orbit_size", [](const PermGroup& g, const Perm& x) {
        return conj_orbit(x, g.generators()).size();
    });
    m.def("centralizer_order",
          [](const PermGroup& g, const Perm& x) { return centralizer(g, x).order(); });
    m.def("is_real", [](const PermGroup& g, const Perm& x) { return is_real(g, x); });
    m.def("az_real_odd", [](const PermGroup& g, const Perm& x) { return az_real_odd(g, x); });
    m.def("conjugacy_class_count",
          [](const PermGroup& g) { return conjugacy_classes(g).size(); });
    m.def("class_representatives", [](const PermGroup& g) {
        std::vector<Perm> reps;
        for (const ClassOrbit& c : conjugacy_classes(g)) reps.push_back(c.representative);
        return reps;
    });
    m.def("direct_product", &direct_product);

    m.def("classify", &classify_json, py::arg("group_id"), py::arg("class_order") = 0,
          py::arg("seed") = 1, "per-class detector outcomes as a JSON string");
    m.def("braiding", &braiding_json, py::arg("group_id"), py::arg("representative"),
          "abelian-subrack braiding matrices and verdicts as a JSON string");
    m.def("verify_certificate", &verify_cert_json, py::arg("certificate_json"));
    m.def("verify_paper", &verify_paper_json, py::arg("seed") = 1, py::arg("h_max") = 1,
          "run the full verification suite, returning the report as a JSON string");
    m.def(
        "involution_braiding_report",
        [](unsigned h) {
            const InvolutionBraidingReport rep = involution_braiding_analysis(h);
            ordered_json j{{"h", rep.h},
                           {"span_contains_one", rep.span_contains_one},
                           {"characters", rep.per_character.size()},
                           {"all_infinite", rep.all_infinite}};
            return j.dump();
        },
        py::arg("h") = 1);
    m.def("frobenius_braiding_report", [] {
        const FrobeniusBraidingReport rep = frobenius_braiding_analysis();
        ordered_json j{{"centralizer_order", rep.centralizer_order},
                       {"subrack_size", rep.subrack_size},
                       {"all_infinite", rep.all_infinite},
                       {"characters", rep.per_character.size()}};
        return j.dump();
    });

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
