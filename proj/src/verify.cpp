#include "rackcollapse/verify.hpp"

#include <algorithm>

#include "rackcollapse/nichols.hpp"
#include "rackcollapse/rack.hpp"
#include "rackcollapse/ree_small.hpp"
#include "rackcollapse/suzuki.hpp"

namespace rackcollapse {

namespace {

struct Suite {
    const RunConfig& cfg;
    std::vector<CheckResult> results;

    void add(const std::string& name, bool pass, ordered_json details = ordered_json::object()) {
        results.push_back({name, pass, std::move(details)});
    }

    void run_check(const std::string& name, const std::function<void(CheckResult&)>& body) {
        CheckResult r{name, false, ordered_json::object()};
        try {
            body(r);
        } catch (const std::exception& e) {
            r.pass = false;
            r.details["error"] = e.what();
        }
        results.push_back(std::move(r));
    }
};

void field_checks(Suite& suite, unsigned m) {
    const std::string tag = "gf" + std::to_string(1u << m);
    FieldCtx f(2, m);

    suite.run_check("field-delta-squared-" + tag, [&](CheckResult& r) {
        for (FieldElem x : f.elements())
            if (delta(delta(x)) != x * x) return;
        r.pass = true;
        r.details["instances"] = f.q();
    });

    suite.run_check("field-phi-bijection-" + tag, [&](CheckResult& r) {
        std::vector<uint32_t> values;
        for (FieldElem x : f.elements()) {
            if (x.is_zero()) continue;
            values.push_back(phi(x).value);
            // k delta(k) = 1 forces k = 1
            if (phi(x).is_one() && !x.is_one()) return;
        }
        std::sort(values.begin(), values.end());
        if (std::unique(values.begin(), values.end()) != values.end()) return;
        r.pass = values.size() == f.q() - 1;
        r.details["distinct_values"] = values.size();
    });
}

void matrix_identity_checks(Suite& suite) {
    FieldCtx f(2, 3);

    suite.run_check("suzuki-u-product-law-gf8", [&](CheckResult& r) {
        uint64_t count = 0;
        for (FieldElem a : f.elements())
            for (FieldElem b : f.elements())
                for (FieldElem c : f.elements())
                    for (FieldElem d : f.elements()) {
                        const Mat4 lhs = mul(u_elem(a, b), u_elem(c, d));
                        const Mat4 rhs = u_elem(a + c, a * delta(c) + b + d);
                        if (lhs != rhs) return;
                        ++count;
                    }
        r.pass = count == 4096;
        r.details["instances"] = count;
    });

    suite.run_check("suzuki-torus-conjugation-gf8", [&](CheckResult& r) {
        uint64_t count = 0;
        for (FieldElem k : f.elements()) {
            if (k.is_zero()) continue;
            const Mat4 t = t_elem(k);
            const Mat4 tinv = inverse(t);
            for (FieldElem a : f.elements())
                for (FieldElem b : f.elements()) {
                    const Mat4 lhs = mul(mul(tinv, u_elem(a, b)), t);
                    const Mat4 rhs = u_elem(a * k, b * k * delta(k));
                    if (lhs != rhs) return;
                    ++count;
                }
        }
        r.pass = count == 448;
        r.details["instances"] = count;
    });

    suite.run_check("suzuki-form-preservation", [&](CheckResult& r) {
        const Mat4 j = w0_elem(f);
        if (mul(j, j) != Mat4::identity(f)) return;
        for (FieldElem a : f.elements())
            for (FieldElem b : f.elements())
                if (!preserves_form(u_elem(a, b))) return;
        for (FieldElem k : f.elements())
            if (!k.is_zero() && !preserves_form(t_elem(k))) return;
        r.pass = preserves_form(j);
    });
}

void sz2_checks(Suite& suite) {
    SzContext sz(0);
    const PermGroup& G = sz.group();
    const std::vector<ClassOrbit> classes = conjugacy_classes(G);

    suite.run_check("sz2-class-count", [&](CheckResult& r) {
        std::vector<uint64_t> orders;
        for (const ClassOrbit& c : classes) orders.push_back(element_order(c.representative));
        std::sort(orders.begin(), orders.end());
        r.details["classes"] = classes.size();
        r.details["element_orders"] = orders;
        r.pass = classes.size() == 5 && orders == std::vector<uint64_t>{1, 2, 4, 4, 5};
    });

    suite.run_check("sz2-affine-model-iso", [&](CheckResult& r) {
        PermGroup affine = sz2_affine_model();
        auto sizes = [](const std::vector<ClassOrbit>& cs) {
            std::vector<uint64_t> out;
            for (const ClassOrbit& c : cs) out.push_back(c.size());
            std::sort(out.begin(), out.end());
            return out;
        };
        const std::vector<ClassOrbit> affine_classes = conjugacy_classes(affine);
        r.details["order"] = affine.order();
        r.pass = affine.order() == G.order() && sizes(affine_classes) == sizes(classes);
        if (!r.pass) return;
        // Order-5 elements together with the identity form an abelian
        // normal subgroup (the translations), and there are 10 elements
        // of order 4.
        std::vector<Perm> order5{Perm::identity(5)};
        uint64_t order4 = 0;
        for (const Perm& x : affine.elements()) {
            if (element_order(x) == 5) order5.push_back(x);
            if (element_order(x) == 4) ++order4;
        }
        PermGroup N = PermGroup::from_generators(order5, 5);
        bool normal = N.order() == 5 && N.is_abelian();
        for (const Perm& g : affine.generators())
            for (const Perm& n : order5) normal = normal && N.contains(conj(g, n));
        r.details["order4_elements"] = order4;
        r.pass = normal && order4 == 10;
    });

    suite.run_check("sz2-kthulhu-exhaustive", [&](CheckResult& r) {
        const std::vector<PermGroup> subs = all_subgroups(G);
        r.details["subgroups"] = subs.size();
        if (subs.size() != 14) return;
        ordered_json per_class = ordered_json::array();
        bool all = true;
        for (const ClassOrbit& c : classes) {
            ConjClassRack rack(G, c);
            const KthulhuReport rep = kthulhu_exhaustive(G, rack);
            all = all && rep.exhaustive && rep.proved;
            per_class.push_back(ordered_json{{"element_order", element_order(c.representative)},
                                             {"proved", rep.proved}});
        }
        r.details["per_class"] = per_class;
        r.pass = all;
    });

}

void involution_square_check(Suite& suite) {
    suite.run_check("sz2-involution-square-witness", [&](CheckResult& r) {
        SzContext sz(0);
        const ClassOrbit* invol = nullptr;
        const auto classes = conjugacy_classes(sz.group());
        for (const ClassOrbit& c : classes)
            if (element_order(c.representative) == 2) invol = &c;
        if (invol == nullptr) return;
        for (const Perm& u : invol->elements)
            for (const Perm& v : invol->elements) {
                if (u == v) continue;
                const Perm uv = compose(u, v), vu = compose(v, u);
                if (compose(uv, uv) != compose(vu, vu)) {
                    r.pass = true;
                    r.details["u"] = perm_to_json(u);
                    r.details["v"] = perm_to_json(v);
                    return;
                }
            }
    });
}

void sz8_checks(Suite& suite) {
    SzContext sz(1);
    const PermGroup& G = sz.group();
    const FieldCtx& f = sz.field();
    const std::string group_id = "sz:h=1";
    const std::vector<ClassOrbit> classes = conjugacy_classes(G);

    suite.run_check("sz8-class-count", [&](CheckResult& r) {
        r.details["classes"] = classes.size();
        r.pass = classes.size() == 11;
    });

    suite.run_check("sz8-involution-class", [&](CheckResult& r) {
        std::vector<const ClassOrbit*> invol;
        for (const ClassOrbit& c : classes)
            if (element_order(c.representative) == 2) invol.push_back(&c);
        if (invol.size() != 1) return;
        const uint64_t size = invol[0]->size();
        const uint64_t cent = centralizer(G, invol[0]->representative).order();
        r.details["size"] = size;
        r.details["centralizer_order"] = cent;
        r.pass = size == 455 && cent == 64;
    });

    suite.run_check("sz8-order4-type-f", [&](CheckResult& r) {
        ordered_json certs = ordered_json::array();
        unsigned found = 0;
        for (const ClassOrbit& c : classes) {
            if (element_order(c.representative) != 4) continue;
            // A representative in U-form, then four torus conjugates.
            std::optional<Perm> base;
            for (uint32_t a = 1; a < f.q() && !base; ++a)
                for (uint32_t b = 0; b < f.q() && !base; ++b) {
                    Perm u = sz.u_perm(f.from_value(a), f.from_value(b));
                    if (c.contains(u)) base = std::move(u);
                }
            if (!base) return;
            std::vector<Perm> ws;
            for (uint32_t k = 1; k <= 4; ++k)
                ws.push_back(conj(sz.t_perm(f.from_value(k)), *base));
            const std::array<Perm, 4> quad{ws[0], ws[1], ws[2], ws[3]};
            if (!check_type_F(quad)) return;
            CollapseCertificate cert;
            cert.kind = CertKind::F;
            cert.group_id = group_id;
            cert.class_rep = c.representative;
            cert.witnesses = ws;
            cert.seed = 0;
            if (!verify(cert, G)) return;
            certs.push_back(cert_to_json(cert));
            ++found;
        }
        r.details["certificates"] = certs;
        r.pass = found == 2;
    });

    suite.run_check("sz8-torus-type-c", [&](CheckResult& r) {
        const Perm u10 = sz.u_perm(f.one(), f.zero());
        ordered_json entries = ordered_json::array();
        for (uint32_t kv = 2; kv < f.q(); ++kv) {  // k = 1 gives the trivial torus element
            const FieldElem k = f.from_value(kv);
            const Perm t = sz.t_perm(k);
            if (t.is_identity()) return;
            const Perm s = compose(t.inverse(), u10);
            std::vector<Perm> H_gens{t};
            for (Perm& u : sz.uminus_gens()) H_gens.push_back(std::move(u));
            const TypeCOutcome out = check_type_C(t, s, H_gens);
            if (!out.ok || out.orbit_r != 64 || out.orbit_s != 64) return;
            CollapseCertificate cert;
            cert.kind = CertKind::C;
            cert.group_id = group_id;
            cert.class_rep = t;
            cert.witnesses = {t, s};
            cert.subgroup_gens = H_gens;
            cert.seed = 0;
            if (!verify(cert, G)) return;
            entries.push_back(ordered_json{{"k", kv},
                                           {"orbit_r", out.orbit_r},
                                           {"orbit_s", out.orbit_s},
                                           {"certificate", cert_to_json(cert)}});
        }
        r.details["witnesses"] = entries;
        r.pass = entries.size() == f.q() - 2;
    });

    suite.run_check("sz8-odd-classes-real", [&](CheckResult& r) {
        ordered_json rows = ordered_json::array();
        bool all = true;
        unsigned odd_classes = 0;
        for (const ClassOrbit& c : classes) {
            const uint64_t ord = element_order(c.representative);
            if (ord <= 1 || ord % 2 == 0) continue;
            ++odd_classes;
            const bool real = c.contains(c.representative.inverse());
            const bool az = az_real_odd(G, c.representative);
            all = all && real && az;
            rows.push_back(ordered_json{{"element_order", ord}, {"real", real}, {"az_real_odd", az}});
        }
        r.details["odd_classes"] = rows;
        r.pass = all && odd_classes == 7;
    });
}

void involution_braiding_checks(Suite& suite) {
    suite.run_check("tzu-involution-braiding", [&](CheckResult& r) {
        const InvolutionBraidingReport rep = involution_braiding_analysis(1);
        if (!rep.all_infinite || !rep.span_contains_one || rep.per_character.size() != 8) return;
        bool rules_ok = true;
        ordered_json rows = ordered_json::array();
        for (const CharacterVerdict& cv : rep.per_character) {
            const bool trivial =
                std::all_of(cv.exponents.begin(), cv.exponents.end(), [](uint32_t e) { return e == 0; });
            if (trivial) rules_ok = rules_ok && cv.v.rule == "R1";
            else if (cv.chi_g.is_minus_one()) rules_ok = rules_ok && cv.v.rule == "R2";
            else rules_ok = rules_ok && cv.v.rule == "R1";
            rows.push_back(ordered_json{{"exponents", cv.exponents}, {"rule", cv.v.rule}});
        }
        r.details["characters"] = rows;
        r.pass = rules_ok;
    });

    suite.run_check("phi-symmetric-span-gf8", [&](CheckResult& r) {
        FieldCtx f(2, 3);
        std::vector<FieldElem> gens;
        for (uint32_t v = 2; v < f.q(); ++v)
            gens.push_back(phi(f.from_value(v)) + phi(inv(f.from_value(v))));
        r.pass = f2_span(gens).contains(f.one());
    });

    suite.run_check("phi-symmetric-span-gf32", [&](CheckResult& r) {
        const InvolutionBraidingReport rep = involution_braiding_analysis(2);
        r.pass = rep.span_contains_one;
    });
}

void ree_checks(Suite& suite) {
    ReeG23 ree = build_2g2_3();
    const PermGroup& G = ree.group;

    suite.run_check("ree-g2-order", [&](CheckResult& r) {
        r.details["order"] = G.order();
        r.details["degree"] = G.degree();
        r.pass = G.order() == 1512 && G.degree() == 9 && element_order(ree.phi) == 3;
    });

    suite.run_check("ree-g2-psl28-subgroup", [&](CheckResult& r) {
        bool contained = true;
        for (const Perm& g : ree.psl2_8.generators()) contained = contained && G.contains(g);
        r.pass = contained && ree.psl2_8.order() == 504 && G.order() / ree.psl2_8.order() == 3;
    });

    suite.run_check("ree-g2-omega-braiding", [&](CheckResult& r) {
        const FrobeniusBraidingReport rep = frobenius_braiding_analysis();
        r.details["centralizer_order"] = rep.centralizer_order;
        r.details["subrack_size"] = rep.subrack_size;
        ordered_json rows = ordered_json::array();
        bool rules_ok = true;
        for (const CharacterVerdict& cv : rep.per_character) {
            rules_ok = rules_ok && (cv.v.rule == "R1" || cv.v.rule == "R3");
            rules_ok = rules_ok && (cv.chi_g.is_one() ? cv.v.rule == "R1" : cv.v.rule == "R3");
            rows.push_back(ordered_json{{"exponents", cv.exponents}, {"rule", cv.v.rule}});
        }
        r.details["characters"] = rows;
        r.pass = rep.centralizer_order == 18 && rep.subrack_size == 3 && rep.subrack_commutes &&
                 rep.cyclic_conjugator_found && rep.transversal_independent && rep.all_infinite &&
                 rep.per_character.size() == 9 && rules_ok;
    });

    suite.run_check("ree-g2-borel-orbits", [&](CheckResult& r) {
        const ClassOrbit orbit = conj_orbit(ree.phi, ree.borel_ext.generators());
        std::vector<Perm> cent;
        for (const Perm& x : ree.borel_b1.elements())
            if (compose(x, ree.phi) == compose(ree.phi, x)) cent.push_back(x);
        std::sort(cent.begin(), cent.end());
        std::vector<Perm> expected{Perm::identity(9), ree.u11};
        std::sort(expected.begin(), expected.end());
        r.details["borel_order"] = ree.borel_b1.order();
        r.details["ext_order"] = ree.borel_ext.order();
        r.details["phi_orbit"] = orbit.size();
        r.details["centralizer_in_b1"] = cent.size();
        r.pass = ree.borel_b1.order() == 56 && ree.borel_ext.order() == 168 && orbit.size() == 28 &&
                 cent == expected;
    });

    suite.run_check("ree-g2-phi-not-real", [&](CheckResult& r) {
        r.pass = !is_real(G, ree.phi);
    });

    suite.run_check("ree-g2-order3-classes", [&](CheckResult& r) {
        const std::vector<ClassOrbit> classes = conjugacy_classes(G);
        std::vector<const ClassOrbit*> order3;
        for (const ClassOrbit& c : classes)
            if (element_order(c.representative) == 3) order3.push_back(&c);
        if (order3.size() != 3) return;
        unsigned real = 0;
        std::vector<const ClassOrbit*> nonreal;
        for (const ClassOrbit* c : order3) {
            if (c->contains(c->representative.inverse())) ++real;
            else nonreal.push_back(c);
        }
        r.details["order3_classes"] = order3.size();
        r.details["real"] = real;
        // The two non-real classes are exchanged by inversion.
        r.pass = real == 1 && nonreal.size() == 2 &&
                 nonreal[1]->contains(nonreal[0]->representative.inverse()) &&
                 nonreal[0]->contains(nonreal[1]->representative.inverse());
    });
}

void product_checks(Suite& suite) {
    suite.run_check("product-type-c", [&](CheckResult& r) {
        Psl2Context psl(8);
        const PermGroup& P = psl.group();
        Perm m;
        for (const ClassOrbit& c : conjugacy_classes(P))
            if (element_order(c.representative) == 7) {
                m = c.representative;
                break;
            }
        if (m.degree() == 0) return;
        PermGroup G2 = direct_product(P, P);
        const Perm pair = product_embed(m, m);
        ConjClassRack rack = conj_rack(G2, pair);
        const FindOutcome out = find_type(CertKind::C, G2, "product(psl2:q=8,psl2:q=8)", rack,
                                          SearchStrategy::Exhaustive, {}, {}, suite.cfg.seed);
        if (!out.certificate) return;
        r.details["certificate"] = cert_to_json(*out.certificate);
        r.details["scanned"] = out.scanned;
        r.pass = verify(*out.certificate, G2);
    });
}

} // namespace

std::vector<CheckResult> run_verification_suite(const RunConfig& cfg, unsigned h_max) {
    Suite suite{cfg, {}};
    field_checks(suite, 3);
    field_checks(suite, 5);
    matrix_identity_checks(suite);
    sz2_checks(suite);
    if (h_max >= 1) sz8_checks(suite);
    involution_braiding_checks(suite);
    ree_checks(suite);
    product_checks(suite);
    involution_square_check(suite);

    // Every certificate embedded in the details re-verifies through the
    // JSON round trip against a freshly built group.
    Suite round{cfg, {}};
    round.run_check("certificate-roundtrip", [&](CheckResult& r) {
        uint64_t count = 0;
        std::map<std::string, GroupBundle> groups;
        std::function<void(const ordered_json&)> walk = [&](const ordered_json& node) {
            if (node.is_object()) {
                if (node.contains("kind") && node.contains("witnesses") && node.contains("group")) {
                    const CollapseCertificate cert = cert_from_json(node);
                    auto it = groups.find(cert.group_id);
                    if (it == groups.end())
                        it = groups.emplace(cert.group_id, build_group_by_id(cert.group_id)).first;
                    if (!verify(cert, it->second.group)) throw std::logic_error("round-trip verify failed");
                    ++count;
                    return;
                }
                for (const auto& kv : node.items()) walk(kv.value());
            } else if (node.is_array()) {
                for (const auto& v : node) walk(v);
            }
        };
        for (const CheckResult& c : suite.results) walk(c.details);
        r.details["certificates"] = count;
        r.pass = count > 0;
    });
    for (CheckResult& c : round.results) suite.results.push_back(std::move(c));
    return suite.results;
}

ordered_json checks_to_json(const RunConfig& cfg, const std::vector<CheckResult>& checks) {
    ordered_json doc = make_document(cfg, "verify-paper");
    ordered_json arr = ordered_json::array();
    size_t passed = 0;
    for (const CheckResult& c : checks) {
        arr.push_back(ordered_json{{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
        if (c.pass) ++passed;
    }
    doc["checks"] = arr;
    doc["passed"] = passed;
    doc["failed"] = checks.size() - passed;
    doc["ok"] = passed == checks.size();
    return doc;
}

} // namespace rackcollapse
