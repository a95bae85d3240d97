#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "rackcollapse/json_io.hpp"
#include "rackcollapse/nichols.hpp"
#include "rackcollapse/rack.hpp"
#include "rackcollapse/verify.hpp"

using namespace rackcollapse;

namespace {

struct CommonOpts {
    RunConfig cfg;
    std::string output;  // empty = stdout
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--seed", opts.cfg.seed, "PRNG seed recorded in the report");
    cmd->add_option("--budget-pairs", opts.cfg.budgets.pair_scan_limit,
                    "cap on scanned witness pairs per detector (0 = whole class)");
    cmd->add_option("--budget-quadruples", opts.cfg.budgets.random_quadruples,
                    "random quadruples tried by the type-F search");
    cmd->add_option("--cap-orbit", opts.cfg.caps.orbit, "orbit size cap");
    cmd->add_option("--cap-group", opts.cfg.caps.group, "group enumeration cap");
    cmd->add_option("--cap-subgroups", opts.cfg.caps.subgroups, "subgroup enumeration cap");
    cmd->add_flag("--pretty", opts.cfg.pretty, "indent JSON output");
    cmd->add_option("-o,--output", opts.output, "write the JSON document to a file");
}

void emit_text(const CommonOpts& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opts.output, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + opts.output);
        out << text;
    }
}

void emit(const CommonOpts& opts, const ordered_json& doc) {
    emit_text(opts, dump_document(doc, opts.cfg.pretty) + "\n");
}

// One self-contained JSON document per line.
void emit_stream(const CommonOpts& opts, const std::vector<ordered_json>& docs) {
    std::string text;
    for (const ordered_json& doc : docs) text += dump_document(doc, opts.cfg.pretty) + "\n";
    emit_text(opts, text);
}

std::string resolve_group_id(const std::string& family, unsigned h, uint32_t q, const std::string& raw_id) {
    if (!raw_id.empty()) return raw_id;
    if (family == "sz") return "sz:h=" + std::to_string(h);
    if (family == "psl2") return "psl2:q=" + std::to_string(q);
    if (family == "ree-g2-3") return "ree-g2-3";
    if (family == "ree-g2-3-borel") return "ree-g2-3-borel";
    if (family == "sz2-affine") return "sz2-affine";
    if (family == "sz-tzu") return "sz-tzu:h=" + std::to_string(h);
    throw CLI::ValidationError("--family", "unknown family: " + family);
}

ordered_json class_row(const PermGroup& G, const ClassOrbit& c) {
    return ordered_json{{"representative", perm_to_json(c.representative)},
                        {"size", c.size()},
                        {"element_order", element_order(c.representative)},
                        {"is_real", c.contains(c.representative.inverse())},
                        {"centralizer_order", G.order() / c.size()}};
}

ordered_json outcome_json(const FindOutcome& out) {
    ordered_json j;
    j["found"] = out.certificate.has_value();
    if (out.certificate) j["certificate"] = cert_to_json(*out.certificate);
    else {
        j["exhaustive"] = out.exhaustive;
        j["reason"] = out.not_found_reason;
    }
    j["scanned"] = out.scanned;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rack-theoretic collapse analysis of Suzuki and Ree groups at desk scale"};
    app.require_subcommand(1);
    // --h is a documented option of the group-building subcommands, so
    // help lives on --help alone.
    app.set_help_flag("--help", "print help and exit");

    CommonOpts opts;
    opts.cfg.threads = threads_from_env();

    std::string family, group_id, cert_file, abelian_mode = "auto", abelian_gens_json;
    unsigned h = 1;
    uint32_t q = 8;
    uint64_t class_order = 0;
    std::string class_rep_json;
    unsigned h_max = 1;
    uint64_t rack_samples = 10000;

    auto add_group_opts = [&](CLI::App* cmd) {
        cmd->set_help_flag("--help", "print help and exit");
        cmd->add_option("--family", family, "sz | psl2 | ree-g2-3 | ree-g2-3-borel | sz2-affine | sz-tzu");
        cmd->add_option("--h", h, "tower parameter for the sz families");
        cmd->add_option("--q", q, "field size for psl2");
        cmd->add_option("--id", group_id, "explicit group id (overrides --family)");
    };

    CLI::App* group = app.add_subcommand("group", "build a group and report its invariants");
    CLI::App* group_build = group->add_subcommand("build", "construct the group");
    add_group_opts(group_build);
    add_common(group_build, opts);

    CLI::App* classes = app.add_subcommand("classes", "enumerate conjugacy classes");
    add_group_opts(classes);
    add_common(classes, opts);

    CLI::App* classify_cmd = app.add_subcommand("classify", "run the collapse detectors per class");
    add_group_opts(classify_cmd);
    classify_cmd->add_option("--class-order", class_order, "only classes of this element order");
    classify_cmd->add_option("--class-rep", class_rep_json, "only the class of this element (JSON image array)");
    add_common(classify_cmd, opts);

    CLI::App* braiding_cmd = app.add_subcommand("braiding", "abelian-subrack braiding matrices and verdicts");
    add_group_opts(braiding_cmd);
    braiding_cmd->add_option("--class-rep", class_rep_json, "base element g (JSON image array)")->required();
    braiding_cmd->add_option("--abelian", abelian_mode, "auto (centralizer) | explicit");
    braiding_cmd->add_option("--abelian-gens", abelian_gens_json,
                             "generators of A as a JSON array of image arrays (with --abelian explicit)");
    add_common(braiding_cmd, opts);

    CLI::App* verify_cmd = app.add_subcommand("verify-paper", "run the full verification suite");
    verify_cmd->add_option("--h-max", h_max, "largest sz tower parameter exercised (field checks go further)");
    add_common(verify_cmd, opts);

    CLI::App* rack_cmd = app.add_subcommand("rack", "rack-level utilities");
    CLI::App* rack_axioms = rack_cmd->add_subcommand("axioms", "check the rack axioms on a class");
    add_group_opts(rack_axioms);
    rack_axioms->add_option("--class-rep", class_rep_json, "class of this element (JSON image array)");
    rack_axioms->add_option("--samples", rack_samples, "sampled triples when not exhaustive");
    add_common(rack_axioms, opts);
    CLI::App* rack_verify = rack_cmd->add_subcommand("verify-cert", "re-verify a collapse certificate");
    rack_verify->add_option("file", cert_file, "certificate JSON file")->required();
    add_common(rack_verify, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*group_build) {
            GroupBundle b = build_group_by_id(resolve_group_id(family, h, q, group_id));
            ordered_json doc = make_document(opts.cfg, "group build");
            doc["group"] = group_header(b);
            emit(opts, doc);
            return 0;
        }

        if (*classes) {
            GroupBundle b = build_group_by_id(resolve_group_id(family, h, q, group_id));
            ordered_json doc = make_document(opts.cfg, "classes");
            doc["group"] = group_header(b);
            ordered_json rows = ordered_json::array();
            for (const ClassOrbit& c : conjugacy_classes(b.group, opts.cfg.caps.group))
                rows.push_back(class_row(b.group, c));
            doc["classes"] = rows;
            emit(opts, doc);
            return 0;
        }

        if (*classify_cmd) {
            GroupBundle b = build_group_by_id(resolve_group_id(family, h, q, group_id));
            std::vector<ordered_json> docs;
            std::optional<Perm> wanted;
            if (!class_rep_json.empty()) wanted = perm_from_json(ordered_json::parse(class_rep_json));
            for (const ClassOrbit& c : conjugacy_classes(b.group, opts.cfg.caps.group)) {
                if (class_order != 0 && element_order(c.representative) != class_order) continue;
                if (wanted && !c.contains(*wanted)) continue;
                ConjClassRack rack(b.group, c);
                const ClassifyResult res = classify(b.group, b.id, rack, b.hints, opts.cfg.budgets,
                                                    opts.cfg.seed, opts.cfg.caps);
                ordered_json doc = make_document(opts.cfg, "classify");
                doc["group"] = ordered_json{{"id", b.id}, {"order", b.group.order()}, {"degree", b.group.degree()}};
                doc["class"] = class_row(b.group, c);
                ordered_json detectors;
                for (const auto& [kind, out] : res.outcomes) detectors[to_string(kind)] = outcome_json(out);
                doc["detectors"] = detectors;
                docs.push_back(std::move(doc));
            }
            emit_stream(opts, docs);
            return 0;
        }

        if (*braiding_cmd) {
            GroupBundle b = build_group_by_id(resolve_group_id(family, h, q, group_id));
            const Perm g = perm_from_json(ordered_json::parse(class_rep_json));
            if (!b.group.contains(g)) throw std::invalid_argument("base element is not in the group");
            std::vector<Perm> agens;
            if (abelian_mode == "auto") {
                PermGroup C = centralizer(b.group, g, opts.cfg.caps.orbit);
                if (!C.is_abelian())
                    throw std::invalid_argument(
                        "centralizer is not abelian; pass --abelian explicit with --abelian-gens");
                agens = C.generators();
            } else if (abelian_mode == "explicit") {
                for (const auto& item : ordered_json::parse(abelian_gens_json))
                    agens.push_back(perm_from_json(item));
            } else {
                throw CLI::ValidationError("--abelian", "must be auto or explicit");
            }
            AbelianData A(PermGroup::from_generators(agens, b.group.degree()));
            ordered_json doc = make_document(opts.cfg, "braiding");
            doc["group"] = group_header(b);
            doc["element"] = perm_to_json(g);
            ordered_json factors = ordered_json::array();
            for (const CyclicFactor& fc : A.factors())
                factors.push_back(
                    ordered_json{{"generator", perm_to_json(fc.generator)}, {"order", fc.order}});
            doc["abelian"] = ordered_json{{"order", A.group().order()}, {"decomposition", factors}};
            ordered_json rows = ordered_json::array();
            for (const Character& chi : characters(A)) {
                const BraidingMatrix B = braiding(b.group, g, A, chi, opts.cfg.caps.orbit);
                ordered_json matrix = ordered_json::array();
                for (size_t i = 0; i < B.size; ++i) {
                    ordered_json row = ordered_json::array();
                    for (size_t j = 0; j < B.size; ++j)
                        row.push_back(ordered_json::array({B.at(i, j).order(), B.at(i, j).exponent()}));
                    matrix.push_back(std::move(row));
                }
                const Verdict v = verdict(B);
                rows.push_back(ordered_json{{"exponents", chi.exponents()},
                                            {"matrix", matrix},
                                            {"verdict",
                                             {{"infinite", v.infinite},
                                              {"rule", v.rule},
                                              {"witness", v.witness}}}});
            }
            doc["characters"] = rows;
            emit(opts, doc);
            return 0;
        }

        if (*verify_cmd) {
            const std::vector<CheckResult> checks = run_verification_suite(opts.cfg, h_max);
            const ordered_json doc = checks_to_json(opts.cfg, checks);
            emit(opts, doc);
            return doc["ok"].get<bool>() ? 0 : 1;
        }

        if (*rack_axioms) {
            GroupBundle b = build_group_by_id(resolve_group_id(family, h, q, group_id));
            ordered_json doc = make_document(opts.cfg, "rack axioms");
            doc["group"] = group_header(b);
            ordered_json rows = ordered_json::array();
            std::optional<Perm> wanted;
            if (!class_rep_json.empty()) wanted = perm_from_json(ordered_json::parse(class_rep_json));
            bool all = true;
            for (const ClassOrbit& c : conjugacy_classes(b.group, opts.cfg.caps.group)) {
                if (wanted && !c.contains(*wanted)) continue;
                ConjClassRack rack(b.group, c);
                const AxiomReport rep = check_axioms(rack, rack_samples, opts.cfg.seed);
                all = all && rep.pass;
                ordered_json row = class_row(b.group, c);
                row["pass"] = rep.pass;
                row["exhaustive"] = rep.exhaustive;
                row["triples_checked"] = rep.triples_checked;
                if (rep.indecomposable.has_value()) row["indecomposable"] = *rep.indecomposable;
                rows.push_back(std::move(row));
            }
            doc["classes"] = rows;
            emit(opts, doc);
            return all ? 0 : 1;
        }

        if (*rack_verify) {
            std::ifstream in(cert_file);
            if (!in) throw std::runtime_error("cannot open certificate file: " + cert_file);
            ordered_json j = ordered_json::parse(in);
            const CollapseCertificate cert = cert_from_json(j);
            GroupBundle b = build_group_by_id(cert.group_id);
            const bool ok = verify(cert, b.group, opts.cfg.caps);
            ordered_json doc = make_document(opts.cfg, "rack verify-cert");
            doc["certificate"] = cert_to_json(cert);
            doc["certificate"]["verified"] = ok;
            doc["verified"] = ok;
            emit(opts, doc);
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        ordered_json err = make_document(opts.cfg, "error");
        err["error"] = e.what();
        std::cerr << dump_document(err, opts.cfg.pretty) << "\n";
        return 2;
    }
    return 2;
}
