#include "rackcollapse/json_io.hpp"

#include <cstdlib>

#include "rackcollapse/ree_small.hpp"
#include "rackcollapse/suzuki.hpp"

namespace rackcollapse {

unsigned threads_from_env() {
    const char* env = std::getenv("RACK_COLLAPSE_THREADS");
    if (env == nullptr) return 1;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) return 1;
    return static_cast<unsigned>(v);
}

ordered_json config_json(const RunConfig& cfg) {
    return ordered_json{
        {"seed", cfg.seed},
        {"budgets",
         {{"pair_scan_limit", cfg.budgets.pair_scan_limit},
          {"random_quadruples", cfg.budgets.random_quadruples}}},
        {"caps",
         {{"orbit", cfg.caps.orbit}, {"group", cfg.caps.group}, {"subgroups", cfg.caps.subgroups}}},
        {"threads", cfg.threads},
    };
}

ordered_json make_document(const RunConfig& cfg, const std::string& command) {
    ordered_json doc;
    doc["schema"] = kSchemaTag;
    doc["command"] = command;
    doc["config"] = config_json(cfg);
    return doc;
}

std::string dump_document(const ordered_json& doc, bool pretty) {
    return pretty ? doc.dump(2) : doc.dump();
}

ordered_json perm_to_json(const Perm& p) {
    ordered_json arr = ordered_json::array();
    for (uint16_t v : p.img) arr.push_back(v);
    return arr;
}

Perm perm_from_json(const ordered_json& j) {
    if (!j.is_array()) throw std::invalid_argument("permutation must be a JSON array");
    Perm p;
    std::vector<bool> hit(j.size(), false);
    for (const auto& v : j) {
        const uint64_t x = v.get<uint64_t>();
        if (x >= j.size() || hit[x]) throw std::invalid_argument("image array is not a bijection");
        hit[x] = true;
        p.img.push_back(static_cast<uint16_t>(x));
    }
    return p;
}

ordered_json cert_to_json(const CollapseCertificate& cert) {
    ordered_json j;
    j["schema"] = kSchemaTag;
    j["kind"] = to_string(cert.kind);
    j["group"] = cert.group_id;
    j["class_rep"] = perm_to_json(cert.class_rep);
    ordered_json ws = ordered_json::array();
    for (const Perm& w : cert.witnesses) ws.push_back(perm_to_json(w));
    j["witnesses"] = ws;
    if (!cert.subgroup_gens.empty()) {
        ordered_json hs = ordered_json::array();
        for (const Perm& h : cert.subgroup_gens) hs.push_back(perm_to_json(h));
        j["subgroup_generators"] = hs;
    }
    j["seed"] = cert.seed;
    j["verified"] = true;
    return j;
}

CollapseCertificate cert_from_json(const ordered_json& j) {
    CollapseCertificate cert;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "C") cert.kind = CertKind::C;
    else if (kind == "D") cert.kind = CertKind::D;
    else if (kind == "F") cert.kind = CertKind::F;
    else throw std::invalid_argument("unknown certificate kind");
    cert.group_id = j.at("group").get<std::string>();
    cert.class_rep = perm_from_json(j.at("class_rep"));
    for (const auto& w : j.at("witnesses")) cert.witnesses.push_back(perm_from_json(w));
    if (j.contains("subgroup_generators"))
        for (const auto& h : j.at("subgroup_generators")) cert.subgroup_gens.push_back(perm_from_json(h));
    cert.seed = j.value("seed", uint64_t{0});
    return cert;
}

namespace {

ordered_json field_header(const FieldCtx& f) {
    return ordered_json{{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus_value()}};
}

GroupBundle build_sz_bundle(unsigned h) {
    SzContext sz(h);
    GroupBundle b;
    b.id = "sz:h=" + std::to_string(h);
    // matrices serialize as 16 field-element integers, row-major
    ordered_json mats = ordered_json::array();
    for (const Mat4& m : sz.matrix_generators()) {
        ordered_json entries = ordered_json::array();
        for (uint32_t v : m.e) entries.push_back(v);
        mats.push_back(std::move(entries));
    }
    b.meta = ordered_json{{"family", "sz"},
                          {"h", h},
                          {"field", field_header(sz.field())},
                          {"matrix_generators", std::move(mats)}};
    b.hints.torus = sz.torus_elements();
    b.hints.structured_seeds = sz.uminus_elements();
    b.hints.structural_H = sz.borel_gens();
    b.hints.structural_H_name = "borel";
    b.group = sz.group();
    return b;
}

GroupBundle build_psl2_bundle(uint32_t q) {
    Psl2Context psl(q);
    GroupBundle b;
    b.id = "psl2:q=" + std::to_string(q);
    b.meta = ordered_json{{"family", "psl2"}, {"q", q}, {"field", field_header(psl.field())}};
    b.group = psl.group();
    return b;
}

GroupBundle build_ree_bundle(bool borel_only) {
    ReeG23 ree = build_2g2_3();
    GroupBundle b;
    if (borel_only) {
        b.id = "ree-g2-3-borel";
        b.meta = ordered_json{{"family", "ree-g2-3-borel"},
                              {"tagged", {{"phi", perm_to_json(ree.phi)}, {"u11", perm_to_json(ree.u11)}}}};
        b.group = ree.borel_ext;
    } else {
        b.id = "ree-g2-3";
        b.meta = ordered_json{{"family", "ree-g2-3"},
                              {"tagged", {{"phi", perm_to_json(ree.phi)}, {"u11", perm_to_json(ree.u11)}}}};
        b.group = ree.group;
    }
    return b;
}

GroupBundle build_tzu_bundle(unsigned h) {
    SzContext sz(h);
    GroupBundle b;
    b.id = "sz-tzu:h=" + std::to_string(h);
    b.meta = ordered_json{{"family", "sz-tzu"}, {"h", h}, {"field", field_header(sz.field())}};
    b.group = sz.subgroup_T_ZU();
    return b;
}

} // namespace

GroupBundle build_group_by_id(const std::string& id) {
    auto param = [&](const std::string& prefix) -> std::optional<unsigned> {
        if (id.rfind(prefix, 0) != 0) return std::nullopt;
        return static_cast<unsigned>(std::stoul(id.substr(prefix.size())));
    };
    if (auto h = param("sz:h=")) return build_sz_bundle(*h);
    if (auto h = param("sz-tzu:h=")) return build_tzu_bundle(*h);
    if (auto q = param("psl2:q=")) return build_psl2_bundle(*q);
    if (id == "sz2-affine") {
        GroupBundle b;
        b.id = id;
        b.meta = ordered_json{{"family", "sz2-affine"}};
        b.group = sz2_affine_model();
        return b;
    }
    if (id == "ree-g2-3") return build_ree_bundle(false);
    if (id == "ree-g2-3-borel") return build_ree_bundle(true);
    if (id.rfind("product(", 0) == 0 && id.back() == ')') {
        const std::string inner = id.substr(8, id.size() - 9);
        // Split at the top-level comma.
        int depth = 0;
        size_t cut = std::string::npos;
        for (size_t i = 0; i < inner.size(); ++i) {
            if (inner[i] == '(') ++depth;
            else if (inner[i] == ')') --depth;
            else if (inner[i] == ',' && depth == 0) {
                cut = i;
                break;
            }
        }
        if (cut == std::string::npos) throw std::invalid_argument("malformed product id: " + id);
        GroupBundle a = build_group_by_id(inner.substr(0, cut));
        GroupBundle c = build_group_by_id(inner.substr(cut + 1));
        GroupBundle b;
        b.id = "product(" + a.id + "," + c.id + ")";
        b.meta = ordered_json{{"family", "product"}, {"factors", {a.meta, c.meta}}};
        b.group = direct_product(a.group, c.group);
        return b;
    }
    throw std::invalid_argument("unknown group id: " + id);
}

ordered_json group_header(const GroupBundle& b) {
    ordered_json j;
    j["id"] = b.id;
    j["degree"] = b.group.degree();
    j["order"] = b.group.order();
    j["meta"] = b.meta;
    ordered_json gens = ordered_json::array();
    for (const Perm& g : b.group.generators()) gens.push_back(perm_to_json(g));
    j["generators"] = gens;
    return j;
}

} // namespace rackcollapse
