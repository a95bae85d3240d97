#pragma once

#include <nlohmann/json.hpp>

#include "rackcollapse/collapse.hpp"

namespace rackcollapse {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kSchemaTag = "rack-collapse/1";

// Run-wide knobs; serialized verbatim into every report header so equal
// configurations give byte-identical documents.
struct RunConfig {
    uint64_t seed = 1;
    SearchBudgets budgets;
    Caps caps;
    unsigned threads = 1;  // bound from RACK_COLLAPSE_THREADS
    bool pretty = false;
};

unsigned threads_from_env();
ordered_json config_json(const RunConfig& cfg);
ordered_json make_document(const RunConfig& cfg, const std::string& command);
std::string dump_document(const ordered_json& doc, bool pretty);

ordered_json perm_to_json(const Perm& p);
Perm perm_from_json(const ordered_json& j);

ordered_json cert_to_json(const CollapseCertificate& cert);
CollapseCertificate cert_from_json(const ordered_json& j);

// A buildable group together with its report header and search hints.
struct GroupBundle {
    std::string id;
    PermGroup group;
    ordered_json meta;  // family, parameters, field header when present
    SearchHints hints;
};

// Group registry used by the CLI and by certificate re-verification:
// sz:h=H, sz2-affine, psl2:q=Q, ree-g2-3, ree-g2-3-borel, sz-tzu:h=H,
// and product(id,id).
GroupBundle build_group_by_id(const std::string& id);
ordered_json group_header(const GroupBundle& b);

} // namespace rackcollapse
