#pragma once

#include <array>
#include <map>
#include <string>

#include "rackcollapse/rack.hpp"

namespace rackcollapse {

enum class CertKind { C, D, F };
std::string to_string(CertKind k);

// Witness tuple proving a class is of type C, D or F; exactly
// re-verifiable from the ambient group and class representative alone.
struct CollapseCertificate {
    CertKind kind = CertKind::D;
    std::string group_id;
    Perm class_rep;
    std::vector<Perm> witnesses;      // D: r,s; C: r,s; F: r1..r4
    std::vector<Perm> subgroup_gens;  // type C only; empty means <r,s>
    uint64_t seed = 0;
};

struct Caps {
    uint64_t orbit = 2000000;
    uint64_t group = 1000000;
    uint64_t subgroups = 2500;
};

// (rs)^2 != (sr)^2 and s not in the orbit of r under conjugation by r,s.
bool check_type_D(const Perm& r, const Perm& s, uint64_t orbit_cap = 2000000);

struct TypeCOutcome {
    bool ok = false;
    uint64_t orbit_r = 0;
    uint64_t orbit_s = 0;
};

// The four conditions of type C for r,s inside H = <H_gens>; membership
// of r and s in H is verified by sifting. With H_gens = {r,s} the
// generation condition holds automatically and is skipped.
TypeCOutcome check_type_C(const Perm& r, const Perm& s, const std::vector<Perm>& H_gens,
                          const Caps& caps = {});

// Pairwise non-commuting with pairwise distinct orbits under the group
// generated by the quadruple.
bool check_type_F(const std::array<Perm, 4>& witnesses, uint64_t orbit_cap = 2000000);

struct SearchHints {
    // Candidate conjugators for structured type-F quadruples (e.g. torus
    // elements of the ambient construction).
    std::vector<Perm> torus;
    // Preferred base points for the torus-conjugate construction, scanned
    // after the representative (e.g. the class elements inside U^-).
    std::vector<Perm> structured_seeds;
    // A structural subgroup to try for type C in addition to H = <r,s>.
    std::vector<Perm> structural_H;
    std::string structural_H_name;
};

struct SearchBudgets {
    uint64_t pair_scan_limit = 0;        // 0 = scan the whole class (D, C)
    uint64_t random_quadruples = 2000;   // type F fallback
};

enum class SearchStrategy { Exhaustive, Random };

struct FindOutcome {
    std::optional<CollapseCertificate> certificate;
    bool exhaustive = false;     // the scan covered the whole search space
    uint64_t scanned = 0;
    std::string not_found_reason;
};

// Searches for a witness tuple of the requested kind over the class.
// Exhaustive mode fixes r = representative and scans s in orbit order
// (complete decision procedure for D and for C with H = <r,s>); type F
// scans structured quadruples first, then seeded random ones.
FindOutcome find_type(CertKind kind, const PermGroup& G, const std::string& group_id,
                      const ConjClassRack& R, SearchStrategy strategy, const SearchHints& hints,
                      const SearchBudgets& budgets, uint64_t seed, const Caps& caps = {});

// Recomputes every defining condition from scratch, including conjugacy
// of all witnesses to the class representative inside the ambient group.
bool verify(const CollapseCertificate& cert, const PermGroup& G, const Caps& caps = {});

struct SubgroupIntersection {
    uint64_t subgroup_order = 0;
    std::string outcome;  // "empty", "single-class", "commuting", "other"
};

struct KthulhuReport {
    bool exhaustive = false;  // all subgroups enumerated
    bool proved = false;      // no "other" outcome occurred
    std::vector<SubgroupIntersection> intersections;
};

// For every subgroup H of G classifies the intersection of the class with
// H as empty / a single H-class / commuting / other; kthulhu is proved
// when "other" never occurs.
KthulhuReport kthulhu_exhaustive(const PermGroup& G, const ConjClassRack& R, const Caps& caps = {});

struct ClassifyResult {
    std::map<CertKind, FindOutcome> outcomes;
    bool is_real_class = false;
    uint64_t order = 0;  // element order
    uint64_t class_size = 0;
    uint64_t centralizer_order = 0;
};

// Runs the three detectors under budgets and gathers class metadata.
ClassifyResult classify(const PermGroup& G, const std::string& group_id, const ConjClassRack& R,
                        const SearchHints& hints, const SearchBudgets& budgets, uint64_t seed,
                        const Caps& caps = {});

} // namespace rackcollapse
