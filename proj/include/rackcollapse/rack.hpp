#pragma once

#include <functional>
#include <optional>

#include "rackcollapse/perm.hpp"

namespace rackcollapse {

// Conjugacy class with its rack operation x > y = x y x^-1. The operation
// is computed on demand; below 512 elements an index table is cached.
class ConjClassRack {
public:
    ConjClassRack(const PermGroup& ambient, ClassOrbit orbit);

    static constexpr size_t kTableCacheLimit = 512;

    size_t size() const { return orbit_.size(); }
    const PermGroup& ambient() const { return *ambient_; }
    const ClassOrbit& orbit() const { return orbit_; }
    const Perm& element(size_t i) const { return orbit_.elements[i]; }
    const Perm& representative() const { return orbit_.representative; }

    // Index of element(i) > element(j) within the orbit.
    uint32_t op_index(uint32_t i, uint32_t j) const;
    Perm op(const Perm& x, const Perm& y) const { return conj(x, y); }
    bool has_table() const { return table_.has_value(); }

private:
    const PermGroup* ambient_;
    ClassOrbit orbit_;
    std::optional<std::vector<uint32_t>> table_;  // row-major size*size
};

ConjClassRack conj_rack(const PermGroup& G, const Perm& x, uint64_t orbit_cap = 2000000);

struct AxiomViolation {
    std::string axiom;  // "closure", "self-distributivity", "bijectivity"
    uint32_t x = 0, y = 0, z = 0;
};

struct AxiomReport {
    bool pass = true;
    bool exhaustive = false;
    uint64_t triples_checked = 0;
    std::optional<AxiomViolation> violation;
    // Single orbit under its own left translations; recorded, not
    // asserted. Only computed when a table is cached.
    std::optional<bool> indecomposable;
};

AxiomReport check_axioms(const ConjClassRack& R, uint64_t samples, uint64_t seed,
                         bool force_exhaustive = false);

// Same checks against a raw operation table (indices); lets tests feed
// corrupted fixtures through the identical harness.
AxiomReport check_axioms_table(const std::vector<std::vector<uint32_t>>& table, uint64_t samples,
                               uint64_t seed, bool force_exhaustive = false);

bool is_commuting_set(const std::vector<Perm>& elems);

} // namespace rackcollapse
