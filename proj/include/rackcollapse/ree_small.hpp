#pragma once

#include <memory>

#include "rackcollapse/ffield.hpp"
#include "rackcollapse/perm.hpp"

namespace rackcollapse {

// PSL2(q) on the projective line (q+1 points), built from 2x2
// determinant-1 matrices modulo the kernel of the action.
class Psl2Context {
public:
    explicit Psl2Context(uint32_t q);

    const FieldCtx& field() const { return *field_; }
    const PermGroup& group() const { return *group_; }

    // Permutation image of (a b; c d); the determinant must be 1.
    Perm mat_perm(FieldElem a, FieldElem b, FieldElem c, FieldElem d) const;
    Perm upper(FieldElem b) const;  // (1 b; 0 1)
    Perm lower(FieldElem c) const;  // (1 0; c 1)
    Perm diag(FieldElem k) const;   // (k 0; 0 k^-1)
    // Frobenius x -> x^p acting on the projective line.
    Perm frobenius() const;

private:
    std::shared_ptr<FieldCtx> field_;
    std::unique_ptr<PermGroup> group_;
    // point i < q: (1, value i); point q: (0, 1)
    uint32_t point_of(uint32_t x, uint32_t y) const;
};

PermGroup build_psl2(uint32_t q);

// The smallest Ree group of type G2 as PSL2(8) extended by the Frobenius
// phi of order 3 acting on the projective line; order 1512 = 27*2*28,
// checked at build time. phi and the unipotent (1 1; 0 1) are returned
// tagged for downstream verifications.
struct ReeG23 {
    PermGroup group;       // degree 9, order 1512
    Perm phi;              // order 3, not real in the group
    Perm u11;              // (1 1; 0 1), generates C_{B1}(phi)
    PermGroup psl2_8;      // index-3 subgroup
    PermGroup borel_b1;    // upper-triangular B1, order 56
    PermGroup borel_ext;   // B1 extended by phi, order 168
};

ReeG23 build_2g2_3();

} // namespace rackcollapse
