#pragma once

#include <array>
#include <memory>

#include "rackcollapse/ffield.hpp"
#include "rackcollapse/perm.hpp"

namespace rackcollapse {

// 4x4 matrix over a shared GF(q), row-major. Group members preserve the
// bilinear form of the anti-diagonal matrix J.
struct Mat4 {
    const FieldCtx* f = nullptr;
    std::array<uint32_t, 16> e{};

    uint32_t at(size_t r, size_t c) const { return e[4 * r + c]; }
    void set(size_t r, size_t c, uint32_t v) { e[4 * r + c] = v; }

    static Mat4 identity(const FieldCtx& f);
    friend bool operator==(const Mat4& a, const Mat4& b) { return a.e == b.e && a.f->same_field(*b.f); }
    friend bool operator!=(const Mat4& a, const Mat4& b) { return !(a == b); }
};

Mat4 mul(const Mat4& a, const Mat4& b);
Mat4 inverse(const Mat4& a);
Mat4 transpose(const Mat4& a);

// The lower unitriangular U(a,b) with rows built from a, delta(a), b,
// delta(b); product law U(a,b)U(c,d) = U(a+c, a*delta(c)+b+d).
Mat4 u_elem(FieldElem a, FieldElem b);
// Torus element diag(xi1, xi2, xi2^-1, xi1^-1) with delta(xi1) = k*delta(k)
// and delta(xi2) = k. Requires k != 0.
Mat4 t_elem(FieldElem k);
// The anti-diagonal involution J (Weyl representative and form matrix).
Mat4 w0_elem(const FieldCtx& f);
// M^T J M == J.
bool preserves_form(const Mat4& m);

// Construction of the Suzuki group of GF(2^(2h+1)) as the permutation
// action of its 4x4 matrix model on the orbit of the projective point
// <e4> (length q^2+1, stabilized by the lower-triangular subgroup). The
// BSGS order is checked against q^2(q-1)(q^2+1) at build time.
class SzContext {
public:
    explicit SzContext(unsigned h);

    unsigned h() const { return h_; }
    const FieldCtx& field() const { return *field_; }
    const PermGroup& group() const { return *group_; }
    const std::vector<Mat4>& matrix_generators() const { return mat_gens_; }

    // Permutation image of a group member; throws if the matrix does not
    // preserve the point orbit.
    Perm to_perm(const Mat4& m) const;
    Perm u_perm(FieldElem a, FieldElem b) const;
    Perm t_perm(FieldElem k) const;
    Perm w0_perm() const;

    // Generators of the Sylow 2-subgroup U^- (basis u-elements).
    std::vector<Perm> uminus_gens() const;
    // Generators of B^- = T * U^-: the fixed primitive torus element plus
    // the U^- basis.
    std::vector<Perm> borel_gens() const;
    // All q-1 non-trivial torus elements t_k in field value order.
    std::vector<Perm> torus_elements() const;
    // H = <T, U(0,b)> = T Z(U^-), order q(q-1).
    PermGroup subgroup_T_ZU() const;
    // All 64 elements of U^- as (a,b) |-> perm, field value order.
    std::vector<Perm> uminus_elements() const;

private:
    unsigned h_;
    std::shared_ptr<FieldCtx> field_;
    std::vector<Mat4> mat_gens_;
    std::vector<std::array<uint32_t, 4>> points_;  // normalized, BFS order
    std::unordered_map<uint64_t, uint32_t> point_index_;
    std::unique_ptr<PermGroup> group_;

    std::array<uint32_t, 4> normalize(std::array<uint32_t, 4> v) const;
    uint64_t pack(const std::array<uint32_t, 4>& v) const;
    std::array<uint32_t, 4> apply(const Mat4& m, const std::array<uint32_t, 4>& v) const;
};

// Degree-5 model of the smallest Suzuki group: affine maps
// y -> a*y + x on GF(5), order 20.
PermGroup sz2_affine_model();

} // namespace rackcollapse
