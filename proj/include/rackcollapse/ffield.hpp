#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace rackcollapse {

class FieldCtx;

// Element of GF(p^m) in the polynomial basis of its context. The packed
// value is sum coeff_i * p^i (little-endian digits), which is also the
// serialized form. Plain data: copy freely, never mix contexts.
struct FieldElem {
    uint32_t value = 0;
    const FieldCtx* ctx = nullptr;

    bool is_zero() const { return value == 0; }
    bool is_one() const { return value == 1; }
    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }
};

FieldElem operator+(FieldElem x, FieldElem y);
FieldElem operator*(FieldElem x, FieldElem y);
FieldElem inv(FieldElem x);
FieldElem pow(FieldElem x, uint64_t e);

// Twisted Frobenius delta(x) = x^(p^(h+1)) on GF(p^(2h+1)), with
// delta(delta(x)) = x^p. Requires a delta-enabled context.
FieldElem delta(FieldElem x);
// Inverse twist: x^(p^h); delta(delta_inv(x)) = x.
FieldElem delta_inv(FieldElem x);
// phi(k) = k * delta(k), a bijection of the unit group. Requires k != 0.
FieldElem phi(FieldElem k);

// Context for GF(p^m), p in {2,3,5}. Immutable after construction and
// safely shareable. The modulus is checked irreducible by trial division.
class FieldCtx {
public:
    // Default modulus: the lexicographically smallest irreducible monic
    // polynomial of degree m (smallest packed value), recorded in all
    // serialized output.
    FieldCtx(unsigned p, unsigned m);
    // Explicit modulus as little-endian coefficients of length m+1 (monic).
    FieldCtx(unsigned p, unsigned m, std::vector<uint8_t> modulus);

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

    unsigned p() const { return p_; }
    unsigned m() const { return m_; }
    uint32_t q() const { return q_; }
    const std::vector<uint8_t>& modulus() const { return modulus_; }
    // Packed integer form of the modulus, sum c_i * p^i including the
    // leading term; this is what document headers record.
    uint64_t modulus_value() const;

    // p in {2,3} and m odd: the square-root-of-Frobenius delta exists.
    bool delta_enabled() const { return (p_ == 2 || p_ == 3) && m_ % 2 == 1; }
    unsigned h() const;

    FieldElem zero() const { return {0, this}; }
    FieldElem one() const { return {1, this}; }
    FieldElem from_value(uint32_t v) const;
    FieldElem from_coeffs(const std::vector<uint8_t>& coeffs) const;
    std::vector<uint8_t> coeffs(FieldElem x) const;

    // Fixed primitive element: the smallest packed value generating the
    // unit group (for GF(2) this is 1).
    FieldElem generator() const { return {generator_, this}; }
    std::vector<FieldElem> elements() const;

    bool same_field(const FieldCtx& other) const {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

    uint32_t add_values(uint32_t a, uint32_t b) const;
    uint32_t neg_value(uint32_t a) const;
    uint32_t mul_values(uint32_t a, uint32_t b) const;
    uint32_t inv_value(uint32_t a) const;
    uint32_t pow_value(uint32_t a, uint64_t e) const;

private:
    void init();

    unsigned p_ = 0;
    unsigned m_ = 0;
    uint32_t q_ = 0;
    std::vector<uint8_t> modulus_;
    uint32_t generator_ = 1;
    std::vector<uint32_t> exp_;  // exp_[i] = generator^i, length q-1
    std::vector<uint32_t> log_;  // log_[v] for v != 0
};

// GF(2)-linear span of field elements, basis kept in reduced echelon form
// over the coefficient bits. Exact membership queries.
class F2Span {
public:
    void insert(FieldElem x);
    bool contains(FieldElem x) const;
    size_t dimension() const { return basis_.size(); }
    std::vector<FieldElem> basis() const;

private:
    const FieldCtx* ctx_ = nullptr;
    std::vector<uint32_t> basis_;  // bitmasks, decreasing leading bit
};

F2Span f2_span(const std::vector<FieldElem>& elems);

} // namespace rackcollapse
