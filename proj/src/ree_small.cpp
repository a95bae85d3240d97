#include "rackcollapse/ree_small.hpp"

namespace rackcollapse {

namespace {

std::pair<unsigned, unsigned> factor_prime_power(uint32_t q) {
    for (unsigned p : {2u, 3u, 5u}) {
        if (q % p != 0) continue;
        unsigned m = 0;
        uint32_t v = q;
        while (v % p == 0) {
            v /= p;
            ++m;
        }
        if (v != 1) break;
        return {p, m};
    }
    throw std::invalid_argument("unsupported q (need a power of 2, 3 or 5, at most 32)");
}

} // namespace

Psl2Context::Psl2Context(uint32_t q) {
    if (q < 2 || q > 32) throw std::invalid_argument("unsupported q (need a prime power <= 32)");
    auto [p, m] = factor_prime_power(q);
    field_ = std::make_shared<FieldCtx>(p, m);

    std::vector<Perm> gens;
    const FieldCtx& f = *field_;
    for (unsigned i = 0; i < f.m(); ++i) {
        uint32_t basis = 1;
        for (unsigned j = 0; j < i; ++j) basis *= p;
        gens.push_back(upper(f.from_value(basis)));
        gens.push_back(lower(f.from_value(basis)));
    }
    group_ = std::make_unique<PermGroup>(PermGroup::from_generators(std::move(gens), q + 1));
    const uint64_t expected = static_cast<uint64_t>(q) * (q - 1) * (q + 1) / (q % 2 == 0 ? 1 : 2);
    if (group_->order() != expected)
        throw std::logic_error("psl2 order check failed: got " + std::to_string(group_->order()));
}

uint32_t Psl2Context::point_of(uint32_t x, uint32_t y) const {
    const FieldCtx& f = *field_;
    if (x != 0) return f.mul_values(y, f.inv_value(x));
    if (y == 0) throw std::logic_error("zero vector has no projective point");
    return f.q();
}

Perm Psl2Context::mat_perm(FieldElem a, FieldElem b, FieldElem c, FieldElem d) const {
    const FieldCtx& f = *field_;
    const FieldElem det = a * d + f.from_value(f.neg_value((b * c).value));
    if (!det.is_one()) throw std::invalid_argument("matrix determinant must be 1");
    Perm perm;
    perm.img.resize(f.q() + 1);
    auto map_point = [&](uint32_t x, uint32_t y) {
        const uint32_t nx = f.add_values(f.mul_values(a.value, x), f.mul_values(b.value, y));
        const uint32_t ny = f.add_values(f.mul_values(c.value, x), f.mul_values(d.value, y));
        return point_of(nx, ny);
    };
    for (uint32_t y = 0; y < f.q(); ++y) perm.img[y] = static_cast<uint16_t>(map_point(1, y));
    perm.img[f.q()] = static_cast<uint16_t>(map_point(0, 1));
    return perm;
}

Perm Psl2Context::upper(FieldElem b) const {
    const FieldCtx& f = *field_;
    return mat_perm(f.one(), b, f.zero(), f.one());
}

Perm Psl2Context::lower(FieldElem c) const {
    const FieldCtx& f = *field_;
    return mat_perm(f.one(), f.zero(), c, f.one());
}

Perm Psl2Context::diag(FieldElem k) const {
    const FieldCtx& f = *field_;
    return mat_perm(k, f.zero(), f.zero(), inv(k));
}

Perm Psl2Context::frobenius() const {
    const FieldCtx& f = *field_;
    Perm perm;
    perm.img.resize(f.q() + 1);
    for (uint32_t y = 0; y < f.q(); ++y)
        perm.img[y] = static_cast<uint16_t>(f.pow_value(y, f.p()));
    perm.img[f.q()] = static_cast<uint16_t>(f.q());
    return perm;
}

PermGroup build_psl2(uint32_t q) { return Psl2Context(q).group(); }

ReeG23 build_2g2_3() {
    Psl2Context psl(8);
    const FieldCtx& f = psl.field();

    ReeG23 out{PermGroup::trivial(9), {}, {}, PermGroup::trivial(9), PermGroup::trivial(9), PermGroup::trivial(9)};
    out.phi = psl.frobenius();
    out.u11 = psl.upper(f.one());
    out.psl2_8 = psl.group();

    std::vector<Perm> gens = out.psl2_8.generators();
    gens.push_back(out.phi);
    out.group = PermGroup::from_generators(std::move(gens), 9);
    if (out.group.order() != 1512)
        throw std::logic_error("ree group order check failed: got " + std::to_string(out.group.order()));
    if (element_order(out.phi) != 3) throw std::logic_error("frobenius must have order 3");

    std::vector<Perm> b1;
    for (unsigned i = 0; i < 3; ++i) b1.push_back(psl.upper(f.from_value(1u << i)));
    b1.push_back(psl.diag(f.generator()));
    out.borel_b1 = PermGroup::from_generators(b1, 9);
    if (out.borel_b1.order() != 56) throw std::logic_error("B1 order check failed");

    b1.push_back(out.phi);
    out.borel_ext = PermGroup::from_generators(std::move(b1), 9);
    if (out.borel_ext.order() != 168) throw std::logic_error("B1:<phi> order check failed");
    return out;
}

} // namespace rackcollapse
