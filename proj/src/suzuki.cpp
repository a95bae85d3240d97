#include "rackcollapse/suzuki.hpp"

namespace rackcollapse {

Mat4 Mat4::identity(const FieldCtx& f) {
    Mat4 m;
    m.f = &f;
    for (size_t i = 0; i < 4; ++i) m.set(i, i, 1);
    return m;
}

Mat4 mul(const Mat4& a, const Mat4& b) {
    if (!a.f->same_field(*b.f)) throw std::invalid_argument("matrix field mismatch");
    const FieldCtx& f = *a.f;
    Mat4 r;
    r.f = a.f;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            uint32_t acc = 0;
            for (size_t k = 0; k < 4; ++k)
                acc = f.add_values(acc, f.mul_values(a.at(i, k), b.at(k, j)));
            r.set(i, j, acc);
        }
    return r;
}

Mat4 transpose(const Mat4& a) {
    Mat4 r;
    r.f = a.f;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) r.set(i, j, a.at(j, i));
    return r;
}

Mat4 inverse(const Mat4& a) {
    // Gauss-Jordan over GF(q).
    const FieldCtx& f = *a.f;
    std::array<std::array<uint32_t, 8>, 4> w{};
    for (size_t i = 0; i < 4; ++i) {
        for (size_t j = 0; j < 4; ++j) w[i][j] = a.at(i, j);
        w[i][4 + i] = 1;
    }
    for (size_t col = 0; col < 4; ++col) {
        size_t piv = col;
        while (piv < 4 && w[piv][col] == 0) ++piv;
        if (piv == 4) throw std::domain_error("singular matrix");
        std::swap(w[col], w[piv]);
        const uint32_t s = f.inv_value(w[col][col]);
        for (size_t j = 0; j < 8; ++j) w[col][j] = f.mul_values(w[col][j], s);
        for (size_t i = 0; i < 4; ++i) {
            if (i == col || w[i][col] == 0) continue;
            const uint32_t factor = w[i][col];
            for (size_t j = 0; j < 8; ++j)
                w[i][j] = f.add_values(w[i][j], f.neg_value(f.mul_values(factor, w[col][j])));
        }
    }
    Mat4 r;
    r.f = a.f;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) r.set(i, j, w[i][4 + j]);
    return r;
}

Mat4 u_elem(FieldElem a, FieldElem b) {
    const FieldCtx& f = *a.ctx;
    if (!f.delta_enabled() || f.p() != 2)
        throw std::invalid_argument("u_elem needs a delta-enabled characteristic-2 field");
    const FieldElem da = delta(a), db = delta(b);
    const FieldElem r31 = a * da + b;
    const FieldElem r41 = a * a * da + a * b + db;
    Mat4 m = Mat4::identity(f);
    m.set(1, 0, a.value);
    m.set(2, 0, r31.value);
    m.set(2, 1, da.value);
    m.set(3, 0, r41.value);
    m.set(3, 1, b.value);
    m.set(3, 2, a.value);
    return m;
}

Mat4 t_elem(FieldElem k) {
    const FieldCtx& f = *k.ctx;
    if (!f.delta_enabled() || f.p() != 2)
        throw std::invalid_argument("t_elem needs a delta-enabled characteristic-2 field");
    if (k.is_zero()) throw std::domain_error("t_elem(0) is undefined");
    const FieldElem xi1 = delta_inv(k * delta(k));
    const FieldElem xi2 = delta_inv(k);
    Mat4 m;
    m.f = &f;
    m.set(0, 0, xi1.value);
    m.set(1, 1, xi2.value);
    m.set(2, 2, inv(xi2).value);
    m.set(3, 3, inv(xi1).value);
    return m;
}

Mat4 w0_elem(const FieldCtx& f) {
    Mat4 m;
    m.f = &f;
    for (size_t i = 0; i < 4; ++i) m.set(i, 3 - i, 1);
    return m;
}

bool preserves_form(const Mat4& m) {
    const Mat4 j = w0_elem(*m.f);
    return mul(mul(transpose(m), j), m) == j;
}

std::array<uint32_t, 4> SzContext::normalize(std::array<uint32_t, 4> v) const {
    const FieldCtx& f = *field_;
    for (uint32_t c : v)
        if (c != 0) {
            const uint32_t s = f.inv_value(c);
            for (uint32_t& x : v) x = f.mul_values(x, s);
            return v;
        }
    throw std::logic_error("zero vector has no projective point");
}

uint64_t SzContext::pack(const std::array<uint32_t, 4>& v) const {
    uint64_t key = 0;
    for (uint32_t c : v) key = key * field_->q() + c;
    return key;
}

std::array<uint32_t, 4> SzContext::apply(const Mat4& m, const std::array<uint32_t, 4>& v) const {
    const FieldCtx& f = *field_;
    std::array<uint32_t, 4> out{};
    for (size_t i = 0; i < 4; ++i) {
        uint32_t acc = 0;
        for (size_t j = 0; j < 4; ++j) acc = f.add_values(acc, f.mul_values(m.at(i, j), v[j]));
        out[i] = acc;
    }
    return out;
}

SzContext::SzContext(unsigned h) : h_(h) {
    if (h > 2) throw std::invalid_argument("h > 2 is beyond the desk-scale cap");
    field_ = std::make_shared<FieldCtx>(2, 2 * h + 1);
    const FieldCtx& f = *field_;

    // Generators: U(t^i, 0) and U(0, t^i) for the polynomial basis, the
    // torus element of the fixed primitive field generator, and J.
    std::vector<FieldElem> basis;
    for (unsigned i = 0; i < f.m(); ++i) basis.push_back(f.from_value(1u << i));
    for (FieldElem b : basis) mat_gens_.push_back(u_elem(b, f.zero()));
    for (FieldElem b : basis) mat_gens_.push_back(u_elem(f.zero(), b));
    if (f.q() > 2) mat_gens_.push_back(t_elem(f.generator()));
    mat_gens_.push_back(w0_elem(f));
    for (const Mat4& m : mat_gens_)
        if (!preserves_form(m)) throw std::logic_error("generator does not preserve the form");

    // Orbit of <e4>, the line fixed by the lower-triangular subgroup.
    points_.push_back({0, 0, 0, 1});
    point_index_.emplace(pack(points_[0]), 0);
    for (size_t k = 0; k < points_.size(); ++k) {
        for (const Mat4& m : mat_gens_) {
            const auto im = normalize(apply(m, points_[k]));
            const uint64_t key = pack(im);
            if (!point_index_.count(key)) {
                point_index_.emplace(key, static_cast<uint32_t>(points_.size()));
                points_.push_back(im);
            }
        }
    }
    const uint64_t q = f.q();
    if (points_.size() != q * q + 1)
        throw std::logic_error("projective orbit has wrong length " + std::to_string(points_.size()));

    std::vector<Perm> pgens;
    for (const Mat4& m : mat_gens_) pgens.push_back(to_perm(m));
    group_ = std::make_unique<PermGroup>(PermGroup::from_generators(std::move(pgens), points_.size()));
    const uint64_t expected = q * q * (q - 1) * (q * q + 1);
    if (group_->order() != expected)
        throw std::logic_error("suzuki group order check failed: got " + std::to_string(group_->order()) +
                               ", expected " + std::to_string(expected));
}

Perm SzContext::to_perm(const Mat4& m) const {
    Perm p;
    p.img.resize(points_.size());
    for (size_t i = 0; i < points_.size(); ++i) {
        const uint64_t key = pack(normalize(apply(m, points_[i])));
        auto it = point_index_.find(key);
        if (it == point_index_.end()) throw std::invalid_argument("matrix does not stabilize the point orbit");
        p.img[i] = static_cast<uint16_t>(it->second);
    }
    return p;
}

Perm SzContext::u_perm(FieldElem a, FieldElem b) const { return to_perm(u_elem(a, b)); }
Perm SzContext::t_perm(FieldElem k) const { return to_perm(t_elem(k)); }
Perm SzContext::w0_perm() const { return to_perm(w0_elem(*field_)); }

std::vector<Perm> SzContext::uminus_gens() const {
    const FieldCtx& f = *field_;
    std::vector<Perm> out;
    for (unsigned i = 0; i < f.m(); ++i) {
        out.push_back(u_perm(f.from_value(1u << i), f.zero()));
        out.push_back(u_perm(f.zero(), f.from_value(1u << i)));
    }
    return out;
}

std::vector<Perm> SzContext::borel_gens() const {
    std::vector<Perm> out;
    if (field_->q() > 2) out.push_back(t_perm(field_->generator()));
    for (Perm& p : uminus_gens()) out.push_back(std::move(p));
    return out;
}

std::vector<Perm> SzContext::torus_elements() const {
    std::vector<Perm> out;
    for (uint32_t v = 1; v < field_->q(); ++v) {
        Perm p = t_perm(field_->from_value(v));
        if (!p.is_identity()) out.push_back(std::move(p));
    }
    return out;
}

PermGroup SzContext::subgroup_T_ZU() const {
    const FieldCtx& f = *field_;
    std::vector<Perm> gens;
    if (f.q() > 2) gens.push_back(t_perm(f.generator()));
    for (unsigned i = 0; i < f.m(); ++i) gens.push_back(u_perm(f.zero(), f.from_value(1u << i)));
    return PermGroup::from_generators(std::move(gens), points_.size());
}

std::vector<Perm> SzContext::uminus_elements() const {
    const FieldCtx& f = *field_;
    std::vector<Perm> out;
    for (uint32_t a = 0; a < f.q(); ++a)
        for (uint32_t b = 0; b < f.q(); ++b)
            out.push_back(u_perm(f.from_value(a), f.from_value(b)));
    return out;
}

PermGroup sz2_affine_model() {
    // Points are GF(5) = {0..4}; generators y -> y+1 and y -> 2y.
    Perm add1(std::vector<uint16_t>{1, 2, 3, 4, 0});
    Perm mul2(std::vector<uint16_t>{0, 2, 4, 1, 3});
    PermGroup g = PermGroup::from_generators({add1, mul2}, 5);
    if (g.order() != 20) throw std::logic_error("affine model order check failed");
    return g;
}

} // namespace rackcollapse
