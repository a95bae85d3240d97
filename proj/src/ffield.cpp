#include "rackcollapse/ffield.hpp"

#include <algorithm>

namespace rackcollapse {

namespace {

constexpr uint32_t kMaxFieldSize = 1u << 20;

// Little-endian coefficient vectors over GF(p); highest entry nonzero
// (empty = zero polynomial).
using Poly = std::vector<uint8_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a mod b over GF(p); b monic-normalized internally.
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
    trim(a);
    const size_t db = b.size() - 1;
    // lead(b)^-1 mod p by scan (p <= 5)
    unsigned blead_inv = 1;
    for (unsigned t = 1; t < p; ++t)
        if (t * b[db] % p == 1) { blead_inv = t; break; }
    while (a.size() >= b.size() && !a.empty()) {
        const size_t shift = a.size() - b.size();
        const unsigned factor = a.back() * blead_inv % p;
        for (size_t i = 0; i < b.size(); ++i) {
            unsigned v = a[shift + i] + p - factor * b[i] % p;
            a[shift + i] = static_cast<uint8_t>(v % p);
        }
        trim(a);
    }
    return a;
}

bool is_irreducible(const Poly& f, unsigned p) {
    const size_t deg = f.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (size_t d = 1; 2 * d <= deg; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t low = 0; low < count; ++low) {
            Poly g(d + 1, 0);
            uint64_t v = low;
            for (size_t i = 0; i < d; ++i) {
                g[i] = static_cast<uint8_t>(v % p);
                v /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

Poly default_modulus(unsigned p, unsigned m) {
    if (m == 1) {
        return {0, 1};  // the polynomial t; GF(p) itself
    }
    uint64_t count = 1;
    for (unsigned i = 0; i < m; ++i) count *= p;
    for (uint64_t low = 0; low < count; ++low) {
        Poly f(m + 1, 0);
        uint64_t v = low;
        for (unsigned i = 0; i < m; ++i) {
            f[i] = static_cast<uint8_t>(v % p);
            v /= p;
        }
        f[m] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

const FieldCtx& require_ctx(const FieldElem& x) {
    if (x.ctx == nullptr) throw std::invalid_argument("field element without context");
    return *x.ctx;
}

const FieldCtx& require_same(const FieldElem& x, const FieldElem& y) {
    const FieldCtx& f = require_ctx(x);
    const FieldCtx& g = require_ctx(y);
    if (&f != &g && !f.same_field(g))
        throw std::invalid_argument("field context mismatch");
    return f;
}

const FieldCtx& require_delta(const FieldElem& x) {
    const FieldCtx& f = require_ctx(x);
    if (!f.delta_enabled())
        throw std::invalid_argument("context is not delta-enabled (need p in {2,3}, odd m)");
    return f;
}

} // namespace

bool operator==(const FieldElem& a, const FieldElem& b) {
    if (a.ctx == nullptr || b.ctx == nullptr) return a.ctx == b.ctx && a.value == b.value;
    return a.value == b.value && (a.ctx == b.ctx || a.ctx->same_field(*b.ctx));
}

FieldCtx::FieldCtx(unsigned p, unsigned m) : p_(p), m_(m) {
    if (p != 2 && p != 3 && p != 5) throw std::invalid_argument("unsupported characteristic (need p in {2,3,5})");
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
    modulus_ = default_modulus(p, m);
    init();
}

FieldCtx::FieldCtx(unsigned p, unsigned m, std::vector<uint8_t> modulus) : p_(p), m_(m), modulus_(std::move(modulus)) {
    if (p != 2 && p != 3 && p != 5) throw std::invalid_argument("unsupported characteristic (need p in {2,3,5})");
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (modulus_.size() != m + 1 || modulus_[m] == 0)
        throw std::invalid_argument("modulus must have degree m");
    for (uint8_t c : modulus_)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (m > 1 && !is_irreducible(modulus_, p))
        throw std::invalid_argument("modulus is reducible");
    init();
}

void FieldCtx::init() {
    uint64_t q = 1;
    for (unsigned i = 0; i < m_; ++i) {
        q *= p_;
        if (q > kMaxFieldSize) throw std::invalid_argument("field too large for desk scale");
    }
    q_ = static_cast<uint32_t>(q);

    // Multiplication by table: find the smallest generator of the unit
    // group by direct order computation, then fill exp/log.
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    auto raw_mul = [&](uint32_t a, uint32_t b) -> uint32_t {
        // Schoolbook product of digit vectors, reduced mod modulus.
        Poly pa(m_), pb(m_);
        uint32_t va = a, vb = b;
        for (unsigned i = 0; i < m_; ++i) { pa[i] = va % p_; va /= p_; pb[i] = vb % p_; vb /= p_; }
        Poly prod(2 * m_, 0);
        for (unsigned i = 0; i < m_; ++i) {
            if (pa[i] == 0) continue;
            for (unsigned j = 0; j < m_; ++j)
                prod[i + j] = static_cast<uint8_t>((prod[i + j] + pa[i] * pb[j]) % p_);
        }
        Poly r = poly_mod(std::move(prod), modulus_, p_);
        uint32_t v = 0;
        for (size_t i = r.size(); i > 0; --i) v = v * p_ + r[i - 1];
        return v;
    };

    if (q_ == 2) {
        generator_ = 1;
        exp_[0] = 1;
        log_[1] = 0;
        return;
    }
    for (uint32_t cand = 2; cand < q_; ++cand) {
        uint32_t x = cand;
        uint32_t ord = 1;
        while (x != 1) { x = raw_mul(x, cand); ++ord; }
        if (ord == q_ - 1) { generator_ = cand; break; }
    }
    uint32_t x = 1;
    for (uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = raw_mul(x, generator_);
    }
}

uint64_t FieldCtx::modulus_value() const {
    uint64_t v = 0;
    for (size_t i = modulus_.size(); i > 0; --i) v = v * p_ + modulus_[i - 1];
    return v;
}

unsigned FieldCtx::h() const {
    if (!delta_enabled()) throw std::logic_error("h() on a non-delta context");
    return (m_ - 1) / 2;
}

FieldElem FieldCtx::from_value(uint32_t v) const {
    if (v >= q_) throw std::invalid_argument("field value out of range");
    return {v, this};
}

FieldElem FieldCtx::from_coeffs(const std::vector<uint8_t>& coeffs) const {
    if (coeffs.size() > m_) throw std::invalid_argument("too many coefficients");
    uint32_t v = 0;
    for (size_t i = coeffs.size(); i > 0; --i) {
        if (coeffs[i - 1] >= p_) throw std::invalid_argument("coefficient out of range");
        v = v * p_ + coeffs[i - 1];
    }
    return {v, this};
}

std::vector<uint8_t> FieldCtx::coeffs(FieldElem x) const {
    std::vector<uint8_t> c(m_);
    uint32_t v = x.value;
    for (unsigned i = 0; i < m_; ++i) { c[i] = v % p_; v /= p_; }
    return c;
}

std::vector<FieldElem> FieldCtx::elements() const {
    std::vector<FieldElem> out;
    out.reserve(q_);
    for (uint32_t v = 0; v < q_; ++v) out.push_back({v, this});
    return out;
}

uint32_t FieldCtx::add_values(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    uint32_t out = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        out += (a % p_ + b % p_) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

uint32_t FieldCtx::neg_value(uint32_t a) const {
    if (p_ == 2) return a;
    uint32_t out = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        out += (p_ - a % p_) % p_ * mult;
        a /= p_;
        mult *= p_;
    }
    return out;
}

uint32_t FieldCtx::mul_values(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint32_t e = log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
}

uint32_t FieldCtx::inv_value(uint32_t a) const {
    if (a == 0) throw std::domain_error("inversion of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

uint32_t FieldCtx::pow_value(uint32_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    const uint64_t idx = static_cast<uint64_t>(log_[a]) * (e % (q_ - 1)) % (q_ - 1);
    return exp_[static_cast<uint32_t>(idx)];
}

FieldElem operator+(FieldElem x, FieldElem y) {
    const FieldCtx& f = require_same(x, y);
    return {f.add_values(x.value, y.value), &f};
}

FieldElem operator*(FieldElem x, FieldElem y) {
    const FieldCtx& f = require_same(x, y);
    return {f.mul_values(x.value, y.value), &f};
}

FieldElem inv(FieldElem x) {
    const FieldCtx& f = require_ctx(x);
    return {f.inv_value(x.value), &f};
}

FieldElem pow(FieldElem x, uint64_t e) {
    const FieldCtx& f = require_ctx(x);
    return {f.pow_value(x.value, e), &f};
}

FieldElem delta(FieldElem x) {
    const FieldCtx& f = require_delta(x);
    uint64_t e = 1;
    for (unsigned i = 0; i < f.h() + 1; ++i) e *= f.p();
    return pow(x, e);
}

FieldElem delta_inv(FieldElem x) {
    const FieldCtx& f = require_delta(x);
    uint64_t e = 1;
    for (unsigned i = 0; i < f.h(); ++i) e *= f.p();
    return pow(x, e);
}

FieldElem phi(FieldElem k) {
    require_delta(k);
    if (k.is_zero()) throw std::domain_error("phi(0) is undefined");
    return k * delta(k);
}

void F2Span::insert(FieldElem x) {
    const FieldCtx& f = require_ctx(x);
    if (f.p() != 2) throw std::invalid_argument("f2_span requires characteristic 2");
    if (ctx_ == nullptr) ctx_ = &f;
    else if (ctx_ != &f && !ctx_->same_field(f)) throw std::invalid_argument("field context mismatch");
    uint32_t v = x.value;
    for (uint32_t b : basis_) {
        const uint32_t lead = 1u << (31 - __builtin_clz(b));
        if (v & lead) v ^= b;
    }
    if (v == 0) return;
    // Reduce existing basis rows by the new vector, keep echelon order.
    const uint32_t lead = 1u << (31 - __builtin_clz(v));
    for (uint32_t& b : basis_)
        if (b & lead) b ^= v;
    basis_.push_back(v);
    std::sort(basis_.begin(), basis_.end(), std::greater<uint32_t>());
}

bool F2Span::contains(FieldElem x) const {
    if (x.value == 0) return true;
    if (ctx_ == nullptr) return false;
    uint32_t v = x.value;
    for (uint32_t b : basis_) {
        const uint32_t lead = 1u << (31 - __builtin_clz(b));
        if (v & lead) v ^= b;
    }
    return v == 0;
}

std::vector<FieldElem> F2Span::basis() const {
    std::vector<FieldElem> out;
    for (uint32_t b : basis_) out.push_back({b, ctx_});
    return out;
}

F2Span f2_span(const std::vector<FieldElem>& elems) {
    F2Span s;
    for (const FieldElem& x : elems) s.insert(x);
    return s;
}

} // namespace rackcollapse
