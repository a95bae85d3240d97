#include "rackcollapse/nichols.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "rackcollapse/ffield.hpp"
#include "rackcollapse/rack.hpp"
#include "rackcollapse/ree_small.hpp"
#include "rackcollapse/suzuki.hpp"

namespace rackcollapse {

RootOfUnity::RootOfUnity(uint64_t n, uint64_t k) {
    if (n == 0) throw std::invalid_argument("root of unity needs n >= 1");
    k %= n;
    const uint64_t g = std::gcd(n, k == 0 ? n : k);
    n_ = k == 0 ? 1 : n / g;
    k_ = k == 0 ? 0 : k / g;
}

RootOfUnity RootOfUnity::inverse() const { return {n_, (n_ - k_) % n_}; }

RootOfUnity RootOfUnity::pow(uint64_t e) const {
    return {n_, static_cast<uint64_t>((__uint128_t)k_ * e % n_)};
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    const uint64_t n = std::lcm(a.n_, b.n_);
    const uint64_t k = (a.k_ * (n / a.n_) + b.k_ * (n / b.n_)) % n;
    return {n, k};
}

std::vector<CyclicFactor> cyclic_decomposition(const PermGroup& A) {
    if (!A.is_abelian()) throw std::invalid_argument("cyclic_decomposition needs an abelian group");
    std::vector<Perm> elems = A.elements();
    // Elements by decreasing order, serialized order inside a tier; a
    // maximal-order element always spans a direct factor, and the
    // product-size test keeps the partial product a direct one.
    std::stable_sort(elems.begin(), elems.end(), [](const Perm& a, const Perm& b) {
        const uint64_t oa = element_order(a), ob = element_order(b);
        if (oa != ob) return oa > ob;
        return a < b;
    });

    std::vector<CyclicFactor> factors;
    std::unordered_set<Perm, PermHash> span{Perm::identity(A.degree())};
    uint64_t span_size = 1;
    for (const Perm& g : elems) {
        if (span_size == A.order()) break;
        if (g.is_identity() || span.count(g)) continue;
        const uint64_t og = element_order(g);
        // Direct-product test: |<span, g>| == span_size * |g|.
        std::vector<Perm> powers;
        Perm pow = g;
        while (!pow.is_identity()) {
            powers.push_back(pow);
            pow = compose(pow, g);
        }
        std::unordered_set<Perm, PermHash> bigger = span;
        for (const Perm& base : span)
            for (const Perm& p : powers) bigger.insert(compose(base, p));
        if (bigger.size() != span_size * og) continue;
        factors.push_back({g, og});
        span = std::move(bigger);
        span_size *= og;
    }
    if (span_size != A.order()) throw std::logic_error("cyclic decomposition failed");
    return factors;
}

AbelianData::AbelianData(PermGroup group) : group_(std::move(group)) {
    factors_ = cyclic_decomposition(group_);
    // Exponent vector of every element, verified to enumerate the whole
    // group exactly once (counting distinct products).
    std::vector<uint32_t> exps(factors_.size(), 0);
    exponents_.reserve(group_.order());
    while (true) {
        Perm prod = Perm::identity(group_.degree());
        for (size_t i = 0; i < factors_.size(); ++i)
            for (uint32_t e = 0; e < exps[i]; ++e) prod = compose(prod, factors_[i].generator);
        if (!exponents_.emplace(std::move(prod), exps).second)
            throw std::logic_error("cyclic decomposition is not a direct product");
        size_t i = 0;
        for (; i < factors_.size(); ++i) {
            if (++exps[i] < factors_[i].order) break;
            exps[i] = 0;
        }
        if (i == factors_.size()) break;
    }
    if (exponents_.size() != group_.order())
        throw std::logic_error("exponent table does not cover the group");
}

const std::vector<uint32_t>& AbelianData::exponents(const Perm& x) const {
    auto it = exponents_.find(x);
    if (it == exponents_.end()) throw std::invalid_argument("element not in the abelian group");
    return it->second;
}

Character::Character(const AbelianData* data, std::vector<uint32_t> exps)
    : data_(data), exps_(std::move(exps)) {
    if (exps_.size() != data_->factors().size()) throw std::invalid_argument("character arity mismatch");
}

RootOfUnity Character::operator()(const Perm& x) const {
    const std::vector<uint32_t>& xe = data_->exponents(x);
    RootOfUnity out;
    for (size_t i = 0; i < exps_.size(); ++i) {
        const uint64_t d = data_->factors()[i].order;
        out = out * RootOfUnity(d, static_cast<uint64_t>(exps_[i]) * xe[i] % d);
    }
    return out;
}

bool Character::is_trivial() const {
    return std::all_of(exps_.begin(), exps_.end(), [](uint32_t e) { return e == 0; });
}

std::vector<Character> characters(const AbelianData& A) {
    std::vector<Character> out;
    std::vector<uint32_t> exps(A.factors().size(), 0);
    // Lexicographic in exponent vectors, most significant factor last to
    // match the odometer; the all-zero (trivial) character comes first.
    while (true) {
        out.emplace_back(&A, exps);
        size_t i = 0;
        for (; i < exps.size(); ++i) {
            if (++exps[i] < A.factors()[i].order) break;
            exps[i] = 0;
        }
        if (i == exps.size()) break;
    }
    return out;
}

BraidingMatrix braiding(const PermGroup& G, const Perm& g, const AbelianData& A,
                        const Character& chi, uint64_t orbit_cap,
                        const std::vector<Perm>* transversal) {
    if (!A.contains(g)) throw std::invalid_argument("braiding: g must lie in A");
    for (const Perm& a : A.group().generators())
        if (compose(a, g) != compose(g, a))
            throw std::invalid_argument("braiding: A must centralize g");
    for (const Perm& a : A.group().generators())
        if (!G.contains(a)) throw std::invalid_argument("braiding: A must be a subgroup of G");

    std::vector<Perm> conjugators;
    if (transversal) {
        conjugators = *transversal;
        if (conjugators.empty() || !conjugators[0].is_identity())
            throw std::invalid_argument("braiding: explicit transversal must start with the identity");
        std::unordered_set<Perm, PermHash> seen;
        for (const Perm& c : conjugators) {
            if (!G.contains(c)) throw std::invalid_argument("braiding: transversal element not in G");
            if (!seen.insert(conj(c, g)).second)
                throw std::invalid_argument("braiding: transversal elements repeat a subrack point");
        }
    } else {
        const ClassOrbit orbit = conj_orbit(g, G.generators(), orbit_cap);
        for (size_t i = 0; i < orbit.size(); ++i)
            if (A.contains(orbit.elements[i])) conjugators.push_back(orbit.conjugators[i]);
    }

    BraidingMatrix B;
    B.size = conjugators.size();
    for (const Perm& c : conjugators) B.subrack.push_back(conj(c, g));
    B.q.reserve(B.size * B.size);
    for (uint32_t i = 0; i < B.size; ++i) {
        const Perm& gi = conjugators[i];
        for (uint32_t j = 0; j < B.size; ++j) {
            const Perm arg = conj(compose(conjugators[j].inverse(), gi), g);
            if (!A.contains(arg)) throw ClosureViolation(i, j);
            B.q.push_back(chi(arg));
        }
    }
    return B;
}

Gdd gdd(const BraidingMatrix& B) {
    Gdd out;
    for (uint32_t i = 0; i < B.size; ++i) out.vertex_labels.push_back(B.at(i, i));
    for (uint32_t i = 0; i < B.size; ++i)
        for (uint32_t j = i + 1; j < B.size; ++j) {
            const RootOfUnity label = B.at(i, j) * B.at(j, i);
            if (!label.is_one()) out.edges.push_back({i, j, label});
        }
    return out;
}

namespace {

// Any cycle in the subgraph of -1 labeled edges (simple graph, so a
// cycle has length >= 3); returns its vertices or empty.
std::vector<uint32_t> find_minus_one_cycle(const Gdd& g, size_t n) {
    std::vector<std::vector<uint32_t>> adj(n);
    for (const GddEdge& e : g.edges)
        if (e.label.is_minus_one()) {
            adj[e.a].push_back(e.b);
            adj[e.b].push_back(e.a);
        }
    std::vector<int32_t> parent(n, -1), depth(n, -1);
    for (uint32_t root = 0; root < n; ++root) {
        if (depth[root] >= 0) continue;
        depth[root] = 0;
        std::vector<uint32_t> stack{root};
        while (!stack.empty()) {
            const uint32_t v = stack.back();
            stack.pop_back();
            for (uint32_t w : adj[v]) {
                if (depth[w] < 0) {
                    depth[w] = depth[v] + 1;
                    parent[w] = static_cast<int32_t>(v);
                    stack.push_back(w);
                } else if (static_cast<int32_t>(w) != parent[v] && depth[w] <= depth[v]) {
                    // Back edge: walk both endpoints up to the meeting
                    // point to materialize the cycle.
                    std::vector<uint32_t> up_v, up_w;
                    uint32_t x = v, y = w;
                    while (depth[x] > depth[y]) {
                        up_v.push_back(x);
                        x = static_cast<uint32_t>(parent[x]);
                    }
                    while (depth[y] > depth[x]) {
                        up_w.push_back(y);
                        y = static_cast<uint32_t>(parent[y]);
                    }
                    while (x != y) {
                        up_v.push_back(x);
                        up_w.push_back(y);
                        x = static_cast<uint32_t>(parent[x]);
                        y = static_cast<uint32_t>(parent[y]);
                    }
                    up_v.push_back(x);
                    std::reverse(up_w.begin(), up_w.end());
                    up_v.insert(up_v.end(), up_w.begin(), up_w.end());
                    if (up_v.size() >= 3) return up_v;
                }
            }
        }
    }
    return {};
}

} // namespace

Verdict verdict(const BraidingMatrix& B) {
    Verdict v;
    // R1: a vertex with q_ii = 1.
    for (uint32_t i = 0; i < B.size; ++i)
        if (B.at(i, i).is_one()) {
            v.infinite = true;
            v.rule = "R1";
            v.witness = {i};
            return v;
        }
    // R2: all q_ii = -1 plus a cycle of -1 labeled edges.
    const bool all_minus_one = [&] {
        for (uint32_t i = 0; i < B.size; ++i)
            if (!B.at(i, i).is_minus_one()) return false;
        return B.size > 0;
    }();
    const Gdd diagram = gdd(B);
    if (all_minus_one) {
        std::vector<uint32_t> cycle = find_minus_one_cycle(diagram, B.size);
        if (!cycle.empty()) {
            v.infinite = true;
            v.rule = "R2";
            v.witness = std::move(cycle);
            return v;
        }
    }
    // R3: size 3, common primitive cube root on the diagonal, all three
    // edge labels its square.
    if (B.size == 3) {
        const RootOfUnity w = B.at(0, 0);
        bool ok = w.is_primitive_cube_root();
        for (uint32_t i = 1; i < 3 && ok; ++i) ok = B.at(i, i) == w;
        const RootOfUnity w2 = w.pow(2);
        ok = ok && diagram.edges.size() == 3;
        for (const GddEdge& e : diagram.edges) ok = ok && e.label == w2;
        if (ok) {
            v.infinite = true;
            v.rule = "R3";
            v.witness = {0, 1, 2};
            return v;
        }
    }
    return v;
}

bool az_real_odd(const PermGroup& G, const Perm& g, uint64_t orbit_cap) {
    const uint64_t ord = element_order(g);
    if (ord <= 1 || ord % 2 == 0) return false;
    return is_real(G, g, orbit_cap);
}

InvolutionBraidingReport involution_braiding_analysis(unsigned h) {
    if (h < 1 || h > 2) throw std::invalid_argument("involution_braiding_analysis needs h in {1, 2}");
    InvolutionBraidingReport report;
    report.h = h;

    // Span of phi(k) + phi(k^-1) over k outside the prime field; its
    // containing 1 is what forces a -1 edge for characters that are
    // nontrivial on U(0,1).
    FieldCtx f(2, 2 * h + 1);
    std::vector<FieldElem> span_gens;
    for (uint32_t v = 2; v < f.q(); ++v) {
        const FieldElem k = f.from_value(v);
        span_gens.push_back(phi(k) + phi(inv(k)));
    }
    report.span_contains_one = f2_span(span_gens).contains(f.one());

    if (h == 2) {
        // Field-level part only: the group side of GF(32) is gated off.
        report.all_infinite = report.span_contains_one;
        return report;
    }

    SzContext sz(h);
    const FieldCtx& sf = sz.field();
    PermGroup H = sz.subgroup_T_ZU();
    const Perm g = sz.u_perm(sf.zero(), sf.one());

    std::vector<Perm> zu_gens;
    for (unsigned i = 0; i < sf.m(); ++i) zu_gens.push_back(sz.u_perm(sf.zero(), sf.from_value(1u << i)));
    AbelianData A(PermGroup::from_generators(zu_gens, H.degree()));

    report.all_infinite = true;
    for (const Character& chi : characters(A)) {
        const BraidingMatrix B = braiding(H, g, A, chi);
        CharacterVerdict cv;
        cv.exponents = chi.exponents();
        cv.chi_g = chi(g);
        cv.v = verdict(B);
        if (!cv.v.infinite) {
            report.all_infinite = false;
            throw std::logic_error("unexpected Unknown verdict in the T Z(U^-) braiding analysis");
        }
        report.per_character.push_back(std::move(cv));
    }
    return report;
}

FrobeniusBraidingReport frobenius_braiding_analysis() {
    FrobeniusBraidingReport report;
    ReeG23 ree = build_2g2_3();
    const PermGroup& G = ree.group;

    PermGroup C = centralizer(G, ree.phi);
    report.centralizer_order = C.order();

    // A = the Sylow 3-subgroup of C(phi), generated by its order-3
    // elements; isomorphic to C3 x C3 and contains phi.
    std::vector<Perm> order3;
    for (const Perm& x : C.elements())
        if (element_order(x) == 3) order3.push_back(x);
    std::sort(order3.begin(), order3.end());
    AbelianData A(PermGroup::from_generators(order3, G.degree()));
    if (A.group().order() != 9) throw std::logic_error("expected C3 x C3 inside the centralizer");

    const ClassOrbit orbit = conj_orbit(ree.phi, G.generators());
    std::vector<Perm> subrack;
    for (const Perm& x : orbit.elements)
        if (A.contains(x)) subrack.push_back(x);
    report.subrack_size = subrack.size();
    report.subrack_commutes = is_commuting_set(subrack);
    if (subrack.size() != 3) throw std::logic_error("expected a 3-element abelian subrack");

    // Cyclic conjugator: z maps x0 to one of the other subrack points; if
    // z does not already act as a 3-cycle on the subrack, combine it with
    // y mapping x0 to the remaining point (one of z, y, yz, zy works).
    // The two non-base points are then labeled along the cycle.
    const Perm& x0 = subrack[0];
    const Perm z = orbit.conjugators[orbit.position(subrack[1])];
    const Perm y = orbit.conjugators[orbit.position(subrack[2])];
    auto three_cycle = [&](const Perm& c) {
        const Perm a = conj(c, x0);
        if (a == x0 || (a != subrack[1] && a != subrack[2])) return false;
        const Perm b = conj(c, a);
        if (b == x0 || b == a || (b != subrack[1] && b != subrack[2])) return false;
        return conj(c, b) == x0;
    };
    Perm cyc;
    for (const Perm& cand : {z, y, compose(y, z), compose(z, y)})
        if (three_cycle(cand)) {
            cyc = cand;
            break;
        }
    if (cyc.degree() == 0) throw std::logic_error("no cyclic conjugator found");
    report.cyclic_conjugator_found = true;

    const std::vector<Perm> transversal{Perm::identity(G.degree()), cyc, compose(cyc, cyc)};

    // Alternative transversal differing by A-elements: conjugators g_i a
    // with a in A reach the same subrack points, and since A is abelian
    // and contains every braiding argument, the matrix cannot change.
    // (The matrix is NOT independent of arbitrary closure-valid
    // transversals here: centralizer elements outside A act on A and
    // twist entries.)
    std::vector<Perm> translated{transversal[0]};
    for (size_t i = 1; i < transversal.size(); ++i)
        translated.push_back(compose(transversal[i], subrack[i % subrack.size()]));

    report.all_infinite = true;
    report.transversal_independent = true;
    for (const Character& chi : characters(A)) {
        const BraidingMatrix B = braiding(G, ree.phi, A, chi, 2000000, &transversal);
        const BraidingMatrix B2 = braiding(G, ree.phi, A, chi, 2000000, &translated);
        bool same = B2.size == B.size && B2.subrack == B.subrack;
        for (uint32_t i = 0; i < B.size && same; ++i)
            for (uint32_t j = 0; j < B.size && same; ++j) same = B2.at(i, j) == B.at(i, j);
        if (!same) report.transversal_independent = false;
        CharacterVerdict cv;
        cv.exponents = chi.exponents();
        cv.chi_g = chi(ree.phi);
        cv.v = verdict(B);
        if (!cv.v.infinite) {
            report.all_infinite = false;
            throw std::logic_error("unexpected Unknown verdict in the phi braiding analysis");
        }
        report.per_character.push_back(std::move(cv));
    }
    return report;
}

} // namespace rackcollapse
