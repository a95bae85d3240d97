#include "rackcollapse/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace rackcollapse {

Perm Perm::identity(size_t n) {
    Perm p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
}

bool Perm::is_identity() const {
    for (size_t i = 0; i < img.size(); ++i)
        if (img[i] != i) return false;
    return true;
}

Perm Perm::inverse() const {
    Perm r;
    r.img.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) r.img[img[i]] = static_cast<uint16_t>(i);
    return r;
}

Perm compose(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in composition");
    Perm r;
    r.img.resize(a.degree());
    for (size_t i = 0; i < a.degree(); ++i) r.img[i] = a.img[b.img[i]];
    return r;
}

Perm conj(const Perm& g, const Perm& x) {
    // g x g^-1 applied pointwise: i -> g(x(g^-1(i))), computed without
    // materializing g^-1.
    Perm r;
    r.img.resize(g.degree());
    for (size_t i = 0; i < g.degree(); ++i) r.img[g.img[i]] = g.img[x.img[i]];
    return r;
}

uint64_t element_order(const Perm& x) {
    std::vector<bool> seen(x.degree(), false);
    uint64_t ord = 1;
    for (size_t i = 0; i < x.degree(); ++i) {
        if (seen[i]) continue;
        uint64_t len = 0;
        size_t j = i;
        do {
            seen[j] = true;
            j = x.img[j];
            ++len;
        } while (j != i);
        ord = std::lcm(ord, len);
    }
    return ord;
}

uint32_t ClassOrbit::position(const Perm& x) const {
    auto it = index.find(x);
    if (it == index.end()) throw std::invalid_argument("element not in class orbit");
    return it->second;
}

void PermGroup::Level::rebuild_orbit(size_t degree) {
    pos.assign(degree, -1);
    orbit.clear();
    trans.clear();
    orbit.push_back(beta);
    trans.push_back(Perm::identity(degree));
    pos[beta] = 0;
    for (size_t k = 0; k < orbit.size(); ++k) {
        const uint16_t pt = orbit[k];
        for (const Perm& g : gens) {
            const uint16_t im = g.img[pt];
            if (pos[im] < 0) {
                pos[im] = static_cast<int32_t>(orbit.size());
                orbit.push_back(im);
                trans.push_back(compose(g, trans[k]));
            }
        }
    }
}

std::pair<Perm, size_t> PermGroup::strip(Perm x, size_t from) const {
    for (size_t l = from; l < levels_.size(); ++l) {
        const Level& lv = levels_[l];
        const int32_t p = lv.pos[x.img[lv.beta]];
        if (p < 0) return {std::move(x), l};
        x = compose(lv.trans[p].inverse(), x);
    }
    return {std::move(x), levels_.size()};
}

PermGroup PermGroup::trivial(size_t degree) {
    PermGroup g;
    g.degree_ = degree;
    g.order_ = 1;
    return g;
}

PermGroup PermGroup::from_generators(std::vector<Perm> gens, size_t degree) {
    PermGroup g;
    g.degree_ = degree;
    std::unordered_set<Perm, PermHash> seen;
    for (Perm& p : gens) {
        if (p.degree() != degree) throw std::invalid_argument("generator degree mismatch");
        if (p.is_identity()) continue;
        if (seen.insert(p).second) g.gens_.push_back(std::move(p));
    }
    g.build();
    return g;
}

void PermGroup::build() {
    order_ = 1;
    levels_.clear();
    base_.clear();
    if (gens_.empty()) return;

    auto new_level = [&](const Perm& witness) {
        Level lv;
        for (size_t i = 0; i < degree_; ++i)
            if (witness.img[i] != i) {
                lv.beta = static_cast<uint16_t>(i);
                break;
            }
        base_.push_back(lv.beta);
        levels_.push_back(std::move(lv));
    };

    // A generator fixing base[0..l-1] belongs to levels 0..l; extend the
    // base when it fixes every current base point.
    for (const Perm& g : gens_) {
        size_t l = 0;
        while (l < levels_.size() && g.img[levels_[l].beta] == levels_[l].beta) ++l;
        if (l == levels_.size()) new_level(g);
        for (size_t j = 0; j <= l; ++j) levels_[j].gens.push_back(g);
    }
    for (Level& lv : levels_) lv.rebuild_orbit(degree_);

    // Verify the stabilizer chain from the deepest level up; a Schreier
    // generator with a non-trivial residue is adjoined at its stick level
    // and verification resumes there. Levels are addressed by index only:
    // new_level may reallocate the vector.
    auto verify_level = [&](size_t i) -> std::optional<size_t> {
        for (size_t k = 0; k < levels_[i].orbit.size(); ++k) {
            for (size_t si = 0; si < levels_[i].gens.size(); ++si) {
                const Perm& s = levels_[i].gens[si];
                const uint16_t im = s.img[levels_[i].orbit[k]];
                Perm schreier =
                    compose(levels_[i].trans[levels_[i].pos[im]].inverse(), compose(s, levels_[i].trans[k]));
                if (schreier.is_identity()) continue;
                auto [res, l] = strip(std::move(schreier), i + 1);
                if (res.is_identity()) continue;
                if (l == levels_.size()) new_level(res);
                for (size_t j = i + 1; j <= l; ++j) {
                    levels_[j].gens.push_back(res);
                    levels_[j].rebuild_orbit(degree_);
                }
                return l;
            }
        }
        return std::nullopt;
    };
    size_t i = levels_.size();
    while (i-- > 0) {
        if (auto stick = verify_level(i)) i = *stick + 1;  // loop decrement lands on *stick
    }

    order_ = 1;
    for (const Level& lv : levels_) order_ *= static_cast<uint64_t>(lv.orbit.size());
}

bool PermGroup::contains(const Perm& x) const {
    if (x.degree() != degree_) return false;
    if (x.is_identity()) return true;
    auto [res, l] = strip(x, 0);
    (void)l;
    return res.is_identity();
}

bool PermGroup::is_abelian() const {
    for (size_t i = 0; i < gens_.size(); ++i)
        for (size_t j = i + 1; j < gens_.size(); ++j)
            if (compose(gens_[i], gens_[j]) != compose(gens_[j], gens_[i])) return false;
    return true;
}

std::vector<Perm> PermGroup::elements(uint64_t cap) const {
    if (order_ > cap) throw TooLargeError("group order " + std::to_string(order_) + " exceeds cap " + std::to_string(cap));
    std::vector<Perm> out;
    out.push_back(Perm::identity(degree_));
    std::unordered_set<Perm, PermHash> seen{out[0]};
    for (size_t k = 0; k < out.size(); ++k) {
        for (const Perm& g : gens_) {
            Perm y = compose(g, out[k]);
            if (seen.insert(y).second) out.push_back(std::move(y));
        }
    }
    return out;
}

ClassOrbit conj_orbit(const Perm& x, const std::vector<Perm>& gens, uint64_t cap) {
    ClassOrbit o;
    o.representative = x;
    o.elements.push_back(x);
    o.conjugators.push_back(Perm::identity(x.degree()));
    o.index.emplace(x, 0);
    for (size_t k = 0; k < o.elements.size(); ++k) {
        for (const Perm& g : gens) {
            Perm y = conj(g, o.elements[k]);
            if (o.index.count(y)) continue;
            if (o.elements.size() >= cap)
                throw OrbitCapError("conjugacy orbit exceeds cap " + std::to_string(cap));
            o.index.emplace(y, static_cast<uint32_t>(o.elements.size()));
            o.elements.push_back(std::move(y));
            o.conjugators.push_back(compose(g, o.conjugators[k]));
        }
    }
    return o;
}

PermGroup centralizer(const PermGroup& G, const Perm& x, uint64_t orbit_cap) {
    if (!G.contains(x)) throw std::invalid_argument("centralizer: element not in group");
    ClassOrbit o = conj_orbit(x, G.generators(), orbit_cap);
    std::vector<Perm> gens;
    std::unordered_set<Perm, PermHash> seen;
    for (size_t i = 0; i < o.elements.size(); ++i) {
        for (const Perm& s : G.generators()) {
            const Perm y = conj(s, o.elements[i]);
            const uint32_t j = o.index.at(y);
            Perm schreier = compose(o.conjugators[j].inverse(), compose(s, o.conjugators[i]));
            if (schreier.is_identity()) continue;
            if (seen.insert(schreier).second) gens.push_back(std::move(schreier));
        }
    }
    PermGroup C = PermGroup::from_generators(std::move(gens), G.degree());
    if (C.order() * o.size() != G.order())
        throw std::logic_error("orbit-stabilizer identity failed in centralizer computation");
    return C;
}

bool is_real(const PermGroup& G, const Perm& x, uint64_t orbit_cap) {
    if (!G.contains(x)) throw std::invalid_argument("is_real: element not in group");
    ClassOrbit o = conj_orbit(x, G.generators(), orbit_cap);
    return o.contains(x.inverse());
}

std::optional<PermGroup> closure(const std::vector<Perm>& S, size_t degree, uint64_t cap) {
    PermGroup g = PermGroup::from_generators(S, degree);
    if (g.order() > cap) return std::nullopt;
    return g;
}

std::vector<ClassOrbit> conjugacy_classes(const PermGroup& G, uint64_t cap) {
    if (G.order() > cap) throw TooLargeError("conjugacy_classes: group order exceeds cap");
    std::vector<Perm> elems = G.elements(cap);
    std::sort(elems.begin(), elems.end());
    std::unordered_set<Perm, PermHash> assigned;
    std::vector<ClassOrbit> classes;
    for (const Perm& e : elems) {
        if (assigned.count(e)) continue;
        ClassOrbit o = conj_orbit(e, G.generators(), G.order());
        for (const Perm& m : o.elements) assigned.insert(m);
        classes.push_back(std::move(o));
    }
    return classes;
}

namespace {

// Canonical key of a subgroup: hash of its sorted element list.
uint64_t element_set_key(std::vector<Perm> elems) {
    std::sort(elems.begin(), elems.end());
    uint64_t h = 1469598103934665603ull;
    for (const Perm& p : elems)
        for (uint16_t v : p.img) {
            h ^= v + 1;
            h *= 1099511628211ull;
        }
    return h;
}

} // namespace

std::vector<PermGroup> all_subgroups(const PermGroup& G, uint64_t cap) {
    if (G.order() > cap) throw TooLargeError("all_subgroups: group order exceeds cap");
    const std::vector<Perm> elems = G.elements(cap);

    struct Entry {
        PermGroup group;
        std::vector<Perm> elements;
    };
    std::vector<Entry> found;
    std::unordered_map<uint64_t, std::vector<size_t>> by_key;

    auto lookup = [&](uint64_t key, const std::vector<Perm>& sorted_elems) -> bool {
        auto it = by_key.find(key);
        if (it == by_key.end()) return false;
        for (size_t idx : it->second)
            if (found[idx].elements == sorted_elems) return true;
        return false;
    };
    auto add = [&](PermGroup g) -> bool {
        std::vector<Perm> es = g.elements(cap);
        std::sort(es.begin(), es.end());
        const uint64_t key = element_set_key(es);
        if (lookup(key, es)) return false;
        by_key[key].push_back(found.size());
        found.push_back({std::move(g), std::move(es)});
        return true;
    };

    add(PermGroup::trivial(G.degree()));
    for (const Perm& g : elems)
        if (!g.is_identity()) add(PermGroup::from_generators({g}, G.degree()));

    // Augment each known subgroup by one element until closed.
    for (size_t i = 0; i < found.size(); ++i) {
        if (found[i].group.order() == G.order()) continue;
        std::vector<Perm> gens = found[i].group.generators();
        gens.emplace_back();
        for (const Perm& g : elems) {
            if (g.is_identity() || found[i].group.contains(g)) continue;
            gens.back() = g;
            add(PermGroup::from_generators(gens, G.degree()));
        }
    }

    std::vector<PermGroup> out;
    out.reserve(found.size());
    for (Entry& e : found) out.push_back(std::move(e.group));
    return out;
}

Perm product_embed(const Perm& a, const Perm& b) {
    Perm r;
    r.img.reserve(a.degree() + b.degree());
    for (uint16_t v : a.img) r.img.push_back(v);
    for (uint16_t v : b.img) r.img.push_back(static_cast<uint16_t>(v + a.degree()));
    return r;
}

PermGroup direct_product(const PermGroup& G, const PermGroup& H) {
    const Perm idG = Perm::identity(G.degree());
    const Perm idH = Perm::identity(H.degree());
    std::vector<Perm> gens;
    for (const Perm& g : G.generators()) gens.push_back(product_embed(g, idH));
    for (const Perm& h : H.generators()) gens.push_back(product_embed(idG, h));
    PermGroup P = PermGroup::from_generators(std::move(gens), G.degree() + H.degree());
    if (P.order() != G.order() * H.order())
        throw std::logic_error("direct product order check failed");
    return P;
}

} // namespace rackcollapse
