#include "rackcollapse/collapse.hpp"

#include <algorithm>
#include <unordered_set>

#include "rackcollapse/prng.hpp"

namespace rackcollapse {

std::string to_string(CertKind k) {
    switch (k) {
        case CertKind::C: return "C";
        case CertKind::D: return "D";
        case CertKind::F: return "F";
    }
    return "?";
}

namespace {

bool commutes(const Perm& a, const Perm& b) { return compose(a, b) == compose(b, a); }

bool squares_differ(const Perm& r, const Perm& s) {
    const Perm rs = compose(r, s), sr = compose(s, r);
    return compose(rs, rs) != compose(sr, sr);
}

// BFS of the conjugation orbit of `start` under `gens`, with optional
// early exit as soon as `target` appears. Returns the orbit (partial when
// the target was found, flagged in `found_target`).
struct OrbitScan {
    std::vector<Perm> elements;
    bool found_target = false;
};

OrbitScan conj_orbit_scan(const Perm& start, const std::vector<Perm>& gens, const Perm* target,
                          uint64_t cap) {
    OrbitScan scan;
    std::unordered_set<Perm, PermHash> seen;
    scan.elements.push_back(start);
    seen.insert(start);
    if (target && start == *target) {
        scan.found_target = true;
        return scan;
    }
    for (size_t k = 0; k < scan.elements.size(); ++k) {
        for (const Perm& g : gens) {
            Perm y = conj(g, scan.elements[k]);
            if (seen.count(y)) continue;
            if (scan.elements.size() >= cap)
                throw OrbitCapError("type-check orbit exceeds cap " + std::to_string(cap));
            if (target && y == *target) {
                scan.found_target = true;
                return scan;
            }
            seen.insert(y);
            scan.elements.push_back(std::move(y));
        }
    }
    return scan;
}

} // namespace

bool check_type_D(const Perm& r, const Perm& s, uint64_t orbit_cap) {
    if (!squares_differ(r, s)) return false;
    const OrbitScan scan = conj_orbit_scan(r, {r, s}, &s, orbit_cap);
    return !scan.found_target;
}

TypeCOutcome check_type_C(const Perm& r, const Perm& s, const std::vector<Perm>& H_gens,
                          const Caps& caps) {
    TypeCOutcome out;
    if (commutes(r, s)) return out;  // condition (b)

    const bool pair_generated =
        H_gens.size() == 2 && ((H_gens[0] == r && H_gens[1] == s) || (H_gens[0] == s && H_gens[1] == r));

    PermGroup H = PermGroup::from_generators(H_gens, r.degree());
    if (!H.contains(r) || !H.contains(s)) throw std::invalid_argument("type C witnesses must lie in H");

    const OrbitScan orbit_r = conj_orbit_scan(r, H_gens, &s, caps.orbit);
    if (orbit_r.found_target) return out;  // condition (a) fails
    const OrbitScan orbit_s = conj_orbit_scan(s, H_gens, nullptr, caps.orbit);
    out.orbit_r = orbit_r.elements.size();
    out.orbit_s = orbit_s.elements.size();

    // (d): either min > 2 or max > 4
    const uint64_t lo = std::min(out.orbit_r, out.orbit_s);
    const uint64_t hi = std::max(out.orbit_r, out.orbit_s);
    if (!(lo > 2 || hi > 4)) return out;

    // (c): the two orbits together generate H; automatic for H = <r,s>.
    if (!pair_generated) {
        std::vector<Perm> union_gens = orbit_r.elements;
        union_gens.insert(union_gens.end(), orbit_s.elements.begin(), orbit_s.elements.end());
        PermGroup gen = PermGroup::from_generators(std::move(union_gens), r.degree());
        if (gen.order() != H.order()) return out;
    }
    out.ok = true;
    return out;
}

bool check_type_F(const std::array<Perm, 4>& w, uint64_t orbit_cap) {
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            if (w[i] == w[j] || commutes(w[i], w[j])) return false;
    const std::vector<Perm> gens(w.begin(), w.end());
    // Orbits under <r1..r4> are equal or disjoint; checking r_j not in
    // O_{r_i} for i < j covers all pairs.
    for (size_t i = 0; i < 3; ++i) {
        for (size_t j = i + 1; j < 4; ++j) {
            const OrbitScan scan = conj_orbit_scan(w[i], gens, &w[j], orbit_cap);
            if (scan.found_target) return false;
        }
    }
    return true;
}

namespace {

// Index-space BFS helpers over a fixed class orbit: conjugation by the
// representative is tabulated once, conjugation by s is computed on the
// fly with a single hash lookup into the class index.
struct ClassScan {
    const ClassOrbit& orbit;
    std::vector<uint32_t> rep_map;

    explicit ClassScan(const ClassOrbit& o) : orbit(o) {
        rep_map.resize(o.size());
        for (uint32_t i = 0; i < o.size(); ++i)
            rep_map[i] = o.position(conj(o.representative, o.elements[i]));
    }

    // Orbit of index 0 (the representative) under conjugation by
    // {representative, s}; early exit when s_idx is reached. Returns
    // (orbit size, reached flag).
    std::pair<uint64_t, bool> rep_orbit(uint32_t s_idx, std::vector<uint8_t>& visited,
                                        std::vector<uint32_t>& touched) const {
        const Perm& s = orbit.elements[s_idx];
        touched.clear();
        std::vector<uint32_t> queue{0};
        visited[0] = 1;
        touched.push_back(0);
        bool found = s_idx == 0;
        for (size_t k = 0; k < queue.size() && !found; ++k) {
            const uint32_t cur = queue[k];
            const uint32_t via_rep = rep_map[cur];
            const uint32_t via_s = orbit.position(conj(s, orbit.elements[cur]));
            for (uint32_t nxt : {via_rep, via_s}) {
                if (visited[nxt]) continue;
                if (nxt == s_idx) {
                    found = true;
                    break;
                }
                visited[nxt] = 1;
                touched.push_back(nxt);
                queue.push_back(nxt);
            }
        }
        const uint64_t size = queue.size();
        for (uint32_t t : touched) visited[t] = 0;
        return {size, found};
    }

    // Full orbit of s_idx under conjugation by {representative, s}.
    uint64_t s_orbit_size(uint32_t s_idx, std::vector<uint8_t>& visited,
                          std::vector<uint32_t>& touched) const {
        const Perm& s = orbit.elements[s_idx];
        touched.clear();
        std::vector<uint32_t> queue{s_idx};
        visited[s_idx] = 1;
        touched.push_back(s_idx);
        for (size_t k = 0; k < queue.size(); ++k) {
            const uint32_t cur = queue[k];
            const uint32_t via_rep = rep_map[cur];
            const uint32_t via_s = orbit.position(conj(s, orbit.elements[cur]));
            for (uint32_t nxt : {via_rep, via_s}) {
                if (!visited[nxt]) {
                    visited[nxt] = 1;
                    touched.push_back(nxt);
                    queue.push_back(nxt);
                }
            }
        }
        const uint64_t size = queue.size();
        for (uint32_t t : touched) visited[t] = 0;
        return size;
    }
};

CollapseCertificate make_cert(CertKind kind, const std::string& group_id, const Perm& rep,
                              std::vector<Perm> witnesses, std::vector<Perm> subgroup_gens,
                              uint64_t seed) {
    CollapseCertificate cert;
    cert.kind = kind;
    cert.group_id = group_id;
    cert.class_rep = rep;
    cert.witnesses = std::move(witnesses);
    cert.subgroup_gens = std::move(subgroup_gens);
    cert.seed = seed;
    return cert;
}

} // namespace

FindOutcome find_type(CertKind kind, const PermGroup& G, const std::string& group_id,
                      const ConjClassRack& R, SearchStrategy strategy, const SearchHints& hints,
                      const SearchBudgets& budgets, uint64_t seed, const Caps& caps) {
    FindOutcome out;
    const ClassOrbit& orbit = R.orbit();
    const Perm& rep = orbit.representative;
    const size_t n = orbit.size();

    auto emit = [&](CertKind k, std::vector<Perm> witnesses, std::vector<Perm> subgroup_gens) {
        CollapseCertificate cert =
            make_cert(k, group_id, rep, std::move(witnesses), std::move(subgroup_gens), seed);
        if (!verify(cert, G, caps))
            throw std::logic_error("certificate failed verification before emission");
        out.certificate = std::move(cert);
    };

    if (kind == CertKind::D || kind == CertKind::C) {
        // r fixed to the representative; complete decision procedure for D
        // and for C with H = <r,s> since all conditions conjugate
        // covariantly.
        ClassScan scan(orbit);
        std::vector<uint8_t> visited(n, 0);
        std::vector<uint32_t> touched;
        touched.reserve(n);
        bool budget_hit = false;
        for (uint32_t j = 1; j < n; ++j) {
            if (budgets.pair_scan_limit > 0 && out.scanned >= budgets.pair_scan_limit) {
                budget_hit = true;
                break;
            }
            const Perm& s = orbit.elements[j];
            ++out.scanned;
            if (kind == CertKind::D) {
                if (!squares_differ(rep, s)) continue;
                auto [size_r, found] = scan.rep_orbit(j, visited, touched);
                (void)size_r;
                if (found) continue;
                emit(CertKind::D, {rep, s}, {});
                return out;
            }
            // type C with H = <r,s>
            if (commutes(rep, s)) continue;
            auto [size_r, found] = scan.rep_orbit(j, visited, touched);
            if (found) continue;
            const uint64_t size_s = scan.s_orbit_size(j, visited, touched);
            if (!(std::min(size_r, size_s) > 2 || std::max(size_r, size_s) > 4)) continue;
            emit(CertKind::C, {rep, s}, {});
            return out;
        }

        if (budget_hit) {
            out.exhaustive = false;
            out.not_found_reason = "pair scan budget exhausted";
            return out;
        }

        if (kind == CertKind::C && !hints.structural_H.empty()) {
            // Structural subgroup branch: scan ordered pairs inside the
            // intersection of the class with H.
            PermGroup H = PermGroup::from_generators(hints.structural_H, G.degree());
            std::vector<Perm> inter;
            for (const Perm& x : orbit.elements)
                if (H.contains(x)) inter.push_back(x);
            // Partition the intersection into H-orbits once.
            std::vector<int32_t> orbit_id(inter.size(), -1);
            std::vector<uint64_t> orbit_size;
            std::unordered_map<Perm, uint32_t, PermHash> pos;
            for (uint32_t i = 0; i < inter.size(); ++i) pos.emplace(inter[i], i);
            for (uint32_t i = 0; i < inter.size(); ++i) {
                if (orbit_id[i] >= 0) continue;
                const int32_t id = static_cast<int32_t>(orbit_size.size());
                std::vector<uint32_t> queue{i};
                orbit_id[i] = id;
                for (size_t k = 0; k < queue.size(); ++k)
                    for (const Perm& g : hints.structural_H) {
                        const uint32_t im = pos.at(conj(g, inter[queue[k]]));
                        if (orbit_id[im] < 0) {
                            orbit_id[im] = id;
                            queue.push_back(im);
                        }
                    }
                orbit_size.push_back(queue.size());
            }
            for (uint32_t a = 0; a < inter.size(); ++a) {
                for (uint32_t b = a + 1; b < inter.size(); ++b) {
                    if (orbit_id[a] == orbit_id[b]) continue;
                    ++out.scanned;
                    if (commutes(inter[a], inter[b])) continue;
                    const uint64_t lo = std::min(orbit_size[orbit_id[a]], orbit_size[orbit_id[b]]);
                    const uint64_t hi = std::max(orbit_size[orbit_id[a]], orbit_size[orbit_id[b]]);
                    if (!(lo > 2 || hi > 4)) continue;
                    if (!check_type_C(inter[a], inter[b], hints.structural_H, caps).ok) continue;
                    emit(CertKind::C, {inter[a], inter[b]}, hints.structural_H);
                    return out;
                }
            }
        }
        out.exhaustive = true;
        out.not_found_reason = kind == CertKind::D
                                   ? "exhaustive representative-fixed scan found no witness pair"
                                   : "exhaustive representative-fixed scan (and structural subgroup "
                                     "scan) found no witness pair";
        return out;
    }

    // Type F: structured quadruples (torus conjugates of class elements,
    // the representative first, then any hinted seeds), then seeded
    // random quadruples.
    std::vector<uint32_t> bases{0};
    for (const Perm& cand : hints.structured_seeds) {
        auto it = orbit.index.find(cand);
        if (it != orbit.index.end() && it->second != 0) bases.push_back(it->second);
    }
    for (const uint32_t base : bases) {
        std::vector<uint32_t> pool;
        std::vector<bool> in_pool(n, false);
        for (const Perm& t : hints.torus) {
            auto it = orbit.index.find(conj(t, orbit.elements[base]));
            if (it == orbit.index.end() || in_pool[it->second]) continue;
            in_pool[it->second] = true;
            pool.push_back(it->second);
        }
        if (pool.size() < 4) continue;
        // All 4-subsets in lexicographic order of pool positions.
        const size_t m = pool.size();
        for (size_t a = 0; a + 3 < m; ++a)
            for (size_t b = a + 1; b + 2 < m; ++b)
                for (size_t c = b + 1; c + 1 < m; ++c)
                    for (size_t d = c + 1; d < m; ++d) {
                        ++out.scanned;
                        const std::array<Perm, 4> quad{orbit.elements[pool[a]], orbit.elements[pool[b]],
                                                       orbit.elements[pool[c]], orbit.elements[pool[d]]};
                        if (!check_type_F(quad, caps.orbit)) continue;
                        emit(CertKind::F, {quad[0], quad[1], quad[2], quad[3]}, {});
                        return out;
                    }
    }
    if (strategy == SearchStrategy::Random && n >= 4) {
        Xoshiro256 rng(seed);
        for (uint64_t t = 0; t < budgets.random_quadruples; ++t) {
            std::array<uint32_t, 4> idx;
            size_t filled = 0;
            while (filled < 4) {
                const uint32_t cand = static_cast<uint32_t>(rng.below(n));
                bool dup = false;
                for (size_t i = 0; i < filled; ++i) dup |= idx[i] == cand;
                if (!dup) idx[filled++] = cand;
            }
            ++out.scanned;
            const std::array<Perm, 4> quad{orbit.elements[idx[0]], orbit.elements[idx[1]],
                                           orbit.elements[idx[2]], orbit.elements[idx[3]]};
            if (!check_type_F(quad, caps.orbit)) continue;
            emit(CertKind::F, {quad[0], quad[1], quad[2], quad[3]}, {});
            return out;
        }
        out.not_found_reason = "structured quadruples and random budget exhausted";
    } else {
        out.not_found_reason = "structured quadruples exhausted";
    }
    return out;
}

bool verify(const CollapseCertificate& cert, const PermGroup& G, const Caps& caps) {
    if (cert.class_rep.degree() != G.degree()) return false;
    if (!G.contains(cert.class_rep)) return false;
    const ClassOrbit orbit = conj_orbit(cert.class_rep, G.generators(), caps.orbit);

    const size_t expected = cert.kind == CertKind::F ? 4 : 2;
    if (cert.witnesses.size() != expected) return false;
    for (const Perm& w : cert.witnesses) {
        auto it = orbit.index.find(w);
        if (it == orbit.index.end()) return false;
        // The connecting conjugator from the transversal must itself lie
        // in G and map the representative onto the witness.
        const Perm& c = orbit.conjugators[it->second];
        if (!G.contains(c) || conj(c, cert.class_rep) != w) return false;
    }

    switch (cert.kind) {
        case CertKind::D:
            return check_type_D(cert.witnesses[0], cert.witnesses[1], caps.orbit);
        case CertKind::C: {
            std::vector<Perm> H_gens = cert.subgroup_gens;
            if (H_gens.empty()) H_gens = {cert.witnesses[0], cert.witnesses[1]};
            for (const Perm& g : H_gens)
                if (!G.contains(g)) return false;
            return check_type_C(cert.witnesses[0], cert.witnesses[1], H_gens, caps).ok;
        }
        case CertKind::F: {
            const std::array<Perm, 4> quad{cert.witnesses[0], cert.witnesses[1], cert.witnesses[2],
                                           cert.witnesses[3]};
            return check_type_F(quad, caps.orbit);
        }
    }
    return false;
}

KthulhuReport kthulhu_exhaustive(const PermGroup& G, const ConjClassRack& R, const Caps& caps) {
    KthulhuReport rep;
    const std::vector<PermGroup> subs = all_subgroups(G, caps.subgroups);
    rep.exhaustive = true;
    rep.proved = true;
    for (const PermGroup& H : subs) {
        SubgroupIntersection si;
        si.subgroup_order = H.order();
        std::vector<Perm> inter;
        for (const Perm& x : R.orbit().elements)
            if (H.contains(x)) inter.push_back(x);
        if (inter.empty()) {
            si.outcome = "empty";
        } else {
            const ClassOrbit o = conj_orbit(inter[0], H.generators(), caps.orbit);
            if (o.size() == inter.size()) si.outcome = "single-class";
            else if (is_commuting_set(inter)) si.outcome = "commuting";
            else {
                si.outcome = "other";
                rep.proved = false;
            }
        }
        rep.intersections.push_back(std::move(si));
    }
    return rep;
}

ClassifyResult classify(const PermGroup& G, const std::string& group_id, const ConjClassRack& R,
                        const SearchHints& hints, const SearchBudgets& budgets, uint64_t seed,
                        const Caps& caps) {
    ClassifyResult res;
    res.order = element_order(R.representative());
    res.class_size = R.size();
    res.is_real_class = R.orbit().contains(R.representative().inverse());
    res.centralizer_order = G.order() / R.size();
    for (CertKind kind : {CertKind::C, CertKind::D, CertKind::F})
        res.outcomes.emplace(kind, find_type(kind, G, group_id, R, SearchStrategy::Random, hints,
                                             budgets, seed, caps));
    return res;
}

} // namespace rackcollapse
