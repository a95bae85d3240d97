#include "rackcollapse/rack.hpp"

#include "rackcollapse/prng.hpp"

namespace rackcollapse {

ConjClassRack::ConjClassRack(const PermGroup& ambient, ClassOrbit orbit)
    : ambient_(&ambient), orbit_(std::move(orbit)) {
    const size_t n = orbit_.size();
    if (n == 0) throw std::invalid_argument("empty orbit");
    if (n < kTableCacheLimit) {
        table_.emplace(n * n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                (*table_)[i * n + j] = orbit_.position(conj(orbit_.elements[i], orbit_.elements[j]));
    }
}

uint32_t ConjClassRack::op_index(uint32_t i, uint32_t j) const {
    if (table_) return (*table_)[static_cast<size_t>(i) * size() + j];
    return orbit_.position(conj(orbit_.elements[i], orbit_.elements[j]));
}

ConjClassRack conj_rack(const PermGroup& G, const Perm& x, uint64_t orbit_cap) {
    if (!G.contains(x)) throw std::invalid_argument("conj_rack: element not in group");
    return ConjClassRack(G, conj_orbit(x, G.generators(), orbit_cap));
}

namespace {

// Shared harness: op(i,j) must return an index < n or throw on closure
// failure (signalled as n).
AxiomReport run_axiom_checks(size_t n, const std::function<uint32_t(uint32_t, uint32_t)>& op,
                             uint64_t samples, uint64_t seed, bool force_exhaustive) {
    AxiomReport rep;
    const bool exhaustive = force_exhaustive || static_cast<uint64_t>(n) * n * n <= 1000000;
    rep.exhaustive = exhaustive;

    auto fail = [&](const char* axiom, uint32_t x, uint32_t y, uint32_t z) {
        rep.pass = false;
        rep.violation = AxiomViolation{axiom, x, y, z};
    };

    // Closure and bijectivity of left translations are n^2 sweeps; they
    // are always run exhaustively.
    std::vector<bool> seen(n);
    for (uint32_t x = 0; x < n && rep.pass; ++x) {
        std::fill(seen.begin(), seen.end(), false);
        for (uint32_t y = 0; y < n; ++y) {
            const uint32_t im = op(x, y);
            if (im >= n) {
                fail("closure", x, y, 0);
                break;
            }
            if (seen[im]) {
                fail("bijectivity", x, y, im);
                break;
            }
            seen[im] = true;
        }
    }

    if (rep.pass) {
        auto selfdist = [&](uint32_t x, uint32_t y, uint32_t z) {
            const uint32_t lhs = op(x, op(y, z));
            const uint32_t rhs = op(op(x, y), op(x, z));
            if (lhs >= n || rhs >= n || lhs != rhs) fail("self-distributivity", x, y, z);
        };
        if (exhaustive) {
            for (uint32_t x = 0; x < n && rep.pass; ++x)
                for (uint32_t y = 0; y < n && rep.pass; ++y)
                    for (uint32_t z = 0; z < n && rep.pass; ++z) {
                        selfdist(x, y, z);
                        ++rep.triples_checked;
                    }
        } else {
            Xoshiro256 rng(seed);
            for (uint64_t t = 0; t < samples && rep.pass; ++t) {
                selfdist(static_cast<uint32_t>(rng.below(n)), static_cast<uint32_t>(rng.below(n)),
                         static_cast<uint32_t>(rng.below(n)));
                ++rep.triples_checked;
            }
        }
    }
    return rep;
}

} // namespace

AxiomReport check_axioms(const ConjClassRack& R, uint64_t samples, uint64_t seed, bool force_exhaustive) {
    const size_t n = R.size();
    AxiomReport rep = run_axiom_checks(
        n, [&](uint32_t i, uint32_t j) { return R.op_index(i, j); }, samples, seed, force_exhaustive);

    if (R.has_table()) {
        // Orbit of index 0 under all left translations.
        std::vector<bool> reached(n, false);
        std::vector<uint32_t> stack{0};
        reached[0] = true;
        size_t count = 1;
        while (!stack.empty()) {
            const uint32_t j = stack.back();
            stack.pop_back();
            for (uint32_t i = 0; i < n; ++i) {
                const uint32_t im = R.op_index(i, j);
                if (im < n && !reached[im]) {
                    reached[im] = true;
                    ++count;
                    stack.push_back(im);
                }
            }
        }
        rep.indecomposable = (count == n);
    }
    return rep;
}

AxiomReport check_axioms_table(const std::vector<std::vector<uint32_t>>& table, uint64_t samples,
                               uint64_t seed, bool force_exhaustive) {
    const size_t n = table.size();
    return run_axiom_checks(
        n,
        [&](uint32_t i, uint32_t j) -> uint32_t {
            if (i >= n || j >= n || table[i].size() != n) return static_cast<uint32_t>(n);
            return table[i][j];
        },
        samples, seed, force_exhaustive);
}

bool is_commuting_set(const std::vector<Perm>& elems) {
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = i + 1; j < elems.size(); ++j)
            if (compose(elems[i], elems[j]) != compose(elems[j], elems[i])) return false;
    return true;
}

} // namespace rackcollapse
