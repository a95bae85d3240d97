#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace rackcollapse {

struct TooLargeError : std::runtime_error {
    explicit TooLargeError(const std::string& what) : std::runtime_error(what) {}
};

struct OrbitCapError : std::runtime_error {
    explicit OrbitCapError(const std::string& what) : std::runtime_error(what) {}
};

// Permutation of {0..n-1}, img[i] = image of i.
struct Perm {
    std::vector<uint16_t> img;

    Perm() = default;
    explicit Perm(std::vector<uint16_t> images) : img(std::move(images)) {}
    static Perm identity(size_t n);

    size_t degree() const { return img.size(); }
    uint16_t operator[](size_t i) const { return img[i]; }
    bool is_identity() const;
    Perm inverse() const;

    friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }
    friend bool operator!=(const Perm& a, const Perm& b) { return a.img != b.img; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img < b.img; }
};

// (a * b)(i) = a(b(i)): apply b first. Matches the matrix convention, so
// perm images of matrix products compose without reversal.
Perm compose(const Perm& a, const Perm& b);
// g > x = g x g^-1
Perm conj(const Perm& g, const Perm& x);
uint64_t element_order(const Perm& x);

struct PermHash {
    size_t operator()(const Perm& p) const {
        uint64_t h = 1469598103934665603ull;
        for (uint16_t v : p.img) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

// Conjugacy orbit with transversal: conjugators[i] > representative ==
// elements[i]. BFS order (queue order, generator index order), so the
// layout is reproducible run to run.
struct ClassOrbit {
    Perm representative;
    std::vector<Perm> elements;
    std::vector<Perm> conjugators;
    std::unordered_map<Perm, uint32_t, PermHash> index;

    size_t size() const { return elements.size(); }
    bool contains(const Perm& x) const { return index.count(x) != 0; }
    // Position of x in the orbit; throws if absent.
    uint32_t position(const Perm& x) const;
};

// Permutation group with base and strong generating set. Immutable after
// construction; order and membership are exact.
class PermGroup {
public:
    static PermGroup from_generators(std::vector<Perm> gens, size_t degree);
    static PermGroup trivial(size_t degree);

    size_t degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }
    uint64_t order() const { return order_; }
    bool is_abelian() const;
    bool contains(const Perm& x) const;
    const std::vector<uint16_t>& base() const { return base_; }

    // All elements, BFS over generator products. Throws TooLargeError if
    // the (known) order exceeds cap.
    std::vector<Perm> elements(uint64_t cap = 1000000) const;

private:
    struct Level {
        uint16_t beta = 0;
        std::vector<Perm> gens;
        std::vector<int32_t> pos;      // point -> orbit position, -1 outside
        std::vector<uint16_t> orbit;   // BFS order
        std::vector<Perm> trans;       // trans[k](beta) == orbit[k]
        void rebuild_orbit(size_t degree);
    };

    void build();
    // Strip x through levels starting at `from`; returns residue and the
    // level where it got stuck.
    std::pair<Perm, size_t> strip(Perm x, size_t from) const;

    size_t degree_ = 0;
    std::vector<Perm> gens_;
    std::vector<uint16_t> base_;
    std::vector<Level> levels_;
    uint64_t order_ = 1;
};

ClassOrbit conj_orbit(const Perm& x, const std::vector<Perm>& gens, uint64_t cap = 2000000);

// Centralizer via Schreier generators of the conjugation action on the
// class orbit; satisfies |G| = |orbit| * |centralizer|.
PermGroup centralizer(const PermGroup& G, const Perm& x, uint64_t orbit_cap = 2000000);

bool is_real(const PermGroup& G, const Perm& x, uint64_t orbit_cap = 2000000);

// Subgroup generated by S; nullopt when its order exceeds cap.
std::optional<PermGroup> closure(const std::vector<Perm>& S, size_t degree, uint64_t cap);

// Full class partition, deterministic: representatives are the
// lexicographically smallest elements of their classes, listed in
// increasing order.
std::vector<ClassOrbit> conjugacy_classes(const PermGroup& G, uint64_t cap = 1000000);

// Every subgroup of G, found by closing cyclic seeds and augmenting one
// element at a time, deduplicated by element set.
std::vector<PermGroup> all_subgroups(const PermGroup& G, uint64_t cap = 2500);

// Action on the disjoint union of the two point sets.
PermGroup direct_product(const PermGroup& G, const PermGroup& H);
Perm product_embed(const Perm& a, const Perm& b);

} // namespace rackcollapse
