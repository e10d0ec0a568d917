#pragma once

#include "dqs/rational.hpp"

#include <vector>

namespace dqs {

// Point of T = (R/Z)^rank in simple-coroot coordinates, each reduced into
// [0, 1). Pairing a weight (fundamental coordinates) against a torus element
// is the plain dot product mod 1.
struct TorusElement {
    std::vector<Rat> coords;

    bool operator==(const TorusElement& o) const { return coords == o.coords; }
    bool operator<(const TorusElement& o) const { return compare(coords, o.coords) < 0; }
};

TorusElement torus_zero(int rank);
TorusElement torus_add(const TorusElement& a, const TorusElement& b);
TorusElement torus_neg(const TorusElement& a);
TorusElement torus_reduce(TorusElement t); // reduce each coordinate into [0,1)
bool is_zero(const TorusElement& t);
long long torus_order(const TorusElement& t); // lcm of coordinate denominators

Rat pair_mod1(const std::vector<long long>& weight, const TorusElement& t);

// Finite subgroup of T, stored as its full sorted element list.
struct TorusSubgroup {
    std::vector<TorusElement> elements; // sorted, contains zero

    long long order() const { return static_cast<long long>(elements.size()); }
    bool contains(const TorusElement& t) const;
    bool operator==(const TorusSubgroup& o) const { return elements == o.elements; }
    bool operator<(const TorusSubgroup& o) const { return elements < o.elements; }
};

TorusSubgroup subgroup_closure(int rank, const std::vector<TorusElement>& generators);
TorusSubgroup trivial_subgroup(int rank);

// Canonical generators: invariant-factor decomposition of the subgroup via
// Smith normal form of the lattice it spans over Z^rank. orders[i] > 1 and
// orders[i] | orders[i+1].
struct SubgroupGenerators {
    std::vector<TorusElement> generators;
    std::vector<long long> orders;
};
SubgroupGenerators canonical_generators(const TorusSubgroup& s, int rank);

// Sorted coset s + t.
std::vector<TorusElement> coset(const TorusSubgroup& s, const TorusElement& t);
// Lexicographically minimal representative of s + t.
TorusElement coset_min(const TorusSubgroup& s, const TorusElement& t);

// All finite subgroups of (Q/Z)^rank of order <= bound.
std::vector<TorusSubgroup> enumerate_subgroups(int rank, long long bound);
// All elements of order <= bound (candidates for generators and coset reps).
std::vector<TorusElement> enumerate_elements(int rank, long long bound);

} // namespace dqs
