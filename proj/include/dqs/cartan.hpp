#pragma once

#include "dqs/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dqs {

// Weights live in the fundamental-weight basis: coords[i] = <w, alpha_i^vee>.
// Dominance, fusion labels and reflection arithmetic are all integer-exact
// in this basis.
using Weight = std::vector<long long>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
    Family family;
    int rank;

    bool operator==(const SimpleType&) const = default;
    auto operator<=>(const SimpleType&) const = default;
    std::string name() const; // "A1", "G2", ...
};

// Admissible pairs: A_n n>=1, B_n n>=2, C_n n>=3, D_n n>=4, E_6/7/8, F_4, G_2.
bool admissible(const SimpleType& t);

struct PositiveRoot {
    Weight fw_coords;               // the root in the fundamental-weight basis
    std::vector<long long> on_root_basis; // expansion over simple roots
    std::vector<long long> coroot;  // <w, root^vee> = sum coroot[i] * w[i]
};

struct RootSystemData {
    SimpleType type;
    std::vector<std::vector<long long>> cartan; // cartan[i][j] = <alpha_i, alpha_j^vee>
    std::vector<PositiveRoot> positive_roots;
    Weight rho;                                 // (1, ..., 1)
    std::vector<long long> symmetrizer;         // d_i with (d_i A_ij) symmetric
    std::vector<std::vector<Rat>> fw_gram;      // (omega_i, omega_j), exact
    std::vector<std::vector<Rat>> cartan_inv_t; // (A^T)^{-1}, for root-lattice tests
    Int weyl_order;
    long long lie_dim; // dim of the group, for the |positive roots| sanity check

    int rank() const { return type.rank; }
    // <w, alpha_i^vee> for the i-th simple root is just w[i]; this is the
    // general pairing against an arbitrary positive root.
    long long pair_coroot(const Weight& w, const PositiveRoot& r) const;
    Rat inner(const Weight& a, const Weight& b) const; // symmetrized bilinear form
    Weight simple_reflect(const Weight& w, int i) const;
    // w expressed over simple roots if it lies in the root lattice cone info:
    // returns true and fills coeffs when w is in the root lattice.
    bool root_lattice_coords(const Weight& w, std::vector<Rat>& coeffs) const;
    Weight highest_root() const; // highest weight of the adjoint representation
};

// Complete Cartan data for an admissible type; positive roots are generated
// by closing the simple roots under simple reflections.
RootSystemData build_root_system(const SimpleType& type);

struct DominantResult {
    Weight dominant;
    int sign;     // (-1)^(number of reflections applied); meaningless on a wall
    bool on_wall; // stabilizer nontrivial (dominant representative has a zero coord)
};

DominantResult to_dominant(Weight w, const RootSystemData& rs);

// The dominant weight -w0(w) (conjugate label); input must be dominant.
Weight negate_w0(const Weight& w, const RootSystemData& rs);

bool is_dominant(const Weight& w);
long long weight_height(const Weight& w); // sum of fundamental coordinates

} // namespace dqs
