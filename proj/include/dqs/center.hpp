#pragma once

#include "dqs/fusion.hpp"
#include "dqs/torus.hpp"

#include <vector>

namespace dqs {

// Center of one factor. For a simple factor this is P/Q computed from the
// Smith normal form of the Cartan matrix: invariant factors d1 | d2 | ...
// (the trivial ones dropped) with explicit torus-element generators in the
// factor's own coroot coordinates. A U(n) or circle factor reports the
// scalar circle as a distinguished infinite factor.
struct CenterFactor {
    std::vector<long long> invariant_factors;
    std::vector<TorusElement> generators;
    bool infinite_circle = false;
};

struct CenterData {
    GroupSpec group;
    std::vector<CenterFactor> factors;
};

CenterData center_group(const GroupSpec& g);

// Value of the central character: one residue block per factor. Simple
// factors contribute one residue in [0, d_i) per invariant factor; unitary
// and circle factors contribute a single integer (the coordinate sum).
struct CentralCharacter {
    std::vector<std::vector<long long>> values;

    bool operator==(const CentralCharacter&) const = default;
    auto operator<=>(const CentralCharacter&) const = default;
};

CentralCharacter central_character(const CenterData& c, const IrrepLabel& l);
CentralCharacter trivial_character(const CenterData& c);
CentralCharacter char_mul(const CenterData& c, const CentralCharacter& a,
                          const CentralCharacter& b);
CentralCharacter char_inverse(const CenterData& c, const CentralCharacter& a);
bool is_trivial_character(const CentralCharacter& x);

// All dominant labels of height <= h with the given central character, in
// canonical (lexicographic) order.
std::vector<IrrepLabel> irr_chi(const CenterData& c, const CentralCharacter& chi, long long h);

// Same, restricted to labels that are the unit outside the supported factors.
std::vector<IrrepLabel> irr_chi_supported(const CenterData& c, const CentralCharacter& chi,
                                          long long h, const std::vector<bool>& support);

// Closure of {seed} under taking irreducible summands of (element x gen),
// truncated to height <= h, iterated until saturation or the step bound.
// Every generator must have trivial central character.
std::vector<IrrepLabel> module_closure(const CenterData& c, const IrrepLabel& seed,
                                       const std::vector<IrrepLabel>& generators, long long h,
                                       int step_bound);

// Default module generators: the adjoint representation of each simple factor.
std::vector<IrrepLabel> adjoint_generators(const GroupSpec& g);

} // namespace dqs
