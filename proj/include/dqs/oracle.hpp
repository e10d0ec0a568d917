#pragma once

#include "dqs/fusion.hpp"

#include <map>

namespace dqs {

// Formal characters as Laurent polynomials over the weight lattice,
// exponents in fundamental coordinates.
using LaurentPoly = std::map<Weight, long long>;

// Brute-force oracle, independent of the Klimyk path: the character comes
// from the Weyl character formula (alternating orbit sums divided exactly
// by the Weyl denominator). Restricted to rank <= 2 and bounded height;
// intended for tests.
LaurentPoly character_oracle(const RootSystemData& rs, const Weight& lambda);

// Character of the selected simple factor of a label.
LaurentPoly character_oracle(const GroupSpec& g, const IrrepLabel& l, std::size_t factor_index);

// Multiply characters and peel off highest terms greedily. Must agree with
// tensor_decompose exactly wherever both are defined.
FusionVector oracle_tensor_decompose(const GroupSpec& g, const IrrepLabel& a,
                                     const IrrepLabel& b);

} // namespace dqs
