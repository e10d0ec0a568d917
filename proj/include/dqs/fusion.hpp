#pragma once

#include "dqs/group.hpp"

#include <map>
#include <memory>

namespace dqs {

// Element of the fusion ring R(G): finite map from labels to multiplicities.
// Zero entries are never stored.
struct FusionVector {
    std::map<IrrepLabel, long long> terms;

    bool operator==(const FusionVector&) const = default;
    long long multiplicity(const IrrepLabel& l) const {
        auto it = terms.find(l);
        return it == terms.end() ? 0 : it->second;
    }
};

struct FusionConfig {
    long long max_weight_height = 48; // resource bound for weight diagrams
    std::size_t cache_limit = 4096;   // diagram cache entries
};

FusionConfig& fusion_config();

// Full weight diagram of an irreducible with highest weight lambda,
// computed by Freudenthal recursion over the dominant weights and expanded
// along Weyl orbits.
struct WeightDiagram {
    std::map<Weight, long long> dominant;
    std::map<Weight, long long> all;
    Int dim;
};

std::shared_ptr<const WeightDiagram> weight_diagram(const RootSystemData& rs,
                                                    const Weight& lambda);

// Weight multiplicities of the given simple factor of the label.
std::map<Weight, long long> weight_multiplicities(const GroupSpec& g, const IrrepLabel& l,
                                                  std::size_t factor_index);

// Brauer-Klimyk: add the weight diagram of one factor to the rho-shifted
// highest weight of the other and reflect into the dominant chamber with
// signs; wall terms drop. Works componentwise over product groups, with
// U(n) factors handled through their SU(n) part and determinant charge.
FusionVector tensor_decompose(const GroupSpec& g, const IrrepLabel& a, const IrrepLabel& b);

Int classical_dim(const GroupSpec& g, const IrrepLabel& l);

// prod over positive roots of [<l+rho,a^vee>]_q / [<rho,a^vee>]_q with
// [n]_q = (q^n - q^-n)/(q - q^-1), exact; requires 0 < q < 1.
Rat quantum_dim(const GroupSpec& g, const IrrepLabel& l, const Rat& q);

IrrepLabel conjugate(const GroupSpec& g, const IrrepLabel& l);

// Conversions for U(n) labels: non-increasing tuple <-> (A_{n-1} fundamental
// coordinates, coordinate sum).
Weight unitary_su_part(const std::vector<long long>& tuple);
long long unitary_charge(const std::vector<long long>& tuple);
std::vector<long long> unitary_tuple(const Weight& su_part, long long charge);

} // namespace dqs
