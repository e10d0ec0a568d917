#pragma once

#include "dqs/center.hpp"
#include "dqs/error.hpp"
#include "dqs/torus.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace dqs {

using SetPair = std::pair<TorusElement, IrrepLabel>;

// Finite truncation of the dual of a candidate discrete quantum subgroup:
// pairs (torus point, label) kept up to the stated height bound.
struct ExplicitSet {
    GroupSpec group;
    long long height_bound = 0;
    std::set<SetPair> pairs;
};

enum class ViolationKind {
    MissingUnit,
    Conjugation,
    ProductClosure,
    InfiniteFiberSuspect,
    IrrationalCoordinate,
};

const char* violation_kind_name(ViolationKind k);

struct Violation {
    ViolationKind kind;
    std::vector<SetPair> pairs;     // offending pair(s)
    std::optional<SetPair> missing; // the absent pair, when applicable
};

struct Verdict {
    bool accepted = false;
    std::vector<Violation> violations;
};

// Subring/conjugation criterion. Product closure is only demanded for
// summands of height <= height_bound - margin, margin being the maximal
// label height present, so acceptance is monotone in the bound.
Verdict check_closure(const ExplicitSet& set);

// Classification datum (J, S, F, f). For a semisimple group F is a finite
// subgroup of the center dual, stored with the twist value on every element
// (reps are always the lex-min member of their coset). For a single U(n)
// the dual of the center is Z: F = m Z graded by coordinate sums, with one
// twist rep for the generator m; J = {} data only carry determinant powers,
// so m is then a multiple of n.
struct SubgroupDatum {
    GroupSpec group;
    std::vector<int> j; // sorted indices of factors with full fibers
    TorusSubgroup s;
    bool unitary = false;
    std::vector<CentralCharacter> f_elements;         // finite case, sorted
    std::map<CentralCharacter, TorusElement> twist;   // finite case
    long long unitary_m = 0;                          // unitary case
    TorusElement unitary_twist;                       // unitary case, rep for +m

    bool operator==(const SubgroupDatum& o) const;
    bool operator<(const SubgroupDatum& o) const;
};

// Assembles and canonicalizes a datum from generator data, checking the
// invariants: S is completed to a subgroup, F to a character subgroup, and
// f must be a well-defined homomorphism F -> T/S (each generator relation
// is verified; violations are reported with the offending relation).
SubgroupDatum make_datum(const GroupSpec& group, const std::vector<int>& j,
                         const std::vector<TorusElement>& s_generators,
                         const std::vector<CentralCharacter>& f_generators,
                         const std::vector<TorusElement>& f_generator_reps);

SubgroupDatum make_unitary_datum(const GroupSpec& group, bool full_fibers,
                                 const std::vector<TorusElement>& s_generators, long long m,
                                 const TorusElement& twist_rep);

// The set coprod_{chi in F} (S + f(chi)) x Irr_chi(K_J), truncated at h.
ExplicitSet realize(const SubgroupDatum& d, long long h);

// Inverse of realize on accepted sets. Throws domain_error when the set is
// rejected by check_closure or its fibers contradict the coset structure.
SubgroupDatum classify(const ExplicitSet& set);

// U(n) entry point of classify; requires a single unitary factor.
SubgroupDatum classify_unitary(const ExplicitSet& set);

// Minimal height at which realize exposes everything classify needs to
// reconstruct the datum (each F fiber nonempty, each J factor visible).
long long recommended_height(const SubgroupDatum& d);

// All data (up to canonical form) whose generated torus subgroup
// <S u f(F)-reps> has order <= torus_bound; every emitted datum passes
// check_closure at height h. Deterministically ordered.
std::vector<SubgroupDatum> enumerate_data(const GroupSpec& group, long long torus_bound,
                                          long long h);

enum class QuotientMode { DoubleQuotient, GroupQuotient };

// Filters data through a central subgroup Z:
//  - DoubleQuotient keeps data whose realized set contains Z x {unit},
//    i.e. Z is contained in S.
//  - GroupQuotient keeps data that descend to the quotient group: Z inside
//    S and every F character trivial on Z. Torus parts stay in the
//    coordinates of T (the covering torus); rewrite_in_quotient gives the
//    same data in T/Z coordinates.
std::vector<SubgroupDatum> quotient_transfer(const GroupSpec& group,
                                             const std::vector<SubgroupDatum>& data,
                                             const std::vector<TorusElement>& z_generators,
                                             QuotientMode mode);

// S elements and twist reps of a kept GroupQuotient datum, rewritten in the
// coordinates of T/Z (basis of the enlarged coroot lattice).
struct QuotientCoordinates {
    std::vector<TorusElement> s_elements;
    std::vector<std::pair<CentralCharacter, TorusElement>> twist;
};
QuotientCoordinates rewrite_in_quotient(const SubgroupDatum& d,
                                        const std::vector<TorusElement>& z_generators);

// The finite-index intersection datum (J, {e}, ker f, 0); requires J to be
// the full set of simple factors (or {0} for U(n)).
SubgroupDatum commensurability_witness(const SubgroupDatum& d);

// Central subgroup check used by quotient_transfer and the CLI.
void require_central(const GroupSpec& g, const std::vector<TorusElement>& z_generators);

// Invariant-factor generators of a finite character subgroup (Smith-form
// canonical, like canonical_generators for torus subgroups).
struct CharGenerators {
    std::vector<CentralCharacter> generators;
    std::vector<long long> orders;
};
CharGenerators character_generators(const CenterData& cd,
                                    const std::vector<CentralCharacter>& elements);

// classify() failure on a set that did not pass check_closure.
class rejected_set_error : public domain_error {
public:
    rejected_set_error(const std::string& what, Verdict v)
        : domain_error(what), verdict(std::move(v)) {}
    Verdict verdict;
};

} // namespace dqs
