#pragma once

#include <cstdint>
#include <vector>

namespace dqs {

using IMat = std::vector<std::vector<long long>>;

IMat imat_identity(int n);
IMat imat_mul(const IMat& a, const IMat& b);

// Smith normal form: U * A * V = D with U, V unimodular and D diagonal,
// d1 | d2 | ... | dk >= 0. Vinv is maintained alongside V.
struct SnfResult {
    IMat d;
    IMat u;
    IMat v;
    IMat vinv;
};

SnfResult smith_normal_form(IMat a);

// Canonical basis (row-style Hermite normal form) of the lattice spanned by
// the rows; zero rows dropped, pivots positive, entries below pivots reduced
// into [0, pivot).
IMat hnf_rows(IMat a);

} // namespace dqs
