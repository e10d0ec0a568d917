#include "dqs/snf.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace dqs {

IMat imat_identity(int n) {
    IMat m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

IMat imat_mul(const IMat& a, const IMat& b) {
    int n = static_cast<int>(a.size());
    int k = static_cast<int>(b.size());
    int m = k ? static_cast<int>(b[0].size()) : 0;
    IMat c(n, std::vector<long long>(m, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            long long s = 0;
            for (int t = 0; t < k; ++t)
                s += a[i][t] * b[t][j];
            c[i][j] = s;
        }
    return c;
}

namespace {

struct SnfWork {
    IMat& a;
    IMat& u;
    IMat& v;
    IMat& vinv;
    int rows, cols;

    void swap_rows(int i, int j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    }
    void add_row(int dst, int src, long long q) { // row dst += q * row src
        for (int c = 0; c < cols; ++c)
            a[dst][c] += q * a[src][c];
        for (int c = 0; c < rows; ++c)
            u[dst][c] += q * u[src][c];
    }
    void negate_row(int i) {
        for (int c = 0; c < cols; ++c)
            a[i][c] = -a[i][c];
        for (int c = 0; c < rows; ++c)
            u[i][c] = -u[i][c];
    }
    void swap_cols(int i, int j) {
        for (auto& row : a)
            std::swap(row[i], row[j]);
        for (auto& row : v)
            std::swap(row[i], row[j]);
        std::swap(vinv[i], vinv[j]);
    }
    void add_col(int dst, int src, long long q) { // col dst += q * col src
        for (auto& row : a)
            row[dst] += q * row[src];
        for (auto& row : v)
            row[dst] += q * row[src];
        for (int c = 0; c < cols; ++c)
            vinv[src][c] -= q * vinv[dst][c];
    }
};

} // namespace

SnfResult smith_normal_form(IMat a) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    SnfResult r;
    r.u = imat_identity(rows);
    r.v = imat_identity(cols);
    r.vinv = imat_identity(cols);
    SnfWork w{a, r.u, r.v, r.vinv, rows, cols};

    int k = std::min(rows, cols);
    for (int t = 0; t < k; ++t) {
        for (;;) {
            // smallest nonzero |entry| in the remaining block as pivot
            int pi = -1, pj = -1;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j)
                    if (a[i][j] != 0 &&
                        (pi < 0 || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0)
                goto done; // all remaining entries zero
            if (pi != t)
                w.swap_rows(t, pi);
            if (pj != t)
                w.swap_cols(t, pj);

            bool dirty = false;
            for (int i = t + 1; i < rows; ++i)
                if (a[i][t] != 0) {
                    long long q = a[i][t] / a[t][t];
                    w.add_row(i, t, -q);
                    if (a[i][t] != 0)
                        dirty = true;
                }
            for (int j = t + 1; j < cols; ++j)
                if (a[t][j] != 0) {
                    long long q = a[t][j] / a[t][t];
                    w.add_col(j, t, -q);
                    if (a[t][j] != 0)
                        dirty = true;
                }
            if (dirty)
                continue;
            // divisibility: every remaining entry must be a multiple of the pivot
            bool fixed = true;
            for (int i = t + 1; i < rows && fixed; ++i)
                for (int j = t + 1; j < cols && fixed; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        w.add_row(t, i, 1);
                        fixed = false;
                    }
            if (fixed)
                break;
        }
        if (a[t][t] < 0)
            w.negate_row(t);
    }
done:
    r.d = a;
    return r;
}

IMat hnf_rows(IMat a) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        // Euclid on the column below the current rank row
        for (;;) {
            int p = -1;
            for (int i = rank; i < rows; ++i)
                if (a[i][col] != 0 && (p < 0 || std::llabs(a[i][col]) < std::llabs(a[p][col])))
                    p = i;
            if (p < 0)
                break;
            std::swap(a[rank], a[p]);
            bool clean = true;
            for (int i = rank + 1; i < rows; ++i)
                if (a[i][col] != 0) {
                    long long q = a[i][col] / a[rank][col];
                    for (int c = 0; c < cols; ++c)
                        a[i][c] -= q * a[rank][c];
                    if (a[i][col] != 0)
                        clean = false;
                }
            if (clean)
                break;
        }
        if (a[rank][col] == 0)
            continue;
        if (a[rank][col] < 0)
            for (int c = 0; c < cols; ++c)
                a[rank][c] = -a[rank][c];
        // reduce the rows above into [0, pivot)
        for (int i = 0; i < rank; ++i) {
            long long q = a[i][col] / a[rank][col];
            if (a[i][col] % a[rank][col] < 0)
                --q;
            if (q != 0)
                for (int c = 0; c < cols; ++c)
                    a[i][c] -= q * a[rank][c];
        }
        ++rank;
    }
    a.resize(rank);
    return a;
}

} // namespace dqs
