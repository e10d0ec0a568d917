#include "dqs/cartan.hpp"

#include "dqs/error.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace dqs {

std::string SimpleType::name() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

bool admissible(const SimpleType& t) {
    switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B: return t.rank >= 2;
    case Family::C: return t.rank >= 3;
    case Family::D: return t.rank >= 4;
    case Family::E: return t.rank >= 6 && t.rank <= 8;
    case Family::F: return t.rank == 4;
    case Family::G: return t.rank == 2;
    }
    return false;
}

namespace {

std::vector<std::vector<long long>> cartan_matrix(const SimpleType& t) {
    int n = t.rank;
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        a[i][i] = 2;
    auto edge = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
    switch (t.family) {
    case Family::A:
        for (int i = 0; i + 1 < n; ++i)
            edge(i, i + 1);
        break;
    case Family::B:
        for (int i = 0; i + 1 < n; ++i)
            edge(i, i + 1);
        a[n - 2][n - 1] = -2; // last simple root short
        break;
    case Family::C:
        for (int i = 0; i + 1 < n; ++i)
            edge(i, i + 1);
        a[n - 1][n - 2] = -2; // last simple root long
        break;
    case Family::D:
        for (int i = 0; i + 1 < n - 2; ++i)
            edge(i, i + 1);
        edge(n - 3, n - 2);
        edge(n - 3, n - 1);
        break;
    case Family::E:
        edge(0, 2);
        edge(1, 3);
        for (int i = 2; i + 1 < n; ++i)
            edge(i, i + 1);
        break;
    case Family::F:
        edge(0, 1);
        edge(2, 3);
        a[1][2] = -2;
        a[2][1] = -1;
        break;
    case Family::G:
        a[0][1] = -1;
        a[1][0] = -3;
        break;
    }
    return a;
}

// Minimal positive integers d with A * diag(d) symmetric, by propagation
// along the (connected) Dynkin graph.
std::vector<long long> symmetrizer_of(const std::vector<std::vector<long long>>& a) {
    int n = static_cast<int>(a.size());
    std::vector<Rat> d(n, Rat(0));
    d[0] = 1;
    std::vector<int> queue{0};
    while (!queue.empty()) {
        int i = queue.back();
        queue.pop_back();
        for (int j = 0; j < n; ++j)
            if (i != j && a[i][j] != 0 && d[j] == 0) {
                // A_ij d_j = A_ji d_i
                d[j] = d[i] * to_rat(a[j][i]) / to_rat(a[i][j]);
                queue.push_back(j);
            }
    }
    Int lcm = 1;
    for (auto& x : d) {
        if (x == 0)
            throw domain_error("disconnected Cartan matrix");
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    }
    std::vector<long long> out(n);
    for (int i = 0; i < n; ++i) {
        Rat v = d[i] * Rat(lcm);
        assert(v.get_den() == 1);
        out[i] = static_cast<long long>(v.get_num().get_si());
    }
    return out;
}

std::vector<std::vector<Rat>> rat_inverse(const std::vector<std::vector<Rat>>& m) {
    int n = static_cast<int>(m.size());
    std::vector<std::vector<Rat>> a = m, inv(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int p = col;
        while (p < n && a[p][col] == 0)
            ++p;
        if (p == n)
            throw domain_error("singular matrix");
        std::swap(a[p], a[col]);
        std::swap(inv[p], inv[col]);
        Rat piv = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= piv;
            inv[col][j] /= piv;
        }
        for (int i = 0; i < n; ++i)
            if (i != col && a[i][col] != 0) {
                Rat f = a[i][col];
                for (int j = 0; j < n; ++j) {
                    a[i][j] -= f * a[col][j];
                    inv[i][j] -= f * inv[col][j];
                }
            }
    }
    return inv;
}

long long lie_dim_of(const SimpleType& t) {
    long long n = t.rank;
    switch (t.family) {
    case Family::A: return n * (n + 2);
    case Family::B:
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    case Family::E: return t.rank == 6 ? 78 : (t.rank == 7 ? 133 : 248);
    case Family::F: return 52;
    case Family::G: return 14;
    }
    return 0;
}

Int weyl_order_of(const SimpleType& t) {
    Int f = 1;
    auto fact = [](long long n) {
        Int r = 1;
        for (long long i = 2; i <= n; ++i)
            r *= static_cast<long>(i);
        return r;
    };
    switch (t.family) {
    case Family::A: return fact(t.rank + 1);
    case Family::B:
    case Family::C:
        mpz_ui_pow_ui(f.get_mpz_t(), 2, t.rank);
        return f * fact(t.rank);
    case Family::D:
        mpz_ui_pow_ui(f.get_mpz_t(), 2, t.rank - 1);
        return f * fact(t.rank);
    case Family::E: return t.rank == 6 ? Int(51840) : (t.rank == 7 ? Int(2903040) : Int(696729600));
    case Family::F: return Int(1152);
    case Family::G: return Int(12);
    }
    return f;
}

} // namespace

long long RootSystemData::pair_coroot(const Weight& w, const PositiveRoot& r) const {
    long long s = 0;
    for (int i = 0; i < rank(); ++i)
        s += r.coroot[i] * w[i];
    return s;
}

Rat RootSystemData::inner(const Weight& a, const Weight& b) const {
    Rat s(0);
    for (int i = 0; i < rank(); ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < rank(); ++j)
            if (b[j] != 0)
                s += to_rat(a[i]) * fw_gram[i][j] * to_rat(b[j]);
    }
    return s;
}

Weight RootSystemData::simple_reflect(const Weight& w, int i) const {
    Weight out = w;
    long long c = w[i];
    if (c != 0)
        for (int j = 0; j < rank(); ++j)
            out[j] -= c * cartan[i][j];
    return out;
}

bool RootSystemData::root_lattice_coords(const Weight& w, std::vector<Rat>& coeffs) const {
    int n = rank();
    coeffs.assign(n, Rat(0));
    bool integral = true;
    for (int k = 0; k < n; ++k) {
        Rat c(0);
        for (int j = 0; j < n; ++j)
            if (w[j] != 0)
                c += cartan_inv_t[k][j] * to_rat(w[j]);
        coeffs[k] = c;
        if (c.get_den() != 1)
            integral = false;
    }
    return integral;
}

Weight RootSystemData::highest_root() const {
    const PositiveRoot* best = nullptr;
    long long best_h = -1;
    for (const auto& r : positive_roots) {
        long long h = 0;
        for (auto c : r.on_root_basis)
            h += c;
        if (h > best_h) {
            best_h = h;
            best = &r;
        }
    }
    return best->fw_coords;
}

RootSystemData build_root_system(const SimpleType& type) {
    if (!admissible(type))
        throw domain_error("inadmissible simple type " + type.name() +
                           ": admissible ranks are A>=1, B>=2, C>=3, D>=4, E6/E7/E8, F4, G2");
    RootSystemData rs;
    rs.type = type;
    int n = type.rank;
    rs.cartan = cartan_matrix(type);
    rs.rho.assign(n, 1);
    rs.symmetrizer = symmetrizer_of(rs.cartan);
    rs.lie_dim = lie_dim_of(type);
    rs.weyl_order = weyl_order_of(type);

    std::vector<std::vector<Rat>> at(n, std::vector<Rat>(n));
    std::vector<std::vector<Rat>> am(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            at[i][j] = to_rat(rs.cartan[j][i]);
            am[i][j] = to_rat(rs.cartan[i][j]);
        }
    rs.cartan_inv_t = rat_inverse(at);
    auto ainv = rat_inverse(am);
    rs.fw_gram.assign(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rs.fw_gram[i][j] = ainv[i][j] * to_rat(rs.symmetrizer[j]);

    // Close the simple roots under simple reflections; both fw and root-basis
    // coordinates are carried along (the pairing with alpha_i^vee is the i-th
    // fw coordinate, so reflections are cheap in both).
    struct RootRec {
        Weight fw;
        std::vector<long long> rb;
    };
    std::map<Weight, std::vector<long long>> seen;
    std::vector<RootRec> queue;
    for (int i = 0; i < n; ++i) {
        RootRec r;
        r.fw.assign(rs.cartan[i].begin(), rs.cartan[i].end());
        r.rb.assign(n, 0);
        r.rb[i] = 1;
        if (seen.emplace(r.fw, r.rb).second)
            queue.push_back(r);
    }
    for (std::size_t q = 0; q < queue.size(); ++q) {
        RootRec cur = queue[q];
        for (int i = 0; i < n; ++i) {
            long long c = cur.fw[i];
            if (c == 0)
                continue;
            RootRec nxt;
            nxt.fw = rs.simple_reflect(cur.fw, i);
            nxt.rb = cur.rb;
            nxt.rb[i] -= c;
            if (seen.emplace(nxt.fw, nxt.rb).second)
                queue.push_back(nxt);
        }
    }

    for (auto& [fw, rb] : seen) {
        bool pos = true, nonzero = false;
        for (auto c : rb) {
            if (c < 0)
                pos = false;
            if (c != 0)
                nonzero = true;
        }
        if (!pos || !nonzero)
            continue;
        PositiveRoot pr;
        pr.fw_coords = fw;
        pr.on_root_basis = rb;
        // <w, alpha^vee> = sum_j rb_j d_j w_j / d_alpha with d_alpha = (alpha,alpha)/2
        Rat norm2(0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (rb[i] != 0 && rb[j] != 0)
                    norm2 += to_rat(rb[i]) * to_rat(rs.cartan[i][j] * rs.symmetrizer[j]) * to_rat(rb[j]);
        Rat d_alpha = norm2 / 2;
        pr.coroot.assign(n, 0);
        for (int j = 0; j < n; ++j) {
            Rat p = to_rat(rb[j] * rs.symmetrizer[j]) / d_alpha;
            assert(p.get_den() == 1);
            pr.coroot[j] = static_cast<long long>(p.get_num().get_si());
        }
        rs.positive_roots.push_back(std::move(pr));
    }
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
              [](const PositiveRoot& a, const PositiveRoot& b) {
                  return a.on_root_basis < b.on_root_basis;
              });
    assert(2 * static_cast<long long>(rs.positive_roots.size()) == rs.lie_dim - n);
    return rs;
}

DominantResult to_dominant(Weight w, const RootSystemData& rs) {
    int sign = 1;
    int n = rs.rank();
    for (;;) {
        int i = 0;
        while (i < n && w[i] >= 0)
            ++i;
        if (i == n)
            break;
        w = rs.simple_reflect(w, i);
        sign = -sign;
    }
    bool wall = false;
    for (auto c : w)
        if (c == 0)
            wall = true;
    return {std::move(w), sign, wall};
}

Weight negate_w0(const Weight& w, const RootSystemData& rs) {
    if (!is_dominant(w))
        throw domain_error("negate_w0 requires a dominant weight");
    Weight neg(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        neg[i] = -w[i];
    return to_dominant(std::move(neg), rs).dominant;
}

bool is_dominant(const Weight& w) {
    for (auto c : w)
        if (c < 0)
            return false;
    return true;
}

long long weight_height(const Weight& w) {
    long long h = 0;
    for (auto c : w)
        h += c;
    return h;
}

} // namespace dqs
