#include "dqs/torus.hpp"

#include "dqs/error.hpp"
#include "dqs/snf.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

namespace dqs {

TorusElement torus_zero(int rank) {
    return TorusElement{std::vector<Rat>(rank, Rat(0))};
}

TorusElement torus_reduce(TorusElement t) {
    for (auto& c : t.coords)
        c = mod1(c);
    return t;
}

TorusElement torus_add(const TorusElement& a, const TorusElement& b) {
    TorusElement out;
    out.coords.reserve(a.coords.size());
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        out.coords.push_back(mod1(a.coords[i] + b.coords[i]));
    return out;
}

TorusElement torus_neg(const TorusElement& a) {
    TorusElement out;
    out.coords.reserve(a.coords.size());
    for (const auto& c : a.coords)
        out.coords.push_back(mod1(-c));
    return out;
}

bool is_zero(const TorusElement& t) {
    for (const auto& c : t.coords)
        if (c != 0)
            return false;
    return true;
}

long long torus_order(const TorusElement& t) {
    Int l = 1;
    for (const auto& c : t.coords)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    assert(l.fits_slong_p());
    return l.get_si();
}

Rat pair_mod1(const std::vector<long long>& weight, const TorusElement& t) {
    Rat s(0);
    for (std::size_t i = 0; i < weight.size(); ++i)
        if (weight[i] != 0)
            s += to_rat(weight[i]) * t.coords[i];
    return mod1(s);
}

bool TorusSubgroup::contains(const TorusElement& t) const {
    return std::binary_search(elements.begin(), elements.end(), t);
}

TorusSubgroup trivial_subgroup(int rank) {
    return TorusSubgroup{{torus_zero(rank)}};
}

TorusSubgroup subgroup_closure(int rank, const std::vector<TorusElement>& generators) {
    std::set<TorusElement> elems;
    std::vector<TorusElement> gens;
    for (const auto& g : generators)
        gens.push_back(torus_reduce(g));
    elems.insert(torus_zero(rank));
    std::vector<TorusElement> queue{torus_zero(rank)};
    for (std::size_t q = 0; q < queue.size(); ++q) {
        TorusElement cur = queue[q];
        for (const auto& g : gens) {
            TorusElement nxt = torus_add(cur, g);
            if (elems.insert(nxt).second)
                queue.push_back(nxt);
        }
    }
    TorusSubgroup s;
    s.elements.assign(elems.begin(), elems.end());
    return s;
}

SubgroupGenerators canonical_generators(const TorusSubgroup& s, int rank) {
    SubgroupGenerators out;
    if (s.order() <= 1)
        return out;
    long long m = 1;
    for (const auto& e : s.elements)
        m = std::lcm(m, torus_order(e));

    // L = lattice spanned by m*elements together with m*Z^rank; S = L/mZ^rank.
    IMat rows;
    for (const auto& e : s.elements) {
        std::vector<long long> v(rank);
        for (int i = 0; i < rank; ++i) {
            Rat x = e.coords[i] * to_rat(m);
            assert(x.get_den() == 1);
            v[i] = x.get_num().get_si();
        }
        rows.push_back(std::move(v));
    }
    for (int i = 0; i < rank; ++i) {
        std::vector<long long> v(rank, 0);
        v[i] = m;
        rows.push_back(std::move(v));
    }
    IMat basis = hnf_rows(std::move(rows)); // upper triangular, full rank
    assert(static_cast<int>(basis.size()) == rank);

    // C with C * basis = m * I, by forward substitution along columns.
    IMat c(rank, std::vector<long long>(rank, 0));
    for (int i = 0; i < rank; ++i) {
        std::vector<Rat> x(rank, Rat(0));
        for (int col = 0; col < rank; ++col) {
            Rat rhs = (col == i) ? to_rat(m) : Rat(0);
            for (int k = 0; k < col; ++k)
                rhs -= x[k] * to_rat(basis[k][col]);
            x[col] = rhs / to_rat(basis[col][col]);
        }
        for (int col = 0; col < rank; ++col) {
            assert(x[col].get_den() == 1);
            c[i][col] = x[col].get_num().get_si();
        }
    }

    // S = Z^rank / (Z^rank C); invariant factors from the SNF of C, and the
    // i-th generator is row i of Vinv * basis, divided by m.
    SnfResult snf = smith_normal_form(c);
    IMat gen_rows = imat_mul(snf.vinv, basis);
    for (int i = 0; i < rank; ++i) {
        long long d = snf.d[i][i];
        if (d <= 1)
            continue;
        TorusElement g;
        g.coords.reserve(rank);
        for (int j = 0; j < rank; ++j)
            g.coords.push_back(mod1(to_rat(gen_rows[i][j], m)));
        out.generators.push_back(std::move(g));
        out.orders.push_back(d);
    }
    return out;
}

std::vector<TorusElement> coset(const TorusSubgroup& s, const TorusElement& t) {
    std::vector<TorusElement> out;
    out.reserve(s.elements.size());
    for (const auto& e : s.elements)
        out.push_back(torus_add(e, t));
    std::sort(out.begin(), out.end());
    return out;
}

TorusElement coset_min(const TorusSubgroup& s, const TorusElement& t) {
    TorusElement best = torus_reduce(t);
    for (const auto& e : s.elements) {
        TorusElement c = torus_add(e, t);
        if (c < best)
            best = c;
    }
    return best;
}

std::vector<TorusElement> enumerate_elements(int rank, long long bound) {
    std::vector<Rat> farey;
    for (long long q = 1; q <= bound; ++q)
        for (long long p = 0; p < q; ++p)
            if (std::gcd(p, q) == 1)
                farey.push_back(to_rat(p, q));
    std::sort(farey.begin(), farey.end());
    std::vector<TorusElement> out;
    TorusElement cur = torus_zero(rank);
    auto rec = [&](auto&& self, int idx, long long ord) -> void {
        if (idx == rank) {
            out.push_back(cur);
            return;
        }
        for (const auto& f : farey) {
            long long o = std::lcm(ord, static_cast<long long>(f.get_den().get_si()));
            if (o > bound)
                continue;
            cur.coords[idx] = f;
            self(self, idx + 1, o);
        }
    };
    rec(rec, 0, 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TorusSubgroup> enumerate_subgroups(int rank, long long bound) {
    std::vector<TorusElement> candidates = enumerate_elements(rank, bound);
    std::set<TorusSubgroup> seen;
    std::vector<TorusSubgroup> queue{trivial_subgroup(rank)};
    seen.insert(queue[0]);
    for (std::size_t q = 0; q < queue.size(); ++q) {
        TorusSubgroup cur = queue[q];
        for (const auto& cand : candidates) {
            if (cur.contains(cand))
                continue;
            if (cur.order() * (torus_order(cand) > 1 ? 2 : 1) > bound)
                continue; // joining a new element at least doubles the order
            std::vector<TorusElement> gens = cur.elements;
            gens.push_back(cand);
            TorusSubgroup next = subgroup_closure(rank, gens);
            if (next.order() > bound)
                continue;
            if (seen.insert(next).second)
                queue.push_back(next);
        }
    }
    std::vector<TorusSubgroup> out(seen.begin(), seen.end());
    return out;
}

} // namespace dqs
