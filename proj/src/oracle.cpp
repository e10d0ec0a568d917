#include "dqs/oracle.hpp"

#include "dqs/error.hpp"

#include <algorithm>
#include <cassert>

namespace dqs {

namespace {

struct WeylElement {
    std::vector<std::vector<long long>> matrix; // action on fundamental coordinates
    int sign;
};

Weight weyl_apply(const std::vector<std::vector<long long>>& m, const Weight& w) {
    std::size_t n = w.size();
    Weight out(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[i] += m[i][j] * w[j];
    return out;
}

std::vector<WeylElement> weyl_group(const RootSystemData& rs) {
    int n = rs.rank();
    // simple reflection matrices: (s_i w)_j = w_j - w_i * cartan[i][j]
    std::vector<std::vector<std::vector<long long>>> gens;
    for (int i = 0; i < n; ++i) {
        auto m = std::vector<std::vector<long long>>(n, std::vector<long long>(n, 0));
        for (int j = 0; j < n; ++j)
            m[j][j] = 1;
        for (int j = 0; j < n; ++j)
            m[j][i] -= rs.cartan[i][j];
        gens.push_back(std::move(m));
    }
    std::vector<WeylElement> group;
    std::map<std::vector<std::vector<long long>>, int> seen;
    auto id = std::vector<std::vector<long long>>(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        id[i][i] = 1;
    group.push_back({id, 1});
    seen.emplace(id, 1);
    for (std::size_t q = 0; q < group.size(); ++q) {
        WeylElement cur = group[q];
        for (const auto& s : gens) {
            std::vector<std::vector<long long>> prod(n, std::vector<long long>(n, 0));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        prod[i][j] += s[i][k] * cur.matrix[k][j];
            if (seen.emplace(prod, -cur.sign).second)
                group.push_back({prod, -cur.sign});
        }
    }
    return group;
}

// Total group order on exponents: primary key is the root-basis coordinate
// sum (strictly positive on nonzero dominant-cone differences), then lex.
// The sum is scaled to an integer form for cheap comparisons.
struct TermOrder {
    std::vector<long long> level_coeffs;

    explicit TermOrder(const RootSystemData& rs) {
        int n = rs.rank();
        std::vector<Rat> cols(n, Rat(0));
        Int denom_lcm = 1;
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k)
                cols[j] += rs.cartan_inv_t[k][j];
            mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
                    cols[j].get_den().get_mpz_t());
        }
        for (int j = 0; j < n; ++j) {
            Rat scaled = cols[j] * Rat(denom_lcm);
            assert(scaled.get_den() == 1);
            level_coeffs.push_back(scaled.get_num().get_si());
        }
    }

    long long level(const Weight& w) const {
        long long s = 0;
        for (std::size_t j = 0; j < w.size(); ++j)
            s += level_coeffs[j] * w[j];
        return s;
    }
    // true when a precedes b as the leading term
    bool leads(const Weight& a, const Weight& b) const {
        long long la = level(a), lb = level(b);
        if (la != lb)
            return la > lb;
        return a > b;
    }
};

LaurentPoly::const_iterator leading_term(const LaurentPoly& p, const TermOrder& ord) {
    assert(!p.empty());
    auto best = p.begin();
    for (auto it = std::next(p.begin()); it != p.end(); ++it)
        if (ord.leads(it->first, best->first))
            best = it;
    return best;
}

void add_scaled_shift(LaurentPoly& dst, const LaurentPoly& src, const Weight& shift,
                      long long scale) {
    for (const auto& [w, c] : src) {
        Weight e(w.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            e[i] = w[i] + shift[i];
        long long& v = dst[e];
        v += scale * c;
        if (v == 0)
            dst.erase(e);
    }
}

LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [w, c] : a)
        add_scaled_shift(out, b, w, c);
    return out;
}

// Exact division in the group ring; the remainder must vanish.
LaurentPoly divide(LaurentPoly num, const LaurentPoly& den, const TermOrder& ord) {
    auto dlead = leading_term(den, ord);
    LaurentPoly quot;
    while (!num.empty()) {
        auto nlead = leading_term(num, ord);
        assert(nlead->second % dlead->second == 0);
        long long c = nlead->second / dlead->second;
        Weight shift(nlead->first.size());
        for (std::size_t i = 0; i < shift.size(); ++i)
            shift[i] = nlead->first[i] - dlead->first[i];
        quot[shift] += c;
        add_scaled_shift(num, den, shift, -c);
    }
    return quot;
}

void check_oracle_bounds(const RootSystemData& rs, const Weight& lambda) {
    if (rs.rank() > 2)
        throw resource_error("character oracle is limited to rank <= 2 factors (got " +
                             rs.type.name() + ")");
    if (weight_height(lambda) > fusion_config().max_weight_height)
        throw resource_error("character oracle height bound exceeded");
}

LaurentPoly oracle_char(const RootSystemData& rs, const Weight& lambda) {
    check_oracle_bounds(rs, lambda);
    auto group = weyl_group(rs);
    Weight lr(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i)
        lr[i] = lambda[i] + 1;
    LaurentPoly num, den;
    for (const auto& w : group) {
        num[weyl_apply(w.matrix, lr)] += w.sign;
        den[weyl_apply(w.matrix, rs.rho)] += w.sign;
    }
    for (auto it = num.begin(); it != num.end();)
        it = it->second == 0 ? num.erase(it) : std::next(it);
    for (auto it = den.begin(); it != den.end();)
        it = it->second == 0 ? den.erase(it) : std::next(it);
    return divide(std::move(num), den, TermOrder{rs});
}

// Greedy decomposition of a nonnegative character combination.
std::map<Weight, long long> decompose_character(LaurentPoly p, const RootSystemData& rs) {
    TermOrder ord{rs};
    std::map<Weight, long long> out;
    while (!p.empty()) {
        auto lead = leading_term(p, ord);
        Weight hw = lead->first;
        long long mult = lead->second;
        assert(is_dominant(hw) && mult > 0);
        out[hw] += mult;
        add_scaled_shift(p, oracle_char(rs, hw), Weight(hw.size(), 0), -mult);
    }
    return out;
}

} // namespace

LaurentPoly character_oracle(const RootSystemData& rs, const Weight& lambda) {
    if (!is_dominant(lambda))
        throw domain_error("character oracle requires a dominant weight");
    return oracle_char(rs, lambda);
}

LaurentPoly character_oracle(const GroupSpec& g, const IrrepLabel& l, std::size_t factor_index) {
    validate_label(g, l);
    if (factor_index >= g.size() || g.factor(factor_index).kind != FactorKind::Simple)
        throw domain_error("character_oracle needs a simple factor index");
    return character_oracle(g.root_system(factor_index), l.parts[factor_index]);
}

FusionVector oracle_tensor_decompose(const GroupSpec& g, const IrrepLabel& a,
                                     const IrrepLabel& b) {
    validate_label(g, a);
    validate_label(g, b);
    std::vector<std::vector<std::pair<std::vector<long long>, long long>>> per_factor;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Factor& f = g.factor(i);
        std::vector<std::pair<std::vector<long long>, long long>> out;
        if (f.kind == FactorKind::Simple) {
            const auto& rs = g.root_system(i);
            auto prod = multiply(oracle_char(rs, a.parts[i]), oracle_char(rs, b.parts[i]));
            for (auto& [w, m] : decompose_character(std::move(prod), rs))
                out.emplace_back(w, m);
        } else if (f.kind == FactorKind::Unitary) {
            const auto& rs = g.unitary_root_system(i);
            long long charge = unitary_charge(a.parts[i]) + unitary_charge(b.parts[i]);
            auto prod = multiply(oracle_char(rs, unitary_su_part(a.parts[i])),
                                 oracle_char(rs, unitary_su_part(b.parts[i])));
            for (auto& [w, m] : decompose_character(std::move(prod), rs))
                out.emplace_back(unitary_tuple(w, charge), m);
        } else {
            out.emplace_back(std::vector<long long>{a.parts[i][0] + b.parts[i][0]}, 1);
        }
        per_factor.push_back(std::move(out));
    }
    FusionVector result;
    IrrepLabel cur;
    cur.parts.resize(g.size());
    auto rec = [&](auto&& self, std::size_t idx, long long mult) -> void {
        if (idx == g.size()) {
            result.terms[cur] += mult;
            return;
        }
        for (const auto& [part, m] : per_factor[idx]) {
            cur.parts[idx] = part;
            self(self, idx + 1, mult * m);
        }
    };
    rec(rec, 0, 1);
    return result;
}

} // namespace dqs
