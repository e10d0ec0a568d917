#include "dqs/center.hpp"

#include "dqs/error.hpp"
#include "dqs/snf.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace dqs {

CenterData center_group(const GroupSpec& g) {
    CenterData out;
    out.group = g;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Factor& f = g.factor(i);
        CenterFactor cf;
        if (f.kind == FactorKind::Simple) {
            const auto& rs = g.root_system(i);
            int n = rs.rank();
            IMat a(n, std::vector<long long>(n));
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    a[r][c] = rs.cartan[r][c];
            SnfResult snf = smith_normal_form(a);
            // center = A^{-1}Z^n / Z^n; generator j is column j of V over d_j
            for (int j = 0; j < n; ++j) {
                long long d = snf.d[j][j];
                if (d <= 1)
                    continue;
                TorusElement t;
                t.coords.reserve(n);
                for (int r = 0; r < n; ++r)
                    t.coords.push_back(mod1(to_rat(snf.v[r][j], d)));
                cf.invariant_factors.push_back(d);
                cf.generators.push_back(std::move(t));
            }
        } else {
            cf.infinite_circle = true; // scalars of U(n), or the circle itself
        }
        out.factors.push_back(std::move(cf));
    }
    return out;
}

CentralCharacter central_character(const CenterData& c, const IrrepLabel& l) {
    validate_label(c.group, l);
    CentralCharacter chi;
    for (std::size_t i = 0; i < c.group.size(); ++i) {
        const CenterFactor& cf = c.factors[i];
        std::vector<long long> block;
        if (c.group.factor(i).kind == FactorKind::Simple) {
            for (std::size_t k = 0; k < cf.generators.size(); ++k) {
                Rat v = pair_mod1(l.parts[i], cf.generators[k]) * to_rat(cf.invariant_factors[k]);
                assert(v.get_den() == 1);
                block.push_back(v.get_num().get_si());
            }
        } else {
            long long sum = 0;
            for (auto x : l.parts[i])
                sum += x;
            block.push_back(sum);
        }
        chi.values.push_back(std::move(block));
    }
    return chi;
}

CentralCharacter trivial_character(const CenterData& c) {
    CentralCharacter chi;
    for (std::size_t i = 0; i < c.group.size(); ++i) {
        if (c.group.factor(i).kind == FactorKind::Simple)
            chi.values.emplace_back(c.factors[i].invariant_factors.size(), 0);
        else
            chi.values.emplace_back(1, 0);
    }
    return chi;
}

CentralCharacter char_mul(const CenterData& c, const CentralCharacter& a,
                          const CentralCharacter& b) {
    CentralCharacter out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        const auto& inv = c.factors[i].invariant_factors;
        for (std::size_t k = 0; k < out.values[i].size(); ++k) {
            out.values[i][k] += b.values[i][k];
            if (c.group.factor(i).kind == FactorKind::Simple)
                out.values[i][k] %= inv[k];
        }
    }
    return out;
}

CentralCharacter char_inverse(const CenterData& c, const CentralCharacter& a) {
    CentralCharacter out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        const auto& inv = c.factors[i].invariant_factors;
        for (std::size_t k = 0; k < out.values[i].size(); ++k) {
            if (c.group.factor(i).kind == FactorKind::Simple)
                out.values[i][k] = (inv[k] - out.values[i][k]) % inv[k];
            else
                out.values[i][k] = -out.values[i][k];
        }
    }
    return out;
}

bool is_trivial_character(const CentralCharacter& x) {
    for (const auto& block : x.values)
        for (auto v : block)
            if (v != 0)
                return false;
    return true;
}

std::vector<IrrepLabel> irr_chi(const CenterData& c, const CentralCharacter& chi, long long h) {
    return irr_chi_supported(c, chi, h, std::vector<bool>(c.group.size(), true));
}

std::vector<IrrepLabel> irr_chi_supported(const CenterData& c, const CentralCharacter& chi,
                                          long long h, const std::vector<bool>& support) {
    if (h < 0)
        throw domain_error("height bound must be >= 0");
    std::vector<IrrepLabel> out;
    for (auto& l : labels_up_to_height(c.group, h)) {
        bool ok = true;
        for (std::size_t i = 0; i < c.group.size() && ok; ++i)
            if (!support[i])
                for (auto v : l.parts[i])
                    if (v != 0)
                        ok = false;
        if (ok && central_character(c, l) == chi)
            out.push_back(std::move(l));
    }
    return out;
}

std::vector<IrrepLabel> module_closure(const CenterData& c, const IrrepLabel& seed,
                                       const std::vector<IrrepLabel>& generators, long long h,
                                       int step_bound) {
    validate_label(c.group, seed);
    for (const auto& gen : generators)
        if (!is_trivial_character(central_character(c, gen)))
            throw domain_error("module_closure generator " + format_label(gen) +
                               " has nontrivial central character");
    std::set<IrrepLabel> closure;
    std::vector<IrrepLabel> frontier;
    if (label_height(c.group, seed) <= h) {
        closure.insert(seed);
        frontier.push_back(seed);
    }
    for (int step = 0; step < step_bound && !frontier.empty(); ++step) {
        std::vector<IrrepLabel> next;
        for (const auto& x : frontier)
            for (const auto& gen : generators)
                for (const auto& [summand, mult] : tensor_decompose(c.group, x, gen).terms)
                    if (label_height(c.group, summand) <= h && closure.insert(summand).second)
                        next.push_back(summand);
        frontier = std::move(next);
    }
    return {closure.begin(), closure.end()};
}

std::vector<IrrepLabel> adjoint_generators(const GroupSpec& g) {
    std::vector<IrrepLabel> out;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.factor(i).kind == FactorKind::Simple) {
            IrrepLabel l = unit_label(g);
            l.parts[i] = g.root_system(i).highest_root();
            out.push_back(std::move(l));
        }
    return out;
}

} // namespace dqs
