#include "dqs/classifier.hpp"

#include "dqs/error.hpp"
#include "dqs/snf.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <numeric>

namespace dqs {

namespace {

constexpr std::size_t kMaxViolations = 64;
constexpr long long kHeightScanBound = 64;

bool single_unitary(const GroupSpec& g) {
    return g.size() == 1 && g.factor(0).kind == FactorKind::Unitary;
}

void require_classifiable(const GroupSpec& g) {
    if (!g.semisimple() && !single_unitary(g))
        throw domain_error("classifier operations support semisimple products and a single "
                           "U(n); got " + g.text());
}

std::vector<bool> index_support(const GroupSpec& g, const std::vector<int>& j) {
    std::vector<bool> support(g.size(), false);
    for (int k : j) {
        if (k < 0 || static_cast<std::size_t>(k) >= g.size())
            throw domain_error("J index " + std::to_string(k) + " out of range");
        support[k] = true;
    }
    return support;
}

// factor k sees non-abelian content: nonzero block on a simple factor,
// non-constant tuple on a unitary factor
bool non_abelian_on(const GroupSpec& g, const IrrepLabel& l, std::size_t k) {
    const auto& block = l.parts[k];
    switch (g.factor(k).kind) {
    case FactorKind::Simple:
        for (auto c : block)
            if (c != 0)
                return true;
        return false;
    case FactorKind::Unitary:
        for (std::size_t i = 1; i < block.size(); ++i)
            if (block[i] != block[0])
                return true;
        return false;
    case FactorKind::Circle:
        return false;
    }
    return false;
}

TorusElement torus_scale(const TorusElement& t, long long k) {
    TorusElement out;
    out.coords.reserve(t.coords.size());
    for (const auto& c : t.coords)
        out.coords.push_back(mod1(c * to_rat(k)));
    return out;
}

// ---- character space: finite characters as points of a torus, so the
// subgroup machinery can be reused for F ----

int char_space_rank(const CenterData& cd) {
    int r = 0;
    for (const auto& f : cd.factors)
        r += static_cast<int>(f.invariant_factors.size());
    return r;
}

TorusElement char_to_point(const CenterData& cd, const CentralCharacter& chi) {
    TorusElement t;
    for (std::size_t i = 0; i < cd.factors.size(); ++i)
        for (std::size_t k = 0; k < cd.factors[i].invariant_factors.size(); ++k)
            t.coords.push_back(mod1(to_rat(chi.values[i][k], cd.factors[i].invariant_factors[k])));
    return t;
}

CentralCharacter point_to_char(const CenterData& cd, const TorusElement& t) {
    CentralCharacter chi;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < cd.factors.size(); ++i) {
        std::vector<long long> block;
        for (std::size_t k = 0; k < cd.factors[i].invariant_factors.size(); ++k) {
            Rat v = t.coords[pos++] * to_rat(cd.factors[i].invariant_factors[k]);
            assert(v.get_den() == 1);
            block.push_back(v.get_num().get_si());
        }
        chi.values.push_back(std::move(block));
    }
    return chi;
}

// all characters of the center dual supported on J
std::vector<CentralCharacter> characters_supported(const CenterData& cd,
                                                   const std::vector<bool>& support) {
    std::vector<CentralCharacter> out;
    CentralCharacter cur = trivial_character(cd);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == cd.factors.size()) {
            out.push_back(cur);
            return;
        }
        if (!support[i]) {
            self(self, i + 1);
            return;
        }
        const auto& inv = cd.factors[i].invariant_factors;
        auto block_rec = [&](auto&& bself, std::size_t k) -> void {
            if (k == inv.size()) {
                self(self, i + 1);
                return;
            }
            for (long long r = 0; r < inv[k]; ++r) {
                cur.values[i][k] = r;
                bself(bself, k + 1);
            }
            cur.values[i][k] = 0;
        };
        block_rec(block_rec, 0);
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CentralCharacter> char_closure(const CenterData& cd,
                                           const std::vector<CentralCharacter>& gens) {
    std::set<CentralCharacter> elems;
    elems.insert(trivial_character(cd));
    std::vector<CentralCharacter> queue{trivial_character(cd)};
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (const auto& g : gens) {
            CentralCharacter n = char_mul(cd, queue[q], g);
            if (elems.insert(n).second)
                queue.push_back(n);
        }
    return {elems.begin(), elems.end()};
}

std::vector<std::vector<CentralCharacter>>
enumerate_char_subgroups(const CenterData& cd, const std::vector<CentralCharacter>& all) {
    std::set<std::vector<CentralCharacter>> seen;
    std::vector<std::vector<CentralCharacter>> queue{{trivial_character(cd)}};
    seen.insert(queue[0]);
    for (std::size_t q = 0; q < queue.size(); ++q) {
        auto cur = queue[q];
        for (const auto& cand : all) {
            if (std::binary_search(cur.begin(), cur.end(), cand))
                continue;
            auto gens = cur;
            gens.push_back(cand);
            auto next = char_closure(cd, gens);
            if (seen.insert(next).second)
                queue.push_back(next);
        }
    }
    return {seen.begin(), seen.end()};
}

// fiber of the realized set over one character
std::vector<IrrepLabel> fiber_labels(const CenterData& cd, const SubgroupDatum& d,
                                     const CentralCharacter& chi, long long h,
                                     const std::vector<bool>& support) {
    if (!d.unitary)
        return irr_chi_supported(cd, chi, h, support);
    int n = cd.group.factor(0).n;
    long long sum = chi.values[0][0];
    if (d.j.empty()) {
        // determinant powers only
        std::vector<IrrepLabel> out;
        if (sum % n == 0 && std::llabs(sum) <= h) {
            IrrepLabel l;
            l.parts.push_back(std::vector<long long>(n, sum / n));
            out.push_back(std::move(l));
        }
        return out;
    }
    return irr_chi(cd, chi, h);
}

SubgroupDatum canonicalize(SubgroupDatum d) {
    std::sort(d.j.begin(), d.j.end());
    for (auto& [chi, rep] : d.twist)
        rep = coset_min(d.s, rep);
    std::sort(d.f_elements.begin(), d.f_elements.end());
    if (d.unitary)
        d.unitary_twist = d.unitary_m == 0 ? torus_zero(d.group.torus_rank())
                                           : coset_min(d.s, d.unitary_twist);
    return d;
}

std::string describe_pair(const SetPair& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.first.coords.size(); ++i) {
        if (i)
            s += ",";
        s += format_rational(p.first.coords[i]);
    }
    s += " ; " + format_label(p.second) + ")";
    return s;
}

} // namespace

CharGenerators character_generators(const CenterData& cd,
                                    const std::vector<CentralCharacter>& elements) {
    TorusSubgroup s;
    for (const auto& chi : elements)
        s.elements.push_back(char_to_point(cd, chi));
    std::sort(s.elements.begin(), s.elements.end());
    auto gens = canonical_generators(s, char_space_rank(cd));
    CharGenerators out;
    for (std::size_t i = 0; i < gens.generators.size(); ++i) {
        out.generators.push_back(point_to_char(cd, gens.generators[i]));
        out.orders.push_back(gens.orders[i]);
    }
    return out;
}

const char* violation_kind_name(ViolationKind k) {
    switch (k) {
    case ViolationKind::MissingUnit: return "missing_unit";
    case ViolationKind::Conjugation: return "conjugation";
    case ViolationKind::ProductClosure: return "product_closure";
    case ViolationKind::InfiniteFiberSuspect: return "infinite_fiber_suspect";
    case ViolationKind::IrrationalCoordinate: return "irrational_coordinate";
    }
    return "?";
}

bool SubgroupDatum::operator==(const SubgroupDatum& o) const {
    return group.text() == o.group.text() && j == o.j && s.elements == o.s.elements &&
           unitary == o.unitary && f_elements == o.f_elements && twist == o.twist &&
           unitary_m == o.unitary_m && unitary_twist == o.unitary_twist;
}

bool SubgroupDatum::operator<(const SubgroupDatum& o) const {
    auto key = [](const SubgroupDatum& d) {
        return std::tie(d.j, d.s.elements, d.f_elements, d.twist, d.unitary_m, d.unitary_twist);
    };
    if (group.text() != o.group.text())
        return group.text() < o.group.text();
    return key(*this) < key(o);
}

Verdict check_closure(const ExplicitSet& set) {
    Verdict v;
    const GroupSpec& g = set.group;
    int rank = g.torus_rank();
    auto push = [&](Violation viol) {
        if (v.violations.size() < kMaxViolations)
            v.violations.push_back(std::move(viol));
    };

    long long margin = 0;
    for (const auto& p : set.pairs)
        margin = std::max(margin, label_height(g, p.second));
    long long hmax = set.height_bound - margin;

    SetPair unit{torus_zero(rank), unit_label(g)};
    if (!set.pairs.count(unit))
        push({ViolationKind::MissingUnit, {}, unit});

    for (const auto& p : set.pairs) {
        SetPair conj{torus_neg(p.first), conjugate(g, p.second)};
        if (!set.pairs.count(conj))
            push({ViolationKind::Conjugation, {p}, conj});
    }

    for (auto it1 = set.pairs.begin(); it1 != set.pairs.end(); ++it1)
        for (auto it2 = it1; it2 != set.pairs.end(); ++it2) {
            if (v.violations.size() >= kMaxViolations)
                break;
            TorusElement t = torus_add(it1->first, it2->first);
            for (const auto& [sigma, mult] : tensor_decompose(g, it1->second, it2->second).terms) {
                if (label_height(g, sigma) > hmax)
                    continue;
                SetPair want{t, sigma};
                if (!set.pairs.count(want))
                    push({ViolationKind::ProductClosure, {*it1, *it2}, want});
            }
        }

    v.accepted = v.violations.empty();
    return v;
}

SubgroupDatum make_datum(const GroupSpec& group, const std::vector<int>& j,
                         const std::vector<TorusElement>& s_generators,
                         const std::vector<CentralCharacter>& f_generators,
                         const std::vector<TorusElement>& f_generator_reps) {
    if (!group.semisimple())
        throw domain_error("make_datum expects a semisimple group; use make_unitary_datum "
                           "for U(n)");
    if (f_generators.size() != f_generator_reps.size())
        throw domain_error("one coset representative per F generator is required");
    CenterData cd = center_group(group);
    auto support = index_support(group, j);
    SubgroupDatum d;
    d.group = group;
    d.j = j;
    d.s = subgroup_closure(group.torus_rank(), s_generators);

    for (const auto& chi : f_generators) {
        if (chi.values.size() != group.size())
            throw domain_error("character has the wrong number of factor blocks");
        for (std::size_t i = 0; i < group.size(); ++i) {
            const auto& inv = cd.factors[i].invariant_factors;
            if (chi.values[i].size() != inv.size())
                throw domain_error("character block " + std::to_string(i) +
                                   " has the wrong width");
            for (std::size_t k = 0; k < inv.size(); ++k) {
                long long r = chi.values[i][k];
                if (r < 0 || r >= inv[k])
                    throw domain_error("character residue out of range");
                if (r != 0 && !support[i])
                    throw domain_error("F character is nontrivial on factor " +
                                       std::to_string(i) + " outside J");
            }
        }
    }

    // expand F from the generators, carrying coset representatives and
    // checking that f stays single-valued modulo S
    d.twist[trivial_character(cd)] = torus_zero(group.torus_rank());
    std::vector<CentralCharacter> queue{trivial_character(cd)};
    for (std::size_t q = 0; q < queue.size(); ++q) {
        CentralCharacter cur = queue[q];
        TorusElement cur_rep = d.twist.at(cur);
        for (std::size_t gi = 0; gi < f_generators.size(); ++gi) {
            CentralCharacter nxt = char_mul(cd, cur, f_generators[gi]);
            TorusElement rep = torus_add(cur_rep, torus_reduce(f_generator_reps[gi]));
            auto it = d.twist.find(nxt);
            if (it == d.twist.end()) {
                d.twist.emplace(nxt, rep);
                queue.push_back(nxt);
            } else if (!d.s.contains(torus_add(rep, torus_neg(it->second)))) {
                throw domain_error(
                    "f is not well defined: the relation reaching the character via "
                    "generator " + std::to_string(gi) +
                    " lands in a different S-coset");
            }
        }
    }
    for (const auto& [chi, rep] : d.twist)
        d.f_elements.push_back(chi);
    return canonicalize(std::move(d));
}

SubgroupDatum make_unitary_datum(const GroupSpec& group, bool full_fibers,
                                 const std::vector<TorusElement>& s_generators, long long m,
                                 const TorusElement& twist_rep) {
    if (!single_unitary(group))
        throw domain_error("make_unitary_datum expects a single U(n) factor");
    int n = group.factor(0).n;
    SubgroupDatum d;
    d.group = group;
    d.unitary = true;
    if (full_fibers)
        d.j = {0};
    d.s = subgroup_closure(group.torus_rank(), s_generators);
    TorusElement rep = torus_reduce(twist_rep);
    if (m < 0) {
        m = -m;
        rep = torus_neg(rep);
    }
    if (!full_fibers && m % n != 0)
        throw domain_error("a J = {} datum for U(" + std::to_string(n) +
                           ") carries determinant powers only, so m must be a multiple of " +
                           std::to_string(n));
    d.unitary_m = m;
    d.unitary_twist = m == 0 ? torus_zero(group.torus_rank()) : rep;
    return canonicalize(std::move(d));
}

ExplicitSet realize(const SubgroupDatum& d, long long h) {
    require_classifiable(d.group);
    if (h < 0)
        throw domain_error("height bound must be >= 0");
    CenterData cd = center_group(d.group);
    auto support = index_support(d.group, d.j);
    ExplicitSet out;
    out.group = d.group;
    out.height_bound = h;

    if (!d.unitary) {
        for (const auto& chi : d.f_elements) {
            auto fiber = fiber_labels(cd, d, chi, h, support);
            auto cs = coset(d.s, d.twist.at(chi));
            for (const auto& t : cs)
                for (const auto& l : fiber)
                    out.pairs.insert({t, l});
        }
        return out;
    }

    long long m = d.unitary_m;
    for (long long k = 0;; ++k) {
        long long chi_val = k * m;
        if (k > 0 && (m == 0 || chi_val > h))
            break;
        for (int sign : {1, -1}) {
            if (sign < 0 && chi_val == 0)
                continue;
            CentralCharacter chi;
            chi.values.push_back({sign * chi_val});
            auto fiber = fiber_labels(cd, d, chi, h, support);
            if (fiber.empty())
                continue;
            auto cs = coset(d.s, torus_scale(d.unitary_twist, sign * k));
            for (const auto& t : cs)
                for (const auto& l : fiber)
                    out.pairs.insert({t, l});
        }
        if (m == 0)
            break;
    }
    return out;
}

namespace {

SubgroupDatum classify_semisimple(const ExplicitSet& set, const CenterData& cd,
                                  const std::vector<int>& j) {
    const GroupSpec& g = set.group;
    auto support = index_support(g, j);

    std::vector<TorusElement> s_raw;
    for (const auto& p : set.pairs)
        if (is_unit(p.second))
            s_raw.push_back(p.first);
    TorusSubgroup s;
    s.elements = s_raw;
    std::sort(s.elements.begin(), s.elements.end());
    if (!(subgroup_closure(g.torus_rank(), s_raw) == s))
        throw domain_error("internal contradiction: the unit-label fiber is not a subgroup "
                           "of the torus");

    std::map<CentralCharacter, std::set<TorusElement>> s_chi;
    std::map<std::pair<CentralCharacter, TorusElement>, std::set<IrrepLabel>> fibers;
    for (const auto& p : set.pairs) {
        CentralCharacter chi = central_character(cd, p.second);
        s_chi[chi].insert(p.first);
        fibers[{chi, p.first}].insert(p.second);
    }

    SubgroupDatum d;
    d.group = g;
    d.j = j;
    d.s = s;

    std::map<CentralCharacter, std::vector<IrrepLabel>> expected;
    for (const auto& [chi, torus_fiber] : s_chi) {
        expected[chi] = irr_chi_supported(cd, chi, set.height_bound, support);
        TorusElement rep = *torus_fiber.begin();
        auto cs = coset(s, rep);
        if (std::vector<TorusElement>(torus_fiber.begin(), torus_fiber.end()) != cs)
            throw domain_error("internal contradiction: the torus fiber over a character is "
                               "not a single S-coset (the set was not actually closed)");
        d.f_elements.push_back(chi);
        d.twist[chi] = coset_min(s, rep);
    }
    for (const auto& [key, got] : fibers) {
        const auto& want = expected.at(key.first);
        if (std::vector<IrrepLabel>(got.begin(), got.end()) != want)
            throw domain_error("internal contradiction: a (character, torus) fiber differs "
                               "from the full Irr_chi slice at this truncation");
    }

    // F closed under multiplication with coherent twists
    for (const auto& a : d.f_elements)
        for (const auto& b : d.f_elements) {
            CentralCharacter ab = char_mul(cd, a, b);
            auto it = d.twist.find(ab);
            if (it == d.twist.end())
                throw domain_error("internal contradiction: observed characters do not form "
                                   "a group");
            TorusElement sum = torus_add(d.twist.at(a), d.twist.at(b));
            if (!s.contains(torus_add(sum, torus_neg(it->second))))
                throw domain_error("internal contradiction: coset relations "
                                   "S_a + S_b = S_ab fail");
        }
    return canonicalize(std::move(d));
}

SubgroupDatum classify_unitary_impl(const ExplicitSet& set, const CenterData& cd,
                                    bool full) {
    const GroupSpec& g = set.group;
    std::vector<TorusElement> s_raw;
    for (const auto& p : set.pairs)
        if (is_unit(p.second))
            s_raw.push_back(p.first);
    TorusSubgroup s;
    s.elements = s_raw;
    std::sort(s.elements.begin(), s.elements.end());
    if (!(subgroup_closure(g.torus_rank(), s_raw) == s))
        throw domain_error("internal contradiction: the unit-label fiber is not a subgroup "
                           "of the torus");

    std::map<long long, std::set<TorusElement>> s_chi;
    std::map<std::pair<long long, TorusElement>, std::set<IrrepLabel>> fibers;
    for (const auto& p : set.pairs) {
        long long sum = 0;
        for (auto c : p.second.parts[0])
            sum += c;
        s_chi[sum].insert(p.first);
        fibers[{sum, p.first}].insert(p.second);
    }

    long long m = 0;
    for (const auto& [sum, tf] : s_chi)
        m = std::gcd(m, sum);

    SubgroupDatum d;
    d.group = g;
    d.unitary = true;
    if (full)
        d.j = {0};
    d.s = s;
    d.unitary_m = m;
    d.unitary_twist = torus_zero(g.torus_rank());

    auto support = index_support(g, d.j);
    // observed characters must be exactly the multiples of m whose fibers
    // are nonempty at this truncation
    for (long long k = -set.height_bound; k <= set.height_bound; ++k) {
        if (m == 0 && k != 0)
            continue;
        long long chi_val = k * (m == 0 ? 1 : m);
        CentralCharacter chi;
        chi.values.push_back({chi_val});
        bool fiber_nonempty = !fiber_labels(cd, d, chi, set.height_bound, support).empty();
        bool observed = s_chi.count(chi_val) > 0;
        if (fiber_nonempty != observed)
            throw domain_error("internal contradiction: the observed charge grading is not "
                               "the expected arithmetic progression");
        if (m == 0)
            break;
    }
    for (const auto& [sum, tf] : s_chi)
        if (m == 0 ? sum != 0 : sum % m != 0)
            throw domain_error("internal contradiction: observed charges do not form a "
                               "subgroup of Z");

    if (m != 0) {
        TorusElement rep = *s_chi.at(m).begin();
        d.unitary_twist = coset_min(s, rep);
    }
    // coset structure and fiber dichotomy
    for (const auto& [sum, tf] : s_chi) {
        TorusElement want_rep =
            m == 0 ? torus_zero(g.torus_rank()) : torus_scale(d.unitary_twist, sum / m);
        auto cs = coset(s, want_rep);
        if (std::vector<TorusElement>(tf.begin(), tf.end()) != cs)
            throw domain_error("internal contradiction: a torus fiber is not the expected "
                               "S-coset");
        CentralCharacter chi;
        chi.values.push_back({sum});
        auto want = fiber_labels(cd, d, chi, set.height_bound, support);
        for (const auto& t : tf) {
            const auto& got = fibers.at({sum, t});
            if (std::vector<IrrepLabel>(got.begin(), got.end()) != want)
                throw domain_error("internal contradiction: a (charge, torus) fiber differs "
                                   "from the full slice at this truncation");
        }
    }
    return canonicalize(std::move(d));
}

} // namespace

SubgroupDatum classify(const ExplicitSet& set) {
    require_classifiable(set.group);
    Verdict v = check_closure(set);
    if (!v.accepted) {
        std::string msg = "set rejected by check_closure:";
        for (const auto& viol : v.violations) {
            msg += " [";
            msg += violation_kind_name(viol.kind);
            if (viol.missing)
                msg += " " + describe_pair(*viol.missing);
            msg += "]";
        }
        throw rejected_set_error(msg, std::move(v));
    }
    CenterData cd = center_group(set.group);
    std::vector<int> j;
    for (std::size_t k = 0; k < set.group.size(); ++k)
        for (const auto& p : set.pairs)
            if (non_abelian_on(set.group, p.second, k)) {
                j.push_back(static_cast<int>(k));
                break;
            }
    if (single_unitary(set.group))
        return classify_unitary_impl(set, cd, !j.empty());
    return classify_semisimple(set, cd, j);
}

SubgroupDatum classify_unitary(const ExplicitSet& set) {
    if (!single_unitary(set.group))
        throw domain_error("classify_unitary requires a single U(n) factor, got " +
                           set.group.text());
    return classify(set);
}

long long recommended_height(const SubgroupDatum& d) {
    CenterData cd = center_group(d.group);
    auto support = index_support(d.group, d.j);
    long long h = 0;
    if (d.unitary) {
        h = std::max(h, std::llabs(d.unitary_m));
        if (!d.j.empty())
            h = std::max(h, 2LL); // expose a non-determinant label
        return h;
    }
    for (const auto& chi : d.f_elements) {
        long long hh = 0;
        while (hh <= kHeightScanBound && irr_chi_supported(cd, chi, hh, support).empty())
            ++hh;
        h = std::max(h, hh);
    }
    for (int k : d.j)
        h = std::max(h, weight_height(d.group.root_system(k).highest_root()));
    return h;
}

std::vector<SubgroupDatum> enumerate_data(const GroupSpec& group, long long torus_bound,
                                          long long h) {
    require_classifiable(group);
    if (torus_bound < 1 || h < 1)
        throw domain_error("enumerate requires torus_bound >= 1 and height >= 1");
    int rank = group.torus_rank();
    auto subgroups = enumerate_subgroups(rank, torus_bound);
    auto candidates = enumerate_elements(rank, torus_bound);
    std::set<SubgroupDatum> out;

    auto generated_order = [&](const TorusSubgroup& s, const std::vector<TorusElement>& reps) {
        std::vector<TorusElement> gens = s.elements;
        gens.insert(gens.end(), reps.begin(), reps.end());
        return subgroup_closure(rank, gens).order();
    };

    if (single_unitary(group)) {
        int n = group.factor(0).n;
        for (bool full : {false, true}) {
            long long step = full ? 1 : n;
            for (long long m = 0; m <= h; m += step) {
                for (const auto& s : subgroups) {
                    if (m == 0) {
                        out.insert(make_unitary_datum(group, full, s.elements, 0,
                                                      torus_zero(rank)));
                        continue;
                    }
                    std::set<TorusElement> rep_cosets;
                    for (const auto& t : candidates)
                        rep_cosets.insert(coset_min(s, t));
                    for (const auto& rep : rep_cosets) {
                        if (generated_order(s, {rep}) > torus_bound)
                            continue;
                        out.insert(make_unitary_datum(group, full, s.elements, m, rep));
                    }
                }
            }
        }
    } else {
        CenterData cd = center_group(group);
        std::size_t nf = group.size();
        for (std::size_t mask = 0; mask < (std::size_t(1) << nf); ++mask) {
            std::vector<int> j;
            std::vector<bool> support(nf, false);
            for (std::size_t k = 0; k < nf; ++k)
                if (mask & (std::size_t(1) << k)) {
                    j.push_back(static_cast<int>(k));
                    support[k] = true;
                }
            auto all_chars = characters_supported(cd, support);
            auto f_subgroups = enumerate_char_subgroups(cd, all_chars);
            for (const auto& f_set : f_subgroups) {
                CharGenerators fg = character_generators(cd, f_set);
                for (const auto& s : subgroups) {
                    // coset choices per generator: d * rep must land in S
                    std::vector<std::vector<TorusElement>> choices(fg.generators.size());
                    for (std::size_t gi = 0; gi < fg.generators.size(); ++gi) {
                        std::set<TorusElement> cosets;
                        for (const auto& t : candidates)
                            if (s.contains(torus_scale(t, fg.orders[gi])))
                                cosets.insert(coset_min(s, t));
                        choices[gi].assign(cosets.begin(), cosets.end());
                    }
                    std::vector<TorusElement> picked(fg.generators.size(), torus_zero(rank));
                    auto rec = [&](auto&& self, std::size_t gi) -> void {
                        if (gi == fg.generators.size()) {
                            if (generated_order(s, picked) > torus_bound)
                                return;
                            out.insert(make_datum(group, j, s.elements, fg.generators,
                                                  picked));
                            return;
                        }
                        for (const auto& rep : choices[gi]) {
                            picked[gi] = rep;
                            self(self, gi + 1);
                        }
                    };
                    rec(rec, 0);
                }
            }
        }
    }

    std::vector<SubgroupDatum> result(out.begin(), out.end());
    for (const auto& d : result) {
        Verdict v = check_closure(realize(d, h));
        if (!v.accepted)
            throw domain_error("internal contradiction: an enumerated datum fails "
                               "check_closure");
    }
    return result;
}

void require_central(const GroupSpec& g, const std::vector<TorusElement>& z_generators) {
    for (const auto& z : z_generators) {
        if (static_cast<int>(z.coords.size()) != g.torus_rank())
            throw domain_error("central element has wrong torus rank");
        std::size_t offset = 0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            const Factor& f = g.factor(i);
            if (f.kind == FactorKind::Simple) {
                const auto& rs = g.root_system(i);
                for (int r = 0; r < rs.rank(); ++r) {
                    Rat v(0);
                    for (int c = 0; c < rs.rank(); ++c)
                        v += to_rat(rs.cartan[r][c]) * z.coords[offset + c];
                    if (mod1(v) != 0)
                        throw domain_error("element is not central: a root takes a "
                                           "non-integral value on it");
                }
            } else if (f.kind == FactorKind::Unitary) {
                for (int c = 1; c < f.n; ++c)
                    if (mod1(z.coords[offset + c] - z.coords[offset]) != 0)
                        throw domain_error("element is not central in U(n): coordinates "
                                           "are not all equal");
            }
            offset += f.torus_rank();
        }
    }
}

namespace {

// chi evaluated at a central element, as a value in Q/Z
Rat char_eval_central(const CenterData& cd, const CentralCharacter& chi,
                      const TorusElement& z) {
    Rat value(0);
    std::size_t offset = 0;
    for (std::size_t i = 0; i < cd.group.size(); ++i) {
        const Factor& f = cd.group.factor(i);
        if (f.kind == FactorKind::Simple) {
            const CenterFactor& cf = cd.factors[i];
            // expand the block of z over the center generators of this factor
            TorusElement block;
            for (int c = 0; c < f.torus_rank(); ++c)
                block.coords.push_back(mod1(z.coords[offset + c]));
            std::vector<long long> expansion(cf.generators.size(), 0);
            bool found = false;
            auto rec = [&](auto&& self, std::size_t k) -> void {
                if (found)
                    return;
                if (k == cf.generators.size()) {
                    TorusElement acc = torus_zero(f.torus_rank());
                    for (std::size_t gi = 0; gi < cf.generators.size(); ++gi)
                        acc = torus_add(acc, torus_scale(cf.generators[gi], expansion[gi]));
                    found = acc == block;
                    return;
                }
                for (long long c = 0; c < cf.invariant_factors[k]; ++c) {
                    expansion[k] = c;
                    self(self, k + 1);
                    if (found)
                        return;
                }
            };
            rec(rec, 0);
            if (!found)
                throw domain_error("element is not in the center of factor " +
                                   std::to_string(i));
            for (std::size_t k = 0; k < cf.generators.size(); ++k)
                value += to_rat(expansion[k] * chi.values[i][k], cf.invariant_factors[k]);
        } else {
            value += z.coords[offset] * to_rat(chi.values[i][0]);
        }
        offset += f.torus_rank();
    }
    return mod1(value);
}

} // namespace

std::vector<SubgroupDatum> quotient_transfer(const GroupSpec& group,
                                             const std::vector<SubgroupDatum>& data,
                                             const std::vector<TorusElement>& z_generators,
                                             QuotientMode mode) {
    require_classifiable(group);
    require_central(group, z_generators);
    CenterData cd = center_group(group);
    TorusSubgroup z = subgroup_closure(group.torus_rank(), z_generators);
    std::vector<SubgroupDatum> kept;
    for (const auto& d : data) {
        bool z_in_s = true;
        for (const auto& e : z.elements)
            if (!d.s.contains(e))
                z_in_s = false;
        if (!z_in_s)
            continue;
        if (mode == QuotientMode::GroupQuotient) {
            bool trivial_on_z = true;
            if (d.unitary) {
                CentralCharacter gen;
                gen.values.push_back({d.unitary_m});
                for (const auto& e : z.elements)
                    if (char_eval_central(cd, gen, e) != 0)
                        trivial_on_z = false;
            } else {
                for (const auto& chi : d.f_elements)
                    for (const auto& e : z.elements)
                        if (char_eval_central(cd, chi, e) != 0)
                            trivial_on_z = false;
            }
            if (!trivial_on_z)
                continue;
        }
        kept.push_back(d);
    }
    return kept;
}

QuotientCoordinates rewrite_in_quotient(const SubgroupDatum& d,
                                        const std::vector<TorusElement>& z_generators) {
    require_central(d.group, z_generators);
    int rank = d.group.torus_rank();
    long long denom = 1;
    for (const auto& z : z_generators)
        denom = std::lcm(denom, torus_order(z));
    // basis of the enlarged coroot lattice: rows of (integer HNF) / denom
    IMat rows;
    for (const auto& z : z_generators) {
        std::vector<long long> r(rank);
        for (int i = 0; i < rank; ++i) {
            Rat x = z.coords[i] * to_rat(denom);
            assert(x.get_den() == 1);
            r[i] = x.get_num().get_si();
        }
        rows.push_back(std::move(r));
    }
    for (int i = 0; i < rank; ++i) {
        std::vector<long long> r(rank, 0);
        r[i] = denom;
        rows.push_back(std::move(r));
    }
    IMat basis = hnf_rows(std::move(rows));
    assert(static_cast<int>(basis.size()) == rank);

    auto rewrite = [&](const TorusElement& t) {
        // solve x * (basis/denom) = t by forward substitution
        std::vector<Rat> x(rank, Rat(0));
        for (int col = 0; col < rank; ++col) {
            Rat rhs = t.coords[col];
            for (int k = 0; k < col; ++k)
                rhs -= x[k] * to_rat(basis[k][col], denom);
            x[col] = rhs / to_rat(basis[col][col], denom);
        }
        TorusElement out;
        for (auto& c : x)
            out.coords.push_back(mod1(c));
        return out;
    };

    QuotientCoordinates qc;
    for (const auto& e : d.s.elements)
        qc.s_elements.push_back(rewrite(e));
    std::sort(qc.s_elements.begin(), qc.s_elements.end());
    qc.s_elements.erase(std::unique(qc.s_elements.begin(), qc.s_elements.end()),
                        qc.s_elements.end());
    for (const auto& [chi, rep] : d.twist)
        qc.twist.emplace_back(chi, rewrite(rep));
    if (d.unitary && d.unitary_m != 0) {
        CentralCharacter gen;
        gen.values.push_back({d.unitary_m});
        qc.twist.emplace_back(gen, rewrite(d.unitary_twist));
    }
    return qc;
}

SubgroupDatum commensurability_witness(const SubgroupDatum& d) {
    require_classifiable(d.group);
    std::vector<int> full;
    for (std::size_t k = 0; k < d.group.size(); ++k)
        full.push_back(static_cast<int>(k));
    if (d.j != full)
        throw domain_error("commensurability witness requires J to contain every factor");
    int rank = d.group.torus_rank();
    SubgroupDatum w;
    w.group = d.group;
    w.j = d.j;
    w.s = trivial_subgroup(rank);
    w.unitary = d.unitary;
    if (d.unitary) {
        if (d.unitary_m == 0) {
            w.unitary_m = 0;
        } else {
            long long k = 1;
            while (!d.s.contains(torus_scale(d.unitary_twist, k)))
                ++k;
            w.unitary_m = d.unitary_m * k;
        }
        w.unitary_twist = torus_zero(rank);
        return canonicalize(std::move(w));
    }
    TorusElement zero = torus_zero(rank);
    for (const auto& [chi, rep] : d.twist)
        if (rep == zero) {
            w.f_elements.push_back(chi);
            w.twist[chi] = zero;
        }
    return canonicalize(std::move(w));
}

} // namespace dqs
