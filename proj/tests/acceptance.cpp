// Acceptance suite: each criterion prints one PASS/FAIL line; the process
// exits nonzero when any criterion fails.

#include "dqs/classifier.hpp"
#include "dqs/oracle.hpp"
#include "dqs/serialize.hpp"

#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>

using namespace dqs;

namespace {

struct Reporter {
    int failures = 0;

    void run(int id, const std::string& name, const std::function<bool(std::string&)>& body) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        std::printf("%s  %d  %s (%s%.2fs)\n", ok ? "PASS" : "FAIL", id, name.c_str(),
                    detail.empty() ? "" : (detail + ", ").c_str(), secs);
        std::fflush(stdout);
        if (!ok)
            ++failures;
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- independent brute-force search over closed subsets -------------------
//
// The closure operator adds the unit pair, conjugates, and every product
// summand within the height bound. Its fixed points with torus group of
// order <= N are exactly the candidate sets; the family below reaches every
// one of them by adding generators one at a time.

struct ClosureSearch {
    GroupSpec g;
    long long h;
    long long torus_bound;
    mutable std::map<std::pair<IrrepLabel, IrrepLabel>, std::vector<IrrepLabel>> products;

    TorusSubgroup torus_group(const std::set<SetPair>& pairs) const {
        std::vector<TorusElement> values;
        for (const auto& [t, l] : pairs)
            values.push_back(t);
        return subgroup_closure(g.torus_rank(), values);
    }

    const std::vector<IrrepLabel>& summands(const IrrepLabel& a, const IrrepLabel& b) const {
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        auto it = products.find(key);
        if (it == products.end()) {
            std::vector<IrrepLabel> out;
            for (const auto& [sigma, mult] : tensor_decompose(g, key.first, key.second).terms)
                if (label_height(g, sigma) <= h)
                    out.push_back(sigma);
            it = products.emplace(std::move(key), std::move(out)).first;
        }
        return it->second;
    }

    std::set<SetPair> close(std::set<SetPair> pairs) const {
        pairs.insert({torus_zero(g.torus_rank()), unit_label(g)});
        std::vector<SetPair> frontier(pairs.begin(), pairs.end());
        while (!frontier.empty()) {
            std::vector<SetPair> next;
            auto add = [&](SetPair p) {
                if (pairs.insert(p).second)
                    next.push_back(std::move(p));
            };
            for (const auto& p : frontier) {
                add({torus_neg(p.first), conjugate(g, p.second)});
                for (const auto& q : pairs) {
                    TorusElement t = torus_add(p.first, q.first);
                    for (const auto& sigma : summands(p.second, q.second))
                        add({t, sigma});
                }
            }
            frontier = std::move(next);
        }
        return pairs;
    }

    // all closure fixed points whose torus values generate a group of order
    // <= torus_bound; max_generators < 0 means run to the full fixed point
    std::set<std::set<SetPair>> family(int max_generators) const {
        std::vector<TorusElement> torus_values = enumerate_elements(g.torus_rank(), torus_bound);
        std::vector<IrrepLabel> labels = labels_up_to_height(g, h);
        std::vector<SetPair> box;
        for (const auto& t : torus_values)
            for (const auto& l : labels)
                box.push_back({t, l});

        std::set<std::set<SetPair>> seen;
        std::vector<std::set<SetPair>> queue{close({})};
        seen.insert(queue[0]);
        std::vector<int> depth{0};
        for (std::size_t i = 0; i < queue.size(); ++i) {
            if (max_generators >= 0 && depth[i] >= max_generators)
                continue;
            std::set<SetPair> current = queue[i];
            TorusSubgroup tg = torus_group(current);
            for (const auto& p : box) {
                if (current.count(p))
                    continue;
                std::vector<TorusElement> gens = tg.elements;
                gens.push_back(p.first);
                if (subgroup_closure(g.torus_rank(), gens).order() > torus_bound)
                    continue;
                std::set<SetPair> base = current;
                base.insert(p);
                std::set<SetPair> closed = close(std::move(base));
                if (torus_group(closed).order() > torus_bound)
                    continue;
                if (seen.insert(closed).second) {
                    queue.push_back(std::move(closed));
                    depth.push_back(depth[i] + 1);
                }
            }
        }
        return seen;
    }
};

// ---- Cor 5.2 shape tests ---------------------------------------------------

enum class Su2Shape { Invalid, Trivial, So3Type, Su2Type, Twisted };

Su2Shape su2_shape(const GroupSpec& g, const std::set<SetPair>& pairs, long long h) {
    std::set<TorusElement> even_values, odd_values;
    std::map<TorusElement, std::set<long long>> content;
    for (const auto& [t, l] : pairs) {
        long long m = l.parts[0][0];
        content[t].insert(m);
        (m % 2 == 0 ? even_values : odd_values).insert(t);
    }
    std::set<long long> evens, odds, all;
    for (long long m = 0; m <= h; ++m) {
        all.insert(m);
        (m % 2 == 0 ? evens : odds).insert(m);
    }
    // the even-label values must form a subgroup
    std::vector<TorusElement> ev(even_values.begin(), even_values.end());
    TorusSubgroup s = subgroup_closure(1, ev);
    if (std::set<TorusElement>(s.elements.begin(), s.elements.end()) != even_values)
        return Su2Shape::Invalid;

    if (odd_values.empty() || odd_values == even_values) {
        // untwisted: the same fiber over every element of the subgroup
        std::set<long long> want = content.begin()->second;
        if (want != std::set<long long>{0} && want != evens && want != all)
            return Su2Shape::Invalid;
        for (const auto& [t, c] : content)
            if (c != want)
                return Su2Shape::Invalid;
        if (want == evens)
            return Su2Shape::So3Type;
        return want == all ? Su2Shape::Su2Type : Su2Shape::Trivial;
    }

    // twisted: evens over the subgroup, odds over a disjoint coset of it
    for (const auto& t : even_values)
        if (content.at(t) != evens)
            return Su2Shape::Invalid;
    for (const auto& t : odd_values) {
        if (even_values.count(t))
            return Su2Shape::Invalid;
        if (content.at(t) != odds)
            return Su2Shape::Invalid;
    }
    TorusElement rep = *odd_values.begin();
    auto odd_coset = coset(s, rep);
    if (std::set<TorusElement>(odd_coset.begin(), odd_coset.end()) != odd_values)
        return Su2Shape::Invalid;
    if (!s.contains(torus_add(rep, rep)))
        return Su2Shape::Invalid;
    return Su2Shape::Twisted;
}

} // namespace

int main() {
    Reporter report;
    GroupSpec su2 = parse_group_spec("SU(2)");
    GroupSpec su3 = parse_group_spec("SU(3)");

    report.run(1, "Cor 5.2: SU(2) enumeration matches the brute-force closure search",
               [&](std::string& detail) {
                   auto start = std::chrono::steady_clock::now();
                   const long long N = 4, h = 12;
                   auto data = enumerate_data(su2, N, h);
                   std::set<std::set<SetPair>> realized;
                   bool shapes_ok = true;
                   for (const auto& d : data) {
                       auto set = realize(d, h);
                       if (su2_shape(su2, set.pairs, h) == Su2Shape::Invalid)
                           shapes_ok = false;
                       realized.insert(set.pairs);
                   }
                   ClosureSearch oracle{su2, h, N};
                   auto family = oracle.family(-1);
                   for (const auto& member : family)
                       if (!check_closure({su2, h, member}).accepted)
                           shapes_ok = false;
                   double secs = seconds_since(start);
                   detail = std::to_string(data.size()) + " data vs " +
                            std::to_string(family.size()) + " closed sets";
                   return shapes_ok && realized.size() == data.size() &&
                          realized == family && secs < 30.0;
               });

    report.run(2, "Cor 5.3: SU(2)/Z2 group quotient keeps even torus parts, H in {1, SO3}",
               [&](std::string& detail) {
                   auto start = std::chrono::steady_clock::now();
                   const long long N = 8, h = 8;
                   auto data = enumerate_data(su2, N, h);
                   std::vector<TorusElement> z{TorusElement{{Rat(1, 2)}}};
                   auto kept = quotient_transfer(su2, data, z, QuotientMode::GroupQuotient);
                   bool ok = !kept.empty();
                   for (const auto& d : kept) {
                       if (d.s.order() % 2 != 0)
                           ok = false;
                       Su2Shape shape = su2_shape(su2, realize(d, h).pairs, h);
                       if (shape != Su2Shape::Trivial && shape != Su2Shape::So3Type)
                           ok = false;
                   }
                   // every even-order cyclic subgroup appears with both fibers
                   long long even_subgroups = 0;
                   for (const auto& s : enumerate_subgroups(1, N))
                       if (s.order() % 2 == 0)
                           ++even_subgroups;
                   detail = std::to_string(kept.size()) + " of " +
                            std::to_string(data.size()) + " kept";
                   double secs = seconds_since(start);
                   return ok && static_cast<long long>(kept.size()) == 2 * even_subgroups &&
                          secs < 10.0;
               });

    report.run(3, "fusion agrees with the character oracle on all pairs of height <= 3",
               [&](std::string& detail) {
                   auto start = std::chrono::steady_clock::now();
                   long long pairs = 0;
                   for (const char* spec : {"SU(2)", "SU(3)", "Spin(5)", "G2"}) {
                       GroupSpec g = parse_group_spec(spec);
                       auto labels = labels_up_to_height(g, 3);
                       for (const auto& a : labels)
                           for (const auto& b : labels) {
                               ++pairs;
                               if (!(tensor_decompose(g, a, b) ==
                                     oracle_tensor_decompose(g, a, b)))
                                   return false;
                           }
                   }
                   detail = std::to_string(pairs) + " pairs";
                   return seconds_since(start) < 60.0;
               });

    report.run(4, "dim and qdim(1/2) are exact ring homomorphisms on the same pairs",
               [&](std::string&) {
                   Rat q(1, 2);
                   for (const char* spec : {"SU(2)", "SU(3)", "Spin(5)", "G2"}) {
                       GroupSpec g = parse_group_spec(spec);
                       auto labels = labels_up_to_height(g, 3);
                       for (const auto& a : labels)
                           for (const auto& b : labels) {
                               FusionVector v = tensor_decompose(g, a, b);
                               Int dims = 0;
                               Rat qdims(0);
                               for (const auto& [l, m] : v.terms) {
                                   dims += static_cast<long>(m) * classical_dim(g, l);
                                   qdims += to_rat(m) * quantum_dim(g, l, q);
                               }
                               if (dims != classical_dim(g, a) * classical_dim(g, b))
                                   return false;
                               if (qdims != quantum_dim(g, a, q) * quantum_dim(g, b, q))
                                   return false;
                           }
                   }
                   return true;
               });

    report.run(5, "central grading has zero violations over SU(2), SU(3), SU(2)xSU(3)",
               [&](std::string& detail) {
                   long long checked = 0;
                   for (const char* spec : {"SU(2)", "SU(3)", "SU(2)xSU(3)"}) {
                       GroupSpec g = parse_group_spec(spec);
                       CenterData cd = center_group(g);
                       auto labels = labels_up_to_height(g, 3);
                       for (const auto& a : labels)
                           for (const auto& b : labels) {
                               CentralCharacter want = char_mul(cd, central_character(cd, a),
                                                               central_character(cd, b));
                               for (const auto& [c, m] : tensor_decompose(g, a, b).terms) {
                                   ++checked;
                                   if (!(central_character(cd, c) == want))
                                       return false;
                               }
                           }
                   }
                   detail = std::to_string(checked) + " summands";
                   return true;
               });

    report.run(6, "Kac dichotomy witness: qdim(., 1/2) > dim off the unit, = at the unit",
               [&](std::string&) {
                   Rat q(1, 2);
                   for (const char* spec : {"SU(2)", "SU(3)"}) {
                       GroupSpec g = parse_group_spec(spec);
                       for (const auto& l : labels_up_to_height(g, 4)) {
                           Rat qd = quantum_dim(g, l, q);
                           Rat cd(classical_dim(g, l));
                           if (is_unit(l) ? (qd != cd) : !(qd > cd))
                               return false;
                       }
                   }
                   return true;
               });

    report.run(7, "round trip classify(realize(d,h)) = d on 104 randomized data",
               [&](std::string& detail) {
                   auto start = std::chrono::steady_clock::now();
                   testing::DatumGenerator gen(5061992);
                   int count = 0;
                   for (const char* spec : {"SU(2)", "SU(3)", "SU(2)xSU(2)", "U(2)"}) {
                       GroupSpec g = parse_group_spec(spec);
                       for (int i = 0; i < 26; ++i) {
                           SubgroupDatum d = gen.random_datum(g);
                           long long h = recommended_height(d);
                           if (!(classify(realize(d, h)) == d))
                               return false;
                           ++count;
                       }
                   }
                   detail = std::to_string(count) + " data";
                   return count >= 100 && seconds_since(start) < 60.0;
               });

    report.run(8, "Thm 5.4: U(2) data split into T x Z subgroups and graded full fibers",
               [&](std::string& detail) {
                   GroupSpec u2 = parse_group_spec("U(2)");
                   const long long N = 2, h = 4;
                   auto data = enumerate_data(u2, N, h);
                   long long j_empty = 0, j_full = 0;
                   for (const auto& d : data) {
                       auto set = realize(d, h);
                       if (d.j.empty()) {
                           ++j_empty;
                           // determinant powers only: the set is a subgroup of T x Z
                           // within the truncation
                           std::set<std::pair<TorusElement, long long>> tz;
                           for (const auto& [t, l] : set.pairs) {
                               if (l.parts[0][0] != l.parts[0][1])
                                   return false;
                               tz.insert({t, l.parts[0][0]});
                           }
                           for (const auto& [t, k] : tz) {
                               if (!tz.count({torus_neg(t), -k}))
                                   return false;
                               for (const auto& [t2, k2] : tz)
                                   if (2 * std::abs(k + k2) <= h &&
                                       !tz.count({torus_add(t, t2), k + k2}))
                                       return false;
                           }
                       } else {
                           ++j_full;
                           // grading: labels over coset f(chi) have coordinate sum chi
                           for (const auto& [t, l] : set.pairs) {
                               long long sum = l.parts[0][0] + l.parts[0][1];
                               if (d.unitary_m == 0) {
                                   if (sum != 0 || !d.s.contains(t))
                                       return false;
                               } else {
                                   if (sum % d.unitary_m != 0)
                                       return false;
                                   TorusElement want;
                                   want.coords = d.unitary_twist.coords;
                                   TorusElement acc = torus_zero(2);
                                   long long steps = sum / d.unitary_m;
                                   for (long long i = 0; i < std::abs(steps); ++i)
                                       acc = torus_add(acc, want);
                                   if (steps < 0)
                                       acc = torus_neg(acc);
                                   if (!d.s.contains(torus_add(t, torus_neg(acc))))
                                       return false;
                               }
                           }
                       }
                   }
                   detail = std::to_string(j_empty) + " with J empty, " +
                            std::to_string(j_full) + " full";
                   return j_empty > 0 && j_full > 0;
               });

    report.run(9, "Gammaform fiber dichotomy in accepted SU(2) and SU(3) sets at height 8",
               [&](std::string& detail) {
                   long long sets_checked = 0;
                   for (const GroupSpec& g : {su2, su3}) {
                       CenterData cd = center_group(g);
                       const long long h = 8;
                       // independent family: closure fixed points from small generator
                       // sets, plus every realized enumerated datum
                       ClosureSearch oracle{g, h, 2};
                       std::set<std::set<SetPair>> family = oracle.family(2);
                       for (const auto& d : enumerate_data(g, 2, h))
                           family.insert(realize(d, h).pairs);
                       for (const auto& member : family) {
                           ExplicitSet set{g, h, member};
                           if (!check_closure(set).accepted)
                               return false;
                           ++sets_checked;
                           std::vector<bool> support(g.size(), false);
                           for (const auto& [t, l] : member)
                               for (std::size_t k = 0; k < g.size(); ++k)
                                   for (auto c : l.parts[k])
                                       if (c != 0)
                                           support[k] = true;
                           std::map<std::pair<CentralCharacter, TorusElement>,
                                    std::set<IrrepLabel>>
                               fibers;
                           for (const auto& [t, l] : member)
                               fibers[{central_character(cd, l), t}].insert(l);
                           for (const auto& [key, got] : fibers) {
                               auto want = irr_chi_supported(cd, key.first, h, support);
                               if (std::vector<IrrepLabel>(got.begin(), got.end()) != want)
                                   return false;
                           }
                       }
                   }
                   detail = std::to_string(sets_checked) + " accepted sets";
                   return sets_checked > 0;
               });

    if (report.failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", report.failures);
    return report.failures;
}
