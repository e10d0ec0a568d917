#include "dqs/fusion.hpp"

#include "dqs/error.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <mutex>
#include <set>

namespace dqs {

FusionConfig& fusion_config() {
    static FusionConfig cfg;
    return cfg;
}

namespace {

Weight add(const Weight& a, const Weight& b) {
    Weight out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

Weight sub(const Weight& a, const Weight& b) {
    Weight out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

// mu <= lambda in the dominance order: lambda - mu is a nonnegative integer
// combination of simple roots.
bool dominated(const RootSystemData& rs, const Weight& lambda, const Weight& mu) {
    std::vector<Rat> c;
    if (!rs.root_lattice_coords(sub(lambda, mu), c))
        return false;
    for (const auto& x : c)
        if (x < 0)
            return false;
    return true;
}

std::shared_ptr<const WeightDiagram> compute_diagram(const RootSystemData& rs,
                                                     const Weight& lambda) {
    auto out = std::make_shared<WeightDiagram>();
    int n = rs.rank();

    // All weights of the irrep: walk down from lambda by simple roots; a
    // vector stays in the diagram iff its dominant representative is
    // dominated by lambda.
    std::set<Weight> diagram;
    std::deque<Weight> queue{lambda};
    diagram.insert(lambda);
    while (!queue.empty()) {
        Weight w = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            Weight v = w;
            for (int j = 0; j < n; ++j)
                v[j] -= rs.cartan[i][j];
            if (diagram.count(v))
                continue;
            if (!dominated(rs, lambda, to_dominant(v, rs).dominant))
                continue;
            diagram.insert(v);
            queue.push_back(v);
        }
    }

    // Dominant members in increasing depth (root height of lambda - mu).
    std::vector<std::pair<long long, Weight>> dominants;
    for (const auto& w : diagram)
        if (is_dominant(w)) {
            std::vector<Rat> c;
            rs.root_lattice_coords(sub(lambda, w), c);
            Rat depth(0);
            for (const auto& x : c)
                depth += x;
            assert(depth.get_den() == 1);
            dominants.emplace_back(depth.get_num().get_si(), w);
        }
    std::sort(dominants.begin(), dominants.end());

    Weight lr = add(lambda, rs.rho);
    Rat lr2 = rs.inner(lr, lr);
    for (const auto& [depth, mu] : dominants) {
        if (depth == 0) {
            out->dominant[mu] = 1;
            continue;
        }
        Weight mr = add(mu, rs.rho);
        Rat denom = lr2 - rs.inner(mr, mr);
        Rat num(0);
        for (const auto& root : rs.positive_roots) {
            Weight w = mu;
            for (;;) {
                w = add(w, root.fw_coords);
                if (!diagram.count(w))
                    break;
                Weight dom = to_dominant(w, rs).dominant;
                auto it = out->dominant.find(dom);
                assert(it != out->dominant.end());
                num += rs.inner(w, root.fw_coords) * to_rat(2 * it->second);
            }
        }
        Rat m = num / denom;
        assert(m.get_den() == 1 && m > 0);
        out->dominant[mu] = m.get_num().get_si();
    }

    // Expand along Weyl orbits; multiplicity is constant on each orbit.
    for (const auto& [mu, m] : out->dominant) {
        std::deque<Weight> orbit{mu};
        out->all[mu] = m;
        while (!orbit.empty()) {
            Weight w = orbit.front();
            orbit.pop_front();
            for (int i = 0; i < n; ++i) {
                Weight v = rs.simple_reflect(w, i);
                if (out->all.emplace(v, m).second)
                    orbit.push_back(v);
            }
        }
    }
    out->dim = 0;
    for (const auto& [w, m] : out->all)
        out->dim += static_cast<long>(m);
    return out;
}

class DiagramCache {
public:
    std::shared_ptr<const WeightDiagram> get(const RootSystemData& rs, const Weight& lambda) {
        Key key{rs.type, lambda};
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = cache_.find(key);
            if (it != cache_.end())
                return it->second;
        }
        // compute outside the lock; duplicate concurrent computation is fine
        auto value = compute_diagram(rs, lambda);
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, inserted] = cache_.emplace(key, value);
        if (inserted) {
            order_.push_back(key);
            while (order_.size() > fusion_config().cache_limit) {
                cache_.erase(order_.front());
                order_.pop_front();
            }
        }
        return it->second;
    }

private:
    using Key = std::pair<SimpleType, Weight>;
    std::mutex mu_;
    std::map<Key, std::shared_ptr<const WeightDiagram>> cache_;
    std::deque<Key> order_;
};

DiagramCache& diagram_cache() {
    static DiagramCache c;
    return c;
}

Int weyl_dim(const RootSystemData& rs, const Weight& lambda) {
    Weight lr = add(lambda, rs.rho);
    Int num = 1, den = 1;
    for (const auto& root : rs.positive_roots) {
        num *= static_cast<long>(rs.pair_coroot(lr, root));
        den *= static_cast<long>(rs.pair_coroot(rs.rho, root));
    }
    Int out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

Rat q_integer(long long n, const Rat& q) {
    return (rat_pow(q, n) - rat_pow(q, -n)) / (q - rat_pow(q, -1));
}

Rat weyl_qdim(const RootSystemData& rs, const Weight& lambda, const Rat& q) {
    Weight lr = add(lambda, rs.rho);
    Rat out(1);
    for (const auto& root : rs.positive_roots)
        out *= q_integer(rs.pair_coroot(lr, root), q) /
               q_integer(rs.pair_coroot(rs.rho, root), q);
    return out;
}

std::map<Weight, long long> tensor_simple(const RootSystemData& rs, const Weight& a,
                                          const Weight& b) {
    // iterate over the smaller diagram
    const Weight* hi = &a;
    const Weight* lo = &b;
    if (weyl_dim(rs, *lo) > weyl_dim(rs, *hi))
        std::swap(hi, lo);
    auto diag = weight_diagram(rs, *lo);
    Weight shifted = add(*hi, rs.rho);
    std::map<Weight, long long> acc;
    for (const auto& [nu, m] : diag->all) {
        DominantResult d = to_dominant(add(shifted, nu), rs);
        if (d.on_wall)
            continue;
        Weight w = sub(d.dominant, rs.rho);
        acc[w] += d.sign * m;
    }
    for (auto it = acc.begin(); it != acc.end();) {
        assert(it->second >= 0);
        if (it->second == 0)
            it = acc.erase(it);
        else
            ++it;
    }
    return acc;
}

void check_same_group_shape(const GroupSpec& g, const IrrepLabel& a, const IrrepLabel& b) {
    validate_label(g, a);
    validate_label(g, b);
}

} // namespace

std::shared_ptr<const WeightDiagram> weight_diagram(const RootSystemData& rs,
                                                    const Weight& lambda) {
    if (!is_dominant(lambda))
        throw domain_error("weight diagram requires a dominant weight");
    if (weight_height(lambda) > fusion_config().max_weight_height)
        throw resource_error("weight height " + std::to_string(weight_height(lambda)) +
                             " exceeds the configured bound " +
                             std::to_string(fusion_config().max_weight_height));
    return diagram_cache().get(rs, lambda);
}

std::map<Weight, long long> weight_multiplicities(const GroupSpec& g, const IrrepLabel& l,
                                                  std::size_t factor_index) {
    validate_label(g, l);
    if (factor_index >= g.size() || g.factor(factor_index).kind != FactorKind::Simple)
        throw domain_error("weight_multiplicities needs a simple factor index");
    return weight_diagram(g.root_system(factor_index), l.parts[factor_index])->all;
}

Weight unitary_su_part(const std::vector<long long>& tuple) {
    Weight w(tuple.size() - 1);
    for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
        w[i] = tuple[i] - tuple[i + 1];
    return w;
}

long long unitary_charge(const std::vector<long long>& tuple) {
    long long c = 0;
    for (auto x : tuple)
        c += x;
    return c;
}

std::vector<long long> unitary_tuple(const Weight& su_part, long long charge) {
    long long n = static_cast<long long>(su_part.size()) + 1;
    long long weighted = 0;
    for (std::size_t j = 0; j < su_part.size(); ++j)
        weighted += static_cast<long long>(j + 1) * su_part[j];
    long long rem = charge - weighted;
    assert(rem % n == 0);
    long long t = rem / n;
    std::vector<long long> tuple(n, t);
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(n); ++i) {
        long long s = 0;
        for (std::size_t j = i; j < su_part.size(); ++j)
            s += su_part[j];
        tuple[i] = t + s;
    }
    return tuple;
}

FusionVector tensor_decompose(const GroupSpec& g, const IrrepLabel& a, const IrrepLabel& b) {
    check_same_group_shape(g, a, b);
    // per-factor summand lists
    std::vector<std::vector<std::pair<std::vector<long long>, long long>>> per_factor;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Factor& f = g.factor(i);
        std::vector<std::pair<std::vector<long long>, long long>> out;
        if (f.kind == FactorKind::Simple) {
            for (auto& [w, m] : tensor_simple(g.root_system(i), a.parts[i], b.parts[i]))
                out.emplace_back(w, m);
        } else if (f.kind == FactorKind::Unitary) {
            long long charge = unitary_charge(a.parts[i]) + unitary_charge(b.parts[i]);
            for (auto& [w, m] : tensor_simple(g.unitary_root_system(i),
                                              unitary_su_part(a.parts[i]),
                                              unitary_su_part(b.parts[i])))
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

Int classical_dim(const GroupSpec& g, const IrrepLabel& l) {
    validate_label(g, l);
    Int d = 1;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Factor& f = g.factor(i);
        if (f.kind == FactorKind::Simple)
            d *= weyl_dim(g.root_system(i), l.parts[i]);
        else if (f.kind == FactorKind::Unitary)
            d *= weyl_dim(g.unitary_root_system(i), unitary_su_part(l.parts[i]));
    }
    return d;
}

Rat quantum_dim(const GroupSpec& g, const IrrepLabel& l, const Rat& q) {
    validate_label(g, l);
    if (!(q > 0 && q < 1))
        throw domain_error("q must satisfy 0 < q < 1, got " + format_rational(q));
    Rat d(1);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Factor& f = g.factor(i);
        if (f.kind == FactorKind::Simple)
            d *= weyl_qdim(g.root_system(i), l.parts[i], q);
        else if (f.kind == FactorKind::Unitary)
            d *= weyl_qdim(g.unitary_root_system(i), unitary_su_part(l.parts[i]), q);
    }
    return d;
}

IrrepLabel conjugate(const GroupSpec& g, const IrrepLabel& l) {
    validate_label(g, l);
    IrrepLabel out;
    out.parts.resize(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Factor& f = g.factor(i);
        if (f.kind == FactorKind::Simple) {
            out.parts[i] = negate_w0(l.parts[i], g.root_system(i));
        } else {
            // dual of a U(n) (or circle) label: negate and reverse
            std::vector<long long> t(l.parts[i].rbegin(), l.parts[i].rend());
            for (auto& c : t)
                c = -c;
            out.parts[i] = std::move(t);
        }
    }
    return out;
}

} // namespace dqs
