#include "dqs/serialize.hpp"

#include "dqs/error.hpp"

#include <algorithm>

namespace dqs {

std::string format_fusion_vector(const FusionVector& v) {
    if (v.terms.empty())
        return "0";
    std::string out;
    for (const auto& [label, mult] : v.terms) {
        if (!out.empty())
            out += " + ";
        out += std::to_string(mult) + "*[" + format_label(label) + "]";
    }
    return out;
}

Json fusion_vector_json(const FusionVector& v) {
    Json arr = Json::array();
    for (const auto& [label, mult] : v.terms)
        arr.push_back({{"label", label_json(label)}, {"mult", mult}});
    return arr;
}

std::string format_torus_element(const TorusElement& t) {
    std::string s;
    for (std::size_t i = 0; i < t.coords.size(); ++i) {
        if (i)
            s += ",";
        s += format_rational(t.coords[i]);
    }
    return s;
}

Json torus_element_json(const TorusElement& t) {
    Json arr = Json::array();
    for (const auto& c : t.coords)
        arr.push_back(format_rational(c));
    return arr;
}

TorusElement torus_element_from_json(const Json& j, int rank) {
    if (!j.is_array() || static_cast<int>(j.size()) != rank)
        throw parse_error("torus element must be an array of " + std::to_string(rank) +
                          " rationals");
    TorusElement t;
    for (const auto& c : j)
        t.coords.push_back(mod1(parse_rational(c.get<std::string>())));
    return t;
}

TorusElement parse_torus_element(const std::string& text, int rank) {
    TorusElement t;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        t.coords.push_back(mod1(parse_rational(tok)));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    if (static_cast<int>(t.coords.size()) != rank)
        throw parse_error("expected " + std::to_string(rank) + " torus coordinates, got " +
                          std::to_string(t.coords.size()));
    return t;
}

Json label_json(const IrrepLabel& l) {
    Json arr = Json::array();
    for (const auto& part : l.parts)
        arr.push_back(part);
    return arr;
}

IrrepLabel label_from_json(const Json& j, const GroupSpec& g) {
    if (!j.is_array())
        throw parse_error("label must be an array of coordinate blocks");
    IrrepLabel l;
    for (const auto& block : j)
        l.parts.push_back(block.get<std::vector<long long>>());
    validate_label(g, l);
    return l;
}

Json character_json(const CenterData& cd, const CentralCharacter& chi) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < cd.group.size(); ++i) {
        if (cd.group.factor(i).kind == FactorKind::Simple)
            arr.push_back(chi.values[i]);
        else
            arr.push_back(chi.values[i][0]); // plain integer for U(n) and circles
    }
    return arr;
}

CentralCharacter character_from_json(const Json& j, const CenterData& cd) {
    if (!j.is_array() || j.size() != cd.group.size())
        throw parse_error("character must have one entry per factor");
    CentralCharacter chi;
    for (std::size_t i = 0; i < cd.group.size(); ++i) {
        if (cd.group.factor(i).kind == FactorKind::Simple) {
            auto block = j[i].get<std::vector<long long>>();
            const auto& inv = cd.factors[i].invariant_factors;
            if (block.size() != inv.size())
                throw parse_error("character block " + std::to_string(i) +
                                  " must have " + std::to_string(inv.size()) + " residues");
            for (std::size_t k = 0; k < inv.size(); ++k)
                block[k] = ((block[k] % inv[k]) + inv[k]) % inv[k];
            chi.values.push_back(std::move(block));
        } else {
            chi.values.push_back({j[i].get<long long>()});
        }
    }
    return chi;
}

CentralCharacter parse_character(const std::string& text, const CenterData& cd) {
    Json arr = Json::array();
    std::size_t pos = 0;
    std::size_t factor = 0;
    while (factor < cd.group.size()) {
        std::size_t semi = text.find(';', pos);
        std::string block = text.substr(pos, semi == std::string::npos ? semi : semi - pos);
        if (cd.group.factor(factor).kind == FactorKind::Simple) {
            Json vals = Json::array();
            if (!block.empty()) {
                std::size_t bpos = 0;
                while (true) {
                    std::size_t comma = block.find(',', bpos);
                    vals.push_back(std::stoll(
                        block.substr(bpos, comma == std::string::npos ? comma : comma - bpos)));
                    if (comma == std::string::npos)
                        break;
                    bpos = comma + 1;
                }
            }
            arr.push_back(vals);
        } else {
            arr.push_back(std::stoll(block));
        }
        ++factor;
        if (semi == std::string::npos)
            break;
        pos = semi + 1;
    }
    if (factor != cd.group.size())
        throw parse_error("character needs one ';'-separated block per factor");
    return character_from_json(arr, cd);
}

Json explicit_set_json(const ExplicitSet& set) {
    Json pairs = Json::array();
    for (const auto& [t, l] : set.pairs)
        pairs.push_back({{"t", torus_element_json(t)}, {"label", label_json(l)}});
    return Json{{"group", set.group.text()},
                {"height_bound", set.height_bound},
                {"pairs", pairs}};
}

ExplicitSet explicit_set_from_json(const Json& j) {
    ExplicitSet set;
    set.group = parse_group_spec(j.at("group").get<std::string>());
    set.height_bound = j.at("height_bound").get<long long>();
    int rank = set.group.torus_rank();
    for (const auto& p : j.at("pairs")) {
        TorusElement t = torus_element_from_json(p.at("t"), rank);
        IrrepLabel l = label_from_json(p.at("label"), set.group);
        set.pairs.insert({std::move(t), std::move(l)});
    }
    return set;
}

Json datum_json(const SubgroupDatum& d) {
    CenterData cd = center_group(d.group);
    int rank = d.group.torus_rank();
    Json s_gens = Json::array();
    for (const auto& g : canonical_generators(d.s, rank).generators)
        s_gens.push_back(torus_element_json(g));
    Json f_gens = Json::array();
    Json f_map = Json::array();
    if (d.unitary) {
        if (d.unitary_m != 0) {
            CentralCharacter gen;
            gen.values.push_back({d.unitary_m});
            f_gens.push_back(character_json(cd, gen));
            f_map.push_back({{"on", character_json(cd, gen)},
                             {"coset_rep", torus_element_json(d.unitary_twist)}});
        }
    } else {
        CharGenerators fg = character_generators(cd, d.f_elements);
        for (const auto& gen : fg.generators) {
            f_gens.push_back(character_json(cd, gen));
            f_map.push_back({{"on", character_json(cd, gen)},
                             {"coset_rep", torus_element_json(d.twist.at(gen))}});
        }
    }
    return Json{{"group", d.group.text()},
                {"J", d.j},
                {"S", Json{{"generators", s_gens}}},
                {"F", Json{{"generators", f_gens}}},
                {"f", f_map}};
}

SubgroupDatum datum_from_json(const Json& j) {
    GroupSpec group = parse_group_spec(j.at("group").get<std::string>());
    CenterData cd = center_group(group);
    int rank = group.torus_rank();
    std::vector<int> jset = j.at("J").get<std::vector<int>>();
    std::vector<TorusElement> s_gens;
    for (const auto& g : j.at("S").at("generators"))
        s_gens.push_back(torus_element_from_json(g, rank));
    std::vector<CentralCharacter> f_gens;
    for (const auto& g : j.at("F").at("generators"))
        f_gens.push_back(character_from_json(g, cd));
    std::map<CentralCharacter, TorusElement> reps;
    for (const auto& entry : j.at("f"))
        reps.emplace(character_from_json(entry.at("on"), cd),
                     torus_element_from_json(entry.at("coset_rep"), rank));

    bool unitary = group.size() == 1 && group.factor(0).kind == FactorKind::Unitary;
    if (unitary) {
        bool full = !jset.empty();
        long long m = 0;
        TorusElement rep = torus_zero(rank);
        if (!f_gens.empty()) {
            m = f_gens[0].values[0][0];
            auto it = reps.find(f_gens[0]);
            if (it != reps.end())
                rep = it->second;
        }
        return make_unitary_datum(group, full, s_gens, m, rep);
    }
    std::vector<TorusElement> rep_list;
    for (const auto& g : f_gens) {
        auto it = reps.find(g);
        rep_list.push_back(it == reps.end() ? torus_zero(rank) : it->second);
    }
    return make_datum(group, jset, s_gens, f_gens, rep_list);
}

Json verdict_json(const Verdict& v) {
    Json viols = Json::array();
    for (const auto& viol : v.violations) {
        Json pairs = Json::array();
        for (const auto& [t, l] : viol.pairs)
            pairs.push_back({{"t", torus_element_json(t)}, {"label", label_json(l)}});
        Json entry{{"kind", violation_kind_name(viol.kind)}, {"pairs", pairs}};
        if (viol.missing)
            entry["missing"] = Json{{"t", torus_element_json(viol.missing->first)},
                                    {"label", label_json(viol.missing->second)}};
        viols.push_back(std::move(entry));
    }
    return Json{{"accepted", v.accepted}, {"violations", viols}};
}

Json center_json(const CenterData& cd) {
    Json factors = Json::array();
    for (std::size_t i = 0; i < cd.factors.size(); ++i) {
        const CenterFactor& f = cd.factors[i];
        Json gens = Json::array();
        for (const auto& g : f.generators)
            gens.push_back(torus_element_json(g));
        factors.push_back(Json{{"factor", cd.group.factor(i).text},
                               {"invariant_factors", f.invariant_factors},
                               {"generators", gens},
                               {"infinite_circle", f.infinite_circle}});
    }
    return Json{{"group", cd.group.text()}, {"factors", factors}};
}

Json laurent_json(const LaurentPoly& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p)
        arr.push_back({{"exp", e}, {"coeff", c}});
    return arr;
}

std::string format_laurent(const LaurentPoly& p) {
    if (p.empty())
        return "0";
    std::string out;
    for (const auto& [e, c] : p) {
        if (!out.empty())
            out += " + ";
        out += std::to_string(c) + "*x^(";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i)
                out += ",";
            out += std::to_string(e[i]);
        }
        out += ")";
    }
    return out;
}

} // namespace dqs
