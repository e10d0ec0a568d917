#include "dqs/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace dqs;

namespace {

struct Options {
    std::string group;
    std::string format = "table";
    std::string in_file;
    std::string out_file;
    std::string a, b, label, seed, chi_text, q_text = "1/2", mode = "double";
    std::vector<std::string> gens;
    std::vector<std::string> z_gens;
    long long height = 8;
    long long torus_bound = 1;
    int steps = 64;
    long long height_limit = 48;
    long long cache_limit = 4096;
};

Json read_json_input(const Options& opt) {
    if (opt.in_file.empty())
        throw domain_error("this command needs --in FILE");
    std::ifstream in(opt.in_file);
    if (!in)
        throw domain_error("cannot open input file '" + opt.in_file + "'");
    Json j;
    in >> j;
    return j;
}

void emit(const Options& opt, const Json& payload, const std::string& table) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!opt.out_file.empty()) {
        file.open(opt.out_file);
        if (!file)
            throw domain_error("cannot open output file '" + opt.out_file + "'");
        out = &file;
    }
    if (opt.format == "json")
        *out << payload.dump(2) << "\n";
    else
        *out << table << "\n";
}

std::string datum_line(const SubgroupDatum& d) {
    std::ostringstream os;
    os << "J=[";
    for (std::size_t i = 0; i < d.j.size(); ++i)
        os << (i ? "," : "") << d.j[i];
    os << "] |S|=" << d.s.order();
    if (d.unitary) {
        os << " F=" << d.unitary_m << "Z";
        if (d.unitary_m != 0)
            os << " f(m)=" << format_torus_element(d.unitary_twist);
    } else {
        os << " |F|=" << d.f_elements.size();
        bool twisted = false;
        for (const auto& [chi, rep] : d.twist)
            if (!is_zero(rep))
                twisted = true;
        os << (twisted ? " twisted" : " untwisted");
    }
    return os.str();
}

std::vector<SubgroupDatum> data_from_json(const Json& j) {
    std::vector<SubgroupDatum> data;
    if (j.is_array())
        for (const auto& entry : j)
            data.push_back(datum_from_json(entry));
    else if (j.contains("data"))
        for (const auto& entry : j.at("data"))
            data.push_back(datum_from_json(entry));
    else
        data.push_back(datum_from_json(j));
    return data;
}

GroupSpec group_of(const Options& opt) {
    if (opt.group.empty())
        throw domain_error("this command needs --group");
    return parse_group_spec(opt.group);
}

int run_command(const std::string& cmd, const Options& opt) {
    fusion_config().max_weight_height = opt.height_limit;
    fusion_config().cache_limit = static_cast<std::size_t>(opt.cache_limit);

    if (cmd == "info") {
        GroupSpec g = group_of(opt);
        CenterData cd = center_group(g);
        Json factors = Json::array();
        std::ostringstream table;
        table << g.text() << ": torus rank " << g.torus_rank() << "\n";
        for (std::size_t i = 0; i < g.size(); ++i) {
            const Factor& f = g.factor(i);
            Json entry{{"factor", f.text}};
            table << "  [" << i << "] " << f.text;
            if (f.kind == FactorKind::Simple) {
                const auto& rs = g.root_system(i);
                entry["type"] = rs.type.name();
                entry["rank"] = rs.rank();
                entry["positive_roots"] = rs.positive_roots.size();
                entry["weyl_order"] = rs.weyl_order.get_str();
                entry["lie_dim"] = rs.lie_dim;
                table << " type " << rs.type.name() << ", " << rs.positive_roots.size()
                      << " positive roots, |W|=" << rs.weyl_order.get_str();
            } else {
                entry["rank"] = f.torus_rank();
                table << " rank " << f.torus_rank();
            }
            table << "\n";
            factors.push_back(std::move(entry));
        }
        Json payload{{"group", g.text()}, {"torus_rank", g.torus_rank()},
                     {"factors", factors}, {"center", center_json(cd)}};
        std::string t = table.str();
        t.pop_back();
        emit(opt, payload, t);
        return 0;
    }
    if (cmd == "tensor") {
        GroupSpec g = group_of(opt);
        FusionVector v =
            tensor_decompose(g, parse_label(g, opt.a), parse_label(g, opt.b));
        emit(opt, fusion_vector_json(v), format_fusion_vector(v));
        return 0;
    }
    if (cmd == "dim") {
        GroupSpec g = group_of(opt);
        Int d = classical_dim(g, parse_label(g, opt.label));
        emit(opt, Json{{"dim", d.get_str()}}, d.get_str());
        return 0;
    }
    if (cmd == "qdim") {
        GroupSpec g = group_of(opt);
        Rat q = parse_rational(opt.q_text);
        if (!(q > 0 && q < 1))
            throw domain_error("--q must be a rational p/q with 0 < p < q");
        Rat d = quantum_dim(g, parse_label(g, opt.label), q);
        emit(opt, Json{{"qdim", format_rational(d)}}, format_rational(d));
        return 0;
    }
    if (cmd == "center") {
        GroupSpec g = group_of(opt);
        CenterData cd = center_group(g);
        std::ostringstream table;
        for (std::size_t i = 0; i < cd.factors.size(); ++i) {
            const CenterFactor& f = cd.factors[i];
            table << g.factor(i).text << ": ";
            if (f.infinite_circle) {
                table << "U(1)";
            } else if (f.invariant_factors.empty()) {
                table << "trivial";
            } else {
                for (std::size_t k = 0; k < f.invariant_factors.size(); ++k)
                    table << (k ? " x " : "") << "Z/" << f.invariant_factors[k];
                table << " generated by";
                for (const auto& gen : f.generators)
                    table << " (" << format_torus_element(gen) << ")";
            }
            if (i + 1 < cd.factors.size())
                table << "\n";
        }
        emit(opt, center_json(cd), table.str());
        return 0;
    }
    if (cmd == "chi") {
        GroupSpec g = group_of(opt);
        CenterData cd = center_group(g);
        if (!opt.label.empty()) {
            CentralCharacter chi = central_character(cd, parse_label(g, opt.label));
            emit(opt, Json{{"character", character_json(cd, chi)}},
                 character_json(cd, chi).dump());
            return 0;
        }
        if (opt.chi_text.empty())
            throw domain_error("chi needs --label (character of a label) or --chi plus "
                               "--height (list Irr_chi)");
        CentralCharacter chi = parse_character(opt.chi_text, cd);
        auto labels = irr_chi(cd, chi, opt.height);
        Json arr = Json::array();
        std::ostringstream table;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            arr.push_back(label_json(labels[i]));
            table << (i ? "\n" : "") << format_label(labels[i]);
        }
        emit(opt, Json{{"labels", arr}}, table.str());
        return 0;
    }
    if (cmd == "closure") {
        GroupSpec g = group_of(opt);
        CenterData cd = center_group(g);
        IrrepLabel seed = parse_label(g, opt.seed);
        std::vector<IrrepLabel> gens;
        for (const auto& text : opt.gens)
            gens.push_back(parse_label(g, text));
        if (gens.empty())
            gens = adjoint_generators(g);
        auto labels = module_closure(cd, seed, gens, opt.height, opt.steps);
        Json arr = Json::array();
        std::ostringstream table;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            arr.push_back(label_json(labels[i]));
            table << (i ? "\n" : "") << format_label(labels[i]);
        }
        emit(opt, Json{{"labels", arr}}, table.str());
        return 0;
    }
    if (cmd == "check") {
        ExplicitSet set = explicit_set_from_json(read_json_input(opt));
        Verdict v = check_closure(set);
        std::ostringstream table;
        table << (v.accepted ? "accepted" : "rejected");
        for (const auto& viol : v.violations)
            table << "\n  " << violation_kind_name(viol.kind);
        emit(opt, verdict_json(v), table.str());
        return 0;
    }
    if (cmd == "classify") {
        ExplicitSet set = explicit_set_from_json(read_json_input(opt));
        SubgroupDatum d = classify(set);
        emit(opt, datum_json(d), datum_line(d));
        return 0;
    }
    if (cmd == "realize") {
        SubgroupDatum d = datum_from_json(read_json_input(opt));
        ExplicitSet set = realize(d, opt.height);
        std::ostringstream table;
        table << set.pairs.size() << " pairs at height " << opt.height;
        for (const auto& [t, l] : set.pairs)
            table << "\n  (" << format_torus_element(t) << " ; " << format_label(l) << ")";
        emit(opt, explicit_set_json(set), table.str());
        return 0;
    }
    if (cmd == "enumerate") {
        GroupSpec g = group_of(opt);
        auto data = enumerate_data(g, opt.torus_bound, opt.height);
        Json arr = Json::array();
        std::ostringstream table;
        table << data.size() << " data (torus bound " << opt.torus_bound << ", height "
              << opt.height << ")";
        for (const auto& d : data) {
            arr.push_back(datum_json(d));
            table << "\n  " << datum_line(d);
        }
        emit(opt, Json{{"count", data.size()}, {"data", arr}}, table.str());
        return 0;
    }
    if (cmd == "quotient") {
        Json input = read_json_input(opt);
        auto data = data_from_json(input);
        if (data.empty())
            throw domain_error("no data in input");
        GroupSpec g = data[0].group;
        if (opt.z_gens.empty())
            throw domain_error("quotient needs at least one --z generator");
        std::vector<TorusElement> z;
        for (const auto& text : opt.z_gens)
            z.push_back(parse_torus_element(text, g.torus_rank()));
        QuotientMode mode;
        if (opt.mode == "double")
            mode = QuotientMode::DoubleQuotient;
        else if (opt.mode == "group")
            mode = QuotientMode::GroupQuotient;
        else
            throw domain_error("--mode must be double or group");
        auto kept = quotient_transfer(g, data, z, mode);
        Json arr = Json::array();
        std::ostringstream table;
        table << kept.size() << " of " << data.size() << " data kept";
        for (const auto& d : kept) {
            Json entry = datum_json(d);
            if (mode == QuotientMode::GroupQuotient) {
                QuotientCoordinates qc = rewrite_in_quotient(d, z);
                Json selems = Json::array();
                for (const auto& e : qc.s_elements)
                    selems.push_back(torus_element_json(e));
                Json twists = Json::array();
                CenterData cd = center_group(g);
                for (const auto& [chi, rep] : qc.twist)
                    twists.push_back({{"on", character_json(cd, chi)},
                                      {"coset_rep", torus_element_json(rep)}});
                entry["quotient_coordinates"] =
                    Json{{"S_elements", selems}, {"f", twists}};
            }
            arr.push_back(std::move(entry));
            table << "\n  " << datum_line(d);
        }
        emit(opt, Json{{"count", kept.size()}, {"data", arr}}, table.str());
        return 0;
    }
    if (cmd == "witness") {
        SubgroupDatum d = datum_from_json(read_json_input(opt));
        SubgroupDatum w = commensurability_witness(d);
        emit(opt, datum_json(w), datum_line(w));
        return 0;
    }
    throw domain_error("unknown command " + cmd);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact fusion rings and discrete quantum subgroup data of quantum doubles"};
    app.require_subcommand(1);
    Options opt;

    app.add_option("--height-limit", opt.height_limit, "resource bound for weight diagrams");
    app.add_option("--cache-limit", opt.cache_limit, "weight diagram cache entries");

    std::vector<std::string> names{"info",     "tensor",  "dim",      "qdim",  "center",
                                   "chi",      "closure", "check",    "classify", "realize",
                                   "enumerate", "quotient", "witness"};
    for (const auto& name : names) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--group", opt.group, "group spec, e.g. SU(3)xSU(2)");
        sub->add_option("--format", opt.format)->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--in", opt.in_file, "input JSON file");
        sub->add_option("--out", opt.out_file, "output file (default stdout)");
        sub->add_option("--height", opt.height, "height bound");
        sub->add_option("--torus-bound", opt.torus_bound, "torus subgroup order bound");
        sub->add_option("--q", opt.q_text, "deformation parameter p/q with 0<p<q");
        sub->add_option("--a", opt.a, "first label");
        sub->add_option("--b", opt.b, "second label");
        sub->add_option("--label", opt.label, "label");
        sub->add_option("--seed", opt.seed, "module closure seed label");
        sub->add_option("--gen", opt.gens, "module closure generator label (repeatable)");
        sub->add_option("--steps", opt.steps, "module closure step bound");
        sub->add_option("--chi", opt.chi_text, "central character, blocks joined by ';'");
        sub->add_option("--z", opt.z_gens, "central subgroup generator (repeatable)");
        sub->add_option("--mode", opt.mode, "quotient mode: double | group");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return run_command(cmd, opt);
    } catch (const rejected_set_error& e) {
        Json payload{{"error", e.what()}, {"verdict", verdict_json(e.verdict)}};
        if (opt.format == "json")
            std::cout << payload.dump(2) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const parse_error& e) {
        if (opt.format == "json")
            std::cout << Json{{"error", e.what()}}.dump(2) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const resource_error& e) {
        if (opt.format == "json")
            std::cout << Json{{"error", e.what()}, {"kind", "resource_limit"}}.dump(2) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        if (opt.format == "json")
            std::cout << Json{{"error", e.what()}}.dump(2) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
