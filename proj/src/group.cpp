#include "dqs/group.hpp"

#include "dqs/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

namespace dqs {

namespace {

// Root systems are immutable; share them process-wide.
const std::shared_ptr<const RootSystemData>& shared_root_system(const SimpleType& t) {
    static std::mutex mu;
    static std::map<SimpleType, std::shared_ptr<const RootSystemData>> table;
    std::lock_guard<std::mutex> lock(mu);
    auto it = table.find(t);
    if (it == table.end())
        it = table.emplace(t, std::make_shared<RootSystemData>(build_root_system(t))).first;
    return it->second;
}

} // namespace

GroupSpec::GroupSpec(std::vector<Factor> factors) : factors_(std::move(factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const Factor& f = factors_[i];
        if (f.kind == FactorKind::Simple) {
            root_systems_.push_back(shared_root_system(f.type));
            unitary_rs_.push_back(nullptr);
        } else if (f.kind == FactorKind::Unitary) {
            root_systems_.push_back(nullptr);
            unitary_rs_.push_back(shared_root_system(SimpleType{Family::A, f.n - 1}));
        } else {
            root_systems_.push_back(nullptr);
            unitary_rs_.push_back(nullptr);
        }
        if (i)
            text_ += "x";
        text_ += f.text;
    }
}

const RootSystemData& GroupSpec::root_system(std::size_t i) const {
    if (!root_systems_[i])
        throw domain_error("factor " + std::to_string(i) + " of " + text_ +
                           " is not a simple factor");
    return *root_systems_[i];
}

const RootSystemData& GroupSpec::unitary_root_system(std::size_t i) const {
    if (!unitary_rs_[i])
        throw domain_error("factor " + std::to_string(i) + " of " + text_ +
                           " is not a unitary factor");
    return *unitary_rs_[i];
}

int GroupSpec::torus_rank() const {
    int r = 0;
    for (const auto& f : factors_)
        r += f.torus_rank();
    return r;
}

bool GroupSpec::semisimple() const {
    for (const auto& f : factors_)
        if (f.kind != FactorKind::Simple)
            return false;
    return !factors_.empty();
}

namespace {

struct SpecCursor {
    const std::string& s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
};

long parse_paren_int(SpecCursor& c, const std::string& head) {
    std::size_t open = c.pos;
    if (c.done() || c.peek() != '(')
        throw parse_error("expected '(' after '" + head + "'", c.pos);
    ++c.pos;
    std::size_t start = c.pos;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())))
        ++c.pos;
    if (c.pos == start)
        throw parse_error("expected an integer after '" + head + "('", c.pos);
    long n = std::stol(c.s.substr(start, c.pos - start));
    if (c.done() || c.peek() != ')')
        throw parse_error("unbalanced '(' in group spec", open);
    ++c.pos;
    return n;
}

Factor parse_factor(SpecCursor& c) {
    std::size_t start = c.pos;
    std::size_t head_end = c.pos;
    while (head_end < c.s.size() &&
           (std::isalpha(static_cast<unsigned char>(c.s[head_end])) ||
            std::isdigit(static_cast<unsigned char>(c.s[head_end]))) &&
           c.s[head_end] != 'x')
        ++head_end;
    // exceptional types are bare tokens
    static const std::map<std::string, SimpleType> exceptional = {
        {"E6", {Family::E, 6}}, {"E7", {Family::E, 7}}, {"E8", {Family::E, 8}},
        {"F4", {Family::F, 4}}, {"G2", {Family::G, 2}},
    };
    std::string head = c.s.substr(start, head_end - start);
    if (auto it = exceptional.find(head); it != exceptional.end()) {
        c.pos = head_end;
        Factor f;
        f.kind = FactorKind::Simple;
        f.type = it->second;
        f.text = head;
        return f;
    }

    auto take_head = [&](const char* name) {
        std::size_t len = std::string(name).size();
        if (c.s.compare(c.pos, len, name) == 0 && c.pos + len < c.s.size() &&
            c.s[c.pos + len] == '(') {
            c.pos += len;
            return true;
        }
        return false;
    };

    if (take_head("SU")) {
        long n = parse_paren_int(c, "SU");
        if (n < 2)
            throw parse_error("SU(" + std::to_string(n) + ") is not admissible (need n >= 2)",
                              start);
        Factor f;
        f.kind = FactorKind::Simple;
        f.type = {Family::A, static_cast<int>(n - 1)};
        f.text = "SU(" + std::to_string(n) + ")";
        return f;
    }
    if (take_head("Spin")) {
        long n = parse_paren_int(c, "Spin");
        Factor f;
        f.kind = FactorKind::Simple;
        if (n >= 5 && n % 2 == 1)
            f.type = {Family::B, static_cast<int>((n - 1) / 2)};
        else if (n >= 8 && n % 2 == 0)
            f.type = {Family::D, static_cast<int>(n / 2)};
        else
            throw parse_error("Spin(" + std::to_string(n) +
                                  ") is not admissible (need odd n >= 5 or even n >= 8)",
                              start);
        f.text = "Spin(" + std::to_string(n) + ")";
        return f;
    }
    if (take_head("Sp")) {
        long n = parse_paren_int(c, "Sp");
        if (n < 3)
            throw parse_error("Sp(" + std::to_string(n) + ") is not admissible (need n >= 3)",
                              start);
        Factor f;
        f.kind = FactorKind::Simple;
        f.type = {Family::C, static_cast<int>(n)};
        f.text = "Sp(" + std::to_string(n) + ")";
        return f;
    }
    if (take_head("U")) {
        long n = parse_paren_int(c, "U");
        if (n < 1)
            throw parse_error("U(" + std::to_string(n) + ") is not admissible (need n >= 1)",
                              start);
        Factor f;
        f.kind = n == 1 ? FactorKind::Circle : FactorKind::Unitary;
        f.n = static_cast<int>(n);
        f.text = "U(" + std::to_string(n) + ")";
        return f;
    }
    throw parse_error("unrecognized group token '" + head + "'", start);
}

} // namespace

GroupSpec parse_group_spec(const std::string& text) {
    if (text.empty())
        throw parse_error("empty group spec", 0);
    for (std::size_t i = 0; i < text.size(); ++i)
        if (std::isspace(static_cast<unsigned char>(text[i])))
            throw parse_error("whitespace is not allowed in group specs", i);
    SpecCursor c{text};
    std::vector<Factor> factors;
    factors.push_back(parse_factor(c));
    while (!c.done()) {
        if (c.peek() != 'x')
            throw parse_error("expected 'x' between factors", c.pos);
        ++c.pos;
        factors.push_back(parse_factor(c));
    }
    return GroupSpec(std::move(factors));
}

IrrepLabel unit_label(const GroupSpec& g) {
    IrrepLabel l;
    for (const auto& f : g.factors())
        l.parts.emplace_back(f.label_width(), 0);
    return l;
}

bool is_unit(const IrrepLabel& l) {
    for (const auto& p : l.parts)
        for (auto c : p)
            if (c != 0)
                return false;
    return true;
}

void validate_label(const GroupSpec& g, const IrrepLabel& l) {
    if (l.parts.size() != g.size())
        throw domain_error("label has " + std::to_string(l.parts.size()) +
                           " blocks, expected " + std::to_string(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Factor& f = g.factor(i);
        const auto& p = l.parts[i];
        if (static_cast<int>(p.size()) != f.label_width())
            throw domain_error("label block " + std::to_string(i) + " has width " +
                               std::to_string(p.size()) + ", expected " +
                               std::to_string(f.label_width()));
        if (f.kind == FactorKind::Simple) {
            for (auto c : p)
                if (c < 0)
                    throw domain_error("label block " + std::to_string(i) +
                                       " is not dominant");
        } else if (f.kind == FactorKind::Unitary) {
            for (std::size_t j = 0; j + 1 < p.size(); ++j)
                if (p[j] < p[j + 1])
                    throw domain_error("U(n) label block " + std::to_string(i) +
                                       " is not non-increasing");
        }
    }
}

long long label_height(const GroupSpec& g, const IrrepLabel& l) {
    long long h = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g.factor(i).kind == FactorKind::Simple)
            h += weight_height(l.parts[i]);
        else
            for (auto c : l.parts[i])
                h += c < 0 ? -c : c;
    }
    return h;
}

namespace {

// per-factor blocks of height exactly within [0, h], sorted
std::vector<std::vector<long long>> factor_blocks(const Factor& f, long long h) {
    std::vector<std::vector<long long>> out;
    int w = f.label_width();
    std::vector<long long> cur(w, 0);
    if (f.kind == FactorKind::Simple) {
        // nonnegative tuples of coordinate sum <= h
        auto rec = [&](auto&& self, int idx, long long left) -> void {
            if (idx == w) {
                out.push_back(cur);
                return;
            }
            for (long long c = 0; c <= left; ++c) {
                cur[idx] = c;
                self(self, idx + 1, left - c);
            }
        };
        rec(rec, 0, h);
    } else {
        // non-increasing integer tuples with sum |.| <= h (circle: w = 1)
        auto rec = [&](auto&& self, int idx, long long left, long long ub) -> void {
            if (idx == w) {
                out.push_back(cur);
                return;
            }
            for (long long c = -left; c <= std::min(left, ub); ++c) {
                cur[idx] = c;
                self(self, idx + 1, left - (c < 0 ? -c : c), c);
            }
        };
        rec(rec, 0, h, h);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<IrrepLabel> labels_up_to_height(const GroupSpec& g, long long h) {
    std::vector<IrrepLabel> out;
    std::vector<std::vector<std::vector<long long>>> blocks;
    for (const auto& f : g.factors())
        blocks.push_back(factor_blocks(f, h));
    IrrepLabel cur;
    cur.parts.resize(g.size());
    auto rec = [&](auto&& self, std::size_t idx, long long left) -> void {
        if (idx == g.size()) {
            out.push_back(cur);
            return;
        }
        for (const auto& b : blocks[idx]) {
            long long bh = 0;
            for (auto c : b)
                bh += c < 0 ? -c : c;
            if (bh > left)
                continue;
            cur.parts[idx] = b;
            self(self, idx + 1, left - bh);
        }
    };
    rec(rec, 0, h);
    std::sort(out.begin(), out.end());
    return out;
}

std::string format_label(const IrrepLabel& l) {
    std::string s;
    for (std::size_t i = 0; i < l.parts.size(); ++i) {
        if (i)
            s += ";";
        for (std::size_t j = 0; j < l.parts[i].size(); ++j) {
            if (j)
                s += ",";
            s += std::to_string(l.parts[i][j]);
        }
    }
    return s;
}

IrrepLabel parse_label(const GroupSpec& g, const std::string& text) {
    IrrepLabel l;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = text.find(';', pos);
        std::string block = text.substr(pos, next == std::string::npos ? next : next - pos);
        std::vector<long long> coords;
        std::size_t bpos = 0;
        while (bpos <= block.size()) {
            std::size_t comma = block.find(',', bpos);
            std::string tok = block.substr(bpos, comma == std::string::npos ? comma : comma - bpos);
            try {
                std::size_t used = 0;
                coords.push_back(std::stoll(tok, &used));
                if (used != tok.size())
                    throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw parse_error("malformed label coordinate '" + tok + "'", pos + bpos);
            }
            if (comma == std::string::npos)
                break;
            bpos = comma + 1;
        }
        l.parts.push_back(std::move(coords));
        if (next == std::string::npos)
            break;
        pos = next + 1;
    }
    validate_label(g, l);
    return l;
}

} // namespace dqs
