#pragma once

#include "dqs/cartan.hpp"

#include <compare>
#include <memory>
#include <string>
#include <vector>

namespace dqs {

enum class FactorKind { Simple, Unitary, Circle };

struct Factor {
    FactorKind kind;
    SimpleType type{Family::A, 1}; // Simple only
    int n = 1;                     // Unitary: n >= 2; Circle: 1
    std::string text;              // the token that produced this factor

    int label_width() const { return kind == FactorKind::Simple ? type.rank : n; }
    int torus_rank() const { return kind == FactorKind::Simple ? type.rank : n; }
};

// A compact group given as an ordered product of simple, unitary and circle
// factors. Root systems of the simple factors are built once and shared.
class GroupSpec {
public:
    GroupSpec() = default;
    explicit GroupSpec(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    const Factor& factor(std::size_t i) const { return factors_[i]; }
    std::size_t size() const { return factors_.size(); }
    const RootSystemData& root_system(std::size_t i) const; // Simple factors only
    // Root system of A_{n-1}, used for the SU(n) part of a U(n) factor.
    const RootSystemData& unitary_root_system(std::size_t i) const;

    int torus_rank() const;
    bool semisimple() const;
    std::string text() const { return text_; }

    bool operator==(const GroupSpec& o) const { return text_ == o.text_; }

private:
    std::vector<Factor> factors_;
    std::vector<std::shared_ptr<const RootSystemData>> root_systems_;
    std::vector<std::shared_ptr<const RootSystemData>> unitary_rs_;
    std::string text_;
};

// Grammar: SU(n) n>=2, Spin(n) n=5,7,9,... or n>=8 even, Sp(n) n>=3,
// E6|E7|E8|F4|G2, U(n) (U(1) is a circle factor), products joined by 'x'.
// Case-sensitive, no whitespace. Errors carry the offending position.
GroupSpec parse_group_spec(const std::string& text);

// Dominant-weight label of an irreducible representation: one coordinate
// block per factor (fundamental coordinates for simple factors, a
// non-increasing integer tuple for U(n), a single charge for circles).
struct IrrepLabel {
    std::vector<std::vector<long long>> parts;

    bool operator==(const IrrepLabel&) const = default;
    auto operator<=>(const IrrepLabel&) const = default;
};

IrrepLabel unit_label(const GroupSpec& g);
bool is_unit(const IrrepLabel& l);

// Throws domain_error when a block has the wrong width, a simple component
// is not dominant, or a unitary tuple is not non-increasing.
void validate_label(const GroupSpec& g, const IrrepLabel& l);

// Sum over factors; unitary blocks contribute the sum of absolute values,
// circle charges their absolute value.
long long label_height(const GroupSpec& g, const IrrepLabel& l);

// All valid labels of height <= h, lexicographically ordered by
// concatenated coordinates.
std::vector<IrrepLabel> labels_up_to_height(const GroupSpec& g, long long h);

// Label text: blocks joined by ';', coordinates by ','. E.g. "1,0;2".
std::string format_label(const IrrepLabel& l);
IrrepLabel parse_label(const GroupSpec& g, const std::string& text);

} // namespace dqs
