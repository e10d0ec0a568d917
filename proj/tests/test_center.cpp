#include "dqs/center.hpp"
#include "dqs/error.hpp"

#include <doctest.h>

#include <algorithm>

using namespace dqs;

namespace {

CentralCharacter chi_of(const CenterData& cd, const char* label_text) {
    return central_character(cd, parse_label(cd.group, label_text));
}

} // namespace

TEST_CASE("center invariant factors per type") {
    auto check_center = [](const char* spec, std::vector<long long> want) {
        CenterData cd = center_group(parse_group_spec(spec));
        CHECK_MESSAGE(cd.factors[0].invariant_factors == want, spec);
        // product of invariant factors = |det(Cartan matrix)|
        if (cd.group.factor(0).kind == FactorKind::Simple) {
            long long prod = 1;
            for (auto d : want)
                prod *= d;
            const auto& a = cd.group.root_system(0).cartan;
            // determinant by expansion for the small ranks we use
            std::vector<std::vector<Rat>> m(a.size(), std::vector<Rat>(a.size()));
            for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t j = 0; j < a.size(); ++j)
                    m[i][j] = to_rat(a[i][j]);
            Rat det(1);
            for (std::size_t col = 0; col < m.size(); ++col) {
                std::size_t p = col;
                while (p < m.size() && m[p][col] == 0)
                    ++p;
                REQUIRE(p < m.size());
                if (p != col) {
                    std::swap(m[p], m[col]);
                    det = -det;
                }
                det *= m[col][col];
                for (std::size_t i = col + 1; i < m.size(); ++i) {
                    Rat f = m[i][col] / m[col][col];
                    for (std::size_t j = col; j < m.size(); ++j)
                        m[i][j] -= f * m[col][j];
                }
            }
            CHECK(Rat(abs(det)) == to_rat(prod));
        }
    };
    check_center("SU(2)", {2});
    check_center("SU(3)", {3});
    check_center("SU(4)", {4});
    check_center("Spin(5)", {2});
    check_center("Spin(7)", {2});
    check_center("Spin(8)", {2, 2});
    check_center("Spin(10)", {4});
    check_center("Sp(3)", {2});
    check_center("E6", {3});
    check_center("E7", {2});
    check_center("E8", {});
    check_center("F4", {});
    check_center("G2", {});
}

TEST_CASE("center generators are central torus elements") {
    for (const char* spec : {"SU(2)", "SU(3)", "SU(4)", "Spin(8)", "Spin(10)", "E6"}) {
        GroupSpec g = parse_group_spec(spec);
        CenterData cd = center_group(g);
        const auto& rs = g.root_system(0);
        for (std::size_t k = 0; k < cd.factors[0].generators.size(); ++k) {
            const TorusElement& t = cd.factors[0].generators[k];
            // every root evaluates integrally
            for (const auto& root : rs.positive_roots)
                CHECK(pair_mod1(root.fw_coords, t) == 0);
            // the generator has the stated order
            TorusElement acc = torus_zero(rs.rank());
            long long order = 0;
            do {
                acc = torus_add(acc, t);
                ++order;
            } while (!is_zero(acc));
            CHECK(order == cd.factors[0].invariant_factors[k]);
        }
    }
}

TEST_CASE("U(n) factors report the circle center") {
    CenterData cd = center_group(parse_group_spec("U(2)"));
    CHECK(cd.factors[0].infinite_circle);
    CHECK(cd.factors[0].invariant_factors.empty());
}

TEST_CASE("central characters of SU(2) labels follow parity") {
    CenterData cd = center_group(parse_group_spec("SU(2)"));
    CHECK(is_trivial_character(chi_of(cd, "0")));
    for (long long m = 0; m <= 6; ++m) {
        IrrepLabel l;
        l.parts = {{m}};
        CHECK(central_character(cd, l).values[0][0] == m % 2);
    }
}

TEST_CASE("central character of U(2) labels is the coordinate sum") {
    CenterData cd = center_group(parse_group_spec("U(2)"));
    CHECK(chi_of(cd, "3,1").values[0][0] == 4);
    CHECK(chi_of(cd, "0,-2").values[0][0] == -2);
}

TEST_CASE("irr_chi examples") {
    CenterData su2 = center_group(parse_group_spec("SU(2)"));
    CentralCharacter odd = chi_of(su2, "1");
    auto odds = irr_chi(su2, odd, 5);
    CHECK(odds == std::vector<IrrepLabel>{parse_label(su2.group, "1"),
                                          parse_label(su2.group, "3"),
                                          parse_label(su2.group, "5")});
    auto evens = irr_chi(su2, trivial_character(su2), 4);
    CHECK(evens == std::vector<IrrepLabel>{parse_label(su2.group, "0"),
                                           parse_label(su2.group, "2"),
                                           parse_label(su2.group, "4")});

    CenterData su3 = center_group(parse_group_spec("SU(3)"));
    auto slice = irr_chi(su3, chi_of(su3, "1,0"), 2);
    CHECK(slice == std::vector<IrrepLabel>{parse_label(su3.group, "0,2"),
                                           parse_label(su3.group, "1,0")});
}

TEST_CASE("grading: central characters multiply under tensor products") {
    for (const char* spec : {"SU(2)", "SU(3)", "SU(2)xSU(3)"}) {
        GroupSpec g = parse_group_spec(spec);
        CenterData cd = center_group(g);
        auto labels = labels_up_to_height(g, 3);
        for (const auto& a : labels)
            for (const auto& b : labels) {
                CentralCharacter want =
                    char_mul(cd, central_character(cd, a), central_character(cd, b));
                for (const auto& [c, m] : tensor_decompose(g, a, b).terms)
                    CHECK(central_character(cd, c) == want);
            }
    }
}

TEST_CASE("conjugation inverts the central character") {
    for (const char* spec : {"SU(3)", "SU(4)", "U(2)"}) {
        GroupSpec g = parse_group_spec(spec);
        CenterData cd = center_group(g);
        for (const auto& l : labels_up_to_height(g, 3))
            CHECK(central_character(cd, conjugate(g, l)) ==
                  char_inverse(cd, central_character(cd, l)));
    }
}

TEST_CASE("module closure: SU(2) ladders") {
    CenterData cd = center_group(parse_group_spec("SU(2)"));
    const GroupSpec& g = cd.group;
    auto adj = adjoint_generators(g);
    REQUIRE(adj.size() == 1);
    CHECK(adj[0] == parse_label(g, "2"));

    auto odd = module_closure(cd, parse_label(g, "1"), adj, 5, 32);
    CHECK(odd == std::vector<IrrepLabel>{parse_label(g, "1"), parse_label(g, "3"),
                                         parse_label(g, "5")});
    auto even = module_closure(cd, parse_label(g, "0"), adj, 4, 32);
    CHECK(even == std::vector<IrrepLabel>{parse_label(g, "0"), parse_label(g, "2"),
                                          parse_label(g, "4")});
}

TEST_CASE("module closure: SU(3) example") {
    CenterData cd = center_group(parse_group_spec("SU(3)"));
    const GroupSpec& g = cd.group;
    auto got = module_closure(cd, parse_label(g, "1,0"), {parse_label(g, "1,1")}, 2, 32);
    CHECK(got == std::vector<IrrepLabel>{parse_label(g, "0,2"), parse_label(g, "1,0")});
}

TEST_CASE("module closure rejects generators with nontrivial central character") {
    CenterData cd = center_group(parse_group_spec("SU(2)"));
    CHECK_THROWS_AS(module_closure(cd, parse_label(cd.group, "0"),
                                   {parse_label(cd.group, "1")}, 4, 8),
                    domain_error);
}

TEST_CASE("module closure stays inside its central character slice") {
    for (const char* spec : {"SU(2)", "SU(3)"}) {
        CenterData cd = center_group(parse_group_spec(spec));
        const GroupSpec& g = cd.group;
        auto adj = adjoint_generators(g);
        for (const auto& seed : labels_up_to_height(g, 2)) {
            auto closure = module_closure(cd, seed, adj, 5, 32);
            auto slice = irr_chi(cd, central_character(cd, seed), 5);
            for (const auto& l : closure)
                CHECK(std::binary_search(slice.begin(), slice.end(), l));
        }
    }
}

TEST_CASE("saturation: the adjoint generator reaches the whole slice") {
    // closure from any seed covers irr_chi(chi, h - g) where g is the
    // generator height, here up to h = 8
    auto check_saturation = [](const char* spec, std::vector<const char*> seeds) {
        CenterData cd = center_group(parse_group_spec(spec));
        auto adj = adjoint_generators(cd.group);
        long long gen_height = label_height(cd.group, adj[0]);
        const long long h = 8;
        for (const char* seed_text : seeds) {
            auto seed = parse_label(cd.group, seed_text);
            auto closure = module_closure(cd, seed, adj, h, 64);
            auto slice = irr_chi(cd, central_character(cd, seed), h - gen_height);
            for (const auto& l : slice)
                CHECK_MESSAGE(std::binary_search(closure.begin(), closure.end(), l),
                              spec << " seed " << seed_text << " misses "
                                   << format_label(l));
        }
    };
    check_saturation("SU(2)", {"0", "1"});
    check_saturation("SU(3)", {"0,0", "1,0", "0,1"});
}
