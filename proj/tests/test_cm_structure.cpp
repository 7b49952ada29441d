#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cmlef/cm_config.hpp"
#include "oracles.hpp"

using namespace cmlef;
using cmlef::testing::monomial_of;

namespace {

CycleType type_from(std::uint64_t i_bits, std::uint64_t j_bits, const GeneratorLayout& layout) {
    return CycleType(i_bits, j_bits, layout);
}

}  // namespace

TEST_CASE("type_of splits a monomial into unbarred and barred parts") {
    const CMConfig config({2});
    const GeneratorLayout& layout = config.layout();
    CHECK(type_of(Monomial{}, layout) == CycleType{});
    CHECK(type_of(monomial_of({0, 2}), layout) == type_from(0b0001, 0b0100, layout));
    CHECK(type_of(monomial_of({0, 1, 3}), layout) == type_from(0b0011, 0b1000, layout));
    CHECK(type_of(monomial_of({0, 1, 3}), layout).weight() == 3);
    CHECK_THROWS_AS(type_from(0b0100, 0, layout), std::invalid_argument);
    CHECK_THROWS_AS(type_from(0, 0b0001, layout), std::invalid_argument);
}

TEST_CASE("projection keeps exactly one isotypic component") {
    const CMConfig config({2});
    const GeneratorLayout& layout = config.layout();
    const Element a =
        Element::term(monomial_of({0}), 1) + Element::term(monomial_of({2}), 1);
    const CycleType t = type_from(0b0001, 0, layout);
    CHECK(project(a, t, layout) == Element::term(monomial_of({0}), 1));
    CHECK(project(project(a, t, layout), t, layout) == project(a, t, layout));

    // The hyperplane form splits into its (sigma, c sigma) components.
    const Element form = riemann_form_element(EigenvalueTuple::standard_skew(layout), layout);
    const CycleType pair1 = type_from(0b0001, 0b0100, layout);
    CHECK(project(form, pair1, layout) == Element::term(monomial_of({0, 2}), 1));
    for (const auto& [t2, component] : type_decomposition(form, layout)) {
        CHECK(component.term_count() == 1);
        CHECK(t2.i_bits() == layout.unbar_mask(t2.j_bits()));
    }
}

TEST_CASE("projections over all types reassemble the element, g <= 4") {
    std::mt19937_64 rng(41);
    for (unsigned g = 1; g <= 4; ++g) {
        const CMConfig config({g});
        const GeneratorLayout& layout = config.layout();
        const Element a = cmlef::testing::random_sparse(rng, layout);
        Element sum;
        for (const auto& [t, component] : type_decomposition(a, layout)) {
            CHECK(project(a, t, layout) == component);
            sum += component;
        }
        CHECK(sum == a);
    }
}

TEST_CASE("projected products merge types disjointly or vanish") {
    const CMConfig config({2});
    const GeneratorLayout& layout = config.layout();
    std::mt19937_64 rng(5);
    const Element a = cmlef::testing::random_sparse(rng, layout);
    const Element b = cmlef::testing::random_sparse(rng, layout);
    for (const auto& [ta, ca] : type_decomposition(a, layout)) {
        for (const auto& [tb, cb] : type_decomposition(b, layout)) {
            const Element product = wedge(ca, cb);
            if (product.is_zero())
                continue;
            const auto decomposition = type_decomposition(product, layout);
            CHECK(decomposition.size() == 1);
            const CycleType merged = decomposition.begin()->first;
            CHECK(merged.i_bits() == (ta.i_bits() | tb.i_bits()));
            CHECK(merged.j_bits() == (ta.j_bits() | tb.j_bits()));
            CHECK((ta.monomial().disjoint(tb.monomial())));
        }
    }
}

TEST_CASE("endomorphism action scales by the type eigenvalue") {
    const CMConfig config({1});
    const GeneratorLayout& layout = config.layout();
    const Element top = Element::term(monomial_of({0, 1}), 1);

    CHECK(endo_action(EigenvalueTuple::ones(layout), top, layout) == top);
    const EigenvalueTuple lambda({Scalar(2), Scalar(3)}, layout);
    CHECK(endo_action(lambda, top, layout) == top * Scalar(6));

    // A Frobenius tuple acts on each (sigma, c sigma) component by q.
    const CMConfig config2({3});
    const GeneratorLayout& layout2 = config2.layout();
    const Scalar q(9);
    std::vector<Scalar> values(layout2.generator_count());
    for (unsigned r = 0; r < 3; ++r) {
        values[r] = Scalar(3 * static_cast<long>(r + 1));
        values[r + 3] = q / values[r];
    }
    const EigenvalueTuple frobenius(values, layout2);
    REQUIRE(validate_frobenius(frobenius, q, layout2));
    for (unsigned r = 0; r < 3; ++r) {
        const Element pair = Element::term(monomial_of({r, r + 3}), 1);
        CHECK(endo_action(frobenius, pair, layout2) == pair * q);
    }
}

TEST_CASE("eigen-consistency of projections under the action") {
    const CMConfig config({2, 1});
    const GeneratorLayout& layout = config.layout();
    std::mt19937_64 rng(17);
    std::vector<Scalar> values;
    for (unsigned r = 0; r < layout.generator_count(); ++r)
        values.push_back(Scalar(static_cast<long>(1 + rng() % 7)));
    const EigenvalueTuple lambda(values, layout);
    const Element a = cmlef::testing::random_sparse(rng, layout);
    for (const auto& [t, component] : type_decomposition(a, layout)) {
        const Scalar eigenvalue = lambda.product_over(t.monomial().bits());
        CHECK(endo_action(lambda, component, layout) == component * eigenvalue);
    }
}

TEST_CASE("frobenius validation") {
    const CMConfig config({2});
    const GeneratorLayout& layout = config.layout();
    CHECK(validate_frobenius(EigenvalueTuple({Scalar(4), Scalar(4), Scalar(1), Scalar(1)}, layout),
                             Scalar(4), layout));
    CHECK(validate_frobenius(EigenvalueTuple({Scalar(2), Scalar(2), Scalar(2), Scalar(2)}, layout),
                             Scalar(4), layout));
    CHECK_FALSE(validate_frobenius(
        EigenvalueTuple({Scalar(2), Scalar(2), Scalar(3), Scalar(2)}, layout), Scalar(5), layout));
    CHECK_THROWS_AS(validate_frobenius(EigenvalueTuple::ones(layout), Scalar(0), layout),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_frobenius(EigenvalueTuple::ones(layout), Scalar(-2), layout),
                    std::invalid_argument);
}

TEST_CASE("conjugation swaps (I, J) to (cJ, cI)") {
    const CMConfig config({2});
    const GeneratorLayout& layout = config.layout();
    // ({sigma_1}, {c sigma_2}) -> ({sigma_2}, {c sigma_1}).
    const CycleType t = type_from(0b0001, 0b1000, layout);
    CHECK(t.conjugate(layout) == type_from(0b0010, 0b0100, layout));
    CHECK(CycleType{}.conjugate(layout) == CycleType{});

    for (unsigned g = 1; g <= 3; ++g) {
        const CMConfig c2({g});
        const GeneratorLayout& l2 = c2.layout();
        for (std::uint64_t bits = 0; bits <= l2.full_mask(); ++bits) {
            const CycleType u = type_of(Monomial(bits), l2);
            CHECK(u.conjugate(l2).conjugate(l2) == u);
            CHECK(u.conjugate(l2).weight() == u.weight());
        }
    }
}

TEST_CASE("riemann form element") {
    const CMConfig config({2});
    const GeneratorLayout& layout = config.layout();
    const Element expected =
        Element::term(monomial_of({0, 2}), 1) + Element::term(monomial_of({1, 3}), 1);
    CHECK(riemann_form_element(EigenvalueTuple::standard_skew(layout), layout) == expected);

    const EigenvalueTuple zero({Scalar(0), Scalar(0), Scalar(0), Scalar(0)}, layout);
    CHECK(riemann_form_element(zero, layout).is_zero());
    CHECK(degenerate_components(zero, layout).size() == 2);

    const EigenvalueTuple partial({Scalar(1), Scalar(0), Scalar(-1), Scalar(0)}, layout);
    const Element single = riemann_form_element(partial, layout);
    CHECK(single == Element::term(monomial_of({0, 2}), 1));
    const auto zeros = degenerate_components(partial, layout);
    REQUIRE(zeros.size() == 1);
    CHECK(zeros[0] == GeneratorIndex{1, 2, false});

    const EigenvalueTuple not_skew({Scalar(1), Scalar(1), Scalar(1), Scalar(-1)}, layout);
    CHECK_THROWS_AS(riemann_form_element(not_skew, layout), std::invalid_argument);
}

TEST_CASE("model document loading") {
    const nlohmann::json doc = {
        {"factors", {1, 2}},
        {"frobenius",
         {{"q", "4"},
          {"values",
           {{"w[1.1]", "2"},
            {"w[2.1]", "4"},
            {"w[2.2]", "1"},
            {"w[1.1]^bar", "2"},
            {"w[2.1]^bar", "1"},
            {"w[2.2]^bar", "4"}}}}},
        {"zeta",
         {{"w[1.1]", "1"},
          {"w[2.1]", "1"},
          {"w[2.2]", "2"},
          {"w[1.1]^bar", "-1"},
          {"w[2.1]^bar", "-1"},
          {"w[2.2]^bar", "-2"}}}};
    const ModelInput input = load_model_input(doc);
    CHECK(input.config.factor_genera() == std::vector<unsigned>{1, 2});
    CHECK(input.config.total_genus() == 3);
    REQUIRE(input.frobenius.has_value());
    CHECK(*input.frobenius_q == Scalar(4));
    CHECK(input.frobenius->at(0) == Scalar(2));
    REQUIRE(input.zeta.has_value());
    CHECK(input.zeta->is_skew(input.config.layout()));

    // Round trip of an eigenvalue map through its JSON form.
    const nlohmann::json zmap = eigenvalue_map_to_json(*input.zeta, input.config.layout());
    CHECK(parse_eigenvalue_map(zmap, input.config.layout()) == *input.zeta);
}

TEST_CASE("model document rejection") {
    CHECK_THROWS_AS(load_model_input({{"factors", {1}}, {"extra", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(load_model_input({{"factors", nlohmann::json::array()}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(load_model_input({{"factors", {0}}}), std::invalid_argument);
    CHECK_THROWS_AS(load_model_input(nlohmann::json::array()), std::invalid_argument);
    CHECK_THROWS_AS(
        load_model_input({{"factors", {1}}, {"frobenius", {{"q", "2"}}}}),
        std::invalid_argument);
    // Unknown generator, missing generator, wrong product.
    CHECK_THROWS_AS(
        load_model_input({{"factors", {1}}, {"zeta", {{"w[9.1]", "1"}}}}),
        std::out_of_range);
    CHECK_THROWS_AS(
        load_model_input({{"factors", {1}}, {"zeta", {{"w[1.1]", "1"}}}}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        load_model_input({{"factors", {1}},
                          {"frobenius",
                           {{"q", "4"}, {"values", {{"w[1.1]", "2"}, {"w[1.1]^bar", "3"}}}}}}),
        std::invalid_argument);
}
