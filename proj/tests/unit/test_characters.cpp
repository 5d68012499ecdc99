#include <e6cs/e6cs.hpp>
#include <e6cs/golden.hpp>

#include <gtest/gtest.h>

#include <map>

using namespace e6cs;

namespace {

Polynomial P(const char* s)
{
    return parse_polynomial(s);
}

std::vector<Weight> weights_up_to(int total)
{
    std::vector<Weight> out;
    Weight w{};
    for (w[0] = 0; w[0] <= total; ++w[0])
        for (w[1] = 0; w[0] + w[1] <= total; ++w[1])
            for (w[2] = 0; w[0] + w[1] + w[2] <= total; ++w[2])
                for (w[3] = 0; w[0] + w[1] + w[2] + w[3] <= total; ++w[3])
                    for (w[4] = 0; w[0] + w[1] + w[2] + w[3] + w[4] <= total; ++w[4])
                        for (w[5] = 0; height(w) <= total; ++w[5])
                            out.push_back(w);
    return out;
}

}  // namespace

TEST(Characters, RecursionExamples)
{
    EXPECT_EQ(character_recursion({2, 0, 0, 0, 0, 0}).poly, P("z1^2 - z3 - z6"));
    EXPECT_EQ(character_recursion(fundamental_weight(4)).poly, P("z4"));
    EXPECT_EQ(character_recursion({3, 0, 0, 0, 0, 0}).poly, P("z1^3 + z2 - 2*z1*z3 + z4 - z1*z6"));
    EXPECT_EQ(character_recursion({1, 0, 0, 0, 0, 1}).poly, P("z1*z6 - z2 - 1"));
    EXPECT_EQ(character_recursion(Weight{}).poly, Polynomial(1));
    EXPECT_EQ(character_recursion(fundamental_weight(2)).method, Method::recursion);
}

TEST(Characters, AnnihilatorExamples)
{
    EXPECT_EQ(character_annihilator({1, 1, 0, 0, 0, 0}).poly, P("z1*z2 - z1 - z5"));
    EXPECT_EQ(character_annihilator(fundamental_weight(6)).poly, P("z6"));
    EXPECT_EQ(character_annihilator({0, 2, 0, 0, 0, 0}).poly, P("z2^2 - z4 - z1*z6"));
    EXPECT_EQ(character_annihilator({0, 0, 0, 0, 0, 1}).method, Method::annihilator);
}

TEST(Characters, MethodsAgreeUpToDegreeThree)
{
    for (const auto& m : weights_up_to(3)) {
        Character r = character_recursion(m), a = character_annihilator(m);
        EXPECT_EQ(r.poly, a.poly) << format_weight(m);
        EXPECT_EQ(character_defect(r), "") << format_weight(m);
    }
}

TEST(Characters, GoldenPolynomials)
{
    auto gold = golden::characters();
    ASSERT_EQ(gold.size(), 59u);
    for (const auto& g : gold)
        EXPECT_EQ(character_recursion(g.weight).poly, g.poly) << g.source << " " << format_weight(g.weight);
}

TEST(Characters, Chi000300HasPrintedTermCount)
{
    Character c = character_recursion({0, 0, 0, 3, 0, 0});
    EXPECT_EQ(c.poly.size(), 46u);
    EXPECT_EQ(c.poly.coefficient_of({0, 0, 0, 0, 0, 0}), -1);
    EXPECT_EQ(c.poly.coefficient_of({1, 1, 1, 0, 0, 0}), 1);
}

TEST(Characters, DualityAndSupport)
{
    for (const auto& m : weights_up_to(3)) {
        Character c = character_recursion(m);
        EXPECT_EQ(conjugate_poly(c.poly), character_recursion(conjugate(m)).poly) << format_weight(m);
        for (const auto& [e, x] : c.poly)
            EXPECT_TRUE(is_dominant(to_root_basis(m - e)));
    }
}

TEST(Characters, DimensionOracle)
{
    // Independent of character_defect: evaluate against hand values.
    std::array<Rational, kRank> dims{27, 78, 351, 2925, 351, 27};
    EXPECT_EQ(evaluate(character_recursion({1, 0, 0, 0, 0, 1}).poly, dims), 650);
    EXPECT_EQ(evaluate(character_recursion({0, 1, 0, 0, 0, 0}).poly, dims), 78);
    EXPECT_EQ(evaluate(character_recursion({0, 0, 1, 1, 0, 0}).poly, dims), 386100);
}

TEST(Characters, DefectDetection)
{
    Character c = character_recursion({1, 0, 0, 0, 0, 1});
    EXPECT_EQ(character_defect(c), "");

    Character bad = c;
    bad.poly.add_term({0, 0, 0, 0, 0, 0}, 1);
    EXPECT_NE(character_defect(bad), "");

    bad = c;
    bad.poly *= 2;
    EXPECT_NE(character_defect(bad).find("leading"), std::string::npos);

    bad = c;
    bad.poly.add_term({0, 1, 0, 0, 0, 0}, Rational(1, 2));
    EXPECT_NE(character_defect(bad).find("integer"), std::string::npos);

    bad = c;
    bad.poly.add_term({1, 0, 0, 0, 0, 0}, 1);  // wrong root class
    EXPECT_NE(character_defect(bad).find("root class"), std::string::npos);

    bad = c;
    bad.poly.add_term({2, 0, 0, 0, 0, 2}, 1);  // above the weight
    EXPECT_NE(character_defect(bad), "");
}

TEST(Characters, MethodNames)
{
    for (Method m : {Method::recursion, Method::annihilator, Method::golden})
        EXPECT_EQ(parse_method(to_string(m)), m);
    EXPECT_THROW(parse_method("freudenthal"), ParseError);
}

TEST(Characters, EngineMemoises)
{
    CharacterEngine engine;
    auto a = engine.character({0, 2, 0, 0, 0, 0});
    EXPECT_EQ(engine.computations(), 1u);
    auto b = engine.character({0, 2, 0, 0, 0, 0});
    EXPECT_EQ(engine.computations(), 1u);
    EXPECT_EQ(a.get(), b.get());
    EXPECT_EQ(engine.character(Weight{})->poly, Polynomial(1));
    EXPECT_THROW(CharacterEngine(nullptr, Method::golden), std::invalid_argument);
}

TEST(Characters, EngineAnnihilator)
{
    CharacterEngine engine(nullptr, Method::annihilator);
    auto c = engine.character({1, 0, 1, 0, 0, 0});
    EXPECT_EQ(c->method, Method::annihilator);
    EXPECT_EQ(c->poly, P("z1*z3 - z1*z6 - z4 + 1"));
}

TEST(Characters, JsonRoundTrip)
{
    Character c = character_recursion({0, 0, 0, 2, 0, 0});
    std::string j = character_to_json(c);
    Character back = character_from_json(j);
    EXPECT_EQ(back.weight, c.weight);
    EXPECT_EQ(back.poly, c.poly);
    EXPECT_EQ(back.method, c.method);
    EXPECT_EQ(character_to_json(back), j);
    EXPECT_EQ(character_to_json(character_recursion(fundamental_weight(1))),
              R"({"weight":[1,0,0,0,0,0],"terms":[{"exp":[1,0,0,0,0,0],"coef":"1"}],"method":"recursion","version":1})");
    EXPECT_THROW(character_from_json(R"({"weight":[1,0,0,0,0,0],"terms":[],"method":"recursion","version":2})"),
                 ParseError);
    EXPECT_THROW(character_from_json(
                     R"({"weight":[1,0,0,0,0,0],"terms":[{"exp":[1,0,0,0,0,0],"coef":"1/2"}],"method":"recursion","version":1})"),
                 ParseError);
    EXPECT_THROW(character_from_json(R"({"weight":[1,0,0,0,0,0],"terms":[]})"), ParseError);
}
