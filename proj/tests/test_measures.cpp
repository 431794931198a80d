#include <doctest.h>

#include "oracles.hpp"

#include "shapeassoc/error.hpp"
#include "shapeassoc/measures.hpp"

#include <cmath>

using namespace shapeassoc;

namespace {

using V = std::vector<double>;

const V x123{1, 2, 3};
const V x321{3, 2, 1};
const V x132{1, 3, 2};

std::vector<double> neg(std::vector<double> v) {
    for (double& e : v) e = -e;
    return v;
}

std::vector<Measure> sam_measures() {
    std::vector<Measure> out = {Measure{assoc::Pearson{}}, Measure{assoc::CosineStandardized{preset::f3()}},
                                Measure{assoc::GmdrCorrelation{0, 2, false}}};
    for (const CentralEstimateSpec& e : std::vector<CentralEstimateSpec>{est::Midrange{}, est::Median{}, est::Projection{2}}) {
        const DissimilaritySpec d{2.0, normalized(e)};
        out.emplace_back(assoc::Thm1FromD{d, xform::RationalDecay{1.0}});
        out.emplace_back(assoc::Prop1FromD{d, xform::PowerHalf{2.0}});
        out.emplace_back(assoc::Thm1FromD{d, xform::OneMinusW{xform::PowerHalf{2.0}, 2.0}});
    }
    out.emplace_back(assoc::Thm1FromD{{1.0, preset::f1()}, xform::ExpDecay{}});
    out.emplace_back(assoc::Thm1FromS{SimilaritySpec{{2.0, preset::f3()}, xform::RationalDecay{1.0}}});
    out.emplace_back(assoc::Cor1FromS{SimilaritySpec{{2.0, preset::f3()}, xform::OneMinusW{xform::PowerHalf{2.0}, 2.0}}});
    return out;
}

}  // namespace

TEST_CASE("dissimilarity examples") {
    CHECK(dissimilarity(DissimilaritySpec{2.0, preset::f1()}, x123, x321) == doctest::Approx(std::sqrt(8.0)).epsilon(1e-15));
    CHECK(dissimilarity(DissimilaritySpec{2.0, preset::f1()}, x123, V{6, 7, 8}) == 0.0);
    CHECK(dissimilarity(DissimilaritySpec{1.0, preset::f1()}, x123, x321) == 4.0);
    CHECK_THROWS_AS((void)dissimilarity(DissimilaritySpec{}, x123, V{1, 2}), ShapeError);
    CHECK_THROWS_AS((void)dissimilarity(DissimilaritySpec{}, x123, V{2, 2, 2}), ConstantSeriesError);
    CHECK_THROWS_AS(validate(DissimilaritySpec{0.5, preset::f1()}), SpecError);
}

TEST_CASE("transform examples") {
    CHECK(similarity_from_dissimilarity(xform::RationalDecay{1.0}, 0.0) == 1.0);
    CHECK(similarity_from_dissimilarity(xform::RationalDecay{1.0}, 1.0) == 0.5);
    CHECK(similarity_from_dissimilarity(xform::ExpDecay{}, std::log(2.0)) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(similarity_from_dissimilarity(xform::OneMinusW{xform::PowerHalf{2.0}, 2.0}, 1.0) == 0.75);
    CHECK_THROWS_AS((void)similarity_from_dissimilarity(xform::OneMinusW{xform::PowerHalf{2.0}, 2.0}, 2.5), DomainError);
    CHECK_THROWS_AS((void)similarity_from_dissimilarity(xform::RationalDecay{1.0}, -1.0), DomainError);
    CHECK(dissimilarity_from_similarity(xform::LinearComplement{2.0}, 1.0) == 0.0);
    CHECK(dissimilarity_from_similarity(xform::LinearComplement{2.0}, 0.0) == 2.0);
    CHECK(dissimilarity_from_similarity(xform::OneMinus{}, 0.25) == 0.75);
    CHECK_THROWS_AS((void)dissimilarity_from_similarity(xform::OneMinus{}, 1.5), DomainError);
    CHECK(apply(xform::PowerHalf{2.0}, 1.0) == 0.25);
    CHECK_THROWS_AS(validate(UTransform{xform::RationalDecay{0.0}}), SpecError);
    CHECK_THROWS_AS(validate(UTransform{xform::OneMinusW{xform::PowerHalf{1.0}, 3.0}}), SpecError);
}

TEST_CASE("association examples") {
    const Measure pearson{assoc::Pearson{}};
    CHECK(pearson(x123, x132) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(pearson(x123, x321) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(oracle::pearson(x123, x132) == doctest::Approx(0.5).epsilon(1e-15));
    const Measure thm1{assoc::Thm1FromD{{2.0, preset::f1()}, xform::RationalDecay{1.0}}};
    CHECK(thm1(x123, x321) == -1.0);
    const Measure prop1{assoc::Prop1FromD{{2.0, preset::f3()}, xform::PowerHalf{2.0}}};
    CHECK(prop1(x123, x132) == doctest::Approx(0.5).epsilon(1e-14));
    const Measure cosine{assoc::CosineStandardized{preset::f3()}};
    CHECK(cosine(x132, x132) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS((void)pearson(x123, V{2, 2, 2}), ConstantSeriesError);
}

TEST_CASE("abs similarity and matrices") {
    const TimeSeries a("a", x123), b("b", x321), c("c", x132);
    CHECK(abs_similarity(MeasureSpec{assoc::Pearson{}}, a, b) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(abs_similarity(MeasureSpec{assoc::Pearson{}}, a, c) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(abs_similarity(MeasureSpec{assoc::Pearson{}}, c, c) == doctest::Approx(1.0).epsilon(1e-15));

    const Measure pearson{assoc::Pearson{}};
    const SeriesSet set({TimeSeries("x", x123), TimeSeries("x5", V{6, 7, 8}), TimeSeries("nx", neg(x123))});
    const auto m = association_matrix(pearson, set);
    const V expected{1, 1, -1, 1, 1, -1, -1, -1, 1};
    for (std::size_t i = 0; i < 9; ++i) CHECK(m.values()[i] == doctest::Approx(expected[i]).epsilon(1e-15));
    CHECK(m.ids() == std::vector<std::string>{"x", "x5", "nx"});

    const auto single = association_matrix(pearson, SeriesSet({TimeSeries("x", x123)}));
    CHECK(single.values() == V{1.0});
    const auto two = association_matrix(pearson, SeriesSet({TimeSeries("p", x123), TimeSeries("q", x132)}));
    CHECK(two(0, 1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(two(1, 0) == two(0, 1));
    CHECK(two(0, 0) == 1.0);

    try {
        (void)association_matrix(pearson, SeriesSet({TimeSeries("p", x123), TimeSeries("k", V{2, 2, 2})}));
        FAIL("expected ConstantSeriesError");
    } catch (const ConstantSeriesError& e) {
        CHECK(std::string(e.what()).find("k") != std::string::npos);
    }
}

TEST_CASE("construction checks") {
    CHECK_THROWS_AS(Measure(assoc::Thm1FromD{{2.0, preset::f2()}, xform::RationalDecay{1.0}}), SpecError);
    CHECK_THROWS_AS(Measure(assoc::Prop1FromD{{2.0, preset::f1()}, xform::PowerHalf{2.0}}), SpecError);
    CHECK_THROWS_AS(Measure(assoc::Prop1FromD{{1.0, preset::f3()}, xform::PowerHalf{2.0}}), SpecError);
    CHECK_THROWS_AS(Measure(assoc::GmdrCorrelation{2, 2, false}), SpecError);
    CHECK_NOTHROW((void)Measure::unchecked(assoc::Thm1FromD{{2.0, preset::f2()}, xform::RationalDecay{1.0}}));
    CHECK_FALSE(Measure::unchecked(assoc::Thm1FromD{{2.0, preset::f2()}, xform::RationalDecay{1.0}}).verified());
    CHECK_FALSE(Measure(assoc::Thm2FromS{SimilaritySpec{{2.0, preset::f2()}, xform::RationalDecay{1.0}}}).verified());
    CHECK(Measure(assoc::Pearson{}).verified());
    CHECK(Measure(assoc::Pearson{}).name() == "pearson");
    CHECK(Measure(assoc::GmdrCorrelation{0, 2, false}).name() == "gmdr_correlation[0,2]");
    CHECK(Measure(assoc::Pearson{}).scale_invariant());
    CHECK_FALSE(Measure(assoc::Thm1FromD{{2.0, preset::f1()}, xform::RationalDecay{1.0}}).scale_invariant());
    CHECK(Measure(assoc::GmdrCorrelation{1, 3, false}).min_length() == 7);
}

TEST_CASE("shape association properties") {
    std::mt19937_64 g(31);
    std::uniform_real_distribution<double> shift(-100.0, 100.0);
    const double factors[] = {-3.0, -1.0, 0.5, 2.0};
    for (const auto& m : sam_measures()) {
        CAPTURE(m.name());
        for (int t = 0; t < 60; ++t) {
            const std::size_t n = 5 + t % 25;
            const auto x = oracle::uniform_series(g, n);
            const auto y = oracle::uniform_series(g, n);
            const double a = m(x, y);
            CHECK(std::abs(a - m(y, x)) <= 1e-12);
            CHECK(a >= -1.0 - 1e-12);
            CHECK(a <= 1.0 + 1e-12);
            CHECK(std::abs(m(x, x) - 1.0) <= 1e-12);
            CHECK(std::abs(m(neg(x), x) + 1.0) <= 1e-12);
            CHECK(std::abs(m(neg(x), y) + a) <= 1e-12);
            const double q = shift(g);
            auto xq = x;
            for (double& v : xq) v += q;
            CHECK(std::abs(m(xq, y) - a) <= 1e-10);
            if (m.scale_invariant()) {
                const double p1 = factors[t % 4];
                const double p2 = factors[(t / 4) % 4];
                auto xa = x, ya = y;
                for (double& v : xa) v = p1 * v + q;
                for (double& v : ya) v = p2 * v - q;
                CHECK(std::abs(m(xa, ya) - (p1 > 0 ? 1 : -1) * (p2 > 0 ? 1 : -1) * a) <= 1e-10);
            }
        }
    }
}

TEST_CASE("sign permutation of D for odd forms") {
    std::mt19937_64 g(32);
    for (const auto& f : {preset::f1(), preset::f3(), normalized(est::Median{}), preset::f4(1.0, 0, 2)}) {
        const DissimilaritySpec d{2.0, f};
        for (int t = 0; t < 50; ++t) {
            const auto x = oracle::uniform_series(g, 12);
            const auto y = oracle::uniform_series(g, 12);
            CHECK(std::abs(dissimilarity(d, neg(x), y) - dissimilarity(d, x, neg(y))) <= 1e-12);
        }
    }
}

TEST_CASE("Prop1 over F3 is Pearson; over 2-normal odd forms it is the cosine") {
    std::mt19937_64 g(33);
    const Measure pearson_like{assoc::Prop1FromD{{2.0, preset::f3()}, xform::PowerHalf{2.0}}};
    for (int t = 0; t < 100; ++t) {
        const auto x = oracle::uniform_series(g, 30);
        const auto y = oracle::uniform_series(g, 30);
        CHECK(std::abs(pearson_like(x, y) - oracle::pearson(x, y)) <= 1e-9);
    }
    for (const auto& f : {preset::f4(2.0, 0, 2), normalized(est::Median{}), normalized(est::Midrange{}), preset::f3()}) {
        const Measure prop1{assoc::Prop1FromD{{2.0, f}, xform::PowerHalf{2.0}}};
        const Measure cosine{assoc::CosineStandardized{f}};
        for (int t = 0; t < 50; ++t) {
            const auto x = oracle::uniform_series(g, 30);
            const auto y = oracle::uniform_series(g, 30);
            CHECK(std::abs(prop1(x, y) - cosine(x, y)) <= 1e-9);
        }
    }
}

TEST_CASE("r-normal forms bound D by 2") {
    std::mt19937_64 g(34);
    for (double r : {1.0, 2.0, 3.0}) {
        const DissimilaritySpec d{r, normalized(est::Median{}, r)};
        for (int t = 0; t < 100; ++t) {
            const auto x = oracle::uniform_series(g, 9);
            const auto y = oracle::uniform_series(g, 9);
            CHECK(dissimilarity(d, x, y) <= 2.0 + 1e-12);
        }
    }
}

TEST_CASE("similarity order does not depend on U") {
    std::mt19937_64 g(35);
    const DissimilaritySpec d{2.0, preset::f3()};
    const std::vector<UTransform> us = {xform::RationalDecay{1.0}, xform::RationalDecay{5.0}, xform::ExpDecay{},
                                        xform::OneMinusW{xform::PowerHalf{1.5}, 2.0}};
    std::vector<std::pair<V, V>> pairs;
    for (int t = 0; t < 40; ++t) pairs.emplace_back(oracle::uniform_series(g, 10), oracle::uniform_series(g, 10));
    std::vector<std::vector<double>> sims;
    for (const auto& u : us) {
        std::vector<double> s;
        for (const auto& [x, y] : pairs) s.push_back(similarity(SimilaritySpec{d, u}, x, y));
        sims.push_back(s);
    }
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = 0; b < pairs.size(); ++b)
            for (std::size_t k = 1; k < us.size(); ++k) CHECK((sims[0][a] < sims[0][b]) == (sims[k][a] < sims[k][b]));
}

TEST_CASE("constant series similarity with a Center-only form") {
    const SimilaritySpec s{{2.0, preset::f1()}, xform::RationalDecay{1.0}};
    CHECK(similarity(s, V{3, 3, 3, 3}, V{-7, -7, -7, -7}) == 1.0);
}

TEST_CASE("abs similarity is reflection invariant") {
    std::mt19937_64 g(36);
    const Measure m{assoc::Thm1FromD{{2.0, normalized(est::Median{})}, xform::RationalDecay{1.0}}};
    for (int t = 0; t < 50; ++t) {
        const TimeSeries x(oracle::uniform_series(g, 11));
        const TimeSeries y(oracle::uniform_series(g, 11));
        CHECK(std::abs(abs_similarity(m, reflect(x), y) - abs_similarity(m, x, y)) <= 1e-12);
    }
}

TEST_CASE("Thm1 tie branch returns zero") {
    // F(x) orthogonal to F(y) under F1 gives D(x,y) = D(x,-y).
    const Measure m{assoc::Thm1FromD{{2.0, preset::f1()}, xform::RationalDecay{1.0}}};
    CHECK(m(V{1, -1, 0, 0}, V{0, 0, 1, -1}) == 0.0);
}

TEST_CASE("printed GMDR denominator is asymmetric") {
    const Measure printed = Measure::unchecked(assoc::GmdrCorrelation{0, 1, true});
    const V a{0, 1, 5, 2, 9};
    const V b{3, 2, 7, 1, 4};
    CHECK(std::abs(printed(a, b) - printed(b, a)) > 1e-6);
    CHECK_FALSE(printed.scale_invariant());
}
