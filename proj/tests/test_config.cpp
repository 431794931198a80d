#include <doctest.h>

#include "shapeassoc/benchmark.hpp"
#include "shapeassoc/config.hpp"
#include "shapeassoc/error.hpp"

using namespace shapeassoc;

TEST_CASE("estimate round trips") {
    const std::vector<CentralEstimateSpec> es = {
        est::Min{},           est::Max{},        est::Midrange{},
        est::Projection{3},   est::OrderStatistic{2}, est::Median{},
        est::TruncatedMean{2}, est::GeneralizedMidrange{1, 3}, est::ArithmeticMean{},
        est::WeightedMean{{0.25, 0.75}}, est::OrderedWeightedMean{{0.5, 0.5}}};
    for (const auto& e : es) CHECK(central_from_json(to_json(e)) == e);
    CHECK(central_from_json(Json("MDR")) == CentralEstimateSpec{est::Midrange{}});
    CHECK(central_from_json(Json("GMDR_0,2")) == CentralEstimateSpec{est::GeneralizedMidrange{0, 2}});
    const ScaleEstimateSpec dev = est::MinkowskiDeviation{3.0, est::Median{}};
    CHECK(scale_from_json(to_json(dev)) == dev);
}

TEST_CASE("standardization and measure round trips") {
    for (const auto& f : {preset::f1(), preset::f2(), preset::f3(), preset::f4(3.0, 1, 3), normalized(est::Median{})})
        CHECK(standardization_from_json(to_json(f)) == f);
    CHECK(standardization_from_json(Json("F3")) == preset::f3());
    CHECK(standardization_from_json(parse_json(R"({"preset":"F4","r":2,"k":0,"m":2})")) == preset::f4(2.0, 0, 2));

    const std::vector<MeasureSpec> ms = {
        assoc::Thm1FromD{{2.0, preset::f3()}, xform::ExpDecay{}},
        assoc::Prop1FromD{{2.0, normalized(est::Median{})}, xform::PowerHalf{2.0}},
        assoc::Thm1FromS{{{1.0, preset::f1()}, xform::RationalDecay{2.0}}},
        assoc::Thm2FromS{{{2.0, preset::f2()}, xform::OneMinusW{xform::PowerHalf{1.0}, 2.0}}},
        assoc::Cor1FromS{{{2.0, preset::f3()}, xform::RationalDecay{1.0}}},
        assoc::Pearson{},
        assoc::CosineStandardized{preset::f3()},
        assoc::GmdrCorrelation{1, 2, true}};
    for (const auto& m : ms) CHECK(measure_spec_from_json(to_json(m)) == m);
    for (const VTransform& v : {VTransform{xform::LinearComplement{2.0}}, VTransform{xform::OneMinus{}}})
        CHECK(v_from_json(to_json(v)) == v);
}

TEST_CASE("measure documents") {
    CHECK(measure_from_json(Json("pearson")).spec() == MeasureSpec{assoc::Pearson{}});
    CHECK(measure_from_json(Json("thm1/MDR")).spec() == grid_measure("thm1/MDR")->spec);
    CHECK_THROWS_AS((void)measure_from_json(Json("thm7/MDR")), SpecError);
    const auto strict = parse_json(R"({"type":"thm1_from_d","dissimilarity":{"r":2,"standardization":"F2"},"u":{"type":"exp"}})");
    CHECK_THROWS_AS((void)measure_from_json(strict), SpecError);
    auto loose = strict;
    loose["unchecked"] = true;
    CHECK_FALSE(measure_from_json(loose).verified());
    const auto bm = benchmark_measure_from_json(parse_json(R"({"label":"p","measure":"pearson","expect":"not_all"})"));
    CHECK(bm.label == "p");
    CHECK(bm.expect == Expectation::NotAll);
}

TEST_CASE("unknown keys and types are rejected") {
    CHECK_THROWS_AS((void)central_from_json(parse_json(R"({"type":"median","k":2})")), SpecError);
    CHECK_THROWS_AS((void)central_from_json(parse_json(R"({"type":"mode"})")), SpecError);
    CHECK_THROWS_AS((void)u_from_json(parse_json(R"({"type":"rational","kk":1})")), SpecError);
    CHECK_THROWS_AS((void)measure_spec_from_json(parse_json(R"({"type":"pearson","extra":1})")), SpecError);
    CHECK_THROWS_AS((void)benchmark_from_json(parse_json(R"({"dataset":{"synthetic":"reality_check"},"measures":"grid","x":1})")), SpecError);
    CHECK_THROWS_AS((void)parse_json("{not json"), SpecError);
}

TEST_CASE("benchmark documents") {
    const auto spec = benchmark_from_json(parse_json(R"({"dataset":{"synthetic":"reality_check","seed":3},"measures":"grid"})"));
    CHECK(spec.measures.size() == 12);
    REQUIRE(std::holds_alternative<SyntheticParams>(spec.dataset));
    CHECK(std::get<SyntheticParams>(spec.dataset) == reality_check_layout(3));

    const auto file = benchmark_from_json(
        parse_json(R"({"dataset":{"path":"d.csv","has_ids":true},"measures":["pearson","prop1/MED"],"true_clusters":[["a","b"]]})"));
    REQUIRE(std::holds_alternative<DatasetFile>(file.dataset));
    CHECK(std::get<DatasetFile>(file.dataset).has_ids);
    CHECK(file.measures.size() == 2);
    CHECK(file.true_clusters == std::vector<std::vector<std::string>>{{"a", "b"}});
}

TEST_CASE("reports serialize") {
    const PropertyId ids[] = {PropertyId::Symmetry};
    const auto r = verify(Measure(assoc::Pearson{}), ids, VerifyOptions{});
    const auto j = to_json(r);
    CHECK(j.contains("results"));
    CHECK(j.dump().find(std::string(to_string(PropertyId::Symmetry))) != std::string::npos);
}
