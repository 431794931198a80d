#include "shapeassoc/config.hpp"

#include "shapeassoc/error.hpp"
#include "overloaded.hpp"

#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>

namespace shapeassoc {

using detail::overloaded;

namespace {

void check_keys(const Json& j, std::initializer_list<std::string_view> allowed, const std::string& what) {
    if (!j.is_object()) throw SpecError(what + ": expected an object");
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (auto a : allowed) ok = ok || key == a;
        if (!ok) throw SpecError(what + ": unknown key '" + key + "'");
    }
}

const Json& require(const Json& j, const char* key, const std::string& what) {
    if (!j.contains(key)) throw SpecError(what + ": missing key '" + key + "'");
    return j.at(key);
}

double number(const Json& j, const char* key, const std::string& what, double fallback) {
    if (!j.contains(key)) return fallback;
    const Json& v = j.at(key);
    if (!v.is_number()) throw SpecError(what + "." + key + ": expected a number");
    return v.get<double>();
}

std::size_t count(const Json& v, const std::string& what) {
    if (v.is_number_unsigned()) return v.get<std::size_t>();
    if (v.is_number_integer() && v.get<long long>() >= 0) return static_cast<std::size_t>(v.get<long long>());
    throw SpecError(what + ": expected a nonnegative integer");
}

std::size_t count(const Json& j, const char* key, const std::string& what, std::size_t fallback) {
    if (!j.contains(key)) return fallback;
    return count(j.at(key), what + "." + key);
}

bool flag(const Json& j, const char* key, const std::string& what, bool fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_boolean()) throw SpecError(what + "." + key + ": expected a boolean");
    return j.at(key).get<bool>();
}

std::string text(const Json& j, const char* key, const std::string& what) {
    const Json& v = require(j, key, what);
    if (!v.is_string()) throw SpecError(what + "." + key + ": expected a string");
    return v.get<std::string>();
}

std::vector<double> numbers(const Json& j, const char* key, const std::string& what) {
    const Json& v = require(j, key, what);
    if (!v.is_array()) throw SpecError(what + "." + key + ": expected an array");
    std::vector<double> out;
    for (const auto& x : v) {
        if (!x.is_number()) throw SpecError(what + "." + key + ": expected numbers");
        out.push_back(x.get<double>());
    }
    return out;
}

std::vector<std::string> strings(const Json& v, const std::string& what) {
    if (!v.is_array()) throw SpecError(what + ": expected an array of strings");
    std::vector<std::string> out;
    for (const auto& x : v) {
        if (!x.is_string()) throw SpecError(what + ": expected an array of strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

Json finite_or_string(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

std::uint64_t seed_of(const Json& v, const std::string& what) {
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<long long>() >= 0) return static_cast<std::uint64_t>(v.get<long long>());
    throw SpecError(what + ": expected a nonnegative integer seed");
}

CentralEstimateSpec central_from_label(const std::string& s) {
    static const std::regex one(R"((PR|OS|TM)_(\d+))");
    static const std::regex two(R"(GMDR_(\d+),(\d+))");
    if (s == "MIN") return est::Min{};
    if (s == "MAX") return est::Max{};
    if (s == "MDR") return est::Midrange{};
    if (s == "MED") return est::Median{};
    if (s == "AM") return est::ArithmeticMean{};
    std::smatch m;
    if (std::regex_match(s, m, one)) {
        const std::size_t v = std::stoul(m[2]);
        if (m[1] == "PR") return est::Projection{v};
        if (m[1] == "OS") return est::OrderStatistic{v};
        return est::TruncatedMean{v};
    }
    if (std::regex_match(s, m, two)) return est::GeneralizedMidrange{std::stoul(m[1]), std::stoul(m[2])};
    throw SpecError("unknown estimate '" + s + "'");
}

}  // namespace

// ---------------------------------------------------------------- estimates

Json to_json(const CentralEstimateSpec& e) {
    return std::visit(overloaded{
                          [](const est::Min&) { return Json{{"type", "min"}}; },
                          [](const est::Max&) { return Json{{"type", "max"}}; },
                          [](const est::Midrange&) { return Json{{"type", "midrange"}}; },
                          [](const est::Projection& p) { return Json{{"type", "projection"}, {"k", p.k}}; },
                          [](const est::OrderStatistic& p) { return Json{{"type", "order_statistic"}, {"k", p.k}}; },
                          [](const est::Median&) { return Json{{"type", "median"}}; },
                          [](const est::TruncatedMean& t) { return Json{{"type", "truncated_mean"}, {"m", t.m}}; },
                          [](const est::GeneralizedMidrange& g) {
                              return Json{{"type", "gmdr"}, {"k", g.k}, {"m", g.m}};
                          },
                          [](const est::ArithmeticMean&) { return Json{{"type", "mean"}}; },
                          [](const est::WeightedMean& w) { return Json{{"type", "weighted_mean"}, {"weights", w.weights}}; },
                          [](const est::OrderedWeightedMean& w) { return Json{{"type", "owa"}, {"weights", w.weights}}; },
                      },
                      e);
}

CentralEstimateSpec central_from_json(const Json& j) {
    const std::string what = "estimate";
    if (j.is_string()) return central_from_label(j.get<std::string>());
    const std::string type = text(j, "type", what);
    CentralEstimateSpec out;
    if (type == "min" || type == "max" || type == "midrange" || type == "median" || type == "mean") {
        check_keys(j, {"type"}, what);
        if (type == "min") out = est::Min{};
        if (type == "max") out = est::Max{};
        if (type == "midrange") out = est::Midrange{};
        if (type == "median") out = est::Median{};
        if (type == "mean") out = est::ArithmeticMean{};
    } else if (type == "projection" || type == "order_statistic") {
        check_keys(j, {"type", "k"}, what);
        const std::size_t k = count(require(j, "k", what), what + ".k");
        if (type == "projection") out = est::Projection{k};
        else out = est::OrderStatistic{k};
    } else if (type == "truncated_mean") {
        check_keys(j, {"type", "m"}, what);
        out = est::TruncatedMean{count(require(j, "m", what), what + ".m")};
    } else if (type == "gmdr") {
        check_keys(j, {"type", "k", "m"}, what);
        out = est::GeneralizedMidrange{count(j, "k", what, 0), count(j, "m", what, 1)};
    } else if (type == "weighted_mean" || type == "owa") {
        check_keys(j, {"type", "weights"}, what);
        auto w = numbers(j, "weights", what);
        if (type == "weighted_mean") out = est::WeightedMean{std::move(w)};
        else out = est::OrderedWeightedMean{std::move(w)};
    } else {
        throw SpecError("estimate: unknown type '" + type + "'");
    }
    validate(out);
    return out;
}

Json to_json(const ScaleEstimateSpec& s) {
    return std::visit(overloaded{
                          [](const est::Range&) { return Json{{"type", "range"}}; },
                          [](const est::MinkowskiDeviation& d) {
                              return Json{{"type", "deviation"}, {"r", d.r}, {"center", to_json(d.center)}};
                          },
                      },
                      s);
}

ScaleEstimateSpec scale_from_json(const Json& j) {
    const std::string what = "scale";
    if (j.is_string() && j.get<std::string>() == "R") return est::Range{};
    const std::string type = text(j, "type", what);
    ScaleEstimateSpec out;
    if (type == "range") {
        check_keys(j, {"type"}, what);
        out = est::Range{};
    } else if (type == "deviation") {
        check_keys(j, {"type", "r", "center"}, what);
        est::MinkowskiDeviation d;
        d.r = number(j, "r", what, 2.0);
        if (j.contains("center")) d.center = central_from_json(j.at("center"));
        out = d;
    } else {
        throw SpecError("scale: unknown type '" + type + "'");
    }
    validate(out);
    return out;
}

// ---------------------------------------------------------------- standardizations

Json to_json(const StandardizationSpec& f) {
    return std::visit(overloaded{
                          [](const std_form::Center& c) { return Json{{"center", to_json(c.center)}}; },
                          [](const std_form::CenterScale& c) {
                              return Json{{"center", to_json(c.center)}, {"scale", to_json(c.scale)}};
                          },
                      },
                      f);
}

StandardizationSpec standardization_from_json(const Json& j) {
    const std::string what = "standardization";
    if (j.is_string()) return preset::by_name(j.get<std::string>());
    StandardizationSpec out;
    if (j.contains("preset")) {
        const std::string name = text(j, "preset", what);
        if (name == "F4") {
            check_keys(j, {"preset", "r", "k", "m"}, what);
            out = preset::f4(number(j, "r", what, 2.0), count(j, "k", what, 0), count(j, "m", what, 2));
        } else {
            check_keys(j, {"preset"}, what);
            out = preset::by_name(name);
        }
    } else if (j.contains("normalized")) {
        check_keys(j, {"normalized", "r"}, what);
        out = normalized(central_from_json(j.at("normalized")), number(j, "r", what, 2.0));
    } else {
        check_keys(j, {"center", "scale"}, what);
        const auto center = central_from_json(require(j, "center", what));
        if (j.contains("scale")) out = std_form::CenterScale{center, scale_from_json(j.at("scale"))};
        else out = std_form::Center{center};
    }
    validate(out);
    return out;
}

// ---------------------------------------------------------------- dissimilarities, transforms

Json to_json(const DissimilaritySpec& d) { return Json{{"r", d.r}, {"standardization", to_json(d.standardization)}}; }

DissimilaritySpec dissimilarity_from_json(const Json& j) {
    const std::string what = "dissimilarity";
    check_keys(j, {"r", "standardization"}, what);
    DissimilaritySpec d;
    d.r = number(j, "r", what, 2.0);
    if (j.contains("standardization")) d.standardization = standardization_from_json(j.at("standardization"));
    validate(d);
    return d;
}

Json to_json(const UTransform& u) {
    return std::visit(overloaded{
                          [](const xform::RationalDecay& r) { return Json{{"type", "rational"}, {"k", r.k}}; },
                          [](const xform::ExpDecay&) { return Json{{"type", "exp"}}; },
                          [](const xform::OneMinusW& o) { return Json{{"type", "one_minus_w"}, {"p", o.w.p}, {"h", o.h}}; },
                      },
                      u);
}

UTransform u_from_json(const Json& j) {
    const std::string what = "u";
    const std::string type = text(j, "type", what);
    UTransform out;
    if (type == "rational") {
        check_keys(j, {"type", "k"}, what);
        out = xform::RationalDecay{number(j, "k", what, 1.0)};
    } else if (type == "exp") {
        check_keys(j, {"type"}, what);
        out = xform::ExpDecay{};
    } else if (type == "one_minus_w") {
        check_keys(j, {"type", "p", "h"}, what);
        out = xform::OneMinusW{xform::PowerHalf{number(j, "p", what, 1.0)}, number(j, "h", what, 2.0)};
    } else {
        throw SpecError("u: unknown type '" + type + "'");
    }
    validate(out);
    return out;
}

Json to_json(const VTransform& v) {
    return std::visit(overloaded{
                          [](const xform::LinearComplement& l) { return Json{{"type", "linear"}, {"k", l.k}}; },
                          [](const xform::OneMinus&) { return Json{{"type", "one_minus"}}; },
                      },
                      v);
}

VTransform v_from_json(const Json& j) {
    const std::string what = "v";
    const std::string type = text(j, "type", what);
    VTransform out;
    if (type == "linear") {
        check_keys(j, {"type", "k"}, what);
        out = xform::LinearComplement{number(j, "k", what, 1.0)};
    } else if (type == "one_minus") {
        check_keys(j, {"type"}, what);
        out = xform::OneMinus{};
    } else {
        throw SpecError("v: unknown type '" + type + "'");
    }
    validate(out);
    return out;
}

Json to_json(const WTransform& w) { return Json{{"type", "power_half"}, {"p", w.p}}; }

WTransform w_from_json(const Json& j) {
    const std::string what = "w";
    check_keys(j, {"type", "p"}, what);
    if (j.contains("type") && text(j, "type", what) != "power_half") throw SpecError("w: unknown type");
    WTransform w{number(j, "p", what, 1.0)};
    validate(w);
    return w;
}

Json to_json(const SimilaritySpec& s) {
    return Json{{"dissimilarity", to_json(s.dissimilarity)}, {"u", to_json(s.u)}};
}

SimilaritySpec similarity_from_json(const Json& j) {
    const std::string what = "similarity";
    check_keys(j, {"dissimilarity", "u"}, what);
    SimilaritySpec s;
    if (j.contains("dissimilarity")) s.dissimilarity = dissimilarity_from_json(j.at("dissimilarity"));
    if (j.contains("u")) s.u = u_from_json(j.at("u"));
    return s;
}

// ---------------------------------------------------------------- measures

Json to_json(const MeasureSpec& m) {
    return std::visit(overloaded{
                          [](const assoc::Thm1FromD& a) {
                              return Json{{"type", "thm1_from_d"}, {"dissimilarity", to_json(a.dissimilarity)}, {"u", to_json(a.u)}};
                          },
                          [](const assoc::Prop1FromD& a) {
                              return Json{{"type", "prop1_from_d"}, {"dissimilarity", to_json(a.dissimilarity)}, {"w", to_json(a.w)}};
                          },
                          [](const assoc::Thm1FromS& a) { return Json{{"type", "thm1_from_s"}, {"similarity", to_json(a.similarity)}}; },
                          [](const assoc::Thm2FromS& a) { return Json{{"type", "thm2_from_s"}, {"similarity", to_json(a.similarity)}}; },
                          [](const assoc::Cor1FromS& a) { return Json{{"type", "cor1_from_s"}, {"similarity", to_json(a.similarity)}}; },
                          [](const assoc::Pearson&) { return Json{{"type", "pearson"}}; },
                          [](const assoc::CosineStandardized& a) {
                              return Json{{"type", "cosine_standardized"}, {"standardization", to_json(a.standardization)}};
                          },
                          [](const assoc::GmdrCorrelation& a) {
                              return Json{{"type", "gmdr_correlation"}, {"k", a.k}, {"m", a.m}, {"printed_denominator", a.printed_denominator}};
                          },
                      },
                      m);
}

MeasureSpec measure_spec_from_json(const Json& j) {
    const std::string what = "measure";
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "pearson") return assoc::Pearson{};
        if (auto g = grid_measure(s)) return g->spec;
        throw SpecError("unknown measure '" + s + "'");
    }
    const std::string type = text(j, "type", what);
    if (type == "thm1_from_d") {
        check_keys(j, {"type", "dissimilarity", "u", "unchecked"}, what);
        assoc::Thm1FromD a;
        if (j.contains("dissimilarity")) a.dissimilarity = dissimilarity_from_json(j.at("dissimilarity"));
        if (j.contains("u")) a.u = u_from_json(j.at("u"));
        return a;
    }
    if (type == "prop1_from_d") {
        check_keys(j, {"type", "dissimilarity", "w", "unchecked"}, what);
        assoc::Prop1FromD a;
        if (j.contains("dissimilarity")) a.dissimilarity = dissimilarity_from_json(j.at("dissimilarity"));
        if (j.contains("w")) a.w = w_from_json(j.at("w"));
        return a;
    }
    if (type == "thm1_from_s" || type == "thm2_from_s" || type == "cor1_from_s") {
        check_keys(j, {"type", "similarity", "unchecked"}, what);
        SimilaritySpec s;
        if (j.contains("similarity")) s = similarity_from_json(j.at("similarity"));
        if (type == "thm1_from_s") return assoc::Thm1FromS{s};
        if (type == "thm2_from_s") return assoc::Thm2FromS{s};
        return assoc::Cor1FromS{s};
    }
    if (type == "pearson") {
        check_keys(j, {"type", "unchecked"}, what);
        return assoc::Pearson{};
    }
    if (type == "cosine_standardized") {
        check_keys(j, {"type", "standardization", "unchecked"}, what);
        assoc::CosineStandardized a;
        if (j.contains("standardization")) a.standardization = standardization_from_json(j.at("standardization"));
        return a;
    }
    if (type == "gmdr_correlation") {
        check_keys(j, {"type", "k", "m", "printed_denominator", "unchecked"}, what);
        return assoc::GmdrCorrelation{count(j, "k", what, 0), count(j, "m", what, 1),
                                      flag(j, "printed_denominator", what, false)};
    }
    throw SpecError("measure: unknown type '" + type + "'");
}

Measure measure_from_json(const Json& j) {
    auto spec = measure_spec_from_json(j);
    const bool unchecked = j.is_object() && flag(j, "unchecked", "measure", false);
    return unchecked ? Measure::unchecked(std::move(spec)) : Measure(std::move(spec));
}

// ---------------------------------------------------------------- benchmark

namespace {

Expectation expectation_from(const Json& v) {
    if (v == "all") return Expectation::All;
    if (v == "not_all") return Expectation::NotAll;
    throw SpecError("benchmark measure.expect: expected \"all\" or \"not_all\"");
}

const char* to_string(Expectation e) { return e == Expectation::All ? "all" : "not_all"; }

DatasetFile dataset_file_from_json(const Json& j) {
    const std::string what = "dataset";
    check_keys(j, {"path", "delimiter", "orientation", "has_ids", "drop_first_column"}, what);
    DatasetFile f;
    f.path = text(j, "path", what);
    if (j.contains("delimiter")) {
        const auto d = text(j, "delimiter", what);
        if (d == "auto") f.delimiter = Delimiter::Auto;
        else if (d == "comma") f.delimiter = Delimiter::Comma;
        else if (d == "whitespace") f.delimiter = Delimiter::Whitespace;
        else if (d == "tab") f.delimiter = Delimiter::Tab;
        else throw SpecError("dataset.delimiter: unknown value '" + d + "'");
    }
    if (j.contains("orientation")) {
        const auto o = text(j, "orientation", what);
        if (o == "auto") f.orientation = Orientation::Auto;
        else if (o == "rows") f.orientation = Orientation::Rows;
        else if (o == "columns") f.orientation = Orientation::Columns;
        else throw SpecError("dataset.orientation: unknown value '" + o + "'");
    }
    f.has_ids = flag(j, "has_ids", what, false);
    f.drop_first_column = flag(j, "drop_first_column", what, false);
    return f;
}

SyntheticParams synthetic_from_json(const Json& j, const Json& outer) {
    const std::string what = "dataset.synthetic";
    SyntheticParams p;
    if (j.is_string()) {
        if (j != "reality_check") throw SpecError(what + ": expected \"reality_check\" or an object");
        check_keys(outer, {"synthetic", "seed", "noise_scale"}, "dataset");
        p = reality_check_layout(outer.contains("seed") ? seed_of(outer.at("seed"), "dataset.seed") : 0,
                         number(outer, "noise_scale", "dataset", 0.05));
        return p;
    }
    check_keys(outer, {"synthetic"}, "dataset");
    check_keys(j, {"clusters", "length", "noise_scale", "seed", "order"}, what);
    const Json& clusters = require(j, "clusters", what);
    if (!clusters.is_array()) throw SpecError(what + ".clusters: expected an array");
    for (const auto& c : clusters) {
        check_keys(c, {"size", "base_seed", "inverted", "ids"}, what + ".clusters[]");
        SyntheticCluster cl;
        cl.size = count(require(c, "size", what), what + ".size");
        if (c.contains("base_seed")) cl.base_seed = seed_of(c.at("base_seed"), what + ".base_seed");
        if (c.contains("inverted")) {
            if (!c.at("inverted").is_array()) throw SpecError(what + ".inverted: expected an array of booleans");
            for (const auto& b : c.at("inverted")) {
                if (!b.is_boolean()) throw SpecError(what + ".inverted: expected an array of booleans");
                cl.inverted.push_back(b.get<bool>());
            }
        }
        if (c.contains("ids")) cl.ids = strings(c.at("ids"), what + ".ids");
        p.clusters.push_back(std::move(cl));
    }
    p.length = count(j, "length", what, 365);
    p.noise_scale = number(j, "noise_scale", what, 0.05);
    if (j.contains("seed")) p.seed = seed_of(j.at("seed"), what + ".seed");
    if (j.contains("order")) p.order = strings(j.at("order"), what + ".order");
    return p;
}

}  // namespace

BenchmarkMeasure benchmark_measure_from_json(const Json& j) {
    BenchmarkMeasure bm;
    if (j.is_string()) {
        bm.label = j.get<std::string>();
        bm.spec = measure_spec_from_json(j);
        return bm;
    }
    check_keys(j, {"label", "measure", "expect"}, "benchmark measure");
    const Json& m = require(j, "measure", "benchmark measure");
    bm.spec = measure_spec_from_json(m);
    bm.unchecked = m.is_object() && flag(m, "unchecked", "measure", false);
    bm.label = j.contains("label") ? text(j, "label", "benchmark measure") : Measure::unchecked(bm.spec).name();
    if (j.contains("expect")) bm.expect = expectation_from(j.at("expect"));
    return bm;
}

BenchmarkSpec benchmark_from_json(const Json& j) {
    check_keys(j, {"dataset", "measures", "true_clusters"}, "benchmark");
    BenchmarkSpec b;
    const Json& d = require(j, "dataset", "benchmark");
    if (!d.is_object()) throw SpecError("benchmark.dataset: expected an object");
    bool real_data = false;
    if (d.contains("synthetic")) {
        b.dataset = synthetic_from_json(d.at("synthetic"), d);
    } else {
        auto file = dataset_file_from_json(d);
        real_data = true;
        b = real_data_benchmark(file);
        b.measures.clear();
    }
    const Json measures = j.contains("measures") ? j.at("measures") : Json("grid");
    if (measures == "grid") {
        b.measures = grid_measures(real_data);
    } else if (measures.is_array()) {
        for (const auto& m : measures) b.measures.push_back(benchmark_measure_from_json(m));
    } else {
        throw SpecError("benchmark.measures: expected \"grid\" or an array");
    }
    if (j.contains("true_clusters")) {
        const Json& t = j.at("true_clusters");
        if (!t.is_array()) throw SpecError("benchmark.true_clusters: expected an array");
        b.true_clusters.clear();
        for (const auto& c : t) b.true_clusters.push_back(strings(c, "benchmark.true_clusters[]"));
    }
    return b;
}

// ---------------------------------------------------------------- reports

Json to_json(const PropertyReport& r) {
    Json results = Json::array();
    for (const auto& p : r.results) {
        Json e{{"property", std::string(to_string(p.id))},
               {"status", std::string(to_string(p.status))},
               {"trials", p.trials},
               {"worst_violation", finite_or_string(p.worst_violation)}};
        if (p.witness) {
            const auto& w = *p.witness;
            e["witness"] = Json{{"trial", w.trial},           {"trial_seed", w.trial_seed},
                                {"n", w.x.size()},            {"x", w.x},
                                {"y", w.y},                   {"params", w.params},
                                {"violation", finite_or_string(w.violation)}, {"note", w.note}};
        }
        results.push_back(std::move(e));
    }
    const char* kind = r.kind == ProximityKind::Dissimilarity ? "dissimilarity"
                       : r.kind == ProximityKind::Similarity  ? "similarity"
                                                              : "association";
    return Json{{"subject", r.subject},
                {"kind", kind},
                {"verified", r.verified},
                {"options",
                 {{"trials", r.options.trials},
                  {"n_min", r.options.n_min},
                  {"n_max", r.options.n_max},
                  {"seed", r.options.seed},
                  {"tol", r.options.tol}}},
                {"passed", r.all_passed()},
                {"results", std::move(results)}};
}

Json to_json(const ImplicationReport& r) {
    Json results = Json::array();
    for (const auto& i : r.results) {
        Json e{{"name", i.name}, {"tables", i.tables}, {"holds", i.holds}};
        if (!i.holds) e["counterexample"] = i.counterexample;
        results.push_back(std::move(e));
    }
    return Json{{"all_hold", r.all_hold()}, {"results", std::move(results)}};
}

Json to_json(const BenchmarkReport& r) {
    Json measures = Json::array();
    for (const auto& o : r.outcomes) {
        Json clusters = Json::array();
        for (const auto& v : o.verdicts) clusters.push_back(Json{{"ids", v.cluster}, {"contained", v.contained}});
        Json e{{"label", o.label}, {"measure", o.measure}, {"skipped", o.skipped}};
        if (o.skipped) e["skip_reason"] = o.skip_reason;
        e["expect"] = o.expect ? Json(to_string(*o.expect)) : Json(nullptr);
        e["all_contained"] = o.all_contained;
        e["meets_expectation"] = o.meets_expectation;
        e["clusters"] = std::move(clusters);
        e["newick"] = o.newick;
        measures.push_back(std::move(e));
    }
    return Json{{"dataset", r.dataset},
                {"series", r.series},
                {"length", r.length},
                {"constant_series", r.constant_series},
                {"true_clusters", r.true_clusters},
                {"passed", r.passed()},
                {"measures", std::move(measures)}};
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw SpecError(std::string("invalid JSON: ") + e.what());
    }
}

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

}  // namespace shapeassoc
