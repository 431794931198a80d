#include "shapeassoc/cli.hpp"

#include "shapeassoc/cluster.hpp"
#include "shapeassoc/config.hpp"
#include "shapeassoc/error.hpp"
#include "shapeassoc/numfmt.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>

namespace shapeassoc::cli {

namespace {

struct DatasetOptions {
    std::string input;
    std::string delimiter = "auto";
    std::string orientation = "auto";
    bool has_ids = false;
    bool drop_first_column = false;

    void attach(CLI::App* app) {
        app->add_option("-i,--input", input, "Dataset file")->required();
        app->add_option("--delimiter", delimiter, "auto, comma, whitespace or tab")
            ->check(CLI::IsMember({"auto", "comma", "whitespace", "tab"}));
        app->add_option("--orientation", orientation, "auto, rows or columns")
            ->check(CLI::IsMember({"auto", "rows", "columns"}));
        app->add_flag("--has-ids", has_ids, "First field (or header line) holds series ids");
        app->add_flag("--drop-first-column", drop_first_column, "Discard a leading label column");
    }

    [[nodiscard]] DatasetFile file() const {
        DatasetFile f;
        f.path = input;
        f.delimiter = delimiter == "comma"        ? Delimiter::Comma
                      : delimiter == "whitespace" ? Delimiter::Whitespace
                      : delimiter == "tab"        ? Delimiter::Tab
                                                  : Delimiter::Auto;
        f.orientation = orientation == "rows"      ? Orientation::Rows
                        : orientation == "columns" ? Orientation::Columns
                                                   : Orientation::Auto;
        f.has_ids = has_ids;
        f.drop_first_column = drop_first_column;
        return f;
    }
};

// A JSON file path, inline JSON, or a bare name such as "pearson" or "thm1/MDR".
Json json_argument(const std::string& arg) {
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '"' || arg.front() == '[')) return parse_json(arg);
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) return read_json(arg);
    return Json(arg);
}

std::uint64_t parse_seed(const std::string& s, const std::string& source) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw SpecError(source + ": '" + s + "' is not a nonnegative integer seed");
    }
    return v;
}

std::uint64_t default_seed() {
    const char* env = std::getenv("SHAPEASSOC_SEED");
    return env ? parse_seed(env, "SHAPEASSOC_SEED") : 0;
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
    if (output.empty() || output == "-") out << text;
    else write_text(output, text);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Time series shape association measures", "shapeassoc"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::string output;
    std::string measure_arg;
    std::string seed_arg;
    DatasetOptions data;

    auto* standardize_cmd = app.add_subcommand("standardize", "Apply a standardization to every series");
    std::string standardization_arg;
    data.attach(standardize_cmd);
    standardize_cmd->add_option("-f,--standardization", standardization_arg, "Preset name, JSON or JSON file")->required();
    standardize_cmd->add_option("-o,--output", output, "Output file (default stdout)");

    auto* assoc_cmd = app.add_subcommand("assoc", "Association value of two series");
    std::string x_id;
    std::string y_id;
    DatasetOptions assoc_data;
    assoc_data.attach(assoc_cmd);
    assoc_cmd->add_option("-m,--measure", measure_arg, "Measure name, JSON or JSON file")->required();
    assoc_cmd->add_option("-x", x_id, "First series id")->required();
    assoc_cmd->add_option("-y", y_id, "Second series id")->required();

    auto* matrix_cmd = app.add_subcommand("matrix", "Pairwise association matrix as CSV");
    bool matrix_abs = false;
    DatasetOptions matrix_data;
    matrix_data.attach(matrix_cmd);
    matrix_cmd->add_option("-m,--measure", measure_arg, "Measure name, JSON or JSON file")->required();
    matrix_cmd->add_flag("--abs", matrix_abs, "Write |A| instead of A");
    matrix_cmd->add_option("-o,--output", output, "Output file (default stdout)");

    auto* cluster_cmd = app.add_subcommand("cluster", "Single-linkage dendrogram of a matrix CSV");
    std::string matrix_path;
    bool cluster_abs = false;
    std::string format = "newick";
    std::size_t cut_k = 0;
    cluster_cmd->add_option("-i,--input", matrix_path, "Similarity (or, with --abs, association) matrix CSV")->required();
    cluster_cmd->add_flag("--abs", cluster_abs, "Take absolute values first");
    cluster_cmd->add_option("--format", format, "newick or text")->check(CLI::IsMember({"newick", "text"}));
    cluster_cmd->add_option("--cut", cut_k, "Print the partition into k clusters instead");
    cluster_cmd->add_option("-o,--output", output, "Output file (default stdout)");

    auto* axioms_cmd = app.add_subcommand("axioms", "Property-check a measure");
    VerifyOptions vopt;
    std::vector<std::string> property_names;
    std::string axioms_format = "text";
    bool run_suite = false;
    bool run_implications = false;
    axioms_cmd->add_option("-m,--measure", measure_arg, "Measure name, JSON or JSON file");
    axioms_cmd->add_option("--seed", seed_arg, "Seed (default $SHAPEASSOC_SEED or 0)");
    axioms_cmd->add_option("--trials", vopt.trials, "Trials per property")->check(CLI::PositiveNumber);
    axioms_cmd->add_option("--n-min", vopt.n_min, "Shortest series");
    axioms_cmd->add_option("--n-max", vopt.n_max, "Longest series");
    axioms_cmd->add_option("--tol", vopt.tol, "Violation tolerance")->check(CLI::PositiveNumber);
    axioms_cmd->add_option("--properties", property_names, "Properties to check (default: all)")->delimiter(',');
    axioms_cmd->add_option("--format", axioms_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    axioms_cmd->add_flag("--suite", run_suite, "Run the built-in pass/fail suite");
    axioms_cmd->add_flag("--implications", run_implications, "Spot-check the implications between properties");
    axioms_cmd->add_option("-o,--output", output, "Output file (default stdout)");

    auto* bench_cmd = app.add_subcommand("bench", "Clustering benchmark");
    std::string config_path;
    std::string bench_data;
    bench_cmd->add_option("-c,--config", config_path, "Benchmark JSON");
    bench_cmd->add_option("--data", bench_data, "Real data file; runs the grid with the real-data expectations");
    bench_cmd->add_option("--seed", seed_arg, "Synthetic generator seed (default $SHAPEASSOC_SEED or 0)");
    bench_cmd->add_option("-o,--output", output, "Output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        (void)app.exit(e, err, err);
        return kExitInvalid;
    }

    try {
        const std::uint64_t seed = seed_arg.empty() ? default_seed() : parse_seed(seed_arg, "--seed");

        if (*standardize_cmd) {
            const auto f = standardization_from_json(json_argument(standardization_arg));
            const auto set = parse_dataset(data.file());
            std::vector<TimeSeries> result;
            for (const auto& s : set) result.push_back(standardize(f, s));
            emit(format_dataset(SeriesSet(std::move(result))), output, out);
            return kExitOk;
        }
        if (*assoc_cmd) {
            const Measure m = measure_from_json(json_argument(measure_arg));
            const auto set = parse_dataset(assoc_data.file());
            out << format_roundtrip(associate(m, set.at(x_id), set.at(y_id))) << '\n';
            return kExitOk;
        }
        if (*matrix_cmd) {
            const Measure m = measure_from_json(json_argument(measure_arg));
            auto a = association_matrix(m, parse_dataset(matrix_data.file()));
            if (matrix_abs) a = SimilarityMatrix::from_association(a).to_matrix();
            emit(format_matrix_csv(a), output, out);
            return kExitOk;
        }
        if (*cluster_cmd) {
            const auto raw = read_matrix_csv(matrix_path);
            const auto s = cluster_abs ? SimilarityMatrix::from_association(raw) : SimilarityMatrix(raw);
            const auto d = single_linkage(s);
            std::string text;
            if (cut_k > 0) {
                for (const auto& group : cut(d, cut_k)) {
                    for (std::size_t i = 0; i < group.size(); ++i) text += (i ? " " : "") + group[i];
                    text += '\n';
                }
            } else {
                text = format == "text" ? to_text(d) : to_newick(d) + "\n";
            }
            emit(text, output, out);
            return kExitOk;
        }
        if (*axioms_cmd) {
            vopt.seed = seed;
            if (run_suite || run_implications) {
                bool ok = true;
                std::string text;
                if (run_suite) {
                    for (const auto& c : builtin_suite()) {
                        const PropertyId props[] = {c.property};
                        const auto r = verify(c.subject, props, vopt);
                        const Status got = r.results.front().status;
                        ok = ok && got == c.expected;
                        text += std::string(to_string(c.property)) + " " + c.label + " expected=" +
                                std::string(to_string(c.expected)) + " got=" + std::string(to_string(got)) +
                                (got == c.expected ? "" : "  MISMATCH") + "\n";
                    }
                }
                if (run_implications) {
                    const auto r = implication_checks(seed, vopt.trials);
                    ok = ok && r.all_hold();
                    if (axioms_format == "json") {
                        text += to_json(r).dump(2) + "\n";
                    } else {
                        for (const auto& i : r.results) {
                            text += (i.holds ? "holds  " : "FAILS  ") + i.name + " (" + std::to_string(i.tables) + " tables)\n";
                        }
                    }
                }
                emit(text, output, out);
                return ok ? kExitOk : kExitExpectation;
            }
            if (measure_arg.empty()) throw SpecError("axioms: --measure is required unless --suite or --implications is given");
            const Measure m = measure_from_json(json_argument(measure_arg));
            std::vector<PropertyId> props;
            for (const auto& name : property_names) {
                const auto id = property_from_string(name);
                if (!id) throw SpecError("unknown property '" + name + "'");
                props.push_back(*id);
            }
            if (props.empty()) props.assign(kAllProperties.begin(), kAllProperties.end());
            const auto report = verify(m, props, vopt);
            emit(axioms_format == "json" ? to_json(report).dump(2) + "\n" : to_text(report), output, out);
            return report.all_passed() ? kExitOk : kExitExpectation;
        }
        if (*bench_cmd) {
            BenchmarkSpec spec;
            if (!config_path.empty()) {
                spec = benchmark_from_json(read_json(config_path));
                if (!seed_arg.empty() || std::getenv("SHAPEASSOC_SEED")) {
                    if (auto* p = std::get_if<SyntheticParams>(&spec.dataset)) p->seed = seed;
                }
            } else if (!bench_data.empty()) {
                DatasetFile f;
                f.path = bench_data;
                spec = real_data_benchmark(f);
            } else {
                spec = default_benchmark(seed);
            }
            const auto report = run_benchmark(spec);
            emit(to_json(report).dump(2) + "\n", output, out);
            return report.passed() ? kExitOk : kExitExpectation;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}

}  // namespace shapeassoc::cli
