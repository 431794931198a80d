#include <doctest.h>

#include "shapeassoc/cli.hpp"
#include "shapeassoc/config.hpp"
#include "shapeassoc/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace shapeassoc;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    std::filesystem::path path = std::filesystem::temp_directory_path() / "shapeassoc_test_cli";
    TempDir() { std::filesystem::create_directories(path); }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name, const std::string& text) const {
        const auto p = (path / name).string();
        std::ofstream(p) << text;
        return p;
    }
};

const char* kData = "a,1,2,3,5\nb,2,4,6,10\nc,5,3,2,1\n";

}  // namespace

TEST_CASE("help and bad usage") {
    CHECK(run({"--help"}).code == cli::kExitOk);
    CHECK(run({}).code == cli::kExitInvalid);
    CHECK(run({"assoc", "--bogus"}).code == cli::kExitInvalid);
    CHECK(run({"nosuchcommand"}).code == cli::kExitInvalid);
}

TEST_CASE("assoc and matrix") {
    TempDir dir;
    const auto data = dir.file("d.csv", kData);
    const auto r = run({"assoc", "-i", data, "--has-ids", "-m", "pearson", "-x", "a", "-y", "b"});
    CHECK(r.code == cli::kExitOk);
    CHECK(std::stod(r.out) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(run({"assoc", "-i", data, "--has-ids", "-m", "pearson", "-x", "a", "-y", "zz"}).code == cli::kExitInvalid);
    CHECK(run({"assoc", "-i", data, "--has-ids", "-m", R"({"type":"pearson","oops":1})", "-x", "a", "-y", "b"}).code ==
          cli::kExitInvalid);

    const auto m = run({"matrix", "-i", data, "--has-ids", "-m", "thm1/MED", "--abs"});
    CHECK(m.code == cli::kExitOk);
    std::istringstream in(m.out);
    const auto mat = parse_matrix_csv(in);
    CHECK(mat.ids() == std::vector<std::string>{"a", "b", "c"});
    CHECK(mat(0, 1) == 1.0);

    const auto path = dir.file("m.csv", m.out);
    const auto newick = run({"cluster", "-i", path});
    CHECK(newick.code == cli::kExitOk);
    CHECK(newick.out.find("(a:") != std::string::npos);
    const auto parts = run({"cluster", "-i", path, "--cut", "2"});
    CHECK(parts.code == cli::kExitOk);
    CHECK(parts.out.find("a b") != std::string::npos);
    CHECK(run({"cluster", "-i", path, "--cut", "9"}).code == cli::kExitInvalid);
    CHECK(run({"cluster", "-i", (dir.path / "missing.csv").string()}).code == cli::kExitInvalid);
}

TEST_CASE("standardize writes a dataset") {
    TempDir dir;
    const auto data = dir.file("d.csv", kData);
    const auto out = (dir.path / "f.csv").string();
    CHECK(run({"standardize", "-i", data, "--has-ids", "-f", "F1", "-o", out}).code == cli::kExitOk);
    DatasetFile f;
    f.path = out;
    f.has_ids = true;
    const auto s = parse_dataset(f);
    CHECK(s.at("a")[3] == 2.25);
}

TEST_CASE("axioms exit codes") {
    const auto good = run({"axioms", "-m", "pearson", "--trials", "20", "--seed", "3"});
    CHECK(good.code == cli::kExitOk);
    const auto bad = run({"axioms", "-m",
                          R"({"type":"thm1_from_d","dissimilarity":{"r":2,"standardization":"F2"},"u":{"type":"exp"},"unchecked":true})",
                          "--trials", "20"});
    CHECK(bad.code == cli::kExitExpectation);
    const auto json = run({"axioms", "-m", "pearson", "--trials", "10", "--format", "json", "--properties", "Symmetry"});
    CHECK(json.code == cli::kExitOk);
    CHECK(parse_json(json.out).contains("results"));
    CHECK(run({"axioms", "-m", "pearson", "--properties", "NoSuch"}).code == cli::kExitInvalid);
    CHECK(run({"axioms", "--suite"}).code == cli::kExitOk);
    CHECK(run({"axioms", "--implications"}).code == cli::kExitOk);
}

TEST_CASE("seed from the environment") {
    const auto a = run({"axioms", "-m", "pearson", "--trials", "5", "--format", "json"});
    setenv("SHAPEASSOC_SEED", "12345", 1);
    const auto b = run({"axioms", "-m", "pearson", "--trials", "5", "--format", "json"});
    const auto c = run({"axioms", "-m", "pearson", "--trials", "5", "--format", "json", "--seed", "0"});
    unsetenv("SHAPEASSOC_SEED");
    CHECK(a.out != b.out);
    CHECK(a.out == c.out);
}

TEST_CASE("bench") {
    TempDir dir;
    const auto cfg = dir.file("b.json", R"({"dataset":{"synthetic":"reality_check","seed":2},"measures":["thm1/MED","prop1/AM"]})");
    const auto r = run({"bench", "-c", cfg});
    CHECK(r.code == cli::kExitOk);
    const auto j = parse_json(r.out);
    CHECK(j.at("measures").size() == 2);
    CHECK(j.at("passed") == true);

    const auto miss = dir.file(
        "m.json",
        R"({"dataset":{"synthetic":"reality_check","seed":2},"measures":[{"measure":"pearson","expect":"not_all"}]})");
    CHECK(run({"bench", "-c", miss}).code == cli::kExitExpectation);
}
