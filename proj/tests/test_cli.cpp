#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dsform/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int const status = dsform::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
    args.push_back("--json");
    Outcome const o = run(args);
    INFO(o.err);
    return Json::parse(o.out);
}

class TempFile {
public:
    explicit TempFile(std::string const& content) {
        static int counter = 0;
        path_ = (std::filesystem::temp_directory_path() /
                 ("dsform_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".txt"))
                    .string();
        std::ofstream(path_) << content;
    }
    ~TempFile() { std::remove(path_.c_str()); }
    std::string const& path() const { return path_; }

private:
    std::string path_;
};

std::string slurp(std::string const& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("construct formation writes witness and trace") {
    TempFile seq("");
    TempFile trace("");
    Outcome const o = run({"construct", "formation", "--r", "2", "--q", "3", "--x", "3", "--t", "2", "-o", seq.path(),
                           "--trace-output", trace.path()});
    CHECK(o.status == dsform::cli::kAllPassed);
    CHECK(slurp(seq.path()) == "1 2 4 1 2 4 1 3 5 1 3 5 2 3 6 2 3 6\n");
    CHECK(slurp(trace.path()) == slurp(DSFORM_TEST_DATA "/golden/formation_r2_q3_x3_t2.trace"));
    CHECK(o.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("construct formation from n and s") {
    Json const r = run_json({"construct", "formation", "--r", "2", "--q", "2", "--n", "48", "--s", "24"});
    CHECK(r["params"]["x"] == 6);
    CHECK(r["params"]["t"] == 11);
    for (auto const& c : r["checks"]) CHECK(c["pass"] == true);
    CHECK(run({"construct", "formation", "--r", "2", "--q", "3", "--n", "4", "--s", "4"}).status ==
          dsform::cli::kUsageError);
}

TEST_CASE("construct block") {
    Json const r = run_json({"construct", "block", "--n", "4", "--s", "3"});
    CHECK(r["witness"] == "1 2 3 4 | 3 2 1 | 2 3 4 |");
    CHECK(r["length"] == 10);
    for (auto const& c : r["checks"]) CHECK(c["pass"] == true);
}

TEST_CASE("construct ds-sparse") {
    Outcome const bad = run({"construct", "ds-sparse", "--n", "4", "--s", "4", "--j", "2"});
    CHECK(bad.status == dsform::cli::kUsageError);
    CHECK(bad.err.find("infeasible") != std::string::npos);
    Json const r = run_json({"construct", "ds-sparse", "--n", "48", "--s", "24", "--j", "3"});
    for (auto const& c : r["checks"]) CHECK(c["pass"] == true);
}

TEST_CASE("verify") {
    TempFile t2("1 2 1 2 1 3 1 3 2 3 2 3\n");
    CHECK(run({"verify", t2.path(), "sparse:2", "formation:2:7"}).status == dsform::cli::kAllPassed);
    CHECK(run({"verify", t2.path(), "sparse:3"}).status == dsform::cli::kCheckFailed);
    CHECK(run({"verify", t2.path(), "pattern:(ab)^3"}).status == dsform::cli::kCheckFailed);
    CHECK(run({"verify", t2.path(), "pattern:(ab)^4"}).status == dsform::cli::kAllPassed);

    TempFile pair("1 1");
    Outcome const o = run({"verify", pair.path(), "ds:2"});
    CHECK(o.status == dsform::cli::kCheckFailed);
    CHECK(o.out.find("[FAIL] ds:2") != std::string::npos);

    TempFile block("1 2 3 4 | 3 2 1 | 2 3 4 |");
    CHECK(run({"verify", block.path(), "ds:3", "lambda-prime:3"}).status == dsform::cli::kAllPassed);
    CHECK(run({"verify", block.path(), "lambda-prime:2"}).status == dsform::cli::kCheckFailed);

    TempFile pattern("a b b a");
    CHECK(run({"verify", t2.path(), "pattern:" + pattern.path()}).status == dsform::cli::kCheckFailed);
}

TEST_CASE("verify usage errors") {
    TempFile t2("1 2 1 2");
    CHECK(run({"verify", t2.path(), "nonsense:3"}).status == dsform::cli::kUsageError);
    CHECK(run({"verify", t2.path(), "ds:x"}).status == dsform::cli::kUsageError);
    CHECK(run({"verify", t2.path()}).status == dsform::cli::kUsageError);
    CHECK(run({"verify", "/nonexistent/file", "ds:2"}).status == dsform::cli::kUsageError);
    TempFile broken("1 1 | 2");
    CHECK(run({"verify", broken.path(), "ds:2"}).status == dsform::cli::kUsageError);
}

TEST_CASE("oracle values") {
    CHECK(run_json({"oracle", "lambda", "--n", "3", "--s", "2", "--j", "2"})["value"] == 5);
    CHECK(run_json({"oracle", "ex-matrix", "--n", "4", "--m", "4", "--pattern", "R2,2"})["value"] == 9);
    CHECK(run_json({"oracle", "lambda-prime", "--n", "3", "--s", "1", "--m", "3"})["value"] == 6);
    CHECK(run_json({"oracle", "pattern", "--n", "3", "--j", "2", "--pattern", "(ab)^2"})["value"] == 5);
    CHECK(run_json({"oracle", "formation", "--n", "2", "--r", "2", "--s", "2", "--j", "2"})["value"] == 3);
    CHECK(run_json({"oracle", "lambda-blocks", "--n", "4", "--s", "3", "--m", "4"})["value"] >= 10);
    Json const r = run_json({"oracle", "lambda", "--n", "4", "--s", "3", "--threads", "3"});
    CHECK(r["value"] == 12);
    CHECK(r["exhausted"] == true);
    CHECK(r["checks"][0]["pass"] == true);
}

TEST_CASE("oracle caps") {
    CHECK(run({"oracle", "lambda", "--n", "6", "--s", "2"}).status == dsform::cli::kUsageError);
    Json const r = run_json({"oracle", "lambda", "--n", "6", "--s", "1", "--override-caps"});
    CHECK(r["value"] == 6);
    CHECK(r.contains("estimated_nodes"));
    Json const limited = run_json({"oracle", "lambda", "--n", "5", "--s", "3", "--node-limit", "20"});
    CHECK(limited["exhausted"] == false);
}

TEST_CASE("bounds") {
    Json const kst = run_json({"bound", "kst", "--n", "4", "--m", "4", "--a", "2", "--b", "2"});
    CHECK(kst["bound"].get<double>() == doctest::Approx(10.0));
    Json const ds = run_json({"bound", "ds-ceiling", "--n", "3", "--s", "2", "--compare-oracle"});
    CHECK(ds["bound"] == 7);
    CHECK(ds["checks"][0]["measured"] == 5);
    CHECK(ds["checks"][0]["pass"] == true);
    CHECK(run_json({"bound", "formation-ceiling", "--n", "3", "--r", "2", "--s", "2"})["bound"] == 18);
    Json const cmp = run_json({"bound", "kst", "--n", "3", "--m", "3", "--a", "2", "--b", "2", "--compare-oracle"});
    CHECK(cmp["checks"][0]["measured"] == 6);
    CHECK(run({"bound", "kst", "--n", "1", "--m", "3", "--a", "2", "--b", "2"}).status == dsform::cli::kUsageError);
}

TEST_CASE("convert") {
    TempFile blocks("1 2 | 2 1");
    Outcome const a = run({"convert", "blocks-to-matrix", blocks.path()});
    CHECK(a.status == 0);
    CHECK(a.out == "11\n11\n");
    TempFile matrix("11\n11\n");
    CHECK(run({"convert", "matrix-to-blocks", matrix.path()}).out == "1 2 | 1 2\n");
    TempFile witness("1 2 3 4 | 3 2 1 | 2 3 4 |");
    Outcome const w = run({"convert", "blocks-to-matrix", witness.path()});
    CHECK(w.out == "1100\n1110\n1110\n1010\n");
    TempFile back(w.out);
    TempFile again("");
    CHECK(run({"convert", "matrix-to-blocks", back.path(), "-o", again.path()}).status == 0);
    TempFile round(slurp(again.path()));
    CHECK(run({"convert", "blocks-to-matrix", round.path()}).out == w.out);
}

TEST_CASE("json reports are stable apart from wall time") {
    std::vector<std::string> const args{"construct", "formation", "--r", "3", "--q", "4", "--x", "5", "--t", "2"};
    Json a = run_json(args);
    Json b = run_json(args);
    a.erase("wall_time_ms");
    b.erase("wall_time_ms");
    CHECK(a.dump() == b.dump());
    CHECK(a["command"] == "construct formation");
}

TEST_CASE("usage errors") {
    CHECK(run({}).status == dsform::cli::kUsageError);
    CHECK(run({"frobnicate"}).status == dsform::cli::kUsageError);
    CHECK(run({"construct", "nothing"}).status == dsform::cli::kUsageError);
    CHECK(run({"construct", "formation", "--r", "2"}).status == dsform::cli::kUsageError);
    CHECK(run({"oracle", "lambda", "--n", "three"}).status == dsform::cli::kUsageError);
    CHECK(run({"--help"}).status == dsform::cli::kAllPassed);
}
