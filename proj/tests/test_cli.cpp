#include "doctest.h"

#include "rainbowk/cli.hpp"
#include "rainbowk/io.hpp"

#include <filesystem>
#include <random>
#include <sstream>

namespace fs = std::filesystem;
using namespace rainbowk;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli_run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("rainbowk-test-" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string mutate(const std::string& file_text, int u, int w, int color) {
    auto f = read_coloring(file_text);
    return write_coloring({f.coloring.with_edge(u, w, static_cast<Color>(color)), f.k_hint, f.scheme});
}

}  // namespace

TEST_CASE("construct") {
    TempDir dir;
    auto r = cli_run({"construct", "--k", "4", "--r", "18", "--out", dir / "a.json", "--dot", dir / "a.dot"});
    CHECK(r.code == cli::kOk);
    const auto file = read_coloring(read_text_file(dir / "a.json"));
    CHECK(file.coloring.r() == 18);
    CHECK(file.coloring.colors() == 3);
    CHECK(file.coloring.assignment().size() == 324);
    CHECK(file.coloring == build_coloring(make_scheme(4, 18)));
    CHECK(fs::exists(dir / "a.dot"));

    r = cli_run({"construct", "--k", "2", "--r", "3", "--out", dir / "b.json"});
    CHECK(r.code == cli::kBadParameter);
    CHECK(r.err.find("4") != std::string::npos);
    CHECK_FALSE(fs::exists(dir / "b.json"));

    r = cli_run({"construct", "--k", "5", "--r", "30", "--out", dir / "c.json"});
    CHECK(r.code == cli::kOk);
    const auto five = read_coloring(read_text_file(dir / "c.json"));
    CHECK(five.coloring.colors() == 3);
    CHECK(five.scheme == SchemeInfo{5, 3, 0});
    CHECK(cli_run({"verify", "--coloring", dir / "c.json", "--k", "5", "--jobs", "4"}).code == cli::kOk);

    r = cli_run({"construct", "--k", "4", "--r", "18", "--out", dir / "missing/x.json"});
    CHECK(r.code == cli::kIoFailure);
}

TEST_CASE("verify exit codes") {
    TempDir dir;
    REQUIRE(cli_run({"construct", "--k", "4", "--r", "18", "--out", dir / "a.json"}).code == 0);
    auto r = cli_run({"verify", "--coloring", dir / "a.json", "--k", "4"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "ok: k=4 min_packing=4 pairs=630 worst_pairs=630\n");

    write_text_file(dir / "mono.json", write_coloring({EdgeColoring::uniform(3, 1, 1), std::nullopt, std::nullopt}));
    r = cli_run({"verify", "--coloring", dir / "mono.json", "--k", "1"});
    CHECK(r.code == cli::kNotConnected);
    CHECK(r.out.rfind("not ok: k=1 min_packing=0", 0) == 0);

    CHECK(cli_run({"verify", "--coloring", dir / "a.json", "--k", "19"}).code == cli::kBadParameter);
    CHECK(cli_run({"verify", "--coloring", dir / "nope.json", "--k", "1"}).code == cli::kIoFailure);
    write_text_file(dir / "bad.json", "{\"header\": {}}");
    r = cli_run({"verify", "--coloring", dir / "bad.json", "--k", "1"});
    CHECK(r.code == cli::kMalformedInput);
    CHECK(r.err.find("header") != std::string::npos);
}

TEST_CASE("verify after single-edge mutations (recomputed goldens)") {
    TempDir dir;
    REQUIRE(cli_run({"construct", "--k", "4", "--r", "16", "--out", dir / "a.json"}).code == 0);
    const auto text = read_text_file(dir / "a.json");
    struct Case {
        int u, w, color, code, min_packing;
    };
    // U flat 0 is U:1:1; W flat 14 is W:8:1, W flat 2 is W:2:1
    for (const auto& c : {Case{0, 14, 3, 1, 3}, Case{0, 2, 2, 1, 3}, Case{0, 0, 3, 0, 4}}) {
        write_text_file(dir / "m.json", mutate(text, c.u, c.w, c.color));
        const auto r = cli_run({"verify", "--coloring", dir / "m.json", "--k", "4", "--jobs", "4"});
        CHECK(r.code == c.code);
        CHECK(r.out.find("min_packing=" + std::to_string(c.min_packing)) != std::string::npos);
    }
}

TEST_CASE("verify reports are identical for any job count") {
    TempDir dir;
    REQUIRE(cli_run({"construct", "--k", "3", "--r", "13", "--out", dir / "a.json"}).code == 0);
    for (const std::vector<std::string> extra : {std::vector<std::string>{}, {"--witnesses", "--per-pair"}}) {
        auto args1 = std::vector<std::string>{"verify", "--coloring", dir / "a.json", "--k", "3", "--report",
                                              dir / "r1.json", "--jobs", "1"};
        auto args8 = args1;
        args8[6] = dir / "r8.json";
        args8[8] = "8";
        args1.insert(args1.end(), extra.begin(), extra.end());
        args8.insert(args8.end(), extra.begin(), extra.end());
        CHECK(cli_run(args1).code == 0);
        CHECK(cli_run(args8).code == 0);
        CHECK(read_text_file(dir / "r1.json") == read_text_file(dir / "r8.json"));
    }
}

TEST_CASE("witness") {
    auto r = cli_run({"witness", "--k", "4", "--r", "18", "--u", "U:1:1", "--v", "U:1:2"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.rfind("case 1.1.1\n", 0) == 0);
    CHECK(r.out.find("4 paths\n") != std::string::npos);
    CHECK(r.out.find("  U:1:1 W:1:1 U:1:2  colors (1,3)\n") != std::string::npos);

    r = cli_run({"witness", "--k", "4", "--r", "18", "--u", "U:e:1", "--v", "W:e:2"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.rfind("case 2.2.2\n", 0) == 0);
    CHECK(r.out.find("4 paths\n") != std::string::npos);

    r = cli_run({"witness", "--k", "4", "--r", "18", "--u", "U:1:1", "--v", "W:2:1", "--json"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("\"case\": \"1.2.2\"") != std::string::npos);

    CHECK(cli_run({"witness", "--k", "4", "--r", "18", "--u", "U:1:1", "--v", "U:1:1"}).code == cli::kBadParameter);
    CHECK(cli_run({"witness", "--k", "4", "--r", "18", "--u", "U:1:1", "--v", "U:9:1"}).code == cli::kMalformedInput);
    CHECK(cli_run({"witness", "--k", "4", "--r", "18", "--u", "U:x", "--v", "U:1:1"}).code == cli::kMalformedInput);
    CHECK(cli_run({"witness", "--k", "2", "--r", "4", "--u", "U:1:1", "--v", "W:2:1"}).code == cli::kNotConnected);
}

TEST_CASE("classify") {
    auto r = cli_run({"classify", "--k", "4", "--r", "18", "--u", "U:1:1", "--v", "W:1:1"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("case 1.2.1\n", 0) == 0);
    r = cli_run({"classify", "--k", "4", "--r", "18", "--u", "U:e:1", "--v", "U:e:2"});
    CHECK(r.out.rfind("case 2.1.2\n", 0) == 0);
    r = cli_run({"classify", "--k", "4", "--r", "18", "--u", "W:3:1", "--v", "U:5:2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("side_swap=yes") != std::string::npos);
}

TEST_CASE("oracle") {
    auto r = cli_run({"oracle", "--r", "2", "--k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "4\n");
    r = cli_run({"oracle", "--r", "3", "--k", "3", "--jobs", "4"});
    CHECK(r.out == "3\n");
    r = cli_run({"oracle", "--r", "3", "--k", "2", "--count", "--max-colors", "3", "--jobs", "4"});
    CHECK(r.out == "212\n");
    r = cli_run({"oracle", "--r", "2", "--k", "2", "--max-colors", "3"});
    CHECK(r.code == cli::kCapExceeded);
    r = cli_run({"oracle", "--r", "5", "--k", "2"});
    CHECK(r.code == cli::kGuardRefused);
    CHECK(r.err.find("--force") != std::string::npos);
    CHECK(cli_run({"oracle", "--r", "2", "--k", "3"}).code == cli::kBadParameter);
}

TEST_CASE("argument errors and help") {
    CHECK(cli_run({}).code == cli::kBadParameter);
    CHECK(cli_run({"construct", "--k", "4"}).code == cli::kBadParameter);
    CHECK(cli_run({"frobnicate"}).code == cli::kBadParameter);
    const auto help = cli_run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("oracle") != std::string::npos);
}
