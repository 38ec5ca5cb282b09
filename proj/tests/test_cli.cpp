#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include "doctest.h"

#include "vjw/document.hpp"

using namespace vjw;
namespace fs = std::filesystem;

namespace {

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "vjw_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args, const std::string& tag) {
    fs::path out = work_dir() / (tag + ".out");
    fs::path err = work_dir() / (tag + ".err");
    std::string cmd = std::string(VJW_CLI_PATH) + " " + args + " >" + out.string() + " 2>" +
                      err.string();
    int status = std::system(cmd.c_str());
    RunResult r;
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("compute emits a parseable canonical document") {
    RunResult r = run_cli("compute --weights mu1,mu2 --max-degree 3", "compute_basic");
    REQUIRE(r.exit_code == 0);
    ResultDocument doc = ResultDocument::parse(r.out);
    CHECK(doc.config.command == "compute");
    CHECK(doc.config.weight_names == std::vector<std::string>{"mu1", "mu2"});
    CHECK(doc.config.max_degree == 3);
    CHECK(doc.factors == std::vector<std::string>{"M(mu1)", "M(mu2)"});
    REQUIRE(doc.blocks.size() == 4);
    for (int k = 0; k <= 3; ++k) {
        CHECK(doc.blocks[k].degree == k);
        CHECK(doc.blocks[k].basis.size() == static_cast<size_t>(k + 1));
        CHECK(doc.blocks[k].matrix.rows() == k + 1);
    }
    CHECK(!doc.provenance.empty());
    // parse ∘ serialize is the identity on the byte level.
    CHECK(doc.serialize() == r.out);
}

TEST_CASE("repeated runs are byte-identical") {
    RunResult a = run_cli("verify --weights mu1,mu2 --max-degree 3", "det_a");
    RunResult b = run_cli("verify --weights mu1,mu2 --max-degree 3", "det_b");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    RunResult c = run_cli("compute --weights a,b --max-degree 2", "det_c");
    RunResult d = run_cli("compute --weights a,b --max-degree 2", "det_d");
    REQUIRE(c.exit_code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("verify selects every applicable suite by default") {
    RunResult r = run_cli("verify --weights mu1,mu2 --max-degree 3", "verify_two");
    REQUIRE(r.exit_code == 0);
    ResultDocument doc = ResultDocument::parse(r.out);
    std::set<std::string> expect{"pascal",      "relations", "idempotent",
                                 "intertwiner", "ef_identity", "oracle"};
    CHECK(doc.checks_run == expect);
    CHECK(doc.violations.empty());
    CHECK(doc.blocks.empty());  // verify reports, it does not emit matrices

    RunResult one = run_cli("verify --weights mu1 --max-degree 3", "verify_one");
    REQUIRE(one.exit_code == 0);
    ResultDocument doc1 = ResultDocument::parse(one.out);
    CHECK(doc1.checks_run == std::set<std::string>{"pascal", "relations"});

    RunResult three = run_cli("verify --weights mu1,mu2,mu3 --max-degree 2", "verify_three");
    REQUIRE(three.exit_code == 0);
    ResultDocument doc3 = ResultDocument::parse(three.out);
    CHECK(doc3.checks_run.count("coassoc") == 1);
}

TEST_CASE("verify honors an explicit check selection") {
    RunResult r =
        run_cli("verify --weights mu1,mu2 --max-degree 2 --checks pascal,oracle", "verify_sel");
    REQUIRE(r.exit_code == 0);
    ResultDocument doc = ResultDocument::parse(r.out);
    CHECK(doc.checks_run == std::set<std::string>{"oracle", "pascal"});
}

TEST_CASE("specializing onto a vanishing denominator reports a pole") {
    // mu1 + mu2 = 1, so the degree-2 denominator [mu1+mu2-1] vanishes.
    RunResult ok = run_cli("compute --weights mu1,mu2 --max-degree 1 --at mu1=2,mu2=-1",
                           "pole_ok");
    CHECK(ok.exit_code == 0);
    RunResult pole = run_cli("compute --weights mu1,mu2 --max-degree 2 --at mu1=2,mu2=-1",
                             "pole_bad");
    CHECK(pole.exit_code == 2);
    CHECK(pole.out.empty());
    CHECK(!pole.err.empty());
}

TEST_CASE("configuration mistakes exit with the config code") {
    CHECK(run_cli("verify --weights mu1,mu1 --max-degree 2", "cfg_dup").exit_code == 3);
    CHECK(run_cli("verify --weights mu1,mu2 --max-degree 2 --checks nonsense",
                  "cfg_check").exit_code == 3);
    CHECK(run_cli("verify --weights mu1,mu2 --max-degree 2 --at mu1=1,mu2=2",
                  "cfg_verify_at").exit_code == 3);
    CHECK(run_cli("compute --weights mu1,mu2 --max-degree 2 --at mu1=oops,mu2=1",
                  "cfg_malformed").exit_code == 3);
    CHECK(run_cli("compute --weights mu1,mu2 --max-degree 2 --at mu1=1", "cfg_partial")
              .exit_code == 3);
    CHECK(run_cli("compute --weights mu1 --max-degree 2", "cfg_single").exit_code == 3);
    CHECK(run_cli("tl --n 9", "cfg_tl_guard").exit_code == 3);
    CHECK(run_cli("tl --n 0", "cfg_tl_zero").exit_code == 3);
    CHECK(run_cli("compute --weights mu1,mu2", "cfg_missing_degree").exit_code == 3);
    CHECK(run_cli("frobnicate", "cfg_unknown_cmd").exit_code == 3);
}

TEST_CASE("missing input file exits with the io code") {
    CHECK(run_cli("specialize --in /nonexistent/doc.json --at mu1=-1", "io_missing")
              .exit_code == 4);
}

TEST_CASE("specialize matches computing at the point directly") {
    fs::path sym = work_dir() / "sym.json";
    RunResult r1 = run_cli("compute --weights mu1,mu2 --max-degree 3 --out " + sym.string(),
                           "spec_sym");
    REQUIRE(r1.exit_code == 0);
    RunResult r2 = run_cli("specialize --in " + sym.string() + " --at mu1=-1,mu2=-2",
                           "spec_apply");
    REQUIRE(r2.exit_code == 0);
    RunResult r3 = run_cli("compute --weights mu1,mu2 --max-degree 3 --at mu1=-1,mu2=-2",
                           "spec_direct");
    REQUIRE(r3.exit_code == 0);

    ResultDocument a = ResultDocument::parse(r2.out);
    ResultDocument b = ResultDocument::parse(r3.out);
    CHECK(a.config.command == "specialize");
    REQUIRE(a.blocks.size() == b.blocks.size());
    for (size_t i = 0; i < a.blocks.size(); ++i) {
        CHECK(a.blocks[i].basis == b.blocks[i].basis);
        CHECK(a.blocks[i].matrix == b.blocks[i].matrix);
    }
    // Specializing a specialized document again is the identity situation.
    CHECK(a.config.specialization == std::map<std::string, long>{{"mu1", -1}, {"mu2", -2}});
}

TEST_CASE("tl computes the classical projector with its idempotence report") {
    RunResult r = run_cli("tl --n 3", "tl_three");
    REQUIRE(r.exit_code == 0);
    ResultDocument doc = ResultDocument::parse(r.out);
    CHECK(doc.factors == std::vector<std::string>{"V(1)", "V(1)", "V(1)"});
    CHECK(doc.checks_run == std::set<std::string>{"idempotent"});
    CHECK(doc.violations.empty());
    REQUIRE(doc.blocks.size() == 4);
    CHECK(doc.blocks[1].matrix.rows() == 3);
    CHECK(doc.serialize() == r.out);

    // The guard is adjustable when raised deliberately.
    CHECK(run_cli("tl --n 5 --max-n 5", "tl_raised").exit_code == 0);
}

TEST_CASE("--out writes the same bytes that stdout would carry") {
    fs::path out = work_dir() / "to_file.json";
    RunResult direct = run_cli("compute --weights w1,w2 --max-degree 2", "out_stdout");
    RunResult filed =
        run_cli("compute --weights w1,w2 --max-degree 2 --out " + out.string(), "out_file");
    REQUIRE(direct.exit_code == 0);
    REQUIRE(filed.exit_code == 0);
    CHECK(filed.out.empty());
    CHECK(slurp(out) == direct.out);
}

}  // TEST_SUITE
