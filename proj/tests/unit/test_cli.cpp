#include "doctest.h"

#include "hm/cli/cli.hpp"
#include "hm/interp/interp.hpp"

#include <cstdlib>
#include <sstream>

using namespace hm;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cli::run(args, {in, out, err, false});
    return {code, out.str(), err.str()};
}

const std::string kProgram1 = "(\\x:N. (\\z:N. case(z)[y -> 2*y]) (succ @x)) 5";

}  // namespace

TEST_CASE("check, step and nf") {
    Result r = run({"check", kProgram1});
    CHECK(r.code == 0);
    CHECK(r.out.find("exec  3") != std::string::npos);
    r = run({"step", kProgram1});
    CHECK(r.code == 0);
    CHECK(r.out.find("[0] 12") != std::string::npos);
    r = run({"step", "-n", "1", "--format", "json", kProgram1});
    CHECK(nlohmann::json::parse(r.out)["steps"].size() == 2);
    r = run({"nf", "-"}, "pred 7");
    CHECK(r.out == "6\n");
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"plays", "--max-play-len", "0", "3"}).code == 2);
    CHECK(run({"check", "(\\x:N. x"}).code == 1);
    CHECK(run({"check", "succ succ"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("interpret --trace matches the input-7 table and round-trips through JSON") {
    Result r = run({"interpret", "--trace", "--ctx", "x:N", "--input", "7", "--ctx-answer", "3", "cond (succ @x) @x"});
    CHECK(r.code == 0);
    CHECK(r.out.find("ctx  arg1  N_2  N_3  res") != std::string::npos);
    r = run({"interpret", "--trace", "--format", "json", "--ctx", "x:N", "--input", "7", "--ctx-answer", "3",
             "cond (succ @x) @x"});
    auto j = nlohmann::json::parse(r.out);
    JSeq play = jseq_from_json(j["play"]);
    CHECK(to_json(play) == j["play"]);
    CHECK(interp::merged_cells(play).back() == interp::Cell{"res", "3"});
    CHECK(j["cells"].size() == interp::merged_cells(play).size());
}

TEST_CASE("plays, eval and bounds from the environment") {
    Result r = run({"plays", "5"});
    CHECK(r.out == "ε\nR.q R.5>0\n");
    r = run({"eval", "(\\x:N. succ @x) 4"});
    CHECK(r.out.find("R.q R.5>0") != std::string::npos);
    setenv("HIDDENMOVES_BOUNDS", "{\"unknown\": 1}", 1);
    CHECK(run({"plays", "5"}).code == 2);
    setenv("HIDDENMOVES_BOUNDS", "{\"numeralProbes\": [4]}", 1);
    r = run({"plays", "succ"});
    unsetenv("HIDDENMOVES_BOUNDS");
    CHECK(r.out.find(".4") != std::string::npos);
    CHECK(r.out.find(".7") == std::string::npos);
}

TEST_CASE("interactive session") {
    Result r = run({"play", "5"}, "q\n");
    CHECK(r.code == 0);
    CHECK(r.out.find("P R.5") != std::string::npos);
    CHECK(r.out.find("play complete") != std::string::npos);
    r = run({"play", "\\x:N. succ @x"}, "nonsense\n#0\n:hide 1\n:quit\n");
    CHECK(r.out.find("not a legal move") != std::string::npos);
    CHECK(r.code == 0);
}

TEST_CASE("verification commands") {
    CHECK(run({"verify-dcp", kProgram1}).code == 0);
    Result r = run({"verify-dcp", "--count", "10", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["passed"] == true);
    CHECK(run({"validate-game", "--type", "N => N"}).code == 0);
    CHECK(run({"validate-game"}).code == 2);
    CHECK(run({"laws", "--samples", "2"}).code == 0);
}
