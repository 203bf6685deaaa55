#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = kappa::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("kappa_cli_test_" + name);
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("cli kappa") {
    auto r = run({"kappa", "--family", "A", "--rank", "2", "--mult", "all:1"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
    r = run({"kappa", "--family", "BC", "--rank", "2", "--mult", "medium:2,short:2,long:1"});
    CHECK(r.out == "7/2\n");
    r = run({"kappa", "--family", "E8", "--mult", "all:2"});
    CHECK(r.out == "57\n");
    CHECK(run({"kappa", "--family", "A", "--rank", "0", "--mult", "all:1"}).code == 2);
    CHECK(run({"kappa", "--family", "Q", "--rank", "2", "--mult", "all:1"}).code == 2);
    CHECK(run({"kappa", "--family", "A", "--rank", "2", "--mult", "all:1", "--bogus"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("cli table") {
    auto r = run({"table", "--catalog", "default"});
    CHECK(r.code == 0);
    CHECK(r.out.find("MISMATCH") == std::string::npos);
    r = run({"table", "--format", "csv"});
    CHECK(r.out.rfind("id,group,rank,computed,expected,status\n", 0) == 0);
    CHECK(r.out.find("G,\"G2(2)\",2,5/2,5/2,ok") != std::string::npos);

    const auto bad = temp_file("bad_catalog.txt",
                               "format_version = 1\n[entry]\nid = x\nlabel = x\ncartan = AI\nparams = n:3\n"
                               "family = A rank:2\nmult = all:1\nkappa = 3/2\n");
    r = run({"table", "--catalog", bad.string()});
    CHECK(r.code == 1);
    CHECK(r.out.find("MISMATCH") != std::string::npos);

    setenv("KAPPA_CATALOG", bad.string().c_str(), 1);
    CHECK(run({"table"}).code == 1);
    CHECK(run({"table", "--catalog", "default"}).code == 0);
    unsetenv("KAPPA_CATALOG");

    const auto broken = temp_file("broken_catalog.txt", "format_version = 1\n[entry]\nid = x\n");
    CHECK(run({"table", "--catalog", broken.string()}).code == 2);
}

TEST_CASE("cli weights and region") {
    auto r = run({"weights", "--family", "A", "--rank", "2", "--mult", "all:1"});
    CHECK(r.code == 0);
    CHECK(r.out == "mu1 = (4/3,2/3)  n = 2\nmu2 = (2/3,4/3)  n = 2\nkappa = 1\n");
    r = run({"region", "--family", "A", "--rank", "2", "--mult", "all:1", "--eta", "1,1"});
    CHECK(r.out == "inside\n");
    r = run({"region", "--family", "A", "--rank", "2", "--mult", "all:1", "--eta", "2,2"});
    CHECK(r.out == "outside\n");
    CHECK(run({"region", "--family", "A", "--rank", "2", "--mult", "all:1", "--eta", "1"}).code == 2);
}

TEST_CASE("cli matrix decompositions") {
    const auto m = temp_file("m.txt", "3\n2 1 0\n0 1 1\n1 0 3\n");
    auto r = run({"iwasawa", "--matrix", m.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("reconstruction_error") != std::string::npos);
    r = run({"kak", "--matrix", m.string(), "--digits", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("a_log") != std::string::npos);
    CHECK(run({"kak", "--matrix", "/nonexistent"}).code == 2);
    const auto singular = temp_file("s.txt", "2\n1 2\n2 4\n");
    CHECK(run({"iwasawa", "--matrix", singular.string()}).code == 2);
}

TEST_CASE("cli spherical output feeds decay and holder") {
    auto r = run({"spherical", "--group", "sl2", "--xi", "1", "--points", "0.5,1,1.5,2", "--tmin", "16", "--tmax",
                  "2048", "--tsteps", "8"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("t,Y,re,im,err\n", 0) == 0);
    const auto csv = temp_file("sph.csv", r.out);
    auto d = run({"decay", "--input", csv.string()});
    CHECK(d.code == 0);
    CHECK(d.out.rfind("Y,samples,slope,intercept,r_squared\n", 0) == 0);
    auto h = run({"holder", "--input", csv.string(), "--alpha", "0.5,0.6"});
    CHECK(h.code == 0);
    CHECK(h.out.rfind("t,sup_quotient_alpha_0.5,sup_quotient_alpha_0.6\n", 0) == 0);
    CHECK(h.out.find("# alpha=0.5") != std::string::npos);

    // determinism
    CHECK(run({"spherical", "--group", "sl3", "--xi", "1,1", "--points", "1", "--tmin", "1", "--tmax", "2", "--tsteps",
               "2", "--seed", "5"}).out ==
          run({"spherical", "--group", "sl3", "--xi", "1,1", "--points", "1", "--tmin", "1", "--tmax", "2", "--tsteps",
               "2", "--seed", "5"}).out);
    r = run({"spherical", "--group", "su2", "--points", "1", "--tmin", "10", "--tmax", "1000", "--tsteps", "16"});
    CHECK(r.code == 0);
    CHECK(run({"spherical", "--group", "sl2", "--points", "6"}).code == 2);
    CHECK(run({"spherical", "--group", "so5"}).code == 2);
    CHECK(run({"decay", "--input", "/nonexistent.csv"}).code == 2);
}

TEST_CASE("cli statphase and expsum") {
    auto r = run({"statphase", "--group", "sl2", "--xi", "1", "--Y", "1", "--tmin", "50", "--tmax", "400"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("t,quad_re,quad_im,lead_re,lead_im,abs_err\n", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);
    r = run({"statphase", "--group", "su2", "--Y", "1"});
    CHECK(r.code == 0);
    r = run({"expsum", "--fx", "1,1", "--ux", "1,-1", "--uy", "1.01,-1.01", "--m", "1", "--N", "1000"});
    CHECK(r.code == 0);
    CHECK(std::stod(r.out) == Catch::Approx(4.219651810327876).epsilon(1e-12));
    CHECK(run({"expsum", "--fx", "1:0.5,1", "--fy", "0,0", "--ux", "1,2", "--uy", "1,2", "--N", "10"}).code == 0);
    CHECK(run({"expsum", "--fx", "1", "--ux", "1,2", "--uy", "1"}).code == 2);
}

TEST_CASE("cli quadrature failure is a computational error") {
    // sl2 at huge frequency exceeds the node budget
    auto r = run({"spherical", "--group", "sl2", "--xi", "1e9", "--points", "3", "--tmin", "1", "--tmax", "1",
                  "--tsteps", "1"});
    CHECK(r.code == 1);
}

TEST_CASE("cli selftest subset") {
    auto r = run({"selftest", "--only", "1", "--only", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS [1]") != std::string::npos);
    CHECK(r.out.find("PASS [10]") != std::string::npos);
    CHECK(run({"selftest", "--only", "11"}).code == 2);
}
