#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supercb/cli.hpp"
#include "supercb/io.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace supercb;
namespace fs = std::filesystem;

namespace {

const Shape s21{2, 1};
const Shape s22{2, 2};

Laurent v(int k) { return Laurent::monomial(k); }

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("supercb-test-" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

int cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

} // namespace

TEST_CASE("polynomial JSON round trip") {
    Laurent f = v(-1) + Laurent(-3) * v(2) * Laurent(1);
    f.add_term(0, 7);
    Json j = laurent_to_json(f);
    CHECK(j["-1"] == 1);
    CHECK(laurent_from_json(j) == f);
    Laurent big = Laurent(Int("123456789012345678901234567890"));
    CHECK(laurent_from_json(laurent_to_json(big)) == big);
}

TEST_CASE("matrix JSON round trip") {
    Mat A = Mat::unit(s22, 1, 2, 3).added(3, 4, 2).add_diag({1, 0, 0, 2});
    Json j = mat_to_json(A);
    CHECK(j["m"] == 2);
    CHECK(mat_from_json(j) == A);
}

TEST_CASE("record JSON round trip") {
    UplusContext ctx(s21);
    CanonicalRecord rec = ctx.layered_subtraction(Mat::unit(s21, 1, 2, 2).added(1, 3, 1));
    CanonicalRecord back = record_from_json(record_to_json(rec));
    CHECK(back.target == rec.target);
    CHECK(back.expansion == rec.expansion);
    CHECK(back.witness == rec.witness);
}

TEST_CASE("schur element JSON round trip") {
    UplusContext up(s21);
    SchurContext sc(up, 2);
    SchurElement e = sc.span_element(Mat::unit(s21, 1, 2), {1, 0, -1});
    SchurElement back = schur_from_json(schur_to_json(e), s21);
    CHECK(back == e);
}

TEST_CASE("matrix text parsing") {
    Mat A = parse_matrix("2E[1,2]+E[1,3]+3E[3,4]", s22);
    CHECK(A.at(1, 2) == 2);
    CHECK(A.at(1, 3) == 1);
    CHECK(A.at(3, 4) == 3);
    CHECK(parse_matrix("0", s21).is_zero());
    CHECK(parse_matrix("", s21).is_zero());
    Mat D = parse_matrix("E[1,2]+diag(1,0,2)", s21);
    CHECK(D.at(1, 1) == 1);
    CHECK(D.at(3, 3) == 2);
    CHECK_THROWS(parse_matrix("E[1,9]", s21));
    CHECK_THROWS(parse_matrix("garbage", s21));
}

TEST_CASE("latex rendering") {
    CHECK(laurent_to_latex(sym_int(3)) == "[3]");
    CHECK(laurent_to_latex(v(-2)) == "v^{-2}");
    CHECK(laurent_to_latex(Laurent(1) + v(-2)) == "1+v^{-2}");
    CHECK(mat_to_latex(Mat::unit(s21, 1, 2)).find("smallmatrix") != std::string::npos);
}

TEST_CASE("cache store, load, clear, corrupt") {
    TempDir tmp;
    UplusContext ctx(s21);
    CanonicalRecord rec = ctx.layered_subtraction(Mat::unit(s21, 1, 3));
    cache_store(tmp.path.string(), rec);

    auto hit = cache_load(tmp.path.string(), s21, Side::plus, rec.target);
    REQUIRE(hit.has_value());
    CHECK(hit->expansion == rec.expansion);

    CHECK_FALSE(cache_load(tmp.path.string(), s21, Side::plus, Mat::unit(s21, 1, 2)).has_value());

    const fs::path file = tmp.path / cache_file_name(s21, Side::plus, rec.target);
    {
        std::ofstream f(file, std::ios::trunc);
        f << "{not json";
    }
    CHECK_THROWS_WITH_AS(
        (void)cache_load(tmp.path.string(), s21, Side::plus, rec.target),
        doctest::Contains(file.string().c_str()), std::runtime_error);
}

TEST_CASE("canonical command end to end") {
    std::string out, err;
    int code = cli({"canonical", "--m", "2", "--n", "1", "--matrix", "E[1,3]"}, &out, &err);
    CHECK(code == 0);
    Json j = Json::parse(out);
    CHECK(j["expansion"].size() == 2);
    CanonicalRecord rec = record_from_json(j);
    CHECK(rec.expansion.at(Mat::unit(s21, 1, 2).added(2, 3, 1)) == v(-1));

    SUBCASE("empty matrix gives the identity record") {
        code = cli({"canonical", "--m", "2", "--n", "1", "--matrix", ""}, &out, &err);
        CHECK(code == 0);
        Json id = Json::parse(out);
        CHECK(id["expansion"].size() == 1);
    }
    SUBCASE("parse errors exit nonzero") {
        code = cli({"canonical", "--m", "2", "--n", "1", "--matrix", "E[1,1]"}, &out, &err);
        CHECK(code != 0);
        CHECK_FALSE(err.empty());
    }
    SUBCASE("strictly lower input lands on the minus side") {
        code = cli({"canonical", "--m", "2", "--n", "1", "--matrix", "E[3,1]"}, &out, &err);
        CHECK(code == 0);
        Json j = Json::parse(out);
        CHECK(j["side"] == "minus");
        CHECK(j["expansion"].size() == 2);
    }
    SUBCASE("latex output") {
        code = cli({"canonical", "--m", "2", "--n", "1", "--matrix", "E[1,3]", "--format",
                    "latex"},
                   &out, &err);
        CHECK(code == 0);
        CHECK(out.find("v^{-1}") != std::string::npos);
    }
}

TEST_CASE("canonical command uses the cache") {
    TempDir tmp;
    std::string out, err1, err2;
    std::vector<std::string> args{"canonical", "--m", "2",        "--n",
                                  "1",         "--matrix", "E[1,3]", "--cache-dir",
                                  tmp.path.string()};
    CHECK(cli(args, &out, &err1) == 0);
    CHECK(err1.find("[cache] store") != std::string::npos);
    CHECK(cli(args, &out, &err2) == 0);
    CHECK(err2.find("[cache] hit") != std::string::npos);

    std::string out3;
    CHECK(cli({"cache", "info", "--cache-dir", tmp.path.string()}, &out3) == 0);
    CHECK(out3.find("1 records") != std::string::npos);
    CHECK(cli({"cache", "clear", "--cache-dir", tmp.path.string()}, &out3) == 0);
    CHECK(cli({"cache", "info", "--cache-dir", tmp.path.string()}, &out3) == 0);
    CHECK(out3.find("0 records") != std::string::npos);
}

TEST_CASE("enumeration with multiple jobs stays deterministic") {
    std::string out1, out2;
    CHECK(cli({"canonical", "--m", "2", "--n", "1", "--all-upto-norm", "3"}, &out1) == 0);
    CHECK(cli({"canonical", "--m", "2", "--n", "1", "--all-upto-norm", "3", "--jobs", "4"},
              &out2) == 0);
    CHECK(out1 == out2);
    Json arr = Json::parse(out1);
    CHECK(arr.is_array());
    CHECK(arr.size() > 1);
}

TEST_CASE("tableaux count command") {
    std::string out;
    int code = cli({"tableaux", "count", "--shape", "2,1", "--m", "2", "--n", "1"}, &out);
    CHECK(code == 0);
    Json j = Json::parse(out);
    CHECK(j["total"].get<long>() > 0);
    CHECK(j["by_content"].is_array());
}

TEST_CASE("verify subcommands report and exit") {
    std::string out;
    CHECK(cli({"verify", "golden-gl21", "--a-max", "2"}, &out) == 0);
    CHECK(out.find("PASS") != std::string::npos);
    CHECK(cli({"verify", "pbw", "--m", "2", "--n", "1", "--entry-max", "1"}, &out) == 0);
}

TEST_CASE("schur commands") {
    std::string out;
    int code = cli({"schur", "mult", "--m", "2", "--n", "1", "--r", "2", "--gen", "E", "--row",
                    "1", "--power", "1", "--matrix", "diag(1,1,0)"},
                   &out);
    CHECK(code == 0);
    Json j = Json::parse(out);
    CHECK(j["terms"].size() == 1);

    code = cli({"schur", "xi", "--m", "2", "--n", "1", "--r", "2", "--matrix", "diag(1,1,0)"},
               &out);
    CHECK(code == 0);
}
