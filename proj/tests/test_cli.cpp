#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "invint/json_io.hpp"

using namespace invint;

namespace {

std::string work_dir() {
    static std::string dir = [] {
        char tmpl[] = "/tmp/invint_cli_XXXXXX";
        char* d = mkdtemp(tmpl);
        REQUIRE(d != nullptr);
        return std::string(d);
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
    std::string path = work_dir() + "/" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

int run(const std::string& args, std::string* output = nullptr) {
    std::string outfile = work_dir() + "/last_output.txt";
    std::string cmd = std::string(INVINT_CLI_PATH) + " " + args + " > " + outfile + " 2>&1";
    int status = std::system(cmd.c_str());
    if (output) {
        std::ifstream f(outfile);
        std::stringstream ss;
        ss << f.rdbuf();
        *output = ss.str();
    }
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("sl-dim") {
    std::string out;
    CHECK(run("sl-dim --n 2 --m 2", &out) == 0);
    CHECK(out == "2\n");
    CHECK(run("sl-dim --n 2 --m 5", &out) == 0);
    CHECK(out == "42\n");
}

TEST_CASE("gl-integral and sl-integral") {
    std::string det2sq = write_file("det2sq.json", poly_to_json(poly_det(2).pow(2)).dump());
    std::string out;
    CHECK(run("gl-integral --n 2 --poly " + det2sq + " --det-power 2", &out) == 0);
    CHECK(out == "1\n");

    Poly p = poly_det(2).pow(3) - poly_det(2).pow(2);
    std::string ideal = write_file("ideal.json", poly_to_json(p).dump());
    CHECK(run("sl-integral --n 2 --poly " + ideal, &out) == 0);
    CHECK(out == "0\n");

    Poly x11x22 = Poly::variable(2, 1, 1) * Poly::variable(2, 2, 2);
    std::string f = write_file("x11x22.json", poly_to_json(x11x22).dump());
    CHECK(run("gl-integral --n 2 --poly " + f + " --det-power 1", &out) == 0);
    CHECK(out == "1/2\n");
}

TEST_CASE("weingarten output and determinism") {
    std::string out1, out2;
    CHECK(run("weingarten --kind O --dim 3 --degree 2", &out1) == 0);
    CHECK(run("weingarten --kind O --dim 3 --degree 2", &out2) == 0);
    CHECK(out1 == out2);  // byte-identical
    CHECK(out1.find("\"2/5\"") != std::string::npos);
    CHECK(out1.find("\"-1/5\"") != std::string::npos);

    std::string csv;
    CHECK(run("weingarten --kind Sp --dim 4 --degree 2 --format csv", &csv) == 0);
    CHECK(csv.find("kind,dim,degree,cycle_type,coeff") != std::string::npos);
    CHECK(csv.find("Sp,4,2,1+1,9/40") != std::string::npos);

    std::string table_path = work_dir() + "/table.json";
    CHECK(run("weingarten --kind O --dim 2 --degree 1 --out " + table_path) == 0);
    WeingartenTable t = table_from_json(parse_file(table_path));
    CHECK(t.coeffs[0].second == Rat(Int(1), Int(2)));
}

TEST_CASE("project") {
    Metric met = metric(GroupKind::Orthogonal, 3);
    std::string tfile = write_file("ginv.json", tensor_to_json(met.g_inv).dump());
    std::string out;
    CHECK(run("project --kind O --dim 3 --tensor " + tfile, &out) == 0);
    CHECK(tensor_from_json(json::parse(out)) == met.g_inv);

    // odd degree projects to zero
    Tensor e1 = Tensor::basis_vector(2, 0);
    std::string ofile = write_file("e1.json", tensor_to_json(e1).dump());
    CHECK(run("project --kind Sp --dim 2 --tensor " + ofile, &out) == 0);
    CHECK(tensor_from_json(json::parse(out)).is_zero());
}

TEST_CASE("fg subcommands") {
    std::string one = write_file("one.json", R"(["1","1","1","1","1","1"])");
    std::string out;
    CHECK(run("fg fourier --group s3 --irreps s3 --fn " + one, &out) == 0);
    json j = json::parse(out);
    CHECK(j["blocks"][0][0][0] == "1");
    CHECK(j["blocks"][1][0][0] == "0");
    CHECK(j["blocks"][2][0][0] == "0");

    std::string sign = write_file("sign.json", R"(["1","-1","-1","-1","1","1"])");
    CHECK(run("fg parseval --group s3 --irreps s3 --fn " + sign + " --fn2 " + sign, &out) == 0);
    j = json::parse(out);
    CHECK(j["equal"] == true);
    CHECK(j["lhs"] == "1");

    CHECK(run("fg convolve --group s3 --irreps s3 --fn " + sign + " --fn2 " + one, &out) == 0);
    for (const auto& v : json::parse(out)) CHECK(v == "0");

    std::string chireg = write_file("chireg.json", R"(["6","0","0","0","0","0"])");
    CHECK(run("fg poisson --group s3 --irreps s3 --fn " + chireg + " --subgroup 0,4,5", &out) ==
          0);
    j = json::parse(out);
    CHECK(j["lhs"] == "2");
    CHECK(j["rhs"] == "2");
    CHECK(j["equal"] == true);

    CHECK(run("fg project --group s3 --irreps s3 --rep regular --index 2", &out) == 0);
    CHECK(json::parse(out)["rank"] == 4);
}

TEST_CASE("INVINT_MAX_DIM raises the operator bound") {
    // det_5 needs the Cayley operator at n=5, above the default bound of 4
    std::string det5 = write_file("det5.json", poly_to_json(poly_det(5)).dump());
    std::string out;
    CHECK(run("gl-integral --n 5 --poly " + det5 + " --det-power 1", &out) == 1);
    CHECK(out.find("INVINT_MAX_DIM") != std::string::npos);
    std::string cmd = "INVINT_MAX_DIM=5 " + std::string(INVINT_CLI_PATH) +
                      " gl-integral --n 5 --poly " + det5 + " --det-power 1 > " + work_dir() +
                      "/env_out.txt 2>&1";
    CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    std::ifstream f(work_dir() + "/env_out.txt");
    std::string v;
    f >> v;
    CHECK(v == "1");
}

TEST_CASE("exit codes") {
    std::string out;
    // usage errors
    CHECK(run("no-such-command", &out) == 2);
    CHECK(run("sl-dim --n 2", &out) == 2);                 // missing required
    CHECK(run("sl-dim --n 2 --m 2 --bogus 1", &out) == 2); // unknown flag
    // domain errors
    CHECK(run("gl-integral --n 2 --poly /nonexistent.json --det-power 1", &out) == 1);
    CHECK(out.find("/nonexistent.json") != std::string::npos);
    std::string bad = write_file("bad.json", "{not json");
    CHECK(run("gl-integral --n 2 --poly " + bad + " --det-power 1", &out) == 1);
    CHECK(out.find("bad.json") != std::string::npos);
    std::string det2 = write_file("det2.json", poly_to_json(poly_det(2)).dump());
    CHECK(run("gl-integral --n 3 --poly " + det2 + " --det-power 1", &out) == 1);
    CHECK(run("weingarten --kind X --dim 3 --degree 1", &out) == 1);
    CHECK(run("weingarten --kind Sp --dim 3 --degree 1", &out) == 1);  // odd symplectic dim
    // help exits 0
    CHECK(run("--help", &out) == 0);
}
