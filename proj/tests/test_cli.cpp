#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "detkit/cli.hpp"
#include "detkit/document.hpp"

using namespace detkit;

namespace {

int run(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream f(p);
    f << content;
    return p.string();
}

const char* kExample31Doc =
    "# the 2x2 fixture over Z\n"
    "ring Z\n"
    "dim 2\n"
    "matrix A = [[1,0],[0,0]]\n"
    "matrix X = [[0,1],[1,0]]\n"
    "matrix B = [[1,1],[0,0]]\n";

}  // namespace

TEST_CASE("document parsing") {
    InputDocument doc = parse_document(kExample31Doc);
    CHECK(doc.ring->description() == "Z");
    CHECK(doc.n == 2);
    REQUIRE(doc.matrices.size() == 3);
    CHECK(doc.matrices[0].first == "A");
    CHECK(doc.matrices[0].second.to_string() == "[[1, 0], [0, 0]]");

    InputDocument poly = parse_document(
        "ring Poly x y\ndim 2\nmatrix M = [[x, x*y - 1], [0, y^2]]\nscalar c = 3\n");
    CHECK(poly.ring->description() == "Z[x,y]");
    CHECK(poly.matrices[0].second.at(0, 1).to_string() == "x*y - 1");
    CHECK(poly.scalars[0].second.to_string() == "3");

    InputDocument generic = parse_document("ring Poly s\ndim 2\nmatrix B = generic\n");
    CHECK(generic.ring->description() == "Z[s,b_1_1,b_1_2,b_2_1,b_2_2]");
    CHECK(generic.matrices[0].second.at(1, 0).to_string() == "b_2_1");

    InputDocument zmod = parse_document("ring Zmod 6\ndim 1\nmatrix A = [[11]]\n");
    CHECK(zmod.matrices[0].second.at(0, 0).to_string() == "5");

    InputDocument frac = parse_document("ring Frac x\ndim 1\nmatrix A = [[x]]\n");
    CHECK(frac.ring->description() == "Frac(Z[x])");
}

TEST_CASE("document errors") {
    CHECK_THROWS_AS(parse_document("dim 2\n"), DocumentError);
    CHECK_THROWS_AS(parse_document("ring Z\n"), DocumentError);
    CHECK_THROWS_AS(parse_document("ring Z\ndim 2\nmatrix A = [[1,2],[3,4],[5,6]]\n"),
                    DocumentError);
    CHECK_THROWS_AS(parse_document("ring Z\ndim 2\nmatrix A = generic\n"), DocumentError);
    CHECK_THROWS_AS(parse_document("ring Bogus\ndim 1\n"), DocumentError);
    CHECK_THROWS_AS(parse_document("ring Z\ndim 2\nmatrix A = [[1,0],[0,0]]\nmatrix A = [[1,0],[0,0]]\n"),
                    DocumentError);
    CHECK_THROWS_AS(parse_document("ring Poly x\ndim 1\nscalar x = 3\n"), DocumentError);
    CHECK_THROWS_AS(parse_document("ring Z\ndim 1\nmatrix A = [[y]]\n"), DocumentError);
    CHECK_THROWS_AS(parse_document("ring Poly x x\ndim 1\nmatrix A = [[x]]\n"), DocumentError);
    // a declared variable colliding with a generic matrix entry name
    CHECK_THROWS_AS(parse_document("ring Poly b_1_1\ndim 2\nmatrix B = generic\n"), DocumentError);
    try {
        parse_document("ring Z\ndim 2\nmatrix A = [[1,0],[0,0]\n");
        FAIL("expected an exception");
    } catch (const DocumentError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("cli verify: true, false, and error exits") {
    std::string doc31 = write_temp("detkit_t1.doc", kExample31Doc);

    std::string out;
    CHECK(run({"verify", "det(A+B-A*X*B) == det(A+B-B*X*A)", "--input", doc31}, &out) == 0);
    CHECK(out.find("result: true") != std::string::npos);

    CHECK(run({"verify", "tr(A+B-A*X*B) == tr(A+B-B*X*A)", "--input", doc31}, &out) == 1);
    CHECK(out.find("result: false") != std::string::npos);

    std::string err;
    CHECK(run({"verify", "A+", "--input", doc31}, &out, &err) == 2);
    CHECK(err.find("offset") != std::string::npos);
    CHECK(run({"verify", "det(I)==1", "--input", "/nonexistent/file.doc"}, &out, &err) == 2);
    CHECK(run({"verify", "det(Unbound)==1", "--input", doc31}, &out, &err) == 2);

    // value (no equality) prints and exits 0
    CHECK(run({"verify", "det(A+B-A*X*B)", "--input", doc31}, &out) == 0);
    CHECK(out.find("value: 0") != std::string::npos);

    std::string doc_empty = write_temp("detkit_t2.doc", "ring Z\ndim 3\n");
    CHECK(run({"verify", "det(I)==1", "--input", doc_empty}, &out) == 0);
}

TEST_CASE("cli verify with the trace counterexample document") {
    std::string doc = write_temp("detkit_t3.doc",
                                 "ring Z\n"
                                 "dim 2\n"
                                 "matrix A = [[1,0],[0,0]]\n"
                                 "matrix X = [[0,1],[0,0]]\n"
                                 "matrix B = [[0,0],[1,0]]\n"  // B = s*E21 with s = 1
                                 "scalar s = 1\n");
    std::string out;
    CHECK(run({"verify", "tr(A*X*B) == tr(B*X*A)", "--input", doc}, &out) == 1);
    CHECK(run({"verify", "tr(A*X*B) - tr(B*X*A) == s", "--input", doc}, &out) == 0);
}

TEST_CASE("cli examples") {
    std::string out;
    CHECK(run({"examples", "--no-timing"}, &out) == 0);
    CHECK(out.find("overall: PASS") != std::string::npos);
    CHECK(out.find("example31") != std::string::npos);
    CHECK(out.find("example33") != std::string::npos);
    CHECK(out.find("trace-cx") != std::string::npos);
    CHECK(out.find("phk") != std::string::npos);
    CHECK(out.find("nonequivalence fixture") != std::string::npos);
    CHECK(out.find("r*s + 1") != std::string::npos);   // common det of example33
    CHECK(out.find("r*s + 2") != std::string::npos);   // common trace
    CHECK(out.find("y - 2") != std::string::npos);     // phk first determinant
    CHECK(out.find("do not separate") != std::string::npos);
    CHECK(out.find("elapsed") == std::string::npos);

    // byte-identical reruns with --no-timing
    std::string out2;
    CHECK(run({"examples", "--no-timing"}, &out2) == 0);
    CHECK(out == out2);
}

TEST_CASE("cli prove") {
    std::string out, err;
    CHECK(run({"prove", "ternary-det", "--n", "1", "--no-timing"}, &out) == 0);
    CHECK(run({"prove", "ternary-det", "--n", "2", "--no-timing"}, &out) == 0);
    CHECK(out.find("PASS") != std::string::npos);
    CHECK(run({"prove", "sylvester", "--n", "2", "--no-timing"}, &out) == 0);
    CHECK(run({"prove", "theorem32-charpoly", "--n", "2", "--no-timing"}, &out) == 0);
    CHECK(run({"prove", "fraction-proof", "--n", "1", "--no-timing"}, &out) == 0);

    // budget gate
    CHECK(run({"prove", "ternary-det", "--n", "4"}, &out, &err) == 2);
    CHECK(err.find("--force") != std::string::npos);
    CHECK(run({"prove", "no-such-id", "--n", "2"}, &out, &err) == 2);
    CHECK(run({"prove", "ternary-det", "--n", "0"}, &out, &err) == 2);

    // usage errors from the argument parser
    CHECK(run({"prove"}, &out, &err) == 2);
    CHECK(run({"bogus-command"}, &out, &err) == 2);
}

TEST_CASE("cli witness") {
    std::string doc = write_temp("detkit_t4.doc",
                                 "ring Zmod 6\n"
                                 "dim 2\n"
                                 "matrix A = [[1,2],[3,4]]\n"
                                 "matrix B = [[5,0],[1,2]]\n"
                                 "matrix X = [[2,2],[0,1]]\n");
    std::string out;
    CHECK(run({"witness", "--input", doc}, &out) == 0);
    CHECK(out.find("RowFix2") != std::string::npos);
    CHECK(out.find("RowFix1") != std::string::npos);
    CHECK(out.find("SwapJ") != std::string::npos);
    CHECK(out.find("C_B_inv") != std::string::npos);
    CHECK(out.find("C_X") != std::string::npos);
    CHECK(out.find("C_negA") != std::string::npos);
    CHECK(out.find("det(U) = 1, det(V) = 1") != std::string::npos);
    CHECK(out.find("U*diag(P,I)*V == diag(Q,I): verified") != std::string::npos);

    // invertible A, B over Z/7 also prints the direct witness
    std::string doc7 = write_temp("detkit_t5.doc",
                                  "ring Zmod 7\n"
                                  "dim 2\n"
                                  "matrix A = [[1,2],[3,4]]\n"
                                  "matrix B = [[2,0],[0,3]]\n"
                                  "matrix X = [[1,1],[0,1]]\n");
    CHECK(run({"witness", "--input", doc7}, &out) == 0);
    CHECK(out.find("direct equivalence") != std::string::npos);
    CHECK(out.find("U'*P*V' == Q: verified") != std::string::npos);

    // all-zero triple
    std::string doc0 = write_temp("detkit_t6.doc",
                                  "ring Z\ndim 2\n"
                                  "matrix A = [[0,0],[0,0]]\n"
                                  "matrix B = [[0,0],[0,0]]\n"
                                  "matrix X = [[0,0],[0,0]]\n");
    CHECK(run({"witness", "--input", doc0}, &out) == 0);

    std::string incomplete = write_temp("detkit_t7.doc", "ring Z\ndim 2\nmatrix A = [[1,0],[0,1]]\n");
    std::string err;
    CHECK(run({"witness", "--input", incomplete}, &out, &err) == 2);
    CHECK(err.find("A, B and X") != std::string::npos);
}

TEST_CASE("cli bench") {
    std::string out;
    CHECK(run({"bench", "--n", "2..3", "--ring", "Z", "--trials", "2", "--seed", "42",
               "--no-timing"},
              &out) == 0);
    std::istringstream lines(out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "algorithm,ring,n,trial,nanoseconds,result_digest");
    unsigned rows = 0, zero_ns = 0;
    std::map<std::string, std::vector<std::string>> digests_by_key;
    while (std::getline(lines, line)) {
        ++rows;
        std::vector<std::string> cols;
        std::istringstream ls(line);
        std::string col;
        while (std::getline(ls, col, ',')) cols.push_back(col);
        REQUIRE(cols.size() == 6);
        if (cols[4] == "0") ++zero_ns;
        digests_by_key[cols[2] + ":" + cols[3]].push_back(cols[5]);
    }
    CHECK(rows == 12);  // 3 algorithms x 2 dimensions x 2 trials
    CHECK(zero_ns == 12);
    for (const auto& [key, ds] : digests_by_key) {
        REQUIRE(ds.size() == 3);
        CHECK(ds[0] == ds[1]);
        CHECK(ds[1] == ds[2]);
    }

    // no bareiss rows over Z/6
    CHECK(run({"bench", "--n", "2..2", "--ring", "Z/6", "--trials", "2", "--seed", "1",
               "--no-timing"},
              &out) == 0);
    CHECK(out.find("bareiss") == std::string::npos);
    CHECK(out.find("cofactor,Z/6") != std::string::npos);

    // Z[x] supports all three algorithms
    CHECK(run({"bench", "--n", "2..2", "--ring", "Z[x]", "--trials", "1", "--seed", "1",
               "--no-timing"},
              &out) == 0);
    CHECK(out.find("bareiss,Z[x]") != std::string::npos);

    // deterministic output for identical commands
    std::string out2;
    run({"bench", "--n", "2..3", "--ring", "Z", "--trials", "2", "--seed", "42", "--no-timing"},
        &out2);
    CHECK(run({"bench", "--n", "2..3", "--ring", "Z", "--trials", "2", "--seed", "42",
               "--no-timing"},
              &out) == 0);
    CHECK(out == out2);

    std::string err;
    CHECK(run({"bench", "--n", "oops", "--ring", "Z"}, &out, &err) == 2);
    CHECK(run({"bench", "--n", "2..3", "--ring", "GF(4)"}, &out, &err) == 2);
}

TEST_CASE("cli prove output is deterministic with --no-timing") {
    std::string a, b;
    CHECK(run({"prove", "sylvester", "--n", "2", "--no-timing"}, &a) == 0);
    CHECK(run({"prove", "sylvester", "--n", "2", "--no-timing"}, &b) == 0);
    CHECK(a == b);
    CHECK(a.find("elapsed") == std::string::npos);
}

TEST_CASE("cli examples honors the evaluation range flags") {
    std::string out;
    CHECK(run({"examples", "--no-timing", "--eval-min", "-2", "--eval-max", "2"}, &out) == 0);
    CHECK(out.find("[-2, 2]") != std::string::npos);
}

TEST_CASE("cli help exits zero") {
    std::string out;
    CHECK(run({"--help"}, &out) == 0);
    CHECK(out.find("prove") != std::string::npos);
}
