#include <doctest.h>

#include <cstring>

#include "pencil/io.hpp"
#include "pencil/models.hpp"
#include "support/generators.hpp"

using namespace pencil;

namespace {

bool bit_equal(const Matrix& X, const Matrix& Y) {
    if (X.rows() != Y.rows() || X.cols() != Y.cols()) {
        return false;
    }
    return std::memcmp(X.data(), Y.data(),
                       sizeof(Complex) * static_cast<std::size_t>(X.size())) == 0;
}

}  // namespace

TEST_CASE("minimal pencil file parses") {
    const Pencil p = parse_pencil("PENCIL 1\ndim 1\nE\n1:0\nA\n-1:0");
    CHECK(p.dim() == 1);
    CHECK(p.E()(0, 0) == Complex(1, 0));
    CHECK(p.A()(0, 0) == Complex(-1, 0));
}

TEST_CASE("comments, blank lines and scientific notation are accepted") {
    const std::string text =
        "# a comment\n"
        "PENCIL 1\n"
        "\n"
        "dim 2\n"
        "E\n"
        "1.5:0 -3e2:1.0\n"
        "# mid-section comment\n"
        "0:0 2:0\n"
        "A\n"
        "-1:0 0:0\n"
        "0:0 -1:0\n";
    const Pencil p = parse_pencil(text);
    CHECK(p.E()(0, 1) == Complex(-300.0, 1.0));
    CHECK(p.E()(0, 0) == Complex(1.5, 0.0));
}

TEST_CASE("comma decimals are rejected with line and column") {
    const std::string text = "PENCIL 1\ndim 1\nE\n1,5:0\nA\n1:0\n";
    try {
        parse_pencil(text);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
        CHECK(e.column() == 2);
    }
}

TEST_CASE("missing A section names the expected marker") {
    const std::string text = "PENCIL 1\ndim 1\nE\n1:0\n";
    try {
        parse_pencil(text);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("'A'") != std::string::npos);
    }
}

TEST_CASE("malformed inputs") {
    CHECK_THROWS_AS(parse_pencil("PENCIL 2\ndim 1\nE\n1:0\nA\n1:0\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_pencil("PENCIL 1\ndim 0\nE\nA\n"), ParseError);
    CHECK_THROWS_AS(parse_pencil("PENCIL 1\ndim 1\nE\n1:0 2:0\nA\n1:0\n"),
                    ParseError);  // extra entry in a row
    CHECK_THROWS_AS(
        parse_pencil("PENCIL 1\ndim 2\nE\n1:0\n2:0 0:0\nA\n1:0 0:0\n0:0 1:0\n"),
        DimensionMismatch);  // short row
    CHECK_THROWS_AS(parse_pencil("PENCIL 1\ndim 1\nE\ninf:0\nA\n1:0\n"),
                    ParseError);  // non-finite entry
    CHECK_THROWS_AS(
        parse_pencil("PENCIL 1\ndim 1\nE\n1:0\nA\n1:0\ntrailing\n"),
        ParseError);
}

TEST_CASE("pencil round-trip is bit exact") {
    std::mt19937_64 rng(127);
    for (int trial = 0; trial < 10; ++trial) {
        const Index n = 1 + trial % 5;
        const Matrix E = testsupport::random_gaussian(n, n, rng) * 100.0;
        const Matrix A = testsupport::random_gaussian(n, n, rng) * 1e-3;
        const Pencil p(E, A);
        const std::string text = print_pencil(p);
        const Pencil q = parse_pencil(text);
        CHECK(bit_equal(p.E(), q.E()));
        CHECK(bit_equal(p.A(), q.A()));
        CHECK(print_pencil(q) == text);
    }
}

TEST_CASE("matrix format round-trips rectangles") {
    std::mt19937_64 rng(131);
    const Matrix M = testsupport::random_gaussian(3, 5, rng);
    const Matrix back = parse_matrix(print_matrix(M));
    CHECK(bit_equal(M, back));
    CHECK_THROWS_AS(parse_matrix("MATRIX 1\nrows 1\n1:0\n"), ParseError);
}

TEST_CASE("vector format") {
    Vector v(3);
    v << Complex(1, -2), Complex(0.5, 0), Complex(-3e-5, 4);
    const Vector back = parse_vector(print_vector(v));
    REQUIRE(back.size() == 3);
    for (Index i = 0; i < 3; ++i) {
        CHECK(back(i) == v(i));
    }
    CHECK_THROWS_AS(parse_vector("1:0 2:0\n"), ParseError);

    const Vector commented = parse_vector("# header\n1:0\n\n2:-1\n");
    REQUIRE(commented.size() == 2);
    CHECK(commented(1) == Complex(2, -1));
}

TEST_CASE("format_double produces shortest round-trip forms") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-3.0) == "-3");
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_complex(Complex(0, 0)) == "0:0");
}

TEST_CASE("trajectory CSV layout") {
    Trajectory traj;
    traj.times = {0.0, 0.5};
    Vector s0(2), s1(2);
    s0 << Complex(1, 0), Complex(0, -1);
    s1 << Complex(0.5, 0), Complex(0, -0.5);
    traj.states = {s0, s1};
    traj.ex_norms = {1.0, 0.5};
    const std::string csv = trajectory_csv(traj);
    CHECK(csv ==
          "t,norm_Ex,x1_re,x1_im,x2_re,x2_im\n"
          "0,1,1,0,0,-1\n"
          "0.5,0.5,0.5,0,0,-0.5\n");
}
