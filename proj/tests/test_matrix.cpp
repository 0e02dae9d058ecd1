#include "catch2/catch_amalgamated.hpp"

#include "gog/matrix.hpp"
#include "gog/smith.hpp"

using namespace gog;

TEST_CASE("matrix construction and arithmetic") {
    IntMatrix a{{1, 2}, {3, 4}};
    REQUIRE(a.rows() == 2);
    REQUIRE(a.cols() == 2);
    REQUIRE(a(0, 1) == 2);

    IntMatrix i2 = IntMatrix::identity(2);
    REQUIRE((a * i2) == a);
    REQUIRE((i2 * a) == a);

    IntMatrix b{{0, 1}, {1, 0}};
    IntMatrix ab = a * b;
    REQUIRE(ab(0, 0) == 2);
    REQUIRE(ab(0, 1) == 1);
    REQUIRE(ab(1, 0) == 4);
    REQUIRE(ab(1, 1) == 3);
}

TEST_CASE("determinant of known matrices") {
    REQUIRE(determinant(IntMatrix::identity(3)) == 1);
    REQUIRE(determinant(IntMatrix{{2, 0}, {0, 3}}) == 6);
    REQUIRE(determinant(IntMatrix{{1, 2}, {3, 4}}) == -2);
    // Vandermonde on 1,2,3: (2-1)(3-1)(3-2) = 2.
    REQUIRE(determinant(IntMatrix{{1, 1, 1}, {1, 2, 3}, {1, 4, 9}}) == 2);
    // Singular.
    REQUIRE(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("adjugate identity A adj(A) = det(A) I") {
    IntMatrix a{{3, 1, -2}, {0, 2, 5}, {-1, 4, 1}};
    Int d = determinant(a);
    IntMatrix prod = a * adjugate(a);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) REQUIRE(prod(i, j) == (i == j ? d : Int(0)));
}

TEST_CASE("rank over the rationals") {
    REQUIRE(rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
    REQUIRE(rank(IntMatrix{{1, 2}, {3, 4}}) == 2);
    REQUIRE(rank(IntMatrix(3, 3)) == 0);
}

TEST_CASE("integer kernel basis") {
    // x + y + z = 0 has kernel rank 2; every returned column must be killed.
    IntMatrix a{{1, 1, 1}};
    IntMatrix k = integer_kernel_basis(a);
    REQUIRE(k.cols() == 2);
    for (std::size_t j = 0; j < k.cols(); ++j) {
        Int s = 0;
        for (std::size_t i = 0; i < 3; ++i) s += k(i, j);
        REQUIRE(s == 0);
    }
    // The kernel lattice must be saturated: (1,-1,0) and (0,1,-1) solve the
    // equation, so the column span must contain them.
    RatMatrix coords = solve_in_column_span(to_rational(k), to_rational(IntMatrix{{1, 0}, {-1, 1}, {0, -1}}));
    for (std::size_t i = 0; i < coords.rows(); ++i)
        for (std::size_t j = 0; j < coords.cols(); ++j) REQUIRE(is_integer(coords(i, j)));
}

TEST_CASE("solve_in_column_span rejects vectors outside the span") {
    IntMatrix w{{1, 0}, {0, 1}, {0, 0}};
    REQUIRE_THROWS_AS(solve_in_column_span(to_rational(w), to_rational(IntMatrix{{0}, {0}, {1}})),
                      Error);
}
