#include "catch2/catch_amalgamated.hpp"

#include "gog/matrix.hpp"
#include "gog/smith.hpp"

using namespace gog;

namespace {

// Check D = U A V with unimodular U, V and a divisibility chain on the diagonal.
void check_snf(const IntMatrix& a) {
    SnfResult s = smith_normal_form(a);
    REQUIRE((s.U * a * s.V) == s.D);
    REQUIRE((determinant(s.U) == 1 || determinant(s.U) == -1));
    REQUIRE((determinant(s.V) == 1 || determinant(s.V) == -1));
    const std::size_t n = std::min(s.D.rows(), s.D.cols());
    for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j)
            if (i != j) REQUIRE(s.D(i, j) == 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        REQUIRE(s.D(i, i) >= 0);
        if (s.D(i, i) != 0) REQUIRE(s.D(i + 1, i + 1) % s.D(i, i) == 0);
    }
}

}  // namespace

TEST_CASE("smith normal form of known matrices") {
    {
        SnfResult s = smith_normal_form(IntMatrix{{2, 0}, {0, 4}});
        REQUIRE(s.D(0, 0) == 2);
        REQUIRE(s.D(1, 1) == 4);
    }
    {
        // det 4, gcd of entries 1: invariant factors 1, 4.
        SnfResult s = smith_normal_form(IntMatrix{{2, 1}, {0, 2}});
        REQUIRE(s.D(0, 0) == 1);
        REQUIRE(s.D(1, 1) == 4);
    }
    {
        // Classic example with a nontrivial chain.
        SnfResult s = smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
        REQUIRE(s.D(0, 0) == 2);
        REQUIRE(s.D(1, 1) == 6);
        REQUIRE(s.D(2, 2) == 12);
    }
    check_snf(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    check_snf(IntMatrix{{1, 2, 3}, {4, 5, 6}});
    check_snf(IntMatrix{{0, 0}, {0, 0}});
    check_snf(IntMatrix{{6, 10}, {15, 4}, {1, 1}});
    {
        // Regression: this sign pattern once drove the elimination into a
        // Fibonacci blow-up because the nearest-quotient rounding stepped the
        // wrong way for negative divisors.
        IntMatrix fib{{-2, 12, 30, -40}, {0, 4, 10, -10}, {5, -36, -90, 110}, {0, -3, -10, 10}};
        SnfResult s = smith_normal_form(fib);
        REQUIRE(s.invariant_factors == std::vector<Int>{1, 1, 10, 10});
        check_snf(fib);
    }
}

TEST_CASE("rounded division minimizes the remainder for every sign pattern") {
    for (long a : {0L, 1L, 7L, -7L, 8L, -8L, 433494437L, -433494437L})
        for (long b : {3L, -3L, 5L, -5L, 2L, -2L, 701408733L, -701408733L}) {
            Int q = round_div(Int(a), Int(b));
            REQUIRE(2 * abs(Int(a) - q * Int(b)) <= abs(Int(b)));
        }
}

TEST_CASE("cokernel drops unit factors and reports rank data") {
    CokernelResult c = cokernel(IntMatrix{{2, 1}, {0, 2}});
    REQUIRE(c.group.invariant_factors == std::vector<Int>{4});
    REQUIRE(c.group.order() == 4);

    CokernelResult t = cokernel(IntMatrix::identity(3));
    REQUIRE(t.group.trivial());
    REQUIRE(t.group.str() == "trivial");

    CokernelResult z = cokernel(IntMatrix{{2, 0}, {0, 4}});
    REQUIRE(z.group.str() == "2 4");
}

TEST_CASE("lattice quotient computes the index group") {
    // <(2,2),(0,4)> inside Z^2 has index 8 with invariant factors 2, 4.
    FiniteAbelianGroup g =
        lattice_quotient(IntMatrix::identity(2), IntMatrix{{2, 0}, {2, 4}});
    REQUIRE(g.order() == 8);
    REQUIRE(g.str() == "2 4");

    // 4Z^2 in Z^2.
    FiniteAbelianGroup h = lattice_quotient(IntMatrix::identity(2), IntMatrix{{4, 0}, {0, 4}});
    REQUIRE(h.str() == "4 4");

    // Equal lattices give the trivial group even with redundant generators.
    FiniteAbelianGroup e = lattice_quotient(IntMatrix{{1, 0, 1}, {0, 1, 1}},
                                            IntMatrix::identity(2));
    REQUIRE(e.trivial());

    REQUIRE(lattice_index(IntMatrix::identity(2), IntMatrix{{2, 0}, {2, 4}}) == 8);
}

TEST_CASE("lattice quotient rejects non-sublattices and rank mismatches") {
    // <(1,1)> is not a finite-index sublattice of Z^2.
    REQUIRE_THROWS_AS(lattice_quotient(IntMatrix::identity(2), IntMatrix{{1}, {1}}),
                      RankMismatch);
    // (1,0) scaled by 1/2 is not in the big lattice <(2,0),(0,1)>.
    REQUIRE_THROWS_AS(lattice_quotient(IntMatrix{{2, 0}, {0, 1}}, IntMatrix{{1, 0}, {0, 1}}),
                      NotASublattice);
}
