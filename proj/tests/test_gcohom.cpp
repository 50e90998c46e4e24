#include <catch2/catch_amalgamated.hpp>

#include <bredon/gcohom.hpp>

using namespace bredon;

namespace {

Z2Module trivial_module(int rank)
{
    Z2Module m;
    m.rank = rank;
    m.sigma = IntMat::identity(rank);
    return m;
}

Z2Module sign_module()
{
    Z2Module m;
    m.rank = 1;
    m.sigma = IntMat(1, 1);
    m.sigma[0][0] = -1;
    return m;
}

Z2Module regular_module()
{
    Z2Module m;
    m.rank = 2;
    m.sigma = IntMat(2, 2);
    m.sigma[0][1] = 1;
    m.sigma[1][0] = 1;
    return m;
}

}  // namespace

TEST_CASE("group cohomology of Z/2 from the periodic resolution")
{
    // trivial Z, twist 0
    REQUIRE(z2_cohomology(trivial_module(1), 0, 0) == FgAbGroup{1, {}});
    REQUIRE(z2_cohomology(trivial_module(1), 0, 1).is_zero());
    REQUIRE(z2_cohomology(trivial_module(1), 0, 2) == FgAbGroup{0, {2}});
    // Z(1): twisted
    REQUIRE(z2_cohomology(trivial_module(1), 1, 0).is_zero());
    REQUIRE(z2_cohomology(trivial_module(1), 1, 1) == FgAbGroup{0, {2}});
    REQUIRE(z2_cohomology(trivial_module(1), 1, 2).is_zero());
    // the same through the sign matrix with an untwisted coefficient
    REQUIRE(z2_cohomology(sign_module(), 0, 1) == FgAbGroup{0, {2}});
    // induced module: acyclic in positive degrees
    for (int r = 1; r <= 5; ++r) REQUIRE(z2_cohomology(regular_module(), 0, r).is_zero());
    REQUIRE(z2_cohomology(regular_module(), 0, 0) == FgAbGroup{1, {}});
    // twist composes multiplicatively with sigma
    for (int r = 1; r <= 5; ++r) REQUIRE(z2_cohomology(regular_module(), 1, r).is_zero());
}

TEST_CASE("2-periodicity in r >= 1 and 2-torsion everywhere")
{
    Z2Module mods[] = {trivial_module(1), trivial_module(3), sign_module(), regular_module(),
                       chow_group(4, 2)};
    for (const Z2Module& m : mods)
        for (int twist = 0; twist <= 1; ++twist)
            for (int r = 1; r <= 4; ++r) {
                FgAbGroup a = z2_cohomology(m, twist, r);
                FgAbGroup b = z2_cohomology(m, twist, r + 2);
                REQUIRE(a == b);
                REQUIRE(a.rank == 0);
                for (const Int& d : a.torsion) REQUIRE(d == 2);
            }
}

TEST_CASE("E2 cells of the descent spectral sequence")
{
    // n=2, i=1, j=2, q=1: CH^1 has rank 2 with trivial action, twist 0 -> H^1 = 0
    REQUIRE(e2_term(2, 1, 2, 1).group.is_zero());
    // n=2, i=2, j=2, q=1 -> (Z/2)^2
    REQUIRE(e2_term(2, 2, 2, 1).group == FgAbGroup{0, {2, 2}});
    // odd rows vanish
    for (int j : {1, 3, 5}) REQUIRE(e2_term(2, 1, j, 0).group.is_zero());
    // k > n vanishes
    REQUIRE(e2_term(2, 0, 8, 4).group.is_zero());
}

TEST_CASE("vanishing predicate for the differentials")
{
    REQUIRE(!differential_may_be_nonzero(2));
    REQUIRE(differential_may_be_nonzero(3));
    REQUIRE(!differential_may_be_nonzero(4));
    REQUIRE(!differential_may_be_nonzero(5));
    REQUIRE(!differential_may_be_nonzero(6));
    REQUIRE(differential_may_be_nonzero(7));
}

TEST_CASE("first column ranks")
{
    REQUIRE(e2_first_column_rank(2, 2, 1) == 2);
    REQUIRE(e2_first_column_rank(4, 4, 2) == 1);  // ker(sigma-1) on [[1,1],[0,-1]]
    REQUIRE(e2_first_column_rank(4, 3, 2) == 0);  // odd p
    REQUIRE(e2_first_column_rank(4, 4, 3) == 1);  // odd twist picks the anti-invariant line
}
