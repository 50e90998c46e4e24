#include <catch2/catch_amalgamated.hpp>

#include <bredon/lattice.hpp>
#include <bredon/snf.hpp>

#include <random>

using namespace bredon;

namespace {

IntMat make(std::initializer_list<std::initializer_list<long long>> rows)
{
    IntMat m;
    for (auto& r : rows) {
        IntVec v;
        for (auto x : r) v.push_back(Int(x));
        m.append_row(std::move(v));
    }
    return m;
}

IntMat diag_matrix(const SmithResult& s, int rows, int cols)
{
    IntMat d(rows, cols);
    for (int i = 0; i < (int)s.diag.size(); ++i) d[i][i] = s.diag[i];
    return d;
}

}  // namespace

TEST_CASE("smith normal form on the spec examples")
{
    // [[2,0],[0,3]] ~ diag(1,6); U*M*V checked exactly.
    IntMat m = make({{2, 0}, {0, 3}});
    SmithResult s = smith_normal_form(m);
    REQUIRE(s.diag == std::vector<Int>{1, 6});
    REQUIRE(s.u * m * s.v == diag_matrix(s, 2, 2));

    SmithResult z = smith_normal_form(make({{0}}));
    REQUIRE(z.diag == std::vector<Int>{0});

    SmithResult id = smith_normal_form(make({{1, 0}, {0, 1}}));
    REQUIRE(id.diag == std::vector<Int>{1, 1});
}

TEST_CASE("smith transforms stay unimodular and exact on random matrices")
{
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> dist(-7, 7);
    for (int trial = 0; trial < 40; ++trial) {
        int r = 1 + (int)(rng() % 5), c = 1 + (int)(rng() % 5);
        IntMat m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m[i][j] = dist(rng);
        SmithResult s = smith_normal_form(m);
        REQUIRE(s.u * m * s.v == diag_matrix(s, r, c));
        for (size_t i = 1; i < s.diag.size(); ++i) {
            if (s.diag[i] == 0) continue;
            REQUIRE(s.diag[i] % s.diag[i - 1] == 0);
        }
        // |det U| = |det V| = 1 via Smith of the transforms themselves
        SmithResult su = smith_normal_form(s.u);
        for (const Int& d : su.diag) REQUIRE(d == 1);
        SmithResult sv = smith_normal_form(s.v);
        for (const Int& d : sv.diag) REQUIRE(d == 1);
    }
}

TEST_CASE("hermite reduction decides lattice membership")
{
    IntMat m = make({{2, 1}, {0, 3}});
    HermiteResult h = hermite_normal_form(m);
    REQUIRE(h.rank == 2);
    REQUIRE(hnf_contains(h, {2, 1}));
    REQUIRE(hnf_contains(h, {2, 4}));
    REQUIRE(!hnf_contains(h, {1, 0}));
    auto sol = solve_left(h, {4, 5});
    REQUIRE(sol.has_value());
    IntVec check(2, 0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) check[j] += (*sol)[i] * m[i][j];
    REQUIRE(check == IntVec{4, 5});
}

TEST_CASE("quotient_group matches the spec examples")
{
    IntLattice z2 = IntLattice::full(2);
    IntLattice sub;
    sub.ambient_rank = 2;
    sub.generators = {{Int(2), Int(0)}};
    FgAbGroup g = quotient_group(z2, sub);
    REQUIRE(g.rank == 1);
    REQUIRE(g.torsion == std::vector<Int>{2});

    IntLattice none;
    none.ambient_rank = 2;
    REQUIRE(quotient_group(z2, none) == FgAbGroup{2, {}});

    IntLattice z1 = IntLattice::full(1);
    IntLattice all;
    all.ambient_rank = 1;
    all.generators = {{Int(1)}};
    REQUIRE(quotient_group(z1, all) == FgAbGroup{0, {}});

    IntLattice two;
    two.ambient_rank = 1;
    two.generators = {{Int(2)}};
    IntLattice one;
    one.ambient_rank = 1;
    one.generators = {{Int(1)}};
    REQUIRE_THROWS_AS(quotient_group(two, one), std::domain_error);
}

TEST_CASE("quotient_group is invariant under change of generating sets")
{
    IntLattice a1;
    a1.ambient_rank = 3;
    a1.generators = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    IntLattice a2;
    a2.ambient_rank = 3;
    a2.generators = {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}, {1, 2, 2}};
    IntLattice s1;
    s1.ambient_rank = 3;
    s1.generators = {{2, 0, 0}, {0, 3, 0}};
    IntLattice s2;
    s2.ambient_rank = 3;
    s2.generators = {{2, 3, 0}, {2, -3, 0}, {4, 3, 0}};
    FgAbGroup g11 = quotient_group(a1, s1);
    FgAbGroup g22 = quotient_group(a2, s2);
    REQUIRE(g11 == g22);
    REQUIRE(g11.rank == 1);
    REQUIRE(g11.torsion == std::vector<Int>{6});
}

TEST_CASE("lattice_intersect: spec examples and containment properties")
{
    IntLattice a, b;
    a.ambient_rank = b.ambient_rank = 1;
    a.generators = {{Int(2)}};
    b.generators = {{Int(3)}};
    IntLattice c = lattice_intersect(a, b);
    REQUIRE(c.generators.size() == 1);
    REQUIRE(int_abs(c.generators[0][0]) == 6);

    IntLattice f = lattice_intersect(IntLattice::full(2), IntLattice::full(2));
    REQUIRE(quotient_group(IntLattice::full(2), f) == FgAbGroup{0, {}});

    IntLattice d1, d2;
    d1.ambient_rank = d2.ambient_rank = 2;
    d1.generators = {{1, 1}};
    d2.generators = {{1, -1}};
    REQUIRE(lattice_intersect(d1, d2).generators.empty());
}

TEST_CASE("lattice_intersect is maximal among common sublattices")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dist(-4, 4);
    for (int trial = 0; trial < 25; ++trial) {
        IntLattice a, b;
        a.ambient_rank = b.ambient_rank = 3;
        for (int i = 0; i < 2; ++i) {
            a.generators.push_back({dist(rng), dist(rng), dist(rng)});
            b.generators.push_back({dist(rng), dist(rng), dist(rng)});
        }
        IntLattice c = lattice_intersect(a, b);
        for (const auto& g : c.generators) {
            REQUIRE(lattice_contains(a, g));
            REQUIRE(lattice_contains(b, g));
        }
        // random small combinations in both lattices must land in c
        HermiteResult hc = hermite_normal_form(c.matrix());
        for (int k = 0; k < 10; ++k) {
            IntVec v(3, 0);
            for (size_t i = 0; i < a.generators.size(); ++i) {
                Int coef = dist(rng);
                for (int j = 0; j < 3; ++j) v[j] += coef * a.generators[i][j];
            }
            if (lattice_contains(b, v)) REQUIRE(hnf_contains(hc, v));
        }
    }
}

TEST_CASE("saturation finds the torsion closure")
{
    IntLattice l;
    l.ambient_rank = 2;
    l.generators = {{2, 0}};
    IntLattice s = saturate(l);
    REQUIRE(lattice_contains(s, {1, 0}));
    REQUIRE(!lattice_contains(s, {0, 1}));
}
