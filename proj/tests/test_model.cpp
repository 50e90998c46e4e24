#include <catch2/catch_amalgamated.hpp>

#include <bredon/quadric.hpp>

using namespace bredon;

namespace {

// Independent oracle for the anisotropic conic: the orbit space of the free
// conjugation action is the real projective plane, so H^{p,q} is the cellular
// cohomology of RP^2 with Z(q) local coefficients.  The cochain complex of
// the standard one-cell-per-dimension structure is
//     Z --(1-g)--> Z --(1+g)--> Z,  g = (-1)^q,
// and the groups are read off by exact integer reduction.
FgAbGroup conic_oracle(int p, int q)
{
    if (p < 0 || p > 2) return FgAbGroup{};
    int g = (q % 2 == 0) ? 1 : -1;
    Int d0 = 1 - g;  // C^0 -> C^1
    Int d1 = 1 + g;  // C^1 -> C^2
    auto line = [](const Int& k) {
        IntLattice l;
        l.ambient_rank = 1;
        if (k != 0) l.generators.push_back({k});
        return l;
    };
    IntLattice full = IntLattice::full(1);
    IntLattice zero;
    zero.ambient_rank = 1;
    if (p == 0) return quotient_group(d0 == 0 ? full : zero, zero);
    if (p == 1) return quotient_group(d1 == 0 ? full : zero, line(d0));
    return quotient_group(full, line(d1));
}

}  // namespace

TEST_CASE("conic ground truth: the additive model against the RP^2 oracle")
{
    QuadricRing conic(1, 0);
    for (int p = 0; p <= 3; ++p)
        for (int q = -6; q <= 6; ++q) {
            FgAbGroup want = conic_oracle(p, q);
            FgAbGroup got = conic.cohomology_group(p, q);
            INFO("(p,q) = (" << p << "," << q << ") want " << want.str() << " got " << got.str());
            REQUIRE(got == want);
        }
}

TEST_CASE("spec examples for the conic")
{
    QuadricRing conic(1, 0);
    REQUIRE(conic.cohomology_group(2, 1) == FgAbGroup{1, {}});
    REQUIRE(conic.cohomology_group(1, 1) == FgAbGroup{0, {2}});
    REQUIRE(conic.cohomology_group(2, 4) == FgAbGroup{0, {2}});  // e^2 tau-twists
    REQUIRE(conic.cohomology_group(2, 3) == FgAbGroup{1, {}});   // h tau-twists
}

TEST_CASE("presentations as printed")
{
    QuadricRing q1(1, 0);
    Presentation p1 = q1.presentation();
    REQUIRE(p1.base_ring == "A");
    REQUIRE(p1.relations.size() == 3);  // f_1, h f_0, h^2

    QuadricRing q2(2, 0);
    Presentation p2 = q2.presentation();
    REQUIRE(p2.generators.size() == 2);
    REQUIRE(p2.relations.size() == 4);

    QuadricRing q21(2, 1);
    Presentation pa = q21.presentation();
    REQUIRE(pa.base_ring == "B_1");
    REQUIRE(pa.generators[3].second == BiDegree{4, 2});  // deg eta for (2,1)
}

TEST_CASE("multiply: the printed structure constants")
{
    ModelRing m21(2, 1);
    // h.h = 2 eta for (n,s) = (2,1)
    ModelElem h = m21.h_power(1);
    ModelElem hh = m21.multiply(h, h);
    ModelElem want = m21.zero();
    want.etah[0] = BElem::unit(2);
    REQUIRE(hh == want);
    // eta.eta = 0
    REQUIRE(m21.multiply(m21.eta(), m21.eta()).is_zero());

    // t_a t_b = t_{a+b} h^s and t_a x_b = 0, checked on (4,1)
    ModelRing m41(4, 1);
    const AlgebraSpec* ia = m41.interior().alg();
    auto jd = [&](const char* s) { return m41.from_interior(parse_poly(*ia, s)); };
    ModelElem t1 = jd("t^-1"), t2 = jd("t^-2");
    ModelElem lhs = m41.multiply(t1, t2);
    ModelElem rhs = m41.multiply(m41.h_power(1), jd("t^-3"));
    REQUIRE(lhs == rhs);
    REQUIRE(m41.multiply(t1, jd("t^-2*x")).is_zero());
    // h^{r+1} x_a = 0
    REQUIRE(m41.multiply(m41.h_power(1), jd("x")).is_zero());
    // eta j(beta) = 0
    REQUIRE(m41.multiply(m41.eta(), jd("t^-1*h")).is_zero());
}

TEST_CASE("x_a x_b follows the quotient ring, not the misprinted zero")
{
    // For an even interior the relation tau^{m'+1} x^2 = (-1)^{m'} h^{2m'}
    // forces j(x)^2 = (-1)^{m'} 2 tau^{-m'-1} eta h^{s-1}; the blanket
    // x_a x_b = 0 would contradict h^{n-s+1} = 2 eta.
    ModelRing m41(4, 1);
    const AlgebraSpec* ia = m41.interior().alg();
    ModelElem x0 = m41.from_interior(Poly::var(ia, "x"));
    ModelElem sq = m41.multiply(x0, x0);
    ModelElem want = m41.zero();
    want.etah[0] = Int(-1) * two_tau_pow(-2);  // (-1)^{m'} 2 tau^{-2} eta, m' = 1
    REQUIRE(sq == want);
    // tau^2 . x0^2 = -h^4 = -2 eta under the last relation
    ModelElem t2sq = m41.scale(BElem::tau(2), sq);
    ModelElem h4 = m41.h_power(4);
    ModelElem expect_h4 = m41.zero();
    expect_h4.etah[0] = BElem::unit(2);
    REQUIRE(h4 == expect_h4);
    REQUIRE(t2sq == m41.scale(BElem::unit(-1), h4));

    // odd interiors keep x_a x_b = 0 (f h = 0 and 2 eps = 0 kill everything)
    ModelRing m31(3, 1);
    ModelElem x1 = m31.from_interior(Poly::var(m31.interior().alg(), "x"));
    REQUIRE(m31.multiply(x1, x1).is_zero());
}

TEST_CASE("h^{n-s+1} = 2 eta in all the isotropic cases of the acceptance list")
{
    for (auto [n, s] : std::vector<std::pair<int, int>>{
             {2, 1}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {6, 2}, {6, 3}}) {
        ModelRing m(n, s);
        ModelElem lhs = m.h_power(n - s + 1);
        ModelElem want = m.zero();
        want.etah[0] = BElem::unit(2);
        INFO("(n,s)=(" << n << "," << s << ")");
        REQUIRE(lhs == want);
    }
}

TEST_CASE("multiply is associative and bidegree-additive on basis classes")
{
    for (auto [n, s] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 2}}) {
        ModelRing m(n, s);
        const AlgebraSpec* ia = m.interior().alg();
        std::vector<ModelElem> cls;
        for (int k = 0; k <= std::min(n, 3); ++k) cls.push_back(m.h_power(k));
        cls.push_back(m.eta());
        cls.push_back(m.scale(BElem::alpha(), m.one()));
        cls.push_back(m.scale(BElem::theta(), m.one()));
        cls.push_back(m.from_interior(parse_poly(*ia, "x")));
        cls.push_back(m.from_interior(parse_poly(*ia, "t^-1")));
        cls.push_back(m.from_interior(parse_poly(*ia, "e")));
        for (const ModelElem& a : cls)
            for (const ModelElem& b : cls) {
                ModelElem ab = m.multiply(a, b);
                ModelElem ba = m.multiply(b, a);
                REQUIRE(ab == ba);
                for (const ModelElem& c : cls) {
                    ModelElem l = m.multiply(ab, c);
                    ModelElem r = m.multiply(a, m.multiply(b, c));
                    REQUIRE(l == r);
                }
            }
    }
}

TEST_CASE("additive groups against the Theorem B quotients, s = 0")
{
    QuadricRing q2(2, 0);
    REQUIRE(q2.cohomology_group(0, 0) == FgAbGroup{1, {}});
    REQUIRE(q2.cohomology_group(2, 1) == FgAbGroup{2, {}});   // h and tau x
    REQUIRE(q2.cohomology_group(2, -1) == FgAbGroup{2, {}});  // tau^-1 h and x
    REQUIRE(q2.cohomology_group(1, 1) == FgAbGroup{0, {2}});  // eps
}

TEST_CASE("free quotient matches stripped torsion for n <= 4 (spot window)")
{
    for (int n = 1; n <= 4; ++n) {
        BidegreeWindow w{0, 2 * n + 2, -4, n + 3};
        SweepReport rep = free_quotient_consistency(n, w);
        INFO("n=" << n << " at " << rep.first_failure.str() << " " << rep.note);
        REQUIRE(rep.ok);
    }
}

TEST_CASE("odd isomorphism A[h]/I = A[h,x]/J for m <= 2 (spot window)")
{
    for (int m : {1, 2}) {
        BidegreeWindow w{0, 4 * m + 2, -4, 2 * m + 3};
        SweepReport rep = odd_iso_consistency(m, w);
        INFO("m=" << m << " at " << rep.first_failure.str() << " " << rep.note);
        REQUIRE(rep.ok);
    }
}

TEST_CASE("mod 2 consistency for n <= 3 (spot window)")
{
    for (int n = 1; n <= 3; ++n) {
        BidegreeWindow w{0, 2 * n, -4, n + 4};
        SweepReport rep = mod2_consistency(n, w);
        INFO("n=" << n << " at " << rep.first_failure.str() << " " << rep.note);
        REQUIRE(rep.ok);
    }
}

TEST_CASE("grassmannian dimensions for the conic")
{
    REQUIRE(grassmannian_mod2_dim(1, 0, 0) == 1);
    REQUIRE(grassmannian_mod2_dim(1, 1, 0) == 1);
    REQUIRE(grassmannian_mod2_dim(1, 2, 5) == 1);
    REQUIRE(grassmannian_mod2_dim(1, 3, 0) == 0);
}

TEST_CASE("cellular re-basing of Chow presentations")
{
    Presentation p0{"Z", {}, {}};
    REQUIRE(cellular_ring(p0).base_ring == "B");
    Presentation p1{"Z", {{"h", {2, 1}}}, {"h^2"}};
    Presentation out = cellular_ring(p1);
    REQUIRE(out.base_ring == "B");
    REQUIRE(out.relations == std::vector<std::string>{"h^2"});
    Presentation bad{"Z", {{"h", {3, 1}}}, {}};
    REQUIRE_THROWS(cellular_ring(bad));
}
