#include <catch2/catch_amalgamated.hpp>

#include <bredon/ideal.hpp>

using namespace bredon;

TEST_CASE("quotients of A[h]/I_1 at the spec bidegrees")
{
    Ideal I1 = i_odd(1);  // <e^3, e h, h^2>
    REQUIRE(quotient_at(I1, {2, 1}).group == FgAbGroup{1, {}});  // basis h
    REQUIRE(quotient_at(I1, {1, 1}).group == FgAbGroup{0, {2}}); // basis e
    REQUIRE(quotient_at(I1, {3, 3}).group.is_zero());            // e^3 dies
}

TEST_CASE("normal forms against I_1")
{
    Ideal I1 = i_odd(1);
    const AlgebraSpec* a = alg_A_h();
    REQUIRE(normal_form(parse_poly(*a, "h^2"), I1).is_zero());
    REQUIRE(normal_form(parse_poly(*a, "e"), I1) == parse_poly(*a, "e"));
    REQUIRE(normal_form(parse_poly(*a, "e^3 + e*h"), I1).is_zero());
}

TEST_CASE("ideal_span degree filter: J_1 at (1,1)")
{
    Ideal J1 = j_ideal(1);
    // f_1 = e^3 sits in degree (3,3) and contributes nothing here, but the
    // generator tau x - e itself is bidegree (1,1): the span is its line and
    // the quotient collapses tau x onto e.
    QuotientPiece q = quotient_at(J1, {1, 1});
    REQUIRE(q.span.span.generators.size() == 1);
    REQUIRE(q.group == FgAbGroup{0, {2}});
}

TEST_CASE("ideal_equal: trivial cases and a strict inclusion witness")
{
    const AlgebraSpec* a = alg_A_h();
    Ideal h1(a, {Poly::var(a, "h")}, "<h>");
    Ideal h2(a, {Poly::var(a, "h").pow(2)}, "<h^2>");
    BidegreeWindow w{0, 6, -4, 6};
    REQUIRE(ideal_equal(h1, h1, w).equal);
    IdealEqualResult r = ideal_equal(h1, h2, w);
    REQUIRE(!r.equal);
    // scan order hits the tau-negative twist of h first
    REQUIRE(r.first_diff == BiDegree{2, -3});
    REQUIRE(r.witness == parse_poly(*a, "h*t^-2"));
    REQUIRE(!normal_form(r.witness, h2).is_zero());
    REQUIRE(normal_form(r.witness, h1).is_zero());
}

TEST_CASE("Prop 4.8.ii instance n = 2: J_2 + <e> has the stated generators")
{
    const AlgebraSpec* a = alg_A_hx(2);
    Ideal J2 = j_ideal(2);
    std::vector<Poly> left = J2.gens;
    left.push_back(Poly::var(a, "e"));
    Ideal lhs(a, left, "J_2+<e>");
    // m = 1, delta = 0: <e, h x, h^2 + tau^2 x^2>
    Ideal rhs(a,
              {Poly::var(a, "e"), parse_poly(*a, "h*x"), parse_poly(*a, "h^2 + t^2*x^2")},
              "stated");
    BidegreeWindow w{0, 8, -4, 6};
    IdealEqualResult r = ideal_equal(lhs, rhs, w);
    INFO("first diff at " << r.first_diff.str() << " witness " << r.witness.str());
    REQUIRE(r.equal);
}

TEST_CASE("builders produce the printed generator lists")
{
    Ideal jb = jbar(1);
    const AlgebraSpec* w = alg_F2_w_laurent();
    REQUIRE(jb.gens[0] == parse_poly(*w, "w1^2 + w2"));
    REQUIRE(jb.gens[1] == parse_poly(*w, "w2*w1"));

    Ideal j1 = j_ideal(1);
    const AlgebraSpec* a1 = alg_A_hx(1);
    REQUIRE(j1.gens[0] == parse_poly(*a1, "t*x - e"));  // tau x - f_0
    REQUIRE(j1.gens[1] == parse_poly(*a1, "e^3"));
    REQUIRE(j1.gens[2] == parse_poly(*a1, "h*x"));
    REQUIRE(j1.gens[3] == parse_poly(*a1, "h^2"));

    Ideal c2 = chow_ideal(2);  // m = 1, delta = 0
    const AlgebraSpec* ch = alg_chow(1);
    REQUIRE(c2.gens[0] == parse_poly(*ch, "h^2 - 2*h*phi"));
    REQUIRE(c2.gens[1] == parse_poly(*ch, "phi^2"));
}

TEST_CASE("J_n is the A-part of Jhat_n (Remark 4.6 realizes the intersection)")
{
    // For each bidegree in a window: span(J_n) equals the pullback of
    // span(Jhat_n) cap iota(A[h,x]) under tau |-> xi^2.
    for (int n = 1; n <= 4; ++n) {
        Ideal J = j_ideal(n);
        Ideal Jh = jhat(n);
        const AlgebraSpec* ahx = alg_A_hx(n);
        const AlgebraSpec* rn = alg_R(n);
        BidegreeWindow w{0, 2 * n + 2, -n - 2, n + 2};
        for (int p = w.p_min; p <= w.p_max; ++p)
            for (int q = w.q_min; q <= w.q_max; ++q) {
                BiDegree d{p, q};
                SpanResult sj = ideal_span(J, d);
                SpanResult sh = ideal_span(Jh, d);
                if (sj.basis.dim() == 0) continue;
                // iota embeds the A-monomials among the R_n monomials
                PieceBasis rb = sh.basis;
                IntLattice image;
                image.ambient_rank = rb.dim();
                std::vector<int> a_col;  // columns of iota-images
                for (const auto& mono : sj.basis.monos) {
                    // e^a t^b h^j x^k -> e^a xi^{2b} h^j x^k
                    std::vector<int> re = {mono[0], 2 * mono[1], mono[2], mono[3]};
                    auto it = rb.index.find(re);
                    REQUIRE(it != rb.index.end());
                    a_col.push_back(it->second);
                }
                // lattice of R-piece vectors supported on iota-columns
                IntLattice coord;
                coord.ambient_rank = rb.dim();
                for (int c : a_col) {
                    IntVec v(rb.dim(), 0);
                    v[c] = 1;
                    coord.generators.push_back(v);
                }
                IntLattice meet = lattice_intersect(sh.full, coord);
                // express in the A-piece coordinates and compare spans
                IntLattice pulled;
                pulled.ambient_rank = sj.basis.dim();
                for (const auto& g : meet.generators) {
                    IntVec v(sj.basis.dim(), 0);
                    for (int i = 0; i < (int)a_col.size(); ++i) v[i] = g[a_col[i]];
                    pulled.generators.push_back(v);
                }
                HermiteResult hj = hermite_normal_form(sj.full.matrix());
                HermiteResult hp = hermite_normal_form(pulled.matrix());
                for (const auto& g : pulled.generators) REQUIRE(hnf_contains(hj, g));
                for (const auto& g : sj.full.generators) REQUIRE(hnf_contains(hp, g));
            }
    }
}

TEST_CASE("Facts 4.8(a): w2^k Jbar_n sits inside Jbar_{n+k} inside Jbar_n")
{
    const AlgebraSpec* w = alg_F2_w_laurent();
    Poly w2 = Poly::var(w, "w2");
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= 4; ++k) {
            Ideal big = jbar(n);
            Ideal small = jbar(n + k);
            for (const Poly& g : big.gens) {
                Poly el = w2.pow(k) * g;
                REQUIRE(normal_form(el, small).is_zero());
            }
            for (const Poly& g : small.gens) REQUIRE(normal_form(g, big).is_zero());
        }
}
