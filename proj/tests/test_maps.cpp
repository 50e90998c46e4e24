#include <catch2/catch_amalgamated.hpp>

#include <bredon/ringmap.hpp>

using namespace bredon;

TEST_CASE("variable images of W and q")
{
    RingMap W = map_W(2);
    const AlgebraSpec* s = alg_F2_exi(2);
    const AlgebraSpec* t = alg_F2_w_wn(2);
    REQUIRE(W.apply(Poly::var(s, "e")) == parse_poly(*t, "xi*w1"));
    REQUIRE(W.apply(Poly::var(s, "h")) == parse_poly(*t, "xi*w2"));
    REQUIRE(W.apply(Poly::var(s, "x")) == parse_poly(*t, "xi^-1*wn"));
    REQUIRE(W.degree_preserving());

    RingMap q = map_q(2);
    const AlgebraSpec* wt = alg_F2_w_laurent();
    REQUIRE(q.apply(Poly::var(t, "wn")) == parse_poly(*wt, "w1^2 + w2"));
}

TEST_CASE("Psi(F_n) = xi^n fbar_n")
{
    for (int n = 1; n <= 6; ++n) {
        const AlgebraSpec* rn = alg_R(n);
        Poly F = transport(big_f(n), rn);
        Poly img = apply_psi(n, F);
        const AlgebraSpec* t = alg_F2_w_laurent();
        Poly expected = Poly::var(t, "xi", n) * transport(f_bar(n), t);
        REQUIRE(img == expected);
    }
}

TEST_CASE("pi kills even coefficients only")
{
    RingMap pi = map_pi(3);
    const AlgebraSpec* s = alg_R(3);
    REQUIRE(pi.apply(Poly::unit(s, 2)).is_zero());
    REQUIRE(!pi.apply(Poly::unit(s, 3)).is_zero());
}

TEST_CASE("generators of J_n die in the Grassmannian model (diagram commutes)")
{
    for (int n = 1; n <= 6; ++n) {
        Ideal J = j_ideal(n);
        Ideal Jb = jbar(n);
        for (const Poly& g : J.gens) {
            Poly img = apply_psi_A(n, g);
            REQUIRE(normal_form(img, Jb).is_zero());
        }
    }
}

TEST_CASE("Psi(ghat_4) lands on xi^{4m} beta_n with beta_n in Jbar_n (n = 4)")
{
    Ideal Jh = jhat(4);
    const AlgebraSpec* t = alg_F2_w_laurent();
    Poly img = apply_psi(4, Jh.gens[3]);
    Poly f4 = transport(f_bar(4), t);
    Poly beta = f4 * f4 + Poly::var(t, "w2").pow(4);
    REQUIRE(img == Poly::var(t, "xi", 8) * beta);
    REQUIRE(normal_form(img, jbar(4)).is_zero());
}

TEST_CASE("Lemma 5.3 image tables")
{
    const AlgebraSpec* wt = alg_F2_w_laurent();
    REQUIRE(reduction_image("h", 3) == parse_poly(*wt, "xi*w2"));
    REQUIRE(reduction_image("e", 3) == parse_poly(*wt, "xi*w1"));
    REQUIRE(reduction_image("x", 1) == Poly::var(wt, "xi", -1) * transport(f_bar(1), wt));

    REQUIRE(forgetful_image("x", 3).is_zero());
    const AlgebraSpec* t4 = alg_Z_xi_h_phi(2);
    Poly expect = Poly::var(t4, "xi", -3) * (Poly::var(t4, "h").pow(2) - Int(2) * Poly::var(t4, "phi"));
    REQUIRE(forgetful_image("x", 4) == expect);
    REQUIRE(forgetful_image("h", 4) == Poly::var(t4, "h"));
}

TEST_CASE("Proposition 4.8 holds for n = 1 and n = 2 on the default window")
{
    for (int n : {1, 2}) {
        BidegreeWindow w{0, 2 * n + 4, -n - 4, n + 4};
        PropAlgebraicReport rep = verify_prop_algebraic(n, w);
        INFO("n = " << n << " first failure " << rep.first_failure.str());
        REQUIRE(rep.psi_sends_jhat_into_jbar);
        REQUIRE(rep.ideal_identity);
        REQUIRE(rep.torsion_is_eps_ideal);
        REQUIRE(rep.rho_injective_on_torsion);
    }
}

TEST_CASE("kernel claim ker(phi.Psi) = <eps> + J_n, small window")
{
    for (int n : {1, 2}) {
        BidegreeWindow w{0, 2 * n + 2, -n - 2, n + 2};
        KernelClaimReport rep = verify_kernel_claim(n, w);
        INFO("n = " << n << " first failure " << rep.first_failure.str());
        REQUIRE(rep.ok);
    }
}

TEST_CASE("b_to_a: the projection table of the point rings")
{
    const AlgebraSpec* a = alg_A();
    REQUIRE(b_to_a(BElem::alpha(1)) == parse_poly(*a, "2*t^-2"));  // tau^-1 alpha -> 2 tau^-2
    REQUIRE(b_to_a(parse_b_elem("e^2*t^3")) == parse_poly(*a, "e^2*t^3"));
    REQUIRE(b_to_a(BElem::theta()).is_zero());
    // ring homomorphism on a window of monomial pairs
    std::vector<BElem> items = {BElem::eps(), BElem::tau(), BElem::alpha(0), BElem::alpha(2),
                                BElem::theta(0, 0), BElem::theta(2, 1), BElem::unit()};
    for (const BElem& xx : items)
        for (const BElem& yy : items)
            REQUIRE(b_to_a(b_mul(xx, yy)) == a_mul(b_to_a(xx), b_to_a(yy)));
}
