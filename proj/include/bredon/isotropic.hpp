#pragma once

#include "model.hpp"

namespace bredon {

// ---------------------------------------------------------------------------
// The presentation ring of the isotropic theorem:
//     B_s[h,x,y] (x) Lambda(eta),  deg h = (2,1), deg x = (n-2s,-1),
//     deg y = (0,-2), deg eta = (2(n-s+1), n-s+1),
// in reduced monomial form.  B_s[h,x,y] = B[h] + <h^s>, so a monomial with
// an x or y factor must carry h^s.  Inside <h^s> the rewrite h^s tau y -> h^s
// (and its alpha/theta-cone variants, plus x^2 -> y when the interior is a
// point) keeps every bidegree piece finite; each rewrite subtracts a
// bihomogeneous multiple of h^s g_4 / h^s g_5, so spans and quotients are
// unchanged.
// ---------------------------------------------------------------------------

struct IsoMono {
    BMono c;        // coefficient basis monomial of B
    int j = 0;      // h
    int k = 0;      // x
    int l = 0;      // y
    bool eta = false;

    auto operator<=>(const IsoMono&) const = default;
};

class IsoRing {
public:
    IsoRing(int n, int s) : n_(n), s_(s), np_(n - 2 * s)
    {
        if (s < 1 || np_ < 0) throw std::invalid_argument("IsoRing: need n >= 2s, s >= 1");
    }

    int n() const { return n_; }
    int s() const { return s_; }
    int interior_dim() const { return np_; }
    BiDegree eta_degree() const { return {2 * (n_ - s_ + 1), n_ - s_ + 1}; }
    BiDegree x_degree() const { return {np_, -1}; }

    BiDegree degree(const IsoMono& m) const
    {
        BiDegree d = m.c.degree();
        d = d + m.j * BiDegree{2, 1} + m.k * x_degree() + m.l * BiDegree{0, -2};
        if (m.eta) d = d + eta_degree();
        return d;
    }

    bool legal(const IsoMono& m) const { return (m.k == 0 && m.l == 0) || m.j >= s_; }

    bool reduced(const IsoMono& m) const
    {
        if (np_ == 0 && m.k >= 2) return false;
        if (m.l > 0) return m.c.cone == BCone::Pos && m.c.b == 0;
        return true;
    }

    // Deterministic reduction to the canonical monomial; the coefficient may
    // pick up a sign-free integer factor only through vanishing (returns
    // false when the monomial dies, e.g. y walks tau over a theta tower end).
    IsoMono reduce(IsoMono m) const
    {
        if (np_ == 0) {
            while (m.k >= 2) {
                m.k -= 2;
                m.l += 1;
            }
        }
        while (m.l > 0) {
            if (m.c.cone == BCone::Pos) {
                if (m.c.b == 0) break;
                m.c.b -= 1;
                m.l -= 1;
            } else {
                // tau^-b alpha and eps^-a tau^-b theta absorb y as tau^-1
                m.c.b += 1;
                m.l -= 1;
            }
        }
        return m;
    }

private:
    int n_, s_, np_;
};

// Raw term map: monomials as written, no tail rewriting applied.  Generators
// are kept in this form; h^s(tau y - 1) would otherwise reduce to zero while
// its alpha- and theta-coefficient multiples are nonzero kernel elements.
using RawIso = std::map<IsoMono, Int>;

inline void raw_add(RawIso& raw, const IsoMono& m, Int c)
{
    if (m.c.torsion()) {
        c %= 2;
        if (c < 0) c += 2;
    }
    if (c == 0) return;
    auto it = raw.find(m);
    if (it == raw.end()) {
        raw.emplace(m, std::move(c));
        return;
    }
    it->second += c;
    if (m.c.torsion()) {
        it->second %= 2;
        if (it->second < 0) it->second += 2;
    }
    if (it->second == 0) raw.erase(it);
}

inline std::string iso_terms_str(const RawIso& terms)
{
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        Int cc = c;
        std::string t;
        if (int_abs(cc) != 1) t += int_abs(cc).str() + "*";
        std::string cs = m.c.str();
        if (cs != "1") t += cs + "*";
        auto pw = [&t](const char* v, int e) {
            if (e == 0) return;
            t += std::string(v);
            if (e != 1) t += "^" + std::to_string(e);
            t += "*";
        };
        pw("h", m.j);
        pw("x", m.k);
        pw("y", m.l);
        if (m.eta) t += "eta*";
        if (!t.empty() && t.back() == '*') t.pop_back();
        if (t.empty()) t = "1";
        if (first) out += (cc < 0 ? "-" : "") + t;
        else out += (cc < 0 ? " - " : " + ") + t;
        first = false;
    }
    return out;
}

struct IsoPoly {
    const IsoRing* ring = nullptr;
    std::map<IsoMono, Int> terms;

    explicit IsoPoly(const IsoRing* r = nullptr) : ring(r) {}

    bool is_zero() const { return terms.empty(); }

    void add(IsoMono m, Int c)
    {
        m = ring->reduce(m);
        if (m.c.torsion()) {
            c %= 2;
            if (c < 0) c += 2;
        }
        if (c == 0) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, std::move(c));
            return;
        }
        it->second += c;
        if (m.c.torsion()) {
            it->second %= 2;
            if (it->second < 0) it->second += 2;
        }
        if (it->second == 0) terms.erase(it);
    }

    std::optional<BiDegree> degree() const
    {
        std::optional<BiDegree> d;
        for (const auto& [m, c] : terms) {
            BiDegree md = ring->degree(m);
            if (!d) d = md;
            else if (*d != md) return std::nullopt;
        }
        return d;
    }

    bool all_legal() const
    {
        for (const auto& [m, c] : terms)
            if (!ring->legal(m)) return false;
        return true;
    }

    friend IsoPoly operator+(const IsoPoly& a, const IsoPoly& b)
    {
        IsoPoly r = a;
        for (const auto& [m, c] : b.terms) r.add(m, c);
        return r;
    }
    friend IsoPoly operator*(const Int& k, const IsoPoly& a)
    {
        IsoPoly r(a.ring);
        for (const auto& [m, c] : a.terms) r.add(m, k * c);
        return r;
    }
    friend IsoPoly operator*(const IsoPoly& a, const IsoPoly& b)
    {
        IsoPoly r(a.ring);
        for (const auto& [ma, ca] : a.terms)
            for (const auto& [mb, cb] : b.terms) {
                if (ma.eta && mb.eta) continue;  // eta^2 = 0
                BElem cc = bmono_mul(ma.c, mb.c);
                for (const auto& [cm, k] : cc.terms) {
                    IsoMono m{cm, ma.j + mb.j, ma.k + mb.k, ma.l + mb.l, ma.eta || mb.eta};
                    r.add(m, ca * cb * k);
                }
            }
        return r;
    }

    std::string str() const { return iso_terms_str(terms); }
};

// ---------------------------------------------------------------------------
// Generators of the kernel ideal I_{n,s}.
//
// Besides the printed ones (h^s g_i, h^s eta, h^{n-s+1} - 2 eta) the builder
// emits the tau-divided companions h^{n-s+1} y^a - tau^{-(a-1)} alpha eta:
// those lie in the kernel because h^{n-2s+1} j(tau^-a) = 2 tau^-a eta, and
// "2 tau^-a" is the alpha-cone generator, which no B_s-multiple of
// h^{n-s+1} - 2 eta reaches.  For an odd interior the bare h^s g_4 would be
// h^{n-s+1} itself, which maps to 2 eta, not 0; its kernel form is exactly
// the printed h^{n-s+1} - 2 eta, so it is not listed twice.
// ---------------------------------------------------------------------------

class IsotropicPresentation {
public:
    IsotropicPresentation(int n, int s) : ring_(n, s), model_(n, s)
    {
        build_generators();
    }

    const IsoRing& ring() const { return ring_; }
    const ModelRing& model() const { return model_; }
    const std::vector<RawIso>& generators() const { return gens_; }
    const std::vector<std::string>& generator_names() const { return gen_names_; }

    IsoPoly reduce_raw(const RawIso& raw) const
    {
        IsoPoly p(&ring_);
        for (const auto& [m, c] : raw) p.add(m, c);
        return p;
    }

    // The computational Psi of the isotropic theorem, with the h^s-floor
    // evaluated through the interior normal form:
    //   b h^{s+r} x^k y^a (x) 1  |->  b . [ h^r . j(tau^-a xbar^k) ]
    //   b h^{s+r} ... (x) eta    |->  0
    //   b h^j (x) eta^e, j < s   |->  b h^j eta^e.
    ModelElem psi(const IsoPoly& u) const
    {
        ModelElem out = model_.zero();
        const AlgebraSpec* ia = model_.interior().alg();
        for (const auto& [m, c] : u.terms) {
            if (!ring_.legal(m))
                throw std::domain_error("psi: monomial outside B_s[h,x,y] (x) Lambda(eta)");
            if (m.j < ring_.s()) {
                ModelElem e = model_.zero();
                if (m.eta) e.etah[m.j] = c * BElem::from(m.c, 1);
                else e.head[m.j] = c * BElem::from(m.c, 1);
                out = model_.add(out, e);
                continue;
            }
            if (m.eta) continue;  // [h^s] (x) <eta> dies
            Poly beta(ia);
            std::vector<int> ex(ia->vars.size(), 0);
            ex[ia->var_index("t")] = -m.l;
            ex[ia->var_index("x")] = m.k;
            beta.add(std::move(ex), 1);
            ModelElem val = model_.mul_h_interior(m.j - ring_.s(), model_.interior().nf(beta));
            out = model_.add(out, model_.scale(c * BElem::from(m.c, 1), val));
        }
        return out;
    }

    // Ambient reduced monomials of one bidegree.
    std::vector<IsoMono> ambient_basis(BiDegree d) const
    {
        std::vector<IsoMono> out = monomials(d, true);
        return out;
    }

    struct SpanData {
        std::vector<IsoMono> basis;
        std::map<IsoMono, int> index;
        IntLattice span;       // kernel multiples of the generators
        IntLattice full;       // + torsion identities
        int skipped_nonzero = 0;  // generator multiples with nonzero Psi (not kernel elements)
    };

    // Multiply a raw full-ring monomial into a raw generator.  The raw product
    // is accumulated without any tail rewriting first; surviving monomials
    // that violate the B_s shape mean the product left the subring (nullopt),
    // and only then is the legal product reduced.
    std::optional<IsoPoly> raw_multiple(const IsoMono& mu, const RawIso& g) const
    {
        RawIso raw;
        for (const auto& [mg, cg] : g) {
            if (mu.eta && mg.eta) continue;
            BElem cc = bmono_mul(mu.c, mg.c);
            for (const auto& [cm, k] : cc.terms) {
                IsoMono m{cm, mu.j + mg.j, mu.k + mg.k, mu.l + mg.l, mu.eta || mg.eta};
                raw_add(raw, m, k * cg);
            }
        }
        IsoPoly out(&ring_);
        for (const auto& [m, c] : raw) {
            if (!ring_.legal(m)) return std::nullopt;
            out.add(m, c);
        }
        return out;
    }

    SpanData span_at(BiDegree d) const
    {
        SpanData sd;
        sd.basis = ambient_basis(d);
        for (int i = 0; i < (int)sd.basis.size(); ++i) sd.index.emplace(sd.basis[i], i);
        sd.span.ambient_rank = (int)sd.basis.size();
        sd.full.ambient_rank = (int)sd.basis.size();
        std::set<IntVec> seen;
        for (const RawIso& g : gens_) {
            BiDegree dg = ring_.degree(g.begin()->first);
            for (const IsoMono& mu : raw_monomials(d - dg)) {
                auto prod = raw_multiple(mu, g);
                if (!prod || prod->is_zero()) continue;
                if (!psi(*prod).is_zero()) {
                    ++sd.skipped_nonzero;
                    continue;
                }
                IntVec v(sd.basis.size(), 0);
                bool ok = true;
                for (const auto& [m, c] : prod->terms) {
                    auto it = sd.index.find(m);
                    if (it == sd.index.end()) { ok = false; break; }
                    v[it->second] = c;
                }
                if (!ok) throw std::domain_error("span_at: product outside the piece");
                if (seen.insert(v).second) sd.span.generators.push_back(std::move(v));
            }
        }
        sd.full.generators = sd.span.generators;
        for (int i = 0; i < (int)sd.basis.size(); ++i)
            if (sd.basis[i].c.torsion()) {
                IntVec r(sd.basis.size(), 0);
                r[i] = 2;
                sd.full.generators.push_back(std::move(r));
            }
        return sd;
    }

    FgAbGroup quotient_group_at(BiDegree d) const
    {
        SpanData sd = span_at(d);
        if (sd.basis.empty()) return FgAbGroup{};
        if (sd.full.generators.empty()) return FgAbGroup{(int)sd.basis.size(), {}};
        SmithResult s = smith_normal_form(sd.full.matrix());
        return group_from_smith(s, (int)sd.basis.size());
    }

    struct Report {
        bool generators_die = true;
        bool groups_match = true;
        int checked = 0;
        int skipped_nonzero = 0;
        BiDegree first_failure{};
        std::string failure_kind;
        bool ok() const { return generators_die && groups_match; }
    };

    Report verify(const BidegreeWindow& w) const
    {
        Report rep;
        for (size_t i = 0; i < gens_.size(); ++i)
            if (!psi(reduce_raw(gens_[i])).is_zero()) {
                rep.generators_die = false;
                rep.failure_kind = "generator " + gen_names_[i] + " survives Psi";
            }
        for (int p = w.p_min; p <= w.p_max; ++p)
            for (int q = w.q_min; q <= w.q_max; ++q) {
                BiDegree d{p, q};
                SpanData sd = span_at(d);
                rep.skipped_nonzero += sd.skipped_nonzero;
                FgAbGroup lhs;
                if (!sd.basis.empty()) {
                    if (sd.full.generators.empty()) lhs = FgAbGroup{(int)sd.basis.size(), {}};
                    else lhs = group_from_smith(smith_normal_form(sd.full.matrix()), (int)sd.basis.size());
                }
                FgAbGroup rhs = model_.group(d);
                ++rep.checked;
                if (!(lhs == rhs)) {
                    if (rep.groups_match) {
                        rep.first_failure = d;
                        rep.failure_kind = "quotient " + lhs.str() + " vs model " + rhs.str();
                    }
                    rep.groups_match = false;
                }
            }
        return rep;
    }

    // Printable relation list (the interior generators and the eta relations).
    std::vector<std::pair<std::string, std::string>> relation_strings() const
    {
        std::vector<std::pair<std::string, std::string>> out;
        for (size_t i = 0; i < gens_.size(); ++i)
            out.emplace_back(gen_names_[i], iso_terms_str(gens_[i]));
        return out;
    }

private:
    void build_generators()
    {
        const int n = ring_.n(), s = ring_.s(), np = ring_.interior_dim();
        int delta = (np % 2 == 0) ? 0 : 1;
        int mp = (np + delta) / 2;  // m - s in the printed notation

        auto from_interior = [&](const Poly& p) {
            // lift an A[h,x]-side polynomial with nonnegative tau powers
            IsoPoly out(&ring_);
            const AlgebraSpec* a = p.alg;
            int ie = a->var_index("e"), it = a->var_index("t"), ih = a->var_index("h"),
                ix = a->var_index("x");
            for (const auto& [e, c] : p.terms) {
                if (e[it] < 0) throw std::domain_error("negative tau power in a generator");
                IsoMono m{BMono{BCone::Pos, e[ie], e[it]}, e[ih], ix >= 0 ? e[ix] : 0, 0, false};
                out.add(m, c);
            }
            return out;
        };
        auto hpow = [&](int k) {
            IsoPoly p(&ring_);
            p.add(IsoMono{BMono{BCone::Pos, 0, 0}, k, 0, 0, false}, 1);
            return p;
        };
        auto eta_mono = [&](int j) {
            IsoPoly p(&ring_);
            p.add(IsoMono{BMono{BCone::Pos, 0, 0}, j, 0, 0, true}, 1);
            return p;
        };

        const AlgebraSpec* ia = alg_A_hx(np);
        Poly e = Poly::var(ia, "e"), t = Poly::var(ia, "t"), h = Poly::var(ia, "h"),
             x = Poly::var(ia, "x");
        std::vector<std::pair<std::string, Poly>> interior_gens;
        interior_gens.emplace_back("g1", transport(f_bold(mp), ia));
        interior_gens.emplace_back(
            "g2", e.pow(1 - delta) * t.pow(mp) * x - h.pow(1 - delta) * transport(f_bold(mp - 1), ia));
        interior_gens.emplace_back("g3", h * x);
        if (delta == 0) {
            // With the printed delta factor the x^2 term would sit on the odd
            // side and break bihomogeneity; the even side carries it, matching
            // the anisotropic generator lists.
            interior_gens.emplace_back(
                "g4", h.pow(2 * mp) - Int((mp % 2 == 0) ? 1 : -1) * t.pow(mp + 1) * x * x);
        }
        // g5 = tau y - 1, straight in the iso ring
        IsoPoly g5(&ring_);
        g5.add(IsoMono{BMono{BCone::Pos, 0, 1}, 0, 0, 1, false}, 1);
        g5.add(IsoMono{BMono{BCone::Pos, 0, 0}, 0, 0, 0, false}, -1);

        for (auto& [nm, p] : interior_gens) {
            IsoPoly lifted = hpow(s) * from_interior(p);
            if (lifted.is_zero()) continue;  // the point-interior g4 folds away
            gens_.push_back(lifted);
            gen_names_.push_back("h^s*" + nm);
        }
        {
            IsoPoly lifted = hpow(s) * g5;
            if (!lifted.is_zero()) {
                gens_.push_back(lifted);
                gen_names_.push_back("h^s*g5");
            }
        }
        gens_.push_back(eta_mono(s));
        gen_names_.push_back("h^s*eta");
        {
            IsoPoly glast = hpow(n - s + 1);
            IsoPoly two_eta = Int(-2) * eta_mono(0);
            gens_.push_back(glast + two_eta);
            gen_names_.push_back("h^{n-s+1} - 2*eta");
        }
        // the alpha-cone tower; deep enough for any window handed to verify()
        for (int a = 1; a <= n + 12; ++a) {
            IsoPoly g(&ring_);
            g.add(IsoMono{BMono{BCone::Pos, 0, 0}, n - s + 1, 0, a, false}, 1);
            g.add(IsoMono{BMono{BCone::Alpha, 0, a - 1}, 0, 0, 0, true}, -1);
            gens_.push_back(g);
            gen_names_.push_back("h^{n-s+1}*y^" + std::to_string(a) + " - t^{-" +
                                 std::to_string(a - 1) + "}*a*eta");
        }
    }

    // All reduced monomials of a bidegree.  legal_only adds the B_s shape
    // constraint ((x or y present) => h^s).
    std::vector<IsoMono> monomials(BiDegree d, bool legal_only) const
    {
        std::vector<IsoMono> out;
        const int np = ring_.interior_dim();
        int jmax = std::max({0, d.p, d.p - d.q});
        int kmax = np == 0 ? 1 : std::max({0, d.p, d.p - d.q});
        for (int etab = 0; etab <= 1; ++etab)
            for (int j = 0; j <= jmax; ++j)
                for (int k = 0; k <= kmax; ++k) {
                    BiDegree base = d;
                    if (etab) base = base - ring_.eta_degree();
                    base = base - j * BiDegree{2, 1} - k * ring_.x_degree();
                    // l = 0 with an arbitrary coefficient cone
                    if (auto c = b_basis_mono(base)) {
                        IsoMono m{*c, j, k, 0, etab == 1};
                        if (ring_.reduced(m) && (!legal_only || ring_.legal(m))) out.push_back(m);
                    }
                    // l > 0 forces an eps-power coefficient (a, a)
                    int a = base.p;
                    if (a >= 0) {
                        int twol = a - base.q;
                        if (twol > 0 && twol % 2 == 0) {
                            IsoMono m{BMono{BCone::Pos, a, 0}, j, k, twol / 2, etab == 1};
                            if (ring_.reduced(m) && (!legal_only || ring_.legal(m)))
                                out.push_back(m);
                        }
                    }
                }
        return out;
    }

    // Raw full-ring monomials of a bidegree: no tail rewriting assumed, so the
    // tau/y and x^2/y trade-offs make the piece infinite; the y exponent is
    // cut off at a budget deep enough for every window the callers use (the
    // generators themselves only ever shift y by one).
    std::vector<IsoMono> raw_monomials(BiDegree d) const
    {
        std::vector<IsoMono> out;
        const int np = ring_.interior_dim();
        const int l_budget = 8;
        int jmax = std::max({0, d.p, d.p - d.q});
        int kmax = np == 0 ? 1 + 2 * l_budget : std::max({0, d.p, d.p - d.q});
        for (int etab = 0; etab <= 1; ++etab)
            for (int j = 0; j <= jmax; ++j)
                for (int k = 0; k <= kmax; ++k)
                    for (int l = 0; l <= l_budget; ++l) {
                        BiDegree base = d;
                        if (etab) base = base - ring_.eta_degree();
                        base = base - j * BiDegree{2, 1} - k * ring_.x_degree() -
                               l * BiDegree{0, -2};
                        if (auto c = b_basis_mono(base)) out.push_back({*c, j, k, l, etab == 1});
                    }
        return out;
    }

    IsoRing ring_;
    ModelRing model_;
    std::vector<IsoPoly> gens_;
    std::vector<std::string> gen_names_;
};

}  // namespace bredon
