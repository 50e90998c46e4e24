#pragma once

#include <mutex>

#include "coeff.hpp"
#include "ideal.hpp"
#include "ringmap.hpp"

namespace bredon {

// "2 tau^b" as an element of B: honest 2 tau^b in the positive cone, the
// alpha-cone generator tau^{b+1} alpha when b < 0.
inline BElem two_tau_pow(int b)
{
    if (b >= 0) return BElem::from(BMono{BCone::Pos, 0, b}, 2);
    return BElem::from(BMono{BCone::Alpha, 0, -b - 1}, 1);
}

// The interior ring H_{n',0} = A[h,x_{n'}]/J_{n'}, with cached per-bidegree
// quotient pieces.  n' = 0 runs through the folded algebra (x^2 = tau^-1).
class InteriorRing {
public:
    explicit InteriorRing(int np) : np_(np), ideal_(j_ideal(np)) {}

    int dim() const { return np_; }
    const AlgebraSpec* alg() const { return ideal_.alg; }
    const Ideal& ideal() const { return ideal_; }

    const QuotientPiece& piece(BiDegree d) const
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find({d.p, d.q});
        if (it == cache_.end())
            it = cache_.emplace(std::make_pair(d.p, d.q), quotient_at(ideal_, d)).first;
        return it->second;
    }

    FgAbGroup group(BiDegree d) const
    {
        if (d.p < 0) return FgAbGroup{};
        return piece(d).group;
    }

    Poly nf(const Poly& p) const
    {
        if (p.is_zero()) return p;
        std::map<std::pair<int, int>, Poly> parts;
        for (const auto& [e, c] : p.terms) {
            BiDegree d = p.alg->mono_degree(e);
            auto it = parts.find({d.p, d.q});
            if (it == parts.end()) it = parts.emplace(std::make_pair(d.p, d.q), Poly(p.alg)).first;
            it->second.add(e, c);
        }
        Poly out(p.alg);
        for (auto& [dd, comp] : parts) {
            if (dd.first < 0) continue;
            out = out + piece({dd.first, dd.second}).normal_form(comp);
        }
        return out;
    }

private:
    int np_;
    Ideal ideal_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, int>, QuotientPiece> cache_;
};

// One element of the additive model of H_{n,s}:
//   (+)_{j<s} B.h^j  (+)  j_dagger(A[h,x]/J_{n-2s})  (+)  (+)_{j<s} B.eta h^j.
struct ModelElem {
    int n = 0, s = 0;
    std::vector<BElem> head;  // s entries
    std::vector<BElem> etah;  // s entries
    Poly interior;            // normal form; the class j_dagger(interior)

    bool is_zero() const
    {
        for (const BElem& b : head)
            if (!b.is_zero()) return false;
        for (const BElem& b : etah)
            if (!b.is_zero()) return false;
        return interior.is_zero();
    }

    friend bool operator==(const ModelElem& a, const ModelElem& b)
    {
        return a.n == b.n && a.s == b.s && a.head == b.head && a.etah == b.etah &&
               a.interior == b.interior;
    }

    std::string str() const
    {
        std::string out;
        auto app = [&out](const std::string& t) {
            if (t.empty()) return;
            if (!out.empty()) out += " + ";
            out += t;
        };
        auto hpow = [](int j) {
            if (j == 0) return std::string();
            if (j == 1) return std::string("h");
            return "h^" + std::to_string(j);
        };
        for (int j = 0; j < (int)head.size(); ++j)
            if (!head[j].is_zero()) {
                std::string c = head[j].str();
                std::string p = hpow(j);
                if (p.empty()) app(c);
                else if (c == "1") app(p);
                else app("(" + c + ")*" + p);
            }
        for (int j = 0; j < (int)etah.size(); ++j)
            if (!etah[j].is_zero()) {
                std::string c = etah[j].str();
                std::string p = "eta" + (j > 0 ? "*" + hpow(j) : "");
                if (c == "1") app(p);
                else app("(" + c + ")*" + p);
            }
        if (!interior.is_zero()) app("int:" + interior.str());
        return out.empty() ? "0" : out;
    }
};

// The ring H^{*,*}(Q_{n,s}(C)) in its additive presentation, with the
// products driven by the structure constants of the isotropic analysis:
//   h^r j(tau^-a h^r') walks the interior until it spills into 2 tau^-a eta
//   over the band n-2s < r+r' <= n-s and dies past it; eta annihilates the
//   interior and itself; x-classes die under h.
class ModelRing {
public:
    ModelRing(int n, int s) : n_(n), s_(s), interior_(n - 2 * s)
    {
        if (s < 0 || n < 2 * s) throw std::invalid_argument("ModelRing: need n >= 2s >= 0");
    }

    int n() const { return n_; }
    int s() const { return s_; }
    const InteriorRing& interior() const { return interior_; }
    BiDegree eta_degree() const { return {2 * (n_ - s_ + 1), n_ - s_ + 1}; }

    ModelElem zero() const
    {
        ModelElem e;
        e.n = n_;
        e.s = s_;
        e.head.assign(s_, BElem{});
        e.etah.assign(s_, BElem{});
        e.interior = Poly::zero(interior_.alg());
        return e;
    }

    ModelElem one() const
    {
        ModelElem e = zero();
        if (s_ > 0) e.head[0] = BElem::unit();
        else e.interior = Poly::unit(interior_.alg());
        return e;
    }

    FgAbGroup group(BiDegree d) const
    {
        FgAbGroup g;
        for (int j = 0; j < s_; ++j) {
            g = g + b_group(d - j * BiDegree{2, 1}).group;
            g = g + b_group(d - eta_degree() - j * BiDegree{2, 1}).group;
        }
        g = g + interior_.group(d - BiDegree{2 * s_, s_});
        return g;
    }

    ModelElem add(const ModelElem& a, const ModelElem& b) const
    {
        ModelElem r = a;
        for (int j = 0; j < s_; ++j) {
            r.head[j] = r.head[j] + b.head[j];
            r.etah[j] = r.etah[j] + b.etah[j];
        }
        r.interior = interior_.nf(r.interior + b.interior);
        return r;
    }

    // Scalar action of B: through pi on the interior, by multiplication on
    // the free head and eta summands.
    ModelElem scale(const BElem& c, const ModelElem& a) const
    {
        ModelElem r = zero();
        for (int j = 0; j < s_; ++j) {
            r.head[j] = b_mul(c, a.head[j]);
            r.etah[j] = b_mul(c, a.etah[j]);
        }
        r.interior = interior_.nf(transport(b_to_a(c), interior_.alg()) * a.interior);
        return r;
    }

    // h^r . j_dagger(beta): the hTa evaluation, monomial by monomial.
    ModelElem mul_h_interior(int r, const Poly& beta) const
    {
        ModelElem out = zero();
        const AlgebraSpec* alg = interior_.alg();
        int ie = alg->var_index("e"), it = alg->var_index("t"), ih = alg->var_index("h"),
            ix = alg->var_index("x");
        Poly keep(alg);
        for (const auto& [e, c] : beta.terms) {
            if (e[ix] > 0) {
                if (r == 0) keep.add(e, c);
                // h^(>=1) kills the x classes
                continue;
            }
            int R = r + e[ih];
            if (R <= n_ - 2 * s_) {
                std::vector<int> e2 = e;
                e2[ih] = R;
                keep.add(std::move(e2), c);
            } else if (R <= n_ - s_) {
                // spills into 2 tau^b eta h^{R-1-(n-2s)}
                BElem coef = two_tau_pow(e[it]);
                for (int k = 0; k < e[ie]; ++k) coef = b_mul(coef, BElem::eps());
                out.etah[R - 1 - (n_ - 2 * s_)] = out.etah[R - 1 - (n_ - 2 * s_)] + c * coef;
            }
        }
        out.interior = interior_.nf(keep);
        return out;
    }

    // h^k as a model element.
    ModelElem h_power(int k) const
    {
        if (k < s_) {
            ModelElem e = zero();
            e.head[k] = BElem::unit();
            return e;
        }
        return mul_h_interior(k - s_, Poly::unit(interior_.alg()));
    }

    ModelElem eta() const
    {
        if (s_ == 0) throw std::domain_error("eta exists only for s >= 1");
        ModelElem e = zero();
        e.etah[0] = BElem::unit();
        return e;
    }

    ModelElem from_interior(const Poly& p) const
    {
        ModelElem e = zero();
        e.interior = interior_.nf(transport(p, interior_.alg()));
        return e;
    }

    ModelElem multiply(const ModelElem& a, const ModelElem& b) const
    {
        ModelElem out = zero();
        // head x head, head x etah, etah x etah
        for (int j1 = 0; j1 < s_; ++j1) {
            if (a.head[j1].is_zero() && a.etah[j1].is_zero()) continue;
            for (int j2 = 0; j2 < s_; ++j2) {
                BElem hh = b_mul(a.head[j1], b.head[j2]);
                if (!hh.is_zero()) out = add(out, scale(hh, h_power(j1 + j2)));
                BElem he = b_mul(a.head[j1], b.etah[j2]) + b_mul(a.etah[j1], b.head[j2]);
                if (!he.is_zero() && j1 + j2 <= s_ - 1)
                    out.etah[j1 + j2] = out.etah[j1 + j2] + he;
                // eta h^k = 0 for k >= s: the h-power walks into j_dagger or
                // 2 eta terms and eta kills both.
            }
        }
        // head x interior
        for (int j = 0; j < s_; ++j) {
            if (!a.head[j].is_zero() && !b.interior.is_zero())
                out = add(out, scale(a.head[j], mul_h_interior(j, b.interior)));
            if (!b.head[j].is_zero() && !a.interior.is_zero())
                out = add(out, scale(b.head[j], mul_h_interior(j, a.interior)));
        }
        // interior x interior: j(b1) j(b2) = h^s . j(b1 b2)
        if (!a.interior.is_zero() && !b.interior.is_zero()) {
            Poly prod = interior_.nf(a.interior * b.interior);
            if (s_ == 0) {
                ModelElem e = zero();
                e.interior = prod;
                out = add(out, e);
            } else {
                out = add(out, mul_h_interior(s_, prod));
            }
        }
        // eta x interior = 0, eta x eta = 0.
        return out;
    }

    // The fully reduced class of b . h^k . eta^epsilon.
    ModelElem basis_class(const BElem& c, int k, bool with_eta) const
    {
        ModelElem e = h_power(k);
        if (with_eta) {
            e = multiply(e, eta());
        }
        return scale(c, e);
    }

private:
    int n_, s_;
    InteriorRing interior_;
};

}  // namespace bredon
