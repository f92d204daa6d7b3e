#include "mhk/mha.hpp"

#include <map>
#include <stdexcept>

namespace mhk {

namespace {

void acc(Elem& out, const Elem& v) {
    if (!out.space())
        out = v;
    else
        out += v;
}

std::vector<Elem> grid(const AlgebraPtr& a, int window) {
    std::vector<Elem> out;
    for (const auto& k : a->probe_keys(window)) out.push_back(a->basis(k));
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Canonical instances
// ---------------------------------------------------------------------------

MhaPtr build_function_mha(const GroupPtr& g) {
    auto h = std::make_shared<MultiplierHopf>();
    auto A = function_algebra(g);
    h->A = A;
    h->AxA = make_tensor_carrier({A, A});
    auto tc = h->AxA;
    h->delta = [tc, A, g](const Elem& f) {
        LazyTensor m;
        m.tc = tc;
        m.alg1 = m.alg2 = A;
        // (a(x)1)Delta(f): (s,t) -> a(s) f(st), so t = s^-1 n over supp f
        auto by1 = [tc, g, f](const Elem& a) -> std::optional<Elem> {
            Elem out(tc.space);
            for (const auto& [ka, ca] : a.coeff())
                for (const auto& [kf, cf] : f.coeff())
                    out.add_term(concat_keys(ka, g->compose(g->invert(ka), kf)), ca * cf);
            return out;
        };
        auto by2 = [tc, g, f](const Elem& a) -> std::optional<Elem> {
            Elem out(tc.space);
            for (const auto& [ka, ca] : a.coeff())
                for (const auto& [kf, cf] : f.coeff())
                    out.add_term(concat_keys(g->compose(kf, g->invert(ka)), ka), ca * cf);
            return out;
        };
        m.mul1_left = m.mul1_right = by1;  // the legs are pointwise, so sides agree
        m.mul2_left = m.mul2_right = by2;
        auto full = [tc, g, f](const Elem& x) {
            Elem out(tc.space);
            const int ar = g->arity;
            for (const auto& [kx, cx] : x.coeff()) {
                auto [s, t] = split_key(kx, ar);
                out.add_term(kx, cx * f.at(g->compose(s, t)));
            }
            return out;
        };
        m.full_left = m.full_right = full;
        return m;
    };
    h->counit = [g](const Elem& f) { return f.at(g->identity); };
    auto s_map = [A, g](const Elem& f) {
        Elem out = A->zero();
        for (const auto& [k, c] : f.coeff()) out += A->basis(g->invert(k), c);
        return out;
    };
    h->antipode = s_map;
    h->antipode_inv = s_map;  // group inversion is an involution
    h->regular = true;
    h->counit_witness = A->basis(g->identity);
    // delta_m (x) delta_n = (delta_m (x) 1) Delta(delta_mn) = Delta(delta_mn)(delta_m (x) 1)
    h->factor_left = [A, g](const Elem& a, const Elem& ap) {
        std::vector<std::pair<Elem, Elem>> out;
        for (const auto& [m, cm] : a.coeff())
            for (const auto& [n, cn] : ap.coeff())
                out.emplace_back(A->basis(m, cm * cn), A->basis(g->compose(m, n)));
        return out;
    };
    h->factor_right = [A, g](const Elem& a, const Elem& ap) {
        std::vector<std::pair<Elem, Elem>> out;
        for (const auto& [m, cm] : a.coeff())
            for (const auto& [n, cn] : ap.coeff())
                out.emplace_back(A->basis(g->compose(m, n)), A->basis(m, cm * cn));
        return out;
    };
    return h;
}

MhaPtr build_group_mha(const GroupPtr& g) {
    auto h = std::make_shared<MultiplierHopf>();
    auto A = group_algebra(g);
    h->A = A;
    h->AxA = make_tensor_carrier({A, A});
    auto tc = h->AxA;
    h->delta = [tc, A](const Elem& u) {
        Elem x(as_algebra(tc.space)->zero());
        for (const auto& [k, c] : u.coeff()) x.add_term(concat_keys(k, k), c);
        return lazy_from_elem(tc, x);  // grouplike: Delta lands in A(x)A
    };
    h->counit = [](const Elem& u) {
        Scalar out(0);
        for (const auto& [k, c] : u.coeff()) out = out + c;
        return out;
    };
    auto s_map = [A, g](const Elem& u) {
        Elem out = A->zero();
        for (const auto& [k, c] : u.coeff()) out += A->basis(g->invert(k), c);
        return out;
    };
    h->antipode = s_map;
    h->antipode_inv = s_map;
    h->regular = true;
    h->counit_witness = A->one();
    // u_m (x) u_n = (u_{m n^-1} (x) 1) Delta(u_n) = Delta(u_n)(u_{n^-1 m} (x) 1)
    h->factor_left = [A, g](const Elem& a, const Elem& ap) {
        std::vector<std::pair<Elem, Elem>> out;
        for (const auto& [m, cm] : a.coeff())
            for (const auto& [n, cn] : ap.coeff())
                out.emplace_back(A->basis(g->compose(m, g->invert(n)), cm * cn), A->basis(n));
        return out;
    };
    h->factor_right = [A, g](const Elem& a, const Elem& ap) {
        std::vector<std::pair<Elem, Elem>> out;
        for (const auto& [m, cm] : a.coeff())
            for (const auto& [n, cn] : ap.coeff())
                out.emplace_back(A->basis(n), A->basis(g->compose(g->invert(n), m), cm * cn));
        return out;
    };
    return h;
}

// ---------------------------------------------------------------------------
// Sweedler evaluation
// ---------------------------------------------------------------------------

namespace {

Elem mul_side(const Elem& w, const Elem& x, Side side) {
    return side == Side::Left ? multiply(w, x) : multiply(x, w);
}

void verify_witness2(const MhaPtr& H, const Bilinear& F, const Elem& w, int leg, Side side,
                     int window) {
    for (const auto& p : grid(H->A, window))
        for (const auto& q : grid(H->A, window)) {
            Elem covered = leg == 0 ? F(mul_side(w, p, side), q) : F(p, mul_side(w, q, side));
            if (covered != F(p, q))
                throw law_violation("covering witness " + w.str() + " fails on leg " +
                                    std::to_string(leg + 1) + " at (" + p.str() + ", " + q.str() +
                                    ")");
        }
}

void verify_witness3(const MhaPtr& H, const Trilinear& F, const Elem& w, int leg, Side side,
                     int window) {
    for (const auto& p : grid(H->A, window))
        for (const auto& q : grid(H->A, window))
            for (const auto& r : grid(H->A, window)) {
                Elem covered = leg == 0   ? F(mul_side(w, p, side), q, r)
                               : leg == 1 ? F(p, mul_side(w, q, side), r)
                                          : F(p, q, mul_side(w, r, side));
                if (covered != F(p, q, r))
                    throw law_violation("covering witness " + w.str() + " fails on leg " +
                                        std::to_string(leg + 1) + " at (" + p.str() + ", " +
                                        q.str() + ", " + r.str() + ")");
            }
}

std::optional<Elem> leg_mul(const LazyTensor& t, int leg, Side side, const Elem& w) {
    const auto& cl = leg == 0 ? (side == Side::Left ? t.mul1_left : t.mul1_right)
                              : (side == Side::Left ? t.mul2_left : t.mul2_right);
    if (!cl) throw law_violation("no multiplication closure on the planned leg");
    return cl(w);
}

}  // namespace

Elem sweedler_eval2(const MhaPtr& H, const Bilinear& F, const CoveringPlan& plan, const Elem& a,
                    int window, bool verify) {
    if (plan.steps.size() != 1)
        throw law_violation("sweedler_eval2: plan must have exactly one step");
    const auto& st = plan.steps[0];
    if (st.leg != 0 && st.leg != 1) throw law_violation("sweedler_eval2: plan covers no leg");
    Elem w = resolve_witness(st.source, st.side);
    if (verify) verify_witness2(H, F, w, st.leg, st.side, window);
    auto t = leg_mul(H->delta(a), st.leg, st.side, w);
    if (!t) throw law_violation("sweedler_eval2: covered product is not finite");
    Elem out;
    for (const auto& [p, q, c] : pair_terms(H->AxA, *t)) acc(out, c * F(p, q));
    if (!out.space()) out = F(H->A->zero(), H->A->zero());
    return out;
}

Elem sweedler_eval3(const MhaPtr& H, const Trilinear& F, const CoveringPlan& plan, const Elem& a,
                    TripleRoute route, int window, bool verify) {
    if (plan.steps.size() != 2)
        throw law_violation("sweedler_eval3: insufficient coverage (need two steps)");
    const auto& s0 = plan.steps[0];
    const auto& s1 = plan.steps[1];
    const int free_leg = route == TripleRoute::IotaDelta ? 0 : 2;
    if (s0.leg != free_leg)
        throw law_violation("sweedler_eval3: first step must cover the outer leg " +
                            std::to_string(free_leg + 1));
    const bool inner_hi = route == TripleRoute::IotaDelta;  // inner Delta sits on legs 2,3
    if (inner_hi ? (s1.leg != 1 && s1.leg != 2) : (s1.leg != 0 && s1.leg != 1))
        throw law_violation("sweedler_eval3: second step must cover an inner leg");

    Elem w0 = resolve_witness(s0.source, s0.side);
    if (verify) verify_witness3(H, F, w0, s0.leg, s0.side, window);
    auto outer = leg_mul(H->delta(a), free_leg == 0 ? 0 : 1, s0.side, w0);
    if (!outer) throw law_violation("sweedler_eval3: outer covered product is not finite");

    std::map<std::string, bool> seen;  // derived witnesses: verify each value once
    Elem out;
    for (const auto& [p, q, c] : pair_terms(H->AxA, *outer)) {
        const Elem& kept = inner_hi ? p : q;
        const Elem& inner = inner_hi ? q : p;
        Elem w1 = resolve_witness(s1.source, s1.side, {kept, inner});
        if (verify && !seen.count(w1.str())) {
            verify_witness3(H, F, w1, s1.leg, s1.side, window);
            seen[w1.str()] = true;
        }
        int inner_leg = inner_hi ? s1.leg - 1 : s1.leg;
        auto mat = leg_mul(H->delta(inner), inner_leg, s1.side, w1);
        if (!mat) throw law_violation("sweedler_eval3: inner covered product is not finite");
        for (const auto& [r, s, c2] : pair_terms(H->AxA, *mat))
            acc(out, (c * c2) * (inner_hi ? F(kept, r, s) : F(r, s, kept)));
    }
    if (!out.space()) out = F(H->A->zero(), H->A->zero(), H->A->zero());
    return out;
}

// ---------------------------------------------------------------------------
// Duality pairing
// ---------------------------------------------------------------------------

Pairing build_duality_pairing(const MhaPtr& kg, const MhaPtr& cg) {
    if (!kg->A->group || !cg->A->group || kg->A->group->name != cg->A->group->name)
        throw std::invalid_argument("build_duality_pairing: different groups");
    Pairing p;
    p.A = kg->A;
    p.B = cg->A;
    p.form = [](const Elem& a, const Elem& b) {
        Scalar out(0);
        for (const auto& [ka, ca] : a.coeff())
            for (const auto& [kb, cb] : b.coeff())
                if (ka == kb) out = out + ca * cb;
        return out;
    };
    CoveringPlan one_step;
    one_step.steps = {{0, Side::Left, WitnessSource::explicit_elem(cg->A->one())}};
    auto form = p.form;
    // a|>b = sum b_(1) <a, b_(2)>, through the Sweedler engine on B
    p.act_left = [cg, form, one_step](const Elem& a, const Elem& b) {
        Bilinear F = [&form, &a](const Elem& x, const Elem& y) { return form(a, y) * x; };
        return sweedler_eval2(cg, F, one_step, b, 2, false);
    };
    p.act_right = [cg, form, one_step](const Elem& b, const Elem& a) {
        Bilinear F = [&form, &a](const Elem& x, const Elem& y) { return form(a, x) * y; };
        return sweedler_eval2(cg, F, one_step, b, 2, false);
    };
    auto A = kg->A;
    p.unit_witness = [A](const Elem& b, Side) -> std::optional<Elem> {
        Elem e = A->zero();
        for (const auto& [k, _] : b.coeff()) e += A->basis(k);
        return e.is_zero() ? std::nullopt : std::optional<Elem>(e);
    };
    return p;
}

// ---------------------------------------------------------------------------
// Module algebras, twist, smash
// ---------------------------------------------------------------------------

ModuleAlgebra translation_module_algebra(const GroupPtr& g) {
    ModuleAlgebra ma;
    ma.H = build_group_mha(g);
    ma.R = function_algebra(g);
    auto R = ma.R;
    // (x <| u_h)(s) = x(hs)
    ma.act = [R, g](const Elem& x, const Elem& a) {
        Elem out = R->zero();
        for (const auto& [kx, cx] : x.coeff())
            for (const auto& [ka, ca] : a.coeff())
                out += R->basis(g->compose(g->invert(ka), kx), cx * ca);
        return out;
    };
    Elem one = ma.H->A->one();  // x <| 1 = x: the acting algebra is unital
    ma.action_unit = [one](const std::vector<Elem>&) -> std::optional<Elem> { return one; };
    return ma;
}

Elem twist_T(const ModuleAlgebra& ma, const Elem& x, const Elem& a) {
    auto e = ma.action_unit({x});
    if (!e) throw law_violation("twist_T: no action unit for " + x.str());
    auto t = ma.H->delta(a).mul2_left(*e);  // (1(x)e)Delta(a)
    if (!t) throw law_violation("twist_T: covered coproduct is not finite");
    Elem out;
    for (const auto& [p, q, c] : pair_terms(ma.H->AxA, *t))
        acc(out, c * tensor_elem(p, ma.act(x, q)));
    if (!out.space()) out = tensor_elem(ma.H->A->zero(), ma.R->zero());
    return out;
}

TensorCarrier smash_carrier(const ModuleAlgebra& ma) {
    auto sp = make_plain_space(ma.H->A->name() + "#" + ma.R->name(),
                               ma.H->A->key_arity() + ma.R->key_arity());
    TensorCarrier tc;
    tc.space = sp;
    tc.factors = {ma.H->A, ma.R};
    tc.offsets = {0, ma.H->A->key_arity(), ma.H->A->key_arity() + ma.R->key_arity()};
    return tc;
}

Elem smash_elem(const ModuleAlgebra& ma, const Elem& a, const Elem& x) {
    auto tc = smash_carrier(ma);
    Elem out(tc.space);
    for (const auto& [ka, ca] : a.coeff())
        for (const auto& [kx, cx] : x.coeff()) out.add_term(concat_keys(ka, kx), ca * cx);
    return out;
}

/// R as a right module over the base algebra, for action-unit witness sourcing.
static ModulePtr smash_action_module(const ModuleAlgebra& ma) {
    auto m = std::make_shared<ModuleDef>();
    m->right_alg = ma.H->A;
    m->carrier = ma.R;
    auto act = ma.act;
    m->act_right = [act](const Elem& x, const Elem& a) { return act(x, a); };
    m->unital = true;
    auto au = ma.action_unit;
    m->action_unit = [au](Side, const std::vector<Elem>& xs) { return au(xs); };
    m->hint_keys = [](const Elem& x) { return x.support(); };
    return m;
}

Elem smash_mul(const ModuleAlgebra& ma, const Elem& s1, const Elem& s2) {
    auto tc = smash_carrier(ma);
    auto A = ma.H->A;
    auto R = ma.R;
    Elem out(tc.space);
    auto mod = smash_action_module(ma);
    for (const auto& [a, x, c1] : pair_terms(tc, s1))
        for (const auto& [ap, xp, c2] : pair_terms(tc, s2)) {
            // sum a a'_(1) # (x <| a'_(2)) x'
            Bilinear F = [&](const Elem& p, const Elem& q) {
                Elem v(tc.space);
                Elem left = multiply(a, p);
                Elem right = multiply(ma.act(x, q), xp);
                for (const auto& [kl, cl] : left.coeff())
                    for (const auto& [kr, cr] : right.coeff())
                        v.add_term(concat_keys(kl, kr), cl * cr);
                return v;
            };
            CoveringPlan plan_a;  // e with a e = a covers leg 1
            plan_a.steps = {{0, Side::Left, WitnessSource::local_unit_of({a})}};
            CoveringPlan plan_x;  // action unit of x covers leg 2
            plan_x.steps = {{1, Side::Left, WitnessSource::action_unit_of(mod, x)}};
            Elem va = sweedler_eval2(ma.H, F, plan_a, ap, 2);
            Elem vx = sweedler_eval2(ma.H, F, plan_x, ap, 2);
            if (va != vx)
                throw law_violation("smash_mul: the two covering plans disagree at " + a.str() +
                                    "#" + x.str());
            out += (c1 * c2) * va;
        }
    return out;
}

// ---------------------------------------------------------------------------
// Coactions
// ---------------------------------------------------------------------------

Coaction coaction_from_representation(
    const MhaPtr& H, const SpacePtr& V,
    const std::function<Elem(const GroupKey&, const Elem&)>& pi, std::vector<BasisKey> v_keys,
    Side side, int window) {
    auto g = H->A->group;
    if (!g) throw std::invalid_argument("coaction_from_representation: base has no group");
    for (const auto& kv : v_keys) {
        Elem v = Elem::delta(V, kv);
        if (pi(g->identity, v) != v)
            throw law_violation("representation law: pi_identity != id at v = " + v.str());
        for (const auto& ka : g->window(window))
            for (const auto& kb : g->window(window))
                if (pi(ka, pi(kb, v)) != pi(g->compose(ka, kb), v))
                    throw law_violation("representation law: pi_g pi_h != pi_gh");
    }
    Coaction c;
    c.H = H;
    c.V = V;
    c.side = side;
    c.v_keys = std::move(v_keys);
    c.carrier = side == Side::Right ? make_tensor_carrier({V, H->A})
                                    : make_tensor_carrier({H->A, V});
    auto tc = c.carrier;
    auto A = H->A;
    c.gamma = [tc, A, pi, side](const Elem& v) {
        LazyTensor m;
        m.tc = tc;
        auto by_a = [tc, A, pi, side, v](const Elem& a) -> std::optional<Elem> {
            Elem out(tc.space);
            for (const auto& [kg, cg] : a.coeff()) {
                Elem pv = pi(kg, v);
                for (const auto& [kv, cv] : pv.coeff())
                    out.add_term(side == Side::Right ? concat_keys(kv, kg) : concat_keys(kg, kv),
                                 cg * cv);
            }
            return out;
        };
        if (side == Side::Right) {
            m.alg2 = A;
            m.mul2_left = m.mul2_right = by_a;  // Gamma(v)(1(x)delta_g) = pi_g(v)(x)delta_g
        } else {
            m.alg1 = A;
            m.mul1_left = m.mul1_right = by_a;
        }
        return m;
    };
    return c;
}

bool coaction_counit_check(const Coaction& c, const Elem& v) {
    if (c.side != Side::Right) throw std::invalid_argument("coaction_counit_check: right side only");
    auto t = c.gamma(v).mul2_right(c.H->counit_witness);
    if (!t) return false;
    Elem out(c.V);
    for (const auto& [kv, ka, coeff] : pair_terms(c.carrier, *t)) {
        Scalar e = c.H->counit(ka);
        for (const auto& [k, cc] : kv.coeff()) out.add_term(k, coeff * e * cc);
    }
    return out == v;
}

Elem cotwist_T(const Coaction& c, const Elem& a, const Elem& v) {
    auto t = c.gamma(v).mul2_left(a);  // (1(x)a)Gamma(v)
    if (!t) throw law_violation("cotwist_T: product is not finite");
    return *t;
}

Elem cotwist_inverse(const Coaction& c, const Elem& v, const Elem& a) {
    auto AxV = make_tensor_carrier({c.H->A, c.V});
    Elem out(AxV.space);
    if (a.is_zero() || v.is_zero()) return out;
    Elem e = local_unit(Side::Right, {a});  // a e = a
    auto t = c.gamma(v).mul2_right(c.H->antipode(e));  // sum w_i(x)p_i = Gamma(v)(1(x)S(e))
    if (!t) throw law_violation("cotwist_inverse: product is not finite");
    for (const auto& [w, pkey, coeff] : pair_terms(c.carrier, *t)) {
        Elem q = multiply(a, c.H->antipode_inv(pkey));  // a S^-1(p_i)
        for (const auto& [kq, cq] : q.coeff())
            for (const auto& [kw, cw] : w.coeff())
                out.add_term(concat_keys(kq, kw), coeff * cq * cw);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Three-leg extensions
// ---------------------------------------------------------------------------

TripleLazy extend_iota_gamma(const Coaction& c, const LazyTensor& y) {
    if (c.side != Side::Left)
        throw std::invalid_argument("extend_iota_gamma: needs a left coaction");
    auto A = c.H->A;
    TripleLazy z;
    z.tc = make_tensor_carrier({A, A, c.V});
    z.alg = A;
    auto tc3 = z.tc;
    auto ytc = y.tc;
    auto gamma = c.gamma;
    // (a(x)a'(x)1)z = (1(x)a'(x)1)(iota(x)Gamma)((a(x)1)y)
    z.mul12_left = [tc3, ytc, gamma, y](const Elem& a, const Elem& ap) -> std::optional<Elem> {
        auto t = y.mul1_left(a);
        if (!t) return std::nullopt;
        Elem out(tc3.space);
        for (const auto& [p, v, c1] : pair_terms(ytc, t ? *t : Elem())) {
            auto inner = gamma(v).mul1_left(ap);
            if (!inner) return std::nullopt;
            for (const auto& [ki, ci] : inner->coeff())
                for (const auto& [kp, cp] : p.coeff())
                    out.add_term(concat_keys(kp, ki), c1 * ci * cp);
        }
        return out;
    };
    z.mul12_right = [tc3, ytc, gamma, y](const Elem& a, const Elem& ap) -> std::optional<Elem> {
        auto t = y.mul1_right(a);
        if (!t) return std::nullopt;
        Elem out(tc3.space);
        for (const auto& [p, v, c1] : pair_terms(ytc, *t)) {
            auto inner = gamma(v).mul1_right(ap);
            if (!inner) return std::nullopt;
            for (const auto& [ki, ci] : inner->coeff())
                for (const auto& [kp, cp] : p.coeff())
                    out.add_term(concat_keys(kp, ki), c1 * ci * cp);
        }
        return out;
    };
    z.mul1_left = [ytc, gamma, y](const Elem& a)
        -> std::optional<std::vector<std::pair<Elem, LazyTensor>>> {
        auto t = y.mul1_left(a);
        if (!t) return std::nullopt;
        std::vector<std::pair<Elem, LazyTensor>> out;
        for (const auto& [p, v, c1] : pair_terms(ytc, *t)) out.emplace_back(c1 * p, gamma(v));
        return out;
    };
    z.mul1_right = [ytc, gamma, y](const Elem& a)
        -> std::optional<std::vector<std::pair<Elem, LazyTensor>>> {
        auto t = y.mul1_right(a);
        if (!t) return std::nullopt;
        std::vector<std::pair<Elem, LazyTensor>> out;
        for (const auto& [p, v, c1] : pair_terms(ytc, *t)) out.emplace_back(c1 * p, gamma(v));
        return out;
    };
    return z;
}

TripleLazy extend_delta_iota(const MhaPtr& H, const SpacePtr& V, const LazyTensor& y) {
    if (!H->regular) throw law_violation("extend_delta_iota: needs a regular base");
    auto A = H->A;
    TripleLazy z;
    z.tc = make_tensor_carrier({A, A, V});
    z.alg = A;
    auto tc3 = z.tc;
    auto ytc = y.tc;
    // (a(x)a'(x)1)(Delta(x)iota)y = sum_i (p_i(x)1(x)1)(Delta(x)iota)((q_i(x)1)y)
    z.mul12_left = [tc3, ytc, H, y](const Elem& a, const Elem& ap) -> std::optional<Elem> {
        Elem out(tc3.space);
        for (const auto& [p, q] : H->factor_left(a, ap)) {
            auto t = y.mul1_left(q);
            if (!t) return std::nullopt;
            for (const auto& [r, v, c1] : pair_terms(ytc, *t)) {
                auto dd = H->delta(r).mul1_left(p);
                if (!dd) return std::nullopt;
                for (const auto& [kd, cd] : dd->coeff())
                    for (const auto& [kv, cv] : v.coeff())
                        out.add_term(concat_keys(kd, kv), c1 * cd * cv);
            }
        }
        return out;
    };
    z.mul12_right = [tc3, ytc, H, y](const Elem& a, const Elem& ap) -> std::optional<Elem> {
        Elem out(tc3.space);
        for (const auto& [r, s] : H->factor_right(a, ap)) {
            auto t = y.mul1_right(r);
            if (!t) return std::nullopt;
            for (const auto& [u, v, c1] : pair_terms(ytc, *t)) {
                auto dd = H->delta(u).mul1_right(s);
                if (!dd) return std::nullopt;
                for (const auto& [kd, cd] : dd->coeff())
                    for (const auto& [kv, cv] : v.coeff())
                        out.add_term(concat_keys(kd, kv), c1 * cd * cv);
            }
        }
        return out;
    };
    return z;
}

// ---------------------------------------------------------------------------
// Identity suites
// ---------------------------------------------------------------------------

SuiteReport hopf_axiom_suite(const MhaPtr& H, int window) {
    auto probes = grid(H->A, window);
    // legs conditions
    for (const auto& a : probes) {
        auto rep = m0_membership(H->delta(a), M0Shape::LegsMixed, window);
        if (!rep.member)
            return {false, "legs condition fails for Delta(" + a.str() + "): " + rep.witness};
    }
    // Delta is a homomorphism, extensionally on A(x)A probes
    auto AxA = as_algebra(H->AxA.space);
    std::vector<Elem> tens;
    for (const auto& k : AxA->probe_keys(window)) tens.push_back(AxA->basis(k));
    for (const auto& a : probes)
        for (const auto& b : probes) {
            auto tab = H->delta(multiply(a, b));
            auto ta = H->delta(a);
            auto tb = H->delta(b);
            for (const auto& x : tens)
                if (tab.full_left(x) != tb.full_left(ta.full_left(x)))
                    return {false, "Delta(ab) != Delta(a)Delta(b) at a = " + a.str() +
                                       ", b = " + b.str() + ", probe " + x.str()};
        }
    // counit slices
    CoveringPlan left_plan, right_plan;
    left_plan.steps = {{0, Side::Left, WitnessSource::explicit_elem(H->counit_witness)}};
    right_plan.steps = {{1, Side::Left, WitnessSource::explicit_elem(H->counit_witness)}};
    Bilinear eps1 = [H](const Elem& p, const Elem& q) { return H->counit(p) * q; };
    Bilinear eps2 = [H](const Elem& p, const Elem& q) { return H->counit(q) * p; };
    bool verify = true;
    for (const auto& a : probes) {
        if (sweedler_eval2(H, eps1, left_plan, a, window, verify) != a)
            return {false, "sum eps(a_(1)) a_(2) != a at a = " + a.str()};
        if (sweedler_eval2(H, eps2, right_plan, a, window, verify) != a)
            return {false, "sum a_(1) eps(a_(2)) != a at a = " + a.str()};
        verify = false;
    }
    // coassociativity through both routes
    for (const auto& a : probes)
        for (const auto& ap : probes) {
            Trilinear F = [&ap](const Elem& p, const Elem& q, const Elem& r) {
                return tensor_elem(tensor_elem(multiply(ap, p), q), multiply(r, ap));
            };
            CoveringPlan p1, p2;
            p1.steps = {{0, Side::Left, WitnessSource::local_unit_of({ap})},
                        {2, Side::Right, WitnessSource::local_unit_of({ap})}};
            p2.steps = {{2, Side::Right, WitnessSource::local_unit_of({ap})},
                        {0, Side::Left, WitnessSource::local_unit_of({ap})}};
            Elem lhs = sweedler_eval3(H, F, p1, a, TripleRoute::IotaDelta, window);
            Elem rhs = sweedler_eval3(H, F, p2, a, TripleRoute::DeltaIota, window);
            if (lhs != rhs)
                return {false, "coassociativity fails at a = " + a.str() + ", a' = " + ap.str()};
        }
    return {};
}

SuiteReport antipode_identity_suite(const MhaPtr& H, int window) {
    if (!H->regular) return {false, "base is not regular"};
    auto probes = grid(H->A, window);
    Elem big = local_unit(Side::Left, probes);  // unit for every probe
    // sum a' a_(1) S(a_(2)) a_(3) = a' a, multiplying on the left only
    for (const auto& ap : probes) {
        Trilinear F = [&](const Elem& p, const Elem& q, const Elem& r) {
            return multiply(multiply(multiply(ap, p), H->antipode(q)), r);
        };
        CoveringPlan plan;
        plan.steps = {{0, Side::Left, WitnessSource::local_unit_of({ap})},
                      {1, Side::Left,
                       WitnessSource::derived([H, big](const std::vector<Elem>&) {
                           return H->antipode_inv(big);  // S(w) r = r for window r
                       })}};
        bool verify = true;
        for (const auto& a : probes) {
            Elem got = sweedler_eval3(H, F, plan, a, TripleRoute::IotaDelta, window, verify);
            verify = false;
            if (got != multiply(ap, a))
                return {false, "sum a' a_(1) S(a_(2)) a_(3) != a' a at a = " + a.str() +
                                   ", a' = " + ap.str()};
        }
    }
    // sum p_(2) S^-1(p_(1)) = eps(p) 1, extensionally against probe b
    for (const auto& b : probes) {
        Bilinear F = [&](const Elem& p1, const Elem& p2) {
            return multiply(multiply(p2, H->antipode_inv(p1)), b);
        };
        CoveringPlan plan;
        plan.steps = {{0, Side::Left, WitnessSource::derived([H, big](const std::vector<Elem>&) {
                           return H->antipode(big);  // S^-1(w) b = b for window b
                       })}};
        bool verify = true;
        for (const auto& p : probes) {
            Elem got = sweedler_eval2(H, F, plan, p, window, verify);
            verify = false;
            if (got != H->counit(p) * b)
                return {false, "sum p_(2) S^-1(p_(1)) != eps(p) 1 at p = " + p.str() +
                                   ", probe " + b.str()};
        }
    }
    return {};
}

}  // namespace mhk
