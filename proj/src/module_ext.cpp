#include "mhk/module_ext.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace mhk {

namespace {

BasisKey slice(const BasisKey& k, int b, int e) { return BasisKey(k.begin() + b, k.begin() + e); }

BasisKey splice(const BasisKey& k, int b, int e, const BasisKey& mid) {
    BasisKey out(k.begin(), k.begin() + b);
    out.insert(out.end(), mid.begin(), mid.end());
    out.insert(out.end(), k.begin() + e, k.end());
    return out;
}

std::vector<Elem> delta_probes(const AlgebraPtr& alg, int window) {
    std::vector<Elem> out;
    for (const auto& k : alg->probe_keys(window)) out.push_back(alg->basis(k));
    return out;
}

}  // namespace

SpacePtr make_plain_space(const std::string& name, int arity) {
    static std::map<std::pair<std::string, int>, SpacePtr> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_pair(name, arity);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_shared<Space>(name, arity)).first;
    return it->second;
}

TensorCarrier make_tensor_carrier(const std::vector<SpacePtr>& factors) {
    if (factors.empty()) throw std::invalid_argument("make_tensor_carrier: no factors");
    TensorCarrier tc;
    tc.factors = factors;
    tc.offsets = {0};
    bool all_alg = true;
    for (const auto& f : factors) {
        tc.offsets.push_back(tc.offsets.back() + f->key_arity());
        if (!std::dynamic_pointer_cast<const Algebra>(f)) all_alg = false;
    }
    if (all_alg) {
        // fold through tensor_algebra so the space matches tensor_elem results
        AlgebraPtr s = as_algebra(factors[0]);
        for (std::size_t i = 1; i < factors.size(); ++i) s = tensor_algebra(s, as_algebra(factors[i]));
        tc.space = s;
    } else {
        std::string name = factors[0]->name();
        for (std::size_t i = 1; i < factors.size(); ++i) name += "(x)" + factors[i]->name();
        tc.space = make_plain_space(name, tc.offsets.back());
    }
    return tc;
}

Elem leg_act(const TensorCarrier& tc, int leg, Side side, const Elem& a, const Elem& x) {
    auto alg = as_algebra(tc.factors[leg]);
    if (!a.space() || a.space()->id() != alg->id())
        throw std::invalid_argument("leg_act: element does not live in the leg algebra");
    if (!x.space() || x.space()->id() != tc.space->id())
        throw std::invalid_argument("leg_act: tensor element is not in the carrier");
    const int b = tc.factor_begin(leg), e = tc.factor_end(leg);
    Elem out(tc.space);
    for (const auto& [kx, cx] : x.coeff()) {
        BasisKey kl = slice(kx, b, e);
        for (const auto& [ka, ca] : a.coeff()) {
            Elem p = side == Side::Left ? alg->product_rule(ka, kl) : alg->product_rule(kl, ka);
            for (const auto& [kp, cp] : p.coeff()) out.add_term(splice(kx, b, e, kp), cx * ca * cp);
        }
    }
    return out;
}

std::vector<std::tuple<Elem, Elem, Scalar>> pair_terms(const TensorCarrier& tc, const Elem& x) {
    if (tc.factors.size() != 2) throw std::invalid_argument("pair_terms: carrier is not binary");
    std::vector<std::tuple<Elem, Elem, Scalar>> out;
    for (const auto& [k, c] : x.coeff())
        out.emplace_back(Elem::delta(tc.factors[0], slice(k, tc.offsets[0], tc.offsets[1])),
                         Elem::delta(tc.factors[1], slice(k, tc.offsets[1], tc.offsets[2])), c);
    return out;
}

std::vector<std::tuple<Elem, Elem, Elem, Scalar>> triple_terms(const TensorCarrier& tc,
                                                               const Elem& x) {
    if (tc.factors.size() != 3) throw std::invalid_argument("triple_terms: carrier is not ternary");
    std::vector<std::tuple<Elem, Elem, Elem, Scalar>> out;
    for (const auto& [k, c] : x.coeff())
        out.emplace_back(Elem::delta(tc.factors[0], slice(k, tc.offsets[0], tc.offsets[1])),
                         Elem::delta(tc.factors[1], slice(k, tc.offsets[1], tc.offsets[2])),
                         Elem::delta(tc.factors[2], slice(k, tc.offsets[2], tc.offsets[3])), c);
    return out;
}

// ---------------------------------------------------------------------------
// Modules
// ---------------------------------------------------------------------------

ModulePtr self_bimodule(const AlgebraPtr& a) {
    static std::map<std::uint64_t, ModulePtr> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(a->id());
    if (it != cache.end()) return it->second;
    auto m = std::make_shared<ModuleDef>();
    m->left_alg = m->right_alg = a;
    m->carrier = a;
    m->act_left = [](const Elem& x, const Elem& y) { return multiply(x, y); };
    m->act_right = [](const Elem& x, const Elem& y) { return multiply(x, y); };
    m->unital = a->unital || (a->left_local_units && a->right_local_units);
    m->nondegenerate = true;
    m->support_local = a->support_local;
    m->action_unit = [](Side side, const std::vector<Elem>& xs) -> std::optional<Elem> {
        try {
            return local_unit(side, xs);
        } catch (const std::logic_error&) {
            return std::nullopt;
        }
    };
    m->hint_keys = [](const Elem& x) { return x.support(); };
    cache.emplace(a->id(), m);
    return m;
}

namespace {

ModulePtr leg_module_impl(const TensorCarrier& tc, int leg, bool with_right) {
    static std::map<std::tuple<std::uint64_t, int, bool>, ModulePtr> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_tuple(tc.space->id(), leg, with_right);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto alg = as_algebra(tc.factors[leg]);
    auto m = std::make_shared<ModuleDef>();
    m->left_alg = alg;
    if (with_right) m->right_alg = alg;
    m->carrier = tc.space;
    m->act_left = [tc, leg](const Elem& a, const Elem& x) { return leg_act(tc, leg, Side::Left, a, x); };
    if (with_right)
        m->act_right = [tc, leg](const Elem& x, const Elem& a) {
            return leg_act(tc, leg, Side::Right, a, x);
        };
    m->unital = alg->unital || (alg->left_local_units && alg->right_local_units);
    m->nondegenerate = true;
    m->support_local = alg->support_local;
    const int b = tc.factor_begin(leg), e = tc.factor_end(leg);
    m->hint_keys = [b, e](const Elem& x) {
        KeySet out;
        for (const auto& [k, _] : x.coeff()) out.insert(slice(k, b, e));
        return out;
    };
    m->action_unit = [tc, leg, alg, b, e](Side side,
                                          const std::vector<Elem>& xs) -> std::optional<Elem> {
        KeySet keys;
        for (const auto& x : xs)
            for (const auto& [k, _] : x.coeff()) keys.insert(slice(k, b, e));
        try {
            Elem u = local_unit_for_keys(alg, side, keys);
            for (const auto& x : xs) {
                if ((side == Side::Left || side == Side::Both) &&
                    leg_act(tc, leg, Side::Left, u, x) != x)
                    return std::nullopt;
                if ((side == Side::Right || side == Side::Both) &&
                    leg_act(tc, leg, Side::Right, u, x) != x)
                    return std::nullopt;
            }
            return u;
        } catch (const std::logic_error&) {
            return std::nullopt;
        }
    };
    cache.emplace(key, m);
    return m;
}

}  // namespace

ModulePtr leg_bimodule(const TensorCarrier& tc, int leg) { return leg_module_impl(tc, leg, true); }
ModulePtr leg_left_module(const TensorCarrier& tc, int leg) {
    return leg_module_impl(tc, leg, false);
}

std::vector<Elem> module_probes(const ModulePtr& mod, Side side, const KeySet& hints, int window) {
    const AlgebraPtr& alg = side == Side::Right ? mod->right_alg : mod->left_alg;
    if (!alg) throw std::logic_error("module_probes: no acting algebra on that side");
    return canonical_probes(alg, hints, window);
}

ExtModElem ext_from_map(const ModulePtr& mod, ExtSide side, std::function<Elem(const Elem&)> rho,
                        std::function<Elem(const Elem&)> lambda, KeySet support_hint, int window) {
    ExtModElem y;
    y.side = side;
    y.module = mod;
    y.rho = std::move(rho);
    y.lambda = std::move(lambda);
    y.support_hint = std::move(support_hint);
    if (side != ExtSide::Right) {
        if (!mod->left_alg || !y.rho) throw std::logic_error("ext_from_map: missing left data");
        auto probes = module_probes(mod, Side::Left, y.support_hint, window);
        for (const auto& a : probes)
            for (const auto& ap : probes)
                if (y.rho(multiply(a, ap)) != mod->act_left(a, y.rho(ap)))
                    throw law_violation("rho(aa') != a rho(a') at a = " + a.str() +
                                        ", a' = " + ap.str());
    }
    if (side != ExtSide::Left) {
        if (!mod->right_alg || !y.lambda) throw std::logic_error("ext_from_map: missing right data");
        auto probes = module_probes(mod, Side::Right, y.support_hint, window);
        for (const auto& a : probes)
            for (const auto& ap : probes)
                if (y.lambda(multiply(a, ap)) != mod->act_right(y.lambda(a), ap))
                    throw law_violation("lambda(aa') != lambda(a) a' at a = " + a.str() +
                                        ", a' = " + ap.str());
    }
    if (side == ExtSide::Bi) {
        auto pl = module_probes(mod, Side::Left, y.support_hint, window);
        auto pr = module_probes(mod, Side::Right, y.support_hint, window);
        for (const auto& a : pl)
            for (const auto& ap : pr)
                if (mod->act_left(a, y.lambda(ap)) != mod->act_right(y.rho(a), ap))
                    throw law_violation("a lambda(a') != rho(a) a' at a = " + a.str() +
                                        ", a' = " + ap.str());
    }
    return y;
}

Elem ext_eval(const ExtModElem& y, const Elem& a, Side side) {
    if (side == Side::Left) {
        if (y.side == ExtSide::Right) throw std::logic_error("ext_eval: no left action defined");
        return y.rho(a);
    }
    if (side == Side::Right) {
        if (y.side == ExtSide::Left) throw std::logic_error("ext_eval: no right action defined");
        return y.lambda(a);
    }
    throw std::invalid_argument("ext_eval: side must be Left or Right");
}

ExtModElem module_act(const Elem& a, const ExtModElem& y) {
    if (y.side == ExtSide::Right)
        throw std::logic_error("module_act: right-completion elements have no left action");
    ExtModElem out = y;
    auto rho = y.rho;
    out.rho = [rho, a](const Elem& ap) { return rho(multiply(ap, a)); };
    if (y.side == ExtSide::Bi) {
        auto mod = y.module;
        auto lambda = y.lambda;
        out.lambda = [mod, lambda, a](const Elem& ap) { return mod->act_left(a, lambda(ap)); };
    }
    for (const auto& [k, _] : a.coeff()) out.support_hint.insert(k);
    return out;
}

ExtModElem module_act_right(const ExtModElem& y, const Elem& a) {
    if (y.side == ExtSide::Left)
        throw std::logic_error("module_act_right: left-completion elements have no right action");
    ExtModElem out = y;
    auto lambda = y.lambda;
    out.lambda = [lambda, a](const Elem& ap) { return lambda(multiply(a, ap)); };
    if (y.side == ExtSide::Bi) {
        auto mod = y.module;
        auto rho = y.rho;
        out.rho = [mod, rho, a](const Elem& ap) { return mod->act_right(rho(ap), a); };
    }
    for (const auto& [k, _] : a.coeff()) out.support_hint.insert(k);
    return out;
}

ExtModElem embed_module_elem(const ModulePtr& mod, const Elem& x) {
    ExtModElem y;
    y.module = mod;
    y.side = mod->left_alg && mod->right_alg ? ExtSide::Bi
             : mod->left_alg                 ? ExtSide::Left
                                             : ExtSide::Right;
    if (mod->left_alg) y.rho = [mod, x](const Elem& a) { return mod->act_left(a, x); };
    if (mod->right_alg) y.lambda = [mod, x](const Elem& a) { return mod->act_right(x, a); };
    if (mod->hint_keys) y.support_hint = mod->hint_keys(x);
    return y;
}

ExtModElem pair_left_right(const ExtModElem& left_elem, const ExtModElem& right_elem, int window) {
    if (left_elem.side == ExtSide::Right || right_elem.side == ExtSide::Left)
        throw std::invalid_argument("pair_left_right: sides are reversed");
    if (left_elem.module->carrier->id() != right_elem.module->carrier->id())
        throw std::invalid_argument("pair_left_right: different carriers");
    auto mod = left_elem.module;
    KeySet hints = left_elem.support_hint;
    hints.insert(right_elem.support_hint.begin(), right_elem.support_hint.end());
    auto pl = module_probes(mod, Side::Left, hints, window);
    auto pr = module_probes(mod, Side::Right, hints, window);
    for (const auto& a : pl)
        for (const auto& ap : pr)
            if (mod->act_left(a, right_elem.lambda(ap)) != mod->act_right(left_elem.rho(a), ap))
                throw law_violation("a lambda(a') != rho(a) a' at a = " + a.str() +
                                    ", a' = " + ap.str());
    ExtModElem y;
    y.side = ExtSide::Bi;
    y.module = mod;
    y.rho = left_elem.rho;
    y.lambda = right_elem.lambda;
    y.support_hint = std::move(hints);
    return y;
}

bool completion_net_stabilizes(const ExtModElem& y, const Elem& a) {
    if (y.side == ExtSide::Right)
        throw std::logic_error("completion_net_stabilizes: needs a left action");
    Elem e = local_unit(Side::Right, {a});  // a*e = a
    // a*(e*y) vs a*y
    return y.rho(multiply(a, e)) == y.rho(a);
}

// ---------------------------------------------------------------------------
// Lazy tensors
// ---------------------------------------------------------------------------

LazyTensor lazy_from_elem(const TensorCarrier& tc, const Elem& x) {
    if (!x.space() || x.space()->id() != tc.space->id())
        throw std::invalid_argument("lazy_from_elem: element is not in the carrier");
    LazyTensor m;
    m.tc = tc;
    m.alg1 = std::dynamic_pointer_cast<const Algebra>(tc.factors[0]);
    m.alg2 = std::dynamic_pointer_cast<const Algebra>(tc.factors[1]);
    if (m.alg1) {
        m.mul1_left = [tc, x](const Elem& a) { return leg_act(tc, 0, Side::Left, a, x); };
        m.mul1_right = [tc, x](const Elem& a) { return leg_act(tc, 0, Side::Right, a, x); };
    }
    if (m.alg2) {
        m.mul2_left = [tc, x](const Elem& a) { return leg_act(tc, 1, Side::Left, a, x); };
        m.mul2_right = [tc, x](const Elem& a) { return leg_act(tc, 1, Side::Right, a, x); };
    }
    if (std::dynamic_pointer_cast<const Algebra>(tc.space)) {
        m.full_left = [x](const Elem& z) { return multiply(z, x); };
        m.full_right = [x](const Elem& z) { return multiply(x, z); };
    }
    return m;
}

namespace {

struct LegClosures {
    const std::function<std::optional<Elem>(const Elem&)>* into;  // (a on leg) * m
    const std::function<std::optional<Elem>(const Elem&)>* from;  // m * (a on leg)
    int leg_into, leg_from;
    AlgebraPtr alg_into, alg_from;
};

MembershipReport fail(std::string w) { return {false, std::move(w)}; }

}  // namespace

MembershipReport m0_membership(const LazyTensor& m, M0Shape shape, int window) {
    LegClosures lc;
    switch (shape) {
        case M0Shape::PairLeg1:
            lc = {&m.mul1_left, &m.mul1_right, 0, 0, m.alg1, m.alg1};
            break;
        case M0Shape::PairLeg2:
            lc = {&m.mul2_left, &m.mul2_right, 1, 1, m.alg2, m.alg2};
            break;
        case M0Shape::LegsMixed:
            lc = {&m.mul1_left, &m.mul2_right, 0, 1, m.alg1, m.alg2};
            break;
        default:
            throw std::invalid_argument("m0_membership: triple shape on a pair tensor");
    }
    if (!lc.alg_into || !lc.alg_from) return fail("no acting algebra on a required leg");
    if (!*lc.into || !*lc.from) return fail("required multiplication closure unavailable");
    auto pi = delta_probes(lc.alg_into, window);
    auto pf = delta_probes(lc.alg_from, window);
    std::vector<Elem> li, rf;
    for (const auto& a : pi) {
        auto v = (*lc.into)(a);
        if (!v) return fail("left product by " + a.str() + " has infinite support");
        li.push_back(*v);
    }
    for (const auto& a : pf) {
        auto v = (*lc.from)(a);
        if (!v) return fail("right product by " + a.str() + " has infinite support");
        rf.push_back(*v);
    }
    for (std::size_t i = 0; i < pi.size(); ++i)
        for (std::size_t j = 0; j < pf.size(); ++j) {
            Elem lhs = leg_act(m.tc, lc.leg_from, Side::Right, pf[j], li[i]);
            Elem rhs = leg_act(m.tc, lc.leg_into, Side::Left, pi[i], rf[j]);
            if (lhs != rhs)
                return fail("one-sided products disagree at a = " + pi[i].str() +
                            ", a' = " + pf[j].str());
        }
    return {};
}

MembershipReport m0_membership(const TripleLazy& z, M0Shape shape, M0Shape inner_shape,
                               int window) {
    if (shape == M0Shape::TripleLeg12) {
        if (!z.mul12_left || !z.mul12_right) return fail("required 12-leg closures unavailable");
        auto probes = delta_probes(z.alg, window);
        const std::size_t n = probes.size();
        std::vector<std::vector<Elem>> L(n, std::vector<Elem>()), R(n, std::vector<Elem>());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto l = z.mul12_left(probes[i], probes[j]);
                if (!l)
                    return fail("(a(x)a'(x)1)z infinite at a = " + probes[i].str() +
                                ", a' = " + probes[j].str());
                auto r = z.mul12_right(probes[i], probes[j]);
                if (!r)
                    return fail("z(a(x)a'(x)1) infinite at a = " + probes[i].str() +
                                ", a' = " + probes[j].str());
                L[i].push_back(*l);
                R[i].push_back(*r);
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < n; ++l) {
                        Elem lhs = leg_act(z.tc, 1, Side::Right, probes[l],
                                           leg_act(z.tc, 0, Side::Right, probes[k], L[i][j]));
                        Elem rhs = leg_act(z.tc, 1, Side::Left, probes[j],
                                           leg_act(z.tc, 0, Side::Left, probes[i], R[k][l]));
                        if (lhs != rhs)
                            return fail("two-sided 12-leg products disagree at (" +
                                        probes[i].str() + ", " + probes[j].str() + ") x (" +
                                        probes[k].str() + ", " + probes[l].str() + ")");
                    }
        return {};
    }
    if (shape == M0Shape::TripleNested) {
        if (!z.mul1_left) return fail("first-leg closure unavailable");
        for (const auto& a : delta_probes(z.alg, window)) {
            auto parts = z.mul1_left(a);
            if (!parts) return fail("(a(x)1(x)1)z infinite at a = " + a.str());
            for (const auto& [e, lt] : *parts) {
                auto rep = m0_membership(lt, inner_shape, window);
                if (!rep.member)
                    return fail("remainder after a = " + a.str() + " fails: " + rep.witness);
            }
            if (z.mul1_right) {
                auto rparts = z.mul1_right(a);
                if (!rparts) return fail("z(a(x)1(x)1) infinite at a = " + a.str());
                for (const auto& [e, lt] : *rparts) {
                    auto rep = m0_membership(lt, inner_shape, window);
                    if (!rep.member)
                        return fail("remainder after a = " + a.str() + " fails: " + rep.witness);
                }
            }
        }
        return {};
    }
    throw std::invalid_argument("m0_membership: pair shape on a triple tensor");
}

ExtModElem ext_from_lazy(const LazyTensor& m, int leg, KeySet support_hint) {
    const auto& rho_cl = leg == 0 ? m.mul1_left : m.mul2_left;
    const auto& lam_cl = leg == 0 ? m.mul1_right : m.mul2_right;
    if (!rho_cl || !lam_cl)
        throw std::logic_error("ext_from_lazy: missing multiplication closures on leg");
    ExtModElem y;
    y.side = ExtSide::Bi;
    y.module = leg_bimodule(m.tc, leg);
    auto r = rho_cl, l = lam_cl;
    y.rho = [r](const Elem& a) {
        auto v = r(a);
        if (!v) throw law_violation("left product has infinite support at a = " + a.str());
        return *v;
    };
    y.lambda = [l](const Elem& a) {
        auto v = l(a);
        if (!v) throw law_violation("right product has infinite support at a = " + a.str());
        return *v;
    };
    y.support_hint = std::move(support_hint);
    return y;
}

}  // namespace mhk
