#include "mhk/covering.hpp"

#include <stdexcept>

namespace mhk {

std::vector<Elem> carrier_probes(const ModulePtr& mod, const KeySet& hints, int window) {
    if (auto alg = std::dynamic_pointer_cast<const Algebra>(mod->carrier))
        return canonical_probes(alg, hints, window);
    std::vector<Elem> out;
    for (const auto& k : hints) out.push_back(Elem::delta(mod->carrier, k));
    return out;
}

CoverReport verify_cover(const CoveredMap& F, int window) {
    CoverReport rep;
    rep.complete = F.source->support_local;
    auto probes = carrier_probes(F.source, F.support_hint, window);
    if (F.left_witness) {
        for (const auto& x : probes)
            if (F.F(F.source->act_left(*F.left_witness, x)) != F.F(x)) {
                rep.left_ok = false;
                rep.witness = "F(e*x) != F(x) at x = " + x.str();
                break;
            }
    }
    if (F.right_witness) {
        for (const auto& x : probes)
            if (F.F(F.source->act_right(x, *F.right_witness)) != F.F(x)) {
                rep.right_ok = false;
                rep.witness = "F(x*f) != F(x) at x = " + x.str();
                break;
            }
    }
    return rep;
}

Elem extend_covered(const CoveredMap& F, const ExtModElem& y, int window) {
    if (!F.left_witness && !F.right_witness)
        throw law_violation("extend_covered: no covering witness declared");
    CoverReport rep = verify_cover(F, window);
    if (F.left_witness && !rep.left_ok)
        throw law_violation("extend_covered: " + rep.witness);
    if (F.right_witness && !rep.right_ok)
        throw law_violation("extend_covered: " + rep.witness);
    std::optional<Elem> vl, vr;
    if (F.left_witness) vl = F.F(ext_eval(y, *F.left_witness, Side::Left));
    if (F.right_witness) vr = F.F(ext_eval(y, *F.right_witness, Side::Right));
    if (vl && vr && *vl != *vr)
        throw law_violation("extend_covered: F(e*y) = " + vl->str() + " but F(y*f) = " +
                            vr->str());
    return vl ? *vl : *vr;
}

bool witness_independence(const CoveredMap& F, const Elem& e1, const Elem& e2,
                          const ExtModElem& y, int window) {
    for (const Elem* e : {&e1, &e2}) {
        CoveredMap g = F;
        g.left_witness = *e;
        g.right_witness.reset();
        if (!verify_cover(g, window).left_ok) return false;
    }
    // the uniqueness argument: h with e_i*h = e_i makes both values F(h*y)
    Elem h = local_unit(Side::Right, {e1, e2});
    Elem via_h = F.F(ext_eval(y, h, Side::Left));
    return F.F(ext_eval(y, e1, Side::Left)) == via_h &&
           F.F(ext_eval(y, e2, Side::Left)) == via_h;
}

bool verify_joint_cover(const CoveredMap& F, const Elem& e, const Elem& f, int window) {
    for (const auto& x : carrier_probes(F.source, F.support_hint, window))
        if (F.F(F.source->act_left(e, F.source->act_right(x, f))) != F.F(x)) return false;
    return true;
}

Elem module_to_multiplier_action(const ModulePtr& mod, const Multiplier& m, const Elem& x) {
    if (!mod->left_alg || mod->left_alg->id() != m.alg->id())
        throw std::invalid_argument("module_to_multiplier_action: module is not over M(A)'s base");
    auto e = mod->action_unit ? mod->action_unit(Side::Left, {x}) : std::nullopt;
    if (!e) throw law_violation("module_to_multiplier_action: no e with e*x = x");
    return mod->act_left(m.times_right(*e), x);  // (m*e)*x
}

Scalar extend_pairing(const Pairing& p, const Multiplier& m, const Elem& b) {
    if (b.is_zero()) return Scalar(0);
    auto e = p.unit_witness(b, Side::Left);   // b<|e = b
    auto f = p.unit_witness(b, Side::Right);  // f|>b = b
    if (!e && !f) throw law_violation("extend_pairing: no unit witness for " + b.str());
    if (e && p.act_right(b, *e) != b)
        throw law_violation("extend_pairing: b<|e != b for e = " + e->str());
    if (f && p.act_left(*f, b) != b)
        throw law_violation("extend_pairing: f|>b != b for f = " + f->str());
    std::optional<Scalar> vl, vr;
    if (e) vl = p.form(m.times_left(*e), b);   // <e*m, b>
    if (f) vr = p.form(m.times_right(*f), b);  // <m*f, b>
    if (vl && vr && !(*vl == *vr))
        throw law_violation("extend_pairing: one-sided extensions disagree at b = " + b.str());
    return vl ? *vl : *vr;
}

// ---------------------------------------------------------------------------
// Witness sources
// ---------------------------------------------------------------------------

WitnessSource WitnessSource::explicit_elem(Elem e) {
    WitnessSource s;
    s.kind = Kind::Explicit;
    s.value = std::move(e);
    return s;
}

WitnessSource WitnessSource::local_unit_of(std::vector<Elem> args) {
    WitnessSource s;
    s.kind = Kind::LocalUnitOf;
    s.unit_args = std::move(args);
    return s;
}

WitnessSource WitnessSource::action_unit_of(ModulePtr m, Elem x) {
    WitnessSource s;
    s.kind = Kind::ActionUnitOf;
    s.module = std::move(m);
    s.module_elem = std::move(x);
    return s;
}

WitnessSource WitnessSource::derived(std::function<Elem(const std::vector<Elem>&)> fn) {
    WitnessSource s;
    s.kind = Kind::Derived;
    s.derive = std::move(fn);
    return s;
}

Elem resolve_witness(const WitnessSource& src, Side side, const std::vector<Elem>& prefix) {
    switch (src.kind) {
        case WitnessSource::Kind::Explicit:
            return src.value;
        case WitnessSource::Kind::LocalUnitOf:
            try {
                return local_unit(Side::Both, src.unit_args);
            } catch (const std::logic_error&) {
                return local_unit(side, src.unit_args);
            }
        case WitnessSource::Kind::ActionUnitOf: {
            if (!src.module || !src.module->action_unit)
                throw law_violation("resolve_witness: module declares no action units");
            auto e = src.module->action_unit(side, {src.module_elem});
            if (!e) throw law_violation("resolve_witness: no action unit covers the element");
            return *e;
        }
        case WitnessSource::Kind::Derived:
            return src.derive(prefix);
    }
    throw std::logic_error("resolve_witness: unreachable");
}

}  // namespace mhk
