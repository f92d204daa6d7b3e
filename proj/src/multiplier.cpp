#include "mhk/multiplier.hpp"

namespace mhk {

Multiplier embed(const Elem& a) {
    auto alg = as_algebra(a.space());
    return Multiplier{
        alg,
        [a](const Elem& b) { return multiply(b, a); },
        [a](const Elem& b) { return multiply(a, b); },
        a.support(),
    };
}

Multiplier unit_multiplier(const AlgebraPtr& alg) {
    return Multiplier{
        alg,
        [](const Elem& b) { return b; },
        [](const Elem& b) { return b; },
        {},
    };
}

std::vector<Elem> canonical_probes(const AlgebraPtr& alg, const KeySet& hints, int window) {
    KeySet keys = hints;
    for (const auto& k : alg->probe_keys(window)) keys.insert(k);
    std::vector<Elem> probes;
    probes.reserve(keys.size() + 1);
    for (const auto& k : keys) probes.push_back(alg->basis(k));
    if (alg->left_local_units || alg->right_local_units) {
        Side side = alg->left_local_units && alg->right_local_units ? Side::Both
                    : alg->left_local_units                         ? Side::Left
                                                                    : Side::Right;
        probes.push_back(local_unit_for_keys(alg, side, keys));
    }
    return probes;
}

Multiplier make_multiplier(const AlgebraPtr& alg, std::function<Elem(const Elem&)> left_eval,
                           std::function<Elem(const Elem&)> right_eval, KeySet support_hint,
                           int window) {
    auto probes = canonical_probes(alg, support_hint, window);
    // linearity spot-check on probe pairs
    for (std::size_t i = 0; i + 1 < probes.size() && i < 4; ++i) {
        Elem s = probes[i] + probes[i + 1];
        if (left_eval(s) != left_eval(probes[i]) + left_eval(probes[i + 1]) ||
            right_eval(s) != right_eval(probes[i]) + right_eval(probes[i + 1]))
            throw law_violation("make_multiplier: evaluation is not linear at probe " +
                                probes[i].str());
    }
    // compatibility a*(m*a') = (a*m)*a'
    for (const auto& a : probes)
        for (const auto& a2 : probes) {
            Elem lhs = multiply(a, right_eval(a2));
            Elem rhs = multiply(left_eval(a), a2);
            if (lhs != rhs)
                throw law_violation("make_multiplier: compatibility a*(m*a') = (a*m)*a' fails at (" +
                                    a.str() + ", " + a2.str() + ")");
        }
    return Multiplier{alg, std::move(left_eval), std::move(right_eval), std::move(support_hint)};
}

Multiplier multiplier_product(const Multiplier& m, const Multiplier& n) {
    if (m.alg->id() != n.alg->id())
        throw std::invalid_argument("multiplier_product: algebra mismatch");
    KeySet hint = m.support_hint;
    hint.insert(n.support_hint.begin(), n.support_hint.end());
    return Multiplier{
        m.alg,
        [m, n](const Elem& a) { return n.left_eval(m.left_eval(a)); },
        [m, n](const Elem& a) { return m.right_eval(n.right_eval(a)); },
        hint,
    };
}

bool mult_equal(const Multiplier& m, const Multiplier& n, const std::vector<Elem>& probes) {
    for (const auto& a : probes)
        if (m.left_eval(a) != n.left_eval(a) || m.right_eval(a) != n.right_eval(a)) return false;
    return true;
}

bool mult_equal(const Multiplier& m, const Multiplier& n, int window) {
    if (m.alg->id() != n.alg->id()) return false;
    KeySet hints = m.support_hint;
    hints.insert(n.support_hint.begin(), n.support_hint.end());
    return mult_equal(m, n, canonical_probes(m.alg, hints, window));
}

}  // namespace mhk
