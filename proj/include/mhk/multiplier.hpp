#pragma once

#include "mhk/algebra.hpp"

#include <functional>
#include <stdexcept>

namespace mhk {

/// A lazily represented element m of the multiplier algebra M(A), given by
/// the two evaluation procedures a -> a*m and a -> m*a with the compatibility
/// law a*(m*a') = (a*m)*a'. Equality is extensional on canonical probes.
struct Multiplier {
    AlgebraPtr alg;
    std::function<Elem(const Elem&)> left_eval;   // a -> a*m
    std::function<Elem(const Elem&)> right_eval;  // a -> m*a
    KeySet support_hint;

    Elem times_left(const Elem& a) const { return left_eval(a); }    // a*m
    Elem times_right(const Elem& a) const { return right_eval(a); }  // m*a
};

struct OneSidedMultiplier {
    AlgebraPtr alg;
    Side side;  // Left multipliers satisfy l(aa') = l(a)a'; right ones r(aa') = a r(a')
    std::function<Elem(const Elem&)> eval;
    KeySet support_hint;
};

Multiplier embed(const Elem& a);
Multiplier unit_multiplier(const AlgebraPtr& alg);

/// Constructs a multiplier after verifying linearity and the compatibility
/// law on the canonical probe set; throws law_violation with the witnessing
/// probe pair otherwise.
Multiplier make_multiplier(const AlgebraPtr& alg, std::function<Elem(const Elem&)> left_eval,
                           std::function<Elem(const Elem&)> right_eval, KeySet support_hint,
                           int window = 5);

/// (m*n): a*(mn) = (a*m)*n and (mn)*a = m*(n*a).
Multiplier multiplier_product(const Multiplier& m, const Multiplier& n);

/// Canonical probes: deltas over the union of both support hints and the
/// algebra's probe window, plus a local unit for that set when available.
std::vector<Elem> canonical_probes(const AlgebraPtr& alg, const KeySet& hints, int window = 5);

bool mult_equal(const Multiplier& m, const Multiplier& n, const std::vector<Elem>& probes);
bool mult_equal(const Multiplier& m, const Multiplier& n, int window = 5);

struct law_violation : std::runtime_error {
    explicit law_violation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mhk
