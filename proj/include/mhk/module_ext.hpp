#pragma once

#include "mhk/multiplier.hpp"

#include <optional>

namespace mhk {

/// A plain basis-indexed vector space (carrier of a module or coaction).
SpacePtr make_plain_space(const std::string& name, int arity);

/// The tensor space F1 (x) ... (x) Fn with concatenated keys. When all
/// factors are algebras this is the tensor algebra, so element spaces match.
struct TensorCarrier {
    SpacePtr space;
    std::vector<SpacePtr> factors;
    std::vector<int> offsets;  // key offset of each factor; offsets.back() = total arity

    int factor_begin(int leg) const { return offsets[leg]; }
    int factor_end(int leg) const { return offsets[leg + 1]; }
};

TensorCarrier make_tensor_carrier(const std::vector<SpacePtr>& factors);

/// a acting on tensor leg `leg` of x by multiplication (Side::Left: a*x_leg,
/// Side::Right: x_leg*a). The leg factor must be an algebra.
Elem leg_act(const TensorCarrier& tc, int leg, Side side, const Elem& a, const Elem& x);

/// Terms of a materialized tensor, split per factor; used when applying
/// multilinear maps.
std::vector<std::tuple<Elem, Elem, Scalar>> pair_terms(const TensorCarrier& tc, const Elem& x);
std::vector<std::tuple<Elem, Elem, Elem, Scalar>> triple_terms(const TensorCarrier& tc,
                                                               const Elem& x);

// ---------------------------------------------------------------------------
// Modules and their completions
// ---------------------------------------------------------------------------

struct ModuleDef {
    AlgebraPtr left_alg;   // algebra acting on the left (null for right modules)
    AlgebraPtr right_alg;  // algebra acting on the right (null for left modules)
    SpacePtr carrier;
    std::function<Elem(const Elem& a, const Elem& x)> act_left;
    std::function<Elem(const Elem& x, const Elem& a)> act_right;
    bool unital = false;
    bool nondegenerate = false;
    bool support_local = false;
    /// e in the acting algebra with e*x = x (Left) or x*e = x (Right) for all
    /// listed carrier vectors; nullopt when none exists.
    std::function<std::optional<Elem>(Side, const std::vector<Elem>&)> action_unit;
    /// Projects carrier support onto acting-algebra keys (probe hints).
    std::function<KeySet(const Elem&)> hint_keys;
};

using ModulePtr = std::shared_ptr<const ModuleDef>;

/// A as a bimodule over itself.
ModulePtr self_bimodule(const AlgebraPtr& a);
/// The bimodule tc with one algebra multiplying a single tensor leg on both
/// sides (Example-1.7.iii shape: A acting on A(x)V, or on V(x)A).
ModulePtr leg_bimodule(const TensorCarrier& tc, int leg);
/// Left module structure only (multiplication on the given leg from the left).
ModulePtr leg_left_module(const TensorCarrier& tc, int leg);

enum class ExtSide { Left, Right, Bi };

/// A lazily represented element of a completed module: rho gives a -> a*y
/// (left / bimodule), lambda gives a -> y*a (right / bimodule).
struct ExtModElem {
    ExtSide side = ExtSide::Left;
    ModulePtr module;
    std::function<Elem(const Elem&)> rho;
    std::function<Elem(const Elem&)> lambda;
    KeySet support_hint;  // acting-algebra keys used to build probes
};

std::vector<Elem> module_probes(const ModulePtr& mod, Side side, const KeySet& hints,
                                int window = 5);

/// Constructs a completion element after probe-verifying the defining law
/// (rho(aa') = a rho(a') one-sided, a lambda(a') = rho(a) a' for bimodules).
/// Throws law_violation with the witnessing pair otherwise.
ExtModElem ext_from_map(const ModulePtr& mod, ExtSide side, std::function<Elem(const Elem&)> rho,
                        std::function<Elem(const Elem&)> lambda, KeySet support_hint,
                        int window = 5);

/// a*y (Side::Left) or y*a (Side::Right) as a finite carrier vector.
Elem ext_eval(const ExtModElem& y, const Elem& a, Side side);

/// The module action on the completion: a*y resp. y*a as a new lazy element.
ExtModElem module_act(const Elem& a, const ExtModElem& y);
ExtModElem module_act_right(const ExtModElem& y, const Elem& a);

ExtModElem embed_module_elem(const ModulePtr& mod, const Elem& x);

/// Reconciles a left-completion and a right-completion element into a
/// bimodule-completion element (succeeds iff a*lambda(a') = rho(a)*a' on all
/// probe pairs; throws law_violation with the witnessing pair otherwise).
ExtModElem pair_left_right(const ExtModElem& left_elem, const ExtModElem& right_elem,
                           int window = 5);

/// a*(e*y) = a*y for e a right local unit of a: the computable shadow of
/// density of X in its completion.
bool completion_net_stabilizes(const ExtModElem& y, const Elem& a);

// ---------------------------------------------------------------------------
// Lazy tensor elements and the legs-condition membership predicates
// ---------------------------------------------------------------------------

/// A lazily represented multiplier-shaped element of a completed tensor
/// bimodule. Each closure multiplies by an element of the acting algebra on
/// one leg; a closure returns nullopt when the product fails to have finite
/// support (the membership witness), and is null when never available.
struct LazyTensor {
    TensorCarrier tc;            // two factors
    AlgebraPtr alg1, alg2;       // acting algebra per leg (may be null)
    std::function<std::optional<Elem>(const Elem&)> mul1_left;   // (a(x)1)*m
    std::function<std::optional<Elem>(const Elem&)> mul1_right;  // m*(a(x)1)
    std::function<std::optional<Elem>(const Elem&)> mul2_left;   // (1(x)a)*m
    std::function<std::optional<Elem>(const Elem&)> mul2_right;  // m*(1(x)a)
    /// Full two-sided multiplication by tensor-algebra elements, when the
    /// carrier is an algebra (used for M(A(x)A) multipliers such as coproduct
    /// values).
    std::function<Elem(const Elem&)> full_left;   // x -> x*m
    std::function<Elem(const Elem&)> full_right;  // x -> m*x
};

LazyTensor lazy_from_elem(const TensorCarrier& tc, const Elem& x);

/// Three-legged analogue, for elements of completions of A(x)A(x)V-shaped
/// carriers. mul1_* return the finite decomposition of (a(x)1(x)1)*z as a sum
/// of first-leg elements tensored with lazy two-leg remainders.
struct TripleLazy {
    TensorCarrier tc;  // three factors
    AlgebraPtr alg;    // algebra acting on legs 1 and 2
    std::function<std::optional<Elem>(const Elem&, const Elem&)> mul12_left;
    std::function<std::optional<Elem>(const Elem&, const Elem&)> mul12_right;
    std::function<std::optional<std::vector<std::pair<Elem, LazyTensor>>>(const Elem&)> mul1_left;
    std::function<std::optional<std::vector<std::pair<Elem, LazyTensor>>>(const Elem&)> mul1_right;
};

enum class M0Shape {
    PairLeg1,      // (a(x)1)m and m(a(x)1) land in the carrier
    PairLeg2,      // (1(x)a)m and m(1(x)a) land in the carrier
    LegsMixed,     // (a(x)1)m and m(1(x)a) land in the carrier (coproduct legs)
    TripleLeg12,   // (a(x)a'(x)1)z both sides land in the carrier
    TripleNested,  // (a(x)1(x)1)z lands in A(x)M0(two-leg shape)
};

struct MembershipReport {
    bool member = true;
    std::string witness;
};

MembershipReport m0_membership(const LazyTensor& m, M0Shape shape, int window = 5);
/// For TripleNested, inner_shape names the two-leg shape the remainders must
/// satisfy.
MembershipReport m0_membership(const TripleLazy& z, M0Shape shape,
                               M0Shape inner_shape = M0Shape::PairLeg1, int window = 3);

/// View a two-leg lazy element as a completion element of the bimodule where
/// the algebra multiplies the given leg.
ExtModElem ext_from_lazy(const LazyTensor& m, int leg, KeySet support_hint);

}  // namespace mhk
