#pragma once

#include "mhk/covering.hpp"

namespace mhk {

/// A (regular) multiplier Hopf algebra: the coproduct lands in M(A(x)A) and
/// is handed out as a lazy tensor whose leg closures realize the legs
/// conditions. Factorizations a(x)a' = sum (p_i(x)1)Delta(q_i) (left) and
/// sum Delta(r_j)(s_j(x)1) (right) are closed-form per instance.
struct MultiplierHopf {
    AlgebraPtr A;
    TensorCarrier AxA;
    std::function<LazyTensor(const Elem&)> delta;
    std::function<Scalar(const Elem&)> counit;
    std::function<Elem(const Elem&)> antipode;
    std::function<Elem(const Elem&)> antipode_inv;  // null unless regular
    bool regular = false;
    Elem counit_witness;  // e with eps(e*a) = eps(a) = eps(a*e) for all a
    std::function<std::vector<std::pair<Elem, Elem>>(const Elem&, const Elem&)> factor_left;
    std::function<std::vector<std::pair<Elem, Elem>>(const Elem&, const Elem&)> factor_right;
};

using MhaPtr = std::shared_ptr<const MultiplierHopf>;

/// K(G) with Delta(f)(s,t) = f(st), eps(f) = f(e), S(f)(s) = f(s^-1).
MhaPtr build_function_mha(const GroupPtr& g);
/// C[G] with grouplike generators: Delta(u_g) = u_g(x)u_g.
MhaPtr build_group_mha(const GroupPtr& g);

/// <delta_s, u_t> = [s = t] between K(G) and C[G]; the induced actions on
/// C[G] are computed through the Sweedler engine.
Pairing build_duality_pairing(const MhaPtr& kg, const MhaPtr& cg);

// ---------------------------------------------------------------------------
// Sweedler evaluation
// ---------------------------------------------------------------------------

using Bilinear = std::function<Elem(const Elem&, const Elem&)>;
using Trilinear = std::function<Elem(const Elem&, const Elem&, const Elem&)>;

/// Which coassociativity route a three-leg evaluation walks.
enum class TripleRoute { IotaDelta, DeltaIota };

/// Sum F(a_(1), a_(2)): the plan's single step picks the leg and side where
/// the witness multiplies Delta(a) into A(x)A. The witness is verified
/// against F on the probe grid (Def-2.2 style) before use.
Elem sweedler_eval2(const MhaPtr& H, const Bilinear& F, const CoveringPlan& plan, const Elem& a,
                    int window = 5, bool verify = true);

/// Sum F(a_(1), a_(2), a_(3)) by iterated covering: the first step covers the
/// free outer leg (leg 0 for IotaDelta, leg 2 for DeltaIota), the second an
/// inner leg per materialized term. Witness sources may be Derived, receiving
/// the already-materialized legs of the current term.
Elem sweedler_eval3(const MhaPtr& H, const Trilinear& F, const CoveringPlan& plan, const Elem& a,
                    TripleRoute route = TripleRoute::IotaDelta, int window = 5,
                    bool verify = true);

// ---------------------------------------------------------------------------
// Module algebras, twist, smash product
// ---------------------------------------------------------------------------

/// An algebra R with a unital right action of the base: (xx') <| a =
/// sum (x <| a_(1))(x' <| a_(2)).
struct ModuleAlgebra {
    MhaPtr H;
    AlgebraPtr R;
    std::function<Elem(const Elem& x, const Elem& a)> act;  // x <| a
    std::function<std::optional<Elem>(const std::vector<Elem>&)> action_unit;
};

/// K(G) as a right C[G]-module algebra by translation: (x <| u_g)(s) = x(gs).
ModuleAlgebra translation_module_algebra(const GroupPtr& g);

/// T(x(x)a) = sum a_(1)(x)(x <| a_(2)) with sum p_i(x)q_i = (1(x)e)Delta(a),
/// e an action unit for x.
Elem twist_T(const ModuleAlgebra& ma, const Elem& x, const Elem& a);

/// Smash product elements a#x live on a dedicated (A,R) tensor carrier.
TensorCarrier smash_carrier(const ModuleAlgebra& ma);
Elem smash_elem(const ModuleAlgebra& ma, const Elem& a, const Elem& x);
/// (a#x)(a'#x') = sum a a'_(1) # (x <| a'_(2)) x', evaluated with both the
/// leg-1 and the leg-2 covering plan; the two results must agree.
Elem smash_mul(const ModuleAlgebra& ma, const Elem& s1, const Elem& s2);

// ---------------------------------------------------------------------------
// Coactions and the cotwist
// ---------------------------------------------------------------------------

/// Gamma: V -> M0(V(x)A) (right) or M0(A(x)V) (left), handed out lazily.
struct Coaction {
    MhaPtr H;
    SpacePtr V;
    Side side = Side::Right;
    TensorCarrier carrier;  // V(x)A (right) or A(x)V (left)
    std::function<LazyTensor(const Elem&)> gamma;
    std::vector<BasisKey> v_keys;  // probe basis of V
};

/// From an invertible representation pi of G on V: Gamma(v)(1(x)delta_g) =
/// pi_g(v)(x)delta_g (right side; mirrored for left). The representation laws
/// pi_e = id and pi_g pi_h = pi_gh are verified on probes first.
Coaction coaction_from_representation(
    const MhaPtr& H, const SpacePtr& V,
    const std::function<Elem(const GroupKey&, const Elem&)>& pi, std::vector<BasisKey> v_keys,
    Side side = Side::Right, int window = 5);

/// (iota(x)eps)Gamma(v) = v, evaluated through the covering by the counit
/// witness.
bool coaction_counit_check(const Coaction& c, const Elem& v);

/// T(a(x)v) = (1(x)a)Gamma(v) in V(x)A.
Elem cotwist_T(const Coaction& c, const Elem& a, const Elem& v);
/// T^-1(v(x)a) = sum a S^-1(p_i)(x)w_i with sum w_i(x)p_i = Gamma(v)(1(x)S(e))
/// and ae = a; lands in A(x)V.
Elem cotwist_inverse(const Coaction& c, const Elem& v, const Elem& a);

// ---------------------------------------------------------------------------
// Extensions to three legs
// ---------------------------------------------------------------------------

/// (iota(x)Gamma) applied to a lazy element of M0(A(x)V), for a left
/// coaction: (a(x)a'(x)1)z = (1(x)a'(x)1)(iota(x)Gamma)((a(x)1)y).
TripleLazy extend_iota_gamma(const Coaction& c, const LazyTensor& y);

/// (Delta(x)iota) applied to a lazy element of M0(A(x)V), through the
/// instance factorizations of a(x)a'.
TripleLazy extend_delta_iota(const MhaPtr& H, const SpacePtr& V, const LazyTensor& y);

// ---------------------------------------------------------------------------
// Identity suites
// ---------------------------------------------------------------------------

struct SuiteReport {
    bool ok = true;
    std::string witness;
};

/// Legs conditions, Delta homomorphism, counit slices, coassociativity.
SuiteReport hopf_axiom_suite(const MhaPtr& H, int window = 3);
/// sum a' a_(1) S(a_(2)) a_(3) = a'a (left-only plan) and
/// sum p_(2) S^-1(p_(1)) = eps(p) 1 extensionally.
SuiteReport antipode_identity_suite(const MhaPtr& H, int window = 3);

}  // namespace mhk
