#pragma once

#include "mhk/module_ext.hpp"

namespace mhk {

/// A linear map F out of a module carrier, bundled with covering witnesses:
/// e with F(e*x) = F(x) for all x (left), f with F(x*f) = F(x) (right). The
/// witnesses never depend on x.
struct CoveredMap {
    ModulePtr source;
    SpacePtr target;
    std::function<Elem(const Elem&)> F;
    std::optional<Elem> left_witness;
    std::optional<Elem> right_witness;
    KeySet support_hint;  // extra carrier keys to probe
};

struct CoverReport {
    bool left_ok = true;   // meaningful only when a left witness is declared
    bool right_ok = true;
    std::string witness;   // refuting probe, when a side fails
    bool complete = true;  // probes are exhaustive only for support-local sources
};

/// Probe elements of the module carrier: canonical algebra probes when the
/// carrier is an algebra, deltas at the hint keys otherwise.
std::vector<Elem> carrier_probes(const ModulePtr& mod, const KeySet& hints, int window = 5);

/// Confirms or refutes each declared covering side on probes.
CoverReport verify_cover(const CoveredMap& F, int window = 5);

/// G(y) = F(e*y) (resp. F(y*f)); when both sides are covered the two values
/// are computed and compared. Re-verifies the witnesses first; throws
/// law_violation on verification failure or bimodule disagreement.
Elem extend_covered(const CoveredMap& F, const ExtModElem& y, int window = 5);

/// F(e1*y) = F(e2*y) for any two verified witnesses: checked through a common
/// right local unit h (e_i*h = e_i, so both sides equal F(h*y)).
bool witness_independence(const CoveredMap& F, const Elem& e1, const Elem& e2,
                          const ExtModElem& y, int window = 5);

/// The joint one-equation form F(e*x*f) = F(x); strictly weaker than covering
/// on each side separately.
bool verify_joint_cover(const CoveredMap& F, const Elem& e, const Elem& f, int window = 5);

/// m*x for m in M(A) and x in a unital left A-module: pick e with e*x = x and
/// return (m*e)*x; independent of the choice of e.
Elem module_to_multiplier_action(const ModulePtr& mod, const Multiplier& m, const Elem& x);

/// A non-degenerate bilinear pairing A x B -> scalars with its induced
/// actions on B: <x, a|>b> = <xa, b> and <x, b<|a> = <ax, b>.
struct Pairing {
    AlgebraPtr A, B;
    std::function<Scalar(const Elem&, const Elem&)> form;
    std::function<Elem(const Elem& a, const Elem& b)> act_left;   // a|>b
    std::function<Elem(const Elem& b, const Elem& a)> act_right;  // b<|a
    /// e with b<|e = b (Side::Left request) resp. f with f|>b = b (Right).
    std::function<std::optional<Elem>(const Elem& b, Side)> unit_witness;
};

/// <m, b> for m in M(A): computed as <m*f, b> with f|>b = b and cross-checked
/// against <e*m, b> with b<|e = b. Throws law_violation when no witness
/// exists or the two values disagree.
Scalar extend_pairing(const Pairing& p, const Multiplier& m, const Elem& b);

// ---------------------------------------------------------------------------
// Covering plans (consumed by the Sweedler evaluation engine)
// ---------------------------------------------------------------------------

/// Where a covering witness comes from. Derived sources compute the witness
/// from the tensor legs materialized by the preceding steps.
struct WitnessSource {
    enum class Kind { Explicit, LocalUnitOf, ActionUnitOf, Derived };
    Kind kind = Kind::Explicit;
    Elem value;                    // Explicit
    std::vector<Elem> unit_args;   // LocalUnitOf
    ModulePtr module;              // ActionUnitOf
    Elem module_elem;              //   "
    std::function<Elem(const std::vector<Elem>&)> derive;  // Derived

    static WitnessSource explicit_elem(Elem e);
    static WitnessSource local_unit_of(std::vector<Elem> args);
    static WitnessSource action_unit_of(ModulePtr m, Elem x);
    static WitnessSource derived(std::function<Elem(const std::vector<Elem>&)> fn);
};

struct CoveringStep {
    int leg = 0;
    Side side = Side::Left;
    WitnessSource source;
};

struct CoveringPlan {
    std::vector<CoveringStep> steps;
};

/// Materializes the step's witness; prefix holds the legs already finite.
Elem resolve_witness(const WitnessSource& src, Side side,
                     const std::vector<Elem>& prefix = {});

}  // namespace mhk
