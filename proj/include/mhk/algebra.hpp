#pragma once

#include "mhk/elem.hpp"

#include <functional>
#include <optional>

namespace mhk {

enum class Side { Left, Right, Both };

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A non-unital associative algebra given by a basis-key domain and a product
/// rule on basis keys, extended bilinearly. Instances declare which structure
/// they support (identity, local units, support locality).
class Algebra : public Space, public std::enable_shared_from_this<Algebra> {
public:
    Algebra(std::string name, int arity) : Space(std::move(name), arity) {}

    std::function<Elem(const BasisKey&, const BasisKey&)> product_rule;
    bool unital = false;
    bool left_local_units = false;
    bool right_local_units = false;
    bool support_local = false;

    std::optional<BasisKey> identity_key;
    std::function<Elem()> identity_rule;  // for unital algebras whose 1 is not a basis key

    /// Builds a local unit for the given support keys on the given side, or
    /// throws when the algebra declares none.
    std::function<Elem(Side, const KeySet&)> local_unit_rule;

    /// Canonical probe keys for extensional checks: all basis keys when
    /// finite, a window otherwise.
    std::function<std::vector<BasisKey>(int)> probe_keys_fn;

    GroupPtr group;  // set for K(G) and C[G]
    std::vector<AlgebraPtr> factors;  // set for tensor algebras

    /// Maps any valid key to its canonical representative (e.g. reduction
    /// modulo n in cyclic groups).
    std::function<BasisKey(const BasisKey&)> key_canon;

    Elem zero() const { return Elem(shared_from_this()); }
    Elem basis(const BasisKey& k, Scalar c = Scalar(1)) const {
        return Elem::delta(shared_from_this(), key_canon ? key_canon(k) : k, std::move(c));
    }
    Elem one() const;  // identity element; throws when non-unital

    std::vector<BasisKey> probe_keys(int window) const { return probe_keys_fn(window); }
};

Elem multiply(const Elem& a, const Elem& b);
Elem tensor_elem(const Elem& a, const Elem& b);

/// A local unit e with e*a_i = a_i (left), a_i*e = a_i (right) or both, for
/// every listed element.
Elem local_unit(Side side, const std::vector<Elem>& elems);
Elem local_unit_for_keys(const AlgebraPtr& alg, Side side, const KeySet& keys);

struct NondegReport {
    bool nondegenerate = true;
    std::string witness;  // description of an annihilated element, when degenerate
};

/// Rank test of the multiplication pairing restricted to a finite basis
/// window, on both sides.
NondegReport check_nondegenerate(const AlgebraPtr& alg, const std::vector<BasisKey>& window);

/// K(G): finitely supported functions on G under the pointwise product.
AlgebraPtr function_algebra(const GroupPtr& g);
/// C[G]: the group algebra under convolution; unital.
AlgebraPtr group_algebra(const GroupPtr& g);
/// A (x) B with the componentwise product and concatenated basis keys.
AlgebraPtr tensor_algebra(const AlgebraPtr& a, const AlgebraPtr& b);
/// One basis key, all products zero. Degenerate by construction.
AlgebraPtr zero_product_algebra();

AlgebraPtr as_algebra(const SpacePtr& s);

}  // namespace mhk
