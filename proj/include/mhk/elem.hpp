#pragma once

#include "mhk/group.hpp"
#include "mhk/scalar.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace mhk {

using BasisKey = GroupKey;  // flat integer tuples throughout
using KeySet = std::set<BasisKey>;

/// A vector space with a distinguished basis indexed by integer tuples of a
/// fixed arity. Algebras and tensor spaces refine this.
class Space {
public:
    Space(std::string name, int arity) : id_(next_id()), name_(std::move(name)), arity_(arity) {}
    virtual ~Space() = default;

    std::uint64_t id() const { return id_; }
    const std::string& name() const { return name_; }
    int key_arity() const { return arity_; }

private:
    static std::uint64_t next_id();
    std::uint64_t id_;
    std::string name_;
    int arity_;
};

using SpacePtr = std::shared_ptr<const Space>;

/// A finite formal linear combination of basis keys with exact coefficients.
/// Zero coefficients are never stored, so equality is syntactic.
class Elem {
public:
    Elem() = default;
    explicit Elem(SpacePtr space) : space_(std::move(space)) {}

    static Elem delta(SpacePtr space, const BasisKey& key, Scalar c = Scalar(1));

    const SpacePtr& space() const { return space_; }
    const std::map<BasisKey, Scalar>& coeff() const { return coeff_; }
    bool is_zero() const { return coeff_.empty(); }

    Scalar at(const BasisKey& key) const;
    KeySet support() const;

    void add_term(const BasisKey& key, const Scalar& c);

    Elem& operator+=(const Elem& o);
    Elem& operator-=(const Elem& o);
    friend Elem operator+(Elem a, const Elem& b) { return a += b; }
    friend Elem operator-(Elem a, const Elem& b) { return a -= b; }
    friend Elem operator*(const Scalar& c, Elem a);
    Elem operator-() const { return Scalar(-1) * (*this); }

    friend bool operator==(const Elem& a, const Elem& b);
    friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

    std::string str() const;

private:
    SpacePtr space_;
    std::map<BasisKey, Scalar> coeff_;
};

/// Throws std::invalid_argument unless both elements live in the same space.
void require_same_space(const Elem& a, const Elem& b, const char* what);

BasisKey concat_keys(const BasisKey& a, const BasisKey& b);
std::pair<BasisKey, BasisKey> split_key(const BasisKey& k, int left_arity);

}  // namespace mhk
