#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mhk {

/// Group elements are flat integer tuples. The arity and the meaning of the
/// entries are fixed by the owning GroupSpec (1 entry for Z and Z_n, 2 for
/// dihedral groups, concatenation for direct products).
using GroupKey = std::vector<std::int64_t>;

/// An intensionally given discrete group: identity, composition and inversion
/// procedures plus key ordering. Finite groups additionally enumerate their
/// carrier; infinite groups are only ever touched through finitely many keys.
class GroupSpec {
public:
    std::string name;
    int arity = 1;
    GroupKey identity;
    std::function<GroupKey(const GroupKey&, const GroupKey&)> compose;
    std::function<GroupKey(const GroupKey&)> invert;
    bool finite = false;
    std::vector<GroupKey> carrier;           // populated iff finite
    std::function<std::vector<GroupKey>(int)> window_fn;  // infinite groups

    bool is_identity(const GroupKey& k) const { return k == identity; }

    /// Canonical probe window: the full carrier for finite groups, the keys
    /// [-w, w] for Z, and the product window for direct products.
    std::vector<GroupKey> window(int w) const;
};

using GroupPtr = std::shared_ptr<const GroupSpec>;

GroupPtr make_integers();
GroupPtr make_cyclic(std::int64_t n);
GroupPtr make_dihedral(std::int64_t n);  // order 2n
GroupPtr make_product(const GroupPtr& g, const GroupPtr& h);

/// Parses the group DSL: "Z", "Zn:<k>", "D:<k>", "prod(<g>,<g>)".
/// Throws std::invalid_argument on malformed input.
GroupPtr parse_group(const std::string& dsl);

std::string key_str(const GroupKey& k);

}  // namespace mhk
