#include "mhk/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace mhk {

std::vector<GroupKey> GroupSpec::window(int w) const {
    if (finite) return carrier;
    if (!window_fn) throw std::logic_error("group '" + name + "' has no probe window");
    return window_fn(w);
}

GroupPtr make_integers() {
    auto g = std::make_shared<GroupSpec>();
    g->name = "Z";
    g->arity = 1;
    g->identity = {0};
    g->compose = [](const GroupKey& a, const GroupKey& b) { return GroupKey{a[0] + b[0]}; };
    g->invert = [](const GroupKey& a) { return GroupKey{-a[0]}; };
    g->finite = false;
    g->window_fn = [](int w) {
        std::vector<GroupKey> keys;
        for (std::int64_t k = -w; k <= w; ++k) keys.push_back({k});
        return keys;
    };
    return g;
}

GroupPtr make_cyclic(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
    auto g = std::make_shared<GroupSpec>();
    g->name = "Zn:" + std::to_string(n);
    g->arity = 1;
    g->identity = {0};
    g->compose = [n](const GroupKey& a, const GroupKey& b) {
        return GroupKey{((a[0] + b[0]) % n + n) % n};
    };
    g->invert = [n](const GroupKey& a) { return GroupKey{((-a[0]) % n + n) % n}; };
    g->finite = true;
    for (std::int64_t k = 0; k < n; ++k) g->carrier.push_back({k});
    return g;
}

GroupPtr make_dihedral(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("dihedral parameter must be >= 1");
    auto g = std::make_shared<GroupSpec>();
    g->name = "D:" + std::to_string(n);
    g->arity = 2;
    g->identity = {0, 0};
    // key (r, s): rotation r in [0, n), reflection bit s.
    g->compose = [n](const GroupKey& a, const GroupKey& b) {
        std::int64_t r = a[1] ? a[0] - b[0] : a[0] + b[0];
        return GroupKey{(r % n + n) % n, a[1] ^ b[1]};
    };
    g->invert = [n](const GroupKey& a) {
        if (a[1]) return a;  // reflections are involutions
        return GroupKey{((-a[0]) % n + n) % n, 0};
    };
    g->finite = true;
    for (std::int64_t s = 0; s < 2; ++s)
        for (std::int64_t r = 0; r < n; ++r) g->carrier.push_back({r, s});
    return g;
}

GroupPtr make_product(const GroupPtr& a, const GroupPtr& b) {
    auto g = std::make_shared<GroupSpec>();
    g->name = "prod(" + a->name + "," + b->name + ")";
    g->arity = a->arity + b->arity;
    g->identity = a->identity;
    g->identity.insert(g->identity.end(), b->identity.begin(), b->identity.end());
    const int na = a->arity;
    auto split = [na](const GroupKey& k) {
        return std::pair<GroupKey, GroupKey>(GroupKey(k.begin(), k.begin() + na),
                                             GroupKey(k.begin() + na, k.end()));
    };
    auto join = [](GroupKey x, const GroupKey& y) {
        x.insert(x.end(), y.begin(), y.end());
        return x;
    };
    g->compose = [a, b, split, join](const GroupKey& k1, const GroupKey& k2) {
        auto [x1, y1] = split(k1);
        auto [x2, y2] = split(k2);
        return join(a->compose(x1, x2), b->compose(y1, y2));
    };
    g->invert = [a, b, split, join](const GroupKey& k) {
        auto [x, y] = split(k);
        return join(a->invert(x), b->invert(y));
    };
    g->finite = a->finite && b->finite;
    auto cross = [join](const std::vector<GroupKey>& xs, const std::vector<GroupKey>& ys) {
        std::vector<GroupKey> out;
        out.reserve(xs.size() * ys.size());
        for (const auto& x : xs)
            for (const auto& y : ys) out.push_back(join(x, y));
        return out;
    };
    if (g->finite) {
        g->carrier = cross(a->carrier, b->carrier);
    } else {
        g->window_fn = [a, b, cross](int w) { return cross(a->window(w), b->window(w)); };
    }
    return g;
}

namespace {

GroupPtr parse_at(const std::string& s, std::size_t& pos);

std::int64_t parse_int(const std::string& s, std::size_t& pos) {
    std::size_t end = pos;
    while (end < s.size() && (std::isdigit(static_cast<unsigned char>(s[end])) || s[end] == '-'))
        ++end;
    if (end == pos) throw std::invalid_argument("group DSL: expected integer in '" + s + "'");
    std::int64_t v = std::stoll(s.substr(pos, end - pos));
    pos = end;
    return v;
}

GroupPtr parse_at(const std::string& s, std::size_t& pos) {
    auto starts = [&](const char* p) { return s.compare(pos, std::string(p).size(), p) == 0; };
    if (starts("prod(")) {
        pos += 5;
        GroupPtr a = parse_at(s, pos);
        if (pos >= s.size() || s[pos] != ',')
            throw std::invalid_argument("group DSL: expected ',' in '" + s + "'");
        ++pos;
        GroupPtr b = parse_at(s, pos);
        if (pos >= s.size() || s[pos] != ')')
            throw std::invalid_argument("group DSL: expected ')' in '" + s + "'");
        ++pos;
        return make_product(a, b);
    }
    if (starts("Zn:")) {
        pos += 3;
        return make_cyclic(parse_int(s, pos));
    }
    if (starts("D:")) {
        pos += 2;
        return make_dihedral(parse_int(s, pos));
    }
    if (starts("Z")) {
        pos += 1;
        return make_integers();
    }
    throw std::invalid_argument("group DSL: cannot parse '" + s + "' at position " +
                                std::to_string(pos));
}

}  // namespace

GroupPtr parse_group(const std::string& dsl) {
    std::size_t pos = 0;
    GroupPtr g = parse_at(dsl, pos);
    if (pos != dsl.size()) throw std::invalid_argument("group DSL: trailing input in '" + dsl + "'");
    return g;
}

std::string key_str(const GroupKey& k) {
    if (k.size() == 1) return std::to_string(k[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(k[i]);
    }
    return s + ")";
}

}  // namespace mhk
