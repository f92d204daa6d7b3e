#include "mhk/algebra.hpp"

#include "mhk/linalg.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace mhk {

Elem Algebra::one() const {
    if (unital && identity_key) return basis(*identity_key);
    if (unital && identity_rule) return identity_rule();
    throw std::logic_error("algebra " + name() + " has no identity element");
}

AlgebraPtr as_algebra(const SpacePtr& s) {
    auto a = std::dynamic_pointer_cast<const Algebra>(s);
    if (!a) throw std::invalid_argument("space " + (s ? s->name() : "<none>") + " is not an algebra");
    return a;
}

Elem multiply(const Elem& a, const Elem& b) {
    require_same_space(a, b, "multiply");
    auto alg = as_algebra(a.space());
    Elem out = alg->zero();
    for (const auto& [ka, ca] : a.coeff())
        for (const auto& [kb, cb] : b.coeff()) {
            Elem p = alg->product_rule(ka, kb);
            out += (ca * cb) * p;
        }
    return out;
}

Elem tensor_elem(const Elem& a, const Elem& b) {
    auto t = tensor_algebra(as_algebra(a.space()), as_algebra(b.space()));
    Elem out = t->zero();
    for (const auto& [ka, ca] : a.coeff())
        for (const auto& [kb, cb] : b.coeff()) out.add_term(concat_keys(ka, kb), ca * cb);
    return out;
}

Elem local_unit_for_keys(const AlgebraPtr& alg, Side side, const KeySet& keys) {
    bool have = (side == Side::Left && alg->left_local_units) ||
                (side == Side::Right && alg->right_local_units) ||
                (side == Side::Both && alg->left_local_units && alg->right_local_units);
    if (!have)
        throw std::logic_error("algebra " + alg->name() + " declares no local units on that side");
    return alg->local_unit_rule(side, keys);
}

Elem local_unit(Side side, const std::vector<Elem>& elems) {
    if (elems.empty()) throw std::invalid_argument("local_unit: empty element list");
    auto alg = as_algebra(elems.front().space());
    KeySet keys;
    for (const auto& e : elems) {
        require_same_space(e, elems.front(), "local_unit");
        for (const auto& [k, _] : e.coeff()) keys.insert(k);
    }
    Elem e = local_unit_for_keys(alg, side, keys);
    // re-verify the defining property by direct multiplication
    for (const auto& a : elems) {
        if ((side == Side::Left || side == Side::Both) && multiply(e, a) != a)
            throw std::logic_error("local_unit: e*a != a for a = " + a.str());
        if ((side == Side::Right || side == Side::Both) && multiply(a, e) != a)
            throw std::logic_error("local_unit: a*e != a for a = " + a.str());
    }
    return e;
}

NondegReport check_nondegenerate(const AlgebraPtr& alg, const std::vector<BasisKey>& window) {
    NondegReport rep;
    const std::size_t n = window.size();
    for (Side side : {Side::Left, Side::Right}) {
        // columns: candidate x supported in the window; rows: coefficients of
        // w_i * x (left annihilation by all window elements) stacked.
        std::map<std::pair<std::size_t, BasisKey>, std::size_t> row_index;
        std::vector<std::tuple<std::size_t, std::size_t, Scalar>> entries;
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i) {
                Elem p = side == Side::Left ? alg->product_rule(window[i], window[j])
                                            : alg->product_rule(window[j], window[i]);
                for (const auto& [k, c] : p.coeff()) {
                    auto [it, _] = row_index.emplace(std::make_pair(i, k), row_index.size());
                    entries.emplace_back(it->second, j, c);
                }
            }
        }
        Mat m(row_index.size(), std::vector<Scalar>(n, Scalar(0)));
        for (auto& [r, c, v] : entries) m[r][c] += v;
        if (auto null = nullspace_vector(std::move(m), n)) {
            rep.nondegenerate = false;
            Elem x = alg->zero();
            for (std::size_t j = 0; j < n; ++j) x.add_term(window[j], (*null)[j]);
            rep.witness = std::string(side == Side::Left ? "left" : "right") +
                          "-annihilated element " + x.str();
            return rep;
        }
    }
    return rep;
}

AlgebraPtr function_algebra(const GroupPtr& g) {
    auto a = std::make_shared<Algebra>("K(" + g->name + ")", g->arity);
    a->group = g;
    a->support_local = true;
    a->left_local_units = a->right_local_units = true;
    a->unital = g->finite;
    auto self = a.get();
    if (g->finite) {
        // the identity is the all-ones function, a sum of deltas
        a->identity_rule = [self, g]() {
            Elem e = self->zero();
            for (const auto& k : g->carrier) e.add_term(k, Scalar(1));
            return e;
        };
    }
    a->product_rule = [self](const BasisKey& x, const BasisKey& y) {
        // pointwise product of indicator functions
        if (x == y) return self->basis(x);
        return self->zero();
    };
    a->local_unit_rule = [self](Side, const KeySet& keys) {
        Elem e = self->zero();
        for (const auto& k : keys) e.add_term(k, Scalar(1));
        return e;
    };
    a->probe_keys_fn = [g](int w) { return g->window(w); };
    a->key_canon = [g](const BasisKey& k) { return g->compose(k, g->identity); };
    return a;
}

AlgebraPtr group_algebra(const GroupPtr& g) {
    auto a = std::make_shared<Algebra>("C[" + g->name + "]", g->arity);
    a->group = g;
    a->support_local = true;
    a->unital = true;
    a->identity_key = g->identity;
    a->left_local_units = a->right_local_units = true;
    auto self = a.get();
    a->product_rule = [self, g](const BasisKey& x, const BasisKey& y) {
        return self->basis(g->compose(x, y));
    };
    a->local_unit_rule = [self, g](Side, const KeySet&) { return self->basis(g->identity); };
    a->probe_keys_fn = [g](int w) { return g->window(w); };
    a->key_canon = [g](const BasisKey& k) { return g->compose(k, g->identity); };
    return a;
}

AlgebraPtr tensor_algebra(const AlgebraPtr& x, const AlgebraPtr& y) {
    // cache so that repeated construction yields the same space id
    static std::map<std::pair<std::uint64_t, std::uint64_t>, AlgebraPtr> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_pair(x->id(), y->id());
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    auto a = std::make_shared<Algebra>(x->name() + "(x)" + y->name(),
                                       x->key_arity() + y->key_arity());
    a->factors = {x, y};
    a->support_local = x->support_local && y->support_local;
    a->unital = x->unital && y->unital;
    if (a->unital && x->identity_key && y->identity_key)
        a->identity_key = concat_keys(*x->identity_key, *y->identity_key);
    else if (a->unital)
        a->identity_rule = [x, y]() { return tensor_elem(x->one(), y->one()); };
    a->left_local_units = x->left_local_units && y->left_local_units;
    a->right_local_units = x->right_local_units && y->right_local_units;
    auto self = a.get();
    const int la = x->key_arity();
    a->product_rule = [self, x, y, la](const BasisKey& p, const BasisKey& q) {
        auto [p1, p2] = split_key(p, la);
        auto [q1, q2] = split_key(q, la);
        Elem u = x->product_rule(p1, q1);
        Elem v = y->product_rule(p2, q2);
        Elem out = self->zero();
        for (const auto& [ku, cu] : u.coeff())
            for (const auto& [kv, cv] : v.coeff()) out.add_term(concat_keys(ku, kv), cu * cv);
        return out;
    };
    a->local_unit_rule = [x, y, la](Side side, const KeySet& keys) {
        KeySet k1, k2;
        for (const auto& k : keys) {
            auto [u, v] = split_key(k, la);
            k1.insert(u);
            k2.insert(v);
        }
        Elem e1 = local_unit_for_keys(x, side, k1);
        Elem e2 = local_unit_for_keys(y, side, k2);
        return tensor_elem(e1, e2);
    };
    a->key_canon = [x, y, la](const BasisKey& k) {
        auto [u, v] = split_key(k, la);
        if (x->key_canon) u = x->key_canon(u);
        if (y->key_canon) v = y->key_canon(v);
        return concat_keys(u, v);
    };
    a->probe_keys_fn = [x, y](int w) {
        std::vector<BasisKey> out;
        for (const auto& p : x->probe_keys(w))
            for (const auto& q : y->probe_keys(w)) out.push_back(concat_keys(p, q));
        return out;
    };
    cache.emplace(key, a);
    return a;
}

AlgebraPtr zero_product_algebra() {
    auto a = std::make_shared<Algebra>("zero-product", 1);
    auto self = a.get();
    a->product_rule = [self](const BasisKey&, const BasisKey&) { return self->zero(); };
    a->probe_keys_fn = [](int) { return std::vector<BasisKey>{{0}}; };
    return a;
}

}  // namespace mhk
