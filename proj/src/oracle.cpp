#include "mhk/oracle.hpp"

#include <stdexcept>

namespace mhk {

namespace {

std::string kstr(const GroupKey& k) {
    std::string out = "(";
    for (std::size_t i = 0; i < k.size(); ++i) out += (i ? "," : "") + std::to_string(k[i]);
    return out + ")";
}

}  // namespace

DenseOracle build_dense_oracle(const GroupPtr& g, bool function_flavor) {
    if (!g->finite) throw std::invalid_argument("build_dense_oracle: group must be finite");
    DenseOracle o;
    o.g = g;
    o.function_flavor = function_flavor;
    o.basis = g->carrier;
    o.dim = static_cast<int>(o.basis.size());
    for (int i = 0; i < o.dim; ++i) o.index[o.basis[i]] = i;
    const int n = o.dim;
    o.mult.assign(n, std::vector<DVec>(n, DVec(n, Scalar(0))));
    o.delta.assign(n, DVec(n * n, Scalar(0)));
    o.eps.assign(n, Scalar(0));
    o.antip.assign(n, DVec(n, Scalar(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (function_flavor) {
                if (i == j) o.mult[i][j][i] = Scalar(1);
            } else {
                o.mult[i][j][o.index.at(g->compose(o.basis[i], o.basis[j]))] = Scalar(1);
            }
        }
        if (function_flavor) {
            // Delta(e_n)(s,t) = [st = n]
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t)
                    if (g->compose(o.basis[s], o.basis[t]) == o.basis[i])
                        o.delta[i][s * n + t] = Scalar(1);
            o.eps[i] = o.basis[i] == g->identity ? Scalar(1) : Scalar(0);
        } else {
            o.delta[i][i * n + i] = Scalar(1);
            o.eps[i] = Scalar(1);
        }
        o.antip[i][o.index.at(g->invert(o.basis[i]))] = Scalar(1);
    }
    return o;
}

DVec dense_from_elem(const DenseOracle& o, const Elem& a) {
    DVec out(o.dim, Scalar(0));
    for (const auto& [k, c] : a.coeff()) out[o.index.at(k)] += c;
    return out;
}

DVec dense_mult(const DenseOracle& o, const DVec& a, const DVec& b) {
    DVec out(o.dim, Scalar(0));
    for (int i = 0; i < o.dim; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < o.dim; ++j) {
            if (b[j].is_zero()) continue;
            for (int k = 0; k < o.dim; ++k) out[k] += a[i] * b[j] * o.mult[i][j][k];
        }
    }
    return out;
}

DVec dense_delta_leg1(const DenseOracle& o, int m, int n) {
    const int d = o.dim;
    DVec out(d * d, Scalar(0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const Scalar& c = o.delta[n][i * d + j];
            if (c.is_zero()) continue;
            for (int k = 0; k < d; ++k) out[k * d + j] += c * o.mult[m][i][k];
        }
    return out;
}

DVec dense_delta_leg2(const DenseOracle& o, int n, int m) {
    const int d = o.dim;
    DVec out(d * d, Scalar(0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const Scalar& c = o.delta[n][i * d + j];
            if (c.is_zero()) continue;
            for (int k = 0; k < d; ++k) out[i * d + k] += c * o.mult[j][m][k];
        }
    return out;
}

namespace {

DVec dense_from_tensor(const DenseOracle& o, const Elem& x) {
    DVec out(o.dim * o.dim, Scalar(0));
    const int ar = o.g->arity;
    for (const auto& [k, c] : x.coeff()) {
        auto [s, t] = split_key(k, ar);
        out[o.index.at(s) * o.dim + o.index.at(t)] += c;
    }
    return out;
}

}  // namespace

OracleReport dense_oracle_compare(const MhaPtr& H, const DenseOracle& o) {
    OracleReport rep;
    auto A = H->A;
    const int n = o.dim;
    auto unit = [n](int i) {
        DVec v(n, Scalar(0));
        v[i] = Scalar(1);
        return v;
    };
    for (int i = 0; i < n; ++i) {
        Elem ei = A->basis(o.basis[i]);
        if (!(H->counit(ei) == o.eps[i]))
            return {false, "counit mismatch at " + kstr(o.basis[i]), rep.checks};
        ++rep.checks;
        if (dense_from_elem(o, H->antipode(ei)) != o.antip[i])
            return {false, "antipode mismatch at " + kstr(o.basis[i]), rep.checks};
        ++rep.checks;
        for (int j = 0; j < n; ++j) {
            Elem ej = A->basis(o.basis[j]);
            if (dense_from_elem(o, multiply(ei, ej)) != dense_mult(o, unit(i), unit(j)))
                return {false,
                        "multiplication mismatch at " + kstr(o.basis[i]) + " * " +
                            kstr(o.basis[j]),
                        rep.checks};
            ++rep.checks;
            auto l1 = H->delta(ej).mul1_left(ei);
            if (!l1 || dense_from_tensor(o, *l1) != dense_delta_leg1(o, i, j))
                return {false,
                        "Delta leg-1 mismatch at (" + kstr(o.basis[i]) + " (x) 1) Delta(" +
                            kstr(o.basis[j]) + ")",
                        rep.checks};
            ++rep.checks;
            auto l2 = H->delta(ej).mul2_right(ei);
            if (!l2 || dense_from_tensor(o, *l2) != dense_delta_leg2(o, j, i))
                return {false,
                        "Delta leg-2 mismatch at Delta(" + kstr(o.basis[j]) + ")(1 (x) " +
                            kstr(o.basis[i]) + ")",
                        rep.checks};
            ++rep.checks;
        }
        // covered counit slice vs dense (eps (x) id) Delta
        CoveringPlan plan;
        plan.steps = {{0, Side::Left, WitnessSource::explicit_elem(H->counit_witness)}};
        Bilinear F = [H](const Elem& p, const Elem& q) { return H->counit(p) * q; };
        DVec dense_slice(n, Scalar(0));
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) dense_slice[t] += o.eps[s] * o.delta[i][s * n + t];
        if (dense_from_elem(o, sweedler_eval2(H, F, plan, ei, 0, i == 0)) != dense_slice)
            return {false, "counit slice mismatch at " + kstr(o.basis[i]), rep.checks};
        ++rep.checks;
    }
    return rep;
}

OracleReport oracle_compare_smash(const GroupPtr& g) {
    OracleReport rep;
    auto ma = translation_module_algebra(g);
    auto c = ma.H->A;
    auto r = ma.R;
    for (const auto& a : g->carrier)
        for (const auto& x : g->carrier)
            for (const auto& b : g->carrier)
                for (const auto& y : g->carrier) {
                    Elem got = smash_mul(ma, smash_elem(ma, c->basis(a), r->basis(x)),
                                         smash_elem(ma, c->basis(b), r->basis(y)));
                    // dense rule: (u_a # d_x)(u_b # d_y) = [b^-1 x = y] u_ab # d_y
                    Elem want = g->compose(g->invert(b), x) == g->compose(y, g->identity)
                                    ? smash_elem(ma, c->basis(g->compose(a, b)), r->basis(y))
                                    : Elem(smash_carrier(ma).space);
                    if (got != want)
                        return {false,
                                "smash mismatch at (" + kstr(a) + "#" + kstr(x) + ")(" + kstr(b) +
                                    "#" + kstr(y) + ")",
                                rep.checks};
                    ++rep.checks;
                }
    return rep;
}

OracleReport oracle_compare_cotwist(const GroupPtr& g) {
    OracleReport rep;
    auto H = build_function_mha(g);
    auto V = make_plain_space("V(" + g->name + ")", g->arity);
    auto pi = [g, V](const GroupKey& h, const Elem& v) {
        Elem out(V);
        for (const auto& [k, c] : v.coeff()) out.add_term(g->compose(h, k), c);
        return out;
    };
    std::vector<BasisKey> vk = g->carrier;
    auto c = coaction_from_representation(H, V, pi, vk, Side::Right, 0);
    auto AxV = make_tensor_carrier({H->A, V});
    for (const auto& m : g->carrier)
        for (const auto& k : g->carrier) {
            Elem a = H->A->basis(m);
            Elem v = Elem::delta(V, k);
            // dense expectation: T(delta_m (x) v_k) = v_{mk} (x) delta_m
            Elem want(c.carrier.space);
            want.add_term(concat_keys(g->compose(m, k), m), Scalar(1));
            if (cotwist_T(c, a, v) != want)
                return {false, "cotwist mismatch at a = " + kstr(m) + ", v = " + kstr(k),
                        rep.checks};
            ++rep.checks;
            Elem want_inv(AxV.space);
            want_inv.add_term(concat_keys(m, g->compose(g->invert(m), k)), Scalar(1));
            if (cotwist_inverse(c, v, a) != want_inv)
                return {false,
                        "cotwist inverse mismatch at v = " + kstr(k) + ", a = " + kstr(m),
                        rep.checks};
            ++rep.checks;
        }
    return rep;
}

}  // namespace mhk
