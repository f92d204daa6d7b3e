#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mhk/algebra.hpp"

#include <random>

using namespace mhk;

namespace {

Elem d(const AlgebraPtr& a, std::int64_t k) { return a->basis({k}); }

Elem random_elem(const AlgebraPtr& a, std::mt19937_64& rng, int window = 4) {
    std::uniform_int_distribution<std::int64_t> key(-window, window);
    std::uniform_int_distribution<int> num(-3, 3), den(1, 4), terms(1, 3);
    Elem e = a->zero();
    for (int t = terms(rng); t > 0; --t)
        e += a->basis({key(rng)}, Scalar(Rational(num(rng), den(rng))));
    return e;
}

}  // namespace

TEST_CASE("scalar arithmetic is exact") {
    Scalar half = Scalar::fraction(1, 2);
    Scalar third = Scalar::fraction(1, 3);
    CHECK(half + third == Scalar::fraction(5, 6));
    CHECK((half * Scalar(2)).is_one());
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK((Scalar(7) / Scalar(7)).is_one());
    CHECK(Scalar::fraction(-2, 4).str() == "-1/2");
}

TEST_CASE("group DSL and group laws") {
    for (const char* dsl : {"Z", "Zn:6", "D:4", "prod(Zn:2,Zn:3)"}) {
        auto g = parse_group(dsl);
        auto keys = g->window(3);
        for (const auto& a : keys) {
            CHECK(g->compose(a, g->identity) == a);
            CHECK(g->compose(g->identity, a) == a);
            CHECK(g->compose(a, g->invert(a)) == g->identity);
            for (const auto& b : keys)
                for (const auto& c : keys)
                    CHECK(g->compose(g->compose(a, b), c) == g->compose(a, g->compose(b, c)));
        }
    }
    CHECK(parse_group("prod(Zn:2,Zn:3)")->carrier.size() == 6);
    CHECK(parse_group("D:4")->carrier.size() == 8);
    CHECK_THROWS_AS(parse_group("Q:8"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group("Zn:6junk"), std::invalid_argument);
}

TEST_CASE("dihedral is nonabelian") {
    auto g = parse_group("D:3");
    GroupKey r{1, 0}, s{0, 1};
    CHECK(g->compose(r, s) != g->compose(s, r));
}

TEST_CASE("add and cancellation") {
    auto a = function_algebra(make_integers());
    CHECK(d(a, 2) + d(a, 2) == Scalar(2) * d(a, 2));
    CHECK((d(a, 1) + Scalar(-1) * d(a, 1)).is_zero());
    CHECK(Scalar::fraction(1, 2) * d(a, 0) + Scalar::fraction(1, 3) * d(a, 0) ==
          Scalar::fraction(5, 6) * d(a, 0));
    auto b = group_algebra(make_integers());
    CHECK_THROWS_AS(d(a, 0) + d(b, 0), std::invalid_argument);
}

TEST_CASE("multiplication in K(Z) and C[Z]") {
    auto k = function_algebra(make_integers());
    CHECK(multiply(d(k, 2), d(k, 2)) == d(k, 2));
    CHECK(multiply(d(k, 1), d(k, 2)).is_zero());
    auto c = group_algebra(make_integers());
    CHECK(multiply(d(c, 1), d(c, 2)) == d(c, 3));
    CHECK_THROWS_AS(multiply(d(k, 0), d(c, 0)), std::invalid_argument);
}

TEST_CASE("K(Z4) product matches the dense 4-dimensional expansion") {
    auto k = function_algebra(make_cyclic(4));
    Elem lhs = multiply(d(k, 0) + d(k, 1), d(k, 1) + d(k, 2));
    CHECK(lhs == d(k, 1));
}

TEST_CASE("tensor elements") {
    auto k = function_algebra(make_integers());
    Elem t = tensor_elem(d(k, 1), d(k, 2));
    CHECK(t.coeff().size() == 1);
    CHECK(t.at({1, 2}).is_one());
    Elem u = tensor_elem(d(k, 1) + d(k, 2), d(k, 0));
    CHECK(u.support() == KeySet{{1, 0}, {2, 0}});
    CHECK(multiply(tensor_elem(d(k, 1), d(k, 2)), tensor_elem(d(k, 1), d(k, 3))).is_zero());
}

TEST_CASE("associativity on window triples, exact") {
    std::vector<AlgebraPtr> algebras = {
        function_algebra(make_cyclic(4)),
        group_algebra(make_cyclic(4)),
        group_algebra(make_dihedral(3)),
        tensor_algebra(function_algebra(make_cyclic(3)), group_algebra(make_cyclic(2))),
    };
    for (const auto& a : algebras) {
        auto keys = a->probe_keys(2);
        for (const auto& x : keys)
            for (const auto& y : keys)
                for (const auto& z : keys) {
                    Elem ex = a->basis(x), ey = a->basis(y), ez = a->basis(z);
                    CHECK(multiply(multiply(ex, ey), ez) == multiply(ex, multiply(ey, ez)));
                }
    }
}

TEST_CASE("K(G) is commutative on windows") {
    auto k = function_algebra(make_dihedral(3));
    for (const auto& x : k->probe_keys(0))
        for (const auto& y : k->probe_keys(0))
            CHECK(multiply(k->basis(x), k->basis(y)) == multiply(k->basis(y), k->basis(x)));
}

TEST_CASE("local units") {
    auto k = function_algebra(make_integers());
    Elem f = d(k, 1) + d(k, 3);
    CHECK(local_unit(Side::Right, {f}) == f);  // indicator of the support
    Elem e = local_unit(Side::Both, {d(k, 0), Scalar(2) * d(k, 7)});
    CHECK(e == d(k, 0) + d(k, 7));

    auto c = group_algebra(make_cyclic(5));
    std::mt19937_64 rng(7);
    CHECK(local_unit(Side::Left, {random_elem(c, rng)}) == c->one());
    CHECK(local_unit(Side::Right, {random_elem(c, rng)}) == c->one());

    auto z = zero_product_algebra();
    CHECK_THROWS_AS(local_unit(Side::Left, {z->basis({0})}), std::logic_error);
}

TEST_CASE("local unit postcondition, randomized") {
    std::mt19937_64 rng(42);
    auto k = function_algebra(make_integers());
    for (int it = 0; it < 50; ++it) {
        std::vector<Elem> elems = {random_elem(k, rng), random_elem(k, rng)};
        Elem e = local_unit(Side::Both, elems);  // internally re-verified
        for (const auto& a : elems) {
            CHECK(multiply(e, a) == a);
            CHECK(multiply(a, e) == a);
        }
    }
}

TEST_CASE("non-degeneracy reports") {
    auto k3 = function_algebra(make_cyclic(3));
    CHECK(check_nondegenerate(k3, k3->probe_keys(0)).nondegenerate);
    auto c3 = group_algebra(make_cyclic(3));
    CHECK(check_nondegenerate(c3, c3->probe_keys(0)).nondegenerate);
    auto z = zero_product_algebra();
    auto rep = check_nondegenerate(z, z->probe_keys(0));
    CHECK_FALSE(rep.nondegenerate);
    CHECK(!rep.witness.empty());
}
