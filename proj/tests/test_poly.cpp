#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apn/field.hpp"
#include "apn/poly.hpp"

#include <numeric>
#include <optional>
#include <random>

using namespace apn;

namespace {

int brute_cubic_count(const Field& f, Elt a, Elt b) {
    int n = 0;
    for (Elt z = 0; z < f.order(); ++z)
        if ((f.pow(z, 3) ^ f.mul(a, z) ^ b) == 0) ++n;
    return n;
}

} // namespace

TEST_CASE("phi_has_root basics") {
    Field f3 = Field::with_default_poly(3);
    Field f4 = Field::with_default_poly(4);
    CHECK(poly::phi_has_root(f4, 1, 0));            // x = 0 is a root
    CHECK_FALSE(poly::phi_has_root(f4, 1, 1));      // gcd(3, 4) = 1
    CHECK(poly::phi_has_root(f3, 1, 1));            // gcd(3, 3) != 1
    CHECK_THROWS_AS(poly::phi_has_root(f4, 2, 1), std::invalid_argument);
}

TEST_CASE("find_good_alphas") {
    Field f3 = Field::with_default_poly(3);
    Field f4 = Field::with_default_poly(4);
    auto g4 = poly::find_good_alphas(f4, 1);
    CHECK(std::find(g4.begin(), g4.end(), Elt(1)) != g4.end());
    auto g3 = poly::find_good_alphas(f3, 1);
    CHECK_FALSE(g3.empty());
    CHECK(std::find(g3.begin(), g3.end(), Elt(0)) == g3.end());
    CHECK(std::find(g3.begin(), g3.end(), Elt(1)) == g3.end());
    // oracle: complement of the image of x -> x^{q+1} + x, and agreement with
    // the direct scan
    for (unsigned m = 2; m <= 8; ++m) {
        Field f = Field::with_default_poly(m);
        for (unsigned k = 1; k < m; ++k) {
            if (std::gcd(k, m) != 1) continue;
            auto good = poly::find_good_alphas(f, k);
            CHECK_FALSE(good.empty());
            CHECK(std::is_sorted(good.begin(), good.end()));
            for (Elt alpha : good) {
                CHECK(alpha != 0);
                CHECK_FALSE(poly::phi_has_root(f, k, alpha));
            }
            std::size_t rooted = 0;
            for (Elt alpha = 0; alpha < f.order(); ++alpha)
                if (poly::phi_has_root(f, k, alpha)) ++rooted;
            CHECK(rooted + good.size() == f.order());
        }
    }
}

TEST_CASE("square-root closure (Lemma on alpha vs alpha^2)") {
    Field f4 = Field::with_default_poly(4);
    for (Elt alpha = 0; alpha < f4.order(); ++alpha)
        CHECK(poly::square_root_closure_check(f4, 1, alpha));
    Field f5 = Field::with_default_poly(5);
    for (Elt alpha = 0; alpha < f5.order(); ++alpha)
        CHECK(poly::square_root_closure_check(f5, 2, alpha));
}

TEST_CASE("linearized permutation test") {
    Field f4 = Field::with_default_poly(4);
    CHECK(poly::linearized_is_permutation(f4, 0, 0, 1, 1)); // identity
    CHECK_FALSE(poly::linearized_is_permutation(f4, 0, 1, 1, 1)); // kernel contains GF(2)
    CHECK(poly::linearized_is_permutation(f4, 1, 1, 1, 1)); // phi_{2,1} rootless
    // equivalence with the projective-polynomial root condition
    for (unsigned m = 2; m <= 6; ++m) {
        Field f = Field::with_default_poly(m);
        for (unsigned k : {1u, 2u, 3u}) {
            if (k >= m || std::gcd(k, m) != 1) continue;
            for (Elt alpha = 0; alpha < f.order(); ++alpha)
                CHECK(poly::phi_has_root(f, k, alpha) !=
                      poly::linearized_is_permutation(f, 1, 1, alpha, k));
        }
    }
}

TEST_CASE("cubic root classification") {
    Field f2 = Field::with_default_poly(2);
    auto rep = poly::cubic_roots(f2, 0, 1); // z^3 + 1 over F_4
    CHECK(rep.root_count == 3);
    CHECK(rep.branch == poly::CubicReport::Branch::three_roots);

    Field f3 = Field::with_default_poly(3);
    for (Elt alpha : poly::find_good_alphas(f3, 1)) {
        auto r = poly::cubic_roots(f3, 1, alpha);
        CHECK(r.root_count == 0);
        CHECK(r.branch == poly::CubicReport::Branch::no_roots);
    }

    CHECK_THROWS_AS(poly::cubic_roots(f3, 1, 0), std::invalid_argument);

    // classifier vs brute force, every (a, b), m <= 6 (the acceptance suite
    // extends this to m <= 8); roots verified by substitution
    for (unsigned m = 2; m <= 6; ++m) {
        Field f = Field::with_default_poly(m);
        std::optional<Field> ext;
        if (m % 2 == 1) ext.emplace(Field::quadratic_extension(f));
        for (Elt a = 0; a < f.order(); ++a) {
            for (Elt b = 1; b < f.order(); ++b) {
                auto r = poly::cubic_roots(f, a, b, ext ? &*ext : nullptr);
                CHECK(r.root_count == brute_cubic_count(f, a, b));
                for (Elt z : r.roots) CHECK((f.pow(z, 3) ^ f.mul(a, z) ^ b) == 0);
            }
        }
    }
}

TEST_CASE("lemma6 unique solution") {
    Field f4 = Field::with_default_poly(4);
    CHECK(poly::lemma6_unique_solution(f4, 1));
    Field f6 = Field::with_default_poly(6);
    for (Elt alpha : poly::find_good_alphas(f6, 1))
        CHECK(poly::lemma6_unique_solution(f6, alpha));
}

TEST_CASE("beta decomposition") {
    for (unsigned m : {3u, 4u, 5u, 6u}) {
        Field f = Field::with_default_poly(m);
        for (Elt alpha : poly::find_good_alphas(f, 1)) {
            CHECK(f.trace(f.inv(f.sqr(alpha))) == f.trace(1)); // trace precondition
            Elt beta = poly::beta_decomposition(f, alpha);
            CHECK((f.sqr(beta) ^ beta ^ 1u) == f.inv(f.sqr(alpha)));
        }
    }
}

TEST_CASE("Lemma 3(iii): Moebius-composed projective polynomial stays rootless") {
    std::mt19937 rng(11);
    for (unsigned m : {4u, 5u, 6u}) {
        Field f = Field::with_default_poly(m);
        std::uniform_int_distribution<Elt> pick(0, Elt(f.order() - 1));
        for (unsigned k : {1u, 2u}) {
            if (std::gcd(k, m) != 1) continue;
            Elt alpha = poly::find_good_alphas(f, k).front();
            int tested = 0;
            while (tested < 200) {
                Elt a = pick(rng), b = pick(rng), c = pick(rng), d = pick(rng);
                if ((f.mul(a, d) ^ f.mul(b, c)) == 0) continue;
                ++tested;
                // (cx+d)^{q+1} + (cx+d)(ax+b)^q + alpha (ax+b)^{q+1}
                bool has_root = false;
                for (Elt x = 0; x < f.order(); ++x) {
                    Elt u = f.mul(c, x) ^ d, v = f.mul(a, x) ^ b;
                    Elt uq = f.pow_q(u, k), vq = f.pow_q(v, k);
                    Elt val = f.mul(uq, u) ^ f.mul(u, vq) ^ f.mul(alpha, f.mul(vq, v));
                    if (val == 0) {
                        has_root = true;
                        break;
                    }
                }
                CHECK_FALSE(has_root);
            }
        }
    }
}
