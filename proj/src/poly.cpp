#include "apn/poly.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace apn::poly {

namespace {

void require_coprime(const Field& f, unsigned k) {
    if (k == 0 || std::gcd(k, f.degree()) != 1)
        throw std::invalid_argument("gcd(k, m) must be 1");
}

Elt eval_phi(const Field& f, unsigned k, Elt alpha, Elt x) {
    return f.mul(f.pow_q(x, k), x) ^ x ^ alpha;
}

} // namespace

bool phi_has_root(const Field& f, unsigned k, Elt alpha) {
    require_coprime(f, k);
    for (Elt x = 0; x < f.order(); ++x)
        if (eval_phi(f, k, alpha, x) == 0) return true;
    return false;
}

std::vector<Elt> find_good_alphas(const Field& f, unsigned k) {
    require_coprime(f, k);
    // alpha admits a root iff alpha lies in the image of x -> x^{q+1} + x
    std::vector<bool> bad(f.order(), false);
    for (Elt x = 0; x < f.order(); ++x) bad[f.mul(f.pow_q(x, k), x) ^ x] = true;
    std::vector<Elt> good;
    for (Elt a = 0; a < f.order(); ++a)
        if (!bad[a]) good.push_back(a);
    if (good.empty()) throw std::logic_error("no rootless alpha found, contradicting Bluher");
    return good;
}

bool square_root_closure_check(const Field& f, unsigned k, Elt alpha) {
    return phi_has_root(f, k, alpha) == phi_has_root(f, k, f.sqr(alpha));
}

bool linearized_is_permutation(const Field& f, Elt a, Elt b, Elt c, unsigned k) {
    require_coprime(f, k);
    return linear_map_is_permutation(f, [&](Elt x) {
        return f.mul(a, f.pow_q(x, 2 * k)) ^ f.mul(b, f.pow_q(x, k)) ^ f.mul(c, x);
    });
}

bool linear_map_is_permutation(const Field& f, const std::function<Elt(Elt)>& map) {
    for (Elt x = 1; x < f.order(); ++x)
        if (map(x) == 0) return false;
    return true;
}

CubicReport cubic_roots(const Field& f, Elt a, Elt b, const Field* ext) {
    if (b == 0) throw std::invalid_argument("cubic_roots requires b != 0");
    CubicReport rep;

    Elt a3 = f.pow(a, 3);
    Elt ratio = f.mul(a3, f.inv(f.sqr(b)));
    int predicted;
    if (f.trace(ratio) != f.trace(1)) {
        predicted = 1;
        rep.branch = CubicReport::Branch::one_root;
    } else {
        // resolvent h(t) = t^2 + b t + a^3 over GF(2^m) (m even) or GF(2^{2m})
        const bool odd = f.degree() % 2 == 1;
        std::optional<Field> local;
        if (odd && !ext) local.emplace(Field::quadratic_extension(f));
        const Field& K = odd ? (ext ? *ext : *local) : f;
        Elt hb = odd ? K.embed(b, 0) : b;
        Elt ha3 = odd ? K.embed(a3, 0) : a3;
        Elt t1 = 0, t2 = 0;
        bool found = false;
        for (Elt t = 0; t < K.order(); ++t) {
            if ((K.mul(t, t) ^ K.mul(hb, t) ^ ha3) == 0) {
                if (!found) {
                    t1 = t;
                    found = true;
                } else {
                    t2 = t;
                    break;
                }
            }
        }
        if (!found) throw std::logic_error("resolvent quadratic has no root in its splitting field");
        // t1 t2 = a^3, so for a != 0 both roots share cube-ness; test a nonzero one
        Elt probe = t1 != 0 ? t1 : t2;
        bool cube = K.is_cube(probe);
        if (a != 0 && t2 != 0 && K.is_cube(t2) != K.is_cube(t1))
            throw std::logic_error("resolvent roots disagree on cube test");
        predicted = cube ? 3 : 0;
        rep.branch = cube ? CubicReport::Branch::three_roots : CubicReport::Branch::no_roots;
    }

    for (Elt z = 0; z < f.order(); ++z)
        if ((f.pow(z, 3) ^ f.mul(a, z) ^ b) == 0) rep.roots.push_back(z);
    rep.root_count = int(rep.roots.size());
    if (rep.root_count != predicted)
        throw std::logic_error("cubic classifier disagrees with exhaustive root scan");
    return rep;
}

bool lemma6_unique_solution(const Field& f, Elt alpha) {
    std::size_t zeros = 0;
    bool expected_seen = false;
    Elt a2 = f.sqr(alpha), a3 = f.mul(a2, alpha);
    for (Elt a = 0; a < f.order(); ++a) {
        Elt aa2 = f.sqr(a), aa3 = f.mul(aa2, a);
        for (Elt b = 0; b < f.order(); ++b) {
            Elt b2 = f.sqr(b), b3 = f.mul(b2, b);
            Elt v = aa3 ^ f.mul(alpha, f.mul(b, aa2)) ^
                    f.mul(f.mul(a2, b2) ^ b2 ^ 1u, a) ^ f.mul(a3, b3) ^ f.mul(alpha, b2) ^ alpha;
            if (v == 0) {
                ++zeros;
                if (a == alpha && b == 1) expected_seen = true;
            }
        }
    }
    return zeros == 1 && expected_seen;
}

Elt beta_decomposition(const Field& f, Elt alpha) {
    Elt target = f.inv(f.sqr(alpha)) ^ 1u; // beta^2 + beta = 1/alpha^2 + 1
    for (Elt beta = 0; beta < f.order(); ++beta)
        if ((f.sqr(beta) ^ beta) == target) return beta;
    throw std::domain_error("no beta with beta^2+beta+1 = 1/alpha^2 (trace condition fails)");
}

} // namespace apn::poly
