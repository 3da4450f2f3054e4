#include "apn/families.hpp"

#include "apn/poly.hpp"

#include <numeric>
#include <stdexcept>

namespace apn::families {

namespace {

const Field& gf12() {
    static const Field f = Field::with_default_poly(12);
    return f;
}

const Field& gf6_tower() {
    static const Field f = Field::quadratic_extension(Field::with_default_poly(6));
    return f;
}

void require(bool cond, const std::string& reason) {
    if (!cond) throw std::invalid_argument(reason);
}

bool alpha_good(const Field& base, unsigned k, Elt alpha) {
    return std::gcd(k, base.degree()) == 1 && !poly::phi_has_root(base, k, alpha);
}

std::vector<Elt> subfield_elements(const Field& f, unsigned d) {
    std::vector<Elt> out;
    for (Elt v = 0; v < f.order(); ++v)
        if (f.in_subfield(d, v)) out.push_back(v);
    return out;
}

} // namespace

BivariatePair f1(const Field& base, unsigned k, Elt alpha) {
    unsigned m = base.degree();
    require(k > 0 && std::gcd(k, m) == 1, "f1 requires gcd(k, m) = 1");
    require(!poly::phi_has_root(base, k, alpha),
            "f1 requires x^{q+1}+x+alpha to be rootless over GF(2^m)");
    std::uint64_t q = 1ull << k, q2 = 1ull << (2 * k);
    BivariatePair p{Field::quadratic_extension(base), {}, {}};
    p.f = {{q + 1, 0, 1}, {1, q, 1}, {0, q + 1, alpha}};
    p.g = {{q2 + 1, 0, 1},
           {q2, 1, alpha},
           {1, q2, base.pow(alpha ^ 1u, q)},
           {0, q2 + 1, alpha}};
    return p;
}

BivariatePair f2(const Field& base, Elt alpha) {
    require(!poly::phi_has_root(base, 1, alpha),
            "f2 requires x^3+x+alpha to be rootless over GF(2^m)");
    BivariatePair p{Field::quadratic_extension(base), {}, {}};
    p.f = {{3, 0, 1}, {1, 1, 1}, {1, 2, 1}, {0, 3, alpha}};
    p.g = {{5, 0, 1},
           {1, 1, 1},
           {2, 2, alpha},
           {4, 1, alpha},
           {1, 4, base.sqr(alpha ^ 1u)},
           {0, 5, alpha}};
    return p;
}

BivariatePair gologlu_f1(const Field& base, unsigned k) {
    unsigned m = base.degree();
    require(k > 0 && std::gcd(3 * k, m) == 1, "gologlu_f1 requires gcd(3k, m) = 1");
    std::uint64_t q = 1ull << k, q2 = 1ull << (2 * k);
    BivariatePair p{Field::quadratic_extension(base), {}, {}};
    p.f = {{q + 1, 0, 1}, {1, q, 1}, {0, q + 1, 1}};
    p.g = {{q2 + 1, 0, 1}, {q2, 1, 1}, {0, q2 + 1, 1}};
    return p;
}

BivariatePair gologlu_f2(const Field& base, unsigned k) {
    unsigned m = base.degree();
    require(k > 0 && std::gcd(3 * k, m) == 1, "gologlu_f2 requires gcd(3k, m) = 1");
    require(m % 2 == 1, "gologlu_f2 requires odd m");
    std::uint64_t q = 1ull << k, q3 = 1ull << (3 * k);
    BivariatePair p{Field::quadratic_extension(base), {}, {}};
    p.f = {{q + 1, 0, 1}, {1, q, 1}, {0, q + 1, 1}};
    p.g = {{q3, 1, 1}, {1, q3, 1}};
    return p;
}

BivariatePair lzlq(const Field& base) {
    require(base.degree() % 3 != 0, "lzlq requires gcd(3, m) = 1");
    return f2(base, 1);
}

std::vector<UniTerm> gold_terms(const Field& fn, unsigned i) {
    require(i > 0 && std::gcd(i, fn.degree()) == 1, "gold requires gcd(i, n) = 1");
    return {{(1ull << i) + 1, 1}};
}

Validation validate(const FamilyParams& p) {
    auto fail = [](std::string r) { return Validation{false, std::move(r)}; };
    try {
        if (p.family == "f1") {
            Field base = Field::with_default_poly(p.m);
            if (p.k == 0 || std::gcd(p.k, p.m) != 1) return fail("gcd(k, m) != 1");
            if (poly::phi_has_root(base, p.k, p.alpha))
                return fail("x^{q+1}+x+alpha has a root in GF(2^m)");
            return {true, ""};
        }
        if (p.family == "f2" || p.family == "lzlq") {
            Field base = Field::with_default_poly(p.m);
            Elt alpha = p.family == "lzlq" ? 1 : p.alpha;
            if (p.family == "lzlq" && p.m % 3 == 0) return fail("gcd(3, m) != 1");
            if (poly::phi_has_root(base, 1, alpha))
                return fail("x^3+x+alpha has a root in GF(2^m)");
            return {true, ""};
        }
        if (p.family == "gologlu-f1" || p.family == "gologlu-f2") {
            if (p.k == 0 || std::gcd(3 * p.k, p.m) != 1) return fail("gcd(3k, m) != 1");
            if (p.family == "gologlu-f2" && p.m % 2 == 0) return fail("m must be odd");
            return {true, ""};
        }
        if (p.family == "gold") {
            if (p.k == 0 || std::gcd(p.k, p.m) != 1) return fail("gcd(i, n) != 1");
            return {true, ""};
        }
        if (p.family == "known-2") {
            const Field& fn = gf12();
            Elt u = p.extra.at("u").get<Elt>();
            if (!fn.is_primitive(u)) return fail("u is not primitive");
            return {true, ""};
        }
        if (p.family == "known-3") {
            const Field& fn = gf12();
            Elt u = p.extra.at("u").get<Elt>();
            Elt v = p.extra.at("v").get<Elt>(), w = p.extra.at("w").get<Elt>();
            unsigned s = p.extra.at("s").get<unsigned>();
            if (!fn.is_primitive(u)) return fail("u is not primitive");
            if (!fn.in_subfield(4, v) || !fn.in_subfield(4, w)) return fail("v, w must lie in GF(2^4)");
            if (fn.mul(v, w) == 1) return fail("vw = 1");
            if ((4 + s) % 3 != 0) return fail("3 must divide k + s");
            return {true, ""};
        }
        if (p.family == "known-4") {
            const Field& fn = gf12();
            Elt mu = p.extra.at("mu").get<Elt>();
            Elt v = p.extra.at("v").get<Elt>();
            unsigned s = p.extra.at("s").get<unsigned>();
            if (std::gcd(s, 4u) != 1) return fail("gcd(s, m) != 1");
            if (!fn.in_subfield(4, v) || v == 0) return fail("v must lie in GF(2^4)*");
            if (fn.pow(mu, (1u << 8) + (1u << 4) + 1) == 1) return fail("norm of mu is 1");
            auto L = [&](Elt z) { return fn.pow_q(z, 4 + s) ^ fn.mul(mu, fn.pow_q(z, s)) ^ z; };
            if (!poly::linear_map_is_permutation(fn, L)) return fail("L is not a permutation");
            return {true, ""};
        }
        if (p.family == "known-5") {
            const Field& fn = gf12();
            Elt c = p.extra.at("c").get<Elt>(), s = p.extra.at("s").get<Elt>();
            unsigned i = p.extra.at("i").get<unsigned>();
            if (std::gcd(i, 6u) != 1) return fail("gcd(i, m) != 1");
            if (fn.in_subfield(6, s)) return fail("s must lie outside GF(2^6)");
            Elt cq = fn.pow_q(c, 6);
            for (Elt z = 1; z < fn.order(); ++z) {
                if (fn.pow(z, 65) != 1) continue; // unit circle z^{q+1} = 1
                if ((fn.pow(z, (1ull << i) + 1) ^ fn.mul(c, fn.pow_q(z, i)) ^ fn.mul(cq, z) ^ 1u) == 0)
                    return fail("hexanomial condition violated on the unit circle");
            }
            return {true, ""};
        }
        if (p.family == "known-6" || p.family == "known-7" || p.family == "known-8") {
            if (p.extra.at("a").get<Elt>() == 0) return fail("a must be nonzero");
            return {true, ""};
        }
        if (p.family == "known-9") {
            Field base = Field::with_default_poly(p.m);
            if (p.m % 2 != 0) return fail("m must be even");
            if (p.k == 0 || std::gcd(p.k, p.m) != 1) return fail("gcd(k, m) != 1");
            if (base.is_cube(p.alpha)) return fail("alpha is a cube");
            return {true, ""};
        }
        if (p.family == "known-10") {
            Field base = Field::with_default_poly(p.m);
            if (p.k == 0 || std::gcd(p.k, p.m) != 1) return fail("gcd(k, m) != 1");
            Elt a = p.extra.at("a").get<Elt>(), b = p.extra.at("b").get<Elt>();
            for (Elt z = 0; z < base.order(); ++z)
                if ((base.pow(z, (1ull << p.k) + 1) ^ base.mul(a, z) ^ b) == 0)
                    return fail("z^{2^k+1}+az+b has a root");
            return {true, ""};
        }
        if (p.family == "known-11") {
            Field base = Field::with_default_poly(p.m);
            if (p.m % 2 != 0) return fail("m must be even");
            unsigned i = p.k;
            if (i == 0 || std::gcd(i, p.m) != 1) return fail("gcd(i, m) != 1");
            Elt b = p.extra.at("b").get<Elt>(), c = p.extra.at("c").get<Elt>();
            unsigned h = p.m / 2;
            for (Elt z = 0; z < base.order(); ++z) {
                Elt inner = base.mul(c, base.pow(z, (1ull << i) + 1)) ^
                            base.mul(b, base.pow_q(z, i)) ^ 1u;
                if ((base.pow(inner, (1ull << h) + 1) ^ base.pow(z, (1ull << h) + 1)) == 0)
                    return fail("hexanomial condition has a root");
            }
            return {true, ""};
        }
        if (p.family == "known-12") {
            Field base = Field::with_default_poly(p.m);
            if (p.m % 4 != 2) return fail("m != 2 mod 4");
            if (p.k == 0 || std::gcd(p.k, p.m) != 1) return fail("gcd(k, m) != 1");
            Elt B = p.extra.at("B").get<Elt>(), a = p.extra.at("a").get<Elt>();
            unsigned h = p.m / 2;
            if (base.is_cube(B)) return fail("B is a cube");
            if (a == 0 || !base.in_subfield(h, a)) return fail("a must lie in GF(2^{m/2})*");
            if (base.pow(B, (1ull << p.k) + (1ull << (p.k + h))) == base.pow(a, (1ull << p.k) + 1))
                return fail("B^{2^k+2^{k+m/2}} = a^{2^k+1}");
            return {true, ""};
        }
        return fail("unknown family '" + p.family + "'");
    } catch (const std::exception& e) {
        return fail(e.what());
    }
}

namespace {

KnownInstance make_uni(int id, const std::string& name, const std::vector<UniTerm>& terms,
                       nlohmann::json params) {
    KnownInstance inst;
    inst.id = id;
    inst.name = name;
    inst.table = univariate_evaluate(gf12(), terms);
    inst.params = std::move(params);
    return inst;
}

// trace-expanded term list for x^3 + a^{-1} tr^n_d(sum_j a^{e_j} x^{x_j})
std::vector<UniTerm> trace_family_terms(const Field& fn, unsigned d, Elt a,
                                        const std::vector<std::pair<std::uint64_t, std::uint64_t>>&
                                            inner) { // (coeff exponent of a, exponent of x)
    std::vector<UniTerm> terms = {{3, 1}};
    Elt ia = fn.inv(a);
    for (unsigned i = 0; i < fn.degree() / d; ++i) {
        std::uint64_t q = 1ull << (d * i);
        for (auto& [ae, xe] : inner)
            terms.push_back({xe * q, fn.mul(fn.pow(a, ae * q), ia)});
    }
    return terms;
}

KnownInstance known_univariate(int id) {
    const Field& fn = gf12();
    switch (id) {
    case 1: {
        return make_uni(1, "Gold", gold_terms(fn, 1), {{"family", 1}, {"n", 12}, {"i", 1}});
    }
    case 2: {
        // n = 3k: k = 4, s = 1, i = sk mod 3 = 1, row-m = 3 - i = 2
        for (Elt u = 2; u < fn.order(); ++u) {
            if (!fn.is_primitive(u)) continue;
            std::vector<UniTerm> terms = {{3, 1}, {(1ull << 4) + (1ull << 9), fn.pow(u, 15)}};
            KnownInstance inst = make_uni(2, "Budaghyan-Carlet-Leander bivariate-exponent",
                                          terms, {{"family", 2}, {"n", 12}, {"k", 4}, {"s", 1}, {"u", u}});
            if (is_apn(inst.table)) return inst;
        }
        break;
    }
    case 3: {
        // k = 4, s = 5 (3 | k+s), exponents 2^s+1, 2^{n-k}+2^{k+s}, 2^{n-k}+1, 2^s+2^{k+s}
        std::vector<Elt> sub = subfield_elements(fn, 4);
        for (Elt u = 2; u < fn.order(); ++u) {
            if (!fn.is_primitive(u)) continue;
            for (Elt v : sub) {
                for (Elt w : sub) {
                    if (fn.mul(v, w) == 1) continue;
                    std::vector<UniTerm> terms = {{33, u},
                                                  {768, fn.pow(u, 16)},
                                                  {257, v},
                                                  {544, fn.mul(w, fn.pow(u, 17))}};
                    KnownInstance inst =
                        make_uni(3, "Bracken-Byrne-Markin-McGuire", terms,
                                 {{"family", 3}, {"n", 12}, {"k", 4}, {"s", 5}, {"u", u}, {"v", v}, {"w", w}});
                    if (is_apn(inst.table)) return inst;
                }
            }
        }
        break;
    }
    case 4: {
        // n = 3m: m = 4; F(z) = L(z)^{2^m+1} + v z^{2^m+1}
        std::vector<Elt> sub = subfield_elements(fn, 4);
        for (unsigned s : {1u, 3u}) {
            for (Elt mu = 1; mu < fn.order(); ++mu) {
                if (fn.pow(mu, (1u << 8) + (1u << 4) + 1) == 1) continue;
                auto L = [&](Elt z) { return fn.pow_q(z, 4 + s) ^ fn.mul(mu, fn.pow_q(z, s)) ^ z; };
                if (!poly::linear_map_is_permutation(fn, L)) continue;
                for (Elt v : sub) {
                    if (v == 0) continue;
                    KnownInstance inst;
                    inst.id = 4;
                    inst.name = "Li-Zhu-Li-Qu triple-trace";
                    inst.table.n = 12;
                    inst.table.values.resize(fn.order());
                    for (Elt z = 0; z < fn.order(); ++z)
                        inst.table.values[z] =
                            std::uint16_t(fn.pow(L(z), 17) ^ fn.mul(v, fn.pow(z, 17)));
                    inst.params = {{"family", 4}, {"n", 12}, {"m", 4}, {"s", s}, {"mu", mu}, {"v", v}};
                    if (is_apn(inst.table)) return inst;
                }
            }
        }
        break;
    }
    case 5: {
        // hexanomial, q = 2^6
        Elt s = 0;
        for (Elt cand = 0; cand < fn.order(); ++cand) {
            if (!fn.in_subfield(6, cand)) {
                s = cand;
                break;
            }
        }
        for (unsigned i : {1u, 5u}) {
            for (Elt c = 0; c < fn.order(); ++c) {
                FamilyParams check{"known-5", 12, 0, 0, {{"c", c}, {"s", s}, {"i", i}}};
                if (!validate(check).ok) continue;
                Elt cq = fn.pow_q(c, 6);
                std::uint64_t qi = 1ull << i;
                std::vector<UniTerm> terms = {{65, s},
                                              {qi + 1, 1},
                                              {64 * (qi + 1), 1},
                                              {64 * qi + 1, c},
                                              {qi + 64, cq}};
                KnownInstance inst = make_uni(5, "Budaghyan-Carlet hexanomial", terms,
                                              {{"family", 5}, {"n", 12}, {"i", i}, {"c", c}, {"s", s}});
                if (is_apn(inst.table)) return inst;
            }
        }
        break;
    }
    case 6: {
        for (Elt a = 1; a < fn.order(); ++a) {
            auto terms = trace_family_terms(fn, 1, a, {{3, 9}});
            KnownInstance inst = make_uni(6, "Budaghyan-Carlet-Leander trace",
                                          terms, {{"family", 6}, {"n", 12}, {"a", a}});
            if (is_apn(inst.table)) return inst;
        }
        break;
    }
    case 7: {
        for (Elt a = 1; a < fn.order(); ++a) {
            auto terms = trace_family_terms(fn, 3, a, {{3, 9}, {6, 18}});
            KnownInstance inst = make_uni(7, "Budaghyan-Carlet-Leander rel-trace-1",
                                          terms, {{"family", 7}, {"n", 12}, {"a", a}});
            if (is_apn(inst.table)) return inst;
        }
        break;
    }
    case 8: {
        for (Elt a = 1; a < fn.order(); ++a) {
            auto terms = trace_family_terms(fn, 3, a, {{6, 18}, {12, 36}});
            KnownInstance inst = make_uni(8, "Budaghyan-Carlet-Leander rel-trace-2",
                                          terms, {{"family", 8}, {"n", 12}, {"a", a}});
            if (is_apn(inst.table)) return inst;
        }
        break;
    }
    default:
        break;
    }
    throw std::runtime_error("known_family(" + std::to_string(id) +
                             "): parameter scan exhausted without an APN instance");
}

KnownInstance make_biv(int id, const std::string& name, std::vector<Term> f, std::vector<Term> g,
                       nlohmann::json params) {
    KnownInstance inst;
    inst.id = id;
    inst.name = name;
    BivariatePair p{gf6_tower(), std::move(f), std::move(g)};
    inst.table = evaluate(p);
    inst.params = std::move(params);
    return inst;
}

KnownInstance known_bivariate(int id) {
    const Field& base = gf6_tower().base();
    switch (id) {
    case 9: {
        // Zhou-Pott; the alpha term reads y^{(2^k+1)2^i} (the printed x is a typo:
        // a second coordinate in x alone cannot be APN)
        for (unsigned k : {1u, 5u}) {
            std::uint64_t q = 1ull << k;
            for (unsigned i = 0; i < 6; ++i) {
                for (Elt alpha = 1; alpha < base.order(); ++alpha) {
                    if (base.is_cube(alpha)) continue;
                    KnownInstance inst = make_biv(
                        9, "Zhou-Pott", {{1, 1, 1}},
                        {{q + 1, 0, 1}, {0, (q + 1) << i, alpha}},
                        {{"family", 9}, {"m", 6}, {"k", k}, {"i", i}, {"alpha", alpha}});
                    if (is_apn(inst.table)) return inst;
                }
            }
        }
        break;
    }
    case 10: {
        for (unsigned k : {1u, 5u}) {
            std::uint64_t q = 1ull << k;
            for (Elt a = 0; a < base.order(); ++a) {
                for (Elt b = 1; b < base.order(); ++b) {
                    FamilyParams check{"known-10", 6, k, 0, {{"a", a}, {"b", b}}};
                    if (!validate(check).ok) continue;
                    KnownInstance inst = make_biv(
                        10, "Taniguchi", {{1, 1, 1}},
                        {{(1ull << (3 * k)) + (1ull << (2 * k)), 0, 1}, {1ull << (2 * k), q, a}, {0, q + 1, b}},
                        {{"family", 10}, {"m", 6}, {"k", k}, {"a", a}, {"b", b}});
                    if (is_apn(inst.table)) return inst;
                }
            }
        }
        break;
    }
    case 11: {
        for (unsigned i : {1u, 5u}) {
            std::uint64_t qi = 1ull << i;
            for (Elt b = 0; b < base.order(); ++b) {
                for (Elt c = 0; c < base.order(); ++c) {
                    FamilyParams check{"known-11", 6, i, 0, {{"b", b}, {"c", c}}};
                    if (!validate(check).ok) continue;
                    KnownInstance inst = make_biv(
                        11, "Calderini-Budaghyan-Carlet", {{1, 1, 1}},
                        {{qi + 1, 0, 1}, {1ull << (i + 3), 8, 1}, {1, qi, b}, {0, qi + 1, c}},
                        {{"family", 11}, {"m", 6}, {"i", i}, {"b", b}, {"c", c}});
                    if (is_apn(inst.table)) return inst;
                }
            }
        }
        break;
    }
    case 12: {
        for (unsigned k : {1u, 5u}) {
            std::uint64_t qk = 1ull << k;
            for (Elt B = 1; B < base.order(); ++B) {
                if (base.is_cube(B)) continue;
                for (Elt a = 1; a < base.order(); ++a) {
                    FamilyParams check{"known-12", 6, k, 0, {{"B", B}, {"a", a}}};
                    if (!validate(check).ok) continue;
                    KnownInstance inst = make_biv(
                        12, "Gologlu-Kolsch", {{qk + 1, 0, 1}, {0, qk + 1, B}},
                        {{1ull << (k + 3), 1, 1}, {1, 1ull << (k + 3), base.mul(a, base.inv(B))}},
                        {{"family", 12}, {"m", 6}, {"k", k}, {"i", k}, {"B", B}, {"a", a}});
                    if (is_apn(inst.table)) return inst;
                }
            }
        }
        break;
    }
    default:
        break;
    }
    throw std::runtime_error("known_family(" + std::to_string(id) +
                             "): parameter scan exhausted without an APN instance");
}

} // namespace

KnownInstance known_family(int id) {
    if (id >= 1 && id <= 8) return known_univariate(id);
    if (id >= 9 && id <= 12) return known_bivariate(id);
    throw std::invalid_argument("known family id must be in 1..12");
}

} // namespace apn::families
