#ifndef APN_FAMILIES_HPP
#define APN_FAMILIES_HPP

#include "apn/field.hpp"
#include "apn/vbf.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace apn::families {

/// Family F1: F(x,y) = (x^{q+1} + x y^q + a y^{q+1},
///                      x^{q^2+1} + a x^{q^2} y + (1+a)^q x y^{q^2} + a y^{q^2+1}),
/// q = 2^k, gcd(k,m) = 1, x^{q+1}+x+a rootless over the base field.
BivariatePair f1(const Field& base, unsigned k, Elt alpha);

/// Family F2: F(x,y) = (x^3 + xy + xy^2 + a y^3,
///                      x^5 + xy + a x^2 y^2 + a x^4 y + (1+a)^2 x y^4 + a y^5),
/// x^3 + x + a rootless over the base field.
BivariatePair f2(const Field& base, Elt alpha);

/// Gologlu's biprojective families, gcd(3k, m) = 1 (and m odd for the second).
BivariatePair gologlu_f1(const Field& base, unsigned k);
BivariatePair gologlu_f2(const Field& base, unsigned k);

/// Li-Zhu-Li-Qu quadrinomial-style function (= f2 at alpha = 1), gcd(3,m)=1.
BivariatePair lzlq(const Field& base);

/// Gold power map x^{2^i+1} over GF(2^n), gcd(i, n) = 1.
std::vector<UniTerm> gold_terms(const Field& fn, unsigned i);

struct FamilyParams {
    std::string family; // "f1", "f2", "gologlu-f1", "gologlu-f2", "lzlq", "gold", "known-N"
    unsigned m = 0;     // base-field degree for bivariate families, n for univariate
    unsigned k = 0;
    Elt alpha = 0;
    nlohmann::json extra;
};

struct Validation {
    bool ok = false;
    std::string reason;
};

/// Checks the published side conditions of the corresponding family.
Validation validate(const FamilyParams& p);

/// One representative of a known APN family over GF(2^12), ids 1..12
/// (1..8 univariate, 9..12 bivariate over GF(2^6) x GF(2^6)). Parameters are
/// scanned in a fixed ascending order and the first APN-verified choice is
/// taken; throws std::runtime_error if the scan exhausts.
struct KnownInstance {
    int id = 0;
    std::string name;
    TruthTable table;
    nlohmann::json params;
};
KnownInstance known_family(int id);

} // namespace apn::families

#endif
