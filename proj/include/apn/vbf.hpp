#ifndef APN_VBF_HPP
#define APN_VBF_HPP

#include "apn/field.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace apn {

/// One monomial c * x^xe * y^ye of a bivariate polynomial over the base field.
struct Term {
    std::uint64_t xe = 0, ye = 0;
    Elt c = 0;
};

/// A pair (f, g) of bivariate polynomials over GF(2^m), together with the
/// tower field GF(2^{2m}) fixing the (x, y) identification.
struct BivariatePair {
    Field field; // tower; field.base() is GF(2^m)
    std::vector<Term> f, g;
};

/// Full value table of an (n,n)-function. Index packs (x, y) as (y << m) | x;
/// an entry packs (f, g) as (g << m) | f.
struct TruthTable {
    unsigned n = 0;
    std::vector<std::uint16_t> values;
};

struct UniTerm {
    std::uint64_t e = 0;
    Elt c = 0;
};

TruthTable evaluate(const BivariatePair& p);
TruthTable univariate_evaluate(const Field& fn, const std::vector<UniTerm>& terms);

struct DdtSummary {
    unsigned delta = 0;
    /// (a, b) pairs attaining delta, ascending, capped at 16.
    std::vector<std::pair<std::uint16_t, std::uint16_t>> worst_pairs;
};

/// Exhaustive derivative histogram; O(2^{2n}) time, O(2^n) memory.
DdtSummary differential_uniformity(const TruthTable& tt, unsigned threads = 1);

/// delta == 2, short-circuiting as soon as any bucket exceeds 2.
bool is_apn(const TruthTable& tt);

/// Histogram: preimage-set size -> number of image points with that size.
std::map<std::size_t, std::size_t> preimage_profile(const TruthTable& tt);

TruthTable add_pointwise(const TruthTable& a, const TruthTable& b);
/// F o L for a linear map given as an index table.
TruthTable compose_linear(const TruthTable& tt, const std::vector<std::uint16_t>& map);

std::uint64_t fnv1a_hash(const TruthTable& tt);

/// File format: one JSON header line {"n":..,"source":..,"hash":"0x.."},
/// then 2^n little-endian 16-bit words.
void save_table(const TruthTable& tt, const std::string& path, const std::string& source);
TruthTable load_table(const std::string& path);

} // namespace apn

#endif
