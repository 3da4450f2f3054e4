#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apn/analysis.hpp"
#include "apn/families.hpp"
#include "apn/field.hpp"
#include "apn/poly.hpp"
#include "apn/vbf.hpp"

#include <bit>
#include <functional>
#include <map>
#include <random>
#include <set>

using namespace apn;

namespace {

TruthTable random_table(unsigned n, std::uint32_t seed) {
    TruthTable tt{n, std::vector<std::uint16_t>(std::size_t{1} << n)};
    std::mt19937 rng(seed);
    for (auto& v : tt.values) v = std::uint16_t(rng() & ((1u << n) - 1));
    return tt;
}

// quadratic-time Walsh coefficient, the definition verbatim
std::int32_t naive_walsh(const TruthTable& tt, std::uint32_t a, std::uint32_t b) {
    std::int32_t w = 0;
    for (std::size_t x = 0; x < tt.values.size(); ++x) {
        unsigned bit = std::popcount(b & std::uint32_t(tt.values[x])) ^ std::popcount(a & std::uint32_t(x));
        w += (bit & 1u) ? -1 : 1;
    }
    return w;
}

// subspace counting by enumerating every subset closure, exponential oracle
std::vector<long long> naive_count_subspaces(const std::vector<std::uint32_t>& S, unsigned n,
                                             unsigned max_dim) {
    std::set<std::uint32_t> in(S.begin(), S.end());
    std::vector<long long> counts(max_dim, 0);
    // enumerate subspaces by their (sorted) full nonzero point set via spans of
    // ascending generator tuples; dedupe through a set of canonical point sets
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<std::uint32_t> gens;
    auto close = [&](const std::vector<std::uint32_t>& g) {
        std::set<std::uint32_t> pts = {0};
        for (auto v : g) {
            std::set<std::uint32_t> next = pts;
            for (auto p : pts) next.insert(p ^ v);
            pts = next;
        }
        return std::vector<std::uint32_t>(pts.begin(), pts.end());
    };
    std::function<void(std::uint32_t)> rec = [&](std::uint32_t start) {
        auto pts = close(gens);
        if (pts.size() == (std::size_t{1} << gens.size()) && !gens.empty()) {
            bool inside = true;
            for (auto p : pts)
                if (p && !in.count(p)) inside = false;
            if (inside && seen.insert(pts).second) ++counts[gens.size() - 1];
        }
        if (gens.size() == max_dim) return;
        for (std::uint32_t v = start; v < (1u << n); ++v) {
            gens.push_back(v);
            rec(v + 1);
            gens.pop_back();
        }
    };
    rec(1);
    return counts;
}

long long gaussian_binomial(unsigned n, unsigned d) {
    // prod (2^n - 2^i) / (2^d - 2^i)
    long double v = 1;
    for (unsigned i = 0; i < d; ++i)
        v *= (long double)((1ll << n) - (1ll << i)) / (long double)((1ll << d) - (1ll << i));
    return (long long)(v + 0.5L);
}

} // namespace

TEST_CASE("fwht matches the naive transform") {
    std::mt19937 rng(17);
    std::vector<std::int32_t> v(64);
    for (auto& x : v) x = std::int32_t(rng() % 41) - 20;
    std::vector<std::int32_t> naive(64, 0);
    for (std::uint32_t a = 0; a < 64; ++a)
        for (std::uint32_t x = 0; x < 64; ++x)
            naive[a] += (std::popcount(a & x) & 1) ? -v[x] : v[x];
    fwht(v);
    CHECK(v == naive);
}

TEST_CASE("walsh sheet matches the naive Walsh transform, n = 6") {
    TruthTable tt = random_table(6, 23);
    WalshSheet sheet = walsh_sheet(tt);
    CHECK(sheet.components.size() == 63);
    for (std::uint32_t b = 1; b < 64; ++b) {
        const auto& comp = sheet.components[b - 1];
        CHECK(comp.w0 == naive_walsh(tt, 0, b));
        // rebuild the abs multiset
        std::map<std::int32_t, std::uint32_t> mult;
        bool zero = false;
        for (std::uint32_t a = 0; a < 64; ++a) {
            std::int32_t w = naive_walsh(tt, a, b);
            ++mult[std::abs(w)];
            if (w == 0) zero = true;
        }
        std::vector<std::pair<std::int32_t, std::uint32_t>> expect(mult.begin(), mult.end());
        CHECK(comp.abs_values == expect);
        CHECK(comp.has_zero == zero);
    }
    // Parseval per component: sum W^2 = 2^{2n}
    for (const auto& comp : sheet.components) {
        long long sum = 0;
        for (auto [val, cnt] : comp.abs_values) sum += (long long)val * val * cnt;
        CHECK(sum == 64ll * 64ll);
    }
}

TEST_CASE("walsh sheet is thread-count invariant") {
    TruthTable tt = random_table(8, 29);
    WalshSheet one = walsh_sheet(tt, 1);
    WalshSheet four = walsh_sheet(tt, 4);
    CHECK(one.global_abs == four.global_abs);
    for (std::size_t i = 0; i < one.components.size(); ++i)
        CHECK(one.components[i].abs_values == four.components[i].abs_values);
}

TEST_CASE("gold spectrum and nb set, n = 6") {
    Field f = Field::with_default_poly(6);
    TruthTable tt = univariate_evaluate(f, families::gold_terms(f, 1));
    WalshSheet sheet = walsh_sheet(tt);
    CHECK(sheet.global_abs == std::vector<std::int32_t>{0, 8, 16});
    CHECK(spectrum_class(sheet) == SpectrumClass::gold_like);
    auto full = nb_set(sheet, false);
    auto quick = nb_set(sheet, true);
    CHECK(full == quick);
    CHECK(full.size() == 21); // (2^6 - 1)/3
}

TEST_CASE("nb set modes agree on quadratic bivariate functions, n = 8") {
    Field base = Field::with_default_poly(4);
    for (Elt alpha : poly::find_good_alphas(base, 1)) {
        TruthTable tt = evaluate(families::f1(base, 1, alpha));
        WalshSheet sheet = walsh_sheet(tt);
        CHECK(nb_set(sheet, false) == nb_set(sheet, true));
    }
}

TEST_CASE("count_subspaces: full space gives Gaussian binomials") {
    for (unsigned n : {3u, 4u, 5u}) {
        std::vector<std::uint32_t> S;
        for (std::uint32_t v = 1; v < (1u << n); ++v) S.push_back(v);
        auto counts = count_subspaces(S, n, std::min(n, 4u));
        for (unsigned d = 1; d <= counts.size(); ++d)
            CHECK(counts[d - 1] == gaussian_binomial(n, d));
    }
}

TEST_CASE("count_subspaces vs exponential oracle on random sets") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        unsigned n = 4 + (trial % 2);
        std::vector<std::uint32_t> S;
        for (std::uint32_t v = 1; v < (1u << n); ++v)
            if (rng() % 3) S.push_back(v);
        auto fast = count_subspaces(S, n, 3);
        auto slow = naive_count_subspaces(S, n, 3);
        CHECK(fast == slow);
    }
}

TEST_CASE("count_subspaces is thread-count invariant") {
    std::mt19937 rng(37);
    std::vector<std::uint32_t> S;
    for (std::uint32_t v = 1; v < (1u << 8); ++v)
        if (rng() % 2) S.push_back(v);
    auto one = count_subspaces(S, 8, 4, 1);
    for (unsigned t : {2u, 5u}) CHECK(count_subspaces(S, 8, 4, t) == one);
}

TEST_CASE("invariant profile of Gold, n = 6") {
    Field f = Field::with_default_poly(6);
    TruthTable tt = univariate_evaluate(f, families::gold_terms(f, 1));
    InvariantProfile p = invariant_profile(tt);
    CHECK(p.delta == 2);
    CHECK(p.spectrum == SpectrumClass::gold_like);
    CHECK(p.nb_size == 21);
    CHECK_FALSE(p.nf.empty());
    CHECK(p.nf[0] == 21); // n_1 = |NB_F|
    // profile serialization carries every field
    std::string js = profile_to_json(p);
    CHECK(js.find("\"delta\":2") != std::string::npos);
    CHECK(js.find("gold-like") != std::string::npos);
}

TEST_CASE("invariant profile rejects non-APN input") {
    Field f = Field::with_default_poly(6);
    TruthTable lin = univariate_evaluate(f, {{1, 1}});
    CHECK_THROWS_AS(invariant_profile(lin), std::invalid_argument);
}

TEST_CASE("order-3 symmetry and 3-to-1 structure of f1 at k = 1") {
    for (unsigned m : {3u, 4u, 5u}) {
        Field base = Field::with_default_poly(m);
        for (Elt alpha : poly::find_good_alphas(base, 1)) {
            TruthTable tt = evaluate(families::f1(base, 1, alpha));
            CHECK(three_to_one_and_symmetry(tt, base, alpha));
            auto prof = preimage_profile(tt);
            CHECK(prof[1] == 1);
            CHECK(prof[3] == ((std::size_t{1} << (2 * m)) - 1) / 3);
        }
    }
}

TEST_CASE("profile is invariant under the field basis (EA relabeling)") {
    // same function family computed over two reduction polynomials of GF(2^3)
    for (std::uint32_t red : {0b1011u, 0b1101u}) {
        Field base(3, red);
        Elt alpha = poly::find_good_alphas(base, 1).front();
        TruthTable tt = evaluate(families::f1(base, 1, alpha));
        InvariantProfile p = invariant_profile(tt);
        CHECK(p.delta == 2);
        CHECK(p.nb_size == 21);
        CHECK(p.three_to_one);
    }
}
