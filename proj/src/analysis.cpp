#include "apn/analysis.hpp"

#include "apn/parallel.hpp"
#include "apn/poly.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace apn {

void fwht(std::vector<std::int32_t>& v) {
    const std::size_t size = v.size();
    for (std::size_t half = 1; half < size; half <<= 1) {
        for (std::size_t block = 0; block < size; block += 2 * half) {
            for (std::size_t i = block; i < block + half; ++i) {
                std::int32_t a = v[i], b = v[i + half];
                v[i] = a + b;
                v[i + half] = a - b;
            }
        }
    }
}

WalshSheet walsh_sheet(const TruthTable& tt, unsigned threads) {
    const std::size_t size = tt.values.size();
    WalshSheet sheet;
    sheet.n = tt.n;
    sheet.components.resize(size - 1);
    const std::int32_t bent_abs = (tt.n % 2 == 0) ? std::int32_t(1) << (tt.n / 2) : -1;

    unsigned nthreads = resolve_threads(threads);
    std::vector<std::set<std::int32_t>> globals(nthreads);
    parallel_chunks(size - 1, threads, [&](unsigned chunk, std::size_t b0, std::size_t b1) {
        std::vector<std::int32_t> w(size);
        for (std::size_t bi = b0; bi < b1; ++bi) {
            std::uint32_t b = std::uint32_t(bi + 1);
            for (std::size_t x = 0; x < size; ++x)
                w[x] = std::popcount(b & std::uint32_t(tt.values[x])) & 1 ? -1 : 1;
            fwht(w);
            ComponentSpectrum& comp = sheet.components[bi];
            comp.w0 = w[0];
            std::map<std::int32_t, std::uint32_t> hist;
            for (std::int32_t wa : w) ++hist[wa < 0 ? -wa : wa];
            comp.abs_values.assign(hist.begin(), hist.end());
            comp.has_zero = hist.count(0) != 0;
            comp.bent = hist.size() == 1 && hist.begin()->first == bent_abs;
            for (auto& [av, cnt] : hist) globals[chunk].insert(av);
        }
    });
    std::set<std::int32_t> merged;
    for (auto& g : globals) merged.insert(g.begin(), g.end());
    sheet.global_abs.assign(merged.begin(), merged.end());
    return sheet;
}

std::vector<std::uint32_t> nb_set(const WalshSheet& sheet, bool quadratic_shortcut) {
    if (quadratic_shortcut && sheet.n % 2 != 0)
        throw std::domain_error("quadratic shortcut needs even n");
    const std::int32_t bent_abs = std::int32_t(1) << (sheet.n / 2);
    std::vector<std::uint32_t> out;
    for (std::size_t bi = 0; bi < sheet.components.size(); ++bi) {
        const ComponentSpectrum& comp = sheet.components[bi];
        bool in = quadratic_shortcut ? std::abs(comp.w0) != bent_abs : comp.has_zero;
        if (in) out.push_back(std::uint32_t(bi + 1));
    }
    return out;
}

namespace {

struct SubspaceCounter {
    const std::vector<std::uint32_t>& sorted; // S, ascending
    const std::vector<char>& member;          // membership bitmap over [0, 2^n)
    unsigned max_dim;
    std::vector<long long>& counts;

    static unsigned lead(std::uint32_t v) { return 31u - unsigned(std::countl_zero(v)); }

    // basis is in reduced echelon form; span holds its nonzero span
    void extend(std::vector<std::uint32_t>& span, std::uint32_t or_basis, std::uint32_t pivot_mask,
                unsigned dim, unsigned last_lead) {
        if (dim >= max_dim) return;
        // candidates: v in S with lead(v) < last_lead
        auto end = std::lower_bound(sorted.begin(), sorted.end(), std::uint32_t(1) << last_lead);
        for (auto it = sorted.begin(); it != end; ++it) {
            std::uint32_t v = *it;
            if (v & pivot_mask) continue;               // reduced against existing pivots
            unsigned lv = lead(v);
            if ((or_basis >> lv) & 1u) continue;        // existing basis reduced against v
            bool closed = true;
            for (std::uint32_t s : span) {
                if (!member[v ^ s]) {
                    closed = false;
                    break;
                }
            }
            if (!closed) continue;
            ++counts[dim]; // counts[d-1] indexes dimension d; here new dim = dim + 1
            std::size_t old = span.size();
            span.push_back(v);
            for (std::size_t i = 0; i < old; ++i) span.push_back(span[i] ^ v);
            extend(span, or_basis | v, pivot_mask | (std::uint32_t(1) << lv), dim + 1, lv);
            span.resize(old);
        }
    }
};

} // namespace

std::vector<long long> count_subspaces(const std::vector<std::uint32_t>& S, unsigned n,
                                       unsigned max_dim, unsigned threads) {
    std::vector<std::uint32_t> sorted(S);
    std::sort(sorted.begin(), sorted.end());
    if (!sorted.empty() && sorted.front() == 0) throw std::domain_error("S must not contain 0");
    std::vector<char> member(std::size_t{1} << n, 0);
    for (std::uint32_t v : sorted) {
        if (v >> n) throw std::domain_error("element exceeds 2^n");
        member[v] = 1;
    }
    if (max_dim == 0) return {};

    unsigned nthreads = resolve_threads(threads);
    std::vector<std::vector<long long>> partial(nthreads, std::vector<long long>(max_dim, 0));
    parallel_chunks(sorted.size(), threads, [&](unsigned chunk, std::size_t i0, std::size_t i1) {
        SubspaceCounter ctr{sorted, member, max_dim, partial[chunk]};
        std::vector<std::uint32_t> span;
        for (std::size_t i = i0; i < i1; ++i) {
            std::uint32_t v = sorted[i];
            ++ctr.counts[0];
            span.assign(1, v);
            unsigned lv = SubspaceCounter::lead(v);
            ctr.extend(span, v, std::uint32_t(1) << lv, 1, lv);
        }
    });
    std::vector<long long> counts(max_dim, 0);
    for (auto& p : partial)
        for (unsigned d = 0; d < max_dim; ++d) counts[d] += p[d];
    return counts;
}

SpectrumClass spectrum_class(const WalshSheet& sheet) {
    if (sheet.n % 2 != 0) throw std::domain_error("spectrum class defined for even n only");
    const std::int32_t half = std::int32_t(1) << (sheet.n / 2);
    std::vector<std::int32_t> expected = {0, half, 2 * half};
    return sheet.global_abs == expected ? SpectrumClass::gold_like : SpectrumClass::other;
}

InvariantProfile invariant_profile(const TruthTable& tt, unsigned max_dim, bool extend_past,
                                   unsigned threads) {
    DdtSummary ddt = differential_uniformity(tt, threads);
    if (ddt.delta != 2) throw std::invalid_argument("invariant profile requires an APN function");

    InvariantProfile prof;
    prof.delta = ddt.delta;

    WalshSheet sheet = walsh_sheet(tt, threads);
    std::vector<std::uint32_t> nb = nb_set(sheet, false);
    prof.nb_size = nb.size();
    prof.spectrum = spectrum_class(sheet);

    auto profile = preimage_profile(tt);
    std::size_t size = tt.values.size();
    prof.three_to_one = profile.size() == 2 && profile.count(1) == 1 && profile[1] == 1 &&
                        profile.count(3) == 1 && profile[3] == (size - 1) / 3 &&
                        tt.values[0] == 0;

    unsigned dim = max_dim;
    std::vector<long long> nf = count_subspaces(nb, tt.n, dim, threads);
    while (extend_past && dim < tt.n && nf.back() != 0) {
        ++dim;
        nf = count_subspaces(nb, tt.n, dim, threads);
    }
    while (!nf.empty() && nf.back() == 0) nf.pop_back();
    prof.nf = std::move(nf);
    return prof;
}

std::string profile_to_json(const InvariantProfile& p) {
    std::ostringstream os;
    os << "{\"delta\":" << p.delta << ",\"nf\":[";
    for (std::size_t i = 0; i < p.nf.size(); ++i) os << (i ? "," : "") << p.nf[i];
    os << "],\"spectrum\":\"" << (p.spectrum == SpectrumClass::gold_like ? "gold-like" : "other")
       << "\",\"three_to_one\":" << (p.three_to_one ? "true" : "false")
       << ",\"nb_size\":" << p.nb_size << "}";
    return os.str();
}

std::vector<std::uint16_t> symmetry_map_table(const Field& base, Elt alpha) {
    unsigned m = base.degree();
    Elt beta = poly::beta_decomposition(base, alpha);
    Elt ia = base.inv(alpha);
    std::vector<std::uint16_t> map(std::size_t{1} << (2 * m));
    for (Elt y = 0; y < base.order(); ++y) {
        for (Elt x = 0; x < base.order(); ++x) {
            Elt nx = base.mul(beta ^ 1u, x) ^ base.mul(ia, y);
            Elt ny = base.mul(ia, x) ^ base.mul(beta, y);
            map[(std::size_t(y) << m) | x] = std::uint16_t((ny << m) | nx);
        }
    }
    return map;
}

bool three_to_one_and_symmetry(const TruthTable& tt, const Field& base, Elt alpha) {
    std::vector<std::uint16_t> L = symmetry_map_table(base, alpha);
    const std::size_t size = tt.values.size();
    if (L.size() != size) return false;
    for (std::size_t i = 0; i < size; ++i) {
        std::uint16_t l1 = L[i], l2 = L[l1];
        if (std::uint16_t(L[l2]) != i) return false;       // L^3 = id
        if (l2 != std::uint16_t(l1 ^ i)) return false;     // L^2 = L + id
        if (tt.values[l1] != tt.values[i]) return false;   // F o L = F
    }
    auto profile = preimage_profile(tt);
    return profile.size() == 2 && profile.count(1) && profile.at(1) == 1 && profile.count(3) &&
           profile.at(3) == (size - 1) / 3 && tt.values[0] == 0;
}

} // namespace apn
