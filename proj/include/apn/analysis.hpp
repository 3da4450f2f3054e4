#ifndef APN_ANALYSIS_HPP
#define APN_ANALYSIS_HPP

#include "apn/field.hpp"
#include "apn/vbf.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace apn {

/// Walsh data for one component b: the multiset of |W_F(a,b)| values as
/// (value, count) pairs sorted by value, plus the flags derived from it.
struct ComponentSpectrum {
    std::vector<std::pair<std::int32_t, std::uint32_t>> abs_values;
    std::int32_t w0 = 0; // W_F(0, b), signed
    bool bent = false;
    bool has_zero = false;
};

struct WalshSheet {
    unsigned n = 0;
    std::vector<ComponentSpectrum> components; // index b - 1, b = 1 .. 2^n - 1
    std::vector<std::int32_t> global_abs;      // sorted distinct |W| over all (a, b != 0)
};

/// One fast Walsh-Hadamard transform per component. Components are taken
/// against the dot-product pairing <b, v> = parity(b & v); this is the trace
/// pairing in a dual basis, so every invariant derived here is unaffected.
WalshSheet walsh_sheet(const TruthTable& tt, unsigned threads = 1);

/// In-place FWHT of a length-2^k signed vector.
void fwht(std::vector<std::int32_t>& v);

/// The b with a zero Walsh value. With quadratic_shortcut only the a = 0
/// column is tested (valid for quadratic APN functions, n even).
std::vector<std::uint32_t> nb_set(const WalshSheet& sheet, bool quadratic_shortcut = false);

/// n_d = number of d-dimensional GF(2)-subspaces V with V \ {0} contained in
/// S, for d = 1 .. max_dim. Subspaces are enumerated once each through their
/// reduced-echelon basis. S must not contain 0.
std::vector<long long> count_subspaces(const std::vector<std::uint32_t>& S, unsigned n,
                                       unsigned max_dim, unsigned threads = 1);

enum class SpectrumClass { gold_like, other };
/// gold_like iff the global |W| set is exactly {0, 2^{n/2}, 2^{n/2+1}}; n
/// must be even.
SpectrumClass spectrum_class(const WalshSheet& sheet);

struct InvariantProfile {
    unsigned delta = 0;
    std::vector<long long> nf; // trimmed at the last nonzero entry
    SpectrumClass spectrum = SpectrumClass::other;
    bool three_to_one = false;
    std::size_t nb_size = 0;
};

/// Full comparison key for inequivalence claims. Requires an APN input
/// (std::invalid_argument otherwise). nf is computed through max_dim and,
/// when extend_past is set, one dimension past the last nonzero entry.
InvariantProfile invariant_profile(const TruthTable& tt, unsigned max_dim = 4,
                                   bool extend_past = true, unsigned threads = 1);

std::string profile_to_json(const InvariantProfile& p);

/// Order-3 symmetry of family F1 at k = 1:
/// L(x,y) = ((beta+1)x + y/alpha, x/alpha + beta*y). Checks L^3 = id,
/// L^2 = L + id, F o L = F, and the {1:1, 3:(2^n-1)/3} preimage profile.
bool three_to_one_and_symmetry(const TruthTable& tt, const Field& base, Elt alpha);

/// Index table of the symmetry map L above.
std::vector<std::uint16_t> symmetry_map_table(const Field& base, Elt alpha);

} // namespace apn

#endif
