#ifndef APN_FIELD_HPP
#define APN_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace apn {

/// Field element: coefficient vector of the polynomial basis, packed into the
/// low m bits of an unsigned integer.
using Elt = std::uint32_t;

/// Arithmetic in GF(2^m), 1 <= m <= 16. Elements are m-bit integers.
///
/// Two constructions are supported:
///  - a polynomial-basis field over GF(2) fixed by a degree-m irreducible
///    reduction polynomial, and
///  - a quadratic extension of another Field by x^2 + x + nu (trace(nu) = 1),
///    so that an element of GF(2^{2m}) is literally the pair (x, y) packed as
///    (y << m) | x. This makes the bivariate identification exact.
///
/// Instances are immutable after construction; all operations are pure and
/// safe to call concurrently.
class Field {
public:
    /// Polynomial-basis field. `reduction` must have bits m and 0 set and be
    /// irreducible over GF(2); throws std::invalid_argument otherwise.
    Field(unsigned m, std::uint32_t reduction);

    /// Field with the lexicographically smallest irreducible of degree m.
    static Field with_default_poly(unsigned m);
    static std::uint32_t default_reduction(unsigned m);

    /// Degree-2 extension of `base` by x^2 + x + nu, nu the smallest element
    /// of absolute trace 1.
    static Field quadratic_extension(const Field& base);

    unsigned degree() const { return m_; }
    std::size_t order() const { return std::size_t{1} << m_; }

    bool is_tower() const { return static_cast<bool>(base_); }
    /// Reduction polynomial (polynomial-basis fields only, 0 for towers).
    std::uint32_t reduction() const { return reduction_; }
    const Field& base() const;
    Elt extension_nu() const;

    static Elt add(Elt a, Elt b) { return a ^ b; }
    Elt mul(Elt a, Elt b) const;
    Elt sqr(Elt a) const { return mul(a, a); }
    /// a^e with the convention pow(0, 0) = 1.
    Elt pow(Elt a, std::uint64_t e) const;
    /// Frobenius power a^(2^k).
    Elt pow_q(Elt a, unsigned k) const;
    /// Multiplicative inverse; throws std::domain_error on 0.
    Elt inv(Elt a) const;

    /// Absolute trace, in {0, 1}.
    int trace(Elt a) const;
    /// Relative trace tr^m_{sub_m}; throws std::domain_error unless sub_m | m.
    Elt rel_trace(unsigned sub_m, Elt a) const;

    /// True iff a = c^3 for some c.
    bool is_cube(Elt a) const;

    /// Smallest generator of the multiplicative group.
    Elt generator() const;
    std::uint64_t element_order(Elt a) const;
    bool is_primitive(Elt a) const { return a != 0 && element_order(a) == order() - 1; }
    /// a lies in the subfield GF(2^sub_m); requires sub_m | m.
    bool in_subfield(unsigned sub_m, Elt a) const;

    /// Coordinate maps of the tower representation (tower fields only;
    /// std::domain_error otherwise).
    Elt embed(Elt x, Elt y) const;
    std::pair<Elt, Elt> split(Elt v) const;

    /// JSON-ready description: {"m":..,"reduction":"0x.."} or the tower form.
    std::string describe() const;

private:
    Field() = default;
    Elt raw_mul(Elt a, Elt b) const;
    void build_tables();

    unsigned m_ = 0;
    std::uint32_t reduction_ = 0;
    std::shared_ptr<const Field> base_;
    Elt nu_ = 0;
    // log/antilog fast path, built for m <= 12
    std::vector<std::uint16_t> log_, exp_;
    Elt generator_ = 0;
};

} // namespace apn

#endif
