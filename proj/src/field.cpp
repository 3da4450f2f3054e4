#include "apn/field.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace apn {

namespace {

unsigned bit_degree(std::uint64_t p) {
    unsigned d = 0;
    while (p >> (d + 1)) ++d;
    return d;
}

// remainder of bit-polynomial division
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
    unsigned db = bit_degree(b);
    while (a >> db) {
        unsigned da = bit_degree(a);
        a ^= b << (da - db);
    }
    return a;
}

bool is_irreducible(std::uint32_t r, unsigned m) {
    if (((r >> m) & 1u) == 0 || (r & 1u) == 0) return false;
    if (r >> (m + 1)) return false;
    // trial division by every polynomial of degree 1..m/2
    for (unsigned d = 1; 2 * d <= m; ++d) {
        for (std::uint64_t f = (1ull << d); f < (2ull << d); ++f) {
            if (poly_mod(r, f) == 0) return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = 2; p * p <= v; ++p) {
        if (v % p == 0) {
            ps.push_back(p);
            while (v % p == 0) v /= p;
        }
    }
    if (v > 1) ps.push_back(v);
    return ps;
}

} // namespace

Field::Field(unsigned m, std::uint32_t reduction) : m_(m), reduction_(reduction) {
    if (m < 1 || m > 16) throw std::invalid_argument("field degree must be in [1,16]");
    if (!is_irreducible(reduction, m))
        throw std::invalid_argument("reduction polynomial is not a degree-" + std::to_string(m) +
                                    " irreducible");
    build_tables();
}

std::uint32_t Field::default_reduction(unsigned m) {
    if (m < 1 || m > 16) throw std::invalid_argument("field degree must be in [1,16]");
    for (std::uint32_t mid = 0;; ++mid) {
        std::uint32_t r = (1u << m) | (mid << 1) | 1u;
        if (is_irreducible(r, m)) return r;
        if (mid >= (1u << m)) break;
    }
    throw std::logic_error("no irreducible polynomial found"); // unreachable
}

Field Field::with_default_poly(unsigned m) { return Field(m, default_reduction(m)); }

Field Field::quadratic_extension(const Field& base) {
    if (base.degree() > 8) throw std::invalid_argument("extension degree would exceed 16");
    Field f;
    f.m_ = 2 * base.degree();
    f.base_ = std::make_shared<Field>(base);
    f.nu_ = 0;
    for (Elt v = 0; v < base.order(); ++v) {
        if (base.trace(v) == 1) {
            f.nu_ = v;
            break;
        }
    }
    if (base.trace(f.nu_) != 1) throw std::logic_error("no trace-1 element in base field");
    f.build_tables();
    return f;
}

const Field& Field::base() const {
    if (!base_) throw std::domain_error("not a tower field");
    return *base_;
}

Elt Field::extension_nu() const {
    if (!base_) throw std::domain_error("not a tower field");
    return nu_;
}

Elt Field::raw_mul(Elt a, Elt b) const {
    if (base_) {
        // (x1 + t*y1)(x2 + t*y2) with t^2 = t + nu
        unsigned bm = base_->degree();
        Elt mask = (Elt(1) << bm) - 1;
        Elt x1 = a & mask, y1 = a >> bm;
        Elt x2 = b & mask, y2 = b >> bm;
        Elt xx = base_->mul(x1, x2);
        Elt yy = base_->mul(y1, y2);
        Elt lo = xx ^ base_->mul(nu_, yy);
        Elt hi = base_->mul(x1 ^ y1, x2 ^ y2) ^ xx;
        return (hi << bm) | lo;
    }
    // shift-and-reduce carry-less multiply
    std::uint64_t acc = 0, aa = a;
    for (unsigned i = 0; i < m_; ++i)
        if ((b >> i) & 1u) acc ^= aa << i;
    std::uint64_t red = reduction_;
    for (int i = int(2 * m_ - 2); i >= int(m_); --i)
        if ((acc >> i) & 1ull) acc ^= red << (i - m_);
    return Elt(acc);
}

void Field::build_tables() {
    if (m_ > 12) return;
    std::size_t n1 = order() - 1;
    exp_.assign(n1, 0);
    log_.assign(order(), 0);
    if (n1 == 1) { // GF(2)
        exp_[0] = 1;
        generator_ = 1;
        return;
    }
    for (Elt g = 2; g < order(); ++g) {
        Elt e = 1;
        bool ok = true;
        for (std::size_t i = 0; i < n1; ++i) {
            exp_[i] = std::uint16_t(e);
            if (e == 1 && i > 0) {
                ok = false;
                break;
            }
            e = raw_mul(e, g);
        }
        if (ok && e == 1) {
            generator_ = g;
            for (std::size_t i = 0; i < n1; ++i) log_[exp_[i]] = std::uint16_t(i);
            return;
        }
    }
    throw std::logic_error("no generator found; multiplicative group not cyclic?");
}

Elt Field::mul(Elt a, Elt b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) {
        std::size_t n1 = order() - 1;
        std::size_t s = std::size_t(log_[a]) + std::size_t(log_[b]);
        if (s >= n1) s -= n1;
        return exp_[s];
    }
    return raw_mul(a, b);
}

Elt Field::pow(Elt a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (!exp_.empty()) {
        std::size_t n1 = order() - 1;
        return exp_[(std::uint64_t(log_[a]) * (e % n1)) % n1];
    }
    Elt r = 1, sq = a;
    while (e) {
        if (e & 1ull) r = mul(r, sq);
        sq = mul(sq, sq);
        e >>= 1;
    }
    return r;
}

Elt Field::pow_q(Elt a, unsigned k) const {
    // Frobenius has order m
    Elt r = a;
    for (unsigned i = 0; i < k % m_; ++i) r = sqr(r);
    return r;
}

Elt Field::inv(Elt a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (!exp_.empty()) {
        std::size_t n1 = order() - 1;
        std::size_t l = log_[a];
        return exp_[l == 0 ? 0 : n1 - l];
    }
    return pow(a, order() - 2);
}

int Field::trace(Elt a) const {
    Elt s = 0, v = a;
    for (unsigned i = 0; i < m_; ++i) {
        s ^= v;
        v = sqr(v);
    }
    return int(s & 1u);
}

Elt Field::rel_trace(unsigned sub_m, Elt a) const {
    if (sub_m == 0 || m_ % sub_m != 0) throw std::domain_error("subfield degree must divide m");
    Elt s = 0, v = a;
    for (unsigned i = 0; i < m_ / sub_m; ++i) {
        s ^= v;
        v = pow_q(v, sub_m);
    }
    return s;
}

bool Field::is_cube(Elt a) const {
    if (a == 0) return true;
    if (m_ % 2 == 1) return true; // gcd(3, 2^m - 1) = 1 for odd m
    return pow(a, (order() - 1) / 3) == 1;
}

Elt Field::generator() const {
    if (generator_) return generator_;
    for (Elt g = 2; g < order(); ++g)
        if (is_primitive(g)) return g;
    throw std::logic_error("no generator found");
}

std::uint64_t Field::element_order(Elt a) const {
    if (a == 0) throw std::domain_error("order of zero");
    std::uint64_t n1 = order() - 1, ord = n1;
    for (std::uint64_t p : prime_factors(n1)) {
        while (ord % p == 0 && pow(a, ord / p) == 1) ord /= p;
    }
    return ord;
}

bool Field::in_subfield(unsigned sub_m, Elt a) const {
    if (sub_m == 0 || m_ % sub_m != 0) throw std::domain_error("subfield degree must divide m");
    return pow_q(a, sub_m) == a;
}

Elt Field::embed(Elt x, Elt y) const {
    if (!base_) throw std::domain_error("embed requires a tower field");
    unsigned bm = base_->degree();
    if (x >= base_->order() || y >= base_->order())
        throw std::domain_error("coordinate out of range for base field");
    return (y << bm) | x;
}

std::pair<Elt, Elt> Field::split(Elt v) const {
    if (!base_) throw std::domain_error("split requires a tower field");
    unsigned bm = base_->degree();
    Elt mask = (Elt(1) << bm) - 1;
    return {v & mask, v >> bm};
}

std::string Field::describe() const {
    std::ostringstream os;
    if (base_) {
        os << "{\"m\":" << m_ << ",\"tower\":{\"base\":" << base_->describe() << ",\"nu\":" << nu_
           << "}}";
    } else {
        os << "{\"m\":" << m_ << ",\"reduction\":\"0x" << std::hex << reduction_ << "\"}";
    }
    return os.str();
}

} // namespace apn
