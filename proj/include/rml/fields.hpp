#ifndef RML_FIELDS_HPP
#define RML_FIELDS_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <vector>

#include "common.hpp"

namespace rml {

class FieldElement;

/// Exact arithmetic in GF(p) and GF(p^m), p prime, p^m <= 2^16.
///
/// Extension fields are quotients GF(p)[x]/(f) for an explicit monic
/// irreducible modulus f given by its ascending coefficient vector.
/// Elements are encoded as integers: the element with coefficient vector
/// (c_0, ..., c_{m-1}) has code sum c_i * p^i. The code order doubles as the
/// canonical element order used everywhere a deterministic tie-break is
/// needed. Towers are limited to a single extension step over a prime field.
class Field {
   public:
    static Field prime(uint32_t p);
    /// GF(p^m) with the given monic irreducible modulus (ascending, length m+1).
    static Field extension(uint32_t p, const std::vector<uint32_t>& modulus);
    /// GF(q) with the shipped default modulus (q in {4,8,9,16,27}); for other
    /// prime powers the lexicographically smallest monic irreducible is used.
    static Field gf(uint64_t q);

    uint32_t characteristic() const { return impl_->p; }
    int degree() const { return impl_->deg; }
    uint64_t order() const { return impl_->order; }
    bool is_prime_field() const { return impl_->deg == 1; }
    const std::vector<uint32_t>& modulus() const { return impl_->modulus; }
    Field prime_subfield() const { return is_prime_field() ? *this : Field::prime(impl_->p); }

    bool operator==(const Field& o) const {
        if (impl_ == o.impl_) return true;
        return impl_->p == o.impl_->p && impl_->deg == o.impl_->deg && impl_->modulus == o.impl_->modulus;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    // Arithmetic on element codes. All values are < order().
    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t div(uint32_t a, uint32_t b) const;
    uint32_t pow(uint32_t a, uint64_t e) const;
    /// x -> x^p, the generator of the Galois group over the prime subfield.
    uint32_t frobenius(uint32_t a) const;
    /// Trace onto the prime subfield: x + x^p + ... + x^{p^(m-1)}.
    uint32_t trace_to_prime(uint32_t a) const;

    std::vector<uint32_t> coeffs(uint32_t code) const;
    uint32_t encode(const std::vector<uint32_t>& coeffs) const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement element(uint64_t code) const;
    FieldElement from_coeffs(const std::vector<uint32_t>& coeffs) const;

   private:
    struct Impl {
        uint32_t p = 0;
        int deg = 1;
        uint64_t order = 0;
        std::vector<uint32_t> modulus;  // ascending, size deg+1; empty for prime fields
        std::vector<uint32_t> exp_table;  // size 2*(order-1), extension fields only
        std::vector<uint32_t> log_table;  // size order, log_table[0] unused
    };
    std::shared_ptr<const Impl> impl_;
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    uint32_t poly_mul(uint32_t a, uint32_t b) const;
};

class FieldElement {
   public:
    FieldElement(Field f, uint32_t code) : f_(std::move(f)), v_(code) {
        detail::require(v_ < f_.order(), "FieldElement: code out of range");
    }
    const Field& field() const { return f_; }
    uint32_t code() const { return v_; }
    std::vector<uint32_t> coeffs() const { return f_.coeffs(v_); }
    bool is_zero() const { return v_ == 0; }

    FieldElement operator+(const FieldElement& o) const { return same(o), FieldElement(f_, f_.add(v_, o.v_)); }
    FieldElement operator-(const FieldElement& o) const { return same(o), FieldElement(f_, f_.sub(v_, o.v_)); }
    FieldElement operator*(const FieldElement& o) const { return same(o), FieldElement(f_, f_.mul(v_, o.v_)); }
    FieldElement operator/(const FieldElement& o) const { return same(o), FieldElement(f_, f_.div(v_, o.v_)); }
    FieldElement operator-() const { return FieldElement(f_, f_.neg(v_)); }
    FieldElement inverse() const { return FieldElement(f_, f_.inv(v_)); }
    FieldElement pow(uint64_t e) const { return FieldElement(f_, f_.pow(v_, e)); }
    FieldElement frobenius() const { return FieldElement(f_, f_.frobenius(v_)); }

    bool operator==(const FieldElement& o) const { return f_ == o.f_ && v_ == o.v_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

   private:
    void same(const FieldElement& o) const { detail::require(f_ == o.f_, "field mismatch"); }
    Field f_;
    uint32_t v_;
};

inline FieldElement Field::zero() const { return FieldElement(*this, 0); }
inline FieldElement Field::one() const { return FieldElement(*this, 1 % impl_->order); }
inline FieldElement Field::element(uint64_t code) const {
    detail::require(code < order(), "element code out of range");
    return FieldElement(*this, static_cast<uint32_t>(code));
}
inline FieldElement Field::from_coeffs(const std::vector<uint32_t>& c) const { return FieldElement(*this, encode(c)); }

namespace detail {

inline bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomial helpers over GF(p), coefficients ascending. Used for modulus
// validation; element arithmetic goes through the field tables instead.
inline std::vector<uint32_t> poly_trim(std::vector<uint32_t> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline std::vector<uint32_t> poly_mod(std::vector<uint32_t> a, const std::vector<uint32_t>& b, uint32_t p) {
    a = poly_trim(std::move(a));
    auto bb = poly_trim(b);
    detail::require(!bb.empty(), "poly_mod: zero divisor");
    uint32_t lead_inv = 1;
    {  // inverse of bb's leading coefficient mod p
        uint32_t lead = bb.back();
        for (uint32_t t = 1; t < p; ++t)
            if (t * lead % p == 1) { lead_inv = t; break; }
    }
    while (a.size() >= bb.size()) {
        uint32_t c = static_cast<uint32_t>(static_cast<uint64_t>(a.back()) * lead_inv % p);
        size_t shift = a.size() - bb.size();
        for (size_t i = 0; i < bb.size(); ++i) {
            uint64_t sub = static_cast<uint64_t>(c) * bb[i] % p;
            a[shift + i] = static_cast<uint32_t>((a[shift + i] + p - sub) % p);
        }
        a = poly_trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

/// Exhaustive irreducibility test: a monic polynomial of degree m is
/// irreducible over GF(p) iff it has no monic factor of degree 1..m/2.
/// Returns an offending factor (ascending coefficients) if one exists.
inline std::vector<uint32_t> find_monic_factor(const std::vector<uint32_t>& f, uint32_t p) {
    int m = static_cast<int>(f.size()) - 1;
    for (int d = 1; d <= m / 2; ++d) {
        uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;  // p^d candidates, p^d <= 2^8 under the field cap
        for (uint64_t code = 0; code < count; ++code) {
            std::vector<uint32_t> g(d + 1, 0);
            uint64_t t = code;
            for (int i = 0; i < d; ++i) { g[i] = static_cast<uint32_t>(t % p); t /= p; }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return g;
        }
    }
    return {};
}

}  // namespace detail

inline Field Field::prime(uint32_t p) {
    detail::require(p >= 2 && p <= 251, "prime field: modulus must satisfy 2 <= p <= 251");
    detail::require(detail::is_prime(p), "prime field: " + std::to_string(p) + " is not prime");
    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->deg = 1;
    impl->order = p;
    return Field(std::move(impl));
}

inline uint32_t Field::poly_mul(uint32_t a, uint32_t b) const {
    const auto& im = *impl_;
    std::vector<uint32_t> ca = coeffs(a), cb = coeffs(b);
    std::vector<uint32_t> prod(2 * im.deg - 1, 0);
    for (int i = 0; i < im.deg; ++i) {
        if (!ca[i]) continue;
        for (int j = 0; j < im.deg; ++j)
            prod[i + j] = static_cast<uint32_t>((prod[i + j] + static_cast<uint64_t>(ca[i]) * cb[j]) % im.p);
    }
    auto rem = detail::poly_mod(std::move(prod), im.modulus, im.p);
    rem.resize(im.deg, 0);
    uint32_t code = 0;
    for (int i = im.deg - 1; i >= 0; --i) code = code * im.p + rem[i];
    return code;
}

inline Field Field::extension(uint32_t p, const std::vector<uint32_t>& modulus) {
    detail::require(p >= 2 && p <= 251 && detail::is_prime(p), "extension field: characteristic must be prime <= 251");
    int m = static_cast<int>(modulus.size()) - 1;
    detail::require(m >= 1, "extension field: modulus must have degree >= 1");
    if (m == 1) return prime(p);  // GF(p^1) = GF(p)
    for (uint32_t c : modulus) detail::require(c < p, "extension field: modulus coefficients must be reduced mod p");
    detail::require(modulus.back() == 1, "extension field: modulus must be monic");

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->deg = m;
    impl->modulus = modulus;
    uint64_t order = 1;
    for (int i = 0; i < m; ++i) {
        order *= p;
        detail::require(order <= 65536, "extension field: order cap is 2^16");
    }
    impl->order = order;
    detail::require(modulus[0] != 0, "extension field: modulus has root 0 (constant term vanishes)");
    if (auto g = detail::find_monic_factor(modulus, p); !g.empty()) {
        std::string s = "[";
        for (size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
        s += "]";
        throw std::invalid_argument("extension field: modulus is reducible, divisible by " + s);
    }

    Field f(impl);
    // Build discrete log tables from a multiplicative generator.
    uint64_t n = order - 1;
    std::vector<uint64_t> prime_factors;
    {
        uint64_t t = n;
        for (uint64_t d = 2; d * d <= t; ++d) {
            if (t % d == 0) {
                prime_factors.push_back(d);
                while (t % d == 0) t /= d;
            }
        }
        if (t > 1) prime_factors.push_back(t);
    }
    uint32_t gen = 0;
    for (uint32_t cand = 2; cand < order; ++cand) {
        bool ok = true;
        for (uint64_t q : prime_factors) {
            // cand^(n/q) by square-and-multiply with the bootstrap multiplication
            uint64_t e = n / q;
            uint32_t base = cand, r = 1;
            while (e) {
                if (e & 1) r = f.poly_mul(r, base);
                base = f.poly_mul(base, base);
                e >>= 1;
            }
            if (r == 1) { ok = false; break; }
        }
        if (ok) { gen = cand; break; }
    }
    detail::require(gen != 0, "extension field: no multiplicative generator found (internal)");

    impl->exp_table.resize(2 * n);
    impl->log_table.assign(order, 0);
    uint32_t cur = 1;
    for (uint64_t i = 0; i < n; ++i) {
        impl->exp_table[i] = cur;
        impl->exp_table[i + n] = cur;
        impl->log_table[cur] = static_cast<uint32_t>(i);
        cur = f.poly_mul(cur, gen);
    }
    detail::require(cur == 1, "extension field: generator order mismatch (internal)");
    return f;
}

inline Field Field::gf(uint64_t q) {
    detail::require(q >= 2 && q <= 65536, "gf: order must be in [2, 2^16]");
    uint32_t p = 0;
    for (uint32_t d = 2; d <= q; ++d)
        if (q % d == 0) { p = d; break; }
    int m = 0;
    uint64_t t = q;
    while (t > 1) { detail::require(t % p == 0, "gf: order is not a prime power"); t /= p; ++m; }
    if (m == 1) return prime(p);
    static const std::map<uint64_t, std::vector<uint32_t>> defaults = {
        {4, {1, 1, 1}},         // a^2 + a + 1
        {8, {1, 1, 0, 1}},      // a^3 + a + 1
        {9, {2, 2, 1}},         // a^2 + 2a + 2
        {16, {1, 1, 0, 0, 1}},  // a^4 + a + 1
        {27, {1, 2, 0, 1}},     // a^3 + 2a + 1
    };
    if (auto it = defaults.find(q); it != defaults.end()) return extension(p, it->second);
    // Smallest monic irreducible in code order.
    uint64_t count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (uint64_t code = 1; code < count; ++code) {
        std::vector<uint32_t> f(m + 1, 0);
        uint64_t c = code;
        for (int i = 0; i < m; ++i) { f[i] = static_cast<uint32_t>(c % p); c /= p; }
        f[m] = 1;
        if (f[0] == 0) continue;
        if (detail::find_monic_factor(f, p).empty()) return extension(p, f);
    }
    throw std::logic_error("gf: no irreducible modulus found (unreachable)");
}

inline std::vector<uint32_t> Field::coeffs(uint32_t code) const {
    std::vector<uint32_t> c(impl_->deg);
    for (int i = 0; i < impl_->deg; ++i) { c[i] = code % impl_->p; code /= impl_->p; }
    return c;
}

inline uint32_t Field::encode(const std::vector<uint32_t>& c) const {
    detail::require(static_cast<int>(c.size()) == impl_->deg, "encode: coefficient vector must have length m");
    uint32_t code = 0;
    for (int i = impl_->deg - 1; i >= 0; --i) {
        detail::require(c[i] < impl_->p, "encode: coefficient not reduced mod p");
        code = code * impl_->p + c[i];
    }
    return code;
}

inline uint32_t Field::add(uint32_t a, uint32_t b) const {
    const auto& im = *impl_;
    if (im.deg == 1) return (a + b) % im.p;
    if (im.p == 2) return a ^ b;
    uint32_t code = 0, mult = 1;
    for (int i = 0; i < im.deg; ++i) {
        code += (a % im.p + b % im.p) % im.p * mult;
        a /= im.p;
        b /= im.p;
        mult *= im.p;
    }
    return code;
}

inline uint32_t Field::neg(uint32_t a) const {
    const auto& im = *impl_;
    if (im.deg == 1) return (im.p - a) % im.p;
    if (im.p == 2) return a;
    uint32_t code = 0, mult = 1;
    for (int i = 0; i < im.deg; ++i) {
        code += (im.p - a % im.p) % im.p * mult;
        a /= im.p;
        mult *= im.p;
    }
    return code;
}

inline uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

inline uint32_t Field::mul(uint32_t a, uint32_t b) const {
    const auto& im = *impl_;
    if (im.deg == 1) return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % im.p);
    if (a == 0 || b == 0) return 0;
    return im.exp_table[im.log_table[a] + im.log_table[b]];
}

inline uint32_t Field::inv(uint32_t a) const {
    detail::require(a != 0, "division by zero");
    const auto& im = *impl_;
    if (im.deg == 1) return pow(a, im.p - 2);
    uint64_t n = im.order - 1;
    return im.exp_table[(n - im.log_table[a]) % n];
}

inline uint32_t Field::div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

inline uint32_t Field::pow(uint32_t a, uint64_t e) const {
    const auto& im = *impl_;
    if (a == 0) return e == 0 ? 1 % im.order : 0;
    uint64_t n = im.order - 1;
    if (im.deg > 1) return im.exp_table[static_cast<uint64_t>(im.log_table[a]) * (e % n) % n];
    uint64_t r = 1, base = a;
    e %= n;
    while (e) {
        if (e & 1) r = r * base % im.p;
        base = base * base % im.p;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

inline uint32_t Field::frobenius(uint32_t a) const { return pow(a, impl_->p); }

inline uint32_t Field::trace_to_prime(uint32_t a) const {
    uint32_t t = 0, x = a;
    for (int i = 0; i < impl_->deg; ++i) {
        t = add(t, x);
        x = frobenius(x);
    }
    // The trace is Frobenius-fixed, so its coefficient vector is constant.
    detail::require(t < impl_->p, "trace: result not in the prime subfield (internal)");
    return t;
}

/// Trace onto a represented subfield: either the prime subfield or the field
/// itself (towers are one extension step deep).
inline FieldElement trace(const FieldElement& x, const Field& sub) {
    const Field& f = x.field();
    if (sub == f) return x;
    detail::require(sub.is_prime_field() && sub.characteristic() == f.characteristic(),
                    "trace: not a represented subfield of the element's field");
    return FieldElement(sub, f.trace_to_prime(x.code()));
}

inline FieldElement trace(const FieldElement& x) { return trace(x, x.field().prime_subfield()); }

/// An ordered basis of GF(p^m) over GF(p); linear independence is checked at
/// construction by row-reducing the m x m coefficient matrix.
class FieldBasis {
   public:
    FieldBasis(Field field, std::vector<FieldElement> elements) : f_(std::move(field)), el_(std::move(elements)) {
        int m = f_.degree();
        detail::require(static_cast<int>(el_.size()) == m, "FieldBasis: need exactly m elements");
        for (const auto& e : el_) detail::require(e.field() == f_, "FieldBasis: element from a different field");
        // rank over GF(p) of the coefficient matrix
        uint32_t p = f_.characteristic();
        std::vector<std::vector<uint32_t>> rows;
        for (const auto& e : el_) rows.push_back(e.coeffs());
        int rank = 0;
        for (int col = 0; col < m && rank < m; ++col) {
            int piv = -1;
            for (int r = rank; r < m; ++r)
                if (rows[r][col] != 0) { piv = r; break; }
            if (piv < 0) continue;
            std::swap(rows[rank], rows[piv]);
            uint32_t inv = 1;
            for (uint32_t t = 1; t < p; ++t)
                if (t * rows[rank][col] % p == 1) { inv = t; break; }
            for (int c = 0; c < m; ++c) rows[rank][c] = static_cast<uint32_t>(static_cast<uint64_t>(rows[rank][c]) * inv % p);
            for (int r = 0; r < m; ++r) {
                if (r == rank || rows[r][col] == 0) continue;
                uint32_t c0 = rows[r][col];
                for (int c = 0; c < m; ++c)
                    rows[r][c] = static_cast<uint32_t>((rows[r][c] + static_cast<uint64_t>(p - c0 % p) * rows[rank][c]) % p);
            }
            ++rank;
        }
        detail::require(rank == m, "FieldBasis: elements are linearly dependent over the prime subfield");
    }

    static FieldBasis power_basis(const Field& f) {
        std::vector<FieldElement> el;
        uint64_t code = 1;
        for (int i = 0; i < f.degree(); ++i) {
            el.push_back(f.element(code));
            code *= f.characteristic();
        }
        return FieldBasis(f, std::move(el));
    }

    const Field& field() const { return f_; }
    int size() const { return static_cast<int>(el_.size()); }
    const FieldElement& operator[](int i) const { return el_.at(i); }
    const std::vector<FieldElement>& elements() const { return el_; }

    /// The unique basis G' with trace(g_i * g'_j) = (i == j). Solving
    /// T X = I over GF(p), where T[i][k] = trace(g_i * x^k), gives the
    /// coefficient vectors of G' as the columns of X.
    FieldBasis orthogonal() const {
        int m = f_.degree();
        uint32_t p = f_.characteristic();
        std::vector<std::vector<uint32_t>> aug(m, std::vector<uint32_t>(2 * m, 0));
        uint32_t beta = 1;
        for (int k = 0; k < m; ++k) {
            for (int i = 0; i < m; ++i) aug[i][k] = f_.trace_to_prime(f_.mul(el_[i].code(), beta));
            beta = static_cast<uint32_t>(beta * p);
        }
        for (int i = 0; i < m; ++i) aug[i][m + i] = 1;
        for (int col = 0; col < m; ++col) {
            int piv = -1;
            for (int r = col; r < m; ++r)
                if (aug[r][col] != 0) { piv = r; break; }
            detail::require(piv >= 0, "orthogonal basis: trace form degenerate (internal)");
            std::swap(aug[col], aug[piv]);
            uint32_t inv = 1;
            for (uint32_t t = 1; t < p; ++t)
                if (t * aug[col][col] % p == 1) { inv = t; break; }
            for (int c = 0; c < 2 * m; ++c) aug[col][c] = static_cast<uint32_t>(static_cast<uint64_t>(aug[col][c]) * inv % p);
            for (int r = 0; r < m; ++r) {
                if (r == col || aug[r][col] == 0) continue;
                uint32_t c0 = aug[r][col];
                for (int c = 0; c < 2 * m; ++c)
                    aug[r][c] = static_cast<uint32_t>((aug[r][c] + static_cast<uint64_t>(p - c0) * aug[col][c]) % p);
            }
        }
        std::vector<FieldElement> dual;
        for (int j = 0; j < m; ++j) {
            std::vector<uint32_t> c(m);
            for (int k = 0; k < m; ++k) c[k] = aug[k][m + j];
            dual.push_back(f_.from_coeffs(c));
        }
        return FieldBasis(f_, std::move(dual));
    }

    bool operator==(const FieldBasis& o) const {
        if (!(f_ == o.f_) || el_.size() != o.el_.size()) return false;
        for (size_t i = 0; i < el_.size(); ++i)
            if (el_[i].code() != o.el_[i].code()) return false;
        return true;
    }

   private:
    Field f_;
    std::vector<FieldElement> el_;
};

/// All ordered bases of GF(p^m) over GF(p), in lexicographic code order.
/// Intended for exhaustive desk-scale sweeps (|GL_m(F_p)| bases).
inline std::vector<FieldBasis> all_bases(const Field& f, long long budget = kDefaultBudget) {
    int m = f.degree();
    long long count = 1;
    for (int i = 0; i < m; ++i) count *= static_cast<long long>(f.order() - detail::checked_pow(f.characteristic(), i));
    detail::check_budget(count, budget, "all_bases");
    std::vector<FieldBasis> out;
    std::vector<FieldElement> stack;
    std::vector<uint32_t> chosen;
    uint32_t p = f.characteristic();
    auto inv_mod_p = [p](uint32_t x) {
        for (uint32_t t = 1; t < p; ++t)
            if (t * x % p == 1) return t;
        return 1u;
    };
    auto independent = [&](uint32_t cand) {
        // cand must lie outside the GF(p)-span of the chosen prefix; test by rank.
        std::vector<std::vector<uint32_t>> rows;
        for (uint32_t c : chosen) rows.push_back(f.coeffs(c));
        rows.push_back(f.coeffs(cand));
        int k = static_cast<int>(rows.size());
        int rank = 0;
        for (int col = 0; col < m && rank < k; ++col) {
            int piv = -1;
            for (int r = rank; r < k; ++r)
                if (rows[r][col] != 0) { piv = r; break; }
            if (piv < 0) continue;
            std::swap(rows[rank], rows[piv]);
            uint32_t pivinv = inv_mod_p(rows[rank][col]);
            for (int r = 0; r < k; ++r) {
                if (r == rank || rows[r][col] == 0) continue;
                uint32_t factor = static_cast<uint32_t>(static_cast<uint64_t>(rows[r][col]) * pivinv % p);
                for (int c = 0; c < m; ++c)
                    rows[r][c] = static_cast<uint32_t>((rows[r][c] + static_cast<uint64_t>(p - factor) * rows[rank][c]) % p);
            }
            ++rank;
        }
        return rank == k;
    };
    std::function<void()> rec = [&]() {
        if (static_cast<int>(chosen.size()) == m) {
            std::vector<FieldElement> el;
            for (uint32_t c : chosen) el.push_back(f.element(c));
            out.emplace_back(f, std::move(el));
            return;
        }
        for (uint32_t cand = 1; cand < f.order(); ++cand) {
            if (independent(cand)) {
                chosen.push_back(cand);
                rec();
                chosen.pop_back();
            }
        }
    };
    rec();
    return out;
}

}  // namespace rml

#endif
