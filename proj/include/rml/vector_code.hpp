#ifndef RML_VECTOR_CODE_HPP
#define RML_VECTOR_CODE_HPP

#include "matrix_code.hpp"

namespace rml {

/// Coordinates of x in the given basis of GF(p^m) over GF(p), as the length-m
/// code vector over the prime subfield.
inline std::vector<uint32_t> coords_in_basis(const FieldBasis& basis, uint32_t code) {
    const Field& f = basis.field();
    int m = f.degree();
    // solve P c = coeffs(x), where column j of P holds the coefficients of basis[j]
    Mat p(f.prime_subfield(), m, m);
    for (int j = 0; j < m; ++j) {
        auto cj = basis[j].coeffs();
        for (int i = 0; i < m; ++i) p.set_code(i, j, cj[i]);
    }
    Mat rhs(f.prime_subfield(), m, 1);
    auto cx = f.coeffs(code);
    for (int i = 0; i < m; ++i) rhs.set_code(i, 0, cx[i]);
    Mat sol = inverse(p) * rhs;
    std::vector<uint32_t> out(m);
    for (int i = 0; i < m; ++i) out[i] = sol.code_at(i, 0);
    return out;
}

/// A linear rank-metric code over the extension field: a k-dimensional
/// GF(q^m)-subspace of GF(q^m)^n in canonical (RREF over GF(q^m)) form.
class VectorCode {
   public:
    static VectorCode from_generators(const Field& ext, int n, const Mat& rows) {
        detail::require(rows.field() == ext && rows.cols() == n, "VectorCode: generator shape mismatch");
        return VectorCode(ext, n, Subspace::from_rows(rows));
    }
    static VectorCode zero(const Field& ext, int n) { return VectorCode(ext, n, Subspace::zero(ext, n)); }
    static VectorCode full(const Field& ext, int n) { return VectorCode(ext, n, Subspace::full(ext, n)); }
    static VectorCode from_subspace(const Field& ext, Subspace s) {
        detail::require(s.field() == ext, "VectorCode: field mismatch");
        int n = s.ambient();
        return VectorCode(ext, n, std::move(s));
    }

    /// Evaluation code of the linearized monomials x^(q^0), ..., x^(q^(k-1))
    /// at the power-basis points 1, a, ..., a^(n-1); the textbook maximum
    /// rank distance construction, shipped as a test fixture.
    static VectorCode gabidulin(const Field& ext, int n, int k) {
        detail::require(n >= 1 && n <= ext.degree(), "gabidulin: need n <= extension degree");
        detail::require(k >= 0 && k <= n, "gabidulin: need 0 <= k <= n");
        Mat g(ext, k, n);
        uint32_t p = ext.characteristic();
        for (int j = 0; j < n; ++j) {
            uint32_t point = ext.pow(static_cast<uint32_t>(p), static_cast<uint64_t>(j));  // a^j, a = x
            uint32_t v = point;
            for (int i = 0; i < k; ++i) {
                g.set_code(i, j, v);
                v = ext.frobenius(v);
            }
        }
        return from_generators(ext, n, g);
    }

    const Field& field() const { return ext_; }
    int n() const { return n_; }
    int dim() const { return space_.dim(); }  // over GF(q^m)
    const Subspace& subspace() const { return space_; }
    const Mat& generator() const { return space_.generator(); }

    long long size() const { return detail::checked_pow(static_cast<long long>(ext_.order()), dim()); }

    bool contains(const std::vector<uint32_t>& v) const { return space_.contains_vector(v); }
    bool is_subcode_of(const VectorCode& c) const {
        detail::require(ext_ == c.ext_ && n_ == c.n_, "is_subcode_of: ambient mismatch");
        return c.space_.contains(space_);
    }

    /// Dual with respect to the standard inner product of GF(q^m)^n.
    VectorCode dual() const { return VectorCode(ext_, n_, space_.perp()); }

    /// Coordinate-wise q-th power map (q = characteristic of the base).
    VectorCode frobenius_image() const {
        Mat g = space_.generator();
        Mat h(ext_, g.rows(), g.cols());
        for (int i = 0; i < g.rows(); ++i)
            for (int j = 0; j < g.cols(); ++j) h.set_code(i, j, ext_.frobenius(g.code_at(i, j)));
        return from_generators(ext_, n_, h);
    }

    /// The smallest Frobenius-fixed code containing this one:
    /// D + phi(D) + ... + phi^(m-1)(D).
    VectorCode frobenius_closure() const {
        Subspace acc = space_;
        VectorCode img = *this;
        for (int i = 1; i < ext_.degree(); ++i) {
            img = img.frobenius_image();
            acc = sum(acc, img.space_);
        }
        return VectorCode(ext_, n_, acc);
    }

    template <class Fn>
    void for_each_codeword(Fn&& fn, long long budget = kDefaultBudget) const {
        detail::check_budget(size(), budget, "VectorCode::for_each_codeword");
        std::vector<uint32_t> acc(n_, 0);
        walk(0, acc, fn);
    }

    int min_distance(long long budget = kDefaultBudget) const {
        if (dim() == 0) return n_ + 1;
        int best = n_ + 1;
        for_each_codeword(
            [&](const std::vector<uint32_t>& v) {
                if (std::all_of(v.begin(), v.end(), [](uint32_t c) { return c == 0; })) return;
                best = std::min(best, rank_weight(ext_, v));
            },
            budget);
        return best;
    }
    int max_rank(long long budget = kDefaultBudget) const {
        int best = 0;
        for_each_codeword([&](const std::vector<uint32_t>& v) { best = std::max(best, rank_weight(ext_, v)); }, budget);
        return best;
    }
    /// Counts of codewords by rank weight, index 0..n.
    std::vector<long long> weight_distribution(long long budget = kDefaultBudget) const {
        std::vector<long long> a(n_ + 1, 0);
        for_each_codeword([&](const std::vector<uint32_t>& v) { ++a[rank_weight(ext_, v)]; }, budget);
        return a;
    }

    /// Dimension over the base of the span of the entries; equals the rank of
    /// the expansion in any basis.
    static int rank_weight(const Field& ext, const std::vector<uint32_t>& v) {
        Mat m(ext.prime_subfield(), static_cast<int>(v.size()), ext.degree());
        for (size_t i = 0; i < v.size(); ++i) {
            auto c = ext.coeffs(v[i]);
            for (int j = 0; j < ext.degree(); ++j) m.set_code(static_cast<int>(i), j, c[j]);
        }
        return rank(m);
    }

    /// Expansion of one vector in the given basis: row i holds the basis
    /// coordinates of v_i.
    static Mat expand_vector(const FieldBasis& basis, const std::vector<uint32_t>& v) {
        const Field& ext = basis.field();
        int m = ext.degree();
        Mat out(ext.prime_subfield(), static_cast<int>(v.size()), m);
        for (size_t i = 0; i < v.size(); ++i) {
            auto c = coords_in_basis(basis, v[i]);
            for (int j = 0; j < m; ++j) out.set_code(static_cast<int>(i), j, c[j]);
        }
        return out;
    }

    /// The associated matrix code over the base field: the image of the code
    /// under coordinate expansion in the given basis. A k-dimensional code
    /// maps to an (m*k)-dimensional matrix code with the same minimum
    /// distance.
    MatrixCode expanded(const FieldBasis& basis) const {
        detail::require(basis.field() == ext_, "expanded: basis from a different field");
        int m = ext_.degree();
        std::vector<Mat> gens;
        for (int t = 0; t < dim(); ++t) {
            std::vector<uint32_t> row = space_.generator().row_codes(t);
            for (int j = 0; j < m; ++j) {
                std::vector<uint32_t> scaled(row.size());
                uint32_t gamma = basis[j].code();
                for (size_t i = 0; i < row.size(); ++i) scaled[i] = ext_.mul(gamma, row[i]);
                gens.push_back(expand_vector(basis, scaled));
            }
        }
        if (gens.empty()) return MatrixCode::zero(ext_.prime_subfield(), n_, m);
        return MatrixCode::from_generators(ext_.prime_subfield(), n_, m, gens);
    }

    /// Support of a vector: the column space of its expansion, a subspace of
    /// F_q^n. Independent of the basis choice; computed in the power basis.
    static Subspace vector_support(const Field& ext, const std::vector<uint32_t>& v) {
        Mat m(ext.prime_subfield(), static_cast<int>(v.size()), ext.degree());
        for (size_t i = 0; i < v.size(); ++i) {
            auto c = ext.coeffs(v[i]);
            for (int j = 0; j < ext.degree(); ++j) m.set_code(static_cast<int>(i), j, c[j]);
        }
        return Subspace::from_rows(m.transposed());
    }
    /// Support of the code: the sum of the supports of its codewords, which
    /// equals the sum over any generating set.
    Subspace support() const {
        Subspace s = Subspace::zero(ext_.prime_subfield(), n_);
        for (int t = 0; t < dim(); ++t) s = sum(s, vector_support(ext_, space_.generator().row_codes(t)));
        return s;
    }

    struct Classification {
        bool is_mrd = false;
        bool is_optimal_vector_anticode = false;
    };
    /// Singleton equality dim = n - d + 1 (dimensions over GF(q^m)) and the
    /// vector anticode equality dim = maxrank.
    Classification classify(long long budget = kDefaultBudget) const {
        Classification c;
        c.is_mrd = dim() == n_ - min_distance(budget) + 1;
        c.is_optimal_vector_anticode = dim() == max_rank(budget);
        return c;
    }

    bool operator==(const VectorCode& o) const { return ext_ == o.ext_ && n_ == o.n_ && space_ == o.space_; }
    bool operator!=(const VectorCode& o) const { return !(*this == o); }

   private:
    VectorCode(Field ext, int n, Subspace s) : ext_(std::move(ext)), n_(n), space_(std::move(s)) {
        detail::require(n_ >= 1, "VectorCode: n >= 1");
    }

    template <class Fn>
    void walk(int t, std::vector<uint32_t>& acc, Fn& fn) const {
        if (t == dim()) {
            fn(static_cast<const std::vector<uint32_t>&>(acc));
            return;
        }
        uint64_t q = ext_.order();
        std::vector<uint32_t> row = space_.generator().row_codes(t);
        std::vector<uint32_t> cur(n_);
        for (uint64_t c = 0; c < q; ++c) {
            for (int i = 0; i < n_; ++i) cur[i] = ext_.add(acc[i], ext_.mul(static_cast<uint32_t>(c), row[i]));
            walk(t + 1, cur, fn);
        }
    }

    Field ext_;
    int n_;
    Subspace space_;
};

/// Witness for vector-code equivalence: v -> alpha * v * B with alpha a
/// nonzero scalar of the extension field and B invertible over the base.
struct VectorIsometryWitness {
    uint32_t alpha;  // element code in GF(q^m)
    Mat b;           // over the prime subfield
};

inline VectorCode apply_isometry(const VectorIsometryWitness& w, const VectorCode& c) {
    const Field& ext = c.field();
    Mat g = c.generator();
    Mat out(ext, g.rows(), g.cols());
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) {
            uint32_t s = 0;
            for (int k = 0; k < g.cols(); ++k) {
                uint32_t bkj = w.b.code_at(k, j);  // subfield scalar embeds as a constant coefficient vector
                if (bkj) s = ext.add(s, ext.mul(g.code_at(i, k), bkj));
            }
            out.set_code(i, j, ext.mul(w.alpha, s));
        }
    return VectorCode::from_generators(ext, c.n(), out);
}

/// Exhaustive equivalence test over all maps v -> alpha v B. First witness
/// in scan order (alpha ascending by element code, B lexicographic).
inline std::optional<VectorIsometryWitness> are_equivalent(const VectorCode& c, const VectorCode& d,
                                                           long long budget = kDefaultBudget) {
    detail::require(c.field() == d.field() && c.n() == d.n(), "are_equivalent: ambient mismatch");
    if (c.dim() != d.dim()) return std::nullopt;
    if (c.weight_distribution(budget) != d.weight_distribution(budget)) return std::nullopt;
    const Field& ext = c.field();
    Field base = ext.prime_subfield();
    long long count = detail::checked_mul(static_cast<long long>(ext.order() - 1),
                                          gl_order(static_cast<long long>(base.order()), c.n()));
    detail::check_budget(count, budget, "are_equivalent (vector)");
    auto bs = enumerate_gl(base, c.n(), budget);
    for (uint32_t alpha = 1; alpha < ext.order(); ++alpha)
        for (const Mat& b : bs) {
            VectorIsometryWitness w{alpha, b};
            if (apply_isometry(w, c) == d) return w;
        }
    return std::nullopt;
}

}  // namespace rml

#endif
