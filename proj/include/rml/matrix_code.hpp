#ifndef RML_MATRIX_CODE_HPP
#define RML_MATRIX_CODE_HPP

#include <optional>

#include "linalg.hpp"

namespace rml {

/// A linear rank-metric code: a subspace of the n x m matrices over F_q,
/// stored as the canonical (RREF) basis of its row-major vectorization in
/// F_q^(n*m). Equality of codes is equality of canonical generators.
class MatrixCode {
   public:
    static MatrixCode from_generators(const Field& f, int n, int m, const std::vector<Mat>& gens) {
        detail::require(n >= 1 && m >= 1, "MatrixCode: need n, m >= 1");
        Mat rows(f, static_cast<int>(gens.size()), n * m);
        for (size_t t = 0; t < gens.size(); ++t) {
            detail::require(gens[t].field() == f && gens[t].rows() == n && gens[t].cols() == m,
                            "MatrixCode: generator shape or field mismatch");
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < m; ++j) rows.set_code(static_cast<int>(t), i * m + j, gens[t].code_at(i, j));
        }
        return MatrixCode(n, m, Subspace::from_rows(rows));
    }
    static MatrixCode from_vectorized(int n, int m, const Subspace& s) {
        detail::require(s.ambient() == n * m, "MatrixCode: ambient mismatch");
        return MatrixCode(n, m, s);
    }
    static MatrixCode zero(const Field& f, int n, int m) { return MatrixCode(n, m, Subspace::zero(f, n * m)); }
    static MatrixCode full(const Field& f, int n, int m) { return MatrixCode(n, m, Subspace::full(f, n * m)); }

    /// Matrices supported on <e_1, ..., e_k>: zero outside the first k rows
    /// (n <= m) or the first k columns (n > m). With transposed = true
    /// (square case only) the roles of rows and columns are swapped.
    static MatrixCode standard_anticode(const Field& f, int n, int m, int k, bool transposed = false) {
        detail::require(k >= 0 && k <= std::min(n, m), "standard_anticode: need 0 <= k <= min(n,m)");
        detail::require(!transposed || n == m, "standard_anticode: transposed variant requires n == m");
        bool rows_form = (n <= m) != transposed;  // which index range is restricted to k
        std::vector<Mat> gens;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) {
                if (rows_form ? i >= k : j >= k) continue;
                Mat e(f, n, m);
                e.set_code(i, j, 1);
                gens.push_back(std::move(e));
            }
        return from_generators(f, n, m, gens);
    }

    const Field& field() const { return space_.field(); }
    int n() const { return n_; }
    int m() const { return m_; }
    int min_mn() const { return std::min(n_, m_); }
    int max_mn() const { return std::max(n_, m_); }
    int dim() const { return space_.dim(); }
    const Subspace& vectorized() const { return space_; }

    long long size() const { return detail::checked_pow(static_cast<long long>(field().order()), dim()); }

    Mat basis_matrix(int t) const {
        Mat m(field(), n_, m_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < m_; ++j) m.set_code(i, j, space_.generator().code_at(t, i * m_ + j));
        return m;
    }
    std::vector<Mat> basis() const {
        std::vector<Mat> b;
        for (int t = 0; t < dim(); ++t) b.push_back(basis_matrix(t));
        return b;
    }

    bool contains(const Mat& m) const {
        detail::require(m.field() == field() && m.rows() == n_ && m.cols() == m_, "contains: shape mismatch");
        return space_.contains_vector(m.flat());
    }
    bool is_subcode_of(const MatrixCode& c) const {
        detail::require(same_space(c), "is_subcode_of: ambient mismatch");
        return c.space_.contains(space_);
    }

    MatrixCode transposed() const {
        std::vector<Mat> gens;
        for (int t = 0; t < dim(); ++t) gens.push_back(basis_matrix(t).transposed());
        return from_generators(field(), m_, n_, gens);
    }

    /// Dual for the trace inner product <M, N> = tr(M N^T); on vectorizations
    /// this is the standard dot product, so the dual is the perp subspace.
    MatrixCode dual() const { return MatrixCode(n_, m_, space_.perp()); }

    template <class Fn>
    void for_each_codeword(Fn&& fn, long long budget = kDefaultBudget) const {
        detail::check_budget(size(), budget, "for_each_codeword");
        Mat acc(field(), n_, m_);
        walk(0, acc, fn);
    }

    /// A_i = #codewords of rank i, i = 0..min(n,m). Sum is q^dim.
    std::vector<long long> weight_distribution(long long budget = kDefaultBudget) const {
        std::vector<long long> a(min_mn() + 1, 0);
        for_each_codeword([&](const Mat& m) { ++a[rank(m)]; }, budget);
        return a;
    }

    /// Minimum rank of a nonzero codeword; min(n,m) + 1 for the zero code.
    int min_distance(long long budget = kDefaultBudget) const {
        if (dim() == 0) return min_mn() + 1;
        int best = min_mn() + 1;
        for_each_codeword(
            [&](const Mat& m) {
                if (m.is_zero()) return;
                best = std::min(best, rank(m));
            },
            budget);
        return best;
    }

    int max_rank(long long budget = kDefaultBudget) const {
        int best = 0;
        for_each_codeword([&](const Mat& m) { best = std::max(best, rank(m)); }, budget);
        return best;
    }

    /// Support of a matrix: column space when it has at least as many
    /// columns as rows, row space otherwise; a subspace of F_q^min(n,m).
    static Subspace support_of(const Mat& m) {
        return m.rows() <= m.cols() ? Subspace::from_rows(m.transposed()) : Subspace::from_rows(m);
    }
    /// Support of the code: the sum of codeword supports. Since supports of
    /// sums lie in sums of supports, the basis matrices suffice.
    Subspace support() const {
        Subspace s = Subspace::zero(field(), min_mn());
        for (int t = 0; t < dim(); ++t) s = sum(s, support_of(basis_matrix(t)));
        return s;
    }

    /// The subcode supported on V: all codewords with support contained in V.
    /// Computed exactly by linear algebra (no codeword enumeration).
    MatrixCode shortened(const Subspace& v) const {
        detail::require(v.field() == field() && v.ambient() == min_mn(), "shortened: V must sit in F_q^min(n,m)");
        return constrained(v, n_ <= m_);
    }

    /// The subcode {M in C : colsp(M) <= V} for V <= F_q^n, independent of
    /// the shape convention. This is the support constraint used by the
    /// column-space flavor of generalized weights.
    MatrixCode colsp_shortened(const Subspace& v) const {
        detail::require(v.field() == field() && v.ambient() == n_, "colsp_shortened: V must sit in F_q^n");
        return constrained(v, true);
    }

    struct Classification {
        bool is_mrd = false;
        bool is_optimal_anticode = false;
        bool is_dually_quasi_mrd = false;
    };
    /// Flags from the Singleton bound (dim = max(n,m)(min(n,m) - d + 1)),
    /// the anticode bound (dim = max(n,m) * maxrank), and the dual-distance
    /// sum d(C) + d(C_dual) = min(n,m) + 1.
    Classification classify(long long budget = kDefaultBudget) const {
        Classification c;
        int d = min_distance(budget);
        c.is_mrd = dim() == max_mn() * (min_mn() - d + 1);
        c.is_optimal_anticode = dim() == max_mn() * max_rank(budget);
        c.is_dually_quasi_mrd = d + dual().min_distance(budget) == min_mn() + 1;
        return c;
    }

    bool operator==(const MatrixCode& o) const { return n_ == o.n_ && m_ == o.m_ && space_ == o.space_; }
    bool operator!=(const MatrixCode& o) const { return !(*this == o); }

   private:
    MatrixCode(int n, int m, Subspace s) : n_(n), m_(m), space_(std::move(s)) {}
    bool same_space(const MatrixCode& o) const { return field() == o.field() && n_ == o.n_ && m_ == o.m_; }

    template <class Fn>
    void walk(int t, Mat& acc, Fn& fn) const {
        if (t == dim()) {
            fn(static_cast<const Mat&>(acc));
            return;
        }
        uint64_t q = field().order();
        Mat b = basis_matrix(t);
        for (uint64_t c = 0; c < q; ++c) {
            Mat cur = c == 0 ? acc : acc + b.scaled(static_cast<uint32_t>(c));
            walk(t + 1, cur, fn);
        }
    }

    // {M in C : H M = 0} with H spanning V^perp (column constraint), or
    // {M in C : M H^T = 0} (row constraint).
    MatrixCode constrained(const Subspace& v, bool column_constraint) const {
        if (dim() == 0) return *this;
        Mat h = v.perp().generator();
        if (h.rows() == 0) return *this;  // V is the whole space
        const Field& f = field();
        int cols = column_constraint ? h.rows() * m_ : n_ * h.rows();
        Mat s(f, dim(), cols);
        for (int t = 0; t < dim(); ++t) {
            Mat b = basis_matrix(t);
            Mat c = column_constraint ? h * b : b * h.transposed();
            for (int i = 0; i < c.rows(); ++i)
                for (int j = 0; j < c.cols(); ++j) s.set_code(t, i * c.cols() + j, c.code_at(i, j));
        }
        Mat coeffs = nullspace(s.transposed());  // rows c with c * s = 0
        std::vector<Mat> gens;
        for (int r = 0; r < coeffs.rows(); ++r) {
            Mat g(f, n_, m_);
            for (int t = 0; t < dim(); ++t) {
                uint32_t c = coeffs.code_at(r, t);
                if (c) g = g + basis_matrix(t).scaled(c);
            }
            gens.push_back(std::move(g));
        }
        return from_generators(f, n_, m_, gens);
    }

    int n_, m_;
    Subspace space_;
};

/// Witness for code equivalence: M -> A M B, or M -> A M^T B when
/// transposed is set (square case).
struct IsometryWitness {
    Mat a;
    Mat b;
    bool transposed = false;
};

inline MatrixCode apply_isometry(const IsometryWitness& w, const MatrixCode& c) {
    const MatrixCode src = w.transposed ? c.transposed() : c;
    std::vector<Mat> gens;
    for (int t = 0; t < src.dim(); ++t) gens.push_back(w.a * src.basis_matrix(t) * w.b);
    return MatrixCode::from_generators(c.field(), c.n(), c.m(), gens);
}

/// Exhaustive equivalence test over the full isometry group of the ambient
/// matrix space. Returns the first witness in scan order (plain maps before
/// transposed ones, A then B in lexicographic order), or nullopt for
/// definitive non-equivalence.
inline std::optional<IsometryWitness> are_equivalent(const MatrixCode& c, const MatrixCode& d,
                                                     long long budget = kDefaultBudget) {
    detail::require(c.field() == d.field() && c.n() == d.n() && c.m() == d.m(),
                    "are_equivalent: codes live in different ambient spaces");
    if (c.dim() != d.dim()) return std::nullopt;
    if (c.weight_distribution(budget) != d.weight_distribution(budget)) return std::nullopt;
    long long pairs = detail::checked_mul(gl_order(static_cast<long long>(c.field().order()), c.n()),
                                          gl_order(static_cast<long long>(c.field().order()), c.m()));
    detail::check_budget(pairs, budget, "are_equivalent");
    auto as = enumerate_gl(c.field(), c.n(), budget);
    auto bs = enumerate_gl(c.field(), c.m(), budget);
    int families = c.n() == c.m() ? 2 : 1;
    for (int fam = 0; fam < families; ++fam) {
        const MatrixCode src = fam ? c.transposed() : c;
        std::vector<Mat> basis = src.basis();
        for (const Mat& a : as) {
            std::vector<Mat> left;
            left.reserve(basis.size());
            for (const Mat& b0 : basis) left.push_back(a * b0);
            for (const Mat& b : bs) {
                std::vector<Mat> gens;
                gens.reserve(left.size());
                for (const Mat& l : left) gens.push_back(l * b);
                if (MatrixCode::from_generators(c.field(), c.n(), c.m(), gens) == d)
                    return IsometryWitness{a, b, fam == 1};
            }
        }
    }
    return std::nullopt;
}

/// Given a linear map f on C (as images of the canonical basis), decide
/// whether some isometry of the whole matrix space restricts to f on C.
/// Throws if f is not a rank-preserving map on C.
inline std::optional<IsometryWitness> extension_exists(const MatrixCode& c, const std::vector<Mat>& images,
                                                       long long budget = kDefaultBudget) {
    detail::require(static_cast<int>(images.size()) == c.dim(), "extension_exists: need one image per basis element");
    for (const Mat& im : images)
        detail::require(im.field() == c.field() && im.rows() == c.n() && im.cols() == c.m(),
                        "extension_exists: image shape mismatch");
    // f must be an isometry on C: rank-preserving on every codeword.
    {
        detail::check_budget(c.size(), budget, "extension_exists (isometry check)");
        std::vector<Mat> basis = c.basis();
        uint64_t q = c.field().order();
        Mat acc(c.field(), c.n(), c.m());
        Mat img(c.field(), c.n(), c.m());
        std::function<void(size_t, Mat&, Mat&)> walk = [&](size_t t, Mat& x, Mat& y) {
            if (t == basis.size()) {
                detail::require(rank(x) == rank(y), "extension_exists: the given map is not an isometry on C");
                return;
            }
            for (uint64_t k = 0; k < q; ++k) {
                Mat cx = k == 0 ? x : x + basis[t].scaled(static_cast<uint32_t>(k));
                Mat cy = k == 0 ? y : y + images[t].scaled(static_cast<uint32_t>(k));
                walk(t + 1, cx, cy);
            }
        };
        walk(0, acc, img);
    }
    long long pairs = detail::checked_mul(gl_order(static_cast<long long>(c.field().order()), c.n()),
                                          gl_order(static_cast<long long>(c.field().order()), c.m()));
    detail::check_budget(pairs, budget, "extension_exists");
    auto as = enumerate_gl(c.field(), c.n(), budget);
    auto bs = enumerate_gl(c.field(), c.m(), budget);
    int families = c.n() == c.m() ? 2 : 1;
    std::vector<Mat> basis = c.basis();
    for (int fam = 0; fam < families; ++fam) {
        for (const Mat& a : as) {
            std::vector<Mat> left;
            for (const Mat& b0 : basis) left.push_back(fam ? a * b0.transposed() : a * b0);
            for (const Mat& b : bs) {
                bool ok = true;
                for (size_t t = 0; t < left.size() && ok; ++t) ok = (left[t] * b == images[t]);
                if (ok) return IsometryWitness{a, b, fam == 1};
            }
        }
    }
    return std::nullopt;
}

}  // namespace rml

#endif
