#ifndef RML_LINALG_HPP
#define RML_LINALG_HPP

#include <optional>
#include <random>
#include <vector>

#include "fields.hpp"

namespace rml {

/// Dense matrix over a runtime field. Entries are stored as element codes,
/// row-major. Zero-row matrices are allowed (canonical generators of the
/// zero subspace); the column count is always >= 1.
class Mat {
   public:
    Mat(Field f, int rows, int cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {
        detail::require(rows >= 0 && cols >= 1, "Mat: need rows >= 0, cols >= 1");
    }
    static Mat identity(const Field& f, int n) {
        Mat m(f, n, n);
        for (int i = 0; i < n; ++i) m.set_code(i, i, 1);
        return m;
    }
    static Mat from_codes(Field f, int rows, int cols, std::vector<uint32_t> codes) {
        detail::require(static_cast<size_t>(rows) * cols == codes.size(), "Mat::from_codes: size mismatch");
        Mat m(std::move(f), rows, cols);
        m.a_ = std::move(codes);
        for (uint32_t c : m.a_) detail::require(c < m.f_.order(), "Mat::from_codes: code out of range");
        return m;
    }

    const Field& field() const { return f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    uint32_t code_at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    void set_code(int i, int j, uint32_t c) { a_[static_cast<size_t>(i) * cols_ + j] = c; }
    FieldElement at(int i, int j) const { return FieldElement(f_, code_at(i, j)); }
    void set(int i, int j, const FieldElement& e) {
        detail::require(e.field() == f_, "Mat::set: field mismatch");
        set_code(i, j, e.code());
    }

    const std::vector<uint32_t>& flat() const { return a_; }
    std::vector<uint32_t> row_codes(int i) const {
        return {a_.begin() + static_cast<size_t>(i) * cols_, a_.begin() + static_cast<size_t>(i + 1) * cols_};
    }

    bool is_zero() const {
        for (uint32_t c : a_)
            if (c) return false;
        return true;
    }

    Mat operator+(const Mat& o) const {
        same_shape(o);
        Mat r(f_, rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.add(a_[i], o.a_[i]);
        return r;
    }
    Mat operator-(const Mat& o) const {
        same_shape(o);
        Mat r(f_, rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.sub(a_[i], o.a_[i]);
        return r;
    }
    Mat operator*(const Mat& o) const {
        detail::require(f_ == o.f_, "Mat::*: field mismatch");
        detail::require(cols_ == o.rows_, "Mat::*: inner dimension mismatch");
        Mat r(f_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                uint32_t aik = code_at(i, k);
                if (!aik) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    uint32_t v = o.code_at(k, j);
                    if (v) r.set_code(i, j, f_.add(r.code_at(i, j), f_.mul(aik, v)));
                }
            }
        return r;
    }
    Mat scaled(uint32_t c) const {
        Mat r(f_, rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.mul(a_[i], c);
        return r;
    }
    Mat transposed() const {
        detail::require(rows_ >= 1, "Mat::transposed: empty matrix");
        Mat t(f_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.set_code(j, i, code_at(i, j));
        return t;
    }
    /// Rows [0, rows) stacked on top of o's rows.
    Mat stacked(const Mat& o) const {
        detail::require(f_ == o.f_ && cols_ == o.cols_, "Mat::stacked: shape mismatch");
        Mat r(f_, rows_ + o.rows_, cols_);
        std::copy(o.a_.begin(), o.a_.end(), std::copy(a_.begin(), a_.end(), r.a_.begin()));
        return r;
    }

    bool operator==(const Mat& o) const { return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

   private:
    void same_shape(const Mat& o) const {
        detail::require(f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_, "Mat: shape or field mismatch");
    }
    Field f_;
    int rows_, cols_;
    std::vector<uint32_t> a_;
};

struct RrefResult {
    Mat mat;
    std::vector<int> pivots;  // strictly increasing pivot columns, one per nonzero row
};

/// Reduced row-echelon form by Gauss-Jordan elimination. Zero rows are kept
/// (trailing); pivots[] lists the pivot column of each leading row.
inline RrefResult rref(Mat m) {
    const Field& f = m.field();
    int rank = 0;
    std::vector<int> pivots;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int piv = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (m.code_at(r, col)) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < m.cols(); ++j) {
                uint32_t t = m.code_at(rank, j);
                m.set_code(rank, j, m.code_at(piv, j));
                m.set_code(piv, j, t);
            }
        uint32_t inv = f.inv(m.code_at(rank, col));
        for (int j = 0; j < m.cols(); ++j) m.set_code(rank, j, f.mul(m.code_at(rank, j), inv));
        for (int r = 0; r < m.rows(); ++r) {
            if (r == rank) continue;
            uint32_t c = m.code_at(r, col);
            if (!c) continue;
            for (int j = 0; j < m.cols(); ++j)
                m.set_code(r, j, f.sub(m.code_at(r, j), f.mul(c, m.code_at(rank, j))));
        }
        pivots.push_back(col);
        ++rank;
    }
    return {std::move(m), std::move(pivots)};
}

inline int rank(const Mat& m) { return static_cast<int>(rref(m).pivots.size()); }

/// RREF basis of the right kernel {x : M x^T = 0}, one solution per row.
inline Mat nullspace(const Mat& m) {
    auto r = rref(m);
    int n = m.cols();
    int k = static_cast<int>(r.pivots.size());
    std::vector<int> free_cols;
    {
        std::vector<bool> is_pivot(n, false);
        for (int p : r.pivots) is_pivot[p] = true;
        for (int j = 0; j < n; ++j)
            if (!is_pivot[j]) free_cols.push_back(j);
    }
    const Field& f = m.field();
    Mat basis(f, static_cast<int>(free_cols.size()), n);
    for (size_t b = 0; b < free_cols.size(); ++b) {
        int fc = free_cols[b];
        basis.set_code(static_cast<int>(b), fc, 1);
        for (int i = 0; i < k; ++i) basis.set_code(static_cast<int>(b), r.pivots[i], f.neg(r.mat.code_at(i, fc)));
    }
    return rref(std::move(basis)).mat;  // canonical form (already independent, but normalize ordering)
}

inline Mat inverse(const Mat& m) {
    detail::require(m.rows() == m.cols() && m.rows() >= 1, "inverse: square matrix required");
    int n = m.rows();
    const Field& f = m.field();
    Mat aug(f, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.set_code(i, j, m.code_at(i, j));
        aug.set_code(i, n + i, 1);
    }
    auto r = rref(std::move(aug));
    for (int i = 0; i < n; ++i)
        detail::require(i < static_cast<int>(r.pivots.size()) && r.pivots[i] == i, "inverse: matrix is singular");
    Mat out(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.set_code(i, j, r.mat.code_at(i, n + j));
    return out;
}

/// A subspace of F_q^l in canonical form: the generator matrix is the unique
/// reduced row-echelon basis with no zero rows, so equality of subspaces is
/// equality of generators. The total order (ambient, dim, flattened codes)
/// fixes enumeration order and witness tie-breaks everywhere downstream.
class Subspace {
   public:
    static Subspace zero(const Field& f, int ambient) { return Subspace(Mat(f, 0, ambient)); }
    static Subspace full(const Field& f, int ambient) { return Subspace(Mat::identity(f, ambient)); }
    static Subspace from_rows(const Mat& rows) {
        auto r = rref(rows);
        int k = static_cast<int>(r.pivots.size());
        Mat gen(rows.field(), k, rows.cols());
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < rows.cols(); ++j) gen.set_code(i, j, r.mat.code_at(i, j));
        return Subspace(std::move(gen));
    }

    const Field& field() const { return gen_.field(); }
    int ambient() const { return gen_.cols(); }
    int dim() const { return gen_.rows(); }
    const Mat& generator() const { return gen_; }

    bool contains_vector(const std::vector<uint32_t>& v) const {
        detail::require(static_cast<int>(v.size()) == ambient(), "contains_vector: length mismatch");
        const Field& f = field();
        std::vector<uint32_t> w = v;
        for (int i = 0; i < dim(); ++i) {
            int p = pivot_col(i);
            uint32_t c = w[p];
            if (!c) continue;
            for (int j = 0; j < ambient(); ++j) w[j] = f.sub(w[j], f.mul(c, gen_.code_at(i, j)));
        }
        for (uint32_t c : w)
            if (c) return false;
        return true;
    }
    bool contains(const Subspace& u) const {
        detail::require(compatible(u), "contains: ambient mismatch");
        for (int i = 0; i < u.dim(); ++i)
            if (!contains_vector(u.gen_.row_codes(i))) return false;
        return true;
    }

    friend Subspace sum(const Subspace& a, const Subspace& b) {
        detail::require(a.compatible(b), "sum: ambient mismatch");
        if (a.dim() == 0) return b;
        if (b.dim() == 0) return a;
        return Subspace::from_rows(a.gen_.stacked(b.gen_));
    }
    /// Orthogonal complement for the standard (bilinear) dot product. Always
    /// dim U + dim U^perp = l; U and U^perp may intersect nontrivially.
    Subspace perp() const {
        if (dim() == 0) return full(field(), ambient());
        return Subspace(nullspace(gen_));
    }
    friend Subspace intersect(const Subspace& a, const Subspace& b) {
        detail::require(a.compatible(b), "intersect: ambient mismatch");
        return sum(a.perp(), b.perp()).perp();
    }

    bool operator==(const Subspace& o) const { return gen_ == o.gen_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    bool operator<(const Subspace& o) const {
        if (ambient() != o.ambient()) return ambient() < o.ambient();
        if (dim() != o.dim()) return dim() < o.dim();
        return gen_.flat() < o.gen_.flat();
    }

   private:
    explicit Subspace(Mat gen) : gen_(std::move(gen)) {}
    bool compatible(const Subspace& o) const { return field() == o.field() && ambient() == o.ambient(); }
    int pivot_col(int row) const {
        for (int j = 0; j < ambient(); ++j)
            if (gen_.code_at(row, j)) return j;
        return ambient();
    }
    Mat gen_;
};

/// Span of the rows, respectively columns, of a matrix.
inline Subspace row_space(const Mat& m) { return Subspace::from_rows(m); }
inline Subspace column_space(const Mat& m) { return Subspace::from_rows(m.transposed()); }

/// Gaussian coefficient: the number of b-dimensional subspaces of F_q^a.
/// Three-branch definition; 0 when a < 0, b < 0 or b > a, 1 when b = 0, a >= 0.
inline long long gaussian_binomial(long long a, long long b, long long q) {
    detail::require(q >= 2, "gaussian_binomial: q >= 2 required");
    if (a < 0 || b < 0 || b > a) return 0;
    if (b == 0) return 1;
    unsigned __int128 r = 1;
    for (long long i = 0; i < b; ++i) {
        // r is [a, i]_q here; multiply by (q^(a-i) - 1) / (q^(i+1) - 1), which
        // stays integral at every step.
        unsigned __int128 num = 1;
        for (long long t = 0; t < a - i; ++t) num *= q;
        unsigned __int128 den = 1;
        for (long long t = 0; t < i + 1; ++t) den *= q;
        r *= num - 1;
        if (r % (den - 1) != 0) throw std::logic_error("gaussian_binomial: non-integral step (internal)");
        r /= den - 1;
        if (r > (static_cast<unsigned __int128>(1) << 62)) throw std::overflow_error("gaussian_binomial: overflow");
    }
    return static_cast<long long>(r);
}

inline long long gl_order(long long q, int n) {
    unsigned __int128 r = 1;
    unsigned __int128 qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    unsigned __int128 qi = 1;
    for (int i = 0; i < n; ++i) {
        r *= qn - qi;
        qi *= q;
        if (r > (static_cast<unsigned __int128>(1) << 62)) throw std::overflow_error("gl_order: overflow");
    }
    return static_cast<long long>(r);
}

/// All k-dimensional subspaces of F_q^ambient, each exactly once, sorted by
/// canonical generator (lexicographic on the flattened code vector).
inline std::vector<Subspace> enumerate_subspaces(const Field& f, int ambient, int k,
                                                 long long budget = kDefaultBudget) {
    detail::require(ambient >= 1 && k >= 0 && k <= ambient, "enumerate_subspaces: need 0 <= k <= ambient");
    long long count = gaussian_binomial(ambient, k, static_cast<long long>(f.order()));
    detail::check_budget(count, budget, "enumerate_subspaces");
    std::vector<Subspace> out;
    out.reserve(static_cast<size_t>(count));
    if (k == 0) {
        out.push_back(Subspace::zero(f, ambient));
        return out;
    }
    std::vector<int> pivots(k);
    for (int i = 0; i < k; ++i) pivots[i] = i;
    auto emit_for_pivots = [&]() {
        std::vector<bool> is_pivot(ambient, false);
        for (int p : pivots) is_pivot[p] = true;
        std::vector<std::pair<int, int>> free_pos;  // (row, col)
        for (int i = 0; i < k; ++i)
            for (int j = pivots[i] + 1; j < ambient; ++j)
                if (!is_pivot[j]) free_pos.emplace_back(i, j);
        uint64_t q = f.order();
        uint64_t total = 1;
        for (size_t t = 0; t < free_pos.size(); ++t) total *= q;
        for (uint64_t code = 0; code < total; ++code) {
            Mat gen(f, k, ambient);
            for (int i = 0; i < k; ++i) gen.set_code(i, pivots[i], 1);
            uint64_t c = code;
            for (auto [i, j] : free_pos) {
                gen.set_code(i, j, static_cast<uint32_t>(c % q));
                c /= q;
            }
            out.push_back(Subspace::from_rows(gen));
        }
    };
    // iterate pivot-column combinations
    while (true) {
        emit_for_pivots();
        int i = k - 1;
        while (i >= 0 && pivots[i] == ambient - k + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    std::sort(out.begin(), out.end(),
              [](const Subspace& a, const Subspace& b) { return a.generator().flat() < b.generator().flat(); });
    detail::require(static_cast<long long>(out.size()) == count, "enumerate_subspaces: count mismatch (internal)");
    return out;
}

/// All subspaces of F_q^ambient, dimension ascending, lexicographic within
/// each dimension.
inline std::vector<Subspace> enumerate_all_subspaces(const Field& f, int ambient,
                                                     long long budget = kDefaultBudget) {
    long long total = 0;
    for (int k = 0; k <= ambient; ++k) total += gaussian_binomial(ambient, k, static_cast<long long>(f.order()));
    detail::check_budget(total, budget, "enumerate_all_subspaces");
    std::vector<Subspace> out;
    out.reserve(static_cast<size_t>(total));
    for (int k = 0; k <= ambient; ++k) {
        auto part = enumerate_subspaces(f, ambient, k, budget);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

/// All invertible n x n matrices over f, in lexicographic order of the
/// flattened code vector.
inline std::vector<Mat> enumerate_gl(const Field& f, int n, long long budget = kDefaultBudget) {
    detail::require(n >= 1, "enumerate_gl: n >= 1");
    long long count = gl_order(static_cast<long long>(f.order()), n);
    detail::check_budget(count, budget, "enumerate_gl");
    // The full odometer visits q^(n^2) candidates; keep that within a small
    // multiple of the group order so the guard stays meaningful.
    long long candidates = detail::checked_pow(static_cast<long long>(f.order()), static_cast<long long>(n) * n);
    detail::check_budget(candidates / 64 + 1, budget, "enumerate_gl (candidate space)");
    std::vector<Mat> out;
    out.reserve(static_cast<size_t>(count));
    std::vector<uint32_t> codes(static_cast<size_t>(n) * n, 0);
    uint64_t q = f.order();
    while (true) {
        Mat m = Mat::from_codes(f, n, n, codes);
        if (rank(m) == n) out.push_back(std::move(m));
        int i = static_cast<int>(codes.size()) - 1;
        while (i >= 0 && codes[i] == q - 1) { codes[i] = 0; --i; }
        if (i < 0) break;
        ++codes[i];
    }
    detail::require(static_cast<long long>(out.size()) == count, "enumerate_gl: count mismatch (internal)");
    return out;
}

inline Mat random_gl(const Field& f, int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<uint64_t> d(0, f.order() - 1);
    while (true) {
        Mat m(f, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.set_code(i, j, static_cast<uint32_t>(d(rng)));
        if (rank(m) == n) return m;  // acceptance probability is at least 1/4 over any field
    }
}

inline Subspace random_subspace(const Field& f, int ambient, int dim, std::mt19937_64& rng) {
    detail::require(dim >= 0 && dim <= ambient, "random_subspace: 0 <= dim <= ambient");
    while (true) {
        Mat m(f, dim, ambient);
        std::uniform_int_distribution<uint64_t> d(0, f.order() - 1);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < ambient; ++j) m.set_code(i, j, static_cast<uint32_t>(d(rng)));
        Subspace s = Subspace::from_rows(m);
        if (s.dim() == dim) return s;  // resample until full rank; fast for desk sizes
    }
}

}  // namespace rml

#endif
