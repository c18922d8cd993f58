#ifndef RML_GENWEIGHTS_HPP
#define RML_GENWEIGHTS_HPP

#include <set>
#include <sstream>

#include "vector_code.hpp"

namespace rml {

/// A weight hierarchy, 1-indexed: at(i) is the i-th generalized weight,
/// i = 1..dim. When witnesses are recorded, witness(i) is the
/// lexicographically first minimizing subspace in canonical enumeration
/// order.
class WeightProfile {
   public:
    WeightProfile() = default;
    WeightProfile(std::vector<int> values, std::vector<Subspace> witnesses = {})
        : values_(std::move(values)), witnesses_(std::move(witnesses)) {}

    int length() const { return static_cast<int>(values_.size()); }
    int at(int i) const {
        detail::require(i >= 1 && i <= length(), "WeightProfile: index " + std::to_string(i) + " out of range 1.." +
                                                     std::to_string(length()));
        return values_[i - 1];
    }
    const std::vector<int>& values() const { return values_; }
    bool has_witnesses() const { return !witnesses_.empty(); }
    const Subspace& witness(int i) const {
        detail::require(has_witnesses() && i >= 1 && i <= length(), "WeightProfile: no witness recorded");
        return witnesses_[i - 1];
    }
    bool operator==(const WeightProfile& o) const { return values_ == o.values_; }
    bool operator!=(const WeightProfile& o) const { return !(*this == o); }

   private:
    std::vector<int> values_;
    std::vector<Subspace> witnesses_;
};

namespace detail {

/// Shared minimization kernel: scan subspaces of F_q^ambient by increasing
/// dimension (lexicographic within a dimension) and record, for each target
/// i = 1..count, the first dimension k at which some subspace V achieves
/// score(V) >= i. Scores are monotone in i by construction, so the filled
/// prefix only grows.
template <class Score>
WeightProfile minimize_over_subspaces(const Field& f, int ambient, int count, Score&& score, long long budget) {
    std::vector<int> vals(count, -1);
    std::vector<Subspace> wits;
    wits.reserve(count);
    for (int i = 0; i < count; ++i) wits.push_back(Subspace::zero(f, ambient));
    int next = 1;  // smallest unresolved target
    for (int k = 0; k <= ambient && next <= count; ++k) {
        for (const Subspace& v : enumerate_subspaces(f, ambient, k, budget)) {
            int s = score(v);
            while (next <= count && s >= next) {
                vals[next - 1] = k;
                wits[next - 1] = v;
                ++next;
            }
            if (next > count) break;
        }
    }
    detail::require(next > count, "weight minimization: some target was never reached (internal)");
    return WeightProfile(std::move(vals), std::move(wits));
}

}  // namespace detail

/// Anticode-based generalized weights of a matrix code: the i-th weight is
/// the least dim(V) over subspaces V of F_q^min(n,m) whose shortening
/// captures an i-dimensional subcode; in the square case both the code and
/// its transpose may realize the capture. Equivalent to minimizing
/// dim(A)/max(n,m) over optimal anticodes A with dim(C and A) >= i.
inline WeightProfile generalized_weights(const MatrixCode& c, long long budget = kDefaultBudget) {
    std::optional<MatrixCode> ct;
    if (c.n() == c.m()) ct = c.transposed();
    return detail::minimize_over_subspaces(
        c.field(), c.min_mn(), c.dim(),
        [&](const Subspace& v) {
            int s = c.shortened(v).dim();
            if (ct) s = std::max(s, ct->shortened(v).dim());
            return s;
        },
        budget);
}

/// Column-space generalized weights (relative version): the i-th value is
/// the least dim(V), V <= F_q^n, with
/// dim(C and Mat_V^colsp) - dim(D and Mat_V^colsp) >= i. Not
/// equivalence-invariant; the transpose of a code may have a different
/// profile.
inline WeightProfile relative_generalized_matrix_weights(const MatrixCode& c, const MatrixCode& d,
                                                         long long budget = kDefaultBudget) {
    detail::require(d.field() == c.field() && d.n() == c.n() && d.m() == c.m(),
                    "relative weights: subcode lives in a different ambient space");
    detail::require(d.is_subcode_of(c) && d.dim() < c.dim(), "relative weights: D must be a proper subcode of C");
    return detail::minimize_over_subspaces(
        c.field(), c.n(), c.dim() - d.dim(),
        [&](const Subspace& v) { return c.colsp_shortened(v).dim() - d.colsp_shortened(v).dim(); }, budget);
}

inline WeightProfile generalized_matrix_weights(const MatrixCode& c, long long budget = kDefaultBudget) {
    return detail::minimize_over_subspaces(
        c.field(), c.n(), c.dim(), [&](const Subspace& v) { return c.colsp_shortened(v).dim(); }, budget);
}

/// The four definitions of generalized weights for vector codes. They agree
/// whenever each applies; keeping them as separate computation routes lets
/// the suites cross-check one against another.
enum class VectorWeightDefinition {
    max_support,            // min over i-dim subcodes D of the largest support dim of a word of D; needs n <= m
    closure_max_support,    // same, with words drawn from the Frobenius closure of D
    subcode_support,        // min over i-dim subcodes D of dim supp(D)
    anticode_intersection,  // min dim of an optimal vector anticode meeting C in dim >= i; needs dim C <= m
};

namespace detail {

// Subcodes of dimension i over the extension field, as vector codes.
inline std::vector<VectorCode> subcodes_of_dim(const VectorCode& c, int i, long long budget) {
    std::vector<VectorCode> out;
    for (const Subspace& s : enumerate_subspaces(c.field(), std::max(c.dim(), 1), i, budget)) {
        if (c.dim() == 0) break;
        Mat rows = s.generator() * c.generator();
        out.push_back(VectorCode::from_generators(c.field(), c.n(), rows));
    }
    if (c.dim() == 0 && i == 0) out.push_back(c);
    return out;
}

inline int max_support_dim_over_words(const VectorCode& d, long long budget) {
    int best = 0;
    d.for_each_codeword(
        [&](const std::vector<uint32_t>& v) {
            if (std::all_of(v.begin(), v.end(), [](uint32_t x) { return x == 0; })) return;
            best = std::max(best, VectorCode::vector_support(d.field(), v).dim());
        },
        budget);
    return best;
}

/// dim over GF(q^m) of the intersection of two codes in the same ambient.
inline int intersection_dim(const VectorCode& a, const VectorCode& b) {
    if (a.dim() == 0 || b.dim() == 0) return 0;
    int sum_dim = rank(a.generator().stacked(b.generator()));
    return a.dim() + b.dim() - sum_dim;
}

/// The scalar extension of W <= F_q^n to a Frobenius-fixed subspace of
/// GF(q^m)^n. Optimal vector anticodes are exactly these spans (of dimension
/// at most m).
inline VectorCode scalar_extension(const Field& ext, const Subspace& w) {
    Mat g(ext, w.dim(), w.ambient());
    for (int i = 0; i < w.dim(); ++i)
        for (int j = 0; j < w.ambient(); ++j) g.set_code(i, j, w.generator().code_at(i, j));
    return VectorCode::from_generators(ext, w.ambient(), g);
}

}  // namespace detail

inline WeightProfile generalized_vector_weights(const VectorCode& c, VectorWeightDefinition def,
                                                long long budget = kDefaultBudget) {
    const Field& ext = c.field();
    int m = ext.degree();
    switch (def) {
        case VectorWeightDefinition::max_support:
            detail::require(c.n() <= m, "max_support definition applies only for n <= m");
            break;
        case VectorWeightDefinition::anticode_intersection:
            detail::require(c.dim() <= m, "anticode_intersection definition applies only for dim(C) <= m");
            break;
        default:
            break;
    }
    if (def == VectorWeightDefinition::anticode_intersection) {
        // Anticodes are scalar extensions of subspaces W <= F_q^n, dim W <= m.
        Field base = ext.prime_subfield();
        std::vector<int> vals(c.dim(), -1);
        std::vector<Subspace> wits(c.dim(), Subspace::zero(base, c.n()));
        int next = 1;
        int kmax = std::min(c.n(), m);
        for (int k = 0; k <= kmax && next <= c.dim(); ++k) {
            for (const Subspace& w : enumerate_subspaces(base, c.n(), k, budget)) {
                int s = detail::intersection_dim(c, detail::scalar_extension(ext, w));
                while (next <= c.dim() && s >= next) {
                    vals[next - 1] = k;
                    wits[next - 1] = w;
                    ++next;
                }
                if (next > c.dim()) break;
            }
        }
        detail::require(next > c.dim(), "generalized_vector_weights: anticode search failed (internal)");
        return WeightProfile(std::move(vals), std::move(wits));
    }
    std::vector<int> vals;
    for (int i = 1; i <= c.dim(); ++i) {
        int best = c.n() + 1;
        for (const VectorCode& d : detail::subcodes_of_dim(c, i, budget)) {
            int s;
            switch (def) {
                case VectorWeightDefinition::max_support:
                    s = detail::max_support_dim_over_words(d, budget);
                    break;
                case VectorWeightDefinition::closure_max_support:
                    s = detail::max_support_dim_over_words(d.frobenius_closure(), budget);
                    break;
                default:
                    s = d.support().dim();
                    break;
            }
            best = std::min(best, s);
        }
        vals.push_back(best);
    }
    return WeightProfile(std::move(vals));
}

/// Relative generalized weights: minimize dim supp(V) over Frobenius-fixed
/// subspaces V of GF(q^m)^n with dim(C and V) - dim(D and V) >= i. The
/// Frobenius-fixed subspaces are exactly the scalar extensions of subspaces
/// of F_q^n, and their support dimension equals their dimension.
inline WeightProfile relative_generalized_vector_weights(const VectorCode& c, const VectorCode& d,
                                                         long long budget = kDefaultBudget) {
    detail::require(d.field() == c.field() && d.n() == c.n(), "relative weights: ambient mismatch");
    detail::require(d.is_subcode_of(c) && d.dim() < c.dim(), "relative weights: D must be a proper subcode of C");
    const Field& ext = c.field();
    Field base = ext.prime_subfield();
    int count = c.dim() - d.dim();
    return detail::minimize_over_subspaces(
        base, c.n(), count,
        [&](const Subspace& w) {
            VectorCode v = detail::scalar_extension(ext, w);
            return detail::intersection_dim(c, v) - detail::intersection_dim(d, v);
        },
        budget);
}

enum class ExtremalFamily { mrd, optimal_anticode, dually_quasi_mrd };

/// Closed-form weight hierarchies of the three extremal families, from the
/// code parameters alone. For the first two the dimension must be divisible
/// by max(n,m) (with k = dim / max); a dually quasi-MRD dimension never is
/// (dim = k*max + r with 0 < r < max).
inline WeightProfile closed_form_generalized_weights(ExtremalFamily kind, int n, int m, int dim) {
    detail::require(n >= 1 && m >= 1 && dim >= 0 && dim <= n * m, "closed_form: invalid parameters");
    int mn = std::min(n, m);
    int mx = std::max(n, m);
    std::vector<int> vals(dim);
    switch (kind) {
        case ExtremalFamily::mrd: {
            detail::require(dim % mx == 0, "closed_form (mrd): dim must be a multiple of max(n,m)");
            int k = dim / mx;
            for (int i = 1; i <= dim; ++i) vals[i - 1] = mn - k + (i + mx - 1) / mx;
            break;
        }
        case ExtremalFamily::optimal_anticode: {
            detail::require(dim % mx == 0, "closed_form (anticode): dim must be a multiple of max(n,m)");
            for (int i = 1; i <= dim; ++i) vals[i - 1] = (i + mx - 1) / mx;
            break;
        }
        case ExtremalFamily::dually_quasi_mrd: {
            int r = dim % mx;
            int k = dim / mx;
            detail::require(r != 0, "closed_form (quasi-mrd): dim is never divisible by max(n,m)");
            for (int i = 1; i <= r; ++i) vals[i - 1] = mn - k;
            for (int t = 0; t <= k - 2; ++t)
                for (int i = r + 1 + t * mx; i <= r + (t + 1) * mx; ++i) vals[i - 1] = mn + 1 + t - k;
            if (k >= 1)
                for (int i = r + 1 + (k - 1) * mx; i <= dim; ++i) vals[i - 1] = mn;
            break;
        }
    }
    return WeightProfile(std::move(vals));
}

struct BridgeCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline std::string render_profile(const WeightProfile& p) {
    std::ostringstream os;
    os << "(";
    for (int i = 1; i <= p.length(); ++i) os << (i > 1 ? "," : "") << p.at(i);
    os << ")";
    return os.str();
}

}  // namespace detail

/// The shape-dependent identities between the anticode-based and the
/// column-space weight hierarchies of one matrix code.
inline std::vector<BridgeCheck> weight_bridges(const MatrixCode& c, long long budget = kDefaultBudget) {
    std::vector<BridgeCheck> out;
    WeightProfile d = generalized_weights(c, budget);
    WeightProfile delta = generalized_matrix_weights(c, budget);
    auto note = [&](const WeightProfile& a, const WeightProfile& b) {
        return detail::render_profile(a) + " vs " + detail::render_profile(b);
    };
    if (c.m() > c.n()) {
        bool ok = d == delta;
        out.push_back({"anticode weights equal column-space weights (m > n)", ok, note(d, delta)});
    } else if (c.m() < c.n()) {
        WeightProfile deltaT = generalized_matrix_weights(c.transposed(), budget);
        bool ok = d == deltaT;
        out.push_back({"anticode weights equal column-space weights of the transpose (m < n)", ok, note(d, deltaT)});
    } else {
        WeightProfile deltaT = generalized_matrix_weights(c.transposed(), budget);
        bool le = true, eq = true;
        for (int i = 1; i <= c.dim(); ++i) {
            le = le && d.at(i) <= delta.at(i);
            eq = eq && d.at(i) == std::min(delta.at(i), deltaT.at(i));
        }
        out.push_back({"anticode weights bounded by column-space weights (square)", le, note(d, delta)});
        out.push_back({"anticode weights equal the transpose-minimum of column-space weights (square)", eq,
                       note(d, delta) + " / transpose " + detail::render_profile(deltaT)});
    }
    return out;
}

/// For n <= m the vector weight hierarchy determines the expanded code's
/// hierarchy: w_i(C) = d_{m i - e}(expansion) for e = 0..m-1.
inline std::vector<BridgeCheck> weight_bridges(const VectorCode& c, const FieldBasis& basis,
                                               long long budget = kDefaultBudget) {
    std::vector<BridgeCheck> out;
    int m = c.field().degree();
    WeightProfile w = generalized_vector_weights(c, VectorWeightDefinition::subcode_support, budget);
    // cross-definition agreement wherever each definition applies
    {
        bool ok = true;
        std::string det;
        WeightProfile closure = generalized_vector_weights(c, VectorWeightDefinition::closure_max_support, budget);
        ok = ok && closure == w;
        if (c.n() <= m) ok = ok && generalized_vector_weights(c, VectorWeightDefinition::max_support, budget) == w;
        if (c.dim() <= m)
            ok = ok && generalized_vector_weights(c, VectorWeightDefinition::anticode_intersection, budget) == w;
        out.push_back({"all applicable vector-weight definitions agree", ok, detail::render_profile(w)});
    }
    if (c.n() <= m) {
        MatrixCode expanded = c.expanded(basis);
        WeightProfile d = generalized_weights(expanded, budget);
        bool ok = true;
        for (int i = 1; i <= c.dim() && ok; ++i)
            for (int e = 0; e <= m - 1 && ok; ++e) ok = w.at(i) == d.at(m * i - e);
        out.push_back({"vector weights equal expansion weights at indices m*i-e (n <= m)", ok,
                       detail::render_profile(w) + " vs " + detail::render_profile(d)});
    }
    return out;
}

/// Relative bridge, valid for every shape:
/// w_i(C, D) = delta_{m i - e}(expansion(C), expansion(D)).
inline std::vector<BridgeCheck> weight_bridges(const VectorCode& c, const VectorCode& d, const FieldBasis& basis,
                                               long long budget = kDefaultBudget) {
    std::vector<BridgeCheck> out;
    int m = c.field().degree();
    WeightProfile w = relative_generalized_vector_weights(c, d, budget);
    WeightProfile delta = relative_generalized_matrix_weights(c.expanded(basis), d.expanded(basis), budget);
    bool ok = true;
    for (int i = 1; i <= w.length() && ok; ++i)
        for (int e = 0; e <= m - 1 && ok; ++e) ok = w.at(i) == delta.at(m * i - e);
    out.push_back({"relative vector weights equal relative expansion weights at indices m*i-e", ok,
                   detail::render_profile(w) + " vs " + detail::render_profile(delta)});
    return out;
}

/// Wei-type duality between the weight hierarchies of a code and its dual.
/// With l = dim C and strides of max(n,m), the hierarchy values in each
/// index class i (mod max) of the dual complement the reflected values
/// min+1-d_s of the code in the shifted class i+l.
inline std::vector<BridgeCheck> wei_duality(const MatrixCode& c, long long budget = kDefaultBudget) {
    int mn = c.min_mn();
    int mx = c.max_mn();
    int ell = c.dim();
    MatrixCode dual = c.dual();
    WeightProfile dc = generalized_weights(c, budget);
    WeightProfile dd = generalized_weights(dual, budget);
    // Index classes are taken modulo max(n,m): the window 1 <= s <= dim does
    // the rest, and shifted classes with no representative give empty sets.
    auto cls = [&](const WeightProfile& p, int idx, bool reflect) {
        std::set<int> s;
        int r = ((idx % mx) + mx) % mx;
        for (int t = (r == 0 ? mx : r); t <= p.length(); t += mx) s.insert(reflect ? mn + 1 - p.at(t) : p.at(t));
        return s;
    };
    std::vector<BridgeCheck> out;
    for (int i = 1; i <= mx; ++i) {
        std::set<int> lhs = cls(dd, i, false);
        std::set<int> rhs;
        std::set<int> bar = cls(dc, i + ell, true);
        for (int v = 1; v <= mn; ++v)
            if (!bar.count(v)) rhs.insert(v);
        std::ostringstream os;
        os << "i=" << i << ": dual class {";
        for (int v : lhs) os << v << " ";
        os << "} complement {";
        for (int v : rhs) os << v << " ";
        os << "}";
        out.push_back({"wei duality at index " + std::to_string(i), lhs == rhs, os.str()});
    }
    return out;
}

}  // namespace rml

#endif
