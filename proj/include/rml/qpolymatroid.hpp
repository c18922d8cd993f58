#ifndef RML_QPOLYMATROID_HPP
#define RML_QPOLYMATROID_HPP

#include <boost/rational.hpp>
#include <map>
#include <sstream>

#include "matrix_code.hpp"

namespace rml {

using Rat = boost::rational<long long>;

/// A q-polymatroid on the ground space F_q^l: an exact rational rank value
/// for every subspace, stored as a complete table keyed by canonical
/// generator. Construction verifies the table is complete and, at desk
/// scale, checks the three axioms exhaustively over all subspace pairs:
///   (P1) 0 <= rho(V) <= dim V,
///   (P2) rho monotone under inclusion,
///   (P3) rho(U+V) + rho(U int V) <= rho(U) + rho(V).
class QPolymatroid {
   public:
    QPolymatroid(Field f, int ground, std::map<Subspace, Rat> table, long long budget = kDefaultBudget)
        : f_(std::move(f)), ground_(ground), table_(std::move(table)) {
        long long total = 0;
        for (int k = 0; k <= ground_; ++k)
            total += gaussian_binomial(ground_, k, static_cast<long long>(f_.order()));
        detail::check_budget(total, budget, "QPolymatroid");
        detail::require(static_cast<long long>(table_.size()) == total, "QPolymatroid: rank table is not complete");
        for (const auto& [v, r] : table_) {
            detail::require(v.field() == f_ && v.ambient() == ground_, "QPolymatroid: foreign subspace in table");
            detail::require(r >= 0 && r <= Rat(v.dim()), "QPolymatroid: (P1) fails at a subspace of dim " +
                                                             std::to_string(v.dim()));
        }
        // Exhaustive pair checks stay cheap only for the desk-scale tables
        // (at most a few hundred subspaces); (P1) is always checked above.
        if (total <= 300) {
            for (const auto& [u, ru] : table_)
                for (const auto& [v, rv] : table_) {
                    if (u.dim() <= v.dim() && v.contains(u))
                        detail::require(ru <= rv, "QPolymatroid: (P2) fails");
                    Rat lhs = rho(sum(u, v)) + rho(intersect(u, v));
                    detail::require(lhs <= ru + rv, "QPolymatroid: (P3) fails");
                }
        }
    }

    template <class Fn>
    static QPolymatroid from_rank_function(const Field& f, int ground, Fn&& rank_of,
                                           long long budget = kDefaultBudget) {
        std::map<Subspace, Rat> table;
        for (const Subspace& v : enumerate_all_subspaces(f, ground, budget)) table.emplace(v, rank_of(v));
        return QPolymatroid(f, ground, std::move(table), budget);
    }

    const Field& field() const { return f_; }
    int ground() const { return ground_; }
    const std::map<Subspace, Rat>& table() const { return table_; }

    Rat rho(const Subspace& v) const {
        auto it = table_.find(v);
        detail::require(it != table_.end(), "QPolymatroid: subspace not in table");
        return it->second;
    }
    /// rho of the full ground space.
    Rat rank() const { return rho(Subspace::full(f_, ground_)); }

    /// Dual rank function rho*(V) = dim V - rho(ground) + rho(V^perp).
    QPolymatroid dual() const {
        Rat top = rank();
        std::map<Subspace, Rat> t;
        for (const auto& [v, r] : table_) t.emplace(v, Rat(v.dim()) - top + rho(v.perp()));
        return QPolymatroid(f_, ground_, std::move(t));
    }

    bool operator==(const QPolymatroid& o) const {
        return f_ == o.f_ && ground_ == o.ground_ && table_ == o.table_;
    }
    bool operator!=(const QPolymatroid& o) const { return !(*this == o); }

   private:
    Field f_;
    int ground_;
    std::map<Subspace, Rat> table_;
};

/// Exhaustive equivalence search: the first phi in GL(l, q) (lexicographic)
/// with rho1(V) = rho2(V phi) for every V, or nullopt.
inline std::optional<Mat> are_equivalent(const QPolymatroid& p, const QPolymatroid& q,
                                         long long budget = kDefaultBudget) {
    detail::require(p.field() == q.field() && p.ground() == q.ground(), "are_equivalent: ground space mismatch");
    // value multisets per dimension are GL-invariant; quick screen
    {
        std::map<std::pair<int, Rat>, int> a, b;
        for (const auto& [v, r] : p.table()) ++a[{v.dim(), r}];
        for (const auto& [v, r] : q.table()) ++b[{v.dim(), r}];
        if (a != b) return std::nullopt;
    }
    for (const Mat& phi : enumerate_gl(p.field(), p.ground(), budget)) {
        bool ok = true;
        for (const auto& [v, r] : p.table()) {
            if (q.rho(Subspace::from_rows(v.generator() * phi)) != r) {
                ok = false;
                break;
            }
        }
        if (ok) return phi;
    }
    return std::nullopt;
}

struct WeightEnumerator {
    std::vector<long long> distribution;  // A_0..A_n
    std::string text;                     // sum A_i x^i y^(n-i), zero terms omitted
};
inline WeightEnumerator weight_enumerator(const QPolymatroid& p, int n, int m);

/// The q-polymatroid(s) associated with a matrix code:
/// rho_C(V) = (dim C - dim C(V^perp)) / max(n,m) on F_q^min(n,m). Rectangular
/// codes get one table; square codes get the pair for the code and its
/// transpose, which together form the equivalence-invariant object.
struct CodePolymatroid {
    int n = 0, m = 0;
    QPolymatroid primary;
    std::optional<QPolymatroid> transpose_side;

    struct Recovered {
        int dim = 0;
        int d_min = 0;
        std::vector<int> weights;
    };

    /// Invariants of the underlying code, from the table(s) alone:
    ///   dim C = max(n,m) * rho(ground);
    ///   d_min = min(n,m) + 1 - delta, delta the least k such that every
    ///     k-dimensional subspace already carries the full rank;
    ///   the weight hierarchy via d_i(P) = min - max{dim V :
    ///     dim C - max * rho(V) >= i}, minimized over the pair when square.
    Recovered recover() const {
        int mn = std::min(n, m), mx = std::max(n, m);
        Recovered out;
        Rat top = primary.rank() * mx;
        detail::require(top.denominator() == 1, "recover: max * rho(ground) is not an integer");
        out.dim = static_cast<int>(top.numerator());
        Rat full = primary.rank();
        int delta = mn;
        for (int k = 0; k <= mn; ++k) {
            bool all_full = true;
            for (const auto& [v, r] : primary.table())
                if (v.dim() == k && r != full) {
                    all_full = false;
                    break;
                }
            if (all_full) {
                delta = k;
                break;
            }
        }
        out.d_min = mn + 1 - delta;
        for (int i = 1; i <= out.dim; ++i) {
            int w = weight_from(primary, i, out.dim);
            if (transpose_side) w = std::min(w, weight_from(*transpose_side, i, out.dim));
            out.weights.push_back(w);
        }
        return out;
    }

    struct Characterization {
        bool mrd = false;
        bool optimal_anticode = false;
        int anticode_rank = -1;                 // r = maxrank for the anticode case
        std::optional<QPolymatroid> canonical;  // canonical anticode table
        std::optional<Mat> witness;             // equivalence witness onto the canonical table
    };

    /// Detects the extremal families from the table(s). MRD means
    /// rho(V) = dim V up to dimension min - d + 1 (then the whole table is
    /// the canonical staircase). For the anticode equality dim = max * maxrank
    /// the maximum rank is recovered through the weight enumerator of the
    /// primary table (the table of a tall code equals its transpose's, and
    /// ranks are transpose-invariant, so the min-by-max orientation always
    /// applies). Anticodes are shown equivalent to the canonical rank function
    /// rho(V) = dim(V + <e_1..e_{min-r}>) - (min - r) on one side of the pair.
    Characterization characterize(long long budget = kDefaultBudget) const {
        int mn = std::min(n, m), mx = std::max(n, m);
        Characterization out;
        Recovered rec = recover();
        {
            bool mrd = true;
            for (const auto& [v, r] : primary.table())
                if (v.dim() <= mn - rec.d_min + 1 && r != Rat(v.dim())) {
                    mrd = false;
                    break;
                }
            out.mrd = mrd;
        }
        int maxrk = 0;
        {
            auto distribution = weight_enumerator(primary, mn, mx).distribution;
            for (int i = mn; i >= 1; --i)
                if (distribution[i] != 0) {
                    maxrk = i;
                    break;
                }
        }
        if (rec.dim == mx * maxrk) {
            int r = maxrk;
            out.optimal_anticode = true;
            out.anticode_rank = r;
            const Field& f = primary.field();
            Subspace fixed = Subspace::from_rows([&] {
                Mat g(f, mn - r, mn);
                for (int i = 0; i < mn - r; ++i) g.set_code(i, i, 1);
                return g;
            }());
            auto canonical = QPolymatroid::from_rank_function(
                f, mn, [&](const Subspace& v) { return Rat(sum(v, fixed).dim() - (mn - r)); }, budget);
            out.witness = are_equivalent(primary, canonical, budget);
            if (!out.witness && transpose_side) out.witness = are_equivalent(*transpose_side, canonical, budget);
            out.canonical = std::move(canonical);
        }
        return out;
    }

   private:
    int weight_from(const QPolymatroid& p, int i, int dim) const {
        int mn = std::min(n, m), mx = std::max(n, m);
        int best = -1;
        for (const auto& [v, r] : p.table())
            if (Rat(dim) - r * mx >= Rat(i)) best = std::max(best, v.dim());
        detail::require(best >= 0, "recover: no subspace satisfies the weight condition (internal)");
        return mn - best;
    }

   public:
    static CodePolymatroid of(const MatrixCode& c, long long budget = kDefaultBudget) {
        int mn = c.min_mn(), mx = c.max_mn();
        auto table_of = [&](const MatrixCode& code) {
            return QPolymatroid::from_rank_function(
                code.field(), mn,
                [&](const Subspace& v) { return Rat(code.dim() - code.shortened(v.perp()).dim(), mx); }, budget);
        };
        QPolymatroid p = table_of(c);
        std::optional<QPolymatroid> t;
        if (c.n() == c.m()) t = table_of(c.transposed());
        return CodePolymatroid{c.n(), c.m(), std::move(p), std::move(t)};
    }
};

/// Recovers the weight enumerator of a code with n <= m from its
/// q-polymatroid:
///   W(x,y) = x^(n - l/m) * sum_V (q^m x)^(rho(E) - rho(V))
///            * x^-(dim V - rho(V)) * prod_{i<dim V} (y - q^i x),
/// the product scoped inside the sum (it depends on V). Exponents of x are
/// carried as exact rationals in units of 1/m; every term surviving the sum
/// must land on an integer exponent, otherwise the table was not produced by
/// a code and an error is raised.
inline WeightEnumerator weight_enumerator(const QPolymatroid& p, int n, int m) {
    detail::require(p.ground() == n, "weight_enumerator: ground space must be F_q^n");
    detail::require(n <= m, "weight_enumerator: requires n <= m");
    long long q = static_cast<long long>(p.field().order());
    Rat lrat = p.rank() * m;
    detail::require(lrat.denominator() == 1, "weight_enumerator: m * rho(ground) is not an integer");
    long long ell = lrat.numerator();
    std::map<std::pair<long long, int>, __int128> terms;  // (m * x-exponent, y-exponent) -> coefficient
    for (const auto& [v, r] : p.table()) {
        Rat ev = (p.rank() - r) * m;
        Rat mv = r * m;
        detail::require(ev.denominator() == 1 && mv.denominator() == 1 && ev >= 0,
                        "weight_enumerator: rank values are not multiples of 1/m");
        __int128 coeff = 1;
        for (long long s = 0; s < ev.numerator(); ++s) coeff *= q;
        long long base_x = (static_cast<long long>(n) * m - ell)  // leading x^(n - l/m)
                           + ev.numerator()                       // from (q^m x)^(rho(E) - rho(V))
                           - (static_cast<long long>(v.dim()) * m - mv.numerator());
        // expand prod_{i=0}^{dim V - 1} (y - q^i x): c[t] is the coefficient
        // of x^t y^(dim V - t)
        std::vector<__int128> c{1};
        long long qi = 1;
        for (int i = 0; i < v.dim(); ++i) {
            std::vector<__int128> nc(c.size() + 1, 0);
            for (size_t t = 0; t < c.size(); ++t) {
                nc[t] += c[t];           // times y
                nc[t + 1] -= c[t] * qi;  // times -q^i x
            }
            c = std::move(nc);
            qi *= q;
        }
        for (size_t t = 0; t < c.size(); ++t)
            terms[{base_x + static_cast<long long>(t) * m, v.dim() - static_cast<int>(t)}] += coeff * c[t];
    }
    WeightEnumerator out;
    out.distribution.assign(n + 1, 0);
    for (const auto& [key, coeff] : terms) {
        if (coeff == 0) continue;
        auto [xs, ye] = key;
        detail::require(xs % m == 0, "weight_enumerator: fractional x-exponent survives cancellation");
        long long xe = xs / m;
        detail::require(xe >= 0 && xe <= n && ye == n - xe, "weight_enumerator: exponent out of range");
        detail::require(coeff > 0 && coeff <= (static_cast<__int128>(1) << 62),
                        "weight_enumerator: invalid coefficient");
        out.distribution[static_cast<size_t>(xe)] = static_cast<long long>(coeff);
    }
    long long total = 0;
    for (long long a : out.distribution) total += a;
    detail::require(total == detail::checked_pow(q, ell), "weight_enumerator: coefficients do not sum to q^dim");
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= n; ++i) {
        long long a = out.distribution[i];
        if (a == 0) continue;
        if (!first) os << " + ";
        first = false;
        std::vector<std::string> factors;
        if (a != 1) factors.push_back(std::to_string(a));
        if (i > 0) factors.push_back(i > 1 ? "x^" + std::to_string(i) : "x");
        if (n - i > 0) factors.push_back(n - i > 1 ? "y^" + std::to_string(n - i) : "y");
        for (size_t t = 0; t < factors.size(); ++t) os << (t ? "*" : "") << factors[t];
    }
    if (first) os << "0";
    out.text = os.str();
    return out;
}

}  // namespace rml

#endif

