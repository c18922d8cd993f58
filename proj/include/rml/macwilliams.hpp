#ifndef RML_MACWILLIAMS_HPP
#define RML_MACWILLIAMS_HPP

#include "linalg.hpp"

namespace rml {

namespace detail {

inline long long binom2(long long x) { return x * (x - 1) / 2; }

/// The power of q in the duality kernel is q^(max(m,n) * t + C(i-l, 2)) where
/// t is the inner summation index l. The alternative binding of t to the
/// outer index j is kept selectable so the self-check suite can demonstrate
/// that it is inconsistent with enumeration; it is never used otherwise.
enum class DualityExponentBinding { inner_index, outer_index };

inline std::vector<long long> macwilliams_transform_impl(const std::vector<long long>& a, int n, int m, long long q,
                                                         long long code_size, DualityExponentBinding binding) {
    int mn = std::min(n, m);
    int mx = std::max(n, m);
    require(static_cast<int>(a.size()) == mn + 1, "macwilliams_transform: distribution must have min(n,m)+1 entries");
    require(code_size >= 1, "macwilliams_transform: |C| >= 1 required");
    std::vector<long long> out(mn + 1, 0);
    for (int i = 0; i <= mn; ++i) {
        __int128 acc = 0;
        for (int j = 0; j <= mn; ++j) {
            if (a[j] == 0) continue;
            __int128 inner = 0;
            for (int l = 0; l <= mn; ++l) {
                long long g1 = gaussian_binomial(mn - l, mn - i, q);
                if (g1 == 0) continue;
                long long g2 = gaussian_binomial(mn - j, l, q);
                if (g2 == 0) continue;
                int t = binding == DualityExponentBinding::inner_index ? l : j;
                __int128 term = 1;
                long long e = static_cast<long long>(mx) * t + binom2(i - l);
                for (long long s = 0; s < e; ++s) term *= q;
                term *= g1;
                term *= g2;
                if ((i - l) % 2 != 0) term = -term;
                inner += term;
            }
            acc += inner * a[j];
        }
        if (acc % code_size != 0)
            throw std::domain_error("macwilliams_transform: non-integral output at rank " + std::to_string(i) +
                                    " (input is not the distribution of a code of the stated size)");
        acc /= code_size;
        if (acc < 0 || acc > (static_cast<__int128>(1) << 62))
            throw std::domain_error("macwilliams_transform: output out of range at rank " + std::to_string(i));
        out[i] = static_cast<long long>(acc);
    }
    return out;
}

/// Which distribution entry the right-hand side of the binomial-moment
/// identity reads under the summation index j: the canonical A_j, or the
/// (inconsistent) constant binding A_l used by the self-check suite.
enum class MomentIndexBinding { sum_index, moment_index };

inline std::vector<int> macwilliams_moment_failures_impl(const std::vector<long long>& a,
                                                         const std::vector<long long>& a_dual, int n, int m,
                                                         long long q, long long code_size,
                                                         MomentIndexBinding binding) {
    int mn = std::min(n, m);
    int mx = std::max(n, m);
    require(static_cast<int>(a.size()) == mn + 1 && static_cast<int>(a_dual.size()) == mn + 1,
            "macwilliams_moments: distributions must have min(n,m)+1 entries");
    std::vector<int> failures;
    for (int l = 0; l <= mn; ++l) {
        __int128 lhs = 0;
        for (int i = 0; i <= mn - l; ++i) lhs += static_cast<__int128>(a[i]) * gaussian_binomial(mn - i, l, q);
        // compare q^(max*l) * lhs with |C| * sum_j A_j(dual) * [mn-j, l-j]
        __int128 scale = 1;
        for (long long s = 0; s < static_cast<long long>(mx) * l; ++s) scale *= q;
        __int128 rhs = 0;
        for (int j = 0; j <= l; ++j) {
            int idx = binding == MomentIndexBinding::sum_index ? j : l;
            rhs += static_cast<__int128>(a_dual[idx]) * gaussian_binomial(mn - j, l - j, q);
        }
        if (lhs * scale != rhs * code_size) failures.push_back(l);
    }
    return failures;
}

}  // namespace detail

/// Dual weight distribution from the duality transform. Exact integer
/// arithmetic; a non-integral intermediate division is an error (the input
/// was not a valid distribution for the stated code size).
inline std::vector<long long> macwilliams_transform(const std::vector<long long>& a, int n, int m, long long q,
                                                    long long code_size) {
    detail::require(!a.empty() && a[0] == 1, "macwilliams_transform: A_0 must be 1");
    long long total = 0;
    for (long long x : a) {
        detail::require(x >= 0, "macwilliams_transform: negative count");
        total += x;
    }
    detail::require(total == code_size, "macwilliams_transform: counts must sum to |C|");
    return detail::macwilliams_transform_impl(a, n, m, q, code_size, detail::DualityExponentBinding::inner_index);
}

/// Verifies the l-th binomial-moment identity for every l = 0..min(n,m);
/// returns the list of failing l (empty when the pair of distributions is
/// consistent). Inputs are deliberately not validated so that perturbed
/// distributions can be used as negative controls.
inline std::vector<int> macwilliams_moment_failures(const std::vector<long long>& a,
                                                    const std::vector<long long>& a_dual, int n, int m, long long q,
                                                    long long code_size) {
    return detail::macwilliams_moment_failures_impl(a, a_dual, n, m, q, code_size,
                                                    detail::MomentIndexBinding::sum_index);
}

/// Closed-form weight distribution of a code whose parameters attain the
/// Singleton equality (d + d_dual = min + 2) or the next-best sum
/// (d + d_dual = min + 1). A_i = 0 below d, and above it the alternating sum
/// over j with kernel q^C(j,2) [i, j] (q^(dim - max(min + j - i)) - 1),
/// scaled by [min, i]. A negative entry or a wrong total signals that the
/// parameters do not belong to such a code.
inline std::vector<long long> mrd_weight_distribution(int n, int m, long long q, int dim, int d) {
    int mn = std::min(n, m);
    int mx = std::max(n, m);
    detail::require(dim >= 0 && dim <= n * m, "mrd_weight_distribution: 0 <= dim <= n*m");
    detail::require(d >= 1 && d <= mn + 1, "mrd_weight_distribution: 1 <= d <= min(n,m)+1");
    std::vector<long long> out(mn + 1, 0);
    out[0] = 1;
    for (int i = d; i <= mn; ++i) {
        __int128 acc = 0;
        for (int j = 0; j <= i - d; ++j) {
            long long e = dim - static_cast<long long>(mx) * (mn + j - i);
            if (e < 0)
                throw std::domain_error("mrd_weight_distribution: negative exponent (parameters are not MRD or "
                                        "dually quasi-MRD)");
            __int128 term = 1;
            for (long long s = 0; s < detail::binom2(j); ++s) term *= q;
            term *= gaussian_binomial(i, j, q);
            __int128 pw = 1;
            for (long long s = 0; s < e; ++s) pw *= q;
            term *= pw - 1;
            acc += (j % 2 == 0) ? term : -term;
        }
        acc *= gaussian_binomial(mn, i, q);
        if (acc < 0 || acc > (static_cast<__int128>(1) << 62))
            throw std::domain_error("mrd_weight_distribution: negative entry at rank " + std::to_string(i) +
                                    " (parameters are not MRD or dually quasi-MRD)");
        out[i] = static_cast<long long>(acc);
    }
    long long total = 0;
    for (long long x : out) total += x;
    if (total != detail::checked_pow(q, dim))
        throw std::domain_error("mrd_weight_distribution: distribution does not sum to q^dim (parameters are not "
                                "MRD or dually quasi-MRD)");
    return out;
}

}  // namespace rml

#endif
