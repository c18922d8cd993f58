#ifndef RML_REPORT_HPP
#define RML_REPORT_HPP

#include "codefile.hpp"
#include "genweights.hpp"
#include "macwilliams.hpp"
#include "qpolymatroid.hpp"

namespace rml {

/// A command report: an ordered key/value tree, rendered either as JSON or
/// as aligned text. Reports are byte-identical across runs for identical
/// inputs; wall-clock timing is attached only on request.
struct Report {
    nlohmann::ordered_json body = nlohmann::ordered_json::object();

    std::string to_json() const { return body.dump(2) + "\n"; }

    std::string to_text() const {
        std::string out;
        render(body, 0, out);
        return out;
    }

   private:
    static void render(const nlohmann::ordered_json& j, int indent, std::string& out) {
        std::string pad(static_cast<size_t>(indent) * 2, ' ');
        if (j.is_object()) {
            for (const auto& [k, v] : j.items()) {
                if (v.is_object()) {
                    out += pad + k + ":\n";
                    render(v, indent + 1, out);
                } else if (v.is_array() && std::any_of(v.begin(), v.end(),
                                                       [](const auto& x) { return x.is_object() || x.is_array(); })) {
                    out += pad + k + ":\n";
                    for (const auto& x : v) {
                        bool scalar_array =
                            x.is_array() && std::none_of(x.begin(), x.end(), [](const auto& y) {
                                return y.is_object() || y.is_array();
                            });
                        if (x.is_object() || (x.is_array() && !scalar_array)) {
                            out += pad + "  -\n";
                            render(x, indent + 2, out);
                        } else {
                            out += pad + "  - " + x.dump() + "\n";
                        }
                    }
                } else {
                    out += pad + k + ": " + v.dump() + "\n";
                }
            }
        } else {
            out += pad + j.dump() + "\n";
        }
    }
};

namespace detail {

inline nlohmann::ordered_json subspace_json(const Subspace& s) {
    auto rows = nlohmann::ordered_json::array();
    for (int i = 0; i < s.dim(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (int j = 0; j < s.ambient(); ++j) row.push_back(serialize_entry(s.field(), s.generator().code_at(i, j)));
        rows.push_back(std::move(row));
    }
    nlohmann::ordered_json j;
    j["dim"] = s.dim();
    j["generator"] = std::move(rows);
    return j;
}

inline nlohmann::ordered_json mat_json(const Mat& m) {
    auto rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(serialize_entry(m.field(), m.code_at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline nlohmann::ordered_json profile_json(const WeightProfile& p, bool with_witnesses) {
    nlohmann::ordered_json j;
    j["values"] = p.values();
    if (with_witnesses && p.has_witnesses()) {
        auto w = nlohmann::ordered_json::array();
        for (int i = 1; i <= p.length(); ++i) w.push_back(subspace_json(p.witness(i)));
        j["witnesses"] = std::move(w);
    }
    return j;
}

inline std::string rat_string(const Rat& r) {
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace detail

inline Report build_info_report(const LoadedCode& lc, long long budget = kDefaultBudget) {
    Report rep;
    rep.body["command"] = "info";
    if (lc.is_matrix()) {
        const MatrixCode& c = lc.matrix();
        rep.body["kind"] = "matrix";
        rep.body["q"] = c.field().order();
        rep.body["n"] = c.n();
        rep.body["m"] = c.m();
        rep.body["dim"] = c.dim();
        rep.body["codewords"] = c.size();
        rep.body["min_distance"] = c.min_distance(budget);
        rep.body["max_rank"] = c.max_rank(budget);
        rep.body["weight_distribution"] = c.weight_distribution(budget);
        auto cls = c.classify(budget);
        rep.body["is_mrd"] = cls.is_mrd;
        rep.body["is_optimal_anticode"] = cls.is_optimal_anticode;
        rep.body["is_dually_quasi_mrd"] = cls.is_dually_quasi_mrd;
        rep.body["support"] = detail::subspace_json(c.support());
    } else {
        const VectorCode& c = lc.vector();
        rep.body["kind"] = "vector";
        rep.body["q"] = c.field().characteristic();
        rep.body["extension_degree"] = c.field().degree();
        rep.body["n"] = c.n();
        rep.body["dim"] = c.dim();
        rep.body["codewords"] = c.size();
        rep.body["min_distance"] = c.min_distance(budget);
        rep.body["max_rank"] = c.max_rank(budget);
        rep.body["weight_distribution"] = c.weight_distribution(budget);
        auto cls = c.classify(budget);
        rep.body["is_mrd"] = cls.is_mrd;
        rep.body["is_optimal_vector_anticode"] = cls.is_optimal_vector_anticode;
        rep.body["support"] = detail::subspace_json(c.support());
    }
    return rep;
}

inline Report build_dual_report(const LoadedCode& lc) {
    Report rep;
    rep.body["command"] = "dual";
    if (lc.is_matrix()) {
        MatrixCode d = lc.matrix().dual();
        rep.body["dim"] = d.dim();
        rep.body["dual"] = serialize(d);
    } else {
        VectorCode d = lc.vector().dual();
        rep.body["dim"] = d.dim();
        rep.body["dual"] = serialize(d);
    }
    return rep;
}

inline Report build_expand_report(const LoadedCode& lc, const std::optional<FieldBasis>& basis_opt) {
    detail::require(!lc.is_matrix(), "expand: requires a vector-kind code file");
    const VectorCode& c = lc.vector();
    FieldBasis basis = basis_opt ? *basis_opt : FieldBasis::power_basis(c.field());
    Report rep;
    rep.body["command"] = "expand";
    auto b = nlohmann::ordered_json::array();
    for (const auto& e : basis.elements()) b.push_back(detail::serialize_entry(c.field(), e.code()));
    rep.body["basis"] = std::move(b);
    MatrixCode m = c.expanded(basis);
    rep.body["dim"] = m.dim();
    rep.body["expansion"] = serialize(m);
    return rep;
}

inline Report build_weights_report(const LoadedCode& lc, long long budget = kDefaultBudget) {
    Report rep;
    rep.body["command"] = "weights";
    if (lc.is_matrix()) {
        const MatrixCode& c = lc.matrix();
        auto a = c.weight_distribution(budget);
        rep.body["weight_distribution"] = a;
        auto transformed = macwilliams_transform(a, c.n(), c.m(), static_cast<long long>(c.field().order()), c.size());
        rep.body["dual_distribution_transform"] = transformed;
        auto enumerated = c.dual().weight_distribution(budget);
        rep.body["dual_distribution_enumerated"] = enumerated;
        rep.body["transform_matches_enumeration"] = transformed == enumerated;
        rep.body["moment_identity_failures"] =
            macwilliams_moment_failures(a, enumerated, c.n(), c.m(), static_cast<long long>(c.field().order()),
                                        c.size());
    } else {
        const VectorCode& c = lc.vector();
        rep.body["weight_distribution"] = c.weight_distribution(budget);
        rep.body["dual_distribution_enumerated"] = c.dual().weight_distribution(budget);
    }
    return rep;
}

inline Report build_genweights_report(const LoadedCode& lc, const std::string& kind, const std::string& definition,
                                      const std::optional<LoadedCode>& sub, long long budget = kDefaultBudget) {
    Report rep;
    rep.body["command"] = "genweights";
    rep.body["profile_kind"] = kind;
    if (kind == "d") {
        detail::require(lc.is_matrix(), "genweights --kind=d requires a matrix-kind code");
        auto p = generalized_weights(lc.matrix(), budget);
        rep.body["profile"] = detail::profile_json(p, true);
    } else if (kind == "delta") {
        detail::require(lc.is_matrix(), "genweights --kind=delta requires a matrix-kind code");
        if (sub) {
            detail::require(sub->is_matrix(), "genweights: subcode must be matrix-kind");
            auto p = relative_generalized_matrix_weights(lc.matrix(), sub->matrix(), budget);
            rep.body["relative_to_dim"] = sub->matrix().dim();
            rep.body["profile"] = detail::profile_json(p, true);
        } else {
            auto p = generalized_matrix_weights(lc.matrix(), budget);
            rep.body["profile"] = detail::profile_json(p, true);
        }
    } else if (kind == "w") {
        detail::require(!lc.is_matrix(), "genweights --kind=w requires a vector-kind code");
        if (sub) {
            detail::require(!sub->is_matrix(), "genweights: subcode must be vector-kind");
            auto p = relative_generalized_vector_weights(lc.vector(), sub->vector(), budget);
            rep.body["relative_to_dim"] = sub->vector().dim();
            rep.body["profile"] = detail::profile_json(p, true);
        } else {
            VectorWeightDefinition def;
            if (definition == "oggier") def = VectorWeightDefinition::max_support;
            else if (definition == "ducoat") def = VectorWeightDefinition::closure_max_support;
            else if (definition == "support" || definition.empty()) def = VectorWeightDefinition::subcode_support;
            else if (definition == "anticode") def = VectorWeightDefinition::anticode_intersection;
            else throw std::invalid_argument("genweights: unknown definition \"" + definition +
                                             "\" (expected oggier|ducoat|support|anticode)");
            rep.body["definition"] = definition.empty() ? "support" : definition;
            auto p = generalized_vector_weights(lc.vector(), def, budget);
            rep.body["profile"] = detail::profile_json(p, true);
        }
    } else {
        throw std::invalid_argument("genweights: unknown kind \"" + kind + "\" (expected d|delta|w)");
    }
    return rep;
}

inline Report build_polymatroid_report(const LoadedCode& lc, long long budget = kDefaultBudget) {
    detail::require(lc.is_matrix(), "polymatroid: requires a matrix-kind code file");
    const MatrixCode& c = lc.matrix();
    Report rep;
    rep.body["command"] = "polymatroid";
    auto cp = CodePolymatroid::of(c, budget);
    auto table_json = [&](const QPolymatroid& p) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& [v, r] : p.table()) {
            nlohmann::ordered_json e;
            e["subspace"] = detail::subspace_json(v);
            e["rho"] = detail::rat_string(r);
            arr.push_back(std::move(e));
        }
        return arr;
    };
    rep.body["ground_dim"] = cp.primary.ground();
    rep.body["axioms_verified"] = true;  // construction would have thrown otherwise
    rep.body["rho"] = table_json(cp.primary);
    if (cp.transpose_side) rep.body["rho_transpose"] = table_json(*cp.transpose_side);
    auto rec = cp.recover();
    rep.body["recovered"] = {{"dim", rec.dim}, {"d_min", rec.d_min}, {"weights", rec.weights}};
    auto ch = cp.characterize(budget);
    rep.body["mrd"] = ch.mrd;
    rep.body["optimal_anticode"] = ch.optimal_anticode;
    if (ch.optimal_anticode) rep.body["anticode_rank"] = ch.anticode_rank;
    // duality self-check: the dual table must be the table of the dual code
    rep.body["dual_table_matches_dual_code"] = cp.primary.dual() == CodePolymatroid::of(c.dual(), budget).primary;
    if (c.n() <= c.m()) {
        auto we = weight_enumerator(cp.primary, c.n(), c.m());
        rep.body["weight_enumerator"] = we.text;
        rep.body["enumerator_matches_enumeration"] = we.distribution == c.weight_distribution(budget);
    }
    return rep;
}

inline Report build_equiv_report(const LoadedCode& a, const LoadedCode& b, long long budget = kDefaultBudget) {
    Report rep;
    rep.body["command"] = "equiv";
    detail::require(a.is_matrix() == b.is_matrix(), "equiv: both codes must have the same kind");
    if (a.is_matrix()) {
        auto w = are_equivalent(a.matrix(), b.matrix(), budget);
        rep.body["equivalent"] = w.has_value();
        if (w) {
            rep.body["witness"] = {{"A", detail::mat_json(w->a)}, {"B", detail::mat_json(w->b)},
                                   {"transposed", w->transposed}};
        }
    } else {
        auto w = are_equivalent(a.vector(), b.vector(), budget);
        rep.body["equivalent"] = w.has_value();
        if (w) {
            rep.body["witness"] = {{"alpha", detail::serialize_entry(a.vector().field(), w->alpha)},
                                   {"B", detail::mat_json(w->b)}};
        }
    }
    return rep;
}

}  // namespace rml

#endif
