#ifndef RML_CODEFILE_HPP
#define RML_CODEFILE_HPP

#include <fstream>
#include <variant>

#include <json.hpp>

#include "vector_code.hpp"

namespace rml {

/// Code files are UTF-8 JSON documents:
///
///   matrix kind: {"kind": "matrix", "q": <field order>, "n": .., "m": ..,
///                 "modulus": [..],            // optional, for prime-power q
///                 "generators": [ [[..],..], .. ]}   // n x m entry grids
///
///   vector kind: {"kind": "vector", "q": <prime>, "m": <extension degree>,
///                 "n": <length>, "modulus": [..],    // optional, degree m+1
///                 "generators": [ [e_1, .., e_n], .. ]}
///
/// Entries over a prime field are integers 0..p-1. Entries over an extension
/// field are ascending coefficient arrays (x^2 + 1 over GF(2) is [1,0,1]);
/// plain integers are also accepted and denote prime-subfield constants.
struct LoadedCode {
    std::variant<MatrixCode, VectorCode> code;

    bool is_matrix() const { return std::holds_alternative<MatrixCode>(code); }
    const MatrixCode& matrix() const { return std::get<MatrixCode>(code); }
    const VectorCode& vector() const { return std::get<VectorCode>(code); }
};

namespace detail {

inline uint32_t parse_entry(const nlohmann::json& e, const Field& f, const std::string& where) {
    if (e.is_number_integer()) {
        long long v = e.get<long long>();
        require(v >= 0 && v < static_cast<long long>(f.characteristic()),
                where + ": integer entry must lie in 0..p-1 (use a coefficient array for extension elements)");
        return static_cast<uint32_t>(v);
    }
    if (e.is_array()) {
        require(static_cast<int>(e.size()) == f.degree(),
                where + ": coefficient array must have length " + std::to_string(f.degree()));
        std::vector<uint32_t> c;
        for (const auto& x : e) {
            require(x.is_number_integer(), where + ": coefficients must be integers");
            long long v = x.get<long long>();
            require(v >= 0 && v < static_cast<long long>(f.characteristic()), where + ": coefficient out of range");
            c.push_back(static_cast<uint32_t>(v));
        }
        return f.encode(c);
    }
    throw std::invalid_argument(where + ": entry must be an integer or a coefficient array");
}

inline nlohmann::ordered_json serialize_entry(const Field& f, uint32_t code) {
    if (f.is_prime_field()) return code;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (uint32_t c : f.coeffs(code)) arr.push_back(c);
    return arr;
}

inline Field field_from_json(const nlohmann::json& j, bool vector_kind) {
    detail::require(j.contains("q") && j["q"].is_number_integer(), "code file: missing integer field \"q\"");
    long long q = j["q"].get<long long>();
    detail::require(q >= 2 && q <= 65536, "code file: q out of range");
    if (vector_kind) {
        detail::require(detail::is_prime(static_cast<uint32_t>(q)),
                        "code file: vector codes require a prime base order q");
        detail::require(j.contains("m") && j["m"].is_number_integer(), "code file: missing extension degree \"m\"");
        int m = j["m"].get<int>();
        detail::require(m >= 1, "code file: extension degree must be >= 1");
        if (j.contains("modulus")) {
            std::vector<uint32_t> mod = j["modulus"].get<std::vector<uint32_t>>();
            detail::require(static_cast<int>(mod.size()) == m + 1,
                            "code file: modulus must list m+1 ascending coefficients");
            return m == 1 ? Field::prime(static_cast<uint32_t>(q)) : Field::extension(static_cast<uint32_t>(q), mod);
        }
        long long order = 1;
        for (int i = 0; i < m; ++i) order *= q;
        return Field::gf(static_cast<uint64_t>(order));
    }
    if (detail::is_prime(static_cast<uint32_t>(q))) {
        detail::require(!j.contains("modulus"), "code file: modulus given for a prime field");
        return Field::prime(static_cast<uint32_t>(q));
    }
    if (j.contains("modulus")) {
        uint32_t p = 2;
        while (q % p != 0) ++p;
        return Field::extension(p, j["modulus"].get<std::vector<uint32_t>>());
    }
    return Field::gf(static_cast<uint64_t>(q));
}

}  // namespace detail

inline LoadedCode parse_code_file(const nlohmann::json& j) {
    detail::require(j.is_object(), "code file: top level must be an object");
    detail::require(j.contains("kind") && j["kind"].is_string(), "code file: missing string field \"kind\"");
    std::string kind = j["kind"].get<std::string>();
    detail::require(kind == "matrix" || kind == "vector", "code file: kind must be \"matrix\" or \"vector\"");
    detail::require(j.contains("n") && j["n"].is_number_integer(), "code file: missing integer field \"n\"");
    int n = j["n"].get<int>();
    detail::require(n >= 1, "code file: n >= 1 required");
    detail::require(j.contains("generators") && j["generators"].is_array(), "code file: missing \"generators\" array");
    const auto& gens = j["generators"];

    if (kind == "matrix") {
        detail::require(j.contains("m") && j["m"].is_number_integer(), "code file: missing integer field \"m\"");
        int m = j["m"].get<int>();
        detail::require(m >= 1, "code file: m >= 1 required");
        Field f = detail::field_from_json(j, false);
        std::vector<Mat> mats;
        int gi = 0;
        for (const auto& g : gens) {
            std::string where = "generators[" + std::to_string(gi++) + "]";
            detail::require(g.is_array() && static_cast<int>(g.size()) == n, where + ": expected " +
                                                                                 std::to_string(n) + " rows");
            Mat mat(f, n, m);
            for (int i = 0; i < n; ++i) {
                detail::require(g[i].is_array() && static_cast<int>(g[i].size()) == m,
                                where + ": row " + std::to_string(i) + " must have " + std::to_string(m) + " entries");
                for (int jj = 0; jj < m; ++jj) mat.set_code(i, jj, detail::parse_entry(g[i][jj], f, where));
            }
            mats.push_back(std::move(mat));
        }
        return LoadedCode{MatrixCode::from_generators(f, n, m, mats)};
    }

    Field ext = detail::field_from_json(j, true);
    Mat rows(ext, static_cast<int>(gens.size()), n);
    int gi = 0;
    for (const auto& g : gens) {
        std::string where = "generators[" + std::to_string(gi) + "]";
        detail::require(g.is_array() && static_cast<int>(g.size()) == n,
                        where + ": expected a row of length " + std::to_string(n));
        for (int i = 0; i < n; ++i) rows.set_code(gi, i, detail::parse_entry(g[i], ext, where));
        ++gi;
    }
    return LoadedCode{VectorCode::from_generators(ext, n, rows)};
}

inline LoadedCode load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open code file: " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);  // parse errors carry line/column info
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    try {
        return parse_code_file(j);
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

inline nlohmann::ordered_json serialize(const MatrixCode& c) {
    nlohmann::ordered_json j;
    j["kind"] = "matrix";
    j["q"] = c.field().order();
    if (!c.field().is_prime_field()) j["modulus"] = c.field().modulus();
    j["n"] = c.n();
    j["m"] = c.m();
    auto gens = nlohmann::ordered_json::array();
    for (int t = 0; t < c.dim(); ++t) {
        Mat b = c.basis_matrix(t);
        auto rows = nlohmann::ordered_json::array();
        for (int i = 0; i < c.n(); ++i) {
            auto row = nlohmann::ordered_json::array();
            for (int jj = 0; jj < c.m(); ++jj) row.push_back(detail::serialize_entry(c.field(), b.code_at(i, jj)));
            rows.push_back(std::move(row));
        }
        gens.push_back(std::move(rows));
    }
    j["generators"] = std::move(gens);
    return j;
}

inline nlohmann::ordered_json serialize(const VectorCode& c) {
    nlohmann::ordered_json j;
    j["kind"] = "vector";
    j["q"] = c.field().characteristic();
    j["m"] = c.field().degree();
    j["modulus"] = c.field().is_prime_field() ? std::vector<uint32_t>{0, 1} : c.field().modulus();
    j["n"] = c.n();
    auto gens = nlohmann::ordered_json::array();
    for (int t = 0; t < c.dim(); ++t) {
        auto row = nlohmann::ordered_json::array();
        for (uint32_t code : c.generator().row_codes(t)) row.push_back(detail::serialize_entry(c.field(), code));
        gens.push_back(std::move(row));
    }
    j["generators"] = std::move(gens);
    return j;
}

inline nlohmann::ordered_json serialize(const LoadedCode& lc) {
    return lc.is_matrix() ? serialize(lc.matrix()) : serialize(lc.vector());
}

}  // namespace rml

#endif
