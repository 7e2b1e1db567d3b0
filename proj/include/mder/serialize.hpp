#pragma once

/**
 * @file serialize.hpp
 * @brief JSON records for polynomials, operators and sequences.
 *
 * Polynomial:  {"variable": "a", "coeffs": ["0", "6", "3"]}
 *              ascending powers, decimal strings, no trailing zero entries.
 *
 * Operator:    {"format": "mder-operator", "version": 1,
 *               "order": r, "valid_from": v,
 *               "coeffs": [ [[p, q, "c"], ...],   // c_0
 *                           ...,
 *                           [[p, q, "c"], ...] ]} // c_r
 *              p = degree in n, q = degree in a, monomials sorted by (p, q).
 *              "format" and "version" may be omitted on input.
 *
 * Sequence:    {"format": "mder-sequence", "version": 1,
 *               "k": k, "start": s, "values": [poly, ...]}
 *              On input a value may also be a bare decimal string or integer
 *              (a constant polynomial), and "k" may be omitted.
 *
 * Parse failures raise schema_error naming the offending field; malformed
 * JSON text raises parse_error with the byte offset.
 */

#include <mder/errors.hpp>
#include <mder/exactcore.hpp>
#include <mder/recurrence.hpp>

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace mder {

using json = nlohmann::json;

inline constexpr int operator_schema_version = 1;
inline constexpr int sequence_schema_version = 1;

namespace detail {

inline Integer parse_integer(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Integer(j.dump());
    if (!j.is_string()) throw schema_error(where + ": expected a decimal string");
    const std::string s = j.get<std::string>();
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw schema_error(where + ": empty integer '" + s + "'");
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') throw schema_error(where + ": not a decimal integer '" + s + "'");
    return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

inline std::size_t parse_index(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) throw schema_error(where + ": missing field '" + key + "'");
    const json& v = obj.at(key);
    if (!v.is_number_unsigned()) throw schema_error(where + "." + key + ": expected a nonnegative integer");
    return v.get<std::size_t>();
}

inline const json& require(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) throw schema_error(where + ": expected an object");
    if (!obj.contains(key)) throw schema_error(where + ": missing field '" + key + "'");
    return obj.at(key);
}

inline void check_header(const json& obj, const char* format, int version, const std::string& where) {
    if (obj.contains("format") && obj.at("format") != format)
        throw schema_error(where + ".format: expected '" + std::string(format) + "'");
    if (obj.contains("version") && obj.at("version") != version)
        throw schema_error(where + ".version: unsupported version " + obj.at("version").dump());
}

} // namespace detail

inline json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("invalid JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
    }
}

inline json to_json(const AlphaPolynomial& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
    return json{{"variable", "a"}, {"coeffs", std::move(coeffs)}};
}

inline AlphaPolynomial polynomial_from_json(const json& j, const std::string& where = "polynomial") {
    const json& coeffs = detail::require(j, "coeffs", where);
    if (j.contains("variable") && j.at("variable") != "a")
        throw schema_error(where + ".variable: expected \"a\"");
    if (!coeffs.is_array()) throw schema_error(where + ".coeffs: expected an array");
    std::vector<Integer> v;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        v.push_back(detail::parse_integer(coeffs[i], where + ".coeffs[" + std::to_string(i) + "]"));
    if (!v.empty() && sgn(v.back()) == 0) throw schema_error(where + ".coeffs: trailing zero entry");
    return AlphaPolynomial(std::move(v));
}

inline json to_json(const BivariatePolynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(json::array({e.first, e.second, c.get_str()}));
    return terms;
}

inline json to_json(const RecurrenceOperator& op) {
    json coeffs = json::array();
    for (const auto& c : op.coeffs) coeffs.push_back(to_json(c));
    return json{{"format", "mder-operator"},
                {"version", operator_schema_version},
                {"order", op.order()},
                {"valid_from", op.valid_from},
                {"coeffs", std::move(coeffs)}};
}

/// Parses and normalizes an operator record.
inline RecurrenceOperator operator_from_json(const json& j, const std::string& where = "operator") {
    detail::check_header(j, "mder-operator", operator_schema_version, where);
    const std::size_t order = detail::parse_index(j, "order", where);
    const std::size_t valid_from = detail::parse_index(j, "valid_from", where);
    const json& coeffs = detail::require(j, "coeffs", where);
    if (!coeffs.is_array()) throw schema_error(where + ".coeffs: expected an array");
    if (order < 1) throw schema_error(where + ".order: must be at least 1");
    if (coeffs.size() != order + 1)
        throw schema_error(where + ".coeffs: expected " + std::to_string(order + 1) + " coefficient polynomials, got " +
                           std::to_string(coeffs.size()));
    std::vector<BivariatePolynomial> cs(order + 1);
    for (std::size_t jdx = 0; jdx <= order; ++jdx) {
        const std::string w = where + ".coeffs[" + std::to_string(jdx) + "]";
        if (!coeffs[jdx].is_array()) throw schema_error(w + ": expected an array of monomials");
        for (std::size_t t = 0; t < coeffs[jdx].size(); ++t) {
            const json& mono = coeffs[jdx][t];
            const std::string wm = w + "[" + std::to_string(t) + "]";
            if (!mono.is_array() || mono.size() != 3 || !mono[0].is_number_unsigned() || !mono[1].is_number_unsigned())
                throw schema_error(wm + ": expected [deg_n, deg_a, \"coefficient\"]");
            cs[jdx].add_term(detail::parse_integer(mono[2], wm + "[2]"), mono[0].get<unsigned>(), mono[1].get<unsigned>());
        }
    }
    if (cs.back().is_zero()) throw schema_error(where + ".coeffs[" + std::to_string(order) + "]: leading coefficient is zero");
    return normalize(RecurrenceOperator{std::move(cs), valid_from});
}

inline json to_json(const PolySequence& seq) {
    json values = json::array();
    for (const auto& v : seq.values) values.push_back(to_json(v));
    return json{{"format", "mder-sequence"},
                {"version", sequence_schema_version},
                {"k", seq.k},
                {"start", seq.start},
                {"values", std::move(values)}};
}

inline PolySequence sequence_from_json(const json& j, const std::string& where = "sequence") {
    detail::check_header(j, "mder-sequence", sequence_schema_version, where);
    PolySequence seq;
    seq.start = j.contains("start") ? detail::parse_index(j, "start", where) : 0;
    seq.k = j.contains("k") && !j.at("k").is_null() ? detail::parse_index(j, "k", where) : 0;
    const json& values = detail::require(j, "values", where);
    if (!values.is_array()) throw schema_error(where + ".values: expected an array");
    for (std::size_t i = 0; i < values.size(); ++i) {
        const std::string w = where + ".values[" + std::to_string(i) + "]";
        if (values[i].is_object())
            seq.values.push_back(polynomial_from_json(values[i], w));
        else
            seq.values.push_back(AlphaPolynomial::constant(detail::parse_integer(values[i], w)));
    }
    return seq;
}

} // namespace mder
