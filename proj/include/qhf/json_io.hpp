#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "qhf/fuchsian.hpp"
#include "qhf/matrix.hpp"
#include "qhf/model.hpp"

namespace qhf {

using json = nlohmann::ordered_json;

// Scalars: floats as JSON numbers, exact rationals as "p/q" strings.
inline json scalar_to_json(double v) { return json(v); }
inline json scalar_to_json(const Rational& v) { return json(scalar_traits<Rational>::to_string(v)); }

template <class S>
S scalar_from_json(const json& j);

template <>
inline double scalar_from_json<double>(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        // accept "p/q" strings on the float backend too
        Rational r(j.get<std::string>());
        return scalar_traits<Rational>::to_double(r);
    }
    throw std::invalid_argument("scalar: expected number or \"p/q\" string");
}

template <>
inline Rational scalar_from_json<Rational>(const json& j) {
    if (j.is_string()) return Rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number()) throw std::invalid_argument("scalar: exact backend needs \"p/q\" or integer");
    throw std::invalid_argument("scalar: expected \"p/q\" string");
}

// Quaternion: array [w, x, y, z].
template <class S>
json quaternion_to_json(const Quaternion<S>& q) {
    return json::array({scalar_to_json(q.w), scalar_to_json(q.x), scalar_to_json(q.y),
                        scalar_to_json(q.z)});
}

template <class S>
Quaternion<S> quaternion_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("quaternion: expected array [w,x,y,z]");
    return {scalar_from_json<S>(j[0]), scalar_from_json<S>(j[1]), scalar_from_json<S>(j[2]),
            scalar_from_json<S>(j[3])};
}

template <class S>
json vector_to_json(const Vector3<S>& v) {
    return json::array(
        {quaternion_to_json(v[0]), quaternion_to_json(v[1]), quaternion_to_json(v[2])});
}

template <class S>
Vector3<S> vector_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument("vector: expected array of three quaternions");
    Vector3<S> v;
    for (int i = 0; i < 3; ++i) v[i] = quaternion_from_json<S>(j[size_t(i)]);
    return v;
}

template <class S>
json matrix_to_json(const Matrix3<S>& m) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i) {
        json row = json::array();
        for (int j = 0; j < 3; ++j) row.push_back(quaternion_to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

template <class S>
Matrix3<S> matrix_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) throw std::invalid_argument("matrix: expected 3 rows");
    Matrix3<S> m;
    for (int i = 0; i < 3; ++i) {
        const json& row = j[size_t(i)];
        if (!row.is_array() || row.size() != 3)
            throw std::invalid_argument("matrix: expected 3 columns in row " + std::to_string(i));
        for (int k = 0; k < 3; ++k) m(i, k) = quaternion_from_json<S>(row[size_t(k)]);
    }
    return m;
}

inline json horospherical_to_json(const Horospherical& h) {
    if (h.at_infinity) return json("inf");
    json j;
    j["zeta"] = quaternion_to_json(h.zeta);
    j["v"] = quaternion_to_json(h.v);
    j["u"] = h.u;
    return j;
}

inline Horospherical horospherical_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return Horospherical::infinity();
    return Horospherical::finite(quaternion_from_json<double>(j.at("zeta")),
                                 quaternion_from_json<double>(j.at("v")), j.at("u").get<double>());
}

template <class S>
json presentation_to_json(const GroupPresentation<S>& g) {
    json j;
    json gens = json::array();
    for (const auto& m : g.generators) gens.push_back(matrix_to_json(m));
    j["generators"] = gens;
    j["labels"] = g.labels;
    return j;
}

template <class S>
GroupPresentation<S> presentation_from_json(const json& j) {
    GroupPresentation<S> g;
    for (const auto& m : j.at("generators")) g.generators.push_back(matrix_from_json<S>(m));
    if (j.contains("labels")) g.labels = j["labels"].get<std::vector<std::string>>();
    g.ensure_labels();
    return g;
}

inline json verdict_to_json(const FuchsianVerdict& v, const std::vector<std::string>& labels) {
    json j;
    j["kind"] = verdict_name(v.kind);
    switch (v.kind) {
        case VerdictKind::quaternionic_line:
            j["polar"] = vector_to_json(v.polar);
            j["conjugator"] = matrix_to_json(v.conjugator);
            j["nu_sign"] = v.nu_sign;
            break;
        case VerdictKind::real_fuchsian:
            j["conjugator"] = matrix_to_json(v.conjugator);
            j["nu_sign"] = v.nu_sign;
            break;
        case VerdictKind::not_real_trace:
            j["witness_word"] = word_to_string(v.witness_word, labels);
            j["trace"] = quaternion_to_json(v.witness_trace);
            break;
        case VerdictKind::inconclusive:
            break;
    }
    j["diagnostics"] = v.diagnostics;
    return j;
}

// Residual record for machine-readable reports.
inline json check_record(const std::string& name, double value, double threshold) {
    json j;
    j["check"] = name;
    j["value"] = value;
    j["threshold"] = threshold;
    j["pass"] = (value <= threshold);
    return j;
}

}  // namespace qhf
