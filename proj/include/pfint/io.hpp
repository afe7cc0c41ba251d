/*
 * Copyright 2026 The pfint Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// JSON encodings of matrices and measure spaces.
//
// Matrix:  {"scalar": "rational" | "complex", "rows": [[...], ...]}
//          rational entries are integers or strings "p" / "p/q";
//          complex entries are [re, im] (a bare number means im = 0).
// Measure: {"points": [...], "weights": [...]}
//          points are numbers or [re, im] pairs; weights use the entry
//          encoding of the chosen scalar mode.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "pfint/matrix.hpp"
#include "pfint/measure.hpp"

namespace pfint {

enum class ScalarMode { Rational, Complex };

/// Malformed JSON input; the message names the offending element.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ScalarMode parse_scalar_mode(const std::string& name);
std::string to_string(ScalarMode mode);

Rational parse_rational(const nlohmann::json& v, const std::string& where);
Complex parse_complex(const nlohmann::json& v, const std::string& where);

template <Scalar T>
T parse_scalar(const nlohmann::json& v, const std::string& where) {
    if constexpr (ScalarTraits<T>::exact)
        return parse_rational(v, where);
    else
        return parse_complex(v, where);
}

nlohmann::json scalar_to_json(const Rational& v);
nlohmann::json scalar_to_json(const Complex& v);

using AnyMatrix = std::variant<Matrix<Rational>, Matrix<Complex>>;

AnyMatrix parse_matrix(const nlohmann::json& doc);

template <Scalar T>
nlohmann::json matrix_to_json(const Matrix<T>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"scalar", ScalarTraits<T>::name}, {"rows", std::move(rows)}};
}

PointLabel parse_point(const nlohmann::json& v, const std::string& where);

template <Scalar T>
MeasureSpace<T> parse_measure(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("points") || !doc.contains("weights"))
        throw ParseError("measure: expected an object with \"points\" and \"weights\"");
    const auto& pts = doc.at("points");
    const auto& ws = doc.at("weights");
    if (!pts.is_array() || !ws.is_array())
        throw ParseError("measure: \"points\" and \"weights\" must be arrays");
    if (pts.size() != ws.size())
        throw ParseError("measure: " + std::to_string(pts.size()) + " points but " +
                         std::to_string(ws.size()) + " weights");
    MeasureSpace<T> m;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        m.points.push_back(parse_point(pts[i], "points[" + std::to_string(i) + "]"));
        m.weights.push_back(parse_scalar<T>(ws[i], "weights[" + std::to_string(i) + "]"));
    }
    return m;
}

/// Reads and parses a JSON file, reporting the path on failure.
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace pfint
