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

#include "pfint/io.hpp"

#include <cmath>
#include <fstream>
#include <regex>

namespace pfint {

using nlohmann::json;

ScalarMode parse_scalar_mode(const std::string& name) {
    if (name == "rational") return ScalarMode::Rational;
    if (name == "complex") return ScalarMode::Complex;
    throw ParseError("unknown scalar mode \"" + name + "\" (expected rational or complex)");
}

std::string to_string(ScalarMode mode) {
    return mode == ScalarMode::Rational ? "rational" : "complex";
}

Rational parse_rational(const json& v, const std::string& where) {
    if (v.is_number_integer()) {
        return Rational(v.dump(), 10);
    }
    if (v.is_string()) {
        static const std::regex pattern(R"(\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*)");
        std::smatch m;
        const std::string s = v.get<std::string>();
        if (!std::regex_match(s, m, pattern))
            throw ParseError(where + ": \"" + s + "\" is not an integer or p/q rational");
        mpz_class num(m[1].str(), 10);
        mpz_class den(m[2].matched ? m[2].str() : std::string("1"), 10);
        if (den == 0) throw ParseError(where + ": zero denominator in \"" + s + "\"");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    throw ParseError(where + ": rational entries must be integers or \"p/q\" strings");
}

Complex parse_complex(const json& v, const std::string& where) {
    auto number = [&](const json& x) {
        if (!x.is_number()) throw ParseError(where + ": complex parts must be numbers");
        const double d = x.get<double>();
        if (!std::isfinite(d)) throw ParseError(where + ": non-finite value");
        return d;
    };
    if (v.is_number()) return {number(v), 0.0};
    if (v.is_array() && v.size() == 2) return {number(v[0]), number(v[1])};
    throw ParseError(where + ": complex entries must be [re, im] arrays");
}

json scalar_to_json(const Rational& v) {
    if (v.get_den() == 1) {
        if (v.get_num().fits_slong_p()) return v.get_num().get_si();
    }
    return v.get_str();
}

json scalar_to_json(const Complex& v) { return json::array({v.real(), v.imag()}); }

namespace {

template <Scalar T>
Matrix<T> parse_rows(const json& rows) {
    const std::size_t r = rows.size();
    std::size_t c = 0;
    std::vector<T> entries;
    for (std::size_t i = 0; i < r; ++i) {
        const auto& row = rows[i];
        if (!row.is_array()) throw ParseError("rows[" + std::to_string(i) + "]: expected an array");
        if (i == 0) c = row.size();
        if (row.size() != c)
            throw ParseError("rows[" + std::to_string(i) + "]: has " + std::to_string(row.size()) +
                             " entries, expected " + std::to_string(c));
        for (std::size_t j = 0; j < c; ++j)
            entries.push_back(parse_scalar<T>(
                row[j], "rows[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
    }
    return Matrix<T>(r, c, std::move(entries));
}

}  // namespace

AnyMatrix parse_matrix(const json& doc) {
    if (!doc.is_object()) throw ParseError("matrix: expected a JSON object");
    if (!doc.contains("rows") || !doc.at("rows").is_array())
        throw ParseError("matrix: missing \"rows\" array");
    const std::string mode =
        doc.contains("scalar") ? doc.at("scalar").get<std::string>() : std::string("rational");
    if (parse_scalar_mode(mode) == ScalarMode::Rational) return parse_rows<Rational>(doc.at("rows"));
    return parse_rows<Complex>(doc.at("rows"));
}

PointLabel parse_point(const json& v, const std::string& where) {
    if (v.is_number()) return v.get<double>();
    if (v.is_array()) return parse_complex(v, where);
    throw ParseError(where + ": points must be numbers or [re, im] pairs");
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string() + ": cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

}  // namespace pfint
