#pragma once

#include <json.hpp>

#include <cmath>
#include <string>
#include <vector>

#include "nbodymat/analysis.hpp"
#include "nbodymat/domain.hpp"
#include "nbodymat/errors.hpp"
#include "nbodymat/matrix.hpp"
#include "nbodymat/poly.hpp"
#include "nbodymat/rational.hpp"
#include "nbodymat/symbolic.hpp"

namespace nbodymat {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& field(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw ParseError(path + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(path + ": missing field \"" + key + "\"");
    return *it;
}

inline int int_field(const Json& j, const char* key, const std::string& path) {
    const Json& v = field(j, key, path);
    if (!v.is_number_integer()) throw ParseError(path + "." + key + ": expected an integer");
    return v.get<int>();
}

}  // namespace detail

inline Json to_json(double x) { return x; }
inline Json to_json(const Rational& q) { return q.get_str(); }
inline Json to_json(const SparsePoly& p) { return p.to_string(); }

/// Reads a scalar from a JSON number or a "p/q" / decimal string.
template <typename T>
T scalar_from_json(const Json& j, const std::string& path) {
    try {
        if constexpr (std::is_same_v<T, Rational>) {
            if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
            if (j.is_number_float()) return rational_from_double(j.get<double>());
            if (j.is_string()) return parse_rational(j.get<std::string>());
        } else {
            if (j.is_number()) return j.get<double>();
            if (j.is_string()) return to_double(parse_rational(j.get<std::string>()));
        }
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
    throw ParseError(path + ": expected a number or a \"p/q\" string");
}

inline Json parse_json_text(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(source + ": " + e.what());
    }
}

// ---- point configurations -------------------------------------------------

template <typename T>
Json to_json(const PointConfiguration<T>& cfg) {
    Json pts = Json::array();
    for (const auto& p : cfg.points()) {
        Json row = Json::array();
        for (const auto& c : p) row.push_back(to_json(c));
        pts.push_back(std::move(row));
    }
    return Json{{"n", cfg.n()}, {"d", cfg.d()}, {"points", std::move(pts)}};
}

template <typename T>
PointConfiguration<T> config_from_json(const Json& j, const std::string& path = "$") {
    const int n = detail::int_field(j, "n", path);
    const int d = detail::int_field(j, "d", path);
    const Json& pts = detail::field(j, "points", path);
    if (!pts.is_array()) throw ParseError(path + ".points: expected an array");
    if (static_cast<int>(pts.size()) != n)
        throw DimensionError(path + ".points: has " + std::to_string(pts.size()) + " points, n = " + std::to_string(n));
    std::vector<std::vector<T>> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::string p = path + ".points[" + std::to_string(i) + "]";
        if (!pts[i].is_array()) throw ParseError(p + ": expected an array");
        if (static_cast<int>(pts[i].size()) != d)
            throw DimensionError(p + ": has " + std::to_string(pts[i].size()) + " coordinates, d = " + std::to_string(d));
        std::vector<T> pt;
        for (std::size_t c = 0; c < pts[i].size(); ++c)
            pt.push_back(scalar_from_json<T>(pts[i][c], p + "[" + std::to_string(c) + "]"));
        out.push_back(std::move(pt));
    }
    if (n == 0) throw DimensionError(path + ": need at least one point");
    return PointConfiguration<T>(std::move(out));
}

// ---- distance vectors -----------------------------------------------------

/// Exact vectors are written as squared distances under "r2" (their roots
/// are generally irrational); floating vectors as distances under "r".
template <typename T>
Json to_json(const DistanceVector<T>& r) {
    Json entries = Json::object();
    for (const auto& p : r.pair_space().pairs()) {
        if constexpr (ScalarTraits<T>::is_exact) entries[p.label()] = to_json(r.squared(p));
        else entries[p.label()] = std::sqrt(r.squared(p));
    }
    return Json{{"n", r.n()}, {ScalarTraits<T>::is_exact ? "r2" : "r", std::move(entries)}};
}

/// Accepts {"n", "r": {"i,j": distance}} or {"n", "r2": {"i,j": squared}}.
/// Every pair must appear exactly once; keys may list the indices in either order.
template <typename T>
DistanceVector<T> distances_from_json(const Json& j, const std::string& path = "$") {
    const int n = detail::int_field(j, "n", path);
    if (n < 1) throw DimensionError(path + ".n: must be at least 1");
    const bool squared = j.contains("r2");
    const char* key = squared ? "r2" : "r";
    const Json& entries = detail::field(j, key, path);
    if (!entries.is_object()) throw ParseError(path + "." + key + ": expected an object keyed by \"i,j\"");
    const PairSpace space(n);
    std::vector<T> vals(space.size());
    std::vector<bool> seen(space.size(), false);
    for (auto it = entries.begin(); it != entries.end(); ++it) {
        const std::string p = path + "." + key + "[\"" + it.key() + "\"]";
        const auto comma = it.key().find(',');
        int a = 0;
        int b = 0;
        try {
            if (comma == std::string::npos) throw ParseError("no comma");
            a = std::stoi(it.key().substr(0, comma));
            b = std::stoi(it.key().substr(comma + 1));
        } catch (const std::exception&) {
            throw ParseError(p + ": key must have the form \"i,j\"");
        }
        if (a < 1 || b < 1 || a > n || b > n || a == b)
            throw DimensionError(p + ": pair outside 1.." + std::to_string(n));
        const std::size_t k = space.rank(a - 1, b - 1);
        if (seen[k]) throw ParseError(p + ": duplicate pair");
        seen[k] = true;
        vals[k] = scalar_from_json<T>(*it, p);
    }
    for (std::size_t k = 0; k < seen.size(); ++k)
        if (!seen[k]) throw DimensionError(path + "." + key + ": missing pair \"" + space.unrank(k).label() + "\"");
    try {
        return squared ? DistanceVector<T>::from_squared(n, std::move(vals)) : DistanceVector<T>::from_distances(n, vals);
    } catch (const DomainError& e) {
        throw ParseError(path + "." + key + ": " + e.what());
    }
}

// ---- tables and matrices --------------------------------------------------

template <typename T>
Json to_json(const EntryTable<T>& t) {
    Json rows = Json::array();
    for (int i = 0; i < t.n(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < t.n(); ++j) row.push_back(to_json(t(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"n", t.n()}, {"entries", std::move(rows)}};
}

template <typename T>
EntryTable<T> table_from_json(const Json& j, const std::string& path = "$") {
    const int n = detail::int_field(j, "n", path);
    const Json& rows = detail::field(j, "entries", path);
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw DimensionError(path + ".entries: expected " + std::to_string(n) + " rows");
    EntryTable<T> t(n);
    for (int i = 0; i < n; ++i) {
        const Json& row = rows[static_cast<std::size_t>(i)];
        const std::string p = path + ".entries[" + std::to_string(i) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw DimensionError(p + ": expected " + std::to_string(n) + " entries");
        for (int c = 0; c < n; ++c)
            t(i, c) = scalar_from_json<T>(row[static_cast<std::size_t>(c)], p + "[" + std::to_string(c) + "]");
    }
    return t;
}

template <typename T>
Json to_json(const Matrix<T>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    Json out{{"rows", m.rows()}, {"cols", m.cols()}, {"labels", m.labels()}, {"entries", std::move(rows)}};
    if constexpr (std::is_same_v<T, SparsePoly>) {
        if (m.rows() && m.cols() && m(0, 0).vars()) out["vars"] = m(0, 0).vars()->names();
    }
    return out;
}

template <typename T>
Matrix<T> matrix_from_json(const Json& j, const std::string& path = "$") {
    const int rows = detail::int_field(j, "rows", path);
    const int cols = detail::int_field(j, "cols", path);
    const Json& entries = detail::field(j, "entries", path);
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
        throw DimensionError(path + ".entries: expected " + std::to_string(rows) + " rows");
    Matrix<T> m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (int i = 0; i < rows; ++i) {
        const Json& row = entries[static_cast<std::size_t>(i)];
        const std::string p = path + ".entries[" + std::to_string(i) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw DimensionError(p + ": expected " + std::to_string(cols) + " entries");
        for (int c = 0; c < cols; ++c)
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(c)) =
                scalar_from_json<T>(row[static_cast<std::size_t>(c)], p + "[" + std::to_string(c) + "]");
    }
    if (j.contains("labels") && !j["labels"].empty()) m.set_labels(j["labels"].get<std::vector<std::string>>());
    return m;
}

// ---- analysis results ---------------------------------------------------

inline Json to_json(const DefinitenessReport& rep) {
    return Json{{"verdict", to_string(rep.verdict)},
                {"min_eigenvalue", rep.min_eigenvalue},
                {"rank", rep.rank},
                {"tolerance", rep.tolerance},
                {"exact", rep.exact}};
}

inline Json to_json(const ConeReport& rep) {
    return Json{{"region", to_string(rep.region)}, {"base", rep.base + 1}, {"certificate", to_json(rep.definiteness)}};
}

inline Json to_json(const EmbeddingResult& e) {
    Json j = to_json(e.points);
    j["residual"] = e.residual;
    return j;
}

inline Json to_json(const FactorizationCertificate& c) {
    Json factors = Json::array();
    for (const auto& f : c.factors) factors.push_back(f.to_string());
    Json out{{"n", c.n},
             {"lhs_terms", c.lhs.size()},
             {"factors", std::move(factors)},
             {"quotient", c.quotient.to_string()},
             {"verified", c.verified}};
    if (c.lhs.vars()) out["vars"] = c.lhs.vars()->names();
    return out;
}

}  // namespace nbodymat
