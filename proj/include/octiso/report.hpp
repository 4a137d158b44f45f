/** @file report.hpp
 *  Serialization: JSON shapes used by the CLI and tests, plus the flat CSV
 *  rendering. All scalars travel as strings (exact arithmetic, no floats).
 *
 *  form:   {"rank": n, "upper": [[i, j, "coeff"], ...]}   (nonzero entries, i <= j)
 *  triple: {"t1": [[..]], "t2": [[..]], "t3": [[..]]}     (row-major string entries)
 *  vector: ["c0", ..., "c7"]; the CLI accepts the same thing comma-separated.
 */
#pragma once

#include <json.hpp>

#include "octiso/quadform.hpp"
#include "octiso/triality.hpp"

namespace octiso {

using json = nlohmann::ordered_json;

template <scalar_context C>
typename C::elem parse_elem(const C& c, const std::string& text) {
    auto s = c.R->parse_scalar(text);
    if constexpr (std::is_same_v<C, fq_ctx>)
        return c.drop(s);
    else
        return s;
}

template <scalar_context C>
vec<C> parse_vector(const C& c, const std::string& text, int n) {
    vec<C> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        out.push_back(parse_elem(c, piece));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (int(out.size()) != n)
        throw parse_error("expected " + std::to_string(n) + " comma-separated scalars");
    return out;
}

template <scalar_context C>
json vec_json(const C& c, const vec<C>& x) {
    json a = json::array();
    for (const auto& v : x) a.push_back(c.str(v));
    return a;
}

template <scalar_context C>
json mat_json(const C& c, const mat<C>& M) {
    json rows = json::array();
    for (int i = 0; i < M.n; ++i) {
        json row = json::array();
        for (int j = 0; j < M.m; ++j) row.push_back(c.str(M.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <scalar_context C>
json form_json(const C& c, const quad_form<C>& q) {
    json upper = json::array();
    for (int i = 0; i < q.n; ++i)
        for (int j = i; j < q.n; ++j)
            if (!c.is_zero(q.coeff(i, j))) upper.push_back(json::array({i, j, c.str(q.coeff(i, j))}));
    return json{{"rank", q.n}, {"upper", std::move(upper)}};
}

template <scalar_context C>
json triple_json(const C& c, const triple<C>& t) {
    return json{{"t1", mat_json(c, t.t1)}, {"t2", mat_json(c, t.t2)}, {"t3", mat_json(c, t.t3)}};
}

// ---- CSV: depth-first flatten to `path,value` rows ----

namespace detail {

inline void csv_escape_to(std::string& out, const std::string& field) {
    bool needs = field.find_first_of(",\"\n") != std::string::npos;
    if (!needs) {
        out += field;
        return;
    }
    out += '"';
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
}

inline void csv_walk(const json& node, const std::string& path, std::string& out) {
    if (node.is_object()) {
        for (const auto& [k, v] : node.items())
            csv_walk(v, path.empty() ? k : path + "." + k, out);
    } else if (node.is_array()) {
        std::size_t i = 0;
        for (const auto& v : node) csv_walk(v, path + "[" + std::to_string(i++) + "]", out);
    } else {
        csv_escape_to(out, path);
        out += ',';
        if (node.is_string())
            csv_escape_to(out, node.get<std::string>());
        else
            out += node.dump();
        out += '\n';
    }
}

} // namespace detail

inline std::string to_csv(const json& j) {
    std::string out = "key,value\n";
    detail::csv_walk(j, "", out);
    return out;
}

} // namespace octiso
