#include "latt/json_io.hpp"

#include "latt/errors.hpp"

namespace latt {

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (!j.is_string())
        throw ParseError("rational values must be strings like \"-3/7\"");
    return Rational::parse(j.get<std::string>());
}

Json matrix_to_json(const RatMatrix& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& v : row)
            r.push_back(rational_to_json(v));
        rows.push_back(std::move(r));
    }
    return rows;
}

RatMatrix matrix_from_json(const Json& j) {
    if (!j.is_array())
        throw ParseError("matrix must be an array of rows");
    RatMatrix m;
    for (const auto& row : j) {
        if (!row.is_array())
            throw ParseError("matrix row must be an array");
        RatVector r;
        for (const auto& v : row)
            r.push_back(rational_from_json(v));
        m.push_back(std::move(r));
    }
    return m;
}

Json coords_to_json(const std::vector<std::string>& labels, const RatVector& values) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < labels.size(); ++i)
        obj[labels[i]] = rational_to_json(values[i]);
    return obj;
}

RatVector coords_from_json(const std::vector<std::string>& labels, const Json& j) {
    if (!j.is_object())
        throw ParseError("coordinates must be an object {label: \"p/q\"}");
    if (j.size() != labels.size())
        throw LabelMismatch("coordinates must cover exactly the ambient labels");
    RatVector values(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto it = j.find(labels[i]);
        if (it == j.end())
            throw LabelMismatch("missing coordinate for label \"" + labels[i] + "\"");
        values[i] = rational_from_json(*it);
    }
    return values;
}

Subspace subspace_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("labels") || !j.contains("basis"))
        throw ParseError("expected an object with \"labels\" and \"basis\"");
    if (!j["labels"].is_array())
        throw ParseError("\"labels\" must be an array of strings");
    std::vector<std::string> labels;
    for (const auto& l : j["labels"]) {
        if (!l.is_string())
            throw ParseError("labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    return Subspace::span(std::move(labels), matrix_from_json(j["basis"]));
}

Json subspace_to_json(const Subspace& s) {
    Json out = Json::object();
    out["labels"] = s.labels();
    out["basis"] = matrix_to_json(s.basis());
    return out;
}

Json constraint_to_json(const std::vector<std::string>& labels, const Constraint& c) {
    Json out = Json::object();
    if (c.kind == Constraint::Kind::PointVanish) {
        out["kind"] = "vanish";
        out["s"] = labels[c.s];
    } else {
        out["kind"] = "prop";
        out["s"] = labels[c.s];
        out["t"] = labels[c.t];
        out["alpha"] = rational_to_json(c.alpha);
    }
    return out;
}

Json constraint_to_json(const ConstraintSet& cs, const Constraint& c) {
    return constraint_to_json(cs.labels, c);
}

Json constraints_to_json(const std::vector<std::string>& labels,
                         const std::vector<Constraint>& constraints) {
    Json arr = Json::array();
    for (const auto& c : constraints)
        arr.push_back(constraint_to_json(labels, c));
    return arr;
}

Json constraints_to_json(const ConstraintSet& cs) {
    return constraints_to_json(cs.labels, cs.constraints);
}

Json ideal_to_json(const IdealDescriptor& j) {
    Json out = Json::object();
    out["zero_set"] = j.zero_set_labels();
    return out;
}

Json pl_to_json(const PLFunction& f) {
    Json out = Json::object();
    Json bps = Json::array();
    for (const auto& b : f.breakpoints())
        bps.push_back(rational_to_json(b));
    Json vals = Json::array();
    for (const auto& v : f.values())
        vals.push_back(rational_to_json(v));
    out["breakpoints"] = std::move(bps);
    out["values"] = std::move(vals);
    return out;
}

PLFunction pl_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("breakpoints") || !j.contains("values"))
        throw ParseError("expected an object with \"breakpoints\" and \"values\"");
    std::vector<Rational> bps;
    for (const auto& b : j["breakpoints"])
        bps.push_back(rational_from_json(b));
    std::vector<Rational> vals;
    for (const auto& v : j["values"])
        vals.push_back(rational_from_json(v));
    return PLFunction(std::move(bps), std::move(vals));
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace latt
