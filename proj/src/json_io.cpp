#include "toralpha/json_io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "toralpha/errors.hpp"

using nlohmann::json;

namespace toralpha {

namespace {

Int json_int(const json& j, const char* what) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return parse_integer(j.get<std::string>());
    throw ParseError(std::string("expected integer for ") + what);
}

Rat json_rat(const json& j, const char* what) {
    if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError(std::string("expected rational string for ") + what);
}

IntVector json_int_vector(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string("expected array for ") + what);
    IntVector v(static_cast<Eigen::Index>(j.size()));
    for (size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = json_int(j[i], what);
    return v;
}

IntMatrix json_int_matrix(const json& j, const char* what) {
    if (!j.is_array() || j.empty()) throw ParseError(std::string("expected matrix for ") + what);
    const size_t rows = j.size();
    const size_t cols = j[0].is_array() ? j[0].size() : 0;
    IntMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw ParseError(std::string("ragged matrix for ") + what);
        for (size_t k = 0; k < cols; ++k)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = json_int(j[i][k], what);
    }
    return m;
}

}  // namespace

JobDocument parse_job_document(const json& doc) {
    if (!doc.is_object()) throw ParseError("document root must be an object");
    JobDocument job;
    if (!doc.contains("dimension") || !doc.contains("rays") || !doc.contains("max_cones"))
        throw ParseError("document requires dimension, rays and max_cones");
    job.fan.dimension = doc.at("dimension").get<int>();
    for (const auto& ray : doc.at("rays")) job.fan.rays.push_back(json_int_vector(ray, "ray"));
    for (const auto& cone : doc.at("max_cones")) {
        if (!cone.is_array()) throw ParseError("max_cones entries must be arrays");
        std::vector<int> c = cone.get<std::vector<int>>();
        std::sort(c.begin(), c.end());
        job.fan.max_cones.push_back(std::move(c));
    }
    if (doc.contains("divisor")) {
        for (const auto& a : doc.at("divisor")) job.divisor.push_back(json_int(a, "divisor"));
        if (job.divisor.size() != job.fan.rays.size())
            throw ParseError("divisor coefficient count does not match ray count");
    }
    if (doc.contains("group")) {
        GroupSpec spec;
        const auto& g = doc.at("group");
        if (g.is_string() && g.get<std::string>() == "full") {
            spec.full = true;
        } else if (g.is_array()) {
            for (const auto& m : g) spec.matrices.push_back(json_int_matrix(m, "group element"));
        } else {
            throw ParseError("group must be \"full\" or a list of matrices");
        }
        job.group = std::move(spec);
    }
    return job;
}

JobDocument load_job_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("JSON parse error in ") + path + ": " + e.what());
    }
    return parse_job_document(doc);
}

ToricDivisor resolve_divisor(const JobDocument& job) {
    if (job.divisor.empty()) return anticanonical(job.fan);
    return ToricDivisor{&job.fan, job.divisor};
}

SymmetryGroup resolve_group(const Fan& fan, const std::optional<GroupSpec>& spec) {
    if (!spec) return validate_subgroup(fan, {});
    if (spec->full) return automorphism_group(fan);
    return validate_subgroup(fan, spec->matrices);
}

RatVector parse_point(const std::string& text, int dimension) {
    std::vector<Rat> coords;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) coords.push_back(parse_rational(item));
    if (static_cast<int>(coords.size()) != dimension)
        throw ParseError("point has " + std::to_string(coords.size()) + " coordinates, expected " +
                         std::to_string(dimension));
    RatVector p(dimension);
    for (int i = 0; i < dimension; ++i) p(i) = coords[static_cast<size_t>(i)];
    return p;
}

std::vector<IntVector> load_section_points(const std::string& path, int dimension) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("JSON parse error in ") + path + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("points"))
        throw ParseError("sections file requires a points array");
    std::vector<IntVector> points;
    for (const auto& p : doc.at("points")) {
        IntVector v = json_int_vector(p, "section point");
        if (v.size() != dimension) throw ParseError("section point has wrong dimension");
        points.push_back(std::move(v));
    }
    return points;
}

json to_json(const RatVector& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(format_rational(v(i)));
    return arr;
}

json to_json(const LctValue& lct) {
    if (lct.infinite) return json{{"lct", "inf"}};
    return json{{"lct", format_rational(lct.value)},
                {"witness", {{"vertex", to_json(lct.witness_vertex)}, {"ray", lct.witness_ray}}}};
}

json to_json(const AlphaResult& result) {
    json table = json::array();
    for (const auto& [vertex, lct] : result.per_vertex_table) {
        table.push_back({{"vertex", to_json(vertex)}, {"lct", to_json(lct)}});
    }
    return json{{"alpha", format_rational(result.alpha)},
                {"minimizing_point", to_json(result.minimizing_point)},
                {"per_vertex_table", table}};
}

json to_json(const SymmetryGroup& group) {
    json elements = json::array();
    for (const auto& g : group.elements) {
        json matrix = json::array();
        for (Eigen::Index i = 0; i < g.matrix.rows(); ++i) {
            json row = json::array();
            for (Eigen::Index j = 0; j < g.matrix.cols(); ++j) row.push_back(g.matrix(i, j).convert_to<long long>());
            matrix.push_back(row);
        }
        elements.push_back({{"matrix", matrix}, {"ray_permutation", g.ray_permutation}});
    }
    return json{{"order", group.order()}, {"elements", elements}};
}

json to_json(const Fan& fan) {
    json rays = json::array();
    for (const auto& u : fan.rays) {
        json ray = json::array();
        for (Eigen::Index i = 0; i < u.size(); ++i) ray.push_back(u(i).convert_to<long long>());
        rays.push_back(ray);
    }
    return json{{"dimension", fan.dimension}, {"rays", rays}, {"max_cones", fan.max_cones}};
}

}  // namespace toralpha
