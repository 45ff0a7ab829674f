#include "pierce/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pierce {
namespace {

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

nlohmann::json edge_json(const Edge& e) {
    return {{"i", e.i}, {"j", e.j}, {"weight", e.weight}};
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
    std::ostringstream out;
    out << "{\n  \"id\": " << nlohmann::json(inst.id).dump() << ",\n  \"points\": [";
    for (std::size_t k = 0; k < inst.points.size(); ++k) {
        if (k) out << ", ";
        out << "[" << fmt17(inst.points[k].x) << ", " << fmt17(inst.points[k].y) << "]";
    }
    out << "]\n}\n";
    return out.str();
}

void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << instance_to_json(inst);
    if (!out) throw IoError("write failed for '" + path + "'");
}

Instance parse_instance(const std::string& text, const std::string& origin, Tolerance tol) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(origin + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
        throw ParseError(origin + ": expected an object with a \"points\" array");

    std::string id;
    if (doc.contains("id")) {
        if (!doc["id"].is_string()) throw ParseError(origin + ": \"id\" must be a string");
        id = doc["id"].get<std::string>();
    }

    std::vector<Point> pts;
    pts.reserve(doc["points"].size());
    std::size_t k = 0;
    for (const auto& entry : doc["points"]) {
        const std::string where = origin + ": points[" + std::to_string(k) + "]";
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number())
            throw ParseError(where + " must be a pair of numbers");
        const Point p{entry[0].get<double>(), entry[1].get<double>()};
        if (!finite(p)) throw NonFiniteCoordinate(where + " is not finite");
        pts.push_back(p);
        ++k;
    }
    return make_instance(std::move(pts), std::move(id), tol);
}

Instance load_instance(const std::string& path, Tolerance tol) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str(), path, tol);
}

std::vector<std::pair<int, int>> load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array())
        throw ParseError(path + ": expected an object with an \"edges\" array");
    std::vector<std::pair<int, int>> edges;
    for (const auto& entry : doc["edges"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer())
            throw ParseError(path + ": each edge must be a pair of indices");
        edges.emplace_back(entry[0].get<int>(), entry[1].get<int>());
    }
    return edges;
}

std::string piercing_report_to_json(const PiercingReport& report, int indent) {
    nlohmann::json doc;
    doc["id"] = report.instance_id;
    doc["tree"] = {{"total_weight", report.tree.total_weight},
                   {"edges", nlohmann::json::array()}};
    for (const Edge& e : report.tree.edges) doc["tree"]["edges"].push_back(edge_json(e));
    doc["circle"] = {{"center", {report.circle.center.x, report.circle.center.y}},
                     {"radius", report.circle.radius}};
    doc["edges"] = nlohmann::json::array();
    for (const EdgeRecord& rec : report.edges)
        doc["edges"].push_back({{"i", rec.edge.i},
                                {"j", rec.edge.j},
                                {"weight", rec.edge.weight},
                                {"angle", rec.angle},
                                {"dot_slack", rec.dot_slack},
                                {"contains_center", rec.contains_center}});
    doc["min_angle"] = report.min_angle;
    doc["verdict"] = report.verdict;
    return doc.dump(indent);
}

std::string ratio_report_to_json(const RatioReport& report, int indent) {
    nlohmann::json doc;
    doc["id"] = report.instance_id;
    doc["edges"] = nlohmann::json::array();
    for (std::size_t k = 0; k < report.edges.size(); ++k) {
        nlohmann::json e = edge_json(report.edges[k]);
        e["ratio_at_center"] = report.per_edge_at_center[k];
        if (report.has_optimal) e["ratio_at_optimal"] = report.per_edge_at_optimal[k];
        doc["edges"].push_back(e);
    }
    doc["ratio_at_center"] = report.ratio_at_center;
    if (report.has_optimal) {
        doc["optimal"] = {{"point", {report.optimal.point.x, report.optimal.point.y}},
                          {"ratio", report.optimal.ratio},
                          {"converged", report.optimal.converged},
                          {"evaluations", report.optimal.evaluations},
                          {"final_step", report.optimal.final_step}};
    }
    return doc.dump(indent);
}

}  // namespace pierce
