#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pierce/fingerhut.hpp"
#include "pierce/piercing.hpp"

namespace pierce {

// Instance files: { "id": <string, optional>, "points": [[x, y], ...] }.
// Coordinates are written with 17 significant digits, so load(save(inst))
// reproduces every double exactly.
std::string instance_to_json(const Instance& inst);
void save_instance(const Instance& inst, const std::string& path);

// Throws ParseError (malformed JSON or schema, with field context),
// NonFiniteCoordinate, DuplicatePoints, IoError.
Instance load_instance(const std::string& path, Tolerance tol = {});
Instance parse_instance(const std::string& text, const std::string& origin,
                        Tolerance tol = {});

// Edge-list files for externally supplied trees: { "edges": [[i, j], ...] }.
std::vector<std::pair<int, int>> load_edge_list(const std::string& path);

std::string piercing_report_to_json(const PiercingReport& report, int indent = 2);
std::string ratio_report_to_json(const RatioReport& report, int indent = 2);

}  // namespace pierce
