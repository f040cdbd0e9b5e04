#pragma once

#include "digifix/classify.hpp"
#include "digifix/homotopy.hpp"
#include "digifix/map.hpp"
#include "digifix/metric.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace digifix {

using Json = nlohmann::ordered_json;

// Image: {"dim", "points", "adjacency"} where adjacency is
//   {"type": "cu", "u": k}
//   {"type": "custom", "edges": [[i, j], ...]}
//   {"type": "normal_product", "left": <adj>, "right": <adj>, "left_dim": k}
Json adjacency_to_json(const AdjacencySpec& spec);
AdjacencySpec adjacency_from_json(const Json& j);
Json image_to_json(const DigitalImage& image);
DigitalImage image_from_json(const Json& j);

// {"type": "lp", "p": 1 | 2 | "inf"} or {"type": "path"}
Json metric_to_json(const MetricSpec& metric);
MetricSpec metric_from_json(const Json& j);

/// {"domain": <image>, "codomain": <image>, "table": [...]}. When reading,
/// "domain" and "codomain" may also be a path to an image file (relative to
/// `base`), and a missing codomain means a self-map.
Json map_to_json(const DigitalMap& f);
DigitalMap map_from_json(const Json& j, const std::filesystem::path& base = {});

/// Rationals as {"num", "den"}; k sqrt(s) adds "sqrt": s; other values are
/// {"terms": [...]} of such records. Integers that do not fit 64 bits are
/// written as decimal strings.
Json exact_to_json(const ExactReal& value);
ExactReal exact_from_json(const Json& j);

/// A list of map tables.
Json trace_to_json(const HomotopyTrace& trace);
HomotopyTrace trace_from_json(const Json& j, const DigitalImage& image);

Json report_to_json(const ClassificationReport& report);
Json summary_to_json(const HomotopyClassSummary& summary);

/// Parse errors and missing files are reported as Error.
Json read_json_file(const std::filesystem::path& path);

} // namespace digifix
