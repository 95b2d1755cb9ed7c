#pragma once

#include <json.hpp>

#include "wgm/analysis.hpp"
#include "wgm/verify.hpp"

namespace wgm::report {

// JSON documents emitted by the CLI. Field names are stable; every number is
// finite (non-finite values are written as null rather than NaN).

nlohmann::ordered_json to_json(const SystemParams& p);
nlohmann::ordered_json to_json(const Dip& d);
nlohmann::ordered_json to_json(const ContrastMetrics& m);
nlohmann::ordered_json to_json(const RegimeLabel& r);
nlohmann::ordered_json to_json(const CorrespondenceReport& c);
nlohmann::ordered_json to_json(const VerifyResult& v);

}  // namespace wgm::report
