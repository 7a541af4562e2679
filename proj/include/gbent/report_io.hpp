#pragma once

#include <string>

#include <json.hpp>

#include "gbent/analysis.hpp"
#include "gbent/boolfn.hpp"
#include "gbent/gbf.hpp"

namespace gbent {

// One line per u: `u r sign half`, where half is - / low / high.
std::string format_witness_table(const GbentReport& report);

nlohmann::json to_json(const SpectralClass& c);
nlohmann::json to_json(const WalshSpectrum& w);
nlohmann::json to_json(const GwhtSpectrum& h);
nlohmann::json to_json(const GbentReport& report, bool with_witnesses);
nlohmann::json to_json(const RouteAgreement& routes, bool with_witnesses);
nlohmann::json to_json(const BentSpaceReport& report);
nlohmann::json to_json(const ZqBentReport& report);

}  // namespace gbent
