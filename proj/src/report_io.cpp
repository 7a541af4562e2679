#include "gbent/report_io.hpp"

namespace gbent {

std::string format_witness_table(const GbentReport& report) {
  std::string out;
  for (std::size_t u = 0; u < report.per_u.size(); ++u) {
    const auto& w = report.per_u[u];
    out += std::to_string(u) + ' ';
    if (w.matched) {
      out += std::to_string(w.row) + (w.sign > 0 ? " +1 " : " -1 ");
    } else {
      out += "- - ";
    }
    out += to_string(w.zero_half);
    out.push_back('\n');
  }
  return out;
}

nlohmann::json to_json(const SpectralClass& c) {
  return {{"class", c.to_string()}, {"plateau_order", c.plateau_order()}};
}

nlohmann::json to_json(const WalshSpectrum& w) { return {{"n", w.n}, {"values", w.values}}; }

nlohmann::json to_json(const GwhtSpectrum& h) {
  nlohmann::json values = nlohmann::json::array();
  for (std::uint64_t u = 0; u < h.size(); ++u) {
    const auto c = h.coeffs(u);
    values.push_back(std::vector<std::int64_t>(c.begin(), c.end()));
  }
  return {{"n", h.n()}, {"k", h.k()}, {"basis", "1, z, ..., z^(2^(k-1)-1)"}, {"values", std::move(values)}};
}

nlohmann::json to_json(const GbentReport& report, bool with_witnesses) {
  nlohmann::json j = {{"method", to_string(report.method)},
                      {"n", report.n},
                      {"k", report.k},
                      {"gbent", report.verdict},
                      {"failures", report.failures}};
  if (with_witnesses) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t u = 0; u < report.per_u.size(); ++u) {
      const auto& w = report.per_u[u];
      nlohmann::json row = {{"u", u}, {"matched", w.matched}, {"zero_half", to_string(w.zero_half)}};
      if (w.matched) {
        row["r"] = w.row;
        row["sign"] = w.sign;
      }
      rows.push_back(std::move(row));
    }
    j["witnesses"] = std::move(rows);
  }
  return j;
}

nlohmann::json to_json(const RouteAgreement& routes, bool with_witnesses) {
  return {{"gbent", routes.verdict()},
          {"routes_agree", routes.agree()},
          {"direct", to_json(routes.direct, with_witnesses)},
          {"spectral", to_json(routes.spectral, false)},
          {"quadruple", to_json(routes.quadruple, false)}};
}

nlohmann::json to_json(const BentSpaceReport& report) {
  nlohmann::json j = {{"n", report.n},
                      {"k", report.k},
                      {"affine_space", report.is_affine_bent_space},
                      {"majority_closed", report.mesnager_closed},
                      {"space_is_gbent", report.space_is_gbent()},
                      {"holds", report.holds()}};
  if (report.dual_sum_closed) j["dual_sum_closed"] = *report.dual_sum_closed;
  if (report.split_functional) {
    j["l1_functional"] = *report.split_functional;
    j["l1_basis"] = report.split_basis;
  }
  return j;
}

nlohmann::json to_json(const ZqBentReport& report) {
  nlohmann::json multipliers = nlohmann::json::array();
  for (const auto& [a, ok] : report.per_multiplier) multipliers.push_back({{"a", a}, {"gbent", ok}});
  return {{"zq_bent", report.verdict()},
          {"definition_route", report.route_definition},
          {"truncation_route", report.route_truncation},
          {"multipliers", std::move(multipliers)},
          {"truncations", report.per_truncation}};
}

}  // namespace gbent
