#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "gsp/charging.hpp"
#include "gsp/equilibrium.hpp"
#include "gsp/factory.hpp"
#include "gsp/pareto.hpp"
#include "gsp/search.hpp"

namespace gsp {

using Json = nlohmann::json;

// Numeric rendering for reports: exact "p/q" strings by default, decimal
// strings under --approx. Parsing always stays exact.
struct NumberStyle {
  bool approx = false;
  int digits = 6;

  Json num(const Rat& r) const;
  Json num(const ExtRat& e) const;
};

Rat scalar_from_json(const Json& v, const std::string& field);
ExtRat ext_from_json(const Json& v, const std::string& field);
Json scalar_to_json(const Rat& r);
Json ext_to_json(const ExtRat& e);

struct ParsedInstance {
  Instance instance;
  std::optional<BidProfile> bids;
};

ParsedInstance instance_from_json(const Json& doc);
Json instance_to_json(const Instance& inst, const BidProfile* bids = nullptr);
ParsedInstance load_instance_file(const std::string& path);

std::string render_json(const Json& doc);
void save_text(const std::string& text, const std::string& path);

Json summary_to_json(const WelfareSummary& ws, const NumberStyle& style = {});
Json equilibrium_report_to_json(const EquilibriumReport& er, const NumberStyle& style = {});
Json bound_report_to_json(const BoundReport& br, const NumberStyle& style = {});
Json certificate_to_json(const ChargingCertificate& cert, const CertificateVerdict& verdict,
                         const NumberStyle& style = {});
Json search_report_to_json(const SearchReport& sr, const NumberStyle& style = {},
                           size_t max_listed = 20);

// Display artifacts (doubles are fine here; nothing feeds a verdict).
std::string envelope_svg(const std::vector<ParetoPoint>& points, const EnvelopeWitness& witness);
std::string points_csv(const std::vector<ParetoPoint>& points);
std::string ratios_csv(const SearchReport& report);

}  // namespace gsp
