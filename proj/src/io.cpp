#include "gsp/io.hpp"

#include <fstream>
#include <sstream>

namespace gsp {

Json NumberStyle::num(const Rat& r) const {
  if (approx) return rat_to_decimal(r, digits);
  return scalar_to_json(r);
}

Json NumberStyle::num(const ExtRat& e) const {
  if (e.is_inf()) return "inf";
  return num(e.finite());
}

Rat scalar_from_json(const Json& v, const std::string& field) {
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_number_unsigned()) return Rat(static_cast<unsigned long>(v.get<std::uint64_t>()));
  if (v.is_number_float())
    throw input_error(field + ": non-integer JSON numbers are inexact; quote the value, e.g. \"1/3\" or \"0.25\"");
  if (v.is_string()) {
    try {
      return rat_from_string(v.get<std::string>());
    } catch (const input_error& e) {
      throw input_error(field + ": " + e.what());
    }
  }
  throw input_error(field + ": expected a number or a numeric string");
}

ExtRat ext_from_json(const Json& v, const std::string& field) {
  if (v.is_string() && v.get<std::string>() == "inf") return ExtRat::infinity();
  return ExtRat(scalar_from_json(v, field));
}

Json scalar_to_json(const Rat& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p())
    return static_cast<std::int64_t>(r.get_num().get_si());
  return rat_to_string(r);
}

Json ext_to_json(const ExtRat& e) {
  if (e.is_inf()) return "inf";
  return scalar_to_json(e.finite());
}

namespace {

int int_field(const Json& doc, const std::string& field) {
  if (!doc.contains(field)) throw input_error("missing field \"" + field + "\"");
  const Json& v = doc.at(field);
  if (!v.is_number_integer() && !v.is_number_unsigned())
    throw input_error(field + ": expected an integer");
  return v.get<int>();
}

std::string cell(const std::string& name, int a, int b) {
  return name + "[" + std::to_string(a + 1) + "][" + std::to_string(b + 1) + "]";
}

}  // namespace

ParsedInstance instance_from_json(const Json& doc) {
  if (!doc.is_object()) throw input_error("instance document must be an object");

  Instance inst;
  inst.n = int_field(doc, "n");
  inst.m = int_field(doc, "m");
  inst.s = int_field(doc, "s");

  if (!doc.contains("values") || !doc.at("values").is_array())
    throw input_error("missing or non-array field \"values\"");
  if (!doc.contains("discounts") || !doc.at("discounts").is_array())
    throw input_error("missing or non-array field \"discounts\"");

  const Json& values = doc.at("values");
  inst.values.resize(values.size());
  for (size_t i = 0; i < values.size(); ++i) {
    if (!values[i].is_array())
      throw input_error("values[" + std::to_string(i + 1) + "]: expected an array");
    for (size_t j = 0; j < values[i].size(); ++j)
      inst.values[i].push_back(scalar_from_json(values[i][j], cell("values", i, j)));
  }

  const Json& discounts = doc.at("discounts");
  inst.discounts.resize(discounts.size());
  for (size_t j = 0; j < discounts.size(); ++j) {
    if (!discounts[j].is_array())
      throw input_error("discounts[" + std::to_string(j + 1) + "]: expected an array");
    for (size_t k = 0; k < discounts[j].size(); ++k)
      inst.discounts[j].push_back(scalar_from_json(discounts[j][k], cell("discounts", j, k)));
  }

  ParsedInstance out;
  out.instance = validate_instance(std::move(inst));

  if (doc.contains("bids")) {
    const Json& bids = doc.at("bids");
    if (!bids.is_array()) throw input_error("bids: expected an array");
    BidProfile profile;
    profile.bids.resize(bids.size());
    for (size_t i = 0; i < bids.size(); ++i) {
      if (!bids[i].is_array())
        throw input_error("bids[" + std::to_string(i + 1) + "]: expected an array");
      for (size_t j = 0; j < bids[i].size(); ++j)
        profile.bids[i].push_back(ext_from_json(bids[i][j], cell("bids", i, j)));
    }
    check_bid_profile(out.instance, profile);
    out.bids = std::move(profile);
  }
  return out;
}

Json instance_to_json(const Instance& inst, const BidProfile* bids) {
  Json doc;
  doc["n"] = inst.n;
  doc["m"] = inst.m;
  doc["s"] = inst.s;
  doc["values"] = Json::array();
  for (const auto& row : inst.values) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(scalar_to_json(v));
    doc["values"].push_back(std::move(r));
  }
  doc["discounts"] = Json::array();
  for (const auto& row : inst.discounts) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(scalar_to_json(v));
    doc["discounts"].push_back(std::move(r));
  }
  if (bids) {
    doc["bids"] = Json::array();
    for (const auto& row : bids->bids) {
      Json r = Json::array();
      for (const auto& b : row) r.push_back(ext_to_json(b));
      doc["bids"].push_back(std::move(r));
    }
  }
  return doc;
}

ParsedInstance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open \"" + path + "\"");
  Json doc;
  try {
    in >> doc;
  } catch (const Json::parse_error& e) {
    throw input_error("\"" + path + "\": " + e.what());
  }
  return instance_from_json(doc);
}

std::string render_json(const Json& doc) { return doc.dump(2) + "\n"; }

void save_text(const std::string& text, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write \"" + path + "\"");
  out << text;
}

Json summary_to_json(const WelfareSummary& ws, const NumberStyle& style) {
  Json doc;
  doc["total_value"] = style.num(ws.total_value);
  doc["total_payment"] = style.num(ws.total_payment);
  doc["total_proxy_value"] = style.num(ws.total_proxy_value);
  doc["opt_total"] = style.num(ws.opt_total);
  doc["welfare_ratio"] = style.num(ws.welfare_ratio);
  return doc;
}

Json equilibrium_report_to_json(const EquilibriumReport& er, const NumberStyle& style) {
  Json doc;
  doc["tolerance"] = style.num(er.tolerance);
  doc["verdict"] = er.verdict;
  doc["bidders"] = Json::array();
  for (size_t i = 0; i < er.bidders.size(); ++i) {
    const BidderReport& b = er.bidders[i];
    Json row;
    row["bidder"] = i + 1;
    row["current_value"] = style.num(b.current_value);
    row["current_payment"] = style.num(b.current_payment);
    row["best_response_value"] = style.num(b.best_response_value);
    row["gap"] = style.num(b.gap);
    row["roi_slack"] = style.num(b.roi_slack);
    doc["bidders"].push_back(std::move(row));
  }
  return doc;
}

namespace {

Json point_to_json(const ParetoPoint& p, const NumberStyle& style) {
  Json doc;
  doc["auction"] = p.auction + 1;
  doc["slot"] = p.slot;
  doc["x"] = style.num(p.x);
  doc["y"] = style.num(p.y);
  return doc;
}

}  // namespace

Json bound_report_to_json(const BoundReport& br, const NumberStyle& style) {
  Json doc;
  doc["closed_form"] = style.num(br.closed_form);
  doc["simplified"] = style.num(br.simplified);
  doc["j0"] = br.j0 + 1;
  doc["j_star"] = br.j_star + 1;
  doc["k_star"] = br.k_star;
  doc["agreement"] = br.agreement;
  Json w;
  w["t_star"] = style.num(br.witness.t_star);
  w["hull"] = Json::array();
  for (const auto& p : br.witness.hull) w["hull"].push_back(point_to_json(p, style));
  w["segment"] = Json::array({point_to_json(br.witness.seg_a, style),
                              point_to_json(br.witness.seg_b, style)});
  w["weights"] = Json::array({style.num(br.witness.weight_a), style.num(br.witness.weight_b)});
  doc["witness"] = std::move(w);
  return doc;
}

Json certificate_to_json(const ChargingCertificate& cert, const CertificateVerdict& verdict,
                         const NumberStyle& style) {
  Json doc;
  doc["auction"] = cert.auction + 1;
  doc["case"] = std::string(1, cert.case_tag);
  doc["k"] = cert.k;
  doc["alpha"] = style.num(cert.alpha);
  doc["r"] = Json::array({style.num(cert.r1), style.num(cert.r2)});
  doc["q"] = Json::array({style.num(cert.q1), style.num(cert.q2)});
  doc["opt"] = style.num(cert.opt_j);
  doc["sum_pval"] = style.num(cert.sum_pval);
  doc["sum_payment"] = style.num(cert.sum_pay);
  doc["value_order"] = Json::array();
  for (int i : cert.value_order) doc["value_order"].push_back(i + 1);
  doc["ledger"] = Json::array();
  for (const auto& e : cert.ledger) {
    Json row;
    row["label"] = e.label;
    row["lhs"] = style.num(e.lhs);
    row["rhs"] = style.num(e.rhs);
    row["holds"] = !(e.lhs < ExtRat(e.rhs));
    doc["ledger"].push_back(std::move(row));
  }
  doc["charges"] = Json::array();
  for (const auto& c : cert.charges) {
    Json row;
    row["value_rank"] = c.value_rank;
    row["column"] = c.column;
    row["row"] = c.row;
    row["amount"] = style.num(c.amount);
    doc["charges"].push_back(std::move(row));
  }
  doc["valid"] = verdict.ok;
  if (!verdict.ok) doc["failure"] = verdict.first_failure;
  return doc;
}

Json search_report_to_json(const SearchReport& sr, const NumberStyle& style, size_t max_listed) {
  Json doc;
  doc["profiles_scanned"] = sr.profiles_scanned;
  doc["bound"] = style.num(sr.bound);
  doc["equilibria_found"] = sr.equilibria.size();
  doc["min_ratio"] = sr.has_min_ratio ? style.num(sr.min_ratio) : Json(nullptr);
  doc["dominance"] = sr.dominance;
  doc["equilibria"] = Json::array();
  for (size_t t = 0; t < sr.equilibria.size() && t < max_listed; ++t) {
    const FoundEquilibrium& fe = sr.equilibria[t];
    Json row;
    row["profile_id"] = fe.profile_id;
    row["welfare_ratio"] = style.num(fe.welfare_ratio);
    row["bids"] = Json::array();
    for (const auto& bid_row : fe.bids.bids) {
      Json r = Json::array();
      for (const auto& b : bid_row) r.push_back(style.num(b));
      row["bids"].push_back(std::move(r));
    }
    doc["equilibria"].push_back(std::move(row));
  }
  if (sr.equilibria.size() > max_listed) doc["equilibria_truncated"] = true;
  return doc;
}

namespace {

double approx(const Rat& r) { return mpq_get_d(r.get_mpq_t()); }

struct SvgMapper {
  double px(const Rat& x) const { return 60.0 + approx(x) * 520.0; }
  double py(const Rat& y) const { return 580.0 - approx(y) * 520.0; }
};

}  // namespace

std::string envelope_svg(const std::vector<ParetoPoint>& points, const EnvelopeWitness& witness) {
  SvgMapper map;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
         "viewBox=\"0 0 640 640\">\n";
  svg << "  <rect width=\"640\" height=\"640\" fill=\"white\"/>\n";
  // axes
  svg << "  <line x1=\"" << map.px(Rat(0)) << "\" y1=\"" << map.py(Rat(0)) << "\" x2=\""
      << map.px(Rat(1)) << "\" y2=\"" << map.py(Rat(0)) << "\" stroke=\"black\"/>\n";
  svg << "  <line x1=\"" << map.px(Rat(0)) << "\" y1=\"" << map.py(Rat(0)) << "\" x2=\""
      << map.px(Rat(0)) << "\" y2=\"" << map.py(Rat(1)) << "\" stroke=\"black\"/>\n";
  // simplex x + y = 1 and the diagonal x = y
  svg << "  <line x1=\"" << map.px(Rat(1)) << "\" y1=\"" << map.py(Rat(0)) << "\" x2=\""
      << map.px(Rat(0)) << "\" y2=\"" << map.py(Rat(1))
      << "\" stroke=\"#888\" stroke-dasharray=\"6 3\"/>\n";
  svg << "  <line x1=\"" << map.px(Rat(0)) << "\" y1=\"" << map.py(Rat(0)) << "\" x2=\""
      << map.px(Rat(1)) << "\" y2=\"" << map.py(Rat(1))
      << "\" stroke=\"#888\" stroke-dasharray=\"2 3\"/>\n";
  // hull chain
  if (witness.hull.size() >= 2) {
    svg << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
    for (const auto& p : witness.hull) svg << map.px(p.x) << "," << map.py(p.y) << " ";
    svg << "\"/>\n";
  }
  // points with origin labels
  for (const auto& p : points) {
    svg << "  <circle cx=\"" << map.px(p.x) << "\" cy=\"" << map.py(p.y)
        << "\" r=\"4\" fill=\"#d62728\"/>\n";
    svg << "  <text x=\"" << map.px(p.x) + 6 << "\" y=\"" << map.py(p.y) - 6
        << "\" font-size=\"11\">q(" << p.auction + 1 << "," << p.slot << ")</text>\n";
  }
  // intersection marker
  svg << "  <circle cx=\"" << map.px(witness.t_star) << "\" cy=\"" << map.py(witness.t_star)
      << "\" r=\"6\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"2\"/>\n";
  svg << "  <text x=\"" << map.px(witness.t_star) + 8 << "\" y=\"" << map.py(witness.t_star) + 14
      << "\" font-size=\"12\">t* = " << rat_to_string(witness.t_star) << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

std::string points_csv(const std::vector<ParetoPoint>& points) {
  std::ostringstream csv;
  csv << "auction,slot,x,y\n";
  for (const auto& p : points)
    csv << p.auction + 1 << "," << p.slot << "," << rat_to_string(p.x) << ","
        << rat_to_string(p.y) << "\n";
  return csv.str();
}

std::string ratios_csv(const SearchReport& report) {
  std::ostringstream csv;
  csv << "profile_id,welfare_ratio\n";
  for (const auto& fe : report.equilibria)
    csv << fe.profile_id << "," << rat_to_string(fe.welfare_ratio) << "\n";
  return csv.str();
}

}  // namespace gsp
