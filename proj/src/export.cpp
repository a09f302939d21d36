#include "anticonc/export.hpp"

#include <ostream>

namespace anticonc {

namespace {

Json context_to_json(const CyclicContext& ctx) {
  Json j;
  if (ctx.is_cyclic()) {
    j["kind"] = "cyclic";
    j["modulus"] = ctx.modulus();
    j["prime"] = ctx.is_prime();
  } else {
    j["kind"] = "integers";
  }
  return j;
}

}  // namespace

Json rational_to_json(const Rational& r) {
  Json j;
  j["num"] = numerator_of(r).str();
  j["den"] = denominator_of(r).str();
  j["float"] = to_double(r);
  return j;
}

Json dist_to_json(const ExactDist& d) {
  Json j;
  j["context"] = context_to_json(d.context());
  j["mode"] = "exact";
  Json mass = Json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.mass()[i] == 0) continue;
    Json entry = rational_to_json(d.mass()[i]);
    entry["x"] = BigInt(d.lo() + static_cast<long>(i)).str();
    mass.push_back(std::move(entry));
  }
  j["mass"] = std::move(mass);
  PointMass<Rational> peak = max_point_prob(d);
  Json max = rational_to_json(peak.probability);
  max["x"] = peak.location.str();
  j["max_point"] = std::move(max);
  return j;
}

Json dist_to_json(const FloatDist& d) {
  Json j;
  j["context"] = context_to_json(d.context());
  j["mode"] = "float";
  Json mass = Json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.mass()[i] == 0.0) continue;
    Json entry;
    entry["float"] = d.mass()[i];
    entry["x"] = BigInt(d.lo() + static_cast<long>(i)).str();
    mass.push_back(std::move(entry));
  }
  j["mass"] = std::move(mass);
  PointMass<double> peak = max_point_prob(d);
  j["max_point"] = {{"float", peak.probability}, {"x", peak.location.str()}};
  return j;
}

void dist_to_csv(std::ostream& out, const ExactDist& d) {
  out.precision(17);
  out << "x,prob_num,prob_den,prob_float\n";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.mass()[i] == 0) continue;
    out << BigInt(d.lo() + static_cast<long>(i)).str() << ','
        << numerator_of(d.mass()[i]).str() << ',' << denominator_of(d.mass()[i]).str()
        << ',' << to_double(d.mass()[i]) << '\n';
  }
}

void dist_to_csv(std::ostream& out, const FloatDist& d) {
  out.precision(17);
  out << "x,prob_num,prob_den,prob_float\n";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.mass()[i] == 0.0) continue;
    out << BigInt(d.lo() + static_cast<long>(i)).str() << ",,," << d.mass()[i] << '\n';
  }
}

void table_to_csv(std::ostream& out, const SubsetSumTable& table) {
  out << "ell,x,count_decimal\n";
  for (unsigned ell = 0; ell <= table.ell_max(); ++ell) {
    const auto& row = table.row(ell);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] == 0) continue;
      out << ell << ',' << BigInt(table.window_lo() + static_cast<long>(i)).str() << ','
          << row[i].str() << '\n';
    }
  }
}

Json constants_to_json(const ConstantsReport& report) {
  Json j;
  j["eps1"] = report.c1.eps1;
  j["eps2"] = report.c1.eps2;
  j["eps3"] = report.c2.eps3;
  j["eps4"] = report.c3.eps4;
  j["eps5"] = report.c3.eps5;
  j["c1"] = report.c1.c1;
  j["c2"] = report.c2.c2;
  j["c3"] = report.c3.c3;
  j["one_minus_c3"] = report.c3.product;
  j["nu"] = report.c3.nu;
  j["residuals"] = {{"c1_surface", report.c1.residual},
                    {"c2_surface", report.c2.residual},
                    {"c3_surface", report.c3.residual}};
  j["solver"] = {{"c1_scan_step", report.c1.scan_step},
                 {"c1_grid_cells", report.c1.grid_cells},
                 {"c1_refine_passes", report.c1.refine_passes},
                 {"c3_scan_step", report.c3.scan_step},
                 {"c3_grid_cells", report.c3.grid_cells},
                 {"c3_refine_passes", report.c3.refine_passes}};
  return j;
}

Json sequencing_to_json(const SequencingResult& result) {
  Json j;
  j["success"] = result.success;
  j["stage"] = result.stage;
  j["trials_used"] = result.trials_used;
  j["used_repair"] = result.used_repair;
  Json ordering = Json::array();
  Json sums = Json::array();
  if (result.ordering) {
    for (const BigInt& v : result.ordering->perm) ordering.push_back(v.str());
    for (const BigInt& s : result.ordering->partial_sums) sums.push_back(s.str());
  }
  j["ordering"] = std::move(ordering);
  j["partial_sums"] = std::move(sums);
  Json violations = Json::array();
  for (const auto& [i, jdx] : result.best_report.violations)
    violations.push_back(Json::array({i, jdx}));
  j["violations"] = std::move(violations);
  return j;
}

}  // namespace anticonc
