#include "excy/document.hpp"

#include <set>
#include <sstream>

namespace excy::doc {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const char* verdict_tag(hypersurface::Verdict v) {
  switch (v) {
    case hypersurface::Verdict::well_formed: return "true";
    case hypersurface::Verdict::not_well_formed: return "false";
    case hypersurface::Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

hypersurface::Verdict verdict_from_tag(const std::string& tag) {
  if (tag == "true") return hypersurface::Verdict::well_formed;
  if (tag == "false") return hypersurface::Verdict::not_well_formed;
  if (tag == "inconclusive") return hypersurface::Verdict::inconclusive;
  throw std::invalid_argument("unknown well-formedness verdict: " + tag);
}

std::string rat_str(const Rat& v) { return v.get_str(); }

// letter used in the X_d-style display line
char surface_letter(families::Family f) {
  switch (f) {
    case families::Family::esser_mld:
    case families::Family::large_index: return 'V';
    case families::Family::index1_cover: return 'W';
    default: return 'X';
  }
}

}  // namespace

std::string equation_string(const hypersurface::WeightedHypersurface& h) {
  std::ostringstream out;
  bool first_mono = true;
  for (const auto& m : h.monomials) {
    if (!first_mono) out << " + ";
    first_mono = false;
    std::vector<size_t> support;
    for (size_t j = 0; j < m.exponents.size(); ++j)
      if (m.exponents[j] != 0) support.push_back(j);
    // x_i^b x_j monomials print head first, like the displayed equations;
    // for x_i x_j the head is the later variable (the loop orientation)
    if (support.size() == 2 && m.exponents[support[0]] == 1)
      std::swap(support[0], support[1]);
    bool first_var = true;
    for (size_t j : support) {
      if (!first_var) out << "*";
      first_var = false;
      out << "x" << j;
      if (m.exponents[j] != 1) out << "^" << m.exponents[j].get_str();
    }
  }
  return out.str();
}

ordered_json render_json(const families::FamilyRecord& rec) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["family"] = families::family_tag(rec.family);
  j["dimension"] = rec.dim;
  if (rec.hsurf) {
    ordered_json h;
    h["degree"] = rec.hsurf->degree.get_str();
    ordered_json weights = ordered_json::array();
    for (const Int& w : rec.hsurf->weights) weights.push_back(w.get_str());
    h["weights"] = std::move(weights);
    ordered_json monos = ordered_json::array();
    for (const auto& m : rec.hsurf->monomials) {
      ordered_json row = ordered_json::array();
      for (const Int& e : m.exponents) row.push_back(e.get_str());
      monos.push_back(std::move(row));
    }
    h["monomials"] = std::move(monos);
    h["equation"] = equation_string(*rec.hsurf);
    j["hypersurface"] = std::move(h);
    ordered_json wf;
    wf["space"] = verdict_tag(rec.space_verdict);
    wf["hypersurface"] = verdict_tag(rec.surface_verdict);
    j["well_formed"] = std::move(wf);
  }
  if (rec.boundary) {
    ordered_json b;
    b["variable"] = rec.boundary->variable;
    b["coefficient"] = rat_str(rec.boundary->coefficient);
    j["boundary"] = std::move(b);
  }
  if (!rec.pair_coefficients.empty()) {
    ordered_json coeffs = ordered_json::array();
    for (const Rat& c : rec.pair_coefficients) coeffs.push_back(rat_str(c));
    j["pair_coefficients"] = std::move(coeffs);
  }
  ordered_json inv;
  for (const auto& [key, value] : rec.ints) inv[key] = value.get_str();
  for (const auto& [key, value] : rec.rats) inv[key] = rat_str(value);
  j["invariants"] = std::move(inv);
  if (rec.action_weights) {
    ordered_json aw = ordered_json::array();
    for (const Int& a : *rec.action_weights) aw.push_back(a.get_str());
    j["action_weights"] = std::move(aw);
  }
  ordered_json approx;
  for (const auto& [key, value] : rec.rats)
    if (value > 0) approx[key] = sci_string(value);
  if (!approx.empty()) j["approx"] = std::move(approx);
  return j;
}

families::FamilyRecord parse_json(const json& j) {
  if (!j.contains("schema_version") || j.at("schema_version").get<std::string>() != kSchemaVersion)
    throw std::invalid_argument("document: missing or unsupported schema_version");
  families::FamilyRecord rec;
  auto fam = families::family_from_tag(j.at("family").get<std::string>());
  if (!fam) throw std::invalid_argument("document: unknown family tag");
  rec.family = *fam;
  rec.dim = j.at("dimension").get<int>();
  if (j.contains("hypersurface")) {
    const json& h = j.at("hypersurface");
    hypersurface::WeightedHypersurface surf;
    surf.degree = Int(h.at("degree").get<std::string>());
    for (const auto& w : h.at("weights")) surf.weights.emplace_back(w.get<std::string>());
    for (const auto& row : h.at("monomials")) {
      hypersurface::Monomial m;
      for (const auto& e : row) m.exponents.emplace_back(e.get<std::string>());
      surf.monomials.push_back(std::move(m));
    }
    surf.dim = rec.dim;
    rec.hsurf = std::move(surf);
    rec.space_verdict = verdict_from_tag(j.at("well_formed").at("space").get<std::string>());
    rec.surface_verdict =
        verdict_from_tag(j.at("well_formed").at("hypersurface").get<std::string>());
  }
  if (j.contains("boundary")) {
    rec.boundary = families::Boundary{j.at("boundary").at("variable").get<int>(),
                                      parse_rat(j.at("boundary").at("coefficient").get<std::string>())};
  }
  if (j.contains("pair_coefficients"))
    for (const auto& c : j.at("pair_coefficients"))
      rec.pair_coefficients.push_back(parse_rat(c.get<std::string>()));
  static const std::set<std::string> rational_keys{"volume", "mld"};
  for (const auto& [key, value] : j.at("invariants").items()) {
    if (rational_keys.count(key))
      rec.rats[key] = parse_rat(value.get<std::string>());
    else
      rec.ints[key] = Int(value.get<std::string>());
  }
  if (j.contains("action_weights")) {
    std::vector<Int> aw;
    for (const auto& a : j.at("action_weights")) aw.emplace_back(a.get<std::string>());
    rec.action_weights = std::move(aw);
  }
  return rec;
}

std::string render_text(const families::FamilyRecord& rec) {
  std::ostringstream out;
  out << "family: " << families::family_tag(rec.family) << "\n";
  out << "dimension: " << rec.dim << "\n";
  if (rec.hsurf) {
    out << surface_letter(rec.family) << "_" << rec.hsurf->degree.get_str() << " in P(";
    for (size_t i = 0; i < rec.hsurf->weights.size(); ++i) {
      if (i) out << ",";
      out << rec.hsurf->weights[i].get_str();
    }
    out << ")\n";
    out << "  0 = " << equation_string(*rec.hsurf) << "\n";
    out << "well-formed: space " << verdict_tag(rec.space_verdict) << ", hypersurface "
        << verdict_tag(rec.surface_verdict) << "\n";
  }
  if (!rec.pair_coefficients.empty()) {
    out << "pair: (P^" << rec.dim << ", ";
    for (size_t i = 0; i < rec.pair_coefficients.size(); ++i) {
      if (i) out << " + ";
      out << rec.pair_coefficients[i].get_str() << " H" << i;
    }
    out << ")\n";
  }
  if (rec.boundary) {
    out << "boundary: coefficient " << rec.boundary->coefficient.get_str() << " on {x"
        << rec.boundary->variable << " = 0}\n";
  }
  if (!rec.ints.empty() || !rec.rats.empty()) {
    out << "invariants:\n";
    size_t width = 0;
    for (const auto& [key, value] : rec.ints) width = std::max(width, key.size());
    for (const auto& [key, value] : rec.rats) width = std::max(width, key.size());
    for (const auto& [key, value] : rec.ints)
      out << "  " << key << std::string(width - key.size(), ' ') << " = " << value.get_str()
          << "\n";
    for (const auto& [key, value] : rec.rats) {
      out << "  " << key << std::string(width - key.size(), ' ') << " = " << value.get_str();
      if (value > 0) out << "  (~" << sci_string(value) << ")";
      out << "\n";
    }
  }
  if (rec.action_weights) {
    out << "action weights: (";
    for (size_t i = 0; i < rec.action_weights->size(); ++i) {
      if (i) out << ",";
      out << (*rec.action_weights)[i].get_str();
    }
    out << ")\n";
  }
  return out.str();
}

namespace {

const char* status_tag(verify::Status s) {
  switch (s) {
    case verify::Status::pass: return "PASS";
    case verify::Status::fail: return "FAIL";
    case verify::Status::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

}  // namespace

ordered_json report_json(const verify::VerificationReport& report) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["suite"] = report.suite;
  j["range"] = report.parameter_range;
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json e;
    e["name"] = c.name;
    e["params"] = c.params;
    e["status"] = status_tag(c.status);
    if (!c.witness.empty()) e["witness"] = c.witness;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["all_pass"] = report.all_pass();
  return j;
}

std::string report_text(const verify::VerificationReport& report) {
  std::ostringstream out;
  int passed = 0;
  for (const auto& c : report.checks) {
    out << status_tag(c.status) << " " << c.name << " " << c.params;
    if (!c.witness.empty() && c.status != verify::Status::pass) out << "  [" << c.witness << "]";
    out << "\n";
    if (c.status == verify::Status::pass) ++passed;
  }
  out << "suite " << report.suite << " (" << report.parameter_range << "): " << passed << "/"
      << report.checks.size() << " passed\n";
  return out.str();
}

ordered_json scan_table_json(int max_dim, std::span<const verify::ScanRow> rows) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["max_dim"] = max_dim;
  ordered_json entries = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json e;
    e["n"] = row.n;
    e["m_prime"] = row.m_prime.get_str();
    e["E"] = row.big_e.get_str();
    e["gcd"] = row.gcd_value.get_str();
    e["status"] = row.gcd_value == 1 ? "PASS" : "FAIL";
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace excy::doc
