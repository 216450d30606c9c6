#include <doctest.h>

#include <fstream>
#include <sstream>

#include "excy/document.hpp"

using namespace excy;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing file ", path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::vector<families::Family> kAllFamilies{
    families::Family::small_volume, families::Family::esser_mld,  families::Family::pair_mld,
    families::Family::index1_cover, families::Family::large_index, families::Family::kollar,
    families::Family::liu,
};

}  // namespace

TEST_CASE("rendered documents round-trip on the exact fields") {
  for (families::Family f : kAllFamilies) {
    for (int dim = 2; dim <= 4; ++dim) {
      families::FamilyRecord rec = families::build(f, dim);
      nlohmann::ordered_json j = doc::render_json(rec);
      families::FamilyRecord back = doc::parse_json(nlohmann::json::parse(j.dump()));
      INFO(families::family_tag(f), " dim ", dim);
      CHECK(back == rec);
    }
  }
}

TEST_CASE("documents match the pinned golden files") {
  for (families::Family f : kAllFamilies) {
    for (int dim = 2; dim <= 4; ++dim) {
      families::FamilyRecord rec = families::build(f, dim);
      std::string rendered = doc::render_json(rec).dump(2) + "\n";
      std::string path = std::string(EXCY_GOLDEN_DIR) + "/" + families::family_tag(f) + "-" +
                         std::to_string(dim) + ".json";
      INFO(path);
      CHECK(rendered == read_file(path));
    }
  }
}

TEST_CASE("schema version is mandatory") {
  families::FamilyRecord rec = families::esser_mld(2);
  nlohmann::json j = nlohmann::json::parse(doc::render_json(rec).dump());
  CHECK(j.at("schema_version").get<std::string>() == doc::kSchemaVersion);
  j.erase("schema_version");
  CHECK_THROWS_AS(doc::parse_json(j), std::invalid_argument);
}

TEST_CASE("equation strings read like the displayed equations") {
  families::FamilyRecord v191 = families::esser_mld(3);
  CHECK(doc::equation_string(*v191.hsurf) ==
        "x0^2*x4 + x1^3*x3 + x2^5*x1 + x3^12*x0 + x4^165*x2");
  families::FamilyRecord x30 = families::pair_mld(2);
  CHECK(doc::equation_string(*x30.hsurf) == "x0^2 + x1^3 + x2^5*x1 + x3^2*x2");
}

TEST_CASE("text rendering shows the X_d-style display line") {
  std::string text = doc::render_text(families::esser_mld(3));
  CHECK(text.find("V_191 in P(95,61,26,8,1)") != std::string::npos);
  CHECK(text.find("mld") != std::string::npos);
  std::string cover = doc::render_text(families::index1_cover(3));
  CHECK(cover.find("W_360 in P(180,115,49,15,1)") != std::string::npos);
  std::string kollar = doc::render_text(families::kollar(2));
  CHECK(kollar.find("P^2") != std::string::npos);
}

TEST_CASE("approximations mirror the display conventions") {
  CHECK(sci_string(fraction(1, 462)) == "2.2e-3");
  CHECK(sci_string(fraction(1, Int(1806) * 1806 * 431)) == "7.1e-10");
  families::FamilyRecord x42 = families::small_volume_pair(2);
  nlohmann::ordered_json j = doc::render_json(x42);
  CHECK(j.at("approx").at("volume").get<std::string>() == "2.2e-3");
  // dimension-4 volume display
  families::FamilyRecord x4 = families::small_volume_pair(4);
  CHECK(doc::render_json(x4).at("approx").at("volume").get<std::string>() == "3.5e-26");
}

TEST_CASE("decimal rendering") {
  CHECK(decimal_string(fraction(1805, 1806), 6) == "0.999446");
  CHECK(decimal_string(fraction(-1, 3), 4) == "-0.3333");
  CHECK(decimal_string(Rat(7), 0) == "7");
  CHECK(decimal_string(fraction(1, 2), 1, Rounding::down) == "0.5");
  CHECK(decimal_string(fraction(2, 3), 2, Rounding::up) == "0.67");
  CHECK(parse_rat("310/311") == fraction(310, 311));
  CHECK(parse_rat("42") == Rat(42));
}

TEST_CASE("scan table serialization") {
  std::vector<verify::ScanRow> rows{{2, 19, 3, 1}, {3, 493, 8, 1}};
  nlohmann::ordered_json j = doc::scan_table_json(3, rows);
  CHECK(j.at("entries").size() == 2);
  CHECK(j.at("entries")[0].at("m_prime").get<std::string>() == "19");
  CHECK(j.at("entries")[1].at("status").get<std::string>() == "PASS");
}
