#include "corank1/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace corank1 {

nlohmann::json domain_to_json(const ModelDomain& D) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, c] : D.poly().raw().terms())
    terms.push_back({{"j", key.j}, {"k", key.k}, {"re", c.real()}, {"im", c.imag()}});
  return {{"dim", D.ambient_dim()}, {"label", D.label()}, {"P", std::move(terms)}};
}

ModelDomain domain_from_json(const nlohmann::json& j) {
  if (!j.contains("dim") || !j.contains("P"))
    fail(errc::bad_input, "domain spec needs 'dim' and 'P'");
  std::vector<std::tuple<int, int, cplx>> terms;
  for (const auto& t : j.at("P"))
    terms.emplace_back(t.at("j").get<int>(), t.at("k").get<int>(),
                       cplx(t.at("re").get<double>(), t.value("im", 0.0)));
  return ModelDomain(j.at("dim").get<int>(), HermitianPoly::from_terms(terms),
                     j.value("label", std::string{}));
}

ModelDomain load_domain(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::bad_input, "cannot open domain spec: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(errc::bad_input, "malformed domain spec " + path + ": " + e.what());
  }
  return domain_from_json(j);
}

void save_domain(const ModelDomain& D, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(errc::bad_input, "cannot write domain spec: " + path);
  out << domain_to_json(D).dump(2) << '\n';
}

void write_curve_csv(std::ostream& os, const CurvePath& c, const std::string& header_comment) {
  c.validate();
  os << header_comment;
  os << "t";
  for (int i = 0; i < c.points.front().dim(); ++i) os << ",re" << i << ",im" << i;
  os << '\n';
  os.precision(17);
  for (size_t i = 0; i < c.points.size(); ++i) {
    os << c.params[i];
    for (const cplx& z : c.points[i].z) os << ',' << z.real() << ',' << z.imag();
    os << '\n';
  }
}

CurvePath read_curve_csv(std::istream& is) {
  CurvePath c;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 't') continue;
    std::istringstream row(line);
    std::vector<double> vals;
    std::string cell;
    while (std::getline(row, cell, ',')) vals.push_back(std::stod(cell));
    if (vals.size() < 3 || vals.size() % 2 == 0)
      fail(errc::bad_input, "curve CSV rows need t plus re/im pairs");
    c.params.push_back(vals[0]);
    Point p;
    for (size_t i = 1; i + 1 < vals.size(); i += 2) p.z.emplace_back(vals[i], vals[i + 1]);
    c.points.push_back(std::move(p));
  }
  c.validate();
  return c;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string run_header(const std::string& config_digest, std::uint64_t seed) {
  std::ostringstream os;
  os << "# corank1 " << kArtifactVersion << " config=" << config_digest << " seed=" << seed
     << '\n';
  return os.str();
}

}  // namespace corank1
