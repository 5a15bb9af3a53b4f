#include "lcc/scheme_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lcc::scheme_io {

using nlohmann::ordered_json;

const geom::ProjLine& SchemeFile::line_by_name(const std::string& name) const {
  for (const auto& [n, l] : lines) {
    if (n == name) return l;
  }
  throw std::invalid_argument("scheme file has no line named '" + name + "'");
}

geom::Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  geom::Rat q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) {
    throw std::invalid_argument("bad rational literal '" + s + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator in '" + s + "'");
  }
  q.canonicalize();
  return q;
}

namespace {

geom::HomTriple parse_triple(const ordered_json& arr, const char* what) {
  if (!arr.is_array() || arr.size() != 3) {
    throw std::invalid_argument(std::string(what) +
                                " must be an array of 3 rational strings");
  }
  geom::Rat r[3];
  for (int i = 0; i < 3; ++i) {
    if (!arr[i].is_string()) {
      throw std::invalid_argument(std::string(what) +
                                  " entries must be strings");
    }
    r[i] = parse_rational(arr[i].get<std::string>());
  }
  return geom::HomTriple(r[0], r[1], r[2]);
}

}  // namespace

SchemeFile parse_scheme(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("scheme JSON parse error: ") +
                                e.what());
  }
  if (!doc.is_object() || !doc.contains("points")) {
    throw std::invalid_argument("scheme JSON must be an object with 'points'");
  }
  SchemeFile out;
  std::vector<geom::FatPointScheme::Item> items;
  for (const auto& p : doc["points"]) {
    if (!p.contains("coords") || !p.contains("mult")) {
      throw std::invalid_argument("each point needs 'coords' and 'mult'");
    }
    Int mult = p["mult"].get<Int>();
    items.emplace_back(geom::ProjPoint(parse_triple(p["coords"], "coords")),
                       mult);
  }
  out.scheme = geom::FatPointScheme(std::move(items));
  if (doc.contains("lines")) {
    for (const auto& l : doc["lines"]) {
      if (!l.contains("coeffs")) {
        throw std::invalid_argument("each line needs 'coeffs'");
      }
      std::string name = l.contains("name") ? l["name"].get<std::string>()
                                            : std::string();
      out.lines.emplace_back(
          name, geom::ProjLine(parse_triple(l["coeffs"], "coeffs")));
    }
  }
  return out;
}

SchemeFile load_scheme(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open scheme file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scheme(buf.str());
}

std::string scheme_to_json(
    const geom::FatPointScheme& scheme,
    const std::vector<std::pair<std::string, geom::ProjLine>>& lines) {
  ordered_json doc;
  doc["points"] = ordered_json::array();
  for (const auto& [p, m] : scheme.items()) {
    ordered_json jp;
    jp["coords"] = {p.coords()[0].get_str(), p.coords()[1].get_str(),
                    p.coords()[2].get_str()};
    jp["mult"] = m;
    doc["points"].push_back(jp);
  }
  doc["lines"] = ordered_json::array();
  for (const auto& [name, l] : lines) {
    ordered_json jl;
    jl["coeffs"] = {l.coeffs()[0].get_str(), l.coeffs()[1].get_str(),
                    l.coeffs()[2].get_str()};
    jl["name"] = name;
    doc["lines"].push_back(jl);
  }
  return doc.dump(2) + "\n";
}

void save_scheme(
    const std::string& path, const geom::FatPointScheme& scheme,
    const std::vector<std::pair<std::string, geom::ProjLine>>& lines) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write scheme file '" + path + "'");
  out << scheme_to_json(scheme, lines);
}

SchemeFile to_scheme_file(const geom::GeometricLCC& lcc) {
  SchemeFile out;
  out.scheme = lcc.scheme();
  for (std::size_t i = 0; i < lcc.lines.size(); ++i) {
    out.lines.emplace_back("l" + std::to_string(i + 1), lcc.lines[i]);
  }
  return out;
}

}  // namespace lcc::scheme_io
