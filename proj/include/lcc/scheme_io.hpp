#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "lcc/geom.hpp"

namespace lcc::scheme_io {

// On-disk scheme format:
//   {"points": [{"coords": ["x0","x1","x2"], "mult": m}, ...],
//    "lines":  [{"coeffs": ["a0","a1","a2"], "name": "l1"}, ...]}
// Rationals are strings "p" or "p/q"; triples are canonicalized on load,
// so files written by save() reload to equal values.
struct SchemeFile {
  geom::FatPointScheme scheme;
  std::vector<std::pair<std::string, geom::ProjLine>> lines;

  const geom::ProjLine& line_by_name(const std::string& name) const;
};

geom::Rat parse_rational(const std::string& s);

SchemeFile parse_scheme(const std::string& json_text);
SchemeFile load_scheme(const std::string& path);

std::string scheme_to_json(const geom::FatPointScheme& scheme,
                           const std::vector<std::pair<std::string,
                                                       geom::ProjLine>>& lines);
void save_scheme(const std::string& path, const geom::FatPointScheme& scheme,
                 const std::vector<std::pair<std::string,
                                             geom::ProjLine>>& lines);

// Scheme file for a realized configuration; lines are named l1..lq.
SchemeFile to_scheme_file(const geom::GeometricLCC& lcc);

}  // namespace lcc::scheme_io
