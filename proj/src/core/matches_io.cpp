// Copyright 2026 The essmat authors
// SPDX-License-Identifier: Apache-2.0

#include "core/matches_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace essmat {

std::vector<PointMatch> load_matches(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matches file: " + path);
  std::vector<PointMatch> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    double qx, qy, qpx, qpy;
    if (!(ss >> qx)) continue;  // blank or comment-only line
    if (!(ss >> qy >> qpx >> qpy)) {
      throw std::runtime_error("malformed match in " + path + " at line " +
                               std::to_string(lineno));
    }
    PointMatch m;
    m.q = Vec3(qx, qy, 1.0);
    m.qp = Vec3(qpx, qpy, 1.0);
    int label;
    if (ss >> label) {
      if (label != 0 && label != 1) {
        throw std::runtime_error("bad label in " + path + " at line " +
                                 std::to_string(lineno));
      }
      m.label = label;
    }
    out.push_back(m);
  }
  return out;
}

void save_matches(const std::vector<PointMatch>& matches,
                  const std::string& path, const std::string& header_comment) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write matches file: " + path);
  if (!header_comment.empty()) {
    std::istringstream ss(header_comment);
    std::string line;
    while (std::getline(ss, line)) out << "# " << line << "\n";
  }
  bool any_label = false;
  for (const PointMatch& m : matches) any_label |= m.label >= 0;
  char buf[256];
  for (const PointMatch& m : matches) {
    const Vec3 q = canonical_point(m.q);
    const Vec3 qp = canonical_point(m.qp);
    std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g %.17g", q.x(), q.y(),
                  qp.x(), qp.y());
    out << buf;
    if (any_label) out << ' ' << (m.label == 1 ? 1 : 0);
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace essmat
