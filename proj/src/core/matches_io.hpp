// Copyright 2026 The essmat authors
// SPDX-License-Identifier: Apache-2.0
//
// Matches file format: plain text, one correspondence per line as
//   qx qy q'x q'y [label]
// in normalized camera coordinates (w = 1 implied); the optional fifth
// field is a ground-truth 0/1 inlier label. '#' starts a comment.

#pragma once

#include <string>
#include <vector>

#include "core/geom.hpp"

namespace essmat {

// Throws std::runtime_error with the path in the message on I/O or parse
// failures.
std::vector<PointMatch> load_matches(const std::string& path);

// Writes labels only when at least one match carries one. header_comment,
// if non-empty, is emitted up front as '#' lines.
void save_matches(const std::vector<PointMatch>& matches,
                  const std::string& path,
                  const std::string& header_comment = "");

}  // namespace essmat
