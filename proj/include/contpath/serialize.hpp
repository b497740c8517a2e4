// Copyright 2026 contpath contributors
// SPDX-License-Identifier: Apache-2.0
#ifndef CONTPATH_SERIALIZE_HPP
#define CONTPATH_SERIALIZE_HPP

#include <iosfwd>
#include <string>

#include "contpath/pathmodel.hpp"

namespace contpath {

// Self-describing text document for a path model. Numbers are printed with
// 17 significant digits, which round-trips IEEE doubles exactly.
std::string serialize_model(const MlpPathModel& m);

// Parses a document produced by serialize_model. Throws ParseError naming
// the missing or malformed section.
MlpPathModel deserialize_model(const std::string& doc);

void save_model(const MlpPathModel& m, const std::string& path);
MlpPathModel load_model(const std::string& path);

}  // namespace contpath

#endif  // CONTPATH_SERIALIZE_HPP
