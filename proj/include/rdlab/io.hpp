/*
* Copyright (C) 2026 The rdlab authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/

#ifndef RDLAB_IO_HPP
#define RDLAB_IO_HPP

#include "rdlab/attractor.hpp"
#include "rdlab/energy.hpp"
#include "rdlab/estimates.hpp"
#include "rdlab/structure.hpp"
#include "rdlab/trajectory.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace rdlab
{

using Json = nlohmann::ordered_json;

/// 17 significant digits, "%.17g".
std::string format_double(double v);

/// Writes bytes exactly (binary mode, no locale); creates parent directories.
void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

/// JSON number, or null when not finite.
Json json_number(double v);

std::string field_csv(const Field& u);
std::string trajectory_csv(const Trajectory& traj, const EnergyCheck* energy);
std::string snapshots_csv(const Trajectory& traj);

Json to_json(const StructureReport& r);
Json to_json(const EstimateReport& r);
Json to_json(const AttractorApprox& A);
Json to_json(const InvarianceReport& r);
Json to_json(const AttractionReport& r);

/// One CSV per member (member_000.csv, ...) plus manifest.json.
void save_attractor(const AttractorApprox& A, const std::filesystem::path& dir);

/// Pretty-printed JSON with a trailing newline.
std::string dump(const Json& j);

} // namespace rdlab

#endif // RDLAB_IO_HPP
