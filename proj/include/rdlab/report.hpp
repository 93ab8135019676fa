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

#ifndef RDLAB_REPORT_HPP
#define RDLAB_REPORT_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace rdlab
{

class ReportError : public std::runtime_error
{
public:
    explicit ReportError(std::vector<std::string> problems);
    const std::vector<std::string>& problems() const { return m_problems; }

private:
    std::vector<std::string> m_problems;
};

/**
 * Builds summary.txt from an artifact directory: task status, one row per
 * estimate checker, attractor convergence history and a file inventory.
 * Depends only on the artifacts, so re-exporting is byte-identical. Missing
 * or unreadable artifacts are listed in the summary; a directory without
 * results.json raises ReportError naming the expected files.
 */
std::string export_report(const std::filesystem::path& dir);

} // namespace rdlab

#endif // RDLAB_REPORT_HPP
