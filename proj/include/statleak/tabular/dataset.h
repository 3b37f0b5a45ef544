//
// Copyright 2026 The statleak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//


#ifndef STATLEAK_TABULAR_DATASET_H_
#define STATLEAK_TABULAR_DATASET_H_

#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace statleak {

// Rectangular table of categorical cells.
struct Dataset {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  size_t n() const { return rows.size(); }
};

struct IngestOptions {
  // A row whose selected cell (after trimming) equals one of these is
  // dropped.
  std::vector<std::string> missing_tokens = {"", "?"};
};

struct IngestResult {
  Dataset dataset;
  size_t rows_read = 0;  // Data rows before filtering.
  size_t rows_dropped = 0;
};

// Header row required; fields may be quoted. An empty column list selects
// every column. Cells are trimmed of surrounding whitespace.
absl::StatusOr<IngestResult> IngestCsvString(
    absl::string_view text, const std::vector<std::string>& columns,
    const IngestOptions& opts = {});
absl::StatusOr<IngestResult> IngestCsv(const std::string& path,
                                       const std::vector<std::string>& columns,
                                       const IngestOptions& opts = {});

std::string DatasetToCsv(const Dataset& ds);
absl::Status WriteCsv(const Dataset& ds, const std::string& path);

}  // namespace statleak

#endif  // STATLEAK_TABULAR_DATASET_H_
