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


#include "statleak/tabular/dataset.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <boost/tokenizer.hpp>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/ascii.h"

namespace statleak {

namespace {

using Tokenizer =
    boost::tokenizer<boost::escaped_list_separator<char>>;

absl::StatusOr<std::vector<std::string>> SplitLine(const std::string& line,
                                                   size_t line_no) {
  // Backslash is not an escape in CSV; use a character that cannot occur.
  boost::escaped_list_separator<char> sep('\0', ',', '"');
  std::vector<std::string> out;
  try {
    Tokenizer tok(line, sep);
    for (const auto& f : tok) {
      out.push_back(std::string(absl::StripAsciiWhitespace(f)));
    }
  } catch (const boost::escaped_list_error& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed CSV at line ", line_no, ": ", e.what()));
  }
  return out;
}

std::string QuoteField(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos &&
      (s.empty() || (s.front() != ' ' && s.back() != ' '))) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

absl::StatusOr<IngestResult> IngestCsvString(
    absl::string_view text, const std::vector<std::string>& columns,
    const IngestOptions& opts) {
  std::istringstream in{std::string(text)};
  std::string line;
  size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (absl::StripAsciiWhitespace(line).empty()) continue;
    absl::StatusOr<std::vector<std::string>> h = SplitLine(line, line_no);
    if (!h.ok()) return h.status();
    header = *std::move(h);
    break;
  }
  if (header.empty()) return absl::InvalidArgumentError("empty result: no header");

  std::vector<int> pick;
  if (columns.empty()) {
    for (size_t i = 0; i < header.size(); ++i) pick.push_back(i);
  } else {
    for (const auto& c : columns) {
      auto it = std::find(header.begin(), header.end(), c);
      if (it == header.end()) {
        return absl::NotFoundError(absl::StrCat("unknown column '", c, "'"));
      }
      pick.push_back(static_cast<int>(it - header.begin()));
    }
  }

  IngestResult res;
  for (int i : pick) res.dataset.columns.push_back(header[i]);
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (absl::StripAsciiWhitespace(line).empty()) continue;
    absl::StatusOr<std::vector<std::string>> f = SplitLine(line, line_no);
    if (!f.ok()) return f.status();
    if (f->size() != header.size()) {
      return absl::InvalidArgumentError(
          absl::StrCat("malformed CSV at line ", line_no, ": expected ",
                       header.size(), " fields, found ", f->size()));
    }
    ++res.rows_read;
    std::vector<std::string> row;
    bool missing = false;
    for (int i : pick) {
      const std::string& cell = (*f)[i];
      for (const auto& tok : opts.missing_tokens) missing |= cell == tok;
      row.push_back(cell);
    }
    if (missing) {
      ++res.rows_dropped;
      continue;
    }
    res.dataset.rows.push_back(std::move(row));
  }
  if (res.dataset.rows.empty()) {
    return absl::InvalidArgumentError("empty result: no complete data rows");
  }
  return res;
}

absl::StatusOr<IngestResult> IngestCsv(const std::string& path,
                                       const std::vector<std::string>& columns,
                                       const IngestOptions& opts) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::ostringstream buf;
  buf << f.rdbuf();
  return IngestCsvString(buf.str(), columns, opts);
}

std::string DatasetToCsv(const Dataset& ds) {
  std::string out;
  auto fmt = [](std::string* o, const std::string& s) {
    o->append(QuoteField(s));
  };
  absl::StrAppend(&out, absl::StrJoin(ds.columns, ",", fmt), "\n");
  for (const auto& r : ds.rows) {
    absl::StrAppend(&out, absl::StrJoin(r, ",", fmt), "\n");
  }
  return out;
}

absl::Status WriteCsv(const Dataset& ds, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) return absl::PermissionDeniedError(absl::StrCat("cannot write ", path));
  f << DatasetToCsv(ds);
  if (!f) return absl::DataLossError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

}  // namespace statleak
