// Copyright 2026 The claimcond authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLAIMCOND_INGEST_HPP_
#define CLAIMCOND_INGEST_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "claimcond/types.hpp"
#include "json.hpp"

namespace claimcond {

/// One rejected input line. Line numbers are 1-based.
struct IngestError {
  std::size_t line = 0;
  ErrorCode code = ErrorCode::MalformedRecord;
  std::string message;

  bool operator==(const IngestError&) const = default;
};

/// Record of an entity span trimmed of surrounding whitespace at ingestion.
struct SpanAdjustment {
  std::string doc_id;
  std::string entity_id;
  std::size_t old_onset = 0, old_offset = 0;
  std::size_t new_onset = 0, new_offset = 0;
};

struct ParseResult {
  std::vector<AnnotatedDocument> documents;
  std::vector<IngestError> errors;
  std::vector<SpanAdjustment> adjustments;
};

/// Reads the canonical line-delimited corpus. Malformed records become
/// IngestError entries; parsing continues past them. Only a stream that is
/// not line-delimited text at all (embedded NUL bytes) throws
/// Error(FatalFormat).
ParseResult parse_corpus(std::istream& in);
ParseResult parse_corpus_file(const std::filesystem::path& path);

/// All type-invariant violations of one document; empty means valid.
std::vector<ValidationIssue> validate_document(const AnnotatedDocument& doc);

/// First evidence snippet (lowest order_index) whose annotator verdict equals
/// the document's gold verdict. Throws Error(NoAgreeingEvidence) when no
/// snippet agrees or the list is empty.
EvidenceSnippet select_gold_evidence(const AnnotatedDocument& doc);

/// Why documents were excluded from the checkable set; all counts refer to
/// document ids.
struct IngestReport {
  std::size_t total = 0;
  std::size_t checkable = 0;
  std::size_t supports = 0;
  std::size_t refutes = 0;
  std::vector<std::string> nei;
  std::vector<std::string> no_relations;
  std::vector<std::string> no_agreeing_evidence;
};

struct FilterResult {
  std::vector<CheckableClaimRecord> records;
  IngestReport report;
};

/// Drops NEI documents, attaches the main annotation and the gold evidence.
/// Documents without relations or without agreeing evidence are itemized in
/// the report, never silently lost.
FilterResult filter_checkable(const std::vector<AnnotatedDocument>& docs);

// Canonical schema serialization. parse -> serialize -> parse is lossless
// for well-formed records.
nlohmann::json document_to_json(const AnnotatedDocument& doc);
void write_corpus(std::ostream& out,
                  const std::vector<AnnotatedDocument>& docs);

nlohmann::json ingest_report_to_json(const IngestReport& report,
                                     const ParseResult& parse);

}  // namespace claimcond

#endif  // CLAIMCOND_INGEST_HPP_
