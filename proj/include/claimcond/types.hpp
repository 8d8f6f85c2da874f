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

#ifndef CLAIMCOND_TYPES_HPP_
#define CLAIMCOND_TYPES_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace claimcond {

/// Fact-checking verdict attached to a document or evidence snippet.
enum class Verdict { Supports, Refutes, NotEnoughInfo };

/// Entity classes used by the annotation layer.
enum class EntityClass { MedicalCondition, Treatment, SymptomSideEffect, Other };

/// Causative relation types; the only relations the corpus annotates.
enum class RelationType { CauseOf, NotCauseOf, CausativeAgentOf };

/// How a claim handed to a fact checker was produced.
enum class Representation { FullText, ExternalSequence, Triple, Seq };

/// Label vocabulary of the downstream claim/evidence exchange format.
/// Nei stands for an abstention (no verdict for the pair).
enum class FcLabel { Support, Contradict, Nei };

enum class ErrorCode {
  InvalidSpan,
  DanglingReference,
  NoRelations,
  UnknownRelation,
  UnknownVerdict,
  UnknownEntityClass,
  MalformedRecord,
  FatalFormat,
  NoAgreeingEvidence,
  MissingAnnotation,
  DuplicatePrediction,
  UnknownClaim,
  MissingPrediction,
  CoverageMismatch,
  MissingCell,
  BadConfig,
};

/// Exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

std::string_view error_code_name(ErrorCode code);

/// An entity span. Onset/offset are 0-based Unicode code point indices into
/// the document text; onset inclusive, offset exclusive.
struct EntityMention {
  std::string id;
  std::size_t onset = 0;
  std::size_t offset = 0;
  EntityClass entity_class = EntityClass::Other;

  bool operator==(const EntityMention&) const = default;
};

/// One annotation: subject and object reference mentions by index into the
/// owning document's entity list.
struct RelationInstance {
  std::size_t subject = 0;
  RelationType relation_type = RelationType::CauseOf;
  std::size_t object = 0;

  bool operator==(const RelationInstance&) const = default;
};

/// One evidence text provided by an annotator.
struct EvidenceSnippet {
  std::string snippet_id;
  std::string text;
  Verdict annotator_verdict = Verdict::NotEnoughInfo;
  std::size_t order_index = 0;

  bool operator==(const EvidenceSnippet&) const = default;
};

/// A user post with its annotation set, gold verdict and evidence texts.
/// Relations keep their original annotation order.
struct AnnotatedDocument {
  std::string doc_id;
  std::string text;  // UTF-8
  std::vector<EntityMention> entities;
  std::vector<RelationInstance> relations;
  Verdict gold_verdict = Verdict::NotEnoughInfo;
  std::vector<EvidenceSnippet> evidence;

  bool operator==(const AnnotatedDocument&) const = default;
};

/// A condensed claim string together with its provenance.
struct CondensedClaim {
  std::string claim_text;
  Representation method = Representation::Triple;
  std::string source_doc;
  std::optional<std::size_t> source_annotation;  // relation index

  bool operator==(const CondensedClaim&) const = default;
};

/// The main annotation of a checkable document with its mentions resolved,
/// so a record is self-contained for claim construction.
struct MainAnnotation {
  EntityMention subject;
  RelationType relation_type = RelationType::CauseOf;
  EntityMention object;
  std::size_t relation_index = 0;

  bool operator==(const MainAnnotation&) const = default;
};

/// A document that survived filtering: a claim/evidence pair a fact checker
/// can be asked to verify. gold_verdict is never NotEnoughInfo.
struct CheckableClaimRecord {
  std::string doc_id;
  Verdict gold_verdict = Verdict::Supports;
  EvidenceSnippet gold_evidence;
  std::optional<MainAnnotation> main_annotation;
  std::string full_text;

  bool operator==(const CheckableClaimRecord&) const = default;
};

/// A broken type invariant found by document validation. Issues are data,
/// not exceptions: a validator reports all of them at once.
struct ValidationIssue {
  ErrorCode code = ErrorCode::MalformedRecord;
  std::string field;
  std::string message;

  bool operator==(const ValidationIssue&) const = default;
};

// Enum <-> string, the schema's vocabulary. Parsers return nullopt for
// anything outside the closed enumeration.
std::string_view to_string(Verdict v);
std::string_view to_string(EntityClass c);
std::string_view to_string(RelationType r);
std::string_view to_string(Representation r);
std::string_view to_string(FcLabel l);
std::optional<Verdict> parse_verdict(std::string_view s);
std::optional<EntityClass> parse_entity_class(std::string_view s);
std::optional<RelationType> parse_relation_type(std::string_view s);
std::optional<Representation> parse_representation(std::string_view s);
std::optional<FcLabel> parse_fc_label(std::string_view s);

/// Supports -> SUPPORT, Refutes -> CONTRADICT. NotEnoughInfo maps to Nei but
/// never appears in gold data after filtering.
FcLabel verdict_to_label(Verdict v);

}  // namespace claimcond

#endif  // CLAIMCOND_TYPES_HPP_
