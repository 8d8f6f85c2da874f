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

#include "claimcond/types.hpp"

namespace claimcond {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSpan: return "InvalidSpan";
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::NoRelations: return "NoRelations";
    case ErrorCode::UnknownRelation: return "UnknownRelation";
    case ErrorCode::UnknownVerdict: return "UnknownVerdict";
    case ErrorCode::UnknownEntityClass: return "UnknownEntityClass";
    case ErrorCode::MalformedRecord: return "MalformedRecord";
    case ErrorCode::FatalFormat: return "FatalFormat";
    case ErrorCode::NoAgreeingEvidence: return "NoAgreeingEvidence";
    case ErrorCode::MissingAnnotation: return "MissingAnnotation";
    case ErrorCode::DuplicatePrediction: return "DuplicatePrediction";
    case ErrorCode::UnknownClaim: return "UnknownClaim";
    case ErrorCode::MissingPrediction: return "MissingPrediction";
    case ErrorCode::CoverageMismatch: return "CoverageMismatch";
    case ErrorCode::MissingCell: return "MissingCell";
    case ErrorCode::BadConfig: return "BadConfig";
  }
  return "Unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Supports: return "Supports";
    case Verdict::Refutes: return "Refutes";
    case Verdict::NotEnoughInfo: return "NEI";
  }
  return "";
}

std::string_view to_string(EntityClass c) {
  switch (c) {
    case EntityClass::MedicalCondition: return "MedicalCondition";
    case EntityClass::Treatment: return "Treatment";
    case EntityClass::SymptomSideEffect: return "SymptomSideEffect";
    case EntityClass::Other: return "Other";
  }
  return "";
}

std::string_view to_string(RelationType r) {
  switch (r) {
    case RelationType::CauseOf: return "cause_of";
    case RelationType::NotCauseOf: return "not_cause_of";
    case RelationType::CausativeAgentOf: return "causative_agent_of";
  }
  return "";
}

std::string_view to_string(Representation r) {
  switch (r) {
    case Representation::FullText: return "full";
    case Representation::ExternalSequence: return "external";
    case Representation::Triple: return "triple";
    case Representation::Seq: return "seq";
  }
  return "";
}

std::string_view to_string(FcLabel l) {
  switch (l) {
    case FcLabel::Support: return "SUPPORT";
    case FcLabel::Contradict: return "CONTRADICT";
    case FcLabel::Nei: return "NEI";
  }
  return "";
}

std::optional<Verdict> parse_verdict(std::string_view s) {
  if (s == "Supports") return Verdict::Supports;
  if (s == "Refutes") return Verdict::Refutes;
  if (s == "NEI") return Verdict::NotEnoughInfo;
  return std::nullopt;
}

std::optional<EntityClass> parse_entity_class(std::string_view s) {
  if (s == "MedicalCondition") return EntityClass::MedicalCondition;
  if (s == "Treatment") return EntityClass::Treatment;
  if (s == "SymptomSideEffect") return EntityClass::SymptomSideEffect;
  if (s == "Other") return EntityClass::Other;
  return std::nullopt;
}

std::optional<RelationType> parse_relation_type(std::string_view s) {
  if (s == "cause_of") return RelationType::CauseOf;
  if (s == "not_cause_of") return RelationType::NotCauseOf;
  if (s == "causative_agent_of") return RelationType::CausativeAgentOf;
  return std::nullopt;
}

std::optional<Representation> parse_representation(std::string_view s) {
  if (s == "full") return Representation::FullText;
  if (s == "external") return Representation::ExternalSequence;
  if (s == "triple") return Representation::Triple;
  if (s == "seq") return Representation::Seq;
  return std::nullopt;
}

std::optional<FcLabel> parse_fc_label(std::string_view s) {
  if (s == "SUPPORT") return FcLabel::Support;
  if (s == "CONTRADICT") return FcLabel::Contradict;
  if (s == "NEI") return FcLabel::Nei;
  return std::nullopt;
}

FcLabel verdict_to_label(Verdict v) {
  switch (v) {
    case Verdict::Supports: return FcLabel::Support;
    case Verdict::Refutes: return FcLabel::Contradict;
    case Verdict::NotEnoughInfo: return FcLabel::Nei;
  }
  return FcLabel::Nei;
}

}  // namespace claimcond
