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

#include "claimcond/condense.hpp"

#include <algorithm>
#include <functional>

#include "claimcond/utf8.hpp"

namespace claimcond {

namespace {

// Checks one mention against the document text; textual length is measured
// in code points, same unit as the annotation offsets.
void check_span(const EntityMention& m, std::size_t text_length,
                const std::string& doc_id) {
  if (m.onset >= m.offset) {
    throw Error(ErrorCode::InvalidSpan,
                "empty span for entity '" + m.id + "' in document " + doc_id);
  }
  if (m.offset > text_length) {
    throw Error(ErrorCode::InvalidSpan,
                "entity '" + m.id + "' ends at " + std::to_string(m.offset) +
                    " but document " + doc_id + " has " +
                    std::to_string(text_length) + " code points");
  }
}

struct ResolvedPair {
  const EntityMention* subject;
  const EntityMention* object;
};

ResolvedPair resolve(const AnnotatedDocument& doc,
                     const RelationInstance& annotation) {
  if (annotation.subject >= doc.entities.size() ||
      annotation.object >= doc.entities.size()) {
    throw Error(ErrorCode::DanglingReference,
                "relation references entity index " +
                    std::to_string(std::max(annotation.subject,
                                            annotation.object)) +
                    " but document " + doc.doc_id + " has " +
                    std::to_string(doc.entities.size()) + " entities");
  }
  const EntityMention& subj = doc.entities[annotation.subject];
  const EntityMention& obj = doc.entities[annotation.object];
  const std::size_t n = utf8::length(doc.text);
  check_span(subj, n, doc.doc_id);
  check_span(obj, n, doc.doc_id);
  if (subj.onset == obj.onset && subj.offset == obj.offset) {
    throw Error(ErrorCode::InvalidSpan,
                "subject and object cover the identical span in document " +
                    doc.doc_id);
  }
  return {&subj, &obj};
}

bool spans_overlap(const EntityMention& a, const EntityMention& b) {
  return std::max(a.onset, b.onset) < std::min(a.offset, b.offset);
}

// Position of the annotation inside doc.relations, for claim provenance.
std::optional<std::size_t> index_of(const AnnotatedDocument& doc,
                                    const RelationInstance& annotation) {
  if (!doc.relations.empty()) {
    const RelationInstance* first = doc.relations.data();
    const RelationInstance* last = first + doc.relations.size();
    if (std::greater_equal<const RelationInstance*>{}(&annotation, first) &&
        std::less<const RelationInstance*>{}(&annotation, last)) {
      return static_cast<std::size_t>(&annotation - first);
    }
  }
  for (std::size_t i = 0; i < doc.relations.size(); ++i) {
    if (doc.relations[i] == annotation) return i;
  }
  return std::nullopt;
}

}  // namespace

std::string_view render_relation(RelationType r) {
  switch (r) {
    case RelationType::CauseOf: return "cause of";
    case RelationType::NotCauseOf: return "not cause of";
    case RelationType::CausativeAgentOf: return "causative agent of";
  }
  return "";
}

std::string render_relation(std::string_view relation_type) {
  const auto parsed = parse_relation_type(relation_type);
  if (!parsed) {
    throw Error(ErrorCode::UnknownRelation,
                "unknown relation type '" + std::string(relation_type) + "'");
  }
  return std::string(render_relation(*parsed));
}

CondensedClaim condense_triple(const AnnotatedDocument& doc,
                               const RelationInstance& annotation) {
  const ResolvedPair pair = resolve(doc, annotation);
  if (spans_overlap(*pair.subject, *pair.object)) {
    throw Error(ErrorCode::InvalidSpan,
                "subject and object spans overlap in document " + doc.doc_id +
                    "; a triple claim would duplicate text");
  }
  std::string claim;
  claim.append(utf8::slice(doc.text, pair.subject->onset, pair.subject->offset));
  claim.push_back(' ');
  claim.append(render_relation(annotation.relation_type));
  claim.push_back(' ');
  claim.append(utf8::slice(doc.text, pair.object->onset, pair.object->offset));
  return CondensedClaim{std::move(claim), Representation::Triple, doc.doc_id,
                        index_of(doc, annotation)};
}

CondensedClaim condense_seq(const AnnotatedDocument& doc,
                            const RelationInstance& annotation) {
  const ResolvedPair pair = resolve(doc, annotation);
  const std::size_t begin = std::min(pair.subject->onset, pair.object->onset);
  const std::size_t end = std::max(pair.subject->offset, pair.object->offset);
  return CondensedClaim{std::string(utf8::slice(doc.text, begin, end)),
                        Representation::Seq, doc.doc_id,
                        index_of(doc, annotation)};
}

std::size_t select_main_annotation_index(const AnnotatedDocument& doc) {
  if (doc.relations.empty()) {
    throw Error(ErrorCode::NoRelations,
                "document " + doc.doc_id + " has no relation annotations");
  }
  std::size_t best = 0;
  auto key = [&](const RelationInstance& r) {
    if (r.subject >= doc.entities.size() || r.object >= doc.entities.size()) {
      throw Error(ErrorCode::DanglingReference,
                  "relation references a missing entity in document " +
                      doc.doc_id);
    }
    const std::size_t a = doc.entities[r.subject].onset;
    const std::size_t b = doc.entities[r.object].onset;
    return std::pair{std::min(a, b), std::max(a, b)};
  };
  auto best_key = key(doc.relations[0]);
  for (std::size_t i = 1; i < doc.relations.size(); ++i) {
    const auto k = key(doc.relations[i]);
    if (k < best_key) {
      best = i;
      best_key = k;
    }
  }
  return best;
}

const RelationInstance& select_main_annotation(const AnnotatedDocument& doc) {
  return doc.relations[select_main_annotation_index(doc)];
}

CondensedClaim condense_record(const CheckableClaimRecord& record,
                               Representation representation) {
  if (representation == Representation::FullText) {
    return CondensedClaim{record.full_text, Representation::FullText,
                          record.doc_id, std::nullopt};
  }
  if (representation == Representation::ExternalSequence) {
    throw Error(ErrorCode::MissingAnnotation,
                "external sequences are joined from a file, not condensed");
  }
  if (!record.main_annotation) {
    throw Error(ErrorCode::MissingAnnotation,
                "record " + record.doc_id + " carries no main annotation");
  }
  const MainAnnotation& main = *record.main_annotation;
  AnnotatedDocument view;
  view.doc_id = record.doc_id;
  view.text = record.full_text;
  view.entities = {main.subject, main.object};
  view.relations = {RelationInstance{0, main.relation_type, 1}};
  CondensedClaim claim = representation == Representation::Triple
                             ? condense_triple(view, view.relations[0])
                             : condense_seq(view, view.relations[0]);
  claim.source_annotation = main.relation_index;
  return claim;
}

}  // namespace claimcond
