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

#ifndef CLAIMCOND_CONDENSE_HPP_
#define CLAIMCOND_CONDENSE_HPP_

#include <string>
#include <string_view>

#include "claimcond/types.hpp"

namespace claimcond {

/// Relation phrase used inside triple claims: underscores become spaces and
/// the parenthesized negation prefix is expanded ("not cause of").
std::string_view render_relation(RelationType r);

/// String-level variant for schema input. Throws Error(UnknownRelation) for
/// anything outside the closed enumeration.
std::string render_relation(std::string_view relation_type);

/// Builds "<subject surface> <relation phrase> <object surface>", dropping
/// every token outside the two entity spans.
///
/// Throws Error(DanglingReference) when the annotation's mentions are not in
/// the document, Error(InvalidSpan) for out-of-range, empty, identical or
/// overlapping spans.
CondensedClaim condense_triple(const AnnotatedDocument& doc,
                               const RelationInstance& annotation);

/// Extracts text[min(onset) : max(offset)], the shortest contiguous span
/// covering both mentions. Works whichever entity comes first; overlapping
/// (non-identical) spans are fine, the union is still contiguous.
///
/// Errors as for condense_triple, except overlap is allowed.
CondensedClaim condense_seq(const AnnotatedDocument& doc,
                            const RelationInstance& annotation);

/// Index of the main annotation: the relation whose earlier entity starts
/// first; ties broken by the other entity's onset, then annotation order.
/// Throws Error(NoRelations) on documents without relations.
std::size_t select_main_annotation_index(const AnnotatedDocument& doc);

/// Same selection, returning the relation itself.
const RelationInstance& select_main_annotation(const AnnotatedDocument& doc);

/// Claim construction for a filtered record. FullText returns the post
/// unchanged; Triple and Seq condense the main annotation and throw
/// Error(MissingAnnotation) when the record has none. ExternalSequence is
/// not constructible here (those claims come from a file).
CondensedClaim condense_record(const CheckableClaimRecord& record,
                               Representation representation);

}  // namespace claimcond

#endif  // CLAIMCOND_CONDENSE_HPP_
