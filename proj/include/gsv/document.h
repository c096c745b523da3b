// Copyright 2026 The gsv Authors
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

#ifndef GSV_DOCUMENT_H
#define GSV_DOCUMENT_H

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gsv/graph.h"
#include "gsv/protocol.h"

namespace gsv {

inline constexpr int kDocumentSchema = 1;

/// A protocol together with the graph it verifies, plus free-form report fields.
struct ProtocolDocument {
    Graph graph;
    std::string mode;
    Protocol protocol;
    nlohmann::ordered_json report = nlohmann::ordered_json::object();
};

nlohmann::ordered_json graph_to_json(const Graph &g);
Graph graph_from_json(const nlohmann::json &j);

nlohmann::ordered_json to_json(const ProtocolDocument &doc);
/// Throws ParseError on malformed documents and InvalidProtocol on bad weights.
ProtocolDocument document_from_json(const nlohmann::json &j);
ProtocolDocument parse_document(std::string_view text);

/// Graphs from text: one graph6 string per line, or a 1-based edge list.
/// Edge lists are recognised by a first meaningful line holding whitespace-separated tokens.
std::vector<Graph> parse_graph_text(std::string_view text);

}  // namespace gsv

#endif
