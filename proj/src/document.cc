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

#include "gsv/document.h"

#include <sstream>

#include "gsv/errors.h"
#include "gsv/rational.h"

namespace gsv {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json graph_to_json(const Graph &g) {
    ordered_json j;
    j["n"] = g.n();
    j["graph6"] = emit_graph6(g);
    ordered_json edges = ordered_json::array();
    for (auto [u, v] : g.edges()) {
        edges.push_back({u + 1, v + 1});
    }
    j["edges"] = edges;
    return j;
}

Graph graph_from_json(const json &j) {
    if (!j.is_object()) {
        throw ParseError("graph must be an object");
    }
    if (j.contains("graph6")) {
        if (!j["graph6"].is_string()) {
            throw ParseError("graph6 must be a string");
        }
        Graph g = parse_graph6(j["graph6"].get<std::string>());
        if (j.contains("n") && j["n"] != g.n()) {
            throw ParseError("graph6 disagrees with n");
        }
        return g;
    }
    if (!j.contains("n") || !j["n"].is_number_unsigned() || !j.contains("edges") || !j["edges"].is_array()) {
        throw ParseError("graph needs graph6, or n and edges");
    }
    size_t n = j["n"].get<size_t>();
    Graph g(n);
    for (const auto &e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
            throw ParseError("edges must be [u, v] pairs");
        }
        size_t u = e[0].get<size_t>();
        size_t v = e[1].get<size_t>();
        if (u < 1 || v < 1 || u > n || v > n || u == v) {
            throw ParseError("edge endpoints are 1-based, distinct and at most n");
        }
        g.set_edge(u - 1, v - 1, true);
    }
    return g;
}

ordered_json to_json(const ProtocolDocument &doc) {
    ordered_json j;
    j["schema"] = kDocumentSchema;
    j["graph"] = graph_to_json(doc.graph);
    j["mode"] = doc.mode;
    j["provenance"] = provenance_name(doc.protocol.provenance);
    ordered_json entries = ordered_json::array();
    for (const auto &e : doc.protocol.entries) {
        ordered_json row;
        row["setting"] = setting_to_string(e.setting);
        row["p"] = to_string(e.p);
        entries.push_back(row);
    }
    j["entries"] = entries;
    j["report"] = doc.report;
    return j;
}

ProtocolDocument document_from_json(const json &j) {
    if (!j.is_object()) {
        throw ParseError("document must be a JSON object");
    }
    if (!j.contains("schema") || j["schema"] != kDocumentSchema) {
        throw ParseError("unsupported document schema");
    }
    if (!j.contains("graph") || !j.contains("entries") || !j["entries"].is_array()) {
        throw ParseError("document needs graph and entries");
    }
    ProtocolDocument doc;
    doc.graph = graph_from_json(j["graph"]);
    doc.mode = j.value("mode", std::string("input"));
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto &e : j["entries"]) {
        if (!e.is_object() || !e.contains("setting") || !e.contains("p") || !e["setting"].is_string() ||
            !e["p"].is_string()) {
            throw ParseError("entries must be {setting, p} with string values");
        }
        rows.emplace_back(e["setting"].get<std::string>(), e["p"].get<std::string>());
    }
    doc.protocol = Protocol::from_strings(rows, Provenance::kInput);
    if (doc.protocol.n != doc.graph.n()) {
        throw InvalidProtocol("setting length does not match the graph");
    }
    if (j.contains("report") && j["report"].is_object()) {
        doc.report = j["report"];
    }
    return doc;
}

ProtocolDocument parse_document(std::string_view text) {
    json j = json::parse(text.begin(), text.end(), nullptr, false);
    if (j.is_discarded()) {
        throw ParseError("document is not valid JSON");
    }
    return document_from_json(j);
}

std::vector<Graph> parse_graph_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
            line.pop_back();
        }
        size_t k = line.find_first_not_of(" \t");
        if (k == std::string::npos || line[k] == '#') {
            continue;
        }
        lines.push_back(line.substr(k));
    }
    if (lines.empty()) {
        throw ParseError("no graphs in input");
    }
    if (lines[0].find_first_of(" \t") != std::string::npos) {
        return {parse_edge_list(text)};
    }
    std::vector<Graph> out;
    for (const auto &l : lines) {
        out.push_back(parse_graph6(l));
    }
    return out;
}

}  // namespace gsv
