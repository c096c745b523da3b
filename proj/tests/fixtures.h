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

#ifndef GSV_TESTS_FIXTURES_H
#define GSV_TESTS_FIXTURES_H

#include <cstdint>
#include <utility>
#include <vector>

#include "gsv/graph.h"

namespace gsv::fixtures {

struct Row {
    const char *setting;
    const char *p;
    /// Rank of the test projector, 2^(n - rank A).
    uint64_t projector_rank;
};

/// One graph of the seven-qubit-or-fewer catalogue.  Edges are 1-based.
struct CatalogGraph {
    int number;
    size_t n;
    std::vector<std::pair<int, int>> edges;
    /// -1 for stars, which have no listed optimal protocol.
    int eta;
    std::vector<Row> optimal;
    int eta_xz;
    int chi;
    const char *chi_star;
    /// Coloring protocol with nu = 1/chi; empty when chi = 2.
    std::vector<Row> coloring;
    /// XZ protocol with nu = 1/2.
    std::vector<Row> xz_half;

    Graph graph() const {
        std::vector<std::pair<size_t, size_t>> e;
        for (auto [u, v] : edges) {
            e.emplace_back(u - 1, v - 1);
        }
        return Graph::from_edges(n, e);
    }
};

inline const std::vector<CatalogGraph> &catalog() {
    static const std::vector<CatalogGraph> table = {
        {2, 3, {{1, 2}, {2, 3}},
         5, {{"XZX", "1/3", 2}, {"ZXZ", "1/6", 4}, {"ZYY", "1/6", 4}, {"YXY", "1/6", 4}, {"YYZ", "1/6", 4}},
         2, 2, "2",
         {},
         {{"XZX", "1/2", 2}, {"ZXZ", "1/2", 4}}},
        {3, 4, {{1, 2}, {1, 3}, {1, 4}},
         -1, {},
         2, 2, "2",
         {},
         {{"ZXXX", "1/2", 2}, {"XZZZ", "1/2", 8}}},
        {4, 4, {{1, 2}, {2, 3}, {3, 4}},
         9, {{"ZXZX", "1/6", 4}, {"XZXZ", "1/6", 4}, {"XZYY", "1/6", 4}, {"YYZX", "1/6", 4}, {"ZYYZ", "1/6", 8}, {"YXXY", "1/6", 8}},
         3, 2, "2",
         {},
         {{"ZXZX", "1/2", 4}, {"XZXZ", "1/2", 4}}},
        {5, 5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}},
         -1, {},
         2, 2, "2",
         {},
         {{"ZXXXX", "1/2", 2}, {"XZZZZ", "1/2", 16}}},
        {6, 5, {{1, 2}, {2, 3}, {2, 5}, {3, 4}},
         15, {{"XZXZX", "1/6", 4}, {"XZYYX", "1/6", 4}, {"ZXZXZ", "1/12", 8}, {"ZYZXY", "1/12", 8}, {"YXZXY", "1/12", 8}, {"YYZXZ", "1/12", 8}, {"ZXXYY", "1/12", 16}, {"ZYXYZ", "1/12", 16}, {"YXYZZ", "1/12", 16}, {"YYYZY", "1/12", 16}},
         3, 2, "2",
         {},
         {{"XZXZX", "1/2", 4}, {"ZXZXZ", "1/2", 8}}},
        {7, 5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}},
         17, {{"XZXZX", "1/6", 4}, {"ZXZXZ", "1/6", 8}, {"ZYYZX", "1/6", 8}, {"XZYYZ", "1/6", 8}, {"YYZYY", "1/6", 8}, {"YXXXY", "1/6", 16}},
         4, 2, "2",
         {},
         {{"XZXZX", "1/2", 4}, {"ZXZXZ", "1/2", 8}}},
        {8, 5, {{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}},
         21, {{"ZZXZX", "1/6", 8}, {"ZXZZX", "1/6", 8}, {"XZYYZ", "1/6", 8}, {"XXYYY", "1/6", 8}, {"YYZXZ", "1/6", 8}, {"YYXXY", "1/6", 8}},
         6, 3, "5/2",
         {{"XZXZZ", "1/3", 8}, {"ZXZXZ", "1/3", 8}, {"ZZZZX", "1/3", 16}},
         {{"ZZXZX", "1/6", 8}, {"ZXZZX", "1/6", 8}, {"ZXZXZ", "1/6", 8}, {"XZZXZ", "1/6", 8}, {"XZXZZ", "1/6", 8}, {"XXXXX", "1/6", 16}}},
        {9, 6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}},
         -1, {},
         2, 2, "2",
         {},
         {{"ZXXXXX", "1/2", 2}, {"XZZZZZ", "1/2", 32}}},
        {10, 6, {{1, 2}, {2, 3}, {2, 5}, {2, 6}, {3, 4}},
         27, {{"XZXZXX", "1/6", 4}, {"XZYYXX", "1/6", 4}, {"ZXZXZZ", "1/24", 16}, {"ZXZXYY", "1/24", 16}, {"ZYZXZY", "1/24", 16}, {"ZYZXYZ", "1/24", 16}, {"YXZXZY", "1/24", 16}, {"YXZXYZ", "1/24", 16}, {"YYZXZZ", "1/24", 16}, {"YYZXYY", "1/24", 16}, {"ZXXYZY", "1/24", 32}, {"ZXXYYZ", "1/24", 32}, {"ZYXYZZ", "1/24", 32}, {"ZYXYYY", "1/24", 32}, {"YXYZZZ", "1/24", 32}, {"YXYZYY", "1/24", 32}, {"YYYZZY", "1/24", 32}, {"YYYZYZ", "1/24", 32}},
         3, 2, "2",
         {},
         {{"XZXZXX", "1/2", 4}, {"ZXZXZZ", "1/2", 16}}},
        {11, 6, {{1, 2}, {2, 3}, {2, 5}, {3, 4}, {3, 6}},
         25, {{"ZXZXZX", "1/12", 8}, {"ZYZXYX", "1/12", 8}, {"XZXZXZ", "1/12", 8}, {"XZXYXY", "1/12", 8}, {"XZYZXY", "1/12", 8}, {"XZYYXZ", "1/12", 8}, {"YXZXYX", "1/12", 8}, {"YYZXZX", "1/12", 8}, {"ZXXZYY", "1/12", 32}, {"ZYYYZY", "1/12", 32}, {"YXXYZZ", "1/12", 32}, {"YYYZYZ", "1/12", 32}},
         3, 2, "2",
         {},
         {{"ZXZXZX", "1/2", 8}, {"XZXZXZ", "1/2", 8}}},
        {12, 6, {{1, 2}, {2, 3}, {2, 6}, {3, 4}, {4, 5}},
         29, {{"XZXZXX", "1/6", 4}, {"XZYXYX", "1/12", 8}, {"XZYYZX", "1/12", 8}, {"ZXZXZZ", "1/12", 16}, {"ZXYZXY", "1/12", 16}, {"ZYZXZY", "1/12", 16}, {"ZYYZXZ", "1/12", 16}, {"YXZYYY", "1/12", 16}, {"YYZYYZ", "1/12", 16}, {"YXXXYZ", "1/12", 32}, {"YYXYZY", "1/12", 32}},
         4, 2, "2",
         {},
         {{"XZXZXX", "1/2", 4}, {"ZXZXZZ", "1/2", 16}}},
        {13, 6, {{1, 2}, {2, 3}, {3, 4}, {3, 6}, {4, 5}},
         27, {{"ZXZXZX", "1/6", 8}, {"XZXZXZ", "1/12", 8}, {"XZYZXY", "1/12", 8}, {"YYZYYX", "1/6", 8}, {"XZXXYY", "1/12", 16}, {"XZYXYZ", "1/12", 16}, {"YXXZXY", "1/12", 16}, {"YXYZXZ", "1/12", 16}, {"ZYXYZZ", "1/12", 32}, {"ZYYYZY", "1/12", 32}},
         5, 2, "2",
         {},
         {{"ZXZXZX", "1/2", 8}, {"XZXZXZ", "1/2", 8}}},
        {14, 6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}},
         31, {{"ZXZXZX", "1/6", 8}, {"XZXZXZ", "1/6", 8}, {"XZYYZX", "1/6", 8}, {"YXYZYY", "1/6", 16}, {"YYZYXY", "1/12", 16}, {"YYZYYZ", "1/12", 16}, {"ZYXXXY", "1/12", 32}, {"ZYXXYZ", "1/12", 32}},
         5, 2, "2",
         {},
         {{"ZXZXZX", "1/2", 8}, {"XZXZXZ", "1/2", 8}}},
        {15, 6, {{1, 2}, {2, 3}, {2, 6}, {3, 4}, {4, 5}, {4, 6}},
         33, {{"XZXZXX", "1/6", 4}, {"ZXZXZZ", "1/6", 16}, {"ZYZZXY", "1/6", 16}, {"XZYYZZ", "1/6", 16}, {"YXXXYX", "1/6", 16}, {"YYYYYY", "1/6", 16}},
         5, 2, "2",
         {},
         {{"XZXZXX", "1/2", 4}, {"ZXZXZZ", "1/2", 16}}},
        {16, 6, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 5}, {3, 6}},
         35, {{"ZZXXXZ", "1/6", 8}, {"ZXZXZX", "1/6", 8}, {"XZZZXX", "1/6", 8}, {"XXXYYY", "1/12", 16}, {"XXYYYZ", "1/12", 16}, {"YYXZZY", "1/12", 16}, {"YYYZZZ", "1/12", 16}, {"YYYYYY", "1/6", 32}},
         5, 3, "3",
         {{"XZZZXX", "1/3", 8}, {"ZXZXZZ", "1/3", 16}, {"ZZXZZZ", "1/3", 32}},
         {{"ZZXXXZ", "1/4", 8}, {"ZXZXZX", "1/4", 8}, {"XZZZXX", "1/4", 8}, {"XXXZZZ", "1/4", 32}}},
        {17, 6, {{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}, {5, 6}},
         37, {{"ZXZXZX", "1/8", 8}, {"XZZXZX", "1/12", 8}, {"XZXZZX", "1/12", 8}, {"ZZXZXZ", "1/24", 16}, {"ZYXYZX", "1/24", 16}, {"ZYYZYY", "1/8", 16}, {"XXYYXY", "1/8", 16}, {"YZXZYZ", "1/24", 16}, {"YXXYYZ", "1/12", 16}, {"YYXXXY", "1/24", 16}, {"YYYXXZ", "1/12", 16}, {"XYZZYZ", "1/24", 32}, {"YZZYXZ", "1/24", 32}, {"YZZYYY", "1/24", 32}},
         6, 3, "5/2",
         {{"ZXZZXZ", "1/3", 16}, {"XZXZZX", "1/3", 8}, {"ZZZXZZ", "1/3", 32}},
         {{"ZXZXZX", "1/6", 8}, {"XZZXZX", "1/6", 8}, {"XZXZZX", "1/6", 8}, {"ZZXZXZ", "1/6", 16}, {"ZXZZXZ", "1/6", 16}, {"XXXXXZ", "1/6", 32}}},
        {18, 6, {{1, 2}, {1, 6}, {2, 3}, {3, 4}, {4, 5}, {5, 6}},
         43, {{"ZXZXZX", "2/9", 8}, {"XZXZXZ", "2/9", 8}, {"ZZXZYY", "1/27", 16}, {"ZXZZYY", "1/27", 16}, {"ZYXYZX", "1/27", 16}, {"XYXYXX", "1/27", 16}, {"XYYXYY", "2/27", 16}, {"YZYYZY", "2/27", 16}, {"YXYZXZ", "1/27", 16}, {"YXYXXX", "1/27", 16}, {"YYZYYZ", "2/27", 16}, {"YYYYYY", "1/9", 16}},
         6, 2, "2",
         {},
         {{"ZXZXZX", "1/2", 8}, {"XZXZXZ", "1/2", 8}}},
        {19, 6, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}},
         63, {{"ZZZYYY", "16/129", 16}, {"ZZXZXZ", "8/129", 16}, {"ZZYYYX", "1/129", 16}, {"ZXZXZZ", "1/129", 16}, {"ZXYZYX", "4/43", 16}, {"ZYYXXY", "5/129", 16}, {"XZZZZX", "8/129", 16}, {"XXZXXZ", "8/129", 16}, {"XXXXXX", "7/129", 16}, {"XXYZYY", "5/129", 16}, {"XYXXYX", "5/129", 16}, {"XYYYZZ", "10/129", 16}, {"YZXXZY", "7/129", 16}, {"YZYZXZ", "1/43", 16}, {"YXXYZY", "10/129", 16}, {"YYZXYX", "4/129", 16}, {"YYZYXX", "2/43", 16}, {"YYYZZZ", "7/129", 16}, {"YYXXXZ", "2/43", 32}},
         12, 3, "3",
         {{"XZZZZX", "1/3", 16}, {"ZXZXZZ", "1/3", 16}, {"ZZXZXZ", "1/3", 16}},
         {{"ZZXZXZ", "1/6", 16}, {"ZZXXZZ", "1/6", 16}, {"ZXZZZX", "1/6", 16}, {"XZZZZX", "1/6", 16}, {"XXZXXZ", "1/6", 16}, {"XXXXXX", "1/6", 16}}},
        {20, 7, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}},
         -1, {},
         2, 2, "2",
         {},
         {{"ZXXXXXX", "1/2", 2}, {"XZZZZZZ", "1/2", 64}}},
        {21, 7, {{1, 7}, {2, 7}, {3, 7}, {4, 7}, {5, 6}, {6, 7}},
         51, {{"XXXXZXZ", "1/6", 4}, {"XXXXYYZ", "1/6", 4}, {"ZZZZXZX", "1/48", 32}, {"ZZZYXZY", "1/48", 32}, {"ZZYZXZY", "1/48", 32}, {"ZZYYXZX", "1/48", 32}, {"ZYZZXZY", "1/48", 32}, {"ZYZYXZX", "1/48", 32}, {"ZYYZXZX", "1/48", 32}, {"ZYYYXZY", "1/48", 32}, {"YZZZXZY", "1/48", 32}, {"YZZYXZX", "1/48", 32}, {"YZYZXZX", "1/48", 32}, {"YZYYXZY", "1/48", 32}, {"YYZZXZX", "1/48", 32}, {"YYZYXZY", "1/48", 32}, {"YYYZXZY", "1/48", 32}, {"YYYYXZX", "1/48", 32}, {"ZZZZZYY", "1/48", 64}, {"ZZZYZYX", "1/48", 64}, {"ZZYZYXX", "1/48", 64}, {"ZZYYYXY", "1/48", 64}, {"ZYZZYXX", "1/48", 64}, {"ZYZYZYY", "1/48", 64}, {"ZYYZZYY", "1/48", 64}, {"ZYYYYXX", "1/48", 64}, {"YZZZZYX", "1/48", 64}, {"YZZYYXY", "1/48", 64}, {"YZYZYXY", "1/48", 64}, {"YZYYZYX", "1/48", 64}, {"YYZZYXY", "1/48", 64}, {"YYZYZYX", "1/48", 64}, {"YYYZYXX", "1/48", 64}, {"YYYYZYY", "1/48", 64}},
         3, 2, "2",
         {},
         {{"XXXXZXZ", "1/2", 4}, {"ZZZZXZX", "1/2", 32}}},
        {22, 7, {{1, 7}, {2, 7}, {3, 7}, {4, 6}, {5, 6}, {6, 7}},
         45, {{"XXXZZXZ", "1/12", 8}, {"XXXZYYZ", "1/12", 8}, {"XXXYZYZ", "1/12", 8}, {"XXXYYXZ", "1/12", 8}, {"ZZZXXZX", "1/24", 16}, {"ZZYXXZY", "1/24", 16}, {"ZYZXXZY", "1/24", 16}, {"ZYYXXZX", "1/24", 16}, {"YZZXXZY", "1/24", 16}, {"YZYXXZX", "1/24", 16}, {"YYZXXZX", "1/24", 16}, {"YYYXXZY", "1/24", 16}, {"ZZZZZYY", "1/24", 64}, {"ZZYZYXX", "1/24", 64}, {"ZYZZYXX", "1/24", 64}, {"ZYYZZYY", "1/24", 64}, {"YZZYZXX", "1/24", 64}, {"YZYYYYY", "1/24", 64}, {"YYZYYYY", "1/24", 64}, {"YYYYZXX", "1/24", 64}},
         3, 2, "2",
         {},
         {{"XXXZZXZ", "1/2", 8}, {"ZZZXXZX", "1/2", 16}}},
        {23, 7, {{1, 7}, {2, 7}, {3, 7}, {4, 5}, {5, 6}, {6, 7}},
         53, {{"XXXXZXZ", "1/6", 4}, {"XXXZYYZ", "1/12", 8}, {"XXXYXYZ", "1/12", 8}, {"ZZZZXZX", "1/24", 32}, {"ZZZXZYY", "1/24", 32}, {"ZZYXZYX", "1/24", 32}, {"ZZYYYZY", "1/24", 32}, {"ZYZXZYX", "1/24", 32}, {"ZYZYYZY", "1/24", 32}, {"ZYYZXZX", "1/24", 32}, {"YZZYYZY", "1/24", 32}, {"YZYYYZX", "1/24", 32}, {"YYZZXZX", "1/24", 32}, {"YYZXZYY", "1/24", 32}, {"YYYZXZY", "1/24", 32}, {"ZYYZYXY", "1/24", 64}, {"YZZYXXX", "1/24", 64}, {"YZYYXXY", "1/24", 64}, {"YYYZYXX", "1/24", 64}},
         4, 2, "2",
         {},
         {{"XXXXZXZ", "1/2", 4}, {"ZZZZXZX", "1/2", 32}}},
        {24, 7, {{1, 7}, {2, 7}, {3, 5}, {4, 5}, {5, 6}, {6, 7}},
         49, {{"XXXXZXZ", "1/6", 4}, {"ZZXXZYY", "1/12", 16}, {"XXZZYYZ", "1/12", 16}, {"XXYZXYZ", "1/12", 16}, {"YZXXZYX", "1/12", 16}, {"ZZZZXZX", "1/12", 32}, {"ZYYYXZY", "1/12", 32}, {"YZYZYZY", "1/12", 32}, {"YYZYYZX", "1/12", 32}, {"ZYYYYXX", "1/12", 64}, {"YYZYXXY", "1/12", 64}},
         4, 2, "2",
         {},
         {{"XXXXZXZ", "1/2", 4}, {"ZZZZXZX", "1/2", 32}}},
        {25, 7, {{1, 2}, {1, 7}, {3, 7}, {4, 7}, {5, 6}, {6, 7}},
         45, {{"XZXXZXZ", "1/6", 8}, {"YYXXYYZ", "1/6", 8}, {"ZXZZXZX", "1/24", 16}, {"ZXZYXZY", "1/24", 16}, {"ZXYZXZY", "1/24", 16}, {"ZXYYXZX", "1/24", 16}, {"ZXZZZYY", "1/24", 32}, {"ZXZYYXX", "1/24", 32}, {"ZXYZYXX", "1/24", 32}, {"ZXYYYXY", "1/24", 32}, {"XYZZXZY", "1/24", 32}, {"XYZYXZX", "1/24", 32}, {"XYYZXZX", "1/24", 32}, {"XYYYXZY", "1/24", 32}, {"YZZZZYX", "1/24", 64}, {"YZZYZYY", "1/24", 64}, {"YZYZZYY", "1/24", 64}, {"YZYYYXX", "1/24", 64}},
         5, 2, "2",
         {},
         {{"XZXXZXZ", "1/2", 8}, {"ZXZZXZX", "1/2", 16}}},
        {26, 7, {{1, 7}, {2, 7}, {3, 6}, {4, 5}, {5, 6}, {6, 7}},
         45, {{"XXZXZXZ", "1/12", 8}, {"XXYXZYZ", "1/12", 8}, {"ZZXZXZX", "1/12", 16}, {"ZYXYYZY", "1/12", 16}, {"XXZYXYZ", "1/12", 16}, {"XXYZYXZ", "1/12", 16}, {"YZXYYZY", "1/12", 16}, {"YYXZXZX", "1/12", 16}, {"ZYYXZXX", "1/12", 32}, {"YZZXZYX", "1/12", 32}, {"ZZZZYXY", "1/12", 64}, {"YYYYXYY", "1/12", 64}},
         5, 2, "2",
         {},
         {{"XXZXZXZ", "1/2", 8}, {"ZZXZXZX", "1/2", 16}}},
        {27, 7, {{1, 2}, {2, 3}, {2, 7}, {3, 4}, {4, 5}, {5, 6}},
         53, {{"XZXZXZX", "1/6", 8}, {"ZXZXZXZ", "1/12", 16}, {"ZYZXZXY", "1/12", 16}, {"XZYXYZX", "1/6", 16}, {"ZXXYZXY", "1/12", 32}, {"ZYYZYYZ", "1/12", 32}, {"YXZYXYY", "1/12", 32}, {"YXYZYYZ", "1/12", 32}, {"YYZYXYZ", "1/12", 32}, {"YYXYZXY", "1/12", 32}},
         5, 2, "2",
         {},
         {{"XZXZXZX", "1/2", 8}, {"ZXZXZXZ", "1/2", 16}}},
        {28, 7, {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {5, 6}, {6, 7}},
         51, {{"ZXZXXZX", "1/6", 8}, {"XZXZZXZ", "1/12", 16}, {"XZXYYZX", "1/12", 16}, {"XZYYZYY", "1/12", 16}, {"YYZXYXY", "1/12", 16}, {"YYZXYYZ", "1/12", 16}, {"ZYXZYZX", "1/12", 32}, {"ZYYZZYY", "1/12", 32}, {"XZYZXYZ", "1/12", 32}, {"YXXYZXZ", "1/12", 32}, {"YXYYXXY", "1/12", 64}},
         6, 2, "2",
         {},
         {{"ZXZXXZX", "1/2", 8}, {"XZXZZXZ", "1/2", 16}}},
        {29, 7, {{1, 2}, {2, 3}, {3, 4}, {3, 6}, {4, 5}, {6, 7}},
         53, {{"XZXZXZX", "1/12", 8}, {"ZXZXZXZ", "1/6", 16}, {"ZYYZXZX", "1/12", 16}, {"XZYZXYZ", "1/12", 16}, {"XZYYZZX", "1/12", 16}, {"YYZYYYY", "1/6", 16}, {"ZYXXYZX", "1/12", 32}, {"XZXYZXY", "1/12", 32}, {"YXXZXYZ", "1/12", 32}, {"YXYXYXY", "1/12", 64}},
         8, 2, "2",
         {},
         {{"XZXZXZX", "1/2", 8}, {"ZXZXZXZ", "1/2", 16}}},
        {30, 7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}},
         57, {{"XZXZXZX", "1/6", 8}, {"ZXZXZXZ", "1/8", 16}, {"ZXZYYZX", "1/24", 16}, {"XZYXYZX", "1/24", 16}, {"XZYYZYY", "1/8", 16}, {"YYZXZYY", "1/24", 16}, {"ZYXXYZX", "1/12", 32}, {"ZYYZYXY", "1/24", 32}, {"YXXYZXZ", "1/24", 32}, {"YXYZYXY", "1/8", 32}, {"YYZYXYZ", "1/8", 32}, {"ZYXXXYZ", "1/24", 64}},
         7, 2, "2",
         {},
         {{"XZXZXZX", "1/2", 8}, {"ZXZXZXZ", "1/2", 16}}},
        {31, 7, {{1, 2}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {3, 4}, {3, 7}},
         57, {{"ZXZXXXX", "1/6", 4}, {"ZZYYXXZ", "1/12", 16}, {"ZYXZXXY", "1/12", 16}, {"XZZYZYX", "1/12", 32}, {"XZXZZZZ", "1/12", 32}, {"XXXXYZY", "1/12", 32}, {"XYYYYYY", "1/12", 32}, {"YZYZZYY", "1/12", 32}, {"YXYXZZZ", "1/12", 32}, {"YYZZYYX", "1/12", 32}, {"YYXYYZZ", "1/12", 32}},
         5, 2, "2",
         {},
         {{"ZXZXXXX", "1/2", 4}, {"XZXZZZZ", "1/2", 32}}},
        {32, 7, {{1, 7}, {2, 7}, {3, 6}, {4, 5}, {5, 6}, {5, 7}, {6, 7}},
         61, {{"XXZXZXZ", "1/6", 8}, {"XXXZXZZ", "1/6", 8}, {"ZZXXZZX", "1/12", 16}, {"ZYXXZZY", "1/12", 16}, {"ZZZZYYY", "1/12", 32}, {"ZYZYXYX", "1/24", 32}, {"ZYYYXXX", "1/24", 32}, {"YZYYXXX", "1/12", 32}, {"YYZZYYY", "1/24", 32}, {"YYYZYXY", "1/24", 32}, {"YZYYYYY", "1/12", 64}, {"YYYYYYX", "1/12", 64}},
         5, 3, "3",
         {{"ZXZZXZX", "1/3", 16}, {"XZXZZXZ", "1/3", 16}, {"ZZZXZZZ", "1/3", 64}},
         {{"XXZXZXZ", "1/4", 8}, {"XXXZXZZ", "1/4", 8}, {"ZZXXZZX", "1/4", 16}, {"ZZZZXXX", "1/4", 64}}},
        {33, 7, {{1, 3}, {2, 3}, {3, 4}, {3, 7}, {4, 5}, {5, 6}, {6, 7}},
         65, {{"XXZZXZX", "1/8", 8}, {"XXZXZZX", "1/8", 8}, {"XXZZYXY", "1/24", 16}, {"XXZYXYZ", "1/24", 16}, {"ZZXXYYY", "1/12", 32}, {"ZZYYZXZ", "1/24", 32}, {"ZZYYXXY", "1/24", 32}, {"ZYXYZXZ", "1/12", 32}, {"ZYYZZXZ", "1/24", 32}, {"ZYYZYYZ", "1/24", 32}, {"YZXXXYY", "1/24", 32}, {"YZYZZXZ", "1/24", 32}, {"YZYXYYY", "1/24", 32}, {"YYXYYYX", "1/12", 32}, {"YYYZXZY", "1/24", 32}, {"YYYYXXY", "1/24", 32}, {"YZXXYZZ", "1/24", 64}},
         6, 3, "5/2",
         {{"ZXZZXZZ", "1/3", 32}, {"XZXXZXZ", "1/3", 8}, {"ZZZZZZX", "1/3", 64}},
         {{"XXZZXZX", "1/6", 8}, {"XXZXZZX", "1/6", 8}, {"XXZXZXZ", "1/6", 8}, {"ZZXZZXZ", "1/6", 32}, {"ZZXZXZZ", "1/6", 32}, {"ZZXXXXX", "1/6", 64}}},
        {34, 7, {{1, 4}, {2, 3}, {3, 4}, {3, 6}, {4, 5}, {5, 6}, {6, 7}},
         59, {{"XZXZXZX", "1/6", 8}, {"ZXZXZXZ", "1/6", 16}, {"ZXZYYZX", "1/12", 16}, {"XXZZYYZ", "1/12", 16}, {"ZZYYZZX", "1/24", 32}, {"ZYYYXYZ", "1/24", 32}, {"XZYZZXY", "1/24", 32}, {"XZYZZYZ", "1/24", 32}, {"YZYXZZX", "1/24", 32}, {"YYXYYYY", "1/6", 32}, {"YYYXXXY", "1/8", 32}},
         6, 2, "2",
         {},
         {{"XZXZXZX", "1/2", 8}, {"ZXZXZXZ", "1/2", 16}}},
        {35, 7, {{1, 6}, {2, 3}, {3, 4}, {3, 7}, {4, 5}, {5, 6}, {6, 7}},
         67, {{"XXZZXZX", "1/6", 8}, {"XXZXZZX", "1/12", 8}, {"ZXZXZXZ", "1/12", 16}, {"XZYZXZY", "1/12", 16}, {"ZZXXYYY", "1/6", 32}, {"ZYXYZXZ", "1/12", 32}, {"YZYYZYZ", "1/12", 32}, {"YYXYXYY", "1/12", 32}, {"YYYZYXZ", "1/12", 32}, {"YYYYYXX", "1/12", 32}},
         6, 3, "5/2",
         {{"ZXZXZZZ", "1/3", 32}, {"XZXZXZX", "1/3", 8}, {"ZZZZZXZ", "1/3", 64}},
         {{"XXZZXZX", "1/6", 8}, {"XXZXZZX", "1/6", 8}, {"ZXZXZXZ", "1/6", 16}, {"XZXZXZZ", "1/6", 16}, {"ZZXZZXZ", "1/6", 32}, {"ZZXXXXX", "1/6", 64}}},
        {36, 7, {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {4, 7}, {5, 6}},
         61, {{"XZXZZXX", "1/6", 8}, {"ZXZZXZX", "1/12", 16}, {"ZXZXZXZ", "1/12", 16}, {"XZYXXYY", "1/8", 16}, {"XZYYYZZ", "1/24", 16}, {"YYZZXZX", "1/12", 16}, {"YYZYZXY", "1/12", 16}, {"ZYXYYZZ", "1/8", 32}, {"YXXXXYY", "1/24", 32}, {"ZYYYYYY", "1/24", 64}, {"YXYXYYZ", "1/12", 64}, {"YXYYYYY", "1/24", 64}},
         7, 3, "3",
         {{"XZXZZXX", "1/3", 8}, {"ZXZXZZZ", "1/3", 32}, {"ZZZZXZZ", "1/3", 64}},
         {{"XZXZZXX", "1/4", 8}, {"ZXZZXZX", "1/4", 16}, {"ZXZXZXZ", "1/4", 16}, {"XZXXXZZ", "1/4", 32}}},
        {37, 7, {{1, 2}, {2, 3}, {2, 6}, {3, 4}, {4, 5}, {5, 6}, {6, 7}},
         65, {{"XZXZXZX", "1/6", 8}, {"ZXZXZZX", "1/24", 16}, {"ZYYZXZX", "5/72", 16}, {"XZZXZXZ", "5/72", 16}, {"XZXZYYZ", "1/24", 16}, {"XZYYZXZ", "1/18", 16}, {"YYZXZZX", "1/18", 16}, {"ZXXYYXY", "1/8", 32}, {"ZYZXZXY", "1/24", 32}, {"ZYYXXYZ", "1/18", 32}, {"YXZXZYZ", "5/72", 32}, {"YXYYXYY", "1/24", 32}, {"YYYYYXZ", "1/24", 32}, {"YYYYYYY", "5/72", 32}, {"YXZZYYY", "1/18", 64}},
         7, 3, "5/2",
         {{"ZXZXZZX", "1/3", 16}, {"XZXZZXZ", "1/3", 16}, {"ZZZZXZZ", "1/3", 64}},
         {{"XZXZXZX", "1/6", 8}, {"ZXZZXZX", "1/6", 16}, {"ZXZXZZX", "1/6", 16}, {"XZZXZXZ", "1/6", 16}, {"XZXZZXZ", "1/6", 16}, {"ZXXXXXZ", "1/6", 64}}},
        {38, 7, {{1, 2}, {1, 6}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}},
         75, {{"XZXZXZX", "4/21", 8}, {"ZXZXZXZ", "1/6", 16}, {"ZXZXZYY", "1/42", 16}, {"XZYXYZX", "1/21", 16}, {"YXYZXZX", "1/21", 16}, {"YYZYYZX", "1/21", 16}, {"ZXZYXXY", "1/21", 32}, {"ZYXYZYY", "1/21", 32}, {"ZYYZYXY", "1/21", 32}, {"XYXXXYZ", "1/21", 32}, {"YZYYZXY", "1/14", 32}, {"YZYYZYZ", "1/42", 32}, {"YXXXYYY", "1/21", 32}, {"YYYYYYZ", "2/21", 32}, {"XYZZYYY", "1/21", 64}},
         7, 2, "2",
         {},
         {{"XZXZXZX", "1/2", 8}, {"ZXZXZXZ", "1/2", 16}}},
        {39, 7, {{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}},
         67, {{"ZZXZXZX", "1/6", 16}, {"ZXZXZYY", "1/12", 16}, {"XZZXZXZ", "1/12", 16}, {"XZYYZYY", "1/24", 16}, {"XXYYYZX", "1/8", 16}, {"YZXZYZX", "1/24", 16}, {"YYZXZXZ", "1/12", 16}, {"YYZXZYY", "1/24", 16}, {"ZYYZYXY", "1/12", 32}, {"XYYYYXY", "1/24", 32}, {"YXXYXYZ", "1/8", 32}, {"YYYXYXY", "1/24", 32}, {"XYZZXYZ", "1/24", 64}},
         9, 3, "5/2",
         {{"ZXZZXZX", "1/3", 16}, {"XZXZZXZ", "1/3", 16}, {"ZZZXZZZ", "1/3", 64}},
         {{"ZZXZXZX", "1/6", 16}, {"ZXZZXZX", "1/6", 16}, {"ZXZXZXZ", "1/6", 16}, {"XZZXZXZ", "1/6", 16}, {"XZXZZXZ", "1/6", 16}, {"XXXXXZX", "1/6", 32}}},
        {40, 7, {{1, 2}, {1, 7}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}},
         85, {{"ZZXZXZX", "2/15", 16}, {"ZXZZXZX", "1/30", 16}, {"ZXZYYZX", "1/30", 16}, {"XZZXZXZ", "1/30", 16}, {"XZXZZXZ", "1/30", 16}, {"YYZXZXZ", "1/6", 16}, {"ZYXXYZX", "1/30", 32}, {"ZYYZZYY", "1/15", 32}, {"ZYYZYXY", "1/30", 32}, {"XZZYXYZ", "1/15", 32}, {"XXXYYYX", "1/10", 32}, {"XXYYXXY", "1/15", 32}, {"XYXYYYY", "1/30", 32}, {"YZYXYZY", "1/30", 32}, {"YZYYZZY", "1/30", 32}, {"YXYZXZZ", "1/30", 32}, {"YXYXYYY", "1/15", 32}},
         8, 3, "7/3",
         {{"XZXZXZZ", "1/3", 16}, {"ZXZXZXZ", "1/3", 16}, {"ZZZZZZX", "1/3", 64}},
         {{"ZZXZXZX", "1/8", 16}, {"ZXZZXZX", "1/8", 16}, {"ZXZXZZX", "1/8", 16}, {"ZXZXZXZ", "1/8", 16}, {"XZZXZXZ", "1/8", 16}, {"XZXZZXZ", "1/8", 16}, {"XZXZXZZ", "1/8", 16}, {"XXXXXXX", "1/8", 64}}},
        {41, 7, {{1, 2}, {1, 5}, {1, 6}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}},
         77, {{"ZZXZXZX", "2/17", 16}, {"ZXZXZXZ", "7/51", 16}, {"XXYYYZX", "5/34", 16}, {"XYYYXZX", "1/34", 16}, {"YZXZYXY", "5/34", 16}, {"YYZXZZX", "1/102", 16}, {"YYYXXZX", "1/34", 16}, {"ZZYYZYY", "1/102", 32}, {"ZYYZZYY", "7/102", 32}, {"XYZXZYZ", "11/102", 32}, {"XYZYXYZ", "1/51", 32}, {"XYXYXYY", "1/34", 32}, {"YZZYXXY", "1/51", 32}, {"YZZYXYZ", "2/51", 32}, {"YXYXXXZ", "1/34", 32}, {"YXYXXYY", "1/51", 32}, {"YYXYYYY", "2/51", 32}},
         10, 3, "3",
         {{"XZXZZZX", "1/3", 16}, {"ZXZZXZZ", "1/3", 32}, {"ZZZXZXZ", "1/3", 32}},
         {{"ZZXZXZX", "1/8", 16}, {"ZXZZXZX", "1/8", 16}, {"ZXZXZXZ", "1/4", 16}, {"XZZXZZX", "1/8", 16}, {"XZXZZZX", "1/8", 16}, {"XZXZXXZ", "1/8", 32}, {"XXXXXXZ", "1/8", 32}}},
        {42, 7, {{1, 3}, {1, 7}, {2, 3}, {2, 6}, {3, 4}, {4, 5}, {5, 6}, {6, 7}},
         87, {{"ZZXZXZX", "1/6", 16}, {"ZYYZXZX", "1/6", 16}, {"XZZXZXZ", "1/6", 16}, {"XYZXZYZ", "1/6", 16}, {"YXXYYXY", "1/6", 16}, {"YXYYYYY", "1/6", 16}},
         10, 3, "5/2",
         {{"ZXZZXZZ", "1/3", 32}, {"XZXZZXZ", "1/3", 16}, {"ZZZXZZX", "1/3", 32}},
         {{"ZZXZXZX", "1/4", 16}, {"ZXZXZZX", "1/8", 16}, {"XZZXZXZ", "1/4", 16}, {"XXZZXZZ", "1/8", 16}, {"ZXXXXXZ", "1/8", 64}, {"XXXZZXX", "1/8", 64}}},
        {43, 7, {{1, 2}, {1, 4}, {1, 7}, {2, 3}, {3, 4}, {3, 6}, {4, 5}, {5, 6}, {5, 7}},
         101, {{"ZXZXZXX", "1/4", 8}, {"XZXZXZZ", "2/9", 16}, {"YYYYYYY", "1/9", 16}, {"ZZYXXXY", "1/36", 32}, {"ZYYZYZY", "1/36", 32}, {"ZYYYZYX", "1/36", 32}, {"XZYXXZY", "1/36", 32}, {"XXXYYYY", "1/18", 32}, {"XYYYZYZ", "1/36", 32}, {"YZYYYZX", "1/18", 32}, {"YXYXZYY", "1/36", 32}, {"YYZZYYZ", "1/12", 32}, {"YYXYXXY", "1/18", 32}},
         9, 2, "2",
         {},
         {{"ZXZXZXX", "1/2", 8}, {"XZXZXZZ", "1/2", 16}}},
        {44, 7, {{1, 4}, {1, 7}, {2, 3}, {2, 7}, {3, 4}, {3, 5}, {4, 5}, {5, 6}, {6, 7}},
         103, {{"ZZYYYZX", "23/123", 16}, {"ZXZXZXZ", "3/41", 16}, {"XZXZZXZ", "11/123", 16}, {"XXZZZXZ", "3/41", 16}, {"XXZZXZZ", "11/123", 16}, {"YXZYZXZ", "1/123", 16}, {"YYXXXYX", "17/123", 16}, {"ZZYYZYY", "2/41", 32}, {"ZYYZXXY", "1/41", 32}, {"XYZYYYY", "10/123", 32}, {"YZZZXZY", "1/123", 32}, {"YXYZYYY", "1/41", 32}, {"YXYXXYY", "5/123", 32}, {"YYXXZZY", "5/123", 32}, {"YYXXYXY", "5/123", 32}, {"YYYYXZX", "1/123", 32}, {"YXXZXXY", "1/41", 64}},
         11, 3, "3",
         {{"ZXZZZXZ", "1/3", 32}, {"XZXZXZZ", "1/3", 16}, {"ZZZXZZX", "1/3", 32}},
         {{"ZXZXZXZ", "1/4", 16}, {"XXZZXZZ", "1/4", 16}, {"ZZXZZZX", "1/4", 32}, {"XZXXXXX", "1/4", 32}}},
        {45, 7, {{1, 2}, {2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 7}, {4, 5}, {4, 6}, {5, 6}, {6, 7}},
         105, {{"XZZZXZX", "23/375", 16}, {"XZZYYZX", "1/25", 16}, {"XZZYYXY", "18/871", 16}, {"XZXXZXX", "67/600", 16}, {"XZYZXZY", "58/911", 16}, {"XZYXYYZ", "9/250", 16}, {"ZXZZZXZ", "47/493", 32}, {"ZXZZYXY", "7/250", 32}, {"ZXXXXZZ", "13/300", 32}, {"ZYZXYXY", "3/100", 32}, {"ZYZYXYZ", "29/500", 32}, {"ZYYZZZY", "19/1000", 32}, {"YXXZYYX", "33/500", 32}, {"YXXYZZY", "53/1000", 32}, {"YXYYXXZ", "47/986", 32}, {"YYXXXYY", "48/809", 32}, {"YYYXYZZ", "53/1000", 32}, {"YYYYZYX", "42/773", 32}, {"ZYYYYYY", "25/419", 64}},
         12, 3, "3",
         {{"ZXZZZXZ", "1/3", 32}, {"XZZXZZX", "1/3", 16}, {"ZZXZXZZ", "1/3", 32}},
         {{"XZZZXZX", "1/4", 16}, {"XZXXZXX", "1/4", 16}, {"ZXZZZXZ", "1/4", 32}, {"ZXXXXZZ", "1/4", 32}}},

    };
    return table;
}

/// Catalogue entries whose printed coloring rows are not independent sets of the graph.
inline const std::vector<int> &misprinted_coloring_rows() {
    static const std::vector<int> v = {32, 33, 35, 42, 44};
    return v;
}

/// Six-vertex graph with chi = 5 but an XZ cover of size 4 and a two-basis cover of size 2.
inline Graph graph_94() {
    return Graph::from_edges(
        6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}});
}

inline const std::vector<const char *> &graph_94_xz_protocol() {
    static const std::vector<const char *> v = {"ZZZZXX", "ZZZXZX", "XXXZZX", "ZZXZZZ"};
    return v;
}

/// Two further optimal protocols on the five-ring, uniform over six settings.
inline const std::vector<const char *> &ring5_left() {
    static const std::vector<const char *> v = {"XZZXZ", "ZZXZX", "XXYYY", "ZYYZX", "YXXYY", "YYZXZ"};
    return v;
}
inline const std::vector<const char *> &ring5_right() {
    static const std::vector<const char *> v = {"ZXZZX", "ZXZXZ", "XYYYX", "XZYYZ", "YYXXY", "YZXZY"};
    return v;
}

}  // namespace gsv::fixtures

#endif
