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

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gsv/document.h"
#include "gsv/errors.h"
#include "gsv/optimize.h"
#include "gsv/oracle.h"
#include "gsv/testgen.h"
#include "gsv/verify.h"

using namespace gsv;
using nlohmann::ordered_json;

namespace {

struct GraphInput {
    std::string graph6;
    std::string file;

    std::vector<Graph> load() const {
        if (!graph6.empty() && !file.empty()) {
            throw ContractViolation("give either --graph6 or --file, not both");
        }
        if (!graph6.empty()) {
            return {parse_graph6(graph6)};
        }
        if (file.empty()) {
            throw ContractViolation("a graph is required (--graph6 or --file)");
        }
        std::ifstream in(file);
        if (!in) {
            throw ParseError("cannot read " + file);
        }
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_graph_text(ss.str());
    }

    Graph one() const {
        auto gs = load();
        if (gs.size() != 1) {
            throw ContractViolation("this command takes exactly one graph");
        }
        return gs[0];
    }
};

void add_graph_options(CLI::App *cmd, GraphInput &in) {
    cmd->add_option("-g,--graph6", in.graph6, "Graph in graph6 format");
    cmd->add_option("-f,--file", in.file, "File with graph6 lines or a 1-based edge list");
}

struct SampleOptions {
    double epsilon = 0;
    double delta = 0;

    void add(CLI::App *cmd) {
        cmd->add_option("--epsilon", epsilon, "Infidelity to reject; adds num_tests to the report");
        cmd->add_option("--delta", delta, "Significance level; adds num_tests to the report");
    }
    void fill(ordered_json &report, const Rational &nu) const {
        if (epsilon > 0 && delta > 0) {
            report["num_tests"] = num_tests(nu, epsilon, delta);
        }
    }
};

void print(const ordered_json &j) {
    std::cout << j.dump(2) << "\n";
}

ordered_json evaluation_report(const Graph &g, const Protocol &p) {
    auto rep = evaluate(g, p);
    ordered_json r;
    r["beta"] = to_string(rep.beta);
    r["nu"] = to_string(rep.nu);
    r["valid"] = rep.valid;
    r["num_settings"] = p.size();
    return r;
}

void emit_protocol(const Graph &g, const std::string &mode, const Protocol &p, ordered_json extra,
                   const SampleOptions &so) {
    ProtocolDocument doc;
    doc.graph = g;
    doc.mode = mode;
    doc.protocol = p;
    doc.report = evaluation_report(g, p);
    for (auto &[k, v] : extra.items()) {
        doc.report[k] = v;
    }
    if (!doc.report["valid"].get<bool>()) {
        print(to_json(doc));
        throw InvalidProtocol("the protocol cannot verify this state");
    }
    so.fill(doc.report, parse_rational(doc.report["nu"].get<std::string>()));
    print(to_json(doc));
}

ordered_json report_row(const Graph &g, bool with_chi_star, bool with_lp) {
    ordered_json r;
    r["graph6"] = emit_graph6(g);
    r["n"] = g.n();
    r["edges"] = g.num_edges();
    r["connected"] = g.is_connected();
    auto adm = admissible_test_vectors(g);
    r["eta"] = adm.size();
    r["eta_xz"] = xz_admissible_test_vectors(g).size();
    size_t k = kappa(g);
    r["kappa"] = k;
    r["lambda_p"] = to_string(pow2(-(long)k));
    r["alpha"] = independence_number(g);
    r["chi"] = chromatic_number(g).chi;
    r["chi_lc"] = chi_lc(g);
    r["chi_tilde"] = adm.empty() ? 0 : min_settings(adm).m;
    if (with_chi_star) {
        r["chi_star"] = to_string(chi_star(g));
    }
    if (with_lp) {
        r["nu"] = to_string(1 - max_gap_lp(adm).beta);
    }
    return r;
}

void print_table(const std::vector<ordered_json> &rows) {
    if (rows.empty()) {
        return;
    }
    std::vector<std::string> keys;
    for (auto &[k, v] : rows[0].items()) {
        keys.push_back(k);
    }
    auto cell = [](const ordered_json &v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    std::vector<size_t> width;
    for (const auto &k : keys) {
        size_t w = k.size();
        for (const auto &r : rows) {
            w = std::max(w, cell(r[k]).size());
        }
        width.push_back(w);
    }
    for (size_t i = 0; i < keys.size(); i++) {
        std::cout << std::left << std::setw((int)width[i] + 2) << keys[i];
    }
    std::cout << "\n";
    for (const auto &r : rows) {
        for (size_t i = 0; i < keys.size(); i++) {
            std::cout << std::left << std::setw((int)width[i] + 2) << cell(r[keys[i]]);
        }
        std::cout << "\n";
    }
}

ordered_json oracle_check(const Graph &g) {
    size_t checked = 0;
    size_t mismatches = 0;
    bool idempotent = true;
    bool commuting = true;
    std::vector<oracle::DenseMatrix> ps;
    for (const auto &mu : enumerate_complete_settings(g.n())) {
        auto p = oracle::dense_canonical_projector(g, mu);
        auto diag = oracle::graph_basis_diagonal(g, p);
        auto tv = test_vector_graph(g, mu);
        bool ok = diag[0] == 1 && oracle::trace(p) == Rational((long)tv.projector_rank());
        for (uint64_t w = 1; w < diag.size(); w++) {
            ok = ok && diag[w] == Rational(tv.at(w) ? 1 : 0);
        }
        mismatches += !ok;
        idempotent = idempotent && oracle::is_idempotent(p);
        ps.push_back(std::move(p));
        checked++;
    }
    for (size_t i = 0; i < ps.size() && commuting; i++) {
        for (size_t j = i + 1; j < ps.size() && commuting; j++) {
            commuting = oracle::commute(ps[i], ps[j]);
        }
    }
    ordered_json r;
    r["graph"] = graph_to_json(g);
    r["settings_checked"] = checked;
    r["mismatches"] = mismatches;
    r["idempotent"] = idempotent;
    r["commuting"] = commuting;
    r["ok"] = mismatches == 0 && idempotent && commuting;
    return r;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Optimal Pauli-measurement verification of graph states"};
    app.require_subcommand(1);

    GraphInput in;
    SampleOptions so;
    size_t limit = kDefaultEnumerationLimit;

    auto *optimal = app.add_subcommand("optimal", "Optimal protocol from the exact LP over admissible settings");
    add_graph_options(optimal, in);
    so.add(optimal);
    optimal->add_option("--limit", limit, "Largest n for the 3^n sweep");

    auto *xz = app.add_subcommand("xz-optimal", "Optimal protocol using X and Z measurements only");
    add_graph_options(xz, in);
    so.add(xz);

    std::string restrict_to = "pauli";
    auto *ms = app.add_subcommand("min-settings", "Uniform protocol with the fewest settings");
    add_graph_options(ms, in);
    so.add(ms);
    ms->add_option("--restrict", restrict_to, "pauli | xz | two-basis")
        ->check(CLI::IsMember({"pauli", "xz", "two-basis"}));

    bool adm_xz = false;
    auto *adm = app.add_subcommand("admissible", "List admissible settings");
    add_graph_options(adm, in);
    adm->add_flag("--xz", adm_xz, "Only X/Z settings");

    auto *kap = app.add_subcommand("kappa", "Minimum test-projector rank and Pauli overlap");
    add_graph_options(kap, in);

    auto *clc = app.add_subcommand("chi-lc", "Chromatic number minimized over the local-complementation orbit");
    add_graph_options(clc, in);

    bool with_chi_star = false;
    bool with_lp = false;
    std::string format = "json";
    auto *rep = app.add_subcommand("report", "Table of invariants for one or many graphs");
    add_graph_options(rep, in);
    rep->add_flag("--chi-star", with_chi_star, "Include the fractional chromatic number");
    rep->add_flag("--lp", with_lp, "Include the optimal gap");
    rep->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));

    std::string nu_text;
    auto *sc = app.add_subcommand("sample-count", "Tests needed to reach a given confidence");
    sc->add_option("--nu", nu_text, "Spectral gap as a rational, e.g. 2/3")->required();
    sc->add_option("--epsilon", so.epsilon, "Infidelity to reject")->required();
    sc->add_option("--delta", so.delta, "Significance level")->required();

    auto *oc = app.add_subcommand("oracle-check", "Compare test vectors with a dense state-vector oracle (n <= 4)");
    add_graph_options(oc, in);

    size_t corpus_n = 0;
    bool connected_only = false;
    auto *cp = app.add_subcommand("corpus", "graph6 lines for every graph on n vertices up to isomorphism (n <= 7)");
    cp->add_option("-n", corpus_n, "Vertex count")->required();
    cp->add_flag("--connected", connected_only, "Only connected graphs");

    std::string doc_file;
    auto *ev = app.add_subcommand("evaluate", "Evaluate a protocol document");
    ev->add_option("protocol", doc_file, "Protocol document (JSON)")->required();
    so.add(ev);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*optimal) {
            Graph g = in.one();
            auto sol = optimal_protocol(g, limit);
            ordered_json extra;
            extra["eta"] = admissible_test_vectors(g, limit).size();
            emit_protocol(g, "optimal", sol.protocol, extra, so);
        } else if (*xz) {
            Graph g = in.one();
            auto sol = max_gap_lp_xz(g);
            ordered_json extra;
            extra["eta_xz"] = xz_admissible_test_vectors(g).size();
            emit_protocol(g, "xz-optimal", sol.protocol, extra, so);
        } else if (*ms) {
            Graph g = in.one();
            ordered_json extra;
            Protocol p;
            if (restrict_to == "two-basis") {
                auto r = min_settings_two_basis(g);
                extra["m"] = r.m;
                extra["alphabets"] = r.alphabets;
                p = r.protocol;
            } else {
                auto tvs = restrict_to == "xz" ? xz_admissible_test_vectors(g) : admissible_test_vectors(g);
                auto r = min_settings(tvs);
                extra["m"] = r.m;
                p = r.protocol;
            }
            extra["restrict"] = restrict_to;
            emit_protocol(g, "min-settings", p, extra, so);
        } else if (*adm) {
            Graph g = in.one();
            auto tvs = adm_xz ? xz_admissible_test_vectors(g) : admissible_test_vectors(g);
            ordered_json j;
            j["graph"] = graph_to_json(g);
            j[adm_xz ? "eta_xz" : "eta"] = tvs.size();
            ordered_json rows = ordered_json::array();
            for (const auto &t : tvs) {
                ordered_json r;
                r["setting"] = setting_to_string(t.setting);
                r["rank"] = t.rank;
                r["projector_rank"] = t.projector_rank();
                rows.push_back(r);
            }
            j["settings"] = rows;
            print(j);
        } else if (*kap) {
            Graph g = in.one();
            ordered_json j;
            j["graph"] = graph_to_json(g);
            size_t k = kappa(g);
            j["kappa"] = k;
            j["lambda_p"] = to_string(pow2(-(long)k));
            j["alpha"] = independence_number(g);
            print(j);
        } else if (*clc) {
            Graph g = in.one();
            auto s = chi_lc_search(g);
            ordered_json j;
            j["graph"] = graph_to_json(g);
            j["chi"] = chromatic_number(g).chi;
            j["chi_lc"] = s.chi_lc;
            j["orbit_visited"] = s.orbit_size;
            j["orbit_exhausted"] = s.exhausted;
            print(j);
        } else if (*rep) {
            std::vector<ordered_json> rows;
            for (const auto &g : in.load()) {
                rows.push_back(report_row(g, with_chi_star, with_lp));
            }
            if (format == "text") {
                print_table(rows);
            } else {
                print(ordered_json(rows));
            }
        } else if (*sc) {
            ordered_json j;
            j["nu"] = nu_text;
            j["epsilon"] = so.epsilon;
            j["delta"] = so.delta;
            j["num_tests"] = num_tests(parse_rational(nu_text), so.epsilon, so.delta);
            print(j);
        } else if (*oc) {
            auto r = oracle_check(in.one());
            print(r);
            return r["ok"].get<bool>() ? 0 : 1;
        } else if (*cp) {
            for (const auto &g : nonisomorphic_graphs(corpus_n)) {
                if (!connected_only || g.is_connected()) {
                    std::cout << emit_graph6(g) << "\n";
                }
            }
        } else if (*ev) {
            std::ifstream f(doc_file);
            if (!f) {
                throw ParseError("cannot read " + doc_file);
            }
            std::stringstream ss;
            ss << f.rdbuf();
            auto doc = parse_document(ss.str());
            auto r = evaluation_report(doc.graph, doc.protocol);
            so.fill(r, parse_rational(r["nu"].get<std::string>()));
            print(r);
        }
    } catch (const gsv::ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded &e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const InvalidProtocol &e) {
        std::cerr << "invalid protocol: " << e.what() << "\n";
        return 4;
    } catch (const ContractViolation &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
