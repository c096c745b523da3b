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

#include "gsv/lp.h"

#include "gsv/errors.h"

namespace gsv {

namespace {

struct Tableau {
    size_t m = 0;
    size_t cols = 0;
    std::vector<std::vector<Rational>> a;  // m rows of `cols` entries
    std::vector<Rational> b;
    std::vector<size_t> basis;
    std::vector<bool> allowed;
    size_t pivots = 0;

    void pivot(size_t pr, size_t pc, std::vector<Rational> &cost, Rational &cost_rhs) {
        pivots++;
        Rational inv = 1 / a[pr][pc];
        std::vector<size_t> nz;
        for (size_t j = 0; j < cols; j++) {
            if (sgn(a[pr][j]) != 0) {
                a[pr][j] *= inv;
                nz.push_back(j);
            }
        }
        b[pr] *= inv;
        Rational f;
        auto eliminate = [&](std::vector<Rational> &row, Rational &rhs) {
            if (sgn(row[pc]) == 0) {
                return;
            }
            f = row[pc];
            for (size_t j : nz) {
                row[j] -= f * a[pr][j];
            }
            rhs -= f * b[pr];
        };
        for (size_t r = 0; r < m; r++) {
            if (r != pr) {
                eliminate(a[r], b[r]);
            }
        }
        eliminate(cost, cost_rhs);
        basis[pr] = pc;
    }

    // Reduced-cost row for objective c: cost_j = c_j - c_B B^-1 A_j.
    void price(const std::vector<Rational> &c, std::vector<Rational> &cost, Rational &cost_rhs) const {
        cost = c;
        cost_rhs = 0;
        for (size_t r = 0; r < m; r++) {
            const Rational &cb = c[basis[r]];
            if (sgn(cb) == 0) {
                continue;
            }
            for (size_t j = 0; j < cols; j++) {
                if (sgn(a[r][j]) != 0) {
                    cost[j] -= cb * a[r][j];
                }
            }
            cost_rhs -= cb * b[r];
        }
    }

    // Returns false if unbounded.
    bool run(std::vector<Rational> &cost, Rational &cost_rhs) {
        while (true) {
            size_t pc = cols;
            for (size_t j = 0; j < cols; j++) {
                if (allowed[j] && sgn(cost[j]) < 0) {
                    pc = j;
                    break;
                }
            }
            if (pc == cols) {
                return true;
            }
            size_t pr = m;
            Rational best;
            Rational ratio;
            for (size_t r = 0; r < m; r++) {
                if (sgn(a[r][pc]) <= 0) {
                    continue;
                }
                ratio = b[r] / a[r][pc];
                if (pr == m || ratio < best || (ratio == best && basis[r] < basis[pr])) {
                    pr = r;
                    best = ratio;
                }
            }
            if (pr == m) {
                return false;
            }
            pivot(pr, pc, cost, cost_rhs);
        }
    }
};

}  // namespace

LpResult solve_lp(const LinearProgram &lp) {
    require(lp.objective.size() == lp.num_vars, "solve_lp: objective size mismatch");
    size_t nv = lp.num_vars;
    size_t m = lp.rows.size();

    size_t n_slack = 0;
    size_t n_art = 0;
    for (const auto &row : lp.rows) {
        bool flip = sgn(row.rhs) < 0;
        Sense s = row.sense;
        if (flip && s != Sense::kEqual) {
            s = s == Sense::kLessEqual ? Sense::kGreaterEqual : Sense::kLessEqual;
        }
        if (s != Sense::kEqual) {
            n_slack++;
        }
        if (s != Sense::kLessEqual) {
            n_art++;
        }
    }

    Tableau t;
    t.m = m;
    t.cols = nv + n_slack + n_art;
    t.a.assign(m, std::vector<Rational>(t.cols));
    t.b.assign(m, Rational(0));
    t.basis.assign(m, 0);
    t.allowed.assign(t.cols, true);

    size_t next_slack = nv;
    size_t next_art = nv + n_slack;
    for (size_t r = 0; r < m; r++) {
        const auto &row = lp.rows[r];
        bool flip = sgn(row.rhs) < 0;
        Sense s = row.sense;
        if (flip && s != Sense::kEqual) {
            s = s == Sense::kLessEqual ? Sense::kGreaterEqual : Sense::kLessEqual;
        }
        for (const auto &[j, v] : row.coeffs) {
            require(j < nv, "solve_lp: variable index out of range");
            t.a[r][j] += flip ? Rational(-v) : v;
        }
        t.b[r] = flip ? Rational(-row.rhs) : row.rhs;
        if (s == Sense::kLessEqual) {
            t.a[r][next_slack] = 1;
            t.basis[r] = next_slack++;
        } else if (s == Sense::kGreaterEqual) {
            t.a[r][next_slack++] = -1;
            t.a[r][next_art] = 1;
            t.basis[r] = next_art++;
        } else {
            t.a[r][next_art] = 1;
            t.basis[r] = next_art++;
        }
    }

    LpResult res;
    std::vector<Rational> cost;
    Rational cost_rhs;

    if (n_art > 0) {
        std::vector<Rational> c1(t.cols, Rational(0));
        for (size_t j = nv + n_slack; j < t.cols; j++) {
            c1[j] = 1;
        }
        t.price(c1, cost, cost_rhs);
        t.run(cost, cost_rhs);
        if (sgn(cost_rhs) != 0) {
            res.status = LpStatus::kInfeasible;
            res.pivots = t.pivots;
            return res;
        }
        // Drive zero-level artificials out of the basis; drop redundant rows.
        for (size_t r = 0; r < t.m;) {
            if (t.basis[r] < nv + n_slack) {
                r++;
                continue;
            }
            size_t pc = t.cols;
            for (size_t j = 0; j < nv + n_slack; j++) {
                if (sgn(t.a[r][j]) != 0) {
                    pc = j;
                    break;
                }
            }
            if (pc == t.cols) {
                t.a.erase(t.a.begin() + (long)r);
                t.b.erase(t.b.begin() + (long)r);
                t.basis.erase(t.basis.begin() + (long)r);
                t.m--;
                continue;
            }
            t.pivot(r, pc, cost, cost_rhs);
            r++;
        }
        for (size_t j = nv + n_slack; j < t.cols; j++) {
            t.allowed[j] = false;
        }
    }

    std::vector<Rational> c2(t.cols, Rational(0));
    for (size_t j = 0; j < nv; j++) {
        c2[j] = lp.objective[j];
    }
    t.price(c2, cost, cost_rhs);
    if (!t.run(cost, cost_rhs)) {
        res.status = LpStatus::kUnbounded;
        res.pivots = t.pivots;
        return res;
    }
    res.status = LpStatus::kOptimal;
    res.x.assign(nv, Rational(0));
    for (size_t r = 0; r < t.m; r++) {
        if (t.basis[r] < nv) {
            res.x[t.basis[r]] = t.b[r];
        }
    }
    res.value = 0;
    for (size_t j = 0; j < nv; j++) {
        res.value += lp.objective[j] * res.x[j];
    }
    res.pivots = t.pivots;
    return res;
}

}  // namespace gsv
