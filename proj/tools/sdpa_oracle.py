#!/usr/bin/env python3
# Copyright 2026 The permcode Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Solves an SDPA sparse file with an independent solver through cvxpy.

The file is read in the standard convention

    minimize  c'x  subject to  sum_i F_i x_i - F_0 >= 0,

and the printed value is -(c'x) + offset, the maximization value permcode
reports, where the offset comes from a "* objective_offset" comment line.
"""

import argparse
import json
import re
import sys

import numpy as np


def read_sdpa(path):
    offset = 0.0
    body = []
    with open(path) as f:
        for line in f:
            if line.startswith(("*", '"')):
                parts = line[1:].split()
                if len(parts) >= 2 and parts[0] == "objective_offset":
                    offset = float(parts[1])
                continue
            body.append(re.sub(r"[{}(),]", " ", line))
    tokens = " ".join(body).split()
    pos = 0

    def take(kind):
        nonlocal pos
        pos += 1
        return kind(tokens[pos - 1])

    m = take(int)
    nblocks = take(int)
    sizes = [take(int) for _ in range(nblocks)]
    c = np.array([take(float) for _ in range(m)])
    mats = [[np.zeros((abs(s), abs(s))) for s in sizes] for _ in range(m + 1)]
    while pos < len(tokens):
        mat, blk, i, j = (take(int) for _ in range(4))
        v = take(float)
        mats[mat][blk - 1][i - 1, j - 1] = v
        mats[mat][blk - 1][j - 1, i - 1] = v
    return m, sizes, c, mats, offset


def solve(path, solver):
    import cvxpy as cp

    m, sizes, c, mats, offset = read_sdpa(path)
    if m == 0:
        return {"value": offset, "status": "trivial"}
    x = cp.Variable(m)
    constraints = []
    for b, size in enumerate(sizes):
        expr = -mats[0][b]
        terms = [mats[i + 1][b] * x[i] for i in range(m)
                 if np.any(mats[i + 1][b])]
        if terms:
            expr = expr + sum(terms)
        if size > 0:
            constraints.append(0.5 * (expr + expr.T) >> 0)
        else:
            constraints.append(cp.diag(expr) >= 0)
    problem = cp.Problem(cp.Minimize(c @ x), constraints)
    problem.solve(solver=solver)
    return {"value": -problem.value + offset, "status": problem.status,
            "solver": solver}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("path")
    parser.add_argument("--solver", default="CLARABEL")
    args = parser.parse_args()
    try:
        import cvxpy  # noqa: F401
    except ImportError:
        print("cvxpy is not available", file=sys.stderr)
        return 77
    print(json.dumps(solve(args.path, args.solver)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
