#!/usr/bin/env python3
"""Solve an LP-format integer program with scipy's HiGHS backend.

Usage: lp_solve_highs.py MODEL.lp OUT.sol

Reads the LP subset written by `dfamin encode` (Minimize / Subject To /
Bounds / Binary / General / End, one constraint per line) and writes the
solution file the tool expects:

    STATUS <optimal|infeasible|unknown>
    <variable> <integer>
"""
import re
import sys

import numpy as np
from scipy.optimize import milp, Bounds, LinearConstraint
from scipy.sparse import csr_matrix

TERM = re.compile(r"([+-])?\s*(\d+)?\s*([A-Za-z_][A-Za-z0-9_]*)")


def parse_terms(expr):
    terms = []
    for sign, coeff, name in TERM.findall(expr):
        c = int(coeff) if coeff else 1
        if sign == "-":
            c = -c
        terms.append((c, name))
    return terms


def parse_lp(text):
    section = None
    objective = []
    constraints = []  # (terms, relation, rhs)
    bounds = {}
    binary, general = set(), set()
    for raw in text.splitlines():
        line = raw.split("\\")[0].strip()
        if not line:
            continue
        lower = line.lower()
        if lower in ("minimize", "maximize"):
            section = "obj"
            continue
        if lower == "subject to":
            section = "cons"
            continue
        if lower == "bounds":
            section = "bounds"
            continue
        if lower == "binary":
            section = "binary"
            continue
        if lower == "general":
            section = "general"
            continue
        if lower == "end":
            break
        if section == "obj":
            expr = line.split(":", 1)[1] if ":" in line else line
            objective.extend(parse_terms(expr))
        elif section == "cons":
            body = line.split(":", 1)[1] if ":" in line else line
            m = re.search(r"(<=|>=|=)", body)
            lhs, rel, rhs = body[: m.start()], m.group(1), body[m.end():]
            constraints.append((parse_terms(lhs), rel, int(rhs.strip())))
        elif section == "bounds":
            m = re.match(r"(-?\d+)\s*<=\s*(\S+)\s*<=\s*(-?\d+)", line)
            bounds[m.group(2)] = (int(m.group(1)), int(m.group(3)))
        elif section == "binary":
            binary.add(line)
        elif section == "general":
            general.add(line)
    return objective, constraints, bounds, binary, general


def main():
    if len(sys.argv) != 3:
        sys.exit(__doc__)
    text = open(sys.argv[1]).read()
    objective, constraints, bounds, binary, general = parse_lp(text)

    names = []
    index = {}

    def var(name):
        if name not in index:
            index[name] = len(names)
            names.append(name)
        return index[name]

    for terms, _, _ in constraints:
        for _, name in terms:
            var(name)
    for _, name in objective:
        var(name)
    for name in list(binary) + list(general) + list(bounds):
        var(name)

    nvar = len(names)
    c = np.zeros(nvar)
    for coeff, name in objective:
        c[var(name)] += coeff

    lb = np.zeros(nvar)
    ub = np.full(nvar, np.inf)
    for name in binary:
        ub[index[name]] = 1
    for name, (lo, hi) in bounds.items():
        lb[index[name]] = lo
        ub[index[name]] = hi

    rows, cols, vals, cl, cu = [], [], [], [], []
    for i, (terms, rel, rhs) in enumerate(constraints):
        for coeff, name in terms:
            rows.append(i)
            cols.append(index[name])
            vals.append(float(coeff))
        if rel == "<=":
            cl.append(-np.inf)
            cu.append(rhs)
        elif rel == ">=":
            cl.append(rhs)
            cu.append(np.inf)
        else:
            cl.append(rhs)
            cu.append(rhs)

    a = csr_matrix((vals, (rows, cols)), shape=(len(constraints), nvar))
    res = milp(
        c=c,
        constraints=LinearConstraint(a, np.array(cl), np.array(cu)),
        bounds=Bounds(lb, ub),
        integrality=np.ones(nvar),
    )

    with open(sys.argv[2], "w") as out:
        if res.status == 0:
            out.write("STATUS optimal\n")
            for name, value in zip(names, res.x):
                out.write(f"{name} {round(value)}\n")
        elif res.status == 2:
            out.write("STATUS infeasible\n")
        else:
            out.write("STATUS unknown\n")


if __name__ == "__main__":
    main()
