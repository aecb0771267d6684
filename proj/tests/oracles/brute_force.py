#!/usr/bin/env python3
"""Brute-force cross-check of `leibniz analyze` over small prime fields.

Subspaces are Python frozensets of coordinate tuples, normalizers and Engel
subalgebras come from enumerating every element, so nothing here shares the
row-reduction code of the library.

usage: brute_force.py CLI FILE [FILE ...]
"""

import itertools
import json
import subprocess
import sys
from fractions import Fraction


def load(path):
    with open(path) as fh:
        doc = json.load(fh)
    if doc["field"]["kind"] != "Fp":
        raise SystemExit(f"{path}: oracle needs a prime field")
    p, n = doc["field"]["p"], doc["dim"]
    table = {}
    for prod in doc["products"]:
        table[(prod["i"] - 1, prod["j"] - 1)] = tuple(to_residue(s, p) for s in prod["out"])
    return p, n, doc.get("labels"), table


def to_residue(text, p):
    q = Fraction(text)
    return q.numerator * pow(q.denominator, -1, p) % p


def mul(p, n, table, x, y):
    out = [0] * n
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, yj in enumerate(y):
            if not yj:
                continue
            c = table.get((i, j))
            if c:
                s = xi * yj
                for k in range(n):
                    out[k] = (out[k] + s * c[k]) % p
    return tuple(out)


def span(p, n, gens):
    space = {tuple([0] * n)}
    for g in gens:
        if g in space:
            continue
        space = {tuple((v[k] + t * g[k]) % p for k in range(n)) for v in space for t in range(p)}
    return frozenset(space)


def all_vectors(p, n):
    return [tuple(v) for v in itertools.product(range(p), repeat=n)]


def all_subspaces(p, n):
    found = {span(p, n, [])}
    frontier = list(found)
    vectors = all_vectors(p, n)
    while frontier:
        nxt = []
        for s in frontier:
            for v in vectors:
                if v not in s:
                    t = span(p, n, list(basis_of(p, n, s)) + [v])
                    if t not in found:
                        found.add(t)
                        nxt.append(t)
        frontier = nxt
    return found


def basis_of(p, n, s):
    basis, cur = [], span(p, n, [])
    for v in sorted(s):
        if v not in cur:
            basis.append(v)
            cur = span(p, n, basis)
        if cur == s:
            break
    return basis


def closed(alg, s):
    p, n, _, table = alg
    b = basis_of(p, n, s)
    return all(mul(p, n, table, x, y) in s for x in b for y in b)


def product_set(alg, u, v):
    p, n, _, table = alg
    return span(p, n, [mul(p, n, table, x, y) for x in basis_of(p, n, u) for y in basis_of(p, n, v)])


def nilpotent(alg, u):
    term = u
    while True:
        nxt = product_set(alg, u, term)
        if len(nxt) == 1:
            return True
        if nxt == term:
            return False
        term = nxt


def engel(alg, x, vectors):
    p, n, _, table = alg
    out = []
    for v in vectors:
        w = v
        for _ in range(n):
            w = mul(p, n, table, x, w)
        if not any(w):
            out.append(v)
    return frozenset(out)


def normalizer(alg, u, vectors):
    p, n, _, table = alg
    b = basis_of(p, n, u)
    return frozenset(a for a in vectors if all(mul(p, n, table, a, y) in u and mul(p, n, table, y, a) in u for y in b))


def ideal_closure(alg, v):
    p, n, _, table = alg
    basis = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    s = span(p, n, [v])
    while True:
        gens = basis_of(p, n, s)
        more = [mul(p, n, table, e, x) for e in basis for x in gens] + [mul(p, n, table, x, e) for e in basis for x in gens]
        t = span(p, n, gens + more)
        if t == s:
            return s
        s = t


def minimal_under_inclusion(sets):
    return {s for s in sets if not any(o < s for o in sets)}


def oracle(alg):
    p, n, labels, _ = alg
    vectors = all_vectors(p, n)
    full = frozenset(vectors)
    subs = [s for s in all_subspaces(p, n) if closed(alg, s)]
    proper = [s for s in subs if s != full]
    maximal = {s for s in proper if not any(s < o for o in proper)}
    frattini = full
    for m in maximal:
        frattini = frattini & m
    closures = {ideal_closure(alg, v) for v in vectors if any(v)}
    minimal_ideals = minimal_under_inclusion(closures)
    engels = {engel(alg, x, vectors) for x in vectors}
    cartans = {s for s in subs if nilpotent(alg, s) and normalizer(alg, s, vectors) == s}
    return {
        "maximal": maximal,
        "frattini": frattini,
        "minimal_ideals": minimal_ideals,
        "socle": span(p, n, [v for m in minimal_ideals for v in basis_of(p, n, m)]),
        "minimal_engel": minimal_under_inclusion(engels),
        "cartans": cartans,
        "basis_engel": [engel(alg, tuple(int(i == j) for j in range(n)), vectors) for i in range(n)],
    }


def from_report(alg, entry):
    p, n, _, _ = alg
    return span(p, n, [tuple(to_residue(s, p) for s in row) for row in entry["basis"]])


def check(cli, path):
    alg = load(path)
    p, n, labels, _ = alg
    truth = oracle(alg)
    problems = []

    def analyze(*flags):
        run = subprocess.run([cli, "--json", "analyze", path, *flags], capture_output=True, text=True, check=True)
        return json.loads(run.stdout)

    r = analyze("--socle", "--frattini")
    if {from_report(alg, m) for m in r["socle"]["minimal_ideals"]} != truth["minimal_ideals"]:
        problems.append("minimal ideals differ")
    if from_report(alg, r["socle"]["socle"]) != truth["socle"]:
        problems.append("socle differs")
    if {from_report(alg, m) for m in r["frattini"]["maximal_subalgebras"]} != truth["maximal"]:
        problems.append("maximal subalgebras differ")
    if from_report(alg, r["frattini"]["frattini"]) != truth["frattini"]:
        problems.append("Frattini subalgebra differs")
    for i in range(n):
        element = ",".join("1" if j == i else "0" for j in range(n))
        if from_report(alg, analyze("--engel", element)["engel"]["subalgebra"]) != truth["basis_engel"][i]:
            problems.append(f"Engel subalgebra of basis vector {i + 1} differs")
    if truth["minimal_engel"] != truth["cartans"]:
        problems.append("oracle: minimal Engel subalgebras differ from Cartan subalgebras")
    if p >= n + 1:
        c = from_report(alg, analyze("--cartan")["cartan"])
        if c not in truth["cartans"]:
            problems.append("reported Cartan subalgebra is not Cartan by brute force")
    summary = (f"{path}: {len(truth['maximal'])} maximal, Frattini dim {dim(p, truth['frattini'])}, "
               f"{len(truth['minimal_ideals'])} minimal ideals, {len(truth['cartans'])} Cartan, "
               f"{len(truth['minimal_engel'])} minimal Engel")
    return summary, problems


def dim(p, s):
    d, size = 0, 1
    while size < len(s):
        size *= p
        d += 1
    return d


def main(argv):
    if len(argv) < 3:
        print(__doc__)
        return 2
    failed = False
    for path in argv[2:]:
        summary, problems = check(argv[1], path)
        print(summary)
        for pr in problems:
            print("  MISMATCH:", pr)
        failed |= bool(problems)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
