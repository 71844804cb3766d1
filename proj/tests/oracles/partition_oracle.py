"""Checks the command line tool against the partition algebra acting on tensor powers of C^n.

A relation between x and y (a set partition of the disjoint union of the two
carriers) acts on V^{(x)x} -> V^{(x)y}, V = C^n. At t = n every product the tool
reports must be a matrix identity there: relations act by their diagram
matrices, [x]* is the span of index tuples with distinct entries, (r) acts by
the orbit matrix of r and {r} by the diagram matrix cut down to distinct tuples.
"""

import itertools
import json
import math
import subprocess
import sys

import numpy as np

TOOL = sys.argv[1] if len(sys.argv) > 1 else "build/tenv"
FAILURES = []


def tool(*args):
    out = subprocess.run([TOOL, *args], capture_output=True, text=True, check=True).stdout
    return json.loads(out)


def check(ok, what):
    if not ok:
        FAILURES.append(what)


def tuples(n, k):
    return list(itertools.product(range(n), repeat=k))


def labels(blocks, size):
    lab = [None] * size
    for b, block in enumerate(blocks):
        for p in block:
            lab[p] = b
    return lab


def diagram(blocks, x, y, n, exact):
    """exact=False: indices agree within blocks. exact=True: and differ across blocks."""
    lab = labels(blocks, x + y)
    rows, cols = tuples(n, y), tuples(n, x)
    m = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for c, i in enumerate(cols):
        for r, j in enumerate(rows):
            idx = list(i) + list(j)
            value = {}
            ok = True
            for p, b in enumerate(lab):
                if value.setdefault(b, idx[p]) != idx[p]:
                    ok = False
                    break
            if ok and exact:
                ok = len(set(value.values())) == len(value)
            m[r, c] = ok
    return m


def distinct(n, k):
    return np.diag([1 if len(set(t)) == k else 0 for t in tuples(n, k)]).astype(np.int64)


def action(blocks, x, y, n, basis):
    if basis == "rel":
        return diagram(blocks, x, y, n, exact=False)
    if basis == "round":
        return diagram(blocks, x, y, n, exact=True)
    return distinct(n, y) @ diagram(blocks, x, y, n, exact=False) @ distinct(n, x)


def combination(terms, x, y, n, basis):
    total = np.zeros((n**y, n**x), dtype=np.int64)
    for term in terms:
        value = int(term["value"])
        total += value * action(term["rel"]["blocks"], x, y, n, basis)
    return total


def check_tables():
    for basis in ("rel", "round", "curly"):
        for size in (1, 2):
            for n in (1, 2, 3):
                doc = tool("table", "--x", str(size), "--basis", basis, "--eval-at", str(n))
                mats = [action(e["blocks"], size, size, n, basis) for e in doc["elements"]]
                for i, row in enumerate(doc["entries"]):
                    for j, entry in enumerate(row):
                        want = np.zeros_like(mats[0])
                        for term in entry:
                            want += int(term["value"]) * mats[term["element"]]
                        check(np.array_equal(mats[i] @ mats[j], want),
                              f"table {basis} x={size} t={n}: e{i} e{j}")


def r_set(x, y):
    """Partitions of x+y points in which no block holds two points of the same side."""
    out = []
    for pairs_count in range(min(x, y) + 1):
        for xs in itertools.combinations(range(x), pairs_count):
            for ys in itertools.permutations(range(y), pairs_count):
                blocks = [[a, x + b] for a, b in zip(xs, ys)]
                blocks += [[a] for a in range(x) if a not in xs]
                blocks += [[x + b] for b in range(y) if b not in ys]
                out.append(sorted(blocks))
    return out


def text(blocks):
    return json.dumps(sorted(sorted(b) for b in blocks), separators=(",", ":"))


def check_products():
    n = 3
    for x, y, z in itertools.product(range(3), repeat=3):
        if x + y + z > 4:
            continue
        for basis in ("round", "curly"):
            for r in r_set(x, y):
                for s in r_set(y, z):
                    doc = tool("compose", "--basis", basis, "--x", str(x), "--y", str(y), "--z", str(z),
                               "--f", text(r), "--g", text(s), "--eval-at", str(n))
                    got = combination(doc["result"]["terms"], x, z, n, basis)
                    want = action(s, y, z, n, basis) @ action(r, x, y, n, basis)
                    check(np.array_equal(got, want), f"compose {basis} {(x, y, z)} r={r} s={s}")


def check_omega():
    # [e] p* [e]^v acts on distinct tuples of y as the number of distinct extensions to x.
    for m in range(1, 5):
        for k in range(0, m + 1):
            table = json.dumps(list(range(k)), separators=(",", ":"))
            for n in range(0, 6):
                doc = tool("omega", "--x", str(m), "--y", str(k), "--f", table, "--eval-at", str(n))
                want = math.perm(n - k, m - k) if n >= k else (
                    math.prod(n - k - i for i in range(m - k)))
                check(int(doc["value"]) == want, f"omega {m}->>{k} at {n}")


def partitions(points):
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for p in partitions(rest):
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]
        yield [[first]] + p


def refines(a, b):
    """a finer than b: each block of a lies inside a block of b."""
    return all(any(set(block) <= set(big) for big in b) for block in a)


def check_mobius():
    for size in (2, 3, 4):
        doc = tool("mobius", "--x", str(size), "--with-mobius")
        elements = [json.loads(e) for e in doc["lattice"]["elements"]]
        check(len(elements) == len(list(partitions(list(range(size))))), f"lattice size {size}")
        # Subobject order: u <= w iff w refines u.
        leq = lambda u, w: refines(w, u)
        mu = {}
        order = sorted(range(len(elements)), key=lambda i: len(elements[i]))
        for a in range(len(elements)):
            for b in order:
                if not leq(elements[a], elements[b]):
                    continue
                if a == b:
                    mu[a, b] = 1
                else:
                    mu[a, b] = -sum(mu[a, c] for c in order
                                    if (a, c) in mu and c != b and leq(elements[c], elements[b]))
        table = doc["lattice"]["mobius"]
        for a in range(len(elements)):
            for b in range(len(elements)):
                check(table[a][b] == mu.get((a, b)), f"mobius {size} ({a},{b})")


def check_dimensions():
    for x in range(4):
        for y in range(4):
            doc = tool("homdim", "--x", str(x), "--y", str(y))
            check(doc["dim"] == len(r_set(x, y)), f"homdim {x},{y}")
            rel = tool("homdim", "--x", str(x), "--y", str(y), "--basis", "rel")
            check(rel["dim"] == len(list(partitions(list(range(x + y))))), f"rel homdim {x},{y}")


def main():
    check_tables()
    check_products()
    check_omega()
    check_mobius()
    check_dimensions()
    if FAILURES:
        for f in FAILURES[:20]:
            print("FAIL", f)
        print(f"{len(FAILURES)} failures")
        return 1
    print("partition oracle: all checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
