"""Regenerate crates/core/data/groups.json.

Every group is built from its natural action (affine or projective maps over a
finite field, or the standard Mathieu generators), its order is checked by a
breadth-first closure, and the generators are written as 1-indexed cycles.
"""
import json
import os
import sys


def closure_order(gens, n):
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[x[i]] for i in range(n))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen)


def to_cycles(perm):
    n = len(perm)
    seen = [False] * n
    cycles = []
    for i in range(n):
        if seen[i] or perm[i] == i:
            seen[i] = True
            continue
        c = []
        j = i
        while not seen[j]:
            seen[j] = True
            c.append(j + 1)
            j = perm[j]
        cycles.append(c)
    return cycles


def from_cycles(n, cycles):
    p = list(range(n))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            p[a - 1] = b - 1
    return tuple(p)


def primitive_root(p):
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in range(2, p) if (p - 1) % q == 0 and all(q % r for r in range(2, q))):
            return g
    raise ValueError(p)


def agl1(p):
    g = primitive_root(p)
    return [tuple((x + 1) % p for x in range(p)), tuple((g * x) % p for x in range(p))]


def pgl2_prime(q):
    inf = q
    g = primitive_root(q)

    def mob(f):
        return tuple(f(x) for x in range(q + 1))

    t = mob(lambda x: inf if x == inf else (x + 1) % q)
    m = mob(lambda x: inf if x == inf else (g * x) % q)
    inv = mob(lambda x: 0 if x == inf else (inf if x == 0 else (-pow(x, q - 2, q)) % q))
    return [t, m, inv]


class GF:
    """Finite field GF(p^k) with elements encoded as integers 0..q-1."""

    def __init__(self, p, k, modulus):
        self.p, self.k, self.q = p, k, p ** k
        self.modulus = modulus  # coefficients low..high, monic, length k+1

    def vec(self, a):
        v = []
        for _ in range(self.k):
            v.append(a % self.p)
            a //= self.p
        return v

    def enc(self, v):
        return sum(c * self.p ** i for i, c in enumerate(v))

    def add(self, a, b):
        return self.enc([(x + y) % self.p for x, y in zip(self.vec(a), self.vec(b))])

    def mul(self, a, b):
        x, y = self.vec(a), self.vec(b)
        prod = [0] * (2 * self.k - 1)
        for i, u in enumerate(x):
            for j, w in enumerate(y):
                prod[i + j] = (prod[i + j] + u * w) % self.p
        for d in range(len(prod) - 1, self.k - 1, -1):
            c = prod[d]
            if c:
                for i in range(self.k + 1):
                    prod[d - self.k + i] = (prod[d - self.k + i] - c * self.modulus[i]) % self.p
        return self.enc(prod[: self.k])

    def inv(self, a):
        for b in range(1, self.q):
            if self.mul(a, b) == 1:
                return b
        raise ZeroDivisionError

    def power(self, a, e):
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def generator(self):
        for a in range(2, self.q):
            x, order = a, 1
            while x != 1:
                x = self.mul(x, a)
                order += 1
            if order == self.q - 1:
                return a
        raise ValueError


def pgaml2(field):
    q = field.q
    inf = q
    w = field.generator()

    def mob(f):
        return tuple(f(x) for x in range(q + 1))

    t = mob(lambda x: inf if x == inf else field.add(x, 1))
    m = mob(lambda x: inf if x == inf else field.mul(w, x))
    inv = mob(lambda x: 0 if x == inf else (inf if x == 0 else field.inv(x)))
    frob = mob(lambda x: inf if x == inf else field.power(x, field.p))
    return [t, m, inv, frob]


def affine(p, d, matrices):
    pts = []
    for a in range(p ** d):
        v, x = [], a
        for _ in range(d):
            v.append(x % p)
            x //= p
        pts.append(tuple(v))
    index = {v: i for i, v in enumerate(pts)}
    e1 = tuple(1 if i == 0 else 0 for i in range(d))
    gens = [tuple(index[tuple((a + b) % p for a, b in zip(v, e1))] for v in pts)]
    for mat in matrices:
        gens.append(tuple(index[tuple(sum(mat[r][c] * v[c] for c in range(d)) % p for r in range(d))] for v in pts))
    return gens


def linear_on_nonzero(p, d, matrices):
    pts = []
    for a in range(1, p ** d):
        v, x = [], a
        for _ in range(d):
            v.append(x % p)
            x //= p
        pts.append(tuple(v))
    index = {v: i for i, v in enumerate(pts)}
    return [tuple(index[tuple(sum(mat[r][c] * v[c] for c in range(d)) % p for r in range(d))] for v in pts) for mat in matrices]


GL3_2 = [[[1, 1, 0], [0, 1, 0], [0, 0, 1]], [[0, 0, 1], [1, 0, 0], [0, 1, 0]]]
GL2_3 = [[[1, 1], [0, 1]], [[0, 1], [2, 0]], [[2, 0], [0, 1]]]

M11_GENS = [[[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]], [[3, 7, 11, 8], [4, 10, 5, 6]]]
M12_GENS = M11_GENS + [[[1, 12], [2, 11], [3, 6], [4, 8], [5, 9], [7, 10]]]


def main(out):
    records = []

    def add(name, degree, order, gens):
        got = closure_order(gens, degree)
        if got != order:
            sys.exit(f"{name}: closure order {got} != expected {order}")
        records.append({
            "name": name,
            "degree": degree,
            "expected_order": order,
            "generators": [to_cycles(g) for g in gens],
        })

    for p in [5, 7, 11, 13, 17, 19, 23, 29]:
        add(f"AGL1({p})", p, p * (p - 1), agl1(p))
    for q in [5, 7, 11]:
        add(f"PGL2({q})", q + 1, (q + 1) * q * (q - 1), pgl2_prime(q))
    add("PSL3(2)", 7, 168, linear_on_nonzero(2, 3, GL3_2))
    add("AGL3(2)", 8, 1344, affine(2, 3, GL3_2))
    add("AGL2(3)", 9, 432, affine(3, 2, GL2_3))
    add("PGammaL2(8)", 9, 1512, pgaml2(GF(2, 3, [1, 1, 0, 1])))
    add("PGammaL2(9)", 10, 1440, pgaml2(GF(3, 2, [1, 0, 1])))
    add("M11", 11, 7920, [from_cycles(11, c) for c in M11_GENS])
    add("M12", 12, 95040, [from_cycles(12, c) for c in M12_GENS])

    with open(out, "w") as f:
        f.write("[\n")
        for i, r in enumerate(records):
            f.write("  " + json.dumps(r, separators=(", ", ": ")))
            f.write(",\n" if i + 1 < len(records) else "\n")
        f.write("]\n")


if __name__ == "__main__":
    here = os.path.dirname(os.path.abspath(__file__))
    main(os.path.join(here, "..", "crates", "core", "data", "groups.json"))
