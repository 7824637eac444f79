"""Independent brute-force reference implementations used by the tests.

Nothing here imports the package's arithmetic: rings are re-implemented on
canonical values with plain Python integers, tuples and lists.
"""

from __future__ import annotations

from itertools import combinations, product

from ntotal.rings import Modular, PolyQuotient, Product


class NaiveRing:
    def __init__(self, spec):
        self.spec = spec
        if isinstance(spec, Modular):
            self.kind = "mod"
        elif isinstance(spec, PolyQuotient):
            self.kind = "poly"
            p = spec.p
            lead_inv = pow(spec.modulus[0], -1, p)
            self.monic = [(c * lead_inv) % p for c in spec.modulus]  # high first
        else:
            self.kind = "prod"
            self.factors = [NaiveRing(f) for f in spec.factors]

    # enumeration in lexicographic order of canonical forms
    def elements(self):
        if self.kind == "mod":
            return list(range(self.spec.m))
        if self.kind == "poly":
            return list(product(range(self.spec.p), repeat=self.spec.degree))
        return list(product(*(f.elements() for f in self.factors)))

    def zero(self):
        if self.kind == "mod":
            return 0
        if self.kind == "poly":
            return (0,) * self.spec.degree
        return tuple(f.zero() for f in self.factors)

    def one(self):
        if self.kind == "mod":
            return 1 % self.spec.m
        if self.kind == "poly":
            return (0,) * (self.spec.degree - 1) + (1,)
        return tuple(f.one() for f in self.factors)

    def add(self, a, b):
        if self.kind == "mod":
            return (a + b) % self.spec.m
        if self.kind == "poly":
            return tuple((x + y) % self.spec.p for x, y in zip(a, b))
        return tuple(f.add(x, y) for f, x, y in zip(self.factors, a, b))

    def neg(self, a):
        if self.kind == "mod":
            return (-a) % self.spec.m
        if self.kind == "poly":
            return tuple((-x) % self.spec.p for x in a)
        return tuple(f.neg(x) for f, x in zip(self.factors, a))

    def mul(self, a, b):
        if self.kind == "mod":
            return (a * b) % self.spec.m
        if self.kind == "prod":
            return tuple(f.mul(x, y) for f, x, y in zip(self.factors, a, b))
        p, k = self.spec.p, self.spec.degree
        # schoolbook product, high degree first, then long division
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] += x * y
        prod = [c % p for c in prod]
        f = self.monic
        for i in range(len(prod) - k):
            c = prod[i]
            if c:
                for j in range(k + 1):
                    prod[i + j] = (prod[i + j] - c * f[j]) % p
        return tuple(prod[-k:])

    def pow(self, a, e):
        r = self.one()
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def is_zero_divisor(self, a):
        z = self.zero()
        return a == z or any(self.mul(a, b) == z for b in self.elements() if b != z)

    def zero_divisors(self):
        return {a for a in self.elements() if self.is_zero_divisor(a)}


def naive_edges(spec, n, vertices=None):
    """Edge set of n-T, each pair evaluated directly with a fresh zero-divisor test."""
    R = NaiveRing(spec)
    verts = R.elements() if vertices is None else vertices
    verdict: dict = {}
    edges = set()
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            s = R.add(R.pow(u, n), R.pow(v, n))
            if s not in verdict:
                verdict[s] = R.is_zero_divisor(s)
            if verdict[s]:
                edges.add((u, v))
    return edges


def ideal_closure(R: NaiveRing, gens):
    """Fixpoint of closing under + and multiplication by every element."""
    elems = R.elements()
    current = set(gens) | {R.zero()}
    while True:
        nxt = set(current)
        nxt |= {R.add(a, b) for a in current for b in current}
        nxt |= {R.mul(r, a) for r in elems for a in current}
        if nxt == current:
            return current
        current = nxt


def generates(R: NaiveRing, gens) -> bool:
    """Whether 1 is reached by adding multiples r*g, worklist search."""
    elems = R.elements()
    steps = {R.mul(r, g) for r in elems for g in gens}
    one = R.one()
    seen = {R.zero()}
    work = [R.zero()]
    while work:
        x = work.pop()
        for t in steps:
            y = R.add(x, t)
            if y not in seen:
                if y == one:
                    return True
                seen.add(y)
                work.append(y)
    return one in seen


def min_generators_unpruned(spec, cap=6):
    """Least size of a subset of Z(R) generating R, over all subsets; None if none."""
    R = NaiveRing(spec)
    zds = sorted(R.zero_divisors())
    for size in range(1, cap + 1):
        for combo in combinations(zds, size):
            if generates(R, combo):
                return size
    return None
