#!/usr/bin/env python3
"""Character tables of A x| <phi>, A a finite abelian group, by the little-group method.

A = Z/n_1 x ... x Z/n_r with named basis generators; phi acts on A by an integer
matrix theta (columns = images of the basis) and has order F in the quotient.
Elements are pairs (a, j) meaning a * phi^j, with
    (a, j) (b, k) = (a + theta^j b, j + k).

Class representatives are emitted as words in the generator names so that the
C++ side can align them with its own group.
"""

import argparse
import json
import math
from collections import deque
from fractions import Fraction

PRESETS = {
    # tau1, tau2 of order 2, sigma of order 3; phi0 tau1 phi0^-1 = tau1,
    # phi0 tau2 phi0^-1 = tau1 tau2, phi0 sigma phi0^-1 = sigma^-1
    "c2c2c3-f6": dict(orders=[2, 2, 3], names=["tau1", "tau2", "sigma"],
                      theta=[[1, 1, 0], [0, 1, 0], [0, 0, -1]], F=6, phi="phi0"),
    # tau1, tau2 fixed, sigma inverted
    "c2c2c3-f2": dict(orders=[2, 2, 3], names=["tau1", "tau2", "sigma"],
                      theta=[[1, 0, 0], [0, 1, 0], [0, 0, -1]], F=2, phi="phi0"),
}


class Group:
    def __init__(self, orders, theta, F):
        self.orders = orders
        self.r = len(orders)
        self.theta = theta  # theta[i][j]: coefficient of basis i in theta(basis j)
        self.F = F

    def act(self, a, j=1):
        for _ in range(j % self.F):
            a = tuple(sum(self.theta[i][k] * a[k] for k in range(self.r)) % self.orders[i]
                      for i in range(self.r))
        return a

    def add(self, a, b):
        return tuple((x + y) % n for x, y, n in zip(a, b, self.orders))

    def neg(self, a):
        return tuple((-x) % n for x, n in zip(a, self.orders))

    def mul(self, x, y):
        (a, j), (b, k) = x, y
        return (self.add(a, self.act(b, j)), (j + k) % self.F)

    def inv(self, x):
        a, j = x
        # (a, j)^-1 = (-theta^-j a, -j)
        return (self.act(self.neg(a), self.F - j % self.F), (-j) % self.F)

    def identity(self):
        return (tuple(0 for _ in self.orders), 0)

    def generators(self):
        gens = []
        for i in range(self.r):
            e = [0] * self.r
            e[i] = 1
            gens.append((tuple(e), 0))
        gens.append((tuple(0 for _ in self.orders), 1))
        return gens


def bfs_elements(G, names):
    gens = G.generators()
    start = G.identity()
    words = {start: ""}
    order = [start]
    q = deque([start])
    while q:
        x = q.popleft()
        for g, name in zip(gens, names):
            y = G.mul(x, g)
            if y not in words:
                words[y] = (words[x] + " " + name).strip()
                order.append(y)
                q.append(y)
    return order, words


def element_order(G, x):
    e, y, k = G.identity(), x, 1
    while y != e:
        y = G.mul(y, x)
        k += 1
    return k


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("preset", choices=sorted(PRESETS))
    ap.add_argument("-o", "--output")
    args = ap.parse_args()
    P = PRESETS[args.preset]
    G = Group(P["orders"], P["theta"], P["F"])
    names = P["names"] + [P["phi"]]

    elems, words = bfs_elements(G, names)
    index = {x: i for i, x in enumerate(elems)}
    N = 1
    for x in elems:
        N = math.lcm(N, element_order(G, x))

    # conjugacy classes, representative = first element in BFS order
    cls_of = {}
    classes = []
    for x in elems:
        if x in cls_of:
            continue
        members = {G.mul(G.mul(g, x), G.inv(g)) for g in elems}
        for y in members:
            cls_of[y] = len(classes)
        classes.append(sorted(members, key=index.get))

    # characters of A: chi_x(a) = zeta_N^(sum x_i a_i N / n_i)
    def chi_exp(xv, a):
        return sum(xi * ai * (N // ni) for xi, ai, ni in zip(xv, a, G.orders)) % N

    # theta acts on characters by (theta . chi)(a) = chi(theta^-1 a)
    def dual_act(xv):
        # chi(theta^-1 a) = chi'(a) with chi' = xv o theta^-1; test on basis vectors
        out = []
        for i in range(G.r):
            e = [0] * G.r
            e[i] = 1
            a = G.act(tuple(e), G.F - 1)
            out.append(chi_exp(xv, a) * G.orders[i] // N % G.orders[i])
        return tuple(out)

    import itertools
    all_chars = sorted(itertools.product(*[range(n) for n in G.orders]))
    seen = set()
    irreps = []
    for xv in all_chars:
        if xv in seen:
            continue
        orbit = [xv]
        y = dual_act(xv)
        while y != xv:
            orbit.append(y)
            y = dual_act(y)
        seen.update(orbit)
        k = len(orbit)
        m = G.F // k  # order of phi^k in the quotient
        for l in range(m):
            # extension chi~(a phi^(k t)) = chi(a) w^t, w = zeta_N^(l N / m); induce from A x| <phi^k>
            vals = []
            for C in classes:
                g = C[0]
                coeffs = [Fraction(0)] * N
                for i in range(k):
                    t = (tuple(0 for _ in G.orders), i)
                    h = G.mul(G.mul(G.inv(t), g), t)
                    a, j = h
                    if j % k != 0:
                        continue
                    e = (chi_exp(xv, a) + (j // k) * l * (N // m)) % N
                    coeffs[e] += 1
                vals.append(coeffs)
            irreps.append(dict(dim=k, values=vals, key=(k, xv, l)))

    irreps.sort(key=lambda c: (c["dim"], c["key"][1], c["key"][2]))

    # checks: sum of squares and row orthogonality
    order = len(elems)
    assert sum(c["dim"] ** 2 for c in irreps) == order
    assert len(irreps) == len(classes)
    import cmath
    def cval(v):
        return sum(float(c) * cmath.exp(2j * cmath.pi * k / N) for k, c in enumerate(v))
    for a in irreps:
        for b in irreps:
            s = sum(len(C) * cval(va) * cval(vb).conjugate() for C, va, vb in zip(classes, a["values"], b["values"])) / order
            assert abs(s - (1 if a is b else 0)) < 1e-9

    def trim(v):
        out = [int(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}" for c in v]
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return out

    doc = {
        "order": order,
        "exponent": N,
        "classes": [{"size": len(C), "rep": words[C[0]]} for C in classes],
        "characters": [{"name": f"rho{i + 1}", "dim": c["dim"], "values": [trim(v) for v in c["values"]]}
                       for i, c in enumerate(irreps)],
    }
    text = json.dumps(doc, indent=1)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


if __name__ == "__main__":
    main()
