"""Writes data/basic_corpus.jsonl: coprime pairs (f0, f1) for the basic ABC check.

Each line is an instance document. params.expected_radical_degree is
deg R(f0*f1*(f0+f1)) computed with sympy's factorization, independently of
the C++ library: the irreducible factors of the product whose multiplicity is
not divisible by the characteristic. Fermat-type pairs carry
params.expect_violation = true instead.
"""

import json
import warnings
import random
import sys

import sympy as sp

warnings.filterwarnings("ignore", category=DeprecationWarning)

z, x, y = sp.symbols("z x y")


def terms(poly, gens, p):
    out = []
    P = sp.Poly(poly, *gens, modulus=p) if p else sp.Poly(poly, *gens)
    for monom, c in P.terms():
        if p:
            c = int(c) % p
        out.append([list(monom), str(sp.Rational(c))])
    return out


def radical_degree(polys, gens, p):
    product = sp.Mul(*polys)
    kw = {"modulus": p} if p else {}
    _, factors = sp.factor_list(sp.Poly(product, *gens, **kw))
    return sum(g.total_degree() for g, e in factors if not p or e % p)


def doc(ident, kind, p, names, gens, f0, f1, violation=False):
    f2 = sp.expand(f0 + f1)
    if violation:
        params = {"expect_violation": True}
    else:
        params = {"expected_radical_degree": radical_degree([f0, f1, f2], gens, p if kind != "RATIONAL_P_ADIC" else 0)}
    q = p if kind != "RATIONAL_P_ADIC" else 0
    return {
        "id": ident,
        "field": {"kind": kind, "p": p},
        "vars": names,
        "polys": [terms(f0, gens, q), terms(f1, gens, q)],
        "params": params,
    }


def rand_poly(rng, gens, deg, p):
    expr = 0
    for _ in range(rng.randint(1, 4)):
        e = [0] * len(gens)
        for _ in range(rng.randint(0, deg)):
            e[rng.randrange(len(gens))] += 1
        c = rng.randint(1, p - 1) if p else rng.choice([-3, -2, -1, 1, 2, 3])
        expr += c * sp.prod([g**k for g, k in zip(gens, e)])
    return sp.expand(expr)


def coprime(f0, f1, gens, p):
    kw = {"modulus": p} if p else {}
    g = sp.gcd(sp.Poly(f0, *gens, **kw), sp.Poly(f1, *gens, **kw))
    return g.total_degree() == 0


def main(path):
    rng = random.Random(20240611)
    out = [
        doc("q-slack0", "RATIONAL_P_ADIC", 3, ["z"], [z], z**2 + 2 * z, sp.Integer(1)),
        doc("q-z-plus-1", "RATIONAL_P_ADIC", 3, ["z"], [z], z, sp.Integer(1)),
    ]
    while len(out) < 50:
        gens = [z] if len(out) < 30 else [x, y]
        names = ["z"] if len(gens) == 1 else ["x", "y"]
        f0, f1 = rand_poly(rng, gens, 4, 0), rand_poly(rng, gens, 4, 0)
        if f0 == 0 or f1 == 0 or sp.expand(f0 + f1) == 0 or not coprime(f0, f1, gens, 0):
            continue
        if sp.Poly(f0, *gens).is_ground and sp.Poly(f1, *gens).is_ground:
            continue
        out.append(doc("q-%02d" % len(out), "RATIONAL_P_ADIC", rng.choice([2, 3, 5]), names, gens, f0, f1))
    for p in (2, 3, 5):
        out.append(doc("fermat-%d" % p, "PRIME_FIELD", p, ["x", "y"], [x, y], x**p, y**p, violation=True))
    out.append(doc("fermat-shift-3", "PRIME_FIELD", 3, ["z"], [z], z**3 + 1, sp.Integer(2), violation=True))
    while len(out) < 80:
        p = rng.choice([2, 3, 5, 7])
        f0, f1 = rand_poly(rng, [z], 5, p), rand_poly(rng, [z], 5, p)
        P0, P1 = sp.Poly(f0, z, modulus=p), sp.Poly(f1, z, modulus=p)
        if P0.is_zero or P1.is_zero or (P0 + P1).is_zero or not coprime(f0, f1, [z], p):
            continue
        if all(m[0] % p == 0 for m in P0.monoms()) and all(m[0] % p == 0 for m in P1.monoms()):
            continue
        out.append(doc("fp-%02d" % len(out), "PRIME_FIELD", p, ["z"], [z], P0.as_expr(), P1.as_expr()))
    with open(path, "w") as fh:
        for d in out:
            fh.write(json.dumps(d) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/basic_corpus.jsonl")
