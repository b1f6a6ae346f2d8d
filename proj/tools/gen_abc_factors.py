"""Writes data/abc_corpus_factors.jsonl: sympy factorizations of the
characteristic-0 instances used by the generalized ABC acceptance checks.

Input is the instance stream printed by `acceptance --dump-corpus FILE`.
Each output line holds the instance id, its polys as given, and per function
a list of [term list, multiplicity] pairs for the irreducible factors.
"""

import json
import sys
import warnings

import sympy as sp

warnings.filterwarnings("ignore", category=DeprecationWarning)


def to_poly(terms, gens):
    expr = sp.Integer(0)
    for exps, coeff in terms:
        mono = sp.Integer(1)
        for g, e in zip(gens, exps):
            mono *= g**e
        expr += sp.Rational(coeff) * mono
    return sp.Poly(expr, *gens)


def to_terms(poly):
    return [[list(monom), str(sp.Rational(c))] for monom, c in poly.terms()]


def main(src, dst):
    with open(src) as fin, open(dst, "w") as fout:
        for line in fin:
            doc = json.loads(line)
            gens = sp.symbols(" ".join(doc["vars"]))
            if len(doc["vars"]) == 1:
                gens = (gens,)
            factors = []
            for terms in doc["polys"]:
                _, fl = sp.factor_list(to_poly(terms, gens))
                factors.append([[to_terms(g), e] for g, e in fl if g.total_degree() > 0])
            fout.write(json.dumps({"id": doc["id"], "polys": doc["polys"], "factors": factors}) + "\n")


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2] if len(sys.argv) > 2 else "data/abc_corpus_factors.jsonl")
