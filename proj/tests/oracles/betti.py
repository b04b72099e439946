# Betti numbers of small algebras computed with sympy; writes tests/golden/betti.txt
from itertools import combinations
from pathlib import Path
import sympy as sp


def betti(labels, brackets):
    n = len(labels)
    idx = {l: i for i, l in enumerate(labels)}
    c = {}
    for (a, b), rhs in brackets.items():
        for coef, t in rhs:
            c[(idx[a], idx[b], idx[t])] = c.get((idx[a], idx[b], idx[t]), 0) + sp.Rational(coef)
            c[(idx[b], idx[a], idx[t])] = c.get((idx[b], idx[a], idx[t]), 0) - sp.Rational(coef)

    # alternating-map convention: (d f)(x_0..x_k) = sum_{s<t} (-1)^{s+t} f([x_s,x_t], ...)
    def dmat(k):
        src = list(combinations(range(n), k))
        dst = list(combinations(range(n), k + 1))
        pos = {m: i for i, m in enumerate(src)}
        M = sp.zeros(len(dst), len(src))
        for r, mono in enumerate(dst):
            for s in range(k + 1):
                for t in range(s + 1, k + 1):
                    rest = [mono[u] for u in range(k + 1) if u not in (s, t)]
                    for w in range(n):
                        coef = c.get((mono[s], mono[t], w), 0)
                        if coef == 0 or w in rest:
                            continue
                        seq = [w] + rest
                        perm_sign = sp.combinatorics.Permutation(sorted(range(len(seq)), key=lambda i: seq[i])).signature()
                        M[r, pos[tuple(sorted(seq))]] += (-1) ** (s + t) * coef * perm_sign
        return M

    ranks = [dmat(k).rank() if k < n else 0 for k in range(n + 1)]
    dims = [sp.binomial(n, k) for k in range(n + 1)]
    return [int(dims[k] - ranks[k] - (ranks[k - 1] if k else 0)) for k in range(n + 1)]


def family(l1, l2):
    l3 = -l1 - l2
    lab = ["A", "B", "X1", "X2", "X3", "Z1", "Z2", "Z3"]
    w = {"X1": l1, "X2": l2, "X3": l3, "Z1": -l1, "Z2": -l2, "Z3": -l3}
    br = {("A", k): [(v, k)] for k, v in w.items()}
    br[("X2", "X3")] = [(2, "Z1")]
    br[("X1", "X3")] = [(1, "Z2")]
    br[("X1", "X2")] = [(-1, "Z3")]
    return lab, br


cases = {
    "heisenberg3": (["X", "Y", "Z"], {("X", "Y"): [(1, "Z")]}),
    "kodaira-thurston": (["X", "Y", "Z", "W"], {("X", "Y"): [(1, "Z")]}),
    "example2": family(-1, -2),
    "modified:1,2": family(1, 2),
    "modified:2,3": family(2, 3),
}
out = Path(__file__).resolve().parent.parent / "golden" / "betti.txt"
with open(out, "w") as f:
    for name, (lab, br) in cases.items():
        f.write(name + " " + " ".join(map(str, betti(lab, br))) + "\n")
print(out.read_text())
