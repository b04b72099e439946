# Brute-force commutator subgroup of Z x| exp(L) for the cubic x^3 - p x^2 + q x - 1.
# Elements are (t, a, c): t in Z, a in Z^3 on V, c in Z^3 on the wedge basis in units of 1/2.
# Writes tests/golden/commutator_index.txt with the index of the central part and of the V projection.
from itertools import product
from pathlib import Path
import sys
import sympy as sp
from sympy.matrices.normalforms import smith_normal_form

p, q = (int(sys.argv[1]), int(sys.argv[2])) if len(sys.argv) > 2 else (5, 6)
C = sp.Matrix([[0, 0, 1], [1, 0, -q], [0, 1, p]])


def compound2(m):
    pairs = [(1, 2), (0, 2), (0, 1)]
    return sp.Matrix(3, 3, lambda r, s: m[pairs[r][0], pairs[s][0]] * m[pairs[r][1], pairs[s][1]]
                     - m[pairs[r][0], pairs[s][1]] * m[pairs[r][1], pairs[s][0]])


C2 = compound2(C)
Ci, C2i = C.inv(), C2.inv()


def wedge(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[0] * b[2] - a[2] * b[0], a[0] * b[1] - a[1] * b[0])


def act(t, a, c):
    A, B = (C, C2) if t >= 0 else (Ci, C2i)
    va, vc = sp.Matrix(a), sp.Matrix(c)
    for _ in range(abs(t)):
        va, vc = A * va, B * vc
    return tuple(int(x) for x in va), tuple(int(x) for x in vc)


def mul(x, y):
    t, a, c = x
    s, b, d = y
    b, d = act(t, b, d)
    w = wedge(a, b)
    return (t + s, tuple(a[i] + b[i] for i in range(3)), tuple(c[i] + d[i] + w[i] for i in range(3)))


def inv(x):
    t, a, c = x
    # exp(u)^-1 = exp(-u), then move back through gamma^-t
    na, nc = act(-t, tuple(-v for v in a), tuple(-v for v in c))
    return (-t, na, nc)


def comm(x, y):
    return mul(mul(mul(x, y), inv(x)), inv(y))


E = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
Z = (0, 0, 0)
gens = [(1, Z, Z)] + [(0, e, Z) for e in E] + [(0, Z, e) for e in E]
gens += [inv(g) for g in gens]
comms = {comm(x, y) for x in gens for y in gens}
comms |= {inv(c) for c in comms}

identity = (0, Z, Z)
seen = {identity}
frontier = [identity]
box = 4
for _ in range(4):
    nxt = []
    for g in frontier:
        for c in comms:
            h = mul(g, c)
            if h not in seen and all(abs(v) <= box for v in h[1] + h[2]):
                seen.add(h)
                nxt.append(h)
    frontier = nxt


def index(vectors):
    m = sp.Matrix([list(v) for v in vectors if any(v)]).T
    if m.rank() < 3:
        return 0
    d = smith_normal_form(m, domain=sp.ZZ)
    out = 1
    for i in range(3):
        out *= abs(d[i, i])
    return out


central = [h[2] for h in seen if h[0] == 0 and h[1] == Z]
vproj = [h[1] for h in seen if h[0] == 0]
out = Path(__file__).resolve().parent.parent / "golden" / "commutator_index.txt"
text = f"p {p} q {q} central_index {index(central)} v_index {index(vproj)} elements {len(seen)}\n"
out.write_text(text)
print(text, end="")
