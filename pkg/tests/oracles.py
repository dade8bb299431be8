"""Independent reference implementations used only by the tests.

Nothing here shares code with the package beyond the Cartan matrix itself:
Weyl groups are built as permutations of the root set, Bruhat order by
brute-force subwords, Demazure operators as sympy divided differences and
Smith normal form through sympy.
"""

from __future__ import annotations

from itertools import product as iproduct

import sympy
from sympy.matrices.normalforms import smith_normal_form as sympy_snf


def reflect(cartan, v, i):
    """s_i(v) = v - <v, alpha_i^vee> alpha_i, straight from a_ij = <alpha_j, alpha_i^vee>."""
    c = sum(cartan[i][j] * v[j] for j in range(len(v)))
    out = list(v)
    out[i] -= c
    return tuple(out)


def roots_by_closure(cartan):
    n = len(cartan)
    seen = {tuple(int(i == j) for j in range(n)) for i in range(n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(n):
                u = reflect(cartan, v, i)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return sorted(seen)


def weyl_as_permutations(cartan):
    """W as the set of root permutations, by BFS on words.  Returns {perm: shortest word}."""
    roots = roots_by_closure(cartan)
    pos = {r: k for k, r in enumerate(roots)}
    gens = [tuple(pos[reflect(cartan, r, i)] for r in roots) for i in range(len(cartan))]
    ident = tuple(range(len(roots)))
    seen = {ident: ()}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for i, g in enumerate(gens):
                q = tuple(g[p[k]] for k in range(len(roots)))  # s_i after p
                if q not in seen:
                    seen[q] = seen[p] + (i + 1,)
                    nxt.append(q)
        frontier = nxt
    return seen


def word_action(cartan, word, v):
    for i in reversed(word):
        v = reflect(cartan, v, i - 1)
    return tuple(v)


def word_key(cartan, word):
    """Fingerprint of a group element: its action on the simple roots."""
    n = len(cartan)
    return tuple(word_action(cartan, word, tuple(int(i == j) for j in range(n))) for i in range(n))


def subword_set(cartan, word):
    """Keys of every product of a subword."""
    out = set()
    for mask in iproduct((0, 1), repeat=len(word)):
        out.add(word_key(cartan, [i for i, m in zip(word, mask) if m]))
    return out


def bruhat_oracle(cartan, u_word, w_word):
    return word_key(cartan, u_word) in subword_set(cartan, w_word)


# ---------------------------------------------------------------------------
# Demazure operators as sympy divided differences


def to_sympy(cartan, terms, xs):
    return sum(c * sympy.Mul(*[x**k for x, k in zip(xs, w)]) for w, c in terms)


def from_sympy(expr, xs):
    expr = sympy.expand(expr)
    out = {}
    for term in sympy.Add.make_args(expr):
        if term == 0:
            continue
        c, rest = term.as_coeff_Mul()
        powers = rest.as_powers_dict()
        w = tuple(int(powers.get(x, 0)) for x in xs)
        out[w] = out.get(w, 0) + int(c)
    return {w: c for w, c in out.items() if c}


def divided_difference(cartan, expr, i, xs):
    """(f - e^{-alpha_i} s_i f) / (1 - e^{-alpha_i}) with sympy doing the division."""
    n = len(cartan)
    subs = {}
    for j in range(n):
        # s_i(alpha_j) = alpha_j - a_ij alpha_i
        subs[xs[j]] = xs[j] * xs[i] ** (-cartan[i][j])
    s_f = expr.subs(subs, simultaneous=True)
    q = sympy.cancel((expr - s_f / xs[i]) / (1 - 1 / xs[i]))
    return sympy.expand(q)


def demazure_oracle(cartan, terms, word):
    xs = sympy.symbols(f"x1:{len(cartan) + 1}")
    expr = to_sympy(cartan, terms, xs)
    for i in reversed(word):
        expr = divided_difference(cartan, expr, i - 1, xs)
    return from_sympy(expr, xs)


# ---------------------------------------------------------------------------


def snf_divisors(matrix):
    m = sympy.Matrix(matrix)
    d = sympy_snf(m, domain=sympy.ZZ)
    return sorted(abs(int(d[i, i])) for i in range(min(d.shape)) if d[i, i] != 0)
