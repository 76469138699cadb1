"""Dense univariate arithmetic over prime fields and general rings.

Coefficient lists are stored low degree first and kept trimmed (no trailing
zeros); the zero polynomial is the empty list.  The ``*_mod`` helpers work
over F_p with raw integers; the generic helpers take a ring object.
"""

from __future__ import annotations


def trim(f, is_zero=lambda c: c == 0):
    f = list(f)
    while f and is_zero(f[-1]):
        f.pop()
    return f


# --- generic ring ------------------------------------------------------------

def add(R, f, g):
    n = max(len(f), len(g))
    out = [R.add(f[i] if i < len(f) else R.zero, g[i] if i < len(g) else R.zero)
           for i in range(n)]
    return trim(out, R.is_zero)


def sub(R, f, g):
    n = max(len(f), len(g))
    out = [R.sub(f[i] if i < len(f) else R.zero, g[i] if i < len(g) else R.zero)
           for i in range(n)]
    return trim(out, R.is_zero)


def mul(R, f, g):
    if not f or not g:
        return []
    out = [R.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if R.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = R.add(out[i + j], R.mul(a, b))
    return trim(out, R.is_zero)


def divmod_monic(R, f, g):
    """Quotient and remainder of ``f`` by a ``g`` with unit leading coefficient."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    inv_lc = R.inv(g[-1])
    r = list(f)
    dg = len(g) - 1
    q = [R.zero] * max(len(f) - dg, 0)
    for k in range(len(f) - 1, dg - 1, -1):
        c = r[k]
        if R.is_zero(c):
            continue
        c = R.mul(c, inv_lc)
        q[k - dg] = c
        for i, b in enumerate(g):
            r[k - dg + i] = R.sub(r[k - dg + i], R.mul(c, b))
    return trim(q, R.is_zero), trim(r[:dg], R.is_zero)


def evaluate(R, f, x):
    acc = R.zero
    for c in reversed(f):
        acc = R.add(R.mul(acc, x), c)
    return acc


# --- prime field F_p with integer coefficients ---------------------------------

def norm_mod(f, p):
    return trim([c % p for c in f])


def add_mod(f, g, p):
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % p
                 for i in range(n)])


def sub_mod(f, g, p):
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p
                 for i in range(n)])


def mul_mod(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim([c % p for c in out])


def divmod_mod(f, g, p):
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    inv_lc = pow(g[-1], -1, p)
    r = list(f)
    dg = len(g) - 1
    if len(f) <= dg:
        return [], trim(r)
    q = [0] * (len(f) - dg)
    for k in range(len(f) - 1, dg - 1, -1):
        c = r[k] % p
        if not c:
            continue
        c = c * inv_lc % p
        q[k - dg] = c
        for i, b in enumerate(g):
            r[k - dg + i] = (r[k - dg + i] - c * b) % p
    return trim(q), trim([c % p for c in r[:dg]])


def rem_mod(f, g, p):
    return divmod_mod(f, g, p)[1]


def monic_mod(f, p):
    if not f:
        return []
    inv = pow(f[-1], -1, p)
    return [c * inv % p for c in f]


def gcd_mod(f, g, p):
    f, g = norm_mod(f, p), norm_mod(g, p)
    while g:
        f, g = g, rem_mod(f, g, p)
    return monic_mod(f, p)


def powmod_mod(f, k, m, p):
    """``f**k mod m`` over F_p."""
    result = [1]
    base = rem_mod(f, m, p)
    while k:
        if k & 1:
            result = rem_mod(mul_mod(result, base, p), m, p)
        k >>= 1
        if k:
            base = rem_mod(mul_mod(base, base, p), m, p)
    return result


def deriv_mod(f, p):
    return trim([(i * c) % p for i, c in enumerate(f)][1:])


def compose_pth_root(f, p):
    """For ``f`` with zero derivative, return ``g`` with ``g(x)^p = f(x)``."""
    return [f[i] for i in range(0, len(f), p)]


def eval_mod(f, x, p):
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc
