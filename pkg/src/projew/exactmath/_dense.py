"""Recursive dense integer polynomials used for gcd and exact division.

A level-0 value is a Python ``int``.  A level-``k`` value is a list of
level-``k-1`` values indexed by degree, with no trailing zeros; the zero
polynomial is ``[]``.  Only levels 0..2 are ever used here, but nothing
below depends on that.
"""
from math import gcd as _igcd
from math import isqrt


def is_zero(a, lvl):
    return a == 0 if lvl == 0 else not a


def _trim(a):
    while a and (a[-1] == 0 or a[-1] == []):
        a.pop()
    return a


def neg(a, lvl):
    if lvl == 0:
        return -a
    return [neg(c, lvl - 1) for c in a]


def add(a, b, lvl):
    if lvl == 0:
        return a + b
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = add(out[i], c, lvl - 1)
    return _trim(out)


def sub(a, b, lvl):
    return add(a, neg(b, lvl), lvl)


def mul(a, b, lvl):
    if lvl == 0:
        return a * b
    if not a or not b:
        return []
    zero = 0 if lvl == 1 else []
    out = [zero] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if is_zero(ca, lvl - 1):
            continue
        for j, cb in enumerate(b):
            if is_zero(cb, lvl - 1):
                continue
            out[i + j] = add(out[i + j], mul(ca, cb, lvl - 1), lvl - 1)
    return _trim(out)


def _shift_mul(b, k, c, lvl):
    """Return ``c * t**k * b`` where ``c`` is a level ``lvl-1`` coefficient."""
    zero = 0 if lvl == 1 else []
    return [zero] * k + [mul(c, x, lvl - 1) for x in b]


def exquo(a, b, lvl):
    """Exact quotient ``a / b``; raises ``ArithmeticError`` if inexact."""
    if is_zero(b, lvl):
        raise ZeroDivisionError("dense exquo by zero")
    if lvl == 0:
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("inexact integer division")
        return q
    if not a:
        return []
    db = len(b) - 1
    lcb = b[-1]
    r = list(a)
    zero = 0 if lvl == 1 else []
    q = [zero] * max(len(a) - db, 0)
    while r and len(r) - 1 >= db:
        k = len(r) - 1 - db
        c = exquo(r[-1], lcb, lvl - 1)
        q[k] = c
        r = sub(r, _shift_mul(b, k, c, lvl), lvl)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return _trim(q)


def prem(a, b, lvl):
    """Sparse pseudo-remainder of ``a`` by ``b`` (lvl >= 1)."""
    db = len(b) - 1
    lcb = b[-1]
    r = list(a)
    while r and len(r) - 1 >= db:
        k = len(r) - 1 - db
        lcr = r[-1]
        r = sub([mul(lcb, c, lvl - 1) for c in r], _shift_mul(b, k, lcr, lvl), lvl)
    return r


def sign(a, lvl):
    """Sign of the recursively-leading integer coefficient."""
    while lvl > 0:
        if not a:
            return 0
        a = a[-1]
        lvl -= 1
    return (a > 0) - (a < 0)


def content(a, lvl):
    if lvl == 0:
        return abs(a)
    g = 0 if lvl == 1 else []
    for c in a:
        g = gcd(g, c, lvl - 1)
        if lvl == 1 and g == 1:
            break
    return g


def primitive(a, lvl):
    c = content(a, lvl)
    if is_zero(c, lvl - 1):
        return a
    if lvl == 1 and c == 1:
        return a
    return [exquo(x, c, lvl - 1) for x in a]


def _normalize_sign(a, lvl):
    return neg(a, lvl) if sign(a, lvl) < 0 else a


def gcd(a, b, lvl):
    """Gcd with positive recursively-leading coefficient.

    Tries the heuristic evaluation/interpolation gcd first and falls back
    to a primitive pseudo-remainder sequence.
    """
    if lvl == 0:
        return _igcd(a, b)
    if not a:
        return _normalize_sign(b, lvl)
    if not b:
        return _normalize_sign(a, lvl)
    ca, cb = int_content(a, lvl), int_content(b, lvl)
    c = _igcd(ca, cb)
    a = scalar_exquo(a, ca, lvl)
    b = scalar_exquo(b, cb, lvl)
    h = _heu_gcd(a, b, lvl)
    if h is None:
        h = _prs_gcd(a, b, lvl)
    return _normalize_sign(scalar_mul(h, c, lvl), lvl)


def _prs_gcd(a, b, lvl):
    ca, cb = content(a, lvl), content(b, lvl)
    cg = gcd(ca, cb, lvl - 1)
    a = [exquo(x, ca, lvl - 1) for x in a]
    b = [exquo(x, cb, lvl - 1) for x in b]
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            a = _one(lvl)
            break
        r = prem(a, b, lvl)
        a, b = b, (primitive(r, lvl) if r else r)
    return _trim([mul(cg, c, lvl - 1) for c in a])


# -- heuristic gcd ---------------------------------------------------------

def int_content(a, lvl):
    """Gcd of all integer coefficients (nonnegative)."""
    if lvl == 0:
        return abs(a)
    g = 0
    for c in a:
        g = _igcd(g, int_content(c, lvl - 1))
        if g == 1:
            break
    return g


def scalar_mul(a, k, lvl):
    if lvl == 0:
        return a * k
    if k == 0:
        return []
    return [scalar_mul(c, k, lvl - 1) for c in a]


def scalar_exquo(a, k, lvl):
    if k == 1:
        return a
    if lvl == 0:
        q, r = divmod(a, k)
        if r:
            raise ArithmeticError("inexact integer division")
        return q
    return [scalar_exquo(c, k, lvl - 1) for c in a]


def max_norm(a, lvl):
    if lvl == 0:
        return abs(a)
    return max((max_norm(c, lvl - 1) for c in a), default=0)


def _ground_lc(a, lvl):
    while lvl > 0:
        a = a[-1]
        lvl -= 1
    return a


def _eval_main(a, xi, lvl):
    """Substitute the integer ``xi`` for the main variable (level drops by one)."""
    acc = 0 if lvl == 1 else []
    for c in reversed(a):
        acc = add(scalar_mul(acc, xi, lvl - 1), c, lvl - 1)
    return acc


def _smod(v, xi):
    r = v % xi
    return r - xi if r > xi // 2 else r


def _sym_digit(h, xi, lvl):
    if lvl == 0:
        return _smod(h, xi)
    return _trim([_sym_digit(c, xi, lvl - 1) for c in h])


def _interpolate(h, xi, lvl):
    """Inverse of ``_eval_main`` using symmetric ``xi``-adic digits."""
    out = []
    while not is_zero(h, lvl - 1):
        d = _sym_digit(h, xi, lvl - 1)
        out.append(d)
        h = scalar_exquo(sub(h, d, lvl - 1), xi, lvl - 1)
    return _trim(out)


def _divides(h, f, lvl):
    try:
        exquo(f, h, lvl)
    except ArithmeticError:
        return False
    return True


def _heu_gcd(f, g, lvl, attempts=6):
    fn, gn = max_norm(f, lvl), max_norm(g, lvl)
    b = 2 * min(fn, gn) + 29
    xi = max(min(b, 99 * isqrt(b)),
             2 * min(fn // abs(_ground_lc(f, lvl)), gn // abs(_ground_lc(g, lvl))) + 2)
    for _ in range(attempts):
        ff = _eval_main(f, xi, lvl)
        gg = _eval_main(g, xi, lvl)
        if not is_zero(ff, lvl - 1) and not is_zero(gg, lvl - 1):
            gam = gcd(ff, gg, lvl - 1)
            h = _interpolate(gam, xi, lvl)
            h = scalar_exquo(h, int_content(h, lvl), lvl)
            if _divides(h, f, lvl) and _divides(h, g, lvl):
                return h
            for src, other, img in ((f, g, ff), (g, f, gg)):
                cof = _interpolate(exquo(img, gam, lvl - 1), xi, lvl)
                if not cof:
                    continue
                try:
                    h = exquo(src, cof, lvl)
                except ArithmeticError:
                    continue
                h = scalar_exquo(h, int_content(h, lvl), lvl)
                if _divides(h, other, lvl):
                    return h
        xi = xi * 73794 * isqrt(isqrt(xi)) // 27011
    return None


def _one(lvl):
    one = 1
    for _ in range(lvl):
        one = [one]
    return one
