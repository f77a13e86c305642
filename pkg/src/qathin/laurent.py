"""Laurent polynomials as sparse {exponent: coefficient} dicts.

Used for the Kauffman bracket (variable A), Jones polynomials in q with
exponents stored doubled (so q^(j2/2) is the monomial q^j), and Alexander
polynomials from grid Euler characteristics.
"""

from __future__ import annotations

__all__ = [
    "lp_add",
    "lp_scale",
    "lp_mul",
    "lp_shift",
    "lp_invert",
    "lp_pow",
    "lp_eval_minus1",
    "lp_div_exact",
    "lp_format_half",
    "eval_at_sqrt_minus_one",
]


def _clean(p: dict) -> dict:
    return {e: c for e, c in p.items() if c}


def lp_add(p: dict, q: dict) -> dict:
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, 0) + c
    return _clean(out)


def lp_scale(p: dict, k: int) -> dict:
    return _clean({e: k * c for e, c in p.items()})


def lp_shift(p: dict, s: int) -> dict:
    return {e + s: c for e, c in p.items()}


def lp_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return _clean(out)


def lp_invert(p: dict) -> dict:
    """Substitute the variable by its inverse."""
    return {-e: c for e, c in p.items()}


def lp_pow(p: dict, n: int) -> dict:
    out = {0: 1}
    for _ in range(n):
        out = lp_mul(out, p)
    return out


def lp_eval_minus1(p: dict) -> int:
    """Evaluate at -1 (valid for any Laurent exponent range)."""
    return sum(c if e % 2 == 0 else -c for e, c in p.items())


def lp_div_exact(p: dict, q: dict) -> dict:
    """Exact division in Z[t, t^-1]; raises ValueError if not divisible."""
    if not q:
        raise ZeroDivisionError("division by zero polynomial")
    if not p:
        return {}
    p = dict(p)
    out: dict = {}
    qe = max(q)
    qc = q[qe]
    while p:
        pe = max(p)
        pc = p[pe]
        if pc % qc:
            raise ValueError("not divisible")
        ce, cc = pe - qe, pc // qc
        out[ce] = cc
        for e, c in q.items():
            ne = e + ce
            p[ne] = p.get(ne, 0) - c * cc
            if not p[ne]:
                del p[ne]
    return out


def eval_at_sqrt_minus_one(p2: dict) -> int:
    """|p(q)| at q = -1, for p given with doubled exponents (q^(e/2) terms).

    Substitutes q^(1/2) = i and returns the magnitude, which is an integer
    because the sum lands on one axis of the Gaussian integers.
    """
    re = im = 0
    for e2, c in p2.items():
        k = e2 % 4
        if k == 0:
            re += c
        elif k == 1:
            im += c
        elif k == 2:
            re -= c
        else:
            im -= c
    if re and im:
        raise ValueError("evaluation is not on a single axis")
    return abs(re) if re else abs(im)


def lp_format_half(p2: dict, var: str = "q") -> str:
    """Render a polynomial with doubled exponents; halves shown as fractions."""
    if not p2:
        return "0"
    parts = []
    for e2 in sorted(p2):
        c = p2[e2]
        if e2 == 0:
            term = str(abs(c))
        else:
            ex = str(e2 // 2) if e2 % 2 == 0 else f"{e2}/2"
            base = var if ex == "1" else f"{var}^{ex}"
            term = base if abs(c) == 1 else f"{abs(c)}*{base}"
        parts.append(("- " if c < 0 else "+ ") + term)
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]
