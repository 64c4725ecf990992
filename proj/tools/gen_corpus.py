#!/usr/bin/env python3
"""Writes corpus/*.pde by expanding the tensor field equations into components.

Coordinates x y z t, metric diag(+1, +1, +1, -1), all field indices lower.
Coefficients are kept as polynomials in the mass parameter m.
"""

import itertools
import pathlib
import sys
from collections import defaultdict
from fractions import Fraction

N = 4
COORDS = ["x", "y", "z", "t"]
ETA = [1, 1, 1, -1]


def pair_name(base, a, b):
    return f"{base}_{COORDS[a]}{COORDS[b]}"


class Expr:
    """sum of coef(m) * d^J field; coef is {power: Fraction}."""

    def __init__(self):
        self.terms = defaultdict(lambda: defaultdict(Fraction))

    def add(self, field, derivs, c, power=0):
        if field is None or c == 0:
            return self
        sign, name = field
        idx = [0] * N
        for mu in derivs:
            idx[mu] += 1
        self.terms[(name, tuple(idx))][power] += sign * Fraction(c)
        return self

    def cleaned(self):
        out = {}
        for key, poly in self.terms.items():
            poly = {p: c for p, c in poly.items() if c != 0}
            if poly:
                out[key] = poly
        return out


# Component accessors returning (sign, name) or None for vanishing entries.
def scalar(name):
    return lambda: (1, name)


def vector(base):
    return lambda a: (1, f"{base}_{COORDS[a]}")


def symmetric(base):
    return lambda a, b: (1, pair_name(base, min(a, b), max(a, b)))


def antisymmetric(base):
    def get(a, b):
        if a == b:
            return None
        return (1, pair_name(base, a, b)) if a < b else (-1, pair_name(base, b, a))

    return get


def vector_fields(base):
    return [f"{base}_{c}" for c in COORDS]


def symmetric_fields(base):
    return [pair_name(base, a, b) for a in range(N) for b in range(a, N)]


def antisymmetric_fields(base):
    return [pair_name(base, a, b) for a in range(N) for b in range(a + 1, N)]


# Building blocks --------------------------------------------------------

def box(e, field, extra=(), c=1, power=0):
    for a in range(N):
        e.add(field, (a, a) + tuple(extra), c * ETA[a], power)


def trace_terms(e, h, derivs, c=1, power=0):
    for a in range(N):
        e.add(h(a, a), derivs, c * ETA[a], power)


def maxwell(e, A, nu, c=1, power=0):
    # box A_nu - d_nu d^a A_a
    box(e, A(nu), c=c, power=power)
    for a in range(N):
        e.add(A(a), (nu, a), -c * ETA[a], power)


def einstein(e, h, mu, nu, c=1, power=0):
    # box h_mn - d^a d_m h_an - d^a d_n h_am + d_m d_n h + eta_mn (d^a d^b h_ab - box h)
    box(e, h(mu, nu), c=c, power=power)
    for a in range(N):
        e.add(h(a, nu), (a, mu), -c * ETA[a], power)
        e.add(h(a, mu), (a, nu), -c * ETA[a], power)
    trace_terms(e, h, (mu, nu), c, power)
    if mu == nu:
        for a in range(N):
            for b in range(N):
                e.add(h(a, b), (a, b), c * ETA[mu] * ETA[a] * ETA[b], power)
            for b in range(N):
                e.add(h(b, b), (a, a), -c * ETA[mu] * ETA[a] * ETA[b], power)


def detuned(e, h, mu, nu):
    box(e, h(mu, nu))
    for a in range(N):
        e.add(h(a, nu), (a, mu), ETA[a])
        e.add(h(a, mu), (a, nu), ETA[a])
    trace_terms(e, h, (mu, nu))
    if mu == nu:
        for a in range(N):
            for b in range(N):
                e.add(h(a, b), (a, b), ETA[mu] * ETA[a] * ETA[b])
                e.add(h(b, b), (a, a), ETA[mu] * ETA[a] * ETA[b])


def ricci(e, g, mu, nu):
    # eta^ab (d_a d_b g_mn - d_b d_m g_na - d_b d_n g_ma) + d_m d_n g
    box(e, g(mu, nu))
    for b in range(N):
        e.add(g(nu, b), (b, mu), -ETA[b])
        e.add(g(mu, b), (b, nu), -ETA[b])
    trace_terms(e, g, (mu, nu))


def two_form(e, B, mu, nu, c=1, power=0):
    # box B_mn + d_n d^a B_am - d_m d^a B_an
    box(e, B(mu, nu), c=c, power=power)
    for a in range(N):
        e.add(B(a, mu), (nu, a), c * ETA[a], power)
        e.add(B(a, nu), (mu, a), -c * ETA[a], power)


def mass_fp(e, h, mu, nu, sign, c, power=2):
    # c m^2 (h_mn + sign eta_mn h)
    e.add(h(mu, nu), (), c, power)
    if mu == nu:
        trace_terms(e, h, (), sign * c * ETA[mu], power)


# Systems -----------------------------------------------------------------

def pairs(strict):
    return [(a, b) for a in range(N) for b in range(a + (1 if strict else 0), N)]


def sys_wave():
    e = Expr()
    box(e, scalar("Phi")())
    return ["Phi"], [e], None, {}


def sys_maxwell(mass=False):
    A = vector("A")
    eqs = []
    for nu in range(N):
        e = Expr()
        maxwell(e, A, nu)
        if mass:
            e.add(A(nu), (), -1, 2)
        eqs.append(e)
    return vector_fields("A"), eqs, None if mass else [0, 1], {"m": 1} if mass else {}


def sys_proca_stueckelberg():
    A = vector("A")
    pi = scalar("pi")()
    eqs = []
    for nu in range(N):
        e = Expr()
        maxwell(e, A, nu)
        e.add(A(nu), (), -1, 2)
        e.add(pi, (nu,), -1, 1)
        eqs.append(e)
    e = Expr()
    for a in range(N):
        e.add(A(a), (a,), ETA[a], 1)
    box(e, pi)
    eqs.append(e)
    return vector_fields("A") + ["pi"], eqs, [0, 1], {"m": 1}


def sys_tensor(base, build, gammas, params=None):
    h = symmetric(base)
    eqs = []
    for mu, nu in pairs(False):
        e = Expr()
        build(e, h, mu, nu)
        eqs.append(e)
    return symmetric_fields(base), eqs, gammas, params or {}


def sys_fp_massive(sign):
    def build(e, h, mu, nu):
        einstein(e, h, mu, nu)
        mass_fp(e, h, mu, nu, sign, Fraction(-1, 4))

    return sys_tensor("h", build, None, {"m": 1})


def sys_fp_stueckelberg():
    h = symmetric("h")
    A = vector("A")
    Phi = scalar("Phi")()
    eqs = []

    def big_h(e, mu, nu, c, power):
        # H_mn = h_mn + d_m A_n + d_n A_m + 2 d_m d_n Phi
        e.add(h(mu, nu), (), c, power)
        e.add(A(nu), (mu,), c, power)
        e.add(A(mu), (nu,), c, power)
        e.add(Phi, (mu, nu), 2 * c, power)

    for mu, nu in pairs(False):
        e = Expr()
        einstein(e, h, mu, nu)
        big_h(e, mu, nu, 1, 2)
        if mu == nu:
            for a in range(N):
                big_h(e, a, a, -ETA[mu] * ETA[a], 2)
        eqs.append(e)
    for nu in range(N):
        # d^m h_mn - d_n h + box A_n - d_n d^a A_a
        e = Expr()
        for a in range(N):
            e.add(h(a, nu), (a,), ETA[a])
        trace_terms(e, h, (nu,), -1)
        maxwell(e, A, nu)
        eqs.append(e)
    e = Expr()
    for a in range(N):
        for b in range(N):
            e.add(h(a, b), (a, b), ETA[a] * ETA[b])
    for a in range(N):
        trace_terms(e, h, (a, a), -ETA[a])
    eqs.append(e)
    fields = symmetric_fields("h") + vector_fields("A") + ["Phi"]
    return fields, eqs, [0, 5], {"m": 1}


def sys_two_form(kind):
    B = antisymmetric("B")
    A = vector("A")
    eqs = []
    for mu, nu in pairs(True):
        e = Expr()
        two_form(e, B, mu, nu)
        if kind in ("massive", "stueckelberg"):
            e.add(B(mu, nu), (), -9, 2)
        if kind == "stueckelberg":
            e.add(A(nu), (mu,), -9, 1)
            e.add(A(mu), (nu,), 9, 1)
        eqs.append(e)
    fields = antisymmetric_fields("B")
    if kind == "stueckelberg":
        for mu in range(N):
            e = Expr()
            maxwell(e, A, mu)
            for a in range(N):
                e.add(B(mu, a), (a,), -ETA[a], 1)
            eqs.append(e)
        fields += vector_fields("A")
    gammas = {"massless": [1, 2], "massive": None, "stueckelberg": [1, 3]}[kind]
    return fields, eqs, gammas, {} if kind == "massless" else {"m": 1}


SYSTEMS = {
    "wave": sys_wave,
    "maxwell": lambda: sys_maxwell(False),
    "proca": lambda: sys_maxwell(True),
    "proca_stueckelberg": sys_proca_stueckelberg,
    "gr_normal": lambda: sys_tensor("g", ricci, [0, 4]),
    "cgr": lambda: sys_tensor("g", einstein, [0, 4]),
    "fp_massless": lambda: sys_tensor("h", einstein, [0, 4]),
    "fp_detuned": lambda: sys_tensor("h", detuned, None),
    "fp_massive": lambda: sys_fp_massive(-1),
    "fp_massive_detuned": lambda: sys_fp_massive(1),
    "fp_stueckelberg": sys_fp_stueckelberg,
    "2form": lambda: sys_two_form("massless"),
    "2form_massive": lambda: sys_two_form("massive"),
    "2form_stueckelberg": lambda: sys_two_form("stueckelberg"),
}

HEADERS = {
    "wave": "box Phi = 0",
    "maxwell": "box A_n - d_n d^a A_a = 0",
    "proca": "box A_n - d_n d^a A_a - m^2 A_n = 0",
    "proca_stueckelberg": "Proca with Stueckelberg scalar pi; gauge A -> A + d l, pi -> pi - m l",
    "gr_normal": "linearized vacuum Ricci tensor, metric perturbation g",
    "cgr": "linearized Einstein tensor, metric perturbation g",
    "fp_massless": "massless Fierz-Pauli operator",
    "fp_detuned": "Fierz-Pauli operator with every sign set to +",
    "fp_massive": "Fierz-Pauli with mass term -m^2/4 (h_mn - eta_mn h)",
    "fp_massive_detuned": "Fierz-Pauli with mass term -m^2/4 (h_mn + eta_mn h)",
    "fp_stueckelberg": "massive Fierz-Pauli with vector and scalar Stueckelberg fields",
    "2form": "box B_mn + d_n d^a B_am - d_m d^a B_an = 0",
    "2form_massive": "2-form with mass term -9 m^2 B_mn",
    "2form_stueckelberg": "massive 2-form with vector Stueckelberg field A",
}


def coef_text(power, c):
    mag = abs(c)
    parts = []
    if mag != 1 or power == 0:
        parts.append(str(mag))
    if power == 1:
        parts.append("m")
    elif power > 1:
        parts.append(f"m^{power}")
    return "*".join(parts)


def jet_text(name, idx):
    letters = [COORDS[mu] for mu in range(N) for _ in range(idx[mu])]
    return (f"d({','.join(letters)})" if letters else "") + name


def equation_text(expr, fields):
    order = {f: i for i, f in enumerate(fields)}
    terms = []
    for (name, idx), poly in expr.cleaned().items():
        for power, c in poly.items():
            terms.append((-sum(idx), tuple(-v for v in reversed(idx)), order[name], power, c, name, idx))
    terms.sort()
    out = []
    for k, (_, _, _, power, c, name, idx) in enumerate(terms):
        coef = coef_text(power, c)
        body = (coef + "*" if coef != "1" else "") + jet_text(name, idx)
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


def render(name):
    fields, eqs, gammas, params = SYSTEMS[name]()
    lines = [f"# {HEADERS[name]}",
             "# coordinates x y z t, metric diag(+1,+1,+1,-1), indices lowered",
             f"system {name} {{",
             f"  coordinates {' '.join(COORDS)};",
             f"  fields {', '.join(fields)};"]
    for p, v in params.items():
        lines.append(f"  param {p} = {v};")
    if gammas:
        lines.append(f"  gammas = [{', '.join(map(str, gammas))}];")
    for e in eqs:
        lines.append(f"  eq: {equation_text(e, fields)} = 0;")
    lines.append("}")
    return "\n".join(lines) + "\n"


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).parent.parent / "corpus")
    out.mkdir(parents=True, exist_ok=True)
    for name in SYSTEMS:
        (out / f"{name}.pde").write_text(render(name))


if __name__ == "__main__":
    main()
