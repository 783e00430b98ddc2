"""Exact orders of the finite simple groups and of their subgroup shapes.

All orders are :class:`~coprimax.arith.FactoredInt`; the classical-family
formulas are assembled from cached factorizations of ``q^i +- 1``, so nothing
here ever factors a large integer from scratch for standard parameters.
Sporadic orders are static factored data with frozen decimal checksums in the
test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import (
    ONE,
    FactoredInt,
    factor_q_power_pm1,
    factorize,
    is_prime,
    parse_prime_power,
)

__all__ = [
    "GroupSpec",
    "MaxSubgroupDescriptor",
    "NonSimpleError",
    "SPORADIC_NAMES",
    "order_simple",
    "order_torus_normalizer",
    "order_psl2_parabolic",
    "order_psl_subspace_stab",
    "order_psu_nondeg_stab",
    "order_psu_totsing_stab",
    "gaussian_binomial",
    "sporadic_order",
    "alternating_order",
    "symmetric_order",
    "dihedral_order",
    "small_group_orders",
    "exceptional_order",
    "known_aliases",
]


class NonSimpleError(ValueError):
    """Parameters that do not describe a simple group (hard error, never aliased)."""


# ---------------------------------------------------------------------------
# group descriptors

_FAMILIES = ("alternating", "sporadic", "linear", "unitary", "symplectic", "orthogonal", "exceptional")

SPORADIC_NAMES = (
    "M11", "M12", "M22", "M23", "M24",
    "J1", "J2", "J3", "J4",
    "Co1", "Co2", "Co3",
    "Fi22", "Fi23", "Fi24'",
    "HS", "McL", "He", "Ru", "Suz", "ON", "HN", "Ly", "Th", "B", "M",
)

_EXCEPTIONAL_TAGS = ("G2", "F4", "E6", "E7", "E8", "2B2", "2G2", "2F4", "3D4", "2E6", "2F4'")


@dataclass(frozen=True)
class GroupSpec:
    """A finite simple group: family tag plus parameters.

    ``linear`` is PSL_n(q) (eps = +), ``unitary`` is PSU_n(q) (eps = -).
    ``orthogonal`` carries otype in {"o", "+", "-"} and the dimension in n.
    ``symplectic`` carries the (even) dimension in n.
    """

    family: str
    n: int | None = None
    q: int | None = None
    degree: int | None = None
    name: str | None = None
    otype: str | None = None

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")

    @property
    def text(self) -> str:
        """Canonical spec text, e.g. 'PSL(2,23)' or 'M23'."""
        f = self.family
        if f == "alternating":
            return f"A{self.degree}"
        if f == "sporadic":
            return self.name
        if f == "linear":
            return f"PSL({self.n},{self.q})"
        if f == "unitary":
            return f"PSU({self.n},{self.q})"
        if f == "symplectic":
            return f"PSp({self.n},{self.q})"
        if f == "orthogonal":
            return f"POmega({self.otype},{self.n},{self.q})"
        if self.name == "2F4'":
            return f"2F4({self.q})'"
        return f"{self.name}({self.q})"


def validate_simple(spec: GroupSpec) -> None:
    """Reject parameters of non-simple groups; never reinterpret via aliases."""
    f = spec.family
    if f == "alternating":
        if spec.degree is None or spec.degree < 5:
            raise NonSimpleError(f"A{spec.degree} is not simple (degree must be >= 5)")
        return
    if f == "sporadic":
        if spec.name not in SPORADIC_NAMES:
            raise NonSimpleError(f"unknown sporadic group {spec.name!r}")
        return

    q = spec.q
    if q is None:
        raise NonSimpleError("missing field size q")
    parse_prime_power(q)

    if f == "linear":
        if spec.n is None or spec.n < 2:
            raise NonSimpleError("PSL_n needs n >= 2")
        if spec.n == 2 and q in (2, 3):
            raise NonSimpleError(f"PSL(2,{q}) is not simple")
    elif f == "unitary":
        if spec.n is None or spec.n < 3:
            raise NonSimpleError("PSU_n needs n >= 3")
        if spec.n == 3 and q == 2:
            raise NonSimpleError("PSU(3,2) is not simple")
    elif f == "symplectic":
        if spec.n is None or spec.n < 4 or spec.n % 2:
            raise NonSimpleError("PSp needs even dimension >= 4")
        if spec.n == 4 and q == 2:
            raise NonSimpleError("PSp(4,2) is not simple")
    elif f == "orthogonal":
        if spec.otype == "o":
            if spec.n is None or spec.n < 7 or spec.n % 2 == 0:
                raise NonSimpleError("POmega(o,d,q) needs odd dimension >= 7")
            if q % 2 == 0:
                raise NonSimpleError(
                    f"POmega(o,{spec.n},{q}) in even characteristic duplicates PSp({spec.n - 1},{q}); specify that instead"
                )
        elif spec.otype in ("+", "-"):
            if spec.n is None or spec.n < 8 or spec.n % 2:
                raise NonSimpleError(f"POmega({spec.otype},d,q) needs even dimension >= 8")
        else:
            raise NonSimpleError(f"orthogonal type must be o/+/-, got {spec.otype!r}")
    elif f == "exceptional":
        name = spec.name
        if name not in _EXCEPTIONAL_TAGS:
            raise NonSimpleError(f"unknown exceptional family {name!r}")
        pp = parse_prime_power(q)
        if name == "G2" and q == 2:
            raise NonSimpleError("G2(2) is not simple")
        if name == "2B2" and (pp.p != 2 or pp.e % 2 == 0 or q < 8):
            raise NonSimpleError("2B2(q) needs q = 2^(2m+1) >= 8")
        if name == "2G2" and (pp.p != 3 or pp.e % 2 == 0 or q < 27):
            raise NonSimpleError("2G2(q) needs q = 3^(2m+1) >= 27")
        if name == "2F4" and (pp.p != 2 or pp.e % 2 == 0 or q < 8):
            raise NonSimpleError("2F4(q) needs q = 2^(2m+1) >= 8 (use 2F4(2)' for the q=2 derived group)")
        if name == "2F4'" and q != 2:
            raise NonSimpleError("the 2F4' derived group only exists at q = 2")


def known_aliases(spec: GroupSpec) -> list[str]:
    """Exceptional-isomorphism notes so users do not double-count."""
    key = (spec.family, spec.n, spec.q, spec.degree, spec.otype)
    table = {
        ("linear", 2, 4, None, None): "PSL(2,4) ~ PSL(2,5) ~ A5",
        ("linear", 2, 5, None, None): "PSL(2,5) ~ PSL(2,4) ~ A5",
        ("alternating", None, None, 5, None): "A5 ~ PSL(2,4) ~ PSL(2,5)",
        ("linear", 2, 9, None, None): "PSL(2,9) ~ A6",
        ("alternating", None, None, 6, None): "A6 ~ PSL(2,9)",
        ("linear", 4, 2, None, None): "PSL(4,2) ~ A8",
        ("alternating", None, None, 8, None): "A8 ~ PSL(4,2)",
        ("linear", 2, 7, None, None): "PSL(2,7) ~ PSL(3,2)",
        ("linear", 3, 2, None, None): "PSL(3,2) ~ PSL(2,7)",
        ("unitary", 4, 2, None, None): "PSU(4,2) ~ PSp(4,3)",
        ("symplectic", 4, 3, None, None): "PSp(4,3) ~ PSU(4,2)",
    }
    hit = table.get(key)
    return [hit] if hit else []


@dataclass(frozen=True)
class MaxSubgroupDescriptor:
    """A maximal-subgroup candidate: shape, exact order and defining data."""

    kind: str
    structure: str
    order: FactoredInt
    params: tuple = ()
    maximal: bool = True

    def params_dict(self) -> dict:
        return dict(self.params)


# ---------------------------------------------------------------------------
# sporadic orders (static factored table; decimals frozen in the tests)

_SPORADIC_FACTORS = {
    "M11": {2: 4, 3: 2, 5: 1, 11: 1},
    "M12": {2: 6, 3: 3, 5: 1, 11: 1},
    "M22": {2: 7, 3: 2, 5: 1, 7: 1, 11: 1},
    "M23": {2: 7, 3: 2, 5: 1, 7: 1, 11: 1, 23: 1},
    "M24": {2: 10, 3: 3, 5: 1, 7: 1, 11: 1, 23: 1},
    "J1": {2: 3, 3: 1, 5: 1, 7: 1, 11: 1, 19: 1},
    "J2": {2: 7, 3: 3, 5: 2, 7: 1},
    "J3": {2: 7, 3: 5, 5: 1, 17: 1, 19: 1},
    "J4": {2: 21, 3: 3, 5: 1, 7: 1, 11: 3, 23: 1, 29: 1, 31: 1, 37: 1, 43: 1},
    "Co1": {2: 21, 3: 9, 5: 4, 7: 2, 11: 1, 13: 1, 23: 1},
    "Co2": {2: 18, 3: 6, 5: 3, 7: 1, 11: 1, 23: 1},
    "Co3": {2: 10, 3: 7, 5: 3, 7: 1, 11: 1, 23: 1},
    "Fi22": {2: 17, 3: 9, 5: 2, 7: 1, 11: 1, 13: 1},
    "Fi23": {2: 18, 3: 13, 5: 2, 7: 1, 11: 1, 13: 1, 17: 1, 23: 1},
    "Fi24'": {2: 21, 3: 16, 5: 2, 7: 3, 11: 1, 13: 1, 17: 1, 23: 1, 29: 1},
    "HS": {2: 9, 3: 2, 5: 3, 7: 1, 11: 1},
    "McL": {2: 7, 3: 6, 5: 3, 7: 1, 11: 1},
    "He": {2: 10, 3: 3, 5: 2, 7: 3, 17: 1},
    "Ru": {2: 14, 3: 3, 5: 3, 7: 1, 13: 1, 29: 1},
    "Suz": {2: 13, 3: 7, 5: 2, 7: 1, 11: 1, 13: 1},
    "ON": {2: 9, 3: 4, 5: 1, 7: 3, 11: 1, 19: 1, 31: 1},
    "HN": {2: 14, 3: 6, 5: 6, 7: 1, 11: 1, 19: 1},
    "Ly": {2: 8, 3: 7, 5: 6, 7: 1, 11: 1, 31: 1, 37: 1, 67: 1},
    "Th": {2: 15, 3: 10, 5: 3, 7: 2, 13: 1, 19: 1, 31: 1},
    "B": {2: 41, 3: 13, 5: 6, 7: 2, 11: 1, 13: 1, 17: 1, 19: 1, 23: 1, 31: 1, 47: 1},
    "M": {2: 46, 3: 20, 5: 9, 7: 6, 11: 2, 13: 3, 17: 1, 19: 1, 23: 1, 29: 1, 31: 1, 41: 1, 47: 1, 59: 1, 71: 1},
}

_SPORADIC_ORDERS = {name: FactoredInt(f) for name, f in _SPORADIC_FACTORS.items()}


def sporadic_order(name: str) -> FactoredInt:
    try:
        return _SPORADIC_ORDERS[name]
    except KeyError:
        raise ValueError(f"unknown sporadic group {name!r}") from None


# ---------------------------------------------------------------------------
# elementary orders


def symmetric_order(n: int) -> FactoredInt:
    if n < 1:
        raise ValueError("S_n needs n >= 1")
    out = ONE
    for i in range(2, n + 1):
        out = out * factorize(i)
    return out


def alternating_order(n: int) -> FactoredInt:
    if n < 3:
        raise ValueError("A_n order needs n >= 3")
    return symmetric_order(n).div_exact(factorize(2))


def dihedral_order(k: int) -> FactoredInt:
    """Order of D_k in the order-k convention (so D_8 has order 8)."""
    if k < 4 or k % 2:
        raise ValueError("dihedral order must be an even integer >= 4")
    return factorize(k)


def small_group_orders(name: str) -> FactoredInt:
    """Fixed orders by name: A_n, S_n, D_k, and the sporadic table."""
    clean = name.replace("_", "")
    if clean in _SPORADIC_ORDERS:
        return _SPORADIC_ORDERS[clean]
    if clean[0] in "ASD" and clean[1:].isdigit():
        k = int(clean[1:])
        if clean[0] == "A":
            return alternating_order(k)
        if clean[0] == "S":
            return symmetric_order(k)
        return dihedral_order(k)
    raise ValueError(f"no fixed order rule for {name!r}")


# ---------------------------------------------------------------------------
# classical and exceptional simple orders


def _qminus(q: int, i: int) -> FactoredInt:
    return factor_q_power_pm1(q, i, "-")


def _qplus(q: int, i: int) -> FactoredInt:
    return factor_q_power_pm1(q, i, "+")


def _qalt(q: int, i: int) -> FactoredInt:
    """q^i - (-1)^i: the alternating-sign factors of the unitary orders."""
    return _qminus(q, i) if i % 2 == 0 else _qplus(q, i)


def _qpow(q: int, e: int) -> FactoredInt:
    if e == 0:
        return ONE
    pp = parse_prime_power(q)
    return FactoredInt({pp.p: pp.e * e})


def linear_order(n: int, q: int) -> FactoredInt:
    out = _qpow(q, n * (n - 1) // 2)
    for i in range(2, n + 1):
        out = out * _qminus(q, i)
    return out.div_exact(factorize(math.gcd(n, q - 1)))


def unitary_order(n: int, q: int) -> FactoredInt:
    out = _qpow(q, n * (n - 1) // 2)
    for i in range(2, n + 1):
        out = out * _qalt(q, i)
    return out.div_exact(factorize(math.gcd(n, q + 1)))


def symplectic_order(dim: int, q: int) -> FactoredInt:
    m = dim // 2
    out = _qpow(q, m * m)
    for i in range(1, m + 1):
        out = out * _qminus(q, 2 * i)
    return out.div_exact(factorize(math.gcd(2, q - 1)))


def orthogonal_order(otype: str, dim: int, q: int) -> FactoredInt:
    if otype == "o":
        return symplectic_order(dim - 1, q)
    m = dim // 2
    out = _qpow(q, m * (m - 1))
    out = out * (_qminus(q, m) if otype == "+" else _qplus(q, m))
    for i in range(1, m):
        out = out * _qminus(q, 2 * i)
    g = math.gcd(4, (q**m - 1) if otype == "+" else (q**m + 1))
    return out.div_exact(factorize(g))


def exceptional_order(name: str, q: int) -> FactoredInt:
    if name == "G2":
        return _qpow(q, 6) * _qminus(q, 6) * _qminus(q, 2)
    if name == "F4":
        return _qpow(q, 24) * _qminus(q, 12) * _qminus(q, 8) * _qminus(q, 6) * _qminus(q, 2)
    if name == "E6":
        out = _qpow(q, 36)
        for i in (12, 9, 8, 6, 5, 2):
            out = out * _qminus(q, i)
        return out.div_exact(factorize(math.gcd(3, q - 1)))
    if name == "E7":
        out = _qpow(q, 63)
        for i in (18, 14, 12, 10, 8, 6, 2):
            out = out * _qminus(q, i)
        return out.div_exact(factorize(math.gcd(2, q - 1)))
    if name == "E8":
        out = _qpow(q, 120)
        for i in (30, 24, 20, 18, 14, 12, 8, 2):
            out = out * _qminus(q, i)
        return out
    if name == "2E6":
        out = _qpow(q, 36) * _qminus(q, 12) * _qplus(q, 9) * _qminus(q, 8) * _qminus(q, 6) * _qplus(q, 5) * _qminus(q, 2)
        return out.div_exact(factorize(math.gcd(3, q + 1)))
    if name == "2B2":
        return _qpow(q, 2) * _qplus(q, 2) * _qminus(q, 1)
    if name == "2G2":
        return _qpow(q, 3) * _qplus(q, 3) * _qminus(q, 1)
    if name == "3D4":
        # q^8 + q^4 + 1 = (q^12-1)(q^2-1) / ((q^6-1)(q^4-1))
        mid = (_qminus(q, 12) * _qminus(q, 2)).div_exact(_qminus(q, 6) * _qminus(q, 4))
        return _qpow(q, 12) * mid * _qminus(q, 6) * _qminus(q, 2)
    if name == "2F4":
        return _qpow(q, 12) * _qplus(q, 6) * _qminus(q, 4) * _qplus(q, 3) * _qminus(q, 1)
    if name == "2F4'":
        if q != 2:
            raise ValueError("2F4' only exists at q = 2")
        return exceptional_order("2F4", 2).div_exact(factorize(2))
    raise ValueError(f"unknown exceptional family {name!r}")


def order_simple(spec: GroupSpec) -> FactoredInt:
    """Exact order of a validated simple group."""
    validate_simple(spec)
    f = spec.family
    if f == "alternating":
        return alternating_order(spec.degree)
    if f == "sporadic":
        return sporadic_order(spec.name)
    if f == "linear":
        return linear_order(spec.n, spec.q)
    if f == "unitary":
        return unitary_order(spec.n, spec.q)
    if f == "symplectic":
        return symplectic_order(spec.n, spec.q)
    if f == "orthogonal":
        return orthogonal_order(spec.otype, spec.n, spec.q)
    return exceptional_order(spec.name, spec.q)


# ---------------------------------------------------------------------------
# subgroup shapes


def order_torus_normalizer(n: int, q: int, eps: str) -> FactoredInt:
    """Order of the (q^n -+ 1)-torus normalizer: (q^n-e1)/((q-e1)(q-e1,n)) * n.

    This is the odd-order cyclic-by-n subgroup of PSL_n(q) (eps '+') or
    PSU_n(q) (eps '-') for odd prime n; oddness is asserted.
    """
    if n < 3 or not is_prime(n):
        raise ValueError(f"n must be an odd prime, got {n}")
    if eps not in "+-":
        raise ValueError("eps must be '+' or '-'")
    parse_prime_power(q)
    sign = -1 if eps == "+" else +1
    big = factor_q_power_pm1(q, n, "-" if eps == "+" else "+")
    qe = q + sign  # q - 1 for '+', q + 1 for '-'
    out = big.div_exact(factorize(qe)).div_exact(factorize(math.gcd(qe, n))) * factorize(n)
    assert out.is_odd, f"torus normalizer order unexpectedly even for (n={n}, q={q}, {eps})"
    return out


def torus_normalizer_structure(n: int, q: int, eps: str) -> str:
    sign = -1 if eps == "+" else +1
    qe = q + sign
    cyc = (q**n - (1 if eps == "+" else -1)) // (qe * math.gcd(qe, n))
    return f"{cyc}:{n}"


def order_psl2_parabolic(q: int) -> FactoredInt:
    """q(q-1)/2, the point-stabilizer order in PSL_2(q) for odd q."""
    pp = parse_prime_power(q)
    if pp.p == 2 or q < 5:
        raise ValueError("needs an odd prime power q >= 5")
    return _qpow(q, 1) * factorize((q - 1) // 2)


def gaussian_binomial(n: int, m: int, q: int) -> FactoredInt:
    """Number of m-dimensional subspaces of an n-space over GF(q)."""
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    num = ONE
    den = ONE
    for i in range(n - m + 1, n + 1):
        num = num * _qminus(q, i)
    for i in range(1, m + 1):
        den = den * _qminus(q, i)
    return num.div_exact(den)


def order_psl_subspace_stab(n: int, q: int, m: int) -> FactoredInt:
    """Order of the m-subspace stabilizer in PSL_n(q).

    Computed with q-exponent n(n-1)/2 and asserted equal to
    |PSL_n(q)| / [n choose m]_q, which pins the exponent mechanically.
    """
    if not 1 <= m <= n - 1:
        raise ValueError("need 1 <= m <= n-1")
    out = _qpow(q, n * (n - 1) // 2) * factorize(q - 1).div_exact(factorize(math.gcd(q - 1, n)))
    for i in range(2, m + 1):
        out = out * _qminus(q, i)
    for i in range(2, n - m + 1):
        out = out * _qminus(q, i)
    check = linear_order(n, q).div_exact(gaussian_binomial(n, m, q))
    assert out == check, f"stabilizer formula mismatch at (n={n}, q={q}, m={m})"
    return out


def order_psu_nondeg_stab(n: int, q: int, m: int) -> FactoredInt:
    """Order of the nondegenerate m-subspace stabilizer in PSU_n(q)."""
    if not 1 <= m <= (n - 1) // 2:
        raise ValueError("need 1 <= m <= (n-1)/2")
    e = (m * m + (n - m) * (n - m) - n) // 2
    out = _qpow(q, e) * factorize(q + 1).div_exact(factorize(math.gcd(q + 1, n)))
    for i in range(2, m + 1):
        out = out * _qalt(q, i)
    for i in range(2, n - m + 1):
        out = out * _qalt(q, i)
    return out


def order_psu_totsing_stab(n: int, q: int, m: int) -> FactoredInt:
    """Order of the totally singular m-subspace stabilizer in PSU_n(q)."""
    if not 1 <= m <= (n - 1) // 2:
        raise ValueError("need 1 <= m <= (n-1)/2")
    out = _qpow(q, n * (n - 1) // 2) * _qminus(q, 2).div_exact(factorize(math.gcd(q + 1, n)))
    for i in range(2, m + 1):
        out = out * _qminus(q, 2 * i)
    for i in range(2, n - 2 * m + 1):
        out = out * _qalt(q, i)
    return out
