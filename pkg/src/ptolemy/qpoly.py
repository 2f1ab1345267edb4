"""Exact q-polynomials, evaluation at roots of unity and cyclic sieving checks.

Roots of unity are never approximated: a polynomial is evaluated at a
primitive ``d``-th root by reducing it modulo the cyclotomic polynomial
``Phi_d`` and requiring the remainder to be a constant.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterable, Optional, Sequence

from ptolemy.core import Diagram, canonical_encoding, rotate
from ptolemy.count import count_invariant, count_ptolemy, divisors
from ptolemy.exact import check_zero_remainder


class IntPoly:
    """Dense polynomial in ``q`` with integer coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def constant(cls, v: int) -> IntPoly:
        return cls((v,))

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> IntPoly:
        return cls([0] * k + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.constant(other)
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
                coef = str(c) if (c != 1 or not mono) else ""
                terms.append(coef + ("*" if coef and mono else "") + mono)
        return " + ".join(terms)

    def __call__(self, q: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * q + c
        return out

    def __add__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self) -> IntPoly:
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other) -> IntPoly:
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def divmod(self, other: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Schoolbook division; the divisor's leading coefficient must divide every step."""
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return IntPoly(), self
        quo = [0] * (dq + 1)
        for i in range(dq, -1, -1):
            c = rem[i + len(other.coeffs) - 1]
            if c:
                if c % lead:
                    raise ArithmeticError(f"{c} not divisible by leading coefficient {lead}")
                c //= lead
                quo[i] = c
                for j, y in enumerate(other.coeffs):
                    rem[i + j] -= c * y
        return IntPoly(quo), IntPoly(rem)

    def __mod__(self, other: IntPoly) -> IntPoly:
        return self.divmod(other)[1]

    def exact_div(self, other: IntPoly, what: str = "polynomial division") -> IntPoly:
        quo, rem = self.divmod(other)
        check_zero_remainder(not rem.coeffs, what, f"{rem} dividing by {other}")
        return quo

    def fold(self, n: int) -> IntPoly:
        """Reduce modulo ``q^n - 1``."""
        out = [0] * n
        for k, c in enumerate(self.coeffs):
            out[k % n] += c
        return IntPoly(out)


def q_int(n: int) -> IntPoly:
    if n < 0:
        raise ValueError(f"q-integer needs n >= 0, got {n}")
    return IntPoly([1] * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> IntPoly:
    if n < 0:
        raise ValueError(f"q-factorial needs n >= 0, got {n}")
    if n == 0:
        return IntPoly.constant(1)
    return q_factorial(n - 1) * q_int(n)


def _div_by_q_int(p: IntPoly, i: int) -> IntPoly:
    # p / [i] = p * (1 - q) / (1 - q^i); the second division is a length-i recurrence
    num = (p * IntPoly([1, -1])).coeffs
    quo = list(num)
    for k in range(i, len(quo)):
        quo[k] += quo[k - i]
    rem_ok = all(c == 0 for c in quo[len(quo) - i:]) if len(quo) >= i else not any(quo)
    check_zero_remainder(rem_ok, "q-factorial division", f"by [{i}]")
    return IntPoly(quo[: max(len(quo) - i, 0)])


@lru_cache(maxsize=None)
def q_binom(a: int, b: int) -> IntPoly:
    """``[a]! / ([b]! [a-b]!)`` with the conventions of :func:`ptolemy.count.binom_ext`."""
    if a == b:
        return IntPoly.constant(1)
    if b < 0 or a < b or a < 0:
        return IntPoly()
    b = min(b, a - b)
    # running value is q_binom(a - b + i, i) after step i
    p = IntPoly.constant(1)
    for i in range(1, b + 1):
        p = _div_by_q_int(p * q_int(a - b + i), i)
    return p


def q_binom_by_factorials(a: int, b: int) -> IntPoly:
    """Same as :func:`q_binom`, by one schoolbook division of q-factorials."""
    if a == b:
        return IntPoly.constant(1)
    if b < 0 or a < b or a < 0:
        return IntPoly()
    return q_factorial(a).exact_div(q_factorial(b) * q_factorial(a - b), "q-factorial division")


def q_multinom(parts: Sequence[int]) -> IntPoly:
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"q-multinomial parts must be non-negative: {parts}")
    out = IntPoly.constant(1)
    total = 0
    for p in parts:
        total += p
        out = out * q_binom(total, p)
    return out


@lru_cache(maxsize=None)
def csp_polynomial(N: int, k: int, l: int, m: int) -> IntPoly:
    """The q-analogue of the count formula, divided exactly by ``[N]_q``."""
    num = q_multinom((N - 1, k, l, m)) * q_binom(N - 2 - k - l - m, l + m - 1)
    return num.exact_div(q_int(N), "csp_polynomial / [N]_q")


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPoly:
    if d < 1:
        raise ValueError(f"cyclotomic polynomial needs d >= 1, got {d}")
    p = IntPoly.monomial(d) - IntPoly.constant(1)
    for e in divisors(d)[:-1]:
        p = p.exact_div(cyclotomic(e), "cyclotomic division")
    return p


class NotIntegerAtRoot(ValueError):
    """The polynomial is not constant modulo ``Phi_d``."""


@dataclass(frozen=True)
class RootValue:
    residue: IntPoly
    d: int

    def __post_init__(self):
        if self.residue.degree >= cyclotomic(self.d).degree:
            raise ValueError("residue is not reduced modulo the cyclotomic polynomial")

    @property
    def value(self) -> int:
        if not self.residue.is_constant():
            raise NotIntegerAtRoot(f"{self.residue} is not an integer at a primitive {self.d}-th root")
        return self.residue.constant_term()


def reduce_at_root(P: IntPoly, d: int) -> RootValue:
    if d < 1:
        raise ValueError(f"root order must be >= 1, got {d}")
    return RootValue(P.fold(d) % cyclotomic(d), d)


def eval_at_primitive_root(P: IntPoly, d: int) -> int:
    return reduce_at_root(P, d).value


def q_lucas_binom_at_root(a: int, b: int, d: int) -> RootValue:
    """``q_binom(a, b)`` at a primitive ``d``-th root via the q-Lucas factorisation.

    The result is a residue modulo ``Phi_d`` because small q-binomials such as
    ``[2 choose 1] = 1 + q`` are not integers at every root of unity; ``.value``
    gives the integer when there is one.
    """
    if a < 0 or b < 0 or d < 2:
        raise ValueError(f"q-Lucas needs a, b >= 0 and d >= 2, got {(a, b, d)}")
    small = reduce_at_root(q_binom(a % d, b % d), d)
    return RootValue(small.residue * comb(a // d, b // d), d)


@dataclass(frozen=True)
class Orbit:
    representative: str
    size: int
    stabilizer: int


@dataclass(frozen=True)
class OrbitReport:
    n: int
    orbits: tuple[Orbit, ...]

    def __post_init__(self):
        for o in self.orbits:
            if o.size * o.stabilizer != self.n:
                raise ValueError(f"orbit {o} violates size * stabilizer = {self.n}")


def orbit_report(diagrams: Iterable[Diagram], n: int) -> OrbitReport:
    pool = set(diagrams)
    if any(A.n != n for A in pool):
        raise ValueError(f"all diagrams must live on the {n}-gon")
    orbits = []
    done = set()
    for A in sorted(pool, key=canonical_encoding):
        if A in done:
            continue
        orbit = [A]
        B = rotate(A, 1)
        while B != A:
            if B not in pool:
                raise ValueError(f"set is not closed under rotation: {B} missing")
            orbit.append(B)
            B = rotate(B, 1)
        done.update(orbit)
        # A is the smallest encoding of its orbit, since the scan is in sorted order
        orbits.append(Orbit(canonical_encoding(A).decode(), len(orbit), n // len(orbit)))
    orbits.sort(key=lambda o: o.representative)
    return OrbitReport(n, tuple(orbits))


def rsw_polynomial(report: OrbitReport) -> IntPoly:
    """``sum_j a_j q^j`` where ``a_j`` counts orbits whose stabiliser order divides ``j``."""
    return IntPoly([sum(1 for o in report.orbits if j % o.stabilizer == 0) for j in range(report.n)])


@dataclass
class DivisorCheck:
    d: int
    polynomial_value: int
    formula_value: Optional[int] = None
    enum_value: Optional[int] = None
    passed: bool = True


@dataclass
class CspReport:
    stats: tuple[int, int, int, int]
    divisors: list[DivisorCheck] = field(default_factory=list)
    rsw_pass: Optional[bool] = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.divisors) and self.rsw_pass is not False

    def failures(self) -> list[str]:
        out = [
            f"stats {self.stats} d={c.d}: polynomial {c.polynomial_value}, "
            f"formula {c.formula_value}, enumeration {c.enum_value}"
            for c in self.divisors
            if not c.passed
        ]
        if self.rsw_pass is False:
            out.append(f"stats {self.stats}: polynomial differs from the orbit polynomial mod q^n - 1")
        return out

    def to_dict(self) -> dict:
        rows = []
        for c in self.divisors:
            row = asdict(c)
            row["pass"] = row.pop("passed")
            rows.append(row)
        return {"stats": list(self.stats), "divisors": rows, "rsw_pass": self.rsw_pass}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


MODES = ("formula", "enumeration", "both")


def csp_verify(N: int, k: int, l: int, m: int, mode: str = "formula", diagrams=None) -> CspReport:
    """Check the sieving identity for every divisor ``d >= 2`` of ``N + 1``.

    ``diagrams`` may supply the stats class explicitly in enumeration mode;
    otherwise it is taken from the full enumeration of the (N+1)-gon.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if count_ptolemy(N, k, l, m) == 0:
        raise ValueError(f"stats class {(N, k, l, m)} is empty")
    n = N + 1
    P = csp_polynomial(N, k, l, m)
    use_enum = mode in ("enumeration", "both")
    if use_enum and diagrams is None:
        from ptolemy.enumeration import diagrams_by_stats

        diagrams = diagrams_by_stats(N).get((k, l, m), ())
    report = CspReport((N, k, l, m))
    for d in divisors(n)[1:]:
        try:
            value = eval_at_primitive_root(P, d)
        except NotIntegerAtRoot:
            value = None
        check = DivisorCheck(d, value)
        if mode in ("formula", "both"):
            check.formula_value = count_invariant(N, k, l, m, d)
            check.passed &= value == check.formula_value
        if use_enum:
            step = n // d
            check.enum_value = sum(1 for A in diagrams if rotate(A, step) == A)
            check.passed &= value == check.enum_value
        report.divisors.append(check)
    if use_enum:
        report.rsw_pass = P.fold(n) == rsw_polynomial(orbit_report(diagrams, n))
    return report
