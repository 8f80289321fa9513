"""Monomials, binomials and integer polynomials in x1..x4, plus monomial orders.

A monomial is a plain tuple of four non-negative exponents.  Polynomials map
monomials to nonzero integer coefficients.  Orders expose a sort ``key`` so
that the order-maximal monomial is simply ``max(..., key=order.key)``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

NVARS = 4

Monomial = tuple  # tuple[int, int, int, int]

ONE: Monomial = (0,) * NVARS


def monomial(*exps: int) -> Monomial:
    if len(exps) == 1 and not isinstance(exps[0], int):
        exps = tuple(exps[0])
    if len(exps) != NVARS or any(e < 0 for e in exps):
        raise ValueError(f"bad exponent vector {exps!r}")
    return tuple(int(e) for e in exps)


def var(i: int, e: int = 1) -> Monomial:
    """The monomial x_i^e (variables are 1-based)."""
    m = [0] * NVARS
    m[i - 1] = e
    return tuple(m)


def degree(m: Monomial) -> int:
    return sum(m)


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(m1, m2))


def mono_div(m1: Monomial, m2: Monomial) -> Monomial:
    """m1 / m2; the caller guarantees divisibility."""
    return tuple(a - b for a, b in zip(m1, m2))


def divides(m1: Monomial, m2: Monomial) -> bool:
    return all(a <= b for a, b in zip(m1, m2))


def mono_lcm(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(m1, m2))


def mono_gcd(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(min(a, b) for a, b in zip(m1, m2))


def coprime(m1: Monomial, m2: Monomial) -> bool:
    return all(a == 0 or b == 0 for a, b in zip(m1, m2))


# ---------------------------------------------------------------------------
# orders
# ---------------------------------------------------------------------------

LOCAL = "local-negdegrevlex"
GLOBAL = "global-degrevlex"


@dataclass(frozen=True)
class MonomialOrder:
    """Degree reverse lexicographic order, local or global.

    ``priority`` lists the variables from greatest to least, e.g. ``(3, 4, 2, 1)``
    means x3 > x4 > x2 > x1.  The local kind prefers *lower* total degree.
    """

    kind: str = LOCAL
    priority: tuple = (4, 3, 2, 1)

    def __post_init__(self):
        if self.kind not in (LOCAL, GLOBAL):
            raise ValueError(f"unknown order kind {self.kind!r}")
        prio = tuple(int(i) for i in self.priority)
        if sorted(prio) != list(range(1, NVARS + 1)):
            raise ValueError(f"priority {self.priority!r} is not a permutation of 1..{NVARS}")
        object.__setattr__(self, "priority", prio)
        # exponents read from least to greatest variable
        object.__setattr__(self, "_rev", tuple(i - 1 for i in reversed(prio)))

    @classmethod
    def local(cls, priority=(4, 3, 2, 1)) -> "MonomialOrder":
        return cls(LOCAL, tuple(priority))

    @classmethod
    def degrevlex(cls, priority=(4, 3, 2, 1)) -> "MonomialOrder":
        return cls(GLOBAL, tuple(priority))

    @property
    def is_local(self) -> bool:
        return self.kind == LOCAL

    def to_global(self) -> "MonomialOrder":
        return MonomialOrder(GLOBAL, self.priority)

    def to_local(self) -> "MonomialOrder":
        return MonomialOrder(LOCAL, self.priority)

    def key(self, m: Monomial) -> tuple:
        # revlex: at the last differing position (in priority order) the
        # smaller exponent wins, i.e. compare -e lexicographically from the end
        d = sum(m)
        tail = tuple(-m[i] for i in self._rev)
        return ((-d if self.kind == LOCAL else d),) + tail

    def __str__(self):
        names = ">".join(f"x{i}" for i in self.priority)
        return f"{'negdegrevlex' if self.is_local else 'degrevlex'}({names})"


def compare(order: MonomialOrder, m1: Monomial, m2: Monomial) -> int:
    """Return 1, 0 or -1 as m1 is greater than, equal to or less than m2."""
    k1, k2 = order.key(m1), order.key(m2)
    return (k1 > k2) - (k1 < k2)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


class Polynomial:
    """Sparse integer polynomial in x1..x4.  Immutable by convention."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | Iterable = ()):
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        acc: dict = {}
        for m, c in items:
            m = tuple(m)
            if len(m) != NVARS:
                raise ValueError(f"monomial {m!r} does not have {NVARS} exponents")
            acc[m] = acc.get(m, 0) + int(c)
        self.terms = {m: c for m, c in acc.items() if c}
        self._hash = None

    @classmethod
    def monomial(cls, m: Monomial, coeff: int = 1) -> "Polynomial":
        return cls({tuple(m): coeff})

    @classmethod
    def binomial(cls, plus: Monomial, minus: Monomial) -> "Polynomial":
        return cls([(tuple(plus), 1), (tuple(minus), -1)])

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls({ONE: c})

    # -- basic protocol -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple]:
        return iter(self.terms.items())

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"

    def __str__(self):
        return format_polynomial(self)

    # -- arithmetic -----------------------------------------------------------

    def __neg__(self):
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial({m: c * other for m, c in self.terms.items()})
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def shift(self, m: Monomial, coeff: int = 1) -> "Polynomial":
        """coeff * x^m * self."""
        return Polynomial({mono_mul(t, m): c * coeff for t, c in self.terms.items()})

    # -- structure ------------------------------------------------------------

    def monomials(self) -> list:
        return list(self.terms)

    def coefficient(self, m: Monomial) -> int:
        return self.terms.get(tuple(m), 0)

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(sum(m) for m in self.terms)

    def min_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return min(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = math.gcd(g, c)
        return g

    def primitive(self, order: MonomialOrder | None = None) -> "Polynomial":
        """Divide out the content; with an order, also make the leading coefficient positive."""
        if not self.terms:
            return self
        g = self.content()
        if order is not None and self.terms[leading_monomial(order, self)] < 0:
            g = -g
        if g == 1:
            return self
        return Polynomial({m: c // g for m, c in self.terms.items()})


def leading_monomial(order: MonomialOrder, f: Polynomial) -> Monomial:
    if not f.terms:
        raise ValueError("zero polynomial has no leading monomial")
    return max(f.terms, key=order.key)


def leading_coefficient(order: MonomialOrder, f: Polynomial) -> int:
    return f.terms[leading_monomial(order, f)]


def least_homogeneous_summand(f: Polynomial) -> Polynomial:
    """The sum of the terms of f of minimal total degree."""
    if not f.terms:
        raise ValueError("zero polynomial has no homogeneous summands")
    d = f.min_degree()
    return Polynomial({m: c for m, c in f.terms.items() if sum(m) == d})


def ecart(order: MonomialOrder, f: Polynomial) -> int:
    """deg(f) - deg(LM(f))."""
    if not f.terms:
        raise ValueError("ecart of the zero polynomial is undefined")
    return f.degree() - sum(leading_monomial(order, f))


# ---------------------------------------------------------------------------
# binomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Binomial:
    """x^plus - x^minus."""

    plus: Monomial
    minus: Monomial

    def __post_init__(self):
        object.__setattr__(self, "plus", monomial(self.plus))
        object.__setattr__(self, "minus", monomial(self.minus))
        if self.plus == self.minus:
            raise ValueError("a binomial needs two distinct monomials")

    @classmethod
    def from_polynomial(cls, f: Polynomial) -> "Binomial":
        items = sorted(f.terms.items(), key=lambda mc: -mc[1])
        if len(items) != 2 or sorted(c for _, c in items) != [-1, 1]:
            raise ValueError(f"{f} is not a difference of two monomials")
        return cls(items[0][0], items[1][0])

    def polynomial(self) -> Polynomial:
        return Polynomial.binomial(self.plus, self.minus)

    def vector(self) -> tuple:
        """Exponent difference plus - minus."""
        return tuple(a - b for a, b in zip(self.plus, self.minus))

    def oriented(self, order: MonomialOrder) -> "Binomial":
        """Same binomial up to sign, with the order-leading monomial first."""
        if compare(order, self.plus, self.minus) < 0:
            return Binomial(self.minus, self.plus)
        return self

    def in_lattice(self, n: Sequence[int]) -> bool:
        return sum(v * k for v, k in zip(self.vector(), n)) == 0

    def __str__(self):
        return format_polynomial(self.polynomial())


def lattice_vector(f: Polynomial) -> tuple:
    """Exponent difference of a two-term polynomial (positive term minus negative term)."""
    return Binomial.from_polynomial(f).vector()


def in_kernel_lattice(f: Polynomial, n: Sequence[int]) -> bool:
    """True if every pair of terms of f has the same n-weighted degree.

    For a binomial x^u - x^v this is exactly (u - v) . n == 0.
    """
    weights = {sum(e * k for e, k in zip(m, n)) for m in f.terms}
    return len(weights) <= 1


# ---------------------------------------------------------------------------
# text format: x1^5-x2^3, 3*x1*x2^2, -x4
# ---------------------------------------------------------------------------


def format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


def _term_key(m):
    # higher degree first, then lex in x1..x4
    return (-sum(m), tuple(-e for e in m))


def format_polynomial(f: Polynomial, order: MonomialOrder | None = None) -> str:
    if not f.terms:
        return "0"
    if order is None:
        mons = sorted(f.terms, key=_term_key)
        # show the positive term first for binomials, as in x1^5-x2^3
        mons.sort(key=lambda m: f.terms[m] < 0)
    else:
        mons = sorted(f.terms, key=order.key, reverse=True)
    out = []
    for k, m in enumerate(mons):
        c = f.terms[m]
        sign = "-" if c < 0 else ("+" if k else "")
        a = abs(c)
        body = format_monomial(m)
        if body == "1":
            text = str(a)
        elif a == 1:
            text = body
        else:
            text = f"{a}*{body}"
        out.append(sign + text)
    return "".join(out)


_TERM_RE = re.compile(r"([+-]?)([^+-]+)")
_FACTOR_RE = re.compile(r"^(?:x([1-4])(?:\^(\d+))?|(\d+))$")


def parse_polynomial(text: str) -> Polynomial:
    """Parse the x1^5-x2^3 grammar (``*`` between factors, integer coefficients)."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty polynomial")
    s = s.replace("**", "^")
    pos = 0
    terms = []
    for match in _TERM_RE.finditer(s):
        if match.start() != pos:
            raise ValueError(f"cannot parse {text!r}")
        pos = match.end()
        sign = -1 if match.group(1) == "-" else 1
        coeff = sign
        exps = [0] * NVARS
        for factor in match.group(2).split("*"):
            fm = _FACTOR_RE.match(factor)
            if fm is None:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            if fm.group(3) is not None:
                coeff *= int(fm.group(3))
            else:
                exps[int(fm.group(1)) - 1] += int(fm.group(2) or 1)
        terms.append((tuple(exps), coeff))
    if pos != len(s):
        raise ValueError(f"cannot parse {text!r}")
    return Polynomial(terms)


def parse_monomial(text: str) -> Monomial:
    f = parse_polynomial(text)
    if len(f) != 1 or next(iter(f.terms.values())) != 1:
        raise ValueError(f"{text!r} is not a monic monomial")
    return next(iter(f.terms))
