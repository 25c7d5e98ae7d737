"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a map from exponent tuples to nonzero Fractions, together with
the tuple of generator names the exponents refer to.  Generators are kept in a
fixed global order and unused generators are dropped, so two equal polynomials
always have identical internal data and compare equal term by term.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .rat import as_rat, format_rat

_KNOWN = (
    ["a", "b", "D", "t", "u", "v", "lam", "mu", "x", "y", "z", "X", "Y"]
    + [f"x{i}" for i in range(1, 7)]
    + [f"X{i}" for i in range(1, 7)]
    + ["alpha"]
)
_RANK = {name: i for i, name in enumerate(_KNOWN)}


def _key(name: str):
    return (0, _RANK[name], "") if name in _RANK else (1, 0, name)


class UnboundVariableError(LookupError):
    def __init__(self, name: str):
        super().__init__(f"variable {name!r} is not bound")
        self.name = name


Coercible = Union["MPoly", int, Fraction]


class MPoly:
    __slots__ = ("gens", "terms", "_hash")

    def __init__(self, gens: Iterable[str] = (), terms: Mapping[tuple, Fraction] | None = None):
        gens = tuple(gens)
        if len(set(gens)) != len(gens):
            raise ValueError(f"repeated generator in {gens}")
        clean: dict[tuple, Fraction] = {}
        for exps, c in (terms or {}).items():
            if len(exps) != len(gens):
                raise ValueError("exponent tuple does not match generators")
            c = as_rat(c)
            if c:
                clean[tuple(exps)] = clean.get(tuple(exps), Fraction(0)) + c
                if not clean[tuple(exps)]:
                    del clean[tuple(exps)]
        # canonical form: drop unused generators, sort the rest
        used = [i for i in range(len(gens)) if any(e[i] for e in clean)]
        used.sort(key=lambda i: _key(gens[i]))
        self.gens = tuple(gens[i] for i in used)
        self.terms = {tuple(e[i] for i in used): c for e, c in clean.items()}
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def var(cls, name: str) -> "MPoly":
        return cls((name,), {(1,): Fraction(1)})

    @classmethod
    def const(cls, c) -> "MPoly":
        return cls((), {(): as_rat(c)})

    @classmethod
    def monomial(cls, powers: Mapping[str, int], coeff=1) -> "MPoly":
        names = tuple(powers)
        return cls(names, {tuple(powers[n] for n in names): as_rat(coeff)})

    @classmethod
    def coerce(cls, value: Coercible) -> "MPoly":
        return value if isinstance(value, MPoly) else cls.const(value)

    # -- structure ------------------------------------------------------------

    @property
    def variables(self) -> tuple[str, ...]:
        return self.gens

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.gens

    def constant_value(self) -> Fraction:
        if self.gens:
            raise ValueError(f"{self} is not constant")
        return self.terms.get((), Fraction(0))

    def items(self) -> Iterator[tuple[dict[str, int], Fraction]]:
        for exps, c in self.terms.items():
            yield {g: e for g, e in zip(self.gens, exps) if e}, c

    def coefficient(self, powers: Mapping[str, int] | None = None) -> Fraction:
        powers = dict(powers or {})
        if any(n not in self.gens for n, e in powers.items() if e):
            return Fraction(0)
        exps = tuple(powers.get(g, 0) for g in self.gens)
        return self.terms.get(exps, Fraction(0))

    def degree(self, name: str | None = None) -> int:
        """Total degree, or degree in one variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if name is None:
            return max(sum(e) for e in self.terms)
        if name not in self.gens:
            return 0
        i = self.gens.index(name)
        return max(e[i] for e in self.terms)

    def is_homogeneous(self, names: Iterable[str]) -> bool:
        idx = [self.gens.index(n) for n in names if n in self.gens]
        return len({sum(e[i] for i in idx) for e in self.terms}) <= 1

    def collect(self, names: Iterable[str]) -> dict[tuple[int, ...], "MPoly"]:
        """Split into coefficients (polynomials in the other variables) of
        monomials in ``names``; keys are exponent tuples in the order given."""
        names = tuple(names)
        idx = [self.gens.index(n) if n in self.gens else None for n in names]
        rest = [i for i in range(len(self.gens)) if self.gens[i] not in names]
        rest_gens = tuple(self.gens[i] for i in rest)
        buckets: dict[tuple, dict] = {}
        for exps, c in self.terms.items():
            key = tuple(0 if i is None else exps[i] for i in idx)
            buckets.setdefault(key, {})[tuple(exps[i] for i in rest)] = c
        return {k: MPoly(rest_gens, t) for k, t in buckets.items()}

    # -- arithmetic -----------------------------------------------------------

    def _aligned(self, other: "MPoly"):
        if self.gens == other.gens:
            return self.gens, self.terms, other.terms
        gens = tuple(sorted(set(self.gens) | set(other.gens), key=_key))
        return gens, _lift(self, gens), _lift(other, gens)

    def __add__(self, other: Coercible) -> "MPoly":
        try:
            other = MPoly.coerce(other)
        except TypeError:
            return NotImplemented
        gens, t1, t2 = self._aligned(other)
        out = dict(t1)
        for e, c in t2.items():
            out[e] = out.get(e, 0) + c
        return MPoly(gens, out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly(self.gens, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Coercible) -> "MPoly":
        try:
            other = MPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coercible) -> "MPoly":
        return MPoly.coerce(other) - self

    def __mul__(self, other: Coercible) -> "MPoly":
        if not isinstance(other, MPoly):
            try:
                c = as_rat(other)
            except TypeError:
                return NotImplemented
            return MPoly(self.gens, {e: v * c for e, v in self.terms.items()})
        gens, t1, t2 = self._aligned(other)
        out: dict[tuple, Fraction] = {}
        for e1, c1 in t1.items():
            for e2, c2 in t2.items():
                e = tuple(i + j for i, j in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(gens, out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if not other.is_constant():
                raise TypeError("division by a non-constant polynomial")
            other = other.constant_value()
        c = as_rat(other)
        if c == 0:
            raise ZeroDivisionError("polynomial division by zero")
        return self * (1 / c)

    def __pow__(self, n: int) -> "MPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result, base = MPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self.gens == other.gens and self.terms == other.terms
        try:
            return self == MPoly.const(as_rat(other))
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.gens, frozenset(self.terms.items())))
        return self._hash

    # -- calculus and substitution --------------------------------------------

    def diff(self, name: str) -> "MPoly":
        if name not in self.gens:
            return MPoly()
        i = self.gens.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                out[e[:i] + (e[i] - 1,) + e[i + 1 :]] = c * e[i]
        return MPoly(self.gens, out)

    def evaluate(self, bindings: Mapping[str, object]) -> Fraction:
        """Exact value with every variable bound to a rational."""
        for g in self.gens:
            if g not in bindings:
                raise UnboundVariableError(g)
        vals = [as_rat(bindings[g]) for g in self.gens]
        total = Fraction(0)
        for exps, c in self.terms.items():
            term = c
            for v, e in zip(vals, exps):
                if e:
                    term *= v**e
            total += term
        return total

    def subs(self, mapping: Mapping[str, Coercible]) -> "MPoly":
        """Substitute polynomials (or scalars) for some of the variables."""
        targets = [g for g in self.gens if g in mapping]
        if not targets:
            return self
        keep = [i for i, g in enumerate(self.gens) if g not in mapping]
        keep_gens = tuple(self.gens[i] for i in keep)
        pos = {g: self.gens.index(g) for g in targets}
        images = {g: MPoly.coerce(mapping[g]) for g in targets}
        powers: dict[tuple[str, int], MPoly] = {}

        def power(g: str, e: int) -> MPoly:
            if (g, e) not in powers:
                powers[(g, e)] = images[g] if e == 1 else power(g, e - 1) * images[g]
            return powers[(g, e)]

        # group terms by their exponents in the substituted variables
        groups: dict[tuple, dict] = {}
        for exps, c in self.terms.items():
            key = tuple(exps[pos[g]] for g in targets)
            groups.setdefault(key, {})[tuple(exps[i] for i in keep)] = c
        result = MPoly()
        for key, rest in groups.items():
            part = MPoly(keep_gens, rest)
            for g, e in zip(targets, key):
                if e:
                    part = part * power(g, e)
            result = result + part
        return result

    def rename(self, mapping: Mapping[str, str]) -> "MPoly":
        return MPoly(tuple(mapping.get(g, g) for g in self.gens), self.terms)

    # -- text -----------------------------------------------------------------

    def _sorted_terms(self):
        return sorted(self.terms.items(), key=lambda ec: (-sum(ec[0]), [-x for x in ec[0]]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self._sorted_terms():
            mono = "*".join(
                g if e == 1 else f"{g}^{e}" for g, e in zip(self.gens, exps) if e
            )
            mag = format_rat(abs(c))
            if not mono:
                body = mag
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"MPoly({str(self)!r})"


def _lift(p: MPoly, gens: tuple[str, ...]) -> dict[tuple, Fraction]:
    idx = [gens.index(g) for g in p.gens]
    n = len(gens)
    out = {}
    for e, c in p.terms.items():
        full = [0] * n
        for i, x in zip(idx, e):
            full[i] = x
        out[tuple(full)] = c
    return out


def symbols(names: str) -> tuple[MPoly, ...]:
    """``a, b = symbols("a b")``"""
    return tuple(MPoly.var(n) for n in names.split())


def reduce_mod_square(p: MPoly, y: str, rhs: MPoly) -> MPoly:
    """Normal form of p modulo y^2 - rhs, with y-degree at most 1.

    rhs must not involve y.
    """
    rhs = MPoly.coerce(rhs)
    if y in rhs.gens:
        raise ValueError(f"right-hand side involves {y}")
    if y not in p.gens:
        return p
    parts = p.collect([y])
    rhs_pow = {0: MPoly.const(1)}
    result = MPoly()
    yv = MPoly.var(y)
    for (k,), coeff in parts.items():
        half, odd = divmod(k, 2)
        if half not in rhs_pow:
            for j in range(max(rhs_pow) + 1, half + 1):
                rhs_pow[j] = rhs_pow[j - 1] * rhs
        term = coeff * rhs_pow[half]
        result = result + (term * yv if odd else term)
    return result


def reduce_mod_weierstrass(p: MPoly, rhs: MPoly, x: str = "x", y: str = "y") -> MPoly:
    """Reduce p(x, y) modulo y^2 = rhs(x)."""
    rhs = MPoly.coerce(rhs)
    if any(g != x for g in rhs.gens if g not in ("a", "b", "D")):
        raise ValueError("Weierstrass right-hand side must be a polynomial in x")
    return reduce_mod_square(p, y, rhs)
