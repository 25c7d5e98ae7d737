"""Nine-quadric models in P^5: the kernel computation from the 2-covering,
the twist by the inverse flex matrix, and the tidied forms s_1..s_9."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ..elliptic.curve import Curve
from ..errors import DegenerateError
from ..exact.cubic import CubicAlgElem, det3
from ..exact.linalg import QMatrix, rowspace
from ..exact.mpoly import MPoly, reduce_mod_square
from ..exact.rat import as_rat, format_rat

# degree-2 monomials x_i x_j (i <= j), 0-based
MONOMIALS: tuple[tuple[int, int], ...] = tuple((i, j) for i in range(6) for j in range(i, 6))
_INDEX = {m: k for k, m in enumerate(MONOMIALS)}

# the closed-form q_i vanish on the A-image after x_i -> PRINTED_Q_SCALING[i] * A_i
PRINTED_Q_SCALING = tuple(Fraction(c) for c in ("1/27", "1/3", "1", "1/27", "1/3", "1"))


@dataclass(frozen=True)
class ProjPoint6:
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        c = tuple(as_rat(x) for x in self.coords)
        if len(c) != 6:
            raise ValueError("a point of P^5 needs six coordinates")
        if not any(c):
            raise DegenerateError("(0:...:0) is not a projective point")
        object.__setattr__(self, "coords", c)

    @classmethod
    def of(cls, *xs) -> "ProjPoint6":
        return cls(tuple(xs))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def scaled(self, c) -> "ProjPoint6":
        c = as_rat(c)
        return ProjPoint6(tuple(c * x for x in self.coords))

    def normalized(self) -> "ProjPoint6":
        """Scale so the last nonzero coordinate is 1."""
        last = next(x for x in reversed(self.coords) if x)
        return self.scaled(1 / last)

    def same_point(self, other: "ProjPoint6") -> bool:
        return self.normalized() == other.normalized()

    def __str__(self) -> str:
        return "(" + " : ".join(format_rat(x) for x in self.coords) + ")"


@dataclass(frozen=True)
class QuadricSystem:
    """Quadratic forms in x1..x6 as coefficient rows over MONOMIALS."""

    forms: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(as_rat(c) for c in f) for f in self.forms)
        if any(len(r) != len(MONOMIALS) for r in rows):
            raise ValueError("each quadric needs 21 coefficients")
        object.__setattr__(self, "forms", rows)

    @classmethod
    def from_mpolys(cls, polys: Iterable[MPoly], prefix: str = "x") -> "QuadricSystem":
        rows = []
        for p in polys:
            row = [Fraction(0)] * len(MONOMIALS)
            for powers, c in p.items():
                idx = []
                for name, e in powers.items():
                    if not name.startswith(prefix):
                        raise ValueError(f"unexpected variable {name} in a quadric")
                    idx += [int(name[len(prefix):]) - 1] * e
                if len(idx) != 2:
                    raise ValueError(f"{p} is not a quadratic form")
                row[_INDEX[tuple(sorted(idx))]] = c
            rows.append(tuple(row))
        return cls(tuple(rows))

    def __len__(self) -> int:
        return len(self.forms)

    def to_mpolys(self, prefix: str = "x") -> list[MPoly]:
        gens = tuple(f"{prefix}{i}" for i in range(1, 7))
        out = []
        for row in self.forms:
            terms = {}
            for (i, j), c in zip(MONOMIALS, row):
                e = [0] * 6
                e[i] += 1
                e[j] += 1
                terms[tuple(e)] = c
            out.append(MPoly(gens, terms))
        return out

    def evaluate(self, point: Sequence) -> list[Fraction]:
        x = [as_rat(c) for c in point]
        return [sum((c * x[i] * x[j] for (i, j), c in zip(MONOMIALS, row) if c), Fraction(0))
                for row in self.forms]

    def vanishes_at(self, point: Sequence) -> bool:
        return not any(self.evaluate(point))

    def matrix(self) -> QMatrix:
        return QMatrix.from_rows(self.forms, len(MONOMIALS))

    def rank(self) -> int:
        return rowspace(self.matrix())[0]

    def echelon(self) -> "QuadricSystem":
        return QuadricSystem(tuple(tuple(r) for r in rowspace(self.matrix())[1]))

    def same_span(self, other: "QuadricSystem") -> bool:
        return self.echelon().forms == other.echelon().forms

    def substituted(self, scales: Sequence) -> "QuadricSystem":
        """Forms in new coordinates with x_i = scales[i] * x_i'."""
        s = [as_rat(c) for c in scales]
        return QuadricSystem(tuple(
            tuple(c * s[i] * s[j] for (i, j), c in zip(MONOMIALS, row)) for row in self.forms
        ))

    def __str__(self) -> str:
        return "\n".join(f"q{k} = {p}" for k, p in enumerate(self.to_mpolys(), 1))

    def to_list(self) -> list[list[str]]:
        return [[format_rat(c) for c in row] for row in self.forms]


# -- the 2-covering embedded in P^5 ---------------------------------------------

def covering_U(E: Curve) -> MPoly:
    a, b, D = E.a, E.b, E.discriminant
    lam, mu = MPoly.var("lam"), MPoly.var("mu")
    inner = (a * lam**4 + 6 * b * lam**3 * mu - 2 * a * a * lam**2 * mu**2
             - 2 * a * b * lam * mu**3 + (-(a**3) / 3 - 3 * b * b) * mu**4)
    return -3 * D * inner


def hessian_H(U: MPoly) -> MPoly:
    Ull, Ulm, Umm = U.diff("lam").diff("lam"), U.diff("lam").diff("mu"), U.diff("mu").diff("mu")
    return (Ull * Umm - Ulm * Ulm) / 3


def build_A23(E: Curve) -> tuple[list[list[MPoly]], MPoly, MPoly]:
    """The 2x3 matrix of forms embedding -3y^2 = D*inner into P^5, with U and H."""
    U = covering_U(E)
    H = hessian_H(U)
    lam, mu, y = MPoly.var("lam"), MPoly.var("mu"), MPoly.var("y")
    A = [
        [-9 * H.diff("mu"), -3 * U.diff("mu"), lam * y],
        [9 * H.diff("lam"), 3 * U.diff("lam"), mu * y],
    ]
    return A, U, H


def image_relations(A: list[list[MPoly]], U: MPoly) -> list[MPoly]:
    """Each degree-2 monomial in the A-entries, reduced modulo y^2 - U."""
    flat = [A[0][0], A[0][1], A[0][2], A[1][0], A[1][1], A[1][2]]
    return [reduce_mod_square(flat[i] * flat[j], "y", U) for i, j in MONOMIALS]


def vanishes_on_image(form: Sequence, A: list[list[MPoly]], U: MPoly) -> bool:
    flat = [A[0][0], A[0][1], A[0][2], A[1][0], A[1][1], A[1][2]]
    total = MPoly()
    for (i, j), c in zip(MONOMIALS, form):
        if c:
            total = total + c * flat[i] * flat[j]
    return reduce_mod_square(total, "y", U).is_zero()


def derive_quadrics(E: Curve) -> QuadricSystem:
    """The nine quadrics cutting out the image of the A-embedding (kernel basis)."""
    A, U, _ = build_A23(E)
    reduced = image_relations(A, U)
    keys = sorted({tuple(sorted(pw.items())) for p in reduced for pw, _ in p.items()})
    col = {k: n for n, k in enumerate(keys)}
    rows = []
    for p in reduced:
        row = [Fraction(0)] * len(keys)
        for pw, c in p.items():
            row[col[tuple(sorted(pw.items()))]] = c
        rows.append(row)
    kernel = QMatrix.from_rows(rows, len(keys)).transpose().nullspace()
    if len(kernel) != 9:
        raise DegenerateError(f"kernel has dimension {len(kernel)}, expected 9")
    system = QuadricSystem(tuple(tuple(v) for v in kernel)).echelon()
    for form in system.forms:
        if not vanishes_on_image(form, A, U):
            raise DegenerateError("kernel quadric does not vanish on the embedded curve")
    return system


# -- closed forms ----------------------------------------------------------------

def s_forms(a, b, D, x: Sequence) -> list:
    """s_1..s_9 evaluated on any ring elements x1..x6."""
    x1, x2, x3, x4, x5, x6 = x
    return [
        (-6 * x1 * x5 + 24 * a * x1 * x6 - 6 * x2**2 + 24 * a * x2 * x3 - 6 * x2 * x4
         + 24 * a * x3 * x4 + 72 * b * x4 * x6 + 2 * a * x5**2 + 8 * a**2 * x5 * x6 + D * x6**2),
        (-6 * x1 * x3 + x2 * x5 + 2 * a * x2 * x6 - 36 * b * x3**2 + 2 * a * x3 * x5
         + 16 * a**2 * x3 * x6 + x4 * x5 + 2 * a * x4 * x6 + 12 * a * b * x6**2),
        (12 * a * x1 * x3 + 18 * b * x1 * x6 + 18 * b * x3 * x4 - 2 * a * x4 * x5
         - 4 * a**2 * x4 * x6 + 3 * b * x5**2),
        (-12 * a * x2 * x3 - 18 * b * x2 * x6 - 18 * b * x3 * x5 - 3 * x4**2 - a * x5**2
         + 4 * a**2 * x5 * x6),
        (3 * x2**2 - 48 * a**2 * x3**2 - 144 * a * b * x3 * x6 - 36 * b * x4 * x6 + a * x5**2
         - 8 * a**2 * x5 * x6 + 16 * a**3 * x6**2),
        (-3 * x1 * x4 + 18 * b * x2 * x3 - a * x2 * x5 - 4 * a**2 * x2 * x6 - 4 * a**2 * x3 * x5
         - 6 * a * b * x5 * x6),
        (-108 * b * x1 * x3 + 6 * a * x2**2 - 24 * a**2 * x2 * x3 + 18 * b * x2 * x5
         - 36 * a * b * x4 * x6 - 2 * a**2 * x5**2 - 8 * a**3 * x5 * x6 - a * D * x6**2),
        (3 * x1 * x2 - 72 * a * b * x3**2 - 216 * b**2 * x3 * x6 + a * x4 * x5 + 8 * a**2 * x4 * x6
         - 12 * a * b * x5 * x6 + 24 * a**2 * b * x6**2),
        (36 * x1**2 + 12 * a * x2**2 + 12 * a * x4**2 + 4 * a**2 * x5**2 + D * x5 * x6),
    ]


def q_forms_printed(a, b, D, x: Sequence) -> list:
    """The intermediate quadrics q_1..q_9 in closed form.

    Two garbled monomials are read as x1*x5 and x3^2.
    """
    x1, x2, x3, x4, x5, x6 = x
    return [
        -x1 * x4 + 8 * a * D**3 * x2 * x5 - 3 * D**5 * x3 * x6 + 12 * b * D**3 * x5**2,
        (x1 * x5 + 72 * b * D * x2**2 + x2 * x4 - 32 * a**2 * D * x2 * x5 + 24 * a * D**3 * x3 * x6
         - 24 * a * b * D * x5**2 + 36 * b * D**3 * x6**2),
        (-72 * b * D * x1 * x5 - 72 * b * D * x2 * x4 - 576 * a**2 * D**4 * x3**2
         - 1728 * a * b * D**4 * x3 * x6 - x4**2 + 32 * a**2 * D * x4 * x5 - 8 * a * D**3 * x5**2
         - 1296 * b**2 * D**4 * x6**2),
        -24 * D * a * x2 * x3 - 36 * b * D * x2 * x6 - 36 * b * D * x3 * x5 + x4 * x6 + 8 * a**2 * D * x5 * x6,
        -3 * x1**2 + 9 * D**5 * x3**2 - a * x4**2 - D**2 * x4 * x5 + 3 * a * D**5 * x6**2,
        (24 * a * D * x2**2 + 72 * b * D * x2 * x5 + 18 * D**3 * x3**2 - x4 * x5
         - 8 * a**2 * D * x5**2 + 6 * a * D**3 * x6**2),
        (x1 * x6 + 72 * b * D * x2 * x3 - 16 * a**2 * D * x2 * x6 + x3 * x4 - 16 * a**2 * D * x3 * x5
         - 24 * a * b * D * x5 * x6),
        (-3 * x1 * x2 + 36 * D**3 * a * x3**2 + 108 * b * D**3 * x3 * x6 - a * x4 * x5
         + D**2 * x5**2 / 2 - 12 * a**2 * D**3 * x6**2),
        -3 * x1 * x3 - a * x4 * x6 + D**2 * x5 * x6 / 2,
    ]


def _xs() -> list[MPoly]:
    return [MPoly.var(f"x{i}") for i in range(1, 7)]


def quadrics_s(E: Curve) -> QuadricSystem:
    return QuadricSystem.from_mpolys(s_forms(E.a, E.b, E.discriminant, _xs()))


def quadrics_q_printed(E: Curve) -> QuadricSystem:
    return QuadricSystem.from_mpolys(q_forms_printed(E.a, E.b, E.discriminant, _xs()))


# -- flex twist --------------------------------------------------------------------

@dataclass(frozen=True)
class FlexMatrixInverse:
    entries: tuple[tuple[CubicAlgElem, ...], ...]
    a: Fraction
    b: Fraction

    def __getitem__(self, ij) -> CubicAlgElem:
        i, j = ij
        return self.entries[i][j]

    def det(self) -> CubicAlgElem:
        return det3(self.entries)

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries)


def flex_inverse(E: Curve) -> FlexMatrixInverse:
    a, b, D = E.a, E.b, E.discriminant

    def el(c0=0, c1=0, c2=0):
        return CubicAlgElem(c0, c1, c2, a, b)

    D2 = D * D
    entries = (
        (el(-972 * b * D2, -648 * D2 * a), el(), el(1)),
        (el(-216 * a * a * D2, 972 * b * D2), el(), el(0, 1)),
        (el(), el(-6 * a * D, 0, -18 * D), el()),
    )
    return FlexMatrixInverse(entries, a, b)


def twist_by_flex(E: Curve, q: QuadricSystem) -> tuple[QuadricSystem, int]:
    """Substitute x = X * g^{-1} into each form and split over 1, alpha, alpha^2.

    Returns the 3*len(q) rational quadrics in X1..X6 and the rank of their span.
    """
    g = flex_inverse(E)
    zero = CubicAlgElem(0, 0, 0, E.a, E.b)
    # x_{r,c} = sum_k X_{r,k} g[k][c]: a linear form in X with algebra coefficients
    linear = []
    for r in range(2):
        for c in range(3):
            form = [zero] * 6
            for k in range(3):
                form[3 * r + k] = g[k, c]
            linear.append(form)
    out = []
    for row in q.forms:
        acc = [zero] * len(MONOMIALS)
        for (i, j), coeff in zip(MONOMIALS, row):
            if not coeff:
                continue
            for k, lk in enumerate(linear[i]):
                if lk.is_zero():
                    continue
                for l, ll in enumerate(linear[j]):
                    if ll.is_zero():
                        continue
                    m = _INDEX[(min(k, l), max(k, l))]
                    acc[m] = acc[m] + lk * ll * coeff
        for d in range(3):
            out.append(tuple(e.coords[d] for e in acc))
    system = QuadricSystem(tuple(out))
    return system, system.rank()
