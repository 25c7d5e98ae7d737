"""Verification suites run by ``congruent6 verify``.

Each suite returns a list of :class:`Check`; a suite passes when every check
does. Sample parameters come from a seeded RNG so runs are reproducible.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ..congruence import (
    PROPERTY_BOUND,
    ap_mod_n_check,
    example49_point,
    example410_point,
    mod2_type_check,
    reverse6_pipeline,
)
from ..elliptic import (
    Curve,
    Quartic,
    invariants_of,
    is_Q_isomorphic,
    jacobian_of_quartic,
    locally_soluble_at,
)
from ..errors import DegenerateError, SingularCurveError
from ..exact import format_rat, symbols
from ..exact.rat import is_square
from ..elliptic.curve import discriminant_of
from ..families import (
    disc_identity_suite,
    family2,
    family2_disc_residual,
    family3,
    family3_disc_residual,
)
from ..models import (
    canonical_model,
    derive_quadrics,
    jacobian_consistency,
    quadrics_s,
    twist_by_flex,
)
from ..models.quadrics import ProjPoint6
from ..morphisms import (
    birational_coordinates,
    birational_model,
    isogeny_f,
    isogeny_identity_residual,
    iso_g,
    v_function,
)

SEED = 20240601
SAMPLE_CURVES = ((-6, 8), (1, 1), (0, 1), (1, 0), (-2, 5))


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail,
                "seconds": round(self.seconds, 3)}


@dataclass
class SuiteResult:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "passed": self.passed,
                "checks": [c.to_dict() for c in self.checks]}


def _timed(name: str, fn: Callable[[], tuple[bool, str]]) -> Check:
    start = time.perf_counter()
    ok, detail = fn()
    return Check(name, bool(ok), detail, time.perf_counter() - start)


def random_curves(rng: random.Random, count: int, height: int = 9) -> list[Curve]:
    out = []
    while len(out) < count:
        a = Fraction(rng.randint(-height, height), rng.randint(1, 3))
        b = Fraction(rng.randint(-height, height), rng.randint(1, 3))
        try:
            out.append(Curve(a, b))
        except SingularCurveError:
            continue
    return out


def random_pairs(rng: random.Random, count: int, height: int = 10) -> list[tuple[int, int]]:
    out = []
    while len(out) < count:
        u, v = rng.randint(-height, height), rng.randint(-height, height)
        if (u, v) != (0, 0):
            out.append((u, v))
    return out


def random_nonzero(rng: random.Random, count: int, height: int = 20) -> list[Fraction]:
    out = []
    while len(out) < count:
        t = Fraction(rng.randint(-height, height), rng.randint(1, height))
        if t:
            out.append(t)
    return out


# -- identities -----------------------------------------------------------------

def _section_check() -> tuple[bool, str]:
    curves = random_curves(random.Random(SEED), 20)
    bad = [str(E) for E in curves if family3(E, 1, 0, "direct") != E]
    return not bad, f"{len(curves) - len(bad)}/{len(curves)} curves fixed by (1:0)"


def _isogeny_certificates() -> tuple[bool, str]:
    f, g = isogeny_f(), iso_g()
    parts = {
        "identity": isogeny_identity_residual().is_zero(),
        "f": f.certificate(),
        "g": g.certificate(),
        "v=(g.f)_1": f.then(g).same_component(0, *v_function()),
    }
    return all(parts.values()), ", ".join(f"{k}:{'ok' if v else 'FAIL'}" for k, v in parts.items())


def suite_identities() -> list[Check]:
    return [
        _timed("family2 discriminant identity",
               lambda: (family2_disc_residual().is_zero(), "residual in Q[a,b,u,v] is 0")),
        _timed("family3 cube identity",
               lambda: (family3_disc_residual().is_zero(), "residual in Q[a,b,lam,mu] is 0")),
        _timed("identities notice a perturbation",
               lambda: (not disc_identity_suite(perturb=1), "perturbed residuals are nonzero")),
        _timed("family3 section (1:0) returns E", _section_check),
        _timed("3-isogeny and isomorphism certificates", _isogeny_certificates),
    ]


# -- quartic invariants ---------------------------------------------------------

def _symbolic_invariants() -> tuple[bool, str]:
    a, b = symbols("a b")
    D = discriminant_of(a, b)
    inner = [a, 6 * b, -2 * a * a, -2 * a * b, -(a**3) / 3 - 3 * b * b]
    I_x, J_x = invariants_of(1, 0, 2 * a, 4 * b, -a * a / 3)
    I_in, J_in = invariants_of(*inner)
    _, J_m = invariants_of(*(c * D for c in inner))
    _, J_m1 = invariants_of(*(c * (-D / 3) for c in inner))
    # Jacobians -27J against the target b-coefficient, up to u^6 = (D/2)^6
    facts = {
        "I(C_X)=0": I_x.is_zero(),
        "J(C_X)=D": (J_x - D).is_zero(),
        "I(inner)=0": I_in.is_zero(),
        "J(inner)=D^2/64": (J_in - D * D / 64).is_zero(),
        "Jac(C_X-)~x^3-27/D": (64 * (-27 * J_m) + 27 * D**5).is_zero(),
        "Jac(X-1)~x^3+1/D": (64 * (-27 * J_m1) - D**5).is_zero(),
    }
    return all(facts.values()), ", ".join(k for k, v in facts.items() if v)


def _sample_isomorphisms() -> tuple[bool, str]:
    targets = {"CX": lambda D: Curve(0, -27 * D),
               "CXminus": lambda D: Curve(0, -27 / D),
               "Xminus1": lambda D: Curve(0, 1 / D)}
    bad = []
    for ab in SAMPLE_CURVES:
        E = Curve(*ab)
        for which, target in targets.items():
            ok, _ = is_Q_isomorphic(jacobian_of_quartic(canonical_model(E, which)), target(E.discriminant))
            if not ok:
                bad.append(f"{which} for {ab}")
    return not bad, "all Q-isomorphic" if not bad else "; ".join(bad)


def suite_quartics() -> list[Check]:
    return [
        _timed("quartic invariants (symbolic)", _symbolic_invariants),
        _timed("quartic Jacobians on sample curves", _sample_isomorphisms),
    ]


# -- plane cubic Jacobians --------------------------------------------------------

def suite_jacobians(bound: int = 100) -> list[Check]:
    checks = []
    for ab in SAMPLE_CURVES:
        def run(ab=ab):
            rep = jacobian_consistency(Curve(*ab), bound)
            bad = [r["p"] for r in rep.rows
                   if r["CY"] != r["XE6"] or r["CYminus"] != r["Zminus1_jac"]]
            return not bad, f"{len(rep.rows)} good primes <= {bound}" + (f", mismatch at {bad}" if bad else "")
        checks.append(_timed(f"#C_Y, #C_Y- vs Jacobians for {ab}", run))
    return checks


# -- nine quadrics ----------------------------------------------------------------

QUADRIC_CURVES = ((-6, 8), (1, 1), (0, 1), (1, 0))


def suite_quadrics() -> list[Check]:
    checks = []
    for ab in QUADRIC_CURVES:
        def run(ab=ab):
            E = Curve(*ab)
            try:
                K = derive_quadrics(E)
            except DegenerateError as exc:
                return False, str(exc)
            T, rank = twist_by_flex(E, K)
            same = T.same_span(quadrics_s(E))
            ok = len(K) == 9 and K.rank() == 9 and len(T) == 27 and rank == 9 and same
            return ok, f"kernel dim {K.rank()}, twisted forms {len(T)} of rank {rank}, span = s-forms: {same}"
        checks.append(_timed(f"quadric pipeline for {ab}", run))
    return checks


# -- rational points ---------------------------------------------------------------

def _mutations_detected(E: Curve, P: ProjPoint6) -> bool:
    S = quadrics_s(E)
    for i in range(6):
        coords = list(P)
        coords[i] += 1
        if S.vanishes_at(coords):
            return False
    return True


def point_samples() -> tuple[list[tuple[Curve, ProjPoint6]], list[tuple[Curve, ProjPoint6]], list[str]]:
    rng = random.Random(SEED + 1)
    p49 = [example49_point(t) for t in random_nonzero(rng, 10)]
    p410, skipped = [], []
    while len(p410) < 20:
        (u, v), = random_pairs(rng, 1)
        try:
            p410.append(example410_point(u, v))
        except DegenerateError as exc:
            skipped.append(f"({u}:{v}): {exc}")
    return p49, p410, skipped


def suite_points() -> list[Check]:
    p49, p410, skipped = point_samples()

    def membership(points):
        bad = [str(P) for E, P in points if not quadrics_s(E).vanishes_at(P)]
        return not bad, f"{len(points) - len(bad)}/{len(points)} points on all nine s-forms"

    def mutation():
        pts = p49 + p410
        bad = sum(not _mutations_detected(E, P) for E, P in pts)
        return bad == 0, f"every +1 mutation of {len(pts)} points breaks a form"

    def t92():
        E, P = example49_point(Fraction(9, 2))
        ok = E == Curve(-6, 8) and P.coords == tuple(map(Fraction, (-96, 24, 1, -24, 24, 1)))
        return ok, f"E = {E}, P = {P}"

    extra = f"; skipped {len(skipped)} degenerate (u:v)" if skipped else ""
    checks = [
        _timed("t = 9/2 point", t92),
        _timed("family t points on s-forms", lambda: membership(p49)),
        _timed("family (u:v) points on s-forms", lambda: membership(p410)),
        _timed("single-coordinate mutations detected", mutation),
    ]
    checks[2].detail += extra
    return checks


# -- local solubility -------------------------------------------------------------

def suite_local() -> list[Check]:
    def insoluble():
        q = canonical_model(Curve(1, 0), "CXminus")
        return (not locally_soluble_at(q, 3)), f"{q} has no 3-adic point"

    def scaling():
        q = canonical_model(Curve(1, 0), "CXminus")
        # 3y^2 = -3x^4 + 6x^2 + 1, i.e. y^2 = -x^4 + 2x^2 + 1/3
        target = Quartic(-1, 0, 2, 0, Fraction(1, 3))
        ratios = {c / t for c, t in zip(q.coeffs, target.coeffs) if t}
        zeros_match = all((c == 0) == (t == 0) for c, t in zip(q.coeffs, target.coeffs))
        ok = zeros_match and len(ratios) == 1 and is_square(next(iter(ratios)))
        return ok, f"C_X- = {format_rat(next(iter(ratios)))} * target (a square)"

    return [
        _timed("C_X- for (1,0) insoluble at 3", insoluble),
        _timed("C_X- for (1,0) matches 3y^2 = -3x^4 + 6x^2 + 1", scaling),
    ]


# -- birational model ---------------------------------------------------------------

def suite_birational() -> list[Check]:
    def sample_point():
        f, g = birational_model(Curve(-6, 8))
        at = {"x": 1, "y": 864, "z": 24}
        return f.evaluate(at) == 0 and g.evaluate(at) == 0, "f = g = 0 at (1, 864, 24)"

    def pipeline_points():
        p49, p410, _ = point_samples()
        pts = (p49 + p410)[:10]
        bad = []
        for E, P in pts:
            f, g = birational_model(E)
            x, y, z = birational_coordinates(P)
            at = {"x": x, "y": y, "z": z}
            if f.evaluate(at) or g.evaluate(at):
                bad.append(str(P))
        return not bad, f"{len(pts) - len(bad)}/{len(pts)} points satisfy f = g = 0"

    return [
        _timed("birational model at (1, 864, 24)", sample_point),
        _timed("birational model at pipeline points", pipeline_points),
    ]


# -- congruence ---------------------------------------------------------------------

def headline(bound: int = 1000) -> dict:
    """The t = 9/2 pair with its oracle report and isomorphism class of F."""
    run = reverse6_pipeline([Fraction(9, 2)], bound)
    report = run.reports[0]
    ref = Curve(-216, 1728)
    iso, u = is_Q_isomorphic(report.F, ref)
    return {"report": report, "F_isomorphic_to_reference": iso,
            "scale_u": u, "j_F": report.F.j_invariant}


def _headline_check(bound: int) -> tuple[bool, str]:
    h = headline(bound)
    r = h["report"]
    ok = (r.E == Curve(-6, 8) and h["j_F"] == -1728 and r.all_congruent
          and r.nonisogeny_witness is not None and r.nonisogeny_witness <= 100)
    iso = (f"Q-isomorphic to y^2 = x^3 - 216x + 1728 (u = {format_rat(h['scale_u'])})"
           if h["F_isomorphic_to_reference"] else "a nontrivial twist of y^2 = x^3 - 216x + 1728")
    return ok, (f"F: {r.F}, j(F) = {format_rat(h['j_F'])}, {len(r.primes)} primes, "
                f"witness p = {r.nonisogeny_witness}; F is {iso}")


def _trace_mod(pairs, n: int, bound: int) -> tuple[bool, str]:
    bad = [f"{E} vs {F} at p = {r.first_failure}"
           for E, F in pairs if not (r := ap_mod_n_check(E, F, n, bound)).all_congruent]
    return not bad, f"{len(pairs) - len(bad)}/{len(pairs)} pairs congruent mod {n}" + (
        f"; {bad[0]}" if bad else "")


def property_pairs(rng: random.Random, kind: str, count: int = 10):
    E = Curve(-6, 8)
    pairs = []
    while len(pairs) < count:
        (s, t), = random_pairs(rng, 1)
        try:
            if kind == "two":
                F = family2(E, s, t)
            else:
                F = family3(E, s, t, kind)
        except DegenerateError:
            continue
        pairs.append((E, F))
    return pairs


def suite_congruence(bound: int = 1000, property_bound: int = PROPERTY_BOUND) -> list[Check]:
    rng = random.Random(SEED + 2)
    two = property_pairs(rng, "two")
    direct = property_pairs(rng, "direct")
    reverse = property_pairs(rng, "reverse")

    def splitting():
        reps = [mod2_type_check(E, F, property_bound) for E, F in two]
        bad = [r for r in reps if not r.agree]
        return not bad, f"{len(reps) - len(bad)}/{len(reps)} splitting types agree"

    def mismatch():
        r = ap_mod_n_check(Curve(-6, 8), Curve(1, 1), 6, property_bound)
        return not r.all_congruent, f"unrelated pair fails at p = {r.first_failure}"

    return [
        _timed("t = 9/2 reverse pair", lambda: _headline_check(bound)),
        _timed("family2 fibers mod 2", lambda: _trace_mod(two, 2, property_bound)),
        _timed("family2 splitting types", splitting),
        _timed("family3 direct fibers mod 3", lambda: _trace_mod(direct, 3, property_bound)),
        _timed("family3 reverse fibers mod 3", lambda: _trace_mod(reverse, 3, property_bound)),
        _timed("oracle rejects an unrelated pair", mismatch),
    ]


SUITES: dict[str, Callable[[], list[Check]]] = {
    "identities": suite_identities,
    "quartics": suite_quartics,
    "jacobians": suite_jacobians,
    "quadrics": suite_quadrics,
    "points": suite_points,
    "local": suite_local,
    "birational": suite_birational,
    "congruence": suite_congruence,
}


def run_suite(name: str, **kwargs) -> SuiteResult:
    return SuiteResult(name, SUITES[name](**kwargs))

