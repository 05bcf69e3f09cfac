"""Randomized property suites, one per theorem-level claim.

Each suite runs ``trials`` independent cases, case ``i`` drawing from the
generator seeded by ``(seed, i)``, so a report depends only on its inputs
(elapsed time aside) and any single case can be replayed.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from . import maps, words
from .errors import IsocoverError
from .reps import (
    HALF,
    Theta,
    is_conjugate,
    random_sl2,
    reparam_d_to_c,
    sample_five_rep,
    sample_torus_rep,
    validate,
)
from .serialize import rep_to_json
from .sl2 import (
    Mat2,
    commutator,
    fricke_trace,
    inv,
    involution_matrix_printed,
    normal_form_templates,
)
from .scalar import close, get_epsilon, is_zero

R0_THETAS = (HALF, Theta("1/3"), Theta(0.137))
# identities involving a few products of unit-size matrices
MATRIX_TOL = 1e-8


@dataclass
class Failure:
    case_id: int
    violated_invariant: str
    input: object = None


@dataclass
class RunReport:
    command: str
    seed: int
    trials: int
    failures: list[Failure] = field(default_factory=list)
    elapsed_ms: float = 0.0
    stats: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self, with_elapsed: bool = True) -> dict:
        out = asdict(self)
        if not with_elapsed:
            out.pop("elapsed_ms")
        return out


def _word_scale(w, assignment) -> float:
    """Product of the letter norms.

    Rounding and residual errors in a product of matrices grow like this
    product, not like the size of the result, so long-word comparisons are
    made relative to it.
    """
    scale = 1.0
    for letter in w:
        scale *= words.eval_word(words.Word([letter]), assignment).norm()
    return scale


def _close_at_scale(X: Mat2, Y: Mat2, tol: float, scale: float) -> bool:
    return X.max_abs_diff(Y) <= tol * max(1.0, scale)


def case_rng(seed: int, case: int) -> np.random.Generator:
    return np.random.default_rng([seed, case])


def _run(command: str, trials: int, seed: int, case: Callable) -> RunReport:
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    report = RunReport(command, seed, trials)
    start = time.perf_counter()
    for i in range(trials):
        ctx: dict = {}
        try:
            problems = case(case_rng(seed, i), ctx, report.stats)
        except (IsocoverError, ArithmeticError, ValueError) as exc:
            problems = [f"{type(exc).__name__}: {exc}"]
        for p in problems:
            report.failures.append(Failure(i, p, ctx.get("input")))
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def _bump(stats: dict, key: str, by: int = 1) -> None:
    stats[key] = stats.get(key, 0) + by


def _track_max(stats: dict, key: str, value: float) -> None:
    stats[key] = max(stats.get(key, 0.0), float(value))


# -- suites ---------------------------------------------------------------------


def verify_fricke(trials: int = 1000, seed: int = 0, backend: str = "float") -> RunReport:
    """tr[A, B] against a^2 + b^2 + c^2 - abc - 2; exact equality on the exact backend."""

    def case(rng, ctx, stats):
        A, B = random_sl2(rng, backend), random_sl2(rng, backend)
        ctx["input"] = {"A": str(A), "B": str(B)}
        lhs = commutator(A, B).trace()
        rhs = fricke_trace(A.trace(), B.trace(), (A @ B).trace())
        if backend == "exact":
            return [] if lhs == rhs else [f"exact mismatch {lhs} != {rhs}"]
        _track_max(stats, "max_error", abs(complex(lhs - rhs)))
        return [] if close(lhs, rhs) else [f"|difference| = {abs(complex(lhs - rhs)):.3g}"]

    return _run(f"verify fricke --backend {backend}", trials, seed, case)


def _random_triple(rng):
    while True:
        a, b, g = (complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(3))
        if abs(g) > 0.1 and abs(g * g - 1) > 0.1:
            return a, b, g


def verify_involution(trials: int = 1000, seed: int = 0, backend: str = "float") -> RunReport:
    """Determinant law of the printed involution and the rescaled involution's identities."""

    def case(rng, ctx, stats):
        a, b, g = _random_triple(rng)
        ctx["input"] = {"a": [a.real, a.imag], "b": [b.real, b.imag], "gamma": [g.real, g.imag]}
        A, B = normal_form_templates(a, b, g)
        t = commutator(A, B).trace()
        M0 = involution_matrix_printed(a, b, g)
        out = []
        if not close(M0.det(), (2 - t) / 4):
            out.append(f"det(M0) = {M0.det()} but (2 - tr[A,B])/4 = {(2 - t) / 4}")
        if abs(2 - t) < 1e-3:
            _bump(stats, "skipped_reducible")
            return out
        M = M0.scale(2 / np.sqrt(complex(2 - t)))
        Ai, Bi = inv(A), inv(B)
        checks = {
            "det M = 1": close(M.det(), 1, MATRIX_TOL),
            "M^2 = -I": (M @ M).allclose(-Mat2.identity(), MATRIX_TOL),
            "M A M^-1 = A^-1": (M @ A @ inv(M)).allclose(Ai, MATRIX_TOL),
            "M B M^-1 = B^-1": (M @ B @ inv(M)).allclose(Bi, MATRIX_TOL),
        }
        out += [name for name, ok in checks.items() if not ok]
        return out

    return _run("verify involution", trials, seed, case)


def verify_r0(trials: int = 500, seed: int = 0, backend: str = "float") -> RunReport:
    """Descent from the twice-punctured torus to the five-punctured sphere and back."""

    def case(rng, ctx, stats):
        theta = R0_THETAS[int(rng.integers(len(R0_THETAS)))]
        rep = sample_torus_rep(theta, rng)
        ctx["input"] = rep_to_json(rep)
        five = maps.phi1_descend(rep)
        out = [f"descent: {p}" for p in validate(five, MATRIX_TOL)]
        diag = maps.descent_diagnostic(rep)
        _track_max(stats, "max_diagnostic", abs(diag))
        if not is_zero(diag, MATRIX_TOL):
            out.append(f"tr(B A M D1) = {diag}")
        back = maps.phi1_pullback(five)
        _track_max(stats, "max_round_trip", back.max_abs_diff(rep))
        if not back.allclose(rep, MATRIX_TOL):
            out.append(f"round trip off by {back.max_abs_diff(rep):.3g}")
        return out

    return _run("verify r0", trials, seed, case)


def verify_two_to_one(trials: int = 200, seed: int = 0, backend: str = "float") -> RunReport:
    """Every fiber of the pullback has exactly two points, differing by a sign change."""

    def case(rng, ctx, stats):
        theta = R0_THETAS[int(rng.integers(len(R0_THETAS)))]
        rep = sample_torus_rep(theta, rng)
        ctx["input"] = rep_to_json(rep)
        fiber = maps.phi1_fiber(rep)
        sizes = stats.setdefault("fiber_sizes", {})
        sizes[str(len(fiber.points))] = sizes.get(str(len(fiber.points)), 0) + 1
        out = []
        if len(fiber.points) != 2:
            out.append(f"fiber has {len(fiber.points)} points")
        for k, p in enumerate(fiber.points):
            out += [f"point {k}: {msg}" for msg in validate(p, MATRIX_TOL)]
            if not maps.phi1_pullback(p).allclose(rep, MATRIX_TOL):
                out.append(f"point {k} does not pull back to the input")
        if len(fiber.points) == 2 and fiber.points[0].allclose(fiber.points[1], MATRIX_TOL):
            out.append("the two preimages coincide")
        if not fiber.projectively_equivalent:
            out.append("preimages are not projectively equal")
        return out

    return _run("verify two-to-one", trials, seed, case)


def verify_bielliptic(trials: int = 300, seed: int = 0, backend: str = "float") -> RunReport:
    """Genus-two pullback at theta = 1/2, its descent, and the chain back to the sphere."""

    def case(rng, ctx, stats):
        rep = sample_torus_rep(HALF, rng)
        ctx["input"] = rep_to_json(rep)
        c_rep = reparam_d_to_c(rep)
        g2 = maps.pi_pullback(c_rep)
        out = [f"genus two: {p}" for p in validate(g2, MATRIX_TOL)]
        back = maps.pi_descend(g2)
        if not (back.c1.allclose(c_rep.c1, MATRIX_TOL) or back.c1.allclose(-c_rep.c1, MATRIX_TOL)):
            out.append("C1 not recovered up to sign")
        if abs(complex(commutator(g2.a1, g2.b1).trace()) - 2) <= 1e-3:
            _bump(stats, "skipped_reducible")
            return out
        five = maps.genus2_to_five(g2)
        out += [f"chain: {p}" for p in validate(five, MATRIX_TOL)]
        if not is_conjugate(five, maps.phi1_descend(rep), projective=True, eps=MATRIX_TOL):
            out.append("chain result not projectively conjugate to the descent of the input")
        _bump(stats, "full_chain")
        return out

    return _run("verify bielliptic", trials, seed, case)


def verify_words(trials: int = 100, seed: int = 0, backend: str = "float",
                 words_per_trial: int = 10) -> RunReport:
    """Words against matrices: phi_star images, the lifted relation sign, the involution."""
    images = {name: attr for name, attr in zip(words.GAMMA_TILDE, ("a", "b", "d1", "d2"))}
    relation_sign, relation_rest = words.lift_normal_form(words.phi_star(words.TORUS_RELATION))
    eps = get_epsilon()

    def case(rng, ctx, stats):
        theta = R0_THETAS[int(rng.integers(len(R0_THETAS)))]
        five = sample_five_rep(theta, rng)
        ctx["input"] = rep_to_json(five)
        torus = maps.phi1_pullback(five)
        assign = words.five_assignment(five)
        out = []
        for name, attr in images.items():
            got = words.eval_word(words.phi_star(words.Word.gen(name)), assign)
            if not got.allclose(getattr(torus, attr), eps):
                out.append(f"eval(phi_star({name})) differs from the pullback matrix")
        rel = words.eval_word(words.phi_star(words.TORUS_RELATION), assign)
        if relation_rest or not rel.allclose(Mat2.identity().scale(relation_sign), MATRIX_TOL):
            out.append(f"relation evaluates to {rel}, predicted {relation_sign:+d} I")
        M = maps.descent_involution(torus)
        t_assign = words.torus_assignment(torus)
        for _ in range(words_per_trial):
            w = words.random_word(rng, words.GAMMA_TILDE, int(rng.integers(1, 16)))
            if words.involution(words.involution(w)) != w:
                out.append(f"involution^2 moves {w}")
            lhs = words.eval_word(words.involution(w), t_assign)
            rhs = M @ words.eval_word(w, t_assign) @ inv(M)
            scale = _word_scale(w, t_assign) * M.norm() * inv(M).norm()
            if not _close_at_scale(lhs, rhs, MATRIX_TOL, scale):
                out.append(f"involution of {w} is not conjugation by M")
            v = words.random_word(rng, words.GAMMA, int(rng.integers(1, 16)))
            sign, red = words.lift_reduce(v)
            if not _close_at_scale(words.eval_word(v, assign), words.eval_word(red, assign).scale(sign),
                                   MATRIX_TOL, _word_scale(v, assign)):
                out.append(f"lift sign wrong for {v}")
            _bump(stats, "words_checked")
        return out

    return _run("verify words", trials, seed, case)


SUITES: dict[str, Callable[..., RunReport]] = {
    "fricke": verify_fricke,
    "involution": verify_involution,
    "r0": verify_r0,
    "two-to-one": verify_two_to_one,
    "bielliptic": verify_bielliptic,
    "words": verify_words,
}


def run_suite(name: str, trials: int, seed: int = 0, backend: str = "float") -> RunReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](trials=trials, seed=seed, backend=backend)
