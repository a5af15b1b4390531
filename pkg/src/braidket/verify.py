"""Relation suites: the algebraic identities every representation must satisfy.

These back the ``verify`` CLI command and the acceptance tests.  Each suite
checks a family of exact (or, for the numeric representation, 1e-12) identities
and reports a single pass/fail with a short detail string on failure.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from .braid import BraidWord, bracket_via_trace, closure_to_diagram, rho_tl
from .diagram import bracket_state_sum
from .errors import SizeLimitError
from .laurent import DELTA
from .matrixrep import (
    SymbolicMatrix,
    burau_rho,
    elementary_tensors,
    rho_matrix,
    tl_tensor_image,
    u_tensor,
    z_amplitude,
)
from .tl import TLElement, generator_diagram, multiply
from .unitary3 import rho_unitary, unitary_generators

__all__ = ["SuiteResult", "run_all", "MAX_VERIFY_STRANDS"]

MAX_VERIFY_STRANDS = 5
MAX_TENSOR_SUITE_STRANDS = 4

_THETAS = [0.0, math.pi / 10, -math.pi / 10, math.pi / 8, -math.pi / 8, math.pi / 6]


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    detail: str = ""


def _tl_gen(n: int, i: int) -> TLElement:
    return TLElement.from_diagram(generator_diagram(n, i))


def suite_tl_relations(n: int) -> SuiteResult:
    """U_i^2 = delta U_i, U_i U_{i+-1} U_i = U_i, distant commutation."""
    for m in range(2, n + 1):
        for i in range(1, m):
            u_i = _tl_gen(m, i)
            if multiply(u_i, u_i) != u_i.scaled(DELTA):
                return SuiteResult("tl-relations", False, f"U_{i}^2 != delta U_{i} in TL_{m}")
            for j in range(1, m):
                u_j = _tl_gen(m, j)
                prod = multiply(multiply(u_i, u_j), u_i)
                if abs(i - j) == 1 and prod != u_i:
                    return SuiteResult(
                        "tl-relations", False, f"U_{i}U_{j}U_{i} != U_{i} in TL_{m}"
                    )
                if abs(i - j) > 1 and multiply(u_i, u_j) != multiply(u_j, u_i):
                    return SuiteResult(
                        "tl-relations", False, f"U_{i}U_{j} != U_{j}U_{i} in TL_{m}"
                    )
    return SuiteResult("tl-relations", True)


def suite_tl_relations_tensor(n: int) -> SuiteResult:
    """The same relations for the tensor matrices."""
    for m in range(2, min(n, MAX_TENSOR_SUITE_STRANDS) + 1):
        for i in range(1, m):
            u_i = u_tensor(m, i)
            if u_i * u_i != u_i.scale(DELTA):
                return SuiteResult("tl-relations-tensor", False, f"U_{i}^2 in n={m}")
            for j in range(1, m):
                u_j = u_tensor(m, j)
                if abs(i - j) == 1 and u_i * u_j * u_i != u_i:
                    return SuiteResult(
                        "tl-relations-tensor", False, f"U_{i}U_{j}U_{i} in n={m}"
                    )
                if abs(i - j) > 1 and u_i * u_j != u_j * u_i:
                    return SuiteResult(
                        "tl-relations-tensor", False, f"commutation {i},{j} in n={m}"
                    )
    return SuiteResult("tl-relations-tensor", True)


def suite_tl_relations_projector(n: int) -> SuiteResult:
    """Projector form: adds U_k U_l = 0 for |k-l| > 1."""
    from .matrixrep import burau_generator

    for m in range(2, n + 1):
        zero = SymbolicMatrix.zeros(m)
        for k in range(1, m):
            u_k = burau_generator(m, k)
            if u_k * u_k != u_k.scale(DELTA):
                return SuiteResult("tl-relations-projector", False, f"U_{k}^2 in n={m}")
            for l in range(1, m):
                u_l = burau_generator(m, l)
                if abs(k - l) == 1 and u_k * u_l * u_k != u_k:
                    return SuiteResult(
                        "tl-relations-projector", False, f"U_{k}U_{l}U_{k} in n={m}"
                    )
                if abs(k - l) > 1 and u_k * u_l != zero:
                    return SuiteResult(
                        "tl-relations-projector", False, f"U_{k}U_{l} != 0 in n={m}"
                    )
    return SuiteResult("tl-relations-projector", True)


def _braid_relation_words(n: int):
    for i in range(1, n - 1):
        yield (
            BraidWord(n, (i, i + 1, i)),
            BraidWord(n, (i + 1, i, i + 1)),
        )
    for i in range(1, n):
        for j in range(i + 2, n):
            yield BraidWord(n, (i, j)), BraidWord(n, (j, i))
    for i in range(1, n):
        yield BraidWord(n, (i, -i)), BraidWord(n, ())


def suite_braid_relations(n: int, which: str) -> SuiteResult:
    """Braid relations under one symbolic representation."""
    name = f"braid-relations-{which}"
    rep = {"tl": rho_tl, "tensor": rho_matrix, "projector": burau_rho}[which]
    top = n if which != "tensor" else min(n, MAX_TENSOR_SUITE_STRANDS)
    for m in range(2, top + 1):
        for left, right in _braid_relation_words(m):
            if rep(left) != rep(right):
                return SuiteResult(name, False, f"{left} != {right} in B_{m}")
    return SuiteResult(name, True)


def suite_braid_relations_unitary(tol: float = 1e-12) -> SuiteResult:
    """Numeric braid relations and unitarity for the 2x2 representation."""
    rng = random.Random(7)
    for theta in _THETAS:
        setup = unitary_generators(theta)
        lhs = rho_unitary(BraidWord(3, (1, 2, 1)), setup)
        rhs = rho_unitary(BraidWord(3, (2, 1, 2)), setup)
        if np.max(np.abs(lhs - rhs)) > tol:
            return SuiteResult("braid-relations-unitary", False, f"theta={theta}")
        for _ in range(5):
            letters = tuple(rng.choice((1, -1, 2, -2)) for _ in range(12))
            rho = rho_unitary(BraidWord(3, letters), setup)
            if np.max(np.abs(rho @ rho.conj().T - np.eye(2))) > tol:
                return SuiteResult(
                    "braid-relations-unitary", False, f"not unitary at theta={theta}"
                )
    return SuiteResult("braid-relations-unitary", True)


def suite_yang_baxter() -> SuiteResult:
    """R1 R2 R1 = R2 R1 R2 on (C^2)^3, and R as built is inverse to rho(sigma)."""
    lhs = rho_matrix(BraidWord(3, (1, 2, 1)))
    rhs = rho_matrix(BraidWord(3, (2, 1, 2)))
    if lhs != rhs:
        return SuiteResult("yang-baxter", False, "R1R2R1 != R2R1R2")
    _, _, r = elementary_tensors()
    if r * rho_matrix(BraidWord(2, (1,))) != SymbolicMatrix.identity(4):
        return SuiteResult("yang-baxter", False, "R is not inverse to rho(sigma)")
    return SuiteResult("yang-baxter", True)


def suite_trace_identities(tol: float = 1e-12) -> SuiteResult:
    """trace(U_1) = trace(U_2) = delta and trace(U_1 U_2) = 1 numerically."""
    for theta in _THETAS:
        setup = unitary_generators(theta)
        checks = [
            (np.trace(setup.u1), setup.delta),
            (np.trace(setup.u2), setup.delta),
            (np.trace(setup.u1 @ setup.u2), 1.0),
            (np.trace(setup.u2 @ setup.u1), 1.0),
        ]
        for got, want in checks:
            if abs(got - want) > tol:
                return SuiteResult(
                    "trace-identities", False, f"theta={theta}: {got} != {want}"
                )
    return SuiteResult("trace-identities", True)


def random_braid(rng: random.Random, max_strands: int = 4, max_length: int = 8) -> BraidWord:
    n = rng.randint(2, max_strands)
    length = rng.randint(0, max_length)
    letters = tuple(
        rng.choice([s * i for i in range(1, n) for s in (1, -1)]) for _ in range(length)
    )
    return BraidWord(n, letters)


def suite_cross_representation(n: int, samples: int = 20, seed: int = 11) -> SuiteResult:
    """State sum, Markov trace, and tensor trace agree on random closures."""
    rng = random.Random(seed)
    for _ in range(samples):
        word = random_braid(rng, max_strands=min(n, 4), max_length=6)
        via_trace = bracket_via_trace(word)
        via_states = bracket_state_sum(closure_to_diagram(word))
        if via_trace != via_states:
            return SuiteResult("cross-representation", False, f"state sum mismatch: {word}")
        if z_amplitude(word) != DELTA * via_trace:
            return SuiteResult("cross-representation", False, f"tensor trace mismatch: {word}")
        if tl_tensor_image(rho_tl(word)) != rho_matrix(word):
            return SuiteResult("cross-representation", False, f"tensor image mismatch: {word}")
    return SuiteResult("cross-representation", True)


def run_all(n: int, samples: int = 20) -> list[SuiteResult]:
    """Run every suite at strand bound n (2 <= n <= 5)."""
    if n > MAX_VERIFY_STRANDS:
        raise SizeLimitError(f"verification guarded to n <= {MAX_VERIFY_STRANDS}, got {n}")
    if n < 2:
        raise ValueError("verification needs at least 2 strands")
    return [
        suite_tl_relations(n),
        suite_tl_relations_tensor(n),
        suite_tl_relations_projector(n),
        suite_braid_relations(n, "tl"),
        suite_braid_relations(n, "tensor"),
        suite_braid_relations(n, "projector"),
        suite_braid_relations_unitary(),
        suite_yang_baxter(),
        suite_trace_identities(),
        suite_cross_representation(n, samples=samples),
    ]
