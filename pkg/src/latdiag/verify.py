"""Brute-force differentiation oracle and the exhaustive desk-scale suite.

Every combinatorial rule is checked against honest symbolic differentiation
of the determinant; comparisons are exact, so a report either matches or
carries a concrete witness monomial. The suite enumerates a small universe
of diagrams exhaustively rather than sampling.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from functools import cache

from .combinat import check_partition, partitions_of
from .diagrams import LatticeDiagram, SignedDiagramSum, delta, epsilon, normalize, transpose
from .operators import (
    apply_e_alpha,
    apply_elementary,
    apply_homogeneous,
    apply_power_sum,
    apply_schur,
    epsilon_prime,
    expand,
)
from .polynomials import Polynomial, diff_operator
from .symmetric import elementary, homogeneous, power_sum, schur_jacobi_trudi
from .tableaux import ColumnTableau, enumerate_cs_tableaux

OP_KINDS = ("p", "e", "h", "s")


def operator_polynomial(op: str, param, n: int, axis: str = "x") -> Polynomial:
    """The symmetric polynomial whose derivative operator an instance tests."""
    if op == "p":
        poly = power_sum(int(param), n)
    elif op == "e":
        poly = elementary(int(param), n)
    elif op == "h":
        poly = homogeneous(int(param), n)
    elif op == "s":
        poly = schur_jacobi_trudi(check_partition(param), n)
    elif op == "ea":
        total = Polynomial.constant(n, 1)
        for a in param:
            total = total * elementary(int(a), n)
        poly = total
    else:
        raise ValueError(f"unknown operator kind {op!r}")
    if axis == "y":
        poly = poly.swap_alphabets()
    elif axis != "x":
        raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")
    return poly


def combinatorial_sum(op: str, param, diagram: LatticeDiagram, axis: str = "x") -> SignedDiagramSum:
    """Dispatch to the cell-movement rule for the operator kind."""
    if op == "p":
        return apply_power_sum(int(param), diagram, axis)
    if op == "e":
        return apply_elementary(int(param), diagram, axis)
    if op == "h":
        return apply_homogeneous(int(param), diagram, axis)
    if op == "s":
        return apply_schur(check_partition(param), diagram, axis)
    if op == "ea":
        return apply_e_alpha(tuple(param), diagram, axis)
    raise ValueError(f"unknown operator kind {op!r}")


def _param_str(op: str, param) -> str:
    if op in ("s", "ea"):
        return ",".join(str(v) for v in param)
    return str(param)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one oracle comparison, exact on both sides."""

    op: str
    param: object
    diagram: LatticeDiagram
    axis: str
    expected: Polynomial
    actual: Polynomial
    match: bool
    witness: str | None

    def describe(self) -> str:
        head = (f"op={self.op} param={_param_str(self.op, self.param)} "
                f"axis={self.axis} diagram=[{self.diagram}]")
        if self.match:
            return f"{head} PASS"
        return (f"{head} FAIL\n  witness: {self.witness}\n"
                f"  expected: {self.expected}\n  actual: {self.actual}")

    def to_json_obj(self) -> dict:
        obj = {
            "op": self.op,
            "param": _param_str(self.op, self.param),
            "diagram": str(self.diagram),
            "axis": self.axis,
            "match": self.match,
        }
        if not self.match:
            obj.update(witness=self.witness,
                       expected=str(self.expected), actual=str(self.actual))
        return obj


def _witness_term(difference: Polynomial) -> str:
    mono, coeff = difference._term_order()[0]
    return str(Polynomial(difference.nvars, {mono: coeff}))


def verify_instance(op: str, param, diagram: LatticeDiagram, axis: str = "x") -> VerificationReport:
    """Compare a cell-movement rule against symbolic differentiation, exactly."""
    n = len(diagram)
    expected = diff_operator(operator_polynomial(op, param, n, axis), delta(diagram))
    actual = expand(combinatorial_sum(op, param, diagram, axis))
    difference = expected - actual
    match = difference.is_zero
    witness = None if match else _witness_term(difference)
    return VerificationReport(op, param, diagram, axis, expected, actual, match, witness)


@cache
def enumerate_universe(max_cells: int, box_rows: int, box_cols: int) -> tuple[LatticeDiagram, ...]:
    """All diagrams with 1..max_cells distinct cells inside the box, ordered by
    size then by cell combination."""
    box = [(p, q) for q in range(box_cols) for p in range(box_rows)]
    out = []
    for m in range(1, max_cells + 1):
        for combo in itertools.combinations(box, m):
            out.append(LatticeDiagram(combo))
    return tuple(out)


@dataclass(frozen=True)
class SuiteConfig:
    max_cells: int = 4
    box_rows: int = 3
    box_cols: int = 3
    max_weight: int = 3
    axes: tuple[str, ...] = ("x", "y")
    operators: tuple[str, ...] = ("p", "e", "h", "s")
    fail_fast: bool = True


def parse_suite_config(text: str) -> SuiteConfig:
    """Parse the line-oriented key=value config format ('#' starts a comment)."""
    cfg = SuiteConfig()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected key=value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key in ("max_cells", "box_rows", "box_cols", "max_weight"):
            cfg = replace(cfg, **{key: int(value)})
        elif key == "axes":
            axes = tuple(v.strip() for v in value.split(",") if v.strip())
            if not axes or any(a not in ("x", "y") for a in axes):
                raise ValueError(f"config line {lineno}: bad axes {value!r}")
            cfg = replace(cfg, axes=axes)
        elif key == "operators":
            ops = tuple(v.strip() for v in value.split(",") if v.strip())
            if not ops or any(o not in OP_KINDS for o in ops):
                raise ValueError(f"config line {lineno}: bad operators {value!r}")
            cfg = replace(cfg, operators=ops)
        elif key == "fail_fast":
            lowered = value.lower()
            if lowered not in ("true", "false"):
                raise ValueError(f"config line {lineno}: bad fail_fast {value!r}")
            cfg = replace(cfg, fail_fast=lowered == "true")
        else:
            raise ValueError(f"config line {lineno}: unknown key {key!r}")
    return cfg


def format_suite_config(cfg: SuiteConfig) -> str:
    return "\n".join([
        f"max_cells={cfg.max_cells}",
        f"box_rows={cfg.box_rows}",
        f"box_cols={cfg.box_cols}",
        f"max_weight={cfg.max_weight}",
        "axes=" + ",".join(cfg.axes),
        "operators=" + ",".join(cfg.operators),
        f"fail_fast={'true' if cfg.fail_fast else 'false'}",
    ]) + "\n"


def _params_for(op: str, max_weight: int):
    if op == "s":
        return [lam for k in range(1, max_weight + 1) for lam in partitions_of(k)]
    return list(range(1, max_weight + 1))


def suite_instances(cfg: SuiteConfig):
    """Deterministic enumeration order: diagram, operator, parameter, axis."""
    universe = enumerate_universe(cfg.max_cells, cfg.box_rows, cfg.box_cols)
    for diagram in universe:
        for op in cfg.operators:
            for param in _params_for(op, cfg.max_weight):
                for axis in cfg.axes:
                    yield op, param, diagram, axis


@dataclass(frozen=True)
class SuiteSummary:
    total: int
    passed: int
    failed: int
    first_failure: VerificationReport | None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def describe(self) -> str:
        lines = [f"suite: total={self.total} passed={self.passed} failed={self.failed}"]
        if self.first_failure is not None:
            lines.append("first failure:")
            lines.append("  " + self.first_failure.describe().replace("\n", "\n  "))
        return "\n".join(lines)

    def to_json_obj(self) -> dict:
        obj = {"total": self.total, "passed": self.passed, "failed": self.failed}
        if self.first_failure is not None:
            obj["first_failure"] = self.first_failure.to_json_obj()
        return obj


def _left_to_right_eps(tableau: ColumnTableau, diagram: LatticeDiagram) -> int:
    # The deliberately wrong stage order, kept in the harness as a
    # counterexample generator; the library rule is rightmost-first.
    cells = list(diagram.cells)
    for col in tableau.columns:
        for entry in col:
            p, q = cells[entry - 1]
            cells[entry - 1] = (p - 1, q)
        if not epsilon(cells):
            return 0
    return 1


def schur_left_to_right(lam: tuple[int, ...], diagram: LatticeDiagram,
                        axis: str = "x") -> SignedDiagramSum:
    """apply_schur with the column stages applied in the wrong order."""
    if axis == "y":
        flipped, base_sign = transpose(diagram)
        inner = schur_left_to_right(lam, flipped, "x")
        out = SignedDiagramSum(len(diagram))
        for d, c in inner.items():
            back, resort_sign = transpose(d)
            out.add(back, c * base_sign * resort_sign)
        return out
    lam = check_partition(lam)
    n = len(diagram)
    out = SignedDiagramSum(n)
    for tab in enumerate_cs_tableaux(lam, n):
        if _left_to_right_eps(tab, diagram):
            cells = list(diagram.cells)
            for entry, mult in tab.entry_multiplicities().items():
                p, q = cells[entry - 1]
                cells[entry - 1] = (p - mult, q)
            moved, _ = normalize(cells)
            out.add(moved, 1)
    return out


def run_suite(cfg: SuiteConfig, corrupt_stage_order: bool = False) -> SuiteSummary:
    """Run every instance of the configured universe; exact pass/fail counts.

    corrupt_stage_order swaps in the left-to-right Schur stages, proving the
    oracle catches a wrong rule.
    """
    total = passed = failed = 0
    first_failure = None
    for op, param, diagram, axis in suite_instances(cfg):
        if corrupt_stage_order and op == "s":
            expected = diff_operator(
                operator_polynomial(op, param, len(diagram), axis), delta(diagram))
            actual = expand(schur_left_to_right(param, diagram, axis))
            difference = expected - actual
            match = difference.is_zero
            witness = None if match else _witness_term(difference)
            report = VerificationReport(op, param, diagram, axis,
                                        expected, actual, match, witness)
        else:
            report = verify_instance(op, param, diagram, axis)
        total += 1
        if report.match:
            passed += 1
        else:
            failed += 1
            if first_failure is None:
                first_failure = report
            if cfg.fail_fast:
                break
    return SuiteSummary(total, passed, failed, first_failure)


@dataclass(frozen=True)
class StageOrderWitness:
    """A (tableau, diagram) pair proving the stage order is not arbitrary."""

    lam: tuple[int, ...]
    diagram: LatticeDiagram
    tableau: ColumnTableau
    right_to_left_value: int
    left_to_right_value: int
    oracle: Polynomial
    right_to_left_sum: SignedDiagramSum
    left_to_right_sum: SignedDiagramSum


def find_stage_order_witness(max_cells: int = 4, box_rows: int = 3, box_cols: int = 3,
                             max_weight: int = 3) -> StageOrderWitness | None:
    """Search the desk universe for an instance where only the rightmost-first
    stage order reproduces the derivative."""
    lams = [lam for k in range(2, max_weight + 1) for lam in partitions_of(k) if lam[0] >= 2]
    for lam in lams:
        for diagram in enumerate_universe(max_cells, box_rows, box_cols):
            n = len(diagram)
            rl = apply_schur(lam, diagram)
            lr = schur_left_to_right(lam, diagram)
            if rl == lr:
                continue
            oracle = diff_operator(operator_polynomial("s", lam, n), delta(diagram))
            if expand(rl) != oracle or expand(lr) == oracle:
                continue
            for tab in enumerate_cs_tableaux(lam, n):
                rl_eps = epsilon_prime(tab, diagram).value
                lr_eps = _left_to_right_eps(tab, diagram)
                if rl_eps != lr_eps:
                    return StageOrderWitness(lam, diagram, tab, rl_eps, lr_eps,
                                             oracle, rl, lr)
    return None
