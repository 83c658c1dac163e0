"""Cartan matrices of tame 2-blocks (Erdmann's families) and their trace bounds.

Each family is a parametrized 2x2 or 3x3 integer matrix.  For blocks of
finite groups the parameters are pinned to the defect group order, e.g.
``k = |D|/4``; :func:`admissible_specs` enumerates exactly those choices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Optional

from .linalg import IntMatrix, det, is_positive_definite, smith_normal_form
from .model import is_power_of
from .verdict import Verdict


class InadmissibleParametersError(ValueError):
    pass


class UnknownFamilyError(KeyError):
    pass


@dataclass(frozen=True)
class _Family:
    family_id: str
    modules: int
    build: Callable[..., list[list[int]]]
    choices: Callable[[int], list[dict]]  # |D| -> admissible parameter dicts
    min_defect: int
    speculative: bool = False
    # (label, |D| -> bound) for the sharper per-family trace statement, if any
    sharper: Optional[Callable[[dict, int], tuple[str, Fraction]]] = None


def _two_simple(k, r):
    return [[4 * k, 2 * k], [2 * k, k + r]]


def _quarter_k_a(k, a):
    return [[4 * k, 2 * k, 2 * k], [2 * k, k + a, k], [2 * k, k, k + a]]


def _kappa(k, a):
    return [[2 * a, a, a], [a, k + a, k], [a, k, k + a]]


def _b_three(s):
    return [[4, 2, 2], [2, s + 1, 1], [2, 1, 3]]


def _b_two(s):
    return [[4, 2, 2], [2, s + 1, 1], [2, 1, 2]]


def _sd_a(k):
    return [[4 * k, 2 * k, 2 * k], [2 * k, k + 1, k], [2 * k, k, k + 2]]


def _sd_h(s):
    return [[3, 2, 1], [2, s + 2, s], [1, s, s + 1]]


def _sd_c(k, s):
    return [[k + s, k, k], [k, k + 1, k - 1], [k, k - 1, k + 1]]


def _distinct(dicts: Iterable[dict]) -> list[dict]:
    out: list[dict] = []
    for d in dicts:
        if d not in out:
            out.append(d)
    return out


def _pair_choices(a: str, b: str) -> Callable[[int], list[dict]]:
    """``{a, b} = {1, |D|/4}`` or ``{2, |D|/4}`` (TWO_SIMPLE) style choices."""

    def choices(d: int) -> list[dict]:
        q = d // 4
        return _distinct(
            [{a: 1, b: q}, {a: q, b: 1}, {a: 2, b: q}, {a: q, b: 2}]
        )

    return choices


def _two_only(a: str, b: str) -> Callable[[int], list[dict]]:
    def choices(d: int) -> list[dict]:
        q = d // 4
        return _distinct([{a: 2, b: q}, {a: q, b: 2}])

    return choices


def _k_quarter_a(d: int) -> list[dict]:
    return [{"k": d // 4, "a": 1}, {"k": d // 4, "a": 2}]


def _s_quarter(d: int) -> list[dict]:
    return [{"s": d // 4}]


def _k_quarter(d: int) -> list[dict]:
    return [{"k": d // 4}]


def _bound(label: str, slope: Fraction, const: int):
    return lambda params, d: (label, slope * d + const)


def _sd_c_sharper(params: dict, d: int) -> tuple[str, Fraction]:
    if params["k"] == 2 and params["s"] == d // 4:
        return "|D|/4+8", Fraction(d, 4) + 8
    return "3/4|D|+4", Fraction(3 * d, 4) + 4


FAMILIES: dict[str, _Family] = {
    f.family_id: f
    for f in (
        _Family("TWO_SIMPLE", 2, _two_simple, _pair_choices("k", "r"), 8),
        _Family("D3A1", 3, _quarter_k_a, _k_quarter_a, 4),
        _Family("D3B1", 3, _b_two, _s_quarter, 4, sharper=_bound("|D|/4+7", Fraction(1, 4), 7)),
        _Family("D3K", 3, _kappa, _k_quarter_a, 4, sharper=_bound("|D|/2+8", Fraction(1, 2), 8)),
        _Family("SD3A1", 3, _sd_a, _k_quarter, 4, sharper=_bound("3/2|D|+3", Fraction(3, 2), 3)),
        _Family("SD3B1", 3, _b_three, _s_quarter, 8, sharper=_bound("|D|/4+8", Fraction(1, 4), 8)),
        _Family("SD3C2", 3, _sd_c, _two_only("k", "s"), 4, speculative=True, sharper=_sd_c_sharper),
        _Family("SD3D", 3, _b_three, _s_quarter, 8, sharper=_bound("|D|/4+8", Fraction(1, 4), 8)),
        _Family("SD3H", 3, _sd_h, _s_quarter, 8, speculative=True, sharper=_bound("|D|/2+5", Fraction(1, 2), 5)),
        _Family("Q3A2", 3, _quarter_k_a, _k_quarter_a, 4),
        _Family("Q3B", 3, _b_three, _s_quarter, 8, sharper=_bound("|D|/4+8", Fraction(1, 4), 8)),
        _Family("Q3K", 3, _kappa, _k_quarter_a, 4, sharper=_bound("|D|/2+8", Fraction(1, 2), 8)),
    )
}
FAMILY_IDS = tuple(FAMILIES)


def _family(family_id: str) -> _Family:
    try:
        return FAMILIES[family_id]
    except KeyError:
        raise UnknownFamilyError(f"unknown family {family_id!r}; expected one of {', '.join(FAMILY_IDS)}") from None


@dataclass(frozen=True)
class TameFamilySpec:
    family_id: str
    parameters: Mapping[str, int]
    defect_group_order: int

    def __post_init__(self) -> None:
        _family(self.family_id)
        object.__setattr__(self, "parameters", dict(self.parameters))

    def __hash__(self) -> int:
        return hash((self.family_id, tuple(sorted(self.parameters.items())), self.defect_group_order))

    @property
    def speculative(self) -> bool:
        return FAMILIES[self.family_id].speculative

    @property
    def modules(self) -> int:
        return FAMILIES[self.family_id].modules

    def label(self) -> str:
        params = ",".join(f"{k}={v}" for k, v in sorted(self.parameters.items()))
        return f"{self.family_id}[|D|={self.defect_group_order},{params}]"


def admissibility_problems(spec: TameFamilySpec) -> list[str]:
    fam = FAMILIES[spec.family_id]
    d = spec.defect_group_order
    if not is_power_of(d, 2) or d < 2:
        return [f"|D|={d} is not a power of 2"]
    if d < fam.min_defect:
        return [f"|D|={d} below the minimum {fam.min_defect} for {spec.family_id}"]
    allowed = fam.choices(d)
    if spec.parameters in allowed:
        return []
    names = sorted(allowed[0])
    if sorted(spec.parameters) != names:
        return [f"{spec.family_id} takes parameters {names}, got {sorted(spec.parameters)}"]
    shown = " or ".join("(" + ", ".join(f"{k}={v}" for k, v in sorted(a.items())) + ")" for a in allowed)
    return [f"{spec.family_id} at |D|={d} requires {shown}"]


def family_cartan(spec: TameFamilySpec) -> IntMatrix:
    problems = admissibility_problems(spec)
    if problems:
        raise InadmissibleParametersError("inadmissible parameters: " + "; ".join(problems))
    return IntMatrix.from_rows(FAMILIES[spec.family_id].build(**spec.parameters))


def admissible_specs(family_id: str, defect_group_order: int) -> list[TameFamilySpec]:
    fam = _family(family_id)
    d = defect_group_order
    if d < fam.min_defect:
        return []
    return [TameFamilySpec(family_id, params, d) for params in fam.choices(d)]


def uniform_bound(modules: int, defect_group_order: int) -> Fraction:
    """5/4|D| + 2 for two simple modules, 3/2|D| + 4 for three."""
    d = defect_group_order
    return Fraction(5 * d, 4) + 2 if modules == 2 else Fraction(3 * d, 2) + 4


def tame_trace_check(spec: TameFamilySpec) -> list[Verdict]:
    """Uniform trace bound, tr C ≤ l(B)|D|, and the sharper family bound if stated."""
    c = family_cartan(spec)
    tr = c.trace()
    d = spec.defect_group_order
    out = [
        Verdict.compare("tame.uniform_bound", tr, uniform_bound(c.n, d), [spec.label()]),
        Verdict.compare("tame.trace_le_l_defect", tr, c.n * d, [f"l(B)={c.n}"]),
    ]
    fam = FAMILIES[spec.family_id]
    if fam.sharper is not None:
        label, bound = fam.sharper(spec.parameters, d)
        v = Verdict.compare("tame.sharper_bound", tr, bound, [f"stated bound {label}"])
        if not v.holds:
            v = v.with_notes(
                f"discrepancy: the displayed matrix gives tr C = {tr}, exceeding the stated {label} = {bound}"
            )
        out.append(v)
    return out


def _power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


@dataclass(frozen=True)
class SweepRow:
    spec: TameFamilySpec
    cartan: IntMatrix
    verdicts: tuple[Verdict, ...]
    positive_definite: bool
    determinant: int
    elementary_divisors: tuple[int, ...]

    @property
    def trace(self) -> int:
        return self.cartan.trace()

    @property
    def bound(self) -> Fraction:
        return self.verdicts[0].rhs

    @property
    def margin(self) -> Fraction:
        return self.verdicts[0].margin

    @property
    def snf_ok(self) -> bool:
        ds = self.elementary_divisors
        chain = all(b % a == 0 for a, b in zip(ds, ds[1:]) if a)
        product = 1
        for x in ds:
            product *= x
        return chain and product == abs(self.determinant) and all(_power_of_two(x) for x in ds)

    @property
    def divisors_divide_defect(self) -> bool:
        """Holds for Cartan matrices of actual blocks; fails for SD shapes at |D| = 4."""
        return all(self.spec.defect_group_order % x == 0 for x in self.elementary_divisors)

    @property
    def failures(self) -> list[str]:
        out = [v.check_id for v in self.verdicts if not v.holds and v.check_id != "tame.sharper_bound"]
        if not self.cartan.is_symmetric():
            out.append("symmetric")
        if not self.positive_definite:
            out.append("positive_definite")
        if not _power_of_two(self.determinant):
            out.append("det_power_of_two")
        if not self.snf_ok:
            out.append("smith_normal_form")
        return out

    @property
    def discrepancies(self) -> list[Verdict]:
        return [v for v in self.verdicts if v.check_id == "tame.sharper_bound" and not v.holds]


@dataclass(frozen=True)
class SweepReport:
    rows: tuple[SweepRow, ...] = field(default=())

    @property
    def failures(self) -> list[tuple[str, str]]:
        return [(row.spec.label(), f) for row in self.rows for f in row.failures]

    @property
    def discrepancies(self) -> list[tuple[str, Verdict]]:
        return [(row.spec.label(), v) for row in self.rows for v in row.discrepancies]

    def __len__(self) -> int:
        return len(self.rows)


def sweep_point(spec: TameFamilySpec) -> SweepRow:
    c = family_cartan(spec)
    return SweepRow(
        spec,
        c,
        tuple(tame_trace_check(spec)),
        c.is_symmetric() and is_positive_definite(c),
        det(c),
        tuple(smith_normal_form(c)),
    )


def defect_orders(defect_max: int, defect_min: int = 4) -> list[int]:
    out, d = [], defect_min
    while d <= defect_max:
        out.append(d)
        d *= 2
    return out


def sweep(family_id: str, defect_range: Iterable[int]) -> SweepReport:
    """Every admissible parameter choice of one family over the given |D| values."""
    _family(family_id)
    rows: list[SweepRow] = []
    for d in defect_range:
        if not is_power_of(d, 2):
            raise ValueError(f"defect_range must contain powers of 2, got {d}")
        rows.extend(sweep_point(spec) for spec in admissible_specs(family_id, d))
    return SweepReport(tuple(rows))


def sweep_all(defect_range: Iterable[int], include_speculative: bool = False) -> SweepReport:
    orders = list(defect_range)
    rows: list[SweepRow] = []
    for fid, fam in FAMILIES.items():
        if fam.speculative and not include_speculative:
            continue
        rows.extend(sweep(fid, orders).rows)
    return SweepReport(tuple(rows))


def iter_family_matrices(defect_max: int, include_speculative: bool = True) -> Iterator[tuple[TameFamilySpec, IntMatrix]]:
    for fid, fam in FAMILIES.items():
        if fam.speculative and not include_speculative:
            continue
        for d in defect_orders(defect_max):
            for spec in admissible_specs(fid, d):
                yield spec, family_cartan(spec)
