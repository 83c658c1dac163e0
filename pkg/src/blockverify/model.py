"""Block and group records, their validation and derived quantities."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

from .linalg import IntMatrix, is_positive_definite


class InsufficientDataError(ValueError):
    """A quantity was requested that the record does not carry enough data for."""


class InconsistentDataError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def is_power_of(n: int, p: int) -> bool:
    """True iff ``n == p**d`` for some ``d >= 0``."""
    if n < 1:
        return False
    while n % p == 0:
        n //= p
    return n == 1


def p_part(n: int, p: int) -> int:
    """Largest power of ``p`` dividing ``n`` (``n != 0``)."""
    n = abs(n)
    if n == 0:
        raise ValueError("p-part of 0 is undefined")
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def p_prime_part(n: int, p: int) -> int:
    return abs(n) // p_part(n, p)


def _tuple_of_ints(xs) -> tuple[int, ...]:
    out = tuple(xs)
    for x in out:
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"expected integers, got {x!r}")
    return out


@dataclass(frozen=True)
class BlockRecord:
    """One p-block, described by the data the literature gives for it.

    Only ``p``, ``defect_group_order`` and ``brauer_degrees`` are required;
    checks that need anything else declare it and are skipped otherwise.
    Index ``i`` of ``brauer_degrees`` matches row/column ``i`` of ``cartan``
    and column ``i`` of ``decomposition``.
    """

    name: str
    p: int
    defect_group_order: int
    brauer_degrees: tuple[int, ...]
    ordinary_degrees: Optional[tuple[int, ...]] = None
    cartan: Optional[IntMatrix] = None
    decomposition: Optional[tuple[tuple[int, ...], ...]] = None
    group_p_part: Optional[int] = None
    group_order: Optional[int] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "brauer_degrees", _tuple_of_ints(self.brauer_degrees))
        if self.ordinary_degrees is not None:
            object.__setattr__(self, "ordinary_degrees", _tuple_of_ints(self.ordinary_degrees))
        if self.cartan is not None and not isinstance(self.cartan, IntMatrix):
            object.__setattr__(self, "cartan", IntMatrix.from_rows(self.cartan))
        if self.decomposition is not None:
            object.__setattr__(
                self, "decomposition", tuple(_tuple_of_ints(r) for r in self.decomposition)
            )

    @property
    def l(self) -> int:
        return len(self.brauer_degrees)

    @property
    def k(self) -> Optional[int]:
        return None if self.ordinary_degrees is None else len(self.ordinary_degrees)

    def sum_brauer_squares(self) -> int:
        return sum(f * f for f in self.brauer_degrees)

    def max_brauer_square(self) -> int:
        return max(f * f for f in self.brauer_degrees)

    def renamed(self, name: str) -> "BlockRecord":
        return replace(self, name=name)

    def permuted(self, perm: Sequence[int]) -> "BlockRecord":
        """Reindex the Brauer characters: new index ``i`` is old index ``perm[i]``."""
        return replace(
            self,
            brauer_degrees=tuple(self.brauer_degrees[p] for p in perm),
            cartan=None if self.cartan is None else self.cartan.permuted(perm),
            decomposition=None
            if self.decomposition is None
            else tuple(tuple(row[p] for p in perm) for row in self.decomposition),
        )


@dataclass(frozen=True)
class GroupRecord:
    """All (known) blocks of one group at one prime."""

    name: str
    p: int
    group_order: int
    blocks: tuple[BlockRecord, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "blocks", tuple(self.blocks))

    @property
    def l(self) -> int:
        return sum(b.l for b in self.blocks)

    def p_prime_order(self) -> int:
        return p_prime_part(self.group_order, self.p)


def validate(record: BlockRecord) -> list[str]:
    """Every violated invariant of ``record``, as readable strings."""
    problems: list[str] = []
    p, dgo = record.p, record.defect_group_order
    if not is_prime(p):
        problems.append(f"p={p} is not prime")
        return problems
    if not is_power_of(dgo, p):
        problems.append(f"defect_group_order not a power of p ({dgo} vs p={p})")
    if record.l < 1:
        problems.append("brauer_degrees must be nonempty")
    if any(f <= 0 for f in record.brauer_degrees):
        problems.append("brauer_degrees must be positive")
    if record.ordinary_degrees is not None:
        if any(x <= 0 for x in record.ordinary_degrees):
            problems.append("ordinary_degrees must be positive")
        if record.k < record.l:
            problems.append(f"k(B)={record.k} < l(B)={record.l}")
    for label, value in (("group_p_part", record.group_p_part), ("group_order", record.group_order)):
        if value is not None and value <= 0:
            problems.append(f"{label} must be positive")
    if record.group_p_part is not None and record.group_p_part > 0:
        if not is_power_of(record.group_p_part, p):
            problems.append(f"group_p_part {record.group_p_part} not a power of p")
        elif record.group_p_part % dgo:
            problems.append("defect_group_order does not divide group_p_part")
    if (
        record.group_order is not None
        and record.group_p_part is not None
        and record.group_order > 0
        and record.group_p_part > 0
        and p_part(record.group_order, p) != record.group_p_part
    ):
        problems.append("group_p_part is not the p-part of group_order")

    c = record.cartan
    if c is not None:
        if c.n != record.l:
            problems.append(f"cartan is {c.n}x{c.n} but l(B)={record.l}")
        if not c.is_symmetric():
            problems.append("cartan not symmetric")
        elif not is_positive_definite(c):
            problems.append("cartan not positive definite")
    dec = record.decomposition
    if dec is not None:
        if any(len(row) != record.l for row in dec) or not dec:
            problems.append(f"decomposition must have l(B)={record.l} columns")
        elif any(x < 0 for row in dec for x in row):
            problems.append("decomposition entries must be nonnegative")
        else:
            if record.k is not None and len(dec) != record.k:
                problems.append(f"decomposition has {len(dec)} rows but k(B)={record.k}")
            if c is not None and c.n == record.l and IntMatrix.gram(dec) != c:
                problems.append("cartan != decomposition^T * decomposition")
            if record.ordinary_degrees is not None and len(dec) == record.k:
                for idx, (row, chi) in enumerate(zip(dec, record.ordinary_degrees)):
                    if sum(d * f for d, f in zip(row, record.brauer_degrees)) != chi:
                        problems.append(
                            f"ordinary degree #{idx} ({chi}) != decomposition row . brauer_degrees"
                        )
    if not problems and record.cartan is not None and record.ordinary_degrees is not None:
        if c.quadratic_form(record.brauer_degrees) != sum(x * x for x in record.ordinary_degrees):
            problems.append("phi^T C phi != sum of squared ordinary degrees")
    return problems


def validate_group(group: GroupRecord) -> list[str]:
    problems: list[str] = []
    if not is_prime(group.p):
        return [f"p={group.p} is not prime"]
    if group.group_order <= 0:
        return ["group_order must be positive"]
    gp = p_part(group.group_order, group.p)
    for b in group.blocks:
        if b.p != group.p:
            problems.append(f"block {b.name!r}: p={b.p} differs from group p={group.p}")
        if b.group_p_part is not None and b.group_p_part != gp:
            problems.append(f"block {b.name!r}: group_p_part {b.group_p_part} != |G|_p = {gp}")
        problems.extend(f"block {b.name!r}: {msg}" for msg in validate(b))
    return problems


def dim_b(record: BlockRecord) -> int:
    """dim B, from ``φᵀCφ`` and/or ``Σ χ(1)²``; the two must agree."""
    via_cartan = via_ordinary = None
    if record.cartan is not None:
        via_cartan = record.cartan.quadratic_form(record.brauer_degrees)
    if record.ordinary_degrees is not None:
        via_ordinary = sum(x * x for x in record.ordinary_degrees)
    if via_cartan is None and via_ordinary is None:
        raise InsufficientDataError("insufficient data: neither ordinary degrees nor a Cartan matrix")
    if via_cartan is not None and via_ordinary is not None and via_cartan != via_ordinary:
        raise InconsistentDataError(
            f"{record.name}: inconsistent data, phi^T C phi = {via_cartan} but sum chi(1)^2 = {via_ordinary}"
        )
    return via_cartan if via_cartan is not None else via_ordinary


def projective_degrees(record: BlockRecord) -> list[int]:
    """Φ_φ(1) for each Brauer character, i.e. ``Cφ``."""
    if record.cartan is None:
        raise InsufficientDataError("insufficient data: no Cartan matrix")
    return record.cartan.matvec(record.brauer_degrees)
