"""Blocks with cyclic defect group, via their Brauer trees.

A Brauer tree has ``e`` edges (the simple modules, so ``e = l(B)``) and
possibly one exceptional vertex of multiplicity ``m >= 2``; then
``|D| = e*m + 1``.  The Cartan matrix is read off the tree: each vertex
contributes its multiplicity (``m`` for the exceptional vertex, 1 otherwise)
to every pair of edges incident with it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Hashable, Optional, Sequence

from .checkers import ANOMALY, CheckSuiteReport, Skip
from .linalg import IntMatrix, det
from .model import BlockRecord, is_prime
from .verdict import Verdict


class InvalidTreeError(ValueError):
    pass


@dataclass(frozen=True)
class BrauerTree:
    """Edge order fixes the row/column order of the Cartan matrix."""

    vertices: tuple[Hashable, ...]
    edges: tuple[tuple[Hashable, Hashable], ...]
    exceptional: Optional[Hashable] = None
    multiplicity: int = 1
    notes: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        vertices = tuple(self.vertices)
        edges = tuple(tuple(e) for e in self.edges)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)
        m = self.multiplicity
        if isinstance(m, bool) or not isinstance(m, int) or m < 1:
            raise InvalidTreeError(f"multiplicity must be an integer >= 1, got {m!r}")
        if len(set(vertices)) != len(vertices):
            raise InvalidTreeError("duplicate vertex ids")
        if not edges:
            raise InvalidTreeError("a Brauer tree needs at least one edge")
        vset = set(vertices)
        for e in edges:
            if len(e) != 2 or e[0] == e[1]:
                raise InvalidTreeError(f"malformed edge {e!r}")
            if not set(e) <= vset:
                raise InvalidTreeError(f"edge {e!r} uses an unknown vertex")
        if len({frozenset(e) for e in edges}) != len(edges):
            raise InvalidTreeError("repeated edge")
        if len(edges) != len(vertices) - 1 or not _connected(vertices, edges):
            raise InvalidTreeError("edges do not form a tree on the given vertices")
        if self.exceptional is not None and self.exceptional not in vset:
            raise InvalidTreeError(f"exceptional vertex {self.exceptional!r} is not a vertex")
        if m >= 2 and self.exceptional is None:
            raise InvalidTreeError("multiplicity >= 2 requires an exceptional vertex")
        if m == 1 and self.exceptional is not None:
            object.__setattr__(self, "exceptional", None)
            object.__setattr__(
                self, "notes", self.notes + ("m = 1: exceptional vertex marking dropped",)
            )

    @classmethod
    def star(cls, e: int, m: int = 1) -> "BrauerTree":
        """``e`` leaves around a centre that is exceptional when ``m >= 2``."""
        leaves = tuple(f"v{i}" for i in range(1, e + 1))
        return cls(("c",) + leaves, tuple(("c", v) for v in leaves), "c" if m >= 2 else None, m)

    @classmethod
    def path(cls, e: int, m: int = 1, exceptional_index: int = 0) -> "BrauerTree":
        """Line ``v0 - v1 - ... - ve`` with the exceptional vertex at ``v{exceptional_index}``."""
        vs = tuple(f"v{i}" for i in range(e + 1))
        return cls(
            vs,
            tuple(zip(vs, vs[1:])),
            vs[exceptional_index] if m >= 2 else None,
            m,
        )

    @property
    def e(self) -> int:
        return len(self.edges)

    @property
    def defect_group_order(self) -> int:
        return self.e * self.multiplicity + 1

    def mult(self, v) -> int:
        return self.multiplicity if v == self.exceptional else 1

    def degree(self, v) -> int:
        return sum(v in edge for edge in self.edges)

    def to_dict(self) -> dict:
        out = {
            "vertices": [str(v) for v in self.vertices],
            "edges": [[str(a), str(b)] for a, b in self.edges],
            "multiplicity": self.multiplicity,
        }
        if self.exceptional is not None:
            out["exceptional"] = str(self.exceptional)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "BrauerTree":
        return cls(
            tuple(data["vertices"]),
            tuple(tuple(e) for e in data["edges"]),
            data.get("exceptional"),
            data.get("multiplicity", 1),
        )


def _connected(vertices, edges) -> bool:
    adj = {v: set() for v in vertices}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen = {vertices[0]}
    stack = [vertices[0]]
    while stack:
        for w in adj[stack.pop()] - seen:
            seen.add(w)
            stack.append(w)
    return len(seen) == len(vertices)


def validate_tree(tree: BrauerTree, p: int | None = None) -> list[str]:
    """Problems beyond the structural ones the constructor already rejects."""
    if p is None:
        return []
    if not is_prime(p):
        return [f"p={p} is not prime"]
    n = tree.defect_group_order
    while n % p == 0:
        n //= p
    problems = []
    if n != 1 or tree.defect_group_order == 1:
        problems.append(f"|D| = em+1 = {tree.defect_group_order} is not a power of p={p}")
    if (p - 1) % tree.e:
        problems.append(f"e = {tree.e} edges does not divide p-1 = {p - 1}")
    return problems


@lru_cache(maxsize=4096)
def cartan_from_tree(tree: BrauerTree) -> IntMatrix:
    edges = tree.edges
    rows = []
    for i, ei in enumerate(edges):
        row = []
        for j, ej in enumerate(edges):
            if i == j:
                row.append(tree.mult(ei[0]) + tree.mult(ei[1]))
            else:
                row.append(sum(tree.mult(v) for v in set(ei) & set(ej)))
        rows.append(tuple(row))
    return IntMatrix(tuple(rows))


def star_matrix(e: int, m: int) -> IntMatrix:
    return IntMatrix(tuple(tuple(m + 1 if i == j else m for j in range(e)) for i in range(e)))


def is_star(tree: BrauerTree) -> bool:
    """All edges share a vertex, which is the exceptional one if there is one."""
    common = set(tree.edges[0])
    for edge in tree.edges[1:]:
        common &= set(edge)
    if not common:
        return False
    return tree.exceptional is None or tree.exceptional in common


def star_dominance_check(tree: BrauerTree) -> Verdict:
    """Entrywise ``0 <= C <= S`` where ``S`` is the star matrix for the same e, m.

    ``lhs`` is the total mass ``Σ c_ij`` and ``rhs`` is ``Σ s_ij``; under
    entrywise dominance the two are equal exactly when ``C == S``.  Should an
    entry ever violate dominance, ``lhs`` is pushed above ``rhs`` so the
    verdict fails.
    """
    c = cartan_from_tree(tree)
    s = star_matrix(tree.e, tree.multiplicity)
    bad = [
        (i, j)
        for i in range(c.n)
        for j in range(c.n)
        if not 0 <= c[i, j] <= s[i, j]
    ]
    total_s = sum(map(sum, s.rows))
    notes = []
    if bad:
        lhs = total_s + len(bad)
        notes.append(ANOMALY + f"entrywise dominance violated at {bad}")
    else:
        lhs = sum(map(sum, c.rows))
    return Verdict.compare("star_dominance", lhs, total_s, notes)


def cauchy_schwarz_step(degrees: Sequence[int]) -> Verdict:
    """``(Σφ_i)² ≤ e·Σφ_i²``."""
    return Verdict.compare(
        "cauchy_schwarz", sum(degrees) ** 2, len(degrees) * sum(f * f for f in degrees)
    )


def cyclic_inequality(tree: BrauerTree, brauer_degrees: Sequence[int]) -> Verdict:
    """dim B / |D| ≤ Σφ(1)², with dim B = φᵀ C φ from the tree.

    Equality needs C to be the star matrix and the Cauchy–Schwarz step to be
    tight, i.e. a star with exceptional centre *and* all degrees equal.  The
    verdict flags any disagreement with that.
    """
    if len(brauer_degrees) != tree.e:
        raise ValueError(f"length mismatch: {len(brauer_degrees)} degrees for {tree.e} edges")
    c = cartan_from_tree(tree)
    dim = c.quadratic_form(brauer_degrees)
    rhs = sum(f * f for f in brauer_degrees)
    v = Verdict.compare("cyclic_inequality", Fraction(dim, tree.defect_group_order), rhs, [f"dim B={dim}"])
    star = is_star(tree)
    constant = len(set(brauer_degrees)) == 1
    if v.equality and not star:
        v = v.with_notes(ANOMALY + "equality for a tree that is not a star")
    elif v.equality != (star and constant):
        v = v.with_notes(ANOMALY + f"equality={v.equality} but star={star}, constant degrees={constant}")
    else:
        v = v.with_notes(f"star={star}")
    return v


def tree_block(tree: BrauerTree, brauer_degrees: Sequence[int], name: str = "cyclic block", p: int | None = None) -> BlockRecord:
    """The block record of a cyclic-defect block with this tree."""
    dgo = tree.defect_group_order
    if p is None:
        p = next((q for q in range(2, dgo + 1) if dgo % q == 0), dgo)
    return BlockRecord(name, p, dgo, tuple(brauer_degrees), cartan=cartan_from_tree(tree))


def tree_suite(tree: BrauerTree, brauer_degrees: Sequence[int] | None = None, name: str = "brauer tree") -> CheckSuiteReport:
    c = cartan_from_tree(tree)
    d = tree.defect_group_order
    verdicts = [
        star_dominance_check(tree),
        Verdict.compare("tree_determinant", det(c), d, ["det C = em+1 expected"]),
        Verdict.compare("tree_trace_bound", c.trace(), tree.e * d, [f"tr C={c.trace()}"]),
    ]
    skipped = []
    if brauer_degrees is None:
        for check_id in ("cyclic_inequality", "cauchy_schwarz"):
            skipped.append(Skip(check_id, "no Brauer degrees supplied"))
    else:
        verdicts.append(cyclic_inequality(tree, brauer_degrees))
        verdicts.append(cauchy_schwarz_step(brauer_degrees))
    return CheckSuiteReport(name, verdicts, skipped)
