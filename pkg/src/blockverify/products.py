"""Blocks of direct products: B1 ⊗ B2 is a block of G1 × G2.

Characters of the product are indexed lexicographically by factor indices,
``(i, j) -> i * l2 + j``, which is the index order of the Kronecker product.
"""

from __future__ import annotations

from .model import BlockRecord


class PrimeMismatchError(ValueError):
    pass


def _pairwise(xs, ys):
    return tuple(x * y for x in xs for y in ys)


def _kron_rect(a, b):
    return tuple(tuple(x * y for x in ra for y in rb) for ra in a for rb in b)


def _times(x, y):
    return None if x is None or y is None else x * y


def block_product(b1: BlockRecord, b2: BlockRecord, name: str | None = None) -> BlockRecord:
    if b1.p != b2.p:
        raise PrimeMismatchError(f"prime mismatch: {b1.p} vs {b2.p}")
    ordinary = None
    if b1.ordinary_degrees is not None and b2.ordinary_degrees is not None:
        ordinary = _pairwise(b1.ordinary_degrees, b2.ordinary_degrees)
    cartan = None
    if b1.cartan is not None and b2.cartan is not None:
        cartan = b1.cartan.kron(b2.cartan)
    decomposition = None
    if b1.decomposition is not None and b2.decomposition is not None:
        decomposition = _kron_rect(b1.decomposition, b2.decomposition)
    return BlockRecord(
        name if name is not None else f"{b1.name} x {b2.name}",
        b1.p,
        b1.defect_group_order * b2.defect_group_order,
        _pairwise(b1.brauer_degrees, b2.brauer_degrees),
        ordinary_degrees=ordinary,
        cartan=cartan,
        decomposition=decomposition,
        group_p_part=_times(b1.group_p_part, b2.group_p_part),
        group_order=_times(b1.group_order, b2.group_order),
    )


def tensor_power(b: BlockRecord, n: int) -> BlockRecord:
    """``b ⊗ b ⊗ ... ⊗ b`` (n factors), named ``"<name>^n"``."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"tensor power needs n >= 1, got {n!r}")
    out = b
    for _ in range(n - 1):
        out = block_product(out, b)
    return out.renamed(f"{b.name}^{n}")


def trivial_block(p: int) -> BlockRecord:
    """The only block of the trivial group; the unit for :func:`block_product`."""
    return BlockRecord("1", p, 1, (1,), ordinary_degrees=(1,), cartan=((1,),), decomposition=((1,),),
                       group_p_part=1, group_order=1)
