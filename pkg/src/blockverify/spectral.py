"""Certified enclosures of the Perron–Frobenius eigenvalue ρ(C).

ρ(C) of an integer matrix is an algebraic number of high degree, so it is
never computed.  Instead a positive witness vector ``x`` is refined by power
iteration in integer arithmetic and the Collatz–Wielandt quotients

    min_i (Cx)_i / x_i  <=  ρ(C)  <=  max_i (Cx)_i / x_i

give a rational interval.  The bounds hold for *any* positive ``x`` and any
nonnegative ``C``, so they stay sound however the witness was produced;
iteration only makes them tight.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import IntMatrix
from .model import BlockRecord, InsufficientDataError, dim_b
from .verdict import Verdict

DEFAULT_TOLERANCE = Fraction(1, 10**6)
MAX_ITERATIONS = 10_000

# Witness entries are kept integral; once they outgrow _CAP_BITS they are
# shifted (rounding up) back down to _KEEP_BITS.  Both are independent of the
# tolerance, so looser tolerances just stop earlier along the same sequence.
_CAP_BITS = 512
_KEEP_BITS = 256


class NotNonnegativeError(ValueError):
    pass


class ReducibleMatrixError(ValueError):
    pass


@dataclass(frozen=True)
class SpectralEnclosure:
    lower: Fraction
    upper: Fraction
    witness_vector: tuple[Fraction, ...]
    iterations: int = 0

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    def contains(self, value) -> bool:
        return self.lower <= value <= self.upper


def collatz_wielandt(c: IntMatrix, x: Sequence) -> tuple[Fraction, Fraction]:
    """``(min_i (Cx)_i/x_i, max_i (Cx)_i/x_i)`` for a positive vector ``x``."""
    if any(xi <= 0 for xi in x):
        raise ValueError("witness must be strictly positive")
    cx = c.matvec(x)
    quotients = [Fraction(a) / Fraction(b) for a, b in zip(cx, x)]
    return min(quotients), max(quotients)


def rayleigh(c: IntMatrix, v: Sequence) -> Fraction:
    """Exact Rayleigh quotient ``<Cv, v> / <v, v>``."""
    if len(v) != c.n:
        raise ValueError(f"dimension mismatch: {c.n}x{c.n} matrix, vector of length {len(v)}")
    vv = sum(Fraction(a) * a for a in v)
    if vv == 0:
        raise ValueError("zero vector")
    return Fraction(c.quadratic_form([Fraction(a) for a in v])) / vv


def pf_enclosure(
    c: IntMatrix, tolerance=DEFAULT_TOLERANCE, max_iterations: int = MAX_ITERATIONS
) -> SpectralEnclosure:
    """Rational interval of width at most ``tolerance`` containing ρ(c)."""
    tol = Fraction(tolerance)
    if tol <= 0:
        raise ValueError("tolerance not positive")
    if not c.is_nonnegative():
        raise NotNonnegativeError("not nonnegative")
    x = [1] * c.n
    lo = hi = None
    for it in range(max_iterations + 1):
        y = c.matvec(x)
        if any(v == 0 for v in y):
            raise ReducibleMatrixError("reducible matrix (zero row)")
        # every iterate gives valid bounds, so keep the tightest seen
        step_lo = min(Fraction(a, b) for a, b in zip(y, x))
        step_hi = max(Fraction(a, b) for a, b in zip(y, x))
        lo = step_lo if lo is None else max(lo, step_lo)
        hi = step_hi if hi is None else min(hi, step_hi)
        if hi - lo <= tol:
            top = max(x)
            return SpectralEnclosure(lo, hi, tuple(Fraction(xi, top) for xi in x), it)
        bits = max(y).bit_length()
        if bits > _CAP_BITS:
            shift = bits - _KEEP_BITS
            y = [-((-v) >> shift) for v in y]
        x = y
    raise ReducibleMatrixError(
        f"reducible matrix: Collatz-Wielandt bounds did not reach width {tol} "
        f"within {max_iterations} iterations"
    )


def perron_scalar(c: IntMatrix, v: Sequence[int]) -> Fraction | None:
    """λ if ``Cv = λv`` exactly, else None."""
    cv = c.matvec(v)
    lam = Fraction(cv[0], v[0])
    if all(a == lam * b for a, b in zip(cv, v)):
        return lam
    return None


def spectral_chain_check(record: BlockRecord, tolerance=DEFAULT_TOLERANCE) -> list[Verdict]:
    """Rayleigh ≤ ρ(C) ≤ tr C and dim B / ρ(C) ≤ Σφ², each certified.

    Whenever ρ appears on the "small" side of an inequality it is replaced by
    the certified upper end of the enclosure, which keeps every passing
    verdict a proof.  If φ is itself an eigenvector of C (a rational check)
    ρ is known exactly and used instead.
    """
    c = record.cartan
    if c is None:
        raise InsufficientDataError("insufficient data: no Cartan matrix")
    phi = record.brauer_degrees
    enc = pf_enclosure(c, tolerance)
    exact = perron_scalar(c, phi)
    rho_hi = exact if exact is not None else enc.upper
    rho_lo = exact if exact is not None else enc.lower
    how = (
        [f"rho={exact} exactly (C phi = rho phi)"]
        if exact is not None
        else [f"rho in [{enc.lower}, {enc.upper}] (tolerance {Fraction(tolerance)})"]
    )
    dim = dim_b(record)
    sq = record.sum_brauer_squares()
    tr = c.trace()

    rq = Verdict.compare("spectral_chain.rayleigh_le_rho", rayleigh(c, phi), rho_hi, how)

    rho_tr = Verdict.compare("spectral_chain.rho_le_trace", rho_hi, tr, how)
    if not rho_tr.holds and rho_lo <= tr:
        rho_tr = rho_tr.with_notes("undecided at tolerance")

    kw_notes = list(how)
    if exact is not None:
        kw_notes.append(
            "equality case: Phi = rho * phi; for principal blocks of p-solvable groups this is "
            "the p-length 1 case (group structure not checked)"
        )
    else:
        kw_notes.append("phi is not an eigenvector of C, so the inequality is strict")
    kw = Verdict.compare("spectral_chain.kiyota_wada", Fraction(dim) / rho_hi, sq, kw_notes)
    if not kw.holds and Fraction(dim) / rho_lo <= sq:
        kw = kw.with_notes("undecided at tolerance")
    return [rq, rho_tr, kw]
