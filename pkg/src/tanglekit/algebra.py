"""Relation systems, normal forms and diagram bases.

Five algebras share the decorated-tangle carrier and differ only in how a
raw composite is reduced:

* ``TL``: Temperley-Lieb; undecorated, every loop is worth ``delta``.
* ``BLOB`` and ``TYPE_B``: blobs are idempotent, a plain loop is worth
  ``delta`` and a blobbed loop ``delta_prime``.  ``TYPE_B`` of rank n lives
  on n+1 strands.
* ``TYPE_D``: blobs cancel in pairs, blobbed loops merge
  (two of them give ``delta`` times one) and a blobbed loop strips every
  arc of its blob.  At most one blobbed loop survives.
* ``D_QUOTIENT``: as ``TYPE_D`` with a surviving blobbed loop set to zero.
"""

from __future__ import annotations

import enum
import itertools
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import DecoratedInputForTL, FaceMismatch
from .scalar import ONE, QUANTUM_TWO, ZERO, Scalar, d, dp
from .tangle import DecoratedTangle, enumerate_matchings, generator, identity


class Variant(enum.Enum):
    TL = "TL"
    BLOB = "Blob"
    TYPE_B = "TypeB"
    TYPE_D = "TypeD"
    D_QUOTIENT = "DQuotient"


class AdmissibilityClass(enum.Enum):
    B1 = "B1"
    B1_PRIME = "B1prime"
    B2 = "B2"
    D1 = "D1"
    D2 = "D2"
    TL_PLAIN = "TLPlain"
    BLOB_DIAGRAM = "BlobDiagram"
    NOT_BASIS = "NotBasis"


@dataclass(frozen=True)
class AlgebraKind:
    variant: Variant
    rank: int
    delta: Scalar = field(default=d)
    delta_prime: Scalar | None = None

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be at least 1")
        if self.variant in (Variant.BLOB, Variant.TYPE_B) and self.delta_prime is None:
            raise ValueError(f"{self.variant.value} needs delta_prime")

    @classmethod
    def tl(cls, n: int, delta: Scalar = d) -> AlgebraKind:
        return cls(Variant.TL, n, delta)

    @classmethod
    def blob(cls, n: int, delta: Scalar = d, delta_prime: Scalar = dp) -> AlgebraKind:
        return cls(Variant.BLOB, n, delta, delta_prime)

    @classmethod
    def type_b(cls, n: int, delta: Scalar = QUANTUM_TWO, delta_prime: Scalar | None = None) -> AlgebraKind:
        if delta_prime is None:
            delta_prime = QUANTUM_TWO / 2
        return cls(Variant.TYPE_B, n, delta, delta_prime)

    @classmethod
    def type_d(cls, n: int, delta: Scalar = QUANTUM_TWO) -> AlgebraKind:
        return cls(Variant.TYPE_D, n, delta)

    @classmethod
    def d_quotient(cls, n: int, delta: Scalar = QUANTUM_TWO) -> AlgebraKind:
        return cls(Variant.D_QUOTIENT, n, delta)

    @property
    def nodes(self) -> int:
        """Strand count per face."""
        return self.rank + 1 if self.variant is Variant.TYPE_B else self.rank

    @property
    def in_claimed_range(self) -> bool:
        if self.variant is Variant.TYPE_B:
            return self.rank >= 2
        if self.variant is Variant.TYPE_D:
            return self.rank >= 4
        return True

    def standard_generators(self) -> tuple[str, ...]:
        m = self.nodes
        plain = tuple(f"e{i}" for i in range(1, m))
        if self.variant is Variant.TL:
            return plain
        if self.variant is Variant.BLOB:
            return ("e",) + plain
        if self.variant is Variant.TYPE_B:
            return ("e~",) + plain[1:]
        return ("e~",) + plain

    def params(self) -> dict:
        out = {"delta": self.delta.to_json()}
        if self.delta_prime is not None:
            out["delta_prime"] = self.delta_prime.to_json()
        return out

    def describe(self) -> str:
        text = f"{self.variant.value}(rank={self.rank}, delta={self.delta}"
        if self.delta_prime is not None:
            text += f", delta_prime={self.delta_prime}"
        return text + ")"

    def identity(self) -> DecoratedTangle:
        return identity(self.nodes)

    def generator(self, symbol: str) -> DecoratedTangle:
        return generator(symbol, self.nodes)


@lru_cache(maxsize=None)
def _power(base: Scalar, k: int) -> Scalar:
    return base ** k


def _weight(kind: AlgebraKind, plain: int, blobbed: int) -> Scalar:
    out = _power(kind.delta, plain) if plain else ONE
    if blobbed:
        out = out * _power(kind.delta_prime, blobbed)
    return out


def _check_faces(raw: DecoratedTangle, kind: AlgebraKind) -> None:
    if raw.n_north != kind.nodes or raw.n_south != kind.nodes:
        raise FaceMismatch(f"{kind.variant.value} rank {kind.rank} needs {kind.nodes}|{kind.nodes}, got {raw.n_north}|{raw.n_south}")


def reduce(raw: DecoratedTangle, kind: AlgebraKind) -> tuple[Scalar, DecoratedTangle]:
    """Normal form of a raw tangle as (scalar, diagram)."""
    _check_faces(raw, kind)
    variant = kind.variant
    if variant is Variant.TL:
        if any(raw.decorations) or any(raw.loops):
            raise DecoratedInputForTL("Temperley-Lieb tangles carry no decorations")
        if not raw.loops:
            return ONE, raw
        return _weight(kind, len(raw.loops), 0), raw.without_loops()

    if variant in (Variant.BLOB, Variant.TYPE_B):
        decos = tuple(min(r, 1) for r in raw.decorations)
        plain = sum(1 for c in raw.loops if c == 0)
        blobbed = len(raw.loops) - plain
        return _weight(kind, plain, blobbed), _rebuild(raw, decos, ())

    odd = sum(1 for c in raw.loops if c % 2)
    even = len(raw.loops) - odd
    if odd:
        if variant is Variant.D_QUOTIENT:
            return ZERO, _rebuild(raw, (0,) * len(raw.arcs), (1,))
        return _weight(kind, even + odd - 1, 0), _rebuild(raw, (0,) * len(raw.arcs), (1,))
    decos = tuple(r % 2 for r in raw.decorations)
    return _weight(kind, even, 0), _rebuild(raw, decos, ())


def _rebuild(raw: DecoratedTangle, decos: tuple[int, ...], loops: tuple[int, ...]) -> DecoratedTangle:
    if decos == raw.decorations and loops == raw.loops:
        return raw
    return DecoratedTangle(raw.n_north, raw.n_south, raw.arcs, decos, loops)


def _applicable(variant: Variant, decos: list[int], loops: list[int]) -> list[tuple]:
    """Every single rewrite step available in the current state."""
    steps: list[tuple] = []
    if variant is Variant.TL:
        steps += [("drop_loop", j) for j, c in enumerate(loops) if c == 0]
    elif variant in (Variant.BLOB, Variant.TYPE_B):
        steps += [("arc_idem", i) for i, r in enumerate(decos) if r >= 2]
        steps += [("loop_idem", j) for j, c in enumerate(loops) if c >= 2]
        steps += [("drop_loop", j) for j, c in enumerate(loops) if c <= 1]
    else:
        steps += [("arc_pair", i) for i, r in enumerate(decos) if r >= 2]
        steps += [("loop_pair", j) for j, c in enumerate(loops) if c >= 2]
        steps += [("drop_loop", j) for j, c in enumerate(loops) if c == 0]
        ones = [j for j, c in enumerate(loops) if c == 1]
        if ones:
            steps += [("absorb", i) for i, r in enumerate(decos) if r >= 1]
            steps += [("merge", j, k) for j, k in itertools.combinations(ones, 2)]
            if variant is Variant.D_QUOTIENT:
                steps.append(("kill",))
    return steps


def reduce_by_rules(raw: DecoratedTangle, kind: AlgebraKind, rng: random.Random | None = None) -> tuple[Scalar, DecoratedTangle]:
    """Reduce one local relation at a time.

    With ``rng`` the next step is drawn at random from all applicable ones;
    otherwise the first applicable step is taken.  The result must agree
    with :func:`reduce` whatever the order.
    """
    _check_faces(raw, kind)
    variant = kind.variant
    if variant is Variant.TL and (any(raw.decorations) or any(raw.loops)):
        raise DecoratedInputForTL("Temperley-Lieb tangles carry no decorations")
    decos = list(raw.decorations)
    loops = list(raw.loops)
    plain = blobbed = 0
    while True:
        steps = _applicable(variant, decos, loops)
        if not steps:
            break
        step = rng.choice(steps) if rng is not None else steps[0]
        name = step[0]
        if name == "kill":
            return ZERO, DecoratedTangle(raw.n_north, raw.n_south, raw.arcs, (0,) * len(decos), (1,))
        if name == "arc_idem":
            decos[step[1]] -= 1
        elif name == "loop_idem":
            loops[step[1]] -= 1
        elif name == "arc_pair":
            decos[step[1]] -= 2
        elif name == "loop_pair":
            loops[step[1]] -= 2
        elif name == "absorb":
            decos[step[1]] -= 1
        elif name == "drop_loop":
            c = loops.pop(step[1])
            if c == 0:
                plain += 1
            else:
                blobbed += 1
        elif name == "merge":
            loops.pop(step[2])
            plain += 1
    scalar = _weight(kind, plain, blobbed)
    return scalar, DecoratedTangle(raw.n_north, raw.n_south, raw.arcs, tuple(decos), tuple(sorted(loops)))


def classify(t: DecoratedTangle, kind: AlgebraKind) -> AdmissibilityClass:
    """Basis class of a reduced diagram, or ``NOT_BASIS``."""
    A = AdmissibilityClass
    m = kind.nodes
    if t.n_north != m or t.n_south != m:
        return A.NOT_BASIS
    if any(r > 1 for r in t.decorations) or any(c > 1 for c in t.loops):
        return A.NOT_BASIS
    variant = kind.variant
    if variant is Variant.TL:
        return A.TL_PLAIN if t.is_undecorated() and not t.loops else A.NOT_BASIS
    if variant is Variant.BLOB:
        return A.BLOB_DIAGRAM if not t.loops else A.NOT_BASIS
    if variant is Variant.TYPE_B:
        if t.loops:
            return A.NOT_BASIS
        north, south = t.arc_at[1], t.arc_at[t.size]
        decorated = sum(1 for r in t.decorations if r)
        if north == south:
            if t.decorations[north] == 0:
                return A.B1 if decorated == 0 else A.NOT_BASIS
            if decorated == 1 and t.has_non_propagating():
                return A.B1_PRIME
            return A.NOT_BASIS
        if t.decorations[north] and t.decorations[south]:
            return A.B2
        return A.NOT_BASIS
    # TYPE_D and D_QUOTIENT
    if not t.loops:
        return A.D2 if sum(t.decorations) % 2 == 0 else A.NOT_BASIS
    if variant is Variant.TYPE_D and t.loops == (1,) and not any(t.decorations) and t.has_non_propagating():
        return A.D1
    return A.NOT_BASIS


def _blob_variants(matching: DecoratedTangle):
    """Every way of putting at most one blob on each west-exposed arc."""
    slots = [k for k, flag in enumerate(matching.exposed) if flag]
    for choice in itertools.product((0, 1), repeat=len(slots)):
        decos = [0] * len(matching.arcs)
        for k, r in zip(slots, choice):
            decos[k] = r
        yield DecoratedTangle(matching.n_north, matching.n_south, matching.arcs, tuple(decos), ())


@lru_cache(maxsize=64)
def enumerate_basis(kind: AlgebraKind) -> tuple[DecoratedTangle, ...]:
    """Basis diagrams of ``kind`` in a fixed deterministic order."""
    m = kind.nodes
    out = []
    for matching in enumerate_matchings(m, m):
        if kind.variant is Variant.TL:
            candidates = [matching]
        else:
            candidates = list(_blob_variants(matching))
            if kind.variant is Variant.TYPE_D:
                candidates.append(matching.with_loops((1,)))
        out.extend(t for t in candidates if classify(t, kind) is not AdmissibilityClass.NOT_BASIS)
    return tuple(out)


def count_by_class(kind: AlgebraKind) -> dict[AdmissibilityClass, int]:
    counts = Counter(classify(t, kind) for t in enumerate_basis(kind))
    return {cls: counts[cls] for cls in expected_counts(kind)}


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def expected_counts(kind: AlgebraKind) -> dict[AdmissibilityClass, int]:
    """Closed-form class sizes for ``kind``."""
    A = AdmissibilityClass
    n = kind.rank
    c, central = catalan(n), comb(2 * n, n)
    if kind.variant is Variant.TL:
        return {A.TL_PLAIN: c}
    if kind.variant is Variant.BLOB:
        return {A.BLOB_DIAGRAM: central}
    if kind.variant is Variant.TYPE_B:
        return {A.B1: c, A.B1_PRIME: c - 1, A.B2: central - c}
    if kind.variant is Variant.TYPE_D:
        return {A.D1: c - 1, A.D2: central // 2}
    return {A.D2: central // 2}


def expected_dimension(kind: AlgebraKind) -> int:
    """Total dimension from the closed forms quoted for each family."""
    n = kind.rank
    c = catalan(n)
    if kind.variant is Variant.TL:
        return c
    if kind.variant is Variant.BLOB:
        return comb(2 * n, n)
    if kind.variant is Variant.TYPE_B:
        return (n + 2) * c - 1
    if kind.variant is Variant.TYPE_D:
        total = Fraction(n + 3, 2) * c - 1
        assert total.denominator == 1
        return int(total)
    return comb(2 * n, n) // 2
