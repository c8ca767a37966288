"""Linear combinations of basis diagrams and their products."""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .algebra import AdmissibilityClass, AlgebraKind, classify, enumerate_basis, reduce
from .errors import IllegalLetter, KindMismatch, NotInBasis
from .scalar import ONE, Coercible, Scalar
from .tangle import DecoratedTangle, concatenate


@lru_cache(maxsize=1 << 18)
def diagram_product(kind: AlgebraKind, x: DecoratedTangle, y: DecoratedTangle) -> tuple[Scalar, DecoratedTangle]:
    """``x`` stacked above ``y`` and reduced in ``kind``."""
    return reduce(concatenate(x, y), kind)


class Element:
    """A finite ``Scalar``-weighted sum of basis diagrams of one algebra."""

    __slots__ = ("kind", "_terms")

    def __init__(self, kind: AlgebraKind, terms: Mapping[DecoratedTangle, Coercible] | None = None, *, check: bool = True):
        self.kind = kind
        acc: dict[DecoratedTangle, Scalar] = {}
        for t, c in (terms or {}).items():
            c = Scalar.coerce(c)
            if c.is_zero():
                continue
            acc[t] = acc[t] + c if t in acc else c
        acc = {t: c for t, c in acc.items() if not c.is_zero()}
        if check:
            for t in acc:
                if classify(t, kind) is AdmissibilityClass.NOT_BASIS:
                    raise NotInBasis(f"{t} is not a basis diagram of {kind.describe()}")
        self._terms = acc

    @classmethod
    def zero(cls, kind: AlgebraKind) -> Element:
        return cls(kind)

    @classmethod
    def one(cls, kind: AlgebraKind) -> Element:
        return cls(kind, {kind.identity(): ONE})

    @classmethod
    def diagram(cls, kind: AlgebraKind, t: DecoratedTangle, coeff: Coercible = 1) -> Element:
        return cls(kind, {t: coeff})

    @classmethod
    def generator(cls, kind: AlgebraKind, symbol: str) -> Element:
        return cls(kind, {kind.generator(symbol): ONE})

    @property
    def terms(self) -> dict[DecoratedTangle, Scalar]:
        return dict(self._terms)

    def items(self) -> list[tuple[DecoratedTangle, Scalar]]:
        return sorted(self._terms.items(), key=lambda tc: tc[0].sort_key())

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, t: DecoratedTangle) -> Scalar:
        return self._terms.get(t, Scalar())

    def _same_kind(self, other: Element) -> None:
        if other.kind != self.kind:
            raise KindMismatch(f"{self.kind.describe()} vs {other.kind.describe()}")

    def __add__(self, other: Element) -> Element:
        if not isinstance(other, Element):
            return NotImplemented
        self._same_kind(other)
        acc = dict(self._terms)
        for t, c in other._terms.items():
            acc[t] = acc[t] + c if t in acc else c
        return Element(self.kind, acc, check=False)

    def __neg__(self) -> Element:
        return Element(self.kind, {t: -c for t, c in self._terms.items()}, check=False)

    def __sub__(self, other: Element) -> Element:
        return self + (-other)

    def scale(self, c: Coercible) -> Element:
        c = Scalar.coerce(c)
        return Element(self.kind, {t: c * x for t, x in self._terms.items()}, check=False)

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.kind == other.kind and self._terms == other._terms

    def __hash__(self):
        return hash((self.kind, frozenset(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for t, c in self.items():
            if c == ONE:
                parts.append(f"{{{t}}}")
            else:
                coeff = str(c) if c.is_monomial() else f"({c})"
                parts.append(f"{coeff} · {{{t}}}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Element({self.kind.variant.value}, {self})"


def multiply(x: Element, y: Element) -> Element:
    x._same_kind(y)
    kind = x.kind
    acc: dict[DecoratedTangle, Scalar] = {}
    for tx, cx in x._terms.items():
        for ty, cy in y._terms.items():
            s, t = diagram_product(kind, tx, ty)
            if s.is_zero():
                continue
            c = cx * cy * s
            acc[t] = acc[t] + c if t in acc else c
    return Element(kind, acc)


# words -------------------------------------------------------------------

_TOKEN_RE = re.compile(r"^e(~|\d+)?$")


def normalize_letter(token: str) -> str:
    tok = token.strip().replace("_", "")
    if tok in ("ebar1", "e1bar"):
        tok = "e~"
    if not _TOKEN_RE.match(tok):
        raise IllegalLetter(f"unknown letter {token!r}")
    return tok


@dataclass(frozen=True)
class GeneratorWord:
    """A word in the generators of ``kind``.

    Tokens are ``e``, ``e~`` and ``e<i>``.  ``extended`` admits every
    named tangle ``e``, ``e~``, ``e1``.. of the carrier, which the word
    rewrites need (``e~`` inside the blob algebra, for instance).
    """

    kind: AlgebraKind
    letters: tuple[str, ...]
    extended: bool = False

    def __post_init__(self):
        letters = tuple(normalize_letter(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        legal = set(self.alphabet())
        for x in letters:
            if x not in legal:
                raise IllegalLetter(f"{x} is not a generator of {self.kind.describe()}")

    def alphabet(self) -> tuple[str, ...]:
        if self.extended:
            m = self.kind.nodes
            return ("e", "e~") + tuple(f"e{i}" for i in range(1, m))
        return self.kind.standard_generators()

    @classmethod
    def parse(cls, kind: AlgebraKind, text: str, extended: bool = False) -> GeneratorWord:
        return cls(kind, tuple(text.split()), extended)

    def count(self, letter: str) -> int:
        return self.letters.count(letter)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(self.letters)


def evaluate_diagram_word(kind: AlgebraKind, letters: Iterable[str]) -> tuple[Scalar, DecoratedTangle]:
    """Left-to-right product of named tangles, kept as (scalar, diagram)."""
    scalar, t = ONE, kind.identity()
    for x in letters:
        s, t = diagram_product(kind, t, kind.generator(x))
        scalar = scalar * s
        if scalar.is_zero():
            return scalar, t
    return scalar, t


def evaluate_word(word: GeneratorWord) -> Element:
    scalar, t = evaluate_diagram_word(word.kind, word.letters)
    if scalar.is_zero():
        return Element.zero(word.kind)
    return Element(word.kind, {t: scalar})


def span_reachability(kind: AlgebraKind) -> frozenset[DecoratedTangle]:
    """Diagrams reachable from the identity by right multiplication by generators."""
    gens = [kind.generator(x) for x in kind.standard_generators()]
    start = kind.identity()
    seen = {start}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        for g in gens:
            s, u = diagram_product(kind, t, g)
            if not s.is_zero() and u not in seen:
                seen.add(u)
                queue.append(u)
    return frozenset(seen)


@dataclass(frozen=True)
class StructureTable:
    kind: AlgebraKind
    basis: tuple[DecoratedTangle, ...]
    entries: tuple[tuple[int, int, int, Scalar], ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def product(self, i: int, j: int) -> dict[int, Scalar]:
        return {k: c for (a, b, k, c) in self.entries if a == i and b == j}

    def to_json(self) -> dict:
        return {
            "kind": self.kind.variant.value,
            "rank": self.kind.rank,
            "params": self.kind.params(),
            "basis": [str(t) for t in self.basis],
            "entries": [{"i": i, "j": j, "k": k, "coeff": c.to_json()} for i, j, k, c in self.entries],
        }


def structure_constants(kind: AlgebraKind) -> StructureTable:
    basis = enumerate_basis(kind)
    index = {t: k for k, t in enumerate(basis)}
    entries = []
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            s, t = diagram_product(kind, x, y)
            if s.is_zero():
                continue
            if t not in index:
                raise NotInBasis(f"product of basis diagrams {i},{j} left the basis: {t}")
            entries.append((i, j, index[t], s))
    entries.sort(key=lambda e: e[:3])
    return StructureTable(kind, basis, tuple(entries))


