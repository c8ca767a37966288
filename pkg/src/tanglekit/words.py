"""Reduced words in the blob and Temperley-Lieb generators.

A word is *reduced* when no shorter word evaluates to a nonzero multiple
of the same diagram.  Since every product of generators is a nonzero
monomial times one diagram, the minimal length of each diagram is its
breadth-first distance from the identity, which makes the certificate
exact.  :func:`shortest_word_oracle` is the independent route: it
enumerates every word up to a length bound and compares elements exactly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .algebra import AlgebraKind, Variant, enumerate_basis
from .element import Element, GeneratorWord, diagram_product, evaluate_diagram_word, evaluate_word
from .errors import ConditionFailed, IllegalLetter, NotPlainTL, NotReduced
from .report import VerificationReport
from .scalar import ONE, Scalar
from .tangle import DecoratedTangle


@dataclass(frozen=True)
class WordCondition:
    b_condition: bool
    d_condition: bool
    is_reduced: bool


def _blob_letters(word: GeneratorWord) -> tuple[str, ...]:
    for x in word.letters:
        if x == "e~":
            raise IllegalLetter("conditions are defined on words in e, e1, e2, ...")
    return word.letters


def b_condition(word: GeneratorWord) -> bool:
    letters = _blob_letters(word)
    es = [i for i, x in enumerate(letters) if x == "e"]
    ones = [i for i, x in enumerate(letters) if x == "e1"]
    if not es and not ones:
        return True
    if not es or not ones:
        return False
    return es[0] < ones[0] and ones[-1] < es[-1]


def d_condition(word: GeneratorWord) -> bool:
    return _blob_letters(word).count("e") % 2 == 0


@lru_cache(maxsize=64)
def diagram_lengths(kind: AlgebraKind) -> dict[DecoratedTangle, int]:
    """Minimal word length of every diagram reachable from the identity."""
    gens = [kind.generator(x) for x in kind.standard_generators()]
    start = kind.identity()
    dist = {start: 0}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        for g in gens:
            s, u = diagram_product(kind, t, g)
            if not s.is_zero() and u not in dist:
                dist[u] = dist[t] + 1
                queue.append(u)
    return dist


def is_reduced(word: GeneratorWord) -> bool:
    scalar, t = evaluate_diagram_word(word.kind, word.letters)
    if scalar.is_zero():
        return False
    return diagram_lengths(word.kind).get(t) == len(word)


def word_conditions(word: GeneratorWord) -> WordCondition:
    return WordCondition(b_condition(word), d_condition(word), is_reduced(word))


def _require_reduced(word: GeneratorWord) -> None:
    if not is_reduced(word):
        raise NotReduced(f"{word} is not reduced")


def rewrite_b(word: GeneratorWord, check_reduced: bool = True) -> GeneratorWord:
    """Rewrite a reduced word with the B-condition into e~, e2, e3, ...

    Doubling every interior ``e`` and commuting the copies onto the
    neighbouring ``e1`` turns each ``e1`` into ``e e1 e = e~`` and leaves
    no stray ``e``; the net effect is computed directly.
    """
    if not b_condition(word):
        raise ConditionFailed(f"{word} fails the B-condition")
    if check_reduced:
        _require_reduced(word)
    _check_alternation(word.letters)
    out = tuple("e~" if x == "e1" else x for x in word.letters if x != "e")
    return GeneratorWord(word.kind, out, extended=True)


def rewrite_d(word: GeneratorWord, check_reduced: bool = True) -> GeneratorWord:
    """Rewrite a reduced word with an even number of e into e~, e1, e2, ...

    The e letters are paired off first with second, third with fourth and
    so on; the single e1 between each pair becomes e~.
    """
    if not d_condition(word):
        raise ConditionFailed(f"{word} has an odd number of e")
    if check_reduced:
        _require_reduced(word)
    letters = list(word.letters)
    es = [i for i, x in enumerate(letters) if x == "e"]
    for a, b in zip(es[::2], es[1::2]):
        between = [i for i in range(a + 1, b) if letters[i] == "e1"]
        if len(between) != 1:
            raise ConditionFailed(f"expected exactly one e1 between paired e at {a} and {b}")
        letters[between[0]] = "e~"
    out = tuple(x for x in letters if x != "e")
    return GeneratorWord(word.kind, out, extended=True)


def _check_alternation(letters) -> None:
    marks = [x for x in letters if x in ("e", "e1")]
    for x, y in zip(marks, marks[1:]):
        if x == y:
            raise ConditionFailed("occurrences of e and e1 do not alternate")


def alternates(letters) -> bool:
    marks = [x for x in letters if x in ("e", "e1")]
    return all(x != y for x, y in zip(marks, marks[1:]))


@dataclass(frozen=True)
class OracleResult:
    length: int | None
    witnesses: tuple[GeneratorWord, ...]

    @property
    def found(self) -> bool:
        return self.length is not None


@lru_cache(maxsize=16)
def _word_levels(kind: AlgebraKind, max_len: int) -> dict[tuple[DecoratedTangle, Scalar], tuple[int, tuple[tuple[str, ...], ...]]]:
    """Every word up to ``max_len`` grouped by the element it evaluates to.

    Only the witnesses of minimal length are kept per element.
    """
    alphabet = kind.standard_generators()
    gens = {x: kind.generator(x) for x in alphabet}
    best: dict[tuple[DecoratedTangle, Scalar], tuple[int, list]] = {}
    level = [((), ONE, kind.identity())]
    for length in range(max_len + 1):
        for letters, scalar, t in level:
            if scalar.is_zero():
                continue
            key = (t, scalar)
            if key not in best:
                best[key] = (length, [letters])
            elif best[key][0] == length:
                best[key][1].append(letters)
        if length == max_len:
            break
        nxt = []
        for letters, scalar, t in level:
            for x in alphabet:
                s, u = diagram_product(kind, t, gens[x])
                nxt.append((letters + (x,), scalar * s, u))
        level = nxt
    return {k: (n, tuple(ws)) for k, (n, ws) in best.items()}


def shortest_word_oracle(target: Element, kind: AlgebraKind | None = None, max_len: int = 8) -> OracleResult:
    """Brute-force minimal length of a word equal to ``target``."""
    kind = kind or target.kind
    terms = target.items()
    if len(terms) != 1:
        return OracleResult(None, ())
    t, c = terms[0]
    hit = _word_levels(kind, max_len).get((t, c))
    if hit is None:
        return OracleResult(None, ())
    length, words = hit
    return OracleResult(length, tuple(GeneratorWord(kind, w) for w in words))


def line_crossing_length(t: DecoratedTangle) -> tuple[int, tuple[int, ...]]:
    """Half the number of arc crossings with the vertical lines between strands.

    ``c[i-1]`` counts arcs with exactly one end among the first ``i``
    nodes of each face; that is the minimal number of intersections with
    the line between strands i and i+1.
    """
    n = t.n_north
    if t.n_south != n or t.loops or any(t.decorations):
        raise NotPlainTL("line crossing length is defined for Temperley-Lieb basis diagrams")
    counts = []
    for i in range(1, n):
        c = 0
        for k in range(len(t.arcs)):
            (fa, ia), (fb, ib) = t.arc_nodes(k)
            c += (ia <= i) != (ib <= i)
        counts.append(c)
    total = sum(counts)
    assert total % 2 == 0
    return total // 2, tuple(counts)


def all_words(kind: AlgebraKind, max_len: int):
    """Every word over the standard generators, shortest first, with its value."""
    alphabet = kind.standard_generators()
    gens = {x: kind.generator(x) for x in alphabet}
    level = [((), ONE, kind.identity())]
    for length in range(max_len + 1):
        yield from level
        if length == max_len:
            return
        nxt = []
        for letters, scalar, t in level:
            if scalar.is_zero():
                continue
            for x in alphabet:
                s, u = diagram_product(kind, t, gens[x])
                nxt.append((letters + (x,), scalar * s, u))
        level = nxt


def reduced_words(kind: AlgebraKind, max_len: int):
    """Certified-reduced words up to ``max_len`` with their diagrams."""
    lengths = diagram_lengths(kind)
    for letters, scalar, t in all_words(kind, max_len):
        if not scalar.is_zero() and lengths.get(t) == len(letters):
            yield letters, scalar, t


def verify_word_lemmas(kind: AlgebraKind, max_len: int = 8) -> VerificationReport:
    """Check the reduced-word lemmas on every word up to ``max_len``.

    TL kinds: extremal generators occur once; each e_i occurs half as often
    as its line is crossed; the brute-force minimal length of every basis
    diagram equals its line-crossing length.  Blob kinds: e and e1
    alternate; blob count equals the number of e.
    """
    report = VerificationReport(f"words:{kind.variant.value}", kind.rank)
    n_words = 0
    coeff_bad = extremal_bad = lines_bad = alt_bad = blob_bad = 0
    for letters, scalar, t in reduced_words(kind, max_len):
        n_words += 1
        if scalar != ONE:
            coeff_bad += 1
        if kind.variant is Variant.TL:
            if letters:
                idx = [int(x[1:]) for x in letters]
                if idx.count(min(idx)) != 1 or idx.count(max(idx)) != 1:
                    extremal_bad += 1
            _, lines = line_crossing_length(t)
            for i, c in enumerate(lines, start=1):
                if letters.count(f"e{i}") * 2 != c:
                    lines_bad += 1
                    break
        elif kind.variant is Variant.BLOB:
            if not alternates(letters):
                alt_bad += 1
            if sum(t.decorations) != letters.count("e"):
                blob_bad += 1
    report.add("reduced-words", "at least one reduced word", f"{n_words} reduced words up to length {max_len}", n_words > 0)
    report.add("unit-coefficient", "reduced words evaluate with coefficient 1", f"{coeff_bad} violations", coeff_bad == 0)
    report.merge(verify_certificate(kind, max_len))
    if kind.variant is Variant.TL:
        report.add("extremal-once", "min and max generator occur exactly once", f"{extremal_bad} violations", extremal_bad == 0)
        report.add("line-counts", "occurrences of e_i = crossings of line i / 2", f"{lines_bad} violations", lines_bad == 0)
        report.merge(verify_line_crossing(kind, max_len))
    elif kind.variant is Variant.BLOB:
        report.add("alternation", "e and e1 alternate in reduced words", f"{alt_bad} violations", alt_bad == 0)
        report.add("blob-count", "blobs in diagram = occurrences of e", f"{blob_bad} violations", blob_bad == 0)
    return report


def verify_certificate(kind: AlgebraKind, max_len: int = 8) -> VerificationReport:
    """Breadth-first lengths agree with exhaustive word search up to ``max_len``."""
    report = VerificationReport(f"certificate:{kind.variant.value}", kind.rank)
    brute: dict[DecoratedTangle, int] = {}
    for (t, _), (length, _) in _word_levels(kind, max_len).items():
        brute[t] = min(length, brute.get(t, length))
    bfs = {t: n for t, n in diagram_lengths(kind).items() if n <= max_len}
    report.add(
        "bfs-vs-oracle",
        "minimal lengths from breadth-first search = exhaustive search",
        f"{sum(1 for t in bfs if brute.get(t) != bfs[t])} mismatches over {len(bfs)} diagrams",
        bfs == brute,
    )
    return report


def verify_line_crossing(kind: AlgebraKind, max_len: int = 8) -> VerificationReport:
    """Oracle minimal length equals the line-crossing statistic on every TL basis diagram."""
    report = VerificationReport(f"line-crossing:{kind.variant.value}", kind.rank)
    bad = []
    for t in enumerate_basis(kind):
        res = shortest_word_oracle(Element(kind, {t: ONE}), kind, max_len)
        length, _ = line_crossing_length(t)
        if res.length != length:
            bad.append(str(t))
    report.add(
        "oracle-vs-lines",
        "brute-force minimal length = line-crossing length for every basis diagram",
        f"{len(bad)} mismatches" + (f", first {bad[0]}" if bad else ""),
        not bad,
    )
    return report


def verify_rewrites(rank: int, max_len: int = 8) -> VerificationReport:
    """Rewrites preserve evaluation on every reduced blob word with the condition."""
    kind = AlgebraKind.blob(rank)
    report = VerificationReport("rewrites", rank)
    nb = nd = bad_b = bad_d = 0
    bad_letters_b = bad_letters_d = 0
    for letters, scalar, t in reduced_words(kind, max_len):
        word = GeneratorWord(kind, letters)
        value = Element(kind, {t: scalar})
        if b_condition(word):
            nb += 1
            out = rewrite_b(word, check_reduced=False)
            if evaluate_word(out) != value:
                bad_b += 1
            if "e" in out.letters or "e1" in out.letters:
                bad_letters_b += 1
        if d_condition(word):
            nd += 1
            out = rewrite_d(word, check_reduced=False)
            if evaluate_word(out) != value:
                bad_d += 1
            if "e" in out.letters:
                bad_letters_d += 1
    report.add("rewrite-b", "B-rewrite preserves value", f"{bad_b} failures over {nb} words", bad_b == 0 and nb > 0)
    report.add("rewrite-b-alphabet", "B-rewrite output avoids e and e1", f"{bad_letters_b} violations", bad_letters_b == 0)
    report.add("rewrite-d", "D-rewrite preserves value", f"{bad_d} failures over {nd} words", bad_d == 0 and nd > 0)
    report.add("rewrite-d-alphabet", "D-rewrite output avoids e", f"{bad_letters_d} violations", bad_letters_d == 0)
    return report

