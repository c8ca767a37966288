"""Executable checks of the structural results.

* symmetric representation: blob diagrams on n strands correspond to
  left-right symmetric Temperley-Lieb diagrams on 2n strands;
* the embedding of the blob algebra into the symmetric subalgebra;
* the type A, B and D presentations, checked on diagram generators;
* basis counts against their closed forms.
"""

from __future__ import annotations

import random
from itertools import combinations, product

from .algebra import AdmissibilityClass, AlgebraKind, classify, reduce, reduce_by_rules, Variant, count_by_class, enumerate_basis, expected_counts, expected_dimension
from .element import Element, diagram_product, evaluate_diagram_word, span_reachability
from .errors import NotBlobDiagram, NotSymmetric
from .report import VerificationReport
from .scalar import ONE, QUANTUM_TWO, Scalar, d
from .tangle import DecoratedTangle, _build, concatenate, enumerate_matchings, toggle_nw


# symmetric representation ------------------------------------------------

def to_symmetric(b: DecoratedTangle) -> DecoratedTangle:
    """Double a blob diagram across the west wall.

    The original occupies strands n+1..2n and its mirror image strands
    1..n.  A blobbed arc is cut at its blob and each half is joined to its
    own reflection through the wall.
    """
    n = b.n_north
    if b.n_south != n or b.loops or any(r > 1 for r in b.decorations):
        raise NotBlobDiagram("expected a loop-free n|n diagram with at most one blob per arc")
    size = 4 * n

    def shifted(pos: int) -> int:
        face, i = b.node(pos)
        return n + i if face == "N" else size + 1 - (n + i)

    def mirrored(pos: int) -> int:
        face, i = b.node(pos)
        return n + 1 - i if face == "N" else size + 1 - (n + 1 - i)

    pairs = []
    for (p, q), r in zip(b.arcs, b.decorations):
        if r:
            pairs.append((shifted(p), mirrored(p), 0))
            pairs.append((shifted(q), mirrored(q), 0))
        else:
            pairs.append((shifted(p), shifted(q), 0))
            pairs.append((mirrored(p), mirrored(q), 0))
    return _build(2 * n, 2 * n, pairs, ())


def mirror(t: DecoratedTangle) -> DecoratedTangle:
    """Reflect a square diagram left to right."""
    n = t.n_north
    size = t.size

    def flip(pos: int) -> int:
        face, i = t.node(pos)
        j = n + 1 - i
        return j if face == "N" else size + 1 - j

    return _build(n, n, ((flip(p), flip(q), r) for (p, q), r in zip(t.arcs, t.decorations)), t.loops)


def is_symmetric(t: DecoratedTangle) -> bool:
    return t.n_north == t.n_south and not any(t.decorations) and mirror(t) == t


def from_symmetric(s: DecoratedTangle) -> DecoratedTangle:
    """Inverse of :func:`to_symmetric`."""
    if s.n_north != s.n_south or s.n_north % 2 or s.loops or any(s.decorations):
        raise NotSymmetric("expected an undecorated loop-free 2n|2n diagram")
    if mirror(s) != s:
        raise NotSymmetric("diagram is not left-right symmetric")
    n = s.n_north // 2

    def half(pos: int):
        face, i = s.node(pos)
        return (face, i - n) if i > n else None

    def blob_pos(node) -> int:
        face, i = node
        return i if face == "N" else 2 * n + 1 - i

    whole, loose = [], []
    for p, q in s.arcs:
        hp, hq = half(p), half(q)
        if hp and hq:
            whole.append((blob_pos(hp), blob_pos(hq), 0))
        elif hp or hq:
            other = q if hp else p
            inner = hp or hq
            if half(mirror_pos(s, other)) != inner:
                raise NotSymmetric("an arc crosses the wall without meeting its own mirror")
            loose.append(blob_pos(inner))
    loose.sort()
    pairs = whole + [(a, b, 1) for a, b in zip(loose[::2], loose[1::2])]
    out = _build(n, n, pairs, ())
    if to_symmetric(out) != s:
        raise NotSymmetric("no blob diagram maps to this diagram")
    return out


def mirror_pos(t: DecoratedTangle, pos: int) -> int:
    face, i = t.node(pos)
    j = t.n_north + 1 - i
    return j if face == "N" else t.size + 1 - j


def symmetric_diagrams(n: int) -> list[DecoratedTangle]:
    """Left-right symmetric TL diagrams on 2n strands, by filtering all of them."""
    return [t for t in enumerate_matchings(2 * n, 2 * n) if mirror(t) == t]


def verify_symmetric(n: int) -> VerificationReport:
    from math import comb

    report = VerificationReport("symmetric", n)
    blob = AlgebraKind.blob(n)
    basis = enumerate_basis(blob)
    images = [to_symmetric(b) for b in basis]
    round_trip = sum(1 for b, s in zip(basis, images) if from_symmetric(s) != b)
    report.add("round-trip", "from_symmetric(to_symmetric(b)) = b", f"{round_trip} failures over {len(basis)}", round_trip == 0)
    sym = symmetric_diagrams(n)
    report.add("image-symmetric", "every image is symmetric", f"{sum(1 for s in images if mirror(s) != s)} asymmetric", all(mirror(s) == s for s in images))
    report.add("bijective", "images are exactly the symmetric diagrams", f"{len(set(images))} distinct images vs {len(sym)} symmetric", set(images) == set(sym))
    report.add("count", f"C(2n,n) = {comb(2 * n, n)}", str(len(sym)), len(sym) == comb(2 * n, n))
    return report


# blob algebra inside the symmetric subalgebra -----------------------------

def embedding_setup(n: int, convention: str = "consistent") -> tuple[AlgebraKind, AlgebraKind, Scalar]:
    """Blob and TL kinds paired by the embedding, and the blob normalizer.

    ``"consistent"``: blob loops ``d^2`` and ``1``, TL loop ``d``.
    ``"stated"``: blob loops ``d`` and ``1``, TL loop ``d^2``.
    The generator map is the same in both: ``e_i -> e_{n+i} e_{n-i}`` and
    ``e -> e_n / d``.  Only the first makes ``e^2 = e`` hold.
    """
    if convention == "consistent":
        return AlgebraKind.blob(n, d ** 2, ONE), AlgebraKind.tl(2 * n, d), d
    if convention == "stated":
        return AlgebraKind.blob(n, d, ONE), AlgebraKind.tl(2 * n, d ** 2), d
    raise ValueError(f"unknown convention {convention!r}")


def embed_blob(x: Element, tl: AlgebraKind, normalizer: Scalar) -> Element:
    """Linear map sending a blob diagram D to normalizer^-blobs(D) * sym(D)."""
    acc: dict[DecoratedTangle, Scalar] = {}
    for t, c in x.items():
        acc[to_symmetric(t)] = c * normalizer ** (-sum(t.decorations))
    return Element(tl, acc)


def generator_image(symbol: str, n: int, tl: AlgebraKind, normalizer: Scalar) -> Element:
    if symbol == "e":
        return Element(tl, {tl.generator(f"e{n}"): normalizer ** -1})
    i = int(symbol[1:])
    s, t = evaluate_diagram_word(tl, (f"e{n + i}", f"e{n - i}"))
    return Element(tl, {t: s})


def verify_embedding(n: int, convention: str = "consistent", all_pairs: bool = False) -> VerificationReport:
    """Multiplicativity of the generator map into the symmetric subalgebra.

    The map is defined on the whole blob basis through the symmetric
    representation; the report checks that it restricts to the stated
    generator images and that it is multiplicative on every ordered
    generator pair (every basis pair with ``all_pairs``).
    """
    from math import comb

    blob, tl, norm = embedding_setup(n, convention)
    report = VerificationReport(f"embedding:{convention}", n)
    gens = blob.standard_generators()
    for g in gens:
        direct = embed_blob(Element.generator(blob, g), tl, norm)
        image = generator_image(g, n, tl, norm)
        report.add(f"image[{g}]", str(image), str(direct), direct == image)
    for a in gens:
        for b in gens:
            lhs = generator_image(a, n, tl, norm) * generator_image(b, n, tl, norm)
            rhs = embed_blob(Element.generator(blob, a) * Element.generator(blob, b), tl, norm)
            report.add(f"mult[{a},{b}]", str(rhs), str(lhs), lhs == rhs)
    if all_pairs:
        basis = enumerate_basis(blob)
        bad = 0
        for x in basis:
            ex = embed_blob(Element.diagram(blob, x), tl, norm)
            for y in basis:
                ey = embed_blob(Element.diagram(blob, y), tl, norm)
                if ex * ey != embed_blob(Element.diagram(blob, x) * Element.diagram(blob, y), tl, norm):
                    bad += 1
        report.add("mult[basis]", "multiplicative on all basis pairs", f"{bad} failures over {len(basis) ** 2}", bad == 0)
    count = len(symmetric_diagrams(n))
    report.add("dimension", f"C(2n,n) = {comb(2 * n, n)}", str(count), count == comb(2 * n, n))
    return report


# presentations ---------------------------------------------------------------

def _dynkin(kind: AlgebraKind) -> tuple[list[str], set[frozenset[str]], dict[str, Element]]:
    """Nodes, edges and diagram images of the presentation generators."""
    v = kind.variant
    m = kind.nodes
    if v is Variant.TL:
        names = [f"e{i}" for i in range(1, m)]
        edges = {frozenset((f"e{i}", f"e{i + 1}")) for i in range(1, m - 1)}
        images = {x: Element.generator(kind, x) for x in names}
        return names, edges, images
    if v is Variant.TYPE_B:
        names = [f"E{i}" for i in range(1, kind.rank + 1)]
        edges = {frozenset((f"E{i}", f"E{i + 1}")) for i in range(1, kind.rank)}
        images = {"E1": Element.generator(kind, "e~").scale(2)}
        images.update({f"E{i}": Element.generator(kind, f"e{i}") for i in range(2, kind.rank + 1)})
        return names, edges, images
    if v is Variant.TYPE_D:
        names = ["E1bar"] + [f"E{i}" for i in range(1, m)]
        edges = {frozenset(("E1bar", "E2")), frozenset(("E1", "E2"))} if m > 2 else set()
        edges |= {frozenset((f"E{i}", f"E{i + 1}")) for i in range(2, m - 1)}
        images = {"E1bar": Element.generator(kind, "e~")}
        images.update({f"E{i}": Element.generator(kind, f"e{i}") for i in range(1, m)})
        return names, edges, images
    if v is Variant.BLOB:
        names = ["e"] + [f"e{i}" for i in range(1, m)]
        edges = {frozenset((f"e{i}", f"e{i + 1}")) for i in range(1, m - 1)}
        images = {x: Element.generator(kind, x) for x in names}
        return names, edges, images
    raise ValueError(f"no presentation is checked for {v.value}")


def verify_presentation(kind: AlgebraKind) -> VerificationReport:
    """Check every defining relation on the diagram images of the generators.

    TL: ``e_i^2 = delta e_i``, braid-type ``e_i e_j e_i = e_i`` for
    neighbours, commutation otherwise.  Type B (images ``E1 = 2 e~``,
    ``E_i = e_i``): squares ``[2] E``, ``E_i E_j E_i = E_i`` for neighbours
    other than {1, 2}, ``E1 E2 E1 E2 = 2 E1 E2`` both ways, commutation
    otherwise.  Type D (``E1bar = e~``): squares ``[2] E``, braid-type for
    neighbours of the D_n graph, commutation otherwise.  Blob: the six
    relations of the blob algebra.
    """
    names, edges, E = _dynkin(kind)
    report = VerificationReport(f"presentation:{kind.variant.value}", kind.rank)

    def rel(check_id: str, lhs: Element, rhs: Element) -> None:
        report.add(check_id, str(rhs), str(lhs), lhs == rhs)

    if kind.variant is Variant.BLOB:
        e = E["e"]
        rel("e^2=e", e * e, e)
        if "e1" in E:
            rel("e1 e e1=dp e1", E["e1"] * e * E["e1"], E["e1"].scale(kind.delta_prime))
        for x in names[1:]:
            rel(f"{x}^2=d {x}", E[x] * E[x], E[x].scale(kind.delta))
            if x != "e1":
                rel(f"{x} e=e {x}", E[x] * e, e * E[x])
    else:
        square = kind.delta if kind.variant is Variant.TL else QUANTUM_TWO
        for x in names:
            rel(f"{x}^2", E[x] * E[x], E[x].scale(square))

    plain = names[1:] if kind.variant is Variant.BLOB else names
    for x, y in combinations(plain, 2):
        pair = frozenset((x, y))
        if pair not in edges:
            rel(f"{x}{y}={y}{x}", E[x] * E[y], E[y] * E[x])
        elif kind.variant is Variant.TYPE_B and pair == frozenset(("E1", "E2")):
            for a, b in ((x, y), (y, x)):
                rel(f"{a}{b}{a}{b}=2{a}{b}", E[a] * E[b] * E[a] * E[b], (E[a] * E[b]).scale(2))
        else:
            for a, b in ((x, y), (y, x)):
                rel(f"{a}{b}{a}={a}", E[a] * E[b] * E[a], E[a])
    return report


# counts ------------------------------------------------------------------------

def toggle_orbits_ok(n: int) -> tuple[bool, int, int]:
    """Orbits of the north-west toggle on blob diagrams.

    Returns (every orbit has size 2 with one even member, blob count,
    even-blob count).
    """
    basis = enumerate_basis(AlgebraKind.blob(n))
    seen = set()
    ok = True
    for t in basis:
        if t in seen:
            continue
        u = toggle_nw(t)
        orbit = {t, u}
        seen |= orbit
        parities = [sum(x.decorations) % 2 for x in orbit]
        ok &= len(orbit) == 2 and toggle_nw(u) == t and sorted(parities) == [0, 1]
    even = sum(1 for t in basis if sum(t.decorations) % 2 == 0)
    return ok, len(basis), even


def verify_counts(kind: AlgebraKind) -> VerificationReport:
    report = VerificationReport(f"counts:{kind.variant.value}", kind.rank)
    observed = count_by_class(kind)
    expected = expected_counts(kind)
    for cls, want in expected.items():
        got = observed.get(cls, 0)
        report.add(f"class[{cls.value}]", str(want), str(got), got == want)
    basis = enumerate_basis(kind)
    total = expected_dimension(kind)
    report.add("total", str(total), str(len(basis)), len(basis) == total)
    report.add("no-duplicates", str(len(basis)), str(len(set(basis))), len(set(basis)) == len(basis))
    span = span_reachability(kind)
    report.add("span", "generators reach every basis diagram", f"{len(span)} reached of {len(basis)}", span == set(basis))
    if kind.variant in (Variant.TYPE_D, Variant.D_QUOTIENT):
        ok, blobs, even = toggle_orbits_ok(kind.rank)
        report.add("toggle-orbits", "orbits of size 2, one even member each", "ok" if ok else "violated", ok)
        d2 = observed.get(AdmissibilityClass.D2, 0)
        report.add("half-count", f"{blobs} / 2 = {blobs // 2}", f"{even} even, {d2} in D2", 2 * even == blobs == 2 * d2)
    return report


# associativity, closure, confluence ---------------------------------------------

def verify_associativity(kind: AlgebraKind, samples: int = 200, seed: int = 0, exhaustive: bool = False) -> VerificationReport:
    """(x y) z = x (y z) on random basis triples, or on all of them."""
    report = VerificationReport(f"associativity:{kind.variant.value}", kind.rank)
    basis = enumerate_basis(kind)
    if exhaustive:
        triples = product(basis, repeat=3)
    else:
        rng = random.Random(seed)
        triples = ([rng.choice(basis) for _ in range(3)] for _ in range(samples))
    bad = total = 0
    for x, y, z in triples:
        total += 1
        a, xy = diagram_product(kind, x, y)
        b, left = diagram_product(kind, xy, z)
        c, yz = diagram_product(kind, y, z)
        e, right = diagram_product(kind, x, yz)
        lhs, rhs = a * b, c * e
        if lhs != rhs or (not lhs.is_zero() and left != right):
            bad += 1
    mode = "all" if exhaustive else "random"
    report.add(f"triples[{mode}]", "(xy)z = x(yz)", f"{bad} failures over {total}", bad == 0)
    return report


def verify_closure(kind: AlgebraKind) -> VerificationReport:
    """Every product of two basis diagrams is a scalar times a basis diagram.

    With variable parameters the scalar is also required to be a monomial.
    """
    report = VerificationReport(f"closure:{kind.variant.value}", kind.rank)
    basis = enumerate_basis(kind)
    members = set(basis)
    monomial_params = kind.delta.is_monomial() and (kind.delta_prime is None or kind.delta_prime.is_monomial())
    outside = not_monomial = 0
    for x in basis:
        for y in basis:
            s, t = diagram_product(kind, x, y)
            if s.is_zero():
                continue
            if t not in members or classify(t, kind) is AdmissibilityClass.NOT_BASIS:
                outside += 1
            if monomial_params and not s.is_monomial():
                not_monomial += 1
    pairs = len(basis) ** 2
    report.add("in-basis", "every product lands in the basis", f"{outside} outside over {pairs}", outside == 0)
    if monomial_params:
        report.add("monomial", "every coefficient is a monomial", f"{not_monomial} non-monomial", not_monomial == 0)
    return report


def random_raw_tangle(kind: AlgebraKind, rng: random.Random, max_factors: int = 5) -> DecoratedTangle:
    """An unreduced tangle for ``kind``.

    Half of the draws stack random generators without reducing; the rest
    put random decorations on the exposed arcs of a random matching and
    add random loops.
    """
    m = kind.nodes
    plain = kind.variant is Variant.TL
    gens = [f"e{i}" for i in range(1, m)]
    if not plain:
        gens += ["e", "e~"] if m > 1 else ["e"]
    if gens and rng.random() < 0.5:
        t = kind.identity()
        for _ in range(rng.randint(1, max_factors)):
            t = concatenate(t, kind.generator(rng.choice(gens)))
        return t
    t = rng.choice(enumerate_matchings(m, m))
    if plain:
        return t.with_loops((0,) * rng.randint(0, 3))
    decos = tuple(rng.randint(0, 3) if exposed else 0 for exposed in t.exposed)
    loops = tuple(rng.randint(0, 3) for _ in range(rng.randint(0, 3)))
    return t.with_decorations(decos).with_loops(loops)


def verify_confluence(kind: AlgebraKind, samples: int = 1000, seed: int = 0) -> VerificationReport:
    """Random rule order always reaches the closed-form normal form."""
    report = VerificationReport(f"confluence:{kind.variant.value}", kind.rank)
    rng = random.Random(seed)
    bad = 0
    for _ in range(samples):
        raw = random_raw_tangle(kind, rng)
        want = reduce(raw, kind)
        for _ in range(2):
            if reduce_by_rules(raw, kind, rng) != want:
                bad += 1
                break
    report.add("fuzz", "identical (scalar, diagram) under every order", f"{bad} disagreements over {samples}", bad == 0)
    return report
