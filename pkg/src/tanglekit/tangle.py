"""Decorated tangles: crossing-free boundary matchings with blob counts.

Nodes are labelled ``("N", i)`` or ``("S", j)`` and numbered from the west.
Internally every node gets a boundary position obtained by cutting the
frame at the west face and walking N1..Nn, then Sm..S1::

    position(N_i) = i
    position(S_j) = n + m + 1 - j

With this cut an arc is noncrossing iff no two arcs interleave, and an arc
can reach the west face iff no other arc encloses it.  Closed loops carry
only their decoration count.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence, Union

from .errors import (
    Crossing,
    DecorationNotExposed,
    FaceMismatch,
    IndexOutOfRange,
    NotAMatching,
    NotBlobLike,
    OddNodeTotal,
    UnknownArc,
)

Node = tuple[str, int]
NodeLike = Union[Node, str]
Arc = tuple[int, int]

_FACE_RANK = {"N": 0, "S": 1}
_NODE_RE = re.compile(r"^([NS])(\d+)$")


def parse_node(node: NodeLike) -> Node:
    if isinstance(node, str):
        m = _NODE_RE.match(node.strip())
        if not m:
            raise NotAMatching(f"bad node label {node!r}")
        return (m.group(1), int(m.group(2)))
    face, index = node
    if face not in _FACE_RANK:
        raise NotAMatching(f"bad face {face!r}")
    return (face, int(index))


def node_label(node: Node) -> str:
    return f"{node[0]}{node[1]}"


@dataclass(frozen=True)
class DecoratedTangle:
    """A validated tangle in canonical form.

    ``arcs`` holds boundary-position pairs ``(p, q)`` with ``p < q``;
    ``decorations[k]`` is the blob count on ``arcs[k]``; ``loops`` is the
    ascending multiset of loop decoration counts.  Build instances with
    :func:`make_tangle` or the helpers below, not directly.
    """

    n_north: int
    n_south: int
    arcs: tuple[Arc, ...]
    decorations: tuple[int, ...]
    loops: tuple[int, ...] = ()

    # positions and nodes -----------------------------------------------
    @property
    def size(self) -> int:
        return self.n_north + self.n_south

    def position(self, node: NodeLike) -> int:
        face, index = parse_node(node)
        limit = self.n_north if face == "N" else self.n_south
        if not 1 <= index <= limit:
            raise IndexOutOfRange(f"{node_label((face, index))} not on a face of size {limit}")
        return index if face == "N" else self.size + 1 - index

    def node(self, pos: int) -> Node:
        if pos <= self.n_north:
            return ("N", pos)
        return ("S", self.size + 1 - pos)

    @cached_property
    def partner(self) -> tuple[int, ...]:
        """``partner[p]`` is the other end of the arc at position ``p`` (index 0 unused)."""
        out = [0] * (self.size + 1)
        for p, q in self.arcs:
            out[p] = q
            out[q] = p
        return tuple(out)

    @cached_property
    def arc_at(self) -> tuple[int, ...]:
        """``arc_at[p]`` is the index into ``arcs`` of the arc at position ``p``."""
        out = [0] * (self.size + 1)
        for k, (p, q) in enumerate(self.arcs):
            out[p] = k
            out[q] = k
        return tuple(out)

    def arc_nodes(self, k: int) -> tuple[Node, Node]:
        p, q = self.arcs[k]
        a, b = self.node(p), self.node(q)
        return tuple(sorted((a, b), key=lambda n: (_FACE_RANK[n[0]], n[1])))

    def arc_index(self, arc) -> int:
        """Index of an arc given as a pair of nodes or of positions."""
        a, b = arc
        pa = a if isinstance(a, int) else self.position(a)
        pb = b if isinstance(b, int) else self.position(b)
        key = (min(pa, pb), max(pa, pb))
        try:
            return self.arcs.index(key)
        except ValueError:
            raise UnknownArc(f"{arc!r} is not an arc of this tangle") from None

    # derived quantities -------------------------------------------------
    def is_propagating(self, k: int) -> bool:
        p, q = self.arcs[k]
        return (p <= self.n_north) != (q <= self.n_north)

    def edge_kind(self, k: int) -> str:
        return "propagating" if self.is_propagating(k) else "non-propagating"

    @cached_property
    def exposed(self) -> tuple[bool, ...]:
        """West-exposure flag for each arc, in arc order."""
        return _scan(self.size, self.partner, self.arcs)[1]

    def total_decorations(self) -> int:
        return sum(self.decorations) + sum(self.loops)

    def has_non_propagating(self) -> bool:
        return any(not self.is_propagating(k) for k in range(len(self.arcs)))

    def is_undecorated(self) -> bool:
        return not any(self.decorations) and not any(self.loops)

    def without_loops(self) -> DecoratedTangle:
        return DecoratedTangle(self.n_north, self.n_south, self.arcs, self.decorations, ())

    def with_loops(self, loops: Iterable[int]) -> DecoratedTangle:
        return DecoratedTangle(self.n_north, self.n_south, self.arcs, self.decorations, tuple(sorted(loops)))

    def with_decorations(self, decorations: Sequence[int]) -> DecoratedTangle:
        decorations = tuple(decorations)
        _check_exposure(self.exposed, decorations)
        return DecoratedTangle(self.n_north, self.n_south, self.arcs, decorations, self.loops)

    def sort_key(self):
        return (self.n_north, self.n_south, self.arcs, self.decorations, self.loops)

    # text form ----------------------------------------------------------
    def __str__(self) -> str:
        parts = []
        for k in range(len(self.arcs)):
            a, b = self.arc_nodes(k)
            parts.append(f"{node_label(a)}-{node_label(b)}" + "*" * self.decorations[k])
        loops = ",".join(str(c) for c in self.loops) if self.loops else "-"
        return f"{self.n_north}|{self.n_south} :: {','.join(parts)} ;loops:{loops}"


def _display_key(t_nodes: tuple[Node, Node]):
    return min((n[1], _FACE_RANK[n[0]]) for n in t_nodes)


def _scan(size: int, partner: Sequence[int], arcs: Sequence[Arc]) -> tuple[bool, tuple[bool, ...]]:
    """Stack scan over boundary positions.

    Returns (noncrossing, exposed-per-arc).  An arc opened while the stack
    is empty is not enclosed by any other arc.
    """
    stack: list[int] = []
    exposed_at: dict[int, bool] = {}
    for p in range(1, size + 1):
        q = partner[p]
        if q > p:
            exposed_at[p] = not stack
            stack.append(p)
        else:
            if not stack or stack[-1] != q:
                return False, ()
            stack.pop()
    return True, tuple(exposed_at[p] for p, _ in arcs)


def _check_exposure(exposed: Sequence[bool], decorations: Sequence[int]) -> None:
    if len(decorations) != len(exposed):
        raise ValueError("one decoration count per arc is required")
    for k, (flag, r) in enumerate(zip(exposed, decorations)):
        if r < 0:
            raise ValueError("decoration counts are nonnegative")
        if r and not flag:
            raise DecorationNotExposed(f"arc {k} carries {r} decorations but is not west-exposed")


def _build(n_north: int, n_south: int, pairs: Iterable[tuple[int, int, int]], loops: Iterable[int]) -> DecoratedTangle:
    """Validate position-level data ``(p, q, decoration)`` and canonicalize."""
    if n_north < 0 or n_south < 0:
        raise IndexOutOfRange("face sizes are nonnegative")
    size = n_north + n_south
    if size % 2:
        raise OddNodeTotal(f"{n_north} + {n_south} is odd")
    partner = [0] * (size + 1)
    items = []
    for p, q, r in pairs:
        if p == q or not (1 <= p <= size and 1 <= q <= size):
            raise NotAMatching(f"bad arc between positions {p} and {q}")
        if partner[p] or partner[q]:
            raise NotAMatching("a node is used twice")
        partner[p], partner[q] = q, p
        items.append((min(p, q), max(p, q), int(r)))
    if any(partner[p] == 0 for p in range(1, size + 1)):
        raise NotAMatching("a node is unmatched")

    def node(pos: int) -> Node:
        return ("N", pos) if pos <= n_north else ("S", size + 1 - pos)

    items.sort(key=lambda it: _display_key((node(it[0]), node(it[1]))))
    arcs = tuple((p, q) for p, q, _ in items)
    decorations = tuple(r for _, _, r in items)
    ok, exposed = _scan(size, partner, arcs)
    if not ok:
        raise Crossing("arcs interleave")
    loops = tuple(sorted(int(c) for c in loops))
    if any(c < 0 for c in loops):
        raise ValueError("loop decoration counts are nonnegative")
    _check_exposure(exposed, decorations)
    return DecoratedTangle(n_north, n_south, arcs, decorations, loops)


def make_tangle(
    n_north: int,
    n_south: int,
    arcs: Iterable[tuple[NodeLike, NodeLike]],
    decorations: Sequence[int] | None = None,
    loops: Iterable[int] = (),
) -> DecoratedTangle:
    """Build a validated tangle from node pairs such as ``("N1", "S1")``.

    ``decorations`` runs parallel to ``arcs`` (default: all zero).
    """
    if (n_north + n_south) % 2:
        raise OddNodeTotal(f"{n_north} + {n_south} is odd")
    arcs = list(arcs)
    if decorations is None:
        decorations = [0] * len(arcs)
    if len(decorations) != len(arcs):
        raise ValueError("decorations must run parallel to arcs")
    size = n_north + n_south

    def pos(node: NodeLike) -> int:
        face, index = parse_node(node)
        limit = n_north if face == "N" else n_south
        if not 1 <= index <= limit:
            raise NotAMatching(f"node {node_label((face, index))} does not exist")
        return index if face == "N" else size + 1 - index

    return _build(n_north, n_south, ((pos(a), pos(b), r) for (a, b), r in zip(arcs, decorations)), loops)


_TEXT_RE = re.compile(r"^(\d+)\|(\d+) :: (.*) ;loops:(.*)$")
_ARC_RE = re.compile(r"^([NS]\d+)-([NS]\d+)(\**)$")


def parse_tangle(text: str) -> DecoratedTangle:
    """Read the canonical text form produced by ``str(tangle)``."""
    m = _TEXT_RE.match(text.strip())
    if not m:
        raise ValueError(f"not a tangle text form: {text!r}")
    n, s, body, loops = m.groups()
    arcs, decos = [], []
    for chunk in filter(None, body.split(",")):
        am = _ARC_RE.match(chunk)
        if not am:
            raise ValueError(f"bad arc {chunk!r}")
        arcs.append((am.group(1), am.group(2)))
        decos.append(len(am.group(3)))
    loop_counts = [] if loops.strip() == "-" else [int(c) for c in loops.split(",")]
    return make_tangle(int(n), int(s), arcs, decos, loop_counts)


def identity(n: int) -> DecoratedTangle:
    return _build(n, n, ((i, 2 * n + 1 - i, 0) for i in range(1, n + 1)), ())


@lru_cache(maxsize=None)
def generator(symbol: str, n: int) -> DecoratedTangle:
    """Named tangle in the n-strand algebra.

    ``symbol`` is ``"e"``, ``"e~"`` (alias ``"e_bar1"``) or ``"e<i>"``
    (alias ``"e_<i>"``) for ``1 <= i <= n-1``.
    """
    sym = symbol.strip().replace("_", "")
    if sym == "e":
        if n < 1:
            raise IndexOutOfRange("e needs at least one strand")
        return identity(n).with_decorations([1] + [0] * (n - 1))
    if sym in ("e~", "ebar1"):
        if n < 2:
            raise IndexOutOfRange("e~ needs at least two strands")
        return _cup_cap(n, 1, 1)
    m = re.match(r"^e(\d+)$", sym)
    if not m:
        raise IndexOutOfRange(f"unknown generator {symbol!r}")
    i = int(m.group(1))
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"e{i} requires 1 <= i <= {n - 1}")
    return _cup_cap(n, i, 0)


def _cup_cap(n: int, i: int, blob: int) -> DecoratedTangle:
    size = 2 * n
    pairs = [(i, i + 1, blob), (size + 1 - i, size - i, blob)]
    pairs += [(k, size + 1 - k, 0) for k in range(1, n + 1) if k not in (i, i + 1)]
    return _build(n, n, pairs, ())


def west_exposed(t: DecoratedTangle, arc) -> bool:
    return t.exposed[t.arc_index(arc)]


def concatenate(top: DecoratedTangle, bottom: DecoratedTangle) -> DecoratedTangle:
    """Stack ``top`` above ``bottom``, gluing top's south face to bottom's north face."""
    if top.n_south != bottom.n_north:
        raise FaceMismatch(f"top has {top.n_south} south nodes, bottom has {bottom.n_north} north nodes")
    a, b, c = top.n_north, top.n_south, bottom.n_south
    tp, bp = top.partner, bottom.partner
    t_arc, b_arc = top.arc_at, bottom.arc_at
    t_deco, b_deco = top.decorations, bottom.decorations
    t_seen = [False] * len(top.arcs)
    b_seen = [False] * len(bottom.arcs)
    top_iface = a + b + 1  # top S_k sits at top_iface - k; bottom N_k sits at k

    def walk(on_top: bool, pos: int) -> tuple[int, int]:
        """Follow a strand entering at ``pos``; return (output position, blobs)."""
        blobs = 0
        while True:
            if on_top:
                k = t_arc[pos]
                t_seen[k] = True
                blobs += t_deco[k]
                q = tp[pos]
                if q <= a:
                    return q, blobs
                on_top, pos = False, top_iface - q
            else:
                k = b_arc[pos]
                b_seen[k] = True
                blobs += b_deco[k]
                q = bp[pos]
                if q > b:
                    return a + (q - b), blobs
                on_top, pos = True, top_iface - q

    pairs = []
    for p in range(1, a + 1):
        if not t_seen[t_arc[p]]:
            q, blobs = walk(True, p)
            pairs.append((p, q, blobs))
    for p in range(b + 1, b + c + 1):
        if not b_seen[b_arc[p]]:
            q, blobs = walk(False, p)
            pairs.append((a + (p - b), q, blobs))

    new_loops = []
    for k, (p, _) in enumerate(top.arcs):
        if t_seen[k]:
            continue
        # closed component through the interface: start at p and go round
        blobs = 0
        on_top, pos = True, p
        while True:
            if on_top:
                kk = t_arc[pos]
                if t_seen[kk]:
                    break
                t_seen[kk] = True
                blobs += t_deco[kk]
                on_top, pos = False, top_iface - tp[pos]
            else:
                kk = b_arc[pos]
                b_seen[kk] = True
                blobs += b_deco[kk]
                on_top, pos = True, top_iface - bp[pos]
        new_loops.append(blobs)

    # every arc of bottom either reached the interface or the south face
    assert all(b_seen), "untraced arc in bottom tangle"
    return _build(a, c, pairs, top.loops + bottom.loops + tuple(new_loops))


def enumerate_matchings(n_north: int, n_south: int) -> list[DecoratedTangle]:
    """All undecorated loop-free crossing-free tangles, in generation order."""
    size = n_north + n_south
    if size % 2:
        raise OddNodeTotal(f"{n_north} + {n_south} is odd")
    return [_build(n_north, n_south, ((p, q, 0) for p, q in m), ()) for m in _noncrossing(1, size)]


def _noncrossing(lo: int, hi: int):
    """Noncrossing perfect matchings of positions lo..hi as lists of pairs."""
    if lo > hi:
        yield []
        return
    for mid in range(lo + 1, hi + 1, 2):
        for inner in _noncrossing(lo + 1, mid - 1):
            for outer in _noncrossing(mid + 1, hi):
                yield [(lo, mid)] + inner + outer


def toggle_nw(t: DecoratedTangle) -> DecoratedTangle:
    """Flip the blob on the arc through the north-west node N1."""
    if t.loops or any(r > 1 for r in t.decorations):
        raise NotBlobLike("toggle_nw needs a loop-free tangle with at most one blob per arc")
    if t.n_north < 1:
        raise IndexOutOfRange("no north-west node")
    k = t.arc_at[1]
    decos = list(t.decorations)
    decos[k] = 1 - decos[k]
    return DecoratedTangle(t.n_north, t.n_south, t.arcs, tuple(decos), ())
