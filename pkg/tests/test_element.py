import json
import random

import pytest

from tanglekit.algebra import AlgebraKind, enumerate_basis
from tanglekit.element import Element, GeneratorWord, evaluate_word, span_reachability, structure_constants
from tanglekit.errors import IllegalLetter, KindMismatch, NotInBasis
from tanglekit.scalar import QUANTUM_TWO, ZERO, Scalar, d, dp
from tanglekit.tangle import generator


def word(kind, text, extended=False):
    return evaluate_word(GeneratorWord.parse(kind, text, extended))


def test_linear_examples():
    kind = AlgebraKind.tl(3)
    e1 = Element.generator(kind, "e1")
    assert e1 + Element.zero(kind) == e1
    assert e1 + e1 == e1.scale(2)
    assert e1.scale(0).is_zero()
    assert (e1 - e1).is_zero()


def test_kind_mismatch():
    with pytest.raises(KindMismatch):
        Element.one(AlgebraKind.tl(3)) + Element.one(AlgebraKind.tl(4))


def test_non_basis_rejected():
    with pytest.raises(NotInBasis):
        Element.diagram(AlgebraKind.type_b(2), generator("e", 3))


def test_big_e1_squared_in_type_b():
    kind = AlgebraKind.type_b(3)
    E1 = Element.generator(kind, "e~").scale(2)
    assert E1 * E1 == E1.scale(QUANTUM_TWO)


def test_unit_law():
    kind = AlgebraKind.blob(3)
    one = Element.one(kind)
    for t in enumerate_basis(kind):
        x = Element.diagram(kind, t, d + 1)
        assert one * x == x == x * one


def test_word_examples():
    blob = AlgebraKind.blob(3)
    assert word(blob, "e1 e e1") == Element.generator(blob, "e1").scale(dp)
    tl = AlgebraKind.tl(4)
    assert word(tl, "e2 e2") == Element.generator(tl, "e2").scale(d)
    long = word(blob, "e e1 e e2 e1 e")
    assert len(long.items()) == 1 and long.items()[0][1] == Scalar.const(1)
    assert long == word(blob, "e~ e2 e~", extended=True)


def test_eval_text_form():
    assert str(word(AlgebraKind.blob(3), "e1 e e1")) == "dp · {3|3 :: N1-N2,S1-S2,N3-S3 ;loops:-}"


def test_illegal_letters():
    with pytest.raises(IllegalLetter):
        GeneratorWord.parse(AlgebraKind.tl(3), "e")
    with pytest.raises(IllegalLetter):
        GeneratorWord.parse(AlgebraKind.tl(3), "e3")
    with pytest.raises(IllegalLetter):
        GeneratorWord.parse(AlgebraKind.blob(3), "x1")


@pytest.mark.parametrize("kind,size", [
    (AlgebraKind.type_b(2), 7), (AlgebraKind.type_d(4), 48), (AlgebraKind.tl(3), 5),
], ids=["B2", "D4", "TL3"])
def test_span_examples(kind, size):
    span = span_reachability(kind)
    assert len(span) == size
    assert span == set(enumerate_basis(kind))


def test_distributivity_on_random_elements():
    kind = AlgebraKind.type_b(3, d, dp)
    basis = enumerate_basis(kind)
    rng = random.Random(5)
    coeffs = [Scalar.const(1), d, dp, d - 2, Scalar.const(3) * dp ** -1]

    def rand():
        return Element(kind, {rng.choice(basis): rng.choice(coeffs) for _ in range(3)})

    for _ in range(25):
        x, y, z = rand(), rand(), rand()
        assert x * (y + z) == x * y + x * z
        assert (x + y) * z == x * z + y * z
        assert (x * y) * z == x * (y * z)


def test_structure_table_shape():
    table = structure_constants(AlgebraKind.type_b(2))
    assert table.dimension == 7
    seen = set()
    for i, j, k, c in table.entries:
        assert (i, j) not in seen and c != ZERO
        seen.add((i, j))
    doc = table.to_json()
    assert list(doc) == ["kind", "rank", "params", "basis", "entries"]
    assert [(e["i"], e["j"], e["k"]) for e in doc["entries"]] == sorted((e["i"], e["j"], e["k"]) for e in doc["entries"])
    json.dumps(doc)
