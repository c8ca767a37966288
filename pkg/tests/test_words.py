import pytest

from tanglekit.algebra import AlgebraKind, enumerate_basis
from tanglekit.element import Element, GeneratorWord, evaluate_word
from tanglekit.errors import ConditionFailed, IllegalLetter, NotPlainTL, NotReduced
from tanglekit.scalar import ONE, dp
from tanglekit.tangle import generator, identity
from tanglekit.words import (
    all_words,
    b_condition,
    d_condition,
    is_reduced,
    line_crossing_length,
    rewrite_b,
    rewrite_d,
    shortest_word_oracle,
    verify_certificate,
    verify_rewrites,
    verify_word_lemmas,
)

BLOB5 = AlgebraKind.blob(5)


def w(text, kind=BLOB5):
    return GeneratorWord.parse(kind, text)


@pytest.mark.parametrize("text,expected", [
    ("e e1", False), ("e3 e2 e4 e3", True), ("e e2 e1 e e3", True), ("e", False), ("e1", False), ("", True),
])
def test_b_condition(text, expected):
    assert b_condition(w(text)) is expected


@pytest.mark.parametrize("text,expected", [("e", False), ("e1 e3", True), ("e e1 e2 e e1", True)])
def test_d_condition(text, expected):
    assert d_condition(w(text)) is expected


def test_conditions_reject_e_bar():
    with pytest.raises(IllegalLetter):
        b_condition(GeneratorWord.parse(BLOB5, "e~ e2", extended=True))


@pytest.mark.parametrize("src,dst", [("e e1 e e2 e1 e", "e~ e2 e~"), ("e3 e2", "e3 e2"), ("e e1 e", "e~")])
def test_rewrite_b_examples(src, dst):
    out = rewrite_b(w(src))
    assert str(out) == dst
    assert evaluate_word(out) == evaluate_word(w(src))


@pytest.mark.parametrize("src,dst", [("e e1 e2 e e1", "e~ e2 e1"), ("e1 e3", "e1 e3"), ("e e1 e", "e~")])
def test_rewrite_d_examples(src, dst):
    out = rewrite_d(w(src))
    assert str(out) == dst
    assert evaluate_word(out) == evaluate_word(w(src))


def test_rewrite_failures():
    with pytest.raises(ConditionFailed):
        rewrite_b(w("e e1"))
    with pytest.raises(ConditionFailed):
        rewrite_d(w("e"))
    with pytest.raises(NotReduced):
        rewrite_b(w("e e e1 e"))
    with pytest.raises(NotReduced):
        rewrite_d(w("e1 e1"))


def test_oracle_examples():
    assert shortest_word_oracle(Element.generator(BLOB5, "e1"), max_len=4).length == 1
    res = shortest_word_oracle(Element.generator(BLOB5, "e1").scale(dp), max_len=4)
    assert res.length == 3
    assert "e1 e e1" in {str(x) for x in res.witnesses}
    assert shortest_word_oracle(Element.one(BLOB5), max_len=2).length == 0
    assert not shortest_word_oracle(Element.generator(BLOB5, "e1").scale(7), max_len=3).found


def test_line_crossing_examples():
    assert line_crossing_length(identity(4)) == (0, (0, 0, 0))
    assert line_crossing_length(generator("e2", 4)) == (1, (0, 2, 0))
    t = evaluate_word(w("e1 e2", AlgebraKind.tl(3))).items()[0][0]
    assert line_crossing_length(t) == (2, (2, 2))
    with pytest.raises(NotPlainTL):
        line_crossing_length(generator("e", 3))


def test_reducedness_agrees_with_exhaustive_search():
    kind = AlgebraKind.blob(3)
    first_seen = {}
    words = [(letters, t) for letters, scalar, t in all_words(kind, 6) if not scalar.is_zero()]
    for letters, t in words:
        first_seen.setdefault(t, len(letters))
    for letters, t in words:
        assert is_reduced(GeneratorWord(kind, letters)) == (len(letters) == first_seen[t])


@pytest.mark.parametrize("kind", [AlgebraKind.tl(4), AlgebraKind.blob(3)], ids=["TL4", "Blob3"])
def test_word_lemma_suite(kind):
    report = verify_word_lemmas(kind, 7)
    assert report.overall, report.to_text()


def test_certificate_on_type_b():
    assert verify_certificate(AlgebraKind.type_b(3), 6).overall


def test_rewrite_suite():
    assert verify_rewrites(3, 7).overall


def test_reduced_words_of_all_tl_diagrams_have_unit_coefficient():
    kind = AlgebraKind.tl(4)
    for t in enumerate_basis(kind):
        res = shortest_word_oracle(Element(kind, {t: ONE}), kind, 8)
        assert res.found and all(evaluate_word(x) == Element(kind, {t: ONE}) for x in res.witnesses)
