import json
from math import comb

import pytest

from tanglekit.algebra import AlgebraKind, enumerate_basis
from tanglekit.correspondences import (
    from_symmetric,
    mirror,
    symmetric_diagrams,
    to_symmetric,
    toggle_orbits_ok,
    verify_associativity,
    verify_counts,
    verify_embedding,
    verify_presentation,
    verify_symmetric,
)
from tanglekit.errors import NotBlobDiagram, NotSymmetric
from tanglekit.tangle import generator, identity, make_tangle


def test_blob_generator_doubles_to_cup_cap():
    want = make_tangle(4, 4, [("N1", "S1"), ("N2", "N3"), ("S2", "S3"), ("N4", "S4")])
    assert to_symmetric(generator("e", 2)) == want
    assert from_symmetric(want) == generator("e", 2)


def test_cup_doubles_to_two_cups():
    want = make_tangle(4, 4, [("N1", "N2"), ("N3", "N4"), ("S1", "S2"), ("S3", "S4")])
    assert to_symmetric(generator("e1", 2)) == want


def test_undecorated_diagram_is_shifted_plus_mirror():
    for t in enumerate_basis(AlgebraKind.tl(3)):
        s = to_symmetric(t)
        assert mirror(s) == s
        right = {(a, b) for a, b in (s.arc_nodes(k) for k in range(len(s.arcs))) if a[1] > 3 and b[1] > 3}
        assert len(right) == len(t.arcs)


def test_asymmetric_rejected():
    with pytest.raises(NotSymmetric):
        from_symmetric(generator("e1", 4))
    with pytest.raises(NotBlobDiagram):
        to_symmetric(identity(2).with_loops((0,)))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_symmetric_round_trip(n):
    assert verify_symmetric(n).overall


@pytest.mark.parametrize("n", range(1, 6))
def test_symmetric_count(n):
    assert len(symmetric_diagrams(n)) == comb(2 * n, n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_embedding_is_multiplicative(n):
    report = verify_embedding(n, all_pairs=n <= 2)
    assert report.overall, report.to_text()


def test_embedding_on_every_blob_pair():
    assert verify_embedding(3, all_pairs=True).overall


def test_literal_parameters_break_idempotence():
    report = verify_embedding(2, convention="stated")
    failed = {c.id for c in report.failures()}
    assert "mult[e,e]" in failed


@pytest.mark.parametrize("kind", [AlgebraKind.type_b(n) for n in (2, 3, 4)] + [AlgebraKind.type_d(4), AlgebraKind.tl(4), AlgebraKind.blob(3)],
                         ids=lambda k: f"{k.variant.value}-{k.rank}")
def test_presentations(kind):
    report = verify_presentation(kind)
    assert report.overall, report.to_text()


def test_type_d_has_commuting_branch_nodes():
    report = verify_presentation(AlgebraKind.type_d(4))
    assert "E1barE1=E1E1bar" in {c.id for c in report.checks}


def test_presentation_unsupported_for_quotient():
    with pytest.raises(ValueError):
        verify_presentation(AlgebraKind.d_quotient(4))


@pytest.mark.parametrize("kind,total", [
    (AlgebraKind.type_b(2), 7), (AlgebraKind.type_d(5), 167), (AlgebraKind.blob(4), 70), (AlgebraKind.d_quotient(4), 35),
], ids=["B2", "D5", "blob4", "dq4"])
def test_counts(kind, total):
    report = verify_counts(kind)
    assert report.overall, report.to_text()
    assert len(enumerate_basis(kind)) == total


@pytest.mark.parametrize("n", range(1, 6))
def test_toggle_orbits(n):
    ok, blobs, even = toggle_orbits_ok(n)
    assert ok and 2 * even == blobs


def test_report_serialization_is_deterministic():
    a = verify_associativity(AlgebraKind.type_b(3), samples=50, seed=4).to_json()
    b = verify_associativity(AlgebraKind.type_b(3), samples=50, seed=4).to_json()
    assert a == b
    assert set(a) == {"suite", "rank", "checks", "overall"}
    json.dumps(a)
