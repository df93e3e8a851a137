"""The coordinate operators attached to braid generators: their action on
the algebra, the relations they satisfy, and the report plumbing."""

import random

import pytest

from titslift.autos import (AlgebraAutomorphism, RelationCheck,
                            RelationReport, conjugation_automorphism,
                            report_from_json, report_to_json, tau_generator,
                            verify_group_relations, verify_theorem1)
from titslift.liealg import (LieElement, basis_indices, bracket,
                             decompose_by_cartan, dimension, generator)
from titslift.linalg import Matrix
from titslift.tits import TitsSection, exp_construction, sigma_generator


def test_rank_one_generator_action():
    tau = tau_generator(1, 1)
    e = generator(1, "e", 1)
    f = generator(1, "f", 1)
    h = generator(1, "h", 1)
    assert tau.apply(e) == -f
    assert tau.apply(f) == -e
    assert tau.apply(h) == -h


def test_generator_action_on_adjacent_chevalley_elements():
    tau = tau_generator(2, 1)
    # tau_1 swaps the first two basis vectors of the natural module,
    # so it carries the (2,3) ladder to the (1,3) ladder
    e2 = generator(2, "e", 2)
    image = tau.apply(e2).to_matrix()
    assert image == Matrix([[0, 0, 1], [0, 0, 0], [0, 0, 0]])


def test_operator_permutes_root_lines_up_to_sign():
    # each off-diagonal basis matrix maps to plus or minus the one whose
    # indices are swapped by (i, i+1); diagonal elements stay diagonal
    # but may spread across several coroot coordinates
    from titslift.liealg import OffDiagonal, slot
    from titslift.roots import Permutation
    for n in (1, 2, 3):
        d = dimension(n)
        off = n * (n + 1)  # off-diagonal slots come first in the basis
        for i in range(1, n + 1):
            op = tau_generator(n, i).op
            swap = Permutation.transposition(n + 1, i, i + 1)
            for col, idx in enumerate(basis_indices(n), start=1):
                if col > off:
                    hit_rows = [row for row in range(1, d + 1)
                                if op[row, col] != 0]
                    assert all(row > off for row in hit_rows)
                    continue
                nonzero = [(row, op[row, col]) for row in range(1, d + 1)
                           if op[row, col] != 0]
                assert len(nonzero) == 1
                row, val = nonzero[0]
                assert val in (1, -1)
                target = OffDiagonal(swap(idx.row), swap(idx.col))
                assert row == slot(n, target) + 1


def test_fourth_power_is_identity():
    for n in (1, 2, 3):
        for i in range(1, n + 1):
            tau = tau_generator(n, i)
            assert (tau ** 4).op == Matrix.identity(dimension(n))
            assert (tau ** -1).op == (tau ** 3).op


def test_preserves_brackets():
    rng = random.Random(37)
    n = 2
    tau = tau_generator(n, 1)
    for _ in range(15):
        x = LieElement(n, tuple(rng.randint(-3, 3)
                                for _ in range(dimension(n))))
        y = LieElement(n, tuple(rng.randint(-3, 3)
                                for _ in range(dimension(n))))
        assert tau.apply(bracket(x, y)) == bracket(
            tau.apply(x), tau.apply(y))


def test_stabilizes_diagonal_part():
    for n in (2, 3):
        for i in range(1, n + 1):
            tau = tau_generator(n, i)
            for k in range(1, n + 1):
                h = generator(n, "h", k)
                assert tau.apply(h).is_cartan()


def test_compose_and_identity():
    a = tau_generator(2, 1)
    b = tau_generator(2, 2)
    assert (a * a.inverse()).op == AlgebraAutomorphism.identity(2).op
    assert ((a * b) * (a * b).inverse()).op == Matrix.identity(dimension(2))
    with pytest.raises(ValueError):
        a * tau_generator(1, 1)


def test_apply_rank_mismatch():
    with pytest.raises(ValueError):
        tau_generator(2, 1).apply(generator(1, "e", 1))


def test_operator_size_validation():
    with pytest.raises(ValueError):
        AlgebraAutomorphism(2, Matrix.identity(3))


def test_matches_conjugation_by_the_lift():
    for n in (1, 2, 3):
        s = TitsSection.ones(n)
        for i in range(1, n + 1):
            lhs = tau_generator(n, i)
            rhs = conjugation_automorphism(sigma_generator(s, i), n)
            assert lhs.op == rhs.op


def test_exponential_of_ad_is_conjugation_by_the_exponential():
    # the operator identity behind the previous test, one factor at a
    # time: exponentiating an inner derivation equals conjugating by the
    # exponential of the element itself
    from titslift.liealg import ad_matrix
    from titslift.linalg import exp_nilpotent
    from titslift.tits import GroupElement
    for n in (1, 2, 3):
        for i in range(1, n + 1):
            for x in (generator(n, "e", i), -1 * generator(n, "f", i)):
                lhs = exp_nilpotent(ad_matrix(x))
                g = GroupElement(exp_nilpotent(x.to_matrix()))
                rhs = conjugation_automorphism(g, n)
                assert lhs == rhs.op


def test_conjugation_by_diagonal_fixes_cartan_coordinates():
    from fractions import Fraction
    from titslift.linalg import Matrix as M
    from titslift.tits import GroupElement
    g = GroupElement(M.diagonal([2, Fraction(1, 4), 2]))
    conj = conjugation_automorphism(g, 2)
    for k in (1, 2):
        h = generator(2, "h", k)
        assert conj.apply(h) == h


def test_group_and_algebra_reports_agree_instance_by_instance():
    pair_tags = {"0.2": "2.9", "0.4": "2.10", "0.5": "2.11", "0.6": "2.12"}
    for n in (1, 2, 3):
        adjoint = {(pair_tags[r.tag], r.i, r.j): r.passed
                   for r in verify_theorem1(n).relations}
        group = {(r.tag, r.i, r.j): r.passed
                 for r in verify_group_relations(TitsSection.ones(n)).relations}
        assert adjoint == group


def test_conjugation_is_a_homomorphism():
    rng = random.Random(53)
    n = 2
    s = TitsSection(2, (rng.randint(1, 4), rng.randint(1, 4)))
    g = sigma_generator(s, 1)
    h = sigma_generator(s, 2)
    assert conjugation_automorphism(g * h, n).op == (
        conjugation_automorphism(g, n) * conjugation_automorphism(h, n)).op


def test_conjugation_dim_mismatch():
    from titslift.tits import GroupElement
    with pytest.raises(ValueError):
        conjugation_automorphism(GroupElement.identity(4), 2)


def test_verify_theorem1_small_ranks():
    for n in (1, 2):
        rep = verify_theorem1(n)
        assert rep.all_pass
        assert rep.failures() == []
    tags = {r.tag for r in verify_theorem1(2).relations}
    assert tags == {"0.2", "0.4", "0.5", "0.6"}


def test_verify_theorem1_rank_one_has_only_the_order_relation():
    rep = verify_theorem1(1)
    assert [r.tag for r in rep.relations] == ["0.5"]
    assert rep.all_pass


def test_verify_group_relations():
    from fractions import Fraction
    rep = verify_group_relations(TitsSection(2, (Fraction(3, 7), -2)))
    assert rep.all_pass
    assert {r.tag for r in rep.relations} == {"2.9", "2.10", "2.11", "2.12"}


def test_report_order_is_deterministic():
    rep = verify_theorem1(3)
    keys = [(r.tag, r.i, r.j) for r in rep.relations]
    assert keys == sorted(keys)


def test_report_json_round_trip():
    rep = verify_theorem1(2)
    obj = report_to_json(rep)
    assert obj["n"] == 2
    assert obj["all_pass"] is True
    assert all(set(r) == {"tag", "i", "j", "pass"} for r in obj["relations"])
    back = report_from_json(obj)
    assert back.n == rep.n
    assert [(r.tag, r.i, r.j, r.passed) for r in back.relations] == \
        [(r.tag, r.i, r.j, r.passed) for r in rep.relations]
    with pytest.raises(ValueError):
        report_from_json({"n": 2})


def test_report_all_pass_reflects_failures():
    rep = RelationReport(1, (
        RelationCheck("0.5", 1, 1, True),
        RelationCheck("0.2", 1, 2, False)))
    assert not rep.all_pass
    assert len(rep.failures()) == 1
    assert report_to_json(rep)["all_pass"] is False


def test_eigenvalue_buckets_travel_with_the_generator():
    # conjugating the algebra by the lift of i permutes the eigenspaces
    # of h_i the same way the operator permutes basis lines
    n = 2
    h = generator(n, "h", 1)
    buckets = decompose_by_cartan(n, h)
    assert set(buckets) <= {-2, -1, 0, 1, 2}
    tau = tau_generator(n, 1)
    # tau_1(h_1) = -h_1, so the +2 bucket must land inside the -2 bucket
    minus = tau.apply(h)
    flipped = decompose_by_cartan(n, minus)
    assert flipped[2] == buckets[-2]
