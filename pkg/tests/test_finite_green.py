import itertools

import pytest

from tropgreen.finite_green import (
    Family, FamilySpec, FiniteMonoidTable, Relation, TooLarge, bool_exactness_check,
    check_not_abundant_witness, classify, col_space, colstab_colfix, compute_relation,
    left_signatures_direct,
)
from tropgreen.matrix import bool_matrix, bool_col_space, from_bits, mat_mul, to_bits
from tropgreen.plusstar import plus_of, star_of
from tropgreen.semiring import Kind


def _table(family, n):
    return FiniteMonoidTable(FamilySpec(family, n))


def _brute_partition(elems, sig):
    groups = {}
    for k, m in enumerate(elems):
        groups.setdefault(sig(m), []).append(k)
    return sorted(sorted(g) for g in groups.values())


@pytest.mark.parametrize("family,n", [(Family.FULL, 2), (Family.UPPER, 2), (Family.UPPER, 3),
                                      (Family.UNI, 3)])
def test_relations_match_brute_force(family, n):
    t = _table(family, n)
    mats = [t.matrix(k) for k in range(len(t))]
    idem = [m for m in mats if mat_mul(m, m) == m]
    sigs = {
        Relation.R: lambda a: frozenset(mat_mul(a, x) for x in mats),
        Relation.L: lambda a: frozenset(mat_mul(x, a) for x in mats),
        Relation.RSTAR: lambda a: frozenset((i, j) for (i, x), (j, y) in
                                            itertools.product(enumerate(mats), repeat=2)
                                            if mat_mul(x, a) == mat_mul(y, a)),
        Relation.RTILDE: lambda a: frozenset(to_bits(e) for e in idem if mat_mul(e, a) == a),
        Relation.LTILDE: lambda a: frozenset(to_bits(e) for e in idem if mat_mul(a, e) == a),
    }
    for rel, sig in sigs.items():
        if rel is Relation.RSTAR and len(mats) > 16:
            continue
        got = sorted(sorted(c) for c in t.partition(rel).classes)
        assert got == _brute_partition(mats, sig), rel


@pytest.mark.parametrize("family,n", [(Family.FULL, 3), (Family.UPPER, 3), (Family.UNI, 4)])
def test_left_relations_two_routes(family, n):
    t = _table(family, n)
    for rel in (Relation.L, Relation.LSTAR, Relation.LTILDE, Relation.LTILDE_U):
        sigs = left_signatures_direct(t, rel)
        direct = {frozenset(k for k in range(len(t)) if sigs[k] == sigs[a]) for a in range(len(t))}
        via_dual = {frozenset(c) for c in compute_relation(t, rel).classes}
        assert direct == via_dual, rel


@pytest.mark.parametrize("family,n", [(Family.FULL, 3), (Family.UPPER, 3), (Family.UNI, 4)])
def test_relation_refinement_chain(family, n):
    t = _table(family, n)
    R, Rs, Rt, Ru = (t.partition(r) for r in
                     (Relation.R, Relation.RSTAR, Relation.RTILDE, Relation.RTILDE_U))
    assert R.refines(Rs) and Rs.refines(Rt) and Rt.refines(Ru)
    L, H = t.partition(Relation.L), t.partition(Relation.H)
    assert H.refines(R) and H.refines(L)
    assert R.refines(t.partition(Relation.D))


def test_r_equals_column_space_equality():
    t = _table(Family.FULL, 3)
    part = t.partition(Relation.R)
    for a in range(0, len(t), 7):
        for b in range(0, len(t), 5):
            same = col_space(t.elements[a], 3) == col_space(t.elements[b], 3)
            assert part.related(a, b) == same


def test_counts():
    assert len(_table(Family.UPPER, 3)) == 64
    assert len(_table(Family.UNI, 4)) == 64
    assert len(_table(Family.FULL, 2)) == 16
    r = classify(FamilySpec(Family.UPPER, 3))
    assert r.counts["idempotents"] == 41


def test_boolean_rtilde_example():
    t = _table(Family.UPPER, 3)
    X1 = t.lookup(bool_matrix([[1, 1, 0], [0, 1, 1], [0, 0, 1]]))
    X2 = t.lookup(bool_matrix([[1, 0, 0], [0, 1, 1], [0, 0, 1]]))
    assert t.partition(Relation.RTILDE).related(X1, X2)
    assert not t.partition(Relation.R).related(X1, X2)


def test_idempotent_of_a_unitriangular_class_is_its_plus():
    t = _table(Family.UNI, 3)
    part = t.partition(Relation.RTILDE)
    for cls, es in zip(part.classes, part.idempotents):
        assert len(es) == 1
        for k in cls:
            assert plus_of(t.matrix(k)) == t.matrix(es[0])
    part = t.partition(Relation.LTILDE)
    for cls, es in zip(part.classes, part.idempotents):
        for k in cls:
            assert star_of(t.matrix(k)) == t.matrix(es[0])


@pytest.mark.parametrize("family,n,flags", [
    (Family.FULL, 2, (True, True, True)),
    (Family.UPPER, 2, (False, True, True)),
    (Family.UPPER, 3, (False, False, True)),
    (Family.UNI, 4, (False, False, True)),
])
def test_classification_flags(family, n, flags):
    r = classify(FamilySpec(family, n))
    assert (r.flags["regular"], r.flags["abundant"], r.flags["fountain"]) == flags


def test_large_tables_are_opt_in():
    with pytest.raises(TooLarge):
        FiniteMonoidTable(FamilySpec(Family.FULL, 4))
    with pytest.raises(TooLarge):
        FamilySpec(Family.FULL, 5)


def test_not_abundant_witness():
    assert check_not_abundant_witness(3).verdict


def test_colfix_realized_on_m3():
    for b in range(0, 512, 3):
        assert colstab_colfix(from_bits(b, 3)).realized


def test_column_space_example():
    assert bool_col_space(bool_matrix([[1, 0], [1, 0]])) == {(0, 0), (1, 1)}


@pytest.mark.parametrize("n", [1, 2])
def test_exactness_small(n):
    assert bool_exactness_check(n).holds


@pytest.mark.parametrize("family,n", [(Family.FULL, 2), (Family.UPPER, 3), (Family.UNI, 3)])
def test_d_is_the_composite_of_r_and_l(family, n):
    t = _table(family, n)
    R, L, D = (t.partition(r) for r in (Relation.R, Relation.L, Relation.D))
    N = len(t)
    for a in range(N):
        for b in range(N):
            composite = any(R.related(a, c) and L.related(c, b) for c in R.classes[R.class_id[a]])
            assert composite == D.related(a, b)


def test_rstar_on_upper_is_the_restriction_from_full():
    up, full = _table(Family.UPPER, 3), _table(Family.FULL, 3)
    Pu, Pf = up.partition(Relation.RSTAR), full.partition(Relation.RSTAR)
    idx = [full.index[b] for b in up.elements]
    for a in range(len(up)):
        for b in range(len(up)):
            assert Pu.related(a, b) == Pf.related(idx[a], idx[b])


def test_rtilde_class_with_zero_last_row():
    t = _table(Family.UPPER, 3)
    part = t.partition(Relation.RTILDE)
    X3 = t.lookup(bool_matrix([[0, 0, 1], [0, 1, 1], [0, 0, 0]]))
    X4 = t.lookup(bool_matrix([[0, 1, 0], [0, 1, 1], [0, 0, 0]]))
    assert part.related(X3, X4)
    idem = {t.matrix(e) for e in part.idempotents[part.class_id[X3]]}
    assert idem == {bool_matrix(r) for r in (
        [[1, 0, 0], [0, 1, 0], [0, 0, 0]], [[1, 0, 1], [0, 1, 0], [0, 0, 0]],
        [[1, 0, 0], [0, 1, 1], [0, 0, 0]], [[1, 0, 1], [0, 1, 1], [0, 0, 0]])}
    # this idempotent fixes X3 but is fixed by strictly more idempotents
    assert not part.related(X3, t.lookup(bool_matrix([[1, 1, 1], [0, 1, 0], [0, 0, 0]])))


def test_rstar_classes_without_idempotents_in_ut3():
    t = _table(Family.UPPER, 3)
    part = t.partition(Relation.RSTAR)
    free = {t.matrix(part.classes[c][k]) for c in part.idempotent_free()
            for k in range(len(part.classes[c]))}
    assert free == {bool_matrix(r) for r in (
        [[1, 1, 0], [0, 1, 1], [0, 0, 1]], [[0, 1, 0], [0, 1, 1], [0, 0, 1]],
        [[0, 0, 1], [0, 1, 1], [0, 0, 0]], [[0, 1, 0], [0, 1, 1], [0, 0, 0]])}
