import pytest

from latcon.congruence import (
    CapExceededError,
    Congruence,
    con_count,
    con_count_oracle,
    con_enumerate,
    congruence_join,
    few_criteria,
    has_many_congruences,
    is_congruence,
    jir_quasiorder,
    principal_congruence,
    refines,
)
from latcon.enumeration import enumerate_lattices
from latcon.lattice import (
    SizeError,
    dual_lattice,
    lattice_from_covers,
    make_boolean,
    make_chain,
    make_l_family,
    make_mk,
    transposes_up,
)
from latcon.poset import canonical_form, poset_from_covers

N5 = lattice_from_covers(5, [(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)])


def test_principal_reflexive_pair_is_identity():
    c = principal_congruence(N5, 2, 2)
    assert c.blocks == ((0,), (1,), (2,), (3,), (4,))


def test_principal_n5_bottom_b():
    c = principal_congruence(N5, 0, 2)
    assert c.blocks == ((0, 2), (1, 3, 4))


def test_principal_n5_a_c():
    c = principal_congruence(N5, 1, 3)
    assert c.blocks == ((0,), (1, 3), (2,), (4,))
    assert is_congruence(N5, c.blocks)


def test_congruence_join_identity_and_idempotence():
    ident = principal_congruence(N5, 0, 0)
    c = principal_congruence(N5, 0, 2)
    assert congruence_join(ident, c, N5).blocks == c.blocks
    assert congruence_join(c, c, N5).blocks == c.blocks


def test_congruence_join_n5_generates():
    c1 = principal_congruence(N5, 1, 3)
    c2 = principal_congruence(N5, 0, 2)
    j = congruence_join(c1, c2, N5)
    assert is_congruence(N5, j.blocks)
    assert refines(c1, j) and refines(c2, j)
    # oracle: the closure of both generating pairs at once
    from latcon.congruence import _close

    assert j.blocks == _close(N5, [(1, 3), (0, 2)]).blocks


def test_jir_quasiorder_chain():
    q = jir_quasiorder(make_chain(4))
    assert q.qu_poset.n == 3
    assert q.qu_poset.covers == ()


def test_jir_quasiorder_n5():
    q = jir_quasiorder(N5)
    assert q.qu_poset.n == 3
    v = poset_from_covers(3, [(0, 1), (0, 2)])
    assert canonical_form(q.qu_poset) == canonical_form(v)
    # c = 3 sits below both a = 1 and b = 2
    assert q.block_of[3] != q.block_of[1] != q.block_of[2]


def test_jir_quasiorder_m3():
    q = jir_quasiorder(make_mk(3))
    assert q.qu_poset.n == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_con_count_chain(n):
    assert con_count(make_chain(n)) == 2 ** (n - 1)


def test_con_count_known_values():
    assert con_count(make_mk(3)) == 2
    assert con_count(N5) == 5
    assert con_count(make_boolean(3)) == 8


def test_con_enumerate_singleton():
    l = make_chain(1)
    assert [c.blocks for c in con_enumerate(l)] == [((0,),)]


def test_con_enumerate_n5():
    cons = con_enumerate(N5)
    assert len(cons) == 5
    blocks = {c.blocks for c in cons}
    assert ((0,), (1,), (2,), (3,), (4,)) in blocks
    assert ((0, 1, 2, 3, 4),) in blocks
    for c in cons:
        assert is_congruence(N5, c.blocks)


def test_con_enumerate_chain3():
    assert len(con_enumerate(make_chain(3))) == 4


def test_con_enumerate_closed_under_join():
    for l in (N5, make_mk(3), make_chain(4)):
        cons = con_enumerate(l)
        blocks = {c.blocks for c in cons}
        for c1 in cons:
            for c2 in cons:
                assert congruence_join(c1, c2, l).blocks in blocks


def test_con_enumerate_cap():
    with pytest.raises(CapExceededError):
        con_enumerate(make_chain(8), cap=100)


def test_oracle_known_values():
    assert con_count_oracle(make_chain(4)) == 8
    assert con_count_oracle(N5) == 5
    assert con_count_oracle(make_mk(3)) == 2


def test_oracle_guard():
    with pytest.raises(SizeError):
        con_count_oracle(make_chain(11))


def test_oracle_equivalence_small():
    for n in range(1, 7):
        for l in enumerate_lattices(n):
            assert con_count(l) == con_count_oracle(l)


def test_has_many_congruences():
    assert has_many_congruences(make_chain(5))  # 16 > 1
    assert not has_many_congruences(make_l_family(8))  # 8 = threshold exactly
    assert has_many_congruences(make_mk(3))  # 2 > 1
    for n in (1, 2, 3, 4):
        assert has_many_congruences(make_chain(n))


def test_few_criteria_boolean4():
    crit = few_criteria(make_boolean(4))
    assert crit.jred_ge4 and crit.mred_ge4


def test_few_criteria_chain():
    crit = few_criteria(make_chain(6))
    assert not crit.jred_ge4 and not crit.mred_ge4
    assert crit.jir_collision is None


def test_few_criteria_m3_collision():
    crit = few_criteria(make_mk(3))
    assert crit.jir_collision == (1, 2)
    assert not crit.jred_ge4


def test_refines_direction():
    small = principal_congruence(N5, 1, 3)
    big = principal_congruence(N5, 0, 2)
    assert refines(small, big)
    assert not refines(big, small)


def test_duality_preserves_count():
    for l in (N5, make_mk(4), make_boolean(3), make_l_family(9), make_chain(6)):
        assert con_count(l) == con_count(dual_lattice(l))


def test_transposed_intervals_same_congruence():
    """Transposed intervals generate equal principal congruences."""
    for n in range(2, 7):
        for l in enumerate_lattices(n):
            for a in range(n):
                for b in range(n):
                    if not l.leq(a, b):
                        continue
                    for c in range(n):
                        for d in range(n):
                            if not l.leq(c, d):
                                continue
                            if transposes_up(l, a, b, c, d):
                                assert (
                                    principal_congruence(l, a, b).blocks
                                    == principal_congruence(l, c, d).blocks
                                )


def test_fjn_bound_chain():
    """|Con| <= 2^|Qu| <= 2^|Jir| over the small enumerated universe."""
    from latcon.lattice import irreducibles

    for n in range(2, 7):
        for l in enumerate_lattices(n):
            q = jir_quasiorder(l)
            assert con_count(l) <= 2 ** q.qu_poset.n <= 2 ** len(irreducibles(l).jir)


def test_distributive_equality():
    from latcon.lattice import irreducibles, is_distributive

    for n in range(1, 7):
        for l in enumerate_lattices(n):
            if is_distributive(l):
                assert con_count(l) == 2 ** len(irreducibles(l).jir)


def test_congruence_same_helper():
    c = Congruence(((0, 2), (1, 3, 4)))
    assert c.same(1, 4) and not c.same(0, 1)
    assert c.n == 5


def test_jir_quasiorder_is_reflexive_transitive():
    for n in range(2, 7):
        for l in enumerate_lattices(n):
            q = jir_quasiorder(l)
            m = len(q.jir_list)
            for a in range(m):
                assert q.rel[a] >> a & 1
                rest = q.rel[a]
                while rest:
                    b = (rest & -rest).bit_length() - 1
                    rest &= rest - 1
                    assert q.rel[b] & ~q.rel[a] == 0
