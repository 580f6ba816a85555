import pytest

from latcon.lattice import (
    IntervalError,
    NotLatticeError,
    SizeError,
    dual_lattice,
    irreducibles,
    is_distributive,
    lattice_from_covers,
    make_boolean,
    make_chain,
    make_l_family,
    make_mk,
    make_ordinal_sum,
    make_product,
    transposes_down,
    transposes_up,
    validate_lattice,
)
from latcon.poset import canonical_form, dual, poset_from_covers

N5 = lattice_from_covers(5, [(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)])


def test_validate_chain():
    l = make_chain(3)
    for i in range(3):
        for j in range(3):
            assert l.join[i][j] == max(i, j)
            assert l.meet[i][j] == min(i, j)
    assert l.bottom == 0 and l.top == 2


def test_validate_antichain_fails():
    with pytest.raises(NotLatticeError) as exc:
        validate_lattice(poset_from_covers(2, []))
    assert exc.value.witness == (0, 1)


def test_validate_no_lub_witness():
    # two incomparable upper bounds over a shared pair
    p = poset_from_covers(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    with pytest.raises(NotLatticeError):
        validate_lattice(p)


def test_n5_tables():
    assert N5.join[1][2] == 4
    assert N5.meet[1][2] == 0
    assert N5.bottom == 0 and N5.top == 4


def test_irreducibles_n5():
    irr = irreducibles(N5)
    assert irr.jir == {1, 2, 3}
    assert irr.jred == {4}
    assert irr.lower_cover[3] == 1
    assert irr.dir == {1, 2, 3} & irr.mir


def test_irreducibles_boolean():
    irr = irreducibles(make_boolean(3))
    assert len(irr.jir) == 3
    assert len(irr.jred) == 4
    assert irr.jir == {1, 2, 4}


def test_irreducibles_chain():
    l = make_chain(6)
    irr = irreducibles(l)
    assert irr.jir == set(range(1, 6))
    assert irr.jred == set()
    assert irr.mred == set()


def test_jred_equals_joins_of_incomparable_pairs():
    import latcon.enumeration as en

    for n in range(2, 8):
        for l in en.enumerate_lattices(n):
            irr = irreducibles(l)
            joins = {
                l.join[x][y]
                for x in range(n)
                for y in range(x + 1, n)
                if not l.leq(x, y) and not l.leq(y, x)
            }
            assert joins == set(irr.jred)
            meets = {
                l.meet[x][y]
                for x in range(n)
                for y in range(x + 1, n)
                if not l.leq(x, y) and not l.leq(y, x)
            }
            assert meets == set(irr.mred)


def test_duality_swaps_irreducibles():
    for l in (N5, make_boolean(3), make_mk(4), make_l_family(9)):
        d = dual_lattice(l)
        assert irreducibles(d).jir == irreducibles(l).mir
        assert irreducibles(d).mred == irreducibles(l).jred


def test_transposes_up_n5():
    # [0, b] up to [a, top] with b=2, a=1
    assert transposes_up(N5, 0, 2, 1, 4)


def test_transposes_degenerate():
    assert transposes_up(N5, 3, 3, 3, 3)


def test_transposes_chain_false():
    l = make_chain(3)
    assert not transposes_up(l, 0, 1, 1, 2)


def test_transposes_interval_error():
    with pytest.raises(IntervalError):
        transposes_up(N5, 1, 0, 0, 4)


def test_transposes_symmetry():
    n = N5.n
    for a in range(n):
        for b in range(n):
            if not N5.leq(a, b):
                continue
            for c in range(n):
                for d in range(n):
                    if not N5.leq(c, d):
                        continue
                    assert transposes_up(N5, a, b, c, d) == transposes_down(N5, c, d, a, b)


def test_make_chain_and_sum():
    s = make_ordinal_sum(make_chain(2), make_chain(3))
    assert canonical_form(s.poset) == canonical_form(make_chain(5).poset)


def test_ordinal_sum_order():
    s = make_ordinal_sum(N5, make_mk(3))
    for x in range(5):
        for y in range(5, 10):
            assert s.leq(x, y)


def test_make_mk():
    m3 = make_mk(3)
    assert m3.n == 5
    irr = irreducibles(m3)
    assert irr.jir == {1, 2, 3} and irr.mir == {1, 2, 3}
    assert m3.join[1][2] == 4 and m3.meet[1][2] == 0


def test_make_boolean_small():
    assert make_boolean(0).n == 1
    assert make_boolean(1).n == 2
    b2 = make_boolean(2)
    assert canonical_form(b2.poset) == canonical_form(
        lattice_from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)]).poset
    )


def test_l_family_base_is_cube():
    assert canonical_form(make_l_family(8).poset) == canonical_form(make_boolean(3).poset)


@pytest.mark.parametrize("n", range(8, 13))
def test_l_family_sizes_and_jir(n):
    l = make_l_family(n)
    assert l.n == n
    assert len(irreducibles(l).jir) == n - 5


def test_constructor_size_errors():
    with pytest.raises(SizeError):
        make_chain(0)
    with pytest.raises(SizeError):
        make_mk(0)
    with pytest.raises(SizeError):
        make_l_family(7)
    with pytest.raises(SizeError):
        make_boolean(-1)


def test_make_product_grid():
    g = make_product(make_chain(2), make_chain(3))
    assert g.n == 6
    assert canonical_form(g.poset) == canonical_form(
        poset_from_covers(6, [(0, 1), (1, 2), (0, 3), (3, 4), (4, 5), (1, 4), (2, 5)])
    )


def test_product_of_chains_is_boolean():
    c2 = make_chain(2)
    cube = make_product(make_product(c2, c2), c2)
    assert canonical_form(cube.poset) == canonical_form(make_boolean(3).poset)


def test_distributive():
    assert is_distributive(make_chain(5))
    assert is_distributive(make_boolean(3))
    assert not is_distributive(N5)
    assert not is_distributive(make_mk(3))
    assert is_distributive(make_l_family(10))


def test_join_is_least_upper_bound():
    for l in (N5, make_mk(5), make_boolean(3), make_l_family(12)):
        n = l.n
        for x in range(n):
            for y in range(n):
                j = l.join[x][y]
                assert l.leq(x, j) and l.leq(y, j)
                for z in range(n):
                    if l.leq(x, z) and l.leq(y, z):
                        assert l.leq(j, z)


def test_dual_lattice_tables():
    d = dual_lattice(N5)
    assert d.join == N5.meet and d.meet == N5.join
    assert d.bottom == N5.top
    assert canonical_form(dual(dual(N5.poset))) == canonical_form(N5.poset)
