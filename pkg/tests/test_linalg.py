from skeinrep import linalg
from skeinrep.scalars import GENERIC, RootMode


def _vec(mode, *entries):
    return {j: mode.from_int(c) for j, c in enumerate(entries) if c}


def test_rank_small_generic():
    m = GENERIC
    a = m.a_power(1)
    assert linalg.rank([]) == 0
    assert linalg.rank([_vec(m, 1, 0), _vec(m, 0, 1)]) == 2
    # second row is a times the first
    rows = [{0: m.one(), 1: a}, {0: a, 1: a * a}]
    assert linalg.rank(rows) == 1
    rows = [_vec(m, 1, 1, 0), _vec(m, 0, 1, 1), _vec(m, 1, 0, -1)]
    assert linalg.rank(rows) == 2


def test_rank_root_mode():
    m = RootMode(5)
    x = m.quantum_int(2)
    rows = [{0: m.one(), 1: x}, {0: x, 1: x * x}, {2: m.one()}]
    assert linalg.rank(rows) == 2


def test_column_rank_profile():
    m = GENERIC
    # first column zero, columns 1 and 2 dependent, column 3 new
    rows = [{1: m.one(), 2: m.from_int(2)},
            {1: m.from_int(3), 2: m.from_int(6), 3: m.one()}]
    assert linalg.column_rank_profile(rows) == [1, 3]


def test_rref_rows_pivot_structure():
    m = GENERIC
    rows = [_vec(m, 2, 4, 2), _vec(m, 1, 2, 3)]
    rr = linalg.rref_rows(rows)
    assert len(rr) == 2
    pivots = [min(r) for r in rr]
    assert pivots == [0, 2]
    for r, p in zip(rr, pivots):
        assert r[p].is_one()
        # pivot columns are cleared in the other rows
        for other in rr:
            if other is not r:
                assert p not in other


def test_kernel_basis():
    m = GENERIC
    rows = [_vec(m, 1, 1, 1), _vec(m, 0, 1, 2)]
    ker = linalg.kernel_basis(rows, 3, m.one())
    assert len(ker) == 1
    v = ker[0]
    for r in rows:
        s = m.zero()
        for j, c in r.items():
            s = s + c * v.get(j, m.zero())
        assert s.is_zero()
    assert linalg.kernel_basis([_vec(m, 1, 0), _vec(m, 0, 1)], 2, m.one()) == []


def test_eliminator_coordinates():
    m = GENERIC
    a = m.a_power(1)
    elim = linalg.Eliminator(track=True)
    v0 = {0: m.one(), 1: a}
    v1 = {1: m.one(), 2: a}
    assert elim.add(v0, tag="u") == 0
    assert elim.add(v1, tag="v") == 1
    # a dependent vector is rejected and its coordinates recovered
    w = {0: m.from_int(2), 1: a * m.from_int(2) + a ** 3,
         2: a ** 4}
    assert elim.add(w, tag="w") is None
    coords = elim.coordinates(w)
    assert coords == {"u": m.from_int(2), "v": a ** 3}
    assert elim.contains(w)
    assert not elim.contains({3: m.one()})
    assert elim.rank == 2
    assert elim.pivots() == [0, 1]
    assert elim.coordinates({3: m.one()}) is None


def test_independent_subset():
    m = GENERIC
    vs = [_vec(m, 1, 1), _vec(m, 2, 2), _vec(m, 0, 1), _vec(m, 1, 0)]
    kept = linalg.independent_subset(vs)
    assert kept == [0, 2]
