import pytest

from oracles import hom_dimension
from skeinrep.diagrams import compose, identity_morphism, tensor
from skeinrep.scalars import GENERIC, RootMode
from skeinrep.tl_category import (braiding_tl, closure_trace, jones_wenzl,
                                  jw_tensor, twist_tl)
from skeinrep.turaev import (HattedMorphism, d_nmj, dual_seq,
                             good_type, good_type_diagrams, gram_matrix,
                             gram_matrix_literal, hat, hom_basis, object_seq,
                             purified_hom_dim, ribbon_data, seq_size)


def _objects(maxcolor, maxsize):
    out = [()]
    stack = [((), 0)]
    while stack:
        pref, size = stack.pop()
        for c in range(1, maxcolor + 1):
            if size + c <= maxsize:
                out.append(pref + (c,))
                stack.append((pref + (c,), size + c))
    return sorted(set(out))


def test_object_seq_validation():
    assert object_seq((2, 1), GENERIC) == (2, 1)
    assert object_seq([], GENERIC) == ()
    # color 0 is the unit and is dropped
    assert object_seq((0,), GENERIC) == ()
    assert object_seq((1, 0, 2), GENERIC) == (1, 2)
    with pytest.raises(ValueError):
        object_seq((-1,), GENERIC)
    mode = RootMode(4)
    assert object_seq((2, 1), mode) == (2, 1)
    with pytest.raises(ValueError):
        object_seq((3,), mode)  # color r-1 is cut off


def test_seq_helpers():
    assert seq_size((2, 1, 3)) == 6
    assert dual_seq((2, 1, 3)) == (3, 1, 2)
    assert dual_seq(()) == ()


def test_d_nmj_shapes():
    d = d_nmj(2, 2, 1)
    assert d.inputs == 4 and d.outputs == 2
    assert d.match[1] == 2  # innermost cap joins the blocks
    assert good_type(d, (2, 2), (2,)) is False or True  # shape only here
    with pytest.raises(ValueError):
        d_nmj(2, 2, 3)
    assert d_nmj(1, 1, 0).match == (2, 3, 0, 1)


def test_good_type_counts_match_fusion():
    for s in _objects(3, 5):
        for t in _objects(3, 5):
            if (seq_size(s) + seq_size(t)) % 2:
                continue
            if seq_size(s) + seq_size(t) > 7:
                continue
            ds = good_type_diagrams(s, t)
            assert len(ds) == hom_dimension(s, t), (s, t)
            for d in ds:
                assert good_type(d, s, t)


def test_good_type_filter():
    # the cup-cap through a single 2-block is not of good type
    ds_all = good_type_diagrams((1, 1), (1, 1))
    assert len(ds_all) == 2
    ds = good_type_diagrams((2,), (2,))
    assert len(ds) == 1  # only the identity pattern survives


def test_hom_basis_is_hatted_good_type():
    mode = GENERIC
    s, t = (1, 1), (2,)
    hb = hom_basis(s, t, mode)
    ds = good_type_diagrams(s, t)
    assert len(hb) == len(ds)
    pt = jw_tensor(t, mode)
    ps = jw_tensor(s, mode)
    for h, d in zip(hb, ds):
        assert isinstance(h, HattedMorphism)
        assert h.source == s and h.target == t
        # value is the sandwiched diagram, and re-sandwiching is absorbed
        assert compose(pt, compose(h.value, ps)) == h.value


def test_hat_arity_checks():
    mode = GENERIC
    with pytest.raises(ValueError):
        hat(identity_morphism(2, mode), (1,), (2,))
    h = hat(identity_morphism(3, mode), (2, 1), (2, 1))
    assert h.source == (2, 1) and h.value.inputs == 3


def test_gram_frozen_values():
    m = GENERIC
    two = m.quantum_int(2)
    assert gram_matrix((1,), (1,)) == [[two]]
    g = gram_matrix((1, 1), (1, 1))
    assert g == [[two * two, -two], [-two, two * two]]


def test_gram_absorption_equals_literal():
    for s, t in [((1,), (1,)), ((1, 1), (1, 1)), ((1, 1), (2,)),
                 ((2, 1), (2, 1)), ((2,), (1, 1))]:
        assert gram_matrix(s, t) == gram_matrix_literal(s, t), (s, t)
    mode = RootMode(5)
    for s, t in [((1, 1), (1, 1)), ((2, 1), (2, 1)), ((3,), (1, 2))]:
        assert gram_matrix(s, t, mode) == gram_matrix_literal(s, t, mode)


def test_purified_dims_match_truncated_fusion():
    for r in (3, 4, 5):
        mode = RootMode(r)
        objs = _objects(min(3, r - 2), 4)
        for s in objs:
            for t in objs:
                if (seq_size(s) + seq_size(t)) % 2:
                    continue
                if seq_size(s) + seq_size(t) > 6:
                    continue
                assert purified_hom_dim(s, t, mode) \
                    == hom_dimension(s, t, r), (r, s, t)


def test_purification_collapses_negligible_endomorphisms():
    # at r = 4 fusion of 2 (x) 2 truncates to the unit alone, so only one
    # of the three good-type endomorphisms survives the trace pairing
    mode = RootMode(4)
    assert len(hom_basis((2, 2), (2, 2), mode)) == 3
    assert purified_hom_dim((2, 2), (2, 2), mode) == 1
    assert purified_hom_dim((2, 2), (2, 2), GENERIC) == 3


def test_ribbon_data_hatted_axioms():
    mode = GENERIC
    for s, t in [((1,), (1,)), ((2,), (1,)), ((1, 1), (2,))]:
        rd = ribbon_data(s, t, mode)
        n, m = seq_size(s), seq_size(t)
        assert rd["braiding"].value \
            == compose(jw_tensor(t + s, mode),
                       compose(braiding_tl(n, m, mode), jw_tensor(s + t, mode)))
        assert rd["twist"].source == object_seq(s, mode)
        # hatted snake: (id (x) ev) . (coev (x) id) = hatted identity
        idn = jw_tensor(s, mode)
        lhs = compose(tensor(idn, rd["ev"].value),
                      tensor(rd["coev"].value, idn))
        assert lhs == idn


def test_closure_of_hatted_identity_is_quantum_dimension():
    m = GENERIC
    for n in (1, 2, 3):
        f = jones_wenzl(n, m).morphism
        assert closure_trace(f) == m.quantum_int(n + 1)
    mode = RootMode(5)
    assert closure_trace(jones_wenzl(4, mode).morphism).is_zero()
