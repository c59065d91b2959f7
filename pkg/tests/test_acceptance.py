"""Acceptance gate: ten end-to-end criteria, each with a hard time budget.

Every check is exact. A criterion prints one PASS line (to the real stdout,
past pytest capture) only after all of its assertions and its time budget
hold.
"""

import itertools
import random
import sys
import time

from corpus import CLOSED_WORDS, RMOVE_PAIRS
from oracles import catalan, hom_dimension, state_sum_bracket
from skeinrep.diagrams import (TLMorphism, bracket, compose, delta,
                               e_generator, enumerate_simple,
                               identity_morphism, parse_word, resolve, tensor)
from skeinrep.functor import (F_diagram, coefficient_b, quantum_trace_rep,
                              rep_braiding, rep_coev, rep_ev, rep_twist,
                              verify_equivalence)
from skeinrep.scalars import GENERIC, RootMode, specialize
from skeinrep.tl_category import (braiding_tl, closure_trace, coev_tl, ev_tl,
                                  jones_wenzl)
from skeinrep.turaev import hom_basis, seq_size
from skeinrep.uqsl2 import (HWVector, RepMap, TensorVector, act, cg_vector,
                            elementary_morphisms, hw_projector)

from test_cli import DATA, golden, run_cli


def _done(k, t0, limit, detail):
    elapsed = time.perf_counter() - t0
    if limit is not None:
        assert elapsed < limit, \
            f"criterion {k} exceeded {limit}s: {elapsed:.1f}s"
    print(f"CRITERION {k}: PASS - {detail} ({elapsed:.1f}s)",
          file=sys.__stdout__, flush=True)


def test_criterion_01_diagram_combinatorics():
    t0 = time.perf_counter()
    m = GENERIC
    d = delta(m)
    for k in range(7):
        assert len(enumerate_simple(k, k)) == catalan(k)
        es = [e_generator(i, k, m) for i in range(1, k)]
        for i, e in enumerate(es, start=1):
            assert compose(e, e) == e.scale(d)
            for j, f in enumerate(es, start=1):
                if abs(i - j) == 1:
                    assert compose(e, compose(f, e)) == e
                elif i != j:
                    assert compose(e, f) == compose(f, e)
    _done(1, t0, 5, "Catalan counts and TL relations for k <= 6")


def test_criterion_02_bracket_engine():
    t0 = time.perf_counter()
    checked = 0
    for name, text in CLOSED_WORDS:
        word = parse_word(text)
        crossings = sum(1 for lay in word.layers if lay[0] in ("x+", "x-"))
        assert crossings <= 6, name
        assert bracket(word) == state_sum_bracket(word), name
        checked += 1
    assert len(RMOVE_PAIRS) == 20
    for left, right in RMOVE_PAIRS:
        assert resolve(parse_word(left)) == resolve(parse_word(right)), left
    _done(2, t0, 10,
          f"{checked} brackets match the state sum, 20 move pairs invariant")


def _jw_defining_properties(k, mode):
    f = jones_wenzl(k, mode).morphism
    assert compose(f, f) == f
    ident = identity_morphism(k, mode)
    coeff = f.coefficient(next(iter(ident.terms)))
    assert coeff.is_one()
    for i in range(1, k):
        e = e_generator(i, k, mode)
        assert compose(e, f).is_zero()
        assert compose(f, e).is_zero()


def test_criterion_03_jones_wenzl():
    t0 = time.perf_counter()
    for k in range(7):
        _jw_defining_properties(k, GENERIC)
    for r in (3, 4, 5):
        mode = RootMode(r)
        for k in range(r):
            _jw_defining_properties(k, mode)
    _done(3, t0, 30, "projectors idempotent and e-killing, generic and roots")


def test_criterion_04_functor_soundness():
    t0 = time.perf_counter()
    rng = random.Random(2024)
    m = GENERIC
    for _ in range(100):
        k = rng.randint(0, 3)
        l = rng.randint(0, 3)
        if (l - k) % 2:
            l += 1
        j = rng.randint(0, 3)
        if (j - l) % 2:
            j += 1
        diags_f = enumerate_simple(k, l)
        diags_g = enumerate_simple(l, j)
        f = TLMorphism(k, l, {d: m.from_int(rng.randint(-2, 2))
                              for d in diags_f}, m)
        g = TLMorphism(l, j, {d: m.from_int(rng.randint(-2, 2))
                              for d in diags_g}, m)
        assert F_diagram(g.compose(f)) == F_diagram(g).compose(F_diagram(f))
        assert F_diagram(f.tensor(g)) == F_diagram(f).tensor(F_diagram(g))
    for n in range(1, 6):
        assert F_diagram(jones_wenzl(n, m).morphism) == hw_projector(n, m)
    e = elementary_morphisms(m)
    expected_c = RepMap.identity(2, m).scale(m.a_power(1)) \
        + e["b"].compose(e["d"]).scale(m.a_power(-1))
    assert F_diagram(braiding_tl(1, 1, m)) == expected_c
    assert F_diagram(braiding_tl(1, 1, m)) == e["c"]
    _done(4, t0, 60,
          "100 random transports, F(f_n) = p_n for n <= 5, braiding exact")


def test_criterion_05_highest_weight_machinery():
    t0 = time.perf_counter()
    m = GENERIC

    def hw(n):
        return HWVector(TensorVector.basis(n, 0, m), n)

    for n in range(5):
        for mm in range(5):
            for p in range(min(n, mm) + 1):
                v = cg_vector(hw(n), hw(mm), p)
                assert v.weight == n + mm - 2 * p
                assert act("X", v.vector).is_zero()
    d = elementary_morphisms(m)["d"]
    for n in range(1, 5):
        for mm in range(1, 5):
            for j in range(1, min(n, mm) + 1):
                contract = RepMap.identity(n - 1, m).tensor(d) \
                    .tensor(RepMap.identity(mm - 1, m))
                lhs = contract.apply(cg_vector(hw(n), hw(mm), j).vector)
                rhs = cg_vector(hw(n - 1), hw(mm - 1), j - 1).vector \
                    .scale(coefficient_b(n, mm, j, m))
                assert lhs == rhs
    _done(5, t0, 60,
          "coupled vectors X-killed and contraction scalars exact, n,m <= 4")


def _color_seqs(colors, max_size):
    out, frontier = [()], [()]
    while frontier:
        new = []
        for s in frontier:
            for c in colors:
                t = s + (c,)
                if sum(t) <= max_size:
                    new.append(t)
        out.extend(new)
        frontier = new
    return out


def test_criterion_06_main_theorem_generic():
    t0 = time.perf_counter()
    seqs = _color_seqs((1, 2, 3), 8)
    pairs = 0
    for s in seqs:
        for t in seqs:
            if seq_size(s) + seq_size(t) > 8:
                continue
            rep = verify_equivalence(s, t)
            assert rep.verdict == "iso", (s, t, rep)
            assert rep.dim_diagram_side == hom_dimension(s, t), (s, t)
            pairs += 1
    assert pairs == 963
    _done(6, t0, 600, f"{pairs} generic pairs all isomorphisms")


def test_criterion_07_main_theorem_roots():
    t0 = time.perf_counter()
    total = 0
    for r in (3, 4, 5):
        mode = RootMode(r)
        seqs = _color_seqs(tuple(range(1, r - 1)), 8)
        for s in seqs:
            for t in seqs:
                if seq_size(s) + seq_size(t) > 8:
                    continue
                rep = verify_equivalence(s, t, mode)
                assert rep.verdict == "iso", (r, s, t, rep)
                assert rep.dim_diagram_side == hom_dimension(s, t, r), \
                    (r, s, t)
                total += 1
        edge = closure_trace(jones_wenzl(r - 1, mode).morphism)
        assert edge.is_zero(), r
        generic_edge = closure_trace(jones_wenzl(r - 1, GENERIC).morphism)
        assert specialize(generic_edge, r).is_zero(), r
    _done(7, t0, 600,
          f"{total} root pairs all isomorphisms, edge colors negligible")


def test_criterion_08_trace_compatibility():
    t0 = time.perf_counter()
    rng = random.Random(77)
    m = GENERIC
    objects = [(1,), (2,), (3,), (4,), (1, 1), (2, 1), (1, 2), (3, 1),
               (2, 2), (1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 1, 1)]

    def random_endo(s):
        basis = hom_basis(s, s, m)
        total = TLMorphism.zero(seq_size(s), seq_size(s), m)
        for h in basis:
            total = total + h.value.scale(m.from_int(rng.randint(-2, 2)))
        return total

    endos = []
    while len(endos) < 50:
        s = objects[len(endos) // 2 % len(objects)]
        endos.append((s, random_endo(s)))
    for s, g in endos:
        assert quantum_trace_rep(F_diagram(g)) == closure_trace(g), s
    for (s, f), (s2, g) in zip(endos[0::2], endos[1::2]):
        assert s == s2
        assert closure_trace(f.compose(g)) == closure_trace(g.compose(f)), s
    small = [(s, g) for s, g in endos if seq_size(s) <= 2]
    for (s, f), (t, g) in itertools.islice(
            itertools.combinations(small, 2), 25):
        assert closure_trace(f.tensor(g)) \
            == closure_trace(f) * closure_trace(g), (s, t)
    _done(8, t0, 60, "50 hatted endomorphisms: trace transported, "
                     "cyclic, tensor-multiplicative")


def test_criterion_09_ribbon_axioms():
    t0 = time.perf_counter()
    m = GENERIC
    idr = RepMap.identity
    # hexagons in both categories
    for n in (1, 2, 3):
        for k in (1, 2):
            for l in (1, 2):
                if k + l > 3:
                    continue
                assert braiding_tl(n, k + l, m) == compose(
                    tensor(identity_morphism(k, m), braiding_tl(n, l, m)),
                    tensor(braiding_tl(n, k, m), identity_morphism(l, m)))
                assert braiding_tl(n + k, l, m) == compose(
                    tensor(braiding_tl(n, l, m), identity_morphism(k, m)),
                    tensor(identity_morphism(n, m), braiding_tl(k, l, m)))
                assert rep_braiding(n, k + l, m) == (
                    idr(k, m).tensor(rep_braiding(n, l, m))
                    .compose(rep_braiding(n, k, m).tensor(idr(l, m))))
                assert rep_braiding(n + k, l, m) == (
                    rep_braiding(n, l, m).tensor(idr(k, m))
                    .compose(idr(n, m).tensor(rep_braiding(k, l, m))))
    # naturality: slide an endomorphism and a coevaluation across
    f_tl = e_generator(1, 2, m)
    g_tl = coev_tl(1, m)
    assert compose(braiding_tl(2, 1, m),
                   tensor(f_tl, identity_morphism(1, m))) \
        == compose(tensor(identity_morphism(1, m), f_tl),
                   braiding_tl(2, 1, m))
    assert compose(braiding_tl(2, 1, m),
                   tensor(g_tl, identity_morphism(1, m))) \
        == tensor(identity_morphism(1, m), g_tl)
    e = elementary_morphisms(m)
    f_rep = e["b"].compose(e["d"])
    assert rep_braiding(2, 1, m).compose(f_rep.tensor(idr(1, m))) \
        == idr(1, m).tensor(f_rep).compose(rep_braiding(2, 1, m))
    assert rep_braiding(2, 1, m).compose(e["b"].tensor(idr(1, m))) \
        == idr(1, m).tensor(e["b"])
    # snake identities
    for n in (1, 2, 3):
        idn = identity_morphism(n, m)
        assert compose(tensor(idn, ev_tl(n, m)),
                       tensor(coev_tl(n, m), idn)) == idn
        assert compose(tensor(ev_tl(n, m), idn),
                       tensor(idn, coev_tl(n, m))) == idn
        assert idr(n, m).tensor(rep_ev(n, m)) \
            .compose(rep_coev(n, m).tensor(idr(n, m))) == idr(n, m)
        assert rep_ev(n, m).tensor(idr(n, m)) \
            .compose(idr(n, m).tensor(rep_coev(n, m))) == idr(n, m)
    # ribbon-twist compatibility on tensor products
    from skeinrep.tl_category import twist_tl
    for n in (1, 2, 3):
        for k in (1, 2, 3):
            assert twist_tl(n + k, m) == compose(
                braiding_tl(k, n, m),
                compose(braiding_tl(n, k, m),
                        tensor(twist_tl(n, m), twist_tl(k, m))))
            assert rep_twist(n + k, m) == (
                rep_braiding(k, n, m).compose(rep_braiding(n, k, m))
                .compose(rep_twist(n, m).tensor(rep_twist(k, m))))
    _done(9, t0, 60, "hexagons, naturality, snakes, twist rule, "
                     "diagram and module sides")


def test_criterion_10_cli_golden():
    t0 = time.perf_counter()
    jobs = [
        (("bracket", DATA / "trefoil.word"), 0, "bracket_trefoil.txt"),
        (("bracket", DATA / "trefoil.word", "--format", "json"), 0,
         "bracket_trefoil.json"),
        (("bracket", DATA / "hopf.word", "--mode", "root:5"), 0,
         "bracket_hopf_root5.txt"),
        (("jw", "3"), 0, "jw3.txt"),
        (("jw", "3", "--format", "json"), 0, "jw3.json"),
        (("jw", "2", "--mode", "root:5"), 0, "jw2_root5.txt"),
        (("homdim", "1,1", "2"), 0, "homdim_11_2.txt"),
        (("homdim", "1,1", "2", "--format", "json"), 0, "homdim_11_2.json"),
        (("verify", DATA / "pairs.batch"), 0, "verify_pairs.txt"),
        (("verify", DATA / "pairs.batch", "--format", "json"), 0,
         "verify_pairs.json"),
        (("verify", DATA / "pairs.batch", "--gram-override",
          DATA / "gram_override_tampered.json"), 2, "verify_tampered.txt"),
    ]
    for argv, want_code, name in jobs:
        code, out, err = run_cli(*argv)
        assert code == want_code, (argv, code, err)
        assert out == golden(name), argv
    for argv in [("bracket", DATA / "bad.word"),
                 ("jw", "3", "--mode", "root:3"),
                 ("homdim", "3", "3", "--mode", "root:4"),
                 ("frobnicate",)]:
        code, out, err = run_cli(*argv)
        assert code == 1, argv
        assert err.startswith("error:"), argv
    _done(10, t0, None,
          "golden outputs byte-identical, exit codes 0/1/2 honored")
