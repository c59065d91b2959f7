"""The colored skein category: objects are sequences of colors, morphisms
are sandwiched by Jones-Wenzl tensors.

An object is a finite sequence s = (n_1, ..., n_m) of colors, n_i >= 1
(generically any positive integer; at a root of unity restricted to
1..r-2).  Color 0 is the unit object and normalizes away.  A morphism
s -> s' is a hatted element g^ = f_{s'} g f_s of the (|s|, |s'|) skein
space, where f_s is the tensor product of Jones-Wenzl projectors over the
blocks of s.

Good-type diagrams (no arc with both endpoints inside a single block of
the source or of the target) give a canonical basis of the hom spaces; the
Gram matrix of quantum traces against the opposite basis detects the
negligible radical, and its rank is the hom dimension in the purified
quotient.
"""

from __future__ import annotations

from . import linalg
from .diagrams import SimpleDiagram, TLMorphism, compose, enumerate_simple, tensor
from .scalars import GENERIC, Mode
from .tl_category import (
    braiding_tl,
    closure_trace,
    coev_tl,
    ev_tl,
    jw_tensor,
    markov_closure,
    twist_tl,
)


def object_seq(colors, mode: Mode = GENERIC) -> tuple:
    """Validate and normalize a color sequence (color 0 = unit, dropped)."""
    out = []
    for n in colors:
        if n == 0:
            continue
        if n < 0:
            raise ValueError(f"negative color {n}")
        if mode.is_root and n > mode.r - 2:
            raise ValueError(
                f"color {n} invalid in mode {mode}: must be <= {mode.r - 2}")
        out.append(int(n))
    return tuple(out)


def seq_size(s) -> int:
    return sum(s)


def dual_seq(s) -> tuple:
    return tuple(reversed(s))


class HattedMorphism:
    """Morphism between color sequences, absorbed by the JW sandwiches."""

    __slots__ = ("source", "target", "value")

    def __init__(self, source: tuple, target: tuple, value: TLMorphism):
        if value.inputs != seq_size(source) or value.outputs != seq_size(target):
            raise ValueError("arity mismatch between value and objects")
        self.source = tuple(source)
        self.target = tuple(target)
        self.value = value

    def __eq__(self, other):
        return (isinstance(other, HattedMorphism)
                and self.source == other.source
                and self.target == other.target
                and self.value == other.value)

    def __repr__(self):
        return f"HattedMorphism({self.source}->{self.target}, {self.value!r})"


def hat(g: TLMorphism, s, s_prime) -> HattedMorphism:
    """Sandwich g by the Jones-Wenzl tensors of the two objects."""
    mode = g.mode
    s = object_seq(s, mode)
    s_prime = object_seq(s_prime, mode)
    if g.inputs != seq_size(s) or g.outputs != seq_size(s_prime):
        raise ValueError(
            f"arity mismatch: {g.inputs}->{g.outputs} vs |{s}|, |{s_prime}|")
    value = compose(jw_tensor(s_prime, mode), compose(g, jw_tensor(s, mode)))
    return HattedMorphism(s, s_prime, value)


# ---------------------------------------------------------------------------
# good-type diagram bases

def _block_index(s) -> list:
    out = []
    for b, n in enumerate(s):
        out.extend([b] * n)
    return out


_good_cache: dict = {}


def good_type(d: SimpleDiagram, s, s_prime) -> bool:
    """No arc inside a single source block or single target block."""
    k = seq_size(s)
    inb = _block_index(s)
    outb = _block_index(s_prime)
    for p, q in enumerate(d.match):
        if p >= q:
            continue
        if q < k and inb[p] == inb[q]:
            return False
        if p >= k and outb[p - k] == outb[q - k]:
            return False
    return True


def good_type_diagrams(s, s_prime) -> list:
    """All good-type simple (|s|,|s'|)-diagrams in canonical order."""
    s, s_prime = tuple(s), tuple(s_prime)
    key = (s, s_prime)
    hit = _good_cache.get(key)
    if hit is None:
        hit = [d for d in enumerate_simple(seq_size(s), seq_size(s_prime))
               if good_type(d, s, s_prime)]
        _good_cache[key] = hit
    return hit


_hom_cache: dict = {}


def hom_basis(s, s_prime, mode: Mode = GENERIC) -> list:
    """Hatted good-type diagrams: a basis of the hom space."""
    s = object_seq(s, mode)
    s_prime = object_seq(s_prime, mode)
    key = (s, s_prime, mode)
    hit = _hom_cache.get(key)
    if hit is None:
        hit = [hat(TLMorphism.from_diagram(d, mode), s, s_prime)
               for d in good_type_diagrams(s, s_prime)]
        _hom_cache[key] = hit
    return hit


def d_nmj(n: int, m: int, j: int) -> SimpleDiagram:
    """The (n+m -> n+m-2j) diagram with j nested caps joining the last j
    points of the n-block to the first j points of the m-block."""
    if not 0 <= j <= min(n, m):
        raise ValueError(f"j={j} out of range for blocks ({n},{m})")
    k = n + m
    match = [0] * (2 * k - 2 * j)
    for i in range(j):
        p, q = n - 1 - i, n + i
        match[p], match[q] = q, p
    t = k
    for p in list(range(n - j)) + list(range(n + j, k)):
        match[p], match[t] = t, p
        t += 1
    return SimpleDiagram(k, k - 2 * j, tuple(match))


# ---------------------------------------------------------------------------
# ribbon data

def ribbon_data(s, s_prime, mode: Mode = GENERIC) -> dict:
    """Hatted structural morphisms.

    braiding: s (x) s' -> s' (x) s; twist: s -> s; coev: () -> s (x) s*;
    ev: s* (x) s -> ().
    """
    s = object_seq(s, mode)
    s_prime = object_seq(s_prime, mode)
    n, m = seq_size(s), seq_size(s_prime)
    braiding = hat(braiding_tl(n, m, mode), s + s_prime, s_prime + s)
    twist = hat(twist_tl(n, mode), s, s)
    coev = hat(coev_tl(n, mode), (), s + dual_seq(s))
    ev = hat(ev_tl(n, mode), dual_seq(s) + s, ())
    return {"braiding": braiding, "twist": twist, "coev": coev, "ev": ev}


# ---------------------------------------------------------------------------
# Gram matrices and purification

_gram_cache: dict = {}


def gram_matrix(s, s_prime, mode: Mode = GENERIC) -> list:
    """Quantum-trace pairing between the (s -> s') and (s' -> s) bases.

    Entry [i][j] is the closure trace of basis_i(s -> s') composed with
    basis_j(s' -> s).  The hat on the first factor is absorbed by
    cyclicity, so each entry needs only one plain diagram against one
    hatted one.
    """
    s = object_seq(s, mode)
    s_prime = object_seq(s_prime, mode)
    key = (s, s_prime, mode)
    hit = _gram_cache.get(key)
    if hit is not None:
        return hit
    rows_d = good_type_diagrams(s, s_prime)
    cols_h = hom_basis(s_prime, s, mode)
    sign = (-1) ** seq_size(s_prime)
    msign = mode.from_int(sign)
    out = []
    for d in rows_d:
        dm = TLMorphism.from_diagram(d, mode)
        row = []
        for h in cols_h:
            row.append(msign * markov_closure(compose(dm, h.value)))
        out.append(row)
    _gram_cache[key] = out
    return out


def gram_matrix_literal(s, s_prime, mode: Mode = GENERIC) -> list:
    """Gram matrix straight from the definition (both factors hatted,
    trace by the full diagrammatic composite).  Reference route for tests."""
    s = object_seq(s, mode)
    s_prime = object_seq(s_prime, mode)
    rows_h = hom_basis(s, s_prime, mode)
    cols_h = hom_basis(s_prime, s, mode)
    return [[closure_trace(compose(hi.value, hj.value)) for hj in cols_h]
            for hi in rows_h]


def purified_hom_dim(s, s_prime, mode: Mode = GENERIC) -> int:
    """Hom dimension after killing negligibles: the Gram-matrix rank."""
    g = gram_matrix(s, s_prime, mode)
    rows = [{j: x for j, x in enumerate(row) if not x.is_zero()} for row in g]
    return linalg.rank(rows)
