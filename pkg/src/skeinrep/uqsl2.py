"""Exact representation theory of quantum sl2 on tensor powers of the
fundamental module V.

V has basis (v_0, v_1) with K v_0 = q v_0, X v_0 = 0, Y v_0 = v_1 and
K v_1 = q^-1 v_1, X v_1 = v_0, Y v_1 = 0, where q = a^2.  Tensor powers
carry the iterated-coproduct action of

    D(K) = K (x) K,   D(X) = 1 (x) X + X (x) K,   D(Y) = K^-1 (x) Y + Y (x) 1,

so X acting at position j picks up K-weights from the factors to its right
and Y picks up inverse K-weights from the left.  Basis vectors of V^{(x)n}
are indexed by n-bit masks read left to right (bit 0 = v_0), ordered
lexicographically, i.e. by ascending mask.

Elementary morphisms (all exact, with q^{1/2} = a):

    b(1) = v_1 (x) v_0 - q v_0 (x) v_1          (0 -> 2)
    d(v_0 (x) v_1) = 1, d(v_1 (x) v_0) = -q^-1  (2 -> 0)
    alpha(v_0) = v^1, alpha(v_1) = -q^-1 v^0    (V -> V*, dual basis)
    c = q^{1/2} id + q^{-1/2} b d               (V (x) V braiding)
    theta = q^{3/2} id                          (twist on V)
"""

from __future__ import annotations

from .scalars import GENERIC, Mode, PoleError
from .linalg import Eliminator, kernel_basis


def mask_weight(mask: int, n: int) -> int:
    """K-weight of a basis mask: q^(n - 2 * popcount)."""
    return n - 2 * mask.bit_count()


def mask_bits(mask: int, n: int) -> str:
    return format(mask, f"0{n}b") if n else ""


class TensorVector:
    """Element of V^{(x)n} as a sparse mask -> scalar mapping."""

    __slots__ = ("rank", "components", "mode")

    def __init__(self, rank: int, components: dict, mode: Mode):
        self.rank = rank
        self.components = {m: c for m, c in components.items() if not c.is_zero()}
        self.mode = mode

    @staticmethod
    def basis(rank: int, mask: int, mode: Mode) -> "TensorVector":
        return TensorVector(rank, {mask: mode.one()}, mode)

    def is_zero(self) -> bool:
        return not self.components

    def __add__(self, other: "TensorVector") -> "TensorVector":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        comps = dict(self.components)
        for m, c in other.components.items():
            s = comps.get(m)
            comps[m] = c if s is None else s + c
        return TensorVector(self.rank, comps, self.mode)

    def __neg__(self) -> "TensorVector":
        return TensorVector(self.rank,
                            {m: -c for m, c in self.components.items()},
                            self.mode)

    def __sub__(self, other: "TensorVector") -> "TensorVector":
        return self.__add__(other.__neg__())

    def scale(self, c) -> "TensorVector":
        return TensorVector(self.rank,
                            {m: c * x for m, x in self.components.items()},
                            self.mode)

    def tensor(self, other: "TensorVector") -> "TensorVector":
        comps = {}
        for m1, c1 in self.components.items():
            for m2, c2 in other.components.items():
                comps[(m1 << other.rank) | m2] = c1 * c2
        return TensorVector(self.rank + other.rank, comps, self.mode)

    def __eq__(self, other):
        if not isinstance(other, TensorVector):
            return NotImplemented
        return self.rank == other.rank and self.components == other.components

    def __repr__(self):
        if not self.components:
            return f"TensorVector({self.rank}, 0)"
        body = " + ".join(f"({c})*|{mask_bits(m, self.rank)}>"
                          for m, c in sorted(self.components.items()))
        return f"TensorVector({self.rank}, {body})"

    def to_json_dict(self) -> dict:
        from .scalars import format_scalar
        return {mask_bits(m, self.rank): format_scalar(c)
                for m, c in sorted(self.components.items())}


class HWVector:
    """Highest-weight vector: X v = 0, K v = q^weight v."""

    __slots__ = ("vector", "weight")

    def __init__(self, vector: TensorVector, weight: int):
        self.vector = vector
        self.weight = weight

    def __repr__(self):
        return f"HWVector(weight={self.weight}, {self.vector!r})"


# ---------------------------------------------------------------------------
# generator actions

_GENERATORS = ("K", "K^-1", "X", "Y")


def act(generator: str, v: TensorVector) -> TensorVector:
    """Apply K, K^-1, X or Y through the iterated coproduct."""
    if generator not in _GENERATORS:
        raise ValueError(f"unknown generator {generator!r}")
    n, mode = v.rank, v.mode
    out: dict = {}

    def put(mask, c):
        s = out.get(mask)
        s = c if s is None else s + c
        if s.is_zero():
            out.pop(mask, None)
        else:
            out[mask] = s

    for mask, c in v.components.items():
        if generator in ("K", "K^-1"):
            w = mask_weight(mask, n)
            e = 2 * w if generator == "K" else -2 * w
            put(mask, c * mode.a_power(e))
        elif generator == "X":
            # X at position j, K on every factor right of j
            for j in range(n):
                shift = n - 1 - j
                if (mask >> shift) & 1:
                    tail = mask & ((1 << shift) - 1)
                    w = shift - 2 * tail.bit_count()
                    put(mask & ~(1 << shift), c * mode.a_power(2 * w))
        else:
            # Y at position j, K^-1 on every factor left of j
            for j in range(n):
                shift = n - 1 - j
                if not (mask >> shift) & 1:
                    head = mask >> (shift + 1)
                    w = j - 2 * head.bit_count()
                    put(mask | (1 << shift), c * mode.a_power(-2 * w))
    return TensorVector(n, out, mode)


def _qbinom(i: int, s: int, mode: Mode):
    # [i choose s] = [i]! / ([s]! [i-s]!)
    num = mode.quantum_factorial(i)
    den = mode.quantum_factorial(s) * mode.quantum_factorial(i - s)
    if den.is_zero():
        raise PoleError(f"quantum binomial [{i};{s}] undefined in mode {mode}")
    return num / den


def act_Y_power(i: int, v: TensorVector, left_rank: int) -> TensorVector:
    """Apply Y^i across the split V^{(x)left_rank} (x) V^{(x)(rank-left_rank)}
    via the divided-power coproduct

        D(Y^i) = sum_s q^{-s(i-s)} [i;s] (K^-s Y^{i-s}) (x) Y^s.
    """
    if i < 0:
        raise ValueError("negative power")
    if not 0 <= left_rank <= v.rank:
        raise ValueError("bad split")
    n, m = left_rank, v.rank - left_rank
    mode = v.mode
    # split v into left/right parts
    out = TensorVector(v.rank, {}, mode)
    for s in range(i + 1):
        coeff = mode.a_power(-2 * s * (i - s)) * _qbinom(i, s, mode)
        for mask, c in v.components.items():
            lm, rm = mask >> m, mask & ((1 << m) - 1)
            lv = TensorVector.basis(n, lm, mode)
            for _ in range(i - s):
                lv = act("Y", lv)
            for _ in range(s):
                lv = act("K^-1", lv)
            rv = TensorVector.basis(m, rm, mode)
            for _ in range(s):
                rv = act("Y", rv)
            out = out + lv.tensor(rv).scale(c * coeff)
    return out


# ---------------------------------------------------------------------------
# linear maps between tensor powers

class RepMap:
    """Sparse exact matrix V^{(x)source_rank} -> V^{(x)target_rank}."""

    __slots__ = ("source_rank", "target_rank", "entries", "mode")

    def __init__(self, source_rank: int, target_rank: int, entries: dict,
                 mode: Mode):
        self.source_rank = source_rank
        self.target_rank = target_rank
        self.entries = {k: v for k, v in entries.items() if not v.is_zero()}
        self.mode = mode

    @staticmethod
    def identity(rank: int, mode: Mode) -> "RepMap":
        one = mode.one()
        return RepMap(rank, rank,
                      {(m, m): one for m in range(1 << rank)}, mode)

    @staticmethod
    def zero(source_rank: int, target_rank: int, mode: Mode) -> "RepMap":
        return RepMap(source_rank, target_rank, {}, mode)

    def is_zero(self) -> bool:
        return not self.entries

    def __add__(self, other: "RepMap") -> "RepMap":
        if (self.source_rank, self.target_rank) != (other.source_rank,
                                                    other.target_rank):
            raise ValueError("shape mismatch")
        entries = dict(self.entries)
        for k, v in other.entries.items():
            s = entries.get(k)
            entries[k] = v if s is None else s + v
        return RepMap(self.source_rank, self.target_rank, entries, self.mode)

    def __neg__(self) -> "RepMap":
        return RepMap(self.source_rank, self.target_rank,
                      {k: -v for k, v in self.entries.items()}, self.mode)

    def __sub__(self, other: "RepMap") -> "RepMap":
        return self.__add__(other.__neg__())

    def scale(self, c) -> "RepMap":
        return RepMap(self.source_rank, self.target_rank,
                      {k: c * v for k, v in self.entries.items()}, self.mode)

    def compose(self, other: "RepMap") -> "RepMap":
        """self after other."""
        if self.source_rank != other.target_rank:
            raise ValueError("rank mismatch in composition")
        rows_other: dict = {}
        for (j, k), y in other.entries.items():
            rows_other.setdefault(j, []).append((k, y))
        out: dict = {}
        for (i, j), x in self.entries.items():
            row = rows_other.get(j)
            if row is None:
                continue
            for k, y in row:
                key = (i, k)
                s = out.get(key)
                p = x * y
                out[key] = p if s is None else s + p
        return RepMap(other.source_rank, self.target_rank, out, self.mode)

    def tensor(self, other: "RepMap") -> "RepMap":
        k2, l2 = other.source_rank, other.target_rank
        entries = {}
        for (i1, j1), x in self.entries.items():
            for (i2, j2), y in other.entries.items():
                entries[((i1 << l2) | i2, (j1 << k2) | j2)] = x * y
        return RepMap(self.source_rank + k2, self.target_rank + l2,
                      entries, self.mode)

    def apply(self, v: TensorVector) -> TensorVector:
        if v.rank != self.source_rank:
            raise ValueError("rank mismatch")
        out: dict = {}
        cols: dict = {}
        for (i, j), x in self.entries.items():
            cols.setdefault(j, []).append((i, x))
        for j, c in v.components.items():
            for i, x in cols.get(j, ()):
                s = out.get(i)
                p = x * c
                out[i] = p if s is None else s + p
        return TensorVector(self.target_rank, out, self.mode)

    def __eq__(self, other):
        if not isinstance(other, RepMap):
            return NotImplemented
        return (self.source_rank == other.source_rank
                and self.target_rank == other.target_rank
                and self.entries == other.entries)

    def __repr__(self):
        return (f"RepMap({self.source_rank}->{self.target_rank}, "
                f"{len(self.entries)} entries)")

    def to_json_dict(self) -> dict:
        from .scalars import format_scalar
        return {f"{mask_bits(i, self.target_rank)},{mask_bits(j, self.source_rank)}":
                format_scalar(v)
                for (i, j), v in sorted(self.entries.items())}


_genmat_cache: dict = {}


def generator_matrix(generator: str, rank: int, mode: Mode) -> RepMap:
    """Matrix of a generator action on V^{(x)rank} (cached)."""
    key = (generator, rank, mode)
    hit = _genmat_cache.get(key)
    if hit is not None:
        return hit
    entries = {}
    for j in range(1 << rank):
        w = act(generator, TensorVector.basis(rank, j, mode))
        for i, c in w.components.items():
            entries[(i, j)] = c
    out = RepMap(rank, rank, entries, mode)
    _genmat_cache[key] = out
    return out


def elementary_morphisms(mode: Mode = GENERIC) -> dict:
    """The structural maps b, d, alpha, c, theta on V (exact matrices)."""
    one = mode.one()
    q = mode.a_power(2)
    qinv = mode.a_power(-2)
    b = RepMap(0, 2, {(0b10, 0): one, (0b01, 0): -q}, mode)
    d = RepMap(2, 0, {(0, 0b01): one, (0, 0b10): -qinv}, mode)
    alpha = RepMap(1, 1, {(1, 0): one, (0, 1): -qinv}, mode)
    c = RepMap.identity(2, mode).scale(mode.a_power(1)) \
        + b.compose(d).scale(mode.a_power(-1))
    theta = RepMap.identity(1, mode).scale(mode.a_power(3))
    return {"b": b, "d": d, "alpha": alpha, "c": c, "theta": theta}


# ---------------------------------------------------------------------------
# highest-weight structure

def weight_slice(rank: int, weight: int) -> list:
    """Basis masks of the q^weight eigenspace, ascending."""
    if (rank - weight) % 2 or not -rank <= weight <= rank:
        return []
    ones = (rank - weight) // 2
    return [m for m in range(1 << rank) if m.bit_count() == ones]


def highest_weight_basis(n: int, target_weight: int, mode: Mode = GENERIC) -> list:
    """Basis of {v in V^{(x)n} : Xv = 0, Kv = q^target_weight v}.

    Kernel of X on the weight slice, with the reduced-echelon free-column
    normalization in lexicographic basis order.
    """
    k = target_weight
    if (n - k) % 2 or not 0 <= k <= n:
        raise ValueError(f"weight {k} not reachable from rank {n}")
    src = weight_slice(n, k)
    if not src:
        return []
    tgt = weight_slice(n, k + 2)
    tgt_index = {m: i for i, m in enumerate(tgt)}
    src_index = {m: i for i, m in enumerate(src)}
    rows: list = [{} for _ in tgt]
    for j, m in enumerate(src):
        w = act("X", TensorVector.basis(n, m, mode))
        for m2, c in w.components.items():
            rows[tgt_index[m2]][j] = c
    out = []
    for vec in kernel_basis(rows, len(src), mode.one()):
        comps = {src[j]: c for j, c in vec.items()}
        out.append(HWVector(TensorVector(n, comps, mode), k))
    return out


def cg_vector(w: HWVector, wp: HWVector, p: int):
    """Highest-weight vector of weight n+m-2p inside w (x) wp:

        sum_i (-1)^i ([m-p+i]![n-i]! / ([i]![p-i]![m-p]![n]!))
              q^{-i(m-2p+i+1)} (Y^i w) (x) (Y^{p-i} wp)
    """
    n, m = w.weight, wp.weight
    if not 0 <= p <= min(n, m):
        raise ValueError(f"p={p} out of range for weights ({n},{m})")
    mode = w.vector.mode
    den_base = mode.quantum_factorial(m - p) * mode.quantum_factorial(n)
    if den_base.is_zero():
        raise PoleError(f"vanishing quantum factorial in mode {mode}")
    # precompute Y-orbits
    worbit = [w.vector]
    for _ in range(p):
        worbit.append(act("Y", worbit[-1]))
    wporbit = [wp.vector]
    for _ in range(p):
        wporbit.append(act("Y", wporbit[-1]))
    total = None
    for i in range(p + 1):
        num = mode.quantum_factorial(m - p + i) * mode.quantum_factorial(n - i)
        den = (mode.quantum_factorial(i) * mode.quantum_factorial(p - i)
               * den_base)
        if den.is_zero():
            raise PoleError(f"vanishing quantum factorial in mode {mode}")
        coeff = num / den * mode.a_power(-2 * i * (m - 2 * p + i + 1))
        if i % 2:
            coeff = -coeff
        term = worbit[i].tensor(wporbit[p - i]).scale(coeff)
        total = term if total is None else total + term
    return HWVector(total, n + m - 2 * p)


def cg_dims(n: int, m: int, mode: Mode = GENERIC):
    """Semisimple decomposition of V_n (x) V_m.

    Returns (multiplicities, has_negligible): weight -> 1 for weights
    |n-m|, |n-m|+2, ..., n+m, truncated at 2r-4-n-m in root mode, where a
    negligible summand absorbs the rest whenever n+m > r-2.
    """
    if n < 0 or m < 0:
        raise ValueError("negative colors")
    if mode.is_root:
        r = mode.r
        if n > r - 2 or m > r - 2:
            raise ValueError(
                f"colors ({n},{m}) invalid in mode {mode}: must be <= {r - 2}")
        top = min(n + m, 2 * r - 4 - n - m)
        has_negligible = n + m > r - 2
    else:
        top = n + m
        has_negligible = False
    mults = {k: 1 for k in range(abs(n - m), top + 1, 2)}
    return mults, has_negligible


# ---------------------------------------------------------------------------
# intertwiner spaces and the highest-weight projector

_hom_cache: dict = {}


def rep_hom_basis(k: int, l: int, mode: Mode = GENERIC) -> list:
    """Basis of the maps V^{(x)k} -> V^{(x)l} commuting with K, X and Y.

    Unknowns are the entries allowed by K-equivariance (equal q-weights,
    which at a root of unity means congruent weights); X and Y impose
    linear equations solved by exact kernel extraction.
    """
    key = (k, l, mode)
    hit = _hom_cache.get(key)
    if hit is not None:
        return hit
    pairs = []
    for u in range(1 << l):
        wu = mask_weight(u, l)
        for v in range(1 << k):
            wv = mask_weight(v, k)
            if mode.a_power(2 * wu) == mode.a_power(2 * wv):
                pairs.append((u, v))
    index = {p: i for i, p in enumerate(pairs)}
    by_row: dict = {}
    by_col: dict = {}
    for u, v in pairs:
        by_row.setdefault(u, []).append(v)
        by_col.setdefault(v, []).append(u)
    rows: dict = {}
    for gen in ("X", "Y"):
        A = generator_matrix(gen, l, mode)
        B = generator_matrix(gen, k, mode)
        # (A M - M B)[u2, v] = 0
        for (u2, u), x in A.entries.items():
            for v in by_row.get(u, ()):
                row = rows.setdefault((gen, u2, v), {})
                c = index[(u, v)]
                row[c] = row.get(c, mode.zero()) + x
        for (v2, v), y in B.entries.items():
            for u2 in by_col.get(v2, ()):
                row = rows.setdefault((gen, u2, v), {})
                c = index[(u2, v2)]
                row[c] = row.get(c, mode.zero()) - y
    row_list = [ {c: x for c, x in rows[key].items() if not x.is_zero()}
                 for key in sorted(rows) ]
    out = []
    for vec in kernel_basis(row_list, len(pairs), mode.one()):
        entries = {pairs[i]: c for i, c in vec.items()}
        out.append(RepMap(k, l, entries, mode))
    _hom_cache[key] = out
    return out


def hw_projector(n: int, mode: Mode = GENERIC) -> RepMap:
    """Idempotent fixing the top isotypic component of V^{(x)n} and killing
    every component of lower highest weight.

    Built from highest-weight bases and their Y-orbits; independent of any
    diagram-side computation.
    """
    if n < 1:
        raise ValueError("rank must be >= 1")
    mode_one = mode.one()
    cols: list = []
    top_count = 0
    for k in range(n, -1, -2):
        for hw in highest_weight_basis(n, k, mode):
            u = hw.vector
            for _ in range(k + 1):
                cols.append(u)
                u = act("Y", u)
        if k == n:
            top_count = len(cols)
        if k == 0:
            break
    if len(cols) != 1 << n:
        raise ValueError(f"tensor power is not spanned by Y-orbits in mode {mode}")
    elim = Eliminator(track=True)
    for idx, col in enumerate(cols):
        elim.add(col.components, tag=idx)
    entries: dict = {}
    for j in range(1 << n):
        coords = elim.coordinates({j: mode_one})
        if coords is None:
            raise ValueError(f"tensor power is not spanned by Y-orbits in mode {mode}")
        for t, c in coords.items():
            if t >= top_count:
                continue
            for i, x in cols[t].components.items():
                key = (i, j)
                s = entries.get(key)
                p = c * x
                entries[key] = p if s is None else s + p
    return RepMap(n, n, entries, mode)
