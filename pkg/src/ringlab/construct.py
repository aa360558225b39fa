"""Ring constructors and the default verification catalog.

Every constructor emits canonical tables: deterministic element encoding
(documented per constructor), zero at index 0, one at index 1, and stable
human-readable element names.  Rebuilding any catalog entry reproduces
byte-identical tables, so golden files and cross-run diffs stay stable.

Matrix-shaped rings encode an element as the row-major tuple of its entry
indices; tuples are ordered lexicographically (first entry most significant)
and the identity is then moved to index 1 by the normalization pass.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_ORDER_CAP, FiniteRing
from .errors import (
    BimoduleLawViolation,
    ClosureViolation,
    NotAnIdeal,
    NotIdempotent,
    OrderCapExceeded,
    UnsupportedFieldOrder,
)
from .subsets import Ideal, jacobson_radical
from . import subsets

# Lower coefficients (c_0, ..., c_{d-1}) of a monic irreducible
# x^d + c_{d-1} x^(d-1) + ... + c_0 over Z/p.
IRREDUCIBLE = {
    4: (2, (1, 1)),      # x^2 + x + 1 over Z/2
    8: (2, (1, 1, 0)),   # x^3 + x + 1 over Z/2
    9: (3, (1, 0)),      # x^2 + 1 over Z/3
}

SUPPORTED_FIELD_ORDERS = (2, 3, 4, 5, 7, 8, 9)


def zmod(n: int) -> FiniteRing:
    """Integers mod n; zmod(1) is the zero ring."""
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    idx = np.arange(n, dtype=np.int64)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    names = tuple(str(i) for i in range(n))
    return FiniteRing.from_tables(f"Z/{n}", add, mul, 0, 1 % n, names)


def _poly_name(coeffs: tuple[int, ...], var: str = "t") -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            head = "" if c == 1 else str(c)
            terms.append(f"{head}{var}" + (f"^{k}" if k > 1 else ""))
    return "+".join(terms) if terms else "0"


def _quotient_poly_ring(label: str, p: int, modulus: tuple[int, ...], var: str = "t") -> FiniteRing:
    """Z/p[x] mod a monic polynomial with the given lower coefficients.

    ``modulus`` lists c_0..c_{d-1} of x^d = -(c_{d-1} x^{d-1} + ... + c_0).
    Elements are little-endian digit tuples; index = sum c_i * p^i, which puts
    0 at index 0 and 1 at index 1 directly.
    """
    d = len(modulus)
    n = p ** d
    elems = [tuple(reversed(div)) for div in itertools.product(range(p), repeat=d)]
    elems.sort(key=lambda c: sum(ci * p ** i for i, ci in enumerate(c)))

    def reduce_prod(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for i, mi in enumerate(modulus):
                    prod[k - d + i] = (prod[k - d + i] - c * mi) % p
        return tuple(prod[:d])

    pos = {e: i for i, e in enumerate(elems)}
    add = np.empty((n, n), dtype=np.int32)
    mul = np.empty((n, n), dtype=np.int32)
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            add[i, j] = pos[tuple((x + y) % p for x, y in zip(a, b))]
            mul[i, j] = pos[reduce_prod(a, b)]
    names = tuple(_poly_name(e, var) for e in elems)
    return FiniteRing.from_tables(label, add, mul, pos[(0,) * d],
                                  pos[(1,) + (0,) * (d - 1)], names)


def gf(q: int) -> FiniteRing:
    """Finite field of order q, for q in the supported list."""
    if q not in SUPPORTED_FIELD_ORDERS:
        raise UnsupportedFieldOrder(f"gf({q}) not supported; choose from {SUPPORTED_FIELD_ORDERS}")
    if q in IRREDUCIBLE:
        p, modulus = IRREDUCIBLE[q]
        return _quotient_poly_ring(f"GF({q})", p, modulus)
    base = zmod(q)
    return FiniteRing(f"GF({q})", base.order, base.add_table, base.mul_table,
                      base.zero, base.one, base.elem_names)


def zn_alpha(n: int) -> FiniteRing:
    """Z/n adjoined a primitive cube root of unity: Z/n[x]/(x^2 + x + 1)."""
    if n < 2:
        raise ValueError(f"zn_alpha needs n >= 2, got {n}")
    size = n * n
    add = np.empty((size, size), dtype=np.int32)
    mul = np.empty((size, size), dtype=np.int32)
    # element a + b*w at index a + n*b, with w^2 = -w - 1
    for i in range(size):
        a1, b1 = i % n, i // n
        for j in range(size):
            a2, b2 = j % n, j // n
            add[i, j] = (a1 + a2) % n + n * ((b1 + b2) % n)
            re = (a1 * a2 - b1 * b2) % n
            im = (a1 * b2 + b1 * a2 - b1 * b2) % n
            mul[i, j] = re + n * im
    names = tuple(_poly_name((i % n, i // n), "w") for i in range(size))
    return FiniteRing.from_tables(f"Z/{n}[w]", add, mul, 0, 1, names)


def product(r: FiniteRing, s: FiniteRing, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """Componentwise product ring; element (i, j) encodes as i*|S| + j."""
    n = r.order * s.order
    if n > order_cap:
        raise OrderCapExceeded(n, order_cap)
    ri, si = np.divmod(np.arange(n, dtype=np.int64), s.order)
    add = r.add_table[np.ix_(ri, ri)].astype(np.int64) * s.order + s.add_table[np.ix_(si, si)]
    mul = r.mul_table[np.ix_(ri, ri)].astype(np.int64) * s.order + s.mul_table[np.ix_(si, si)]
    names = tuple(f"({r.name_of(int(a))},{s.name_of(int(b))})" for a, b in zip(ri, si))
    return FiniteRing.from_tables(f"{r.label} x {s.label}", add, mul,
                                  0, r.one * s.order + s.one, names, order_cap=order_cap)


# ---------------------------------------------------------------------------
# matrix-shaped rings


def _tuple_ring(
    label: str,
    base: FiniteRing,
    coords: list[tuple[int, int]],
    k: int,
    names_fn,
    *,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> FiniteRing:
    """Ring of k-by-k matrices over ``base`` supported on the given positions.

    ``coords`` lists the (row, col) cells allowed to be nonzero; the cell list
    must be closed under matrix multiplication.  Elements encode as the tuple
    of entries in coords order, most significant first.
    """
    m = len(coords)
    n = base.order ** m
    if n > order_cap:
        raise OrderCapExceeded(n, order_cap)

    def decode(index: int) -> tuple[int, ...]:
        digits = []
        for _ in range(m):
            index, rem = divmod(index, base.order)
            digits.append(rem)
        return tuple(reversed(digits))

    def encode(entries: dict[tuple[int, int], int]) -> int:
        index = 0
        for pos in coords:
            index = index * base.order + entries.get(pos, 0)
        return index

    tuples = [decode(i) for i in range(n)]
    as_mat = [dict(zip(coords, t)) for t in tuples]
    coord_set = set(coords)
    add = np.empty((n, n), dtype=np.int32)
    mul = np.empty((n, n), dtype=np.int32)
    for i, A in enumerate(as_mat):
        for j, B in enumerate(as_mat):
            add[i, j] = encode({pos: base.add(A[pos], B[pos]) for pos in coords})
            prod: dict[tuple[int, int], int] = {}
            for (ra, ca), av in A.items():
                if av == base.zero:
                    continue
                for (rb, cb), bv in B.items():
                    if ca != rb or bv == base.zero:
                        continue
                    pos = (ra, cb)
                    term = base.mul(av, bv)
                    if pos not in coord_set:
                        if term != base.zero:
                            raise ClosureViolation(
                                f"{label}: product leaves the support at {pos}")
                        continue
                    prod[pos] = base.add(prod.get(pos, base.zero), term)
            mul[i, j] = encode(prod)
    one = encode({(d, d): base.one for d in range(k) if (d, d) in coord_set})
    names = tuple(names_fn(dict(zip(coords, t))) for t in tuples)
    return FiniteRing.from_tables(label, add, mul, 0, one, names, order_cap=order_cap)


def _matrix_name(base: FiniteRing, k: int):
    def fn(entries: dict[tuple[int, int], int]) -> str:
        rows = []
        for r_ in range(k):
            cells = [base.name_of(entries.get((r_, c), base.zero)) for c in range(k)]
            rows.append("[" + ",".join(cells) + "]")
        return "[" + ",".join(rows) + "]"
    return fn


def matrix_ring(base: FiniteRing, k: int, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """Full k-by-k matrix ring over a table ring."""
    if k < 1:
        raise ValueError("matrix size must be >= 1")
    coords = [(i, j) for i in range(k) for j in range(k)]
    return _tuple_ring(f"M{k}({base.label})", base, coords, k,
                       _matrix_name(base, k), order_cap=order_cap)


def upper_triangular(base: FiniteRing, k: int, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """Upper triangular k-by-k matrices over a table ring."""
    if k < 1:
        raise ValueError("matrix size must be >= 1")
    coords = [(i, j) for i in range(k) for j in range(i, k)]
    return _tuple_ring(f"T{k}({base.label})", base, coords, k,
                       _matrix_name(base, k), order_cap=order_cap)


def equal_diagonal_subring(base: FiniteRing, k: int, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """Upper triangular matrices with constant diagonal.

    Encoded on 1 + k(k-1)/2 coordinates: the shared diagonal value first, then
    the strict-upper entries row-major.
    """
    if k < 2:
        raise ValueError("equal-diagonal subring needs k >= 2")
    strict = [(i, j) for i in range(k) for j in range(i + 1, k)]
    m = 1 + len(strict)
    n = base.order ** m
    if n > order_cap:
        raise OrderCapExceeded(n, order_cap)

    def decode(index: int) -> tuple[int, ...]:
        digits = []
        for _ in range(m):
            index, rem = divmod(index, base.order)
            digits.append(rem)
        return tuple(reversed(digits))

    def entries_of(t: tuple[int, ...]) -> dict[tuple[int, int], int]:
        ent = {(d, d): t[0] for d in range(k)}
        ent.update(dict(zip(strict, t[1:])))
        return ent

    def encode(ent: dict[tuple[int, int], int]) -> int:
        index = ent[(0, 0)]
        for pos in strict:
            index = index * base.order + ent.get(pos, 0)
        return index

    tuples = [decode(i) for i in range(n)]
    mats = [entries_of(t) for t in tuples]
    add = np.empty((n, n), dtype=np.int32)
    mul = np.empty((n, n), dtype=np.int32)
    allpos = [(d, d) for d in range(k)] + strict
    for i, A in enumerate(mats):
        for j, B in enumerate(mats):
            add[i, j] = encode({pos: base.add(A.get(pos, 0), B.get(pos, 0)) for pos in allpos})
            prod: dict[tuple[int, int], int] = {}
            for ra in range(k):
                for cb in range(k):
                    if cb < ra:
                        continue
                    acc = base.zero
                    for mid in range(ra, cb + 1):
                        acc = base.add(acc, base.mul(A.get((ra, mid), base.zero),
                                                     B.get((mid, cb), base.zero)))
                    prod[(ra, cb)] = acc
            mul[i, j] = encode(prod)
    name_fn = _matrix_name(base, k)
    names = tuple(name_fn(entries_of(t)) for t in tuples)
    one = encode({(d, d): base.one for d in range(k)} | {pos: base.zero for pos in strict})
    return FiniteRing.from_tables(f"T{k}^const({base.label})", add, mul, 0, one, names,
                                  order_cap=order_cap)


def corner(r: FiniteRing, e: int, label: str | None = None) -> FiniteRing:
    """The corner ring eRe with identity e."""
    if r.mul(e, e) != e:
        raise NotIdempotent(f"{r.label}: element {e} is not idempotent")
    exe = np.unique(r.mul_table[r.mul_table[e, :], e])
    return r.subring([int(x) for x in exe], e,
                     label if label is not None else f"e{e}({r.label})e{e}")


def quotient(r: FiniteRing, ideal: Ideal | tuple[int, ...], label: str | None = None) -> FiniteRing:
    """Quotient ring by a two-sided ideal."""
    if not isinstance(ideal, Ideal):
        ideal = Ideal(r, tuple(sorted(int(i) for i in ideal)))
    if not ideal.verify():
        raise NotAnIdeal(f"{r.label}: {ideal.members} is not a two-sided ideal")
    return subsets.quotient_ring(r, ideal, label)


# ---------------------------------------------------------------------------
# ideal extensions


@dataclass(frozen=True)
class BimoduleSpec:
    """Data for an ideal extension: base ring R, pseudo-ring S, and actions.

    ``s_add``/``s_mul`` are |S|x|S| tables over S's indices (S needs no
    identity); ``left[r, s]`` and ``right[s, r]`` give the module actions.
    ``validate`` checks that S is an associative pseudo-ring, both actions are
    biadditive module actions, and the three compatibility laws between
    actions and S-multiplication hold.
    """

    label: str
    base: FiniteRing
    s_add: np.ndarray
    s_mul: np.ndarray
    left: np.ndarray
    right: np.ndarray

    @property
    def s_order(self) -> int:
        return self.s_add.shape[0]

    def validate(self) -> None:
        r, ns = self.base, self.s_order
        s_add = np.asarray(self.s_add, dtype=np.int32)
        s_mul = np.asarray(self.s_mul, dtype=np.int32)
        left = np.asarray(self.left, dtype=np.int32)
        right = np.asarray(self.right, dtype=np.int32)
        if left.shape != (r.order, ns) or right.shape != (ns, r.order):
            raise BimoduleLawViolation("action table shape")
        # S is an abelian group with associative multiplication distributing
        # over addition.
        if not np.array_equal(s_add, s_add.T):
            raise BimoduleLawViolation("S addition commutative")
        if not np.array_equal(s_add[0], np.arange(ns)):
            raise BimoduleLawViolation("S zero at index 0")
        if not (s_add == 0).any(axis=1).all():
            raise BimoduleLawViolation("S additive inverses")
        if not np.array_equal(s_add[s_add, :], s_add[:, s_add]):
            raise BimoduleLawViolation("S addition associative")
        if not np.array_equal(s_mul[s_mul, :], s_mul[:, s_mul]):
            raise BimoduleLawViolation("S multiplication associative")
        if not np.array_equal(s_mul[:, s_add], s_add[s_mul[:, :, None], s_mul[:, None, :]]):
            raise BimoduleLawViolation("S left distributivity")
        if not np.array_equal(s_mul[s_add, :], s_add[s_mul[:, None, :], s_mul[None, :, :]]):
            raise BimoduleLawViolation("S right distributivity")
        # Biadditivity of the actions.
        if not np.array_equal(left[r.add_table, :], s_add[left[:, None, :], left[None, :, :]]):
            raise BimoduleLawViolation("left action additive in R")
        if not np.array_equal(left[:, s_add], s_add[left[:, :, None], left[:, None, :]]):
            raise BimoduleLawViolation("left action additive in S")
        if not np.array_equal(right[s_add, :], s_add[right[:, None, :], right[None, :, :]]):
            raise BimoduleLawViolation("right action additive in S")
        if not np.array_equal(right[:, r.add_table], s_add[right[:, :, None], right[:, None, :]]):
            raise BimoduleLawViolation("right action additive in R")
        # Module laws, each laid out so both gathers share the same axes.
        if not np.array_equal(left[r.mul_table, :], left[:, left]):
            # [r1, r2, s]: left[r1*r2, s] == left[r1, left[r2, s]]
            raise BimoduleLawViolation("(r1*r2)s = r1(r2*s)")
        if not np.array_equal(right[:, r.mul_table], right[right, :]):
            # [s, r1, r2]: right[s, r1*r2] == right[right[s, r1], r2]
            raise BimoduleLawViolation("s(r1*r2) = (s*r1)r2")
        if not np.array_equal(right[left, :], left[:, right]):
            # [r1, s, r2]: right[left[r1, s], r2] == left[r1, right[s, r2]]
            raise BimoduleLawViolation("(r1*s)r2 = r1(s*r2)")
        # Compatibility with S multiplication.
        if not np.array_equal(right[s_mul, :], s_mul[:, right]):
            # [s1, s2, r]: right[s1*s2, r] == s_mul[s1, right[s2, r]]
            raise BimoduleLawViolation("(s1*s2)r = s1(s2*r)")
        if not np.array_equal(left[:, s_mul], s_mul[left, :]):
            # [r, s1, s2]: left[r, s1*s2] == s_mul[left[r, s1], s2]
            raise BimoduleLawViolation("r(s1*s2) = (r*s1)s2")
        if not np.array_equal(s_mul[right, :], s_mul[:, left]):
            # [s1, r, s2]: s_mul[right[s1, r], s2] == s_mul[s1, left[r, s2]]
            raise BimoduleLawViolation("(s1*r)s2 = s1(r*s2)")

    def s_is_idempotent_free(self) -> bool:
        """No nonzero s with s*s = s."""
        diag = self.s_mul[np.arange(self.s_order), np.arange(self.s_order)]
        return not (diag[1:] == np.arange(1, self.s_order)).any()

    def s_has_quasi_inverses(self) -> bool:
        """Every s admits s' with s*s' = s'*s and s + s' + s*s' = 0."""
        for s in range(self.s_order):
            if not any(
                self.s_mul[s, t] == self.s_mul[t, s]
                and self.s_add[self.s_add[s, t], self.s_mul[s, t]] == 0
                for t in range(self.s_order)
            ):
                return False
        return True

    def idempotents_act_centrally(self) -> bool:
        """e*s = s*e for every idempotent e of the base ring and every s."""
        idem = [e for e in range(self.base.order) if self.base.mul(e, e) == e]
        return all(
            self.left[e, s] == self.right[s, e]
            for e in idem for s in range(self.s_order)
        )


def ideal_extension(spec: BimoduleSpec, *, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """The ring on R x S with product (r1,s1)(r2,s2) = (r1r2, s1s2 + r1s2 + s1r2).

    The bimodule data is validated first; the resulting tables then go through
    the full ring axiom scan, which in particular requires (1_R, 0) to act as
    identity.
    """
    spec.validate()
    r, ns = spec.base, spec.s_order
    n = r.order * ns
    if n > order_cap:
        raise OrderCapExceeded(n, order_cap)
    ri, si = np.divmod(np.arange(n, dtype=np.int64), ns)
    add = r.add_table[np.ix_(ri, ri)].astype(np.int64) * ns + spec.s_add[np.ix_(si, si)]
    s_part = spec.s_add[
        spec.s_add[spec.s_mul[np.ix_(si, si)], spec.left[np.ix_(ri, si)]],
        spec.right[np.ix_(si, ri)],
    ]
    mul = r.mul_table[np.ix_(ri, ri)].astype(np.int64) * ns + s_part
    names = tuple(f"({r.name_of(int(a))};s{int(b)})" for a, b in zip(ri, si))
    return FiniteRing.from_tables(f"I({r.label};{spec.label})", add, mul,
                                  0, r.one * ns, names, order_cap=order_cap)


def strict_upper_bimodule(base: FiniteRing, k: int, label: str | None = None) -> BimoduleSpec:
    """Strictly upper triangular k-by-k matrices over ``base`` as an R-R-bimodule.

    S multiplies as matrices (nilpotent, no identity); the base ring acts by
    scalar multiplication on entries, i.e. through the diagonal embedding.
    """
    strict = [(i, j) for i in range(k) for j in range(i + 1, k)]
    m = len(strict)
    ns = base.order ** m

    def decode(index: int) -> dict[tuple[int, int], int]:
        digits = []
        for _ in range(m):
            index, rem = divmod(index, base.order)
            digits.append(rem)
        return dict(zip(strict, reversed(digits)))

    def encode(ent: dict[tuple[int, int], int]) -> int:
        index = 0
        for pos in strict:
            index = index * base.order + ent.get(pos, 0)
        return index

    mats = [decode(i) for i in range(ns)]
    s_add = np.empty((ns, ns), dtype=np.int32)
    s_mul = np.empty((ns, ns), dtype=np.int32)
    for i, A in enumerate(mats):
        for j, B in enumerate(mats):
            s_add[i, j] = encode({p: base.add(A[p], B[p]) for p in strict})
            prod: dict[tuple[int, int], int] = {}
            for (ra, ca), av in A.items():
                for (rb, cb), bv in B.items():
                    if ca != rb:
                        continue
                    pos = (ra, cb)
                    prod[pos] = base.add(prod.get(pos, base.zero), base.mul(av, bv))
            s_mul[i, j] = encode(prod)
    left = np.empty((base.order, ns), dtype=np.int32)
    right = np.empty((ns, base.order), dtype=np.int32)
    for rv in range(base.order):
        for i, A in enumerate(mats):
            left[rv, i] = encode({p: base.mul(rv, A[p]) for p in strict})
            right[i, rv] = encode({p: base.mul(A[p], rv) for p in strict})
    return BimoduleSpec(label if label is not None else f"N{k}({base.label})",
                        base, s_add, s_mul, left, right)


def gf4_triangular_example() -> FiniteRing:
    """The 64-element ring of 3x3 matrices [[x,y,z],[0,x^2,0],[0,0,x]] over GF(4).

    The middle diagonal entry is the field square of x (squaring is a ring
    homomorphism in characteristic 2, which is what keeps the set closed under
    products -- closure is still verified cell by cell, not assumed).
    """
    f = gf(4)
    frob = np.array([f.mul(x, x) for x in range(4)], dtype=np.int32)
    elems = list(itertools.product(range(4), repeat=3))  # (x, y, z), x most significant

    def encode(x: int, y: int, z: int) -> int:
        return (x << 4) | (y << 2) | z

    n = 64
    add = np.empty((n, n), dtype=np.int32)
    mul = np.empty((n, n), dtype=np.int32)
    for i, (x1, y1, z1) in enumerate(elems):
        for j, (x2, y2, z2) in enumerate(elems):
            add[i, j] = encode(f.add(x1, x2), f.add(y1, y2), f.add(z1, z2))
            # full 3x3 product of the displayed matrices
            px = f.mul(x1, x2)
            py = f.add(f.mul(x1, y2), f.mul(y1, int(frob[x2])))
            pz = f.add(f.mul(x1, z2), f.mul(z1, x2))
            pmid = f.mul(int(frob[x1]), int(frob[x2]))
            if pmid != frob[px]:
                raise ClosureViolation("middle diagonal leaves the matrix family")
            mul[i, j] = encode(px, py, pz)
    names = tuple(
        f"[[{f.name_of(x)},{f.name_of(y)},{f.name_of(z)}],"
        f"[0,{f.name_of(int(frob[x]))},0],[0,0,{f.name_of(x)}]]"
        for (x, y, z) in elems
    )
    return FiniteRing.from_tables("GF(4) twisted triangular (order 64)", add, mul,
                                  0, encode(1, 0, 0), names)


# ---------------------------------------------------------------------------
# named bimodule specs for the extension harness


def t41_base_spec() -> BimoduleSpec:
    """Characteristic-2 strictly-upper bimodule over Z/2: all three extension
    conditions hold (s' = s works since 2s = 0 and s^2 = 0)."""
    return strict_upper_bimodule(zmod(2), 2, "N2(Z/2)")


def _projection_through(base: FiniteRing, e: int) -> np.ndarray:
    """phi[r] = 1 when the corner projection e*r*e equals e, else 0.

    For an idempotent e this is additive and multiplicative whenever the
    corner ring eRe has order 2, which is how the mutated specs below build
    their one-dimensional actions.
    """
    return np.array([1 if base.mul(base.mul(e, x), e) == e else 0
                     for x in range(base.order)], dtype=np.int32)


def t41_break_central_action_spec() -> BimoduleSpec:
    """Z/2 x Z/2 acting on a square-zero S through complementary coordinates on
    the two sides, so each nontrivial idempotent acts non-centrally."""
    base = product(zmod(2), zmod(2))
    e1, e2 = [e for e in range(4) if base.mul(e, e) == e and e not in (0, base.one)]
    s_add = np.array([[0, 1], [1, 0]], dtype=np.int32)
    s_mul = np.zeros((2, 2), dtype=np.int32)
    left = np.stack([np.zeros(4, np.int32), _projection_through(base, e1)], axis=1)
    right = np.stack([np.zeros(4, np.int32), _projection_through(base, e2)], axis=1).T.copy()
    return BimoduleSpec("sqzero-twisted", base, s_add, s_mul, left, right)


def t41_break_quasi_inverse_spec() -> BimoduleSpec:
    """Z/4 acting on itself with full multiplication: s = 1 has no quasi-inverse
    (1 + s' + s' is always odd), and S is not idempotent-free."""
    base = zmod(4)
    tab = base.mul_table.copy()
    return BimoduleSpec("Z/4-full", base, base.add_table.copy(), tab,
                        tab.copy(), tab.copy())


def t41_break_base_ring_spec() -> BimoduleSpec:
    """Upper triangular base ring (not uniquely pi-clean) acting on a square-zero
    S through the top-left corner entry on both sides, so idempotents still act
    centrally and quasi-inverses still exist."""
    base = upper_triangular(zmod(2), 2)
    e11 = base.elem_names.index("[[1,0],[0,0]]")
    phi = _projection_through(base, e11)
    s_add = np.array([[0, 1], [1, 0]], dtype=np.int32)
    s_mul = np.zeros((2, 2), dtype=np.int32)
    left = np.stack([np.zeros(8, np.int32), phi], axis=1)
    right = left.T.copy()
    return BimoduleSpec("sqzero-corner", base, s_add, s_mul, left, right)


T41_SPECS: dict[str, tuple] = {
    "t41-base": (t41_base_spec, None),
    "t41-break-central-action": (t41_break_central_action_spec, "idempotents act centrally"),
    "t41-break-quasi-inverse": (t41_break_quasi_inverse_spec, "quasi-inverses in S"),
    "t41-break-base-ring": (t41_break_base_ring_spec, "base ring uniquely pi-clean"),
}


# ---------------------------------------------------------------------------
# catalog


@dataclass(frozen=True)
class RingCatalogEntry:
    """A catalog ring with its re-executable provenance id and any expected
    predicate values (tagged with where the expectation comes from)."""

    ring: FiniteRing
    provenance: str
    expected: dict | None = None


def build_from_provenance(provenance: str) -> FiniteRing:
    """Re-execute a provenance id (same grammar as the CLI ring sources)."""
    from .sources import parse_ring_source  # local import: sources imports this module
    return parse_ring_source(provenance)


def _catalog_primary() -> list[RingCatalogEntry]:
    classified = {
        "zmod:3": {
            "uniquely_clean": (False, "2 splits both as 0+2 and as 1+1"),
            "uniquely_pi_clean": (True, "squares of nonzero elements are 1"),
        },
        "zn-alpha:3": {
            "uniquely_pi_clean": (True, "finite commutative"),
        },
        "matrix:zmod2:2": {
            "clean": (True, "exchange plus lifted idempotents"),
            "uniquely_pi_clean": (False, "non-central idempotent"),
        },
        "paper:gf4-example": {
            "uniquely_pi_clean": (True, "generalized 7-like"),
            "commutative": (False, "off-diagonal entries twist"),
            "generalized_7_like": (True, "each element has a^7 = a or a^2 = 0"),
        },
    }
    entries: list[RingCatalogEntry] = []

    def put(provenance: str, ring: FiniteRing):
        entries.append(RingCatalogEntry(ring, provenance, classified.get(provenance)))

    for n in list(range(1, 17)) + [27, 32]:
        put(f"zmod:{n}", zmod(n))
    for q in SUPPORTED_FIELD_ORDERS:
        put(f"gf:{q}", gf(q))
    bases = [("zmod2", zmod(2)), ("zmod3", zmod(3)), ("zmod4", zmod(4)),
             ("zmod6", zmod(6)), ("gf4", gf(4))]
    for (ida, a), (idb, b) in itertools.combinations_with_replacement(bases, 2):
        if a.order * b.order <= 36:
            put(f"product:{ida},{idb}", product(a, b))
    put("matrix:zmod2:2", matrix_ring(zmod(2), 2))
    put("matrix:zmod3:2", matrix_ring(zmod(3), 2))
    put("tri:zmod2:2", upper_triangular(zmod(2), 2))
    put("tri:zmod3:2", upper_triangular(zmod(3), 2))
    put("eqdiag:zmod2:2", equal_diagonal_subring(zmod(2), 2))
    put("eqdiag:zmod2:3", equal_diagonal_subring(zmod(2), 3))
    put("eqdiag:zmod3:2", equal_diagonal_subring(zmod(3), 2))
    for n in (2, 3, 4):
        put(f"zn-alpha:{n}", zn_alpha(n))
    for name, (builder, _) in T41_SPECS.items():
        put(f"extension:{name}", ideal_extension(builder()))
    put("paper:gf4-example", gf4_triangular_example())
    return entries


def default_catalog() -> list[RingCatalogEntry]:
    """The deterministic verification catalog.

    The explicitly constructed entries come first; then, for each of them, the
    corner ring of every idempotent and the quotient by the Jacobson radical,
    skipping derived rings whose canonical tables duplicate an earlier entry
    byte for byte.
    """
    entries = _catalog_primary()
    seen = {e.ring.table_bytes() for e in entries}
    derived: list[RingCatalogEntry] = []
    for entry in entries:
        r = entry.ring
        idem = [e for e in range(r.order) if r.mul(e, e) == e]
        for e in idem:
            c = corner(r, e, f"corner {e} of {r.label}")
            key = c.table_bytes()
            if key not in seen:
                seen.add(key)
                derived.append(RingCatalogEntry(c, f"corner:{entry.provenance}:{e}"))
        q = subsets.quotient_ring(r, jacobson_radical(r), f"{r.label}/J")
        key = q.table_bytes()
        if key not in seen:
            seen.add(key)
            derived.append(RingCatalogEntry(q, f"jquot:{entry.provenance}"))
    return entries + derived
