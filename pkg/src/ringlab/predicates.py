"""Clean-family predicates and theorem-characterization evaluators.

The element-level notions all revolve around decompositions into an
idempotent plus a distinguished complement:

* clean: a = e + u with e idempotent and u a unit; uniquely clean when the
  decomposition is unique;
* uniquely pi-clean: some power of the element is uniquely clean;
* uniquely nil clean: a unique idempotent e with a - e nilpotent.

Ring-level predicates are exhaustive scans of those definitions.  Each suite
identifier accepted by :func:`characterization` evaluates the right-hand side
of one biconditional as an independent condition list, composed from the
primitive operations; none of them shortcut through the uniquely-pi-clean
scan of the ring itself.  Power searches range over the distinct-power trail
of the element: any witness exponent has the same power value as one of the
trail entries, so nothing is lost by stopping at the first repeat.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .core import FiniteRing
from .subsets import (
    Ideal,
    _idempotent_array,
    _nilpotent_mask,
    _potent_mask,
    _units_mask,
    central_idempotents,
    jacobson_radical,
    j_star,
    prime_radical,
    quotient_is_torsion,
    quotient_ring,
    spectrum,
)

WitnessKind = Literal["clean", "nil-clean", "J-clean", "P-clean"]


@dataclass(frozen=True)
class CleanWitness:
    """A decomposition target^m = e + complement, tagged by complement class."""

    ring: FiniteRing
    target: int
    exponent: int
    idempotent: int
    complement: int
    kind: WitnessKind

    def verify(self) -> bool:
        r = self.ring
        if r.mul(self.idempotent, self.idempotent) != self.idempotent:
            return False
        if r.add(self.idempotent, self.complement) != r.pow(self.target, self.exponent):
            return False
        if self.kind == "clean":
            return bool(_units_mask(r)[self.complement])
        if self.kind == "nil-clean":
            return bool(_nilpotent_mask(r)[self.complement])
        if self.kind == "J-clean":
            return self.complement in jacobson_radical(r).members
        return self.complement in prime_radical(r).members


# ---------------------------------------------------------------------------
# element-level decompositions


def clean_decompositions(r: FiniteRing, a: int) -> list[tuple[int, int]]:
    """All pairs (e, u) with e idempotent, u a unit, e + u = a, ordered by e."""
    idem = _idempotent_array(r)
    umask = _units_mask(r)
    compl = r.sub_table[a, idem]
    return [(int(e), int(u)) for e, u in zip(idem, compl) if umask[u]]


def _clean_count(r: FiniteRing, a: int) -> int:
    idem = _idempotent_array(r)
    return int(_units_mask(r)[r.sub_table[a, idem]].sum())


def is_uniquely_clean_element(r: FiniteRing, a: int) -> bool:
    return _clean_count(r, a) == 1


def is_uniquely_pi_clean_element(r: FiniteRing, a: int) -> tuple[bool, int | None]:
    """Whether some power of a is uniquely clean; returns the smallest exponent."""
    for m, p in enumerate(r.power_trail(a).distinct_powers, start=1):
        if _clean_count(r, p) == 1:
            return True, m
    return False, None


def is_uniquely_nil_clean_element(r: FiniteRing, a: int) -> bool:
    """Exactly one idempotent e with a - e nilpotent."""
    idem = _idempotent_array(r)
    return int(_nilpotent_mask(r)[r.sub_table[a, idem]].sum()) == 1


def pi_clean_witness(r: FiniteRing, a: int) -> CleanWitness | None:
    """The unique decomposition at the smallest uniquely-clean power of a.

    Returns a verified witness a^m = e + u, or None when no power of a is
    uniquely clean.
    """
    ok, m = is_uniquely_pi_clean_element(r, a)
    if not ok:
        return None
    power = r.pow(a, m)
    ((e, u),) = clean_decompositions(r, power)
    witness = CleanWitness(r, a, m, e, u, "clean")
    if not witness.verify():
        raise AssertionError(f"{r.label}: witness for element {a} failed re-verification")
    return witness


# ---------------------------------------------------------------------------
# ring-level predicates


def _first_failing(r: FiniteRing, elem_pred) -> int | None:
    for a in range(r.order):
        if not elem_pred(a):
            return a
    return None


def is_clean(r: FiniteRing) -> bool:
    return _first_failing(r, lambda a: _clean_count(r, a) >= 1) is None


def is_uniquely_clean(r: FiniteRing) -> bool:
    return _first_failing(r, lambda a: _clean_count(r, a) == 1) is None


def is_uniquely_pi_clean(r: FiniteRing) -> bool:
    cached = r._memo.get("uniquely_pi_clean")
    if cached is None:
        cached = _first_failing(r, lambda a: is_uniquely_pi_clean_element(r, a)[0]) is None
        r._memo["uniquely_pi_clean"] = cached
    return cached


def is_strongly_clean(r: FiniteRing) -> bool:
    """Every a = e + u with e idempotent, u a unit, and e commuting with a."""
    idem = _idempotent_array(r)
    umask = _units_mask(r)

    def elem_ok(a: int) -> bool:
        compl = r.sub_table[a, idem]
        commute = r.mul_table[idem, a] == r.mul_table[a, idem]
        return bool((umask[compl] & commute).any())

    return _first_failing(r, elem_ok) is None


def is_uniquely_pi_nil_clean(r: FiniteRing) -> bool:
    """Some power of every element is uniquely nil clean."""

    def elem_ok(a: int) -> bool:
        return any(is_uniquely_nil_clean_element(r, p)
                   for p in r.power_trail(a).distinct_powers)

    return _first_failing(r, elem_ok) is None


def is_exchange(r: FiniteRing) -> bool:
    """For every a, some idempotent e lies in aR with 1 - e in (1-a)R."""
    idem = _idempotent_array(r)
    one_minus = r.sub_table[r.one]

    def elem_ok(a: int) -> bool:
        in_aR = np.zeros(r.order, dtype=bool)
        in_aR[r.mul_table[a]] = True
        in_bR = np.zeros(r.order, dtype=bool)
        in_bR[r.mul_table[one_minus[a]]] = True
        return bool((in_aR[idem] & in_bR[one_minus[idem]]).any())

    return _first_failing(r, elem_ok) is None


def abelian_witness(r: FiniteRing) -> tuple[int, int] | None:
    """A non-central idempotent paired with an element it fails to commute with."""
    for e in _idempotent_array(r):
        diff = r.mul_table[e] != r.mul_table[:, e]
        if diff.any():
            return int(e), int(np.flatnonzero(diff)[0])
    return None


def is_abelian(r: FiniteRing) -> bool:
    cached = r._memo.get("abelian")
    if cached is None:
        cached = abelian_witness(r) is None
        r._memo["abelian"] = cached
    return cached


def is_commutative(r: FiniteRing) -> bool:
    return bool(np.array_equal(r.mul_table, r.mul_table.T))


def is_boolean(r: FiniteRing) -> bool:
    return len(_idempotent_array(r)) == r.order


def is_potent_ring(r: FiniteRing) -> bool:
    return bool(_potent_mask(r).all())


def is_periodic(r: FiniteRing) -> bool:
    """Every element has a^m = a^n for distinct m, n; true in any finite ring,
    confirmed from the power trails rather than assumed."""
    return all(t.periodic_exponents()[0] < t.periodic_exponents()[1] for t in r.trails())


def periodic_witness(r: FiniteRing, a: int) -> tuple[int, int]:
    return r.power_trail(a).periodic_exponents()


def is_local(r: FiniteRing) -> bool:
    """Non-units form a two-sided ideal (the finite-ring reading of local)."""
    nonunits = np.flatnonzero(~_units_mask(r))
    if len(nonunits) == 0:
        return False
    ideal = Ideal(r, tuple(int(i) for i in nonunits))
    return ideal.verify()


def is_strongly_pi_regular(r: FiniteRing) -> bool:
    """For every a some n <= order has a^n inside a^(n+1) R."""

    def elem_ok(a: int) -> bool:
        p = a
        for _ in range(r.order):
            p_next = r.mul(p, a)
            if (r.mul_table[p_next] == p).any():
                return True
            p = p_next
        return False

    return _first_failing(r, elem_ok) is None


def is_potently_j_clean(r: FiniteRing) -> bool:
    """Every element is a potent element plus a Jacobson-radical element."""
    potent = np.flatnonzero(_potent_mask(r))
    jmask = jacobson_radical(r).mask()
    return _first_failing(r, lambda a: bool(jmask[r.sub_table[a, potent]].any())) is None


def is_generalized_n_like(r: FiniteRing, n: int) -> bool:
    """Whether (ab)^n - a b^n - a^n b + ab = 0 for every pair a, b."""
    if n < 2:
        raise ValueError(f"generalized n-like needs n >= 2, got {n}")
    return generalized_n_like_witness(r, n) is None


def generalized_n_like_witness(r: FiniteRing, n: int) -> tuple[int, int] | None:
    pow_n = np.array([r.pow(x, n) for x in range(r.order)], dtype=np.int32)
    ab = r.mul_table
    t1 = pow_n[ab]                      # (ab)^n
    t2 = r.mul_table[:, pow_n]          # a * b^n
    t3 = r.mul_table[pow_n, :]          # a^n * b
    total = r.add_table[r.sub_table[t1, t2], r.sub_table[ab, t3]]
    bad = np.argwhere(total != r.zero)
    if len(bad):
        return int(bad[0][0]), int(bad[0][1])
    return None


# ---------------------------------------------------------------------------
# idempotent lifting and radical set equations


def idempotents_lift_mod(r: FiniteRing, ideal: Ideal) -> bool:
    """Every x with x^2 - x in the ideal is congruent to an idempotent mod it."""
    return _lifting_scan(r, ideal, unique=False)


def idempotents_lift_uniquely_mod(r: FiniteRing, ideal: Ideal) -> bool:
    return _lifting_scan(r, ideal, unique=True)


def _lifting_scan(r: FiniteRing, ideal: Ideal, unique: bool) -> bool:
    mask = ideal.mask()
    idem = _idempotent_array(r)
    sq = r.mul_table[np.arange(r.order), np.arange(r.order)]
    candidates = np.flatnonzero(mask[r.sub_table[sq, np.arange(r.order)]])
    for x in candidates:
        count = int(mask[r.sub_table[x, idem]].sum())
        if count == 0 or (unique and count != 1):
            return False
    return True


def radical_unit_set(r: FiniteRing) -> tuple[int, ...]:
    """{x : x^m - 1 is a unit for every m}, with m over the distinct-power trail."""
    umask = _units_mask(r)
    out = []
    for t in r.trails():
        if all(umask[r.sub(p, r.one)] for p in t.distinct_powers):
            out.append(t.base)
    return tuple(out)


def _unit_power_set(r: FiniteRing, jmask: np.ndarray) -> tuple[int, ...]:
    """{x : some x^m - 1 lies in the given ideal mask}."""
    return tuple(
        t.base for t in r.trails()
        if any(jmask[r.sub(p, r.one)] for p in t.distinct_powers)
    )


# ---------------------------------------------------------------------------
# theorem right-hand sides


def _pi_shift_into(r: FiniteRing, target_mask: np.ndarray, idem: np.ndarray,
                   unique: bool) -> bool:
    """For every a, some power lands in idem + target: a^m - e in the set.

    With ``unique`` the count of qualifying idempotents at that power must be
    exactly one.
    """

    def elem_ok(a: int) -> bool:
        for p in r.power_trail(a).distinct_powers:
            count = int(target_mask[r.sub_table[p, idem]].sum())
            if (count == 1) if unique else (count >= 1):
                return True
        return False

    return _first_failing(r, elem_ok) is None


def _unique_idempotent_in_corner_modules(r: FiniteRing, left: bool) -> bool:
    """For every a, some n gives a unique idempotent e in a^n R with
    1 - e in (1 - a^n) R (or the R a^n / R(1 - a^n) version when ``left``)."""
    idem = _idempotent_array(r)
    one_minus = r.sub_table[r.one]

    def row_mask(x: int) -> np.ndarray:
        m = np.zeros(r.order, dtype=bool)
        m[r.mul_table[:, x] if left else r.mul_table[x]] = True
        return m

    def elem_ok(a: int) -> bool:
        for p in r.power_trail(a).distinct_powers:
            in_a = row_mask(p)
            in_b = row_mask(one_minus[p])
            if int((in_a[idem] & in_b[one_minus[idem]]).sum()) == 1:
                return True
        return False

    return _first_failing(r, elem_ok) is None


CHARACTERIZATION_IDS = (
    "T2.2", "T2.4", "C2.5", "T2.8", "C2.9", "T2.10", "C2.11", "C2.12",
    "T3.3", "C3.4", "T3.7", "T3.9", "C3.10-set",
    "T4.7-2", "T4.7-3", "C4.8",
)


def characterization(r: FiniteRing, thm_id: str, **caps) -> bool:
    """Evaluate the right-hand side of one characterization, independently.

    The "unique e" clauses of T2.10(1) and T3.9(1) are read as "unique
    idempotent e"; the torsion condition of T3.3 is the multiplicative one.
    Caps are forwarded to the spectrum computations where those are needed.
    """
    idem = _idempotent_array(r)
    cidem = np.array(central_idempotents(r).members, dtype=np.int32)

    if thm_id == "T2.2":
        if not is_abelian(r):
            return False
        j = jacobson_radical(r)
        if not idempotents_lift_mod(r, j):
            return False
        return is_uniquely_pi_clean(quotient_ring(r, j))
    if thm_id == "T2.4":
        return is_abelian(r) and _unique_idempotent_in_corner_modules(r, left=False)
    if thm_id == "C2.5":
        return is_abelian(r) and _unique_idempotent_in_corner_modules(r, left=True)
    if thm_id == "T2.8":
        return _pi_shift_into(r, jacobson_radical(r).mask(), cidem, unique=False)
    if thm_id == "C2.9":
        umask = _units_mask(r)
        shifted = tuple(int(x) for x in np.flatnonzero(umask[r.sub_table[:, r.one]]))
        return is_uniquely_pi_clean(r) and shifted == jacobson_radical(r).members
    if thm_id == "T2.10":
        j = jacobson_radical(r)
        return (_pi_shift_into(r, j.mask(), idem, unique=True)
                and radical_unit_set(r) == j.members)
    if thm_id == "C2.11":
        j = jacobson_radical(r)
        nilp = np.flatnonzero(_nilpotent_mask(r))
        return (_pi_shift_into(r, j.mask(), idem, unique=True)
                and bool(j.mask()[nilp].all()))
    if thm_id == "C2.12":
        umask = _units_mask(r)
        in_unit_set = np.zeros(r.order, dtype=bool)
        in_unit_set[list(_unit_power_set(r, jacobson_radical(r).mask()))] = True
        return bool(np.array_equal(in_unit_set, umask))
    if thm_id == "T3.3":
        if not is_abelian(r):
            return False
        if not idempotents_lift_mod(r, jacobson_radical(r)):
            return False
        return all(quotient_is_torsion(r, p) for p in spectrum(r, **caps).j_spec)
    if thm_id == "C3.4":
        if not is_uniquely_pi_clean(r):
            return False
        return all(r.order == 2 * len(m.members) for m in spectrum(r, **caps).maximal)
    if thm_id == "T3.7":
        if not is_exchange(r):
            return False
        js = j_star(r, **caps)
        return (is_potent_ring(quotient_ring(r, js))
                and idempotents_lift_uniquely_mod(r, js))
    if thm_id == "T3.9":
        js = j_star(r, **caps)
        return (_pi_shift_into(r, js.mask(), idem, unique=True)
                and radical_unit_set(r) == js.members)
    if thm_id == "C3.10-set":
        return radical_unit_set(r) == prime_radical(r, **caps).members
    if thm_id == "T4.7-2":
        return is_abelian(r) and is_periodic(r)
    if thm_id == "T4.7-3":
        # Unique nilpotent-complement decomposition of some power, with the
        # complement landing in the prime radical.  Counting uniqueness over
        # prime-radical complements alone degenerates when P(R) = 0 (any
        # idempotent power would do), which would not characterize anything.
        pmask = prime_radical(r, **caps).mask()
        nmask = _nilpotent_mask(r)

        def elem_ok(a: int) -> bool:
            for p in r.power_trail(a).distinct_powers:
                diffs = r.sub_table[p, idem]
                nil = nmask[diffs]
                if int(nil.sum()) == 1 and bool(pmask[diffs[nil]].all()):
                    return True
            return False

        return _first_failing(r, elem_ok) is None
    if thm_id == "C4.8":
        return _pi_shift_into(r, prime_radical(r, **caps).mask(), cidem, unique=False)
    raise ValueError(f"unknown characterization id {thm_id!r}")


# ---------------------------------------------------------------------------
# predicate vectors


GENERALIZED_RANGE = tuple(range(2, 10))

PREDICATE_NAMES = (
    "clean", "uniquely_clean", "strongly_clean", "uniquely_pi_clean",
    "uniquely_pi_nil_clean", "exchange", "abelian", "commutative", "boolean",
    "local", "potent", "periodic", "strongly_pi_regular", "potently_j_clean",
) + tuple(f"generalized_{n}_like" for n in GENERALIZED_RANGE)


@dataclass
class PredicateVector:
    """Every ring-level predicate of one ring, with counterexample witnesses.

    ``witnesses`` records, for each false predicate where one exists, the
    minimal element (or pair) exhibiting the failure.
    """

    label: str
    values: dict[str, bool]
    witnesses: dict[str, tuple[int, ...]] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "ring": self.label,
            "predicates": dict(self.values),
            "witnesses": {k: list(v) for k, v in self.witnesses.items()},
        }

    def csv_row(self) -> list[str]:
        return [self.label] + [str(self.values[name]).lower() for name in PREDICATE_NAMES]

    @staticmethod
    def csv_header() -> list[str]:
        return ["ring"] + list(PREDICATE_NAMES)


def predicate_vector(r: FiniteRing) -> PredicateVector:
    """Evaluate the full predicate battery on one ring."""
    cached = r._memo.get("predicate_vector")
    if cached is not None:
        return cached
    values: dict[str, bool] = {}
    witnesses: dict[str, tuple[int, ...]] = {}

    def put(name: str, value: bool, witness: tuple[int, ...] | None = None):
        values[name] = value
        if not value and witness is not None:
            witnesses[name] = witness

    put("clean", is_clean(r), _as_tuple(_first_failing(r, lambda a: _clean_count(r, a) >= 1)))
    put("uniquely_clean", is_uniquely_clean(r),
        _as_tuple(_first_failing(r, lambda a: _clean_count(r, a) == 1)))
    put("strongly_clean", is_strongly_clean(r), _strongly_clean_witness(r))
    put("uniquely_pi_clean", is_uniquely_pi_clean(r),
        _as_tuple(_first_failing(r, lambda a: is_uniquely_pi_clean_element(r, a)[0])))
    put("uniquely_pi_nil_clean", is_uniquely_pi_nil_clean(r),
        _as_tuple(_first_failing(r, lambda a: any(
            is_uniquely_nil_clean_element(r, p) for p in r.power_trail(a).distinct_powers))))
    put("exchange", is_exchange(r), _exchange_witness(r))
    put("abelian", is_abelian(r), abelian_witness(r))
    put("commutative", is_commutative(r), _commutative_witness(r))
    put("boolean", is_boolean(r),
        _as_tuple(_first_failing(r, lambda a: r.mul(a, a) == a)))
    put("local", is_local(r), _local_witness(r))
    put("potent", is_potent_ring(r),
        _as_tuple(_first_failing(r, lambda a: bool(_potent_mask(r)[a]))))
    put("periodic", is_periodic(r))
    put("strongly_pi_regular", is_strongly_pi_regular(r))
    put("potently_j_clean", is_potently_j_clean(r), _potently_j_clean_witness(r))
    for n in GENERALIZED_RANGE:
        put(f"generalized_{n}_like", is_generalized_n_like(r, n),
            generalized_n_like_witness(r, n))
    vec = PredicateVector(r.label, values, witnesses)
    r._memo["predicate_vector"] = vec
    return vec


def _as_tuple(x: int | None) -> tuple[int, ...] | None:
    return None if x is None else (x,)


def _commutative_witness(r: FiniteRing) -> tuple[int, int] | None:
    diff = np.argwhere(r.mul_table != r.mul_table.T)
    if len(diff):
        return int(diff[0][0]), int(diff[0][1])
    return None


def _potently_j_clean_witness(r: FiniteRing) -> tuple[int, ...] | None:
    potent = np.flatnonzero(_potent_mask(r))
    jmask = jacobson_radical(r).mask()
    return _as_tuple(_first_failing(r, lambda a: bool(jmask[r.sub_table[a, potent]].any())))


def _strongly_clean_witness(r: FiniteRing) -> tuple[int, ...] | None:
    idem = _idempotent_array(r)
    umask = _units_mask(r)
    return _as_tuple(_first_failing(r, lambda a: bool(
        (umask[r.sub_table[a, idem]] & (r.mul_table[idem, a] == r.mul_table[a, idem])).any())))


def _exchange_witness(r: FiniteRing) -> tuple[int, ...] | None:
    idem = _idempotent_array(r)
    one_minus = r.sub_table[r.one]

    def elem_ok(a: int) -> bool:
        in_a = np.zeros(r.order, dtype=bool)
        in_a[r.mul_table[a]] = True
        in_b = np.zeros(r.order, dtype=bool)
        in_b[r.mul_table[one_minus[a]]] = True
        return bool((in_a[idem] & in_b[one_minus[idem]]).any())

    return _as_tuple(_first_failing(r, elem_ok))


def _local_witness(r: FiniteRing) -> tuple[int, ...] | None:
    """A closure failure of the non-unit set: a pair summing or absorbing to a unit."""
    umask = _units_mask(r)
    nonunits = np.flatnonzero(~umask)
    if len(nonunits) == 0:
        return ()
    bad = np.argwhere(umask[r.add_table[np.ix_(nonunits, nonunits)]])
    if len(bad):
        return int(nonunits[bad[0][0]]), int(nonunits[bad[0][1]])
    bad = np.argwhere(umask[r.mul_table[:, nonunits]])
    if len(bad):
        return int(bad[0][0]), int(nonunits[bad[0][1]])
    bad = np.argwhere(umask[r.mul_table[nonunits, :]])
    if len(bad):
        return int(nonunits[bad[0][0]]), int(bad[0][1])
    return None
