"""The extended affine Weyl group of a product of GL_n factors.

Elements are written t_lam . w and act on X*(T) (x) R on the left by
x |-> lam + w(x).  The group splits as W_a x| Omega where W_a is the affine
Weyl group (translations in the root lattice) and Omega, the length-zero
stabilizer of the base alcove, is free abelian on one generator per
embedding (u_j = t_{e_0} . (n-cycle) in factor j).

Lengths come in two flavours: a closed-form evaluation (used everywhere) and
an independent hyperplane-count in :mod:`alcove.oracle`.  The Bruhat order is
decided by the lifting-property recursion on reduced words; the Jantzen-style
raising order is decided by a chain search over single-reflection moves, with
the Bruhat order as a fast path when both elements are dominant.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .root_data import (
    BudgetError,
    FiniteWeylElt,
    InconclusiveRegionError,
    Point,
    Root,
    RootDatum,
    ValidationError,
    WeightVec,
    all_weyl_elements,
    pair_point,
    pairing,
)

DEFAULT_INTERVAL_BUDGET = 14


@dataclass(frozen=True, slots=True)
class ExtAffineElt:
    """t_trans . fin, acting on points by x |-> trans + fin(x)."""

    datum: RootDatum
    trans: WeightVec
    fin: FiniteWeylElt

    @staticmethod
    def identity(datum: RootDatum) -> "ExtAffineElt":
        return ExtAffineElt(datum, datum.zero(), FiniteWeylElt.identity(datum))

    @staticmethod
    def from_translation(datum: RootDatum, lam: WeightVec) -> "ExtAffineElt":
        return ExtAffineElt(datum, lam, FiniteWeylElt.identity(datum))

    @staticmethod
    def from_finite(datum: RootDatum, w: FiniteWeylElt) -> "ExtAffineElt":
        return ExtAffineElt(datum, datum.zero(), w)

    def __mul__(self, other: "ExtAffineElt") -> "ExtAffineElt":
        # (t_a w)(t_b v) = t_{a + w(b)} (w v)
        return ExtAffineElt(
            self.datum,
            self.trans + self.fin.act(other.trans),
            self.fin * other.fin,
        )

    def inverse(self) -> "ExtAffineElt":
        winv = self.fin.inverse()
        return ExtAffineElt(self.datum, -winv.act(self.trans), winv)

    def is_identity(self) -> bool:
        return self.trans.is_zero() and self.fin.is_identity()

    def act_weight(self, lam: WeightVec) -> WeightVec:
        return self.trans + self.fin.act(lam)

    def act_point(self, point: Point) -> Point:
        moved = self.fin.act_point(point)
        return tuple(
            tuple(a + b for a, b in zip(trow, mrow))
            for trow, mrow in zip(self.trans.entries, moved)
        )

    def omega_degrees(self) -> tuple[int, ...]:
        """Per-embedding class in W~/W_a; a group homomorphism to Z^f."""
        return self.trans.degrees()

    def to_json(self) -> dict:
        return {"trans": self.trans.to_json(), "perm": self.fin.to_json()}

    def key(self) -> tuple:
        return (self.trans.entries, self.fin.perms)


def p_dot(w: ExtAffineElt, lam: WeightVec) -> WeightVec:
    """The p-dot action (t_nu v) . lam = p nu + v(lam + eta) - eta."""
    datum = w.datum
    eta = datum.eta()
    return w.trans.scale(datum.p) + w.fin.act(lam + eta) - eta


def pi_elt(w: ExtAffineElt) -> ExtAffineElt:
    from .root_data import frobenius_pi, pi_weyl

    return ExtAffineElt(w.datum, frobenius_pi(w.trans), pi_weyl(w.fin))


def pi_elt_inv(w: ExtAffineElt) -> ExtAffineElt:
    from .root_data import frobenius_pi_inv, pi_weyl_inv

    return ExtAffineElt(w.datum, frobenius_pi_inv(w.trans), pi_weyl_inv(w.fin))


# ---------------------------------------------------------------------------
# generators, length, reduced words


def _cycle_perm(n: int) -> tuple[int, ...]:
    return tuple((i + 1) % n for i in range(n))


def omega_generator(datum: RootDatum, j: int) -> ExtAffineElt:
    """The length-zero generator of Omega in embedding j."""
    rows = [[0] * datum.n for _ in range(datum.f)]
    rows[j][0] = 1
    perms = [tuple(range(datum.n)) for _ in range(datum.f)]
    perms[j] = _cycle_perm(datum.n)
    return ExtAffineElt(
        datum,
        WeightVec(tuple(tuple(r) for r in rows)),
        FiniteWeylElt(tuple(perms)),
    )


def omega_element(datum: RootDatum, degrees) -> ExtAffineElt:
    """The Omega element with given per-embedding degree vector."""
    out = ExtAffineElt.identity(datum)
    for j, m in enumerate(degrees):
        gen = omega_generator(datum, j)
        if m < 0:
            gen = gen.inverse()
        for _ in range(abs(m)):
            out = out * gen
    return out


def simple_reflection(datum: RootDatum, beta: Root) -> ExtAffineElt:
    """Reflection in the finite Weyl group attached to any root."""
    perms = [list(range(datum.n)) for _ in range(datum.f)]
    perms[beta.j][beta.i], perms[beta.j][beta.k] = beta.k, beta.i
    return ExtAffineElt.from_finite(
        datum, FiniteWeylElt(tuple(tuple(p) for p in perms))
    )


def affine_reflection(datum: RootDatum, beta: Root, level: int) -> ExtAffineElt:
    """Reflection across the hyperplane <x, beta^> = level."""
    s = simple_reflection(datum, beta)
    rows = [[0] * datum.n for _ in range(datum.f)]
    rows[beta.j][beta.i] = level
    rows[beta.j][beta.k] = -level
    return ExtAffineElt(datum, WeightVec(tuple(tuple(r) for r in rows)), s.fin)


_GEN_CACHE: dict[RootDatum, list[tuple[str, ExtAffineElt]]] = {}


def coxeter_generators(datum: RootDatum) -> list[tuple[str, ExtAffineElt]]:
    """Labelled Coxeter generators of W_a: per embedding j the finite wall
    reflections s1@j .. s{n-1}@j and the affine reflection s0@j across the
    level-one wall of the highest root."""
    cached = _GEN_CACHE.get(datum)
    if cached is not None:
        return cached
    gens: list[tuple[str, ExtAffineElt]] = []
    for j in range(datum.f):
        for i in range(datum.n - 1):
            gens.append((f"s{i + 1}@{j}", simple_reflection(datum, Root(j, i, i + 1))))
        gens.append((f"s0@{j}", affine_reflection(datum, Root(j, 0, datum.n - 1), 1)))
    _GEN_CACHE[datum] = gens
    return gens


def length(w: ExtAffineElt) -> int:
    """Closed-form length of t_lam . v: sum over positive roots beta of
    |<lam, beta^>| when v^{-1} beta > 0 and |<lam, beta^> - 1| otherwise."""
    datum = w.datum
    vinv = w.fin.inverse()
    total = 0
    for beta in datum.positive_roots():
        c = pairing(w.trans, beta)
        back = vinv.act_root(beta)
        if back.is_positive:
            total += abs(c)
        else:
            total += abs(c - 1)
    return total


_DESCENT_CACHE: dict[tuple, int | None] = {}


def _first_left_descent(w: ExtAffineElt) -> int | None:
    """Index into coxeter_generators of the first s with l(s w) < l(w)."""
    key = (w.datum, w.key())
    if key in _DESCENT_CACHE:
        return _DESCENT_CACHE[key]
    lw = length(w)
    found = None
    for idx, (_, s) in enumerate(coxeter_generators(w.datum)):
        if length(s * w) < lw:
            found = idx
            break
    _DESCENT_CACHE[key] = found
    return found


_WORD_CACHE: dict[tuple, tuple[int, ...]] = {}


def _canonical_word_indices(wa: ExtAffineElt) -> tuple[int, ...]:
    """Canonical reduced word of a W_a element as generator indices, chosen
    greedily by first left descent."""
    key = (wa.datum, wa.key())
    cached = _WORD_CACHE.get(key)
    if cached is not None:
        return cached
    gens = coxeter_generators(wa.datum)
    word: list[int] = []
    cur = wa
    while True:
        idx = _first_left_descent(cur)
        if idx is None:
            break
        word.append(idx)
        cur = gens[idx][1] * cur
    if not cur.is_identity():
        raise ValidationError("element is not in the affine Weyl group")
    out = tuple(word)
    _WORD_CACHE[key] = out
    return out


@dataclass(frozen=True, slots=True)
class OmegaDecomp:
    """w = wa . delta with wa in W_a and delta of length zero."""

    wa: ExtAffineElt
    delta: ExtAffineElt


def omega_decompose(w: ExtAffineElt) -> OmegaDecomp:
    delta = omega_element(w.datum, w.omega_degrees())
    wa = w * delta.inverse()
    if wa.omega_degrees() != (0,) * w.datum.f:
        raise ValidationError("omega decomposition failed")
    return OmegaDecomp(wa, delta)


def reduced_word(w: ExtAffineElt) -> list[str]:
    """Canonical reduced word: Coxeter generator labels followed by the
    Omega part, one ``omega^m@j`` label per embedding with m != 0."""
    dec = omega_decompose(w)
    gens = coxeter_generators(w.datum)
    labels = [gens[i][0] for i in _canonical_word_indices(dec.wa)]
    for j, m in enumerate(dec.delta.omega_degrees()):
        if m != 0:
            labels.append(f"omega^{m}@{j}")
    return labels


def replay_word(datum: RootDatum, labels: list[str]) -> ExtAffineElt:
    """Multiply a labelled word back into an element (inverse of reduced_word)."""
    by_label = dict(coxeter_generators(datum))
    out = ExtAffineElt.identity(datum)
    for lab in labels:
        if lab.startswith("omega^"):
            power, j = lab[len("omega^"):].split("@")
            gen = omega_generator(datum, int(j))
            m = int(power)
            piece = gen if m >= 0 else gen.inverse()
            for _ in range(abs(m)):
                out = out * piece
        else:
            out = out * by_label[lab]
    return out


# ---------------------------------------------------------------------------
# galleries


@dataclass(frozen=True, slots=True)
class Gallery:
    """Ordered list of crossed affine hyperplanes (positive root, level) along
    a minimal gallery from the closed base alcove to w(A0)."""

    crossings: tuple[tuple[Root, int], ...]

    def __len__(self) -> int:
        return len(self.crossings)


def _apply_to_hyperplane(
    w: ExtAffineElt, beta: Root, level: int
) -> tuple[Root, int]:
    """Image of the hyperplane <x, beta^> = level under w, normalized to a
    positive root."""
    wbeta = w.fin.act_root(beta)
    new_level = level + pairing(w.trans, wbeta)
    if not wbeta.is_positive:
        wbeta, new_level = wbeta.negate(), -new_level
    return wbeta, new_level


_WALLS: dict[RootDatum, list[tuple[Root, int]]] = {}


def _generator_walls(datum: RootDatum) -> list[tuple[Root, int]]:
    """Wall of A0 fixed by each Coxeter generator, aligned with
    coxeter_generators ordering."""
    cached = _WALLS.get(datum)
    if cached is None:
        cached = []
        for j in range(datum.f):
            for i in range(datum.n - 1):
                cached.append((Root(j, i, i + 1), 0))
            cached.append((Root(j, 0, datum.n - 1), 1))
        _WALLS[datum] = cached
    return cached


def minimal_gallery(w: ExtAffineElt) -> Gallery:
    """Crossed hyperplanes of the canonical reduced word, in crossing order."""
    dec = omega_decompose(w)
    word = _canonical_word_indices(dec.wa)
    gens = coxeter_generators(w.datum)
    walls = _generator_walls(w.datum)
    crossings = []
    prefix = ExtAffineElt.identity(w.datum)
    for idx in word:
        beta, level = walls[idx]
        crossings.append(_apply_to_hyperplane(prefix, beta, level))
        prefix = prefix * gens[idx][1]
    return Gallery(tuple(crossings))


def separating_hyperplanes(w: ExtAffineElt) -> set[tuple[Root, int]]:
    """Set of affine hyperplanes separating the open base alcove from w(A0),
    computed from exact vertex evaluations."""
    datum = w.datum
    out: set[tuple[Root, int]] = set()
    images = [w.act_weight(v) for v in datum.base_vertices()]
    for beta in datum.positive_roots():
        vals = [pairing(img, beta) for img in images]
        lo, hi = min(vals), max(vals)
        # image strip is (lo, hi) = (c, c+1); base strip is (0, 1)
        if lo >= 1:
            out.update((beta, k) for k in range(1, lo + 1))
        elif hi <= 0:
            out.update((beta, k) for k in range(hi, 1))
    return out


# ---------------------------------------------------------------------------
# region membership


def _simple_pairings(w: ExtAffineElt) -> list[Fraction]:
    pt = w.act_point(w.datum.sample_point())
    return [pair_point(pt, beta) for beta in w.datum.simple_roots()]


def is_dominant_elt(w: ExtAffineElt) -> bool:
    """w(A0) dominant: positive simple pairings on an interior point."""
    return all(v > 0 for v in _simple_pairings(w))


def is_restricted_elt(w: ExtAffineElt) -> bool:
    """w(A0) restricted: simple pairings within (0, 1)."""
    return all(0 < v < 1 for v in _simple_pairings(w))


def in_omega(w: ExtAffineElt) -> bool:
    return length(w) == 0


def w0_element(datum: RootDatum) -> ExtAffineElt:
    return ExtAffineElt.from_finite(datum, FiniteWeylElt.longest(datum))


def wh_element(datum: RootDatum) -> ExtAffineElt:
    """w0 . t_{-eta}, the restricted element pairing the lowest and highest
    restricted alcoves."""
    return w0_element(datum) * ExtAffineElt.from_translation(datum, -datum.eta())


def diamond(w: ExtAffineElt) -> ExtAffineElt:
    """The canonical restricted representative t_nu . w of X*(T) w.

    Existence: restricted alcoves form a fundamental domain for translations.
    The translation is pinned modulo X^0 by requiring the minimum entry of
    each embedding component of the result's translation part to be 0.
    """
    datum = w.datum
    y = w.act_point(datum.sample_point())
    shift_rows = []
    for j in range(datum.f):
        row = y[j]
        nu = [0] * datum.n
        for i in range(datum.n - 2, -1, -1):
            # unique integer with 0 < (row[i] + nu[i]) - (row[i+1] + nu[i+1]) < 1
            lo = row[i + 1] + nu[i + 1] - row[i]
            nu[i] = math.floor(lo) + 1
        shift_rows.append(tuple(nu))
    cand = ExtAffineElt.from_translation(datum, WeightVec(tuple(shift_rows))) * w
    # normalize the X^0 ambiguity: minimum translation entry 0 per embedding
    mins = [-min(row) for row in cand.trans.entries]
    from .root_data import x0_shift

    out = ExtAffineElt.from_translation(datum, x0_shift(datum, mins)) * cand
    if not is_restricted_elt(out):
        raise ValidationError("diamond construction left the restricted region")
    return out


_RESTRICTED_REPS: dict[RootDatum, list[ExtAffineElt]] = {}


def restricted_reps(datum: RootDatum) -> list[ExtAffineElt]:
    """Canonical representatives of the restricted elements modulo X^0, one
    per finite Weyl element, in a fixed deterministic order."""
    cached = _RESTRICTED_REPS.get(datum)
    if cached is None:
        cached = [
            diamond(ExtAffineElt.from_finite(datum, w))
            for w in all_weyl_elements(datum)
        ]
        _RESTRICTED_REPS[datum] = cached
    return cached


# ---------------------------------------------------------------------------
# Bruhat order


_BRUHAT_CACHE: dict[tuple, bool] = {}


def bruhat_leq(u: ExtAffineElt, w: ExtAffineElt) -> bool:
    """Bruhat order on the extended group: equal Omega parts and the lifting
    property recursion on the affine Weyl group parts."""
    if u.omega_degrees() != w.omega_degrees():
        return False
    delta_inv = omega_element(u.datum, u.omega_degrees()).inverse()
    return _bruhat_wa(u * delta_inv, w * delta_inv)


def _bruhat_wa(u: ExtAffineElt, w: ExtAffineElt) -> bool:
    key = (u.datum, u.key(), w.key())
    cached = _BRUHAT_CACHE.get(key)
    if cached is not None:
        return cached
    lu, lw = length(u), length(w)
    if lu > lw:
        result = False
    elif lw == 0:
        result = u.is_identity()
    elif u.is_identity():
        result = True
    else:
        gens = coxeter_generators(w.datum)
        s = gens[_first_left_descent(w)][1]
        sw = s * w
        su = s * u
        if length(su) < lu:
            result = _bruhat_wa(su, sw)
        else:
            result = _bruhat_wa(u, sw)
    _BRUHAT_CACHE[key] = result
    return result


_INTERVAL_CACHE: dict[tuple, frozenset] = {}


def bruhat_interval(
    w: ExtAffineElt, budget: int = DEFAULT_INTERVAL_BUDGET
) -> list[ExtAffineElt]:
    """The lower Bruhat interval of w, enumerated by subword dynamic
    programming over the canonical reduced word."""
    if length(w) > budget:
        raise BudgetError(
            f"interval of an element of length {length(w)} exceeds budget {budget}"
        )
    datum = w.datum
    dec = omega_decompose(w)
    key = (datum, w.key())
    cached = _INTERVAL_CACHE.get(key)
    if cached is None:
        gens = coxeter_generators(datum)
        products: set[tuple] = set()
        elements: dict[tuple, ExtAffineElt] = {}
        e = ExtAffineElt.identity(datum)
        products.add(e.key())
        elements[e.key()] = e
        for idx in _canonical_word_indices(dec.wa):
            s = gens[idx][1]
            new = {}
            for k in products:
                x = elements[k] * s
                new[x.key()] = x
            for k, x in new.items():
                if k not in products:
                    products.add(k)
                    elements[k] = x
        cached = frozenset(x * dec.delta for x in elements.values())
        _INTERVAL_CACHE[key] = cached
    return sorted(cached, key=lambda x: (length(x), x.key()))


# ---------------------------------------------------------------------------
# the raising (Jantzen) order


def _prefix_sums(row) -> tuple:
    out = []
    acc = 0
    for a in row:
        acc += a
        out.append(acc)
    return tuple(out)


def _alcove_key(datum: RootDatum, point: Point) -> tuple[int, ...]:
    return tuple(
        math.floor(pair_point(point, beta)) for beta in datum.positive_roots()
    )


def _dominance_window(datum: RootDatum, lo: Point, hi: Point):
    """Per-embedding prefix-sum window [prefix(lo), prefix(hi)] bounding every
    chain of raising moves from lo to hi, or None if hi is not above lo."""
    los, his = [], []
    for j in range(datum.f):
        pl, ph = _prefix_sums(lo[j]), _prefix_sums(hi[j])
        if pl[-1] != ph[-1]:
            return None
        if any(a > b for a, b in zip(pl, ph)):
            return None
        los.append(pl)
        his.append(ph)
    return los, his


def _in_window(datum: RootDatum, point: Point, window) -> bool:
    los, his = window
    for j in range(datum.f):
        pp = _prefix_sums(point[j])
        if any(v < lo or v > hi for v, lo, hi in zip(pp, los[j], his[j])):
            return False
    return True


def _raising_moves(datum: RootDatum, point: Point, window):
    """Reflected points across every wall strictly above the current alcove
    that stay inside the dominance window."""
    out = []
    for beta in datum.positive_roots():
        val = pair_point(point, beta)
        m = math.floor(val) + 1
        while True:
            # s_{beta, m}: add (m - val) * beta
            delta = m - val
            rows = list(list(r) for r in point)
            rows[beta.j][beta.i] += delta
            rows[beta.j][beta.k] -= delta
            new = tuple(tuple(r) for r in rows)
            if not _in_window(datum, new, window):
                break
            out.append(new)
            m += 1
    return out


def _up_alcove_search(datum: RootDatum, lo: Point, hi: Point) -> bool:
    """Decide the raising order between the alcoves of two sample points by a
    breadth-first closure of single-reflection raising moves.  The dominance
    window bounds every possible chain, so exhaustion is a definitive no."""
    target = _alcove_key(datum, hi)
    if _alcove_key(datum, lo) == target:
        return True
    window = _dominance_window(datum, lo, hi)
    if window is None:
        return False
    seen = {_alcove_key(datum, lo)}
    frontier = [lo]
    while frontier:
        nxt = []
        for point in frontier:
            for new in _raising_moves(datum, point, window):
                key = _alcove_key(datum, new)
                if key == target:
                    return True
                if key not in seen:
                    seen.add(key)
                    nxt.append(new)
        frontier = nxt
    return False


def up_leq(
    u: ExtAffineElt, w: ExtAffineElt, box: int | None = None
) -> bool:
    """The raising order on the extended group: equal Omega parts, and the
    alcove of u below the alcove of w in the Jantzen order.

    When both elements are dominant this is equivalent to the Bruhat order
    (used as a fast path; the equivalence is cross-validated against the
    chain search by the oracle suite).  Otherwise a chain search runs inside
    the dominance window spanned by the two alcoves, which provably contains
    every raising chain; a user-supplied ``box`` (max absolute coordinate of
    visited points) may restrict it further, raising
    :class:`InconclusiveRegionError` if the restriction bites.
    """
    if u.omega_degrees() != w.omega_degrees():
        return False
    if u.key() == w.key():
        return True
    if is_dominant_elt(u) and is_dominant_elt(w):
        return bruhat_leq(u, w)
    datum = u.datum
    lo = u.act_point(datum.sample_point())
    hi = w.act_point(datum.sample_point())
    if box is not None:
        bound = Fraction(box)
        if any(abs(v) > bound for row in itertools.chain(lo, hi) for v in row):
            raise InconclusiveRegionError(
                f"an input element lies outside the bounding box {box}"
            )
        window = _dominance_window(datum, lo, hi)
        if window is not None:
            # every chain point has coordinate t in [lo_t - hi_{t-1}, hi_t - lo_{t-1}]
            los, his = window
            for j in range(datum.f):
                for t in range(datum.n):
                    pl = los[j][t - 1] if t else Fraction(0)
                    ph = his[j][t - 1] if t else Fraction(0)
                    if max(abs(los[j][t] - ph), abs(his[j][t] - pl)) > bound:
                        raise InconclusiveRegionError(
                            f"bounding box {box} does not contain the chain "
                            "search region"
                        )
    return _up_alcove_search(datum, lo, hi)


# ---------------------------------------------------------------------------
# admissible sets


_ADM_CACHE: dict[tuple, frozenset] = {}


def adm_set(
    datum: RootDatum, lam: WeightVec, budget: int = DEFAULT_INTERVAL_BUDGET
) -> frozenset[ExtAffineElt]:
    """Union of the lower Bruhat intervals of the translations t_{w(lam)}."""
    if not lam.is_dominant():
        raise ValidationError("admissible sets are defined for dominant weights")
    key = (datum, lam.entries)
    cached = _ADM_CACHE.get(key)
    if cached is None:
        members: set[ExtAffineElt] = set()
        for w in all_weyl_elements(datum):
            t = ExtAffineElt.from_translation(datum, w.act(lam))
            members.update(bruhat_interval(t, budget=budget))
        cached = frozenset(members)
        _ADM_CACHE[key] = cached
    return cached


def adm_contains(datum: RootDatum, lam: WeightVec, w: ExtAffineElt) -> bool:
    """Membership in Adm(lam) by direct Bruhat tests against the extreme
    translations (no interval enumeration)."""
    if not lam.is_dominant():
        raise ValidationError("admissible sets are defined for dominant weights")
    return any(
        bruhat_leq(w, ExtAffineElt.from_translation(datum, v.act(lam)))
        for v in all_weyl_elements(datum)
    )


def adm_eta(datum: RootDatum) -> frozenset[ExtAffineElt]:
    return adm_set(datum, datum.eta())


# ---------------------------------------------------------------------------
# small enumerations used by sweeps


def elements_of_length_leq(
    datum: RootDatum, max_length: int, degrees: tuple[int, ...] | None = None
) -> list[ExtAffineElt]:
    """All elements of W_a (optionally shifted into a fixed Omega class) with
    length at most max_length, by breadth-first growth."""
    gens = coxeter_generators(datum)
    seen = {ExtAffineElt.identity(datum).key(): ExtAffineElt.identity(datum)}
    frontier = [ExtAffineElt.identity(datum)]
    for cur_len in range(max_length):
        nxt = []
        for x in frontier:
            for _, s in gens:
                y = x * s
                if length(y) == cur_len + 1 and y.key() not in seen:
                    seen[y.key()] = y
                    nxt.append(y)
        frontier = nxt
    out = list(seen.values())
    if degrees is not None:
        delta = omega_element(datum, degrees)
        out = [x * delta for x in out]
    return sorted(out, key=lambda x: (length(x), x.key()))


def dominant_box(datum: RootDatum, radius: int) -> list[ExtAffineElt]:
    """All dominant elements t_lam . w with translation entries in
    [-radius, radius]."""
    rng = range(-radius, radius + 1)
    rows = list(itertools.product(rng, repeat=datum.n))
    out = []
    for combo in itertools.product(rows, repeat=datum.f):
        lam = WeightVec(combo)
        for w in all_weyl_elements(datum):
            elt = ExtAffineElt(datum, lam, w)
            if is_dominant_elt(elt):
                out.append(elt)
    return sorted(out, key=lambda x: (length(x), x.key()))


def alcove_element_of_point(datum: RootDatum, point: Point) -> ExtAffineElt:
    """The affine Weyl group element w with point in w(A0), found by folding
    the point into the base alcove with wall reflections."""
    gens = coxeter_generators(datum)
    walls = _generator_walls(datum)
    cur = point
    applied: list[int] = []
    while True:
        moved = False
        for idx, (beta, level) in enumerate(walls):
            v = pair_point(cur, beta)
            if v == level:
                raise ValidationError("point lies on an affine wall")
            violated = v < level if level == 0 else v > level
            if violated:
                cur = gens[idx][1].act_point(cur)
                applied.append(idx)
                moved = True
                break
        if not moved:
            break
    out = ExtAffineElt.identity(datum)
    for idx in applied:
        out = out * gens[idx][1]
    return out
