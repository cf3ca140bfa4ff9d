"""Serre weights via lowest-alcove presentations, Deligne-Lusztig
presentation calculus, combinatorial Jordan-Holder sets, outer factors, and
the covering order.

A Serre weight is stored by a p-restricted dominant highest weight,
canonicalized modulo the sublattice (p - pi) X^0: two highest weights give
the same simple module exactly when their difference is constant on each
embedding with those constants in the image of (p - pi) on Z^f.  A
Deligne-Lusztig presentation is an extended affine Weyl element t_mu . s;
two presentations name the same virtual representation exactly when they are
related by w = r s pi(r)^{-1}, lam = r(mu) + p nu - w(pi(nu)) for some finite
Weyl r and weight nu, which is decided here by an exact per-cycle linear
solve rather than a search.

Jordan-Holder sets are computed purely combinatorially and only under the
stated depth hypotheses on the given presentation; anything shallower is
refused, never guessed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .affine_weyl import (
    ExtAffineElt,
    adm_eta,
    alcove_element_of_point,
    bruhat_interval,
    diamond,
    is_dominant_elt,
    is_restricted_elt,
    p_dot,
    pi_elt_inv,
    restricted_reps,
    w0_element,
    wh_element,
)
from .root_data import (
    DepthError,
    FiniteWeylElt,
    RootDatum,
    ValidationError,
    WeightVec,
    all_weyl_elements,
    depth_of,
    h_value,
    in_lowest_alcove,
    is_p_restricted,
    pi_weyl,
    x0_shift,
)


class InvalidPresentationError(ValidationError):
    """The presentation data violate its invariants."""


# ---------------------------------------------------------------------------
# Serre weights


def _x0_class_digits(datum: RootDatum, values: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical representative of a vector of per-embedding constants modulo
    the image of (p - pi): the base-p digits of sum(values[j] p^j) mod p^f - 1."""
    p, f = datum.p, datum.f
    modulus = p**f - 1
    r = sum(v * p**j for j, v in enumerate(values)) % modulus
    return tuple((r // p**j) % p for j in range(f))


@dataclass(frozen=True, slots=True)
class SerreWeight:
    """Simple module with p-restricted highest weight, stored canonically."""

    datum: RootDatum
    lam: WeightVec

    @staticmethod
    def from_weight(datum: RootDatum, lam: WeightVec) -> "SerreWeight":
        if not is_p_restricted(datum, lam):
            raise ValidationError(f"highest weight not p-restricted: {lam.entries}")
        last = tuple(row[-1] for row in lam.entries)
        digits = _x0_class_digits(datum, last)
        shift = x0_shift(datum, [d - a for d, a in zip(digits, last)])
        return SerreWeight(datum, lam + shift)

    @property
    def depth(self) -> int:
        """Largest m with the highest weight m-deep in its p-alcove."""
        return depth_of(self.datum, self.lam)

    def is_p_regular(self) -> bool:
        return self.depth >= 0

    def to_json(self) -> dict:
        return {"lambda": self.lam.to_json(), "canonical": True}

    def sort_key(self) -> tuple:
        return self.lam.entries


def d_sigma(sigma: SerreWeight) -> int:
    """The defect max over closed base-alcove vertices v of h at (wh . w)(v),
    where the highest weight lies in the p-dot alcove of w.  Bounded by n-1."""
    datum = sigma.datum
    if not sigma.is_p_regular():
        raise ValidationError("d_sigma is defined for p-regular weights")
    eta = datum.eta()
    point = tuple(
        tuple(Fraction(a, datum.p) for a in row)
        for row in (sigma.lam + eta).entries
    )
    w = alcove_element_of_point(datum, point)
    top = wh_element(datum) * w
    return max(h_value(top.act_weight(v)) for v in datum.base_vertices())


@dataclass(frozen=True, slots=True)
class SerrePresentation:
    """Pair (w1 in the restricted set, omega with omega - eta in C0) naming
    the weight of the p-dot value of pi^{-1}(w1) at omega - eta."""

    w1: ExtAffineElt
    omega: WeightVec

    def __post_init__(self) -> None:
        if not is_restricted_elt(self.w1):
            raise InvalidPresentationError("presentation element is not restricted")
        datum = self.w1.datum
        if not in_lowest_alcove(datum, self.omega - datum.eta()):
            raise InvalidPresentationError("omega - eta does not lie in C0")

    @property
    def datum(self) -> RootDatum:
        return self.w1.datum

    @property
    def depth(self) -> int:
        return depth_of(self.datum, self.omega - self.datum.eta())

    def weight(self) -> SerreWeight:
        datum = self.datum
        lam = p_dot(pi_elt_inv(self.w1), self.omega - datum.eta())
        if not is_p_restricted(datum, lam):
            raise InvalidPresentationError(
                "presentation does not yield a p-restricted weight"
            )
        return SerreWeight.from_weight(datum, lam)

    def to_json(self) -> dict:
        return {"w": self.w1.to_json(), "omega": self.omega.to_json()}


def serre_weight(pres: SerrePresentation) -> SerreWeight:
    return pres.weight()


def _canonical_omega(datum: RootDatum, omega: WeightVec) -> WeightVec:
    """Normalize omega modulo (p - pi) X^0 (digit normal form on the last
    entries); the named Serre weight is unchanged."""
    last = tuple(row[-1] for row in omega.entries)
    digits = _x0_class_digits(datum, last)
    return omega + x0_shift(datum, [d - a for d, a in zip(digits, last)])


def presentations_of(sigma: SerreWeight) -> list[SerrePresentation]:
    """All lowest-alcove presentations of sigma up to canonicalization (the
    element ranges over the restricted representatives modulo X^0, omega is
    normalized modulo (p - pi) X^0).  Empty exactly when sigma is not 0-deep."""
    datum = sigma.datum
    eta = datum.eta()
    out = []
    for rep in restricted_reps(datum):
        pinv = pi_elt_inv(rep)
        target = sigma.lam + eta - pinv.trans.scale(datum.p)
        omega = pinv.fin.inverse().act(target)
        if not in_lowest_alcove(datum, omega - eta):
            continue
        pres = SerrePresentation(rep, _canonical_omega(datum, omega))
        if pres.weight() != sigma:
            raise AssertionError("presentation solve failed to round-trip")
        out.append(pres)
    return out


# ---------------------------------------------------------------------------
# Deligne-Lusztig presentations


@dataclass(frozen=True, slots=True)
class DLPresentation:
    """Combinatorial name t_mu . s for a Deligne-Lusztig representation."""

    elt: ExtAffineElt

    @property
    def datum(self) -> RootDatum:
        return self.elt.datum

    @property
    def s(self) -> FiniteWeylElt:
        return self.elt.fin

    @property
    def mu(self) -> WeightVec:
        return self.elt.trans

    def lowest_alcove_depth(self) -> int | None:
        """Depth of mu - eta in C0 for this presentation, or None if the
        translation part does not sit over the lowest alcove."""
        datum = self.datum
        shifted = self.mu - datum.eta()
        if not in_lowest_alcove(datum, shifted):
            return None
        return depth_of(datum, shifted)

    def to_json(self) -> dict:
        return self.elt.to_json()

    def sort_key(self) -> tuple:
        return self.elt.key()


_TWIST_CACHE: dict[tuple, list] = {}


def _twist_positions(datum: RootDatum, w: FiniteWeylElt):
    """Cycles of the coordinate permutation underlying nu |-> w(pi(nu))."""
    key = (datum, w.perms)
    cached = _TWIST_CACHE.get(key)
    if cached is not None:
        return cached
    f, n = datum.f, datum.n
    winv = w.inverse()

    def rho(pos):
        j, i = pos
        return ((j - 1) % f, winv.perms[j][i])

    seen = set()
    cycles = []
    for j in range(f):
        for i in range(n):
            if (j, i) in seen:
                continue
            cyc = [(j, i)]
            seen.add((j, i))
            cur = rho((j, i))
            while cur != (j, i):
                cyc.append(cur)
                seen.add(cur)
                cur = rho(cur)
            cycles.append(cyc)
    _TWIST_CACHE[key] = cycles
    return cycles


def _solve_twisted(
    datum: RootDatum, w: FiniteWeylElt, target: WeightVec
) -> WeightVec | None:
    """Integer solution nu of p nu - w(pi(nu)) = target, if one exists.

    On each cycle z_0 -> z_1 -> ... of the underlying coordinate permutation
    the system is cyclic with unit determinant p^k - 1, so integrality reduces
    to one divisibility per cycle.
    """
    p = datum.p
    rows = [list(r) for r in datum.zero().entries]
    for cyc in _twist_positions(datum, w):
        k = len(cyc)
        acc = 0
        for t, (j, i) in enumerate(cyc):
            acc += p ** (k - 1 - t) * target.entries[j][i]
        if acc % (p**k - 1) != 0:
            return None
        val = acc // (p**k - 1)
        for t, (j, i) in enumerate(cyc):
            rows[j][i] = val
            val = p * val - target.entries[j][i]
    return WeightVec(tuple(tuple(r) for r in rows))


def _twisted_conjugates(R: DLPresentation):
    """For each finite Weyl r, the pair (w, b) with w = r s pi(r)^{-1} and
    b = r(mu); presentations of R are exactly (w, b + p nu - w pi nu)."""
    datum = R.datum
    for r in all_weyl_elements(datum):
        w = r * R.s * pi_weyl(r).inverse()
        yield w, r.act(R.mu)


def dl_equal(r1: DLPresentation, r2: DLPresentation) -> bool:
    """Whether two presentations name the same representation, via the exact
    orbit relation (no search box)."""
    if r1.datum != r2.datum:
        return False
    for w, b in _twisted_conjugates(r1):
        if w != r2.s:
            continue
        if _solve_twisted(r1.datum, w, r2.mu - b) is not None:
            return True
    return False


_PATTERN_CACHE: dict[tuple, tuple] = {}


def _difference_patterns(
    datum: RootDatum, min_depth: int
) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Per-embedding difference vectors of weights omega with omega - eta
    min_depth-deep in C0: each difference > min_depth, total < p - min_depth."""
    key = (datum, min_depth)
    cached = _PATTERN_CACHE.get(key)
    if cached is not None:
        return cached
    p, n = datum.p, datum.n

    def rows() -> list[tuple[int, ...]]:
        out = []

        def rec(prefix: list[int], total: int) -> None:
            if len(prefix) == n - 1:
                out.append(tuple(prefix))
                return
            d = min_depth + 1
            while total + d <= p - min_depth - 1:
                prefix.append(d)
                rec(prefix, total + d)
                prefix.pop()
                d += 1

        rec([], 0)
        return out

    result = tuple(itertools.product(rows(), repeat=datum.f))
    _PATTERN_CACHE[key] = result
    return result


def _weight_from_pattern(
    datum: RootDatum, pattern, bases: tuple[int, ...]
) -> WeightVec:
    rows = []
    for j in range(datum.f):
        row = [bases[j]] * datum.n
        for i in range(datum.n - 2, -1, -1):
            row[i] = row[i + 1] + pattern[j][i]
        rows.append(tuple(row))
    return WeightVec(tuple(rows))


def _pattern_weighted_sum(datum: RootDatum, row: tuple[int, ...]) -> int:
    # sum of entries of the weight with this difference row and base 0
    return sum((t + 1) * d for t, d in enumerate(row))


def eta_c0_weights(
    datum: RootDatum, min_depth: int, degrees: tuple[int, ...]
) -> list[WeightVec]:
    """Weights omega with omega - eta min_depth-deep in C0 and the exact
    per-embedding degree vector."""
    out = []
    for pattern in _difference_patterns(datum, min_depth):
        bases = []
        for j in range(datum.f):
            num = degrees[j] - _pattern_weighted_sum(datum, pattern[j])
            if num % datum.n != 0:
                bases = None
                break
            bases.append(num // datum.n)
        if bases is not None:
            out.append(_weight_from_pattern(datum, pattern, tuple(bases)))
    return out


_C0_PRES_CACHE: dict[tuple, list] = {}


def c0_presentations(
    R: DLPresentation,
    min_depth: int = 0,
    degrees: tuple[int, ...] | None = None,
) -> list[DLPresentation]:
    """Lowest-alcove presentations (s', mu') of R with mu' - eta
    min_depth-deep in C0.

    With ``degrees`` the per-embedding degree of mu' is pinned exactly and the
    enumeration is complete.  Without it, degrees range over a window wide
    enough to meet every X^0-translation class of presentations, which is all
    that depth-sensitive callers need.
    """
    datum = R.datum
    cache_key = (datum, R.sort_key(), min_depth, degrees)
    hit = _C0_PRES_CACHE.get(cache_key)
    if hit is not None:
        return list(hit)
    p, n, f = datum.p, datum.n, datum.f
    found: dict[tuple, DLPresentation] = {}
    half = (p**f - 1) // 2 + 1
    for w, b in _twisted_conjugates(R):
        bdeg = b.degrees()
        for pattern in _difference_patterns(datum, min_depth):
            sums = [_pattern_weighted_sum(datum, pattern[j]) for j in range(f)]
            if degrees is not None:
                base_choices = [[ (degrees[j] - sums[j]) // n ]
                                if (degrees[j] - sums[j]) % n == 0 else []
                                for j in range(f)]
            else:
                base_choices = []
                for j in range(f):
                    center = (bdeg[j] - sums[j]) // n
                    base_choices.append(
                        list(range(center - half, center + half + 1))
                    )
            for bases in itertools.product(*base_choices):
                mu2 = _weight_from_pattern(datum, pattern, bases)
                if _solve_twisted(datum, w, mu2 - b) is not None:
                    cand = DLPresentation(ExtAffineElt(datum, mu2, w))
                    found[cand.sort_key()] = cand
    result = [found[k] for k in sorted(found)]
    _C0_PRES_CACHE[cache_key] = result
    return list(result)


def is_m_generic(R: DLPresentation, m: int) -> bool:
    """Whether some presentation of R has translation part m-deep over the
    lowest alcove.  The given presentation is checked first."""
    given = R.lowest_alcove_depth()
    if given is not None and given >= m:
        return True
    return bool(c0_presentations(R, min_depth=m))


def max_genericity(R: DLPresentation) -> int | None:
    """Largest m such that R is m-generic, or None if R has no lowest-alcove
    presentation at all."""
    depths = [
        pres.lowest_alcove_depth() for pres in c0_presentations(R, min_depth=0)
    ]
    given = R.lowest_alcove_depth()
    if given is not None:
        depths.append(given)
    depths = [d for d in depths if d is not None]
    return max(depths) if depths else None


# ---------------------------------------------------------------------------
# Jordan-Holder sets


def _require_deep_presentation(R: DLPresentation, depth: int, what: str) -> None:
    given = R.lowest_alcove_depth()
    if given is None or given < depth:
        raise DepthError(
            f"{what} requires the given presentation to be {depth}-deep over "
            f"the lowest alcove (found {given})"
        )


_JH_CACHE: dict[tuple, frozenset] = {}


def jh_set(R: DLPresentation) -> frozenset[SerreWeight]:
    """Jordan-Holder factors of the reduction of R, by the admissible-set
    criterion: sigma has a presentation (w, omega) with the translated lower
    interval of w0 w inside t_mu s Adm(eta).

    Requires the given translation part to be h_eta-deep over the lowest
    alcove; shallower input is refused.
    """
    datum = R.datum
    _require_deep_presentation(R, datum.h_eta, "jh_set")
    key = ("jh", datum, R.sort_key())
    cached = _JH_CACHE.get(key)
    if cached is not None:
        return cached
    admissible = adm_eta(datum)
    base_inv = R.elt.inverse()
    eta_deg = datum.eta().degrees()
    out = set()
    for rep in restricted_reps(datum):
        top = w0_element(datum) * rep
        interval = bruhat_interval(top)
        target_deg = tuple(
            m + e - t
            for m, e, t in zip(R.mu.degrees(), eta_deg, top.omega_degrees())
        )
        for omega in eta_c0_weights(datum, 0, target_deg):
            t_omega = ExtAffineElt.from_translation(datum, omega)
            if base_inv * (t_omega * top) not in admissible:
                continue
            if all(
                base_inv * (t_omega * x) in admissible for x in interval
            ):
                out.add(SerrePresentation(rep, omega).weight())
    cached = frozenset(out)
    _JH_CACHE[key] = cached
    return cached


def jh_set_by_reflection(R: DLPresentation) -> frozenset[SerreWeight]:
    """Jordan-Holder factors by the raising-order criterion: there are
    (w, omega) and a dominant u with u below wh . w in the raising order and
    t_omega in t_mu s u^{-1} W.  Cross-check path for :func:`jh_set`."""
    datum = R.datum
    _require_deep_presentation(R, datum.h_eta, "jh_set")
    eta = datum.eta()
    out = set()
    for rep in restricted_reps(datum):
        bound = wh_element(datum) * rep
        if not is_dominant_elt(bound):
            raise AssertionError("wh . w left the dominant region")
        for u in bruhat_interval(bound):
            if not is_dominant_elt(u):
                continue
            y = R.elt * u.inverse()
            x = y * ExtAffineElt.from_finite(datum, y.fin.inverse())
            omega = x.trans
            if not in_lowest_alcove(datum, omega - eta):
                continue
            out.add(SerrePresentation(rep, omega).weight())
    return frozenset(out)


def jh_outer(R: DLPresentation) -> list[tuple[FiniteWeylElt, SerreWeight]]:
    """Outer Jordan-Holder factors: for each finite Weyl w the weight with
    presentation (w^diamond, t_mu s (wh w^diamond)^{-1}(0)), each listed once."""
    datum = R.datum
    _require_deep_presentation(R, datum.h_eta, "jh_outer")
    wh = wh_element(datum)
    out = []
    for w in all_weyl_elements(datum):
        wd = diamond(ExtAffineElt.from_finite(datum, w))
        at_zero = (wh * wd).inverse().trans
        omega = R.elt.act_weight(at_zero)
        out.append((w, SerrePresentation(wd, omega).weight()))
    return out


def covers(kappa: SerreWeight, sigma: SerreWeight) -> bool:
    """The covering order: sigma lies in the Jordan-Holder set of every
    Deligne-Lusztig representation with kappa among its outer factors.  That
    family is exactly {R(t_{nu_u} u) : u finite Weyl} built from any fixed
    presentation of kappa."""
    datum = kappa.datum
    dk = d_sigma(kappa)
    if kappa.depth < datum.h_eta + dk:
        raise DepthError(
            f"covers requires kappa to be {datum.h_eta + dk}-deep "
            f"(found {kappa.depth})"
        )
    pres = presentations_of(kappa)[0]
    at_zero = (wh_element(datum) * pres.w1).inverse().trans
    for u in all_weyl_elements(datum):
        nu_u = pres.omega - u.act(at_zero)
        R_u = DLPresentation(ExtAffineElt(datum, nu_u, u))
        if sigma not in jh_set(R_u):
            return False
    return True


def outer_family(kappa: SerreWeight) -> list[DLPresentation]:
    """The 0-generic representations with kappa as an outer factor."""
    datum = kappa.datum
    if kappa.depth < d_sigma(kappa):
        raise DepthError("outer_family requires kappa to be d_sigma-deep")
    pres = presentations_of(kappa)[0]
    at_zero = (wh_element(datum) * pres.w1).inverse().trans
    return [
        DLPresentation(ExtAffineElt(datum, pres.omega - u.act(at_zero), u))
        for u in all_weyl_elements(datum)
    ]
