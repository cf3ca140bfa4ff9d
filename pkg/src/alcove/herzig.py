"""Tame inertial parameters as combinatorial data, the predicted weight set
W?, obvious (extremal) weights, weight-elimination certificates, connecting
types, and the weight-connectivity graph.

A tame parameter is carried by an extended affine Weyl element t_mu . s.  All
depth hypotheses are those of the statements being computed and are enforced
on the given presentation; a violation raises :class:`DepthError` instead of
returning an extrapolated answer.  Predicates that quantify over
presentations do so through the exact orbit enumeration of
:mod:`alcove.weights_dl`, with per-embedding Omega degrees pinned whenever an
admissible-set membership makes only one degree vector possible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .affine_weyl import (
    ExtAffineElt,
    adm_eta,
    bruhat_interval,
    diamond,
    is_dominant_elt,
    is_restricted_elt,
    p_dot,
    simple_reflection,
    w0_element,
    wh_element,
)
from .root_data import (
    AlcoveError,
    DepthError,
    FiniteWeylElt,
    Root,
    RootDatum,
    ValidationError,
    all_weyl_elements,
    depth_of,
    in_lowest_alcove,
    is_p_restricted,
)
from .weights_dl import (
    DLPresentation,
    SerrePresentation,
    SerreWeight,
    c0_presentations,
    d_sigma,
    jh_outer,
    jh_set,
    presentations_of,
)


class NotEliminableError(AlcoveError):
    """The weight belongs to the predicted set; no certificate exists."""

    def __init__(self, message: str, witness: SerrePresentation | None = None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True, slots=True)
class TameParam:
    """Tame inertial parameter presented by the element t_mu . s."""

    elt: ExtAffineElt

    @property
    def datum(self) -> RootDatum:
        return self.elt.datum

    def lowest_alcove_depth(self) -> int | None:
        datum = self.datum
        shifted = self.elt.trans - datum.eta()
        if not in_lowest_alcove(datum, shifted):
            return None
        return depth_of(datum, shifted)

    def as_dl(self) -> DLPresentation:
        return DLPresentation(self.elt)

    def to_json(self) -> dict:
        return self.elt.to_json()


def _require_depth(tau: TameParam, depth: int, what: str) -> None:
    given = tau.lowest_alcove_depth()
    if given is None or given < depth:
        raise DepthError(
            f"{what} requires the given presentation of the tame parameter to "
            f"be {depth}-deep over the lowest alcove (found {given})"
        )


def herzig_twist(sigma: SerreWeight) -> SerreWeight:
    """The bijection on p-regular weights sending F(lam) to F(wh . lam)."""
    datum = sigma.datum
    if not sigma.is_p_regular():
        raise ValidationError("the twist is defined on p-regular weights")
    lam = p_dot(wh_element(datum), sigma.lam)
    if not is_p_restricted(datum, lam):
        raise AssertionError("twist left the p-restricted region")
    return SerreWeight.from_weight(datum, lam)


_WSET_CACHE: dict[tuple, dict] = {}


def wset_with_presentations(
    tau: TameParam,
) -> dict[SerreWeight, SerrePresentation]:
    """The predicted set W? by its membership characterization: sigma has a
    presentation (w, omega) with t_mu s in t_omega W~_{<= w0 w}.  Returns one
    witnessing presentation per weight."""
    datum = tau.datum
    _require_depth(tau, datum.h_eta, "wset")
    key = ("wset", datum, tau.elt.key())
    cached = _WSET_CACHE.get(key)
    if cached is not None:
        return cached
    eta = datum.eta()
    out: dict[SerreWeight, SerrePresentation] = {}
    from .affine_weyl import restricted_reps

    for rep in restricted_reps(datum):
        top = w0_element(datum) * rep
        for x in bruhat_interval(top):
            y = tau.elt * x.inverse()
            if not y.fin.is_identity():
                continue
            omega = y.trans
            if not in_lowest_alcove(datum, omega - eta):
                continue
            pres = SerrePresentation(rep, omega)
            out.setdefault(pres.weight(), pres)
    _WSET_CACHE[key] = out
    return out


def wset(tau: TameParam) -> frozenset[SerreWeight]:
    return frozenset(wset_with_presentations(tau))


def wset_by_definition(tau: TameParam) -> frozenset[SerreWeight]:
    """The predicted set computed from its definition as the twist of the
    Jordan-Holder set of the associated representation; cross-check path."""
    datum = tau.datum
    _require_depth(tau, datum.h_eta, "wset")
    factors = jh_set(tau.as_dl())
    return frozenset(
        herzig_twist(s) for s in factors if s.is_p_regular()
    )


def wobv_with_presentations(
    tau: TameParam,
) -> dict[SerreWeight, SerrePresentation]:
    """Extremal (obvious) weights: presentations with t_mu s in t_omega W w."""
    datum = tau.datum
    _require_depth(tau, datum.h_eta, "wobv")
    key = ("wobv", datum, tau.elt.key())
    cached = _WSET_CACHE.get(key)
    if cached is not None:
        return cached
    eta = datum.eta()
    out: dict[SerreWeight, SerrePresentation] = {}
    from .affine_weyl import restricted_reps

    for rep in restricted_reps(datum):
        z = tau.elt * rep.inverse()
        x = z * ExtAffineElt.from_finite(datum, z.fin.inverse())
        if not x.fin.is_identity():
            raise AssertionError("translation extraction failed")
        omega = x.trans
        if not in_lowest_alcove(datum, omega - eta):
            continue
        pres = SerrePresentation(rep, omega)
        out.setdefault(pres.weight(), pres)
    _WSET_CACHE[key] = out
    return out


def wobv(tau: TameParam) -> frozenset[SerreWeight]:
    return frozenset(wobv_with_presentations(tau))


def is_extremal(sigma: SerreWeight, tau: TameParam) -> bool:
    return sigma in wobv_with_presentations(tau)


# ---------------------------------------------------------------------------
# weight elimination


@dataclass(frozen=True)
class EliminationCertificate:
    """Witness that sigma cannot lie in the predicted set of tau: a 0-generic
    representation with sigma among its outer factors such that no
    lowest-alcove re-presentation (s, nu) of it puts the parameter inside
    t_nu s Adm(eta).  Both conditions are re-checkable by :meth:`verify`."""

    sigma: SerreWeight
    tau: TameParam
    R: DLPresentation
    outer_w: FiniteWeylElt
    presentation: SerrePresentation
    checked: tuple[DLPresentation, ...]

    def verify(self) -> bool:
        datum = self.R.datum
        # outer membership by construction: sigma = F_{(w1, omega)} and
        # R = R(t_{omega - u(v)} u) for v = (wh w1)^{-1}(0), u = outer_w
        if self.presentation.weight() != self.sigma:
            return False
        at_zero = (wh_element(datum) * self.presentation.w1).inverse().trans
        nu_u = self.presentation.omega - self.outer_w.act(at_zero)
        if self.R.elt.key() != ExtAffineElt(datum, nu_u, self.outer_w).key():
            return False
        if depth_of(datum, self.presentation.omega - datum.eta()) < d_sigma(
            self.sigma
        ):
            return False
        # re-enumerate the admissible-degree re-presentations and re-test
        degrees = tuple(
            t - e
            for t, e in zip(
                self.tau.elt.omega_degrees(), datum.eta().degrees()
            )
        )
        fresh = c0_presentations(self.R, min_depth=0, degrees=degrees)
        if {q.sort_key() for q in fresh} != {
            q.sort_key() for q in self.checked
        }:
            return False
        admissible = adm_eta(datum)
        return all(
            q.elt.inverse() * self.tau.elt not in admissible for q in fresh
        )

    def to_json(self) -> dict:
        return {
            "sigma": self.sigma.to_json(),
            "tau": self.tau.to_json(),
            "representation": self.R.to_json(),
            "outer_w": self.outer_w.to_json(),
            "presentation": self.presentation.to_json(),
            "checked_presentations": [q.to_json() for q in self.checked],
        }


def eliminate(sigma: SerreWeight, tau: TameParam) -> EliminationCertificate:
    """Produce a self-revalidating elimination certificate for a d_sigma-deep
    weight outside the predicted set.  Raises :class:`NotEliminableError`
    (with a membership witness) when sigma does belong to the set."""
    datum = tau.datum
    _require_depth(tau, datum.h_eta, "eliminate")
    ds = d_sigma(sigma)
    if sigma.depth < ds:
        raise DepthError(
            f"eliminate requires sigma to be {ds}-deep (found {sigma.depth})"
        )
    members = wset_with_presentations(tau)
    if sigma in members:
        raise NotEliminableError(
            "sigma lies in the predicted set", witness=members[sigma]
        )
    pres = presentations_of(sigma)[0]
    at_zero = (wh_element(datum) * pres.w1).inverse().trans
    degrees = tuple(
        t - e for t, e in zip(tau.elt.omega_degrees(), datum.eta().degrees())
    )
    admissible = adm_eta(datum)
    for u in all_weyl_elements(datum):
        nu_u = pres.omega - u.act(at_zero)
        R_u = DLPresentation(ExtAffineElt(datum, nu_u, u))
        if R_u.lowest_alcove_depth() is None:
            raise AssertionError("outer construction left the lowest alcove")
        candidates = c0_presentations(R_u, min_depth=0, degrees=degrees)
        if all(
            q.elt.inverse() * tau.elt not in admissible for q in candidates
        ):
            cert = EliminationCertificate(
                sigma=sigma,
                tau=tau,
                R=R_u,
                outer_w=u,
                presentation=pres,
                checked=tuple(candidates),
            )
            if not cert.verify():
                raise AssertionError("freshly built certificate failed replay")
            return cert
    raise AssertionError(
        "no certificate found; the elimination existence statement failed"
    )


# ---------------------------------------------------------------------------
# connecting types


@dataclass(frozen=True)
class ConnectionEdge:
    """A representation R(w) and a factorization w^{-1} s~ = w2^{-1} s_a w0 w1
    whose two designated outer factors tie sigma and sigma2 inside W?."""

    sigma: SerreWeight
    sigma2: SerreWeight
    R: DLPresentation
    alpha: Root
    w1: ExtAffineElt
    w2: ExtAffineElt

    def verify(self, tau: TameParam) -> bool:
        datum = self.R.datum
        if not is_restricted_elt(self.w2) or not is_dominant_elt(self.w1):
            return False
        from .affine_weyl import up_leq

        if not up_leq(self.w1, wh_element(datum).inverse() * self.w2):
            return False
        factor = (
            self.w2.inverse()
            * simple_reflection(datum, self.alpha)
            * w0_element(datum)
            * self.w1
        )
        if (self.R.elt * factor).key() != tau.elt.key():
            return False
        a, b = _designated_outer_pair(self.R, self.alpha, self.w2)
        return (a, b) == (self.sigma, self.sigma2)

    def to_json(self) -> dict:
        return {
            "sigma": self.sigma.to_json(),
            "sigma2": self.sigma2.to_json(),
            "R": self.R.to_json(),
            "alpha": {"embedding": self.alpha.j, "i": self.alpha.i + 1, "k": self.alpha.k + 1},
            "w1": self.w1.to_json(),
            "w2": self.w2.to_json(),
        }


def _designated_outer_pair(
    R: DLPresentation, alpha: Root, w2: ExtAffineElt
) -> tuple[SerreWeight, SerreWeight]:
    """Outer factors of R corresponding to w0 w2 and w0 s_alpha w2, computed
    from the restricted lifts w2 and (s_alpha w2)^diamond."""
    datum = R.datum
    wh_inv = wh_element(datum).inverse()
    s_alpha = simple_reflection(datum, alpha)

    def outer_from_lift(lift: ExtAffineElt) -> SerreWeight:
        elt = wh_inv * lift
        omega = R.elt.act_weight(lift.inverse().trans)
        return SerrePresentation(elt, omega).weight()

    first = outer_from_lift(w2)
    second = outer_from_lift(diamond(s_alpha * w2))
    return first, second


def enumerate_edges(tau: TameParam) -> list[ConnectionEdge]:
    """All connecting-type edges over the predicted set of tau: simple roots
    alpha and factorizations s~ = w (w2^{-1} s_alpha w0 w1) with w2 restricted,
    w1 dominant below wh^{-1} w2 in the raising order, and the translation
    part of w deep enough for the membership criteria to apply."""
    datum = tau.datum
    _require_depth(tau, datum.h_eta, "enumerate_edges")
    members = wset(tau)
    w0 = w0_element(datum)
    wh_inv = wh_element(datum).inverse()
    from .affine_weyl import restricted_reps

    edges = []
    for alpha in datum.simple_roots():
        s_alpha = simple_reflection(datum, alpha)
        for w2 in restricted_reps(datum):
            bound = wh_inv * w2
            if not is_dominant_elt(bound):
                raise AssertionError("wh^{-1} w2 left the dominant region")
            for w1 in bruhat_interval(bound):
                if not is_dominant_elt(w1):
                    continue
                factor = w2.inverse() * s_alpha * w0 * w1
                w = tau.elt * factor.inverse()
                if not in_lowest_alcove(
                    datum, w.trans - datum.eta(), depth=datum.h_eta
                ):
                    continue
                R = DLPresentation(w)
                a, b = _designated_outer_pair(R, alpha, w2)
                if a == b:
                    continue
                if a not in members or b not in members:
                    raise AssertionError(
                        "designated outer weight escaped the predicted set"
                    )
                edges.append(
                    ConnectionEdge(
                        sigma=a, sigma2=b, R=R, alpha=alpha, w1=w1, w2=w2
                    )
                )
    return edges


def connect(
    sigma: SerreWeight, sigma2: SerreWeight, tau: TameParam
) -> ConnectionEdge | None:
    """A connecting edge between two distinct predicted weights, or None when
    no factorization in the search space ties them (self-pairs are never
    connected: the two designated outer weights always differ)."""
    if sigma == sigma2:
        return None
    members = wset(tau)
    if sigma not in members or sigma2 not in members:
        raise ValidationError("connect requires both weights in the predicted set")
    for edge in enumerate_edges(tau):
        if {edge.sigma, edge.sigma2} == {sigma, sigma2}:
            return edge
    return None


@dataclass(frozen=True)
class ConnectivityGraph:
    tau: TameParam
    vertices: tuple[SerreWeight, ...]
    edges: tuple[ConnectionEdge, ...]
    extremal: frozenset[SerreWeight]

    def _adjacency(self) -> dict[SerreWeight, set[SerreWeight]]:
        adj: dict[SerreWeight, set[SerreWeight]] = {v: set() for v in self.vertices}
        for e in self.edges:
            adj[e.sigma].add(e.sigma2)
            adj[e.sigma2].add(e.sigma)
        return adj

    def components(self) -> list[list[SerreWeight]]:
        adj = self._adjacency()
        seen: set[SerreWeight] = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            comp = []
            stack = [v]
            seen.add(v)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(sorted(comp, key=lambda s: s.sort_key()))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def distance_to_extremal(self) -> dict[SerreWeight, int | None]:
        """Breadth-first distance from each vertex to the extremal set."""
        adj = self._adjacency()
        dist: dict[SerreWeight, int | None] = {v: None for v in self.vertices}
        frontier = [v for v in self.vertices if v in self.extremal]
        for v in frontier:
            dist[v] = 0
        level = 0
        while frontier:
            level += 1
            nxt = []
            for v in frontier:
                for y in adj[v]:
                    if dist[y] is None:
                        dist[y] = level
                        nxt.append(y)
            frontier = nxt
        return dist

    def chain_to_extremal(self, sigma: SerreWeight) -> list[SerreWeight] | None:
        """A shortest chain of connected weights from sigma to an extremal
        weight, inclusive on both ends."""
        if sigma in self.extremal:
            return [sigma]
        adj = self._adjacency()
        prev: dict[SerreWeight, SerreWeight] = {}
        seen = {sigma}
        frontier = [sigma]
        while frontier:
            nxt = []
            for v in frontier:
                for y in sorted(adj[v], key=lambda s: s.sort_key()):
                    if y in seen:
                        continue
                    seen.add(y)
                    prev[y] = v
                    if y in self.extremal:
                        chain = [y]
                        while chain[-1] != sigma:
                            chain.append(prev[chain[-1]])
                        return list(reversed(chain))
                    nxt.append(y)
            frontier = nxt
        return None

    def to_json(self) -> dict:
        dist = self.distance_to_extremal()
        return {
            "tau": self.tau.to_json(),
            "vertices": [
                {
                    "sigma": v.to_json(),
                    "extremal": v in self.extremal,
                    "distance_to_extremal": dist[v],
                }
                for v in self.vertices
            ],
            "edges": [e.to_json() for e in self._sorted_edges()],
            "connected": self.is_connected(),
        }

    def _sorted_edges(self) -> list[ConnectionEdge]:
        return sorted(
            self.edges,
            key=lambda e: (
                e.sigma.sort_key(),
                e.sigma2.sort_key(),
                (e.alpha.j, e.alpha.i, e.alpha.k),
                e.R.sort_key(),
            ),
        )

    def to_dot(self) -> str:
        names = {
            v: ";".join(",".join(str(a) for a in row) for row in v.lam.entries)
            for v in self.vertices
        }
        lines = ["graph weights {"]
        for v in self.vertices:
            shape = "doublecircle" if v in self.extremal else "circle"
            lines.append(f'  "{names[v]}" [shape={shape}];')
        seen_pairs = set()
        for e in self._sorted_edges():
            a, b = sorted((names[e.sigma], names[e.sigma2]))
            alpha = f"a{e.alpha.i + 1}@{e.alpha.j}"
            r_name = ";".join(
                ",".join(str(x) for x in row) for row in e.R.mu.entries
            )
            key = (a, b, alpha, r_name)
            if key in seen_pairs:
                continue
            seen_pairs.add(key)
            lines.append(f'  "{a}" -- "{b}" [label="{alpha}|{r_name}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def connectivity_graph(tau: TameParam) -> ConnectivityGraph:
    """Graph over the predicted set with connecting-type edges; requires the
    parameter 2 h_eta-deep so that the chain construction applies."""
    datum = tau.datum
    _require_depth(tau, 2 * datum.h_eta, "connectivity_graph")
    members = sorted(wset(tau), key=lambda s: s.sort_key())
    edges = enumerate_edges(tau)
    return ConnectivityGraph(
        tau=tau,
        vertices=tuple(members),
        edges=tuple(edges),
        extremal=wobv(tau),
    )


# ---------------------------------------------------------------------------
# admissibility of pairs


@dataclass(frozen=True)
class EquivalenceReport:
    admissible: bool
    jh_meets_wset: bool
    jh_meets_wobv: bool
    outer_meets_wset: bool

    @property
    def all_agree(self) -> bool:
        return (
            self.admissible
            == self.jh_meets_wset
            == self.jh_meets_wobv
            == self.outer_meets_wset
        )

    def to_json(self) -> dict:
        return {
            "admissible": self.admissible,
            "jh_meets_wset": self.jh_meets_wset,
            "jh_meets_wobv": self.jh_meets_wobv,
            "outer_meets_wset": self.outer_meets_wset,
            "all_agree": self.all_agree,
        }


def admissible_pair(rho: TameParam, tau: TameParam) -> bool:
    """Whether some presentations put the parameter of rho inside
    Adm(eta) . w(tau).  rho must be (n-1)-generic and tau n-generic on their
    given presentations."""
    datum = rho.datum
    _require_depth(rho, datum.n - 1, "admissible_pair (rho)")
    _require_depth(tau, datum.n, "admissible_pair (tau)")
    admissible = adm_eta(datum)
    eta_deg = datum.eta().degrees()
    # quantify over presentations: re-present rho over a window meeting every
    # X^0 class, then pin tau's degrees; membership is invariant under
    # simultaneous X^0 shifts.
    rho_reps = c0_presentations(rho.as_dl(), min_depth=0)
    rho_keys = {q.sort_key() for q in rho_reps}
    if rho.as_dl().sort_key() not in rho_keys:
        rho_reps.append(rho.as_dl())
    for rp in rho_reps:
        tau_deg = tuple(
            r - e for r, e in zip(rp.elt.omega_degrees(), eta_deg)
        )
        for tp in c0_presentations(tau.as_dl(), min_depth=0, degrees=tau_deg):
            if rp.elt * tp.elt.inverse() in admissible:
                return True
    return False


def equivalence_report(rho: TameParam, tau: TameParam) -> EquivalenceReport:
    """Evaluate the four combinatorial forms of the admissibility condition
    and report them side by side."""
    datum = rho.datum
    factors = jh_set(tau.as_dl())
    predicted = wset(rho)
    obvious = wobv(rho)
    outer = {s for _, s in jh_outer(tau.as_dl())}
    return EquivalenceReport(
        admissible=admissible_pair(rho, tau),
        jh_meets_wset=bool(factors & predicted),
        jh_meets_wobv=bool(factors & obvious),
        outer_meets_wset=bool(outer & predicted),
    )
