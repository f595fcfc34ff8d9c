"""Brute-force ground truth, straight from the definitions.

Chains are rebuilt by reflecting through every positive root up to a
height budget, dist is a maximal chain length, and sigma-chains,
LS-path validity, and the exhaustive path enumeration follow the
definitions with no help from the closed forms.  The check_* functions
compare this ground truth against the statements the closed forms rest
on (sigma-chains have length one, every path is one of two normal
forms, the crystal graph is connected) over finite windows and report
counterexamples when anything fails.

Apart from check_structure, which also knows the two degenerate orbit
identities of the a = 1 / b = 1 edge, everything here effectively needs
a, b >= 2: once orbit weights repeat, the chain search refuses to run
rather than search a broken state space.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cartan import (
    ANTIDOMINANT,
    DOMINANT,
    GCM,
    NEITHER,
    Weight,
    dominance_class,
    pairing,
    simple_root,
)
from .explicit import ExplicitPath, FORM_II, enumerate_explicit, from_ls_path, to_ls_path
from .paths import (
    LSPath,
    e_generic,
    e_max,
    epsilon,
    f_generic,
    f_max,
    h_function,
    phi,
    straight_path,
    weight,
)
from .weyl import (
    EQUAL,
    GREATER,
    IDENTITY,
    LESS,
    OrbitWeight,
    PositiveRoot,
    WeylElement,
    X,
    Y,
    hasse_neighbors,
    orbit_compare,
    orbit_weight,
    positive_root,
    positive_roots_recurrence,
    positive_roots_weyl,
    pq_table,
    reflect_by_root,
    root_pairing,
    window_elements,
    x,
    y,
)


class OracleBoundError(RuntimeError):
    """A search hit its configured cap; the answer is unknown, not false."""


@dataclass(frozen=True)
class SearchBounds:
    """Window and budget knobs for the brute-force searches.

    chain_len_max = 0 means the default 2*m_max + 2, which covers every
    order interval inside the window.
    """

    m_max: int
    s_max: int
    root_height_max: int = 40
    chain_len_max: int = 0

    def __post_init__(self):
        if self.chain_len_max == 0:
            object.__setattr__(self, "chain_len_max", 2 * self.m_max + 2)
        if self.m_max < 0:
            raise ValueError(f"m_max must be nonnegative, got {self.m_max}")
        if self.s_max < 1:
            raise ValueError(f"s_max must be positive, got {self.s_max}")
        if self.root_height_max < 1:
            raise ValueError(f"root_height_max must be positive, got {self.root_height_max}")
        if self.chain_len_max < 2 * self.m_max + 2:
            raise ValueError(
                f"chain_len_max = {self.chain_len_max} cannot realize all window "
                f"distances; need at least {2 * self.m_max + 2}"
            )


def _elt(key: int) -> WeylElement:
    return x(key) if key >= 0 else y(-key)


@lru_cache(maxsize=None)
def _chain_roots(gcm: GCM, height_max: int) -> tuple[PositiveRoot, ...]:
    """Positive roots with coefficient height c + d <= height_max.

    Heights along each series grow without bound (the recurrence is
    expanding for a*b > 4), so scanning word lengths up to height_max
    sees every root under the cap.
    """
    by_coords = {}
    for l in range(height_max + 1):
        for beta in (positive_root(x(l), 2, gcm), positive_root(y(l), 1, gcm)):
            if sum(beta.coords) <= height_max:
                by_coords.setdefault(beta.coords, beta)
    return tuple(by_coords.values())


@lru_cache(maxsize=None)
def _down_steps(
    gcm: GCM, lo: int, hi: int, height_max: int
) -> tuple[tuple[tuple[int, PositiveRoot, Fraction], ...], ...]:
    """All decreasing reflection steps between window elements.

    Entry key - lo lists (target key, root, pairing) for every bounded
    root with negative pairing whose reflection stays in the interval.
    """
    roots = _chain_roots(gcm, height_max)
    weights = {k: orbit_weight(_elt(k), gcm).weight for k in range(lo, hi + 1)}
    by_weight = {wt: k for k, wt in weights.items()}
    if len(by_weight) != len(weights):
        raise ValueError("orbit weights repeat in this window; the chain search needs a, b >= 2")
    steps = []
    for k in range(lo, hi + 1):
        out = []
        for beta in roots:
            val = root_pairing(weights[k], beta, gcm)
            if val >= 0:
                continue
            k2 = by_weight.get(reflect_by_root(weights[k], beta, gcm))
            if k2 is None:
                continue
            if k2 >= k:
                raise ValueError(f"reflection by {beta} failed to decrease {_elt(k)}")
            out.append((k2, beta, val))
        steps.append(tuple(out))
    return tuple(steps)


def dist(mu: OrbitWeight, nu: OrbitWeight, gcm: GCM, bounds: SearchBounds) -> int:
    """Maximal length of a decreasing reflection chain from mu down to nu."""
    cmp = orbit_compare(mu.elt, nu.elt)
    if cmp == LESS:
        raise ValueError(f"{mu.elt} lies below {nu.elt}; chains only go down")
    if cmp == EQUAL:
        return 0
    lo, hi = nu.elt.order_key, mu.elt.order_key
    if hi - lo > bounds.chain_len_max:
        raise OracleBoundError(
            f"order interval [{nu.elt}, {mu.elt}] is longer than chain_len_max = "
            f"{bounds.chain_len_max}"
        )
    steps = _down_steps(gcm, lo, hi, bounds.root_height_max)
    best: list[int | None] = [0] + [None] * (hi - lo)
    for k in range(lo + 1, hi + 1):
        lengths = [1 + best[k2 - lo] for k2, _, _ in steps[k - lo] if best[k2 - lo] is not None]
        best[k - lo] = max(lengths) if lengths else None
    top = best[hi - lo]
    if top is None:
        raise OracleBoundError(
            f"no chain from {mu.elt} to {nu.elt} using roots of height <= "
            f"{bounds.root_height_max}"
        )
    return top


@lru_cache(maxsize=None)
def _dist1_graph(
    gcm: GCM, lo: int, hi: int, bounds: SearchBounds
) -> tuple[tuple[tuple[int, PositiveRoot, Fraction], ...], ...]:
    """Distance-1 steps inside the interval, each with its unique root.

    Uniqueness of the reflecting root is asserted, not assumed: two
    bounded roots linking the same pair would be a finding, not a detail.
    """
    graph = []
    for k in range(lo, hi + 1):
        row = []
        for k2 in range(lo, k):
            if dist(orbit_weight(_elt(k), gcm), orbit_weight(_elt(k2), gcm), gcm, bounds) != 1:
                continue
            links = [
                (t, beta, val)
                for t, beta, val in _down_steps(gcm, lo, hi, bounds.root_height_max)[k - lo]
                if t == k2
            ]
            if len(links) != 1:
                raise ValueError(
                    f"{len(links)} reflecting roots between {_elt(k)} and {_elt(k2)}; "
                    "expected exactly one"
                )
            row.append(links[0])
        graph.append(tuple(row))
    return tuple(graph)


def sigma_chain_lengths(
    mu: OrbitWeight, nu: OrbitWeight, sigma, gcm: GCM, bounds: SearchBounds
) -> tuple[int, ...]:
    """Lengths of all sigma-chains for (mu, nu); empty when none exists.

    A sigma-chain steps through pairs at distance 1 with every step's
    pairing turned into a negative integer by sigma.
    """
    if orbit_compare(mu.elt, nu.elt) != GREATER:
        raise ValueError(f"sigma-chains need {mu.elt} strictly above {nu.elt}")
    sigma = Fraction(sigma)
    if not 0 < sigma < 1:
        raise ValueError(f"sigma must lie strictly between 0 and 1, got {sigma}")
    lo, hi = nu.elt.order_key, mu.elt.order_key
    graph = _dist1_graph(gcm, lo, hi, bounds)
    memo: dict[int, frozenset[int]] = {lo: frozenset({0})}

    def lengths(k: int) -> frozenset[int]:
        if k not in memo:
            acc = set()
            for k2, _, val in graph[k - lo]:
                scaled = sigma * val
                if scaled < 0 and scaled.denominator == 1:
                    acc.update(1 + n for n in lengths(k2))
            memo[k] = frozenset(acc)
        return memo[k]

    return tuple(sorted(lengths(hi)))


@lru_cache(maxsize=None)
def _sigma_chain_cached(
    u: WeylElement, v: WeylElement, sigma: Fraction, gcm: GCM, bounds: SearchBounds
) -> bool:
    return bool(sigma_chain_lengths(orbit_weight(u, gcm), orbit_weight(v, gcm), sigma, gcm, bounds))


def sigma_chain_exists(
    mu: OrbitWeight, nu: OrbitWeight, sigma, gcm: GCM, bounds: SearchBounds
) -> bool:
    return _sigma_chain_cached(mu.elt, nu.elt, Fraction(sigma), gcm, bounds)


def is_ls_path_oracle(dirs, times, gcm: GCM, bounds: SearchBounds) -> bool:
    """Validity per the definition: every turn admits a sigma-chain."""
    pi = LSPath(tuple(dirs), tuple(times))
    return all(
        sigma_chain_exists(
            orbit_weight(pi.dirs[k - 1], gcm),
            orbit_weight(pi.dirs[k], gcm),
            pi.times[k],
            gcm,
            bounds,
        )
        for k in range(1, pi.s)
    )


def denominator_policy(gcm: GCM, bounds: SearchBounds) -> tuple[Fraction, ...]:
    """Candidate interior breakpoints: reduced fractions in (0, 1) whose
    denominator divides some p_k or q_k with k <= m_max + s_max.

    Every normal-form breakpoint in the window has this shape by the
    integrality conditions, so enumerating over the policy set cannot
    miss a classified path.
    """
    n = max(bounds.m_max + bounds.s_max, 1)
    table = pq_table(gcm, n)
    values = set()
    for d in set(table.p) | set(table.q):
        for j in range(1, d):
            values.add(Fraction(j, d))
    return tuple(sorted(values))


def enumerate_ls_paths(gcm: GCM, bounds: SearchBounds, policy=None) -> set[LSPath]:
    """Every LS path with directions in the window and at most s_max pieces,
    breakpoints drawn from the policy set, validity from the definition."""
    if policy is None:
        policy = denominator_policy(gcm, bounds)
    policy = tuple(sorted({Fraction(t) for t in policy}))
    if any(not 0 < t < 1 for t in policy):
        raise ValueError("policy breakpoints must lie strictly between 0 and 1")
    window = window_elements(bounds.m_max)
    admissible: dict[tuple[WeylElement, WeylElement], tuple[Fraction, ...]] = {}
    for i, u in enumerate(window):
        uw = orbit_weight(u, gcm)
        for v in window[i + 1 :]:
            vw = orbit_weight(v, gcm)
            admissible[(u, v)] = tuple(
                t for t in policy if sigma_chain_exists(uw, vw, t, gcm, bounds)
            )
    position = {w: i for i, w in enumerate(window)}
    out: set[LSPath] = set()

    def extend(dirs: tuple[WeylElement, ...], times: tuple[Fraction, ...]):
        out.add(LSPath(dirs, times + (Fraction(1),)))
        if len(dirs) == bounds.s_max:
            return
        for v in window[position[dirs[-1]] + 1 :]:
            for t in admissible[(dirs[-1], v)]:
                if t > times[-1]:
                    extend(dirs + (v,), times + (t,))

    for w in window:
        extend((w,), (Fraction(0),))
    return out


# ---------------------------------------------------------------------------
# verification reports


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    checked: int
    counterexample: dict | None = None

    def to_json(self) -> dict:
        data = {
            "check": self.name,
            "status": "pass" if self.passed else "fail",
            "checked": self.checked,
        }
        if self.counterexample is not None:
            data["counterexample"] = self.counterexample
        return data


@dataclass(frozen=True)
class VerificationReport:
    results: tuple[CheckResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json_lines(self) -> list[str]:
        ordered = sorted(self.results, key=lambda r: r.name)
        return [json.dumps(r.to_json(), sort_keys=True) for r in ordered]


def combine(*reports: VerificationReport) -> VerificationReport:
    results = []
    for rep in reports:
        results.extend(rep.results)
    return VerificationReport(tuple(results))


def _normal_forms_in_window(gcm: GCM, bounds: SearchBounds) -> set[ExplicitPath]:
    """Valid normal forms whose directions all fit inside the window."""
    eps = enumerate_explicit(gcm, bounds.m_max, bounds.s_max)
    return {ep for ep in eps if ep.form == FORM_II or ep.m + ep.s - 1 <= bounds.m_max}


def check_classification(gcm: GCM, bounds: SearchBounds) -> VerificationReport:
    """Sigma-chains have length one, and the enumerated LS paths are
    exactly the normal forms living in the window."""
    window = window_elements(bounds.m_max)
    policy = denominator_policy(gcm, bounds)
    chains = 0
    bad = None
    for i, u in enumerate(window):
        uw = orbit_weight(u, gcm)
        for v in window[i + 1 :]:
            vw = orbit_weight(v, gcm)
            for t in policy:
                found = sigma_chain_lengths(uw, vw, t, gcm, bounds)
                if found:
                    chains += 1
                    if set(found) != {1} and bad is None:
                        bad = {
                            "upper": str(u),
                            "lower": str(v),
                            "sigma": str(t),
                            "lengths": list(found),
                        }
    length_result = CheckResult("sigma-chain-length-one", bad is None, chains, bad)

    oracle_set = enumerate_ls_paths(gcm, bounds, policy)
    normal_set = {to_ls_path(ep) for ep in _normal_forms_in_window(gcm, bounds)}
    ce = None
    extra = oracle_set - normal_set
    missing = normal_set - oracle_set
    if extra:
        ce = {"side": "oracle-only", "path": min(extra, key=str).to_json()}
    elif missing:
        ce = {"side": "normal-form-only", "path": min(missing, key=str).to_json()}
    set_result = CheckResult(
        "normal-form-set-equality", ce is None, len(oracle_set | normal_set), ce
    )
    return VerificationReport((length_result, set_result))


def check_straight_through_lambda(gcm: GCM, bounds: SearchBounds) -> VerificationReport:
    """The identity direction occurs only in the straight path: no turn
    next to it admits a sigma-chain, and no enumerated multi-piece path
    contains it."""
    window = window_elements(bounds.m_max)
    policy = denominator_policy(gcm, bounds)
    lam = orbit_weight(IDENTITY, gcm)
    checked = 0
    bad = None
    for w in window:
        if w.is_identity:
            continue
        ww = orbit_weight(w, gcm)
        upper, lower = (ww, lam) if w.order_key > 0 else (lam, ww)
        for t in policy:
            checked += 1
            if sigma_chain_exists(upper, lower, t, gcm, bounds) and bad is None:
                bad = {"upper": str(upper.elt), "lower": str(lower.elt), "sigma": str(t)}
    turn_result = CheckResult("no-turn-at-lambda", bad is None, checked, bad)

    ce = None
    paths = enumerate_ls_paths(gcm, bounds, policy)
    for pi in sorted(paths, key=str):
        if pi.s >= 2 and any(d.is_identity for d in pi.dirs):
            ce = {"path": pi.to_json()}
            break
    scan_result = CheckResult("no-multi-piece-path-through-lambda", ce is None, len(paths), ce)
    return VerificationReport((turn_result, scan_result))


def check_connectedness(gcm: GCM, bounds: SearchBounds) -> VerificationReport:
    """Two independent routes to the same claim: the reduction recipe
    walks every enumerated path back to the straight path, and BFS from
    the straight path covers the whole enumerated window."""
    paths = sorted(enumerate_ls_paths(gcm, bounds), key=str)
    start = straight_path()
    budget = 2 * bounds.m_max + bounds.s_max + 4
    bad = None
    for pi in paths:
        cur, steps = pi, 0
        while cur != start and bad is None:
            if steps >= budget:
                bad = {"path": pi.to_json(), "reason": f"not reduced in {budget} steps"}
                break
            first, last = cur.dirs[0], cur.dirs[-1]
            if first.family == X and first.m > 0:
                cur = e_max(cur, first.descent_index, gcm)
            elif last.family == Y and last.m > 0:
                cur = f_max(cur, last.descent_index, gcm)
            else:
                bad = {"path": pi.to_json(), "reason": "recipe stuck", "at": cur.to_json()}
            steps += 1
        if bad:
            break
    reduction_result = CheckResult("reduction-to-straight", bad is None, len(paths), bad)

    # frontier expansion stays near the window (a little slack in s); any
    # node reached still counts for coverage
    targets = set(paths)
    visited = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for pi in frontier:
            if max(abs(d.order_key) for d in pi.dirs) > bounds.m_max or pi.s > bounds.s_max + 2:
                continue
            for op in (f_generic, e_generic):
                for i in (1, 2):
                    img = op(pi, i, gcm)
                    if img is not None and img not in visited:
                        visited.add(img)
                        nxt.append(img)
        frontier = nxt
    uncovered = targets - visited
    ce = {"path": min(uncovered, key=str).to_json()} if uncovered else None
    bfs_result = CheckResult("bfs-coverage", ce is None, len(targets), ce)
    return VerificationReport((reduction_result, bfs_result))


def check_crystal_axioms(gcm: GCM, bounds: SearchBounds) -> VerificationReport:
    """Operator bookkeeping on every enumerated path: weight steps,
    inverse pairs, string-length identities, integral minima."""
    paths = sorted(enumerate_ls_paths(gcm, bounds), key=str)
    names = (
        "weight-step",
        "inverse-pair",
        "string-balance",
        "epsilon-is-minus-min",
        "phi-is-endpoint-minus-min",
        "integral-local-minima",
    )
    bad = {name: None for name in names}
    counts = {name: 0 for name in names}

    def note(name: str, ok: bool, payload):
        counts[name] += 1
        if not ok and bad[name] is None:
            bad[name] = payload

    for pi in paths:
        wt = weight(pi, gcm)
        for i in (1, 2):
            payload = {"path": pi.to_json(), "i": i}
            h = h_function(pi, i, gcm)
            mi = h.minimum()
            note("integral-local-minima", all(v.denominator == 1 for v in h.local_min_values()), payload)
            eps = epsilon(pi, i, gcm)
            ph = phi(pi, i, gcm)
            note("epsilon-is-minus-min", mi.denominator == 1 and eps == -mi, payload)
            note("phi-is-endpoint-minus-min", ph == h.points[-1][1] - mi, payload)
            note("string-balance", ph - eps == pairing(wt, i), payload)
            fi = f_generic(pi, i, gcm)
            if fi is not None:
                note("weight-step", weight(fi, gcm) == wt - simple_root(i, gcm), payload)
                note("inverse-pair", e_generic(fi, i, gcm) == pi, payload)
            ei = e_generic(pi, i, gcm)
            if ei is not None:
                note("weight-step", weight(ei, gcm) == wt + simple_root(i, gcm), payload)
                note("inverse-pair", f_generic(ei, i, gcm) == pi, payload)
    results = tuple(
        CheckResult(name, bad[name] is None, counts[name], bad[name]) for name in names
    )
    return VerificationReport(results)


def check_operator_equivalence(gcm: GCM, m_max: int, s_max: int) -> VerificationReport:
    """Closed-form operators against the piecewise-linear engine on every
    normal form with m <= m_max and s <= s_max, nulls included."""
    from .explicit import e_explicit, f_explicit

    eps = sorted(enumerate_explicit(gcm, m_max, s_max), key=str)
    checked = 0
    ce = None
    for ep in eps:
        pi = to_ls_path(ep)
        for i in (1, 2):
            for label, op_closed, op_engine in (
                ("f", f_explicit, f_generic),
                ("e", e_explicit, e_generic),
            ):
                checked += 1
                closed = op_closed(ep, i, gcm)
                engine = op_engine(pi, i, gcm)
                agree = (
                    closed is None
                    and engine is None
                    or closed is not None
                    and engine is not None
                    and to_ls_path(closed) == engine
                    and from_ls_path(engine) == closed
                )
                if not agree and ce is None:
                    ce = {
                        "path": ep.to_json(),
                        "op": f"{label}{i}",
                        "closed-form": None if closed is None else closed.to_json(),
                        "engine": None if engine is None else engine.to_json(),
                    }
    return VerificationReport((CheckResult("operator-equivalence", ce is None, checked, ce),))


def check_structure(gcm: GCM, bounds: SearchBounds) -> VerificationReport:
    """Arithmetic of the p/q tables, the two root enumerations, order
    versus chain distance, and the dominance facts for the orbit."""
    if gcm.boundary:
        checked = 0
        ce = None
        if gcm.a == 1:
            checked += 1
            wt = orbit_weight(y(1), gcm).weight
            if wt != Weight(0, 1) or dominance_class(wt) != DOMINANT:
                ce = {"element": "y1", "weight": str(wt)}
        if gcm.b == 1:
            checked += 1
            wt = orbit_weight(x(1), gcm).weight
            if ce is None and (wt != Weight(-1, 0) or dominance_class(wt) != ANTIDOMINANT):
                ce = {"element": "x1", "weight": str(wt)}
        return VerificationReport(
            (CheckResult("degenerate-orbit-identities", ce is None, checked, ce),)
        )

    results = []
    table = pq_table(gcm, 51)

    ce = None
    for k in range(51):
        if math.gcd(table.p[k], table.p[k + 1]) != 1 or math.gcd(table.q[k], table.q[k + 1]) != 1:
            ce = {"k": k}
            break
    results.append(CheckResult("consecutive-coprimality", ce is None, 51, ce))

    ok = (
        table.p[0] == table.p[1] == 1
        and table.q[0] == table.q[1] == 1
        and table.p[1] <= table.p[2]
        and table.q[1] <= table.q[2]
        and (table.p[1] == table.p[2]) == (gcm.b == 2)
        and (table.q[1] == table.q[2]) == (gcm.a == 2)
        and all(table.p[k] < table.p[k + 1] for k in range(2, 51))
        and all(table.q[k] < table.q[k + 1] for k in range(2, 51))
    )
    results.append(
        CheckResult(
            "sequence-monotonicity",
            ok,
            51,
            None if ok else {"p": [str(v) for v in table.p[:6]], "q": [str(v) for v in table.q[:6]]},
        )
    )

    weyl_roots = positive_roots_weyl(gcm, 15)
    weyl_coords = [r.coords for r in weyl_roots]
    rec_coords = positive_roots_recurrence(gcm, 30)
    ok = (
        len(set(weyl_coords)) == 60
        and len(set(rec_coords)) == 60
        and set(weyl_coords) == set(rec_coords)
    )
    results.append(
        CheckResult(
            "root-enumerations-agree",
            ok,
            60,
            None
            if ok
            else {
                "weyl-only": sorted(set(weyl_coords) - set(rec_coords))[:3],
                "recurrence-only": sorted(set(rec_coords) - set(weyl_coords))[:3],
            },
        )
    )

    window = window_elements(bounds.m_max)
    checked = 0
    ce = None
    for i, u in enumerate(window):
        for v in window[i + 1 :]:
            checked += 1
            d = dist(orbit_weight(u, gcm), orbit_weight(v, gcm), gcm, bounds)
            adjacent = u.order_key - v.order_key == 1
            if (d == 1) != adjacent and ce is None:
                ce = {"upper": str(u), "lower": str(v), "dist": d}
            if adjacent and ce is None:
                down, label = hasse_neighbors(u).down
                step_roots = [
                    beta
                    for _, beta, _ in _dist1_graph(
                        gcm, v.order_key, u.order_key, bounds
                    )[u.order_key - v.order_key]
                ]
                if down != v or step_roots[0].coords != ((1, 0) if label == 1 else (0, 1)):
                    ce = {"upper": str(u), "lower": str(v), "root": str(step_roots[0])}
    results.append(CheckResult("hasse-matches-dist", ce is None, checked, ce))

    ce = None
    for m in range(31):
        if dominance_class(orbit_weight(x(m), gcm).weight) != NEITHER or (
            dominance_class(orbit_weight(y(m), gcm).weight) != NEITHER
        ):
            ce = {"m": m}
            break
    results.append(CheckResult("orbit-never-dominant", ce is None, 31, ce))

    return VerificationReport(tuple(results))
