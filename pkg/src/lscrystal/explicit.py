"""Normal forms for the crystal of shape L1 - L2 and closed-form operators.

For a, b >= 2 every path in the crystal is a run of consecutive
directions inside a single Weyl family: form i is
(x_{m+s-1}.L, ..., x_m.L) with breakpoint u a multiple of 1/p_{m+s-u},
and form ii is (y_{m-s+1}.L, ..., y_m.L) with breakpoint u a multiple
of 1/q_{m-s+u+1}.  The operators below move (m, s, sigmas) around by
closed formulas built on the p/q tables and never consult the
piecewise-linear engine in paths.py; the test suite drives both engines
over full enumeration windows and demands exact agreement.

The straight path through the identity is spelled form i with m = 0;
a form ii spelling of it normalizes to that in the constructor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cartan import GCM, Weight
from .paths import LSPath
from .weyl import WeylElement, X, pq_table, x, y

FORM_I = "i"
FORM_II = "ii"


def xi(k: int) -> int:
    return 1 if k % 2 == 0 else 0


@dataclass(frozen=True)
class ExplicitPath:
    """One normal form: family, top index data (m, s), breakpoints.

    The constructor checks everything that does not need the matrix
    (shapes, monotonicity, m >= s - 1 for form ii); breakpoint
    integrality does need it and lives in validate_explicit.
    """

    form: str
    m: int
    s: int
    sigmas: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "sigmas", tuple(Fraction(t) for t in self.sigmas))
        if self.form not in (FORM_I, FORM_II):
            raise ValueError(f"form must be {FORM_I!r} or {FORM_II!r}, got {self.form!r}")
        if not isinstance(self.m, int) or self.m < 0:
            raise ValueError(f"m must be a nonnegative integer, got {self.m!r}")
        if not isinstance(self.s, int) or self.s < 1:
            raise ValueError(f"s must be a positive integer, got {self.s!r}")
        if len(self.sigmas) != self.s + 1:
            raise ValueError(f"s = {self.s} needs {self.s + 1} breakpoints, got {len(self.sigmas)}")
        if self.sigmas[0] != 0 or self.sigmas[-1] != 1:
            raise ValueError("breakpoints must run from 0 to 1")
        for t0, t1 in zip(self.sigmas, self.sigmas[1:]):
            if not t0 < t1:
                raise ValueError(f"breakpoints not strictly increasing: {self.sigmas}")
        if self.form == FORM_II:
            if self.m < self.s - 1:
                raise ValueError(f"form ii needs m >= s - 1, got m = {self.m}, s = {self.s}")
            if self.m == 0:
                # the straight identity path; canonical spelling is form i
                object.__setattr__(self, "form", FORM_I)

    def directions(self) -> tuple[WeylElement, ...]:
        if self.form == FORM_I:
            return tuple(x(self.m + self.s - j) for j in range(1, self.s + 1))
        return tuple(y(self.m - self.s + j) for j in range(1, self.s + 1))

    def __str__(self):
        times = ", ".join(str(t) for t in self.sigmas)
        return f"{self.form}(m={self.m}, s={self.s}; {times})"

    def to_json(self) -> dict:
        return {
            "form": self.form,
            "m": self.m,
            "s": self.s,
            "sigmas": [str(t) for t in self.sigmas],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ExplicitPath":
        form, m, s = data["form"], data["m"], data["s"]
        if not isinstance(m, int) or not isinstance(s, int):
            raise ValueError(f"not a normal-form path: {data!r}")
        return cls(form, m, s, tuple(Fraction(t) for t in data["sigmas"]))


def _require_deep(gcm: GCM):
    if gcm.boundary:
        raise ValueError(f"normal forms need a >= 2 and b >= 2, got ({gcm.a}, {gcm.b})")


def validate_explicit(form: str, m: int, s: int, sigmas, gcm: GCM) -> ExplicitPath:
    """Build a fully checked path: shape first, then breakpoint integrality."""
    _require_deep(gcm)
    ep = ExplicitPath(form, m, s, sigmas)
    table = pq_table(gcm, ep.m + ep.s)
    for u in range(1, ep.s):
        if ep.form == FORM_I:
            k, den = ep.m + ep.s - u, table.p[ep.m + ep.s - u]
            name = f"p_{k}"
        else:
            k, den = ep.m - ep.s + u + 1, table.q[ep.m - ep.s + u + 1]
            name = f"q_{k}"
        if (den * ep.sigmas[u]).denominator != 1:
            raise ValueError(
                f"breakpoint {u} = {ep.sigmas[u]} is not a multiple of 1/{name} = 1/{den}"
            )
    return ep


def to_ls_path(ep: ExplicitPath) -> LSPath:
    return LSPath(ep.directions(), ep.sigmas)


def from_ls_path(pi: LSPath) -> ExplicitPath:
    """Read (form, m, s) off a consecutive one-family direction run.

    Rejects anything else; on paths that actually belong to the crystal
    this never fires, which is exactly the classification statement the
    oracle checks.
    """
    s = len(pi.dirs)
    families = {d.family for d in pi.dirs}
    if len(families) > 1:
        raise ValueError(f"directions mix families: {pi}")
    m = pi.dirs[-1].m
    if families == {X}:
        if pi.dirs != tuple(x(m + s - j) for j in range(1, s + 1)):
            raise ValueError(f"direction indices are not consecutive: {pi}")
        return ExplicitPath(FORM_I, m, s, pi.times)
    if pi.dirs != tuple(y(m - s + j) for j in range(1, s + 1)):
        raise ValueError(f"direction indices are not consecutive: {pi}")
    return ExplicitPath(FORM_II, m, s, pi.times)


@dataclass(frozen=True)
class PartialSums:
    """Closed-form heights of both H functions at the breakpoints.

    sums1[u] and sums2[u] are the prefix sums over the first u pieces of
    gap times signed slope, the slopes taken from the p/q tables rather
    than from orbit weights.  The last entries are the weight
    coordinates; the minima are the lowest levels the H functions reach.
    """

    sums1: tuple[Fraction, ...]
    sums2: tuple[Fraction, ...]

    def get(self, i: int) -> tuple[Fraction, ...]:
        if i == 1:
            return self.sums1
        if i == 2:
            return self.sums2
        raise ValueError(f"simple root index must be 1 or 2, got {i}")

    def weight(self) -> Weight:
        return Weight(self.sums1[-1], self.sums2[-1])


def partial_sums(ep: ExplicitPath, gcm: GCM) -> PartialSums:
    table = pq_table(gcm, ep.m + ep.s)
    s1, s2 = [Fraction(0)], [Fraction(0)]
    for j in range(1, ep.s + 1):
        gap = ep.sigmas[j] - ep.sigmas[j - 1]
        if ep.form == FORM_I:
            k = ep.m + ep.s - j
            slope1 = (-1) ** k * table.p[k + xi(k)]
            slope2 = (-1) ** (k + 1) * table.p[k + xi(k + 1)]
        else:
            k = ep.m - ep.s + j
            slope1 = (-1) ** k * table.q[k + xi(k + 1)]
            slope2 = (-1) ** (k + 1) * table.q[k + xi(k)]
        s1.append(s1[-1] + gap * slope1)
        s2.append(s2[-1] + gap * slope2)
    return PartialSums(tuple(s1), tuple(s2))


def _straight(w: WeylElement) -> ExplicitPath:
    form = FORM_I if w.family == X else FORM_II
    return ExplicitPath(form, w.m, 1, (Fraction(0), Fraction(1)))


def _check_index(i: int):
    if i not in (1, 2):
        raise ValueError(f"simple root index must be 1 or 2, got {i}")


def f_explicit(ep: ExplicitPath, i: int, gcm: GCM) -> ExplicitPath | None:
    """Lowering operator in closed form; null when H_i ends on its minimum.

    Every returned path is revalidated, so a wrong branch here fails
    loudly instead of producing a malformed normal form.
    """
    _require_deep(gcm)
    _check_index(i)
    sums = partial_sums(ep, gcm).get(i)
    floor = min(sums)
    u0 = max(u for u, v in enumerate(sums) if v == floor)
    if u0 == ep.s:
        return None
    m, s, sig = ep.m, ep.s, ep.sigmas
    table = pq_table(gcm, m + s)
    if ep.form == FORM_I:
        k = m + s - u0 - 1
        den = table.p[k + xi(k)] if i == 1 else table.p[k + xi(k + 1)]
        new = sig[u0] + Fraction(1, den)
        if u0 == 0 and new < sig[1]:
            return validate_explicit(FORM_I, m, s + 1, (Fraction(0), new) + sig[1:], gcm)
        if u0 == 0:
            return _straight(x(m).reflected(i))
        if new < sig[u0 + 1]:
            return validate_explicit(FORM_I, m, s, sig[:u0] + (new,) + sig[u0 + 1 :], gcm)
        return validate_explicit(FORM_I, m + 1, s - 1, sig[: s - 1] + (Fraction(1),), gcm)
    k = m - s + u0 + 1
    den = table.q[k + xi(k + 1)] if i == 1 else table.q[k + xi(k)]
    new = sig[u0] + Fraction(1, den)
    if u0 == 0 and new < sig[1]:
        return validate_explicit(FORM_II, m, s + 1, (Fraction(0), new) + sig[1:], gcm)
    if u0 == 0:
        return _straight(y(m).reflected(i))
    if new < sig[u0 + 1]:
        return validate_explicit(FORM_II, m, s, sig[:u0] + (new,) + sig[u0 + 1 :], gcm)
    return validate_explicit(FORM_II, m - 1, s - 1, sig[: s - 1] + (Fraction(1),), gcm)


def e_explicit(ep: ExplicitPath, i: int, gcm: GCM) -> ExplicitPath | None:
    """Raising operator in closed form; null when H_i never dips below 0."""
    _require_deep(gcm)
    _check_index(i)
    sums = partial_sums(ep, gcm).get(i)
    floor = min(sums)
    u1 = min(u for u, v in enumerate(sums) if v == floor)
    if u1 == 0:
        return None
    m, s, sig = ep.m, ep.s, ep.sigmas
    table = pq_table(gcm, m + s)
    if ep.form == FORM_I:
        k = m + s - u1
        den = table.p[k + xi(k)] if i == 1 else table.p[k + xi(k + 1)]
        new = sig[u1] - Fraction(1, den)
        if u1 == s and sig[s - 1] < new:
            return validate_explicit(FORM_I, m - 1, s + 1, sig[:s] + (new, Fraction(1)), gcm)
        if u1 == s:
            return _straight(x(m).reflected(i))
        if sig[u1 - 1] < new:
            return validate_explicit(FORM_I, m, s, sig[:u1] + (new,) + sig[u1 + 1 :], gcm)
        return validate_explicit(FORM_I, m, s - 1, (Fraction(0),) + sig[2:], gcm)
    k = m - s + u1
    den = table.q[k + xi(k + 1)] if i == 1 else table.q[k + xi(k)]
    new = sig[u1] - Fraction(1, den)
    if u1 == s and sig[s - 1] < new:
        return validate_explicit(FORM_II, m + 1, s + 1, sig[:s] + (new, Fraction(1)), gcm)
    if u1 == s:
        return _straight(y(m).reflected(i))
    if sig[u1 - 1] < new:
        return validate_explicit(FORM_II, m, s, sig[:u1] + (new,) + sig[u1 + 1 :], gcm)
    return validate_explicit(FORM_II, m, s - 1, (Fraction(0),) + sig[2:], gcm)


def enumerate_explicit(gcm: GCM, m_max: int, s_max: int) -> set[ExplicitPath]:
    """All valid normal forms with m <= m_max and s <= s_max.

    Breakpoints are generated as exact multiples of the integrality
    denominators, so every candidate is valid by construction; a
    denominator of 1 (p_1, q_1, and q_2 when a = 2) simply contributes
    no interior breakpoint choices.
    """
    _require_deep(gcm)
    found: set[ExplicitPath] = set()
    table = pq_table(gcm, m_max + s_max)
    for m in range(m_max + 1):
        for s in range(1, s_max + 1):
            dens = [table.p[m + s - u] for u in range(1, s)]
            for sig in _interior_choices(dens):
                found.add(validate_explicit(FORM_I, m, s, sig, gcm))
            if m < s - 1:
                continue
            dens = [table.q[m - s + u + 1] for u in range(1, s)]
            for sig in _interior_choices(dens):
                found.add(validate_explicit(FORM_II, m, s, sig, gcm))
    return found


def _interior_choices(dens: list[int]):
    """All (0, t_1, ..., t_k, 1) with t_u a multiple of 1/dens[u-1], increasing."""
    zero, one = Fraction(0), Fraction(1)
    if not dens:
        yield (zero, one)
        return

    def extend(prefix: tuple[Fraction, ...], u: int):
        if u == len(dens):
            yield prefix + (one,)
            return
        for j in range(1, dens[u]):
            t = Fraction(j, dens[u])
            if prefix[-1] < t < 1:
                yield from extend(prefix + (t,), u + 1)

    yield from extend((zero,), 0)
