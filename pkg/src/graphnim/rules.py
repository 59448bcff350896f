"""Closed-form classifiers for the non-galaxy catalog graphs.

Covers the triangle rule, F1, F2, the always-winning graphs G2/G3 (and G1),
the complete G4 characterization built on special-multiset arithmetic, and
the partial H1 rule engine that returns Winning/Losing/Unknown with the
rule identifier and a parameter trace.

H1 rule evaluation is exhaustive: every winning and every losing rule is
always evaluated, and a position matching rules on both sides raises
ContradictionError (the verification harness asserts this never fires).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .base import (
    Classification,
    ContradictionError,
    DispatchError,
    InvalidConfigError,
    UnsupportedGraphError,
    Verdict,
)
from .nim import GALAXY_IDS, classify_galaxy, f_exp
from .topology import CATALOG_IDS, Weights, catalog_graph, check_config

ALLWIN_IDS = ("G1", "G2", "G3")

# Stable rule identifier strings (External wire values).
H1_WINNING_RULES = ("H1-W-EF0", "H1-W-L1a", "H1-W-L1b", "H1-W-T1", "H1-W-L2", "H1-W-L3")
H1_LOSING_RULES = ("H1-L-B1", "H1-L-B2", "H1-L-B3", "H1-L-B4")


def _positive(weights: Sequence[int], n: int, what: str) -> tuple[int, ...]:
    w = tuple(weights)
    if len(w) != n:
        raise InvalidConfigError(f"{what}: expected {n} weights, got {len(w)}")
    if any(x < 1 for x in w):
        raise InvalidConfigError(f"{what}: all weights must be >= 1")
    return w


# --- special multisets (G4 machinery) ----------------------------------


@dataclass(frozen=True)
class SpecialWitness:
    """Parameters (k, ell, m, i) certifying that a 3-multiset is special."""

    k: int
    ell: int
    m: int
    i: int

    def expand(self) -> tuple[int, int, int]:
        """The multiset this witness denotes, sorted ascending."""
        shift = (self.m + 1) * self.ell
        return tuple(sorted((
            self.k + 1 + shift,
            self.k + self.i + shift,
            self.k + self.m + 2 - self.i + shift,
        )))


def is_special(multiset3: Sequence[int]) -> bool:
    """Inequality form of the special test: sort a <= b <= c, never special
    when all equal, else special iff 2a > (b+c-2a)(b+c-2a+1)."""
    a, b, c = sorted(_positive(multiset3, 3, "is_special"))
    if a == b == c:
        return False
    m = b + c - 2 * a
    return 2 * a > m * (m + 1)


def special_witness(multiset3: Sequence[int]) -> SpecialWitness | None:
    """Constructive special test: recover (k, ell, m, i) or None.

    m = b+c-2a and i = b-a+1 are forced; k is the unique value in the
    window [m(m+1)/2, m(m+3)/2] congruent to a-1 mod (m+1), and the
    witness exists iff the leftover ell = (a-1-k)/(m+1) is >= 0.
    """
    a, b, c = sorted(_positive(multiset3, 3, "special_witness"))
    m = b + c - 2 * a
    if m < 1:
        return None
    i = b - a + 1
    if not 1 <= i <= m + 1:
        return None
    lo = m * (m + 1) // 2
    k = lo + (a - 1 - lo) % (m + 1)
    ell = (a - 1 - k) // (m + 1)
    if ell < 0:
        return None
    return SpecialWitness(k, ell, m, i)


def is_k_special(k: int, multiset3: Sequence[int]) -> SpecialWitness | None:
    """As special_witness but with the Nim-pile value k fixed."""
    if k < 1:
        raise InvalidConfigError(f"is_k_special requires k >= 1, got {k}")
    a, b, c = sorted(_positive(multiset3, 3, "is_k_special"))
    m = b + c - 2 * a
    if m < 1:
        return None
    if not m * (m + 1) <= 2 * k <= m * (m + 3):
        return None
    if (a - k - 1) % (m + 1) != 0:
        return None
    ell = (a - k - 1) // (m + 1)
    if ell < 0:
        return None
    return SpecialWitness(k, ell, m, b - a + 1)


# --- simple closed forms ------------------------------------------------


def classify_triangle(config3: Sequence[int]) -> Classification:
    """Triangle rule: losing iff all three edge-weights are equal."""
    a, b, c = _positive(config3, 3, "triangle")
    verdict = Verdict.LOSING if a == b == c else Verdict.WINNING
    return Classification(verdict, "triangle")


def classify_F1(config: Sequence[int]) -> Classification:
    """F1 (4-cycle, order AB,BC,CD,DA): losing iff opposite edges equal."""
    ab, bc, cd, da = _positive(config, 4, "F1")
    verdict = Verdict.LOSING if ab == cd and bc == da else Verdict.WINNING
    return Classification(verdict, "F1")


def classify_F2(config: Sequence[int]) -> Classification:
    """F2 (pendant + triangle, order AB,BC,CD,DB): losing iff BC = DB and
    CD = AB + BC."""
    ab, bc, cd, db = _positive(config, 4, "F2")
    verdict = Verdict.LOSING if bc == db and cd == ab + bc else Verdict.WINNING
    return Classification(verdict, "F2")


def classify_allwin(graph_id: str, config: Sequence[int]) -> Classification:
    """G1, G2, G3: every positive configuration is winning."""
    if graph_id not in ALLWIN_IDS:
        raise DispatchError(f"{graph_id!r} is not one of {ALLWIN_IDS}")
    _positive(config, 4, graph_id)
    return Classification(Verdict.WINNING, f"allwin-{graph_id}")


def classify_G4(config: Sequence[int]) -> Classification:
    """Full G4 characterization (order AB,BC,CA,DE).

    Losing iff either the triangle multiset is special for k = w(DE)
    (rule A1), or w(DE) equals the triangle total with the triangle
    weights not all equal and the multiset not special (rule A2).
    A1 and A2 are mutually exclusive by construction: an A1 match makes
    the multiset special, which A2 rules out.
    """
    ab, bc, ca, de = _positive(config, 4, "G4")
    triangle = (ab, bc, ca)
    witness = is_k_special(de, triangle)
    if witness is not None:
        return Classification(Verdict.LOSING, "G4-A1", witness)
    if de == ab + bc + ca and not ab == bc == ca and not is_special(triangle):
        return Classification(Verdict.LOSING, "G4-A2", {"triangle_total": ab + bc + ca})
    return Classification(Verdict.WINNING, "G4-win")


# --- H1 rule engine ------------------------------------------------------


@dataclass(frozen=True)
class H1BitProfile:
    """Base-2 digit columns of (w(EF), w(AB), w(CD)) at common width.

    S holds the column indices with odd digit sum; I = max(S) when S is
    non-empty.
    """

    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]
    S: frozenset[int]
    I: int | None


@dataclass(frozen=True)
class H1Decomposition:
    """w(AB) = 2^(fk+1)*m1 + ell1 and w(CD) = 2^(fk+1)*m2 + ell2 for
    k = w(EF) >= 1; r, s, j, m are filled for losing-pattern matches."""

    k: int
    fk: int
    m1: int
    m2: int
    ell1: int
    ell2: int
    r: int | None = None
    s: int | None = None
    j: int | None = None
    m: int | None = None


def h1_bit_profile(ef: int, ab: int, cd: int) -> H1BitProfile:
    width = max(ef.bit_length(), ab.bit_length(), cd.bit_length(), 1)
    a = tuple((ef >> i) & 1 for i in range(width))
    b = tuple((ab >> i) & 1 for i in range(width))
    c = tuple((cd >> i) & 1 for i in range(width))
    odd = frozenset(i for i in range(width) if (a[i] + b[i] + c[i]) % 2 == 1)
    return H1BitProfile(a, b, c, odd, max(odd) if odd else None)


def h1_decompose(ab: int, bc: int, cd: int, ef: int) -> H1Decomposition:
    if ef < 1:
        raise InvalidConfigError("h1_decompose requires w(EF) >= 1")
    fk = f_exp(ef)
    period = 1 << (fk + 1)
    m1, ell1 = divmod(ab, period)
    m2, ell2 = divmod(cd, period)
    return H1Decomposition(ef, fk, m1, m2, ell1, ell2)


def _pair_match(ab: int, cd: int, period: int, off1: int, off2: int) -> int | None:
    """Smallest m >= 0 with {ab, cd} = {period*m + off1, period*m + off2}.

    off1 is a canonical remainder (rejected when >= period); off2 is a
    literal offset from the same multiple and may equal or exceed period.
    """
    if not 0 <= off1 < period or off2 < 0:
        return None
    found = None
    for x, y in ((ab, cd), (cd, ab)):
        if x >= off1 and (x - off1) % period == 0:
            m = (x - off1) // period
            if y == period * m + off2 and (found is None or m < found):
                found = m
    return found


def _h1_losing_matches(ab: int, bc: int, cd: int, ef: int) -> list[tuple[str, H1Decomposition]]:
    """Losing families L-B1..L-B4; {AB, CD} is matched as an unordered pair
    and s is pinned to w(BC). At most one (r, m) is recorded per family."""
    if ef < 1:
        return []
    k, s = ef, bc
    base = h1_decompose(ab, bc, cd, ef)
    period = 1 << (base.fk + 1)
    matches: list[tuple[str, H1Decomposition]] = []

    def record(rule: str, r: int, m: int, j: int | None = None) -> None:
        matches.append((rule, H1Decomposition(
            base.k, base.fk, base.m1, base.m2, base.ell1, base.ell2,
            r=r, s=s, j=j, m=m,
        )))

    for r in (0, 1, 3):  # L-B1
        if 1 <= s <= k - 2 * r:
            m = _pair_match(ab, cd, period, r, k - r - s)
            if m is not None:
                record("H1-L-B1", r, m)
                break
    for r in (2, 4):  # L-B2
        if 1 <= s <= r - 1:
            j = k % (1 << (f_exp(r) + 1))
            if s <= j <= r - 1:
                m = _pair_match(ab, cd, period, r, k + r - s)
                if m is not None:
                    record("H1-L-B2", r, m, j)
                    break
    for r in (2, 4):  # L-B3
        if 1 <= s <= r - 1 and k >= 3 * r:
            j = k % (1 << (f_exp(r) + 1))
            if not s <= j <= r - 1:
                m = _pair_match(ab, cd, period, r, k - r - s)
                if m is not None:
                    record("H1-L-B3", r, m, j)
                    break
    for r in (2, 4):  # L-B4
        if r <= s <= k - 2 * r and k >= 3 * r:
            m = _pair_match(ab, cd, period, r, k - r - s)
            if m is not None:
                record("H1-L-B4", r, m)
                break
    return matches


def _h1_winning_matches(ab: int, bc: int, cd: int, ef: int) -> list[tuple[str, object]]:
    """Winning rules in fixed evaluation order (all are always evaluated)."""
    matches: list[tuple[str, object]] = []
    if ef == 0:
        matches.append(("H1-W-EF0", None))
    if ab <= ef <= ab + bc:
        matches.append(("H1-W-L1a", {"low": ab, "high": ab + bc}))
    if cd <= ef <= bc + cd:
        matches.append(("H1-W-L1b", {"low": cd, "high": bc + cd}))
    profile = h1_bit_profile(ef, ab, cd)
    if not profile.S:
        if bc >= 1:
            matches.append(("H1-W-T1", profile))
    elif profile.b[profile.I] == 1 or profile.c[profile.I] == 1:
        matches.append(("H1-W-T1", profile))
    if ef >= 1:
        d = h1_decompose(ab, bc, cd, ef)
        k, low = d.k, min(d.ell1, d.ell2)
        if d.m1 != d.m2 or low >= k or (k in (d.ell1, d.ell2) and (low > 0 or bc == 0)):
            matches.append(("H1-W-L2", d))
        if (low < k and bc > k - low) or bc > k:
            matches.append(("H1-W-L3", d))
    elif bc > ef:
        matches.append(("H1-W-L3", None))
    return matches


def h1_matches(config: Sequence[int]) -> tuple[list, list]:
    """All (rule, trace) matches for a position: (winning, losing) lists.

    Exposed so each rule can be tested in isolation against the oracle.
    """
    w = tuple(config)
    if len(w) != 4:
        raise InvalidConfigError(f"H1: expected 4 weights, got {len(w)}")
    ab, bc, cd, ef = w
    if min(ab, bc, cd) < 1 or ef < 0:
        raise InvalidConfigError("H1: AB, BC, CD must be >= 1 and EF >= 0")
    return _h1_winning_matches(ab, bc, cd, ef), _h1_losing_matches(ab, bc, cd, ef)


def classify_H1(config: Sequence[int]) -> Classification:
    """Partial H1 rule engine (order AB,BC,CD,EF; EF may be 0).

    Returns the first matching rule's verdict, Unknown when nothing
    matches, and raises ContradictionError when a winning and a losing
    rule fire on the same position.
    """
    w = tuple(config)
    ab, bc, cd, ef = w
    wins, losses = h1_matches(w)
    if wins and losses:
        raise ContradictionError(
            f"H1 {w}: winning rule {wins[0][0]} and losing rule {losses[0][0]} both match",
            winning_trace=wins[0],
            losing_trace=losses[0],
        )
    if wins:
        rule, trace = wins[0]
        return Classification(Verdict.WINNING, rule, trace)
    if losses:
        rule, trace = losses[0]
        return Classification(Verdict.LOSING, rule, trace)
    return Classification(Verdict.UNKNOWN, "H1-unknown",
                          h1_decompose(ab, bc, cd, ef) if ef >= 1 else None)


# --- dispatch ------------------------------------------------------------


def classify(graph_id: str, config: Sequence[int]) -> Classification:
    """Route a catalog configuration to its closed-form classifier.

    G1 routes through the galaxy classifier (its single star makes every
    positive configuration unbalanced, hence winning); classify_allwin
    remains available for direct calls.
    """
    if graph_id not in CATALOG_IDS:
        raise UnsupportedGraphError(
            f"no closed-form classifier for {graph_id!r}; use the solver"
        )
    if graph_id == "H1":
        return classify_H1(config)
    topology = catalog_graph(graph_id)
    weights = check_config(topology, config, positive=True)
    if graph_id in GALAXY_IDS:
        return classify_galaxy(graph_id, topology, weights)
    if graph_id == "F1":
        return classify_F1(weights)
    if graph_id == "F2":
        return classify_F2(weights)
    if graph_id == "G4":
        return classify_G4(weights)
    return classify_allwin(graph_id, weights)
