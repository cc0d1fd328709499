"""Cascade expansions and shadow bounds, plus the bound tables for
star-self-dual complexes and up-families of self-dual clutters.

The cascade (k-binomial, Macaulay) expansion of m >= 0 at level k >= 1 is
the unique greedy representation

    m = C(a_k, k) + C(a_{k-1}, k-1) + ... + C(a_j, j),

with a_k > a_{k-1} > ... > a_j >= j >= 1. Replacing every C(a_i, i) by
C(a_i, i-1) gives the minimum possible number of (k-1)-sets below m k-sets
in a complex (lower shadow); replacing by C(a_i, i+1) gives the maximum
possible number of (k+1)-faces on top of them (upper shadow).

Two bound tables are derived from these inequalities for even t, labeled
by the side of the complementation bijection they live on:

  * lemma2_table: complexes D with star(D) = D; bound value C(t-1, k),
    a lower bound below the middle index and an upper bound above it;
  * theorem3_table: up-families A^v of self-dual clutters; bound value
    C(t-1, k-1), an upper bound below the middle and a lower bound above.

The tables are complementary: at every index the theorem3 bound equals
C(t,k) minus the lemma2 bound, with the inequality direction flipped.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass

from .complexes import Complex, is_star_self_dual
from .errors import InvalidLevel, NotSelfDual, NotStarSelfDual, OddGroundSet
from .sets import Clutter, is_self_dual, up_closure
from .vectors import FVector, binom, f_vector

# binomial columns used by the greedy search, grown on demand:
# _COLUMNS[i] = [C(i,i), C(i+1,i), C(i+2,i), ...]
_COLUMNS: dict[int, list[int]] = {}


def _column(i: int, at_least: int) -> list[int]:
    col = _COLUMNS.setdefault(i, [1])
    while col[-1] <= at_least:
        col.append(math.comb(i + len(col), i))
    return col


@dataclass(frozen=True)
class CascadeExpansion:
    """Terms ((a_k, k), (a_{k-1}, k-1), ...) of a cascade expansion."""

    k: int
    terms: tuple[tuple[int, int], ...]

    def value(self) -> int:
        return sum(math.comb(a, i) for a, i in self.terms)

    def lower_shadow(self) -> int:
        return sum(math.comb(a, i - 1) for a, i in self.terms)

    def upper_shadow(self) -> int:
        return sum(math.comb(a, i + 1) for a, i in self.terms)


def cascade(m: int, k: int) -> CascadeExpansion:
    """Greedy maximal-a expansion of m at level k; m = 0 gives no terms."""
    if k < 1:
        raise InvalidLevel(f"cascade level must be >= 1, got {k}")
    if m < 0:
        raise ValueError(f"cascade argument must be >= 0, got {m}")
    terms: list[tuple[int, int]] = []
    r = m
    i = k
    while r > 0:
        if i == 1:
            terms.append((r, 1))
            break
        col = _column(i, r)
        # largest a with C(a, i) <= r; col[j] = C(i + j, i)
        a = i + bisect_right(col, r) - 1
        terms.append((a, i))
        r -= math.comb(a, i)
        i -= 1
    return CascadeExpansion(k, tuple(terms))


def shadow_lower_bound(m: int, k: int) -> int:
    """Minimum number of (k-1)-sets in a complex containing m k-sets."""
    return cascade(m, k).lower_shadow()


def shadow_upper_bound(m: int, k: int) -> int:
    """Maximum number of (k+1)-faces in a complex given m k-faces."""
    return cascade(m, k).upper_shadow()


@dataclass(frozen=True)
class BoundRow:
    """Constraint on f_k: kind is "exact", "lower" or "upper"; lower and
    upper always bracket the admissible range (trivial side included)."""

    k: int
    kind: str
    exact: int | None
    lower: int
    upper: int


@dataclass(frozen=True)
class BoundTable:
    """Per-index constraints plus the mirror-pair sums
    f_{t/2-k} + f_{t/2+k} = C(t, t/2-k)."""

    t: int
    rows: tuple[BoundRow, ...]
    pair_sums: tuple[tuple[int, int], ...]  # (offset, required sum)

    def row(self, k: int) -> BoundRow:
        return self.rows[k]


def _check_even(t: int) -> None:
    if t % 2:
        raise OddGroundSet(f"bound tables need even t, got {t}")
    if not 4 <= t <= 28:
        raise ValueError(f"bound tables defined for even 4 <= t <= 28, got {t}")


def lemma2_table(t: int) -> BoundTable:
    """Bounds for a complex D with star(D) = D on even E_t:
    f_0 = 1, f_t = 0, f_{t/2} = C(t-1, t/2), f_k >= C(t-1, k) below the
    middle, f_k <= C(t-1, k) above it."""
    _check_even(t)
    half = t // 2
    rows = []
    for k in range(t + 1):
        b = binom(t - 1, k)
        if k == 0 or k == t or k == half:
            rows.append(BoundRow(k, "exact", b, b, b))
        elif k < half:
            rows.append(BoundRow(k, "lower", None, b, binom(t, k)))
        else:
            rows.append(BoundRow(k, "upper", None, 0, b))
    pair = tuple((k, binom(t, half - k)) for k in range(1, half))
    return BoundTable(t, tuple(rows), pair)


def theorem3_table(t: int) -> BoundTable:
    """Bounds for the up-family A^v of a self-dual clutter on even E_t:
    f_0 = 0, f_t = 1, f_{t/2} = C(t-1, t/2), f_k <= C(t-1, k-1) below the
    middle, f_k >= C(t-1, k-1) above it."""
    _check_even(t)
    half = t // 2
    rows = []
    for k in range(t + 1):
        b = binom(t - 1, k - 1)
        if k == 0 or k == t or k == half:
            rows.append(BoundRow(k, "exact", b, b, b))
        elif k < half:
            rows.append(BoundRow(k, "upper", None, 0, b))
        else:
            rows.append(BoundRow(k, "lower", None, b, binom(t, k)))
    pair = tuple((k, binom(t, half - k)) for k in range(1, half))
    return BoundTable(t, tuple(rows), pair)


def _verify_against(table: BoundTable, fv: FVector) -> dict:
    t = table.t
    half = t // 2
    rows = []
    ok_all = True
    for row in table.rows:
        v = fv[row.k]
        if row.kind == "exact":
            ok = v == row.exact
            slack = 0 if ok else abs(v - row.exact)
        elif row.kind == "lower":
            ok = v >= row.lower
            slack = v - row.lower
        else:
            ok = v <= row.upper
            slack = row.upper - v
        ok_all &= ok
        rows.append(
            {"k": row.k, "kind": row.kind, "bound": row.exact
             if row.kind == "exact" else (row.lower if row.kind == "lower" else row.upper),
             "value": v, "slack": slack, "ok": ok}
        )
    pairs = []
    for off, want in table.pair_sums:
        got = fv[half - off] + fv[half + off]
        ok = got == want
        ok_all &= ok
        pairs.append({"offset": off, "expected": want, "actual": got, "ok": ok})
    return {"t": t, "f": list(fv.counts), "rows": rows, "pair_sums": pairs,
            "pass": ok_all}


def verify_theorem3(a: Clutter) -> dict:
    """Check the f-vector of a's up-family against theorem3_table(t).

    Self-duality is recomputed here (blocker equality), never trusted
    from the caller, so the report is self-certifying.
    """
    if a.t % 2:
        raise OddGroundSet(f"theorem3 bounds need even t, got {a.t}")
    if not is_self_dual(a):
        raise NotSelfDual("clutter does not equal its blocker")
    fv = f_vector(up_closure(a).family())
    report = _verify_against(theorem3_table(a.t), fv)
    report["self_dual"] = True
    return report


def verify_lemma2(c: Complex) -> dict:
    """Check the f-vector of complex c against lemma2_table(t);
    star self-duality is recomputed, not trusted."""
    if c.t % 2:
        raise OddGroundSet(f"lemma2 bounds need even t, got {c.t}")
    if not is_star_self_dual(c):
        raise NotStarSelfDual("complex does not equal its star")
    fv = f_vector(c.family)
    report = _verify_against(lemma2_table(c.t), fv)
    report["star_self_dual"] = True
    return report
