"""Subsets and set families on a fixed ground set E_t = {1, ..., t}.

Conventions used throughout the package:

  * a subset of E_t is an int mask: element i is bit i-1, the empty set is 0;
  * a family is a duplicate-free tuple of masks in ascending numeric order,
    so equality of families is structural;
  * masks must fit one machine word (t <= 62), and any operation that walks
    all 2^t subsets additionally requires t <= 28.

Subset inclusion is mask containment: a <= b as sets iff a & ~b == 0, which
also implies a <= b numerically; canonical order is therefore compatible
with inclusion (subsets never sort after supersets).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import GroundSetTooLarge, TrivialClutter

MAX_T = 62
DENSE_MAX_T = 28


def check_ground_set(t: int) -> None:
    if not 1 <= t <= MAX_T:
        raise GroundSetTooLarge(f"ground set size must be in 1..{MAX_T}, got {t}")


def check_dense(t: int) -> None:
    check_ground_set(t)
    if t > DENSE_MAX_T:
        raise GroundSetTooLarge(
            f"operation enumerates all 2^t subsets and needs t <= {DENSE_MAX_T}, got {t}"
        )


def full_mask(t: int) -> int:
    return (1 << t) - 1


def mask_of(elements: Iterable[int], t: int) -> int:
    """Mask of a subset given by 1-based elements."""
    m = 0
    for e in elements:
        if not 1 <= e <= t:
            raise ValueError(f"element {e} outside ground set 1..{t}")
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    """1-based elements of a mask, ascending."""
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def iter_bits(mask: int) -> Iterator[int]:
    """Bit positions set in mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def iter_supersets(mask: int, t: int) -> Iterator[int]:
    """All supersets of mask within E_t (2^(t - |mask|) of them)."""
    rest = full_mask(t) ^ mask
    s = rest
    while True:
        yield mask | s
        if s == 0:
            return
        s = (s - 1) & rest


def iter_subsets(mask: int) -> Iterator[int]:
    """All subsets of mask, including 0 and mask itself."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


@dataclass(frozen=True, eq=False)
class SetFamily:
    """A canonically ordered, duplicate-free family of subsets of E_t."""

    t: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        check_ground_set(self.t)
        canon = tuple(sorted(set(self.members)))
        if canon and (canon[0] < 0 or canon[-1] > full_mask(self.t)):
            raise ValueError(f"member mask outside 2^[{self.t}]")
        object.__setattr__(self, "members", canon)

    @classmethod
    def from_sets(cls, t: int, sets: Iterable[Iterable[int]]) -> "SetFamily":
        return cls(t, tuple(mask_of(s, t) for s in sets))

    def sets(self) -> tuple[tuple[int, ...], ...]:
        """Members as tuples of 1-based elements (for display)."""
        return tuple(elements_of(m) for m in self.members)

    def vertex_mask(self) -> int:
        """Union of all members, V(F)."""
        v = 0
        for m in self.members:
            v |= m
        return v

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, mask: int) -> bool:
        return mask in self._member_set

    @cached_property
    def _member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def __eq__(self, other: object) -> bool:
        # Clutter and SetFamily with identical contents compare equal.
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.t == other.t and self.members == other.members

    def __hash__(self) -> int:
        return hash((self.t, self.members))

    def __repr__(self) -> str:
        shown = ",".join("{" + ",".join(map(str, s)) + "}" for s in self.sets())
        return f"{type(self).__name__}(t={self.t}, {{{shown}}})"


@dataclass(frozen=True, eq=False, repr=False)
class Clutter(SetFamily):
    """A SetFamily that is an antichain under inclusion."""

    def __post_init__(self) -> None:
        super().__post_init__()
        ms = self.members
        for j in range(len(ms)):
            mj = ms[j]
            for i in range(j):
                # ascending numeric order, so only members[i] < members[j] possible
                if ms[i] & ~mj == 0:
                    raise ValueError(
                        f"not an antichain: {elements_of(ms[i])} is contained"
                        f" in {elements_of(mj)}"
                    )

    @property
    def nontrivial(self) -> bool:
        return self.members not in ((), (0,))


def require_nontrivial(a: Clutter) -> None:
    if not a.nontrivial:
        raise TrivialClutter("operation requires a nontrivial clutter")


def complement_set(mask: int, t: int) -> int:
    """E_t - mask; an involution."""
    return full_mask(t) ^ mask


def complement_family(f: SetFamily) -> SetFamily:
    """Elementwise complements {E_t - F : F in f}."""
    full = full_mask(f.t)
    return SetFamily(f.t, tuple(full ^ m for m in f.members))


def star(f: SetFamily) -> SetFamily:
    """The family F* = {complement of G : G not in F}.

    #F* + #F = 2^t, and star is an involution.
    """
    check_dense(f.t)
    full = full_mask(f.t)
    memb = f._member_set
    # g descending makes full^g ascending, so the tuple is already canonical
    return SetFamily(f.t, tuple(full ^ g for g in range(full, -1, -1) if g not in memb))


def min_elements(f: SetFamily) -> Clutter:
    """Antichain of inclusion-minimal members; idempotent."""
    kept: list[int] = []
    for m in sorted(f.members, key=lambda x: (x.bit_count(), x)):
        if not any(r & ~m == 0 for r in kept):
            kept.append(m)
    return Clutter(f.t, tuple(kept))


def max_elements(f: SetFamily) -> Clutter:
    """Antichain of inclusion-maximal members."""
    kept: list[int] = []
    for m in sorted(f.members, key=lambda x: (-x.bit_count(), x)):
        if not any(m & ~r == 0 for r in kept):
            kept.append(m)
    return Clutter(f.t, tuple(kept))


class UpFamily:
    """An increasing family A^v: all supersets within 2^[t] of the generators.

    Generators are the inclusion-minimal members and are stored always; the
    dense member list is materialized lazily and only for t <= 28.
    Instances are immutable values; the dense cache is write-once.
    """

    def __init__(self, generators: Clutter):
        self.t = generators.t
        self.generators = generators
        self._dense: SetFamily | None = None

    def family(self) -> SetFamily:
        """Dense member list (requires t <= 28)."""
        if self._dense is None:
            check_dense(self.t)
            out: set[int] = set()
            for g in self.generators.members:
                out.update(iter_supersets(g, self.t))
            self._dense = SetFamily(self.t, tuple(out))
        return self._dense

    def size(self) -> int:
        return len(self.family())

    def __contains__(self, mask: int) -> bool:
        return any(g & ~mask == 0 for g in self.generators.members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UpFamily):
            return NotImplemented
        return self.t == other.t and self.generators == other.generators

    def __hash__(self) -> int:
        return hash(("UpFamily", self.t, self.generators.members))

    def __repr__(self) -> str:
        return f"UpFamily(generators={self.generators!r})"


def principal_upset(mask: int, t: int) -> UpFamily:
    """The increasing family generated by the one-member clutter {mask}."""
    return UpFamily(Clutter(t, (mask,)))


def up_closure(a: Clutter) -> UpFamily:
    """The increasing family generated by clutter a on its ground set."""
    return UpFamily(a)


def blocker_dense(a: Clutter) -> Clutter:
    """Blocker by dense sweep: mark every subset meeting all members, keep
    the inclusion-minimal ones. Requires t <= 28."""
    check_dense(a.t)
    members = a.members
    blocking = [b for b in range(1 << a.t) if all(b & m for m in members)]
    bset = set(blocking)
    minimal = []
    for b in blocking:
        if not any(b ^ (1 << i) in bset for i in iter_bits(b)):
            minimal.append(b)
    return Clutter(a.t, tuple(minimal))


def _minimalize(masks: Iterable[int]) -> list[int]:
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda x: (x.bit_count(), x)):
        if not any(r & ~m == 0 for r in kept):
            kept.append(m)
    return kept


def blocker_berge(a: Clutter) -> Clutter:
    """Blocker by Berge multiplication: distribute the singletons of each
    member over the partial transversals, minimalizing after every member.

    Members are processed in ascending (size, mask) order to keep the
    intermediate families small. Works for any t <= 62.
    """
    trans: list[int] = [0]
    for e in sorted(a.members, key=lambda x: (x.bit_count(), x)):
        new: set[int] = set()
        for tr in trans:
            if tr & e:
                new.add(tr)
            else:
                for i in iter_bits(e):
                    new.add(tr | (1 << i))
        trans = _minimalize(new)
    return Clutter(a.t, tuple(trans))


def blocker(a: Clutter, method: str = "auto") -> Clutter:
    """The blocker B(a): all inclusion-minimal blocking sets of a.

    Conventions for trivial inputs: blocker of the empty clutter is {0}
    (the empty set blocks vacuously) and blocker of {0} is the empty
    clutter (nothing meets the empty set). Both backends agree on these.
    """
    if method == "auto":
        method = "dense" if a.t <= 14 else "berge"
    if method == "dense":
        return blocker_dense(a)
    if method == "berge":
        return blocker_berge(a)
    raise ValueError(f"unknown blocker method {method!r}")


def is_self_dual(a: Clutter) -> bool:
    """True iff B(a) = a (structural equality of canonical forms)."""
    require_nontrivial(a)
    return blocker(a) == a


def self_dual_criterion(a: Clutter) -> bool:
    """Cardinality test: #a^v = 2^(t-1).

    This is implied by self-duality but does not imply it: the clutter
    {{1,2},{2,3},{3,4}} on E_4 has an 8-member up-closure while its blocker
    is {{1,3},{2,3},{2,4}}. Use is_self_dual for the certified check.
    """
    require_nontrivial(a)
    check_dense(a.t)
    return up_closure(a).size() == 1 << (a.t - 1)
