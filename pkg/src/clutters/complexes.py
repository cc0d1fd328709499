"""Abstract simplicial complexes on E_t and their dualities.

A complex is a downward-closed, nonempty family of faces. Two distinct
notions of self-duality appear here:

  * star self-duality, star(D) = D, taken relative to the full ground set;
  * Alexander self-duality, D = dual(D), taken relative to the vertex set
    V(D) only.

The Alexander dual is {V - F : F subset of V, F not a face}. The defining
condition presumes V(dual) = V(D); when that fails (including the case of
an empty dual) the result carries an explicit vertex_mismatch flag rather
than a silently reinterpreted complex.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import EmptyVertexSet, GroundSetTooLarge, NotStarSelfDual
from .sets import (
    DENSE_MAX_T,
    Clutter,
    SetFamily,
    check_dense,
    iter_subsets,
    max_elements,
    star,
)
from .vectors import binom, f_vector


@dataclass(frozen=True)
class Complex:
    """Downward-closed nonempty family of faces on E_t."""

    family: SetFamily

    def __post_init__(self) -> None:
        faces = self.family._member_set
        if not faces:
            raise ValueError("a complex has at least the empty face")
        for m in self.family.members:
            bit = m
            while bit:
                low = bit & -bit
                if m ^ low not in faces:
                    raise ValueError(
                        f"not downward closed: face {m:b} lacks subset {m ^ low:b}"
                    )
                bit ^= low

    @property
    def t(self) -> int:
        return self.family.t

    @cached_property
    def vertex_mask(self) -> int:
        """V(D): union of all faces."""
        return self.family.vertex_mask()

    @cached_property
    def facets(self) -> Clutter:
        """Inclusion-maximal faces."""
        return max_elements(self.family)

    @cached_property
    def dim_size(self) -> int:
        """d(D): largest face size (0 for the complex {0})."""
        return max(m.bit_count() for m in self.family.members)

    def __len__(self) -> int:
        return len(self.family)


def down_closure(f: SetFamily) -> Complex:
    """Smallest complex containing every member of f (t <= 28)."""
    check_dense(f.t)
    if not f.members:
        raise ValueError("cannot build a complex from an empty family")
    faces: set[int] = set()
    for m in f.members:
        faces.update(iter_subsets(m))
    return Complex(SetFamily(f.t, tuple(faces)))


def facets(c: Complex) -> Clutter:
    return c.facets


@dataclass(frozen=True)
class AlexanderDual:
    """Result of Alexander dualization.

    family is the dual face family (possibly empty); vertex_mismatch is
    True when V(dual) differs from V(D), the case the duality's defining
    condition excludes.
    """

    family: SetFamily
    vertex_mismatch: bool

    def as_complex(self) -> Complex:
        if not self.family.members:
            raise ValueError("dual family is empty, not a complex")
        return Complex(self.family)


def alexander_dual(c: Complex) -> AlexanderDual:
    """Dual {V - F : F in 2^V - D} computed relative to V = V(D)."""
    v = c.vertex_mask
    if v == 0:
        raise EmptyVertexSet("the complex {0} has no vertices to dualize over")
    if v.bit_count() > DENSE_MAX_T:
        raise GroundSetTooLarge(
            f"vertex set has {v.bit_count()} elements, dense dual needs <= {DENSE_MAX_T}"
        )
    faces = c.family._member_set
    dual = SetFamily(c.t, tuple(v ^ s for s in iter_subsets(v) if s not in faces))
    return AlexanderDual(dual, dual.vertex_mask() != v)


def is_alexander_self_dual(c: Complex) -> bool:
    """D = dual(D), evaluated structurally.

    The cardinality test #D = 2^(|V|-1) is evaluated alongside; equality
    of D and its dual forces it, and that direction is asserted. The
    converse is false: {0,1,2,3,4,13,14,24} on V = E_4 has 8 = 2^3 faces
    but differs from its dual.
    """
    d = alexander_dual(c)
    structural = not d.vertex_mismatch and d.family == c.family
    by_count = len(c.family) == 1 << (c.vertex_mask.bit_count() - 1)
    assert by_count or not structural, "self-dual complex with wrong face count"
    return structural


def is_star_self_dual(c: Complex) -> bool:
    """star(D) = D relative to the full ground set E_t (t <= 28)."""
    return star(c.family) == c.family


def check_star_selfdual_facts(c: Complex) -> dict:
    """Enumerative facts forced by star(D) = D.

      count   #D = 2^(t-1)
      eq17    f_l + f_{t-l} = C(t,l) for all l
      middle  f_{t/2} = C(t,t/2) / 2          (even t only, else None)
    """
    if not is_star_self_dual(c):
        raise NotStarSelfDual("facts apply only when star(D) = D")
    t = c.t
    fv = f_vector(c.family)
    report: dict = {
        "t": t,
        "f": list(fv.counts),
        "count": len(c.family) == 1 << (t - 1),
        "eq17": all(fv[l] + fv[t - l] == binom(t, l) for l in range(t + 1)),
        "middle": 2 * fv[t // 2] == binom(t, t // 2) if t % 2 == 0 else None,
    }
    report["pass"] = all(v for k, v in report.items()
                         if k in ("count", "eq17", "middle") and v is not None)
    return report
