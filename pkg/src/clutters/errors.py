"""Exception types shared across the package."""


class GroundSetTooLarge(ValueError):
    """Ground set exceeds what the requested operation can materialize."""


class TrivialClutter(ValueError):
    """Operation requires a nontrivial clutter (not empty, not {0})."""


class NotAnFVector(ValueError):
    """An h-vector transformed back to counts that no family on E_t can have."""


class EmptyVertexSet(ValueError):
    """Alexander duality is undefined for the complex {0}."""


class NotStarSelfDual(ValueError):
    """Operation requires a family F with F* = F."""


class NotSelfDual(ValueError):
    """Operation requires a self-dual clutter (blocker equals the clutter)."""


class OddGroundSet(ValueError):
    """Operation is defined only for even ground-set cardinality."""


class InvalidLevel(ValueError):
    """Cascade level must be a positive integer."""
