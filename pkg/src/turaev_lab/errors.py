"""Exception types shared across the package."""


class PDError(ValueError):
    """Malformed or non-realizable planar diagram input."""


class SplitDiagramError(ValueError):
    """A connected diagram was required but the diagram splits."""


class BudgetExceeded(RuntimeError):
    """An enumeration or recursion budget was exhausted."""


class MoveError(ValueError):
    """A Reidemeister move pattern was not found at the requested site."""
