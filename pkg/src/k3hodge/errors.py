"""Exception hierarchy shared by every module of the package."""


class HodgeError(Exception):
    """Base class for all errors raised by k3hodge."""


class DegenerateLattice(HodgeError, ValueError):
    """The Gram matrix has determinant zero but the operation needs an inverse."""


class InvalidDegree(HodgeError, ValueError):
    """A polarization degree parameter t was not a positive integer."""


class GramMismatch(HodgeError, ValueError):
    """embedding * G_K3 * embedding^T differs from the declared Picard Gram matrix."""


class NotPrimitive(HodgeError, ValueError):
    """The embedded Picard lattice is not saturated in the K3 lattice."""


class RankOutOfRange(HodgeError, ValueError):
    """Picard rank outside 1..19, or inconsistent matrix shapes."""


class WrongSignature(HodgeError, ValueError):
    """Picard lattice is not hyperbolic of signature (1, r-1)."""


class NotIntegral(HodgeError, ValueError):
    """A class that must lie in the integral lattice has a non-integer coordinate."""


class GeneralityRequired(HodgeError, ValueError):
    """The computation is only valid for K3 surfaces general in their rank."""


class InternalInconsistency(HodgeError, RuntimeError):
    """Two independent computations of the same quantity disagreed."""
