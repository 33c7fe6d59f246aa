"""Exception types shared across the package."""


class AbCrackError(Exception):
    """Base class for all abcrack errors."""


class DomainError(AbCrackError):
    """Argument outside the mathematical domain of a function."""


class PoleOutsideDomain(AbCrackError):
    """Pole is outside the domain or on its boundary."""


class InvalidRadius(AbCrackError):
    """Cut-off radius not in (0, 1)."""


class SlitTooShort(AbCrackError):
    """Slit length d_a < 4h, the mesh cannot resolve it."""


class MeshingFailure(AbCrackError):
    """Mesh generation produced an invalid triangulation."""


class SingularElement(AbCrackError):
    """Triangle with (near-)zero area encountered during assembly."""


class ConvergenceFailure(AbCrackError):
    """Eigensolver did not reach the requested residual."""

    def __init__(self, msg, residual=None):
        super().__init__(msg)
        self.residual = residual


class FactorizationFailure(AbCrackError):
    """Sparse factorization of a shifted or SPD matrix failed."""


class MeshMismatch(AbCrackError):
    """Plain-mesh data does not share the slit mesh's geometric nodes."""


class ClusterAmbiguous(AbCrackError):
    """Eigenvalue cluster does not satisfy the gap criterion."""


class InsufficientSamples(AbCrackError):
    """Too few samples for a least-squares fit."""


class QuadratureFailure(AbCrackError):
    """Adaptive quadrature failed to reach the requested tolerance."""
