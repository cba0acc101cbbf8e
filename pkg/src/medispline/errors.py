"""Exception types raised across the package."""


class MedisplineError(Exception):
    """Base class for all package errors."""


class InputError(MedisplineError):
    """Invalid input data (bad polygon, duplicate points, unreadable file)."""


class DegenerateTriangleError(MedisplineError):
    """Collinear points where a proper triangle is required."""


class DuplicatePointError(InputError):
    """Two input points coincide exactly."""


class AllCollinearError(InputError):
    """Every input point lies on one line."""


class EmptyMatError(MedisplineError):
    """A medial axis graph with no vertices where one is required."""


class RankDeficiencyError(MedisplineError):
    """Least-squares fit has more control points than the data supports."""


class DomainError(MedisplineError):
    """Curve parameter outside the valid domain."""


class CoincidentCirclesError(MedisplineError):
    """Two identical medial circles cannot form an envelope segment."""


class NonConvergenceError(MedisplineError):
    """Simplification failed to reach the error threshold.

    Carries the best medial axis transform found and its achieved error so
    callers can still emit a best-effort result.
    """

    def __init__(self, message, mat=None, achieved_error=None):
        super().__init__(message)
        self.mat = mat
        self.achieved_error = achieved_error
