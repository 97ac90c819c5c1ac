from typing import Dict, Optional


class HypothesisViolation(ValueError):
    """An input violates a hypothesis of the pairing formulas (e.g. ±1 as an orthogonal eigenvalue)."""

    def __init__(self, message: str, orbit: Optional[str] = None):
        self.orbit = orbit
        super().__init__(message)


class RouteDisagreement(RuntimeError):
    """Two evaluation routes returned different values for the same input."""

    def __init__(self, values: Dict[str, object]):
        self.values = dict(values)
        listed = ', '.join(f'{route}={value}' for route, value in sorted(self.values.items()))
        super().__init__(f"Routes disagree: {listed}")
