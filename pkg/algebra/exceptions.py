class RankBoundExceeded(ValueError):
    """Raised when a brute-force Weyl enumeration is asked for a rank above its bound."""

    def __init__(self, what: str, n: int, bound: int):
        self.n = n
        self.bound = bound
        super().__init__(f"Enumeration of {what} needs rank {n}, above the configured bound {bound}")
