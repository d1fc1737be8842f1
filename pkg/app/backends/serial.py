from app.core.algebra import Algebra


class SerialAlgebra(Algebra):
    """One pass over ``[0, n)`` in index order, in the calling thread."""

    tag = "serial"

    def ranges(self, n: int) -> list[tuple[int, int]]:
        return [(0, n)] if n > 0 else []
