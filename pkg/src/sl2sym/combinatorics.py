"""Partitions, diagram cells, and the counting formulas behind the sl2
decompositions: rectangle-bounded partition counts, Gaussian binomial
coefficients, and the Cayley-Sylvester multiplicity formula."""

from functools import cache

Partition = tuple[int, ...]
Cell = tuple[int, int]


def check_partition(parts) -> Partition:
    """Return `parts` as a tuple, after checking weak decrease and positivity."""
    lam = tuple(parts)
    for k, p in enumerate(lam):
        if not isinstance(p, int) or p < 1:
            raise ValueError(f"partition parts must be positive integers: {lam!r}")
        if k and lam[k - 1] < p:
            raise ValueError(f"partition must be weakly decreasing: {lam!r}")
    return lam


def content(cell: Cell) -> int:
    """Content j - i of the cell (i, j) (rows and columns are 1-based)."""
    i, j = cell
    return j - i


def addable_corners(lam: Partition, row_bound: int) -> list[Cell]:
    """Cells that can be added to `lam` keeping a partition with at most
    `row_bound` rows, listed top to bottom."""
    if len(lam) > row_bound:
        raise ValueError(f"{lam!r} already has more than {row_bound} rows")
    corners = []
    for i in range(1, len(lam) + 1):
        if i == 1 or lam[i - 2] > lam[i - 1]:
            corners.append((i, lam[i - 1] + 1))
    if len(lam) < row_bound:
        corners.append((len(lam) + 1, 1))
    return corners


def removable_corners(lam: Partition) -> list[Cell]:
    """Cells whose removal leaves a partition, listed top to bottom."""
    corners = []
    for i in range(1, len(lam) + 1):
        if i == len(lam) or lam[i] < lam[i - 1]:
            corners.append((i, lam[i - 1]))
    return corners


def add_cell(lam: Partition, cell: Cell) -> Partition:
    i, j = cell
    if i == len(lam) + 1:
        if j != 1:
            raise ValueError(f"cannot add {cell!r} to {lam!r}")
        return lam + (1,)
    if i < 1 or i > len(lam) or lam[i - 1] + 1 != j:
        raise ValueError(f"cannot add {cell!r} to {lam!r}")
    return lam[: i - 1] + (j,) + lam[i:]


def remove_cell(lam: Partition, cell: Cell) -> Partition:
    i, j = cell
    if i < 1 or i > len(lam) or lam[i - 1] != j:
        raise ValueError(f"cannot remove {cell!r} from {lam!r}")
    if j == 1:
        return lam[: i - 1]
    return lam[: i - 1] + (j - 1,) + lam[i:]


def partitions(size: int, max_rows: int | None = None, max_part: int | None = None):
    """Yield the partitions of `size` with at most `max_rows` parts, each at
    most `max_part`, in lexicographically decreasing order."""
    if max_rows is None:
        max_rows = size
    if max_part is None:
        max_part = size

    def rec(remaining, rows_left, cap):
        if remaining == 0:
            yield ()
            return
        if rows_left == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - first, rows_left - 1, first):
                yield (first,) + rest

    yield from rec(size, max_rows, max_part)


@cache
def count_partitions_in_rectangle(max_parts: int, max_part: int, size: int) -> int:
    """Number of partitions of `size` with at most `max_parts` parts, each
    part at most `max_part` (counted by largest part, memoized)."""
    if size == 0:
        return 1
    if size < 0 or max_parts <= 0 or max_part <= 0:
        return 0
    return sum(
        count_partitions_in_rectangle(max_parts - 1, j, size - j)
        for j in range(1, min(max_part, size) + 1)
    )


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact quotient of integer polynomials (coefficient lists, ascending)."""
    num = list(num)
    lead = den[-1]
    dd = len(den) - 1
    qdeg = len(num) - len(den)
    quot = [0] * (qdeg + 1)
    for k in range(qdeg, -1, -1):
        c, r = divmod(num[k + dd], lead)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        quot[k] = c
        if c:
            for idx, d in enumerate(den):
                num[k + idx] -= c * d
    if any(num):
        raise ArithmeticError("polynomial division left a remainder")
    return quot


def gamma(a: int, n: int, i: int) -> int:
    """Coefficient of T^i in prod_{j=1..n} (1 - T^(a-n+j)) / (1 - T^j),
    i.e. the Gaussian binomial coefficient [a choose n] at T^i."""
    if n < 1:
        raise ValueError("need n >= 1")
    if a < n:
        raise ValueError(f"need a >= n, got a={a}, n={n}")
    if i < 0:
        return 0
    num = [1]
    den = [1]
    for j in range(1, n + 1):
        num = _poly_mul(num, [1] + [0] * (a - n + j - 1) + [-1])
        den = _poly_mul(den, [1] + [0] * (j - 1) + [-1])
    quot = _poly_divexact(num, den)
    return quot[i] if i < len(quot) else 0


def sylvester_cayley(n: int, d: int, i: int) -> int:
    """Multiplicity of the highest weight i in the n-th symmetric power of
    the standard (d+1)-dimensional module, as a difference of Gaussian
    binomial coefficients.  Zero when d*n - i is odd or negative."""
    if n == 0:
        return 1 if i == 0 else 0
    t = d * n - i
    if t < 0 or t % 2:
        return 0
    half = t // 2
    return gamma(d + n, n, half) - gamma(d + n, n, half - 1)


def count_lw_solutions(n: int, i: int) -> int:
    """Number of tuples (a_1, ..., a_{n-1}) of naturals with
    2*a_1 + 3*a_2 + ... + n*a_{n-1} = i."""
    if n < 2:
        raise ValueError("need n >= 2")
    if i < 0:
        return 0
    ways = [0] * (i + 1)
    ways[0] = 1
    for part in range(2, n + 1):
        for s in range(part, i + 1):
            ways[s] += ways[s - part]
    return ways[i]


def alpha_degree(alpha) -> int:
    """Polynomial degree of z_2^a_1 * z_3^a_2 * ... given the exponent tuple."""
    return sum((k + 2) * a for k, a in enumerate(alpha))


def alpha_tuples(n: int, max_degree: int) -> list[tuple[int, ...]]:
    """All exponent tuples of length n-1 with degree at most `max_degree`,
    sorted by (degree, tuple)."""
    if n < 2:
        raise ValueError("need n >= 2")
    length = n - 1

    def rec(idx, budget):
        if idx == length:
            yield ()
            return
        w = idx + 2
        for a in range(budget // w + 1):
            for rest in rec(idx + 1, budget - w * a):
                yield (a,) + rest

    return sorted(rec(0, max_degree), key=lambda t: (alpha_degree(t), t))
