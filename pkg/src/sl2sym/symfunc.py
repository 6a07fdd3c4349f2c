"""The Schur-basis view of the symmetric polynomial algebra: tableau
expansion of Schur polynomials, conversion of symmetric polynomials into
the Schur basis, multiplication, and the named families (power sums,
elementary, complete homogeneous, kernel generators) as Schur vectors."""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb

from .combinatorics import Partition, addable_corners, add_cell, check_partition
from .polyring import Poly, power_sum_poly


def canonical_order(terms: dict) -> list:
    """Items sorted by degree, then lexicographically descending partition."""
    items = sorted(terms.items(), key=lambda kv: kv[0], reverse=True)
    items.sort(key=lambda kv: sum(kv[0]))
    return items


class SchurVector:
    """Finite rational linear combination of Schur basis elements s_lambda,
    all partitions having at most `n` rows."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n
        clean = {}
        if terms:
            for lam, c in terms.items():
                c = Fraction(c)
                if not c:
                    continue
                lam = check_partition(lam)
                if len(lam) > n:
                    raise ValueError(f"partition {lam!r} has more than {n} rows")
                clean[lam] = c
        self.terms = clean

    @classmethod
    def zero(cls, n: int) -> "SchurVector":
        return cls(n)

    @classmethod
    def unit(cls, n: int) -> "SchurVector":
        return cls(n, {(): 1})

    @classmethod
    def basis(cls, n: int, lam) -> "SchurVector":
        return cls(n, {tuple(lam): 1})

    def _require_same_ambient(self, other: "SchurVector"):
        if self.n != other.n:
            raise ValueError(f"ambient variable counts differ: {self.n} vs {other.n}")

    def __add__(self, other: "SchurVector") -> "SchurVector":
        self._require_same_ambient(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return SchurVector(self.n, out)

    def __sub__(self, other: "SchurVector") -> "SchurVector":
        self._require_same_ambient(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) - c
        return SchurVector(self.n, out)

    def __neg__(self) -> "SchurVector":
        return SchurVector(self.n, {lam: -c for lam, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SchurVector):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return SchurVector(self.n, {lam: c * other for lam, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SchurVector":
        if k < 0:
            raise ValueError("only natural powers")
        out = SchurVector.unit(self.n)
        for _ in range(k):
            out = multiply(out, self)
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SchurVector)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def map_basis(self, image) -> "SchurVector":
        """Linear extension of `image`, a map partition -> {partition: coeff}."""
        out = {}
        for lam, c in self.terms.items():
            for mu, a in image(lam).items():
                out[mu] = out.get(mu, 0) + c * a
        return SchurVector(self.n, out)

    def sorted_terms(self) -> list:
        return canonical_order(self.terms)

    def __repr__(self):
        if not self.terms:
            return f"SchurVector({self.n}, 0)"
        body = " + ".join(
            f"{c}*s{list(lam)}" for lam, c in self.sorted_terms()
        ).replace("+ -", "- ")
        return f"SchurVector({self.n}, {body})"


def staircase(n: int) -> Partition:
    """(n-1, n-2, ..., 1, 0)."""
    return tuple(range(n - 1, -1, -1))


@lru_cache(maxsize=None)
def schur_to_poly(lam: Partition, n: int) -> Poly:
    """Schur polynomial in n variables by semistandard tableau enumeration:
    rows weakly increase, columns strictly increase, entries in 1..n; each
    tableau contributes its content monomial."""
    lam = check_partition(lam)
    if len(lam) > n:
        raise ValueError(f"partition {lam!r} has more than {n} rows")
    terms: dict = {}

    def fill_row(row_idx, col, min_val, prev_row, row, weight):
        if col == lam[row_idx]:
            fill_shape(row_idx + 1, tuple(row), weight)
            return
        lo = max(min_val, (prev_row[col] + 1) if prev_row else 1)
        for v in range(lo, n + 1):
            row.append(v)
            weight[v - 1] += 1
            fill_row(row_idx, col + 1, v, prev_row, row, weight)
            weight[v - 1] -= 1
            row.pop()

    def fill_shape(row_idx, prev_row, weight):
        if row_idx == len(lam):
            key = tuple(weight)
            terms[key] = terms.get(key, 0) + 1
            return
        fill_row(row_idx, 0, 1, prev_row, [], weight)

    fill_shape(0, None, [0] * n)
    return Poly(n, terms)


def alternant(mu, n: int) -> Poly:
    """det(x_i^mu_j), expanded over permutations with sign."""
    mu = tuple(mu)
    if len(mu) != n:
        raise ValueError(f"need {n} exponents, got {mu!r}")
    terms: dict = {}
    for perm in permutations(range(n)):
        inversions = sum(
            1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b]
        )
        sign = -1 if inversions % 2 else 1
        key = tuple(mu[perm[i]] for i in range(n))
        terms[key] = terms.get(key, 0) + sign
    return Poly(n, terms)


def poly_to_schur(f: Poly) -> SchurVector:
    """Expand a symmetric polynomial in the Schur basis by repeatedly
    stripping the lexicographically greatest remaining monomial, whose
    sorted exponent vector names the next Schur term."""
    if not f.is_symmetric():
        raise ValueError("Schur expansion needs a symmetric polynomial")
    n = f.n
    out = {}
    rem = f
    while rem:
        exps = max(rem.terms)
        if any(exps[k] < exps[k + 1] for k in range(n - 1)):
            raise ArithmeticError(f"leading exponent {exps!r} is not sorted")
        lam = tuple(p for p in exps if p)
        c = rem.terms[exps]
        out[lam] = c
        rem = rem - schur_to_poly(lam, n) * c
    return SchurVector(n, out)


@lru_cache(maxsize=None)
def _basis_product(lam: Partition, mu: Partition, n: int) -> dict:
    prod = schur_to_poly(lam, n) * schur_to_poly(mu, n)
    return poly_to_schur(prod).terms


def multiply(u: SchurVector, v: SchurVector) -> SchurVector:
    """Product in the Schur basis; partitions with too many rows drop out
    automatically on the polynomial side."""
    u._require_same_ambient(v)
    out = {}
    for lam, a in u.terms.items():
        for mu, b in v.terms.items():
            key = (lam, mu) if lam <= mu else (mu, lam)
            for nu, c in _basis_product(key[0], key[1], u.n).items():
                out[nu] = out.get(nu, 0) + a * b * c
    return SchurVector(u.n, out)


def pieri_e1(u: SchurVector) -> SchurVector:
    """Multiplication by s_(1): add one box in all ways within the row bound."""
    n = u.n
    return u.map_basis(
        lambda lam: {add_cell(lam, cell): 1 for cell in addable_corners(lam, n)}
    )


def power_sum_schur(k: int, n: int) -> SchurVector:
    """p_k as the alternating hook sum s_(k) - s_(k-1,1) + s_(k-2,1,1) - ...,
    truncated to hooks with at most n rows."""
    if k < 1:
        raise ValueError("need k >= 1")
    terms = {}
    for j in range(min(k, n)):
        hook = (k - j,) + (1,) * j
        terms[hook] = (-1) ** j
    return SchurVector(n, terms)


def elementary_schur(i: int, n: int) -> SchurVector:
    """e_i = s_(1^i)."""
    if i < 0 or i > n:
        raise ValueError(f"e_{i} undefined in {n} variables")
    return SchurVector(n, {(1,) * i: 1})


def homogeneous_schur(i: int, n: int) -> SchurVector:
    """h_i = s_(i)."""
    if i < 0:
        raise ValueError("need i >= 0")
    return SchurVector(n, {((i,) if i else ()): 1})


@lru_cache(maxsize=None)
def z_generator_schur(i: int, n: int) -> SchurVector:
    """Schur expansion of the kernel generator z_i, built from the power-sum
    hooks; empty for odd i when n = 2."""
    if i < 2:
        raise ValueError("kernel generators start at z_2")
    p1 = power_sum_schur(1, n)
    total = SchurVector.zero(n)
    for k in range(i - 1):
        coef = (-1) ** k * n ** (i - k - 1) * comb(i, k)
        total = total + power_sum_schur(i - k, n) * (p1 ** k) * coef
    return total + (p1 ** i) * ((i - 1) * (-1) ** (i + 1))


def z_monomial_schur(alpha, n: int) -> SchurVector:
    """Schur expansion of z_2^a_1 * z_3^a_2 * ... * z_n^a_{n-1}."""
    alpha = tuple(alpha)
    if len(alpha) != n - 1:
        raise ValueError(f"need {n - 1} exponents, got {alpha!r}")
    if any(a < 0 for a in alpha):
        raise ValueError("exponents must be naturals")
    out = SchurVector.unit(n)
    for idx, a in enumerate(alpha):
        for _ in range(a):
            out = multiply(out, z_generator_schur(idx + 2, n))
    return out
