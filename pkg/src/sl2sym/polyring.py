"""Sparse multivariate polynomials with exact rational coefficients, the
differential operators giving both sl2-actions, the classical symmetric
families, the slice homomorphism onto the lowering kernel, and the kernel
generators z_i."""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import comb, factorial

OPS = ("lower", "cartan", "raise")


class Poly:
    """Polynomial in a fixed number of variables, stored as a map from
    exponent tuples to nonzero rational coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n
        clean = {}
        if terms:
            for exps, c in terms.items():
                c = Fraction(c)
                if not c:
                    continue
                exps = tuple(exps)
                if len(exps) != n or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent vector {exps!r} for {n} variables")
                clean[exps] = c
        self.terms = clean

    @classmethod
    def zero(cls, n: int) -> "Poly":
        return cls(n)

    @classmethod
    def constant(cls, n: int, c) -> "Poly":
        return cls(n, {(0,) * n: c})

    @classmethod
    def variable(cls, n: int, k: int) -> "Poly":
        """The variable x_k (1-based)."""
        if not 1 <= k <= n:
            raise ValueError(f"variable index {k} out of range 1..{n}")
        exps = [0] * n
        exps[k - 1] = 1
        return cls(n, {tuple(exps): 1})

    @classmethod
    def monomial(cls, n: int, exps, c=1) -> "Poly":
        return cls(n, {tuple(exps): c})

    def _require_same_ambient(self, other: "Poly"):
        if self.n != other.n:
            raise ValueError(f"ambient variable counts differ: {self.n} vs {other.n}")

    def __add__(self, other: "Poly") -> "Poly":
        self._require_same_ambient(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            out[exps] = out.get(exps, 0) + c
        return Poly(self.n, out)

    def __sub__(self, other: "Poly") -> "Poly":
        self._require_same_ambient(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            out[exps] = out.get(exps, 0) - c
        return Poly(self.n, out)

    def __neg__(self) -> "Poly":
        return Poly(self.n, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._require_same_ambient(other)
            out = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    key = tuple(a + b for a, b in zip(e1, e2))
                    out[key] = out.get(key, 0) + c1 * c2
            return Poly(self.n, out)
        if isinstance(other, (int, Fraction)):
            return Poly(self.n, {e: c * other for e, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("only natural powers")
        out = Poly.constant(self.n, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.n == other.n and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def partial(self, k: int) -> "Poly":
        """Formal partial derivative in x_k (1-based)."""
        if not 1 <= k <= self.n:
            raise ValueError(f"variable index {k} out of range 1..{self.n}")
        out = {}
        for exps, c in self.terms.items():
            e = exps[k - 1]
            if e:
                key = exps[: k - 1] + (e - 1,) + exps[k:]
                out[key] = out.get(key, 0) + c * e
        return Poly(self.n, out)

    def is_symmetric(self) -> bool:
        """True iff invariant under every adjacent swap of variables."""
        for k in range(self.n - 1):
            swapped = {}
            for exps, c in self.terms.items():
                key = exps[:k] + (exps[k + 1], exps[k]) + exps[k + 2:]
                swapped[key] = c
            if swapped != self.terms:
                return False
        return True

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def __repr__(self):
        if not self.terms:
            return "Poly(0)"
        pieces = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                for i, e in enumerate(exps) if e
            )
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{c}*{mono}")
        return "Poly(" + " + ".join(pieces).replace("+ -", "- ") + ")"


def partial(f: Poly, k: int) -> Poly:
    return f.partial(k)


def is_symmetric(f: Poly) -> bool:
    return f.is_symmetric()


def rho1_apply(op: str, f: Poly) -> Poly:
    """First action: lower = -sum d/dx_k, cartan = 2 sum x_k d/dx_k,
    raise = sum x_k^2 d/dx_k."""
    n = f.n
    out = {}
    if op == "lower":
        for exps, c in f.terms.items():
            for k in range(n):
                e = exps[k]
                if e:
                    key = exps[:k] + (e - 1,) + exps[k + 1:]
                    out[key] = out.get(key, 0) - c * e
    elif op == "cartan":
        for exps, c in f.terms.items():
            out[exps] = 2 * sum(exps) * c
    elif op == "raise":
        for exps, c in f.terms.items():
            for k in range(n):
                e = exps[k]
                if e:
                    key = exps[:k] + (e + 1,) + exps[k + 1:]
                    out[key] = out.get(key, 0) + c * e
    else:
        raise ValueError(f"unknown operator {op!r}")
    return Poly(n, out)


def rho2_apply(op: str, f: Poly, d: int) -> Poly:
    """Second action: lower = sum d/dx_k, cartan = 2 sum x_k d/dx_k - n*d,
    raise = sum (-x_k^2 d/dx_k + d*x_k)."""
    n = f.n
    out = {}
    if op == "lower":
        for exps, c in f.terms.items():
            for k in range(n):
                e = exps[k]
                if e:
                    key = exps[:k] + (e - 1,) + exps[k + 1:]
                    out[key] = out.get(key, 0) + c * e
    elif op == "cartan":
        for exps, c in f.terms.items():
            out[exps] = (2 * sum(exps) - n * d) * c
    elif op == "raise":
        # on a monomial the k-th summand contributes (d - e_k) x_k * monomial
        for exps, c in f.terms.items():
            for k in range(n):
                w = d - exps[k]
                if w:
                    key = exps[:k] + (exps[k] + 1,) + exps[k + 1:]
                    out[key] = out.get(key, 0) + c * w
    else:
        raise ValueError(f"unknown operator {op!r}")
    return Poly(n, out)


def power_sum_poly(k: int, n: int) -> Poly:
    """p_k = x_1^k + ... + x_n^k."""
    if k < 1:
        raise ValueError("need k >= 1")
    terms = {}
    for i in range(n):
        exps = [0] * n
        exps[i] = k
        terms[tuple(exps)] = 1
    return Poly(n, terms)


def elementary_poly(i: int, n: int) -> Poly:
    """e_i, the sum of all squarefree monomials of degree i."""
    if i < 0 or i > n:
        raise ValueError(f"e_{i} undefined in {n} variables")
    terms = {}
    for subset in combinations(range(n), i):
        exps = [0] * n
        for j in subset:
            exps[j] = 1
        terms[tuple(exps)] = 1
    return Poly(n, terms)


def homogeneous_poly(i: int, n: int) -> Poly:
    """h_i, the sum of all monomials of degree i."""
    if i < 0:
        raise ValueError("need i >= 0")
    terms = {}
    for multiset in combinations_with_replacement(range(n), i):
        exps = [0] * n
        for j in multiset:
            exps[j] += 1
        terms[tuple(exps)] = 1
    return Poly(n, terms)


def sigma_slice(f: Poly) -> Poly:
    """Slice homomorphism sum_i (1/i!) L^i(f) (p_1/n)^i where L is the
    lowering operator; lands in ker L.  The sum is finite because lowering
    strictly decreases total degree."""
    if not f.is_symmetric():
        raise ValueError("slice homomorphism needs symmetric input")
    n = f.n
    s = power_sum_poly(1, n) * Fraction(1, n)
    total = Poly.zero(n)
    g = f
    spow = Poly.constant(n, 1)
    i = 0
    while g:
        total = total + g * spow * Fraction(1, factorial(i))
        g = rho1_apply("lower", g)
        spow = spow * s
        i += 1
    return total


def z_generator_poly(i: int, n: int) -> Poly:
    """Kernel generator
    z_i = sum_{k=0}^{i-2} (-1)^k n^(i-k-1) C(i,k) p_{i-k} p_1^k
          + (i-1)(-1)^(i+1) p_1^i.
    Vanishes for odd i when n = 2."""
    if i < 2:
        raise ValueError("kernel generators start at z_2")
    p1 = power_sum_poly(1, n)
    total = Poly.zero(n)
    for k in range(i - 1):
        coef = (-1) ** k * n ** (i - k - 1) * comb(i, k)
        total = total + power_sum_poly(i - k, n) * (p1 ** k) * coef
    return total + (p1 ** i) * ((i - 1) * (-1) ** (i + 1))
