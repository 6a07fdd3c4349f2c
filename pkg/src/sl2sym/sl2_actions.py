"""Both sl2-actions in the Schur basis, lowest-weight (kernel) computation,
decomposition into irreducibles, characters, and the realization of the
finite standard module by scaled elementary symmetric polynomials."""

from fractions import Fraction
from math import comb
from typing import NamedTuple

from .combinatorics import (
    add_cell,
    addable_corners,
    alpha_degree,
    alpha_tuples,
    content,
    count_lw_solutions,
    partitions,
    remove_cell,
    removable_corners,
)
from .symfunc import SchurVector, elementary_schur, multiply, power_sum_schur, z_monomial_schur


class LowestWeightVector(NamedTuple):
    vector: SchurVector
    weight: int


def act_rho1(op: str, v: SchurVector) -> SchurVector:
    """First action on Schur vectors:
    lower s = -sum over removable cells of (n + content) s',
    cartan s = 2|lam| s, raise s = sum over addable cells of content * s'."""
    n = v.n

    def image(lam):
        if op == "cartan":
            return {lam: 2 * sum(lam)}
        if op == "lower":
            return {
                remove_cell(lam, cell): -(n + content(cell))
                for cell in removable_corners(lam)
            }
        if op == "raise":
            out = {}
            for cell in addable_corners(lam, n):
                w = content(cell)
                if w:
                    out[add_cell(lam, cell)] = w
            return out
        raise ValueError(f"unknown operator {op!r}")

    return v.map_basis(image)


def act_rho2(op: str, v: SchurVector, d: int) -> SchurVector:
    """Second action on Schur vectors with column bound d:
    lower s = +sum (n + content) s', cartan s = (2|lam| - n*d) s,
    raise s = sum (d - content) s'.  The corner in column d+1 has content d,
    so the column bound is preserved automatically."""
    n = v.n
    for lam in v.terms:
        if lam and lam[0] > d:
            raise ValueError(f"partition {lam!r} violates the column bound {d}")

    def image(lam):
        if op == "cartan":
            return {lam: 2 * sum(lam) - n * d}
        if op == "lower":
            return {
                remove_cell(lam, cell): n + content(cell)
                for cell in removable_corners(lam)
            }
        if op == "raise":
            out = {}
            for cell in addable_corners(lam, n):
                w = d - content(cell)
                if w:
                    out[add_cell(lam, cell)] = w
            return out
        raise ValueError(f"unknown operator {op!r}")

    return v.map_basis(image)


def act_rho1_named(op: str, family: str, i: int, n: int) -> SchurVector:
    """Closed-form image of p_i, e_i or h_i under the first action, returned
    in the Schur basis.  The power-sum images follow the differential
    operators: lower p_i = -i p_{i-1} (and -n for i = 1), raise p_i = i p_{i+1}."""
    if i < 1:
        raise ValueError("need index >= 1")
    if family == "e":
        if i > n:
            raise ValueError(f"e_{i} undefined in {n} variables")
        if op == "cartan":
            return 2 * i * elementary_schur(i, n)
        if op == "lower":
            return -(n - (i - 1)) * elementary_schur(i - 1, n)
        if op == "raise":
            e1ei = multiply(elementary_schur(1, n), elementary_schur(i, n))
            if i == n:
                return e1ei
            return e1ei - (i + 1) * elementary_schur(i + 1, n)
    elif family == "h":
        if op == "cartan":
            return 2 * i * SchurVector.basis(n, (i,))
        if op == "lower":
            prev = SchurVector.basis(n, (i - 1,)) if i > 1 else SchurVector.unit(n)
            return -(n + i - 1) * prev
        if op == "raise":
            h1hi = multiply(SchurVector.basis(n, (1,)), SchurVector.basis(n, (i,)))
            return (i + 1) * SchurVector.basis(n, (i + 1,)) - h1hi
    elif family == "p":
        if op == "cartan":
            return 2 * i * power_sum_schur(i, n)
        if op == "lower":
            if i == 1:
                return -n * SchurVector.unit(n)
            return -i * power_sum_schur(i - 1, n)
        if op == "raise":
            return i * power_sum_schur(i + 1, n)
    else:
        raise ValueError(f"unknown family {family!r}")
    raise ValueError(f"unknown operator {op!r}")


def weight_of_alpha(alpha) -> int:
    """Cartan eigenvalue 2*(2 a_1 + 3 a_2 + ... + n a_{n-1}) of the kernel
    monomial with exponents alpha."""
    return 2 * alpha_degree(alpha)


def lowest_weight_basis_rho1(n: int, max_degree: int) -> list[LowestWeightVector]:
    """All kernel monomials z^alpha of degree at most `max_degree` as Schur
    vectors, ordered by (degree, exponent tuple), tagged with their weights."""
    if n < 2:
        raise ValueError("need n >= 2")
    return [
        LowestWeightVector(z_monomial_schur(alpha, n), weight_of_alpha(alpha))
        for alpha in alpha_tuples(n, max_degree)
    ]


def decompose_lambda_n(n: int, max_weight_half: int) -> dict[int, int]:
    """Multiplicities i -> c_i of the infinite-dimensional lowest-weight
    modules of weight 2i in the graded decomposition, for i <= max_weight_half
    (zero entries omitted)."""
    if n < 2:
        raise ValueError("need n >= 2")
    out = {}
    for i in range(max_weight_half + 1):
        c = count_lw_solutions(n, i)
        if c:
            out[i] = c
    return out


def character_finite(n: int, d: int) -> dict[int, int]:
    """Cartan eigenvalue multiplicities 2|lam| - n*d over all partitions in
    the n x d box."""
    char: dict[int, int] = {}
    for m in range(n * d + 1):
        for _ in partitions(m, n, d):
            w = 2 * m - n * d
            char[w] = char.get(w, 0) + 1
    return char


def decompose_finite(n: int, d: int) -> dict[int, int]:
    """Irreducible multiplicities by peeling the character top-down: the
    largest remaining exponent always belongs to a fresh irreducible, so
    subtract its full weight string and repeat until nothing is left."""
    remaining = dict(character_finite(n, d))
    decomp: dict[int, int] = {}
    while remaining:
        top = max(remaining)
        mult = remaining[top]
        if top < 0:
            raise ArithmeticError("character peeling left only negative weights")
        decomp[top] = mult
        for w in range(-top, top + 1, 2):
            c = remaining.get(w, 0) - mult
            if c < 0:
                raise ArithmeticError("character peeling went negative")
            if c:
                remaining[w] = c
            else:
                remaining.pop(w, None)
    return decomp


def rational_rref(rows: list[list[Fraction]]):
    """Reduced row echelon form over exact rationals with deterministic
    pivoting (first nonzero column, smallest row index).  Returns the
    reduced matrix and the pivot column list."""
    m = [[Fraction(x) for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if m[i][c]), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rational_nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Deterministic kernel basis: one vector per free column, with a 1 in
    the free position."""
    if not rows:
        rows = [[Fraction(0)] * ncols]
    m, pivots = rational_rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r_idx, pc in enumerate(pivots):
            v[pc] = -m[r_idx][fc]
        basis.append(v)
    return basis


def lowest_weight_space_rho2(n: int, d: int) -> list[LowestWeightVector]:
    """Basis of the lowering kernel inside the n x d box, computed per
    cartan-weight component by exact nullspace of the lowering matrix in the
    Schur basis.  The number of vectors of weight -i equals the multiplicity
    of the (i+1)-dimensional irreducible."""
    out = []
    for m in range(n * d + 1):
        domain = sorted(partitions(m, n, d), reverse=True)
        if not domain:
            continue
        codomain = sorted(partitions(m - 1, n, d), reverse=True) if m else []
        index = {lam: r for r, lam in enumerate(codomain)}
        rows = [[Fraction(0)] * len(domain) for _ in codomain]
        for c_idx, lam in enumerate(domain):
            img = act_rho2("lower", SchurVector.basis(n, lam), d)
            for mu, coef in img.terms.items():
                rows[index[mu]][c_idx] = coef
        for vec in rational_nullspace(rows, len(domain)):
            sv = SchurVector(
                n, {domain[j]: vec[j] for j in range(len(domain)) if vec[j]}
            )
            out.append(LowestWeightVector(sv, 2 * m - n * d))
    return out


def vd_realization(d: int) -> list[SchurVector]:
    """Basis w_0, ..., w_d of the (d+1)-dimensional standard module inside
    the single-column box in d variables: w_i = e_i / C(d, i).  Under the
    second action with column bound 1: lower w_i = i w_{i-1},
    raise w_i = (d-i) w_{i+1}, cartan w_i = (2i-d) w_i."""
    if d < 1:
        raise ValueError("need d >= 1")
    return [Fraction(1, comb(d, i)) * elementary_schur(i, d) for i in range(d + 1)]
