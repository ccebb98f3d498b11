"""Exact scalar arithmetic and the dense linear-algebra kernel.

Scalars are ``fractions.Fraction`` over the rationals and plain residues
``int`` in ``[0, p)`` over a prime field.  Everything downstream (quotient
algebras, derivation solves, structure constants) runs through the row
reduction in this module, so all arithmetic here is exact by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import QuotientUndefined


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Field:
    """Descriptor of the ground field: the rationals or a prime field F_p.

    characteristic 0 means the rationals; otherwise it must be a prime.
    Characteristic 2 is constructible, but the Delta-map layer refuses it.
    """

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise ValueError(f"characteristic must be 0 or prime, got {self.characteristic}")

    @property
    def kind(self) -> str:
        return "rationals" if self.characteristic == 0 else "prime_field"

    @classmethod
    def parse(cls, text: str) -> "Field":
        text = text.strip()
        if text in ("Q", "QQ", "rationals", "0"):
            return cls(0)
        if text.startswith("fp:"):
            return cls(int(text[3:]))
        raise ValueError(f"unknown field descriptor {text!r} (expected 'Q' or 'fp:p')")

    def describe(self) -> str:
        return "Q" if self.characteristic == 0 else f"fp:{self.characteristic}"

    # -- scalar arithmetic ------------------------------------------------

    @property
    def zero(self):
        return Fraction(0) if self.characteristic == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.characteristic == 0 else 1 % self.characteristic

    def of(self, value) -> "Scalar":
        """Coerce an int or Fraction into a field scalar."""
        if self.characteristic == 0:
            return Fraction(value)
        p = self.characteristic
        if isinstance(value, Fraction):
            den = value.denominator % p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {value} vanishes mod {p}")
            return value.numerator * pow(den, p - 2, p) % p
        return value % p

    def add(self, a, b):
        return a + b if self.characteristic == 0 else (a + b) % self.characteristic

    def sub(self, a, b):
        return a - b if self.characteristic == 0 else (a - b) % self.characteristic

    def mul(self, a, b):
        return a * b if self.characteristic == 0 else (a * b) % self.characteristic

    def neg(self, a):
        return -a if self.characteristic == 0 else (-a) % self.characteristic

    def inv(self, a):
        if self.characteristic == 0:
            return Fraction(1) / a
        if a % self.characteristic == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.characteristic - 2, self.characteristic)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def render(self, a) -> str:
        """Exact string form, e.g. '3/2' over Q or '2' over F_p."""
        return str(a)


Scalar = object  # Fraction or int residue; see Field


# -- vectors and matrices (lists of scalars) ------------------------------


def zero_vector(field: Field, n: int) -> list:
    return [field.zero] * n


def unit_vector(field: Field, n: int, i: int) -> list:
    v = zero_vector(field, n)
    v[i] = field.one
    return v


def vec_add(field: Field, u: list, v: list) -> list:
    return [field.add(a, b) for a, b in zip(u, v)]

def vec_sub(field: Field, u: list, v: list) -> list:
    return [field.sub(a, b) for a, b in zip(u, v)]


def vec_scale(field: Field, c, u: list) -> list:
    return [field.mul(c, a) for a in u]


def is_zero_vector(v: list) -> bool:
    return all(a == 0 for a in v)


def mat_vec(field: Field, m: list[list], v: list) -> list:
    return [
        _dot(field, row, v)
        for row in m
    ]


def _dot(field: Field, u: list, v: list):
    acc = field.zero
    for a, b in zip(u, v):
        if a != 0 and b != 0:
            acc = field.add(acc, field.mul(a, b))
    return acc


def rref(field: Field, rows: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    out: list[list] = []
    ncols = len(rows[0]) if rows else 0
    r = 0
    work = rows
    for col in range(ncols):
        piv = None
        for i in range(r, len(work)):
            if work[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = field.inv(work[r][col])
        work[r] = [field.mul(inv, a) for a in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col] != 0:
                c = work[i][col]
                work[i] = [field.sub(a, field.mul(c, b)) for a, b in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    out = work[:r]
    return out, pivots


def rank(field: Field, rows: list[list]) -> int:
    if not rows:
        return 0
    return len(rref(field, rows)[0])


def kernel_basis(field: Field, m: list[list], ncols: int | None = None) -> list[list]:
    """Basis of the right null space {v : m v = 0}.

    ``ncols`` is required when ``m`` has no rows (kernel of the zero map).
    """
    if not m:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return [unit_vector(field, ncols, i) for i in range(ncols)]
    ncols = len(m[0])
    ech, pivots = rref(field, m)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for fc in free:
        v = zero_vector(field, ncols)
        v[fc] = field.one
        for rrow, pc in zip(ech, pivots):
            v[pc] = field.neg(rrow[fc])
        basis.append(v)
    return basis


def solve(field: Field, m: list[list], b: list) -> list | None:
    """One solution x of m x = b, or None if inconsistent."""
    if not m:
        return [] if is_zero_vector(b) else None
    ncols = len(m[0])
    aug = [list(row) + [val] for row, val in zip(m, b)]
    ech, pivots = rref(field, aug)
    x = zero_vector(field, ncols)
    for row, pc in zip(ech, pivots):
        if pc == ncols:
            return None
        x[pc] = row[-1]
    return x


@dataclass
class SubspaceOps:
    dim_a: int
    dim_b: int
    dim_sum: int
    dim_intersection: int
    quotient_reps: list[list] | None


def span_basis(field: Field, vectors: list[list]) -> list[list]:
    """Echelonized basis of the span."""
    if not vectors:
        return []
    return rref(field, vectors)[0]


def reduce_against(field: Field, v: list, ech: list[list], pivots: list[int]) -> list:
    v = list(v)
    for row, pc in zip(ech, pivots):
        if v[pc] != 0:
            c = v[pc]
            v = [field.sub(a, field.mul(c, b)) for a, b in zip(v, row)]
    return v


def contains(field: Field, span: list[list], v: list) -> bool:
    ech, piv = rref(field, span) if span else ([], [])
    return is_zero_vector(reduce_against(field, v, ech, piv))


def subspace_ops(field: Field, span_a: list[list], span_b: list[list],
                 quotient: bool = True) -> SubspaceOps:
    """Dimensions of sum/intersection of two spans, plus a/b coset reps.

    quotient_reps is a row-reduced section of span_a modulo span_b and is
    only defined when span_b is contained in span_a.
    """
    dim_a = rank(field, span_a)
    dim_b = rank(field, span_b)
    dim_sum = rank(field, list(span_a) + list(span_b))
    dim_int = dim_a + dim_b - dim_sum
    reps = None
    if quotient:
        if dim_sum != dim_a:
            raise QuotientUndefined("span_b is not contained in span_a")
        ech, piv = rref(field, span_b) if span_b else ([], [])
        reps = []
        for v in span_a:
            red = reduce_against(field, v, ech, piv)
            for r in reps:
                red = _reduce_vec(field, red, r)
            if not is_zero_vector(red):
                lead = next(i for i, a in enumerate(red) if a != 0)
                red = vec_scale(field, field.inv(red[lead]), red)
                reps.append(red)
        # back-substitute for a fully reduced section
        reps, _ = rref(field, reps) if reps else ([], [])
    return SubspaceOps(dim_a, dim_b, dim_sum, dim_int, reps)


def _reduce_vec(field: Field, v: list, pivot_row: list) -> list:
    lead = next((i for i, a in enumerate(pivot_row) if a != 0), None)
    if lead is None or v[lead] == 0:
        return v
    c = field.div(v[lead], pivot_row[lead])
    return [field.sub(a, field.mul(c, b)) for a, b in zip(v, pivot_row)]


def coordinates(field: Field, basis: list[list], v: list) -> list | None:
    """Coordinates of v in the given (independent) basis, or None."""
    if not basis:
        return [] if is_zero_vector(v) else None
    cols = list(map(list, zip(*basis)))  # matrix with basis as columns
    return solve(field, cols, v)


def sparse_rank(field: Field, rows) -> int:
    """Rank of a stream of sparse rows (dicts col -> scalar)."""
    ech: dict[int, dict] = {}  # pivot col -> row with unit pivot
    for row in rows:
        row = {c: a for c, a in row.items() if a != 0}
        while row:
            lead = min(row)
            piv = ech.get(lead)
            if piv is None:
                inv = field.inv(row[lead])
                ech[lead] = {c: field.mul(inv, a) for c, a in row.items()}
                break
            c = row[lead]
            for col, a in piv.items():
                val = field.sub(row.get(col, field.zero), field.mul(c, a))
                if val == 0:
                    row.pop(col, None)
                else:
                    row[col] = val
    return len(ech)
