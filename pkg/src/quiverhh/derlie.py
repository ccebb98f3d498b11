"""Derivations, inner derivations and the Lie algebra structure on HH1.

Derivations are normalised to vanish on the vertex idempotents; such a
derivation is determined by its values on arrows, and the value on an
arrow a lies in the span of basis monomials parallel to a.  The unknowns
of the linear problem are those coefficients, one block per arrow in
declaration order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linal
from .algebra import AlgebraTable
from .errors import DeltaUndefined, UnsupportedCharacteristic
from .linal import Field
from .quiver import Quiver


@dataclass
class DerivationLayout:
    """Coordinate layout for derivations: one slot per (arrow, parallel basis monomial)."""

    table: AlgebraTable
    slots: list  # list of (arrow label, basis index)
    blocks: dict  # arrow label -> list of slot positions

    @property
    def size(self) -> int:
        return len(self.slots)

    def value(self, vec: list, arrow_label: str) -> list:
        """The element delta(arrow) of A as a coefficient vector."""
        out = self.table.zero()
        for pos in self.blocks[arrow_label]:
            _, bi = self.slots[pos]
            if vec[pos] != 0:
                out[bi] = vec[pos]
        return out

    def action_matrix(self, vec: list) -> list:
        """dim x dim matrix of the derivation extended to all of A by the product rule.

        Column j is the image of basis monomial j.  Idempotents map to
        zero; factors of normal monomials are normal, so prefixes and
        suffixes are basis monomials.
        """
        t = self.table
        cols = []
        for j, path in enumerate(t.basis_paths):
            img = t.zero()
            for k, label in enumerate(path):
                term = self.value(vec, label)
                if k > 0:
                    term = t.multiply(t.path_vector(path[:k]), term)
                if k + 1 < len(path):
                    term = t.multiply(term, t.path_vector(path[k + 1:]))
                img = linal.vec_add(t.field, img, term)
            cols.append(img)
        rows = [[cols[j][i] for j in range(t.dim)] for i in range(t.dim)]
        return rows

    def apply(self, vec: list, element: list) -> list:
        """Value of the derivation on an arbitrary element of A."""
        t = self.table
        out = t.zero()
        for j, c in enumerate(element):
            if c == 0:
                continue
            path = t.basis_paths[j]
            for k, label in enumerate(path):
                term = self.value(vec, label)
                if k > 0:
                    term = t.multiply(t.path_vector(path[:k]), term)
                if k + 1 < len(path):
                    term = t.multiply(term, t.path_vector(path[k + 1:]))
                out = linal.vec_add(t.field, out, linal.vec_scale(t.field, c, term))
        return out


def derivation_layout(table: AlgebraTable) -> DerivationLayout:
    slots = []
    blocks: dict = {}
    for arrow in table.quiver.arrows:
        block = []
        for i in range(table.dim):
            if (table.basis_source[i] == arrow.source
                    and table.basis_target[i] == arrow.target):
                block.append(len(slots))
                slots.append((arrow.label, i))
        blocks[arrow.label] = block
    return DerivationLayout(table, slots, blocks)


def _constraint_rows(layout: DerivationLayout) -> list:
    """Linear conditions on the slot vector forcing delta(g) = 0 for all
    reduced rewriting generators g."""
    t = layout.table
    field = t.field
    n = layout.size
    rows = []
    for g in t.groebner:
        # columns of the constraint: contribution of each unknown slot
        contribs = []
        for pos in range(n):
            label, bi = layout.slots[pos]
            total = t.zero()
            bvec = linal.unit_vector(field, t.dim, bi)
            for w, c in g.items():
                for k, wl in enumerate(w):
                    if wl != label:
                        continue
                    term = bvec
                    if k > 0:
                        term = t.multiply(t.path_vector(w[:k]), term)
                    if k + 1 < len(w):
                        term = t.multiply(term, t.path_vector(w[k + 1:]))
                    total = linal.vec_add(field, total, linal.vec_scale(field, c, term))
            contribs.append(total)
        for coord in range(t.dim):
            row = [contribs[pos][coord] for pos in range(n)]
            if any(x != 0 for x in row):
                rows.append(row)
    return rows


def derivation_space(table: AlgebraTable, layout: DerivationLayout | None = None):
    """Basis (slot vectors) of the idempotent-killing derivations of A."""
    if layout is None:
        layout = derivation_layout(table)
    rows = _constraint_rows(layout)
    basis = linal.kernel_basis(table.field, rows, ncols=layout.size)
    return layout, basis


def inner_space(table: AlgebraTable, layout: DerivationLayout) -> list:
    """Span of the inner derivations [u, -] for u a diagonal basis monomial.

    Every inner derivation class contains such a combination: subtracting
    the off-diagonal part of u changes [u, -] by a derivation that is zero
    on every arrow once values are matched by endpoints, and the trivial
    paths give zero.
    """
    t = table
    field = t.field
    vecs = []
    for i in range(t.dim):
        if t.basis_source[i] != t.basis_target[i]:
            continue
        u = linal.unit_vector(field, t.dim, i)
        slot_vec = linal.zero_vector(field, layout.size)
        for pos, (label, bi) in enumerate(layout.slots):
            a = linal.unit_vector(field, t.dim, t.arrow_index(label))
            comm = linal.vec_sub(field, t.multiply(u, a), t.multiply(a, u))
            slot_vec[pos] = comm[bi]
        vecs.append(slot_vec)
    return linal.span_basis(field, vecs)


def radical_preserving(table: AlgebraTable, layout: DerivationLayout,
                       der_basis: list) -> list:
    """Subspace of derivations mapping the radical into itself.

    The only way a derivation value can leave the radical is through the
    trivial-path coefficient of a loop, so the cut is one linear condition
    per loop arrow.
    """
    t = table
    field = t.field
    conditions = []
    for arrow in t.quiver.arrows:
        if arrow.source != arrow.target:
            continue
        ev = t.idempotent_index(arrow.source)
        for pos in layout.blocks[arrow.label]:
            if layout.slots[pos][1] == ev:
                conditions.append(pos)
    if not conditions or not der_basis:
        return list(der_basis)
    rows = [[b[pos] for b in der_basis] for pos in conditions]
    combo = linal.kernel_basis(field, rows, ncols=len(der_basis))
    out = []
    for coeffs in combo:
        v = linal.zero_vector(field, layout.size)
        for c, b in zip(coeffs, der_basis):
            if c != 0:
                v = linal.vec_add(field, v, linal.vec_scale(field, c, b))
        out.append(v)
    return linal.span_basis(field, out)


@dataclass
class LoopReport:
    orders: dict          # loop label -> minimal n with a^n in rad^(n+1)
    holds: bool           # characteristic does not divide any of the orders


def loop_criterion(table: AlgebraTable) -> LoopReport:
    """Radical-depth orders of loops and the divisibility test on them.

    When the test holds every derivation preserves the radical, so the
    radical cut is a no-op; a failing loop in characteristic p pinpoints
    why HH1 and its radical-preserving part can differ.
    """
    t = table
    p = t.field.characteristic
    orders = {}
    for arrow in t.quiver.arrows:
        if arrow.source != arrow.target:
            continue
        a = linal.unit_vector(t.field, t.dim, t.arrow_index(arrow.label))
        power = a
        n = 1
        while True:
            basis = t.radical_power_basis(n + 1)
            if linal.contains(t.field, basis, power):
                orders[arrow.label] = n
                break
            power = t.multiply(power, a)
            n += 1
    holds = p == 0 or all(n % p != 0 for n in orders.values())
    return LoopReport(orders, holds)


@dataclass
class LieAlgebra:
    """Finite-dimensional Lie algebra with an explicit bracket table.

    bracket[i][j] is the coordinate vector of [x_i, x_j] in the chosen
    basis.  For cohomology quotients the basis vectors are derivation
    slot vectors kept in `reps` together with their layout.
    """

    field: Field
    dim: int
    bracket: list
    labels: list
    layout: DerivationLayout | None = None
    reps: list | None = None

    def bracket_of(self, u: list, v: list) -> list:
        field = self.field
        out = linal.zero_vector(field, self.dim)
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0:
                    continue
                c = field.mul(a, b)
                for k, m in enumerate(self.bracket[i][j]):
                    if m != 0:
                        out[k] = field.add(out[k], field.mul(c, m))
        return out

    def product_span(self, span_a: list, span_b: list) -> list:
        prods = [self.bracket_of(u, v) for u in span_a for v in span_b]
        return linal.span_basis(self.field, prods)

    def derived_series(self, start: list | None = None) -> list:
        """Dimensions of the iterated bracket-of-itself chain."""
        field = self.field
        cur = start if start is not None else [
            linal.unit_vector(field, self.dim, i) for i in range(self.dim)]
        cur = linal.span_basis(field, cur)
        dims = [len(cur)]
        while cur:
            nxt = self.product_span(cur, cur)
            if len(nxt) == len(cur):
                dims.append(len(nxt))
                break
            cur = nxt
            dims.append(len(cur))
            if not cur:
                break
        return dims

    def lower_central_series(self) -> list:
        field = self.field
        full = [linal.unit_vector(field, self.dim, i) for i in range(self.dim)]
        cur = full
        dims = [len(cur)]
        while cur:
            nxt = self.product_span(full, cur)
            if len(nxt) == len(cur):
                dims.append(len(nxt))
                break
            cur = nxt
            dims.append(len(cur))
        return dims

    def is_solvable(self, start: list | None = None) -> bool:
        return self.derived_series(start)[-1] == 0

    def is_nilpotent(self) -> bool:
        return self.lower_central_series()[-1] == 0


def lie_from_quotient(table: AlgebraTable, layout: DerivationLayout,
                      der_basis: list, inn_basis: list, labels=None) -> LieAlgebra:
    """Lie algebra on Der/Inn with bracket computed on representatives."""
    field = table.field
    ops = linal.subspace_ops(field, der_basis, inn_basis)
    reps = ops.quotient_reps
    d = len(reps)
    # express elements of Der in (reps | inn) coordinates and keep the reps part
    columns = [list(v) for v in reps] + [list(v) for v in inn_basis]
    matrix = [[columns[c][r] for c in range(len(columns))] for r in range(layout.size)]

    def quotient_coords(slot_vec: list) -> list:
        sol = linal.solve(field, matrix, slot_vec)
        if sol is None:
            raise AssertionError("bracket left the derivation space")
        return sol[:d]

    actions = [layout.action_matrix(v) for v in reps]
    bracket = []
    for i in range(d):
        row = []
        for j in range(d):
            comm = linal.zero_vector(field, layout.size)
            for pos, (label, bi) in enumerate(layout.slots):
                val_j = layout.value(reps[j], label)
                val_i = layout.value(reps[i], label)
                val = field.sub(linal.mat_vec(field, actions[i], val_j)[bi],
                                linal.mat_vec(field, actions[j], val_i)[bi])
                comm[pos] = val
            row.append(quotient_coords(comm))
        bracket.append(row)
    if labels is None:
        labels = [f"d{i}" for i in range(d)]
    return LieAlgebra(field, d, bracket, labels, layout, reps)


@dataclass
class HH1Result:
    lie: LieAlgebra
    der_dim: int
    inn_dim: int
    layout: DerivationLayout


def hh1(table: AlgebraTable, rad_only: bool = False) -> HH1Result:
    """HH1(A), or its radical-preserving part, as an explicit Lie algebra."""
    layout, der = derivation_space(table)
    if rad_only:
        der = radical_preserving(table, layout, der)
    inn = inner_space(table, layout)
    lie = lie_from_quotient(table, layout, der, inn)
    return HH1Result(lie, len(der), len(inn), layout)


# -- the rank-one cut down to sl2 -----------------------------------------


@dataclass(frozen=True)
class Sl2Element:
    """x*H + y*E + z*F in the basis with [H,E]=2E, [H,F]=-2F, [E,F]=H."""

    x: object
    y: object
    z: object

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0 and self.z == 0


def delta_defined(quiver: Quiver, a_label: str, b_label: str) -> bool:
    """The arrows form a parallel pair isolated at both endpoints."""
    a = quiver.arrow(a_label)
    b = quiver.arrow(b_label)
    if a_label == b_label:
        return False
    if a.source != b.source or a.target != b.target:
        return False
    outgoing = {x.label for x in quiver.arrows_from(a.source)}
    incoming = {x.label for x in quiver.arrows_to(a.target)}
    return outgoing == {a_label, b_label} and incoming == {a_label, b_label}


@dataclass
class DeltaMap:
    """Projection of a derivation Lie algebra onto sl2 along a parallel pair."""

    field: Field
    pair: tuple
    images: list           # Sl2Element per basis vector of the source
    surjective: bool
    kernel: list           # coordinate vectors spanning the kernel

    def image_of(self, coords: list) -> Sl2Element:
        field = self.field
        x = field.zero
        y = field.zero
        z = field.zero
        for c, im in zip(coords, self.images):
            if c != 0:
                x = field.add(x, field.mul(c, im.x))
                y = field.add(y, field.mul(c, im.y))
                z = field.add(z, field.mul(c, im.z))
        return Sl2Element(x, y, z)


def delta_map(lie: LieAlgebra, a_label: str, b_label: str,
              check_defined: bool = True) -> DeltaMap:
    """Read off the sl2 component of each class along the pair (a, b).

    For a representative derivation d with
    d(a) = caa*a + cab*b + ..., d(b) = cba*a + cbb*b + ...,
    the image is x*H + y*E + z*F with x = (caa - cbb)/2, y = cba, z = cab.
    """
    layout = lie.layout
    table = layout.table
    field = table.field
    if field.characteristic == 2:
        raise UnsupportedCharacteristic(
            "the sl2 projection needs 2 to be invertible")
    if check_defined and not delta_defined(table.quiver, a_label, b_label):
        raise DeltaUndefined(
            f"the pair ({a_label}, {b_label}) is not isolated at its endpoints")
    ia = table.arrow_index(a_label)
    ib = table.arrow_index(b_label)
    half = field.inv(field.of(2))
    images = []
    for rep in lie.reps:
        va = layout.value(rep, a_label)
        vb = layout.value(rep, b_label)
        x = field.mul(half, field.sub(va[ia], vb[ib]))
        y = vb[ia]
        z = va[ib]
        images.append(Sl2Element(x, y, z))
    rows = [[im.x for im in images], [im.y for im in images], [im.z for im in images]]
    surjective = linal.rank(field, rows) == 3
    kernel = linal.kernel_basis(field, rows, ncols=lie.dim)
    return DeltaMap(field, (a_label, b_label), images, surjective, kernel)
