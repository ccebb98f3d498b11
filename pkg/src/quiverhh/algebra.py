"""Finite-dimensional bound quiver algebras as explicit multiplication tables.

A presentation (quiver, relations, field) is completed into a rewriting
system under the length-then-lex order on paths (arrows ordered by
declaration, longer paths larger).  Overlap ambiguities are resolved until
confluence; the finiteness certificate is the exhaustion of normal
monomials at some length.  The basis of the quotient is the set of normal
monomials, multiplication is concatenation followed by full reduction, and
radical powers are computed by exact row reduction (relations need not be
homogeneous in path length).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dfield
from fractions import Fraction

from . import linal
from .errors import InvalidArrow, NotAdmissible, NotFiniteDimensional
from .linal import Field
from .quiver import Quiver

Path = tuple  # tuple of arrow labels; the empty tuple never appears in relations
Poly = dict   # Path -> scalar


@dataclass(frozen=True)
class Relation:
    """k-linear combination of parallel paths of length >= 2."""

    terms: tuple  # of (coefficient, Path); coefficient is int/Fraction pre-coercion


@dataclass(frozen=True)
class Presentation:
    quiver: Quiver
    relations: tuple
    field: Field
    max_length_cap: int = 64


class _Order:
    """Length-then-lex monomial order keyed on arrow declaration index."""

    def __init__(self, quiver: Quiver):
        self.index = {a.label: i for i, a in enumerate(quiver.arrows)}

    def key(self, path: Path):
        return (len(path), tuple(self.index[l] for l in path))


def _validate_relation(q: Quiver, rel: Relation) -> None:
    if not rel.terms:
        raise NotAdmissible("empty relation")
    endpoints = None
    for coef, path in rel.terms:
        if len(path) < 2:
            raise NotAdmissible(f"relation monomial {'*'.join(path) or '(trivial)'} has length < 2")
        for label in path:
            if label not in {a.label for a in q.arrows}:
                raise InvalidArrow(f"unknown arrow {label!r}")
        for x, y in zip(path, path[1:]):
            if q.arrow(x).target != q.arrow(y).source:
                raise NotAdmissible(f"path {'*'.join(path)} is not composable")
        ep = (q.arrow(path[0]).source, q.arrow(path[-1]).target)
        if endpoints is None:
            endpoints = ep
        elif ep != endpoints:
            raise NotAdmissible("relation terms are not parallel")


# -- polynomial helpers ----------------------------------------------------


def _poly_add_term(field: Field, poly: Poly, path: Path, coef) -> None:
    cur = poly.get(path, field.zero)
    val = field.add(cur, coef)
    if val == 0:
        poly.pop(path, None)
    else:
        poly[path] = val


def _poly_sub(field: Field, a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for p, c in b.items():
        _poly_add_term(field, out, p, field.neg(c))
    return out


def _leading(order: _Order, poly: Poly) -> Path:
    return max(poly, key=order.key)


class _Rewriter:
    """Two-sided rewriting system: lead path -> tail polynomial."""

    def __init__(self, field: Field, order: _Order):
        self.field = field
        self.order = order
        self.rules: dict[Path, Poly] = {}

    def reduce(self, poly: Poly) -> Poly:
        field = self.field
        work = dict(poly)
        out: Poly = {}
        while work:
            path = max(work, key=self.order.key)
            coef = work.pop(path)
            hit = self._find_factor(path)
            if hit is None:
                _poly_add_term(field, out, path, coef)
                continue
            pos, lead = hit
            tail = self.rules[lead]
            pre, post = path[:pos], path[pos + len(lead):]
            for tpath, tcoef in tail.items():
                _poly_add_term(field, work, pre + tpath + post, field.mul(coef, tcoef))
        return out

    def _find_factor(self, path: Path):
        for lead in self.rules:
            ll = len(lead)
            if ll > len(path):
                continue
            for pos in range(len(path) - ll + 1):
                if path[pos:pos + ll] == lead:
                    return pos, lead
        return None

    def add(self, poly: Poly) -> Path | None:
        """Reduce and, if nonzero, install as a monic rule; returns its lead."""
        red = self.reduce(poly)
        if not red:
            return None
        lead = _leading(self.order, red)
        inv = self.field.inv(red[lead])
        tail = {p: self.field.neg(self.field.mul(inv, c))
                for p, c in red.items() if p != lead}
        self.rules[lead] = tail
        return lead

    def interreduce(self) -> bool:
        any_change = False
        changed = True
        while changed:
            changed = False
            for lead in list(self.rules):
                tail = self.rules.pop(lead)
                poly = {lead: self.field.one}
                for p, c in tail.items():
                    _poly_add_term(self.field, poly, p, self.field.neg(c))
                red = self.reduce(poly)
                if not red:
                    changed = True
                    continue
                new_lead = _leading(self.order, red)
                inv = self.field.inv(red[new_lead])
                new_tail = {}
                for p, c in red.items():
                    if p != new_lead:
                        new_tail[p] = self.field.neg(self.field.mul(inv, c))
                if new_lead != lead or new_tail != tail:
                    changed = True
                self.rules[new_lead] = new_tail
            any_change = any_change or changed
        return any_change


def _overlaps(u: Path, v: Path):
    """Proper overlap ambiguities: a suffix of u equals a prefix of v."""
    for t in range(1, min(len(u), len(v))):
        if u[len(u) - t:] == v[:t]:
            yield t


def _complete(field: Field, order: _Order, gens: list[Poly], cap: int) -> _Rewriter:
    rw = _Rewriter(field, order)
    for g in gens:
        rw.add(g)
    rw.interreduce()
    done: set = set()
    pending: set = set()

    def enqueue_all():
        leads = list(rw.rules)
        for u in leads:
            for v in leads:
                for t in _overlaps(u, v):
                    trip = (u, v, t)
                    if trip not in done:
                        pending.add(trip)

    enqueue_all()
    while pending:
        trip = min(pending, key=lambda p: (len(p[0]) + len(p[1]) - p[2], p))
        pending.discard(trip)
        done.add(trip)
        u, v, t = trip
        if u not in rw.rules or v not in rw.rules:
            continue
        if len(u) + len(v) - t > 2 * cap:
            raise NotFiniteDimensional("overlap degree exceeds the length cap")
        # ambiguity word w = u * v[t:] = u[:-t] * v; resolve the two rewrites
        tail_u, tail_v = rw.rules[u], rw.rules[v]
        left = {p + v[t:]: c for p, c in tail_u.items()}
        right = {u[:len(u) - t] + p: c for p, c in tail_v.items()}
        spoly = _poly_sub(field, left, right)
        lead = rw.add(spoly)
        if lead is not None:
            if rw.interreduce():
                done.clear()
            enqueue_all()
    return rw


# -- the algebra table -----------------------------------------------------


@dataclass
class AlgebraTable:
    """Certified basis and multiplication table of A = kQ/I.

    basis paths: trivial paths first (empty tuple, one per vertex, in
    vertex order), then arrows, then longer normal monomials in
    length-then-lex order.  mult[i][j] is the coefficient vector of
    basis_i * basis_j.
    """

    field: Field
    quiver: Quiver
    basis_paths: list[Path]
    basis_source: list[str]
    basis_target: list[str]
    mult: list[list[list]]
    rad_dims: list[int]
    groebner: list[Poly]
    rewriter: _Rewriter

    @property
    def dim(self) -> int:
        return len(self.basis_paths)

    def idempotent_index(self, v: str) -> int:
        return self.quiver.vertices.index(v)

    def arrow_index(self, label: str) -> int:
        path = (label,)
        return self.basis_paths.index(path)

    def basis_index(self, path: Path) -> int:
        return self.basis_paths.index(path)

    def zero(self) -> list:
        return linal.zero_vector(self.field, self.dim)

    def unit(self) -> list:
        v = self.zero()
        for i in range(len(self.quiver.vertices)):
            v[i] = self.field.one
        return v

    def multiply(self, u: list, v: list) -> list:
        field = self.field
        out = self.zero()
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0:
                    continue
                c = field.mul(a, b)
                for k, m in enumerate(self.mult[i][j]):
                    if m != 0:
                        out[k] = field.add(out[k], field.mul(c, m))
        return out

    def normal_form(self, terms) -> list:
        """Image in A of a linear combination of (coef, path) terms.

        Terms with mismatched endpoints are reduced independently; unknown
        arrow labels raise InvalidArrow; non-composable terms vanish.
        """
        field = self.field
        labels = {a.label for a in self.quiver.arrows}
        vec = self.zero()
        for coef, path in terms:
            coef = field.of(coef)
            path = tuple(path)
            for l in path:
                if l not in labels:
                    raise InvalidArrow(f"unknown arrow {l!r}")
            if any(self.quiver.arrow(x).target != self.quiver.arrow(y).source
                   for x, y in zip(path, path[1:])):
                continue
            red = self.rewriter.reduce({path: coef})
            for p, c in red.items():
                k = self.basis_paths.index(p)
                vec[k] = field.add(vec[k], c)
        return vec

    def path_vector(self, path) -> list:
        return self.normal_form([(1, tuple(path))])

    def radical_power_basis(self, n: int) -> list[list]:
        """Echelonized basis of rad(A)^n; rad^0 = A."""
        field = self.field
        if n == 0:
            return [linal.unit_vector(field, self.dim, i) for i in range(self.dim)]
        rad1 = [linal.unit_vector(field, self.dim, i)
                for i, p in enumerate(self.basis_paths) if len(p) >= 1]
        cur = rad1
        for _ in range(n - 1):
            if not cur:
                return []
            prods = [self.multiply(u, v) for u in cur for v in rad1]
            cur = linal.span_basis(field, prods)
        return linal.span_basis(field, cur)

    def element_length_floor(self, vec: list) -> int:
        """Largest n with vec in rad^n (dim+1 if vec == 0)."""
        n = 0
        while n <= len(self.rad_dims):
            basis = self.radical_power_basis(n + 1)
            if not linal.contains(self.field, basis + [], vec):
                return n
            n += 1
        return n

    def check_associative(self) -> bool:
        d = self.dim
        for i in range(d):
            ei = linal.unit_vector(self.field, d, i)
            for j in range(d):
                ej = linal.unit_vector(self.field, d, j)
                uv = self.mult[i][j]
                for k in range(d):
                    ek = linal.unit_vector(self.field, d, k)
                    left = self.multiply(uv, ek)
                    right = self.multiply(ei, self.multiply(ej, ek))
                    if left != right:
                        return False
        return True


def build_algebra(p: Presentation) -> AlgebraTable:
    q = p.quiver
    field = p.field
    order = _Order(q)
    gens: list[Poly] = []
    for rel in p.relations:
        _validate_relation(q, rel)
        poly: Poly = {}
        for coef, path in rel.terms:
            _poly_add_term(field, poly, tuple(path), field.of(coef))
        if poly:
            gens.append(poly)
    rw = _complete(field, order, gens, p.max_length_cap)

    basis_paths = _normal_monomials(q, rw, p.max_length_cap)
    basis_source, basis_target = [], []
    for i, path in enumerate(basis_paths):
        if not path:
            v = q.vertices[i]
            basis_source.append(v)
            basis_target.append(v)
        else:
            basis_source.append(q.arrow(path[0]).source)
            basis_target.append(q.arrow(path[-1]).target)

    index = {path: i for i, path in enumerate(basis_paths)}
    # trivial paths share the empty tuple; disambiguate by position
    dim = len(basis_paths)
    nverts = len(q.vertices)

    def product_vector(i: int, j: int) -> list:
        vec = linal.zero_vector(field, dim)
        if basis_target[i] != basis_source[j]:
            return vec
        if i < nverts:
            vec[j] = field.one
            return vec
        if j < nverts:
            vec[i] = field.one
            return vec
        red = rw.reduce({basis_paths[i] + basis_paths[j]: field.one})
        for path, c in red.items():
            vec[index[path]] = c
        return vec

    mult = [[product_vector(i, j) for j in range(dim)] for i in range(dim)]
    table = AlgebraTable(field, q, basis_paths, basis_source, basis_target,
                         mult, [], [ _rule_poly(field, lead, tail) for lead, tail in rw.rules.items()],
                         rw)
    table.rad_dims = _radical_dims(table)
    return table


def _rule_poly(field: Field, lead: Path, tail: Poly) -> Poly:
    poly = {lead: field.one}
    for p, c in tail.items():
        _poly_add_term(field, poly, p, field.neg(c))
    return poly


def _normal_monomials(q: Quiver, rw: _Rewriter, cap: int) -> list[Path]:
    leads = set(rw.rules)
    out: list[Path] = [() for _ in q.vertices]
    level: list[Path] = []
    for a in q.arrows:
        level.append((a.label,))
    arrows_from = {v: [a.label for a in q.arrows_from(v)] for v in q.vertices}
    target = {a.label: a.target for a in q.arrows}
    length = 1
    while level:
        out.extend(level)
        if length >= cap:
            raise NotFiniteDimensional(
                f"normal monomials persist past the length cap {cap}")
        nxt: list[Path] = []
        for path in level:
            for label in arrows_from[target[path[-1]]]:
                cand = path + (label,)
                if not any(cand[len(cand) - len(l):] == l for l in leads if len(l) <= len(cand)):
                    nxt.append(cand)
        level = nxt
        length += 1
    return out


def _radical_dims(table: AlgebraTable) -> list[int]:
    dims = [table.dim]
    n = 1
    while True:
        basis = table.radical_power_basis(n)
        d = len(basis)
        if dims and d >= dims[-1] and d > 0:
            raise NotAdmissible(
                "radical filtration does not terminate; the ideal is not admissible")
        dims.append(d)
        if d == 0:
            return dims
        n += 1


# -- derived tables --------------------------------------------------------


@dataclass
class MulTable:
    """Bare associative multiplication table on an abstract basis.

    Used for idempotent subalgebras eAe and bouquet quotients A/J, whose
    basis elements need not be arrows of any declared quiver.
    """

    field: Field
    mult: list[list[list]]
    unit: list
    labels: list[str]
    idempotents: list[list] | None = None  # complete orthogonal set, if known

    @property
    def dim(self) -> int:
        return len(self.mult)

    def multiply(self, u: list, v: list) -> list:
        field = self.field
        out = linal.zero_vector(field, self.dim)
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0:
                    continue
                c = field.mul(a, b)
                for k, m in enumerate(self.mult[i][j]):
                    if m != 0:
                        out[k] = field.add(out[k], field.mul(c, m))
        return out

    def check_associative(self) -> bool:
        d = self.dim
        for i in range(d):
            for j in range(d):
                uv = self.mult[i][j]
                for k in range(d):
                    ek = linal.unit_vector(self.field, d, k)
                    ej = linal.unit_vector(self.field, d, j)
                    ei = linal.unit_vector(self.field, d, i)
                    if self.multiply(uv, ek) != self.multiply(ei, self.multiply(ej, ek)):
                        return False
        return True


def as_table(a: AlgebraTable) -> MulTable:
    idems = [linal.unit_vector(a.field, a.dim, i) for i in range(len(a.quiver.vertices))]
    labels = ["*".join(p) if p else f"e_{a.quiver.vertices[i]}"
              for i, p in enumerate(a.basis_paths)]
    return MulTable(a.field, a.mult, a.unit(), labels, idems)


def idempotent_subalgebra(a: AlgebraTable, vertex_subset) -> MulTable:
    """The algebra eAe for e the sum of the chosen standard idempotents."""
    s = set(vertex_subset)
    if not s:
        raise ValueError("vertex subset must be nonempty")
    keep = [i for i in range(a.dim) if a.basis_source[i] in s and a.basis_target[i] in s]
    pos = {b: i for i, b in enumerate(keep)}
    field = a.field
    mult = [[[a.mult[bi][bj][bk] for bk in keep] for bj in keep] for bi in keep]
    unit = linal.zero_vector(field, len(keep))
    idems = []
    for i, v in enumerate(a.quiver.vertices):
        if v in s:
            unit[pos[i]] = field.one
            idems.append(linal.unit_vector(field, len(keep), pos[i]))
    labels = ["*".join(a.basis_paths[b]) if a.basis_paths[b] else f"e_{a.basis_source[b]}"
              for b in keep]
    return MulTable(field, mult, unit, labels, idems)


def local_quotient(a: AlgebraTable) -> MulTable:
    """A/J for J the ideal generated by monomials visiting two vertices.

    The result is a direct product of local algebras, one per vertex
    (bouquets of loops).
    """
    field = a.field

    def visits_two(i: int) -> bool:
        path = a.basis_paths[i]
        if not path:
            return False
        verts = {a.quiver.arrow(l).source for l in path} | {a.quiver.arrow(l).target for l in path}
        return len(verts) > 1

    gens = [linal.unit_vector(field, a.dim, i) for i in range(a.dim) if visits_two(i)]
    # close under left/right multiplication by basis elements
    j_basis = linal.span_basis(field, gens)
    while True:
        prods = list(j_basis)
        for v in j_basis:
            for i in range(a.dim):
                e = linal.unit_vector(field, a.dim, i)
                prods.append(a.multiply(e, v))
                prods.append(a.multiply(v, e))
        new = linal.span_basis(field, prods)
        if len(new) == len(j_basis):
            break
        j_basis = new
    full = [linal.unit_vector(field, a.dim, i) for i in range(a.dim)]
    ops = linal.subspace_ops(field, full, j_basis)
    reps = ops.quotient_reps
    ech, piv = linal.rref(field, j_basis) if j_basis else ([], [])

    def project(vec: list) -> list:
        red = linal.reduce_against(field, vec, ech, piv)
        coords = linal.coordinates(field, reps, red)
        if coords is None:
            raise AssertionError("quotient projection failed")
        return coords

    d = len(reps)
    mult = [[project(a.multiply(reps[i], reps[j])) for j in range(d)] for i in range(d)]
    unit = project(a.unit())
    idems = [project(linal.unit_vector(field, a.dim, i))
             for i in range(len(a.quiver.vertices))]
    labels = [f"q{i}" for i in range(d)]
    return MulTable(field, mult, unit, labels, idems)
