"""Kronecker pairs, maximal chains and the sl2-summand count m.

A Kronecker pair is a parallel class of exactly two arrows.  Chains link
pairs head to tail, subject to at least one of the four cross products
surviving in the algebra; maximal chains and their rotation classes drive
the decomposition of the radical-preserving part of HH1 into m copies of
sl2 plus a solvable remainder.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dfield

from . import linal
from .algebra import AlgebraTable
from .derlie import HH1Result, LieAlgebra, delta_defined, delta_map
from .errors import UnsupportedCharacteristic
from .quiver import reptype_radsq


@dataclass(frozen=True)
class KroneckerPair:
    a: str
    b: str
    source: str
    target: str
    delta_defined: bool

    @property
    def labels(self):
        return (self.a, self.b)


@dataclass(frozen=True)
class KroneckerChain:
    pairs: tuple
    shape: str  # DoubleLoop | Cyclic | Linear

    @property
    def arrow_labels(self):
        out = []
        for p in self.pairs:
            out.extend([p.a, p.b])
        return out

    @property
    def is_closed(self) -> bool:
        return self.pairs[0].source == self.pairs[-1].target

    def key(self):
        return tuple(p.labels for p in self.pairs)


def kronecker_pairs(table: AlgebraTable):
    """All parallel double-arrow pairs, ordered by declaration.

    Returns (pairs, oversized) where oversized lists parallel classes of
    three or more arrows; those classes admit no pair and already force
    wild type through the separated quiver.
    """
    q = table.quiver
    classes: dict = {}
    for arrow in q.arrows:
        classes.setdefault((arrow.source, arrow.target), []).append(arrow.label)
    pairs = []
    oversized = []
    for (src, tgt), labels in classes.items():
        if len(labels) == 2:
            a, b = labels
            pairs.append(KroneckerPair(a, b, src, tgt,
                                       delta_defined(q, a, b)))
        elif len(labels) > 2:
            oversized.append(labels)
    return pairs, oversized


def _cross_product_survives(table: AlgebraTable, p: KroneckerPair,
                            q: KroneckerPair) -> bool:
    for x in (p.a, p.b):
        for y in (q.a, q.b):
            if not linal.is_zero_vector(table.path_vector((x, y))):
                return True
    return False


def _chain_shape(pairs) -> str:
    if len(pairs) == 1 and pairs[0].source == pairs[0].target:
        return "DoubleLoop"
    if pairs[0].source == pairs[-1].target:
        return "Cyclic"
    return "Linear"


def maximal_chains(table: AlgebraTable):
    """Maximal Kronecker chains, cyclic ones as their smallest rotation."""
    pairs, _ = kronecker_pairs(table)

    def can_follow(p: KroneckerPair, q: KroneckerPair) -> bool:
        return (q is not p and p.target == q.source
                and _cross_product_survives(table, p, q))

    all_chains = []

    def extend(seq):
        all_chains.append(tuple(seq))
        for q in pairs:
            if q not in seq and can_follow(seq[-1], q):
                seq.append(q)
                extend(seq)
                seq.pop()

    for p in pairs:
        extend([p])

    def extendable(seq) -> bool:
        for q in pairs:
            if q in seq:
                continue
            if can_follow(seq[-1], q) or can_follow(q, seq[0]):
                return True
        return False

    maximal = [seq for seq in all_chains if not extendable(seq)]
    # one representative per rotation orbit of closed chains
    chains = []
    seen = set()
    for seq in maximal:
        chain = KroneckerChain(seq, _chain_shape(seq))
        if chain.shape == "Cyclic":
            orbit = {tuple(seq[i:] + seq[:i]) for i in range(len(seq))}
            valid = [rot for rot in orbit if rot in {tuple(s) for s in maximal}]
            rep = min(valid, key=lambda rot: tuple(p.labels for p in rot))
            if tuple(p.labels for p in rep) in seen:
                continue
            seen.add(tuple(p.labels for p in rep))
            chains.append(KroneckerChain(rep, "Cyclic"))
        else:
            if chain.key() in seen:
                continue
            seen.add(chain.key())
            chains.append(chain)
    chains.sort(key=lambda c: c.key())
    return chains


@dataclass
class ChainClass:
    representative: KroneckerChain
    size: int  # number of rotations realised as chains


def equivalence_classes(table: AlgebraTable, chains) -> list:
    """Rotation orbits; non-closed chains are singletons."""
    out = []
    for chain in chains:
        if chain.shape != "Cyclic":
            out.append(ChainClass(chain, 1))
            continue
        seq = list(chain.pairs)
        size = 0
        for i in range(len(seq)):
            rot = seq[i:] + seq[:i]
            ok = all(_cross_product_survives(table, rot[k], rot[k + 1])
                     for k in range(len(rot) - 1))
            if ok:
                size += 1
        out.append(ChainClass(chain, size))
    return out


@dataclass
class SurjectivityReport:
    surjective: bool
    per_pair_image_dims: dict   # pair labels -> rank of its sl2 projection
    kernels_coincide: bool


def is_surjective_chain(table: AlgebraTable, h: HH1Result,
                        chain: KroneckerChain) -> SurjectivityReport:
    """Test the sl2 projection along each isolated pair of the chain.

    Surjective means some pair's projection hits all of sl2; for chains
    where that happens all surjective pairs must cut out the same kernel.
    """
    if table.field.characteristic == 2:
        raise UnsupportedCharacteristic(
            "surjectivity onto sl2 needs 2 to be invertible")
    dims = {}
    kernels = []
    surjective = False
    for pair in chain.pairs:
        if not pair.delta_defined:
            continue
        dm = delta_map(h.lie, pair.a, pair.b)
        rows = [[im.x for im in dm.images],
                [im.y for im in dm.images],
                [im.z for im in dm.images]]
        dims[pair.labels] = linal.rank(table.field, rows)
        if dm.surjective:
            surjective = True
            kernels.append(linal.span_basis(table.field, dm.kernel))
    coincide = all(k == kernels[0] for k in kernels) if kernels else True
    return SurjectivityReport(surjective, dims, coincide)


@dataclass
class StandardRelationsReport:
    s1: bool
    s2: bool
    s3: bool
    witnesses: list

    @property
    def all_hold(self) -> bool:
        return self.s1 and self.s2 and self.s3


def standard_relations_literal(table: AlgebraTable,
                               chain: KroneckerChain) -> StandardRelationsReport:
    """Check the chain relations verbatim in the given presentation.

    (S1) every product of a chain arrow with a non-chain arrow vanishes;
    (S2) along the chain, a_i a_{i+1} = 0, b_i b_{i+1} = 0 and
    a_i b_{i+1} + b_i a_{i+1} = 0; (S3) the same triple at the wrap-around
    when the chain closes up.  No base change is attempted.
    """
    q = table.quiver
    chain_arrows = set(chain.arrow_labels)
    witnesses = []

    def vanishes(terms) -> bool:
        return linal.is_zero_vector(table.normal_form(terms))

    s1 = True
    for c in chain_arrows:
        for arrow in q.arrows:
            d = arrow.label
            if d in chain_arrows:
                continue
            for path in ((c, d), (d, c)):
                if (q.arrow(path[0]).target == q.arrow(path[1]).source
                        and not vanishes([(1, path)])):
                    s1 = False
                    witnesses.append("*".join(path))

    def triple(p: KroneckerPair, r: KroneckerPair) -> bool:
        ok = True
        if not vanishes([(1, (p.a, r.a))]):
            ok = False
            witnesses.append(f"{p.a}*{r.a}")
        if not vanishes([(1, (p.b, r.b))]):
            ok = False
            witnesses.append(f"{p.b}*{r.b}")
        if not vanishes([(1, (p.a, r.b)), (1, (p.b, r.a))]):
            ok = False
            witnesses.append(f"{p.a}*{r.b} + {p.b}*{r.a}")
        return ok

    s2 = all(triple(chain.pairs[i], chain.pairs[i + 1])
             for i in range(len(chain.pairs) - 1))
    s3 = True
    if chain.is_closed:
        s3 = triple(chain.pairs[-1], chain.pairs[0])
    return StandardRelationsReport(s1, s2, s3, witnesses)


@dataclass
class ChainReport:
    classes: list                 # of ChainClass
    surjectivity: list            # SurjectivityReport per class
    standard: list                # StandardRelationsReport per class
    m: int
    hh1_rad_dim: int
    solvable: bool
    derived_dims: list
    r_dim: int
    joint_kernel_dim: int
    joint_kernel_derived_dims: list
    flags: dict
    consistency_ok: bool


def decomposition_report(table: AlgebraTable, h: HH1Result,
                         assert_nonwild: bool = False) -> ChainReport:
    """Assemble m, the solvable remainder and the hypothesis flags.

    m counts the rotation classes of maximal chains whose sl2 projection
    is surjective; under the stated hypotheses (characteristic not 2 and
    non-wild type) the radical-preserving part of HH1 splits as m copies
    of sl2 plus a solvable ideal of dimension dim - 3m.
    """
    field = table.field
    if field.characteristic == 2:
        raise UnsupportedCharacteristic(
            "the decomposition count needs 2 to be invertible")
    chains = maximal_chains(table)
    classes = equivalence_classes(table, chains)
    surj = [is_surjective_chain(table, h, cl.representative) for cl in classes]
    std = [standard_relations_literal(table, cl.representative) for cl in classes]
    m = sum(1 for s in surj if s.surjective)
    lie = h.lie
    derived = lie.derived_series()
    solvable = derived[-1] == 0
    r_dim = lie.dim - 3 * m

    # kernel of the combined projection onto the m sl2 summands
    kernel = [linal.unit_vector(field, lie.dim, i) for i in range(lie.dim)]
    for cl, s in zip(classes, surj):
        if not s.surjective:
            continue
        pair = next(p for p in cl.representative.pairs if p.delta_defined)
        dm = delta_map(lie, pair.a, pair.b)
        kspan = linal.span_basis(field, dm.kernel)
        kernel = _intersect(field, kernel, kspan)
    joint_derived = lie.derived_series(kernel) if kernel else [0]

    septype = reptype_radsq(table.quiver)
    flags = {
        "char_ne_2": True,
        "qs_nonwild_compatible": septype != "Wild",
        "user_asserted_nonwild": assert_nonwild,
    }
    conditional = flags["qs_nonwild_compatible"] or flags["user_asserted_nonwild"]
    consistency_ok = (not conditional) or (solvable == (m == 0))
    return ChainReport(classes, surj, std, m, lie.dim, solvable, derived,
                       r_dim, len(kernel), joint_derived, flags, consistency_ok)


def _intersect(field, span_a, span_b):
    ops = linal.subspace_ops(field, span_a, span_b, quotient=False)
    # dim formula gives the size; recover an explicit basis by kernel trick
    if not span_a or not span_b:
        return []
    n = len(span_a[0])
    cols = [list(v) for v in span_a] + [list(v) for v in span_b]
    matrix = [[cols[c][r] for c in range(len(cols))] for r in range(n)]
    out = []
    for coeffs in linal.kernel_basis(field, matrix, ncols=len(cols)):
        v = linal.zero_vector(field, n)
        for c, b in zip(coeffs[:len(span_a)], span_a):
            if c != 0:
                v = linal.vec_add(field, v, linal.vec_scale(field, c, b))
        out.append(v)
    basis = linal.span_basis(field, out)
    assert len(basis) == ops.dim_intersection
    return basis
