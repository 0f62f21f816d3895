"""Quivers with arrow multiplicities, endomorphism quivers of graded
module collections, p-Segre quiver algebras of monomial data, and the
two folding constructions (doubling for d=3, tripling for d=4)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import hilbert
from .hilbert import WeightedRingSpec


@dataclass
class Quiver:
    """Finite quiver stored as vertex labels and arrow multiplicities."""

    vertices: tuple[str, ...]
    arrows: dict

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex labels must be unique")
        for (a, b), m in self.arrows.items():
            if a not in self.vertices or b not in self.vertices:
                raise ValueError(f"arrow {a}->{b} uses unknown vertex")
            if m < 0:
                raise ValueError("arrow multiplicities must be >= 0")
        self.arrows = {k: v for k, v in self.arrows.items() if v}

    def multiplicity(self, a: str, b: str) -> int:
        return self.arrows.get((a, b), 0)

    def arrow_count(self) -> int:
        return sum(self.arrows.values())

    def arrow_multiset(self) -> list[int]:
        return sorted(self.arrows.values())

    def to_json_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [
                [a, b, m] for (a, b), m in sorted(self.arrows.items())
            ],
        }

    def to_dot(self, name: str = "Q") -> str:
        lines = [f"digraph {name} {{"]
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for (a, b), m in sorted(self.arrows.items()):
            for _ in range(m):
                lines.append(f'  "{a}" -> "{b}" [count={m}];')
        lines.append("}")
        return "\n".join(lines)


def fold_d3(q: Quiver, n: dict) -> Quiver:
    """Double a quiver and add n[i, j] arrows from copy 1 of i to copy 2 of j.

    The multiplicity table must be symmetric.
    """
    for (i, j), m in n.items():
        if n.get((j, i), 0) != m:
            raise ValueError("fold multiplicities must be symmetric")
    verts = tuple(f"{v}.1" for v in q.vertices) + tuple(f"{v}.2" for v in q.vertices)
    arrows = {}
    for (a, b), m in q.arrows.items():
        arrows[(f"{a}.1", f"{b}.1")] = m
        arrows[(f"{a}.2", f"{b}.2")] = m
    for (i, j), m in n.items():
        if m:
            key = (f"{i}.1", f"{j}.2")
            arrows[key] = arrows.get(key, 0) + m
    return Quiver(verts, arrows)


def fold_d4(vertices, m: dict) -> Quiver:
    """Triple the vertex set; m[i, j] arrows (i,1)->(j,2), (i,2)->(j,3), (j,1)->(i,3)."""
    vertices = tuple(vertices)
    verts = tuple(f"{v}.{a}" for a in (1, 2, 3) for v in vertices)
    arrows = {}

    def bump(a, b, k):
        if k:
            arrows[(a, b)] = arrows.get((a, b), 0) + k

    for (i, j), k in m.items():
        bump(f"{i}.1", f"{j}.2", k)
        bump(f"{i}.2", f"{j}.3", k)
        bump(f"{j}.1", f"{i}.3", k)
    return Quiver(verts, arrows)


# ---------------------------------------------------------------------------
# endomorphism quivers of graded module collections


class EndoQuiver:
    """Gabriel quiver of End(⊕ summands) with rad/rad^2 multiplicities.

    Arrow multiplicities from a to b are dim(rad/rad^2) summed over the
    internal degrees up to `degree_top`; each vertex must have scalar
    degree-zero endomorphisms.  `stable_reduce` recomputes the radical in
    the quotient by maps factoring through free modules and drops the
    named free vertices.
    """

    def __init__(self, summands, lo: int, hi: int, degree_top: int = 3):
        from .gradedlin.modules import SyzygyModule
        from .gradedlin.resolution import HomCalculator

        self.summands = list(summands)
        labels = [l for l, _ in self.summands]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate summand labels")
        first = self.summands[0][1]
        if isinstance(first, SyzygyModule):
            ringA, ringB = first.ambient.ringA, first.ambient.ringB
        else:
            ringA, ringB = first.ringA, first.ringB
        self.calc = HomCalculator(ringA, ringB, lo, hi)
        self.degree_top = degree_top
        for label, mod in self.summands:
            if len(self.calc.hom_basis(mod, mod, 0)) != 1:
                raise ValueError(f"vertex {label} does not have scalar End_0")
        self.quiver = self._arrows(drop_free=None)

    def _gen_top(self, module) -> int:
        gens = self.calc.resolution(module).frees[0].gens
        return max(gens) if gens else 0

    def _d_floor(self, a, b) -> int:
        return b.min_degree - self._gen_top(a)

    def _d_top(self, a) -> int:
        # largest hom degree whose presentation data fits in the window
        res = self.calc.resolution(a)
        tops = [max(f.gens) for f in res.frees[:2] if f.gens]
        return self.calc.hi - (max(tops) if tops else 0)

    def _rad_basis(self, a, b, d: int):
        if a is b and d <= 0:
            return []
        return self.calc.hom_basis(a, b, d)

    def _rad_square(self, a, b, d: int, mods) -> list[dict]:
        from .gradedlin.resolution import compose_hom

        out = []
        for c in mods:
            e_lo = self._d_floor(a, c) if c is not a else max(self._d_floor(a, c), 1)
            f_lo = self._d_floor(c, b) if c is not b else max(self._d_floor(c, b), 1)
            e_lo = max(e_lo, d - self._d_top(c))
            e_hi = min(d - f_lo, self._d_top(a))
            for e in range(e_lo, e_hi + 1):
                phis = self._rad_basis(a, c, e)
                if not phis:
                    continue
                psis = self._rad_basis(c, b, d - e)
                if not psis:
                    continue
                for phi in phis:
                    for psi in psis:
                        vec = compose_hom(self.calc, a, c, b, e, d - e, phi, psi)
                        if vec:
                            out.append(vec)
        return out

    def _arrows(self, drop_free) -> Quiver:
        from . import linalg
        from .gradedlin.resolution import through_free_vectors

        keep = [
            (l, m) for l, m in self.summands if not drop_free or l not in drop_free
        ]
        mods = [m for _, m in keep]
        arrows = {}
        for la, a in keep:
            for lb, b in keep:
                total = 0
                for d in range(self._d_floor(a, b), self.degree_top + 1):
                    rad = self._rad_basis(a, b, d)
                    if not rad:
                        continue
                    ech = linalg.Echelon()
                    if drop_free:
                        for v in through_free_vectors(self.calc, a, b, d):
                            ech.add(v)
                    base = ech.rank
                    for v in self._rad_square(a, b, d, mods):
                        ech.add(v)
                    covered = ech.rank
                    for v in rad:
                        ech.add(v)
                    total += ech.rank - covered
                    # maps through frees are themselves radical, so the
                    # final rank never exceeds dim rad; base is absorbed
                if total:
                    arrows[(la, lb)] = total
        return Quiver(tuple(l for l, _ in keep), arrows)

    def stable_reduce(self, free_labels) -> Quiver:
        return self._arrows(drop_free=set(free_labels))


def endo_quiver(summands, lo: int, hi: int, degree_top: int = 3) -> Quiver:
    """Gabriel quiver of End(⊕ summands); the result carries its
    computation context so that `stable_reduce` can recompute the
    radical in the stable quotient."""
    eq = EndoQuiver(summands, lo, hi, degree_top)
    eq.quiver._endo = eq
    return eq.quiver


def stable_reduce(quiver: Quiver, free_labels) -> Quiver:
    """Drop the named free vertices and recompute rad/rad^2 modulo maps
    factoring through free modules.  Accepts a quiver built by
    `endo_quiver`."""
    endo = getattr(quiver, "_endo", None)
    if endo is None:
        raise ValueError("stable_reduce needs a quiver built by endo_quiver")
    return endo.stable_reduce(free_labels)


def middle_multiplicities(seq, free_shift: int = 0) -> dict:
    """Counts of non-free summands in the distinguished middle term of a
    higher almost-split sequence.

    For a five-term sequence (d = 3) this is the central inner term; for
    a six-term sequence (d = 4) the third inner term.  Summands with the
    free shift index are dropped.  Requires structured summand data, as
    produced by `gradedlin.diagonal`.
    """
    complex = getattr(seq, "complex", seq)
    summands = getattr(complex, "summands", None)
    if summands is None:
        raise ValueError("sequence carries no structured summand data")
    d = len(summands) - 2
    if d == 3:
        middle = summands[2]
    elif d == 4:
        middle = summands[3]
    else:
        raise ValueError("expected a five- or six-term sequence")
    out = {}
    for (m, _tw, mult) in middle:
        if m == free_shift:
            continue
        out[f"M{m}"] = out.get(f"M{m}", 0) + mult
    return out


# ---------------------------------------------------------------------------
# p-Segre quiver algebras of monomial (Veronese) data


@dataclass(frozen=True)
class VeroneseSideData:
    """Graded endomorphism data of a Veronese decomposition of a
    weighted polynomial ring: vertices are residues r of degrees mod q,
    and the component from r to s in internal degree n is spanned by the
    monomials of degree q*n + s - r.  A None ring is the base field."""

    ring: WeightedRingSpec | None
    order: int = 1
    residues: tuple[int, ...] = (0,)

    def component_degree(self, r: int, s: int, n: int) -> int:
        return self.order * n + s - r


# Segre products with a one-variable standard factor are the identity:
# k[t] has a one-dimensional piece in every degree
TRIVIAL_SIDE = VeroneseSideData(hilbert.ring(("t",), (1,)))


def _monomials(spec: WeightedRingSpec | None, d: int):
    if spec is None:
        return ((),) if d == 0 else ()
    from .gradedlin.poly import monomials

    return monomials(spec, d) if d >= 0 else ()


def p_segre_quiver(
    sideA: VeroneseSideData,
    sideB: VeroneseSideData,
    p: int,
    degree_top: int = 6,
    drop_free=None,
) -> Quiver:
    """Quiver of the p-Segre product of two monomial endomorphism algebras.

    Vertices are (twist l, residue pair); the component from (l, i, i')
    to (l', j, j') in internal degree n is the span of monomial pairs of
    degrees (qA*(n + l' - l) + j - i, qB*n + j' - i').  Arrows count
    rad/rad^2, which for monomial data is a set computation.  With
    `drop_free` a list of vertex labels, arrows are computed in the
    stable quotient killing maps that factor through those vertices.
    """
    if p <= 0:
        raise ValueError("p must be positive")
    verts = [
        (l, ra, rb)
        for l in range(p)
        for ra in sideA.residues
        for rb in sideB.residues
    ]

    def label(v):
        l, ra, rb = v
        if len(verts) == p:
            return "R" if l == 0 else f"M{l}"
        return f"({l};{ra},{rb})"

    def comp(v, w, n):
        (l, ra, rb), (l2, ra2, rb2) = v, w
        da = sideA.component_degree(ra, ra2, n + l2 - l)
        db = sideB.component_degree(rb, rb2, n)
        if da < 0 or db < 0:
            return frozenset()
        return frozenset(
            itertools.product(_monomials(sideA.ring, da), _monomials(sideB.ring, db))
        )

    drop = set(drop_free or ())
    keep = [v for v in verts if label(v) not in drop]

    def mono_pair_mul(x, y):
        a = tuple(i + j for i, j in zip(x[0], y[0]))
        b = tuple(i + j for i, j in zip(x[1], y[1]))
        return (a, b)

    # span of radical compositions from v to w in degree n; paths through
    # dropped vertices use every internal degree split, which models maps
    # factoring through arbitrary twists of those summands
    def rad_square(v, w, n, through):
        out = set()
        for c in through:
            for e1 in range(0, n + 1):
                e2 = n - e1
                if c == v and e1 == 0:
                    continue
                if c == w and e2 == 0:
                    continue
                first = comp(v, c, e1)
                if not first:
                    continue
                second = comp(c, w, e2)
                if not second:
                    continue
                out.update(
                    mono_pair_mul(x, y) for x in first for y in second
                )
        return out

    arrows = {}
    for v in keep:
        for w in keep:
            total = 0
            for n in range(0, degree_top + 1):
                hom = comp(v, w, n)
                if not hom:
                    continue
                if v == w and n == 0:
                    continue  # scalars are not radical
                covered = rad_square(v, w, n, keep)
                if drop:
                    covered |= rad_square(v, w, n, [u for u in verts if label(u) in drop])
                total += len(hom - covered)
            if total:
                arrows[(label(v), label(w))] = total
    return Quiver(tuple(label(v) for v in keep), arrows)
