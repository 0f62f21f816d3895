"""Minimal graded free resolutions over Segre products, and the Hom/Ext
calculus built on them.

Everything is computed degree by degree inside a window; a computation
that would need data above the window raises CertificationError instead
of silently truncating.  Within the window all numbers are exact: each
kernel, generator count, and Ext dimension at internal degree j only
consumes data in degrees <= j, so the window certifies itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .. import linalg
from .modules import DiagonalModule, FreeModule, SyzygyModule, r_basis


class CertificationError(RuntimeError):
    """The requested quantity is not determined by the computed window."""


def rings_of(module):
    if isinstance(module, SyzygyModule):
        return module.ambient.ringA, module.ambient.ringB
    return module.ringA, module.ringB


def _work_vectors(module, j: int) -> list[dict]:
    """Basis of the degree-j piece, embedded in multiplication-friendly
    coordinates (own coordinates for explicit modules, ambient free
    coordinates for syzygies)."""
    if isinstance(module, SyzygyModule):
        return module.bases.get(j, [])
    return [{i: 1} for i in range(module.dim(j))]


@lru_cache(maxsize=None)
def _act_matrix_frozen(module, pair, p: int, j: int):
    return module.act(pair, p, j)


def _act_vector(module, pair, p: int, j: int, vec: dict) -> dict:
    """Multiply an embedded vector by a monomial pair of degree p."""
    if isinstance(module, SyzygyModule):
        amb = module.ambient
        cols = _act_matrix_frozen(amb, pair, p, j)
        return linalg.apply_columns(cols, vec)
    cols = _act_matrix_frozen(module, pair, p, j)
    return linalg.apply_columns(cols, vec)


def _image_echelon(module, ringA, ringB, j: int, lo: int) -> linalg.Echelon:
    """Echelon of the positive-degree action image inside degree j."""
    if lo > module.min_degree:
        raise CertificationError(
            "window does not reach the bottom degree of the module"
        )
    ech = linalg.Echelon()
    for p in range(1, j - module.min_degree + 1):
        vecs = _work_vectors(module, j - p)
        if not vecs:
            continue
        for pair in r_basis(ringA, ringB, p):
            for w in vecs:
                ech.add(_act_vector(module, pair, p, j - p, w))
    return ech


def generation_degrees(module, lo: int, hi: int) -> dict:
    """Multiset of minimal generator degrees on the window.

    The report is complete when the module has a certified generation
    bound inside the window; otherwise it is exact degree by degree up
    to hi.
    """
    ringA, ringB = rings_of(module)
    out = {}
    for j in range(max(lo, module.min_degree), hi + 1):
        ech = _image_echelon(module, ringA, ringB, j, lo)
        count = 0
        for w in _work_vectors(module, j):
            if ech.add(w):
                count += 1
        if count:
            out[j] = count
    bound = getattr(module, "generation_bound", lambda: None)()
    if bound is not None and bound > hi:
        raise CertificationError(
            f"window top {hi} below the generation bound {bound}"
        )
    return out


@dataclass
class Resolution:
    """Minimal free resolution data to a fixed homological depth."""

    module: object
    lo: int
    hi: int
    frees: list[FreeModule]
    betti: list[tuple[int, ...]]
    diffs: list[dict]  # diffs[k]: F_(k+1) -> F_k, (row gen, col gen) -> pair poly
    syzygies: list[SyzygyModule]
    cover_columns: dict = field(default_factory=dict)

    def syzygy(self, k: int) -> SyzygyModule:
        """The k-th syzygy module (k >= 1)."""
        return self.syzygies[k - 1]

    def betti_table(self) -> list[list[int]]:
        return [sorted(b) for b in self.betti]

    def check_minimality(self):
        for entries in self.diffs:
            for (_, _), poly in entries.items():
                for (ma, mb), coeff in poly.items():
                    if coeff and not any(ma) and not any(mb):
                        raise AssertionError("non-minimal resolution entry")

    def to_json_dict(self) -> dict:
        return {
            "module": getattr(self.module, "label", "module"),
            "window": [self.lo, self.hi],
            "betti": [sorted(b) for b in self.betti],
            "differentials": [
                [
                    [r, c, sorted([list(ma), list(mb), v] for (ma, mb), v in poly.items())]
                    for (r, c), poly in sorted(entries.items())
                ]
                for entries in self.diffs
            ],
        }


def minimal_generators(module, lo: int, hi: int) -> list[tuple[int, dict]]:
    """Degrees and representative vectors of a minimal generating set."""
    ringA, ringB = rings_of(module)
    gens = []
    for j in range(max(lo, module.min_degree), hi + 1):
        ech = _image_echelon(module, ringA, ringB, j, lo)
        for i, w in enumerate(_work_vectors(module, j)):
            if ech.add(w):
                gens.append((j, {i: 1}))
    return gens


def free_resolution(module, depth: int, lo: int, hi: int) -> Resolution:
    """Resolve to homological depth `depth`, exactly on [lo, hi].

    Kernels are computed in the coordinates of the ambient free module,
    so every step is plain sparse elimination; the k-th syzygy is stored
    with explicit bases and remains usable as a module afterwards.
    """
    ringA, ringB = rings_of(module)
    bound = getattr(module, "generation_bound", lambda: None)()
    if bound is not None and bound > hi:
        raise CertificationError(
            f"window top {hi} below the generation bound {bound} of the module"
        )
    cur = module
    frees, betti, diffs, syzygies = [], [], [], []
    res = Resolution(module, lo, hi, frees, betti, diffs, syzygies)
    for step in range(depth + 1):
        gens = minimal_generators(cur, lo, hi)
        free = FreeModule(ringA, ringB, tuple(g for g, _ in gens))
        frees.append(free)
        betti.append(tuple(g for g, _ in gens))
        if step >= 1:
            # generator representatives are kernel vectors inside the
            # previous free module: read the flat coordinates back as
            # polynomial entries
            prev = frees[step - 1]
            entries = {}
            for col, (dg, unitvec) in enumerate(gens):
                vec = _expand_in_work(cur, dg, unitvec)
                for flat, coeff in vec.items():
                    g_idx, pair = _split_flat(prev, dg, flat)
                    poly = entries.setdefault((g_idx, col), {})
                    poly[pair] = poly.get(pair, 0) + coeff
            diffs.append(entries)
        # cover columns in embedded coordinates, then the kernel
        bases = {}
        cover_cols_all = {}
        for j in range(lo, hi + 1):
            cols = []
            for (dg, unitvec) in gens:
                p = j - dg
                if p < 0:
                    continue
                base = _expand_in_work(cur, dg, unitvec)
                for pair in r_basis(ringA, ringB, p):
                    if p == 0:
                        cols.append(dict(base))
                    else:
                        cols.append(_act_vector(cur, pair, p, dg, base))
            cover_cols_all[j] = cols
            bases[j] = linalg.kernel_of(cols) if cols else []
        res.cover_columns[step] = cover_cols_all
        syz = SyzygyModule(free, bases, label=f"syz^{step + 1}")
        syzygies.append(syz)
        cur = syz
    res.check_minimality()
    return res


def _expand_in_work(module, j: int, unitvec: dict) -> dict:
    """Expand a vector over the degree-j piece into embedded coordinates."""
    vecs = _work_vectors(module, j)
    out = {}
    for i, c in unitvec.items():
        for k, v in vecs[i].items():
            z = out.get(k, 0) + c * v
            if z:
                out[k] = z
            elif k in out:
                del out[k]
    return out


def _split_flat(free: FreeModule, j: int, flat: int):
    offs = free.offsets(j)
    for gi in range(len(free.gens)):
        if flat < offs[gi + 1]:
            pair = r_basis(free.ringA, free.ringB, j - free.gens[gi])[flat - offs[gi]]
            return gi, pair
    raise IndexError("flat coordinate out of range")


# ---------------------------------------------------------------------------
# Hom and Ext via the dualized resolution


def _module_dim(module, j: int) -> int:
    try:
        return module.dim(j)
    except KeyError as exc:
        raise CertificationError(str(exc))


def _hom_block_matrix(res: Resolution, i: int, N, d: int, char: int = 0):
    """Matrix of Hom(F_i, N)_d -> Hom(F_(i+1), N)_d, columns stored."""
    Fi, Fj = res.frees[i], res.frees[i + 1]
    entries = res.diffs[i]
    src_off = [0]
    for g in Fi.gens:
        src_off.append(src_off[-1] + _module_dim(N, d + g))
    dst_off = [0]
    for g in Fj.gens:
        dst_off.append(dst_off[-1] + _module_dim(N, d + g))
    cols = [dict() for _ in range(src_off[-1])]
    for (g_idx, col_idx), poly in entries.items():
        dg, dcol = Fi.gens[g_idx], Fj.gens[col_idx]
        p = dcol - dg
        src_dim = _module_dim(N, d + dg)
        if src_dim == 0:
            continue
        block = None
        for pair, coeff in poly.items():
            act = _act_cached(N, pair, p, d + dg)
            if block is None:
                block = [
                    {k: coeff * v for k, v in c.items()} for c in act
                ]
            else:
                for b, c in zip(block, act):
                    for k, v in c.items():
                        z = b.get(k, 0) + coeff * v
                        if z:
                            b[k] = z
                        elif k in b:
                            del b[k]
        if block is None:
            continue
        base = dst_off[col_idx]
        for s in range(src_dim):
            col = cols[src_off[g_idx] + s]
            for k, v in block[s].items():
                key = base + k
                z = col.get(key, 0) + v
                if z:
                    col[key] = z
                elif key in col:
                    del col[key]
    return cols, src_off[-1], dst_off[-1]


def _act_cached(N, pair, p: int, j: int):
    if isinstance(N, SyzygyModule):
        key = (pair, p, j)
        cache = getattr(N, "_act_cache", None)
        if cache is None:
            cache = {}
            N._act_cache = cache
        if key not in cache:
            cache[key] = N.act(pair, p, j)
        return cache[key]
    return _act_matrix_frozen(N, pair, p, j)


def ext_dims(
    M,
    N,
    i_values,
    d_values,
    lo: int,
    hi: int,
    resolution: Resolution | None = None,
    char: int = 0,
) -> dict:
    """Graded Ext dimensions: (i, d) -> dim Ext^i(M, N)_d, exact per degree."""
    i_values = sorted(set(i_values))
    depth = max(i_values) + 1
    res = resolution or free_resolution(M, depth, lo, hi)
    if len(res.frees) < depth + 1:
        raise CertificationError("resolution not deep enough for the Ext range")
    out = {}
    for d in d_values:
        mats = {}
        for i in range(0, depth):
            mats[i] = _hom_block_matrix(res, i, N, d, char)
        for i in i_values:
            cols, src_dim, _ = mats[i]
            rank_i = linalg.rank_of(cols, char)
            if i == 0:
                rank_prev = 0
            else:
                rank_prev = linalg.rank_of(mats[i - 1][0], char)
            out[(i, d)] = src_dim - rank_i - rank_prev
            if out[(i, d)] < 0:
                raise AssertionError("negative Ext dimension")
    return out


def hom_dims(M, N, d_values, lo: int, hi: int, resolution=None, char: int = 0) -> dict:
    table = ext_dims(M, N, [0], d_values, lo, hi, resolution, char)
    return {d: table[(0, d)] for d in d_values}


@dataclass
class HomSpace:
    """Basis of the degree-d maps M -> N as generator-value vectors."""

    M: object
    N: object
    d: int
    res: Resolution
    basis: list[dict]

    def gen_values(self, vec: dict, g_idx: int) -> dict:
        Fi = self.res.frees[0]
        off = 0
        for gi, g in enumerate(Fi.gens):
            dim = _module_dim(self.N, self.d + g)
            if gi == g_idx:
                return {
                    k - off: v for k, v in vec.items() if off <= k < off + dim
                }
            off += dim


def hom_space(M, N, d: int, lo: int, hi: int, resolution=None) -> HomSpace:
    res = resolution or free_resolution(M, 1, lo, hi)
    cols, src_dim, _ = _hom_block_matrix(res, 0, N, d)
    if src_dim == 0:
        return HomSpace(M, N, d, res, [])
    # kernel of the dual of the first differential
    ker = linalg.kernel_of(cols)
    return HomSpace(M, N, d, res, ker)


def hom_segre_check(Mi: DiagonalModule, Mj: DiagonalModule, d_values, lo, hi) -> bool:
    """Check dim Hom(M_i, M_j)_d == dim (M_(j-i))_d degreewise."""
    target = DiagonalModule(Mi.ringA, Mi.ringB, Mj.shift - Mi.shift)
    dims = hom_dims(Mi, Mj, d_values, lo, hi)
    return all(dims[d] == target.dim(d) for d in d_values)


# ---------------------------------------------------------------------------
# maps as degreewise matrices, compositions, and stable quotients


class HomCalculator:
    """Caches resolutions, hom bases, sections and element matrices for a
    fixed window; the workhorse behind endomorphism quivers and stable
    hom computations."""

    def __init__(self, ringA, ringB, lo: int, hi: int):
        self.ringA = ringA
        self.ringB = ringB
        self.lo = lo
        self.hi = hi
        self._res = {}
        self._hom = {}
        self._section = {}

    def resolution(self, M, depth: int = 1) -> Resolution:
        key = (id(M), )
        res = self._res.get(key)
        if res is None or len(res.frees) < depth + 1:
            res = free_resolution(M, depth, self.lo, self.hi)
            self._res[key] = res
        return res

    def hom_basis(self, M, N, d: int) -> list[dict]:
        key = (id(M), id(N), d)
        if key not in self._hom:
            self._hom[key] = hom_space(M, N, d, self.lo, self.hi, self.resolution(M)).basis
        return self._hom[key]

    def section(self, M, j: int):
        """CoordSolver expressing the degree-j piece through the cover."""
        key = (id(M), j)
        if key not in self._section:
            res = self.resolution(M)
            cols = res.cover_columns[0].get(j)
            if cols is None:
                raise CertificationError(f"degree {j} outside the window")
            self._section[key] = _SectionSolver(cols) if cols else None
        return self._section[key]

    def element_matrix(self, M, N, d: int, vec: dict, t: int) -> list[dict]:
        """Columns of the degree-d map on the degree-t piece of M."""
        key = (id(M), id(N), d, t, tuple(sorted(vec.items())))
        cached = getattr(self, "_elem_cache", None)
        if cached is None:
            cached = self._elem_cache = {}
        if key in cached:
            return cached[key]
        res = self.resolution(M)
        F0 = res.frees[0]
        section = self.section(M, t)
        work = _work_vectors(M, t)
        gen_values = _split_gen_values(F0, N, d, vec)
        cols = []
        for w_i in range(len(work)):
            coords = section.solve_unit(w_i, _work_vectors(M, t))
            out = {}
            for flat, coeff in coords.items():
                g_idx, pair = _split_flat(F0, t, flat)
                p = t - F0.gens[g_idx]
                base = gen_values[g_idx]
                if not base:
                    continue
                img = (
                    dict(base)
                    if p == 0
                    else linalg.apply_columns(_act_cached(N, pair, p, d + F0.gens[g_idx]), base)
                )
                for k, v in img.items():
                    z = out.get(k, 0) + coeff * v
                    if z:
                        out[k] = z
                    elif k in out:
                        del out[k]
            cols.append(out)
        cached[key] = cols
        return cols


class _SectionSolver:
    """Right inverse of a surjective cover matrix, solved lazily per unit."""

    def __init__(self, cols):
        independent, index = _independent_with_index(cols)
        self.solver = linalg.CoordSolver(independent)
        self.col_index = index
        self.cache = {}

    def solve_unit(self, i: int, work_vectors) -> dict:
        if i in self.cache:
            return self.cache[i]
        target = work_vectors[i]
        sol = self.solver.solve(target)
        if sol is None:
            raise AssertionError("cover is not surjective on the window")
        out = {self.col_index[k]: v for k, v in enumerate(sol) if v}
        self.cache[i] = out
        return out


def _independent_with_index(cols):
    ech = linalg.Echelon()
    out, idx = [], []
    for i, c in enumerate(cols):
        if ech.add(c):
            out.append(c)
            idx.append(i)
    return out, idx


def _split_gen_values(F0: FreeModule, N, d: int, vec: dict) -> list[dict]:
    out = []
    off = 0
    for g in F0.gens:
        dim = _module_dim(N, d + g)
        out.append({k - off: v for k, v in vec.items() if off <= k < off + dim})
        off += dim
    return out


def compose_hom(calc: HomCalculator, a, b, c, e: int, f: int, phi: dict, psi: dict) -> dict:
    """Generator values of psi∘phi for phi: a->b degree e, psi: b->c degree f."""
    res_a = calc.resolution(a)
    F0 = res_a.frees[0]
    out = {}
    off = 0
    phi_vals = _split_gen_values(F0, b, e, phi)
    for g_idx, g in enumerate(F0.gens):
        val = phi_vals[g_idx]  # in b at degree g + e
        t = g + e
        dim_c = _module_dim(c, g + e + f)
        if val:
            mat = calc.element_matrix(b, c, f, psi, t)
            img = linalg.apply_columns(mat, val)
        else:
            img = {}
        for k, v in img.items():
            out[off + k] = out.get(off + k, 0) + v
        off += dim_c
    return {k: v for k, v in out.items() if v}


def through_free_vectors(calc: HomCalculator, a, b, d: int) -> list[dict]:
    """Generator-value vectors of maps a -> b of degree d factoring
    through some twist of the free module R."""
    R = FreeModule(calc.ringA, calc.ringB, (0,))
    res_a = calc.resolution(a)
    F0 = res_a.frees[0]
    gmax = max(F0.gens) if F0.gens else 0
    out = []
    for u in range(-gmax, d - b.min_degree + 1):
        v = d - u
        if v < b.min_degree:
            continue
        homs = calc.hom_basis(a, R, u)
        if not homs:
            continue
        dim_bv = _module_dim(b, v)
        for phi in homs:
            phi_vals = _split_gen_values(F0, R, u, phi)
            for nb in range(dim_bv):
                vec = {}
                off = 0
                for g_idx, g in enumerate(F0.gens):
                    dim_b = _module_dim(b, d + g)
                    val = phi_vals[g_idx]  # element of R_(g+u) in pair coords
                    for flat, coeff in val.items():
                        pair = r_basis(calc.ringA, calc.ringB, g + u)[flat]
                        img = _act_cached(b, pair, g + u, v)[nb] if g + u > 0 else (
                            {nb: 1} if g + u == 0 else {}
                        )
                        for k, w in img.items():
                            key = off + k
                            z = vec.get(key, 0) + coeff * w
                            if z:
                                vec[key] = z
                            elif key in vec:
                                del vec[key]
                    off += dim_b
                if vec:
                    out.append(vec)
    return out


def stable_hom_dims(calc: HomCalculator, a, b, d_values) -> dict:
    """dim Hom_d and dim of the stable quotient (mod maps through frees)."""
    out = {}
    for d in d_values:
        basis = calc.hom_basis(a, b, d)
        frees = through_free_vectors(calc, a, b, d)
        ech = linalg.Echelon()
        for v in frees:
            ech.add(v)
        p_dim = ech.rank
        for v in basis:
            ech.add(v)
        out[d] = (len(basis), ech.rank - p_dim)
    return out
