"""The Grothendieck ring of the double, via its polynomial presentation.

With g the class of the one-dimensional module V(1,1) and x the class of
the two-dimensional module V(2,0), the ring is Z[g, x] modulo g^n = 1 and
one monic relation of degree n in x.  The class of V(ell, 0) is the
bivariate Chebyshev-type polynomial f_{ell-1}(x, g), and [V(ell, r)] =
g^r f_{ell-1}(x, g), so the n^2 monomials g^i x^k form a basis.

All tensor-product multiplicities (McKay matrices, Cartan data, fusion
rows) are computed by multiplying in this presentation and converting
back to the basis of simple classes; the explicit tensor decomposition
rules serve as an independent cross-check in the tests.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .cyclotomic import CyclotomicContext, make_context
from .dnrep import SimpleLabel, all_labels, label_index
from .polymat import RingMatrix, RingPoly

__all__ = ["PolyPres", "GrothRing", "groth_ring"]


def _wide_x(d):
    return {(g, x + 1): v for (g, x), v in d.items()}


def _wide_g(d, n):
    return {((g + 1) % n, x): v for (g, x), v in d.items()}


def _wide_sub(d1, d2):
    out = dict(d1)
    for k, v in d2.items():
        out[k] = out.get(k, 0) - v
    return {k: v for k, v in out.items() if v}


class PolyPres:
    """Element of the presentation: an n x n coefficient grid, grid[g_power][x_power]."""

    __slots__ = ("ring", "grid")

    def __init__(self, ring: "GrothRing", grid):
        self.ring = ring
        self.grid = [list(row) for row in grid]

    def __eq__(self, other):
        return isinstance(other, PolyPres) and self.grid == other.grid

    def is_zero(self):
        return not any(any(row) for row in self.grid)

    def __add__(self, other):
        return PolyPres(
            self.ring,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.grid, other.grid)],
        )

    def __sub__(self, other):
        return PolyPres(
            self.ring,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.grid, other.grid)],
        )

    def __neg__(self):
        return PolyPres(self.ring, [[-a for a in row] for row in self.grid])

    def scalar_mul(self, c):
        return PolyPres(self.ring, [[a * c for a in row] for row in self.grid])

    def __mul__(self, other):
        return self.ring.mul(self, other)

    def to_simple(self):
        return self.ring.poly_to_simple(self)

    def substitute_g(self, value, zero=0) -> RingPoly:
        """Collapse g to a scalar, leaving a polynomial in x."""
        n = self.ring.n
        coeffs = [zero] * n
        for gp, row in enumerate(self.grid):
            for xp, v in enumerate(row):
                if v:
                    coeffs[xp] = coeffs[xp] + v * value**gp
        return RingPoly(coeffs, zero)

    def __repr__(self):
        bits = [
            f"{v}*g^{gp}*x^{xp}"
            for gp, row in enumerate(self.grid)
            for xp, v in enumerate(row)
            if v
        ]
        return "PolyPres(" + " + ".join(bits) + ")" if bits else "PolyPres(0)"


class GrothRing:
    """Per-n presentation arithmetic plus the matrices built from it."""

    def __init__(self, ctx: CyclotomicContext):
        self.ctx = ctx
        self.n = ctx.n
        n = self.n
        # f_0 .. f_n as unreduced {(g_pow, x_pow): int} dicts (recursion route)
        fs = [{(0, 0): 1}, {(0, 1): 1}]
        for _ell in range(2, n + 1):
            fs.append(_wide_sub(_wide_x(fs[-1]), _wide_g(fs[-2], n)))
        self._f_wide = fs
        self._relation = _wide_sub(_wide_sub(fs[n], _wide_g(fs[n - 2], n)), {(0, 0): 2})
        # reduction tables: x^m for m = n .. 2n-2 as reduced dicts
        lead = {k: v for k, v in self._relation.items() if k[1] < n}
        xred = {n: {k: -v for k, v in lead.items()}}
        for m in range(n + 1, 2 * n - 1):
            nxt = {}
            for (g, x), v in xred[m - 1].items():
                if x + 1 < n:
                    nxt[(g, x + 1)] = nxt.get((g, x + 1), 0) + v
                else:
                    for (g2, x2), r in xred[n].items():
                        key = ((g + g2) % n, x2)
                        nxt[key] = nxt.get(key, 0) + v * r
            xred[m] = {k: v for k, v in nxt.items() if v}
        self._xred = xred
        # expansion of x^k in the basis {g^j f_{ell-1}}: list over k of
        # [(ell, g_coeff_vector)] with integer g-vectors
        self._xk_in_f = [self._expand_xk(k) for k in range(n)]
        self._base_products: dict[tuple[int, int], list[int]] = {}
        self._mpow: list[RingMatrix] = []
        self._cartan = None

    # ------------------------------------------------------------------
    # presentation arithmetic

    def zero(self, zero=0) -> PolyPres:
        return PolyPres(self, [[zero] * self.n for _ in range(self.n)])

    def from_wide(self, d, zero=0) -> PolyPres:
        """Reduce an unrestricted {(g_pow, x_pow): coeff} dict into the presentation."""
        n = self.n
        tmp = [[zero] * n for _ in range(2 * n - 1)]  # tmp[x][g]
        for (g, x), v in d.items():
            tmp[x][g % n] = tmp[x][g % n] + v
        return self._fold(tmp, zero)

    def _fold(self, tmp, zero) -> PolyPres:
        n = self.n
        for x in range(2 * n - 2, n - 1, -1):
            row = tmp[x]
            red = self._xred[x]
            for g in range(n):
                v = row[g]
                if v:
                    for (g2, x2), r in red.items():
                        tmp[x2][(g + g2) % n] = tmp[x2][(g + g2) % n] + v * r
        return PolyPres(self, [[tmp[x][g] for x in range(n)] for g in range(n)])

    def mul(self, a: PolyPres, b: PolyPres) -> PolyPres:
        n = self.n
        zero = a.grid[0][0] * 0
        tmp = [[zero] * n for _ in range(2 * n - 1)]
        bg = b.grid
        for ga, rowa in enumerate(a.grid):
            for xa, va in enumerate(rowa):
                if va:
                    for gb, rowb in enumerate(bg):
                        gi = (ga + gb) % n
                        for xb, vb in enumerate(rowb):
                            if vb:
                                x = xa + xb
                                tmp[x][gi] = tmp[x][gi] + va * vb
        return self._fold(tmp, zero)

    def _expand_xk(self, k: int):
        """Back-substitute x^k through the monic-in-x basis polynomials f_0..f_{n-1}."""
        n = self.n
        resid = [[0] * n for _ in range(k + 1)]  # resid[x][g]
        resid[k][0] = 1
        out = []
        for d in range(k, -1, -1):
            gvec = list(resid[d])
            if any(gvec):
                out.append((d + 1, gvec))
                for (g2, x2), r in self._f_wide[d].items():
                    for g in range(n):
                        c = gvec[g]
                        if c:
                            resid[x2][(g + g2) % n] -= c * r
        assert not any(any(row) for row in resid), "x^k expansion left a residue"
        return out

    # ------------------------------------------------------------------
    # basis conversions

    def f_seq(self, ell: int) -> PolyPres:
        """The class of V(ell, 0) as the presentation polynomial f_{ell-1}(x, g)."""
        if not 1 <= ell <= self.n:
            raise ValueError(f"ell must lie in 1..{self.n}")
        return self.from_wide(self._f_wide[ell - 1])

    @staticmethod
    def f_closed_wide(ell: int) -> dict:
        """Closed form of f_{ell-1}: sum of (-1)^i C(ell-1-i, i) g^i x^{ell-1-2i}."""
        k = ell - 1
        return {(i, k - 2 * i): (-1) ** i * comb(k - i, i) for i in range(k // 2 + 1)}

    def minimal_relation(self) -> dict:
        """The defining relation f_n - g f_{n-2} - 2 as an unreduced dict (monic, x-degree n)."""
        return dict(self._relation)

    @staticmethod
    def minimal_relation_closed(n: int) -> dict:
        out = {}
        for i in range(n // 2 + 1):
            num = n * comb(n - i, i)
            out[(i, n - 2 * i)] = (-1) ** i * (num // (n - i))
        out[(0, 0)] = out.get((0, 0), 0) - 2
        return {k: v for k, v in out.items() if v}

    def label_poly(self, label: SimpleLabel) -> PolyPres:
        """[V(ell, r)] = g^r f_{ell-1}(x, g)."""
        wide = {((g + label.r) % self.n, x): v for (g, x), v in self._f_wide[label.ell - 1].items()}
        return self.from_wide(wide)

    def simple_to_poly(self, coeffs) -> PolyPres:
        """Linear map from a length-n^2 coefficient vector over the simple basis."""
        n = self.n
        zero = coeffs[0] * 0
        grid = [[zero] * n for _ in range(n)]
        for idx, c in enumerate(coeffs):
            if c:
                ell, r = idx // n + 1, idx % n
                for (g, x), v in self._f_wide[ell - 1].items():
                    gi = (g + r) % n
                    grid[gi][x] = grid[gi][x] + c * v
        return PolyPres(self, grid)

    def poly_to_simple(self, p: PolyPres):
        """Inverse linear map, length-n^2 vector over lexicographically ordered labels."""
        n = self.n
        zero = p.grid[0][0] * 0
        out = [zero] * (n * n)
        for gi, row in enumerate(p.grid):
            for xk, c in enumerate(row):
                if c:
                    for ell, gvec in self._xk_in_f[xk]:
                        base = (ell - 1) * n
                        for gj, r in enumerate(gvec):
                            if r:
                                pos = base + (gi + gj) % n
                                out[pos] = out[pos] + c * r
        return out

    # ------------------------------------------------------------------
    # products of simples and McKay matrices

    def base_product(self, l1: int, l2: int) -> list[int]:
        """[V(l1,0)][V(l2,0)] in the simple basis (integer multiplicities)."""
        key = (l1, l2)
        got = self._base_products.get(key)
        if got is None:
            got = self.poly_to_simple(self.mul(self.f_seq(l1), self.f_seq(l2)))
            self._base_products[key] = got
        return got

    def multiply_simples(self, lab1: SimpleLabel, lab2: SimpleLabel) -> list[int]:
        """Composition multiplicities of V(lab1) (x) V(lab2) over all simple labels."""
        n = self.n
        base = self.base_product(lab1.ell, lab2.ell)
        shift = (lab1.r + lab2.r) % n
        out = [0] * (n * n)
        for idx, v in enumerate(base):
            if v:
                ell0, r0 = idx // n, idx % n
                out[ell0 * n + (r0 + shift) % n] = v
        return out

    def mckay_matrix(self, ell: int, s: int) -> RingMatrix:
        """Row L of the matrix is the product [V(L)][V(ell, s)] in the simple basis."""
        return RingMatrix(
            [self.multiply_simples(lab, SimpleLabel(ell, s)) for lab in all_labels(self.n)]
        )

    def mckay_v20(self) -> RingMatrix:
        if not self._mpow:
            self._mpow.append(RingMatrix.identity(self.n * self.n))
            self._mpow.append(self.mckay_matrix(2, 0))
        return self._mpow[1]

    def mpow(self, k: int) -> RingMatrix:
        """Cached powers of the McKay matrix of V(2, 0)."""
        self.mckay_v20()
        while len(self._mpow) <= k:
            self._mpow.append(self._mpow[-1] * self._mpow[1])
        return self._mpow[k]

    def z_shift(self, mat: RingMatrix, e: int) -> RingMatrix:
        """Left-multiply by the block-diagonal cyclic shift: row (block, p) <- row (block, p+e)."""
        n = self.n
        e %= n
        rows = mat.rows
        return RingMatrix(
            [rows[blk * n + (p + e) % n] for blk in range(n) for p in range(n)]
        )

    def mckay_matrix_closed(self, ell: int, s: int) -> RingMatrix:
        """The alternating-binomial combination of shifted powers of the V(2,0) matrix."""
        acc = None
        for i in range((ell - 1) // 2 + 1):
            coeff = (-1) ** i * comb(ell - 1 - i, i)
            term = self.z_shift(self.mpow(ell - 1 - 2 * i), i + s).scalar_mul(coeff)
            acc = term if acc is None else acc + term
        return acc

    # ------------------------------------------------------------------
    # Cartan data and projective McKay matrices

    def projective_slots(self) -> list[SimpleLabel]:
        """Slot (ell, r) means the projective cover P(ell, r) for ell < n, V(n, r) for ell = n."""
        return all_labels(self.n)

    def dim_simple_vector(self) -> list[int]:
        return [lab.ell for lab in all_labels(self.n)]

    def dim_projective_vector(self) -> list[int]:
        n = self.n
        return [2 * n if lab.ell < n else n for lab in all_labels(n)]

    def cartan_matrix(self) -> RingMatrix:
        if self._cartan is None:
            n = self.n
            rows = []
            for lab in self.projective_slots():
                row = [0] * (n * n)
                if lab.ell == n:
                    row[label_index(n, lab)] = 1
                else:
                    row[label_index(n, lab)] = 2
                    row[label_index(n, SimpleLabel(n - lab.ell, (lab.r + lab.ell) % n))] = 2
                rows.append(row)
            self._cartan = RingMatrix(rows)
        return self._cartan

    def cartan_rank(self) -> int:
        return self.cartan_matrix().rank_over_field()

    def cartan_kernel_basis(self) -> list[list[int]]:
        """[P(ell,r)] - [P(n-ell, ell+r)] for 1 <= ell <= (n-1)/2, r in Z_n."""
        n = self.n
        out = []
        for ell in range(1, (n - 1) // 2 + 1):
            for r in range(n):
                v = [0] * (n * n)
                v[label_index(n, SimpleLabel(ell, r))] = 1
                v[label_index(n, SimpleLabel(n - ell, (ell + r) % n))] -= 1
                out.append(v)
        return out

    def cartan_image_of(self, kvec) -> list:
        """Image in the simple basis of a K0 coordinate vector."""
        return self.cartan_matrix().vec_mat(kvec)

    def projective_mckay(self, ell: int, s: int) -> RingMatrix:
        """Transpose of the McKay matrix of the dual module."""
        dual = SimpleLabel(ell, (1 - s - ell) % self.n)
        return self.mckay_matrix(dual.ell, dual.r).transpose()

    def projective_mckay_v20_rules(self) -> RingMatrix:
        """Independent construction for V(2,0) from the explicit projective tensor rules."""
        n = self.n
        idx = lambda ell, r: label_index(n, SimpleLabel(ell, r % n))
        rows = []
        for lab in self.projective_slots():
            ell, r = lab.ell, lab.r
            row = [0] * (n * n)
            if ell == n:
                row[idx(n - 1, r + 1)] = 1
            elif ell == 1:
                row[idx(2, r)] = 1
                row[idx(n, r + 1)] = 2
            elif ell == n - 1:
                row[idx(n - 2, r + 1)] = 1
                row[idx(n, r)] = 2
            else:
                row[idx(ell + 1, r)] = 1
                row[idx(ell - 1, r + 1)] = 1
            rows.append(row)
        return RingMatrix(rows)


@lru_cache(maxsize=None)
def groth_ring(n: int) -> GrothRing:
    return GrothRing(make_context(n))
