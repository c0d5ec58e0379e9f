"""Basic classical Lie superalgebras gl/sl(m|n) and osp(M|2n) as exact
structure-constant tables.

Every algebra is built from its fundamental matrix representation over the
rationals: gl via graded matrix units, osp by solving the invariance
condition of the orthosymplectic form inside gl(M|2n).  Structure constants
are then read off from supercommutators of the representing matrices, so
super-antisymmetry and the super-Jacobi identity hold by construction and
are re-checked in tests.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg


class UnsupportedAlgebra(Exception):
    pass


class StructureError(Exception):
    """Inconsistency while expanding brackets in the chosen basis."""


# --------------------------------------------------------------------------
# roots


@dataclass(frozen=True)
class Root:
    """Integer coefficient vector over the epsilon basis, with parity."""

    coeffs: tuple
    parity: int

    def __add__(self, other):
        return tuple(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self):
        return tuple(-a for a in self.coeffs)

    @property
    def label(self):
        parts = []
        for i, c in enumerate(self.coeffs, start=1):
            if c == 0:
                continue
            mag = "e%d" % i if abs(c) == 1 else "%de%d" % (abs(c), i)
            parts.append(("-" if c < 0 else "+") + mag)
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s


def _mk_root(coeffs, odd_block):
    parity = sum(abs(c) for i, c in enumerate(coeffs) if i in odd_block) % 2
    return Root(tuple(coeffs), parity)


def _eps(n_eps, i, sign=1):
    return tuple(sign if k == i else 0 for k in range(n_eps))


def _root_sum(n_eps, *pairs):
    out = [0] * n_eps
    for sign, i in pairs:
        out[i] += sign
    return tuple(out)


# --------------------------------------------------------------------------
# generators and orderings


@dataclass(frozen=True)
class Gen:
    name: str
    parity: int
    weight: tuple
    root: Root | None
    kind: str  # 'neg' | 'cartan' | 'pos'


@dataclass
class Line:
    """One line of a normal ordering: roots pairing as (gamma, theta-gamma)."""

    roots: list
    theta: Root
    extra: Root | None = None  # unpaired lowering root carrying its own Jordanian


@dataclass
class NormalOrdering:
    lines: list
    m_prime: int | None = None


@dataclass
class MatrixRep:
    dimension: tuple  # (even_dim, odd_dim)
    images: dict  # gen index -> {(r, c): Fraction}
    vec_parity: tuple


# --------------------------------------------------------------------------
# rational matrices as sparse dicts


def mat_mul(a, b, dim):
    by_row = {}
    for (r, c), v in b.items():
        by_row.setdefault(r, []).append((c, v))
    out = {}
    for (r, c), v in a.items():
        for c2, v2 in by_row.get(c, ()):
            key = (r, c2)
            s = out.get(key, Fraction(0)) + v * v2
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return out


def mat_axpy(out, a, coeff):
    for k, v in a.items():
        s = out.get(k, Fraction(0)) + coeff * v
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


def supercommutator(a, pa, b, pb, dim):
    out = mat_mul(a, b, dim)
    sign = -1 if (pa and pb) else 1
    return mat_axpy(out, mat_mul(b, a, dim), Fraction(-sign))


# --------------------------------------------------------------------------
# the algebra object


class SuperAlgebra:
    def __init__(self, family, shape, gens, rep, vec_parity, vec_weight,
                 n_eps, odd_block, ordering):
        self.family = family
        self.shape = shape
        self.gens = gens
        self.rep = rep  # list of sparse matrices, aligned with gens
        self.vec_parity = vec_parity
        self.vec_weight = vec_weight
        self.n_eps = n_eps
        self.odd_block = odd_block
        self._ordering = ordering
        self.dim = len(vec_parity)
        self.cartan = [i for i, g in enumerate(gens) if g.kind == "cartan"]
        self.positive = [i for i, g in enumerate(gens) if g.kind == "pos"]
        self.negative = [i for i, g in enumerate(gens) if g.kind == "neg"]
        self.root_to_gen = {
            g.root.coeffs: i for i, g in enumerate(gens) if g.root is not None
        }
        self.name_to_gen = {g.name: i for i, g in enumerate(gens)}
        self._weight_to_gen = {}
        for i, g in enumerate(gens):
            if g.root is not None:
                self._weight_to_gen[g.weight] = i
        self.brackets = {}
        self._build_brackets()
        self._pbw_push_cache = {}
        self._pbw_mul_cache = {}

    # -- description ------------------------------------------------------

    @property
    def label(self):
        m, n = self.shape
        return "%s(%d|%d)" % (self.family, m, n)

    def positive_roots(self):
        return [r for line in self._ordering.lines for r in line.roots]

    def normal_ordering(self):
        return self._ordering

    def fundamental_rep(self):
        even = sum(1 for p in self.vec_parity if p == 0)
        odd = len(self.vec_parity) - even
        return MatrixRep((even, odd), dict(enumerate(self.rep)), self.vec_parity)

    # -- brackets -----------------------------------------------------------

    def _expand(self, mat, weight):
        """Expand a weight-homogeneous matrix in the generator basis."""
        if not mat:
            return {}
        if any(weight):
            gi = self._weight_to_gen.get(weight)
            if gi is None:
                raise StructureError("bracket leaves the root lattice span")
            target = self.rep[gi]
            key = next(iter(mat))
            if key not in target:
                raise StructureError("weight-space mismatch")
            coeff = mat[key] / target[key]
            check = mat_axpy(dict(mat), target, -coeff)
            if check:
                raise StructureError("root space not one-dimensional")
            return {gi: coeff}
        # Cartan part: solve over diagonal entries.
        rows = []
        rhs = []
        for d in range(self.dim):
            rows.append([self.rep[h].get((d, d), Fraction(0)) for h in self.cartan])
            rhs.append(mat.get((d, d), Fraction(0)))
        sol = linalg.solve(rows, rhs)
        if sol is None:
            raise StructureError("zero-weight bracket outside Cartan span")
        out = {h: c for h, c in zip(self.cartan, sol) if c}
        # Confirm there was nothing off-diagonal.
        recon = {}
        for h, c in out.items():
            mat_axpy(recon, self.rep[h], c)
        if mat_axpy(recon, mat, Fraction(-1)):
            raise StructureError("zero-weight bracket not diagonal")
        return out

    def _build_brackets(self):
        ng = len(self.gens)
        for i in range(ng):
            for j in range(ng):
                gi, gj = self.gens[i], self.gens[j]
                mat = supercommutator(
                    self.rep[i], gi.parity, self.rep[j], gj.parity, self.dim
                )
                w = tuple(a + b for a, b in zip(gi.weight, gj.weight))
                self.brackets[(i, j)] = self._expand(mat, w)

    def bracket(self, i, j):
        return self.brackets[(i, j)]

    def bracket_elems(self, x, y):
        """Supercommutator of rational combinations of basis elements."""
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.bracket(i, j).items():
                    s = out.get(k, Fraction(0)) + a * b * c
                    if s:
                        out[k] = s
                    elif k in out:
                        del out[k]
        return out

    def elem_parity(self, x):
        ps = {self.gens[i].parity for i in x}
        if len(ps) > 1:
            raise ValueError("inhomogeneous element")
        return ps.pop() if ps else 0

    def elem_weight(self, x):
        ws = {self.gens[i].weight for i in x}
        if len(ws) > 1:
            raise ValueError("element is not weight-homogeneous")
        return ws.pop() if ws else (0,) * self.n_eps

    def gen_elem(self, root_or_name):
        if isinstance(root_or_name, Root):
            return {self.root_to_gen[root_or_name.coeffs]: Fraction(1)}
        if isinstance(root_or_name, tuple):
            return {self.root_to_gen[root_or_name]: Fraction(1)}
        return {self.name_to_gen[root_or_name]: Fraction(1)}

    def cartan_dual(self, root):
        """Cartan element h with [h, e_root] = e_root and symmetric weights.

        h = sum(root_i * h_i) / (root, root), plain Euclidean normalization.
        """
        norm = Fraction(sum(c * c for c in root.coeffs))
        out = {}
        for i, c in zip(self.cartan, root.coeffs):
            if c:
                out[i] = Fraction(c) / norm
        return out

    def weight_on(self, helem, root):
        """Eigenvalue of ad(h) on the root vector e_root."""
        coeff_by_eps = {}
        for i, c in helem.items():
            pos = self.cartan.index(i)
            coeff_by_eps[pos] = c
        return sum(
            coeff_by_eps.get(k, Fraction(0)) * c for k, c in enumerate(root.coeffs)
        )

    def elem_str(self, x):
        if not x:
            return "0"
        parts = []
        for i in sorted(x):
            c = x[i]
            name = self.gens[i].name
            if c == 1:
                parts.append("+" + name)
            elif c == -1:
                parts.append("-" + name)
            else:
                parts.append(("+" if c > 0 else "-") + "%s*%s" % (abs(c), name))
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s


# --------------------------------------------------------------------------
# gl / sl construction


def _gl_lines(n_eps, odd_block):
    lines = []
    lo, hi = 0, n_eps - 1
    while lo < hi:
        roots = [
            _mk_root(_root_sum(n_eps, (1, lo), (-1, j)), odd_block)
            for j in range(lo + 1, hi + 1)
        ]
        theta = roots[-1]
        roots += [
            _mk_root(_root_sum(n_eps, (1, j), (-1, hi)), odd_block)
            for j in range(hi - 1, lo, -1)
        ]
        lines.append(Line(roots, theta))
        lo += 1
        hi -= 1
    return NormalOrdering(lines)


def _build_gl(family, m, n):
    n_eps = m + n
    if n_eps < 2:
        raise UnsupportedAlgebra("need m + n >= 2")
    odd_block = set(range(m, n_eps))
    vec_parity = tuple(0 if a < m else 1 for a in range(n_eps))
    vec_weight = [_eps(n_eps, a) for a in range(n_eps)]
    ordering = _gl_lines(n_eps, odd_block)

    gens = []
    rep = []

    def add(name, parity, weight, root, kind, mat):
        gens.append(Gen(name, parity, weight, root, kind))
        rep.append(mat)

    pos_roots = [r for line in ordering.lines for r in line.roots]
    for r in reversed(pos_roots):
        a = r.coeffs.index(1)
        b = r.coeffs.index(-1)
        neg = _mk_root(tuple(-c for c in r.coeffs), odd_block)
        add("x[%s]" % neg.label, neg.parity, neg.coeffs, neg, "neg",
            {(b, a): Fraction(1)})
    for a in range(n_eps):
        add("h%d" % (a + 1), 0, (0,) * n_eps, None, "cartan",
            {(a, a): Fraction(1)})
    for r in pos_roots:
        a = r.coeffs.index(1)
        b = r.coeffs.index(-1)
        add("x[%s]" % r.label, r.parity, r.coeffs, r, "pos",
            {(a, b): Fraction(1)})

    return SuperAlgebra(family, (m, n), gens, rep, vec_parity, vec_weight,
                        n_eps, odd_block, ordering)


# --------------------------------------------------------------------------
# osp construction


def _osp_root_system(M, two_n):
    so_m = M // 2
    n = two_n // 2
    n_eps = so_m + n
    odd_block = set(range(so_m, n_eps))
    roots = []
    for i in range(n_eps):
        for j in range(i + 1, n_eps):
            roots.append(_root_sum(n_eps, (1, i), (-1, j)))
            roots.append(_root_sum(n_eps, (1, i), (1, j)))
    if M % 2 == 1:
        for k in range(n_eps):
            roots.append(_eps(n_eps, k))
    for l in range(so_m, n_eps):
        roots.append(_root_sum(n_eps, (1, l), (1, l)))
    return n_eps, odd_block, [_mk_root(r, odd_block) for r in roots]


def _osp_lines(M, two_n):
    so_m = M // 2
    n = two_n // 2
    n_eps = so_m + n
    odd_block = set(range(so_m, n_eps))
    has_short = M % 2 == 1

    def root(*pairs):
        return _mk_root(_root_sum(n_eps, *pairs), odd_block)

    lines = []
    if so_m == 0:
        m_prime = 1
    elif so_m % 2 == 0:
        m_prime = so_m + 1
    else:
        m_prime = so_m + 2
    # pair lines on indices (a, b) = (0,1), (2,3), ... with b <= m_prime-2
    a = 0
    while so_m >= 1 and a + 1 <= m_prime - 2:
        b = a + 1
        roots = [root((1, a), (-1, b))]
        roots += [root((1, a), (-1, j)) for j in range(b + 1, n_eps)]
        if has_short:
            roots.append(root((1, a)))
        roots += [root((1, a), (1, j)) for j in range(n_eps - 1, b, -1)]
        theta = root((1, a), (1, b))
        roots.append(theta)
        roots += [root((1, b), (-1, j)) for j in range(b + 1, n_eps)]
        if has_short:
            roots.append(root((1, b)))
        roots += [root((1, b), (1, j)) for j in range(n_eps - 1, b, -1)]
        if b in odd_block:
            roots.append(root((1, b), (1, b)))
        lines.append(Line(roots, theta, extra=roots[0]))
        a += 2
    # single-index lines
    for l in range(m_prime - 1, n_eps):
        roots = [root((1, l), (-1, j)) for j in range(l + 1, n_eps)]
        if has_short:
            roots.append(root((1, l)))
        theta = root((1, l), (1, l))
        roots.append(theta)
        roots += [root((1, l), (1, j)) for j in range(n_eps - 1, l, -1)]
        lines.append(Line(roots, theta))
    return NormalOrdering(lines, m_prime=m_prime)


def _build_osp(M, two_n):
    if two_n < 2 or two_n % 2 or M < 1:
        raise UnsupportedAlgebra("osp needs M >= 1 and even second argument >= 2")
    so_m = M // 2
    n = two_n // 2
    n_eps = so_m + n
    odd_block = set(range(so_m, n_eps))
    dim = M + two_n

    # V basis: even block first, then odd block; antidiagonal forms.
    vec_weight = []
    vec_parity = []
    for i in range(so_m):
        vec_weight.append(_eps(n_eps, i))
        vec_parity.append(0)
    if M % 2 == 1:
        vec_weight.append((0,) * n_eps)
        vec_parity.append(0)
    for i in range(so_m - 1, -1, -1):
        vec_weight.append(_eps(n_eps, i, -1))
        vec_parity.append(0)
    for i in range(n):
        vec_weight.append(_eps(n_eps, so_m + i))
        vec_parity.append(1)
    for i in range(n - 1, -1, -1):
        vec_weight.append(_eps(n_eps, so_m + i, -1))
        vec_parity.append(1)
    vec_parity = tuple(vec_parity)

    form = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(M):
        form[i][M - 1 - i] = Fraction(1)
    for i in range(two_n):
        form[M + i][M + two_n - 1 - i] = Fraction(1 if i < n else -1)

    def root_space(alpha, parity):
        """Solve the infinitesimal form-invariance condition on one weight space."""
        spots = [
            (r, c)
            for r in range(dim)
            for c in range(dim)
            if tuple(a - b for a, b in zip(vec_weight[r], vec_weight[c])) == alpha
            and (vec_parity[r] + vec_parity[c]) % 2 == parity
        ]
        rows = []
        for v in range(dim):
            sgn = -1 if (parity and vec_parity[v]) else 1
            for w in range(dim):
                row = []
                for (r, c) in spots:
                    coeff = Fraction(0)
                    if c == v:
                        coeff += form[r][w]
                    if c == w:
                        coeff += sgn * form[v][r]
                    row.append(coeff)
                if any(row):
                    rows.append(row)
        basis = linalg.nullspace(rows, ncols=len(spots))
        return spots, basis

    ordering = _osp_lines(M, two_n)
    pos_roots = [r for line in ordering.lines for r in line.roots]

    def vector_for(root):
        spots, basis = root_space(root.coeffs, root.parity)
        if len(basis) != 1:
            raise StructureError(
                "root space of %s has dimension %d" % (root.label, len(basis))
            )
        vec = basis[0]
        lead = next(v for v in vec if v)
        return {s: v / lead for s, v in zip(spots, vec) if v}

    gens = []
    rep = []

    def add(name, parity, weight, root, kind, mat):
        gens.append(Gen(name, parity, weight, root, kind))
        rep.append(mat)

    for r in reversed(pos_roots):
        neg = _mk_root(tuple(-c for c in r.coeffs), odd_block)
        add("x[%s]" % neg.label, neg.parity, neg.coeffs, neg, "neg",
            vector_for(neg))
    pos_of = {}
    for d, w in enumerate(vec_weight):
        if sum(abs(c) for c in w) == 1:
            pos_of[w] = d
    for i in range(n_eps):
        dplus = pos_of[_eps(n_eps, i)]
        dminus = pos_of[_eps(n_eps, i, -1)]
        add("h%d" % (i + 1), 0, (0,) * n_eps, None, "cartan",
            {(dplus, dplus): Fraction(1), (dminus, dminus): Fraction(-1)})
    for r in pos_roots:
        add("x[%s]" % r.label, r.parity, r.coeffs, r, "pos", vector_for(r))

    return SuperAlgebra("osp", (M, two_n), gens, rep, vec_parity,
                        vec_weight, n_eps, odd_block, ordering)


# --------------------------------------------------------------------------
# public constructors


def build_algebra(family, m, n):
    if family in ("gl", "sl"):
        return _build_gl(family, m, n)
    if family == "osp":
        return _build_osp(m, n)
    raise UnsupportedAlgebra("unknown family %r" % family)


_SPEC_RE = re.compile(r"^\s*(gl|sl|osp)\s*\(\s*(\d+)\s*\|\s*(\d+)\s*\)\s*$")


def parse_algebra_spec(text):
    m = _SPEC_RE.match(text)
    if not m:
        raise UnsupportedAlgebra("cannot parse algebra spec %r" % text)
    return build_algebra(m.group(1), int(m.group(2)), int(m.group(3)))


def remove_short_roots(alg):
    """Restrict a B-family osp(2m+1|2n) to the D-family osp(2m|2n).

    All short roots and their vectors are deleted; the surviving generators
    keep their matrices, so brackets among them are literally unchanged.
    """
    M, two_n = alg.shape
    if alg.family != "osp" or M % 2 != 1 or M < 3:
        raise UnsupportedAlgebra("short-root removal needs osp(2m+1|2n), m >= 1")

    def survives(root):
        return root is None or sum(abs(c) for c in root.coeffs) != 1

    keep = [i for i, g in enumerate(alg.gens) if survives(g.root)]
    gens = [alg.gens[i] for i in keep]
    rep = [alg.rep[i] for i in keep]
    lines = []
    for line in alg.normal_ordering().lines:
        roots = [r for r in line.roots if survives(r)]
        lines.append(Line(roots, line.theta, extra=line.extra))
    ordering = NormalOrdering(lines, m_prime=alg.normal_ordering().m_prime)
    return SuperAlgebra("osp", (M - 1, two_n), gens, rep, alg.vec_parity,
                        alg.vec_weight, alg.n_eps, alg.odd_block, ordering)


def osp12_standard_basis(alg):
    """Elements (h, v+, v-, e+, e-) of osp(1|2) in the standard relations:
    [h, v+-] = +-v+-/2, {v+, v-} = -h/2, e+- = +-4 v+-^2.
    """
    if (alg.family, alg.shape) != ("osp", (1, 2)):
        raise UnsupportedAlgebra("this basis is specific to osp(1|2)")
    ep = alg.gen_elem((1,))
    em = alg.gen_elem((-1,))
    h1 = alg.gen_elem("h1")
    # {e_eps, e_-eps} = kappa * h1
    anti = alg.bracket_elems(ep, em)
    (hi, kappa), = anti.items()
    assert alg.gens[hi].name == "h1"
    h = {k: v / 2 for k, v in h1.items()}
    vplus = ep
    vminus = {k: -v / (4 * kappa) for k, v in em.items()}
    # e+- = +-4 (v+-)^2 = +-2 [v+-, v+-] / 2 = +-2 (v+-)^2 * 2
    sq_p = alg.bracket_elems(vplus, vplus)  # = 2 v+^2
    sq_m = alg.bracket_elems(vminus, vminus)
    eplus = {k: 2 * v for k, v in sq_p.items()}
    eminus = {k: -2 * v for k, v in sq_m.items()}
    return {"h": h, "v+": vplus, "v-": vminus, "e+": eplus, "e-": eminus}
