"""Root data, finite Weyl groups and extended affine Weyl groups.

Lattice conventions.  A datum carries a lattice L of rank ``dim`` (the
coweight lattice, or Z^m in the GL case).  Lattice vectors are integer
tuples.  A root is stored as an integer functional on L (a row vector), so
``pair(lam, alpha)`` is a dot product.  For semisimple types the basis of L
is the fundamental coweights, hence a root functional is just the vector of
its simple-root coordinates.  Coroots are lattice vectors, and a scalar
product on L is given by a rational Gram matrix with long roots of squared
length 2.

An extended affine Weyl group element is a pair (u, lam) meaning u*tau(lam),
with product (u, lam)(v, mu) = (uv, v^-1 lam + mu).  Affine roots are pairs
(s, beta) meaning s*c + beta, with beta a coroot and s rational.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Iterable, Sequence

Vec = tuple[int, ...]
Mat = tuple[tuple[int, ...], ...]


class RootDataError(ValueError):
    pass


# -- small integer / rational linear algebra --------------------------------

def _matmul(a: Mat, b: Mat) -> Mat:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def _matvec(a: Mat, v: Sequence[int]) -> Vec:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def _identity(d: int) -> Mat:
    return tuple(tuple(int(i == j) for j in range(d)) for i in range(d))


def rational_inverse(a: Sequence[Sequence]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over Q."""
    d = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(d)]
         for i, row in enumerate(a)]
    for c in range(d):
        p = next((r for r in range(c, d) if m[r][c] != 0), None)
        if p is None:
            raise RootDataError("singular matrix")
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [x / piv for x in m[c]]
        for r in range(d):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[d:] for row in m]


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _add(a: Sequence[int], b: Sequence[int]) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Sequence[int], b: Sequence[int]) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def _neg(a: Sequence[int]) -> Vec:
    return tuple(-x for x in a)


def _scale(c: int, a: Sequence[int]) -> Vec:
    return tuple(c * x for x in a)


def lex_positive(v: Sequence) -> bool:
    for x in v:
        if x:
            return x > 0
    return False


# -- Cartan matrices ----------------------------------------------------------

def cartan_matrix(letter: str, rank: int) -> Mat:
    """Bourbaki-labelled Cartan matrix with A[i][j] = <alpha_i^vee, alpha_j>."""
    letter = letter.upper()
    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    if letter in "ABC":
        if letter == "A" and n < 1 or letter in "BC" and n < 2:
            raise RootDataError(f"bad rank {n} for type {letter}")
        for i in range(n - 1):
            a[i][i + 1] = a[i + 1][i] = -1
        if letter == "B":
            a[n - 1][n - 2] = -2
        elif letter == "C":
            a[n - 2][n - 1] = -2
    elif letter == "G" and n == 2:
        a = [[2, -3], [-1, 2]]
    elif letter == "D" and n >= 4:
        for i in range(n - 2):
            a[i][i + 1] = a[i + 1][i] = -1
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
    else:
        raise RootDataError(f"unsupported type {letter}{n}")
    return tuple(tuple(r) for r in a)


def _root_norms(a: Mat) -> list[Fraction]:
    """Squared lengths of the simple roots, longest normalized to 2."""
    n = len(a)
    norms: list[Fraction | None] = [None] * n
    norms[0] = Fraction(1)
    todo = deque([0])
    while todo:
        i = todo.popleft()
        for j in range(n):
            if a[i][j] and norms[j] is None:
                # |alpha_j|^2 / |alpha_i|^2 = A_ij / A_ji
                norms[j] = norms[i] * Fraction(a[i][j], a[j][i])
                todo.append(j)
    if any(x is None for x in norms):
        raise RootDataError("Cartan matrix is not connected")
    top = max(norms)
    return [x * 2 / top for x in norms]


# -- Weyl group elements --------------------------------------------------------

class WeylElem:
    """Element of the finite Weyl group, canonicalized by its matrix on L."""

    __slots__ = ("matrix", "length", "word", "index", "group", "_hash")

    def __init__(self, matrix: Mat, length: int, word: tuple[int, ...], index: int,
                 group: "WeylGroup"):
        self.matrix = matrix
        self.length = length
        self.word = word
        self.index = index
        self.group = group
        self._hash = hash(matrix)

    def __eq__(self, other):
        return isinstance(other, WeylElem) and self.matrix == other.matrix

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (self.length, self.word) < (other.length, other.word)

    def __repr__(self):
        return "e" if not self.word else "s" + "s".join(map(str, self.word))

    def __mul__(self, other: "WeylElem") -> "WeylElem":
        return self.group.mul(self, other)

    def inverse(self) -> "WeylElem":
        return self.group.inverse(self)

    def act(self, v: Sequence[int]) -> Vec:
        return _matvec(self.matrix, v)


@dataclass(frozen=True)
class ExtAffineWeylElem:
    """u * tau(lam) with u in W_0 and lam in the lattice."""

    u: WeylElem
    lam: Vec

    def __repr__(self):
        return f"({self.u!r}, {list(self.lam)})"


@dataclass(frozen=True)
class ParabolicIndex:
    I: frozenset
    Istar: frozenset


@dataclass(frozen=True)
class OmegaElem:
    elem: ExtAffineWeylElem
    perm: tuple[int, ...]  # perm[i] = omega(i) on {0..n}
    label: int


class RootDatum:
    """Finite root system with its lattice data and Weyl group machinery.

    Usually built through :func:`root_datum` or :func:`gl_datum`.
    """

    def __init__(self, cartan: Sequence[Sequence[int]], label: str | None = None,
                 gl_rank: int = 0):
        self.cartan: Mat = tuple(tuple(int(x) for x in r) for r in cartan)
        self.n = len(self.cartan)
        self.gl_rank = gl_rank
        self.gl_mode = gl_rank > 0
        self.label = label or "custom"
        n = self.n
        if self.gl_mode:
            if n != gl_rank - 1:
                raise RootDataError("GL datum needs a type A_{m-1} Cartan matrix")
            d = gl_rank
            self.dim = d
            e = lambda i: tuple(int(j == i) for j in range(d))
            self.simple_roots = tuple(_sub(e(i), e(i + 1)) for i in range(n))
            self.simple_coroots = self.simple_roots
            self.norms = [Fraction(2)] * n
            self.gram = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
        else:
            for i in range(n):
                for j in range(n):
                    if (i == j) != (self.cartan[i][j] == 2) or (i != j and self.cartan[i][j] > 0):
                        raise RootDataError("not a Cartan matrix")
                    if (self.cartan[i][j] == 0) != (self.cartan[j][i] == 0):
                        raise RootDataError("not a Cartan matrix")
            self.dim = n
            self.simple_roots = tuple(tuple(int(j == i) for j in range(n)) for i in range(n))
            self.simple_coroots = self.cartan  # row i = alpha_i^vee in coweight coordinates
            self.norms = _root_norms(self.cartan)
            inv_t = rational_inverse([list(col) for col in zip(*self.cartan)])
            self.gram = [[2 / self.norms[i] * inv_t[i][j] for j in range(n)] for i in range(n)]
        self.m = 1
        for row in self.gram:
            for x in row:
                self.m = lcm(self.m, x.denominator)
        for i in range(n):
            for j in range(n):
                if _dot(self.simple_coroots[i], self.simple_roots[j]) != self.cartan[i][j]:
                    raise RootDataError("coroot pairing does not reproduce the Cartan matrix")
        self._build_roots()
        self.group = WeylGroup(self)
        self._aff_len_cache: dict = {}
        self._word_cache: dict = {}

    # -- roots ------------------------------------------------------------------

    def _build_roots(self):
        n = self.n
        coroot = {}
        norm = {}
        todo = deque()
        for i in range(n):
            coroot[self.simple_roots[i]] = self.simple_coroots[i]
            norm[self.simple_roots[i]] = self.norms[i]
            todo.append(self.simple_roots[i])
        while todo:
            beta = todo.popleft()
            bv = coroot[beta]
            for i in range(n):
                ai, aiv = self.simple_roots[i], self.simple_coroots[i]
                nb = _sub(beta, _scale(_dot(beta, aiv), ai))
                if nb not in coroot:
                    coroot[nb] = _sub(bv, _scale(_dot(ai, bv), aiv))
                    norm[nb] = norm[beta]
                    todo.append(nb)
        self.coroot = coroot
        self.root_norm = norm
        self.roots = frozenset(coroot)
        self.positive_roots = sorted((b for b in coroot if lex_positive(b)),
                                     key=lambda b: (self.height(b), b))
        self.root_of_coroot = {v: k for k, v in coroot.items()}
        self.positive_coroots = frozenset(coroot[b] for b in self.positive_roots)
        self.phi = max(self.positive_roots, key=lambda b: (self.height(b), norm[b]))
        self.phi_vee = coroot[self.phi]
        if norm[self.phi] != 2:
            raise RootDataError("highest root is not long")

    @cached_property
    def rho_vee(self) -> Vec:
        """Half sum of positive coroots; in the GL case the integral shift (m-1, ..., 0)."""
        if self.gl_mode:
            return tuple(range(self.dim - 1, -1, -1))
        return tuple([1] * self.n)

    def height(self, beta: Sequence[int]) -> int:
        if self.gl_mode:
            return _dot(beta, range(self.dim - 1, -1, -1))
        return sum(beta)

    def pair(self, lam: Sequence[int], beta: Sequence[int]) -> int:
        """<lam, beta> for a lattice vector lam and a root functional beta."""
        return _dot(lam, beta)

    def inner(self, lam: Sequence[int], mu: Sequence[int]) -> Fraction:
        """Scalar product of two lattice vectors."""
        g = self.gram
        return sum((g[i][j] * lam[i] * mu[j] for i in range(self.dim) for j in range(self.dim)
                    if lam[i] and mu[j]), Fraction(0))

    def inner_m(self, lam: Sequence[int], mu: Sequence[int]) -> int:
        """m * <lam, mu>, an integer."""
        v = self.inner(lam, mu) * self.m
        assert v.denominator == 1
        return int(v)

    def coroot_norm_key(self, beta: Sequence[int]) -> Fraction:
        """Squared length of the root beta (functional)."""
        return self.root_norm[tuple(beta)]

    def is_dominant(self, lam: Sequence[int]) -> bool:
        return all(_dot(lam, a) >= 0 for a in self.simple_roots)

    def fundamental_coweight(self, j: int) -> Vec:
        """varpi_j^vee (1-based); in the GL case eps_1 + ... + eps_j."""
        if self.gl_mode:
            return tuple(int(i < j) for i in range(self.dim))
        return tuple(int(i == j - 1) for i in range(self.n))

    def basis_vector(self, i: int) -> Vec:
        return tuple(int(j == i) for j in range(self.dim))

    def dominant_rep(self, lam: Sequence[int]) -> tuple[Vec, WeylElem]:
        """Dominant element of W_0 lam and a w with w(lam) dominant."""
        lam = tuple(lam)
        w = self.group.identity
        changed = True
        while changed:
            changed = False
            for i in range(self.n):
                if _dot(lam, self.simple_roots[i]) < 0:
                    lam = self.reflect(i + 1, lam)
                    w = self.group.simple(i + 1) * w
                    changed = True
        return lam, w

    def reflect(self, i: int, lam: Sequence[int]) -> Vec:
        """s_i lam for 1 <= i <= n."""
        a, av = self.simple_roots[i - 1], self.simple_coroots[i - 1]
        return _sub(lam, _scale(_dot(lam, a), av))

    def orbit(self, lam: Sequence[int]) -> list[Vec]:
        seen = {tuple(lam)}
        todo = [tuple(lam)]
        while todo:
            x = todo.pop()
            for i in range(1, self.n + 1):
                y = self.reflect(i, x)
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return sorted(seen)

    def act_on_root(self, w: WeylElem, beta: Sequence[int]) -> Vec:
        """w(beta) for a root functional, via its coroot."""
        return self.root_of_coroot[w.act(self.coroot[tuple(beta)])]

    # -- finite parabolic combinatorics -----------------------------------------

    def parabolic(self, I: Iterable[int]) -> ParabolicIndex:
        I = frozenset(I)
        if not I <= set(range(1, self.n + 1)):
            raise RootDataError(f"parabolic index {sorted(I)} out of range")
        w0bar = self.coset_decomposition(self.group.longest, I)[0]
        star = set()
        for i in I:
            img = self.act_on_root(w0bar, self.simple_roots[i - 1])
            if img not in self.simple_roots:
                raise RootDataError("w0bar does not map I to simple roots")
            star.add(self.simple_roots.index(img) + 1)
        return ParabolicIndex(I, frozenset(star))

    def parabolic_subgroup(self, I: Iterable[int]) -> list[WeylElem]:
        I = sorted(set(I))
        g = self.group
        seen = {g.identity}
        todo = [g.identity]
        while todo:
            w = todo.pop()
            for i in I:
                x = w * g.simple(i)
                if x not in seen:
                    seen.add(x)
                    todo.append(x)
        return sorted(seen)

    def min_coset_reps(self, I: Iterable[int]) -> list[WeylElem]:
        I = frozenset(I)
        key = ("reps", I)
        if key not in self._word_cache:
            g = self.group
            self._word_cache[key] = [w for w in g.elements
                                     if all((w * g.simple(i)).length > w.length for i in I)]
        return self._word_cache[key]

    def coset_decomposition(self, w: WeylElem, I: Iterable[int]) -> tuple[WeylElem, WeylElem]:
        """(wbar, wunder) with w = wbar * wunder, wbar minimal in w W_{0,I}."""
        I = frozenset(I)
        key = ("dec", I)
        table = self._word_cache.get(key)
        if table is None:
            table = {}
            reps = self.min_coset_reps(I)
            sub = self.parabolic_subgroup(I)
            for u in reps:
                for v in sub:
                    table[u * v] = (u, v)
            self._word_cache[key] = table
        return table[w]

    def abc_classify(self, I: Iterable[int], i: int, w: WeylElem) -> tuple[str, int | None]:
        I = frozenset(I)
        if w not in set(self.min_coset_reps(I)):
            raise RootDataError(f"{w!r} is not a minimal coset representative")
        g = self.group
        x = g.simple(i) * w
        if x.length < w.length:
            return "A", None
        if x in set(self.min_coset_reps(I)):
            return "B", None
        for j in I:
            if x == w * g.simple(j):
                return "C", j
        raise AssertionError("ABC classification failed")

    def positive_roots_of(self, I: Iterable[int]) -> list[Vec]:
        """R_0^{I,+}: positive roots in the span of alpha_i, i in I."""
        I = set(I)
        out = []
        for b in self.positive_roots:
            coords = self.simple_coords(b)
            if all(c == 0 for j, c in enumerate(coords) if j + 1 not in I):
                out.append(b)
        return out

    def simple_coords(self, beta: Sequence[int]) -> Vec:
        if not self.gl_mode:
            return tuple(beta)
        # eps_i - eps_j = alpha_i + ... + alpha_{j-1}
        out, acc = [], 0
        for x in beta[:-1]:
            acc += x
            out.append(acc)
        return tuple(out)

    def inversion_set(self, w: WeylElem) -> list[Vec]:
        """R_0^+ cap w^{-1} R_0^-."""
        return [b for b in self.positive_roots if w.act(self.coroot[b]) not in self.positive_coroots]

    # -- extended affine Weyl group ---------------------------------------------

    def ext(self, u: WeylElem | None = None, lam: Sequence[int] | None = None) -> ExtAffineWeylElem:
        return ExtAffineWeylElem(u or self.group.identity,
                                 tuple(lam) if lam is not None else (0,) * self.dim)

    def translation(self, lam: Sequence[int]) -> ExtAffineWeylElem:
        return self.ext(None, lam)

    @cached_property
    def identity(self) -> ExtAffineWeylElem:
        return self.ext()

    def mul(self, x: ExtAffineWeylElem, y: ExtAffineWeylElem) -> ExtAffineWeylElem:
        return ExtAffineWeylElem(x.u * y.u, _add(y.u.inverse().act(x.lam), y.lam))

    def inv(self, x: ExtAffineWeylElem) -> ExtAffineWeylElem:
        return ExtAffineWeylElem(x.u.inverse(), _neg(x.u.act(x.lam)))

    def prod(self, elems: Iterable[ExtAffineWeylElem]) -> ExtAffineWeylElem:
        out = self.identity
        for x in elems:
            out = self.mul(out, x)
        return out

    def affine_simple(self, j: int) -> ExtAffineWeylElem:
        """s_j for 0 <= j <= n; s_0 = s_phi tau(-phi^vee)."""
        if j == 0:
            return self.ext(self.group.reflection(self.phi), _neg(self.phi_vee))
        return self.ext(self.group.simple(j))

    def affine_simple_root(self, j: int) -> tuple[Fraction, Vec]:
        """a_j as (c-coefficient, coroot)."""
        if j == 0:
            return Fraction(1), _neg(self.phi_vee)
        return Fraction(0), self.simple_coroots[j - 1]

    def act_affine_root(self, x: ExtAffineWeylElem, a: tuple[Fraction, Vec]) -> tuple[Fraction, Vec]:
        s, beta = a
        return s - self.inner(x.lam, beta), x.u.act(beta)

    def affine_root_positive(self, a: tuple[Fraction, Vec]) -> bool:
        s, beta = a
        return s > 0 or (s == 0 and beta in self.positive_coroots)

    def braid_order(self, i: int, j: int) -> int | None:
        """Order m_ij of s_i s_j in W (None when it exceeds 6, i.e. infinite)."""
        x = self.mul(self.affine_simple(i), self.affine_simple(j))
        y, o = x, 1
        while y != self.identity and o < 7:
            y = self.mul(y, x)
            o += 1
        return o if o <= 6 else None

    def affine_length(self, x: ExtAffineWeylElem) -> int:
        """Sum over positive roots of |<lam, alpha> + [u alpha < 0]|."""
        key = (x.u.index, x.lam)
        val = self._aff_len_cache.get(key)
        if val is None:
            val = 0
            for b in self.positive_roots:
                neg = x.u.act(self.coroot[b]) not in self.positive_coroots
                val += abs(_dot(x.lam, b) + int(neg))
            self._aff_len_cache[key] = val
        return val

    def reduced_word(self, x: ExtAffineWeylElem) -> tuple[tuple[int, ...], ExtAffineWeylElem]:
        """(j_1, ..., j_l), omega with x = s_{j_1} ... s_{j_l} omega and l(omega) = 0."""
        key = (x.u.index, x.lam)
        hit = self._word_cache.get(key)
        if hit is not None:
            return hit
        word = []
        cur = x
        ell = self.affine_length(cur)
        while ell > 0:
            for j in range(self.n + 1):
                y = self.mul(self.affine_simple(j), cur)
                ly = self.affine_length(y)
                if ly < ell:
                    word.append(j)
                    cur, ell = y, ly
                    break
            else:
                raise AssertionError("no left descent found")
        out = (tuple(word), cur)
        self._word_cache[key] = out
        return out

    def affine_length_bfs(self, x: ExtAffineWeylElem, bound: int = 8) -> int | None:
        """Length by breadth-first search over words in s_0..s_n times Omega."""
        target = x
        omegas = [o.elem for o in self.omega_group()] if not self.gl_mode else None
        frontier = {self.identity}
        seen = set(frontier)
        for ell in range(bound + 1):
            for y in frontier:
                if self.gl_mode:
                    d = self.mul(self.inv(y), target)
                    if self.affine_length(d) == 0 and d == self.zeta_power(sum(d.lam)):
                        return ell
                elif any(self.mul(y, o) == target for o in omegas):
                    return ell
            nxt = set()
            for y in frontier:
                for j in range(self.n + 1):
                    z = self.mul(y, self.affine_simple(j))
                    if z not in seen:
                        seen.add(z)
                        nxt.add(z)
            frontier = nxt
        return None

    # -- Omega ------------------------------------------------------------------

    def _perm_of(self, x: ExtAffineWeylElem) -> tuple[int, ...]:
        simple = [self.affine_simple_root(j) for j in range(self.n + 1)]
        perm = []
        for j in range(self.n + 1):
            img = self.act_affine_root(x, simple[j])
            if img not in simple:
                raise AssertionError("length zero element does not permute simple roots")
            perm.append(simple.index(img))
        return tuple(perm)

    @cached_property
    def special_nodes(self) -> list[int]:
        """J = {0} u {j : <varpi_j^vee, phi> = 1}."""
        return [0] + [j for j in range(1, self.n + 1) if self.simple_coords(self.phi)[j - 1] == 1]

    def omega_group(self) -> list[OmegaElem]:
        """{u_j}_{j in J} with u_j = tau(varpi_j^vee) v_j^{-1}; in GL mode just zeta."""
        if self.gl_mode:
            z = self.zeta_power(1)
            return [OmegaElem(z, self._perm_of(z), 1)]
        if "omega" in self._word_cache:
            return self._word_cache["omega"]
        out = []
        for j in self.special_nodes:
            if j == 0:
                x = self.identity
            else:
                vj = self.minimal_to_antidominant(self.fundamental_coweight(j))
                x = self.mul(self.translation(self.fundamental_coweight(j)),
                             self.ext(vj.inverse()))
            if self.affine_length(x) != 0:
                raise AssertionError(f"u_{j} has nonzero length")
            out.append(OmegaElem(x, self._perm_of(x), j))
        self._word_cache["omega"] = out
        return out

    def minimal_to_antidominant(self, lam: Sequence[int]) -> WeylElem:
        cands = [w for w in self.group.elements
                 if all(_dot(w.act(lam), a) <= 0 for a in self.simple_roots)]
        return min(cands)

    def omega_of(self, x: ExtAffineWeylElem) -> OmegaElem:
        if self.gl_mode:
            z = x
            return OmegaElem(z, self._perm_of(z), sum(z.lam))
        for o in self.omega_group():
            if o.elem == x:
                return o
        raise RootDataError("not a length zero element")

    def zeta_power(self, p: int) -> ExtAffineWeylElem:
        """zeta^p with zeta = sigma tau(eps_m), sigma = s_1 ... s_{m-1}."""
        if not self.gl_mode:
            raise RootDataError("zeta only exists in GL mode")
        g = self.group
        sigma = g.from_word(range(1, self.n + 1))
        zeta = self.ext(sigma, self.basis_vector(self.dim - 1))
        out = self.identity
        base = zeta if p >= 0 else self.inv(zeta)
        for _ in range(abs(p)):
            out = self.mul(out, base)
        return out

    # -- serialization ------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "type": self.label,
            "rank": self.n,
            "cartan": [list(r) for r in self.cartan],
            "positive_roots": [list(self.simple_coords(b)) for b in self.positive_roots],
            "m": self.m,
            "gl_mode": self.gl_mode,
        }

    def __repr__(self):
        return f"RootDatum({self.label})"


class WeylGroup:
    """Exhaustively enumerated finite Weyl group of a datum."""

    MAX_RANK = 6

    def __init__(self, datum: RootDatum):
        if datum.n > self.MAX_RANK:
            raise RootDataError(f"rank {datum.n} exceeds the enumeration bound {self.MAX_RANK}")
        self.datum = datum
        d = datum.dim
        gens = []
        for i in range(datum.n):
            a, av = datum.simple_roots[i], datum.simple_coroots[i]
            gens.append(tuple(tuple(int(r == c) - av[r] * a[c] for c in range(d)) for r in range(d)))
        self._gens = gens
        e = WeylElem(_identity(d), 0, (), 0, self)
        self.elements: list[WeylElem] = [e]
        self._by_matrix = {e.matrix: e}
        todo = deque([e])
        while todo:
            w = todo.popleft()
            for i, s in enumerate(gens):
                mat = _matmul(w.matrix, s)
                if mat not in self._by_matrix:
                    x = WeylElem(mat, w.length + 1, w.word + (i + 1,), len(self.elements), self)
                    self.elements.append(x)
                    self._by_matrix[mat] = x
                    todo.append(x)
        self._mul_cache: dict = {}
        self._inv_cache: dict = {}
        self.identity = e
        self.longest = max(self.elements, key=lambda w: w.length)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def simple(self, i: int) -> WeylElem:
        return self._by_matrix[self._gens[i - 1]]

    def from_matrix(self, mat: Mat) -> WeylElem:
        return self._by_matrix[mat]

    def from_word(self, word: Iterable[int]) -> WeylElem:
        w = self.identity
        for i in word:
            w = w * self.simple(i)
        return w

    def reflection(self, beta: Sequence[int]) -> WeylElem:
        d = self.datum
        bv = d.coroot[tuple(beta)]
        mat = tuple(tuple(int(r == c) - bv[r] * beta[c] for c in range(d.dim)) for r in range(d.dim))
        return self._by_matrix[mat]

    def mul(self, a: WeylElem, b: WeylElem) -> WeylElem:
        key = (a.index, b.index)
        r = self._mul_cache.get(key)
        if r is None:
            r = self._by_matrix[_matmul(a.matrix, b.matrix)]
            self._mul_cache[key] = r
        return r

    def inverse(self, a: WeylElem) -> WeylElem:
        r = self._inv_cache.get(a.index)
        if r is None:
            r = self.from_word(reversed(a.word))
            self._inv_cache[a.index] = r
        return r


_DATUM_CACHE: dict = {}


def root_datum(letter: str, rank: int) -> RootDatum:
    """Datum of type A_n (n <= 5), B_2, C_2, G_2, B_3 or C_3 (cached)."""
    key = (letter.upper(), rank)
    if key not in _DATUM_CACHE:
        _DATUM_CACHE[key] = RootDatum(cartan_matrix(letter, rank), f"{letter.upper()}{rank}")
    return _DATUM_CACHE[key]


def gl_datum(m: int) -> RootDatum:
    """GL_m datum: lattice Z^m, roots eps_i - eps_j, Omega generated by zeta."""
    if m < 2:
        raise RootDataError("GL_m needs m >= 2")
    key = ("GL", m)
    if key not in _DATUM_CACHE:
        _DATUM_CACHE[key] = RootDatum(cartan_matrix("A", m - 1), f"GL{m}", gl_rank=m)
    return _DATUM_CACHE[key]
