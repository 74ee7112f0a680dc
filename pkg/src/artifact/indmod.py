"""Parabolically induced modules M^{k,pm,I}(gamma) of the affine Hecke algebra.

The module has basis v_w = T_w v_e (w in W_0^I).  A Hecke element acts on v_w by
bringing h T_w into normal form and sending each T_u Y^lam to
gamma^lam eps_pm(T_{u_I}) v_{u^I}, where u = u^I u_I is the coset factorization.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Mapping

from .exactalg import (ParameterError, TorusPoint, fmt, in_TIk, matrix_rank, nullspace,
                       regularity_failures, rho_point)
from .hecke import HeckeAlgebra, HeckeElem
from .report import make_report, merge
from .rootdata import WeylElem


class ModuleVector:
    __slots__ = ("coords",)

    def __init__(self, coords: Mapping[WeylElem, object] | None = None, _clean=False):
        if _clean:
            self.coords = dict(coords)
        else:
            self.coords = {w: Fraction(c) for w, c in (coords or {}).items() if c}

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        out = dict(self.coords)
        for w, c in other.coords.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return ModuleVector(out, _clean=True)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "ModuleVector":
        c = Fraction(c)
        if not c:
            return ModuleVector()
        return ModuleVector({w: c * v for w, v in self.coords.items()}, _clean=True)

    def __getitem__(self, w: WeylElem) -> Fraction:
        return self.coords.get(w, Fraction(0))

    def __eq__(self, other):
        return isinstance(other, ModuleVector) and self.coords == other.coords

    def __hash__(self):
        return hash(frozenset(self.coords.items()))

    def is_zero(self) -> bool:
        return not self.coords

    def __repr__(self):
        return "{" + ", ".join(f"{w!r}: {c}" for w, c in sorted(self.coords.items())) + "}"

    def to_json(self) -> dict:
        return {",".join(map(str, w.word)) or "e": fmt(c) for w, c in sorted(self.coords.items())}


class InducedModule:
    """M^{k,pm,I}(gamma) with gamma in T_I^{k^{pm 1}}."""

    def __init__(self, alg: HeckeAlgebra, sign: int, I: Iterable[int], gamma: TorusPoint):
        self.alg = alg
        self.datum = alg.datum
        self.params = alg.params
        self.sign = sign
        self.I = frozenset(I)
        self.gamma = gamma
        if not in_TIk(self.datum, self.params, self.I, gamma, sign):
            raise ParameterError(f"gamma is not in T_I^(k^{sign:+d}) for I={sorted(self.I)}")
        self.basis = list(self.datum.min_coset_reps(self.I))
        self.index = {w: i for i, w in enumerate(self.basis)}
        self._act_cache: dict = {}

    def __repr__(self):
        return f"InducedModule({self.datum.label}, sign={self.sign:+d}, I={sorted(self.I)})"

    @property
    def dim(self) -> int:
        return len(self.basis)

    def v(self, w: WeylElem | None = None) -> ModuleVector:
        w = self.alg.group.identity if w is None else w
        return ModuleVector({w: Fraction(1)}, _clean=True)

    def chi(self, u: WeylElem) -> Fraction:
        return self.alg.epsilon_T(self.sign, u)

    def _reduce(self, u: WeylElem, lam, c: Fraction, out: dict):
        ubar, uunder = self.datum.coset_decomposition(u, self.I)
        out[ubar] += c * self.gamma.monomial(lam) * self.chi(uunder)

    def _key_on_basis(self, key, w: WeylElem) -> dict:
        """(T_u Y^lam) v_w as a coordinate dict."""
        ck = (key[0].index, key[1], w.index)
        hit = self._act_cache.get(ck)
        if hit is None:
            out: dict = defaultdict(Fraction)
            for (u, lam), c in self.alg._basis_times_basis(key[0], key[1], w, self.alg.zero_vec).items():
                self._reduce(u, lam, c, out)
            hit = {x: c for x, c in out.items() if c}
            self._act_cache[ck] = hit
        return hit

    def act(self, h: HeckeElem, vec: ModuleVector) -> ModuleVector:
        out: dict = defaultdict(Fraction)
        for w, a in vec.coords.items():
            for key, c in h.terms.items():
                for x, val in self._key_on_basis(key, w).items():
                    out[x] += a * c * val
        return ModuleVector({x: c for x, c in out.items() if c}, _clean=True)

    def matrix(self, h: HeckeElem) -> list[list[Fraction]]:
        """Matrix of h in the v-basis (rows = output coordinates)."""
        n = self.dim
        m = [[Fraction(0)] * n for _ in range(n)]
        for j, w in enumerate(self.basis):
            for x, c in self.act(h, self.v(w)).coords.items():
                m[self.index[x]][j] = c
        return m

    def as_list(self, vec: ModuleVector) -> list[Fraction]:
        return [vec[w] for w in self.basis]

    def from_list(self, xs) -> ModuleVector:
        return ModuleVector(dict(zip(self.basis, xs)))

    # -- intertwiner basis ---------------------------------------------------------

    def b(self, w: WeylElem) -> ModuleVector:
        return self.act(self.alg.intertwiner(w), self.v())

    def b_basis(self) -> tuple[list[ModuleVector], bool]:
        vecs = [self.b(w) for w in self.basis]
        return vecs, matrix_rank([self.as_list(v) for v in vecs]) == self.dim

    def outer_roots(self) -> list:
        inside = set(self.datum.positive_roots_of(self.I))
        return [b for b in self.datum.positive_roots if b not in inside]

    def b_leading_coefficient(self, w: WeylElem) -> Fraction:
        inv = set(self.datum.inversion_set(w))
        out = Fraction(1)
        for b in self.outer_roots():
            if b in inv:
                out *= 1 - self.gamma.monomial(self.datum.coroot[b])
        return out

    # -- (anti)spherical vector ------------------------------------------------------

    def spherical_vector(self) -> ModuleVector:
        return ModuleVector({w: self.chi(w) for w in self.basis})

    def spherical_space_dim(self) -> int:
        rows = []
        for i in range(1, self.datum.n + 1):
            m = self.matrix(self.alg.T(i))
            e = self.sign * self.alg.k[i] ** self.sign
            for r, row in enumerate(m):
                rows.append([x - (e if c == r else 0) for c, x in enumerate(row)])
        return len(nullspace(rows, self.dim))

    def one_exp_rhs(self) -> ModuleVector:
        """Closed b-basis expansion of the (anti)spherical vector."""
        s = self.sign
        d = self.datum
        pref = Fraction(1)
        outer = self.outer_roots()
        for b in outer:
            k = self.params.k_root(d, b)
            pref *= s * k ** s / (1 - self.gamma.monomial(d.coroot[b]))
        out = ModuleVector()
        for w in self.basis:
            inv = set(d.inversion_set(w))
            coeff = Fraction(1)
            for b in outer:
                if b not in inv:
                    k = self.params.k_root(d, b)
                    coeff *= s * k ** (-s) - s * k ** s * self.gamma.monomial(d.coroot[b])
            out = out + self.b(w).scale(pref * coeff)
        return out

    def weight_decomposition(self) -> dict:
        """Joint generalized Y-eigenspaces, keyed by the W_0^I-translates of gamma."""
        d = self.datum
        mats = [self.matrix(self.alg.Y(d.basis_vector(j))) for j in range(d.dim)]
        n = self.dim
        weights = []
        for w in self.basis:
            t = self.gamma.act(w)
            if t not in weights:
                weights.append(t)
        out = {}
        for t in weights:
            eig_rows, gen_rows = [], []
            for j, m in enumerate(mats):
                shifted = [[x - (t.coords[j] if r == c else 0) for c, x in enumerate(row)]
                           for r, row in enumerate(m)]
                eig_rows.extend(shifted)
                p = _identity(n)
                for _ in range(n):
                    p = _mat_mul(p, shifted)
                gen_rows.extend(p)
            out[t] = (len(nullspace(gen_rows, n)), len(nullspace(eig_rows, n)))
        calibrated = all(g == e for g, e in out.values()) and sum(g for g, _ in out.values()) == n
        return {"weights": out, "calibrated": calibrated,
                "multiplicity_free": calibrated and all(g == 1 for g, _ in out.values())}


def _identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def _mat_mul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b)) if a[i][k]), Fraction(0))
             for j in range(len(b[0]))] for i in range(len(a))]


# -- verifiers ---------------------------------------------------------------------

def verify_1exp(mod: InducedModule) -> dict:
    bad = regularity_failures(mod.datum, mod.params, mod.I, mod.gamma, mod.sign)
    bad = [b for b in bad if b[1] == "gamma^coroot = 1"]
    if bad:
        raise ParameterError(f"gamma^coroot = 1 for coroot {list(bad[0][0])}")
    lhs = mod.spherical_vector()
    rhs = mod.one_exp_rhs()
    return make_report("spherical vector = closed b-basis expansion", lhs == rhs,
                       {"lhs": lhs, "rhs": rhs}, module=repr(mod))


def verify_module_axioms(mod: InducedModule, elems: list[HeckeElem]) -> dict:
    """act(h1 h2, v) = act(h1, act(h2, v)) on all pairs and all basis vectors."""
    alg = mod.alg
    parts = []
    for h1 in elems:
        for h2 in elems:
            prod = alg.mul(h1, h2)
            for w in mod.basis:
                v = mod.v(w)
                ok = mod.act(prod, v) == mod.act(h1, mod.act(h2, v))
                parts.append(make_report("module associativity", ok, {"basis": w.word}))
    return merge("module axioms", parts)


def verify_vaction(mod: InducedModule) -> dict:
    """Generator action on v_w follows the A/B/C case split."""
    d, alg = mod.datum, mod.alg
    parts = []
    for i in range(1, d.n + 1):
        k = alg.k[i]
        si = alg.group.simple(i)
        for w in mod.basis:
            cls, _ = d.abc_classify(mod.I, i, w)
            got = mod.act(alg.T(i), mod.v(w))
            if cls == "A":
                want = mod.v(w).scale(k - 1 / k) + mod.v(si * w)
            elif cls == "B":
                want = mod.v(si * w)
            else:
                want = mod.v(w).scale(mod.sign * k ** mod.sign)
            parts.append(make_report(f"T_{i} v_w class {cls}", got == want, {"w": w.word}))
    lam_list = [d.basis_vector(j) for j in range(d.dim)]
    for lam in lam_list:
        got = mod.act(alg.Y(lam), mod.v())
        parts.append(make_report("Y^lam v_e = gamma^lam v_e",
                                 got == mod.v().scale(mod.gamma.monomial(lam)), {"lam": lam}))
    return merge("standard basis action", parts)


def verify_b_basis(mod: InducedModule) -> dict:
    d, alg = mod.datum, mod.alg
    parts = []
    for w in d.group.elements:
        bw = mod.b(w)
        if w in mod.index:
            lead = bw[w]
            parts.append(make_report("leading coefficient of b_w", lead == mod.b_leading_coefficient(w),
                                     {"w": w.word, "got": lead}))
            upper = [u for u in bw.coords if u != w and not u < w]
            parts.append(make_report("b_w triangular", all(u.length < w.length for u in bw.coords if u != w),
                                     {"w": w.word, "off": [u.word for u in upper]}))
            t = mod.gamma.act(w)
            for j in range(d.dim):
                lam = d.basis_vector(j)
                ok = mod.act(alg.Y(lam), bw) == bw.scale(t.monomial(lam))
                parts.append(make_report("b_w is a weight vector", ok, {"w": w.word, "lam": lam}))
        else:
            parts.append(make_report("I_w v_e = 0 off W_0^I", bw.is_zero(), {"w": w.word}))
    return merge("intertwiner basis", parts)


def verify_baction(mod: InducedModule) -> dict:
    """T_i on b_w for all classes, with the rational coefficients of the closed formulas."""
    d, alg = mod.datum, mod.alg
    parts = []
    for i in range(1, d.n + 1):
        k = alg.k[i]
        si = alg.group.simple(i)
        for w in mod.basis:
            cls, _ = d.abc_classify(mod.I, i, w)
            got = mod.act(alg.T(i), mod.b(w))
            if cls == "C":
                want = mod.b(w).scale(mod.sign * k ** mod.sign)
            else:
                beta = d.act_on_root(w.inverse(), d.simple_roots[i - 1])
                x = mod.gamma.monomial(d.coroot[beta])
                tail = mod.b(w).scale((1 / k - k) * x / (1 - x))
                if cls == "A":
                    head = (k - x / k) * (k - 1 / (k * x)) / (1 - x)
                else:
                    head = 1 / (1 - x)
                want = mod.b(si * w).scale(head) + tail
            parts.append(make_report(f"T_{i} b_w class {cls}", got == want, {"w": w.word}))
    return merge("intertwiner basis action", parts)


def verify_spherical(mod: InducedModule) -> dict:
    alg = mod.alg
    one = mod.spherical_vector()
    parts = []
    for i in range(1, mod.datum.n + 1):
        e = mod.sign * alg.k[i] ** mod.sign
        parts.append(make_report(f"T_{i} acts on spherical vector by its character",
                                 mod.act(alg.T(i), one) == one.scale(e)))
    parts.append(make_report("spherical subspace is one-dimensional", mod.spherical_space_dim() == 1))
    return merge("spherical vector", parts)


def verify_central_character(mod: InducedModule, coweights: list) -> dict:
    """Orbit sums f(Y) act by f(gamma) on the whole module."""
    d, alg = mod.datum, mod.alg
    parts = []
    for lam in coweights:
        orb = d.orbit(lam)
        f = alg.zero()
        val = Fraction(0)
        for mu in orb:
            f = f + alg.Y(mu)
            val += mod.gamma.monomial(mu)
        ok = all(mod.act(f, mod.v(w)) == mod.v(w).scale(val) for w in mod.basis)
        parts.append(make_report("central character", ok, {"lam": lam}))
    return merge("central character", parts)


def verify_rho_I(mod: InducedModule) -> dict:
    """The parabolic longest element moves gamma by rho_I^k."""
    d = mod.datum
    w0 = d.group.longest
    under = d.coset_decomposition(w0, mod.I)[1]
    lhs = mod.gamma.act(under)
    rhs = rho_point(d, mod.params, mod.I) * mod.gamma
    if mod.sign < 0:
        rhs = rho_point(d, mod.params.inverse_k(), mod.I) * mod.gamma
    return make_report("w0_I gamma = rho_I gamma", lhs == rhs, {"lhs": lhs, "rhs": rhs})
