"""Nonsymmetric and (anti)symmetric Macdonald polynomials and Macdonald operators.

E_lam(k^{-1}, q) is found as the kernel of a generic combination of the
Cherednik-Dunkl operators pi^{k^{-1},q}(Y^{varpi_j}) on the saturated span of
lam, then certified by exact eigenvalue residuals.  The q-difference operators
D_f^{k,q,pm} are extracted from pi^{k^{-1},q}(f(Y)) by rewriting each finite
Weyl group part against the frame w_pm.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exactalg import (ExactAlgError, G_sign, LaurentPoly, LocalizedFn, Params, TorusPoint, row_reduce,
                       delta_point, fmt, nullspace, unit_point)
from .opalg import (OpContext, ScalarOpSum, apply_finite_T, apply_Y, op_context, pi_Y, w_pm)
from .report import make_report, merge
from .rootdata import RootDatum, Vec, WeylElem


class GenericityError(ExactAlgError):
    """The eigen-system is degenerate at the supplied parameters."""


def eta(x: int) -> int:
    return 1 if x > 0 else -1


def gamma_lambda(datum: RootDatum, params: Params, lam: Sequence[int]) -> TorusPoint:
    """q^lam prod_{alpha > 0} k_alpha^{-eta(<lam, alpha>) alpha}."""
    coords = []
    for j in range(datum.dim):
        b = datum.basis_vector(j)
        v = params.q_root ** datum.inner_m(lam, b)
        for a in datum.positive_roots:
            e = -eta(datum.pair(lam, a)) * datum.pair(b, a)
            if e:
                v *= params.k_root(datum, a) ** e
        coords.append(v)
    return TorusPoint(tuple(coords))


def saturated_set(datum: RootDatum, lam: Sequence[int]) -> list[Vec]:
    """Smallest W_0-stable set containing lam and closed under root strings."""
    seen = set(datum.orbit(lam))
    todo = list(seen)
    while todo:
        mu = todo.pop()
        for a in datum.positive_roots:
            n = datum.pair(mu, a)
            av = datum.coroot[a]
            for j in range(1, abs(n)):
                s = j if n > 0 else -j
                nu = tuple(x - s * y for x, y in zip(mu, av))
                if nu not in seen:
                    seen.add(nu)
                    todo.append(nu)
    return sorted(seen, key=lambda v: (sorted(datum.dominant_rep(v)[0]), v))


def _inverse_ctx(datum: RootDatum, params: Params) -> OpContext:
    return op_context(datum, params.inverse_k())


def _eigen_generators(datum: RootDatum) -> list[Vec]:
    return [datum.fundamental_coweight(j) for j in range(1, datum.dim + 1)]


_E_CACHE: dict = {}


def nonsymmetric_macdonald(datum: RootDatum, params: Params, lam: Sequence[int]) -> LaurentPoly:
    """E_lam(k^{-1}, q), monic in e^lam, certified as a Y-eigenfunction."""
    lam = tuple(lam)
    key = (id(datum), params.k_by_norm, params.q_root, lam)
    if key in _E_CACHE:
        return _E_CACHE[key]
    ctx = _inverse_ctx(datum, params)
    span = saturated_set(datum, lam)
    pos = {mu: i for i, mu in enumerate(span)}
    gens = _eigen_generators(datum)
    spectral = {mu: gamma_lambda(datum, params, mu).inverse() for mu in span}
    weights = _separating_weights(gens, spectral)
    n = len(span)
    mat = [[Fraction(0)] * n for _ in range(n)]
    for c, mu in enumerate(span):
        e = LaurentPoly.monomial(mu)
        for g, r in zip(gens, weights):
            img = apply_Y(ctx, g, e)
            for nu, v in img.terms.items():
                if nu not in pos:
                    raise ExactAlgError("saturated span is not stable; this indicates a bug")
                mat[pos[nu]][c] += r * v
    theta = sum((r * spectral[lam].monomial(g) for g, r in zip(gens, weights)), Fraction(0))
    for i in range(n):
        mat[i][i] -= theta
    ker = nullspace(mat, n)
    if len(ker) != 1:
        raise GenericityError(f"eigen-space for E_{list(lam)} has dimension {len(ker)}")
    vec = ker[0]
    lead = vec[pos[lam]]
    if not lead:
        raise GenericityError(f"E_{list(lam)} has vanishing leading coefficient")
    E = LaurentPoly({mu: v / lead for mu, v in zip(span, vec)})
    cert = certify_eigenfunction(datum, params, E, spectral[lam])
    if cert["status"] != "pass":
        raise GenericityError(f"E_{list(lam)} failed certification")
    _E_CACHE[key] = E
    return E


def _separating_weights(gens: list[Vec], spectral: Mapping[Vec, TorusPoint]) -> list[int]:
    for attempt in range(1, 200):
        weights = [attempt ** j + j for j in range(len(gens))]
        vals = [sum((r * t.monomial(g) for g, r in zip(gens, weights)), Fraction(0))
                for t in spectral.values()]
        if len(set(vals)) == len(vals):
            return weights
    raise GenericityError("spectral points do not separate")


def certify_eigenfunction(datum: RootDatum, params: Params, phi: LaurentPoly, t: TorusPoint) -> dict:
    """pi^{k^{-1},q}(Y^{pm varpi_j}) phi = t^{pm varpi_j} phi for all j."""
    ctx = _inverse_ctx(datum, params)
    parts = []
    for g in _eigen_generators(datum):
        for s in (1, -1):
            lam = tuple(s * x for x in g)
            got = apply_Y(ctx, lam, phi)
            parts.append(make_report("Y-eigen equation", got == phi.scale(t.monomial(lam)), {"Y": lam}))
    return merge("Y-eigenfunction", parts)


def symmetrizer_coefficients(datum: RootDatum, params: Params, sign: int) -> dict[WeylElem, Fraction]:
    """eps_pm^{k^{-1}}(T_w) for w in W_0."""
    out = {}
    for w in datum.group.elements:
        c = Fraction(1)
        for i in w.word:
            k = 1 / params.k_simple(datum, i)
            c *= sign * k ** sign
        out[w] = c
    return out


def symmetrize(datum: RootDatum, params: Params, phi: LaurentPoly, sign: int,
               I: Iterable[int] | None = None) -> LaurentPoly:
    """pi^{k^{-1},q}(C_pm^I(k^{-1})) phi (the full symmetrizer when I is None)."""
    ctx = _inverse_ctx(datum, params)
    coeffs = symmetrizer_coefficients(datum, params, sign)
    ws = datum.group.elements if I is None else datum.min_coset_reps(I)
    out = LaurentPoly()
    for w in ws:
        out = out + apply_finite_T(ctx, w, phi).scale(coeffs[w])
    return out


def symmetric_macdonald(datum: RootDatum, params: Params, lam: Sequence[int], sign: int) -> LaurentPoly:
    """P_lam^{(pm)}(k^{-1}, q) for dominant lam."""
    if not datum.is_dominant(lam):
        raise ValueError("symmetric Macdonald polynomials need a dominant coweight")
    return symmetrize(datum, params, nonsymmetric_macdonald(datum, params, lam), sign)


def expected_to_vanish(datum: RootDatum, lam: Sequence[int]) -> bool:
    """lam in P_+ but not in rho + P_+ (the antisymmetric vanishing range)."""
    return not datum.is_dominant(tuple(a - b for a, b in zip(lam, datum.rho_vee)))


def is_w_pm_invariant(datum: RootDatum, params: Params, phi: LaurentPoly | LocalizedFn, sign: int) -> bool:
    ctx = op_context(datum, params)
    f = phi if isinstance(phi, LocalizedFn) else LocalizedFn.poly(phi)
    return all(w_pm(ctx, datum.group.simple(i), sign).apply(f) == f for i in range(1, datum.n + 1))


# -- q-difference operators -------------------------------------------------------

class QDiffOperator:
    """sum_mu u_mu tau(mu) with localized coefficients."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: OpContext, terms: Mapping[Vec, LocalizedFn] | None = None):
        self.ctx = ctx
        self.terms = {tuple(mu): f for mu, f in (terms or {}).items() if not f.is_zero()}

    def apply(self, phi: LaurentPoly | LocalizedFn) -> LocalizedFn:
        f = phi if isinstance(phi, LocalizedFn) else LocalizedFn.poly(phi)
        d = self.ctx.datum
        out = LocalizedFn(LaurentPoly())
        for mu, u in self.terms.items():
            out = out + u * self.ctx.act(d.translation(mu), f)
        return out

    def __mul__(self, other: "QDiffOperator") -> "QDiffOperator":
        d = self.ctx.datum
        out: dict = {}
        for mu, u in self.terms.items():
            for nu, v in other.terms.items():
                key = tuple(a + b for a, b in zip(mu, nu))
                term = u * self.ctx.act(d.translation(mu), v)
                out[key] = out[key] + term if key in out else term
        return QDiffOperator(self.ctx, out)

    def __add__(self, other: "QDiffOperator") -> "QDiffOperator":
        out = dict(self.terms)
        for mu, u in other.terms.items():
            out[mu] = out[mu] + u if mu in out else u
        return QDiffOperator(self.ctx, out)

    def __eq__(self, other):
        if not isinstance(other, QDiffOperator):
            return NotImplemented
        zero = LocalizedFn(LaurentPoly())
        return all(self.terms.get(m, zero) == other.terms.get(m, zero)
                   for m in set(self.terms) | set(other.terms))

    __hash__ = None  # type: ignore[assignment]

    def as_op_sum(self) -> ScalarOpSum:
        d = self.ctx.datum
        return ScalarOpSum(self.ctx, {d.translation(mu): u for mu, u in self.terms.items()})

    def coefficient_sum(self) -> LocalizedFn:
        out = LocalizedFn(LaurentPoly())
        for u in self.terms.values():
            out = out + u
        return out

    def to_json(self) -> list:
        return [{"translation": list(mu), "coeff": u.to_json()} for mu, u in sorted(self.terms.items())]


def orbit_sum(datum: RootDatum, lam: Sequence[int]) -> LaurentPoly:
    out = LaurentPoly()
    for mu in datum.orbit(lam):
        out = out + LaurentPoly.monomial(mu)
    return out


def is_invariant(datum: RootDatum, f: LaurentPoly) -> bool:
    return all(f.map_exponents(lambda e, c, i=i: (datum.reflect(i, e), c)) == f
               for i in range(1, datum.n + 1))


def pi_of_f_Y(datum: RootDatum, params: Params, f: LaurentPoly) -> ScalarOpSum:
    """pi^{k^{-1},q}(f(Y)) as an operator sum."""
    ctx = _inverse_ctx(datum, params)
    out = ScalarOpSum(ctx)
    for mu, c in f.terms.items():
        out = out + pi_Y(ctx, mu).scale(c)
    return out


class MacdonaldOperatorData:
    """D_f together with its per-Weyl-element pieces D_{f,w}."""

    def __init__(self, total: QDiffOperator, pieces: dict[WeylElem, QDiffOperator], source: ScalarOpSum):
        self.total = total
        self.pieces = pieces
        self.source = source


def macdonald_operator_data(datum: RootDatum, params: Params, f: LaurentPoly, sign: int) -> MacdonaldOperatorData:
    if not is_invariant(datum, f):
        raise ValueError("macdonald_operator needs a W_0-invariant Laurent polynomial")
    ctx = op_context(datum, params)
    src = pi_of_f_Y(datum, params, f)
    src = ScalarOpSum(ctx, src.terms)
    G = LocalizedFn.poly(G_sign(datum, params, sign))
    pieces: dict = {}
    for x, g in src.terms.items():
        u = x.u
        mu = u.act(x.lam)
        # x = tau(mu) u = tau(mu) (u(G)/G) u_pm
        uG = ctx.act(datum.ext(u), G)
        ratio = uG * _inverse_of(ctx, G, sign)
        coeff = g * ctx.act(datum.translation(mu), ratio)
        piece = pieces.setdefault(u, {})
        piece[mu] = piece[mu] + coeff if mu in piece else coeff
    pieces = {u: QDiffOperator(ctx, p) for u, p in pieces.items()}
    total = QDiffOperator(ctx)
    for p in pieces.values():
        total = total + p
    return MacdonaldOperatorData(total, pieces, src)


def _inverse_of(ctx: OpContext, G: LocalizedFn, sign: int) -> LocalizedFn:
    if sign > 0:
        return ctx.one_fn()
    from .opalg import _reciprocal_poly
    return _reciprocal_poly(ctx, G.as_poly())


def macdonald_operator(datum: RootDatum, params: Params, f: LaurentPoly, sign: int) -> QDiffOperator:
    return macdonald_operator_data(datum, params, f, sign).total


def verify_macdonald_operator(datum: RootDatum, params: Params, f: LaurentPoly, sign: int) -> dict:
    """Reassembly and W_{0,pm}-invariance of the extracted operator."""
    data = macdonald_operator_data(datum, params, f, sign)
    ctx = data.total.ctx
    parts = []
    back = ScalarOpSum(ctx)
    for u, p in data.pieces.items():
        back = back + p.as_op_sum() * w_pm(ctx, u, sign)
    parts.append(make_report("sum D_{f,w} w_pm reassembles pi(f(Y))", back == data.source))
    D = data.total.as_op_sum()
    for i in range(1, datum.n + 1):
        s = w_pm(ctx, datum.group.simple(i), sign)
        parts.append(make_report(f"D_f is (s_{i})_pm-invariant", s * D * s == D))
    return merge("Macdonald operator extraction", parts, sign=sign)


def ruijsenaars_operator(datum: RootDatum, params: Params, i: int) -> QDiffOperator:
    """sum_{|J|=i} prod_{r in J, s notin J} (k t_r - k^{-1} t_s)/(t_r - t_s) tau(sum_{r in J} eps_r)."""
    from itertools import combinations
    if not datum.gl_mode:
        raise ValueError("the Ruijsenaars display is a GL_m statement")
    ctx = op_context(datum, params)
    m = datum.dim
    k = params.k_norm(Fraction(2))
    terms = {}
    for J in combinations(range(m), i):
        coeff = ctx.one_fn()
        for r in J:
            for s in range(m):
                if s in J:
                    continue
                er = datum.basis_vector(r)
                es = datum.basis_vector(s)
                diff = tuple(a - b for a, b in zip(es, er))
                num = LaurentPoly({(0,) * m: k, diff: -1 / k})
                coeff = coeff * LocalizedFn.over(num, [(diff, Fraction(1))])
        mu = tuple(int(j in J) for j in range(m))
        terms[mu] = coeff
    return QDiffOperator(ctx, terms)


def elementary_symmetric(datum: RootDatum, i: int) -> LaurentPoly:
    from itertools import combinations
    m = datum.dim
    out = LaurentPoly()
    for J in combinations(range(m), i):
        out = out + LaurentPoly.monomial(tuple(int(j in J) for j in range(m)))
    return out


def fundamental_orbit_sums(datum: RootDatum) -> list[LaurentPoly]:
    if datum.gl_mode:
        return [elementary_symmetric(datum, i) for i in range(1, datum.dim + 1)]
    return [orbit_sum(datum, datum.fundamental_coweight(j)) for j in range(1, datum.n + 1)]


def spm_check(datum: RootDatum, params: Params, phi: LaurentPoly | LocalizedFn, gamma: TorusPoint,
              sign: int, fs: list[LaurentPoly] | None = None) -> dict:
    """D_f phi = f(gamma) phi for the generating invariants f; plus the pi(f(Y)) comparison
    for (anti)invariant phi."""
    fs = fundamental_orbit_sums(datum) if fs is None else fs
    f_loc = phi if isinstance(phi, LocalizedFn) else LocalizedFn.poly(phi)
    parts = []
    invariant = is_w_pm_invariant(datum, params, f_loc, sign)
    for f in fs:
        D = macdonald_operator(datum, params, f, sign)
        lhs = D.apply(f_loc)
        rhs = f_loc.scale(f.evaluate(gamma))
        ok = lhs == rhs
        parts.append(make_report("D_f phi = f(gamma) phi", ok, {"residual": lhs - rhs},
                                 f=f.to_json()))
        if invariant and isinstance(phi, LaurentPoly):
            ctx = _inverse_ctx(datum, params)
            direct = LaurentPoly()
            for mu, c in f.terms.items():
                direct = direct + apply_Y(ctx, mu, phi).scale(c)
            parts.append(make_report("D_f phi = pi(f(Y)) phi on invariants",
                                     lhs == LocalizedFn.poly(direct)))
    out = merge("spectral problem", parts, sign=sign, gamma=gamma)
    out["w_pm_invariant"] = invariant
    return out


# -- q = 1 ----------------------------------------------------------------------------

def q1_column_sums(datum: RootDatum, params: Params, f: LaurentPoly, sign: int) -> dict:
    """sum_lam u_{f,lam}^{k,1,pm} = f(delta_+^k) as a localized-function identity."""
    p1 = params.with_q_root(1)
    D = macdonald_operator(datum, p1, f, sign)
    total = D.coefficient_sum()
    value = f.evaluate(delta_point(datum, p1, 1))
    ok = total == LocalizedFn.const(value, datum.dim)
    return make_report("column sum of D_f at q = 1 is f(delta_+)", ok, {"sum": total},
                       sign=sign, value=value)


def tm_dichotomy(datum: RootDatum, params: Params, gammas: list[TorusPoint], sign: int,
                 test_fn: LaurentPoly | None = None) -> dict:
    """On the tau-trivial module of localized functions at q = 1, SpM(W_0 gamma^{-1}) is
    everything or zero according to whether gamma lies in W_0 delta_+^k."""
    p1 = params.with_q_root(1)
    delta = delta_point(datum, p1, 1)
    orbit = {delta.act(w) for w in datum.group.elements}
    fs = fundamental_orbit_sums(datum)
    phi = test_fn if test_fn is not None else LaurentPoly.monomial(datum.basis_vector(0)) + \
        LaurentPoly.constant(1, datum.dim)
    rows = []
    for g in gammas:
        member = g in orbit
        ginv = g.inverse()
        solves = True
        for f in fs:
            D = macdonald_operator(datum, p1, f, sign)
            if not D.apply(phi) == LocalizedFn.poly(phi).scale(f.evaluate(ginv)):
                solves = False
                break
        rows.append({"gamma": g.to_json(), "in_W0_delta": member,
                     "SpM": "all of L" if solves else "zero", "consistent": solves == member})
    ok = all(r["consistent"] for r in rows)
    out = make_report("SpM on a tau-trivial module is L or 0", ok, rows, sign=sign)
    out["rows"] = rows
    return out


# -- structural checks ------------------------------------------------------------

def coroot_coordinates(datum: RootDatum, v: Sequence[int]) -> tuple[Fraction, ...] | None:
    """Coordinates of v in the simple coroots, or None if v is outside their span."""
    cols = [datum.simple_coroots[i] for i in range(datum.n)]
    rows = [[c[r] for c in cols] + [v[r]] for r in range(datum.dim)]
    red, pivots = row_reduce(rows)
    if datum.n in pivots:
        return None
    out = [Fraction(0)] * datum.n
    for r, p in zip(red, pivots):
        out[p] = r[-1]
    return tuple(out)


def dominance_leq(datum: RootDatum, mu: Sequence[int], lam: Sequence[int]) -> bool:
    c = coroot_coordinates(datum, tuple(a - b for a, b in zip(lam, mu)))
    return c is not None and all(x >= 0 for x in c)


def orbit_length(datum: RootDatum, mu: Sequence[int]) -> int:
    """Length of the shortest v with mu = v(mu_+)."""
    plus, w = datum.dominant_rep(mu)
    return min(v.length for v in datum.group.elements if v.act(plus) == tuple(mu))


def check_triangularity(datum: RootDatum, lam: Sequence[int], E: LaurentPoly) -> dict:
    """E_lam - e^lam lives on mu with mu_+ < lam_+, or mu in W_0 lam closer to dominant."""
    lam = tuple(lam)
    lp = datum.dominant_rep(lam)[0]
    ll = orbit_length(datum, lam)
    bad = []
    for mu in E.support():
        if mu == lam:
            continue
        mp = datum.dominant_rep(mu)[0]
        if mp == lp:
            ok = orbit_length(datum, mu) < ll
        else:
            ok = dominance_leq(datum, mp, lp)
        if not ok:
            bad.append(mu)
    return make_report("E_lam triangularity", not bad and E.coeff(lam) == 1, bad, weight=lam)


def verify_operator_algebra(datum: RootDatum, params: Params, sign: int,
                            fs: list[LaurentPoly] | None = None,
                            pairs: list[tuple[int, int]] | None = None) -> dict:
    """D_{fg} = D_f D_g and D_f D_g = D_g D_f on the supplied invariants."""
    fs = fundamental_orbit_sums(datum) if fs is None else fs
    if pairs is None:
        pairs = [(a, b) for a in range(len(fs)) for b in range(a, len(fs))]
    ops = [macdonald_operator(datum, params, f, sign) for f in fs]
    parts = [make_report("D_1 is the identity",
                         macdonald_operator(datum, params, LaurentPoly.constant(1, datum.dim), sign)
                         == QDiffOperator(ops[0].ctx, {(0,) * datum.dim: LocalizedFn.const(1, datum.dim)}))]
    for a, b in pairs:
        prod = ops[a] * ops[b]
        parts.append(make_report("D_f D_g = D_g D_f", prod == ops[b] * ops[a], pair=[a, b]))
        parts.append(make_report("D_{fg} = D_f D_g",
                                 macdonald_operator(datum, params, fs[a] * fs[b], sign) == prod,
                                 pair=[a, b]))
    return merge("Macdonald operators form an algebra map", parts, sign=sign)


def verify_G_isomorphism(datum: RootDatum, params: Params, tests: Iterable[LaurentPoly]) -> dict:
    """Multiplication by G^{k,-} sends W_{0,+}-invariants to W_{0,-}-invariants."""
    G = G_sign(datum, params, -1)
    parts = []
    for f in tests:
        inv = is_w_pm_invariant(datum, params, f, 1)
        parts.append(make_report("test vector is W_{0,+}-invariant", inv))
        parts.append(make_report("G^{k,-} f is W_{0,-}-invariant",
                                 is_w_pm_invariant(datum, params, G * f, -1)))
    return merge("G^{k,-} maps L^+ into L^-", parts)


def verify_macdonald_suite(datum: RootDatum, params: Params, weights: Iterable[Sequence[int]]) -> dict:
    """E certification and triangularity, P vanishing and spectral checks, operator checks."""
    parts = []
    for lam in weights:
        lam = tuple(lam)
        E = nonsymmetric_macdonald(datum, params, lam)
        parts.append(certify_eigenfunction(datum, params, E, gamma_lambda(datum, params, lam).inverse()))
        parts.append(check_triangularity(datum, lam, E))
        if not datum.is_dominant(lam):
            continue
        gam = gamma_lambda(datum, params, lam).inverse()
        for sign in (1, -1):
            Pl = symmetric_macdonald(datum, params, lam, sign)
            if sign < 0 and expected_to_vanish(datum, lam):
                parts.append(make_report("P^- vanishes off rho + P_+", Pl.is_zero(), weight=lam))
                continue
            parts.append(make_report("P is nonzero", not Pl.is_zero(), weight=lam, sign=sign))
            parts.append(make_report("P is W_{0,pm}-invariant",
                                     is_w_pm_invariant(datum, params, Pl, sign), weight=lam, sign=sign))
            parts.append(spm_check(datum, params, Pl, gam, sign))
    rho = datum.rho_vee
    Prho = symmetric_macdonald(datum, params, rho, -1)
    G = G_sign(datum, params, -1)
    lead = next(iter(G.terms))
    parts.append(make_report("P_rho^- is proportional to G^{k,-}",
                             Prho == G.scale(Prho.coeff(lead) / G.coeff(lead))))
    zero = tuple(0 for _ in rho)
    parts.append(make_report("P_0^- = 0", symmetric_macdonald(datum, params, zero, -1).is_zero()))
    parts.append(spm_check(datum, params, LaurentPoly.constant(1, datum.dim),
                           gamma_lambda(datum, params, zero).inverse(), 1))
    for sign in (1, -1):
        for f in fundamental_orbit_sums(datum):
            parts.append(verify_macdonald_operator(datum, params, f, sign))
        # outside type A the cross products reach large non-dominant Y^lam; sample one pair
        pairs = None if datum.gl_mode or datum.label.startswith("A") else [(0, 0)]
        parts.append(verify_operator_algebra(datum, params, sign, pairs=pairs))
    return merge("Macdonald suite", parts, datum=datum.label)
