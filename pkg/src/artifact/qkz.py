"""Quantum affine KZ equations: cocycles, flat sections and the Cherednik-Matsuo map.

A section is a finite sum sum_w psi_w (x) v_w with psi_w a localized function and
v_w the standard basis of an induced module M^{k,pm,I}(gamma).  Operators of the form
sum f x (x) h act by f * x_q(psi_w) (x) h v_w.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exactalg import LaurentPoly, LocalizedFn, Params, TorusPoint
from .hecke import HeckeElem, hecke_algebra
from .indmod import InducedModule
from .macdonald import (certify_eigenfunction, nonsymmetric_macdonald, gamma_lambda, spm_check,
                        symmetrize)
from .opalg import (HValuedOpSum, OpContext, ScalarOpSum, _omega_generators, apply_finite_T, apply_Y,
                    nabla_omega, nabla_op, nabla_s, op_context, pi_omega, pi_T, sigma_omega, sigma_T,
                    w_pm)
from .report import make_report, merge
from .rootdata import ExtAffineWeylElem, RootDatum, WeylElem


class EigenfunctionError(ValueError):
    """The input function fails the eigenfunction preconditions."""


def _as_fn(f) -> LocalizedFn:
    return f if isinstance(f, LocalizedFn) else LocalizedFn.poly(f)


# -- cocycle -----------------------------------------------------------------------

def cocycle_for(ctx: OpContext, x: ExtAffineWeylElem) -> dict:
    """C_x with nabla(x) = C_x x, as {Hecke basis key: LocalizedFn}."""
    op = nabla_op(ctx, x)
    if set(op.terms) - {x}:
        raise AssertionError("nabla(x) has group parts other than x")
    return dict(op.terms.get(x, {}))


def _as_op(ctx: OpContext, x: ExtAffineWeylElem, leg: Mapping) -> HValuedOpSum:
    return HValuedOpSum(ctx, {x: dict(leg)})


def cocycle_compose(ctx: OpContext, c1: Mapping, x: ExtAffineWeylElem, c2: Mapping) -> dict:
    """C_x . x_q(C_{x'}) computed leg by leg."""
    alg = ctx.alg
    out: dict = {}
    moved = {b: ctx.act(x, f) for b, f in c2.items()}
    for (w, lam), f in c1.items():
        for (v, mu), g in moved.items():
            fg = f * g
            for b, val in alg._basis_times_basis(w, lam, v, mu).items():
                term = fg.scale(val)
                out[b] = out[b] + term if b in out else term
    return {b: f for b, f in out.items() if not f.is_zero()}


def _legs_equal(a: Mapping, b: Mapping) -> bool:
    zero = LocalizedFn(LaurentPoly())
    return all(a.get(k, zero) == b.get(k, zero) for k in set(a) | set(b))


def cocycle_simple_alternate(ctx: OpContext, j: int) -> dict:
    """(T_j^{-1} - t_q^{a_j} T_j) / (k_j^{-1} - k_j t_q^{a_j})."""
    d, alg = ctx.datum, ctx.alg
    a = d.affine_simple_root(j)
    k = ctx.k(j)
    s, beta = a
    ta = LaurentPoly.monomial(beta, ctx.params.q_pow(s))
    den = LocalizedFn.over(LaurentPoly.constant(1, d.dim), [(beta, k * k * ctx.params.q_pow(s))]) \
        .scale(k)
    # 1/(k^{-1} - k t^a) = k / (1 - k^2 t^a)
    out: dict = {}
    for key, c in alg.T_inv(j).terms.items():
        out[key] = out.get(key, LocalizedFn(LaurentPoly())) + den.scale(c)
    for key, c in alg.T(j).terms.items():
        out[key] = out.get(key, LocalizedFn(LaurentPoly())) - den * LocalizedFn.poly(ta.scale(c))
    return {b: f for b, f in out.items() if not f.is_zero()}


def random_affine_element(d: RootDatum, rng: random.Random, max_len: int) -> ExtAffineWeylElem:
    x = d.identity
    for _ in range(rng.randint(0, max_len)):
        x = d.mul(x, d.affine_simple(rng.randint(0, d.n)))
    if rng.random() < 0.5:
        om = rng.choice([o.elem for o in d.omega_group()])
        x = d.mul(x, om)
    return x


def alternative_reduced_word(d: RootDatum, x: ExtAffineWeylElem) -> tuple[tuple[int, ...], ExtAffineWeylElem]:
    """A reduced word of x built by peeling off the largest right descent first."""
    word, omega = d.reduced_word(x)
    y = d.mul(x, d.inv(omega))
    out: list[int] = []
    while d.affine_length(y) > 0:
        for j in range(d.n, -1, -1):
            z = d.mul(y, d.affine_simple(j))
            if d.affine_length(z) < d.affine_length(y):
                out.append(j)
                y = z
                break
    return tuple(reversed(out)), omega


def verify_cocycle(ctx: OpContext, pairs: int = 50, max_len: int = 4, seed: int = 0) -> dict:
    """Generator values, involutivity, word independence and C_{xy} = C_x x_q(C_y)."""
    d, alg = ctx.datum, ctx.alg
    parts = []
    e = d.identity
    parts.append(make_report("C_e = 1", _legs_equal(cocycle_for(ctx, e),
                                                     {(alg.group.identity, alg.zero_vec): ctx.one_fn()})))
    for om in _omega_generators(d):
        t = alg.T_omega(om.elem)
        parts.append(make_report("C_omega = T_omega",
                                 _legs_equal(cocycle_for(ctx, om.elem),
                                             {b: ctx.one_fn().scale(c) for b, c in t.terms.items()})))
    for j in range(d.n + 1):
        s = d.affine_simple(j)
        c = cocycle_for(ctx, s)
        parts.append(make_report(f"C_s{j} matches the alternate display",
                                 _legs_equal(c, cocycle_simple_alternate(ctx, j))))
        parts.append(make_report(f"C_s{j} s_{j}(C_s{j}) = 1",
                                 _legs_equal(cocycle_compose(ctx, c, s, c),
                                             {(alg.group.identity, alg.zero_vec): ctx.one_fn()})))
    rng = random.Random(seed)
    for _ in range(pairs):
        x = random_affine_element(d, rng, max_len)
        y = random_affine_element(d, rng, max_len)
        lhs = cocycle_for(ctx, d.mul(x, y))
        rhs = cocycle_compose(ctx, cocycle_for(ctx, x), x, cocycle_for(ctx, y))
        parts.append(make_report("C_{xy} = C_x x_q(C_y)", _legs_equal(lhs, rhs),
                                 x=repr(x), y=repr(y)))
    for _ in range(min(pairs, 10)):
        x = random_affine_element(d, rng, max_len + 2)
        word, omega = alternative_reduced_word(d, x)
        op = HValuedOpSum.identity(ctx)
        for j in word:
            op = op * nabla_s(ctx, j)
        op = op * nabla_omega(ctx, omega)
        parts.append(make_report("C_x is independent of the reduced word",
                                 _legs_equal(op.terms.get(x, {}), cocycle_for(ctx, x)) and set(op.terms) <= {x},
                                 x=repr(x)))
    return merge("qKZ cocycle", parts, datum=d.label)


# -- sections ----------------------------------------------------------------------------

class Section:
    """sum_w psi_w (x) v_w over an induced module."""

    __slots__ = ("module", "comps")

    def __init__(self, module: InducedModule, comps: Mapping[WeylElem, object] | None = None):
        self.module = module
        self.comps = {}
        for w, f in (comps or {}).items():
            f = _as_fn(f)
            if not f.is_zero():
                self.comps[w] = f

    def __getitem__(self, w: WeylElem) -> LocalizedFn:
        return self.comps.get(w, LocalizedFn(LaurentPoly()))

    def __add__(self, other: "Section") -> "Section":
        out = dict(self.comps)
        for w, f in other.comps.items():
            out[w] = out[w] + f if w in out else f
        return Section(self.module, out)

    def __neg__(self):
        return Section(self.module, {w: -f for w, f in self.comps.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "Section":
        return Section(self.module, {w: f.scale(c) for w, f in self.comps.items()})

    def __eq__(self, other):
        if not isinstance(other, Section):
            return NotImplemented
        return all(self[w] == other[w] for w in set(self.comps) | set(other.comps))

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return not self.comps

    def to_json(self) -> dict:
        return {"module": repr(self.module),
                "components": [{"w": list(w.word), "psi": f.to_json()}
                               for w, f in sorted(self.comps.items())]}


def apply_hvalued(op: HValuedOpSum, psi: Section) -> Section:
    mod = psi.module
    ctx = op.ctx
    out: dict = {}
    for x, leg in op.terms.items():
        for u, f in psi.comps.items():
            moved = ctx.act(x, f)
            for key, g in leg.items():
                gm = g * moved
                for z, val in mod._key_on_basis(key, u).items():
                    term = gm.scale(val)
                    out[z] = out[z] + term if z in out else term
    return Section(mod, out)


def apply_scalar(op: ScalarOpSum, psi: Section) -> Section:
    """Action on the function leg only."""
    return Section(psi.module, {w: op.apply(f) for w, f in psi.comps.items()})


def apply_module(h: HeckeElem, psi: Section) -> Section:
    """Action on the module leg only."""
    mod = psi.module
    out: dict = {}
    for u, f in psi.comps.items():
        for key, c in h.terms.items():
            for z, val in mod._key_on_basis(key, u).items():
                term = f.scale(c * val)
                out[z] = out[z] + term if z in out else term
    return Section(mod, out)


def random_section(mod: InducedModule, rng: random.Random, degree: int = 1) -> Section:
    d = mod.alg.datum
    comps = {}
    for w in mod.basis:
        terms = {}
        for _ in range(2):
            e = tuple(rng.randint(-degree, degree) for _ in range(d.dim))
            terms[e] = Fraction(rng.randint(1, 9), rng.randint(1, 5))
        comps[w] = LaurentPoly(terms)
    return Section(mod, comps)


# -- flat sections from eigenfunctions -------------------------------------------------

def parabolic_data(d: RootDatum, I: Iterable[int]) -> tuple[WeylElem, WeylElem, frozenset]:
    """(w0bar, w0under, I*) with w_0 = w0bar w0under."""
    I = frozenset(I)
    wbar, wunder = d.coset_decomposition(d.group.longest, I)
    star = set()
    for i in I:
        img = d.act_on_root(wbar, d.simple_roots[i - 1])
        star.add(d.simple_roots.index(img) + 1)
    return wbar, wunder, frozenset(star)


def dual_spectral_point(d: RootDatum, gamma: TorusPoint, I: Iterable[int]) -> TorusPoint:
    """w0bar gamma^{-1}."""
    wbar, _, _ = parabolic_data(d, I)
    return gamma.inverse().act(wbar)


def eigenfunction_failures(d: RootDatum, params: Params, phi, t: TorusPoint, Istar: Iterable[int],
                           sign: int) -> list[str]:
    """Violations of phi in L_pi^{I*,pm}[t]."""
    ctx = op_context(d, params.inverse_k())
    phi = phi if isinstance(phi, LaurentPoly) else phi.as_poly()
    bad = []
    for i in sorted(Istar):
        k = params.k_simple(d, i)
        want = phi.scale(sign * k ** (-sign))
        if apply_finite_T(ctx, d.group.simple(i), phi) != want:
            bad.append(f"T_{i} does not act by {'+' if sign > 0 else '-'}k^{-sign}")
    for j in range(1, d.dim + 1):
        g = d.fundamental_coweight(j)
        for s in (1, -1):
            lam = tuple(s * x for x in g)
            if apply_Y(ctx, lam, phi) != phi.scale(t.monomial(lam)):
                bad.append(f"Y^{list(lam)} eigenvalue is not t^{list(lam)}")
    return bad


def build_flat_section(d: RootDatum, params: Params, sign: int, I: Iterable[int], gamma: TorusPoint,
                       phi: LaurentPoly, check: bool = True) -> Section:
    """psi_phi = sum_{w in W_0^I} pi^{k^{-1},q}(T_{w w0bar^{-1}}) phi (x) v_w."""
    I = frozenset(I)
    mod = InducedModule(hecke_algebra(d, params), sign, I, gamma)
    wbar, _, star = parabolic_data(d, I)
    if check:
        bad = eigenfunction_failures(d, params, phi, dual_spectral_point(d, gamma, I), star, sign)
        if bad:
            raise EigenfunctionError("; ".join(bad))
    ctx = op_context(d, params.inverse_k())
    wbi = wbar.inverse()
    return Section(mod, {w: apply_finite_T(ctx, w * wbi, phi) for w in mod.basis})


def flatness_report(ctx: OpContext, psi: Section) -> dict:
    """nabla(g) psi = psi for the simple reflections and the Omega generators."""
    d = ctx.datum
    finite, affine, omega = [], [], []
    for j in range(d.n + 1):
        r = apply_hvalued(nabla_s(ctx, j), psi)
        rep = make_report(f"nabla(s_{j}) psi = psi", r == psi, {"residual": (r - psi).to_json()})
        (affine if j == 0 else finite).append(rep)
    for om in _omega_generators(d):
        r = apply_hvalued(nabla_omega(ctx, om.elem), psi)
        omega.append(make_report("nabla(omega) psi = psi", r == psi,
                                 {"residual": (r - psi).to_json()}, omega=repr(om.elem)))
    out = merge("flat section", finite + affine + omega)
    out["W0_invariant"] = all(p["status"] == "pass" for p in finite)
    out["Wa_invariant"] = out["W0_invariant"] and all(p["status"] == "pass" for p in affine)
    out["W_invariant"] = out["status"] == "pass"
    return out


def random_word_check(ctx: OpContext, psi: Section, count: int = 3, max_len: int = 3, seed: int = 1) -> dict:
    d = ctx.datum
    rng = random.Random(seed)
    parts = []
    for _ in range(count):
        x = random_affine_element(d, rng, max_len)
        r = apply_hvalued(nabla_op(ctx, x), psi)
        parts.append(make_report("nabla(x) psi = psi on a random word", r == psi, x=repr(x)))
    return merge("flatness on random elements", parts)


def recover_eigenfunction(psi: Section) -> LaurentPoly | LocalizedFn:
    """Backward direction: phi is the w0bar component."""
    d = psi.module.alg.datum
    wbar, _, _ = parabolic_data(d, psi.module.I)
    f = psi[wbar]
    return f.as_poly() if f.is_poly() else f


# -- parabolic projection ---------------------------------------------------------------

def parabolic_project(d: RootDatum, params: Params, phi: LaurentPoly, I: Iterable[int], sign: int) -> LaurentPoly:
    """sum_{v in W_{0,I*}} eps_pm^{k^{-1}}(T_v) pi^{k^{-1},q}(T_v) phi."""
    _, _, star = parabolic_data(d, I)
    ctx = op_context(d, params.inverse_k())
    out = LaurentPoly()
    for v in d.parabolic_subgroup(star):
        c = Fraction(1)
        for i in v.word:
            k = 1 / params.k_simple(d, i)
            c *= sign * k ** sign
        out = out + apply_finite_T(ctx, v, phi).scale(c)
    return out


def project_and_certify(d: RootDatum, params: Params, phi: LaurentPoly, I: Iterable[int], sign: int,
                        gamma: TorusPoint) -> tuple[LaurentPoly, dict]:
    """Project phi and certify the output in L_pi^{I*,pm}[w0bar gamma^{-1}].

    The input must be a Y-eigenfunction; whether its weight is w_0 gamma^{-1} (the
    hypothesis of the projection statement) or already w0bar gamma^{-1} is reported."""
    I = frozenset(I)
    t_full = gamma.inverse().act(d.group.longest)
    t_par = dual_spectral_point(d, gamma, I)
    route = None
    for name, t in (("w0", t_full), ("w0bar", t_par)):
        if not eigenfunction_failures(d, params, phi, t, (), sign):
            route = name
            break
    if route is None:
        raise EigenfunctionError("input is not a Y-eigenfunction at w_0 gamma^{-1} or w0bar gamma^{-1}")
    out = parabolic_project(d, params, phi, I, sign)
    if out.is_zero():
        return out, make_report("parabolic projection", True, zero=True, input_weight=route)
    _, _, star = parabolic_data(d, I)
    bad = eigenfunction_failures(d, params, out, t_par, star, sign)
    if bad:
        raise EigenfunctionError("projection failed certification: " + "; ".join(bad))
    return out, make_report("parabolic projection", True, zero=False, input_weight=route)


def find_parabolic_instances(d: RootDatum, params: Params, I: Iterable[int], bound: int = 2,
                             signs: Sequence[int] = (1, -1)) -> list[dict]:
    """Scan weights mu for gamma in T_I^{k^{pm 1}} with a nonzero certified projection of E_mu.

    Two spectral points are tried: gamma = w_0 gamma_mu (E_mu has weight w_0 gamma^{-1}) and
    gamma = w0bar^{-1} gamma_mu (E_mu has weight w0bar gamma^{-1})."""
    import itertools
    from .exactalg import in_TIk
    I = frozenset(I)
    wbar, _, _ = parabolic_data(d, I)
    found = []
    for mu in itertools.product(range(-bound, bound + 1), repeat=d.dim):
        if sum(map(abs, mu)) > bound:
            continue
        gm = gamma_lambda(d, params, mu)
        for route, gamma in (("w0", gm.act(d.group.longest)), ("w0bar", gm.act(wbar.inverse()))):
            for s in signs:
                if not in_TIk(d, params, I, gamma, s):
                    continue
                E = nonsymmetric_macdonald(d, params, mu)
                try:
                    out, _ = project_and_certify(d, params, E, I, s, gamma)
                except EigenfunctionError:
                    continue
                if not out.is_zero():
                    found.append({"mu": tuple(mu), "sign": s, "gamma": gamma, "route": route, "phi": out})
    return found


# -- Cherednik-Matsuo map ----------------------------------------------------------------

def cherednik_matsuo(psi: Section) -> LocalizedFn:
    """sum_{w in W_0^I} eps_pm^k(T_w) psi_w."""
    mod = psi.module
    alg = mod.alg
    out = LocalizedFn(LaurentPoly())
    for w, f in psi.comps.items():
        out = out + f.scale(alg.epsilon_T(mod.sign, w))
    return out


def verify_xi_equivariance(ctx: OpContext, psi: Section) -> dict:
    """xi(nabla(s_i) psi) = (s_i)_pm xi(psi) for the finite simple reflections."""
    d = ctx.datum
    sign = psi.module.sign
    base = cherednik_matsuo(psi)
    parts = []
    for i in range(1, d.n + 1):
        lhs = cherednik_matsuo(apply_hvalued(nabla_s(ctx, i), psi))
        rhs = w_pm(ctx, d.group.simple(i), sign).apply(base)
        parts.append(make_report(f"xi(nabla(s_{i}) psi) = (s_{i})_pm xi(psi)", lhs == rhs))
    return merge("Cherednik-Matsuo equivariance", parts, sign=sign)


def verify_cm_correspondence(d: RootDatum, params: Params, mu: Sequence[int], sign: int) -> dict:
    """For I = empty and gamma = w_0 gamma_mu: psi_{E_mu} is flat, xi(psi) solves the spectral
    problem, and it matches the (anti)symmetrized E_mu up to eps^{k^{-1}}(T_{w_0})."""
    ctx = op_context(d, params)
    E = nonsymmetric_macdonald(d, params, mu)
    gamma = gamma_lambda(d, params, mu).act(d.group.longest)
    psi = build_flat_section(d, params, sign, (), gamma, E)
    parts = [flatness_report(ctx, psi), verify_xi_equivariance(ctx, psi)]
    xi = cherednik_matsuo(psi)
    sym = symmetrize(d, params, E, sign)
    scal = Fraction(1)
    for i in d.group.longest.word:
        k = 1 / params.k_simple(d, i)
        scal *= sign * k ** sign
    parts.append(make_report("eps^{k^{-1}}(T_{w0}) xi(psi_E) = pi(C_pm(k^{-1})) E",
                             xi.scale(scal) == LocalizedFn.poly(sym)))
    if not xi.is_zero():
        parts.append(spm_check(d, params, xi.as_poly() if xi.is_poly() else xi, gamma.inverse(), sign))
    regular = all(gamma.monomial(d.coroot[a]) not in (1, params.k_root(d, a) ** 2)
                  for a in d.positive_roots + [tuple(-x for x in b) for b in d.positive_roots])
    parts.append(make_report("xi(psi) is nonzero at regular gamma", not regular or not xi.is_zero(),
                             regular=regular))
    return merge("Cherednik-Matsuo correspondence", parts, mu=list(mu), sign=sign)


# -- invariants of A_{sigma,nabla}-modules ---------------------------------------------------

def verify_prop_aa(ctx: OpContext, psi: Section) -> dict:
    """Per generator: sigma(T_j) m = k_j m, nabla(s_j) m = m and pi^{k^{-1}}(T_j) m = J_k(T_j) m
    hold or fail together (and likewise for Omega)."""
    d, alg = ctx.datum, ctx.alg
    ictx = op_context(d, ctx.params.inverse_k())
    parts = []
    rows = []
    for j in range(d.n + 1):
        a = apply_hvalued(sigma_T(ctx, j), psi) == psi.scale(ctx.k(j))
        b = apply_hvalued(nabla_s(ctx, j), psi) == psi
        c = apply_scalar(pi_T(ictx, j), psi) == apply_module(alg.T_inv(j), psi)
        rows.append({"generator": f"s_{j}", "sigma": a, "nabla": b, "pi_vs_J": c})
        parts.append(make_report(f"three invariance conditions agree for s_{j}", a == b == c))
    for om in _omega_generators(d):
        x = om.elem
        a = apply_hvalued(sigma_omega(ctx, x), psi) == psi
        b = apply_hvalued(nabla_omega(ctx, x), psi) == psi
        c = apply_scalar(pi_omega(ictx, x), psi) == apply_module(alg.T_omega(d.inv(x)), psi)
        rows.append({"generator": repr(x), "sigma": a, "nabla": b, "pi_vs_J": c})
        parts.append(make_report("three invariance conditions agree for omega", a == b == c))
    out = merge("invariants of A_{sigma,nabla}-modules", parts)
    out["rows"] = rows
    return out


# -- GL_m explicit formula -----------------------------------------------------------------

def gl_translation_formula(d: RootDatum, params: Params, phi: LaurentPoly, mod: InducedModule,
                           j: int) -> Section:
    """Closed formula for nabla(tau(varpi_j)) psi_phi in the GL_m case."""
    sign, I = mod.sign, mod.I
    alg = mod.alg
    g = d.group
    sigma = g.from_word(tuple(range(1, d.dim)))
    sig_inv_j = g.identity
    for _ in range(j):
        sig_inv_j = sig_inv_j * sigma.inverse()
    _, wunder, _ = parabolic_data(d, I)
    ictx = op_context(d, params.inverse_k())
    varpi = d.fundamental_coweight(j)
    w0 = g.longest
    comps = {}
    for w in mod.basis:
        _, wp = d.coset_decomposition(sig_inv_j * w, I)
        coeff = alg.epsilon_T(sign, wunder) * alg.epsilon_T(sign, wp)
        lam = (wp * w.inverse()).act(varpi)
        coeff *= mod.gamma.monomial(lam)
        f = apply_Y(ictx, w0.act(lam), phi)
        f = apply_finite_T(ictx, w * wp.inverse() * w0, f)
        comps[w] = f.scale(coeff)
    return Section(mod, comps)


def gl_flat_check(d: RootDatum, params: Params, sign: int, I: Iterable[int], gamma: TorusPoint,
                  phi: LaurentPoly) -> dict:
    """zeta-route versus the closed formula for every varpi_j, then full flatness."""
    if not d.gl_mode:
        raise ValueError("gl_flat_check needs a GL_m datum")
    ctx = op_context(d, params)
    psi = build_flat_section(d, params, sign, I, gamma, phi)
    zeta = d.zeta_power(1)
    parts = []
    cur = psi
    for j in range(1, d.dim + 1):
        cur = apply_hvalued(nabla_omega(ctx, zeta), cur)
        closed = gl_translation_formula(d, params, phi, psi.module, j)
        parts.append(make_report(f"nabla(zeta^{j}) psi matches the closed formula", cur == closed))
        direct = apply_hvalued(nabla_op(ctx, d.translation(d.fundamental_coweight(j))), psi)
        parts.append(make_report(f"nabla(tau(varpi_{j})) psi matches the closed formula", direct == closed))
    parts.append(flatness_report(ctx, psi))
    return merge("GL_m flat section", parts, I=sorted(I), sign=sign)


# -- embedding into the principal series -------------------------------------------------------

def alpha_embedding(psi: Section) -> Section:
    """sum_u psi_u (x) (sum_{v in W_{0,I}} eps_pm^k(T_v) v_{uv}) over M^k(w0under gamma)."""
    mod = psi.module
    d = mod.alg.datum
    _, wunder, _ = parabolic_data(d, mod.I)
    big = InducedModule(mod.alg, mod.sign, (), mod.gamma.act(wunder))
    comps: dict = {}
    for u, f in psi.comps.items():
        for v in d.parabolic_subgroup(mod.I):
            term = f.scale(mod.alg.epsilon_T(mod.sign, v))
            uv = u * v
            comps[uv] = comps[uv] + term if uv in comps else term
    return Section(big, comps)


def verify_alpha(ctx: OpContext, psi: Section) -> dict:
    """alpha(psi) is flat, nonzero for nonzero psi, and xi(alpha(psi)) = P_I(k^{pm1}) xi(psi)."""
    mod = psi.module
    img = alpha_embedding(psi)
    parts = [flatness_report(ctx, img)]
    parts.append(make_report("alpha(psi) is nonzero", psi.is_zero() or not img.is_zero()))
    parts.append(make_report("alpha multiplies the component count by |W_{0,I}|",
                             len(img.module.basis) == len(mod.basis) * len(ctx.datum.parabolic_subgroup(mod.I))))
    PI = sum((mod.alg.epsilon_T(mod.sign, v) ** 2 for v in ctx.datum.parabolic_subgroup(mod.I)), Fraction(0))
    parts.append(make_report("xi(alpha(psi)) = P_I xi(psi)",
                             cherednik_matsuo(img) == cherednik_matsuo(psi).scale(PI)))
    return merge("embedding into the principal series", parts)
