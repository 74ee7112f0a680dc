"""Command-line front end: compute objects, run verification suites, emit JSON.

Exit codes: 0 pass, 1 identity failure, 2 usage or parse error, 3 precondition failure.
Set ARTIFACT_VERBOSE=1 for per-check progress on stderr.
"""
from __future__ import annotations

import argparse
import itertools
import json
import logging
import os
import random
import re
import sys
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .exactalg import (ExactAlgError, LaurentPoly, ParameterError, Params, TorusPoint, delta_point, fmt, frac,
                       make_params, sample_TIk_points, torus_point)
from .hecke import (HeckeAlgebra, HeckeElem, hecke_algebra, verify_anti_involution, verify_hecke_relations,
                    verify_intertwiners)
from .indmod import (InducedModule, verify_1exp, verify_b_basis, verify_baction, verify_central_character,
                     verify_module_axioms, verify_rho_I, verify_spherical, verify_vaction)
from .macdonald import (GenericityError, elementary_symmetric, fundamental_orbit_sums, gamma_lambda,
                        macdonald_operator, nonsymmetric_macdonald, orbit_sum, q1_column_sums,
                        ruijsenaars_operator, spm_check, symmetric_macdonald, tm_dichotomy,
                        verify_macdonald_suite)
from .opalg import (_omega_generators, op_context, verify_factorization, verify_nabla_relations,
                    verify_pi_relations, verify_sigma_minus, verify_sigma_relations, verify_w_pm_involution)
from .qkz import (EigenfunctionError, build_flat_section, cherednik_matsuo, cocycle_for,
                  find_parabolic_instances, flatness_report, gl_flat_check, random_word_check,
                  verify_alpha, verify_cm_correspondence, verify_cocycle, verify_prop_aa,
                  verify_xi_equivariance)
from .report import jsonable, make_report, merge, passed
from .rootdata import ExtAffineWeylElem, RootDataError, RootDatum, WeylElem, gl_datum, root_datum

log = logging.getLogger("artifact")

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3

COMMANDS = ("weyl", "hecke-mul", "intertwiner", "module-act", "spherical", "macdonald-E", "macdonald-P",
            "mac-op", "cocycle", "flat-section", "cm-map")
SUITES = ("hecke-relations", "intertwiners", "module", "thm-1exp", "pi-sigma-nabla", "cocycle", "mainthmY",
          "cm-corr", "macdonald", "q1-application", "gl")

# extra parameter points appended to the user's point; picked by the seed
GRID = (("2/5", "7/3", "7/4"), ("5/3", "3/11", "2/7"), ("4/7", "9/5", "5/2"), ("7/2", "2/9", "3/5"))


class UsageError(ValueError):
    pass


# -- configuration -----------------------------------------------------------------

def _rational(s: str) -> str:
    try:
        x = frac(s)
    except (ValueError, ZeroDivisionError, ParameterError) as exc:
        raise UsageError(f"not a rational number: {s!r}") from exc
    if x == 0:
        raise UsageError("parameters must be nonzero")
    return fmt(x)


def _int_list(s: str) -> tuple[int, ...]:
    s = s.strip()
    if not s:
        return ()
    try:
        return tuple(int(x) for x in s.split(","))
    except ValueError as exc:
        raise UsageError(f"not a comma-separated integer list: {s!r}") from exc


@dataclass(frozen=True)
class RunConfig:
    command: str
    suite: str | None = None
    type: str = "A"
    rank: int = 1
    cartan: str | None = None
    gl: bool = False
    k: str = "3/2"
    k_short: str | None = None
    q: str = "5/7"
    I: tuple[int, ...] = ()
    weight: tuple[int, ...] | None = None
    sign: int | None = None
    elem: str | None = None
    a: str | None = None
    b: str | None = None
    gamma: tuple[str, ...] | None = None
    points: int = 3
    seed: int = 0
    out: str | None = None

    def __post_init__(self):
        for name in ("k", "q"):
            _rational(getattr(self, name))
        if self.k_short is not None:
            _rational(self.k_short)
        if self.gamma is not None:
            for g in self.gamma:
                _rational(g)
        if self.sign not in (None, 1, -1):
            raise UsageError("sign must be + or -")
        if self.points < 1:
            raise UsageError("--points must be positive")

    def to_argv(self) -> list[str]:
        # --opt=value keeps negative values like -1/2 from reading as flags
        argv = ["verify", self.suite] if self.command == "verify" else [self.command]
        opts = {"type": self.type, "rank": self.rank, "k": self.k, "q": self.q, "points": self.points,
                "seed": self.seed, "cartan": self.cartan, "k-short": self.k_short, "elem": self.elem,
                "a": self.a, "b": self.b, "out": self.out}
        if self.I:
            opts["I"] = ",".join(map(str, self.I))
        if self.weight is not None:
            opts["weight"] = ",".join(map(str, self.weight))
        if self.sign is not None:
            opts["sign"] = "+" if self.sign > 0 else "-"
        if self.gamma is not None:
            opts["gamma"] = ",".join(self.gamma)
        argv += [f"--{name}={value}" for name, value in opts.items() if value is not None]
        if self.gl:
            argv.append("--gl")
        return argv

    def to_json(self) -> dict:
        return asdict(self)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", default="A", help="Cartan type letter (A, B, C, G) or GL")
    p.add_argument("--rank", type=int, default=1, help="rank n, or m for GL_m")
    p.add_argument("--cartan", help="JSON file with an integer Cartan matrix")
    p.add_argument("--gl", action="store_true", help="GL_m convention (lattice Z^m)")
    p.add_argument("--k", default="3/2", help="multiplicity on long roots")
    p.add_argument("--k-short", dest="k_short", help="multiplicity on short roots (default: k)")
    p.add_argument("--q", default="5/7", help="q^{1/m}, the m-th root of q")
    p.add_argument("--I", default="", help="parabolic subset, e.g. 1,2")
    p.add_argument("--weight", "--mu", dest="weight", help="weight coordinates, e.g. 1,0")
    p.add_argument("--sign", choices=["+", "-"], help="sign of the induced module or symmetrizer")
    p.add_argument("--elem", help="group or algebra element (see README)")
    p.add_argument("--a", help="left factor for hecke-mul")
    p.add_argument("--b", help="right factor for hecke-mul")
    p.add_argument("--gamma", help="torus point coordinates, e.g. 2,3/5")
    p.add_argument("--points", type=int, default=3, help="parameter grid size for verify")
    p.add_argument("--seed", type=int, default=0, help="seed for the grid and random words")
    p.add_argument("--out", help="write the JSON document here as well")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="artifact", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for c in COMMANDS:
        _add_common(sub.add_parser(c))
    v = sub.add_parser("verify")
    v.add_argument("suite", choices=SUITES)
    _add_common(v)
    return p


def parse_config(argv: Sequence[str]) -> RunConfig:
    ns = build_parser().parse_args(list(argv))
    t = ns.type.upper()
    gl = ns.gl or t == "GL"
    sign = None if ns.sign is None else (1 if ns.sign == "+" else -1)
    return RunConfig(
        command=ns.command, suite=getattr(ns, "suite", None), type="GL" if gl else t, rank=ns.rank,
        cartan=ns.cartan, gl=gl, k=_rational(ns.k), k_short=None if ns.k_short is None else _rational(ns.k_short),
        q=_rational(ns.q), I=_int_list(ns.I), weight=None if ns.weight is None else _int_list(ns.weight),
        sign=sign, elem=ns.elem, a=ns.a, b=ns.b,
        gamma=None if ns.gamma is None else tuple(_rational(x) for x in ns.gamma.split(",")),
        points=ns.points, seed=ns.seed, out=ns.out)


def build_datum(cfg: RunConfig) -> RootDatum:
    if cfg.gl:
        return gl_datum(cfg.rank)
    if cfg.cartan is not None:
        try:
            with open(cfg.cartan) as fh:
                mat = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read Cartan file: {exc}") from exc
        return RootDatum(mat, "custom")
    return root_datum(cfg.type, cfg.rank)


def _check_I(d: RootDatum, I: Sequence[int]) -> None:
    if any(not 1 <= i <= d.n for i in I):
        raise UsageError(f"--I must be a subset of 1..{d.n}")


def _check_weight(d: RootDatum, lam: Sequence[int]) -> tuple[int, ...]:
    if len(lam) != d.dim:
        raise UsageError(f"weight needs {d.dim} coordinates")
    return tuple(lam)


def param_grid(cfg: RunConfig, d: RootDatum) -> list[Params]:
    """The configured point followed by points - 1 grid points chosen by the seed."""
    pts = [make_params(d, cfg.k, cfg.q, cfg.k_short)]
    rng = random.Random(cfg.seed)
    extra = rng.sample(range(len(GRID)), min(cfg.points - 1, len(GRID)))
    for i in extra:
        k, q, ks = GRID[i]
        pts.append(make_params(d, k, q, ks if cfg.k_short is not None or _has_short(d) else None))
    return pts


def _has_short(d: RootDatum) -> bool:
    return any(nm != 2 for nm in d.norms)


def _params(cfg: RunConfig, d: RootDatum) -> Params:
    return make_params(d, cfg.k, cfg.q, cfg.k_short)


def _signs(cfg: RunConfig) -> tuple[int, ...]:
    return (cfg.sign,) if cfg.sign is not None else (1, -1)


def _subsets(n: int) -> list[tuple[int, ...]]:
    return [c for r in range(n + 1) for c in itertools.combinations(range(1, n + 1), r)]


def default_weights(d: RootDatum, bound: int | None = None) -> list[tuple[int, ...]]:
    """Weights with l1 norm at most bound (4 in rank one, 3 otherwise)."""
    if bound is None:
        bound = 4 if d.dim == 1 else 3
    out = [mu for mu in itertools.product(range(-bound, bound + 1), repeat=d.dim)
           if sum(map(abs, mu)) <= bound]
    return sorted(out, key=lambda mu: (sum(map(abs, mu)), mu))


# -- element parsing -----------------------------------------------------------------

_HECKE_TOKEN = re.compile(r"(Ti|T|Y|O)(\d+|\([-\d, ]*\))")


def parse_hecke(alg: HeckeAlgebra, s: str) -> HeckeElem:
    """Product like ``T1*Y(1,0)*Ti2*O1``: T_j, T_j^{-1}, Y^lam and the j-th Omega generator."""
    d = alg.datum
    out = alg.one()
    for tok in (t.strip() for t in s.split("*")):
        if tok in ("", "1", "e"):
            continue
        m = _HECKE_TOKEN.fullmatch(tok)
        if not m:
            raise UsageError(f"cannot parse Hecke factor {tok!r}")
        kind, arg = m.groups()
        if kind == "Y":
            lam = _int_list(arg.strip("()"))
            out = alg.mul(out, alg.Y(_check_weight(d, lam)))
            continue
        j = int(arg.strip("()"))
        if kind == "O":
            gens = _omega_generators(d)
            if not 1 <= j <= len(gens):
                raise UsageError(f"Omega generator index must be in 1..{len(gens)}")
            out = alg.mul(out, alg.T_omega(gens[j - 1].elem))
            continue
        if not 0 <= j <= d.n:
            raise UsageError(f"T index must be in 0..{d.n}")
        out = alg.mul(out, alg.T(j) if kind == "T" else alg.T_inv(j))
    return out


_AFFINE_TOKEN = re.compile(r"(s|t|o)(\d+|\([-\d, ]*\))")


def parse_affine(d: RootDatum, s: str) -> ExtAffineWeylElem:
    """Product like ``s0 s1 t(1,0) o1`` of affine reflections, translations and Omega generators."""
    out = d.identity
    for tok in re.findall(r"[sto](?:\d+|\([^)]*\))|\S", s.replace("*", " ")):
        m = _AFFINE_TOKEN.fullmatch(tok)
        if not m:
            raise UsageError(f"cannot parse group factor {tok!r}")
        kind, arg = m.groups()
        if kind == "t":
            x = d.translation(_check_weight(d, _int_list(arg.strip("()"))))
        elif kind == "o":
            gens = _omega_generators(d)
            j = int(arg.strip("()"))
            if not 1 <= j <= len(gens):
                raise UsageError(f"Omega generator index must be in 1..{len(gens)}")
            x = gens[j - 1].elem
        else:
            j = int(arg.strip("()"))
            if not 0 <= j <= d.n:
                raise UsageError(f"simple reflection index must be in 0..{d.n}")
            x = d.affine_simple(j)
        out = d.mul(out, x)
    return out


def parse_finite(d: RootDatum, s: str) -> WeylElem:
    """Finite Weyl group element from ``s1s2`` or ``1,2``."""
    word = [int(x) for x in re.findall(r"\d+", s)]
    if any(not 1 <= j <= d.n for j in word):
        raise UsageError(f"finite reflection indices must be in 1..{d.n}")
    return d.group.from_word(tuple(word))


def _gamma(cfg: RunConfig, d: RootDatum, P: Params, sign: int) -> TorusPoint:
    if cfg.gamma is not None:
        if len(cfg.gamma) != d.dim:
            raise UsageError(f"--gamma needs {d.dim} coordinates")
        return torus_point(cfg.gamma)
    return sample_TIk_points(d, P, cfg.I, sign, count=1)[0]


# -- compute -------------------------------------------------------------------------

def _section_for(cfg: RunConfig, d: RootDatum, P: Params, sign: int):
    """psi_{E_mu} for I empty, otherwise the first parabolic instance for mu (or any mu)."""
    if not cfg.I:
        mu = _check_weight(d, cfg.weight if cfg.weight is not None else (0,) * d.dim)
        E = nonsymmetric_macdonald(d, P, mu)
        gamma = gamma_lambda(d, P, mu).act(d.group.longest)
        return build_flat_section(d, P, sign, (), gamma, E), {"mu": list(mu)}
    inst = [r for r in find_parabolic_instances(d, P, cfg.I, signs=(sign,))
            if cfg.weight is None or r["mu"] == tuple(cfg.weight)]
    if not inst:
        raise EigenfunctionError("no parabolic eigenfunction found for this I, sign and weight")
    r = inst[0]
    psi = build_flat_section(d, P, sign, cfg.I, r["gamma"], r["phi"])
    return psi, {"mu": list(r["mu"]), "route": r["route"], "gamma": r["gamma"]}


def cmd_compute(cfg: RunConfig) -> dict:
    d = build_datum(cfg)
    _check_I(d, cfg.I)
    P = _params(cfg, d)
    sign = cfg.sign if cfg.sign is not None else 1
    c = cfg.command
    doc: dict = {"command": c, "datum": d.label, "params": P.to_json()}
    if c == "weyl":
        g = d.group
        doc["root_datum"] = d.to_json()
        doc["order"] = len(g.elements)
        doc["longest"] = list(g.longest.word)
        doc["elements"] = [list(w.word) for w in sorted(g.elements)]
    elif c == "hecke-mul":
        alg = hecke_algebra(d, P)
        a = parse_hecke(alg, cfg.a or "1")
        b = parse_hecke(alg, cfg.b or "1")
        doc.update(a=a.to_json(), b=b.to_json(), product=alg.mul(a, b).to_json())
    elif c == "intertwiner":
        alg = hecke_algebra(d, P)
        w = parse_finite(d, cfg.elem or "")
        doc.update(w=list(w.word), intertwiner=alg.intertwiner(w).to_json(), d_w=alg.d_poly(w).to_json())
    elif c == "module-act":
        alg = hecke_algebra(d, P)
        mod = InducedModule(alg, sign, cfg.I, _gamma(cfg, d, P, sign))
        h = parse_hecke(alg, cfg.elem or "1")
        doc.update(gamma=mod.gamma.to_json(), sign=sign, I=list(cfg.I),
                   basis=[list(w.word) for w in mod.basis],
                   image_of_v_e=mod.act(h, mod.v()).to_json(),
                   matrix=[[fmt(x) for x in row] for row in mod.matrix(h)])
    elif c == "spherical":
        alg = hecke_algebra(d, P)
        mod = InducedModule(alg, sign, cfg.I, _gamma(cfg, d, P, sign))
        doc.update(gamma=mod.gamma.to_json(), sign=sign, I=list(cfg.I), spherical=mod.spherical_vector().to_json())
    elif c == "macdonald-E":
        lam = _check_weight(d, cfg.weight if cfg.weight is not None else (0,) * d.dim)
        doc.update(weight=list(lam), eigenvalue=gamma_lambda(d, P, lam).inverse().to_json(),
                   E=nonsymmetric_macdonald(d, P, lam).to_json())
    elif c == "macdonald-P":
        lam = _check_weight(d, cfg.weight if cfg.weight is not None else (0,) * d.dim)
        if not d.is_dominant(lam):
            raise ParameterError("macdonald-P needs a dominant weight")
        doc.update(weight=list(lam), sign=sign, P=symmetric_macdonald(d, P, lam, sign).to_json())
    elif c == "mac-op":
        if cfg.weight is not None:
            f = orbit_sum(d, _check_weight(d, cfg.weight))
        else:
            f = fundamental_orbit_sums(d)[0]
        doc.update(f=f.to_json(), sign=sign, operator=macdonald_operator(d, P, f, sign).to_json())
    elif c == "cocycle":
        x = parse_affine(d, cfg.elem or "s0")
        legs = cocycle_for(op_context(d, P), x)
        doc.update(x=repr(x), cocycle=[{"T": list(w.word), "Y": list(lam), "coeff": f.to_json()}
                                       for (w, lam), f in sorted(legs.items(), key=lambda t: (t[0][0], t[0][1]))])
    elif c in ("flat-section", "cm-map"):
        psi, info = _section_for(cfg, d, P, sign)
        doc.update(jsonable(info), sign=sign, I=list(cfg.I))
        if c == "flat-section":
            rep = flatness_report(op_context(d, P), psi)
            doc.update(section=psi.to_json(), flat=passed(rep))
        else:
            doc.update(xi=cherednik_matsuo(psi).to_json())
    return doc


# -- verify --------------------------------------------------------------------------

def _timed(name: str, fn: Callable[[], dict]) -> dict:
    t0 = time.perf_counter()
    rep = fn()
    log.info("%s: %s (%.2fs)", name, rep["status"], time.perf_counter() - t0)
    return rep


def _suite_hecke_relations(cfg, d, P):
    alg = hecke_algebra(d, P)
    return [verify_hecke_relations(alg), verify_anti_involution(alg)]


def _suite_intertwiners(cfg, d, P):
    return [verify_intertwiners(hecke_algebra(d, P))]


def _suite_module(cfg, d, P):
    alg = hecke_algebra(d, P)
    parts = []
    Is = [cfg.I] if cfg.I else _subsets(d.n)
    elems = [alg.T(1), alg.T_inv(d.n), alg.Y(d.basis_vector(0))]
    coweights = [d.basis_vector(j) for j in range(d.dim)]
    for I in Is:
        for sign in _signs(cfg):
            gamma = sample_TIk_points(d, P, I, sign, count=1)[0]
            mod = InducedModule(alg, sign, I, gamma)
            for check in (verify_vaction, verify_b_basis, verify_baction, verify_spherical, verify_rho_I):
                parts.append(check(mod))
            parts.append(verify_central_character(mod, coweights))
            parts.append(verify_module_axioms(mod, elems))
    return parts


def regular_points(d: RootDatum, P: Params, I, sign: int, count: int = 3) -> list[TorusPoint]:
    """Up to count regular points of T_I; for I of full rank T_I has finitely many rational points."""
    for c in range(count, 0, -1):
        try:
            return sample_TIk_points(d, P, I, sign, count=c)
        except ParameterError:
            continue
    raise ParameterError(f"no regular rational point in T_I for I={sorted(I)}")


def _suite_1exp(cfg, d, P):
    alg = hecke_algebra(d, P)
    parts = []
    for I in ([cfg.I] if cfg.I else _subsets(d.n)):
        for sign in _signs(cfg):
            for gamma in regular_points(d, P, I, sign):
                parts.append(verify_1exp(InducedModule(alg, sign, I, gamma)))
    return parts


def random_affine_words(d: RootDatum, count: int, max_len: int, seed: int) -> list[list[int]]:
    rng = random.Random(seed)
    return [[rng.randrange(d.n + 1) for _ in range(rng.randint(1, max_len))] for _ in range(count)]


def _suite_pi_sigma_nabla(cfg, d, P):
    ctx = op_context(d, P)
    tests = [LaurentPoly.monomial(d.basis_vector(0)), LaurentPoly.constant(1, d.dim)]
    parts = [verify_pi_relations(ctx), verify_sigma_relations(ctx), verify_nabla_relations(ctx),
             verify_factorization(ctx, random_affine_words(d, 20, 4, cfg.seed)), verify_sigma_minus(ctx)]
    parts += [verify_w_pm_involution(ctx, s, tests) for s in (1, -1)]
    return parts


def _suite_cocycle(cfg, d, P):
    return [verify_cocycle(op_context(d, P), pairs=50, max_len=4, seed=cfg.seed)]


def _mainthm_weights(cfg, d) -> list[tuple[int, ...]]:
    if cfg.weight is not None:
        return [_check_weight(d, cfg.weight)]
    return default_weights(d, 2)[:6]


def _parabolic_sections(cfg, d, P):
    out = []
    for sign in _signs(cfg):
        for r in find_parabolic_instances(d, P, cfg.I, signs=(sign,))[:2]:
            out.append((build_flat_section(d, P, sign, cfg.I, r["gamma"], r["phi"]), r))
    return out


def _suite_mainthm(cfg, d, P):
    ctx = op_context(d, P)
    parts = []
    if not cfg.I:
        for mu in _mainthm_weights(cfg, d):
            E = nonsymmetric_macdonald(d, P, mu)
            gamma = gamma_lambda(d, P, mu).act(d.group.longest)
            for sign in _signs(cfg):
                psi = build_flat_section(d, P, sign, (), gamma, E)
                parts.append(flatness_report(ctx, psi))
                parts.append(random_word_check(ctx, psi, seed=cfg.seed))
        return parts
    found = _parabolic_sections(cfg, d, P)
    parts.append(make_report("a parabolic instance exists", bool(found), I=list(cfg.I)))
    for psi, r in found:
        parts.append(flatness_report(ctx, psi))
        parts.append(verify_prop_aa(ctx, psi))
        parts.append(verify_alpha(ctx, psi))
    return parts


def _suite_cm(cfg, d, P):
    ctx = op_context(d, P)
    parts = []
    if not cfg.I:
        for mu in _mainthm_weights(cfg, d):
            for sign in _signs(cfg):
                parts.append(verify_cm_correspondence(d, P, mu, sign))
        return parts
    found = _parabolic_sections(cfg, d, P)
    parts.append(make_report("a parabolic instance exists", bool(found), I=list(cfg.I)))
    for psi, r in found:
        xi = cherednik_matsuo(psi)
        parts.append(make_report("xi(psi) is nonzero", not xi.is_zero(), mu=list(r["mu"])))
        if not xi.is_zero():
            parts.append(spm_check(d, P, xi.as_poly() if xi.is_poly() else xi, r["gamma"].inverse(),
                                   psi.module.sign))
        parts.append(verify_xi_equivariance(ctx, psi))
    return parts


def _suite_macdonald(cfg, d, P):
    weights = [_check_weight(d, cfg.weight)] if cfg.weight is not None else default_weights(d)
    parts = [verify_macdonald_suite(d, P, weights)]
    if d.gl_mode:
        parts.append(_ruijsenaars(d, P))
    return parts


def _ruijsenaars(d, P):
    parts = [make_report(f"D_e{i} equals the Ruijsenaars operator",
                         macdonald_operator(d, P, elementary_symmetric(d, i), 1) == ruijsenaars_operator(d, P, i))
             for i in range(1, d.dim + 1)]
    return merge("Ruijsenaars operators", parts)


def _suite_q1(cfg, d, P):
    f = fundamental_orbit_sums(d)[0]
    p1 = P.with_q_root(1)
    delta = delta_point(d, p1, 1)
    gammas = [delta, delta.act(d.group.simple(1)), sample_TIk_points(d, p1, (), 1, count=1)[0]]
    parts = []
    for sign in _signs(cfg):
        parts.append(q1_column_sums(d, P, f, sign))
        parts.append(tm_dichotomy(d, P, gammas, sign))
    return parts


def _suite_gl(cfg, d, P):
    if not d.gl_mode:
        raise UsageError("the gl suite needs --gl")
    parts = [_ruijsenaars(d, P)]
    for mu in _mainthm_weights(cfg, d)[:3]:
        E = nonsymmetric_macdonald(d, P, mu)
        gamma = gamma_lambda(d, P, mu).act(d.group.longest)
        for sign in _signs(cfg):
            parts.append(gl_flat_check(d, P, sign, (), gamma, E))
    Is = [cfg.I] if cfg.I else [I for I in _subsets(d.n) if 0 < len(I) < d.n]
    for I in Is:
        for sign in _signs(cfg):
            for r in find_parabolic_instances(d, P, I, signs=(sign,))[:1]:
                parts.append(gl_flat_check(d, P, sign, I, r["gamma"], r["phi"]))
    return parts


SUITE_FUNCS = {
    "hecke-relations": _suite_hecke_relations, "intertwiners": _suite_intertwiners, "module": _suite_module,
    "thm-1exp": _suite_1exp, "pi-sigma-nabla": _suite_pi_sigma_nabla, "cocycle": _suite_cocycle,
    "mainthmY": _suite_mainthm, "cm-corr": _suite_cm, "macdonald": _suite_macdonald,
    "q1-application": _suite_q1, "gl": _suite_gl,
}


def cmd_verify(cfg: RunConfig) -> dict:
    d = build_datum(cfg)
    _check_I(d, cfg.I)
    fn = SUITE_FUNCS[cfg.suite]
    grid = param_grid(cfg, d)
    parts = []
    for P in grid:
        sub = _timed(f"{cfg.suite} at {P.to_json()}", lambda P=P: merge(cfg.suite, fn(cfg, d, P), params=P))
        parts.append(sub)
    out = merge(f"verify {cfg.suite}", parts, datum=d.label, seed=cfg.seed,
                grid=[P.to_json() for P in grid])
    if cfg.suite == "q1-application":
        f = fundamental_orbit_sums(d)[0]
        out["constants"] = [fmt(f.evaluate(delta_point(d, P.with_q_root(1), 1))) for P in grid]
    return out


# -- entry point ---------------------------------------------------------------------

def dumps(doc) -> str:
    return json.dumps(jsonable(doc), sort_keys=True, indent=2)


def _emit(doc: dict, cfg: RunConfig | None) -> None:
    text = dumps(doc)
    print(text)
    if cfg is not None and cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text + "\n")


def _error(kind: str, exc: BaseException) -> dict:
    return {"error": {"kind": kind, "type": type(exc).__name__, "message": str(exc)}}


def main(argv: Sequence[str] | None = None) -> int:
    if os.environ.get("ARTIFACT_VERBOSE"):
        logging.basicConfig(level=logging.INFO, stream=sys.stderr, format="%(message)s")
    argv = sys.argv[1:] if argv is None else list(argv)
    cfg = None
    try:
        cfg = parse_config(argv)
        if cfg.command == "verify":
            doc = cmd_verify(cfg)
            _emit(doc, cfg)
            return EXIT_PASS if passed(doc) else EXIT_FAIL
        _emit(cmd_compute(cfg), cfg)
        return EXIT_PASS
    except (UsageError, RootDataError) as exc:
        _emit(_error("usage", exc), None)
        return EXIT_USAGE
    except (ParameterError, EigenfunctionError, GenericityError, ExactAlgError) as exc:
        _emit(_error("precondition", exc), cfg)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
