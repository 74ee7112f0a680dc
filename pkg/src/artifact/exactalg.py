"""Exact arithmetic: parameters, Laurent polynomials, torus points and the
localized coefficient rings.

Everything is over Q.  The deformation parameter q enters only through the
exact rational ``q_root`` = q^{1/m}, so affine monomials e_q^{sc+beta} =
q^s e^beta are expanded on the spot and polynomials only carry lattice
exponents.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

from .rootdata import (ExtAffineWeylElem, RootDatum, Vec, lex_positive,
                       rational_inverse)

Q = Fraction


class ExactAlgError(ArithmeticError):
    pass


class DivisionError(ExactAlgError):
    """Raised when an exact division that should succeed leaves a remainder."""


class ParameterError(ValueError):
    pass


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise ParameterError("floats are not accepted; pass a rational string")
    return Fraction(x)


def fmt(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


# -- parameters ---------------------------------------------------------------

@dataclass(frozen=True)
class Params:
    """Multiplicity function (by squared root length) and q^{1/m}."""

    k_by_norm: tuple[tuple[Fraction, Fraction], ...]
    q_root: Fraction
    m: int

    def __post_init__(self):
        if any(v == 0 for _, v in self.k_by_norm) or self.q_root == 0:
            raise ParameterError("parameters must be nonzero")

    @property
    def k_map(self) -> dict[Fraction, Fraction]:
        return dict(self.k_by_norm)

    def k_norm(self, norm: Fraction) -> Fraction:
        return self.k_map[Fraction(norm)]

    def k_root(self, datum: RootDatum, beta: Sequence[int]) -> Fraction:
        """k_{beta^vee} for a root functional beta."""
        return self.k_norm(datum.root_norm[tuple(beta)])

    def k_simple(self, datum: RootDatum, j: int) -> Fraction:
        """k_j for 0 <= j <= n (k_0 is the long-root value)."""
        if j == 0:
            return self.k_norm(Fraction(2))
        return self.k_norm(datum.norms[j - 1])

    def k_affine_root(self, datum: RootDatum, a: tuple[Fraction, Vec]) -> Fraction:
        return self.k_root(datum, datum.root_of_coroot[tuple(a[1])])

    def inverse_k(self) -> "Params":
        return Params(tuple((n, 1 / v) for n, v in self.k_by_norm), self.q_root, self.m)

    def negative_inverse_k(self) -> "Params":
        return Params(tuple((n, -1 / v) for n, v in self.k_by_norm), self.q_root, self.m)

    def with_q_root(self, q_root) -> "Params":
        return Params(self.k_by_norm, frac(q_root), self.m)

    def q_pow_m(self, e: int) -> Fraction:
        """q^{e/m} = q_root^e."""
        return self.q_root ** e

    def q_pow(self, s: Fraction) -> Fraction:
        """q^s for s in (1/m)Z."""
        e = Fraction(s) * self.m
        if e.denominator != 1:
            raise ExactAlgError(f"q-exponent {s} not in (1/{self.m})Z")
        return self.q_root ** int(e)

    def to_json(self) -> dict:
        return {"k_by_norm": {fmt(n): fmt(v) for n, v in self.k_by_norm},
                "q_root": fmt(self.q_root), "m": self.m}


def make_params(datum: RootDatum, k, q_root, k_short=None) -> Params:
    """Params with k on long roots and k_short (default k) on short roots."""
    k = frac(k)
    ks = frac(k_short) if k_short is not None else k
    norms = sorted(set(datum.norms) | {Fraction(2)})
    pairs = tuple((nm, k if nm == 2 else ks) for nm in norms)
    return Params(pairs, frac(q_root), datum.m)


# -- Laurent polynomials -------------------------------------------------------

class LaurentPoly:
    """Finitely supported map from lattice exponents to rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Vec, Fraction] | None = None, _clean: bool = False):
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = terms  # type: ignore[assignment]
        else:
            self.terms = {tuple(e): Fraction(c) for e, c in terms.items() if c != 0}

    @staticmethod
    def monomial(exp: Sequence[int], coeff=1) -> "LaurentPoly":
        return LaurentPoly({tuple(exp): Fraction(coeff)})

    @staticmethod
    def constant(c, dim: int) -> "LaurentPoly":
        return LaurentPoly({(0,) * dim: Fraction(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)) and other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly(out, _clean=True)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()}, _clean=True)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def scale(self, c) -> "LaurentPoly":
        c = Fraction(c)
        if c == 0:
            return LaurentPoly()
        return LaurentPoly({e: c * v for e, v in self.terms.items()}, _clean=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out: dict = defaultdict(Fraction)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return LaurentPoly({e: c for e, c in out.items() if c}, _clean=True)

    __rmul__ = __mul__

    def shift(self, exp: Sequence[int]) -> "LaurentPoly":
        return LaurentPoly({tuple(a + b for a, b in zip(e, exp)): c for e, c in self.terms.items()},
                           _clean=True)

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self.terms) != 1:
                raise ExactAlgError("only monomials are invertible")
            (e, c), = self.terms.items()
            return LaurentPoly({tuple(n * x for x in e): Fraction(1) / c ** -n}, _clean=True)
        dim = len(next(iter(self.terms))) if self.terms else 0
        out = LaurentPoly.constant(1, dim)
        for _ in range(n):
            out = out * self
        return out

    def coeff(self, exp: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def support(self) -> list[Vec]:
        return sorted(self.terms)

    def evaluate(self, t: "TorusPoint") -> Fraction:
        return sum((c * t.monomial(e) for e, c in self.terms.items()), Fraction(0))

    def map_exponents(self, f) -> "LaurentPoly":
        out: dict = defaultdict(Fraction)
        for e, c in self.terms.items():
            e2, c2 = f(e, c)
            out[e2] += c2
        return LaurentPoly({e: c for e, c in out.items() if c}, _clean=True)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*e^{list(e)}" for e, c in sorted(self.terms.items()))

    def to_json(self) -> list:
        return [{"c_exp": 0, "coweight_exp": list(e), "coeff": fmt(c)}
                for e, c in sorted(self.terms.items())]


def divide_by_factor(f: LaurentPoly, beta: Sequence[int], rho: Fraction) -> LaurentPoly | None:
    """Exact quotient f / (1 - rho e^beta), or None when there is a remainder."""
    beta = tuple(beta)
    rho = Fraction(rho)
    if not any(beta):
        raise ExactAlgError("zero exponent in factor")
    if not lex_positive(beta):
        # 1 - rho e^beta = -rho e^beta (1 - rho^-1 e^-beta)
        nb = tuple(-x for x in beta)
        q = divide_by_factor(f, nb, 1 / rho)
        if q is None:
            return None
        return q.shift(nb).scale(-1 / rho)
    p = next(i for i, x in enumerate(beta) if x)
    bp = beta[p]
    lines: dict = defaultdict(dict)
    for e, c in f.terms.items():
        j = e[p] // bp
        base = tuple(x - j * b for x, b in zip(e, beta))
        lines[base][j] = c
    out = {}
    for base, line in lines.items():
        lo, hi = min(line), max(line)
        h = Fraction(0)
        for j in range(lo, hi):
            h = line.get(j, 0) + rho * h
            if h:
                out[tuple(x + j * b for x, b in zip(base, beta))] = h
        if line.get(hi, 0) + rho * h != 0:
            return None
    return LaurentPoly(out, _clean=True)


# -- torus points ----------------------------------------------------------------

@dataclass(frozen=True)
class TorusPoint:
    """t in Hom(L, Q^x), stored by its values on the lattice basis."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if any(c == 0 for c in self.coords):
            raise ParameterError("torus coordinates must be nonzero")

    def monomial(self, lam: Sequence[int]) -> Fraction:
        out = Fraction(1)
        for c, e in zip(self.coords, lam):
            if e:
                out *= c ** e
        return out

    def __mul__(self, other: "TorusPoint") -> "TorusPoint":
        return TorusPoint(tuple(a * b for a, b in zip(self.coords, other.coords)))

    def inverse(self) -> "TorusPoint":
        return TorusPoint(tuple(1 / a for a in self.coords))

    def act(self, w) -> "TorusPoint":
        """(w t)^lam = t^{w^{-1} lam} for w in W_0."""
        winv = w.inverse()
        d = len(self.coords)
        return TorusPoint(tuple(self.monomial(winv.act(tuple(int(i == j) for i in range(d))))
                                for j in range(d)))

    def to_json(self) -> list:
        return [fmt(c) for c in self.coords]


def torus_point(values: Iterable) -> TorusPoint:
    return TorusPoint(tuple(frac(v) for v in values))


def q_power_point(datum: RootDatum, params: Params, lam: Sequence[int]) -> TorusPoint:
    """q^lam: mu -> q^{<lam, mu>}."""
    return TorusPoint(tuple(params.q_root ** datum.inner_m(lam, datum.basis_vector(j))
                            for j in range(datum.dim)))


def root_power_point(datum: RootDatum, base: Fraction, beta: Sequence[int]) -> TorusPoint:
    """base^beta for a root functional beta: mu -> base^{<mu, beta>}."""
    return TorusPoint(tuple(Fraction(base) ** b for b in beta))


def unit_point(datum: RootDatum) -> TorusPoint:
    return TorusPoint((Fraction(1),) * datum.dim)


def delta_point(datum: RootDatum, params: Params, sign: int) -> TorusPoint:
    """delta_pm^k = prod_{alpha > 0} (pm k_alpha)^{pm alpha}."""
    t = unit_point(datum)
    for b in datum.positive_roots:
        k = params.k_root(datum, b)
        t = t * root_power_point(datum, sign * k ** sign, b)
    return t


def rho_point(datum: RootDatum, params: Params, I: Iterable[int]) -> TorusPoint:
    """rho_I^k = prod_{alpha in R_0^{I,+}} k_alpha^{-2 alpha}."""
    t = unit_point(datum)
    for b in datum.positive_roots_of(I):
        t = t * root_power_point(datum, params.k_root(datum, b) ** -2, b)
    return t


def integer_root(n: int, r: int) -> int | None:
    if n < 0:
        if r % 2 == 0:
            return None
        x = integer_root(-n, r)
        return None if x is None else -x
    if n < 2:
        return n
    lo, hi = 1, 1 << (n.bit_length() // r + 1)
    while lo <= hi:
        mid = (lo + hi) // 2
        p = mid ** r
        if p == n:
            return mid
        if p < n:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def rational_root(x: Fraction, r: int) -> Fraction | None:
    """The real r-th root of x if it is rational (positive when r is even)."""
    a = integer_root(x.numerator, r)
    b = integer_root(x.denominator, r)
    if a is None or b is None:
        return None
    return Fraction(a, b)


def make_torus_point_in_TIk(datum: RootDatum, params: Params, I: Iterable[int],
                            free_values: Mapping[int, object] | Sequence, sign: int = 1
                            ) -> TorusPoint:
    """gamma with gamma^{alpha_i^vee} = k_i^{2 sign} for i in I.

    Coordinates with (0-based) index i-1 for i in I are solved for; the
    remaining coordinates are taken from ``free_values`` (a mapping from
    coordinate index, or a sequence listing the free coordinates in order).
    """
    I = sorted(set(I))
    unknown = [i - 1 for i in I]
    free_idx = [j for j in range(datum.dim) if j not in unknown]
    if isinstance(free_values, Mapping):
        fixed = {int(j): frac(v) for j, v in free_values.items()}
    else:
        vals = [frac(v) for v in free_values]
        if len(vals) != len(free_idx):
            raise ParameterError(f"expected {len(free_idx)} free values, got {len(vals)}")
        fixed = dict(zip(free_idx, vals))
    if set(fixed) != set(free_idx):
        raise ParameterError(f"free values must cover coordinates {free_idx}")
    if any(v == 0 for v in fixed.values()):
        raise ParameterError("free values must be nonzero")
    coords: list[Fraction | None] = [fixed.get(j) for j in range(datum.dim)]
    if unknown:
        mat = [[datum.simple_coroots[i - 1][j] for j in unknown] for i in I]
        rhs = []
        for i in I:
            v = params.k_simple(datum, i) ** (2 * sign)
            for j in free_idx:
                e = datum.simple_coroots[i - 1][j]
                if e:
                    v /= fixed[j] ** e
            rhs.append(v)
        minv = rational_inverse(mat)
        for r, j in enumerate(unknown):
            den = 1
            for x in minv[r]:
                den = lcm(den, x.denominator)
            power = Fraction(1)
            for x, v in zip(minv[r], rhs):
                e = x * den
                power *= v ** int(e)
            root = rational_root(power, den)
            if root is None:
                raise ParameterError(
                    f"coordinate {j} needs a {den}-th root of {power}; coroot alpha_{I[r]}^vee "
                    "constraint has no rational solution for these free values")
            coords[j] = root
    gamma = TorusPoint(tuple(coords))  # type: ignore[arg-type]
    for i in I:
        if gamma.monomial(datum.simple_coroots[i - 1]) != params.k_simple(datum, i) ** (2 * sign):
            raise ParameterError(f"constraint for alpha_{i}^vee fails (sign ambiguity of the root)")
    return gamma


_SAMPLE_BASES = (Fraction(2, 3), Fraction(5, 4), Fraction(7, 11), Fraction(13, 5), Fraction(3, 17),
                 Fraction(19, 7), Fraction(11, 23), Fraction(29, 13))


def sample_TIk_points(datum: RootDatum, params: Params, I: Iterable[int], sign: int = 1,
                      count: int = 3, strict: bool = False) -> list[TorusPoint]:
    """Deterministic points of T_I^{k^{sign}} with gamma^{alpha^vee} != 1 off R_0^{I,+}.

    Free coordinates are perfect 6th powers so the constraint solve stays
    rational; ``strict`` also excludes gamma^{alpha^vee} = k^{2 sign}.
    """
    I = sorted(set(I))
    nfree = datum.dim - len(I)
    out: list[TorusPoint] = []
    start = 0
    while len(out) < count and start < 200:
        vals = [_SAMPLE_BASES[(start + 3 * j) % len(_SAMPLE_BASES)] ** 6 * (start + 1)
                ** (6 * (j % 2)) for j in range(nfree)]
        start += 1
        try:
            g = make_torus_point_in_TIk(datum, params, I, vals, sign)
        except ParameterError:
            continue
        fails = regularity_failures(datum, params, I, g, sign)
        if not strict:
            fails = [f for f in fails if f[1] == "gamma^coroot = 1"]
        if not fails and g not in out:
            out.append(g)
    if len(out) < count:
        raise ParameterError("could not sample enough regular points")
    return out


def in_TIk(datum: RootDatum, params: Params, I: Iterable[int], gamma: TorusPoint, sign: int = 1) -> bool:
    return all(gamma.monomial(datum.simple_coroots[i - 1]) == params.k_simple(datum, i) ** (2 * sign)
               for i in I)


def regularity_failures(datum: RootDatum, params: Params, I: Iterable[int], gamma: TorusPoint,
                        sign: int = 1) -> list[tuple[Vec, str]]:
    """Coroots violating k^{2 sign} != gamma^{alpha^vee} != 1 off R_0^{I,+}."""
    inside = set(datum.positive_roots_of(I))
    out = []
    for b in datum.positive_roots:
        if b in inside:
            continue
        v = gamma.monomial(datum.coroot[b])
        if v == 1:
            out.append((datum.coroot[b], "gamma^coroot = 1"))
        elif v == params.k_root(datum, b) ** (2 * sign):
            out.append((datum.coroot[b], "gamma^coroot = k^2"))
    return out


# -- q-action --------------------------------------------------------------------

class QAction:
    """Cached monomial action of extended affine Weyl elements."""

    def __init__(self, datum: RootDatum, params: Params):
        self.datum = datum
        self.params = params
        self._gl_cache: dict = {}

    def _glam(self, lam: Vec) -> Vec:
        v = self._gl_cache.get(lam)
        if v is None:
            d = self.datum
            v = tuple(d.inner_m(lam, d.basis_vector(j)) for j in range(d.dim))
            self._gl_cache[lam] = v
        return v

    def monomial(self, w: ExtAffineWeylElem, mu: Vec) -> tuple[Vec, Fraction]:
        """w_q e^mu = scalar * e^{u mu}."""
        e = -sum(a * b for a, b in zip(self._glam(w.lam), mu))
        return w.u.act(mu), self.params.q_root ** e

    def poly(self, w: ExtAffineWeylElem, f: LaurentPoly) -> LaurentPoly:
        if not any(w.lam):
            if w.u.length == 0:
                return f
            return LaurentPoly({w.u.act(e): c for e, c in f.terms.items()}, _clean=True)
        out = {}
        for e, c in f.terms.items():
            e2, s = self.monomial(w, e)
            out[e2] = c * s
        return LaurentPoly(out, _clean=True)


def q_weyl_act(datum: RootDatum, params: Params, w: ExtAffineWeylElem, f: LaurentPoly) -> LaurentPoly:
    """(u tau(lam))_q e^mu = q^{-<lam, mu>} e^{u mu}."""
    return QAction(datum, params).poly(w, f)


def affine_monomial(datum: RootDatum, params: Params, a: tuple[Fraction, Vec]) -> LaurentPoly:
    """e_q^{sc + beta} = q^s e^beta."""
    return LaurentPoly.monomial(a[1], params.q_pow(a[0]))


# -- localized functions -----------------------------------------------------------

Factor = tuple[Vec, Fraction]  # (beta, rho) <-> (1 - rho e^beta), beta lex-positive


def canonical_factor(beta: Sequence[int], rho) -> tuple[Factor, Vec | None, Fraction]:
    """Canonical form of (1 - rho e^beta): returns (factor, shift, scalar) with
    (1 - rho e^beta) = scalar * e^shift * factor."""
    beta = tuple(beta)
    rho = Fraction(rho)
    if lex_positive(beta):
        return (beta, rho), None, Fraction(1)
    nb = tuple(-x for x in beta)
    return (nb, 1 / rho), beta, -rho


class LocalizedFn:
    """numerator / prod (1 - rho e^beta)^mult with canonical factors."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: Mapping[Factor, int] | None = None, _clean=False):
        self.num = num
        self.den: dict[Factor, int] = dict(den) if den else {}
        if not _clean:
            self._normalize()

    # construction
    @staticmethod
    def poly(f: LaurentPoly) -> "LocalizedFn":
        return LocalizedFn(f, None, _clean=True)

    @staticmethod
    def const(c, dim: int) -> "LocalizedFn":
        return LocalizedFn(LaurentPoly.constant(c, dim) if c else LaurentPoly(), None, _clean=True)

    @staticmethod
    def over(num: LaurentPoly, factors: Iterable[tuple[Sequence[int], Fraction]]) -> "LocalizedFn":
        """num / prod (1 - rho e^beta) for arbitrary (beta, rho)."""
        den: dict = defaultdict(int)
        for beta, rho in factors:
            fac, shift, scal = canonical_factor(beta, rho)
            den[fac] += 1
            # 1/(scal e^shift fac) = scal^-1 e^-shift / fac
            if shift is not None:
                num = num.shift(tuple(-x for x in shift)).scale(1 / scal)
        return LocalizedFn(num, den)

    def _normalize(self):
        if self.num.is_zero():
            self.den = {}
            return
        for fac in list(self.den):
            while self.den.get(fac):
                q = divide_by_factor(self.num, *fac)
                if q is None:
                    break
                self.num = q
                self.den[fac] -= 1
                if not self.den[fac]:
                    del self.den[fac]

    @property
    def dim(self) -> int:
        if self.num.terms:
            return len(next(iter(self.num.terms)))
        if self.den:
            return len(next(iter(self.den))[0])
        return 0

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return not self.den

    def as_poly(self) -> LaurentPoly:
        if self.den:
            raise ExactAlgError("not a Laurent polynomial")
        return self.num

    def factors(self) -> list[Factor]:
        return sorted(f for f, c in self.den.items() for _ in range(c))

    @staticmethod
    def _factor_poly(fac: Factor, dim: int) -> LaurentPoly:
        beta, rho = fac
        return LaurentPoly({(0,) * dim: Fraction(1), tuple(beta): -rho}, _clean=False)

    def _lift(self, den: Mapping[Factor, int]) -> LaurentPoly:
        num = self.num
        d = len(next(iter(den))[0]) if den else 0
        for fac, c in den.items():
            for _ in range(c - self.den.get(fac, 0)):
                num = num * self._factor_poly(fac, d)
        return num

    def __add__(self, other):
        if not isinstance(other, LocalizedFn):
            other = LocalizedFn.poly(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return LocalizedFn(self.num + other.num, self.den)
        den = dict(self.den)
        for f, c in other.den.items():
            den[f] = max(den.get(f, 0), c)
        return LocalizedFn(self._lift(den) + other._lift(den), den)

    def __neg__(self):
        return LocalizedFn(-self.num, self.den, _clean=True)

    def __sub__(self, other):
        if not isinstance(other, LocalizedFn):
            other = LocalizedFn.poly(other)
        return self + (-other)

    def scale(self, c) -> "LocalizedFn":
        if c == 0:
            return LocalizedFn(LaurentPoly())
        return LocalizedFn(self.num.scale(c), self.den, _clean=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, LaurentPoly):
            other = LocalizedFn.poly(other)
        if self.is_zero() or other.is_zero():
            return LocalizedFn(LaurentPoly())
        den = dict(self.den)
        for f, c in other.den.items():
            den[f] = den.get(f, 0) + c
        if not self.den or not other.den:
            # cancellation can only come from the cross terms
            out = LocalizedFn(self.num * other.num, den, _clean=True)
            out._normalize()
            return out
        return LocalizedFn(self.num * other.num, den)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.is_zero()
            return NotImplemented
        if isinstance(other, LaurentPoly):
            other = LocalizedFn.poly(other)
        if not isinstance(other, LocalizedFn):
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        den = dict(self.den)
        for f, c in other.den.items():
            den[f] = max(den.get(f, 0), c)
        return self._lift(den) == other._lift(den)

    def __hash__(self):
        raise TypeError("LocalizedFn is unhashable")

    def evaluate(self, t: TorusPoint) -> Fraction:
        v = self.num.evaluate(t)
        for (beta, rho), c in self.den.items():
            d = 1 - rho * t.monomial(beta)
            if d == 0:
                raise ExactAlgError("evaluation at a singular point")
            v /= d ** c
        return v

    def act(self, qa: QAction, w: ExtAffineWeylElem) -> "LocalizedFn":
        """w_q applied to numerator and denominator."""
        num = qa.poly(w, self.num)
        if not self.den:
            return LocalizedFn(num, None, _clean=True)
        factors = []
        for (beta, rho), c in self.den.items():
            nb, s = qa.monomial(w, beta)
            factors.extend([(nb, rho * s)] * c)
        out = LocalizedFn.over(num, factors)
        return out

    def divide_by_factor(self, beta: Sequence[int], rho) -> "LocalizedFn":
        return self * LocalizedFn.over(LaurentPoly.constant(1, len(beta)), [(beta, rho)])

    def __repr__(self):
        if not self.den:
            return repr(self.num)
        d = " * ".join(f"(1 - {rho}*e^{list(b)})^{c}" for (b, rho), c in sorted(self.den.items()))
        return f"[{self.num!r}] / [{d}]"

    def to_json(self) -> dict:
        return {"numerator": self.num.to_json(),
                "factors": [{"beta": list(b), "rho": fmt(r), "mult": c}
                            for (b, r), c in sorted(self.den.items())]}


def factor_kind(datum: RootDatum, params: Params, fac: Factor, bound: int = 60) -> str | None:
    """'sigma' if rho = q^s, 'nabla' if rho = k^{pm 2} q^s.

    Canonical factors may have inverted rho (see canonical_factor), hence both signs.
    """
    beta, rho = fac
    if tuple(beta) not in datum.root_of_coroot:
        return None
    k2 = params.k_root(datum, datum.root_of_coroot[tuple(beta)]) ** 2
    for e in range(-bound, bound + 1):
        qe = params.q_root ** e
        if rho == qe:
            return "sigma"
        if rho == k2 * qe or rho * k2 == qe:
            return "nabla"
    return None


def c_function(datum: RootDatum, params: Params, a: tuple[Fraction, Vec]) -> LocalizedFn:
    """c_a = (k_a^{-1} - k_a e_q^a) / (1 - e_q^a)."""
    k = params.k_affine_root(datum, a)
    x = affine_monomial(datum, params, a)
    one = LaurentPoly.constant(1, datum.dim)
    (beta, coeff), = x.terms.items()
    return LocalizedFn.over(one.scale(1 / k) - x.scale(k), [(beta, coeff)])


def c_function_inverse(datum: RootDatum, params: Params, a: tuple[Fraction, Vec]) -> LocalizedFn:
    """1 / c_a = (1 - e_q^a) / (k_a^{-1} - k_a e_q^a) = k (1 - x) / (1 - k^2 x)."""
    k = params.k_affine_root(datum, a)
    x = affine_monomial(datum, params, a)
    one = LaurentPoly.constant(1, datum.dim)
    (beta, coeff), = x.terms.items()
    return LocalizedFn.over((one - x).scale(k), [(beta, k * k * coeff)])


def demazure_divide(datum: RootDatum, params: Params, f: LaurentPoly, i: int) -> LaurentPoly:
    """(s_{i,q} f - f) / (1 - e_q^{-a_i}), exact."""
    qa = QAction(datum, params)
    diff = qa.poly(datum.affine_simple(i), f) - f
    s, beta = datum.affine_simple_root(i)
    rho = params.q_pow(-s)
    q = divide_by_factor(diff, tuple(-x for x in beta), rho)
    if q is None:
        raise DivisionError(f"s_{i} difference not divisible; this indicates a bug")
    return q


def G_minus(datum: RootDatum, params: Params) -> LaurentPoly:
    """G^{k,-} = t^{rho^vee} prod_{alpha > 0} (k^{-1} - k t^{-alpha^vee}).

    In the GL case rho^vee is replaced by the integral shift (m-1, ..., 0),
    which changes G^{k,-} by a W_0-invariant monomial only.
    """
    out = LaurentPoly.monomial(datum.rho_vee)
    one = LaurentPoly.constant(1, datum.dim)
    for b in datum.positive_roots:
        k = params.k_root(datum, b)
        out = out * (one.scale(1 / k) - LaurentPoly.monomial(tuple(-x for x in datum.coroot[b]), k))
    return out


def G_sign(datum: RootDatum, params: Params, sign: int) -> LaurentPoly:
    return LaurentPoly.constant(1, datum.dim) if sign > 0 else G_minus(datum, params)


# -- exact linear algebra ----------------------------------------------------------

def row_reduce(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return a, []
    ncol = len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncol):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def nullspace(rows: Sequence[Sequence], ncol: int | None = None) -> list[list[Fraction]]:
    """Basis of {x : A x = 0}."""
    if ncol is None:
        ncol = len(rows[0]) if rows else 0
    red, pivots = row_reduce(rows) if rows else ([], [])
    free = [c for c in range(ncol) if c not in pivots]
    out = []
    for f in free:
        v = [Fraction(0)] * ncol
        v[f] = Fraction(1)
        for r, p in zip(red, pivots):
            v[p] = -r[f]
        out.append(v)
    return out


def matrix_rank(rows: Sequence[Sequence]) -> int:
    return len(row_reduce(rows)[1]) if rows else 0
