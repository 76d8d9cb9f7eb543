"""Submultiplicative weight descriptors and their sampled comparison calculus.

A descriptor is a small immutable tree that evaluates pointwise to a value
>= 1 on its domain (tuples of complex scalars, or group elements for word
weights).  Majorization and equivalence between descriptors are *sampled*
verdicts, never theorems: the fit is done on the lower radius tiers and
tested on the largest one, with fixed slack constants, so genuinely
asymptotic violations (distortion phenomena) surface as extrapolation
failures with a concrete witness.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction


class WeightDomainError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Descriptors
# ---------------------------------------------------------------------------

class Weight:
    """Base class; subclasses define dim, log_eval and a grammar rendering.

    log_eval is the primitive (weights compare on the log scale, where the
    huge exponential values stay representable); eval exponentiates and
    saturates to inf on float overflow.
    """

    dim = 1

    def log_eval(self, point) -> float:
        raise NotImplementedError

    def eval(self, point) -> float:
        try:
            return math.exp(self.log_eval(point))
        except OverflowError:
            return math.inf

    def __call__(self, point) -> float:
        return self.eval(point)

    def _coords(self, point):
        if self.dim == 1 and not isinstance(point, (tuple, list)):
            point = (point,)
        if len(point) != self.dim:
            raise WeightDomainError(
                f"{self} expects {self.dim} coordinates, got {len(point)}")
        return tuple(point)


@dataclass(frozen=True)
class Poly(Weight):
    """z -> 1 + sum_i |z_i| (the l1 choice of norm on a delta block)."""

    dim: int = 1

    def log_eval(self, point) -> float:
        coords = self._coords(point)
        return math.log1p(sum(abs(complex(z)) for z in coords))

    def __str__(self):
        return "poly" if self.dim == 1 else f"poly({self.dim})"


@dataclass(frozen=True)
class ExpPower(Weight):
    """z -> exp(|z|^(1/w)) for an integer depth exponent w >= 1."""

    w: int = 1

    def __post_init__(self):
        if not (isinstance(self.w, int) and self.w >= 1):
            raise WeightDomainError("exp_power needs an integer w >= 1")

    def log_eval(self, point) -> float:
        (z,) = self._coords(point)
        return abs(complex(z)) ** (1.0 / self.w)

    def __str__(self):
        return f"exppow({self.w})"


@dataclass(frozen=True)
class MaxPower(Weight):
    """s -> exp(max_k |s_k|^(1/w_k)), the canonical-coordinate weight."""

    ws: tuple = (1,)

    def __post_init__(self):
        object.__setattr__(self, "ws", tuple(self.ws))
        if not self.ws or any(not (isinstance(w, int) and w >= 1) for w in self.ws):
            raise WeightDomainError("max_power needs integer exponents >= 1")

    @property
    def dim(self):
        return len(self.ws)

    def log_eval(self, point) -> float:
        coords = self._coords(point)
        return max(abs(complex(z)) ** (1.0 / w)
                   for z, w in zip(coords, self.ws))

    def __str__(self):
        return "maxpow(" + ",".join(str(w) for w in self.ws) + ")"


@dataclass(frozen=True)
class ExpSum(Weight):
    """z -> exp(|z_1 + ... + z_k|); the non-decomposable counterexample weight."""

    dim: int = 2

    def log_eval(self, point) -> float:
        coords = self._coords(point)
        return abs(sum(complex(z) for z in coords))

    def __str__(self):
        return f"expsum({self.dim})"


@dataclass(frozen=True)
class Const(Weight):
    """Symbolic factor (reductive tail): evaluates to 1, consumes one slot."""

    dim: int = 1

    def log_eval(self, point) -> float:
        self._coords(point)
        return 0.0

    def __str__(self):
        return "const" if self.dim == 1 else f"const({self.dim})"


class WordWeight(Weight):
    """2^(word length) on a finitely generated group model, via its BFS table."""

    dim = 1

    def __init__(self, table, name: str = "word"):
        self.table = table  # cayley.WordWeightTable
        self.name = name

    def log_eval(self, point) -> float:
        n = self.table.length(point)
        if n is None and isinstance(point, (tuple, list)) and len(point) == 1:
            n = self.table.length(point[0])
        if n is None:
            raise WeightDomainError(f"element {point!r} beyond BFS radius")
        return n * math.log(2.0)

    def __eq__(self, other):
        return isinstance(other, WordWeight) and other.table is self.table

    def __hash__(self):
        return hash((WordWeight, id(self.table)))

    def __str__(self):
        return f"word({self.name})"


@dataclass(frozen=True)
class Product(Weight):
    """Product across the factors of a product domain."""

    parts: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))

    @property
    def dim(self):
        return sum(p.dim for p in self.parts)

    def blocks(self, point):
        coords = self._coords(point)
        out, pos = [], 0
        for p in self.parts:
            out.append(coords[pos:pos + p.dim])
            pos += p.dim
        return out

    def log_eval(self, point) -> float:
        return sum(p.log_eval(block)
                   for p, block in zip(self.parts, self.blocks(point)))

    def __str__(self):
        return "prod(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class Power(Weight):
    """Pointwise power w^gamma (gamma > 0 keeps submultiplicativity classes)."""

    base: Weight = None
    gamma: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "gamma", Fraction(self.gamma))
        if self.gamma <= 0:
            raise WeightDomainError("power needs gamma > 0")

    @property
    def dim(self):
        return self.base.dim

    def log_eval(self, point) -> float:
        return float(self.gamma) * self.base.log_eval(point)

    def __str__(self):
        return f"pow({self.base},{self.gamma})"


@dataclass(frozen=True)
class Restriction(Weight):
    """Restriction of a weight on a product domain to a prefix of its factors."""

    base: Product = None
    prefix: int = 1

    def __post_init__(self):
        if not isinstance(self.base, Product):
            raise WeightDomainError("restriction needs a product descriptor")
        if not 1 <= self.prefix <= len(self.base.parts):
            raise WeightDomainError("restriction prefix out of range")

    @property
    def dim(self):
        return sum(p.dim for p in self.base.parts[: self.prefix])

    def log_eval(self, point) -> float:
        coords = self._coords(point)
        pad = self.base.dim - self.dim
        return self.base.log_eval(tuple(coords) + (0,) * pad)

    def __str__(self):
        return f"restrict({self.base},{self.prefix})"


# ---------------------------------------------------------------------------
# Descriptor grammar (CLI surface)
# ---------------------------------------------------------------------------

def parse_weight(text: str, group_resolver=None) -> Weight:
    """Parse the prefix grammar: poly, poly(3), exppow(2), maxpow(1,1,2),
    expsum(2), const, word(<group>), prod(...), pow(w,3/2), restrict(w,2)."""
    pos = 0
    s = text.strip()

    def error(msg):
        raise WeightDomainError(f"{msg} at position {pos} in {text!r}")

    def peek():
        return s[pos] if pos < len(s) else ""

    def parse_expr():
        nonlocal pos
        start = pos
        while pos < len(s) and (s[pos].isalnum() or s[pos] in "_"):
            pos += 1
        head = s[start:pos]
        if not head:
            error("expected a descriptor name")
        args = []
        if peek() == "(":
            pos += 1
            if head in ("prod", "pow", "restrict"):
                args.append(parse_expr())
                while peek() == ",":
                    pos += 1
                    if head == "prod":
                        args.append(parse_expr())
                    else:
                        args.append(parse_scalar())
            elif head == "word":
                depth = 1
                start2 = pos
                while pos < len(s) and depth:
                    if s[pos] == "(":
                        depth += 1
                    elif s[pos] == ")":
                        depth -= 1
                        if not depth:
                            break
                    pos += 1
                args.append(s[start2:pos])
            else:
                while peek() != ")":
                    args.append(parse_scalar())
                    if peek() == ",":
                        pos += 1
            if peek() != ")":
                error("expected ')'")
            pos += 1
        return build(head, args)

    def parse_scalar():
        nonlocal pos
        start = pos
        while pos < len(s) and (s[pos].isdigit() or s[pos] in "/-"):
            pos += 1
        if start == pos:
            error("expected a number")
        return Fraction(s[start:pos])

    def build(head, args):
        if head == "poly":
            return Poly(int(args[0])) if args else Poly()
        if head == "exppow":
            return ExpPower(int(args[0]))
        if head == "maxpow":
            return MaxPower(tuple(int(a) for a in args))
        if head == "expsum":
            return ExpSum(int(args[0])) if args else ExpSum()
        if head == "const":
            return Const(int(args[0])) if args else Const()
        if head == "prod":
            return Product(tuple(args))
        if head == "pow":
            return Power(args[0], args[1])
        if head == "restrict":
            return Restriction(args[0], int(args[1]))
        if head == "word":
            if group_resolver is None:
                raise WeightDomainError("no group resolver for word() descriptors")
            table, name = group_resolver(args[0])
            return WordWeight(table, name)
        raise WeightDomainError(f"unknown descriptor {head!r}")

    out = parse_expr()
    if pos != len(s):
        error("trailing input")
    return out


# ---------------------------------------------------------------------------
# Sampling and verdicts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SamplerConfig:
    count: int = 256
    radii: tuple = (1.0, 10.0, 100.0, 1000.0)
    seed: int = 0


HOLDS = "holds"
VIOLATED = "violated"
INCONCLUSIVE = "inconclusive"

_SLACK = 1.05   # multiplicative slack for "holds"
_EXCESS = 5.0   # excess factor certifying "violated"


@dataclass
class MajorizationVerdict:
    verdict: str
    gamma: float | None = None
    constant: float | None = None
    witness: object = None
    excess: float = 0.0          # log of the worst excess over the frontier
    samples: list = field(default_factory=list)  # (point, log lhs, log rhs)

    def __bool__(self):
        return self.verdict == HOLDS


def _structured_points(dim: int, radius: float):
    pts = [tuple([0.0] * dim)]
    for i in range(dim):
        axis = [0.0] * dim
        axis[i] = radius
        pts.append(tuple(axis))
    pts.append(tuple([radius] * dim))
    if dim >= 2:
        pts.append(tuple(radius * (-1.0) ** i for i in range(dim)))  # antidiagonal
    return pts


def sample_points(dim: int, config: SamplerConfig):
    """Deterministic per-tier samples: random disk points plus structured
    probes (axes, diagonal, antidiagonal) that expose cancellation effects."""
    rng = random.Random(config.seed)
    tiers = []
    for radius in config.radii:
        pts = list(_structured_points(dim, radius))
        for _ in range(config.count):
            pt = []
            for _ in range(dim):
                r = radius * math.sqrt(rng.random())
                phi = rng.random() * 2 * math.pi
                pt.append(cmath.rect(r, phi))
            pts.append(tuple(pt))
        tiers.append(pts)
    return tiers


def _word_table_of(w: Weight):
    if isinstance(w, WordWeight):
        return w.table
    if isinstance(w, Product):
        for p in w.parts:
            t = _word_table_of(p)
            if t is not None:
                return t
        return None
    if isinstance(w, (Power, Restriction)):
        return _word_table_of(w.base)
    return None


def sample_group_points(table, config: SamplerConfig):
    """Group-element tiers from a BFS table, nested balls of growing radius."""
    rng = random.Random(config.seed)
    radius = table.radius
    cuts = sorted({max(1, radius // 8), max(1, radius // 4),
                   max(1, radius // 2), radius})
    elements = list(table.lengths)  # BFS order: deterministic
    tiers = []
    for cut in cuts:
        pool = [g for g in elements if table.lengths[g] <= cut]
        pts = [pool[rng.randrange(len(pool))]
               for _ in range(min(config.count, len(pool)))]
        tiers.append(pts)
    return tiers


def _lsq(xs, ys):
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    if sxx == 0:
        return 0.0, my
    b = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sxx
    return b, my - b * mx


def _majorize_from_tiers(tiers):
    """tiers: list of [(point, log lhs, log rhs)] per radius tier, ascending.

    Fits the exponent on every tier but the last (least squares on the log
    pairs), builds a small frontier of (gamma, C) candidates with envelope
    constants, and classifies against all samples including the held-out
    largest tier; a genuine asymptotic violation shows up as an extrapolation
    failure beyond every frontier candidate.
    """
    train = [rec for tier in tiers[:-1] for rec in tier] or tiers[-1]
    every = [rec for tier in tiers for rec in tier]
    logx = [r[2] for r in train]
    logy = [r[1] for r in train]
    slope, _ = _lsq(logx, logy)
    base = max(slope, 1e-6)
    frontier = []
    for mult in (0.25, 0.5, 1.0, 2.0, 4.0):
        gamma = base * mult
        logc = max(ly - gamma * lx for lx, ly in zip(logx, logy))
        frontier.append((gamma, logc))

    best = None
    worst_excess = None
    for gamma, logc in frontier:
        excess, witness = 0.0, None
        for point, lhs, rhs in every:
            e = lhs - (logc + gamma * rhs)
            if e > excess:
                excess, witness = e, point
        if excess <= math.log(_SLACK):
            if best is None or gamma < best[0]:
                best = (gamma, logc)
        if worst_excess is None or excess < worst_excess[0]:
            worst_excess = (excess, witness, gamma, logc)
    if best is not None:
        gamma, logc = best
        return MajorizationVerdict(HOLDS, gamma=gamma, constant=math.exp(logc),
                                   samples=every)
    excess, witness, gamma, logc = worst_excess
    verdict = VIOLATED if excess > math.log(_EXCESS) else INCONCLUSIVE
    return MajorizationVerdict(verdict, gamma=gamma, constant=math.exp(logc),
                               witness=witness, excess=excess, samples=every)


def majorizes(w1: Weight, w2: Weight,
              config: SamplerConfig = SamplerConfig()) -> MajorizationVerdict:
    """Sampled test of the majorization w1 <= C * w2^gamma."""
    if w1.dim != w2.dim:
        raise WeightDomainError("majorizes needs a common domain")
    table = _word_table_of(w1) or _word_table_of(w2)
    point_tiers = (sample_group_points(table, config) if table is not None
                   else sample_points(w1.dim, config))
    tiers = []
    for pts in point_tiers:
        tiers.append([(p, w1.log_eval(p), w2.log_eval(p)) for p in pts])
    return _majorize_from_tiers(tiers)


@dataclass
class EquivalenceVerdict:
    verdict: str
    forward: MajorizationVerdict
    backward: MajorizationVerdict

    def __bool__(self):
        return self.verdict == "equivalent"


def equivalent(w1: Weight, w2: Weight,
               config: SamplerConfig = SamplerConfig()) -> EquivalenceVerdict:
    fwd = majorizes(w1, w2, config)
    bwd = majorizes(w2, w1, config)
    if fwd.verdict == HOLDS and bwd.verdict == HOLDS:
        v = "equivalent"
    elif fwd.verdict == VIOLATED or bwd.verdict == VIOLATED:
        v = VIOLATED
    else:
        v = INCONCLUSIVE
    return EquivalenceVerdict(v, fwd, bwd)


def decompose_check(w: Weight, parts,
                    config: SamplerConfig = SamplerConfig()) -> EquivalenceVerdict:
    """Sampled two-sided comparison of w against the product of the parts."""
    parts = list(parts)
    total = sum(p.dim for p in parts)
    if w.dim != total:
        raise WeightDomainError(
            f"parts dimensions sum to {total}, weight domain has {w.dim}")
    prod = Product(tuple(parts))
    tiers = []
    for pts in sample_points(w.dim, config):
        tiers.append([(p, w.log_eval(p), prod.log_eval(p)) for p in pts])
    fwd = _majorize_from_tiers(tiers)
    bwd = _majorize_from_tiers(
        [[(p, rhs, lhs) for p, lhs, rhs in tier] for tier in tiers])
    if fwd.verdict == HOLDS and bwd.verdict == HOLDS:
        v = "equivalent"
    elif fwd.verdict == VIOLATED or bwd.verdict == VIOLATED:
        v = VIOLATED
    else:
        v = INCONCLUSIVE
    return EquivalenceVerdict(v, fwd, bwd)


def chain_weight(chain) -> Weight:
    """Weight descriptor of a decomposition chain.

    Delta blocks contribute 1 + sum|s_i| (l1 norm), exp blocks the
    canonical-coordinate factor exp(max_k |t_k|^(1/w_k)); a reductive tail
    stays a symbolic constant slot.
    """
    parts = []
    if chain.p:
        parts.append(Poly(chain.p))
    if chain.w_exponents:
        parts.append(MaxPower(tuple(chain.w_exponents)))
    if chain.tail_dim:
        parts.append(Const())
    if not parts:
        return Const()
    if len(parts) == 1:
        return parts[0]
    return Product(tuple(parts))


def chain_factor_weights(chain) -> list[Weight]:
    """Per-coordinate factor weights aligned with chain_weight's domain."""
    parts: list[Weight] = [Poly() for _ in range(chain.p)]
    parts.extend(ExpPower(w) for w in chain.w_exponents)
    if chain.tail_dim:
        parts.append(Const())
    return parts


# ---------------------------------------------------------------------------
# Series norms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SeriesNorm:
    """The weighted l1 norm sum |a_n| r^n / n!^s on one-variable series."""

    r: Fraction = Fraction(1)
    s: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "r", Fraction(self.r))
        object.__setattr__(self, "s", Fraction(self.s))
        if self.r <= 0:
            raise WeightDomainError("series norm needs r > 0")
        if self.s < 0:
            raise WeightDomainError("series norm needs s >= 0")


def series_norm(coeffs, norm: SeriesNorm):
    """Partial sum of the norm over the given coefficients.

    Exact Fraction when every coefficient is real-rational and s is an
    integer; float otherwise.
    """
    exact = norm.s.denominator == 1 and all(
        getattr(c, "is_rational", lambda: False)() or isinstance(c, (int, Fraction))
        for c in coeffs)
    total = Fraction(0) if exact else 0.0
    for n, c in enumerate(coeffs):
        fact = math.factorial(n)
        if exact:
            mag = c.abs_rational() if hasattr(c, "abs_rational") else abs(Fraction(c))
            total += mag * norm.r ** n / fact ** int(norm.s)
        else:
            mag = c.modulus() if hasattr(c, "modulus") else abs(complex(c))
            total += mag * float(norm.r) ** n / float(fact) ** float(norm.s)
    return total


def _convolve(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


@dataclass
class NormCheckReport:
    passed: bool
    pairs_checked: int
    polys_checked: int
    witness: object = None


def norm_submultiplicativity_check(degree: int = 8, r=1, s=0,
                                   random_polys: int = 100,
                                   seed: int = 0) -> NormCheckReport:
    """Verify ||ab||_{r,s} <= ||a||_{r',s} ||b||_{r',s} with r' = 2^s r.

    Brute force over all monomial pairs with exponents up to `degree`, then
    over random rational-coefficient polynomials; everything is exact.
    """
    r = Fraction(r)
    s_int = int(Fraction(s))
    if Fraction(s) != s_int:
        raise WeightDomainError("the exact check needs an integer s")
    rp = Fraction(2) ** s_int * r
    n_base = SeriesNorm(r, s_int)
    n_big = SeriesNorm(rp, s_int)
    pairs = 0
    for k in range(degree + 1):
        for m in range(degree + 1):
            a = [Fraction(0)] * k + [Fraction(1)]
            b = [Fraction(0)] * m + [Fraction(1)]
            lhs = series_norm(_convolve(a, b), n_base)
            rhs = series_norm(a, n_big) * series_norm(b, n_big)
            pairs += 1
            if lhs > rhs:
                return NormCheckReport(False, pairs, 0, witness=("monomial", k, m))
    rng = random.Random(seed)

    def rand_poly():
        deg = rng.randint(0, degree)
        return [Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                for _ in range(deg + 1)]

    for t in range(random_polys):
        a, b = rand_poly(), rand_poly()
        lhs = series_norm(_convolve(a, b), n_base)
        rhs = series_norm(a, n_big) * series_norm(b, n_big)
        if lhs > rhs:
            return NormCheckReport(False, pairs, t + 1, witness=("poly", a, b))
    return NormCheckReport(True, pairs, random_polys)


def product_bound_check(tuples: int = 10_000, max_p: int = 6,
                        seed: int = 0):
    """Exact check of 1 + sum|s_i| <= prod(1+|s_i|) <= (1+sum|s_i|)^p.

    Moduli are sampled as nonnegative rationals so both inequalities are
    decided in exact arithmetic with zero slack.
    """
    rng = random.Random(seed)
    for t in range(tuples):
        p = rng.randint(1, max_p)
        mags = [Fraction(rng.randint(0, 10_000), rng.randint(1, 100))
                for _ in range(p)]
        total = 1 + sum(mags)
        prod = Fraction(1)
        for m in mags:
            prod *= 1 + m
        if not (total <= prod <= total ** p):
            return False, (t, mags)
    return True, None
