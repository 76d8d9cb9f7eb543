"""Finitely generated group models: word weights, distortion, delta smash.

Discrete lattices stand in for the complex Lie groups (the Heisenberg
lattice for the Heisenberg group, a Baumslag-Solitar-type group for the
exponentially distorted directions).  Word lengths come from an exact,
radius-bounded breadth-first search; all asymptotic statements are reported
as finite-radius fits with explicit tolerances.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, PreconditionError


class CayleyGroup:
    """Base interface: canonical hashable normal forms plus the group law."""

    name = "group"

    def identity(self):
        raise NotImplementedError

    def multiply(self, a, b):
        raise NotImplementedError

    def inverse(self, a):
        raise NotImplementedError

    def generators(self) -> list:
        """Symmetric generating set U, identity excluded."""
        raise NotImplementedError

    def random_element(self, rng: random.Random, size: int):
        """Random element from a word of length <= size (always in the group)."""
        g = self.identity()
        gens = self.generators()
        for _ in range(rng.randint(0, size)):
            g = self.multiply(g, rng.choice(gens))
        return g

    def power(self, a, n: int):
        out = self.identity()
        base = a if n >= 0 else self.inverse(a)
        for _ in range(abs(n)):
            out = self.multiply(out, base)
        return out

    def parse_element(self, text: str):
        raise NotImplementedError

    def __repr__(self):
        return f"<CayleyGroup {self.name}>"


class ZK(CayleyGroup):
    """Free abelian Z^k with the standard generators."""

    def __init__(self, k: int):
        if k < 1:
            raise InputError("zk needs k >= 1")
        self.k = k
        self.name = f"zk:{k}"

    def identity(self):
        return (0,) * self.k

    def multiply(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def inverse(self, a):
        return tuple(-x for x in a)

    def generators(self):
        gens = []
        for i in range(self.k):
            e = [0] * self.k
            e[i] = 1
            gens.append(tuple(e))
            e[i] = -1
            gens.append(tuple(e))
        return gens

    def parse_element(self, text):
        return _parse_int_tuple(text, self.k)


class Heis3Z(CayleyGroup):
    """Discrete Heisenberg group on normal forms (a, b, c).

    (a, b, c)(a', b', c') = (a + a', b + b', c + c' + a b'); the generating
    set is {x, x^-1, y, y^-1} with x = (1,0,0), y = (0,1,0), so the center
    z = (0,0,1) is a derived element.
    """

    name = "heis3z"

    def identity(self):
        return (0, 0, 0)

    def multiply(self, g, h):
        a, b, c = g
        a2, b2, c2 = h
        return (a + a2, b + b2, c + c2 + a * b2)

    def inverse(self, g):
        a, b, c = g
        return (-a, -b, -c + a * b)

    def generators(self):
        return [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0)]

    def parse_element(self, text):
        return _parse_int_tuple(text, 3)


class BS12(CayleyGroup):
    """Baumslag-Solitar-type group t a t^-1 = a^2, as Z[1/2] x| Z.

    Normal form (x, n) with x a dyadic rational:
    (x, n)(y, m) = (x + 2^n y, n + m); a = (1, 0), t = (0, 1).
    """

    name = "bs12"

    def identity(self):
        return (Fraction(0), 0)

    def multiply(self, g, h):
        x, n = g
        y, m = h
        return (x + _pow2(n) * y, n + m)

    def inverse(self, g):
        x, n = g
        return (-_pow2(-n) * x, -n)

    def generators(self):
        one = Fraction(1)
        return [(one, 0), (-one, 0), (Fraction(0), 1), (Fraction(0), -1)]

    def parse_element(self, text):
        parts = [p.strip() for p in text.strip().strip("()").split(",")]
        if len(parts) != 2:
            raise InputError(f"bs12 element needs (x, n), got {text!r}")
        return (Fraction(parts[0]), int(parts[1]))


_POW2_CACHE: dict[int, Fraction] = {}


def _pow2(n: int) -> Fraction:
    out = _POW2_CACHE.get(n)
    if out is None:
        out = Fraction(2) ** n
        _POW2_CACHE[n] = out
    return out


class SemidirectZkZ(CayleyGroup):
    """Z^k x|_M Z for an integer matrix M with det +-1.

    Normal form (v, n): (v, n)(w, m) = (v + M^n w, n + m).
    """

    def __init__(self, matrix):
        self.k = len(matrix)
        self.matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        if any(len(row) != self.k for row in self.matrix):
            raise InputError("semidirect matrix must be square")
        det = _int_det(self.matrix)
        if det not in (1, -1):
            raise InputError(f"semidirect matrix must have det +-1, got {det}")
        self._inv = _int_inverse(self.matrix, det)
        self._powers: dict[int, tuple] = {0: _int_identity(self.k)}
        rows = ";".join(",".join(str(x) for x in row) for row in self.matrix)
        self.name = f"semidirect:{self.k}:[{rows}]"

    def _power_matrix(self, n: int):
        out = self._powers.get(n)
        if out is not None:
            return out
        if n > 0:
            out = _int_matmul(self._power_matrix(n - 1), self.matrix)
        else:
            out = _int_matmul(self._power_matrix(n + 1), self._inv)
        self._powers[n] = out
        return out

    def act(self, n: int, v: tuple) -> tuple:
        m = self._power_matrix(n)
        return tuple(sum(m[i][j] * v[j] for j in range(self.k))
                     for i in range(self.k))

    def identity(self):
        return ((0,) * self.k, 0)

    def multiply(self, g, h):
        v, n = g
        w, m = h
        return (tuple(a + b for a, b in zip(v, self.act(n, w))), n + m)

    def inverse(self, g):
        v, n = g
        return (tuple(-x for x in self.act(-n, v)), -n)

    def generators(self):
        gens = []
        for i in range(self.k):
            e = [0] * self.k
            e[i] = 1
            gens.append((tuple(e), 0))
            e[i] = -1
            gens.append((tuple(e), 0))
        gens.append(((0,) * self.k, 1))
        gens.append(((0,) * self.k, -1))
        return gens

    def parse_element(self, text):
        flat = _parse_int_tuple(text, self.k + 1)
        return (flat[: self.k], flat[self.k])


class DirectProduct(CayleyGroup):
    """Componentwise product of two group models."""

    def __init__(self, g1: CayleyGroup, g2: CayleyGroup):
        self.g1 = g1
        self.g2 = g2
        self.name = f"product({g1.name},{g2.name})"

    def identity(self):
        return (self.g1.identity(), self.g2.identity())

    def multiply(self, a, b):
        return (self.g1.multiply(a[0], b[0]), self.g2.multiply(a[1], b[1]))

    def inverse(self, a):
        return (self.g1.inverse(a[0]), self.g2.inverse(a[1]))

    def generators(self):
        e1, e2 = self.g1.identity(), self.g2.identity()
        return ([(g, e2) for g in self.g1.generators()]
                + [(e1, g) for g in self.g2.generators()])


def _parse_int_tuple(text: str, k: int):
    parts = [p.strip() for p in text.strip().strip("()").split(",") if p.strip()]
    if len(parts) != k:
        raise InputError(f"expected {k} integer coordinates, got {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise InputError(f"bad integer in {text!r}") from exc


def _int_identity(k):
    return tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))


def _int_matmul(a, b):
    k = len(a)
    return tuple(tuple(sum(a[i][l] * b[l][j] for l in range(k))
                       for j in range(k)) for i in range(k))


def _int_det(m):
    k = len(m)
    if k == 1:
        return m[0][0]
    total = 0
    for j in range(k):
        minor = tuple(row[:j] + row[j + 1:] for row in m[1:])
        total += (-1) ** j * m[0][j] * _int_det(minor)
    return total


def _int_inverse(m, det):
    k = len(m)
    cof = []
    for i in range(k):
        row = []
        for j in range(k):
            minor = tuple(r[:j] + r[j + 1:] for ri, r in enumerate(m) if ri != i)
            row.append((-1) ** (i + j) * (_int_det(minor) if k > 1 else 1))
        cof.append(row)
    # adjugate transpose over det (+-1 keeps everything integral)
    return tuple(tuple(cof[j][i] * det for j in range(k)) for i in range(k))


def make_group(spec: str) -> CayleyGroup:
    """Build a group model from a CLI spec string."""
    spec = spec.strip()
    if spec == "heis3z":
        return Heis3Z()
    if spec == "bs12":
        return BS12()
    if spec.startswith("zk:"):
        return ZK(int(spec.split(":", 1)[1]))
    if spec.startswith("semidirect:"):
        import json
        body = spec.split(":", 1)[1]
        return SemidirectZkZ(json.loads(body))
    raise InputError(f"unknown group spec {spec!r}")


# ---------------------------------------------------------------------------
# word weights by breadth-first search
# ---------------------------------------------------------------------------

class WordWeightTable:
    """Exact word lengths on the ball of a given radius (weight = 2^length)."""

    def __init__(self, group: CayleyGroup, radius: int):
        self.group = group
        self.radius = radius
        lengths = {group.identity(): 0}
        frontier = deque([group.identity()])
        gens = group.generators()
        mult = group.multiply
        for depth in range(radius):
            nxt = deque()
            while frontier:
                g = frontier.popleft()
                for u in gens:
                    h = mult(g, u)
                    if h not in lengths:
                        lengths[h] = depth + 1
                        nxt.append(h)
            frontier = nxt
        self.lengths = lengths

    def __len__(self):
        return len(self.lengths)

    def length(self, g):
        return self.lengths.get(g)

    def weight(self, g):
        n = self.length(g)
        return None if n is None else 2 ** n

    def shell(self, n: int):
        return [g for g, l in self.lengths.items() if l == n]


_TABLE_CACHE: dict[tuple, WordWeightTable] = {}


def word_table(group: CayleyGroup, radius: int) -> WordWeightTable:
    key = (group.name, radius)
    table = _TABLE_CACHE.get(key)
    if table is None:
        table = WordWeightTable(group, radius)
        _TABLE_CACHE[key] = table
    return table


def word_weight(group: CayleyGroup, element, radius: int):
    """Exact weight 2^(word length), or None when beyond the BFS radius."""
    return word_table(group, radius).weight(element)


# ---------------------------------------------------------------------------
# distortion
# ---------------------------------------------------------------------------

@dataclass
class DistortionFit:
    classification: str          # "power" or "exponential"
    alpha: float | None
    points: int
    ssr_power: float
    ssr_log: float

    @property
    def exponential(self) -> bool:
        return self.classification == "exponential"


def _lsq(xs, ys):
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    if sxx == 0:
        return 0.0, my
    slope = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sxx
    return slope, my - slope * mx


def growth_table(group: CayleyGroup, h, radius: int, max_power: int = 4096):
    """(m, word length of h^m) for all powers inside the BFS ball."""
    table = word_table(group, radius)
    data = []
    g = group.identity()
    for m in range(1, max_power + 1):
        g = group.multiply(g, h)
        n = table.length(g)
        if n is not None and n > 0:
            data.append((m, n))
    return data


def distortion_fit(group: CayleyGroup, h, radius: int,
                   max_power: int = 4096) -> DistortionFit:
    """Fit len(h^m) ~ m^(1/alpha) against len(h^m) ~ log m on BFS data.

    Both models are scored by their residuals on the raw lengths; the
    logarithmic model winning is reported as exponential distortion.
    """
    data = growth_table(group, h, radius, max_power)
    if len(data) < 8:
        raise PreconditionError(
            f"insufficient data: only {len(data)} powers of {h!r} inside "
            f"radius {radius}")
    logm = [math.log(m) for m, _ in data]
    lens = [float(n) for _, n in data]
    loglen = [math.log(x) for x in lens]

    slope, intercept = _lsq(logm, loglen)
    ssr_power = sum((math.exp(intercept + slope * x) - y) ** 2
                    for x, y in zip(logm, lens))
    c2, c1 = _lsq(logm, lens)
    ssr_log = sum((c1 + c2 * x - y) ** 2 for x, y in zip(logm, lens))

    if ssr_log < ssr_power or slope <= 0.02:
        return DistortionFit("exponential", None, len(data), ssr_power, ssr_log)
    return DistortionFit("power", 1.0 / slope, len(data), ssr_power, ssr_log)


# ---------------------------------------------------------------------------
# group-algebra smash at the delta-functional level
# ---------------------------------------------------------------------------

@dataclass
class SmashCheckResult:
    passed: bool
    checked: int
    witness: object = None
    reason: str = ""


def delta_smash_check(g1: CayleyGroup, g2: CayleyGroup, alpha,
                      combined: CayleyGroup, embed,
                      samples: int = 200, seed: int = 0,
                      size: int = 6, quadruples=None) -> SmashCheckResult:
    """Check the delta-level smash isomorphism against independent normal forms.

    The left side multiplies delta functionals by the smash rule
    (d_x (x) d_u)(d_y (x) d_v) = d_{x . alpha_u(y)} (x) d_{u v} using only the
    factor groups and the action; the right side multiplies embed(x, u) by
    embed(y, v) inside the combined group's own normal form.  alpha is first
    checked to act by automorphisms on the sampled elements.
    """
    rng = random.Random(seed)
    if quadruples is None:
        quadruples = [
            (g1.random_element(rng, size), g2.random_element(rng, size),
             g1.random_element(rng, size), g2.random_element(rng, size))
            for _ in range(samples)
        ]
    checked = 0
    for x, u, y, v in quadruples:
        # automorphism axioms for the sampled acting elements
        if alpha(u, g1.multiply(x, y)) != g1.multiply(alpha(u, x), alpha(u, y)):
            return SmashCheckResult(False, checked, (u, x, y),
                                    "alpha is not multiplicative")
        if alpha(u, g1.identity()) != g1.identity():
            return SmashCheckResult(False, checked, (u,),
                                    "alpha does not fix the identity")
        if alpha(g2.multiply(u, v), x) != alpha(u, alpha(v, x)):
            return SmashCheckResult(False, checked, (u, v, x),
                                    "alpha is not a homomorphism in g2")
        lhs = embed(g1.multiply(x, alpha(u, y)), g2.multiply(u, v))
        rhs = combined.multiply(embed(x, u), embed(y, v))
        if lhs != rhs:
            return SmashCheckResult(False, checked, (x, u, y, v),
                                    "smash product disagrees with normal form")
        checked += 1
    return SmashCheckResult(True, checked)


def heis_as_semidirect_scenario():
    """heis3Z presented as Z^2 x| Z acting through shears.

    With the embedding (a, b), c -> (a, c, b + a c) into the (a, b, c)
    normal forms, consistency forces alpha_u(c, d) = (c, d - c u).
    """
    g1, g2 = ZK(2), ZK(1)
    combined = Heis3Z()

    def alpha(u, x):
        (n,) = u
        c, dd = x
        return (c, dd - c * n)

    def embed(x, u):
        a, b = x
        (c,) = u
        return (a, c, b + a * c)

    return g1, g2, alpha, combined, embed


def z_semidirect_sign_scenario():
    """Z x|_{-1} Z: the acting copy of Z flips the sign of the normal copy."""
    g1, g2 = ZK(1), ZK(1)
    combined = SemidirectZkZ([[-1]])

    def alpha(u, x):
        (n,) = u
        (a,) = x
        return (a if n % 2 == 0 else -a,)

    def embed(x, u):
        return (x, u[0])

    return g1, g2, alpha, combined, embed


def direct_product_scenario(g1: CayleyGroup, g2: CayleyGroup):
    """Trivial action: the smash degenerates to the direct product."""
    combined = DirectProduct(g1, g2)

    def alpha(u, x):
        return x

    def embed(x, u):
        return (x, u)

    return g1, g2, alpha, combined, embed


# ---------------------------------------------------------------------------
# weighted l1 convolution check
# ---------------------------------------------------------------------------

def weighted_l1_submult_check(group: CayleyGroup, weight, samples: int = 200,
                              seed: int = 0, size: int = 5,
                              support: int = 4) -> SmashCheckResult:
    """Sampled submultiplicativity of ||.||_w on finitely supported functionals.

    Checks w(gh) <= w(g) w(h) on sampled pairs (including the diagonal
    probes g = h) and the full convolution inequality ||a b|| <= ||a|| ||b||
    for random finitely supported a, b.
    """
    rng = random.Random(seed)

    def wval(g):
        return weight.eval(g)

    def sample():
        return group.random_element(rng, size)

    checked = 0
    pairs = [(sample(), sample()) for _ in range(samples)]
    pairs += [(g, g) for g, _ in pairs[: max(8, samples // 8)]]
    for g, h in pairs:
        try:
            lhs = wval(group.multiply(g, h))
            rg, rh = wval(g), wval(h)
        except Exception:
            continue  # beyond a word-weight radius: skip the probe
        if lhs > rg * rh * (1 + 1e-12):
            return SmashCheckResult(False, checked, (g, h),
                                    "pointwise submultiplicativity fails")
        checked += 1

    for _ in range(max(8, samples // 8)):
        sup_a = [sample() for _ in range(rng.randint(1, support))]
        sup_b = [sample() for _ in range(rng.randint(1, support))]
        ca = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in sup_a]
        cb = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in sup_b]
        try:
            conv: dict = {}
            for g, x in zip(sup_a, ca):
                for h, y in zip(sup_b, cb):
                    key = group.multiply(g, h)
                    conv[key] = conv.get(key, Fraction(0)) + x * y
            lhs = sum(abs(float(c)) * wval(g) for g, c in conv.items())
            na = sum(abs(float(c)) * wval(g) for c, g in zip(ca, sup_a))
            nb = sum(abs(float(c)) * wval(g) for c, g in zip(cb, sup_b))
        except Exception:
            continue
        if lhs > na * nb * (1 + 1e-12):
            return SmashCheckResult(False, checked, (sup_a, sup_b),
                                    "convolution norm inequality fails")
        checked += 1
    return SmashCheckResult(True, checked)


def associativity_spot_check(group: CayleyGroup, triples: int = 1000,
                             seed: int = 0, size: int = 8) -> SmashCheckResult:
    """Exact associativity of the normal-form multiplication on random triples."""
    rng = random.Random(seed)
    for t in range(triples):
        a = group.random_element(rng, size)
        b = group.random_element(rng, size)
        c = group.random_element(rng, size)
        if group.multiply(group.multiply(a, b), c) != \
                group.multiply(a, group.multiply(b, c)):
            return SmashCheckResult(False, t, (a, b, c), "associativity fails")
        if group.multiply(a, group.inverse(a)) != group.identity():
            return SmashCheckResult(False, t, (a,), "inverse fails")
    return SmashCheckResult(True, triples)
