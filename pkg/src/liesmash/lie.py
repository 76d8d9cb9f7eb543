"""Exact structure theory of finite-dimensional complex Lie algebras.

Covers structure-constant algebras over the Gaussian rationals, canonical
subspaces, the lower central and derived series, the two radicals used by
the decomposition pipeline, quotients, bases adapted to the lower central
series, and the construction of the iterated semidirect chain with its
per-factor weights and one-variable factor labels.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import weights as weight_mod
from .errors import InputError, PreconditionError, VerificationError
from .exactnum import GaussianRational, ONE, ZERO
from .linalg import (
    Vector,
    in_span,
    is_zero_vector,
    pivot_columns,
    reduce_mod,
    rref,
    solve_in_basis,
    unit_vector,
    vec_add,
    vec_scale,
    vector,
    zero_vector,
)


# ---------------------------------------------------------------------------
# Subspaces
# ---------------------------------------------------------------------------

class Subspace:
    """A subspace of the coordinate space of a LieAlgebra, in canonical RREF."""

    def __init__(self, parent: "LieAlgebra", rows):
        self.parent = parent
        self.rows = rref(rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, x: Vector) -> bool:
        return in_span(self.rows, x)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def union(self, other: "Subspace") -> "Subspace":
        return Subspace(self.parent, list(self.rows) + list(other.rows))

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def basis_strings(self) -> list[str]:
        """Rows as coordinate-vector strings, echelon order."""
        return ["(" + ", ".join(str(c) for c in row) + ")" for row in self.rows]

    def combo_strings(self) -> list[str]:
        names = self.parent.basis_names
        out = []
        for row in self.rows:
            terms = []
            for c, name in zip(row, names):
                if not c:
                    continue
                if c == ONE:
                    terms.append(name)
                else:
                    terms.append(f"({c})*{name}")
            out.append(" + ".join(terms) if terms else "0")
        return out

    def __repr__(self):
        return f"Subspace(dim={self.dim}, rows={self.basis_strings()})"


# ---------------------------------------------------------------------------
# Lie algebras
# ---------------------------------------------------------------------------

class LieAlgebra:
    """A complex Lie algebra given by exact structure constants.

    brackets maps (i, j) with i < j to a sparse coordinate map
    {k: coefficient} describing [e_i, e_j]; antisymmetry is implied and
    omitted pairs bracket to zero.
    """

    def __init__(self, basis_names, brackets):
        self.basis_names = list(basis_names)
        self.dim = len(self.basis_names)
        table = {}
        for (i, j), comps in brackets.items():
            if not (0 <= i < j < self.dim):
                raise InputError(
                    f"bracket pair ({i}, {j}) must satisfy 0 <= i < j < dim")
            cleaned = {k: GaussianRational.coerce(c) for k, c in comps.items()
                       if GaussianRational.coerce(c)}
            for k in cleaned:
                if not 0 <= k < self.dim:
                    raise InputError(f"bracket target index {k} out of range")
            if cleaned:
                table[(i, j)] = cleaned
        self.brackets = table

    # -- basic bracket machinery -------------------------------------------

    def bracket_basis(self, i: int, j: int) -> dict:
        if i == j:
            return {}
        if i < j:
            return dict(self.brackets.get((i, j), {}))
        return {k: -c for k, c in self.brackets.get((j, i), {}).items()}

    def bracket(self, x: Vector, y: Vector) -> Vector:
        if len(x) != self.dim or len(y) != self.dim:
            raise InputError("bracket arguments must have length dim")
        acc = [ZERO] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj or i == j:
                    continue
                for k, c in self.bracket_basis(i, j).items():
                    acc[k] = acc[k] + xi * yj * c
        return tuple(acc)

    def zero_subspace(self) -> Subspace:
        return Subspace(self, [])

    def full_subspace(self) -> Subspace:
        return Subspace(self, [unit_vector(self.dim, i) for i in range(self.dim)])

    def subspace(self, vectors) -> Subspace:
        return Subspace(self, [vector(v) if not isinstance(v, tuple) else v
                               for v in vectors])

    def bracket_spans(self, a: Subspace, b: Subspace) -> Subspace:
        prods = [self.bracket(x, y) for x in a.rows for y in b.rows]
        return Subspace(self, prods)

    def is_ideal(self, s: Subspace):
        """None if s is an ideal, else a witness (basis index, row index)."""
        for i in range(self.dim):
            e_i = unit_vector(self.dim, i)
            for r, row in enumerate(s.rows):
                if not s.contains(self.bracket(e_i, row)):
                    return (i, r)
        return None

    # -- validation ---------------------------------------------------------

    def jacobi_check(self):
        """(ok, violations); each violation is (i, j, k, defect vector)."""
        violations = []
        for i in range(self.dim):
            ei = unit_vector(self.dim, i)
            for j in range(i + 1, self.dim):
                ej = unit_vector(self.dim, j)
                for k in range(j + 1, self.dim):
                    ek = unit_vector(self.dim, k)
                    defect = vec_add(
                        vec_add(self.bracket(ei, self.bracket(ej, ek)),
                                self.bracket(ej, self.bracket(ek, ei))),
                        self.bracket(ek, self.bracket(ei, ej)))
                    if not is_zero_vector(defect):
                        violations.append((i, j, k, defect))
        return (not violations, violations)

    # -- series and radicals --------------------------------------------------

    def lower_central_series(self) -> list[Subspace]:
        """Descending chain g = g_1 >= g_2 >= ..., up to the stable term."""
        terms = [self.full_subspace()]
        while True:
            nxt = self.bracket_spans(self.full_subspace(), terms[-1])
            if nxt == terms[-1]:
                break
            terms.append(nxt)
        return terms

    def nilpotency_degree(self):
        """Smallest c with g_{c+1} = 0, or None when not nilpotent."""
        series = self.lower_central_series()
        if series[-1].dim != 0:
            return None
        return len(series) - 1

    def is_nilpotent(self) -> bool:
        return self.nilpotency_degree() is not None

    def derived_series(self) -> list[Subspace]:
        terms = [self.full_subspace()]
        while True:
            nxt = self.bracket_spans(terms[-1], terms[-1])
            if nxt == terms[-1]:
                break
            terms.append(nxt)
        return terms

    def is_solvable(self) -> bool:
        return self.derived_series()[-1].dim == 0

    def nilpotent_radical(self, solvable_part: Subspace) -> Subspace:
        """[g, rad g] for a caller-supplied radical (= [g, g] when g is solvable)."""
        witness = self.is_ideal(solvable_part)
        if witness is not None:
            raise PreconditionError(
                f"solvable part is not an ideal: bracket of basis vector "
                f"{self.basis_names[witness[0]]} with row {witness[1]} escapes")
        return self.bracket_spans(self.full_subspace(), solvable_part)

    def exponential_radical(self, solvable_part: Subspace) -> Subspace:
        """Stable term of r^(1) = [g, r], r^(k+1) = [g, r^(k)]."""
        witness = self.is_ideal(solvable_part)
        if witness is not None:
            raise PreconditionError(
                f"solvable part is not an ideal: bracket of basis vector "
                f"{self.basis_names[witness[0]]} with row {witness[1]} escapes")
        term = self.bracket_spans(self.full_subspace(), solvable_part)
        while True:
            nxt = self.bracket_spans(self.full_subspace(), term)
            if nxt == term:
                return term
            term = nxt

    # -- quotients ------------------------------------------------------------

    def quotient(self, ideal: Subspace):
        """Quotient algebra and projection, raising on non-ideals with a witness."""
        witness = self.is_ideal(ideal)
        if witness is not None:
            i, r = witness
            raise PreconditionError(
                f"not an ideal: [{self.basis_names[i]}, row {r}] is outside the span")
        pivots = pivot_columns(ideal.rows)
        free = [j for j in range(self.dim) if j not in pivots]
        names = [self.basis_names[j] for j in free]

        def project(x: Vector) -> Vector:
            red = reduce_mod(ideal.rows, x)
            return tuple(red[j] for j in free)

        def lift(q: Vector) -> Vector:
            out = [ZERO] * self.dim
            for pos, j in enumerate(free):
                out[j] = q[pos]
            return tuple(out)

        table = {}
        for a in range(len(free)):
            for b in range(a + 1, len(free)):
                img = project(self.bracket(unit_vector(self.dim, free[a]),
                                           unit_vector(self.dim, free[b])))
                comps = {k: c for k, c in enumerate(img) if c}
                if comps:
                    table[(a, b)] = comps
        q = LieAlgebra(names, table)
        ok, viol = q.jacobi_check()
        if not ok:
            raise VerificationError(f"quotient failed Jacobi at triples {viol[:1]}")
        return q, QuotientMap(self, q, ideal, project, lift)

    # -- adapted bases ----------------------------------------------------------

    def f_basis(self):
        """Basis adapted to the lower central series, with its depth weights.

        Returns (vectors, weights): weights w_k are nondecreasing, w_k is the
        deepest series term containing x_k, and for every j the vectors with
        w_k >= j span g_j.  Deterministic: each extension step takes the rows
        of the canonical echelon form of the deeper term, in order.
        """
        if self.nilpotency_degree() is None:
            raise PreconditionError("f_basis needs a nilpotent algebra")
        series = self.lower_central_series()  # ends with the zero space
        groups: dict[int, list[Vector]] = {}
        span_rows: list[Vector] = []
        for depth in range(len(series) - 2, -1, -1):  # deepest proper term first
            group = []
            for row in series[depth].rows:
                if not in_span(rref(span_rows), row):
                    group.append(row)
                    span_rows.append(row)
            groups[depth + 1] = group
        vectors_: list[Vector] = []
        ws: list[int] = []
        for depth in sorted(groups):  # shallow first, echelon order inside a depth
            vectors_.extend(groups[depth])
            ws.extend([depth] * len(groups[depth]))
        return vectors_, ws

    # -- I/O ---------------------------------------------------------------------

    def to_json_dict(self) -> dict:
        entries = []
        for (i, j), comps in sorted(self.brackets.items()):
            entries.append({
                "x": self.basis_names[i],
                "y": self.basis_names[j],
                "value": [[self.basis_names[k], str(c)]
                          for k, c in sorted(comps.items())],
            })
        return {"dim": self.dim, "basis": self.basis_names, "brackets": entries}

    @classmethod
    def from_json_dict(cls, data) -> "LieAlgebra":
        try:
            names = list(data["basis"])
            dim = int(data["dim"])
        except (KeyError, TypeError) as exc:
            raise InputError(f"missing field in Lie algebra file: {exc}") from exc
        if dim != len(names):
            raise InputError(f"dim={dim} but {len(names)} basis names given")
        if len(set(names)) != len(names):
            raise InputError("duplicate basis names")
        index = {n: i for i, n in enumerate(names)}
        table = {}
        for entry in data.get("brackets", []):
            try:
                i = index[entry["x"]]
                j = index[entry["y"]]
                value = entry["value"]
            except KeyError as exc:
                raise InputError(f"unknown basis name or field: {exc}") from exc
            if i >= j:
                raise InputError(
                    f"bracket [{entry['x']}, {entry['y']}] out of order: "
                    "only pairs with x before y are allowed")
            if (i, j) in table:
                raise InputError(f"duplicate bracket for [{entry['x']}, {entry['y']}]")
            comps = {}
            for name, coeff in value:
                if name not in index:
                    raise InputError(f"unknown basis name {name!r} in bracket value")
                comps[index[name]] = GaussianRational.parse(coeff)
            table[(i, j)] = comps
        return cls(names, table)

    @classmethod
    def from_json_file(cls, path) -> "LieAlgebra":
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON in {path}: {exc}") from exc
        return cls.from_json_dict(data)


@dataclass
class QuotientMap:
    parent: LieAlgebra
    quotient: LieAlgebra
    ideal: Subspace
    project: object  # Vector -> Vector
    lift: object     # Vector -> Vector (section with zero pivot coordinates)


# ---------------------------------------------------------------------------
# Semidirect chains
# ---------------------------------------------------------------------------

DELTA_BLOCK = "delta-block"
EXP_BLOCK = "exp-block"
REDUCTIVE_TAIL = "reductive-tail"


@dataclass
class ChainFactor:
    name: str
    kind: str
    weight: object
    label: str
    vector: tuple = ()
    w: int | None = None


@dataclass
class DecompositionChain:
    factors: list[ChainFactor]
    p: int
    m: int
    w_exponents: list[int]
    tail_dim: int = 0

    def labels(self) -> list[str]:
        return [f.label for f in self.factors]

    def basis_vectors(self) -> list[tuple]:
        return [f.vector for f in self.factors if f.kind != REDUCTIVE_TAIL]

    def factorization_string(self) -> str:
        labels = self.labels()
        if not labels:
            return "1"
        out = labels[0]
        for lab in labels[1:]:
            out = f"({out} # {lab})"
        return out


def parse_factorization(text: str) -> list[str]:
    """Inverse of DecompositionChain.factorization_string (round-trip check).

    The rendering is left-nested, "((L1 # L2) # L3)", and factor labels never
    contain the " # " separator, so the last factor peels off the right.
    """
    s = text.strip()
    if not s:
        raise InputError("empty factorization string")
    if not s.startswith("("):
        if " # " in s or s.endswith(")") and "(" not in s:
            raise InputError(f"cannot parse factorization string {text!r}")
        return [s]
    if not s.endswith(")"):
        raise InputError(f"unbalanced factorization string {text!r}")
    inner = s[1:-1]
    if " # " not in inner:
        raise InputError(f"cannot parse factorization string {text!r}")
    left, label = inner.rsplit(" # ", 1)
    return parse_factorization(left) + [label.strip()]


def _pivot_name(g: LieAlgebra, row: Vector) -> str:
    for j, c in enumerate(row):
        if c:
            return g.basis_names[j]
    raise ValueError("zero row has no pivot")


def _exp_label(w: int) -> str:
    return "O(C)" if w == 1 else f"A_{w - 1}"


def semidirect_chain(g: LieAlgebra, nprime: Subspace,
                     reductive_tail_dim: int = 0) -> DecompositionChain:
    """Iterated semidirect chain of a solvable algebra through the ideal nprime.

    The first p = dim(nprime) factors are delta-blocks (weight 1+|z|,
    power-series factor labels); the rest are exp-blocks carrying the depth
    exponents of g/nprime, deepest first, so that every prefix of the chain
    basis is an ideal in the next prefix (verified below).  The containment
    exponential radical <= nprime <= nilpotent radical is checked internally.
    """
    if not g.is_solvable():
        raise PreconditionError("semidirect_chain needs a solvable algebra")
    witness = g.is_ideal(nprime)
    if witness is not None:
        i, r = witness
        raise PreconditionError(
            f"nprime is not an ideal: [{g.basis_names[i]}, row {r}] escapes the span")
    rad = g.full_subspace()
    nilrad = g.nilpotent_radical(rad)
    exprad = g.exponential_radical(rad)
    if not nprime.contains_subspace(exprad):
        raise PreconditionError("containment violated: E <= N' fails")
    if not nilrad.contains_subspace(nprime):
        raise PreconditionError("containment violated: N' <= N fails")

    factors: list[ChainFactor] = []

    # delta blocks: nprime's own F-basis, deepest first
    if nprime.dim:
        nprime_alg, nmap = _subalgebra(g, nprime)
        nvecs, _ = nprime_alg.f_basis()
        for v in reversed(nvecs):
            ambient = nmap(v)
            name = _pivot_name(g, ambient)
            factors.append(ChainFactor(
                name=name, kind=DELTA_BLOCK,
                weight=weight_mod.Poly(), label=f"C[[{name}]]",
                vector=ambient))

    # exp blocks: F-basis of g/nprime, lifted, deepest first
    q, qmap = g.quotient(nprime)
    if q.dim:
        qvecs, ws = q.f_basis()
        m = max(ws)
        for v, w in zip(reversed(qvecs), reversed(ws)):
            ambient = qmap.lift(v)
            name = _pivot_name(g, ambient)
            factors.append(ChainFactor(
                name=name, kind=EXP_BLOCK,
                weight=weight_mod.ExpPower(w), label=_exp_label(w),
                vector=ambient, w=w))
    else:
        ws = []
        m = 0

    if reductive_tail_dim:
        factors.append(ChainFactor(
            name="L", kind=REDUCTIVE_TAIL,
            weight=weight_mod.Const(), label="AhatL"))

    chain = DecompositionChain(factors=factors, p=nprime.dim, m=m,
                               w_exponents=list(ws),
                               tail_dim=reductive_tail_dim)
    _verify_prefix_ideals(g, chain)
    return chain


def _subalgebra(g: LieAlgebra, s: Subspace):
    """View an ideal as a Lie algebra in its own right.

    Returns (algebra on s's echelon basis, embedding of its coordinate
    vectors back into g's coordinates).
    """
    rows = list(s.rows)
    k = len(rows)
    table = {}
    for a in range(k):
        for b in range(a + 1, k):
            prod = g.bracket(rows[a], rows[b])
            coords = solve_in_basis(rows, prod)
            if coords is None:
                raise PreconditionError("subspace is not closed under the bracket")
            comps = {idx: c for idx, c in enumerate(coords) if c}
            if comps:
                table[(a, b)] = comps
    names = [f"v{i + 1}" for i in range(k)]
    alg = LieAlgebra(names, table)

    def embed(x: Vector) -> Vector:
        out = zero_vector(g.dim)
        for c, row in zip(x, rows):
            out = vec_add(out, vec_scale(c, row))
        return out

    return alg, embed


def _verify_prefix_ideals(g: LieAlgebra, chain: DecompositionChain):
    vecs = chain.basis_vectors()
    for i in range(1, len(vecs)):
        prefix = rref(vecs[:i])
        for j in range(i):
            prod = g.bracket(vecs[i], vecs[j])
            if not in_span(prefix, prod):
                raise VerificationError(
                    f"chain prefix of length {i} is not an ideal under "
                    f"{chain.factors[i].name}")


def chain_bracket_matrix(g: LieAlgebra, chain: DecompositionChain):
    """Brackets of the chain basis, expressed in chain coordinates.

    Returns {(i, j): {k: coeff}} for i < j with [v_i, v_j] = sum_k c_k v_k;
    prefix-ideal structure guarantees k < max(i, j).
    """
    vecs = chain.basis_vectors()
    out = {}
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            prod = g.bracket(vecs[i], vecs[j])
            coords = solve_in_basis(vecs, prod)
            if coords is None:
                raise VerificationError("chain basis does not span its brackets")
            comps = {k: c for k, c in enumerate(coords) if c}
            out[(i, j)] = comps
    return out


def adjoint_action_matrices(g: LieAlgebra, chain: DecompositionChain):
    """Derivation matrices for the iterated smash, one per chain step.

    Step i (building the smash with generator i+1) acts on the previous
    generators by the adjoint: gen_j -> [v_{i+1}, v_j], re-expressed in the
    chain coordinates of the prefix.
    """
    vecs = chain.basis_vectors()
    names = [f.name for f in chain.factors if f.kind != REDUCTIVE_TAIL]
    mats = []
    brackets = chain_bracket_matrix(g, chain)
    for step in range(1, len(vecs)):
        mat = {}
        for j in range(step):
            comps = brackets.get((j, step), {})
            # image of gen j under ad(v_step) = [v_step, v_j] = -[v_j, v_step]
            img = {names[k]: -c for k, c in comps.items()}
            if img:
                mat[names[j]] = img
        mats.append(mat)
    return mats
