"""Truncated Hopf models and smash products, checked against hand oracles."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from liesmash import corpus
from liesmash.exactnum import GaussianRational as GQ, ONE, ZERO
from liesmash.lie import LieAlgebra
from liesmash.hopf import (
    SmashAlgebra,
    commutator_table_check,
    cyclic_group_hopf,
    derivation_to_action,
    iterated_smash,
    make_primitive_series_hopf,
    smash_antipode,
    smash_multiply,
    tau,
    tensor_degeneration_check,
    trivial_action,
    verify_hopf_axioms,
)
from liesmash.lie import (
    PreconditionError,
    adjoint_action_matrices,
    chain_bracket_matrix,
    semidirect_chain,
)

D = 4


@pytest.fixture(scope="module")
def series():
    return make_primitive_series_hopf("x", D)


@pytest.fixture(scope="module")
def smash_xddx():
    """C[[x]] # C[[y]] with y acting as x d/dx (y . x^n = n x^n)."""
    a = make_primitive_series_hopf("x", D)
    h = make_primitive_series_hopf("y", D)
    action = derivation_to_action(h, a, {"x": {1: GQ(1)}})
    return SmashAlgebra(a, h, action)


@pytest.fixture(scope="module")
def smash_ddx():
    """C[[x]] # C[[y]] with y acting as d/dx (y . x^n = n x^(n-1))."""
    a = make_primitive_series_hopf("x", D)
    h = make_primitive_series_hopf("y", D)
    action = derivation_to_action(h, a, {"x": {0: GQ(1)}})
    return a, h, action


def tensor_square_of_primitive(n):
    """Oracle: expand (x (x) 1 + 1 (x) x)^n by binomial convolution."""
    # dict (i, j) -> integer coefficient
    acc = {(0, 0): 1}
    for _ in range(n):
        nxt = {}
        for (i, j), c in acc.items():
            nxt[(i + 1, j)] = nxt.get((i + 1, j), 0) + c
            nxt[(i, j + 1)] = nxt.get((i, j + 1), 0) + c
        acc = nxt
    return acc


def test_comultiplication_matches_binomial_oracle(series):
    for n in range(D + 1):
        expected = tensor_square_of_primitive(n)
        got = series.comult[n]
        assert {(i, j): int(str(c)) for (i, j), c in got.items()} == expected
    # frozen instance from the oracle: D(x^2) = x^2(x)1 + 2 x(x)x + 1(x)x^2
    assert series.comult[2] == {(2, 0): ONE, (1, 1): GQ(2), (0, 2): ONE}


def test_counit_and_antipode_on_powers(series):
    for n in range(1, D + 1):
        assert series.counit[n] == ZERO
        assert series.antipode[n] == {n: GQ((-1) ** n)}
    assert series.counit[0] == ONE


def test_series_axioms_pass(series):
    report = verify_hopf_axioms(series)
    assert report.passed, report.lines()


def differentiate(coeffs):
    """Oracle: formal d/dx on a coefficient list."""
    return [GQ(n) * c for n, c in enumerate(coeffs)][1:] + [ZERO]


def test_derivation_action_ddx():
    a, h, action = (make_primitive_series_hopf("x", D),
                    make_primitive_series_hopf("y", D), None)
    action = derivation_to_action(h, a, {"x": {0: GQ(1)}})
    # y . x^n = n x^(n-1), frozen from the differentiation oracle
    for n in range(1, D + 1):
        coeffs = [ZERO] * (D + 1)
        coeffs[n] = ONE
        expected = differentiate(coeffs)
        got = action.table[(1, n)]
        assert got == {m: c for m, c in enumerate(expected) if c}
    # y^n . x^n = n!
    for n in range(1, D + 1):
        assert action.table[(n, n)] == {0: GQ(math.factorial(n))}


def test_derivation_action_xddx(smash_xddx):
    action = smash_xddx.action
    for n in range(D + 1):
        assert action.table[(1, n)] == ({n: GQ(n)} if n else {})


def test_trivial_action_is_counit_scaling(series):
    h = make_primitive_series_hopf("y", D)
    action = trivial_action(h, series)
    assert action.is_trivial()
    for n in range(D + 1):
        assert action.table[(0, n)] == {n: ONE}
        assert action.table[(1, n)] == {}


def test_zero_derivation_equals_trivial_action(series):
    h = make_primitive_series_hopf("y", D)
    action = derivation_to_action(h, series, {"x": {}})
    assert action.is_trivial()


def test_derivation_rejects_high_degree_image(series):
    h = make_primitive_series_hopf("y", D)
    with pytest.raises(PreconditionError):
        derivation_to_action(h, series, {"x": {2: GQ(1)}})


def test_derivation_leibniz_negative_control():
    """A generator map violating the algebra's own relations is rejected."""
    g = corpus.heisenberg()
    chain = semidirect_chain(g, g.nilpotent_radical(g.full_subspace()))
    model = iterated_smash(chain, D, adjoint_action_matrices(g, chain))
    h = make_primitive_series_hopf("t", D)
    # e1 e2 - e2 e1 = e3 in the model, but the map below sends e3 to 0 while
    # forcing D(e1 e2 - e2 e1) = e3: Leibniz must fail.
    bad_images = {"e1": model.gen("e3"), "e2": model.gen("e2"),
                  "e3": {}}
    with pytest.raises(PreconditionError) as err:
        derivation_to_action(h, model, bad_images)
    assert "Leibniz" in str(err.value) or "module" in str(err.value)


def test_tau_examples(smash_xddx):
    action = smash_xddx.action
    a_alg, h_alg = smash_xddx.A, smash_xddx.H
    x = a_alg.gen("x")
    y = h_alg.gen("y")
    # tau(1 (x) a) = a (x) 1
    assert tau(action, h_alg.one(), x) == {(1, 0): ONE}
    # with y . x = x: tau(y (x) x) = x (x) 1 + x (x) y
    assert tau(action, y, x) == {(1, 0): ONE, (1, 1): ONE}
    # trivial action reduces to the flip
    triv = trivial_action(h_alg, a_alg)
    assert tau(triv, y, x) == {(1, 1): ONE}


def test_smash_multiply_examples(smash_xddx):
    s = smash_xddx
    x = s.embed_a(s.A.gen("x"))
    y = s.embed_h(s.H.gen("y"))
    # (a (x) 1)(1 (x) h) = a (x) h
    assert s.multiply(x, y) == {(1, 1): ONE}
    # (1 (x) y)(x (x) 1) = x (x) 1 + x (x) y
    assert smash_multiply(s, y, x) == {(1, 0): ONE, (1, 1): ONE}
    # unit
    for key in s.basis:
        u = {key: ONE}
        assert s.multiply(s.one(), u) == u == s.multiply(u, s.one())


def test_smash_antipode_examples(smash_xddx):
    s = smash_xddx
    assert smash_antipode(s, s.one()) == s.one()
    # S(a (x) 1) = S_A(a) (x) 1
    for n in range(D + 1):
        got = smash_antipode(s, {(n, 0): ONE})
        assert got == {(n, 0): GQ((-1) ** n)}
    # full convolution identity mu (S (x) 1) Delta = eta eps on the basis
    for key in s.basis:
        acc = {}
        for (k1, k2), c in s.comult[key].items():
            from liesmash.hopf import el_add, el_scale
            acc = el_add(acc, el_scale(
                c, s.multiply(s.antipode[k1], {k2: ONE})))
        eps = s.counit[key]
        expected = {s.unit: eps} if eps else {}
        assert acc == expected


def test_smash_axioms_xddx(smash_xddx):
    report = verify_hopf_axioms(smash_xddx)
    assert report.passed, report.lines()


def test_smash_with_ddx_is_module_algebra_but_not_bialgebra(smash_ddx):
    """d/dx is a module-algebra action; its smash is an associative algebra
    (but not a module bialgebra, since the image of x is not primitive)."""
    a, h, action = smash_ddx
    s = SmashAlgebra(a, h, action)
    report = verify_hopf_axioms(s)
    by_name = {r.name: r for r in report.results}
    for name in ("unit", "associativity", "module-intertwining",
                 "factor-embeddings", "coassociativity", "counit"):
        assert by_name[name].passed, by_name[name].line()
    assert not by_name["bialgebra"].passed


def test_corrupted_comultiplication_detected(series):
    broken = make_primitive_series_hopf("x", D)
    broken.comult = dict(broken.comult)
    bad = dict(broken.comult[2])
    bad[(1, 1)] = GQ(3)  # should be 2
    broken.comult[2] = bad
    report = verify_hopf_axioms(broken)
    assert not report.passed
    fail = report.first_failure()
    assert fail.witness is not None


def test_smash_antipode_requires_cocommutative_acting_factor(series):
    h = make_primitive_series_hopf("y", D)
    h.comult = dict(h.comult)
    h.comult[2] = {(2, 0): GQ(1), (1, 1): GQ(1), (0, 1): GQ(1)}  # asymmetric
    assert not h.is_cocommutative()
    s = SmashAlgebra(series, h, trivial_action(h, series))
    assert s.antipode is None
    with pytest.raises(PreconditionError):
        smash_antipode(s, s.one())


def test_iterated_smash_is_cocommutative():
    g = corpus.heisenberg()
    chain = semidirect_chain(g, g.nilpotent_radical(g.full_subspace()))
    model = iterated_smash(chain, 3, adjoint_action_matrices(g, chain))
    assert model.is_cocommutative()


def test_group_like_hopf_axioms():
    c2 = cyclic_group_hopf("C[Z/2]", 2, D)
    assert c2.is_cocommutative()
    report = verify_hopf_axioms(c2)
    assert report.passed, report.lines()


def test_group_like_smash_with_trivial_action(series):
    c2 = cyclic_group_hopf("C[Z/2]", 2, D)
    s = SmashAlgebra(series, c2, trivial_action(c2, series))
    report = verify_hopf_axioms(s)
    assert report.passed, report.lines()
    assert tensor_degeneration_check(s).passed


def test_trivial_action_smash_equals_tensor_product(series):
    h = make_primitive_series_hopf("y", D)
    s = SmashAlgebra(series, h, trivial_action(h, series))
    assert tensor_degeneration_check(s).passed
    report = verify_hopf_axioms(s)
    assert report.passed


def test_iterated_smash_heisenberg_commutators():
    g = corpus.heisenberg()
    chain = semidirect_chain(g, g.nilpotent_radical(g.full_subspace()))
    model = iterated_smash(chain, 3, adjoint_action_matrices(g, chain))
    names = [f.name for f in chain.factors]
    # [e1, e2] = e3 recovered as a commutator of smash generators
    e1, e2, e3 = model.gen("e1"), model.gen("e2"), model.gen("e3")
    from liesmash.hopf import el_sub
    comm = el_sub(model.multiply(e1, e2), model.multiply(e2, e1))
    assert comm == e3
    check = commutator_table_check(model, chain_bracket_matrix(g, chain), names)
    assert check.passed


def test_iterated_smash_abelian_is_commutative():
    g = corpus.abelian(2)
    chain = semidirect_chain(g, g.nilpotent_radical(g.full_subspace()))
    model = iterated_smash(chain, D, adjoint_action_matrices(g, chain))
    for k1 in model.basis:
        for k2 in model.basis:
            assert model.mult[(k1, k2)] == model.mult[(k2, k1)]
    assert tensor_degeneration_check(model).passed


def test_iterated_smash_solv2_commutator():
    g = corpus.solv2()
    chain = semidirect_chain(g, g.nilpotent_radical(g.full_subspace()))
    model = iterated_smash(chain, D, adjoint_action_matrices(g, chain))
    e1, e2 = model.gen("e1"), model.gen("e2")
    from liesmash.hopf import el_sub
    assert el_sub(model.multiply(e1, e2), model.multiply(e2, e1)) == e2


def test_iterated_smash_rejects_wrong_action_count():
    g = corpus.heisenberg()
    chain = semidirect_chain(g, g.nilpotent_radical(g.full_subspace()))
    with pytest.raises(PreconditionError):
        iterated_smash(chain, D, [])


small_rats = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@settings(max_examples=20, deadline=None)
@given(small_rats, small_rats, small_rats, st.booleans())
def test_random_solvable_chain_smash_axioms(a, b, c, kill_a):
    """Random 3-dim solvable family through the whole pipeline.

    Brackets [v2,v1]=a v1, [v3,v1]=b v1, [v3,v2]=c v1 + d v2 satisfy Jacobi
    iff a d = 0; with one of them forced to zero every member is solvable,
    and the decomposition chain, adjoint smash and Hopf axioms must all work.
    """
    if kill_a:
        a, d = Fraction(0), a
    else:
        d = Fraction(0)
    g = LieAlgebra(["v1", "v2", "v3"], {
        (0, 1): {0: GQ(-a)},
        (0, 2): {0: GQ(-b)},
        (1, 2): {0: GQ(-c), 1: GQ(-d)},
    })
    assert g.jacobi_check()[0]
    assert g.is_solvable()
    chain = semidirect_chain(g, g.nilpotent_radical(g.full_subspace()))
    model = iterated_smash(chain, 3, adjoint_action_matrices(g, chain))
    report = verify_hopf_axioms(model)
    assert report.passed, report.lines()
    names = [f.name for f in chain.factors]
    comm = commutator_table_check(model, chain_bracket_matrix(g, chain),
                                  names)
    assert comm.passed, comm.witness


def test_heisenberg_smash_table_matches_pbw_oracle():
    """The whole multiplication table against independent PBW straightening.

    In the ordered basis z^a y^b x^c (z = e3 central, [x, y] = z) the product
    has the closed form
      (z^a1 y^b1 x^c1)(z^a2 y^b2 x^c2)
        = sum_k k! C(c1,k) C(b2,k) z^(a1+a2+k) y^(b1+b2-k) x^(c1+c2-k),
    so every table entry must equal its truncation, including pairs whose
    product overflows the degree bound.
    """
    d = 4
    g = corpus.heisenberg()
    chain = semidirect_chain(g, g.nilpotent_radical(g.full_subspace()))
    model = iterated_smash(chain, d, adjoint_action_matrices(g, chain))

    def key_exponents(key):
        (a, b), c = key
        return a, b, c

    def make_key(a, b, c):
        return ((a, b), c)

    for k1 in model.basis:
        for k2 in model.basis:
            a1, b1, c1 = key_exponents(k1)
            a2, b2, c2 = key_exponents(k2)
            expected = {}
            for k in range(min(c1, b2) + 1):
                coeff = (math.factorial(k) * math.comb(c1, k)
                         * math.comb(b2, k))
                a, b, c = a1 + a2 + k, b1 + b2 - k, c1 + c2 - k
                if a + b + c <= d:
                    expected[make_key(a, b, c)] = GQ(coeff)
            assert model.mult[(k1, k2)] == expected, (k1, k2)


def test_associativity_on_overflow_free_triples_exact(smash_xddx):
    """Beyond the report: recompute one nontrivial triple by hand.

    u = 1(x)y, v = x(x)1, w = x(x)1 at D=4:
    u(vw) = (1(x)y)(x^2(x)1) = 2 x^2 (x) 1 + x^2 (x) y   (y.x^2 = 2x^2)
    (uv)w = (x(x)1 + x(x)y)(x(x)1) = x^2(x)1 + (x(x)y)(x(x)1)
          = x^2(x)1 + x^2(x)1 + x^2(x)y
    """
    s = smash_xddx
    y = s.embed_h(s.H.gen("y"))
    x = s.embed_a(s.A.gen("x"))
    vw = s.multiply(x, x)
    lhs = s.multiply(s.multiply(y, x), x)
    rhs = s.multiply(y, vw)
    expected = {(2, 0): GQ(2), (2, 1): ONE}
    assert lhs == rhs == expected
