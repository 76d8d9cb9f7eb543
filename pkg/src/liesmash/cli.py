"""Command-line surface: decompose, hopf-verify, smash-table, weight-check,
word-weight, norm, selfcheck.

Exit codes: 0 pass, 1 input error, 2 mathematical precondition violated,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import cayley, corpus, weights as weight_mod
from .exactnum import GaussianRational
from .hopf import (
    SmashAlgebra,
    commutator_table_check,
    derivation_to_action,
    iterated_smash,
    make_primitive_series_hopf,
    cyclic_group_hopf,
    tensor_degeneration_check,
    trivial_action,
    verify_hopf_axioms,
)
from .lie import (
    InputError,
    PreconditionError,
    VerificationError,
    adjoint_action_matrices,
    chain_bracket_matrix,
    semidirect_chain,
)
from .report import decompose, roundtrip_factorization

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_PRECONDITION = 2
EXIT_VERIFICATION = 3


def _common_flags(sp):
    sp.add_argument("--truncation", type=int, default=4, metavar="D",
                    help="truncation degree for Hopf models (default 4)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=("text", "csv", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liesmash",
        description="Iterated analytic smash-product decompositions of "
                    "solvable complex Lie algebras, with exact verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("decompose", help="run the full decomposition pipeline")
    sp.add_argument("file", help="Lie algebra JSON file (the solvable part)")
    sp.add_argument("--nprime", default="N",
                    help="intermediate ideal: E, N, or ideal:<name,...>")
    sp.add_argument("--tail-dim", type=int, default=0,
                    help="dimension of the symbolic reductive tail")
    sp.add_argument("--skip-weight-check", action="store_true")
    _common_flags(sp)

    sp = sub.add_parser("hopf-verify", help="verify Hopf axioms of a model")
    sp.add_argument("--model", default="series",
                    choices=sorted(MODEL_BUILDERS))
    _common_flags(sp)

    sp = sub.add_parser("smash-table", help="emit multiplication/comultiplication tables")
    sp.add_argument("--model", default="series", choices=sorted(MODEL_BUILDERS))
    sp.add_argument("--table", default="mult", choices=("mult", "comult"))
    _common_flags(sp)

    sp = sub.add_parser("weight-check", help="sampled weight majorization")
    sp.add_argument("--lhs", required=True)
    sp.add_argument("--rhs", required=True)
    sp.add_argument("--mode", default="majorizes",
                    choices=("majorizes", "equivalent"))
    sp.add_argument("--samples", type=int, default=256)
    sp.add_argument("--radii", default="1,10,100,1000")
    sp.add_argument("--radius", type=int, default=12,
                    help="BFS radius for word() descriptors")
    _common_flags(sp)

    sp = sub.add_parser("word-weight", help="BFS word weights and growth")
    sp.add_argument("--group", required=True,
                    help="heis3z | bs12 | zk:<k> | semidirect:<matrix JSON>")
    sp.add_argument("--radius", type=int, default=12)
    sp.add_argument("--element", required=True, help='e.g. "(0,0,1)"')
    sp.add_argument("--max-power", type=int, default=4096)
    _common_flags(sp)

    sp = sub.add_parser("norm", help="series norms and their submultiplicativity")
    sp.add_argument("--coeffs", default=None,
                    help='comma list of exact coefficients, e.g. "1,1/2,0,i"')
    sp.add_argument("--r", default="1")
    sp.add_argument("--s", default="0")
    sp.add_argument("--check-degree", type=int, default=None,
                    help="also run the submultiplicativity check to this degree")
    _common_flags(sp)

    sp = sub.add_parser("selfcheck", help="run the full invariant suite")
    sp.add_argument("--radius", type=int, default=16)
    _common_flags(sp)

    return parser


# ---------------------------------------------------------------------------
# hopf model builders
# ---------------------------------------------------------------------------

def _model_series(d):
    return make_primitive_series_hopf("x", d)


def _model_smash2(d):
    a = make_primitive_series_hopf("x", d)
    h = make_primitive_series_hopf("y", d)
    action = derivation_to_action(h, a, {"x": {1: GaussianRational(1)}})
    return SmashAlgebra(a, h, action)


def _chain_model(algebra, d, nprime_selector="N"):
    g = algebra
    rad = g.full_subspace()
    nil = g.nilpotent_radical(rad)
    exp = g.exponential_radical(rad)
    nprime = nil if nprime_selector == "N" else exp
    chain = semidirect_chain(g, nprime)
    return iterated_smash(chain, d, adjoint_action_matrices(g, chain))


def _model_heis3(d):
    return _chain_model(corpus.heisenberg(), d)


def _model_solv2(d):
    return _chain_model(corpus.solv2(), d)


def _model_cyclic2(d):
    return cyclic_group_hopf("C[Z/2]", 2, d)


def _model_tensor2(d):
    a = make_primitive_series_hopf("x", d)
    h = make_primitive_series_hopf("y", d)
    return SmashAlgebra(a, h, trivial_action(h, a))


MODEL_BUILDERS = {
    "series": _model_series,
    "smash2": _model_smash2,
    "heis3": _model_heis3,
    "solv2": _model_solv2,
    "cyclic2": _model_cyclic2,
    "tensor2": _model_tensor2,
}


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_decompose(args) -> int:
    report = decompose(args.file, nprime_selector=args.nprime,
                       tail_dim=args.tail_dim, truncation=args.truncation,
                       seed=args.seed,
                       check_weights=not args.skip_weight_check)
    if not roundtrip_factorization(report) and report.chain.factors:
        raise VerificationError("factorization string failed to round-trip")
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    elif args.format == "csv":
        print("\n".join(report.csv_lines()))
    else:
        print("\n".join(report.text_lines()))
    return EXIT_OK if report.passed else EXIT_VERIFICATION


def cmd_hopf_verify(args) -> int:
    model = MODEL_BUILDERS[args.model](args.truncation)
    report = verify_hopf_axioms(model)
    extra = []
    if args.model in ("heis3", "solv2"):
        g = corpus.heisenberg() if args.model == "heis3" else corpus.solv2()
        chain = semidirect_chain(g, g.nilpotent_radical(g.full_subspace()))
        names = [f.name for f in chain.factors]
        extra.append(commutator_table_check(
            model, chain_bracket_matrix(g, chain), names))
    if args.model == "tensor2":
        extra.append(tensor_degeneration_check(model))
    report.results.extend(extra)
    if args.format == "json":
        print(json.dumps({
            "model": report.model,
            "passed": report.passed,
            "checks": [{"name": r.name, "passed": r.passed,
                        "checked": r.checked, "witness": r.witness}
                       for r in report.results],
        }, indent=2, sort_keys=True))
    else:
        print("\n".join(report.lines()))
        print(f"result: {'pass' if report.passed else 'FAIL'}")
    return EXIT_OK if report.passed else EXIT_VERIFICATION


def cmd_smash_table(args) -> int:
    model = MODEL_BUILDERS[args.model](args.truncation)
    basis = list(model.basis)
    names = [model.key_str(k) for k in basis]
    if args.table == "mult":
        print("left,right," + ",".join(f'"{n}"' for n in names))
        for k1 in basis:
            for k2 in basis:
                row = model.mult[(k1, k2)]
                cells = [str(row.get(k, GaussianRational(0))) for k in basis]
                print(f'"{model.key_str(k1)}","{model.key_str(k2)}",'
                      + ",".join(cells))
    else:
        pairs = [(a, b) for a in basis for b in basis]
        header = ",".join(f'"{model.key_str(a)}|{model.key_str(b)}"'
                          for a, b in pairs)
        print("element," + header)
        for k in basis:
            table = model.comult[k]
            cells = [str(table.get(p, GaussianRational(0))) for p in pairs]
            print(f'"{model.key_str(k)}",' + ",".join(cells))
    return EXIT_OK


def _group_resolver(radius):
    def resolve(spec):
        group = cayley.make_group(spec)
        return cayley.word_table(group, radius), group.name
    return resolve


def cmd_weight_check(args) -> int:
    resolver = _group_resolver(args.radius)
    lhs = weight_mod.parse_weight(args.lhs, resolver)
    rhs = weight_mod.parse_weight(args.rhs, resolver)
    radii = tuple(float(r) for r in args.radii.split(","))
    config = weight_mod.SamplerConfig(count=args.samples, radii=radii,
                                      seed=args.seed)
    if args.mode == "majorizes":
        verdict = weight_mod.majorizes(lhs, rhs, config)
        print(f"verdict: {verdict.verdict}")
        if verdict.gamma is not None:
            print(f"gamma: {verdict.gamma:.6g}")
            print(f"C: {verdict.constant:.6g}")
        if verdict.witness is not None:
            print(f"witness: {verdict.witness}")
        samples = verdict.samples
        ok = verdict.verdict == weight_mod.HOLDS
    else:
        verdict = weight_mod.equivalent(lhs, rhs, config)
        print(f"verdict: {verdict.verdict}")
        print(f"forward: {verdict.forward.verdict} "
              f"(gamma={verdict.forward.gamma or 0:.6g})")
        print(f"backward: {verdict.backward.verdict} "
              f"(gamma={verdict.backward.gamma or 0:.6g})")
        if verdict.forward.witness is not None:
            print(f"witness: {verdict.forward.witness}")
        samples = verdict.forward.samples
        ok = verdict.verdict == "equivalent"
    if args.format == "csv":
        def guarded_exp(x):
            try:
                return math.exp(x)
            except OverflowError:
                return math.inf

        print("point,lhs,rhs,ratio")
        for point, lv, rv in samples:
            print(f'"{point}",{guarded_exp(lv):.9g},{guarded_exp(rv):.9g},'
                  f'{guarded_exp(lv - rv):.9g}')
    return EXIT_OK if ok else EXIT_VERIFICATION


def cmd_word_weight(args) -> int:
    group = cayley.make_group(args.group)
    element = group.parse_element(args.element)
    table = cayley.word_table(group, args.radius)
    n = table.length(element)
    if n is None:
        print(f"length: beyond radius {args.radius}")
    else:
        print(f"length: {n}")
        print(f"weight: 2^{n} = {2 ** n}")
    data = cayley.growth_table(group, element, args.radius, args.max_power)
    print("m,len")
    for m, ln in data:
        print(f"{m},{ln}")
    return EXIT_OK if n is not None else EXIT_PRECONDITION


def cmd_norm(args) -> int:
    norm = weight_mod.SeriesNorm(Fraction(args.r), Fraction(args.s))
    ran_value = False
    if args.coeffs is not None:
        coeffs = [GaussianRational.parse(c.strip())
                  for c in args.coeffs.split(",")]
        value = weight_mod.series_norm(coeffs, norm)
        print(f"norm[r={args.r},s={args.s}]: {value}")
        ran_value = True
    if args.check_degree is not None:
        rep = weight_mod.norm_submultiplicativity_check(
            degree=args.check_degree, r=Fraction(args.r), s=Fraction(args.s),
            seed=args.seed)
        status = "pass" if rep.passed else "FAIL"
        print(f"submultiplicativity (r'=2^s r): {status} "
              f"({rep.pairs_checked} monomial pairs, {rep.polys_checked} "
              f"random polynomials)")
        if not rep.passed:
            print(f"witness: {rep.witness}")
            return EXIT_VERIFICATION
        ran_value = True
    if not ran_value:
        raise InputError("norm needs --coeffs and/or --check-degree")
    return EXIT_OK


# ---------------------------------------------------------------------------
# selfcheck
# ---------------------------------------------------------------------------

def selfcheck_run(truncation: int = 4, seed: int = 0, radius: int = 16,
                  extra_algebras=None):
    """Run the invariant suite of all modules; returns (lines, passed)."""
    lines = []
    passed = True

    def record(module, name, ok, detail=""):
        nonlocal passed
        passed = passed and ok
        status = "pass" if ok else "FAIL"
        suffix = f" {detail}" if detail else ""
        lines.append(f"[{module}] {name}: {status}{suffix}")

    if truncation < 2:
        lines.append("warning: reduced coverage (truncation < 2 leaves the "
                     "overflow-free identity sets nearly empty)")

    algebras = dict((name, build()) for name, build in corpus.CORPUS.items())
    if extra_algebras:
        algebras.update(extra_algebras)

    # --- lie suite
    for name, g in algebras.items():
        ok, viol = g.jacobi_check()
        detail = ""
        if not ok:
            i, j, k, _ = viol[0]
            detail = (f"witness ({g.basis_names[i]}, {g.basis_names[j]}, "
                      f"{g.basis_names[k]})")
        record("lie", f"jacobi {name}", ok, detail)
        if not ok:
            continue
        rad = g.full_subspace()
        nil = g.nilpotent_radical(rad)
        exp = g.exponential_radical(rad)
        record("lie", f"radical containment {name}", nil.contains_subspace(exp))
        record("lie", f"E=0 iff nilpotent {name}",
               (exp.dim == 0) == g.is_nilpotent())
        series = g.lower_central_series()
        record("lie", f"lcs ideals {name}",
               all(g.is_ideal(t) is None for t in series))
        if g.is_solvable():
            chain1 = semidirect_chain(g, nil)
            chain2 = semidirect_chain(g, nil)
            record("lie", f"chain determinism {name}",
                   chain1.labels() == chain2.labels()
                   and chain1.basis_vectors() == chain2.basis_vectors())
        if g.is_nilpotent() and g.dim:
            vecs, ws = g.f_basis()
            series_ok = True
            from .linalg import rref
            for j in range(1, max(ws) + 1):
                span_j = rref([v for v, w in zip(vecs, ws) if w >= j])
                term = series[j - 1] if j - 1 < len(series) else series[-1]
                if span_j != term.rows:
                    series_ok = False
            record("lie", f"f-basis adapted {name}",
                   series_ok and ws == sorted(ws) and ws[0] == 1)

    if passed:
        # --- hopf suite (skipped when the lie layer is already broken)
        for model_name in ("series", "smash2", "heis3", "solv2", "cyclic2"):
            rep = verify_hopf_axioms(MODEL_BUILDERS[model_name](truncation))
            fail = rep.first_failure()
            record("hopf", f"axioms {model_name}", rep.passed,
                   fail.line() if fail else "")
        for cname in ("heisenberg", "solv2"):
            g = corpus.named_algebra(cname)
            chain = semidirect_chain(g, g.nilpotent_radical(g.full_subspace()))
            model = iterated_smash(chain, truncation,
                                   adjoint_action_matrices(g, chain))
            names = [f.name for f in chain.factors]
            chk = commutator_table_check(model, chain_bracket_matrix(g, chain),
                                         names)
            record("hopf", f"commutators {cname}", chk.passed,
                   chk.witness or "")
        record("hopf", "tensor degeneration",
               tensor_degeneration_check(_model_tensor2(truncation)).passed)

    # --- weights suite
    config = weight_mod.SamplerConfig(seed=seed)
    v1 = weight_mod.majorizes(weight_mod.Poly(), weight_mod.ExpPower(1), config)
    record("weights", "poly <= exppow(1)",
           v1.verdict == weight_mod.HOLDS and v1.gamma <= 1.05,
           f"gamma={v1.gamma:.4g}" if v1.gamma else "")
    v2 = weight_mod.majorizes(weight_mod.ExpPower(1), weight_mod.Poly(), config)
    record("weights", "exppow(1) not<= poly", v2.verdict == weight_mod.VIOLATED)
    sqrt_poly = weight_mod.Power(weight_mod.Poly(), Fraction(1, 2))
    v3 = weight_mod.equivalent(weight_mod.Poly(), sqrt_poly, config)
    record("weights", "poly ~ sqrt(poly)", v3.verdict == "equivalent")
    okp, wit = weight_mod.product_bound_check(tuples=1000, seed=seed)
    record("weights", "product bound (exact)", okp, str(wit or ""))
    rep = weight_mod.norm_submultiplicativity_check(
        degree=min(8, truncation + 4), r=1, s=1, random_polys=25, seed=seed)
    record("weights", "series norm submultiplicativity", rep.passed)

    # --- cayley suite
    heis = cayley.Heis3Z()
    record("cayley", "heis3z associativity",
           cayley.associativity_spot_check(heis, 1000, seed).passed)
    table = cayley.word_table(heis, min(radius, 12))
    sym_ok = all(table.length(heis.inverse(g)) == n
                 for g, n in table.lengths.items())
    record("cayley", "word length symmetric", sym_ok)
    import random as _random
    rng = _random.Random(seed)
    tri_ok = True
    elems = sorted(table.lengths)
    for _ in range(2000):
        a = elems[rng.randrange(len(elems))]
        b = elems[rng.randrange(len(elems))]
        ab = heis.multiply(a, b)
        n = table.length(ab)
        if n is not None and n > table.lengths[a] + table.lengths[b]:
            tri_ok = False
            break
    record("cayley", "triangle inequality", tri_ok)
    zk2 = cayley.ZK(2)
    fit = cayley.distortion_fit(zk2, (1, 0), radius)
    record("cayley", "undistorted generator",
           fit.classification == "power" and 0.9 <= fit.alpha <= 1.1,
           f"alpha={fit.alpha:.3f}" if fit.alpha else "")
    res = cayley.delta_smash_check(*cayley.heis_as_semidirect_scenario(),
                                   samples=50, seed=seed)
    record("cayley", "delta smash heis3z", res.passed, res.reason)
    res = cayley.delta_smash_check(*cayley.direct_product_scenario(zk2, cayley.ZK(1)),
                                   samples=50, seed=seed)
    record("cayley", "delta smash trivial", res.passed, res.reason)
    wtab = cayley.word_table(cayley.ZK(2), 8)
    res = cayley.weighted_l1_submult_check(
        cayley.ZK(2), weight_mod.WordWeight(wtab, "zk:2"), samples=60,
        seed=seed, size=3)
    record("cayley", "weighted l1 submultiplicative", res.passed, res.reason)

    lines.append(f"selfcheck: {'pass' if passed else 'FAIL'} "
                 f"({len(lines)} lines)")
    return lines, passed


def cmd_selfcheck(args) -> int:
    lines, ok = selfcheck_run(truncation=args.truncation, seed=args.seed,
                              radius=args.radius)
    if args.format == "json":
        print(json.dumps({"lines": lines, "passed": ok}, indent=2))
    else:
        print("\n".join(lines))
    return EXIT_OK if ok else EXIT_VERIFICATION


COMMANDS = {
    "decompose": cmd_decompose,
    "hopf-verify": cmd_hopf_verify,
    "smash-table": cmd_smash_table,
    "weight-check": cmd_weight_check,
    "word-weight": cmd_word_weight,
    "norm": cmd_norm,
    "selfcheck": cmd_selfcheck,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (InputError, FileNotFoundError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except ValueError as exc:
        # bad flag values (descriptors, fractions, element strings)
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
