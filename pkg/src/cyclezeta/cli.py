"""Command-line front end with reproducible, machine-readable output.

One JSON document per invocation on standard output (``--tsv`` switches
tabular commands to tab-separated rows; ``census ... --stream`` emits one
JSON line per census member).  Big integers are serialized as decimal
strings, floats carry an explicit error field (0 for exact values), and
every randomized command requires ``--seed``.  Output is byte-identical
across runs for identical arguments and seed; wall-clock timing is only
attached with ``--timing``.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 size-cap refusal.

Polynomial grammar (shared by ``norm``, ``delta``, ``height`` and the
height censuses): signed integer coefficients, ``+ - * ^`` and
parentheses over variables ``z1..z9`` for affine polynomials, ``X1, Y1,
.., X9, Y9`` for multihomogeneous forms, or ``t`` for coordinates over a
rational function field.  Multiplication is always explicit (``3*z1^2``,
``X1*Y2``); exponents are literal non-negative integers.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass, field

from . import bound_engine, exact_counts, field_census, fs_norms, height_lab
from . import cycle_oracle, zeta_series
from .errors import CycleZetaError, DomainError, SizeCapExceeded
from .multipoly import parse_affine_polynomial, parse_integer_form
from .quadrature import QuadratureConfig
from .spaces import PrimePower, parse_space


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(1)


@dataclass
class CommandResult:
    command: str
    parameters: dict
    results: dict = field(default_factory=dict)
    provenance: str = ""
    elapsed: float | None = None

    def add_int(self, name: str, value: int):
        self.results[name] = {"value": str(value), "error": 0}

    def add_float(self, name: str, value: float, error: float = 0.0):
        self.results[name] = {"value": float(value), "error": float(error)}

    def add_raw(self, name: str, value):
        self.results[name] = {"value": value, "error": 0}


def _emit(result: CommandResult, args) -> None:
    if getattr(args, "tsv", False):
        for name, cell in result.results.items():
            print(f"{name}\t{cell['value']}\t{cell['error']}")
        return
    doc = {
        "command": result.command,
        "parameters": result.parameters,
        "results": result.results,
        "provenance": result.provenance,
    }
    if result.elapsed is not None:
        doc["elapsed_seconds"] = round(result.elapsed, 6)
    print(json.dumps(doc, sort_keys=True))


def _prime_power(text: str) -> PrimePower:
    if "^" in text:
        p, e = text.split("^", 1)
        return PrimePower(int(p), int(e))
    return PrimePower(int(text))


def _space(args):
    return parse_space(args.space, args.n)


def _quad_config(args) -> QuadratureConfig:
    scheme = getattr(args, "scheme", "tensor_gauss")
    if scheme == "monte_carlo" and getattr(args, "seed", None) is None:
        raise DomainError("monte_carlo quadrature requires --seed")
    return QuadratureConfig(
        scheme=scheme,
        nodes_per_dim=getattr(args, "nodes", 64),
        sample_count=getattr(args, "mc_samples", 1_000_000),
        seed=getattr(args, "seed", None),
        tolerance=getattr(args, "tolerance", 1e-3),
    )


def _add_space_args(p, need_q=True):
    p.add_argument("--space", required=True, help="pn or p1xn")
    p.add_argument("--n", type=int, required=True)
    if need_q:
        p.add_argument("--q", required=True,
                       help="prime power, e.g. 3 or 2^2")


def _add_quad_args(p, add_seed=True):
    p.add_argument("--scheme", choices=["tensor_gauss", "monte_carlo"],
                   default="tensor_gauss")
    p.add_argument("--nodes", type=int, default=64)
    p.add_argument("--mc-samples", type=int, default=1_000_000)
    if add_seed:
        p.add_argument("--seed", type=int, default=None)
    p.add_argument("--tolerance", type=float, default=1e-3)


def _multidegree(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


# -- subcommand implementations ---------------------------------------------

def _cmd_count(args) -> CommandResult:
    space = _space(args)
    res = CommandResult("count", _params(args))
    if args.kind == "divisors":
        if args.multidegree is not None:
            count = exact_counts.divisor_count(space, args.q, args.multidegree)
            res.provenance = "closed-form multidegree divisor count"
            if args.audit:
                forms = cycle_oracle.enum_divisors(space, args.q, args.multidegree)
                _audit_equal(len(forms), count)
                res.add_raw("audit", "oracle enumeration matched")
        else:
            count = exact_counts.divisor_count_by_degree(space, args.q, args.k)
            res.provenance = "closed-form divisor count by polarization degree"
            if args.audit:
                _audit_equal(
                    cycle_oracle.enum_divisor_count_by_degree(space, args.q, args.k),
                    count,
                )
                res.add_raw("audit", "oracle enumeration matched")
    elif args.kind == "zero-cycles":
        count = exact_counts.zero_cycle_count(space, args.q, args.k)
        res.provenance = "exp of point-count series, exact rational recurrence"
        if args.audit:
            cycles = cycle_oracle.enum_zero_cycles(space, args.q, args.k)
            _audit_equal(len(cycles), count)
            res.add_raw("audit", "oracle enumeration matched")
    elif args.kind == "top-cycles":
        count = exact_counts.top_cycle_count(space, args.k)
        res.provenance = "divisibility by the top polarization degree"
    else:  # cycles: dispatch on l
        count = exact_counts.cycle_count(space, args.q, args.l, args.k)
        res.provenance = "closed-form dispatch on cycle dimension"
        if args.audit and _oracle_cycle_count(space, args.q, args.l, args.k) is not None:
            _audit_equal(_oracle_cycle_count(space, args.q, args.l, args.k), count)
            res.add_raw("audit", "oracle enumeration matched")
    res.add_int("count", count)
    return res


def _oracle_cycle_count(space, q, l, k):
    if l == 0:
        return len(cycle_oracle.enum_zero_cycles(space, q, k))
    if l == space.dim - 1:
        return cycle_oracle.enum_divisor_count_by_degree(space, q, k)
    return None


def _audit_equal(enumerated: int, formula: int):
    if enumerated != formula:
        raise CycleZetaError(
            f"audit failed: oracle {enumerated} != formula {formula}"
        )


def _cmd_enum(args) -> CommandResult:
    space = _space(args)
    res = CommandResult("enum", _params(args))
    if args.kind == "divisors":
        forms = cycle_oracle.enum_divisors(
            space, args.q, args.multidegree, threads=args.threads
        )
        res.add_int("count", len(forms))
        res.add_raw("forms", [str(f) for f in forms])
        res.provenance = "exhaustive canonical-form enumeration"
    else:
        cycles = cycle_oracle.enum_zero_cycles(space, args.q, args.k)
        res.add_int("count", len(cycles))
        res.add_raw(
            "cycles",
            [
                [[list(map(list, pt.orbit_key)), pt.degree, m] for pt, m in z.terms]
                for z in cycles
            ],
        )
        res.provenance = "exhaustive Frobenius-orbit enumeration"
    return res


def _cmd_bound(args) -> CommandResult:
    res = CommandResult("bound", _params(args))
    if args.kind == "constant":
        const = bound_engine.explicit_constant_pn(args.n, args.l)
        res.add_int("constant", const.value)
        res.add_raw("derivation", list(const.derivation))
        res.provenance = "pinned recursion over boundary strata"
    elif args.kind == "counting-system":
        spec = bound_engine.divisor_tower_spec(args.q, args.n, args.l)
        res.add_float(
            "log2_bound",
            bound_engine.counting_system_log_bound(spec, args.h) / math.log(2),
        )
        res.provenance = "inductive tower combinator, divisor instantiation"
    elif args.kind == "product-cycle":
        value = bound_engine.product_cycle_bound(
            args.deg_d, args.deg_e, args.deg_c, args.theta_d, args.theta_e
        )
        res.add_float("logq_bound", value)
        res.provenance = "fiber bound for paired pushforwards"
    else:  # pushforward
        exponent = bound_engine.pushforward_bound(args.deg_pi, args.mults)
        res.add_int("log2_bound", exponent)
        res.provenance = "finite-map preimage bound"
    return res


def _cmd_zeta(args) -> CommandResult:
    space = _space(args)
    series = zeta_series.local_zeta_series(space, args.q, args.l, args.kmax)
    res = CommandResult("zeta", _params(args))
    res.add_raw("coefficients", [str(c) for c in series.coefficients])
    res.add_raw("exponents", [series.exponent(k) for k in range(args.kmax + 1)])
    res.provenance = "exact cycle counts at sparse exponents"
    if args.audit:
        audited = False
        for k, c in enumerate(series.coefficients):
            oracle = _oracle_cycle_count(space, args.q, args.l, k)
            if oracle is not None:
                _audit_equal(oracle, c)
                audited = True
        if audited:
            res.add_raw("audit", "oracle enumeration matched")
    return res


def _cmd_lfun(args) -> CommandResult:
    value, err = zeta_series.l_function_partial_with_error(
        args.n, args.l, complex(args.s), args.pmax
    )
    res = CommandResult("lfun", _params(args))
    res.add_float("real", value.real, err)
    res.add_float("imag", value.imag, err)
    res.provenance = "ascending partial Euler product, tail-bounded factors"
    return res


def _cmd_speczeta(args) -> CommandResult:
    value = zeta_series.spec_z_zeta_partial(args.s, args.cutoff, audit=args.audit)
    res = CommandResult("speczeta", _params(args))
    res.add_float("partial_sum", value, 0.0)
    res.add_float("tail_bound", args.cutoff ** (1 - args.s) / (args.s - 1))
    res.provenance = (
        "cycle enumeration through the norm bijection" if args.audit
        else "direct partial sum through the norm bijection"
    )
    return res


def _cmd_norm(args) -> CommandResult:
    f = parse_affine_polynomial(args.poly, nvars=args.nvars)
    inf, two = fs_norms.norms(f)
    res = CommandResult("norm", _params(args))
    res.add_float("inf", inf)
    res.add_float("two", two)
    if not f.is_zero:
        res.add_float("lc_sigma_max", fs_norms.lc_sigma_max(f))
        cfg = _quad_config(args)
        res.add_float("v", fs_norms.v_measure([f], cfg), cfg.tolerance)
    res.provenance = "coefficient norms exact; v by Fubini-Study quadrature"
    return res


def _cmd_delta(args) -> CommandResult:
    form = parse_integer_form(args.form)
    cfg = _quad_config(args)
    value = fs_norms.delta_lambda(form, args.lam, cfg)
    res = CommandResult("delta", _params(args))
    err = 0.0 if form.is_monomial else cfg.tolerance
    res.add_float("delta", value, err)
    res.add_raw("multidegree", list(form.multidegree))
    res.provenance = "lambda-degree term plus Fubini-Study integral"
    return res


def _cmd_divcount(args) -> CommandResult:
    cfg = _quad_config(args)
    census = fs_norms.count_arith_divisors_bounded(
        args.n, args.lam, args.h, cfg, search_cap=args.search_cap
    )
    res = CommandResult("divcount", _params(args))
    res.add_int("count", census.count)
    res.add_float("log_certified_bound", census.log_certified_bound)
    res.add_int("coeff_box", census.max_inf_norm)
    res.add_raw("borderline", [str(f) for f in census.borderline])
    res.provenance = "exhaustive certified-region search with guard band"
    return res


def _cmd_height(args) -> CommandResult:
    res = CommandResult("height", _params(args))
    coords = [c.strip() for c in args.coords.split(",")]
    if args.kind == "ff":
        F = args.q
        pt = height_lab.FunctionFieldPoint.make(
            F, [_parse_fq_poly(c, F) for c in coords]
        )
        res.add_int("height", height_lab.height_ff(pt))
        res.provenance = "max coordinate degree after normalization"
    else:
        polys = [parse_affine_polynomial(c, nvars=args.d) for c in coords]
        pt = height_lab.RationalFunctionPoint.make(args.d, polys)
        cfg = _quad_config(args)
        res.add_float("height", height_lab.height_nv(pt, cfg), cfg.tolerance)
        res.provenance = "infinity degrees plus Fubini-Study integral"
    return res


def _parse_fq_poly(text: str, q: PrimePower) -> tuple[int, ...]:
    # univariate over F_q in t: reuse the affine grammar with z1 = t;
    # integer literals land in the prime field
    poly = parse_affine_polynomial(text.replace("t", "z1"), nvars=1)
    coeffs = [0] * (poly.deg(0) + 1)
    for (i,), c in poly.coeffs.items():
        coeffs[i] = c % q.p
    return tuple(coeffs)


def _fq_poly_str(coeffs) -> str:
    if not coeffs:
        return "0"
    parts = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        t = "1" if i == 0 else ("t" if i == 1 else f"t^{i}")
        parts.append(t if c == 1 and i > 0 else (f"{c}*{t}" if i > 0 else str(c)))
    return " + ".join(parts)


def _cmd_census(args) -> CommandResult | None:
    res = CommandResult("census", _params(args))
    if args.kind == "closed-points":
        space = _space(args)
        census = field_census.closed_point_census(space, args.q, args.dmax)
        res.add_raw("b", [str(x) for x in census.b])
        res.provenance = "Moebius inversion of extension point counts"
    elif args.kind == "ff-points":
        if args.stream:
            for pt in height_lab.iter_ff_points(args.q, args.n, int(args.h)):
                print(json.dumps({
                    "coords": [_fq_poly_str(c) for c in pt.coords],
                    "height": height_lab.height_ff(pt),
                }, sort_keys=True))
            return None
        count = height_lab.count_ff_points(args.q, args.n, int(args.h))
        res.add_int("count", count)
        res.provenance = "exhaustive normalized-tuple enumeration"
    else:  # sh-set
        cfg = _quad_config(args)
        if args.stream:
            exponents, rows, heights, _, _ = height_lab.sh_set_table(
                args.d, args.a, args.h, cfg
            )
            for row, height in zip(rows, heights):
                coeffs = {
                    "*".join(
                        f"z{j+1}" + (f"^{e}" if e > 1 else "")
                        for j, e in enumerate(exp) if e
                    ) or "1": int(c)
                    for exp, c in zip(exponents, row) if c
                }
                print(json.dumps(
                    {"coeffs": coeffs, "height": round(float(height), 12)},
                    sort_keys=True,
                ))
            return None
        census = height_lab.sh_set_census(args.d, args.a, args.h, cfg)
        res.add_int("count", census.count)
        res.add_raw("all_heights_ok", census.all_heights_ok)
        res.add_float("max_height", census.max_height, cfg.tolerance)
        res.add_float("analytic_lower_bound", census.analytic_lower_bound)
        res.add_int("coeff_box", census.coeff_box)
        res.provenance = "exhaustive box census with numerical height check"
    return res


def _cmd_verify(args) -> CommandResult:
    spec = fs_norms.NormSampleSpec(
        samples=args.samples, seed=args.seed, nvars=args.nvars,
        max_degree=args.maxdeg, coeff_bound=args.coeff_bound,
    )
    cfg = _quad_config(args)
    report = fs_norms.verify_norm_props(spec, cfg)
    res = CommandResult("verify", _params(args))
    tally = report.tally()
    res.add_int("checks", len(report.records))
    res.add_int("pass", tally["pass"])
    res.add_int("warn", tally["warn"])
    res.add_int("fail", tally["fail"])
    res.add_raw(
        "failures",
        [
            {"sample": r.sample, "name": r.name, "lhs": r.lhs, "rhs": r.rhs}
            for r in report.hard_failures
        ],
    )
    res.provenance = "seeded random polynomials against norm inequalities"
    return res


def _params(args) -> dict:
    skip = {"func", "tsv", "timing"}
    out = {}
    for key, val in sorted(vars(args).items()):
        if key in skip or val is None:
            continue
        out[key] = str(val) if isinstance(val, PrimePower) else (
            list(val) if isinstance(val, tuple) else val
        )
    return out


def build_parser() -> _Parser:
    parser = _Parser(prog="cyclezeta", description=__doc__)
    parser.add_argument("--tsv", action="store_true", help="tabular output")
    parser.add_argument("--timing", action="store_true",
                        help="attach wall-clock time (breaks byte-identity)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="exact cycle counts")
    p.add_argument("kind", choices=["divisors", "zero-cycles", "top-cycles", "cycles"])
    _add_space_args(p)
    p.add_argument("--multidegree", type=_multidegree)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--audit", action="store_true")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enum", help="exhaustive enumeration (oracle)")
    p.add_argument("kind", choices=["divisors", "zero-cycles"])
    _add_space_args(p)
    p.add_argument("--multidegree", type=_multidegree)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_enum)

    p = sub.add_parser("bound", help="counting bounds and pinned constants")
    p.add_argument("kind", choices=["constant", "counting-system",
                                    "product-cycle", "pushforward"])
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--q", default="2")
    p.add_argument("--h", type=float, default=1.0)
    p.add_argument("--deg-d", type=float, default=1.0)
    p.add_argument("--deg-e", type=float, default=1.0)
    p.add_argument("--deg-c", type=float, default=1.0)
    p.add_argument("--theta-d", type=int, default=1)
    p.add_argument("--theta-e", type=int, default=1)
    p.add_argument("--deg-pi", type=int, default=1)
    p.add_argument("--mults", type=_multidegree, default=(1,))
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("zeta", help="truncated cycle zeta series")
    _add_space_args(p)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--audit", action="store_true")
    p.set_defaults(func=_cmd_zeta)

    p = sub.add_parser("lfun", help="partial Euler product over primes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--pmax", type=int, required=True)
    p.set_defaults(func=_cmd_lfun)

    p = sub.add_parser("speczeta", help="integer-spectrum zeta partial sum")
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--cutoff", type=int, required=True)
    p.add_argument("--audit", action="store_true")
    p.set_defaults(func=_cmd_speczeta)

    p = sub.add_parser("norm", help="coefficient norms and the v measure")
    p.add_argument("--poly", required=True)
    p.add_argument("--nvars", type=int, default=None)
    _add_quad_args(p)
    p.set_defaults(func=_cmd_norm)

    p = sub.add_parser("delta", help="arithmetic degree of an integer form")
    p.add_argument("--form", required=True, help="e.g. 'X1^2 - 3*X1*Y1 + Y1^2'")
    p.add_argument("--lam", type=float, default=1.0)
    _add_quad_args(p)
    p.set_defaults(func=_cmd_delta)

    p = sub.add_parser("divcount", help="bounded arithmetic-degree divisor census")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lam", type=float, required=True)
    p.add_argument("--h", type=float, required=True)
    p.add_argument("--search-cap", type=int, default=fs_norms.DEFAULT_SEARCH_CAP)
    _add_quad_args(p)
    p.set_defaults(func=_cmd_divcount)

    p = sub.add_parser("height", help="heights of projective points")
    p.add_argument("kind", choices=["ff", "nv"])
    p.add_argument("--coords", required=True,
                   help="comma-separated coordinates, e.g. '1,t^2+1' or '1,z1'")
    p.add_argument("--q", default="2")
    p.add_argument("--d", type=int, default=1)
    _add_quad_args(p)
    p.set_defaults(func=_cmd_height)

    p = sub.add_parser("census", help="closed-point and bounded-height censuses")
    p.add_argument("kind", choices=["closed-points", "ff-points", "sh-set"])
    p.add_argument("--space", default="pn")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--q", default="2")
    p.add_argument("--dmax", type=int, default=1)
    p.add_argument("--h", type=float, default=0.0)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--a", type=float, default=0.25)
    p.add_argument("--stream", action="store_true",
                   help="emit one JSON line per census member")
    _add_quad_args(p)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("verify", help="property verification drivers")
    p.add_argument("kind", choices=["norms"])
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--nvars", type=int, default=2)
    p.add_argument("--maxdeg", type=int, default=3)
    p.add_argument("--coeff-bound", type=int, default=10)
    _add_quad_args(p, add_seed=False)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        if isinstance(getattr(args, "q", None), str):
            args.q = _prime_power(args.q)
        result = args.func(args)
    except SizeCapExceeded as exc:
        print(f"size cap exceeded: {exc}", file=sys.stderr)
        return 3
    except (DomainError, CycleZetaError, ValueError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    if result is not None:
        if getattr(args, "timing", False):
            result.elapsed = time.perf_counter() - start
        _emit(result, args)
    return 0


if __name__ == "__main__":
    sys.exit(main())
