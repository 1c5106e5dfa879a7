"""Command-line interface: ``sincquad {quad,indef,auto,experiment,bound}``."""
import argparse
import math
import sys

from .auto_tol import DEFAULT_N_CAP, ToleranceRequest, integrate_to_tol
from .bounds import certificate
from .engine import integrate, integrate_indef
from .exceptions import SincError, ToleranceUnreachableError
from .experiments import ExperimentSpec, run_experiment, to_csv
from .mesh import DecayParams, build_mesh, scheme_for, validate_n
from .problems import get_problem
from .transforms import TransformId, case_of

EXIT_OK = 0
EXIT_UNREACHABLE = 1
EXIT_USAGE = 2

_TRANSFORMS = [t.value for t in TransformId]


def _g(x):
    return "unavailable" if x is None else f"{x:.17g}"


def _add_params(p, transform_required=False):
    p.add_argument("--transform", choices=_TRANSFORMS, required=transform_required)
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--d", type=float)
    p.add_argument("--K", type=float)


def _add_example(p, required=True):
    p.add_argument("--example", type=int, choices=(1, 2, 3), required=required)
    p.add_argument("--family", choices=("se", "de"), default="de")


def _resolve(args, problem=None):
    """Transformation and decay parameters from the example and flag overrides."""
    if args.transform is not None:
        tid = TransformId(args.transform)
        base = None
        if problem is not None:
            if case_of(tid) is not problem.case:
                raise SincError(
                    f"transform {tid.value} covers {case_of(tid).name}, example {problem.number} needs {problem.case.name}"
                )
            # defaults: the example's own parameters for this transform, else
            # those of the same family (e.g. DE3 dagger borrows the DE set)
            same = [p for t, p in (problem.se, problem.de) if t is tid]
            base = same[0] if same else problem.setup("de" if tid.is_de else "se")[1]
    else:
        tid, base = problem.setup(args.family)

    def pick(name, default):
        value = getattr(args, name)
        if value is not None:
            return value
        if base is not None:
            return getattr(base, name)
        if default is None:
            raise SincError(f"--{name} is required with --transform {tid.value}")
        return default

    params = DecayParams(
        K=pick("K", None),
        alpha=pick("alpha", 1.0),
        beta=pick("beta", 1.0),
        d=pick("d", None),
        case=case_of(tid),
    )
    return tid, params


def _print(out, **fields):
    for key, value in fields.items():
        if isinstance(value, float) or value is None:
            value = _g(value)
        print(f"{key}: {value}", file=out)


def _cmd_quad(args, out):
    problem = get_problem(args.example)
    tid, params = _resolve(args, problem)
    res = integrate(problem.f, tid, params, args.n)
    _print(out, transform=tid.value, n=args.n, h=res.mesh.h, M=res.mesh.M, N=res.mesh.N,
           value=res.value, exact=problem.exact, abs_error=abs(res.value - problem.exact), bound=res.bound)
    return EXIT_OK


def _cmd_indef(args, out):
    problem = get_problem(args.example)
    tid, params = _resolve(args, problem)
    res = integrate_indef(problem.f, tid, params, args.n, args.tau)
    exact = problem.exact if math.isinf(args.tau) else problem.exact_indef(args.tau)
    _print(out, transform=tid.value, n=args.n, tau=args.tau, h=res.mesh.h, M=res.mesh.M, N=res.mesh.N,
           value=res.value, exact=exact, abs_error=abs(res.value - exact), bound=res.bound)
    return EXIT_OK


def _cmd_auto(args, out):
    problem = get_problem(args.example)
    tid, params = _resolve(args, problem)
    req = ToleranceRequest(tol=args.tol, scheme=scheme_for(tid, args.kind), tid=tid, params=params,
                           n_cap=args.n_cap)
    if args.kind == "indef":
        res = integrate_to_tol(problem.f, req, tau=args.tau)
        exact = problem.exact if math.isinf(args.tau) else problem.exact_indef(args.tau)
    else:
        res = integrate_to_tol(problem.f, req)
        exact = problem.exact
    _print(out, transform=tid.value, n=res.mesh.n, value=res.value, certified_bound=res.bound,
           abs_error=abs(res.value - exact), tol=args.tol)
    return EXIT_OK


def _cmd_experiment(args, out):
    if args.n_step < 1 or args.n_min < 1 or args.n_max < args.n_min:
        raise SincError("need 1 <= n-min <= n-max and n-step >= 1")
    spec = ExperimentSpec(example=args.example, family=args.family, kind=args.kind,
                          n_list=list(range(args.n_min, args.n_max + 1, args.n_step)))
    text = to_csv(run_experiment(spec))
    if args.out:
        with open(args.out, "w", newline="", encoding="ascii") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def _cmd_bound(args, out):
    tid, params = _resolve(args)
    cert = certificate(tid, params, args.kind)
    mesh = build_mesh(cert.scheme, params, args.n)
    report = validate_n(cert.scheme, params, mesh)
    _print(out, scheme=cert.scheme.value, constant=cert.constant, n=args.n, rate=cert.rate(args.n),
           bound=cert.bound(args.n), valid=str(bool(report)).lower())
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sincquad", description="Sinc quadrature and indefinite integration with explicit error bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("quad", help="Sinc quadrature of a built-in example")
    _add_example(p)
    _add_params(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_quad)

    p = sub.add_parser("indef", help="Sinc indefinite integral of a built-in example at tau")
    _add_example(p)
    _add_params(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tau", type=float, required=True)
    p.set_defaults(func=_cmd_indef)

    p = sub.add_parser("auto", help="smallest certified n meeting a tolerance")
    _add_example(p)
    _add_params(p)
    p.add_argument("--tol", type=float, required=True)
    p.add_argument("--kind", choices=("quad", "indef"), default="quad")
    p.add_argument("--tau", type=float, default=math.inf)
    p.add_argument("--n-cap", type=int, default=DEFAULT_N_CAP)
    p.set_defaults(func=_cmd_auto)

    p = sub.add_parser("experiment", help="error/bound table over a range of n, as CSV")
    _add_example(p)
    p.add_argument("--kind", choices=("quad", "indef"), default="quad")
    p.add_argument("--n-min", type=int, default=5)
    p.add_argument("--n-max", type=int, default=100)
    p.add_argument("--n-step", type=int, default=5)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_experiment)

    p = sub.add_parser("bound", help="explicit constant and bound for given decay parameters")
    _add_params(p, transform_required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=("quad", "indef"), default="quad")
    p.set_defaults(func=_cmd_bound)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except ToleranceUnreachableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNREACHABLE
    except (SincError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


cli_main = main


if __name__ == "__main__":
    sys.exit(main())
