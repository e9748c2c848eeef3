"""
Command-line entry point: ``kroncoeff <subcommand> ...``.

Exit status: 0 on success, 1 on usage or input errors, 2 when ``verify``
finds a disagreement, 3 when an internal invariant check fails.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import characters, contingency, hooks, kron, lr, verify
from .errors import InputError, InvariantError
from .partitions import Partition

EXIT_OK, EXIT_USAGE, EXIT_DISAGREE, EXIT_INVARIANT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except InputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _vector(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer vector: {text!r}") from None


def _common() -> argparse.ArgumentParser:
    # accepted before or after the subcommand
    p = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    s = argparse.SUPPRESS
    p.add_argument("--char-cache", default=s, metavar="PATH",
                   help=f"character cache file (default: ${characters.CACHE_ENV_VAR})")
    p.add_argument("--threads", type=int, default=s, help="worker threads for table sums")
    p.add_argument("--cache-capacity", type=int, default=s,
                   help="contingency memo capacity, 0 for unbounded")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="kroncoeff", parents=[common], allow_abbrev=False,
                     description="Exact Kronecker, character and Littlewood-Richardson computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def triple(p, nu=True):
        p.add_argument("--lam", type=_partition, required=True)
        p.add_argument("--mu", type=_partition, required=True)
        if nu:
            p.add_argument("--nu", type=_partition, required=True)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("kron", parents=[common], allow_abbrev=False, help="Kronecker coefficient g(lam, mu, nu)")
    triple(p)
    p.add_argument("--method", choices=kron.METHODS, default="auto")
    p.add_argument("--gapp", action="store_true", help="also print the pos/neg split of the table sum")
    p.add_argument("--conjugate-pair", action="store_true",
                   help="auto method: work with the conjugates of the first two roles")

    p = sub.add_parser("reduce", parents=[common], allow_abbrev=False, help="apply the reduction map and print its certificate")
    triple(p)

    p = sub.add_parser("char", parents=[common], allow_abbrev=False, help="character value chi^lam at cycle type nu")
    p.add_argument("--lam", type=_partition, required=True)
    p.add_argument("--nu", type=_partition, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("hook", parents=[common], allow_abbrev=False, help="g(lam, mu, (n-k, 1^k)) by barred tableaux")
    triple(p, nu=False)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-n", type=int, default=hooks.DEFAULT_MAX_N)
    p.add_argument("--trace", action="store_true", help="print every counted tableau")

    p = sub.add_parser("lr", parents=[common], allow_abbrev=False, help="Littlewood-Richardson coefficient c^lam_{mu,nu}")
    triple(p)
    p.add_argument("--method", choices=lr.METHODS, default="direct")

    p = sub.add_parser("redkron", parents=[common], allow_abbrev=False, help="reduced Kronecker coefficient")
    triple(p)
    p.add_argument("--n", type=int, default=None, help="evaluate at this n instead of the stable bound")
    p.add_argument("--method", choices=kron.METHODS, default="auto")

    p = sub.add_parser("tables", parents=[common], allow_abbrev=False, help="number of 3-way contingency arrays")
    p.add_argument("--a", type=_vector, required=True)
    p.add_argument("--b", type=_vector, required=True)
    p.add_argument("--c", type=_vector, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", parents=[common], allow_abbrev=False, help="run the cross-method suites")
    p.add_argument("--max-n", type=int, default=5)
    return parser


def _emit(out, args, inputs: dict, result, method: str, started: float, **extra):
    if getattr(args, "json", False):
        doc = {"input": inputs, "result": str(result), "method": method,
               "millis": round((time.perf_counter() - started) * 1000, 3)}
        doc.update(extra)
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(f"{result}\n")


def _cmd_kron(args, out, threads):
    started = time.perf_counter()
    inputs = {"lam": str(args.lam), "mu": str(args.mu), "nu": str(args.nu)}
    value, route = kron.compute_with_route(args.lam, args.mu, args.nu, args.method,
                                           conjugate_pair=args.conjugate_pair, threads=threads)
    extra = {}
    if args.gapp:
        pair = kron.gapp_decomposition(args.lam, args.mu, args.nu, threads=threads)
        if pair.value != value:
            raise InvariantError(f"table sum {pair.value} disagrees with {route} value {value}")
        extra["gapp"] = {"pos": str(pair.pos), "neg": str(pair.neg)}
        if not args.json:
            out.write(f"pos {pair.pos}\nneg {pair.neg}\n")
    _emit(out, args, inputs, value, str(route), started, **extra)


def _cmd_reduce(args, out, threads):
    started = time.perf_counter()
    inputs = {"lam": str(args.lam), "mu": str(args.mu), "nu": str(args.nu)}
    res = kron.reduce(args.lam, args.mu, args.nu)
    if res.kind == "zero":
        lines = [f"t={res.t}", f"zero: |lam_{res.index} - mu_{res.index}| > t"]
        result = "0"
    else:
        phi = kron.ReductionMap(res.t, res.ell, res.omega, res.rho, res.cuts)
        lines = [f"t={res.t}", f"ell={res.ell}",
                 "I={" + ",".join(map(str, res.cuts)) + "}",
                 f"omega={res.omega}", f"rho={res.rho}",
                 f"phi(omega)={phi(res.omega)}", f"phi(rho)={phi(res.rho)}",
                 f"lam={res.lam}", f"mu={res.mu}", f"nu={res.nu}"]
        result = f"{res.lam};{res.mu};{res.nu}"
    if args.json:
        _emit(out, args, inputs, result, "reduce", started, certificate=lines)
    else:
        out.write("\n".join(lines) + "\n")


def _cmd_char(args, out, threads):
    started = time.perf_counter()
    value = characters.chi(args.lam, args.nu)
    _emit(out, args, {"lam": str(args.lam), "nu": str(args.nu)}, value, "murnaghan-nakayama", started)


def _cmd_hook(args, out, threads):
    started = time.perf_counter()
    inputs = {"lam": str(args.lam), "mu": str(args.mu), "k": args.k}
    if args.trace:
        found = list(hooks.hook_tableaux(args.lam, args.mu, args.k, args.max_n))
        if not args.json:
            for T in found:
                out.write(f"{T}\n")
        value = len(found)
    else:
        value = hooks.count_hook_kron(args.lam, args.mu, args.k, args.max_n)
        found = None
    extra = {"tableaux": [str(T) for T in found]} if (args.json and found is not None) else {}
    _emit(out, args, inputs, value, "barred-tableaux", started, **extra)


def _cmd_lr(args, out, threads):
    started = time.perf_counter()
    value = lr.compute_lr(args.lam, args.mu, args.nu, args.method)
    _emit(out, args, {"lam": str(args.lam), "mu": str(args.mu), "nu": str(args.nu)},
          value, args.method, started)


def _cmd_redkron(args, out, threads):
    started = time.perf_counter()
    n = args.n if args.n is not None else kron.stable_n(args.lam, args.mu, args.nu)
    value = kron.reduced_kron(args.lam, args.mu, args.nu, args.method, n=n)
    inputs = {"lam": str(args.lam), "mu": str(args.mu), "nu": str(args.nu), "n": n}
    _emit(out, args, inputs, value, args.method, started)


def _cmd_tables(args, out, threads):
    started = time.perf_counter()
    value = contingency.count_tables(args.a, args.b, args.c)
    inputs = {k: ",".join(map(str, getattr(args, k))) for k in ("a", "b", "c")}
    _emit(out, args, inputs, value, "dp", started)


def _cmd_verify(args, out, threads):
    if not 0 <= args.max_n <= verify.HARD_CAP:
        raise InputError(f"--max-n must be between 0 and {verify.HARD_CAP}")
    results = verify.run_all(args.max_n, report=lambda line: out.write(line + "\n"))
    failed = [r for r in results if not r.ok]
    total = sum(r.checked for r in results)
    if failed:
        out.write(f"FAIL {len(failed)} suite(s); first counterexample: {failed[0].counterexample}\n")
        return EXIT_DISAGREE
    out.write(f"all suites pass ({total} checks, max-n {args.max_n})\n")
    return EXIT_OK


COMMANDS = {
    "kron": _cmd_kron, "reduce": _cmd_reduce, "char": _cmd_char, "hook": _cmd_hook,
    "lr": _cmd_lr, "redkron": _cmd_redkron, "tables": _cmd_tables, "verify": _cmd_verify,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:     # --help
        return EXIT_OK if not exc.code else EXIT_USAGE

    threads = getattr(args, "threads", None)
    if threads is None:
        threads = os.cpu_count() or 1
    if threads < 1:
        err.write("kroncoeff: --threads must be positive\n")
        return EXIT_USAGE
    capacity = getattr(args, "cache_capacity", None)
    if capacity is not None:
        if capacity < 0:
            err.write("kroncoeff: --cache-capacity must be nonnegative\n")
            return EXIT_USAGE
        contingency.set_cache_capacity(capacity or None)

    cache_path = getattr(args, "char_cache", None) or characters.cache_path_from_env()
    try:
        if cache_path:
            characters.load_cache(cache_path)
        code = COMMANDS[args.command](args, out, threads)
        if cache_path:
            characters.save_cache(cache_path)
    except InputError as exc:
        err.write(f"kroncoeff: {exc}\n")
        return EXIT_USAGE
    except InvariantError as exc:
        err.write(f"kroncoeff: internal check failed: {exc}\n")
        return EXIT_INVARIANT
    return code or EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
