"""Command-line front end.

Every command reads matrices in the text format of ``szgroup.textio`` (the
standard generators of Sz(2^(2m+1)) when ``--in`` is omitted) and writes to
stdout or ``--out``.  Library errors exit with status 1 and print the error
class name; a non-member in ``membership`` exits with status 2.
"""
import argparse
import sys
import time

import numpy as np

from . import linalg as la
from .errors import SzError
from .field import make_field
from .groupcore import DEFAULT_RETRY_MULT, GenSet, make_rng
from .recognize import recognize_conjugate, recognize_standard
from .suzuki import SuzukiCtx
from .textio import format_input, format_result, parse_input

EXIT_ERROR = 1
EXIT_NOT_MEMBER = 2


def parse_m_range(text: str) -> list:
    """'3', '1..4' or '1,2,5'."""
    text = text.strip()
    if ".." in text:
        a, b = text.split("..")
        return list(range(int(a), int(b) + 1))
    return [int(x) for x in text.split(",")]


def _load(args, index: int = 0):
    """(F, matrices) from the index-th --in file, or the standard generators."""
    paths = args.inp or []
    if index < len(paths):
        return parse_input(paths[index])
    if index > 0:
        raise SystemExit(f"missing --in file number {index + 1}")
    F = make_field(args.m)
    return F, SuzukiCtx(F).std_gens


def random_conjugate(F, mats, rng):
    while True:
        x = np.array([[F.random(rng) for _ in range(4)] for _ in range(4)], dtype=np.int64)
        if la.det(F, x):
            break
    xi = la.mat_inv(F, x)
    return [la.conj(F, g, x, xi) for g in mats]


def cmd_recognize(args, out):
    F, mats = _load(args)
    ctx = SuzukiCtx(F)
    if recognize_standard(mats, ctx):
        out.write("STANDARD_COPY\n")
        return 0
    if recognize_conjugate(mats, ctx):
        out.write("CONJUGATE_COPY\n")
        return 0
    out.write("NOT_SUZUKI\n")
    return EXIT_ERROR


def cmd_standardize(args, out):
    from .standardize import conjugate_to_standard

    F, mats = _load(args)
    rng = make_rng(args.seed)
    g = conjugate_to_standard(GenSet(F, mats, retry_mult=args.retry_mult), rng)
    out.write(format_input(F, [g]))
    return 0


def _recognition(F, mats, args, rng):
    from .subgroups import Recognition

    return Recognition(GenSet(F, mats, retry_mult=args.retry_mult), rng)


def cmd_membership(args, out):
    """Last matrix of the input is the element; the others generate the group."""
    F, mats = _load(args)
    if len(mats) == 1:
        gens = SuzukiCtx(F).std_gens
        elt = mats[0]
    elif mats:
        gens, elt = mats[:-1], mats[-1]
    else:
        raise SystemExit("membership needs at least one matrix")
    rng = make_rng(args.seed)
    rec = _recognition(F, gens, args, rng)
    x = rec.to_std(elt)
    if not rec.ctx.is_member(x):
        out.write("NOT_MEMBER\n")
        return EXIT_NOT_MEMBER
    w = rec.H.slp(rec.tracked(x, rng))
    out.write(w.to_text() + "\n")
    return 0


def _subgroup_cmd(args, out, generate, conjugate, key):
    F, mats = _load(args)
    rng = make_rng(args.seed)
    rec = _recognition(F, mats, args, rng)
    if args.inp and len(args.inp) >= 3:
        FY, Y = parse_input(args.inp[1])
        FZ, Z = parse_input(args.inp[2])
        c, w = conjugate(rec, Y, Z, key, rng)
        out.write(format_result(F, [c], [w]))
    else:
        sg = generate(rec, key, rng)
        out.write(format_result(F, sg.elements, sg.slps))
    return 0


def cmd_sylow(args, out):
    from .subgroups import sylow_conjugate, sylow_generate

    if args.p is None:
        raise SystemExit("sylow needs --p")
    return _subgroup_cmd(args, out, sylow_generate, sylow_conjugate, args.p)


def cmd_maximal(args, out):
    from .subgroups import SubgroupClass, maximal_conjugate, maximal_generate

    if args.cls is None:
        raise SystemExit("maximal needs --class")
    return _subgroup_cmd(args, out, maximal_generate, maximal_conjugate,
                         SubgroupClass.parse(args.cls))


def cmd_tensor_flat(args, out):
    from .tensor import build_twisted_tensor, find_flat, flat_position

    F = make_field(args.m)
    twists = tuple(int(x) for x in args.twists.split(","))
    tc = build_twisted_tensor(F, twists)
    rng = make_rng(args.seed)
    n = len(twists)
    S = find_flat(GenSet(F, tc.gens.gens, retry_mult=args.retry_mult), F, n, rng)
    k = flat_position(F, S, n)
    out.write(f"DIM {S.dim}\nPOSITION {k if k is not None else 'NONE'}\n")
    for v in S.basis:
        out.write(",".join(F.fmt(int(x)) for x in v) + "\n")
    return 0


def cmd_perm_rep(args, out):
    from .tensor import cycles, perm_representation

    F, mats = _load(args)
    rng = make_rng(args.seed)
    rep = perm_representation(GenSet(F, mats, retry_mult=args.retry_mult), rng)
    out.write(f"POINTS {len(rep)}\n")
    for perm in rep.perms:
        out.write(cycles(perm) + "\n")
    return 0


def cmd_oracle_enum(args, out):
    """Compare the double coset solver with exhaustive search."""
    from .errors import ConjectureViolation, DegenerateCoordinates
    from .stabmap import brute_force_double_coset, build_magic_poly, solve_double_coset
    from .suzuki import ovoid

    F = make_field(args.m)
    ctx = SuzukiCtx(F)
    rng = make_rng(args.seed)
    pts = ovoid(F)
    G = GenSet(F, ctx.std_gens, retry_mult=args.retry_mult)
    out.write("instance,degree,solutions,match\n")
    bad = 0
    done = 0
    while done < args.reps:
        P = pts[int(rng.integers(len(pts)))]
        Q = pts[int(rng.integers(len(pts)))]
        g = G.random(rng).mat
        try:
            eqn = build_magic_poly(F, P, Q, g)
        except (ConjectureViolation, DegenerateCoordinates):
            continue
        fast = sorted(solve_double_coset(F, eqn))
        slow = sorted(brute_force_double_coset(F, P, Q, g))
        ok = fast == slow
        bad += not ok
        out.write(f"{done},{eqn.degree},{len(slow)},{int(ok)}\n")
        done += 1
    return 0 if bad == 0 else EXIT_ERROR


def field_op_time(F, k: int = 10 ** 6) -> float:
    """Seconds for k multiplications in F."""
    rng = make_rng(0)
    xs = [F.random(rng, nonzero=True) for _ in range(1000)]
    mul = F.mul
    t0 = time.perf_counter()
    acc = 1
    for i in range(k):
        acc = mul(acc, xs[i % 1000])
    return time.perf_counter() - t0


def _bench_one(cmd, F, rng, retry_mult):
    """Time one run of cmd on a fresh random instance."""
    ctx = SuzukiCtx(F)
    if cmd == "standardize":
        from .standardize import conjugate_to_standard

        gs = GenSet(F, random_conjugate(F, ctx.std_gens, rng), retry_mult=retry_mult)
        t0 = time.perf_counter()
        conjugate_to_standard(gs, rng, ctx)
        return time.perf_counter() - t0
    if cmd == "recognize":
        mats = random_conjugate(F, ctx.std_gens, rng)
        t0 = time.perf_counter()
        recognize_conjugate(mats, ctx)
        return time.perf_counter() - t0
    if cmd == "membership":
        from .membership import element_to_slp, preprocess

        gs = GenSet(F, ctx.std_gens, retry_mult=retry_mult)
        data = preprocess(gs, rng, ctx)
        g = GenSet(F, ctx.std_gens).random(rng).mat
        t0 = time.perf_counter()
        element_to_slp(data, gs, g, rng)
        return time.perf_counter() - t0
    raise SystemExit(f"unknown bench command {cmd!r}")


def cmd_bench(args, out):
    ms = parse_m_range(args.m_range or str(args.m))
    rng = make_rng(args.seed)
    out.write("m,t_over_tk\n")
    for m in ms:
        F = make_field(m)
        tk = field_op_time(F)
        ts = [_bench_one(args.cmd, F, rng, args.retry_mult) for _ in range(args.reps)]
        out.write(f"{m},{np.mean(ts) / tk:.6g}\n")
    return 0


COMMANDS = {
    "recognize": cmd_recognize,
    "standardize": cmd_standardize,
    "membership": cmd_membership,
    "sylow": cmd_sylow,
    "maximal": cmd_maximal,
    "tensor-flat": cmd_tensor_flat,
    "perm-rep": cmd_perm_rep,
    "oracle-enum": cmd_oracle_enum,
    "bench": cmd_bench,
}


def build_parser():
    ap = argparse.ArgumentParser(prog="szgroup", description="Algorithms for the Suzuki groups Sz(q).")
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("--m", type=str, default="1",
                    help="field parameter, q = 2^(2m+1); bench also takes ranges like 1..4")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--retry-mult", type=float, default=DEFAULT_RETRY_MULT)
    ap.add_argument("--in", dest="inp", action="append",
                    help="input matrix file; sylow/maximal take group, Y, Z to conjugate")
    ap.add_argument("--out", help="output file (default stdout)")
    ap.add_argument("--p", type=int, help="prime for sylow")
    ap.add_argument("--class", dest="cls", help="maximal class, e.g. B1 or SubfieldSz(3)")
    ap.add_argument("--twists", default="0,1")
    ap.add_argument("--reps", type=int, default=None)
    ap.add_argument("--cmd", default="standardize", help="pipeline timed by bench")
    return ap


def run(argv=None, out=None) -> int:
    args = build_parser().parse_args(argv)
    args.m_range = args.m if args.command == "bench" else None
    if args.command != "bench":
        args.m = int(args.m)
    else:
        args.m = parse_m_range(args.m)[0]
    if args.reps is None:
        args.reps = {"oracle-enum": 200, "bench": 5}.get(args.command, 1)
    fh = open(args.out, "w") if args.out else None
    sink = fh or out or sys.stdout
    try:
        return COMMANDS[args.command](args, sink)
    except SzError as err:
        sys.stderr.write(f"{type(err).__name__}: {err}\n")
        sink.write(type(err).__name__ + "\n")
        return EXIT_ERROR
    finally:
        if fh:
            fh.close()


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
