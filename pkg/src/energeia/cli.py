"""Command line front end.

Exit codes: 0 success (or all checks pass), 1 some verification failed,
2 usage, parse or I/O error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import energy as en
from . import io
from . import matrices as mx
from . import spectral as sp
from .complex import Geometry, complete, random_complex, random_sets_of_sets, whitney
from .errors import EnergeiaError, NotSelfAdjoint
from .hodge import hodge_betti, mckean_singer_check
from .rings import (COMPLEX, RATIONAL, EnergyAssignment, constant, random_assignment,
                    sample_units, symbolic_generators, topological)
from .rings.assignment import RINGS
from .verify import THEOREMS, verify

SAMPLERS = ("pm1", "u1", "u1_exact", "unit_quaternion", "unit_quaternion_exact", "omega", "ones",
            "symbolic", "free", "random")


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out and out != "-":
        io.write_text(out, text)
    else:
        sys.stdout.write(text)


def _read_geometry(path: str) -> Geometry:
    return io.geometry_from_json(io.load_json(path), path)


def _parse_edges(text: str) -> list[tuple[int, int]]:
    edges = []
    for item in text.split(","):
        a, _, b = item.strip().partition("-")
        if not b:
            raise UsageError(f"edge {item!r} must look like 1-2")
        edges.append((int(a), int(b)))
    return edges


def sample(g: Geometry, name: str, seed: int, names=None) -> EnergyAssignment:
    if name in ("pm1", "u1", "u1_exact", "unit_quaternion", "unit_quaternion_exact"):
        return sample_units(g, name, seed)
    if name == "omega":
        return topological(g)
    if name == "ones":
        return constant(g, RATIONAL, 1)
    if name == "symbolic":
        return symbolic_generators(g, commutative=True, names=names)
    if name == "free":
        return symbolic_generators(g, commutative=False, names=names)
    if name.startswith("random"):
        _, _, tag = name.partition(":")
        ring = RINGS.get(tag or "rational")
        if ring is None:
            raise UsageError(f"no random sampler for ring {tag!r}")
        return random_assignment(g, ring, seed, nonzero=True)
    raise UsageError(f"unknown sampler {name!r}; choose from {', '.join(SAMPLERS)}")


def _energized(args) -> EnergyAssignment:
    g = _read_geometry(args.input)
    names = args.names.split(",") if getattr(args, "names", None) else None
    if getattr(args, "h", None):
        return io.energy_from_json(io.load_json(args.h), g, args.h)
    if getattr(args, "sampler", None):
        return sample(g, args.sampler, args.seed, names)
    raise UsageError("give an energy file with --h or a sampler with --sampler")


# subcommands -----------------------------------------------------------------

def cmd_gen(args) -> int:
    if args.kind == "complete":
        g = complete(args.n)
    elif args.kind == "random":
        g = random_complex(args.vertices, args.density, args.seed)
    elif args.kind == "whitney":
        g = whitney(_parse_edges(args.edges))
    elif args.kind == "sets":
        g = random_sets_of_sets(args.vertices, args.count, args.seed)
    else:
        raise UsageError(f"unknown kind {args.kind!r}")
    _emit(io.dumps(io.geometry_to_json(g)), args.out)
    return 0


def cmd_energize(args) -> int:
    e = _energized(args)
    _emit(io.dumps(io.energy_to_json(e)), args.out)
    return 0


MATRIX_BUILDERS = {
    "L": mx.build_L,
    "g": mx.build_g,
    "S": mx.checkerboard,
    "gstarL": mx.green_star_product,
}


def cmd_matrix(args) -> int:
    e = _energized(args)
    names = [n.strip() for n in args.emit.split(",") if n.strip()]
    for n in names:
        if n not in MATRIX_BUILDERS:
            raise UsageError(f"unknown matrix {n!r}; choose from {', '.join(MATRIX_BUILDERS)}")
    mats = {n: MATRIX_BUILDERS[n](e) for n in names}
    if args.out_dir:
        for n, m in mats.items():
            if args.format == "csv":
                io.write_text(Path(args.out_dir) / f"{n}.csv", io.matrix_to_csv(m))
            else:
                io.write_text(Path(args.out_dir) / f"{n}.json", io.dumps(io.matrix_to_json(n, m)))
        return 0
    if args.format == "csv":
        text = "".join(f"# {n}\n{io.matrix_to_csv(m)}" for n, m in mats.items())
    else:
        text = io.dumps({"schema": io.SCHEMA,
                         "matrices": [io.matrix_to_json(n, m) for n, m in mats.items()]})
    _emit(text, args.out)
    return 0


def cmd_energy(args) -> int:
    e = _energized(args)
    fmt = e.ring.format
    report: dict = {"schema": io.SCHEMA, "ring": e.ring.tag}
    for item in (s.strip() for s in args.report.split(",")):
        if item == "chi":
            report["chi"] = fmt(en.chi(e))
        elif item == "omega":
            report["omega"] = fmt(en.omega_quadratic(e))
        elif item == "omega3":
            report["omega3"] = fmt(en.omega_cubic(e))
        elif item == "curvature":
            report["curvature"] = {io.simplex_key(x): fmt(k)
                                   for x, k in zip(e.geometry, en.curvatures(e))}
        elif item == "fredholm":
            report["fredholm"] = fmt(mx.fredholm_energy(e).value)
        elif item:
            raise UsageError(f"unknown report item {item!r}")
    _emit(io.dumps(report), args.out)
    return 0


def _parse_complex(text: str) -> complex:
    return complex(text.strip().replace(" ", "").replace("i", "j"))


def _spectrum_json(rep: sp.SpectralReport) -> dict:
    return {"eigenvalues": [float(v) for v in rep.eigenvalues],
            "positive": rep.positive_count, "negative": rep.negative_count, "zero": rep.zero_count}


def cmd_spectral(args) -> int:
    e = _energized(args)
    if e.ring.tag not in ("rational", "gaussian", "complex64"):
        raise UsageError(f"spectral analysis needs a real or complex ring, not {e.ring.tag}")
    s_values = [_parse_complex(s) for s in args.zeta.split(",")] if args.zeta else []
    rep = sp.zeta(e, s_values)
    doc: dict = {"schema": io.SCHEMA, "ring": e.ring.tag}
    try:
        doc["L"] = _spectrum_json(sp.eigen_self_adjoint(mx.build_L(e)))
    except NotSelfAdjoint:
        pass
    doc["LstarL"] = _spectrum_json(rep)
    doc["zeta"] = [{"s": io.complex_to_json(s), "value": io.complex_to_json(z)} for s, z in rep.zeta]
    if e.geometry.is_complex and len(e.geometry):
        hodge = hodge_betti(e.geometry)
        doc["hodge"] = {"betti": hodge.betti, "chi_top": int(sum(e.geometry.omegas)),
                        "mckean_singer": {str(t): mckean_singer_check(e.geometry, t)[0]
                                          for t in (0.5, 2.0)}}
    out_dir = Path(args.out).parent if args.out and args.out != "-" else None
    if args.flow_steps:
        traj = sp.nonlinear_flow(e, args.flow_steps)
        doc["flow"] = [[io.complex_to_json(v) for v in step.values] for step in traj]
        if out_dir is not None:
            io.write_text(out_dir / "flow.csv", io.flow_to_csv(traj))
    if s_values and out_dir is not None:
        io.write_text(out_dir / "zeta.csv", io.zeta_to_csv(rep.zeta))
    _emit(io.dumps(doc), args.out)
    return 0


def cmd_verify(args) -> int:
    e = _energized(args)
    suite = [s.strip() for s in args.suite.split(",") if s.strip()] if args.suite else list(THEOREMS)
    unknown = [s for s in suite if s not in THEOREMS]
    if not suite or unknown:
        raise UsageError(f"unknown theorem ids {unknown}; choose from {', '.join(THEOREMS)}")
    outcomes = verify(e, suite, threads=args.threads)
    doc = {"schema": io.SCHEMA, "ring": e.ring.tag, "n": len(e.geometry),
           "is_complex": e.geometry.is_complex, "verdicts": [o.to_json() for o in outcomes]}
    if args.out:
        io.write_text(args.out, io.dumps(doc))
    for o in outcomes:
        line = f"{o.theorem:16s} {o.status}"
        if o.witness:
            line += f"  {o.witness}"
        elif o.reason and o.status != "pass":
            line += f"  ({o.reason})"
        print(line)
    return 1 if any(o.status == "fail" for o in outcomes) else 0


# parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", help="output file (default stdout)")

    energized = argparse.ArgumentParser(add_help=False)
    energized.add_argument("--in", dest="input", required=True, help="geometry JSON")
    energized.add_argument("--h", help="energy JSON")
    energized.add_argument("--sampler", help=f"one of {', '.join(SAMPLERS)} (random:<ring> allowed)")
    energized.add_argument("--names", help="comma separated variable names for symbolic samplers")

    p = argparse.ArgumentParser(prog="energeia", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate a geometry")
    g.add_argument("--kind", choices=("complete", "random", "whitney", "sets"), required=True)
    g.add_argument("--n", type=int, default=2)
    g.add_argument("--vertices", type=int, default=4)
    g.add_argument("--density", type=float, default=0.5)
    g.add_argument("--edges", default="")
    g.add_argument("--count", type=int, default=5)
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("energize", parents=[common, energized], help="attach an energy")
    s.set_defaults(func=cmd_energize)

    m = sub.add_parser("matrix", parents=[common, energized], help="emit L, g, S, g*L")
    m.add_argument("--emit", default="L,g")
    m.add_argument("--out-dir")
    m.set_defaults(func=cmd_matrix)

    en_p = sub.add_parser("energy", parents=[common, energized], help="scalar energies")
    en_p.add_argument("--report", default="chi,omega,omega3,curvature")
    en_p.set_defaults(func=cmd_energy)

    sp_p = sub.add_parser("spectral", parents=[common, energized], help="spectra, zeta, flows")
    sp_p.add_argument("--zeta", default="")
    sp_p.add_argument("--flow-steps", type=int, default=0)
    sp_p.set_defaults(func=cmd_spectral)

    v = sub.add_parser("verify", parents=[common, energized], help="run theorem checks")
    v.add_argument("--suite", default="")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (UsageError, io.FormatError, EnergeiaError) as exc:
        print(f"energeia: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
