"""``reciprocity`` command line.

Each subcommand builds a :class:`RunReport` and prints it as text, or as
JSON with ``--json``. Exit status: 0 when every check passes, 1 when one
fails, 2 on unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from . import formats, suites
from .algebra import gf_equal, gf_series_prefix
from .arrangement import (
    characteristic_polynomial,
    flats,
    flats_by_subsets,
    regions_deletion_restriction,
    regions_zaslavsky,
)
from .geometry import (
    ehrhart,
    ehrhart_series,
    ehrhart_series_from_polynomial,
    ehrhart_series_from_triangulation,
    euler_characteristic,
    face_lattice,
    lattice_count,
    normalized_volume,
    normalized_volume_from_triangulation,
    reciprocity_witness,
    regular_triangulation,
    simplex_h_vectors,
    triangulation_mobius_witness,
)
from .geometry._scan import thread_cap
from .graph_coloring import (
    acyclic_orientations,
    chromatic_polynomial,
    coloring_iop,
    coloring_reciprocity_witness,
    compatible_pairs,
    inside_out_identity,
    proper_colorings_brute,
)
from .poset import PosetError
from .ppartition import (
    PPartitionSpec,
    cell_decomposition_witness,
    extension_table,
    ppartition_counts,
    ppartition_gf,
    series_check,
    stanley_reciprocity_witness,
)

EXIT_OK, EXIT_CHECK, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def sha256(data: bytes | str) -> str:
    if isinstance(data, str):
        data = data.encode()
    return hashlib.sha256(data).hexdigest()


@dataclass
class Check:
    name: str
    passed: bool
    witness: object = None

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "witness": self.witness}


@dataclass
class RunReport:
    command: list[str]
    inputs_digest: str
    outputs: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str, witness) -> None:
        """Record a check; ``witness`` is None on success."""
        self.checks.append(Check(name, witness is None, _plain(witness)))

    def outputs_digest(self) -> str:
        return sha256(_canonical(self.outputs))

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "inputs_digest": self.inputs_digest,
            "outputs": self.outputs,
            "outputs_digest": self.outputs_digest(),
            "checks": [c.to_json() for c in self.checks],
            "ok": self.ok,
        }

    @classmethod
    def from_json(cls, data: dict) -> "RunReport":
        r = cls(list(data["command"]), data["inputs_digest"], data["outputs"],
                [Check(c["name"], c["passed"], c["witness"]) for c in data["checks"]])
        if data.get("outputs_digest") not in (None, r.outputs_digest()):
            raise ValueError("outputs digest does not match the outputs")
        return r

    def to_text(self) -> str:
        lines = ["$ reciprocity " + " ".join(self.command), f"inputs sha256 {self.inputs_digest}"]
        for key, val in self.outputs.items():
            if isinstance(val, dict) and "text" in val:
                lines.append(f"{key}: {val['text']}")
            elif isinstance(val, list) and val and isinstance(val[0], dict):
                lines.append(f"{key}:")
                lines += ["  " + ", ".join(f"{k}={v}" for k, v in row.items()) for row in val]
            else:
                lines.append(f"{key}: {val}")
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"[{mark}] {c.name}" + ("" if c.passed else f"  witness: {c.witness}"))
        return "\n".join(lines)


def _plain(x):
    """JSON-safe copy (tuples to lists, Fractions and other objects to str)."""
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    return str(x)


def _poly(p) -> dict:
    return {"coeffs": p.to_json(), "text": str(p)}


def _gf(g) -> dict:
    return {**g.to_json(), "text": str(g)}


def _read(path: str, kind: str):
    try:
        raw = Path(path).read_bytes()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    try:
        obj = formats.PARSERS[kind](raw.decode())
    except UnicodeDecodeError:
        raise InputError(f"{path}: not a text file") from None
    except formats.ParseError as e:
        raise InputError(f"{path}: {e}") from None
    except PosetError as e:
        raise InputError(f"{path}: not a poset: {e}") from None
    except ValueError as e:
        raise InputError(f"{path}: {e}") from None
    return obj, sha256(raw)


def _map(fn: Callable, items: list) -> list:
    """Ordered map, parallel up to RECIPROCITY_THREADS workers."""
    workers = min(thread_cap(), max(1, len(items)))
    if workers == 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items))


# ---------------------------------------------------------------------------
# subcommands


def cmd_arrangement(args) -> RunReport:
    a, digest = _read(args.file, "arrangement")
    rep = RunReport(args.argv, digest)
    h = characteristic_polynomial(a)
    z = regions_zaslavsky(a)
    dr = regions_deletion_restriction(a)
    rep.outputs = {
        "dimension": a.dim,
        "hyperplanes": len(a),
        "characteristic_polynomial": _poly(h),
        "regions_zaslavsky": z,
        "regions_deletion_restriction": dr,
    }
    rep.check("Zaslavsky count equals deletion-restriction count", None if z == dr else {"zaslavsky": z, "deletion_restriction": dr})
    return rep


def cmd_ehrhart(args) -> RunReport:
    p, digest = _read(args.file, "polytope")
    rep = RunReport(args.argv, digest)
    q = ehrhart(p)
    out = {
        "ambient_dimension": p.ambient,
        "dimension": p.dim,
        "vertices": len(p.vertices),
        "ehrhart": {**q.to_json(), "text": str(q)},
        "counts": {str(t): lattice_count(p, t) for t in range(0, 6)},
    }
    if args.series or args.triangulate:
        if not p.is_lattice():
            raise InputError("--series and --triangulate need a lattice polytope")
    if args.series:
        out["series"] = _gf(ehrhart_series_from_polynomial(p))
    if args.reciprocity:
        rep.check(f"ehr(-t) = (-1)^{p.dim} ehr_interior(t), t <= {args.horizon}",
                  _t_witness(reciprocity_witness(p, args.horizon)))
    if args.triangulate:
        tri = regular_triangulation(p, seed=args.seed)
        vols = tri.normalized_volumes()
        out["triangulation"] = {
            "seed": args.seed,
            "lifting": list(tri.lifting),
            "attempts": tri.attempts,
            "simplices": [sorted(s) for s in tri.simplices],
            "normalized_volumes": [str(v) for v in vols],
            "text": f"{len(tri.simplices)} simplices, normalized volume {sum(vols)}",
        }
        rep.check("triangulation Mobius closed form", triangulation_mobius_witness(tri))
        if p.dim == p.ambient:
            # projected determinants are lattice-normalized only for full-dimensional P
            total, expected = normalized_volume_from_triangulation(tri), normalized_volume(p)
            rep.check("triangulation volumes add up", None if total == expected else {"sum": total, "volume": expected})
        a, b = ehrhart_series_from_polynomial(p), ehrhart_series_from_triangulation(tri)
        rep.check("series by interpolation equals series by open simplices",
                  None if gf_equal(a, b) else {"interpolation": str(a), "triangulation": str(b)})
    rep.outputs = out
    return rep


def _t_witness(t):
    return None if t is None else {"t": t}


def cmd_chromatic(args) -> RunReport:
    g, digest = _read(args.file, "graph")
    rep = RunReport(args.argv, digest)
    c = chromatic_polynomial(g)
    aos = acyclic_orientations(g)
    out = {
        "nodes": g.n,
        "edges": [list(e) for e in g.edges],
        "chromatic_polynomial": _poly(c),
        "acyclic_orientations": len(aos),
    }
    if not g.has_loop:
        regions = regions_zaslavsky(g.arrangement())
        out["graphical_arrangement_regions"] = regions
        rep.check("acyclic orientations equal regions of the graphical arrangement",
                  None if regions == len(aos) else {"orientations": len(aos), "regions": regions})
    sign = (-1) ** g.n
    pairs = {}
    for t in args.pairs or []:
        got = compatible_pairs(g, t)
        pairs[str(t)] = got
        rep.check(f"compatible pairs at t={t} equal (-1)^n c(-t)",
                  None if got == sign * c(-t) else {"t": t, "pairs": got, "signed_value": sign * c(-t)})
    if pairs:
        out["compatible_pairs"] = pairs
    if args.iop:
        if g.has_loop:
            raise InputError("--iop needs a loopless graph")
        rep.check(f"inside-out cross-check, t <= {args.horizon}", coloring_reciprocity_witness(g, args.horizon))
        iop = coloring_iop(g)
        rep.check("I(-t) = (-1)^dim O(t) after interpolation",
                  None if inside_out_identity(iop, args.horizon) else {"horizon": args.horizon})
        out["inside_out"] = {
            str(t): dict(zip(("I_interior", "O"), (iop.counts(t, interior=True)[0], iop.counts(t)[1])))
            for t in range(1, args.horizon + 1)
        }
    rep.outputs = out
    return rep


def cmd_ppartition(args) -> RunReport:
    p, digest = _read(args.file, "poset")
    rep = RunReport(args.argv, digest)
    weak = PPartitionSpec.of(p, False)
    strict = PPartitionSpec.of(p, True)
    chosen = strict if args.strict else weak
    table = [
        {
            "sigma": list(weak.permutation_to_original(row.sigma)),
            "sigma_natural": list(row.sigma),
            "des": sorted(row.stats.des),
            "maj": row.stats.maj,
            "asc": sorted(row.stats.asc),
            "amaj": row.stats.amaj,
        }
        for row in extension_table(weak.poset)
    ]
    counts = ppartition_counts(chosen, args.terms)
    rep.outputs = {
        "size": p.n,
        "relabeling": list(weak.relabeling),
        "weak_gf": _gf(ppartition_gf(weak)),
        "strict_gf": _gf(ppartition_gf(strict)),
        "counts": {"strict" if args.strict else "weak": counts},
        "linear_extensions": table,
    }
    prefix = gf_series_prefix(ppartition_gf(chosen), args.terms)
    rep.check(f"series prefix equals enumeration, t <= {args.terms}",
              None if prefix == counts else {"t": next(t for t, (a, b) in enumerate(zip(prefix, counts)) if a != b)})
    rep.check("linear-extension cells tile the P-partitions", cell_decomposition_witness(chosen, 6))
    if args.reciprocity:
        rep.check("P(1/z) = (-z)^d P°(z)", stanley_reciprocity_witness(weak.poset))
    return rep


# ---------------------------------------------------------------------------
# verify


def _first(checks):
    return next((w for w in checks if w is not None), None)


def _verify_zaslavsky(rng, count):
    items = [suites.random_arr(rng) for _ in range(count)]

    def one(a):
        z, dr = regions_zaslavsky(a), regions_deletion_restriction(a)
        if z != dr:
            return {"arrangement": a.__repr__(), "zaslavsky": z, "deletion_restriction": dr}
        if set(flats(a).flats) != flats_by_subsets(a):
            return {"arrangement": a.__repr__(), "flats": "closure and subset routes differ"}
        return None

    return [("Zaslavsky count equals deletion-restriction count", items, one)]


def _verify_ehrhart(rng, count):
    polys = [suites.random_lattice_polytope(rng) for _ in range(count)]
    simplices = [suites.random_lattice_simplex(rng) for _ in range(count)]

    def recip(p):
        t = reciprocity_witness(p, 8)
        return None if t is None else {"polytope": repr(p), "t": t}

    def hvec(s):
        h, ht = simplex_h_vectors(s)
        return None if ht == h.reversed(s.dim + 1) else {"simplex": repr(s), "h": str(h), "h_tilde": str(ht)}

    def series(p):
        if p.dim == 0:
            return None
        try:
            ehrhart_series(p, method="both")
        except ArithmeticError as e:
            return {"polytope": repr(p), "error": str(e)}
        return None

    return [
        ("Ehrhart-Macdonald reciprocity, t <= 8", polys, recip),
        ("h_tilde(z) = z^(d+1) h(1/z)", simplices, hvec),
        ("series by interpolation equals series by triangulation", polys, series),
    ]


def _verify_chromatic(rng, count):
    graphs = [suites.random_graph(rng) for _ in range(count)]

    def one(g):
        c = chromatic_polynomial(g)
        for t in range(1, 5):
            if proper_colorings_brute(g, t) != c(t):
                return {"graph": repr(g), "t": t, "brute": proper_colorings_brute(g, t), "c(t)": str(c(t))}
            if compatible_pairs(g, t) != (-1) ** g.n * c(-t):
                return {"graph": repr(g), "t": t, "pairs": compatible_pairs(g, t)}
        if len(acyclic_orientations(g)) != regions_zaslavsky(g.arrangement()):
            return {"graph": repr(g), "orientations": len(acyclic_orientations(g))}
        return None

    return [("Stanley coloring reciprocity, t <= 4", graphs, one)]


def _verify_ppartition(rng, count):
    posets = [suites.random_poset(rng) for _ in range(count)]

    def one(p):
        w = stanley_reciprocity_witness(p)
        if w is not None:
            return {"poset": repr(p), "reason": w}
        for strict in (False, True):
            spec = PPartitionSpec(p, strict)
            cw = cell_decomposition_witness(spec, 5)
            if cw is not None:
                return {"poset": repr(p), "strict": strict, "point": cw}
            if not series_check(spec):
                return {"poset": repr(p), "strict": strict, "series": "prefix differs from enumeration"}
        return None

    return [("Stanley P-partition reciprocity", posets, one)]


def _verify_euler(rng, count):
    polys = [suites.random_lattice_polytope(rng) for _ in range(count)]

    def one(p):
        chi = euler_characteristic(p)
        if chi != 1:
            return {"polytope": repr(p), "f(-1)": chi}
        w = face_lattice(p).mobius_witness()
        return None if w is None else {"polytope": repr(p), "pair": w}

    return [("Euler-Poincare f(-1) = 1 and face-lattice Mobius", polys, one)]


SUITES = {
    "zaslavsky": _verify_zaslavsky,
    "ehrhart": _verify_ehrhart,
    "chromatic": _verify_chromatic,
    "ppartition": _verify_ppartition,
    "euler": _verify_euler,
}


def cmd_verify(args) -> RunReport:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    count = suites.SIZES[args.size]
    rep = RunReport(args.argv, sha256(_canonical({"suite": args.suite, "seed": args.seed, "size": args.size})))
    instances = {}
    for name in names:
        rng = random.Random(f"{args.seed}:{name}")
        for label, items, fn in SUITES[name](rng, count):
            results = _map(fn, items)
            instances[f"{name}: {label}"] = len(items)
            rep.check(f"{name}: {label} ({len(items)} instances)", _first(results))
    rep.outputs = {"suite": args.suite, "seed": args.seed, "size": args.size, "instances": instances}
    return rep


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="reciprocity", description="Combinatorial reciprocity computations and checks.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the run report as JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("arrangement", parents=[common], help="characteristic polynomial and region counts")
    p.add_argument("file")
    p.set_defaults(func=cmd_arrangement)

    p = sub.add_parser("ehrhart", parents=[common], help="Ehrhart quasipolynomial of a polytope")
    p.add_argument("file")
    p.add_argument("--series", action="store_true", help="Ehrhart series (lattice polytopes)")
    p.add_argument("--reciprocity", action="store_true", help="check Ehrhart-Macdonald reciprocity")
    p.add_argument("--horizon", type=int, default=8, help="largest t for --reciprocity (default 8)")
    p.add_argument("--triangulate", action="store_true", help="regular triangulation summary")
    p.add_argument("--seed", type=int, default=0, help="lifting seed for --triangulate")
    p.set_defaults(func=cmd_ehrhart)

    p = sub.add_parser("chromatic", parents=[common], help="chromatic polynomial and coloring reciprocity")
    p.add_argument("file")
    p.add_argument("--pairs", type=int, action="append", metavar="T", help="count compatible pairs at T (repeatable)")
    p.add_argument("--iop", action="store_true", help="inside-out polytope cross-check")
    p.add_argument("--horizon", type=int, default=4, help="largest t for --iop (default 4)")
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("ppartition", parents=[common], help="P-partition generating functions")
    p.add_argument("file")
    p.add_argument("--strict", action="store_true", help="count strict P-partitions")
    p.add_argument("--reciprocity", action="store_true", help="check Stanley reciprocity")
    p.add_argument("--terms", type=int, default=12, help="series terms to enumerate (default 12)")
    p.set_defaults(func=cmd_ppartition)

    p = sub.add_parser("verify", parents=[common], help="run seeded property suites")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--size", choices=list(suites.SIZES), default="small")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    args.argv = argv
    for name in ("horizon", "terms"):
        if getattr(args, name, 1) < 0:
            print(f"error: --{name} must be nonnegative", file=sys.stderr)
            return EXIT_INPUT
    if any(t < 0 for t in getattr(args, "pairs", None) or []):
        print("error: --pairs needs a nonnegative t", file=sys.stderr)
        return EXIT_INPUT
    try:
        rep = args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    print(json.dumps(rep.to_json(), indent=2) if args.json else rep.to_text())
    return EXIT_OK if rep.ok else EXIT_CHECK


if __name__ == "__main__":
    sys.exit(main())
