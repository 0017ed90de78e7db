"""Command-line entry point: build, filter, compare, verify, export.

Output format is chosen by the file extension (.dot or .json); stdout
carries a one-line human summary.  Exit codes: 0 pass, 1 failing check,
2 usage or construction error.
"""

import argparse
import sys
from dataclasses import dataclass

from . import experiments
from .alcove import alcove_crystal
from .cartan import parse_type
from .crystals import demazure_filter
from .errors import KRCrystalError
from .weyl import build_qbg, DEFAULT_WEYL_CAP

DEFAULT_NODE_CAP = 10 ** 6

CHECK_NAMES = ("reduction", "bmin", "qsystem", "qchar", "alcove", "figure")


@dataclass
class TensorSpec:
    """A Cartan type plus an ordered factor list, leftmost factor first."""
    type_name: str
    factors: list

    @classmethod
    def parse(cls, type_name, factors_text):
        factors = []
        if factors_text:
            for part in factors_text.split(":"):
                r, s = part.split(",")
                r, s = int(r), int(s)
                if s < 0:
                    raise ValueError("factor width must be >= 0")
                factors.append((r, s))
        return cls(type_name, factors)

    @property
    def cartan(self):
        return parse_type(self.type_name)


class UsageError(Exception):
    pass


def _load_config(path):
    cfg = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise UsageError("bad config line: %r" % line)
            key, value = line.split("=", 1)
            cfg[key.strip().replace("-", "_")] = value.strip()
    return cfg


def _resolve(args):
    """Fill unset options from --config, then from the documented defaults."""
    cfg = _load_config(args.config) if getattr(args, "config", None) else {}
    for key, value in cfg.items():
        if getattr(args, key, "you-shall-not-set") is None:
            if key in ("level", "threads", "node_cap", "weyl_cap", "a", "m"):
                value = int(value)
            setattr(args, key, value)
    if getattr(args, "level", None) is None:
        args.level = 1
    if getattr(args, "node_cap", None) is None:
        args.node_cap = DEFAULT_NODE_CAP
    if getattr(args, "weyl_cap", None) is None:
        args.weyl_cap = DEFAULT_WEYL_CAP
    if getattr(args, "threads", None) is None:
        import os
        args.threads = os.cpu_count() or 1
    return args


def _write_graph(graph, path, chain=None):
    if path.endswith(".dot"):
        text = graph.to_dot()
    elif path.endswith(".json"):
        if chain is not None:
            text = _alcove_json(graph, chain)
        else:
            text = graph.to_json()
    else:
        raise UsageError("output must end in .dot or .json: %r" % path)
    with open(path, "w") as fh:
        fh.write(text)


def _alcove_json(graph, chain):
    import json
    data = json.loads(graph.to_json())
    data["chain"] = [list(beta) for beta in chain.roots]
    for node in data["nodes"]:
        node["J"] = list(graph.nodes[node["id"]])
    return json.dumps(data, separators=(",", ":")) + "\n"


def _parse_lambda(text, cartan):
    coords = tuple(int(x) for x in text.split(","))
    if len(coords) != cartan.rank:
        raise UsageError("lambda needs %d coordinates" % cartan.rank)
    return coords


# ---------------------------------------------------------------------------
# subcommands


def cmd_build(args):
    spec = TensorSpec.parse(args.type, args.factors)
    cartan = spec.cartan
    view = args.view or "none"
    if view == "none":
        graph = experiments.build_tensor(cartan, spec.factors,
                                         args.node_cap, args.threads)
    else:
        mode = "head" if view == "demazure" else "tail"
        graph = experiments.build_filtered(cartan, spec.factors, args.level,
                                           mode, args.node_cap, args.threads)
    if not args.out:
        raise UsageError("build needs --out")
    _write_graph(graph, args.out)
    print("wrote %s: %d nodes, %d edges" %
          (args.out, len(graph), graph.edge_count))
    return 0


def cmd_check(args):
    name = args.name
    if name not in CHECK_NAMES:
        raise UsageError("unknown check %r (one of %s)"
                         % (name, ", ".join(CHECK_NAMES)))
    if name == "figure":
        report = experiments.check_figure(args.node_cap, args.threads)
    elif name == "reduction":
        spec = TensorSpec.parse(args.type, _require(args, "factors"))
        spec2 = TensorSpec.parse(args.type, _require(args, "factors2"))
        report = experiments.check_reduction(
            spec.cartan, spec.factors, spec2.factors, args.level,
            args.mode or "head", args.node_cap, args.threads)
    elif name == "bmin":
        spec = TensorSpec.parse(args.type, _require(args, "factors"))
        report = experiments.check_bmin(spec.cartan, spec.factors,
                                        args.level, args.node_cap,
                                        args.threads)
    elif name == "qsystem":
        cartan = parse_type(_require(args, "type"))
        report = experiments.check_qsystem_typeA(
            cartan.rank, _require(args, "a"), _require(args, "m"),
            args.level, args.node_cap, args.threads)
    elif name == "qchar":
        cartan = parse_type(_require(args, "type"))
        report = experiments.check_character_qsystem(
            cartan.rank, _require(args, "a"), _require(args, "m"))
    else:  # alcove
        cartan = parse_type(_require(args, "type"))
        lam = _parse_lambda(_require(args, "lam"), cartan)
        report = experiments.check_alcove_correspondence(
            cartan, lam, args.level, args.node_cap, args.threads)

    print("%s %s: %s" % (report.name, report.parameters, report.status))
    if args.out:
        text = experiments.to_junit([report]) if args.junit \
            else report.to_json()
        with open(args.out, "w") as fh:
            fh.write(text)
    return 0 if report.passed else 1


def _require(args, key):
    value = getattr(args, key, None)
    if value is None:
        raise UsageError("check %r needs --%s" % (args.name,
                                                  key.replace("lam", "lambda")))
    return value


def cmd_qbg(args):
    cartan = parse_type(_require(args, "type"))
    qbg = build_qbg(cartan, args.weyl_cap)
    if not args.out:
        raise UsageError("qbg needs --out")
    with open(args.out, "w") as fh:
        fh.write(qbg.to_dot())
    print("wrote %s: %d vertices, %d edges"
          % (args.out, qbg.vertex_count, qbg.edge_count))
    return 0


def cmd_alcove(args):
    cartan = parse_type(_require(args, "type"))
    lam = _parse_lambda(_require(args, "lam"), cartan)
    graph = alcove_crystal(cartan, lam, args.level, node_cap=args.node_cap)
    if not args.out:
        raise UsageError("alcove needs --out")
    _write_graph(graph, args.out, chain=graph.chain)
    print("wrote %s: %d admissible subsets, %d edges"
          % (args.out, len(graph), graph.edge_count))
    return 0


# ---------------------------------------------------------------------------


def _add_common(sub):
    sub.add_argument("--config", help="key=value file preloading defaults")
    sub.add_argument("--threads", type=int, default=None,
                     help="worker pool size for independent builds "
                          "(default: serial; outputs identical either way)")
    sub.add_argument("--node-cap", dest="node_cap", type=int, default=None,
                     help="exploration node cap (default 10^6)")
    sub.add_argument("--weyl-cap", dest="weyl_cap", type=int, default=None,
                     help="Weyl group enumeration cap (default 10^5)")


def make_parser():
    parser = argparse.ArgumentParser(
        prog="krcrystals",
        description="Build, filter, compare, and export KR-crystal and "
                    "quantum-alcove-model data.")
    subs = parser.add_subparsers(dest="command", required=True)

    b = subs.add_parser("build", help="build a (filtered) tensor product")
    b.add_argument("--type", required=True, help='Cartan type, e.g. "C2~"')
    b.add_argument("--factors", default="",
                   help="colon-separated r,s pairs, leftmost factor first")
    b.add_argument("--level", type=int, default=None)
    b.add_argument("--view", choices=("none", "demazure", "dual"),
                   default="none")
    b.add_argument("--out", required=True, help=".dot or .json output path")
    _add_common(b)
    b.set_defaults(func=cmd_build)

    c = subs.add_parser("check", help="run a named verification")
    c.add_argument("name", help="one of " + ", ".join(CHECK_NAMES))
    c.add_argument("--type")
    c.add_argument("--factors")
    c.add_argument("--factors2")
    c.add_argument("--level", type=int, default=None)
    c.add_argument("--mode", choices=("head", "tail"))
    c.add_argument("--a", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--lambda", dest="lam")
    c.add_argument("--out", help="report path (.json, or XML with --junit)")
    c.add_argument("--junit", action="store_true",
                   help="emit a JUnit-style XML report")
    _add_common(c)
    c.set_defaults(func=cmd_check)

    q = subs.add_parser("qbg", help="export the quantum Bruhat graph")
    q.add_argument("--type", required=True)
    q.add_argument("--out", required=True, help=".dot output path")
    _add_common(q)
    q.set_defaults(func=cmd_qbg)

    a = subs.add_parser("alcove", help="export an alcove-model crystal")
    a.add_argument("--type", required=True)
    a.add_argument("--lambda", dest="lam", required=True,
                   help="comma-separated fundamental-weight coordinates")
    a.add_argument("--level", type=int, default=None)
    a.add_argument("--out", required=True, help=".json or .dot output path")
    _add_common(a)
    a.set_defaults(func=cmd_alcove)

    return parser


def main(argv=None):
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
        args = _resolve(args)
        return args.func(args)
    except (UsageError, KRCrystalError, ValueError, OSError) as err:
        print("error: %s" % err, file=sys.stderr)
        return 2


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
