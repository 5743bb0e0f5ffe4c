"""Command-line front end.

Subcommands: ``complexity``, ``nullmodel``, ``generate`` and ``enumerate``.
Exit codes: 0 success, 2 usage, 3 unreadable input, 4 resource limits or an
infeasible request.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .automorphism import ResourceError
from .complexity import complexity, labelled_complexity, medium_articulation, weighted_complexity
from .enumeration import EXHAUSTIVE_MAX_ORDER, enumerate_complexities
from .generators import WEIGHT_MODELS, erdos_renyi, preferential_attachment
from .io import (
    LabelTable,
    ParseError,
    Report,
    matrix_to_foodweb,
    parse_edgelist,
    parse_interaction_matrix,
    parse_pajek,
    write_edgelist,
    write_pajek,
    write_report,
)
from .network import Network, NetworkError
from .neutral import EnsembleError, ensemble_stats, is_weighted, normal_weight_null, significance

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_RESOURCE = 0, 2, 3, 4


@dataclass
class RunConfig:
    subcommand: str
    path: str | None = None
    input_format: str = "auto"
    directed: bool = False
    self_loops: bool = False
    samples: int = 100
    seed: int = 0
    workers: int = 1
    weighted: bool = False
    labelled: bool = False
    ceil: bool = False
    ma_base: str = "2"
    output_format: str = "json"
    extra: dict = field(default_factory=dict)

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        known = {k: v for k, v in vars(args).items() if k in cls.__dataclass_fields__ and k != "extra"}
        extra = {k: v for k, v in vars(args).items() if k not in cls.__dataclass_fields__}
        return cls(**known, extra=extra)


class UsageError(Exception):
    pass


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def _read_input(cfg: RunConfig) -> tuple[Network, LabelTable]:
    if cfg.path == "-":
        data = sys.stdin.buffer.read()
    else:
        try:
            data = Path(cfg.path).read_bytes()
        except OSError as exc:
            raise ParseError(f"cannot read {cfg.path}: {exc.strerror}") from None
    fmt = cfg.input_format
    if fmt == "auto":
        suffix = Path(cfg.path).suffix.lower() if cfg.path != "-" else ""
        head = data.lstrip()[:1]
        if suffix == ".net" or head == b"*":
            fmt = "pajek"
        elif suffix in (".mat", ".beta"):
            fmt = "matrix"
        else:
            fmt = "edgelist"
    if fmt == "pajek":
        net, labels = parse_pajek(data)
    elif fmt == "matrix":
        net = matrix_to_foodweb(parse_interaction_matrix(data))
        labels = LabelTable.default(net.n)
    else:
        net, labels = parse_edgelist(data, cfg.directed)
    if cfg.self_loops and not net.allow_self_loops:
        net = Network(net.n, net.directed, True).add_links(net.links())
    return net, labels


def _use_weighted(cfg: RunConfig, net: Network) -> bool:
    return cfg.weighted or is_weighted(net)


def cmd_complexity(cfg: RunConfig) -> bytes:
    net, _ = _read_input(cfg)
    report = Report()
    if cfg.labelled:
        rep = labelled_complexity(net)
        report.update(rep, complexity=rep.total_bits, weighted=False)
    else:
        rep = complexity(net, cfg.ceil)
        weighted = _use_weighted(cfg, net) and net.n_links > 0
        value = weighted_complexity(net, cfg.ceil) if weighted else rep.total_bits
        report.update(rep, complexity=value, weighted=weighted)
    if net.n_links:
        base = math.e if cfg.ma_base == "e" else 2.0
        report.update(medium_articulation(net, base), ma_base=cfg.ma_base)
    return write_report(report, cfg.output_format)


def cmd_nullmodel(cfg: RunConfig) -> bytes:
    if cfg.samples < 2:
        raise UsageError("--samples must be at least 2")
    net, _ = _read_input(cfg)
    weighted = _use_weighted(cfg, net)
    stats = ensemble_stats(net, cfg.samples, cfg.seed, weighted, cfg.ceil, cfg.workers)
    sig = significance(net, stats, weighted, cfg.ceil)
    report = Report().update(nodes=net.n, links=net.n_links)
    report.update(sig, weighted=weighted, seed=cfg.seed, ceil_variant=cfg.ceil)
    report.update(stats)
    return write_report(report, cfg.output_format)


def cmd_generate(cfg: RunConfig) -> bytes:
    opts = cfg.extra
    model = opts["model"]
    if model == "er":
        if opts["l"] is None:
            raise UsageError("er needs --l")
        net = erdos_renyi(opts["n"], opts["l"], cfg.directed, opts["weights"] or "unit", cfg.seed)
    elif model == "pa":
        if opts["m"] is None:
            raise UsageError("pa needs --m")
        net = preferential_attachment(
            opts["n"],
            opts["m"],
            directed=not opts["undirected"],
            weights=opts["weights"] or "uniform01",
            seed=cfg.seed,
            seed_nodes=opts["seed_nodes"],
            seed_clique=opts["seed_clique"],
            duplicates=opts["duplicates"],
        )
    else:
        if opts["l"] is None:
            raise UsageError("normal-null needs --l")
        net = normal_weight_null(opts["n"], opts["l"], cfg.seed)
    return write_pajek(net) if cfg.output_format == "pajek" else write_edgelist(net)


def cmd_enumerate(cfg: RunConfig) -> bytes:
    order, sample = cfg.extra["order"], cfg.extra["sample"]
    if order < 1:
        raise UsageError("--order must be positive")
    if order > EXHAUSTIVE_MAX_ORDER and sample is None:
        raise UsageError(f"order {order} needs --sample (exhaustive only up to {EXHAUSTIVE_MAX_ORDER})")
    lines = [f"{l}\t{c!r}" for _, l, c in enumerate_complexities(order, sample, cfg.seed, cfg.ceil)]
    return ("\n".join(lines) + "\n").encode()


COMMANDS = {
    "complexity": cmd_complexity,
    "nullmodel": cmd_nullmodel,
    "generate": cmd_generate,
    "enumerate": cmd_enumerate,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="netcomplexity", description="Information-content complexity of networks.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def input_args(p):
        p.add_argument("path", help="network file, or - for stdin")
        p.add_argument("--input-format", choices=["auto", "pajek", "edgelist", "matrix"], default="auto")
        p.add_argument("--directed", action="store_true", help="read edge lists as directed")
        p.add_argument("--self-loops", action="store_true", help="count self-loop slots even if none are present")
        p.add_argument("--weighted", action="store_true", help="force the weighted measure")
        p.add_argument("--ceil", action="store_true", help="round the linklist term up to whole bits")
        p.add_argument("--format", dest="output_format", choices=["json", "tsv"], default="json")

    p = sub.add_parser("complexity", help="measure one network")
    input_args(p)
    p.add_argument("--labelled", action="store_true", help="labelled-node variant")
    p.add_argument("--ma-base", choices=["2", "e"], default="2")

    p = sub.add_parser("nullmodel", help="compare against shuffled replicas")
    input_args(p)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("generate", help="write a random network")
    p.add_argument("model", choices=["er", "pa", "normal-null"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--directed", action="store_true", help="directed ER graph")
    p.add_argument("--undirected", action="store_true", help="undirected PA graph")
    p.add_argument("--weights", choices=WEIGHT_MODELS)
    p.add_argument("--seed-nodes", type=int)
    p.add_argument("--seed-clique", action="store_true")
    p.add_argument("--duplicates", choices=["resample", "merge"], default="resample")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--format", dest="output_format", choices=["edgelist", "pajek"], default="edgelist")

    p = sub.add_parser("enumerate", help="complexity of every (or sampled) graph of one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--sample", type=int, help="linklists drawn per link count")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--ceil", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = RunConfig.from_args(args)
    try:
        out = COMMANDS[cfg.subcommand](cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ResourceError, NetworkError, EnsembleError, MemoryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    sys.stdout.buffer.write(out)
    sys.stdout.flush()
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
