"""Command-line interface.

Subcommands: ``build-graph``, ``cluster``, ``watset`` and ``eval``. Every
run is a pure function of its flags and input files; the seed defaults to 0.
"""

from __future__ import annotations

import argparse
import contextlib
import logging
import sys
from typing import IO, Iterator, Sequence

from . import __version__
from .baselines import (CpmParams, EcoParams, clique_percolation, eco, maxmax,
                        pad_singletons)
from .clustering import CWMode, MCLParams, make_clusterer
from .embeddings import load_vectors
from .errors import WatsetError
from .evaluation import DEFAULT_PRUNE, paired_prf, read_synsets, write_synsets
from .fuzzy import watset
from .graph import Weighting, WordGraph, build_graph, read_pairs, write_graph

log = logging.getLogger("watset")

FORMAT_VERSION = 1


def _k(value: str) -> int:
    k = int(value)
    if k < 2:
        raise argparse.ArgumentTypeError("k must be at least 2")
    return k


def _positive_int(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def _prune(value: str) -> int | None:
    if value.lower() in ("none", "0"):
        return None
    return _positive_int(value)


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", "-i", required=True, help="synonym pairs, word1<TAB>word2[<TAB>weight]")
    p.add_argument("--weighting", choices=[w.value for w in Weighting], default="ones")
    p.add_argument("--embeddings", help="word vectors in word2vec text format (for --weighting sim)")


def _add_mcl_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--expansion", type=int, default=2)
    p.add_argument("--inflation", type=float, default=2.0)
    p.add_argument("--mcl-iterations", type=_positive_int, default=20)


def make_parser() -> tuple[argparse.ArgumentParser, dict[str, argparse.ArgumentParser]]:
    parser = argparse.ArgumentParser(prog="watset", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__} (file format {FORMAT_VERSION})")
    parser.add_argument("--verbose", "-v", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    subparsers = {}

    def add(name, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--config", help="key=value file; command-line flags take precedence")
        p.add_argument("--output", "-o", help="output file (default: stdout)")
        subparsers[name] = p
        return p

    p = add("build-graph", "build a weighted synonymy graph")
    _add_graph_args(p)

    p = add("cluster", "run a single clustering algorithm")
    _add_graph_args(p)
    p.add_argument("--algorithm", choices=["cw", "mcl", "maxmax", "eco", "cpm"], required=True)
    p.add_argument("--mode", choices=[m.value for m in CWMode], default="top")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cw-iterations", type=_positive_int, default=20)
    _add_mcl_args(p)
    p.add_argument("--k", type=_k, default=2, help="clique size for cpm")
    p.add_argument("--pad-singletons", action="store_true",
                   help="emit words outside every k-clique as singletons (cpm)")
    p.add_argument("--runs", type=_positive_int, default=100, help="noisy MCL runs for eco")
    p.add_argument("--noise", type=float, default=0.05, help="eco noise magnitude")
    p.add_argument("--threshold", type=float, default=0.5, help="eco pair probability threshold")

    p = add("watset", "local-global fuzzy clustering into synsets")
    _add_graph_args(p)
    p.add_argument("--local", choices=["cw", "mcl"], default="cw")
    p.add_argument("--local-mode", choices=[m.value for m in CWMode], default="top")
    p.add_argument("--global", dest="global_", choices=["cw", "mcl"], default="cw")
    p.add_argument("--global-mode", choices=[m.value for m in CWMode], default="top")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cw-iterations", type=_positive_int, default=20)
    _add_mcl_args(p)
    p.add_argument("--threads", type=_positive_int, default=1, help="worker processes")
    p.add_argument("--dump-senses", help="write the sense inventory here")
    p.add_argument("--dump-sense-graph", help="write the sense graph here")

    p = add("eval", "paired precision/recall/F1 against gold synsets")
    p.add_argument("--predicted", required=True)
    p.add_argument("--gold", required=True)
    p.add_argument("--prune", type=_prune, default=DEFAULT_PRUNE,
                   help="drop predicted clusters this large or larger; 'none' disables")
    return parser, subparsers


def _read_config(path: str, parser: argparse.ArgumentParser) -> dict[str, object]:
    actions = {a.dest: a for a in parser._actions}
    config = {}
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            key, value = key.strip().replace("-", "_"), value.strip()
            if key == "global":
                key = "global_"
            if not sep or key not in actions or key in ("config", "help"):
                parser.error(f"{path}:{lineno}: unknown setting {line!r}")
            if isinstance(actions[key], argparse._StoreTrueAction):
                config[key] = value.lower() in ("1", "true", "yes", "on")
            else:
                config[key] = value
    return config


def parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    parser, subparsers = make_parser()
    args = parser.parse_args(argv)
    if getattr(args, "config", None):
        sub = subparsers[args.command]
        try:
            sub.set_defaults(**_read_config(args.config, sub))
        except OSError as e:
            parser.exit(1, f"watset: cannot read config: {e}\n")
        args = parser.parse_args(argv)
    return args


@contextlib.contextmanager
def _open_output(path: str | None) -> Iterator[IO[str]]:
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            yield f


def _load_graph(args) -> WordGraph:
    vectors = load_vectors(args.embeddings) if args.embeddings else None
    with open(args.input, encoding="utf-8") as f:
        pairs = read_pairs(f)
    g = build_graph(pairs, args.weighting, vectors)
    log.info("loaded graph with %d nodes and %d edges", len(g), g.number_of_edges())
    return g


def _mcl_params(args) -> MCLParams:
    return MCLParams(expansion=args.expansion, inflation=args.inflation,
                     max_iterations=args.mcl_iterations)


def cmd_build_graph(args) -> None:
    g = _load_graph(args)
    with _open_output(args.output) as out:
        write_graph(g, out)


def cmd_cluster(args) -> None:
    g = _load_graph(args)
    if args.algorithm in ("cw", "mcl"):
        clusters = make_clusterer(args.algorithm, args.mode, args.seed, _mcl_params(args),
                                  args.cw_iterations)(g)
    elif args.algorithm == "maxmax":
        clusters = maxmax(g)
    elif args.algorithm == "eco":
        clusters = eco(g, EcoParams(runs=args.runs, noise_magnitude=args.noise,
                                    threshold=args.threshold, seed=args.seed,
                                    mcl=_mcl_params(args)))
    else:
        clusters = clique_percolation(g, CpmParams(args.k))
        if args.pad_singletons:
            clusters = pad_singletons(g, clusters)
    with _open_output(args.output) as out:
        write_synsets(clusters, out)


def cmd_watset(args) -> None:
    g = _load_graph(args)
    params = _mcl_params(args)
    local = make_clusterer(args.local, args.local_mode, args.seed, params, args.cw_iterations)
    global_ = make_clusterer(args.global_, args.global_mode, args.seed, params, args.cw_iterations)
    result = watset(g, local, global_, workers=args.threads)
    if args.dump_senses:
        with open(args.dump_senses, "w", encoding="utf-8", newline="\n") as f:
            for word, senses in sorted(result.inventory.senses.items()):
                for sense in senses:
                    ctx = result.inventory.contexts[sense]
                    f.write(f"{word}\t{sense.index}\t"
                            + ",".join(f"{w}:{x!r}" for w, x in sorted(ctx.items())) + "\n")
    if args.dump_sense_graph:
        with open(args.dump_sense_graph, "w", encoding="utf-8", newline="\n") as f:
            for s, t, w in sorted(result.sense_graph.edges()):
                f.write(f"{s.word}\t{s.index}\t{t.word}\t{t.index}\t{w!r}\n")
    with _open_output(args.output) as out:
        write_synsets(result.clusters, out)


def cmd_eval(args) -> None:
    with open(args.predicted, encoding="utf-8") as f:
        predicted = read_synsets(f)
    with open(args.gold, encoding="utf-8") as f:
        gold = read_synsets(f)
    report = paired_prf(predicted, gold, args.prune)
    with _open_output(args.output) as out:
        out.write(report.as_row() + "\n")


COMMANDS = {
    "build-graph": cmd_build_graph,
    "cluster": cmd_cluster,
    "watset": cmd_watset,
    "eval": cmd_eval,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        COMMANDS[args.command](args)
    except WatsetError as e:
        print(f"watset: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        # parameter validation inside the library (e.g. MCL inflation <= 1)
        print(f"watset: invalid parameter: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"watset: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
