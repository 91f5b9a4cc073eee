"""Command line entry point: enumeration, homology tables and verification suites.

Results are JSON-lines (or CSV with --csv) on standard output or --output;
progress lines and the human-readable summary go to standard error.  The
enumeration cache lives under --cache-dir or $GRAPHCX_CACHE when either is set.
"""

import argparse
import csv
import io
import json
import os
import sys
import tempfile
import time
import warnings
from concurrent.futures import ProcessPoolExecutor

from . import checks
from . import graphs as gr
from .cechains import verify_identification
from .complexes import (
    COM, DGC, DGC_TRUNC, KINDS, LIE, UGC, ComplexBlock, GraphComplex, euler_characteristic,
    full_range,
)

CACHE_VERSION = 1
CACHE_ENV = "GRAPHCX_CACHE"
SUITES = ("d-squared", "directed-vs-undirected", "cube", "coalgebra", "bigrade")

# test-only: a callable (sign, graph, flag) -> sign installed on every complex
SIGN_HOOK = None


class CacheVersionError(RuntimeError):
    pass


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# enumeration cache


class EnumerationCache:
    """Graph lists in the text format, one file per enumeration key."""

    def __init__(self, root):
        self.root = root
        self.hits = 0
        self.misses = 0

    @staticmethod
    def key(kind, genus, m, max_degree, max_edges):
        if kind == UGC:
            return "ugc-g%d-e%s" % (genus, "-" if max_edges is None else max_edges)
        if kind == DGC_TRUNC and max_degree is not None:
            return "dgc-trunc-g%d-m%d-p%d" % (genus, m, max_degree)
        return "%s-g%d-e%d" % (kind, genus, max_edges)

    def path(self, key):
        return os.path.join(self.root, key + ".txt")

    def _read(self, path, key):
        with open(path) as fh:
            lines = fh.read().split("\n")
        if not lines or lines[0] != "# graphcx enumeration cache":
            raise ValueError("missing header")
        if not lines[1].startswith("# version "):
            raise ValueError("missing version line")
        version = lines[1][len("# version "):]
        if version != str(CACHE_VERSION):
            raise CacheVersionError("cache file %s has format version %s, expected %d; "
                                    "delete it or point %s elsewhere"
                                    % (path, version, CACHE_VERSION, CACHE_ENV))
        if lines[2] != "# key " + key:
            raise ValueError("key mismatch")
        body = [l for l in lines[3:] if l]
        if not body or not body[-1].startswith("# count "):
            raise ValueError("truncated file")
        count = int(body[-1][len("# count "):])
        graphs = [gr.from_text(l) for l in body[:-1]]
        if len(graphs) != count:
            raise ValueError("count mismatch")
        return graphs

    def _write(self, path, key, graphs):
        os.makedirs(self.root, exist_ok=True)
        text = "\n".join(["# graphcx enumeration cache", "# version %d" % CACHE_VERSION,
                          "# key " + key] + [G.to_text() for G in graphs]
                         + ["# count %d" % len(graphs), ""])
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)

    def __call__(self, kind, genus, m, max_degree, max_edges):
        key = self.key(kind, genus, m, max_degree, max_edges)
        path = self.path(key)
        if os.path.exists(path):
            try:
                graphs = self._read(path, key)
                self.hits += 1
                return graphs
            except CacheVersionError:
                raise
            except (ValueError, KeyError, IndexError) as exc:
                warnings.warn("corrupt cache file %s (%s); rebuilding" % (path, exc))
        self.misses += 1
        graphs = GraphComplex(kind, LIE, m).enumerate(genus, max_degree, max_edges)
        self._write(path, key, graphs)
        return graphs


def cache_root(args):
    return getattr(args, "cache_dir", None) or os.environ.get(CACHE_ENV) or None


def make_complex(kind, operad, m, root=None):
    cx = GraphComplex(kind, operad, m)
    if root:
        cx.enumerator = EnumerationCache(root)
    if SIGN_HOOK is not None:
        cx.sign_hook = SIGN_HOOK
    return cx


# ---------------------------------------------------------------------------
# argument helpers


def parse_range(text):
    """'a..b' or 'a' -> list of integers."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            a, b = int(a), int(b)
        else:
            a = b = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer or a range a..b, got %r" % text)
    if b < a:
        raise argparse.ArgumentTypeError("empty range %r" % text)
    return list(range(a, b + 1))


def parse_operads(text):
    if text == "both":
        return [LIE, COM]
    if text not in (LIE, COM):
        raise argparse.ArgumentTypeError("operad must be lie, com or both")
    return [text]


class Progress:
    def __init__(self, quiet=False, stream=None):
        self.quiet = quiet
        self.stream = stream or sys.stderr
        self.start = time.time()

    def __call__(self, msg):
        if not self.quiet:
            self.stream.write("[%7.1fs] %s\n" % (time.time() - self.start, msg))
            self.stream.flush()


def emit(records, args, fields=None):
    """Write records as JSON-lines or CSV to --output or standard output."""
    if args.csv:
        buf = io.StringIO()
        fields = fields or (list(records[0]) if records else [])
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n",
                           extrasaction="ignore")
        w.writeheader()
        for r in records:
            w.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v
                        for k, v in r.items()})
        text = buf.getvalue()
    else:
        text = "".join(json.dumps(r) + "\n" for r in records)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


# ---------------------------------------------------------------------------
# homology jobs


def _homology_job(job):
    kind, operad, m, genus, p, method, root = job
    cx = make_complex(kind, operad, m, root)
    block = ComplexBlock(cx, genus, p, p)
    return block.records(method)[0]


def homology_records(args, progress):
    jobs = []
    for genus in args.genus:
        for m in args.m:
            for operad in args.operad:
                if args.degrees:
                    degrees = args.degrees
                else:
                    lo, hi = full_range(args.kind, m, genus)
                    degrees = list(range(lo, hi + 1))
                for p in degrees:
                    jobs.append((args.kind, operad, m, genus, p, args.method, cache_root(args)))
    records = []
    if args.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            for rec in pool.map(_homology_job, jobs):
                progress("block %s/%s m=%d genus=%d degree=%d chains=%d"
                         % (rec["kind"], rec["operad"], rec["m"], rec["genus"],
                            rec["degree"], rec["dim_chains"]))
                records.append(rec)
    else:
        # one block per (kind, operad, m, genus) covering all requested degrees
        groups = {}
        for kind, operad, m, genus, p, method, root in jobs:
            groups.setdefault((kind, operad, m, genus), []).append(p)
        for (kind, operad, m, genus), degrees in groups.items():
            cx = make_complex(kind, operad, m, cache_root(args))
            tag = "%s/%s m=%d" % (kind, operad, m)
            block = ComplexBlock(cx, genus, min(degrees), max(degrees),
                                 progress=lambda msg, t=tag: progress("%s %s" % (t, msg)))
            records.extend(r for r in block.records(args.method) if r["degree"] in degrees)
    records.sort(key=lambda r: (r["kind"], r["operad"], r["m"], r["genus"], r["degree"]))
    return records


def cmd_homology(args, progress):
    records = homology_records(args, progress)
    emit(records, args)
    nonzero = [(r["operad"], r["m"], r["genus"], r["degree"], r["dim_H"])
               for r in records if r["dim_H"]]
    progress("homology: %d blocks, nonzero: %s" % (len(records), nonzero or "none"))
    return 0


def cmd_euler(args, progress):
    records = homology_records(args, progress)
    groups = {}
    for r in records:
        groups.setdefault((r["kind"], r["operad"], r["m"], r["genus"]), []).append(r)
    out = []
    for (kind, operad, m, genus), recs in sorted(groups.items()):
        xc, xh = euler_characteristic(recs)
        out.append({"kind": kind, "operad": operad, "m": m, "genus": genus,
                    "degrees": [recs[0]["degree"], recs[-1]["degree"]],
                    "chi_chains": xc, "chi_homology": xh, "consistent": xc == xh})
    emit(out, args)
    bad = [r for r in out if not r["consistent"]]
    progress("euler: %d groups, %s" % (len(out), "FAIL" if bad else "pass"))
    return 1 if bad else 0


def cmd_enumerate(args, progress):
    out = []
    root = cache_root(args)
    for genus in args.genus:
        for m in args.m:
            cx = make_complex(args.kind, LIE, m, root)
            for i, G in enumerate(cx.graphs(genus, max_degree=args.max_degree,
                                            max_edges=args.max_edges)):
                out.append({"kind": args.kind, "genus": genus, "m": m, "index": i,
                            "vertices": G.nv, "edges": G.num_edges,
                            "degree": G.degree(m), "graph": G.to_text()})
    emit(out, args)
    progress("enumerate: %d graphs" % len(out))
    return 0


def cmd_verify(args, progress):
    factory = lambda kind, operad, m: make_complex(kind, operad, m, cache_root(args))
    kinds = [args.kind] if args.kind else None
    records = []
    for m in args.m:
        for operad in args.operad:
            if args.suite == "d-squared":
                for kind in kinds or list(KINDS):
                    records.append(checks.d_squared(kind, operad, m, args.max_edges or 6,
                                                    args.sample_limit, factory=factory))
                    progress("d-squared %s/%s m=%d: %s" % (kind, operad, m, records[-1]["failures"]))
            elif args.suite == "coalgebra":
                for kind in kinds or [UGC, DGC_TRUNC]:
                    records.append(checks.coalgebra(kind, operad, m, args.max_edges or 5,
                                                    factory=factory))
                    progress("coalgebra %s/%s m=%d: %s" % (kind, operad, m, records[-1]["failures"]))
            elif args.suite == "directed-vs-undirected":
                for genus in args.genus:
                    lo = hi = None
                    if args.degrees:
                        lo, hi = args.degrees[0], args.degrees[-1]
                    records.append(checks.directed_vs_undirected(operad, m, genus, lo, hi,
                                                                 factory=factory))
                    progress("directed-vs-undirected %s m=%d genus=%d: %s"
                             % (operad, m, genus, records[-1]["failures"]))
            elif args.suite == "cube":
                records.append(checks.cube(operad, m, max(args.genus)))
                progress("cube %s m=%d: %s" % (operad, m, records[-1]["failures"]))
            elif args.suite == "bigrade":
                records.append(checks.bigrade(operad, m, args.max_edges or 5, factory=factory))
                progress("bigrade %s m=%d: %s" % (operad, m, records[-1]["failures"]))
    for r in records:
        r["ok"] = r["failures"] == 0
    emit(records, args)
    failed = sum(1 for r in records if not r["ok"])
    print("verify %s: %d checks, %s" % (args.suite, len(records),
                                       "FAIL (%d failing)" % failed if failed else "pass"),
          file=sys.stderr)
    return 1 if failed else 0


def cmd_ce_oracle(args, progress):
    records = []
    for g in args.g:
        for p in args.degrees or [0]:
            t = time.time()
            records.append(verify_identification(g, args.n, args.cm, p,
                                                 check_intertwining=not args.no_intertwining))
            progress("ce-oracle g=%d p=%d: %s (%.1fs)" % (g, p, records[-1], time.time() - t))
    emit(records, args)
    bad = [r for r in records if not (r["equal"] and r["intertwine_ok"])]
    print("ce-oracle: %d degrees, %s" % (len(records), "FAIL" if bad else "pass"), file=sys.stderr)
    return 1 if bad else 0


# ---------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(prog="graphcx", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, kind_default=UGC):
        p.add_argument("--kind", choices=KINDS, default=kind_default)
        p.add_argument("--operad", type=parse_operads, default=[LIE], help="lie, com or both")
        p.add_argument("--m", type=parse_range, default=[0], help="integer or range a..b")
        p.add_argument("--genus", type=parse_range, default=[2], help="integer or range a..b")
        p.add_argument("--degrees", type=parse_range, default=None, help="range a..b")
        p.add_argument("--max-edges", type=int, default=None)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--csv", action="store_true", help="emit CSV instead of JSON-lines")
        p.add_argument("--output", default=None, help="write records to this file")
        p.add_argument("--cache-dir", default=None, help="enumeration cache (default $%s)" % CACHE_ENV)
        p.add_argument("--quiet", action="store_true", help="suppress progress lines")

    p = sub.add_parser("enumerate", help="list graph classes")
    common(p)
    p.add_argument("--max-degree", type=int, default=None)
    p.set_defaults(func=cmd_enumerate)

    for name, func in (("homology", cmd_homology), ("euler", cmd_euler)):
        p = sub.add_parser(name, help="homology table" if name == "homology" else
                           "Euler characteristic from chains and from homology")
        common(p)
        p.add_argument("--method", choices=("exact", "bareiss", "modular"), default="exact")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="run a verification suite")
    common(p, kind_default=None)
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--sample-limit", type=int, default=checks.DEFAULT_SAMPLE,
                   help="decorations tested per graph")
    p.set_defaults(func=cmd_verify, operad=[LIE, COM])

    p = sub.add_parser("ce-oracle", help="compare with Chevalley-Eilenberg coinvariants")
    p.add_argument("--g", type=parse_range, default=[2], help="dim V, integer or range")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--m", dest="cm", type=int, default=10)
    p.add_argument("--degrees", type=parse_range, default=None)
    p.add_argument("--no-intertwining", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--output", default=None)
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_ce_oracle)
    return parser


def validate(args):
    if getattr(args, "workers", 1) < 1:
        raise UsageError("--workers must be positive")
    if args.command in ("homology", "euler") and args.kind == DGC:
        raise UsageError("homology of the full directed complex is not supported "
                         "(its blocks are infinite); use --kind dgc-trunc or ugc")
    if args.command == "enumerate" and args.kind == DGC and args.max_edges is None:
        raise UsageError("--kind dgc needs --max-edges")
    if args.command == "enumerate" and args.kind == DGC_TRUNC and args.max_degree is None \
            and args.max_edges is None:
        raise UsageError("--kind dgc-trunc needs --max-degree or --max-edges")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        validate(args)
    except UsageError as exc:
        parser.error(str(exc))
    progress = Progress(quiet=args.quiet)
    try:
        return args.func(args, progress)
    except CacheVersionError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
