"""Command-line front end.

Every command prints one machine-readable document: JSON for
everything except growth-table, which is tabular and prints CSV with a
leading # provenance comment.  Documents embed {toolVersion, n, seed,
command} so a saved output identifies the run that made it.

Output is byte-identical for identical flags and seed, including under
--threads > 1; timings are therefore zeroed unless --timing is given.

Exit codes: 0 success, 1 domain error (bad input data, caps exceeded),
2 verification failure (a check evaluated and found false), 64 usage.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from sidon import __version__
from sidon.bounds import (
    certificate_count_check,
    containers_per_certificate_check,
    family_count_check,
    u_choice_product_check,
)
from sidon.container import (
    Certificate,
    MalformedCertificateError,
    build_certificate,
    clean_heavy,
    reconstruct_containers,
    verify_certificate,
)
from sidon.core import (
    build_multigraph,
    count_sidon_tuples,
    essential_count,
    is_sidon,
    vertex_stats,
)
from sidon.enumeration import (
    ALPHA_RULES,
    count_generalized,
    erdos_turan_set,
    growth_table,
    max_sidon,
    random_lower_bound_experiment,
    singer_set,
)
from sidon.params import ProblemParams
from sidon.prob import WSampleError, check_w, sample_w

DEFAULT_SEED = 1729

# the growth-table rows, densest budget first
RULE_NAMES = ("n_over_log5", "n_over_log4", "n_over_log3",
              "n_over_log2", "n_over_log", "n")

CSV_HEADER = "n,alpha_rule,alpha,count,exponent,seconds"


class UsageError(Exception):
    """Bad flag combination or malformed flag value."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_int_list(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError("expected a comma-separated integer list, got %r"
                         % (text,))


def _load_set(args):
    """Resolve --set / --set-file into a tuple of integers.

    Exactly one source must be given; a conflict is a usage error, not
    a silent override.
    """
    if args.set is not None and args.set_file is not None:
        raise UsageError("pass --set or --set-file, not both")
    if args.set is not None:
        return tuple(_parse_int_list(args.set))
    if args.set_file is None:
        raise UsageError("one of --set / --set-file is required")
    with open(args.set_file) as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        data = data.get("set")
    if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
        raise ValueError("set file must hold a JSON integer array "
                         "(or an object with a \"set\" array)")
    return tuple(data)


def _load_certificate(path):
    """Read a certificate document, wrapped or bare."""
    with open(path) as fh:
        data = json.load(fh)
    if isinstance(data, dict) and isinstance(data.get("certificate"), dict):
        data = data["certificate"]
    return Certificate.from_json_dict(data)


def _resolve_alpha(args, n):
    if getattr(args, "alpha", None) is not None \
            and getattr(args, "alpha_rule", None) is not None:
        raise UsageError("pass --alpha or --alpha-rule, not both")
    if getattr(args, "alpha_rule", None) is not None:
        return int(math.floor(ALPHA_RULES[args.alpha_rule](n)))
    if getattr(args, "alpha", None) is not None:
        return args.alpha
    return 0


def _provenance(command, n, seed):
    return {"toolVersion": __version__, "n": n, "seed": seed,
            "command": command}


def _doc(command, n, seed, body):
    out = {"provenance": _provenance(command, n, seed)}
    out.update(body)
    return json.dumps(out, indent=2, sort_keys=True) + "\n"


def _require_json(args):
    if getattr(args, "format", None) == "csv":
        raise UsageError("csv is reserved for growth-table")


# ------------------------------------------------------------- handlers


def _run_count(args):
    _require_json(args)
    a = _load_set(args)
    n = args.n if args.n is not None else (max(a) if a else 0)
    ordered = count_sidon_tuples(a, args.n)
    body = {"set": list(a), "size": len(a), "orderedCount": ordered,
            "essentialCount": essential_count(a, args.n),
            "isSidon": ordered == 0}
    return 0, _doc("count", n, args.seed, body)


def _run_stats(args):
    _require_json(args)
    a = _load_set(args)
    n = args.n if args.n is not None else (max(a) if a else 0)
    st = vertex_stats(a, args.n)
    body = {"set": list(a), "total": st.total,
            "perVertex": [[v, st.get(v)] for v in a]}
    return 0, _doc("stats", n, args.seed, body)


def _run_multigraph(args):
    _require_json(args)
    a = _load_set(args)
    u = tuple(_parse_int_list(args.u)) if args.u is not None else a
    n = args.n if args.n is not None else (max(a + u) if a + u else 0)
    mg = build_multigraph(a, u, args.n)
    edges = sorted(mg.mult.items())
    body = {"vertexSet": list(mg.vertex_set), "uSet": list(mg.u_set),
            "edgeCount": mg.edge_count(),
            "edges": [[x, y, m] for (x, y), m in edges]}
    return 0, _doc("multigraph", n, args.seed, body)


def _run_enumerate(args):
    _require_json(args)
    alpha = _resolve_alpha(args, args.n)
    res = count_generalized(args.n, alpha, threads=args.threads)
    body = {"alpha": alpha, "count": res.count, "exponent": res.exponent,
            "seconds": res.elapsed if args.timing else 0.0}
    return 0, _doc("enumerate", args.n, args.seed, body)


def _run_phi(args):
    _require_json(args)
    res = max_sidon(args.n)
    body = {"phi": res.phi, "witness": list(res.witness),
            "exact": res.exact}
    return 0, _doc("phi", args.n, args.seed, body)


def _run_construct(args):
    _require_json(args)
    if args.kind == "singer":
        out = singer_set(args.q, args.n)
        natural = args.q ** 2 + args.q + 1
    else:
        out = erdos_turan_set(args.q, args.n)
        natural = 2 * args.q ** 2
    n = args.n if args.n is not None else natural
    body = {"kind": args.kind, "q": args.q, "set": list(out),
            "size": len(out), "maxElement": max(out),
            "isSidon": is_sidon(out)}
    return 0, _doc("construct", n, args.seed, body)


def _run_certificate_build(args):
    _require_json(args)
    raw = _load_set(args)
    params = ProblemParams(args.n, _resolve_alpha(args, args.n))
    kept, removed = clean_heavy(raw, params.g_mid, args.n)
    cert, chain = build_certificate(kept, params, args.seed,
                                    tie_order=args.tie_order,
                                    removed=removed)
    body = {"certificate": cert.to_json_dict(),
            "chainSizes": [len(c) for c in chain.c],
            "cleanedAway": len(removed), "inputSize": len(raw)}
    return 0, _doc("certificate-build", args.n, args.seed, body)


def _run_certificate_verify(args):
    """Replay and check a certificate against the set that built it.

    --set is the same (raw) input given to certificate-build; the
    certificate's removed list splits it back into the cleaned part
    the conditions speak about.  Exit 2 if any condition fails or the
    raw input escapes the container plus the recorded exceptions.
    """
    _require_json(args)
    cert = _load_certificate(args.cert_file)
    raw = _load_set(args)
    params = ProblemParams(cert.n, cert.alpha)
    chain = reconstruct_containers(cert, params)
    removed = set(cert.removed)
    cleaned = tuple(v for v in raw if v not in removed)
    report = verify_certificate(cert, chain, cleaned, params)
    covered = set(chain.last) | removed
    for r in cert.r:
        covered.update(r)
    raw_containment = set(raw) <= covered
    body = report.to_json_dict()
    body["chainSizes"] = [len(c) for c in chain.c]
    body["cleanedInputSize"] = len(cleaned)
    body["rawContainment"] = raw_containment
    ok = report.holds and raw_containment
    return (0 if ok else 2), _doc(
        "certificate-verify", cert.n, args.seed, body)


def _run_certificate_reconstruct(args):
    _require_json(args)
    cert = _load_certificate(args.cert_file)
    params = ProblemParams(cert.n, cert.alpha)
    chain = reconstruct_containers(cert, params)
    body = {"chainSizes": [len(c) for c in chain.c],
            "containers": [list(c) for c in chain.c]}
    return 0, _doc("certificate-reconstruct", cert.n, args.seed, body)


def _run_sample_w(args):
    _require_json(args)
    i = _load_set(args)
    params = ProblemParams(args.n, _resolve_alpha(args, args.n))
    w = sample_w(i, params, args.seed)
    report = check_w(i, w, params)
    body = report.to_json_dict()
    body["allOk"] = report.all_ok
    body["failedConditions"] = list(report.failed_conditions())
    return (0 if report.all_ok else 2), _doc(
        "sample-w", args.n, args.seed, body)


def _bounds_reports(n):
    yield "u_choice_product", {}, u_choice_product_check(n)
    for ell in (0, 1, 2):
        yield "certificate_count", {"ell": ell}, \
            certificate_count_check(n, ell)
    root = math.sqrt(n)
    for case, size in ((1, math.floor(12 * root)), (2, n),
                       (3, math.floor(24 * root))):
        yield "containers_per_certificate", {"case": case, "size": size}, \
            containers_per_certificate_check(n, case, size)
    yield "family_count", {}, family_count_check(n)


def _run_bounds(args):
    _require_json(args)
    lines = []
    all_hold = True
    for n in args.n:
        for check, extra, report in _bounds_reports(n):
            all_hold = all_hold and report.holds
            doc = {"provenance": _provenance("bounds", n, args.seed),
                   "check": check}
            doc.update(extra)
            doc.update(report.to_json_dict())
            lines.append(json.dumps(doc, sort_keys=True))
    return (0 if all_hold else 2), "\n".join(lines) + "\n"


def _run_growth_table(args):
    rules = args.alpha_rule if args.alpha_rule else list(RULE_NAMES)
    rows = growth_table(args.n, rules, threads=args.threads)
    prov = _provenance("growth-table", list(args.n), args.seed)
    if args.format == "json":
        body = {"rows": [
            {"n": r.n, "alphaRule": r.alpha_rule, "alpha": r.alpha,
             "count": r.count, "exponent": r.exponent,
             "seconds": r.seconds if args.timing else 0.0}
            for r in rows]}
        doc = {"provenance": prov}
        doc.update(body)
        return 0, json.dumps(doc, indent=2, sort_keys=True) + "\n"
    out = ["# " + json.dumps(prov, sort_keys=True), CSV_HEADER]
    for r in rows:
        seconds = r.seconds if args.timing else 0.0
        out.append("%d,%s,%d,%d,%.6f,%.6f"
                   % (r.n, r.alpha_rule, r.alpha, r.count, r.exponent,
                      seconds))
    return 0, "\n".join(out) + "\n"


def _run_lower_bound_exp(args):
    _require_json(args)
    alpha = _resolve_alpha(args, args.n)
    res = random_lower_bound_experiment(args.n, alpha, args.trials,
                                        args.seed)
    body = {"alpha": alpha, "m": res.m, "trials": res.trials,
            "meanTuples": res.mean_tuples,
            "medianTuples": res.median_tuples,
            "fractionWithinBudget": res.fraction_within_budget,
            "reference": res.reference}
    return 0, _doc("lower-bound-exp", args.n, args.seed, body)


HANDLERS = {
    "count": _run_count,
    "stats": _run_stats,
    "multigraph": _run_multigraph,
    "enumerate": _run_enumerate,
    "phi": _run_phi,
    "construct": _run_construct,
    "certificate-build": _run_certificate_build,
    "certificate-verify": _run_certificate_verify,
    "certificate-reconstruct": _run_certificate_reconstruct,
    "sample-w": _run_sample_w,
    "bounds": _run_bounds,
    "growth-table": _run_growth_table,
    "lower-bound-exp": _run_lower_bound_exp,
}


# ---------------------------------------------------------------- parser


def _add_common(p, *, n=None, sets=False, alpha=False):
    if n == "int":
        p.add_argument("--n", type=int, default=None)
    elif n == "required":
        p.add_argument("--n", type=int, required=True)
    elif n == "list":
        p.add_argument("--n", type=_parse_int_list, required=True,
                       help="comma-separated list of n values")
    if sets:
        p.add_argument("--set", default=None,
                       help="comma-separated integer list")
        p.add_argument("--set-file", default=None,
                       help="JSON file: integer array or {\"set\": [...]}")
    if alpha:
        p.add_argument("--alpha", type=int, default=None)
        p.add_argument("--alpha-rule", choices=RULE_NAMES, default=None)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--format", choices=("json", "csv"), default=None)
    p.add_argument("--out", default=None, help="write output to this file")


def build_parser():
    parser = _Parser(prog="sidon", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True,
                                metavar="command")

    p = sub.add_parser("count", help="ordered and essential tuple counts")
    _add_common(p, n="int", sets=True)

    p = sub.add_parser("stats", help="per-vertex tuple counts s(v)")
    _add_common(p, n="int", sets=True)

    p = sub.add_parser("multigraph",
                       help="anchored multigraph edges and multiplicities")
    p.add_argument("--u", default=None,
                   help="anchor set, comma-separated (default: the set)")
    _add_common(p, n="int", sets=True)

    p = sub.add_parser("enumerate",
                       help="exact count of sets within the tuple budget")
    p.add_argument("--timing", action="store_true")
    _add_common(p, n="required", alpha=True)

    p = sub.add_parser("phi", help="exact maximum tuple-free subset size")
    _add_common(p, n="required")

    p = sub.add_parser("construct",
                       help="classical dense tuple-free constructions")
    p.add_argument("--kind", choices=("singer", "erdos_turan"),
                   required=True)
    p.add_argument("--q", type=int, required=True,
                   help="the prime parameter")
    _add_common(p, n="int")

    p = sub.add_parser("certificate-build",
                       help="clean the input and build its certificate")
    p.add_argument("--tie-order", choices=("ascending", "descending"),
                   default="ascending")
    _add_common(p, n="required", sets=True, alpha=True)

    p = sub.add_parser("certificate-verify",
                       help="replay a certificate and check all conditions")
    p.add_argument("--cert-file", required=True)
    _add_common(p, sets=True)

    p = sub.add_parser("certificate-reconstruct",
                       help="replay a certificate into its container chain")
    p.add_argument("--cert-file", required=True)
    _add_common(p)

    p = sub.add_parser("sample-w",
                       help="sample W from the set and check its conditions")
    _add_common(p, n="required", sets=True, alpha=True)

    p = sub.add_parser("bounds",
                       help="numeric audits of the counting arithmetic")
    _add_common(p, n="list")

    p = sub.add_parser("growth-table",
                       help="exact counts per (n, budget rule) as CSV")
    p.add_argument("--alpha-rule", action="append", choices=RULE_NAMES,
                   default=None, help="repeatable; default: all rules")
    p.add_argument("--timing", action="store_true")
    _add_common(p, n="list")

    p = sub.add_parser("lower-bound-exp",
                       help="random m-subset tuple-count experiment")
    p.add_argument("--trials", type=int, default=1000)
    _add_common(p, n="required", alpha=True)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(parser.format_usage())
        sys.stderr.write("error: %s\n" % (exc,))
        return 64
    except SystemExit as exc:       # --help exits 0 through argparse
        return exc.code if isinstance(exc.code, int) else 64

    try:
        code, text = HANDLERS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(parser.format_usage())
        sys.stderr.write("error: %s\n" % (exc,))
        return 64
    except (ValueError, WSampleError, OSError,
            json.JSONDecodeError) as exc:
        sys.stderr.write("error: %s\n" % (exc,))
        return 1

    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
