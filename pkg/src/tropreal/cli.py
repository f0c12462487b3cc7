"""Command-line front end.

Subcommands: trop, region, sample, witness, basis, lift, check, figures.
All randomized commands take --seed (default: the TROPREAL_SEED environment
variable, else 0) and produce byte-identical JSON for identical inputs and
seed.  Exit codes: 0 all good, 1 a check failed, 2 input or usage error.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from fractions import Fraction

from . import iojson
from .errors import TropRealError
from .hyperfields import INF, normalize_rel, stv
from .parsing import parse_polyk
from .polyhedra import (
    all_orthants,
    orthant_str,
    orthant_support,
    parse_orthant,
    trop_region,
)
from .puiseux import SamplerConfig
from .render import RenderConfig, render_region_svg, write_figures
from .scenarios import SCENARIO_NAMES
from .semialg import (
    finite_basis,
    lift_inequality,
    outer_excludes,
    sa_sample_trop,
    witness_search,
)
from .troppoly import trop_r

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _default_seed() -> int:
    try:
        return int(os.environ.get("TROPREAL_SEED", "0"))
    except ValueError:
        return 0


def _read_text(path: str) -> str:
    with open(path) as fh:
        return fh.read()


def _emit(out: str | None, payload: str, human: str | None) -> None:
    """'-' sends JSON to stdout; a path writes JSON there; the human text
    prints whenever stdout is not already carrying the JSON."""
    if out == "-":
        sys.stdout.write(payload)
        return
    if out is not None:
        with open(out, "w") as fh:
            fh.write(payload)
    if human:
        print(human)


def _load_polyk(path: str, nvars: int | None):
    import json

    text = _read_text(path)
    if text.lstrip().startswith("{"):
        return iojson.polyk_from_json(json.loads(text))
    return parse_polyk(text, nvars=nvars)


def _load_troppoly(path: str):
    import json

    text = _read_text(path)
    data = json.loads(text)
    return iojson.troppoly_from_json(data)


def _load_description(path: str):
    import json

    return iojson.description_from_json(json.loads(_read_text(path)))


_TARGET_RE = re.compile(r"\(\s*([+\-0])\s*,\s*([^()\s]+)\s*\)")


def parse_target(text: str):
    """Parse a tropical point like '((+,1),(+,0))' or '((-,3/2),(0,inf))'."""
    pairs = _TARGET_RE.findall(text)
    if not pairs:
        raise TropRealError(f"cannot parse target point {text!r}")
    coords = []
    for sign_ch, val_text in pairs:
        sign = {"+": 1, "-": -1, "0": 0}[sign_ch]
        if val_text.strip() in ("inf", "+inf", "oo"):
            coords.append(stv(0, INF))
        else:
            if sign == 0:
                raise TropRealError("sign 0 requires valuation inf")
            coords.append(stv(sign, Fraction(val_text)))
    return tuple(coords)


def _parse_window(text: str):
    parts = [Fraction(p.strip()) for p in text.split(",")]
    if len(parts) != 4:
        raise TropRealError("window must be 'x0,x1,y0,y1'")
    return tuple(parts)


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tropreal",
        description="exact signed tropicalization of polynomials and semialgebraic sets",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("trop", help="tropicalize a polynomial file")
    p.add_argument("input", help="polynomial file (text grammar or JSON)")
    p.add_argument("--nvars", type=int, default=None)
    p.add_argument("--out", default=None, help="write the tropical polynomial JSON here")

    p = sub.add_parser("region", help="exact region of a tropical polynomial")
    p.add_argument("input", help="tropical polynomial JSON file")
    p.add_argument("--rel", default="ge", help="eq|ge|gt|le|lt|ne")
    p.add_argument("--orthant", default="all", help="sign string like ++, +-0, or 'all'")
    p.add_argument("--out", default=None)
    p.add_argument("--svg", default=None, help="also rasterize (2 variables only)")
    p.add_argument("--window", default="-3,3,-3,3")
    p.add_argument("--grid", type=int, default=160)

    p = sub.add_parser("sample", help="witnessed tropical sample cloud of a set")
    p.add_argument("input", help="semialgebraic description JSON file")
    p.add_argument("--count", type=int, default=10000, help="sampling attempts")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None)

    p = sub.add_parser("witness", help="search a witness for a tropical point")
    p.add_argument("input", help="semialgebraic description JSON file")
    p.add_argument("--target", required=True, help="point like '((+,1),(+,0))'")
    p.add_argument("--budget", type=int, default=1000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None)

    p = sub.add_parser("basis", help="finite tropical description of a target set")
    p.add_argument("input", help="semialgebraic description JSON file")
    p.add_argument("--target-set", "--T", required=True,
                   help="polyhedral union JSON file")
    p.add_argument("--orthant", default=None, help="defaults to all-positive")
    p.add_argument("--count", type=int, default=200, help="verification samples")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None)

    p = sub.add_parser("lift", help="lift a valid tropical inequality to the set")
    p.add_argument("input", help="semialgebraic description JSON file")
    p.add_argument("--trop", required=True, help="tropical polynomial JSON file")
    p.add_argument("--orthant", default=None, help="defaults to all-positive")
    p.add_argument("--count", type=int, default=200, help="verification samples")
    p.add_argument("--budget", type=int, default=1000, help="scale search depth")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None)

    p = sub.add_parser("check", help="run named verification suites")
    p.add_argument("suites", nargs="+", help="suite names, or 'all'")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--count", type=int, default=None, help="override the main size")
    p.add_argument("--out", default=None, help="write the JSON report here")
    p.add_argument("--outdir", default=None, help="artifact directory (figures suite)")
    p.add_argument("--grid", type=int, default=None)

    p = sub.add_parser("figures", help="render the built-in scenarios to SVG")
    p.add_argument("--outdir", default="figures")
    p.add_argument("--grid", type=int, default=160)

    return ap


def _cmd_trop(args) -> int:
    f = _load_polyk(args.input, args.nvars)
    F = trop_r(f)
    if not F.terms:
        print("warning: the polynomial tropicalizes to zero", file=sys.stderr)
    _emit(args.out, iojson.dumps(iojson.troppoly_to_json(F)), F.text())
    return EXIT_OK


def _cmd_region(args) -> int:
    F = _load_troppoly(args.input)
    rel = normalize_rel(args.rel)
    if args.orthant == "all":
        sigmas = all_orthants(F.nvars)
    else:
        sigmas = [parse_orthant(args.orthant)]
    regions = {sigma: trop_region(F, sigma, rel) for sigma in sigmas}
    human = "\n".join(
        f"orthant {orthant_str(sigma)}: {len(regions[sigma].pieces)} pieces"
        for sigma in sigmas
    )
    _emit(args.out, iojson.dumps(iojson.regions_to_json(F.nvars, regions)), human)
    if args.svg is not None:
        if F.nvars != 2:
            raise TropRealError("SVG output requires exactly two variables")
        cfg = RenderConfig(grid=args.grid, window=_parse_window(args.window))
        svg = render_region_svg([(F, rel)], cfg, title=f"{F.text()}  {args.rel} 0")
        with open(args.svg, "w") as fh:
            fh.write(svg)
    return EXIT_OK


def _cmd_sample(args) -> int:
    S = _load_description(args.input)
    cfg = SamplerConfig(seed=args.seed if args.seed is not None else _default_seed())
    cloud = sa_sample_trop(S, args.count, cfg)
    human = f"{len(cloud)} distinct tropical points from {args.count} attempts"
    _emit(args.out, iojson.dumps(iojson.cloud_to_json(cloud)), human)
    return EXIT_OK


def _cmd_witness(args) -> int:
    S = _load_description(args.input)
    z = parse_target(args.target)
    seed = args.seed if args.seed is not None else _default_seed()
    cfg = SamplerConfig(seed=seed)
    w = witness_search(S, z, args.budget, cfg)
    excluded = outer_excludes(S, z) if w is None else False
    payload = {
        "target": iojson.point_to_json(z),
        "witness": None if w is None else [iojson.series_to_json(c) for c in w],
        "excluded_by_outer": excluded,
        "budget": args.budget,
    }
    if w is not None:
        human = "witness: (" + ", ".join(c.text() for c in w) + ")"
    elif excluded:
        human = "no witness (excluded by outer region)"
    else:
        human = "no witness found within budget (inconclusive)"
    _emit(args.out, iojson.dumps(payload), human)
    return EXIT_OK


def _cmd_basis(args) -> int:
    import json

    S = _load_description(args.input)
    sigma = parse_orthant(args.orthant) if args.orthant else tuple([1] * S.nvars)
    m = len(orthant_support(sigma))
    T = iojson.union_from_json(json.loads(_read_text(args.target_set)), m)
    seed = args.seed if args.seed is not None else _default_seed()
    cfg = SamplerConfig(seed=seed)
    res = finite_basis(T, S, sigma, cfg, n_samples=args.count)
    payload = {
        "orthant": orthant_str(sigma),
        "polys": [iojson.polyk_to_json(f) for f in res.polys],
        "region": iojson.union_to_json(res.region),
        "target": iojson.union_to_json(T),
        "verified": True,
    }
    _emit(
        args.out,
        iojson.dumps(payload),
        f"{len(res.polys)} polynomials; regions ∩ = T: OK",
    )
    return EXIT_OK


def _cmd_lift(args) -> int:
    S = _load_description(args.input)
    F = _load_troppoly(args.trop)
    sigma = parse_orthant(args.orthant) if args.orthant else tuple([1] * S.nvars)
    seed = args.seed if args.seed is not None else _default_seed()
    cfg = SamplerConfig(seed=seed)
    res = lift_inequality(
        F, S, sigma, cfg, n_samples=args.count, eps_budget=args.budget
    )
    payload = {
        "poly": iojson.polyk_to_json(res.poly),
        "epsilon": str(res.epsilon),
        "samples_checked": res.samples_checked,
        "certificate": res.certificate,
    }
    _emit(
        args.out,
        iojson.dumps(payload),
        f"epsilon = {res.epsilon}; nonnegative on {res.samples_checked} samples "
        f"(certificate: {res.certificate})",
    )
    return EXIT_OK


def _cmd_check(args) -> int:
    from .checks import SUITE_NAMES, run_suites

    names = list(args.suites)
    if names == ["all"]:
        names = list(SUITE_NAMES)
    seed = args.seed if args.seed is not None else _default_seed()
    report = run_suites(
        names, seed, size=args.count, outdir=args.outdir, grid=args.grid
    )
    if args.out is not None:
        if args.out == "-":
            sys.stdout.write(report.to_json())
        else:
            with open(args.out, "w") as fh:
                fh.write(report.to_json())
    print(report.text())
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _cmd_figures(args) -> int:
    written = write_figures(args.outdir, grid=args.grid)
    for path in written:
        print(path)
    return EXIT_OK


_DISPATCH = {
    "trop": _cmd_trop,
    "region": _cmd_region,
    "sample": _cmd_sample,
    "witness": _cmd_witness,
    "basis": _cmd_basis,
    "lift": _cmd_lift,
    "check": _cmd_check,
    "figures": _cmd_figures,
}


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except TropRealError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
