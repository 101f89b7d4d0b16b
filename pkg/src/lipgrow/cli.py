"""Command-line front end: grow / synth / metrics.

Exit codes: 0 success, 2 bad arguments or configuration, 3 I/O or file
format problems, 4 seed outside the image.  Identical arguments on
identical inputs produce bit-identical mask/stats/image artifacts.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .errors import (
    ConfigError,
    EmptyRegionError,
    FormatError,
    InvalidGrayToneError,
    SeedError,
)
from .grow import grow
from .image import Coord, GrayImage
from .imgio import (
    SegmentationStats,
    read_image,
    write_image,
    write_mask,
    write_overlay,
    write_stats,
)
from .region import CRITERION_KINDS, CriterionConfig, Region
from .synth import (
    PlateauSpec,
    apply_lip_bias,
    apply_lip_bias_gradient,
    apply_lip_gain,
    make_two_plateau,
)

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # one-line diagnostics, deterministic exit code
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _seed(text: str) -> Coord:
    try:
        x, y = text.split(",")
        return int(x), int(y)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be 'x,y' integers, got {text!r}") from None


def _fmt_h(h: float) -> str:
    return "inf" if math.isinf(h) else f"{h:.6g}"


def _build_parser() -> _Parser:
    parser = _Parser(prog="lipgrow", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("grow", help="grow a region from a seed")
    g.add_argument("--input", required=True, help="PGM/PPM/LIPF image to segment")
    g.add_argument("--seed", required=True, type=_seed, metavar="X,Y",
                   help="seed pixel as column,row (0-based)")
    g.add_argument("--criterion", required=True, choices=CRITERION_KINDS)
    g.add_argument("--threshold", required=True, type=float,
                   help="homogeneity threshold t (>= 0; >= 1 for lip-mul)")
    g.add_argument("--connectivity", type=int, choices=(4, 8), default=8)
    g.add_argument("--max-iters", type=int, default=None,
                   help="iteration cap (default: width*height)")
    g.add_argument("--mask", help="write region mask as PGM")
    g.add_argument("--overlay", help="write red overlay as PPM")
    g.add_argument("--stats", help="write run statistics as JSON")
    g.add_argument("--trace-csv", dest="trace_csv", help="write per-iteration trace as CSV")
    g.add_argument("--figure", help="render segmentation + trace figure (png/pdf/svg)")

    s = sub.add_parser("synth", help="generate or transform test images")
    ssub = s.add_subparsers(dest="synth_command", required=True, parser_class=_Parser)

    tp = ssub.add_parser("two-plateau", help="two flat bands with a linear ramp")
    tp.add_argument("--width", required=True, type=int)
    tp.add_argument("--height", required=True, type=int)
    tp.add_argument("--val-a", required=True, type=float, help="left plateau tone")
    tp.add_argument("--val-b", required=True, type=float, help="right plateau tone")
    tp.add_argument("--ramp", type=int, default=0, help="interpolated columns between plateaus")
    tp.add_argument("--m", type=float, default=256.0, help="scale bound M")

    bias = ssub.add_parser("bias", help="LIP-add a constant tone to every pixel")
    bias.add_argument("--input", required=True)
    bias.add_argument("--c", required=True, type=float, help="bias tone in [0, M)")

    gain = ssub.add_parser("gain", help="LIP scalar-multiply every pixel")
    gain.add_argument("--input", required=True)
    gain.add_argument("--lambda", dest="lam", required=True, type=float, help="gain exponent > 0")

    grad = ssub.add_parser("bias-gradient", help="LIP-add a left-to-right tone ramp")
    grad.add_argument("--input", required=True)
    grad.add_argument("--c-left", required=True, type=float)
    grad.add_argument("--c-right", required=True, type=float)

    for sp in (tp, bias, gain, grad):
        sp.add_argument("--format", choices=("pgm", "lipf"), default=None,
                        help="output format (default: by --out extension, else lipf)")
        sp.add_argument("--out", required=True)

    m = sub.add_parser("metrics", help="heterogeneity of a masked region")
    m.add_argument("--input", required=True, help="image the mask refers to")
    m.add_argument("--mask", required=True, help="PGM mask; nonzero pixels are members")

    return parser


def _cmd_grow(args) -> int:
    outputs = (args.mask, args.overlay, args.stats, args.trace_csv, args.figure)
    if all(o is None for o in outputs):
        raise ConfigError("no output requested: pass --mask, --overlay, --stats, --trace-csv or --figure")
    crit = CriterionConfig(args.criterion, args.threshold)
    img = read_image(args.input)
    result = grow(img, args.seed, crit, connectivity=args.connectivity, max_iters=args.max_iters)

    if args.mask:
        write_mask(result.region, img.width, img.height, args.mask)
    if args.overlay:
        write_overlay(img, result.region, args.seed, args.overlay)
    if args.stats:
        write_stats(
            SegmentationStats(
                seed=args.seed,
                criterion=crit.kind,
                threshold=crit.threshold,
                iterations=result.iterations,
                region_size=len(result.region),
                final_heterogeneity=result.final_heterogeneity,
                termination=result.termination,
            ),
            args.stats,
        )
    if args.trace_csv or args.figure:
        from . import report

        if args.trace_csv:
            report.write_trace_csv(result, args.trace_csv)
        if args.figure:
            report.render_figure(img, result, args.seed, crit, args.figure)

    print(
        f"region_size={len(result.region)} iterations={result.iterations} "
        f"heterogeneity={_fmt_h(result.final_heterogeneity)}"
    )
    return 0


def _out_format(args) -> str:
    if args.format:
        return args.format
    return "pgm" if str(args.out).lower().endswith(".pgm") else "lipf"


def _cmd_synth(args) -> int:
    if args.synth_command == "two-plateau":
        from .lip import GrayScaleModel

        spec = PlateauSpec(args.width, args.height, args.val_a, args.val_b, args.ramp)
        out = make_two_plateau(spec, GrayScaleModel(args.m))
    else:
        img = read_image(args.input)
        if args.synth_command == "bias":
            _check_tone_arg(args.c, img, "--c")
            out = apply_lip_bias(img, args.c)
        elif args.synth_command == "gain":
            out = apply_lip_gain(img, args.lam)
        else:
            _check_tone_arg(args.c_left, img, "--c-left")
            _check_tone_arg(args.c_right, img, "--c-right")
            out = apply_lip_bias_gradient(img, args.c_left, args.c_right)
    write_image(out, args.out, _out_format(args))
    return 0


def _check_tone_arg(value: float, img: GrayImage, flag: str) -> None:
    # Bad command-line tones are configuration errors, not file errors.
    try:
        img.model.check_tone(value)
    except InvalidGrayToneError as exc:
        raise ConfigError(f"{flag}: {exc}") from None


def _cmd_metrics(args) -> int:
    img = read_image(args.input)
    mask = read_image(args.mask)
    if (mask.width, mask.height) != (img.width, img.height):
        raise ConfigError(
            f"mask is {mask.width}x{mask.height} but image is {img.width}x{img.height}"
        )
    coords = [
        (x, y) for y in range(img.height) for x in range(img.width) if mask.pixels[y, x] != 0
    ]
    if not coords:
        raise EmptyRegionError("mask selects no pixels")
    region = Region.from_coords(coords, img)
    hi, lo, model = region.sup, region.inf, img.model
    values = {
        "range": CriterionConfig("range", 0.0).contrast(hi, lo, model),
        "lip_add": CriterionConfig("lip-add", 0.0).contrast(hi, lo, model),
        "lip_mul": CriterionConfig("lip-mul", 1.0).contrast(hi, lo, model),
    }
    if math.isinf(values["lip_mul"]):
        values["lip_mul"] = "inf"
    print(json.dumps(values))
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "grow":
            return _cmd_grow(args)
        if args.command == "synth":
            return _cmd_synth(args)
        return _cmd_metrics(args)
    except (ConfigError, EmptyRegionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SeedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (FormatError, InvalidGrayToneError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
