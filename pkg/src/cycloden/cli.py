"""Command-line surface: machine-readable JSON for every computation.

Exit codes: 0 success, 1 usage or malformed expression, 2 unsupported
field or envelope violation, 3 probable dependent generators, 4 resource
cap exceeded.  Exact values are printed as reduced fraction strings;
decimal fields are advisory duplicates.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .config import Config
from .density import (density, density_bracket, density_multi_valuation,
                      density_valuation_exact)
from .divisibility import (extract_parameters, quotient_structure,
                           split_torsion)
from .errors import (CyclodenError, DependentGeneratorsError, EnvelopeError,
                     ParseError, ResourceLimitError, UnsupportedFieldError)
from .expr import format_element, parse_element
from .field import make_field, torsion_info
from .harness import estimate
from .kummer import cyclotomic_degree, prepare_degree_data, total_degree, tower_data
from .modular import is_prime


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        sys.exit(1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="cycloden", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--conductor", type=int, required=True, metavar="W",
                       help="conductor of the base field Q(zeta_W)")
        p.add_argument("--ell", type=int, required=True, metavar="L",
                       help="the fixed prime ell")
        p.add_argument("--gens", type=str, default="",
                       help="comma-separated element expressions (z = zeta_W)")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for every probabilistic subroutine")
        p.add_argument("--force", action="store_true",
                       help="override the performance envelope checks")

    common(sub.add_parser("params", help="divisibility parameters (d, h)"))

    p = sub.add_parser("degree", help="Kummer extension degree over K")
    common(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    common(sub.add_parser("density", help="exact density, closed form"))

    p = sub.add_parser("bracket", help="exact series bounds for the density")
    common(p)
    p.add_argument("--terms", type=int, required=True)

    p = sub.add_parser("structure", help="valuation data of G/(G meet (K^x)^(ell^n))")
    common(p)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("valuation", help="density of order-valuation exactly n")
    common(p)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("multi", help="joint order-valuation density per generator")
    common(p)
    p.add_argument("--valuations", type=str, required=True,
                   help="comma-separated valuations, one per generator")

    p = sub.add_parser("verify", help="empirical sweep against the exact density")
    common(p)
    p.add_argument("--bound", type=int, required=True, metavar="X")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--convention", choices=("all", "tested"), default="all")
    p.add_argument("--csv", type=str, default=None, metavar="PATH",
                   help="write per-prime records to PATH")
    return parser


def _frac(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _check_envelope(K, ell: int, rank: int, cfg: Config, force: bool):
    if not is_prime(ell):
        raise ParseError(f"--ell must be prime, got {ell}", 0)
    if force:
        return
    if K.degree > cfg.max_degree:
        raise EnvelopeError(
            f"field degree {K.degree} exceeds the envelope "
            f"({cfg.max_degree}); pass --force to override")
    if ell > cfg.max_ell:
        raise EnvelopeError(
            f"ell = {ell} exceeds the envelope ({cfg.max_ell}); "
            "pass --force to override")
    if rank > cfg.max_rank:
        raise EnvelopeError(
            f"{rank} generators exceed the envelope ({cfg.max_rank}); "
            "pass --force to override")


def _parse_gens(args, K):
    texts = [t.strip() for t in args.gens.split(",") if t.strip()]
    return [parse_element(t, K) for t in texts], texts


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    cfg = Config(seed=args.seed)
    try:
        doc = _dispatch(args, cfg)
    except ParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except (UnsupportedFieldError, EnvelopeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except DependentGeneratorsError as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except ResourceLimitError as err:
        print(f"error: {err}", file=sys.stderr)
        return 4
    except (ValueError, CyclodenError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    print(json.dumps(doc, indent=2))
    return 0


def _dispatch(args, cfg: Config) -> dict:
    K = make_field(args.conductor)
    gens, texts = _parse_gens(args, K)
    _check_envelope(K, args.ell, len(gens), cfg, args.force)
    doc = {
        "command": args.command,
        "field": str(K),
        "conductor": K.conductor,
        "ell": args.ell,
        "generators": texts,
    }
    handler = {
        "params": _cmd_params,
        "degree": _cmd_degree,
        "density": _cmd_density,
        "bracket": _cmd_bracket,
        "structure": _cmd_structure,
        "valuation": _cmd_valuation,
        "multi": _cmd_multi,
        "verify": _cmd_verify,
    }[args.command]
    doc.update(handler(args, cfg, K, gens))
    return doc


def _params_fields(params) -> dict:
    return {
        "rank": params.rank,
        "d": list(params.d),
        "h": list(params.h),
        "B": [format_element(b) for b in params.B],
        "zeta": [format_element(z) for z in params.zeta],
        "basis_change": [list(r) for r in params.basis_change],
        "unimodular": abs(params.det_basis_change()) == 1 if params.rank else True,
        "prescreen": params.prescreen,
    }


def _cmd_params(args, cfg, K, gens) -> dict:
    torsion, free = split_torsion(K, gens)
    params = extract_parameters(K, args.ell, free, cfg)
    out = _params_fields(params)
    out["torsion_dropped"] = [format_element(g) for g, _ in torsion]
    out["ell_torsion"] = any(order % args.ell == 0 for _, order in torsion)
    return out


def _cmd_degree(args, cfg, K, gens) -> dict:
    torsion, free = split_torsion(K, gens)
    if torsion:
        raise ValueError("degree requires torsion-free generators")
    data = prepare_degree_data(K, args.ell, free, cfg)
    total = total_degree(data, args.m, args.n)
    cyc = cyclotomic_degree(K, args.ell, args.m)
    out = {
        "m": args.m,
        "n": args.n,
        "total_degree": total,
        "cyclotomic_degree": cyc,
        "kummer_degree": total // cyc if args.m >= 1 else total,
    }
    if data.e is not None:
        out["e_factor"] = data.e
    return out


def _density_fields(result) -> dict:
    out = {
        "density": _frac(result.value),
        "density_decimal": float(result.value),
        "path": result.path,
    }
    if result.tower is not None:
        out["t"] = result.tower.t
        out["deg_ell"] = result.tower.deg_ell
        out["z"] = result.tower.z
    if result.tau is not None:
        out["tau"] = result.tau
        out["tau_i"] = list(result.tau_i)
    if result.params is not None:
        out["d"] = list(result.params.d)
        out["h"] = list(result.params.h)
    if result.c is not None:
        out["c"] = result.c
        out["sqrt_degree_k4"] = result.sqrt_degree_k4
        out["density_k4"] = _frac(result.sub.value)
    return out


def _cmd_density(args, cfg, K, gens) -> dict:
    return _density_fields(density(K, args.ell, gens, cfg))


def _cmd_bracket(args, cfg, K, gens) -> dict:
    bracket = density_bracket(K, args.ell, gens, args.terms, cfg)
    return {
        "terms": bracket.terms,
        "lower": _frac(bracket.lower),
        "upper": _frac(bracket.upper),
        "lower_decimal": float(bracket.lower),
        "upper_decimal": float(bracket.upper),
        "width": _frac(bracket.upper - bracket.lower),
    }


def _cmd_structure(args, cfg, K, gens) -> dict:
    torsion, free = split_torsion(K, gens)
    if torsion:
        raise ValueError("structure requires torsion-free generators")
    params = extract_parameters(K, args.ell, free, cfg)
    info = torsion_info(K, args.ell)
    q = quotient_structure(params, info.z, args.n)
    return {
        "n": q.n,
        "z": info.z,
        "delta": list(q.delta),
        "vH": q.vH,
        "total_valuation": q.total_valuation,
        "index": args.ell ** q.total_valuation,
        "d": list(params.d),
        "h": list(params.h),
    }


def _cmd_valuation(args, cfg, K, gens) -> dict:
    value = density_valuation_exact(K, args.ell, gens, args.n, cfg)
    return {
        "n": args.n,
        "density": _frac(value),
        "density_decimal": float(value),
    }


def _cmd_multi(args, cfg, K, gens) -> dict:
    vals = [int(v.strip()) for v in args.valuations.split(",") if v.strip()]
    if len(vals) != len(gens):
        raise ValueError(
            f"got {len(gens)} generators but {len(vals)} valuations")
    result = density_multi_valuation(K, args.ell, list(zip(gens, vals)), cfg)
    return {
        "valuations": list(result.valuations),
        "density": _frac(result.value),
        "density_decimal": float(result.value),
        "folded_zero_indices": list(result.folded),
    }


def _cmd_verify(args, cfg, K, gens) -> dict:
    report = estimate(K, args.ell, gens, args.bound,
                      convention=args.convention, jobs=args.jobs, cfg=cfg,
                      csv_path=args.csv)
    return report.to_json()


if __name__ == "__main__":
    sys.exit(main())
