"""
Command-line front end

Example:
  k3-syzygy invariants fixtures/toy_example.json --syzygy 3
  k3-syzygy stability fixtures/fermat_quartic.json fixtures/w2.json --no-timings
"""

import argparse
import dataclasses
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Tuple

from k3_syzygy import __version__
from k3_syzygy.cli.io import (
    dump_json,
    export_matrix,
    load_form_space,
    load_invariants,
    load_surface,
    read_json,
    write_json,
)
from k3_syzygy.errors import (
    EXIT_INPUT,
    EXIT_INTERNAL,
    EXIT_NOT_COHOMOLOGICALLY_STABLE,
    EXIT_OK,
    EXIT_UNSTABLE,
    InputError,
    K3SyzygyError,
)
from k3_syzygy.koszul import (
    basepoint_check,
    h0_s_dual_linebundle,
    h0_wedge_syzygy_result,
    koszul_matrix,
    koszul_shapes,
)
from k3_syzygy.lattice import (
    c1_squared,
    chi_end,
    doubling_check_extension,
    doubling_check_syzygy,
    euler_characteristic,
    extension_fiber_dim,
    extension_transform,
    extension_u,
    slope,
    spl_dim,
    spl_dim_via_syzygy_sequence,
    syzygy_fiber_dim,
    syzygy_transform,
)
from k3_syzygy.linalg import choose_prime, validate_prime
from k3_syzygy.ring import hilbert_function
from k3_syzygy.settings import RunConfig, load_run_config
from k3_syzygy.stability import (
    COHOMOLOGICALLY_STABLE,
    UNSTABLE,
    check_cohomological_stability,
    rational_to_dict,
    search_stable_subspace,
)

Result = Tuple[Dict[str, Any], int]


class JsonArgumentParser(argparse.ArgumentParser):
    """Usage errors go to stderr as a JSON object, like every other failure."""

    def error(self, message: str):
        sys.stderr.write(dump_json({"error": "UsageError", "message": message}))
        raise SystemExit(EXIT_INPUT)


def cmd_invariants(config: RunConfig) -> Result:
    lattice, inv = load_invariants(read_json(config.input_paths[0]))
    payload: Dict[str, Any] = {
        "input": {**lattice.to_dict(), **inv.to_dict()},
        "c1_squared": c1_squared(inv, lattice),
        "chi": euler_characteristic(inv, lattice),
        "chi_end": chi_end(inv, lattice),
        "spl_dim": spl_dim(inv, lattice),
        "slope": rational_to_dict(slope(inv, lattice)),
    }
    w = config.options.get("syzygy")
    if w is not None:
        target = syzygy_transform(inv, lattice, w, config.formal)
        section = {
            "w": w,
            "transformed": target.to_dict(),
            "transformed_chi": euler_characteristic(target, lattice),
            "transformed_spl_dim": spl_dim(target, lattice),
            "transformed_slope": rational_to_dict(slope(target, lattice)),
            "fiber_dim": syzygy_fiber_dim(inv, lattice, w, config.formal),
            "doubling": doubling_check_syzygy(inv, lattice, w, config.formal).to_dict(),
        }
        if inv.rank == 1:
            section["ext1_via_sequence"] = spl_dim_via_syzygy_sequence(inv, lattice, w, config.formal)
        payload["syzygy"] = section
    v = config.options.get("extension")
    if v is not None:
        target = extension_transform(inv, lattice, v, config.formal)
        payload["extension"] = {
            "v": v,
            "u": extension_u(inv, lattice),
            "transformed": target.to_dict(),
            "transformed_spl_dim": spl_dim(target, lattice),
            "fiber_dim": extension_fiber_dim(inv, lattice, v, config.formal),
            "doubling": doubling_check_extension(inv, lattice, v, config.formal).to_dict(),
        }
    return payload, EXIT_OK


def _surface_and_forms(config: RunConfig):
    ring = load_surface(read_json(config.input_paths[0]))
    W = load_form_space(read_json(config.input_paths[1]), ring.variable_names)
    return ring, W


def cmd_stability(config: RunConfig) -> Result:
    ring, W = _surface_and_forms(config)
    certificate = check_cohomological_stability(
        ring,
        W,
        prime=config.prime,
        exact=config.exact_mode,
        max_degree=config.max_degree,
        workers=config.workers,
    )
    if certificate.verdict == COHOMOLOGICALLY_STABLE:
        code = EXIT_OK
    elif certificate.verdict == UNSTABLE:
        code = EXIT_UNSTABLE
    else:
        code = EXIT_NOT_COHOMOLOGICALLY_STABLE
    return certificate.to_dict(config.timings), code


def cmd_h0(config: RunConfig) -> Result:
    ring, W = _surface_and_forms(config)
    q, t = config.options["q"], config.options["t"]
    target_dim, source_dim = koszul_shapes(ring, W, q, t)
    result = h0_wedge_syzygy_result(ring, W, q, t, config.prime, config.exact_mode)
    payload = {
        "q": q,
        "t": t,
        "h0": result.kernel_dim,
        "matrix_shape": [target_dim, source_dim],
        "backend": result.to_dict(config.timings),
        "h0_dual_twist": h0_s_dual_linebundle(ring, W.degree, W.w, t),
    }
    export_path = config.options.get("export")
    if export_path:
        write_json(export_path, export_matrix(koszul_matrix(ring, W, q, t).matrix))
        payload["exported_to"] = export_path
    return payload, EXIT_OK


def cmd_basepoints(config: RunConfig) -> Result:
    ring, W = _surface_and_forms(config)
    result = basepoint_check(ring, W, config.max_degree, config.prime)
    return {"form_space": W.describe(ring.variable_names), **result.to_dict()}, EXIT_OK


def cmd_ring_dim(config: RunConfig) -> Result:
    ring = load_surface(read_json(config.input_paths[0]))
    t_max = config.options["t_max"]
    if t_max < 0:
        raise InputError("--t-max must be non-negative", t_max=t_max)
    return {"surface": ring.describe(), "hilbert_function": hilbert_function(ring, t_max)}, EXIT_OK


def cmd_experiment(config: RunConfig) -> Result:
    ring = load_surface(read_json(config.input_paths[0]))
    report = search_stable_subspace(
        ring,
        config.options["degree"],
        config.options["w"],
        config.options["attempts"],
        config.rng("experiment"),
        prime=config.prime,
        max_degree=config.max_degree,
        workers=config.workers,
    )
    return report.to_dict(config.timings), EXIT_OK


COMMANDS: Dict[str, Callable[[RunConfig], Result]] = {
    "invariants": cmd_invariants,
    "stability": cmd_stability,
    "h0": cmd_h0,
    "basepoints": cmd_basepoints,
    "ring-dim": cmd_ring_dim,
    "experiment": cmd_experiment,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, default=None, help="prime for modular ranks")
    common.add_argument("--random-prime", action="store_true", help="draw the prime from the seed")
    common.add_argument("--exact", action="store_true", help="recompute every rank over Q")
    common.add_argument("--max-degree", type=int, default=None, help="base-point scan bound")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--formal", action="store_true", help="skip w <= chi and v <= u")
    common.add_argument("--workers", type=int, default=None)
    common.add_argument("--no-timings", action="store_true", help="omit wall-clock fields")
    common.add_argument("--verbose", action="store_true")
    common.add_argument("--debug", action="store_true")

    ap = JsonArgumentParser(prog="k3-syzygy", description="K3 syzygy bundle toolkit")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common], help="chi, spl_dim and transforms")
    p.add_argument("invariants_json")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--syzygy", type=int, metavar="W", default=None)
    group.add_argument("--extension", type=int, metavar="V", default=None)

    for name, text in (
        ("stability", "cohomological stability certificate"),
        ("basepoints", "base-point freeness certificate"),
        ("h0", "kernel of one Koszul map"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("surface_json")
        p.add_argument("forms_json")
        if name == "h0":
            p.add_argument("--q", type=int, required=True)
            p.add_argument("--t", type=int, required=True)
            p.add_argument("--export", default=None, metavar="PATH")

    p = sub.add_parser("ring-dim", parents=[common], help="Hilbert function of the surface")
    p.add_argument("surface_json")
    p.add_argument("--t-max", type=int, default=12)

    p = sub.add_parser("experiment", parents=[common], help="random monomial form spaces")
    p.add_argument("surface_json")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--attempts", type=int, default=20)
    return ap


def config_from_args(args: argparse.Namespace) -> RunConfig:
    paths = [getattr(args, k) for k in ("invariants_json", "surface_json", "forms_json") if hasattr(args, k)]
    options = {
        k: getattr(args, k)
        for k in ("syzygy", "extension", "q", "t", "export", "t_max", "degree", "w", "attempts")
        if hasattr(args, k)
    }
    log_level = "DEBUG" if args.debug else "INFO" if args.verbose else None
    config = load_run_config(
        args.command,
        input_paths=paths,
        prime=args.prime,
        exact_mode=args.exact,
        max_degree=args.max_degree,
        seed=args.seed,
        formal=args.formal,
        workers=args.workers,
        log_level=log_level,
        timings=not args.no_timings,
        options=options,
    )
    if args.random_prime:
        return dataclasses.replace(config, prime=choose_prime(config.rng("prime")))
    validate_prime(config.prime)
    if not isinstance(logging.getLevelName(config.log_level.upper()), int):
        raise InputError(f"unknown log level {config.log_level!r}")
    return config


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        config = config_from_args(args)
        logging.basicConfig(
            level=config.log_level.upper(),
            format="%(asctime)s - %(levelname)s - %(message)s",
            stream=sys.stderr,
        )
        logger = logging.getLogger("cli")
        logger.info(f"Running {config.command} on {config.input_paths} with prime {config.prime}")
        payload, code = COMMANDS[config.command](config)
    except K3SyzygyError as exc:
        sys.stderr.write(dump_json(exc.to_dict()))
        return exc.exit_code
    except Exception as exc:  # anything else is a bug
        logging.getLogger("cli").exception("Unexpected failure")
        sys.stderr.write(dump_json({"error": type(exc).__name__, "message": str(exc)}))
        return EXIT_INTERNAL
    sys.stdout.write(dump_json(payload))
    return code


if __name__ == "__main__":
    raise SystemExit(main())
