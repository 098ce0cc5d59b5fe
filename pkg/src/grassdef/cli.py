"""Command line interface.

Subcommands: bound, secant, oscproj, tangproj, schubert (dim | contains |
sing | mult | degree), classify, chambers, spherical, effcone,
limit-hyperplane.  Every subcommand accepts --json for machine readable
output; the JSON is byte deterministic (sorted keys, no whitespace,
elapsed_ms always null).

Exit codes: 0 on success, 2 on invalid arguments or violated preconditions,
3 when a computation is refused because it exceeds the size caps.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass
from math import factorial

from .bounds import aop_bound, grass_bound, linear_bound, sv_bound
from .birational import (
    Ambient,
    classify_fano,
    effective_cone,
    mds_status,
    mori_chambers_g1n1,
    spherical_status,
)
from .indices import GrassShape, SegreVeroneseShape
from .oracle import (
    DEFAULT_PRIME,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    CapExceeded,
    limit_hyperplane_coeffs,
    osculating_projection_finite,
    secant_dimension,
    tangential_projection_finite,
)
from .schubert import (
    FerrersDiagram,
    Partition,
    complementary,
    contains,
    grass_degree,
    multiplicity,
    schubert_codim,
    schubert_dim,
    singular_locus,
)


@dataclass
class RunConfig:
    """Run parameters shared by the numerical subcommands."""

    prime: int | str = DEFAULT_PRIME
    trials: int = DEFAULT_TRIALS
    seed: int = DEFAULT_SEED
    output: str = "text"
    max_coords: int = 4000
    max_terms: int = 500_000


def _dump(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _emit(config: RunConfig, text: str, payload) -> int:
    print(_dump(payload) if config.output == "json" else text)
    return 0


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"expected a comma separated list of integers, got {text!r}")


def _parse_sv(text: str) -> SegreVeroneseShape:
    head, sep, tail = text.partition(":")
    if not sep:
        raise ValueError(
            "expected dimensions and degrees separated by a colon, "
            "for example 1,1:2,2"
        )
    return SegreVeroneseShape(_parse_ints(head), _parse_ints(tail))


def _resolve_shape(args) -> GrassShape | SegreVeroneseShape:
    if getattr(args, "grass", None) is not None:
        r, n = args.grass
        return GrassShape(r, n)
    return _parse_sv(args.sv)


def _resolve_seed(args) -> int:
    raw = getattr(args, "seed", None)
    if raw is None:
        raw = os.environ.get("GRASSDEF_SEED")
    if raw is None:
        return DEFAULT_SEED
    if raw == "random":
        return random.SystemRandom().randrange(1 << 64)
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"seed must be an integer or 'random', got {raw!r}")


def _resolve_prime(args) -> int | str:
    raw = getattr(args, "prime", None)
    if raw is None:
        return DEFAULT_PRIME
    if raw == "rational":
        return "rational"
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"prime must be an integer or 'rational', got {raw!r}")


def _make_config(args) -> RunConfig:
    trials = getattr(args, "trials", None)
    return RunConfig(
        prime=_resolve_prime(args),
        trials=DEFAULT_TRIALS if trials is None else trials,
        seed=_resolve_seed(args),
        output="json" if getattr(args, "json", False) else "text",
    )


def _check_caps(shape, config: RunConfig) -> None:
    coords = shape.num_coords
    if coords > config.max_coords:
        raise CapExceeded(
            f"{shape.label} has {coords} coordinates, above the cap of "
            f"{config.max_coords}"
        )
    terms = coords
    if isinstance(shape, GrassShape):
        terms = coords * factorial(shape.r + 1)
    if terms > config.max_terms:
        raise CapExceeded(
            f"the parametrization of {shape.label} has about {terms} terms, "
            f"above the cap of {config.max_terms}"
        )


# ---------------------------------------------------------------------------
# subcommands


def cmd_bound(args, config: RunConfig) -> int:
    if getattr(args, "grass", None) is not None:
        r, n = args.grass
        rule = args.rule
        report = {"grass": grass_bound, "linear": linear_bound, "aop": aop_bound}[rule](r, n)
        label = f"G({r},{n})"
    else:
        shape = _parse_sv(args.sv)
        rule = "sv"
        report = sv_bound(shape)
        label = shape.label
    text = f"{label}: {report.statement} (branch {report.branch}, raw {report.raw_value})"
    payload = {
        "shape": label,
        "rule": rule,
        "max_h": report.max_h,
        "raw_value": report.raw_value,
        "branch": report.branch,
        "statement": report.statement,
    }
    return _emit(config, text, payload)


def cmd_secant(args, config: RunConfig) -> int:
    shape = _resolve_shape(args)
    _check_caps(shape, config)
    cert = secant_dimension(
        shape, args.h, trials=config.trials, prime=config.prime, seed=config.seed
    )
    text = (
        f"{cert.shape} h={cert.h}: expected {cert.expected_dim}, "
        f"computed {cert.computed_dim}, defect {cert.defect} -> {cert.verdict}"
    )
    if cert.note:
        text += f"\n{cert.note}"
    return _emit(config, text, cert.to_dict())


def cmd_oscproj(args, config: RunConfig) -> int:
    shape = _resolve_shape(args)
    _check_caps(shape, config)
    orders = _parse_ints(args.orders)
    if isinstance(shape, GrassShape):
        centers = [_parse_ints(part) for part in args.centers.split(";")]
    else:
        centers = list(_parse_ints(args.centers.replace(";", ",")))
    if len(centers) != len(orders):
        raise ValueError(
            f"{len(centers)} centers but {len(orders)} orders were given"
        )
    report = osculating_projection_finite(
        shape,
        list(zip(centers, orders)),
        trials=config.trials,
        prime=config.prime,
        seed=config.seed,
    )
    text = (
        f"{report.shape} osculating projection: survivors {report.survivors}, "
        f"restricted rank {report.restricted_rank} -> {report.status}"
    )
    if report.note:
        text += f"\n{report.note}"
    payload = {
        "shape": report.shape,
        "kind": report.kind,
        "status": report.status,
        "variety_dim": report.variety_dim,
        "ambient_dim": report.ambient_dim,
        "survivors": report.survivors,
        "restricted_rank": report.restricted_rank,
        "note": report.note,
    }
    return _emit(config, text, payload)


def cmd_tangproj(args, config: RunConfig) -> int:
    shape = _resolve_shape(args)
    _check_caps(shape, config)
    report = tangential_projection_finite(
        shape, args.h, trials=config.trials, prime=config.prime, seed=config.seed
    )
    text = (
        f"{report.shape} tangential projection at h={args.h}: "
        f"center rank {report.center_rank}, joint rank {report.joint_rank} "
        f"-> {report.status}"
    )
    if report.note:
        text += f"\n{report.note}"
    payload = {
        "shape": report.shape,
        "kind": report.kind,
        "h": args.h,
        "status": report.status,
        "variety_dim": report.variety_dim,
        "ambient_dim": report.ambient_dim,
        "center_rank": report.center_rank,
        "joint_rank": report.joint_rank,
        "note": report.note,
    }
    return _emit(config, text, payload)


def cmd_schubert(args, config: RunConfig) -> int:
    sub = args.sub
    if sub == "degree":
        value = grass_degree(args.r, args.n)
        return _emit(config, str(value), {"r": args.r, "n": args.n, "degree": value})
    lam = Partition(args.r, args.n, _parse_ints(args.lam))
    if sub == "dim":
        picture = FerrersDiagram.of_partition(lam).render()
        text = (
            f"Sigma_{lam.label} in G({lam.r},{lam.n}): "
            f"dim {schubert_dim(lam)}, codim {schubert_codim(lam)}\n{picture}"
        )
        payload = {
            "r": lam.r,
            "n": lam.n,
            "lambda": list(lam.parts),
            "complementary": list(complementary(lam)),
            "dim": schubert_dim(lam),
            "codim": schubert_codim(lam),
        }
        return _emit(config, text, payload)
    if sub == "sing":
        components = singular_locus(lam)
        text = "\n".join(c.label for c in components) if components else "smooth"
        payload = {
            "lambda": list(lam.parts),
            "components": [list(c.parts) for c in components],
        }
        return _emit(config, text, payload)
    mu = Partition(args.r, args.n, _parse_ints(args.mu))
    if sub == "contains":
        value = contains(lam, mu)
        return _emit(
            config,
            str(value),
            {"lambda": list(lam.parts), "mu": list(mu.parts), "contains": value},
        )
    value = multiplicity(lam, mu)
    return _emit(
        config,
        str(value),
        {"lambda": list(lam.parts), "mu": list(mu.parts), "multiplicity": value},
    )


def cmd_classify(args, config: RunConfig) -> int:
    k = args.k
    if getattr(args, "grass", None) is not None:
        r, n = args.grass
        ambient = Ambient.grassmannian(r, n)
    elif getattr(args, "quadric", None) is not None:
        ambient = Ambient.quadric(args.quadric)
    else:
        ambient = Ambient.projective(args.proj)
    report = classify_fano(ambient, k)
    lines = [
        f"{ambient.label} blown up at k={k} general points",
        f"anticanonical {report.anticanonical_class.name}, "
        f"top self-intersection {report.top_anticanonical}",
    ]
    payload = {
        "ambient": ambient.label,
        "k": k,
        "verdict": report.verdict,
        "source": report.source,
        "anticanonical": report.anticanonical_class.name,
        "top_anticanonical": report.top_anticanonical,
        "min_pairing": report.min_pairing,
        "cone_status": report.cone.status,
        "spherical": None,
        "mds": None,
    }
    if ambient.kind == "quadric":
        lines.append(f"verdict: {report.verdict}")
    else:
        r0 = ambient.r if ambient.kind == "grassmannian" else 0
        mds = mds_status(r0, ambient.n, k)
        lines.append(f"verdict: {report.verdict}, MDS={mds.summary}")
        payload["mds"] = {"verdict": mds.verdict, "reason": mds.reason, "note": mds.note}
        if k >= 1:
            sph = spherical_status(r0, ambient.n, k)
            word = "yes" if sph.spherical else "no"
            lines.append(f"spherical: {word} (rule={sph.rule}, f={sph.f_value})")
            payload["spherical"] = {
                "spherical": sph.spherical,
                "rule": sph.rule,
                "f_value": sph.f_value,
            }
    return _emit(config, "\n".join(lines), payload)


def cmd_chambers(args, config: RunConfig) -> int:
    dec = mori_chambers_g1n1(args.n)
    lines = [
        f"Mori chamber decomposition of G(1,{dec.n}) blown up at one point",
        "walls: " + ", ".join(w.name for w in dec.walls),
    ]
    for chamber in dec.chambers:
        a, b = chamber.rays
        lines.append(f"chamber [{a.name}, {b.name}] model {chamber.model}: {chamber.contraction}")
    lines.append(f"nef [{dec.nef[0].name}, {dec.nef[1].name}]")
    lines.append(f"movable [{dec.movable[0].name}, {dec.movable[1].name}]")
    lines.append(f"effective [{dec.effective[0].name}, {dec.effective[1].name}]")
    lines.append(f"flip model Fano: {'yes' if dec.fano_flip_model else 'no'}")
    if dec.flip_anticanonical is not None:
        lines.append(f"flip anticanonical {dec.flip_anticanonical.name}")
    if dec.fibration_target is not None:
        lines.append(f"fibration target {dec.fibration_target}")
    if dec.note:
        lines.append(dec.note)
    payload = {
        "n": dec.n,
        "walls": [w.name for w in dec.walls],
        "chambers": [
            {
                "rays": [c.rays[0].name, c.rays[1].name],
                "model": c.model,
                "contraction": c.contraction,
            }
            for c in dec.chambers
        ],
        "nef": [dec.nef[0].name, dec.nef[1].name],
        "movable": [dec.movable[0].name, dec.movable[1].name],
        "effective": [dec.effective[0].name, dec.effective[1].name],
        "fano_flip_model": dec.fano_flip_model,
        "flip_anticanonical": (
            dec.flip_anticanonical.name if dec.flip_anticanonical is not None else None
        ),
        "fibration_target": dec.fibration_target,
        "note": dec.note,
    }
    return _emit(config, "\n".join(lines), payload)


def cmd_spherical(args, config: RunConfig) -> int:
    if getattr(args, "grass", None) is not None:
        r, n = args.grass
    else:
        r, n = 0, args.proj
    report = spherical_status(r, n, args.k)
    label = f"G({report.r},{report.n})" if report.r >= 1 else f"P{report.n}"
    word = "spherical" if report.spherical else "not spherical"
    text = (
        f"{label} blown up at k={report.k} general points: {word} "
        f"(rule={report.rule}, f={report.f_value})"
    )
    if report.evidence:
        text += f"\n{report.evidence}"
    payload = {
        "r": report.r,
        "n": report.n,
        "k": report.k,
        "spherical": report.spherical,
        "rule": report.rule,
        "f_value": report.f_value,
        "evidence": report.evidence,
    }
    return _emit(config, text, payload)


def cmd_effcone(args, config: RunConfig) -> int:
    r, n = args.grass
    cone = effective_cone(r, n, args.k)
    label = f"G({r},{n}) blown up at k={args.k} general points"
    if cone.status == "unknown":
        text = f"Eff of {label}: unknown"
    else:
        names = ", ".join(d.name for d in cone.generators)
        text = f"Eff of {label}: {names} [{cone.status}, {cone.provenance}]"
    if cone.note:
        text += f"\n{cone.note}"
    payload = {
        "r": r,
        "n": n,
        "k": args.k,
        "status": cone.status,
        "provenance": cone.provenance,
        "generators": [d.name for d in cone.generators],
        "note": cone.note,
    }
    return _emit(config, text, payload)


def cmd_limit_hyperplane(args, config: RunConfig) -> int:
    section = limit_hyperplane_coeffs(args.D, args.s, args.sbar, args.k1, args.k2)
    text = "coefficients: (" + ", ".join(str(c) for c in section.coeffs) + ")"
    if section.trivial:
        text += " [trivial]"
    payload = {"coeffs": list(section.coeffs), "trivial": section.trivial}
    return _emit(config, text, payload)


# ---------------------------------------------------------------------------
# parser


def _add_shape_flags(parser, kinds: tuple[str, ...] = ("grass", "sv")) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    if "grass" in kinds:
        group.add_argument("--grass", nargs=2, type=int, metavar=("R", "N"))
    if "sv" in kinds:
        group.add_argument("--sv", metavar="N1,..:D1,..")
    if "quadric" in kinds:
        group.add_argument("--quadric", type=int, metavar="N")
    if "proj" in kinds:
        group.add_argument("--proj", type=int, metavar="N")


def _add_oracle_flags(parser) -> None:
    parser.add_argument("--prime", help="62 bit prime modulus, or 'rational'")
    parser.add_argument("--trials", type=int, help="independent trials, in [1, 64]")
    parser.add_argument("--seed", help="integer seed, or 'random'; defaults to GRASSDEF_SEED")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grassdef",
        description="secant defectivity bounds and blow-up classification "
        "for Grassmannians and Segre-Veronese varieties",
    )
    parser.add_argument("--json", action="store_true", help="machine readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="non-defectivity bounds")
    _add_shape_flags(p)
    p.add_argument("--rule", choices=("grass", "linear", "aop"), default="grass")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("secant", help="secant variety dimension oracle")
    _add_shape_flags(p)
    p.add_argument("--h", type=int, required=True, help="number of general points")
    _add_oracle_flags(p)
    p.set_defaults(func=cmd_secant)

    p = sub.add_parser("oscproj", help="finiteness of osculating projections")
    _add_shape_flags(p)
    p.add_argument(
        "--centers",
        required=True,
        help="Grassmannian: index tuples like 0,1,2;3,4,5 - "
        "Segre-Veronese: diagonal values like 0;1",
    )
    p.add_argument("--orders", required=True, help="osculating orders like 1,1")
    _add_oracle_flags(p)
    p.set_defaults(func=cmd_oscproj)

    p = sub.add_parser("tangproj", help="finiteness of tangential projections")
    _add_shape_flags(p)
    p.add_argument("--h", type=int, required=True, help="number of general tangent spaces")
    _add_oracle_flags(p)
    p.set_defaults(func=cmd_tangproj)

    p = sub.add_parser("schubert", help="Schubert variety computations")
    ssub = p.add_subparsers(dest="sub", required=True)
    for name, needs_lambda, needs_mu in (
        ("dim", True, False),
        ("contains", True, True),
        ("sing", True, False),
        ("mult", True, True),
        ("degree", False, False),
    ):
        q = ssub.add_parser(name)
        q.add_argument("--r", type=int, required=True)
        q.add_argument("--n", type=int, required=True)
        if needs_lambda:
            q.add_argument("--lambda", dest="lam", required=True, metavar="A1,A2,..")
        if needs_mu:
            q.add_argument("--mu", required=True, metavar="B1,B2,..")
        q.set_defaults(func=cmd_schubert)

    p = sub.add_parser("classify", help="Fano, spherical and MDS classification")
    _add_shape_flags(p, kinds=("grass", "quadric", "proj"))
    p.add_argument("--k", type=int, required=True, help="number of blown up points")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("chambers", help="Mori chambers of one-point blow-ups of G(1,n)")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_chambers)

    p = sub.add_parser("spherical", help="spherical status of blow-ups")
    _add_shape_flags(p, kinds=("grass", "proj"))
    p.add_argument("--k", type=int, required=True, help="number of blown up points")
    p.set_defaults(func=cmd_spherical)

    p = sub.add_parser("effcone", help="known effective cones of blown up Grassmannians")
    _add_shape_flags(p, kinds=("grass",))
    p.add_argument("--k", type=int, required=True, help="number of blown up points")
    p.set_defaults(func=cmd_effcone)

    p = sub.add_parser("limit-hyperplane", help="limit hyperplane coefficients")
    p.add_argument("--D", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--sbar", type=int, required=True)
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.set_defaults(func=cmd_limit_hyperplane)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = _make_config(args)
        return args.func(args, config)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 3
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
