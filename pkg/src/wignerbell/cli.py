"""Command-line front end.

Exit codes: 0 success, 1 a self-check failed, 2 usage or input error.
All configuration comes from flags; nothing is read from the environment.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import bell, entanglement, lhv, poincare
from .little_group import wigner_angle_perpendicular, wigner_rotation
from .minkowski import BETA_MAX, boost_along
from .states import BellKind, bell_state, boost_state, transform_bell_closed_form

CSV_FIELDS = (
    "beta",
    "beta_prime",
    "wigner_angle_rad",
    "chsh_fixed",
    "chsh_optimal",
    "entropy",
    "schmidt_lambda1",
    "schmidt_lambda2",
)

X_AXIS = (1.0, 0.0, 0.0)


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class SweepConfig:
    beta_min: float = 0.0
    beta_max: float = 0.99
    beta_steps: int = 20
    beta_prime_min: float = 0.0
    beta_prime_max: float = 0.99
    beta_prime_steps: int = 20
    mass: float = 1.0
    output_path: str = "-"
    precision: int = 12
    kind: BellKind = BellKind.PSI_MINUS

    def __post_init__(self):
        for lo, hi, steps, name in (
            (self.beta_min, self.beta_max, self.beta_steps, "beta"),
            (self.beta_prime_min, self.beta_prime_max, self.beta_prime_steps, "beta-prime"),
        ):
            if not 0.0 <= lo <= hi:
                raise UsageError(f"--{name}-min/max must satisfy 0 <= min <= max")
            if hi > BETA_MAX:
                raise UsageError(f"--{name}-max: velocity must be < 1, got {hi}")
            if steps < 1:
                raise UsageError(f"--{name}-steps must be at least 1")
        if not self.mass > 0:
            raise UsageError("--mass must be positive")
        if not 0 <= self.precision <= 17:
            raise UsageError("--precision must be between 0 and 17")

    def betas(self) -> np.ndarray:
        return np.linspace(self.beta_min, self.beta_max, self.beta_steps)

    def beta_primes(self) -> np.ndarray:
        return np.linspace(self.beta_prime_min, self.beta_prime_max, self.beta_prime_steps)


def sweep_row(beta: float, beta_prime: float, kind: BellKind, mass: float = 1.0) -> dict[str, float]:
    state = boost_state(bell_state(kind, beta, mass), boost_along(X_AXIS, beta_prime))
    sd = entanglement.schmidt(state)
    return {
        "beta": beta,
        "beta_prime": beta_prime,
        "wigner_angle_rad": wigner_angle_perpendicular(beta, beta_prime),
        "chsh_fixed": bell.chsh(state, bell.BOOSTED_SINGLET_DIRECTIONS),
        "chsh_optimal": bell.optimal_chsh(state).value,
        "entropy": entanglement.von_neumann_entropy(state),
        "schmidt_lambda1": float(sd.coefficients[0]),
        "schmidt_lambda2": float(sd.coefficients[1]),
    }


def sweep(config: SweepConfig) -> list[dict[str, float]]:
    """Rows in output order: beta ascending (outer), beta_prime ascending (inner)."""
    return [
        sweep_row(float(b), float(bp), config.kind, config.mass)
        for b in config.betas()
        for bp in config.beta_primes()
    ]


def format_csv(rows: Sequence[dict[str, float]], precision: int) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for row in rows:
        # + 0.0 turns -0.0 into 0.0
        writer.writerow([f"{row[k] + 0.0:.{precision}f}" for k in CSV_FIELDS])
    return buf.getvalue()


def _fmt_vec(v, digits: int = 6) -> str:
    return "(" + ", ".join(f"{float(x) + 0.0:.{digits}f}" for x in v) + ")"


def _fmt_amps(amps) -> str:
    parts = []
    for z in amps:
        z = complex(z)
        if abs(z.imag) < 1e-15:
            parts.append(f"{z.real + 0.0:+.10f}")
        else:
            parts.append(f"{z.real + 0.0:+.10f}{z.imag + 0.0:+.10f}j")
    return "[" + ", ".join(parts) + "]"


def cmd_wigner_angle(args, out) -> int:
    closed = wigner_angle_perpendicular(args.beta, args.beta_prime)
    state = bell_state(BellKind.PHI_PLUS, args.beta, args.mass)
    rot = wigner_rotation(boost_along(X_AXIS, args.beta_prime), state.p1)
    numeric = rot.wigner_angle((0.0, -1.0, 0.0))
    print(f"beta = {args.beta}, beta' = {args.beta_prime}", file=out)
    print(f"theta_W closed form   = {closed + 0.0:+.12f} rad", file=out)
    print(f"theta_W matrix oracle = {numeric + 0.0:+.12f} rad", file=out)
    print(f"rotation axis (right-handed angle {rot.angle:.12f}) = {_fmt_vec(rot.axis)}", file=out)
    print(f"difference            = {abs(closed - numeric):.3e}", file=out)
    return 0


def cmd_transform(args, out) -> int:
    kind = args.kind
    before = bell_state(kind, args.beta, args.mass)
    after = boost_state(before, boost_along(X_AXIS, args.beta_prime))
    theta = wigner_angle_perpendicular(args.beta, args.beta_prime)
    closed = transform_bell_closed_form(kind, theta)
    print(f"state {kind.value}, beta = {args.beta}, beta' = {args.beta_prime}, theta_W = {theta:+.12f} rad", file=out)
    print("basis order: uu, ud, du, dd", file=out)
    print(f"amplitudes before     = {_fmt_amps(before.amplitudes)}", file=out)
    print(f"amplitudes boost_state = {_fmt_amps(after.amplitudes)}", file=out)
    print(f"amplitudes closed form = {_fmt_amps(closed)}", file=out)
    print(f"max difference         = {float(np.abs(after.amplitudes - closed).max()):.3e}", file=out)
    print(f"momentum 1: {_fmt_vec(before.p1.p)} -> {_fmt_vec(after.p1.p)}", file=out)
    print(f"momentum 2: {_fmt_vec(before.p2.p)} -> {_fmt_vec(after.p2.p)}", file=out)
    print(f"kinematic factor       = {after.kinematic_factor:.12f}", file=out)
    print(
        f"entropy before -> after = {entanglement.von_neumann_entropy(before):.12f} -> "
        f"{entanglement.von_neumann_entropy(after):.12f}",
        file=out,
    )
    return 0


def cmd_chsh_sweep(args, out) -> int:
    config = SweepConfig(
        beta_min=args.beta_min,
        beta_max=args.beta_max,
        beta_steps=args.beta_steps,
        beta_prime_min=args.beta_prime_min,
        beta_prime_max=args.beta_prime_max,
        beta_prime_steps=args.beta_prime_steps,
        mass=args.mass,
        output_path=args.output,
        precision=args.precision,
        kind=args.state,
    )
    text = format_csv(sweep(config), config.precision)
    if config.output_path == "-":
        out.write(text)
        return 0
    try:
        with open(config.output_path, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {config.output_path}: {exc.strerror or exc}", file=sys.stderr)
        return 2
    return 0


def cmd_lhv_sim(args, out) -> int:
    theta = args.angle
    if not 0.0 <= theta <= math.pi:
        raise UsageError(f"--angle must lie in [0, pi], got {theta}")
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    a = (0.0, 0.0, 1.0)
    b = (math.sin(theta), 0.0, math.cos(theta))
    est = lhv.lhv_singlet_mc(a, b, args.samples, args.seed, streams=args.streams)
    print(f"angle          = {theta:.12f} rad", file=out)
    print(f"samples        = {args.samples}, seed = {args.seed}, streams = {args.streams}", file=out)
    print(f"LHV estimate   = {est.estimate:+.6f} +/- {est.std_error:.6f}", file=out)
    print(f"LHV exact      = {lhv.lhv_singlet_exact(theta):+.6f}", file=out)
    print(f"QM singlet     = {-math.cos(theta):+.6f}", file=out)
    return 0


def cmd_algebra_check(args, out) -> int:
    overrides = None
    if args.inject_fault:
        overrides = {poincare.Generator.K2: -poincare.generator(poincare.Generator.K2)}
    report = poincare.verify_algebra(args.tol, overrides)
    for name in poincare.RELATIONS:
        dev = report.deviations[name]
        status = "ok" if dev <= report.tol else "FAIL"
        print(f"{name:6s} max deviation {dev:.3e}  {status}", file=out)
    print("all relations hold" if report.passed else "algebra check FAILED", file=out)
    return 0 if report.passed else 1


def cmd_bell_demo(args, out) -> int:
    singlet = bell_state(BellKind.PSI_MINUS)
    d = bell.SINGLET_MAX_DIRECTIONS
    check = bell.tsirelson_check(singlet, d)
    print("singlet, a=(0,0,1) a'=(1,0,0) b=(1,0,1)/sqrt2 b'=(1,0,-1)/sqrt2", file=out)
    for label, x, y in (("C(a,b)", d.a, d.b), ("C(a',b)", d.a_prime, d.b), ("C(a',b')", d.a_prime, d.b_prime), ("C(a,b')", d.a, d.b_prime)):
        print(f"{label:9s} = {bell.correlation(singlet, x, y):+.12f}", file=out)
    print(f"CHSH      = {check.value:.12f}", file=out)
    print(f"bound     = {check.bound:.12f}", file=out)
    print(f"2 sqrt 2  = {bell.TSIRELSON:.12f}", file=out)
    ok = abs(check.value - bell.TSIRELSON) <= 1e-10
    return 0 if ok else 1


def _velocity(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError("velocity must be finite")
    if value < 0:
        raise argparse.ArgumentTypeError(f"velocity must be >= 0, got {value}")
    if value > BETA_MAX:
        raise argparse.ArgumentTypeError(f"velocity must be < 1, got {value}")
    return value


def _kind(text: str) -> BellKind:
    try:
        return BellKind.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wignerbell", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wigner-angle", help="Wigner angle: closed form vs matrix product")
    p.add_argument("beta", type=_velocity, help="particle speed along +z")
    p.add_argument("beta_prime", type=_velocity, help="frame speed along +x")
    p.add_argument("--mass", type=float, default=1.0)
    p.set_defaults(func=cmd_wigner_angle)

    p = sub.add_parser("transform", help="boost a Bell state and print amplitudes")
    p.add_argument("kind", type=_kind, help="phi+, phi-, psi+ or psi-")
    p.add_argument("beta", type=_velocity)
    p.add_argument("beta_prime", type=_velocity)
    p.add_argument("--mass", type=float, default=1.0)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("chsh-sweep", help="CSV grid of CHSH, entropy and Schmidt data")
    p.add_argument("--beta-min", type=_velocity, default=0.0)
    p.add_argument("--beta-max", type=_velocity, default=0.99)
    p.add_argument("--beta-steps", type=int, default=20)
    p.add_argument("--beta-prime-min", type=_velocity, default=0.0)
    p.add_argument("--beta-prime-max", type=_velocity, default=0.99)
    p.add_argument("--beta-prime-steps", type=int, default=20)
    p.add_argument("--mass", type=float, default=1.0)
    p.add_argument("--precision", type=int, default=12)
    p.add_argument("--state", type=_kind, default=BellKind.PSI_MINUS)
    p.add_argument("--output", default="-", help="CSV path, '-' for stdout")
    p.set_defaults(func=cmd_chsh_sweep)

    p = sub.add_parser("lhv-sim", help="Monte Carlo of the local sign model for the singlet")
    p.add_argument("--angle", type=float, required=True, help="angle between a and b in radians")
    p.add_argument("--samples", type=int, default=10**6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--streams", type=int, default=1)
    p.set_defaults(func=cmd_lhv_sim)

    p = sub.add_parser("algebra-check", help="verify the Poincare commutator table")
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_algebra_check)

    p = sub.add_parser("bell-demo", help="maximal CHSH violation by the singlet")
    p.set_defaults(func=cmd_bell_demo)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
