"""Command-line front end.

Channels and states travel as JSON; reports come back as JSON (12
significant digits, key-sorted, byte-stable) or as a short text summary.
Exit codes: 0 = success (a not-CP verdict is a success), 2 = input
validation failure, 1 = internal error or cross-method mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings

import numpy as np

from . import channel as channel_mod
from . import cp as cp_mod
from . import sdp as sdp_mod
from . import state as state_mod
from .channel import AffineChannel

_ERR_SCHEMA = "E_SCHEMA"
_ERR_CONSTRAINT = "E_CONSTRAINT"
_ERR_BRACKET = "E_BRACKET"
_ERR_MISMATCH = "E_METHOD_MISMATCH"
_ERR_INTERNAL = "E_INTERNAL"


class InputError(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def _round12(x: float) -> float:
    return float(f"{x:.12g}")


def _jsonify(obj):
    if isinstance(obj, dict):
        return {k: _jsonify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonify(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (float, np.floating)):
        return _round12(float(obj))
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    return obj


def _emit(obj, out) -> None:
    print(json.dumps(_jsonify(obj), indent=2, sort_keys=True), file=out)


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(_ERR_SCHEMA, f"cannot read JSON from {path}: {exc}") from exc


def _complex_vector(obj, key: str, length: int | None = None) -> np.ndarray:
    try:
        vec = np.array([complex(re, im) for re, im in obj[key]])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(
            _ERR_SCHEMA, f"field '{key}' must be a list of [re, im] pairs"
        ) from exc
    if length is not None and vec.shape != (length,):
        raise InputError(_ERR_SCHEMA, f"field '{key}' must have length {length}")
    return vec


def _load_channel(args) -> AffineChannel:
    if getattr(args, "depolarizing", None) is not None:
        if args.d is None:
            raise InputError(_ERR_SCHEMA, "--depolarizing requires --d")
        return cp_mod.depolarizing_channel(args.d, args.depolarizing, n=args.n or 1)
    if not getattr(args, "channel", None):
        raise InputError(_ERR_SCHEMA, "provide a channel JSON file or --depolarizing")
    obj = _load_json(args.channel)
    try:
        d, n = int(obj["d"]), int(obj.get("n", 1))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(_ERR_SCHEMA, "channel JSON needs integer fields 'd', 'n'") from exc
    size = d ** (2 * n)
    lam = _complex_vector(obj, "lambda", size)
    c = None
    if obj.get("c") is not None:
        c = _complex_vector(obj, "c", size)
    try:
        ch = AffineChannel(d=d, n=n, lam=lam, c=c)
        channel_mod.require_valid(ch)
    except ValueError as exc:
        raise InputError(_ERR_CONSTRAINT, str(exc)) from exc
    return ch


def _tolerance(args) -> float:
    if args.tolerance is not None:
        return args.tolerance
    env = os.environ.get("QCP_TOLERANCE")
    if env:
        try:
            return float(env)
        except ValueError as exc:
            raise InputError(_ERR_SCHEMA, f"bad QCP_TOLERANCE value {env!r}") from exc
    return cp_mod.DEFAULT_TOLERANCE


def _cmd_validate(args, out) -> int:
    obj = _load_json(args.channel)
    try:
        d, n = int(obj["d"]), int(obj.get("n", 1))
        size = d ** (2 * n)
        lam = _complex_vector(obj, "lambda", size)
        c = _complex_vector(obj, "c", size) if obj.get("c") is not None else None
        ch = AffineChannel(d=d, n=n, lam=lam, c=c)
    except (InputError, KeyError, TypeError, ValueError) as exc:
        raise InputError(_ERR_SCHEMA, f"channel JSON invalid: {exc}") from exc
    checks = channel_mod.validate(ch)
    result = {
        "valid": all(ok for ok, _ in checks.values()),
        "checks": {name: {"pass": ok, "detail": detail} for name, (ok, detail) in checks.items()},
    }
    if args.output == "text":
        for name, (ok, detail) in checks.items():
            print(f"{name}: {'pass' if ok else 'FAIL'} ({detail})", file=out)
        print(f"valid: {result['valid']}", file=out)
    else:
        _emit(result, out)
    return 0


def _cmd_check_cp(args, out) -> int:
    ch = _load_channel(args)
    tol = _tolerance(args)
    method = args.method
    if method == "auto":
        method = "qft" if ch.is_unital else "choi"
    try:
        if method == "qft":
            reports = [cp_mod.check_cp_qft(ch, tolerance=tol)]
        elif method == "choi":
            reports = [cp_mod.check_cp_choi(ch, tolerance=tol)]
        else:  # both
            reports = [
                cp_mod.check_cp_qft(ch, tolerance=tol),
                cp_mod.check_cp_choi(ch, tolerance=tol),
            ]
    except ValueError as exc:
        raise InputError(_ERR_CONSTRAINT, str(exc)) from exc

    if len(reports) == 2:
        qft_r, choi_r = reports
        spectra_gap = float(np.max(np.abs(qft_r.spectrum - choi_r.spectrum)))
        if qft_r.verdict != choi_r.verdict or spectra_gap > tol:
            print(
                f"{_ERR_MISMATCH}: qft={qft_r.verdict} choi={choi_r.verdict} "
                f"spectra gap {spectra_gap:.3e}",
                file=sys.stderr,
            )
            return 1

    primary = reports[-1]
    if args.output == "text":
        print(f"verdict: {primary.verdict}", file=out)
        print(f"method: {' + '.join(r.method for r in reports)}", file=out)
        print(f"margin: {primary.margin:.12g}", file=out)
        print(f"tolerance: {primary.tolerance:.12g}", file=out)
        if ch.d == 2 and ch.n == 1 and ch.is_unital and np.max(np.abs(ch.lam.imag)) < 1e-12:
            vals = cp_mod.qubit_inequalities(ch.lam.real)
            labels = [
                "1 + l01 + l10 + l11",
                "1 - l01 + l10 - l11",
                "1 + l01 - l10 - l11",
                "1 - l01 - l10 + l11",
            ]
            for label, val in zip(labels, vals):
                print(f"{label} = {val:.12g}", file=out)
    else:
        result = primary.to_json()
        if len(reports) == 2:
            result["reports"] = [r.to_json() for r in reports]
        _emit(result, out)
    return 0


def _cmd_choi_spectrum(args, out) -> int:
    if args.invert:
        obj = _load_json(args.invert)
        try:
            d, n = int(obj["d"]), int(obj.get("n", 1))
            mu = np.array([float(x) for x in obj["mu"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(_ERR_SCHEMA, "invert JSON needs 'd', 'n', 'mu'") from exc
        try:
            lam = sdp_mod.lambda_from_mu(mu, d, n)
        except ValueError as exc:
            raise InputError(_ERR_CONSTRAINT, str(exc)) from exc
        result = {
            "d": d,
            "n": n,
            "lambda": [[z.real, z.imag] for z in lam],
            "c": None,
        }
        _emit(result, out)
        return 0

    ch = _load_channel(args)
    if ch.is_unital:
        try:
            mu = cp_mod.mu_vector(ch.lam, ch.d, ch.n)
        except ValueError as exc:
            raise InputError(_ERR_CONSTRAINT, str(exc)) from exc
        result = {"d": ch.d, "n": ch.n, "mu": [float(x) for x in mu]}
    else:
        report = cp_mod.check_cp_choi(ch, tolerance=_tolerance(args))
        result = {"d": ch.d, "n": ch.n, "spectrum": [float(x) for x in report.spectrum]}
    if args.output == "text":
        key = "mu" if "mu" in result else "spectrum"
        print(" ".join(f"{x:.12g}" for x in result[key]), file=out)
    else:
        _emit(result, out)
    return 0


def _cmd_kraus(args, out) -> int:
    ch = _load_channel(args)
    try:
        ops, residual = channel_mod.kraus_from_choi(channel_mod.choi(ch), ch.d, ch.n)
    except ValueError as exc:
        raise InputError(_ERR_CONSTRAINT, str(exc)) from exc
    result = {
        "kraus": [[[[z.real, z.imag] for z in row] for row in op] for op in ops],
        "completeness_residual": residual,
    }
    _emit(result, out)
    return 0


def _cmd_apply(args, out) -> int:
    ch = _load_channel(args)
    obj = _load_json(args.state)
    try:
        bv = state_mod.BlochVector.from_json(obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(_ERR_SCHEMA, f"state JSON invalid: {exc}") from exc
    if (bv.d, bv.n) != (ch.d, ch.n):
        raise InputError(_ERR_SCHEMA, "state and channel dimensions do not match")
    try:
        rho = state_mod.density_from_bloch(bv)
    except ValueError as exc:
        raise InputError(_ERR_CONSTRAINT, str(exc)) from exc
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        rho_out = channel_mod.apply(ch, rho)
    non_psd = any(
        issubclass(w.category, channel_mod.NonPositiveOutputWarning) for w in caught
    )
    out_bv = ch.lam * bv.coeffs + ch.displacement()
    result = {
        "d": ch.d,
        "n": ch.n,
        "bloch": [[z.real, z.imag] for z in out_bv],
        "psd": not non_psd,
        "trace": float(np.trace(rho_out).real),
    }
    _emit(result, out)
    return 0


def _cmd_depolarizing_range(args, out) -> int:
    p_min, p_max = cp_mod.depolarizing_cp_range(args.d)
    if args.output == "text":
        print(f"{p_min:.12g} {p_max:.12g}", file=out)
    else:
        _emit({"d": args.d, "p_min": p_min, "p_max": p_max}, out)
    return 0


def _cmd_unot_fidelity(args, out) -> int:
    value = cp_mod.unot_fidelity(args.d)
    if args.output == "text":
        print(f"{value:.10f}", file=out)
    else:
        _emit({"d": args.d, "fidelity": value}, out)
    return 0


def _cmd_sufficient_c(args, out) -> int:
    ch = _load_channel(args)
    try:
        mu_min, applies = cp_mod.sufficient_displacement_bound(ch)
    except ValueError as exc:
        raise InputError(_ERR_CONSTRAINT, str(exc)) from exc
    result = {
        "mu_min": mu_min,
        "c_norm": float(np.linalg.norm(ch.displacement())),
        "applies": applies,
    }
    if args.output == "text":
        print(
            f"mu_min = {mu_min:.12g}, ||c|| = {result['c_norm']:.12g}, "
            f"bound {'holds (channel is CP)' if applies else 'does not apply'}",
            file=out,
        )
    else:
        _emit(result, out)
    return 0


def _cmd_ray_scan(args, out) -> int:
    ch = _load_channel(args)
    obj = _load_json(args.direction)
    direction = _complex_vector(obj, "direction", ch.size)
    lo, hi = args.bracket
    try:
        result = sdp_mod.max_ray_parameter(
            ch, direction, lo, hi, tolerance=_tolerance(args)
        )
    except ValueError as exc:
        code = _ERR_BRACKET if "bracket" in str(exc) or "t_lo" in str(exc) else _ERR_CONSTRAINT
        raise InputError(code, str(exc)) from exc
    _emit(result.to_json(), out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quditcp",
        description="Decide complete positivity of affine qudit channels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, channel_arg=True):
        if channel_arg:
            p.add_argument("channel", nargs="?", help="channel JSON file")
            p.add_argument("--d", type=int, help="local dimension (with --depolarizing)")
            p.add_argument("--n", type=int, default=1, help="qudit count")
            p.add_argument(
                "--depolarizing",
                type=float,
                metavar="P",
                help="use the depolarizing channel with parameter P instead of a file",
            )
        p.add_argument("--tolerance", type=float, help="verdict tolerance (default 1e-9)")
        p.add_argument("--output", choices=["json", "text"], default="json")

    p = sub.add_parser("validate", help="check channel invariants")
    p.add_argument("channel", help="channel JSON file")
    p.add_argument("--output", choices=["json", "text"], default="json")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("check-cp", help="decide complete positivity")
    add_common(p)
    p.add_argument("--method", choices=["auto", "qft", "choi", "both"], default="auto")
    p.set_defaults(func=_cmd_check_cp)

    p = sub.add_parser("choi-spectrum", help="mu vector / Choi eigenvalues")
    add_common(p)
    p.add_argument(
        "--invert",
        metavar="SPECTRUM.json",
        help="recover lambda from a mu vector instead",
    )
    p.set_defaults(func=_cmd_choi_spectrum)

    p = sub.add_parser("kraus", help="operator-sum decomposition")
    add_common(p)
    p.set_defaults(func=_cmd_kraus)

    p = sub.add_parser("apply", help="push a state through the channel")
    add_common(p)
    p.add_argument("state", help="state JSON file")
    p.set_defaults(func=_cmd_apply)

    p = sub.add_parser("depolarizing-range", help="CP window of the depolarizing family")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--output", choices=["json", "text"], default="json")
    p.set_defaults(func=_cmd_depolarizing_range)

    p = sub.add_parser("unot-fidelity", help="best CP inverter fidelity d/(d^2-1)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--output", choices=["json", "text"], default="text")
    p.set_defaults(func=_cmd_unot_fidelity)

    p = sub.add_parser("sufficient-c", help="displacement-norm sufficient bound")
    add_common(p)
    p.set_defaults(func=_cmd_sufficient_c)

    p = sub.add_parser("ray-scan", help="largest CP-feasible ray parameter")
    add_common(p)
    p.add_argument("--direction", required=True, help="direction JSON file")
    p.add_argument("--bracket", nargs=2, type=float, required=True, metavar=("LO", "HI"))
    p.set_defaults(func=_cmd_ray_scan)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except InputError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - last-resort guard for exit code 1
        print(f"{_ERR_INTERNAL}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
