"""Command-line interface.

Exit codes: 0 on success, 1 on a domain error, 2 on I/O or parse failure.
Every run writes exactly one JSON object to stdout (unless ``--pretty``).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from .errors import FanNotAdmissible, ToromotiveError
from .fan import Fan, stellar_subdivide, symmetrize, validate_fan, weyl_chamber_fan
from .motivic import chow_ring_sl1, chow_torsor, decompose
from .poincare import compactification_poincare, flag_poincare, toric_poincare
from .polynomial import monomials
from .root_datum import CartanType, LatticeKind, build_root_datum, weyl_group

COORDINATES = "cocharacter"


class ParseFailure(Exception):
    """Bad input: malformed JSON, missing fields, unreadable files, bad flags."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseFailure(message)


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def digest(obj) -> str:
    return hashlib.sha256(canonical_json(obj).encode()).hexdigest()


# --- spec files ------------------------------------------------------------


def _int_list(x, what):
    if not isinstance(x, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in x):
        raise ParseFailure(f"{what} must be a list of integers")
    return x


def load_spec(path: str) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseFailure(f"cannot read {path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseFailure(f"{path}: invalid JSON ({exc.msg})") from exc
    if not isinstance(data, dict):
        raise ParseFailure("spec file must contain a JSON object")
    return data


def parse_spec(data: dict, need_root_datum: bool = True):
    """Return ``(root_datum_or_rank, fan)`` from a decoded spec file."""
    if data.get("coordinates") != COORDINATES:
        raise ParseFailure(f'spec file must declare "coordinates": "{COORDINATES}"')
    rd_spec = data.get("root_datum")
    if rd_spec is None:
        if need_root_datum:
            raise ParseFailure("spec file has no root_datum")
        rank = data.get("rank")
        if not isinstance(rank, int) or rank < 1:
            raise ParseFailure("a spec file without root_datum needs a positive integer rank")
        rd = rank
    else:
        if not isinstance(rd_spec, dict):
            raise ParseFailure("root_datum must be an object")
        try:
            lattice = LatticeKind(rd_spec.get("lattice", "simply_connected"))
        except (ValueError, AttributeError) as exc:
            raise ParseFailure("root_datum.lattice must be simply_connected or adjoint") from exc
        fam, rank = rd_spec.get("family"), rd_spec.get("rank")
        if not isinstance(fam, str) or not isinstance(rank, int):
            raise ParseFailure("root_datum needs a string family and an integer rank")
        rd = build_root_datum(CartanType(fam, rank), lattice)
    fan = data.get("fan")
    if not isinstance(fan, dict) or "rays" not in fan or "max_cones" not in fan:
        raise ParseFailure("spec file needs fan.rays and fan.max_cones")
    if not isinstance(fan["rays"], list) or not isinstance(fan["max_cones"], list):
        raise ParseFailure("fan.rays and fan.max_cones must be lists")
    rays = tuple(tuple(_int_list(r, "each ray")) for r in fan["rays"])
    cones = [tuple(_int_list(c, "each max cone")) for c in fan["max_cones"]]
    raw = Fan(rays, tuple(cones))
    raw.check_structure(rank)
    return rd, Fan(rays, tuple(sorted(tuple(sorted(c)) for c in cones)))


def dump_spec(rd, fan: Fan) -> dict:
    out = {"coordinates": COORDINATES}
    if isinstance(rd, int):
        out["rank"] = rd
    else:
        out["root_datum"] = {
            "family": rd.cartan_type.family,
            "rank": rd.rank,
            "lattice": rd.lattice_kind.value,
        }
    out["fan"] = {
        "rays": [list(r) for r in fan.rays],
        "max_cones": [list(c) for c in fan.max_cones],
    }
    return out


def _write_spec(path, spec):
    try:
        Path(path).write_text(json.dumps(spec, indent=2) + "\n")
    except OSError as exc:
        raise ParseFailure(f"cannot write {path}: {exc.strerror}") from exc


def _int_csv(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise ParseFailure(f"{what} must be comma-separated integers") from exc


def _root_datum_from_args(args):
    return build_root_datum(CartanType(args.family, args.rank), LatticeKind(args.lattice))


# --- commands --------------------------------------------------------------


def cmd_poincare(args):
    if args.kind == "flag":
        rd = _root_datum_from_args(args)
        inputs = {"family": args.family, "rank": args.rank, "lattice": args.lattice}
        poly = flag_poincare(rd)
        return inputs, {"coeffs": poly.to_list()}
    if args.spec is None:
        raise ParseFailure(f"poincare {args.kind} needs a spec file")
    data = load_spec(args.spec)
    if args.kind == "toric":
        rd, fan = parse_spec(data, need_root_datum=False)
        return data, {"coeffs": toric_poincare(rd, fan).to_list()}
    rd, fan = parse_spec(data)
    result = compactification_poincare(rd, fan)
    report = validate_fan(rd, fan)
    order = len(weyl_group(rd))
    return data, {
        "coeffs": result.product.to_list(),
        "factored": {"first": result.first_factor.to_list(), "flag": result.flag_factor.to_list()},
        "s": report.s,
        "k": report.k,
        "fixed_points": report.k * order**2,
    }


def cmd_decompose(args):
    coeffs = _int_csv(args.coeffs, "--coeffs")
    if any(c < 0 for c in coeffs):
        raise ParseFailure("--coeffs must be nonnegative")
    inputs = {"p": args.p, "n": args.n, "coeffs": coeffs}
    dec = decompose(coeffs, args.p, args.n)
    return inputs, {
        "rost_shifts": list(dec.rost_shifts),
        "sb": {str(j): m for j, m in sorted(dec.sb_multiplicities.items())},
        "sb_total": dec.sb_total,
        "label": dec.label,
    }


def cmd_chow_ring(args):
    inputs = {"p": args.p, "torsor": args.torsor}
    if args.torsor:
        ring = chow_torsor(args.p)
        return inputs, {**ring.table(), "note": ring.note}
    ring = chow_ring_sl1(args.p)
    return inputs, {**ring.table(), "relations": list(ring.relations)}


def cmd_fan(args):
    if args.action == "chambers":
        rd = _root_datum_from_args(args)
        fan = weyl_chamber_fan(rd)
        spec = dump_spec(rd, fan)
        if args.output:
            _write_spec(args.output, spec)
        inputs = {"family": args.family, "rank": args.rank, "lattice": args.lattice}
        return inputs, {"spec": spec, "report": validate_fan(rd, fan).to_dict()}
    if args.spec is None:
        raise ParseFailure(f"fan {args.action} needs a spec file")
    data = load_spec(args.spec)
    rd, fan = parse_spec(data, need_root_datum=args.action != "check")
    if args.action == "check":
        report = validate_fan(rd, fan)
        payload = {"report": report.to_dict()}
        if not report.admissible:
            raise _ValidationFailed(data, payload, report.failed_field())
        return data, payload
    # subdivide
    if args.ray is None:
        raise ParseFailure("fan subdivide needs --ray")
    ray = _int_csv(args.ray, "--ray")
    if len(ray) != (rd if isinstance(rd, int) else rd.rank):
        raise ParseFailure("--ray has the wrong length")
    out = stellar_subdivide(rd, fan, ray)
    if args.symmetrize:
        if isinstance(rd, int):
            raise ParseFailure("--symmetrize needs a root_datum")
        out = symmetrize(rd, out)
    spec = dump_spec(rd, out)
    if args.output:
        _write_spec(args.output, spec)
    return {"spec": data, "ray": ray, "symmetrize": args.symmetrize}, {
        "spec": spec,
        "report": validate_fan(rd, out).to_dict(),
    }


class _ValidationFailed(Exception):
    def __init__(self, inputs, payload, field):
        super().__init__(field)
        self.inputs, self.payload, self.field = inputs, payload, field


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="toromotive", description=__doc__)
    parser.add_argument("--pretty", action="store_true", help="render polynomials in t-notation")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def rd_flags(p):
        p.add_argument("--family", choices=list("ABCDEFG"), required=True)
        p.add_argument("--rank", type=int, required=True)
        p.add_argument("--lattice", choices=[k.value for k in LatticeKind], default="simply_connected")

    p = sub.add_parser("poincare", help="generating polynomials")
    psub = p.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    rd_flags(psub.add_parser("flag"))
    for kind in ("toric", "compactification"):
        psub.add_parser(kind).add_argument("spec", nargs="?")
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("decompose", help="split P_X into Rost and Severi-Brauer parts")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--coeffs", required=True)
    p.add_argument("--n", type=int, default=3)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("chow-ring", help="Chow ring of SL_1(D) or of a torsor")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--torsor", action="store_true")
    p.set_defaults(func=cmd_chow_ring)

    p = sub.add_parser("fan", help="fan utilities")
    fsub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    fsub.add_parser("check").add_argument("spec", nargs="?")
    c = fsub.add_parser("chambers")
    rd_flags(c)
    c.add_argument("-o", "--output")
    s = fsub.add_parser("subdivide")
    s.add_argument("spec", nargs="?")
    s.add_argument("--ray")
    s.add_argument("--symmetrize", action="store_true")
    s.add_argument("-o", "--output")
    p.set_defaults(func=cmd_fan)
    return parser


def _glue_values(argv: list[str]) -> list[str]:
    # "--ray -1,-1" would otherwise be read as an option; --pretty may appear anywhere
    out, it = [], iter(argv)
    pretty = False
    for tok in it:
        if tok == "--pretty":
            pretty = True
            continue
        if tok in ("--ray", "--coeffs"):
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return (["--pretty"] if pretty else []) + out


def _render_pretty(command: str, result: dict) -> str:
    lines = [command]
    for key, val in result.items():
        if key == "coeffs":
            lines.append(f"P(t) = {monomials(val)}")
        elif key == "factored":
            lines.append(f"P(t) = ({monomials(val['first'])})({monomials(val['flag'])})")
        else:
            lines.append(f"{key}: {json.dumps(val, sort_keys=True)}")
    return "\n".join(lines)


def _emit(obj, stream=None):
    stream = stream or sys.stdout
    stream.write(canonical_json(obj) + "\n")


def main(argv: list[str] | None = None) -> int:
    argv = _glue_values(list(sys.argv[1:] if argv is None else argv))
    command = " ".join(a for a in argv if not a.startswith("-"))[:200]
    try:
        args = build_parser().parse_args(argv)
        command = args.command + (" " + (getattr(args, "kind", None) or getattr(args, "action", None) or "")).rstrip()
        inputs, result = args.func(args)
    except ParseFailure as exc:
        _emit({"command": command, "status": "error", "error": {"kind": "ParseError", "message": str(exc)}})
        return 2
    except _ValidationFailed as exc:
        _emit({
            "command": command,
            "input_digest": digest(exc.inputs),
            "status": "error",
            "error": {"kind": "FanNotAdmissible", "message": f"{exc.field} is false", "field": exc.field},
            "result": exc.payload,
        })
        return 1
    except ToromotiveError as exc:
        err = {"kind": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, FanNotAdmissible):
            err["field"] = exc.field
            if exc.report is not None:
                err["report"] = exc.report.to_dict()
        _emit({"command": command, "status": "error", "error": err})
        return 1
    if args.pretty:
        print(_render_pretty(command, result))
        return 0
    _emit({"command": command, "input_digest": digest(inputs), "status": "ok", "result": result})
    return 0


if __name__ == "__main__":
    sys.exit(main())
