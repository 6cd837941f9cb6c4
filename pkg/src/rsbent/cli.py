"""``rsbent`` command line: construct, verify, transform and print tables.

Records are written one JSON object per line with a fixed field order;
``--pretty`` indents them instead. Exit statuses:

===  =====================================================
0    success
2    usage or parse error
3    dimension error
4    parity error (odd number of variables)
5    capacity error (see ``RSBENT_MAX_N``)
6    normalization error (input was not a representative)
7    construction constraint violated
8    internal invariant violation
9    file I/O error
===  =====================================================
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Sequence, TextIO

from . import constructor as con
from .errors import (CapacityError, ConstraintError, DimensionError, InvariantViolation,
                     NormalizationError, ParityError)
from .f2core import (ZERO_DEGREE, AnfPoly, BitVec, BoolFn, algebraic_degree, anf_of, anf_to_text,
                     tt_from_hex, tt_to_hex)
from .orbitkit import enumerate_reps, is_rotation_symmetric, rep_value
from .spectral import is_bent, nonlinearity, walsh

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CODES = [
    (DimensionError, 3),
    (ParityError, 4),
    (CapacityError, 5),
    (NormalizationError, 6),
    (ConstraintError, 7),
    (InvariantViolation, 8),
    (OSError, 9),
]

KINDS = ("theorem1", "theorem3", "theorem4", "theorem5", "gao", "carlet")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def serialize_truth_table(f: BoolFn) -> str:
    return tt_to_hex(f)


def serialize_anf(p: AnfPoly) -> str:
    return anf_to_text(p)


def _degree_field(d):
    return "zero" if d is ZERO_DEGREE else d


@dataclass(frozen=True)
class VerifyReport:
    n: int
    bent: bool
    rotation_symmetric: bool
    degree: object
    nonlinearity: int
    weight: int
    notes: list = field(default_factory=list)

    def __post_init__(self):
        if self.bent and self.nonlinearity != (1 << (self.n - 1)) - (1 << (self.n // 2 - 1)):
            raise InvariantViolation("bent function with non-maximal nonlinearity")

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "bent": self.bent,
            "rotation_symmetric": self.rotation_symmetric,
            "degree": _degree_field(self.degree),
            "nonlinearity": self.nonlinearity,
            "weight": self.weight,
            "notes": list(self.notes),
        }


def verify_function(f: BoolFn) -> VerifyReport:
    spectrum = walsh(f)
    bent = is_bent(f, spectrum)
    notes = []
    if f.n % 2:
        notes.append("odd number of variables: no bent function exists")
    elif bent and f.n == 2:
        notes.append("every 2-variable bent function has degree 2")
    return VerifyReport(
        n=f.n,
        bent=bent,
        rotation_symmetric=is_rotation_symmetric(f),
        degree=algebraic_degree(f),
        nonlinearity=nonlinearity(f, spectrum),
        weight=f.weight,
        notes=notes,
    )


# --------------------------------------------------------------------------
# argument helpers


def parse_int(text: str) -> int:
    """Decimal or ``0x``-prefixed hexadecimal."""
    s = text.strip().lower()
    try:
        if s.startswith("0x"):
            return int(s[2:], 16)
        return int(s, 10)
    except ValueError:
        raise UsageError(f"not an integer: {text!r}") from None


def _int_list(values: Sequence[str] | None) -> list[int]:
    out = []
    for chunk in values or []:
        out += [parse_int(tok) for tok in chunk.split(",") if tok.strip()]
    return out


def _require(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name} is required for --kind {args.kind}")
    return value


def _canonical(m: int, value: int, err: TextIO) -> BitVec:
    BitVec(m, value)  # range check
    rep = rep_value(value, m)
    if rep != value:
        print(f"notice: {hex(value)} canonicalized to representative {hex(rep)}", file=err)
    return BitVec(m, rep)


def _read_function(args) -> BoolFn:
    if (args.tt is None) == (args.input is None):
        raise UsageError("give exactly one of --tt or --in")
    if args.tt is not None:
        text = args.tt
    else:
        with open(args.input, encoding="ascii") as fh:
            text = fh.read()
    try:
        return tt_from_hex(text, args.n)
    except DimensionError as exc:
        raise UsageError(str(exc)) from None


# --------------------------------------------------------------------------
# subcommands


def _construct(args, err: TextIO) -> BoolFn:
    kind = args.kind
    if kind == "theorem1":
        m = _require(args, "m")
        spec = con.ModificationSpec.from_values(m, _int_list(args.gamma))
        return con.build_from_gamma(spec)
    if kind == "theorem3":
        m = _require(args, "m")
        delta = _canonical(m, parse_int(_require(args, "delta")), err)
        return con.build_from_orbit_sum(delta, m)
    if kind == "theorem4":
        m = _require(args, "m")
        values = _int_list(args.a)
        return con.build_from_orbit_sums([_canonical(m, v, err) for v in values], m)
    if kind == "theorem5":
        return con.build_from_weight_class(_require(args, "i"), _require(args, "m"))
    if kind == "gao":
        return con.gao_cubic(_require(args, "n"), _require(args, "t"))
    if kind == "carlet":
        return con.carlet_cubic(_require(args, "r"))
    raise UsageError(f"unknown kind {kind!r}")


def _construction_record(f: BoolFn) -> dict:
    rec = {}
    for key, value in (f.provenance or {}).items():
        rec[key] = _degree_field(value) if key == "degree" else value
    report = verify_function(f)
    body = report.to_record()
    body.pop("notes")
    rec.update(body)
    rec["truth_table"] = tt_to_hex(f)
    rec["anf"] = anf_to_text(anf_of(f))
    return rec


def _vec_text(value: int, n: int) -> str:
    return str(BitVec(n, value))


def _orbit_union_text(values: set[int], n: int) -> str:
    reps = sorted({rep_value(v, n) for v in values}, key=lambda v: (v.bit_count(), v))
    return " U ".join(f"O_{n}{_vec_text(r, n)}" for r in reps)


def table1_text(m: int = 2) -> str:
    lines = ["gamma\tT_gamma"]
    for gamma in enumerate_reps(m):
        members = {x.value for x in con.modification_set(gamma, m)}
        lines.append(f"{gamma}\t{_orbit_union_text(members, 2 * m)}")
    return "\n".join(lines) + "\n"


def table2_text(m: int = 2) -> str:
    lines = ["delta\tcovering_sum\torbit_sum"]
    for value in range(1 << m):
        delta = BitVec(m, value)
        cover = anf_to_text(con.covering_sum_anf(delta, m))
        orbit_sum = anf_to_text(con.orbit_monomial_sum(BitVec(m, rep_value(value, m)), m))
        lines.append(f"{delta}\t{cover}\t{orbit_sum}")
    return "\n".join(lines) + "\n"


def _build_parser() -> _Parser:
    p = _Parser(prog="rsbent", description="Rotation symmetric bent function toolkit.",
                allow_abbrev=False)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common_out(sp):
        sp.add_argument("--out", help="write output to this file instead of stdout")
        sp.add_argument("--pretty", action="store_true", help="indent JSON records")

    def tt_input(sp):
        sp.add_argument("--tt", help="truth table as hexadecimal")
        sp.add_argument("--in", dest="input", help="file holding the hexadecimal truth table")
        sp.add_argument("--n", type=parse_int, help="number of variables (inferred from length if omitted)")

    c = sub.add_parser("construct", help="build a rotation symmetric bent function",
                       allow_abbrev=False)
    c.add_argument("--kind", required=True, choices=KINDS)
    for name in ("m", "n", "i", "t", "r"):
        c.add_argument(f"--{name}", type=parse_int)
    c.add_argument("--delta", help="representative in F_2^m (decimal or 0x hex)")
    c.add_argument("--gamma", action="append", help="comma-separated representatives (theorem1)")
    c.add_argument("--a", action="append", help="comma-separated representatives (theorem4)")
    common_out(c)

    for name, text in (("verify", "bentness, symmetry, degree, nonlinearity"),
                       ("walsh", "Walsh spectrum"), ("anf", "algebraic normal form")):
        sp = sub.add_parser(name, help=text, allow_abbrev=False)
        tt_input(sp)
        common_out(sp)

    o = sub.add_parser("orbits", help="list orbit representatives, one hex value per line",
                       allow_abbrev=False)
    o.add_argument("--n", type=parse_int, required=True)
    o.add_argument("--out")

    t = sub.add_parser("tables", help="print the n=4 reference tables", allow_abbrev=False)
    t.add_argument("--which", required=True, choices=("table1", "table2"))
    t.add_argument("--out")

    s = sub.add_parser("solve-adelta", allow_abbrev=False,
                       help="express an orbit monomial sum through modification sets")
    s.add_argument("--m", type=parse_int, required=True)
    s.add_argument("--delta", required=True)
    common_out(s)
    return p


def _dump(record: dict, pretty: bool) -> str:
    if pretty:
        return json.dumps(record, indent=2) + "\n"
    return json.dumps(record, separators=(",", ":")) + "\n"


def _execute(args, err: TextIO) -> str:
    cmd = args.command
    if cmd == "construct":
        return _dump(_construction_record(_construct(args, err)), args.pretty)
    if cmd == "verify":
        return _dump(verify_function(_read_function(args)).to_record(), args.pretty)
    if cmd == "walsh":
        return _dump(walsh(_read_function(args)).to_record(), args.pretty)
    if cmd == "anf":
        f = _read_function(args)
        return _dump({"n": f.n, "anf": anf_to_text(anf_of(f))}, args.pretty)
    if cmd == "orbits":
        return enumerate_reps(args.n).export()
    if cmd == "tables":
        return table1_text() if args.which == "table1" else table2_text()
    if cmd == "solve-adelta":
        m = args.m
        delta = _canonical(m, parse_int(args.delta), err)
        sol = con.solve_orbit_sum(delta, m)
        rec = {"m": m, "delta": hex(delta.value), "a_set": [hex(g.value) for g in sol.sorted_reps()]}
        return _dump(rec, args.pretty)
    raise UsageError(f"unknown subcommand {cmd!r}")


def run(argv: Sequence[str] | None = None, out: TextIO | None = None,
        err: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = _build_parser().parse_args(argv)
        text = _execute(args, err)
        if getattr(args, "out", None):
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            out.write(text)
        return EXIT_OK
    except UsageError as exc:
        print(f"rsbent: error: {exc}", file=err)
        return EXIT_USAGE
    except (ValueError, RuntimeError, OSError) as exc:
        for cls, code in EXIT_CODES:
            if isinstance(exc, cls):
                print(f"rsbent: {cls.__name__}: {exc}", file=err)
                return code
        raise


def main() -> None:
    sys.exit(run())

