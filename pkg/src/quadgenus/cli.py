"""Command-line surface: one subcommand per library operation.

Every run prints a single envelope. JSON output serializes all numbers as
decimal strings so arbitrary precision survives any consumer; identical
inputs give byte-identical output. Errors go to stderr as an envelope,
exit code 1 for domain errors and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys

from .arith import Discriminant, DomainError, QuadInt
from .classgroup import cl_mod_squares, class_group, two_torsion
from .forms import BinaryForm, compose_crt, enumerate_reduced, reduce_form
from .ideals import OrderIdeal, compose_via_matrices, form_to_ideal, ideal_mul, ideal_to_form
from .lattice import GenTuple, check_matrix, solve_transform
from .normforms import MultiQuadraticForm, form_action, norm_form

MAX_VARS = 64

_FORM_RE = re.compile(r"^\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)$")
_PAIR_RE = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_disc(value) -> Discriminant:
    return Discriminant(int(value))


def _parse_form(text: str, disc: Discriminant) -> BinaryForm:
    m = _FORM_RE.match(text.strip())
    if not m:
        raise UsageError(f"cannot parse form {text!r}, expected \"(a,b,c)\"")
    a, b, c = (int(g) for g in m.groups())
    return BinaryForm(a, b, c, disc)


def _parse_ideal(text: str, disc: Discriminant) -> OrderIdeal:
    m = _FORM_RE.match(text.strip())
    if m:
        raise UsageError(f"cannot parse ideal {text!r}, expected \"(a,b)\"")
    pairs = _parse_pairs(text)
    if len(pairs) != 1:
        raise UsageError(f"cannot parse ideal {text!r}, expected \"(a,b)\"")
    a, b = pairs[0]
    return OrderIdeal(a, b, disc)


def _parse_pairs(text: str) -> list[tuple[int, int]]:
    stripped = re.sub(r"\s+", "", text)
    matched = "".join(m.group(0) for m in _PAIR_RE.finditer(stripped))
    if matched.replace(",", "") != stripped.replace(",", "") or not matched:
        raise UsageError(f"cannot parse {text!r}, expected \"(x,y),(x,y),...\"")
    return [(int(a), int(b)) for a, b in _PAIR_RE.findall(stripped)]


def _parse_tuple(text: str, disc: Discriminant) -> GenTuple:
    pairs = _parse_pairs(text)
    if len(pairs) > MAX_VARS:
        raise UsageError(f"at most {MAX_VARS} generators are supported")
    return GenTuple([QuadInt(p, q, disc) for p, q in pairs], disc)


def _parse_matrix(text: str):
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"cannot parse matrix {text!r}: {exc}") from None
    try:
        rows = check_matrix(rows)
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    if len(rows) > MAX_VARS:
        raise UsageError(f"at most {MAX_VARS} variables are supported")
    return rows


def _stringify(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_stringify(v) for v in value]
    if isinstance(value, dict):
        return {k: _stringify(v) for k, v in value.items()}
    return value


def _form_json(f: BinaryForm):
    return {"a": f.a, "b": f.b, "c": f.c, "d": f.disc.d}


def _ideal_json(i: OrderIdeal):
    return {"a": i.a, "b": i.b, "d": i.disc.d}


def _matrix_json(m):
    return [list(row) for row in m]


def _multiform_json(f: MultiQuadraticForm):
    return {
        "m": f.m,
        "d": f.disc.d,
        "coeffs": [[i, j, c] for (i, j), c in sorted(f.coeffs.items())],
    }


def _multiform_text(f: MultiQuadraticForm) -> str:
    return str(f)


def _matrix_text(m) -> str:
    return "[" + ", ".join("[" + ", ".join(str(e) for e in row) + "]" for row in m) + "]"


# --- subcommand handlers ------------------------------------------------------
# each returns (result_json, text_lines)


def _cmd_reduce(args):
    disc = _parse_disc(args.d)
    f = _parse_form(args.form, disc)
    r, w = reduce_form(f)
    return {"form": _form_json(r), "witness": _matrix_json(w)}, [
        str(r),
        "witness: " + _matrix_text(w),
    ]


def _cmd_enumerate(args):
    disc = _parse_disc(args.d)
    forms = enumerate_reduced(disc)
    return {"d": disc.d, "h": len(forms), "forms": [_form_json(f) for f in forms]}, [
        str(f) for f in forms
    ]


def _cmd_compose(args):
    disc = _parse_disc(args.d)
    f = _parse_form(args.f, disc)
    g = _parse_form(args.g, disc)
    r = compose_crt(f, g)
    return {"form": _form_json(r)}, [str(r)]


def _cmd_compose_matrix(args):
    disc = _parse_disc(args.d)
    f = _parse_form(args.f, disc)
    g = _parse_form(args.g, disc)
    r = compose_via_matrices(f, g)
    return {"form": _form_json(r)}, [str(r)]


def _cmd_classgroup(args):
    disc = _parse_disc(args.d)
    g = class_group(disc)
    tt = two_torsion(g)
    genus_order, _ = cl_mod_squares(g)
    result = {
        "d": disc.d,
        "h": g.h,
        "structure": list(g.structure),
        "elements": [_form_json(f) for f in g.elements],
        "two_torsion": [_form_json(f) for f in tt],
        "genus_order": genus_order,
    }
    if args.table:
        result["table"] = [list(row) for row in g.table]
    lines = [
        f"d: {disc.d}",
        f"h: {g.h}",
        "structure: [" + ", ".join(str(n) for n in g.structure) + "]",
        "elements: " + " ".join(str(f) for f in g.elements),
        "two_torsion: " + " ".join(str(f) for f in tt),
        f"genus_order: {genus_order}",
    ]
    if args.table:
        lines.append("table:")
        lines += ["  " + " ".join(str(k) for k in row) for row in g.table]
    return result, lines


def _cmd_ideal_mul(args):
    disc = _parse_disc(args.d)
    a = _parse_ideal(args.i1, disc)
    b = _parse_ideal(args.i2, disc)
    content, prod = ideal_mul(a, b)
    text = str(prod) if content == 1 else f"{content} * {prod}"
    return {"content": content, "ideal": _ideal_json(prod)}, [text]


def _cmd_form2ideal(args):
    disc = _parse_disc(args.d)
    f = _parse_form(args.form, disc)
    i = form_to_ideal(f)
    return {"ideal": _ideal_json(i)}, [str(i)]


def _cmd_ideal2form(args):
    disc = _parse_disc(args.d)
    i = _parse_ideal(args.ideal, disc)
    f = ideal_to_form(i)
    return {"form": _form_json(f)}, [str(f)]


def _cmd_normform(args):
    disc = _parse_disc(args.d)
    x = _parse_tuple(args.tuple, disc)
    f = norm_form(x)
    return {"form": _multiform_json(f)}, [_multiform_text(f)]


def _cmd_solve_transform(args):
    disc = _parse_disc(args.d)
    x = _parse_tuple(args.x, disc)
    y = _parse_tuple(args.y, disc)
    h = solve_transform(x, y)
    return {"matrix": _matrix_json(h)}, [_matrix_text(h)]


def _cmd_form_action(args):
    disc = _parse_disc(args.d)
    h = _parse_matrix(args.matrix)
    if len(h) == 2 and _FORM_RE.match(args.form.strip()):
        a, b, c = (int(g) for g in _FORM_RE.match(args.form.strip()).groups())
        f = MultiQuadraticForm.from_binary_triple(a, b, c, disc)
    else:
        x = _parse_tuple(args.form, disc)
        f = norm_form(x)
    r = form_action(h, f)
    return {"form": _multiform_json(r)}, [_multiform_text(r)]


def _cmd_genus(args):
    disc = _parse_disc(args.d)
    g = class_group(disc)
    tt = two_torsion(g)
    genus_order, reps = cl_mod_squares(g)
    result = {
        "d": disc.d,
        "h": g.h,
        "two_torsion": [_form_json(f) for f in tt],
        "genus_order": genus_order,
        "coset_reps": [_form_json(f) for f in reps],
    }
    lines = [
        f"d: {disc.d}",
        f"h: {g.h}",
        "two_torsion: " + " ".join(str(f) for f in tt),
        f"genus_order: {genus_order}",
        "coset_reps: " + " ".join(str(f) for f in reps),
    ]
    return result, lines


def _parse_range(text: str) -> tuple[int, int]:
    m = re.match(r"^\s*(-\d+)\s*\.\.\s*(-\d+)\s*$", text)
    if not m:
        raise UsageError(f"cannot parse range {text!r}, expected \"-lo..-hi\"")
    a, b = int(m.group(1)), int(m.group(2))
    lo, hi = max(a, b), min(a, b)
    return lo, hi


def _cmd_verify(args):
    lo, hi = _parse_range(args.range)
    samples = args.samples
    rng = random.Random(0)
    discs = pairs = 0
    mismatches = []
    for d in range(lo, hi - 1, -1):
        if d % 4 not in (0, 1):
            continue
        disc = Discriminant(d)
        forms = enumerate_reduced(disc)
        h = len(forms)
        discs += 1
        all_pairs = [(i, j) for i in range(h) for j in range(i, h)]
        if len(all_pairs) > samples:
            all_pairs = rng.sample(all_pairs, samples)
        for i, j in all_pairs:
            f, g = forms[i], forms[j]
            crt = compose_crt(f, g)
            mat = compose_via_matrices(f, g)
            _, prod = ideal_mul(form_to_ideal(f), form_to_ideal(g))
            idl = reduce_form(ideal_to_form(prod))[0]
            pairs += 1
            if not (crt == mat == idl):
                mismatches.append(
                    {"d": d, "f": _form_json(f), "g": _form_json(g)}
                )
    result = {
        "range": [lo, hi],
        "discriminants": discs,
        "pairs": pairs,
        "mismatches": mismatches,
    }
    lines = [f"checked {discs} discriminants, {pairs} pairs, {len(mismatches)} mismatches"]
    return result, lines


def build_parser() -> _Parser:
    shared = _Parser(add_help=False)
    shared.add_argument(
        "--format",
        choices=("json", "text"),
        default=argparse.SUPPRESS,
        help="output format (default: text, or the QG_FORMAT environment variable)",
    )
    parser = _Parser(prog="quadgenus", description=__doc__, parents=[shared])
    sub = parser.add_subparsers(dest="command", metavar="command")

    def add(name, fn, **arguments):
        p = sub.add_parser(name, parents=[shared])
        p.add_argument("-d", required=True, help="discriminant (negative, 0 or 1 mod 4)")
        for arg, helptext in arguments.items():
            p.add_argument(arg, help=helptext)
        p.set_defaults(fn=fn)
        return p

    add("reduce", _cmd_reduce, form='form "(a,b,c)"')
    add("enumerate", _cmd_enumerate)
    add("compose", _cmd_compose, f='first form "(a,b,c)"', g='second form "(a,b,c)"')
    add("compose-matrix", _cmd_compose_matrix, f='first form "(a,b,c)"', g='second form "(a,b,c)"')
    p = add("classgroup", _cmd_classgroup)
    p.add_argument("--table", action="store_true", help="include the full Cayley table")
    add("ideal-mul", _cmd_ideal_mul, i1='first ideal "(a,b)"', i2='second ideal "(a,b)"')
    add("form2ideal", _cmd_form2ideal, form='form "(a,b,c)"')
    add("ideal2form", _cmd_ideal2form, ideal='ideal "(a,b)"')
    add("normform", _cmd_normform, tuple='generator tuple "(p,q),(p,q),..."')
    add("solve-transform", _cmd_solve_transform, x='source tuple "(p,q),..."', y='target tuple "(p,q),..."')
    add("form-action", _cmd_form_action, matrix='matrix "[[..],[..]]"', form='form "(a,b,c)" or tuple "(p,q),..."')
    add("genus", _cmd_genus)
    vp = sub.add_parser("verify", parents=[shared])
    vp.add_argument("--range", required=True, help='discriminant range "-lo..-hi"')
    vp.add_argument("--samples", type=int, default=25, help="max pairs per discriminant")
    vp.set_defaults(fn=_cmd_verify)
    return parser


def _emit(envelope, stream, fmt, text_lines=None):
    if fmt == "json" or text_lines is None:
        print(json.dumps(_stringify(envelope), separators=(",", ":")), file=stream)
    else:
        for line in text_lines:
            print(line, file=stream)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    # join option values that start with "-" so argparse does not read them
    # as flags, e.g. --range -4..-2000
    joined = []
    skip = False
    for i, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok == "--range" and i + 1 < len(argv):
            joined.append(f"--range={argv[i + 1]}")
            skip = True
        else:
            joined.append(tok)
    argv = joined
    parser = build_parser()
    fmt = None
    command = ""
    try:
        args = parser.parse_args(argv)
        fmt = getattr(args, "format", None) or os.environ.get("QG_FORMAT") or "text"
        if fmt not in ("json", "text"):
            raise UsageError(f"QG_FORMAT must be json or text, not {fmt!r}")
        command = args.command or ""
        if not command:
            raise UsageError("a subcommand is required (try --help)")
        result, lines = args.fn(args)
    except UsageError as exc:
        envelope = {"status": "error", "command": command, "error": str(exc)}
        _emit(envelope, sys.stderr, "json")
        return 2
    except (DomainError, ValueError) as exc:
        envelope = {"status": "error", "command": command, "error": str(exc)}
        _emit(envelope, sys.stderr, "json")
        return 1
    envelope = {"status": "ok", "command": command, "result": result}
    _emit(envelope, sys.stdout, fmt, lines)
    return 0


if __name__ == "__main__":
    sys.exit(main())
