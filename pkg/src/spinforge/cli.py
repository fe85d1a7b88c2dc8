"""Command-line front end with machine-readable JSON output.

Every command prints one JSON document to stdout.  All numbers inside the
JSON are decimal strings so arbitrary-precision values survive any JSON
parser; booleans stay booleans.  Exit codes: 0 pass/found, 1 fail/absent,
2 usage error.  SPINFORGE_BOUND overrides the default prime-search bounds.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import clifford, galois, rootdata, spingroup, spinrep
from .coeff import CYCLO8, PreconditionError, ring_from_name
from .galois import SearchExhaustedError


PASS, FAIL, USAGE = 0, 1, 2


def _jsonable(x):
    """Numbers become decimal strings (arbitrary-precision safe); booleans
    stay booleans; containers recurse."""
    if isinstance(x, bool):
        return x
    if isinstance(x, (int, Fraction)):
        return str(x)
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _emit(payload: dict, pretty: bool) -> None:
    print(json.dumps(_jsonable(payload), indent=2 if pretty else None,
                     sort_keys=False))


def _str_list(xs):
    return [str(x) for x in xs]


# ---------------------------------------------------------------------------
# command handlers: each returns (exit_code, payload)

def _cmd_parity(args):
    rec = rootdata.parity_classify(args.m)
    payload = {"m": str(rec["m"]), "qualifies": rec["qualifies"],
               "form": rec["form_type"], "w0_minus_one": rec["w0_minus_one"],
               "w0_order": str(rec["w0_lift_order"])}
    return (PASS if rec["qualifies"] else FAIL), payload


def _cmd_sign_law(args):
    m, k = args.m, args.k
    if not 1 <= k <= m // 2:
        raise _Usage(f"k must lie in [1, {m // 2}] for m={m}")
    g = clifford.MultiVector.one(m, CYCLO8)
    for i in range(1, k + 1):
        g = g * clifford.weyl_generator(i, m, CYCLO8)
    square = g * g
    expected = (-1) ** (k * (k + 1) // 2)
    match = square == clifford.MultiVector.scalar(m, CYCLO8, CYCLO8.from_int(expected))
    payload = {"m": str(m), "k": str(k), "square": clifford.to_text(square),
               "expected": str(expected), "match": match}
    return (PASS if match else FAIL), payload


def _cmd_project(args):
    ring = ring_from_name(args.ring)
    m = args.m if args.m is not None else clifford.mentioned_dimension(args.multivector)
    try:
        mv = clifford.parse_text(args.multivector, m, ring)
    except ValueError as exc:
        raise _Usage(f"malformed multivector: {exc}") from exc
    kind = spingroup.is_gspin(mv)
    if kind != "spin":
        return FAIL, {"m": str(m), "classification": kind,
                      "error": "input is not a spin element"}
    mat = spingroup.project(spingroup.SpinElement(mv))
    return PASS, {"m": str(m), "ring": ring.name, "classification": kind,
                  "matrix": mat.serialized_rows()}


def _cmd_invariant_form(args):
    rec = spinrep.classify_invariant_form(args.m)
    payload = {"m": str(rec["m"]), "dim": str(rec["dim"]),
               "symmetry": rec["symmetry"], "self_dual": rec["self_dual"],
               "rings": rec["rings"]}
    return (PASS if rec["self_dual"] else FAIL), payload


def _cmd_weights(args):
    ws = rootdata.spin_weights(args.m)
    return PASS, {"m": str(args.m), "count": str(len(ws)),
                  "weights": [_str_list(w) for w in ws]}


def _cmd_transitivity(args):
    ok = rootdata.check_simple_transitivity(args.m)
    return (PASS if ok else FAIL), {"m": str(args.m), "simply_transitive": ok}


def _cmd_rho_vee(args):
    rv = rootdata.rho_vee(args.m)
    return (PASS if rv.integral else FAIL), {
        "m": str(args.m), "coefficients": _str_list(rv.coeffs),
        "integral": rv.integral}


def _cmd_cartan(args):
    rec = rootdata.cartan_involution_check(args.m)
    payload = {"m": str(rec["m"]), "fixed_dim": str(rec["fixed_dim"]),
               "half_phi": str(rec["half_phi"]), "holds": rec["holds"]}
    return (PASS if rec["holds"] else FAIL), payload


def _cmd_extension(args):
    rec = spingroup.extension_splits(args.n, args.type)
    payload = {"n": str(args.n), "type": args.type, "splits": rec.splits}
    if rec.section is not None:
        payload["section"] = {"".join("+" if s == 1 else "-" for s in eps): str(sign)
                              for eps, sign in rec.section.items()}
    if rec.obstruction is not None:
        a, b = rec.obstruction
        payload["obstruction"] = {
            "element": "".join("+" if s == 1 else "-" for s in a),
            "reason": "canonical lift squares to -1"}
    return (PASS if rec.splits else FAIL), payload


def _cmd_tower(args):
    tower = galois.prime_tower(args.n, args.bound)
    payload = tower.to_json()
    payload["verified"] = tower.verify()
    return PASS, payload


def _cmd_pair(args):
    tower = None
    if args.tower:
        tower = galois.PrimeTower(primes=tuple(args.tower))
    p = galois.find_pair(args.l, tower, args.bound)
    payload = {"l": str(args.l), "p": str(p),
               "tower": _str_list(args.tower or [])}
    return PASS, payload


def _cmd_order_prime(args):
    q = galois.find_order_l_prime(args.p, args.l, args.bound)
    return PASS, {"p": str(args.p), "l": str(args.l), "q": str(q)}


def _cmd_exponents(args):
    n_alpha = galois.find_generic_exponents(args.m, args.l, args.box)
    if n_alpha is None:
        return FAIL, {"m": str(args.m), "l": str(args.l),
                      "box": str(args.box), "found": False}
    data = galois.ExponentData.build(args.m, args.l, n_alpha)
    payload = data.to_json()
    payload["found"] = True
    return PASS, payload


def _cmd_torus_point(args):
    found = galois.find_regular_torus_point(args.m, args.l, args.p)
    if found is None:
        return FAIL, {"m": str(args.m), "l": str(args.l), "p": str(args.p),
                      "found": False}
    point, values = found
    return PASS, {"m": str(args.m), "l": str(args.l), "p": str(args.p),
                  "found": True, "z": str(point.z),
                  "t": _str_list(point.t), "values": _str_list(values)}


def _cmd_prop26(args):
    report = galois.proposition_2_6_pipeline(args.m, args.box, args.bound)
    return (PASS if report["all_pass"] else FAIL), report


def _cmd_lparam(args):
    m_vec = args.m_vec
    if len(m_vec) != args.n:
        raise _Usage(f"expected {args.n} comma-separated integers")
    rec = rootdata.lparam_descent(args.n, m_vec)
    payload = {"n": str(args.n), "m_vec": _str_list(m_vec),
               "descends": rec["descends"], "l_algebraic": rec["l_algebraic"]}
    return (PASS if rec["descends"] else FAIL), payload


# ---------------------------------------------------------------------------

class _Usage(Exception):
    pass


def _int_list(text: str):
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinforge",
        description="Exact checks and searches for split Clifford algebras, "
                    "spin covers, root data and prime certificates.")
    parser.add_argument("--pretty", action="store_true",
                        help="indent the JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("parity", _cmd_parity, "parity classification of a dimension")
    sp.add_argument("m", type=int)

    sp = add("sign-law", _cmd_sign_law, "square of the k-fold generator lift")
    sp.add_argument("m", type=int)
    sp.add_argument("k", type=int)

    sp = add("project", _cmd_project, "matrix of the covering map on a multivector")
    sp.add_argument("multivector")
    sp.add_argument("--m", type=int, default=None,
                    help="ambient dimension (default: smallest consistent)")
    sp.add_argument("--ring", default="cyclo8",
                    help="rational | cyclo8 | fp:<p> | fp2:<p>")

    sp = add("invariant-form", _cmd_invariant_form,
             "symmetry type of the invariant bilinear form")
    sp.add_argument("m", type=int)

    sp = add("weights", _cmd_weights, "spin weight list")
    sp.add_argument("m", type=int)

    sp = add("transitivity", _cmd_transitivity,
             "simple transitivity of sign changes on the weights")
    sp.add_argument("m", type=int)

    sp = add("rho-vee", _cmd_rho_vee, "half-sum of positive coroots")
    sp.add_argument("m", type=int)

    sp = add("cartan", _cmd_cartan, "split-involution fixed-space count")
    sp.add_argument("m", type=int)

    sp = add("extension", _cmd_extension,
             "does the lifted sign-change group split?")
    sp.add_argument("n", type=int)
    sp.add_argument("type", choices=("B", "D"))

    sp = add("tower", _cmd_tower, "greedy tower of pairwise-split primes")
    sp.add_argument("n", type=int)
    sp.add_argument("--bound", type=int, default=None)

    sp = add("pair", _cmd_pair, "smallest admissible p for a given l")
    sp.add_argument("l", type=int)
    sp.add_argument("--tower", type=_int_list, default=None,
                    help="comma-separated tower primes")
    sp.add_argument("--bound", type=int, default=None)

    sp = add("order-prime", _cmd_order_prime, "smallest prime of order l mod p")
    sp.add_argument("p", type=int)
    sp.add_argument("l", type=int)
    sp.add_argument("--bound", type=int, default=None)

    sp = add("exponents", _cmd_exponents,
             "lexicographically least exponent vector passing both conditions")
    sp.add_argument("m", type=int)
    sp.add_argument("l", type=int)
    sp.add_argument("--box", type=int, default=10)

    sp = add("torus-point", _cmd_torus_point,
             "first regular point of the l-torsion torus")
    sp.add_argument("m", type=int)
    sp.add_argument("l", type=int)
    sp.add_argument("p", type=int)

    sp = add("prop26", _cmd_prop26, "full deterministic search-and-verify pipeline")
    sp.add_argument("m", type=int)
    sp.add_argument("--box", type=int, default=None)
    sp.add_argument("--bound", type=int, default=None)

    sp = add("lparam", _cmd_lparam, "archimedean parameter parities")
    sp.add_argument("n", type=int)
    sp.add_argument("m_vec", type=_int_list, help="comma-separated integers")

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; normalize
        return USAGE if exc.code not in (0, None) else 0
    try:
        code, payload = args.fn(args)
    except _Usage as exc:
        print(f"spinforge: {exc}", file=sys.stderr)
        return USAGE
    except (PreconditionError, ValueError) as exc:
        print(f"spinforge: {exc}", file=sys.stderr)
        if isinstance(exc, SearchExhaustedError):
            return FAIL
        return USAGE
    _emit(payload, args.pretty)
    return code


if __name__ == "__main__":
    sys.exit(main())
