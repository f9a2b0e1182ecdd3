"""Command-line interface.

Exit codes: 0 success, 2 invalid input, 3 internal-consistency failure.
Rationals are printed as "num/den" strings so nothing is rounded.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import Any, List, Optional

from . import knfamily, lattice, lens, seifert
from .algebra import CirclePoint, LaurentPolynomial
from .seifert import InconsistencyError, SeifertMatrix


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def q(x) -> str:
    return str(Fraction(x))


def laurent_json(p: LaurentPolynomial) -> dict:
    return {"terms": {str(e): q(a) for e, a in sorted(p.terms.items(), reverse=True)},
            "text": str(p)}


def _load_seifert(path) -> SeifertMatrix:
    return SeifertMatrix.from_json(_read(path))


def _read(path) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as f:
        return f.read()


# subcommands

def cmd_alexander(a):
    return laurent_json(seifert.alexander(_load_seifert(a.file)))


def cmd_det(a):
    return {"determinant": seifert.knot_determinant(_load_seifert(a.file))}


def cmd_sigma(a):
    S = _load_seifert(a.file)
    w = CirclePoint.parse(a.omega)
    sv = seifert.sigma(S, w)
    return {"omega": str(w), "sigma": q(sv.value), "nullity": sv.nullity, "singular": sv.singular}


def cmd_profile(a):
    S = _load_seifert(a.file)
    width = Fraction(a.resolution)
    if width <= 0:
        raise ValueError("resolution must be positive")
    bps, values = seifert.signature_profile(S, width)
    rows = []
    edges = [None] + bps + [None]
    for i, v in enumerate(values):
        lo, hi = edges[i], edges[i + 1]
        row = {"interval": i,
               "u_from": "-inf" if lo is None else q(lo.hi),
               "u_to": "inf" if hi is None else q(hi.lo),
               "sigma": v}
        if a.degrees:
            row["approx_deg_from"] = -180.0 if lo is None else math.degrees(2 * math.atan(float(lo.midpoint)))
            row["approx_deg_to"] = 180.0 if hi is None else math.degrees(2 * math.atan(float(hi.midpoint)))
        rows.append(row)
    if a.tsv:
        return rows
    return {"breakpoints": [{"lo": q(b.lo), "hi": q(b.hi)} for b in bps],
            "values": values, "intervals": rows}


def cmd_kn_matrix(a):
    if a.n < 0:
        raise ValueError("N must be nonnegative")
    return [list(r) for r in knfamily.seifert_kn(a.n).entries]


def cmd_kn_skein(a):
    r = knfamily.skein_check(a.max)
    out = {"ok": r.ok, "checked": r.checked}
    if r.first_failure is not None:
        out["first_failure"] = r.first_failure
    return out


def cmd_kn_grid(a):
    l0, _ = knfamily.compute_l0()
    top = a.lmax or l0 + 8
    if top <= l0:
        raise ValueError(f"--lmax must exceed l0 = {l0}")
    seq = knfamily.build_omega_sequence(top)
    rng = range(seq.l0 + 1, top + 1)
    cells = knfamily.lemma_dichotomy_grid(seq, rng, rng)
    return [c.as_dict() for c in cells]


def cmd_kn_sigmabar(a):
    combo = knfamily.KnotCombo.parse(a.combo)
    l0, _ = knfamily.compute_l0()
    k = a.k or 8
    if k < 1:
        raise ValueError("--k must be positive")
    seq = knfamily.build_omega_sequence(l0 + k)
    return {"combo": str(combo), "l0": seq.l0,
            "omegas": [str(seq.omega(seq.l0 + j)) for j in range(1, k + 1)],
            "sigma_bar": knfamily.sigma_bar(combo, seq, k)}


def cmd_kn_independence(a):
    combo = knfamily.KnotCombo.parse(a.combo)
    if combo.is_zero():
        raise ValueError("the combination is zero")
    top = combo.terms[-1][1]
    l0, _ = knfamily.compute_l0()
    seq = knfamily.build_omega_sequence(max(top, l0 + 1) + 8)
    w = knfamily.independence_certificate(combo, seq)
    return {"combo": str(combo), "l0": seq.l0, "l": w.l, "omega": str(w.omega),
            "sigma": w.sigma, "route": w.route}


def cmd_lens_cf(a):
    return lens.cf_expand(a.p, a.q)


def cmd_lens_lattice(a):
    s = lens.LensSum.parse(a.sum)
    return [list(r) for r in lens.plumbing_lattice(s).gram]


def cmd_lens_obstruct(a):
    return lens.obstruct(lens.LensSum.parse(a.sum)).to_json()


def cmd_lattice_embed(a):
    L = lattice.IntegralLattice.from_json(_read(a.file))
    if a.sign not in (1, -1):
        raise ValueError("sign must be 1 or -1")
    r = lattice.embed(L, a.rank, a.sign)
    if not r:
        return {"embeddable": False, "reason": r.reason}
    return {"embeddable": True, "witness": r.to_json()}


def cmd_lattice_standard(a):
    L = lattice.IntegralLattice.from_json(_read(a.file))
    return {"standard": lattice.is_standard(L)}


def build_parser() -> argparse.ArgumentParser:
    fmt = _Parser(add_help=False)
    fmt.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    fmt.add_argument("--tsv", action="store_true", default=argparse.SUPPRESS)

    p = _Parser(prog="concordance", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true")
    p.add_argument("--tsv", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("alexander", parents=[fmt]); s.add_argument("file")
    s.set_defaults(fn=cmd_alexander)
    s = sub.add_parser("det", parents=[fmt]); s.add_argument("file")
    s.set_defaults(fn=cmd_det)
    s = sub.add_parser("sigma", parents=[fmt]); s.add_argument("file")
    s.add_argument("--omega", required=True, help="half-angle tangent u, or 'inf'")
    s.set_defaults(fn=cmd_sigma)
    s = sub.add_parser("profile", parents=[fmt]); s.add_argument("file")
    s.add_argument("--resolution", default="1/1000", help="breakpoint interval width")
    s.add_argument("--degrees", action="store_true", help="add approximate angles")
    s.set_defaults(fn=cmd_profile)

    kn = sub.add_parser("kn").add_subparsers(dest="kn_command", required=True, parser_class=_Parser)
    s = kn.add_parser("matrix", parents=[fmt]); s.add_argument("n", type=int)
    s.set_defaults(fn=cmd_kn_matrix)
    s = kn.add_parser("skein", parents=[fmt]); s.add_argument("--max", type=int, required=True)
    s.set_defaults(fn=cmd_kn_skein)
    s = kn.add_parser("grid", parents=[fmt]); s.add_argument("--lmax", type=int)
    s.set_defaults(fn=cmd_kn_grid)
    s = kn.add_parser("sigmabar", parents=[fmt]); s.add_argument("--combo", required=True)
    s.add_argument("--k", type=int)
    s.set_defaults(fn=cmd_kn_sigmabar)
    s = kn.add_parser("independence", parents=[fmt]); s.add_argument("--combo", required=True)
    s.set_defaults(fn=cmd_kn_independence)

    ln = sub.add_parser("lens").add_subparsers(dest="lens_command", required=True, parser_class=_Parser)
    s = ln.add_parser("cf", parents=[fmt]); s.add_argument("p", type=int); s.add_argument("q", type=int)
    s.set_defaults(fn=cmd_lens_cf)
    s = ln.add_parser("lattice", parents=[fmt]); s.add_argument("sum")
    s.set_defaults(fn=cmd_lens_lattice)
    s = ln.add_parser("obstruct", parents=[fmt]); s.add_argument("sum")
    s.set_defaults(fn=cmd_lens_obstruct)

    la = sub.add_parser("lattice").add_subparsers(dest="lattice_command", required=True, parser_class=_Parser)
    s = la.add_parser("embed", parents=[fmt]); s.add_argument("file")
    s.add_argument("--rank", type=int, required=True, help="ambient rank N")
    s.add_argument("--sign", type=int, required=True, choices=[1, -1])
    s.set_defaults(fn=cmd_lattice_embed)
    s = la.add_parser("standard", parents=[fmt]); s.add_argument("file")
    s.set_defaults(fn=cmd_lattice_standard)
    return p


def to_tsv(payload: Any) -> str:
    if isinstance(payload, list) and payload and all(isinstance(r, dict) for r in payload):
        keys = list(payload[0])
        lines = ["\t".join(keys)]
        lines += ["\t".join(str(r[k]) for k in keys) for r in payload]
        return "\n".join(lines)
    if isinstance(payload, dict):
        return "\n".join(f"{k}\t{json.dumps(v) if isinstance(v, (list, dict)) else v}"
                         for k, v in payload.items())
    if isinstance(payload, list):
        return "\n".join("\t".join(map(str, r)) if isinstance(r, list) else str(r) for r in payload)
    return str(payload)


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        payload = args.fn(args)
    except UsageError as e:
        print(f"concordance: {e}", file=err)
        return 2
    except InconsistencyError as e:
        print(f"concordance: internal consistency failure: {e}", file=err)
        return 3
    except (ValueError, ZeroDivisionError, OSError) as e:
        msg = str(e).splitlines()[0] if str(e) else type(e).__name__
        print(f"concordance: invalid input: {msg}", file=err)
        return 2
    print(to_tsv(payload) if args.tsv else json.dumps(payload), file=out)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
