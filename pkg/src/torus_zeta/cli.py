"""Command-line front end.

Input is a JSON object describing a matrix over GF(q)[t]; every polynomial
is a little-endian coefficient list (constant term first)::

    {"p": 7, "e": 1, "d": 2, "entries": [[[6], []], [[], [2]]]}

For e > 1 each coefficient is itself a little-endian list of residues mod p
(the coordinates over GF(p) in the basis 1, x, ..., x^(e-1)), and
``field_modulus`` may name the defining polynomial of GF(p^e).
"""

import argparse
import json
import sys
from fractions import Fraction
from importlib import resources

from ._intmath import is_prime, vp
from .dichotomy import (build_exceptional_set, hankel_det, kronecker_detect,
                        lcm_den_growth, polya_decay_report)
from .errors import InternalInconsistency, TorusZetaError
from .funcfield import PolyMatrix, charpoly
from .gfq import make_field
from .newton import newton_polygon
from .zeta import (Algebraic, classify, closed_form_series, dichotomy_coefficients,
                   nk_formula, nk_sequence, spectral_data, zeta_series)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_INCONSISTENT = 3


class ParseError(TorusZetaError, ValueError):
    pass


class ValidationError(TorusZetaError, ValueError):
    def __init__(self, field, message):
        self.field = field
        super().__init__(f"invalid field {field!r}: {message}")


# -- input -------------------------------------------------------------------


def _int(obj, name):
    if isinstance(obj, bool) or not isinstance(obj, int):
        raise ValidationError(name, f"expected an integer, got {obj!r}")
    return obj


def _int_list(obj, name):
    if not isinstance(obj, list):
        raise ValidationError(name, f"expected a list, got {obj!r}")
    return [_int(x, name) for x in obj]


def parse_matrix_input(data):
    """Validate a MatrixInput object; returns (field, matrix, normalized echo)."""
    if not isinstance(data, dict):
        raise ParseError("top-level JSON value must be an object")
    for key in ("p", "d", "entries"):
        if key not in data:
            raise ValidationError(key, "missing")
    p = _int(data["p"], "p")
    if p < 2 or not is_prime(p):
        raise ValidationError("p", f"{p} is not prime")
    e = _int(data.get("e", 1), "e")
    if e < 1:
        raise ValidationError("e", "must be >= 1")
    modulus = data.get("field_modulus")
    try:
        if modulus is not None:
            modulus = [c % p for c in _int_list(modulus, "field_modulus")]
            while modulus and modulus[-1] == 0:
                modulus.pop()
            if e == 1:
                raise ValidationError("field_modulus", "only meaningful when e > 1")
            field = make_field(p, e, modulus)
        else:
            field = make_field(p, e)
    except TorusZetaError as ex:
        if isinstance(ex, ValidationError):
            raise
        raise ValidationError("field_modulus", str(ex)) from None
    d = _int(data["d"], "d")
    if d < 1:
        raise ValidationError("d", "must be >= 1")
    entries = data["entries"]
    if not isinstance(entries, list) or len(entries) != d:
        raise ValidationError("entries", f"expected {d} rows")
    rows = []
    echo_rows = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != d:
            raise ValidationError("entries", f"row {i} must have {d} entries")
        out_row, echo_row = [], []
        for j, poly in enumerate(row):
            name = f"entries[{i}][{j}]"
            if not isinstance(poly, list):
                raise ValidationError(name, "expected a coefficient list")
            codes, echo = [], []
            for c in poly:
                if e == 1:
                    r = _int(c, name) % p
                    codes.append(r)
                    echo.append(r)
                else:
                    coords = [x % p for x in _int_list(c, name)]
                    if len(coords) > e:
                        raise ValidationError(name, f"coordinate list longer than e={e}")
                    coords += [0] * (e - len(coords))
                    codes.append(field.from_coords(tuple(coords)))
                    echo.append(coords)
            while codes and codes[-1] == 0:
                codes.pop()
                echo.pop()
            out_row.append(codes)
            echo_row.append(echo)
        rows.append(out_row)
        echo_rows.append(echo_row)
    echo = {"p": p, "e": e}
    if e > 1:
        echo["field_modulus"] = list(field.modulus)
    echo["d"] = d
    echo["entries"] = echo_rows
    return field, PolyMatrix(field, rows), echo


def load_input(path):
    try:
        if path == "-":
            data = json.load(sys.stdin)
        else:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
    except OSError as ex:
        raise ParseError(f"cannot read {path}: {ex.strerror}") from None
    except json.JSONDecodeError as ex:
        raise ParseError(f"malformed JSON in {path}: {ex}") from None
    return parse_matrix_input(data)


def load_schema():
    return json.loads(resources.files("torus_zeta").joinpath("report.schema.json").read_text())


# -- reports -----------------------------------------------------------------


def _nk_pipeline(matrix, kmax, need):
    seq = nk_sequence(matrix, max(kmax, need))
    spec = spectral_data(matrix)
    for k in range(1, seq.kmax + 1):
        if nk_formula(spec, k) != seq.nk(k):
            raise InternalInconsistency(
                f"N_{k}: spectral formula gives {nk_formula(spec, k)}, determinant gives {seq.nk(k)}")
    return seq, spec


def build_report(field, matrix, echo, kmax=48, terms=64):
    seq, spec = _nk_pipeline(matrix, kmax, terms - 1)
    verdict = classify(spec)
    series = zeta_series(seq, terms)
    chi = charpoly(matrix)
    zeros = [k for k in range(1, kmax + 1) if seq.nk(k).exponent is None]
    report = {
        "input": echo,
        "field": dict(field.to_json(), q=field.q),
        "kmax": kmax,
        "terms": terms,
        "charpoly": [list(c.coeffs) for c in chi.coeffs],
        "newton_polygon": newton_polygon(chi).to_json(),
        "N_k": [{"k": k, "value": str(seq.nk(k))} for k in range(1, kmax + 1)],
        "spectral": spec.to_json(),
        "verdict": verdict.to_json(),
        "series": series.to_json(),
        "flags": {
            "mixed_degeneracy": 0 < len(zeros) < kmax,
            "zero_counts_at": zeros,
        },
    }
    if isinstance(verdict, Algebraic):
        cf = closed_form_series(verdict.closed_form, terms)
        if cf.coeffs != series.coeffs:
            raise InternalInconsistency("closed form expansion differs from exp(sum N_k z^k / k)")
        report["closed_form_matches_series"] = True
    return report, spec, verdict


def _vp_fraction(x, p):
    return vp(x.numerator, p) - vp(x.denominator, p)


def _valuation(elem, p):
    """v_p of a nonzero element c * p^(j/s) of the radical field."""
    nz = [(j, c) for j, c in enumerate(elem.coords) if c]
    if len(nz) != 1:
        return None
    j, c = nz[0]
    return _vp_fraction(c, p) + Fraction(j, elem.field.s)


def build_diagnostics(spec, verdict, kmax, hankel_max=None, kronecker=False,
                      lcm=False, exceptional_bound=None, kronecker_d=4):
    window = dichotomy_coefficients(spec, kmax)
    out = {
        "radical_index": window.field.s,
        "c_k": [{"k": k, "value": window[k].to_json()} for k in range(1, kmax + 1)],
    }
    if hankel_max is not None:
        n_max = min(hankel_max, window.T // 2)
        out["hankel"] = {
            "dets": [{"n": n, "value": hankel_det(window, 0, n).to_json()} for n in range(n_max + 1)],
            "polya_decay": [{"n": n, "abs": a, "root": r}
                            for n, a, r in polya_decay_report(window, n_max)],
        }
    if kronecker:
        attempts = []
        found = None
        if window.is_rational:
            m = 0
            while 2 * (m + kronecker_d) <= window.T:
                attempts.append(m)
                res = kronecker_detect(window, m, kronecker_d)
                if res is not None:
                    found = {"m": m, "P": [str(c) for c in res[0]], "Q": [str(c) for c in res[1]]}
                    break
                m += 1
        out["kronecker"] = {"d": kronecker_d, "tried_m": attempts, "result": found}
    if lcm:
        sect = {"without_S": lcm_den_growth(window, None, kmax).to_json()}
        s_set = build_exceptional_set(spec.p, kmax)
        sect["with_S"] = lcm_den_growth(window, s_set, kmax).to_json()
        if verdict.kind == "transcendental":
            n1 = verdict.witness_n
            walk = []
            v = 0
            while n1 * spec.p ** v <= kmax:
                k = n1 * spec.p ** v
                val = _valuation(window[k], spec.p) if window[k] else None
                walk.append({"V": v, "k": k, "v_p": None if val is None else str(val)})
                v += 1
            sect["witness_valuations"] = walk
        out["lcm"] = sect
    if exceptional_bound is not None:
        s_set = build_exceptional_set(spec.p, exceptional_bound)
        out["exceptional_set"] = dict(s_set.to_json(), density=[
            {"n": n, "count": c, "bound": b} for n, c, b in s_set.density_report()])
    return out


# -- entry point -------------------------------------------------------------


def _emit(obj, path):
    text = json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parser():
    ap = argparse.ArgumentParser(prog="torus-zeta", description=(
        "Artin-Mazur zeta functions of endomorphisms of the positive-characteristic torus."))
    ap.add_argument("--json-schema", action="store_true", help="print the report JSON schema and exit")
    sub = ap.add_subparsers(dest="command")

    def common(p, terms=True):
        p.add_argument("-i", "--input", required=True, help="MatrixInput JSON file ('-' for stdin)")
        p.add_argument("-o", "--output", help="write the JSON report here (default stdout)")
        p.add_argument("--kmax", type=int, default=48, help="largest k for N_k (default 48)")
        if terms:
            p.add_argument("--terms", type=int, default=64, help="zeta series terms (default 64)")

    common(sub.add_parser("analyze", help="full report: N_k, spectral data, verdict, series"))
    d = sub.add_parser("diagnose", help="report plus dichotomy diagnostics on c_k = N_k / r^k")
    common(d)
    d.add_argument("--hankel-max", type=int, help="Hankel determinants Delta_0..Delta_N of the c_k window")
    d.add_argument("--kronecker", action="store_true", help="run Kronecker rationality detection")
    d.add_argument("--lcm", action="store_true", help="denominator lcm growth and witness valuations")
    d.add_argument("--exceptional-set", type=int, metavar="BOUND",
                   help="list the exceptional set S up to BOUND")
    s = sub.add_parser("series", help="print zeta coefficients")
    s.add_argument("-i", "--input", required=True)
    s.add_argument("--terms", type=int, default=64)
    return ap


def main(argv=None):
    ap = _parser()
    args = ap.parse_args(argv)
    if args.json_schema:
        _emit(load_schema(), None)
        return EXIT_OK
    if args.command is None:
        ap.print_usage(sys.stderr)
        return EXIT_VALIDATION
    try:
        if getattr(args, "kmax", 1) < 1:
            raise ValidationError("kmax", "must be >= 1")
        if args.terms < 1:
            raise ValidationError("terms", "must be >= 1")
        field, matrix, echo = load_input(args.input)
        if args.command == "series":
            seq, spec = _nk_pipeline(matrix, 1, args.terms - 1)
            series = zeta_series(seq, args.terms)
            print(", ".join(series.to_json()))
            verdict = classify(spec)
            if isinstance(verdict, Algebraic):
                cf = closed_form_series(verdict.closed_form, args.terms)
                print("closed form: " + ", ".join(cf.to_json()))
                if cf.coeffs != series.coeffs:
                    raise InternalInconsistency("closed form expansion differs from the series")
            return EXIT_OK
        report, spec, verdict = build_report(field, matrix, echo, args.kmax, args.terms)
        if args.command == "diagnose":
            report["diagnostics"] = build_diagnostics(
                spec, verdict, args.kmax, args.hankel_max, args.kronecker,
                args.lcm, args.exceptional_set)
        _emit(report, args.output)
        return EXIT_OK
    except InternalInconsistency as ex:
        print(f"internal inconsistency: {ex}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except TorusZetaError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
