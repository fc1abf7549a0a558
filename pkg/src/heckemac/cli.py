"""Command line interface.

    heckemac E      --type A --rank 2 --box 2 --out e.json
    heckemac satake --type BC --rank 1 --d 1,2 --d2 1,1 --box 3
    heckemac coeff  --type A --rank 1 --tau 3 --char 2:1 --lambda 2
    heckemac verify --config job.json

A job is given either entirely by flags or entirely by ``--config``.
Exit codes: 0 ok, 2 configuration error, 3 verification failure,
4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache
from importlib import resources

import jsonschema

from . import checks
from .coeffs import DivisibilityError, GroupAlgebraElement
from .hecke import InvariantError, generic_context
from .macdonald import E
from .rootdata import Lattice, LatticeError, RootDataError, build_root_system
from .satake import (
    CharacterError, SatakeData, SatakeDataError, UnramifiedCharacter, matrix_coefficient,
    satake_E, split_data, route_residual, validate,
)

EXIT_OK, EXIT_CONFIG, EXIT_VERIFY, EXIT_INTERNAL = 0, 2, 3, 4

FLAG_KEYS = ("type", "rank", "lattice", "lambda", "box", "tau", "d", "d2", "char", "out", "format", "jobs")


class ConfigError(ValueError):
    pass


@lru_cache(maxsize=1)
def _schema() -> dict:
    return json.loads(resources.files("heckemac").joinpath("schema.json").read_text())


def validate_config(cfg: dict) -> dict:
    try:
        jsonschema.validate(cfg, _schema())
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ConfigError(f"config error at {where}: {exc.message}") from None
    return cfg


# -- flag parsing ----------------------------------------------------------------

def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ConfigError(f"expected comma-separated integers, got {text!r}") from None


def _char_entry(text: str):
    if ":" in text:
        re_, im = text.split(":", 1)
        return [re_, im]
    try:
        v = complex(text)
    except ValueError:
        raise ConfigError(f"bad character value {text!r}") from None
    return {"re": v.real, "im": v.imag} if v.imag else v.real


def config_from_flags(ns: argparse.Namespace) -> dict:
    cfg: dict = {}
    if ns.type is not None:
        cfg["type"] = ns.type
    if ns.rank is not None:
        cfg["rank"] = ns.rank
    if ns.lattice is not None:
        cfg["lattice"] = ns.lattice
    if ns.lam:
        cfg["lambda"] = [_ints(x) for x in ns.lam]
    if ns.box is not None:
        cfg["box"] = ns.box
    if ns.tau is not None:
        cfg["tau"] = "generic" if ns.tau == "generic" else _ints(ns.tau)[0]
    if ns.d is not None:
        cfg["d"] = _ints(ns.d)
    if ns.d2 is not None:
        cfg["d2"] = _ints(ns.d2)
    if ns.char is not None:
        cfg["char"] = [_char_entry(x) for x in ns.char.split(",")]
    if ns.out is not None:
        cfg["out"] = ns.out
    if ns.format is not None:
        cfg["format"] = ns.format
    if ns.jobs is not None:
        cfg["jobs"] = ns.jobs
    return cfg


def load_job(ns: argparse.Namespace) -> dict:
    if ns.config:
        used = [k for k in FLAG_KEYS if getattr(ns, "lam" if k == "lambda" else k) not in (None, [])]
        if used:
            raise ConfigError(f"--config cannot be combined with --{', --'.join(used)}")
        try:
            with open(ns.config) as fh:
                cfg = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config: {exc}") from None
    else:
        cfg = config_from_flags(ns)
    return validate_config(cfg)


# -- job setup -------------------------------------------------------------------

def root_datum(cfg: dict):
    R = build_root_system(cfg["type"], cfg["rank"])
    sel = cfg.get("lattice", "P")
    L = Lattice.from_selector(R, sel, cfg.get("basis"))
    return R, L


def weights(cfg: dict, L: Lattice) -> list[tuple[int, ...]]:
    if "lambda" in cfg:
        return sorted({L.check(x) for x in cfg["lambda"]})
    return sorted(L.box(cfg.get("box", 1)))


def satake_data(cfg: dict, R, L) -> SatakeData:
    tau = cfg.get("tau", "generic")
    tau = None if tau == "generic" else tau
    if "d" not in cfg and "d2" not in cfg:
        data = split_data(R, tau)
    else:
        n = R.rank
        d = tuple(cfg.get("d", [1] * (n + 1)))
        d2 = tuple(cfg.get("d2", [0] * (n + 1)))
        data = SatakeData(d, d2, tau)
    return validate(R, L, data)


def character(cfg: dict, L: Lattice) -> UnramifiedCharacter:
    if "char" not in cfg:
        raise ConfigError("a character (--char) is required")
    vals = []
    for v in cfg["char"]:
        if isinstance(v, list):
            vals.append((Fraction(v[0]), Fraction(v[1])))
        elif isinstance(v, dict):
            vals.append(complex(v["re"], v["im"]))
        else:
            vals.append(complex(v))
    return UnramifiedCharacter(L, vals)


# -- record builders (run in workers) ---------------------------------------------

@lru_cache(maxsize=None)
def _ctx(type_: str, rank: int, basis: tuple, label: str):
    R = build_root_system(type_, rank)
    return generic_context(R, Lattice(R, basis, label))


def _tau_terms(f: GroupAlgebraElement) -> list[dict]:
    out = []
    den = f.ns.denom
    for w, c in f.items():
        for (e,), v in sorted(c.terms.items()):
            h = Fraction(2 * e, den)
            if h.denominator != 1:
                raise InvariantError(f"tau exponent {h / 2} is not a half-integer")
            v = Fraction(v)
            out.append({"weight": list(w), "t_num_halfexp": int(h), "coeff": f"{v.numerator}/{v.denominator}"})
    return out


def _records(task):
    kind, cfg, lams = task
    R, L = root_datum(cfg)
    out = []
    if kind == "E":
        ctx = _ctx(cfg["type"], cfg["rank"], L.basis, L.label)
        for lam in lams:
            out.append({"lambda": list(lam), "terms": E(ctx, lam).to_json()})
    elif kind == "satake":
        data = satake_data(cfg, R, L)
        for lam in lams:
            res = route_residual(R, L, data, lam)
            out.append({
                "lambda": list(lam),
                "terms": _tau_terms(satake_E(R, L, data, lam)),
                "data": data.to_json(),
                "residual_terms": len(res),
            })
    elif kind == "coeff":
        data = satake_data(cfg, R, L)
        chi = character(cfg, L)
        for lam in lams:
            v = matrix_coefficient(R, L, data, lam, chi)
            c = complex(v)
            out.append({
                "lambda": list(lam),
                "exact": str(v) if chi.exact else None,
                "re": c.real,
                "im": c.imag,
                "residual_terms": len(route_residual(R, L, data, lam)),
            })
    return out


def compute(kind: str, cfg: dict) -> list[dict]:
    R, L = root_datum(cfg)
    lams = weights(cfg, L)
    if kind in ("satake", "coeff"):
        data = satake_data(cfg, R, L)
        if kind == "coeff":
            if data.tau is None:
                raise ConfigError("matrix coefficients need a numeric --tau")
            character(cfg, L)
    jobs = cfg.get("jobs", 1)
    if jobs <= 1 or len(lams) < 2:
        return _records((kind, cfg, lams))
    chunks = [lams[k::jobs] for k in range(jobs) if lams[k::jobs]]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_records, [(kind, cfg, c) for c in chunks]))
    merged = [r for part in parts for r in part]
    return sorted(merged, key=lambda r: r["lambda"])


# -- output -------------------------------------------------------------------------

def render(kind: str, cfg: dict, records: list[dict], fmt: str) -> str:
    if fmt == "json":
        doc = {
            "kind": kind,
            "type": cfg["type"],
            "rank": cfg["rank"],
            "lattice": cfg.get("lattice", "P"),
            "records": records,
        }
        return json.dumps(doc, sort_keys=True, indent=1) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if kind == "E":
        w.writerow(["lambda", "weight", "coefficient"])
        for r in records:
            for t in r["terms"]:
                w.writerow([_vec(r["lambda"]), _vec(t["weight"]), _poly(t["coeff"])])
    elif kind == "satake":
        w.writerow(["lambda", "weight", "t_num_halfexp", "coeff", "residual_terms"])
        for r in records:
            for t in r["terms"]:
                w.writerow([_vec(r["lambda"]), _vec(t["weight"]), t["t_num_halfexp"], t["coeff"],
                            r["residual_terms"]])
    else:
        w.writerow(["lambda", "re", "im", "exact", "residual_terms"])
        for r in records:
            w.writerow([_vec(r["lambda"]), repr(r["re"]), repr(r["im"]), r["exact"] or "",
                        r["residual_terms"]])
    return buf.getvalue()


def _vec(v) -> str:
    return " ".join(str(x) for x in v)


def _poly(terms: list[dict]) -> str:
    parts = []
    for t in terms:
        c = Fraction(t["num"], t["den"])
        mon = "*".join(f"{k}^({Fraction(v) / 2})" for k, v in sorted(t["q2exp"].items()))
        parts.append(f"{c}" + (f"*{mon}" if mon else ""))
    return " + ".join(parts)


def emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def read_E_records(doc: dict) -> dict:
    """Inverse of the JSON writer for ``E`` jobs: ``{lambda: GroupAlgebraElement}``."""
    R = build_root_system(doc["type"], doc["rank"])
    L = Lattice.from_selector(R, doc["lattice"])
    ns = generic_context(R, L).ns
    return {tuple(r["lambda"]): GroupAlgebraElement.from_json(ns, r["terms"]) for r in doc["records"]}


# -- verify ---------------------------------------------------------------------------

def verify(cfg: dict, corrupt_t0: bool = False) -> dict:
    R, L = root_datum(cfg)
    data = satake_data(cfg, R, L)
    ctx = generic_context(R, L, t0_twist=2 if corrupt_t0 else 1)
    results = checks.run_suite(R, L, data, radius=cfg.get("box", 2), ctx=ctx)
    return {
        "type": cfg["type"],
        "rank": cfg["rank"],
        "lattice": cfg.get("lattice", "P"),
        "ok": all(ok for ok, _ in results.values()),
        "checks": {k: {"ok": ok, "detail": d} for k, (ok, d) in results.items()},
    }


# -- entry point ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="heckemac", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)
    for name, help_ in [
        ("E", "nonsymmetric Macdonald polynomials E_lambda(q=inf, t)"),
        ("satake", "Satake basis elements with the two-route residual"),
        ("coeff", "matrix coefficients of unramified principal series"),
        ("verify", "run the invariant suites"),
    ]:
        s = sub.add_parser(name, help=help_)
        s.add_argument("--config", help="JSON job file (exclusive with the other flags)")
        s.add_argument("--type", choices=["A", "B", "C", "D", "E", "F", "G", "BC"])
        s.add_argument("--rank", type=int)
        s.add_argument("--lattice", choices=["P", "Q"])
        s.add_argument("--lambda", dest="lam", action="append", default=[],
                       help="weight as comma-separated fundamental-weight coordinates; repeatable")
        s.add_argument("--box", type=int, help="all lattice weights with |coordinates| <= N")
        s.add_argument("--tau", help="residue field cardinality or 'generic'")
        s.add_argument("--d", help="d(a_0),...,d(a_n)")
        s.add_argument("--d2", help="d(2a_0),...,d(2a_n)")
        s.add_argument("--char", help="character values on the lattice basis: re:im (exact) or floats")
        s.add_argument("--out")
        s.add_argument("--format", choices=["json", "csv"])
        s.add_argument("--jobs", type=int)
        if name == "verify":
            s.add_argument("--corrupt-t0", action="store_true", help=argparse.SUPPRESS)
    return p


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        cfg = load_job(ns)
        if ns.command == "verify":
            report = verify(cfg, corrupt_t0=ns.corrupt_t0)
            emit(json.dumps(report, sort_keys=True, indent=1) + "\n", cfg.get("out"))
            return EXIT_OK if report["ok"] else EXIT_VERIFY
        records = compute(ns.command, cfg)
        emit(render(ns.command, cfg, records, cfg.get("format", "json")), cfg.get("out"))
        if any(r.get("residual_terms") for r in records):
            print("error: nonzero residual between the two Satake routes", file=sys.stderr)
            return EXIT_INTERNAL
        return EXIT_OK
    except (ConfigError, LatticeError, RootDataError, SatakeDataError, CharacterError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (InvariantError, DivisibilityError, AssertionError, ArithmeticError) as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
