"""Batch command-line interface.

Three subcommands operate on JSON scenario files:

* ``classify FILE`` -- one stability verdict block per scenario;
* ``sweep FILE --scenario NAME --grid 1,3/2,2`` -- exact quotient-slope table
  over a rational grid;
* ``seshadri FILE --scenario NAME`` -- evaluate the Seshadri rule pipeline
  and print the provenance chain.

Scenario files carry exact numbers only: rationals as strings like "18/5"
(plain JSON integers are also fine), quadratic surds as objects
{"rat": "a/b", "coef": "c/d", "rad": k}. Floats are rejected rather than
silently rounded. Exit codes: 0 on success, 1 when any scenario fails
validation, 2 on an internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import seshadri as _seshadri
from .blowup import CurveScenario, check_epsilon_consistency
from .classify import BundleSplitting, ClassifyFlags, classify_curve
from .errors import FanoslopeError, GridOutOfRange, InvalidScenario
from .exactnum import Surd, compare, render_value
from .slope import destabilizing_quadratic, quotient_slope

__all__ = [
    "main",
    "NamedScenario",
    "ScenarioFile",
    "load_scenario_file",
    "dump_scenario_file",
    "resolve_estimate",
    "format_fixed",
]


# -- exact number (de)serialization ----------------------------------------


def parse_rational(value, context="value"):
    if isinstance(value, bool):
        raise InvalidScenario(f"{context}: expected a rational, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise InvalidScenario(
            f"{context}: floats are not exact; write the rational as a "
            'string like "18/5"'
        )
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidScenario(f"{context}: bad rational {value!r}") from exc
    raise InvalidScenario(f"{context}: cannot read a rational from {value!r}")


def parse_value(value, context="value"):
    """A rational or a surd object."""
    if isinstance(value, dict):
        extra = set(value) - {"rat", "coef", "rad"}
        if extra:
            raise InvalidScenario(f"{context}: unknown surd fields {sorted(extra)}")
        rad = value.get("rad", 0)
        if not isinstance(rad, int) or isinstance(rad, bool):
            raise InvalidScenario(f"{context}: surd radicand must be an integer")
        return Surd(
            parse_rational(value.get("rat", 0), context),
            parse_rational(value.get("coef", 0), context),
            rad,
        )
    return parse_rational(value, context)


def dump_value(value):
    if isinstance(value, Surd):
        if value.is_rational:
            return str(value.rat)
        return {"rat": str(value.rat), "coef": str(value.coef), "rad": value.rad}
    return str(Fraction(value))


# -- scenario files --------------------------------------------------------


@dataclass(frozen=True)
class NamedScenario:
    name: str
    scenario: CurveScenario
    seshadri_spec: object
    flags: ClassifyFlags
    splitting: BundleSplitting | None = None
    description: str | None = None


@dataclass(frozen=True)
class ScenarioFile:
    entries: tuple[NamedScenario, ...]


_FLAG_KEYS = {"isPn", "picardRankOne", "fanoIndex"}
_ENTRY_KEYS = {
    "name",
    "description",
    "n",
    "genus",
    "degree",
    "normalBundleDegree",
    "splitting",
    "Ln",
    "KLn1",
    "anticanonical",
    "seshadri",
    "flags",
}


def _parse_int(raw, context):
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise InvalidScenario(f"{context}: expected an integer, got {raw!r}")
    return raw


def _parse_flags(raw, context):
    if raw is None:
        return ClassifyFlags()
    if not isinstance(raw, dict):
        raise InvalidScenario(f"{context}: flags must be an object")
    extra = set(raw) - _FLAG_KEYS
    if extra:
        raise InvalidScenario(f"{context}: unknown flags {sorted(extra)}")
    index = raw.get("fanoIndex")
    if index is not None:
        index = _parse_int(index, context + ".fanoIndex")
    return ClassifyFlags(
        is_pn=bool(raw.get("isPn", False)),
        picard_rank_one=bool(raw.get("picardRankOne", False)),
        fano_index=index,
    )


def _parse_entry(raw):
    if not isinstance(raw, dict):
        raise InvalidScenario("each scenario must be a JSON object")
    name = raw.get("name")
    if not isinstance(name, str) or not name:
        raise InvalidScenario("each scenario needs a non-empty name")
    extra = set(raw) - _ENTRY_KEYS
    if extra:
        raise InvalidScenario(f"{name}: unknown fields {sorted(extra)}")
    n = _parse_int(raw.get("n"), f"{name}.n")
    genus = _parse_int(raw.get("genus"), f"{name}.genus")
    degree = _parse_int(raw.get("degree"), f"{name}.degree")
    anticanonical = bool(raw.get("anticanonical", False))
    ln = parse_rational(raw.get("Ln"), f"{name}.Ln")

    splitting = None
    if "splitting" in raw:
        twists = raw["splitting"]
        if not isinstance(twists, list) or not twists:
            raise InvalidScenario(f"{name}: splitting must be a non-empty list")
        splitting = BundleSplitting(
            _parse_int(t, f"{name}.splitting") for t in twists
        )

    if "normalBundleDegree" in raw:
        normal_degree = _parse_int(
            raw["normalBundleDegree"], f"{name}.normalBundleDegree"
        )
    elif splitting is not None:
        normal_degree = sum(splitting.twists)
    elif anticanonical:
        normal_degree = degree - 2 + 2 * genus
    else:
        raise InvalidScenario(
            f"{name}: need normalBundleDegree or a splitting"
        )
    if splitting is not None and sum(splitting.twists) != normal_degree:
        raise InvalidScenario(
            f"{name}: splitting twists sum to {sum(splitting.twists)}, "
            f"but normalBundleDegree is {normal_degree}"
        )

    if anticanonical:
        if "KLn1" in raw and parse_rational(raw["KLn1"], f"{name}.KLn1") != -ln:
            raise InvalidScenario(
                f"{name}: anticanonical scenarios have KLn1 = -Ln"
            )
        k_ln1 = -ln
    elif "KLn1" in raw:
        k_ln1 = parse_rational(raw["KLn1"], f"{name}.KLn1")
    else:
        raise InvalidScenario(
            f"{name}: need KLn1 unless the scenario is anticanonical"
        )

    if "seshadri" not in raw:
        raise InvalidScenario(f"{name}: every scenario needs a seshadri entry")

    scenario = CurveScenario(
        n=n,
        genus=genus,
        degree=degree,
        normal_degree=normal_degree,
        ln=ln,
        k_ln1=k_ln1,
        anticanonical=anticanonical,
    )
    return NamedScenario(
        name=name,
        scenario=scenario,
        seshadri_spec=_normalize_seshadri_spec(raw["seshadri"], name),
        flags=_parse_flags(raw.get("flags"), name),
        splitting=splitting,
        description=raw.get("description"),
    )


def parse_scenario_file(data):
    if not isinstance(data, dict) or "scenarios" not in data:
        raise InvalidScenario('a scenario file is {"scenarios": [...]}')
    entries = data["scenarios"]
    if not isinstance(entries, list):
        raise InvalidScenario("scenarios must be a list")
    parsed = tuple(_parse_entry(e) for e in entries)
    names = [e.name for e in parsed]
    if len(set(names)) != len(names):
        raise InvalidScenario("scenario names must be unique within a file")
    return ScenarioFile(entries=parsed)


def load_scenario_file(path):
    with open(path, encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise InvalidScenario(f"{path}: not valid JSON ({exc})") from exc
    return parse_scenario_file(data)


def dump_scenario_file(scenario_file):
    """Serialize back to the on-disk dict form (canonical field order)."""
    out = []
    for entry in scenario_file.entries:
        s = entry.scenario
        record = {"name": entry.name}
        if entry.description is not None:
            record["description"] = entry.description
        record.update(
            n=s.n,
            genus=s.genus,
            degree=s.degree,
            normalBundleDegree=s.normal_degree,
            Ln=dump_value(s.ln),
        )
        if s.anticanonical:
            record["anticanonical"] = True
        else:
            record["KLn1"] = dump_value(s.k_ln1)
        if entry.splitting is not None:
            record["splitting"] = list(entry.splitting.twists)
        record["seshadri"] = entry.seshadri_spec
        flags = entry.flags
        record["flags"] = {
            "isPn": flags.is_pn,
            "picardRankOne": flags.picard_rank_one,
            "fanoIndex": flags.fano_index,
        }
        out.append(record)
    return {"scenarios": out}


# -- the seshadri rule pipeline --------------------------------------------

_PIPELINE_RULES = {
    "linear_subspace_exact",
    "witness_curve_upper",
    "proper_transform_upper",
    "intersection_min_lower",
    "product_fiber_estimate",
    "blowup_exceptional_shift",
    "nested_restriction",
    "moving_curve_upper",
    "point_upper_bound",
    "certify_exact_by_restriction",
    "combine",
}


def _normalize_seshadri_spec(spec, name):
    context = f"{name}.seshadri"
    if isinstance(spec, (str, int)):
        return dump_value(parse_value(spec, context))
    if isinstance(spec, dict):
        if "rule" in spec:
            return _normalize_step(spec, context)
        if "exact" in spec:
            return {"exact": dump_value(parse_value(spec["exact"], context))}
        if "lower" in spec or "upper" in spec:
            out = {}
            if "lower" in spec:
                out["lower"] = dump_value(parse_value(spec["lower"], context))
            if "upper" in spec:
                out["upper"] = dump_value(parse_value(spec["upper"], context))
            extra = set(spec) - {"lower", "upper"}
            if extra:
                raise InvalidScenario(f"{context}: unknown fields {sorted(extra)}")
            return out
        return dump_value(parse_value(spec, context))
    if isinstance(spec, list):
        if not spec:
            raise InvalidScenario(f"{context}: empty rule pipeline")
        return [_normalize_step(step, context) for step in spec]
    raise InvalidScenario(f"{context}: unreadable seshadri entry {spec!r}")


def _normalize_step(step, context):
    if not isinstance(step, dict) or "rule" not in step:
        raise InvalidScenario(f"{context}: each pipeline step needs a rule")
    rule = step["rule"]
    if rule not in _PIPELINE_RULES:
        raise InvalidScenario(f"{context}: unknown rule {rule!r}")
    out = dict(step)
    for key in ("degree", "multiplicity", "restricted"):
        if key in out:
            out[key] = dump_value(parse_value(out[key], f"{context}.{key}"))
    return out


def _run_pipeline(steps, scenario):
    """Interpret a list of rule invocations into a single estimate.

    Steps run in order; each may bind its result with "as" and refer to
    earlier results by name. Where a step needs an input estimate ("of",
    or rule-specific slots) the default is the previous step's result.
    """
    if isinstance(steps, dict):
        steps = [steps]
    named = {}
    previous = None

    def fetch(ref, context):
        if ref is None:
            if previous is None:
                raise InvalidScenario(f"{context}: no previous estimate to use")
            return previous
        if ref not in named:
            raise InvalidScenario(f"{context}: unknown estimate name {ref!r}")
        return named[ref]

    for step in steps:
        rule = step["rule"]
        context = f"seshadri rule {rule}"
        if rule == "linear_subspace_exact":
            estimate = _seshadri.linear_subspace_exact(
                _parse_int(step.get("n"), context + ".n")
            )
        elif rule == "witness_curve_upper":
            estimate = _seshadri.witness_curve_upper(
                parse_value(step.get("degree"), context + ".degree")
            )
        elif rule == "proper_transform_upper":
            estimate = _seshadri.proper_transform_upper(
                parse_value(step.get("degree"), context + ".degree"),
                parse_value(step.get("multiplicity"), context + ".multiplicity"),
            )
        elif rule == "intersection_min_lower":
            estimate = _seshadri.intersection_min_lower(
                fetch(step.get("first"), context),
                fetch(step.get("second"), context),
            )
        elif rule == "product_fiber_estimate":
            estimate = _seshadri.product_fiber_estimate(
                fetch(step.get("of"), context)
            )
        elif rule == "blowup_exceptional_shift":
            estimate = _seshadri.blowup_exceptional_shift(
                fetch(step.get("of"), context)
            )
        elif rule == "nested_restriction":
            estimate = _seshadri.nested_restriction(
                fetch(step.get("inner"), context),
                fetch(step.get("ambient"), context),
            )
        elif rule == "moving_curve_upper":
            estimate = _seshadri.moving_curve_upper(scenario)
        elif rule == "point_upper_bound":
            estimate = _seshadri.point_upper_bound(
                _parse_int(step.get("n"), context + ".n"),
                bool(step.get("isPn", False)),
            )
        elif rule == "certify_exact_by_restriction":
            estimate = _seshadri.certify_exact_by_restriction(
                fetch(step.get("upper"), context),
                fetch(step.get("ambient"), context),
                parse_value(step.get("restricted"), context + ".restricted"),
            )
        elif rule == "combine":
            refs = step.get("of")
            if not isinstance(refs, list) or len(refs) < 2:
                raise InvalidScenario(f"{context}: needs a list of names")
            estimate = fetch(refs[0], context)
            for ref in refs[1:]:
                estimate = estimate.merge(fetch(ref, context))
        else:  # pragma: no cover - guarded by _normalize_step
            raise InvalidScenario(f"unknown rule {rule!r}")
        if "as" in step:
            named[step["as"]] = estimate
        previous = estimate
    return previous


def resolve_estimate(entry):
    """Evaluate a NamedScenario's seshadri spec into a SeshadriEstimate."""
    spec = entry.seshadri_spec
    context = f"{entry.name}.seshadri"
    if isinstance(spec, (str, int)):
        value = parse_value(spec, context)
        estimate = _seshadri.SeshadriEstimate.exactly(
            value,
            (
                _seshadri.ProvenanceEntry(
                    "declared", f"declared exact value {render_value(value)}"
                ),
            ),
        )
    elif isinstance(spec, dict) and "exact" in spec:
        value = parse_value(spec["exact"], context)
        estimate = _seshadri.SeshadriEstimate.exactly(
            value,
            (
                _seshadri.ProvenanceEntry(
                    "declared", f"declared exact value {render_value(value)}"
                ),
            ),
        )
    elif isinstance(spec, dict) and "rule" not in spec:
        lower = parse_value(spec.get("lower", 0), context)
        upper = (
            parse_value(spec["upper"], context) if "upper" in spec else None
        )
        estimate = _seshadri.SeshadriEstimate(
            lower=lower,
            upper=upper,
            provenance=(
                _seshadri.ProvenanceEntry("declared", "declared interval"),
            ),
        )
    else:
        estimate = _run_pipeline(spec, entry.scenario)
    check_epsilon_consistency(entry.scenario, estimate.lower)
    return estimate


# -- deterministic decimal rendering ---------------------------------------


def format_fixed(value, places=6):
    """Exact half-even fixed-point rendering of a rational, e.g. '3.600000'."""
    value = Fraction(value)
    negative = value < 0
    scaled = abs(value) * 10**places
    q, r = divmod(scaled.numerator, scaled.denominator)
    double = 2 * r
    if double > scaled.denominator or (double == scaled.denominator and q % 2):
        q += 1
    digits = str(q).rjust(places + 1, "0")
    text = f"{digits[:-places]}.{digits[-places:]}"
    return f"-{text}" if negative and q else text


# -- rendering -------------------------------------------------------------


def _verdict_record(entry, estimate, verdict):
    return {
        "name": entry.name,
        "status": verdict.status.value,
        "witness_lambda": (
            None
            if verdict.witness_lambda is None
            else dump_value(verdict.witness_lambda)
        ),
        "rule": verdict.rule,
        "condition": verdict.condition,
        "seshadri": {
            "lower": dump_value(estimate.lower),
            "upper": (
                None if estimate.upper is None else dump_value(estimate.upper)
            ),
            "provenance": [list(p) for p in estimate.provenance],
        },
    }


def _print_verdict_block(entry, estimate, verdict, out):
    print(f"scenario: {entry.name}", file=out)
    if entry.description:
        print(f"  about: {entry.description}", file=out)
    print(f"  status: {verdict.status.value}", file=out)
    if verdict.witness_lambda is not None:
        print(
            f"  witness lambda: {render_value(verdict.witness_lambda)}",
            file=out,
        )
    if verdict.condition:
        print(f"  condition: {verdict.condition}", file=out)
    print(f"  rule: {verdict.rule}", file=out)
    print(f"  seshadri: {estimate.describe()}", file=out)
    for rule, statement in estimate.provenance:
        print(f"    - {rule}: {statement}", file=out)


def _print_error_block(name, error, out):
    print(f"scenario: {name}", file=out)
    print(f"  error: {type(error).__name__}: {error}", file=out)


# -- subcommands -----------------------------------------------------------


def cmd_classify(args, out=None):
    out = out if out is not None else sys.stdout
    scenario_file = load_scenario_file(args.file)
    include_endpoint = not args.open_interval
    records = []
    failed = False
    for entry in scenario_file.entries:
        try:
            estimate = resolve_estimate(entry)
            verdict = classify_curve(
                entry.scenario,
                estimate,
                entry.flags,
                include_endpoint=include_endpoint,
            )
        except FanoslopeError as error:
            failed = True
            records.append({"name": entry.name, "error": str(error),
                            "error_type": type(error).__name__})
            if args.format == "text":
                _print_error_block(entry.name, error, out)
            continue
        records.append(_verdict_record(entry, estimate, verdict))
        if args.format == "text":
            _print_verdict_block(entry, estimate, verdict, out)
    if args.format == "json":
        json.dump({"verdicts": records}, out, indent=2)
        print(file=out)
    elif args.format == "csv":
        print("name,status,witness_lambda,rule", file=out)
        for record in records:
            if "error" in record:
                print(f"{record['name']},error,,{record['error_type']}", file=out)
            else:
                witness = record["witness_lambda"]
                if isinstance(witness, dict):
                    witness = render_value(
                        parse_value(witness, record["name"])
                    )
                print(
                    f"{record['name']},{record['status']},"
                    f"{witness if witness is not None else ''},"
                    f"\"{record['rule']}\"",
                    file=out,
                )
    return 1 if failed else 0


def _entry_named(scenario_file, name, path):
    for entry in scenario_file.entries:
        if entry.name == name:
            return entry
    raise InvalidScenario(f"{path}: no scenario named {name!r}")


def _parse_grid(text):
    points = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        points.append(parse_rational(piece, "grid"))
    if not points:
        raise InvalidScenario("the sweep grid is empty")
    return points


def cmd_sweep(args, out=None):
    out = out if out is not None else sys.stdout
    scenario_file = load_scenario_file(args.file)
    entry = _entry_named(scenario_file, args.scenario, args.file)
    estimate = resolve_estimate(entry)
    scenario = entry.scenario
    grid = _parse_grid(args.grid)
    ceiling = estimate.exact if estimate.is_exact else estimate.lower
    quadratic = destabilizing_quadratic(scenario)
    rows = []
    for lam in grid:
        if lam <= 0:
            raise GridOutOfRange(f"grid point {lam} is not positive")
        edge = compare(lam, ceiling)
        if edge > 0 or (args.open_interval and edge == 0):
            raise GridOutOfRange(
                f"grid point {lam} lies outside the certified interval "
                f"(0, {render_value(ceiling)}"
                + (")" if args.open_interval else "]")
            )
        report = quotient_slope(scenario, lam)
        f_value = quadratic(lam)
        sign = "+" if f_value > 0 else ("-" if f_value < 0 else "0")
        rows.append(
            {
                "lambda": str(lam),
                "mu_lambda": str(report.value),
                "mu_lambda_decimal": format_fixed(report.value),
                "f_lambda": str(f_value),
                "sign": sign,
            }
        )
    if args.format == "json":
        json.dump({"scenario": entry.name, "rows": rows}, out, indent=2)
        print(file=out)
    else:
        print("lambda,mu_lambda,mu_lambda_decimal,f_lambda,sign", file=out)
        for row in rows:
            print(
                f"{row['lambda']},{row['mu_lambda']},"
                f"{row['mu_lambda_decimal']},{row['f_lambda']},{row['sign']}",
                file=out,
            )
    return 0


def cmd_seshadri(args, out=None):
    out = out if out is not None else sys.stdout
    scenario_file = load_scenario_file(args.file)
    entry = _entry_named(scenario_file, args.scenario, args.file)
    estimate = resolve_estimate(entry)
    if args.format == "json":
        json.dump(
            {
                "scenario": entry.name,
                "lower": dump_value(estimate.lower),
                "upper": (
                    None
                    if estimate.upper is None
                    else dump_value(estimate.upper)
                ),
                "exact": (
                    None
                    if not estimate.is_exact
                    else dump_value(estimate.exact)
                ),
                "provenance": [list(p) for p in estimate.provenance],
            },
            out,
            indent=2,
        )
        print(file=out)
    elif args.format == "csv":
        print("name,lower,upper,exact", file=out)
        upper = "" if estimate.upper is None else render_value(estimate.upper)
        exact = "" if not estimate.is_exact else render_value(estimate.exact)
        print(
            f"{entry.name},{render_value(estimate.lower)},{upper},{exact}",
            file=out,
        )
    else:
        print(f"scenario: {entry.name}", file=out)
        print(f"  seshadri: {estimate.describe()}", file=out)
        for rule, statement in estimate.provenance:
            print(f"    - {rule}: {statement}", file=out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fanoslope",
        description=(
            "Exact slope-stability verdicts, quotient-slope sweeps, and "
            "Seshadri certificates for curve scenarios"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--open-interval",
        action="store_true",
        help="use the open interval (0, epsilon); ties at the endpoint no "
        "longer destabilize",
    )
    common.add_argument(
        "--format",
        choices=("text", "csv", "json"),
        default="text",
        help="output format (default: text)",
    )

    p_classify = sub.add_parser(
        "classify", parents=[common], help="stability verdict per scenario"
    )
    p_classify.add_argument("file", help="JSON scenario file")
    p_classify.set_defaults(func=cmd_classify)

    p_sweep = sub.add_parser(
        "sweep", parents=[common], help="quotient-slope table over a grid"
    )
    p_sweep.add_argument("file", help="JSON scenario file")
    p_sweep.add_argument("--scenario", required=True, help="scenario name")
    p_sweep.add_argument(
        "--grid", required=True, help="comma-separated rational lambda values"
    )
    p_sweep.set_defaults(func=cmd_sweep)

    p_sesh = sub.add_parser(
        "seshadri",
        parents=[common],
        help="evaluate the Seshadri rule pipeline for one scenario",
    )
    p_sesh.add_argument("file", help="JSON scenario file")
    p_sesh.add_argument("--scenario", required=True, help="scenario name")
    p_sesh.set_defaults(func=cmd_seshadri)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except FanoslopeError as error:
        print(f"error: {error}", file=sys.stderr)
        code = 1
    except OSError as error:
        print(f"error: {error}", file=sys.stderr)
        code = 1
    except Exception as error:  # internal invariant violation
        print(f"internal error: {type(error).__name__}: {error}", file=sys.stderr)
        code = 2
    return code


if __name__ == "__main__":
    sys.exit(main())
