"""Batch front end: parse a job document, evaluate it over a range of s, emit reports.

A job names the Betti degrees of a codimension two CM quotient B, one of the four
constructions and a value or inclusive range of s.  :func:`run` produces one
:class:`Entry` per s; failures are recorded on the entry and never abort the
batch.  Entries hold only JSON-native data, so ``JobReport.from_dict`` inverts
``emit(report, "json")`` exactly.
"""

from __future__ import annotations

import json
import shutil
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from importlib import resources

import jsonschema

from . import codim2 as c2
from .codim2 import Codim2Data
from .errors import InconsistentProfile, Indeterminate, SchemaError, WrongMu
from .families import ConstructionSpec, FamilyReport, Kind, family_report
from .graded import negative_degrees
from .resolution import (
    artinian_profile,
    check_self_dual,
    hilbert_function_crosscheck,
    mapping_cone_resolution,
    minimality_flag,
    reconcile_ranks,
    scheme_profile,
)

REPORT_FORMAT = "gorenstein-families-report/1"

INPUT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["num_vars", "gen_degrees", "rel_degrees", "construction", "s"],
    "additionalProperties": False,
    "properties": {
        "num_vars": {"type": "integer", "minimum": 1},
        "gen_degrees": {"type": "array", "items": {"type": "integer"}, "minItems": 1},
        "rel_degrees": {"type": "array", "items": {"type": "integer"}},
        "construction": {"enum": [k.value for k in Kind]},
        "s": {
            "oneOf": [
                {"type": "integer"},
                {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
            ]
        },
        "assumptions": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "lci_outside_codim": {"type": "integer", "minimum": 0},
                "char_not_2": {"type": "boolean"},
                "assume_ext2_zero": {"type": "boolean"},
            },
        },
        # transcribed resolution: per term, [c0, c1, rank] meaning rank copies of R(c0 + c1*s)
        "printed_resolution": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "array", "items": {"type": "integer"}, "minItems": 3, "maxItems": 3},
            },
        },
    },
}

# depth_{I(Z)} B needed by each construction (the U = Proj(B) - Z hypothesis)
_DEPTH_NEEDED = {Kind.K_SECTION: 1, Kind.H1_MU4: 2, Kind.H1_MU5: 3, Kind.NB: 4}


def report_schema() -> dict:
    """The JSON schema that ``emit(..., "json")`` output conforms to."""
    text = resources.files(__package__).joinpath("report_schema.json").read_text(encoding="utf-8")
    return json.loads(text)


@dataclass(frozen=True)
class JobInput:
    data: Codim2Data
    construction: Kind
    s_range: tuple  # inclusive (lo, hi)
    assumptions: dict = field(default_factory=dict)
    printed_resolution: tuple = None

    @property
    def s_values(self) -> range:
        return range(self.s_range[0], self.s_range[1] + 1)

    def with_overrides(self, s_range=None, **assumptions) -> "JobInput":
        merged = dict(self.assumptions)
        merged.update({k: v for k, v in assumptions.items() if v is not None})
        return JobInput(self.data, self.construction, tuple(s_range or self.s_range), merged, self.printed_resolution)


def parse_input(text: str) -> JobInput:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not a JSON document: {exc}") from None
    try:
        jsonschema.validate(doc, INPUT_SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise SchemaError(f"{where}: {exc.message}") from None

    s = doc["s"]
    lo, hi = (s, s) if isinstance(s, int) else s
    if lo > hi:
        raise SchemaError(f"s: empty range [{lo}, {hi}]")
    D = Codim2Data(doc["num_vars"], doc["gen_degrees"], doc["rel_degrees"])
    kind = Kind(doc["construction"])
    ConstructionSpec(kind, lo).check(D)
    printed = doc.get("printed_resolution")
    if printed is not None:
        printed = tuple(tuple(tuple(x) for x in term) for term in printed)
    return JobInput(D, kind, (lo, hi), dict(doc.get("assumptions", {})), printed)


# -- report data ----------------------------------------------------------------


def encode_value(x):
    """int, Indeterminate or (lower, upper) interval -> JSON-native value."""
    if isinstance(x, Indeterminate):
        return {"indeterminate": x.reason}
    if isinstance(x, tuple):
        lo, hi = x
        return {"interval": [encode_value(lo), encode_value(hi)]}
    return x


def decode_value(x):
    if isinstance(x, dict):
        if "indeterminate" in x:
            return Indeterminate(x["indeterminate"])
        lo, hi = x["interval"]
        return (decode_value(lo), decode_value(hi))
    return x


@dataclass
class Entry:
    s: int
    warnings: list = field(default_factory=list)
    errors: list = field(default_factory=list)  # {"stage", "type", "message"}
    family: dict = None
    resolution: dict = None
    minimality: dict = None
    profile: dict = None
    assumptions: dict = field(default_factory=dict)
    corrections: list = field(default_factory=list)


@dataclass
class JobReport:
    input: dict
    warnings: list
    entries: list
    format: str = REPORT_FORMAT

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, doc: dict) -> "JobReport":
        names = {f.name for f in fields(Entry)}
        entries = [Entry(**{k: v for k, v in e.items() if k in names}) for e in doc["entries"]]
        return cls(doc["input"], doc["warnings"], entries, doc.get("format", REPORT_FORMAT))

    @property
    def ok(self) -> bool:
        return not any(e.errors for e in self.entries)


def _family_dict(fr: FamilyReport) -> dict:
    return {
        "dimension": encode_value(fr.dimension),
        "stratum_codim": encode_value(fr.stratum_codim),
        "exact": fr.exact,
        "regime": asdict(fr.regime),
        "breakdown": {k: encode_value(v) for k, v in fr.breakdown.items()},
        "hypotheses": list(fr.assumptions),
        "notes": list(fr.notes),
    }


def _error(stage: str, exc: Exception) -> dict:
    return {"stage": stage, "type": type(exc).__name__, "message": str(exc)}


def _job_warnings(job: JobInput) -> list:
    D = job.data
    out = []
    if not D.realizable:
        out.append(
            "degree data fails the Gaeta condition n2[j] > n1[j+1]; "
            "no codimension two CM quotient has this minimal resolution"
        )
    for name, make in c2.module_constructors().items():
        bad = negative_degrees(make(D), -20, 40)
        if bad:
            out.append(f"{name} is negative in degrees {bad[0]}..{bad[-1]}; the data is not geometric")
    return out


def _assumption_warnings(job: JobInput) -> list:
    out = []
    a = job.assumptions
    need = _DEPTH_NEEDED[job.construction]
    if "lci_outside_codim" in a and a["lci_outside_codim"] < need:
        out.append(
            f"lci_outside_codim={a['lci_outside_codim']} is below the depth {need} "
            f"that {job.construction.value} needs; the dimension formula may not apply"
        )
    if a.get("char_not_2") is False and job.construction in (Kind.H1_MU5, Kind.NB):
        out.append(f"{job.construction.value} assumes char k != 2")
    return out


def _printed_at(printed, s: int) -> list:
    return [[(c0 + c1 * s, rank) for c0, c1, rank in term] for term in printed]


def run_entry(job: JobInput, s: int) -> Entry:
    D = job.data
    spec = ConstructionSpec(job.construction, s)
    entry = Entry(s, warnings=_assumption_warnings(job), assumptions=dict(job.assumptions))
    try:
        fr = family_report(D, spec, bool(job.assumptions.get("assume_ext2_zero", False)))
        entry.family = _family_dict(fr)
    except (WrongMu, ArithmeticError) as exc:
        entry.errors.append(_error("family", exc))

    if job.construction is Kind.K_SECTION:
        entry.warnings.append("no mapping-cone resolution is modelled for sections of K_B*")
        return entry
    if D.N < spec.rank + 2:
        entry.errors.append({
            "stage": "resolution",
            "type": "NotArtinian",
            "message": f"A would have codimension {spec.rank + 2} in {D.N} variables",
        })
        return entry

    res = mapping_cone_resolution(D, spec)
    if job.printed_resolution is not None:
        try:
            entry.corrections = reconcile_ranks(res, _printed_at(job.printed_resolution, s))
        except ValueError as exc:
            entry.errors.append(_error("printed_resolution", exc))
    entry.resolution = {
        "duality_twist": res.duality_twist,
        "terms": [[[a, r] for a, r in term] for term in res.table()],
        "ranks": list(res.ranks()),
        "self_dual": check_self_dual(res),
        "crosscheck": hilbert_function_crosscheck(D, spec, res),
    }
    m = minimality_flag(res)
    entry.minimality = {"minimal": m.minimal, "coincidences": [list(c) for c in m.coincidences], "label": str(m)}
    if res.length == D.N:
        try:
            ap = artinian_profile(res)
            entry.profile = {"kind": "artinian", "h_vector": list(ap.h_vector), "socle_degree": ap.socle_degree}
        except InconsistentProfile as exc:
            entry.errors.append(_error("profile", exc))
    else:
        sp = scheme_profile(res)
        entry.profile = {
            "kind": "scheme",
            "proj_dim": sp.proj_dim,
            "hilbert_polynomial": [str(c) for c in sp.hilbert_polynomial.coefficients],
            "degree": sp.degree,
            "genus": sp.genus,
        }
    return entry


def run(job: JobInput, workers: int = None) -> JobReport:
    """Evaluate every s in the job's range; entries come back ordered by s."""
    D = job.data
    echo = {
        "num_vars": D.N,
        "gen_degrees": list(D.n1),
        "rel_degrees": list(D.n2),
        "construction": job.construction.value,
        "s_range": list(job.s_range),
        "assumptions": dict(job.assumptions),
    }
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            entries = list(pool.map(lambda s: run_entry(job, s), job.s_values))
    else:
        entries = [run_entry(job, s) for s in job.s_values]
    return JobReport(echo, _job_warnings(job), entries)


# -- output ---------------------------------------------------------------------


def _fmt_value(x) -> str:
    x = decode_value(x)
    if isinstance(x, tuple):
        return f"[{x[0]}, {x[1]}]"
    return str(x)


def _fmt_free(term) -> str:
    return " + ".join(f"R({a})^{r}" if r > 1 else f"R({a})" for a, r in term)


def _emit_text(report: JobReport) -> str:
    width = shutil.get_terminal_size((80, 24)).columns
    inp = report.input
    lines = [
        f"B: N={inp['num_vars']}  n1={tuple(inp['gen_degrees'])}  n2={tuple(inp['rel_degrees'])}",
        f"construction: {inp['construction']}  s in [{inp['s_range'][0]}, {inp['s_range'][1]}]",
        "assumptions: " + (", ".join(f"{k}={json.dumps(v)}" for k, v in inp["assumptions"].items()) or "none"),
    ]
    lines += [f"warning: {w}" for w in report.warnings]
    for e in report.entries:
        lines += ["", f"== s = {e.s} ".ljust(min(width, 72), "=")]
        if e.family is not None:
            fam = e.family
            tag = "exact" if fam["exact"] else "not certified"
            lines.append(f"  {'dimension':<16}{_fmt_value(fam['dimension'])}  ({tag})")
            lines.append(f"  {'stratum codim':<16}{_fmt_value(fam['stratum_codim'])}")
            on = [k for k, v in fam["regime"].items() if v]
            lines.append(f"  {'regime':<16}{', '.join(on) or 'none'}")
            lines.append("  breakdown")
            key_w = max(len(k) for k in fam["breakdown"]) + 2
            for k, v in fam["breakdown"].items():
                lines.append(f"    {k:<{key_w}}{_fmt_value(v)}")
            lines += [f"  hypothesis      {h}" for h in fam["hypotheses"]]
            lines += [f"  note            {n}" for n in fam["notes"]]
        if e.resolution is not None:
            res = e.resolution
            lines.append(f"  resolution (b = {res['duality_twist']}, ranks {' '.join(map(str, res['ranks']))})")
            for k, term in enumerate(res["terms"]):
                lines.append(f"    F{k}  {_fmt_free(term)}")
            lines.append(f"  {'self-dual':<16}{'yes' if res['self_dual'] else 'NO'}")
            lines.append(f"  {'H_A crosscheck':<16}{'agrees' if res['crosscheck'] else 'DISAGREES'}")
            lines.append(f"  {'minimality':<16}{e.minimality['label']}")
        if e.profile is not None:
            p = e.profile
            if p["kind"] == "artinian":
                lines.append(f"  {'h-vector':<16}{' '.join(map(str, p['h_vector']))}")
                lines.append(f"  {'socle degree':<16}{p['socle_degree']}")
            else:
                lines.append(f"  {'dim X':<16}{p['proj_dim']}")
                lines.append(f"  {'degree':<16}{p['degree']}")
                if p["genus"] is not None:
                    lines.append(f"  {'genus':<16}{p['genus']}")
        if e.assumptions:
            lines.append("  assumptions     " + ", ".join(f"{k}={json.dumps(v)}" for k, v in e.assumptions.items()))
        lines += [f"  {c}" for c in e.corrections]
        lines += [f"  warning: {w}" for w in e.warnings]
        lines += [f"  error [{x['stage']}] {x['type']}: {x['message']}" for x in e.errors]
    return "\n".join(lines) + "\n"


def emit(report: JobReport, format: str = "text") -> str:
    if format == "json":
        return json.dumps(report.to_dict(), indent=2) + "\n"
    if format == "text":
        return _emit_text(report)
    raise ValueError(f"unknown format {format!r}")


def load_report(text: str) -> JobReport:
    return JobReport.from_dict(json.loads(text))


__all__ = [
    "INPUT_SCHEMA",
    "REPORT_FORMAT",
    "Entry",
    "JobInput",
    "JobReport",
    "decode_value",
    "emit",
    "encode_value",
    "load_report",
    "parse_input",
    "report_schema",
    "run",
    "run_entry",
]
