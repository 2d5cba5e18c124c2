"""Parametric realization families: run-based templates and their catalog.

A template describes a path as a sequence of runs.  A run expands from its
start anchor to its end anchor in fixed signed steps; anchors are affine
expressions in the template's parameter.  The catalog is curated plain-text
data; every template is re-validated on instantiation, so a transcription
slip surfaces as a template-defect error instead of a wrong path.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources

from .errors import ParseError, TemplateDefectError
from .model import EdgeLengthList, PathRealization, is_perfect, validate

__all__ = [
    "AffineExpr",
    "Run",
    "FamilyTemplate",
    "Catalog",
    "load_catalog",
    "parse_catalog",
    "format_catalog",
    "staircase",
    "SoundnessEntry",
]

KINDS = ("perfect", "linear", "cyclic")

_EXPR_RE = re.compile(r"^(?:(\d*)([a-z]))?([+-]?\d+)?$")


@dataclass(frozen=True, slots=True)
class AffineExpr:
    """Value coefficient * param + constant."""

    coeff: int
    const: int

    def __call__(self, param: int) -> int:
        return self.coeff * param + self.const

    @classmethod
    def of(cls, value: "AffineExpr | int") -> "AffineExpr":
        if isinstance(value, AffineExpr):
            return value
        return cls(0, int(value))

    @classmethod
    def parse(cls, text: str) -> "AffineExpr":
        m = _EXPR_RE.match(text.strip())
        if not m or (m.group(2) is None and m.group(3) is None):
            raise ParseError(f"bad affine expression {text!r}")
        coeff_txt, letter, const_txt = m.groups()
        coeff = 0
        if letter is not None:
            coeff = int(coeff_txt) if coeff_txt else 1
        const = int(const_txt) if const_txt else 0
        return cls(coeff, const)

    def format(self, letter: str) -> str:
        if self.coeff == 0:
            return str(self.const)
        head = letter if self.coeff == 1 else f"{self.coeff}{letter}"
        if self.const == 0:
            return head
        return f"{head}+{self.const}" if self.const > 0 else f"{head}{self.const}"


@dataclass(frozen=True, slots=True)
class Run:
    """Arithmetic run from start to end in signed steps; start == end is a vertex."""

    start: AffineExpr
    end: AffineExpr
    step: int

    def expand(self, param: int) -> list[int]:
        s = self.start(param)
        e = self.end(param)
        if s == e:
            return [s]
        span = e - s
        if self.step == 0 or span % self.step != 0 or span // self.step < 0:
            raise TemplateDefectError(
                f"run {s}..{e} not reachable in steps of {self.step}"
            )
        return list(range(s, e + (1 if self.step > 0 else -1), self.step))

    def format(self, letter: str) -> str:
        if self.start == self.end:
            return self.start.format(letter)
        return (
            f"{self.start.format(letter)}..{self.end.format(letter)}/"
            f"{'+' if self.step > 0 else ''}{self.step}"
        )

    @classmethod
    def parse(cls, text: str) -> "Run":
        if ".." not in text:
            e = AffineExpr.parse(text)
            return cls(e, e, 1)
        head, _, steptxt = text.partition("/")
        start_txt, _, end_txt = head.partition("..")
        if not steptxt:
            raise ParseError(f"run {text!r} missing step")
        return cls(AffineExpr.parse(start_txt), AffineExpr.parse(end_txt), int(steptxt))


@dataclass(frozen=True, slots=True)
class FamilyTemplate:
    """One catalog record: exponent pattern, claimed kind, and run list."""

    id: str
    kind: str
    letter: str  # parameter letter, "-" for constant templates
    exponents: tuple[AffineExpr, AffineExpr, AffineExpr, AffineExpr]
    runs: tuple[Run, ...]
    provenance: str
    min_param: int = 0

    @property
    def parametric(self) -> bool:
        return any(e.coeff for e in self.exponents)

    def expected_list(self, param: int) -> EdgeLengthList:
        a, b, c, d = (e(param) for e in self.exponents)
        if min(a, b, c, d) < 0:
            raise TemplateDefectError(f"{self.id}: negative exponent at param {param}")
        return EdgeLengthList.from_exponents(a, b, c, d)

    def instantiate(self, param: int = 0) -> PathRealization:
        """Expand and validate; raises TemplateDefectError on any defect."""
        if self.parametric and param < self.min_param:
            raise ValueError(
                f"{self.id}: parameter {param} below validity range >= {self.min_param}"
            )
        vertices: list[int] = []
        for run in self.runs:
            vertices.extend(run.expand(param))
        target = self.expected_list(param)
        v = target.order
        if len(vertices) != v or len(set(vertices)) != v or \
                not all(0 <= x < v for x in vertices) or vertices[0] != 0:
            raise TemplateDefectError(
                f"{self.id} at param {param}: expansion is not a 0-first "
                f"permutation of 0..{v - 1}: {vertices}"
            )
        path = PathRealization(tuple(vertices))
        mode = "linear" if self.kind in ("perfect", "linear") else "cyclic"
        report = validate(path, target, mode)
        if not report.passed:
            raise TemplateDefectError(f"{self.id} at param {param}: {report}")
        if self.kind == "perfect" and not is_perfect(path):
            raise TemplateDefectError(
                f"{self.id} at param {param}: claimed perfect, ends at {path.terminal}"
            )
        return path


@dataclass(frozen=True, slots=True)
class SoundnessEntry:
    template_id: str
    param: int | None
    ok: bool
    error: str | None


class Catalog:
    """Immutable template collection with structural and concrete lookup."""

    def __init__(self, templates: tuple[FamilyTemplate, ...], header: str = ""):
        self.templates = templates
        self.header = header
        self.by_id = {t.id: t for t in templates}
        if len(self.by_id) != len(templates):
            raise ParseError("duplicate template ids in catalog")

    def lookup(
        self,
        pattern: tuple[AffineExpr | int, AffineExpr | int,
                       AffineExpr | int, AffineExpr | int],
        kind: str | None = None,
    ) -> tuple[FamilyTemplate, ...]:
        """Templates whose exponent expressions match the pattern structurally."""
        want = tuple(AffineExpr.of(p) for p in pattern)
        hits = [
            t for t in self.templates
            if t.exponents == want and (kind is None or t.kind == kind)
        ]
        return tuple(sorted(hits, key=lambda t: t.id))

    def match_concrete(
        self, a: int, b: int, c: int, d: int, kind: str | None = None
    ) -> tuple[tuple[FamilyTemplate, int], ...]:
        """Templates (with parameter value) whose instantiation targets (a,b,c,d)."""
        target = (a, b, c, d)
        out = []
        for t in sorted(self.templates, key=lambda t: t.id):
            if kind is not None and t.kind != kind:
                continue
            param = None
            ok = True
            for expr, value in zip(t.exponents, target):
                if expr.coeff == 0:
                    if expr.const != value:
                        ok = False
                        break
                else:
                    delta = value - expr.const
                    if delta % expr.coeff != 0 or delta // expr.coeff < t.min_param:
                        ok = False
                        break
                    p = delta // expr.coeff
                    if param is None:
                        param = p
                    elif param != p:
                        ok = False
                        break
            if ok:
                out.append((t, param if param is not None else 0))
        return tuple(out)

    def soundness_sweep(self, params: range = range(0, 11)) -> list[SoundnessEntry]:
        """Instantiate and validate every template over the parameter range.

        Failing rows are reported (and later quarantined by callers), never
        silently patched.
        """
        entries: list[SoundnessEntry] = []
        for t in self.templates:
            if not t.parametric:
                try:
                    t.instantiate(0)
                    entries.append(SoundnessEntry(t.id, None, True, None))
                except TemplateDefectError as exc:
                    entries.append(SoundnessEntry(t.id, None, False, str(exc)))
                continue
            for p in params:
                if p < t.min_param:
                    continue
                try:
                    t.instantiate(p)
                    entries.append(SoundnessEntry(t.id, p, True, None))
                except TemplateDefectError as exc:
                    entries.append(SoundnessEntry(t.id, p, False, str(exc)))
        return entries


def parse_catalog(text: str) -> Catalog:
    header_lines = []
    templates = []
    for raw in text.splitlines():
        if raw.startswith("#") or not raw.strip():
            header_lines.append(raw)
            continue
        fields = raw.split("\t")
        if len(fields) != 6:
            raise ParseError(f"catalog record needs 6 tab-separated fields: {raw!r}")
        rec_id, kind, letter, exps_txt, runs_txt, provenance = fields
        if kind not in KINDS:
            raise ParseError(f"unknown kind {kind!r} in {rec_id}")
        exps = tuple(AffineExpr.parse(s) for s in exps_txt.split(","))
        if len(exps) != 4:
            raise ParseError(f"{rec_id}: need 4 exponent expressions")
        runs = tuple(Run.parse(s) for s in runs_txt.split(" "))
        templates.append(
            FamilyTemplate(
                id=rec_id, kind=kind, letter=letter, exponents=exps,
                runs=runs, provenance=provenance,
            )
        )
    return Catalog(tuple(templates), header="\n".join(header_lines))


def format_catalog(catalog: Catalog) -> str:
    lines = []
    if catalog.header:
        lines.extend(catalog.header.split("\n"))
    for t in catalog.templates:
        lines.append(
            "\t".join(
                (
                    t.id,
                    t.kind,
                    t.letter,
                    ",".join(e.format(t.letter) for e in t.exponents),
                    " ".join(r.format(t.letter) for r in t.runs),
                    t.provenance,
                )
            )
        )
    return "\n".join(lines) + "\n"


_CATALOG: Catalog | None = None


def load_catalog() -> Catalog:
    """The packaged catalog, loaded once per process."""
    global _CATALOG
    if _CATALOG is None:
        text = resources.files("bhr.data").joinpath("catalog.txt").read_text("ascii")
        _CATALOG = parse_catalog(text)
    return _CATALOG


def staircase(m: int, k: int) -> PathRealization:
    """Column-walk perfect realization of {1^(m-1), m^(km)} for odd m.

    Columns are walked alternately upward and downward; odd m makes the
    final column ascend, ending at the largest vertex.  Even m is rejected:
    the walk then ends mid-column and no perfect realization exists.
    """
    if m < 3 or m % 2 == 0:
        raise ValueError(f"staircase needs odd m >= 3, got {m}")
    if k < 1:
        raise ValueError(f"staircase needs k >= 1, got {k}")
    vertices: list[int] = []
    for j in range(m):
        col = [i * m + j for i in range(k + 1)]
        vertices.extend(col if j % 2 == 0 else reversed(col))
    path = PathRealization(tuple(vertices))
    target = EdgeLengthList.from_counts({1: m - 1, m: k * m})
    report = validate(path, target, "linear")
    if not report.passed or not is_perfect(path):
        raise TemplateDefectError(f"staircase({m}, {k}) self-check failed: {report}")
    return path
