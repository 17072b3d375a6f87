"""
End-to-end run: candidate table, exclusions, profiles, classes, orbits,
holonomy flags and the discrepancy report.
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import fixtures
from .enumeration import (
    CoverClass,
    LocalProfile,
    MonodromyTuple,
    allowed_profiles,
    angle_json,
    enumerate_cover_classes,
)
from .errors import InconsistencyError
from .factor import HolonomyVerdict, holonomy_classify
from .mcg import SignatureClass, TupleMove, apply_word, apply_move, orbit_variant, signature_orbits
from .orbifold import (
    Signature,
    TableRow,
    candidate_signatures,
    parity_exclusion,
    pi_string,
    signature_table,
)
from .perm import are_conjugate, cycle_type

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class PipelineConfig:
    threads: int = 1
    #: include the torus Dehn twists in the mapping class group action
    torus_twists: bool = True


@dataclass(frozen=True)
class OrbitRecord:
    orbit: SignatureClass
    variant: tuple
    verdict: HolonomyVerdict

    @property
    def cone_angles(self) -> tuple[Fraction, ...]:
        return self.orbit.representative.cone_angles

    def to_json(self) -> dict:
        out = self.orbit.to_json()
        out["variant"] = [list(p) for p in self.variant]
        out["size"] = self.orbit.size
        out.update(self.verdict.to_json())
        return out


@dataclass(frozen=True)
class CaseResult:
    signature: Signature
    degree: int
    profiles: tuple[LocalProfile, ...]
    classes: tuple[CoverClass, ...]
    orbits: tuple[OrbitRecord, ...]

    def position1_count(self, profile: LocalProfile) -> int:
        """Classes whose cycle types sit exactly as in the canonical ``profile``."""
        return sum(1 for c in self.classes if c.profile == profile)

    def to_json(self) -> dict:
        return {
            "signature": self.signature.to_json(),
            "degree": self.degree,
            "profiles": [
                {"parts": p.to_json(), "position1_classes": self.position1_count(p),
                 "cone_angles_pi": [angle_json(a) for a in p.cone_angles]}
                for p in self.profiles
            ],
            "class_count": len(self.classes),
            "classes": [c.to_json() for c in self.classes],
            "orbit_count": len(self.orbits),
            "orbits": [o.to_json() for o in self.orbits],
        }


@dataclass(frozen=True)
class Discrepancy:
    topic: str
    printed: str
    derived: str

    def to_json(self) -> dict:
        return {"topic": self.topic, "printed": self.printed, "derived": self.derived}


@dataclass(frozen=True)
class PipelineReport:
    table1: tuple[TableRow, ...]
    exclusions: tuple[tuple[Signature, int, str], ...]
    cases: tuple[CaseResult, ...]
    discrepancies: tuple[Discrepancy, ...] = field(default=())

    @property
    def signature_classes(self) -> list[tuple[CaseResult, OrbitRecord]]:
        return [(case, o) for case in self.cases for o in case.orbits]

    @property
    def signature_class_count(self) -> int:
        return len(self.signature_classes)

    @property
    def final_orbit_count(self) -> int:
        return sum(1 for _, o in self.signature_classes if o.verdict.holonomy)

    def case(self, sig: Signature, degree: int) -> CaseResult:
        for c in self.cases:
            if c.signature == sig and c.degree == degree:
                return c
        raise KeyError((sig, degree))

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "table1": [row.to_json() for row in self.table1],
            "exclusions": [
                {"signature": s.to_json(), "degree": d, "reason": reason} for s, d, reason in self.exclusions
            ],
            "per_case": [c.to_json() for c in self.cases],
            "holonomy_summary": [
                {
                    "signature": case.signature.to_json(),
                    "degree": case.degree,
                    "variant": [list(p) for p in o.variant],
                    "representative": o.orbit.representative.tuple.cycles_string(),
                    "group": o.orbit.group.to_json(),
                    "cone_angles_pi": [angle_json(a) for a in o.cone_angles],
                    **o.verdict.to_json(),
                }
                for case, o in self.signature_classes
            ],
            "signature_class_count": self.signature_class_count,
            "final_orbit_count": self.final_orbit_count,
            "discrepancies": [d.to_json() for d in self.discrepancies],
        }


def run_case(sig: Signature, degree: int, torus_twists: bool = True) -> CaseResult:
    profiles = tuple(allowed_profiles(sig, degree))
    classes = tuple(enumerate_cover_classes(sig, degree))
    records = []
    for orbit in signature_orbits(classes, sig, torus_twists):
        verdicts = {holonomy_classify(m).holonomy for m in orbit.members}
        if len(verdicts) != 1:
            raise InconsistencyError(f"holonomy flag varies across the orbit of {orbit.representative.tuple}")
        records.append(OrbitRecord(orbit, orbit_variant(orbit), holonomy_classify(orbit.representative)))
    return CaseResult(sig, degree, profiles, classes, tuple(records))


def _run_case_args(args) -> CaseResult:
    return run_case(*args)


def default_threads() -> int:
    return os.cpu_count() or 1


def run_pipeline(config: PipelineConfig = PipelineConfig()) -> PipelineReport:
    exclusions = []
    kept = []
    for sig, degree in candidate_signatures():
        reason = parity_exclusion(sig, degree)
        if reason is None:
            kept.append((sig, degree))
        else:
            exclusions.append((sig, degree, reason))
    jobs = [(sig, d, config.torus_twists) for sig, d in kept]
    if config.threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=min(config.threads, len(jobs))) as pool:
            cases = tuple(pool.map(_run_case_args, jobs))
    else:
        cases = tuple(_run_case_args(job) for job in jobs)
    report = PipelineReport(tuple(signature_table()), tuple(exclusions), cases)
    return PipelineReport(report.table1, report.exclusions, report.cases, tuple(find_discrepancies(report)))


def _parse(label: str, sig: Signature) -> MonodromyTuple:
    for name, s, degree, kind, text in fixtures.REPRESENTATIVES:
        if name == label and s == sig:
            return MonodromyTuple.parse(text, degree, kind)
    raise KeyError(label)


def _cone_label(angles) -> str:
    counts: dict[Fraction, int] = {}
    for a in angles:
        counts[Fraction(a)] = counts.get(Fraction(a), 0) + 1
    return " + ".join(f"{n}x{pi_string(a)}" for a, n in sorted(counts.items())) or "none"


def cone_table(report: PipelineReport) -> list[tuple[int, Signature, tuple[tuple[Fraction, ...], ...]]]:
    """Per (degree, signature): the distinct cone-angle multisets realised by an orbit."""
    rows = []
    for case in report.cases:
        patterns = sorted({o.cone_angles for o in case.orbits})
        rows.append((case.degree, case.signature, tuple(patterns)))
    return sorted(rows, key=lambda r: (r[0], r[1]))


def find_discrepancies(report: PipelineReport) -> list[Discrepancy]:
    out = []

    # cone table rows as printed vs derived
    derived = {(d, s): {tuple(Fraction(a) for a in p) for p in pats} for d, s, pats in cone_table(report)}
    printed_rows = [(d, s, {tuple(Fraction(a) for a in p) for p in pats}) for d, s, pats in fixtures.INTRO_TABLE]
    for d, s, pats in printed_rows:
        if derived.get((d, s)) != pats:
            # signatures of this degree whose derived data fits the row and have no row of their own
            matches = [
                str(sig) for (dd, sig), got in sorted(derived.items())
                if dd == d and got == pats and not any(pd == d and ps == sig for pd, ps, _ in printed_rows)
            ]
            out.append(Discrepancy(
                "cone-point table row",
                f"degree {d}, {s}: " + "; ".join(_cone_label(p) for p in sorted(pats)),
                f"{s} carries " + "; ".join(_cone_label(p) for p in sorted(derived.get((d, s), ())))
                + (f"; the printed cone data matches {', '.join(matches)}" if matches else ""),
            ))

    # torus class count and listings
    torus_sig = Signature(1, (2,))
    try:
        torus = report.case(torus_sig, 3)
    except KeyError:
        torus = None
    if torus is not None:
        published = next(c.classes for c in fixtures.CASE_COUNTS if c.signature == torus_sig)
        if len(torus.classes) != published:
            mixed = [c for c in torus.classes if sorted(cycle_type(s) for s in c.tuple.entries[:2]) == [(1, 2), (3,)]]
            out.append(Discrepancy(
                "(1; 2) conjugacy classes",
                f"{published} classes",
                f"{len(torus.classes)} classes: "
                + ", ".join(str(c.tuple) for c in torus.classes)
                + f"; {len(mixed)} of them have one 3-cycle and one transposition among a, b",
            ))
        a = _parse("torus t2 (listing A)", torus_sig)
        b = _parse("torus t2 (listing B)", torus_sig)
        if not are_conjugate(a.entries, b.entries):
            out.append(Discrepancy(
                "(1; 2) second representative",
                f"{a} in one listing, {b} in the other",
                "the two are not conjugate; both are valid classes",
            ))
        if len(torus.orbits) == 1:
            out.append(Discrepancy(
                "(1; 2) orbit count",
                "equivalent to exactly one of two listed tuples",
                "1 orbit; all classes are signature equivalent",
            ))

    # move claims
    for claim in fixtures.MOVE_CLAIMS:
        source = _parse(claim.source, claim.signature)
        image = apply_move(TupleMove(*claim.move), source)
        if claim.printed is not None:
            printed = MonodromyTuple.parse(claim.printed, claim.degree, source.kind)
            if printed != image:
                target = _parse(claim.conjugate_to, claim.signature) if claim.conjugate_to else None
                note = ""
                if target is not None and are_conjugate(image.entries, target.entries):
                    note = f"; the computed image is conjugate to {claim.conjugate_to} as claimed"
                if are_conjugate(printed.entries, source.entries):
                    note += f"; the printed tuple is conjugate to {claim.source} itself"
                out.append(Discrepancy(
                    f"{TupleMove(*claim.move)} applied to {claim.source} over {claim.signature}",
                    str(printed),
                    str(image) + note,
                ))

    # the printed F(i+2, i) word for s_{i+1} against H(i+2, i) squared
    base, h_table = TupleMove("H", 3, 1).table()
    probe = _parse("deg6 (3,3) t2", Signature(0, (2, 2, 2, 3)))
    twice = apply_move(TupleMove("H", 3, 1), apply_move(TupleMove("H", 3, 1), probe))
    printed_entry = apply_word(probe.entries, base, fixtures.PRINTED_F_MINUS2_SECOND)
    if printed_entry != twice.entries[(base + 1) % 4]:
        out.append(Discrepancy(
            "F(i+2, i) table, s_(i+1) entry",
            "s_i^-1 s_(i+2)^-1 s_(i+1) s_(i+2) s_(i+1)",
            "squaring H(i+2, i) gives s_i^-1 s_(i+2)^-1 s_(i+1) s_(i+2) s_i",
        ))
    return out


def report_json(report: PipelineReport) -> str:
    return json.dumps(report.to_json(), indent=2) + "\n"


CSV_FIELDS = (
    "signature", "degree", "variant", "orbit_size", "group", "group_order",
    "cone_angles", "holonomy", "witness_intermediate", "representative",
)


def report_csv(report: PipelineReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for case, o in report.signature_classes:
        w = o.verdict.witness
        writer.writerow([
            case.signature.cli_form(),
            case.degree,
            " ".join("(" + ",".join(map(str, p)) + ")" for p in o.variant),
            o.orbit.size,
            o.orbit.group.label,
            o.orbit.group.order,
            " ".join(pi_string(a) for a in o.cone_angles),
            o.verdict.holonomy,
            "" if w is None else w.intermediate.cli_form(),
            str(o.orbit.representative.tuple),
        ])
    return buf.getvalue()


def report_text(report: PipelineReport) -> str:
    lines = ["Candidate signatures", ""]
    lines.append(format_table1(report.table1))
    lines += ["", "Excluded pairs"]
    for sig, d, reason in report.exclusions:
        lines.append(f"  {sig} D={d}: {reason}")
    lines += ["", "Cases"]
    for case in report.cases:
        lines.append(f"  {case.signature} D={case.degree}: {len(case.classes)} classes, {len(case.orbits)} orbits")
        for p in case.profiles:
            lines.append(f"    profile {p.parts}: {case.position1_count(p)} classes in this placement, "
                         f"cones {_cone_label(p.cone_angles)}")
        for o in case.orbits:
            flag = "holonomy" if o.verdict.holonomy else f"not holonomy (via {o.verdict.witness.intermediate})"
            lines.append(f"    orbit of {o.orbit.size}: {o.orbit.representative.tuple}  "
                         f"[{o.orbit.group.label}, {_cone_label(o.cone_angles)}, {flag}]")
    lines += [
        "",
        f"Signature-equivalence classes: {report.signature_class_count}",
        f"Holonomy classes (MCG orbits of flexibility classes): {report.final_orbit_count}",
        "",
        "Discrepancies",
    ]
    for d in report.discrepancies:
        lines.append(f"  {d.topic}")
        lines.append(f"    printed: {d.printed}")
        lines.append(f"    derived: {d.derived}")
    return "\n".join(lines) + "\n"


def format_table1(rows) -> str:
    out = [f"  {'signature':<22}{'degrees':<16}area"]
    for row in rows:
        out.append(f"  {str(row.signature):<22}{', '.join(map(str, row.degrees)):<16}{pi_string(row.area)}")
    return "\n".join(out)

