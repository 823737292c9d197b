"""Cross-check an arrangement by every available route and record the outcome."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .bridge import (
    MAX_SUBSETS,
    SequenceReport,
    analyze_sequence,
    coefficient_sequence,
    matroid_char_poly_subsets,
    matroid_of_arrangement,
)
from .core import Arrangement, build_lattice, char_poly_from_lattice, char_poly_lattice, delete, rank, restrict
from .exact import Poly
from .formats import format_arrangement
from .multidegrees import MultidegreeSequence, char_poly_from_multidegrees, multidegrees_dr
from .oracle import DEFAULT_TRIALS, GenericityFailure, OracleResult, multidegrees_partial, pencil

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"

# identity names, in report order
LATTICE_VS_MULTIDEGREES = "lattice_equals_multidegrees"
ORACLE_AGREEMENT = "oracle_agreement"

ORACLE_MAX_DIM = 6


@dataclass(frozen=True)
class OracleSummary:
    d1: int
    d2: int | None
    full: tuple | None
    consistent: bool
    seeds: tuple
    critical_counts: dict

    @classmethod
    def from_result(cls, r: OracleResult) -> OracleSummary:
        return cls(r.d1, r.d2, r.full, r.consistent, r.seeds, dict(r.counts.a))


@dataclass
class VerificationReport:
    input_digest: str
    char_poly_lattice: tuple
    multidegrees_dr: tuple
    oracle_partial: OracleSummary | None
    identities_checked: list
    sequence_report: SequenceReport
    timing: dict = field(default_factory=dict, compare=False)

    @property
    def status(self) -> str:
        states = {s for _, s in self.identities_checked}
        if FAIL in states:
            return FAIL
        if INCONCLUSIVE in states:
            return INCONCLUSIVE
        return PASS


def verify(
    a: Arrangement,
    trials: int = DEFAULT_TRIALS,
    seed: int = 42,
    oracle: bool = True,
    max_subsets: int = MAX_SUBSETS,
) -> VerificationReport:
    timing: dict = {}
    checks: list = []

    def stage(name):
        timing[name] = time.perf_counter()

    def done(name):
        timing[name] = time.perf_counter() - timing[name]

    stage("lattice")
    chi = char_poly_from_lattice(build_lattice(a))
    done("lattice")

    stage("deletion_restriction")
    d = multidegrees_dr(a)
    done("deletion_restriction")
    checks.append((LATTICE_VS_MULTIDEGREES, PASS if char_poly_from_multidegrees(d) == chi else FAIL))
    checks.append(("d1_equals_k", PASS if d[1] == a.k else FAIL))

    if a.k >= 2:
        ok = all(
            chi == char_poly_lattice(delete(a, h)) - char_poly_lattice(restrict(a, h))
            for h in range(a.k)
        )
        checks.append(("deletion_restriction_polynomial", PASS if ok else FAIL))

    if 2**a.k <= max_subsets:
        chi_m = matroid_char_poly_subsets(matroid_of_arrangement(a), max_subsets)
        shift = a.ambient_dim - rank(a)
        checks.append(("matroid_bridge", PASS if Poly.monomial(shift) * chi_m == chi else FAIL))

    summary = None
    if oracle and 2 <= a.ambient_dim <= ORACLE_MAX_DIM:
        stage("oracle")
        try:
            result = multidegrees_partial(pencil(a), trials=trials, seed=seed)
        except GenericityFailure:
            checks.append((ORACLE_AGREEMENT, INCONCLUSIVE))
        else:
            summary = OracleSummary.from_result(result)
            if result.full is not None:
                agree = result.full == d.values
            else:
                agree = (result.d1, result.d2) == (d[1], d[2])
            checks.append((ORACLE_AGREEMENT, PASS if agree and result.consistent else FAIL))
        done("oracle")

    seq = analyze_sequence(coefficient_sequence(chi))
    good_seq = seq.is_log_concave and not seq.has_internal_zeros and seq.is_unimodal
    checks.append(("log_concave_no_internal_zeros", PASS if good_seq else FAIL))

    return VerificationReport(
        input_digest=format_arrangement(a),
        char_poly_lattice=tuple(chi.coeffs),
        multidegrees_dr=tuple(d.values),
        oracle_partial=summary,
        identities_checked=checks,
        sequence_report=seq,
        timing=timing,
    )


# ---------------------------------------------------------------------------
# JSON: sorted keys, every integer as a decimal string, timing left out so
# that runs are byte-for-byte reproducible.


def _ints(values) -> list:
    return [str(v) for v in values]


def report_to_dict(r: VerificationReport) -> dict:
    oracle = None
    if r.oracle_partial is not None:
        o = r.oracle_partial
        oracle = {
            "d1": str(o.d1),
            "d2": None if o.d2 is None else str(o.d2),
            "full": None if o.full is None else _ints(o.full),
            "consistent": o.consistent,
            "seeds": _ints(o.seeds),
            "critical_counts": {str(i): str(v) for i, v in o.critical_counts.items()},
        }
    s = r.sequence_report
    return {
        "input_digest": r.input_digest,
        "char_poly_lattice": _ints(r.char_poly_lattice),
        "multidegrees_dr": _ints(r.multidegrees_dr),
        "oracle_partial": oracle,
        "identities_checked": [[name, state] for name, state in r.identities_checked],
        "sequence_report": {
            "is_log_concave": s.is_log_concave,
            "has_internal_zeros": s.has_internal_zeros,
            "is_unimodal": s.is_unimodal,
            "witness": None if s.witness is None else str(s.witness),
        },
        "status": r.status,
    }


def report_to_json(r: VerificationReport) -> str:
    return json.dumps(report_to_dict(r), sort_keys=True, indent=2) + "\n"


def report_from_json(text: str) -> VerificationReport:
    data = json.loads(text)
    o = data["oracle_partial"]
    oracle = None
    if o is not None:
        oracle = OracleSummary(
            d1=int(o["d1"]),
            d2=None if o["d2"] is None else int(o["d2"]),
            full=None if o["full"] is None else tuple(int(x) for x in o["full"]),
            consistent=o["consistent"],
            seeds=tuple(int(x) for x in o["seeds"]),
            critical_counts={int(k): int(v) for k, v in o["critical_counts"].items()},
        )
    s = data["sequence_report"]
    return VerificationReport(
        input_digest=data["input_digest"],
        char_poly_lattice=tuple(int(x) for x in data["char_poly_lattice"]),
        multidegrees_dr=tuple(int(x) for x in data["multidegrees_dr"]),
        oracle_partial=oracle,
        identities_checked=[(name, state) for name, state in data["identities_checked"]],
        sequence_report=SequenceReport(
            s["is_log_concave"],
            s["has_internal_zeros"],
            s["is_unimodal"],
            None if s["witness"] is None else int(s["witness"]),
        ),
    )


def multidegree_sequence(r: VerificationReport) -> MultidegreeSequence:
    return MultidegreeSequence(r.multidegrees_dr, len(r.multidegrees_dr) - 1)
