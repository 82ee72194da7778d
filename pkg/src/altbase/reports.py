"""Executable verdicts for the necessary and sufficient finiteness conditions.

The necessary report checks what closure of finite expansions under
addition would force: the period product delta must be a Pisot or Salem
number, every base entry must lie in Q(delta), and (for closure under
subtraction too) the base must have all expansions of 1 finite with no
non-identity embedding sending the base entries to a positive vector.
These are one-way conditions, so the vocabulary is "consistent with" /
"obstruction found" rather than a property claim.

The sufficient report runs the constructive side: non-increasing digit
chains plus a weight function certify the positive finiteness property,
and with all expansions of 1 finite, the full finiteness property.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .algebraic.boxes import ComplexBox, evaluate_poly_on_box
from .algebraic.embeddings import (
    FieldEmbedding,
    certified_root_boxes,
    conjugate_embeddings,
    refine_embedding_box,
)
from .algebraic.field import isolating_interval_for, field_create, minimal_polynomial
from .algebraic.linalg import solve_linear
from .algebraic.polynomial import RationalPolynomial
from .algebraic.realroots import evaluate_on_interval
from .algebraic.rootclass import RootClass, classify_root_pattern
from .bases import AlternateBase
from .errors import AltbaseError, NoWeightFound, NotParry, SymbolicModeUnsupported
from .expansion import DEFAULT_FUEL, PARRY_UNKNOWN, SIMPLE_PARRY, parry_classify
from .rewrite.rules import check_gfs
from .rewrite.weights import WeightConstruction, WeightFunction, build_weight


class Overall(str, Enum):
    CONSISTENT_WITH_F = "ConsistentWithF"
    CONSISTENT_WITH_PF = "ConsistentWithPF"
    OBSTRUCTION_FOUND = "ObstructionFound"


class SufficientVerdict(str, Enum):
    PROPERTY_F = "PropertyF"
    PROPERTY_PF = "PropertyPF"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class EmbeddingReport:
    """Images of the base entries under one non-identity embedding."""

    conjugate_box: ComplexBox
    is_real: bool
    coordinate_boxes: tuple[ComplexBox, ...]
    coordinate_verdicts: tuple[str, ...]   # positive | negative | zero | nonreal
    vector_positive: bool


@dataclass(frozen=True)
class NecessaryReport:
    delta_minpoly: RationalPolynomial
    delta_class: RootClass
    betas_in_delta_field: bool
    beta_coordinates: tuple[tuple[Fraction, ...] | None, ...]
    parry_class: str
    embedding_reports: tuple[EmbeddingReport, ...]
    overall: Overall
    obstruction: str | None
    notes: tuple[str, ...]


@dataclass(frozen=True)
class SufficientReport:
    parry_class: str
    gfs: bool | None
    gfs_witness: tuple[int, int] | None
    weight: WeightFunction | None
    weight_construction: WeightConstruction | None
    weight_absence: str | None
    verdict: SufficientVerdict
    reason: str | None


def _delta_coordinates(base: AlternateBase, delta_minpoly: RationalPolynomial):
    """Coordinates of each base entry in the power basis of delta, or None."""
    field = base.field
    e = delta_minpoly.degree
    powers = [field.one]
    for _ in range(e - 1):
        powers.append(powers[-1] * base.delta)
    matrix = [[powers[j].coords[i] for j in range(e)] for i in range(field.degree)]
    out = []
    for beta in base.betas:
        rhs = list(beta.coords)
        sol = solve_linear(matrix, rhs)
        out.append(tuple(sol) if sol is not None else None)
    return tuple(out)


def _real_sign_verdict(q: RationalPolynomial, embedding: FieldEmbedding) -> str:
    precision = embedding.conjugate_box.width or Fraction(1, 4)
    for _ in range(300):
        box = refine_embedding_box(embedding, precision)
        lo, hi = evaluate_on_interval(q, box.real_lo, box.real_hi)
        if lo > 0:
            return "positive"
        if hi < 0:
            return "negative"
        precision /= 4
    raise AltbaseError("sign refinement did not converge")


def _algebraic_coordinate_verdict(q: RationalPolynomial, embedding: FieldEmbedding,
                                  candidate_minpoly: RationalPolynomial) -> str:
    """Exact realness and sign of q(gamma) by identifying it among the roots
    of its own minimal polynomial (q(gamma) is always one of them)."""
    precision = Fraction(1, 16)
    for _ in range(120):
        targets = certified_root_boxes(candidate_minpoly, precision)
        gamma = refine_embedding_box(embedding, precision)
        image = evaluate_poly_on_box(q, gamma)
        hits = [rb for rb in targets if rb.box.intersects(image)]
        if len(hits) == 1:
            root = hits[0]
            if not root.is_real:
                return "nonreal"
            if root.box.real_lo > 0:
                return "positive"
            if root.box.real_hi < 0:
                return "negative"
            # The identified real root's box still straddles 0; refine more.
        precision /= 4
    raise AltbaseError("coordinate identification did not converge")


def _coordinate_verdict(q: RationalPolynomial, embedding: FieldEmbedding,
                        candidate_minpoly: RationalPolynomial) -> tuple[str, ComplexBox]:
    image = embedding.embed_polynomial(q)
    if q.degree <= 0:
        c = q.evaluate(Fraction(0))
        verdict = "positive" if c > 0 else "negative" if c < 0 else "zero"
        return verdict, image
    if embedding.is_real:
        return _real_sign_verdict(q, embedding), image
    # Quick certificate: the image box may already exclude the real axis.
    precision = embedding.conjugate_box.width or Fraction(1, 4)
    for _ in range(6):
        box = refine_embedding_box(embedding, precision)
        refined = evaluate_poly_on_box(q, box)
        if refined.imag_lo > 0 or refined.imag_hi < 0:
            return "nonreal", image
        precision /= 4
    return _algebraic_coordinate_verdict(q, embedding, candidate_minpoly), image


def necessary_conditions(base: AlternateBase, precision=Fraction(1, 1000),
                         fuel: int = DEFAULT_FUEL) -> NecessaryReport:
    """Check every necessary condition that is decidable from the base data.

    Runs in explicit mode only.  The overall verdict is ObstructionFound
    when a condition necessary for the positive finiteness property fails;
    ConsistentWithF when additionally every condition necessary for the full
    finiteness property holds; ConsistentWithPF otherwise.
    """
    if not base.is_explicit:
        raise SymbolicModeUnsupported("necessary conditions need explicit base entries")
    precision = Fraction(precision)
    notes: list[str] = []
    delta_minpoly = minimal_polynomial(base.delta)
    delta_class = classify_root_pattern(delta_minpoly)
    beta_coords = _delta_coordinates(base, delta_minpoly)
    betas_in = all(c is not None for c in beta_coords)
    parry = parry_classify(base, fuel)

    embedding_reports: list[EmbeddingReport] = []
    if betas_in and delta_minpoly.degree >= 2:
        delta_field = field_create(
            delta_minpoly, isolating_interval_for(base.delta, delta_minpoly)
        )
        beta_minpolys = [minimal_polynomial(b) for b in base.betas]
        for emb in conjugate_embeddings(delta_field, precision):
            if emb.is_identity:
                continue
            verdicts = []
            boxes = []
            for coords, m in zip(beta_coords, beta_minpolys):
                q = RationalPolynomial.from_coeffs(coords)
                verdict, box = _coordinate_verdict(q, emb, m)
                verdicts.append(verdict)
                boxes.append(box)
            embedding_reports.append(EmbeddingReport(
                conjugate_box=emb.conjugate_box,
                is_real=emb.is_real,
                coordinate_boxes=tuple(boxes),
                coordinate_verdicts=tuple(verdicts),
                vector_positive=all(v == "positive" for v in verdicts),
            ))

    obstruction = None
    if delta_class == RootClass.NEITHER:
        obstruction = "the period product is neither a Pisot nor a Salem number"
    elif not betas_in:
        missing = [i + 1 for i, c in enumerate(beta_coords) if c is None]
        obstruction = f"base entries {missing} do not lie in the field of the period product"

    if obstruction is not None:
        overall = Overall.OBSTRUCTION_FOUND
    else:
        if delta_class == RootClass.SALEM:
            notes.append("Salem period product: not excluded by the necessary conditions")
        f_ok = parry == SIMPLE_PARRY and not any(
            r.vector_positive for r in embedding_reports
        )
        if f_ok:
            overall = Overall.CONSISTENT_WITH_F
        else:
            overall = Overall.CONSISTENT_WITH_PF
            if parry == PARRY_UNKNOWN:
                notes.append("Parry class undetermined within fuel; "
                             "full-finiteness conditions unverified")
            elif parry != SIMPLE_PARRY:
                notes.append("some expansion of 1 is infinite, which rules out "
                             "closure under subtraction")
            if any(r.vector_positive for r in embedding_reports):
                notes.append("a non-identity embedding maps the base to a positive "
                             "vector, which rules out closure under subtraction")

    return NecessaryReport(
        delta_minpoly=delta_minpoly,
        delta_class=delta_class,
        betas_in_delta_field=betas_in,
        beta_coordinates=beta_coords,
        parry_class=parry,
        embedding_reports=tuple(embedding_reports),
        overall=overall,
        obstruction=obstruction,
        notes=tuple(notes),
    )


def sufficient_report(base: AlternateBase, fuel: int = DEFAULT_FUEL) -> SufficientReport:
    """Run the constructive checks and report the strongest verdict they prove."""
    parry = parry_classify(base, fuel)
    if parry == PARRY_UNKNOWN:
        return SufficientReport(
            parry_class=parry, gfs=None, gfs_witness=None,
            weight=None, weight_construction=None, weight_absence=None,
            verdict=SufficientVerdict.INCONCLUSIVE,
            reason="Parry class undetermined within fuel",
        )
    try:
        ok, witness = check_gfs(base, fuel)
    except NotParry as exc:
        return SufficientReport(
            parry_class=parry, gfs=None, gfs_witness=None,
            weight=None, weight_construction=None, weight_absence=None,
            verdict=SufficientVerdict.INCONCLUSIVE, reason=str(exc),
        )
    if not ok:
        return SufficientReport(
            parry_class=parry, gfs=False, gfs_witness=witness,
            weight=None, weight_construction=None, weight_absence=None,
            verdict=SufficientVerdict.INCONCLUSIVE,
            reason=f"descending digit chain fails at shift {witness[0]}, "
                   f"position {witness[1]} (the condition is sufficient only)",
        )
    weight = construction = absence = None
    try:
        weight, construction = build_weight(base, fuel)
    except NoWeightFound as exc:
        absence = str(exc)
    if weight is None:
        verdict, reason = SufficientVerdict.INCONCLUSIVE, absence
    elif parry == SIMPLE_PARRY:
        verdict, reason = SufficientVerdict.PROPERTY_F, None
    else:
        verdict, reason = SufficientVerdict.PROPERTY_PF, None
    return SufficientReport(
        parry_class=parry, gfs=True, gfs_witness=None,
        weight=weight, weight_construction=construction, weight_absence=absence,
        verdict=verdict, reason=reason,
    )
