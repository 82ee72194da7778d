"""Periodic integer weightings that certify termination of rewriting.

A weight function assigns every digit position n the positive integer
u_{((n-1) mod p) + 1}; the weight of a finite string is the weighted digit
sum.  The certificate needs the weight never to increase under any rule.

For bases with all expansions of 1 finite, the weights come from exact
linear algebra: with column sums T_j^(l) of t^(l) over residues j mod p,
the matrices K (K_{l,j} = T_{j-l}^(l+1), indices cyclic), the cyclic
permutation R, and M = (I - R)(K - I), the kernel of M is one-dimensional
and contains a positive integer vector u with K u >= u; all components of
(K - I) u share one value kappa >= 0.  Type 1 rules then preserve weight
exactly and type 2 rules never increase it.

For non-simple bases a direct search over small positive vectors is used
(the plain all-ones weighting is tried first); failure to find one is a
reportable outcome, not an internal error.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..algebraic.linalg import mat_mul, mat_mul_vec, nullspace, primitive_integer_vector
from ..bases import AlternateBase
from ..errors import GfsViolated, NoWeightFound
from ..expansion import DEFAULT_FUEL, SIMPLE_PARRY, parry_classify, require_parry_tseqs
from ..words import FiniteDigitString, Word
from .rules import RuleSet, build_rules, check_gfs


@dataclass(frozen=True)
class WeightFunction:
    """Period-p positive integer weights; w_n = u[(n-1) mod p]."""

    u: tuple[int, ...]

    @property
    def period(self) -> int:
        return len(self.u)

    def coefficient(self, n: int) -> int:
        return self.u[(n - 1) % len(self.u)]

    def weight_of(self, word: FiniteDigitString) -> int:
        return sum(self.coefficient(n) * d for n, d in enumerate(word.digits, start=1))


def weight_of(wf: WeightFunction, word: FiniteDigitString) -> int:
    return wf.weight_of(word)


@dataclass(frozen=True)
class WeightConstruction:
    """Exact linear-algebra witness for a constructed weight function."""

    column_sums: tuple[tuple[int, ...], ...]   # [l][j] = T_{j+1}^{(l+1)}, 0-based
    K: tuple[tuple[int, ...], ...]
    R: tuple[tuple[int, ...], ...]
    M: tuple[tuple[int, ...], ...]
    u: tuple[int, ...]
    kappa: int


def column_sums(seqs: tuple[Word, ...], p: int) -> list[list[int]]:
    """T_j^(l): sum of the digits of t^(l) over positions congruent to j mod p.

    Defined for finite sequences only."""
    sums = []
    for t in seqs:
        if not isinstance(t, FiniteDigitString):
            raise NoWeightFound("column sums need finite expansions of 1")
        row = [0] * p
        for n, d in enumerate(t.digits, start=1):
            row[(n - 1) % p] += d
        sums.append(row)
    return sums


def assemble_matrices(sums: list[list[int]], p: int):
    """K, R and M = (I - R)(K - I) from the column sums."""
    K = [[sums[(ell + 1) % p][(j - ell - 1) % p] for j in range(p)] for ell in range(p)]
    R = [[1 if ell == (j + 1) % p else 0 for j in range(p)] for ell in range(p)]
    I = [[1 if a == b else 0 for b in range(p)] for a in range(p)]
    IR = [[I[a][b] - R[a][b] for b in range(p)] for a in range(p)]
    KI = [[K[a][b] - I[a][b] for b in range(p)] for a in range(p)]
    M = mat_mul(IR, KI)
    return K, R, M


def _simple_parry_weight(base: AlternateBase, fuel: int) -> tuple[WeightFunction, WeightConstruction]:
    seqs = require_parry_tseqs(base, fuel)
    p = base.period
    sums = column_sums(seqs, p)
    K, R, M = assemble_matrices(sums, p)
    kernel = nullspace([[Fraction(v) for v in row] for row in M])
    if len(kernel) != 1:
        raise NoWeightFound(
            f"kernel of the weight matrix has dimension {len(kernel)}, expected 1"
        )
    u = primitive_integer_vector(kernel[0])
    if any(v <= 0 for v in u):
        raise NoWeightFound(f"kernel vector {u} is not positive")
    Ku = mat_mul_vec(K, u)
    eps = [kv - uv for kv, uv in zip(Ku, u)]
    if len(set(eps)) != 1:
        raise NoWeightFound(f"(K - I)u = {eps} is not a constant vector")
    kappa = eps[0]
    if kappa < 0:
        raise NoWeightFound(f"kappa = {kappa} is negative")
    construction = WeightConstruction(
        column_sums=tuple(tuple(r) for r in sums),
        K=tuple(tuple(r) for r in K),
        R=tuple(tuple(r) for r in R),
        M=tuple(tuple(r) for r in M),
        u=tuple(u),
        kappa=kappa,
    )
    return WeightFunction(tuple(u)), construction


def _rule_constraints(rules: RuleSet, p: int) -> list[tuple[int, ...]]:
    """Deduplicated per-residue digit-sum differences lhs - rhs of each rule;
    a weight vector u is admissible iff every dot product is >= 0."""
    seen = set()
    out = []
    for rule in rules:
        delta = [0] * p
        for n, d in enumerate(rule.lhs.digits, start=1):
            delta[(n - 1) % p] += d
        for n, d in enumerate(rule.rhs.digits, start=1):
            delta[(n - 1) % p] -= d
        key = tuple(delta)
        if key not in seen:
            seen.add(key)
            out.append(key)
    return out


def _search_weight(constraints: list[tuple[int, ...]], p: int,
                   bound: int = 64) -> tuple[int, ...] | None:
    def feasible(prefix: list[int]) -> bool:
        # Prune when even the most favorable completion fails a constraint.
        for c in constraints:
            best = sum(cv * uv for cv, uv in zip(c, prefix))
            for cv in c[len(prefix):]:
                best += cv * (bound if cv > 0 else 1)
            if best < 0:
                return False
        return True

    def extend(prefix: list[int]) -> tuple[int, ...] | None:
        if len(prefix) == p:
            if all(sum(cv * uv for cv, uv in zip(c, prefix)) >= 0 for c in constraints):
                return tuple(prefix)
            return None
        for v in range(1, bound + 1):
            prefix.append(v)
            if feasible(prefix):
                found = extend(prefix)
                if found:
                    return found
            prefix.pop()
        return None

    return extend([])


def build_weight(base: AlternateBase, fuel: int = DEFAULT_FUEL
                 ) -> tuple[WeightFunction, WeightConstruction | None]:
    """A weight function certifying rule termination, with its construction.

    Requires non-increasing digit chains (GfsViolated otherwise).  Bases
    with all expansions of 1 finite get the exact kernel construction; other
    bases get the all-ones weighting when it works, else a bounded search.
    NoWeightFound is a legitimate outcome for the search path.
    """
    ok, witness = check_gfs(base, fuel)
    if not ok:
        raise GfsViolated(*witness)
    if parry_classify(base, fuel) == SIMPLE_PARRY:
        wf, construction = _simple_parry_weight(base, fuel)
        _verify_against_rules(base, wf, fuel)
        return wf, construction
    p = base.period
    rules = build_rules(base, fuel=fuel)
    constraints = _rule_constraints(rules, p)
    if all(sum(c) >= 0 for c in constraints):
        return WeightFunction(tuple([1] * p)), None
    found = _search_weight(constraints, p)
    if found is None:
        violated = next(
            (c for c in constraints if sum(c) < 0), constraints[0] if constraints else None
        )
        raise NoWeightFound(
            f"no positive weight vector with components <= 64 satisfies {violated}"
        )
    return WeightFunction(found), None


def _verify_against_rules(base: AlternateBase, wf: WeightFunction, fuel: int) -> None:
    """Defensive check: no rule may increase the weight; type 1 preserves it."""
    for rule in build_rules(base, fuel=fuel):
        lw, rw = wf.weight_of(rule.lhs), wf.weight_of(rule.rhs)
        if rule.kind == "type1" and lw != rw:
            raise NoWeightFound(f"rule {rule.rule_id} changes weight {lw} -> {rw}")
        if lw < rw:
            raise NoWeightFound(f"rule {rule.rule_id} increases weight {lw} -> {rw}")
