"""The rewriting system on non-admissible strings.

The distinguished left-hand sides come in two families, built from the
digit sequences t^(l) of the expansions of 1 (p = base period):

* type 1, indexed by shifts l, i in {1..p} and k >= 0:
    lhs = 0^(p+l-1) t_1..t_{pk+i-1} (t_{pk+i} + 1),
    rhs = 0^(p+l-2) 1 0^(pk+i) followed by the digitwise difference
          t_j^(l+i) - t_{pk+i+j}^(l), which the descending-chain condition
          makes non-negative and eventually zero;
* type 2, one per shift l with finite t^(l):
    lhs = 0^(p+l-1) t^(l),  rhs = 0^(p+l-2) 1.

Every rule preserves the represented value and increases the string
lexicographically.  When t^(l) is finite with support length n, the type 1
rules with pk+i >= n are redundant (the left side splits as the type 2
string plus one extra unit), so pruned rule sets drop them.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from ..bases import AlternateBase
from ..errors import AltbaseError, GfsViolated, NegativeRhsDigit
from ..expansion import DEFAULT_FUEL, require_parry_tseqs, value_of
from ..words import EPWord, FiniteDigitString, Word, lex_compare, make_word


def _pre_len(t: Word) -> int:
    return len(t.digits) if isinstance(t, FiniteDigitString) else len(t.preperiod)


def _per_len(t: Word) -> int:
    return len(t.period) if isinstance(t, EPWord) else 1


def chain_entry(seqs: tuple[Word, ...], ell: int, n: int) -> int:
    """n-th element t_n^(ell-n+1) of the descending chain for shift ell."""
    p = len(seqs)
    return seqs[(ell - n) % p].digit(n)


def check_gfs(base: AlternateBase, fuel: int = DEFAULT_FUEL):
    """Whether every descending digit chain is non-increasing.

    Returns (ok, witness): on failure the witness (ell, position) names the
    chain and the 1-based position whose entry exceeds its predecessor.
    Chains are scanned beyond all preperiods for a full combined period, and
    the final window is asserted constant (a non-increasing eventually
    periodic sequence must be).
    """
    seqs = require_parry_tseqs(base, fuel)
    p = base.period
    max_pre = max(_pre_len(t) for t in seqs)
    window = lcm(p, *(_per_len(t) for t in seqs))
    depth = max_pre + window + p
    for ell in range(1, p + 1):
        previous = chain_entry(seqs, ell, 1)
        for n in range(2, depth + 1):
            current = chain_entry(seqs, ell, n)
            if current > previous:
                return False, (ell, n)
            previous = current
        tail = {chain_entry(seqs, ell, n) for n in range(depth - window, depth + 1)}
        if len(tail) != 1:
            raise AltbaseError("descending chain failed to stabilize; depth bound is wrong")
    return True, None


@dataclass(frozen=True)
class RewriteRule:
    kind: str                      # "type1" or "type2"
    ell: int
    i: int | None
    k: int | None
    lhs: FiniteDigitString
    rhs: FiniteDigitString

    @property
    def rule_id(self) -> str:
        if self.kind == "type1":
            return f"t1[{self.ell},{self.i},{self.k}]"
        return f"t2[{self.ell}]"

    def __str__(self) -> str:
        return f"{self.rule_id}: {self.lhs} -> {self.rhs}"


def type1_rule(seqs: tuple[Word, ...], p: int, ell: int, i: int, k: int) -> RewriteRule:
    """Construct the type 1 rule for (ell, i, k); digits verified non-negative."""
    t_ell = seqs[(ell - 1) % p]
    t_li = seqs[(ell + i - 1) % p]
    bump = p * k + i
    lhs_digits = [0] * (p + ell - 1)
    lhs_digits += [t_ell.digit(j) for j in range(1, bump)]
    lhs_digits.append(t_ell.digit(bump) + 1)
    lhs = make_word(lhs_digits)

    # Difference tail: zero once both sequences run inside their periods for
    # a full common period, by the descending-chain condition.
    j0 = max(_pre_len(t_li), _pre_len(t_ell) - bump, 0)
    window = lcm(_per_len(t_li), _per_len(t_ell), p)
    horizon = j0 + 2 * window
    diffs = []
    for j in range(1, horizon + 1):
        d = t_li.digit(j) - t_ell.digit(bump + j)
        if d < 0:
            raise NegativeRhsDigit(
                f"rule ({ell},{i},{k}) produced digit {d} at tail position {j}"
            )
        diffs.append(d)
    if any(diffs[j0 + window:]):
        raise AltbaseError("transcription tail failed to vanish; chain condition broken")
    rhs = make_word([0] * (p + ell - 2) + [1] + [0] * bump + diffs)
    return RewriteRule("type1", ell, i, k, lhs, rhs)  # type: ignore[arg-type]


def type2_rule(seqs: tuple[Word, ...], p: int, ell: int) -> RewriteRule:
    t = seqs[(ell - 1) % p]
    if not isinstance(t, FiniteDigitString):
        raise AltbaseError(f"shift {ell} has an infinite expansion of 1; no type 2 rule")
    lhs = make_word([0] * (p + ell - 1) + list(t.digits))
    rhs = make_word([0] * (p + ell - 2) + [1])
    return RewriteRule("type2", ell, None, None, lhs, rhs)  # type: ignore[arg-type]


@dataclass(frozen=True)
class RuleSet:
    base: AlternateBase
    rules: tuple[RewriteRule, ...]
    k_bound: int
    pruned: bool

    def __iter__(self):
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)


def default_k_bound(seqs: tuple[Word, ...], p: int) -> int:
    """Preperiod plus one full period, counted in blocks of p positions."""
    max_pre = max(_pre_len(t) for t in seqs)
    window = lcm(p, *(_per_len(t) for t in seqs))
    return -(-(max_pre + window) // p)


def build_rules(base: AlternateBase, k_bound: int | None = None,
                prune: bool = True, fuel: int = DEFAULT_FUEL) -> RuleSet:
    """The rule table for a base whose chains are non-increasing.

    Raises GfsViolated otherwise.  In pruned mode (default), type 1 rules
    with pk+i at or beyond the support of a finite t^(l) are dropped, which
    makes the table finite for bases with all expansions of 1 finite.  With
    pruning off, type 1 rules are enumerated for k up to ``k_bound``.  In
    explicit mode every rule is value-checked exactly.
    """
    seqs = require_parry_tseqs(base, fuel)
    p = base.period
    ok, witness = check_gfs(base, fuel)
    if not ok:
        ell, pos = witness
        raise GfsViolated(ell, pos)
    if k_bound is None:
        k_bound = default_k_bound(seqs, p)
    rules: list[RewriteRule] = []
    for ell in range(1, p + 1):
        t = seqs[(ell - 1) % p]
        finite = isinstance(t, FiniteDigitString)
        per_rule_kmax = k_bound
        if finite and prune:
            # pk+i <= support - 1 bounds k; beyond that everything is pruned.
            per_rule_kmax = max(-1, (len(t.digits) - 1 - 1) // p)
        generated: dict[int, list[RewriteRule]] = {}
        for i in range(1, p + 1):
            generated[i] = []
            for k in range(0, per_rule_kmax + 1):
                if finite and prune and p * k + i >= len(t.digits):
                    continue
                rule = type1_rule(seqs, p, ell, i, k)
                generated[i].append(rule)
                rules.append(rule)
            _assert_shape_stabilized(generated[i], p, ell, i, seqs)
        if finite:
            rules.append(type2_rule(seqs, p, ell))
    if base.is_explicit:
        for rule in rules:
            if value_of(base, rule.lhs).compare(value_of(base, rule.rhs)) != 0:
                raise AltbaseError(f"rule {rule.rule_id} does not preserve value")
            if lex_compare(rule.rhs, rule.lhs) <= 0:
                raise AltbaseError(f"rule {rule.rule_id} does not increase the string")
    return RuleSet(base=base, rules=tuple(rules), k_bound=k_bound, pruned=prune)


def _assert_shape_stabilized(rules_for_i: list[RewriteRule], p: int, ell: int,
                             i: int, seqs: tuple[Word, ...]) -> None:
    """The last two rules of an (ell, i) family must share their tail shape
    once k passes the preperiod: equal bumped digits and equal difference
    tails (the prefixes grow by one period block)."""
    if len(rules_for_i) < 2:
        return
    a, b = rules_for_i[-2], rules_for_i[-1]
    t_ell = seqs[(ell - 1) % p]
    if p * a.k + i <= _pre_len(t_ell):
        return
    tail_a = a.rhs.digits[(p + ell - 2 + 1 + p * a.k + i):]
    tail_b = b.rhs.digits[(p + ell - 2 + 1 + p * b.k + i):]
    if tail_a != tail_b or a.lhs.digits[-1] != b.lhs.digits[-1]:
        raise AltbaseError(f"rule family ({ell},{i}) did not stabilize by k={b.k}")
