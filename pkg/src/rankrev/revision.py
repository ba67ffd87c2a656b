"""Single-step revision, suspension, and rules for revising whole rankings.

Revising a ranked model by a non-empty proposition A makes the new total
content E_i ∩ A, where E_i is the first block consistent with A.  Suspending
judgment in A yields the intersection of the belief sets that belief and
disbelief in A would produce, i.e. the union of the two total contents.

A revision rule goes further and produces a whole posterior ranking, not just
a belief set.  Three concrete rules are provided:

* ``lexicographic_rule`` stacks the accepted side above the rejected side,
  each side keeping its internal order; suspension merges the two sides level
  by level.
* ``natural_rule`` promotes only the minimal accepted worlds to the front and
  leaves everything else in place.
* ``spohn_rule(alpha)`` round-trips through an OCF: read ranks off the model,
  conditionalize with the attitude-signed strength, regroup.

``flip_rule`` is a deliberately broken variant of the lexicographic rule that
inverts the rejected side's internal order.  It exists so the axiom checkers
can be shown to fail; do not use it for anything else.

Suspension only pins down the posterior belief set, not the posterior
ranking.  The ranking each rule produces for a suspension input is this
implementation's choice, constrained to reproduce the suspended belief set.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .errors import InputError
from .ranking import OCF, RankedModel, ocf_from_rpm, rpm_from_ocf
from .worlds import Proposition, TotalContent


class Attitude(Enum):
    BELIEVE = "believe"
    DISBELIEVE = "disbelieve"
    SUSPEND = "suspend"


@dataclass(frozen=True)
class EpistemicInput:
    """A proposition plus an attitude toward it.

    ``strength`` is an optional non-negative magnitude used by strength-based
    rules; the attitude carries the sign (believe +, disbelieve -, suspend 0).
    """

    proposition: Proposition
    attitude: Attitude
    strength: int | None = None

    def __post_init__(self):
        if self.strength is not None and self.strength < 0:
            raise InputError("strength must be non-negative; the attitude carries the sign")

    def signed_strength(self, default: int) -> int:
        s = self.strength if self.strength is not None else default
        if self.attitude is Attitude.BELIEVE:
            return s
        if self.attitude is Attitude.DISBELIEVE:
            return -s
        return 0

    def __str__(self) -> str:
        text = f"{self.attitude.value} {self.proposition}"
        if self.strength is not None:
            text += f" strength {self.strength}"
        return text


def revise(model: RankedModel, prop: Proposition) -> TotalContent:
    """New total content after coming to believe ``prop``: E_i ∩ prop.

    Empty content results exactly when ``prop`` is the contradiction.
    """
    i = model.first_consistent_block(prop)
    if i is None:
        return TotalContent(model.universe.contradiction())
    return TotalContent(model.blocks[i].intersect(prop))


def suspend_content(model: RankedModel, prop: Proposition) -> TotalContent:
    """What remains believed when judgment in ``prop`` is suspended.

    The union of the two total contents represents the intersection of the
    post-belief and post-disbelief belief sets.
    """
    after_belief = revise(model, prop).content
    after_disbelief = revise(model, prop.complement()).content
    return TotalContent(after_belief.union(after_disbelief))


def required_content(model: RankedModel, epistemic_input: EpistemicInput) -> TotalContent:
    """The belief content any rule must produce for the given input."""
    prop = epistemic_input.proposition
    if epistemic_input.attitude is Attitude.BELIEVE:
        return revise(model, prop)
    if epistemic_input.attitude is Attitude.DISBELIEVE:
        return revise(model, prop.complement())
    return suspend_content(model, prop)


@dataclass(frozen=True)
class RevisionRule:
    """A named total function from (ranked model, epistemic input) to ranked model."""

    name: str
    transform: Callable[[RankedModel, EpistemicInput], RankedModel]
    strength_based: bool = False

    def __call__(self, model: RankedModel, epistemic_input: EpistemicInput) -> RankedModel:
        return apply_rule(self, model, epistemic_input)


def apply_rule(rule: RevisionRule, model: RankedModel,
               epistemic_input: EpistemicInput) -> RankedModel:
    """Validated rule application; rejects contradiction and tautology inputs."""
    prop = epistemic_input.proposition
    if prop.universe != model.universe:
        raise InputError("input proposition is over a different universe")
    if prop.is_empty or prop.is_full:
        raise InputError("revision rules reject the contradiction and the tautology")
    return rule.transform(model, epistemic_input)


def _side_chain(model: RankedModel, side: Proposition) -> list[Proposition]:
    """The side's worlds grouped by their relative rank, most believable first."""
    return [b.intersect(side) for b in model.blocks if not b.intersect(side).is_empty]


def _lexicographic(model: RankedModel, epistemic_input: EpistemicInput) -> RankedModel:
    prop = epistemic_input.proposition
    accepted = _side_chain(model, prop)
    rejected = _side_chain(model, prop.complement())
    if epistemic_input.attitude is Attitude.BELIEVE:
        return RankedModel(tuple(accepted + rejected))
    if epistemic_input.attitude is Attitude.DISBELIEVE:
        return RankedModel(tuple(rejected + accepted))
    # Suspension: merge the sides level by level so neither outranks the other.
    blocks = []
    for i in range(max(len(accepted), len(rejected))):
        block = model.universe.contradiction()
        if i < len(accepted):
            block = block.union(accepted[i])
        if i < len(rejected):
            block = block.union(rejected[i])
        blocks.append(block)
    return RankedModel(tuple(blocks))


def _natural(model: RankedModel, epistemic_input: EpistemicInput) -> RankedModel:
    front = required_content(model, epistemic_input).content
    rest = [b.intersect(front.complement()) for b in model.blocks]
    return RankedModel(tuple([front] + [b for b in rest if not b.is_empty]))


def _flip(model: RankedModel, epistemic_input: EpistemicInput) -> RankedModel:
    prop = epistemic_input.proposition
    accepted = _side_chain(model, prop)
    rejected = _side_chain(model, prop.complement())
    if epistemic_input.attitude is Attitude.BELIEVE:
        return RankedModel(tuple(accepted + rejected[::-1]))
    if epistemic_input.attitude is Attitude.DISBELIEVE:
        return RankedModel(tuple(rejected + accepted[::-1]))
    return _lexicographic(model, epistemic_input)


lexicographic_rule = RevisionRule("lex", _lexicographic)
natural_rule = RevisionRule("natural", _natural)
flip_rule = RevisionRule("flip", _flip)


def spohn_conditionalize(ocf: OCF, prop: Proposition, alpha: int) -> OCF:
    """Shift the target side to minimum 0 and the other side to minimum |alpha|.

    The target is ``prop`` for alpha >= 0 and its complement for alpha < 0, so
    a negative strength means believing the complement.  The result is
    normalized by construction and assigns the non-target side degree |alpha|.
    """
    if prop.universe != ocf.universe:
        raise InputError("proposition is over a different universe")
    if prop.is_empty or prop.is_full:
        raise InputError("conditionalization rejects the contradiction and the tautology")
    target = prop if alpha >= 0 else prop.complement()
    shift_in = ocf.degree(target)
    shift_out = ocf.degree(target.complement()) - abs(alpha)
    values = tuple(
        v - (shift_in if target.mask >> i & 1 else shift_out)
        for i, v in enumerate(ocf.values)
    )
    return OCF(ocf.universe, values)


def reverse_strength(ocf: OCF, prop: Proposition) -> int:
    """The strength whose input undoes any conditionalization of ``ocf`` on ``prop``.

    Conditionalizing any (prop, alpha)-successor of ``ocf`` by (prop, beta)
    with the returned beta restores ``ocf`` exactly.
    """
    if prop.universe != ocf.universe:
        raise InputError("proposition is over a different universe")
    if prop.is_empty or prop.is_full:
        raise InputError("reversal is undefined for the contradiction and the tautology")
    return ocf.degree(prop.complement()) - ocf.degree(prop)


def spohn_rule(alpha: int) -> RevisionRule:
    """Rank-level conditionalization with default strength ``alpha``.

    Reads ranks off the model as an OCF, conditionalizes with the
    attitude-signed strength (an input's own strength overrides the default),
    and regroups.  Gap collapsing on the way back makes this rule forget
    numeric distances, which is why it can be irreversible at the ranking
    level even though OCF conditionalization itself is reversible.
    """
    if alpha < 1:
        raise InputError("rule strength must be at least 1; strength 0 would turn "
                         "belief into suspension")

    def transform(model: RankedModel, epistemic_input: EpistemicInput) -> RankedModel:
        signed = epistemic_input.signed_strength(alpha)
        posterior = spohn_conditionalize(ocf_from_rpm(model), epistemic_input.proposition, signed)
        return rpm_from_ocf(posterior)

    return RevisionRule(f"spohn:{alpha}", transform, strength_based=True)


def rule_by_name(text: str) -> RevisionRule:
    """Look up ``lex``, ``natural``, ``flip``, or ``spohn:N``."""
    if text == "lex":
        return lexicographic_rule
    if text == "natural":
        return natural_rule
    if text == "flip":
        return flip_rule
    if text.startswith("spohn:"):
        try:
            alpha = int(text.split(":", 1)[1])
        except ValueError:
            raise InputError(f"bad rule strength in {text!r}") from None
        return spohn_rule(alpha)
    raise InputError(f"unknown rule {text!r} (expected lex, natural, flip, or spohn:N)")
