#  Copyright (c) Ergodic LLC 2023
#  research@ergodic.io
import logging
from typing import Dict, List, Tuple

import equinox as eqx

from fqk.errors import InconsistentVerdict
from fqk.fusion.module import ModuleCategory
from fqk.quiver.core import FusionQuiver, normalize
from fqk.quiver.coxeter import CoxeterClassification, classify_coxeter, coxeter_graph
from fqk.unfolding.components import ComponentReport, components
from fqk.unfolding.unfold import UnfoldedQuiver, unfold

logger = logging.getLogger(__name__)


class FiniteTypeVerdict(eqx.Module):
    """
    Finite representation type decided twice: from the Coxeter graph alone (which never looks at the module) and
    from the components of the unfolded quiver.

    Args:
        finite: the agreed verdict
        gamma: classification of Gamma_Q
        unfolded: components of Q_M
        matching: for each Gamma_Q component, the indices of the unfolded components lying over it

    """

    finite: bool
    gamma: CoxeterClassification
    unfolded: ComponentReport
    unfolded_quiver: UnfoldedQuiver
    matching: Tuple[Tuple[int, ...], ...]

    @property
    def num_indecomposables(self):
        return self.unfolded.total_roots

    def summary(self) -> str:
        if not self.finite:
            return f"infinite; Γ_Q = {self.gamma.summary()}; Q̌ = {self.unfolded.summary()}"
        hs = sorted({c.coxeter_number for c in self.unfolded.components})
        h = ", ".join(str(x) for x in hs)
        return (
            f"finite; Γ_Q = {self.gamma.summary()}; Q̌ = {self.unfolded.summary()} "
            f"(h={h}, {self.unfolded.total_roots} roots)"
        )


def _match_components(gamma: CoxeterClassification, report: ComponentReport, U: UnfoldedQuiver) -> List[Tuple[int, ...]]:
    # (v, L) -> v sends each unfolded component into exactly one Gamma_Q component
    names = U.source.vertices
    owner: Dict[str, int] = {v: k for k, c in enumerate(gamma.components) for v in c.vertices}
    matching = [[] for _ in gamma.components]
    for j, comp in enumerate(report.components):
        owners = {owner[names[U.projection(i)]] for i in comp.indices}
        if len(owners) != 1:
            raise InconsistentVerdict(f"unfolded component {j} lies over several Coxeter components {sorted(owners)}")
        matching[owners.pop()].append(j)
    return [tuple(m) for m in matching]


def is_finite_type(Q: FusionQuiver, M: ModuleCategory = None, tol: float = None) -> FiniteTypeVerdict:
    """
    Decides finite representation type of ``Q`` over ``M`` and cross-checks the two deciders component by component.
    For every finite Coxeter component, the unfolded components over it must all be finite with the same Coxeter
    number.

    :param Q:
    :param M: defaults to ``Q.default_module()``
    :param tol:
    :raises InconsistentVerdict: when the deciders disagree
    """
    Q = normalize(Q)
    gamma = classify_coxeter(coxeter_graph(Q, tol), tol)
    U = unfold(Q, M)
    report = components(U)
    matching = _match_components(gamma, report, U)

    for k, (c, over) in enumerate(zip(gamma.components, matching)):
        unfolded_finite = all(report.components[j].type != "infinite" for j in over)
        if c.finite != unfolded_finite:
            raise InconsistentVerdict(
                f"Coxeter component {c.name} on {list(c.vertices)} is {'finite' if c.finite else 'infinite'} but "
                f"its unfolding is {'finite' if unfolded_finite else 'infinite'}"
            )
        if c.finite:
            hs = {report.components[j].coxeter_number for j in over}
            if hs != {c.coxeter_number}:
                raise InconsistentVerdict(f"Coxeter component {c.name} has h={c.coxeter_number}, unfolded h={sorted(hs)}")

    verdict = FiniteTypeVerdict(
        finite=gamma.finite, gamma=gamma, unfolded=report, unfolded_quiver=U, matching=tuple(matching)
    )
    logger.info(verdict.summary())
    return verdict
