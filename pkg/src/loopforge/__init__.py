"""loopforge: a verified calculus for finite loops given as Cayley tables.

Core objects are :class:`~loopforge.core.LoopTable` and
:class:`~loopforge.core.Perm`; predicates and class sets live in
:mod:`loopforge.elements`, structural subloops in
:mod:`loopforge.structure`, isomorphism testing in :mod:`loopforge.iso`,
central extensions and the order-16/27 families in
:mod:`loopforge.extension` / :mod:`loopforge.families`, exhaustive
law-constrained search in :mod:`loopforge.search`, and the classification
drivers plus theorem audit in :mod:`loopforge.classify` /
:mod:`loopforge.audit`.
"""

from .core import AmbiguousPowerError, InvalidTableError, LoopTable, Perm, direct_product

__all__ = [
    "LoopTable", "Perm", "direct_product",
    "InvalidTableError", "AmbiguousPowerError",
]

__version__ = "0.1.0"
