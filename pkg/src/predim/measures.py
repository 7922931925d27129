"""Finitely supported probability measures on embedding sets.

Measures compose multiplicatively: a measure on copies of B in a window times
a measure on copies of A inside B pushes forward to composite copies of A in
the window, with masses accumulating whenever two composites land on the same
image.  Evaluating a 0/1 coloring against a measure integrates it exactly.
"""

from fractions import Fraction

from .embeddings import Embedding, canonical_embedding
from .errors import InputError

__all__ = ["FiniteMeasure", "compose_measures", "evaluate_measure"]


class FiniteMeasure:
    """Positive rational weights on finitely many embeddings, summing to 1."""

    def __init__(self, atoms):
        self.atoms = {}
        for emb, weight in dict(atoms).items():
            w = Fraction(weight)
            if w <= 0:
                raise InputError("measure weights must be strictly positive")
            self.atoms[emb] = w
        if not self.atoms:
            raise InputError("a probability measure needs non-empty support")
        if sum(self.atoms.values()) != 1:
            raise InputError("measure weights must sum to exactly 1")

    @property
    def support(self):
        return tuple(sorted(self.atoms, key=lambda e: e.map_tuple()))

    def __call__(self, emb):
        return self.atoms.get(emb, Fraction(0))

    @classmethod
    def point(cls, emb):
        return cls({emb: Fraction(1)})

    @classmethod
    def uniform(cls, embeddings):
        embeddings = list(embeddings)
        if not embeddings:
            raise InputError("uniform measure needs a non-empty family")
        w = Fraction(1, len(embeddings))
        return cls({e: w for e in embeddings})


def compose_measures(outer, inner):
    """Product measure on composite copies: q(L o G) = outer(L) * inner(G).

    `outer` lives on copies of a middle graph in a window, `inner` on copies
    of a pattern inside the middle graph.  Composites are normalized to the
    canonical embedding of their image, so masses reaching the same image add
    up; the total stays exactly 1.
    """
    window = None
    pattern = None
    for lam in outer.atoms:
        window = window or lam.target
        if lam.target != window:
            raise InputError("outer measure mixes different windows")
    middle = next(iter(outer.atoms)).source
    for gam in inner.atoms:
        pattern = pattern or gam.source
        if gam.target != middle:
            raise InputError("inner measure does not live inside the outer pattern")
    for lam in outer.atoms:
        if lam.source != middle:
            raise InputError("outer measure mixes different patterns")

    masses = {}
    for lam, r in outer.atoms.items():
        for gam, p in inner.atoms.items():
            composite = gam.compose(lam)
            canonical = canonical_embedding(pattern, window, composite.image)
            masses[canonical] = masses.get(canonical, Fraction(0)) + r * p
    return FiniteMeasure(masses)


def _image_of(key):
    if isinstance(key, Embedding):
        return key.image
    return frozenset(key)


def evaluate_measure(coloring, measure):
    """Integral of a 0/1 coloring of copies against the measure, in [0, 1].

    The coloring maps copy images (or embeddings) to colors; it must cover the
    whole support.
    """
    table = {_image_of(k): v for k, v in dict(coloring).items()}
    total = Fraction(0)
    for emb, weight in measure.atoms.items():
        if emb.image not in table:
            raise InputError(f"coloring undefined on copy {sorted(emb.image)}")
        value = table[emb.image]
        if value not in (0, 1):
            raise InputError("colors must be 0 or 1")
        total += weight * value
    return total
