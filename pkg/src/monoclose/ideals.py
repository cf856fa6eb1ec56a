"""Exact arithmetic on monomial ideals represented by exponent vectors.

A monomial x_1^{v_1} ... x_n^{v_n} is identified with its exponent vector
``v``, a tuple of nonnegative integers.  A monomial ideal is stored as its
unique minimal generating set: an antichain under componentwise <=, kept
lexicographically sorted so that two ideals are equal exactly when their
generator sequences are equal.

Conventions for the degenerate cases:

* the zero ideal has an empty generator tuple;
* the unit ideal is generated by the zero vector.

Every operation is a pure function; ideals are immutable.  Exponents are
Python ints, so powers and colon quotients never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels
from .errors import DimensionMismatchError

Vector = tuple[int, ...]


def _check_vector(v, dim: int) -> Vector:
    t = tuple(v)
    if len(t) != dim:
        raise DimensionMismatchError(
            f"expected a vector of length {dim}, got {len(t)}"
        )
    for c in t:
        if not isinstance(c, int) or isinstance(c, bool):
            raise ValueError(f"exponents must be integers, got {c!r}")
        if c < 0:
            raise ValueError(f"exponents must be nonnegative, got {c}")
    return t


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in ``dim`` variables, given by its minimal generators.

    The constructor canonicalizes: it validates the vectors, drops redundant
    generators (multiples of others) and sorts the rest lexicographically.
    """

    dim: int
    generators: tuple[Vector, ...] = field(default=())

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("ambient dimension must be >= 1")
        gens = [_check_vector(g, self.dim) for g in self.generators]
        object.__setattr__(
            self, "generators", tuple(kernels.minimal_antichain(gens))
        )

    @classmethod
    def _from_antichain(cls, dim: int, sorted_gens) -> "MonomialIdeal":
        """Trusted constructor for generator sets already in canonical form."""
        self = object.__new__(cls)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "generators", tuple(sorted_gens))
        return self

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and not any(self.generators[0])

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    def __repr__(self):
        return f"MonomialIdeal(dim={self.dim}, generators={list(self.generators)})"


def _same_dim(I: MonomialIdeal, other_dim: int, what: str):
    if I.dim != other_dim:
        raise DimensionMismatchError(
            f"{what}: ambient dimensions differ ({I.dim} vs {other_dim})"
        )


def minimalize(candidates, dim: int) -> MonomialIdeal:
    """Ideal generated by ``candidates``, reduced to its minimal antichain."""
    gens = [_check_vector(v, dim) for v in candidates]
    return MonomialIdeal._from_antichain(dim, kernels.minimal_antichain(gens))


def divides(g: Vector, v: Vector) -> bool:
    """Componentwise g <= v, i.e. the monomial x^g divides x^v."""
    return all(a <= b for a, b in zip(g, v))


def contains_monomial(I: MonomialIdeal, v) -> bool:
    """Whether x^v lies in I, i.e. some generator divides v."""
    v = _check_vector(v, I.dim)
    return kernels.dominates_any(I.generators, v)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Ideal product: minimal antichain of all pairwise generator sums."""
    _same_dim(I, J.dim, "product")
    if I.is_zero or J.is_zero:
        return MonomialIdeal._from_antichain(I.dim, ())
    gens = kernels.pair_sums_antichain(I.generators, J.generators)
    return MonomialIdeal._from_antichain(I.dim, gens)


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """k-th ideal power by iterated product, minimalizing at every step."""
    if k < 1:
        raise ValueError(f"power requires k >= 1, got {k}")
    result = I
    for _ in range(k - 1):
        result = product(result, I)
    return result


def colon_by_monomial(I: MonomialIdeal, f) -> MonomialIdeal:
    """The colon ideal (I : x^f) = { h : h * x^f in I }.

    For monomial ideals this is generated by g - min(g, f) over generators g.
    """
    f = _check_vector(f, I.dim)
    gens = [tuple(a - min(a, b) for a, b in zip(g, f)) for g in I.generators]
    return minimalize(gens, I.dim)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Intersection: generated by componentwise maxima (lcms) of generator pairs."""
    _same_dim(I, J.dim, "intersect")
    gens = {
        tuple(max(a, b) for a, b in zip(g, h))
        for g in I.generators
        for h in J.generators
    }
    return minimalize(gens, I.dim)


def colon_by_maximal(I: MonomialIdeal) -> MonomialIdeal:
    """The colon (I : (x_1, ..., x_n)), as the intersection of the variable colons."""
    result = None
    for i in range(I.dim):
        e = tuple(1 if j == i else 0 for j in range(I.dim))
        quotient = colon_by_monomial(I, e)
        result = quotient if result is None else intersect(result, quotient)
    return result


def is_m_primary(I: MonomialIdeal) -> bool:
    """Whether every variable has a pure-power generator (support of size one)."""
    covered = set()
    for g in I.generators:
        support = [i for i, c in enumerate(g) if c]
        if len(support) == 1:
            covered.add(support[0])
    return len(covered) == I.dim


def scale(v: Vector, k: int) -> Vector:
    """Componentwise multiple k*v."""
    return tuple(k * c for c in v)


def add(u: Vector, v: Vector) -> Vector:
    """Componentwise sum."""
    return tuple(a + b for a, b in zip(u, v))
