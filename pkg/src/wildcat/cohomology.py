"""Degree-one rational cohomology of a graph and the zero-divisor cup-length.

H*(G) of a connected graph is Q in degree 0 and Q^b in degree 1 (b = first
Betti number), with basis classes dual to the non-forest edges.  Degrees <= 2
of H*(G x G) are carried by the Kunneth pieces H1 (x) H0, H0 (x) H1 and
H1 (x) H1; everything above truncates.  The cup-length of the kernel of the
diagonal map is computed by explicit bilinear algebra over the rationals and
bounds the topological complexity of the graph from below (tightly, at graph
scale).
"""

from dataclasses import dataclass
from fractions import Fraction

from .graphs import MultiGraph, GraphError, spanning_forest

__all__ = [
    "CocycleBasis",
    "KunnethElement",
    "h1_basis",
    "zero_divisor_cuplength",
    "tc_lower_bound",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class CocycleBasis:
    """Basis of H^1(g; Q): one class per non-forest edge of the canonical
    spanning forest, in increasing edge-id order."""

    graph: MultiGraph
    forest: tuple
    generators: tuple

    @property
    def dimension(self) -> int:
        return len(self.generators)


def h1_basis(g: MultiGraph) -> CocycleBasis:
    if g.n_components != 1:
        raise GraphError("h1_basis requires a connected graph")
    forest = spanning_forest(g)
    fset = set(forest)
    gens = tuple(sorted(e.id for e in g.edges if e.id not in fset))
    return CocycleBasis(g, forest, gens)


@dataclass(frozen=True)
class KunnethElement:
    """Element of H*(g x g) in degrees 1 and 2.

    ``left``/``right`` are the H1 (x) H0 and H0 (x) H1 components of a
    degree-1 element; ``cross`` is the H1 (x) H1 matrix of a degree-2
    element.  The cup product of two degree-1 elements lands in ``cross``
    with the graded sign -1 on the (1 (x) a)(b (x) 1) term.
    """

    dim: int
    left: tuple
    right: tuple
    cross: tuple

    def __post_init__(self):
        if len(self.left) != self.dim or len(self.right) != self.dim:
            raise ValueError("component length does not match basis dimension")
        if len(self.cross) != self.dim or any(len(r) != self.dim for r in self.cross):
            raise ValueError("cross matrix shape does not match basis dimension")

    @classmethod
    def degree_one(cls, left, right) -> "KunnethElement":
        left = tuple(Fraction(c) for c in left)
        right = tuple(Fraction(c) for c in right)
        dim = len(left)
        zero_row = (_ZERO,) * dim
        return cls(dim, left, right, (zero_row,) * dim)

    @classmethod
    def zero_divisor(cls, dim: int, index: int) -> "KunnethElement":
        """a (x) 1 - 1 (x) a for the index-th basis class a."""
        vec = tuple(_ONE if i == index else _ZERO for i in range(dim))
        neg = tuple(-c for c in vec)
        return cls.degree_one(vec, neg)

    def is_zero(self) -> bool:
        return (all(c == 0 for c in self.left)
                and all(c == 0 for c in self.right)
                and all(c == 0 for row in self.cross for c in row))

    def is_degree_one(self) -> bool:
        return all(c == 0 for row in self.cross for c in row)

    def cup(self, other: "KunnethElement") -> "KunnethElement":
        """Cup product of two degree-1 elements (degree-2 result)."""
        if self.dim != other.dim:
            raise ValueError("mismatched basis dimensions")
        if not (self.is_degree_one() and other.is_degree_one()):
            raise ValueError("cup is only defined between degree-1 elements")
        dim = self.dim
        cross = tuple(
            tuple(self.left[i] * other.right[j] - other.left[i] * self.right[j]
                  for j in range(dim))
            for i in range(dim)
        )
        zeros = (_ZERO,) * dim
        return KunnethElement(dim, zeros, zeros, cross)


def zero_divisor_cuplength(g: MultiGraph) -> int:
    """Length of the longest non-vanishing product of zero-divisors.

    Computed over the rationals from the basis zero-divisors; graph
    cohomology caps the answer at 2 for degree reasons.
    """
    basis = h1_basis(g)
    dim = basis.dimension
    divisors = [KunnethElement.zero_divisor(dim, i) for i in range(dim)]
    length = 0
    for z in divisors:
        if not z.is_zero():
            length = 1
            break
    for i in range(dim):
        if length == 2:
            break
        for j in range(i + 1, dim):
            if not divisors[i].cup(divisors[j]).is_zero():
                length = 2
                break
    return length


def tc_lower_bound(g: MultiGraph) -> int:
    """Cup-length lower bound for the topological complexity of g.

    Always <= tc_graph(g), with equality for every connected graph.
    """
    return zero_divisor_cuplength(g)
