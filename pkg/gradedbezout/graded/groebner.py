"""Buchberger's algorithm for submodules of a free module over Q[x_1..x_m].

Pairs are formed only between elements whose leaders share a component.
Pair elimination follows Gebauer and Moeller; the coprime-leader criterion
applies only to rank-one modules.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from gradedbezout.core.kolchin import ExponentMatrix, canonicalize
from gradedbezout.errors import NonHomogeneousInputError, UnsupportedRingError
from gradedbezout.graded.elements import ModuleElement, leader, monic
from gradedbezout.graded.ranking import ModuleTerm, Ranking
from gradedbezout.graded.system import GradedSystem

logger = logging.getLogger(__name__)

Pair = tuple[int, int]


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis, sorted by leader.

    Attributes:
        m: Number of indeterminates.
        n: Rank of the free module.
        ranking: The ranking the basis is reduced with respect to.
        elements: Monic elements with pairwise non-dividing leaders.
    """

    m: int
    n: int
    ranking: Ranking
    elements: tuple[ModuleElement, ...]

    @property
    def leaders(self) -> tuple[ModuleTerm, ...]:
        return tuple(leader(g, self.ranking) for g in self.elements)

    def to_json(self) -> list[dict]:
        return [g.to_json(self.ranking) for g in self.elements]


def s_polynomial(
    f: ModuleElement, g: ModuleElement, ranking: Ranking
) -> ModuleElement | None:
    """S-polynomial of two elements; None when their leaders differ in component."""
    u, v = leader(f, ranking), leader(g, ranking)
    lcm = u.lcm(v)
    if lcm is None:
        return None
    left = f.mul(lcm.quotient(u), 1 / f.terms[u])
    right = g.mul(lcm.quotient(v), 1 / g.terms[v])
    return left - right


def normal_form(
    f: ModuleElement, basis: Sequence[ModuleElement], ranking: Ranking
) -> ModuleElement:
    """Fully reduce ``f`` by ``basis``.

    Every term of the result is divisible by no leader of ``basis``.
    """
    reducers = [(leader(g, ranking), g) for g in basis if not g.is_zero]
    remainder: dict[ModuleTerm, Fraction] = {}
    p = f
    while not p.is_zero:
        t = leader(p, ranking)
        c = p.terms[t]
        for u, g in reducers:
            if u.divides(t):
                p = p - g.mul(t.quotient(u), c / g.terms[u])
                break
        else:
            remainder[t] = c
            p = ModuleElement({k: v for k, v in p.terms.items() if k != t})
    return ModuleElement(remainder)


def _update(
    leaders: list[ModuleTerm],
    pairs: set[Pair],
    new_leader: ModuleTerm,
    product_criterion: bool,
) -> set[Pair]:
    new_index = len(leaders)
    kept = set()
    for i, j in pairs:
        lij = leaders[i].lcm(leaders[j])
        if (
            not new_leader.divides(lij)
            or lij == leaders[i].lcm(new_leader)
            or lij == leaders[j].lcm(new_leader)
        ):
            kept.add((i, j))

    by_lcm: dict[ModuleTerm, list[int]] = {}
    for i, u in enumerate(leaders):
        L = u.lcm(new_leader)
        if L is not None:
            by_lcm.setdefault(L, []).append(i)

    minimal: list[ModuleTerm] = []
    for L in sorted(by_lcm, key=lambda t: (t.order, t.exponent)):
        if all(not other.divides(L) for other in minimal):
            minimal.append(L)

    for L in minimal:
        group = by_lcm[L]
        if product_criterion and any(leaders[i].is_coprime(new_leader) for i in group):
            continue
        kept.add((min(group), new_index))
    return kept


def _minimalize(basis: list[ModuleElement], ranking: Ranking) -> list[ModuleElement]:
    minimal: list[ModuleElement] = []
    for f in sorted(basis, key=lambda h: ranking.key(leader(h, ranking))):
        lf = leader(f, ranking)
        if all(not leader(g, ranking).divides(lf) for g in minimal):
            minimal.append(f)
    return minimal


def _interreduce(basis: list[ModuleElement], ranking: Ranking) -> list[ModuleElement]:
    reduced = []
    for i, g in enumerate(basis):
        others = basis[:i] + basis[i + 1 :]
        reduced.append(monic(normal_form(g, others, ranking), ranking))
    return reduced


def buchberger(
    generators: Iterable[ModuleElement],
    ranking: Ranking,
) -> GroebnerBasis:
    """Reduced Groebner basis of the submodule generated by ``generators``.

    Args:
        generators: Homogeneous elements; zero elements are ignored.
        ranking: Ranking on the module terms.

    Returns:
        The reduced basis, sorted by leader.

    Raises:
        NonHomogeneousInputError: If a generator mixes term orders.
    """
    gens = [g for g in generators if not g.is_zero]
    for g in gens:
        if not g.is_homogeneous:
            raise NonHomogeneousInputError(f"Generator {g!r} is not homogeneous")

    product_criterion = ranking.n == 1
    basis: list[ModuleElement] = []
    leaders: list[ModuleTerm] = []
    pairs: set[Pair] = set()

    def add(f: ModuleElement) -> None:
        nonlocal pairs
        f = monic(f, ranking)
        u = leader(f, ranking)
        pairs = _update(leaders, pairs, u, product_criterion)
        basis.append(f)
        leaders.append(u)

    for g in gens:
        add(g)

    reductions = 0
    while pairs:
        i, j = min(
            pairs,
            key=lambda p: (
                ranking.key(leaders[p[0]].lcm(leaders[p[1]])),
                p[1],
                p[0],
            ),
        )
        pairs.remove((i, j))
        s = s_polynomial(basis[i], basis[j], ranking)
        if s is None:
            continue
        r = normal_form(s, basis, ranking)
        reductions += 1
        if not r.is_zero:
            add(r)

    reduced = _interreduce(_minimalize(basis, ranking), ranking)
    reduced.sort(key=lambda h: ranking.key(leader(h, ranking)))
    logger.debug(
        "Groebner basis computed",
        extra={
            "generators": len(gens),
            "basis_size": len(reduced),
            "reductions": reductions,
        },
    )
    return GroebnerBasis(
        m=ranking.m, n=ranking.n, ranking=ranking, elements=tuple(reduced)
    )


def basis_of(system: GradedSystem) -> GroebnerBasis:
    """Groebner basis of a generator system under the standard ranking.

    Raises:
        UnsupportedRingError: If the system only carries leader data.
    """
    if system.generators is None:
        raise UnsupportedRingError(
            "A Groebner basis needs generators; leader data was given"
        )
    return buchberger(system.generators, Ranking(m=system.m, n=system.n))


def leader_matrices(G: GroebnerBasis) -> tuple[ExponentMatrix, ...]:
    """Exponent matrices ``E_1, ..., E_n`` of the leaders in each component."""
    rows: dict[int, list[tuple[int, ...]]] = {j: [] for j in range(1, G.n + 1)}
    for u in G.leaders:
        rows[u.component].append(u.exponent)
    return tuple(
        canonicalize(ExponentMatrix(m=G.m, rows=tuple(rows[j])))
        for j in range(1, G.n + 1)
    )
