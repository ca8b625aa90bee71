"""Seeded random generation and corruption of identity specs.

Shared by the round-trip and mutation-sensitivity tests.  Everything here
produces specs that satisfy the static validation rules (growing
non-negative leads, non-negative bases and lengths, unit denominators,
atom preconditions), so parsing, printing and evaluation are all safe.
"""

from __future__ import annotations

import random
from dataclasses import replace
from fractions import Fraction

from qrsl import (
    ConstAtom,
    IdentitySpec,
    LinExpr,
    MonomialAtom,
    PochFactorSpec,
    PochInfAtom,
    ProductSideSpec,
    QuadExpr,
    QuintupleAtom,
    ResidueAtom,
    SumSideSpec,
)

_LETTERS = "abcdefghijklmnopqrstuvwxyzABCDEFGHJKQ"
_ALNUM = _LETTERS + "0123456789_"


def _random_name(rng: random.Random) -> str:
    name = rng.choice(_LETTERS) + "".join(
        rng.choice(_ALNUM) for _ in range(rng.randrange(0, 6))
    )
    for _ in range(rng.randrange(0, 2)):
        if rng.random() < 0.5:
            seg = str(rng.randrange(0, 99))
        else:
            seg = rng.choice(_LETTERS) + "".join(
                rng.choice(_ALNUM) for _ in range(rng.randrange(0, 2))
            )
        name += "-" + seg
    return name


def _random_lead(rng: random.Random, j0: int) -> QuadExpr:
    c2 = rng.randrange(0, 4)
    c1 = rng.randrange(1, 5) if c2 == 0 else rng.randrange(-2, 5)
    base_min = min(c2 * j * j + c1 * j for j in range(j0, j0 + 8))
    c0 = rng.randrange(max(0, -base_min), max(0, -base_min) + 6)
    lead = QuadExpr(c2, c1, c0)
    assert lead.grows() and lead.min_from(j0) >= 0
    return lead


def _random_factor(rng: random.Random, j0: int) -> PochFactorSpec:
    denominator = rng.random() < 0.5
    sign = rng.choice((1, -1))
    step = rng.randrange(1, 7)
    base = LinExpr(rng.randrange(0, 3), rng.randrange(0, 6))
    length = LinExpr(rng.randrange(0, 3), rng.randrange(0, 4))
    if denominator and sign == 1:
        zero_everywhere = base.c1 == 0 and base.c0 == 0 and (
            length.c1 != 0 or length.c0 != 0
        )
        zero_at_start = base.at(j0) == 0 and length.at(j0) >= 1
        if zero_everywhere or zero_at_start:
            base = LinExpr(base.c1, 1)
    return PochFactorSpec(sign, base, step, length, denominator)


def _random_atom(rng: random.Random, first: bool):
    denominator = False if first else rng.random() < 0.4
    kind = rng.randrange(0, 5)
    if kind == 0:
        sign = rng.choice((1, -1))
        base = rng.randrange(1, 12) if sign == 1 else rng.randrange(0, 12)
        return PochInfAtom(sign, base, rng.randrange(1, 9), denominator)
    if kind == 1:
        x = rng.randrange(1, 5)
        return QuintupleAtom(2 * x + rng.randrange(1, 10), x, denominator)
    if kind == 2:
        m = rng.randrange(1, 13)
        count = rng.randrange(1, min(m, 4) + 1)
        return ResidueAtom(m, frozenset(rng.sample(range(1, m + 1), count)), denominator)
    if kind == 3 and not denominator:
        return MonomialAtom(rng.randrange(0, 7))
    return ConstAtom(rng.randrange(1, 6), denominator)


def random_spec(rng: random.Random) -> IdentitySpec:
    j0 = rng.randrange(0, 3)
    const = Fraction(1)
    if rng.random() < 0.3:
        const = Fraction(rng.randrange(1, 6), rng.randrange(1, 6))
    lhs = SumSideSpec(
        j0,
        _random_lead(rng, j0),
        tuple(_random_factor(rng, j0) for _ in range(rng.randrange(0, 4))),
        const=const,
    )
    atoms = tuple(_random_atom(rng, i == 0) for i in range(rng.randrange(1, 4)))
    return IdentitySpec(_random_name(rng), lhs, ProductSideSpec(atoms))


# ---------------------------------------------------------------------------
# Single-site corruptions
# ---------------------------------------------------------------------------


def spec_is_valid(spec: IdentitySpec) -> bool:
    lhs = spec.lhs
    if not lhs.lead.grows() or lhs.lead.min_from(lhs.start) < 0:
        return False
    for f in lhs.factors:
        if f.step < 1:
            return False
        if f.base.c1 < 0 or f.base.at(lhs.start) < 0:
            return False
        if f.length.c1 < 0 or f.length.at(lhs.start) < 0:
            return False
        if f.denominator and f.sign == 1:
            if f.base.c1 == 0 and f.base.c0 == 0 and (f.length.c1 or f.length.c0):
                return False
            if f.base.at(lhs.start) == 0 and f.length.at(lhs.start) >= 1:
                return False
    for atom in spec.rhs.atoms:
        if isinstance(atom, PochInfAtom):
            if atom.step < 1 or atom.base < 0:
                return False
            if atom.base == 0 and atom.sign == 1:
                return False
        elif isinstance(atom, QuintupleAtom):
            if atom.x_exp < 1 or atom.w_exp - 2 * atom.x_exp < 1:
                return False
        elif isinstance(atom, ResidueAtom):
            if not atom.residues:
                return False
            if any(not 1 <= r <= atom.modulus for r in atom.residues):
                return False
    return True


def _replace_factor(spec, i, factor):
    lhs = spec.lhs
    factors = lhs.factors[:i] + (factor,) + lhs.factors[i + 1 :]
    return replace(spec, lhs=replace(lhs, factors=factors))


def _replace_atom(spec, i, atom):
    atoms = spec.rhs.atoms[:i] + (atom,) + spec.rhs.atoms[i + 1 :]
    return replace(spec, rhs=replace(spec.rhs, atoms=atoms))


def _mutate_once(spec: IdentitySpec, rng: random.Random):
    lhs = spec.lhs
    choice = rng.randrange(6)
    if choice == 0:
        coeffs = [lhs.lead.c2, lhs.lead.c1, lhs.lead.c0]
        coeffs[rng.randrange(3)] += rng.choice((-1, 1, 2))
        return replace(spec, lhs=replace(lhs, lead=QuadExpr(*coeffs)))
    if choice == 1 and lhs.factors:
        i = rng.randrange(len(lhs.factors))
        f = lhs.factors[i]
        base = LinExpr(f.base.c1, f.base.c0 + rng.choice((-1, 1, 2)))
        return _replace_factor(spec, i, replace(f, base=base))
    if choice == 2 and lhs.factors:
        i = rng.randrange(len(lhs.factors))
        f = lhs.factors[i]
        return _replace_factor(spec, i, replace(f, step=f.step + rng.choice((-1, 1, 2))))
    if choice == 3 and lhs.factors:
        i = rng.randrange(len(lhs.factors))
        f = lhs.factors[i]
        if rng.random() < 0.5:
            length = LinExpr(f.length.c1, f.length.c0 + rng.choice((-1, 1)))
        else:
            length = LinExpr(f.length.c1 + rng.choice((-1, 1)), f.length.c0)
        return _replace_factor(spec, i, replace(f, length=length))
    if choice == 4 and lhs.factors:
        i = rng.randrange(len(lhs.factors))
        f = lhs.factors[i]
        return _replace_factor(spec, i, replace(f, sign=-f.sign))
    if choice == 5 and spec.rhs.atoms:
        i = rng.randrange(len(spec.rhs.atoms))
        atom = spec.rhs.atoms[i]
        if isinstance(atom, PochInfAtom):
            if rng.random() < 0.5:
                atom = replace(atom, base=atom.base + rng.choice((-1, 1, 2)))
            else:
                atom = replace(atom, step=atom.step + rng.choice((-1, 1)))
        elif isinstance(atom, QuintupleAtom):
            if rng.random() < 0.5:
                atom = replace(atom, x_exp=atom.x_exp + rng.choice((-2, 2)))
            else:
                atom = replace(atom, w_exp=atom.w_exp + rng.choice((-1, 1)))
        elif isinstance(atom, ResidueAtom):
            r = rng.randrange(1, atom.modulus + 1)
            residues = set(atom.residues)
            residues.symmetric_difference_update({r})
            if not residues:
                return None
            atom = replace(atom, residues=frozenset(residues))
        else:
            return None
        return _replace_atom(spec, i, atom)
    return None


def mutate_spec(spec: IdentitySpec, rng: random.Random) -> IdentitySpec:
    """One random single-site corruption, guaranteed valid and different."""
    while True:
        cand = _mutate_once(spec, rng)
        if cand is not None and cand != spec and spec_is_valid(cand):
            return cand
