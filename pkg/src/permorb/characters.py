"""Sign-valued characters of ``L/2L`` attached to dual vectors.

A character is stored as an explicit vector of signs on the basis vectors,
``signs[i] = chi(alpha_i)``; there are exactly ``2^d`` of them and equality
is a componentwise comparison.  The character attached to a dual vector
``lam`` has ``signs[i] = (-1)^(<a_i,a_i>/2 + <lam,a_i>)`` and two dual
vectors give the same character exactly when they differ by an element
of ``2L*``.

Evaluation at a composite lattice vector is by homomorphic extension,
``chi(a+b) = chi(a) chi(b)``.  Note that the closed generator formula does
not extend verbatim to composite vectors: for ``a = sum n_i a_i`` the
quadratic quantity ``<a,a>/2`` differs from ``sum n_i <a_i,a_i>/2`` by the
cross terms ``sum_{i<j} n_i n_j <a_i,a_j>``.  Both parities matter
downstream, so the quadratic variant and the correction sign are exposed
here as well (``weight_parity_sign`` and ``split_gauge_sign``).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Tuple

from .errors import NonIntegralPairing, NotInDual, NotInLattice
from .lattice import GramLattice, Vector, inner

SignCharacter = Tuple[int, ...]

__all__ = [
    "SignCharacter",
    "chi_of_lambda",
    "chi_eval",
    "chi_shift",
    "pi_pairing",
    "all_characters",
    "weight_parity_sign",
    "split_gauge_sign",
    "format_character",
]


def chi_of_lambda(lat: GramLattice, lam: Vector) -> SignCharacter:
    """The character attached to a dual vector, as a sign vector."""
    if not lat.in_dual(lam):
        raise NotInDual("character labels must lie in the dual lattice")
    pairings = lat.gram_apply(lam)
    signs = []
    for i in range(lat.dim):
        e = lat.gram[i][i] // 2 + int(pairings[i])
        signs.append(-1 if e % 2 else 1)
    return tuple(signs)


def chi_eval(lat: GramLattice, chi: SignCharacter, alpha: Vector) -> int:
    """Evaluate a character at a lattice vector by homomorphic extension."""
    if not lat.in_lattice(alpha):
        raise NotInLattice("characters of L/2L evaluate on lattice vectors")
    e = 0
    for s, n in zip(chi, alpha):
        if s < 0 and int(n) % 2:
            e ^= 1
    return -1 if e else 1


def chi_shift(lat: GramLattice, chi: SignCharacter, lam: Vector) -> SignCharacter:
    """Twist a character by a dual vector: multiply signs[i] by (-1)^<lam,a_i>."""
    if not lat.in_dual(lam):
        raise NotInDual("character shifts are by dual vectors")
    pairings = lat.gram_apply(lam)
    return tuple(s * (-1 if int(p) % 2 else 1) for s, p in zip(chi, pairings))


def pi_pairing(lat: GramLattice, lam: Vector, mu: Vector) -> int:
    """The sign ``(-1)^<lam,mu>``; the pairing must be integral."""
    t = inner(lat, lam, mu)
    if t.denominator != 1:
        raise NonIntegralPairing(f"<lam,mu> = {t} is not an integer")
    return -1 if int(t) % 2 else 1


def all_characters(lat: GramLattice) -> Tuple[SignCharacter, ...]:
    """All ``2^d`` sign characters, plus-signs first."""
    return tuple(product((1, -1), repeat=lat.dim))


def weight_parity_sign(lat: GramLattice, lam: Vector, alpha: Vector) -> int:
    """The sign ``(-1)^(<lam,alpha> + <alpha,alpha>/2)`` for ``alpha`` in ``L``.

    This is the quadratic companion of ``chi_eval``: it governs whether the
    conformal-weight class of a twisted summand shifts by a half-integer
    when its coset label is translated by ``alpha``, so it decides all the
    plus/minus bookkeeping in the twisted sector.  It depends only on
    ``alpha`` mod ``2L`` and on ``lam`` mod ``2L*``.
    """
    if not lat.in_lattice(alpha):
        raise NotInLattice("weight parity is defined for lattice translations")
    if not lat.in_dual(lam):
        raise NotInDual("weight parity labels lie in the dual lattice")
    t = inner(lat, lam, alpha) + inner(lat, alpha, alpha) / 2
    assert t.denominator == 1
    return -1 if int(t) % 2 else 1


def split_gauge_sign(lat: GramLattice, alpha: Vector) -> int:
    """Alignment sign ``(-1)^(sum_{i<j} n_i n_j <a_i,a_j>)`` on ``L/2L``.

    The plus/minus labels of the split untwisted modules are a convention
    made coset by coset.  This sign is the unique quadratic function on
    ``L/2L`` that vanishes on the basis vectors and whose polarization is
    the mod-2 inner product; it aligns the per-coset conventions so that
    the diagonal sum of split modules closes under fusion.  Equivalently it
    is the ratio ``weight_parity_sign(lam, alpha) / chi_eval(chi_lam, alpha)``
    for any ``lam``.  Trivial whenever all off-diagonal Gram entries are
    even (in particular in rank 1).
    """
    if not lat.in_lattice(alpha):
        raise NotInLattice("gauge sign is defined on lattice vectors")
    norm = inner(lat, alpha, alpha)
    diag = sum(int(n) * int(n) * lat.gram[i][i] for i, n in enumerate(alpha))
    cross = (norm - diag) / 2
    assert Fraction(cross).denominator == 1
    return -1 if int(cross) % 2 else 1


def format_character(chi: SignCharacter) -> str:
    """Render as a string of '+'/'-' of length d."""
    return "".join("+" if s > 0 else "-" for s in chi)
