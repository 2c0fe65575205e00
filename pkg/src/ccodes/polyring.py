"""Exact integer polynomials and the residue-indexed product fold.

IntPolynomial is a dense immutable polynomial over the integers; the list
index is the degree in z. ResiduePolynomial splits the weight generating
polynomial of all binary tuples across the residues of a congruence sum:
slot r collects z^weight over the tuples whose weighted sum is r mod n.

Folding in one coefficient a is

    slot[r] <- slot[r] + z * slot[(r - a) mod n]

which is multiplication by (1 + z x^a) in the group ring Z[z][Z_n]. After
the whole coefficient list has been folded, slot b holds exactly the
integers that the averaged complex character sum would produce, with no
floating point and no rounding anywhere.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import NonExactDivision

__all__ = [
    "IntPolynomial",
    "ResiduePolynomial",
    "poly_add",
    "poly_mul",
    "poly_scale",
    "poly_div_exact",
    "residue_product",
]


class IntPolynomial:
    """Dense univariate polynomial with integer coefficients.

    Trailing zero coefficients are stripped on construction; the zero
    polynomial is the empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coeffs])
        if not self or not other:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        """Evaluate by Horner's rule; works for int, float and complex x."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def div_exact(self, den: "IntPolynomial | int") -> "IntPolynomial":
        """Quotient self / den when the division is exact over the integers.

        Raises NonExactDivision if any quotient coefficient would be
        fractional or a nonzero remainder is left over.
        """
        if isinstance(den, int):
            den = IntPolynomial((den,))
        if not den:
            raise ZeroDivisionError("polynomial division by zero")
        if not self:
            return IntPolynomial()
        dn, dd = self.degree, den.degree
        if dn < dd:
            raise NonExactDivision(f"degree {dn} < divisor degree {dd}")
        rem = list(self.coeffs)
        lead = den.coeffs[-1]
        q = [0] * (dn - dd + 1)
        for i in range(dn - dd, -1, -1):
            c = rem[i + dd]
            if c % lead:
                raise NonExactDivision(f"coefficient {c} not divisible by {lead}")
            f = c // lead
            if f:
                q[i] = f
                for j, dc in enumerate(den.coeffs):
                    rem[i + j] -= f * dc
        if any(rem):
            raise NonExactDivision("nonzero remainder")
        return IntPolynomial(q)

    def pretty(self, var: str = "z") -> str:
        """Ascending human-readable form, e.g. '1 + 2z^2 + z^4'."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for t, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if t == 0:
                term = str(mag)
            else:
                power = var if t == 1 else f"{var}^{t}"
                term = power if mag == 1 else f"{mag}{power}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


def poly_add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p + q


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p * q


def poly_scale(p: IntPolynomial, c: int) -> IntPolynomial:
    return p * c


def poly_div_exact(num: IntPolynomial, den: IntPolynomial | int) -> IntPolynomial:
    return num.div_exact(den)


class ResiduePolynomial:
    """Weight polynomials indexed by congruence residue, one slot per residue."""

    __slots__ = ("modulus", "slots")

    def __init__(self, modulus: int, slots: Sequence[IntPolynomial]) -> None:
        if modulus < 1:
            raise ValueError("modulus must be >= 1")
        if len(slots) != modulus:
            raise ValueError("need exactly one slot per residue")
        self.modulus = modulus
        self.slots: tuple[IntPolynomial, ...] = tuple(slots)

    def slot(self, residue: int) -> IntPolynomial:
        if not 0 <= residue < self.modulus:
            raise ValueError(f"residue {residue} out of range for modulus {self.modulus}")
        return self.slots[residue]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ResiduePolynomial):
            return NotImplemented
        return self.modulus == other.modulus and self.slots == other.slots

    def __repr__(self) -> str:
        return f"ResiduePolynomial({self.modulus}, {list(self.slots)!r})"


def residue_product(coeffs: Iterable[int], modulus: int) -> ResiduePolynomial:
    """Fold a coefficient list into per-residue weight polynomials.

    Starts from slot 0 = 1 (the empty tuple) and folds each coefficient in
    turn. Negative coefficients are reduced mod the modulus first, which
    does not change the code. After k folds the slot polynomials at z=1 sum
    to 2^k, one contribution per binary tuple.
    """
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    a_list = [a % modulus for a in coeffs]
    k = len(a_list)
    rows: list[list[int]] = [[0] * (k + 1) for _ in range(modulus)]
    rows[0][0] = 1
    for a in a_list:
        new: list[list[int]] = []
        for r in range(modulus):
            src = rows[(r - a) % modulus]
            shifted = [0] + src[:-1]
            new.append([c + s for c, s in zip(rows[r], shifted)])
        rows = new
    if __debug__:
        total = sum(sum(row) for row in rows)
        assert total == 1 << k, "slot mass must stay at 2^k"
    return ResiduePolynomial(modulus, tuple(IntPolynomial(row) for row in rows))
