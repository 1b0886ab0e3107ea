"""Clifford algebra R_{0,m}: generators e_1..e_m with e_j^2 = -1.

Blades are bitmasks over the generators (bit j-1 set means e_j is present,
generators kept in ascending order), so a multivector is a sparse map from
blade mask to coefficient.  Coefficients are either exact (Fraction or
GaussianRational) or floating point (float/complex); the two modes never mix
inside one value.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import GaussianRational, conj_scalar, format_gaussian, make_gaussian

SCALAR_BLADE = 0


def _check_mask(mask: int, dim: int) -> None:
    if not 0 <= mask < (1 << dim):
        raise ValueError(f"blade mask {mask:#b} exceeds dimension {dim}")


def blade_product(a: int, b: int, dim: int) -> tuple[int, int]:
    """Product of two canonical blades: returns (sign, mask) with sign in {+1,-1}.

    The sign counts the transpositions needed to merge the ascending
    generator lists, plus one factor -1 for every repeated generator
    (e_j e_j = -1).
    """
    _check_mask(a, dim)
    _check_mask(b, dim)
    swaps = 0
    t = a >> 1
    while t:
        swaps += (t & b).bit_count()
        t >>= 1
    sign = -1 if (swaps + (a & b).bit_count()) & 1 else 1
    return sign, a ^ b


def blade_name(mask: int) -> str:
    """Human name of a blade: '1' for the scalar, else e.g. 'e13'."""
    if mask == 0:
        return "1"
    return "e" + "".join(str(j + 1) for j in range(mask.bit_length()) if mask >> j & 1)


def _is_exact(c) -> bool:
    return isinstance(c, (int, Fraction, GaussianRational))


def _coerce(c):
    if isinstance(c, int):
        return Fraction(c)
    return c


class Multivector:
    """Immutable element of R_{0,m} with sparse blade coefficients."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: dict | None = None):
        if dim < 0:
            raise ValueError("dimension must be non-negative")
        clean = {}
        exact = None
        for mask, coeff in (terms or {}).items():
            _check_mask(mask, dim)
            this_exact = _is_exact(coeff)
            if not this_exact and not isinstance(coeff, (float, complex)):
                raise TypeError(f"unsupported coefficient type {type(coeff).__name__}")
            if exact is None:
                exact = this_exact
            elif exact != this_exact:
                raise ValueError("exact and float coefficients mixed in one multivector")
            coeff = _coerce(coeff)
            if coeff == 0:
                continue
            clean[mask] = coeff
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, dim: int) -> "Multivector":
        return cls(dim, {})

    @classmethod
    def scalar(cls, dim: int, value) -> "Multivector":
        return cls(dim, {SCALAR_BLADE: value})

    @classmethod
    def blade(cls, dim: int, mask: int, coeff=1) -> "Multivector":
        return cls(dim, {mask: coeff})

    @classmethod
    def basis_vector(cls, dim: int, j: int) -> "Multivector":
        """e_j, 1-based."""
        if not 1 <= j <= dim:
            raise ValueError(f"generator index {j} out of range 1..{dim}")
        return cls(dim, {1 << (j - 1): 1})

    @classmethod
    def vector(cls, dim: int, coords) -> "Multivector":
        """x_1 e_1 + ... + x_dim e_dim."""
        coords = list(coords)
        if len(coords) != dim:
            raise ValueError("coordinate count must equal dim")
        return cls(dim, {1 << j: c for j, c in enumerate(coords)})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_exact(self) -> bool:
        return all(_is_exact(c) for c in self.terms.values())

    def coeff(self, mask: int):
        c = self.terms.get(mask)
        if c is not None:
            return c
        return Fraction(0) if self.is_exact() else 0.0

    def scalar_part(self):
        return self.coeff(SCALAR_BLADE)

    def grades(self) -> set:
        return {mask.bit_count() for mask in self.terms}

    # -- arithmetic --------------------------------------------------------

    def _require_same(self, other: "Multivector") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch {self.dim} != {other.dim}")

    def __add__(self, other):
        if not isinstance(other, Multivector):
            if isinstance(other, (int, Fraction, GaussianRational, float, complex)):
                other = Multivector.scalar(self.dim, other)
            else:
                return NotImplemented
        self._require_same(other)
        terms = dict(self.terms)
        for mask, coeff in other.terms.items():
            terms[mask] = terms.get(mask, 0) + coeff
        return Multivector(self.dim, terms)

    __radd__ = __add__

    def __neg__(self):
        return Multivector(self.dim, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational, float, complex)):
            other = Multivector.scalar(self.dim, other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational, float, complex)):
            return self.scale(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        self._require_same(other)
        acc: dict = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                sign, mask = blade_product(ma, mb, self.dim)
                c = ca * cb
                if sign < 0:
                    c = -c
                acc[mask] = acc.get(mask, 0) + c
        return Multivector(self.dim, acc)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational, float, complex)):
            return self.scale(other)
        return NotImplemented

    def scale(self, factor):
        return Multivector(self.dim, {m: factor * c for m, c in self.terms.items()})

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = Multivector.scalar(self.dim, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "Multivector":
        """Clifford conjugation: grade r scaled by (-1)^(r(r+1)/2); conj(ab) = conj(b)conj(a)."""
        terms = {}
        for mask, coeff in self.terms.items():
            r = mask.bit_count()
            terms[mask] = -coeff if (r * (r + 1) // 2) & 1 else coeff
        return Multivector(self.dim, terms)

    def conjugate_scalars(self) -> "Multivector":
        """Complex conjugation of the coefficients only (i -> -i)."""
        return Multivector(self.dim, {m: conj_scalar(c) for m, c in self.terms.items()})

    # -- conversions -------------------------------------------------------

    def embed(self, dim: int) -> "Multivector":
        """Reinterpret in a larger algebra R_{0,dim}; blades are unchanged."""
        if dim < self.dim:
            raise ValueError("cannot embed into a smaller algebra")
        return Multivector(dim, dict(self.terms))

    def to_float(self) -> "Multivector":
        terms = {}
        for mask, coeff in self.terms.items():
            if isinstance(coeff, GaussianRational):
                terms[mask] = complex(coeff)
            else:
                terms[mask] = float(coeff)
        return Multivector(self.dim, terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = Multivector.scalar(self.dim, other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    def __hash__(self):
        return hash((self.dim, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Multivector({self.dim}, {{{', '.join(f'{m}: {c!r}' for m, c in sorted(self.terms.items()))}}})"

    def __str__(self):
        return self.to_text()

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mask in sorted(self.terms):
            coeff = self.terms[mask]
            ctxt = format_gaussian(coeff) if _is_exact(coeff) else repr(coeff)
            if mask == 0:
                parts.append(ctxt)
            elif ctxt == "1":
                parts.append(blade_name(mask))
            elif ctxt == "-1":
                parts.append(f"-{blade_name(mask)}")
            else:
                if "+" in ctxt[1:] or "-" in ctxt[1:]:
                    ctxt = f"({ctxt})"
                parts.append(f"{ctxt}*{blade_name(mask)}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        if not self.is_exact():
            raise TypeError("only exact multivectors serialize to JSON")
        entries = []
        for mask in sorted(self.terms):
            coeff = self.terms[mask]
            if isinstance(coeff, GaussianRational):
                re, im = coeff.re, coeff.im
            else:
                re, im = Fraction(coeff), Fraction(0)
            entry = {"blade": mask, "num": re.numerator, "den": re.denominator}
            if im:
                entry["inum"] = im.numerator
                entry["iden"] = im.denominator
            entries.append(entry)
        return {"dim": self.dim, "terms": entries}

    @classmethod
    def from_json(cls, data: dict) -> "Multivector":
        terms = {}
        for entry in data["terms"]:
            re = Fraction(entry["num"], entry["den"])
            im = Fraction(entry.get("inum", 0), entry.get("iden", 1))
            coeff = make_gaussian(re, im)
            mask = entry["blade"]
            terms[mask] = terms.get(mask, 0) + coeff
        return cls(data["dim"], terms)
