"""Multivariate polynomials in x_1..x_m over exact coefficient rings.

Two rings are supported: ``gaussian`` (Fraction / GaussianRational
coefficients) and ``clifford`` (exact Multivector coefficients living in
R_{0,m} with the same m as the variables).  Variables are real and commute
with everything; in the Clifford ring only the coefficients fail to commute,
so products keep coefficient order.
"""

from __future__ import annotations

from fractions import Fraction

from .clifford import Multivector
from .scalars import GaussianRational, conj_scalar, format_gaussian, make_gaussian

GAUSSIAN = "gaussian"
CLIFFORD = "clifford"


def _coerce_coeff(coeff, dim: int, ring: str):
    if ring == CLIFFORD:
        if isinstance(coeff, (int, Fraction, GaussianRational)):
            coeff = Multivector.scalar(dim, coeff)
        if not isinstance(coeff, Multivector):
            raise TypeError("clifford ring needs Multivector coefficients")
        if coeff.dim != dim:
            raise ValueError(f"coefficient algebra dim {coeff.dim} != {dim}")
        if not coeff.is_exact():
            raise ValueError("polynomial coefficients must be exact")
        return coeff
    if ring == GAUSSIAN:
        if isinstance(coeff, int):
            return Fraction(coeff)
        if isinstance(coeff, (Fraction, GaussianRational)):
            return coeff
        raise TypeError("gaussian ring needs Fraction/GaussianRational coefficients")
    raise ValueError(f"unknown ring {ring!r}")


def _nonzero(coeff) -> bool:
    if isinstance(coeff, Multivector):
        return not coeff.is_zero()
    return coeff != 0


class MPoly:
    """Immutable sparse polynomial: exponent tuple -> exact coefficient."""

    __slots__ = ("dim", "ring", "terms")

    def __init__(self, dim: int, ring: str = GAUSSIAN, terms: dict | None = None):
        if dim < 1:
            raise ValueError("dimension must be at least 1")
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != dim or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for dim {dim}")
            coeff = _coerce_coeff(coeff, dim, ring)
            if _nonzero(coeff):
                clean[exps] = coeff
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, dim: int, ring: str = GAUSSIAN) -> "MPoly":
        return cls(dim, ring, {})

    @classmethod
    def constant(cls, dim: int, value, ring: str = GAUSSIAN) -> "MPoly":
        return cls(dim, ring, {(0,) * dim: value})

    @classmethod
    def variable(cls, dim: int, j: int, ring: str = GAUSSIAN) -> "MPoly":
        """The coordinate polynomial x_j, 1-based."""
        if not 1 <= j <= dim:
            raise ValueError(f"variable index {j} out of range 1..{dim}")
        exps = tuple(1 if i == j - 1 else 0 for i in range(dim))
        return cls(dim, ring, {exps: 1})

    @classmethod
    def monomial(cls, dim: int, exps, coeff, ring: str = GAUSSIAN) -> "MPoly":
        return cls(dim, ring, {tuple(exps): coeff})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self):
        """Largest total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(exps) for exps in self.terms)

    def is_homogeneous(self, degree: int) -> bool:
        """True when every term has the given total degree (zero passes for all)."""
        return all(sum(exps) == degree for exps in self.terms)

    def coeff(self, exps):
        exps = tuple(exps)
        if exps in self.terms:
            return self.terms[exps]
        if self.ring == CLIFFORD:
            return Multivector.zero(self.dim)
        return Fraction(0)

    def _require_same(self, other: "MPoly") -> None:
        if self.dim != other.dim or self.ring != other.ring:
            raise ValueError("dimension/ring mismatch")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational, Multivector)):
            other = MPoly.constant(self.dim, other, self.ring)
        if not isinstance(other, MPoly):
            return NotImplemented
        self._require_same(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            if exps in terms:
                terms[exps] = terms[exps] + coeff
            else:
                terms[exps] = coeff
        return MPoly(self.dim, self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.dim, self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational, Multivector)):
            other = MPoly.constant(self.dim, other, self.ring)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        if isinstance(other, Multivector):
            # coefficient multiplied from the right
            return MPoly(self.dim, self.ring,
                         {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        self._require_same(other)
        acc: dict = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exps = tuple(x + y for x, y in zip(ea, eb))
                c = ca * cb
                if exps in acc:
                    acc[exps] = acc[exps] + c
                else:
                    acc[exps] = c
        return MPoly(self.dim, self.ring, acc)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        if isinstance(other, Multivector):
            # coefficient multiplied from the left
            return MPoly(self.dim, self.ring,
                         {e: other * c for e, c in self.terms.items()})
        return NotImplemented

    def scale(self, factor):
        return MPoly(self.dim, self.ring, {e: factor * c for e, c in self.terms.items()})

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = MPoly.constant(self.dim, 1, self.ring)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = MPoly.constant(self.dim, other, self.ring)
        if not isinstance(other, MPoly):
            return NotImplemented
        return (self.dim, self.ring, self.terms) == (other.dim, other.ring, other.terms)

    def __hash__(self):
        return hash((self.dim, self.ring, frozenset(self.terms.items())))

    # -- calculus ----------------------------------------------------------

    def deriv(self, j: int) -> "MPoly":
        """Partial derivative with respect to x_j, 1-based."""
        if not 1 <= j <= self.dim:
            raise ValueError(f"variable index {j} out of range 1..{self.dim}")
        i = j - 1
        terms = {}
        for exps, coeff in self.terms.items():
            if exps[i] == 0:
                continue
            new = list(exps)
            new[i] -= 1
            terms[tuple(new)] = coeff * exps[i]
        return MPoly(self.dim, self.ring, terms)

    def laplacian(self) -> "MPoly":
        """Sum of second partials over all variables."""
        out = MPoly.zero(self.dim, self.ring)
        for j in range(1, self.dim + 1):
            out = out + self.deriv(j).deriv(j)
        return out

    def dirac(self) -> "MPoly":
        """Apply e_1 d/dx_1 + ... + e_m d/dx_m, generators acting from the left."""
        if self.ring != CLIFFORD:
            raise ValueError("Dirac operator needs the clifford ring")
        out = MPoly.zero(self.dim, self.ring)
        for j in range(1, self.dim + 1):
            ej = Multivector.basis_vector(self.dim, j)
            out = out + ej * self.deriv(j)
        return out

    # -- evaluation --------------------------------------------------------

    def eval(self, point):
        """Evaluate at a point; exact for int/Fraction coordinates, float otherwise."""
        point = list(point)
        if len(point) != self.dim:
            raise ValueError(f"point has {len(point)} coordinates, need {self.dim}")
        exact = all(isinstance(c, (int, Fraction)) for c in point)
        if exact:
            coords = [Fraction(c) for c in point]
        else:
            coords = [float(c) for c in point]
        pows = [{0: coords[i] ** 0} for i in range(self.dim)]

        def power(i, e):
            cache = pows[i]
            if e not in cache:
                cache[e] = coords[i] ** e
            return cache[e]

        if self.ring == CLIFFORD:
            acc = Multivector.zero(self.dim)
            for exps, coeff in self.terms.items():
                mono = Fraction(1) if exact else 1.0
                for i, e in enumerate(exps):
                    if e:
                        mono *= power(i, e)
                mv = coeff if exact else coeff.to_float()
                acc = acc + mv.scale(mono)
            return acc
        acc = Fraction(0) if exact else 0.0
        for exps, coeff in self.terms.items():
            mono = Fraction(1) if exact else 1.0
            for i, e in enumerate(exps):
                if e:
                    mono *= power(i, e)
            if not exact:
                coeff = complex(coeff) if isinstance(coeff, GaussianRational) else float(coeff)
            acc = acc + coeff * mono
        return acc

    # -- ring/shape conversions --------------------------------------------

    def embed(self, dim: int) -> "MPoly":
        """View as a polynomial in more variables (new exponents zero)."""
        if dim < self.dim:
            raise ValueError("cannot embed into fewer variables")
        if dim == self.dim:
            return self
        pad = (0,) * (dim - self.dim)
        terms = {}
        for exps, coeff in self.terms.items():
            if isinstance(coeff, Multivector):
                coeff = coeff.embed(dim)
            terms[exps + pad] = coeff
        return MPoly(dim, self.ring, terms)

    def to_clifford(self) -> "MPoly":
        """Embed a real gaussian polynomial as scalar blades in the clifford ring."""
        if self.ring == CLIFFORD:
            return self
        terms = {}
        for exps, coeff in self.terms.items():
            if isinstance(coeff, GaussianRational):
                raise ValueError("cannot move genuinely complex coefficients to R_{0,m}")
            terms[exps] = Multivector.scalar(self.dim, coeff)
        return MPoly(self.dim, CLIFFORD, terms)

    def conjugate(self) -> "MPoly":
        """Coefficient conjugation: i -> -i (gaussian) or Clifford conjugation (clifford)."""
        if self.ring == CLIFFORD:
            return MPoly(self.dim, CLIFFORD,
                         {e: c.conjugate() for e, c in self.terms.items()})
        return MPoly(self.dim, GAUSSIAN,
                     {e: conj_scalar(c) for e, c in self.terms.items()})

    def real_part(self) -> "MPoly":
        if self.ring != GAUSSIAN:
            raise ValueError("real_part needs the gaussian ring")
        terms = {}
        for exps, coeff in self.terms.items():
            re = coeff.re if isinstance(coeff, GaussianRational) else Fraction(coeff)
            terms[exps] = re
        return MPoly(self.dim, GAUSSIAN, terms)

    def imag_part(self) -> "MPoly":
        if self.ring != GAUSSIAN:
            raise ValueError("imag_part needs the gaussian ring")
        terms = {}
        for exps, coeff in self.terms.items():
            if isinstance(coeff, GaussianRational):
                terms[exps] = coeff.im
        return MPoly(self.dim, GAUSSIAN, terms)

    # -- rendering / serialization ------------------------------------------

    def __repr__(self):
        return f"MPoly({self.dim}, {self.ring!r}, <{len(self.terms)} terms>)"

    def __str__(self):
        return self.to_text()

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=lambda e: (sum(e), e)):
            coeff = self.terms[exps]
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                for i, e in enumerate(exps) if e
            )
            if isinstance(coeff, Multivector):
                ctxt = coeff.to_text()
                if len(coeff.terms) > 1:
                    ctxt = f"({ctxt})"
            else:
                ctxt = format_gaussian(coeff)
                if ("+" in ctxt[1:] or "-" in ctxt[1:]) and mono:
                    ctxt = f"({ctxt})"
            if not mono:
                parts.append(ctxt)
            elif ctxt == "1":
                parts.append(mono)
            elif ctxt == "-1":
                parts.append(f"-{mono}")
            else:
                parts.append(f"{ctxt}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        entries = []
        for exps in sorted(self.terms, key=lambda e: (sum(e), e)):
            coeff = self.terms[exps]
            if isinstance(coeff, Multivector):
                for blade_entry in coeff.to_json()["terms"]:
                    entry = {"exp": list(exps)}
                    entry.update(blade_entry)
                    entries.append(entry)
            else:
                if isinstance(coeff, GaussianRational):
                    re, im = coeff.re, coeff.im
                else:
                    re, im = Fraction(coeff), Fraction(0)
                entry = {"exp": list(exps), "num": re.numerator, "den": re.denominator}
                if im:
                    entry["inum"] = im.numerator
                    entry["iden"] = im.denominator
                entries.append(entry)
        return {"m": self.dim, "ring": self.ring, "terms": entries}

    @classmethod
    def from_json(cls, data: dict) -> "MPoly":
        dim = data["m"]
        ring = data["ring"]
        acc: dict = {}
        for entry in data["terms"]:
            exps = tuple(entry["exp"])
            coeff = make_gaussian(Fraction(entry["num"], entry["den"]),
                                  Fraction(entry.get("inum", 0), entry.get("iden", 1)))
            if ring == CLIFFORD:
                coeff = Multivector.blade(dim, entry.get("blade", 0), coeff)
            if exps in acc:
                acc[exps] = acc[exps] + coeff
            else:
                acc[exps] = coeff
        return cls(dim, ring, acc)


def radius_squared(dim: int, upto: int | None = None, ring: str = GAUSSIAN) -> MPoly:
    """|x|_r^2 = x_1^2 + ... + x_r^2 as a polynomial in dim variables (r defaults to dim)."""
    r = dim if upto is None else upto
    if not 1 <= r <= dim:
        raise ValueError("upto out of range")
    terms = {}
    for j in range(r):
        exps = tuple(2 if i == j else 0 for i in range(dim))
        terms[exps] = 1
    return MPoly(dim, ring, terms)
