"""
series.py: exact truncated formal power series in x (length), y (weight) and z (occurrences).

One cap W bounds all three degrees; since every letter weighs at least 1, the x- and z-caps never
discard a term the y-cap would keep in any generating function over words.
"""
import json
from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Mapping, Tuple, Union

from frozendict import frozendict
from scipy.special import comb

from src.algebra.polys import XY_RING, YPolynomial, ypoly
from src.utils.exceptions import (
    OutOfCapError,
    PreconditionError,
    TruncationMismatchError,
)

Exponent = Tuple[int, int, int]

_AXES = {"x": 0, "y": 1, "z": 2}


@dataclass(frozen=True)
class TruncationSpec:
    """Truncation horizon: terms with any degree above `max_weight` are discarded."""

    max_weight: int

    def __post_init__(self):
        if int(self.max_weight) < 1:
            raise PreconditionError(f"max_weight must be at least 1, got {self.max_weight}")

    def admits(self, a: int, b: int, c: int) -> bool:
        return a <= self.max_weight and b <= self.max_weight and c <= self.max_weight


class Series:
    """Immutable truncated series; `terms` never holds a zero coefficient or an out-of-cap exponent."""

    __slots__ = ("terms", "trunc", "_hash")

    def __init__(self, terms: Mapping[Exponent, int], trunc: TruncationSpec):
        kept = {}
        for (a, b, c), coeff in terms.items():
            if a < 0 or b < 0 or c < 0:
                raise PreconditionError(f"negative exponent in term {(a, b, c)}")
            if coeff and trunc.admits(a, b, c):
                kept[(a, b, c)] = int(coeff)
        self.terms = frozendict(kept)
        self.trunc = trunc
        self._hash = None

    # constructors

    @classmethod
    def zero(cls, trunc: TruncationSpec) -> "Series":
        return cls({}, trunc)

    @classmethod
    def one(cls, trunc: TruncationSpec) -> "Series":
        return cls({(0, 0, 0): 1}, trunc)

    @classmethod
    def monomial(cls, trunc: TruncationSpec, a: int = 0, b: int = 0, c: int = 0, coeff: int = 1) -> "Series":
        return cls({(a, b, c): coeff}, trunc)

    @classmethod
    def letters(cls, trunc: TruncationSpec) -> "Series":
        """xy/(1-y): one letter of any weight."""
        return cls({(1, b, 0): 1 for b in range(1, trunc.max_weight + 1)}, trunc)

    # comparison

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.trunc == other.trunc and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.trunc, self.terms))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"Series(<{len(self.terms)} terms>, max_weight={self.trunc.max_weight})"

    # ring operations

    def _check(self, other: "Series") -> None:
        if not isinstance(other, Series):
            raise TypeError(f"expected a Series, got {type(other).__name__}")
        if self.trunc != other.trunc:
            raise TruncationMismatchError(
                f"max_weight {self.trunc.max_weight} vs {other.trunc.max_weight}"
            )

    def __add__(self, other: "Series") -> "Series":
        self._check(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            out[key] = out.get(key, 0) + coeff
        return Series(out, self.trunc)

    def __neg__(self) -> "Series":
        return Series({key: -coeff for key, coeff in self.terms.items()}, self.trunc)

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def __mul__(self, other: Union["Series", int]) -> "Series":
        if isinstance(other, int):
            return Series({key: coeff * other for key, coeff in self.terms.items()}, self.trunc)
        self._check(other)
        cap = self.trunc.max_weight
        right = sorted(other.terms.items(), key=lambda item: item[0][1])
        out: Dict[Exponent, int] = defaultdict(int)
        for (a1, b1, c1), k1 in self.terms.items():
            for (a2, b2, c2), k2 in right:
                if b1 + b2 > cap:
                    break
                a, c = a1 + a2, c1 + c2
                if a <= cap and c <= cap:
                    out[(a, b1 + b2, c)] += k1 * k2
        return Series(out, self.trunc)

    __rmul__ = __mul__

    def quasi_inverse(self) -> "Series":
        """1/(1 - f) = sum of f^n, solved degree by degree in y."""
        if any(b == 0 for (_, b, _) in self.terms):
            raise PreconditionError("quasi_inverse needs every term of positive y-degree")
        cap = self.trunc.max_weight

        f = _slices_by_weight(self.terms)
        g: Dict[int, Dict[Tuple[int, int], int]] = {0: {(0, 0): 1}}
        for b in range(1, cap + 1):
            acc: Dict[Tuple[int, int], int] = defaultdict(int)
            for j, f_j in f.items():
                if j > b:
                    continue
                for (a2, c2), k2 in g[b - j].items():
                    for (a1, c1), k1 in f_j.items():
                        a, c = a1 + a2, c1 + c2
                        if a <= cap and c <= cap:
                            acc[(a, c)] += k1 * k2
            g[b] = {key: coeff for key, coeff in acc.items() if coeff}

        return Series({(a, b, c): coeff for b, g_b in g.items() for (a, c), coeff in g_b.items()}, self.trunc)

    # substitutions

    def substitute_x_geometric(self) -> "Series":
        """x -> x/(1-y)."""
        cap = self.trunc.max_weight
        out: Dict[Exponent, int] = defaultdict(int)
        for (a, b, c), coeff in self.terms.items():
            if a == 0:
                out[(a, b, c)] += coeff
                continue
            for t in range(cap - b + 1):
                out[(a, b + t, c)] += coeff * comb(t + a - 1, a - 1, exact=True)
        return Series(out, self.trunc)

    def scale_x_by_y_power(self, e: int) -> "Series":
        """x -> x y^e; terms pushed past the cap are dropped."""
        out = {}
        for (a, b, c), coeff in self.terms.items():
            if b + e * a < 0:
                raise PreconditionError(f"term {(a, b, c)} would get y-degree {b + e * a}")
            out[(a, b + e * a, c)] = coeff
        return Series(out, self.trunc)

    def shift_z_minus_one(self) -> "Series":
        """z -> z - 1."""
        out: Dict[Exponent, int] = defaultdict(int)
        for (a, b, c), coeff in self.terms.items():
            for i in range(c + 1):
                sign = -1 if (c - i) % 2 else 1
                out[(a, b, i)] += sign * coeff * comb(c, i, exact=True)
        return Series(out, self.trunc)

    def eval_z(self, value: int) -> "Series":
        out: Dict[Exponent, int] = defaultdict(int)
        for (a, b, c), coeff in self.terms.items():
            out[(a, b, 0)] += coeff * value**c
        return Series(out, self.trunc)

    # reads

    def _check_cap(self, *exponents: int) -> None:
        for e in exponents:
            if e < 0 or e > self.trunc.max_weight:
                raise OutOfCapError(f"degree {e} lies outside [0, {self.trunc.max_weight}]")

    def coefficient(self, a: int, b: int, c: int) -> int:
        self._check_cap(a, b, c)
        return self.terms.get((a, b, c), 0)

    def slice_xz(self, a: int, c: int) -> YPolynomial:
        """[x^a z^c] as a polynomial in y (complete only up to y^W)."""
        self._check_cap(a, c)
        return ypoly({b: coeff for (a2, b, c2), coeff in self.terms.items() if a2 == a and c2 == c})

    def min_degree(self, axis: str) -> int:
        if not self.terms:
            raise PreconditionError("the zero series has no lowest term")
        index = _AXES[axis]
        return min(key[index] for key in self.terms)

    def filtered(self, keep: Callable[[int, int, int], bool]) -> "Series":
        return Series({key: coeff for key, coeff in self.terms.items() if keep(*key)}, self.trunc)

    def to_bivariate(self):
        """z^0 part as an element of ZZ[x, y]."""
        return XY_RING.from_dict({(a, b): coeff for (a, b, c), coeff in self.terms.items() if c == 0})

    # serialization

    def sorted_terms(self) -> Iterable[Tuple[Exponent, int]]:
        return sorted(self.terms.items(), key=lambda item: (item[0][1], item[0][0], item[0][2]))

    def to_text(self) -> str:
        return "\n".join(f"{coeff}*x^{a}*y^{b}*z^{c}" for (a, b, c), coeff in self.sorted_terms())

    @classmethod
    def parse(cls, text: str, trunc: TruncationSpec) -> "Series":
        terms: Dict[Exponent, int] = defaultdict(int)
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            try:
                coeff, x, y, z = line.split("*")
                exps = tuple(int(part.split("^")[1]) for part in (x, y, z))
                if (x[0], y[0], z[0]) != ("x", "y", "z"):
                    raise ValueError(line)
                terms[exps] += int(coeff)
            except (ValueError, IndexError) as ex:
                raise PreconditionError(f"malformed series term {line!r}") from ex
        return cls(terms, trunc)

    def to_json(self) -> dict:
        return {
            "max_weight": self.trunc.max_weight,
            "terms": [[a, b, c, str(coeff)] for (a, b, c), coeff in self.sorted_terms()],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, obj: Union[str, Mapping]) -> "Series":
        if isinstance(obj, str):
            obj = json.loads(obj)
        trunc = TruncationSpec(int(obj["max_weight"]))
        terms: Dict[Exponent, int] = defaultdict(int)
        for a, b, c, coeff in obj["terms"]:
            terms[(int(a), int(b), int(c))] += int(coeff)
        return cls(terms, trunc)


def _slices_by_weight(terms: Mapping[Exponent, int]) -> Dict[int, Dict[Tuple[int, int], int]]:
    slices: Dict[int, Dict[Tuple[int, int], int]] = defaultdict(dict)
    for (a, b, c), coeff in terms.items():
        slices[b][(a, c)] = coeff
    return dict(slices)


def all_words_gf(trunc: TruncationSpec) -> Series:
    """Generating function of all words: 1/(1 - xy/(1-y))."""
    return Series.letters(trunc).quasi_inverse()
