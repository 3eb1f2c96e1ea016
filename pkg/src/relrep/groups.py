"""Dense arithmetic over finite abelian groups given as products of cyclic factors.

Everything here works on exact boolean membership masks indexed by the
mixed-radix encoding of group elements, which keeps sumsets, spans and coset
computations both fast and bit-exact at the orders this library targets
(default cap 2^20).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

DEFAULT_ORDER_CAP = 1 << 20


def _trial_factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; fine for n up to ~10^12."""
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


class GroupSpec:
    """Z/n1 x ... x Z/nr with elements encoded as mixed-radix indices.

    Coordinate 0 is the most significant digit, so for (Z/2Z)^k the index of
    a bitstring is ``int(bits, 2)`` with the leftmost character being
    coordinate 0.  Instances are immutable and safe to share.
    """

    def __init__(self, moduli: Sequence[int], order_cap: int = DEFAULT_ORDER_CAP):
        moduli = tuple(int(n) for n in moduli)
        if not moduli:
            raise ValueError("need at least one cyclic factor")
        if any(n < 2 for n in moduli):
            raise ValueError(f"moduli must all be >= 2, got {moduli}")
        order = math.prod(moduli)
        if order > order_cap:
            raise ValueError(f"group order {order} exceeds the dense-mask cap {order_cap}")
        self.moduli = moduli
        self.order = order
        weights = [1] * len(moduli)
        for i in range(len(moduli) - 2, -1, -1):
            weights[i] = weights[i + 1] * moduli[i + 1]
        self._weights = tuple(weights)
        self._is_two_power = all(n == 2 for n in moduli)
        self._idx: np.ndarray | None = None
        self._neg_perm: np.ndarray | None = None

    @classmethod
    def cyclic(cls, n: int) -> "GroupSpec":
        return cls((n,))

    @classmethod
    def power(cls, base: int, exponent: int) -> "GroupSpec":
        """(Z/base)^exponent; power(2, k) is the GF(2)^k vector group."""
        if exponent < 1:
            raise ValueError("exponent must be >= 1")
        return cls((base,) * exponent)

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def is_elementary_two(self) -> bool:
        return self._is_two_power

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupSpec) and self.moduli == other.moduli

    def __hash__(self) -> int:
        return hash(self.moduli)

    def __repr__(self) -> str:
        return f"GroupSpec({self.moduli!r})"

    def describe(self) -> str:
        if self.rank == 1:
            return f"Z/{self.moduli[0]}"
        if len(set(self.moduli)) == 1:
            return f"(Z/{self.moduli[0]})^{self.rank}"
        return " x ".join(f"Z/{n}" for n in self.moduli)

    # -- scalar element arithmetic ------------------------------------

    def check_element(self, x: int) -> int:
        x = int(x)
        if not 0 <= x < self.order:
            raise ValueError(f"element index {x} out of range for group of order {self.order}")
        return x

    def encode(self, coords: Sequence[int]) -> int:
        if len(coords) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(coords)}")
        return sum((int(c) % n) * w for c, n, w in zip(coords, self.moduli, self._weights))

    def decode(self, x: int) -> tuple[int, ...]:
        x = self.check_element(x)
        return tuple((x // w) % n for n, w in zip(self.moduli, self._weights))

    def add(self, x: int, y: int) -> int:
        if self._is_two_power:
            return self.check_element(x) ^ self.check_element(y)
        xs, ys = self.decode(x), self.decode(y)
        return self.encode([a + b for a, b in zip(xs, ys)])

    def neg(self, x: int) -> int:
        if self._is_two_power:
            return self.check_element(x)
        return self.encode([-c for c in self.decode(x)])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def elements(self) -> range:
        return range(self.order)

    # -- vectorized internals ------------------------------------------

    def _indices(self) -> np.ndarray:
        if self._idx is None:
            self._idx = np.arange(self.order, dtype=np.intp)
            self._idx.setflags(write=False)
        return self._idx

    def _negation_perm(self) -> np.ndarray:
        if self._neg_perm is None:
            if self._is_two_power:
                self._neg_perm = self._indices()
            else:
                perm = np.zeros(self.order, dtype=np.intp)
                idx = np.arange(self.order, dtype=np.int64)
                for n, w in zip(self.moduli, self._weights):
                    perm += (((-(idx // w)) % n) * w).astype(np.intp)
                self._neg_perm = perm
                self._neg_perm.setflags(write=False)
        return self._neg_perm

    def _translate_mask(self, mask: np.ndarray, c: int) -> np.ndarray:
        """Mask of S -> mask of S + c."""
        c = self.check_element(c)
        if c == 0:
            return mask.copy()
        if self._is_two_power:
            return mask[self._indices() ^ c]
        nd = mask.reshape(self.moduli)
        return np.roll(nd, self.decode(c), axis=tuple(range(self.rank))).ravel()

    def difference_table(self, cell_cap: int = 1 << 26) -> np.ndarray:
        """order x order matrix D with D[x, y] = index of y - x."""
        if self.order * self.order > cell_cap:
            raise ValueError(
                f"group of order {self.order} is too large to materialize a difference table")
        if self._is_two_power:
            idx = np.arange(self.order)
            return idx[None, :] ^ idx[:, None]
        out = np.zeros((self.order, self.order), dtype=np.int64)
        idx = np.arange(self.order, dtype=np.int64)
        for n, w in zip(self.moduli, self._weights):
            col = (idx // w) % n
            out += ((col[None, :] - col[:, None]) % n) * w
        return out

    # -- element text forms ---------------------------------------------

    def format_element(self, x: int) -> str:
        x = self.check_element(x)
        if self._is_two_power:
            return format(x, f"0{self.rank}b")
        if self.rank == 1:
            return str(x)
        return ",".join(str(c) for c in self.decode(x))

    def parse_element(self, text: str) -> int:
        text = text.strip()
        if self._is_two_power:
            if len(text) != self.rank or set(text) - {"0", "1"}:
                raise ValueError(f"expected a {self.rank}-character bitstring, got {text!r}")
            return int(text, 2)
        if self.rank == 1:
            try:
                value = int(text)
            except ValueError:
                raise ValueError(f"expected an integer element, got {text!r}") from None
            return self.check_element(value)
        parts = text.split(",")
        if len(parts) != self.rank:
            raise ValueError(f"expected {self.rank} comma-separated coordinates, got {text!r}")
        return self.encode([int(p) for p in parts])


class ElementSet:
    """An immutable dense subset of a finite abelian group."""

    __slots__ = ("group", "mask", "_size")

    def __init__(self, group: GroupSpec, mask: np.ndarray):
        mask = np.asarray(mask, dtype=bool)
        if mask.shape != (group.order,):
            raise ValueError(f"mask shape {mask.shape} does not match group order {group.order}")
        self.group = group
        self.mask = mask.copy()
        self.mask.setflags(write=False)
        self._size = int(self.mask.sum())

    @classmethod
    def _wrap(cls, group: GroupSpec, mask: np.ndarray) -> "ElementSet":
        """Take ownership of a freshly-built mask without copying."""
        obj = object.__new__(cls)
        mask.setflags(write=False)
        obj.group = group
        obj.mask = mask
        obj._size = int(mask.sum())
        return obj

    @classmethod
    def empty(cls, group: GroupSpec) -> "ElementSet":
        return cls._wrap(group, np.zeros(group.order, dtype=bool))

    @classmethod
    def full(cls, group: GroupSpec) -> "ElementSet":
        return cls._wrap(group, np.ones(group.order, dtype=bool))

    @classmethod
    def singleton(cls, group: GroupSpec, x: int) -> "ElementSet":
        return cls.from_indices(group, (x,))

    @classmethod
    def from_indices(cls, group: GroupSpec, indices: Iterable[int]) -> "ElementSet":
        mask = np.zeros(group.order, dtype=bool)
        for x in indices:
            mask[group.check_element(x)] = True
        return cls._wrap(group, mask)

    def __len__(self) -> int:
        return self._size

    def __bool__(self) -> bool:
        return self._size > 0

    def __contains__(self, x: int) -> bool:
        return bool(self.mask[self.group.check_element(x)])

    def __iter__(self) -> Iterator[int]:
        return (int(i) for i in np.flatnonzero(self.mask))

    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ElementSet) and self.group == other.group
                and np.array_equal(self.mask, other.mask))

    __hash__ = None  # mask-based identity; not for dict keys

    def __repr__(self) -> str:
        return f"<ElementSet of {self.group.describe()}, size {self._size}>"

    def _binary(self, other: "ElementSet", op) -> "ElementSet":
        if not isinstance(other, ElementSet):
            return NotImplemented
        if self.group != other.group:
            raise ValueError("element sets live in different groups")
        return ElementSet._wrap(self.group, op(self.mask, other.mask))

    def __or__(self, other):
        return self._binary(other, np.logical_or)

    def __and__(self, other):
        return self._binary(other, np.logical_and)

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a & ~b)

    def __xor__(self, other):
        return self._binary(other, np.logical_xor)

    def __le__(self, other) -> bool:
        if self.group != other.group:
            raise ValueError("element sets live in different groups")
        return bool(np.all(~self.mask | other.mask))

    def issubset(self, other: "ElementSet") -> bool:
        return self <= other

    def complement(self) -> "ElementSet":
        return ElementSet._wrap(self.group, ~self.mask)

    def negated(self) -> "ElementSet":
        """The pointwise negation {-s : s in S}."""
        return ElementSet._wrap(self.group, self.mask[self.group._negation_perm()])

    @property
    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.mask, self.mask[self.group._negation_perm()]))

    def translate(self, c: int) -> "ElementSet":
        """The shifted set S + c."""
        return ElementSet._wrap(self.group, self.group._translate_mask(self.mask, c))


def _same_group(left: ElementSet, right: ElementSet) -> GroupSpec:
    if left.group != right.group:
        raise ValueError("element sets live in different groups")
    return left.group


def _walsh_hadamard(vec: np.ndarray) -> np.ndarray:
    out = vec.astype(np.int64, copy=True)
    n = out.size
    h = 1
    while h < n:
        out = out.reshape(-1, 2, h)
        top = out[:, 0, :] + out[:, 1, :]
        bottom = out[:, 0, :] - out[:, 1, :]
        out = np.stack((top, bottom), axis=1).reshape(n)
        h *= 2
    return out


def _xor_convolution_counts(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact counts c[z] = #{(x, y): x ^ y = z, a[x], b[y]} via integer WHT.

    int64 is safe up to order 2^20: transforms are bounded by order, the
    pointwise products by order^2 and the inverse transform by order^3 < 2^63.
    """
    fa = _walsh_hadamard(a)
    fb = _walsh_hadamard(b)
    conv = _walsh_hadamard(fa * fb)
    if (conv % conv.size).any():
        raise AssertionError("xor convolution produced non-integer counts")
    return conv // conv.size


def sumset(left: ElementSet, right: ElementSet) -> ElementSet:
    """The exact sumset {x + y : x in left, y in right}.

    (Z/2Z)^k groups go through an integer Walsh-Hadamard convolution; other
    groups accumulate translated masks of the larger operand.  Both paths are
    bit-exact and agree with :func:`sumset_reference`.
    """
    group = _same_group(left, right)
    if len(left) == 0 or len(right) == 0:
        return ElementSet.empty(group)
    if group.is_elementary_two:
        counts = _xor_convolution_counts(left.mask.astype(np.int64), right.mask.astype(np.int64))
        return ElementSet._wrap(group, counts > 0)
    small, big = (left, right) if len(left) <= len(right) else (right, left)
    out = np.zeros(group.order, dtype=bool)
    for s in small.indices():
        out |= group._translate_mask(big.mask, int(s))
    return ElementSet._wrap(group, out)


def sumset_reference(left: ElementSet, right: ElementSet) -> ElementSet:
    """Definitional double loop; kept as the oracle the fast path is tested against."""
    group = _same_group(left, right)
    out = set()
    for x in left:
        for y in right:
            out.add(group.add(x, y))
    return ElementSet.from_indices(group, out)


@dataclass(frozen=True)
class Subgroup:
    generators: tuple[int, ...]
    elements: ElementSet

    @property
    def order(self) -> int:
        return len(self.elements)


def span(group: GroupSpec, generators: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing the generators, computed by closure."""
    gens = tuple(group.check_element(v) for v in generators)
    mask = np.zeros(group.order, dtype=bool)
    mask[0] = True
    for gen in gens:
        if mask[gen]:
            continue
        # current mask is a subgroup; extend by all multiples of gen
        acc = mask.copy()
        step = gen
        while step != 0:
            acc |= group._translate_mask(mask, step)
            step = group.add(step, gen)
        mask = acc
    return Subgroup(gens, ElementSet._wrap(group, mask))


def primitive_root(p: int) -> int:
    """Smallest primitive root modulo a prime p (1 for p = 2)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return 1
    prime_factors = list(_trial_factorize(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in prime_factors):
            return g
    raise AssertionError(f"no primitive root below {p}")  # unreachable for prime p


def is_primitive_root(g: int, p: int) -> bool:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return g % 2 == 1
    if g % p == 0:
        return False
    return all(pow(g, (p - 1) // q, p) != 1 for q in _trial_factorize(p - 1))


def cyclotomic_cosets(p: int, m: int, g: int | None = None) -> list[ElementSet]:
    """The m classes X_i = {g^(a*m + i)} of the multiplicative group mod p.

    X_0 is the index-m subgroup of (Z/pZ)^x and the others are its cosets;
    together they partition {1, ..., p-1}.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1 or (p - 1) % m != 0:
        raise ValueError(f"{m} does not divide p - 1 = {p - 1}")
    if g is None:
        g = primitive_root(p)
    elif not is_primitive_root(g, p):
        raise ValueError(f"{g} is not a primitive root mod {p}")
    group = GroupSpec.cyclic(p)
    masks = np.zeros((m, p), dtype=bool)
    power = 1
    for t in range(p - 1):
        masks[t % m, power] = True
        power = power * g % p
    return [ElementSet._wrap(group, masks[i].copy()) for i in range(m)]


@lru_cache(maxsize=8)
def hamming_weights(k: int) -> np.ndarray:
    """Popcounts of the indices 0 .. 2^k - 1."""
    idx = np.arange(1 << k, dtype=np.uint32)
    counts = np.zeros(idx.size, dtype=np.uint8)
    for shift in range(k):
        counts += ((idx >> np.uint32(shift)) & 1).astype(np.uint8)
    counts.setflags(write=False)
    return counts


def weight_class(group: GroupSpec, lo: int, hi: int) -> ElementSet:
    """All elements of (Z/2Z)^k with Hamming weight in [lo, hi]."""
    if not group.is_elementary_two:
        raise ValueError("weight classes are defined over (Z/2Z)^k groups only")
    if not 0 <= lo <= hi <= group.rank:
        raise ValueError(f"weight bounds [{lo}, {hi}] out of range for k = {group.rank}")
    w = hamming_weights(group.rank)
    return ElementSet._wrap(group, (w >= lo) & (w <= hi))
