#  Copyright (c) Ergodic LLC 2023
#  research@ergodic.io
"""
Two-colored quantum numbers ``[k]_d`` and ``[k]_{d'}``: free, in [C], and as matrices on [M].

All three share one recursion, ``[k+1]_d = d [k]_{d'} - [k-1]_d`` and ``[k+1]_{d'} = d' [k]_d - [k-1]_{d'}`` with
``[0] = 0``, ``[1] = 1`` and ``[-k] = -[k]``.
"""
from typing import Callable, Dict, Iterator, Tuple, TypeVar

import numpy as np

from fqk.fusion.module import Label, ModuleCategory, label_matrix
from fqk.fusion.ring import FusionRing, RingElement, dual, multiply

T = TypeVar("T")

COLORS = ("d", "d'")

# (length, bits): bit i set means the i-th letter is d'
Word = Tuple[int, int]


class NCPolynomial:
    """
    An element of Z<d, d'>. Words are packed as ``(length, bits)``; zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Word, int] = None):
        self.terms = {w: int(c) for w, c in (terms or {}).items() if c != 0}

    @classmethod
    def constant(cls, c: int) -> "NCPolynomial":
        return cls({(0, 0): c})

    @classmethod
    def variable(cls, color: str) -> "NCPolynomial":
        return cls({(1, COLORS.index(color)): 1})

    def __add__(self, other: "NCPolynomial") -> "NCPolynomial":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return NCPolynomial(out)

    def __neg__(self) -> "NCPolynomial":
        return NCPolynomial({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "NCPolynomial") -> "NCPolynomial":
        return self + (-other)

    def __mul__(self, other: "NCPolynomial") -> "NCPolynomial":
        out: Dict[Word, int] = {}
        for (n1, b1), c1 in self.terms.items():
            for (n2, b2), c2 in other.terms.items():
                w = (n1 + n2, b1 | (b2 << n1))
                out[w] = out.get(w, 0) + c1 * c2
        return NCPolynomial(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, NCPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((n for n, _ in self.terms), default=-1)

    @staticmethod
    def letters(word: Word) -> Iterator[str]:
        n, bits = word
        for i in range(n):
            yield COLORS[(bits >> i) & 1]

    def evaluate(self, d: T, dprime: T, one: T, zero: T, mul: Callable[[T, T], T]) -> T:
        """Substitutes ``d`` and ``d'``; ``mul(a, b)`` must compute ``a b`` in that order"""
        total = zero
        for word, c in self.terms.items():
            value = one
            for letter in self.letters(word):
                value = mul(value, d if letter == "d" else dprime)
            total = total + c * value
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        # longest words first, then lexicographic in the letters
        ordered = sorted(self.terms.items(), key=lambda wc: (-wc[0][0], "".join(self.letters(wc[0]))))
        parts = []
        for word, c in ordered:
            mono = "".join(self.letters(word))
            if not mono:
                body = str(abs(c))
            else:
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __repr__ = __str__


def _two_colored(k: int, d: T, dprime: T, one: T, zero: T, mul: Callable[[T, T], T]) -> Tuple[T, T]:
    """``([k]_d, [k]_{d'})`` for ``k >= 0``"""
    a_prev, b_prev = zero, zero
    a, b = one, one
    if k == 0:
        return zero, zero
    for _ in range(k - 1):
        a, a_prev, b, b_prev = mul(d, b) - a_prev, a, mul(dprime, a) - b_prev, b
    return a, b


def _pick(k: int, color: str, pair_fn: Callable[[int], Tuple[T, T]]) -> T:
    if color not in COLORS:
        raise ValueError(f"color must be one of {COLORS}, got {color!r}")
    a, b = pair_fn(abs(k))
    value = a if color == "d" else b
    return -value if k < 0 else value


def qnum_free(k: int, color: str = "d") -> NCPolynomial:
    """
    ``[k]_d`` or ``[k]_{d'}`` in Z<d, d'>.

    >>> str(qnum_free(4))
    "dd'd - 2d"
    """
    d, dp = NCPolynomial.variable("d"), NCPolynomial.variable("d'")
    one, zero = NCPolynomial.constant(1), NCPolynomial()
    return _pick(k, color, lambda n: _two_colored(n, d, dp, one, zero, lambda x, y: x * y))


def qnum_in_ring(ring: FusionRing, Pi: RingElement, k: int, color: str = "d") -> RingElement:
    """Specialization ``d -> [Pi]``, ``d' -> [dual Pi]``, computed by the recursion directly in [C]"""
    Pi = np.asarray(Pi, dtype=object)
    return _pick(k, color, lambda n: _two_colored(n, Pi, dual(ring, Pi), ring.one(), ring.zero(), lambda x, y: multiply(ring, x, y)))


def qnum_sequence(ring: FusionRing, Pi: RingElement, K: int) -> Tuple[list, list]:
    """``[k]_d`` and ``[k]_{d'}`` for ``k = 0..K`` in one pass"""
    Pi = np.asarray(Pi, dtype=object)
    Pi_dual = dual(ring, Pi)
    a_seq, b_seq = [ring.zero(), ring.one()], [ring.zero(), ring.one()]
    for k in range(1, K):
        a_seq.append(multiply(ring, Pi, b_seq[k]) - a_seq[k - 1])
        b_seq.append(multiply(ring, Pi_dual, a_seq[k]) - b_seq[k - 1])
    return a_seq[: K + 1], b_seq[: K + 1]


def qnum_on_module(M: ModuleCategory, Pi: Label, k: int, color: str = "d") -> np.ndarray:
    """The quantum number as an endomorphism of [M]: ``d`` acts by ``act(Pi)``, ``d'`` by its transpose"""
    A = label_matrix(M, Pi)
    eye = np.eye(M.msize, dtype=object)
    zero = np.zeros((M.msize, M.msize), dtype=object)
    return _pick(k, color, lambda n: _two_colored(n, A, A.T, eye, zero, lambda x, y: x @ y))
