"""Monomial orders on exponent vectors.

Every order exposes key(exp) -> tuple; larger key means larger monomial.
Keys compare lexicographically as Python tuples, so sorted(..., key=...)
does the right thing.  All orders here are multiplicative well-orders.
"""


class GrevlexOrder:
    """Weighted degree-reverse-lexicographic order."""

    kind = "grevlex"

    def __init__(self, weights):
        if any(w <= 0 for w in weights):
            raise ValueError("all weights must be positive")
        self.weights = tuple(weights)

    def key(self, exp):
        w = self.weights
        deg = 0
        for i, e in enumerate(exp):
            deg += e * w[i]
        # ties broken by the last variable with differing exponent, smaller wins
        return (deg,) + tuple(-e for e in reversed(exp))

    def __eq__(self, other):
        return isinstance(other, GrevlexOrder) and other.weights == self.weights

    def __hash__(self):
        return hash(("grevlex", self.weights))


class LexOrder:
    """Pure lexicographic order."""

    kind = "lex"

    def __init__(self, weights):
        self.weights = tuple(weights)

    def key(self, exp):
        return tuple(exp)

    def __eq__(self, other):
        return isinstance(other, LexOrder) and other.weights == self.weights

    def __hash__(self):
        return hash(("lex", self.weights))


class BlockOrder:
    """Elimination order: the block of variables in `block` dominates.

    Product of two weighted grevlex orders; any monomial involving a block
    variable is larger than any monomial free of them, so a Groebner basis
    under this order computes elimination ideals.
    """

    kind = "block"

    def __init__(self, weights, block):
        if any(w <= 0 for w in weights):
            raise ValueError("all weights must be positive")
        self.weights = tuple(weights)
        self.block = tuple(sorted(block))
        blockset = set(self.block)
        self.rest = tuple(i for i in range(len(weights)) if i not in blockset)

    def key(self, exp):
        w = self.weights
        bdeg = 0
        for i in self.block:
            bdeg += exp[i] * w[i]
        rdeg = 0
        for i in self.rest:
            rdeg += exp[i] * w[i]
        bkey = tuple(-exp[i] for i in reversed(self.block))
        rkey = tuple(-exp[i] for i in reversed(self.rest))
        return (bdeg,) + bkey + (rdeg,) + rkey

    def __eq__(self, other):
        return (isinstance(other, BlockOrder) and other.weights == self.weights
                and other.block == self.block)

    def __hash__(self):
        return hash(("block", self.weights, self.block))
