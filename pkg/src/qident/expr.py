"""Expression trees over series-valued primitives, and their evaluation.

Each node evaluates to a :class:`~qident.series.PuiseuxSeries` at a
requested guarantee order.  Evaluation propagates per-node targets top
down: multiplicative nodes pad their children by the co-factor's
structural leading exponent (`hint`), divisions and roots add the extra
amount their truncation rules consume.  Hints are exact unless a
subtraction cancels a leading term inside a denominator or root, which
no built-in identity does; :func:`evaluate_to_order` re-runs with a
larger target (at most 3 retries) if a result still falls short.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import blocks
from . import lambert as lam
from .field import ONE, AlgebraicNumber
from .series import InsufficientPrecisionError, PuiseuxSeries

_FR = Fraction


def _fr(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Node:
    """Base of all identity-expression nodes."""

    __slots__ = ()

    def evaluate(self, order) -> PuiseuxSeries:
        raise NotImplementedError

    def hint(self) -> Fraction:
        """Structural estimate of the leading exponent."""
        raise NotImplementedError


# -- leaves ----------------------------------------------------------------


@dataclass(frozen=True)
class QPow(Node):
    exponent: Fraction

    def evaluate(self, order):
        order = _fr(order)
        return PuiseuxSeries.monomial(ONE, self.exponent, max(order, self.exponent + 1))

    def hint(self):
        return self.exponent


@dataclass(frozen=True)
class Const(Node):
    value: AlgebraicNumber

    def evaluate(self, order):
        return PuiseuxSeries.monomial(self.value, 0, max(_fr(order), _FR(1)))

    def hint(self):
        return _FR(0)


@dataclass(frozen=True)
class Eta(Node):
    multiplier: Fraction

    def evaluate(self, order):
        return blocks.eta(self.multiplier, order)

    def hint(self):
        return self.multiplier / 24


@dataclass(frozen=True)
class Theta(Node):
    """f(sign1 q^a, sign2 q^b); product form unless `use_sum`."""

    spec: blocks.ThetaSpec
    use_sum: bool = False

    def evaluate(self, order):
        fn = blocks.theta_sum if self.use_sum else blocks.theta_product
        return fn(self.spec, order)

    def hint(self):
        return _FR(0)


@dataclass(frozen=True)
class Poch(Node):
    spec: blocks.PochSpec

    def evaluate(self, order):
        return blocks.pochhammer(self.spec, order)

    def hint(self):
        return _FR(0)


@dataclass(frozen=True)
class Phi(Node):
    r: Fraction

    def evaluate(self, order):
        return blocks.phi(self.r, order)

    def hint(self):
        return _FR(0)


@dataclass(frozen=True)
class Psi(Node):
    r: Fraction

    def evaluate(self, order):
        return blocks.psi(self.r, order)

    def hint(self):
        return _FR(0)


@dataclass(frozen=True)
class CFracH(Node):
    """Gollnitz-Gordon fraction product side h(q^r); leading q^{r/2}."""

    r: Fraction

    def evaluate(self, order):
        return blocks.h_series(order, self.r)

    def hint(self):
        return self.r / 2


@dataclass(frozen=True)
class CFracI(Node):
    """Order-four fraction product side i(q^r); unit leading term."""

    r: Fraction

    def evaluate(self, order):
        return blocks.i_series(order, self.r)

    def hint(self):
        return _FR(0)


@dataclass(frozen=True)
class Gamma(Node):
    k: int
    r: Fraction

    def evaluate(self, order):
        return blocks.gamma_k(self.k, order, self.r)

    def hint(self):
        return _FR(0)


@dataclass(frozen=True)
class Theta1N(Node):
    k: int

    def evaluate(self, order):
        return blocks.theta1_normalized(self.k, order)

    def hint(self):
        return _FR(0)


@dataclass(frozen=True)
class BTable(Node):
    """The degree-31 polynomial sum_{k=0}^{31} B_i(k) q^k (four periods)."""

    i: int

    def evaluate(self, order):
        order = _fr(order)
        s = blocks.b_table_series(self.i, 32)
        # a polynomial is exact at every order
        return PuiseuxSeries(dict(s.terms), max(order, _FR(32)))

    def hint(self):
        return _FR(0)


@dataclass(frozen=True)
class Lambert(Node):
    spec: lam.LambertSpec

    def evaluate(self, order):
        return lam.lambert_sum(self.spec, order)

    def hint(self):
        return _FR(0)


@dataclass(frozen=True)
class Psi11Lhs(Node):
    spec: lam.BilateralSpec

    def evaluate(self, order):
        return lam.bilateral_1psi1_lhs(self.spec, order)

    def hint(self):
        return _FR(0)


@dataclass(frozen=True)
class Psi11Rhs(Node):
    spec: lam.BilateralSpec

    def evaluate(self, order):
        return lam.bilateral_1psi1_rhs(self.spec, order)

    def hint(self):
        return _FR(0)


# -- composites ----------------------------------------------------------


@dataclass(frozen=True)
class Add(Node):
    left: Node
    right: Node

    def evaluate(self, order):
        return self.left.evaluate(order) + self.right.evaluate(order)

    def hint(self):
        return min(self.left.hint(), self.right.hint())


@dataclass(frozen=True)
class Sub(Node):
    left: Node
    right: Node

    def evaluate(self, order):
        return self.left.evaluate(order) - self.right.evaluate(order)

    def hint(self):
        return min(self.left.hint(), self.right.hint())


@dataclass(frozen=True)
class Mul(Node):
    left: Node
    right: Node

    def evaluate(self, order):
        order = _fr(order)
        lh, rh = self.left.hint(), self.right.hint()
        return self.left.evaluate(order - rh) * self.right.evaluate(order - lh)

    def hint(self):
        return self.left.hint() + self.right.hint()


@dataclass(frozen=True)
class Div(Node):
    left: Node
    right: Node

    def evaluate(self, order):
        # num * inv(den): inversion costs 2*m_den of truncation, the
        # product another m_num / (-m_den)
        order = _fr(order)
        lh, rh = self.left.hint(), self.right.hint()
        num = self.left.evaluate(order + rh)
        den = self.right.evaluate(order - lh + 2 * rh)
        return num * den.inverse()

    def hint(self):
        return self.left.hint() - self.right.hint()


@dataclass(frozen=True)
class Pow(Node):
    base: Node
    n: int

    def evaluate(self, order):
        order = _fr(order)
        bh = self.base.hint()
        if self.n == 0:
            return PuiseuxSeries.one(max(order, _FR(1)))
        if self.n > 0:
            target = order - (self.n - 1) * bh
        else:
            target = order + (-self.n + 1) * bh
        return self.base.evaluate(target) ** self.n

    def hint(self):
        return self.n * self.base.hint()


@dataclass(frozen=True)
class Root(Node):
    base: Node
    n: int

    def evaluate(self, order):
        order = _fr(order)
        bh = self.base.hint()
        return self.base.evaluate(order + bh - bh / self.n).nth_root(self.n)

    def hint(self):
        return self.base.hint() / self.n


@dataclass(frozen=True)
class Subst(Node):
    """q -> q^r applied to a whole subexpression."""

    base: Node
    r: Fraction

    def evaluate(self, order):
        return self.base.evaluate(_fr(order) / self.r).substitute(self.r)

    def hint(self):
        return self.base.hint() * self.r


def evaluate_to_order(node: Node, order, max_retries: int = 3) -> PuiseuxSeries:
    """Evaluate with automatic padding until trunc >= order.

    The first pass usually lands exactly; a hint thrown off by leading
    cancellation shows up as a short result and triggers a padded retry.
    """
    order = _fr(order)
    target = order
    for _ in range(max_retries + 1):
        s = node.evaluate(target)
        if s.trunc >= order:
            return s
        target = target + 2 * (order - s.trunc)
    raise InsufficientPrecisionError(
        f"could not reach order {order} after {max_retries} padded retries "
        f"(best truncation {s.trunc})"
    )
