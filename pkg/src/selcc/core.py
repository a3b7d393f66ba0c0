"""Selection and quantifier computations: two monads over a base effect.

A *quantifier computation* over ``X`` with result type ``R`` is a function
``(X -> Eff(R)) -> Eff(R)``: given a continuation for the rest of the program
it produces the final result (the continuation-passing-style monad).

A *selection computation* has type ``(X -> Eff(R)) -> Eff(X)``: given the same
continuation it produces the *intermediate* value at ``X`` instead.  Binding
selection computations re-runs continuations, which is what makes products of
selections search, and is the source of every interesting behaviour in
:mod:`selcc.search` and :mod:`selcc.games`.

Both computation types are generic over the pluggable effects from
:mod:`selcc.effects`; the type parameters are static metadata only.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Generic, Iterable, TypeVar

from .effects import EffectInstance, identity_effect

X = TypeVar("X")
Y = TypeVar("Y")
R = TypeVar("R")

Continuation = Callable[[Any], Any]


@dataclass(frozen=True, slots=True)
class SelectionComputation(Generic[X, R]):
    """A computation that picks an intermediate value once told how it is used.

    ``chooser(k)`` returns ``Eff(X)``: the chosen value(s) at ``X``, where
    ``k : X -> Eff(R)`` scores/continues each candidate.  Immutable; running is
    a pure function of the continuation.
    """

    chooser: Callable[[Continuation], Any]
    effect: EffectInstance


@dataclass(frozen=True, slots=True)
class QuantifierComputation(Generic[X, R]):
    """A computation in continuation-passing style: ``runner(k)`` is ``Eff(R)``."""

    runner: Callable[[Continuation], Any]
    effect: EffectInstance


def sel_unit(x: X, eff: EffectInstance | None = None) -> SelectionComputation[X, Any]:
    """The selection that ignores its continuation and yields ``x``."""
    eff = eff if eff is not None else identity_effect()
    unit = eff.unit

    def chooser(k: Continuation) -> Any:
        return unit(x)

    return SelectionComputation(chooser, eff)


def sel_bind(
    eps: SelectionComputation[X, R],
    f: Callable[[X], SelectionComputation[Y, R]],
) -> SelectionComputation[Y, R]:
    """Sequence a selection into a dependent family of selections.

    Given the final continuation ``k`` at ``Y``, the continuation handed to
    ``eps`` scores a candidate ``x`` by running ``f(x)`` against ``k`` and
    feeding the resulting intermediate value back into ``k``.  The chosen ``x``
    is then run through ``f`` once more to produce the intermediate value at
    ``Y``.  That second pass is deliberate: it is what re-executes downstream
    effects and gives products of selections their search behaviour.
    """
    eff = eps.effect
    bind_m = eff.bind
    eps_chooser = eps.chooser

    def chooser(k: Continuation) -> Any:
        def extended(x: Any) -> Any:
            return bind_m(f(x).chooser(k), k)

        def chosen(x: Any) -> Any:
            return f(x).chooser(k)

        return bind_m(eps_chooser(extended), chosen)

    return SelectionComputation(chooser, eff)


def quant_unit(x: X, eff: EffectInstance | None = None) -> QuantifierComputation[X, Any]:
    """The quantifier that immediately applies the continuation to ``x``."""
    eff = eff if eff is not None else identity_effect()

    def runner(k: Continuation) -> Any:
        return k(x)

    return QuantifierComputation(runner, eff)


def quant_bind(
    phi: QuantifierComputation[X, R],
    f: Callable[[X], QuantifierComputation[Y, R]],
) -> QuantifierComputation[Y, R]:
    """Sequence a quantifier into a dependent family: run ``phi`` with the
    continuation that forwards each candidate through ``f`` and on to ``k``."""
    phi_runner = phi.runner

    def runner(k: Continuation) -> Any:
        def extended(x: Any) -> Any:
            return f(x).runner(k)

        return phi_runner(extended)

    return QuantifierComputation(runner, phi.effect)


def quant_lift(m: Any, eff: EffectInstance) -> QuantifierComputation[Any, Any]:
    """Embed a bare effect value as a quantifier: perform it, then continue."""

    def runner(k: Continuation) -> Any:
        return eff.bind(m, k)

    return QuantifierComputation(runner, eff)


def sel_lift(m: Any, eff: EffectInstance) -> SelectionComputation[Any, Any]:
    """Embed a bare effect value as a selection: it ignores the continuation.

    The effect is performed (once) when an enclosing bind sequences it, which
    keeps lifted actions from being re-run by downstream re-evaluation.
    """

    def chooser(k: Continuation) -> Any:
        return m

    return SelectionComputation(chooser, eff)


def to_quantifier(eps: SelectionComputation[X, R]) -> QuantifierComputation[X, R]:
    """The morphism from selections to quantifiers.

    ``runner(k)`` asks ``eps`` to choose under ``k`` and then applies ``k`` to
    the choice: the final result of using the selected value.  This preserves
    unit and bind (see :mod:`selcc.laws`).
    """
    bind_m = eps.effect.bind
    eps_chooser = eps.chooser

    def runner(k: Continuation) -> Any:
        return bind_m(eps_chooser(k), k)

    return QuantifierComputation(runner, eps.effect)


def invoke_coercion(phi: QuantifierComputation[R, R]) -> SelectionComputation[R, R]:
    """Reinterpret a quantifier whose value and result types coincide.

    When ``X = R`` both computation shapes are ``(R -> Eff(R)) -> Eff(R)``, so
    the underlying function is reused unchanged: the final result is treated
    as the intermediate one.
    """
    return SelectionComputation(phi.runner, phi.effect)


def sel_product(
    eps: SelectionComputation[X, R],
    delta: SelectionComputation[Y, R],
) -> SelectionComputation[tuple[X, Y], R]:
    """The pairing of two selections, derived from bind.

    Equivalent to running ``eps`` first and ``delta`` inside it, collecting
    both choices into a pair.  Deriving it from :func:`sel_bind` keeps it
    coherent with the monad structure by construction.
    """
    return sel_bind(eps, lambda x: sel_bind(delta, lambda y: sel_unit((x, y), eps.effect)))


def sel_sequence(
    computations: Iterable[SelectionComputation[X, R]],
    eff: EffectInstance | None = None,
) -> SelectionComputation[tuple[X, ...], R]:
    """The iterated product: a selection over tuples, one slot per input.

    Folded to the right, so later computations are inner (they see earlier
    choices through the continuation).  The empty sequence yields the unit at
    the empty tuple; ``eff`` is only consulted in that case (otherwise the
    computations' shared effect is used).
    """
    comps = list(computations)
    if not comps:
        return sel_unit((), eff if eff is not None else identity_effect())
    effect = comps[0].effect

    def attach(
        comp: SelectionComputation[X, R],
        rest: SelectionComputation[tuple[X, ...], R],
    ) -> SelectionComputation[tuple[X, ...], R]:
        return sel_bind(
            comp,
            lambda x: sel_bind(rest, lambda xs: sel_unit((x,) + xs, effect)),
        )

    result: SelectionComputation[tuple[X, ...], R] = sel_unit((), effect)
    for comp in reversed(comps):
        result = attach(comp, result)
    return result


def run_selection(eps: SelectionComputation[X, R], k: Continuation) -> Any:
    """Apply a selection's chooser to a continuation: the chosen ``Eff(X)``."""
    return eps.chooser(k)


def run_quantifier(phi: QuantifierComputation[X, R], k: Continuation) -> Any:
    """Apply a quantifier's runner to a continuation: the final ``Eff(R)``."""
    return phi.runner(k)
