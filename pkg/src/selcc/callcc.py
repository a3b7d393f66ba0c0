"""Call-with-current-continuation for both computation monads.

Both operators are the *same* untyped term, :func:`_callcc_term`: the handler
receives the current continuation reified as a computation that discards its
own continuation and short-circuits to the outer one.  What differs is only
the bind operator the result is later composed with — under the quantifier
monad control never returns to the handler once the continuation is invoked,
while under the selection monad the handler resumes and a coroutine-like
dialogue emerges.  The two demo programs below make that difference visible
through the trace effect.
"""
from __future__ import annotations

from typing import Any, Callable

from .core import (
    QuantifierComputation,
    SelectionComputation,
    quant_bind,
    quant_lift,
    quant_unit,
    run_quantifier,
    run_selection,
    sel_bind,
    sel_lift,
    sel_unit,
)
from .effects import EffectInstance, identity_effect, tell, trace_effect


def _callcc_term(body: Callable[[Callable[[Any], Any]], Callable[[Any], Any]]) -> Callable[[Any], Any]:
    """The untyped call/cc: ``λk1. body(λx. λk2. k1(x))(k1)``.

    ``body`` maps the reified continuation (as a raw two-level function) to a
    raw computation function.  Both public wrappers delegate here, so the term
    is shared by construction; only the surrounding computation types differ.
    """

    def run(k1: Callable[[Any], Any]) -> Any:
        def reified(x: Any) -> Callable[[Any], Any]:
            def computation(k2: Callable[[Any], Any]) -> Any:
                return k1(x)

            return computation

        return body(reified)(k1)

    return run


def callcc_quantifier(
    handler: Callable[[Callable[[Any], QuantifierComputation]], QuantifierComputation],
    eff: EffectInstance | None = None,
) -> QuantifierComputation:
    """call/cc for quantifier computations.

    ``handler`` receives the current continuation as a function from values to
    quantifier computations; invoking it abandons the rest of the handler.
    ``eff`` must match the effect the handler's computations run over
    (identity by default).
    """
    effect = eff if eff is not None else identity_effect()

    def body(reified: Callable[[Any], Callable[[Any], Any]]) -> Callable[[Any], Any]:
        def lift(x: Any) -> QuantifierComputation:
            return QuantifierComputation(reified(x), effect)

        return handler(lift).runner

    return QuantifierComputation(_callcc_term(body), effect)


def callcc_selection(
    handler: Callable[[Callable[[Any], SelectionComputation]], SelectionComputation],
    eff: EffectInstance | None = None,
) -> SelectionComputation:
    """call/cc for selection computations: the same term at a different type.

    The reified continuation's intermediate type must equal the final result
    type, since invoking it hands back the *final* answer as an intermediate
    value.  Unlike the quantifier flavour, handler code after an invocation
    runs again once the chosen value flows back through the enclosing binds.
    """
    effect = eff if eff is not None else identity_effect()

    def body(reified: Callable[[Any], Callable[[Any], Any]]) -> Callable[[Any], Any]:
        def lift(x: Any) -> SelectionComputation:
            return SelectionComputation(reified(x), effect)

        return handler(lift).chooser

    return SelectionComputation(_callcc_term(body), effect)


def foo_computation() -> QuantifierComputation:
    """The quantifier-monad dialogue program over the trace effect.

    Logs "In foo", enters a handler that logs and invokes the current
    continuation with 0, then logs "In continuation" and returns the value
    plus one.  The handler line after the invocation is unreachable.
    """
    eff = trace_effect()

    def handler(kk: Callable[[int], QuantifierComputation]) -> QuantifierComputation:
        return quant_bind(
            quant_lift(tell("In handler"), eff),
            lambda _: quant_bind(
                kk(0),
                lambda m: quant_bind(
                    quant_lift(tell("Still in handler"), eff),
                    lambda _: quant_unit(m + 1, eff),
                ),
            ),
        )

    return quant_bind(
        quant_lift(tell("In foo"), eff),
        lambda _: quant_bind(
            callcc_quantifier(handler, eff),
            lambda n: quant_bind(
                quant_lift(tell("In continuation"), eff),
                lambda _: quant_unit(n + 1, eff),
            ),
        ),
    )


def bar_computation() -> SelectionComputation:
    """The same program as :func:`foo_computation` in the selection monad.

    Here invoking the current continuation does *not* abandon the handler:
    after the continuation runs, control comes back and "Still in handler"
    is logged, then the continuation runs once more with the updated value.
    """
    eff = trace_effect()

    def handler(kk: Callable[[int], SelectionComputation]) -> SelectionComputation:
        return sel_bind(
            sel_lift(tell("In handler"), eff),
            lambda _: sel_bind(
                kk(0),
                lambda m: sel_bind(
                    sel_lift(tell("Still in handler"), eff),
                    lambda _: sel_unit(m + 1, eff),
                ),
            ),
        )

    return sel_bind(
        sel_lift(tell("In bar"), eff),
        lambda _: sel_bind(
            callcc_selection(handler, eff),
            lambda n: sel_bind(
                sel_lift(tell("In continuation"), eff),
                lambda _: sel_unit(n + 1, eff),
            ),
        ),
    )


def demo_foo() -> tuple[list[str], int]:
    """Run the quantifier dialogue with the unit outer continuation.

    Returns the accumulated log lines and the final integer result.
    """
    eff = trace_effect()
    outcome = run_quantifier(foo_computation(), eff.unit)
    return list(outcome.log), outcome.value


def demo_bar() -> tuple[list[str], int]:
    """Run the selection dialogue with the unit outer continuation.

    Returns the accumulated log lines and the chosen integer result.
    """
    eff = trace_effect()
    outcome = run_selection(bar_computation(), eff.unit)
    return list(outcome.log), outcome.value
