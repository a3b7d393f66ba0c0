"""A tour of call/cc in both computation flavours.

The two dialogue programs log their progress through a handler and its
captured continuation.  In the quantifier flavour, invoking the captured
continuation abandons the rest of the handler; in the selection flavour the
handler gets the continuation's answer back and keeps going, producing a
coroutine-like back-and-forth.
"""
from __future__ import annotations

from selcc import (
    bar_computation,
    demo_bar,
    demo_foo,
    foo_computation,
    run_quantifier,
    run_selection,
    trace_effect,
)


def show(title: str, log: list[str], result: int) -> None:
    print(f"== {title} ==")
    for line in log:
        print(f"  {line}")
    print(f"  result: {result}")
    print()


def main() -> None:
    log, result = demo_foo()
    show("quantifier flavour: the jump never comes back", log, result)

    log, result = demo_bar()
    show("selection flavour: the handler resumes after the jump", log, result)

    # The same selection program run against a doubling outer continuation.
    eff = trace_effect()
    outcome = run_selection(bar_computation(), lambda n: eff.unit(n * 2))
    show("selection flavour, doubling continuation", list(outcome.log), outcome.value)

    outcome = run_quantifier(foo_computation(), lambda n: eff.unit(n * 2))
    show("quantifier flavour, doubling continuation", list(outcome.log), outcome.value)


if __name__ == "__main__":
    main()
