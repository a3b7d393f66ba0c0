"""SAT solving as a product of probing selections.

The pure solver chains one boolean probe per variable; each probe asks the
continuation "would True work here?" and the product wires the probes so the
question is answered relative to the whole assignment.  The instrumented
variant additionally captures its continuation, logging every trial value
and every time the continuation is genuinely called with a full assignment.
"""
from __future__ import annotations

from selcc import BooleanFormula, format_assignment, sat_callcc, sat_oracle, sat_product


def solve(title: str, formula: BooleanFormula) -> None:
    print(f"== {title} ==")
    chosen = sat_product(formula)
    witness = sat_oracle(formula)
    print(f"  chosen assignment: {format_assignment(chosen)}")
    print(f"  satisfies formula: {formula.evaluate(chosen)}")
    print(f"  oracle witness:    {format_assignment(witness) if witness else 'none'}")
    print()


def main() -> None:
    conjunction = BooleanFormula(3, lambda b: b[0] and not b[1] and b[2])
    solve("b0 and not b1 and b2", conjunction)
    solve("exactly one of three", BooleanFormula(3, lambda b: sum(b) == 1))
    solve("unsatisfiable", BooleanFormula(2, lambda _: False))

    print("== instrumented run: b0 and not b1 and b2 ==")
    log, bits = sat_callcc(conjunction)
    for line in log:
        print(f"  {line}")
    print(f"  final: {format_assignment(bits)}")
    print()
    print(
        "Note: the all-False lines are dummy continuation calls; the"
        " genuine calls sweep TTT, TTF, TFT, ... before settling."
    )


if __name__ == "__main__":
    main()
