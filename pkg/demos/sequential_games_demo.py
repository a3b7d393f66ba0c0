"""Backward induction as a product of argmax players.

Each stage contributes one selection: the stage's controller maximises their
own coordinate of whatever utility vector the continuation predicts.  The
product of those selections, run against the payoff function, is exactly the
backward-induction play; an explicit game-tree recursion cross-checks it.
"""
from __future__ import annotations

from selcc import (
    SequentialGameSpec,
    Stage,
    backward_induction,
    backward_induction_oracle,
)


def solve(title: str, game: SequentialGameSpec) -> None:
    play, outcome = backward_induction(game)
    check, _ = backward_induction_oracle(game)
    print(f"== {title} ==")
    print(f"  play:    {' '.join(play)}")
    print(f"  outcome: {outcome}")
    print(f"  oracle agrees: {check == play}")
    print()


def main() -> None:
    table = {
        ("L", "l"): (2, 1),
        ("L", "r"): (0, 0),
        ("R", "l"): (1, 2),
        ("R", "r"): (3, 0),
    }
    solve(
        "two stages, two players",
        SequentialGameSpec(
            players=("P1", "P2"),
            stages=(Stage(0, ("L", "R")), Stage(1, ("l", "r"))),
            payoff=table.__getitem__,
        ),
    )

    # A three-stage game: P1 moves first and last, P2 in between.  P1's best
    # first move only pays off given how both later stages respond to it.
    def alternating_payoff(play: tuple[str, ...]) -> tuple[int, int]:
        a, b, c = play
        p1 = (a == "up") + 2 * (c == "left") - (b == "block")
        p2 = (b == "block") + (a == "down")
        return (p1, p2)

    solve(
        "three alternating stages",
        SequentialGameSpec(
            players=("P1", "P2"),
            stages=(
                Stage(0, ("up", "down")),
                Stage(1, ("pass", "block")),
                Stage(0, ("left", "right")),
            ),
            payoff=alternating_payoff,
        ),
    )


if __name__ == "__main__":
    main()
