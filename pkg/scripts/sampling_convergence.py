"""Shot-count convergence of the sampled |<i|rho(b)|j>|^2 estimates.

Runs the braiding computer at increasing shot counts and prints the worst
absolute estimation error against the exact squared moduli, next to the
4-standard-error binomial envelope, to show the expected 1/sqrt(shots) decay.
"""

import argparse
import math

from braidket import BraidWord, estimate_matrix_moduli, parse_braid, unitary_generators


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--theta", type=float, default=math.pi / 10)
    parser.add_argument("--word", type=str, default="1 2 -1 2")
    parser.add_argument("--seed", type=int, default=2024)
    parser.add_argument(
        "--shots",
        type=int,
        nargs="+",
        default=[100, 1000, 10000, 100000, 1000000],
    )
    args = parser.parse_args()

    setup = unitary_generators(args.theta)
    word = parse_braid(args.word, 3)
    print(f"word '{word}', theta = {args.theta}, seed = {args.seed}")
    print(f"{'shots':>9}  {'worst |est - exact|':>20}  {'4*max SE':>12}")
    for shots in args.shots:
        pairs = estimate_matrix_moduli(word, setup, shots, args.seed)
        worst = 0.0
        envelope = 0.0
        for row in pairs:
            for estimate, exact in row:
                worst = max(worst, abs(estimate - exact))
                envelope = max(
                    envelope, 4 * math.sqrt(max(exact * (1 - exact), 0.0) / shots)
                )
        print(f"{shots:>9}  {worst:>20.6f}  {envelope:>12.6f}")


if __name__ == "__main__":
    main()
